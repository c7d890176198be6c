//! Text formats for amplitude vectors.
//!
//! Three forms are accepted by [`parse_amplitudes`]:
//! - one `re,im` pair per line (blank lines and `#` comments ignored);
//! - a JSON array of `[re, im]` pairs;
//! - inline comma-separated `re:im` tokens, e.g. `0.7071068:0,0,0,0.7071068`.
//!
//! A bare number in the inline form is read as a real amplitude, and a
//! single line without `:` is read in the inline form.

use crate::error::{Error, Result};
use crate::hypercomplex::Complex;

pub fn parse_amplitudes(input: &str) -> Result<Vec<Complex>> {
    let body: Vec<&str> = input
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let joined = body.join("\n");
    let trimmed = joined.as_str();
    if trimmed.is_empty() {
        return Err(Error::Parse("empty state".into()));
    }
    let v = if trimmed.starts_with('[') {
        parse_json(trimmed)?
    } else if trimmed.contains(':') || !trimmed.contains('\n') {
        parse_inline(trimmed)?
    } else {
        parse_lines(trimmed)?
    };
    if v.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::NonFinite);
    }
    Ok(v)
}

fn parse_json(s: &str) -> Result<Vec<Complex>> {
    let pairs: Vec<[f64; 2]> =
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("JSON state: {e}")))?;
    Ok(pairs
        .into_iter()
        .map(|[re, im]| Complex::new(re, im))
        .collect())
}

fn parse_number(tok: &str) -> Result<f64> {
    tok.trim()
        .parse::<f64>()
        .map_err(|_| Error::Parse(format!("invalid number '{}'", tok.trim())))
}

fn parse_inline(s: &str) -> Result<Vec<Complex>> {
    s.split(',')
        .map(|tok| match tok.split_once(':') {
            Some((re, im)) => Ok(Complex::new(parse_number(re)?, parse_number(im)?)),
            None => Ok(Complex::new(parse_number(tok)?, 0.0)),
        })
        .collect()
}

fn parse_lines(s: &str) -> Result<Vec<Complex>> {
    s.lines()
        .map(|l| match l.split_once(',') {
            Some((re, im)) => Ok(Complex::new(parse_number(re)?, parse_number(im)?)),
            None => Err(Error::Parse(format!("expected 're,im', found '{l}'"))),
        })
        .collect()
}

/// One `re,im` line per amplitude, full round-trip precision.
pub fn format_lines(amplitudes: &[Complex]) -> String {
    amplitudes
        .iter()
        .map(|z| format!("{:?},{:?}\n", z.re, z.im))
        .collect()
}

pub fn format_json(amplitudes: &[Complex]) -> String {
    let pairs: Vec<[f64; 2]> = amplitudes.iter().map(|z| [z.re, z.im]).collect();
    serde_json::to_string(&pairs).expect("finite floats serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    #[test]
    #[allow(clippy::approx_constant)]
    fn inline_form() {
        let v = parse_amplitudes("0.7071068:0,0,0,0,0,0,0,0.7071068").unwrap();
        assert_eq!(v.len(), 8);
        assert_eq!(v[0], c(0.7071068, 0.0));
        assert_eq!(v[7], c(0.7071068, 0.0));
        assert_eq!(
            parse_amplitudes("0:1, 1:-0.5").unwrap(),
            vec![c(0.0, 1.0), c(1.0, -0.5)]
        );
    }

    #[test]
    fn line_form() {
        let v = parse_amplitudes("# ket: test\n0.6,0\n\n0,0.8\n").unwrap();
        assert_eq!(v, vec![c(0.6, 0.0), c(0.0, 0.8)]);
    }

    #[test]
    fn json_form() {
        let v = parse_amplitudes("[[0.6, 0], [0, 0.8]]").unwrap();
        assert_eq!(v, vec![c(0.6, 0.0), c(0.0, 0.8)]);
    }

    #[test]
    fn round_trips() {
        let v = vec![
            c(0.1 + 0.2, -1e-17),
            c(std::f64::consts::FRAC_1_SQRT_2, 3.0),
        ];
        assert_eq!(parse_amplitudes(&format_lines(&v)).unwrap(), v);
        assert_eq!(parse_amplitudes(&format_json(&v)).unwrap(), v);
    }

    #[test]
    fn malformed() {
        assert!(parse_amplitudes("").is_err());
        assert!(parse_amplitudes("1:x").is_err());
        assert!(parse_amplitudes("[[1]]").is_err());
        assert!(parse_amplitudes("1,2\n3").is_err());
        assert_eq!(
            parse_amplitudes("1,0").unwrap(),
            vec![c(1.0, 0.0), c(0.0, 0.0)]
        );
        assert_eq!(parse_amplitudes("NaN:0,1:0"), Err(Error::NonFinite));
    }
}
