//! Command-line front end. [`run`] parses arguments and returns the text
//! destined for stdout and stderr together with the exit code, so the binary
//! stays a thin wrapper.
//!
//! Exit codes: 0 success, 1 input error, 2 forced verification failure.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::dynamics::{default_grid, hadamard, parse_grid, theta_family, trajectory, Hamiltonian2};
use crate::entanglement::ConcurrenceReport;
use crate::error::{Error, Result};
use crate::hypercomplex::{octonion_table, quaternion_table, BasisProduct, Complex};
use crate::maps::{stereo_c, stereo_o, stereo_q, ExtendedPoint};
use crate::states::io::parse_amplitudes;
use crate::states::{
    one, AnyState, NamedState, OctobitState, OneQubitState, Partition, QuaterbitState,
};
use crate::verify::{self, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_FORCED: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "hyperqubit",
    version,
    about = "Hypercomplex geometry of qubit states"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algebra {
    Quaternion,
    Octonion,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Diagrams,
    Claims,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Diagrams => Suite::Diagrams,
            SuiteArg::Claims => Suite::Claims,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Debug, Clone, clap::Args)]
pub struct StateArgs {
    /// Inline amplitudes (`re:im,re:im,...`) or `@path` to a state file.
    #[arg(long, conflicts_with = "named")]
    pub state: Option<String>,

    /// bell, ghz, w, plus, zero or one.
    #[arg(long)]
    pub named: Option<String>,

    /// Expected number of qubits; checked against the input.
    #[arg(long)]
    pub qubits: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Stereographic projection of a 1-, 2- or 3-qubit state.
    Project {
        #[command(flatten)]
        input: StateArgs,
        /// 1-23, 2-13, 3-12 or all (three qubits only).
        #[arg(long, default_value = "1-23")]
        partition: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Concurrence of a 2-qubit state or of 3-qubit bipartitions.
    Concurrence {
        #[command(flatten)]
        input: StateArgs,
        #[arg(long, default_value = "all")]
        partition: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// One-qubit trajectory under a time-independent Hamiltonian.
    Evolve {
        /// `hadamard` or four row-major entries `re:im,re:im,re:im,re:im`.
        #[arg(long, default_value = "hadamard")]
        hamiltonian: String,
        #[command(flatten)]
        input: StateArgs,
        /// start:stop:count, bounds may use pi.
        #[arg(long)]
        grid: Option<String>,
        /// Write one CSV per initial state θ = k/15, k = 3..15, into --out.
        #[arg(long)]
        family: bool,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the verification harness and print the JSON report.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Signed basis multiplication table.
    MulTable {
        #[arg(long, value_enum, default_value = "octonion")]
        algebra: Algebra,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            ..Outcome::default()
        }
    }

    fn input_error(e: impl std::fmt::Display) -> Self {
        Outcome {
            stderr: format!("error: {e}\n"),
            code: EXIT_INPUT,
            ..Outcome::default()
        }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    stderr: text,
                    code: EXIT_INPUT,
                    ..Outcome::default()
                }
            } else {
                Outcome::ok(text)
            };
        }
    };
    execute(cli.command)
}

pub fn execute(command: Command) -> Outcome {
    let result = match command {
        Command::Project {
            input,
            partition,
            format,
        } => cmd_project(&input, &partition, format).map(Outcome::ok),
        Command::Concurrence {
            input,
            partition,
            format,
        } => cmd_concurrence(&input, &partition, format).map(Outcome::ok),
        Command::Evolve {
            hamiltonian,
            input,
            grid,
            family,
            format,
            out,
        } => cmd_evolve(
            &hamiltonian,
            &input,
            grid.as_deref(),
            family,
            format,
            out.as_deref(),
        ),
        Command::Verify {
            suite,
            seed,
            samples,
            out,
        } => cmd_verify(suite.into(), seed, samples, out.as_deref()),
        Command::MulTable { algebra, format } => Ok(Outcome::ok(cmd_multable(algebra, format))),
    };
    result.unwrap_or_else(Outcome::input_error)
}

fn read_state(input: &StateArgs) -> Result<AnyState> {
    let state = match (&input.state, &input.named) {
        (Some(_), Some(_)) => return Err(Error::Parse("use either --state or --named".into())),
        (None, None) => {
            return Err(Error::Parse(
                "a state is required (--state or --named)".into(),
            ))
        }
        (None, Some(name)) => name.parse::<NamedState>()?.state(),
        (Some(spec), None) => {
            let text = match spec.strip_prefix('@') {
                Some(path) => std::fs::read_to_string(path)
                    .map_err(|e| Error::Parse(format!("cannot read '{path}': {e}")))?,
                None => spec.clone(),
            };
            AnyState::from_amplitudes(&parse_amplitudes(&text)?)?
        }
    };
    if let Some(q) = input.qubits {
        if q != state.n_qubits() {
            return Err(Error::DimensionMismatch {
                expected: 1 << q,
                found: state.amplitudes().len(),
            });
        }
    }
    Ok(state)
}

fn partitions(spec: &str) -> Result<Vec<Partition>> {
    if spec.eq_ignore_ascii_case("all") {
        Ok(Partition::ALL.to_vec())
    } else {
        Ok(vec![spec.parse()?])
    }
}

fn pair(z: Complex) -> Value {
    json!([z.re + 0.0, z.im + 0.0])
}

fn projection_json<V: crate::hypercomplex::Coordinates>(
    value: &ExtendedPoint<V>,
    components: Value,
    denom: f64,
) -> Value {
    json!({ "value": value, "components": components, "denom": denom })
}

fn point_text<V: std::fmt::Display + crate::hypercomplex::Coordinates>(
    p: &ExtendedPoint<V>,
) -> String {
    match p {
        ExtendedPoint::Finite(v) => v.to_string(),
        ExtendedPoint::Infinity => "inf".into(),
    }
}

pub fn cmd_project(input: &StateArgs, partition: &str, format: Format) -> Result<String> {
    let state = read_state(input)?;
    let dim = 1 << state.n_qubits();
    let mut results: Vec<(Option<Partition>, Value, String)> = Vec::new();
    match state {
        AnyState::One(s) => {
            let v = stereo_c(&s);
            let [a0, a1] = *s.amplitudes();
            let num = a0 * a1.conj();
            let text = format!("value: {}\n", point_text(&v));
            results.push((
                None,
                projection_json(&v, json!({ "numerator": pair(num) }), a1.norm_sqr()),
                text,
            ));
        }
        AnyState::Two(s) => {
            let (v, c) = stereo_q(&QuaterbitState::quaternify(&s));
            let comps = json!({ "schmidt": pair(c.schmidt), "concurrence": pair(c.concurrence) });
            let text = format!(
                "value: {}\nschmidt: {}\nconcurrence: {}\ndenom: {}\n",
                point_text(&v),
                c.schmidt,
                c.concurrence,
                c.denom
            );
            results.push((None, projection_json(&v, comps, c.denom), text));
        }
        AnyState::Three(s) => {
            for p in partitions(partition)? {
                let (v, c) = stereo_o(&OctobitState::octonify(&s, p));
                let comps = json!({
                    "s0": pair(c.s0), "s1": pair(c.s1), "s2": pair(c.s2), "s3": pair(c.s3)
                });
                let text = format!(
                    "partition: {p}\nvalue: {}\ns0: {}\ns1: {}\ns2: {}\ns3: {}\ndenom: {}\n",
                    point_text(&v),
                    c.s0,
                    c.s1,
                    c.s2,
                    c.s3,
                    c.denom
                );
                results.push((Some(p), projection_json(&v, comps, c.denom), text));
            }
        }
    }
    Ok(match format {
        Format::Text => results
            .into_iter()
            .map(|r| r.2)
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Csv => projection_csv(&results, dim),
        Format::Json => {
            let out = if results.len() == 1 {
                results.remove(0).1
            } else {
                Value::Array(
                    results
                        .into_iter()
                        .map(|(p, mut v, _)| {
                            v["partition"] = json!(p.map(|p| p.label()));
                            v
                        })
                        .collect(),
                )
            };
            format!("{out}\n")
        }
    })
}

fn projection_csv(results: &[(Option<Partition>, Value, String)], dim: usize) -> String {
    let first = &results[0].1;
    let names: Vec<&String> = first["components"]
        .as_object()
        .map(|m| m.keys().collect())
        .unwrap_or_default();
    let mut header = vec!["partition".to_string(), "inf".into()];
    header.extend((0..dim).map(|i| format!("x{i}")));
    for n in &names {
        header.push(format!("{n}_re"));
        header.push(format!("{n}_im"));
    }
    header.push("denom".into());
    let mut out = header.join(",") + "\n";
    for (p, v, _) in results {
        let mut row = vec![p.map_or("", |p| p.label()).to_string()];
        match &v["value"] {
            Value::Array(xs) => {
                row.push("0".into());
                row.extend(
                    xs.iter()
                        .map(|x| format!("{:.16e}", x.as_f64().unwrap_or(f64::NAN))),
                );
            }
            _ => {
                row.push("1".into());
                row.extend((0..dim).map(|_| String::new()));
            }
        }
        for n in &names {
            for part in 0..2 {
                row.push(format!(
                    "{:.16e}",
                    v["components"][n.as_str()][part]
                        .as_f64()
                        .unwrap_or(f64::NAN)
                ));
            }
        }
        row.push(format!("{:.16e}", v["denom"].as_f64().unwrap_or(f64::NAN)));
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

pub fn cmd_concurrence(input: &StateArgs, partition: &str, format: Format) -> Result<String> {
    let reports = match read_state(input)? {
        AnyState::Two(s) => vec![ConcurrenceReport::two_qubit(&s)],
        AnyState::Three(s) => partitions(partition)?
            .into_iter()
            .map(|p| ConcurrenceReport::three_qubit(&s, p))
            .collect(),
        AnyState::One(_) => {
            return Err(Error::Parse(
                "concurrence needs a 2- or 3-qubit state".into(),
            ))
        }
    };
    let mut out = String::new();
    match format {
        Format::Text => {
            for r in &reports {
                writeln!(out, "{}\t{:.6}", r.partition, r.value).expect("writing to a String");
            }
        }
        Format::Csv => {
            out.push_str("partition,value\n");
            for r in &reports {
                writeln!(out, "{},{:.16e}", r.partition, r.value).expect("writing to a String");
            }
        }
        Format::Json => {
            out = serde_json::to_string(&reports).expect("reports serialize");
            out.push('\n');
        }
    }
    Ok(out)
}

fn parse_hamiltonian(spec: &str) -> Result<Hamiltonian2> {
    if spec.eq_ignore_ascii_case("hadamard") {
        return Ok(hadamard());
    }
    let v = parse_amplitudes(spec)?;
    let [a, b, c, d]: [Complex; 4] =
        v.as_slice()
            .try_into()
            .map_err(|_| Error::DimensionMismatch {
                expected: 4,
                found: v.len(),
            })?;
    Hamiltonian2::new([[a, b], [c, d]])
}

fn initial_state(input: &StateArgs) -> Result<OneQubitState> {
    if input.state.is_none() && input.named.is_none() {
        return Ok(one());
    }
    match read_state(input)? {
        AnyState::One(s) => Ok(s),
        other => Err(Error::DimensionMismatch {
            expected: 2,
            found: other.amplitudes().len(),
        }),
    }
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents)
        .map_err(|e| Error::Parse(format!("cannot write '{}': {e}", path.display())))
}

pub fn cmd_evolve(
    hamiltonian: &str,
    input: &StateArgs,
    grid: Option<&str>,
    family: bool,
    format: Format,
    out: Option<&Path>,
) -> Result<Outcome> {
    let h = parse_hamiltonian(hamiltonian)?;
    let grid = match grid {
        Some(g) => parse_grid(g)?,
        None => default_grid(),
    };
    let render = |s0: &OneQubitState| -> Result<String> {
        let traj = trajectory(&h, s0, &grid)?;
        Ok(match format {
            Format::Json => serde_json::to_string(&traj).expect("trajectory serializes") + "\n",
            _ => traj.to_csv(),
        })
    };
    if family {
        let dir = out.ok_or_else(|| Error::Parse("--family needs --out <directory>".into()))?;
        std::fs::create_dir_all(dir)
            .map_err(|e| Error::Parse(format!("cannot create '{}': {e}", dir.display())))?;
        let ext = if format == Format::Json {
            "json"
        } else {
            "csv"
        };
        let mut listing = String::new();
        for (k, s0) in theta_family() {
            let path = dir.join(format!("theta_{k:02}_15.{ext}"));
            write_file(&path, &render(&s0)?)?;
            writeln!(listing, "{}", path.display()).expect("writing to a String");
        }
        return Ok(Outcome::ok(listing));
    }
    let body = render(&initial_state(input)?)?;
    match out {
        Some(path) => {
            write_file(path, &body)?;
            Ok(Outcome::ok(String::new()))
        }
        None => Ok(Outcome::ok(body)),
    }
}

pub fn cmd_verify(suite: Suite, seed: u64, samples: usize, out: Option<&Path>) -> Result<Outcome> {
    if samples == 0 {
        return Err(Error::Parse("--samples must be at least 1".into()));
    }
    let report = verify::run(suite, seed, samples);
    let body = serde_json::to_string_pretty(&report).expect("report serializes") + "\n";
    if let Some(path) = out {
        write_file(path, &body)?;
    }
    let mut stderr = String::new();
    for name in report.forced_failures() {
        writeln!(stderr, "forced check failed: {name}").expect("writing to a String");
    }
    Ok(Outcome {
        stdout: body,
        stderr,
        code: if report.exit_code() == 0 {
            EXIT_OK
        } else {
            EXIT_FORCED
        },
    })
}

fn table_rows(algebra: Algebra) -> Vec<Vec<BasisProduct>> {
    match algebra {
        Algebra::Quaternion => quaternion_table().iter().map(|r| r.to_vec()).collect(),
        Algebra::Octonion => octonion_table().iter().map(|r| r.to_vec()).collect(),
    }
}

pub fn cmd_multable(algebra: Algebra, format: Format) -> String {
    let rows = table_rows(algebra);
    let n = rows.len();
    let header = (0..n).map(|j| format!("e{j}"));
    match format {
        Format::Json => {
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|r| r.iter().map(|c| c.to_string()).collect())
                .collect();
            serde_json::to_string(&cells).expect("strings serialize") + "\n"
        }
        Format::Csv => {
            let mut out = format!(",{}\n", header.collect::<Vec<_>>().join(","));
            for (i, r) in rows.iter().enumerate() {
                let cells: Vec<String> = r.iter().map(|c| c.to_string()).collect();
                writeln!(out, "e{i},{}", cells.join(",")).expect("writing to a String");
            }
            out
        }
        Format::Text => {
            let mut out = format!(
                "{:>4}{}\n",
                "",
                header.map(|h| format!("{h:>5}")).collect::<String>()
            );
            for (i, r) in rows.iter().enumerate() {
                let cells: String = r.iter().map(|c| format!("{:>5}", c.to_string())).collect();
                writeln!(out, "{:>4}{cells}", format!("e{i}")).expect("writing to a String");
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        run(std::iter::once("hyperqubit").chain(args.iter().copied()))
    }

    #[test]
    fn project_ghz() {
        let o = run_args(&["project", "--named", "ghz", "--partition", "1-23"]);
        assert_eq!(o.code, 0, "{}", o.stderr);
        let v: Value = serde_json::from_str(&o.stdout).unwrap();
        let x: Vec<f64> = serde_json::from_value(v["value"].clone()).unwrap();
        assert!((x[6] + 1.0).abs() < 1e-12);
        assert!((v["denom"].as_f64().unwrap() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn project_one_qubit() {
        let o = run_args(&["project", "--state", "0:0,1:0"]);
        let v: Value = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(v["value"], json!([0.0, 0.0]));
        let o = run_args(&["project", "--named", "zero"]);
        let v: Value = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(v["value"], json!("inf"));
    }

    #[test]
    fn concurrence_text() {
        let o = run_args(&["concurrence", "--named", "w", "--partition", "1-23"]);
        assert_eq!(o.stdout, "1|23\t0.942809\n");
        let o = run_args(&["concurrence", "--named", "ghz"]);
        assert_eq!(o.stdout.lines().count(), 3);
        assert!(o.stdout.lines().all(|l| l.ends_with("1.000000")));
    }

    #[test]
    fn input_errors_exit_one() {
        for args in [
            vec!["project", "--state", "1:x"],
            vec!["project", "--state", "1,0,0"],
            vec!["project", "--named", "nope"],
            vec!["project"],
            vec!["project", "--named", "ghz", "--qubits", "2"],
            vec!["concurrence", "--named", "plus"],
            vec!["evolve", "--hamiltonian", "0:0,1:0,0:0,0:0"],
            vec!["frobnicate"],
        ] {
            let o = run_args(&args);
            assert_eq!(o.code, EXIT_INPUT, "{args:?}");
            assert!(!o.stderr.is_empty());
        }
    }

    #[test]
    fn multable_cells() {
        let t = cmd_multable(Algebra::Octonion, Format::Json);
        let cells: Vec<Vec<String>> = serde_json::from_str(&t).unwrap();
        assert_eq!(cells[2][4], "+e6");
        assert_eq!(cells[5][5], "-e0");
        let q: Vec<Vec<String>> =
            serde_json::from_str(&cmd_multable(Algebra::Quaternion, Format::Json)).unwrap();
        assert_eq!(q[3][1], "+e2");
    }
}
