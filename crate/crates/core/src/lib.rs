//! Quaternionic and octonionic geometry of one-, two- and three-qubit pure
//! states.
//!
//! States are stored as complex amplitude vectors, which also serve as the
//! ground-truth oracle. They can be re-encoded as quaterbits and octobits,
//! stereographically projected onto the extended complex, quaternion and
//! octonion planes, and transformed by local and global unitary groups. The
//! [`verify`] module checks every path of the resulting diagrams against the
//! oracle.

pub mod cli;
pub mod dynamics;
pub mod entanglement;
pub mod error;
pub mod hypercomplex;
pub mod maps;
pub mod states;
pub mod verify;

pub use error::{Error, Result};
pub use hypercomplex::{Complex, Coordinates, Octonion, Quaternion};
pub use maps::ExtendedPoint;
pub use states::{
    LocalUnitary, OctobitState, OneQubitState, Partition, QuaterbitState, SU2Params, Sp2Matrix,
    State, ThreeQubitState, TwoQuaterbitState, TwoQubitState,
};
