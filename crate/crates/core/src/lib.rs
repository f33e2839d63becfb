//! Upper and lower bounds on the Shannon capacity, Lovász theta number and
//! k-independence number of graph powers.
//!
//! The spectral side solves the minor-polynomial linear program (ratio-type
//! bounds) and searches Shannon polynomials (rank-type bounds); the
//! combinatorial side computes exact independence numbers for comparison.

pub mod bitset;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod matrix;
pub mod minorlp;
pub mod oracle;
pub mod poly;
pub mod report;
pub mod shannon;
pub mod simplex;
pub mod spectra;
pub mod thetaio;

pub use error::{Error, Result};
pub use fixtures::{FixtureEntry, Manifest};
pub use graph::{DistanceMatrix, Graph};
pub use minorlp::MinorSolution;
pub use oracle::{CapacityLowerBound, MisResult, Verdict};
pub use poly::{MeshValues, Polynomial};
pub use report::{Applicability, BoundReport, Covers, Instance, Method, Tolerances};
pub use shannon::{FitCheck, Search, ShannonSolution};
pub use simplex::{LinearProgram, LpOutcome, LpStatus};
pub use spectra::{SrgParams, Spectrum};
pub use thetaio::{ThetaProblem, ThetaSolution};
