//! Lovász theta SDP in SDPA sparse format, and reading solver results back.
//!
//! The exported problem is the SDPA dual form
//! `max J•B  s.t.  E_uv•B = 0 (uv ∈ E),  I•B = 1,  B ⪰ 0`,
//! so both objective lines of a solver report equal `ϑ(G)` at optimality.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::{emit_graph6, Graph};

/// Primal-dual gaps above this mark an import as low precision.
pub const GAP_WARN: f64 = 1e-5;

#[derive(Clone, Debug)]
pub struct ThetaProblem<'a> {
    g: &'a Graph,
}

impl<'a> ThetaProblem<'a> {
    pub fn new(g: &'a Graph) -> Result<Self> {
        if g.n() == 0 || !g.is_connected() {
            return Err(Error::arg("theta export needs a connected nonempty graph"));
        }
        Ok(ThetaProblem { g })
    }

    /// One constraint per edge plus the trace constraint.
    pub fn m(&self) -> usize {
        self.g.edge_count() + 1
    }

    pub fn block_size(&self) -> usize {
        self.g.n()
    }

    pub fn to_sdpa(&self) -> String {
        let n = self.g.n();
        let m = self.m();
        let mut s = String::new();
        writeln!(s, "\"Lovasz theta SDP: max J.B, B_uv = 0 on edges, tr B = 1").unwrap();
        writeln!(s, "\"graph6 {}", emit_graph6(self.g)).unwrap();
        writeln!(s, "{m} = mDIM").unwrap();
        writeln!(s, "1 = nBLOCK").unwrap();
        writeln!(s, "{n} = blockStruct").unwrap();
        let mut c = vec!["0"; m];
        c[m - 1] = "1";
        writeln!(s, "{{{}}}", c.join(" ")).unwrap();
        for i in 1..=n {
            for j in i..=n {
                writeln!(s, "0 1 {i} {j} 1").unwrap();
            }
        }
        for (e, &(u, v)) in self.g.edges().iter().enumerate() {
            let (a, b) = if u < v { (u, v) } else { (v, u) };
            writeln!(s, "{} 1 {} {} 1", e + 1, a + 1, b + 1).unwrap();
        }
        for i in 1..=n {
            writeln!(s, "{m} 1 {i} {i} 1").unwrap();
        }
        s
    }
}

pub fn export_sdpa(g: &Graph, path: impl AsRef<Path>) -> Result<()> {
    fs::write(path, ThetaProblem::new(g)?.to_sdpa())?;
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ThetaSolution {
    /// Mean of the two objective values.
    pub value: f64,
    pub primal: f64,
    pub dual: f64,
    pub gap: f64,
    pub low_precision: bool,
}

fn field(text: &str, name: &str) -> Result<f64> {
    let line = text
        .lines()
        .find(|l| l.trim_start().starts_with(name))
        .ok_or_else(|| Error::Format(format!("missing field {name}")))?;
    let raw = line.split_once('=').map(|(_, v)| v.trim()).unwrap_or("");
    raw.split_whitespace()
        .next()
        .and_then(|v| v.parse::<f64>().ok())
        .filter(|v| v.is_finite())
        .ok_or_else(|| Error::Format(format!("field {name} has no numeric value: {line:?}")))
}

/// Reads `objValPrimal` and `objValDual` from an SDPA-style result.
pub fn parse_solution(text: &str) -> Result<ThetaSolution> {
    let primal = field(text, "objValPrimal")?;
    let dual = field(text, "objValDual")?;
    let gap = (primal - dual).abs();
    Ok(ThetaSolution { value: 0.5 * (primal + dual), primal, dual, gap, low_precision: gap > GAP_WARN })
}

pub fn import_solution(path: impl AsRef<Path>) -> Result<ThetaSolution> {
    parse_solution(&fs::read_to_string(path)?)
}

/// `α(G) ≤ ϑ ≤ eigenvalue bound`, each side with slack `1e−5`.
pub fn in_cage(theta: f64, alpha: usize, eigen_upper: f64) -> bool {
    alpha as f64 - GAP_WARN <= theta && theta <= eigen_upper + GAP_WARN
}
