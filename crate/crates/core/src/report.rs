//! Bound reports and the prepared graph-or-spectrum input shared by the bound
//! routines.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::{triangles_per_vertex, Polynomial};
use crate::spectra::{graph_spectrum, walk_regularity_level, Spectrum, DEFAULT_CLUSTER_TOL, DEFAULT_TOL};

/// Margin added before flooring a real bound to an integer.
pub const FLOOR_EPS: f64 = 1e-9;

pub fn floor_bound(x: f64) -> u64 {
    (x + FLOOR_EPS).floor().max(0.0) as u64
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerances {
    /// Jacobi off-diagonal threshold, relative to the spectral radius.
    pub eig: f64,
    /// Eigenvalue clustering gap, relative to `max(1, ρ)`.
    pub cluster: f64,
    /// Simplex pivot and feasibility tolerance.
    pub lp: f64,
    /// Relative tolerance for constant closed-walk counts.
    pub walk: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { eig: DEFAULT_TOL, cluster: DEFAULT_CLUSTER_TOL, lp: crate::simplex::DEFAULT_TOL, walk: 1e-9 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    RatioLp,
    H1,
    H2,
    H3,
    RatioGeneral,
    Rank,
    Haemers,
    ThetaEigen,
}

impl Method {
    pub fn tag(self) -> &'static str {
        match self {
            Method::RatioLp => "ratio-LP",
            Method::H1 => "H1",
            Method::H2 => "H2",
            Method::H3 => "H3",
            Method::RatioGeneral => "ratio-general",
            Method::Rank => "rank",
            Method::Haemers => "haemers",
            Method::ThetaEigen => "theta-eigen",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Which quantities of `G^k` the bound is proven to dominate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Covers {
    pub alpha: bool,
    pub capacity: bool,
    pub theta: bool,
}

impl Covers {
    pub const ALL: Covers = Covers { alpha: true, capacity: true, theta: true };
    pub const CAPACITY: Covers = Covers { alpha: true, capacity: true, theta: false };
    pub const ALPHA: Covers = Covers { alpha: true, capacity: false, theta: false };
}

#[derive(Clone, Debug, PartialEq)]
pub enum Applicability {
    /// Walk-regularity checked on the graph up to this length.
    Verified { level: usize },
    /// Only a spectrum was supplied; the hypotheses are the caller's claim.
    AssertedByCaller,
    /// The theorem used needs no walk-regularity.
    NotRequired,
    /// The fitting matrix was built and its diagonal checked.
    FitVerified { min_abs_diag: f64 },
}

impl fmt::Display for Applicability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Applicability::Verified { level } => write!(f, "walk-regular<={level}"),
            Applicability::AssertedByCaller => f.write_str("asserted"),
            Applicability::NotRequired => f.write_str("unconditional"),
            Applicability::FitVerified { min_abs_diag } => write!(f, "fit(min|diag|={min_abs_diag:.3e})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundReport {
    pub k: usize,
    pub bound: f64,
    /// `⌊bound + 1e−9⌋`; the value compared with integer quantities.
    pub bound_int: u64,
    pub method: Method,
    pub witness: Option<Polynomial>,
    pub applicability: Applicability,
    pub covers: Covers,
}

impl BoundReport {
    pub(crate) fn new(
        k: usize,
        bound: f64,
        method: Method,
        witness: Option<Polynomial>,
        applicability: Applicability,
        covers: Covers,
    ) -> Self {
        BoundReport { k, bound, bound_int: floor_bound(bound), method, witness, applicability, covers }
    }

    /// True when the real bound is an integer to within `1e−9`.
    pub fn is_integral(&self) -> bool {
        (self.bound - self.bound.round()).abs() < FLOOR_EPS
    }
}

/// A graph with its clustered spectrum, or a bare spectrum.
#[derive(Clone, Debug)]
pub struct Instance {
    graph: Option<Graph>,
    spectrum: Spectrum,
    walk_level: Option<usize>,
    n_t: Option<f64>,
}

impl Instance {
    /// Computes the spectrum and the walk-regularity level (checked up to
    /// the number of distinct eigenvalues minus one).
    pub fn from_graph(g: Graph, tol: &Tolerances) -> Result<Self> {
        if g.n() == 0 {
            return Err(Error::arg("empty graph"));
        }
        let spectrum = graph_spectrum(&g, tol.eig, tol.cluster)?;
        let level = walk_regularity_level(&g, spectrum.d().max(1), tol.walk);
        Ok(Instance { graph: Some(g), spectrum, walk_level: Some(level), n_t: None })
    }

    pub fn from_spectrum(spectrum: Spectrum) -> Self {
        Instance { graph: None, spectrum, walk_level: None, n_t: None }
    }

    /// Overrides the per-vertex triangle count used by the 3-minor formula.
    pub fn with_triangles(mut self, n_t: f64) -> Self {
        self.n_t = Some(n_t);
        self
    }

    pub fn graph(&self) -> Option<&Graph> {
        self.graph.as_ref()
    }

    pub fn spectrum(&self) -> &Spectrum {
        &self.spectrum
    }

    pub fn walk_level(&self) -> Option<usize> {
        self.walk_level
    }

    /// Triangles per vertex: the override if set, else `tr(A³)/2n`.
    pub fn triangles(&self) -> f64 {
        self.n_t.unwrap_or_else(|| triangles_per_vertex(&self.spectrum))
    }

    /// Checks the hypotheses of the spectral bounds at power `k`: a
    /// connected regular graph that is `min(k, d)`-partially walk-regular.
    pub(crate) fn applicability(&self, k: usize) -> Result<Applicability> {
        let Some(g) = &self.graph else {
            if self.spectrum.mult(0) != 1 {
                return Err(Error::inapplicable("largest eigenvalue is not simple; not a connected regular graph"));
            }
            return Ok(Applicability::AssertedByCaller);
        };
        if !g.is_connected() {
            return Err(Error::inapplicable("graph is disconnected"));
        }
        if g.regular_degree().is_none() {
            return Err(Error::inapplicable("graph is not regular"));
        }
        let need = k.min(self.spectrum.d());
        let level = self.walk_level.unwrap_or(0);
        if level < need {
            return Err(Error::NotWalkRegular { length: level + 1 });
        }
        Ok(Applicability::Verified { level })
    }
}
