//! Real polynomials in the monomial basis, Newton divided differences, and the
//! explicit minor polynomials for small k.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::DenseMatrix;
use crate::spectra::Spectrum;

/// Coefficients lowest degree first, with no trailing zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<f64>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<f64>) -> Self {
        while coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: f64) -> Self {
        Polynomial::new(vec![c])
    }

    /// `scale · Π (x − r)`.
    pub fn from_roots(roots: &[f64], scale: f64) -> Self {
        let mut c = vec![scale];
        for &r in roots {
            c.push(0.0);
            for i in (0..c.len()).rev() {
                let lower = if i > 0 { c[i - 1] } else { 0.0 };
                c[i] = lower - r * c[i];
            }
        }
        Polynomial::new(c)
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Degree, with the zero polynomial reported as degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Drops trailing coefficients with magnitude `<= tol · max |c_i|`.
    pub fn trimmed(&self, tol: f64) -> Self {
        let scale = self.coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()));
        let mut c = self.coeffs.clone();
        while c.last().is_some_and(|x| x.abs() <= tol * scale) {
            c.pop();
        }
        Polynomial { coeffs: c }
    }

    pub fn scaled(&self, s: f64) -> Self {
        Polynomial::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    #[inline]
    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    /// `p(A)` for the adjacency matrix `A` of `g`, by Horner's scheme.
    pub fn eval_on_matrix(&self, g: &Graph) -> DenseMatrix {
        let a = g.adjacency_matrix();
        let mut p = DenseMatrix::zeros(g.n());
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if i + 1 < self.coeffs.len() {
                p = p.matmul(&a);
            }
            p.add_diagonal(c);
        }
        p
    }

    pub fn to_csv(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        self.coeffs.iter().map(|c| format!("{c}")).collect::<Vec<_>>().join(",")
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let coeffs = text
            .trim()
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<f64>()
                    .ok()
                    .filter(|c| c.is_finite())
                    .ok_or_else(|| Error::Format(format!("bad polynomial coefficient '{s}'")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Polynomial::new(coeffs))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0.0 {
                continue;
            }
            let sign = if c < 0.0 { "-" } else { "+" };
            if first {
                if c < 0.0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{}", c.abs())?,
                1 => write!(f, "{}x", c.abs())?,
                _ => write!(f, "{}x^{i}", c.abs())?,
            }
        }
        Ok(())
    }
}

/// Values of a function on a strictly decreasing mesh.
#[derive(Clone, Debug, PartialEq)]
pub struct MeshValues {
    mesh: Vec<f64>,
    vals: Vec<f64>,
}

impl MeshValues {
    pub fn new(mesh: Vec<f64>, vals: Vec<f64>) -> Result<Self> {
        if mesh.is_empty() || mesh.len() != vals.len() {
            return Err(Error::arg("mesh and values must be nonempty and of equal length"));
        }
        if mesh.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::arg("mesh must be strictly decreasing"));
        }
        Ok(MeshValues { mesh, vals })
    }

    /// Samples `p` on `mesh`.
    pub fn sample(p: &Polynomial, mesh: &[f64]) -> Result<Self> {
        MeshValues::new(mesh.to_vec(), mesh.iter().map(|&t| p.eval(t)).collect())
    }

    pub fn mesh(&self) -> &[f64] {
        &self.mesh
    }

    pub fn vals(&self) -> &[f64] {
        &self.vals
    }

    /// Leading `len` points.
    fn prefix(&self, len: usize) -> MeshValues {
        MeshValues { mesh: self.mesh[..len].to_vec(), vals: self.vals[..len].to_vec() }
    }
}

/// `f[θ_i, …, θ_j]` via the triangular table.
pub fn divided_difference(mv: &MeshValues, i: usize, j: usize) -> f64 {
    assert!(i <= j && j < mv.mesh.len(), "divided difference index out of range");
    let t = &mv.mesh;
    let mut col: Vec<f64> = mv.vals[i..=j].to_vec();
    for order in 1..=j - i {
        for r in 0..col.len() - order {
            col[r] = (col[r + 1] - col[r]) / (t[i + r + order] - t[i + r]);
        }
    }
    col[0]
}

/// Newton-form interpolant through every mesh point, expanded to monomials.
pub fn interpolate(mv: &MeshValues) -> Polynomial {
    let t = &mv.mesh;
    let n = t.len();
    // coefficients f[θ_0..θ_m] of the Newton form
    let mut dd = mv.vals.clone();
    for order in 1..n {
        for r in (order..n).rev() {
            dd[r] = (dd[r] - dd[r - 1]) / (t[r] - t[r - order]);
        }
    }
    let mut acc = vec![0.0; n];
    for m in (0..n).rev() {
        // acc = acc · (x − θ_m) + dd[m]
        for i in (0..n).rev() {
            let lower = if i > 0 { acc[i - 1] } else { 0.0 };
            acc[i] = lower - t[m] * acc[i];
        }
        acc[0] += dd[m];
    }
    Polynomial::new(acc)
}

/// Interpolates the leading `k + 1` points only, giving a polynomial of
/// degree at most `k` that agrees with every point when the remaining
/// divided differences vanish.
pub(crate) fn interpolate_degree(mv: &MeshValues, k: usize) -> Polynomial {
    interpolate(&mv.prefix((k + 1).min(mv.mesh.len())))
}

/// Per-vertex triangle count of a 3-partially walk-regular graph, read off
/// its spectrum as `tr(A³) / 2n`.
pub fn triangles_per_vertex(spec: &Spectrum) -> f64 {
    spec.moment(3) / (2.0 * spec.n() as f64)
}

const INDEX_TOL: f64 = 1e-8;

/// Index `i ≥ 1` of the largest eigenvalue with `θ_i ≤ −1`.
pub(crate) fn h2_index(spec: &Spectrum) -> Result<usize> {
    let d = spec.d();
    let i = (1..=d)
        .find(|&i| spec.theta(i) <= -1.0 + INDEX_TOL)
        .ok_or_else(|| Error::inapplicable("no eigenvalue <= -1 for the 2-minor polynomial"))?;
    if i < 2 {
        return Err(Error::inapplicable("the 2-minor polynomial needs θ_1 > -1"));
    }
    Ok(i)
}

/// Index `s` of the smallest eigenvalue above the 3-minor threshold,
/// clamped to `1..=d−2`.
pub(crate) fn h3_index(spec: &Spectrum, n_t: f64) -> usize {
    let (t0, td) = (spec.theta(0), spec.theta(spec.d()));
    let delta = 2.0 * n_t;
    let thr = -(t0 * t0 + t0 * td - delta) / (t0 * (td + 1.0));
    let s = (1..=spec.d()).rev().find(|&i| spec.theta(i) >= thr - INDEX_TOL * thr.abs().max(1.0));
    s.unwrap_or(1).clamp(1, spec.d() - 2)
}

fn normalized(zeros: &[f64], t0: f64) -> Polynomial {
    let denom: f64 = zeros.iter().map(|z| t0 - z).product();
    Polynomial::from_roots(zeros, 1.0 / denom)
}

/// The explicit k-minor polynomials for `k ∈ {0, 1, 2, 3, d}`; `k = d`
/// takes precedence and yields the Hoffman polynomial divided by n.
pub fn explicit_minor(spec: &Spectrum, k: usize, n_t: Option<f64>) -> Result<Polynomial> {
    let d = spec.d();
    let t0 = spec.theta(0);
    if k == 0 {
        return Ok(Polynomial::constant(1.0));
    }
    if k == d {
        return Ok(normalized(&spec.values()[1..], t0));
    }
    match k {
        1 => Ok(normalized(&[spec.theta(d)], t0)),
        2 => {
            if t0 < 2.0 - INDEX_TOL || d < 2 {
                return Err(Error::inapplicable("the 2-minor polynomial needs degree >= 2 and d >= 2"));
            }
            let i = h2_index(spec)?;
            Ok(normalized(&[spec.theta(i), spec.theta(i - 1)], t0))
        }
        3 => {
            let n_t = n_t.ok_or_else(|| Error::arg("the 3-minor polynomial needs the triangle count n_t"))?;
            if d < 3 || t0 < 3.0 - INDEX_TOL {
                return Err(Error::inapplicable("the 3-minor polynomial needs degree >= 3 and d >= 3"));
            }
            let s = h3_index(spec, n_t);
            Ok(normalized(&[spec.theta(s), spec.theta(s + 1), spec.theta(d)], t0))
        }
        _ => Err(Error::arg(format!("no explicit minor polynomial for k={k} (d={d})"))),
    }
}

/// `p(θ_i)` for every distinct eigenvalue and the trace `Σ m_i p(θ_i)`.
pub fn eval_on_spectrum(p: &Polynomial, spec: &Spectrum) -> (Vec<f64>, f64) {
    let vals: Vec<f64> = spec.values().iter().map(|&t| p.eval(t)).collect();
    let trace = vals.iter().zip(spec.mults()).map(|(v, &m)| v * m as f64).sum();
    (vals, trace)
}
