//! Adjacency spectra: a cyclic Jacobi eigensolver, clustering into distinct
//! eigenvalues with multiplicities, walk-regularity tests, and closed-form
//! spectra of strongly regular graphs.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::DenseMatrix;

pub const DEFAULT_TOL: f64 = 1e-12;
pub const DEFAULT_CLUSTER_TOL: f64 = 1e-8;
pub const MAX_SWEEPS: usize = 60;

/// Distinct eigenvalues `θ_0 > θ_1 > … > θ_d` with multiplicities.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
    mults: Vec<usize>,
}

impl Spectrum {
    pub fn new(values: Vec<f64>, mults: Vec<usize>) -> Result<Self> {
        if values.is_empty() || values.len() != mults.len() {
            return Err(Error::arg("spectrum needs equally many values and multiplicities"));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::arg("spectrum contains a non-finite value"));
        }
        if values.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::arg("spectrum values must be strictly decreasing"));
        }
        if mults.contains(&0) {
            return Err(Error::arg("multiplicities must be positive"));
        }
        Ok(Spectrum { values, mults })
    }

    /// Builds a spectrum from `(value, multiplicity)` pairs in any order.
    pub fn from_pairs(pairs: &[(f64, usize)]) -> Result<Self> {
        let mut sorted = pairs.to_vec();
        sorted.sort_by(|a, b| b.0.total_cmp(&a.0));
        let (values, mults) = sorted.into_iter().unzip();
        Spectrum::new(values, mults)
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn mults(&self) -> &[usize] {
        &self.mults
    }

    /// Number of distinct eigenvalues minus one.
    pub fn d(&self) -> usize {
        self.values.len() - 1
    }

    pub fn n(&self) -> usize {
        self.mults.iter().sum()
    }

    pub fn theta(&self, i: usize) -> f64 {
        self.values[i]
    }

    pub fn mult(&self, i: usize) -> usize {
        self.mults[i]
    }

    /// `Σ m_i θ_i^p`.
    pub fn moment(&self, p: i32) -> f64 {
        self.values.iter().zip(&self.mults).map(|(&t, &m)| m as f64 * t.powi(p)).sum()
    }

    /// Parses CSV lines `theta,mult`; a header row and `#` comments are skipped.
    pub fn from_csv(text: &str) -> Result<Self> {
        let mut pairs = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (t, m) = line
                .split_once(',')
                .ok_or_else(|| Error::Format(format!("line {}: expected 'theta,mult'", lineno + 1)))?;
            let (t, m) = (t.trim(), m.trim());
            match (t.parse::<f64>(), m.parse::<usize>()) {
                (Ok(t), Ok(m)) => pairs.push((t, m)),
                _ if pairs.is_empty() && t.parse::<f64>().is_err() => continue,
                _ => return Err(Error::Format(format!("line {}: cannot parse '{line}'", lineno + 1))),
            }
        }
        Spectrum::from_pairs(&pairs)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("theta,mult\n");
        for (t, m) in self.values.iter().zip(&self.mults) {
            out.push_str(&format!("{t:.15},{m}\n"));
        }
        out
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (t, m)) in self.values.iter().zip(&self.mults).enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{t:.6}^{m}")?;
        }
        write!(f, "}}")
    }
}

/// Cheap upper bound on the spectral radius (max absolute row sum).
fn radius_bound(a: &DenseMatrix) -> f64 {
    (0..a.n()).map(|i| a.row(i).iter().map(|x| x.abs()).sum::<f64>()).fold(0.0, f64::max)
}

/// Cyclic Jacobi on a symmetric matrix. Returns eigenvalues in descending
/// order and the matching eigenvectors as columns of the second matrix.
pub(crate) fn jacobi_eigen(m: &DenseMatrix, tol: f64) -> Result<(Vec<f64>, DenseMatrix)> {
    let n = m.n();
    let mut a = m.clone();
    let mut v = DenseMatrix::identity(n);
    let rho = radius_bound(m).max(f64::MIN_POSITIVE);
    let threshold = tol * rho;

    let off_max = |a: &DenseMatrix| {
        let mut best = 0.0f64;
        for p in 0..n {
            for q in p + 1..n {
                best = best.max(a[(p, q)].abs());
            }
        }
        best
    };

    let mut sweeps = 0;
    while off_max(&a) >= threshold {
        if sweeps == MAX_SWEEPS {
            return Err(Error::Numerical(format!(
                "Jacobi iteration did not converge in {MAX_SWEEPS} sweeps"
            )));
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                a[(p, p)] -= t * apq;
                a[(q, q)] += t * apq;
                a[(p, q)] = 0.0;
                a[(q, p)] = 0.0;
                for r in 0..n {
                    if r != p && r != q {
                        let (arp, arq) = (a[(r, p)], a[(r, q)]);
                        let np = c * arp - s * arq;
                        let nq = s * arp + c * arq;
                        a[(r, p)] = np;
                        a[(p, r)] = np;
                        a[(r, q)] = nq;
                        a[(q, r)] = nq;
                    }
                    let (vrp, vrq) = (v[(r, p)], v[(r, q)]);
                    v[(r, p)] = c * vrp - s * vrq;
                    v[(r, q)] = s * vrp + c * vrq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(j, j)].total_cmp(&a[(i, i)]));
    let values = order.iter().map(|&i| a[(i, i)]).collect();
    let mut vecs = DenseMatrix::zeros(n);
    for (col, &src) in order.iter().enumerate() {
        for r in 0..n {
            vecs[(r, col)] = v[(r, src)];
        }
    }
    Ok((values, vecs))
}

/// All `n` adjacency eigenvalues, descending.
pub fn eigensolve(g: &Graph, tol: f64) -> Result<Vec<f64>> {
    if g.n() == 0 {
        return Err(Error::arg("eigensolve needs a nonempty graph"));
    }
    if !(tol > 0.0) {
        return Err(Error::arg("tolerance must be positive"));
    }
    Ok(jacobi_eigen(&g.adjacency_matrix(), tol)?.0)
}

/// Merges consecutive raw eigenvalues (sorted descending) that lie within
/// `cluster_tol · max(1, ρ)` of each other; each cluster is represented by
/// its mean.
pub fn cluster(raw: &[f64], cluster_tol: f64) -> Spectrum {
    assert!(!raw.is_empty(), "cannot cluster an empty eigenvalue list");
    let rho = raw.iter().fold(1.0f64, |m, x| m.max(x.abs()));
    let gap = cluster_tol * rho;
    let mut groups: Vec<Vec<f64>> = Vec::new();
    for &x in raw {
        match groups.last_mut() {
            Some(g) if (g.last().unwrap() - x).abs() <= gap => g.push(x),
            _ => groups.push(vec![x]),
        }
    }
    let values = groups.iter().map(|g| g.iter().sum::<f64>() / g.len() as f64).collect();
    let mults = groups.iter().map(Vec::len).collect();
    Spectrum { values, mults }
}

/// Eigensolve, cluster, and check the trace identities `Σ m θ = 0` and
/// `Σ m θ² = 2|E|`.
pub fn graph_spectrum(g: &Graph, tol: f64, cluster_tol: f64) -> Result<Spectrum> {
    let spec = cluster(&eigensolve(g, tol)?, cluster_tol);
    let scale = spec.values.iter().fold(1.0f64, |m, x| m.max(x.abs())) * g.n() as f64;
    let m1 = spec.moment(1);
    let m2 = spec.moment(2);
    if m1.abs() > 1e-8 * scale || (m2 - 2.0 * g.edge_count() as f64).abs() > 1e-8 * scale * scale {
        return Err(Error::Numerical(format!(
            "clustered spectrum fails trace identities (Σmθ={m1:e}, Σmθ²={m2})"
        )));
    }
    Ok(spec)
}

/// Diagonals of `A^1 … A^kmax`.
fn closed_walk_counts(g: &Graph, kmax: usize) -> Vec<Vec<f64>> {
    let a = g.adjacency_matrix();
    let mut p = a.clone();
    let mut out = Vec::with_capacity(kmax);
    for l in 1..=kmax {
        if l > 1 {
            p = p.matmul(&a);
        }
        out.push(p.diagonal());
    }
    out
}

fn constant(diag: &[f64], tol: f64) -> bool {
    let scale = diag.iter().fold(1.0f64, |m, x| m.max(x.abs()));
    let (lo, hi) = diag.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &x| (lo.min(x), hi.max(x)));
    diag.is_empty() || hi - lo <= tol * scale
}

/// True iff the number of closed walks of each length `l ≤ k` is the same
/// at every vertex.
pub fn is_k_partially_walk_regular(g: &Graph, k: usize, tol: f64) -> bool {
    walk_regularity_level(g, k, tol) >= k
}

/// Largest `l ≤ kmax` such that the graph is l-partially walk-regular.
pub fn walk_regularity_level(g: &Graph, kmax: usize, tol: f64) -> usize {
    if kmax <= 1 {
        return kmax;
    }
    let counts = closed_walk_counts(g, kmax);
    counts.iter().position(|d| !constant(d, tol)).unwrap_or(kmax)
}

/// Strongly regular graph parameters `(n, k; a, c)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SrgParams {
    pub n: usize,
    pub k: usize,
    pub a: usize,
    pub c: usize,
}

impl SrgParams {
    /// Validates `k(k−a−1) = (n−k−1)c`, connectivity (`c ≥ 1`) and
    /// non-completeness (`k < n−1`).
    pub fn new(n: usize, k: usize, a: usize, c: usize) -> Result<Self> {
        let bad = |why: &str| Err(Error::InfeasibleParameters(format!("({n},{k},{a},{c}): {why}")));
        if k == 0 || k + 1 >= n {
            return bad("need 0 < k < n-1");
        }
        if a + 1 > k || c > k {
            return bad("need a < k and c <= k");
        }
        if c == 0 {
            return bad("c = 0 gives a disconnected graph");
        }
        if k * (k - a - 1) != (n - k - 1) * c {
            return bad("k(k-a-1) != (n-k-1)c");
        }
        Ok(SrgParams { n, k, a, c })
    }

    /// `(a−c)² + 4(k−c)`.
    pub fn discriminant(&self) -> f64 {
        let (a, c, k) = (self.a as f64, self.c as f64, self.k as f64);
        (a - c).powi(2) + 4.0 * (k - c)
    }

    /// Restricted eigenvalues `(θ, τ)` with `θ > τ`.
    pub fn eigenvalues(&self) -> (f64, f64) {
        let root = self.discriminant().sqrt();
        let ac = self.a as f64 - self.c as f64;
        ((ac + root) / 2.0, (ac - root) / 2.0)
    }
}

impl fmt::Display for SrgParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.n, self.k, self.a, self.c)
    }
}

fn integral_mult(x: f64, what: &str, p: &SrgParams) -> Result<usize> {
    let r = x.round();
    if (x - r).abs() > 1e-6 || r < 1.0 {
        return Err(Error::InfeasibleParameters(format!("{p}: multiplicity {what} = {x} is not a positive integer")));
    }
    Ok(r as usize)
}

/// `{k, θ^{m(θ)}, τ^{m(τ)}}` from the parameters.
pub fn srg_spectrum(p: &SrgParams) -> Result<Spectrum> {
    let disc = p.discriminant();
    if disc <= 0.0 {
        return Err(Error::InfeasibleParameters(format!("{p}: discriminant {disc} <= 0")));
    }
    let (theta, tau) = p.eigenvalues();
    let (n, k) = (p.n as f64, p.k as f64);
    let m_theta = integral_mult(((n - 1.0) * tau + k) / (tau - theta), "m(theta)", p)?;
    let m_tau = integral_mult(((n - 1.0) * theta + k) / (theta - tau), "m(tau)", p)?;
    if 1 + m_theta + m_tau != p.n {
        return Err(Error::InfeasibleParameters(format!("{p}: multiplicities do not sum to n")));
    }
    Spectrum::new(vec![k, theta, tau], vec![1, m_theta, m_tau])
}

/// The strongly regular graph obtained as the diameter-minus-one power of an
/// `r`-antipodal distance-regular graph on `n` vertices.
#[derive(Clone, Debug, PartialEq)]
pub struct AntipodalPower {
    pub params: SrgParams,
    pub spectrum: Spectrum,
    /// Shannon capacity of the power, equal to `r`.
    pub capacity: usize,
}

pub fn antipodal_power_spectrum(n: usize, r: usize) -> Result<AntipodalPower> {
    if r < 2 || n <= r || !n.is_multiple_of(r) {
        return Err(Error::arg(format!("need r >= 2, n > r and r | n, got n={n}, r={r}")));
    }
    let params = SrgParams::new(n, n - r, n - 2 * r, n - r)?;
    let spectrum = Spectrum::new(
        vec![(n - r) as f64, 0.0, -(r as f64)],
        vec![1, n - n / r, n / r - 1],
    )?;
    Ok(AntipodalPower { params, spectrum, capacity: r })
}
