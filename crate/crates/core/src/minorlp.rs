//! The minor-polynomial linear program and the ratio-type bounds built on it.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::{
    eval_on_spectrum, h2_index, h3_index, interpolate_degree, MeshValues, Polynomial,
};
use crate::report::{Applicability, BoundReport, Covers, Instance, Method, Tolerances};
use crate::simplex::{LinearProgram, LpStatus};
use crate::spectra::{cluster, eigensolve, Spectrum};

#[derive(Clone, Debug, PartialEq)]
pub struct MinorSolution {
    pub k: usize,
    /// Mesh values `x_0 = 1, x_1, …, x_d`.
    pub x: Vec<f64>,
    pub poly: Polynomial,
    /// `Σ m_i f_k(θ_i)`.
    pub trace: f64,
}

impl MinorSolution {
    /// Indices `i ≥ 1` with `x_i` numerically zero.
    pub fn zero_indices(&self, tol: f64) -> Vec<usize> {
        (1..self.x.len()).filter(|&i| self.x[i].abs() <= tol).collect()
    }
}

/// Orthonormal basis of the vectors orthogonal to every degree-`k`
/// polynomial sampled on `theta`. Its span is the span of the divided
/// differences of orders `k+1..=d`, so `B x = 0` says the same as their
/// vanishing, without the huge dynamic range of the raw coefficients.
fn constraint_basis(theta: &[f64], k: usize) -> Vec<Vec<f64>> {
    let rows = theta.len();
    let (hi, lo) = (theta[0], theta[rows - 1]);
    let t: Vec<f64> = theta.iter().map(|&x| (2.0 * x - hi - lo) / (hi - lo)).collect();
    // Chebyshev–Vandermonde matrix, column-major
    let mut cols: Vec<Vec<f64>> = vec![vec![1.0; rows]];
    if k >= 1 {
        cols.push(t.clone());
    }
    for j in 2..=k {
        let next = (0..rows).map(|i| 2.0 * t[i] * cols[j - 1][i] - cols[j - 2][i]).collect();
        cols.push(next);
    }
    // Householder QR; reflector j acts on entries j..rows
    let mut reflectors: Vec<Vec<f64>> = Vec::with_capacity(k + 1);
    for j in 0..=k {
        let mut v: Vec<f64> = cols[j][j..].to_vec();
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        v[0] += if v[0] >= 0.0 { norm } else { -norm };
        let vn = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if vn > 0.0 {
            v.iter_mut().for_each(|x| *x /= vn);
        }
        for col in cols.iter_mut().skip(j) {
            let dot: f64 = v.iter().zip(&col[j..]).map(|(a, b)| a * b).sum();
            col[j..].iter_mut().zip(&v).for_each(|(c, a)| *c -= 2.0 * dot * a);
        }
        reflectors.push(v);
    }
    // the trailing columns of Q = H_0 H_1 … H_k
    (k + 1..rows)
        .map(|e| {
            let mut q = vec![0.0; rows];
            q[e] = 1.0;
            for (j, v) in reflectors.iter().enumerate().rev() {
                let dot: f64 = v.iter().zip(&q[j..]).map(|(a, b)| a * b).sum();
                q[j..].iter_mut().zip(v).for_each(|(c, a)| *c -= 2.0 * dot * a);
            }
            q
        })
        .collect()
}

/// Minimizes `Σ m_i x_i` over mesh values with `x_0 = 1`, `x_i ≥ 0`, and
/// vanishing divided differences of every order above `k`. Powers beyond
/// `d` are treated as `d`.
pub fn minor_lp(spec: &Spectrum, k: usize, tol: f64) -> Result<MinorSolution> {
    let d = spec.d();
    let k = k.min(d);
    let theta = spec.values();
    let mults: Vec<f64> = spec.mults().iter().map(|&m| m as f64).collect();

    let mut rows = Vec::with_capacity(d - k);
    let mut rhs = Vec::with_capacity(d - k);
    if k < d {
        for q in constraint_basis(theta, k) {
            rhs.push(-q[0]);
            rows.push(q[1..].to_vec());
        }
    }
    let lp = LinearProgram::new(mults[1..].to_vec(), rows, rhs)?;
    let out = lp.solve(tol)?;
    if out.status != LpStatus::Optimal {
        return Err(Error::Numerical(format!(
            "minor-polynomial LP is {:?} at k={k}; the spectrum is probably mis-clustered",
            out.status
        )));
    }
    out.certify(&lp, 1e-7)?;

    let mut x = Vec::with_capacity(d + 1);
    x.push(1.0);
    x.extend(out.x.iter().map(|&v| if v.abs() < tol { 0.0 } else { v }));
    if let Some(sol) = polish(spec, k, &x) {
        return Ok(sol);
    }

    let mv = MeshValues::new(theta.to_vec(), x.clone())?;
    let poly = interpolate_degree(&mv, k);
    let (vals, _) = eval_on_spectrum(&poly, spec);
    let scale = x.iter().fold(1.0f64, |s, v| s.max(v.abs()));
    if let Some(i) = (0..=d).find(|&i| (vals[i] - x[i]).abs() > 1e-6 * scale) {
        return Err(Error::Numerical(format!(
            "interpolated minor polynomial misses mesh point {i}: {} vs {}",
            vals[i], x[i]
        )));
    }
    let trace = x.iter().zip(&mults).map(|(x, m)| x * m).sum();
    Ok(MinorSolution { k, x, poly, trace })
}

/// A vertex of the LP has exactly `k` vanishing coordinates, which pin down
/// the polynomial as a normalized product. Rebuilding it that way removes
/// the elimination error of the tableau; `None` if the rebuilt values do not
/// reproduce the LP point.
fn polish(spec: &Spectrum, k: usize, x: &[f64]) -> Option<MinorSolution> {
    let d = spec.d();
    let theta = spec.values();
    let mut order: Vec<usize> = (1..=d).collect();
    order.sort_by(|&a, &b| x[a].abs().total_cmp(&x[b].abs()).then(a.cmp(&b)));
    let mut zeros: Vec<usize> = order[..k].to_vec();
    zeros.sort_unstable();
    let roots: Vec<f64> = zeros.iter().map(|&z| theta[z]).collect();
    let denom: f64 = roots.iter().map(|r| theta[0] - r).product();
    let vals: Vec<f64> = theta
        .iter()
        .map(|&t| roots.iter().map(|r| t - r).product::<f64>() / denom)
        .collect();
    let scale = x.iter().fold(1.0f64, |s, v| s.max(v.abs()));
    let agrees = vals.iter().zip(x).all(|(v, x)| (v - x).abs() <= 1e-6 * scale && *v >= -1e-9);
    if !agrees {
        return None;
    }
    let vals: Vec<f64> = vals.into_iter().map(|v| v.max(0.0)).collect();
    let trace = vals.iter().zip(spec.mults()).map(|(v, &m)| v * m as f64).sum();
    Some(MinorSolution { k, x: vals, poly: Polynomial::from_roots(&roots, 1.0 / denom), trace })
}

/// `Θ(G^k) ≤ ϑ(G^k) ≤ tr f_k(A)` for k-partially walk-regular graphs.
pub fn ratio_type_bound(inst: &Instance, k: usize, tol: &Tolerances) -> Result<BoundReport> {
    let applicability = inst.applicability(k)?;
    let sol = minor_lp(inst.spectrum(), k, tol.lp)?;
    Ok(BoundReport::new(k, sol.trace, Method::RatioLp, Some(sol.poly), applicability, Covers::ALL))
}

/// Same value as [`ratio_type_bound`], reported as a bound on the Lovász
/// theta number of `G^k`.
pub fn theta_eigen_bound(inst: &Instance, k: usize, tol: &Tolerances) -> Result<BoundReport> {
    let mut r = ratio_type_bound(inst, k, tol)?;
    r.method = Method::ThetaEigen;
    Ok(r)
}

fn normalized(zeros: &[f64], t0: f64) -> Polynomial {
    let denom: f64 = zeros.iter().map(|z| t0 - z).product();
    Polynomial::from_roots(zeros, 1.0 / denom)
}

/// Closed forms for `k ∈ {1, 2, 3}`; walk-regularity is the caller's claim.
pub fn closed_form_h(spec: &Spectrum, k: usize, n_t: Option<f64>) -> Result<BoundReport> {
    let d = spec.d();
    let n = spec.n() as f64;
    let delta = spec.theta(0);
    let td = spec.theta(d);
    let (bound, method, zeros) = match k {
        1 => {
            if d < 1 {
                return Err(Error::inapplicable("H1 needs at least two distinct eigenvalues"));
            }
            (n * (-td) / (delta - td), Method::H1, vec![td])
        }
        2 => {
            if delta < 2.0 - 1e-9 || d < 2 {
                return Err(Error::inapplicable("H2 needs degree >= 2 and d >= 2"));
            }
            let i = h2_index(spec)?;
            let (a, b) = (spec.theta(i), spec.theta(i - 1));
            (n * (delta + a * b) / ((delta - a) * (delta - b)), Method::H2, vec![a, b])
        }
        3 => {
            let n_t = n_t.ok_or_else(|| Error::arg("H3 needs the triangle count n_t"))?;
            if delta < 3.0 - 1e-9 || d < 3 {
                return Err(Error::inapplicable("H3 needs degree >= 3 and d >= 3"));
            }
            let s = h3_index(spec, n_t);
            let (a, b) = (spec.theta(s), spec.theta(s + 1));
            let num = 2.0 * n_t - delta * (a + b + td) - a * b * td;
            let den = (delta - a) * (delta - b) * (delta - td);
            (n * num / den, Method::H3, vec![a, b, td])
        }
        _ => return Err(Error::arg(format!("closed forms exist for k = 1, 2, 3 only, got {k}"))),
    };
    let witness = normalized(&zeros, delta);
    Ok(BoundReport::new(k, bound, method, Some(witness), Applicability::AssertedByCaller, Covers::ALL))
}

/// [`closed_form_h`] with the instance's hypotheses checked and its triangle
/// count supplied.
pub fn closed_form_h_for(inst: &Instance, k: usize) -> Result<BoundReport> {
    let applicability = inst.applicability(k)?;
    let mut r = closed_form_h(inst.spectrum(), k, Some(inst.triangles()))?;
    r.applicability = applicability;
    Ok(r)
}

/// `α_k ≤ n(W(p) − λ(p)) / (p(λ_1) − λ(p))` for a regular graph and any
/// polynomial `p` of degree `k`, where `W(p)` is the largest diagonal entry
/// of `p(A)` and `λ(p)` the least value of `p` on the other eigenvalues.
pub fn ratio_type_general(g: &Graph, p: &Polynomial, tol: &Tolerances) -> Result<BoundReport> {
    if g.regular_degree().is_none() {
        return Err(Error::inapplicable("graph is not regular"));
    }
    if !g.is_connected() {
        return Err(Error::inapplicable("graph is disconnected"));
    }
    let spec = cluster(&eigensolve(g, tol.eig)?, tol.cluster);
    let pa = p.eval_on_matrix(g);
    let w = pa.diagonal().into_iter().fold(f64::NEG_INFINITY, f64::max);
    let top = p.eval(spec.theta(0));
    let lambda = spec.values()[1..].iter().map(|&t| p.eval(t)).fold(f64::INFINITY, f64::min);
    if !lambda.is_finite() || top <= lambda + 1e-12 {
        return Err(Error::inapplicable(format!(
            "p(λ_1) = {top} does not exceed λ(p) = {lambda}"
        )));
    }
    let bound = g.n() as f64 * (w - lambda) / (top - lambda);
    Ok(BoundReport::new(p.degree(), bound, Method::RatioGeneral, Some(p.clone()), Applicability::NotRequired, Covers::ALPHA))
}

/// Lovász theta of the cycle `C_n`: `n/2` for even n, else
/// `n cos(π/n) / (1 + cos(π/n))`.
pub fn cycle_theta(n: usize) -> f64 {
    assert!(n >= 3, "cycles need at least 3 vertices");
    if n.is_multiple_of(2) {
        n as f64 / 2.0
    } else {
        let c = (std::f64::consts::PI / n as f64).cos();
        n as f64 * c / (1.0 + c)
    }
}
