//! Shannon polynomials: degree-k polynomials vanishing on as many eigenvalues
//! (counted with multiplicity) as possible, normalized to trace one. Their
//! rank on the adjacency matrix bounds the capacity of `G^k`.

use std::collections::{BTreeSet, BinaryHeap};
use std::cmp::{Ordering, Reverse};

use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, Graph};
use crate::matrix::DenseMatrix;
use crate::poly::Polynomial;
use crate::report::{Applicability, BoundReport, Covers, Instance, Method};
use crate::spectra::{srg_spectrum, Spectrum, SrgParams};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Search {
    Greedy,
    Exhaustive,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ShannonSolution {
    pub k: usize,
    /// Indices of the zeros, ascending.
    pub zeros: Vec<usize>,
    /// `1 / T`.
    pub gamma: f64,
    pub poly: Polynomial,
    /// `Σ m_i Π_{j ∈ I} (θ_i − θ_j)`.
    pub t: f64,
    /// `n − Σ_{i ∈ I} m_i`.
    pub rank: usize,
    pub search: Search,
}

impl ShannonSolution {
    /// Does the zero set contain the principal eigenvalue?
    pub fn vanishes_at_principal(&self) -> bool {
        self.zeros.first() == Some(&0)
    }

    /// `s_k(θ_i)` for every distinct eigenvalue.
    pub fn values(&self, spec: &Spectrum) -> Vec<f64> {
        let theta = spec.values();
        theta.iter().map(|&t| self.gamma * self.zeros.iter().map(|&j| t - theta[j]).product::<f64>()).collect()
    }
}

/// `(T, scale)` for a zero set, where `scale = Σ m_i Π |θ_i − θ_j|`.
fn normalizer(spec: &Spectrum, zeros: &[usize]) -> (f64, f64) {
    let theta = spec.values();
    let mut t = 0.0;
    let mut scale = 0.0;
    for (i, &m) in spec.mults().iter().enumerate() {
        let p: f64 = zeros.iter().map(|&j| theta[i] - theta[j]).product();
        t += m as f64 * p;
        scale += m as f64 * p.abs();
    }
    (t, scale)
}

fn nonzero(spec: &Spectrum, zeros: &[usize]) -> Option<f64> {
    let (t, scale) = normalizer(spec, zeros);
    (t.abs() > 1e-7 * scale).then_some(t)
}

fn build(spec: &Spectrum, k: usize, mut zeros: Vec<usize>, t: f64, search: Search) -> ShannonSolution {
    zeros.sort_unstable();
    let roots: Vec<f64> = zeros.iter().map(|&j| spec.theta(j)).collect();
    let covered: usize = zeros.iter().map(|&j| spec.mult(j)).sum();
    ShannonSolution {
        k,
        gamma: 1.0 / t,
        poly: Polynomial::from_roots(&roots, 1.0 / t),
        t,
        rank: spec.n() - covered,
        zeros,
        search,
    }
}

fn check_k(spec: &Spectrum, k: usize) -> Result<usize> {
    if k == 0 {
        return Err(Error::arg("Shannon polynomials need k >= 1"));
    }
    Ok(k.min(spec.d()))
}

/// Candidate in the greedy descent: positions into the multiplicity order.
#[derive(PartialEq, Eq)]
struct Node {
    sum: usize,
    indices: Vec<usize>,
    positions: Vec<usize>,
}

impl Ord for Node {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sum.cmp(&other.sum).then_with(|| Reverse(&self.indices).cmp(&Reverse(&other.indices)))
    }
}

impl PartialOrd for Node {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Algorithm of the multiplicity ordering: take the `k` eigenvalues of
/// largest multiplicity (ties toward larger eigenvalues) as zeros; if the
/// normalizer vanishes, descend through zero sets in decreasing order of
/// covered multiplicity until one does not.
pub fn shannon_greedy(spec: &Spectrum, k: usize) -> Result<ShannonSolution> {
    let k = check_k(spec, k)?;
    let d = spec.d();
    let mut order: Vec<usize> = (0..=d).collect();
    order.sort_by(|&a, &b| spec.mult(b).cmp(&spec.mult(a)).then(a.cmp(&b)));

    let node = |positions: Vec<usize>| {
        let mut indices: Vec<usize> = positions.iter().map(|&p| order[p]).collect();
        indices.sort_unstable();
        let sum = indices.iter().map(|&i| spec.mult(i)).sum();
        Node { sum, indices, positions }
    };

    let mut heap = BinaryHeap::new();
    let mut seen = BTreeSet::new();
    let start: Vec<usize> = (0..k).collect();
    seen.insert(start.clone());
    heap.push(node(start));

    while let Some(top) = heap.pop() {
        // gather every zero set with this covered multiplicity so that ties
        // resolve lexicographically
        let level = top.sum;
        let mut batch = vec![top];
        let mut cursor = 0;
        while cursor < batch.len() {
            let positions = batch[cursor].positions.clone();
            cursor += 1;
            for j in 0..k {
                let next = positions[j] + 1;
                let limit = if j + 1 < k { positions[j + 1] } else { d + 1 };
                if next < limit {
                    let mut child = positions.clone();
                    child[j] = next;
                    if seen.insert(child.clone()) {
                        heap.push(node(child));
                    }
                }
            }
            while heap.peek().is_some_and(|n| n.sum == level) {
                batch.push(heap.pop().unwrap());
            }
        }
        batch.sort_by(|a, b| a.indices.cmp(&b.indices));
        for cand in batch {
            if let Some(t) = nonzero(spec, &cand.indices) {
                return Ok(build(spec, k, cand.indices, t, Search::Greedy));
            }
        }
    }
    Err(Error::Numerical(format!("every zero set of size {k} has a vanishing normalizer")))
}

/// Maximizes covered multiplicity over all size-k zero sets in `0..=d`,
/// ties toward the lexicographically smallest index set.
pub fn shannon_exhaustive(spec: &Spectrum, k: usize) -> Result<ShannonSolution> {
    let k = check_k(spec, k)?;
    let d = spec.d();
    if d > 20 {
        return Err(Error::arg(format!("exhaustive search supports d <= 20, got {d}")));
    }
    let mut best: Option<(usize, Vec<usize>, f64)> = None;
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        let sum: usize = cur.iter().map(|&i| spec.mult(i)).sum();
        if best.as_ref().is_none_or(|(s, _, _)| sum > *s) {
            if let Some(t) = nonzero(spec, &cur) {
                best = Some((sum, cur.clone(), t));
            }
        }
        let Some(i) = (0..k).rev().find(|&i| cur[i] < d + 1 - k + i) else { break };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
    let (_, zeros, t) =
        best.ok_or_else(|| Error::Numerical(format!("every zero set of size {k} has a vanishing normalizer")))?;
    Ok(build(spec, k, zeros, t, Search::Exhaustive))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FitCheck {
    pub min_abs_diag: f64,
    pub fits: bool,
}

/// `γ Π (A − θ_j I)` for the solution's zero set.
pub fn shannon_matrix(sol: &ShannonSolution, spec: &Spectrum, g: &Graph) -> DenseMatrix {
    let a = g.adjacency_matrix();
    let mut b = DenseMatrix::identity(g.n());
    for &j in &sol.zeros {
        let mut shifted = a.clone();
        shifted.add_diagonal(-spec.theta(j));
        b = b.matmul(&shifted);
    }
    let mut out = DenseMatrix::zeros(g.n());
    for u in 0..g.n() {
        for v in 0..g.n() {
            out[(u, v)] = sol.gamma * b[(u, v)];
        }
    }
    out
}

/// Diagonal test with threshold `1e−8 · max |b_ii|`.
pub fn fit_check(b: &DenseMatrix) -> FitCheck {
    let diag = b.diagonal();
    let max = diag.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    let min = diag.iter().fold(f64::INFINITY, |m, x| m.min(x.abs()));
    FitCheck { min_abs_diag: min, fits: max > 0.0 && min > 1e-8 * max }
}

/// `Θ(G^k) ≤ rank s_k(A) = n − Σ_{i∈I} m_i`. With a graph attached the
/// fitting matrix is built and its diagonal checked; otherwise the
/// hypotheses are the caller's claim.
pub fn rank_type_bound(inst: &Instance, k: usize, search: Search) -> Result<BoundReport> {
    let spec = inst.spectrum();
    if k == 0 {
        return Ok(BoundReport::new(0, spec.n() as f64, Method::Rank, None, Applicability::NotRequired, Covers::CAPACITY));
    }
    let sol = match search {
        Search::Greedy => shannon_greedy(spec, k)?,
        Search::Exhaustive => shannon_exhaustive(spec, k)?,
    };
    let applicability = match inst.graph() {
        None => {
            if spec.mult(0) != 1 {
                return Err(Error::inapplicable("largest eigenvalue is not simple; not a connected regular graph"));
            }
            Applicability::AssertedByCaller
        }
        Some(g) => {
            if !g.is_connected() {
                return Err(Error::inapplicable("graph is disconnected"));
            }
            let fit = fit_check(&shannon_matrix(&sol, spec, g));
            if !fit.fits {
                return Err(Error::inapplicable(format!(
                    "s_{k}(A) has a vanishing diagonal entry (min |b_ii| = {:e})",
                    fit.min_abs_diag
                )));
            }
            Applicability::FitVerified { min_abs_diag: fit.min_abs_diag }
        }
    };
    Ok(BoundReport::new(k, sol.rank as f64, Method::Rank, Some(sol.poly), applicability, Covers::CAPACITY))
}

/// `min{1 + m(θ) if τ ≠ 0, 1 + m(τ) if θ ≠ 0}`: ranks of `A − τI` and
/// `A − θI`, which fit a strongly regular graph whenever their diagonal
/// is nonzero.
pub fn haemers_srg(p: &SrgParams) -> Result<BoundReport> {
    let spec = srg_spectrum(p)?;
    let (theta, tau) = (spec.theta(1), spec.theta(2));
    let mut best: Option<(usize, f64)> = None;
    for (rank, shift) in [(1 + spec.mult(1), tau), (1 + spec.mult(2), theta)] {
        if shift.abs() > 1e-9 && best.is_none_or(|(r, _)| rank < r) {
            best = Some((rank, shift));
        }
    }
    let (rank, shift) = best.ok_or_else(|| Error::inapplicable("both restricted eigenvalues vanish"))?;
    let witness = Polynomial::new(vec![-shift, 1.0]);
    Ok(BoundReport::new(1, rank as f64, Method::Haemers, Some(witness), Applicability::NotRequired, Covers::CAPACITY))
}

/// The smaller of the degree-one Shannon rank and, for strongly regular
/// graphs, [`haemers_srg`].
pub fn haemers_rank(inst: &Instance) -> Result<BoundReport> {
    let mut best = rank_type_bound(inst, 1, Search::Greedy)?;
    best.method = Method::Haemers;
    if let Some((n, k, a, c)) = inst.graph().and_then(Graph::strongly_regular_parameters) {
        let srg = haemers_srg(&SrgParams::new(n, k, a, c)?)?;
        if srg.bound < best.bound {
            best = srg;
        }
    }
    Ok(best)
}

/// Parameters of the strongly regular graph on the points of an elliptic
/// quadric in `PG(5, q)`: `((q³+1)(q+1), q(q²+1); q−1, q²+1)`.
pub fn elliptic_quadric_srg(q: usize) -> Result<SrgParams> {
    if q < 2 {
        return Err(Error::arg("q must be at least 2"));
    }
    SrgParams::new((q * q * q + 1) * (q + 1), q * (q * q + 1), q - 1, q * q + 1)
}

/// Rank by Gaussian elimination with full pivoting; pivots at or below
/// `tol · n · max |m_ij|` count as zero.
pub fn numeric_rank(m: &DenseMatrix, tol: f64) -> usize {
    let n = m.n();
    let threshold = tol * n as f64 * m.max_abs();
    let mut a: Vec<Vec<f64>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut rank = 0;
    for step in 0..n {
        let mut best = (step, step, 0.0f64);
        for (i, row) in a.iter().enumerate().skip(step) {
            for (j, &v) in row.iter().enumerate().skip(step) {
                if v.abs() > best.2 {
                    best = (i, j, v.abs());
                }
            }
        }
        if best.2 <= threshold {
            break;
        }
        a.swap(step, best.0);
        for row in a.iter_mut() {
            row.swap(step, best.1);
        }
        let pivot_row = a[step].clone();
        for row in a.iter_mut().skip(step + 1) {
            let f = row[step] / pivot_row[step];
            if f != 0.0 {
                for (v, p) in row.iter_mut().zip(&pivot_row).skip(step) {
                    *v -= f * p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Largest entry of `b` at vertex pairs more than `k` apart.
pub fn max_entry_beyond(b: &DenseMatrix, g: &Graph, k: usize) -> f64 {
    let dist = all_pairs_distances(g);
    let mut worst = 0.0f64;
    for u in 0..g.n() {
        for v in 0..g.n() {
            if dist.get(u, v) as usize > k {
                worst = worst.max(b[(u, v)].abs());
            }
        }
    }
    worst
}
