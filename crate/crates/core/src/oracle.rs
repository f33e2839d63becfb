//! Exact independence numbers for small graphs and the verdict that combines
//! them with the spectral upper bounds.

use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::graph::{power, strong_product, Graph};
use crate::report::{BoundReport, FLOOR_EPS};

pub const DEFAULT_BUDGET: u64 = 50_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MisResult {
    pub size: usize,
    pub witness: Vec<usize>,
    pub nodes_explored: u64,
    /// The search stopped early; `size` is only a lower bound.
    pub timed_out: bool,
}

struct Search<'a> {
    g: &'a Graph,
    budget: u64,
    nodes: u64,
    best: Vec<usize>,
    stack: Vec<usize>,
    timed_out: bool,
}

impl Search<'_> {
    /// Greedy clique cover of `p`: each clique keeps the common
    /// neighbourhood of its members.
    fn clique_cover(&self, p: &Bitset) -> usize {
        let mut common: Vec<Bitset> = Vec::new();
        for v in p.iter() {
            match common.iter_mut().find(|c| c.contains(v)) {
                Some(c) => c.intersect_with(self.g.neighbors(v)),
                None => common.push(self.g.neighbors(v).clone()),
            }
        }
        common.len()
    }

    fn run(&mut self, mut p: Bitset) {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.timed_out = true;
            return;
        }
        let depth = self.stack.len();
        // vertices with no neighbour left are always taken
        let mut branch = None;
        let mut max_deg = 0;
        let isolated: Vec<usize> = p
            .iter()
            .filter(|&v| {
                let deg = self.g.neighbors(v).intersection_count(&p);
                if deg > max_deg {
                    max_deg = deg;
                    branch = Some(v);
                }
                deg == 0
            })
            .collect();
        for v in isolated {
            p.remove(v);
            self.stack.push(v);
        }
        if self.stack.len() > self.best.len() {
            self.best = self.stack.clone();
        }
        if let Some(v) = branch {
            if self.stack.len() + self.clique_cover(&p) > self.best.len() {
                let mut with = p.clone();
                with.difference_with(self.g.neighbors(v));
                with.remove(v);
                self.stack.push(v);
                self.run(with);
                self.stack.pop();
                if !self.timed_out {
                    p.remove(v);
                    self.run(p);
                }
            }
        }
        self.stack.truncate(depth);
    }
}

/// Maximum independent set by branch and bound: branch on a vertex of
/// maximum degree in the candidate set, prune with a greedy clique cover.
pub fn max_independent_set(g: &Graph, budget: u64) -> MisResult {
    let mut s = Search { g, budget, nodes: 0, best: Vec::new(), stack: Vec::new(), timed_out: false };
    s.run(Bitset::full(g.n()));
    let mut witness = s.best;
    witness.sort_unstable();
    assert!(g.is_independent(&witness), "branch and bound produced a dependent set");
    MisResult { size: witness.len(), witness, nodes_explored: s.nodes, timed_out: s.timed_out }
}

/// `α_k(G) = α(G^k)`.
pub fn alpha_k(g: &Graph, k: usize, budget: u64) -> Result<MisResult> {
    Ok(max_independent_set(&power(g, k)?, budget))
}

#[derive(Clone, Debug, PartialEq)]
pub struct CapacityLowerBound {
    /// `max_t α(G^{⊠t})^{1/t}`.
    pub value: f64,
    /// `α(G^{⊠t})` for `t = 1..=levels`.
    pub alphas: Vec<usize>,
    pub timed_out: bool,
}

/// Lower bound on `Θ(G)` from strong powers up to `levels ∈ {1, 2}`.
pub fn capacity_lower_bound(g: &Graph, levels: usize, budget: u64) -> Result<CapacityLowerBound> {
    if !(1..=2).contains(&levels) {
        return Err(Error::arg(format!("levels must be 1 or 2, got {levels}")));
    }
    let one = max_independent_set(g, budget);
    let mut out = CapacityLowerBound { value: one.size as f64, alphas: vec![one.size], timed_out: one.timed_out };
    if levels == 2 {
        let two = max_independent_set(&strong_product(g, g), budget);
        out.value = out.value.max((two.size as f64).sqrt());
        out.alphas.push(two.size);
        out.timed_out |= two.timed_out;
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq)]
pub struct Verdict {
    pub k: usize,
    pub alpha: MisResult,
    /// Best certified lower bound on `Θ(G^k)`.
    pub lower: f64,
    /// Smallest applicable upper bound on `Θ(G^k)`.
    pub upper: f64,
    /// `Θ(G^k)` when the bounds meet.
    pub capacity: Option<f64>,
    /// `ϑ(G^k)` when a theta-covering bound meets the lower bound.
    pub theta: Option<f64>,
    /// The oracle ran out of budget.
    pub inconclusive: bool,
}

impl Verdict {
    pub fn is_determined(&self) -> bool {
        self.capacity.is_some()
    }
}

/// Sandwiches `Θ(G^k)` between the exact `α_k` (and, with `levels = 2`, the
/// strong-square lower bound of `G^k`) and the ratio- and rank-type bounds.
/// Fails if a bound lies below the lower end, which would contradict
/// `α_k ≤ Θ(G^k) ≤ ϑ(G^k) ≤ tr f_k(A)`.
pub fn sandwich_verdict(
    g: &Graph,
    k: usize,
    ratio: Option<&BoundReport>,
    rank: Option<&BoundReport>,
    levels: usize,
    budget: u64,
) -> Result<Verdict> {
    let gk = power(g, k)?;
    let cap = capacity_lower_bound(&gk, levels, budget)?;
    let alpha = max_independent_set(&gk, budget);
    let lower = cap.value.max(alpha.size as f64);
    let inconclusive = alpha.timed_out || cap.timed_out;

    let mut upper = g.n() as f64;
    for b in [ratio, rank].into_iter().flatten() {
        if b.k != k {
            return Err(Error::arg(format!("bound computed for k = {}, verdict asked for k = {k}", b.k)));
        }
        if b.bound + FLOOR_EPS < lower {
            return Err(Error::Numerical(format!(
                "{} bound {} lies below the lower bound {lower} at k = {k}",
                b.method, b.bound
            )));
        }
        upper = upper.min(b.bound);
    }

    let meets = |x: f64| (x - lower).abs() <= FLOOR_EPS;
    let capacity = (!inconclusive && meets(upper)).then_some(lower);
    let theta = ratio.filter(|r| !inconclusive && r.covers.theta && meets(r.bound)).map(|_| lower);
    Ok(Verdict { k, alpha, lower, upper, capacity, theta, inconclusive })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::catalog;
    use crate::graph::tests::arb_graph;
    use crate::minorlp::ratio_type_bound;
    use crate::report::{Instance, Tolerances};
    use crate::shannon::{rank_type_bound, Search as ShannonSearch};
    use proptest::prelude::*;

    fn brute_alpha(g: &Graph) -> usize {
        let n = g.n();
        (0u32..1 << n)
            .filter(|&mask| {
                (0..n).all(|u| mask >> u & 1 == 0 || (u + 1..n).all(|v| mask >> v & 1 == 0 || !g.has_edge(u, v)))
            })
            .map(|mask| mask.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    fn coxeter() -> Graph {
        // Kneser graph KG(7,3) minus the seven lines of a Fano plane
        let lines: Vec<[usize; 3]> =
            vec![[0, 1, 2], [0, 3, 4], [0, 5, 6], [1, 3, 5], [1, 4, 6], [2, 3, 6], [2, 4, 5]];
        let mut triples = Vec::new();
        for a in 0..7 {
            for b in a + 1..7 {
                for c in b + 1..7 {
                    if !lines.contains(&[a, b, c]) {
                        triples.push([a, b, c]);
                    }
                }
            }
        }
        Graph::from_fn(triples.len(), |u, v| triples[u].iter().all(|x| !triples[v].contains(x)))
    }

    #[test]
    fn small_examples() {
        assert_eq!(max_independent_set(&catalog("petersen", &[]).unwrap(), DEFAULT_BUDGET).size, 4);
        assert_eq!(max_independent_set(&catalog("complete", &[6]).unwrap(), DEFAULT_BUDGET).size, 1);
        let c5 = catalog("cycle", &[5]).unwrap();
        let sq = max_independent_set(&strong_product(&c5, &c5), DEFAULT_BUDGET);
        assert_eq!(sq.size, 5);
        assert!(!sq.timed_out);
        assert_eq!(max_independent_set(&Graph::empty(0), DEFAULT_BUDGET).size, 0);
        assert_eq!(max_independent_set(&Graph::empty(7), DEFAULT_BUDGET).size, 7);
    }

    #[test]
    fn alpha_k_examples() {
        let cox = coxeter();
        assert_eq!(cox.n(), 28);
        let alphas: Vec<usize> = (1..=4).map(|k| alpha_k(&cox, k, DEFAULT_BUDGET).unwrap().size).collect();
        assert_eq!(alphas, vec![12, 7, 4, 1]);
        assert_eq!(alpha_k(&catalog("cycle", &[19]).unwrap(), 5, DEFAULT_BUDGET).unwrap().size, 3);
        assert!(alpha_k(&cox, 0, DEFAULT_BUDGET).is_err());
    }

    #[test]
    fn budget_exhaustion_keeps_incumbent() {
        let g = strong_product(&catalog("cycle", &[7]).unwrap(), &catalog("cycle", &[7]).unwrap());
        let r = max_independent_set(&g, 3);
        assert!(r.timed_out);
        assert!(g.is_independent(&r.witness));
        assert!(r.size <= 10);
    }

    #[test]
    fn capacity_bounds() {
        let c5 = catalog("cycle", &[5]).unwrap();
        let lb = capacity_lower_bound(&c5, 2, DEFAULT_BUDGET).unwrap();
        assert!((lb.value - 5f64.sqrt()).abs() < 1e-12);
        assert_eq!(lb.alphas, vec![2, 5]);
        let k4 = catalog("complete", &[4]).unwrap();
        assert_eq!(capacity_lower_bound(&k4, 2, DEFAULT_BUDGET).unwrap().value, 1.0);
        let pet = catalog("petersen", &[]).unwrap();
        assert_eq!(capacity_lower_bound(&pet, 1, DEFAULT_BUDGET).unwrap().value, 4.0);
        assert!(capacity_lower_bound(&pet, 3, DEFAULT_BUDGET).is_err());
    }

    #[test]
    fn superadditivity() {
        for (name, p) in [("cycle", vec![5]), ("cycle", vec![7]), ("complete", vec![3]), ("hypercube", vec![3])] {
            let g = catalog(name, &p).unwrap();
            let lb = capacity_lower_bound(&g, 2, DEFAULT_BUDGET).unwrap();
            assert!(lb.alphas[1] >= lb.alphas[0] * lb.alphas[0], "{name}{p:?}");
        }
    }

    #[test]
    fn verdicts() {
        let tol = Tolerances::default();
        let inst = Instance::from_graph(coxeter(), &tol).unwrap();
        let g = inst.graph().unwrap();
        for (k, determined) in [(1, false), (2, true), (3, true), (4, true)] {
            let ratio = ratio_type_bound(&inst, k, &tol).unwrap();
            let rank = rank_type_bound(&inst, k, ShannonSearch::Greedy).unwrap();
            let v = sandwich_verdict(g, k, Some(&ratio), Some(&rank), 1, DEFAULT_BUDGET).unwrap();
            assert_eq!(v.is_determined(), determined, "k={k}");
            assert!(v.lower <= v.upper + FLOOR_EPS);
            if k == 1 {
                assert_eq!(v.lower, 12.0);
                assert!((v.upper - 12.4852).abs() < 5e-4);
            }
        }

        let c5 = Instance::from_graph(catalog("cycle", &[5]).unwrap(), &tol).unwrap();
        let ratio = ratio_type_bound(&c5, 1, &tol).unwrap();
        let v = sandwich_verdict(c5.graph().unwrap(), 1, Some(&ratio), None, 2, DEFAULT_BUDGET).unwrap();
        assert!((v.capacity.unwrap() - 5f64.sqrt()).abs() < 1e-9);
        assert!(v.theta.is_some());

        let q3 = Instance::from_graph(catalog("hypercube", &[3]).unwrap(), &tol).unwrap();
        let ratio = ratio_type_bound(&q3, 2, &tol).unwrap();
        let v = sandwich_verdict(q3.graph().unwrap(), 2, Some(&ratio), None, 1, DEFAULT_BUDGET).unwrap();
        assert_eq!(v.capacity, Some(2.0));
    }

    #[test]
    fn verdict_rejects_bound_below_alpha() {
        let tol = Tolerances::default();
        let inst = Instance::from_graph(catalog("petersen", &[]).unwrap(), &tol).unwrap();
        let mut bogus = ratio_type_bound(&inst, 1, &tol).unwrap();
        bogus.bound = 3.0;
        let r = sandwich_verdict(inst.graph().unwrap(), 1, Some(&bogus), None, 1, DEFAULT_BUDGET);
        assert!(matches!(r, Err(Error::Numerical(_))));
    }

    proptest! {
        #[test]
        fn matches_brute_force(g in arb_graph(14)) {
            let r = max_independent_set(&g, DEFAULT_BUDGET);
            prop_assert!(!r.timed_out);
            prop_assert!(g.is_independent(&r.witness));
            prop_assert_eq!(r.size, brute_alpha(&g));
        }

        #[test]
        fn alpha_k_non_increasing(g in arb_graph(12)) {
            let mut prev = usize::MAX;
            for k in 1..=4 {
                let a = alpha_k(&g, k, DEFAULT_BUDGET).unwrap().size;
                prop_assert!(a <= prev);
                prev = a;
            }
        }
    }
}
