//! Dense two-phase tableau simplex with Bland's rule.
//!
//! Solves `min c·x` subject to `A x = b`, `x ≥ 0`.

use crate::error::{Error, Result};

pub const DEFAULT_TOL: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq)]
pub struct LinearProgram {
    c: Vec<f64>,
    a_eq: Vec<Vec<f64>>,
    b_eq: Vec<f64>,
}

impl LinearProgram {
    pub fn new(c: Vec<f64>, a_eq: Vec<Vec<f64>>, b_eq: Vec<f64>) -> Result<Self> {
        if a_eq.len() != b_eq.len() {
            return Err(Error::arg(format!("{} constraint rows but {} right-hand sides", a_eq.len(), b_eq.len())));
        }
        if let Some((i, row)) = a_eq.iter().enumerate().find(|(_, r)| r.len() != c.len()) {
            return Err(Error::arg(format!("row {i} has {} entries, expected {}", row.len(), c.len())));
        }
        let finite = c.iter().chain(&b_eq).chain(a_eq.iter().flatten()).all(|x| x.is_finite());
        if !finite {
            return Err(Error::arg("linear program has non-finite entries"));
        }
        Ok(LinearProgram { c, a_eq, b_eq })
    }

    pub fn vars(&self) -> usize {
        self.c.len()
    }

    pub fn constraints(&self) -> usize {
        self.b_eq.len()
    }

    pub fn objective(&self) -> &[f64] {
        &self.c
    }

    pub fn a_eq(&self) -> &[Vec<f64>] {
        &self.a_eq
    }

    pub fn b_eq(&self) -> &[f64] {
        &self.b_eq
    }

    pub fn solve(&self, tol: f64) -> Result<LpOutcome> {
        solve(self, tol)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LpOutcome {
    pub status: LpStatus,
    /// Objective value; meaningful only when optimal.
    pub value: f64,
    pub x: Vec<f64>,
    /// Equality-row multipliers `y = c_B B⁻¹` of the final basis.
    pub duals: Vec<f64>,
    pub iterations: usize,
}

impl LpOutcome {
    /// Re-checks an optimal outcome against the program from scratch:
    /// primal feasibility, dual feasibility of the reduced costs, and
    /// `b·y = c·x`.
    pub fn certify(&self, lp: &LinearProgram, tol: f64) -> Result<()> {
        if self.status != LpStatus::Optimal {
            return Err(Error::Numerical(format!("cannot certify a {:?} outcome", self.status)));
        }
        for (i, (row, b)) in lp.a_eq.iter().zip(&lp.b_eq).enumerate() {
            let lhs: f64 = row.iter().zip(&self.x).map(|(a, x)| a * x).sum();
            if (lhs - b).abs() > tol * (1.0 + b.abs()) {
                return Err(Error::Numerical(format!("row {i}: residual {}", lhs - b)));
            }
        }
        if let Some(j) = self.x.iter().position(|&x| x < -tol) {
            return Err(Error::Numerical(format!("x[{j}] = {} is negative", self.x[j])));
        }
        // tolerances scale with the magnitude of the terms being cancelled
        for j in 0..lp.vars() {
            let terms = lp.a_eq.iter().zip(&self.duals).map(|(r, y)| r[j] * y);
            let (sum, mag) = terms.fold((0.0, 0.0), |(s, m), t| (s + t, m + f64::abs(t)));
            let reduced = lp.c[j] - sum;
            if reduced < -tol * (1.0 + lp.c[j].abs() + mag) {
                return Err(Error::Numerical(format!("reduced cost of x[{j}] is {reduced}")));
            }
        }
        let primal: f64 = lp.c.iter().zip(&self.x).map(|(c, x)| c * x).sum();
        let dual: f64 = lp.b_eq.iter().zip(&self.duals).map(|(b, y)| b * y).sum();
        let mag: f64 = lp.b_eq.iter().zip(&self.duals).map(|(b, y)| (b * y).abs()).sum();
        if (primal - dual).abs() > tol * (1.0 + primal.abs() + mag) {
            return Err(Error::Numerical(format!("duality gap {} (primal {primal}, dual {dual})", primal - dual)));
        }
        Ok(())
    }
}

struct Tableau {
    /// `m` constraint rows followed by the reduced-cost row; the last column
    /// is the right-hand side (the cost row holds minus the objective).
    t: Vec<Vec<f64>>,
    basis: Vec<usize>,
    m: usize,
    cols: usize,
}

impl Tableau {
    fn pivot(&mut self, r: usize, col: usize) {
        let p = self.t[r][col];
        for v in self.t[r].iter_mut() {
            *v /= p;
        }
        let pivot_row = self.t[r].clone();
        for (i, row) in self.t.iter_mut().enumerate() {
            if i == r {
                continue;
            }
            let f = row[col];
            if f != 0.0 {
                for (v, pv) in row.iter_mut().zip(&pivot_row) {
                    *v -= f * pv;
                }
                row[col] = 0.0;
            }
        }
        self.basis[r] = col;
    }

    fn set_costs(&mut self, cost: &[f64]) {
        let m = self.m;
        let mut row = cost.to_vec();
        row.push(0.0);
        for i in 0..m {
            let cb = cost[self.basis[i]];
            if cb != 0.0 {
                for (v, a) in row.iter_mut().zip(&self.t[i]) {
                    *v -= cb * a;
                }
            }
        }
        self.t[m] = row;
    }

    /// Bland's rule iterations over columns `< allowed`.
    fn optimize(&mut self, allowed: usize, tol: f64, iters: &mut usize, cap: usize) -> Result<bool> {
        let m = self.m;
        let rhs = self.cols;
        loop {
            let Some(col) = (0..allowed).find(|&j| self.t[m][j] < -tol) else {
                return Ok(true);
            };
            let mut leave: Option<(usize, f64)> = None;
            for i in 0..m {
                let a = self.t[i][col];
                if a > tol {
                    let ratio = self.t[i][rhs] / a;
                    let better = match leave {
                        None => true,
                        Some((li, lr)) => {
                            ratio < lr - tol || (ratio <= lr + tol && self.basis[i] < self.basis[li])
                        }
                    };
                    if better {
                        leave = Some((i, ratio));
                    }
                }
            }
            let Some((r, _)) = leave else {
                return Ok(false);
            };
            *iters += 1;
            if *iters > cap {
                return Err(Error::Numerical(format!("simplex exceeded {cap} iterations")));
            }
            self.pivot(r, col);
        }
    }
}

pub fn solve(lp: &LinearProgram, tol: f64) -> Result<LpOutcome> {
    if !(tol > 0.0) {
        return Err(Error::arg("tolerance must be positive"));
    }
    let n = lp.vars();
    let m = lp.constraints();
    let cols = n + m;
    let cap = 10 * (n + m) * (n + m) + 10;

    let signs: Vec<f64> = lp.b_eq.iter().map(|&b| if b < 0.0 { -1.0 } else { 1.0 }).collect();
    let mut t = Vec::with_capacity(m + 1);
    for i in 0..m {
        let mut row = Vec::with_capacity(cols + 1);
        row.extend(lp.a_eq[i].iter().map(|a| a * signs[i]));
        row.extend((0..m).map(|j| if i == j { 1.0 } else { 0.0 }));
        row.push(lp.b_eq[i] * signs[i]);
        t.push(row);
    }
    t.push(vec![0.0; cols + 1]);
    let mut tab = Tableau { t, basis: (n..cols).collect(), m, cols };
    let mut iterations = 0;

    let phase1: Vec<f64> = (0..cols).map(|j| if j < n { 0.0 } else { 1.0 }).collect();
    tab.set_costs(&phase1);
    tab.optimize(n, tol, &mut iterations, cap)?;
    let infeasibility = -tab.t[m][cols];
    let bscale = 1.0 + lp.b_eq.iter().fold(0.0f64, |s, b| s.max(b.abs()));
    if infeasibility > tol * bscale {
        return Ok(LpOutcome {
            status: LpStatus::Infeasible,
            value: f64::NAN,
            x: vec![0.0; n],
            duals: vec![0.0; m],
            iterations,
        });
    }

    // drive zero-level artificials out of the basis where possible; rows
    // with no usable pivot are redundant and keep their artificial at zero
    for r in 0..m {
        if tab.basis[r] >= n {
            if let Some(col) = (0..n).find(|&j| tab.t[r][j].abs() > tol) {
                tab.pivot(r, col);
            }
        }
    }

    let phase2: Vec<f64> = lp.c.iter().copied().chain(std::iter::repeat_n(0.0, m)).collect();
    tab.set_costs(&phase2);
    let bounded = tab.optimize(n, tol, &mut iterations, cap)?;

    let mut x = vec![0.0; n];
    for (r, &b) in tab.basis.iter().enumerate() {
        if b < n {
            x[b] = tab.t[r][cols];
        }
    }
    let duals = (0..m).map(|i| -tab.t[m][n + i] * signs[i]).collect();
    let value = lp.c.iter().zip(&x).map(|(c, x)| c * x).sum();
    let status = if bounded { LpStatus::Optimal } else { LpStatus::Unbounded };
    Ok(LpOutcome { status, value, x, duals, iterations })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lp(c: &[f64], a: &[&[f64]], b: &[f64]) -> LinearProgram {
        LinearProgram::new(c.to_vec(), a.iter().map(|r| r.to_vec()).collect(), b.to_vec()).unwrap()
    }

    #[test]
    fn trivial_programs() {
        let p = lp(&[1.0], &[], &[]);
        let out = p.solve(DEFAULT_TOL).unwrap();
        assert_eq!(out.status, LpStatus::Optimal);
        assert_eq!((out.value, out.x.clone()), (0.0, vec![0.0]));
        out.certify(&p, 1e-9).unwrap();

        let p = lp(&[1.0, 1.0], &[&[1.0, 2.0]], &[2.0]);
        let out = p.solve(DEFAULT_TOL).unwrap();
        assert_eq!(out.status, LpStatus::Optimal);
        assert!((out.value - 1.0).abs() < 1e-12);
        assert!((out.x[0]).abs() < 1e-12 && (out.x[1] - 1.0).abs() < 1e-12);
        assert!((out.duals[0] - 0.5).abs() < 1e-12);
        out.certify(&p, 1e-9).unwrap();
    }

    #[test]
    fn infeasible_and_unbounded() {
        let p = lp(&[1.0, 1.0], &[&[1.0, 1.0]], &[-1.0]);
        assert_eq!(p.solve(DEFAULT_TOL).unwrap().status, LpStatus::Infeasible);

        let p = lp(&[-1.0, 0.0], &[&[1.0, -1.0]], &[1.0]);
        assert_eq!(p.solve(DEFAULT_TOL).unwrap().status, LpStatus::Unbounded);
    }

    #[test]
    fn redundant_and_negated_rows() {
        // second row duplicates the first, third is the first negated
        let p = lp(
            &[2.0, 1.0, 3.0],
            &[&[1.0, 1.0, 1.0], &[2.0, 2.0, 2.0], &[-1.0, -1.0, -1.0], &[1.0, -1.0, 0.0]],
            &[4.0, 8.0, -4.0, 0.0],
        );
        let out = p.solve(DEFAULT_TOL).unwrap();
        assert_eq!(out.status, LpStatus::Optimal);
        assert!((out.value - 6.0).abs() < 1e-12, "{out:?}");
        out.certify(&p, 1e-9).unwrap();
    }

    #[test]
    fn dimension_errors() {
        assert!(LinearProgram::new(vec![1.0], vec![vec![1.0, 2.0]], vec![1.0]).is_err());
        assert!(LinearProgram::new(vec![1.0], vec![vec![1.0]], vec![]).is_err());
        assert!(LinearProgram::new(vec![f64::NAN], vec![], vec![]).is_err());
    }

    #[test]
    fn degenerate_cycling_example() {
        // Beale's example, which cycles under the largest-coefficient rule
        let p = lp(
            &[-0.75, 150.0, -0.02, 6.0, 0.0, 0.0, 0.0],
            &[
                &[0.25, -60.0, -0.04, 9.0, 1.0, 0.0, 0.0],
                &[0.5, -90.0, -0.02, 3.0, 0.0, 1.0, 0.0],
                &[0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0],
            ],
            &[0.0, 0.0, 1.0],
        );
        let out = p.solve(DEFAULT_TOL).unwrap();
        assert_eq!(out.status, LpStatus::Optimal);
        assert!((out.value + 0.05).abs() < 1e-12);
        out.certify(&p, 1e-9).unwrap();
    }

    /// Minimum over all basic feasible solutions, by Gaussian elimination on
    /// every column subset of size m.
    fn brute_force(p: &LinearProgram) -> Option<f64> {
        let (n, m) = (p.vars(), p.constraints());
        let mut best: Option<f64> = None;
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != m {
                continue;
            }
            let cols: Vec<usize> = (0..n).filter(|&j| mask >> j & 1 == 1).collect();
            let mut a: Vec<Vec<f64>> = (0..m)
                .map(|i| cols.iter().map(|&j| p.a_eq[i][j]).chain([p.b_eq[i]]).collect())
                .collect();
            let mut ok = true;
            for c in 0..m {
                let piv = (c..m).max_by(|&x, &y| a[x][c].abs().total_cmp(&a[y][c].abs())).unwrap();
                if a[piv][c].abs() < 1e-9 {
                    ok = false;
                    break;
                }
                a.swap(c, piv);
                for r in 0..m {
                    if r != c {
                        let f = a[r][c] / a[c][c];
                        for k in c..=m {
                            a[r][k] -= f * a[c][k];
                        }
                    }
                }
            }
            if !ok {
                continue;
            }
            let xb: Vec<f64> = (0..m).map(|i| a[i][m] / a[i][i]).collect();
            if xb.iter().all(|&x| x >= -1e-9) {
                let v: f64 = cols.iter().zip(&xb).map(|(&j, x)| p.c[j] * x).sum();
                best = Some(best.map_or(v, |b: f64| b.min(v)));
            }
        }
        best
    }

    fn arb_feasible_lp() -> impl Strategy<Value = LinearProgram> {
        (2usize..=12, 1usize..=5).prop_flat_map(|(n, m)| {
            let m = m.min(n - 1).max(1);
            (
                proptest::collection::vec(proptest::collection::vec(-5i32..=5, n), m),
                proptest::collection::vec(0i32..=3, n),
                proptest::collection::vec(-3i32..=3, m),
                proptest::collection::vec(0i32..=4, n),
            )
                .prop_map(move |(a, x0, y, r)| {
                    let a: Vec<Vec<f64>> = a.iter().map(|row| row.iter().map(|&v| v as f64).collect()).collect();
                    let b = a.iter().map(|row| row.iter().zip(&x0).map(|(a, &x)| a * x as f64).sum()).collect();
                    // c = Aᵀy + r with r ≥ 0 keeps the dual feasible, so an optimum exists
                    let c = (0..n)
                        .map(|j| (0..m).map(|i| a[i][j] * y[i] as f64).sum::<f64>() + r[j] as f64)
                        .collect();
                    LinearProgram::new(c, a, b).unwrap()
                })
        })
    }

    proptest! {
        #[test]
        fn matches_vertex_enumeration(p in arb_feasible_lp()) {
            let out = p.solve(DEFAULT_TOL).unwrap();
            prop_assert_eq!(out.status, LpStatus::Optimal);
            out.certify(&p, 1e-7).unwrap();
            if let Some(best) = brute_force(&p) {
                prop_assert!((out.value - best).abs() < 1e-7 * (1.0 + best.abs()), "{} vs {}", out.value, best);
            }
        }
    }
}
