//! Regeneration of the reference tables with a cell-by-cell diff against the
//! values stored in `data/`.

use std::path::Path;

use capbound_core::graph::catalog;
use capbound_core::minorlp::{closed_form_h, ratio_type_bound};
use capbound_core::oracle::alpha_k;
use capbound_core::shannon::{haemers_srg, rank_type_bound};
use capbound_core::spectra::srg_spectrum;
use capbound_core::thetaio::{import_solution, in_cage, GAP_WARN};
use capbound_core::{Error, Graph, Instance, Manifest, Result, Search, SrgParams, Tolerances};

use crate::args::TableName;
use crate::output::{num, Table};

const COXETER: &str = include_str!("../data/coxeter.tsv");
const SRG: &str = include_str!("../data/srg.tsv");
const CYCLES: &str = include_str!("../data/cycles.tsv");
const NAMED: &str = include_str!("../data/named.tsv");

/// Tolerance on the one non-integral reference value.
pub const TRACE_TOL: f64 = 5e-4;
/// Slack allowed when an integral trace is floored.
pub const INT_TOL: f64 = 1e-6;

#[derive(Clone, Debug, Default)]
pub struct TableReport {
    pub table: Table,
    pub checked: usize,
    pub mismatches: Vec<String>,
    pub skipped: Vec<String>,
}

impl TableReport {
    pub fn summary(&self, title: &str) -> String {
        let mut s = format!(
            "{title}: {} rows, {} cells checked, {} mismatches, {} skipped\n",
            self.table.rows.len(),
            self.checked,
            self.mismatches.len(),
            self.skipped.len()
        );
        for m in &self.mismatches {
            s += &format!("  MISMATCH {m}\n");
        }
        for m in &self.skipped {
            s += &format!("  skipped {m}\n");
        }
        s
    }

    fn expect_int(&mut self, row: &str, col: &str, got: u64, want: &str) {
        self.checked += 1;
        if want.parse::<u64>().ok() != Some(got) {
            self.mismatches.push(format!("{row} {col}: got {got}, expected {want}"));
        }
    }

    /// A reference trace: within [`TRACE_TOL`] if written with a decimal
    /// point, else an integer matched after flooring within [`INT_TOL`].
    fn expect_trace(&mut self, row: &str, col: &str, got: f64, want: &str) {
        self.checked += 1;
        let ok = match want.parse::<f64>() {
            Ok(w) if want.contains('.') => (got - w).abs() <= TRACE_TOL,
            Ok(w) => (got - w).abs() <= INT_TOL && (got + INT_TOL).floor() == w,
            Err(_) => false,
        };
        if !ok {
            self.mismatches.push(format!("{row} {col}: got {got}, expected {want}"));
        }
    }

    /// Theta cell from a solver report, if one is stored. The value must
    /// lie between `alpha` and `upper` and match the reference integer.
    fn theta(&mut self, dir: Option<&Path>, key: &str, alpha: usize, upper: f64, want: Option<&str>) -> String {
        let Some(path) = dir.map(|d| d.join("theta").join(format!("{key}.out"))).filter(|p| p.exists()) else {
            return "external".into();
        };
        let sol = match import_solution(&path) {
            Ok(s) => s,
            Err(e) => {
                self.mismatches.push(format!("{key} theta: {e}"));
                return "error".into();
            }
        };
        self.checked += 1;
        if !in_cage(sol.value, alpha, upper) {
            self.mismatches.push(format!("{key} theta: {} outside [{alpha}, {upper}]", sol.value));
        }
        if let Some(w) = want {
            self.checked += 1;
            if w.parse::<f64>().map_or(true, |w| (sol.value + GAP_WARN).floor() != w) {
                self.mismatches.push(format!("{key} theta: got {:.6}, expected {w}", sol.value));
            }
        }
        format!("{:.4}", sol.value)
    }
}

fn data_rows(text: &str) -> impl Iterator<Item = Vec<&str>> {
    text.lines().filter(|l| !l.trim().is_empty() && !l.starts_with('#')).map(|l| l.split('\t').collect())
}

fn row_err(report: &mut TableReport, key: &str, e: Error) {
    report.mismatches.push(format!("{key}: {e}"));
}

pub fn coxeter_table(manifest: &Manifest, tol: &Tolerances, budget: u64) -> Result<TableReport> {
    let g = manifest.graph("coxeter")?;
    let inst = Instance::from_graph(g.clone(), tol)?;
    let mut r = TableReport { table: Table::new(["k", "trace", "floor", "alpha", "theta"]), ..Default::default() };
    for row in data_rows(COXETER) {
        let k: usize = row[0].parse().map_err(|_| Error::Format(format!("bad k '{}'", row[0])))?;
        let key = format!("coxeter-k{k}");
        let ratio = ratio_type_bound(&inst, k, tol)?;
        let alpha = alpha_k(&g, k, budget)?;
        r.expect_trace(&key, "trace", ratio.bound, row[1]);
        r.expect_int(&key, "alpha", alpha.size as u64, row[2]);
        let theta = r.theta(Some(manifest.dir()), &key, alpha.size, ratio.bound, None);
        r.table.push(vec![k.to_string(), format!("{:.4}", ratio.bound), ratio.bound_int.to_string(), alpha.size.to_string(), theta]);
    }
    Ok(r)
}

pub fn srg_table(max_n: Option<usize>) -> Result<TableReport> {
    let mut r = TableReport { table: Table::new(["n", "k", "a", "c", "rank", "ratio"]), ..Default::default() };
    for row in data_rows(SRG) {
        let v: Vec<usize> = row.iter().map(|c| c.parse().map_err(|_| Error::Format(format!("bad cell '{c}'")))).collect::<Result<_>>()?;
        if max_n.is_some_and(|m| v[0] > m) {
            continue;
        }
        let key = format!("srg({},{},{},{})", v[0], v[1], v[2], v[3]);
        let cells = SrgParams::new(v[0], v[1], v[2], v[3]).and_then(|p| {
            let rank = haemers_srg(&p)?;
            let ratio = closed_form_h(&srg_spectrum(&p)?, 1, None)?;
            Ok((rank.bound_int, ratio.bound_int))
        });
        match cells {
            Ok((rank, ratio)) => {
                r.expect_int(&key, "rank", rank, row[4]);
                r.expect_int(&key, "ratio", ratio, row[5]);
                r.table.push(vec![row[0].into(), row[1].into(), row[2].into(), row[3].into(), rank.to_string(), ratio.to_string()]);
            }
            Err(e) => row_err(&mut r, &key, e),
        }
    }
    Ok(r)
}

/// One row of the graph tables: rank, ratio, theta and alpha at power `k`.
fn graph_row(r: &mut TableReport, key: &str, g: &Graph, k: usize, expect: &[&str], dir: Option<&Path>, tol: &Tolerances, budget: u64) -> Result<Vec<String>> {
    let inst = Instance::from_graph(g.clone(), tol)?;
    let rank = rank_type_bound(&inst, k, Search::Greedy)?;
    let ratio = ratio_type_bound(&inst, k, tol)?;
    let alpha = alpha_k(g, k, budget)?;
    if alpha.timed_out {
        r.mismatches.push(format!("{key} alpha: oracle budget exhausted (>= {})", alpha.size));
    }
    r.expect_int(key, "rank", rank.bound_int, expect[0]);
    r.expect_int(key, "ratio", ratio.bound_int, expect[1]);
    r.expect_int(key, "alpha", alpha.size as u64, expect[3]);
    let theta = r.theta(dir, key, alpha.size, ratio.bound, Some(expect[2]));
    Ok(vec![rank.bound_int.to_string(), num(ratio.bound), theta, alpha.size.to_string()])
}

pub fn cycles_table(k: usize, dir: Option<&Path>, tol: &Tolerances, budget: u64) -> Result<TableReport> {
    let mut r = TableReport { table: Table::new(["n", "rank", "ratio", "theta", "alpha"]), ..Default::default() };
    for row in data_rows(CYCLES).filter(|row| row[1] == k.to_string()) {
        let n: usize = row[0].parse().map_err(|_| Error::Format(format!("bad n '{}'", row[0])))?;
        let key = format!("cycle{n}-k{k}");
        let g = catalog("cycle", &[n])?;
        match graph_row(&mut r, &key, &g, k, &row[2..6], dir, tol, budget) {
            Ok(cells) => r.table.push([vec![n.to_string()], cells].concat()),
            Err(e) => row_err(&mut r, &key, e),
        }
    }
    Ok(r)
}

pub fn named_table(k: usize, manifest: &Manifest, slow: bool, tol: &Tolerances, budget: u64) -> Result<TableReport> {
    let mut r = TableReport { table: Table::new(["graph", "n", "rank", "ratio", "theta", "alpha"]), ..Default::default() };
    for row in data_rows(NAMED).filter(|row| row[1] == k.to_string()) {
        let name = row[0];
        let key = format!("{name}-k{k}");
        match manifest.get(name) {
            None => {
                r.skipped.push(format!("{name}: no fixture"));
                continue;
            }
            Some(e) if e.slow && !slow => {
                r.skipped.push(format!("{name}: marked slow"));
                continue;
            }
            Some(_) => {}
        }
        let g = manifest.graph(name)?;
        match graph_row(&mut r, &key, &g, k, &row[2..6], Some(manifest.dir()), tol, budget) {
            Ok(cells) => r.table.push([vec![name.to_string(), g.n().to_string()], cells].concat()),
            Err(e) => row_err(&mut r, &key, e),
        }
    }
    Ok(r)
}

pub fn run_table(name: TableName, fixtures: &Path, max_n: Option<usize>, slow: bool, tol: &Tolerances, budget: u64) -> Result<TableReport> {
    let manifest = || Manifest::load(fixtures);
    match name {
        TableName::Coxeter => coxeter_table(&manifest()?, tol, budget),
        TableName::Srg => srg_table(max_n),
        TableName::CyclesK4 => cycles_table(4, Some(fixtures), tol, budget),
        TableName::CyclesK5 => cycles_table(5, Some(fixtures), tol, budget),
        TableName::NamedK2 => named_table(2, &manifest()?, slow, tol, budget),
        TableName::NamedK3 => named_table(3, &manifest()?, slow, tol, budget),
        TableName::NamedK4 => named_table(4, &manifest()?, slow, tol, budget),
        TableName::NamedK5 => named_table(5, &manifest()?, slow, tol, budget),
    }
}
