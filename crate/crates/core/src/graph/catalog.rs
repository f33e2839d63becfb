use super::Graph;
use crate::error::{Error, Result};

/// Names accepted by [`catalog`].
pub const CATALOG_NAMES: &[&str] =
    &["cycle", "complete", "hypercube", "kneser", "petersen", "cocktail_party"];

fn expect_params(name: &str, params: &[usize], want: usize) -> Result<()> {
    if params.len() != want {
        return Err(Error::arg(format!(
            "{name} takes {want} parameter(s), got {}",
            params.len()
        )));
    }
    Ok(())
}

/// Standard graph families.
///
/// | name | params | graph |
/// |---|---|---|
/// | `cycle` | n ≥ 3 | C_n |
/// | `complete` | n ≥ 1 | K_n |
/// | `hypercube` | d ≥ 1 | Q_d, vertices are bit masks |
/// | `kneser` | n, k with k ≥ 1, n ≥ 2k | k-subsets of 0..n in lexicographic order, adjacent when disjoint |
/// | `petersen` | none | `kneser(5, 2)` |
/// | `cocktail_party` | m ≥ 1 | K_{2m} minus the matching {2i, 2i+1} |
pub fn catalog(name: &str, params: &[usize]) -> Result<Graph> {
    match name {
        "cycle" => {
            expect_params(name, params, 1)?;
            let n = params[0];
            if n < 3 {
                return Err(Error::arg(format!("cycle needs n >= 3, got {n}")));
            }
            Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        "complete" => {
            expect_params(name, params, 1)?;
            if params[0] == 0 {
                return Err(Error::arg("complete needs n >= 1"));
            }
            Ok(Graph::from_fn(params[0], |_, _| true))
        }
        "hypercube" => {
            expect_params(name, params, 1)?;
            let d = params[0];
            if !(1..=20).contains(&d) {
                return Err(Error::arg(format!("hypercube needs 1 <= d <= 20, got {d}")));
            }
            Ok(Graph::from_fn(1 << d, |u, v| (u ^ v).is_power_of_two()))
        }
        "kneser" => {
            expect_params(name, params, 2)?;
            kneser(params[0], params[1])
        }
        "petersen" => {
            expect_params(name, params, 0)?;
            kneser(5, 2)
        }
        "cocktail_party" => {
            expect_params(name, params, 1)?;
            let m = params[0];
            if m == 0 {
                return Err(Error::arg("cocktail_party needs m >= 1"));
            }
            Ok(Graph::from_fn(2 * m, |u, v| u / 2 != v / 2))
        }
        _ => Err(Error::arg(format!(
            "unknown catalog graph '{name}' (known: {})",
            CATALOG_NAMES.join(", ")
        ))),
    }
}

fn kneser(n: usize, k: usize) -> Result<Graph> {
    if k == 0 || n < 2 * k || n > 64 {
        return Err(Error::arg(format!("kneser needs k >= 1 and 2k <= n <= 64, got ({n},{k})")));
    }
    let mut subsets: Vec<u64> = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        subsets.push(cur.iter().fold(0, |m, &i| m | 1 << i));
        if subsets.len() > 20_000 {
            return Err(Error::arg(format!("kneser({n},{k}) is too large")));
        }
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else { break };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
    Ok(Graph::from_fn(subsets.len(), |u, v| subsets[u] & subsets[v] == 0))
}

/// Parses `name` or `name:p1,p2,...`, e.g. `cycle:15` or `kneser:7,3`.
pub fn catalog_from_spec(spec: &str) -> Result<Graph> {
    let (name, rest) = spec.split_once(':').unwrap_or((spec, ""));
    let params = rest
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| Error::arg(format!("bad catalog parameter '{s}' in '{spec}'")))
        })
        .collect::<Result<Vec<_>>>()?;
    catalog(name.trim(), &params)
}
