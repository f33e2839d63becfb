use std::fs;
use std::io::Write;
use std::time::Instant;

use capbound_core::graph::power;
use capbound_core::minorlp::{closed_form_h_for, ratio_type_bound, ratio_type_general, theta_eigen_bound};
use capbound_core::oracle::{alpha_k, sandwich_verdict};
use capbound_core::shannon::{haemers_rank, haemers_srg, rank_type_bound};
use capbound_core::thetaio::{in_cage, parse_solution, ThetaProblem};
use capbound_core::{BoundReport, Error, Polynomial, Result, Search, Tolerances};

use crate::args::{powers, BoundsArgs, ExportArgs, ImportArgs, MethodArg, SpectrumArgs, VerdictArgs};
use crate::input::{resolve, Source};
use crate::output::{num, Table};

/// A bound row's outcome: a report, or an exact independence number.
enum Outcome {
    Bound(BoundReport),
    Alpha { size: usize, timed_out: bool },
}

fn evaluate(src: &Source, k: usize, method: MethodArg, poly: Option<&Polynomial>, tol: &Tolerances, budget: u64) -> Result<Outcome> {
    let inst = &src.instance;
    let needs_graph = || src.graph().ok_or_else(|| Error::Inapplicable(format!("{} needs a graph, not a spectrum", method.name())));
    let report = match method {
        MethodArg::Ratio => ratio_type_bound(inst, k, tol)?,
        MethodArg::Rank => rank_type_bound(inst, k, Search::Greedy)?,
        MethodArg::RankExhaustive => rank_type_bound(inst, k, Search::Exhaustive)?,
        MethodArg::H => closed_form_h_for(inst, k)?,
        MethodArg::ThetaEigen => theta_eigen_bound(inst, k, tol)?,
        MethodArg::Haemers => {
            if k != 1 {
                return Err(Error::Argument("the Haemers bound is for k = 1".into()));
            }
            match &src.srg {
                Some(p) => haemers_srg(p)?,
                None => haemers_rank(inst)?,
            }
        }
        MethodArg::General => {
            let p = poly.ok_or_else(|| Error::Argument("method general needs --poly".into()))?;
            if p.degree() != k {
                return Err(Error::Argument(format!("--poly has degree {}, row has k = {k}", p.degree())));
            }
            ratio_type_general(needs_graph()?, p, tol)?
        }
        MethodArg::Oracle => {
            let r = alpha_k(needs_graph()?, k, budget)?;
            return Ok(Outcome::Alpha { size: r.size, timed_out: r.timed_out });
        }
    };
    Ok(Outcome::Bound(report))
}

pub fn bounds(args: &BoundsArgs, out: &mut dyn Write) -> Result<u8> {
    let tol = args.tol.tolerances();
    let sources = resolve(&args.input, &tol)?;
    let ks = powers(&args.k);
    let mut methods = args.methods.clone();
    methods.sort_by_key(|m| m.name());
    methods.dedup();
    let poly = args.poly.as_deref().map(Polynomial::from_csv).transpose()?;

    let mut header = vec!["graph", "n", "k", "method", "via", "bound", "floor", "applicability"];
    if args.timing {
        header.push("time_ms");
    }
    if args.witness {
        header.push("witness");
    }
    let mut table = Table::new(header);
    for src in &sources {
        for &k in &ks {
            for &m in &methods {
                let start = Instant::now();
                let outcome = evaluate(src, k, m, poly.as_ref(), &tol, args.budget);
                let ms = start.elapsed().as_secs_f64() * 1e3;
                let mut row = vec![src.name.clone(), src.n().to_string(), k.to_string(), m.name().to_string()];
                let mut witness = String::from("-");
                match outcome {
                    Ok(Outcome::Bound(b)) => {
                        row.extend([b.method.tag().into(), num(b.bound), b.bound_int.to_string(), b.applicability.to_string()]);
                        if let Some(p) = &b.witness {
                            witness = p.to_csv();
                        }
                    }
                    Ok(Outcome::Alpha { size, timed_out }) => {
                        let status = if timed_out { "timeout(lower bound)" } else { "exact" };
                        row.extend(["alpha_k".into(), size.to_string(), size.to_string(), status.into()]);
                    }
                    Err(e) => row.extend(["-".into(), "-".into(), "-".into(), format!("error: {e}")]),
                }
                if args.timing {
                    row.push(format!("{ms:.1}"));
                }
                if args.witness {
                    row.push(witness);
                }
                table.push(row);
            }
        }
    }
    out.write_all(table.render(args.format).as_bytes())?;
    Ok(0)
}

pub fn verdict(args: &VerdictArgs, out: &mut dyn Write) -> Result<u8> {
    let tol = args.tol.tolerances();
    let sources = resolve(&args.input, &tol)?;
    let mut table = Table::new(["graph", "n", "k", "alpha", "lower", "upper", "status", "capacity", "theta"]);
    for src in &sources {
        for k in powers(&args.k) {
            let mut row = vec![src.name.clone(), src.n().to_string(), k.to_string()];
            let Some(g) = src.graph() else {
                row.extend(["-", "-", "-", "error: verdict needs a graph", "-", "-"].map(String::from));
                table.push(row);
                continue;
            };
            let ratio = ratio_type_bound(&src.instance, k, &tol).ok();
            let rank = rank_type_bound(&src.instance, k, Search::Greedy).ok();
            match sandwich_verdict(g, k, ratio.as_ref(), rank.as_ref(), args.levels, args.budget) {
                Ok(v) => {
                    let status = if v.inconclusive {
                        "inconclusive"
                    } else if v.is_determined() {
                        "determined"
                    } else {
                        "interval"
                    };
                    let opt = |x: Option<f64>| x.map_or_else(|| "-".to_string(), num);
                    row.extend([
                        v.alpha.size.to_string(),
                        num(v.lower),
                        num(v.upper),
                        status.into(),
                        opt(v.capacity),
                        opt(v.theta),
                    ]);
                }
                Err(e) => row.extend(["-".into(), "-".into(), "-".into(), format!("error: {e}"), "-".into(), "-".into()]),
            }
            table.push(row);
        }
    }
    out.write_all(table.render(args.format).as_bytes())?;
    Ok(0)
}

fn single_graph(sources: Vec<Source>) -> Result<Source> {
    let mut it = sources.into_iter();
    match (it.next(), it.next()) {
        (Some(src), None) if src.graph().is_some() => Ok(src),
        _ => Err(Error::Argument("exactly one graph input is required".into())),
    }
}

pub fn export_theta(args: &ExportArgs, out: &mut dyn Write) -> Result<u8> {
    let src = single_graph(resolve(&args.input, &Tolerances::default())?)?;
    let gk = power(src.graph().unwrap(), args.k)?;
    let text = ThetaProblem::new(&gk)?.to_sdpa();
    match &args.out {
        Some(path) => fs::write(path, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(0)
}

pub fn import_theta(args: &ImportArgs, out: &mut dyn Write) -> Result<u8> {
    let sol = parse_solution(&fs::read_to_string(&args.file)?)?;
    writeln!(out, "theta\t{:.7}", sol.value)?;
    writeln!(out, "primal\t{:.10}", sol.primal)?;
    writeln!(out, "dual\t{:.10}", sol.dual)?;
    writeln!(out, "gap\t{:.3e}", sol.gap)?;
    if sol.low_precision {
        writeln!(out, "warning\tlow precision: primal-dual gap above 1e-5")?;
    }
    let has_input = !(args.input.catalog.is_empty() && args.input.g6.is_empty() && args.input.fixture.is_empty());
    if !has_input {
        return Ok(0);
    }
    let tol = args.tol.tolerances();
    let src = single_graph(resolve(&args.input, &tol)?)?;
    let alpha = alpha_k(src.graph().unwrap(), args.k, args.budget)?;
    let ratio = ratio_type_bound(&src.instance, args.k, &tol)?;
    let ok = in_cage(sol.value, alpha.size, ratio.bound);
    writeln!(out, "alpha_k\t{}", alpha.size)?;
    writeln!(out, "ratio\t{}", num(ratio.bound))?;
    writeln!(out, "cage\t{}", if ok { "ok" } else { "violated" })?;
    Ok(if ok { 0 } else { 1 })
}

pub fn spectrum(args: &SpectrumArgs, out: &mut dyn Write) -> Result<u8> {
    let sources = resolve(&args.input, &args.tol.tolerances())?;
    for src in &sources {
        let spec = src.instance.spectrum();
        write!(out, "# {} n={} d={}", src.name, spec.n(), spec.d())?;
        if let Some(level) = src.instance.walk_level() {
            write!(out, " walk-regular<={level}")?;
        }
        writeln!(out)?;
        out.write_all(spec.to_csv().as_bytes())?;
    }
    Ok(0)
}
