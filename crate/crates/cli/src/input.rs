use std::env;
use std::fs;
use std::path::{Path, PathBuf};

use capbound_core::graph::{catalog_from_spec, read_graph6_file};
use capbound_core::spectra::srg_spectrum;
use capbound_core::{Error, Graph, Instance, Manifest, Result, Spectrum, SrgParams, Tolerances};

use crate::args::InputArgs;

pub struct Source {
    pub name: String,
    pub instance: Instance,
    pub srg: Option<SrgParams>,
}

impl Source {
    pub fn graph(&self) -> Option<&Graph> {
        self.instance.graph()
    }

    pub fn n(&self) -> usize {
        self.instance.spectrum().n()
    }
}

/// `--fixtures`, else `$CAPBOUND_FIXTURES`, else the fixtures shipped with
/// the source tree.
pub fn fixture_dir(flag: Option<&Path>) -> PathBuf {
    if let Some(p) = flag {
        return p.to_path_buf();
    }
    match env::var_os("CAPBOUND_FIXTURES") {
        Some(p) if !p.is_empty() => PathBuf::from(p),
        _ => PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures"),
    }
}

pub fn parse_srg(text: &str) -> Result<SrgParams> {
    let v: Vec<usize> = text
        .split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Argument(format!("bad SRG parameter '{t}'"))))
        .collect::<Result<_>>()?;
    match v[..] {
        [n, k, a, c] => SrgParams::new(n, k, a, c),
        _ => Err(Error::Argument(format!("--srg expects n,k,a,c, got '{text}'"))),
    }
}

pub fn resolve(args: &InputArgs, tol: &Tolerances) -> Result<Vec<Source>> {
    let mut out = Vec::new();
    let graph = |name: String, g: Graph| -> Result<Source> {
        Ok(Source { name, instance: Instance::from_graph(g, tol)?, srg: None })
    };
    for spec in &args.catalog {
        out.push(graph(spec.clone(), catalog_from_spec(spec)?)?);
    }
    for path in &args.g6 {
        let graphs = read_graph6_file(path)?;
        let stem = path.file_stem().map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into_owned());
        let many = graphs.len() > 1;
        for (i, g) in graphs.into_iter().enumerate() {
            out.push(graph(if many { format!("{stem}#{}", i + 1) } else { stem.clone() }, g)?);
        }
    }
    if !args.fixture.is_empty() {
        let manifest = Manifest::load(fixture_dir(args.fixtures.as_deref()))?;
        for name in &args.fixture {
            out.push(graph(name.clone(), manifest.graph(name)?)?);
        }
    }
    for text in &args.srg {
        let p = parse_srg(text)?;
        out.push(Source { name: format!("srg{p}"), instance: Instance::from_spectrum(srg_spectrum(&p)?), srg: Some(p) });
    }
    for path in &args.spectrum {
        let spec = Spectrum::from_csv(&fs::read_to_string(path)?)?;
        out.push(Source { name: path.display().to_string(), instance: Instance::from_spectrum(spec), srg: None });
    }
    if out.is_empty() {
        return Err(Error::Argument("no input: use --catalog, --g6, --fixture, --srg or --spectrum".into()));
    }
    Ok(out)
}
