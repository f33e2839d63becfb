//! The fixture directory: graph6 files listed in `manifest.tsv` with columns
//! `name file slow source`.

use std::fs;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::graph::{read_graph6_file, Graph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixtureEntry {
    pub name: String,
    pub file: String,
    /// Excluded from default runs.
    pub slow: bool,
    pub source: String,
}

#[derive(Clone, Debug)]
pub struct Manifest {
    dir: PathBuf,
    entries: Vec<FixtureEntry>,
}

impl Manifest {
    pub fn load(dir: impl AsRef<Path>) -> Result<Self> {
        let dir = dir.as_ref().to_path_buf();
        let text = fs::read_to_string(dir.join("manifest.tsv"))?;
        Ok(Manifest { entries: parse_manifest(&text)?, dir })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn entries(&self) -> &[FixtureEntry] {
        &self.entries
    }

    pub fn get(&self, name: &str) -> Option<&FixtureEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    /// The single graph stored in the named fixture.
    pub fn graph(&self, name: &str) -> Result<Graph> {
        let entry = self.get(name).ok_or_else(|| Error::arg(format!("no fixture named {name:?}")))?;
        let mut graphs = read_graph6_file(self.dir.join(&entry.file))?;
        match graphs.len() {
            1 => Ok(graphs.pop().unwrap()),
            k => Err(Error::Format(format!("fixture {name} holds {k} graphs, expected 1"))),
        }
    }
}

pub fn parse_manifest(text: &str) -> Result<Vec<FixtureEntry>> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('#'));
    match lines.next() {
        Some((_, header)) if header.split('\t').collect::<Vec<_>>() == ["name", "file", "slow", "source"] => {}
        _ => return Err(Error::Format("manifest header must be name<TAB>file<TAB>slow<TAB>source".into())),
    }
    lines
        .map(|(i, line)| {
            let cols: Vec<&str> = line.split('\t').collect();
            if cols.len() != 4 {
                return Err(Error::Format(format!("manifest line {}: expected 4 columns, got {}", i + 1, cols.len())));
            }
            let slow = match cols[2] {
                "yes" => true,
                "no" => false,
                other => return Err(Error::Format(format!("manifest line {}: slow must be yes|no, got {other:?}", i + 1))),
            };
            Ok(FixtureEntry { name: cols[0].into(), file: cols[1].into(), slow, source: cols[3].into() })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn manifest_parsing() {
        let text = "name\tfile\tslow\tsource\n# comment\npetersen\tpetersen.g6\tno\tnetworkx\n\n";
        let m = parse_manifest(text).unwrap();
        assert_eq!(m.len(), 1);
        assert!(!m[0].slow);
        assert!(parse_manifest("name\tfile\n").is_err());
        assert!(parse_manifest("name\tfile\tslow\tsource\na\tb\tmaybe\tc\n").is_err());
        assert!(parse_manifest("name\tfile\tslow\tsource\na\tb\n").is_err());
    }
}
