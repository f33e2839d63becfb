use crate::args::Format;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: Into<String>>(header: impl IntoIterator<Item = S>) -> Self {
        Table { header: header.into_iter().map(Into::into).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    /// Cell of `row` under column `name`.
    pub fn cell(&self, row: usize, name: &str) -> Option<&str> {
        let col = self.header.iter().position(|h| h == name)?;
        self.rows.get(row).map(|r| r[col].as_str())
    }

    pub fn render(&self, format: Format) -> String {
        let lines = std::iter::once(&self.header).chain(&self.rows);
        match format {
            Format::Tsv => lines.map(|r| r.join("\t") + "\n").collect(),
            Format::Csv => lines.map(|r| r.iter().map(|c| csv_cell(c)).collect::<Vec<_>>().join(",") + "\n").collect(),
            Format::Pretty => {
                let mut width = vec![0; self.header.len()];
                for r in std::iter::once(&self.header).chain(&self.rows) {
                    for (w, c) in width.iter_mut().zip(r) {
                        *w = (*w).max(c.chars().count());
                    }
                }
                lines
                    .map(|r| {
                        let cells: Vec<String> = r.iter().zip(&width).map(|(c, w)| format!("{c:<w$}")).collect();
                        cells.join("  ").trim_end().to_string() + "\n"
                    })
                    .collect()
            }
        }
    }
}

fn csv_cell(c: &str) -> String {
    if c.contains([',', '"', '\n']) {
        format!("\"{}\"", c.replace('"', "\"\""))
    } else {
        c.to_string()
    }
}

/// Integers print without a fractional part; other values to six decimals.
pub fn num(x: f64) -> String {
    if (x - x.round()).abs() < 1e-9 {
        format!("{}", x.round() as i64)
    } else {
        format!("{x:.6}")
    }
}
