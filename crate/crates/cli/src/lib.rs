//! Command-line front end: argument parsing, input resolution, table
//! regeneration and output formatting for `capbound`.

pub mod args;
pub mod commands;
pub mod input;
pub mod output;
pub mod tables;

use std::fs;
use std::io::Write;

use capbound_core::Result;

use args::{Cli, Command, TableArgs};

/// Runs one command; the returned value is the process exit code.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<u8> {
    match &cli.command {
        Command::Bounds(a) => commands::bounds(a, out),
        Command::Table(a) => table(a, out, err),
        Command::Verdict(a) => commands::verdict(a, out),
        Command::ExportTheta(a) => commands::export_theta(a, out),
        Command::ImportTheta(a) => commands::import_theta(a, out),
        Command::Spectrum(a) => commands::spectrum(a, out),
    }
}

fn table(a: &TableArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<u8> {
    let dir = input::fixture_dir(a.fixtures.as_deref());
    let report = tables::run_table(a.name, &dir, a.max_n, a.slow, &a.tol.tolerances(), a.budget)?;
    let text = report.table.render(a.format);
    match &a.out {
        Some(path) => fs::write(path, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    let title = clap::ValueEnum::to_possible_value(&a.name).map_or_else(String::new, |v| v.get_name().to_string());
    err.write_all(report.summary(&format!("table {title}")).as_bytes())?;
    Ok(if report.mismatches.is_empty() { 0 } else { 1 })
}
