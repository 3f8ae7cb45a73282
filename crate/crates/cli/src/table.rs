//! Batch tables: one row per input and superdimension, tab-separated.
//!
//! A list file holds one `<name> <item>` per line, where the item is a braid
//! word or `@<path>` naming an input file relative to the list.

use std::path::Path;
use std::time::Instant;

use anyhow::{anyhow, Result};
use rayon::prelude::*;
use superbraid::SuperDim;

use crate::commands::{closed_value, writhe};
use crate::input::Input;

pub const HEADER: &str = "# superbraid v1";

struct Row {
    name: String,
    item: Result<Input>,
}

fn read_list(text: &str, base: &Path) -> Vec<Row> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(|line| {
            let (name, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            let rest = rest.trim();
            let item = match rest.strip_prefix('@') {
                Some(p) => Input::load(&base.join(p)),
                None if rest.is_empty() => Err(anyhow!("missing braid word")),
                None => Input::parse(rest),
            };
            Row { name: name.to_string(), item }
        })
        .collect()
}

fn cell(row: &Row, d: SuperDim, timing: bool) -> (String, String, String) {
    let start = Instant::now();
    let result = row.item.as_ref().map_err(|e| anyhow!("{e:#}")).and_then(|i| Ok((writhe(i)?, closed_value(i, d)?)));
    let elapsed = if timing { format!("{:.3}", start.elapsed().as_secs_f64()) } else { "-".to_string() };
    match result {
        Ok((w, v)) => (w.to_string(), v.to_string(), elapsed),
        Err(e) => ("-".to_string(), format!("error: {e:#}"), elapsed),
    }
}

/// Render the table; the flag reports whether any row failed.
pub fn run(text: &str, base: &Path, dims: &[SuperDim], jobs: usize, timing: bool) -> Result<(String, bool)> {
    let rows = read_list(text, base);
    let work: Vec<(usize, SuperDim)> = (0..rows.len()).flat_map(|i| dims.iter().map(move |&d| (i, d))).collect();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build()?;
    let cells: Vec<_> = pool.install(|| work.par_iter().map(|&(i, d)| cell(&rows[i], d, timing)).collect());
    let mut out = format!("{HEADER}\nname\tdim\twrithe\tvalue\telapsed\n");
    let mut failed = false;
    for (&(i, d), (w, v, t)) in work.iter().zip(cells) {
        failed |= v.starts_with("error:");
        out += &format!("{}\t{d}\t{w}\t{v}\t{t}\n", rows[i].name);
    }
    Ok((out, failed))
}
