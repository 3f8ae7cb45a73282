//! Input files: braid words, tangle documents and Gauss documents, told
//! apart by their first non-comment line.

use std::path::Path;

use anyhow::{Context, Result};
use superbraid::{closure, parse_braid, parse_gauss_document, parse_tangle, BraidWord, GaussDiagram, TangleExpr};

pub enum Input {
    Braid(BraidWord),
    Tangle(TangleExpr),
    Gauss(GaussDiagram),
}

fn strip_comments(text: &str) -> String {
    text.lines().map(|l| l.split('#').next().unwrap_or("")).collect::<Vec<_>>().join("\n")
}

impl Input {
    pub fn parse(text: &str) -> Result<Input> {
        let body = strip_comments(text);
        let first = body.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("");
        Ok(if first.starts_with("signs:") {
            Input::Tangle(parse_tangle(text)?)
        } else if first.starts_with("gauss:") {
            Input::Gauss(parse_gauss_document(text)?)
        } else {
            Input::Braid(parse_braid(&body)?)
        })
    }

    pub fn load(path: &Path) -> Result<Input> {
        let text = if path.as_os_str() == "-" {
            std::io::read_to_string(std::io::stdin()).context("reading stdin")?
        } else {
            std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
        };
        Input::parse(&text).with_context(|| format!("parsing {}", path.display()))
    }

    /// The closed (or open) tangle this input denotes.
    pub fn tangle(&self) -> Result<TangleExpr> {
        Ok(match self {
            Input::Braid(b) => closure(b),
            Input::Tangle(t) => t.clone(),
            Input::Gauss(g) => g.closure()?,
        })
    }

    pub fn braid(&self) -> Option<&BraidWord> {
        match self {
            Input::Braid(b) => Some(b),
            _ => None,
        }
    }
}
