//! Resolves command-line operands: a catalog name, a file, or `-` for stdin.

use std::io::Read;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use backedge_core::blockade::Blockade;
use backedge_core::catalog::catalog;
use backedge_core::format::parse;
use backedge_core::{Numbering, Object, OrderedGraph, Tournament};

use crate::error::AppError;

pub fn load(spec: &str) -> Result<Object> {
    if spec == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| AppError::Input(spec.into(), e.to_string()))?;
        return Ok(parse(&s)?);
    }
    if Path::new(spec).is_file() {
        let s = std::fs::read_to_string(spec)
            .map_err(|e| AppError::Input(spec.into(), e.to_string()))?;
        return parse(&s).with_context(|| format!("parsing {spec}"));
    }
    Ok(catalog(spec)?)
}

pub fn tournament(spec: &str) -> Result<Tournament> {
    match load(spec)? {
        Object::Tournament(t) => Ok(t),
        Object::Ordered(_) => bail!("`{spec}` is an ordered graph, expected a tournament"),
    }
}

pub fn ordered(spec: &str) -> Result<OrderedGraph> {
    match load(spec)? {
        Object::Ordered(g) => Ok(g),
        Object::Tournament(_) => bail!("`{spec}` is a tournament, expected an ordered graph"),
    }
}

/// Comma- or space-separated 1-based labels.
pub fn numbering(text: &str) -> Result<Numbering> {
    let labels = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|w| !w.is_empty())
        .map(|w| w.parse::<usize>().map_err(|_| anyhow!("bad label `{w}`")))
        .collect::<Result<Vec<_>>>()?;
    Ok(Numbering::from_1based(&labels)?)
}

/// `K:W` for consecutive intervals, otherwise a blockade file.
pub fn blockade(spec: &str, n: usize) -> Result<Blockade> {
    if let Some((k, w)) = spec.split_once(':') {
        if let (Ok(k), Ok(w)) = (k.parse(), w.parse()) {
            let b = Blockade::intervals(k, w)?;
            if b.host_size() != n {
                bail!("{k} blocks of width {w} do not cover a host on {n} vertices");
            }
            return Ok(b);
        }
    }
    let s = std::fs::read_to_string(spec).map_err(|e| AppError::Input(spec.into(), e.to_string()))?;
    Ok(Blockade::parse(&s, n)?)
}
