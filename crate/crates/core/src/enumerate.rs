use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::backedge::backedge_graph;
use crate::bits::{bit, Bits};
use crate::error::{Error, Result};
use crate::numbering::{next_permutation, Numbering};
use crate::ordered::OrderedGraph;
use crate::tournament::Tournament;

pub const CANONICAL_LIMIT: usize = 8;
pub const ENUMERATION_LIMIT: usize = 7;
pub const CENSUS_LIMIT: usize = 8;

/// Least upper-triangle code over all relabelings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalForm {
    pub n: usize,
    pub code: u64,
}

impl CanonicalForm {
    pub fn tournament(&self) -> Tournament {
        Tournament::from_upper_code(self.n, self.code).expect("canonical codes are valid")
    }
}

fn code_of(t: &Tournament, perm: &[usize]) -> u64 {
    let mut code = 0u64;
    for (i, &a) in perm.iter().enumerate() {
        let row = t.out_set(a);
        for &b in &perm[i + 1..] {
            code = code << 1 | (row >> b & 1);
        }
    }
    code
}

/// The least code starts with the first vertex's row, which is lex-least when
/// that vertex has minimum out-degree and its in-neighbours come first. Only
/// such prefixes are expanded.
pub fn canonical_form(t: &Tournament) -> Result<CanonicalForm> {
    let n = t.n();
    if n > CANONICAL_LIMIT {
        return Err(Error::TooLarge {
            what: "exact canonical form",
            n,
            limit: CANONICAL_LIMIT,
        });
    }
    let min_out = (0..n).map(|v| t.out_degree(v)).min().unwrap_or(0);
    let mut best = u64::MAX;
    for root in (0..n).filter(|&v| t.out_degree(v) == min_out) {
        let mut ins: Vec<usize> = Bits(t.in_set(root)).collect();
        let mut outs: Vec<usize> = Bits(t.out_set(root)).collect();
        let mut perm = Vec::with_capacity(n);
        loop {
            loop {
                perm.clear();
                perm.push(root);
                perm.extend_from_slice(&ins);
                perm.extend_from_slice(&outs);
                best = best.min(code_of(t, &perm));
                if !next_permutation(&mut outs) {
                    break;
                }
            }
            if !next_permutation(&mut ins) {
                break;
            }
        }
    }
    Ok(CanonicalForm { n, code: best })
}

pub fn is_isomorphic(a: &Tournament, b: &Tournament) -> Result<bool> {
    Ok(a.n() == b.n() && canonical_form(a)? == canonical_form(b)?)
}

/// One representative per isomorphism class, sorted by canonical code.
pub fn all_tournaments(n: usize) -> Result<Vec<Tournament>> {
    Ok(all_canonical_forms(n)?
        .into_iter()
        .map(|c| c.tournament())
        .collect())
}

pub fn all_canonical_forms(n: usize) -> Result<Vec<CanonicalForm>> {
    if n == 0 || n > ENUMERATION_LIMIT {
        return Err(Error::TooLarge {
            what: "isomorph-free enumeration",
            n,
            limit: ENUMERATION_LIMIT,
        });
    }
    let mut level: Vec<CanonicalForm> = vec![canonical_form(&Tournament::transitive(1)?)?];
    for m in 1..n {
        let next: BTreeSet<CanonicalForm> = level
            .par_iter()
            .flat_map_iter(|c| {
                let parent = c.tournament();
                (0..1u64 << m).map(move |row| {
                    let child = parent.extend(row).expect("extension of a valid tournament");
                    canonical_form(&child).expect("within the canonical limit")
                })
            })
            .collect();
        level = next.into_iter().collect();
    }
    Ok(level)
}

/// Every distinct backedge graph of `t`, sorted by edge count then edge list.
pub fn backedge_census(t: &Tournament) -> Result<Vec<OrderedGraph>> {
    let n = t.n();
    if n > CENSUS_LIMIT {
        return Err(Error::TooLarge {
            what: "backedge census",
            n,
            limit: CENSUS_LIMIT,
        });
    }
    let set: BTreeSet<OrderedGraph> = Numbering::all(n)
        .map(|nu| backedge_graph(t, &nu).expect("sizes agree"))
        .collect();
    let mut out: Vec<OrderedGraph> = set.into_iter().collect();
    out.sort_by_cached_key(|g| (g.edge_count(), g.edges()));
    Ok(out)
}

/// Vertex permutations fixing `t`, as numberings.
pub fn automorphisms(t: &Tournament) -> Result<Vec<Numbering>> {
    let n = t.n();
    if n > CANONICAL_LIMIT {
        return Err(Error::TooLarge {
            what: "automorphism enumeration",
            n,
            limit: CANONICAL_LIMIT,
        });
    }
    Ok(Numbering::all(n)
        .filter(|nu| {
            let p = nu.as_slice();
            (0..n).all(|a| {
                let img = Bits(t.out_set(a)).fold(0u64, |m, b| m | bit(p[b]));
                t.out_set(p[a]) == img
            })
        })
        .collect())
}
