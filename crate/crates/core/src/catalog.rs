//! Named tournaments and ordered graphs. Labels are 1-based.
//!
//! `H_6`, `P_7_minus` and `F_6` each have two independent constructions; the
//! first lookup checks that they agree up to isomorphism and panics otherwise.

use std::sync::OnceLock;

use crate::backedge::tournament_from_backedges;
use crate::bits::bit;
use crate::enumerate::is_isomorphic;
use crate::error::{Error, Result};
use crate::format::Object;
use crate::ordered::OrderedGraph;
use crate::tournament::Tournament;

pub const D5_UPPER: &[(usize, usize)] = &[(1, 4), (1, 5), (2, 5)];
pub const D5_LOWER: &[(usize, usize)] = &[(1, 3), (1, 5), (3, 5), (2, 4)];
pub const P7_MINUS_FIGURE: &[(usize, usize)] = &[(1, 6), (1, 4), (3, 6), (2, 5)];
pub const H6_FIGURE: &[(usize, usize)] = &[(1, 6), (1, 4), (2, 6), (3, 5)];
pub const F6_FIGURE: &[(usize, usize)] = &[(1, 4), (1, 5), (2, 6), (3, 6)];
/// A second backedge graph of `F_6`, from the case analysis of six-vertex
/// numberings with four backedges.
pub const F6_ALTERNATE: &[(usize, usize)] = &[(1, 6), (1, 5), (2, 5), (2, 6)];

pub const OBS_1: &[(usize, usize)] = &[(1, 3), (2, 4), (1, 4)];
pub const OBS_2: &[(usize, usize)] = &[(1, 3), (3, 5), (1, 4), (2, 5)];
pub const OBS_3: &[(usize, usize)] = &[(1, 3), (1, 5), (3, 6), (2, 4), (4, 6)];

fn circulant(n: usize, residues: &[usize]) -> Tournament {
    Tournament::from_fn(n, |i, j| i != j && residues.contains(&((j + n - i) % n)))
        .expect("circulant on a valid residue set")
}

pub fn d5() -> Tournament {
    circulant(5, &[1, 2])
}

pub fn p7() -> Tournament {
    circulant(7, &[1, 2, 4])
}

pub fn p7_minus() -> Tournament {
    p7().delete_vertex(6).expect("7 vertices")
}

/// `D_5` plus a sixth vertex whose out-neighbours are `x` (1-based labels).
pub fn d5_x(x: &[usize]) -> Result<Tournament> {
    let mut mask = 0u64;
    for &v in x {
        if !(1..=5).contains(&v) {
            return Err(Error::UnknownName(format!("D5_X with label {v}")));
        }
        mask |= bit(v - 1);
    }
    d5().extend(mask)
}

pub fn h6() -> Tournament {
    d5_x(&[1, 3]).expect("labels in range")
}

pub fn f6() -> Tournament {
    from_figure(6, F6_FIGURE)
}

pub fn obs(i: usize) -> Result<OrderedGraph> {
    match i {
        1 => OrderedGraph::from_edges_1based(4, OBS_1),
        2 => OrderedGraph::from_edges_1based(5, OBS_2),
        3 => OrderedGraph::from_edges_1based(6, OBS_3),
        4 => Ok(obs(3)?.reverse_order()),
        _ => Err(Error::UnknownName(format!("OBS_{i}"))),
    }
}

pub fn obstructions() -> Vec<OrderedGraph> {
    (1..=4).map(|i| obs(i).expect("four obstructions")).collect()
}

fn figure_graph(n: usize, edges: &[(usize, usize)]) -> OrderedGraph {
    OrderedGraph::from_edges_1based(n, edges).expect("figure edges are valid")
}

fn from_figure(n: usize, edges: &[(usize, usize)]) -> Tournament {
    tournament_from_backedges(&figure_graph(n, edges)).expect("nonempty figure")
}

/// Pairs of constructions that must be isomorphic.
pub fn agreement_checks() -> Vec<(&'static str, bool)> {
    let iso = |a: &Tournament, b: &Tournament| is_isomorphic(a, b).unwrap_or(false);
    vec![
        ("D_5 ~ upper backedge figure", iso(&d5(), &from_figure(5, D5_UPPER))),
        ("D_5 ~ lower backedge figure", iso(&d5(), &from_figure(5, D5_LOWER))),
        ("P_7_minus ~ figure", iso(&p7_minus(), &from_figure(6, P7_MINUS_FIGURE))),
        ("H_6 ~ figure", iso(&h6(), &from_figure(6, H6_FIGURE))),
        ("F_6 ~ alternate backedge graph", iso(&f6(), &from_figure(6, F6_ALTERNATE))),
    ]
}

fn ensure_agreement() {
    static AGREED: OnceLock<()> = OnceLock::new();
    AGREED.get_or_init(|| {
        for (what, ok) in agreement_checks() {
            assert!(ok, "catalog constructions disagree: {what}");
        }
    });
}

pub const NAMES: &[&str] = &[
    "TT_n", "C_3", "D_5", "P_7", "P_7_minus", "H_6", "H_6_bar", "F_6", "D5_{..}", "OBS_1",
    "OBS_2", "OBS_3", "OBS_4", "D_5_BACKEDGE_A", "D_5_BACKEDGE_B", "P_7_minus_BACKEDGE",
    "H_6_BACKEDGE", "F_6_BACKEDGE",
];

/// Parses the set in `D5_{1,3}`, `D5_13` or `D5_` (empty set).
fn parse_d5_set(rest: &str) -> Option<Vec<usize>> {
    let inner = rest
        .strip_prefix('{')
        .and_then(|r| r.strip_suffix('}'))
        .unwrap_or(rest);
    let mut out = Vec::new();
    for part in inner.split(|c: char| c == ',' || c.is_whitespace()) {
        if part.is_empty() {
            continue;
        }
        if part.len() > 1 && !inner.contains(',') {
            for c in part.chars() {
                out.push(c.to_digit(10)? as usize);
            }
        } else {
            out.push(part.parse().ok()?);
        }
    }
    out.sort_unstable();
    if out.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some(out)
}

pub fn catalog(name: &str) -> Result<Object> {
    ensure_agreement();
    let unknown = || Error::UnknownName(name.to_string());
    let t = |t: Tournament| Ok(Object::Tournament(t));
    let o = |g: OrderedGraph| Ok(Object::Ordered(g));
    match name {
        "C_3" => t(circulant(3, &[1])),
        "D_5" => t(d5()),
        "P_7" => t(p7()),
        "P_7_minus" => t(p7_minus()),
        "H_6" => t(h6()),
        "H_6_bar" => t(h6().reverse()),
        "F_6" => t(f6()),
        "OBS_1" => o(obs(1)?),
        "OBS_2" => o(obs(2)?),
        "OBS_3" => o(obs(3)?),
        "OBS_4" => o(obs(4)?),
        "D_5_BACKEDGE_A" => o(figure_graph(5, D5_UPPER)),
        "D_5_BACKEDGE_B" => o(figure_graph(5, D5_LOWER)),
        "P_7_minus_BACKEDGE" => o(figure_graph(6, P7_MINUS_FIGURE)),
        "H_6_BACKEDGE" => o(figure_graph(6, H6_FIGURE)),
        "F_6_BACKEDGE" => o(figure_graph(6, F6_FIGURE)),
        _ => {
            if let Some(k) = name.strip_prefix("TT_") {
                let n: usize = k.parse().map_err(|_| unknown())?;
                return t(Tournament::transitive(n)?);
            }
            if let Some(rest) = name.strip_prefix("D5_") {
                let x = parse_d5_set(rest).ok_or_else(unknown)?;
                return t(d5_x(&x).map_err(|_| unknown())?);
            }
            Err(unknown())
        }
    }
}

pub fn tournament(name: &str) -> Result<Tournament> {
    match catalog(name)? {
        Object::Tournament(t) => Ok(t),
        Object::Ordered(_) => Err(Error::UnknownName(format!("{name} is not a tournament"))),
    }
}

pub fn ordered(name: &str) -> Result<OrderedGraph> {
    match catalog(name)? {
        Object::Ordered(g) => Ok(g),
        Object::Tournament(_) => Err(Error::UnknownName(format!(
            "{name} is not an ordered graph"
        ))),
    }
}
