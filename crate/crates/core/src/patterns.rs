//! Ordered-graph pattern classes and certificates built from them.
//!
//! A certificate is a small set of numberings of a tournament such that every
//! transversal of their backedge graphs (one connected component chosen from
//! each) matches one of five templates.

use std::collections::BTreeSet;

use bitflags::bitflags;
use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::backedge::backedge_graph;
use crate::bits::{bit, low_mask, Bits};
use crate::error::{Error, Result};
use crate::numbering::Numbering;
use crate::ordered::OrderedGraph;
use crate::tournament::Tournament;

pub const CERTIFICATE_LIMIT: usize = 7;
pub const MAX_CERTIFICATE_SIZE: usize = 3;

bitflags! {
    #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
    pub struct PatternTags: u32 {
        const LEFT_STAR = 1 << 0;
        const RIGHT_STAR = 1 << 1;
        const LEFT_SPIKE = 1 << 2;
        const RIGHT_SPIKE = 1 << 3;
        const MONOTONE_PATH = 1 << 4;
        const LEFT_BROOM = 1 << 5;
        const RIGHT_BROOM = 1 << 6;
        const CLIQUE = 1 << 7;
        const LEFT_BRISTLE = 1 << 8;
        const RIGHT_BRISTLE = 1 << 9;
        const CROSSED_LEFT_STAR = 1 << 10;
        const CROSSED_RIGHT_STAR = 1 << 11;
        const LEFT_SPLIT = 1 << 12;
        const RIGHT_SPLIT = 1 << 13;
        const SINGLE_VERTEX = 1 << 14;
        /// Left-star on exactly three vertices.
        const LEFT_2STAR = 1 << 15;
        const RIGHT_2STAR = 1 << 16;
        /// Monotone path on exactly three vertices.
        const MONO3 = 1 << 17;
    }
}

impl PatternTags {
    /// The fifteen named classes, without the size-restricted variants.
    pub const CLASSES: PatternTags = PatternTags::from_bits_truncate((1 << 15) - 1);

    pub fn names(&self) -> Vec<&'static str> {
        self.iter_names().map(|(n, _)| n).collect()
    }
}

/// Left-hand classes only; right-hand ones come from the reversed order.
fn left_tags(h: &OrderedGraph) -> PatternTags {
    let n = h.n();
    let e = h.edge_count();
    let all = low_mask(n);
    let mut t = PatternTags::empty();
    if n == 0 {
        return t;
    }
    let star = |c: usize| e == n - 1 && h.neighbours(c) == all & !bit(c);
    if star(0) {
        t |= PatternTags::LEFT_STAR;
    }
    if n >= 2 && star(1) {
        t |= PatternTags::LEFT_SPIKE;
    }
    if e == n - 1 && (1..n).all(|i| h.adjacent(i - 1, i)) {
        t |= PatternTags::MONOTONE_PATH;
    }
    // Path v_1..v_m, then v_m joined to every later vertex.
    if e == n - 1
        && (1..=n).any(|m| {
            (1..m).all(|i| h.adjacent(i - 1, i)) && (m..n).all(|j| h.adjacent(m - 1, j))
        })
    {
        t |= PatternTags::LEFT_BROOM;
    }
    if 2 * e == n * (n - 1) {
        t |= PatternTags::CLIQUE;
    }
    if n > 2 {
        let inner = all & !bit(0) & !bit(n - 1);
        let last = h.neighbours(n - 1);
        if h.neighbours(0) == inner && last & inner == last && last.count_ones() == 1 && e == n - 1 {
            t |= PatternTags::LEFT_BRISTLE;
        }
    }
    if n >= 3 && h.neighbours(0) == all & !bit(0) && e == n {
        t |= PatternTags::CROSSED_LEFT_STAR;
    }
    if n >= 2 && !h.adjacent(0, 1) {
        let rest = all & !0b11;
        let clique = Bits(rest).all(|v| h.neighbours(v) & rest == rest & !bit(v));
        let sparse = Bits(rest).all(|v| (h.neighbours(v) & 0b11).count_ones() <= 1);
        if clique && sparse {
            t |= PatternTags::LEFT_SPLIT;
        }
    }
    if n == 1 {
        t |= PatternTags::SINGLE_VERTEX;
    }
    if n == 3 && t.contains(PatternTags::LEFT_STAR) {
        t |= PatternTags::LEFT_2STAR;
    }
    if n == 3 && t.contains(PatternTags::MONOTONE_PATH) {
        t |= PatternTags::MONO3;
    }
    t
}

const MIRROR: [(PatternTags, PatternTags); 8] = [
    (PatternTags::LEFT_STAR, PatternTags::RIGHT_STAR),
    (PatternTags::LEFT_SPIKE, PatternTags::RIGHT_SPIKE),
    (PatternTags::LEFT_BROOM, PatternTags::RIGHT_BROOM),
    (PatternTags::LEFT_BRISTLE, PatternTags::RIGHT_BRISTLE),
    (PatternTags::CROSSED_LEFT_STAR, PatternTags::CROSSED_RIGHT_STAR),
    (PatternTags::LEFT_SPLIT, PatternTags::RIGHT_SPLIT),
    (PatternTags::LEFT_2STAR, PatternTags::RIGHT_2STAR),
    (PatternTags::MONOTONE_PATH, PatternTags::MONOTONE_PATH),
];

/// Tags of a whole ordered graph, taken as one pattern.
pub fn tags_of(h: &OrderedGraph) -> PatternTags {
    let left = left_tags(h);
    let mirrored = left_tags(&h.reverse_order());
    let mut t = left
        & (PatternTags::MONOTONE_PATH
            | PatternTags::CLIQUE
            | PatternTags::SINGLE_VERTEX
            | PatternTags::MONO3
            | PatternTags::LEFT_STAR
            | PatternTags::LEFT_SPIKE
            | PatternTags::LEFT_BROOM
            | PatternTags::LEFT_BRISTLE
            | PatternTags::CROSSED_LEFT_STAR
            | PatternTags::LEFT_SPLIT
            | PatternTags::LEFT_2STAR);
    for (l, r) in MIRROR {
        if mirrored.contains(l) {
            t |= r;
        }
    }
    t
}

/// Tags of the component `comp` of `b`, positions compressed to relative order.
pub fn classify_component(b: &OrderedGraph, comp: u64) -> Result<PatternTags> {
    if comp == 0 || comp & !low_mask(b.n()) != 0 || !b.is_connected_set(comp) {
        return Err(Error::NotAComponent);
    }
    let outside = Bits(comp).fold(0u64, |m, v| m | b.neighbours(v)) & !comp;
    if outside != 0 {
        return Err(Error::NotAComponent);
    }
    Ok(tags_of(&b.induced(comp)))
}

/// Component index per graph, for every choice, in lexicographic order.
pub fn transversals(component_counts: &[usize]) -> Vec<Vec<usize>> {
    component_counts
        .iter()
        .map(|&c| 0..c)
        .multi_cartesian_product()
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Template {
    #[serde(rename = "T-STARS")]
    Stars,
    #[serde(rename = "T-CLIQUES")]
    Cliques,
    #[serde(rename = "T-BRISTLE")]
    Bristle,
    #[serde(rename = "T-STARTRI")]
    StarTri,
    #[serde(rename = "T-SPLIT")]
    Split,
}

impl Template {
    pub const ALL: [Template; 5] = [
        Template::Stars,
        Template::Cliques,
        Template::Bristle,
        Template::StarTri,
        Template::Split,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            Template::Stars => "T-STARS",
            Template::Cliques => "T-CLIQUES",
            Template::Bristle => "T-BRISTLE",
            Template::StarTri => "T-STARTRI",
            Template::Split => "T-SPLIT",
        }
    }

    /// Every role is existential over the members, so the union of the
    /// members' tags decides membership.
    fn admits(&self, u: PatternTags) -> bool {
        use PatternTags as P;
        let has = |f: PatternTags| u.contains(f);
        match self {
            Template::Stars => {
                (has(P::LEFT_STAR) && has(P::RIGHT_BROOM)) || (has(P::RIGHT_STAR) && has(P::LEFT_BROOM))
            }
            Template::Cliques => (has(P::LEFT_STAR) || has(P::RIGHT_STAR)) && has(P::CLIQUE),
            Template::Bristle => {
                (has(P::LEFT_2STAR) && has(P::RIGHT_BRISTLE))
                    || (has(P::RIGHT_2STAR) && has(P::LEFT_BRISTLE))
            }
            Template::StarTri => {
                has(P::MONO3) && has(P::CROSSED_LEFT_STAR) && has(P::CROSSED_RIGHT_STAR)
            }
            Template::Split => {
                (has(P::LEFT_2STAR) && has(P::CROSSED_RIGHT_STAR) && has(P::LEFT_SPLIT))
                    || (has(P::RIGHT_2STAR) && has(P::CROSSED_LEFT_STAR) && has(P::RIGHT_SPLIT))
            }
        }
    }
}

/// First template, in [`Template::ALL`] order, that the members satisfy.
pub fn match_template(tagsets: &[PatternTags]) -> Option<Template> {
    let union = tagsets.iter().fold(PatternTags::empty(), |a, &b| a | b);
    Template::ALL.into_iter().find(|t| t.admits(union))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransversalRule {
    /// Component index in each graph.
    pub components: Vec<usize>,
    pub template: Template,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub numberings: Vec<Numbering>,
    pub graphs: Vec<OrderedGraph>,
    /// Position masks of each graph's components, ordered by least position.
    pub components: Vec<Vec<u64>>,
    pub tags: Vec<Vec<PatternTags>>,
    pub assignment: Vec<TransversalRule>,
}

struct Candidate {
    numbering: Numbering,
    graph: OrderedGraph,
    components: Vec<u64>,
    tags: Vec<PatternTags>,
    /// Distinct component tag sets; transversal checks only need these.
    signature: Vec<PatternTags>,
}

fn candidates(t: &Tournament) -> Vec<Candidate> {
    let mut seen_graphs = BTreeSet::new();
    let mut seen_sigs = BTreeSet::new();
    let mut out = Vec::new();
    for nu in Numbering::all(t.n()) {
        let g = backedge_graph(t, &nu).expect("sizes agree");
        if !seen_graphs.insert(g.clone()) {
            continue;
        }
        let components = g.components();
        let tags: Vec<PatternTags> = components
            .iter()
            .map(|&c| tags_of(&g.induced(c)))
            .collect();
        if tags.iter().any(|t| (*t & PatternTags::CLASSES).is_empty()) {
            continue;
        }
        let signature: Vec<PatternTags> = tags.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
        if !seen_sigs.insert(signature.clone()) {
            continue;
        }
        out.push(Candidate {
            numbering: nu,
            graph: g,
            components,
            tags,
            signature,
        });
    }
    out
}

fn covers(chosen: &[&Candidate]) -> bool {
    chosen
        .iter()
        .map(|c| c.signature.iter().copied())
        .multi_cartesian_product()
        .all(|tv| match_template(&tv).is_some())
}

/// Searches subsets of at most three numberings, in lexicographic order of
/// their first appearance, for one whose transversals all match a template.
///
/// `Ok(None)` means the search was complete and found nothing;
/// `BudgetExhausted` means it stopped after `budget` subset checks.
pub fn find_srseh_certificate(t: &Tournament, budget: u64) -> Result<Option<Certificate>> {
    let n = t.n();
    if n > CERTIFICATE_LIMIT {
        return Err(Error::TooLarge {
            what: "certificate search",
            n,
            limit: CERTIFICATE_LIMIT,
        });
    }
    let pool = candidates(t);
    let mut checks = 0u64;
    for size in 1..=MAX_CERTIFICATE_SIZE.min(pool.len()) {
        for subset in pool.iter().combinations(size) {
            if checks >= budget {
                return Err(Error::BudgetExhausted(budget));
            }
            checks += 1;
            if covers(&subset) {
                return Ok(Some(assemble(&subset)));
            }
        }
    }
    Ok(None)
}

fn assemble(chosen: &[&Candidate]) -> Certificate {
    let counts: Vec<usize> = chosen.iter().map(|c| c.components.len()).collect();
    let assignment = transversals(&counts)
        .into_iter()
        .map(|idx| {
            let tv: Vec<PatternTags> = idx.iter().zip(chosen).map(|(&i, c)| c.tags[i]).collect();
            TransversalRule {
                template: match_template(&tv).expect("covered"),
                components: idx,
            }
        })
        .collect();
    Certificate {
        numberings: chosen.iter().map(|c| c.numbering.clone()).collect(),
        graphs: chosen.iter().map(|c| c.graph.clone()).collect(),
        components: chosen.iter().map(|c| c.components.clone()).collect(),
        tags: chosen.iter().map(|c| c.tags.clone()).collect(),
        assignment,
    }
}

/// Explicit edge-set descriptions of each class, used to re-check
/// certificates without the tag machinery.
pub mod oracle {
    use super::*;

    fn edges(h: &OrderedGraph) -> BTreeSet<(usize, usize)> {
        h.edges().into_iter().collect()
    }

    fn set(it: impl IntoIterator<Item = (usize, usize)>) -> BTreeSet<(usize, usize)> {
        it.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect()
    }

    pub fn left_star(h: &OrderedGraph) -> bool {
        h.n() > 0 && edges(h) == set((1..h.n()).map(|j| (0, j)))
    }

    pub fn right_star(h: &OrderedGraph) -> bool {
        let n = h.n();
        n > 0 && edges(h) == set((0..n - 1).map(|j| (j, n - 1)))
    }

    pub fn left_2star(h: &OrderedGraph) -> bool {
        h.n() == 3 && left_star(h)
    }

    pub fn right_2star(h: &OrderedGraph) -> bool {
        h.n() == 3 && right_star(h)
    }

    pub fn left_broom(h: &OrderedGraph) -> bool {
        let n = h.n();
        n > 0
            && (1..=n).any(|m| {
                edges(h) == set((1..m).map(|i| (i - 1, i)).chain((m..n).map(|j| (m - 1, j))))
            })
    }

    pub fn right_broom(h: &OrderedGraph) -> bool {
        // Path v_n..v_{n-m+1}, then v_{n-m+1} joined to every earlier vertex.
        let n = h.n();
        n > 0
            && (1..=n).any(|m| {
                let hub = n - m;
                edges(h) == set((hub + 1..n).map(|i| (i - 1, i)).chain((0..hub).map(|j| (j, hub))))
            })
    }

    pub fn monotone_path3(h: &OrderedGraph) -> bool {
        h.n() == 3 && edges(h) == set([(0, 1), (1, 2)])
    }

    pub fn clique(h: &OrderedGraph) -> bool {
        let n = h.n();
        edges(h) == set((0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))))
    }

    pub fn left_bristle(h: &OrderedGraph) -> bool {
        let n = h.n();
        n > 2
            && (1..n - 1).any(|x| {
                edges(h) == set((1..n - 1).map(|j| (0, j)).chain([(x, n - 1)]))
            })
    }

    pub fn right_bristle(h: &OrderedGraph) -> bool {
        let n = h.n();
        n > 2
            && (1..n - 1).any(|x| {
                edges(h) == set((1..n - 1).map(|j| (j, n - 1)).chain([(0, x)]))
            })
    }

    pub fn crossed_left_star(h: &OrderedGraph) -> bool {
        let n = h.n();
        (1..n).tuple_combinations().any(|(a, b)| {
            edges(h) == set((1..n).map(|j| (0, j)).chain([(a, b)]))
        })
    }

    pub fn crossed_right_star(h: &OrderedGraph) -> bool {
        let n = h.n();
        n > 0
            && (0..n - 1).tuple_combinations().any(|(a, b)| {
                edges(h) == set((0..n - 1).map(|j| (j, n - 1)).chain([(a, b)]))
            })
    }

    pub fn left_split(h: &OrderedGraph) -> bool {
        let n = h.n();
        if n < 2 || h.adjacent(0, 1) {
            return false;
        }
        (2..n).tuple_combinations().all(|(a, b)| h.adjacent(a, b))
            && (2..n).all(|i| !(h.adjacent(i, 0) && h.adjacent(i, 1)))
    }

    pub fn right_split(h: &OrderedGraph) -> bool {
        left_split(&h.reverse_order())
    }

    /// The template's defining condition on a list of connected members.
    pub fn satisfies(template: Template, members: &[OrderedGraph]) -> bool {
        let any = |f: fn(&OrderedGraph) -> bool| members.iter().any(f);
        match template {
            Template::Stars => {
                (any(left_star) && any(right_broom)) || (any(right_star) && any(left_broom))
            }
            Template::Cliques => (any(left_star) || any(right_star)) && any(clique),
            Template::Bristle => {
                (any(left_2star) && any(right_bristle)) || (any(right_2star) && any(left_bristle))
            }
            Template::StarTri => {
                any(monotone_path3) && any(crossed_left_star) && any(crossed_right_star)
            }
            Template::Split => {
                (any(left_2star) && any(crossed_right_star) && any(left_split))
                    || (any(right_2star) && any(crossed_left_star) && any(right_split))
            }
        }
    }
}

/// Independent re-check: rebuilds each graph from its numbering, recomputes
/// components, and tests every transversal against its template with the
/// explicit edge-set descriptions. Returns the failures.
pub fn verify_certificate(t: &Tournament, cert: &Certificate) -> Vec<String> {
    let mut failures = Vec::new();
    if cert.numberings.is_empty() || cert.numberings.len() != cert.graphs.len() {
        failures.push("numberings and graphs do not correspond".to_string());
        return failures;
    }
    let mut comps = Vec::new();
    for (k, (nu, g)) in cert.numberings.iter().zip(&cert.graphs).enumerate() {
        match backedge_graph(t, nu) {
            Ok(rebuilt) if rebuilt == *g => {}
            _ => failures.push(format!("graph {k} is not the backedge graph of its numbering")),
        }
        let parts: Vec<OrderedGraph> = g.components().into_iter().map(|c| g.induced(c)).collect();
        comps.push(parts);
    }
    let counts: Vec<usize> = comps.iter().map(Vec::len).collect();
    let expected = transversals(&counts);
    let listed: Vec<Vec<usize>> = cert.assignment.iter().map(|r| r.components.clone()).collect();
    if listed != expected {
        failures.push("assignment does not list every transversal exactly once".to_string());
    }
    for rule in &cert.assignment {
        let members: Option<Vec<OrderedGraph>> = rule
            .components
            .iter()
            .zip(&comps)
            .map(|(&i, parts)| parts.get(i).cloned())
            .collect();
        match members {
            Some(m) if m.len() == comps.len() && oracle::satisfies(rule.template, &m) => {}
            _ => failures.push(format!(
                "transversal {:?} fails {}",
                rule.components,
                rule.template.id()
            )),
        }
    }
    failures
}
