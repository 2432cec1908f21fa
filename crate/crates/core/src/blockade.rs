//! Blockades, rainbow copies, traces, and the uniformity conditions on traces.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use num_rational::Ratio;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bits::{bit, low_mask, Bits};
use crate::enumerate::canonical_form;
use crate::error::{Error, Result};
use crate::ordered::OrderedGraph;
use crate::search::VertexMap;
use crate::tournament::Tournament;

/// Largest pattern size for the fully quantified checks.
pub const TAU_LIMIT: usize = 4;

/// Pairwise disjoint nonempty blocks over a host on `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Blockade {
    n: usize,
    blocks: Vec<u64>,
}

impl Blockade {
    pub fn new(n: usize, blocks: Vec<u64>) -> Result<Self> {
        if n > 64 {
            return Err(Error::SizeOutOfRange(n));
        }
        let mut seen = 0u64;
        for (i, &b) in blocks.iter().enumerate() {
            if b == 0 {
                return Err(Error::InvalidBlockade(format!("block {} is empty", i + 1)));
            }
            if b & !low_mask(n) != 0 {
                return Err(Error::InvalidBlockade(format!(
                    "block {} leaves the host",
                    i + 1
                )));
            }
            if b & seen != 0 {
                return Err(Error::InvalidBlockade(format!(
                    "block {} meets an earlier block",
                    i + 1
                )));
            }
            seen |= b;
        }
        Ok(Blockade { n, blocks })
    }

    /// `k` consecutive intervals of width `w` over `0..k*w`.
    pub fn intervals(k: usize, w: usize) -> Result<Self> {
        if w == 0 {
            return Err(Error::InvalidBlockade("width 0".into()));
        }
        let blocks = (0..k).map(|i| low_mask(w) << (i * w)).collect();
        Self::new(k * w, blocks)
    }

    pub fn singletons(n: usize) -> Result<Self> {
        Self::intervals(n, 1)
    }

    pub fn host_size(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn blocks(&self) -> &[u64] {
        &self.blocks
    }

    pub fn support(&self) -> u64 {
        self.blocks.iter().fold(0, |a, &b| a | b)
    }

    /// Smallest block size; 0 for the empty blockade.
    pub fn width(&self) -> usize {
        self.blocks
            .iter()
            .map(|b| b.count_ones() as usize)
            .min()
            .unwrap_or(0)
    }

    /// Every element of an earlier block precedes every element of a later one.
    pub fn is_respectful(&self) -> bool {
        self.blocks
            .windows(2)
            .all(|w| 63 - w[0].leading_zeros() < w[1].trailing_zeros())
    }

    pub fn block_of(&self, v: usize) -> Result<usize> {
        self.blocks
            .iter()
            .position(|&b| v < 64 && b & bit(v) != 0)
            .ok_or(Error::VertexNotInBlockade(v))
    }

    /// Blocks at the given indices, in the given order.
    pub fn sub_blockade(&self, indices: &[usize]) -> Result<Self> {
        let blocks = indices
            .iter()
            .map(|&i| {
                self.blocks
                    .get(i)
                    .copied()
                    .ok_or_else(|| Error::InvalidBlockade(format!("no block {}", i + 1)))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(self.n, blocks)
    }

    /// A blockade of the same length whose blocks are subsets of these.
    pub fn is_contraction_of(&self, other: &Blockade) -> bool {
        self.n == other.n
            && self.len() == other.len()
            && self.blocks.iter().zip(&other.blocks).all(|(a, b)| a & !b == 0)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("blockade {}\n", self.len());
        for &b in &self.blocks {
            s.push_str(&Bits(b).map(|v| (v + 1).to_string()).join(" "));
            s.push('\n');
        }
        s
    }

    /// Parses the text format for a host on `n` vertices.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty blockade".into()))?;
        let k: usize = header
            .strip_prefix("blockade")
            .and_then(|r| r.trim().parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad header: {header:?}")))?;
        let mut blocks = Vec::with_capacity(k);
        for line in lines {
            let mut m = 0u64;
            for w in line.split_whitespace() {
                let v: usize = w
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad vertex {w:?}")))?;
                if v == 0 || v > n {
                    return Err(Error::VertexNotInBlockade(v));
                }
                m |= bit(v - 1);
            }
            blocks.push(m);
        }
        if blocks.len() != k {
            return Err(Error::Parse(format!(
                "header says {k} blocks, found {}",
                blocks.len()
            )));
        }
        Self::new(n, blocks)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Host {
    Ordered(OrderedGraph),
    Tournament(Tournament),
}

impl Host {
    pub fn n(&self) -> usize {
        match self {
            Host::Ordered(g) => g.n(),
            Host::Tournament(t) => t.n(),
        }
    }
}

/// Patterns are matched order-preservingly in ordered hosts and up to
/// isomorphism in tournament hosts.
pub type Pattern = Host;

fn rainbow_ordered(g: &OrderedGraph, bl: &[u64], h: &OrderedGraph) -> Option<VertexMap> {
    fn go(
        g: &OrderedGraph,
        bl: &[u64],
        h: &OrderedGraph,
        i: usize,
        used: u64,
        map: &mut Vec<usize>,
    ) -> bool {
        if i == h.n() {
            return true;
        }
        let lo = map.last().map_or(0, |&p| p + 1);
        let mut cand = !low_mask(lo) & low_mask(g.n());
        let free = Bits(!used & low_mask(bl.len())).fold(0u64, |m, b| m | bl[b]);
        cand &= free;
        for (j, &p) in map.iter().enumerate() {
            cand &= if h.adjacent(j, i) {
                g.neighbours(p)
            } else {
                !g.neighbours(p)
            };
        }
        for v in Bits(cand) {
            let b = bl.iter().position(|&m| m & bit(v) != 0).expect("v in some block");
            map.push(v);
            if go(g, bl, h, i + 1, used | bit(b), map) {
                return true;
            }
            map.pop();
        }
        false
    }
    let mut map = Vec::with_capacity(h.n());
    go(g, bl, h, 0, 0, &mut map).then_some(map)
}

fn rainbow_tournament(g: &Tournament, bl: &[u64], h: &Tournament) -> Option<VertexMap> {
    fn go(
        g: &Tournament,
        bl: &[u64],
        h: &Tournament,
        i: usize,
        used: u64,
        map: &mut Vec<usize>,
    ) -> bool {
        if i == h.n() {
            return true;
        }
        let mut cand = Bits(!used & low_mask(bl.len())).fold(0u64, |m, b| m | bl[b]);
        for (j, &p) in map.iter().enumerate() {
            cand &= if h.beats(j, i) { g.out_set(p) } else { g.in_set(p) };
        }
        for v in Bits(cand) {
            let b = bl.iter().position(|&m| m & bit(v) != 0).expect("v in some block");
            map.push(v);
            if go(g, bl, h, i + 1, used | bit(b), map) {
                return true;
            }
            map.pop();
        }
        false
    }
    let mut map = Vec::with_capacity(h.n());
    go(g, bl, h, 0, 0, &mut map).then_some(map)
}

/// An induced copy of `j` with its vertices in distinct blocks.
pub fn rainbow_copy(host: &Host, b: &Blockade, j: &Pattern) -> Result<Option<VertexMap>> {
    rainbow_copy_in(host, b.blocks(), j)
}

fn rainbow_copy_in(host: &Host, blocks: &[u64], j: &Pattern) -> Result<Option<VertexMap>> {
    match (host, j) {
        (Host::Ordered(g), Host::Ordered(h)) => Ok(rainbow_ordered(g, blocks, h)),
        (Host::Tournament(g), Host::Tournament(h)) => Ok(rainbow_tournament(g, blocks, h)),
        _ => Err(Error::InvalidArgument(
            "host and pattern must be of the same kind".into(),
        )),
    }
}

/// Sets of block indices (as masks) supporting a rainbow copy of `j`.
pub fn trace(host: &Host, b: &Blockade, j: &Pattern) -> Result<BTreeSet<u64>> {
    let k = j.n();
    let mut out = BTreeSet::new();
    for s in (0..b.len()).combinations(k) {
        let bl: Vec<u64> = s.iter().map(|&i| b.blocks()[i]).collect();
        if rainbow_copy_in(host, &bl, j)?.is_some() {
            out.insert(s.iter().fold(0u64, |m, &i| m | bit(i)));
        }
    }
    Ok(out)
}

/// Identifies a pattern: an ordered graph by its upper-triangle adjacency
/// code, a tournament by its canonical code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PatternKey {
    pub size: usize,
    pub code: u64,
}

impl PatternKey {
    pub fn pattern(&self, tournament: bool) -> Pattern {
        if tournament {
            Host::Tournament(
                Tournament::from_upper_code(self.size, self.code).expect("valid pattern code"),
            )
        } else {
            let mut rows = vec![0u64; self.size];
            let mut k = self.size * self.size.saturating_sub(1) / 2;
            for a in 0..self.size {
                for b in a + 1..self.size {
                    k -= 1;
                    if self.code >> k & 1 == 1 {
                        rows[a] |= bit(b);
                        rows[b] |= bit(a);
                    }
                }
            }
            Host::Ordered(OrderedGraph::from_rows(rows).expect("valid pattern code"))
        }
    }
}

fn key_of(host: &Host, verts: &[usize]) -> PatternKey {
    let size = verts.len();
    let code = match host {
        Host::Ordered(g) => {
            let mut sorted = verts.to_vec();
            sorted.sort_unstable();
            let mut code = 0u64;
            for a in 0..size {
                for b in a + 1..size {
                    code = code << 1 | u64::from(g.adjacent(sorted[a], sorted[b]));
                }
            }
            code
        }
        Host::Tournament(t) => {
            let sub = t.induced(verts).expect("nonempty selection");
            canonical_form(&sub).expect("small pattern").code
        }
    };
    PatternKey { size, code }
}

/// Traces of every pattern on at most `tau` vertices, from one pass over all
/// rainbow vertex tuples. Patterns absent from the map have empty trace.
pub type TraceTable = BTreeMap<PatternKey, BTreeSet<u64>>;

pub fn trace_table(host: &Host, b: &Blockade, tau: usize, budget: u64) -> Result<TraceTable> {
    if tau > TAU_LIMIT {
        return Err(Error::InvalidArgument(format!(
            "pattern size {tau} exceeds {TAU_LIMIT}"
        )));
    }
    let mut work = 0u64;
    let mut table = TraceTable::new();
    let blocks: Vec<Vec<usize>> = b.blocks().iter().map(|&m| Bits(m).collect()).collect();
    for k in 1..=tau.min(b.len()) {
        for s in (0..b.len()).combinations(k) {
            let tuples: u64 = s.iter().map(|&i| blocks[i].len() as u64).product();
            work = work.saturating_add(tuples);
            if work > budget {
                return Err(Error::BudgetExhausted(budget));
            }
            let support = s.iter().fold(0u64, |m, &i| m | bit(i));
            for verts in s.iter().map(|&i| blocks[i].iter().copied()).multi_cartesian_product() {
                table.entry(key_of(host, &verts)).or_default().insert(support);
            }
        }
    }
    Ok(table)
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniformityViolation {
    pub pattern: PatternKey,
    /// A `|J|`-set of block indices missing from a nonempty trace.
    pub missing: u64,
}

/// Every pattern on at most `tau` vertices has empty or complete trace.
pub fn is_support_uniform(
    host: &Host,
    b: &Blockade,
    tau: usize,
    budget: u64,
) -> Result<std::result::Result<(), UniformityViolation>> {
    let table = trace_table(host, b, tau, budget)?;
    Ok(first_nonuniform(&table, b.len()))
}

fn first_nonuniform(
    table: &TraceTable,
    len: usize,
) -> std::result::Result<(), UniformityViolation> {
    for (key, supports) in table {
        if supports.len() != binomial(len, key.size) {
            let missing = (0..len)
                .combinations(key.size)
                .map(|s| s.iter().fold(0u64, |m, &i| m | bit(i)))
                .find(|s| !supports.contains(s))
                .expect("some support is missing");
            return Err(UniformityViolation {
                pattern: *key,
                missing,
            });
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "verdict")]
pub enum Invariance {
    VerifiedExhaustive { contractions: u64 },
    Refuted { contraction: Blockade, pattern: PatternKey },
    Undetermined { sampled: u64, total: u128 },
}

/// Compares traces under contractions whose blocks all have `ceil(kappa*W)`
/// elements.
///
/// Shrinking blocks can only remove rainbow copies, so a contraction with
/// larger blocks has a trace sandwiched between that of one of these and
/// that of the original. Checking only these is therefore complete.
pub fn check_support_invariance(
    host: &Host,
    b: &Blockade,
    kappa: Ratio<u64>,
    tau: usize,
    budget: u64,
    seed: u64,
) -> Result<Invariance> {
    if kappa <= Ratio::from_integer(0) || kappa > Ratio::from_integer(1) {
        return Err(Error::InvalidArgument("kappa must lie in (0, 1]".into()));
    }
    let m = (kappa * Ratio::from_integer(b.width() as u64)).ceil().to_integer() as usize;
    let m = m.max(1);
    let reference = trace_table(host, b, tau, u64::MAX)?;
    let choices: Vec<Vec<u64>> = b
        .blocks()
        .iter()
        .map(|&blk| {
            Bits(blk)
                .combinations(m)
                .map(|c| c.into_iter().fold(0u64, |s, v| s | bit(v)))
                .collect()
        })
        .collect();
    let total: u128 = choices.iter().map(|c| c.len() as u128).product();
    let check = |blocks: Vec<u64>| -> Result<Option<Invariance>> {
        let c = Blockade::new(b.n, blocks)?;
        let t = trace_table(host, &c, tau, u64::MAX)?;
        if t != reference {
            let pattern = reference
                .iter()
                .find(|(k, v)| t.get(k) != Some(v))
                .map(|(k, _)| *k)
                .or_else(|| t.keys().find(|k| !reference.contains_key(k)).copied())
                .expect("tables differ");
            return Ok(Some(Invariance::Refuted {
                contraction: c,
                pattern,
            }));
        }
        Ok(None)
    };
    if total <= budget as u128 {
        for blocks in choices.iter().map(|c| c.iter().copied()).multi_cartesian_product() {
            if let Some(r) = check(blocks)? {
                return Ok(r);
            }
        }
        if choices.is_empty() {
            return Ok(Invariance::VerifiedExhaustive { contractions: 1 });
        }
        return Ok(Invariance::VerifiedExhaustive {
            contractions: total as u64,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..budget {
        let blocks: Vec<u64> = choices
            .iter()
            .map(|c| *c.choose(&mut rng).expect("m <= block size"))
            .collect();
        if let Some(r) = check(blocks)? {
            return Ok(r);
        }
    }
    Ok(Invariance::Undetermined {
        sampled: budget,
        total,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Minor {
    pub blockade: Blockade,
    pub rounds: usize,
    pub invariance: Invariance,
}

/// Vertices of `block` ranked by adjacency into the other blocks.
fn activity(host: &Host, v: usize, others: u64) -> u32 {
    match host {
        Host::Ordered(g) => (g.neighbours(v) & others).count_ones(),
        Host::Tournament(t) => (t.out_set(v) & others).count_ones(),
    }
}

fn halve(host: &Host, b: &Blockade) -> Blockade {
    let all = b.support();
    let blocks = b
        .blocks()
        .iter()
        .map(|&blk| {
            let others = all & !blk;
            let mut vs: Vec<usize> = Bits(blk).collect();
            vs.sort_by_key(|&v| (activity(host, v, others), v));
            vs.truncate(vs.len().div_ceil(2));
            vs.into_iter().fold(0u64, |m, v| m | bit(v))
        })
        .collect();
    Blockade::new(b.n, blocks).expect("halving keeps blocks disjoint and nonempty")
}

/// Best-effort search for a length-`k` minor that is `tau`-support-uniform
/// and not refuted as `(kappa, tau)`-support-invariant.
///
/// Each round tries every `k`-subset of the current blocks; if none passes,
/// every block is halved, keeping its least active vertices.
pub fn find_uniform_minor(
    host: &Host,
    b: &Blockade,
    k: usize,
    tau: usize,
    kappa: Ratio<u64>,
    budget: u64,
) -> Result<Minor> {
    if k == 0 || k > b.len() {
        return Err(Error::InvalidArgument(format!(
            "minor length {k} must lie in 1..={}",
            b.len()
        )));
    }
    let mut current = b.clone();
    let mut rounds = 0;
    loop {
        for idx in (0..current.len()).combinations(k) {
            let sub = current.sub_blockade(&idx)?;
            let uniform = match is_support_uniform(host, &sub, tau, budget) {
                Ok(u) => u.is_ok(),
                Err(Error::BudgetExhausted(_)) => false,
                Err(e) => return Err(e),
            };
            if !uniform {
                continue;
            }
            let inv = check_support_invariance(host, &sub, kappa, tau, budget, rounds as u64)?;
            if !matches!(inv, Invariance::Refuted { .. }) {
                return Ok(Minor {
                    blockade: sub,
                    rounds,
                    invariance: inv,
                });
            }
        }
        if current.width() <= 1 {
            return Err(Error::SearchFailed {
                rounds,
                best_width: current.width(),
            });
        }
        current = halve(host, &current);
        rounds += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::contains_ordered;

    fn ordered(n: usize, e: &[(usize, usize)]) -> Host {
        Host::Ordered(OrderedGraph::from_edges(n, e).unwrap())
    }

    #[test]
    fn validation_and_width() {
        assert!(Blockade::new(4, vec![0b11, 0b10]).is_err());
        assert!(Blockade::new(4, vec![0b11, 0]).is_err());
        assert!(Blockade::new(2, vec![0b100]).is_err());
        let b = Blockade::new(6, vec![0b11, 0b11100]).unwrap();
        assert_eq!(b.width(), 2);
        assert!(b.is_respectful());
        assert!(!Blockade::new(6, vec![0b11100, 0b11]).unwrap().is_respectful());
        assert!(!Blockade::new(6, vec![0b101, 0b10]).unwrap().is_respectful());
        assert_eq!(b.block_of(4), Ok(1));
        assert_eq!(b.block_of(5), Err(Error::VertexNotInBlockade(5)));
    }

    #[test]
    fn text_round_trip() {
        let b = Blockade::intervals(3, 2).unwrap();
        assert_eq!(b.to_text(), "blockade 3\n1 2\n3 4\n5 6\n");
        assert_eq!(Blockade::parse(&b.to_text(), 6), Ok(b));
        assert!(Blockade::parse("blockade 2\n1 2\n", 6).is_err());
    }

    #[test]
    fn singleton_rainbow_is_ordinary_containment() {
        let g = OrderedGraph::from_edges_1based(6, crate::catalog::OBS_3).unwrap();
        let b = Blockade::singletons(6).unwrap();
        let h = crate::catalog::obs(1).unwrap();
        let r = rainbow_copy(&Host::Ordered(g.clone()), &b, &Host::Ordered(h.clone())).unwrap();
        assert_eq!(r.is_some(), contains_ordered(&g, &h).is_some());
        let single = Host::Ordered(OrderedGraph::empty(1).unwrap());
        assert!(rainbow_copy(&Host::Ordered(g), &b, &single).unwrap().is_some());
    }

    #[test]
    fn traces_on_edgeless_host() {
        let host = Host::Ordered(OrderedGraph::empty(8).unwrap());
        let b = Blockade::intervals(4, 2).unwrap();
        let stable = Host::Ordered(OrderedGraph::empty(3).unwrap());
        assert_eq!(trace(&host, &b, &stable).unwrap().len(), 4);
        let edge = ordered(2, &[(0, 1)]);
        assert!(trace(&host, &b, &edge).unwrap().is_empty());
        assert_eq!(is_support_uniform(&host, &b, 4, u64::MAX).unwrap(), Ok(()));
    }

    #[test]
    fn complete_host_is_uniform() {
        let host = Host::Ordered(OrderedGraph::complete(9).unwrap());
        let b = Blockade::intervals(3, 3).unwrap();
        assert_eq!(is_support_uniform(&host, &b, 3, u64::MAX).unwrap(), Ok(()));
    }

    #[test]
    fn one_edge_breaks_uniformity() {
        // Edge between blocks 1 and 2 only.
        let host = ordered(6, &[(0, 2)]);
        let b = Blockade::intervals(3, 2).unwrap();
        let v = is_support_uniform(&host, &b, 2, u64::MAX).unwrap().unwrap_err();
        assert_eq!(v.pattern, PatternKey { size: 2, code: 1 });
        let edge = ordered(2, &[(0, 1)]);
        assert_eq!(trace(&host, &b, &edge).unwrap(), BTreeSet::from([0b011]));
    }

    #[test]
    fn invariance_examples() {
        let host = ordered(4, &[(0, 2)]);
        let s = Blockade::singletons(4).unwrap();
        assert_eq!(
            check_support_invariance(&host, &s, Ratio::new(1, 1), 2, 100, 0).unwrap(),
            Invariance::VerifiedExhaustive { contractions: 1 }
        );
        // Two blocks of two; the only edge uses vertex 0, which a half-width
        // contraction may drop.
        let b = Blockade::intervals(2, 2).unwrap();
        let host = ordered(4, &[(0, 2)]);
        assert!(matches!(
            check_support_invariance(&host, &b, Ratio::new(1, 2), 2, 100, 0).unwrap(),
            Invariance::Refuted { .. }
        ));
        let edgeless = Host::Ordered(OrderedGraph::empty(4).unwrap());
        assert!(matches!(
            check_support_invariance(&edgeless, &b, Ratio::new(1, 2), 2, 100, 0).unwrap(),
            Invariance::VerifiedExhaustive { .. }
        ));
    }

    #[test]
    fn trace_shrinks_under_contraction() {
        let host = ordered(8, &[(0, 3), (1, 4), (2, 6), (5, 7), (0, 7)]);
        let b = Blockade::intervals(4, 2).unwrap();
        let full = trace_table(&host, &b, 3, u64::MAX).unwrap();
        for keep in 0..16u64 {
            let blocks: Vec<u64> = (0..4)
                .map(|i| if keep >> i & 1 == 1 { 1u64 << (2 * i) } else { 3u64 << (2 * i) })
                .collect();
            let c = Blockade::new(8, blocks).unwrap();
            assert!(c.is_contraction_of(&b));
            let small = trace_table(&host, &c, 3, u64::MAX).unwrap();
            for (k, v) in &small {
                assert!(v.is_subset(&full[k]));
            }
        }
    }

    #[test]
    fn minor_on_edgeless_host_is_identity_prefix() {
        let host = Host::Ordered(OrderedGraph::empty(12).unwrap());
        let b = Blockade::intervals(4, 3).unwrap();
        let m = find_uniform_minor(&host, &b, 3, 3, Ratio::new(1, 2), 10_000).unwrap();
        assert_eq!(m.blockade, b.sub_blockade(&[0, 1, 2]).unwrap());
        assert_eq!(m.rounds, 0);
    }

    #[test]
    fn tournament_host_traces() {
        let t = crate::catalog::p7();
        let host = Host::Tournament(t);
        let b = Blockade::singletons(7).unwrap();
        let tt4 = Host::Tournament(Tournament::transitive(4).unwrap());
        assert!(trace(&host, &b, &tt4).unwrap().is_empty());
        let tt3 = Host::Tournament(Tournament::transitive(3).unwrap());
        // 35 triples, 14 of them cyclic.
        assert_eq!(trace(&host, &b, &tt3).unwrap().len(), 21);
    }
}
