//! Induced containment, pure pairs, and the translation of pure pairs
//! between a tournament and its backedge graphs.

use serde::{Deserialize, Serialize};

use crate::backedge::backedge_graph;
use crate::bits::{bit, low_mask, Bits};
use crate::error::{Error, Result};
use crate::numbering::Numbering;
use crate::ordered::OrderedGraph;
use crate::tournament::Tournament;

pub const PATTERN_LIMIT: usize = 8;
pub const PURE_PAIR_LIMIT: usize = 24;

/// Injection `h -> g` with `map[i]` the image of pattern vertex `i`.
pub type VertexMap = Vec<usize>;

pub fn contains_subtournament(g: &Tournament, h: &Tournament) -> Option<VertexMap> {
    if h.n() > g.n() {
        return None;
    }
    // Place pattern vertices with the most constrained degree first.
    let mut order: Vec<usize> = (0..h.n()).collect();
    let skew = |v: usize| (2 * h.out_degree(v)).abs_diff(h.n() - 1);
    order.sort_by_key(|&v| (std::cmp::Reverse(skew(v)), v));
    let min_out: Vec<usize> = (0..h.n()).map(|v| h.out_degree(v)).collect();
    let min_in: Vec<usize> = (0..h.n()).map(|v| h.n() - 1 - h.out_degree(v)).collect();
    let mut map = vec![usize::MAX; h.n()];
    fn go(
        g: &Tournament,
        h: &Tournament,
        order: &[usize],
        k: usize,
        used: u64,
        map: &mut [usize],
        min_out: &[usize],
        min_in: &[usize],
    ) -> bool {
        if k == order.len() {
            return true;
        }
        let hv = order[k];
        let mut cand = g.vertex_mask() & !used;
        for &hu in &order[..k] {
            let gu = map[hu];
            cand &= if h.beats(hu, hv) {
                g.out_set(gu)
            } else {
                g.in_set(gu)
            };
        }
        for gv in Bits(cand) {
            if g.out_degree(gv) < min_out[hv] || g.n() - 1 - g.out_degree(gv) < min_in[hv] {
                continue;
            }
            map[hv] = gv;
            if go(g, h, order, k + 1, used | bit(gv), map, min_out, min_in) {
                return true;
            }
        }
        false
    }
    go(g, h, &order, 0, 0, &mut map, &min_out, &min_in).then_some(map)
}

/// Order-preserving injection of positions whose image induces exactly `h`.
pub fn contains_ordered(g: &OrderedGraph, h: &OrderedGraph) -> Option<VertexMap> {
    contains_ordered_within(g, h, &vec![low_mask(g.n()); h.n()])
}

/// As [`contains_ordered`], with pattern position `i` restricted to `allowed[i]`.
pub fn contains_ordered_within(
    g: &OrderedGraph,
    h: &OrderedGraph,
    allowed: &[u64],
) -> Option<VertexMap> {
    let k = h.n();
    if k > g.n() {
        return None;
    }
    if k == 0 {
        return Some(Vec::new());
    }
    let mut map = vec![0usize; k];
    fn go(g: &OrderedGraph, h: &OrderedGraph, allowed: &[u64], i: usize, map: &mut [usize]) -> bool {
        let k = h.n();
        if i == k {
            return true;
        }
        let lo = if i == 0 { 0 } else { map[i - 1] + 1 };
        // Leave room for the remaining k-1-i pattern positions.
        let hi = g.n() - (k - 1 - i);
        let mut cand = allowed[i] & low_mask(hi) & !low_mask(lo);
        for j in 0..i {
            cand &= if h.adjacent(j, i) {
                g.neighbours(map[j])
            } else {
                !g.neighbours(map[j])
            };
        }
        for v in Bits(cand) {
            map[i] = v;
            if go(g, h, allowed, i + 1, map) {
                return true;
            }
        }
        false
    }
    go(g, h, allowed, 0, &mut map).then_some(map)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PairKind {
    /// Every vertex of `a` beats every vertex of `b`.
    Tournament,
    Anticomplete,
    Complete,
}

/// Disjoint nonempty sets given as bit masks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PurePair {
    pub a: u64,
    pub b: u64,
    pub kind: PairKind,
}

impl std::fmt::Display for PurePair {
    /// 1-based labels, e.g. `{1, 2} => {5, 6}`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let side = |m: u64| Bits(m).map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(", ");
        let sep = match self.kind {
            PairKind::Tournament => "=>",
            PairKind::Anticomplete => "||",
            PairKind::Complete => "--",
        };
        write!(f, "{{{}}} {sep} {{{}}}", side(self.a), side(self.b))
    }
}

impl PurePair {
    pub fn order(&self) -> usize {
        self.a.count_ones().min(self.b.count_ones()) as usize
    }

    /// Trims both sides to their `order()` least elements.
    pub fn balanced(&self) -> PurePair {
        let k = self.order();
        let keep = |m: u64| Bits(m).take(k).fold(0u64, |acc, v| acc | bit(v));
        PurePair {
            a: keep(self.a),
            b: keep(self.b),
            kind: self.kind,
        }
    }
}

pub fn is_pure_pair(t: &Tournament, a: u64, b: u64) -> bool {
    a != 0
        && b != 0
        && a & b == 0
        && (a | b) & !t.vertex_mask() == 0
        && Bits(a).all(|v| t.out_set(v) & b == b)
}

pub fn is_anticomplete(g: &OrderedGraph, a: u64, b: u64) -> bool {
    a != 0 && b != 0 && a & b == 0 && Bits(a).all(|v| g.neighbours(v) & b == 0)
}

pub fn is_complete_between(g: &OrderedGraph, a: u64, b: u64) -> bool {
    a != 0 && b != 0 && a & b == 0 && Bits(a).all(|v| g.neighbours(v) & b == b)
}

struct Biclique<'a> {
    rows: &'a [u64],
    best: usize,
    best_pair: (u64, u64),
    nodes: u64,
    budget: u64,
}

impl Biclique<'_> {
    /// Maximises `min(|A|, |C|)` with `C` the common row of `A`. `cand` lists
    /// the vertices still allowed into `A`, in branching order.
    fn go(&mut self, a: u64, common: u64, cand: &[usize]) {
        self.nodes += 1;
        let value = (a.count_ones() as usize).min(common.count_ones() as usize);
        if value > self.best {
            self.best = value;
            self.best_pair = (a, common);
        }
        if self.nodes >= self.budget {
            return;
        }
        let cap = common.count_ones() as usize;
        if cap <= self.best || a.count_ones() as usize + cand.len() <= self.best {
            return;
        }
        for (idx, &v) in cand.iter().enumerate() {
            let next = common & self.rows[v];
            if next.count_ones() as usize <= self.best {
                continue;
            }
            if (a.count_ones() as usize) + (cand.len() - idx) <= self.best {
                break;
            }
            let rest: Vec<usize> = cand[idx + 1..]
                .iter()
                .copied()
                .filter(|&u| u != v && (next & self.rows[u]).count_ones() as usize > self.best)
                .collect();
            self.go(a | bit(v), next & !bit(v), &rest);
            if self.nodes >= self.budget {
                return;
            }
        }
    }
}

/// Result of a possibly budget-limited biclique search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Search {
    pub pair: Option<(u64, u64)>,
    pub exact: bool,
}

/// `rows[v]` must exclude `v`. Branching follows descending row size.
fn max_biclique(n: usize, rows: &[u64], budget: u64) -> Search {
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(rows[v].count_ones()), v));
    let mut s = Biclique {
        rows,
        best: 0,
        best_pair: (0, 0),
        nodes: 0,
        budget,
    };
    s.go(0, low_mask(n), &order);
    Search {
        pair: (s.best > 0).then_some(s.best_pair),
        exact: s.nodes < budget,
    }
}

/// A maximum-order pure pair, or `None` for the 1-vertex tournament.
pub fn max_pure_pair(t: &Tournament) -> Result<Option<PurePair>> {
    if t.n() > PURE_PAIR_LIMIT {
        return Err(Error::TooLarge {
            what: "exact pure pair search",
            n: t.n(),
            limit: PURE_PAIR_LIMIT,
        });
    }
    Ok(max_pure_pair_bounded(t, u64::MAX).0)
}

/// Best pure pair found within `budget` search nodes; the flag is true when
/// the search completed and the result is exact.
pub fn max_pure_pair_bounded(t: &Tournament, budget: u64) -> (Option<PurePair>, bool) {
    let s = max_biclique(t.n(), t.rows(), budget);
    let pair = s.pair.map(|(a, b)| PurePair {
        a,
        b,
        kind: PairKind::Tournament,
    });
    (pair, s.exact)
}

/// A maximum-order anticomplete pair, ignoring the vertex order.
pub fn max_anticomplete_pair(g: &OrderedGraph) -> Result<Option<PurePair>> {
    let n = g.n();
    if n > PURE_PAIR_LIMIT {
        return Err(Error::TooLarge {
            what: "exact anticomplete pair search",
            n,
            limit: PURE_PAIR_LIMIT,
        });
    }
    let rows: Vec<u64> = g.complement().rows().to_vec();
    let s = max_biclique(n, &rows, u64::MAX);
    Ok(s.pair.map(|(a, b)| PurePair {
        a,
        b,
        kind: PairKind::Anticomplete,
    }))
}

/// A maximum-order complete pair (disjoint sets, all cross pairs adjacent).
pub fn max_complete_pair(g: &OrderedGraph) -> Result<Option<PurePair>> {
    let n = g.n();
    if n > PURE_PAIR_LIMIT {
        return Err(Error::TooLarge {
            what: "exact complete pair search",
            n,
            limit: PURE_PAIR_LIMIT,
        });
    }
    let s = max_biclique(n, g.rows(), u64::MAX);
    Ok(s.pair.map(|(a, b)| PurePair {
        a,
        b,
        kind: PairKind::Complete,
    }))
}

/// The larger of [`max_anticomplete_pair`] and [`max_complete_pair`].
pub fn max_graph_pure_pair(g: &OrderedGraph) -> Result<Option<PurePair>> {
    let anti = max_anticomplete_pair(g)?;
    let comp = max_complete_pair(g)?;
    Ok(match (anti, comp) {
        (Some(x), Some(y)) => Some(if y.order() > x.order() { y } else { x }),
        (x, y) => x.or(y),
    })
}

fn positions_of(nu: &Numbering, set: u64) -> u64 {
    let pos = nu.positions();
    Bits(set).fold(0, |m, v| m | bit(pos[v]))
}

fn vertices_at(nu: &Numbering, set: u64) -> u64 {
    let perm = nu.as_slice();
    Bits(set).fold(0, |m, p| m | bit(perm[p]))
}

/// Least position `i` at which the prefix `0..=i` holds `h` members of `x`
/// or of `y`, and whether `x` got there (positions hold one member only, so
/// the sides cannot arrive together).
fn prefix_split(x: u64, y: u64, h: usize) -> (usize, bool) {
    let mut cx = 0;
    let mut cy = 0;
    for i in 0..64 {
        if x & bit(i) != 0 {
            cx += 1;
        }
        if y & bit(i) != 0 {
            cy += 1;
        }
        if cx >= h {
            return (i, true);
        }
        if cy >= h {
            return (i, false);
        }
    }
    unreachable!("both sides hold at least h members")
}

/// Pure pair of `t` to an anticomplete or complete pair of its backedge graph
/// under `nu`, of order at least `ceil(t/2)`. Output sets are positions.
pub fn pure_to_backedge(t: &Tournament, nu: &Numbering, p: &PurePair) -> Result<PurePair> {
    if p.kind != PairKind::Tournament || !is_pure_pair(t, p.a, p.b) {
        return Err(Error::NotAPurePair);
    }
    if nu.len() != t.n() {
        return Err(Error::NumberingSizeMismatch {
            expected: t.n(),
            found: nu.len(),
        });
    }
    let a = positions_of(nu, p.a);
    let b = positions_of(nu, p.b);
    let h = p.order().div_ceil(2);
    let (i, a_first) = prefix_split(a, b, h);
    let upto = low_mask(i + 1);
    Ok(if a_first {
        // Earlier winners: no backedges.
        PurePair {
            a: a & upto,
            b: b & !upto,
            kind: PairKind::Anticomplete,
        }
    } else {
        // Later winners: all backedges.
        PurePair {
            a: b & upto,
            b: a & !upto,
            kind: PairKind::Complete,
        }
    })
}

/// Anticomplete or complete pair of the backedge graph under `nu` (positions)
/// to a pure pair of `t` (vertices) of order at least `ceil(t/2)`.
pub fn backedge_to_pure(t: &Tournament, nu: &Numbering, q: &PurePair) -> Result<PurePair> {
    let g = backedge_graph(t, nu)?;
    let ok = match q.kind {
        PairKind::Anticomplete => is_anticomplete(&g, q.a, q.b),
        PairKind::Complete => is_complete_between(&g, q.a, q.b),
        PairKind::Tournament => false,
    };
    if !ok {
        return Err(Error::NotAPurePair);
    }
    let h = q.order().div_ceil(2);
    let (i, a_first) = prefix_split(q.a, q.b, h);
    let (x, y) = if a_first { (q.a, q.b) } else { (q.b, q.a) };
    let upto = low_mask(i + 1);
    let early = vertices_at(nu, x & upto);
    let late = vertices_at(nu, y & !upto);
    let (a, b) = match q.kind {
        PairKind::Anticomplete => (early, late),
        _ => (late, early),
    };
    Ok(PurePair {
        a,
        b,
        kind: PairKind::Tournament,
    })
}

/// A digraph on `0..n` with arbitrary arcs, loops excluded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    out: Vec<u64>,
}

impl Digraph {
    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        if n > 64 {
            return Err(Error::SizeOutOfRange(n));
        }
        let mut out = vec![0u64; n];
        for &(a, b) in arcs {
            if a >= n || b >= n || a == b {
                return Err(Error::InvalidEdge(a, b));
            }
            out[a] |= bit(b);
        }
        Ok(Digraph { out })
    }

    pub fn from_tournament(t: &Tournament) -> Self {
        Digraph {
            out: t.rows().to_vec(),
        }
    }
}

/// Any two out-neighbours of a common vertex are joined by an arc.
pub fn is_out_simplicial(d: &Digraph) -> bool {
    let n = d.out.len();
    (0..n).all(|v| {
        Bits(d.out[v]).all(|x| {
            Bits(d.out[v] & !bit(x)).all(|y| d.out[x] & bit(y) != 0 || d.out[y] & bit(x) != 0)
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    /// Oracle: every injection, checked arc by arc.
    fn naive_contains(g: &Tournament, h: &Tournament) -> bool {
        fn go(g: &Tournament, h: &Tournament, map: &mut Vec<usize>) -> bool {
            let k = map.len();
            if k == h.n() {
                return true;
            }
            for v in 0..g.n() {
                if map.contains(&v) {
                    continue;
                }
                if (0..k).all(|i| h.beats(i, k) == g.beats(map[i], v)) {
                    map.push(v);
                    if go(g, h, map) {
                        return true;
                    }
                    map.pop();
                }
            }
            false
        }
        go(g, h, &mut Vec::new())
    }

    /// Oracle: every pair of disjoint sets, by brute force over 3^n labelings.
    fn brute_pure_pair_order(t: &Tournament) -> usize {
        let n = t.n();
        let mut best = 0;
        for a in 1..1u64 << n {
            let common = Bits(a).fold(t.vertex_mask(), |m, v| m & t.out_set(v));
            best = best.max((a.count_ones() as usize).min(common.count_ones() as usize));
        }
        best
    }

    #[test]
    fn subtournament_examples() {
        let tt4 = Tournament::transitive(4).unwrap();
        assert!(contains_subtournament(&catalog::p7(), &tt4).is_none());
        let d5 = catalog::d5();
        let map = contains_subtournament(&catalog::h6(), &d5).unwrap();
        for i in 0..5 {
            for j in 0..5 {
                assert_eq!(d5.beats(i, j), catalog::h6().beats(map[i], map[j]));
            }
        }
        for x in 0..32u64 {
            let t = d5.extend(x).unwrap();
            assert!(contains_subtournament(&t, &d5).is_some());
        }
    }

    #[test]
    fn subtournament_agrees_with_naive() {
        let patterns = crate::enumerate::all_tournaments(4).unwrap();
        for g in crate::enumerate::all_tournaments(6).unwrap() {
            for h in &patterns {
                assert_eq!(contains_subtournament(&g, h).is_some(), naive_contains(&g, h));
            }
            let d5 = catalog::d5();
            assert_eq!(contains_subtournament(&g, &d5).is_some(), naive_contains(&g, &d5));
        }
    }

    #[test]
    fn ordered_containment() {
        let single = OrderedGraph::empty(1).unwrap();
        let g = catalog::obs(3).unwrap();
        assert_eq!(contains_ordered(&g, &single), Some(vec![0]));
        let p7m = OrderedGraph::from_edges_1based(6, catalog::P7_MINUS_FIGURE).unwrap();
        let obs1 = catalog::obs(1).unwrap();
        // Oracle over all 4-subsets of positions.
        let direct = |host: &OrderedGraph| {
            (0..1u64 << 6)
                .filter(|s| s.count_ones() == 4)
                .any(|s| host.induced(s) == obs1)
        };
        assert_eq!(contains_ordered(&p7m, &obs1), Some(vec![0, 2, 3, 5]));
        assert!(direct(&p7m));
        assert_eq!(contains_ordered(&g, &obs1).is_some(), direct(&g));
    }

    #[test]
    fn pure_pair_examples() {
        let d5 = catalog::d5();
        assert_eq!(max_pure_pair(&d5).unwrap().unwrap().order(), 1);
        assert_eq!(brute_pure_pair_order(&d5), 1);
        let c3 = catalog::tournament("C_3").unwrap();
        assert_eq!(max_pure_pair(&c3).unwrap().unwrap().order(), 1);
        for m in 1..=6 {
            let t = Tournament::transitive(2 * m).unwrap();
            let p = max_pure_pair(&t).unwrap().unwrap();
            assert_eq!(p.order(), m);
            assert!(is_pure_pair(&t, p.a, p.b));
        }
        assert_eq!(max_pure_pair(&Tournament::transitive(1).unwrap()).unwrap(), None);
        assert!(max_pure_pair(&Tournament::transitive(25).unwrap()).is_err());
    }

    #[test]
    fn anticomplete_examples() {
        let e = OrderedGraph::empty(6).unwrap();
        assert_eq!(max_anticomplete_pair(&e).unwrap().unwrap().order(), 3);
        assert_eq!(max_anticomplete_pair(&OrderedGraph::complete(5).unwrap()).unwrap(), None);
        let c6 = OrderedGraph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)]).unwrap();
        let p = max_anticomplete_pair(&c6).unwrap().unwrap();
        assert_eq!(p.order(), 2);
        assert!(is_anticomplete(&c6, p.a, p.b));
    }

    #[test]
    fn translation_on_transitive() {
        let t = Tournament::transitive(4).unwrap();
        let nu = Numbering::identity(4);
        let p = PurePair {
            a: 0b0011,
            b: 0b1100,
            kind: PairKind::Tournament,
        };
        let q = pure_to_backedge(&t, &nu, &p).unwrap();
        assert_eq!(q.kind, PairKind::Anticomplete);
        assert!(q.order() >= 1);
        let back = backedge_to_pure(&t, &nu, &q).unwrap();
        assert!(is_pure_pair(&t, back.a, back.b));
        let bad = PurePair {
            a: 0b1100,
            b: 0b0011,
            kind: PairKind::Tournament,
        };
        assert_eq!(pure_to_backedge(&t, &nu, &bad), Err(Error::NotAPurePair));
    }

    #[test]
    fn out_simplicial_examples() {
        assert!(is_out_simplicial(&Digraph::from_tournament(&catalog::p7())));
        assert!(is_out_simplicial(&Digraph::from_arcs(4, &[]).unwrap()));
        assert!(!is_out_simplicial(&Digraph::from_arcs(3, &[(0, 1), (0, 2)]).unwrap()));
        assert!(is_out_simplicial(&Digraph::from_arcs(3, &[(0, 1), (0, 2), (2, 1)]).unwrap()));
    }
}
