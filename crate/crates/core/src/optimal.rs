//! Minimum-backedge numberings and the structure of optimal numberings.

use serde::{Deserialize, Serialize};

use crate::backedge::{backedge_count, backedge_graph};
use crate::bits::{bit, low_mask, Bits};
use crate::error::{Error, Result};
use crate::numbering::Numbering;
use crate::ordered::OrderedGraph;
use crate::tournament::{is_transitive_on, Tournament};

pub const OPTIMAL_LIMIT: usize = 10;
pub const FOREST_LIMIT: usize = 8;
pub const BIPARTITION_LIMIT: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumberingResult {
    pub numbering: Numbering,
    pub backedge_count: usize,
    pub optimal: bool,
}

struct Search<'a> {
    t: &'a Tournament,
    n: usize,
    prefix: Vec<usize>,
    best: usize,
    best_perm: Vec<usize>,
}

impl Search<'_> {
    /// `cost` counts backedges inside the prefix. Every unplaced `u` lands after
    /// the whole prefix, so `|N+(u) ∩ placed|` backedges are already forced.
    fn go(&mut self, placed: u64, cost: usize) {
        let n = self.n;
        if self.prefix.len() == n {
            if cost < self.best {
                self.best = cost;
                self.best_perm.clone_from(&self.prefix);
            }
            return;
        }
        let free = low_mask(n) & !placed;
        let forced: usize = Bits(free)
            .map(|u| (self.t.out_set(u) & placed).count_ones() as usize)
            .sum();
        if cost + forced >= self.best {
            return;
        }
        for v in Bits(free) {
            let add = (self.t.out_set(v) & placed).count_ones() as usize;
            self.prefix.push(v);
            self.go(placed | bit(v), cost + add);
            self.prefix.pop();
        }
    }
}

/// Exact minimum; among optimal numberings the lexicographically least.
///
/// Branches visit vertices in increasing order and only strict improvements
/// replace the incumbent, so the first optimum reached is the lex-least.
pub fn min_backedge_numbering(t: &Tournament) -> Result<NumberingResult> {
    let n = t.n();
    if n > OPTIMAL_LIMIT {
        return Err(Error::TooLarge {
            what: "exact optimal numbering",
            n,
            limit: OPTIMAL_LIMIT,
        });
    }
    let mut s = Search {
        t,
        n,
        prefix: Vec::with_capacity(n),
        best: n * n,
        best_perm: Vec::new(),
    };
    s.go(0, 0);
    Ok(NumberingResult {
        numbering: Numbering::new(s.best_perm)?,
        backedge_count: s.best,
        optimal: true,
    })
}

/// Every numbering attaining the minimum, in lexicographic order.
pub fn optimal_numberings(t: &Tournament) -> Result<Vec<Numbering>> {
    let n = t.n();
    if n > FOREST_LIMIT {
        return Err(Error::TooLarge {
            what: "listing optimal numberings",
            n,
            limit: FOREST_LIMIT,
        });
    }
    let best = min_backedge_numbering(t)?.backedge_count;
    Ok(Numbering::all(n)
        .filter(|nu| backedge_count(t, nu) == Ok(best))
        .collect())
}

/// One failed condition on the interval `v_i..v_j` (1-based, `i < j`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalViolation {
    pub bullet: u8,
    pub i: usize,
    pub j: usize,
    pub detail: String,
}

/// Conditions every optimal numbering satisfies, checked on all intervals.
pub fn interval_violations(t: &Tournament, nu: &Numbering) -> Result<Vec<IntervalViolation>> {
    let b = backedge_graph(t, nu)?;
    Ok(interval_violations_of(&b))
}

pub fn interval_violations_of(b: &OrderedGraph) -> Vec<IntervalViolation> {
    let n = b.n();
    let mut out = Vec::new();
    let span = |i: usize, j: usize| low_mask(j + 1) & !low_mask(i);
    for i in 0..n {
        for j in i + 1..n {
            let len = j - i;
            let right = (b.neighbours(i) & span(i + 1, j)).count_ones() as usize;
            if 2 * right > len {
                out.push(IntervalViolation {
                    bullet: 1,
                    i: i + 1,
                    j: j + 1,
                    detail: format!("v_{} has {right} neighbours after it", i + 1),
                });
            }
            let left = (b.neighbours(j) & span(i, j - 1)).count_ones() as usize;
            if 2 * left > len {
                out.push(IntervalViolation {
                    bullet: 1,
                    i: i + 1,
                    j: j + 1,
                    detail: format!("v_{} has {left} neighbours before it", j + 1),
                });
            }
            let inside = b.induced(span(i, j));
            let e = inside.edge_count();
            if len <= 3 && e > 1 {
                out.push(IntervalViolation {
                    bullet: 2,
                    i: i + 1,
                    j: j + 1,
                    detail: format!("{e} edges"),
                });
            }
            if len == 4 {
                let pattern = [(0, 3), (0, 4), (1, 4)];
                if e > 3 || (e == 3 && inside.edges() != pattern) {
                    out.push(IntervalViolation {
                        bullet: 3,
                        i: i + 1,
                        j: j + 1,
                        detail: format!("{e} edges {:?}", inside.edges_1based()),
                    });
                }
            }
        }
    }
    out
}

/// The lex-least numbering whose backedge graph is a forest.
pub fn forest_numbering(t: &Tournament) -> Result<Option<Numbering>> {
    let n = t.n();
    if n > FOREST_LIMIT {
        return Err(Error::TooLarge {
            what: "forest numbering search",
            n,
            limit: FOREST_LIMIT,
        });
    }
    Ok(Numbering::all(n).find(|nu| {
        backedge_graph(t, nu)
            .map(|g| g.is_forest())
            .unwrap_or(false)
    }))
}

/// A split `(A, B)` of the vertices with both parts transitive, `0 ∈ A` and
/// `B` nonempty whenever `n ≥ 2`. The least such `B` is returned.
pub fn transitive_bipartition(t: &Tournament) -> Result<Option<(u64, u64)>> {
    let n = t.n();
    if n > BIPARTITION_LIMIT {
        return Err(Error::TooLarge {
            what: "transitive bipartition",
            n,
            limit: BIPARTITION_LIMIT,
        });
    }
    let all = t.vertex_mask();
    if n == 1 {
        return Ok(Some((all, 0)));
    }
    for half in 1..1u64 << (n - 1) {
        let b = half << 1;
        let a = all & !b;
        if is_transitive_on(t, a) && is_transitive_on(t, b) {
            return Ok(Some((a, b)));
        }
    }
    Ok(None)
}

/// Positions `a<b<c<d<e` on which the whole edge set of `g` is `{ad, ae, be}`.
pub fn has_d5_backedge_pattern(g: &OrderedGraph) -> bool {
    d5_backedge_pattern(g).is_some()
}

/// The witness `(a, b, d, e)`; `c` can be any position strictly between `b` and `d`.
pub fn d5_backedge_pattern(g: &OrderedGraph) -> Option<(usize, usize, usize, usize)> {
    let edges = g.edges();
    if edges.len() != 3 {
        return None;
    }
    // Sorted edges of the pattern are (a,d), (a,e), (b,e).
    let [(a, d), (a2, e), (b, e2)] = edges[..] else {
        return None;
    };
    (a == a2 && e == e2 && a < b && d < e && d >= b + 2).then_some((a, b, d, e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    /// Oracle: min over placed-prefix sets, `f(S + v) = f(S) + |N+(v) ∩ S|`.
    fn subset_dp_minimum(t: &Tournament) -> usize {
        let n = t.n();
        let mut f = vec![usize::MAX; 1 << n];
        f[0] = 0;
        for s in 0..1usize << n {
            if f[s] == usize::MAX {
                continue;
            }
            for v in 0..n {
                if s >> v & 1 == 0 {
                    let c = f[s] + (t.out_set(v) & s as u64).count_ones() as usize;
                    let next = s | 1 << v;
                    f[next] = f[next].min(c);
                }
            }
        }
        f[(1 << n) - 1]
    }

    #[test]
    fn optimum_matches_subset_dp_on_all_small_labeled() {
        for n in 1..=5 {
            let pairs = n * (n - 1) / 2;
            for code in 0..1u64 << pairs {
                let t = Tournament::from_upper_code(n, code).unwrap();
                let r = min_backedge_numbering(&t).unwrap();
                assert_eq!(r.backedge_count, subset_dp_minimum(&t));
                assert_eq!(backedge_count(&t, &r.numbering), Ok(r.backedge_count));
            }
        }
    }

    #[test]
    fn optimum_is_lex_least() {
        for t in crate::enumerate::all_tournaments(5).unwrap() {
            let r = min_backedge_numbering(&t).unwrap();
            let first = Numbering::all(5)
                .find(|nu| backedge_count(&t, nu) == Ok(r.backedge_count))
                .unwrap();
            assert_eq!(r.numbering, first);
        }
    }

    #[test]
    fn named_optima() {
        let tt = Tournament::transitive(7).unwrap();
        assert_eq!(min_backedge_numbering(&tt).unwrap().backedge_count, 0);
        assert_eq!(min_backedge_numbering(&catalog::d5()).unwrap().backedge_count, 3);
        let p = catalog::p7_minus();
        assert_eq!(min_backedge_numbering(&p).unwrap().backedge_count, 4);
        assert_eq!(subset_dp_minimum(&p), 4);
    }

    #[test]
    fn too_large() {
        let t = Tournament::transitive(11).unwrap();
        assert!(min_backedge_numbering(&t).is_err());
        assert!(forest_numbering(&Tournament::transitive(9).unwrap()).is_err());
        assert!(transitive_bipartition(&Tournament::transitive(17).unwrap()).is_err());
    }

    #[test]
    fn d5_lower_figure_violates_interval_bounds() {
        let g = OrderedGraph::from_edges_1based(5, catalog::D5_LOWER).unwrap();
        let v = interval_violations_of(&g);
        assert!(v.iter().any(|x| x.bullet == 2 && x.i == 1 && x.j == 4));
        assert!(v.iter().any(|x| x.bullet == 3 && x.i == 1 && x.j == 5));
        assert!(!v.iter().any(|x| x.bullet == 2 && x.j - x.i < 3));
    }

    #[test]
    fn transitive_has_no_violations() {
        let t = Tournament::transitive(5).unwrap();
        assert!(interval_violations(&t, &Numbering::identity(5))
            .unwrap()
            .is_empty());
    }

    #[test]
    fn forest_numbering_examples() {
        assert_eq!(
            forest_numbering(&Tournament::transitive(5).unwrap()).unwrap(),
            Some(Numbering::identity(5))
        );
        assert!(forest_numbering(&catalog::d5()).unwrap().is_some());
        assert!(forest_numbering(&catalog::p7()).unwrap().is_none());
    }

    #[test]
    fn bipartitions() {
        assert!(transitive_bipartition(&catalog::p7()).unwrap().is_none());
        let (a, b) = transitive_bipartition(&catalog::d5()).unwrap().unwrap();
        assert_eq!(a | b, 0b11111);
        let (a, b) = transitive_bipartition(&Tournament::transitive(4).unwrap())
            .unwrap()
            .unwrap();
        assert!(a != 0 && b != 0);
    }

    #[test]
    fn d5_pattern_examples() {
        let g = OrderedGraph::from_edges_1based(5, catalog::D5_UPPER).unwrap();
        assert_eq!(d5_backedge_pattern(&g), Some((0, 1, 3, 4)));
        assert!(!has_d5_backedge_pattern(&OrderedGraph::empty(5).unwrap()));
        let padded = OrderedGraph::from_edges_1based(6, catalog::D5_UPPER).unwrap();
        assert!(has_d5_backedge_pattern(&padded));
        // Oracle over all 5-subsets of positions of the padded graph.
        let mut hits = 0;
        for s in 0..1u64 << 6 {
            if s.count_ones() == 5 && padded.induced(s).edges() == [(0, 3), (0, 4), (1, 4)] {
                hits += 1;
            }
        }
        assert_eq!(hits, 1);
    }
}
