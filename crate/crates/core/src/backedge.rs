use crate::bits::bit;
use crate::error::{Error, Result};
use crate::numbering::Numbering;
use crate::ordered::OrderedGraph;
use crate::tournament::Tournament;

/// Positions `p < q` are adjacent iff the vertex at `q` beats the vertex at `p`.
pub fn backedge_graph(t: &Tournament, nu: &Numbering) -> Result<OrderedGraph> {
    let n = t.n();
    if nu.len() != n {
        return Err(Error::NumberingSizeMismatch {
            expected: n,
            found: nu.len(),
        });
    }
    let perm = nu.as_slice();
    let mut rows = vec![0u64; n];
    for q in 0..n {
        for p in 0..q {
            if t.beats(perm[q], perm[p]) {
                rows[p] |= bit(q);
                rows[q] |= bit(p);
            }
        }
    }
    OrderedGraph::from_rows(rows)
}

/// Number of backedges without materialising the graph.
pub fn backedge_count(t: &Tournament, nu: &Numbering) -> Result<usize> {
    let n = t.n();
    if nu.len() != n {
        return Err(Error::NumberingSizeMismatch {
            expected: n,
            found: nu.len(),
        });
    }
    let perm = nu.as_slice();
    let mut placed = 0u64;
    let mut count = 0;
    for &v in perm {
        count += (t.out_set(v) & placed).count_ones() as usize;
        placed |= bit(v);
    }
    Ok(count)
}

/// For `p < q`, `p` beats `q` unless `{p, q}` is an edge.
///
/// Fails only for the 0-position graph, which has no tournament.
pub fn tournament_from_backedges(b: &OrderedGraph) -> Result<Tournament> {
    Tournament::from_fn(b.n(), |p, q| {
        if p < q {
            !b.adjacent(p, q)
        } else {
            p != q && b.adjacent(p, q)
        }
    })
}
