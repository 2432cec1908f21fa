use serde::{Deserialize, Serialize};

use crate::bits::{bit, low_mask, Bits};
use crate::error::{Error, Result};

/// A graph on positions `0..n`, the order being the order of positions.
///
/// `adj` is symmetric and irreflexive. Equality is edge-set equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OrderedGraph {
    n: usize,
    adj: Vec<u64>,
}

impl std::fmt::Debug for OrderedGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "OrderedGraph({}; ", self.n)?;
        f.debug_list().entries(self.edges_1based()).finish()?;
        write!(f, ")")
    }
}

impl OrderedGraph {
    pub fn empty(n: usize) -> Result<Self> {
        if n > 64 {
            return Err(Error::SizeOutOfRange(n));
        }
        Ok(OrderedGraph { n, adj: vec![0; n] })
    }

    pub fn complete(n: usize) -> Result<Self> {
        Ok(Self::empty(n)?.complement())
    }

    /// Edges are 0-based position pairs; duplicates are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(a, b) in edges {
            if a == b || a >= n || b >= n || g.adjacent(a, b) {
                return Err(Error::InvalidEdge(a, b));
            }
            g.add_edge(a, b);
        }
        Ok(g)
    }

    pub fn from_edges_1based(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut zero = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a == 0 || b == 0 {
                return Err(Error::InvalidEdge(a, b));
            }
            zero.push((a - 1, b - 1));
        }
        Self::from_edges(n, &zero).map_err(|e| match e {
            Error::InvalidEdge(a, b) => Error::InvalidEdge(a + 1, b + 1),
            e => e,
        })
    }

    /// Validates symmetric rows.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        if n > 64 {
            return Err(Error::SizeOutOfRange(n));
        }
        for (i, &r) in rows.iter().enumerate() {
            if r & bit(i) != 0 || r & !low_mask(n) != 0 {
                return Err(Error::InvalidEdge(i, i));
            }
            for j in Bits(r) {
                if rows[j] & bit(i) == 0 {
                    return Err(Error::InvalidEdge(i, j));
                }
            }
        }
        Ok(OrderedGraph { n, adj: rows })
    }

    pub(crate) fn add_edge(&mut self, a: usize, b: usize) {
        self.adj[a] |= bit(b);
        self.adj[b] |= bit(a);
    }

    /// Returns a copy with extra edges; pairs already present are ignored.
    pub fn with_edges(&self, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = self.clone();
        for &(a, b) in edges {
            if a == b || a >= self.n || b >= self.n {
                return Err(Error::InvalidEdge(a, b));
            }
            g.add_edge(a, b);
        }
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a] >> b & 1 == 1
    }

    #[inline]
    pub fn neighbours(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|a| Bits(self.adj[a] & !low_mask(a + 1)).map(move |b| (a, b)))
            .collect()
    }

    pub fn edges_1based(&self) -> Vec<(usize, usize)> {
        self.edges().into_iter().map(|(a, b)| (a + 1, b + 1)).collect()
    }

    pub fn complement(&self) -> OrderedGraph {
        let full = low_mask(self.n);
        let adj = (0..self.n).map(|v| full & !self.adj[v] & !bit(v)).collect();
        OrderedGraph { n: self.n, adj }
    }

    /// Position `p` goes to `n-1-p`.
    pub fn reverse_order(&self) -> OrderedGraph {
        let n = self.n;
        let mut adj = vec![0u64; n];
        for (v, row) in adj.iter_mut().enumerate() {
            for u in Bits(self.adj[n - 1 - v]) {
                *row |= bit(n - 1 - u);
            }
        }
        OrderedGraph { n, adj }
    }

    /// Induced subgraph on `set`, positions compressed in increasing order.
    pub fn induced(&self, set: u64) -> OrderedGraph {
        let verts: Vec<usize> = Bits(set & low_mask(self.n)).collect();
        self.induced_on(&verts)
    }

    /// Induced subgraph on the listed positions, in the listed order.
    pub fn induced_on(&self, verts: &[usize]) -> OrderedGraph {
        let k = verts.len();
        let mut adj = vec![0u64; k];
        for a in 0..k {
            for b in 0..k {
                if a != b && self.adjacent(verts[a], verts[b]) {
                    adj[a] |= bit(b);
                }
            }
        }
        OrderedGraph { n: k, adj }
    }

    /// Connected components as position masks, ordered by least element.
    pub fn components(&self) -> Vec<u64> {
        let mut left = low_mask(self.n);
        let mut out = Vec::new();
        while left != 0 {
            let start = left & left.wrapping_neg();
            let mut comp = start;
            let mut frontier = start;
            while frontier != 0 {
                let mut next = 0;
                for v in Bits(frontier) {
                    next |= self.adj[v];
                }
                frontier = next & !comp;
                comp |= next;
            }
            left &= !comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected_set(&self, set: u64) -> bool {
        if set == 0 {
            return false;
        }
        let start = set & set.wrapping_neg();
        let mut comp = start;
        let mut frontier = start;
        while frontier != 0 {
            let mut next = 0;
            for v in Bits(frontier) {
                next |= self.adj[v] & set;
            }
            frontier = next & !comp;
            comp |= next;
        }
        comp == set
    }

    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.components().len() == self.n
    }

    /// A proper 2-colouring as the mask of colour-1 positions, if bipartite.
    pub fn bipartition(&self) -> Option<u64> {
        let mut colour = 0u64;
        for comp in self.components() {
            let start = comp & comp.wrapping_neg();
            let mut seen = start;
            let mut frontier = start;
            let mut side = false;
            while frontier != 0 {
                if side {
                    colour |= frontier;
                }
                let mut next = 0;
                for v in Bits(frontier) {
                    next |= self.adj[v];
                }
                frontier = next & !seen;
                seen |= next;
                side = !side;
            }
        }
        for v in 0..self.n {
            let same = if colour & bit(v) != 0 { colour } else { !colour };
            if self.adj[v] & same != 0 {
                return None;
            }
        }
        Some(colour)
    }
}

/// A walk `p_0, ..., p_r` over positions of an ordered graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Walk(pub Vec<usize>);

impl Walk {
    pub fn len(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn validate(&self, g: &OrderedGraph) -> Result<()> {
        for (i, &v) in self.0.iter().enumerate() {
            if v >= g.n() {
                return Err(Error::InvalidWalk(i));
            }
        }
        for (i, w) in self.0.windows(2).enumerate() {
            if w[0] == w[1] || !g.adjacent(w[0], w[1]) {
                return Err(Error::InvalidWalk(i + 1));
            }
        }
        Ok(())
    }

    pub fn reversed(&self) -> Walk {
        Walk(self.0.iter().rev().copied().collect())
    }
}

/// Forward steps minus backward steps.
pub fn walk_imbalance(g: &OrderedGraph, w: &Walk) -> Result<i64> {
    w.validate(g)?;
    Ok(w.0
        .windows(2)
        .map(|s| if s[1] > s[0] { 1 } else { -1 })
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tri() -> OrderedGraph {
        OrderedGraph::complete(3).unwrap()
    }

    #[test]
    fn complement_of_edgeless_is_triangle() {
        assert_eq!(OrderedGraph::empty(3).unwrap().complement(), tri());
    }

    #[test]
    fn reverse_order_moves_edge() {
        let g = OrderedGraph::from_edges_1based(3, &[(1, 2)]).unwrap();
        let r = OrderedGraph::from_edges_1based(3, &[(2, 3)]).unwrap();
        assert_eq!(g.reverse_order(), r);
    }

    #[test]
    fn duplicate_and_loop_rejected() {
        assert!(OrderedGraph::from_edges_1based(3, &[(1, 2), (2, 1)]).is_err());
        assert!(OrderedGraph::from_edges_1based(3, &[(2, 2)]).is_err());
        assert!(OrderedGraph::from_edges_1based(3, &[(1, 4)]).is_err());
    }

    #[test]
    fn imbalance_examples() {
        let e = OrderedGraph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(walk_imbalance(&e, &Walk(vec![0, 1, 0])), Ok(0));
        assert_eq!(walk_imbalance(&tri(), &Walk(vec![0, 1, 2, 0])), Ok(1));
        assert_eq!(walk_imbalance(&tri(), &Walk(vec![0, 1, 2, 0, 1, 2, 0])), Ok(2));
        assert_eq!(walk_imbalance(&tri(), &Walk(vec![1])), Ok(0));
        assert_eq!(
            walk_imbalance(&e, &Walk(vec![0, 0])),
            Err(Error::InvalidWalk(1))
        );
        let p = OrderedGraph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(
            walk_imbalance(&p, &Walk(vec![0, 1, 2])),
            Err(Error::InvalidWalk(2))
        );
    }

    #[test]
    fn components_and_forest() {
        let g = OrderedGraph::from_edges(5, &[(0, 3), (3, 4)]).unwrap();
        assert_eq!(g.components(), vec![0b11001, 0b10, 0b100]);
        assert!(g.is_forest());
        assert!(!tri().is_forest());
        assert!(tri().bipartition().is_none());
        let c = g.bipartition().unwrap();
        assert_eq!(c & 0b11001, 0b01000);
    }
}
