//! Single-word bitset helpers and the compact graph view used by the exact
//! search kernels (clique, coloring, canonical form, minor search). All of
//! those run on graphs with at most 64 vertices.

/// Iterator over the set bit positions of a `u64`, ascending.
#[derive(Clone, Copy)]
pub struct SetBits(pub u64);

impl Iterator for SetBits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

#[inline]
pub fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the lowest `n` bits set.
#[inline]
pub fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Adjacency-row view of a graph with n <= 64, used by the search kernels.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BitGraph {
    pub n: usize,
    pub rows: Vec<u64>,
}

impl BitGraph {
    pub fn empty(n: usize) -> Self {
        assert!(n <= 64, "BitGraph supports at most 64 vertices");
        BitGraph {
            n,
            rows: vec![0; n],
        }
    }

    #[inline]
    pub fn row(&self, v: usize) -> u64 {
        self.rows[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] & bit(v) != 0
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.rows[u] |= bit(v);
        self.rows[v] |= bit(u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.rows[u] &= !bit(v);
        self.rows[v] &= !bit(u);
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn complement(&self) -> BitGraph {
        let full = low_mask(self.n);
        let rows = (0..self.n)
            .map(|v| (full & !self.rows[v]) & !bit(v))
            .collect();
        BitGraph { n: self.n, rows }
    }

    /// Vertices reachable from `start` staying inside `allowed`.
    /// `start` need not be inside `allowed`.
    pub fn reach(&self, start: u64, allowed: u64) -> u64 {
        let mut seen = start;
        let mut frontier = start;
        while frontier != 0 {
            let mut next = 0;
            for v in SetBits(frontier) {
                next |= self.rows[v];
            }
            frontier = next & allowed & !seen;
            seen |= frontier;
        }
        seen
    }

    /// True if the vertices of `set` induce a connected subgraph (empty sets
    /// count as disconnected).
    pub fn is_set_connected(&self, set: u64) -> bool {
        if set == 0 {
            return false;
        }
        let start = bit(set.trailing_zeros() as usize);
        self.reach(start, set) & set == set
    }

    /// Union of neighbor rows over all vertices of `set`.
    pub fn neighborhood(&self, set: u64) -> u64 {
        let mut out = 0;
        for v in SetBits(set) {
            out |= self.rows[v];
        }
        out
    }

    /// Induced subgraph on the set bits of `mask`, vertices renumbered in
    /// ascending order of original index. Returns the subgraph and the
    /// original indices.
    pub fn induced(&self, mask: u64) -> (BitGraph, Vec<usize>) {
        let verts: Vec<usize> = SetBits(mask).collect();
        let mut g = BitGraph::empty(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        (g, verts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reach_and_connectivity() {
        let mut g = BitGraph::empty(5);
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(3, 4);
        assert!(g.is_set_connected(0b00111));
        assert!(!g.is_set_connected(0b01111));
        assert!(g.is_set_connected(0b11000));
        assert_eq!(g.reach(bit(0), low_mask(5)), 0b00111);
    }

    #[test]
    fn complement_degrees() {
        let mut g = BitGraph::empty(4);
        g.add_edge(0, 1);
        let c = g.complement();
        assert_eq!(c.degree(0), 2);
        assert_eq!(c.degree(2), 3);
        assert_eq!(g.edge_count() + c.edge_count(), 6);
    }
}
