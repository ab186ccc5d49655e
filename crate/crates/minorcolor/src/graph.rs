use std::collections::BTreeSet;
use std::fmt;

use crate::bits::BitGraph;
use crate::Error;

/// A finite simple undirected graph over dense 0-based vertex indices.
///
/// Adjacency is stored as one ordered neighbor set per vertex; the structure
/// keeps itself symmetric and irreflexive. Optional per-vertex labels carry
/// provenance through contractions ("v3+v7") so certificates stay readable.
///
/// Values are immutable as far as the algorithms are concerned: every
/// operation that changes structure returns a new graph.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<BTreeSet<usize>>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            adj: vec![BTreeSet::new(); n],
            labels: None,
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    /// Cycle 0-1-...-(n-1)-0. Requires n >= 3.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut g = Graph::new(n);
        for v in 0..n {
            g.add_edge(v, (v + 1) % n).unwrap();
        }
        g
    }

    /// Path 0-1-...-(n-1).
    pub fn path(n: usize) -> Self {
        let mut g = Graph::new(n);
        for v in 1..n {
            g.add_edge(v - 1, v).unwrap();
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, Error> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|s| s.len()).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|s| s.len()).max().unwrap_or(0)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(&v)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn neighbor_set(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v]
    }

    /// Edges as (u, v) with u < v, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Pairs (u, v), u < v, that are not edges (the "missing edges").
    pub fn missing_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), Error> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::invalid("self-loops are not allowed"));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<(), Error> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.adj[u].remove(&v);
        self.adj[v].remove(&u);
        Ok(())
    }

    fn check_vertex(&self, v: usize) -> Result<(), Error> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { v, n: self.n })
        }
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn set_labels(&mut self, labels: Vec<String>) {
        assert_eq!(labels.len(), self.n);
        self.labels = Some(labels);
    }

    /// The label of `v` if set, otherwise "v{index}".
    pub fn label_or_default(&self, v: usize) -> String {
        self.label(v)
            .map(str::to_owned)
            .unwrap_or_else(|| format!("v{v}"))
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        g.labels = self.labels.clone();
        g
    }

    /// Induced subgraph on `verts` (deduplicated, ascending). The i-th vertex
    /// of the result corresponds to the i-th smallest member of `verts`.
    pub fn induced(&self, verts: &[usize]) -> Result<Graph, Error> {
        let set: BTreeSet<usize> = verts.iter().copied().collect();
        for &v in &set {
            self.check_vertex(v)?;
        }
        let order: Vec<usize> = set.into_iter().collect();
        let mut g = Graph::new(order.len());
        for (i, &u) in order.iter().enumerate() {
            for (j, &v) in order.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j).unwrap();
                }
            }
        }
        if self.labels.is_some() {
            g.labels = Some(order.iter().map(|&v| self.label_or_default(v)).collect());
        }
        Ok(g)
    }

    /// Contract the connected set `s` into a single vertex, deleting parallel
    /// edges and loops. Vertices outside `s` keep their relative order and
    /// occupy indices 0..n-|s|; the contracted vertex is the last index.
    /// The contracted vertex is labeled with the '+'-join of the old labels.
    pub fn contract(&self, s: &[usize]) -> Result<Graph, Error> {
        Ok(self.contract_with_map(s)?.0)
    }

    /// As [`Graph::contract`], also returning the old-vertex -> new-vertex map.
    pub fn contract_with_map(&self, s: &[usize]) -> Result<(Graph, Vec<usize>), Error> {
        let set: BTreeSet<usize> = s.iter().copied().collect();
        if set.is_empty() {
            return Err(Error::BadContraction);
        }
        for &v in &set {
            self.check_vertex(v)?;
        }
        if !self.is_set_connected(&set) {
            return Err(Error::BadContraction);
        }
        let m = self.n - set.len() + 1;
        let new_vertex = m - 1;
        let mut map = vec![usize::MAX; self.n];
        let mut next = 0;
        for v in 0..self.n {
            if set.contains(&v) {
                map[v] = new_vertex;
            } else {
                map[v] = next;
                next += 1;
            }
        }
        let mut g = Graph::new(m);
        for (u, v) in self.edges() {
            let (mu, mv) = (map[u], map[v]);
            if mu != mv {
                g.add_edge(mu, mv).unwrap();
            }
        }
        let mut labels: Vec<String> = vec![String::new(); m];
        for v in 0..self.n {
            if !set.contains(&v) {
                labels[map[v]] = self.label_or_default(v);
            }
        }
        labels[new_vertex] = set
            .iter()
            .map(|&v| self.label_or_default(v))
            .collect::<Vec<_>>()
            .join("+");
        g.labels = Some(labels);
        debug_assert_eq!(g.n + set.len() - 1, self.n);
        Ok((g, map))
    }

    /// Join: disjoint union plus all edges between the two sides.
    /// Vertices of `self` come first.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.disjoint_union(other);
        for u in 0..self.n {
            for v in self.n..self.n + other.n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    /// Disjoint union; vertices of `self` come first.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::new(self.n + other.n);
        for (u, v) in self.edges() {
            g.add_edge(u, v).unwrap();
        }
        for (u, v) in other.edges() {
            g.add_edge(self.n + u, self.n + v).unwrap();
        }
        if self.labels.is_some() || other.labels.is_some() {
            let mut labels: Vec<String> = (0..self.n).map(|v| self.label_or_default(v)).collect();
            labels.extend((0..other.n).map(|v| other.label_or_default(v)));
            g.labels = Some(labels);
        }
        g
    }

    pub fn is_set_connected(&self, set: &BTreeSet<usize>) -> bool {
        let Some(&start) = set.iter().next() else {
            return false;
        };
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if set.contains(&w) && seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen.len() == set.len()
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        self.is_set_connected(&(0..self.n).collect())
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// True if every pair of the given vertices is adjacent.
    pub fn is_clique(&self, verts: &[usize]) -> bool {
        for (i, &u) in verts.iter().enumerate() {
            for &v in &verts[i + 1..] {
                if u == v || !self.has_edge(u, v) {
                    return false;
                }
            }
        }
        true
    }

    /// True if no pair of the given vertices is adjacent.
    pub fn is_independent_set(&self, verts: &[usize]) -> bool {
        for (i, &u) in verts.iter().enumerate() {
            for &v in &verts[i + 1..] {
                if u != v && self.has_edge(u, v) {
                    return false;
                }
            }
        }
        true
    }

    /// Compact adjacency-row view for the exact search kernels (n <= 64).
    pub fn to_bits(&self) -> BitGraph {
        assert!(self.n <= 64, "bitset view supports at most 64 vertices");
        let mut bg = BitGraph::empty(self.n);
        for (u, v) in self.edges() {
            bg.add_edge(u, v);
        }
        bg
    }

    pub fn from_bits(bg: &BitGraph) -> Graph {
        let mut g = Graph::new(bg.n);
        for u in 0..bg.n {
            for v in u + 1..bg.n {
                if bg.has_edge(u, v) {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        g
    }

    /// Symmetry and simplicity check; cheap enough to run in debug builds
    /// after every constructor.
    pub fn invariants_ok(&self) -> bool {
        for u in 0..self.n {
            if self.adj[u].contains(&u) {
                return false;
            }
            for &v in &self.adj[u] {
                if v >= self.n || !self.adj[v].contains(&u) {
                    return false;
                }
            }
        }
        true
    }
}

impl PartialEq for Graph {
    /// Equality on structure only; labels are provenance, not identity.
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, e={}, edges={:?})", self.n, self.edge_count(), self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn contract_path_to_k1() {
        let p3 = Graph::path(3);
        let g = p3.contract(&[0, 1, 2]).unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.label(0), Some("v0+v1+v2"));
    }

    #[test]
    fn contract_c5_edge_gives_c4() {
        let c5 = Graph::cycle(5);
        let g = c5.contract(&[0, 1]).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g, g.clone());
        // every vertex of a C4 has degree 2
        assert!((0..4).all(|v| g.degree(v) == 2));
    }

    #[test]
    fn contract_part_of_k222() {
        // contracting one part of K_{2,2,2}: the part is independent, hence
        // not connected — must error.
        let k222 = crate::named::complete_multipartite(&[2, 2, 2]);
        assert!(k222.contract(&[0, 1]).is_err());
        // contracting an edge (one vertex per two parts) gives n=5, e=9:
        // contracting {0,2} merges two vertices adjacent to everything else.
        let g = k222.contract(&[0, 2]).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edge_count(), 9);
    }

    #[test]
    fn contract_bookkeeping() {
        let g = Graph::cycle(6);
        let h = g.contract(&[1, 2, 3]).unwrap();
        assert_eq!(h.n() + 3 - 1, g.n());
    }

    #[test]
    fn complement_involution() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn join_degree_audit() {
        // join(K2bar, C6bar): n=8, delta = min(6, 3+2) = 5
        let k2bar = Graph::new(2);
        let c6bar = Graph::cycle(6).complement();
        let g = k2bar.join(&c6bar);
        assert_eq!(g.n(), 8);
        assert_eq!(g.min_degree(), 5);
        assert!(g.invariants_ok());
    }

    #[test]
    fn rejects_self_loop_and_bad_vertex() {
        let mut g = Graph::new(3);
        assert!(g.add_edge(1, 1).is_err());
        assert!(g.add_edge(0, 3).is_err());
    }
}
