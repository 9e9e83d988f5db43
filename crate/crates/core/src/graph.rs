//! Directed graph representation with per-vertex neighbor partitions.
//!
//! Every vertex keeps its neighbors split into three disjoint sorted lists:
//! bidirected (`bi`), out-only (`out`) and in-only (`inc`). All counting
//! algorithms work on these partitions plus an associative edge index.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use hashbrown::HashSet;

/// Neighbor relation of a vertex `x` seen from an anchor vertex `p`.
/// Encoded to match descriptor digits: 0 = bidirected, 1 = edge p->x,
/// 2 = edge x->p, 3 = not adjacent.
pub const REL_BI: u8 = 0;
pub const REL_OUT: u8 = 1;
pub const REL_IN: u8 = 2;
pub const REL_NONE: u8 = 3;

/// Counts reported by graph construction.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BuildStats {
    pub dropped_self_loops: u64,
    pub dropped_duplicates: u64,
}

/// Immutable simple directed graph on dense vertex indices `0..n`.
#[derive(Debug, Clone)]
pub struct DirectedGraph {
    n: u32,
    /// All ordered pairs, sorted.
    edges: Vec<(u32, u32)>,
    bi: Vec<Vec<u32>>,
    out: Vec<Vec<u32>>,
    inc: Vec<Vec<u32>>,
    edge_set: HashSet<(u32, u32)>,
    labels: Vec<String>,
}

impl DirectedGraph {
    /// Builds a graph from raw ordered pairs. Self-loops and duplicate pairs
    /// are dropped and counted. `labels[v]` is the external name of vertex
    /// `v`; pass dense index strings if there are none.
    pub fn from_pairs(
        labels: Vec<String>,
        pairs: impl IntoIterator<Item = (u32, u32)>,
    ) -> (Self, BuildStats) {
        let n = labels.len() as u32;
        let mut stats = BuildStats::default();
        let mut edge_set: HashSet<(u32, u32)> = HashSet::new();
        for (u, v) in pairs {
            assert!(u < n && v < n, "vertex index out of range");
            if u == v {
                stats.dropped_self_loops += 1;
            } else if !edge_set.insert((u, v)) {
                stats.dropped_duplicates += 1;
            }
        }
        let mut edges: Vec<(u32, u32)> = edge_set.iter().copied().collect();
        edges.sort_unstable();

        let mut bi = vec![Vec::new(); n as usize];
        let mut out = vec![Vec::new(); n as usize];
        let mut inc = vec![Vec::new(); n as usize];
        for &(u, v) in &edges {
            if edge_set.contains(&(v, u)) {
                bi[u as usize].push(v);
            } else {
                out[u as usize].push(v);
                inc[v as usize].push(u);
            }
        }
        // Lists come out sorted because `edges` is sorted by source, but the
        // `inc` lists are filled by target; sort those.
        for l in &mut inc {
            l.sort_unstable();
        }

        (
            DirectedGraph {
                n,
                edges,
                bi,
                out,
                inc,
                edge_set,
                labels,
            },
            stats,
        )
    }

    pub fn vertex_count(&self) -> u32 {
        self.n
    }

    /// Number of ordered pairs (a bidirected pair contributes two).
    pub fn edge_count(&self) -> u64 {
        self.edges.len() as u64
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.edge_set.contains(&(u, v))
    }

    pub fn bi_nbrs(&self, v: u32) -> &[u32] {
        &self.bi[v as usize]
    }

    pub fn out_nbrs(&self, v: u32) -> &[u32] {
        &self.out[v as usize]
    }

    pub fn in_nbrs(&self, v: u32) -> &[u32] {
        &self.inc[v as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.bi[v as usize].len() + self.out[v as usize].len() + self.inc[v as usize].len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: u32) -> &str {
        &self.labels[v as usize]
    }

    /// (bidirected, out-only, in-only) degree triple of `v`.
    pub fn degree_triple(&self, v: u32) -> (usize, usize, usize) {
        (
            self.bi[v as usize].len(),
            self.out[v as usize].len(),
            self.inc[v as usize].len(),
        )
    }

    /// Relation of `x` to anchor `p` (`REL_BI` / `REL_OUT` / `REL_IN` /
    /// `REL_NONE`), from two edge-index probes.
    #[inline]
    pub fn rel(&self, p: u32, x: u32) -> u8 {
        let fwd = self.edge_set.contains(&(p, x));
        let back = self.edge_set.contains(&(x, p));
        match (fwd, back) {
            (true, true) => REL_BI,
            (true, false) => REL_OUT,
            (false, true) => REL_IN,
            (false, false) => REL_NONE,
        }
    }

    /// Undirected skeleton: each directed or bidirected connection collapsed
    /// to a single undirected edge.
    pub fn skeleton(&self) -> UndirectedSkeleton {
        let mut edges: Vec<(u32, u32)> = Vec::new();
        for &(u, v) in &self.edges {
            if u < v {
                edges.push((u, v));
            } else if !self.edge_set.contains(&(v, u)) {
                edges.push((v, u));
            }
        }
        edges.sort_unstable();
        edges.dedup();
        UndirectedSkeleton::from_edges(self.n, edges)
    }

    /// `adj(S)`: union of the neighborhoods of `S`, minus `S` itself.
    pub fn adjacency_of_set(&self, set: &[u32]) -> Vec<u32> {
        let in_set: HashSet<u32> = set.iter().copied().collect();
        let mut adj: Vec<u32> = Vec::new();
        let mut seen: HashSet<u32> = HashSet::new();
        for &v in set {
            for nbrs in [self.bi_nbrs(v), self.out_nbrs(v), self.in_nbrs(v)] {
                for &w in nbrs {
                    if !in_set.contains(&w) && seen.insert(w) {
                        adj.push(w);
                    }
                }
            }
        }
        adj.sort_unstable();
        adj
    }

    /// Packed adjacency bits of the induced subgraph on `verts`, with bit
    /// `i*k + j` set when there is an edge `verts[i] -> verts[j]`.
    pub fn induced_bits(&self, verts: &[u32]) -> u32 {
        let k = verts.len();
        let mut bits = 0u32;
        for i in 0..k {
            for j in 0..k {
                if i != j && self.edge_set.contains(&(verts[i], verts[j])) {
                    bits |= 1 << (i * k + j);
                }
            }
        }
        bits
    }
}

/// Undirected view of a directed graph (the skeleton), or a plain undirected
/// graph in its own right.
#[derive(Debug, Clone)]
pub struct UndirectedSkeleton {
    n: u32,
    adj: Vec<Vec<u32>>,
    /// Normalized pairs `u < v`, sorted.
    edges: Vec<(u32, u32)>,
    edge_set: HashSet<(u32, u32)>,
}

impl UndirectedSkeleton {
    /// `edges` must be normalized (`u < v`), sorted and deduplicated.
    pub fn from_edges(n: u32, edges: Vec<(u32, u32)>) -> Self {
        let mut adj = vec![Vec::new(); n as usize];
        let mut edge_set = HashSet::with_capacity(edges.len());
        for &(u, v) in &edges {
            debug_assert!(u < v && v < n);
            adj[u as usize].push(v);
            adj[v as usize].push(u);
            edge_set.insert((u, v));
        }
        for l in &mut adj {
            l.sort_unstable();
        }
        UndirectedSkeleton {
            n,
            adj,
            edges,
            edge_set,
        }
    }

    pub fn vertex_count(&self) -> u32 {
        self.n
    }

    pub fn edge_count(&self) -> u64 {
        self.edges.len() as u64
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn nbrs(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edge_set.contains(&key)
    }

    /// Undirected relation digit: 0 = adjacent, 1 = not adjacent.
    #[inline]
    pub fn rel(&self, p: u32, x: u32) -> u8 {
        if self.has_edge(p, x) {
            0
        } else {
            1
        }
    }

    pub fn adjacency_of_set(&self, set: &[u32]) -> Vec<u32> {
        let in_set: HashSet<u32> = set.iter().copied().collect();
        let mut adj: Vec<u32> = Vec::new();
        let mut seen: HashSet<u32> = HashSet::new();
        for &v in set {
            for &w in self.nbrs(v) {
                if !in_set.contains(&w) && seen.insert(w) {
                    adj.push(w);
                }
            }
        }
        adj.sort_unstable();
        adj
    }

    /// Symmetric packed bits of the induced subgraph on `verts`.
    pub fn induced_bits(&self, verts: &[u32]) -> u32 {
        let k = verts.len();
        let mut bits = 0u32;
        for i in 0..k {
            for j in (i + 1)..k {
                if self.has_edge(verts[i], verts[j]) {
                    bits |= 1 << (i * k + j);
                    bits |= 1 << (j * k + i);
                }
            }
        }
        bits
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;

    fn labels(n: u32) -> Vec<String> {
        (0..n).map(|i| format!("{i}")).collect()
    }

    #[test]
    fn partitions_follow_edge_directions() {
        let (g, stats) =
            DirectedGraph::from_pairs(labels(4), [(0, 1), (1, 0), (0, 2), (3, 0)]);
        assert_eq!(stats, BuildStats::default());
        assert_eq!(g.bi_nbrs(0), &[1]);
        assert_eq!(g.out_nbrs(0), &[2]);
        assert_eq!(g.in_nbrs(0), &[3]);
        assert_eq!(g.degree_triple(0), (1, 1, 1));
        assert_eq!(g.in_nbrs(2), &[0]);
        assert_eq!(g.out_nbrs(3), &[0]);
    }

    #[test]
    fn self_loops_and_duplicates_dropped_with_counts() {
        let (g, stats) = DirectedGraph::from_pairs(labels(2), [(0, 0), (0, 1), (0, 1)]);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(stats.dropped_self_loops, 1);
        assert_eq!(stats.dropped_duplicates, 1);
    }

    #[test]
    fn skeleton_collapses_bidirected_pairs() {
        let (g, _) = DirectedGraph::from_pairs(labels(3), [(0, 1), (1, 0), (2, 1)]);
        let s = g.skeleton();
        assert_eq!(s.edges(), &[(0, 1), (1, 2)]);
        assert_eq!(s.degree(1), 2);
    }

    #[test]
    fn adjacency_of_set_excludes_the_set() {
        let (g, _) = DirectedGraph::from_pairs(labels(3), [(0, 1), (1, 2)]);
        assert_eq!(g.adjacency_of_set(&[1]), vec![0, 2]);
        assert_eq!(g.adjacency_of_set(&[0, 1, 2]), Vec::<u32>::new());
        let star = DirectedGraph::from_pairs(labels(4), [(0, 1), (0, 2), (0, 3)]).0;
        assert_eq!(star.adjacency_of_set(&[0]), vec![1, 2, 3]);
    }

    #[test]
    fn ordered_pair_count_identity() {
        let (g, _) =
            DirectedGraph::from_pairs(labels(4), [(0, 1), (1, 0), (0, 2), (3, 0), (2, 3)]);
        let out_total: u64 = (0..4).map(|v| g.out_nbrs(v).len() as u64).sum();
        let bi_total: u64 = (0..4).map(|v| g.bi_nbrs(v).len() as u64).sum();
        assert_eq!(g.edge_count(), out_total + bi_total);
    }
}
