//! Canonical labeling of digraphs with at most 5 vertices and enumeration of
//! their connected isomorphism classes.
//!
//! A small graph of order `k` is a `k*k` bit matrix packed row-major into a
//! `u32` (bit `i*k + j` = edge `i -> j`, diagonal zero). The canonical code
//! is the minimum packed value over all `k!` relabelings; brute force is the
//! right tool at this size.

use crate::graph::{DirectedGraph, UndirectedSkeleton};
use alloc::string::String;
use alloc::vec::Vec;
use hashbrown::HashMap;

/// Packed identity of a small digraph: `k`, directedness and the canonical
/// bit matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AdjacencyCode {
    pub k: u8,
    pub directed: bool,
    pub bits: u32,
}

impl AdjacencyCode {
    pub fn bit(&self, i: usize, j: usize) -> bool {
        self.bits >> (i * self.k as usize + j) & 1 == 1
    }

    /// Rows of the 0/1 adjacency matrix, e.g. `["010", "001", "100"]`.
    pub fn matrix_rows(&self) -> Vec<String> {
        let k = self.k as usize;
        (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| if self.bit(i, j) { '1' } else { '0' })
                    .collect()
            })
            .collect()
    }
}

fn all_permutations(k: usize) -> Vec<Vec<u8>> {
    let mut perms = Vec::new();
    let mut cur: Vec<u8> = (0..k as u8).collect();
    fn rec(cur: &mut Vec<u8>, pos: usize, out: &mut Vec<Vec<u8>>) {
        if pos == cur.len() {
            out.push(cur.clone());
            return;
        }
        for i in pos..cur.len() {
            cur.swap(pos, i);
            rec(cur, pos + 1, out);
            cur.swap(pos, i);
        }
    }
    rec(&mut cur, 0, &mut perms);
    perms.sort_unstable();
    perms
}

/// Applies relabeling `perm` (old index -> new index) to packed bits.
pub fn permute_bits(k: usize, bits: u32, perm: &[u8]) -> u32 {
    let mut out = 0u32;
    for i in 0..k {
        for j in 0..k {
            if i != j && bits >> (i * k + j) & 1 == 1 {
                out |= 1 << (perm[i] as usize * k + perm[j] as usize);
            }
        }
    }
    out
}

/// Whether the skeleton of the packed graph is connected.
pub fn is_connected(k: usize, bits: u32) -> bool {
    let mut nbr = [0u8; 5];
    for i in 0..k {
        for j in 0..k {
            if i != j && (bits >> (i * k + j) & 1 == 1 || bits >> (j * k + i) & 1 == 1) {
                nbr[i] |= 1 << j;
            }
        }
    }
    let mut seen: u8 = 1;
    let mut frontier: u8 = 1;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let new = nbr[v] & !seen;
        seen |= new;
        frontier |= new;
    }
    seen == (1u8 << k) - 1
}

/// Canonical-form engine for one graph order. Keeps precomputed
/// bit-relocation tables per permutation and a code cache, so repeated
/// canonicalization (oracle runs, lookup generation) stays cheap.
pub struct Canonicalizer {
    k: usize,
    /// Per permutation: (source bit, destination bit) moves.
    moves: Vec<Vec<(u8, u8)>>,
    cache: HashMap<u32, u32>,
}

impl Canonicalizer {
    pub fn new(k: usize) -> Self {
        assert!((2..=5).contains(&k), "order must be between 2 and 5");
        let moves = all_permutations(k)
            .iter()
            .map(|p| {
                let mut mv = Vec::with_capacity(k * (k - 1));
                for i in 0..k {
                    for j in 0..k {
                        if i != j {
                            mv.push((
                                (i * k + j) as u8,
                                (p[i] as usize * k + p[j] as usize) as u8,
                            ));
                        }
                    }
                }
                mv
            })
            .collect();
        Canonicalizer {
            k,
            moves,
            cache: HashMap::new(),
        }
    }

    pub fn order(&self) -> usize {
        self.k
    }

    /// Minimum packed code over all relabelings of `bits`.
    pub fn canon(&mut self, bits: u32) -> u32 {
        if let Some(&c) = self.cache.get(&bits) {
            return c;
        }
        let mut best = u32::MAX;
        for mv in &self.moves {
            let mut code = 0u32;
            for &(src, dst) in mv {
                code |= (bits >> src & 1) << dst;
            }
            if code < best {
                best = code;
            }
        }
        self.cache.insert(bits, best);
        best
    }

    /// Canonical code plus the relabeling that realizes it (old -> new).
    pub fn canon_with_perm(&self, bits: u32) -> (u32, Vec<u8>) {
        let perms = all_permutations(self.k);
        let mut best = u32::MAX;
        let mut best_perm = 0;
        for (idx, mv) in self.moves.iter().enumerate() {
            let mut code = 0u32;
            for &(src, dst) in mv {
                code |= (bits >> src & 1) << dst;
            }
            if code < best {
                best = code;
                best_perm = idx;
            }
        }
        (best, perms[best_perm].clone())
    }
}

/// All connected isomorphism classes for one `(k, directedness)`.
///
/// Class IDs are the rank of the canonical code in sorted order, so they are
/// stable across runs and platforms.
#[derive(Debug, Clone)]
pub struct ClassTable {
    pub k: u8,
    pub directed: bool,
    codes: Vec<u32>,
    divisors: Vec<u32>,
    index: HashMap<u32, u16>,
}

impl ClassTable {
    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }

    pub fn code(&self, class: u16) -> AdjacencyCode {
        AdjacencyCode {
            k: self.k,
            directed: self.directed,
            bits: self.codes[class as usize],
        }
    }

    pub fn code_bits(&self, class: u16) -> u32 {
        self.codes[class as usize]
    }

    /// Class ID of a canonical code.
    pub fn class_of(&self, canonical_bits: u32) -> Option<u16> {
        self.index.get(&canonical_bits).copied()
    }

    pub fn divisor(&self, class: u16) -> u32 {
        self.divisors[class as usize]
    }

    pub fn divisors(&self) -> &[u32] {
        &self.divisors
    }
}

/// Enumerates every connected graph of order `k` (directed or undirected) and
/// groups them by canonical code. Yields 13 / 199 / 9364 directed classes and
/// 2 / 6 / 21 undirected classes for k = 3 / 4 / 5.
pub fn enumerate_classes(k: usize, directed: bool) -> ClassTable {
    assert!((3..=5).contains(&k));
    let pairs: Vec<(usize, usize)> = (0..k)
        .flat_map(|i| ((i + 1)..k).map(move |j| (i, j)))
        .collect();
    let states: u32 = if directed { 4 } else { 2 };
    let total = states.pow(pairs.len() as u32);

    let mut canon = Canonicalizer::new(k);
    let mut codes: Vec<u32> = Vec::new();
    for assignment in 0..total {
        let mut bits = 0u32;
        let mut a = assignment;
        for &(i, j) in &pairs {
            let s = a % states;
            a /= states;
            if directed {
                // 0 none, 1 i->j, 2 j->i, 3 bidirected
                if s == 1 || s == 3 {
                    bits |= 1 << (i * k + j);
                }
                if s == 2 || s == 3 {
                    bits |= 1 << (j * k + i);
                }
            } else if s == 1 {
                bits |= 1 << (i * k + j);
                bits |= 1 << (j * k + i);
            }
        }
        if is_connected(k, bits) {
            codes.push(canon.canon(bits));
        }
    }
    codes.sort_unstable();
    codes.dedup();

    let divisors: Vec<u32> = codes.iter().map(|&c| correction_divisor(k, c)).collect();
    let index = codes
        .iter()
        .enumerate()
        .map(|(i, &c)| (c, i as u16))
        .collect();
    ClassTable {
        k: k as u8,
        directed,
        codes,
        divisors,
        index,
    }
}

/// Multiplicity with which one induced subgraph of order `k` is counted
/// across anchors: the number of connected induced (k-2)-subsets whose
/// adjacency contains both remaining vertices. Anchors are vertices (k=3),
/// skeleton edges (k=4) and connected triples (k=5).
pub fn correction_divisor(k: usize, bits: u32) -> u32 {
    let mut nbr = [0u8; 5];
    for i in 0..k {
        for j in 0..k {
            if i != j && (bits >> (i * k + j) & 1 == 1 || bits >> (j * k + i) & 1 == 1) {
                nbr[i] |= 1 << j;
            }
        }
    }
    let anchor_size = k - 2;
    let full = (1u8 << k) - 1;
    let mut count = 0u32;
    for subset in 1u8..=full {
        if subset.count_ones() as usize != anchor_size {
            continue;
        }
        // anchor must be skeleton-connected
        let connected = match anchor_size {
            1 => true,
            2 => {
                let a = subset.trailing_zeros() as usize;
                let b = (subset & (subset - 1)).trailing_zeros() as usize;
                nbr[a] >> b & 1 == 1
            }
            3 => {
                let mut vs = [0usize; 3];
                let mut s = subset;
                for slot in &mut vs {
                    *slot = s.trailing_zeros() as usize;
                    s &= s - 1;
                }
                let e01 = nbr[vs[0]] >> vs[1] & 1;
                let e02 = nbr[vs[0]] >> vs[2] & 1;
                let e12 = nbr[vs[1]] >> vs[2] & 1;
                e01 + e02 + e12 >= 2
            }
            _ => unreachable!(),
        };
        if !connected {
            continue;
        }
        // both remaining vertices must have a neighbor inside the anchor
        let rest = full & !subset;
        let mut ok = true;
        let mut r = rest;
        while r != 0 {
            let w = r.trailing_zeros() as usize;
            r &= r - 1;
            if nbr[w] & subset == 0 {
                ok = false;
                break;
            }
        }
        if ok {
            count += 1;
        }
    }
    assert!(count >= 1, "connected class must be counted at least once");
    count
}

/// Builds a concrete `DirectedGraph` from packed bits (class representative).
pub fn graph_from_bits(k: usize, bits: u32) -> DirectedGraph {
    let labels = (0..k).map(|i| {
        let mut s = String::new();
        core::fmt::Write::write_fmt(&mut s, format_args!("{i}")).unwrap();
        s
    });
    let mut pairs = Vec::new();
    for i in 0..k {
        for j in 0..k {
            if i != j && bits >> (i * k + j) & 1 == 1 {
                pairs.push((i as u32, j as u32));
            }
        }
    }
    DirectedGraph::from_pairs(labels.collect(), pairs).0
}

/// Builds an `UndirectedSkeleton` from symmetric packed bits.
pub fn skeleton_from_bits(k: usize, bits: u32) -> UndirectedSkeleton {
    let mut edges = Vec::new();
    for i in 0..k {
        for j in (i + 1)..k {
            if bits >> (i * k + j) & 1 == 1 || bits >> (j * k + i) & 1 == 1 {
                edges.push((i as u32, j as u32));
            }
        }
    }
    UndirectedSkeleton::from_edges(k as u32, edges)
}

/// Packed bits for an edge `i -> j` at order `k`.
#[inline]
pub fn edge_bit(k: usize, i: usize, j: usize) -> u32 {
    1 << (i * k + j)
}
