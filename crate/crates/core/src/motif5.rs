//! Exact size-5 census.
//!
//! One job per connected induced triple of the skeleton. The triple is
//! aligned with the canonical representative of its isomorphism class, its
//! adjacency is partitioned into descriptor sets (7 undirected, 63
//! directed), inter-set edges are tallied in one pass, and the closed-form
//! sums read frequencies off the generated lookup plane of that class.

use crate::canon::permute_bits;
use crate::census::Context;
use crate::graph::{DirectedGraph, UndirectedSkeleton, REL_NONE};
use crate::hist::MotifHistogram;
use crate::lookup::accumulate_anchor;
use crate::{CensusError, Result};
use alloc::vec;
use alloc::vec::Vec;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TripleKind {
    /// Induced path; the middle entry is the center.
    Path,
    Triangle,
}

/// A connected induced skeleton triple, deduplicated: paths satisfy
/// `p1 < p3` with the center in the middle, triangles `p1 < p2 < p3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TripleJob {
    pub verts: [u32; 3],
    pub kind: TripleKind,
}

const PERMS3: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

/// Lists every connected induced triple exactly once: paths by center
/// vertex, triangles from the triangle listing.
pub fn list_triples(s: &UndirectedSkeleton) -> Vec<TripleJob> {
    let mut jobs = Vec::new();
    for center in 0..s.vertex_count() {
        let nbrs = s.nbrs(center);
        for (i, &a) in nbrs.iter().enumerate() {
            for &c in &nbrs[i + 1..] {
                if !s.has_edge(a, c) {
                    jobs.push(TripleJob {
                        verts: [a, center, c],
                        kind: TripleKind::Path,
                    });
                }
            }
        }
    }
    for (a, b, c) in crate::motif3::list_triangles(s) {
        jobs.push(TripleJob {
            verts: [a, b, c],
            kind: TripleKind::Triangle,
        });
    }
    jobs
}

/// Labeled adjacency bits of the triple in job order (directed).
fn triple_bits_directed(g: &DirectedGraph, verts: &[u32; 3]) -> u32 {
    let mut bits = 0u32;
    for i in 0..3 {
        for j in 0..3 {
            if i != j && g.has_edge(verts[i], verts[j]) {
                bits |= 1 << (i * 3 + j);
            }
        }
    }
    bits
}

fn triple_bits_undirected(s: &UndirectedSkeleton, verts: &[u32; 3]) -> u32 {
    let mut bits = 0u32;
    for i in 0..3 {
        for j in (i + 1)..3 {
            if s.has_edge(verts[i], verts[j]) {
                bits |= 1 << (i * 3 + j);
                bits |= 1 << (j * 3 + i);
            }
        }
    }
    bits
}

/// Finds the triple's class among the size-3 classes and a vertex ordering
/// whose labeled adjacency equals the stored representative byte for byte.
/// The ordering aligns the triple with the lookup plane's labeling.
pub fn classify_triple(bits: u32, deltas: &crate::canon::ClassTable) -> Result<(u16, [usize; 3])> {
    let mut best = u32::MAX;
    let mut best_perm = &PERMS3[0];
    for perm in &PERMS3 {
        let p8 = [perm[0] as u8, perm[1] as u8, perm[2] as u8];
        let code = permute_bits(3, bits, &p8);
        if code < best {
            best = code;
            best_perm = perm;
        }
    }
    let class = deltas
        .class_of(best)
        .ok_or(CensusError::Inconsistency("triple not in size-3 class table"))?;
    // ordering[i] = index (within the job) of the vertex playing role i of
    // the representative
    let mut ordering = [0usize; 3];
    for i in 0..3 {
        ordering[best_perm[i]] = i;
    }
    Ok((class, ordering))
}

struct Scratch {
    desc_of: Vec<u8>,
    members: Vec<u32>,
    sizes: Vec<u64>,
    active: Vec<u16>,
    m: Vec<u64>,
    mb: Vec<u64>,
    touched: Vec<u32>,
}

impl Scratch {
    fn new(n: u32, set_count: usize) -> Self {
        Scratch {
            desc_of: vec![0xFF; n as usize],
            members: Vec::new(),
            sizes: vec![0; set_count],
            active: Vec::new(),
            m: vec![0; set_count * set_count],
            mb: vec![0; set_count * set_count],
            touched: Vec::new(),
        }
    }

    fn reset(&mut self) {
        for &w in &self.members {
            self.desc_of[w as usize] = 0xFF;
        }
        self.members.clear();
        for &t in &self.active {
            self.sizes[t as usize] = 0;
        }
        self.active.clear();
        for &i in &self.touched {
            self.m[i as usize] = 0;
            self.mb[i as usize] = 0;
        }
        self.touched.clear();
    }

    fn insert(&mut self, w: u32, desc: u8) {
        if self.desc_of[w as usize] != 0xFF {
            return;
        }
        self.desc_of[w as usize] = desc;
        self.members.push(w);
        if self.sizes[desc as usize] == 0 {
            self.active.push(desc as u16);
        }
        self.sizes[desc as usize] += 1;
    }
}

/// Pre-correction directed frequencies for a slice of triple jobs.
pub fn count5_directed_jobs(
    g: &DirectedGraph,
    ctx: &Context,
    jobs: &[TripleJob],
) -> Result<MotifHistogram> {
    debug_assert_eq!(ctx.k, 5);
    debug_assert!(ctx.directed);
    let deltas = ctx.deltas.as_ref().expect("size-5 context carries deltas");
    let s = ctx.lookup.set_count;
    let mut hist = MotifHistogram::new(ctx.classes.len());
    let mut sc = Scratch::new(g.vertex_count(), s);
    for job in jobs {
        let bits = triple_bits_directed(g, &job.verts);
        let (delta, ordering) = classify_triple(bits, deltas)?;
        let q = [
            job.verts[ordering[0]],
            job.verts[ordering[1]],
            job.verts[ordering[2]],
        ];
        for p in job.verts {
            for nbrs in [g.bi_nbrs(p), g.out_nbrs(p), g.in_nbrs(p)] {
                for &w in nbrs {
                    if w == job.verts[0] || w == job.verts[1] || w == job.verts[2] {
                        continue;
                    }
                    let r0 = g.rel(q[0], w);
                    let r1 = g.rel(q[1], w);
                    let r2 = g.rel(q[2], w);
                    debug_assert!(r0 != REL_NONE || r1 != REL_NONE || r2 != REL_NONE);
                    sc.insert(w, r0 * 16 + r1 * 4 + r2);
                }
            }
        }
        sc.active.sort_unstable();
        for &w in &sc.members {
            let dw = sc.desc_of[w as usize] as usize;
            for &x in g.out_nbrs(w) {
                let dx = sc.desc_of[x as usize];
                if dx != 0xFF {
                    let idx = dw * s + dx as usize;
                    if sc.m[idx] == 0 && sc.mb[idx] == 0 {
                        sc.touched.push(idx as u32);
                    }
                    sc.m[idx] += 1;
                }
            }
            for &x in g.bi_nbrs(w) {
                if x <= w {
                    continue;
                }
                let dx = sc.desc_of[x as usize];
                if dx != 0xFF {
                    let (a, b) = (dw.min(dx as usize), dw.max(dx as usize));
                    let idx = a * s + b;
                    if sc.m[idx] == 0 && sc.mb[idx] == 0 {
                        sc.touched.push(idx as u32);
                    }
                    sc.mb[idx] += 1;
                }
            }
        }
        accumulate_anchor(
            &mut hist,
            &ctx.lookup,
            delta as usize,
            &sc.sizes,
            &sc.m,
            &sc.mb,
            &sc.active,
        )?;
        sc.reset();
    }
    Ok(hist)
}

/// Full size-5 directed census (9364 classes).
pub fn count5_directed(g: &DirectedGraph, ctx: &Context) -> Result<MotifHistogram> {
    let skeleton = g.skeleton();
    let jobs = list_triples(&skeleton);
    let mut hist = count5_directed_jobs(g, ctx, &jobs)?;
    hist.apply_divisors(ctx.classes.divisors())?;
    Ok(hist)
}

/// Pre-correction undirected frequencies for a slice of triple jobs.
pub fn count5_undirected_jobs(
    s: &UndirectedSkeleton,
    ctx: &Context,
    jobs: &[TripleJob],
) -> Result<MotifHistogram> {
    debug_assert_eq!(ctx.k, 5);
    debug_assert!(!ctx.directed);
    let deltas = ctx.deltas.as_ref().expect("size-5 context carries deltas");
    let sets = ctx.lookup.set_count;
    let mut hist = MotifHistogram::new(ctx.classes.len());
    let mut sc = Scratch::new(s.vertex_count(), sets);
    for job in jobs {
        let bits = triple_bits_undirected(s, &job.verts);
        let (delta, ordering) = classify_triple(bits, deltas)?;
        let q = [
            job.verts[ordering[0]],
            job.verts[ordering[1]],
            job.verts[ordering[2]],
        ];
        for p in job.verts {
            for &w in s.nbrs(p) {
                if w == job.verts[0] || w == job.verts[1] || w == job.verts[2] {
                    continue;
                }
                let d = s.rel(q[0], w) * 4 + s.rel(q[1], w) * 2 + s.rel(q[2], w);
                sc.insert(w, d);
            }
        }
        sc.active.sort_unstable();
        for &w in &sc.members {
            let dw = sc.desc_of[w as usize] as usize;
            for &x in s.nbrs(w) {
                if x <= w {
                    continue;
                }
                let dx = sc.desc_of[x as usize];
                if dx != 0xFF {
                    let (a, b) = (dw.min(dx as usize), dw.max(dx as usize));
                    let idx = a * sets + b;
                    if sc.mb[idx] == 0 {
                        sc.touched.push(idx as u32);
                    }
                    sc.mb[idx] += 1;
                }
            }
        }
        accumulate_anchor(
            &mut hist,
            &ctx.lookup,
            delta as usize,
            &sc.sizes,
            &sc.m,
            &sc.mb,
            &sc.active,
        )?;
        sc.reset();
    }
    Ok(hist)
}

/// Full size-5 undirected census (21 classes).
pub fn count5_undirected(s: &UndirectedSkeleton, ctx: &Context) -> Result<MotifHistogram> {
    let jobs = list_triples(s);
    let mut hist = count5_undirected_jobs(s, ctx, &jobs)?;
    hist.apply_divisors(ctx.classes.divisors())?;
    Ok(hist)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::Canonicalizer;
    use alloc::format;
    use alloc::string::String;

    fn labels(n: u32) -> Vec<String> {
        (0..n).map(|i| format!("{i}")).collect()
    }

    fn cycle_skeleton(n: u32) -> UndirectedSkeleton {
        let mut edges: Vec<(u32, u32)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((0, n - 1));
        edges.sort_unstable();
        UndirectedSkeleton::from_edges(n, edges)
    }

    #[test]
    fn triple_listing_counts() {
        assert_eq!(list_triples(&cycle_skeleton(5)).len(), 5);
        let k4 = UndirectedSkeleton::from_edges(
            4,
            vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
        );
        let jobs = list_triples(&k4);
        assert_eq!(jobs.len(), 4);
        assert!(jobs.iter().all(|j| j.kind == TripleKind::Triangle));
        // star with 4 leaves: 6 paths through the center
        let s4 = UndirectedSkeleton::from_edges(5, vec![(0, 1), (0, 2), (0, 3), (0, 4)]);
        let jobs = list_triples(&s4);
        assert_eq!(jobs.len(), 6);
        assert!(jobs.iter().all(|j| j.kind == TripleKind::Path));
    }

    #[test]
    fn classify_keeps_path_center_central() {
        let (g, _) =
            DirectedGraph::from_pairs(labels(3), [(0, 1), (1, 0), (1, 2), (2, 1)]);
        let deltas = crate::canon::enumerate_classes(3, true);
        let bits = triple_bits_directed(&g, &[0, 1, 2]);
        let (_, ordering) = classify_triple(bits, &deltas).unwrap();
        let q = [0u32, 1, 2].map(|i| [0u32, 1, 2][ordering[i as usize]]);
        // the center (vertex 1) must land on the representative's center
        let rep_bits = {
            let mut c = Canonicalizer::new(3);
            c.canon(bits)
        };
        let mut center_role = 4;
        for c in 0..3usize {
            let a = (c + 1) % 3;
            let b = (c + 2) % 3;
            if rep_bits >> (c * 3 + a) & 1 == 1 && rep_bits >> (c * 3 + b) & 1 == 1 {
                center_role = c;
            }
        }
        assert_eq!(q[center_role], 1);
    }

    #[test]
    fn bidirected_p5_counts_once() {
        let ctx = Context::new(5, true);
        let (g, _) = DirectedGraph::from_pairs(
            labels(5),
            [(0, 1), (1, 0), (1, 2), (2, 1), (2, 3), (3, 2), (3, 4), (4, 3)],
        );
        let hist = count5_directed(&g, &ctx).unwrap();
        assert_eq!(hist.total(), 1);
        let mut canon = Canonicalizer::new(5);
        let code = canon.canon(g.induced_bits(&[0, 1, 2, 3, 4]));
        assert_eq!(hist.get(ctx.classes.class_of(code).unwrap()), 1);
    }

    #[test]
    fn undirected_c5_and_k5_count_once() {
        let ctx = Context::new(5, false);
        let c5 = cycle_skeleton(5);
        let hist = count5_undirected(&c5, &ctx).unwrap();
        assert_eq!(hist.total(), 1);
        let mut canon = Canonicalizer::new(5);
        let code = canon.canon(c5.induced_bits(&[0, 1, 2, 3, 4]));
        assert_eq!(hist.get(ctx.classes.class_of(code).unwrap()), 1);

        let mut edges = Vec::new();
        for i in 0..5u32 {
            for j in (i + 1)..5u32 {
                edges.push((i, j));
            }
        }
        let k5 = UndirectedSkeleton::from_edges(5, edges);
        let hist = count5_undirected(&k5, &ctx).unwrap();
        assert_eq!(hist.total(), 1);
    }
}
