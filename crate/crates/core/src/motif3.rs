//! Exact size-3 census.
//!
//! Per-vertex variables (partition sizes plus inter-partition edge counters,
//! filled from a triangle listing) turn every vertex's contribution into a
//! constant-time closed form. Classes whose skeleton is a triangle are
//! counted once per corner and divided by 3 at the end.

use crate::canon::{edge_bit, Canonicalizer};
use crate::census::Context;
use crate::graph::{DirectedGraph, UndirectedSkeleton};
use crate::hist::MotifHistogram;
use crate::lookup::accumulate_anchor;
use crate::{CensusError, Result};
use alloc::vec;
use alloc::vec::Vec;

/// Table-1 style variables of one vertex: partition sizes and edge counters
/// between partition classes of its neighborhood. Indices 0/1/2 stand for
/// the bidirected / out-only / in-only partitions. `m` counts directed-only
/// edges (by ordered class pair), `mb` bidirected pairs (normalized to
/// `(min, max)`).
#[derive(Debug, Clone, Copy, Default)]
pub struct VertexVars {
    pub n: [u64; 3],
    pub m: [[u64; 3]; 3],
    pub mb: [[u64; 3]; 3],
}

/// Lists every triangle of the skeleton exactly once, as sorted triples, by
/// degree-ordered neighbor intersection. Runs in O(m^1.5).
pub fn list_triangles(s: &UndirectedSkeleton) -> Vec<(u32, u32, u32)> {
    let n = s.vertex_count() as usize;
    // orientation key: (degree, id), ties by id
    let key = |v: u32| (s.degree(v), v);
    let mut fwd: Vec<Vec<u32>> = vec![Vec::new(); n];
    for &(u, v) in s.edges() {
        if key(u) < key(v) {
            fwd[u as usize].push(v);
        } else {
            fwd[v as usize].push(u);
        }
    }
    for l in &mut fwd {
        l.sort_unstable_by_key(|&v| key(v));
    }
    let mut triangles = Vec::new();
    for u in 0..n as u32 {
        let lu = &fwd[u as usize];
        for (i, &v) in lu.iter().enumerate() {
            let lv = &fwd[v as usize];
            // intersect lu[i+1..] with lv, both sorted by key
            let (mut a, mut b) = (i + 1, 0);
            while a < lu.len() && b < lv.len() {
                let (ka, kb) = (key(lu[a]), key(lv[b]));
                if ka == kb {
                    let mut t = [u, v, lu[a]];
                    t.sort_unstable();
                    triangles.push((t[0], t[1], t[2]));
                    a += 1;
                    b += 1;
                } else if ka < kb {
                    a += 1;
                } else {
                    b += 1;
                }
            }
        }
    }
    triangles
}

/// Computes the per-vertex variables: partition sizes from the neighbor
/// lists, edge counters from one pass over the triangles.
pub fn compute_vertex_vars(
    g: &DirectedGraph,
    triangles: &[(u32, u32, u32)],
) -> Vec<VertexVars> {
    let n = g.vertex_count();
    let mut vars = vec![VertexVars::default(); n as usize];
    for v in 0..n {
        let (a, b, c) = g.degree_triple(v);
        vars[v as usize].n = [a as u64, b as u64, c as u64];
    }
    for &(a, b, c) in triangles {
        for (v, x, y) in [(a, b, c), (b, a, c), (c, a, b)] {
            let rx = g.rel(v, x) as usize;
            let ry = g.rel(v, y) as usize;
            debug_assert!(rx < 3 && ry < 3);
            let vv = &mut vars[v as usize];
            let fwd = g.has_edge(x, y);
            let bwd = g.has_edge(y, x);
            match (fwd, bwd) {
                (true, true) => vv.mb[rx.min(ry)][rx.max(ry)] += 1,
                (true, false) => vv.m[rx][ry] += 1,
                (false, true) => vv.m[ry][rx] += 1,
                (false, false) => unreachable!("triangle edge missing"),
            }
        }
    }
    vars
}

/// Pre-correction size-3 frequencies contributed by vertices in
/// `lo..hi`. Ranges let callers split the work across threads; merging the
/// partial histograms and applying the divisors yields the census.
pub fn count3_directed_range(
    ctx: &Context,
    vars: &[VertexVars],
    lo: u32,
    hi: u32,
) -> Result<MotifHistogram> {
    debug_assert_eq!(ctx.k, 3);
    debug_assert!(ctx.directed);
    let mut hist = MotifHistogram::new(ctx.classes.len());
    let mut sizes = [0u64; 3];
    let mut m = [0u64; 9];
    let mut mb = [0u64; 9];
    let mut active: Vec<u16> = Vec::with_capacity(3);
    for v in lo..hi {
        let vv = &vars[v as usize];
        active.clear();
        for t in 0..3 {
            sizes[t] = vv.n[t];
            if sizes[t] > 0 {
                active.push(t as u16);
            }
            for u in 0..3 {
                m[t * 3 + u] = vv.m[t][u];
                mb[t * 3 + u] = vv.mb[t][u];
            }
        }
        accumulate_anchor(&mut hist, &ctx.lookup, 0, &sizes, &m, &mb, &active)?;
    }
    Ok(hist)
}

/// Full size-3 directed census (13 classes).
pub fn count3_directed(g: &DirectedGraph, ctx: &Context) -> Result<MotifHistogram> {
    let skeleton = g.skeleton();
    let triangles = list_triangles(&skeleton);
    let vars = compute_vertex_vars(g, &triangles);
    let mut hist = count3_directed_range(ctx, &vars, 0, g.vertex_count())?;
    hist.apply_divisors(ctx.classes.divisors())?;
    Ok(hist)
}

/// Size-3 undirected census (2 classes): triangles by listing, induced paths
/// by the closed form `sum_v C(deg v, 2) - 3 * triangles`.
pub fn count3_undirected(s: &UndirectedSkeleton, ctx: &Context) -> Result<MotifHistogram> {
    debug_assert_eq!(ctx.k, 3);
    debug_assert!(!ctx.directed);
    let tri_count = list_triangles(s).len() as u64;
    let mut pair_sum: u64 = 0;
    for v in 0..s.vertex_count() {
        let d = s.degree(v) as u64;
        pair_sum = pair_sum
            .checked_add(d * d.saturating_sub(1) / 2)
            .ok_or(CensusError::CounterOverflow)?;
    }
    let paths = pair_sum
        .checked_sub(3 * tri_count)
        .ok_or(CensusError::Inconsistency("negative path count"))?;

    let mut canon = Canonicalizer::new(3);
    let path_bits =
        edge_bit(3, 0, 1) | edge_bit(3, 1, 0) | edge_bit(3, 1, 2) | edge_bit(3, 2, 1);
    let tri_bits = (0..3usize)
        .flat_map(|i| (0..3usize).filter(move |&j| j != i).map(move |j| (i, j)))
        .fold(0u32, |b, (i, j)| b | edge_bit(3, i, j));
    let path_id = ctx.classes.class_of(canon.canon(path_bits)).unwrap();
    let tri_id = ctx.classes.class_of(canon.canon(tri_bits)).unwrap();

    let mut hist = MotifHistogram::new(ctx.classes.len());
    hist.add(path_id, paths)?;
    hist.add(tri_id, tri_count)?;
    Ok(hist)
}
