//! Exact size-4 census.
//!
//! One job per skeleton edge: the edge's adjacency is partitioned into
//! descriptor sets (X/Y/Z undirected, the 15 two-digit sets directed), edges
//! inside the adjacency are tallied per set pair in one pass, and the
//! closed-form sums read the per-class frequencies off the generated lookup.
//! A bidirected pair is a single job on the bidirected lookup plane.

use crate::census::Context;
use crate::graph::{DirectedGraph, UndirectedSkeleton, REL_NONE};
use crate::hist::MotifHistogram;
use crate::lookup::accumulate_anchor;
use crate::Result;
use alloc::vec;
use alloc::vec::Vec;

/// One counting job: a skeleton edge, oriented as stored for directed-only
/// edges and flagged when the pair is bidirected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeJob {
    pub u: u32,
    pub v: u32,
    pub bidirected: bool,
}

/// Skeleton edges as jobs, in sorted skeleton order.
pub fn edge_jobs(g: &DirectedGraph) -> Vec<EdgeJob> {
    let mut jobs = Vec::new();
    for v in 0..g.vertex_count() {
        for &w in g.bi_nbrs(v) {
            if v < w {
                jobs.push(EdgeJob {
                    u: v,
                    v: w,
                    bidirected: true,
                });
            }
        }
        for &w in g.out_nbrs(v) {
            jobs.push(EdgeJob {
                u: v,
                v: w,
                bidirected: false,
            });
        }
    }
    jobs.sort_unstable_by_key(|j| (j.u.min(j.v), j.u.max(j.v)));
    jobs
}

/// Scratch space reused across jobs: descriptor per vertex (0xFF = not in
/// the adjacency), set sizes, and dense counter grids with a touched list so
/// resets cost only what the job touched.
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

/// Pre-correction directed frequencies for a slice of edge jobs.
pub fn count4_directed_jobs(
    g: &DirectedGraph,
    ctx: &Context,
    jobs: &[EdgeJob],
) -> Result<MotifHistogram> {
    debug_assert_eq!(ctx.k, 4);
    debug_assert!(ctx.directed);
    let s = ctx.lookup.set_count;
    let mut hist = MotifHistogram::new(ctx.classes.len());
    let mut sc = Scratch::new(g.vertex_count(), s);
    for job in jobs {
        let (u, v) = (job.u, job.v);
        let anchor = if job.bidirected { 0 } else { 1 };
        for p in [u, v] {
            for nbrs in [g.bi_nbrs(p), g.out_nbrs(p), g.in_nbrs(p)] {
                for &w in nbrs {
                    if w == u || w == v {
                        continue;
                    }
                    let ru = g.rel(u, w);
                    let rv = g.rel(v, w);
                    debug_assert!(ru != REL_NONE || rv != REL_NONE);
                    sc.insert(w, ru * 4 + rv);
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
        accumulate_anchor(&mut hist, &ctx.lookup, anchor, &sc.sizes, &sc.m, &sc.mb, &sc.active)?;
        sc.reset();
    }
    Ok(hist)
}

/// Full size-4 directed census (199 classes).
pub fn count4_directed(g: &DirectedGraph, ctx: &Context) -> Result<MotifHistogram> {
    let jobs = edge_jobs(g);
    let mut hist = count4_directed_jobs(g, ctx, &jobs)?;
    hist.apply_divisors(ctx.classes.divisors())?;
    Ok(hist)
}

/// Pre-correction undirected frequencies for a slice of skeleton edges.
pub fn count4_undirected_jobs(
    s: &UndirectedSkeleton,
    ctx: &Context,
    jobs: &[(u32, u32)],
) -> Result<MotifHistogram> {
    debug_assert_eq!(ctx.k, 4);
    debug_assert!(!ctx.directed);
    let sets = ctx.lookup.set_count;
    let mut hist = MotifHistogram::new(ctx.classes.len());
    let mut sc = Scratch::new(s.vertex_count(), sets);
    for &(u, v) in jobs {
        for p in [u, v] {
            for &w in s.nbrs(p) {
                if w == u || w == v {
                    continue;
                }
                sc.insert(w, s.rel(u, w) * 2 + s.rel(v, w));
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
        accumulate_anchor(&mut hist, &ctx.lookup, 0, &sc.sizes, &sc.m, &sc.mb, &sc.active)?;
        sc.reset();
    }
    Ok(hist)
}

/// Full size-4 undirected census (6 classes).
pub fn count4_undirected(s: &UndirectedSkeleton, ctx: &Context) -> Result<MotifHistogram> {
    let mut hist = count4_undirected_jobs(s, ctx, s.edges())?;
    hist.apply_divisors(ctx.classes.divisors())?;
    Ok(hist)
}
