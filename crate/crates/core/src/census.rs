//! Census context (class table + generated lookups) and k-dispatch.

use crate::canon::{enumerate_classes, ClassTable};
use crate::graph::{DirectedGraph, UndirectedSkeleton};
use crate::hist::MotifHistogram;
use crate::lookup::{build_lookup, PatternLookup};
use crate::{motif3, motif4, motif5, Result};

/// Everything a census run shares read-only: the class table for the target
/// `(k, directedness)`, the generated pattern lookup, and for k = 5 the
/// size-3 class table used to classify triples.
pub struct Context {
    pub k: usize,
    pub directed: bool,
    pub classes: ClassTable,
    pub lookup: PatternLookup,
    pub deltas: Option<ClassTable>,
}

impl Context {
    pub fn new(k: usize, directed: bool) -> Self {
        assert!((3..=5).contains(&k));
        let classes = enumerate_classes(k, directed);
        let deltas = if k == 5 {
            Some(enumerate_classes(3, directed))
        } else {
            None
        };
        let lookup = build_lookup(&classes, deltas.as_ref());
        Context {
            k,
            directed,
            classes,
            lookup,
            deltas,
        }
    }
}

/// Full directed census for the context's k, corrections applied.
pub fn census_directed(g: &DirectedGraph, ctx: &Context) -> Result<MotifHistogram> {
    let mut hist = census_directed_raw(g, ctx)?;
    hist.apply_divisors(ctx.classes.divisors())?;
    Ok(hist)
}

/// Directed census without the final divisor correction. Used by the
/// divisor audit, which reads raw anchor multiplicities.
pub fn census_directed_raw(g: &DirectedGraph, ctx: &Context) -> Result<MotifHistogram> {
    match ctx.k {
        3 => {
            let skeleton = g.skeleton();
            let triangles = motif3::list_triangles(&skeleton);
            let vars = motif3::compute_vertex_vars(g, &triangles);
            motif3::count3_directed_range(ctx, &vars, 0, g.vertex_count())
        }
        4 => {
            let jobs = motif4::edge_jobs(g);
            motif4::count4_directed_jobs(g, ctx, &jobs)
        }
        5 => {
            let jobs = motif5::list_triples(&g.skeleton());
            motif5::count5_directed_jobs(g, ctx, &jobs)
        }
        _ => unreachable!(),
    }
}

/// Full undirected census for the context's k.
pub fn census_undirected(s: &UndirectedSkeleton, ctx: &Context) -> Result<MotifHistogram> {
    match ctx.k {
        3 => motif3::count3_undirected(s, ctx),
        4 => motif4::count4_undirected(s, ctx),
        5 => motif5::count5_undirected(s, ctx),
        _ => unreachable!(),
    }
}

/// Undirected census without corrections (k = 3 has none to skip: its
/// closed form is already multiplicity-free, so the raw histogram is scaled
/// back up by the divisors to expose anchor multiplicities).
pub fn census_undirected_raw(s: &UndirectedSkeleton, ctx: &Context) -> Result<MotifHistogram> {
    match ctx.k {
        3 => {
            let hist = motif3::count3_undirected(s, ctx)?;
            let mut raw = MotifHistogram::new(ctx.classes.len());
            for (class, count) in hist.iter_nonzero() {
                raw.add(class, count * ctx.classes.divisor(class) as u64)?;
            }
            Ok(raw)
        }
        4 => motif4::count4_undirected_jobs(s, ctx, s.edges()),
        5 => {
            let jobs = motif5::list_triples(s);
            motif5::count5_undirected_jobs(s, ctx, &jobs)
        }
        _ => unreachable!(),
    }
}
