//! Parallel census drivers and significance orchestration.
//!
//! The counting kernels are pure over independent job slices (vertices for
//! k = 3, skeleton edges for k = 4, connected triples for k = 5); workers
//! take contiguous slices and the per-worker histograms merge by addition,
//! so the result is identical for every worker count.

use motifcensus_core::census::{census_undirected, Context};
use motifcensus_core::graph::{DirectedGraph, UndirectedSkeleton};
use motifcensus_core::hist::MotifHistogram;
use motifcensus_core::nullmodel::{ensemble_stats, member_rng, randomize, EnsembleStats, SwitchConfig};
use motifcensus_core::{motif3, motif4, motif5, CensusError};

/// Splits `total` jobs into at most `workers` contiguous ranges.
fn ranges(total: usize, workers: usize) -> Vec<(usize, usize)> {
    let workers = workers.max(1).min(total.max(1));
    let chunk = total.div_ceil(workers);
    (0..workers)
        .map(|w| (w * chunk, ((w + 1) * chunk).min(total)))
        .filter(|(lo, hi)| lo < hi)
        .collect()
}

fn run_sliced<F>(ctx: &Context, total: usize, workers: usize, f: F) -> Result<MotifHistogram, CensusError>
where
    F: Fn(usize, usize) -> Result<MotifHistogram, CensusError> + Sync,
{
    let parts = ranges(total, workers);
    let mut hist = MotifHistogram::new(ctx.classes.len());
    if parts.len() <= 1 {
        if let Some(&(lo, hi)) = parts.first() {
            hist.merge(&f(lo, hi)?)?;
        }
        return Ok(hist);
    }
    let partials = std::thread::scope(|scope| {
        let f = &f;
        let handles: Vec<_> = parts
            .iter()
            .map(|&(lo, hi)| scope.spawn(move || f(lo, hi)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("census worker panicked"))
            .collect::<Vec<_>>()
    });
    for part in partials {
        hist.merge(&part?)?;
    }
    Ok(hist)
}

/// Directed census with the work split over `workers` threads.
pub fn census_directed_parallel(
    g: &DirectedGraph,
    ctx: &Context,
    workers: usize,
) -> Result<MotifHistogram, CensusError> {
    let mut hist = match ctx.k {
        3 => {
            let skeleton = g.skeleton();
            let triangles = motif3::list_triangles(&skeleton);
            let vars = motif3::compute_vertex_vars(g, &triangles);
            let n = g.vertex_count() as usize;
            run_sliced(ctx, n, workers, |lo, hi| {
                motif3::count3_directed_range(ctx, &vars, lo as u32, hi as u32)
            })?
        }
        4 => {
            let jobs = motif4::edge_jobs(g);
            run_sliced(ctx, jobs.len(), workers, |lo, hi| {
                motif4::count4_directed_jobs(g, ctx, &jobs[lo..hi])
            })?
        }
        5 => {
            let jobs = motif5::list_triples(&g.skeleton());
            run_sliced(ctx, jobs.len(), workers, |lo, hi| {
                motif5::count5_directed_jobs(g, ctx, &jobs[lo..hi])
            })?
        }
        _ => unreachable!(),
    };
    hist.apply_divisors(ctx.classes.divisors())?;
    Ok(hist)
}

/// Undirected census with the work split over `workers` threads. The k = 3
/// closed form is already linear-time, so it always runs on one thread.
pub fn census_undirected_parallel(
    s: &UndirectedSkeleton,
    ctx: &Context,
    workers: usize,
) -> Result<MotifHistogram, CensusError> {
    match ctx.k {
        3 => census_undirected(s, ctx),
        4 => {
            let mut hist = run_sliced(ctx, s.edges().len(), workers, |lo, hi| {
                motif4::count4_undirected_jobs(s, ctx, &s.edges()[lo..hi])
            })?;
            hist.apply_divisors(ctx.classes.divisors())?;
            Ok(hist)
        }
        5 => {
            let jobs = motif5::list_triples(s);
            let mut hist = run_sliced(ctx, jobs.len(), workers, |lo, hi| {
                motif5::count5_undirected_jobs(s, ctx, &jobs[lo..hi])
            })?;
            hist.apply_divisors(ctx.classes.divisors())?;
            Ok(hist)
        }
        _ => unreachable!(),
    }
}

/// Census dispatch honoring the directed/undirected mode.
pub fn census(
    g: &DirectedGraph,
    ctx: &Context,
    workers: usize,
) -> Result<MotifHistogram, CensusError> {
    if ctx.directed {
        census_directed_parallel(g, ctx, workers)
    } else {
        census_undirected_parallel(&g.skeleton(), ctx, workers)
    }
}

/// Real census plus an ensemble of degree-preserving randomized copies,
/// reduced to per-class statistics. Ensemble member `i` always uses the RNG
/// stream `i` of `cfg.seed`, so results do not depend on `workers`.
pub fn significance(
    g: &DirectedGraph,
    ctx: &Context,
    cfg: SwitchConfig,
    workers: usize,
) -> Result<EnsembleStats, CensusError> {
    if cfg.ensemble < 2 {
        return Err(CensusError::EnsembleTooSmall);
    }
    let real = census(g, ctx, workers)?;
    let members: Vec<u64> = (0..cfg.ensemble as u64).collect();
    let parts = ranges(members.len(), workers);
    let sample_one = |member: u64| -> Result<MotifHistogram, CensusError> {
        let mut rng = member_rng(cfg.seed, member);
        let r = randomize(g, cfg.attempts_per_edge, &mut rng);
        // members already run in parallel; census each on one thread
        census(&r, ctx, 1)
    };
    let samples: Vec<Result<MotifHistogram, CensusError>> = if parts.len() <= 1 {
        members.iter().map(|&m| sample_one(m)).collect()
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = parts
                .iter()
                .map(|&(lo, hi)| {
                    let members = &members[lo..hi];
                    let sample_one = &sample_one;
                    scope.spawn(move || members.iter().map(|&m| sample_one(m)).collect::<Vec<_>>())
                })
                .collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("ensemble worker panicked"))
                .collect()
        })
    };
    let samples: Vec<MotifHistogram> = samples.into_iter().collect::<Result<_, _>>()?;
    ensemble_stats(&real, &samples)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::parse_edge_list;

    fn demo() -> DirectedGraph {
        let mut text = String::new();
        for i in 0..30u32 {
            text.push_str(&format!("{} {}\n", i, (i + 1) % 30));
            text.push_str(&format!("{} {}\n", i, (i * 7 + 3) % 30));
            if i % 3 == 0 {
                text.push_str(&format!("{} {}\n{} {}\n", i, (i + 5) % 30, (i + 5) % 30, i));
            }
        }
        parse_edge_list(&text, false).unwrap().0
    }

    #[test]
    fn worker_count_does_not_change_histograms() {
        let g = demo();
        for k in 3..=5 {
            for directed in [true, false] {
                let ctx = Context::new(k, directed);
                let one = census(&g, &ctx, 1).unwrap();
                let eight = census(&g, &ctx, 8).unwrap();
                assert_eq!(one, eight, "k={k} directed={directed}");
            }
        }
    }

    #[test]
    fn significance_real_column_matches_census() {
        let g = demo();
        let ctx = Context::new(3, true);
        let cfg = SwitchConfig {
            attempts_per_edge: 3,
            seed: 11,
            ensemble: 8,
        };
        let census_hist = census(&g, &ctx, 2).unwrap();
        let stats = significance(&g, &ctx, cfg, 2).unwrap();
        for row in &stats.rows {
            assert_eq!(row.real, census_hist.get(row.class));
        }
    }

    #[test]
    fn significance_is_worker_invariant() {
        let g = demo();
        let ctx = Context::new(3, true);
        let cfg = SwitchConfig {
            attempts_per_edge: 3,
            seed: 99,
            ensemble: 6,
        };
        let a = significance(&g, &ctx, cfg, 1).unwrap();
        let b = significance(&g, &ctx, cfg, 8).unwrap();
        assert_eq!(a.rows, b.rows);
    }

    #[test]
    fn tiny_ensemble_is_config_error() {
        let g = demo();
        let ctx = Context::new(3, true);
        let cfg = SwitchConfig {
            attempts_per_edge: 3,
            seed: 0,
            ensemble: 1,
        };
        assert!(matches!(
            significance(&g, &ctx, cfg, 1),
            Err(CensusError::EnsembleTooSmall)
        ));
    }
}
