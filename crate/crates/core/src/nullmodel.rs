//! Degree-preserving randomization and ensemble significance statistics.
//!
//! The null model is edge switching: pick two edges of the same kind
//! (directed or bidirected), swap their endpoints, and reject any swap that
//! would create a self-loop, a duplicate, or convert one kind into the
//! other. Every vertex keeps its exact (bidirected, out, in) degree triple.
//! The PRNG is ChaCha8 seeded explicitly, so ensembles reproduce across
//! platforms.

use crate::graph::DirectedGraph;
use crate::hist::MotifHistogram;
use crate::{CensusError, Result};
use alloc::vec::Vec;
use hashbrown::HashSet;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

/// Switching parameters. Ensemble-size defaults follow common practice for
/// this census (100 / 10 / 5 random graphs for k = 3 / 4 / 5).
#[derive(Debug, Clone, Copy)]
pub struct SwitchConfig {
    pub attempts_per_edge: u32,
    pub seed: u64,
    pub ensemble: u32,
}

pub fn default_ensemble(k: usize) -> u32 {
    match k {
        3 => 100,
        4 => 10,
        _ => 5,
    }
}

/// Independent, reproducible RNG for ensemble member `member`.
pub fn member_rng(seed: u64, member: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(member);
    rng
}

#[inline]
fn pick(rng: &mut ChaCha8Rng, n: usize) -> usize {
    (rng.next_u64() % n as u64) as usize
}

/// Produces a randomized copy of `g` with identical per-vertex degree
/// triples via `attempts_per_edge * m` switch trials.
pub fn randomize(g: &DirectedGraph, attempts_per_edge: u32, rng: &mut ChaCha8Rng) -> DirectedGraph {
    // directed-only edges as ordered pairs, bidirected pairs normalized
    let mut dir: Vec<(u32, u32)> = Vec::new();
    let mut bi: Vec<(u32, u32)> = Vec::new();
    for &(u, v) in g.edges() {
        if g.has_edge(v, u) {
            if u < v {
                bi.push((u, v));
            }
        } else {
            dir.push((u, v));
        }
    }
    let mut present: HashSet<(u32, u32)> = g.edges().iter().copied().collect();
    let kinds = dir.len() + bi.len();
    if kinds == 0 {
        return g.clone();
    }

    let trials = attempts_per_edge as u64 * g.edge_count();
    for _ in 0..trials {
        let slot = pick(rng, kinds);
        if slot < dir.len() {
            if dir.len() < 2 {
                continue;
            }
            let i = pick(rng, dir.len());
            let j = pick(rng, dir.len());
            let (a, b) = dir[i];
            let (c, d) = dir[j];
            // proposed: (a,d) and (c,b)
            if i == j || a == c || b == d || a == d || c == b {
                continue;
            }
            if present.contains(&(a, d))
                || present.contains(&(d, a))
                || present.contains(&(c, b))
                || present.contains(&(b, c))
            {
                continue;
            }
            present.remove(&(a, b));
            present.remove(&(c, d));
            present.insert((a, d));
            present.insert((c, b));
            dir[i] = (a, d);
            dir[j] = (c, b);
        } else {
            if bi.len() < 2 {
                continue;
            }
            let i = pick(rng, bi.len());
            let j = pick(rng, bi.len());
            let (a, b) = bi[i];
            let (mut c, mut d) = bi[j];
            if rng.next_u64() & 1 == 1 {
                core::mem::swap(&mut c, &mut d);
            }
            // proposed: {a,d} and {c,b}
            if i == j || a == c || b == d || a == d || c == b {
                continue;
            }
            if present.contains(&(a, d))
                || present.contains(&(d, a))
                || present.contains(&(c, b))
                || present.contains(&(b, c))
            {
                continue;
            }
            for (x, y) in [(a, b), (c, d)] {
                present.remove(&(x, y));
                present.remove(&(y, x));
            }
            for (x, y) in [(a, d), (c, b)] {
                present.insert((x, y));
                present.insert((y, x));
            }
            bi[i] = (a.min(d), a.max(d));
            bi[j] = (c.min(b), c.max(b));
        }
    }

    // rebuild from the edge vectors, not the hash set, so the result is
    // identical for a given seed regardless of hasher details
    let mut pairs: Vec<(u32, u32)> = dir;
    for (u, v) in bi {
        pairs.push((u, v));
        pairs.push((v, u));
    }
    DirectedGraph::from_pairs(g.labels().to_vec(), pairs).0
}

/// Per-class statistics of a real count against a random ensemble.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassStats {
    pub class: u16,
    pub real: u64,
    pub mean: f64,
    pub stddev: f64,
    /// (real - mean) / stddev; 0 when stddev = 0 and real = mean.
    pub z: f64,
    /// stddev = 0 but real != mean: z has no finite value.
    pub z_infinite: bool,
    /// Empirical one-sided p-value: fraction of random counts >= real.
    pub p: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EnsembleStats {
    pub rows: Vec<ClassStats>,
}

/// Reduces a real histogram plus ensemble histograms to per-class stats.
/// Classes absent everywhere are omitted.
pub fn ensemble_stats(real: &MotifHistogram, samples: &[MotifHistogram]) -> Result<EnsembleStats> {
    if samples.len() < 2 {
        return Err(CensusError::EnsembleTooSmall);
    }
    let n = samples.len() as f64;
    let mut rows = Vec::new();
    for class in 0..real.class_count() as u16 {
        let r = real.get(class);
        let counts: Vec<u64> = samples.iter().map(|h| h.get(class)).collect();
        if r == 0 && counts.iter().all(|&c| c == 0) {
            continue;
        }
        let mean = counts.iter().map(|&c| c as f64).sum::<f64>() / n;
        let var = counts
            .iter()
            .map(|&c| {
                let d = c as f64 - mean;
                d * d
            })
            .sum::<f64>()
            / (n - 1.0);
        let stddev = libm_sqrt(var);
        let (z, z_infinite) = if stddev > 0.0 {
            ((r as f64 - mean) / stddev, false)
        } else if (r as f64 - mean).abs() < f64::EPSILON {
            (0.0, false)
        } else {
            (if (r as f64) > mean { f64::MAX } else { f64::MIN }, true)
        };
        let p = counts.iter().filter(|&&c| c >= r).count() as f64 / n;
        rows.push(ClassStats {
            class,
            real: r,
            mean,
            stddev,
            z,
            z_infinite,
            p,
        });
    }
    Ok(EnsembleStats { rows })
}

// no_std float sqrt: exponent-halving initial guess plus Newton steps,
// accurate to f64 precision for the non-negative finite inputs we feed it
fn libm_sqrt(x: f64) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    let mut guess = f64::from_bits((x.to_bits() >> 1) + 0x1ff8_0000_0000_0000);
    for _ in 0..6 {
        guess = 0.5 * (guess + x / guess);
    }
    guess
}
