//! Brute-force census for verification: enumerate every connected induced
//! k-subgraph once, canonicalize, tally. Shares only the graph types and
//! canonical codes with the fast path; the counting logic is independent.

use crate::canon::{graph_from_bits, skeleton_from_bits, Canonicalizer};
use crate::census::{census_directed_raw, census_undirected_raw, Context};
use crate::graph::{DirectedGraph, UndirectedSkeleton};
use crate::hist::MotifHistogram;
use crate::{CensusError, Result};
use alloc::vec;
use alloc::vec::Vec;

pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone)]
pub struct OracleReport {
    pub k: u8,
    pub directed: bool,
    pub hist: MotifHistogram,
    pub total: u64,
}

/// Enumerates every vertex set of size `k` whose induced skeleton is
/// connected, exactly once, anchored-extension style: grow from each anchor
/// vertex using only larger-indexed exclusive neighbors. Returns the number
/// of sets visited; errors out when `budget` is exceeded.
pub fn enumerate_connected_induced<F>(
    s: &UndirectedSkeleton,
    k: usize,
    budget: u64,
    mut visit: F,
) -> Result<u64>
where
    F: FnMut(&[u32]) -> Result<()>,
{
    assert!((3..=5).contains(&k));
    let n = s.vertex_count();
    let mut count = 0u64;
    // closed[w]: w is in the current subgraph or already reachable from it
    // via an extension list (prevents re-adding the same candidate twice)
    let mut closed = vec![false; n as usize];
    let mut sub: Vec<u32> = Vec::with_capacity(k);

    fn extend<F: FnMut(&[u32]) -> Result<()>>(
        s: &UndirectedSkeleton,
        k: usize,
        anchor: u32,
        sub: &mut Vec<u32>,
        mut ext: Vec<u32>,
        closed: &mut Vec<bool>,
        count: &mut u64,
        budget: u64,
        visit: &mut F,
    ) -> Result<()> {
        if sub.len() == k {
            *count += 1;
            if *count > budget {
                return Err(CensusError::BudgetExceeded { budget });
            }
            return visit(sub);
        }
        // every candidate removed here stays removed for later iterations of
        // this call, so each vertex set is generated exactly once
        while let Some(w) = ext.pop() {
            sub.push(w);
            let mut child = ext.clone();
            let mut added: Vec<u32> = Vec::new();
            for &u in s.nbrs(w) {
                if u > anchor && !closed[u as usize] {
                    closed[u as usize] = true;
                    child.push(u);
                    added.push(u);
                }
            }
            extend(s, k, anchor, sub, child, closed, count, budget, visit)?;
            for u in added {
                closed[u as usize] = false;
            }
            sub.pop();
        }
        Ok(())
    }

    for v in 0..n {
        sub.push(v);
        closed[v as usize] = true;
        let mut ext: Vec<u32> = Vec::new();
        for &u in s.nbrs(v) {
            if u > v {
                closed[u as usize] = true;
                ext.push(u);
            }
        }
        let roots = ext.clone();
        extend(
            s, k, v, &mut sub, ext, &mut closed, &mut count, budget, &mut visit,
        )?;
        for u in roots {
            closed[u as usize] = false;
        }
        closed[v as usize] = false;
        sub.pop();
    }
    Ok(count)
}

/// Ground-truth directed census by exhaustive enumeration.
pub fn oracle_directed(
    g: &DirectedGraph,
    k: usize,
    classes: &crate::canon::ClassTable,
    budget: u64,
) -> Result<OracleReport> {
    debug_assert!(classes.directed && classes.k as usize == k);
    let skeleton = g.skeleton();
    let mut canon = Canonicalizer::new(k);
    let mut hist = MotifHistogram::new(classes.len());
    let total = enumerate_connected_induced(&skeleton, k, budget, |set| {
        let code = canon.canon(g.induced_bits(set));
        let class = classes
            .class_of(code)
            .ok_or(CensusError::Inconsistency("oracle code not in class table"))?;
        hist.add(class, 1)
    })?;
    Ok(OracleReport {
        k: k as u8,
        directed: true,
        hist,
        total,
    })
}

/// Ground-truth undirected census by exhaustive enumeration.
pub fn oracle_undirected(
    s: &UndirectedSkeleton,
    k: usize,
    classes: &crate::canon::ClassTable,
    budget: u64,
) -> Result<OracleReport> {
    debug_assert!(!classes.directed && classes.k as usize == k);
    let mut canon = Canonicalizer::new(k);
    let mut hist = MotifHistogram::new(classes.len());
    let total = enumerate_connected_induced(s, k, budget, |set| {
        let code = canon.canon(s.induced_bits(set));
        let class = classes
            .class_of(code)
            .ok_or(CensusError::Inconsistency("oracle code not in class table"))?;
        hist.add(class, 1)
    })?;
    Ok(OracleReport {
        k: k as u8,
        directed: false,
        hist,
        total,
    })
}

/// Raw multiplicity with which the accelerated path counts a class
/// representative: run the census on the representative alone, without the
/// final division, and read its own class slot. Must equal the generated
/// correction divisor.
pub fn audit_divisor(ctx: &Context, class: u16) -> Result<u64> {
    let bits = ctx.classes.code_bits(class);
    let raw = if ctx.directed {
        let g = graph_from_bits(ctx.k, bits);
        census_directed_raw(&g, ctx)?
    } else {
        let s = skeleton_from_bits(ctx.k, bits);
        census_undirected_raw(&s, ctx)?
    };
    Ok(raw.get(class))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::enumerate_classes;
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
    fn enumeration_counts() {
        let c5 = cycle_skeleton(5);
        let mut k3 = 0;
        enumerate_connected_induced(&c5, 3, 1000, |_| {
            k3 += 1;
            Ok(())
        })
        .unwrap();
        assert_eq!(k3, 5);

        let p4 = UndirectedSkeleton::from_edges(4, vec![(0, 1), (1, 2), (2, 3)]);
        let total = enumerate_connected_induced(&p4, 4, 1000, |_| Ok(())).unwrap();
        assert_eq!(total, 1);

        let mut edges = Vec::new();
        for i in 0..5u32 {
            for j in (i + 1)..5u32 {
                edges.push((i, j));
            }
        }
        let k5 = UndirectedSkeleton::from_edges(5, edges);
        let total = enumerate_connected_induced(&k5, 5, 1000, |_| Ok(())).unwrap();
        assert_eq!(total, 1);
    }

    #[test]
    fn budget_is_enforced() {
        let c5 = cycle_skeleton(5);
        let err = enumerate_connected_induced(&c5, 3, 2, |_| Ok(())).unwrap_err();
        assert_eq!(err, CensusError::BudgetExceeded { budget: 2 });
    }

    #[test]
    fn oracle_on_bidirected_triangle() {
        let classes = enumerate_classes(3, true);
        let (g, _) = DirectedGraph::from_pairs(
            labels(3),
            [(0, 1), (1, 0), (1, 2), (2, 1), (0, 2), (2, 0)],
        );
        let report = oracle_directed(&g, 3, &classes, 1000).unwrap();
        assert_eq!(report.total, 1);
        assert_eq!(report.hist.total(), 1);
    }

    #[test]
    fn audit_matches_divisors_for_k4_undirected() {
        let ctx = Context::new(4, false);
        for class in 0..ctx.classes.len() as u16 {
            assert_eq!(
                audit_divisor(&ctx, class).unwrap(),
                ctx.classes.divisor(class) as u64,
                "class {class}"
            );
        }
    }
}
