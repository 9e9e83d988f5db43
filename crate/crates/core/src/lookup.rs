//! Generated pattern lookup tables.
//!
//! A census anchors each induced k-subgraph at a core of `j = k - 2`
//! vertices and classifies the two remaining vertices by descriptors: for
//! every core vertex `p`, a digit encoding the relation of the outside
//! vertex to `p` (bidirected / from p / to p / none for directed graphs,
//! adjacent / none for undirected ones). The all-none descriptor is excluded
//! since outside vertices live in the core's adjacency, which leaves
//! 3 / 15 / 63 directed descriptor sets (1 / 3 / 7 undirected) for
//! j = 1 / 2 / 3.
//!
//! The lookup maps (anchor shape, descriptor of v1, descriptor of v2,
//! v1-v2 edge variant) to the class ID of the concrete k-vertex digraph that
//! this cell describes. Tables are generated by building each cell's graph
//! and canonicalizing it, never transcribed by hand, and they are built once
//! per run and shared read-only afterwards.

use crate::canon::{edge_bit, Canonicalizer, ClassTable};
use crate::hist::MotifHistogram;
use crate::{CensusError, Result};
use alloc::vec;
use alloc::vec::Vec;

/// Edge variant between the two outside vertices.
pub const VAR_NONE: usize = 0;
pub const VAR_FWD: usize = 1; // v1 -> v2
pub const VAR_BWD: usize = 2; // v2 -> v1
pub const VAR_BI: usize = 3;

#[derive(Debug, Clone)]
pub struct PatternLookup {
    pub k: usize,
    pub directed: bool,
    /// Number of descriptor sets per outside vertex.
    pub set_count: usize,
    /// Anchor shapes: 1 for k=3 (a vertex), 2 for directed k=4 (bidirected /
    /// directed base edge), 1 for undirected k=4, one per size-3 class for
    /// k=5.
    pub anchor_count: usize,
    table: Vec<u16>,
}

impl PatternLookup {
    #[inline]
    pub fn class(&self, anchor: usize, ti: usize, tj: usize, variant: usize) -> u16 {
        self.table[((anchor * self.set_count + ti) * self.set_count + tj) * 4 + variant]
    }
}

/// Labeled anchor graphs, packed at order `j`, in anchor-index order.
fn anchor_shapes(k: usize, directed: bool, deltas: Option<&ClassTable>) -> Vec<u32> {
    let j = k - 2;
    match (j, directed) {
        (1, _) => vec![0],
        (2, true) => vec![
            edge_bit(2, 0, 1) | edge_bit(2, 1, 0), // bidirected base
            edge_bit(2, 0, 1),                     // directed base
        ],
        (2, false) => vec![edge_bit(2, 0, 1) | edge_bit(2, 1, 0)],
        (3, _) => {
            let d = deltas.expect("size-5 lookup needs the size-3 class table");
            (0..d.len() as u16).map(|c| d.code_bits(c)).collect()
        }
        _ => unreachable!(),
    }
}

/// Re-packs order-`j` bits into order-`k` packing (same vertex indices).
fn embed(bits: u32, j: usize, k: usize) -> u32 {
    let mut out = 0;
    for i in 0..j {
        for l in 0..j {
            if i != l && bits >> (i * j + l) & 1 == 1 {
                out |= edge_bit(k, i, l);
            }
        }
    }
    out
}

/// Edges attaching outside vertex `x` to the core per descriptor `desc`.
/// Digits are read most-significant-first: digit for core vertex 0 first.
fn descriptor_edges(k: usize, j: usize, base: u32, desc: u32, x: usize) -> u32 {
    let mut bits = 0;
    let mut d = desc;
    for a in (0..j).rev() {
        let digit = d % base;
        d /= base;
        if base == 4 {
            match digit {
                0 => bits |= edge_bit(k, a, x) | edge_bit(k, x, a), // bidirected
                1 => bits |= edge_bit(k, a, x),                     // core -> x
                2 => bits |= edge_bit(k, x, a),                     // x -> core
                _ => {}
            }
        } else if digit == 0 {
            bits |= edge_bit(k, a, x) | edge_bit(k, x, a);
        }
    }
    bits
}

/// Builds the lookup for `classes` (the target (k, directedness) table).
/// For k = 5, `deltas` must be the size-3 table of the same directedness.
pub fn build_lookup(classes: &ClassTable, deltas: Option<&ClassTable>) -> PatternLookup {
    let k = classes.k as usize;
    let directed = classes.directed;
    let j = k - 2;
    let base: u32 = if directed { 4 } else { 2 };
    let set_count = (base.pow(j as u32) - 1) as usize;
    let anchors = anchor_shapes(k, directed, deltas);
    let v1 = j;
    let v2 = j + 1;

    let mut canon = Canonicalizer::new(k);
    let mut table = vec![0u16; anchors.len() * set_count * set_count * 4];
    let mut idx = 0;
    for &anchor_bits in &anchors {
        let core = embed(anchor_bits, j, k);
        for ti in 0..set_count as u32 {
            let e1 = descriptor_edges(k, j, base, ti, v1);
            for tj in 0..set_count as u32 {
                let e2 = descriptor_edges(k, j, base, tj, v2);
                let body = core | e1 | e2;
                for variant in 0..4usize {
                    let ve = if directed {
                        match variant {
                            VAR_NONE => 0,
                            VAR_FWD => edge_bit(k, v1, v2),
                            VAR_BWD => edge_bit(k, v2, v1),
                            _ => edge_bit(k, v1, v2) | edge_bit(k, v2, v1),
                        }
                    } else if variant == VAR_NONE {
                        0
                    } else {
                        edge_bit(k, v1, v2) | edge_bit(k, v2, v1)
                    };
                    let code = canon.canon(body | ve);
                    table[idx] = classes
                        .class_of(code)
                        .expect("generated pattern must be a connected class");
                    idx += 1;
                }
            }
        }
    }
    PatternLookup {
        k,
        directed,
        set_count,
        anchor_count: anchors.len(),
        table,
    }
}

/// Applies the closed-form sums for one anchor: every unordered pair of
/// outside vertices contributes to exactly one cell, split by the edge
/// variant between them.
///
/// `sizes[t]` is the descriptor-set size, `m` counts directed-only edges
/// (row-major `s*s`), `mb` counts bidirected pairs stored under the
/// normalized key `(min, max)`. `active` lists the nonempty sets in
/// ascending order.
pub fn accumulate_anchor(
    hist: &mut MotifHistogram,
    lk: &PatternLookup,
    anchor: usize,
    sizes: &[u64],
    m: &[u64],
    mb: &[u64],
    active: &[u16],
) -> Result<()> {
    let s = lk.set_count;
    for (pos, &ti) in active.iter().enumerate() {
        let ti = ti as usize;
        let n_i = sizes[ti];
        // diagonal cell
        let inside_dir = m[ti * s + ti];
        let inside_bi = mb[ti * s + ti];
        let pairs = n_i.checked_mul(n_i - 1).ok_or(CensusError::CounterOverflow)? / 2;
        let none = pairs
            .checked_sub(inside_dir + inside_bi)
            .ok_or(CensusError::Inconsistency("negative diagonal frequency"))?;
        hist.add(lk.class(anchor, ti, ti, VAR_NONE), none)?;
        hist.add(lk.class(anchor, ti, ti, VAR_FWD), inside_dir)?;
        hist.add(lk.class(anchor, ti, ti, VAR_BI), inside_bi)?;
        // off-diagonal cells
        for &tj in &active[pos + 1..] {
            let tj = tj as usize;
            let n_j = sizes[tj];
            let fwd = m[ti * s + tj];
            let bwd = m[tj * s + ti];
            let bi = mb[ti * s + tj];
            let pairs = n_i
                .checked_mul(n_j)
                .ok_or(CensusError::CounterOverflow)?;
            let none = pairs
                .checked_sub(fwd + bwd + bi)
                .ok_or(CensusError::Inconsistency("negative pair frequency"))?;
            hist.add(lk.class(anchor, ti, tj, VAR_NONE), none)?;
            hist.add(lk.class(anchor, ti, tj, VAR_FWD), fwd)?;
            hist.add(lk.class(anchor, ti, tj, VAR_BWD), bwd)?;
            hist.add(lk.class(anchor, ti, tj, VAR_BI), bi)?;
        }
    }
    Ok(())
}
