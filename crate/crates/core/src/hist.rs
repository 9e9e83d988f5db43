//! Per-class occurrence histogram with checked arithmetic.

use crate::{CensusError, Result};
use alloc::vec;
use alloc::vec::Vec;

/// Occurrence count per isomorphism class, indexed by class ID.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MotifHistogram {
    counts: Vec<u64>,
}

impl MotifHistogram {
    pub fn new(class_count: usize) -> Self {
        MotifHistogram {
            counts: vec![0; class_count],
        }
    }

    pub fn class_count(&self) -> usize {
        self.counts.len()
    }

    pub fn get(&self, class: u16) -> u64 {
        self.counts[class as usize]
    }

    pub fn add(&mut self, class: u16, amount: u64) -> Result<()> {
        let slot = &mut self.counts[class as usize];
        *slot = slot
            .checked_add(amount)
            .ok_or(CensusError::CounterOverflow)?;
        Ok(())
    }

    /// Adds another histogram of the same shape; used to merge per-worker
    /// partial results (addition commutes, so worker scheduling cannot
    /// change the outcome).
    pub fn merge(&mut self, other: &MotifHistogram) -> Result<()> {
        assert_eq!(self.counts.len(), other.counts.len());
        for (slot, &v) in self.counts.iter_mut().zip(&other.counts) {
            *slot = slot.checked_add(v).ok_or(CensusError::CounterOverflow)?;
        }
        Ok(())
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn iter_nonzero(&self) -> impl Iterator<Item = (u16, u64)> + '_ {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, &c)| (i as u16, c))
    }

    /// Divides every class count by its correction divisor. Fails if a count
    /// is not an exact multiple, which would mean a counting bug.
    pub fn apply_divisors(&mut self, divisors: &[u32]) -> Result<()> {
        assert_eq!(self.counts.len(), divisors.len());
        for (slot, &d) in self.counts.iter_mut().zip(divisors) {
            let d = d as u64;
            if *slot % d != 0 {
                return Err(CensusError::Inconsistency(
                    "pre-correction count not divisible by class divisor",
                ));
            }
            *slot /= d;
        }
        Ok(())
    }
}
