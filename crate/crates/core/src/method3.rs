//! A closed-form chain on residues 1 and 2 mod 5.
//!
//! For `k >= 0`:
//!
//! ```text
//! A_{4k+1} = {-7,0,5,8,15} ∪ (5·[-k-5, k+6] + {1,2}) \ {-9,1,2,6,7,17}
//! A_{4k+2} = A_{4k+1} ∪ {5k+36}
//! A_{4k+3} = A_{4k+1} ∪ {-5k-28, 5k+36}
//! A_{4k+4} = A_{4k+3} ∪ {5k+37}
//! ```
//!
//! At odd indices `B = A \ {5}` is symmetric about 8 and misses the sum 10,
//! so `|A+A| = |A-A| + 1`. Each even step adds 4 sums and 6 differences.

use crate::chain::{Chain, MethodTag, ValidationReport, Witness};
use crate::error::{Error, Result};
use crate::intset::IntSet;

const SEED: [i64; 5] = [-7, 0, 5, 8, 15];
const EXCLUDED: [i64; 6] = [-9, 1, 2, 6, 7, 17];
/// Keeps `5k + 37` far inside the safe bound.
const MAX_K: usize = 1 << 40;

/// A 1-based chain index split as `i = 4k + phase`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Method3Index(usize);

impl Method3Index {
    pub fn new(i: usize) -> Result<Self> {
        if i == 0 {
            return Err(Error::ZeroIndex);
        }
        if (i - 1) / 4 > MAX_K {
            return Err(Error::OverflowRisk(i as i128));
        }
        Ok(Method3Index(i))
    }

    pub fn get(self) -> usize {
        self.0
    }

    pub fn k(self) -> i64 {
        ((self.0 - 1) / 4) as i64
    }

    /// 1..=4; phases 1 and 3 are MSTD, 2 and 4 MDTS.
    pub fn phase(self) -> u8 {
        ((self.0 - 1) % 4) as u8 + 1
    }
}

pub fn set_m3(index: Method3Index) -> IntSet {
    let k = index.k();
    let progression = (-k - 5..=k + 6).flat_map(|l| [5 * l + 1, 5 * l + 2]);
    let mut values: Vec<i64> = SEED
        .iter()
        .copied()
        .chain(progression.filter(|v| !EXCLUDED.contains(v)))
        .collect();
    let phase = index.phase();
    if phase >= 2 {
        values.push(5 * k + 36);
    }
    if phase >= 3 {
        values.push(-5 * k - 28);
    }
    if phase == 4 {
        values.push(5 * k + 37);
    }
    IntSet::new(values).expect("k is bounded by MAX_K")
}

pub fn generate_chain_m3(steps: usize) -> Result<Chain> {
    if steps == 0 {
        return Err(Error::EmptyChain);
    }
    let sets = (1..=steps)
        .map(|i| Method3Index::new(i).map(set_m3))
        .collect::<Result<Vec<_>>>()?;
    Chain::new(MethodTag::Method3, sets)
}

/// `(|S(A_i) \ S(A_{i-1})|, |D(A_i) \ D(A_{i-1})|)` for the appending steps
/// (phases 2 and 4).
pub fn delta_counts(index: Method3Index) -> Result<(usize, usize)> {
    let phase = index.phase();
    if phase != 2 && phase != 4 {
        return Err(Error::PhaseUnsupported(phase));
    }
    let prev = set_m3(Method3Index(index.0 - 1));
    let cur = set_m3(index);
    Ok((
        cur.sumset().difference(&prev.sumset()).len(),
        cur.diffset().difference(&prev.diffset()).len(),
    ))
}

pub const CHECK_GAP: &str = "sum-diff-gap";
pub const CHECK_DELTAS: &str = "delta-counts";
pub const CHECK_B_SYMMETRY: &str = "b-symmetry";
pub const CHECK_TEN: &str = "ten-only-via-5";

/// Per-index identities of a Method 3 chain: gap of ±1 with the parity's
/// sign, (4, 6) new sums/differences at phases 2 and 4, and at phases 1 and 3
/// `8 - B = B`, `10 ∉ B+B`, `10 ∈ A+A` where `B = A \ {5}`.
pub fn verify_identities(chain: &Chain) -> ValidationReport {
    let mut report = ValidationReport::default();
    for (i, set) in chain.sets().iter().enumerate() {
        let index = i + 1;
        let p = chain.profile(index);
        let want = if index % 2 == 1 { 1 } else { -1 };
        if p.gap() != want {
            report.fail(index, CHECK_GAP, Witness::Counts(p.sum_card, p.diff_card));
        }
        let idx = Method3Index(index);
        match idx.phase() {
            2 | 4 => {
                let prev = &chain.sets()[i - 1];
                let ns = set.sumset().difference(&prev.sumset()).len();
                let nd = set.diffset().difference(&prev.diffset()).len();
                if (ns, nd) != (4, 6) {
                    report.fail(index, CHECK_DELTAS, Witness::Counts(ns, nd));
                }
            }
            _ => {
                let b = set.without(5);
                if let Some(w) = b.iter().find(|&v| !b.contains(8 - v)) {
                    report.fail(index, CHECK_B_SYMMETRY, Witness::Pair(w, 8 - w));
                }
                if b.sumset().contains(10) || !set.sumset().contains(10) {
                    report.fail(index, CHECK_TEN, Witness::Element(10));
                }
            }
        }
    }
    report
}
