//! Sum/difference classification and per-set statistics.

use std::fmt;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::intset::IntSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SetClass {
    /// More sums than differences.
    Mstd,
    /// More differences than sums.
    Mdts,
    Balanced,
}

impl SetClass {
    pub fn from_counts(sum_card: usize, diff_card: usize) -> Self {
        match sum_card.cmp(&diff_card) {
            std::cmp::Ordering::Greater => SetClass::Mstd,
            std::cmp::Ordering::Less => SetClass::Mdts,
            std::cmp::Ordering::Equal => SetClass::Balanced,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            SetClass::Mstd => "MSTD",
            SetClass::Mdts => "MDTS",
            SetClass::Balanced => "Balanced",
        }
    }
}

impl fmt::Display for SetClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

pub fn classify(a: &IntSet) -> SetClass {
    SetClass::from_counts(a.sumset_len(), a.diffset_len())
}

/// `|A| / diameter`, kept exact. Singletons have no density.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Density {
    Exact(Ratio<u64>),
    DiameterZero,
}

impl Density {
    pub fn of(card: usize, diameter: u64) -> Self {
        if diameter == 0 {
            Density::DiameterZero
        } else {
            Density::Exact(Ratio::new(card as u64, diameter))
        }
    }

    pub fn to_f64(self) -> Option<f64> {
        match self {
            Density::Exact(r) => Some(*r.numer() as f64 / *r.denom() as f64),
            Density::DiameterZero => None,
        }
    }
}

impl fmt::Display for Density {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Density::Exact(r) => f.write_str(&round3(*r)),
            Density::DiameterZero => f.write_str("N/A"),
        }
    }
}

/// Renders a nonnegative rational rounded half-up to three decimals.
pub fn round3(r: Ratio<u64>) -> String {
    let (n, d) = (*r.numer() as u128, *r.denom() as u128);
    let thousandths = (2 * 1000 * n + d) / (2 * d);
    format!("{}.{:03}", thousandths / 1000, thousandths % 1000)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SumDiffProfile {
    pub card: usize,
    pub sum_card: usize,
    pub diff_card: usize,
    pub diameter: u64,
    pub density: Density,
}

impl SumDiffProfile {
    pub fn class(&self) -> SetClass {
        SetClass::from_counts(self.sum_card, self.diff_card)
    }

    /// `|A+A| - |A-A|`.
    pub fn gap(&self) -> i64 {
        self.sum_card as i64 - self.diff_card as i64
    }
}

pub fn profile(a: &IntSet) -> Result<SumDiffProfile> {
    let diameter = a.diameter().ok_or(Error::EmptyProfile)?;
    Ok(SumDiffProfile {
        card: a.len(),
        sum_card: a.sumset_len(),
        diff_card: a.diffset_len(),
        diameter,
        density: Density::of(a.len(), diameter),
    })
}
