//! Alternating chains `A_1 ⊂ A_2 ⊂ ...` and method-agnostic checks on them.
//!
//! Chain indices are 1-based throughout: `sets()[0]` is `A_1`.

use std::fmt;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::intset::IntSet;
use crate::profile::{profile, Density, SetClass, SumDiffProfile};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MethodTag {
    Method1,
    Method2,
    Method3,
    External,
}

impl MethodTag {
    pub fn as_str(self) -> &'static str {
        match self {
            MethodTag::Method1 => "Method1",
            MethodTag::Method2 => "Method2",
            MethodTag::Method3 => "Method3",
            MethodTag::External => "External",
        }
    }
}

impl fmt::Display for MethodTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for MethodTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Method1" | "1" => Ok(MethodTag::Method1),
            "Method2" | "2" => Ok(MethodTag::Method2),
            "Method3" | "3" => Ok(MethodTag::Method3),
            "External" => Ok(MethodTag::External),
            _ => Err(Error::Parse(format!("unknown method tag {s:?}"))),
        }
    }
}

/// An indexed sequence of sets with their profiles and classes.
///
/// Construction only requires every member to be nonempty; inclusion and
/// alternation are checked by [`validate_chain`], so corrupted chains can be
/// represented and reported on.
#[derive(Debug, Clone, PartialEq)]
pub struct Chain {
    method: MethodTag,
    modulus: Option<i64>,
    sets: Vec<IntSet>,
    profiles: Vec<SumDiffProfile>,
}

impl Chain {
    pub fn new(method: MethodTag, sets: Vec<IntSet>) -> Result<Self> {
        if sets.is_empty() {
            return Err(Error::EmptyChain);
        }
        let profiles = sets
            .iter()
            .enumerate()
            .map(|(i, s)| profile(s).map_err(|_| Error::EmptyChainMember(i + 1)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Chain {
            method,
            modulus: None,
            sets,
            profiles,
        })
    }

    /// Records the Method 1 modulus `n` for reporting and file headers.
    pub fn with_modulus(mut self, n: i64) -> Self {
        self.modulus = Some(n);
        self
    }

    pub fn method(&self) -> MethodTag {
        self.method
    }

    pub fn modulus(&self) -> Option<i64> {
        self.modulus
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn sets(&self) -> &[IntSet] {
        &self.sets
    }

    pub fn profiles(&self) -> &[SumDiffProfile] {
        &self.profiles
    }

    pub fn classes(&self) -> Vec<SetClass> {
        self.profiles.iter().map(SumDiffProfile::class).collect()
    }

    /// `A_index`, 1-based.
    pub fn set(&self, index: usize) -> &IntSet {
        &self.sets[index - 1]
    }

    pub fn profile(&self, index: usize) -> &SumDiffProfile {
        &self.profiles[index - 1]
    }

    /// Class expected at a 1-based index: MSTD at odd, MDTS at even.
    pub fn expected_class(index: usize) -> SetClass {
        if index % 2 == 1 {
            SetClass::Mstd
        } else {
            SetClass::Mdts
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Witness {
    None,
    Element(i64),
    Pair(i64, i64),
    Counts(usize, usize),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::None => f.write_str("-"),
            Witness::Element(v) => write!(f, "{v}"),
            Witness::Pair(a, b) => write!(f, "({a}, {b})"),
            Witness::Counts(a, b) => write!(f, "{a} vs {b}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub index: usize,
    pub check: &'static str,
    pub witness: Witness,
}

/// Verdict of a verifier: `ok()` holds iff `failures` is empty. `notes`
/// carries derivations and remarks that are not failures.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub failures: Vec<Failure>,
    pub notes: Vec<String>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn fail(&mut self, index: usize, check: &'static str, witness: Witness) {
        self.failures.push(Failure {
            index,
            check,
            witness,
        });
    }

    pub fn merge(&mut self, other: ValidationReport) {
        self.failures.extend(other.failures);
        self.notes.extend(other.notes);
    }

    pub fn has_failure(&self, check: &str) -> bool {
        self.failures.iter().any(|f| f.check == check)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ok = {}", self.ok())?;
        for fl in &self.failures {
            writeln!(
                f,
                "FAIL A_{} {}: witness {}",
                fl.index, fl.check, fl.witness
            )?;
        }
        for note in &self.notes {
            writeln!(f, "note: {note}")?;
        }
        Ok(())
    }
}

pub const CHECK_INCLUSION: &str = "strict-inclusion";
pub const CHECK_NO_FILL: &str = "no-filling-in";
pub const CHECK_ALTERNATION: &str = "alternation";

/// Checks strict inclusion, the no-filling-in constraint and MSTD/MDTS
/// alternation for every consecutive pair.
///
/// Hulls only grow along a nested chain, so `A_{j+1} ∩ hull(A_j) = A_j` for
/// every consecutive pair implies `(A_n \ A_k) ∩ hull(A_k) = ∅` for all
/// `k < n`.
pub fn validate_chain(chain: &Chain) -> ValidationReport {
    let mut report = ValidationReport::default();
    let sets = chain.sets();
    for (i, p) in chain.profiles().iter().enumerate() {
        let index = i + 1;
        let expected = Chain::expected_class(index);
        if p.class() != expected {
            report.fail(
                index,
                CHECK_ALTERNATION,
                Witness::Counts(p.sum_card, p.diff_card),
            );
        }
    }
    for (j, pair) in sets.windows(2).enumerate() {
        let (prev, next) = (&pair[0], &pair[1]);
        let index = j + 2;
        if let Some(missing) = prev.iter().find(|&v| !next.contains(v)) {
            report.fail(index, CHECK_INCLUSION, Witness::Element(missing));
        } else if prev.len() == next.len() {
            report.fail(index, CHECK_INCLUSION, Witness::None);
        }
        let (lo, hi) = (prev.min().unwrap(), prev.max().unwrap());
        if let Some(filled) = next.restrict(lo, hi).iter().find(|&v| !prev.contains(v)) {
            report.fail(index, CHECK_NO_FILL, Witness::Element(filled));
        }
    }
    if sets.len() > 1 {
        report.notes.push(
            "derivation: no-filling-in checked on consecutive pairs; hull(A_k) ⊆ hull(A_{k+1}) \
             extends it to every pair k < n"
                .to_string(),
        );
    }
    report
}

/// Direct check of the no-filling-in condition for one pair `k < n`,
/// returning the first offending element.
pub fn filled_between(chain: &Chain, k: usize, n: usize) -> Option<i64> {
    let (ak, an) = (chain.set(k), chain.set(n));
    let (lo, hi) = (ak.min()?, ak.max()?);
    an.restrict(lo, hi).iter().find(|&v| !ak.contains(v))
}

/// One table row; ratios are `None` for the first row (rendered `N/A`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GrowthRow {
    pub index: usize,
    pub sum_card: usize,
    pub diff_card: usize,
    pub card: usize,
    pub diameter: u64,
    pub card_ratio: Option<Ratio<u64>>,
    pub diam_ratio: Option<Ratio<u64>>,
    pub density: Density,
}

pub fn growth_table(chain: &Chain) -> Vec<GrowthRow> {
    let ps = chain.profiles();
    ps.iter()
        .enumerate()
        .map(|(i, p)| {
            let prev = i.checked_sub(1).map(|j| &ps[j]);
            GrowthRow {
                index: i + 1,
                sum_card: p.sum_card,
                diff_card: p.diff_card,
                card: p.card,
                diameter: p.diameter,
                card_ratio: prev.map(|q| Ratio::new(p.card as u64, q.card as u64)),
                diam_ratio: prev
                    .filter(|q| q.diameter > 0)
                    .map(|q| Ratio::new(p.diameter, q.diameter)),
                density: p.density,
            }
        })
        .collect()
}

/// Mean cardinality and diameter growth between consecutive MSTD (odd-index)
/// sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GrowthRates {
    pub card_rate: Ratio<i64>,
    pub diam_rate: Ratio<i64>,
}

pub fn growth_rates(chain: &Chain) -> Result<GrowthRates> {
    let odd: Vec<&SumDiffProfile> = chain.profiles().iter().step_by(2).collect();
    if odd.len() < 3 {
        return Err(Error::TooFewMstdSets(odd.len()));
    }
    let steps = (odd.len() - 1) as i64;
    let first = odd[0];
    let last = odd[odd.len() - 1];
    Ok(GrowthRates {
        card_rate: Ratio::new(last.card as i64 - first.card as i64, steps),
        diam_rate: Ratio::new(last.diameter as i64 - first.diameter as i64, steps),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LimitingDensity {
    /// `card_rate / diam_rate`, absent when the chain is too short to
    /// measure growth.
    pub analytic: Option<Ratio<i64>>,
    /// Density of `A_probe`.
    pub numeric: Ratio<i64>,
}

pub fn limiting_density(chain: &Chain, probe_index: usize) -> Result<LimitingDensity> {
    let bad = |reason| Error::BadProbe {
        index: probe_index,
        len: chain.len(),
        reason,
    };
    if probe_index == 0 || probe_index > chain.len() {
        return Err(bad("out of range"));
    }
    if probe_index.is_multiple_of(2) {
        return Err(bad("probe must be an odd (MSTD) index"));
    }
    let p = chain.profile(probe_index);
    if p.diameter == 0 {
        return Err(bad("probe set has diameter 0"));
    }
    let numeric = Ratio::new(p.card as i64, p.diameter as i64);
    let analytic = growth_rates(chain)
        .ok()
        .filter(|g| *g.diam_rate.numer() != 0)
        .map(|g| g.card_rate / g.diam_rate);
    Ok(LimitingDensity { analytic, numeric })
}
