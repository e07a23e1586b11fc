//! Modulus-copy chains.
//!
//! Given an MSTD base `A_1` with `min A_1 = 0` and a modulus `n > max A_1`,
//! the chain is
//!
//! ```text
//! A_{2l}   = A_{2l-1} ∪ {l·n}
//! A_{2l+1} = A_{2l-1} ∪ (A_1 + l·n)
//! ```
//!
//! It alternates provided the sumset and difference set of `A_1` occupy the
//! same number of residues mod `n`, and `2y - x - 1 > |A_1+A_1| - |A_1-A_1|`
//! where `x = #{a : n+a ∉ A_1+A_1}` and `y = #{b : n-b ∉ A_1-A_1}`.

use crate::chain::{Chain, MethodTag, ValidationReport, Witness};
use crate::error::{Error, Result};
use crate::intset::IntSet;
use crate::profile::SetClass;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Method1Params {
    pub base: IntSet,
    pub n: i64,
    pub x: usize,
    pub y: usize,
    pub sum_card: usize,
    pub diff_card: usize,
    pub sum_residues: usize,
    pub diff_residues: usize,
    pub cond1: bool,
    pub cond2: bool,
}

impl Method1Params {
    pub fn is_valid(&self) -> bool {
        self.cond1 && self.cond2
    }

    /// `|A_1+A_1| - |A_1-A_1|`, preserved at every odd index.
    pub fn gap(&self) -> i64 {
        self.sum_card as i64 - self.diff_card as i64
    }
}

fn check_base(a: &IntSet) -> Result<()> {
    let min = a.min().ok_or(Error::MissingZero)?;
    if !a.contains(0) {
        return Err(Error::MissingZero);
    }
    if min < 0 {
        return Err(Error::NegativeBase(min));
    }
    let (sums, diffs) = (a.sumset_len(), a.diffset_len());
    if sums <= diffs {
        return Err(Error::NotMstd { sums, diffs });
    }
    Ok(())
}

pub fn analyze_modulus(a: &IntSet, n: i64) -> Result<Method1Params> {
    check_base(a)?;
    let max = a.max().unwrap();
    if n <= max {
        return Err(Error::ModulusTooSmall { n, max });
    }
    Ok(analyze_unchecked(a, &a.sumset(), &a.diffset(), n))
}

fn analyze_unchecked(a: &IntSet, sums: &IntSet, diffs: &IntSet, n: i64) -> Method1Params {
    let x = a.iter().filter(|&v| !sums.contains(n + v)).count();
    let y = a.iter().filter(|&v| !diffs.contains(n - v)).count();
    let sum_residues = sums.residue_count(n).expect("n > max A >= 0");
    let diff_residues = diffs.residue_count(n).expect("n > max A >= 0");
    let (sum_card, diff_card) = (sums.len(), diffs.len());
    let cond2 = 2 * y as i64 - x as i64 - 1 > sum_card as i64 - diff_card as i64;
    Method1Params {
        base: a.clone(),
        n,
        x,
        y,
        sum_card,
        diff_card,
        sum_residues,
        diff_residues,
        cond1: sum_residues == diff_residues,
        cond2,
    }
}

/// All valid moduli in `(max A, 2·max A]`, ascending. Beyond `2·max A` every
/// sum and difference has its own residue, so condition 1 cannot hold.
pub fn search_moduli(a: &IntSet) -> Result<Vec<i64>> {
    check_base(a)?;
    let max = a.max().unwrap();
    let (sums, diffs) = (a.sumset(), a.diffset());
    Ok((max + 1..=2 * max)
        .filter(|&n| analyze_unchecked(a, &sums, &diffs, n).is_valid())
        .collect())
}

/// Generates `A_1 .. A_steps`. `steps` counts sets, so an even value stops
/// after the `{l·n}` half of a round.
pub fn generate_chain_m1(a: &IntSet, n: i64, steps: usize) -> Result<Chain> {
    let params = analyze_modulus(a, n)?;
    if !params.is_valid() {
        return Err(Error::ConditionsFail {
            n,
            cond1: params.cond1,
            cond2: params.cond2,
        });
    }
    if steps == 0 {
        return Err(Error::EmptyChain);
    }
    let mut sets = Vec::with_capacity(steps);
    let mut last_odd = a.clone();
    sets.push(a.clone());
    let mut l: i64 = 1;
    while sets.len() < steps {
        let shift = l
            .checked_mul(n)
            .ok_or(Error::OverflowRisk(l as i128 * n as i128))?;
        sets.push(last_odd.with(&[shift])?);
        if sets.len() < steps {
            last_odd = last_odd.union(&a.shift(shift)?);
            sets.push(last_odd.clone());
        }
        l += 1;
    }
    Ok(Chain::new(MethodTag::Method1, sets)?.with_modulus(n))
}

pub const CHECK_EVEN_SUMS: &str = "even-sum-increment";
pub const CHECK_EVEN_DIFFS: &str = "even-diff-increment";
pub const CHECK_ODD_GAP: &str = "odd-gap";
pub const CHECK_ODD_GROWTH: &str = "odd-growth";

/// Checks the counting identities of a generated chain:
/// `|A_{2l}+A_{2l}| = |A_{2l-1}+A_{2l-1}| + x + 1`,
/// `|A_{2l}-A_{2l}| = |A_{2l-1}-A_{2l-1}| + 2y`,
/// the odd-index gap equals the base gap, and consecutive odd sets grow by
/// exactly `|A_1|` elements and `n` in diameter.
pub fn verify_identities(params: &Method1Params, chain: &Chain) -> ValidationReport {
    let mut report = ValidationReport::default();
    let ps = chain.profiles();
    for (i, p) in ps.iter().enumerate() {
        let index = i + 1;
        if index % 2 == 0 {
            let prev = &ps[i - 1];
            let want_sums = prev.sum_card + params.x + 1;
            if p.sum_card != want_sums {
                report.fail(
                    index,
                    CHECK_EVEN_SUMS,
                    Witness::Counts(p.sum_card, want_sums),
                );
            }
            let want_diffs = prev.diff_card + 2 * params.y;
            if p.diff_card != want_diffs {
                report.fail(
                    index,
                    CHECK_EVEN_DIFFS,
                    Witness::Counts(p.diff_card, want_diffs),
                );
            }
        } else {
            if p.gap() != params.gap() || p.class() != SetClass::Mstd {
                report.fail(
                    index,
                    CHECK_ODD_GAP,
                    Witness::Counts(p.sum_card, p.diff_card),
                );
            }
            if index >= 3 {
                let prev = &ps[i - 2];
                let card_ok = p.card == prev.card + params.base.len();
                let diam_ok = p.diameter == prev.diameter + params.n as u64;
                if !(card_ok && diam_ok) {
                    report.fail(
                        index,
                        CHECK_ODD_GROWTH,
                        Witness::Counts(p.card, p.diameter as usize),
                    );
                }
            }
        }
    }
    report
}
