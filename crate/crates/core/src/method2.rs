//! One-element-per-step chains built on a Nathanson base `A`.
//!
//! With `m ≡ 0 (mod 4)` and `d ∈ {m/4, 3m/4}`:
//!
//! ```text
//! A_1      = A ∪ {-d, (k+1)m - d}
//! A_{2r}   = A_{2r-1} ∪ {(k+r+1)m - d}          (MDTS)
//! A_{2r+1} = A_{2r-1} ∪ {-rm - d, (k+r+1)m - d} (MSTD)
//! ```
//!
//! Removing `m` from an odd-index set leaves a set symmetric about
//! `a* = (k+1)m - 2d`; `m` then contributes exactly the one new sum `2m`.
//! `A` itself is never emitted: for `d = m/4` the set `A ∪ {(k+1)m - d}` may
//! be balanced.

use crate::chain::{Chain, MethodTag, ValidationReport, Witness};
use crate::error::Result;
use crate::intset::IntSet;
use crate::nathanson::NathansonParams;
use crate::profile::SetClass;

/// `A ∪ {-d, (k+1)m - d}`.
pub fn build_a1_m2(params: &NathansonParams) -> Result<IntSet> {
    params.method2_quarter()?;
    let NathansonParams { m, d, k, .. } = *params;
    params.a.with(&[-d, (k + 1) * m - d])
}

/// Iterator over `A_1, A_2, ...`, each with its star set `A_n \ {m}`.
#[derive(Debug, Clone)]
pub struct Method2State {
    m: i64,
    d: i64,
    k: i64,
    /// Index of the set `current` holds, 0 before the first call to `next`.
    index: usize,
    current: IntSet,
}

impl Method2State {
    pub fn new(params: &NathansonParams) -> Result<Self> {
        let a1 = build_a1_m2(params)?;
        Ok(Method2State {
            m: params.m,
            d: params.d,
            k: params.k,
            index: 0,
            current: a1,
        })
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn current(&self) -> &IntSet {
        &self.current
    }

    pub fn star(&self) -> IntSet {
        self.current.without(self.m)
    }

    /// Element appended to produce `A_{index}` from `A_{index-1}` (`index >= 2`).
    pub fn appended_at(&self, index: usize) -> i64 {
        let r = (index / 2) as i64;
        if index.is_multiple_of(2) {
            (self.k + r + 1) * self.m - self.d
        } else {
            -(r * self.m) - self.d
        }
    }
}

impl Iterator for Method2State {
    type Item = IntSet;

    fn next(&mut self) -> Option<IntSet> {
        if self.index > 0 {
            let v = self.appended_at(self.index + 1);
            self.current = self.current.with(&[v]).ok()?;
        }
        self.index += 1;
        Some(self.current.clone())
    }
}

pub fn generate_chain_m2(params: &NathansonParams, steps: usize) -> Result<Chain> {
    let state = Method2State::new(params)?;
    Chain::new(MethodTag::Method2, state.take(steps).collect())
}

pub const CHECK_STAR_I: &str = "star-(i):m-A*⊆A*-A*";
pub const CHECK_STAR_II: &str = "star-(ii):m+A*⊆A*+A*";
pub const CHECK_STAR_III: &str = "star-(iii):|A+A|=|A*+A*|+1";
pub const CHECK_STAR_IV: &str = "star-(iv):|A-A|=|A*-A*|";
pub const CHECK_STAR_SYMMETRY: &str = "star-symmetry";
pub const CHECK_ODD_GAP: &str = "odd-gap";
pub const CHECK_EVEN_BOUND: &str = "even-mdts-bound";
pub const CHECK_CARD_STEP: &str = "card-step";

/// Checks, at every odd index with `A* = A \ {m}`: `m - A* ⊆ A* - A*`,
/// `m + A* ⊆ A* + A*`, `|A+A| = |A*+A*| + 1`, `|A-A| = |A*-A*|`, `a* - A* = A*`
/// and `|A+A| = |A-A| + 1`.
///
/// The report also carries a note wherever `|A_{2r+1}+A_{2r+1}| =
/// |A_{2r-1}+A_{2r-1}| + 1` does not hold, since the sums grow by
/// `2m` between odd indices rather than by one.
pub fn verify_star_identities(params: &NathansonParams, chain: &Chain) -> ValidationReport {
    let mut report = ValidationReport::default();
    let m = params.m;
    for (i, set) in chain.sets().iter().enumerate().step_by(2) {
        let index = i + 1;
        let star = set.without(m);
        let (star_sums, star_diffs) = (star.sumset(), star.diffset());
        if let Some(w) = star
            .iter()
            .map(|a| m - a)
            .find(|&v| !star_diffs.contains(v))
        {
            report.fail(index, CHECK_STAR_I, Witness::Element(w));
        }
        if let Some(w) = star.iter().map(|a| m + a).find(|&v| !star_sums.contains(v)) {
            report.fail(index, CHECK_STAR_II, Witness::Element(w));
        }
        let p = chain.profile(index);
        if p.sum_card != star_sums.len() + 1 {
            report.fail(
                index,
                CHECK_STAR_III,
                Witness::Counts(p.sum_card, star_sums.len()),
            );
        }
        if p.diff_card != star_diffs.len() {
            report.fail(
                index,
                CHECK_STAR_IV,
                Witness::Counts(p.diff_card, star_diffs.len()),
            );
        }
        if let Some(w) = star.iter().find(|&a| !star.contains(params.a_star - a)) {
            report.fail(
                index,
                CHECK_STAR_SYMMETRY,
                Witness::Pair(w, params.a_star - w),
            );
        }
        if p.sum_card != p.diff_card + 1 {
            report.fail(
                index,
                CHECK_ODD_GAP,
                Witness::Counts(p.sum_card, p.diff_card),
            );
        }
        if index >= 3 {
            let prev = chain.profile(index - 2).sum_card;
            if p.sum_card != prev + 1 {
                report.notes.push(format!(
                    "A_{index}: |A+A| = {} is not |A+A| + 1 = {} + 1 of the previous odd set; \
                     identity (iii) against A* is the one that holds",
                    p.sum_card, prev
                ));
            }
        }
    }
    report
}

/// Star identities plus: strict alternation, one new element per step, and
/// `|A_{2r}+A_{2r}| <= |A_{2r}-A_{2r}| - m + 3` at even indices.
pub fn verify_chain_identities(params: &NathansonParams, chain: &Chain) -> ValidationReport {
    let mut report = verify_star_identities(params, chain);
    for (i, p) in chain.profiles().iter().enumerate() {
        let index = i + 1;
        if index % 2 == 0 {
            let bound = p.diff_card as i64 - params.m + 3;
            if p.sum_card as i64 > bound || p.class() != SetClass::Mdts {
                report.fail(
                    index,
                    CHECK_EVEN_BOUND,
                    Witness::Counts(p.sum_card, p.diff_card),
                );
            }
        }
        if index >= 2 {
            let prev = chain.profile(index - 1).card;
            if p.card != prev + 1 {
                report.fail(index, CHECK_CARD_STEP, Witness::Counts(p.card, prev));
            }
        }
    }
    report
}
