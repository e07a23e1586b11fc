//! Nathanson's MSTD construction and the punctured-interval lemma.
//!
//! For `m >= 4`, `1 <= d <= m - 1`, `d != m/2` and `k >= 3` (`k >= 4` when
//! `d > m/2`):
//!
//! ```text
//! B  = [0, m-1] \ {d}
//! L  = {m-d, 2m-d, ..., km-d}
//! a* = (k+1)m - 2d
//! A* = B ∪ L ∪ (a* - B)
//! A  = A* ∪ {m}
//! ```
//!
//! `A*` is symmetric about `a*` and `A` is MSTD, with `2m` the one sum that
//! `m` contributes.

use crate::error::{Error, Result};
use crate::intset::IntSet;
use crate::profile::{classify, SetClass};

/// Upper limit on `m` and `k`, far beyond anything tabulated, keeping every
/// derived element comfortably inside the safe bound.
const MAX_PARAM: i64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NathansonParams {
    pub m: i64,
    pub d: i64,
    pub k: i64,
    pub b: IntSet,
    pub l: IntSet,
    pub a_star: i64,
    pub star: IntSet,
    pub a: IntSet,
}

/// Which of the two admissible values of `d` a Method 2 base uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quarter {
    /// `d = m/4`
    One,
    /// `d = 3m/4`
    Three,
}

fn validate(m: i64, d: i64, k: i64) -> Result<()> {
    if m < 4 {
        return Err(Error::BadParams(format!("m = {m} must be at least 4")));
    }
    if m > MAX_PARAM || k > MAX_PARAM {
        return Err(Error::BadParams(format!(
            "m and k must not exceed {MAX_PARAM}"
        )));
    }
    if !(1..m).contains(&d) {
        return Err(Error::BadParams(format!(
            "d = {d} must lie in [1, m-1] = [1, {}]",
            m - 1
        )));
    }
    if 2 * d == m {
        return Err(Error::BadParams(format!("d = {d} must differ from m/2")));
    }
    let min_k = if 2 * d < m { 3 } else { 4 };
    if k < min_k {
        let side = if min_k == 3 { "d < m/2" } else { "d > m/2" };
        return Err(Error::BadParams(format!(
            "k = {k} must be at least {min_k} when {side}"
        )));
    }
    Ok(())
}

pub fn build_base(m: i64, d: i64, k: i64) -> Result<NathansonParams> {
    validate(m, d, k)?;
    let b = IntSet::interval(0, m - 1)?.without(d);
    let l = IntSet::new((1..=k).map(|j| j * m - d))?;
    let a_star = (k + 1) * m - 2 * d;
    let star = b.union(&l).union(&b.reflect(a_star)?);
    let a = star.with(&[m])?;

    // Self-check: the construction guarantees both, so a failure is a bug here.
    let class = classify(&a);
    assert_eq!(
        class,
        SetClass::Mstd,
        "Nathanson set for (m={m}, d={d}, k={k}) is {class}"
    );
    assert!(
        a.sumset().contains(2 * m) && !star.sumset().contains(2 * m),
        "2m is not the distinguished sum for (m={m}, d={d}, k={k})"
    );

    Ok(NathansonParams {
        m,
        d,
        k,
        b,
        l,
        a_star,
        star,
        a,
    })
}

impl NathansonParams {
    /// Checks the extra Method 2 requirements `m ≡ 0 (mod 4)` and
    /// `d ∈ {m/4, 3m/4}`.
    pub fn method2_quarter(&self) -> Result<Quarter> {
        if self.m % 4 != 0 {
            return Err(Error::ConstraintViolation(format!(
                "m = {} is not divisible by 4 (m mod 4 = {})",
                self.m,
                self.m % 4
            )));
        }
        if self.d == self.m / 4 {
            Ok(Quarter::One)
        } else if self.d == 3 * self.m / 4 {
            Ok(Quarter::Three)
        } else {
            Err(Error::ConstraintViolation(format!(
                "d = {} is neither m/4 = {} nor 3m/4 = {}",
                self.d,
                self.m / 4,
                3 * self.m / 4
            )))
        }
    }
}

/// Every valid `(m, d, k)` with `m <= max_m` and `k <= max_k`.
pub fn valid_params(max_m: i64, max_k: i64) -> impl Iterator<Item = (i64, i64, i64)> {
    (4..=max_m)
        .flat_map(move |m| (1..m).flat_map(move |d| (3..=max_k).map(move |k| (m, d, k))))
        .filter(|&(m, d, k)| validate(m, d, k).is_ok())
}

/// For `B = [0, m-1] \ {r}` with `2 <= r <= m-3`: is `B + B = [0, 2m-2]` and
/// `B - B = [-(m-1), m-1]`?
pub fn check_interval_lemma(m: i64, r: i64) -> Result<bool> {
    if !(4..=MAX_PARAM).contains(&m) {
        return Err(Error::BadParams(format!(
            "m = {m} must lie in [4, {MAX_PARAM}]"
        )));
    }
    if !(2..=m - 3).contains(&r) {
        return Err(Error::BadParams(format!(
            "r = {r} must lie in [2, m-3] = [2, {}]",
            m - 3
        )));
    }
    let b = IntSet::interval(0, m - 1)?.without(r);
    Ok(b.sumset() == IntSet::interval(0, 2 * m - 2)?
        && b.diffset() == IntSet::interval(1 - m, m - 1)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conway_from_smallest_params() {
        let p = build_base(4, 1, 3).unwrap();
        assert_eq!(p.b.as_slice(), &[0, 2, 3]);
        assert_eq!(p.l.as_slice(), &[3, 7, 11]);
        assert_eq!(p.a_star, 14);
        assert_eq!(p.b.reflect(p.a_star).unwrap().as_slice(), &[11, 12, 14]);
        assert_eq!(p.star.as_slice(), &[0, 2, 3, 7, 11, 12, 14]);
        assert_eq!(p.a.as_slice(), &[0, 2, 3, 4, 7, 11, 12, 14]);
    }

    #[test]
    fn parameter_errors() {
        assert!(matches!(build_base(4, 2, 3), Err(Error::BadParams(s)) if s.contains("m/2")));
        assert!(matches!(build_base(8, 6, 3), Err(Error::BadParams(s)) if s.contains("d > m/2")));
        assert!(matches!(build_base(3, 1, 3), Err(Error::BadParams(_))));
        assert!(matches!(build_base(5, 0, 3), Err(Error::BadParams(_))));
        assert!(matches!(build_base(5, 5, 4), Err(Error::BadParams(_))));
        assert!(matches!(build_base(5, 1, 2), Err(Error::BadParams(_))));
        assert!(build_base(8, 6, 4).is_ok());
    }

    #[test]
    fn method2_quarter_constraint() {
        assert_eq!(
            build_base(4, 1, 3).unwrap().method2_quarter(),
            Ok(Quarter::One)
        );
        assert_eq!(
            build_base(8, 6, 4).unwrap().method2_quarter(),
            Ok(Quarter::Three)
        );
        let e = build_base(6, 1, 3).unwrap().method2_quarter().unwrap_err();
        assert!(matches!(e, Error::ConstraintViolation(s) if s.contains("mod 4")));
        let e = build_base(8, 1, 3).unwrap().method2_quarter().unwrap_err();
        assert!(matches!(e, Error::ConstraintViolation(s) if s.contains("d = 1")));
    }

    #[test]
    fn interval_lemma_examples() {
        assert_eq!(check_interval_lemma(5, 2), Ok(true));
        assert_eq!(check_interval_lemma(20, 10), Ok(true));
        assert!(matches!(
            check_interval_lemma(4, 2),
            Err(Error::BadParams(_))
        ));
        assert!(matches!(
            check_interval_lemma(10, 1),
            Err(Error::BadParams(_))
        ));
    }

    #[test]
    fn valid_params_respects_case_split() {
        let all: Vec<_> = valid_params(8, 4).collect();
        assert!(all.contains(&(4, 1, 3)));
        assert!(!all.contains(&(4, 2, 3)));
        assert!(!all.contains(&(8, 6, 3)));
        assert!(all.contains(&(8, 6, 4)));
    }
}
