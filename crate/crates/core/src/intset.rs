//! Finite sets of integers and their sum/difference arithmetic.
//!
//! An [`IntSet`] is stored as a strictly increasing `Vec<i64>`. Sumsets and
//! difference sets are computed by an offset-bitset shift-or kernel when the
//! set is dense enough for it to pay off, and by pairwise enumeration
//! otherwise. Both paths produce the same canonical sorted form.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// Largest admissible magnitude for user-supplied elements. Any `a + b` or
/// `a - b` of admissible elements fits in an `i64`.
pub const SAFE_BOUND: i64 = (1 << 62) - 1;

/// Bitset kernel is used while `diameter <= DENSE_FACTOR * |A|`.
const DENSE_FACTOR: u64 = 512;
/// Hard cap on bitset length (in bits) regardless of density.
const MAX_BITSET_BITS: u64 = 1 << 32;

/// A finite set of integers in canonical (sorted, deduplicated) form.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct IntSet {
    elems: Vec<i64>,
}

fn check_bound(v: i128) -> Result<i64> {
    if v.abs() > SAFE_BOUND as i128 {
        Err(Error::OverflowRisk(v))
    } else {
        Ok(v as i64)
    }
}

impl IntSet {
    /// Builds a set from arbitrary values, sorting and deduplicating them.
    pub fn new<I: IntoIterator<Item = i64>>(values: I) -> Result<Self> {
        let mut elems = values
            .into_iter()
            .map(|v| check_bound(v as i128))
            .collect::<Result<Vec<_>>>()?;
        elems.sort_unstable();
        elems.dedup();
        Ok(IntSet { elems })
    }

    pub fn empty() -> Self {
        IntSet::default()
    }

    /// The interval `[lo, hi]`, empty when `lo > hi`.
    pub fn interval(lo: i64, hi: i64) -> Result<Self> {
        check_bound(lo as i128)?;
        check_bound(hi as i128)?;
        Ok(IntSet {
            elems: (lo..=hi).collect(),
        })
    }

    /// Caller guarantees `elems` is strictly increasing.
    pub(crate) fn from_sorted_unchecked(elems: Vec<i64>) -> Self {
        debug_assert!(elems.windows(2).all(|w| w[0] < w[1]));
        IntSet { elems }
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.elems
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = i64> + ExactSizeIterator + '_ {
        self.elems.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn min(&self) -> Option<i64> {
        self.elems.first().copied()
    }

    pub fn max(&self) -> Option<i64> {
        self.elems.last().copied()
    }

    /// `max - min`, or `None` for the empty set.
    pub fn diameter(&self) -> Option<u64> {
        Some(self.max()?.abs_diff(self.min()?))
    }

    pub fn contains(&self, v: i64) -> bool {
        self.elems.binary_search(&v).is_ok()
    }

    pub fn union(&self, other: &IntSet) -> IntSet {
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (a, b) = (&self.elems, &other.elems);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        IntSet::from_sorted_unchecked(out)
    }

    /// Adds the given values; each must be within the safe bound.
    pub fn with(&self, values: &[i64]) -> Result<IntSet> {
        Ok(self.union(&IntSet::new(values.iter().copied())?))
    }

    /// `self \ other`.
    pub fn difference(&self, other: &IntSet) -> IntSet {
        IntSet::from_sorted_unchecked(
            self.elems
                .iter()
                .copied()
                .filter(|&v| !other.contains(v))
                .collect(),
        )
    }

    pub fn without(&self, v: i64) -> IntSet {
        IntSet::from_sorted_unchecked(self.elems.iter().copied().filter(|&e| e != v).collect())
    }

    pub fn is_subset(&self, other: &IntSet) -> bool {
        self.len() <= other.len() && self.elems.iter().all(|&v| other.contains(v))
    }

    pub fn is_proper_subset(&self, other: &IntSet) -> bool {
        self.len() < other.len() && self.is_subset(other)
    }

    /// Elements lying in the closed interval `[lo, hi]`.
    pub fn restrict(&self, lo: i64, hi: i64) -> IntSet {
        let start = self.elems.partition_point(|&v| v < lo);
        let end = self.elems.partition_point(|&v| v <= hi);
        IntSet::from_sorted_unchecked(self.elems[start..end.max(start)].to_vec())
    }

    /// `{a + b : a, b in A}`.
    pub fn sumset(&self) -> IntSet {
        match self.kernel_plan() {
            Plan::Empty => IntSet::empty(),
            Plan::Bitset { min, diam } => {
                let bits = sum_bits(&self.offsets(min), diam);
                IntSet::from_sorted_unchecked(bits.decode(2 * min as i128))
            }
            Plan::Pairwise => pairwise(&self.elems, |a, b| a.checked_add(b)),
        }
    }

    /// `{a - b : a, b in A}`, symmetric about 0.
    pub fn diffset(&self) -> IntSet {
        match self.kernel_plan() {
            Plan::Empty => IntSet::empty(),
            Plan::Bitset { min, diam } => {
                let bits = diff_bits(&self.offsets(min), diam);
                IntSet::from_sorted_unchecked(bits.decode(-(diam as i128)))
            }
            Plan::Pairwise => pairwise(&self.elems, |a, b| a.checked_sub(b)),
        }
    }

    /// `|A + A|` without materializing the sumset when the bitset path applies.
    pub fn sumset_len(&self) -> usize {
        match self.kernel_plan() {
            Plan::Empty => 0,
            Plan::Bitset { min, diam } => sum_bits(&self.offsets(min), diam).count(),
            Plan::Pairwise => self.sumset().len(),
        }
    }

    /// `|A - A|` without materializing the difference set when possible.
    pub fn diffset_len(&self) -> usize {
        match self.kernel_plan() {
            Plan::Empty => 0,
            Plan::Bitset { min, diam } => diff_bits(&self.offsets(min), diam).count(),
            Plan::Pairwise => self.diffset().len(),
        }
    }

    /// Reference implementation by pairwise enumeration, regardless of density.
    pub fn sumset_pairwise(&self) -> IntSet {
        pairwise(&self.elems, |a, b| a.checked_add(b))
    }

    pub fn diffset_pairwise(&self) -> IntSet {
        pairwise(&self.elems, |a, b| a.checked_sub(b))
    }

    /// The affine image `x * A + y`.
    pub fn affine(&self, x: i64, y: i64) -> Result<IntSet> {
        if x == 0 {
            return Err(Error::ZeroDilation);
        }
        let mut elems = self
            .elems
            .iter()
            .map(|&a| check_bound(x as i128 * a as i128 + y as i128))
            .collect::<Result<Vec<_>>>()?;
        if x < 0 {
            elems.reverse();
        }
        Ok(IntSet::from_sorted_unchecked(elems))
    }

    /// Translation `A + t`.
    pub fn shift(&self, t: i64) -> Result<IntSet> {
        self.affine(1, t)
    }

    /// `a* - A`.
    pub fn reflect(&self, a_star: i64) -> Result<IntSet> {
        self.affine(-1, a_star)
    }

    /// The point `a*` with `a* - A = A`, if any. Only `min + max` can work.
    pub fn symmetry_point(&self) -> Option<i64> {
        let centre = self.min()?.checked_add(self.max()?)?;
        let n = self.elems.len();
        (0..n.div_ceil(2))
            .all(|i| self.elems[i].checked_add(self.elems[n - 1 - i]) == Some(centre))
            .then_some(centre)
    }

    /// Number of distinct residues `a mod n` (always in `[0, n)`).
    pub fn residue_count(&self, n: i64) -> Result<usize> {
        if n < 1 {
            return Err(Error::BadModulus(n));
        }
        if n as u64 <= MAX_BITSET_BITS {
            let mut seen = BitVec::zeros(n as u64);
            for &a in &self.elems {
                seen.set(a.rem_euclid(n) as u64);
            }
            Ok(seen.count())
        } else {
            Ok(self
                .elems
                .iter()
                .map(|a| a.rem_euclid(n))
                .collect::<BTreeSet<_>>()
                .len())
        }
    }

    fn offsets(&self, min: i64) -> Vec<u64> {
        self.elems.iter().map(|&a| a.abs_diff(min)).collect()
    }

    fn kernel_plan(&self) -> Plan {
        let (Some(min), Some(diam)) = (self.min(), self.diameter()) else {
            return Plan::Empty;
        };
        let dense = diam <= DENSE_FACTOR.saturating_mul(self.len() as u64);
        if dense && diam < MAX_BITSET_BITS / 2 {
            Plan::Bitset { min, diam }
        } else {
            Plan::Pairwise
        }
    }
}

enum Plan {
    Empty,
    Bitset { min: i64, diam: u64 },
    Pairwise,
}

fn pairwise(elems: &[i64], op: impl Fn(i64, i64) -> Option<i64>) -> IntSet {
    let mut out = Vec::with_capacity(elems.len() * elems.len());
    for &a in elems {
        for &b in elems {
            out.push(
                op(a, b).expect("sum/difference overflows i64: operand exceeds the safe bound"),
            );
        }
    }
    out.sort_unstable();
    out.dedup();
    IntSet::from_sorted_unchecked(out)
}

/// Bits over `[0, 2 * diam]`, bit `i` meaning `2 * min + i` is a sum.
fn sum_bits(offsets: &[u64], diam: u64) -> BitVec {
    let src = BitVec::from_positions(offsets, diam + 1);
    let mut out = BitVec::zeros(2 * diam + 1);
    for &o in offsets {
        out.or_shifted(&src, o);
    }
    out
}

/// Bits over `[0, 2 * diam]`, bit `i` meaning `i - diam` is a difference.
fn diff_bits(offsets: &[u64], diam: u64) -> BitVec {
    let src = BitVec::from_positions(offsets, diam + 1);
    let mut out = BitVec::zeros(2 * diam + 1);
    for &o in offsets {
        out.or_shifted(&src, diam - o);
    }
    out
}

struct BitVec {
    words: Vec<u64>,
}

impl BitVec {
    fn zeros(nbits: u64) -> Self {
        BitVec {
            words: vec![0; nbits.div_ceil(64) as usize],
        }
    }

    fn from_positions(pos: &[u64], nbits: u64) -> Self {
        let mut bv = BitVec::zeros(nbits);
        for &p in pos {
            bv.set(p);
        }
        bv
    }

    fn set(&mut self, i: u64) {
        self.words[(i / 64) as usize] |= 1 << (i % 64);
    }

    fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// `self |= src << shift`; bits past the end of `self` are dropped.
    fn or_shifted(&mut self, src: &BitVec, shift: u64) {
        let q = (shift / 64) as usize;
        let r = (shift % 64) as u32;
        let n = self.words.len();
        for (j, &w) in src.words.iter().enumerate() {
            if w == 0 || j + q >= n {
                continue;
            }
            self.words[j + q] |= w << r;
            if r != 0 && j + q + 1 < n {
                self.words[j + q + 1] |= w >> (64 - r);
            }
        }
    }

    fn decode(&self, base: i128) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.count());
        for (wi, &w) in self.words.iter().enumerate() {
            let mut w = w;
            while w != 0 {
                let tz = w.trailing_zeros() as i128;
                let v = base + (wi as i128) * 64 + tz;
                out.push(i64::try_from(v).expect("kernel result exceeds i64"));
                w &= w - 1;
            }
        }
        out
    }
}

impl fmt::Debug for IntSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

/// Renders the set-literal form, e.g. `-1,0,2,3`.
impl fmt::Display for IntSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.elems.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}
