#![allow(dead_code)]
//! Brute-force reference computations, independent of the library kernels.

use std::collections::BTreeSet;

pub fn naive_sums(a: &[i64]) -> BTreeSet<i64> {
    let mut out = BTreeSet::new();
    for &x in a {
        for &y in a {
            out.insert(x + y);
        }
    }
    out
}

pub fn naive_diffs(a: &[i64]) -> BTreeSet<i64> {
    let mut out = BTreeSet::new();
    for &x in a {
        for &y in a {
            out.insert(x - y);
        }
    }
    out
}

/// +1 for MSTD, -1 for MDTS, 0 balanced.
pub fn naive_class(a: &[i64]) -> i32 {
    let (s, d) = (naive_sums(a).len(), naive_diffs(a).len());
    (s as i64 - d as i64).signum() as i32
}
