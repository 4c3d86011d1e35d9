//! Small exact combinatorics: binomials with the zero convention, factorials,
//! and lexicographic generators for subsets and multisets of indices.

use num_bigint::BigInt;

/// `C(n, k)`, defined as zero whenever `k < 0` or `k > n` (and for `n < 0`).
pub fn binomial(n: i64, k: i64) -> u128 {
    if n < 0 || k < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k) as u128;
    let n = n as u128;
    let mut acc: u128 = 1;
    for step in 0..k {
        // exact at every step: acc * (n - step) is divisible by step + 1
        acc = acc * (n - step) / (step + 1);
    }
    acc
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::from(1u8), |acc, k| acc * BigInt::from(k))
}

/// Calls `visit` on every strictly increasing `k`-subset of `0..n`, in
/// lexicographic order.
pub fn for_each_subset(n: usize, k: usize, mut visit: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        visit(&idx);
        let Some(pos) = (0..k).rev().find(|&p| idx[p] < n - k + p) else {
            return;
        };
        idx[pos] += 1;
        for q in pos + 1..k {
            idx[q] = idx[q - 1] + 1;
        }
    }
}

/// Calls `visit` on every non-decreasing `k`-multiset of `0..n`, in
/// lexicographic order.
pub fn for_each_multiset(n: usize, k: usize, mut visit: impl FnMut(&[usize])) {
    if n == 0 {
        if k == 0 {
            visit(&[]);
        }
        return;
    }
    let mut idx = vec![0usize; k];
    loop {
        visit(&idx);
        let Some(pos) = (0..k).rev().find(|&p| idx[p] < n - 1) else {
            return;
        };
        let next = idx[pos] + 1;
        for slot in &mut idx[pos..] {
            *slot = next;
        }
    }
}

/// Non-decreasing integer sequences of length `len` with values in `lo..=hi`,
/// lexicographic order.
pub fn nondecreasing_sequences(len: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    if hi < lo {
        return if len == 0 { vec![vec![]] } else { out };
    }
    let width = (hi - lo + 1) as usize;
    for_each_multiset(width, len, |ms| {
        out.push(ms.iter().map(|&v| lo + v as i64).collect());
    });
    out
}
