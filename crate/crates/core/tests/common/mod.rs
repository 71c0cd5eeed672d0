//! Slow, obviously-correct reference implementations shared by the
//! integration tests. Nothing here calls into the library.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Every index subset of size `k` of `0..len`, in lexicographic order.
pub fn combinations(len: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, len: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..len {
            cur.push(i);
            go(i + 1, len, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, len, k, &mut Vec::new(), &mut out);
    out
}

fn isomorphic(host: &[u8], idx: &[usize], pattern: &[u8]) -> bool {
    (0..idx.len()).all(|a| {
        (a + 1..idx.len()).all(|b| (host[idx[a]] < host[idx[b]]) == (pattern[a] < pattern[b]))
    })
}

/// All occurrences of `pattern` in `host` as 0-based index lists, least first.
pub fn occurrences(host: &[u8], pattern: &[u8]) -> Vec<Vec<usize>> {
    combinations(host.len(), pattern.len())
        .into_iter()
        .filter(|idx| isomorphic(host, idx, pattern))
        .collect()
}

/// Same subsets as [`combinations`], stepped in place.
pub fn contains(host: &[u8], pattern: &[u8]) -> bool {
    let (len, k) = (host.len(), pattern.len());
    if k > len {
        return false;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if isomorphic(host, &idx, pattern) {
            return true;
        }
        // Advance to the next subset in lexicographic order.
        let Some(i) = (0..k).rev().find(|&i| idx[i] < len - k + i) else {
            return false;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

pub fn avoids_all(host: &[u8], patterns: &[Vec<u8>]) -> bool {
    patterns.iter().all(|p| !contains(host, p))
}

pub fn digits(text: &str) -> Vec<Vec<u8>> {
    text.split(',')
        .map(|t| t.bytes().map(|b| b - b'0').collect())
        .collect()
}

/// All permutations of `1..=len` in lexicographic order.
pub fn permutations(len: usize) -> Vec<Vec<u8>> {
    fn go(len: usize, used: &mut Vec<bool>, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for v in 1..=len {
            if !used[v] {
                used[v] = true;
                cur.push(v as u8);
                go(len, used, cur, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(len, &mut vec![false; len + 1], &mut Vec::new(), &mut out);
    out
}

/// Even entries are followed by something smaller, odd entries by something
/// larger or nothing.
pub fn is_first_kind(p: &[u8]) -> bool {
    p.len().is_multiple_of(2)
        && p.iter().enumerate().all(|(i, &v)| match p.get(i + 1) {
            None => v % 2 == 1,
            Some(&w) => (v % 2 == 0) == (w < v),
        })
}

/// `p(2i) < 2i` and `p(2i - 1) >= 2i - 1`, 1-based.
pub fn is_second_kind(p: &[u8]) -> bool {
    p.len().is_multiple_of(2)
        && p.iter().enumerate().all(|(i, &v)| {
            let pos = i as u8 + 1;
            if pos.is_multiple_of(2) {
                v < pos
            } else {
                v >= pos
            }
        })
}

/// Members of the first (`kind == 1`) or second (`kind == 2`) family of
/// length `2n`, lexicographic, by extending prefixes that can still succeed.
pub fn family(kind: u8, n: usize) -> Vec<Vec<u8>> {
    let len = 2 * n;
    let ok_prefix = |p: &[u8]| -> bool {
        let i = p.len() - 1;
        match kind {
            1 => i == 0 || p[i - 1].is_multiple_of(2) == (p[i] < p[i - 1]),
            _ => {
                let pos = i as u8 + 1;
                if pos.is_multiple_of(2) {
                    p[i] < pos
                } else {
                    p[i] >= pos
                }
            }
        }
    };
    fn go(
        len: usize,
        ok: &dyn Fn(&[u8]) -> bool,
        used: &mut Vec<bool>,
        cur: &mut Vec<u8>,
        out: &mut Vec<Vec<u8>>,
    ) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for v in 1..=len {
            if used[v] {
                continue;
            }
            cur.push(v as u8);
            if ok(cur) {
                used[v] = true;
                go(len, ok, used, cur, out);
                used[v] = false;
            }
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(
        len,
        &ok_prefix,
        &mut vec![false; len + 1],
        &mut Vec::new(),
        &mut out,
    );
    let check: fn(&[u8]) -> bool = if kind == 1 {
        is_first_kind
    } else {
        is_second_kind
    };
    out.retain(|p| check(p));
    out
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let mut r: u128 = 1;
    for i in 0..k as u128 {
        r = r * (n as u128 - i) / (i + 1);
    }
    r as u64
}

pub fn catalan(n: u64) -> u64 {
    binomial(2 * n, n) / (n + 1)
}

/// `s_1 = 1` and `s_{m+1} = r_m / 2` where `r_m = sum_k binom(m + k, 2k) C_k`
/// is the large Schröder number.
pub fn little_schroeder(m: u64) -> u64 {
    if m <= 1 {
        return 1;
    }
    let r: u64 = (0..m)
        .map(|k| binomial(m - 1 + k, 2 * k) * catalan(k))
        .sum();
    r / 2
}

/// Bernoulli numbers `B_0..=B_m` by the Akiyama–Tanigawa transform
/// (so `B_1 = +1/2`).
pub fn bernoulli(m: usize) -> Vec<BigRational> {
    let mut out = Vec::new();
    for top in 0..=m {
        let mut a: Vec<BigRational> = (0..=top)
            .map(|j| BigRational::new(BigInt::one(), BigInt::from(j + 1)))
            .collect();
        for j in (1..=top).rev() {
            for i in 0..j {
                a[i] = (&a[i] - &a[i + 1]) * BigRational::from_integer(BigInt::from(i + 1));
            }
        }
        out.push(a[0].clone());
    }
    out
}

/// `G_{2k} = 2 (4^k - 1) |B_{2k}|`.
pub fn genocchi(k: usize) -> u64 {
    let b = bernoulli(2 * k);
    let g =
        BigRational::from_integer(BigInt::from(2u64 * ((1u64 << (2 * k)) - 1))) * b[2 * k].abs();
    assert!(g.is_integer());
    u64::try_from(g.to_integer()).unwrap()
}

/// Truncated power series over the rationals, just enough to expand the
/// generating functions by coefficient recurrences.
pub type Series = Vec<BigRational>;

pub fn int_series(v: &[i64]) -> Series {
    v.iter()
        .map(|&c| BigRational::from_integer(BigInt::from(c)))
        .collect()
}

pub fn mul(a: &Series, b: &Series) -> Series {
    let n = a.len().min(b.len());
    (0..n)
        .map(|k| (0..=k).fold(BigRational::zero(), |acc, i| acc + &a[i] * &b[k - i]))
        .collect()
}

/// `a / b`, with `b_0 != 0`.
pub fn div(a: &Series, b: &Series) -> Series {
    let n = a.len().min(b.len());
    let mut q: Series = Vec::with_capacity(n);
    for k in 0..n {
        let acc = (1..=k).fold(a[k].clone(), |acc, i| acc - &b[i] * &q[k - i]);
        q.push(acc / &b[0]);
    }
    q
}

/// Square root of a series with constant term 1.
pub fn sqrt(a: &Series) -> Series {
    assert!(a[0].is_one());
    let two = BigRational::from_integer(BigInt::from(2));
    let mut s: Series = vec![BigRational::one()];
    for k in 1..a.len() {
        let acc = (1..k).fold(a[k].clone(), |acc, i| acc - &s[i] * &s[k - i]);
        s.push(acc / &two);
    }
    s
}

/// Shift by one power of `x`, keeping the length.
pub fn times_x(a: &Series) -> Series {
    let mut v = vec![BigRational::zero()];
    v.extend(a[..a.len() - 1].iter().cloned());
    v
}

pub fn catalan_series(len: usize) -> Series {
    (0..len as u64)
        .map(|k| BigRational::from_integer(BigInt::from(catalan(k))))
        .collect()
}

/// Integer coefficients of a series, panicking on a fraction.
pub fn integers(a: &Series) -> Vec<u64> {
    a.iter()
        .map(|c| {
            assert!(c.is_integer(), "{c} is not an integer");
            u64::try_from(c.to_integer()).unwrap()
        })
        .collect()
}

/// `F = (3 - sqrt(1 - 8x)) / (2 (1 + x))`, first `len` coefficients.
pub fn f_series(len: usize) -> Vec<u64> {
    let mut inner = int_series(&[1, -8]);
    inner.resize(len, BigRational::zero());
    let mut num: Series = sqrt(&inner).iter().map(|c| -c.clone()).collect();
    num[0] += BigRational::from_integer(BigInt::from(3));
    let mut den = int_series(&[2, 2]);
    den.resize(len, BigRational::zero());
    integers(&div(&num, &den))
}

/// `G = (2 - (1 + x) C) / (2 - x - (1 + x) C)`.
pub fn g_series(len: usize) -> Vec<u64> {
    let c = catalan_series(len);
    let mut one_plus_x = int_series(&[1, 1]);
    one_plus_x.resize(len, BigRational::zero());
    let xc = mul(&one_plus_x, &c);
    let mut num: Series = xc.iter().map(|v| -v.clone()).collect();
    num[0] += BigRational::from_integer(BigInt::from(2));
    let mut den = num.clone();
    den[1] -= BigRational::one();
    integers(&div(&num, &den))
}

/// `H = (1 + xC - sqrt(1 - xC - 5x)) / (2x (1 + C))`.
pub fn h_series(len: usize) -> Vec<u64> {
    // One extra term is consumed by the division by x.
    let m = len + 1;
    let c = catalan_series(m);
    let xc = times_x(&c);
    let mut radicand: Series = xc.iter().map(|v| -v.clone()).collect();
    radicand[0] += BigRational::one();
    radicand[1] -= BigRational::from_integer(BigInt::from(5));
    let root = sqrt(&radicand);
    let mut num: Series = xc.iter().zip(&root).map(|(a, b)| a - b).collect();
    num[0] += BigRational::one();
    assert!(num[0].is_zero());
    let num: Series = num[1..].to_vec();
    let den: Series = c[..len]
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let base = if i == 0 {
                v + BigRational::one()
            } else {
                v.clone()
            };
            base * BigRational::from_integer(BigInt::from(2))
        })
        .collect();
    integers(&div(&num, &den))
}
