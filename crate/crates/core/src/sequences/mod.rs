//! Reference integer sequences used as closed forms for the counting
//! theorems, plus exact power series for the generating-function ones.

mod closed_form;
mod gf;
mod series;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};

use crate::dumont::{DumontKind, Enumerator};
use crate::error::{Error, Result};
use crate::perm::PatternSet;

pub use closed_form::{closed_form_2341_1423, closed_form_2341_1423_with_margin, ClosedForm};
pub use gf::{gf_coefficients, gf_series, GfId, DEFAULT_ORDER};
pub use series::{PowerSeries, Rational};

/// Named integer sequences exposed on the command line.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum SequenceId {
    Catalan,
    LittleSchroeder,
    PowersOfTwo,
    Rec2341_1423,
    GenCatalan2,
    Ballot,
    Genocchi,
}

impl SequenceId {
    pub const ALL: [SequenceId; 7] = [
        SequenceId::Catalan,
        SequenceId::LittleSchroeder,
        SequenceId::PowersOfTwo,
        SequenceId::Rec2341_1423,
        SequenceId::GenCatalan2,
        SequenceId::Ballot,
        SequenceId::Genocchi,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SequenceId::Catalan => "catalan",
            SequenceId::LittleSchroeder => "little-schroeder",
            SequenceId::PowersOfTwo => "powers-of-two",
            SequenceId::Rec2341_1423 => "rec-2341-1423",
            SequenceId::GenCatalan2 => "gen-catalan2",
            SequenceId::Ballot => "ballot",
            SequenceId::Genocchi => "genocchi",
        }
    }

    /// The first `terms` values, starting from each sequence's natural first
    /// index: `C_0`, `s_1`, `2^0`, `a_0`, `C(2;0)`, `G_2`. Ballot numbers are
    /// listed row by row: `b(1,0), b(2,0), b(2,1), b(3,0), ...`.
    pub fn terms(self, terms: usize) -> Vec<BigInt> {
        match self {
            SequenceId::Catalan => (0..terms).map(catalan).collect(),
            SequenceId::LittleSchroeder => little_schroeder_table(terms),
            SequenceId::PowersOfTwo => (0..terms).map(|n| BigInt::one() << n).collect(),
            SequenceId::Rec2341_1423 => (0..terms).map(rec_2341_1423).collect(),
            SequenceId::GenCatalan2 => (0..terms).map(gen_catalan2).collect(),
            SequenceId::Ballot => (1..)
                .flat_map(|n| (0..n).map(move |k| (n, k)))
                .take(terms)
                .map(|(n, k)| ballot(n, k).expect("k < n"))
                .collect(),
            SequenceId::Genocchi => {
                let table = crate::dumont::GenocchiTable::new(terms);
                (1..=terms)
                    .map(|k| BigInt::from(table.get(k).expect("in table").clone()))
                    .collect()
            }
        }
    }
}

impl fmt::Display for SequenceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SequenceId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SequenceId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::UnknownSeries(s.to_string()))
    }
}

/// `C_n = binom(2n, n) / (n + 1)`.
pub fn catalan(n: usize) -> BigInt {
    binomial(BigInt::from(2 * n), BigInt::from(n)) / BigInt::from(n + 1)
}

/// `s_1 ..= s_count` of the little Schröder numbers, from
/// `s_{m+1} = -s_m + 2 * sum_{k=1}^{m} s_k s_{m+1-k}` with `s_1 = 1`.
fn little_schroeder_table(count: usize) -> Vec<BigInt> {
    // s[0] is a placeholder so that s[k] is s_k.
    let mut s = vec![BigInt::zero(), BigInt::one()];
    while s.len() <= count {
        let m = s.len() - 1;
        let conv: BigInt = (1..=m).map(|k| &s[k] * &s[m + 1 - k]).sum();
        let next = -&s[m] + conv * 2;
        s.push(next);
    }
    s.drain(1..=count).collect()
}

/// The `n`th little Schröder number, `n >= 1`: 1, 1, 3, 11, 45, 197, ...
pub fn little_schroeder(n: usize) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::DomainError(
            "little Schröder index starts at 1".into(),
        ));
    }
    Ok(little_schroeder_table(n).pop().expect("n >= 1 terms"))
}

/// Ballot number `(n - k) / (n + k) * binom(n + k, n)` for `0 <= k < n`.
pub fn ballot(n: usize, k: usize) -> Result<BigInt> {
    if k >= n {
        return Err(Error::DomainError(format!("ballot({n}, {k}) needs k < n")));
    }
    let b = binomial(BigInt::from(n + k), BigInt::from(n)) * BigInt::from(n - k);
    Ok(b / BigInt::from(n + k))
}

/// `C(2; n) = (-1)^n + sum_{k=1}^{n} (-1)^{n-k} 2^k C_{k-1}`.
pub fn gen_catalan2(n: usize) -> BigInt {
    let sign = |e: usize| {
        if e.is_multiple_of(2) {
            BigInt::one()
        } else {
            -BigInt::one()
        }
    };
    let sum: BigInt = (1..=n)
        .map(|k| sign(n - k) * (BigInt::one() << k) * catalan(k - 1))
        .sum();
    sign(n) + sum
}

/// The same numbers as [`gen_catalan2`] written as the convolution of ballot
/// numbers with powers of two: `sum_{k=0}^{n-1} b(n,k) 2^k + [n = 0]`.
pub fn gen_catalan2_ballot(n: usize) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    (0..n).map(|k| ballot(n, k).expect("k < n") << k).sum()
}

/// `a_0 = a_1 = 1`, `a_2 = 3`, `a_n = 3 a_{n-1} + 2 a_{n-2}` for `n >= 3`.
pub fn rec_2341_1423(n: usize) -> BigInt {
    let mut a = [BigInt::one(), BigInt::one(), BigInt::from(3)];
    if n <= 2 {
        return a[n].clone();
    }
    for _ in 3..=n {
        let next = &a[2] * 3 + &a[1] * 2;
        a.rotate_left(1);
        a[2] = next;
    }
    a[2].clone()
}

/// Checks `a_n = sum_{k=0}^{n-1} b_k a_{n-1-k}` for `1 <= n <= n_max`, where
/// `a_n` counts first-kind permutations avoiding 4213 and `b_n` those
/// avoiding 1342.
pub fn verify_lemma_4213_1342(enumerator: &Enumerator, n_max: usize) -> Result<bool> {
    let (a, b) = lemma_sequences(enumerator, n_max)?;
    Ok((1..=n_max).all(|n| a[n] == lemma_convolution(&a, &b, n)))
}

pub(crate) fn lemma_sequences(
    enumerator: &Enumerator,
    n_max: usize,
) -> Result<(Vec<u64>, Vec<u64>)> {
    enumerator.check(n_max)?;
    let p4213 = PatternSet::parse("4213")?;
    let p1342 = PatternSet::parse("1342")?;
    let count = |set: &PatternSet| {
        (0..=n_max)
            .map(|n| enumerator.count_avoiders(DumontKind::First, set, n))
            .collect::<Result<Vec<_>>>()
    };
    Ok((count(&p4213)?, count(&p1342)?))
}

pub(crate) fn lemma_convolution(a: &[u64], b: &[u64], n: usize) -> u64 {
    (0..n).map(|k| b[k] * a[n - 1 - k]).sum()
}
