//! Permutations in one-line notation, classical pattern containment, and the
//! reversal / complement symmetries.
//!
//! Entries are stored 1-based as `u8`, which caps permutations at 255
//! entries. Everything enumerated here is far shorter.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A bijection of `{1, ..., m}` in one-line notation. Also used as a pattern.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    /// Validates that `values` is a permutation of `1..=values.len()`.
    pub fn new(values: Vec<u8>) -> Result<Self> {
        check_bijection(&values)?;
        Ok(Permutation(values))
    }

    /// Caller guarantees `values` is a bijection of `1..=len`.
    pub(crate) fn from_vec_unchecked(values: Vec<u8>) -> Self {
        debug_assert!(check_bijection(&values).is_ok(), "{values:?}");
        Permutation(values)
    }

    pub fn empty() -> Self {
        Permutation(Vec::new())
    }

    pub fn identity(len: usize) -> Self {
        Permutation((1..=len as u8).collect())
    }

    /// The permutation order-isomorphic to `values` (which must be distinct).
    pub fn standardize(values: &[u8]) -> Self {
        let mut order: Vec<usize> = (0..values.len()).collect();
        order.sort_by_key(|&i| values[i]);
        let mut out = vec![0u8; values.len()];
        for (rank, &i) in order.iter().enumerate() {
            out[i] = rank as u8 + 1;
        }
        Permutation(out)
    }

    pub fn values(&self) -> &[u8] {
        &self.0
    }

    pub fn into_values(self) -> Vec<u8> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Entry at 1-based position `i`.
    pub fn at(&self, i: usize) -> u8 {
        self.0[i - 1]
    }

    /// `self + by`: adds `by` to every entry. The result is a sequence, not a
    /// permutation, so it is returned as raw values.
    pub fn shifted(&self, by: u8) -> Vec<u8> {
        self.0.iter().map(|&v| v + by).collect()
    }

    pub fn reversal(&self) -> Self {
        Permutation(self.0.iter().rev().copied().collect())
    }

    pub fn complement(&self) -> Self {
        let top = self.0.len() as u8 + 1;
        Permutation(self.0.iter().map(|&v| top - v).collect())
    }

    pub fn reverse_complement(&self) -> Self {
        let top = self.0.len() as u8 + 1;
        Permutation(self.0.iter().rev().map(|&v| top - v).collect())
    }

    pub fn apply(&self, op: Symmetry) -> Self {
        match op {
            Symmetry::Reversal => self.reversal(),
            Symmetry::Complement => self.complement(),
            Symmetry::ReverseComplement => self.reverse_complement(),
        }
    }

    pub fn contains(&self, pattern: &Permutation) -> bool {
        contains(&self.0, &pattern.0)
    }

    pub fn avoids(&self, pattern: &Permutation) -> bool {
        !self.contains(pattern)
    }

    pub fn avoids_all(&self, set: &PatternSet) -> bool {
        avoids_all(&self.0, set)
    }

    pub fn find_occurrence(&self, pattern: &Permutation) -> Option<Occurrence> {
        find_occurrence(&self.0, &pattern.0)
    }

    pub fn count_occurrences(&self, pattern: &Permutation) -> u64 {
        count_occurrences(&self.0, &pattern.0)
    }

    /// Values of the left-to-right maxima, in order of appearance.
    pub fn left_to_right_maxima(&self) -> Vec<u8> {
        let mut best = 0;
        self.0
            .iter()
            .filter(|&&v| {
                let new = v > best;
                best = best.max(v);
                new
            })
            .copied()
            .collect()
    }
}

fn check_bijection(values: &[u8]) -> Result<()> {
    if values.len() > u8::MAX as usize {
        return Err(Error::TooLong(values.len()));
    }
    let mut seen = vec![false; values.len() + 1];
    for &v in values {
        let v = v as usize;
        if v == 0 || v > values.len() {
            return Err(Error::NotABijection(format!(
                "value {v} out of range 1..={}",
                values.len()
            )));
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::NotABijection(format!("value {v} repeated")));
        }
    }
    Ok(())
}

impl fmt::Display for Permutation {
    /// Compact digits when every entry fits in one digit, space-separated
    /// decimals otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_values(f, &self.0)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            f.write_str("ε")
        } else {
            write_values(f, &self.0)
        }
    }
}

fn write_values(f: &mut fmt::Formatter<'_>, values: &[u8]) -> fmt::Result {
    if values.len() <= 9 {
        for v in values {
            write!(f, "{v}")?;
        }
    } else {
        for (i, v) in values.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
    }
    Ok(())
}

/// Canonical text of a raw value sequence, same rules as `Display`.
pub fn format_values(values: &[u8]) -> String {
    struct V<'a>(&'a [u8]);
    impl fmt::Display for V<'_> {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write_values(f, self.0)
        }
    }
    V(values).to_string()
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_permutation(s)
    }
}

/// Parses a compact digit string (`"2143"`) or a whitespace/comma separated
/// list of decimals (`"10 1 2 3 4 5 6 7 8 9"`, `"3,1,2"`). The empty string
/// and `"(empty)"` denote the empty permutation.
pub fn parse_permutation(text: &str) -> Result<Permutation> {
    let text = text.trim();
    if text.is_empty() || text == "(empty)" || text == "ε" {
        return Ok(Permutation::empty());
    }
    if text.bytes().all(|b| b.is_ascii_digit()) {
        let values = text.bytes().map(|b| b - b'0').collect();
        return Permutation::new(values);
    }

    let has_comma = text.contains(',');
    let mut values = Vec::new();
    if has_comma {
        for token in text.split(',') {
            let token = token.trim();
            if token.is_empty() {
                return Err(Error::EmptyToken);
            }
            if token.contains(char::is_whitespace) {
                return Err(Error::MixedFormat(text.to_string()));
            }
            values.push(parse_value(token)?);
        }
    } else {
        for token in text.split_whitespace() {
            values.push(parse_value(token)?);
        }
    }
    if values.len() > u8::MAX as usize {
        return Err(Error::TooLong(values.len()));
    }
    Permutation::new(
        values
            .into_iter()
            .map(|v| u8::try_from(v).unwrap_or(0))
            .collect(),
    )
}

fn parse_value(token: &str) -> Result<u32> {
    if !token.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::InvalidToken(token.to_string()));
    }
    // Out-of-range values surface as NotABijection in the caller.
    Ok(token.parse::<u32>().unwrap_or(u32::MAX))
}

/// Positions (1-based, strictly increasing) of one occurrence of a pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Occurrence {
    pub positions: Vec<usize>,
}

/// The three nontrivial symmetries of the square acting on patterns.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Symmetry {
    Reversal,
    Complement,
    ReverseComplement,
}

/// A deduplicated set of nonempty patterns.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PatternSet(BTreeSet<Permutation>);

impl PatternSet {
    pub fn new<I: IntoIterator<Item = Permutation>>(patterns: I) -> Result<Self> {
        let set: BTreeSet<_> = patterns.into_iter().collect();
        if set.iter().any(Permutation::is_empty) {
            return Err(Error::EmptyPattern);
        }
        Ok(PatternSet(set))
    }

    pub fn single(pattern: Permutation) -> Result<Self> {
        Self::new([pattern])
    }

    /// Comma-separated compact patterns, e.g. `"2413,3142"`.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(PatternSet::default());
        }
        let patterns = text
            .split(',')
            .map(|t| {
                let t = t.trim();
                if t.is_empty() {
                    Err(Error::EmptyToken)
                } else {
                    parse_permutation(t)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(patterns)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Permutation> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_subset(&self, other: &PatternSet) -> bool {
        self.0.is_subset(&other.0)
    }

    /// Image of every pattern under `op`.
    pub fn map(&self, op: Symmetry) -> PatternSet {
        PatternSet(self.0.iter().map(|p| p.apply(op)).collect())
    }
}

impl fmt::Display for PatternSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for PatternSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PatternSet::parse(s)
    }
}

pub fn map_pattern_set(set: &PatternSet, op: Symmetry) -> PatternSet {
    set.map(op)
}

/// For each pattern position `j`, the earlier positions holding the nearest
/// smaller and nearest larger pattern values. A candidate host value at step
/// `j` must lie strictly between the host values chosen at those positions.
struct Bounds {
    below: Vec<Option<usize>>,
    above: Vec<Option<usize>>,
}

impl Bounds {
    fn new(pattern: &[u8]) -> Self {
        let mut below = Vec::with_capacity(pattern.len());
        let mut above = Vec::with_capacity(pattern.len());
        for (j, &t) in pattern.iter().enumerate() {
            let earlier = pattern[..j].iter().enumerate();
            below.push(
                earlier
                    .clone()
                    .filter(|(_, &u)| u < t)
                    .max_by_key(|(_, &u)| u)
                    .map(|(i, _)| i),
            );
            above.push(
                earlier
                    .filter(|(_, &u)| u > t)
                    .min_by_key(|(_, &u)| u)
                    .map(|(i, _)| i),
            );
        }
        Bounds { below, above }
    }
}

/// Depth-first search over occurrences in increasing lexicographic order of
/// positions (0-based in `chosen`).
fn search<B>(
    host: &[u8],
    pattern: &[u8],
    visit: &mut impl FnMut(&[usize]) -> ControlFlow<B>,
) -> ControlFlow<B> {
    let k = pattern.len();
    if k > host.len() {
        return ControlFlow::Continue(());
    }
    let bounds = Bounds::new(pattern);
    let mut chosen = vec![0usize; k];
    step(host, &bounds, 0, 0, &mut chosen, visit)
}

fn step<B>(
    host: &[u8],
    bounds: &Bounds,
    j: usize,
    start: usize,
    chosen: &mut [usize],
    visit: &mut impl FnMut(&[usize]) -> ControlFlow<B>,
) -> ControlFlow<B> {
    let k = chosen.len();
    if j == k {
        return visit(chosen);
    }
    let lo = bounds.below[j].map_or(0, |i| host[chosen[i]]);
    let hi = bounds.above[j].map_or(u8::MAX, |i| host[chosen[i]]);
    // Leave room for the remaining k - j - 1 pattern entries.
    for pos in start..=host.len() - (k - j) {
        let v = host[pos];
        if lo < v && v < hi {
            chosen[j] = pos;
            step(host, bounds, j + 1, pos + 1, chosen, visit)?;
        }
    }
    ControlFlow::Continue(())
}

/// True iff some occurrence of `pattern` uses the last entry of `host`.
///
/// When every proper prefix of `host` is already known to avoid `pattern`
/// this decides containment, and it is much cheaper than [`contains`].
pub fn contains_ending_at_last(host: &[u8], pattern: &[u8]) -> bool {
    Anchored::new(pattern).matches(host)
}

/// A pattern prepared for [`contains_ending_at_last`]. The search reads the
/// host from the right with the last entry pinned, so the pinned value
/// bounds every later choice.
pub(crate) struct Anchored {
    len: usize,
    bounds: Bounds,
}

impl Anchored {
    pub(crate) fn new(pattern: &[u8]) -> Self {
        let reversed: Vec<u8> = pattern.iter().rev().copied().collect();
        Anchored {
            len: pattern.len(),
            bounds: Bounds::new(&reversed),
        }
    }

    pub(crate) fn matches(&self, host: &[u8]) -> bool {
        let (n, k) = (host.len(), self.len);
        if k == 0 {
            return true;
        }
        if k > n {
            return false;
        }
        let mut values = [0u8; 64];
        values[0] = host[n - 1];
        self.step_back(host, 1, n - 1, &mut values)
    }

    /// Chooses pattern entry `j` (counted from the right) among
    /// `host[..end]`; `values` holds the host values already chosen.
    fn step_back(&self, host: &[u8], j: usize, end: usize, values: &mut [u8; 64]) -> bool {
        if j == self.len {
            return true;
        }
        let lo = self.bounds.below[j].map_or(0, |i| values[i]);
        let hi = self.bounds.above[j].map_or(u8::MAX, |i| values[i]);
        let room = self.len - j - 1;
        for pos in (room..end).rev() {
            let v = host[pos];
            if lo < v && v < hi {
                values[j] = v;
                if self.step_back(host, j + 1, pos, values) {
                    return true;
                }
            }
        }
        false
    }
}

/// True iff some subsequence of `host` is order-isomorphic to `pattern`.
/// The empty pattern is contained in everything.
pub fn contains(host: &[u8], pattern: &[u8]) -> bool {
    search(host, pattern, &mut |_| ControlFlow::Break(())).is_break()
}

pub fn avoids_all(host: &[u8], set: &PatternSet) -> bool {
    set.iter().all(|p| !contains(host, p.values()))
}

/// The lexicographically least occurrence, by positions.
pub fn find_occurrence(host: &[u8], pattern: &[u8]) -> Option<Occurrence> {
    match search(host, pattern, &mut |c| ControlFlow::Break(c.to_vec())) {
        ControlFlow::Break(c) => Some(Occurrence {
            positions: c.into_iter().map(|i| i + 1).collect(),
        }),
        ControlFlow::Continue(()) => None,
    }
}

pub fn count_occurrences(host: &[u8], pattern: &[u8]) -> u64 {
    let mut count = 0u64;
    let _ = search::<()>(host, pattern, &mut |_| {
        count += 1;
        ControlFlow::Continue(())
    });
    count
}

/// Both serialize as their display strings.
macro_rules! serde_via_string {
    ($t:ty) => {
        impl Serialize for $t {
            fn serialize<S: Serializer>(
                &self,
                serializer: S,
            ) -> std::result::Result<S::Ok, S::Error> {
                serializer.collect_str(self)
            }
        }

        impl<'de> Deserialize<'de> for $t {
            fn deserialize<D: Deserializer<'de>>(
                deserializer: D,
            ) -> std::result::Result<Self, D::Error> {
                let s = String::deserialize(deserializer)?;
                s.parse().map_err(serde::de::Error::custom)
            }
        }
    };
}

serde_via_string!(Permutation);
serde_via_string!(PatternSet);
