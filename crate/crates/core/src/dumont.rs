//! Dumont permutations of the first and second kinds, their complemented
//! ("Dumont-like") variants, and exhaustive generation by backtracking.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{Anchored, PatternSet, Permutation};

/// Default largest `n` (permutation length `2n`) that generation accepts.
pub const DEFAULT_MAX_N: usize = 8;

/// Environment variable overriding [`DEFAULT_MAX_N`].
pub const MAX_N_ENV: &str = "DUMONT_MAX_N";

/// Hard ceiling imposed by the 64-bit used-value mask.
const ABSOLUTE_MAX_N: usize = 31;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DumontKind {
    /// Every even entry is followed by a descent, every odd entry by an
    /// ascent or the end.
    First,
    /// Even positions hold deficiencies, odd positions fixed points or
    /// excedances.
    Second,
    /// Complements of `First`.
    DumontLikeFirst,
    /// Reverse-complements of `Second`.
    DumontLikeSecond,
}

impl DumontKind {
    pub const ALL: [DumontKind; 4] = [
        DumontKind::First,
        DumontKind::Second,
        DumontKind::DumontLikeFirst,
        DumontKind::DumontLikeSecond,
    ];

    /// Short name used on the command line: `1`, `2`, `dl1`, `dl2`.
    pub fn short_name(self) -> &'static str {
        match self {
            DumontKind::First => "1",
            DumontKind::Second => "2",
            DumontKind::DumontLikeFirst => "dl1",
            DumontKind::DumontLikeSecond => "dl2",
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            DumontKind::First => "D1",
            DumontKind::Second => "D2",
            DumontKind::DumontLikeFirst => "DL1",
            DumontKind::DumontLikeSecond => "DL2",
        }
    }
}

impl fmt::Display for DumontKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for DumontKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "1" | "first" | "d1" => Ok(DumontKind::First),
            "2" | "second" | "d2" => Ok(DumontKind::Second),
            "dl1" | "dumont-like-first" => Ok(DumontKind::DumontLikeFirst),
            "dl2" | "dumont-like-second" => Ok(DumontKind::DumontLikeSecond),
            _ => Err(Error::DomainError(format!("unknown Dumont kind {s:?}"))),
        }
    }
}

/// Membership test on raw one-line values. The empty word belongs to every
/// kind.
pub fn is_member_values(kind: DumontKind, p: &[u8]) -> bool {
    let m = p.len();
    if !m.is_multiple_of(2) {
        return false;
    }
    match kind {
        DumontKind::First | DumontKind::DumontLikeFirst => {
            // In both kinds even entries step down and odd entries step up;
            // they differ in which parity may end the word.
            let terminal = terminal_parity(kind);
            p.iter().enumerate().all(|(i, &v)| match p.get(i + 1) {
                None => v % 2 == terminal,
                Some(&w) => (v % 2 == 0) == (v > w),
            })
        }
        DumontKind::Second | DumontKind::DumontLikeSecond => p.iter().enumerate().all(|(i, &v)| {
            let pos = i + 1;
            position_allows(kind, pos, v)
        }),
    }
}

fn terminal_parity(kind: DumontKind) -> u8 {
    match kind {
        DumontKind::DumontLikeFirst => 0,
        _ => 1,
    }
}

pub fn is_member(kind: DumontKind, p: &Permutation) -> bool {
    is_member_values(kind, p.values())
}

#[inline]
fn position_allows(kind: DumontKind, pos: usize, v: u8) -> bool {
    let v = v as usize;
    match (kind, pos.is_multiple_of(2)) {
        (DumontKind::Second, true) => v < pos,
        (DumontKind::Second, false) => v >= pos,
        (DumontKind::DumontLikeSecond, true) => v <= pos,
        (DumontKind::DumontLikeSecond, false) => v > pos,
        _ => unreachable!("positional rule only for second-kind variants"),
    }
}

/// Appends `2n + 1`, turning an even-length Dumont permutation into the
/// corresponding odd-length one.
pub fn extend_to_odd(p: &Permutation) -> Result<Permutation> {
    if !p.len().is_multiple_of(2) {
        return Err(Error::OddInput(p.len()));
    }
    let mut values = p.values().to_vec();
    values.push(p.len() as u8 + 1);
    Ok(Permutation::from_vec_unchecked(values))
}

/// Exhaustive generator with a configurable cap on `n` and an optional
/// worker count for counting.
#[derive(Clone, Debug)]
pub struct Enumerator {
    max_n: usize,
    threads: usize,
}

impl Default for Enumerator {
    fn default() -> Self {
        Enumerator {
            max_n: DEFAULT_MAX_N,
            threads: 1,
        }
    }
}

impl Enumerator {
    pub fn new() -> Self {
        Self::default()
    }

    /// Reads the cap from `DUMONT_MAX_N`, falling back to the default when
    /// unset or unparsable.
    pub fn from_env() -> Self {
        let max_n = std::env::var(MAX_N_ENV)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .unwrap_or(DEFAULT_MAX_N);
        Self::default().with_max_n(max_n)
    }

    pub fn with_max_n(mut self, max_n: usize) -> Self {
        self.max_n = max_n.min(ABSOLUTE_MAX_N);
        self
    }

    /// Number of workers used by the counting paths. 1 means sequential.
    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = threads.max(1);
        self
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    pub fn threads(&self) -> usize {
        self.threads
    }

    pub fn check(&self, n: usize) -> Result<()> {
        if n > self.max_n {
            Err(Error::LimitExceeded { n, max: self.max_n })
        } else {
            Ok(())
        }
    }

    /// Calls `visit` on every member of length `2n` in lexicographic order.
    pub fn for_each(&self, kind: DumontKind, n: usize, mut visit: impl FnMut(&[u8])) -> Result<()> {
        self.check(n)?;
        Backtracker::new(kind, n).run(None, &|_| true, &mut visit);
        Ok(())
    }

    /// Members of length `2n` in lexicographic order.
    pub fn generate(&self, kind: DumontKind, n: usize) -> Result<Vec<Permutation>> {
        let mut out = Vec::new();
        self.for_each(kind, n, |p| {
            out.push(Permutation::from_vec_unchecked(p.to_vec()))
        })?;
        Ok(out)
    }

    /// Members of length `2n` avoiding every pattern in `set`.
    pub fn generate_avoiding(
        &self,
        kind: DumontKind,
        set: &PatternSet,
        n: usize,
    ) -> Result<Vec<Permutation>> {
        self.check(n)?;
        let mut out = Vec::new();
        let filter = PrefixFilter::new(set);
        Backtracker::new(kind, n).run(None, &|prefix| filter.keeps(prefix), &mut |p| {
            out.push(Permutation::from_vec_unchecked(p.to_vec()))
        });
        Ok(out)
    }

    pub fn count(&self, kind: DumontKind, n: usize) -> Result<u64> {
        self.count_matching(kind, n, |_| true)
    }

    pub fn count_avoiders(&self, kind: DumontKind, set: &PatternSet, n: usize) -> Result<u64> {
        let filter = PrefixFilter::new(set);
        self.count_pruned(kind, n, |prefix| filter.keeps(prefix), |_| true)
    }

    /// Counts members satisfying `pred` without materializing them. With more
    /// than one worker the search tree is split by first entry and the
    /// subtotals are summed.
    pub fn count_matching<F>(&self, kind: DumontKind, n: usize, pred: F) -> Result<u64>
    where
        F: Fn(&[u8]) -> bool + Sync,
    {
        self.count_pruned(kind, n, |_| true, pred)
    }

    /// `keep` sees every prefix and cuts the subtree below it when false.
    fn count_pruned<K, F>(&self, kind: DumontKind, n: usize, keep: K, pred: F) -> Result<u64>
    where
        K: Fn(&[u8]) -> bool + Sync,
        F: Fn(&[u8]) -> bool + Sync,
    {
        self.check(n)?;
        let tracker = Backtracker::new(kind, n);
        if self.threads <= 1 || n == 0 {
            let mut count = 0u64;
            tracker.run(None, &keep, &mut |p| count += pred(p) as u64);
            return Ok(count);
        }
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.threads)
            .build()
            .map_err(|e| Error::InternalInconsistency(e.to_string()))?;
        let firsts: Vec<u8> = (1..=2 * n as u8).collect();
        Ok(pool.install(|| {
            firsts
                .par_iter()
                .map(|&first| {
                    let mut count = 0u64;
                    tracker.run(Some(first), &keep, &mut |p| count += pred(p) as u64);
                    count
                })
                .sum()
        }))
    }
}

/// Prefix test for pruned searches. A prefix containing a pattern only has
/// extensions that contain it, and since the parent prefix already passed,
/// only occurrences ending at the newest entry need looking for.
struct PrefixFilter(Vec<Anchored>);

impl PrefixFilter {
    fn new(set: &PatternSet) -> Self {
        PrefixFilter(set.iter().map(|t| Anchored::new(t.values())).collect())
    }

    fn keeps(&self, prefix: &[u8]) -> bool {
        self.0.iter().all(|t| !t.matches(prefix))
    }
}

/// Members of length `2n`, lexicographically ordered, under the default cap.
pub fn generate(kind: DumontKind, n: usize) -> Result<Vec<Permutation>> {
    Enumerator::default().generate(kind, n)
}

pub fn count_avoiders(kind: DumontKind, set: &PatternSet, n: usize) -> Result<u64> {
    Enumerator::default().count_avoiders(kind, set, n)
}

/// Places values left to right, trying them in increasing order, and prunes
/// on the kind's local constraint at each position.
#[derive(Clone)]
struct Backtracker {
    kind: DumontKind,
    len: usize,
    /// Parity allowed in the last position (First: odd; DL1: even).
    terminal_parity: u8,
}

impl Backtracker {
    fn new(kind: DumontKind, n: usize) -> Self {
        Backtracker {
            kind,
            len: 2 * n,
            terminal_parity: terminal_parity(kind),
        }
    }

    fn full_mask(&self) -> u64 {
        if self.len == 0 {
            0
        } else {
            (u64::MAX >> (64 - self.len)) << 1
        }
    }

    /// Visits all members, or only those starting with `first`.
    fn run(&self, first: Option<u8>, keep: &dyn Fn(&[u8]) -> bool, visit: &mut dyn FnMut(&[u8])) {
        let mut buf = vec![0u8; self.len];
        if self.len == 0 {
            if first.is_none() {
                visit(&buf);
            }
            return;
        }
        let free = self.full_mask();
        match first {
            None => self.place(0, free, &mut buf, keep, visit),
            Some(v) => {
                let bit = 1u64 << v;
                if free & bit != 0 && self.admissible(0, v, free & !bit) {
                    buf[0] = v;
                    if keep(&buf[..1]) {
                        self.descend(1, free & !bit, &mut buf, keep, visit);
                    }
                }
            }
        }
    }

    fn descend(
        &self,
        pos: usize,
        free: u64,
        buf: &mut [u8],
        keep: &dyn Fn(&[u8]) -> bool,
        visit: &mut dyn FnMut(&[u8]),
    ) {
        if pos == self.len {
            visit(buf);
        } else {
            self.place(pos, free, buf, keep, visit);
        }
    }

    fn place(
        &self,
        pos: usize,
        free: u64,
        buf: &mut [u8],
        keep: &dyn Fn(&[u8]) -> bool,
        visit: &mut dyn FnMut(&[u8]),
    ) {
        let prev = if pos == 0 { None } else { Some(buf[pos - 1]) };
        let mut candidates = free;
        if let (Some(u), DumontKind::First | DumontKind::DumontLikeFirst) = (prev, self.kind) {
            // Restrict to the side the previous entry demands.
            candidates &= if u % 2 == 0 {
                (1u64 << u) - 1
            } else {
                !((1u64 << (u + 1)) - 1)
            };
        }
        while candidates != 0 {
            let v = candidates.trailing_zeros() as u8;
            candidates &= candidates - 1;
            let rest = free & !(1u64 << v);
            if self.admissible(pos, v, rest) {
                buf[pos] = v;
                if keep(&buf[..=pos]) {
                    self.descend(pos + 1, rest, buf, keep, visit);
                }
            }
        }
    }

    /// Whether `v` may sit at 0-based `pos` given the values still free
    /// afterwards.
    #[inline]
    fn admissible(&self, pos: usize, v: u8, rest: u64) -> bool {
        let last = pos + 1 == self.len;
        match self.kind {
            DumontKind::First | DumontKind::DumontLikeFirst => {
                if last {
                    v % 2 == self.terminal_parity
                } else if v.is_multiple_of(2) {
                    rest & ((1u64 << v) - 1) != 0
                } else {
                    rest & !((1u64 << (v + 1)) - 1) != 0
                }
            }
            DumontKind::Second | DumontKind::DumontLikeSecond => {
                position_allows(self.kind, pos + 1, v)
            }
        }
    }
}

/// Unsigned Genocchi numbers `G_2, G_4, ..., G_2k` from the Seidel triangle.
///
/// Row `i` of the triangle has `ceil(i / 2)` entries. Even rows are partial
/// sums of the previous row read left to right, odd rows partial sums read
/// right to left; the last entry of row `2k` is `G_2k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenocchiTable {
    values: Vec<num_bigint::BigUint>,
}

impl GenocchiTable {
    pub fn new(k_max: usize) -> Self {
        use num_bigint::BigUint;
        use num_traits::{One, Zero};

        let mut values = Vec::with_capacity(k_max);
        let mut row = vec![BigUint::one()];
        let mut i: usize = 1;
        while values.len() < k_max {
            i += 1;
            let width = i.div_ceil(2);
            let mut next = vec![BigUint::zero(); width];
            if i.is_multiple_of(2) {
                let mut acc = BigUint::zero();
                for (j, slot) in next.iter_mut().enumerate() {
                    if let Some(x) = row.get(j) {
                        acc += x;
                    }
                    *slot = acc.clone();
                }
                values.push(next[width - 1].clone());
            } else {
                let mut acc = BigUint::zero();
                for j in (0..width).rev() {
                    if let Some(x) = row.get(j) {
                        acc += x;
                    }
                    next[j] = acc.clone();
                }
            }
            row = next;
        }
        GenocchiTable { values }
    }

    /// `G_2k` for `1 <= k <= len()`.
    pub fn get(&self, k: usize) -> Option<&num_bigint::BigUint> {
        k.checked_sub(1).and_then(|i| self.values.get(i))
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Unsigned Genocchi number `G_2k`. `k = 0` is rejected.
pub fn genocchi(k: usize) -> Result<num_bigint::BigUint> {
    if k == 0 {
        return Err(Error::DomainError(
            "genocchi index must be at least 1".into(),
        ));
    }
    Ok(GenocchiTable::new(k)
        .get(k)
        .cloned()
        .expect("table has k entries"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn strings(v: &[Permutation]) -> Vec<String> {
        v.iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn membership_examples() {
        assert!(is_member(DumontKind::First, &p("2143")));
        assert!(!is_member(DumontKind::First, &p("3142")));
        assert!(is_member(DumontKind::Second, &p("4132")));
        assert!(!is_member(DumontKind::Second, &p("3421")));
        assert!(is_member(DumontKind::Second, &p("21")));
        for kind in DumontKind::ALL {
            assert!(is_member(kind, &Permutation::empty()));
            assert!(!is_member(kind, &p("1")));
        }
    }

    #[test]
    fn generate_small() {
        assert_eq!(
            strings(&generate(DumontKind::First, 2).unwrap()),
            ["2143", "3421", "4213"]
        );
        assert_eq!(
            strings(&generate(DumontKind::Second, 2).unwrap()),
            ["2143", "3142", "4132"]
        );
        assert_eq!(strings(&generate(DumontKind::First, 1).unwrap()), ["21"]);
        assert_eq!(
            generate(DumontKind::First, 0).unwrap(),
            vec![Permutation::empty()]
        );
        let d6 = strings(&generate(DumontKind::First, 3).unwrap());
        assert_eq!(d6.len(), 17);
        for s in ["436215", "562143", "563421", "564213"] {
            assert!(d6.contains(&s.to_string()));
        }
    }

    #[test]
    fn dumont_like_kinds_are_images() {
        for n in 0..=4 {
            let mut c: Vec<_> = generate(DumontKind::First, n)
                .unwrap()
                .iter()
                .map(Permutation::complement)
                .collect();
            c.sort();
            assert_eq!(generate(DumontKind::DumontLikeFirst, n).unwrap(), c);
            let mut rc: Vec<_> = generate(DumontKind::Second, n)
                .unwrap()
                .iter()
                .map(Permutation::reverse_complement)
                .collect();
            rc.sort();
            assert_eq!(generate(DumontKind::DumontLikeSecond, n).unwrap(), rc);
        }
    }

    #[test]
    fn cap_is_enforced() {
        let e = Enumerator::new().with_max_n(3);
        assert_eq!(
            e.generate(DumontKind::First, 4),
            Err(Error::LimitExceeded { n: 4, max: 3 })
        );
        assert!(e.count(DumontKind::Second, 3).is_ok());
    }

    #[test]
    fn parallel_count_matches_sequential() {
        let set = PatternSet::parse("2143").unwrap();
        let seq = Enumerator::new();
        let par = Enumerator::new().with_threads(4);
        for kind in DumontKind::ALL {
            for n in 0..=5 {
                assert_eq!(
                    seq.count_avoiders(kind, &set, n).unwrap(),
                    par.count_avoiders(kind, &set, n).unwrap()
                );
            }
        }
    }

    #[test]
    fn extend_examples() {
        assert_eq!(extend_to_odd(&p("21")).unwrap(), p("213"));
        assert_eq!(extend_to_odd(&Permutation::empty()).unwrap(), p("1"));
        assert_eq!(extend_to_odd(&p("2143")).unwrap(), p("21435"));
        assert_eq!(extend_to_odd(&p("213")), Err(Error::OddInput(3)));
    }

    #[test]
    fn genocchi_values() {
        let expected = [1u32, 1, 3, 17, 155, 2073, 38227, 929569, 28820619];
        let table = GenocchiTable::new(expected.len());
        for (k, &g) in (1..).zip(expected.iter()) {
            assert_eq!(table.get(k).unwrap(), &g.into(), "k = {k}");
            assert_eq!(genocchi(k).unwrap(), g.into());
        }
        assert!(genocchi(0).is_err());
        // Longer tables extend shorter ones.
        let long = GenocchiTable::new(20);
        assert_eq!(&long.values[..expected.len()], &table.values[..]);
    }

    #[test]
    fn count_examples() {
        let e = Enumerator::new();
        let set = |s: &str| PatternSet::parse(s).unwrap();
        assert_eq!(
            e.count_avoiders(DumontKind::First, &set("213"), 3).unwrap(),
            2
        );
        assert_eq!(
            e.count_avoiders(DumontKind::Second, &set("231"), 4)
                .unwrap(),
            8
        );
        assert_eq!(
            e.count_avoiders(DumontKind::First, &set("4213"), 4)
                .unwrap(),
            25
        );
    }
}
