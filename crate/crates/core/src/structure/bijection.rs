//! Explicit bijections: second-kind 231-avoiders to compositions through
//! their cycle structure, and second-kind 3142-avoiders to Dyck paths.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::dumont::{is_member, DumontKind};
use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Step {
    Up,
    Down,
}

/// A balanced Up/Down word that never dips below the axis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut height = 0i64;
        for (i, s) in steps.iter().enumerate() {
            height += match s {
                Step::Up => 1,
                Step::Down => -1,
            };
            if height < 0 {
                return Err(Error::InvalidDyckPath(format!(
                    "dips below the axis at step {}",
                    i + 1
                )));
            }
        }
        if height != 0 {
            return Err(Error::InvalidDyckPath(format!("ends at height {height}")));
        }
        Ok(DyckPath { steps })
    }

    pub fn empty() -> Self {
        DyckPath { steps: Vec::new() }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Number of Up steps.
    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    /// All Dyck paths with `n` Up steps, in lexicographic order (Up < Down).
    pub fn all(n: usize) -> Vec<DyckPath> {
        fn go(up: usize, down: usize, n: usize, cur: &mut Vec<Step>, out: &mut Vec<DyckPath>) {
            if cur.len() == 2 * n {
                out.push(DyckPath { steps: cur.clone() });
                return;
            }
            if up < n {
                cur.push(Step::Up);
                go(up + 1, down, n, cur, out);
                cur.pop();
            }
            if down < up {
                cur.push(Step::Down);
                go(up, down + 1, n, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(0, 0, n, &mut Vec::new(), &mut out);
        out
    }

    /// 1-based indices of Up steps leaving the axis and of Down steps
    /// returning to it.
    pub fn axis_contacts(&self) -> (Vec<usize>, Vec<usize>) {
        let (mut leaving, mut returning) = (Vec::new(), Vec::new());
        let mut h = 0;
        for (i, s) in self.steps.iter().enumerate() {
            match s {
                Step::Up => {
                    if h == 0 {
                        leaving.push(i + 1);
                    }
                    h += 1;
                }
                Step::Down => {
                    h -= 1;
                    if h == 0 {
                        returning.push(i + 1);
                    }
                }
            }
        }
        (leaving, returning)
    }

    /// Splits `U A D B` at the first return to the axis into `(A, B)`.
    fn first_return(&self) -> Option<(DyckPath, DyckPath)> {
        if self.steps.is_empty() {
            return None;
        }
        let (_, returning) = self.axis_contacts();
        let r = returning[0];
        Some((
            DyckPath {
                steps: self.steps[1..r - 1].to_vec(),
            },
            DyckPath {
                steps: self.steps[r..].to_vec(),
            },
        ))
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::Up => "U",
                Step::Down => "D",
            })?;
        }
        Ok(())
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .trim()
            .chars()
            .map(|c| match c {
                'U' | 'u' => Ok(Step::Up),
                'D' | 'd' => Ok(Step::Down),
                _ => Err(Error::InvalidDyckPath(format!(
                    "unexpected character {c:?}"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        DyckPath::new(steps)
    }
}

/// An ordered sequence of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeakComposition {
    parts: Vec<usize>,
    total: usize,
}

impl WeakComposition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidComposition("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidComposition("parts must be positive".into()));
        }
        let total = parts.iter().sum();
        Ok(WeakComposition { parts, total })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.total
    }

    /// Every composition of `n >= 1`, ordered lexicographically by parts.
    pub fn all(n: usize) -> Vec<WeakComposition> {
        fn go(rest: usize, cur: &mut Vec<usize>, out: &mut Vec<WeakComposition>) {
            if rest == 0 {
                out.push(WeakComposition::new(cur.clone()).expect("positive parts"));
                return;
            }
            for part in 1..=rest {
                cur.push(part);
                go(rest - part, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            go(n, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl fmt::Display for WeakComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        f.write_str(&parts.join("+"))
    }
}

impl FromStr for WeakComposition {
    type Err = Error;

    /// `"1+3"`, optionally prefixed by the total as in `"4=1+3"`.
    fn from_str(s: &str) -> Result<Self> {
        let (declared, body) = match s.split_once('=') {
            Some((t, b)) => (Some(t.trim()), b),
            None => (None, s),
        };
        let parts = body
            .split('+')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidComposition(format!("bad part {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let c = WeakComposition::new(parts)?;
        if let Some(t) = declared {
            if t.parse::<usize>().ok() != Some(c.total) {
                return Err(Error::InvalidComposition(format!(
                    "parts do not sum to {t}"
                )));
            }
        }
        Ok(c)
    }
}

/// Disjoint cycles, each listed from its largest element, ordered by their
/// smallest element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleDecomposition {
    cycles: Vec<Vec<u8>>,
}

impl CycleDecomposition {
    pub fn cycles(&self) -> &[Vec<u8>] {
        &self.cycles
    }

    pub fn to_permutation(&self) -> Permutation {
        let len = self.cycles.iter().map(Vec::len).sum();
        let mut values = vec![0u8; len];
        for cycle in &self.cycles {
            for (i, &v) in cycle.iter().enumerate() {
                values[v as usize - 1] = cycle[(i + 1) % cycle.len()];
            }
        }
        Permutation::from_vec_unchecked(values)
    }
}

impl fmt::Display for CycleDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let compact = self.cycles.iter().map(Vec::len).sum::<usize>() <= 9;
        for cycle in &self.cycles {
            let items: Vec<String> = cycle.iter().map(|v| v.to_string()).collect();
            write!(f, "({})", items.join(if compact { "" } else { " " }))?;
        }
        Ok(())
    }
}

pub fn cycle_decomposition(p: &Permutation) -> CycleDecomposition {
    let mut seen = vec![false; p.len() + 1];
    let mut cycles = Vec::new();
    for start in 1..=p.len() {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            cycle.push(i as u8);
            i = p.at(i) as usize;
        }
        let top = cycle
            .iter()
            .enumerate()
            .max_by_key(|(_, &v)| v)
            .map(|(i, _)| i)
            .unwrap();
        cycle.rotate_left(top);
        cycles.push(cycle);
    }
    CycleDecomposition { cycles }
}

fn second_kind_avoiding(p: &Permutation, pattern: &str) -> Result<()> {
    let pat: Permutation = pattern.parse().expect("static pattern");
    if is_member(DumontKind::Second, p) && p.avoids(&pat) {
        Ok(())
    } else {
        Err(Error::NotInFamily {
            perm: p.to_string(),
            family: format!("D2({pattern})"),
        })
    }
}

/// Reads off one part per non-trivial cycle `(2l, 2l-2, ..., 2k, 2k-1)`,
/// of size `l - k + 1`; fixed points are dropped.
pub fn d2_231_to_composition(p: &Permutation) -> Result<WeakComposition> {
    second_kind_avoiding(p, "231")?;
    if p.is_empty() {
        return Err(Error::InvalidComposition(
            "the empty permutation has no parts".into(),
        ));
    }
    let mut parts = Vec::new();
    for cycle in cycle_decomposition(p).cycles {
        if cycle.len() == 1 {
            if cycle[0] % 2 == 0 {
                return Err(Error::MalformedStructure(format!(
                    "even fixed point {}",
                    cycle[0]
                )));
            }
            continue;
        }
        let top = cycle[0];
        let shaped = top % 2 == 0
            && cycle[..cycle.len() - 1]
                .iter()
                .enumerate()
                .all(|(i, &v)| v as usize + 2 * i == top as usize)
            && cycle[cycle.len() - 1] + 1 == cycle[cycle.len() - 2];
        if !shaped {
            return Err(Error::MalformedStructure(format!(
                "unexpected cycle {cycle:?} in {p}"
            )));
        }
        parts.push(cycle.len() - 1);
    }
    WeakComposition::new(parts)
}

/// Inverse of [`d2_231_to_composition`]: part `t_i` spanning pairs
/// `k..=l` becomes the cycle `(2l, 2l-2, ..., 2k, 2k-1)` followed by the
/// fixed points `2k+1, 2k+3, ..., 2l-1`.
pub fn composition_to_d2_231(c: &WeakComposition) -> Result<Permutation> {
    if c.parts.contains(&0) || c.parts.is_empty() {
        return Err(Error::InvalidComposition(c.to_string()));
    }
    if 2 * c.total > u8::MAX as usize {
        return Err(Error::InvalidComposition(format!(
            "total {} too large",
            c.total
        )));
    }
    let mut values = vec![0u8; 2 * c.total];
    let mut before = 0usize;
    for &part in &c.parts {
        let (k, l) = (before + 1, before + part);
        // 2l -> 2l-2 -> ... -> 2k -> 2k-1 -> 2l
        for j in (k + 1..=l).rev() {
            values[2 * j - 1] = (2 * j - 2) as u8;
        }
        values[2 * k - 1] = (2 * k - 1) as u8;
        values[2 * k - 2] = (2 * l) as u8;
        for j in k + 1..=l {
            values[2 * j - 2] = (2 * j - 1) as u8;
        }
        before = l;
    }
    Permutation::new(values)
}

/// Top-level split `p = (2k, 1, rc(left) + 1, right + 2k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition3142 {
    pub k: usize,
    pub left: Permutation,
    pub right: Permutation,
}

pub fn d2_3142_decompose(p: &Permutation) -> Result<Decomposition3142> {
    second_kind_avoiding(p, "3142")?;
    if p.is_empty() {
        return Err(Error::DomainError(
            "the empty permutation has no decomposition".into(),
        ));
    }
    split_3142(p.values())
}

fn split_3142(v: &[u8]) -> Result<Decomposition3142> {
    let malformed =
        |why: &str| Error::MalformedStructure(format!("{}: {why}", crate::perm::format_values(v)));
    let first = v[0] as usize;
    if !first.is_multiple_of(2) {
        return Err(malformed("first entry is odd"));
    }
    if v[1] != 1 {
        return Err(malformed("second entry is not 1"));
    }
    let k = first / 2;
    let middle = &v[2..first];
    if middle.iter().any(|&x| x < 2 || x as usize >= first) {
        return Err(malformed("middle segment out of range"));
    }
    let tail = &v[first..];
    if tail.iter().any(|&x| (x as usize) <= first) {
        return Err(malformed("tail out of range"));
    }
    let left = Permutation::from_vec_unchecked(middle.iter().map(|&x| x - 1).collect())
        .reverse_complement();
    let right = Permutation::from_vec_unchecked(tail.iter().map(|&x| x - first as u8).collect());
    Ok(Decomposition3142 { k, left, right })
}

/// `phi(empty) = empty`, `phi(p) = U phi(left) D phi(right)`.
pub fn d2_3142_to_dyck(p: &Permutation) -> Result<DyckPath> {
    second_kind_avoiding(p, "3142")?;
    let mut steps = Vec::with_capacity(p.len());
    to_dyck(p.values(), &mut steps)?;
    Ok(DyckPath { steps })
}

fn to_dyck(v: &[u8], steps: &mut Vec<Step>) -> Result<()> {
    if v.is_empty() {
        return Ok(());
    }
    let d = split_3142(v)?;
    steps.push(Step::Up);
    to_dyck(d.left.values(), steps)?;
    steps.push(Step::Down);
    to_dyck(d.right.values(), steps)
}

pub fn dyck_to_d2_3142(d: &DyckPath) -> Result<Permutation> {
    // Re-validate: the path may have been built from unchecked steps.
    let d = DyckPath::new(d.steps.clone())?;
    if d.steps.len() > u8::MAX as usize {
        return Err(Error::InvalidDyckPath("path too long".into()));
    }
    Ok(Permutation::from_vec_unchecked(from_dyck(&d)))
}

fn from_dyck(d: &DyckPath) -> Vec<u8> {
    let Some((inner, rest)) = d.first_return() else {
        return Vec::new();
    };
    let left = Permutation::from_vec_unchecked(from_dyck(&inner)).reverse_complement();
    let right = from_dyck(&rest);
    let first = 2 * (inner.semilength() + 1);
    let mut out = Vec::with_capacity(d.steps.len());
    out.push(first as u8);
    out.push(1);
    out.extend(left.values().iter().map(|&x| x + 1));
    out.extend(right.iter().map(|&x| x + first as u8));
    out
}
