//! Recursive shape templates.
//!
//! A template describes every member of size `2n` as a concatenation of fixed
//! entries and blocks; each block is a shifted (and possibly complemented)
//! member of some smaller family. [`matches_shape`] checks one level of that
//! decomposition, [`shape_instances`] builds every permutation the template
//! allows.

use std::collections::{BTreeSet, HashMap};

use crate::dumont::{is_member_values, DumontKind, Enumerator};
use crate::error::{Error, Result};
use crate::perm::{avoids_all, PatternSet, Permutation};

use super::theorem::TheoremId;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
enum Transform {
    Id,
    Complement,
    ReverseComplement,
}

impl Transform {
    /// All three are involutions, so this also undoes itself.
    fn apply(self, v: &[u8]) -> Vec<u8> {
        let top = v.len() as u8 + 1;
        match self {
            Transform::Id => v.to_vec(),
            Transform::Complement => v.iter().map(|&x| top - x).collect(),
            Transform::ReverseComplement => v.iter().rev().map(|&x| top - x).collect(),
        }
    }
}

/// A block family: Dumont kind plus the patterns its members avoid.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Family {
    pub kind: DumontKind,
    pub patterns: &'static str,
}

impl Family {
    fn pattern_set(self) -> PatternSet {
        PatternSet::parse(self.patterns).expect("registered patterns parse")
    }
}

#[derive(Clone, Debug)]
enum Item {
    Fixed(u8),
    Block {
        len: usize,
        offset: usize,
        transform: Transform,
        family: Family,
    },
}

#[derive(Clone, Debug, Default)]
struct Layout(Vec<Item>);

impl Layout {
    fn fixed(mut self, v: usize) -> Self {
        self.0.push(Item::Fixed(v as u8));
        self
    }

    /// Empty blocks are dropped.
    fn block(mut self, len: usize, offset: usize, transform: Transform, family: Family) -> Self {
        if len > 0 {
            self.0.push(Item::Block {
                len,
                offset,
                transform,
                family,
            });
        }
        self
    }
}

fn own_family(theorem: TheoremId) -> Family {
    let (kind, patterns) = theorem.family().expect("structural tags name a family");
    Family { kind, patterns }
}

/// Smallest `n` from which the template describes the whole family, or
/// `None` when the tag has no template.
pub fn shape_min_n(theorem: TheoremId) -> Option<usize> {
    use TheoremId::*;
    match theorem {
        D1_213 | D1_1342_4213 => Some(2),
        D1_2341_1423 => Some(3),
        D1_1342_1423 | D1_2341_2413 | D1_1342_2413 | D1_2413_3142 | D2_3142 => Some(1),
        _ => None,
    }
}

pub fn has_shape(theorem: TheoremId) -> bool {
    shape_min_n(theorem).is_some()
}

fn layouts(theorem: TheoremId, n: usize) -> Result<Vec<Layout>> {
    use TheoremId::*;
    use Transform::{Complement, Id, ReverseComplement};

    let min = shape_min_n(theorem).ok_or_else(|| Error::UnknownShape(theorem.tag().to_string()))?;
    if n < min {
        return Ok(Vec::new());
    }
    let own = own_family(theorem);
    let new = Layout::default;
    let mut out = Vec::new();
    match theorem {
        D1_213 => {
            let f231 = Family {
                kind: DumontKind::First,
                patterns: "231",
            };
            for k in 1..n {
                out.push(
                    new()
                        .fixed(2 * k + 1)
                        .block(2 * n - 2 * k - 2, 2 * k + 2, Complement, f231)
                        .fixed(2 * k + 2)
                        .block(2 * k - 2, 2, Complement, f231)
                        .fixed(2)
                        .fixed(1),
                );
            }
        }
        D1_1342_1423 => {
            for k in 1..n {
                out.push(
                    new()
                        .block(2 * n - 2 * k - 2, 2 * k, Id, own)
                        .fixed(2 * n - 1)
                        .fixed(2 * n)
                        .block(2 * k, 0, Id, own),
                );
            }
            for k in 0..n {
                out.push(
                    new()
                        .block(2 * n - 2 * k - 2, 2 * k, Id, own)
                        .fixed(2 * n)
                        .block(2 * k, 0, Id, own)
                        .fixed(2 * n - 1),
                );
            }
        }
        D1_2341_2413 => {
            for k in 0..n.saturating_sub(1) {
                out.push(
                    new()
                        .block(2 * k, 0, Id, own)
                        .fixed(2 * n - 1)
                        .fixed(2 * n)
                        .block(2 * n - 2 * k - 2, 2 * k, Id, own),
                );
            }
            for k in 0..n {
                out.push(
                    new()
                        .block(2 * k, 0, Id, own)
                        .fixed(2 * n)
                        .block(2 * n - 2 * k - 2, 2 * k, Id, own)
                        .fixed(2 * n - 1),
                );
            }
        }
        D1_1342_2413 => {
            for k in 1..n {
                out.push(
                    new()
                        .block(2 * n - 2 * k - 2, 2 * k, Id, own)
                        .fixed(2 * n - 1)
                        .fixed(2 * n)
                        .block(2 * k, 0, Id, own),
                );
            }
            // With a nonempty low block in front, any 231 in the high block
            // would complete a 1342, so the high block avoids 231 as well.
            let tail = Family {
                kind: DumontKind::First,
                patterns: "231,1342,2413",
            };
            for k in 0..n {
                out.push(
                    new()
                        .block(2 * k, 0, Id, own)
                        .fixed(2 * n)
                        .block(
                            2 * n - 2 * k - 2,
                            2 * k,
                            Id,
                            if k == 0 { own } else { tail },
                        )
                        .fixed(2 * n - 1),
                );
            }
        }
        D1_2341_1423 => {
            out.push(
                new()
                    .fixed(2 * n - 1)
                    .fixed(2 * n)
                    .block(2 * n - 2, 0, Id, own),
            );
            out.push(
                new()
                    .block(2 * n - 4, 0, Id, own)
                    .fixed(2 * n - 1)
                    .fixed(2 * n)
                    .fixed(2 * n - 2)
                    .fixed(2 * n - 3),
            );
            out.push(
                new()
                    .fixed(2 * n)
                    .block(2 * n - 2, 0, Id, own)
                    .fixed(2 * n - 1),
            );
            out.push(
                new()
                    .block(2 * n - 2, 0, Id, own)
                    .fixed(2 * n)
                    .fixed(2 * n - 1),
            );
            out.push(
                new()
                    .fixed(2 * n - 2)
                    .fixed(2 * n - 3)
                    .fixed(2 * n)
                    .block(2 * n - 4, 0, Id, own)
                    .fixed(2 * n - 1),
            );
        }
        D1_1342_4213 => {
            out.push(new().block(2 * n - 2, 2, Complement, own).fixed(2).fixed(1));
            out.push(
                new()
                    .block(2 * n - 2, 0, Id, own)
                    .fixed(2 * n)
                    .fixed(2 * n - 1),
            );
        }
        D2_3142 => {
            for k in 1..=n {
                out.push(
                    new()
                        .fixed(2 * k)
                        .fixed(1)
                        .block(2 * k - 2, 1, ReverseComplement, own)
                        .block(2 * n - 2 * k, 2 * k, Id, own),
                );
            }
        }
        D1_2413_3142 => {
            for k in 1..=n {
                let mut lens = Vec::new();
                alternating_blocks(2 * k - 2, 2 * n - 2 * k, &mut lens, &mut |lens| {
                    out.push(alternating_layout(own, k, lens));
                });
            }
        }
        _ => unreachable!("shape_min_n covers exactly the templated tags"),
    }
    Ok(out)
}

/// Enumerates block sizes `l_1, l_2, l_3, ...` where odd-indexed blocks use
/// up `low` entries and even-indexed ones `high`. The first two may be empty,
/// later ones may not; all sizes are even.
fn alternating_blocks(
    low: usize,
    high: usize,
    lens: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize]),
) {
    if low == 0 && high == 0 {
        emit(lens);
        return;
    }
    let index = lens.len() + 1;
    let rest = if index % 2 == 1 { low } else { high };
    let min = if index <= 2 { 0 } else { 2 };
    let mut len = min;
    while len <= rest {
        lens.push(len);
        if index % 2 == 1 {
            alternating_blocks(low - len, high, lens, emit);
        } else {
            alternating_blocks(low, high - len, lens, emit);
        }
        lens.pop();
        len += 2;
    }
}

/// `(..., b_3, b_2, 2k, b_1, 2k - 1)`: odd blocks fill `1..2k-2` from the
/// top down, even blocks fill `2k+1..2n` from the bottom up and are
/// complemented.
fn alternating_layout(own: Family, k: usize, lens: &[usize]) -> Layout {
    let mut low_top = 2 * k - 2;
    let mut high_bottom = 2 * k;
    let mut blocks = Vec::with_capacity(lens.len());
    for (i, &len) in lens.iter().enumerate() {
        if i % 2 == 0 {
            low_top -= len;
            blocks.push((len, low_top, Transform::Id));
        } else {
            blocks.push((len, high_bottom, Transform::Complement));
            high_bottom += len;
        }
    }
    let mut layout = Layout::default();
    for &(len, offset, t) in blocks.iter().skip(1).rev() {
        layout = layout.block(len, offset, t, own);
    }
    layout = layout.fixed(2 * k);
    if let Some(&(len, offset, t)) = blocks.first() {
        layout = layout.block(len, offset, t, own);
    }
    layout.fixed(2 * k - 1)
}

struct Membership {
    sets: HashMap<Family, PatternSet>,
}

impl Membership {
    fn new() -> Self {
        Membership {
            sets: HashMap::new(),
        }
    }

    fn contains(&mut self, family: Family, v: &[u8]) -> bool {
        let set = self
            .sets
            .entry(family)
            .or_insert_with(|| family.pattern_set());
        is_member_values(family.kind, v) && avoids_all(v, set)
    }
}

fn matches_layout(layout: &Layout, p: &[u8], members: &mut Membership) -> bool {
    let mut pos = 0;
    for item in &layout.0 {
        match *item {
            Item::Fixed(v) => {
                if p.get(pos) != Some(&v) {
                    return false;
                }
                pos += 1;
            }
            Item::Block {
                len,
                offset,
                transform,
                family,
            } => {
                let Some(segment) = p.get(pos..pos + len) else {
                    return false;
                };
                if segment
                    .iter()
                    .any(|&x| (x as usize) <= offset || (x as usize) > offset + len)
                {
                    return false;
                }
                let shifted: Vec<u8> = segment.iter().map(|&x| x - offset as u8).collect();
                if !members.contains(family, &transform.apply(&shifted)) {
                    return false;
                }
                pos += len;
            }
        }
    }
    pos == p.len()
}

/// Whether `p` decomposes according to the tag's template at top level,
/// with each block checked for membership in its family.
pub fn matches_shape(theorem: TheoremId, p: &Permutation) -> Result<bool> {
    if !has_shape(theorem) {
        return Err(Error::UnknownShape(theorem.tag().to_string()));
    }
    if !p.len().is_multiple_of(2) {
        return Ok(false);
    }
    let mut members = Membership::new();
    Ok(layouts(theorem, p.len() / 2)?
        .iter()
        .any(|l| matches_layout(l, p.values(), &mut members)))
}

/// Members of block families, generated once per size.
pub(crate) struct FamilyCache<'a> {
    enumerator: &'a Enumerator,
    members: HashMap<(Family, usize), Vec<Vec<u8>>>,
}

impl<'a> FamilyCache<'a> {
    pub(crate) fn new(enumerator: &'a Enumerator) -> Self {
        FamilyCache {
            enumerator,
            members: HashMap::new(),
        }
    }

    /// Members of size `len` (an even number).
    pub(crate) fn get(&mut self, family: Family, len: usize) -> Result<&[Vec<u8>]> {
        if !self.members.contains_key(&(family, len)) {
            let list = self
                .enumerator
                .generate_avoiding(family.kind, &family.pattern_set(), len / 2)?
                .into_iter()
                .map(Permutation::into_values)
                .collect();
            self.members.insert((family, len), list);
        }
        Ok(&self.members[&(family, len)])
    }
}

/// Every permutation produced by filling the template at size `2n` with
/// family members, in sorted order and without repeats.
pub fn shape_instances(
    enumerator: &Enumerator,
    theorem: TheoremId,
    n: usize,
) -> Result<Vec<Permutation>> {
    let mut cache = FamilyCache::new(enumerator);
    shape_instances_cached(&mut cache, theorem, n)
}

pub(crate) fn shape_instances_cached(
    cache: &mut FamilyCache<'_>,
    theorem: TheoremId,
    n: usize,
) -> Result<Vec<Permutation>> {
    let mut out = BTreeSet::new();
    for layout in layouts(theorem, n)? {
        let mut pools = Vec::new();
        for item in &layout.0 {
            if let Item::Block { len, family, .. } = *item {
                pools.push(cache.get(family, len)?.to_vec());
            }
        }
        let mut buf = Vec::with_capacity(2 * n);
        fill(&layout.0, &pools, 0, &mut buf, &mut out);
    }
    Ok(out
        .into_iter()
        .map(Permutation::from_vec_unchecked)
        .collect())
}

fn fill(
    items: &[Item],
    pools: &[Vec<Vec<u8>>],
    pool: usize,
    buf: &mut Vec<u8>,
    out: &mut BTreeSet<Vec<u8>>,
) {
    let Some((item, rest)) = items.split_first() else {
        out.insert(buf.clone());
        return;
    };
    match *item {
        Item::Fixed(v) => {
            buf.push(v);
            fill(rest, pools, pool, buf, out);
            buf.pop();
        }
        Item::Block {
            len,
            offset,
            transform,
            ..
        } => {
            for member in &pools[pool] {
                let start = buf.len();
                buf.extend(
                    transform
                        .apply(member)
                        .into_iter()
                        .map(|x| x + offset as u8),
                );
                fill(rest, pools, pool + 1, buf, out);
                buf.truncate(start);
            }
            debug_assert!(pools[pool].iter().all(|m| m.len() == len));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        assert!(matches_shape(TheoremId::D1_213, &p("356421")).unwrap());
        assert!(matches_shape(TheoremId::D1_213, &p("563421")).unwrap());
        assert!(!matches_shape(TheoremId::D1_213, &p("342156")).unwrap());
        assert!(!matches_shape(TheoremId::D1_213, &p("214365")).unwrap());
        assert!(matches_shape(TheoremId::D2_3142, &p("2143")).unwrap());
        assert!(matches_shape(TheoremId::D2_3142, &p("4132")).unwrap());
        assert!(matches_shape(TheoremId::D1_2413_3142, &p("356421")).unwrap());
        assert!(matches_shape(TheoremId::D1_1342_4213, &p("3421")).unwrap());
        assert!(matches!(
            matches_shape(TheoremId::SinglePatternTable, &p("21")),
            Err(Error::UnknownShape(_))
        ));
    }

    #[test]
    fn instances_equal_family_small() {
        let e = Enumerator::default();
        for &t in TheoremId::ALL.iter().filter(|t| has_shape(**t)) {
            let (kind, pats) = t.family().unwrap();
            let set = PatternSet::parse(pats).unwrap();
            for n in shape_min_n(t).unwrap()..=4 {
                let family = e.generate_avoiding(kind, &set, n).unwrap();
                assert_eq!(shape_instances(&e, t, n).unwrap(), family, "{t} n={n}");
                for m in &family {
                    assert!(matches_shape(t, m).unwrap(), "{t}: {m}");
                }
            }
        }
    }
}
