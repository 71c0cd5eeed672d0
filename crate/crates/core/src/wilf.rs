//! Grouping single patterns by their avoidance counts.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::dumont::{DumontKind, Enumerator};
use crate::error::{Error, Result};
use crate::perm::{contains, PatternSet, Permutation};

/// Patterns whose counts agree for every `n` in the checked range.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WilfClass {
    pub fingerprint: Vec<u64>,
    pub members: Vec<PatternSet>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WilfClassTable {
    pub kind: DumontKind,
    pub pattern_length: usize,
    pub n_max: usize,
    /// Sorted by fingerprint.
    pub classes: Vec<WilfClass>,
}

impl WilfClassTable {
    /// Class holding the single pattern `p`, if it was part of the input.
    pub fn class_of(&self, p: &Permutation) -> Option<&WilfClass> {
        self.classes
            .iter()
            .find(|c| c.members.iter().any(|m| m.iter().eq(std::iter::once(p))))
    }

    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("table serializes");
        serde_json::to_string(&value).expect("value serializes")
    }
}

fn all_permutations(len: usize) -> Vec<Permutation> {
    fn go(len: usize, cur: &mut Vec<u8>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
        if cur.len() == len {
            out.push(Permutation::new(cur.clone()).expect("bijection"));
            return;
        }
        for v in 1..=len {
            if !used[v] {
                used[v] = true;
                cur.push(v as u8);
                go(len, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(len, &mut Vec::new(), &mut vec![false; len + 1], &mut out);
    out
}

/// Counts avoiders of every pattern of length 3 or 4 for `n = 0..=n_max`
/// and groups patterns with identical count sequences.
pub fn wilf_classes(
    enumerator: &Enumerator,
    kind: DumontKind,
    pattern_length: usize,
    n_max: usize,
) -> Result<WilfClassTable> {
    if !(3..=4).contains(&pattern_length) {
        return Err(Error::DomainError(format!(
            "pattern length must be 3 or 4, got {pattern_length}"
        )));
    }
    enumerator.check(n_max)?;
    let patterns = all_permutations(pattern_length);
    let mut fingerprints = vec![Vec::with_capacity(n_max + 1); patterns.len()];
    for n in 0..=n_max {
        let mut counts = vec![0u64; patterns.len()];
        enumerator.for_each(kind, n, |host| {
            for (c, pat) in counts.iter_mut().zip(&patterns) {
                if !contains(host, pat.values()) {
                    *c += 1;
                }
            }
        })?;
        for (f, c) in fingerprints.iter_mut().zip(counts) {
            f.push(c);
        }
    }
    let mut groups: BTreeMap<Vec<u64>, Vec<PatternSet>> = BTreeMap::new();
    for (f, p) in fingerprints.into_iter().zip(patterns) {
        groups
            .entry(f)
            .or_default()
            .push(PatternSet::single(p).expect("nonempty pattern"));
    }
    Ok(WilfClassTable {
        kind,
        pattern_length,
        n_max,
        classes: groups
            .into_iter()
            .map(|(fingerprint, members)| WilfClass {
                fingerprint,
                members,
            })
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn first_kind_length_three() {
        let t = wilf_classes(&Enumerator::default(), DumontKind::First, 3, 4).unwrap();
        let fp = |s: &str| t.class_of(&p(s)).unwrap().fingerprint.clone();
        assert_eq!(fp("132"), [1, 1, 2, 5, 14]);
        assert_eq!(fp("231"), fp("132"));
        assert_eq!(fp("312"), fp("132"));
        assert_eq!(t.class_of(&p("132")).unwrap().members.len(), 3);
        assert_eq!(fp("213"), [1, 1, 1, 2, 5]);
        assert_eq!(fp("321"), [1, 1, 1, 1, 1]);
        assert_eq!(fp("123"), [1, 1, 3, 4, 4]);
        let mut sorted = t
            .classes
            .iter()
            .map(|c| c.fingerprint.clone())
            .collect::<Vec<_>>();
        sorted.sort();
        assert_eq!(
            sorted,
            t.classes
                .iter()
                .map(|c| c.fingerprint.clone())
                .collect::<Vec<_>>()
        );
    }

    #[test]
    fn second_kind_length_three() {
        let t = wilf_classes(&Enumerator::default(), DumontKind::Second, 3, 3).unwrap();
        let fp = |s: &str| t.class_of(&p(s)).unwrap().fingerprint.clone();
        assert_eq!(fp("321"), [1, 1, 2, 5]);
        assert_eq!(fp("231"), [1, 1, 2, 4]);
        assert_eq!(fp("312"), [1, 1, 1, 1]);
        assert_eq!(fp("123")[3], 0);
        assert_eq!(fp("213")[3], 0);
        assert_eq!(fp("132")[2], 0);
    }

    #[test]
    fn rejects_other_lengths() {
        assert!(wilf_classes(&Enumerator::default(), DumontKind::First, 5, 2).is_err());
    }
}
