//! Direct constructions of the families that have only a handful of members.

use super::theorem::TheoremId;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// `(2, 1, 4, 3, ..., 2n, 2n - 1)`.
fn adjacent_swaps(n: usize) -> Vec<u8> {
    (1..=n)
        .flat_map(|i| [2 * i as u8, 2 * i as u8 - 1])
        .collect()
}

/// `(2n - 1, 2n, 2n - 3, 2n - 2, ..., 2m + 1, 2m + 2)`: the pairs above `2m`.
fn rising_pairs(n: usize, m: usize) -> Vec<u8> {
    (m + 1..=n)
        .rev()
        .flat_map(|i| [2 * i as u8 - 1, 2 * i as u8])
        .collect()
}

fn with_prefix(prefix: &[u8], tails: &[&str]) -> Vec<Vec<u8>> {
    tails
        .iter()
        .map(|t| {
            let mut v = prefix.to_vec();
            v.extend(t.bytes().map(|b| b - b'0'));
            v
        })
        .collect()
}

/// `pi_n = (pi_{n-2} + 2, 2n - 1, 2n, 2, 1)`, `pi_0 = empty`, `pi_1 = 21`.
fn nested_132_312(n: usize) -> Vec<u8> {
    match n {
        0 => Vec::new(),
        1 => vec![2, 1],
        _ => {
            let mut v: Vec<u8> = nested_132_312(n - 2).into_iter().map(|x| x + 2).collect();
            v.extend([2 * n as u8 - 1, 2 * n as u8, 2, 1]);
            v
        }
    }
}

/// The members of a family with an explicit description, sorted.
pub fn canonical_avoider(family: TheoremId, n: usize) -> Result<Vec<Permutation>> {
    use TheoremId::*;
    if n == 0 {
        return Err(Error::DomainError("n must be positive".into()));
    }
    if 2 * n > u8::MAX as usize {
        return Err(Error::DomainError(format!("n = {n} too large")));
    }
    let m = n as u8;
    let sets: Vec<Vec<u8>> = match family {
        D1_321 | D2_312 | Pair3D2_231_321 | Pair3_231_312 | D1_231_4213 => vec![adjacent_swaps(n)],
        Pair3_132_231 => {
            let mut v: Vec<u8> = (1..=m).rev().map(|i| 2 * i).collect();
            v.extend((0..m).map(|i| 2 * i + 1));
            vec![v]
        }
        Pair3_132_312 => vec![nested_132_312(n)],
        Pair3_213_312 => {
            let mut v: Vec<u8> = (2..=m).map(|i| 2 * i - 1).collect();
            v.extend((1..=m).rev().map(|i| 2 * i));
            v.push(1);
            vec![v]
        }
        Pair3_123_213 | Pair3_132_213 => {
            let mut v = rising_pairs(n, 1);
            v.extend([2, 1]);
            vec![v]
        }
        Pair3_213_231Empty => {
            if n == 1 {
                vec![vec![2, 1]]
            } else {
                Vec::new()
            }
        }
        Pair3_123_132Two => {
            if n == 1 {
                vec![vec![2, 1]]
            } else {
                with_prefix(&rising_pairs(n, 2), &["3421", "4213"])
            }
        }
        D1_123 => match n {
            1 => vec![vec![2, 1]],
            2 => with_prefix(&[], &["2143", "3421", "4213"]),
            _ => with_prefix(
                &rising_pairs(n, 3),
                &["436215", "562143", "563421", "564213"],
            ),
        },
        _ => return Err(Error::UnknownFamily(family.tag().to_string())),
    };
    let mut out: Vec<Permutation> = sets
        .into_iter()
        .map(Permutation::from_vec_unchecked)
        .collect();
    out.sort();
    Ok(out)
}

pub fn has_canonical(family: TheoremId) -> bool {
    canonical_avoider(family, 1).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dumont::Enumerator;
    use crate::perm::PatternSet;

    fn strings(v: Vec<Permutation>) -> Vec<String> {
        v.iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn examples() {
        assert_eq!(
            strings(canonical_avoider(TheoremId::D1_321, 3).unwrap()),
            ["214365"]
        );
        assert_eq!(
            strings(canonical_avoider(TheoremId::Pair3_132_231, 3).unwrap()),
            ["642135"]
        );
        assert_eq!(
            strings(canonical_avoider(TheoremId::Pair3_213_312, 3).unwrap()),
            ["356421"]
        );
        assert_eq!(
            strings(canonical_avoider(TheoremId::Pair3_132_312, 4).unwrap()),
            ["56437821"]
        );
        assert_eq!(
            strings(canonical_avoider(TheoremId::Pair3_123_132Two, 4).unwrap()),
            ["78563421", "78564213"]
        );
        assert!(matches!(
            canonical_avoider(TheoremId::D2_3142, 2),
            Err(Error::UnknownFamily(_))
        ));
    }

    #[test]
    fn agree_with_search() {
        let e = Enumerator::default();
        for &t in TheoremId::ALL.iter().filter(|t| has_canonical(**t)) {
            let (kind, pats) = t.family().unwrap();
            let set = PatternSet::parse(pats).unwrap();
            for n in 1..=5 {
                assert_eq!(
                    canonical_avoider(t, n).unwrap(),
                    e.generate_avoiding(kind, &set, n).unwrap(),
                    "{t} n={n}"
                );
            }
        }
    }
}
