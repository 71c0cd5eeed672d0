use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::dumont::DumontKind;
use crate::error::{Error, Result};
use crate::perm::PatternSet;

macro_rules! theorem_ids {
    ($($variant:ident => $tag:literal,)*) => {
        /// One registered enumerative claim.
        #[allow(non_camel_case_types)]
        #[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum TheoremId {
            $($variant,)*
        }

        impl TheoremId {
            pub const ALL: &'static [TheoremId] = &[$(TheoremId::$variant,)*];

            /// Upper-case tag, e.g. `D2_3142`.
            pub fn tag(self) -> &'static str {
                match self {
                    $(TheoremId::$variant => $tag,)*
                }
            }
        }
    };
}

theorem_ids! {
    CatalanD1_132 => "MANSOUR_CATALAN_132",
    CatalanD1_231 => "MANSOUR_CATALAN_231",
    CatalanD1_312 => "MANSOUR_CATALAN_312",
    CatalanD2_321 => "MANSOUR_CATALAN_D2_321",
    D1_213 => "D1_213",
    D2_231 => "D2_231",
    D1_321 => "D1_321",
    D2_312 => "D2_312",
    D1_123 => "D1_123",
    D2Empty123 => "D2_EMPTY_123",
    D2Empty213 => "D2_EMPTY_213",
    D2Empty132 => "D2_EMPTY_132",
    Pair3_132_231 => "PAIR3_132_231",
    Pair3_132_312 => "PAIR3_132_312",
    Pair3_213_312 => "PAIR3_213_312",
    Pair3_123_213 => "PAIR3_123_213",
    Pair3_132_213 => "PAIR3_132_213",
    Pair3D2_231_321 => "PAIR3_D2_231_321",
    Pair3_231_312 => "PAIR3_231_312",
    Pair3_213_231Empty => "PAIR3_213_231_EMPTY",
    Pair3_123_132Two => "PAIR3_123_132_TWO",
    D2_3142 => "D2_3142",
    ConjD2_4132 => "CONJ_D2_4132",
    Lemma4213_1342 => "LEMMA_4213_1342",
    D1_1342_1423 => "D1_1342_1423",
    D1_2341_2413 => "D1_2341_2413",
    D1_1342_2413 => "D1_1342_2413",
    D1_2341_1423 => "D1_2341_1423",
    D1_231_4213 => "D1_231_4213",
    D1_1342_4213 => "D1_1342_4213",
    D1_2413_3142 => "D1_2413_3142",
    D1_1423_4132 => "D1_1423_4132",
    D1_2413_4132Eq1423_3142 => "D1_2413_4132_EQ_1423_3142",
    SinglePatternTable => "TABLE_4_1",
    GenocchiTotals => "GENOCCHI_TOTALS",
}

impl TheoremId {
    /// Lower-case, hyphenated tag used on the command line, e.g. `table-4-1`.
    pub fn cli_name(self) -> String {
        self.tag().to_ascii_lowercase().replace('_', "-")
    }

    /// The single Dumont family the claim is about, when there is one.
    pub fn family(self) -> Option<(DumontKind, &'static str)> {
        use DumontKind::{First, Second};
        use TheoremId::*;
        Some(match self {
            CatalanD1_132 => (First, "132"),
            CatalanD1_231 => (First, "231"),
            CatalanD1_312 => (First, "312"),
            CatalanD2_321 => (Second, "321"),
            D1_213 => (First, "213"),
            D2_231 => (Second, "231"),
            D1_321 => (First, "321"),
            D2_312 => (Second, "312"),
            D1_123 => (First, "123"),
            D2Empty123 => (Second, "123"),
            D2Empty213 => (Second, "213"),
            D2Empty132 => (Second, "132"),
            Pair3_132_231 => (First, "132,231"),
            Pair3_132_312 => (First, "132,312"),
            Pair3_213_312 => (First, "213,312"),
            Pair3_123_213 => (First, "123,213"),
            Pair3_132_213 => (First, "132,213"),
            Pair3D2_231_321 => (Second, "231,321"),
            Pair3_231_312 => (First, "231,312"),
            Pair3_213_231Empty => (First, "213,231"),
            Pair3_123_132Two => (First, "123,132"),
            D2_3142 => (Second, "3142"),
            ConjD2_4132 => (Second, "4132"),
            D1_1342_1423 => (First, "1342,1423"),
            D1_2341_2413 => (First, "2341,2413"),
            D1_1342_2413 => (First, "1342,2413"),
            D1_2341_1423 => (First, "2341,1423"),
            D1_231_4213 => (First, "231,4213"),
            D1_1342_4213 => (First, "1342,4213"),
            D1_2413_3142 => (First, "2413,3142"),
            D1_1423_4132 => (First, "1423,4132"),
            Lemma4213_1342 | D1_2413_4132Eq1423_3142 | SinglePatternTable | GenocchiTotals => {
                return None
            }
        })
    }

    pub fn family_set(self) -> Option<(DumontKind, PatternSet)> {
        self.family().map(|(kind, pats)| {
            (
                kind,
                PatternSet::parse(pats).expect("registered patterns parse"),
            )
        })
    }

    pub fn is_conjecture(self) -> bool {
        self == TheoremId::ConjD2_4132
    }

    /// `n_max` used by `verify all` when none is given.
    pub fn default_n_max(self) -> usize {
        match self {
            TheoremId::D1_2413_4132Eq1423_3142 | TheoremId::D1_1423_4132 => 4,
            _ => 5,
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    /// Accepts the upper-case tag or its hyphenated lower-case form.
    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_uppercase().replace('-', "_");
        TheoremId::ALL
            .iter()
            .copied()
            .find(|t| t.tag() == norm)
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.tag())
    }
}

impl<'de> Deserialize<'de> for TheoremId {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_roundtrip() {
        assert_eq!(TheoremId::ALL.len(), 35);
        for &t in TheoremId::ALL {
            assert_eq!(t.tag().parse::<TheoremId>().unwrap(), t);
            assert_eq!(t.cli_name().parse::<TheoremId>().unwrap(), t);
        }
        assert_eq!(
            "table-4-1".parse::<TheoremId>().unwrap(),
            TheoremId::SinglePatternTable
        );
        assert_eq!(
            "conj-d2-4132".parse::<TheoremId>().unwrap(),
            TheoremId::ConjD2_4132
        );
        assert!(matches!(
            "nope".parse::<TheoremId>(),
            Err(Error::UnknownTheorem(_))
        ));
    }

    #[test]
    fn families_parse() {
        for &t in TheoremId::ALL {
            let _ = t.family_set();
        }
    }
}
