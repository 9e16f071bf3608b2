//! Built-in quandles by name.
//!
//! ```text
//! trivial:<k>                 k-element trivial quandle
//! conj:S<n>                   the symmetric group S_n under conjugation
//! cyclic:<d>                  cyclic permutations of d letters
//! transposition:<d>           transpositions of d letters
//! dihedral:<n>                Z/n with x ▷ y = 2y − x
//! alexander:<m>:<T>           (Z/m)^k with T a JSON k×k matrix, e.g. alexander:5:[[2]]
//! alternating:<g>:<m>         (Z/m)^{2g} with the standard intersection form
//! reduced-alternating:<g>:<m> the same modulo v ∼ −v
//! torus-dehn                  slopes on the torus (infinite)
//! genus2-quotient             the 17-element genus-two quotient
//! achiral:<name>              the achiral double of another finite entry
//! ```

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::group_quandles::{
    build_cyclic_class_quandle, build_genus2_quotient, build_symmetric_conjugation_quandle,
    build_transposition_quandle, PermutationAugmented,
};
use crate::linear::{homology_dehn_quandle, homology_quandle, AlexanderQuandle, RingSpec};
use crate::quandle::{achiral_double, FiniteQuandle};

/// Largest carrier the catalog will tabulate.
pub const MAX_TABLE: usize = 4096;

#[derive(Clone, Debug)]
pub enum CatalogEntry {
    /// A finite quandle with an augmentation into a permutation group: the
    /// defining one for permutation quandles, the inner one otherwise.
    Finite(PermutationAugmented),
    /// The torus Dehn quandle, available only through sampled operations.
    TorusDehn,
}

fn number<T: std::str::FromStr>(name: &str, text: &str) -> Result<T> {
    text.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("{name}: expected a number, got {text:?}")))
}

fn checked_size(name: &str, size: Option<u128>) -> Result<()> {
    match size {
        Some(s) if s <= MAX_TABLE as u128 => Ok(()),
        _ => Err(Error::Capacity(format!("{name} has more than {MAX_TABLE} elements"))),
    }
}

fn inner(q: FiniteQuandle) -> CatalogEntry {
    CatalogEntry::Finite(PermutationAugmented::inner(q))
}

pub fn resolve(name: &str) -> Result<CatalogEntry> {
    let name = name.trim();
    let (head, rest) = name.split_once(':').unwrap_or((name, ""));
    match head {
        "trivial" => {
            let k: usize = number(name, rest)?;
            if k == 0 || k > MAX_TABLE {
                return Err(Error::InvalidParameter(format!("{name}: size must be 1..={MAX_TABLE}")));
            }
            let labels = (0..k).map(|i| i.to_string()).collect();
            Ok(inner(FiniteQuandle::trivial(k).with_labels(labels)?))
        }
        "conj" => {
            let n: usize = number(name, rest.strip_prefix('S').unwrap_or("?"))?;
            if n > 6 {
                return Err(Error::Capacity(format!("{name}: only S_1 … S_6 are tabulated")));
            }
            Ok(CatalogEntry::Finite(build_symmetric_conjugation_quandle(n)?))
        }
        "cyclic" => {
            let d: usize = number(name, rest)?;
            if d > 6 {
                return Err(Error::Capacity(format!("{name}: only d ≤ 6 is tabulated")));
            }
            Ok(CatalogEntry::Finite(build_cyclic_class_quandle(d)?))
        }
        "transposition" => {
            let d: usize = number(name, rest)?;
            if d > 12 {
                return Err(Error::Capacity(format!("{name}: only d ≤ 12 is tabulated")));
            }
            Ok(CatalogEntry::Finite(build_transposition_quandle(d)?))
        }
        "dihedral" => {
            let n: u64 = number(name, rest)?;
            checked_size(name, Some(n as u128))?;
            Ok(inner(AlexanderQuandle::dihedral(n)?.to_finite()?))
        }
        "alexander" => {
            let (m, t) = rest
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("{name}: expected alexander:<m>:<matrix>")))?;
            let m: u64 = number(name, m)?;
            if m == 0 {
                return Err(Error::InvalidParameter(format!("{name}: modulus must be positive")));
            }
            let t: Vec<Vec<i64>> = serde_json::from_str(t)
                .map_err(|e| Error::Parse(format!("{name}: bad matrix: {e}")))?;
            let t = t.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect::<Vec<_>>();
            let ring = RingSpec::modulo(m);
            checked_size(name, ring.cardinality(t.len()))?;
            Ok(inner(AlexanderQuandle::new(ring, t)?.to_finite()?))
        }
        "alternating" | "reduced-alternating" => {
            let (g, m) = rest
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("{name}: expected {head}:<g>:<m>")))?;
            let g: usize = number(name, g)?;
            let m: u64 = number(name, m)?;
            if m == 0 {
                return Err(Error::InvalidParameter(format!("{name}: modulus must be positive")));
            }
            let ring = RingSpec::modulo(m);
            checked_size(name, ring.cardinality(2 * g))?;
            let q = if head == "alternating" {
                homology_quandle(g, ring)?.to_finite()?
            } else {
                homology_dehn_quandle(g, ring)?.to_finite()?
            };
            Ok(inner(q))
        }
        "torus-dehn" if rest.is_empty() => Ok(CatalogEntry::TorusDehn),
        "genus2-quotient" if rest.is_empty() => Ok(CatalogEntry::Finite(build_genus2_quotient()?)),
        "achiral" => match resolve(rest)? {
            CatalogEntry::Finite(p) => Ok(inner(achiral_double(&p.quandle)?)),
            CatalogEntry::TorusDehn => Err(Error::InvalidParameter(
                "achiral:torus-dehn is infinite; use signed slopes in Lefschetz tuples".into(),
            )),
        },
        _ => Err(Error::Parse(format!(
            "unknown quandle {name:?}; try one of: {}",
            standard_names().join(", ")
        ))),
    }
}

/// Resolves a name that must denote a finite quandle.
pub fn resolve_finite(name: &str) -> Result<PermutationAugmented> {
    match resolve(name)? {
        CatalogEntry::Finite(p) => Ok(p),
        CatalogEntry::TorusDehn => Err(Error::InvalidParameter(format!("{name} is infinite"))),
    }
}

/// A representative list of small catalog entries, each with at most 30
/// elements.
pub fn standard_names() -> Vec<String> {
    [
        "trivial:1",
        "trivial:2",
        "trivial:3",
        "trivial:4",
        "conj:S3",
        "conj:S4",
        "cyclic:3",
        "cyclic:4",
        "transposition:2",
        "transposition:3",
        "transposition:4",
        "transposition:5",
        "transposition:6",
        "dihedral:3",
        "dihedral:4",
        "dihedral:5",
        "dihedral:6",
        "dihedral:7",
        "alexander:5:[[2]]",
        "alexander:7:[[3]]",
        "alexander:2:[[0,1],[1,1]]",
        "alexander:3:[[1,1],[0,1]]",
        "alternating:1:2",
        "alternating:1:3",
        "alternating:1:5",
        "alternating:2:2",
        "reduced-alternating:1:3",
        "reduced-alternating:1:5",
        "reduced-alternating:2:2",
        "genus2-quotient",
        "achiral:dihedral:3",
        "achiral:transposition:4",
        "achiral:reduced-alternating:1:3",
    ]
    .into_iter()
    .map(String::from)
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quandle::check_axioms;

    #[test]
    fn sizes() {
        let size = |n: &str| resolve_finite(n).unwrap().quandle.len();
        assert_eq!(size("trivial:3"), 3);
        assert_eq!(size("conj:S3"), 6);
        assert_eq!(size("cyclic:3"), 5);
        assert_eq!(size("cyclic:4"), 20);
        assert_eq!(size("transposition:4"), 6);
        assert_eq!(size("dihedral:5"), 5);
        assert_eq!(size("alexander:3:[[1,1],[0,1]]"), 9);
        assert_eq!(size("alternating:1:3"), 9);
        assert_eq!(size("reduced-alternating:1:3"), 5);
        assert_eq!(size("genus2-quotient"), 17);
        assert_eq!(size("achiral:dihedral:3"), 6);
    }

    #[test]
    fn standard_names_are_small_quandles() {
        for name in standard_names() {
            let p = resolve_finite(&name).unwrap();
            assert!(p.quandle.len() <= 30, "{name}");
            assert!(p.is_equivariant(), "{name}");
            assert!(check_axioms(&p.quandle).passed, "{name}");
        }
    }

    #[test]
    fn bad_names() {
        for bad in ["", "foo", "trivial:x", "trivial:0", "conj:T3", "alexander:4:[[2]]", "alexander:5", "achiral:torus-dehn", "cyclic:9", "torus-dehn:1"] {
            assert!(resolve(bad).is_err(), "{bad}");
        }
        assert!(matches!(resolve("torus-dehn").unwrap(), CatalogEntry::TorusDehn));
    }
}
