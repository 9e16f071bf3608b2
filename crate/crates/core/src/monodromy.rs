//! Monodromy data as quandle-valued tuples: validators for branched covers,
//! braid monodromy and torus Lefschetz fibrations, Hurwitz moves and orbits,
//! and counting invariants into finite augmented quandles.
//!
//! Entry 0 of a tuple is the innermost loop, and the ordered product
//! multiplies entries left to right in that order. The source of a tuple is
//! modelled as the free quandle on its entries, which is the fundamental
//! quandle of a disk with that many marked points.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::braid::{braid_eq, full_twist, Braid, LCord, LCordQuandle};
use crate::error::{Error, Result};
use crate::group_quandles::{
    build_cyclic_class_quandle, build_transposition_quandle, evaluate, ConjugationQuandle,
    FreeQuandleElement, PermutationAugmented, SymmetricGroup,
};
use crate::perm::Permutation;
use crate::quandle::{
    enumerate_homs, subquandle_generated, AugmentedQuandle, FiniteQuandle, Group, Quandle,
};
use crate::torus::{SL2Matrix, SignedSlope, SignedSlopeQuandle};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Base {
    Disk,
    Sphere,
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Base::Disk => "disk",
            Base::Sphere => "sphere",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Cover,
    Braid,
    Lefschetz,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Cover => "cover",
            Mode::Braid => "braid",
            Mode::Lefschetz => "lefschetz",
        })
    }
}

/// Monodromy of a `d`-sheeted branched cover: cyclic permutations, or
/// transpositions when `simple`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverMonodromy {
    pub degree: usize,
    pub simple: bool,
    pub base: Base,
    /// Whether the tuple itself declares a connected cover.
    pub connected: bool,
    pub entries: Vec<Permutation>,
}

/// Braid monodromy of a curve with tangencies, nodes and cusps: L-cords with
/// `L = {1, 2, 3}` closing up to `Δ^{2k}`.
#[derive(Clone, Debug)]
pub struct BraidMonodromy {
    pub strands: usize,
    pub k: i64,
    pub projective: bool,
    pub entries: Vec<LCord>,
}

/// Monodromy of a torus Lefschetz fibration: vanishing slopes with signs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LefschetzMonodromy {
    pub base: Base,
    pub achiral: bool,
    pub entries: Vec<SignedSlope>,
}

#[derive(Clone, Debug)]
pub enum MonodromyTuple {
    Cover(CoverMonodromy),
    Braid(BraidMonodromy),
    Lefschetz(LefschetzMonodromy),
}

impl MonodromyTuple {
    pub fn mode(&self) -> Mode {
        match self {
            MonodromyTuple::Cover(_) => Mode::Cover,
            MonodromyTuple::Braid(_) => Mode::Braid,
            MonodromyTuple::Lefschetz(_) => Mode::Lefschetz,
        }
    }

    pub fn base(&self) -> Base {
        match self {
            MonodromyTuple::Cover(t) => t.base,
            MonodromyTuple::Braid(_) => Base::Disk,
            MonodromyTuple::Lefschetz(t) => t.base,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            MonodromyTuple::Cover(t) => t.entries.len(),
            MonodromyTuple::Braid(t) => t.entries.len(),
            MonodromyTuple::Lefschetz(t) => t.entries.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Signs used as exponents in closure conditions: all `+1` except for
    /// negative Lefschetz entries.
    pub fn signs(&self) -> Vec<bool> {
        match self {
            MonodromyTuple::Lefschetz(t) => t.entries.iter().map(|e| e.positive).collect(),
            _ => vec![true; self.len()],
        }
    }

    /// Runs the validator of the tuple's mode.
    pub fn validate(&self, require_connected: bool) -> Result<ValidationReport> {
        match self {
            MonodromyTuple::Cover(t) => validate_branched_cover(t, require_connected),
            MonodromyTuple::Braid(t) => validate_braid_monodromy(t),
            MonodromyTuple::Lefschetz(t) => validate_lefschetz(t),
        }
    }

    /// One Hurwitz move at positions `(i, i+1)` in the entries' quandle.
    pub fn hurwitz_move(&self, i: usize, dir: Direction) -> Result<MonodromyTuple> {
        Ok(match self {
            MonodromyTuple::Cover(t) => MonodromyTuple::Cover(CoverMonodromy {
                entries: hurwitz_move(&cover_quandle(t.degree), &t.entries, i, dir)?,
                ..t.clone()
            }),
            MonodromyTuple::Braid(t) => MonodromyTuple::Braid(BraidMonodromy {
                entries: hurwitz_move(&LCordQuandle::monodromy_labels(t.strands), &t.entries, i, dir)?,
                ..t.clone()
            }),
            MonodromyTuple::Lefschetz(t) => MonodromyTuple::Lefschetz(LefschetzMonodromy {
                entries: hurwitz_move(&SignedSlopeQuandle, &t.entries, i, dir)?,
                ..t.clone()
            }),
        })
    }

    /// Hurwitz orbit of the tuple. `conjugate` also closes under
    /// simultaneous conjugation, which needs a finite carrier (covers).
    pub fn orbit(&self, opts: &OrbitOptions, conjugate: bool) -> Result<Orbit<MonodromyTuple>> {
        if conjugate && !matches!(self, MonodromyTuple::Cover(_)) {
            return Err(Error::InvalidParameter(
                "simultaneous conjugation needs a finite carrier (cover tuples)".into(),
            ));
        }
        Ok(match self {
            MonodromyTuple::Cover(t) => {
                let q = cover_quandle(t.degree);
                let gens = (1..t.degree)
                    .map(|i| Permutation::transposition(t.degree, i, i + 1))
                    .collect::<Result<Vec<_>>>()?;
                let o = if conjugate {
                    hurwitz_orbit_with_conjugation(&q, &t.entries, opts, &gens)
                } else {
                    hurwitz_orbit(&q, &t.entries, opts)
                };
                o.map(|entries| MonodromyTuple::Cover(CoverMonodromy { entries, ..t.clone() }))
            }
            MonodromyTuple::Braid(t) => hurwitz_orbit(&LCordQuandle::monodromy_labels(t.strands), &t.entries, opts)
                .map(|entries| MonodromyTuple::Braid(BraidMonodromy { entries, ..t.clone() })),
            MonodromyTuple::Lefschetz(t) => hurwitz_orbit(&SignedSlopeQuandle, &t.entries, opts)
                .map(|entries| MonodromyTuple::Lefschetz(LefschetzMonodromy { entries, ..t.clone() })),
        })
    }

    /// Human-readable entries.
    pub fn entry_strings(&self) -> Vec<String> {
        match self {
            MonodromyTuple::Cover(t) => t.entries.iter().map(|p| p.to_string()).collect(),
            MonodromyTuple::Braid(t) => t.entries.iter().map(|e| format!("{e:?}")).collect(),
            MonodromyTuple::Lefschetz(t) => t.entries.iter().map(|e| format!("{e:?}")).collect(),
        }
    }
}

pub(crate) fn cover_quandle(degree: usize) -> ConjugationQuandle<SymmetricGroup> {
    ConjugationQuandle { group: SymmetricGroup { degree }, carrier: None }
}

/// One named check with an optional witness of failure or of the computed
/// value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub valid: bool,
    pub checks: Vec<Check>,
}

impl ValidationReport {
    fn new() -> Self {
        ValidationReport { valid: true, checks: Vec::new() }
    }

    fn push(&mut self, name: &str, passed: bool, witness: Option<String>) {
        self.valid &= passed;
        self.checks.push(Check { name: name.to_string(), passed, witness });
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", if self.valid { "valid" } else { "invalid" })?;
        for c in &self.checks {
            write!(f, "  [{}] {}", if c.passed { "pass" } else { "FAIL" }, c.name)?;
            if let Some(w) = &c.witness {
                write!(f, ": {w}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Left-to-right product of the permutations.
pub fn permutation_product(degree: usize, entries: &[Permutation]) -> Permutation {
    entries.iter().fold(Permutation::identity(degree), |acc, p| acc.then(p))
}

/// Left-to-right matrix product of the signed twists.
pub fn twist_product(entries: &[SignedSlope]) -> SL2Matrix {
    entries.iter().fold(SL2Matrix::identity(), |acc, e| acc.mul(&e.twist()))
}

/// Left-to-right product of the augmented L-cords.
pub fn braid_product(strands: usize, entries: &[LCord]) -> Braid {
    entries.iter().fold(Braid::identity(strands), |acc, e| acc.mul(&e.augment()))
}

pub fn validate_branched_cover(t: &CoverMonodromy, require_connected: bool) -> Result<ValidationReport> {
    for (pos, p) in t.entries.iter().enumerate() {
        if p.degree() != t.degree {
            return Err(Error::OutsideCarrier(format!(
                "entry {pos} acts on {} letters, expected {}",
                p.degree(),
                t.degree
            )));
        }
        let inside = if t.simple { p.is_transposition() } else { p.is_cyclic() };
        if !inside {
            let carrier = if t.simple { "a transposition" } else { "a nontrivial cyclic permutation" };
            return Err(Error::OutsideCarrier(format!("entry {pos} = {p} is not {carrier}")));
        }
    }
    let mut report = ValidationReport::new();
    report.push("membership", true, None);
    if t.base == Base::Sphere {
        let product = permutation_product(t.degree, &t.entries);
        report.push("sphere-closure", product.is_identity(), Some(format!("product = {product}")));
    }
    if require_connected || t.connected {
        let transitive = Permutation::generate_transitive(t.degree, &t.entries);
        report.push("connected", transitive, None);
    }
    Ok(report)
}

pub fn validate_braid_monodromy(t: &BraidMonodromy) -> Result<ValidationReport> {
    for (pos, e) in t.entries.iter().enumerate() {
        if !(1..=3).contains(&e.label) {
            return Err(Error::OutsideCarrier(format!(
                "entry {pos} has label {}, expected 1, 2 or 3",
                e.label
            )));
        }
        if e.strands() != t.strands {
            return Err(Error::OutsideCarrier(format!(
                "entry {pos} lives in B_{}, expected B_{}",
                e.strands(),
                t.strands
            )));
        }
    }
    let mut report = ValidationReport::new();
    report.push("labels", true, None);

    let bad = t.entries.iter().position(|e| {
        let w = e.cord.conjugator();
        let sign = if e.cord.is_positive() { 1 } else { -1 };
        let core = Braid::sigma(t.strands, e.cord.generator_index())
            .expect("generator index validated")
            .pow(sign * e.label);
        !braid_eq(&e.augment(), &core.conjugate_by(w)).unwrap_or(false)
    });
    report.push(
        "conjugate-of-generator-power",
        bad.is_none(),
        bad.map(|pos| format!("entry {pos}")),
    );

    if t.projective {
        report.push("projective-k", t.k == 1, Some(format!("k = {}", t.k)));
    }
    let product = braid_product(t.strands, &t.entries);
    let target = full_twist(t.strands)?.pow(t.k);
    let closes = braid_eq(&product, &target)?;
    report.push(
        "closure",
        closes,
        Some(format!("product = {product}, expected (Δ²)^{}", t.k)),
    );
    Ok(report)
}

pub fn validate_lefschetz(t: &LefschetzMonodromy) -> Result<ValidationReport> {
    if let Some(pos) = t.entries.iter().position(|e| e.slope.is_contractible()) {
        return Err(Error::OutsideCarrier(format!(
            "entry {pos} twists along a contractible curve"
        )));
    }
    let mut report = ValidationReport::new();
    let negative = t.entries.iter().position(|e| !e.positive);
    report.push(
        "chirality",
        t.achiral || negative.is_none(),
        negative.map(|pos| format!("entry {pos} is a negative twist")),
    );
    if t.base == Base::Sphere {
        let product = twist_product(&t.entries);
        report.push("sphere-closure", product.is_identity(), Some(format!("product = {product}")));
    }
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Left,
    Right,
}

/// Right: `(…, a, b, …) ↦ (…, b, a ▷ b, …)`. Left is its inverse:
/// `(…, a, b, …) ↦ (…, b ⊵ a, a, …)`.
pub fn hurwitz_move<Q: Quandle>(q: &Q, entries: &[Q::Element], i: usize, dir: Direction) -> Result<Vec<Q::Element>> {
    if i + 1 >= entries.len() {
        return Err(Error::IndexOutOfRange { index: i, len: entries.len().saturating_sub(1) });
    }
    let mut out = entries.to_vec();
    let (a, b) = (&entries[i], &entries[i + 1]);
    match dir {
        Direction::Right => {
            out[i] = b.clone();
            out[i + 1] = q.rhd(a, b);
        }
        Direction::Left => {
            out[i] = q.lhd(b, a);
            out[i + 1] = a.clone();
        }
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct OrbitOptions {
    pub max_size: usize,
    /// Also identify cyclic rotations of the tuple.
    pub cyclic: bool,
}

impl Default for OrbitOptions {
    fn default() -> Self {
        OrbitOptions { max_size: 10_000, cyclic: false }
    }
}

#[derive(Clone, Debug)]
pub struct Orbit<T> {
    /// Tuples in breadth-first discovery order, starting with the input.
    pub tuples: Vec<T>,
    /// Set when exploration stopped at `max_size`.
    pub truncated: bool,
}

impl<T> Orbit<T> {
    pub fn map<F, U>(self, f: F) -> Orbit<U>
    where
        F: FnMut(T) -> U,
    {
        Orbit { tuples: self.tuples.into_iter().map(f).collect(), truncated: self.truncated }
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }
}

/// Breadth-first closure under Hurwitz moves in both directions, and
/// optionally under cyclic rotation.
pub fn hurwitz_orbit<Q: Quandle>(q: &Q, start: &[Q::Element], opts: &OrbitOptions) -> Orbit<Vec<Q::Element>> {
    explore(q, start, opts, &|_| Vec::new())
}

/// As [`hurwitz_orbit`], also closing under simultaneous conjugation by each
/// element of `conjugators` (pass group generators to close under the whole
/// group).
pub fn hurwitz_orbit_with_conjugation<A: AugmentedQuandle>(
    a: &A,
    start: &[A::Element],
    opts: &OrbitOptions,
    conjugators: &[<A::Group as Group>::Element],
) -> Orbit<Vec<A::Element>> {
    explore(a, start, opts, &|t| {
        conjugators.iter().map(|g| t.iter().map(|e| a.act(e, g)).collect()).collect()
    })
}

type Neighbours<'a, E> = &'a dyn Fn(&[E]) -> Vec<Vec<E>>;

fn explore<Q: Quandle>(
    q: &Q,
    start: &[Q::Element],
    opts: &OrbitOptions,
    extra: Neighbours<'_, Q::Element>,
) -> Orbit<Vec<Q::Element>> {
    let key = |t: &[Q::Element]| t.iter().map(|e| q.key(e)).collect::<Vec<_>>();
    let mut seen: HashSet<Vec<Q::Key>> = HashSet::new();
    let mut tuples = Vec::new();
    let mut queue = VecDeque::new();
    seen.insert(key(start));
    tuples.push(start.to_vec());
    queue.push_back(start.to_vec());
    let mut truncated = false;

    'search: while let Some(t) = queue.pop_front() {
        let mut next: Vec<Vec<Q::Element>> = Vec::new();
        for i in 0..t.len().saturating_sub(1) {
            for dir in [Direction::Right, Direction::Left] {
                next.push(hurwitz_move(q, &t, i, dir).expect("index in range"));
            }
        }
        if opts.cyclic && t.len() > 1 {
            let mut r = t.clone();
            r.rotate_left(1);
            next.push(r);
        }
        next.extend(extra(&t));
        for n in next {
            if seen.insert(key(&n)) {
                if tuples.len() >= opts.max_size {
                    truncated = true;
                    break 'search;
                }
                tuples.push(n.clone());
                queue.push_back(n);
            }
        }
    }
    Orbit { tuples, truncated }
}

/// Augmentation images raised to the entry signs.
fn signed_augmentations(target: &PermutationAugmented, assignment: &[usize], signs: &[bool]) -> Vec<Permutation> {
    assignment
        .iter()
        .zip(signs)
        .map(|(&q, &s)| {
            let p = &target.augmentation[q];
            if s {
                p.clone()
            } else {
                p.inverse()
            }
        })
        .collect()
}

/// Whether a target assignment satisfies the closure rule of `t`'s mode,
/// evaluated through the permutation augmentation of `target`.
///
/// Sphere covers and sphere Lefschetz tuples need the ordered product to be
/// the identity; disk bases impose nothing. Braid mode with `k = 0` needs
/// the identity, and with `k ≠ 0` a product commuting with every entry's
/// augmentation (the image of a central full twist power).
pub fn closure_holds(t: &MonodromyTuple, target: &PermutationAugmented, assignment: &[usize]) -> bool {
    let signs = t.signs();
    let augs = signed_augmentations(target, assignment, &signs);
    let product = permutation_product(target.degree, &augs);
    let closed = match t {
        MonodromyTuple::Cover(c) => c.base == Base::Disk || product.is_identity(),
        MonodromyTuple::Lefschetz(l) => l.base == Base::Disk || product.is_identity(),
        MonodromyTuple::Braid(b) if b.k == 0 => product.is_identity(),
        MonodromyTuple::Braid(_) => augs.iter().all(|g| g.then(&product) == product.then(g)),
    };
    let connected = matches!(t, MonodromyTuple::Cover(c) if c.connected);
    closed && (!connected || Permutation::generate_transitive(target.degree, &augs))
}

/// Number of homomorphisms from the free quandle on `len(t)` generators to
/// `target` whose generator images satisfy the closure rule of `t`'s mode.
pub fn counting_invariant(t: &MonodromyTuple, target: &PermutationAugmented) -> u64 {
    let m = t.len();
    let n = target.quandle.len();
    if m == 0 {
        return u64::from(closure_holds(t, target, &[]));
    }
    (0..n)
        .into_par_iter()
        .map(|first| {
            let mut count = 0u64;
            let mut a = vec![0usize; m];
            a[0] = first;
            loop {
                if closure_holds(t, target, &a) {
                    count += 1;
                }
                // odometer over positions 1..m
                let mut pos = m;
                loop {
                    pos -= 1;
                    if pos == 0 {
                        return count;
                    }
                    a[pos] += 1;
                    if a[pos] < n {
                        break;
                    }
                    a[pos] = 0;
                }
            }
        })
        .sum()
}

/// Number of quandle homomorphisms from the subquandle generated by the
/// entries of a cover tuple to `target`. Hurwitz moves preserve that
/// subquandle, so this depends on the tuple only up to Hurwitz equivalence.
pub fn coloring_invariant(t: &CoverMonodromy, target: &FiniteQuandle) -> Result<u64> {
    let carrier = if t.simple {
        build_transposition_quandle(t.degree)?
    } else {
        build_cyclic_class_quandle(t.degree)?
    };
    let seed = t
        .entries
        .iter()
        .map(|p| {
            carrier
                .augmentation
                .iter()
                .position(|c| c == p)
                .ok_or_else(|| Error::OutsideCarrier(p.to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    let generated: Vec<usize> = subquandle_generated(&carrier.quandle, &seed)?.into_iter().collect();
    let sub = carrier.quandle.restrict(&generated)?;
    Ok(enumerate_homs(&sub, target).len() as u64)
}

/// A homomorphism out of the free quandle on `images.len()` generators,
/// given by the images of the generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeHom<E> {
    pub images: Vec<E>,
}

impl<E: Clone> FreeHom<E> {
    pub fn apply<Q: Quandle<Element = E>>(&self, q: &Q, e: &FreeQuandleElement) -> Result<E> {
        let top = e.conjugator().max_generator().unwrap_or(0).max(e.generator_index());
        if top >= self.images.len() {
            return Err(Error::IndexOutOfRange { index: top, len: self.images.len() });
        }
        Ok(evaluate(q, &self.images, e))
    }
}

/// The homomorphism sending the `i`-th free generator to entry `i`.
pub fn hom_from_tuple<E: Clone>(entries: &[E]) -> FreeHom<E> {
    FreeHom { images: entries.to_vec() }
}

/// The images of the ordered free generators.
pub fn tuple_from_hom<E: Clone>(h: &FreeHom<E>) -> Vec<E> {
    h.images.clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::Cord;
    use crate::torus::Slope;

    fn p(s: &str, d: usize) -> Permutation {
        Permutation::parse_cycles(s, d).unwrap()
    }

    fn cover(d: usize, base: Base, entries: &[&str]) -> CoverMonodromy {
        CoverMonodromy {
            degree: d,
            simple: true,
            base,
            connected: false,
            entries: entries.iter().map(|e| p(e, d)).collect(),
        }
    }

    fn conic(k: i64) -> BraidMonodromy {
        let c = LCord::new(Cord::generator(2, 1).unwrap(), 1).unwrap();
        BraidMonodromy { strands: 2, k, projective: false, entries: vec![c.clone(), c] }
    }

    fn e1(n: usize) -> LefschetzMonodromy {
        let a: Slope = "0/1".parse().unwrap();
        let b: Slope = "1/0".parse().unwrap();
        let entries = (0..n)
            .map(|i| SignedSlope::positive(if i % 2 == 0 { a.clone() } else { b.clone() }))
            .collect();
        LefschetzMonodromy { base: Base::Sphere, achiral: false, entries }
    }

    #[test]
    fn branched_cover_examples() {
        let r = validate_branched_cover(&cover(2, Base::Sphere, &["(1 2)", "(1 2)"]), true).unwrap();
        assert!(r.valid, "{r}");
        assert!(!validate_branched_cover(&cover(2, Base::Sphere, &["(1 2)"]), false).unwrap().valid);
        assert!(validate_branched_cover(&cover(3, Base::Disk, &[]), false).unwrap().valid);
        assert!(validate_branched_cover(&cover(3, Base::Disk, &["(1 2 3)"]), false).is_err());
        let mut cyc = cover(3, Base::Disk, &["(1 2 3)"]);
        cyc.simple = false;
        assert!(validate_branched_cover(&cyc, false).unwrap().valid);
        let split = cover(4, Base::Sphere, &["(1 2)", "(1 2)", "(3 4)", "(3 4)"]);
        assert!(validate_branched_cover(&split, false).unwrap().valid);
        assert!(!validate_branched_cover(&split, true).unwrap().valid);
    }

    #[test]
    fn braid_monodromy_examples() {
        assert!(validate_braid_monodromy(&conic(1)).unwrap().valid);
        assert!(!validate_braid_monodromy(&conic(0)).unwrap().valid);
        assert!(!validate_braid_monodromy(&conic(2)).unwrap().valid);
        let empty = BraidMonodromy { strands: 2, k: 0, projective: false, entries: vec![] };
        assert!(validate_braid_monodromy(&empty).unwrap().valid);
        let mut single = conic(1);
        single.entries.pop();
        assert!(!validate_braid_monodromy(&single).unwrap().valid);
        let mut bad = conic(1);
        bad.entries[0].label = 4;
        assert!(validate_braid_monodromy(&bad).is_err());
        let mut proj = conic(0);
        proj.entries.clear();
        proj.projective = true;
        assert!(!validate_braid_monodromy(&proj).unwrap().valid);
    }

    #[test]
    fn lefschetz_examples() {
        assert!(validate_lefschetz(&e1(12)).unwrap().valid);
        for n in 1..12 {
            assert!(!validate_lefschetz(&e1(n)).unwrap().valid, "prefix {n}");
        }
        let mut disk = e1(5);
        disk.base = Base::Disk;
        assert!(validate_lefschetz(&disk).unwrap().valid);
        let mut neg = e1(12);
        neg.entries[3].positive = false;
        assert!(!validate_lefschetz(&neg).unwrap().valid);
        neg.achiral = true;
        let r = validate_lefschetz(&neg).unwrap();
        assert!(r.check("chirality").unwrap().passed);
        let contractible = LefschetzMonodromy {
            base: Base::Disk,
            achiral: false,
            entries: vec![SignedSlope::positive(Slope::Contractible)],
        };
        assert!(validate_lefschetz(&contractible).is_err());
    }

    #[test]
    fn hurwitz_move_examples() {
        let q = cover_quandle(3);
        let t = vec![p("(1 2)", 3), p("(2 3)", 3)];
        let moved = hurwitz_move(&q, &t, 0, Direction::Right).unwrap();
        assert_eq!(moved, vec![p("(2 3)", 3), p("(1 3)", 3)]);
        assert_eq!(hurwitz_move(&q, &moved, 0, Direction::Left).unwrap(), t);
        assert!(hurwitz_move(&q, &t, 1, Direction::Right).is_err());
        assert_eq!(permutation_product(3, &moved), permutation_product(3, &t));
    }

    #[test]
    fn orbit_examples() {
        let q = cover_quandle(3);
        let opts = OrbitOptions::default();
        let single = hurwitz_orbit(&q, &[p("(1 2)", 3)], &opts);
        assert_eq!(single.len(), 1);
        let q2 = cover_quandle(2);
        assert_eq!(hurwitz_orbit(&q2, &[p("(1 2)", 2), p("(1 2)", 2)], &opts).len(), 1);
        let orbit = hurwitz_orbit(&q, &[p("(1 2)", 3), p("(2 3)", 3)], &opts);
        assert_eq!(orbit.len(), 3);
        assert!(!orbit.truncated);
        let expected = [["(1 2)", "(2 3)"], ["(2 3)", "(1 3)"], ["(1 3)", "(1 2)"]];
        for pair in expected {
            let t: Vec<Permutation> = pair.iter().map(|s| p(s, 3)).collect();
            assert!(orbit.tuples.contains(&t));
        }
        let small = OrbitOptions { max_size: 2, cyclic: false };
        let cut = hurwitz_orbit(&q, &[p("(1 2)", 3), p("(2 3)", 3)], &small);
        assert!(cut.truncated);
        assert_eq!(cut.len(), 2);
    }

    #[test]
    fn orbit_with_conjugation() {
        let q = cover_quandle(3);
        let gens = vec![p("(1 2)", 3), p("(2 3)", 3)];
        let opts = OrbitOptions::default();
        let orbit = hurwitz_orbit_with_conjugation(&q, &[p("(1 2)", 3), p("(1 2)", 3)], &opts, &gens);
        assert_eq!(orbit.len(), 3);
    }

    #[test]
    fn counting_examples() {
        let t2 = build_transposition_quandle(2).unwrap();
        let empty = MonodromyTuple::Cover(cover(2, Base::Sphere, &[]));
        assert_eq!(counting_invariant(&empty, &t2), 1);
        let pair = MonodromyTuple::Cover(cover(2, Base::Sphere, &["(1 2)", "(1 2)"]));
        assert_eq!(counting_invariant(&pair, &t2), 1);
        let t3 = build_transposition_quandle(3).unwrap();
        let three = MonodromyTuple::Cover(cover(3, Base::Sphere, &["(1 2)", "(1 2)", "(1 2)"]));
        assert_eq!(counting_invariant(&three, &t3), 0);
        let disk = MonodromyTuple::Cover(cover(3, Base::Disk, &["(1 2)", "(1 2)"]));
        assert_eq!(counting_invariant(&disk, &t3), 9);
    }

    #[test]
    fn coloring_invariant_examples() {
        let t3 = build_transposition_quandle(3).unwrap().quandle;
        let same = cover(3, Base::Disk, &["(1 2)", "(1 2)"]);
        assert_eq!(coloring_invariant(&same, &t3).unwrap(), 3);
        let gen = cover(3, Base::Disk, &["(1 2)", "(2 3)"]);
        // homs T_3 → T_3: three constant maps and six bijections
        assert_eq!(coloring_invariant(&gen, &t3).unwrap(), 9);
    }

    #[test]
    fn hom_round_trip() {
        let t: Vec<Permutation> = vec![];
        assert_eq!(tuple_from_hom(&hom_from_tuple(&t)), t);
        let c = LCord::new(Cord::generator(2, 1).unwrap(), 1).unwrap();
        let h = hom_from_tuple(&conic(1).entries);
        assert_eq!(h.images.len(), 2);
        assert!(h.images.iter().all(|e| braid_eq(&e.augment(), &c.augment()).unwrap()));
    }

    #[test]
    fn hurwitz_move_is_precomposition() {
        // A right move at i corresponds to x_i ↦ x_{i+1}, x_{i+1} ↦ x_i ▷ x_{i+1}.
        let q = cover_quandle(4);
        let t = vec![p("(1 2)", 4), p("(2 3)", 4), p("(3 4)", 4)];
        let h = hom_from_tuple(&t);
        let moved = hurwitz_move(&q, &t, 1, Direction::Right).unwrap();
        let x = FreeQuandleElement::generator;
        let twisted = FreeQuandleElement::new(1, crate::free_group::FreeWord::generator(2));
        let images = [x(0), x(2), twisted];
        let via_hom: Vec<Permutation> = images.iter().map(|e| h.apply(&q, e).unwrap()).collect();
        assert_eq!(via_hom, moved);
        assert!(h.apply(&q, &x(5)).is_err());
    }

    #[test]
    fn moves_on_all_modes() {
        let e = MonodromyTuple::Lefschetz(e1(12));
        let moved = e.hurwitz_move(4, Direction::Right).unwrap();
        assert!(moved.validate(false).unwrap().valid);
        let b = MonodromyTuple::Braid(conic(1)).hurwitz_move(0, Direction::Left).unwrap();
        assert!(b.validate(false).unwrap().valid);
        assert!(MonodromyTuple::Braid(conic(1)).hurwitz_move(1, Direction::Left).is_err());
    }
}
