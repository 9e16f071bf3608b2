//! Quandles coming from groups: conjugation quandles of permutation groups,
//! the cyclic-class and transposition quandles of branched covers, the
//! seventeen-element genus-two quotient, and free quandles realised as
//! conjugates of generators in a free group.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::free_group::{FreeWord, Letter};
use crate::perm::Permutation;
use crate::quandle::{AugmentedQuandle, FiniteQuandle, Group, Quandle};

/// `x ▷ y = y⁻¹ x y`.
pub fn conj_op<G: Group>(g: &G, x: &G::Element, y: &G::Element) -> G::Element {
    g.conjugate(x, y)
}

/// `x ⊵ y = y x y⁻¹`.
pub fn conj_op_inv<G: Group>(g: &G, x: &G::Element, y: &G::Element) -> G::Element {
    g.multiply(&g.multiply(y, x), &g.invert(y))
}

/// The symmetric group on `degree` letters, composing left to right.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymmetricGroup {
    pub degree: usize,
}

impl Group for SymmetricGroup {
    type Element = Permutation;

    fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    fn multiply(&self, a: &Permutation, b: &Permutation) -> Permutation {
        a.then(b)
    }

    fn invert(&self, a: &Permutation) -> Permutation {
        a.inverse()
    }

    fn equal(&self, a: &Permutation, b: &Permutation) -> bool {
        a == b
    }
}

/// A union of conjugacy classes in a group, as a quandle under conjugation.
///
/// With `carrier: None` the whole (possibly infinite) group is used. The
/// augmentation is the inclusion and the action is conjugation.
#[derive(Clone, Debug)]
pub struct ConjugationQuandle<G: Group> {
    pub group: G,
    pub carrier: Option<Vec<G::Element>>,
}

impl<G> Quandle for ConjugationQuandle<G>
where
    G: Group,
    G::Element: Eq + Hash,
{
    type Element = G::Element;
    type Key = G::Element;

    fn rhd(&self, x: &G::Element, y: &G::Element) -> G::Element {
        conj_op(&self.group, x, y)
    }

    fn lhd(&self, x: &G::Element, y: &G::Element) -> G::Element {
        conj_op_inv(&self.group, x, y)
    }

    fn key(&self, x: &G::Element) -> G::Element {
        x.clone()
    }

    fn elements(&self) -> Option<Vec<G::Element>> {
        self.carrier.clone()
    }
}

impl<G> AugmentedQuandle for ConjugationQuandle<G>
where
    G: Group,
    G::Element: Eq + Hash,
{
    type Group = G;

    fn group(&self) -> &G {
        &self.group
    }

    fn augmentation(&self, q: &G::Element) -> G::Element {
        q.clone()
    }

    fn act(&self, q: &G::Element, g: &G::Element) -> G::Element {
        self.group.conjugate(q, g)
    }
}

/// Tabulates the conjugation quandle on `elements` (which must be closed
/// under conjugation by one another).
pub fn conjugation_table<G>(
    group: &G,
    elements: &[G::Element],
    label: impl Fn(&G::Element) -> String,
) -> Result<FiniteQuandle>
where
    G: Group,
    G::Element: Eq + Hash,
{
    let index: HashMap<&G::Element, usize> =
        elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let mut rhd = Vec::with_capacity(elements.len());
    for x in elements {
        let mut row = Vec::with_capacity(elements.len());
        for y in elements {
            let z = conj_op(group, x, y);
            let i = *index.get(&z).ok_or_else(|| {
                Error::InvalidParameter(format!("{z:?} = {x:?} ▷ {y:?} leaves the carrier"))
            })?;
            row.push(i);
        }
        rhd.push(row);
    }
    FiniteQuandle::from_rhd(rhd)?.with_labels(elements.iter().map(label).collect())
}

/// A finite quandle together with an augmentation into a permutation group,
/// satisfying `ℓ(x ▷ y) = ℓ(y)⁻¹ ℓ(x) ℓ(y)`.
///
/// Monodromy closure conditions (ordered products, transitivity) are
/// evaluated through the augmentation.
#[derive(Clone, Debug)]
pub struct PermutationAugmented {
    pub quandle: FiniteQuandle,
    pub augmentation: Vec<Permutation>,
    pub degree: usize,
}

impl PermutationAugmented {
    pub fn new(quandle: FiniteQuandle, augmentation: Vec<Permutation>) -> Result<Self> {
        if augmentation.len() != quandle.len() {
            return Err(Error::DimensionMismatch {
                expected: quandle.len(),
                found: augmentation.len(),
            });
        }
        let degree = augmentation.first().map_or(0, Permutation::degree);
        if augmentation.iter().any(|p| p.degree() != degree) {
            return Err(Error::InvalidParameter("augmentation degrees differ".into()));
        }
        Ok(PermutationAugmented { quandle, augmentation, degree })
    }

    /// The inner augmentation `y ↦ (x ↦ x ▷ y)`, available for every finite
    /// quandle.
    pub fn inner(quandle: FiniteQuandle) -> Self {
        let augmentation = (0..quandle.len()).map(|y| quandle.right_translation(y)).collect();
        let degree = quandle.len();
        PermutationAugmented { quandle, augmentation, degree }
    }

    /// Whether `ℓ(x ▷ y) = ℓ(y)⁻¹ ℓ(x) ℓ(y)` holds for all pairs.
    pub fn is_equivariant(&self) -> bool {
        let q = &self.quandle;
        (0..q.len()).all(|x| {
            (0..q.len()).all(|y| {
                self.augmentation[q.op(x, y)]
                    == self.augmentation[x].conjugate_by(&self.augmentation[y])
            })
        })
    }
}

fn permutation_quandle(degree: usize, carrier: Vec<Permutation>) -> Result<PermutationAugmented> {
    let group = SymmetricGroup { degree };
    let quandle = conjugation_table(&group, &carrier, |p| p.to_string())?;
    PermutationAugmented::new(quandle, carrier)
}

fn require_degree(d: usize) -> Result<()> {
    if d < 2 {
        return Err(Error::InvalidParameter(format!("sheet count must be at least 2, got {d}")));
    }
    Ok(())
}

/// Permutations of `d` letters with exactly one nontrivial cycle, ordered by
/// one-line notation.
pub fn cyclic_permutations(d: usize) -> Vec<Permutation> {
    Permutation::all(d).into_iter().filter(Permutation::is_cyclic).collect()
}

/// The `d(d−1)/2` transpositions `(a b)`, `a < b`, in lexicographic order.
pub fn transpositions(d: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    for a in 1..=d {
        for b in a + 1..=d {
            out.push(Permutation::transposition(d, a, b).expect("letters in range"));
        }
    }
    out
}

/// `ℭ_d`: all cyclic permutations of `d` letters under conjugation.
pub fn build_cyclic_class_quandle(d: usize) -> Result<PermutationAugmented> {
    require_degree(d)?;
    permutation_quandle(d, cyclic_permutations(d))
}

/// `𝔗_d`: all transpositions of `d` letters under conjugation.
pub fn build_transposition_quandle(d: usize) -> Result<PermutationAugmented> {
    require_degree(d)?;
    permutation_quandle(d, transpositions(d))
}

/// The whole symmetric group `S_d` as a conjugation quandle.
pub fn build_symmetric_conjugation_quandle(d: usize) -> Result<PermutationAugmented> {
    if d == 0 {
        return Err(Error::InvalidParameter("S_0 is not supported".into()));
    }
    permutation_quandle(d, Permutation::all(d))
}

/// Element of `ℤ/10 × S_6`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Genus2Element {
    pub residue: u8,
    pub perm: Permutation,
}

impl fmt::Debug for Genus2Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = if self.perm.is_identity() { "e".to_string() } else { self.perm.to_string() };
        write!(f, "({},{})", self.residue, p)
    }
}

/// `ℤ/10 × S_6` with componentwise multiplication.
#[derive(Clone, Copy, Debug, Default)]
pub struct Genus2QuotientGroup;

impl Group for Genus2QuotientGroup {
    type Element = Genus2Element;

    fn identity(&self) -> Genus2Element {
        Genus2Element { residue: 0, perm: Permutation::identity(6) }
    }

    fn multiply(&self, a: &Genus2Element, b: &Genus2Element) -> Genus2Element {
        Genus2Element { residue: (a.residue + b.residue) % 10, perm: a.perm.then(&b.perm) }
    }

    fn invert(&self, a: &Genus2Element) -> Genus2Element {
        Genus2Element { residue: (10 - a.residue) % 10, perm: a.perm.inverse() }
    }

    fn equal(&self, a: &Genus2Element, b: &Genus2Element) -> bool {
        a == b
    }
}

impl Genus2Element {
    /// Faithful embedding into `S_16`: the `ℤ/10` factor rotates letters
    /// 7..16, the `S_6` factor acts on letters 1..6.
    pub fn to_permutation(&self) -> Permutation {
        let mut images: Vec<usize> = self.perm.images().to_vec();
        images.extend((0..10).map(|i| 6 + (i + self.residue as usize) % 10));
        Permutation::from_images(images).expect("embedding is a bijection")
    }
}

/// The carrier `{(0,e), (2,e)} ∪ {(1,(a b)) : 1 ≤ a < b ≤ 6}` of the
/// genus-two quotient quandle, in that order.
pub fn genus2_carrier() -> Vec<Genus2Element> {
    let e = Permutation::identity(6);
    let mut out = vec![
        Genus2Element { residue: 0, perm: e.clone() },
        Genus2Element { residue: 2, perm: e },
    ];
    out.extend(transpositions(6).into_iter().map(|perm| Genus2Element { residue: 1, perm }));
    out
}

/// The seventeen-element quotient of the genus-two Dehn quandle, as a
/// conjugation quandle inside `ℤ/10 × S_6`.
pub fn build_genus2_quotient() -> Result<PermutationAugmented> {
    let carrier = genus2_carrier();
    let quandle = conjugation_table(&Genus2QuotientGroup, &carrier, |e| format!("{e:?}"))?;
    let augmentation = carrier.iter().map(Genus2Element::to_permutation).collect();
    PermutationAugmented::new(quandle, augmentation)
}

/// Element `w⁻¹ x_i w` of the free quandle, with `w` freely reduced and not
/// starting with `x_i^{±1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeQuandleElement {
    generator: usize,
    conjugator: FreeWord,
}

impl FreeQuandleElement {
    /// Canonicalises `w⁻¹ x_i w` (`generator` zero-based).
    pub fn new(generator: usize, conjugator: FreeWord) -> Self {
        let skip = conjugator
            .letters()
            .iter()
            .take_while(|l| l.generator == generator)
            .count();
        let conjugator = FreeWord::from_letters(conjugator.letters()[skip..].iter().copied());
        FreeQuandleElement { generator, conjugator }
    }

    pub fn generator(generator: usize) -> Self {
        FreeQuandleElement { generator, conjugator: FreeWord::identity() }
    }

    pub fn generator_index(&self) -> usize {
        self.generator
    }

    pub fn conjugator(&self) -> &FreeWord {
        &self.conjugator
    }

    /// The embedded group element `w⁻¹ x_i w`.
    pub fn to_word(&self) -> FreeWord {
        FreeWord::generator(self.generator).conjugate_by(&self.conjugator)
    }
}

impl fmt::Display for FreeQuandleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.conjugator.is_empty() {
            write!(f, "@ {}", self.generator + 1)
        } else {
            write!(f, "{} @ {}", self.conjugator, self.generator + 1)
        }
    }
}

impl fmt::Debug for FreeQuandleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for FreeQuandleElement {
    type Err = Error;

    /// `"<conjugator word> @ <generator>"`, e.g. `"x2^-1 x1 x2 @ 1"`; a bare
    /// `"x3"` is the generator itself.
    fn from_str(s: &str) -> Result<Self> {
        match s.split_once('@') {
            Some((word, gen)) => {
                let generator: usize = gen
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad generator index in {s:?}")))?;
                if generator == 0 {
                    return Err(Error::Parse("generator indices are one-based".into()));
                }
                Ok(FreeQuandleElement::new(generator - 1, word.parse()?))
            }
            None => {
                let w: FreeWord = s.parse()?;
                match w.letters() {
                    [Letter { generator, inverse: false }] => {
                        Ok(FreeQuandleElement::generator(*generator))
                    }
                    _ => Err(Error::Parse(format!("expected '<word> @ <i>' or 'x<i>', got {s:?}"))),
                }
            }
        }
    }
}

/// The free quandle on `generators` generators.
#[derive(Clone, Copy, Debug)]
pub struct FreeQuandle {
    pub generators: usize,
}

/// `a ▷ b`: conjugates `a` by `ℓ(b) = w_b⁻¹ x_{i_b} w_b` and renormalises.
pub fn free_quandle_op(a: &FreeQuandleElement, b: &FreeQuandleElement) -> FreeQuandleElement {
    FreeQuandleElement::new(a.generator, a.conjugator.mul(&b.to_word()))
}

/// `a ⊵ b`: conjugates `a` by `ℓ(b)⁻¹`.
pub fn free_quandle_op_inv(a: &FreeQuandleElement, b: &FreeQuandleElement) -> FreeQuandleElement {
    FreeQuandleElement::new(a.generator, a.conjugator.mul(&b.to_word().inverse()))
}

impl Quandle for FreeQuandle {
    type Element = FreeQuandleElement;
    type Key = FreeQuandleElement;

    fn rhd(&self, x: &FreeQuandleElement, y: &FreeQuandleElement) -> FreeQuandleElement {
        free_quandle_op(x, y)
    }

    fn lhd(&self, x: &FreeQuandleElement, y: &FreeQuandleElement) -> FreeQuandleElement {
        free_quandle_op_inv(x, y)
    }

    fn key(&self, x: &FreeQuandleElement) -> FreeQuandleElement {
        x.clone()
    }
}

/// Evaluates a free-quandle element under the generator assignment `images`:
/// `w⁻¹ x_i w` becomes `images[i] ▷^{±1} images[j₁] ▷^{±1} …` following `w`.
pub fn evaluate<Q: Quandle>(q: &Q, images: &[Q::Element], e: &FreeQuandleElement) -> Q::Element {
    let mut acc = images[e.generator].clone();
    for l in e.conjugator.letters() {
        let y = &images[l.generator];
        acc = if l.inverse { q.lhd(&acc, y) } else { q.rhd(&acc, y) };
    }
    acc
}

/// A finite quandle presentation: free generators and relations `lhs = rhs`.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub generators: usize,
    pub relations: Vec<(FreeQuandleElement, FreeQuandleElement)>,
}

impl Presentation {
    pub fn free(generators: usize) -> Self {
        Presentation { generators, relations: Vec::new() }
    }

    fn check(&self) -> Result<()> {
        for (a, b) in &self.relations {
            for e in [a, b] {
                let top = e.conjugator.max_generator().unwrap_or(0).max(e.generator);
                if top >= self.generators {
                    return Err(Error::IndexOutOfRange { index: top, len: self.generators });
                }
            }
        }
        Ok(())
    }
}

/// All generator assignments into `tgt` satisfying the relations, i.e. the
/// homomorphisms from the presented quandle, in lexicographic order.
pub fn enumerate_presentation_homs(p: &Presentation, tgt: &FiniteQuandle) -> Result<Vec<Vec<usize>>> {
    p.check()?;
    let mut out = Vec::new();
    let mut current = vec![0usize; p.generators];
    if p.generators > 0 && tgt.is_empty() {
        return Ok(out);
    }
    loop {
        if p
            .relations
            .iter()
            .all(|(a, b)| evaluate(tgt, &current, a) == evaluate(tgt, &current, b))
        {
            out.push(current.clone());
        }
        // odometer, last position fastest
        let mut i = p.generators;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            current[i] += 1;
            if current[i] < tgt.len() {
                break;
            }
            current[i] = 0;
        }
    }
}
