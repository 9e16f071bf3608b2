//! Artin braid groups, decided through the faithful Artin action on the free
//! group, together with the cord and L-cord quandles and their augmentation
//! into the braid group.
//!
//! A disk twist about a cord acts on other cords as right conjugation by the
//! cord's braid, `a ▷ b = b⁻¹ a b`. The mirror convention (conjugation by
//! `b a b⁻¹`) gives an isomorphic quandle with `▷` and `⊵` exchanged.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::free_group::{parse_power_token, FreeWord, Letter};
use crate::quandle::{AugmentedQuandle, Group, Quandle};

/// `σ_{generator+1}` or its inverse.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct BraidLetter {
    /// Zero-based: `generator = 0` is `σ₁`.
    pub generator: usize,
    pub inverse: bool,
}

impl BraidLetter {
    pub fn new(generator: usize, inverse: bool) -> Self {
        BraidLetter { generator, inverse }
    }

    pub fn inv(self) -> Self {
        BraidLetter { generator: self.generator, inverse: !self.inverse }
    }
}

/// A braid word on `strands` strands. Adjacent `σᵢσᵢ⁻¹` pairs are cancelled on
/// construction; equality of braids is [`braid_eq`], not `==` on words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Braid {
    strands: usize,
    word: Vec<BraidLetter>,
}

impl Braid {
    pub fn identity(strands: usize) -> Self {
        Braid { strands, word: Vec::new() }
    }

    /// `σᵢ` for one-based `i`.
    pub fn sigma(strands: usize, i: usize) -> Result<Self> {
        Self::from_letters(strands, [BraidLetter::new(i.wrapping_sub(1), false)])
    }

    pub fn sigma_inv(strands: usize, i: usize) -> Result<Self> {
        Self::from_letters(strands, [BraidLetter::new(i.wrapping_sub(1), true)])
    }

    pub fn from_letters<I: IntoIterator<Item = BraidLetter>>(strands: usize, letters: I) -> Result<Self> {
        if strands == 0 {
            return Err(Error::InvalidParameter("a braid needs at least one strand".into()));
        }
        let mut b = Braid::identity(strands);
        for l in letters {
            if l.generator + 1 >= strands {
                return Err(Error::IndexOutOfRange { index: l.generator + 1, len: strands - 1 });
            }
            b.push(l);
        }
        Ok(b)
    }

    /// Parses `s1 s2^-1 s1`; `1`, `e` or the empty string is the identity.
    pub fn parse(strands: usize, text: &str) -> Result<Self> {
        let t = text.trim();
        if t.is_empty() || t == "1" || t == "e" {
            return Self::from_letters(strands, []);
        }
        let letters = t
            .split_whitespace()
            .map(|tok| parse_power_token(tok, 's').map(|(i, inv)| BraidLetter::new(i - 1, inv)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_letters(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    fn push(&mut self, l: BraidLetter) {
        match self.word.last() {
            Some(&last) if last == l.inv() => {
                self.word.pop();
            }
            _ => self.word.push(l),
        }
    }

    /// Concatenation `self · other`.
    pub fn mul(&self, other: &Braid) -> Braid {
        assert_eq!(self.strands, other.strands, "strand counts differ");
        let mut out = self.clone();
        for &l in &other.word {
            out.push(l);
        }
        out
    }

    pub fn inverse(&self) -> Braid {
        Braid { strands: self.strands, word: self.word.iter().rev().map(|l| l.inv()).collect() }
    }

    pub fn pow(&self, e: i64) -> Braid {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut out = Braid::identity(self.strands);
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// `c⁻¹ · self · c`.
    pub fn conjugate_by(&self, c: &Braid) -> Braid {
        c.inverse().mul(self).mul(c)
    }

    /// Sum of exponents, a homomorphism to `ℤ`.
    pub fn exponent_sum(&self) -> i64 {
        self.word.iter().map(|l| if l.inverse { -1 } else { 1 }).sum()
    }
}

impl fmt::Display for Braid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .word
            .iter()
            .map(|l| {
                if l.inverse {
                    format!("s{}^-1", l.generator + 1)
                } else {
                    format!("s{}", l.generator + 1)
                }
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

impl fmt::Debug for Braid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}[{self}]", self.strands)
    }
}

/// Images of `x₁..x_n` under the Artin automorphism of the braid.
///
/// `σᵢ: xᵢ ↦ xᵢ xᵢ₊₁ xᵢ⁻¹, xᵢ₊₁ ↦ xᵢ`. A word acts by composition, so the
/// action of `ab` is `φ_a ∘ φ_b`; the images are updated in place letter by
/// letter, each new image being a short product of the current ones.
pub fn artin_action(b: &Braid) -> Vec<FreeWord> {
    let mut images: Vec<FreeWord> = (0..b.strands).map(FreeWord::generator).collect();
    for l in &b.word {
        let i = l.generator;
        let (xi, xj) = (images[i].clone(), images[i + 1].clone());
        if l.inverse {
            images[i] = xj.clone();
            images[i + 1] = xi.conjugate_by(&xj);
        } else {
            images[i] = xi.mul(&xj).mul(&xi.inverse());
            images[i + 1] = xi;
        }
    }
    images
}

pub fn braid_eq(a: &Braid, b: &Braid) -> Result<bool> {
    if a.strands != b.strands {
        return Err(Error::DimensionMismatch { expected: a.strands, found: b.strands });
    }
    Ok(artin_action(a) == artin_action(b))
}

/// `Δ² = (σ₁σ₂…σ_{n−1})ⁿ`.
pub fn full_twist(n: usize) -> Result<Braid> {
    let row: Vec<BraidLetter> = (0..n.saturating_sub(1)).map(|i| BraidLetter::new(i, false)).collect();
    Ok(Braid::from_letters(n, row)?.pow(n as i64))
}

/// The braid group `B_n` with semantic equality.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BraidGroup {
    pub strands: usize,
}

impl Group for BraidGroup {
    type Element = Braid;

    fn identity(&self) -> Braid {
        Braid::identity(self.strands)
    }

    fn multiply(&self, a: &Braid, b: &Braid) -> Braid {
        a.mul(b)
    }

    fn invert(&self, a: &Braid) -> Braid {
        a.inverse()
    }

    fn equal(&self, a: &Braid, b: &Braid) -> bool {
        braid_eq(a, b).unwrap_or(false)
    }
}

/// A conjugate `w⁻¹ σᵢ^{±1} w` of a braid generator, with its witness.
#[derive(Clone)]
pub struct Cord {
    conjugator: Braid,
    generator: usize,
    positive: bool,
}

/// Serialized witness of a cord: conjugator word, one-based generator index
/// and optional sign (`+1` by default).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CordSpec {
    pub conjugator: String,
    pub generator: usize,
    #[serde(default = "default_sign", skip_serializing_if = "is_positive")]
    pub sign: i8,
}

fn default_sign() -> i8 {
    1
}

fn is_positive(s: &i8) -> bool {
    *s == 1
}

impl Cord {
    /// `w⁻¹ σᵢ^{±1} w` for one-based `i`.
    pub fn new(conjugator: Braid, generator: usize, positive: bool) -> Result<Self> {
        let n = conjugator.strands;
        if generator == 0 || generator >= n {
            return Err(Error::IndexOutOfRange { index: generator, len: n.saturating_sub(1) });
        }
        Ok(Cord { conjugator, generator: generator - 1, positive })
    }

    /// The cord `σᵢ` itself.
    pub fn generator(strands: usize, i: usize) -> Result<Self> {
        Cord::new(Braid::identity(strands), i, true)
    }

    pub fn strands(&self) -> usize {
        self.conjugator.strands
    }

    pub fn conjugator(&self) -> &Braid {
        &self.conjugator
    }

    /// One-based index of the conjugated generator.
    pub fn generator_index(&self) -> usize {
        self.generator + 1
    }

    pub fn is_positive(&self) -> bool {
        self.positive
    }

    fn core(&self, power: i64) -> Braid {
        let e = if self.positive { power } else { -power };
        Braid { strands: self.strands(), word: vec![BraidLetter::new(self.generator, false)] }
            .pow(e)
            .conjugate_by(&self.conjugator)
    }

    /// The underlying braid `w⁻¹ σᵢ^{±1} w`.
    pub fn braid(&self) -> Braid {
        self.core(1)
    }

    /// `β^λ = w⁻¹ σᵢ^{±λ} w`.
    pub fn braid_pow(&self, lambda: i64) -> Braid {
        self.core(lambda)
    }

    /// The cord conjugated by `γ`, i.e. `γ⁻¹ β γ`.
    pub fn conjugated(&self, gamma: &Braid) -> Cord {
        Cord { conjugator: self.conjugator.mul(gamma), generator: self.generator, positive: self.positive }
    }

    /// Semantic key: the Artin images of the underlying braid.
    pub fn key(&self) -> Vec<FreeWord> {
        artin_action(&self.braid())
    }

    pub fn to_spec(&self) -> CordSpec {
        CordSpec {
            conjugator: self.conjugator.to_string(),
            generator: self.generator + 1,
            sign: if self.positive { 1 } else { -1 },
        }
    }

    pub fn from_spec(strands: usize, spec: &CordSpec) -> Result<Self> {
        let positive = match spec.sign {
            1 => true,
            -1 => false,
            s => return Err(Error::InvalidParameter(format!("cord sign must be ±1, got {s}"))),
        };
        Cord::new(Braid::parse(strands, &spec.conjugator)?, spec.generator, positive)
    }
}

impl fmt::Debug for Cord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.positive { "" } else { "^-1" };
        let core = format!("s{}{sign}", self.generator + 1);
        if self.conjugator.is_empty() {
            write!(f, "{core}")
        } else {
            write!(f, "({})^-1 {core} ({})", self.conjugator, self.conjugator)
        }
    }
}

/// `a ▷ b = b⁻¹ a b`, with witness `w_a · b`.
pub fn cord_op(a: &Cord, b: &Cord) -> Cord {
    a.conjugated(&b.braid())
}

/// `a ⊵ b = b a b⁻¹`.
pub fn cord_op_inv(a: &Cord, b: &Cord) -> Cord {
    a.conjugated(&b.braid().inverse())
}

/// A cord with a nonzero integer label.
#[derive(Clone)]
pub struct LCord {
    pub cord: Cord,
    pub label: i64,
}

/// Serialized L-cord: a cord witness plus its label.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LCordSpec {
    #[serde(flatten)]
    pub cord: CordSpec,
    pub label: i64,
}

impl LCord {
    pub fn new(cord: Cord, label: i64) -> Result<Self> {
        if label == 0 {
            return Err(Error::InvalidParameter("cord labels must be nonzero".into()));
        }
        Ok(LCord { cord, label })
    }

    pub fn strands(&self) -> usize {
        self.cord.strands()
    }

    /// The augmentation `β^λ`: `λ` copies of the half twist along the cord.
    pub fn augment(&self) -> Braid {
        self.cord.braid_pow(self.label)
    }

    pub fn to_spec(&self) -> LCordSpec {
        LCordSpec { cord: self.cord.to_spec(), label: self.label }
    }

    pub fn from_spec(strands: usize, spec: &LCordSpec) -> Result<Self> {
        LCord::new(Cord::from_spec(strands, &spec.cord)?, spec.label)
    }
}

impl fmt::Debug for LCord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {})", self.cord, self.label)
    }
}

/// `(α, l) ▷ (β, λ) = (β^{−λ} α β^λ, l)`.
pub fn lcord_op(a: &LCord, b: &LCord) -> LCord {
    LCord { cord: a.cord.conjugated(&b.augment()), label: a.label }
}

/// `(α, l) ⊵ (β, λ) = (β^λ α β^{−λ}, l)`.
pub fn lcord_op_inv(a: &LCord, b: &LCord) -> LCord {
    LCord { cord: a.cord.conjugated(&b.augment().inverse()), label: a.label }
}

/// The cord's own braid: the augmentation of the cord quandle.
pub fn augment_cord(c: &Cord) -> Braid {
    c.braid()
}

/// Conjugates of the positive generators of `B_n`, augmented by inclusion.
#[derive(Clone, Copy, Debug)]
pub struct CordQuandle {
    pub group: BraidGroup,
}

impl CordQuandle {
    pub fn new(strands: usize) -> Self {
        CordQuandle { group: BraidGroup { strands } }
    }
}

impl Quandle for CordQuandle {
    type Element = Cord;
    type Key = Vec<FreeWord>;

    fn rhd(&self, x: &Cord, y: &Cord) -> Cord {
        cord_op(x, y)
    }

    fn lhd(&self, x: &Cord, y: &Cord) -> Cord {
        cord_op_inv(x, y)
    }

    fn key(&self, x: &Cord) -> Vec<FreeWord> {
        x.key()
    }
}

impl AugmentedQuandle for CordQuandle {
    type Group = BraidGroup;

    fn group(&self) -> &BraidGroup {
        &self.group
    }

    fn augmentation(&self, q: &Cord) -> Braid {
        augment_cord(q)
    }

    fn act(&self, q: &Cord, g: &Braid) -> Cord {
        q.conjugated(g)
    }
}

/// L-cords for a finite label set `L` of nonzero integers.
#[derive(Clone, Debug)]
pub struct LCordQuandle {
    pub group: BraidGroup,
    pub labels: Vec<i64>,
}

impl LCordQuandle {
    pub fn new(strands: usize, labels: Vec<i64>) -> Result<Self> {
        if labels.contains(&0) {
            return Err(Error::InvalidParameter("cord labels must be nonzero".into()));
        }
        Ok(LCordQuandle { group: BraidGroup { strands }, labels })
    }

    /// Tangencies, nodes and cusps: `L = {1, 2, 3}`.
    pub fn monodromy_labels(strands: usize) -> Self {
        LCordQuandle { group: BraidGroup { strands }, labels: vec![1, 2, 3] }
    }

    pub fn contains(&self, q: &LCord) -> bool {
        q.strands() == self.group.strands && self.labels.contains(&q.label)
    }
}

impl Quandle for LCordQuandle {
    type Element = LCord;
    type Key = (Vec<FreeWord>, i64);

    fn rhd(&self, x: &LCord, y: &LCord) -> LCord {
        lcord_op(x, y)
    }

    fn lhd(&self, x: &LCord, y: &LCord) -> LCord {
        lcord_op_inv(x, y)
    }

    fn key(&self, x: &LCord) -> (Vec<FreeWord>, i64) {
        (x.cord.key(), x.label)
    }
}

impl AugmentedQuandle for LCordQuandle {
    type Group = BraidGroup;

    fn group(&self) -> &BraidGroup {
        &self.group
    }

    fn augmentation(&self, q: &LCord) -> Braid {
        q.augment()
    }

    fn act(&self, q: &LCord, g: &Braid) -> LCord {
        LCord { cord: q.cord.conjugated(g), label: q.label }
    }
}

impl FromStr for BraidLetter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (i, inv) = parse_power_token(s.trim(), 's')?;
        Ok(BraidLetter::new(i - 1, inv))
    }
}

impl From<BraidLetter> for Letter {
    fn from(l: BraidLetter) -> Letter {
        Letter::new(l.generator, l.inverse)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quandle::{check_augmentation, check_axioms_on};

    fn b(n: usize, s: &str) -> Braid {
        Braid::parse(n, s).unwrap()
    }

    fn w(s: &str) -> FreeWord {
        s.parse().unwrap()
    }

    #[test]
    fn artin_action_examples() {
        assert_eq!(artin_action(&b(3, "")), vec![w("x1"), w("x2"), w("x3")]);
        assert_eq!(artin_action(&b(2, "s1")), vec![w("x1 x2 x1^-1"), w("x1")]);
        assert_eq!(artin_action(&b(3, "s1 s2 s1")), artin_action(&b(3, "s2 s1 s2")));
    }

    #[test]
    fn inverse_letter_undoes_generator() {
        for n in 2..=4 {
            for i in 1..n {
                let s = Braid::sigma(n, i).unwrap();
                let mut word = s.letters().to_vec();
                word.push(BraidLetter::new(i - 1, true));
                let raw = Braid { strands: n, word };
                assert_eq!(artin_action(&raw), artin_action(&Braid::identity(n)));
            }
        }
    }

    #[test]
    fn equality_examples() {
        assert!(braid_eq(&b(2, "s1 s1^-1"), &b(2, "")).unwrap());
        assert!(braid_eq(&b(3, "s1 s2 s1"), &b(3, "s2 s1 s2")).unwrap());
        assert!(braid_eq(&b(4, "s1 s3"), &b(4, "s3 s1")).unwrap());
        assert!(!braid_eq(&b(3, "s1"), &b(3, "s2")).unwrap());
        assert!(braid_eq(&b(3, "s1"), &b(4, "s1")).is_err());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(b(3, "s1 s2^-1").to_string(), "s1 s2^-1");
        assert_eq!(b(3, "").to_string(), "1");
        assert!(Braid::parse(3, "s3").is_err());
        assert!(Braid::parse(3, "s0").is_err());
        assert!(Braid::parse(3, "t1").is_err());
        assert!(Braid::parse(0, "").is_err());
    }

    #[test]
    fn relations_hold_exhaustively() {
        for n in 2..=6 {
            for i in 1..n {
                for j in 1..n {
                    let si = Braid::sigma(n, i).unwrap();
                    let sj = Braid::sigma(n, j).unwrap();
                    if i.abs_diff(j) == 1 {
                        let l = si.mul(&sj).mul(&si);
                        let r = sj.mul(&si).mul(&sj);
                        assert!(braid_eq(&l, &r).unwrap(), "n={n} i={i} j={j}");
                    } else if i != j {
                        assert!(braid_eq(&si.mul(&sj), &sj.mul(&si)).unwrap());
                    } else {
                        assert!(!braid_eq(&si, &Braid::identity(n)).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn full_twist_examples() {
        assert!(full_twist(1).unwrap().is_empty());
        assert!(braid_eq(&full_twist(2).unwrap(), &b(2, "s1 s1")).unwrap());
        for n in 2..=5 {
            let d = full_twist(n).unwrap();
            assert_eq!(d.exponent_sum(), (n * (n - 1)) as i64);
            for i in 1..n {
                let s = Braid::sigma(n, i).unwrap();
                assert!(braid_eq(&d.mul(&s), &s.mul(&d)).unwrap());
            }
        }
        assert!(full_twist(0).is_err());
    }

    #[test]
    fn cord_examples() {
        let s1 = Cord::generator(3, 1).unwrap();
        let s2 = Cord::generator(3, 2).unwrap();
        assert!(braid_eq(&cord_op(&s1, &s1).braid(), &s1.braid()).unwrap());
        let c = cord_op(&s1, &s2);
        assert!(braid_eq(&c.braid(), &b(3, "s2^-1 s1 s2")).unwrap());
        assert!(braid_eq(&c.braid(), &b(3, "s1 s2 s1^-1")).unwrap());
        assert!(braid_eq(&cord_op_inv(&c, &s2).braid(), &s1.braid()).unwrap());
        assert!(Cord::generator(3, 3).is_err());
    }

    #[test]
    fn lcord_examples() {
        let a = LCord::new(Cord::generator(3, 1).unwrap(), 1).unwrap();
        let bb = LCord::new(Cord::generator(3, 2).unwrap(), 2).unwrap();
        let c = lcord_op(&a, &bb);
        assert_eq!(c.label, 1);
        assert!(braid_eq(&c.cord.braid(), &b(3, "s2^-1 s2^-1 s1 s2 s2")).unwrap());
        let back = lcord_op_inv(&c, &bb);
        assert!(braid_eq(&back.cord.braid(), &a.cord.braid()).unwrap());
        let unit = LCord::new(Cord::generator(3, 2).unwrap(), 1).unwrap();
        assert!(braid_eq(&lcord_op(&a, &unit).cord.braid(), &cord_op(&a.cord, &unit.cord).braid()).unwrap());
        assert!(LCord::new(Cord::generator(3, 1).unwrap(), 0).is_err());
    }

    #[test]
    fn augmentation_examples() {
        let s1 = Cord::generator(2, 1).unwrap();
        assert!(braid_eq(&augment_cord(&s1), &b(2, "s1")).unwrap());
        let l = LCord::new(s1, 3).unwrap();
        assert!(braid_eq(&l.augment(), &b(2, "s1 s1 s1")).unwrap());
    }

    #[test]
    fn cord_quandle_axioms_and_augmentation() {
        let q = CordQuandle::new(3);
        let sample = vec![
            Cord::generator(3, 1).unwrap(),
            Cord::generator(3, 2).unwrap(),
            Cord::new(b(3, "s2"), 1, true).unwrap(),
            Cord::new(b(3, "s1^-1 s2"), 2, true).unwrap(),
        ];
        assert!(check_axioms_on(&q, &sample).passed);
        let gammas = vec![b(3, "s1"), b(3, "s2^-1 s1"), b(3, "")];
        assert!(check_augmentation(&q, &sample, &gammas).passed);

        let lq = LCordQuandle::monodromy_labels(3);
        let lsample: Vec<LCord> = sample
            .iter()
            .zip([1, 2, 3, 2])
            .map(|(c, l)| LCord::new(c.clone(), l).unwrap())
            .collect();
        assert!(check_axioms_on(&lq, &lsample).passed);
        assert!(check_augmentation(&lq, &lsample, &gammas).passed);
    }

    #[test]
    fn witness_json_round_trip() {
        let c = LCord::new(Cord::new(b(3, "s2 s1^-1"), 1, true).unwrap(), 2).unwrap();
        let json = serde_json::to_string(&c.to_spec()).unwrap();
        assert_eq!(json, r#"{"conjugator":"s2 s1^-1","generator":1,"label":2}"#);
        let spec: LCordSpec = serde_json::from_str(&json).unwrap();
        let back = LCord::from_spec(3, &spec).unwrap();
        assert!(braid_eq(&back.augment(), &c.augment()).unwrap());
    }
}
