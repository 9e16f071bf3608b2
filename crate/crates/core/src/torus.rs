//! The Dehn quandle of the torus: slopes, twist matrices in `SL(2,ℤ)`, and
//! the augmented Dehn quandle.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::bigint_json::JsonInt;
use crate::error::{Error, Result};
use crate::quandle::{AugmentedQuandle, Group, Quandle};

/// Exponent `ε` in `M_{p▷q} = M_q^ε · M_p · M_q^{−ε}`.
///
/// The two candidate readings give `ε = −1` (conjugate `M_q⁻¹ M_p M_q`) or
/// `ε = +1` (`M_q M_p M_q⁻¹`). With `slope_op` as implemented, `p ▷ q` is the
/// image of `p` under `M_q⁻¹`, so `ε = −1`; `tests::conjugation_exponent_is_pinned`
/// re-derives it and checks that `+1` fails.
pub const CONJUGATION_EXPONENT: i32 = -1;

/// An isotopy class of simple closed curves on the torus: the contractible
/// class `I`, or a slope `y/x` stored as a coprime pair with `x > 0`, or
/// `x = 0, y = 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Slope {
    Contractible,
    Curve { x: BigInt, y: BigInt },
}

impl Slope {
    /// The slope through the primitive vector `(x, y)`, in canonical sign.
    pub fn new(x: BigInt, y: BigInt) -> Result<Self> {
        if !x.gcd(&y).is_one() {
            return Err(Error::InvalidParameter(format!(
                "slope {y}/{x} needs coprime coordinates"
            )));
        }
        Ok(Self::canonical(x, y))
    }

    pub fn from_ints(x: i64, y: i64) -> Result<Self> {
        Self::new(BigInt::from(x), BigInt::from(y))
    }

    fn canonical(x: BigInt, y: BigInt) -> Self {
        if x.is_negative() || (x.is_zero() && y.is_negative()) {
            Slope::Curve { x: -x, y: -y }
        } else {
            Slope::Curve { x, y }
        }
    }

    /// Wraps a vector known to be primitive; panics otherwise, since the
    /// twist formulas and unimodular maps preserve primitivity.
    fn from_primitive(x: BigInt, y: BigInt) -> Self {
        assert!(x.gcd(&y).is_one(), "non-primitive image ({x}, {y}): arithmetic invariant broken");
        Self::canonical(x, y)
    }

    pub fn is_contractible(&self) -> bool {
        matches!(self, Slope::Contractible)
    }

    /// Canonical `(x, y)`, or `None` for `I`.
    pub fn coords(&self) -> Option<(&BigInt, &BigInt)> {
        match self {
            Slope::Contractible => None,
            Slope::Curve { x, y } => Some((x, y)),
        }
    }

    /// `max(|x|, |y|)`; zero for `I`.
    pub fn height(&self) -> BigInt {
        match self {
            Slope::Contractible => BigInt::zero(),
            Slope::Curve { x, y } => x.abs().max(y.abs()),
        }
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slope::Contractible => f.write_str("I"),
            Slope::Curve { x, y } => write!(f, "{y}/{x}"),
        }
    }
}

impl fmt::Debug for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Slope {
    type Err = Error;

    /// `y/x` or `I`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t == "I" {
            return Ok(Slope::Contractible);
        }
        let (y, x) = t
            .split_once('/')
            .ok_or_else(|| Error::Parse(format!("expected y/x or I, got {s:?}")))?;
        let parse = |v: &str| {
            v.trim()
                .parse::<BigInt>()
                .map_err(|_| Error::Parse(format!("bad integer {v:?} in slope {s:?}")))
        };
        Slope::new(parse(x)?, parse(y)?)
    }
}

impl Serialize for Slope {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Slope {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// All slopes with `|x|, |y| ≤ height`, in canonical order, without `I`.
pub fn slopes_up_to(height: i64) -> Vec<Slope> {
    let mut out = Vec::new();
    if height >= 1 {
        out.push(Slope::from_ints(0, 1).unwrap());
    }
    for x in 1..=height {
        for y in -height..=height {
            if x.gcd(&y) == 1 {
                out.push(Slope::from_ints(x, y).unwrap());
            }
        }
    }
    out.sort();
    out
}

/// `v/u ▷ y/x = (v − vxy + uy²)/(u + uxy − vx²)`; `I ▷ q = I`, `q ▷ I = q`.
pub fn slope_op(p: &Slope, q: &Slope) -> Slope {
    twist_formula(p, q, false)
}

/// `v/u ⊵ y/x = (v + vxy − uy²)/(u − uxy + vx²)`; `I ⊵ q = I`, `q ⊵ I = q`.
pub fn slope_op_inv(p: &Slope, q: &Slope) -> Slope {
    twist_formula(p, q, true)
}

fn twist_formula(p: &Slope, q: &Slope, inverse: bool) -> Slope {
    let (Slope::Curve { x: u, y: v }, Slope::Curve { x, y }) = (p, q) else {
        return p.clone();
    };
    // Both formulas are p + s·⟨p,q⟩·q with ⟨p,q⟩ = uy − vx and s = ±1.
    let mut pairing = u * y - v * x;
    if inverse {
        pairing = -pairing;
    }
    Slope::from_primitive(u + &pairing * x, v + &pairing * y)
}

/// A 2×2 integer matrix of determinant 1: `[[a, b], [c, d]]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SL2Matrix {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

impl SL2Matrix {
    pub fn new(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Result<Self> {
        if !(&a * &d - &b * &c).is_one() {
            return Err(Error::InvalidParameter(format!(
                "[[{a},{b}],[{c},{d}]] has determinant ≠ 1"
            )));
        }
        Ok(SL2Matrix { a, b, c, d })
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        Self::new(a.into(), b.into(), c.into(), d.into())
    }

    pub fn identity() -> Self {
        SL2Matrix { a: One::one(), b: Zero::zero(), c: Zero::zero(), d: One::one() }
    }

    pub fn entries(&self) -> [&BigInt; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn rows(&self) -> [[BigInt; 2]; 2] {
        [[self.a.clone(), self.b.clone()], [self.c.clone(), self.d.clone()]]
    }

    pub fn trace(&self) -> BigInt {
        &self.a + &self.d
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    /// Ordinary matrix product `self · other`.
    pub fn mul(&self, o: &SL2Matrix) -> SL2Matrix {
        SL2Matrix {
            a: &self.a * &o.a + &self.b * &o.c,
            b: &self.a * &o.b + &self.b * &o.d,
            c: &self.c * &o.a + &self.d * &o.c,
            d: &self.c * &o.b + &self.d * &o.d,
        }
    }

    pub fn inverse(&self) -> SL2Matrix {
        SL2Matrix { a: self.d.clone(), b: -&self.b, c: -&self.c, d: self.a.clone() }
    }

    pub fn pow(&self, e: i64) -> SL2Matrix {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut out = Self::identity();
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// `M · (x, y)ᵀ`.
    pub fn apply(&self, x: &BigInt, y: &BigInt) -> (BigInt, BigInt) {
        (&self.a * x + &self.b * y, &self.c * x + &self.d * y)
    }
}

impl fmt::Display for SL2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.a, self.b, self.c, self.d)
    }
}

impl fmt::Debug for SL2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for SL2Matrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows = self.rows().map(|r| r.map(JsonInt));
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SL2Matrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [[a, b], [c, d]] = <[[JsonInt; 2]; 2]>::deserialize(d)?;
        SL2Matrix::new(a.0, b.0, c.0, d.0).map_err(serde::de::Error::custom)
    }
}

/// `M_{y/x} = [[1 − xy, x²], [−y², 1 + xy]]`; the identity for `I`.
pub fn twist_matrix(q: &Slope) -> SL2Matrix {
    match q {
        Slope::Contractible => SL2Matrix::identity(),
        Slope::Curve { x, y } => {
            let xy = x * y;
            SL2Matrix {
                a: BigInt::one() - &xy,
                b: x * x,
                c: -(y * y),
                d: BigInt::one() + &xy,
            }
        }
    }
}

/// Inverts [`twist_matrix`]: the identity gives `I`, a matrix of the form
/// `M_{y/x}` gives its slope, anything else gives `None`.
pub fn slope_from_matrix(m: &SL2Matrix) -> Option<Slope> {
    if m.is_identity() {
        return Some(Slope::Contractible);
    }
    if m.trace() != BigInt::from(2) || m.b.is_negative() || m.c.is_positive() {
        return None;
    }
    let x = m.b.sqrt();
    let y_abs = (-&m.c).sqrt();
    if &x * &x != m.b || &y_abs * &y_abs != -&m.c {
        return None;
    }
    // The diagonal fixes the sign of xy.
    let diff = &m.d - &m.a;
    if diff.is_odd() {
        return None;
    }
    let xy: BigInt = diff / 2;
    let y = if xy.is_negative() { -y_abs } else { y_abs };
    if &x * &y != xy {
        return None;
    }
    let slope = Slope::new(x, y).ok()?;
    (twist_matrix(&slope) == *m).then_some(slope)
}

/// The mapping class `M` applied to a slope; `I` is fixed.
pub fn matrix_act_on_slope(q: &Slope, m: &SL2Matrix) -> Slope {
    match q {
        Slope::Contractible => Slope::Contractible,
        Slope::Curve { x, y } => {
            let (nx, ny) = m.apply(x, y);
            Slope::from_primitive(nx, ny)
        }
    }
}

/// The torus Dehn quandle `D(T²)` on slopes and `I`.
#[derive(Clone, Copy, Debug, Default)]
pub struct TorusDehnQuandle;

impl Quandle for TorusDehnQuandle {
    type Element = Slope;
    type Key = Slope;

    fn rhd(&self, x: &Slope, y: &Slope) -> Slope {
        slope_op(x, y)
    }

    fn lhd(&self, x: &Slope, y: &Slope) -> Slope {
        slope_op_inv(x, y)
    }

    fn key(&self, x: &Slope) -> Slope {
        x.clone()
    }
}

/// The torus mapping class group `SL(2,ℤ)`, multiplied in composition
/// order: `g · h` means "apply `g`, then `h`", which is the matrix `h·g`.
///
/// This is the order under which `[q]·[h] = [h(q)]` is a right action.
#[derive(Clone, Copy, Debug, Default)]
pub struct TorusMappingClassGroup;

impl Group for TorusMappingClassGroup {
    type Element = SL2Matrix;

    fn identity(&self) -> SL2Matrix {
        SL2Matrix::identity()
    }

    fn multiply(&self, g: &SL2Matrix, h: &SL2Matrix) -> SL2Matrix {
        h.mul(g)
    }

    fn invert(&self, g: &SL2Matrix) -> SL2Matrix {
        g.inverse()
    }

    fn equal(&self, a: &SL2Matrix, b: &SL2Matrix) -> bool {
        a == b
    }
}

impl AugmentedQuandle for TorusDehnQuandle {
    type Group = TorusMappingClassGroup;

    fn group(&self) -> &TorusMappingClassGroup {
        &TorusMappingClassGroup
    }

    fn augmentation(&self, q: &Slope) -> SL2Matrix {
        twist_matrix(q)
    }

    fn act(&self, q: &Slope, g: &SL2Matrix) -> Slope {
        matrix_act_on_slope(q, g)
    }
}

/// A slope with a twist sign, as used for achiral Lefschetz monodromy.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedSlope {
    pub slope: Slope,
    pub positive: bool,
}

impl SignedSlope {
    pub fn positive(slope: Slope) -> Self {
        SignedSlope { slope, positive: true }
    }

    /// `M_q` for a positive entry, `M_q⁻¹` for a negative one.
    pub fn twist(&self) -> SL2Matrix {
        let m = twist_matrix(&self.slope);
        if self.positive {
            m
        } else {
            m.inverse()
        }
    }
}

impl fmt::Debug for SignedSlope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.slope, if self.positive { '+' } else { '-' })
    }
}

/// The achiral torus Dehn quandle on signed slopes.
///
/// `(p,σ) ▷ (q,+) = (p ▷ q, σ)` and `(p,σ) ▷ (q,−) = (p ⊵ q, σ)`, so that a
/// Hurwitz move preserves the ordered product of the twists
/// [`SignedSlope::twist`]. This is [`crate::achiral_double`] with the sign
/// labels exchanged.
#[derive(Clone, Copy, Debug, Default)]
pub struct SignedSlopeQuandle;

impl Quandle for SignedSlopeQuandle {
    type Element = SignedSlope;
    type Key = SignedSlope;

    fn rhd(&self, p: &SignedSlope, q: &SignedSlope) -> SignedSlope {
        let slope = if q.positive { slope_op(&p.slope, &q.slope) } else { slope_op_inv(&p.slope, &q.slope) };
        SignedSlope { slope, positive: p.positive }
    }

    fn lhd(&self, p: &SignedSlope, q: &SignedSlope) -> SignedSlope {
        let slope = if q.positive { slope_op_inv(&p.slope, &q.slope) } else { slope_op(&p.slope, &q.slope) };
        SignedSlope { slope, positive: p.positive }
    }

    fn key(&self, p: &SignedSlope) -> SignedSlope {
        p.clone()
    }
}
