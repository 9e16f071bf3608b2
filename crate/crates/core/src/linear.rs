//! Quandles from linear algebra over `ℤ` and `ℤ/m`: Alexander quandles,
//! alternating quandles of alternating forms, their reductions modulo
//! negation, and the homology (Dehn) quandles of closed surfaces.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::bigint_json::{unwrap_matrix, wrap_matrix, JsonInt};
use crate::error::{Error, Result};
use crate::quandle::{FiniteQuandle, Quandle};
use crate::torus::Slope;

/// Coefficient ring `ℤ/m`, with `m = 0` meaning `ℤ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RingSpec {
    pub modulus: u64,
}

impl RingSpec {
    pub const INTEGERS: RingSpec = RingSpec { modulus: 0 };

    pub fn modulo(m: u64) -> Self {
        RingSpec { modulus: m }
    }

    pub fn is_integers(&self) -> bool {
        self.modulus == 0
    }

    pub fn reduce(&self, v: BigInt) -> BigInt {
        if self.modulus == 0 {
            v
        } else {
            v.mod_floor(&BigInt::from(self.modulus))
        }
    }

    pub fn is_unit(&self, v: &BigInt) -> bool {
        if self.modulus == 0 {
            v.abs().is_one()
        } else {
            v.gcd(&BigInt::from(self.modulus)).is_one()
        }
    }

    /// Multiplicative inverse of a unit.
    pub fn unit_inverse(&self, v: &BigInt) -> Option<BigInt> {
        if self.modulus == 0 {
            return v.abs().is_one().then(|| v.clone());
        }
        let m = BigInt::from(self.modulus);
        let e = self.reduce(v.clone()).extended_gcd(&m);
        e.gcd.is_one().then(|| self.reduce(e.x))
    }

    fn has_two_torsion(&self) -> bool {
        self.modulus != 0 && self.modulus.is_multiple_of(2)
    }

    /// Carrier size of `R^dim`, if finite.
    pub fn cardinality(&self, dim: usize) -> Option<u128> {
        if self.modulus == 0 {
            return None;
        }
        (self.modulus as u128).checked_pow(dim as u32)
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.modulus == 0 {
            f.write_str("Z")
        } else {
            write!(f, "Z/{}", self.modulus)
        }
    }
}

pub type Vector = Vec<BigInt>;

fn check_dim(v: &[BigInt], dim: usize) -> Result<()> {
    if v.len() != dim {
        return Err(Error::DimensionMismatch { expected: dim, found: v.len() });
    }
    Ok(())
}

fn square(matrix: &[Vec<BigInt>]) -> Result<usize> {
    let k = matrix.len();
    if let Some(row) = matrix.iter().find(|r| r.len() != k) {
        return Err(Error::DimensionMismatch { expected: k, found: row.len() });
    }
    Ok(k)
}

/// Laplace expansion; intended for the small matrices used here.
fn determinant(m: &[Vec<BigInt>]) -> BigInt {
    let k = m.len();
    match k {
        0 => BigInt::one(),
        1 => m[0][0].clone(),
        _ => {
            let mut det = BigInt::zero();
            for j in 0..k {
                if m[0][j].is_zero() {
                    continue;
                }
                let term = &m[0][j] * determinant(&minor(m, 0, j));
                if j % 2 == 0 {
                    det += term;
                } else {
                    det -= term;
                }
            }
            det
        }
    }
}

fn minor(m: &[Vec<BigInt>], row: usize, col: usize) -> Vec<Vec<BigInt>> {
    m.iter()
        .enumerate()
        .filter(|(i, _)| *i != row)
        .map(|(_, r)| r.iter().enumerate().filter(|(j, _)| *j != col).map(|(_, v)| v.clone()).collect())
        .collect()
}

fn mat_vec(ring: RingSpec, m: &[Vec<BigInt>], v: &[BigInt]) -> Vector {
    m.iter()
        .map(|row| ring.reduce(row.iter().zip(v).map(|(a, b)| a * b).sum()))
        .collect()
}

/// Inverse over the ring via the adjugate; `None` unless the determinant
/// is a unit.
fn invert_matrix(ring: RingSpec, m: &[Vec<BigInt>]) -> Option<Vec<Vec<BigInt>>> {
    let k = m.len();
    let det_inv = ring.unit_inverse(&ring.reduce(determinant(m)))?;
    let mut inv = vec![vec![BigInt::zero(); k]; k];
    for (i, row) in inv.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            // adj[i][j] = (−1)^{i+j} det(minor(j, i))
            let c = determinant(&minor(m, j, i));
            let c = if (i + j) % 2 == 0 { c } else { -c };
            *entry = ring.reduce(c * &det_inv);
        }
    }
    Some(inv)
}

/// Enumerates `(ℤ/m)^dim` in lexicographic order of representatives `0..m`.
fn all_vectors(ring: RingSpec, dim: usize) -> Result<Vec<Vector>> {
    let size = ring
        .cardinality(dim)
        .ok_or_else(|| Error::InvalidParameter("infinite carrier cannot be tabulated".into()))?;
    if size > 1 << 16 {
        return Err(Error::Capacity(format!("{ring}^{dim} has {size} elements")));
    }
    let m = ring.modulus;
    let mut out = Vec::with_capacity(size as usize);
    for idx in 0..size as u64 {
        let mut v = vec![BigInt::zero(); dim];
        let mut rest = idx;
        for slot in v.iter_mut().rev() {
            *slot = BigInt::from(rest % m);
            rest /= m;
        }
        out.push(v);
    }
    Ok(out)
}

fn vector_label(v: &[BigInt]) -> String {
    let parts: Vec<String> = v.iter().map(BigInt::to_string).collect();
    format!("({})", parts.join(","))
}

/// Tabulates a quandle on an explicit finite carrier of canonical keys.
fn tabulate<Q>(q: &Q, carrier: &[Q::Element]) -> Result<FiniteQuandle>
where
    Q: Quandle,
    Q::Key: Ord,
{
    let keys: std::collections::HashMap<Q::Key, usize> =
        carrier.iter().enumerate().map(|(i, e)| (q.key(e), i)).collect();
    let mut rhd = Vec::with_capacity(carrier.len());
    for x in carrier {
        let mut row = Vec::with_capacity(carrier.len());
        for y in carrier {
            let z = q.key(&q.rhd(x, y));
            row.push(*keys.get(&z).ok_or_else(|| {
                Error::InvalidParameter(format!("{x:?} ▷ {y:?} leaves the carrier"))
            })?);
        }
        rhd.push(row);
    }
    FiniteQuandle::from_rhd(rhd)
}

/// `x ▷ y = T(x − y) + y` over a ring, for an invertible matrix `T`.
#[derive(Clone, Debug)]
pub struct AlexanderQuandle {
    ring: RingSpec,
    t: Vec<Vec<BigInt>>,
    t_inv: Vec<Vec<BigInt>>,
}

impl AlexanderQuandle {
    pub fn new(ring: RingSpec, t: Vec<Vec<BigInt>>) -> Result<Self> {
        square(&t)?;
        let t: Vec<Vec<BigInt>> =
            t.into_iter().map(|r| r.into_iter().map(|v| ring.reduce(v)).collect()).collect();
        let t_inv = invert_matrix(ring, &t).ok_or_else(|| {
            Error::InvalidParameter(format!("T is not invertible over {ring}"))
        })?;
        Ok(AlexanderQuandle { ring, t, t_inv })
    }

    /// The dihedral quandle: `T = −1` on `ℤ/n`, so `x ▷ y = 2y − x`.
    pub fn dihedral(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("dihedral quandle needs n ≥ 1".into()));
        }
        Self::new(RingSpec::modulo(n), vec![vec![BigInt::from(-1)]])
    }

    pub fn dim(&self) -> usize {
        self.t.len()
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    fn apply(&self, m: &[Vec<BigInt>], x: &[BigInt], y: &[BigInt]) -> Result<Vector> {
        check_dim(x, self.dim())?;
        check_dim(y, self.dim())?;
        let diff: Vector = x.iter().zip(y).map(|(a, b)| self.ring.reduce(a - b)).collect();
        Ok(mat_vec(self.ring, m, &diff)
            .into_iter()
            .zip(y)
            .map(|(a, b)| self.ring.reduce(a + b))
            .collect())
    }

    /// `T(x − y) + y`.
    pub fn alexander_op(&self, x: &[BigInt], y: &[BigInt]) -> Result<Vector> {
        self.apply(&self.t, x, y)
    }

    /// `T⁻¹(x − y) + y`.
    pub fn alexander_op_inv(&self, x: &[BigInt], y: &[BigInt]) -> Result<Vector> {
        self.apply(&self.t_inv, x, y)
    }

    pub fn to_finite(&self) -> Result<FiniteQuandle> {
        let carrier = all_vectors(self.ring, self.dim())?;
        let labels = carrier.iter().map(|v| vector_label(v)).collect();
        tabulate(self, &carrier)?.with_labels(labels)
    }
}

impl Quandle for AlexanderQuandle {
    type Element = Vector;
    type Key = Vector;

    fn rhd(&self, x: &Vector, y: &Vector) -> Vector {
        self.alexander_op(x, y).expect("dimension checked by caller")
    }

    fn lhd(&self, x: &Vector, y: &Vector) -> Vector {
        self.alexander_op_inv(x, y).expect("dimension checked by caller")
    }

    fn key(&self, x: &Vector) -> Vector {
        x.iter().map(|v| self.ring.reduce(v.clone())).collect()
    }
}

/// An alternating bilinear form: antisymmetric with zero diagonal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "FormRepr", into = "FormRepr")]
pub struct AlternatingForm {
    ring: RingSpec,
    matrix: Vec<Vec<BigInt>>,
}

#[derive(Serialize, Deserialize)]
struct FormRepr {
    modulus: u64,
    matrix: Vec<Vec<JsonInt>>,
}

impl TryFrom<FormRepr> for AlternatingForm {
    type Error = Error;

    fn try_from(r: FormRepr) -> Result<Self> {
        AlternatingForm::new(RingSpec::modulo(r.modulus), unwrap_matrix(r.matrix))
    }
}

impl From<AlternatingForm> for FormRepr {
    fn from(f: AlternatingForm) -> Self {
        FormRepr { modulus: f.ring.modulus, matrix: wrap_matrix(&f.matrix) }
    }
}

impl AlternatingForm {
    pub fn new(ring: RingSpec, matrix: Vec<Vec<BigInt>>) -> Result<Self> {
        let k = square(&matrix)?;
        let matrix: Vec<Vec<BigInt>> = matrix
            .into_iter()
            .map(|r| r.into_iter().map(|v| ring.reduce(v)).collect())
            .collect();
        for i in 0..k {
            if !matrix[i][i].is_zero() {
                let why = if ring.has_two_torsion() {
                    " (the ring has two-torsion, so antisymmetry alone is not enough)"
                } else {
                    ""
                };
                return Err(Error::InvalidParameter(format!(
                    "form is not alternating: entry ({i},{i}) is nonzero{why}"
                )));
            }
            for j in 0..k {
                if !ring.reduce(&matrix[i][j] + &matrix[j][i]).is_zero() {
                    return Err(Error::InvalidParameter(format!(
                        "form is not antisymmetric at ({i},{j})"
                    )));
                }
            }
        }
        Ok(AlternatingForm { ring, matrix })
    }

    /// The intersection form of a genus-`g` surface in the basis
    /// `a₁, b₁, …, a_g, b_g`: blocks `[[0, 1], [−1, 0]]`.
    pub fn standard_symplectic(genus: usize, ring: RingSpec) -> Result<Self> {
        if genus < 1 {
            return Err(Error::InvalidParameter("genus must be at least 1".into()));
        }
        let k = 2 * genus;
        let mut m = vec![vec![BigInt::zero(); k]; k];
        for i in 0..genus {
            m[2 * i][2 * i + 1] = BigInt::one();
            m[2 * i + 1][2 * i] = BigInt::from(-1);
        }
        Self::new(ring, m)
    }

    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn matrix(&self) -> &[Vec<BigInt>] {
        &self.matrix
    }

    /// `⟨x, y⟩ = xᵀ A y`.
    pub fn pair(&self, x: &[BigInt], y: &[BigInt]) -> Result<BigInt> {
        check_dim(x, self.dim())?;
        check_dim(y, self.dim())?;
        let mut s = BigInt::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                s += xi * &self.matrix[i][j] * yj;
            }
        }
        Ok(self.ring.reduce(s))
    }

    fn shift(&self, x: &[BigInt], y: &[BigInt], sign: i32) -> Result<Vector> {
        let c = self.pair(x, y)? * sign;
        Ok(x.iter().zip(y).map(|(a, b)| self.ring.reduce(a + &c * b)).collect())
    }

    /// `x + ⟨x, y⟩ y`.
    pub fn alternating_op(&self, x: &[BigInt], y: &[BigInt]) -> Result<Vector> {
        self.shift(x, y, 1)
    }

    /// `x − ⟨x, y⟩ y`.
    pub fn alternating_op_inv(&self, x: &[BigInt], y: &[BigInt]) -> Result<Vector> {
        self.shift(x, y, -1)
    }
}

/// The alternating quandle of a form.
#[derive(Clone, Debug)]
pub struct AlternatingQuandle {
    pub form: AlternatingForm,
}

impl AlternatingQuandle {
    pub fn to_finite(&self) -> Result<FiniteQuandle> {
        let carrier = all_vectors(self.form.ring, self.form.dim())?;
        let labels = carrier.iter().map(|v| vector_label(v)).collect();
        tabulate(self, &carrier)?.with_labels(labels)
    }
}

impl Quandle for AlternatingQuandle {
    type Element = Vector;
    type Key = Vector;

    fn rhd(&self, x: &Vector, y: &Vector) -> Vector {
        self.form.alternating_op(x, y).expect("dimension checked by caller")
    }

    fn lhd(&self, x: &Vector, y: &Vector) -> Vector {
        self.form.alternating_op_inv(x, y).expect("dimension checked by caller")
    }

    fn key(&self, x: &Vector) -> Vector {
        x.iter().map(|v| self.form.ring.reduce(v.clone())).collect()
    }
}

/// Canonical representative of the orbit `{v, −v}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReducedClass(pub Vector);

impl fmt::Debug for ReducedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "±{}", vector_label(&self.0))
    }
}

/// Over `ℤ`: first nonzero coordinate positive. Over `ℤ/m`: the
/// lexicographically smaller of `v` and `−v` with representatives `0..m`.
pub fn reduce_mod_negation(ring: RingSpec, v: &[BigInt]) -> ReducedClass {
    let v: Vector = v.iter().map(|a| ring.reduce(a.clone())).collect();
    let neg: Vector = v.iter().map(|a| ring.reduce(-a)).collect();
    if ring.is_integers() {
        match v.iter().find(|a| !a.is_zero()) {
            Some(a) if a.is_negative() => ReducedClass(neg),
            _ => ReducedClass(v),
        }
    } else {
        ReducedClass(v.min(neg))
    }
}

/// The reduced alternating quandle: orbits of `±1` on an alternating quandle.
#[derive(Clone, Debug)]
pub struct ReducedAlternatingQuandle {
    pub form: AlternatingForm,
}

impl ReducedAlternatingQuandle {
    /// Canonical representatives of all orbits, in increasing order.
    pub fn carrier(&self) -> Result<Vec<ReducedClass>> {
        let mut reps: Vec<ReducedClass> = all_vectors(self.form.ring, self.form.dim())?
            .into_iter()
            .map(|v| reduce_mod_negation(self.form.ring, &v))
            .collect();
        reps.sort();
        reps.dedup();
        Ok(reps)
    }

    pub fn to_finite(&self) -> Result<FiniteQuandle> {
        let carrier = self.carrier()?;
        let labels = carrier.iter().map(|c| format!("{c:?}")).collect();
        tabulate(self, &carrier)?.with_labels(labels)
    }
}

impl Quandle for ReducedAlternatingQuandle {
    type Element = ReducedClass;
    type Key = ReducedClass;

    fn rhd(&self, x: &ReducedClass, y: &ReducedClass) -> ReducedClass {
        let v = self.form.alternating_op(&x.0, &y.0).expect("dimension checked by caller");
        reduce_mod_negation(self.form.ring, &v)
    }

    fn lhd(&self, x: &ReducedClass, y: &ReducedClass) -> ReducedClass {
        let v = self.form.alternating_op_inv(&x.0, &y.0).expect("dimension checked by caller");
        reduce_mod_negation(self.form.ring, &v)
    }

    fn key(&self, x: &ReducedClass) -> ReducedClass {
        reduce_mod_negation(self.form.ring, &x.0)
    }
}

/// `HQ_R(Σ_g)`: `R^{2g}` with the standard intersection form.
pub fn homology_quandle(genus: usize, ring: RingSpec) -> Result<AlternatingQuandle> {
    Ok(AlternatingQuandle { form: AlternatingForm::standard_symplectic(genus, ring)? })
}

/// `HD_R(Σ_g)`: the homology quandle modulo `v ∼ −v`.
pub fn homology_dehn_quandle(genus: usize, ring: RingSpec) -> Result<ReducedAlternatingQuandle> {
    Ok(ReducedAlternatingQuandle { form: AlternatingForm::standard_symplectic(genus, ring)? })
}

/// The `±`-class of the homology class of a torus curve: `y/x ↦ ±(x, y)`,
/// `I ↦ 0`.
///
/// With the standard form `⟨(u,v),(x,y)⟩ = uy − vx` this intertwines the
/// slope operation `▷` with the alternating `▷` (not `⊵`).
pub fn slope_to_homology(s: &Slope) -> ReducedClass {
    match s.coords() {
        None => ReducedClass(vec![BigInt::zero(), BigInt::zero()]),
        Some((x, y)) => reduce_mod_negation(RingSpec::INTEGERS, &[x.clone(), y.clone()]),
    }
}
