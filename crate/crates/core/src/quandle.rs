//! The quandle contract, finite quandle tables, axiom checking, homomorphism
//! enumeration, generated subquandles and augmented quandles.

use std::collections::BTreeSet;
use std::fmt::Debug;
use std::hash::Hash;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Witness cap for [`AxiomReport`].
pub const MAX_VIOLATIONS: usize = 100;

/// A set with operations `▷` (`rhd`) and `⊵` (`lhd`).
///
/// `key` gives a canonical, hashable identity; two elements are equal in the
/// quandle iff their keys are equal.
pub trait Quandle {
    type Element: Clone + Debug;
    type Key: Clone + Eq + Hash + Debug;

    fn rhd(&self, x: &Self::Element, y: &Self::Element) -> Self::Element;
    fn lhd(&self, x: &Self::Element, y: &Self::Element) -> Self::Element;
    fn key(&self, x: &Self::Element) -> Self::Key;

    fn same(&self, x: &Self::Element, y: &Self::Element) -> bool {
        self.key(x) == self.key(y)
    }

    /// The full carrier, when finite and enumerable.
    fn elements(&self) -> Option<Vec<Self::Element>> {
        None
    }
}

/// Group contract used by augmentations.
pub trait Group {
    type Element: Clone + Debug;

    fn identity(&self) -> Self::Element;
    fn multiply(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;
    fn invert(&self, a: &Self::Element) -> Self::Element;
    fn equal(&self, a: &Self::Element, b: &Self::Element) -> bool;

    fn conjugate(&self, a: &Self::Element, by: &Self::Element) -> Self::Element {
        self.multiply(&self.multiply(&self.invert(by), a), by)
    }
}

/// A quandle `Q` with a group `G`, an augmentation `ℓ: Q → G` and a right
/// action `Q × G → Q`.
pub trait AugmentedQuandle: Quandle {
    type Group: Group;

    fn group(&self) -> &Self::Group;
    fn augmentation(&self, q: &Self::Element) -> <Self::Group as Group>::Element;
    fn act(&self, q: &Self::Element, g: &<Self::Group as Group>::Element) -> Self::Element;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    Idempotence,
    RightInverse,
    SelfDistributivity,
    /// `q · ℓ(q) = q`
    AugmentationFixesSelf,
    /// `ℓ(q · γ) = γ⁻¹ ℓ(q) γ`
    AugmentationEquivariance,
    /// `(x ▷ y) · γ = (x · γ) ▷ (y · γ)`
    ActionHomomorphism,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation<W> {
    pub axiom: Axiom,
    pub witness: Vec<W>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport<W = usize> {
    pub passed: bool,
    pub violations: Vec<Violation<W>>,
    /// True when more violations exist than were recorded.
    pub truncated: bool,
}

impl<W> AxiomReport<W> {
    fn new() -> Self {
        AxiomReport { passed: true, violations: Vec::new(), truncated: false }
    }

    /// Records a violation; returns false once the cap is reached.
    fn record(&mut self, axiom: Axiom, witness: Vec<W>) -> bool {
        self.passed = false;
        if self.violations.len() >= MAX_VIOLATIONS {
            self.truncated = true;
            return false;
        }
        self.violations.push(Violation { axiom, witness });
        true
    }

    fn full(&self) -> bool {
        self.violations.len() >= MAX_VIOLATIONS
    }
}

/// Finite quandle (or candidate quandle) on the dense carrier `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteQuandle {
    n: usize,
    rhd: Vec<usize>,
    lhd: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl Debug for FiniteQuandle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteQuandle").field("n", &self.n).field("rhd", &self.rhd_rows()).finish()
    }
}

fn check_square(table: &[Vec<usize>], what: &str) -> Result<usize> {
    let n = table.len();
    for (x, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(Error::MalformedTable(format!(
                "{what} row {x} has length {}, expected {n}",
                row.len()
            )));
        }
        if let Some((y, &v)) = row.iter().enumerate().find(|(_, &v)| v >= n) {
            return Err(Error::MalformedTable(format!(
                "{what}[{x}][{y}] = {v} is outside 0..{n}"
            )));
        }
    }
    Ok(n)
}

impl FiniteQuandle {
    /// Builds from the `▷` table (`rhd[x][y] = x ▷ y`), deriving `⊵`.
    ///
    /// Fails with a structural error if an entry is out of range or a right
    /// translation `x ↦ x ▷ y` is not a bijection.
    pub fn from_rhd(rhd: Vec<Vec<usize>>) -> Result<Self> {
        let n = check_square(&rhd, "rhd")?;
        let mut lhd = vec![vec![usize::MAX; n]; n];
        for y in 0..n {
            for x in 0..n {
                let z = rhd[x][y];
                if lhd[z][y] != usize::MAX {
                    return Err(Error::MalformedTable(format!(
                        "column {y} is not a bijection: {} ▷ {y} = {x} ▷ {y} = {z}",
                        lhd[z][y]
                    )));
                }
                lhd[z][y] = x;
            }
        }
        Self::from_tables(rhd, lhd)
    }

    /// Builds from both tables without checking that they are inverse. Only
    /// totality is enforced; [`check_axioms`] reports the rest.
    pub fn from_tables(rhd: Vec<Vec<usize>>, lhd: Vec<Vec<usize>>) -> Result<Self> {
        let n = check_square(&rhd, "rhd")?;
        let m = check_square(&lhd, "lhd")?;
        if n != m {
            return Err(Error::MalformedTable(format!("rhd is {n}x{n} but lhd is {m}x{m}")));
        }
        Ok(FiniteQuandle {
            n,
            rhd: rhd.into_iter().flatten().collect(),
            lhd: lhd.into_iter().flatten().collect(),
            labels: None,
        })
    }

    /// Builds from an operation closure on `0..n`.
    pub fn from_fn(n: usize, op: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let rhd = (0..n).map(|x| (0..n).map(|y| op(x, y)).collect()).collect();
        Self::from_rhd(rhd)
    }

    /// The trivial quandle `x ▷ y = x` on `k` elements.
    pub fn trivial(k: usize) -> Self {
        Self::from_fn(k, |x, _| x).expect("trivial quandle is well formed")
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: labels.len() });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.rhd[x * self.n + y]
    }

    #[inline]
    pub fn op_inv(&self, x: usize, y: usize) -> usize {
        self.lhd[x * self.n + y]
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    /// Finds an element by label, falling back to a decimal index.
    pub fn find(&self, name: &str) -> Option<usize> {
        let name = name.trim();
        if let Some(labels) = &self.labels {
            if let Some(i) = labels.iter().position(|l| l == name) {
                return Some(i);
            }
        }
        name.parse::<usize>().ok().filter(|&i| i < self.n)
    }

    pub fn rhd_rows(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|x| (0..self.n).map(|y| self.op(x, y)).collect()).collect()
    }

    pub fn lhd_rows(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|x| (0..self.n).map(|y| self.op_inv(x, y)).collect()).collect()
    }

    /// The right translation `x ↦ x ▷ y` as a permutation of the carrier.
    pub fn right_translation(&self, y: usize) -> Permutation {
        Permutation::from_images((0..self.n).map(|x| self.op(x, y)).collect())
            .expect("right translations of a loaded table are bijections")
    }

    /// Elements `y` that act trivially: `x ▷ y = x` for all `x`.
    pub fn right_trivial_elements(&self) -> Vec<usize> {
        (0..self.n).filter(|&y| (0..self.n).all(|x| self.op(x, y) == x)).collect()
    }

    /// Orbits of the carrier under all right translations.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut comp: Vec<usize> = (0..self.n).collect();
        fn root(comp: &mut [usize], mut i: usize) -> usize {
            while comp[i] != i {
                comp[i] = comp[comp[i]];
                i = comp[i];
            }
            i
        }
        for x in 0..self.n {
            for y in 0..self.n {
                let (a, b) = (root(&mut comp, x), root(&mut comp, self.op(x, y)));
                if a != b {
                    comp[a.max(b)] = a.min(b);
                }
            }
        }
        let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for x in 0..self.n {
            let r = root(&mut comp, x);
            groups.entry(r).or_default().push(x);
        }
        groups.into_values().collect()
    }

    /// The subquandle on `subset` (which must be closed), relabelled densely
    /// in increasing order of the original indices.
    pub fn restrict(&self, subset: &[usize]) -> Result<FiniteQuandle> {
        let mut sorted: Vec<usize> = subset.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut index = vec![usize::MAX; self.n];
        for (i, &x) in sorted.iter().enumerate() {
            if x >= self.n {
                return Err(Error::IndexOutOfRange { index: x, len: self.n });
            }
            index[x] = i;
        }
        let mut rhd = Vec::with_capacity(sorted.len());
        for &x in &sorted {
            let mut row = Vec::with_capacity(sorted.len());
            for &y in &sorted {
                let z = index[self.op(x, y)];
                if z == usize::MAX {
                    return Err(Error::InvalidParameter(format!(
                        "subset is not closed: {} ▷ {} leaves it",
                        self.label(x),
                        self.label(y)
                    )));
                }
                row.push(z);
            }
            rhd.push(row);
        }
        let q = FiniteQuandle::from_rhd(rhd)?;
        match &self.labels {
            Some(l) => q.with_labels(sorted.iter().map(|&x| l[x].clone()).collect()),
            None => Ok(q),
        }
    }

    /// Relabels the carrier: element `x` becomes `perm[x]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<FiniteQuandle> {
        let p = Permutation::from_images(perm.to_vec())?;
        if p.degree() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: p.degree() });
        }
        let inv = p.inverse();
        let q = FiniteQuandle::from_fn(self.n, |x, y| {
            p.apply(self.op(inv.apply(x), inv.apply(y)))
        })?;
        match &self.labels {
            Some(l) => q.with_labels((0..self.n).map(|x| l[inv.apply(x)].clone()).collect()),
            None => Ok(q),
        }
    }
}

impl Quandle for FiniteQuandle {
    type Element = usize;
    type Key = usize;

    fn rhd(&self, x: &usize, y: &usize) -> usize {
        self.op(*x, *y)
    }

    fn lhd(&self, x: &usize, y: &usize) -> usize {
        self.op_inv(*x, *y)
    }

    fn key(&self, x: &usize) -> usize {
        *x
    }

    fn elements(&self) -> Option<Vec<usize>> {
        Some((0..self.n).collect())
    }
}

/// Exhaustively checks the three quandle axioms over all 1-, 2- and
/// 3-tuples, recording at most [`MAX_VIOLATIONS`] witnesses.
pub fn check_axioms(q: &FiniteQuandle) -> AxiomReport {
    let n = q.len();
    let mut report = AxiomReport::new();
    for x in 0..n {
        if q.op(x, x) != x && !report.record(Axiom::Idempotence, vec![x]) {
            return report;
        }
    }
    for x in 0..n {
        for y in 0..n {
            if (q.op_inv(q.op(x, y), y) != x || q.op(q.op_inv(x, y), y) != x)
                && !report.record(Axiom::RightInverse, vec![x, y])
            {
                return report;
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            let xy = q.op(x, y);
            for z in 0..n {
                if q.op(xy, z) != q.op(q.op(x, z), q.op(y, z))
                    && !report.record(Axiom::SelfDistributivity, vec![x, y, z])
                {
                    return report;
                }
            }
        }
    }
    report
}

/// Checks the axioms on every tuple drawn from `sample` (all of it, so the
/// check is exhaustive when `sample` is the whole carrier).
pub fn check_axioms_on<Q: Quandle>(q: &Q, sample: &[Q::Element]) -> AxiomReport<Q::Element> {
    let mut report = AxiomReport::new();
    for x in sample {
        if !q.same(&q.rhd(x, x), x) && !report.record(Axiom::Idempotence, vec![x.clone()]) {
            return report;
        }
    }
    for x in sample {
        for y in sample {
            let back = q.lhd(&q.rhd(x, y), y);
            let fwd = q.rhd(&q.lhd(x, y), y);
            if (!q.same(&back, x) || !q.same(&fwd, x))
                && !report.record(Axiom::RightInverse, vec![x.clone(), y.clone()])
            {
                return report;
            }
        }
    }
    for x in sample {
        for y in sample {
            let xy = q.rhd(x, y);
            for z in sample {
                let lhs = q.rhd(&xy, z);
                let rhs = q.rhd(&q.rhd(x, z), &q.rhd(y, z));
                if !q.same(&lhs, &rhs)
                    && !report.record(
                        Axiom::SelfDistributivity,
                        vec![x.clone(), y.clone(), z.clone()],
                    )
                {
                    return report;
                }
            }
        }
    }
    report
}

/// A map between finite quandles, one target index per source element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QuandleHom {
    pub map: Vec<usize>,
}

impl QuandleHom {
    pub fn is_hom(&self, src: &FiniteQuandle, tgt: &FiniteQuandle) -> bool {
        self.map.len() == src.len()
            && self.map.iter().all(|&v| v < tgt.len())
            && (0..src.len()).all(|x| {
                (0..src.len())
                    .all(|y| self.map[src.op(x, y)] == tgt.op(self.map[x], self.map[y]))
            })
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &QuandleHom) -> QuandleHom {
        QuandleHom { map: self.map.iter().map(|&x| other.map[x]).collect() }
    }

    pub fn is_bijective(&self, tgt_len: usize) -> bool {
        if self.map.len() != tgt_len {
            return false;
        }
        let mut seen = vec![false; tgt_len];
        self.map.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
    }
}

struct HomSearch<'a> {
    src: &'a FiniteQuandle,
    tgt: &'a FiniteQuandle,
    image: Vec<usize>,
    assigned: Vec<usize>,
}

const UNSET: usize = usize::MAX;

impl HomSearch<'_> {
    /// Assigns `x ↦ v` and propagates `f(a ▷ b) = f(a) ▷ f(b)` to a fixed
    /// point. Returns false on conflict; the trail records what to undo.
    fn assign(&mut self, x: usize, v: usize) -> bool {
        let mut queue = vec![(x, v)];
        while let Some((a, va)) = queue.pop() {
            match self.image[a] {
                UNSET => {
                    self.image[a] = va;
                    self.assigned.push(a);
                }
                w if w == va => continue,
                _ => return false,
            }
            let snapshot = self.assigned.len();
            for k in 0..snapshot {
                let b = self.assigned[k];
                let vb = self.image[b];
                for (p, q, vp, vq) in [(a, b, va, vb), (b, a, vb, va)] {
                    let z = self.src.op(p, q);
                    let vz = self.tgt.op(vp, vq);
                    match self.image[z] {
                        UNSET => queue.push((z, vz)),
                        w if w != vz => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    fn undo_to(&mut self, mark: usize) {
        while self.assigned.len() > mark {
            let a = self.assigned.pop().unwrap();
            self.image[a] = UNSET;
        }
    }

    fn run(&mut self, out: &mut Vec<QuandleHom>) {
        let Some(next) = self.image.iter().position(|&v| v == UNSET) else {
            out.push(QuandleHom { map: self.image.clone() });
            return;
        };
        for v in 0..self.tgt.len() {
            let mark = self.assigned.len();
            if self.assign(next, v) {
                self.run(out);
            }
            self.undo_to(mark);
        }
    }
}

/// All quandle homomorphisms `src → tgt`, in lexicographic order of their
/// image sequences.
///
/// Backtracks over element images in index order, propagating the
/// homomorphism constraint after each choice. The subtrees for the image of
/// element 0 are searched in parallel and concatenated in order.
pub fn enumerate_homs(src: &FiniteQuandle, tgt: &FiniteQuandle) -> Vec<QuandleHom> {
    if src.is_empty() {
        return vec![QuandleHom { map: Vec::new() }];
    }
    let chunks: Vec<Vec<QuandleHom>> = (0..tgt.len())
        .into_par_iter()
        .map(|v| {
            let mut s = HomSearch { src, tgt, image: vec![UNSET; src.len()], assigned: Vec::new() };
            let mut out = Vec::new();
            if s.assign(0, v) {
                s.run(&mut out);
            }
            out
        })
        .collect();
    let mut homs: Vec<QuandleHom> = chunks.into_iter().flatten().collect();
    // The search already emits in lexicographic order; sorting keeps the
    // contract explicit.
    homs.sort();
    homs
}

/// An isomorphism `a → b`, if one exists.
pub fn find_isomorphism(a: &FiniteQuandle, b: &FiniteQuandle) -> Option<QuandleHom> {
    if a.len() != b.len() {
        return None;
    }
    enumerate_homs(a, b).into_iter().find(|h| h.is_bijective(b.len()))
}

/// Smallest subset containing `seed` and closed under `▷` and `⊵`.
pub fn subquandle_generated(q: &FiniteQuandle, seed: &[usize]) -> Result<BTreeSet<usize>> {
    let mut set = BTreeSet::new();
    for &s in seed {
        if s >= q.len() {
            return Err(Error::IndexOutOfRange { index: s, len: q.len() });
        }
        set.insert(s);
    }
    loop {
        let current: Vec<usize> = set.iter().copied().collect();
        let before = set.len();
        for &x in &current {
            for &y in &current {
                set.insert(q.op(x, y));
                set.insert(q.op_inv(x, y));
            }
        }
        if set.len() == before {
            return Ok(set);
        }
    }
}

/// The achiral double on `Q × {+, −}`:
/// `(x,σ) ▷ (y,−) = (x ▷ y, σ)` and `(x,σ) ▷ (y,+) = (x ⊵ y, σ)`.
///
/// Element `(x, +)` has index `x` and `(x, −)` has index `n + x`.
pub fn achiral_double(q: &FiniteQuandle) -> Result<FiniteQuandle> {
    let report = check_axioms(q);
    if !report.passed {
        return Err(Error::NotAQuandle(format!(
            "achiral double needs a quandle; first violation {:?}",
            report.violations[0]
        )));
    }
    let n = q.len();
    let split = |i: usize| (i % n.max(1), i >= n);
    let op = |a: usize, b: usize, inverse: bool| {
        let (x, sx) = split(a);
        let (y, minus) = split(b);
        let base = if minus != inverse { q.op(x, y) } else { q.op_inv(x, y) };
        base + if sx { n } else { 0 }
    };
    let rhd = (0..2 * n).map(|a| (0..2 * n).map(|b| op(a, b, false)).collect()).collect();
    let lhd = (0..2 * n).map(|a| (0..2 * n).map(|b| op(a, b, true)).collect()).collect();
    let doubled = FiniteQuandle::from_tables(rhd, lhd)?;
    let labels = (0..2 * n)
        .map(|i| {
            let (x, minus) = split(i);
            format!("{}{}", q.label(x), if minus { "-" } else { "+" })
        })
        .collect();
    doubled.with_labels(labels)
}

/// Checks the augmentation laws and the homomorphism property of the action
/// on the given samples of quandle and group elements.
pub fn check_augmentation<A: AugmentedQuandle>(
    aug: &A,
    elements: &[A::Element],
    group_sample: &[<A::Group as Group>::Element],
) -> AxiomReport<String> {
    let g = aug.group();
    let mut report = AxiomReport::new();
    for q in elements {
        let fixed = aug.act(q, &aug.augmentation(q));
        if !aug.same(&fixed, q) && !report.record(Axiom::AugmentationFixesSelf, vec![format!("{q:?}")])
        {
            return report;
        }
    }
    for q in elements {
        for gamma in group_sample {
            let lhs = aug.augmentation(&aug.act(q, gamma));
            let rhs = g.conjugate(&aug.augmentation(q), gamma);
            if !g.equal(&lhs, &rhs)
                && !report.record(
                    Axiom::AugmentationEquivariance,
                    vec![format!("{q:?}"), format!("{gamma:?}")],
                )
            {
                return report;
            }
        }
    }
    'outer: for gamma in group_sample {
        for x in elements {
            for y in elements {
                let lhs = aug.act(&aug.rhd(x, y), gamma);
                let rhs = aug.rhd(&aug.act(x, gamma), &aug.act(y, gamma));
                if !aug.same(&lhs, &rhs) {
                    report.record(
                        Axiom::ActionHomomorphism,
                        vec![format!("{x:?}"), format!("{y:?}"), format!("{gamma:?}")],
                    );
                    if report.full() {
                        break 'outer;
                    }
                }
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Conjugation quandle on the transpositions (12), (13), (23).
    pub(crate) fn r3() -> FiniteQuandle {
        // 0=(12), 1=(13), 2=(23); x ▷ y = y x y
        FiniteQuandle::from_rhd(vec![vec![0, 2, 1], vec![2, 1, 0], vec![1, 0, 2]]).unwrap()
    }

    #[test]
    fn one_element_passes() {
        assert!(check_axioms(&FiniteQuandle::trivial(1)).passed);
    }

    #[test]
    fn empty_quandle_is_legal() {
        let e = FiniteQuandle::trivial(0);
        assert!(check_axioms(&e).passed);
        assert_eq!(enumerate_homs(&e, &r3()), vec![QuandleHom { map: vec![] }]);
        assert!(enumerate_homs(&r3(), &e).is_empty());
    }

    #[test]
    fn idempotence_violation_is_reported() {
        let q = FiniteQuandle::from_rhd(vec![vec![1, 0], vec![0, 1]]).unwrap();
        let report = check_axioms(&q);
        assert!(!report.passed);
        assert_eq!(report.violations[0], Violation { axiom: Axiom::Idempotence, witness: vec![0] });
    }

    #[test]
    fn malformed_tables_are_structural_errors() {
        assert!(matches!(
            FiniteQuandle::from_rhd(vec![vec![0, 2], vec![1, 1]]),
            Err(Error::MalformedTable(_))
        ));
        assert!(matches!(
            FiniteQuandle::from_rhd(vec![vec![0, 0], vec![0, 1]]),
            Err(Error::MalformedTable(_))
        ));
        assert!(matches!(FiniteQuandle::from_rhd(vec![vec![0, 0]]), Err(Error::MalformedTable(_))));
    }

    #[test]
    fn rack_fails_only_idempotence() {
        // x ▷ y = x + 1 mod 3 is a rack, not a quandle.
        let q = FiniteQuandle::from_fn(3, |x, _| (x + 1) % 3).unwrap();
        let report = check_axioms(&q);
        assert!(!report.passed);
        assert!(report.violations.iter().all(|v| v.axiom == Axiom::Idempotence));
    }

    #[test]
    fn violation_cap() {
        let q = FiniteQuandle::from_fn(12, |x, y| (x + y + 1) % 12).unwrap();
        let report = check_axioms(&q);
        assert_eq!(report.violations.len(), MAX_VIOLATIONS);
        assert!(report.truncated);
    }

    #[test]
    fn hom_counts() {
        assert_eq!(enumerate_homs(&FiniteQuandle::trivial(1), &r3()).len(), 3);
        let homs = enumerate_homs(&r3(), &r3());
        assert_eq!(homs.len(), 9);
        assert!(homs.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn homs_preserve_the_inverse_operation() {
        let names = ["dihedral:3", "dihedral:4", "transposition:4", "cyclic:3", "trivial:2", "achiral:dihedral:3"];
        for a in names {
            for b in names {
                let src = crate::catalog::resolve_finite(a).unwrap().quandle;
                let tgt = crate::catalog::resolve_finite(b).unwrap().quandle;
                for h in enumerate_homs(&src, &tgt) {
                    for x in 0..src.len() {
                        for y in 0..src.len() {
                            assert_eq!(h.map[src.op_inv(x, y)], tgt.op_inv(h.map[x], h.map[y]), "{a} → {b}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn hom_enumeration_matches_brute_force() {
        let (src, tgt) = (r3(), r3());
        let mut brute = Vec::new();
        for a in 0..3 {
            for b in 0..3 {
                for c in 0..3 {
                    let h = QuandleHom { map: vec![a, b, c] };
                    if h.is_hom(&src, &tgt) {
                        brute.push(h);
                    }
                }
            }
        }
        assert_eq!(enumerate_homs(&src, &tgt), brute);
    }

    #[test]
    fn generated_subquandles() {
        let q = r3();
        assert_eq!(subquandle_generated(&q, &[0, 2]).unwrap().len(), 3);
        assert_eq!(subquandle_generated(&q, &[1]).unwrap().into_iter().collect::<Vec<_>>(), vec![1]);
        assert_eq!(subquandle_generated(&q, &[0, 1, 2]).unwrap().len(), 3);
        assert!(subquandle_generated(&q, &[7]).is_err());
    }

    #[test]
    fn achiral_double_basics() {
        let d1 = achiral_double(&FiniteQuandle::trivial(1)).unwrap();
        assert_eq!(d1, FiniteQuandle::trivial(2).with_labels(vec!["0+".into(), "0-".into()]).unwrap());
        let d = achiral_double(&r3()).unwrap();
        assert_eq!(d.len(), 6);
        assert!(check_axioms(&d).passed);
        for x in 0..3 {
            for y in 0..3 {
                // restriction to "−" second arguments reproduces ▷
                assert_eq!(d.op(x, 3 + y), r3().op(x, y));
                assert_eq!(d.op(3 + x, 3 + y), 3 + r3().op(x, y));
            }
        }
        let bad = FiniteQuandle::from_rhd(vec![vec![1, 0], vec![0, 1]]).unwrap();
        assert!(achiral_double(&bad).is_err());
    }

    #[test]
    fn orbits_of_r3_and_trivial() {
        assert_eq!(r3().orbits().len(), 1);
        assert_eq!(FiniteQuandle::trivial(4).orbits().len(), 4);
    }

    #[test]
    fn relabel_preserves_axioms() {
        let q = r3().relabel(&[2, 0, 1]).unwrap();
        assert!(check_axioms(&q).passed);
        assert!(find_isomorphism(&q, &r3()).is_some());
    }
}
