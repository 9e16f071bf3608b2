//! Rack and quandle homology of finite quandles.
//!
//! Chains in degree `n` are formal sums of `n`-tuples, indexed
//! lexicographically by element index. The boundary is
//!
//! `∂(x₁,…,x_n) = Σ_{i=2}^{n} (−1)^i [(x₁,…,x̂ᵢ,…,x_n) − (x₁▷xᵢ,…,x_{i−1}▷xᵢ,x_{i+1},…,x_n)]`
//!
//! with `∂₁ = 0`. The quandle complex is the quotient by the degenerate
//! tuples (some `xᵢ = xᵢ₊₁`), whose basis is the non-degenerate tuples.
//! Cohomology is the homology of the transposed boundaries.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quandle::FiniteQuandle;

/// Sparse integer matrix stored by columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: Vec<Vec<(usize, i64)>>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols: vec![Vec::new(); cols] }
    }

    /// Columns of `(row, value)` pairs; zero values are dropped and rows
    /// sorted.
    pub fn from_columns(rows: usize, cols: Vec<Vec<(usize, i64)>>) -> Result<Self> {
        let mut out = Vec::with_capacity(cols.len());
        for col in cols {
            let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
            for (r, v) in col {
                if r >= rows {
                    return Err(Error::IndexOutOfRange { index: r, len: rows });
                }
                *acc.entry(r).or_insert(0) += v;
            }
            out.push(acc.into_iter().filter(|&(_, v)| v != 0).collect());
        }
        Ok(IntMatrix { rows, cols: out })
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Result<Self> {
        let ncols = rows.first().map_or(0, Vec::len);
        if let Some(r) = rows.iter().find(|r| r.len() != ncols) {
            return Err(Error::DimensionMismatch { expected: ncols, found: r.len() });
        }
        let cols = (0..ncols)
            .map(|j| rows.iter().enumerate().map(|(i, r)| (i, r[j])).collect())
            .collect();
        Self::from_columns(rows.len(), cols)
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> &[(usize, i64)] {
        &self.cols[j]
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.cols[j].iter().find(|&&(r, _)| r == i).map_or(0, |&(_, v)| v)
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![0; self.ncols()]; self.rows];
        for (j, col) in self.cols.iter().enumerate() {
            for &(i, v) in col {
                out[i][j] = v;
            }
        }
        out
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut cols = vec![Vec::new(); self.rows];
        for (j, col) in self.cols.iter().enumerate() {
            for &(i, v) in col {
                cols[i].push((j, v));
            }
        }
        IntMatrix { rows: self.ncols(), cols }
    }

    /// `self · other`.
    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.ncols() != other.rows {
            return Err(Error::DimensionMismatch { expected: self.ncols(), found: other.rows });
        }
        let cols = other
            .cols
            .iter()
            .map(|col| {
                let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
                for &(k, b) in col {
                    for &(i, a) in &self.cols[k] {
                        *acc.entry(i).or_insert(0) += a * b;
                    }
                }
                acc.into_iter().filter(|&(_, v)| v != 0).collect()
            })
            .collect();
        Ok(IntMatrix { rows: self.rows, cols })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Theory {
    Rack,
    Quandle,
}

impl std::str::FromStr for Theory {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rack" => Ok(Theory::Rack),
            "quandle" => Ok(Theory::Quandle),
            _ => Err(Error::Parse(format!("unknown theory {s:?}; use rack or quandle"))),
        }
    }
}

/// Limits on homology computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HomologyOptions {
    pub max_degree: usize,
    /// Largest number of tuples in any chain group that may be built.
    pub max_cells: u64,
}

impl Default for HomologyOptions {
    fn default() -> Self {
        HomologyOptions { max_degree: 4, max_cells: 1_000_000 }
    }
}

fn cell_count(q: &FiniteQuandle, n: usize) -> Option<u64> {
    (q.len() as u64).checked_pow(n as u32)
}

fn guard(q: &FiniteQuandle, n: usize, max_cells: u64) -> Result<usize> {
    match cell_count(q, n) {
        Some(c) if c <= max_cells => Ok(c as usize),
        _ => Err(Error::Capacity(format!(
            "{}^{n} chains exceed the budget of {max_cells}",
            q.len()
        ))),
    }
}

/// Digits of a lexicographic tuple index, most significant first.
fn decode(mut index: usize, base: usize, n: usize) -> Vec<usize> {
    let mut t = vec![0; n];
    for slot in t.iter_mut().rev() {
        *slot = index % base;
        index /= base;
    }
    t
}

fn encode<I: IntoIterator<Item = usize>>(digits: I, base: usize) -> usize {
    digits.into_iter().fold(0, |acc, d| acc * base + d)
}

fn boundary_column(q: &FiniteQuandle, tuple: &[usize]) -> Vec<(usize, i64)> {
    let base = q.len();
    let n = tuple.len();
    let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
    for i in 1..n {
        // zero-based i is the (i+1)-th position; sign (−1)^{i+1}
        let sign = if i % 2 == 1 { 1 } else { -1 };
        let xi = tuple[i];
        let deleted = encode(tuple.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, &x)| x), base);
        let acted = encode(
            tuple
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != i)
                .map(|(k, &x)| if k < i { q.op(x, xi) } else { x }),
            base,
        );
        *acc.entry(deleted).or_insert(0) += sign;
        *acc.entry(acted).or_insert(0) -= sign;
    }
    acc.into_iter().filter(|&(_, v)| v != 0).collect()
}

fn rack_boundary_guarded(q: &FiniteQuandle, n: usize, max_cells: u64) -> Result<IntMatrix> {
    if n == 0 {
        return Err(Error::InvalidParameter("boundary degree must be at least 1".into()));
    }
    let cols = guard(q, n, max_cells)?;
    let rows = guard(q, n - 1, max_cells)?;
    if n == 1 {
        return Ok(IntMatrix::zeros(rows, cols));
    }
    let base = q.len();
    let columns = (0..cols)
        .into_par_iter()
        .map(|c| boundary_column(q, &decode(c, base, n)))
        .collect();
    Ok(IntMatrix { rows, cols: columns })
}

/// Matrix of `∂_n : C_n → C_{n−1}` in the rack complex.
pub fn rack_boundary(q: &FiniteQuandle, n: usize) -> Result<IntMatrix> {
    rack_boundary_guarded(q, n, HomologyOptions::default().max_cells)
}

pub fn is_degenerate(tuple: &[usize]) -> bool {
    tuple.windows(2).any(|w| w[0] == w[1])
}

/// Lexicographic indices of the degenerate `n`-tuples.
pub fn degenerate_basis(q: &FiniteQuandle, n: usize) -> Vec<usize> {
    let total = cell_count(q, n).unwrap_or(0) as usize;
    (0..total).filter(|&c| is_degenerate(&decode(c, q.len(), n))).collect()
}

fn nondegenerate_basis(q: &FiniteQuandle, n: usize) -> Vec<usize> {
    let total = cell_count(q, n).unwrap_or(0) as usize;
    (0..total).filter(|&c| !is_degenerate(&decode(c, q.len(), n))).collect()
}

/// Whether `∂_n` maps every degenerate `n`-tuple into degenerate chains.
pub fn degenerate_subcomplex_is_stable(q: &FiniteQuandle, n: usize) -> Result<bool> {
    let d = rack_boundary(q, n)?;
    let base = q.len();
    Ok(degenerate_basis(q, n).into_iter().all(|c| {
        d.column(c).iter().all(|&(r, _)| is_degenerate(&decode(r, base, n - 1)))
    }))
}

fn quandle_boundary_guarded(q: &FiniteQuandle, n: usize, max_cells: u64) -> Result<IntMatrix> {
    let full = rack_boundary_guarded(q, n, max_cells)?;
    let row_basis = nondegenerate_basis(q, n - 1);
    let mut row_index = vec![usize::MAX; full.nrows()];
    for (k, &r) in row_basis.iter().enumerate() {
        row_index[r] = k;
    }
    let cols = nondegenerate_basis(q, n)
        .into_iter()
        .map(|c| {
            full.column(c)
                .iter()
                .filter(|&&(r, _)| row_index[r] != usize::MAX)
                .map(|&(r, v)| (row_index[r], v))
                .collect()
        })
        .collect();
    Ok(IntMatrix { rows: row_basis.len(), cols })
}

/// Matrix of `∂_n` on the quotient by degenerate tuples, in the basis of
/// non-degenerate tuples.
pub fn quandle_boundary(q: &FiniteQuandle, n: usize) -> Result<IntMatrix> {
    quandle_boundary_guarded(q, n, HomologyOptions::default().max_cells)
}

pub fn boundary(q: &FiniteQuandle, n: usize, theory: Theory) -> Result<IntMatrix> {
    match theory {
        Theory::Rack => rack_boundary(q, n),
        Theory::Quandle => quandle_boundary(q, n),
    }
}

/// Boundaries `∂₁ … ∂_top` of one theory.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    pub theory: Theory,
    /// `ranks[n]` is the rank of `C_n`, for `n = 0..=top`.
    pub ranks: Vec<usize>,
    /// `boundaries[n − 1]` is `∂_n`.
    pub boundaries: Vec<IntMatrix>,
}

impl ChainComplex {
    pub fn build(q: &FiniteQuandle, theory: Theory, top: usize) -> Result<Self> {
        let boundaries = (1..=top).map(|n| boundary(q, n, theory)).collect::<Result<Vec<_>>>()?;
        let mut ranks = vec![1];
        ranks.extend(boundaries.iter().map(IntMatrix::ncols));
        Ok(ChainComplex { theory, ranks, boundaries })
    }

    /// Degrees `n` with `∂_{n−1} ∘ ∂_n ≠ 0`.
    pub fn dd_failures(&self) -> Result<Vec<usize>> {
        let mut bad = Vec::new();
        for n in 2..=self.boundaries.len() {
            if !self.boundaries[n - 2].mul(&self.boundaries[n - 1])?.is_zero() {
                bad.push(n);
            }
        }
        Ok(bad)
    }
}

/// Nonzero diagonal of a Smith normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    /// `d₁ | d₂ | …`, all positive.
    pub factors: Vec<BigInt>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    /// Factors greater than one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.factors.iter().filter(|d| !d.is_one()).cloned().collect()
    }
}

/// Turns any list of positive diagonal entries into the divisibility chain
/// of the same group, via `(a, b) ↦ (gcd, lcm)`.
fn normalize_diagonal(diag: Vec<BigInt>) -> Vec<BigInt> {
    let ones = diag.iter().filter(|d| d.is_one()).count();
    let mut rest: Vec<BigInt> = diag.into_iter().filter(|d| !d.is_one()).collect();
    for i in 0..rest.len() {
        for j in i + 1..rest.len() {
            if !(&rest[j] % &rest[i]).is_zero() {
                let g = rest[i].gcd(&rest[j]);
                let l = rest[i].lcm(&rest[j]);
                rest[i] = g;
                rest[j] = l;
            }
        }
    }
    let (units, rest): (Vec<BigInt>, Vec<BigInt>) = rest.into_iter().partition(|d| d.is_one());
    let mut out = vec![BigInt::one(); ones + units.len()];
    out.extend(rest);
    out
}

struct SparseElimination {
    rows: Vec<BTreeMap<usize, BigInt>>,
    col_rows: Vec<BTreeSet<usize>>,
    active_rows: BTreeSet<usize>,
}

impl SparseElimination {
    fn new(m: &IntMatrix) -> Self {
        let mut rows = vec![BTreeMap::new(); m.nrows()];
        let mut col_rows = vec![BTreeSet::new(); m.ncols()];
        for (j, col) in m.cols.iter().enumerate() {
            for &(i, v) in col {
                rows[i].insert(j, BigInt::from(v));
                col_rows[j].insert(i);
            }
        }
        let active_rows = (0..m.nrows()).filter(|&i| !rows[i].is_empty()).collect();
        SparseElimination { rows, col_rows, active_rows }
    }

    /// `row_r −= factor · row_p`.
    fn axpy(&mut self, r: usize, p: usize, factor: &BigInt) {
        let pivot_row: Vec<(usize, BigInt)> = self.rows[p].iter().map(|(&c, v)| (c, v.clone())).collect();
        for (c, v) in pivot_row {
            let entry = self.rows[r].entry(c).or_insert_with(BigInt::zero);
            *entry -= factor * v;
            if entry.is_zero() {
                self.rows[r].remove(&c);
                self.col_rows[c].remove(&r);
            } else {
                self.col_rows[c].insert(r);
            }
        }
        if self.rows[r].is_empty() {
            self.active_rows.remove(&r);
        }
    }

    fn drop_row(&mut self, p: usize) {
        for &c in self.rows[p].keys() {
            self.col_rows[c].remove(&p);
        }
        self.rows[p].clear();
        self.active_rows.remove(&p);
    }

    /// A unit entry, preferring sparse columns.
    fn find_unit(&self) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, usize)> = None;
        for &r in &self.active_rows {
            for (&c, v) in &self.rows[r] {
                if v.abs().is_one() {
                    let cost = self.col_rows[c].len();
                    if best.is_none_or(|(_, _, b)| cost < b) {
                        best = Some((r, c, cost));
                        if cost == 1 {
                            return Some((r, c));
                        }
                    }
                }
            }
            if best.is_some() {
                break;
            }
        }
        best.map(|(r, c, _)| (r, c))
    }

    /// Eliminates unit pivots; returns how many were found.
    fn eliminate_units(&mut self) -> usize {
        let mut count = 0;
        while let Some((p, c)) = self.find_unit() {
            let pivot = self.rows[p][&c].clone();
            let others: Vec<usize> = self.col_rows[c].iter().copied().filter(|&r| r != p).collect();
            for r in others {
                let factor = &self.rows[r][&c] * &pivot; // pivot = ±1, its own inverse
                self.axpy(r, p, &factor);
            }
            self.drop_row(p);
            count += 1;
        }
        count
    }

    fn remaining_dense(&self) -> Vec<Vec<BigInt>> {
        let cols: BTreeSet<usize> = self.active_rows.iter().flat_map(|&r| self.rows[r].keys().copied()).collect();
        let col_index: BTreeMap<usize, usize> = cols.iter().enumerate().map(|(k, &c)| (c, k)).collect();
        self.active_rows
            .iter()
            .map(|&r| {
                let mut row = vec![BigInt::zero(); cols.len()];
                for (c, v) in &self.rows[r] {
                    row[col_index[c]] = v.clone();
                }
                row
            })
            .collect()
    }
}

/// Smallest-pivot diagonalisation of a dense matrix, without transforms.
fn dense_diagonal(mut a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pr, pc)) = smallest_entry(&a, t) else { break };
        a.swap(t, pr);
        for row in a.iter_mut() {
            row.swap(t, pc);
        }
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if !a[i][t].is_zero() {
                    let q = a[i][t].div_floor(&a[t][t]);
                    for j in t..cols {
                        let v = &q * &a[t][j];
                        a[i][j] -= v;
                    }
                    if !a[i][t].is_zero() {
                        dirty = true;
                    }
                }
            }
            for j in t + 1..cols {
                if !a[t][j].is_zero() {
                    let q = a[t][j].div_floor(&a[t][t]);
                    for row in a.iter_mut().take(rows).skip(t) {
                        let v = &q * &row[t];
                        row[j] -= v;
                    }
                    if !a[t][j].is_zero() {
                        dirty = true;
                    }
                }
            }
            if !dirty {
                break;
            }
            // a smaller remainder appeared in row or column t: pivot on it
            let (pr, pc) = smallest_in_cross(&a, t);
            a.swap(t, pr);
            for row in a.iter_mut() {
                row.swap(t, pc);
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    diag
}

fn smallest_entry(a: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, v) in row.iter().enumerate().skip(t) {
            if !v.is_zero() && best.as_ref().is_none_or(|(_, _, b)| v.abs() < *b) {
                best = Some((i, j, v.abs()));
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

fn smallest_in_cross(a: &[Vec<BigInt>], t: usize) -> (usize, usize) {
    let mut best = (t, t, a[t][t].abs());
    for (i, row) in a.iter().enumerate().skip(t + 1) {
        if !row[t].is_zero() && row[t].abs() < best.2 {
            best = (i, t, row[t].abs());
        }
    }
    for j in t + 1..a[t].len() {
        if !a[t][j].is_zero() && a[t][j].abs() < best.2 {
            best = (t, j, a[t][j].abs());
        }
    }
    (best.0, best.1)
}

/// Invariant factors of an integer matrix, exact. Unit pivots are removed by
/// sparse elimination first; the remainder is diagonalised densely.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let mut elim = SparseElimination::new(m);
    let units = elim.eliminate_units();
    let mut diag = vec![BigInt::one(); units];
    diag.extend(dense_diagonal(elim.remaining_dense()));
    SmithForm { factors: normalize_diagonal(diag) }
}

/// Dense matrix of big integers, row-major.
pub type BigMatrix = Vec<Vec<BigInt>>;

/// Dense Smith decomposition `U · M · V = D` with unimodular `U`, `V` and
/// `D` diagonal satisfying the divisibility chain. Intended for small
/// matrices; returns `(U, D, V)`.
pub fn smith_with_transforms(m: &[Vec<i64>]) -> (BigMatrix, BigMatrix, BigMatrix) {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let big = |v: i64| BigInt::from(v);
    let mut a: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&v| big(v)).collect()).collect();
    let identity = |k: usize| -> Vec<Vec<BigInt>> {
        (0..k).map(|i| (0..k).map(|j| big(i64::from(i == j))).collect()).collect()
    };
    let mut u = identity(rows);
    let mut v = identity(cols);

    // row op: row_i −= q·row_t (on a and u); column op: col_j −= q·col_t (on a and v)
    fn row_sub(x: &mut [Vec<BigInt>], i: usize, t: usize, q: &BigInt) {
        let src = x[t].clone();
        for (dst, s) in x[i].iter_mut().zip(src) {
            *dst -= q * s;
        }
    }
    fn col_sub(x: &mut [Vec<BigInt>], j: usize, t: usize, q: &BigInt) {
        for row in x.iter_mut() {
            let s = row[t].clone();
            row[j] -= q * s;
        }
    }
    fn swap_cols(x: &mut [Vec<BigInt>], i: usize, j: usize) {
        for row in x.iter_mut() {
            row.swap(i, j);
        }
    }

    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pr, pc)) = smallest_entry(&a, t) else { break };
        a.swap(t, pr);
        u.swap(t, pr);
        swap_cols(&mut a, t, pc);
        swap_cols(&mut v, t, pc);
        loop {
            for i in t + 1..rows {
                let q = a[i][t].div_floor(&a[t][t]);
                if !q.is_zero() {
                    row_sub(&mut a, i, t, &q);
                    row_sub(&mut u, i, t, &q);
                }
            }
            for j in t + 1..cols {
                let q = a[t][j].div_floor(&a[t][t]);
                if !q.is_zero() {
                    col_sub(&mut a, j, t, &q);
                    col_sub(&mut v, j, t, &q);
                }
            }
            let (pr, pc) = smallest_in_cross(&a, t);
            if (pr, pc) != (t, t) {
                a.swap(t, pr);
                u.swap(t, pr);
                swap_cols(&mut a, t, pc);
                swap_cols(&mut v, t, pc);
                continue;
            }
            let cross_clear = (t + 1..rows).all(|i| a[i][t].is_zero()) && (t + 1..cols).all(|j| a[t][j].is_zero());
            if !cross_clear {
                continue;
            }
            // enforce divisibility: fold a non-divisible row into row t
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !(&a[i][j] % &a[t][t]).is_zero()));
            match bad {
                Some(i) => {
                    let minus_one = big(-1);
                    row_sub(&mut a, t, i, &minus_one);
                    row_sub(&mut u, t, i, &minus_one);
                }
                None => break,
            }
        }
        if a[t][t].is_negative() {
            for x in a[t].iter_mut().chain(u[t].iter_mut()) {
                *x = -x.clone();
            }
        }
        t += 1;
    }
    (u, a, v)
}

/// `ℤ^r ⊕ ℤ/d₁ ⊕ …`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyGroup {
    pub free_rank: usize,
    #[serde(with = "crate::bigint_json::vec")]
    pub torsion: Vec<BigInt>,
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.free_rank > 0 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// `H_n` of the chosen complex, within the default limits.
pub fn homology(q: &FiniteQuandle, n: usize, theory: Theory) -> Result<HomologyGroup> {
    homology_with(q, n, theory, &HomologyOptions::default())
}

pub fn homology_with(q: &FiniteQuandle, n: usize, theory: Theory, opts: &HomologyOptions) -> Result<HomologyGroup> {
    if n == 0 {
        return Err(Error::InvalidParameter("homology degree must be at least 1".into()));
    }
    if n > opts.max_degree {
        return Err(Error::Capacity(format!("degree {n} exceeds the bound {}", opts.max_degree)));
    }
    let build = |k: usize| match theory {
        Theory::Rack => rack_boundary_guarded(q, k, opts.max_cells),
        Theory::Quandle => quandle_boundary_guarded(q, k, opts.max_cells),
    };
    let d_n = build(n)?;
    let d_next = build(n + 1)?;
    let rank_n = smith_normal_form(&d_n).rank();
    let snf_next = smith_normal_form(&d_next);
    let kernel = d_n.ncols() - rank_n;
    Ok(HomologyGroup { free_rank: kernel - snf_next.rank(), torsion: snf_next.torsion() })
}
