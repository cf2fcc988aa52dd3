//! Dense matrices over GF(q) and subspaces in canonical form.
//!
//! A [`Subspace`] is stored as the reduced row echelon basis of its row
//! space with the zero rows dropped. That basis is unique, so two subspaces
//! are equal exactly when their stored entries are equal, and ordering,
//! hashing and deduplication all work on the entry sequence.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::error::{Error, Result};
use crate::gf::Field;

#[derive(Clone, PartialEq, Eq)]
pub struct MatFq {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

/// Result of [`MatFq::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: MatFq,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// Gauss-Jordan elimination in place on a row-major buffer; returns pivot columns.
fn rref_in_place(field: &Field, data: &mut [u8], rows: usize, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| data[i * cols + c] != 0) else {
            continue;
        };
        if pr != r {
            for j in 0..cols {
                data.swap(pr * cols + j, r * cols + j);
            }
        }
        let inv = field.inv(data[r * cols + c]).unwrap();
        if inv != 1 {
            for j in c..cols {
                data[r * cols + j] = field.mul(data[r * cols + j], inv);
            }
        }
        for i in 0..rows {
            let f = data[i * cols + c];
            if i != r && f != 0 {
                let nf = field.neg(f);
                for j in c..cols {
                    let t = field.mul(nf, data[r * cols + j]);
                    data[i * cols + j] = field.add(data[i * cols + j], t);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

impl MatFq {
    pub fn new(field: &Field, rows: usize, cols: usize, data: Vec<u8>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(&bad) = data.iter().find(|&&c| c as u32 >= field.q()) {
            return Err(Error::ElementOutOfRange {
                code: bad as u32,
                q: field.q(),
            });
        }
        Ok(MatFq {
            field: field.clone(),
            rows,
            cols,
            data,
        })
    }

    pub fn from_rows<R: AsRef<[u8]>>(field: &Field, rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        if rows.iter().any(|r| r.as_ref().len() != cols) {
            return Err(Error::Shape("ragged rows".into()));
        }
        let data = rows
            .iter()
            .flat_map(|r| r.as_ref().iter().copied())
            .collect();
        Self::new(field, rows.len(), cols, data)
    }

    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Self {
        MatFq {
            field: field.clone(),
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u8) {
        assert!((v as u32) < self.field.q());
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u8] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[u8]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn column(&self, j: usize) -> Vec<u8> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn entries(&self) -> &[u8] {
        &self.data
    }

    pub fn rref(&self) -> Rref {
        let mut data = self.data.clone();
        let pivots = rref_in_place(&self.field, &mut data, self.rows, self.cols);
        Rref {
            matrix: MatFq {
                field: self.field.clone(),
                rows: self.rows,
                cols: self.cols,
                data,
            },
            rank: pivots.len(),
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        let mut data = self.data.clone();
        rref_in_place(&self.field, &mut data, self.rows, self.cols).len()
    }

    /// Vertical concatenation.
    pub fn stack(&self, other: &MatFq) -> Result<MatFq> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.cols != other.cols {
            return Err(Error::Shape(format!(
                "cannot stack {} and {} columns",
                self.cols, other.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(MatFq {
            field: self.field.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn mul(&self, other: &MatFq) -> Result<MatFq> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = MatFq::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = 0;
                for t in 0..self.cols {
                    acc = f.add(acc, f.mul(self.get(i, t), other.get(t, j)));
                }
                out.data[i * other.cols + j] = acc;
            }
        }
        Ok(out)
    }

    /// Column `j` of the result is column `sigma[j]` of `self`.
    pub fn permute_columns(&self, sigma: &[usize]) -> Result<MatFq> {
        let mut seen = vec![false; self.cols];
        if sigma.len() != self.cols {
            return Err(Error::InvalidPermutation(self.cols));
        }
        for &s in sigma {
            if s >= self.cols || std::mem::replace(&mut seen[s], true) {
                return Err(Error::InvalidPermutation(self.cols));
            }
        }
        let mut out = MatFq::zeros(&self.field, self.rows, self.cols);
        for i in 0..self.rows {
            for (j, &s) in sigma.iter().enumerate() {
                out.data[i * self.cols + j] = self.get(i, s);
            }
        }
        Ok(out)
    }
}

impl fmt::Debug for MatFq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// Matrix text format: entries separated by spaces, rows by `"; "`.
impl fmt::Display for MatFq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            if i > 0 {
                f.write_str("; ")?;
            }
            for (j, c) in self.row(i).iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{c}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for MatFq {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.rows))?;
        for r in self.row_iter() {
            seq.serialize_element(r)?;
        }
        seq.end()
    }
}

/// Parses the matrix text format. Rows are separated by `;` or newlines,
/// entries by whitespace; every entry must be an element code below q.
pub fn parse_matrix(text: &str, field: &Field) -> Result<MatFq> {
    let mut rows: Vec<Vec<u8>> = Vec::new();
    for line in text.split([';', '\n']) {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let row = line
            .split_whitespace()
            .map(|tok| {
                let code: u32 = tok
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad entry {tok:?}")))?;
                if code >= field.q() {
                    return Err(Error::ElementOutOfRange { code, q: field.q() });
                }
                Ok(code as u8)
            })
            .collect::<Result<Vec<u8>>>()?;
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(Error::Parse("empty matrix".into()));
    }
    if rows.iter().any(|r| r.len() != rows[0].len()) {
        return Err(Error::Parse("ragged rows".into()));
    }
    MatFq::from_rows(field, &rows)
}

/// A linear code: a subspace of F_q^n held as its canonical RREF basis.
#[derive(Clone)]
pub struct Subspace {
    basis: MatFq,
    pivots: Vec<usize>,
}

impl Subspace {
    /// Row space of `m`, including the zero subspace.
    pub fn span(m: &MatFq) -> Subspace {
        let Rref {
            mut matrix,
            rank,
            pivots,
        } = m.rref();
        matrix.data.truncate(rank * matrix.cols);
        matrix.rows = rank;
        Subspace {
            basis: matrix,
            pivots,
        }
    }

    pub fn zero(field: &Field, n: usize) -> Subspace {
        Subspace {
            basis: MatFq::zeros(field, 0, n),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: &Field, n: usize) -> Subspace {
        Subspace {
            basis: MatFq::identity(field, n),
            pivots: (0..n).collect(),
        }
    }

    pub(crate) fn from_canonical(basis: MatFq, pivots: Vec<usize>) -> Subspace {
        debug_assert_eq!(Subspace::span(&basis).basis, basis);
        Subspace { basis, pivots }
    }

    pub fn field(&self) -> &Field {
        &self.basis.field
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols
    }

    pub fn basis(&self) -> &MatFq {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_compatible(&self, other: &Subspace) -> Result<()> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch);
        }
        if self.ambient_dim() != other.ambient_dim() {
            return Err(Error::AmbientMismatch(format!(
                "F^{} vs F^{}",
                self.ambient_dim(),
                other.ambient_dim()
            )));
        }
        Ok(())
    }

    /// Reduces `v` against the basis in place; `v` ends up zero iff it lies in the span.
    pub(crate) fn reduce(&self, v: &mut [u8]) {
        let f = self.field();
        for (i, &p) in self.pivots.iter().enumerate() {
            let c = v[p];
            if c != 0 {
                let nc = f.neg(c);
                for (x, &b) in v.iter_mut().zip(self.basis.row(i)) {
                    *x = f.add(*x, f.mul(nc, b));
                }
            }
        }
    }

    pub fn contains_vector(&self, v: &[u8]) -> bool {
        let mut v = v.to_vec();
        self.reduce(&mut v);
        v.iter().all(|&c| c == 0)
    }

    pub fn contains(&self, inner: &Subspace) -> Result<bool> {
        self.check_compatible(inner)?;
        Ok(inner.dim() <= self.dim() && inner.basis.row_iter().all(|r| self.contains_vector(r)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        Ok(Subspace::span(&self.basis.stack(&other.basis)?))
    }

    pub fn intersect_dim(&self, other: &Subspace) -> Result<usize> {
        self.check_compatible(other)?;
        let rank = self.basis.stack(&other.basis)?.rank();
        Ok(self.dim() + other.dim() - rank)
    }

    /// Orthogonal complement under the standard dot product.
    pub fn dual(&self) -> Subspace {
        let f = self.field();
        let n = self.ambient_dim();
        let free: Vec<usize> = (0..n).filter(|c| !self.pivots.contains(c)).collect();
        let mut rows = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![0u8; n];
            v[fc] = 1;
            for (i, &p) in self.pivots.iter().enumerate() {
                v[p] = f.neg(self.basis.get(i, fc));
            }
            rows.push(v);
        }
        if rows.is_empty() {
            return Subspace::zero(f, n);
        }
        Subspace::span(&MatFq::from_rows(f, &rows).expect("rectangular"))
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        Ok(self.dual().sum(&other.dual())?.dual())
    }

    /// Span of this subspace and one extra vector.
    pub fn extend(&self, w: &[u8]) -> Result<Subspace> {
        let row = MatFq::from_rows(self.field(), &[w])?;
        if row.cols != self.ambient_dim() {
            return Err(Error::AmbientMismatch(format!(
                "vector of length {} in F^{}",
                row.cols,
                self.ambient_dim()
            )));
        }
        Ok(Subspace::span(&self.basis.stack(&row)?))
    }

    pub fn permute_columns(&self, sigma: &[usize]) -> Result<Subspace> {
        Ok(Subspace::span(&self.basis.permute_columns(sigma)?))
    }
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.basis == other.basis
    }
}

impl Eq for Subspace {}

impl Hash for Subspace {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.basis.rows.hash(state);
        self.basis.cols.hash(state);
        self.basis.data.hash(state);
    }
}

/// Canonical order: pivot pattern first, then basis entries. For subspaces
/// of equal dimension this is the enumeration order of
/// [`crate::grassmann::Grassmannian`].
impl Ord for Subspace {
    fn cmp(&self, other: &Self) -> Ordering {
        (
            self.ambient_dim(),
            self.dim(),
            &self.pivots,
            &self.basis.data,
        )
            .cmp(&(
                other.ambient_dim(),
                other.dim(),
                &other.pivots,
                &other.basis.data,
            ))
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.basis)
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.basis)
    }
}

impl Serialize for Subspace {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.basis.serialize(s)
    }
}

pub fn rref(m: &MatFq) -> Rref {
    m.rref()
}

/// The code generated by the rows of `m`; the zero code is rejected.
pub fn rowspace(m: &MatFq) -> Result<Subspace> {
    let s = Subspace::span(m);
    if s.dim() == 0 {
        return Err(Error::ZeroSubspace);
    }
    Ok(s)
}

pub fn intersect_dim(a: &Subspace, b: &Subspace) -> Result<usize> {
    a.intersect_dim(b)
}

pub fn contains(outer: &Subspace, inner: &Subspace) -> Result<bool> {
    outer.contains(inner)
}

pub fn permute_columns(m: &MatFq, sigma: &[usize]) -> Result<MatFq> {
    m.permute_columns(sigma)
}
