//! Dense matrices over a [`Field`] with exact elimination.

use std::fmt;
use std::ops::Mul;

use crate::field::{Field, FieldElement};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<FieldElement>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            field,
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_columns(field: Field, rows: usize, cols: &[Vec<FieldElement>]) -> Self {
        let mut m = Matrix::zeros(field, rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &FieldElement {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: FieldElement) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<FieldElement> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(FieldElement::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    /// `self - c * Id`.
    pub fn shift(&self, c: &FieldElement) -> Matrix {
        assert_eq!(self.rows, self.cols);
        let mut m = self.clone();
        for i in 0..self.rows {
            let v = self.get(i, i) - c;
            m.set(i, i, v);
        }
        m
    }

    pub fn pow(&self, mut e: usize) -> Matrix {
        assert_eq!(self.rows, self.cols);
        let mut acc = Matrix::identity(self.field, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `[self; other]`
    pub fn stack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix {
            field: self.field,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn mul_vec(&self, v: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(self.field.zero(), |acc, (a, b)| &acc + &(a * b))
            })
            .collect()
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().unwrap();
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i != r && !m.get(i, c).is_zero() {
                    let f = m.get(i, c).clone();
                    for j in c..m.cols {
                        if !m.get(r, j).is_zero() {
                            let v = m.get(i, j) - &(&f * m.get(r, j));
                            m.set(i, j, v);
                        }
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        let mut e = Echelon::new(self.field, self.cols);
        for i in 0..self.rows {
            e.insert(self.row(i).to_vec());
        }
        e.rank()
    }

    /// Basis of the null space `{ v : self * v = 0 }`.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let basis = free
            .iter()
            .map(|&f| {
                let mut v = vec![self.field.zero(); self.cols];
                v[f] = self.field.one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(row, f);
                }
                v
            })
            .collect();
        Subspace {
            ambient: self.cols,
            basis,
            coordinate_rows: free,
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// Characteristic polynomial `det(t Id - self)`, coefficients from the
    /// constant term up. Uses reduction to Hessenberg form, which needs only
    /// field operations.
    pub fn charpoly(&self) -> Vec<FieldElement> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let field = self.field;
        let mut h = self.clone();
        for m in 1..n.saturating_sub(1) {
            let Some(i) = (m..n).find(|&i| !h.get(i, m - 1).is_zero()) else {
                continue;
            };
            h.swap_rows(i, m);
            h.swap_cols(i, m);
            let inv = h.get(m, m - 1).inv().unwrap();
            for j in m + 1..n {
                let u = h.get(j, m - 1) * &inv;
                if u.is_zero() {
                    continue;
                }
                for k in 0..n {
                    let v = h.get(j, k) - &(&u * h.get(m, k));
                    h.set(j, k, v);
                }
                for k in 0..n {
                    let v = h.get(k, m) + &(&u * h.get(k, j));
                    h.set(k, m, v);
                }
            }
        }

        // p[k] = charpoly of the leading k x k block
        let mut p: Vec<Vec<FieldElement>> = vec![vec![field.one()]];
        for k in 1..=n {
            let hk = h.get(k - 1, k - 1);
            let mut next = poly_mul_linear(&p[k - 1], hk, field);
            let mut t = field.one();
            for i in 1..k {
                t = &t * h.get(k - i, k - i - 1);
                let c = &t * h.get(k - i - 1, k - 1);
                if c.is_zero() {
                    continue;
                }
                for (d, a) in p[k - i - 1].iter().enumerate() {
                    next[d] = &next[d] - &(&c * a);
                }
            }
            p.push(next);
        }
        p.pop().unwrap()
    }
}

/// `(t - c) * p`
fn poly_mul_linear(p: &[FieldElement], c: &FieldElement, field: Field) -> Vec<FieldElement> {
    let mut out = vec![field.zero(); p.len() + 1];
    for (d, a) in p.iter().enumerate() {
        out[d + 1] = &out[d + 1] + a;
        out[d] = &out[d] - &(a * c);
    }
    out
}

impl Mul<&Matrix> for &Matrix {
    type Output = Matrix;

    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + &(a * b);
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// A subspace of `k^ambient` given by basis vectors that restrict to the
/// identity on `coordinate_rows`; the coordinates of a member vector are
/// simply its entries at those rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    pub ambient: usize,
    pub basis: Vec<Vec<FieldElement>>,
    pub coordinate_rows: Vec<usize>,
}

impl Subspace {
    pub fn full(field: Field, n: usize) -> Self {
        let id = Matrix::identity(field, n);
        Subspace {
            ambient: n,
            basis: (0..n).map(|j| id.column(j)).collect(),
            coordinate_rows: (0..n).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of a vector known to lie in the subspace.
    pub fn coordinates(&self, v: &[FieldElement]) -> Vec<FieldElement> {
        self.coordinate_rows.iter().map(|&r| v[r].clone()).collect()
    }

    /// Matrix of `op` restricted to this (invariant) subspace.
    pub fn restrict(&self, op: &Matrix) -> Matrix {
        let cols: Vec<Vec<FieldElement>> = self.basis.iter().map(|b| self.coordinates(&op.mul_vec(b))).collect();
        Matrix::from_columns(op.field(), self.dim(), &cols)
    }

    /// Embeds a subspace given in this subspace's coordinates into the ambient space.
    pub fn compose(&self, inner: &Subspace) -> Subspace {
        let basis = inner
            .basis
            .iter()
            .map(|c| {
                let field = c.first().map(FieldElement::field);
                let mut v: Vec<FieldElement> = match field {
                    Some(f) => vec![f.zero(); self.ambient],
                    None => Vec::new(),
                };
                for (coef, b) in c.iter().zip(&self.basis) {
                    if coef.is_zero() {
                        continue;
                    }
                    for (vi, bi) in v.iter_mut().zip(b) {
                        *vi += &(coef * bi);
                    }
                }
                v
            })
            .collect();
        Subspace {
            ambient: self.ambient,
            basis,
            coordinate_rows: inner.coordinate_rows.iter().map(|&r| self.coordinate_rows[r]).collect(),
        }
    }
}

/// Incrementally built row echelon basis, for rank computations.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: Field,
    width: usize,
    // (pivot column, row normalized so the pivot is one)
    rows: Vec<(usize, Vec<FieldElement>)>,
}

impl Echelon {
    pub fn new(field: Field, width: usize) -> Self {
        Echelon {
            field,
            width,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Reduces `v` against the current rows.
    pub fn reduce(&self, mut v: Vec<FieldElement>) -> Vec<FieldElement> {
        assert_eq!(v.len(), self.width);
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].clone();
            for (vi, ri) in v.iter_mut().zip(row).skip(*p) {
                if !ri.is_zero() {
                    *vi -= &(&f * ri);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: Vec<FieldElement>) -> bool {
        self.reduce(v).iter().all(FieldElement::is_zero)
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: Vec<FieldElement>) -> bool {
        let v = self.reduce(v);
        let Some(p) = v.iter().position(|a| !a.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().unwrap();
        let v: Vec<FieldElement> = v.iter().map(|a| a * &inv).collect();
        self.rows.push((p, v));
        true
    }

    pub fn basis(&self) -> impl Iterator<Item = &Vec<FieldElement>> {
        self.rows.iter().map(|(_, r)| r)
    }

    pub fn field(&self) -> Field {
        self.field
    }
}
