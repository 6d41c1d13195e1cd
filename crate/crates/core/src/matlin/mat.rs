use crate::error::{Error, Result};
use crate::field::{Elem, Gf};
use serde_json::Value;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};

/// Dense row-major matrix over a table field.
#[derive(Clone)]
pub struct Mat {
    f: Gf,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl PartialEq for Mat {
    fn eq(&self, o: &Self) -> bool {
        self.rows == o.rows && self.cols == o.cols && self.data == o.data
    }
}
impl Eq for Mat {}

impl Hash for Mat {
    fn hash<H: Hasher>(&self, h: &mut H) {
        self.rows.hash(h);
        self.cols.hash(h);
        self.data.hash(h);
    }
}

impl PartialOrd for Mat {
    fn partial_cmp(&self, o: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(o))
    }
}
impl Ord for Mat {
    fn cmp(&self, o: &Self) -> std::cmp::Ordering {
        (self.rows, self.cols, &self.data).cmp(&(o.rows, o.cols, &o.data))
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(fm, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(fm, "; ")?;
            }
            let r: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            write!(fm, "{}", r.join(" "))?;
        }
        write!(fm, "]")
    }
}

/// `dst += c·src` on raw rows.
#[inline]
pub(crate) fn axpy(f: &Gf, dst: &mut [Elem], c: Elem, src: &[Elem]) {
    if c == 0 {
        return;
    }
    if f.is_prime_field() {
        let p = f.p() as u64;
        let c = c as u64;
        for (d, s) in dst.iter_mut().zip(src) {
            if *s != 0 {
                *d = ((*d as u64 + c * *s as u64) % p) as u32;
            }
        }
    } else {
        for (d, s) in dst.iter_mut().zip(src) {
            if *s != 0 {
                *d = f.add_e(*d, f.mul_e(c, *s));
            }
        }
    }
}

impl Mat {
    pub fn zero(f: &Gf, rows: usize, cols: usize) -> Mat {
        Mat { f: f.clone(), rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(f: &Gf, n: usize) -> Mat {
        Mat::scalar(f, n, 1)
    }

    pub fn scalar(f: &Gf, n: usize, a: Elem) -> Mat {
        let mut m = Mat::zero(f, n, n);
        for i in 0..n {
            m.data[i * n + i] = a;
        }
        m
    }

    pub fn from_vec(f: &Gf, rows: usize, cols: usize, data: Vec<Elem>) -> Mat {
        assert_eq!(data.len(), rows * cols, "matrix data length");
        Mat { f: f.clone(), rows, cols, data }
    }

    /// From rows of integers (reduced into the field by code; for prime fields mod p).
    pub fn from_rows(f: &Gf, rows: &[Vec<Elem>]) -> Mat {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row.iter().map(|x| x % f.q()));
        }
        Mat { f: f.clone(), rows: r, cols: c, data }
    }

    /// Unit matrix E_{ij}.
    pub fn unit(f: &Gf, rows: usize, cols: usize, i: usize, j: usize) -> Mat {
        let mut m = Mat::zero(f, rows, cols);
        m.data[i * cols + j] = 1;
        m
    }

    pub fn field(&self) -> &Gf {
        &self.f
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }
    pub fn data(&self) -> &[Elem] {
        &self.data
    }
    pub fn into_data(self) -> Vec<Elem> {
        self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [Elem] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| *x == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j) == (i == j) as u32))
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zero(&self.f, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j);
            }
        }
        t
    }

    pub fn scale(&self, a: Elem) -> Mat {
        let data = self.data.iter().map(|x| self.f.mul_e(*x, a)).collect();
        Mat { f: self.f.clone(), rows: self.rows, cols: self.cols, data }
    }

    /// Entrywise field map, e.g. Frobenius.
    pub fn map(&self, h: impl Fn(Elem) -> Elem) -> Mat {
        Mat { f: self.f.clone(), rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| h(*x)).collect() }
    }

    pub fn trace(&self) -> Elem {
        (0..self.rows.min(self.cols)).fold(0, |acc, i| self.f.add_e(acc, self.get(i, i)))
    }

    pub fn checked_mul(&self, o: &Mat) -> Result<Mat> {
        if self.cols != o.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        let mut out = Mat::zero(&self.f, self.rows, o.cols);
        let f = &self.f;
        if f.is_prime_field() {
            // Accumulate in u64 and reduce once per row chunk.
            let p = f.p() as u64;
            let mut acc = vec![0u64; o.cols];
            let limit = u64::MAX / ((p - 1) * (p - 1)).max(1);
            for i in 0..self.rows {
                acc.iter_mut().for_each(|x| *x = 0);
                let mut cnt = 0u64;
                for k in 0..self.cols {
                    let a = self.data[i * self.cols + k] as u64;
                    if a == 0 {
                        continue;
                    }
                    for (x, b) in acc.iter_mut().zip(o.row(k)) {
                        *x += a * *b as u64;
                    }
                    cnt += 1;
                    if cnt + 1 >= limit {
                        acc.iter_mut().for_each(|x| *x %= p);
                        cnt = 0;
                    }
                }
                for (d, x) in out.row_mut(i).iter_mut().zip(&acc) {
                    *d = (x % p) as u32;
                }
            }
        } else {
            for i in 0..self.rows {
                for k in 0..self.cols {
                    let a = self.data[i * self.cols + k];
                    if a != 0 {
                        let (lo, hi) = (i * o.cols, (i + 1) * o.cols);
                        axpy(f, &mut out.data[lo..hi], a, o.row(k));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[Elem]) -> Vec<Elem> {
        assert_eq!(v.len(), self.rows);
        let mut out = vec![0; self.cols];
        for (k, a) in v.iter().enumerate() {
            axpy(&self.f, &mut out, *a, self.row(k));
        }
        out
    }

    pub fn pow(&self, mut e: u64) -> Mat {
        let mut base = self.clone();
        let mut acc = Mat::identity(&self.f, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn submatrix(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Mat {
        let mut m = Mat::zero(&self.f, rows, cols);
        for i in 0..rows {
            m.row_mut(i).copy_from_slice(&self.row(r0 + i)[c0..c0 + cols]);
        }
        m
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Mat) {
        for i in 0..b.rows {
            let cols = self.cols;
            self.data[(r0 + i) * cols + c0..(r0 + i) * cols + c0 + b.cols].copy_from_slice(b.row(i));
        }
    }

    pub fn block_diag(f: &Gf, blocks: &[&Mat]) -> Mat {
        let r: usize = blocks.iter().map(|b| b.rows).sum();
        let c: usize = blocks.iter().map(|b| b.cols).sum();
        let mut m = Mat::zero(f, r, c);
        let (mut i, mut j) = (0, 0);
        for b in blocks {
            m.set_block(i, j, b);
            i += b.rows;
            j += b.cols;
        }
        m
    }

    pub fn vstack(f: &Gf, cols: usize, parts: &[&Mat]) -> Mat {
        let mut data = Vec::new();
        let mut rows = 0;
        for p in parts {
            assert_eq!(p.cols, cols);
            data.extend_from_slice(&p.data);
            rows += p.rows;
        }
        Mat::from_vec(f, rows, cols, data)
    }

    pub fn hstack(&self, o: &Mat) -> Mat {
        assert_eq!(self.rows, o.rows);
        let mut m = Mat::zero(&self.f, self.rows, self.cols + o.cols);
        m.set_block(0, 0, self);
        m.set_block(0, self.cols, o);
        m
    }

    /// Kronecker product with row-major pair ordering (i,j) ↦ i·cols(B)+j.
    pub fn kronecker(&self, b: &Mat) -> Mat {
        let (r, c) = (self.rows * b.rows, self.cols * b.cols);
        let mut m = Mat::zero(&self.f, r, c);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..b.rows {
                    for l in 0..b.cols {
                        m.data[(i * b.rows + j) * c + k * b.cols + l] = self.f.mul_e(a, b.get(j, l));
                    }
                }
            }
        }
        m
    }

    /// Reduced row-echelon form, rank and pivot columns.
    pub fn rref(&self) -> (Mat, usize, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let r = pivots.len();
        m.data.truncate(r * m.cols);
        let full = Mat { rows: r, ..m };
        (full, r, pivots)
    }

    /// In-place RREF keeping all rows (zero rows at the bottom); returns pivots.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.f.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| self.data[i * cols + c] != 0) else { continue };
            if pr != r {
                for j in 0..cols {
                    self.data.swap(pr * cols + j, r * cols + j);
                }
            }
            let inv = f.inv_e(self.data[r * cols + c]).unwrap();
            for j in c..cols {
                self.data[r * cols + j] = f.mul_e(self.data[r * cols + j], inv);
            }
            let pivot_row: Vec<Elem> = self.data[r * cols..(r + 1) * cols].to_vec();
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let x = self.data[i * cols + c];
                if x != 0 {
                    axpy(&f, &mut self.data[i * cols..(i + 1) * cols], f.neg_e(x), &pivot_row);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    pub fn inverse(&self) -> Option<Mat> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = self.hstack(&Mat::identity(&self.f, n));
        let piv = aug.rref_in_place();
        if piv.len() < n || piv[n - 1] != n - 1 {
            return None;
        }
        Some(aug.submatrix(0, n, n, n))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Flatten row-major into a vector.
    pub fn flatten(&self) -> Vec<Elem> {
        self.data.clone()
    }

    /// JSON: nested arrays of integers, or of coefficient arrays when k > 1.
    pub fn to_json(&self) -> Value {
        let enc = |x: Elem| -> Value {
            if self.f.is_prime_field() {
                Value::from(x)
            } else {
                Value::from(self.f.coeffs(x))
            }
        };
        Value::Array(
            (0..self.rows)
                .map(|i| Value::Array(self.row(i).iter().map(|x| enc(*x)).collect()))
                .collect(),
        )
    }

    pub fn from_json(f: &Gf, v: &Value) -> Result<Mat> {
        let bad = || Error::Input("matrix must be a nested array".into());
        let rows = v.as_array().ok_or_else(bad)?;
        let mut out = Vec::new();
        let mut ncols = None;
        for r in rows {
            let r = r.as_array().ok_or_else(bad)?;
            if *ncols.get_or_insert(r.len()) != r.len() {
                return Err(Error::Input("ragged matrix".into()));
            }
            for e in r {
                out.push(elem_from_json(f, e)?);
            }
        }
        Ok(Mat::from_vec(f, rows.len(), ncols.unwrap_or(0), out))
    }
}

/// Parse one field element: an integer (prime field, or packed code) or a coefficient array.
pub fn elem_from_json(f: &Gf, e: &Value) -> Result<Elem> {
    if let Some(n) = e.as_i64() {
        if f.is_prime_field() {
            return Ok(f.int(n));
        }
        return Ok(f.from_coeffs(&[f.int(n)]));
    }
    if let Some(a) = e.as_array() {
        let c: Result<Vec<u32>> = a
            .iter()
            .map(|x| x.as_i64().map(|n| f.int(n)).ok_or_else(|| Error::Input("bad coefficient".into())))
            .collect();
        return Ok(f.from_coeffs(&c?));
    }
    Err(Error::Input("bad field element".into()))
}

pub fn elem_to_json(f: &Gf, x: Elem) -> Value {
    if f.is_prime_field() {
        Value::from(x)
    } else {
        Value::from(f.coeffs(x))
    }
}

impl<'a> Mul<&'a Mat> for &'a Mat {
    type Output = Mat;
    fn mul(self, o: &Mat) -> Mat {
        self.checked_mul(o).expect("matrix dimensions")
    }
}

impl<'a> Add<&'a Mat> for &'a Mat {
    type Output = Mat;
    fn add(self, o: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let data = self.data.iter().zip(&o.data).map(|(a, b)| self.f.add_e(*a, *b)).collect();
        Mat { f: self.f.clone(), rows: self.rows, cols: self.cols, data }
    }
}

impl<'a> Sub<&'a Mat> for &'a Mat {
    type Output = Mat;
    fn sub(self, o: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let data = self.data.iter().zip(&o.data).map(|(a, b)| self.f.sub_e(*a, *b)).collect();
        Mat { f: self.f.clone(), rows: self.rows, cols: self.cols, data }
    }
}

impl Neg for &Mat {
    type Output = Mat;
    fn neg(self) -> Mat {
        self.map(|x| self.f.neg_e(x))
    }
}
