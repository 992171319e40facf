//! Dense exact matrices over a [`FieldSpec`], with the linear algebra the
//! category layer needs: products (with fast paths per field kind), reduced
//! row echelon form, kernel/column-space bases, linear solving, fraction-free
//! characteristic polynomials, and Fitting decompositions.
//!
//! Finite-field entries are stored as one byte per entry (the field-index
//! encoding of [`crate::field`]); rational entries as `BigRational`. Products
//! over odd prime fields run as integer products with a single final
//! reduction; products and eliminations in characteristic 2 run bit-packed,
//! one machine word per 64 entries of each GF(2)-coefficient plane.
//!
//! Shape or field mismatches are programmer errors and panic; value-level
//! failures (inconsistent systems, division by zero) are reported through
//! return values.

use num_rational::BigRational;
use num_traits::Zero;

use crate::field::{FieldKind, FieldSpec, Scalar, Value};

#[derive(Clone, Debug, PartialEq)]
enum MatData {
    Fin(Vec<u8>),
    Rat(Vec<BigRational>),
}

/// A rows×cols matrix over a fixed ground field, row-major.
#[derive(Clone, Debug)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: MatData,
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.rows == other.rows
            && self.cols == other.cols
            && self.data == other.data
    }
}
impl Eq for Matrix {}

impl Matrix {
    // ----- construction -----

    pub fn zeros(field: &FieldSpec, rows: usize, cols: usize) -> Matrix {
        let data = if field.is_finite() {
            MatData::Fin(vec![0u8; rows * cols])
        } else {
            MatData::Rat(vec![BigRational::zero(); rows * cols])
        };
        Matrix { field: field.clone(), rows, cols, data }
    }

    pub fn identity(field: &FieldSpec, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        let one = field.one();
        for i in 0..n {
            m.set(i, i, &one);
        }
        m
    }

    /// n×n scalar matrix c·Id.
    pub fn scalar(field: &FieldSpec, n: usize, c: &Scalar) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, c);
        }
        m
    }

    /// Build from integer rows (each integer mapped through the field).
    pub fn from_int_rows(field: &FieldSpec, rows: &[Vec<i64>]) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = Matrix::zeros(field, r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, &field.from_integer(v));
            }
        }
        m
    }

    pub fn from_fn(
        field: &FieldSpec,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Matrix {
        let mut m = Matrix::zeros(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, &f(i, j));
            }
        }
        m
    }

    /// Stack column vectors (n×1 matrices, or n×k blocks) side by side.
    pub fn hstack(parts: &[Matrix]) -> Matrix {
        assert!(!parts.is_empty());
        let field = parts[0].field.clone();
        let rows = parts[0].rows;
        let cols: usize = parts.iter().map(|p| p.cols).sum();
        let mut m = Matrix::zeros(&field, rows, cols);
        let mut off = 0;
        for p in parts {
            assert_eq!(p.rows, rows, "hstack: row mismatch");
            assert!(p.field == field, "hstack: field mismatch");
            for i in 0..rows {
                for j in 0..p.cols {
                    m.set(i, off + j, &p.get(i, j));
                }
            }
            off += p.cols;
        }
        m
    }

    /// Stack blocks vertically.
    pub fn vstack(parts: &[Matrix]) -> Matrix {
        assert!(!parts.is_empty());
        let field = parts[0].field.clone();
        let cols = parts[0].cols;
        let rows: usize = parts.iter().map(|p| p.rows).sum();
        let mut m = Matrix::zeros(&field, rows, cols);
        let mut off = 0;
        for p in parts {
            assert_eq!(p.cols, cols, "vstack: col mismatch");
            assert!(p.field == field, "vstack: field mismatch");
            for i in 0..p.rows {
                for j in 0..cols {
                    m.set(off + i, j, &p.get(i, j));
                }
            }
            off += p.rows;
        }
        m
    }

    /// Block-diagonal sum.
    pub fn direct_sum(a: &Matrix, b: &Matrix) -> Matrix {
        assert!(a.field == b.field);
        let mut m = Matrix::zeros(&a.field, a.rows + b.rows, a.cols + b.cols);
        for i in 0..a.rows {
            for j in 0..a.cols {
                m.set(i, j, &a.get(i, j));
            }
        }
        for i in 0..b.rows {
            for j in 0..b.cols {
                m.set(a.rows + i, a.cols + j, &b.get(i, j));
            }
        }
        m
    }

    // ----- accessors -----

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    fn fin(&self) -> &[u8] {
        match &self.data {
            MatData::Fin(v) => v,
            _ => panic!("finite-field data requested on a rational matrix"),
        }
    }
    fn rat(&self) -> &[BigRational] {
        match &self.data {
            MatData::Rat(v) => v,
            _ => panic!("rational data requested on a finite-field matrix"),
        }
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        assert!(i < self.rows && j < self.cols, "index out of range");
        let value = match &self.data {
            MatData::Fin(v) => Value::Fin(v[i * self.cols + j]),
            MatData::Rat(v) => Value::Rat(v[i * self.cols + j].clone()),
        };
        Scalar::from_parts(self.field.clone(), value)
    }

    pub fn set(&mut self, i: usize, j: usize, s: &Scalar) {
        assert!(i < self.rows && j < self.cols, "index out of range");
        assert!(s.field() == &self.field, "field mismatch in set");
        let cols = self.cols;
        match (&mut self.data, s.value()) {
            (MatData::Fin(v), Value::Fin(x)) => v[i * cols + j] = *x,
            (MatData::Rat(v), Value::Rat(x)) => v[i * cols + j] = x.clone(),
            _ => unreachable!(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.data {
            MatData::Fin(v) => v.iter().all(|&x| x == 0),
            MatData::Rat(v) => v.iter().all(|x| x.is_zero()),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Matrix::identity(&self.field, self.rows)
    }

    /// Column j as an n×1 matrix.
    pub fn col(&self, j: usize) -> Matrix {
        let mut c = Matrix::zeros(&self.field, self.rows, 1);
        for i in 0..self.rows {
            c.set(i, 0, &self.get(i, j));
        }
        c
    }

    /// Contiguous sub-block.
    pub fn submatrix(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        assert!(r0 + rows <= self.rows && c0 + cols <= self.cols);
        Matrix::from_fn(&self.field, rows, cols, |i, j| self.get(r0 + i, c0 + j))
    }

    /// The 1×(rows·cols) row-major flattening.
    pub fn flatten_row_major(&self) -> Matrix {
        let mut out = self.clone();
        out.rows = 1;
        out.cols = self.rows * self.cols;
        out
    }

    /// Inverse of [`Self::flatten_row_major`].
    pub fn reshape(&self, rows: usize, cols: usize) -> Matrix {
        assert_eq!(rows * cols, self.rows * self.cols, "reshape size mismatch");
        let mut out = self.clone();
        out.rows = rows;
        out.cols = cols;
        out
    }

    // ----- ring operations -----

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert!(self.field == other.field, "field mismatch in add");
        assert!(self.rows == other.rows && self.cols == other.cols, "shape mismatch in add");
        let data = match (&self.data, &other.data) {
            (MatData::Fin(a), MatData::Fin(b)) => {
                MatData::Fin(a.iter().zip(b).map(|(&x, &y)| self.field.radd(x, y)).collect())
            }
            (MatData::Rat(a), MatData::Rat(b)) => {
                MatData::Rat(a.iter().zip(b).map(|(x, y)| x + y).collect())
            }
            _ => unreachable!(),
        };
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Matrix {
        let data = match &self.data {
            MatData::Fin(a) => MatData::Fin(a.iter().map(|&x| self.field.rneg(x)).collect()),
            MatData::Rat(a) => MatData::Rat(a.iter().map(|x| -x).collect()),
        };
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        assert!(c.field() == &self.field, "field mismatch in scale");
        let data = match (&self.data, c.value()) {
            (MatData::Fin(a), Value::Fin(s)) => {
                let row = self.field.mul_row(*s);
                MatData::Fin(a.iter().map(|&x| row[x as usize]).collect())
            }
            (MatData::Rat(a), Value::Rat(s)) => MatData::Rat(a.iter().map(|x| x * s).collect()),
            _ => unreachable!(),
        };
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(&self.field, self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn trace(&self) -> Scalar {
        assert_eq!(self.rows, self.cols, "trace of non-square matrix");
        let mut t = self.field.zero();
        for i in 0..self.rows {
            t = t.add(&self.get(i, i)).unwrap();
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert!(self.field == other.field, "field mismatch in mul");
        assert_eq!(self.cols, other.rows, "shape mismatch in mul");
        match (&self.data, &other.data) {
            (MatData::Rat(_), MatData::Rat(_)) => self.mul_rat(other),
            (MatData::Fin(_), MatData::Fin(_)) => match self.field.kind() {
                FieldKind::Finite { p: 2, e, .. } if *e >= 1 => self.mul_packed2(other),
                FieldKind::Finite { e: 1, .. } => self.mul_int(other),
                _ => self.mul_table(other),
            },
            _ => unreachable!(),
        }
    }

    fn mul_rat(&self, other: &Matrix) -> Matrix {
        let a = self.rat();
        let b = other.rat();
        let (n, k, m) = (self.rows, self.cols, other.cols);
        let mut out = vec![BigRational::zero(); n * m];
        for i in 0..n {
            for l in 0..k {
                let ail = &a[i * k + l];
                if ail.is_zero() {
                    continue;
                }
                for j in 0..m {
                    let b_lj = &b[l * m + j];
                    if !b_lj.is_zero() {
                        out[i * m + j] += ail * b_lj;
                    }
                }
            }
        }
        Matrix { field: self.field.clone(), rows: n, cols: m, data: MatData::Rat(out) }
    }

    /// Odd prime fields: accumulate as integers, reduce once per entry.
    fn mul_int(&self, other: &Matrix) -> Matrix {
        let p = self.field.characteristic() as u64;
        let a = self.fin();
        let b = other.fin();
        let (n, k, m) = (self.rows, self.cols, other.cols);
        let mut out = vec![0u8; n * m];
        let mut acc = vec![0u64; m];
        for i in 0..n {
            acc.iter_mut().for_each(|x| *x = 0);
            for l in 0..k {
                let ail = a[i * k + l] as u64;
                if ail == 0 {
                    continue;
                }
                let brow = &b[l * m..(l + 1) * m];
                for (accj, &blj) in acc.iter_mut().zip(brow) {
                    *accj += ail * blj as u64;
                }
            }
            for j in 0..m {
                out[i * m + j] = (acc[j] % p) as u8;
            }
        }
        Matrix { field: self.field.clone(), rows: n, cols: m, data: MatData::Fin(out) }
    }

    /// Odd extension fields (small sizes only): table-driven triple loop.
    fn mul_table(&self, other: &Matrix) -> Matrix {
        let a = self.fin();
        let b = other.fin();
        let (n, k, m) = (self.rows, self.cols, other.cols);
        let mut out = vec![0u8; n * m];
        for i in 0..n {
            for l in 0..k {
                let ail = a[i * k + l];
                if ail == 0 {
                    continue;
                }
                let row = self.field.mul_row(ail);
                for j in 0..m {
                    let prod = row[b[l * m + j] as usize];
                    out[i * m + j] = self.field.radd(out[i * m + j], prod);
                }
            }
        }
        Matrix { field: self.field.clone(), rows: n, cols: m, data: MatData::Fin(out) }
    }

    /// Characteristic 2: e² bit-packed GF(2) products plus a plane reduction.
    fn mul_packed2(&self, other: &Matrix) -> Matrix {
        let e = match self.field.kind() {
            FieldKind::Finite { e, .. } => *e as usize,
            _ => unreachable!(),
        };
        let (n, k, m) = (self.rows, self.cols, other.cols);
        let a_planes = planes_from_bytes(self.fin(), n, k, e);
        let b_planes = planes_from_bytes(other.fin(), k, m, e);
        let wk = words(k);
        let wm = words(m);
        // d[u] = Σ_{s+t=u} A_s · B_t over GF(2)
        let mut d = vec![vec![0u64; n * wm]; 2 * e - 1];
        for s in 0..e {
            for t in 0..e {
                let du = &mut d[s + t];
                let asp = &a_planes[s];
                let btp = &b_planes[t];
                for i in 0..n {
                    let arow = &asp[i * wk..(i + 1) * wk];
                    let drow = &mut du[i * wm..(i + 1) * wm];
                    for (wi, &word) in arow.iter().enumerate() {
                        let mut bits = word;
                        while bits != 0 {
                            let l = wi * 64 + bits.trailing_zeros() as usize;
                            bits &= bits - 1;
                            let brow = &btp[l * wm..(l + 1) * wm];
                            for (dj, &bj) in drow.iter_mut().zip(brow) {
                                *dj ^= bj;
                            }
                        }
                    }
                }
            }
        }
        // reduce x^u mod the field modulus and fold into e output planes
        let mut c_planes = vec![vec![0u64; n * wm]; e];
        let x = if e == 1 { 1u8 } else { 2u8 }; // index of x (p=2)
        let mut xu = 1u8; // x^0
        for (u, du) in d.iter().enumerate() {
            if u > 0 {
                xu = self.field.rmul(xu, x);
            }
            for r in 0..e {
                if xu >> r & 1 == 1 {
                    for (cw, &dw) in c_planes[r].iter_mut().zip(du) {
                        *cw ^= dw;
                    }
                }
            }
        }
        let out = bytes_from_planes(&c_planes, n, m, e);
        Matrix { field: self.field.clone(), rows: n, cols: m, data: MatData::Fin(out) }
    }

    pub fn kron(&self, other: &Matrix) -> Matrix {
        assert!(self.field == other.field, "field mismatch in kron");
        let (r1, c1, r2, c2) = (self.rows, self.cols, other.rows, other.cols);
        match (&self.data, &other.data) {
            (MatData::Fin(a), MatData::Fin(b)) => {
                let mut out = vec![0u8; r1 * r2 * c1 * c2];
                let cols = c1 * c2;
                for i1 in 0..r1 {
                    for j1 in 0..c1 {
                        let aij = a[i1 * c1 + j1];
                        if aij == 0 {
                            continue;
                        }
                        let row = self.field.mul_row(aij);
                        for i2 in 0..r2 {
                            for j2 in 0..c2 {
                                out[(i1 * r2 + i2) * cols + j1 * c2 + j2] =
                                    row[b[i2 * c2 + j2] as usize];
                            }
                        }
                    }
                }
                Matrix {
                    field: self.field.clone(),
                    rows: r1 * r2,
                    cols,
                    data: MatData::Fin(out),
                }
            }
            (MatData::Rat(a), MatData::Rat(b)) => {
                let cols = c1 * c2;
                let mut out = vec![BigRational::zero(); r1 * r2 * cols];
                for i1 in 0..r1 {
                    for j1 in 0..c1 {
                        let aij = &a[i1 * c1 + j1];
                        if aij.is_zero() {
                            continue;
                        }
                        for i2 in 0..r2 {
                            for j2 in 0..c2 {
                                out[(i1 * r2 + i2) * cols + j1 * c2 + j2] =
                                    aij * &b[i2 * c2 + j2];
                            }
                        }
                    }
                }
                Matrix {
                    field: self.field.clone(),
                    rows: r1 * r2,
                    cols,
                    data: MatData::Rat(out),
                }
            }
            _ => unreachable!(),
        }
    }

    /// f^n by repeated squaring (square matrices).
    pub fn pow(&self, mut n: u64) -> Matrix {
        assert_eq!(self.rows, self.cols, "pow of non-square matrix");
        let mut acc = Matrix::identity(&self.field, self.rows);
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    // ----- elimination -----

    /// Reduced row echelon form. Returns the nonzero rows and the pivot
    /// column indices; output is the canonical basis of the row space.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        match &self.data {
            MatData::Rat(_) => self.rref_rat(),
            MatData::Fin(_) => match self.field.kind() {
                FieldKind::Finite { p: 2, .. } => self.rref_packed2(),
                _ => self.rref_u8(),
            },
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    fn rref_rat(&self) -> (Matrix, Vec<usize>) {
        let mut rows: Vec<Vec<BigRational>> = (0..self.rows)
            .map(|i| self.rat()[i * self.cols..(i + 1) * self.cols].to_vec())
            .collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..self.cols {
            let Some(pr) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
                continue;
            };
            rows.swap(r, pr);
            let inv = rows[r][col].recip();
            for x in rows[r].iter_mut() {
                *x *= &inv;
            }
            for i in 0..rows.len() {
                if i != r && !rows[i][col].is_zero() {
                    let c = rows[i][col].clone();
                    for j in col..self.cols {
                        let t = &rows[r][j] * &c;
                        rows[i][j] -= t;
                    }
                }
            }
            pivots.push(col);
            r += 1;
            if r == rows.len() {
                break;
            }
        }
        let flat: Vec<BigRational> = rows[..r].concat();
        (
            Matrix { field: self.field.clone(), rows: r, cols: self.cols, data: MatData::Rat(flat) },
            pivots,
        )
    }

    fn rref_u8(&self) -> (Matrix, Vec<usize>) {
        let f = &self.field;
        let cols = self.cols;
        let mut rows: Vec<Vec<u8>> = (0..self.rows)
            .map(|i| self.fin()[i * cols..(i + 1) * cols].to_vec())
            .collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..cols {
            let Some(pr) = (r..rows.len()).find(|&i| rows[i][col] != 0) else {
                continue;
            };
            rows.swap(r, pr);
            let inv = f.rinv(rows[r][col]).unwrap();
            if inv != 1 {
                let mr = f.mul_row(inv);
                for x in rows[r][col..].iter_mut() {
                    *x = mr[*x as usize];
                }
            }
            let (head, tail) = rows.split_at_mut(r);
            let (prow_slice, rest) = tail.split_at_mut(1);
            let prow = &prow_slice[0];
            for row in head.iter_mut().chain(rest.iter_mut()) {
                let c = row[col];
                if c != 0 {
                    let mr = f.mul_row(c);
                    for (x, &pv) in row[col..].iter_mut().zip(&prow[col..]) {
                        *x = f.rsub(*x, mr[pv as usize]);
                    }
                }
            }
            pivots.push(col);
            r += 1;
            if r == rows.len() {
                break;
            }
        }
        let flat: Vec<u8> = rows[..r].concat();
        (
            Matrix { field: self.field.clone(), rows: r, cols, data: MatData::Fin(flat) },
            pivots,
        )
    }

    fn rref_packed2(&self) -> (Matrix, Vec<usize>) {
        let e = match self.field.kind() {
            FieldKind::Finite { e, .. } => *e as usize,
            _ => unreachable!(),
        };
        let (n, m) = (self.rows, self.cols);
        let w = words(m);
        // row i occupies e plane slices of w words each
        let mut planes = vec![0u64; n * e * w];
        {
            let bytes = self.fin();
            for i in 0..n {
                for j in 0..m {
                    let v = bytes[i * m + j];
                    for s in 0..e {
                        if v >> s & 1 == 1 {
                            planes[(i * e + s) * w + j / 64] |= 1 << (j % 64);
                        }
                    }
                }
            }
        }
        let get = |planes: &[u64], i: usize, j: usize| -> u8 {
            let mut v = 0u8;
            for s in 0..e {
                if planes[(i * e + s) * w + j / 64] >> (j % 64) & 1 == 1 {
                    v |= 1 << s;
                }
            }
            v
        };
        let mut pivots = Vec::new();
        let mut r = 0;
        let mut tmp = vec![0u64; e * w];
        for col in 0..m {
            let Some(pr) = (r..n).find(|&i| get(&planes, i, col) != 0) else {
                continue;
            };
            if pr != r {
                for s in 0..e * w {
                    planes.swap(r * e * w + s, pr * e * w + s);
                }
            }
            let pv = get(&planes, r, col);
            if pv != 1 {
                scale_row_packed(&mut planes, r, self.field.rinv(pv).unwrap(), e, w, &self.field, &mut tmp);
            }
            for i in 0..n {
                if i == r {
                    continue;
                }
                let c = get(&planes, i, col);
                if c != 0 {
                    axpy_row_packed(&mut planes, i, r, c, e, w, &self.field);
                }
            }
            pivots.push(col);
            r += 1;
            if r == n {
                break;
            }
        }
        // convert the r pivot rows back to bytes
        let mut flat = vec![0u8; r * m];
        for i in 0..r {
            for j in 0..m {
                flat[i * m + j] = get(&planes, i, j);
            }
        }
        (
            Matrix { field: self.field.clone(), rows: r, cols: m, data: MatData::Fin(flat) },
            pivots,
        )
    }

    /// Basis of the right null space, returned as the columns of an n×k
    /// matrix (k = nullity), in the canonical free-column order.
    pub fn kernel_basis(&self) -> Matrix {
        let (red, pivots) = self.rref();
        let n = self.cols;
        let free: Vec<usize> = (0..n).filter(|j| !pivots.contains(j)).collect();
        let mut out = Matrix::zeros(&self.field, n, free.len());
        let one = self.field.one();
        for (k, &fj) in free.iter().enumerate() {
            out.set(fj, k, &one);
            for (ri, &pj) in pivots.iter().enumerate() {
                let v = red.get(ri, fj).neg();
                if !v.is_zero() {
                    out.set(pj, k, &v);
                }
            }
        }
        out
    }

    /// Basis of the column space: the columns of `self` at the pivot columns
    /// of its echelon form.
    pub fn column_space(&self) -> Matrix {
        let (_, pivots) = self.rref();
        if pivots.is_empty() {
            return Matrix::zeros(&self.field, self.rows, 0);
        }
        let cols: Vec<Matrix> = pivots.iter().map(|&j| self.col(j)).collect();
        Matrix::hstack(&cols)
    }

    /// Solve AX = B exactly. Returns the particular solution with all free
    /// variables zero, or None when inconsistent.
    pub fn solve(&self, b: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, b.rows, "solve: row mismatch");
        let aug = Matrix::hstack(&[self.clone(), b.clone()]);
        let (red, pivots) = aug.rref();
        let n = self.cols;
        if pivots.iter().any(|&p| p >= n) {
            return None; // pivot in the RHS block: inconsistent
        }
        let mut x = Matrix::zeros(&self.field, n, b.cols);
        for (ri, &pj) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                let v = red.get(ri, n + j);
                if !v.is_zero() {
                    x.set(pj, j, &v);
                }
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols, "inverse of non-square matrix");
        let x = self.solve(&Matrix::identity(&self.field, self.rows))?;
        if self.mul(&x).is_identity() {
            Some(x)
        } else {
            None
        }
    }

    // ----- characteristic polynomial (fraction-free Bareiss on xI − A) -----

    /// Coefficients of det(xI − A), ascending; always monic of degree n.
    /// Valid in any characteristic (no divisions by field constants beyond
    /// Bareiss' exact polynomial divisions).
    pub fn char_poly(&self) -> Vec<Scalar> {
        assert_eq!(self.rows, self.cols, "char_poly of non-square matrix");
        let n = self.rows;
        let f = &self.field;
        if n == 0 {
            return vec![f.one()];
        }
        // xI − A as a matrix of polynomials (ascending coefficient vectors)
        let mut m: Vec<Vec<Poly>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let a = self.get(i, j).neg();
                        if i == j {
                            Poly(vec![a, f.one()])
                        } else {
                            Poly(vec![a])
                        }
                    })
                    .collect()
            })
            .collect();
        let mut prev = Poly(vec![f.one()]);
        for k in 0..n - 1 {
            // Bareiss pivot: the (k,k) entry is ± the char poly of a leading
            // submatrix, hence monic of degree k+1 and never zero.
            let pivot = m[k][k].clone();
            for i in k + 1..n {
                for j in k + 1..n {
                    let t1 = m[i][j].mul(&pivot, f);
                    let t2 = m[i][k].mul(&m[k][j], f);
                    m[i][j] = t1.sub(&t2, f).div_exact(&prev, f);
                }
                m[i][k] = Poly(vec![f.zero()]);
            }
            prev = pivot;
        }
        let mut cp = m[n - 1][n - 1].0.clone();
        cp.resize(n + 1, f.zero());
        cp
    }

    /// Determinant, via the constant term of the characteristic polynomial.
    pub fn det(&self) -> Scalar {
        let cp = self.char_poly();
        let c0 = cp[0].clone();
        if self.rows % 2 == 0 {
            c0
        } else {
            c0.neg()
        }
    }

    /// Fitting decomposition of an endomorphism: bases (as column blocks) of
    /// ker(f^N) and im(f^N) for N = dim rounded up to a power of two; the two
    /// blocks are always complementary f-invariant subspaces.
    pub fn fitting_split(&self) -> (Matrix, Matrix) {
        assert_eq!(self.rows, self.cols, "fitting_split of non-square matrix");
        let n = self.rows as u64;
        let fn_ = self.pow(n.next_power_of_two());
        (fn_.kernel_basis(), fn_.column_space())
    }
}

// ----- bit-packing helpers (characteristic 2) -----

fn words(cols: usize) -> usize {
    cols.div_ceil(64)
}

/// Split a byte matrix into e GF(2) coefficient planes, each row-major packed.
fn planes_from_bytes(bytes: &[u8], rows: usize, cols: usize, e: usize) -> Vec<Vec<u64>> {
    let w = words(cols);
    let mut planes = vec![vec![0u64; rows * w]; e];
    for i in 0..rows {
        for j in 0..cols {
            let v = bytes[i * cols + j];
            if v == 0 {
                continue;
            }
            for (s, plane) in planes.iter_mut().enumerate() {
                if v >> s & 1 == 1 {
                    plane[i * w + j / 64] |= 1 << (j % 64);
                }
            }
        }
    }
    planes
}

fn bytes_from_planes(planes: &[Vec<u64>], rows: usize, cols: usize, e: usize) -> Vec<u8> {
    let w = words(cols);
    let mut bytes = vec![0u8; rows * cols];
    for (s, plane) in planes.iter().enumerate().take(e) {
        for i in 0..rows {
            for j in 0..cols {
                if plane[i * w + j / 64] >> (j % 64) & 1 == 1 {
                    bytes[i * cols + j] |= 1 << s;
                }
            }
        }
    }
    bytes
}

/// row_i ← row_i + c·row_src on the interleaved plane layout.
fn axpy_row_packed(
    planes: &mut [u64],
    dst: usize,
    src: usize,
    c: u8,
    e: usize,
    w: usize,
    field: &FieldSpec,
) {
    let bits = field.mul_bit_matrix(c);
    // dst and src are distinct rows, so disjoint slices
    let (lo, hi) = if dst < src { (dst, src) } else { (src, dst) };
    let (a, b) = planes.split_at_mut(hi * e * w);
    let (low_row, high_row) = (&mut a[lo * e * w..lo * e * w + e * w], &mut b[..e * w]);
    let (drow, srow): (&mut [u64], &[u64]) = if dst < src {
        (low_row, high_row)
    } else {
        (high_row, low_row)
    };
    for (r, &mask) in bits.iter().enumerate() {
        for s in 0..e {
            if mask >> s & 1 == 1 {
                let (dr, sr) = (&mut drow[r * w..(r + 1) * w], &srow[s * w..(s + 1) * w]);
                for (d, &x) in dr.iter_mut().zip(sr) {
                    *d ^= x;
                }
            }
        }
    }
}

/// row_i ← c·row_i.
fn scale_row_packed(
    planes: &mut [u64],
    row: usize,
    c: u8,
    e: usize,
    w: usize,
    field: &FieldSpec,
    tmp: &mut [u64],
) {
    let bits = field.mul_bit_matrix(c);
    let slice = &mut planes[row * e * w..(row + 1) * e * w];
    tmp[..e * w].copy_from_slice(slice);
    for (r, &mask) in bits.iter().enumerate() {
        let dr = &mut slice[r * w..(r + 1) * w];
        dr.iter_mut().for_each(|x| *x = 0);
        for s in 0..e {
            if mask >> s & 1 == 1 {
                for (d, &x) in dr.iter_mut().zip(&tmp[s * w..(s + 1) * w]) {
                    *d ^= x;
                }
            }
        }
    }
}

// ----- small dense polynomials over the field (char_poly only) -----

#[derive(Clone)]
struct Poly(Vec<Scalar>);

impl Poly {
    fn trim(mut self) -> Poly {
        while self.0.len() > 1 && self.0.last().unwrap().is_zero() {
            self.0.pop();
        }
        self
    }
    fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }
    fn mul(&self, other: &Poly, f: &FieldSpec) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly(vec![f.zero()]);
        }
        let mut out = vec![f.zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b).unwrap()).unwrap();
            }
        }
        Poly(out).trim()
    }
    fn sub(&self, other: &Poly, f: &FieldSpec) -> Poly {
        let n = self.0.len().max(other.0.len());
        let z = f.zero();
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.0.get(i).unwrap_or(&z);
            let b = other.0.get(i).unwrap_or(&z);
            out.push(a.sub(b).unwrap());
        }
        Poly(out).trim()
    }
    /// Exact division (panics if the remainder is nonzero — Bareiss guarantees
    /// divisibility).
    fn div_exact(&self, d: &Poly, f: &FieldSpec) -> Poly {
        let d = d.clone().trim();
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut rem = self.clone().trim().0;
        let dd = d.0.len() - 1;
        let dl = d.0.last().unwrap().clone();
        if rem.len() < d.0.len() {
            assert!(Poly(rem.clone()).is_zero(), "inexact polynomial division");
            return Poly(vec![f.zero()]);
        }
        let qd = rem.len() - d.0.len();
        let mut q = vec![f.zero(); qd + 1];
        for k in (0..=qd).rev() {
            let lead = rem[k + dd].clone();
            if lead.is_zero() {
                continue;
            }
            let c = lead.div(&dl).unwrap();
            q[k] = c.clone();
            for (i, di) in d.0.iter().enumerate() {
                rem[k + i] = rem[k + i].sub(&c.mul(di).unwrap()).unwrap();
            }
        }
        assert!(rem.iter().all(|c| c.is_zero()), "inexact polynomial division");
        Poly(q).trim()
    }
}
