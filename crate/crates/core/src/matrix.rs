//! Dense arbitrary-precision integer matrices and polynomials.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    n_rows: usize,
    n_cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(n_rows: usize, n_cols: usize) -> Self {
        IntMatrix { n_rows, n_cols, data: vec![BigInt::zero(); n_rows * n_cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut m = Self::zeros(n_rows, n_cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.as_ref().len(), n_cols, "ragged rows");
            for (j, &x) in r.as_ref().iter().enumerate() {
                m[(i, j)] = BigInt::from(x);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.n_rows
    }

    pub fn cols(&self) -> usize {
        self.n_cols
    }

    pub fn is_square(&self) -> bool {
        self.n_rows == self.n_cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.n_cols..(i + 1) * self.n_cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.n_rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Entries as `i64`, if they all fit.
    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.n_rows)
            .map(|i| self.row(i).iter().map(|x| i64::try_from(x).ok()).collect())
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.n_cols, self.n_rows);
        for i in 0..self.n_rows {
            for j in 0..self.n_cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn trace(&self) -> BigInt {
        (0..self.n_rows.min(self.n_cols)).map(|i| &self[(i, i)]).sum()
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.n_rows).all(|i| {
                (0..self.n_cols).all(|j| if i == j { self[(i, j)].is_one() } else { self[(i, j)].is_zero() })
            })
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        IntMatrix { n_rows: self.n_rows, n_cols: self.n_cols, data: self.data.iter().map(|x| x * c).collect() }
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.n_cols);
        (0..self.n_rows).map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum()).collect()
    }

    pub fn pow(&self, mut k: u64) -> Self {
        assert!(self.is_square());
        let mut acc = Self::identity(self.n_rows);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }

    /// `P^T M P` for the permutation `perm` sending new index `i` to old index `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert!(self.is_square() && perm.len() == self.n_rows);
        let mut out = Self::zeros(self.n_rows, self.n_cols);
        for i in 0..self.n_rows {
            for j in 0..self.n_cols {
                out[(i, j)] = self[(perm[i], perm[j])].clone();
            }
        }
        out
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.n_rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.to_rows();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(p) => {
                        a.swap(k, p);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                    a[i][j] = v;
                }
            }
            prev = a[k][k].clone();
        }
        sign * &a[n - 1][n - 1]
    }

    /// Rank over the rationals, by fraction-free elimination.
    pub fn rank(&self) -> usize {
        let mut a = self.to_rows();
        let (m, n) = (self.n_rows, self.n_cols);
        let mut rank = 0;
        let mut prev = BigInt::one();
        for col in 0..n {
            if rank == m {
                break;
            }
            let Some(p) = (rank..m).find(|&i| !a[i][col].is_zero()) else {
                continue;
            };
            a.swap(rank, p);
            for i in rank + 1..m {
                for j in col + 1..n {
                    let v = (&a[i][j] * &a[rank][col] - &a[i][col] * &a[rank][j]) / &prev;
                    a[i][j] = v;
                }
                a[i][col] = BigInt::zero();
            }
            prev = a[rank][col].clone();
            rank += 1;
        }
        rank
    }

    pub fn is_lower_unitriangular(&self) -> bool {
        self.is_square()
            && (0..self.n_rows).all(|i| {
                self[(i, i)].is_one() && (i + 1..self.n_cols).all(|j| self[(i, j)].is_zero())
            })
    }

    /// Inverse of a lower unitriangular matrix, by forward substitution.
    pub fn lower_unitriangular_inverse(&self) -> Option<Self> {
        if !self.is_lower_unitriangular() {
            return None;
        }
        let n = self.n_rows;
        let mut inv = Self::identity(n);
        for j in 0..n {
            for i in j + 1..n {
                let s: BigInt = (j..i).map(|k| &self[(i, k)] * &inv[(k, j)]).sum();
                inv[(i, j)] = -s;
            }
        }
        Some(inv)
    }

    /// Characteristic polynomial `det(tI - M)` by Faddeev-LeVerrier.
    pub fn char_poly(&self) -> IntPoly {
        assert!(self.is_square());
        let n = self.n_rows;
        // coefficients c[k] of t^(n-k), c[0] = 1
        let mut c = vec![BigInt::one()];
        let mut mk = Self::zeros(n, n);
        for k in 1..=n {
            let mut next = self * &mk;
            let last = c[k - 1].clone();
            for i in 0..n {
                next[(i, i)] += &last;
            }
            mk = next;
            let am = self * &mk;
            let ck = -am.trace() / BigInt::from(k);
            c.push(ck);
        }
        c.reverse();
        IntPoly::new(c)
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        assert!(i < self.n_rows && j < self.n_cols, "index out of range");
        &self.data[i * self.n_cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        assert!(i < self.n_rows && j < self.n_cols, "index out of range");
        &mut self.data[i * self.n_cols + j]
    }
}

impl IntMatrix {
    fn to_i64_vec(&self) -> Option<Vec<i64>> {
        self.data.iter().map(|x| i64::try_from(x).ok()).collect()
    }

    /// Product in machine integers; `None` on overflow.
    fn mul_small(&self, rhs: &IntMatrix) -> Option<IntMatrix> {
        let (a, b) = (self.to_i64_vec()?, rhs.to_i64_vec()?);
        let (n, m, p) = (self.n_rows, self.n_cols, rhs.n_cols);
        let mut data = Vec::with_capacity(n * p);
        for i in 0..n {
            for j in 0..p {
                let mut acc: i128 = 0;
                for k in 0..m {
                    acc = acc.checked_add(i128::from(a[i * m + k]) * i128::from(b[k * p + j]))?;
                }
                data.push(BigInt::from(acc));
            }
        }
        Some(IntMatrix { n_rows: n, n_cols: p, data })
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n_cols, rhs.n_rows, "shape mismatch");
        if let Some(out) = self.mul_small(rhs) {
            return out;
        }
        let mut out = IntMatrix::zeros(self.n_rows, rhs.n_cols);
        for i in 0..self.n_rows {
            for k in 0..self.n_cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.n_cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl Add for &IntMatrix {
    type Output = IntMatrix;
    fn add(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!((self.n_rows, self.n_cols), (rhs.n_rows, rhs.n_cols), "shape mismatch");
        IntMatrix {
            n_rows: self.n_rows,
            n_cols: self.n_cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &IntMatrix {
    type Output = IntMatrix;
    fn sub(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!((self.n_rows, self.n_cols), (rhs.n_rows, rhs.n_cols), "shape mismatch");
        IntMatrix {
            n_rows: self.n_rows,
            n_cols: self.n_cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &IntMatrix {
    type Output = IntMatrix;
    fn neg(self) -> IntMatrix {
        IntMatrix { n_rows: self.n_rows, n_cols: self.n_cols, data: self.data.iter().map(|a| -a).collect() }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(|x| x.to_string()).collect();
        let w = cells.iter().map(|c| c.len()).max().unwrap_or(1);
        for i in 0..self.n_rows {
            write!(f, "[")?;
            for j in 0..self.n_cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:>w$}", cells[i * self.n_cols + j])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Integer polynomial, coefficients in ascending degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPoly(Vec<BigInt>);

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly(coeffs)
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            }
            first = false;
            let coef = if mag.is_one() && k > 0 { String::new() } else { mag.to_string() };
            match k {
                0 => write!(f, "{coef}")?,
                1 => write!(f, "{coef}t")?,
                _ => write!(f, "{coef}t^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(rows)
    }

    #[test]
    fn product_past_machine_range() {
        let big = i64::MAX;
        let a = m(&[&[big, big], &[1, 0]]);
        let p = &a * &a;
        let b = BigInt::from(big);
        assert_eq!(p[(0, 0)], &b * &b + &b);
        assert_eq!(p[(1, 1)], b);
        assert_eq!(&(&p * &a) * &a, &p * &p);
    }

    #[test]
    fn det_and_rank() {
        assert_eq!(m(&[&[2, 1], &[7, 4]]).det(), BigInt::from(1));
        assert_eq!(m(&[&[0, 1], &[1, 0]]).det(), BigInt::from(-1));
        assert_eq!(m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]).det(), BigInt::zero());
        assert_eq!(m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]).rank(), 2);
        assert_eq!(m(&[&[0, 0], &[0, 0]]).rank(), 0);
        assert_eq!(m(&[&[0, 3, 1], &[2, 0, 0], &[0, 6, 2]]).rank(), 2);
        assert_eq!(m(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 2]]).det(), BigInt::from(6));
    }

    #[test]
    fn lower_inverse() {
        let s = m(&[&[1, 0, 0], &[-1, 1, 0], &[2, -3, 1]]);
        let inv = s.lower_unitriangular_inverse().unwrap();
        assert!((&s * &inv).is_identity());
        assert!(m(&[&[1, 1], &[0, 1]]).lower_unitriangular_inverse().is_none());
    }

    #[test]
    fn char_poly_a2() {
        let md = m(&[&[0, -1], &[1, 1]]);
        assert_eq!(md.char_poly(), IntPoly::from_i64(&[1, -1, 1]));
        assert_eq!(md.char_poly().to_string(), "t^2 - t + 1");
        assert!(md.pow(6).is_identity());
        assert!(!md.pow(3).is_identity());
    }

    #[test]
    fn char_poly_constant_term_is_signed_det() {
        let a = m(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 1]]);
        let p = a.char_poly();
        assert_eq!(p.coeffs()[0], -a.det());
        assert_eq!(p.coeffs()[2], -a.trace());
    }

    #[test]
    fn poly_display() {
        assert_eq!(IntPoly::from_i64(&[-1, 1]).to_string(), "t - 1");
        assert_eq!(IntPoly::from_i64(&[1, -1, 0, 1, 0, -1, 1]).to_string(), "t^6 - t^5 + t^3 - t + 1");
        assert_eq!(IntPoly::from_i64(&[0]).to_string(), "0");
        assert_eq!(IntPoly::from_i64(&[3, 0, -2]).to_string(), "-2t^2 + 3");
    }
}
