//! Exact linear algebra: rationals, fraction-free determinants and
//! symmetric matrices.

use std::fmt;
use std::ops::{Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Parses `"p/q"`, `"p"` or a terminating decimal such as `"0.44"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Invalid(format!("not a rational number: `{s}`"));
    if let Some((num, den)) = s.split_once('/') {
        let num: BigInt = num.trim().parse().map_err(|_| bad())?;
        let den: BigInt = den.trim().parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(num, den));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        let negative = whole.trim_start().starts_with('-');
        let whole: BigInt = if whole.is_empty() || whole == "-" {
            BigInt::zero()
        } else {
            whole.parse().map_err(|_| bad())?
        };
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let frac: BigInt = frac.parse().map_err(|_| bad())?;
        let mut num = whole.abs() * &scale + frac;
        if negative {
            num = -num;
        }
        return Ok(Rational::new(num, scale));
    }
    let v: BigInt = s.parse().map_err(|_| bad())?;
    Ok(Rational::from_integer(v))
}

pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Commutative ring with exact division, as needed by Bareiss elimination.
pub trait ExactRing: Clone + Zero + One + PartialEq + for<'a> Mul<&'a Self, Output = Self> {
    fn sub_ref(&self, other: &Self) -> Self;
    /// `self / divisor`, where the division is known to be exact.
    fn div_exact(&self, divisor: &Self) -> Self;
    fn neg_ref(&self) -> Self;
}

impl ExactRing for BigInt {
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn div_exact(&self, divisor: &Self) -> Self {
        debug_assert!((self % divisor).is_zero());
        self / divisor
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

impl ExactRing for i128 {
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn div_exact(&self, divisor: &Self) -> Self {
        debug_assert_eq!(self % divisor, 0);
        self / divisor
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

/// Determinant by Bareiss fraction-free elimination; consumes the matrix.
pub fn bareiss_det<R: ExactRing>(mut m: Vec<Vec<R>>) -> R {
    let k = m.len();
    if k == 0 {
        return R::one();
    }
    let mut sign_flip = false;
    let mut prev = R::one();
    for col in 0..k {
        if m[col][col].is_zero() {
            match (col + 1..k).find(|&r| !m[r][col].is_zero()) {
                Some(r) => {
                    m.swap(col, r);
                    sign_flip = !sign_flip;
                }
                None => return R::zero(),
            }
        }
        for r in col + 1..k {
            for c in col + 1..k {
                let lhs = m[r][c].clone() * &m[col][col];
                let rhs = m[r][col].clone() * &m[col][c];
                m[r][c] = lhs.sub_ref(&rhs).div_exact(&prev);
            }
        }
        prev = m[col][col].clone();
    }
    let det = m[k - 1][k - 1].clone();
    if sign_flip {
        det.neg_ref()
    } else {
        det
    }
}

/// Determinant of a rational matrix: rows are scaled to integers, then
/// eliminated fraction-free.
pub fn det_rational(rows: &[Vec<Rational>]) -> Rational {
    let mut scale = BigInt::one();
    let int_rows: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            scale *= &l;
            row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect();
    Rational::new(bareiss_det(int_rows), scale)
}

/// Dense symmetric matrix over the rationals, indexed from zero.
#[derive(Clone, PartialEq, Eq)]
pub struct SymmetricMatrix {
    n: usize,
    entries: Vec<Rational>,
}

impl SymmetricMatrix {
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        for row in &rows {
            if row.len() != n {
                return Err(Error::Dimension { expected: n, found: row.len() });
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if rows[i][j] != rows[j][i] {
                    return Err(Error::NotSymmetric(i + 1, j + 1));
                }
            }
        }
        Ok(Self { n, entries: rows.into_iter().flatten().collect() })
    }

    /// Builds a matrix from its diagonal and its strict upper triangle listed
    /// row by row: `(σ12, σ13, …, σ1n, σ23, …)`.
    pub fn from_diag_upper(diag: Vec<Rational>, upper: Vec<Rational>) -> Result<Self> {
        let n = diag.len();
        let expected = n * (n - 1) / 2;
        if upper.len() != expected {
            return Err(Error::Dimension { expected, found: upper.len() });
        }
        let mut m = Self::zeros(n);
        for (i, d) in diag.into_iter().enumerate() {
            m.set(i, i, d);
        }
        let mut it = upper.into_iter();
        for i in 0..n {
            for j in i + 1..n {
                m.set(i, j, it.next().expect("length checked"));
            }
        }
        Ok(m)
    }

    pub fn zeros(n: usize) -> Self {
        Self { n, entries: vec![Rational::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.n + j]
    }

    /// Sets entries `(i,j)` and `(j,i)`.
    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.entries[j * self.n + i] = v.clone();
        self.entries[i * self.n + j] = v;
    }

    /// Determinant of the submatrix with the given row and column indices,
    /// in the given order.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Rational {
        debug_assert_eq!(rows.len(), cols.len());
        let sub: Vec<Vec<Rational>> = rows
            .iter()
            .map(|&r| cols.iter().map(|&c| self.get(r, c).clone()).collect())
            .collect();
        det_rational(&sub)
    }

    pub fn det(&self) -> Rational {
        let idx: Vec<usize> = (0..self.n).collect();
        self.minor(&idx, &idx)
    }

    /// Inverse by Gauss–Jordan elimination; `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.n;
        let mut a: Vec<Vec<Rational>> =
            (0..n).map(|i| (0..n).map(|j| self.get(i, j).clone()).collect()).collect();
        let mut inv = Self::identity(n).to_rows();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let p = a[col][col].clone();
            for c in 0..n {
                a[col][c] = &a[col][c] / &p;
                inv[col][c] = &inv[col][c] / &p;
            }
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for c in 0..n {
                        let t = &f * &a[col][c];
                        a[r][c] = &a[r][c] - t;
                        let t = &f * &inv[col][c];
                        inv[r][c] = &inv[r][c] - t;
                    }
                }
            }
        }
        // Symmetric input has a symmetric inverse.
        Some(Self { n, entries: inv.into_iter().flatten().collect() })
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.get(i, j).clone()).collect()).collect()
    }

    /// `D Σ D` for the diagonal sign matrix with `-1` on `flipped`.
    pub fn sign_conjugate(&self, flipped: &[bool]) -> Self {
        let mut out = self.clone();
        for i in 0..self.n {
            for j in 0..self.n {
                if flipped[i] != flipped[j] {
                    out.entries[i * self.n + j] = -self.get(i, j).clone();
                }
            }
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self { n: self.n, entries: self.entries.iter().map(|x| -x.clone()).collect() }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self { n: self.n, entries: self.entries.iter().map(|x| x * s).collect() }
    }

    pub fn to_json(&self) -> MatrixJson {
        MatrixJson {
            n: self.n,
            entries: (0..self.n)
                .map(|i| (0..self.n).map(|j| format_rational(self.get(i, j))).collect())
                .collect(),
        }
    }

    pub fn from_json(json: &MatrixJson) -> Result<Self> {
        if json.entries.len() != json.n {
            return Err(Error::Dimension { expected: json.n, found: json.entries.len() });
        }
        let rows = json
            .entries
            .iter()
            .map(|row| row.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(rows)
    }
}

impl fmt::Debug for SymmetricMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.n {
            if i > 0 {
                f.write_str("; ")?;
            }
            let row: Vec<String> = (0..self.n).map(|j| format_rational(self.get(i, j))).collect();
            f.write_str(&row.join(", "))?;
        }
        f.write_str("]")
    }
}

/// JSON form `{ "n": 3, "entries": [["1","1/2",...], ...] }`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixJson {
    pub n: usize,
    pub entries: Vec<Vec<String>>,
}

impl Sub for &SymmetricMatrix {
    type Output = SymmetricMatrix;
    fn sub(self, rhs: Self) -> SymmetricMatrix {
        SymmetricMatrix {
            n: self.n,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    // Leibniz expansion, used only as an oracle.
    fn det_leibniz(a: &[Vec<Rational>]) -> Rational {
        fn perms(k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(k - 1) {
                for pos in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(pos, k - 1);
                    out.push(q);
                }
            }
            out
        }
        let k = a.len();
        let mut total = Rational::zero();
        for p in perms(k) {
            let mut inversions = 0;
            for x in 0..k {
                for y in x + 1..k {
                    if p[x] > p[y] {
                        inversions += 1;
                    }
                }
            }
            let mut term = Rational::one();
            for (r, &c) in p.iter().enumerate() {
                term *= &a[r][c];
            }
            if inversions % 2 == 1 {
                term = -term;
            }
            total += term;
        }
        total
    }

    #[test]
    fn bareiss_matches_leibniz() {
        let cases = [
            m(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]]),
            m(&[&[0, 1, 2], &[1, 0, 3], &[4, -3, 8]]),
            m(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 0, 1], &[3, 1, 4, 1]]),
            m(&[&[0, 0, 1, 0], &[0, 2, 0, 0], &[5, 0, 0, 0], &[0, 0, 0, 7]]),
        ];
        for a in cases {
            assert_eq!(det_rational(&a), det_leibniz(&a));
        }
        let frac = vec![vec![rat(1, 2), rat(1, 3)], vec![rat(1, 3), rat(1, 4)]];
        assert_eq!(det_rational(&frac), rat(1, 8) - rat(1, 9));
    }

    #[test]
    fn inverse_roundtrip() {
        let s = SymmetricMatrix::from_rows(m(&[&[2, 0, -1], &[0, 2, -1], &[-1, -1, 2]])).unwrap();
        let inv = s.inverse().unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = Rational::zero();
                for k in 0..3 {
                    acc += s.get(i, k) * inv.get(k, j);
                }
                assert_eq!(acc, if i == j { int(1) } else { int(0) });
            }
        }
        assert!(SymmetricMatrix::from_rows(m(&[&[1, 1], &[1, 1]])).unwrap().inverse().is_none());
    }

    #[test]
    fn asymmetric_rejected() {
        let err = SymmetricMatrix::from_rows(m(&[&[1, 2], &[3, 1]])).unwrap_err();
        assert!(matches!(err, Error::NotSymmetric(1, 2)));
    }

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("-1/128").unwrap(), rat(-1, 128));
        assert_eq!(parse_rational("0.44").unwrap(), rat(11, 25));
        assert_eq!(parse_rational("-0.5").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational("7").unwrap(), int(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
