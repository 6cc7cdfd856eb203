//! Polynomials in `ε` over ℚ and symmetric matrices with such entries.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{bareiss_det, format_rational, parse_rational, ExactRing, Rational};

/// `Σ c_k ε^k` with finitely many nonzero `c_k`; normalized (no trailing zeros).
#[derive(Clone, PartialEq, Eq, Default)]
pub struct EpsPolynomial {
    coeffs: Vec<Rational>,
}

impl EpsPolynomial {
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c ε^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Least exponent with a nonzero coefficient; `None` for the zero polynomial.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Coefficient of the lowest-order term.
    pub fn leading_low(&self) -> Option<&Rational> {
        self.valuation().map(|v| &self.coeffs[v])
    }

    /// Quotient and remainder by polynomial long division.
    pub fn div_rem(&self, d: &EpsPolynomial) -> (EpsPolynomial, EpsPolynomial) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead = &d.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let qlen = (self.coeffs.len() + 1).saturating_sub(dd + 1);
        let mut q = vec![Rational::zero(); qlen];
        for i in (0..qlen).rev() {
            let c = &rem[i + dd] / lead;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i + j] -= &c * dc;
            }
            q[i] = c;
        }
        (Self::from_coeffs(q), Self::from_coeffs(rem))
    }

    /// Parses sums of terms `c`, `c*e^k`, `e^k`, `e`, e.g. `1 - e^7` or `-3/2*e^2`.
    pub fn parse(s: &str) -> Result<Self> {
        let bad = |why: &str| Error::Invalid(format!("bad ε-polynomial {s:?}: {why}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad("empty"));
        }
        let mut terms = Vec::new();
        let mut start = 0;
        for (i, ch) in compact.char_indices() {
            if (ch == '+' || ch == '-') && i > start {
                terms.push(&compact[start..i]);
                start = i;
            }
        }
        terms.push(&compact[start..]);
        let mut acc = EpsPolynomial::zero();
        for term in terms {
            let (neg, body) = match term.as_bytes().first() {
                Some(b'-') => (true, &term[1..]),
                Some(b'+') => (false, &term[1..]),
                _ => (false, term),
            };
            if body.is_empty() {
                return Err(bad("dangling sign"));
            }
            let (coef, power) = match body.find('e') {
                None => (parse_rational(body)?, 0),
                Some(pos) => {
                    let coef = match body[..pos].strip_suffix('*') {
                        Some(c) => parse_rational(c)?,
                        None if pos == 0 => Rational::one(),
                        None => return Err(bad("expected '*' before e")),
                    };
                    let power = match &body[pos + 1..] {
                        "" => 1,
                        p => p.strip_prefix('^').and_then(|x| x.parse().ok()).ok_or_else(|| bad("bad exponent"))?,
                    };
                    (coef, power)
                }
            };
            let coef = if neg { -coef } else { coef };
            acc = acc + EpsPolynomial::monomial(coef, power);
        }
        Ok(acc)
    }
}

impl Zero for EpsPolynomial {
    fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for EpsPolynomial {
    fn one() -> Self {
        Self::constant(Rational::one())
    }
}

impl Add for EpsPolynomial {
    type Output = EpsPolynomial;
    fn add(self, rhs: Self) -> Self {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let get = |v: &[Rational], i: usize| v.get(i).cloned().unwrap_or_else(Rational::zero);
        Self::from_coeffs((0..len).map(|i| get(&self.coeffs, i) + get(&rhs.coeffs, i)).collect())
    }
}

impl Sub for EpsPolynomial {
    type Output = EpsPolynomial;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for EpsPolynomial {
    type Output = EpsPolynomial;
    fn neg(self) -> Self {
        Self { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl<'a> Mul<&'a EpsPolynomial> for EpsPolynomial {
    type Output = EpsPolynomial;
    fn mul(self, rhs: &'a EpsPolynomial) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::from_coeffs(out)
    }
}

impl Mul for EpsPolynomial {
    type Output = EpsPolynomial;
    fn mul(self, rhs: Self) -> Self {
        self * &rhs
    }
}

impl ExactRing for EpsPolynomial {
    fn sub_ref(&self, other: &Self) -> Self {
        self.clone() - other.clone()
    }
    fn div_exact(&self, divisor: &Self) -> Self {
        let (q, r) = self.div_rem(divisor);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }
    fn neg_ref(&self) -> Self {
        -self.clone()
    }
}

impl fmt::Display for EpsPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else if first { "" } else { "+" };
            if !first {
                f.write_str(" ")?;
            }
            let mag = c.abs();
            let body = match (k, mag.is_one()) {
                (0, _) => format_rational(&mag),
                (_, true) => format!("e^{k}"),
                _ => format!("{}*e^{k}", format_rational(&mag)),
            };
            if first {
                write!(f, "{sign}{body}")?;
            } else {
                write!(f, "{sign} {body}")?;
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for EpsPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Symmetric matrix over ℚ[ε].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EpsMatrix {
    n: usize,
    entries: Vec<Vec<EpsPolynomial>>,
}

impl EpsMatrix {
    pub fn from_rows(rows: Vec<Vec<EpsPolynomial>>) -> Result<Self> {
        let n = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Dimension { expected: n, found: row.len() });
            }
            for j in 0..i {
                if rows[i][j] != rows[j][i] {
                    return Err(Error::NotSymmetric(i + 1, j + 1));
                }
            }
        }
        Ok(Self { n, entries: rows })
    }

    /// Rows of `±c*e^k` sums.
    pub fn parse_rows(rows: &[Vec<&str>]) -> Result<Self> {
        let parsed =
            rows.iter().map(|r| r.iter().map(|s| EpsPolynomial::parse(s)).collect::<Result<Vec<_>>>()).collect::<Result<Vec<_>>>()?;
        Self::from_rows(parsed)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &EpsPolynomial {
        &self.entries[i][j]
    }

    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> EpsPolynomial {
        let m = rows.iter().map(|&r| cols.iter().map(|&c| self.entries[r][c].clone()).collect()).collect();
        bareiss_det(m)
    }

    pub fn det(&self) -> EpsPolynomial {
        let idx: Vec<usize> = (0..self.n).collect();
        self.minor(&idx, &idx)
    }

    /// The adjugate `det(M) · M⁻¹`, which is again symmetric.
    pub fn adjugate(&self) -> EpsMatrix {
        let n = self.n;
        let mut entries = vec![vec![EpsPolynomial::zero(); n]; n];
        for (i, row) in entries.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                let rows: Vec<usize> = (0..n).filter(|&r| r != j).collect();
                let cols: Vec<usize> = (0..n).filter(|&c| c != i).collect();
                let c = self.minor(&rows, &cols);
                *e = if (i + j) % 2 == 1 { -c } else { c };
            }
        }
        EpsMatrix { n, entries }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, rat};

    fn p(s: &str) -> EpsPolynomial {
        EpsPolynomial::parse(s).unwrap()
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(p("1 - e^7").to_string(), "1 - e^7");
        assert_eq!(p("-e^5").valuation(), Some(5));
        assert_eq!(p("3/2*e^2 + e").coeffs(), &[int(0), int(1), rat(3, 2)]);
        assert!(p("e - e").is_zero());
        assert!(EpsPolynomial::parse("2e").is_err());
        assert!(EpsPolynomial::parse("").is_err());
    }

    #[test]
    fn valuation_laws() {
        let f = p("e^2 + 3*e^5");
        let g = p("-e^2 + e^3");
        assert_eq!((f.clone() * &g).valuation(), Some(4));
        assert_eq!((f.clone() + g.clone()).valuation(), Some(3));
        assert!((f.clone() + g.clone()).valuation() >= f.valuation().min(g.valuation()));
        let (q, r) = (f.clone() * &g).div_rem(&g);
        assert_eq!(q, f);
        assert!(r.is_zero());
    }

    #[test]
    fn adjugate_identity() {
        let m = EpsMatrix::parse_rows(&[vec!["1", "-e^7", "-e^5"], vec!["-e^7", "1", "-e^6"], vec!["-e^5", "-e^6", "1"]])
            .unwrap();
        let adj = m.adjugate();
        let det = m.det();
        for i in 0..3 {
            for j in 0..3 {
                let s = (0..3).fold(EpsPolynomial::zero(), |acc, k| acc + m.get(i, k).clone() * adj.get(k, j));
                assert_eq!(s, if i == j { det.clone() } else { EpsPolynomial::zero() });
            }
        }
    }
}
