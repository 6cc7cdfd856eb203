//! Dense exact-rational simplex: `max cᵀx` subject to `Ax ≤ b`, `x ≥ 0`
//! with `b ≥ 0` from the slack basis, and a phase-one feasibility test for
//! `Bx = e`, `x ≥ 0`.
//!
//! Pricing is Dantzig's rule until the objective stalls, then Bland's rule,
//! which keeps degenerate problems finite. The tableau first runs on
//! overflow-checked `i128` fractions and is redone with big rationals if an
//! operation overflows; both paths are exact.

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{CheckedDiv, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};

use crate::linalg::Rational;

type Small = Ratio<i128>;

trait Scalar: Clone + PartialOrd + Zero + One {
    /// `self − f·x`
    fn sub_mul(&self, f: &Self, x: &Self) -> Option<Self>;
    fn div(&self, d: &Self) -> Option<Self>;
    fn positive(&self) -> bool;
    fn negative(&self) -> bool;
    fn neg(&self) -> Self;
}

impl Scalar for Rational {
    fn sub_mul(&self, f: &Self, x: &Self) -> Option<Self> {
        Some(self - f * x)
    }
    fn div(&self, d: &Self) -> Option<Self> {
        Some(self / d)
    }
    fn positive(&self) -> bool {
        self.is_positive()
    }
    fn negative(&self) -> bool {
        self.is_negative()
    }
    fn neg(&self) -> Self {
        -self.clone()
    }
}

impl Scalar for Small {
    fn sub_mul(&self, f: &Self, x: &Self) -> Option<Self> {
        self.checked_sub(&f.checked_mul(x)?)
    }
    fn div(&self, d: &Self) -> Option<Self> {
        self.checked_div(d)
    }
    fn positive(&self) -> bool {
        *self.numer() > 0
    }
    fn negative(&self) -> bool {
        *self.numer() < 0
    }
    fn neg(&self) -> Self {
        -*self
    }
}

fn to_small(r: &Rational) -> Option<Small> {
    Some(Small::new(r.numer().to_i128()?, r.denom().to_i128()?))
}

fn to_big(s: &Small) -> Rational {
    Rational::new(BigInt::from(*s.numer()), BigInt::from(*s.denom()))
}

fn convert_matrix(a: &[Vec<Rational>]) -> Option<Vec<Vec<Small>>> {
    a.iter().map(|r| r.iter().map(to_small).collect()).collect()
}

fn convert_vec(v: &[Rational]) -> Option<Vec<Small>> {
    v.iter().map(to_small).collect()
}

#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome {
    Optimal {
        value: Rational,
        x: Vec<Rational>,
        /// Nonnegative row multipliers with `yᵀA ≥ cᵀ` and `yᵀb = value`.
        duals: Vec<Rational>,
    },
    Unbounded,
}

#[derive(Clone, Debug, PartialEq)]
pub enum PhaseOne {
    Feasible(Vec<Rational>),
    /// `uᵀB ≤ 0` and `uᵀe = value > 0`.
    Infeasible { value: Rational, duals: Vec<Rational> },
}

/// Degenerate pivots tolerated under Dantzig pricing before switching to
/// Bland's rule for the rest of the run.
const STALL_LIMIT: usize = 50;

struct Tableau<T> {
    rows: Vec<Vec<T>>,
    obj: Vec<T>,
    basis: Vec<usize>,
}

enum Run {
    Optimal,
    Unbounded,
}

impl<T: Scalar> Tableau<T> {
    /// Rows `[A | I | b]` with the slack (or artificial) basis.
    fn new(a: &[Vec<T>], b: &[T], n: usize) -> Self {
        let m = b.len();
        let width = n + m + 1;
        let rows = (0..m)
            .map(|i| {
                let mut row = vec![T::zero(); width];
                row[..n].clone_from_slice(&a[i]);
                row[n + i] = T::one();
                row[width - 1] = b[i].clone();
                row
            })
            .collect();
        Tableau { rows, obj: vec![T::zero(); width], basis: (n..n + m).collect() }
    }

    fn width(&self) -> usize {
        self.obj.len()
    }

    fn entering(&self, bland: bool) -> Option<usize> {
        let costs = &self.obj[..self.width() - 1];
        if bland {
            return costs.iter().position(|c| c.negative());
        }
        let mut best: Option<usize> = None;
        for (j, c) in costs.iter().enumerate() {
            if c.negative() && best.is_none_or(|b| *c < costs[b]) {
                best = Some(j);
            }
        }
        best
    }

    /// Pivots to optimality; `None` on arithmetic overflow.
    fn run(&mut self) -> Option<Run> {
        let rhs = self.width() - 1;
        let mut stalled = 0;
        loop {
            let Some(enter) = self.entering(stalled >= STALL_LIMIT) else { return Some(Run::Optimal) };
            let mut leave: Option<(usize, T)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[enter].positive() {
                    continue;
                }
                let ratio = row[rhs].div(&row[enter])?;
                let better = match &leave {
                    None => true,
                    Some((li, best)) => ratio < *best || (ratio == *best && self.basis[i] < self.basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            let Some((r, _)) = leave else { return Some(Run::Unbounded) };
            let before = self.obj[rhs].clone();
            self.pivot(r, enter)?;
            self.basis[r] = enter;
            stalled = if self.obj[rhs] == before { stalled + 1 } else { 0 };
        }
    }

    fn pivot(&mut self, r: usize, col: usize) -> Option<()> {
        let p = self.rows[r][col].clone();
        for v in self.rows[r].iter_mut() {
            if !v.is_zero() {
                *v = v.div(&p)?;
            }
        }
        let prow = self.rows[r].clone();
        let support: Vec<usize> = (0..prow.len()).filter(|&j| !prow[j].is_zero()).collect();
        let eliminate = |row: &mut [T]| -> Option<()> {
            let f = row[col].clone();
            if f.is_zero() {
                return Some(());
            }
            for &j in &support {
                row[j] = row[j].sub_mul(&f, &prow[j])?;
            }
            Some(())
        };
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != r {
                eliminate(row)?;
            }
        }
        eliminate(&mut self.obj)
    }

    fn basic_values(&self, n: usize) -> Vec<T> {
        let rhs = self.width() - 1;
        let mut x = vec![T::zero(); n];
        for (i, &bv) in self.basis.iter().enumerate() {
            if bv < n {
                x[bv] = self.rows[i][rhs].clone();
            }
        }
        x
    }
}

struct MaxResult<T> {
    value: T,
    x: Vec<T>,
    duals: Vec<T>,
}

fn maximize_in<T: Scalar>(c: &[T], a: &[Vec<T>], b: &[T]) -> Option<Option<MaxResult<T>>> {
    let n = c.len();
    let m = b.len();
    let mut t = Tableau::new(a, b, n);
    for (j, cj) in c.iter().enumerate() {
        t.obj[j] = cj.neg();
    }
    match t.run()? {
        Run::Unbounded => Some(None),
        Run::Optimal => {
            let value = t.obj[t.width() - 1].clone();
            let x = t.basic_values(n);
            let duals = t.obj[n..n + m].to_vec();
            Some(Some(MaxResult { value, x, duals }))
        }
    }
}

/// Solves the problem; `a` is row-major with `b.len()` rows.
pub fn maximize(c: &[Rational], a: &[Vec<Rational>], b: &[Rational]) -> LpOutcome {
    assert!(a.iter().all(|r| r.len() == c.len()));
    assert!(b.iter().all(|v| !v.is_negative()), "slack basis must be feasible");
    let small = (|| maximize_in(&convert_vec(c)?, &convert_matrix(a)?, &convert_vec(b)?))();
    let result = match small {
        Some(r) => r.map(|r| MaxResult {
            value: to_big(&r.value),
            x: r.x.iter().map(to_big).collect(),
            duals: r.duals.iter().map(to_big).collect(),
        }),
        None => maximize_in(c, a, b).expect("big rationals do not overflow"),
    };
    match result {
        None => LpOutcome::Unbounded,
        Some(MaxResult { value, x, duals }) => LpOutcome::Optimal { value, x, duals },
    }
}

enum PhaseResult<T> {
    Feasible(Vec<T>),
    Infeasible { value: T, duals: Vec<T> },
}

fn phase_one_in<T: Scalar>(bm: &[Vec<T>], e: &[T], n: usize) -> Option<PhaseResult<T>> {
    let k = e.len();
    let mut t = Tableau::new(bm, e, n);
    let rhs = t.width() - 1;
    // Reduced costs of `min Σ r` in the artificial basis; `obj[rhs]` is −value.
    for i in 0..k {
        for j in 0..n {
            t.obj[j] = t.obj[j].sub_mul(&T::one(), &t.rows[i][j])?;
        }
        t.obj[rhs] = t.obj[rhs].sub_mul(&T::one(), &t.rows[i][rhs])?;
    }
    match t.run()? {
        Run::Unbounded => unreachable!("phase one is bounded below"),
        Run::Optimal => {}
    }
    let value = t.obj[rhs].neg();
    if value.is_zero() {
        Some(PhaseResult::Feasible(t.basic_values(n)))
    } else {
        let duals = (0..k).map(|i| T::one().sub_mul(&T::one(), &t.obj[n + i])).collect::<Option<Vec<T>>>()?;
        Some(PhaseResult::Infeasible { value, duals })
    }
}

/// Decides whether `Bx = e` has a solution `x ≥ 0`, for `e ≥ 0`, by
/// minimizing the sum of artificial variables.
pub fn phase_one(bm: &[Vec<Rational>], e: &[Rational]) -> PhaseOne {
    let n = bm.first().map_or(0, |r| r.len());
    assert!(bm.iter().all(|r| r.len() == n));
    assert!(e.iter().all(|v| !v.is_negative()), "right-hand side must be nonnegative");
    let small = (|| phase_one_in(&convert_matrix(bm)?, &convert_vec(e)?, n))();
    match small {
        Some(PhaseResult::Feasible(x)) => PhaseOne::Feasible(x.iter().map(to_big).collect()),
        Some(PhaseResult::Infeasible { value, duals }) => {
            PhaseOne::Infeasible { value: to_big(&value), duals: duals.iter().map(to_big).collect() }
        }
        None => match phase_one_in(bm, e, n).expect("big rationals do not overflow") {
            PhaseResult::Feasible(x) => PhaseOne::Feasible(x),
            PhaseResult::Infeasible { value, duals } => PhaseOne::Infeasible { value, duals },
        },
    }
}
