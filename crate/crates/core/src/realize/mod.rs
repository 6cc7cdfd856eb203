//! Realizations of (oriented) gaussoids by symmetric matrices: sign
//! vectors, the n = 4 uniform class fixture, log-linear certificates of
//! non-realizability, M-matrix realizations of graph gaussoids, and a
//! dyadic random search.

pub mod simplex;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::cube::{edge_trinomials, minor_indices, GroundSet, MinorTable, Symbol, Trinomial};
use crate::error::{Error, Result};
use crate::exec::{self, Strategy};
use crate::gaussoid::{gaussoid_of_minors, graph_gaussoid, Gaussoid, Graph};
use crate::linalg::{bareiss_det, int, parse_rational, Rational, SymmetricMatrix};
use crate::oriented::OrientedGaussoid;
use simplex::PhaseOne;

/// Signs of all almost-principal minors and whether `Σ` is positive definite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignVector {
    pub oriented: OrientedGaussoid,
    pub positive_definite: bool,
}

pub fn sign_vector_of_minors(table: &MinorTable) -> SignVector {
    let gs = table.ground_set();
    let signs: Vec<i8> = gs.a_symbols().iter().map(|&s| sign_of(table.get(s))).collect();
    let positive_definite = gs.p_symbols().iter().all(|&p| table.get(p).is_positive());
    SignVector { oriented: OrientedGaussoid::from_signs(gs, &signs).expect("valid signs"), positive_definite }
}

pub fn sign_vector(sigma: &SymmetricMatrix) -> Result<SignVector> {
    let gs = GroundSet::new(sigma.n())?;
    Ok(sign_vector_of_minors(&MinorTable::new(&gs, sigma)?))
}

fn sign_of(r: &Rational) -> i8 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

/// `ρ_{ij|K} = a_{ij|K} / √(p_{iK} p_{jK})` for positive definite `Σ`,
/// in canonical A-order.
pub fn partial_correlations(sigma: &SymmetricMatrix) -> Result<Vec<(Symbol, f64)>> {
    let gs = GroundSet::new(sigma.n())?;
    let table = MinorTable::new(&gs, sigma)?;
    if !gs.p_symbols().iter().all(|&p| table.get(p).is_positive()) {
        return Err(Error::Invalid("partial correlations need a positive definite matrix".into()));
    }
    let f = |r: &Rational| r.to_f64().expect("finite");
    Ok(gs
        .a_symbols()
        .iter()
        .map(|&s| {
            let Symbol::A { i, j, k } = s else { unreachable!() };
            let pi = table.get(Symbol::P(k.with(i as usize)));
            let pj = table.get(Symbol::P(k.with(j as usize)));
            (s, f(table.get(s)) / (f(pi) * f(pj)).sqrt())
        })
        .collect())
}

/// Unit-diagonal matrix with the given strict upper triangle `(σ12, σ13, …)`.
pub fn unit_diagonal(n: usize, upper: Vec<Rational>) -> Result<SymmetricMatrix> {
    SymmetricMatrix::from_diag_upper(vec![Rational::one(); n], upper)
}

/// One row of the fixture of uniform oriented gaussoid classes on `[4]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassRow {
    pub id: usize,
    /// Signs in canonical A-order.
    pub signs: String,
    /// `(σ12, σ13, σ14, σ23, σ24, σ34)` of a unit-diagonal realization, if known.
    pub entries: Option<Vec<Rational>>,
}

impl ClassRow {
    pub fn oriented(&self) -> Result<OrientedGaussoid> {
        OrientedGaussoid::from_sign_string(&GroundSet::new(4)?, &self.signs)
    }

    pub fn matrix(&self) -> Option<SymmetricMatrix> {
        self.entries.as_ref().map(|e| unit_diagonal(4, e.clone()).expect("six entries"))
    }
}

const CLASS_CSV: &str = include_str!("../../data/uniform_n4_classes.csv");

#[derive(Deserialize)]
struct CsvRow {
    id: usize,
    signs: String,
    scale: String,
    s12: String,
    s13: String,
    s14: String,
    s23: String,
    s24: String,
    s34: String,
}

/// Parses rows `id,signs,scale,s12,…,s34`; an empty scale marks a row
/// without a realization. Entries are multiplied by the scale.
pub fn parse_class_rows(text: &str) -> Result<Vec<ClassRow>> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let mut out = Vec::new();
    for (line, rec) in reader.deserialize::<CsvRow>().enumerate() {
        let rec = rec.map_err(|e| Error::Parse { line: line + 2, msg: e.to_string() })?;
        let entries = if rec.scale.trim().is_empty() {
            None
        } else {
            let scale = parse_rational(&rec.scale)?;
            let raw = [&rec.s12, &rec.s13, &rec.s14, &rec.s23, &rec.s24, &rec.s34];
            Some(raw.iter().map(|s| parse_rational(s).map(|v| v * &scale)).collect::<Result<Vec<_>>>()?)
        };
        if rec.signs.chars().count() != 24 {
            return Err(Error::Parse { line: line + 2, msg: format!("expected 24 signs, got {:?}", rec.signs) });
        }
        out.push(ClassRow { id: rec.id, signs: rec.signs, entries });
    }
    Ok(out)
}

/// The 46 representatives of uniform oriented gaussoids on `[4]` up to
/// reorientation and relabeling, with realizations for all but row 36.
pub fn uniform_class_rows() -> Vec<ClassRow> {
    parse_class_rows(CLASS_CSV).expect("bundled fixture parses")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum RowStatus {
    Verified,
    NotPositiveDefinite,
    SignMismatch { computed: String },
    NoMatrix,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RowCheck {
    pub id: usize,
    #[serde(flatten)]
    pub status: RowStatus,
}

/// Checks each row's matrix for positive definiteness and an exact sign match.
pub fn verify_class_rows(rows: &[ClassRow]) -> Vec<RowCheck> {
    rows.iter()
        .map(|row| {
            let status = match row.matrix() {
                None => RowStatus::NoMatrix,
                Some(m) => {
                    let sv = sign_vector(&m).expect("4×4");
                    let computed = sv.oriented.sign_string();
                    if !sv.positive_definite {
                        RowStatus::NotPositiveDefinite
                    } else if computed != row.signs {
                        RowStatus::SignMismatch { computed }
                    } else {
                        RowStatus::Verified
                    }
                }
            };
            RowCheck { id: row.id, status }
        })
        .collect()
}

/// `|x_a|·|x_b| < |x_c|·|x_d|`, variables indexed by canonical symbol order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogInequality {
    /// Index into [`edge_trinomials`].
    pub trinomial: usize,
    pub lhs: [usize; 2],
    pub rhs: [usize; 2],
}

/// Strict linear inequalities among log-magnitudes implied by a uniform
/// orientation: in each edge trinomial the two terms of the majority sign
/// are each smaller in magnitude than the third.
#[derive(Clone, Debug)]
pub struct SignedLogSystem {
    pub gs: GroundSet,
    pub trinomials: Vec<Trinomial>,
    pub inequalities: Vec<LogInequality>,
}

impl SignedLogSystem {
    pub fn new(phi: &OrientedGaussoid) -> Result<Self> {
        if !phi.is_uniform() {
            return Err(Error::Invalid("log systems need a uniform orientation".into()));
        }
        let gs = phi.ground_set().clone();
        let trinomials = edge_trinomials(&gs);
        let mut inequalities = Vec::new();
        for (ti, t) in trinomials.iter().enumerate() {
            let signs = phi.term_signs(t);
            let pos = signs.iter().filter(|&&s| s > 0).count();
            if pos == 0 || pos == 3 {
                return Err(Error::Incompatible(t.to_string()));
            }
            let lone_sign = if pos == 1 { 1 } else { -1 };
            let lone = signs.iter().position(|&s| s == lone_sign).unwrap();
            let vars = |k: usize| t.terms[k].factors.map(|f| gs.ord(f));
            for k in (0..3).filter(|&k| k != lone) {
                inequalities.push(LogInequality { trinomial: ti, lhs: vars(k), rhs: vars(lone) });
            }
        }
        Ok(Self { gs, trinomials, inequalities })
    }

    pub fn variable_count(&self) -> usize {
        self.gs.symbol_count()
    }

    /// Coefficients of `lhs − rhs`.
    pub fn vector(&self, ineq: &LogInequality) -> Vec<i64> {
        let mut v = vec![0; self.variable_count()];
        for &x in &ineq.lhs {
            v[x] += 1;
        }
        for &x in &ineq.rhs {
            v[x] -= 1;
        }
        v
    }

    pub fn describe(&self, ineq: &LogInequality) -> String {
        let name = |v: usize| self.gs.symbol(v).to_string();
        format!("{}*{} < {}*{}", name(ineq.lhs[0]), name(ineq.lhs[1]), name(ineq.rhs[0]), name(ineq.rhs[1]))
    }

    /// Index of the inequality with these factor multisets, if present.
    pub fn find(&self, lhs: [Symbol; 2], rhs: [Symbol; 2]) -> Option<usize> {
        let key = |s: [Symbol; 2]| {
            let mut v = s.map(|x| self.gs.ord(x));
            v.sort_unstable();
            v
        };
        let (l, r) = (key(lhs), key(rhs));
        self.inequalities.iter().position(|q| {
            let mut a = q.lhs;
            let mut b = q.rhs;
            a.sort_unstable();
            b.sort_unstable();
            a == l && b == r
        })
    }
}

/// Nonnegative multipliers on inequalities whose weighted sum is zero,
/// which turns the strict system into `0 < 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FarkasCertificate {
    /// (inequality index, multiplier > 0)
    pub multipliers: Vec<(usize, Rational)>,
}

impl FarkasCertificate {
    pub fn verify(&self, system: &SignedLogSystem) -> bool {
        if self.multipliers.is_empty() || self.multipliers.iter().any(|(_, m)| !m.is_positive()) {
            return false;
        }
        let mut sum = vec![Rational::zero(); system.variable_count()];
        for (i, m) in &self.multipliers {
            for (s, v) in sum.iter_mut().zip(system.vector(&system.inequalities[*i])) {
                *s += m * int(v);
            }
        }
        sum.iter().all(|x| x.is_zero())
    }

    /// Distinct source trinomials, in first-use order.
    pub fn trinomials(&self, system: &SignedLogSystem) -> Vec<usize> {
        let mut out = Vec::new();
        for (i, _) in &self.multipliers {
            let t = system.inequalities[*i].trinomial;
            if !out.contains(&t) {
                out.push(t);
            }
        }
        out
    }

    pub fn to_json(&self, system: &SignedLogSystem) -> CertificateJson {
        CertificateJson {
            status: "infeasible".into(),
            multipliers: self.multipliers.iter().map(|(_, m)| crate::linalg::format_rational(m)).collect(),
            inequalities: self.multipliers.iter().map(|(i, _)| system.describe(&system.inequalities[*i])).collect(),
            trinomials: self
                .multipliers
                .iter()
                .map(|(i, _)| system.trinomials[system.inequalities[*i].trinomial].to_string())
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CertificateJson {
    pub status: String,
    pub multipliers: Vec<String>,
    pub inequalities: Vec<String>,
    pub trinomials: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BfpOutcome {
    /// Log-magnitudes (canonical symbol order) satisfying every inequality.
    Feasible { log_magnitudes: Vec<Rational> },
    Infeasible(FarkasCertificate),
}

/// Decides the strict log-linear system `Ay < 0` of a uniform orientation
/// exactly through its alternative: `λ ≥ 0`, `Aᵀλ = 0`, `Σλ = 1`. A
/// solution is a Farkas certificate; otherwise the phase-one duals give
/// log-magnitudes satisfying every inequality.
pub fn bfp_certificate(phi: &OrientedGaussoid) -> Result<(SignedLogSystem, BfpOutcome)> {
    let system = SignedLogSystem::new(phi)?;
    let nv = system.variable_count();
    let m = system.inequalities.len();
    let vectors: Vec<Vec<i64>> = system.inequalities.iter().map(|q| system.vector(q)).collect();
    let used: Vec<usize> = (0..nv).filter(|&v| vectors.iter().any(|w| w[v] != 0)).collect();
    let mut bm: Vec<Vec<Rational>> = used.iter().map(|&v| vectors.iter().map(|w| int(w[v])).collect()).collect();
    bm.push(vec![Rational::one(); m]);
    let mut e = vec![Rational::zero(); used.len()];
    e.push(Rational::one());
    let outcome = match simplex::phase_one(&bm, &e) {
        PhaseOne::Feasible(lambda) => {
            let multipliers =
                lambda.into_iter().enumerate().filter(|(_, l)| l.is_positive()).collect::<Vec<(usize, Rational)>>();
            let cert = FarkasCertificate { multipliers };
            debug_assert!(cert.verify(&system));
            BfpOutcome::Infeasible(cert)
        }
        PhaseOne::Infeasible { duals, .. } => {
            let mut y = vec![Rational::zero(); nv];
            for (k, &v) in used.iter().enumerate() {
                y[v] = duals[k].clone();
            }
            BfpOutcome::Feasible { log_magnitudes: y }
        }
    };
    Ok((system, outcome))
}

/// A realization `Σ = (t·Id − A)⁻¹` of a graph gaussoid.
#[derive(Clone, Debug)]
pub struct MMatrixRealization {
    pub sigma: SymmetricMatrix,
    pub t: Rational,
    pub faithful: bool,
    pub nonnegative: bool,
    pub rounds: usize,
}

/// Starts at `t` (raised to exceed the maximum degree) and doubles it up to
/// 20 times until `Σ` realizes exactly the graph gaussoid.
pub fn mmatrix_realization(graph: &Graph, t: &Rational) -> Result<MMatrixRealization> {
    let n = graph.n();
    let gs = GroundSet::new(n)?;
    let target = graph_gaussoid(&gs, graph)?;
    let max_deg = (0..n).map(|u| graph.neighbors(u).len()).max().unwrap_or(0);
    let mut t = if *t > int(max_deg as i64) { t.clone() } else { int(max_deg as i64 + 1) };
    for round in 0..=20 {
        let mut m = SymmetricMatrix::zeros(n);
        for i in 0..n {
            m.set(i, i, t.clone());
            for j in i + 1..n {
                if graph.has_edge(i, j) {
                    m.set(i, j, -Rational::one());
                }
            }
        }
        let sigma = m.inverse().ok_or_else(|| Error::DegenerateMatrix("t·Id − A is singular".into()))?;
        let table = MinorTable::new(&gs, &sigma)?;
        let got = gaussoid_of_minors(&table)?;
        let nonnegative = gs.a_symbols().iter().all(|&s| !table.get(s).is_negative());
        let faithful = got.gaussoid == target && got.positive_definite;
        if faithful {
            return Ok(MMatrixRealization { sigma, t, faithful, nonnegative, rounds: round });
        }
        t *= int(2);
    }
    Err(Error::Invalid("no faithful M-matrix realization within 20 doublings".into()))
}

const DYADIC_BITS: u32 = 14;
const CHUNK: u64 = 4096;

/// Exact sign vector of an integer matrix (a dyadic matrix scaled by `2^14`).
fn integer_signs(gs: &GroundSet, m: &[Vec<i128>]) -> Option<Vec<i8>> {
    let minor = |s: Symbol| {
        let (rows, cols) = minor_indices(s);
        bareiss_det(rows.iter().map(|&r| cols.iter().map(|&c| m[r][c]).collect()).collect())
    };
    if gs.p_symbols().iter().any(|&p| minor(p) <= 0) {
        return None;
    }
    Some(gs.a_symbols().iter().map(|&s| minor(s).signum() as i8).collect())
}

/// Random search over unit-diagonal matrices with off-diagonal entries
/// `±2^{-k}`, `1 ≤ k ≤ 14`, signed like the target's `a_{ij}`. Trials are
/// grouped in chunks with seeds `seed + chunk`; the first hit in chunk
/// order is returned, so the result does not depend on the strategy.
pub fn search_realization(phi: &OrientedGaussoid, budget: u64, seed: u64, strategy: Strategy) -> Option<SymmetricMatrix> {
    let gs = phi.ground_set();
    let n = gs.n();
    let target = phi.signs();
    let pair_sign: Vec<(usize, usize, i8)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .map(|(i, j)| (i, j, phi.sign_at(gs.a_pos(Symbol::a(i, j, Default::default())))))
        .collect();
    let chunks = budget.div_ceil(CHUNK) as usize;
    let hit = exec::find_first(strategy, chunks, |chunk| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(chunk as u64));
        let trials = CHUNK.min(budget - chunk as u64 * CHUNK);
        let one = 1i128 << DYADIC_BITS;
        for _ in 0..trials {
            let mut m = vec![vec![0i128; n]; n];
            for (i, row) in m.iter_mut().enumerate() {
                row[i] = one;
            }
            for &(i, j, s) in &pair_sign {
                let k = rng.gen_range(1..=DYADIC_BITS);
                m[i][j] = s as i128 * (one >> k);
                m[j][i] = m[i][j];
            }
            if integer_signs(gs, &m).as_deref() == Some(&target[..]) {
                return Some(m);
            }
        }
        None
    });
    hit.map(|(_, m)| {
        let scale = Rational::new(BigInt::one(), BigInt::from(1i64 << DYADIC_BITS));
        let mut sigma = SymmetricMatrix::zeros(n);
        for i in 0..n {
            for j in i..n {
                sigma.set(i, j, int(m[i][j] as i64) * &scale);
            }
        }
        sigma
    })
}

/// Gaussoids on `[4]` that are realizable by some symmetric matrix with
/// nonzero principal minors, but not by a positive definite one. One
/// representative per orbit under duality and relabeling.
pub const NON_REALIZABLE_N4: [&[&str]; 5] = [
    &["a12|3", "a13|4", "a14|2"],
    &["a12", "a12|34", "a34|1", "a34|2"],
    &["a12", "a13|24", "a24|13", "a34"],
    &["a12|3", "a13|4", "a24|1", "a34|2"],
    &["a12", "a13|24", "a24|3", "a34|1"],
];

pub fn non_realizable_n4() -> Vec<Gaussoid> {
    let gs = GroundSet::new(4).unwrap();
    NON_REALIZABLE_N4
        .iter()
        .map(|names| {
            let syms: Vec<Symbol> = names.iter().map(|s| s.parse().unwrap()).collect();
            Gaussoid::new(&gs, syms).expect("fixture is a gaussoid")
        })
        .collect()
}
