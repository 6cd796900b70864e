//! The coordinate bialgebra of the monoid of `n × n` matrices: polynomials
//! in the entries `e^i_j` with `Δ(e^i_j) = Σ_k e^i_k ⊗ e^k_j` and
//! `ε(e^i_j) = δ^i_j`, plus verification of the bialgebra and comodule laws.
//!
//! Indices are 0-based in the API and 1-based in printed keys. Tensor powers
//! of the algebra are represented by copies of the variable set: `e^i_j` in
//! tensor slot `c` is variable `c·n² + i·n + j`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::linalg::{format_q, parse_q, Matrix, Q};
use crate::poly::{monomial_from_vars, Monomial, Poly};
use crate::{Error, Result};

/// Name of the generator behind all seeded sampling.
pub const RNG_NAME: &str = "ChaCha8Rng";

pub fn var_index(n: usize, slot: usize, i: usize, j: usize) -> usize {
    slot * n * n + i * n + j
}

fn var_parts(n: usize, v: usize) -> (usize, usize, usize) {
    let nn = n * n;
    (v / nn, (v % nn) / n, v % n)
}

/// An element of `O(M(n))⊗…⊗O(M(n))` (`factors` copies). A plain element of
/// the bialgebra is the case `factors == 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorPoly {
    n: usize,
    factors: usize,
    poly: Poly,
}

/// An element of `O(M(n))`.
pub type PolyElement = TensorPoly;

impl TensorPoly {
    pub fn zero(n: usize, factors: usize) -> Self {
        TensorPoly {
            n,
            factors,
            poly: Poly::zero(),
        }
    }

    pub fn one(n: usize, factors: usize) -> Self {
        TensorPoly {
            n,
            factors,
            poly: Poly::one(),
        }
    }

    pub fn constant(n: usize, c: Q) -> Self {
        TensorPoly {
            n,
            factors: 1,
            poly: Poly::constant(c),
        }
    }

    /// The generator `e^i_j`.
    pub fn generator(n: usize, i: usize, j: usize) -> Self {
        Self::generator_in_slot(n, 1, 0, i, j)
    }

    /// `1⊗…⊗e^i_j⊗…⊗1` with the generator in `slot`.
    pub fn generator_in_slot(n: usize, factors: usize, slot: usize, i: usize, j: usize) -> Self {
        assert!(i < n && j < n && slot < factors, "generator index out of range");
        TensorPoly {
            n,
            factors,
            poly: Poly::var(var_index(n, slot, i, j)),
        }
    }

    /// Wraps a polynomial whose variables are numbered as described in the
    /// module docs.
    pub fn from_poly(n: usize, factors: usize, poly: Poly) -> Result<Self> {
        let limit = factors * n * n;
        if poly.terms().keys().flatten().any(|&(v, _)| v >= limit) {
            return Err(Error::InvalidArgument(format!(
                "polynomial uses variables beyond {factors} copies of n = {n}"
            )));
        }
        Ok(TensorPoly { n, factors, poly })
    }

    /// The product `e^{i_1}_{j_1} ⋯ e^{i_m}_{j_m}`.
    pub fn monomial(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        TensorPoly {
            n,
            factors: 1,
            poly: Poly::term(
                monomial_from_vars(pairs.into_iter().map(|(i, j)| var_index(n, 0, i, j))),
                Q::one(),
            ),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn factors(&self) -> usize {
        self.factors
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// Total degree over all slots.
    pub fn degree(&self) -> Option<usize> {
        self.poly.degree()
    }

    /// Whether every term has degree `d` in every tensor factor.
    pub fn is_homogeneous_in_each_slot(&self, d: usize) -> bool {
        let nn = self.n * self.n;
        self.poly.terms().keys().all(|m| {
            let mut per_slot = vec![0usize; self.factors];
            for &(v, e) in m {
                per_slot[v / nn] += e as usize;
            }
            per_slot.iter().all(|&s| s == d)
        })
    }

    fn check_compatible(&self, other: &TensorPoly) -> Result<()> {
        if self.n != other.n || self.factors != other.factors {
            return Err(Error::SizeMismatch(format!(
                "n = {} with {} factors vs n = {} with {} factors",
                self.n, self.factors, other.n, other.factors
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &TensorPoly) -> Result<TensorPoly> {
        self.check_compatible(other)?;
        Ok(self.with_poly(&self.poly + &other.poly))
    }

    pub fn sub(&self, other: &TensorPoly) -> Result<TensorPoly> {
        self.check_compatible(other)?;
        Ok(self.with_poly(&self.poly - &other.poly))
    }

    pub fn scale(&self, c: &Q) -> TensorPoly {
        self.with_poly(self.poly.scale(c))
    }

    fn with_poly(&self, poly: Poly) -> TensorPoly {
        TensorPoly {
            n: self.n,
            factors: self.factors,
            poly,
        }
    }

    /// `a ⊗ b`, placing `b` in the slots after those of `a`.
    pub fn tensor(&self, other: &TensorPoly) -> Result<TensorPoly> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(format!("n = {} vs n = {}", self.n, other.n)));
        }
        let shift = self.factors * self.n * self.n;
        let moved = other.poly.substitute(|v| Poly::var(v + shift));
        Ok(TensorPoly {
            n: self.n,
            factors: self.factors + other.factors,
            poly: &self.poly * &moved,
        })
    }

    /// Evaluates an element of `O(M(n))` at a concrete matrix.
    pub fn evaluate(&self, g: &Matrix) -> Result<Q> {
        if g.rows() != self.n || g.cols() != self.n {
            return Err(Error::ShapeMismatch(format!(
                "expected a {n}x{n} matrix",
                n = self.n
            )));
        }
        if self.factors != 1 {
            return Err(Error::InvalidArgument("evaluate needs a single factor".into()));
        }
        let n = self.n;
        Ok(self.poly.eval(|v| g[((v % (n * n)) / n, v % n)].clone()))
    }

    /// Canonical printed form of a monomial, e.g. `e[1][2]^2*e[2][1]` or
    /// `e[1][1]⊗1` for two factors.
    pub fn monomial_key(&self, m: &Monomial) -> String {
        let mut slots = vec![Vec::new(); self.factors];
        for &(v, e) in m {
            let (slot, i, j) = var_parts(self.n, v);
            let mut s = format!("e[{}][{}]", i + 1, j + 1);
            if e > 1 {
                s.push_str(&format!("^{e}"));
            }
            slots[slot].push(s);
        }
        slots
            .into_iter()
            .map(|s| if s.is_empty() { "1".to_string() } else { s.join("*") })
            .collect::<Vec<_>>()
            .join("⊗")
    }

    /// Parses a key produced by [`TensorPoly::monomial_key`].
    pub fn parse_monomial_key(n: usize, factors: usize, key: &str) -> Result<Monomial> {
        let slots: Vec<&str> = key.split('⊗').collect();
        if slots.len() != factors {
            return Err(Error::Parse(format!("expected {factors} tensor factors in {key:?}")));
        }
        let mut vars = Vec::new();
        for (slot, text) in slots.iter().enumerate() {
            let text = text.trim();
            if text == "1" {
                continue;
            }
            for factor in text.split('*') {
                let (base, exp) = match factor.split_once('^') {
                    Some((b, e)) => (
                        b,
                        e.trim()
                            .parse::<u32>()
                            .map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?,
                    ),
                    None => (factor, 1),
                };
                let inner = base
                    .trim()
                    .strip_prefix("e[")
                    .and_then(|s| s.strip_suffix(']'))
                    .ok_or_else(|| Error::Parse(format!("bad variable {base:?}")))?;
                let (i, j) = inner
                    .split_once("][")
                    .ok_or_else(|| Error::Parse(format!("bad variable {base:?}")))?;
                let parse = |s: &str| -> Result<usize> {
                    let x: usize = s
                        .trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad index in {base:?}")))?;
                    if x == 0 || x > n {
                        return Err(Error::Parse(format!("index {x} outside 1..={n}")));
                    }
                    Ok(x - 1)
                };
                let v = var_index(n, slot, parse(i)?, parse(j)?);
                vars.extend(std::iter::repeat_n(v, exp as usize));
            }
        }
        Ok(monomial_from_vars(vars))
    }

    /// Terms keyed by printed monomial.
    pub fn to_key_map(&self) -> BTreeMap<String, String> {
        self.poly
            .terms()
            .iter()
            .map(|(m, c)| (self.monomial_key(m), format_q(c)))
            .collect()
    }

    pub fn from_key_map(n: usize, factors: usize, map: &BTreeMap<String, String>) -> Result<Self> {
        let mut poly = Poly::zero();
        for (k, c) in map {
            poly.add_term(Self::parse_monomial_key(n, factors, k)?, parse_q(c)?);
        }
        Ok(TensorPoly { n, factors, poly })
    }
}

impl fmt::Display for TensorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.poly.terms().iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}·{}", format_q(c), self.monomial_key(m))?;
        }
        Ok(())
    }
}

impl Serialize for TensorPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_key_map().serialize(serializer)
    }
}

pub fn multiply(a: &PolyElement, b: &PolyElement) -> Result<PolyElement> {
    a.check_compatible(b)?;
    Ok(a.with_poly(&a.poly * &b.poly))
}

/// The images of the generators under a comultiplication, as elements of
/// the two-fold tensor product. The bialgebra's own rule is
/// [`DeltaRule::standard`]; other rules exist to exercise the checks.
#[derive(Clone, Debug)]
pub struct DeltaRule {
    n: usize,
    images: Vec<Poly>,
}

impl DeltaRule {
    pub fn standard(n: usize) -> Self {
        let mut images = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut p = Poly::zero();
                for k in 0..n {
                    p.add_term(
                        monomial_from_vars([var_index(n, 0, i, k), var_index(n, 1, k, j)]),
                        Q::one(),
                    );
                }
                images.push(p);
            }
        }
        DeltaRule { n, images }
    }

    /// The standard rule with the last summand of `Δ(e^1_2)` removed.
    pub fn corrupted(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidArgument(
                "corrupted comultiplication needs n ≥ 2".into(),
            ));
        }
        let mut rule = Self::standard(n);
        let dropped = monomial_from_vars([var_index(n, 0, 0, n - 1), var_index(n, 1, n - 1, 1)]);
        rule.images[1].add_term(dropped, -Q::one());
        Ok(rule)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Applies the rule to the tensor factor in `slot`, producing a tensor
    /// with one more factor.
    pub fn apply_at(&self, t: &TensorPoly, slot: usize) -> Result<TensorPoly> {
        if t.n != self.n || slot >= t.factors {
            return Err(Error::InvalidArgument(format!(
                "cannot apply Δ at slot {slot} of {} factors",
                t.factors
            )));
        }
        let n = self.n;
        let nn = n * n;
        let poly = t.poly.substitute(|v| {
            let (s, i, j) = var_parts(n, v);
            if s < slot {
                Poly::var(v)
            } else if s > slot {
                Poly::var(v + nn)
            } else {
                self.images[i * n + j].substitute(|w| Poly::var(w + slot * nn))
            }
        });
        Ok(TensorPoly {
            n,
            factors: t.factors + 1,
            poly,
        })
    }
}

pub fn delta(a: &PolyElement) -> Result<TensorPoly> {
    DeltaRule::standard(a.n).apply_at(a, 0)
}

/// Applies `ε` to the tensor factor in `slot`, removing that factor.
pub fn counit_at(t: &TensorPoly, slot: usize) -> Result<TensorPoly> {
    if slot >= t.factors || t.factors < 2 {
        return Err(Error::InvalidArgument(format!(
            "cannot apply ε at slot {slot} of {} factors",
            t.factors
        )));
    }
    let n = t.n;
    let nn = n * n;
    let poly = t.poly.substitute(|v| {
        let (s, i, j) = var_parts(n, v);
        if s < slot {
            Poly::var(v)
        } else if s > slot {
            Poly::var(v - nn)
        } else if i == j {
            Poly::one()
        } else {
            Poly::zero()
        }
    });
    Ok(TensorPoly {
        n,
        factors: t.factors - 1,
        poly,
    })
}

/// `ε(a)`, the value at the identity matrix.
pub fn counit(a: &PolyElement) -> Q {
    let n = a.n;
    a.poly.eval(|v| {
        let (_, i, j) = var_parts(n, v);
        if i == j {
            Q::one()
        } else {
            Q::zero()
        }
    })
}

/// One failed law together with the input that exposes it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: String,
    pub witness: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BialgebraReport {
    pub n: usize,
    pub degree: usize,
    pub seed: u64,
    pub rng: &'static str,
    pub samples: usize,
    pub checks: usize,
    pub passed: bool,
    /// The first violation of each failed law.
    pub violations: Vec<Violation>,
}

pub const BIALGEBRA_SAMPLES: usize = 50;

/// Monomials of degree `0..=degree` drawn with the seeded generator.
pub fn sample_monomials(n: usize, degree: usize, count: usize, seed: u64) -> Vec<PolyElement> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let d = rng.random_range(0..=degree);
            let pairs: Vec<(usize, usize)> = (0..d)
                .map(|_| (rng.random_range(0..n), rng.random_range(0..n)))
                .collect();
            TensorPoly::monomial(n, pairs)
        })
        .collect()
}

pub fn check_bialgebra(n: usize, degree: usize, seed: u64) -> Result<BialgebraReport> {
    check_bialgebra_with(&DeltaRule::standard(n), degree, seed)
}

struct Recorder {
    checks: usize,
    violations: Vec<Violation>,
}

impl Recorder {
    fn check(&mut self, axiom: &str, ok: bool, witness: impl FnOnce() -> (String, String)) {
        self.checks += 1;
        if !ok && !self.violations.iter().any(|v| v.axiom == axiom) {
            let (witness, detail) = witness();
            self.violations.push(Violation {
                axiom: axiom.to_string(),
                witness,
                detail,
            });
        }
    }
}

/// Checks coassociativity, both counit laws, multiplicativity of `Δ` and
/// `ε`, and preservation of degree, for the given comultiplication rule. The
/// inputs are `1`, every generator and [`BIALGEBRA_SAMPLES`] seeded
/// monomials of degree at most `degree`; products are checked on all pairs
/// of generators and on consecutive sample pairs.
pub fn check_bialgebra_with(rule: &DeltaRule, degree: usize, seed: u64) -> Result<BialgebraReport> {
    let n = rule.n;
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let mut inputs = vec![TensorPoly::one(n, 1)];
    for i in 0..n {
        for j in 0..n {
            inputs.push(TensorPoly::generator(n, i, j));
        }
    }
    let samples = sample_monomials(n, degree, BIALGEBRA_SAMPLES, seed);
    inputs.extend(samples.iter().cloned());

    let mut rec = Recorder {
        checks: 0,
        violations: Vec::new(),
    };
    for a in &inputs {
        let d = rule.apply_at(a, 0)?;
        let left = rule.apply_at(&d, 0)?;
        let right = rule.apply_at(&d, 1)?;
        rec.check("coassociativity", left == right, || {
            (a.to_string(), format!("(Δ⊗id)Δ = {left}; (id⊗Δ)Δ = {right}"))
        });
        let l = counit_at(&d, 0)?;
        rec.check("left counit", l == *a, || {
            (a.to_string(), format!("(ε⊗id)Δ = {l}"))
        });
        let r = counit_at(&d, 1)?;
        rec.check("right counit", r == *a, || {
            (a.to_string(), format!("(id⊗ε)Δ = {r}"))
        });
        let deg = a.degree().unwrap_or(0);
        rec.check("grading", d.is_homogeneous_in_each_slot(deg), || {
            (a.to_string(), format!("Δ = {d} is not of degree {deg} in each factor"))
        });
    }

    let mut pairs = Vec::new();
    for a in &inputs[1..=n * n] {
        for b in &inputs[1..=n * n] {
            pairs.push((a.clone(), b.clone()));
        }
    }
    for (i, a) in samples.iter().enumerate() {
        pairs.push((a.clone(), samples[(i + 1) % samples.len()].clone()));
    }
    for (a, b) in &pairs {
        let ab = multiply(a, b)?;
        let lhs = rule.apply_at(&ab, 0)?;
        let da = rule.apply_at(a, 0)?;
        let db = rule.apply_at(b, 0)?;
        let rhs = da.with_poly(&da.poly * &db.poly);
        rec.check("Δ multiplicative", lhs == rhs, || {
            (format!("({a})·({b})"), format!("Δ(ab) = {lhs}; Δ(a)Δ(b) = {rhs}"))
        });
        rec.check(
            "ε multiplicative",
            counit(&ab) == counit(a) * counit(b),
            || (format!("({a})·({b})"), "ε(ab) ≠ ε(a)ε(b)".to_string()),
        );
    }
    let delta_one = rule.apply_at(&inputs[0], 0)?;
    rec.check("Δ unital", delta_one == TensorPoly::one(n, 2), || {
        ("1".to_string(), format!("Δ(1) = {delta_one}"))
    });

    Ok(BialgebraReport {
        n,
        degree,
        seed,
        rng: RNG_NAME,
        samples: samples.len(),
        checks: rec.checks,
        passed: rec.violations.is_empty(),
        violations: rec.violations,
    })
}

/// A square matrix of elements of `O(M(n))`, read as the coaction
/// `v_j ↦ Σ_i v_i ⊗ P_{ij}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    n: usize,
    entries: Vec<Vec<Poly>>,
}

impl PolyMatrix {
    pub fn new(n: usize, entries: Vec<Vec<Poly>>) -> Result<Self> {
        let cols = entries.first().map_or(0, Vec::len);
        if entries.iter().any(|r| r.len() != cols) {
            return Err(Error::ShapeMismatch("ragged polynomial matrix".into()));
        }
        let limit = n * n;
        if entries
            .iter()
            .flatten()
            .flat_map(|p| p.terms().keys().flatten())
            .any(|&(v, _)| v >= limit)
        {
            return Err(Error::InvalidArgument(format!(
                "entries use variables outside n = {n}"
            )));
        }
        Ok(PolyMatrix { n, entries })
    }

    /// The constant identity matrix, i.e. the trivial comodule `k^d`.
    pub fn identity(n: usize, d: usize) -> Self {
        let entries = (0..d)
            .map(|r| {
                (0..d)
                    .map(|c| if r == c { Poly::one() } else { Poly::zero() })
                    .collect()
            })
            .collect();
        PolyMatrix { n, entries }
    }

    /// The generic matrix `(e^i_j)`.
    pub fn generic(n: usize) -> Self {
        let entries = (0..n)
            .map(|i| (0..n).map(|j| Poly::var(var_index(n, 0, i, j))).collect())
            .collect();
        PolyMatrix { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.entries.first().map_or(0, Vec::len)
    }

    pub fn entry(&self, r: usize, c: usize) -> PolyElement {
        TensorPoly {
            n: self.n,
            factors: 1,
            poly: self.entries[r][c].clone(),
        }
    }

    /// Substitutes a concrete matrix for `(e^i_j)`.
    pub fn specialize(&self, g: &Matrix) -> Result<Matrix> {
        let rows = self
            .entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|p| self.wrap(p).evaluate(g))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        if rows.is_empty() {
            return Ok(Matrix::zeros(0, 0));
        }
        Matrix::from_rows(rows)
    }

    /// `ε` applied entrywise.
    pub fn counit(&self) -> Matrix {
        self.specialize(&Matrix::identity(self.n))
            .expect("identity has the right shape")
    }

    fn wrap(&self, p: &Poly) -> PolyElement {
        TensorPoly {
            n: self.n,
            factors: 1,
            poly: p.clone(),
        }
    }

    /// Common degree of the nonzero entries, if they share one.
    pub fn homogeneous_degree(&self) -> Option<Option<usize>> {
        let mut degree = None;
        for p in self.entries.iter().flatten() {
            let Some(d) = p.degree() else { continue };
            if !p.is_homogeneous_of(d) || degree.is_some_and(|e| e != d) {
                return None;
            }
            degree = Some(d);
        }
        Some(degree)
    }
}

#[derive(Serialize, Deserialize)]
struct PolyMatrixJson {
    n: usize,
    entries: Vec<Vec<BTreeMap<String, String>>>,
}

impl Serialize for PolyMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PolyMatrixJson {
            n: self.n,
            entries: self
                .entries
                .iter()
                .map(|row| row.iter().map(|p| self.wrap(p).to_key_map()).collect())
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PolyMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = PolyMatrixJson::deserialize(deserializer)?;
        let entries = raw
            .entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|m| TensorPoly::from_key_map(raw.n, 1, m).map(|t| t.poly))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        PolyMatrix::new(raw.n, entries).map_err(D::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComoduleReport {
    pub n: usize,
    pub size: usize,
    pub degree: Option<usize>,
    pub checks: usize,
    pub passed: bool,
    pub violations: Vec<Violation>,
}

/// Checks the comodule laws `Δ(P_{ij}) = Σ_k P_{ik} ⊗ P_{kj}` and
/// `ε(P) = 1` entry by entry.
pub fn check_comodule(p: &PolyMatrix) -> Result<ComoduleReport> {
    if p.rows() != p.cols() {
        return Err(Error::ShapeMismatch(format!(
            "coaction matrix is {}x{}",
            p.rows(),
            p.cols()
        )));
    }
    let degree = p.homogeneous_degree().ok_or_else(|| {
        Error::InvalidArgument("coaction matrix entries are not homogeneous of one degree".into())
    })?;
    let d = p.rows();
    let n = p.n;
    let rule = DeltaRule::standard(n);
    let mut rec = Recorder {
        checks: 0,
        violations: Vec::new(),
    };
    let second: Vec<Vec<TensorPoly>> = (0..d)
        .map(|r| {
            (0..d)
                .map(|c| TensorPoly::one(n, 1).tensor(&p.entry(r, c)))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let first: Vec<Vec<TensorPoly>> = (0..d)
        .map(|r| {
            (0..d)
                .map(|c| p.entry(r, c).tensor(&TensorPoly::one(n, 1)))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let eps = p.counit();
    for i in 0..d {
        for j in 0..d {
            let lhs = rule.apply_at(&p.entry(i, j), 0)?;
            let mut rhs = TensorPoly::zero(n, 2);
            for k in 0..d {
                rhs = rhs.add(&first[i][k].with_poly(&first[i][k].poly * &second[k][j].poly))?;
            }
            rec.check("coassociativity", lhs == rhs, || {
                (format!("entry ({i},{j})"), format!("Δ(P) = {lhs}; (P⊗1)(1⊗P) = {rhs}"))
            });
            let expect = if i == j { Q::one() } else { Q::zero() };
            rec.check("counit", eps[(i, j)] == expect, || {
                (
                    format!("entry ({i},{j})"),
                    format!("ε(P) = {}", format_q(&eps[(i, j)])),
                )
            });
        }
    }
    Ok(ComoduleReport {
        n,
        size: d,
        degree,
        checks: rec.checks,
        passed: rec.violations.is_empty(),
        violations: rec.violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    fn e(n: usize, i: usize, j: usize) -> PolyElement {
        TensorPoly::generator(n, i, j)
    }

    #[test]
    fn multiplication_examples() {
        let a = e(2, 0, 1);
        assert_eq!(multiply(&a, &TensorPoly::one(2, 1)).unwrap(), a);
        assert_eq!(
            multiply(&e(2, 0, 0), &e(2, 0, 1)).unwrap(),
            multiply(&e(2, 0, 1), &e(2, 0, 0)).unwrap()
        );
        let s = e(2, 0, 0).add(&e(2, 1, 1)).unwrap();
        let sq = multiply(&s, &s).unwrap();
        // schoolbook: a² + ab + ba + b², with ab = ba merged
        assert_eq!(sq.poly().len(), 3);
        assert_eq!(sq.to_key_map()["e[1][1]*e[2][2]"], "2");
        assert!(multiply(&e(2, 0, 0), &e(3, 0, 0)).is_err());
    }

    #[test]
    fn delta_examples() {
        let d = delta(&e(2, 0, 1)).unwrap();
        let keys: Vec<_> = d.to_key_map().into_keys().collect();
        assert_eq!(keys, vec!["e[1][1]⊗e[1][2]", "e[1][2]⊗e[2][2]"]);
        assert_eq!(delta(&TensorPoly::one(2, 1)).unwrap(), TensorPoly::one(2, 2));
        let sq = multiply(&e(2, 0, 0), &e(2, 0, 0)).unwrap();
        let d1 = delta(&e(2, 0, 0)).unwrap();
        let expect = d1.with_poly(d1.poly().pow(2));
        let dsq = delta(&sq).unwrap();
        assert_eq!(dsq, expect);
        // (a + b)² with a b = e11⊗e11 · e12⊗e21
        assert_eq!(dsq.poly().len(), 3);
    }

    #[test]
    fn counit_examples() {
        assert_eq!(counit(&e(2, 0, 1)), q(0));
        assert_eq!(counit(&TensorPoly::one(2, 1)), q(1));
        let det = multiply(&e(2, 0, 0), &e(2, 1, 1))
            .unwrap()
            .sub(&multiply(&e(2, 0, 1), &e(2, 1, 0)).unwrap())
            .unwrap();
        assert_eq!(counit(&det), q(1));
    }

    #[test]
    fn keys_round_trip() {
        let m = TensorPoly::monomial(2, [(0, 1), (1, 0), (0, 1)]);
        let map = m.to_key_map();
        assert_eq!(map.keys().next().unwrap(), "e[1][2]^2*e[2][1]");
        assert_eq!(TensorPoly::from_key_map(2, 1, &map).unwrap(), m);
        let t = e(2, 0, 0).tensor(&TensorPoly::one(2, 1)).unwrap();
        assert_eq!(t.to_key_map().keys().next().unwrap(), "e[1][1]⊗1");
        assert!(TensorPoly::parse_monomial_key(2, 1, "e[3][1]").is_err());
        assert_eq!(TensorPoly::one(2, 1).to_key_map().keys().next().unwrap(), "1");
    }

    #[test]
    fn one_variable_case_is_grouplike() {
        let t = e(1, 0, 0);
        let d = delta(&t).unwrap();
        assert_eq!(d, t.tensor(&t).unwrap());
        let r = check_bialgebra(1, 3, 0).unwrap();
        assert!(r.passed, "{:?}", r.violations);
    }

    #[test]
    fn bialgebra_laws_hold() {
        for n in 1..=3 {
            let r = check_bialgebra(n, 3, 0).unwrap();
            assert!(r.passed, "n={n}: {:?}", r.violations);
            assert_eq!(r.samples, 50);
        }
    }

    #[test]
    fn corrupted_comultiplication_is_caught() {
        let r = check_bialgebra_with(&DeltaRule::corrupted(2).unwrap(), 3, 0).unwrap();
        assert!(!r.passed);
        let v = r.violations.iter().find(|v| v.axiom == "coassociativity").unwrap();
        // Δ(e^1_1) already contains e^1_2 in its first factor
        assert_eq!(v.witness, "1·e[1][1]");
        assert!(DeltaRule::corrupted(1).is_err());
    }

    #[test]
    fn sampling_is_deterministic() {
        assert_eq!(sample_monomials(2, 3, 10, 7), sample_monomials(2, 3, 10, 7));
        assert!(sample_monomials(2, 3, 50, 0)
            .iter()
            .all(|m| m.degree().unwrap_or(0) <= 3));
    }

    #[test]
    fn comodule_examples() {
        for n in 1..=3 {
            let r = check_comodule(&PolyMatrix::generic(n)).unwrap();
            assert!(r.passed, "{:?}", r.violations);
            assert!(check_comodule(&PolyMatrix::identity(n, 3)).unwrap().passed);
        }
        // transpose of the generic matrix is an anti-coaction, not a coaction
        let t = PolyMatrix::new(
            2,
            (0..2)
                .map(|i| (0..2).map(|j| Poly::var(var_index(2, 0, j, i))).collect())
                .collect(),
        )
        .unwrap();
        let r = check_comodule(&t).unwrap();
        assert!(!r.passed);
        assert_eq!(r.violations[0].witness, "entry (0,0)");
        let mixed = PolyMatrix::new(2, vec![vec![Poly::one(), Poly::var(0)], vec![Poly::zero(), Poly::one()]]).unwrap();
        assert!(matches!(check_comodule(&mixed), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn poly_matrix_json() {
        let g = PolyMatrix::generic(2);
        let v = serde_json::to_value(&g).unwrap();
        assert_eq!(v["entries"][0][1], serde_json::json!({"e[1][2]": "1"}));
        assert_eq!(serde_json::from_value::<PolyMatrix>(v).unwrap(), g);
        let m = Matrix::from_i64(&[vec![1, 2], vec![3, 4]]);
        assert_eq!(g.specialize(&m).unwrap(), m);
        assert_eq!(g.counit(), Matrix::identity(2));
    }
}
