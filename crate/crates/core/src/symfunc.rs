//! Symmetric functions truncated at a degree bound.
//!
//! Elements are finite rational combinations of Schur functions `s_λ` or
//! power sums `p_μ`. Products and plethysms are computed in the power-sum
//! basis, where `p_μ p_ν = p_{μ∪ν}` and `p_r[p_ν] = p_{rν}`, and converted
//! back with the character table:
//!
//! ```text
//! s_λ = Σ_μ χ^λ(μ) p_μ / z_μ        p_μ = Σ_λ χ^λ(μ) s_λ
//! ```

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, LazyLock, Mutex};

use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::characters::{centralizer_order, character_table};
use crate::linalg::{format_q, parse_q, Q};
use crate::partitions::{enumerate_partitions, schur_dimension, Partition};
use crate::{cache, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Basis {
    #[serde(rename = "schur")]
    Schur,
    #[serde(rename = "powersum")]
    PowerSum,
}

/// A symmetric function in a fixed basis, with every term of degree at most
/// `degree_bound`. `truncated` records that some product terms above the
/// bound were dropped while computing this value.
#[derive(Clone, PartialEq, Eq)]
pub struct SymFunc {
    basis: Basis,
    degree_bound: usize,
    coeffs: BTreeMap<Partition, Q>,
    truncated: bool,
}

type Terms = BTreeMap<Partition, Q>;

fn add_term(terms: &mut Terms, key: Partition, c: Q) {
    if c.is_zero() {
        return;
    }
    let entry = terms.entry(key);
    match entry {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

impl SymFunc {
    pub fn zero(basis: Basis, degree_bound: usize) -> Self {
        SymFunc {
            basis,
            degree_bound,
            coeffs: BTreeMap::new(),
            truncated: false,
        }
    }

    /// `s_∅ = p_∅ = 1`.
    pub fn one(degree_bound: usize) -> Self {
        Self::schur(&Partition::empty(), degree_bound).expect("empty partition fits any bound")
    }

    pub fn schur(lambda: &Partition, degree_bound: usize) -> Result<Self> {
        Self::from_terms(Basis::Schur, degree_bound, [(lambda.clone(), Q::one())])
    }

    pub fn power_sum(mu: &Partition, degree_bound: usize) -> Result<Self> {
        Self::from_terms(Basis::PowerSum, degree_bound, [(mu.clone(), Q::one())])
    }

    pub fn from_terms(
        basis: Basis,
        degree_bound: usize,
        terms: impl IntoIterator<Item = (Partition, Q)>,
    ) -> Result<Self> {
        let mut out = Self::zero(basis, degree_bound);
        for (p, c) in terms {
            if p.size() > degree_bound {
                return Err(Error::DegreeOverflow {
                    degree: p.size(),
                    bound: degree_bound,
                });
            }
            add_term(&mut out.coeffs, p, c);
        }
        Ok(out)
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, p: &Partition) -> Q {
        self.coeffs.get(p).cloned().unwrap_or_else(Q::zero)
    }

    /// Nonzero terms in canonical partition order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Q)> {
        self.coeffs.iter()
    }

    /// Largest degree with a nonzero term.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().map(Partition::size).max()
    }

    pub fn with_degree_bound(&self, degree_bound: usize) -> Result<Self> {
        Self::from_terms(self.basis, degree_bound, self.coeffs.clone())
    }

    fn check_bound(&self, other: &SymFunc) -> Result<()> {
        if self.degree_bound != other.degree_bound {
            return Err(Error::DegreeBoundMismatch {
                left: self.degree_bound,
                right: other.degree_bound,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &SymFunc) -> Result<SymFunc> {
        self.check_bound(other)?;
        let other = other.to_basis(self.basis)?;
        let mut out = self.clone();
        for (p, c) in other.coeffs {
            add_term(&mut out.coeffs, p, c);
        }
        out.truncated |= other.truncated;
        Ok(out)
    }

    pub fn sub(&self, other: &SymFunc) -> Result<SymFunc> {
        self.add(&other.scale(&-Q::one()))
    }

    pub fn scale(&self, c: &Q) -> SymFunc {
        let mut out = self.clone();
        out.coeffs = if c.is_zero() {
            BTreeMap::new()
        } else {
            self.coeffs.iter().map(|(p, x)| (p.clone(), x * c)).collect()
        };
        out
    }

    pub fn to_basis(&self, basis: Basis) -> Result<SymFunc> {
        if basis == self.basis {
            return Ok(self.clone());
        }
        let mut out = SymFunc::zero(basis, self.degree_bound);
        out.truncated = self.truncated;
        for (p, c) in &self.coeffs {
            let table = character_table(p.size())?;
            match basis {
                // s_λ = Σ_μ χ^λ(μ) / z_μ p_μ
                Basis::PowerSum => {
                    for mu in table.partitions() {
                        let chi = table.value(p, mu);
                        if chi != 0 {
                            let z = centralizer_order(mu);
                            add_term(
                                &mut out.coeffs,
                                mu.clone(),
                                c * Q::new(chi.into(), z.into()),
                            );
                        }
                    }
                }
                // p_μ = Σ_λ χ^λ(μ) s_λ
                Basis::Schur => {
                    for lambda in table.partitions() {
                        let chi = table.value(lambda, p);
                        if chi != 0 {
                            add_term(&mut out.coeffs, lambda.clone(), c * Q::from_integer(chi.into()));
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Evaluates the dimension homomorphism `s_λ ↦ dim S^λ(k^n)`.
    pub fn dimension_at(&self, n: usize) -> Result<Q> {
        let schur = self.to_basis(Basis::Schur)?;
        Ok(schur
            .coeffs
            .iter()
            .fold(Q::zero(), |acc, (l, c)| acc + c * Q::from_integer(schur_dimension(l, n).into())))
    }

    /// Whether this is a combination of Schur functions with nonnegative
    /// integer coefficients (the character of an actual object).
    pub fn is_effective(&self) -> Result<bool> {
        let schur = self.to_basis(Basis::Schur)?;
        Ok(schur
            .coeffs
            .values()
            .all(|c| c.is_integer() && !c.is_negative()))
    }

    /// Schur coefficients as natural numbers; errors if any is negative or
    /// fractional.
    pub fn natural_schur_coefficients(&self) -> Result<BTreeMap<Partition, u64>> {
        let schur = self.to_basis(Basis::Schur)?;
        schur
            .coeffs
            .iter()
            .map(|(p, c)| {
                let v = c
                    .is_integer()
                    .then(|| c.to_integer().to_u64())
                    .flatten()
                    .ok_or_else(|| {
                        Error::Consistency(format!("Schur coefficient {c} at {p} is not a natural number"))
                    })?;
                Ok((p.clone(), v))
            })
            .collect()
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sym = match self.basis {
            Basis::Schur => "s",
            Basis::PowerSum => "p",
        };
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({}){}{}", format_q(c), sym, p)?;
        }
        Ok(())
    }
}

pub fn schur_to_powersum(f: &SymFunc) -> Result<SymFunc> {
    if f.basis != Basis::Schur {
        return Err(Error::InvalidArgument("expected a Schur-basis element".into()));
    }
    f.to_basis(Basis::PowerSum)
}

pub fn powersum_to_schur(f: &SymFunc) -> Result<SymFunc> {
    if f.basis != Basis::PowerSum {
        return Err(Error::InvalidArgument("expected a power-sum element".into()));
    }
    f.to_basis(Basis::Schur)
}

/// Product of two power-sum term maps, dropping terms above `bound`.
fn powersum_product(a: &Terms, b: &Terms, bound: usize) -> (Terms, bool) {
    let mut out = Terms::new();
    let mut truncated = false;
    for (mu, x) in a {
        for (nu, y) in b {
            if mu.size() + nu.size() > bound {
                truncated = true;
                continue;
            }
            add_term(&mut out, mu.union(nu), x * y);
        }
    }
    (out, truncated)
}

/// Product in the Schur basis. Terms whose degree exceeds the shared bound
/// are dropped and the result is flagged as truncated.
pub fn multiply(f: &SymFunc, g: &SymFunc) -> Result<SymFunc> {
    f.check_bound(g)?;
    let a = f.to_basis(Basis::PowerSum)?;
    let b = g.to_basis(Basis::PowerSum)?;
    let (terms, truncated) = powersum_product(&a.coeffs, &b.coeffs, f.degree_bound);
    let mut product = SymFunc {
        basis: Basis::PowerSum,
        degree_bound: f.degree_bound,
        coeffs: terms,
        truncated: truncated || f.truncated || g.truncated,
    }
    .to_basis(Basis::Schur)?;
    product.truncated |= truncated;
    Ok(product)
}

/// Partitions obtained from `lambda` by adding `k` boxes, no two in the same
/// row, in canonical order.
pub fn pieri_vertical(lambda: &Partition, k: usize) -> Vec<Partition> {
    let rows = lambda.rows() + k;
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(k);

    fn go(
        lambda: &Partition,
        start: usize,
        rows: usize,
        left: usize,
        chosen: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if left == 0 {
            let mut parts: Vec<usize> = (0..rows).map(|i| lambda.part(i)).collect();
            for &r in chosen.iter() {
                parts[r] += 1;
            }
            if let Ok(p) = Partition::new(parts) {
                out.push(p);
            }
            return;
        }
        for r in start..rows {
            chosen.push(r);
            go(lambda, r + 1, rows, left - 1, chosen, out);
            chosen.pop();
        }
    }
    go(lambda, 0, rows, k, &mut chosen, &mut out);
    out.sort();
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Outer {
    Elementary,
    Complete,
    PowerSum,
}

/// `e_k[f]`, realizing the exterior power `Λ^k` on characters.
pub fn plethysm_e(k: usize, f: &SymFunc) -> Result<SymFunc> {
    plethysm(Outer::Elementary, k, f)
}

/// `h_k[f]`, realizing the symmetric power `Sym^k` on characters.
pub fn plethysm_h(k: usize, f: &SymFunc) -> Result<SymFunc> {
    plethysm(Outer::Complete, k, f)
}

/// `p_k[f]` (Adams operation). The result is in general a virtual character.
pub fn plethysm_p(k: usize, f: &SymFunc) -> Result<SymFunc> {
    plethysm(Outer::PowerSum, k, f)
}

fn plethysm(outer: Outer, k: usize, f: &SymFunc) -> Result<SymFunc> {
    let bound = f.degree_bound;
    if !f.is_effective()? {
        return Err(Error::InvalidArgument(format!(
            "plethysm needs a natural combination of Schur functions, got {f}"
        )));
    }
    let degree = f.degree().unwrap_or(0);
    if k * degree > bound {
        return Err(Error::DegreeOverflow {
            degree: k * degree,
            bound,
        });
    }
    let inner = f.to_basis(Basis::PowerSum)?.coeffs;

    // outer function in power sums: Σ_μ a_μ p_μ
    let outer_terms: Vec<(Partition, Q)> = match outer {
        Outer::PowerSum => vec![(Partition::row(k), Q::one())],
        Outer::Elementary | Outer::Complete => enumerate_partitions(k, None)
            .into_iter()
            .map(|mu| {
                let sign = if outer == Outer::Elementary && (k - mu.rows()) % 2 == 1 {
                    -1
                } else {
                    1
                };
                let c = Q::new(sign.into(), centralizer_order(&mu).into());
                (mu, c)
            })
            .collect(),
    };

    // p_r[f] for every part r that occurs
    let mut adams: HashMap<usize, Terms> = HashMap::new();
    let mut result = Terms::new();
    for (mu, a) in outer_terms {
        let mut term: Terms = [(Partition::empty(), a)].into_iter().collect();
        for &r in mu.parts() {
            let pr = adams.entry(r).or_insert_with(|| {
                inner
                    .iter()
                    .map(|(nu, c)| (nu.scaled(r), c.clone()))
                    .collect()
            });
            let (next, _) = powersum_product(&term, pr, bound);
            term = next;
        }
        for (p, c) in term {
            add_term(&mut result, p, c);
        }
    }
    let value = SymFunc {
        basis: Basis::PowerSum,
        degree_bound: bound,
        coeffs: result,
        truncated: false,
    }
    .to_basis(Basis::Schur)?;
    if outer != Outer::PowerSum {
        value.natural_schur_coefficients()?;
    }
    Ok(value)
}

/// Littlewood–Richardson structure constants `c^ν_{λμ}` for `s_λ s_μ`.
///
/// Tables are built per total degree for all pairs at once, memoized in
/// process and stored as `lr_<deg>.json` in the configured cache directory.
pub fn schur_product(lambda: &Partition, mu: &Partition) -> Result<BTreeMap<Partition, u64>> {
    let table = lr_table(lambda.size() + mu.size())?;
    Ok(table
        .get(&(lambda.clone(), mu.clone()))
        .cloned()
        .unwrap_or_default())
}

type LrTable = HashMap<(Partition, Partition), BTreeMap<Partition, u64>>;

static LR_TABLES: LazyLock<Mutex<HashMap<usize, Arc<LrTable>>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

pub fn lr_cache_file_name(degree: usize) -> String {
    format!("lr_{degree}.json")
}

#[derive(Serialize, Deserialize)]
struct LrFile {
    degree: usize,
    products: BTreeMap<String, BTreeMap<String, u64>>,
}

fn lr_table(degree: usize) -> Result<Arc<LrTable>> {
    if let Some(t) = LR_TABLES.lock().unwrap_or_else(|e| e.into_inner()).get(&degree) {
        return Ok(t.clone());
    }
    let table = match cache::load::<LrFile>(&lr_cache_file_name(degree)).and_then(parse_lr_file) {
        Some(t) if t.len() == lr_pair_count(degree) => t,
        _ => {
            let t = compute_lr_table(degree)?;
            cache::store(&lr_cache_file_name(degree), &lr_file(degree, &t))?;
            t
        }
    };
    let table = Arc::new(table);
    LR_TABLES
        .lock()
        .unwrap_or_else(|e| e.into_inner())
        .insert(degree, table.clone());
    Ok(table)
}

fn lr_pair_count(degree: usize) -> usize {
    (0..=degree)
        .map(|a| enumerate_partitions(a, None).len() * enumerate_partitions(degree - a, None).len())
        .sum()
}

fn compute_lr_table(degree: usize) -> Result<LrTable> {
    let mut table = LrTable::new();
    for a in 0..=degree {
        for lambda in enumerate_partitions(a, None) {
            for mu in enumerate_partitions(degree - a, None) {
                let product = multiply(
                    &SymFunc::schur(&lambda, degree)?,
                    &SymFunc::schur(&mu, degree)?,
                )?;
                table.insert((lambda.clone(), mu), product.natural_schur_coefficients()?);
            }
        }
    }
    Ok(table)
}

fn lr_file(degree: usize, table: &LrTable) -> LrFile {
    LrFile {
        degree,
        products: table
            .iter()
            .map(|((l, m), prod)| {
                (
                    format!("{l}*{m}"),
                    prod.iter().map(|(p, c)| (p.key(), *c)).collect(),
                )
            })
            .collect(),
    }
}

fn parse_lr_file(file: LrFile) -> Option<LrTable> {
    file.products
        .into_iter()
        .map(|(k, prod)| {
            let (l, m) = k.split_once('*')?;
            let key = (l.parse().ok()?, m.parse().ok()?);
            let prod = prod
                .into_iter()
                .map(|(p, c)| Some((p.parse().ok()?, c)))
                .collect::<Option<BTreeMap<Partition, u64>>>()?;
            Some((key, prod))
        })
        .collect()
}

#[derive(Serialize, Deserialize)]
struct SymFuncJson {
    basis: Basis,
    degree_bound: usize,
    coeffs: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    truncated: bool,
}

impl Serialize for SymFunc {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SymFuncJson {
            basis: self.basis,
            degree_bound: self.degree_bound,
            coeffs: self
                .coeffs
                .iter()
                .map(|(p, c)| (p.key(), format_q(c)))
                .collect(),
            truncated: self.truncated,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SymFunc {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = SymFuncJson::deserialize(deserializer)?;
        let terms = raw
            .coeffs
            .iter()
            .map(|(p, c)| Ok((p.parse::<Partition>()?, parse_q(c)?)))
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        let mut f = SymFunc::from_terms(raw.basis, raw.degree_bound, terms).map_err(D::Error::custom)?;
        f.truncated = raw.truncated;
        Ok(f)
    }
}
