//! The semisimple model of the free 2-rig on one generator and its quotients.
//!
//! Simple objects are labelled by partitions. An object is a multiplicity
//! vector `λ ↦ a(λ)`, and since every simple has endomorphism ring `k`, a
//! morphism `a → b` is a family of rational matrices of shape
//! `b(λ) × a(λ)`, one per partition. 2-ideals are determined by the simple
//! objects they contain; the quotient by an ideal forgets the blocks sitting
//! at those simples.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::linalg::{format_q, parse_q, Matrix, Q};
use crate::partitions::{count_syt, enumerate_partitions, partitions_up_to, Partition};
use crate::symfunc::{plethysm_e, plethysm_h, schur_product, Basis, SymFunc};
use crate::{Error, Result};

/// An object of the free 2-rig up to isomorphism.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RigObject {
    mult: BTreeMap<Partition, u64>,
}

impl RigObject {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The tensor unit, the simple object at the empty partition.
    pub fn unit() -> Self {
        Self::simple(Partition::empty())
    }

    /// The generator `x`.
    pub fn generator() -> Self {
        Self::simple(Partition::row(1))
    }

    pub fn simple(lambda: Partition) -> Self {
        Self::from_multiplicities([(lambda, 1)])
    }

    /// `Λ^k(x)`, the simple object at the column `(1^k)`.
    pub fn exterior_generator(k: usize) -> Self {
        Self::simple(Partition::column(k))
    }

    /// Zero multiplicities are dropped.
    pub fn from_multiplicities(mult: impl IntoIterator<Item = (Partition, u64)>) -> Self {
        let mut out = Self::zero();
        for (p, m) in mult {
            if m > 0 {
                *out.mult.entry(p).or_insert(0) += m;
            }
        }
        out
    }

    /// `x^{⊗m}`; the multiplicity of `λ ⊢ m` is the number of standard
    /// tableaux of shape `λ`.
    pub fn tensor_power_of_generator(m: usize, degree_bound: usize) -> Result<Self> {
        if m > degree_bound {
            return Err(Error::DegreeOverflow {
                degree: m,
                bound: degree_bound,
            });
        }
        let mut acc = Self::unit();
        for _ in 0..m {
            acc = tensor(&acc, &Self::generator(), degree_bound)?.into_value()?;
        }
        Ok(acc)
    }

    pub fn multiplicity(&self, lambda: &Partition) -> u64 {
        self.mult.get(lambda).copied().unwrap_or(0)
    }

    pub fn support(&self) -> impl Iterator<Item = &Partition> {
        self.mult.keys()
    }

    pub fn multiplicities(&self) -> &BTreeMap<Partition, u64> {
        &self.mult
    }

    pub fn is_zero(&self) -> bool {
        self.mult.is_empty()
    }

    /// Largest degree in the support.
    pub fn degree(&self) -> Option<usize> {
        self.mult.keys().map(Partition::size).max()
    }

    pub fn to_symfunc(&self, degree_bound: usize) -> Result<SymFunc> {
        SymFunc::from_terms(
            Basis::Schur,
            degree_bound,
            self.mult
                .iter()
                .map(|(p, &m)| (p.clone(), Q::from_integer(m.into()))),
        )
    }

    pub fn from_symfunc(f: &SymFunc) -> Result<Self> {
        Ok(Self::from_multiplicities(f.natural_schur_coefficients()?))
    }
}

impl fmt::Display for RigObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mult.is_empty() {
            return write!(f, "0");
        }
        for (i, (p, m)) in self.mult.iter().enumerate() {
            if i > 0 {
                write!(f, " ⊕ ")?;
            }
            if *m == 1 {
                write!(f, "ρ{p}")?;
            } else {
                write!(f, "{m}·ρ{p}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RigObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for RigObject {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let map: BTreeMap<String, u64> = self.mult.iter().map(|(p, m)| (p.key(), *m)).collect();
        map.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RigObject {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let map = BTreeMap::<String, u64>::deserialize(deserializer)?;
        let mult = map
            .into_iter()
            .map(|(k, m)| Ok((k.parse::<Partition>()?, m)))
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        Ok(Self::from_multiplicities(mult))
    }
}

/// A value computed under a degree bound, together with whether anything
/// above the bound was discarded.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bounded<T> {
    pub value: T,
    pub truncated: bool,
}

impl<T> Bounded<T> {
    /// The value, or an error if it was truncated.
    pub fn into_value(self) -> Result<T>
    where
        T: fmt::Debug,
    {
        if self.truncated {
            Err(Error::Consistency(format!(
                "result {:?} was truncated at the degree bound",
                self.value
            )))
        } else {
            Ok(self.value)
        }
    }
}

pub fn direct_sum(a: &RigObject, b: &RigObject) -> RigObject {
    RigObject::from_multiplicities(a.mult.iter().chain(&b.mult).map(|(p, m)| (p.clone(), *m)))
}

fn check_degree(a: &RigObject, degree_bound: usize) -> Result<()> {
    match a.degree() {
        Some(d) if d > degree_bound => Err(Error::DegreeOverflow {
            degree: d,
            bound: degree_bound,
        }),
        _ => Ok(()),
    }
}

/// `a ⊗ b` with multiplicities given by Littlewood–Richardson coefficients.
/// Constituents of degree above `degree_bound` are dropped and flagged.
pub fn tensor(a: &RigObject, b: &RigObject, degree_bound: usize) -> Result<Bounded<RigObject>> {
    check_degree(a, degree_bound)?;
    check_degree(b, degree_bound)?;
    let mut mult: BTreeMap<Partition, u64> = BTreeMap::new();
    let mut truncated = false;
    for (l, x) in &a.mult {
        for (m, y) in &b.mult {
            if l.size() + m.size() > degree_bound {
                truncated = true;
                continue;
            }
            for (nu, c) in schur_product(l, m)? {
                *mult.entry(nu).or_insert(0) += x * y * c;
            }
        }
    }
    Ok(Bounded {
        value: RigObject::from_multiplicities(mult),
        truncated,
    })
}

/// `Λ^k(a)`.
pub fn lambda_power(a: &RigObject, k: usize, degree_bound: usize) -> Result<RigObject> {
    RigObject::from_symfunc(&plethysm_e(k, &a.to_symfunc(degree_bound)?)?)
}

/// `Sym^k(a)`.
pub fn sym_power(a: &RigObject, k: usize, degree_bound: usize) -> Result<RigObject> {
    RigObject::from_symfunc(&plethysm_h(k, &a.to_symfunc(degree_bound)?)?)
}

/// `dim Hom(a, b) = Σ_λ a(λ) b(λ)` by Schur's lemma.
pub fn hom_dim(a: &RigObject, b: &RigObject) -> u64 {
    a.mult.iter().map(|(p, m)| m * b.multiplicity(p)).sum()
}

/// A morphism in the semisimple model: one `target(λ) × source(λ)` block per
/// partition in both supports. All-zero blocks are not stored.
#[derive(Clone, PartialEq, Eq)]
pub struct RigMorphism {
    source: RigObject,
    target: RigObject,
    blocks: BTreeMap<Partition, Matrix>,
}

impl fmt::Debug for RigMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RigMorphism")
            .field("source", &self.source)
            .field("target", &self.target)
            .field("blocks", &self.blocks)
            .finish()
    }
}

impl RigMorphism {
    pub fn new(
        source: RigObject,
        target: RigObject,
        blocks: impl IntoIterator<Item = (Partition, Matrix)>,
    ) -> Result<Self> {
        let mut stored = BTreeMap::new();
        for (p, m) in blocks {
            let rows = target.multiplicity(&p) as usize;
            let cols = source.multiplicity(&p) as usize;
            if m.rows() != rows || m.cols() != cols {
                return Err(Error::ShapeMismatch(format!(
                    "block at {p} is {}x{}, expected {rows}x{cols}",
                    m.rows(),
                    m.cols()
                )));
            }
            if stored.contains_key(&p) {
                return Err(Error::InvalidArgument(format!("duplicate block at {p}")));
            }
            if !m.is_zero() {
                stored.insert(p, m);
            }
        }
        Ok(RigMorphism {
            source,
            target,
            blocks: stored,
        })
    }

    pub fn zero(source: RigObject, target: RigObject) -> Self {
        RigMorphism {
            source,
            target,
            blocks: BTreeMap::new(),
        }
    }

    pub fn identity(a: &RigObject) -> Self {
        RigMorphism {
            source: a.clone(),
            target: a.clone(),
            blocks: a
                .mult
                .iter()
                .map(|(p, &m)| (p.clone(), Matrix::identity(m as usize)))
                .collect(),
        }
    }

    pub fn source(&self) -> &RigObject {
        &self.source
    }

    pub fn target(&self) -> &RigObject {
        &self.target
    }

    /// Nonzero blocks.
    pub fn blocks(&self) -> &BTreeMap<Partition, Matrix> {
        &self.blocks
    }

    /// The block at `lambda`, zero if not stored.
    pub fn block(&self, lambda: &Partition) -> Matrix {
        self.blocks.get(lambda).cloned().unwrap_or_else(|| {
            Matrix::zeros(
                self.target.multiplicity(lambda) as usize,
                self.source.multiplicity(lambda) as usize,
            )
        })
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.is_empty()
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &RigMorphism) -> Result<RigMorphism> {
        if other.target != self.source {
            return Err(Error::ShapeMismatch(format!(
                "cannot compose: {} is not {}",
                other.target, self.source
            )));
        }
        let mut blocks = Vec::new();
        for (p, a) in &self.blocks {
            if let Some(b) = other.blocks.get(p) {
                blocks.push((p.clone(), a.mul(b)?));
            }
        }
        RigMorphism::new(other.source.clone(), self.target.clone(), blocks)
    }

    fn check_parallel(&self, other: &RigMorphism) -> Result<()> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::ShapeMismatch(
                "morphisms do not share source and target".into(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &RigMorphism) -> Result<RigMorphism> {
        self.check_parallel(other)?;
        let keys: BTreeSet<&Partition> = self.blocks.keys().chain(other.blocks.keys()).collect();
        let blocks = keys
            .into_iter()
            .map(|p| Ok((p.clone(), self.block(p).add(&other.block(p))?)))
            .collect::<Result<Vec<_>>>()?;
        RigMorphism::new(self.source.clone(), self.target.clone(), blocks)
    }

    pub fn sub(&self, other: &RigMorphism) -> Result<RigMorphism> {
        self.add(&other.scale(&-Q::from_integer(1.into())))
    }

    pub fn scale(&self, c: &Q) -> RigMorphism {
        if c.is_zero() {
            return RigMorphism::zero(self.source.clone(), self.target.clone());
        }
        RigMorphism {
            source: self.source.clone(),
            target: self.target.clone(),
            blocks: self
                .blocks
                .iter()
                .map(|(p, m)| (p.clone(), m.scale(c)))
                .collect(),
        }
    }

    /// Dense matrix with the blocks placed along the diagonal, in canonical
    /// partition order and with each block's rows/columns contiguous.
    pub fn to_dense(&self) -> Matrix {
        let keys: BTreeSet<&Partition> = self.source.support().chain(self.target.support()).collect();
        let blocks: Vec<Matrix> = keys.into_iter().map(|p| self.block(p)).collect();
        Matrix::block_diagonal(&blocks.iter().collect::<Vec<_>>())
    }
}

/// The image of `f`: the rank of each block.
pub fn image_object(f: &RigMorphism) -> RigObject {
    RigObject::from_multiplicities(
        f.blocks
            .iter()
            .map(|(p, m)| (p.clone(), m.rank() as u64)),
    )
}

#[derive(Serialize, Deserialize)]
struct MorphismJson {
    source: RigObject,
    target: RigObject,
    blocks: BTreeMap<String, Vec<Vec<String>>>,
}

impl Serialize for RigMorphism {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        MorphismJson {
            source: self.source.clone(),
            target: self.target.clone(),
            blocks: self
                .blocks
                .iter()
                .map(|(p, m)| {
                    let rows = m
                        .to_rows()
                        .iter()
                        .map(|r| r.iter().map(format_q).collect())
                        .collect();
                    (p.key(), rows)
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RigMorphism {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = MorphismJson::deserialize(deserializer)?;
        let blocks = raw
            .blocks
            .iter()
            .map(|(k, rows)| {
                let p: Partition = k.parse()?;
                let rows = rows
                    .iter()
                    .map(|r| r.iter().map(|x| parse_q(x)).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()?;
                let cols = raw.source.multiplicity(&p) as usize;
                let m = if rows.is_empty() {
                    Matrix::zeros(0, cols)
                } else {
                    Matrix::from_rows(rows)?
                };
                Ok((p, m))
            })
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        RigMorphism::new(raw.source, raw.target, blocks).map_err(D::Error::custom)
    }
}

/// The structure maps of a biproduct `a ⊕ b`. In each block the copies
/// coming from `a` come first.
#[derive(Clone, Debug)]
pub struct Biproduct {
    pub sum: RigObject,
    pub inject_left: RigMorphism,
    pub inject_right: RigMorphism,
    pub project_left: RigMorphism,
    pub project_right: RigMorphism,
}

pub fn biproduct(a: &RigObject, b: &RigObject) -> Biproduct {
    let sum = direct_sum(a, b);
    let mut il = Vec::new();
    let mut ir = Vec::new();
    let mut pl = Vec::new();
    let mut pr = Vec::new();
    for (p, &total) in &sum.mult {
        let (na, nb, total) = (
            a.multiplicity(p) as usize,
            b.multiplicity(p) as usize,
            total as usize,
        );
        let mut inl = Matrix::zeros(total, na);
        let mut prl = Matrix::zeros(na, total);
        for i in 0..na {
            inl[(i, i)] = Q::from_integer(1.into());
            prl[(i, i)] = Q::from_integer(1.into());
        }
        let mut inr = Matrix::zeros(total, nb);
        let mut prr = Matrix::zeros(nb, total);
        for j in 0..nb {
            inr[(na + j, j)] = Q::from_integer(1.into());
            prr[(j, na + j)] = Q::from_integer(1.into());
        }
        il.push((p.clone(), inl));
        ir.push((p.clone(), inr));
        pl.push((p.clone(), prl));
        pr.push((p.clone(), prr));
    }
    let mk = |s: &RigObject, t: &RigObject, blocks: Vec<(Partition, Matrix)>| {
        RigMorphism::new(s.clone(), t.clone(), blocks).expect("biproduct block shapes")
    };
    Biproduct {
        inject_left: mk(a, &sum, il),
        inject_right: mk(b, &sum, ir),
        project_left: mk(&sum, a, pl),
        project_right: mk(&sum, b, pr),
        sum,
    }
}

/// A 2-ideal, represented by the simple objects it contains up to a degree
/// bound. Membership above the bound is not decided.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoIdeal {
    generators: RigObject,
    degree_bound: usize,
    members: BTreeSet<Partition>,
}

impl TwoIdeal {
    /// The smallest 2-ideal containing `g`: the saturation of the support of
    /// `g` under `λ ↦ constituents of ρ_λ ⊗ x`.
    pub fn generated_by(g: &RigObject, degree_bound: usize) -> Result<Self> {
        let mut members = BTreeSet::new();
        let mut queue: VecDeque<Partition> = g
            .support()
            .filter(|p| p.size() <= degree_bound)
            .cloned()
            .collect();
        let x = Partition::row(1);
        while let Some(lambda) = queue.pop_front() {
            if !members.insert(lambda.clone()) {
                continue;
            }
            if lambda.size() < degree_bound {
                for nu in schur_product(&lambda, &x)?.into_keys() {
                    if !members.contains(&nu) {
                        queue.push_back(nu);
                    }
                }
            }
        }
        Ok(TwoIdeal {
            generators: g.clone(),
            degree_bound,
            members,
        })
    }

    pub fn generators(&self) -> &RigObject {
        &self.generators
    }

    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    /// Simple objects in the ideal, in canonical order.
    pub fn members(&self) -> &BTreeSet<Partition> {
        &self.members
    }

    pub fn contains(&self, lambda: &Partition) -> Result<bool> {
        if lambda.size() > self.degree_bound {
            return Err(Error::OutOfRange {
                partition: lambda.clone(),
                bound: self.degree_bound,
            });
        }
        Ok(self.members.contains(lambda))
    }

    /// Whether every simple constituent of `a` lies in the ideal.
    pub fn contains_object(&self, a: &RigObject) -> Result<bool> {
        for p in a.support() {
            if !self.contains(p)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// The ideal `⟨Λ^{n+1}(x)⟩` of objects killed by evaluation at `k^n`.
pub fn subdimension_ideal(n: usize, degree_bound: usize) -> Result<TwoIdeal> {
    TwoIdeal::generated_by(&RigObject::exterior_generator(n + 1), degree_bound)
}

/// Whether `f` and `g` agree modulo `ideal`, i.e. every nonzero block of
/// `f - g` sits at a simple of the ideal.
pub fn congruent(f: &RigMorphism, g: &RigMorphism, ideal: &TwoIdeal) -> Result<bool> {
    let d = f.sub(g)?;
    for p in d.blocks.keys() {
        if !ideal.contains(p)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn quotient_object(a: &RigObject, ideal: &TwoIdeal) -> Result<RigObject> {
    let mut kept = Vec::new();
    for (p, &m) in &a.mult {
        if !ideal.contains(p)? {
            kept.push((p.clone(), m));
        }
    }
    Ok(RigObject::from_multiplicities(kept))
}

/// The canonical representative of the class of `f` in the quotient: the
/// blocks at simples outside the ideal.
pub fn quotient_morphism(f: &RigMorphism, ideal: &TwoIdeal) -> Result<RigMorphism> {
    let source = quotient_object(&f.source, ideal)?;
    let target = quotient_object(&f.target, ideal)?;
    let blocks = f
        .blocks
        .iter()
        .filter(|(p, _)| source.multiplicity(p) > 0 && target.multiplicity(p) > 0)
        .map(|(p, m)| (p.clone(), m.clone()))
        .collect::<Vec<_>>();
    RigMorphism::new(source, target, blocks)
}

/// `dim Hom(a, b)` in the quotient 2-rig.
pub fn quotient_hom_dim(a: &RigObject, b: &RigObject, ideal: &TwoIdeal) -> Result<u64> {
    Ok(hom_dim(&quotient_object(a, ideal)?, &quotient_object(b, ideal)?))
}

/// A splitting `e ≡ section ∘ retraction`, `retraction ∘ section = 1` of an
/// idempotent modulo an ideal, through `middle`.
#[derive(Clone, Debug)]
pub struct Splitting {
    pub middle: RigObject,
    pub retraction: RigMorphism,
    pub section: RigMorphism,
}

/// Splits an endomorphism that is idempotent modulo `ideal` (use the empty
/// ideal for honest idempotents). The middle object is the image of `e`
/// away from the ideal; blocks inside the ideal are discarded.
pub fn split_idempotent(e: &RigMorphism, ideal: &TwoIdeal) -> Result<Splitting> {
    if e.source != e.target {
        return Err(Error::ShapeMismatch("idempotent must be an endomorphism".into()));
    }
    let defect = e.compose(e)?.sub(e)?;
    for p in defect.blocks.keys() {
        if !ideal.contains(p)? {
            return Err(Error::NotIdempotent(p.clone()));
        }
    }
    let a = &e.source;
    let mut middle = Vec::new();
    let mut sections = Vec::new();
    let mut retractions = Vec::new();
    for (p, block) in &e.blocks {
        if ideal.contains(p)? {
            continue;
        }
        let cols = block.pivot_columns();
        if cols.is_empty() {
            continue;
        }
        let image = Matrix::from_columns(
            block.rows(),
            &cols.iter().map(|&c| block.column(c)).collect::<Vec<_>>(),
        );
        // image has full column rank; solve image * r = block on independent rows
        let rows = image.pivot_rows();
        let r = image.select_rows(&rows).inverse()?.mul(&block.select_rows(&rows))?;
        if image.mul(&r)? != *block {
            return Err(Error::Consistency(format!(
                "image factorization failed at {p}"
            )));
        }
        middle.push((p.clone(), cols.len() as u64));
        sections.push((p.clone(), image));
        retractions.push((p.clone(), r));
    }
    let middle = RigObject::from_multiplicities(middle);
    Ok(Splitting {
        retraction: RigMorphism::new(a.clone(), middle.clone(), retractions)?,
        section: RigMorphism::new(middle.clone(), a.clone(), sections)?,
        middle,
    })
}

/// Sum over partitions of `m` with at most `n` rows of `(f^λ)^2`.
pub fn schur_weyl_count(m: usize, n: usize) -> u64 {
    enumerate_partitions(m, Some(n))
        .iter()
        .map(|l| count_syt(l).pow(2))
        .sum()
}

/// Partitions up to the bound that are not in the ideal.
pub fn complement(ideal: &TwoIdeal) -> Vec<Partition> {
    partitions_up_to(ideal.degree_bound)
        .into_iter()
        .filter(|p| !ideal.members.contains(p))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;
    use crate::partitions::schur_dimension;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn obj(terms: &[(&[usize], u64)]) -> RigObject {
        RigObject::from_multiplicities(terms.iter().map(|(l, m)| (p(l), *m)))
    }

    fn x() -> RigObject {
        RigObject::generator()
    }

    #[test]
    fn direct_sum_examples() {
        assert_eq!(direct_sum(&x(), &x()), obj(&[(&[1], 2)]));
        let a = obj(&[(&[2, 1], 3)]);
        assert_eq!(direct_sum(&a, &RigObject::zero()), a);
        assert_eq!(
            direct_sum(&obj(&[(&[2], 1)]), &obj(&[(&[1, 1], 1)])),
            obj(&[(&[2], 1), (&[1, 1], 1)])
        );
    }

    #[test]
    fn tensor_examples() {
        let xx = tensor(&x(), &x(), 8).unwrap();
        assert!(!xx.truncated);
        assert_eq!(xx.value, obj(&[(&[2], 1), (&[1, 1], 1)]));
        let a = obj(&[(&[2, 1], 2), (&[3], 1)]);
        assert_eq!(tensor(&a, &RigObject::unit(), 8).unwrap().value, a);
        let l2x = tensor(&RigObject::exterior_generator(2), &x(), 8).unwrap().value;
        let pieri = crate::symfunc::pieri_vertical(&p(&[1]), 2);
        assert_eq!(
            l2x,
            RigObject::from_multiplicities(pieri.into_iter().map(|l| (l, 1)))
        );
        assert_eq!(l2x, obj(&[(&[2, 1], 1), (&[1, 1, 1], 1)]));
    }

    #[test]
    fn tensor_truncation() {
        let big = obj(&[(&[4], 1)]);
        let t = tensor(&big, &obj(&[(&[3], 1)]), 6).unwrap();
        assert!(t.truncated);
        assert!(t.clone().into_value().is_err());
        assert!(matches!(
            tensor(&obj(&[(&[5, 2], 1)]), &x(), 6),
            Err(Error::DegreeOverflow { .. })
        ));
        assert!(matches!(
            RigObject::tensor_power_of_generator(7, 6),
            Err(Error::DegreeOverflow { degree: 7, bound: 6 })
        ));
    }

    #[test]
    fn tensor_powers_of_generator() {
        for m in 0..=6 {
            let t = RigObject::tensor_power_of_generator(m, 8).unwrap();
            for l in enumerate_partitions(m, None) {
                assert_eq!(t.multiplicity(&l), count_syt(&l), "{l}");
            }
        }
    }

    #[test]
    fn lambda_and_sym_power_examples() {
        for n in 0..=4 {
            assert_eq!(
                lambda_power(&x(), n + 1, 8).unwrap(),
                RigObject::exterior_generator(n + 1)
            );
        }
        let two_x = direct_sum(&x(), &x());
        let l2 = lambda_power(&two_x, 2, 8).unwrap();
        assert_eq!(l2, obj(&[(&[2], 1), (&[1, 1], 3)]));
        // dimension check: Λ²(k^{2n}) has dimension C(2n, 2)
        for n in 1..=2u64 {
            let dim: u64 = l2
                .multiplicities()
                .iter()
                .map(|(l, m)| m * schur_dimension(l, n as usize))
                .sum();
            assert_eq!(dim, (2 * n) * (2 * n - 1) / 2);
        }
        let a = obj(&[(&[2, 1], 2)]);
        assert_eq!(sym_power(&a, 0, 8).unwrap(), RigObject::unit());
        assert_eq!(sym_power(&x(), 3, 8).unwrap(), obj(&[(&[3], 1)]));
    }

    #[test]
    fn hom_dim_examples() {
        assert_eq!(hom_dim(&x(), &x()), 1);
        let x3 = RigObject::tensor_power_of_generator(3, 8).unwrap();
        assert_eq!(hom_dim(&x3, &x3), 6);
        assert_eq!(hom_dim(&x3, &RigObject::zero()), 0);
    }

    fn sample_morphism() -> RigMorphism {
        let a = obj(&[(&[2], 2), (&[1, 1], 1)]);
        let b = obj(&[(&[2], 1), (&[1, 1], 2), (&[3], 1)]);
        RigMorphism::new(
            a,
            b,
            [
                (p(&[2]), Matrix::from_i64(&[vec![1, -2]])),
                (p(&[1, 1]), Matrix::from_i64(&[vec![3], vec![0]])),
            ],
        )
        .unwrap()
    }

    #[test]
    fn morphism_algebra() {
        let f = sample_morphism();
        assert_eq!(RigMorphism::identity(f.target()).compose(&f).unwrap(), f);
        assert_eq!(f.compose(&RigMorphism::identity(f.source())).unwrap(), f);
        assert!(f.add(&f.scale(&q(-1))).unwrap().is_zero());
        assert!(f.compose(&f).is_err());
        let bad = RigMorphism::new(
            x(),
            x(),
            [(p(&[1]), Matrix::from_i64(&[vec![1, 2]]))],
        );
        assert!(matches!(bad, Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn blockwise_product_matches_dense_embedding() {
        let a = obj(&[(&[2], 2), (&[1, 1], 2)]);
        let f = RigMorphism::new(
            a.clone(),
            a.clone(),
            [
                (p(&[2]), Matrix::from_i64(&[vec![1, 2], vec![3, 4]])),
                (p(&[1, 1]), Matrix::from_i64(&[vec![0, 1], vec![-1, 2]])),
            ],
        )
        .unwrap();
        let g = RigMorphism::new(
            a.clone(),
            a,
            [
                (p(&[2]), Matrix::from_i64(&[vec![2, 0], vec![1, 1]])),
                (p(&[1, 1]), Matrix::from_i64(&[vec![5, -1], vec![0, 3]])),
            ],
        )
        .unwrap();
        let dense = f.to_dense().mul(&g.to_dense()).unwrap();
        assert_eq!(f.compose(&g).unwrap().to_dense(), dense);
    }

    #[test]
    fn image_examples() {
        let a = obj(&[(&[2], 2), (&[1], 1)]);
        assert_eq!(image_object(&RigMorphism::identity(&a)), a);
        assert_eq!(image_object(&RigMorphism::zero(a.clone(), a.clone())), RigObject::zero());
        let two = obj(&[(&[2], 2)]);
        let f = RigMorphism::new(
            two.clone(),
            two,
            [(p(&[2]), Matrix::from_i64(&[vec![1, 2], vec![2, 4]]))],
        )
        .unwrap();
        assert_eq!(image_object(&f), obj(&[(&[2], 1)]));
    }

    #[test]
    fn ideal_examples() {
        for n in 1..=3 {
            let ideal = subdimension_ideal(n, 8).unwrap();
            for l in partitions_up_to(8) {
                assert_eq!(ideal.contains(&l).unwrap(), l.rows() > n, "{l} n={n}");
            }
        }
        let empty = TwoIdeal::generated_by(&RigObject::zero(), 8).unwrap();
        assert!(empty.members().is_empty());
        let all = TwoIdeal::generated_by(&RigObject::unit(), 8).unwrap();
        assert_eq!(all.members().len(), partitions_up_to(8).len());
        assert!(matches!(
            all.contains(&Partition::row(9)),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn ideal_absorbs_all_simples() {
        // closure under ⊗ρ_μ for every μ, not just μ = (1)
        let ideal = TwoIdeal::generated_by(&obj(&[(&[2, 2], 1)]), 7).unwrap();
        for l in ideal.members() {
            for mu in partitions_up_to(7 - l.size()) {
                for nu in schur_product(l, &mu).unwrap().keys() {
                    assert!(ideal.contains(nu).unwrap(), "{l} ⊗ {mu} ∋ {nu}");
                }
            }
        }
    }

    #[test]
    fn congruence_examples() {
        let ideal = subdimension_ideal(1, 8).unwrap();
        let x2 = RigObject::tensor_power_of_generator(2, 8).unwrap();
        let f = RigMorphism::identity(&x2);
        assert!(congruent(&f, &f, &ideal).unwrap());
        let at_11 = RigMorphism::new(x2.clone(), x2.clone(), [(p(&[1, 1]), Matrix::identity(1))]).unwrap();
        assert!(congruent(&at_11, &RigMorphism::zero(x2.clone(), x2.clone()), &ideal).unwrap());
        let at_2 = RigMorphism::new(x2.clone(), x2.clone(), [(p(&[2]), Matrix::identity(1))]).unwrap();
        assert!(!congruent(&at_2, &RigMorphism::zero(x2.clone(), x2), &ideal).unwrap());
    }

    #[test]
    fn quotient_examples() {
        for n in 0..=3 {
            let ideal = subdimension_ideal(n, 8).unwrap();
            let top = RigObject::exterior_generator(n + 1);
            assert_eq!(quotient_object(&top, &ideal).unwrap(), RigObject::zero());
        }
        let ideal = subdimension_ideal(1, 8).unwrap();
        let x2 = RigObject::tensor_power_of_generator(2, 8).unwrap();
        assert_eq!(quotient_object(&x2, &ideal).unwrap(), obj(&[(&[2], 1)]));
        let q_id = quotient_morphism(&RigMorphism::identity(&x2), &ideal).unwrap();
        assert_eq!(q_id, RigMorphism::identity(&obj(&[(&[2], 1)])));
        let x3 = RigObject::tensor_power_of_generator(3, 8).unwrap();
        let ideal2 = subdimension_ideal(2, 8).unwrap();
        assert_eq!(quotient_hom_dim(&x3, &x3, &ideal2).unwrap(), 5);
    }

    #[test]
    fn idempotent_splitting_examples() {
        let none = TwoIdeal::generated_by(&RigObject::zero(), 8).unwrap();
        let a = obj(&[(&[2], 2), (&[1, 1], 1)]);
        let s = split_idempotent(&RigMorphism::identity(&a), &none).unwrap();
        assert_eq!(s.middle, a);
        assert_eq!(s.retraction, RigMorphism::identity(&a));
        assert_eq!(s.section, RigMorphism::identity(&a));

        let s = split_idempotent(&RigMorphism::zero(a.clone(), a.clone()), &none).unwrap();
        assert_eq!(s.middle, RigObject::zero());

        let x2 = RigObject::tensor_power_of_generator(2, 8).unwrap();
        let sym = RigMorphism::new(x2.clone(), x2.clone(), [(p(&[2]), Matrix::identity(1))]).unwrap();
        let s = split_idempotent(&sym, &none).unwrap();
        assert_eq!(s.middle, obj(&[(&[2], 1)]));
        assert_eq!(s.section.compose(&s.retraction).unwrap(), sym);
        assert_eq!(
            s.retraction.compose(&s.section).unwrap(),
            RigMorphism::identity(&s.middle)
        );

        let not_idem = sym.scale(&q(2));
        assert!(matches!(
            split_idempotent(&not_idem, &none),
            Err(Error::NotIdempotent(_))
        ));
    }

    #[test]
    fn splitting_modulo_an_ideal() {
        let ideal = subdimension_ideal(1, 8).unwrap();
        let x2 = RigObject::tensor_power_of_generator(2, 8).unwrap();
        // not idempotent at (1,1), but (1,1) is in the ideal
        let e = RigMorphism::new(
            x2.clone(),
            x2.clone(),
            [(p(&[2]), Matrix::identity(1)), (p(&[1, 1]), Matrix::from_i64(&[vec![3]]))],
        )
        .unwrap();
        let s = split_idempotent(&e, &ideal).unwrap();
        assert_eq!(s.middle, obj(&[(&[2], 1)]));
        assert!(congruent(&s.section.compose(&s.retraction).unwrap(), &e, &ideal).unwrap());
    }

    #[test]
    fn biproduct_equations() {
        let a = obj(&[(&[2], 1), (&[1, 1], 2)]);
        let b = obj(&[(&[2], 2), (&[3], 1)]);
        let bp = biproduct(&a, &b);
        assert_eq!(bp.project_left.compose(&bp.inject_left).unwrap(), RigMorphism::identity(&a));
        assert_eq!(bp.project_right.compose(&bp.inject_right).unwrap(), RigMorphism::identity(&b));
        assert!(bp.project_left.compose(&bp.inject_right).unwrap().is_zero());
        assert!(bp.project_right.compose(&bp.inject_left).unwrap().is_zero());
        let total = bp
            .inject_left
            .compose(&bp.project_left)
            .unwrap()
            .add(&bp.inject_right.compose(&bp.project_right).unwrap())
            .unwrap();
        assert_eq!(total, RigMorphism::identity(&bp.sum));

        // the same equations after passing to the quotient by ⟨Λ²⟩
        let ideal = subdimension_ideal(1, 8).unwrap();
        let qm = |f: &RigMorphism| quotient_morphism(f, &ideal).unwrap();
        let qa = quotient_object(&a, &ideal).unwrap();
        assert_eq!(
            qm(&bp.project_left).compose(&qm(&bp.inject_left)).unwrap(),
            RigMorphism::identity(&qa)
        );
        let total_q = qm(&bp.inject_left)
            .compose(&qm(&bp.project_left))
            .unwrap()
            .add(&qm(&bp.inject_right).compose(&qm(&bp.project_right)).unwrap())
            .unwrap();
        assert_eq!(total_q, RigMorphism::identity(&quotient_object(&bp.sum, &ideal).unwrap()));
    }

    #[test]
    fn json_round_trip() {
        let a = obj(&[(&[2, 1], 3), (&[1], 1)]);
        let v = serde_json::to_value(&a).unwrap();
        assert_eq!(v, serde_json::json!({"[1]": 1, "[2,1]": 3}));
        assert_eq!(serde_json::from_value::<RigObject>(v).unwrap(), a);
        let f = sample_morphism();
        let v = serde_json::to_value(&f).unwrap();
        assert_eq!(v["blocks"]["[2]"], serde_json::json!([["1", "-2"]]));
        assert_eq!(serde_json::from_value::<RigMorphism>(v).unwrap(), f);
    }
}
