//! Degree-by-degree computation of the coend of the evaluation functor at
//! `V = k^n`, restricted to the representable objects `x^{⊗m}`.
//!
//! In degree `m` the coend is the space of coinvariants of
//! `(V*)^{⊗m} ⊗ V^{⊗m}` under `S_m` acting diagonally by place permutation.
//! A basis tensor `e^I ⊗ e_J` is stored at coordinate `idx(I)·n^m + idx(J)`
//! with multi-indices encoded as in [`crate::schur_eval`].

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::bialgebra::{delta, var_index, PolyElement, TensorPoly};
use crate::linalg::{EchelonBasis, SparseVec, Q};
use crate::partitions::{binomial, enumerate_partitions, schur_dimension};
use crate::perm::{all_perms, Perm};
use crate::poly::{monomial_from_vars, Monomial, Poly};
use crate::schur_eval::permute_index;
use crate::{Error, Limits, Result};

/// Which permutations generate the relations `b·σ − b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RelationGenerators {
    Adjacent,
    AllTranspositions,
}

fn generators(m: usize, which: RelationGenerators) -> Vec<Perm> {
    match which {
        RelationGenerators::Adjacent => (0..m.saturating_sub(1)).map(|i| Perm::adjacent(m, i)).collect(),
        RelationGenerators::AllTranspositions => (0..m)
            .flat_map(|a| (a + 1..m).map(move |b| Perm::transposition(m, a, b)))
            .collect(),
    }
}

fn ambient(m: usize, n: usize, limits: &Limits) -> Result<usize> {
    n.checked_pow(2 * m as u32)
        .filter(|&s| s <= limits.coend_ambient)
        .ok_or(Error::ResourceBound {
            what: "coend ambient dimension n^(2m)",
            required: n.saturating_pow(2 * m as u32),
            bound: limits.coend_ambient,
        })
}

fn split(idx: usize, n: usize, m: usize) -> (usize, usize) {
    let side = n.pow(m as u32);
    (idx / side, idx % side)
}

fn act_diagonal(sigma: &Perm, idx: usize, n: usize) -> usize {
    let m = sigma.degree();
    let (i, j) = split(idx, n, m);
    permute_index(sigma, i, n) * n.pow(m as u32) + permute_index(sigma, j, n)
}

fn relation(a: usize, b: usize) -> Option<SparseVec> {
    match a.cmp(&b) {
        std::cmp::Ordering::Equal => None,
        std::cmp::Ordering::Less => Some(vec![(a, BigInt::one()), (b, -BigInt::one())]),
        std::cmp::Ordering::Greater => Some(vec![(b, -BigInt::one()), (a, BigInt::one())]),
    }
}

fn relation_rank(m: usize, n: usize, size: usize, which: RelationGenerators) -> usize {
    let mut echelon = EchelonBasis::new(size);
    for sigma in generators(m, which) {
        for b in 0..size {
            if let Some(r) = relation(act_diagonal(&sigma, b, n), b) {
                echelon.insert(r);
            }
        }
    }
    echelon.rank()
}

/// One graded piece of the coend, compared with `Sym^m(V* ⊗ V)` and with the
/// sum over Schur modules.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoendDegree {
    pub m: usize,
    pub n: usize,
    pub ambient: usize,
    pub relation_rank: usize,
    pub coend_dim: usize,
    pub sym_dim: u64,
    pub rsk_lhs: u64,
    #[serde(rename = "match")]
    pub matches: bool,
}

pub fn coend_degree(m: usize, n: usize, limits: &Limits) -> Result<CoendDegree> {
    coend_degree_with(m, n, RelationGenerators::Adjacent, limits)
}

pub fn coend_degree_with(
    m: usize,
    n: usize,
    which: RelationGenerators,
    limits: &Limits,
) -> Result<CoendDegree> {
    let size = ambient(m, n, limits)?;
    let rank = relation_rank(m, n, size, which);
    let coend_dim = size - rank;
    let sym_dim = sym_dimension(m, n);
    let rsk_lhs = rsk_identity(m, n).lhs;
    Ok(CoendDegree {
        m,
        n,
        ambient: size,
        relation_rank: rank,
        coend_dim,
        sym_dim,
        rsk_lhs,
        matches: coend_dim as u64 == sym_dim && sym_dim == rsk_lhs,
    })
}

pub fn coend_dimension(m: usize, n: usize, limits: &Limits) -> Result<usize> {
    Ok(coend_degree(m, n, limits)?.coend_dim)
}

/// `dim Sym^m(V* ⊗ V) = C(n² + m − 1, m)`.
pub fn sym_dimension(m: usize, n: usize) -> u64 {
    if n == 0 {
        return u64::from(m == 0);
    }
    binomial((n * n + m - 1) as u64, m as u64)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RskIdentity {
    pub m: usize,
    pub n: usize,
    pub lhs: u64,
    pub rhs: u64,
    pub equal: bool,
}

/// `Σ_{λ ⊢ m, rows ≤ n} (dim S^λ(k^n))²` against `C(n² + m − 1, m)`.
pub fn rsk_identity(m: usize, n: usize) -> RskIdentity {
    let lhs = enumerate_partitions(m, Some(n))
        .iter()
        .map(|l| schur_dimension(l, n).pow(2))
        .sum();
    let rhs = sym_dimension(m, n);
    RskIdentity {
        m,
        n,
        lhs,
        rhs,
        equal: lhs == rhs,
    }
}

/// The monomial `∏_t e^{i_t}_{j_t}` attached to the basis tensor at `idx`.
fn class_monomial(idx: usize, n: usize, m: usize) -> Monomial {
    let (i, j) = split(idx, n, m);
    let (ii, jj) = (multi_index(i, n, m), multi_index(j, n, m));
    monomial_from_vars((0..m).map(|t| var_index(n, 0, ii[t], jj[t])))
}

fn multi_index(mut idx: usize, n: usize, m: usize) -> Vec<usize> {
    let mut d = vec![0; m];
    for t in (0..m).rev() {
        d[t] = idx % n;
        idx /= n;
    }
    d
}

fn to_element(n: usize, mono: Monomial) -> PolyElement {
    TensorPoly::from_poly(n, 1, Poly::term(mono, Q::one())).expect("variables in range")
}

fn describe(idx: usize, n: usize, m: usize) -> String {
    let (i, j) = split(idx, n, m);
    let fmt = |v: Vec<usize>| {
        v.iter()
            .map(|x| (x + 1).to_string())
            .collect::<Vec<_>>()
            .join(",")
    };
    format!("e^({})⊗e_({})", fmt(multi_index(i, n, m)), fmt(multi_index(j, n, m)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsoReport {
    pub m: usize,
    pub n: usize,
    pub coend_dim: usize,
    pub sym_dim: u64,
    pub image_rank: usize,
    pub well_defined: bool,
    pub bijective: bool,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// Checks that `e^I ⊗ e_J ↦ ∏_t e^{i_t}_{j_t}` kills every relation and
/// induces a bijection from the coinvariants onto `Sym^m(V* ⊗ V)`.
pub fn coend_to_sym_iso(m: usize, n: usize, limits: &Limits) -> Result<IsoReport> {
    let degree = coend_degree(m, n, limits)?;
    let size = degree.ambient;
    let mut witness = None;
    'outer: for sigma in generators(m, RelationGenerators::Adjacent) {
        for b in 0..size {
            let c = act_diagonal(&sigma, b, n);
            if class_monomial(c, n, m) != class_monomial(b, n, m) {
                witness = Some(format!(
                    "relation {} − {}",
                    describe(c, n, m),
                    describe(b, n, m)
                ));
                break 'outer;
            }
        }
    }
    let well_defined = witness.is_none();
    // each basis tensor goes to a single monomial, so the rank of the map is
    // the number of distinct monomials reached
    let image: BTreeSet<Monomial> = (0..size).map(|b| class_monomial(b, n, m)).collect();
    let image_rank = image.len();
    let bijective = image_rank == degree.coend_dim && image_rank as u64 == degree.sym_dim;
    if witness.is_none() && !bijective {
        witness = Some(format!(
            "image rank {image_rank}, coinvariants {}, Sym^{m} {}",
            degree.coend_dim, degree.sym_dim
        ));
    }
    Ok(IsoReport {
        m,
        n,
        coend_dim: degree.coend_dim,
        sym_dim: degree.sym_dim,
        image_rank,
        well_defined,
        bijective,
        passed: well_defined && bijective,
        witness,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComultiplicationReport {
    pub m1: usize,
    pub m2: usize,
    pub n: usize,
    pub product_checks: usize,
    pub coproduct_checks: usize,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// Compares the coend structure with the bialgebra through the map of
/// [`coend_to_sym_iso`]:
///
/// * concatenating representatives of degrees `m1` and `m2` must map to the
///   product of the corresponding monomials;
/// * the comultiplication `e^I ⊗ e_J ↦ Σ_K (e^I ⊗ e_K) ⊗ (e^K ⊗ e_J)`,
///   obtained by inserting the unit `1 ↦ Σ_K e_K ⊗ e^K` in the middle, must
///   map to `Δ` of the monomial, for all representatives of degree
///   `m1 + m2`.
pub fn coend_comultiplication_check(
    m1: usize,
    m2: usize,
    n: usize,
    limits: &Limits,
) -> Result<ComultiplicationReport> {
    let m = m1 + m2;
    let size1 = ambient(m1, n, limits)?;
    let size2 = ambient(m2, n, limits)?;
    let size = ambient(m, n, limits)?;
    let side = |k: usize| n.pow(k as u32);
    let mut witness = None;
    let mut product_checks = 0;
    'prod: for a in 0..size1 {
        let (i1, j1) = split(a, n, m1);
        for b in 0..size2 {
            let (i2, j2) = split(b, n, m2);
            let concat = (i1 * side(m2) + i2) * side(m) + (j1 * side(m2) + j2);
            let lhs = class_monomial(concat, n, m);
            let rhs = crate::poly::monomial_product(&class_monomial(a, n, m1), &class_monomial(b, n, m2));
            product_checks += 1;
            if lhs != rhs {
                witness = Some(format!(
                    "product of {} and {}",
                    describe(a, n, m1),
                    describe(b, n, m2)
                ));
                break 'prod;
            }
        }
    }
    let mut coproduct_checks = 0;
    if witness.is_none() {
        for c in 0..size {
            let mono = class_monomial(c, n, m);
            coproduct_checks += 1;
            let (i, j) = split(c, n, m);
            let mut lhs = Poly::zero();
            for k in 0..side(m) {
                let left = class_monomial(i * side(m) + k, n, m);
                let right = class_monomial(k * side(m) + j, n, m);
                let shifted: Monomial = right.iter().map(|&(v, e)| (v + n * n, e)).collect();
                lhs.add_term(crate::poly::monomial_product(&left, &shifted), Q::one());
            }
            let expect = delta(&to_element(n, mono))?;
            if TensorPoly::from_poly(n, 2, lhs)? != expect {
                witness = Some(format!("coproduct of {}", describe(c, n, m)));
                break;
            }
        }
    }
    Ok(ComultiplicationReport {
        m1,
        m2,
        n,
        product_checks,
        coproduct_checks,
        passed: witness.is_none(),
        witness,
    })
}

/// Number of coinvariant classes, computed by orbit counting rather than
/// elimination; used as an independent check.
pub fn orbit_count(m: usize, n: usize, limits: &Limits) -> Result<usize> {
    let size = ambient(m, n, limits)?;
    let perms = all_perms(m);
    let mut seen = vec![false; size];
    let mut orbits = 0;
    for b in 0..size {
        if seen[b] {
            continue;
        }
        orbits += 1;
        for sigma in &perms {
            seen[act_diagonal(sigma, b, n)] = true;
        }
    }
    Ok(orbits)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn dimension_examples() {
        for n in 1..=3 {
            assert_eq!(coend_dimension(0, n, &lim()).unwrap(), 1);
        }
        assert_eq!(coend_dimension(1, 2, &lim()).unwrap(), 4);
        let d = coend_degree(2, 2, &lim()).unwrap();
        assert_eq!(d.coend_dim, 10);
        assert_eq!(d.ambient, 16);
        assert_eq!(d.relation_rank, 6);
        assert!(d.matches);
        assert_eq!(
            serde_json::to_string(&d).unwrap(),
            r#"{"m":2,"n":2,"ambient":16,"relation_rank":6,"coend_dim":10,"sym_dim":10,"rsk_lhs":10,"match":true}"#
        );
    }

    #[test]
    fn sym_dimension_examples() {
        assert_eq!(sym_dimension(2, 2), 10);
        for m in 0..=6 {
            assert_eq!(sym_dimension(m, 1), 1);
        }
        for n in 0..=3 {
            assert_eq!(sym_dimension(0, n), 1);
        }
    }

    #[test]
    fn rsk_examples() {
        let r = rsk_identity(2, 2);
        assert_eq!((r.lhs, r.rhs, r.equal), (10, 10, true));
        let r = rsk_identity(3, 2);
        assert_eq!((r.lhs, r.rhs), (20, 20));
        for m in 0..=8 {
            assert!(rsk_identity(m, 1).equal);
            for n in 1..=4 {
                assert!(rsk_identity(m, n).equal, "m={m} n={n}");
            }
        }
    }

    #[test]
    fn brute_force_matches_formula_and_orbits() {
        for (m, n) in [(1, 2), (2, 2), (3, 2), (4, 2), (1, 3), (2, 3), (3, 3)] {
            let d = coend_degree(m, n, &lim()).unwrap();
            assert!(d.matches, "{d:?}");
            assert_eq!(d.coend_dim, orbit_count(m, n, &lim()).unwrap());
        }
    }

    #[test]
    fn generator_choice_does_not_matter() {
        for (m, n) in [(2, 2), (3, 2), (4, 2), (2, 3), (3, 3)] {
            let a = coend_degree_with(m, n, RelationGenerators::Adjacent, &lim()).unwrap();
            let b = coend_degree_with(m, n, RelationGenerators::AllTranspositions, &lim()).unwrap();
            assert_eq!(a.relation_rank, b.relation_rank);
        }
    }

    #[test]
    fn resource_bound() {
        // 3^8 = 6561 sits exactly on the default bound
        assert_eq!(coend_degree(4, 3, &lim()).unwrap().coend_dim, 495);
        assert!(matches!(
            coend_degree(5, 3, &lim()),
            Err(Error::ResourceBound { .. })
        ));
    }

    #[test]
    fn iso_examples() {
        let r = coend_to_sym_iso(1, 3, &lim()).unwrap();
        assert!(r.passed && r.image_rank == 9);
        let r = coend_to_sym_iso(2, 2, &lim()).unwrap();
        assert!(r.passed);
        assert_eq!((r.coend_dim, r.sym_dim), (10, 10));
        let r = coend_to_sym_iso(3, 2, &lim()).unwrap();
        assert!(r.passed);
        assert_eq!((r.coend_dim, r.sym_dim), (20, 20));
    }

    #[test]
    fn comultiplication_examples() {
        for (m1, m2, n) in [(1, 1, 2), (0, 2, 2), (2, 0, 3), (1, 0, 2), (1, 2, 2), (1, 1, 3)] {
            let r = coend_comultiplication_check(m1, m2, n, &lim()).unwrap();
            assert!(r.passed, "{r:?}");
        }
        let r = coend_comultiplication_check(1, 0, 2, &lim()).unwrap();
        assert_eq!(r.coproduct_checks, 4);
    }
}
