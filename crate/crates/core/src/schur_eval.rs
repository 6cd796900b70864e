//! Evaluation of the free 2-rig at `x = k^n`.
//!
//! Schur modules are realized as images of Young symmetrizers acting on
//! `(k^n)^{⊗m}` by place permutations. A basis vector `e_I` with multi-index
//! `I = (i_1, ..., i_m)` has coordinate `Σ_t i_t n^{m-1-t}`, so the first
//! tensor factor varies slowest. A permutation `σ` sends `e_I` to `e_J` with
//! `j_{σ(t)} = i_t`, which makes `σ ↦ P_σ` a left action.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::bialgebra::{var_index, PolyMatrix};
use crate::cache;
use crate::characters::SeminormalRep;
use crate::linalg::{format_q, parse_q, EchelonBasis, Matrix, SparseVec, Q};
use crate::partitions::{enumerate_partitions, schur_dimension, Partition};
use crate::perm::{all_perms, block_stabilizer, factorial, Perm};
use crate::poly::{monomial_from_vars, Poly};
use crate::rig::{RigMorphism, RigObject};
use crate::{Error, Limits, Result};

fn tensor_size(n: usize, m: usize, limits: &Limits) -> Result<usize> {
    let size = n
        .checked_pow(m as u32)
        .filter(|&s| s <= limits.tensor_coords)
        .ok_or(Error::ResourceBound {
            what: "tensor coordinates n^m",
            required: n.saturating_pow(m as u32),
            bound: limits.tensor_coords,
        })?;
    Ok(size)
}

fn digits(mut idx: usize, n: usize, m: usize) -> Vec<usize> {
    let mut d = vec![0; m];
    for t in (0..m).rev() {
        d[t] = idx % n;
        idx /= n;
    }
    d
}

fn index_of(digits: &[usize], n: usize) -> usize {
    digits.iter().fold(0, |acc, &i| acc * n + i)
}

/// Coordinate of `P_σ e_I`.
pub fn permute_index(sigma: &Perm, idx: usize, n: usize) -> usize {
    let m = sigma.degree();
    let src = digits(idx, n, m);
    let mut dst = vec![0; m];
    for (t, &i) in src.iter().enumerate() {
        dst[sigma.apply(t)] = i;
    }
    index_of(&dst, n)
}

/// The terms `(w, sgn q)` of `c_λ = Σ_{q ∈ C} sgn(q) q · Σ_{p ∈ R} p` for the
/// tableau filled row by row with `0..m`.
fn symmetrizer_terms(lambda: &Partition) -> Vec<(Perm, i64)> {
    let m = lambda.size();
    let mut rows = Vec::new();
    let mut start = 0;
    for &len in lambda.parts() {
        rows.push((start..start + len).collect::<Vec<_>>());
        start += len;
    }
    let cols: Vec<Vec<usize>> = (0..lambda.part(0))
        .map(|c| rows.iter().filter(|r| r.len() > c).map(|r| r[c]).collect())
        .collect();
    let row_group = block_stabilizer(m, &rows);
    let col_group = block_stabilizer(m, &cols);
    let mut terms = Vec::with_capacity(row_group.len() * col_group.len());
    for q in &col_group {
        for p in &row_group {
            terms.push((q.compose(p), q.sign()));
        }
    }
    terms
}

fn symmetrizer_column(terms: &[(Perm, i64)], idx: usize, n: usize) -> SparseVec {
    let mut acc: std::collections::BTreeMap<usize, i64> = std::collections::BTreeMap::new();
    for (w, s) in terms {
        *acc.entry(permute_index(w, idx, n)).or_insert(0) += s;
    }
    acc.into_iter()
        .filter(|&(_, c)| c != 0)
        .map(|(i, c)| (i, BigInt::from(c)))
        .collect()
}

/// Matrix of the Young symmetrizer `c_λ` on `(k^n)^{⊗m}`, `m = |λ|`.
pub fn young_symmetrizer_matrix(lambda: &Partition, n: usize, limits: &Limits) -> Result<Matrix> {
    let size = tensor_size(n, lambda.size(), limits)?;
    let terms = symmetrizer_terms(lambda);
    let mut out = Matrix::zeros(size, size);
    for col in 0..size {
        for (row, c) in symmetrizer_column(&terms, col, n) {
            out[(row, col)] = Q::from_integer(c);
        }
    }
    Ok(out)
}

/// The image of `c_λ` in `(k^n)^{⊗m}` with a fixed basis: the first
/// linearly independent columns of the symmetrizer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurModule {
    partition: Partition,
    n: usize,
    basis: Matrix,
    pivot_rows: Vec<usize>,
    left_inverse: Matrix,
}

#[derive(Serialize, Deserialize)]
struct SchurModuleFile {
    partition: Partition,
    n: usize,
    basis: Vec<Vec<String>>,
}

pub fn cache_file_name(lambda: &Partition, n: usize) -> String {
    let label = if lambda.is_empty() {
        "0".to_string()
    } else {
        lambda
            .parts()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join("-")
    };
    format!("schurmod_{label}_{n}.json")
}

impl SchurModule {
    pub fn new(lambda: &Partition, n: usize, limits: &Limits) -> Result<Self> {
        let size = tensor_size(n, lambda.size(), limits)?;
        let name = cache_file_name(lambda, n);
        let columns = match cache::load::<SchurModuleFile>(&name)
            .and_then(|f| Self::columns_from_file(&f, lambda, n, size))
        {
            Some(cols) => cols,
            None => {
                let cols = Self::compute_columns(lambda, n, size);
                cache::store(
                    &name,
                    &SchurModuleFile {
                        partition: lambda.clone(),
                        n,
                        basis: cols.iter().map(|c| c.iter().map(format_q).collect()).collect(),
                    },
                )?;
                cols
            }
        };
        let expected = schur_dimension(lambda, n) as usize;
        if columns.len() != expected {
            return Err(Error::Consistency(format!(
                "symmetrizer image for {lambda} at n = {n} has dimension {}, expected {expected}",
                columns.len()
            )));
        }
        Self::from_columns(lambda, n, size, &columns)
    }

    fn compute_columns(lambda: &Partition, n: usize, size: usize) -> Vec<Vec<Q>> {
        let terms = symmetrizer_terms(lambda);
        let mut echelon = EchelonBasis::new(size);
        let mut columns = Vec::new();
        for idx in 0..size {
            let col = symmetrizer_column(&terms, idx, n);
            if echelon.insert(col.clone()) {
                let mut dense = vec![Q::zero(); size];
                for (i, c) in col {
                    dense[i] = Q::from_integer(c);
                }
                columns.push(dense);
            }
        }
        columns
    }

    fn columns_from_file(
        file: &SchurModuleFile,
        lambda: &Partition,
        n: usize,
        size: usize,
    ) -> Option<Vec<Vec<Q>>> {
        if file.partition != *lambda || file.n != n {
            return None;
        }
        let cols = file
            .basis
            .iter()
            .map(|c| c.iter().map(|x| parse_q(x)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()
            .ok()?;
        cols.iter().all(|c| c.len() == size).then_some(cols)
    }

    fn from_columns(lambda: &Partition, n: usize, size: usize, columns: &[Vec<Q>]) -> Result<Self> {
        let basis = Matrix::from_columns(size, columns);
        let pivot_rows = basis.pivot_rows();
        if pivot_rows.len() != columns.len() {
            return Err(Error::Consistency(format!(
                "basis of the {lambda} module is not independent"
            )));
        }
        let left_inverse = basis.select_rows(&pivot_rows).inverse()?;
        Ok(SchurModule {
            partition: lambda.clone(),
            n,
            basis,
            pivot_rows,
            left_inverse,
        })
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ambient_degree(&self) -> usize {
        self.partition.size()
    }

    pub fn dimension(&self) -> usize {
        self.basis.cols()
    }

    /// Basis vectors as the columns of an `n^m × d` matrix.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    /// Matrix of `g^{⊗m}` on the module in the stored basis.
    pub fn act(&self, g: &Matrix) -> Result<Matrix> {
        if g.rows() != self.n || g.cols() != self.n {
            return Err(Error::ShapeMismatch(format!(
                "expected a {n}x{n} matrix",
                n = self.n
            )));
        }
        let m = self.ambient_degree();
        let d = self.dimension();
        let images: Vec<Vec<Q>> = (0..d)
            .map(|c| apply_tensor_power(g, &self.basis.column(c), self.n, m))
            .collect();
        let w = Matrix::from_columns(self.basis.rows(), &images);
        let a = self.left_inverse.mul(&w.select_rows(&self.pivot_rows))?;
        if self.basis.mul(&a)? != w {
            return Err(Error::Consistency(format!(
                "the {} module is not stable under g^⊗{m}",
                self.partition
            )));
        }
        Ok(a)
    }

    /// The coaction matrix: the action of the generic matrix `(e^i_j)`,
    /// with entries polynomials of degree `m`.
    pub fn coaction(&self) -> Result<PolyMatrix> {
        let n = self.n;
        let m = self.ambient_degree();
        let d = self.dimension();
        let size = self.basis.rows();
        // rows of the generic g^{⊗m} at the pivot rows, applied to the basis
        let mut restricted = vec![vec![Poly::zero(); d]; self.pivot_rows.len()];
        for (s, &row) in self.pivot_rows.iter().enumerate() {
            let ri = digits(row, n, m);
            for col in 0..size {
                let ci = digits(col, n, m);
                let mono = monomial_from_vars((0..m).map(|t| var_index(n, 0, ri[t], ci[t])));
                for (b, entry) in restricted[s].iter_mut().enumerate() {
                    let x = &self.basis[(col, b)];
                    if !x.is_zero() {
                        entry.add_term(mono.clone(), x.clone());
                    }
                }
            }
        }
        let mut entries = vec![vec![Poly::zero(); d]; d];
        for (a, row) in entries.iter_mut().enumerate() {
            for (b, entry) in row.iter_mut().enumerate() {
                for (s, r) in restricted.iter().enumerate() {
                    let c = &self.left_inverse[(a, s)];
                    if !c.is_zero() {
                        *entry = &*entry + &r[b].scale(c);
                    }
                }
            }
        }
        PolyMatrix::new(n, entries)
    }
}

/// `g^{⊗m} v`, applying `g` to one tensor factor at a time.
pub fn apply_tensor_power(g: &Matrix, v: &[Q], n: usize, m: usize) -> Vec<Q> {
    let mut cur = v.to_vec();
    let size = cur.len();
    for t in 0..m {
        let stride = n.pow((m - 1 - t) as u32);
        let mut next = vec![Q::zero(); size];
        for (idx, x) in cur.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let k = (idx / stride) % n;
            let base = idx - k * stride;
            for i in 0..n {
                let c = &g[(i, k)];
                if !c.is_zero() {
                    next[base + i * stride] += c * x;
                }
            }
        }
        cur = next;
    }
    cur
}

pub fn schur_module(lambda: &Partition, n: usize) -> Result<SchurModule> {
    SchurModule::new(lambda, n, &Limits::default())
}

pub fn act(lambda: &Partition, n: usize, g: &Matrix) -> Result<Matrix> {
    schur_module(lambda, n)?.act(g)
}

pub fn coaction(lambda: &Partition, n: usize) -> Result<PolyMatrix> {
    schur_module(lambda, n)?.coaction()
}

/// `dim φ_n(a) = Σ_λ a(λ) · dim S^λ(k^n)`.
pub fn phi_n_object(a: &RigObject, n: usize) -> u64 {
    a.multiplicities()
        .iter()
        .map(|(l, m)| m * schur_dimension(l, n))
        .sum()
}

/// Dimension of the span of the `m!` place-permutation operators on
/// `(k^n)^{⊗m}`.
pub fn schur_weyl_image_dim(m: usize, n: usize, limits: &Limits) -> Result<usize> {
    let size = tensor_size(n, m, limits)?;
    let mut echelon = EchelonBasis::new(size * size);
    for sigma in all_perms(m) {
        let v: SparseVec = {
            let mut entries: Vec<(usize, BigInt)> = (0..size)
                .map(|col| (permute_index(&sigma, col, n) * size + col, BigInt::one()))
                .collect();
            entries.sort_unstable_by_key(|e| e.0);
            entries
        };
        echelon.insert(v);
    }
    Ok(echelon.rank())
}

/// Dense matrix of `P_σ`.
pub fn permutation_operator(sigma: &Perm, n: usize) -> Matrix {
    let size = n.pow(sigma.degree() as u32);
    let mut out = Matrix::zeros(size, size);
    for col in 0..size {
        out[(permute_index(sigma, col, n), col)] = Q::one();
    }
    out
}

/// `Σ_{λ ⊢ m, rows ≤ n} (f^λ)²`.
pub fn schur_weyl_formula(m: usize, n: usize) -> u64 {
    crate::rig::schur_weyl_count(m, n)
}

/// The group-algebra element `Σ a_σ σ` of `k[S_m]` whose seminormal blocks
/// are the blocks of an endomorphism of `x^{⊗m}`, by Fourier inversion
/// `a_σ = (1/m!) Σ_λ f^λ tr(ρ_λ(σ⁻¹) F_λ)`.
pub fn group_algebra_element(f: &RigMorphism, m: usize) -> Result<Vec<(Perm, Q)>> {
    let xm = RigObject::tensor_power_of_generator(m, m)?;
    if f.source() != &xm || f.target() != &xm {
        return Err(Error::ShapeMismatch(format!(
            "expected an endomorphism of x^⊗{m}"
        )));
    }
    let reps: Vec<(SeminormalRep, Matrix)> = enumerate_partitions(m, None)
        .iter()
        .map(|l| (SeminormalRep::new(l), f.block(l)))
        .filter(|(_, b)| !b.is_zero())
        .collect();
    let scale = Q::new(BigInt::one(), BigInt::from(factorial(m)));
    let mut out = Vec::new();
    for sigma in all_perms(m) {
        let inv = sigma.inverse();
        let mut a = Q::zero();
        for (rep, block) in &reps {
            let t = rep.matrix(&inv).mul(block)?.trace();
            a += t * Q::from_integer(rep.dimension().into());
        }
        a *= &scale;
        if !a.is_zero() {
            out.push((sigma, a));
        }
    }
    Ok(out)
}

/// The endomorphism of `x^{⊗m}` with blocks `ρ_λ(Σ a_σ σ)`.
pub fn endomorphism_from_group_algebra(terms: &[(Perm, Q)], m: usize) -> Result<RigMorphism> {
    let xm = RigObject::tensor_power_of_generator(m, m)?;
    let mut blocks = Vec::new();
    for l in enumerate_partitions(m, None) {
        let rep = SeminormalRep::new(&l);
        let mut b = Matrix::zeros(rep.dimension(), rep.dimension());
        for (sigma, a) in terms {
            b = b.add(&rep.matrix(sigma).scale(a))?;
        }
        blocks.push((l, b));
    }
    RigMorphism::new(xm.clone(), xm, blocks)
}

/// `φ_n(f)` for an endomorphism `f` of `x^{⊗m}`, as an operator on
/// `(k^n)^{⊗m}`.
pub fn evaluate_endomorphism(f: &RigMorphism, m: usize, n: usize, limits: &Limits) -> Result<Matrix> {
    let size = tensor_size(n, m, limits)?;
    let mut out = Matrix::zeros(size, size);
    for (sigma, a) in group_algebra_element(f, m)? {
        for col in 0..size {
            out[(permute_index(&sigma, col, n), col)] += &a;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bialgebra::check_comodule;
    use crate::linalg::q;
    use crate::partitions::count_syt;
    use crate::rig::{quotient_hom_dim, subdimension_ideal};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn random_matrix(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|_| (0..n).map(|_| rng.random_range(-3..=3)).collect())
            .collect();
        Matrix::from_i64(&rows)
    }

    fn det2(g: &Matrix) -> Q {
        &g[(0, 0)] * &g[(1, 1)] - &g[(0, 1)] * &g[(1, 0)]
    }

    #[test]
    fn symmetrizer_examples() {
        let lim = Limits::default();
        assert_eq!(young_symmetrizer_matrix(&p(&[2]), 2, &lim).unwrap().rank(), 3);
        assert!(young_symmetrizer_matrix(&p(&[1, 1]), 1, &lim).unwrap().is_zero());
        for n in 1..=3 {
            assert_eq!(
                young_symmetrizer_matrix(&p(&[1]), n, &lim).unwrap(),
                Matrix::identity(n)
            );
        }
        let tiny = Limits {
            tensor_coords: 8,
            ..lim
        };
        assert!(matches!(
            young_symmetrizer_matrix(&p(&[2, 2]), 2, &tiny),
            Err(Error::ResourceBound { .. })
        ));
    }

    #[test]
    fn symmetrizer_is_quasi_idempotent() {
        // c² = (m!/f^λ) c
        let lim = Limits::default();
        for l in [p(&[2, 1]), p(&[3]), p(&[1, 1, 1])] {
            let c = young_symmetrizer_matrix(&l, 2, &lim).unwrap();
            let k = Q::from_integer((factorial(l.size()) as u64 / count_syt(&l)).into());
            assert_eq!(c.mul(&c).unwrap(), c.scale(&k), "{l}");
        }
    }

    #[test]
    fn place_permutations_form_a_left_action() {
        let perms = all_perms(3);
        for a in &perms {
            for b in &perms {
                assert_eq!(
                    permutation_operator(&a.compose(b), 2),
                    permutation_operator(a, 2).mul(&permutation_operator(b, 2)).unwrap()
                );
            }
        }
    }

    #[test]
    fn module_examples() {
        assert_eq!(schur_module(&p(&[2, 1]), 2).unwrap().dimension(), 2);
        assert_eq!(schur_module(&p(&[1, 1, 1]), 2).unwrap().dimension(), 0);
        for n in 1..=3 {
            assert_eq!(schur_module(&p(&[1]), n).unwrap().basis(), &Matrix::identity(n));
        }
        for m in 0..=4 {
            for l in enumerate_partitions(m, None) {
                for n in 1..=3usize {
                    if n.pow(m as u32) > 81 {
                        continue;
                    }
                    let module = schur_module(&l, n).unwrap();
                    assert_eq!(module.dimension() as u64, schur_dimension(&l, n));
                    assert_eq!(module.basis().rank(), module.dimension());
                }
            }
        }
    }

    #[test]
    fn action_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for n in 1..=3 {
            let g = random_matrix(&mut rng, n);
            assert_eq!(act(&p(&[1]), n, &g).unwrap(), g);
            for l in [p(&[2]), p(&[2, 1])] {
                let d = schur_dimension(&l, n) as usize;
                assert_eq!(act(&l, n, &Matrix::identity(n)).unwrap(), Matrix::identity(d));
            }
        }
        for _ in 0..5 {
            let g = random_matrix(&mut rng, 2);
            let a = act(&p(&[1, 1]), 2, &g).unwrap();
            assert_eq!(a, Matrix::from_rows(vec![vec![det2(&g)]]).unwrap());
        }
    }

    #[test]
    fn action_is_multiplicative() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for l in [p(&[2]), p(&[1, 1]), p(&[2, 1])] {
            for n in 2..=3 {
                let module = schur_module(&l, n).unwrap();
                for _ in 0..5 {
                    let g = random_matrix(&mut rng, n);
                    let h = random_matrix(&mut rng, n);
                    let gh = module.act(&g.mul(&h).unwrap()).unwrap();
                    assert_eq!(gh, module.act(&g).unwrap().mul(&module.act(&h).unwrap()).unwrap());
                }
            }
        }
    }

    #[test]
    fn coaction_examples() {
        let c = coaction(&p(&[1]), 2).unwrap();
        assert_eq!(c, PolyMatrix::generic(2));
        let det = coaction(&p(&[1, 1]), 2).unwrap();
        let v = serde_json::to_value(&det).unwrap();
        assert_eq!(
            v["entries"][0][0],
            serde_json::json!({"e[1][1]*e[2][2]": "1", "e[1][2]*e[2][1]": "-1"})
        );
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for l in [p(&[1]), p(&[2]), p(&[1, 1]), p(&[2, 1])] {
            for n in 2..=3 {
                let module = schur_module(&l, n).unwrap();
                let pm = module.coaction().unwrap();
                assert_eq!(pm.counit(), Matrix::identity(module.dimension()));
                assert!(check_comodule(&pm).unwrap().passed, "{l} n={n}");
                for _ in 0..3 {
                    let g = random_matrix(&mut rng, n);
                    assert_eq!(pm.specialize(&g).unwrap(), module.act(&g).unwrap());
                }
            }
        }
    }

    #[test]
    fn phi_examples() {
        let x2 = RigObject::tensor_power_of_generator(2, 8).unwrap();
        assert_eq!(phi_n_object(&x2, 2), 4);
        assert_eq!(phi_n_object(&RigObject::exterior_generator(3), 2), 0);
        assert_eq!(phi_n_object(&RigObject::simple(p(&[2, 1])), 3), 8);
    }

    #[test]
    fn phi_is_a_dimension_homomorphism() {
        let objs = [
            RigObject::simple(p(&[2, 1])),
            RigObject::from_multiplicities([(p(&[1]), 2), (p(&[2]), 1)]),
            RigObject::exterior_generator(3),
            RigObject::unit(),
        ];
        for n in 1..=3 {
            for a in &objs {
                for b in &objs {
                    let t = crate::rig::tensor(a, b, 6).unwrap().into_value().unwrap();
                    assert_eq!(phi_n_object(&t, n), phi_n_object(a, n) * phi_n_object(b, n));
                    let s = crate::rig::direct_sum(a, b);
                    assert_eq!(phi_n_object(&s, n), phi_n_object(a, n) + phi_n_object(b, n));
                }
            }
        }
    }

    #[test]
    fn schur_weyl_examples() {
        let lim = Limits::default();
        assert_eq!(schur_weyl_image_dim(2, 2, &lim).unwrap(), 2);
        assert_eq!(schur_weyl_image_dim(3, 2, &lim).unwrap(), 5);
        for m in 0..=4 {
            assert_eq!(schur_weyl_image_dim(m, 1, &lim).unwrap(), 1);
        }
        for (m, n) in [(1, 2), (2, 2), (3, 2), (4, 2), (1, 3), (2, 3), (3, 3)] {
            let ideal = subdimension_ideal(n, 8).unwrap();
            let xm = RigObject::tensor_power_of_generator(m, 8).unwrap();
            let expect = schur_weyl_formula(m, n);
            assert_eq!(schur_weyl_image_dim(m, n, &lim).unwrap() as u64, expect);
            assert_eq!(quotient_hom_dim(&xm, &xm, &ideal).unwrap(), expect);
        }
    }

    #[test]
    fn fourier_inversion_round_trips() {
        for m in 0..=3 {
            for sigma in all_perms(m) {
                let terms = vec![(sigma.clone(), q(1))];
                let f = endomorphism_from_group_algebra(&terms, m).unwrap();
                assert_eq!(group_algebra_element(&f, m).unwrap(), terms);
                assert_eq!(
                    evaluate_endomorphism(&f, m, 2, &Limits::default()).unwrap(),
                    permutation_operator(&sigma, 2)
                );
            }
        }
        let xm = RigObject::tensor_power_of_generator(3, 8).unwrap();
        let id = RigMorphism::identity(&xm);
        assert_eq!(
            evaluate_endomorphism(&id, 3, 2, &Limits::default()).unwrap(),
            Matrix::identity(8)
        );
    }

    #[test]
    fn module_cache_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let l = p(&[2, 1]);
        let fresh = SchurModule::new(&l, 2, &Limits::default()).unwrap();
        let cols: Vec<Vec<Q>> = (0..fresh.dimension()).map(|c| fresh.basis().column(c)).collect();
        let file = SchurModuleFile {
            partition: l.clone(),
            n: 2,
            basis: cols.iter().map(|c| c.iter().map(format_q).collect()).collect(),
        };
        cache::write_atomic(dir.path(), &cache_file_name(&l, 2), &file).unwrap();
        let raw = std::fs::read(dir.path().join("schurmod_2-1_2.json")).unwrap();
        let back: SchurModuleFile = serde_json::from_slice(&raw).unwrap();
        let cols2 = SchurModule::columns_from_file(&back, &l, 2, 8).unwrap();
        assert_eq!(SchurModule::from_columns(&l, 2, 8, &cols2).unwrap(), fresh);
    }
}
