//! Irreducible characters of the symmetric groups.
//!
//! Characters are computed with the Murnaghan–Nakayama rule on beta-sets
//! (abacus positions): removing a border strip of length `r` moves one bead
//! down by `r` places, and the sign is the parity of the beads jumped over.
//! Explicit representing matrices come from Young's seminormal form.

use std::collections::{BTreeMap, HashMap};
use std::path::Path;
use std::sync::{Arc, LazyLock, Mutex};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::linalg::{Matrix, Q};
use crate::partitions::{enumerate_partitions, standard_tableaux, Partition, StandardTableau};
use crate::perm::Perm;
use crate::{cache, Error, Result};

/// Largest `m` for which [`character_table`] builds a table by default.
pub const DEFAULT_TABLE_BOUND: usize = 10;

/// Size of the centralizer of a permutation of cycle type `mu`:
/// `z_mu = prod_i i^{m_i} m_i!`.
pub fn centralizer_order(mu: &Partition) -> u64 {
    mu.part_multiplicities()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &mi)| (i as u64).pow(mi as u32) * (1..=mi as u64).product::<u64>())
        .product()
}

/// Class data of `S_m` for the class of cycle type `cycle_type`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassData {
    pub cycle_type: Partition,
    pub centralizer_order: u64,
}

pub fn class_data(m: usize) -> Vec<ClassData> {
    enumerate_partitions(m, None)
        .into_iter()
        .map(|mu| ClassData {
            centralizer_order: centralizer_order(&mu),
            cycle_type: mu,
        })
        .collect()
}

/// The character value `chi^lambda(mu)`.
pub fn character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(format!(
            "character of {lambda} on class {mu}"
        )));
    }
    Ok(MnEvaluator::default().eval(lambda, mu.parts()))
}

#[derive(Default)]
struct MnEvaluator {
    memo: HashMap<(Partition, Vec<usize>), i64>,
}

impl MnEvaluator {
    fn eval(&mut self, lambda: &Partition, cycles: &[usize]) -> i64 {
        let Some((&r, rest)) = cycles.split_first() else {
            return if lambda.is_empty() { 1 } else { 0 };
        };
        let key = (lambda.clone(), cycles.to_vec());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let mut total = 0;
        for (shape, sign) in remove_border_strips(lambda, r) {
            total += sign * self.eval(&shape, rest);
        }
        self.memo.insert(key, total);
        total
    }
}

/// All ways to remove a border strip of length `r` from `lambda`, with the
/// sign `(-1)^{height}` of each strip.
pub fn remove_border_strips(lambda: &Partition, r: usize) -> Vec<(Partition, i64)> {
    let len = lambda.rows();
    let beta: Vec<usize> = (0..len).map(|i| lambda.part(i) + (len - 1 - i)).collect();
    let mut out = Vec::new();
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let jumped = beta.iter().filter(|&&c| target < c && c < b).count();
        let mut moved = beta.clone();
        moved[idx] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<usize> = moved
            .iter()
            .enumerate()
            .map(|(i, &x)| x - (len - 1 - i))
            .filter(|&p| p > 0)
            .collect();
        let sign = if jumped % 2 == 0 { 1 } else { -1 };
        out.push((Partition::from_parts_unchecked(parts), sign));
    }
    out
}

/// Character table of `S_m`. Rows and columns are both indexed by the
/// partitions of `m` in canonical order; columns are cycle types.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    m: usize,
    partitions: Vec<Partition>,
    values: Vec<Vec<i64>>,
    index: HashMap<Partition, usize>,
}

#[derive(Serialize, Deserialize)]
struct TableFile {
    m: usize,
    classes: Vec<String>,
    rows: BTreeMap<String, Vec<i64>>,
}

impl CharacterTable {
    pub fn compute(m: usize) -> Self {
        let partitions = enumerate_partitions(m, None);
        let mut mn = MnEvaluator::default();
        let values = partitions
            .iter()
            .map(|l| partitions.iter().map(|mu| mn.eval(l, mu.parts())).collect())
            .collect();
        Self::assemble(m, partitions, values)
    }

    fn assemble(m: usize, partitions: Vec<Partition>, values: Vec<Vec<i64>>) -> Self {
        let index = partitions
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        CharacterTable {
            m,
            partitions,
            values,
            index,
        }
    }

    pub fn degree(&self) -> usize {
        self.m
    }

    /// Row (and column) labels in canonical order.
    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn value(&self, lambda: &Partition, mu: &Partition) -> i64 {
        self.values[self.index[lambda]][self.index[mu]]
    }

    pub fn row(&self, lambda: &Partition) -> &[i64] {
        &self.values[self.index[lambda]]
    }

    pub fn values(&self) -> &[Vec<i64>] {
        &self.values
    }

    fn to_file(&self) -> TableFile {
        TableFile {
            m: self.m,
            classes: self.partitions.iter().map(Partition::key).collect(),
            rows: self
                .partitions
                .iter()
                .zip(&self.values)
                .map(|(p, row)| (p.key(), row.clone()))
                .collect(),
        }
    }

    fn from_file(file: TableFile) -> Option<Self> {
        let partitions = enumerate_partitions(file.m, None);
        let classes: Vec<String> = partitions.iter().map(Partition::key).collect();
        if classes != file.classes {
            return None;
        }
        let values = classes
            .iter()
            .map(|k| file.rows.get(k).filter(|r| r.len() == classes.len()).cloned())
            .collect::<Option<Vec<_>>>()?;
        Some(Self::assemble(file.m, partitions, values))
    }
}

pub fn cache_file_name(m: usize) -> String {
    format!("chartab_{m}.json")
}

static TABLES: LazyLock<Mutex<HashMap<usize, Arc<CharacterTable>>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// Character table of `S_m` with the default size bound, memoized in
/// process and in the configured cache directory.
pub fn character_table(m: usize) -> Result<Arc<CharacterTable>> {
    character_table_bounded(m, DEFAULT_TABLE_BOUND)
}

pub fn character_table_bounded(m: usize, bound: usize) -> Result<Arc<CharacterTable>> {
    if m > bound {
        return Err(Error::ResourceBound {
            what: "character table degree",
            required: m,
            bound,
        });
    }
    if let Some(t) = TABLES.lock().unwrap_or_else(|e| e.into_inner()).get(&m) {
        return Ok(t.clone());
    }
    let table = match cache::load::<TableFile>(&cache_file_name(m)).and_then(CharacterTable::from_file) {
        Some(t) => t,
        None => {
            let t = CharacterTable::compute(m);
            cache::store(&cache_file_name(m), &t.to_file())?;
            t
        }
    };
    let table = Arc::new(table);
    TABLES
        .lock()
        .unwrap_or_else(|e| e.into_inner())
        .insert(m, table.clone());
    Ok(table)
}

/// Loads the table of `S_m` from `dir`, computing and storing it on a miss.
/// Independent of the process-wide cache settings.
pub fn character_table_in_dir(m: usize, dir: &Path) -> Result<CharacterTable> {
    let path = dir.join(cache_file_name(m));
    if let Ok(bytes) = std::fs::read(&path) {
        if let Some(t) = serde_json::from_slice(&bytes)
            .ok()
            .and_then(CharacterTable::from_file)
        {
            return Ok(t);
        }
    }
    let t = CharacterTable::compute(m);
    cache::write_atomic(dir, &cache_file_name(m), &t.to_file())?;
    Ok(t)
}

/// Irreducible representation of `S_m` in Young's seminormal form, on the
/// basis of standard tableaux of shape `lambda`.
///
/// For the adjacent transposition `s_k = (k, k+1)` and a tableau `T` with
/// axial distance `a = c_T(k+1) - c_T(k)`:
/// `s_k v_T = (1/a) v_T + c v_{s_k T}`, where `c = 1` if `k` sits in a higher
/// row than `k+1` in `T` and `c = 1 - 1/a^2` otherwise. When `s_k T` is not
/// standard only the diagonal term remains (`a = ±1`).
#[derive(Clone, Debug)]
pub struct SeminormalRep {
    partition: Partition,
    tableaux: Vec<StandardTableau>,
    generators: Vec<Matrix>,
}

impl SeminormalRep {
    pub fn new(lambda: &Partition) -> Self {
        let m = lambda.size();
        let tableaux = standard_tableaux(lambda);
        let index: HashMap<&StandardTableau, usize> =
            tableaux.iter().enumerate().map(|(i, t)| (t, i)).collect();
        let d = tableaux.len();
        let generators = (0..m.saturating_sub(1))
            .map(|k| {
                let mut g = Matrix::zeros(d, d);
                for (col, t) in tableaux.iter().enumerate() {
                    let lo = t.position(k);
                    let hi = t.position(k + 1);
                    let a = Partition::content(hi) - Partition::content(lo);
                    let inv_a = Q::new(1.into(), a.into());
                    g[(col, col)] = inv_a.clone();
                    if let Some(swapped) = t.swap_adjacent(k) {
                        let coeff = if lo.row < hi.row {
                            Q::one()
                        } else {
                            Q::one() - &inv_a * &inv_a
                        };
                        g[(index[&swapped], col)] = coeff;
                    }
                }
                g
            })
            .collect();
        SeminormalRep {
            partition: lambda.clone(),
            tableaux,
            generators,
        }
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn dimension(&self) -> usize {
        self.tableaux.len()
    }

    /// Matrix of `s_k`.
    pub fn generator(&self, k: usize) -> &Matrix {
        &self.generators[k]
    }

    pub fn matrix(&self, perm: &Perm) -> Matrix {
        assert_eq!(perm.degree(), self.partition.size(), "degree mismatch");
        perm.adjacent_word()
            .iter()
            .fold(Matrix::identity(self.dimension()), |acc, &k| {
                acc.mul(&self.generators[k]).expect("square generators")
            })
    }

    pub fn character(&self, perm: &Perm) -> Q {
        let t = self.matrix(perm).trace();
        if t.is_zero() {
            Q::zero()
        } else {
            t
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;
    use crate::partitions::count_syt;
    use crate::perm::all_perms;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Counts permutations of S_m commuting with a fixed permutation of the
    /// given cycle type.
    fn brute_force_centralizer(mu: &Partition) -> u64 {
        let m = mu.size();
        let mut images = Vec::new();
        let mut start = 0;
        for &len in mu.parts() {
            for k in 0..len {
                images.push(start + (k + 1) % len);
            }
            start += len;
        }
        let g = Perm::from_images(images);
        all_perms(m)
            .iter()
            .filter(|h| h.compose(&g) == g.compose(h))
            .count() as u64
    }

    #[test]
    fn centralizer_examples() {
        assert_eq!(centralizer_order(&p(&[1, 1, 1])), 6);
        assert_eq!(centralizer_order(&p(&[3])), 3);
        assert_eq!(brute_force_centralizer(&p(&[2, 1])), 2);
        assert_eq!(centralizer_order(&p(&[2, 1])), 2);
        for m in 1..=6 {
            for mu in enumerate_partitions(m, None) {
                assert_eq!(centralizer_order(&mu), brute_force_centralizer(&mu), "{mu}");
            }
        }
    }

    #[test]
    fn class_sizes_sum_to_group_order() {
        for m in 0..=9u64 {
            let order: u64 = (1..=m).product();
            let total: u64 = class_data(m as usize)
                .iter()
                .map(|c| order / c.centralizer_order)
                .sum();
            assert_eq!(total, order);
        }
    }

    #[test]
    fn trivial_and_sign_characters() {
        for m in 1..=6 {
            for mu in enumerate_partitions(m, None) {
                assert_eq!(character(&Partition::row(m), &mu).unwrap(), 1);
                let sign = if (m - mu.rows()) % 2 == 0 { 1 } else { -1 };
                assert_eq!(character(&Partition::column(m), &mu).unwrap(), sign);
            }
        }
        assert_eq!(character(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), 2);
        assert!(character(&p(&[2, 1]), &p(&[2])).is_err());
    }

    #[test]
    fn small_tables() {
        assert_eq!(CharacterTable::compute(1).values(), &[vec![1]]);
        // columns listed as identity class (1,1) then transposition (2)
        let t2 = CharacterTable::compute(2);
        let classes = [p(&[1, 1]), p(&[2])];
        let row = |l: &Partition| classes.iter().map(|mu| t2.value(l, mu)).collect::<Vec<_>>();
        assert_eq!(row(&p(&[2])), vec![1, 1]);
        assert_eq!(row(&p(&[1, 1])), vec![1, -1]);
        let t3 = CharacterTable::compute(3);
        assert_eq!(t3.row(&p(&[2, 1])), &[-1, 0, 2]);
        assert_eq!(t3.value(&p(&[2, 1]), &p(&[1, 1, 1])), 2);
    }

    #[test]
    fn permutation_trace_oracle_for_s3() {
        // The permutation representation on 3 points is trivial + (2,1).
        for g in all_perms(3) {
            let fixed = (0..3).filter(|&i| g.apply(i) == i).count() as i64;
            let mu = Partition::new(g.cycle_type()).unwrap();
            assert_eq!(fixed - 1, character(&p(&[2, 1]), &mu).unwrap());
        }
    }

    #[test]
    fn row_orthogonality() {
        for m in 1..=8 {
            let t = CharacterTable::compute(m);
            let z: Vec<Q> = t
                .partitions()
                .iter()
                .map(|mu| q(centralizer_order(mu) as i64))
                .collect();
            for (i, a) in t.values().iter().enumerate() {
                for (j, b) in t.values().iter().enumerate() {
                    let s = a
                        .iter()
                        .zip(b)
                        .zip(&z)
                        .fold(Q::zero(), |acc, ((x, y), zz)| acc + q(x * y) / zz);
                    assert_eq!(s, if i == j { Q::one() } else { Q::zero() }, "m={m}");
                }
            }
        }
    }

    #[test]
    fn identity_column_is_syt_count() {
        for m in 1..=8 {
            let t = CharacterTable::compute(m);
            let id = Partition::column(m);
            for l in t.partitions() {
                assert_eq!(t.value(l, &id) as u64, count_syt(l));
            }
        }
    }

    #[test]
    fn table_bound_is_enforced() {
        assert!(matches!(
            character_table_bounded(4, 3),
            Err(Error::ResourceBound { .. })
        ));
        assert_eq!(character_table(4).unwrap().degree(), 4);
    }

    #[test]
    fn disk_cache_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let fresh = character_table_in_dir(5, dir.path()).unwrap();
        assert!(dir.path().join("chartab_5.json").exists());
        let loaded = character_table_in_dir(5, dir.path()).unwrap();
        assert_eq!(fresh, loaded);
        let raw: serde_json::Value =
            serde_json::from_slice(&std::fs::read(dir.path().join("chartab_5.json")).unwrap())
                .unwrap();
        assert_eq!(raw["rows"]["[4,1]"], serde_json::json!([-1, 0, -1, 1, 0, 2, 4]));
        assert_eq!(raw["classes"][1], "[4,1]");
    }

    #[test]
    fn seminormal_form_is_a_representation() {
        for m in 1..=5 {
            for l in enumerate_partitions(m, None) {
                let rep = SeminormalRep::new(&l);
                let id = Matrix::identity(rep.dimension());
                for k in 0..m - 1 {
                    let s = rep.generator(k);
                    assert_eq!(s.mul(s).unwrap(), id, "{l} s_{k}^2");
                    if k + 1 < m - 1 {
                        let t = rep.generator(k + 1);
                        let sts = s.mul(t).unwrap().mul(s).unwrap();
                        let tst = t.mul(s).unwrap().mul(t).unwrap();
                        assert_eq!(sts, tst, "{l} braid {k}");
                    }
                    for j in k + 2..m - 1 {
                        let t = rep.generator(j);
                        assert_eq!(s.mul(t).unwrap(), t.mul(s).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn seminormal_traces_match_characters() {
        for m in 1..=5 {
            for l in enumerate_partitions(m, None) {
                let rep = SeminormalRep::new(&l);
                for g in all_perms(m) {
                    let mu = Partition::new(g.cycle_type()).unwrap();
                    assert_eq!(rep.character(&g), q(character(&l, &mu).unwrap()));
                }
            }
        }
    }

    #[test]
    fn seminormal_is_multiplicative() {
        let l = p(&[2, 1, 1]);
        let rep = SeminormalRep::new(&l);
        let perms = all_perms(4);
        for a in perms.iter().step_by(5) {
            for b in perms.iter().step_by(7) {
                assert_eq!(
                    rep.matrix(&a.compose(b)),
                    rep.matrix(a).mul(&rep.matrix(b)).unwrap()
                );
            }
        }
    }
}
