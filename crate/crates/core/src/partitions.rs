//! Partitions, Young diagrams and tableau counts.
//!
//! Partitions are stored without trailing zeros. The canonical order used
//! for every ordered collection in the crate (map keys, enumeration, table
//! indices) sorts by size first and then reverse lexicographically, so the
//! partitions of 3 come out as `(3), (2,1), (1,1,1)`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::linalg::Q;
use crate::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<usize>);

/// A box of a Young diagram, 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Partition {
    /// Validates `parts`; zeros at the end are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?}")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(m)`.
    pub fn row(m: usize) -> Self {
        if m == 0 {
            Self::empty()
        } else {
            Partition(vec![m])
        }
    }

    /// The one-column partition `(1^m)`.
    pub fn column(m: usize) -> Self {
        Partition(vec![1; m])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn rows(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Length of row `i`, zero past the last row.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0);
        Partition((0..cols).map(|c| self.0.iter().filter(|&&p| p > c).count()).collect())
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(row, &len)| (0..len).map(move |col| Cell { row, col }))
    }

    pub fn content(cell: Cell) -> i64 {
        cell.col as i64 - cell.row as i64
    }

    pub fn hook(&self, cell: Cell) -> usize {
        let arm = self.0[cell.row] - cell.col - 1;
        let leg = self.0[cell.row + 1..]
            .iter()
            .take_while(|&&p| p > cell.col)
            .count();
        arm + leg + 1
    }

    /// Multiplicity of each part value: `result[i]` counts parts equal to `i`.
    pub fn part_multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.part(0) + 1];
        for &p in &self.0 {
            m[p] += 1;
        }
        m
    }

    /// Union of the parts of two partitions, sorted.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts: Vec<usize> = self.0.iter().chain(&other.0).copied().collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// Every part multiplied by `k`.
    pub fn scaled(&self, k: usize) -> Partition {
        assert!(k > 0, "scaling a partition by zero");
        Partition(self.0.iter().map(|p| p * k).collect())
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(Partition::new(parts.clone()).is_ok());
        Partition(parts)
    }

    /// Canonical string form `"[2,1]"`, `"[]"` for the empty partition.
    pub fn key(&self) -> String {
        self.to_string()
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts `[2,1]`, `(2,1)`, `2,1`, `2 1`, and `[]`.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|x| x.strip_suffix(']'))
            .or_else(|| t.strip_prefix('(').and_then(|x| x.strip_suffix(')')))
            .unwrap_or(t);
        let parts = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|p| !p.is_empty())
            .map(|p| {
                p.parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(s.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts).map_err(|_| Error::InvalidPartition(s.to_string()))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// All partitions of `m`, optionally with at most `max_rows` rows, in
/// canonical (reverse lexicographic) order.
pub fn enumerate_partitions(m: usize, max_rows: Option<usize>) -> Vec<Partition> {
    fn go(
        remaining: usize,
        max_part: usize,
        rows_left: usize,
        prefix: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        if rows_left == 0 {
            return;
        }
        for p in (1..=max_part.min(remaining)).rev() {
            prefix.push(p);
            go(remaining - p, p, rows_left - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(m, m, max_rows.unwrap_or(m), &mut Vec::new(), &mut out);
    out
}

/// All partitions of size at most `max_size`, in canonical order.
pub fn partitions_up_to(max_size: usize) -> Vec<Partition> {
    (0..=max_size)
        .flat_map(|m| enumerate_partitions(m, None))
        .collect()
}

/// Number of standard Young tableaux of shape `lambda` by the hook length
/// formula.
pub fn count_syt(lambda: &Partition) -> u64 {
    let mut value = (1..=lambda.size()).fold(Q::one(), |acc, k| acc * Q::from_integer(k.into()));
    for cell in lambda.cells() {
        value /= Q::from_integer(lambda.hook(cell).into());
    }
    integral(&value, "hook length formula")
}

/// Dimension of the Schur module `S^lambda(k^n)` by the hook content formula.
pub fn schur_dimension(lambda: &Partition, n: usize) -> u64 {
    let n = n as i64;
    let mut value = Q::one();
    for cell in lambda.cells() {
        value *= Q::from_integer((n + Partition::content(cell)).into());
        value /= Q::from_integer(lambda.hook(cell).into());
    }
    integral(&value, "hook content formula")
}

fn integral(value: &Q, what: &str) -> u64 {
    assert!(value.is_integer(), "{what} produced a non-integer {value}");
    value
        .to_integer()
        .to_u64()
        .unwrap_or_else(|| panic!("{what} value {value} does not fit in u64"))
}

/// Number of semistandard tableaux of shape `lambda` with entries in
/// `1..=n`, by backtracking over the cells in row-major order.
pub fn count_ssyt(lambda: &Partition, n: usize) -> u64 {
    let cells: Vec<Cell> = lambda.cells().collect();
    let mut filling = vec![vec![0usize; lambda.part(0)]; lambda.rows()];

    fn go(idx: usize, cells: &[Cell], n: usize, filling: &mut Vec<Vec<usize>>) -> u64 {
        let Some(&Cell { row, col }) = cells.get(idx) else {
            return 1;
        };
        let lo_left = if col > 0 { filling[row][col - 1] } else { 1 };
        let lo_above = if row > 0 { filling[row - 1][col] + 1 } else { 1 };
        let mut total = 0;
        for v in lo_left.max(lo_above)..=n {
            filling[row][col] = v;
            total += go(idx + 1, cells, n, filling);
        }
        filling[row][col] = 0;
        total
    }
    go(0, &cells, n, &mut filling)
}

/// A standard Young tableau: `rows[r][c]` holds the entry (0-based) of cell
/// `(r, c)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Cell holding entry `k`.
    pub fn position(&self, k: usize) -> Cell {
        for (row, r) in self.rows.iter().enumerate() {
            if let Some(col) = r.iter().position(|&v| v == k) {
                return Cell { row, col };
            }
        }
        panic!("entry {k} not in tableau");
    }

    /// The tableau with entries `k` and `k + 1` exchanged, if still standard.
    pub fn swap_adjacent(&self, k: usize) -> Option<StandardTableau> {
        let a = self.position(k);
        let b = self.position(k + 1);
        if a.row == b.row || a.col == b.col {
            return None;
        }
        let mut rows = self.rows.clone();
        rows[a.row][a.col] = k + 1;
        rows[b.row][b.col] = k;
        Some(StandardTableau { rows })
    }
}

/// All standard Young tableaux of shape `lambda`, generated by placing
/// `0, 1, ..., m-1` at successive outer corners. Order is deterministic.
pub fn standard_tableaux(lambda: &Partition) -> Vec<StandardTableau> {
    fn go(
        lambda: &Partition,
        next: usize,
        shape: &mut Vec<usize>,
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<StandardTableau>,
    ) {
        if next == lambda.size() {
            out.push(StandardTableau { rows: rows.clone() });
            return;
        }
        for r in 0..lambda.rows() {
            let fits = shape[r] < lambda.part(r) && (r == 0 || shape[r - 1] > shape[r]);
            if fits {
                shape[r] += 1;
                rows[r].push(next);
                go(lambda, next + 1, shape, rows, out);
                rows[r].pop();
                shape[r] -= 1;
            }
        }
    }
    let mut out = Vec::new();
    go(
        lambda,
        0,
        &mut vec![0; lambda.rows()],
        &mut vec![Vec::new(); lambda.rows()],
        &mut out,
    );
    out
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}
