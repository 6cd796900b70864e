//! Permutations of `{0, ..., m-1}`.

use std::fmt;

/// A permutation stored by images: `self.0[i]` is the image of `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<usize>);

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.0)
    }
}

impl Perm {
    pub fn identity(m: usize) -> Self {
        Perm((0..m).collect())
    }

    /// Panics unless `images` is a permutation.
    pub fn from_images(images: Vec<usize>) -> Self {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            assert!(i < images.len() && !seen[i], "not a permutation: {images:?}");
            seen[i] = true;
        }
        Perm(images)
    }

    pub fn transposition(m: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(m);
        p.0.swap(a, b);
        p
    }

    /// The adjacent transposition `(i, i+1)`.
    pub fn adjacent(m: usize, i: usize) -> Self {
        Self::transposition(m, i, i + 1)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Perm(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Perm(inv)
    }

    pub fn sign(&self) -> i64 {
        let mut seen = vec![false; self.0.len()];
        let mut transpositions = 0;
        for start in 0..self.0.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.0[i];
                len += 1;
            }
            transpositions += len - 1;
        }
        if transpositions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Cycle lengths sorted decreasingly.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut seen = vec![false; self.0.len()];
        let mut lens = Vec::new();
        for start in 0..self.0.len() {
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.0[i];
                len += 1;
            }
            if len > 0 {
                lens.push(len);
            }
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    /// A word `[i_1, ..., i_k]` with `self = s_{i_1} ∘ ... ∘ s_{i_k}`, where
    /// `s_i` is the adjacent transposition `(i, i+1)`.
    pub fn adjacent_word(&self) -> Vec<usize> {
        // Bubble sort the image list; each swap of positions (i, i+1) is a
        // right multiplication by s_i.
        let mut images = self.0.clone();
        let mut swaps = Vec::new();
        let mut changed = true;
        while changed {
            changed = false;
            for i in 0..images.len().saturating_sub(1) {
                if images[i] > images[i + 1] {
                    images.swap(i, i + 1);
                    swaps.push(i);
                    changed = true;
                }
            }
        }
        // self ∘ s_{j_1} ∘ ... ∘ s_{j_k} = id, so self = s_{j_k} ∘ ... ∘ s_{j_1}.
        swaps.reverse();
        swaps
    }
}

/// All permutations of `m` points in lexicographic order of image lists.
pub fn all_perms(m: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut current = (0..m).collect::<Vec<_>>();
    loop {
        out.push(Perm(current.clone()));
        // next lexicographic permutation
        let Some(i) = (0..m.saturating_sub(1)).rev().find(|&i| current[i] < current[i + 1]) else {
            break;
        };
        let j = (i + 1..m).rev().find(|&j| current[j] > current[i]).unwrap();
        current.swap(i, j);
        current[i + 1..].reverse();
    }
    out
}

/// All permutations of `m` points that preserve each block of the given
/// partition of (a subset of) the points, fixing all other points.
pub fn block_stabilizer(m: usize, blocks: &[Vec<usize>]) -> Vec<Perm> {
    let mut group = vec![Perm::identity(m)];
    for block in blocks.iter().filter(|b| b.len() > 1) {
        let mut next = Vec::with_capacity(group.len() * factorial(block.len()));
        for local in all_perms(block.len()) {
            let mut images: Vec<usize> = (0..m).collect();
            for (k, &point) in block.iter().enumerate() {
                images[point] = block[local.apply(k)];
            }
            let lifted = Perm(images);
            next.extend(group.iter().map(|g| g.compose(&lifted)));
        }
        group = next;
    }
    group
}

pub fn factorial(m: usize) -> usize {
    (1..=m).product()
}
