//! Sorted index subsets with colexicographic ranking.
//!
//! Rows and columns of the certification matrix are indexed by subsets of an
//! ordered arc; members are always kept in increasing arc order.

use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

/// Binomial coefficient, saturating at `usize::MAX`.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > usize::MAX as u128 {
            return usize::MAX;
        }
    }
    acc as usize
}

/// A strictly increasing list of positions into an ordered arc.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default)]
#[serde(transparent)]
pub struct Subset(Vec<usize>);

impl Subset {
    /// Panics unless `idx` is strictly increasing.
    pub fn new(idx: Vec<usize>) -> Self {
        assert!(
            idx.windows(2).all(|w| w[0] < w[1]),
            "subset indices must be strictly increasing: {idx:?}"
        );
        Subset(idx)
    }

    pub fn from_unsorted(mut idx: Vec<usize>) -> Self {
        idx.sort_unstable();
        idx.dedup();
        Subset(idx)
    }

    pub fn empty() -> Self {
        Subset(Vec::new())
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        let mut it = other.0.iter();
        self.0.iter().all(|x| it.any(|y| y == x))
    }

    pub fn with(&self, i: usize) -> Subset {
        match self.0.binary_search(&i) {
            Ok(_) => self.clone(),
            Err(pos) => {
                let mut v = self.0.clone();
                v.insert(pos, i);
                Subset(v)
            }
        }
    }

    pub fn without(&self, i: usize) -> Subset {
        Subset(self.0.iter().copied().filter(|&x| x != i).collect())
    }

    /// Elements of `self` not in `other`, in order.
    pub fn minus(&self, other: &Subset) -> Subset {
        Subset(self.0.iter().copied().filter(|&x| !other.contains(x)).collect())
    }

    pub fn intersect(&self, other: &Subset) -> Subset {
        Subset(self.0.iter().copied().filter(|&x| other.contains(x)).collect())
    }

    /// Complement in `0..n`.
    pub fn complement(&self, n: usize) -> Subset {
        Subset((0..n).filter(|&x| !self.contains(x)).collect())
    }

    /// Number of members strictly greater than `i`.
    pub fn count_after(&self, i: usize) -> usize {
        self.0.len() - self.0.partition_point(|&x| x <= i)
    }

    pub fn rank(&self) -> usize {
        colex_rank(&self.0)
    }
}

impl Deref for Subset {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

/// Colex rank: `Σ C(c_i, i + 1)` over the sorted members `c_0 < c_1 < …`.
pub fn colex_rank(sorted: &[usize]) -> usize {
    sorted.iter().enumerate().map(|(i, &c)| binomial(c, i + 1)).sum()
}

/// Inverse of [`colex_rank`] for subsets of the given arity.
pub fn colex_unrank(mut rank: usize, arity: usize) -> Subset {
    let mut out = vec![0; arity];
    for i in (0..arity).rev() {
        // largest c with C(c, i+1) <= rank
        let mut c = i;
        while binomial(c + 1, i + 1) <= rank {
            c += 1;
        }
        out[i] = c;
        rank -= binomial(c, i + 1);
    }
    Subset(out)
}

/// All `arity`-subsets of `0..n` in colex order.
#[derive(Debug, Clone)]
pub struct Subsets {
    n: usize,
    cur: Option<Vec<usize>>,
}

impl Subsets {
    pub fn new(n: usize, arity: usize) -> Self {
        let cur = (arity <= n).then(|| (0..arity).collect());
        Subsets { n, cur }
    }
}

impl Iterator for Subsets {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        let cur = self.cur.as_mut()?;
        let out = Subset(cur.clone());
        // advance: find the first position that can be bumped
        let k = cur.len();
        let mut i = 0;
        loop {
            if i == k {
                self.cur = None;
                break;
            }
            let limit = if i + 1 < k { cur[i + 1] } else { self.n };
            if cur[i] + 1 < limit {
                cur[i] += 1;
                for (j, slot) in cur.iter_mut().enumerate().take(i) {
                    *slot = j;
                }
                break;
            }
            i += 1;
        }
        Some(out)
    }
}

/// Parity (0 or 1) of the permutation that sorts `seq` (distinct items).
pub fn permutation_parity(seq: &[usize]) -> usize {
    let mut inversions = 0;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2
}
