//! Compositions and partitions of integers.

use std::fmt;

use crate::arith::exact_ratio;
use crate::error::{Error, Result};

/// A finite sequence of non-negative integers. Zero parts are kept.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Composition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Decrements the 1-based part `index`, keeping the length unchanged.
    pub fn remove_part_at(&self, index: usize) -> Result<Composition> {
        if index == 0 || index > self.parts.len() {
            return Err(Error::InvalidArgument(format!("index {index} out of range 1..={}", self.parts.len())));
        }
        if self.parts[index - 1] == 0 {
            return Err(Error::PartNotRemovable { index });
        }
        let mut parts = self.parts.clone();
        parts[index - 1] -= 1;
        Ok(Composition { parts })
    }

    /// Concatenates a sequence of compositions into one.
    pub fn concat<'a, I>(components: I) -> Composition
    where
        I: IntoIterator<Item = &'a Composition>,
    {
        Composition { parts: components.into_iter().flat_map(|c| c.parts.iter().copied()).collect() }
    }
}

impl From<Vec<usize>> for Composition {
    fn from(parts: Vec<usize>) -> Self {
        Composition { parts }
    }
}

impl From<&Partition> for Composition {
    fn from(p: &Partition) -> Self {
        Composition { parts: p.parts.clone() }
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// A weakly decreasing sequence of positive integers, stored without
/// trailing zeros.
///
/// The derived ordering is the lexicographic order on parts, which agrees
/// with comparison padded by zeros since every stored part is positive.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from a sequence already known to be valid.
    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.iter().all(|&p| p > 0));
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Length of column `j` (0-based) of the Young diagram.
    pub fn column_len(&self, j: usize) -> usize {
        self.parts.iter().take_while(|&&p| p > j).count()
    }

    /// True if the Young diagram of `inner` lies inside that of `self`.
    pub fn contains(&self, inner: &Composition) -> bool {
        inner.len() <= self.len() && inner.parts().iter().enumerate().all(|(i, &a)| a <= self.parts[i])
    }

    /// Hook lengths of every box, row by row.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.size());
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                let arm = row - j - 1;
                let leg = self.column_len(j) - i - 1;
                out.push(arm + leg + 1);
            }
        }
        out
    }

    /// All partitions obtained by removing one box, ordered by the index of
    /// the shortened row.
    pub fn removable_boxes(&self) -> Result<Vec<Partition>> {
        if self.is_empty() {
            return Err(Error::NoRemovableBoxes);
        }
        let k = self.parts.len();
        let mut out = Vec::new();
        for i in 0..k {
            if i + 1 == k || self.parts[i] > self.parts[i + 1] {
                let mut parts = self.parts.clone();
                parts[i] -= 1;
                if parts[i] == 0 {
                    parts.pop();
                }
                out.push(Partition { parts });
            }
        }
        Ok(out)
    }

    /// Dimension of the Specht module, by the hook length formula.
    pub fn specht_dimension(&self) -> Result<u64> {
        let n = self.size() as u64;
        exact_ratio(1..=n, self.hook_lengths().into_iter().map(|h| h as u64), "specht dimension")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// All partitions of `m` in strictly descending lexicographic order, from
/// `(m)` down to `(1^m)`.
pub fn enumerate_partitions(m: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition::from_parts_unchecked(cur.clone()));
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(m, m, &mut Vec::new(), &mut out);
    out
}

/// All compositions of `n` with exactly `k` non-negative parts, in
/// descending lexicographic order.
pub fn weak_compositions(n: usize, k: usize) -> Vec<Composition> {
    fn go(rest: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if k == 0 {
            if rest == 0 {
                out.push(Composition::new(cur.clone()));
            }
            return;
        }
        if k == 1 {
            cur.push(rest);
            out.push(Composition::new(cur.clone()));
            cur.pop();
            return;
        }
        for p in (0..=rest).rev() {
            cur.push(p);
            go(rest - p, k - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, k, &mut Vec::new(), &mut out);
    out
}

/// All compositions of `n` with positive parts, in descending lexicographic
/// order. For `n = 0` this is the single empty composition.
pub fn strict_compositions(n: usize) -> Vec<Composition> {
    fn go(rest: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if rest == 0 {
            out.push(Composition::new(cur.clone()));
            return;
        }
        for p in (1..=rest).rev() {
            cur.push(p);
            go(rest - p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut out);
    out
}
