//! Multipartitions and the integer / multipartition matrices indexed by them.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, weak_compositions, Composition, Partition};

/// A tuple of partitions.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Multipartition {
    components: Vec<Partition>,
}

impl Multipartition {
    pub fn new(components: Vec<Partition>) -> Self {
        Multipartition { components }
    }

    pub fn from_parts(parts: Vec<Vec<usize>>) -> Result<Self> {
        parts.into_iter().map(Partition::new).collect::<Result<Vec<_>>>().map(Multipartition::new)
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Partition {
        &self.components[i]
    }

    /// Number of components.
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn size(&self) -> usize {
        self.components.iter().map(Partition::size).sum()
    }

    /// The composition of component sizes.
    pub fn size_composition(&self) -> Composition {
        Composition::new(self.components.iter().map(Partition::size).collect())
    }

    /// All parts of all components in order.
    pub fn concat(&self) -> Composition {
        Composition::new(self.components.iter().flat_map(|p| p.parts().iter().copied()).collect())
    }

    /// Replaces component `i`.
    pub fn with_component(&self, i: usize, p: Partition) -> Multipartition {
        let mut components = self.components.clone();
        components[i] = p;
        Multipartition { components }
    }

    /// Nonempty components, in order.
    pub fn nonempty_components(&self) -> impl Iterator<Item = &Partition> {
        self.components.iter().filter(|p| !p.is_empty())
    }

    pub fn to_nested(&self) -> Vec<Vec<usize>> {
        self.components.iter().map(|p| p.parts().to_vec()).collect()
    }

    /// Ordering used for all reported output: descending lexicographic on
    /// the concatenated parts, ties broken by descending lexicographic
    /// order on the components.
    pub fn output_cmp(&self, other: &Self) -> Ordering {
        other.concat().parts().cmp(self.concat().parts()).then_with(|| other.components.cmp(&self.components))
    }
}

impl From<Vec<Partition>> for Multipartition {
    fn from(components: Vec<Partition>) -> Self {
        Multipartition { components }
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// All multipartitions of `n` with the given component sizes.
pub fn multipartitions_with_sizes(sizes: &Composition) -> Vec<Multipartition> {
    let lists: Vec<Vec<Partition>> = sizes.parts().iter().map(|&s| enumerate_partitions(s)).collect();
    cartesian(&lists).into_iter().map(Multipartition::new).collect()
}

/// All `k`-component multipartitions of `n`: component sizes run over weak
/// compositions in descending lexicographic order, then each component over
/// its partitions in descending lexicographic order.
pub fn enumerate_multipartitions(n: usize, k: usize) -> Vec<Multipartition> {
    weak_compositions(n, k).iter().flat_map(multipartitions_with_sizes).collect()
}

/// Cartesian product in odometer order (last list varies fastest).
pub(crate) fn cartesian<T: Clone>(lists: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut out = vec![Vec::with_capacity(lists.len())];
    for list in lists {
        let mut next = Vec::with_capacity(out.len() * list.len());
        for prefix in &out {
            for item in list {
                let mut v = prefix.clone();
                v.push(item.clone());
                next.push(v);
            }
        }
        out = next;
    }
    out
}

/// Rectangular matrix of non-negative integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<usize>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::InvalidArgument("matrix rows have unequal lengths".into()));
        }
        Ok(IntegerMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn identity(k: usize) -> Self {
        let mut m = Self::zeros(k, k);
        for i in 0..k {
            m.set(i, i, 1);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> usize {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: usize) {
        self.data[i * self.cols + j] = v;
    }

    pub fn to_rows(&self) -> Vec<Vec<usize>> {
        self.data.chunks(self.cols.max(1)).take(self.rows).map(<[usize]>::to_vec).collect()
    }
}

/// Rectangular matrix whose entries are multipartitions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultipartitionMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Multipartition>,
}

impl MultipartitionMatrix {
    pub fn from_rows(rows: Vec<Vec<Multipartition>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::InvalidArgument("matrix rows have unequal lengths".into()));
        }
        Ok(MultipartitionMatrix { rows: r, cols: c, entries: rows.into_iter().flatten().collect() })
    }

    pub(crate) fn from_entries(rows: usize, cols: usize, entries: Vec<Multipartition>) -> Self {
        debug_assert_eq!(entries.len(), rows * cols);
        MultipartitionMatrix { rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Multipartition {
        &self.entries[i * self.cols + j]
    }

    /// Nonempty partitions along row `i`, entries in column order.
    pub fn row_tuple(&self, i: usize) -> Vec<Partition> {
        (0..self.cols).flat_map(|j| self.get(i, j).nonempty_components().cloned().collect::<Vec<_>>()).collect()
    }

    /// Nonempty partitions down column `j`, entries in row order.
    pub fn col_tuple(&self, j: usize) -> Vec<Partition> {
        (0..self.rows).flat_map(|i| self.get(i, j).nonempty_components().cloned().collect::<Vec<_>>()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn size_composition_and_concat() {
        let mp = Multipartition::from_parts(vec![vec![2], vec![], vec![1, 1]]).unwrap();
        assert_eq!(mp.size(), 4);
        assert_eq!(mp.size_composition().parts(), &[2, 0, 2]);
        assert_eq!(mp.concat().parts(), &[2, 1, 1]);
        assert_eq!(mp.to_string(), "[[2],[],[1,1]]");
    }

    #[test]
    fn multipartition_counts() {
        // 2-multipartitions of 2: sizes (2,0),(1,1),(0,2) → 2 + 1 + 2
        assert_eq!(enumerate_multipartitions(2, 2).len(), 5);
        assert_eq!(enumerate_multipartitions(0, 3), vec![Multipartition::new(vec![Partition::empty(); 3])]);
        assert_eq!(enumerate_multipartitions(3, 1).len(), 3);
    }

    #[test]
    fn output_order_is_descending_on_concatenation() {
        let a = Multipartition::from_parts(vec![vec![3], vec![]]).unwrap();
        let b = Multipartition::from_parts(vec![vec![2], vec![1]]).unwrap();
        let c = Multipartition::from_parts(vec![vec![2, 1], vec![]]).unwrap();
        let mut v = vec![b.clone(), c.clone(), a.clone()];
        v.sort_by(Multipartition::output_cmp);
        assert_eq!(v, vec![a, c, b]);
    }

    #[test]
    fn ragged_matrix_rejected() {
        assert!(IntegerMatrix::from_rows(vec![vec![1, 0], vec![1]]).is_err());
        let m = IntegerMatrix::from_rows(vec![vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(m, IntegerMatrix::identity(2));
    }
}
