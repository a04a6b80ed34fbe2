//! Young tableaux and skew tableaux.
//!
//! Boxes are addressed by `(row, column)` with absolute, 0-based columns, so
//! a skew tableau whose inner shape is not a partition may have gaps in its
//! columns. Column strictness compares vertically adjacent *boxes*, skipping
//! rows that have no box in that column.

use std::fmt;

use crate::error::{Error, Result};
use crate::partition::{Composition, Partition};

/// A filling of the Young diagram of a composition by positive integers.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.iter().flatten().any(|&v| v == 0) {
            return Err(Error::InvalidArgument("tableau entries must be positive".into()));
        }
        Ok(Tableau { rows })
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<usize>>) -> Self {
        Tableau { rows }
    }

    /// Fills `shape` row by row from a flat sequence of entries in box order.
    pub fn from_box_order(shape: &Composition, entries: &[usize]) -> Result<Self> {
        if shape.size() != entries.len() {
            return Err(Error::SizeMismatch(format!(
                "shape {shape} has {} boxes, got {} entries",
                shape.size(),
                entries.len()
            )));
        }
        let mut rows = Vec::with_capacity(shape.len());
        let mut k = 0;
        for &len in shape.parts() {
            rows.push(entries[k..k + len].to_vec());
            k += len;
        }
        Tableau::from_rows(rows)
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Composition {
        Composition::new(self.rows.iter().map(Vec::len).collect())
    }

    pub fn num_boxes(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Entries in box order: left to right along each row, top row first.
    pub fn box_entries(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    pub fn content_type(&self) -> Composition {
        content_of(self.rows.iter().flatten().copied())
    }

    pub fn is_semistandard(&self) -> bool {
        semistandard(self.rows.iter().map(|r| (0usize, r.as_slice())))
    }

    pub fn has_weakly_increasing_rows(&self) -> bool {
        self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]))
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rows(f, self.rows.iter().map(|r| (0usize, r.as_slice())))
    }
}

/// The diagram of `outer` with the first `inner[i]` boxes of each row removed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Composition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Composition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InvalidArgument(format!("{inner} does not lie inside {outer}")));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape { outer, inner: Composition::default() }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Composition {
        &self.inner
    }

    /// First occupied column of row `i`.
    pub fn row_start(&self, i: usize) -> usize {
        self.inner.parts().get(i).copied().unwrap_or(0)
    }

    pub fn row_len(&self, i: usize) -> usize {
        self.outer.part(i) - self.row_start(i)
    }

    pub fn num_rows(&self) -> usize {
        self.outer.len()
    }

    pub fn num_boxes(&self) -> usize {
        self.outer.size() - self.inner.size()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewTableau {
    shape: SkewShape,
    rows: Vec<Vec<usize>>,
}

impl SkewTableau {
    pub fn new(shape: SkewShape, rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.len() != shape.num_rows() {
            return Err(Error::SizeMismatch(format!("skew shape has {} rows, got {}", shape.num_rows(), rows.len())));
        }
        for (i, r) in rows.iter().enumerate() {
            if r.len() != shape.row_len(i) {
                return Err(Error::SizeMismatch(format!(
                    "row {} needs {} entries, got {}",
                    i + 1,
                    shape.row_len(i),
                    r.len()
                )));
            }
        }
        if rows.iter().flatten().any(|&v| v == 0) {
            return Err(Error::InvalidArgument("tableau entries must be positive".into()));
        }
        Ok(SkewTableau { shape, rows })
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    fn placed_rows(&self) -> impl Iterator<Item = (usize, &[usize])> {
        self.rows.iter().enumerate().map(|(i, r)| (self.shape.row_start(i), r.as_slice()))
    }

    pub fn content_type(&self) -> Composition {
        content_of(self.rows.iter().flatten().copied())
    }

    pub fn is_semistandard(&self) -> bool {
        semistandard(self.placed_rows())
    }

    /// Rows read top to bottom, each from right to left.
    pub fn reverse_reading_word(&self) -> Vec<usize> {
        self.rows.iter().flat_map(|r| r.iter().rev().copied()).collect()
    }
}

impl fmt::Display for SkewTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rows(f, self.placed_rows())
    }
}

fn write_rows<'a, I>(f: &mut fmt::Formatter<'_>, rows: I) -> fmt::Result
where
    I: Iterator<Item = (usize, &'a [usize])>,
{
    for (i, (start, row)) in rows.enumerate() {
        if i > 0 {
            writeln!(f)?;
        }
        let cells: Vec<String> =
            std::iter::repeat_n(".".to_string(), start).chain(row.iter().map(usize::to_string)).collect();
        write!(f, "{}", cells.join(" "))?;
    }
    Ok(())
}

fn content_of(entries: impl Iterator<Item = usize>) -> Composition {
    let mut counts: Vec<usize> = Vec::new();
    for v in entries {
        if v > counts.len() {
            counts.resize(v, 0);
        }
        counts[v - 1] += 1;
    }
    Composition::new(counts)
}

fn semistandard<'a, I>(rows: I) -> bool
where
    I: Iterator<Item = (usize, &'a [usize])>,
{
    // lowest entry seen so far in each absolute column
    let mut column_bottom: Vec<Option<usize>> = Vec::new();
    for (start, row) in rows {
        if row.windows(2).any(|w| w[0] > w[1]) {
            return false;
        }
        for (k, &v) in row.iter().enumerate() {
            let c = start + k;
            if c >= column_bottom.len() {
                column_bottom.resize(c + 1, None);
            }
            if let Some(above) = column_bottom[c] {
                if above >= v {
                    return false;
                }
            }
            column_bottom[c] = Some(v);
        }
    }
    true
}

/// True if every prefix of `word` contains at least as many `i` as `i+1`,
/// for every `i`.
pub fn is_lattice_word(word: &[usize]) -> bool {
    let mut counts: Vec<usize> = Vec::new();
    for &v in word {
        if v == 0 {
            return false;
        }
        if v > counts.len() {
            counts.resize(v, 0);
        }
        counts[v - 1] += 1;
        if v > 1 && counts[v - 1] > counts[v - 2] {
            return false;
        }
    }
    true
}

/// All semistandard skew tableaux of the given shape and type, in
/// lexicographic order of their row-major fillings. A type whose size
/// differs from the number of boxes yields nothing.
pub fn enumerate_skew_ssyt(shape: &SkewShape, content: &Composition) -> Vec<SkewTableau> {
    if content.size() != shape.num_boxes() {
        return Vec::new();
    }
    let cells: Vec<(usize, usize)> =
        (0..shape.num_rows()).flat_map(|i| (shape.row_start(i)..shape.outer().part(i)).map(move |c| (i, c))).collect();
    let width = shape.outer().part(0);
    let mut remaining = content.parts().to_vec();
    let mut values = vec![0usize; cells.len()];
    let mut column_bottom: Vec<Option<usize>> = vec![None; width];
    let mut out = Vec::new();

    fn go(
        k: usize,
        cells: &[(usize, usize)],
        remaining: &mut [usize],
        values: &mut [usize],
        column_bottom: &mut [Option<usize>],
        shape: &SkewShape,
        out: &mut Vec<SkewTableau>,
    ) {
        if k == cells.len() {
            let mut rows: Vec<Vec<usize>> = vec![Vec::new(); shape.num_rows()];
            for (&(i, _), &v) in cells.iter().zip(values.iter()) {
                rows[i].push(v);
            }
            out.push(SkewTableau { shape: shape.clone(), rows });
            return;
        }
        let (i, c) = cells[k];
        let mut lo = 1;
        if k > 0 && cells[k - 1].0 == i {
            lo = lo.max(values[k - 1]);
        }
        if let Some(above) = column_bottom[c] {
            lo = lo.max(above + 1);
        }
        for v in lo..=remaining.len() {
            if remaining[v - 1] == 0 {
                continue;
            }
            remaining[v - 1] -= 1;
            values[k] = v;
            let saved = column_bottom[c];
            column_bottom[c] = Some(v);
            go(k + 1, cells, remaining, values, column_bottom, shape, out);
            column_bottom[c] = saved;
            remaining[v - 1] += 1;
        }
    }

    go(0, &cells, &mut remaining, &mut values, &mut column_bottom, shape, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn figure_skew_tableau() -> SkewTableau {
        let shape = SkewShape::new(part(&[6, 4, 3, 3, 1]), Composition::new(vec![3, 4, 2, 1])).unwrap();
        SkewTableau::new(shape, vec![vec![1, 3, 3], vec![], vec![1], vec![2, 2], vec![3]]).unwrap()
    }

    #[test]
    fn figure_tableau_is_semistandard() {
        let t = figure_skew_tableau();
        assert!(t.is_semistandard());
        assert_eq!(t.content_type().parts(), &[2, 2, 3]);
        assert_eq!(t.reverse_reading_word(), vec![3, 3, 1, 1, 2, 2, 3]);
        assert_eq!(t.to_string(), ". . . 1 3 3\n. . . .\n. . 1\n. 2 2\n3");
    }

    #[test]
    fn content_type_examples() {
        let t = Tableau::from_rows(vec![vec![1, 2, 1, 3, 2], vec![2, 3, 2], vec![2, 3, 1, 3], vec![1]]).unwrap();
        assert_eq!(t.shape().parts(), &[5, 3, 4, 1]);
        assert_eq!(t.content_type().parts(), &[4, 5, 4]);
        assert!(Tableau::from_rows(vec![]).unwrap().content_type().is_empty());
        assert_eq!(Tableau::from_rows(vec![vec![3]]).unwrap().content_type().parts(), &[0, 0, 1]);
    }

    #[test]
    fn semistandard_failures() {
        assert!(!Tableau::from_rows(vec![vec![2, 1]]).unwrap().is_semistandard());
        assert!(!Tableau::from_rows(vec![vec![1], vec![1]]).unwrap().is_semistandard());
        assert!(Tableau::from_rows(vec![vec![1, 1], vec![2]]).unwrap().is_semistandard());
    }

    #[test]
    fn column_strictness_crosses_gaps() {
        // boxes in column 0 at rows 0 and 2 only
        let shape = SkewShape::new(part(&[1, 1, 1]), Composition::new(vec![0, 1, 0])).unwrap();
        let bad = SkewTableau::new(shape.clone(), vec![vec![2], vec![], vec![2]]).unwrap();
        let good = SkewTableau::new(shape, vec![vec![1], vec![], vec![2]]).unwrap();
        assert!(!bad.is_semistandard());
        assert!(good.is_semistandard());
    }

    #[test]
    fn reading_word_edge_cases() {
        let empty = SkewTableau::new(SkewShape::straight(Partition::empty()), vec![]).unwrap();
        assert!(empty.reverse_reading_word().is_empty());
        let row = SkewTableau::new(SkewShape::straight(part(&[2])), vec![vec![1, 2]]).unwrap();
        assert_eq!(row.reverse_reading_word(), vec![2, 1]);
    }

    #[test]
    fn lattice_words() {
        assert!(is_lattice_word(&[1, 1, 2, 1, 2, 3]));
        assert!(!is_lattice_word(&[2, 1]));
        assert!(!is_lattice_word(&[1, 2, 2]));
        assert!(is_lattice_word(&[]));
    }

    #[test]
    fn skew_ssyt_examples() {
        let s21 = SkewShape::straight(part(&[2, 1]));
        assert_eq!(enumerate_skew_ssyt(&s21, &Composition::new(vec![2, 1])).len(), 1);

        let s1 = SkewShape::straight(part(&[1]));
        let one = enumerate_skew_ssyt(&s1, &Composition::new(vec![0, 1]));
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].rows(), &[vec![2]]);

        let s2 = SkewShape::straight(part(&[2]));
        let t = enumerate_skew_ssyt(&s2, &Composition::new(vec![1, 0, 1]));
        assert_eq!(t.len(), 1);
        assert_eq!(t[0].rows(), &[vec![1, 3]]);
        assert!(enumerate_skew_ssyt(&s2, &Composition::new(vec![1])).is_empty());
    }

    #[test]
    fn invalid_skew_shapes() {
        assert!(SkewShape::new(part(&[2, 1]), Composition::new(vec![1, 2])).is_err());
        assert!(SkewShape::new(part(&[2]), Composition::new(vec![1, 0, 0])).is_err());
        let s = SkewShape::straight(part(&[2]));
        assert!(SkewTableau::new(s, vec![vec![1]]).is_err());
    }
}
