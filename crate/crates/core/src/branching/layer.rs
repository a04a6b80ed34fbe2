use crate::error::{Error, Result};
use crate::multipartition::IntegerMatrix;
use crate::partition::{enumerate_partitions, Partition};

/// Layers `m` and `m - 1` of Young's graph with the box-removal edges
/// between them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YoungLayer {
    m: usize,
    upper: Vec<Partition>,
    lower: Vec<Partition>,
    /// `(i, j)` when `lower[j]` is `upper[i]` with one box removed, sorted.
    edges: Vec<(usize, usize)>,
    adjacency: IntegerMatrix,
}

impl YoungLayer {
    pub fn new(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidArgument("young layer needs m >= 1".into()));
        }
        let upper = enumerate_partitions(m);
        let lower = enumerate_partitions(m - 1);
        let mut edges = Vec::new();
        let mut adjacency = IntegerMatrix::zeros(upper.len(), lower.len());
        for (i, mu) in upper.iter().enumerate() {
            let removed = mu.removable_boxes()?;
            for (j, theta) in lower.iter().enumerate() {
                if removed.contains(theta) {
                    edges.push((i, j));
                    adjacency.set(i, j, 1);
                }
            }
        }
        Ok(YoungLayer { m, upper, lower, edges, adjacency })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn upper(&self) -> &[Partition] {
        &self.upper
    }

    pub fn lower(&self) -> &[Partition] {
        &self.lower
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn adjacency(&self) -> &IntegerMatrix {
        &self.adjacency
    }

    /// Indices into `edges` touching upper node `i`, by ascending `j`.
    pub fn upper_edges(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().enumerate().filter(move |(_, e)| e.0 == i).map(|(k, _)| k)
    }

    /// Indices into `edges` touching lower node `j`, by ascending `i`.
    pub fn lower_edges(&self, j: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().enumerate().filter(move |(_, e)| e.1 == j).map(|(k, _)| k)
    }
}

pub fn young_layer(m: usize) -> Result<YoungLayer> {
    YoungLayer::new(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn layer_three() {
        let y = young_layer(3).unwrap();
        assert_eq!(y.upper().len(), 3);
        assert_eq!(y.lower().len(), 2);
        assert_eq!(y.edges(), &[(0, 0), (1, 0), (1, 1), (2, 1)]);
        assert_eq!(y.adjacency().to_rows(), vec![vec![1, 0], vec![1, 1], vec![0, 1]]);
    }

    #[test]
    fn layer_one_and_four() {
        let y = young_layer(1).unwrap();
        assert_eq!((y.upper().len(), y.lower().len(), y.edges().len()), (1, 1, 1));
        assert!(y.lower()[0].is_empty());
        let y = young_layer(4).unwrap();
        assert_eq!((y.upper().len(), y.lower().len(), y.edges().len()), (5, 3, 7));
        assert!(young_layer(0).is_err());
    }

    #[test]
    fn adjacency_matches_removable_boxes() {
        for m in 1..=7 {
            let y = young_layer(m).unwrap();
            for (i, mu) in y.upper().iter().enumerate() {
                let removed = mu.removable_boxes().unwrap();
                for (j, theta) in y.lower().iter().enumerate() {
                    assert_eq!(y.adjacency().get(i, j) == 1, removed.contains(theta));
                }
            }
        }
    }
}
