//! Good labellings of `Y_m(λ, ν)` and their coefficients.

use crate::error::{Error, Result};
use crate::lr::lr_multi;
use crate::multipartition::{cartesian, Multipartition};
use crate::partition::{enumerate_partitions, Partition};

use super::layer::YoungLayer;
use super::matrices::support_flows;

/// A labelling of every edge of a Young layer by a partition, such that the
/// label sizes around upper node `i` add up to `|λⁱ|` and around lower node
/// `j` to `|νʲ|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoodLabelling<'a> {
    layer: &'a YoungLayer,
    lambda: Multipartition,
    nu: Multipartition,
    labels: Vec<Partition>,
}

impl<'a> GoodLabelling<'a> {
    pub fn layer(&self) -> &'a YoungLayer {
        self.layer
    }

    pub fn lambda(&self) -> &Multipartition {
        &self.lambda
    }

    pub fn nu(&self) -> &Multipartition {
        &self.nu
    }

    /// Labels in the order of [`YoungLayer::edges`].
    pub fn labels(&self) -> &[Partition] {
        &self.labels
    }

    pub fn label(&self, i: usize, j: usize) -> Option<&Partition> {
        self.layer.edges().iter().position(|&e| e == (i, j)).map(|k| &self.labels[k])
    }

    /// `M(L)`: the product over all nodes of `c(γ; labels of incident edges)`,
    /// where each upper node `μⁱ` carries `λⁱ` and each lower node `θʲ`
    /// carries `νʲ`.
    pub fn coefficient(&self) -> Result<u64> {
        let mut acc: u64 = 1;
        let upper = (0..self.lambda.len()).map(|i| {
            let tuple: Vec<Partition> = self.layer.upper_edges(i).map(|k| self.labels[k].clone()).collect();
            (self.lambda.component(i), tuple)
        });
        let lower = (0..self.nu.len()).map(|j| {
            let tuple: Vec<Partition> = self.layer.lower_edges(j).map(|k| self.labels[k].clone()).collect();
            (self.nu.component(j), tuple)
        });
        for (shape, tuple) in upper.chain(lower) {
            let c = lr_multi(shape, &tuple)?;
            if c == 0 {
                return Ok(0);
            }
            acc = acc.checked_mul(c).ok_or(Error::Overflow("labelling coefficient"))?;
        }
        Ok(acc)
    }
}

fn check_components(layer: &YoungLayer, lambda: &Multipartition, nu: &Multipartition) -> Result<()> {
    if lambda.len() != layer.upper().len() {
        return Err(Error::ComponentMismatch { expected: layer.upper().len(), actual: lambda.len() });
    }
    if nu.len() != layer.lower().len() {
        return Err(Error::ComponentMismatch { expected: layer.lower().len(), actual: nu.len() });
    }
    Ok(())
}

/// All good labellings of `Y_m(λ, ν)`: every edge-size flow with the
/// prescribed node sums, then every choice of partition of each edge size.
pub fn enumerate_good_labellings<'a>(
    layer: &'a YoungLayer,
    lambda: &Multipartition,
    nu: &Multipartition,
) -> Result<Vec<GoodLabelling<'a>>> {
    check_components(layer, lambda, nu)?;
    if lambda.size() != nu.size() {
        return Ok(Vec::new());
    }
    let flows = support_flows(
        layer.upper().len(),
        layer.edges(),
        lambda.size_composition().parts(),
        nu.size_composition().parts(),
    );
    let mut out = Vec::new();
    for flow in flows {
        let choices: Vec<Vec<Partition>> = flow.iter().map(|&s| enumerate_partitions(s)).collect();
        for labels in cartesian(&choices) {
            out.push(GoodLabelling { layer, lambda: lambda.clone(), nu: nu.clone(), labels });
        }
    }
    Ok(out)
}

pub fn labelling_coefficient(labelling: &GoodLabelling<'_>) -> Result<u64> {
    labelling.coefficient()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::branching::layer::young_layer;

    fn mp(parts: Vec<Vec<usize>>) -> Multipartition {
        Multipartition::from_parts(parts).unwrap()
    }

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn worked_example_labellings() {
        let y = young_layer(3).unwrap();
        let lambda = mp(vec![vec![2], vec![1, 1], vec![1, 1]]);
        let nu = mp(vec![vec![3], vec![2, 1]]);
        let all = enumerate_good_labellings(&y, &lambda, &nu).unwrap();
        assert_eq!(all.len(), 4);
        for l in &all {
            let sizes: Vec<usize> = l.labels().iter().map(Partition::size).collect();
            assert_eq!(sizes, vec![2, 1, 1, 2]);
        }
        let worked = vec![p(&[2]), p(&[1]), p(&[1]), p(&[1, 1])];
        let mut nonzero = 0;
        for l in &all {
            let c = l.coefficient().unwrap();
            if l.labels() == worked.as_slice() {
                assert_eq!(c, 1);
            } else {
                assert_eq!(c, 0);
            }
            nonzero += usize::from(c > 0);
        }
        assert_eq!(nonzero, 1);
        assert!(all.iter().any(|l| l.labels() == worked.as_slice()));
        assert_eq!(all[0].label(1, 1), Some(&p(&[1])));
        assert_eq!(all[0].label(0, 1), None);
    }

    #[test]
    fn empty_labelling() {
        let y = young_layer(3).unwrap();
        let lambda = mp(vec![vec![], vec![], vec![]]);
        let nu = mp(vec![vec![], vec![]]);
        let all = enumerate_good_labellings(&y, &lambda, &nu).unwrap();
        assert_eq!(all.len(), 1);
        assert!(all[0].labels().iter().all(Partition::is_empty));
        assert_eq!(all[0].coefficient().unwrap(), 1);
    }

    #[test]
    fn component_mismatch() {
        let y = young_layer(3).unwrap();
        let err = enumerate_good_labellings(&y, &mp(vec![vec![1]]), &mp(vec![vec![1], vec![]])).unwrap_err();
        assert_eq!(err, Error::ComponentMismatch { expected: 3, actual: 1 });
    }
}
