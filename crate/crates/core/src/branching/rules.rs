use rayon::prelude::*;

use crate::arith::{checked_pow, multinomial};
use crate::error::{Error, Result};
use crate::multipartition::{enumerate_multipartitions, Multipartition};
use crate::partition::enumerate_partitions;

use super::labelling::enumerate_good_labellings;
use super::layer::young_layer;
use super::matrices::filtration_multiplicities;
use super::MultiplicityMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BranchRule {
    /// Restriction to `S_{m-1} ≀ S_n`.
    First,
    /// Restriction to `S_m ≀ S_{n-1}`.
    Second,
}

impl BranchRule {
    pub fn name(self) -> &'static str {
        match self {
            BranchRule::First => "first",
            BranchRule::Second => "second",
        }
    }
}

fn expect_components(m: usize, lambda: &Multipartition) -> Result<usize> {
    let r = enumerate_partitions(m).len();
    if lambda.len() != r {
        return Err(Error::ComponentMismatch { expected: r, actual: lambda.len() });
    }
    Ok(r)
}

/// Multiplicities of the Specht modules of `S_{m-1} ≀ S_n` in the restriction
/// of `S^λ`, summed over multipartition matrices supported on the Young layer.
pub fn branch_first(m: usize, lambda: &Multipartition) -> Result<MultiplicityMap> {
    let layer = young_layer(m)?;
    expect_components(m, lambda)?;
    filtration_multiplicities(layer.adjacency(), lambda, layer.lower().len())
}

/// The same multiplicities as [`branch_first`], summed over good labellings.
pub fn branch_first_labellings(m: usize, lambda: &Multipartition) -> Result<MultiplicityMap> {
    let layer = young_layer(m)?;
    expect_components(m, lambda)?;
    let mut out = MultiplicityMap::new();
    for nu in enumerate_multipartitions(lambda.size(), layer.lower().len()) {
        let mut total: u64 = 0;
        for l in enumerate_good_labellings(&layer, lambda, &nu)? {
            total = total.checked_add(l.coefficient()?).ok_or(Error::Overflow("branch multiplicity"))?;
        }
        out.insert(nu, total);
    }
    Ok(out)
}

/// Multiplicities of the Specht modules of `S_m ≀ S_{n-1}` in the restriction
/// of `S^λ`: removing a box from `λⁱ` contributes `dim S^{μⁱ}`.
pub fn branch_second(m: usize, lambda: &Multipartition) -> Result<MultiplicityMap> {
    expect_components(m, lambda)?;
    if lambda.size() == 0 {
        return Err(Error::InvalidArgument("second branching rule needs n >= 1".into()));
    }
    let mus = enumerate_partitions(m);
    let mut out = MultiplicityMap::new();
    for (i, component) in lambda.components().iter().enumerate() {
        if component.is_empty() {
            continue;
        }
        let mult = mus[i].specht_dimension()?;
        for delta in component.removable_boxes()? {
            out.insert(lambda.with_component(i, delta), mult);
        }
    }
    Ok(out)
}

/// `dim S^λ` for `S_m ≀ S_n`:
/// `n! / ∏ |λⁱ|! · ∏ (dim S^{μⁱ})^{|λⁱ|} · dim S^{λⁱ}`.
pub fn wreath_specht_dimension(m: usize, lambda: &Multipartition) -> Result<u64> {
    expect_components(m, lambda)?;
    let sizes = lambda.size_composition();
    let mut acc = multinomial(sizes.parts())?;
    for (mu, component) in enumerate_partitions(m).iter().zip(lambda.components()) {
        let base = checked_pow(mu.specht_dimension()?, component.size(), "wreath dimension")?;
        let own = component.specht_dimension()?;
        acc = acc.checked_mul(base).and_then(|a| a.checked_mul(own)).ok_or(Error::Overflow("wreath dimension"))?;
    }
    Ok(acc)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DimensionReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

/// Checks that restriction preserves dimension for every `S^λ` of
/// `S_m ≀ S_n` under the chosen rule.
pub fn verify_branch_dimensions(m: usize, n: usize, rule: BranchRule) -> Result<DimensionReport> {
    let r = enumerate_partitions(m).len();
    let lambdas = enumerate_multipartitions(n, r);
    let results: Vec<Result<Option<String>>> = lambdas
        .par_iter()
        .map(|lambda| {
            let expected = wreath_specht_dimension(m, lambda)?;
            let (map, sub_m) = match rule {
                BranchRule::First => (branch_first(m, lambda)?, m - 1),
                BranchRule::Second => (branch_second(m, lambda)?, m),
            };
            let mut total: u64 = 0;
            for (nu, mult) in map.sorted_entries() {
                let d = wreath_specht_dimension(sub_m, nu)?;
                total =
                    mult.checked_mul(d).and_then(|t| total.checked_add(t)).ok_or(Error::Overflow("dimension check"))?;
            }
            Ok((total != expected).then(|| format!("m={m} lambda={lambda}: sum {total} != dim {expected}")))
        })
        .collect();
    let mut report = DimensionReport::default();
    for res in results {
        report.checked += 1;
        if let Some(f) = res? {
            report.failures.push(f);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(parts: Vec<Vec<usize>>) -> Multipartition {
        Multipartition::from_parts(parts).unwrap()
    }

    #[test]
    fn worked_example_multiplicity() {
        let lambda = mp(vec![vec![2], vec![1, 1], vec![1, 1]]);
        let nu = mp(vec![vec![3], vec![2, 1]]);
        assert_eq!(branch_first(3, &lambda).unwrap().get(&nu), 1);
        assert_eq!(branch_first_labellings(3, &lambda).unwrap().get(&nu), 1);
    }

    #[test]
    fn first_rule_small_cases() {
        let empty = mp(vec![vec![], vec![], vec![]]);
        let map = branch_first(3, &empty).unwrap();
        assert_eq!(map.len(), 1);
        assert_eq!(map.get(&mp(vec![vec![], vec![]])), 1);

        let map = branch_first(2, &mp(vec![vec![1], vec![1]])).unwrap();
        assert_eq!(map.len(), 2);
        assert_eq!(map.get(&mp(vec![vec![2]])), 1);
        assert_eq!(map.get(&mp(vec![vec![1, 1]])), 1);

        assert_eq!(branch_first(3, &mp(vec![vec![1]])), Err(Error::ComponentMismatch { expected: 3, actual: 1 }));
    }

    #[test]
    fn second_rule_examples() {
        let map = branch_second(3, &mp(vec![vec![1], vec![1], vec![]])).unwrap();
        assert_eq!(map.len(), 2);
        assert_eq!(map.get(&mp(vec![vec![], vec![1], vec![]])), 1);
        assert_eq!(map.get(&mp(vec![vec![1], vec![], vec![]])), 2);

        let map = branch_second(3, &mp(vec![vec![], vec![1], vec![]])).unwrap();
        assert_eq!(map.len(), 1);
        assert_eq!(map.get(&mp(vec![vec![], vec![], vec![]])), 2);

        assert!(branch_second(2, &mp(vec![vec![], vec![]])).is_err());
    }

    #[test]
    fn wreath_dimension_examples() {
        assert_eq!(wreath_specht_dimension(3, &mp(vec![vec![2], vec![1, 1], vec![1, 1]])).unwrap(), 360);
        assert_eq!(wreath_specht_dimension(1, &mp(vec![vec![3, 2]])).unwrap(), 5);
        assert_eq!(wreath_specht_dimension(3, &mp(vec![vec![], vec![], vec![]])).unwrap(), 1);
        assert_eq!(wreath_specht_dimension(0, &mp(vec![vec![2, 1]])).unwrap(), 2);
    }

    #[test]
    fn worked_example_dimension_sum() {
        let lambda = mp(vec![vec![2], vec![1, 1], vec![1, 1]]);
        let total: u64 = branch_first(3, &lambda)
            .unwrap()
            .sorted_entries()
            .into_iter()
            .map(|(nu, mult)| mult * wreath_specht_dimension(2, nu).unwrap())
            .sum();
        assert_eq!(total, 360);
    }

    #[test]
    fn dimension_reports() {
        let r = verify_branch_dimensions(2, 1, BranchRule::Second).unwrap();
        assert_eq!(r.checked, 2);
        assert!(r.failures.is_empty());
        let r = verify_branch_dimensions(3, 3, BranchRule::First).unwrap();
        assert!(r.failures.is_empty(), "{:?}", r.failures);
    }
}
