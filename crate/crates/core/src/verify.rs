//! Verification suites comparing computed quantities with independent
//! brute-force oracles or with identities they must satisfy.
//!
//! Instances are enumerated in a fixed order and checked in parallel; results
//! are reported in enumeration order.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::branching::{branch_first, branch_first_labellings, branch_second, verify_branch_dimensions, BranchRule};
use crate::cosets::{
    brute_force_double_cosets, coset_lookup, double_coset_reps, enumerate_weakly_increasing, rho_cosets_for_sizes,
    standard_tableau, young_subgroup_elements,
};
use crate::error::{Error, Result};
use crate::lr::{lr_coefficient, lr_multi};
use crate::multipartition::{enumerate_multipartitions, Multipartition};
use crate::partition::{enumerate_partitions, strict_compositions, weak_compositions, Composition, Partition};
use crate::perm::{all_permutations, Permutation};
use crate::schur::schur_product_oracle;
use crate::tableau::{enumerate_skew_ssyt, SkewShape};

/// How many failure descriptions a report keeps.
pub const MAX_EXAMPLES: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    LrOracle,
    Cosets,
    DimensionsFirst,
    DimensionsSecond,
    LabellingEquivalence,
    Stabilizers,
    LengthLemma,
    MinimalLength,
    Rho,
    SpechtDimension,
    Degeneration,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::LrOracle,
        Suite::Cosets,
        Suite::DimensionsFirst,
        Suite::DimensionsSecond,
        Suite::LabellingEquivalence,
        Suite::Stabilizers,
        Suite::LengthLemma,
        Suite::MinimalLength,
        Suite::Rho,
        Suite::SpechtDimension,
        Suite::Degeneration,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::LrOracle => "lr-oracle",
            Suite::Cosets => "cosets",
            Suite::DimensionsFirst => "dimensions-first",
            Suite::DimensionsSecond => "dimensions-second",
            Suite::LabellingEquivalence => "labelling-equivalence",
            Suite::Stabilizers => "stabilizers",
            Suite::LengthLemma => "length-lemma",
            Suite::MinimalLength => "minimal-length",
            Suite::Rho => "rho",
            Suite::SpechtDimension => "specht-dimension",
            Suite::Degeneration => "degeneration",
        }
    }

    /// Default `(max_m, max_n)`. Suites that do not range over `m` ignore it.
    pub fn default_bounds(self) -> Bounds {
        let (max_m, max_n) = match self {
            Suite::LrOracle => (0, 8),
            Suite::Cosets | Suite::Stabilizers | Suite::LengthLemma | Suite::MinimalLength => (0, 6),
            Suite::Rho => (5, 6),
            Suite::DimensionsFirst => (4, 5),
            Suite::DimensionsSecond => (5, 6),
            Suite::LabellingEquivalence => (4, 4),
            Suite::SpechtDimension => (0, 8),
            Suite::Degeneration => (0, 8),
        };
        Bounds { max_m, max_n }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub max_m: usize,
    pub max_n: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub bounds: Bounds,
    pub checked: usize,
    pub failed: usize,
    /// The first few failures, in enumeration order.
    pub examples: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    fn collect(suite: Suite, bounds: Bounds, outcomes: Vec<Result<Vec<String>>>, checked: usize) -> Result<Self> {
        let mut failed = 0;
        let mut examples = Vec::new();
        for outcome in outcomes {
            for f in outcome? {
                failed += 1;
                if examples.len() < MAX_EXAMPLES {
                    examples.push(f);
                }
            }
        }
        Ok(SuiteReport { suite: suite.name(), bounds, checked, failed, examples })
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} (checked {}, failed {}; max_m={}, max_n={})",
            self.suite,
            if self.passed() { "ok" } else { "FAILED" },
            self.checked,
            self.failed,
            self.bounds.max_m,
            self.bounds.max_n
        )?;
        for e in &self.examples {
            write!(f, "\n  {e}")?;
        }
        Ok(())
    }
}

/// Runs each instance in parallel; `check` returns the failures it found and
/// the number of individual checks it made.
fn run_instances<T, F>(suite: Suite, bounds: Bounds, instances: Vec<T>, check: F) -> Result<SuiteReport>
where
    T: Sync,
    F: Fn(&T) -> Result<(usize, Vec<String>)> + Sync,
{
    let results: Vec<Result<(usize, Vec<String>)>> = instances.par_iter().map(&check).collect();
    let mut checked = 0;
    let mut outcomes = Vec::with_capacity(results.len());
    for r in results {
        outcomes.push(r.map(|(c, f)| {
            checked += c;
            f
        }));
    }
    SuiteReport::collect(suite, bounds, outcomes, checked)
}

pub fn run_suite(suite: Suite, bounds: Bounds) -> Result<SuiteReport> {
    match suite {
        Suite::LrOracle => lr_oracle(bounds),
        Suite::Cosets => cosets(bounds),
        Suite::DimensionsFirst => dimensions(bounds, BranchRule::First),
        Suite::DimensionsSecond => dimensions(bounds, BranchRule::Second),
        Suite::LabellingEquivalence => labelling_equivalence(bounds),
        Suite::Stabilizers => stabilizers(bounds),
        Suite::LengthLemma => length_lemma(bounds),
        Suite::MinimalLength => minimal_length(bounds),
        Suite::Rho => rho(bounds),
        Suite::SpechtDimension => specht_dimension(bounds),
        Suite::Degeneration => degeneration(bounds),
    }
}

fn lr_oracle(bounds: Bounds) -> Result<SuiteReport> {
    let mut pairs = Vec::new();
    for total in 0..=bounds.max_n {
        for a in 0..=total {
            for alpha in enumerate_partitions(a) {
                for beta in enumerate_partitions(total - a) {
                    pairs.push((alpha.clone(), beta));
                }
            }
        }
    }
    run_instances(Suite::LrOracle, bounds, pairs, |(alpha, beta)| {
        let total = alpha.size() + beta.size();
        let oracle = schur_product_oracle(alpha, beta, total)?;
        let mut failures = Vec::new();
        let lambdas = enumerate_partitions(total);
        for lambda in &lambdas {
            let rule = lr_coefficient(lambda, alpha, beta);
            let expected = oracle.coefficient(lambda);
            if rule != expected {
                failures.push(format!("c^{lambda}_{{{alpha},{beta}}}: rule {rule}, oracle {expected}"));
            }
        }
        Ok((lambdas.len(), failures))
    })
}

fn cosets(bounds: Bounds) -> Result<SuiteReport> {
    let mut pairs = Vec::new();
    for n in 1..=bounds.max_n {
        let comps = strict_compositions(n);
        for gamma in &comps {
            for alpha in &comps {
                pairs.push((gamma.clone(), alpha.clone()));
            }
        }
    }
    // a few shapes with zero parts, which must behave like their strict versions
    pairs.push((Composition::new(vec![2, 0, 1]), Composition::new(vec![0, 3])));
    pairs.push((Composition::new(vec![0, 2, 1, 0]), Composition::new(vec![1, 0, 2])));
    run_instances(Suite::Cosets, bounds, pairs, |(gamma, alpha)| {
        let n = gamma.size();
        let system = double_coset_reps(gamma, alpha)?;
        let oracle = brute_force_double_cosets(gamma, alpha, n.max(1))?;
        let lookup = coset_lookup(&oracle);
        let mut failures = Vec::new();
        let total: usize = oracle.iter().map(Vec::len).sum();
        let expected_total = (1..=n).product::<usize>();
        if total != expected_total {
            failures.push(format!("{gamma} {alpha}: coset sizes sum to {total}, not {expected_total}"));
        }
        let hit: BTreeSet<usize> = system.reps.iter().map(|r| lookup[r.rank()]).collect();
        if system.reps.len() != oracle.len() || hit.len() != oracle.len() {
            failures.push(format!(
                "{gamma} {alpha}: {} reps hit {} of {} cosets",
                system.reps.len(),
                hit.len(),
                oracle.len()
            ));
        }
        let standard = standard_tableau(alpha, gamma)?;
        for (rep, target) in system.reps.iter().zip(enumerate_weakly_increasing(alpha, gamma)?) {
            if rep.act_on_tableau(&standard)? != target {
                failures.push(format!("{gamma} {alpha}: {rep} does not carry the standard tableau to its target"));
            }
        }
        Ok((1, failures))
    })
}

fn dimensions(bounds: Bounds, rule: BranchRule) -> Result<SuiteReport> {
    let suite = match rule {
        BranchRule::First => Suite::DimensionsFirst,
        BranchRule::Second => Suite::DimensionsSecond,
    };
    let mut checked = 0;
    let mut outcomes = Vec::new();
    for m in 2..=bounds.max_m {
        for n in 1..=bounds.max_n {
            let report = verify_branch_dimensions(m, n, rule)?;
            checked += report.checked;
            outcomes.push(Ok(report.failures));
        }
    }
    SuiteReport::collect(suite, bounds, outcomes, checked)
}

fn labelling_equivalence(bounds: Bounds) -> Result<SuiteReport> {
    let mut instances = Vec::new();
    for m in 2..=bounds.max_m {
        let r = enumerate_partitions(m).len();
        for n in 1..=bounds.max_n {
            instances.extend(enumerate_multipartitions(n, r).into_iter().map(|l| (m, l)));
        }
    }
    run_instances(Suite::LabellingEquivalence, bounds, instances, |(m, lambda)| {
        let by_matrices = branch_first(*m, lambda)?;
        let by_labellings = branch_first_labellings(*m, lambda)?;
        let mut failures = Vec::new();
        let nus = enumerate_multipartitions(lambda.size(), enumerate_partitions(m - 1).len());
        for nu in &nus {
            let (a, b) = (by_matrices.get(nu), by_labellings.get(nu));
            if a != b {
                failures.push(format!("m={m} lambda={lambda} nu={nu}: matrices {a}, labellings {b}"));
            }
        }
        Ok((nus.len(), failures))
    })
}

fn stabilizer_instances(max_n: usize) -> Vec<(Composition, Composition)> {
    // the action only renumbers boxes, so one shape per type exercises every
    // entry pattern; all shapes are covered below the largest degree
    let mut out = Vec::new();
    for n in 1..=max_n {
        let comps = strict_compositions(n);
        for gamma in &comps {
            if n < max_n {
                out.extend(comps.iter().map(|alpha| (gamma.clone(), alpha.clone())));
            } else {
                out.push((gamma.clone(), Composition::new(vec![n])));
                out.push((gamma.clone(), Composition::new(vec![1; n])));
            }
        }
    }
    out
}

fn stabilizers(bounds: Bounds) -> Result<SuiteReport> {
    run_instances(Suite::Stabilizers, bounds, stabilizer_instances(bounds.max_n), |(gamma, alpha)| {
        let n = gamma.size();
        let standard = standard_tableau(alpha, gamma)?;
        let perms = all_permutations(n);
        let young = young_subgroup_elements(gamma);
        let mut failures = Vec::new();
        for sigma in &perms {
            let moved = sigma.act_on_tableau(&standard)?;
            let mut stab = Vec::new();
            for pi in &perms {
                if pi.act_on_tableau(&moved)? == moved {
                    stab.push(pi.clone());
                }
            }
            let inv = sigma.inverse();
            let mut conj: Vec<Permutation> = young.iter().map(|y| inv.then(y).then(sigma)).collect();
            conj.sort();
            stab.sort();
            if stab != conj {
                failures.push(format!("gamma={gamma} alpha={alpha} sigma={sigma}: stabilizer is not the conjugate"));
            }
        }
        Ok((perms.len(), failures))
    })
}

fn length_lemma(bounds: Bounds) -> Result<SuiteReport> {
    let degrees: Vec<usize> = (1..=bounds.max_n).collect();
    run_instances(Suite::LengthLemma, bounds, degrees, |&n| {
        let mut failures = Vec::new();
        let mut checked = 0;
        for sigma in all_permutations(n) {
            for j in sigma.inverse().descents() {
                checked += 1;
                let shorter = sigma.then(&Permutation::adjacent_transposition(n, j));
                if shorter.length() + 1 != sigma.length() {
                    failures.push(format!("sigma={sigma} j={j}: length {} then {}", sigma.length(), shorter.length()));
                }
            }
        }
        Ok((checked, failures))
    })
}

fn minimal_length(bounds: Bounds) -> Result<SuiteReport> {
    let mut pairs = Vec::new();
    for n in 1..=bounds.max_n {
        for alpha in strict_compositions(n) {
            pairs.push(alpha);
        }
    }
    run_instances(Suite::MinimalLength, bounds, pairs, |alpha| {
        let n = alpha.size();
        let young = young_subgroup_elements(alpha);
        let minimal: Vec<Permutation> = all_permutations(n)
            .into_iter()
            .filter(|sigma| {
                let len = sigma.length();
                young.iter().all(|y| sigma.then(y).length() >= len)
            })
            .collect();
        let mut failures = Vec::new();
        let mut checked = 0;
        for gamma in strict_compositions(n) {
            let standard = standard_tableau(alpha, &gamma)?;
            for sigma in &minimal {
                checked += 1;
                if !sigma.act_on_tableau(&standard)?.has_weakly_increasing_rows() {
                    failures.push(format!("alpha={alpha} gamma={gamma} sigma={sigma}: rows not weakly increasing"));
                }
            }
        }
        Ok((checked, failures))
    })
}

fn rho(bounds: Bounds) -> Result<SuiteReport> {
    let max_components = enumerate_partitions(bounds.max_m).len().max(1);
    let mut shapes = Vec::new();
    for n in 1..=bounds.max_n {
        for k in 1..=max_components {
            shapes.extend(weak_compositions(n, k));
        }
    }
    run_instances(Suite::Rho, bounds, shapes, |sizes| {
        let n = sizes.size();
        let point_stabilizer = Composition::new(if n > 1 { vec![n - 1, 1] } else { vec![1] });
        let oracle = brute_force_double_cosets(sizes, &point_stabilizer, n)?;
        let lookup = coset_lookup(&oracle);
        let reps = rho_cosets_for_sizes(sizes)?;
        let hit: Vec<usize> = reps.iter().map(|(_, r)| lookup[r.rank()]).collect();
        let distinct: BTreeSet<usize> = hit.iter().copied().collect();
        let failures = if distinct.len() == hit.len() && hit.len() == oracle.len() {
            Vec::new()
        } else {
            vec![format!("sizes={sizes}: {} rho cycles hit {} of {} cosets", hit.len(), distinct.len(), oracle.len())]
        };
        Ok((1, failures))
    })
}

/// Number of standard tableaux of a shape, by enumeration.
fn count_standard_tableaux(lambda: &Partition) -> usize {
    let content = Composition::new(vec![1; lambda.size()]);
    enumerate_skew_ssyt(&SkewShape::straight(lambda.clone()), &content).len()
}

fn specht_dimension(bounds: Bounds) -> Result<SuiteReport> {
    let lambdas: Vec<Partition> = (0..=bounds.max_n).flat_map(enumerate_partitions).collect();
    run_instances(Suite::SpechtDimension, bounds, lambdas, |lambda| {
        let hook = lambda.specht_dimension()?;
        let mut failures = Vec::new();
        let mut checked = 1;
        let brute = count_standard_tableaux(lambda) as u64;
        if hook != brute {
            failures.push(format!("{lambda}: hook length {hook}, standard tableaux {brute}"));
        }
        // the repeated-product count is much slower; stop one size earlier
        if lambda.size() < bounds.max_n.max(1) {
            checked += 1;
            let boxes = vec![Partition::new(vec![1])?; lambda.size()];
            let via_lr = lr_multi(lambda, &boxes)?;
            if hook != via_lr {
                failures.push(format!("{lambda}: hook length {hook}, product of boxes {via_lr}"));
            }
        }
        Ok((checked, failures))
    })
}

fn degeneration(bounds: Bounds) -> Result<SuiteReport> {
    let lambdas: Vec<Partition> = (1..=bounds.max_n).flat_map(enumerate_partitions).collect();
    run_instances(Suite::Degeneration, bounds, lambdas, |lambda| {
        let single = Multipartition::new(vec![lambda.clone()]);
        let map = branch_second(1, &single)?;
        let expected: Vec<Partition> = lambda.removable_boxes()?;
        let mut failures = Vec::new();
        let entries = map.sorted_entries();
        let got: BTreeSet<&Partition> = entries.iter().map(|(nu, _)| nu.component(0)).collect();
        if entries.len() != expected.len()
            || got != expected.iter().collect()
            || entries.iter().any(|&(_, mult)| mult != 1)
        {
            failures.push(format!("{lambda}: second rule gives {} entries, not the removable boxes", entries.len()));
        }
        // restricting S_1 ≀ S_n to S_0 ≀ S_n changes nothing
        let first = branch_first(1, &single)?;
        if first.len() != 1 || first.get(&single) != 1 {
            failures.push(format!("{lambda}: first rule is not the identity"));
        }
        Ok((2, failures))
    })
}
