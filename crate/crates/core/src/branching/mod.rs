//! Branching of wreath product Specht modules.
//!
//! A Specht module of `S_m ≀ S_n` is indexed by a multipartition of `n` with
//! one component per partition of `m`, the components ordered like the
//! partitions of `m` in descending lexicographic order.

mod labelling;
mod layer;
mod matrices;
mod rules;

use std::collections::BTreeMap;

use serde::Serialize;

pub use labelling::{enumerate_good_labellings, labelling_coefficient, GoodLabelling};
pub use layer::{young_layer, YoungLayer};
pub use matrices::{filtration_multiplicities, mat_lambda};
pub use rules::{
    branch_first, branch_first_labellings, branch_second, verify_branch_dimensions, wreath_specht_dimension,
    BranchRule, DimensionReport,
};

use crate::multipartition::Multipartition;

/// Non-zero multiplicities indexed by multipartitions.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MultiplicityMap {
    entries: BTreeMap<Multipartition, u64>,
}

impl MultiplicityMap {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records `mult` at `key`; zeros are dropped.
    pub fn insert(&mut self, key: Multipartition, mult: u64) {
        debug_assert!(self.entries.keys().next().is_none_or(|k| k.len() == key.len() && k.size() == key.size()));
        if mult > 0 {
            self.entries.insert(key, mult);
        } else {
            self.entries.remove(&key);
        }
    }

    pub fn get(&self, key: &Multipartition) -> u64 {
        self.entries.get(key).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries in output order (see [`Multipartition::output_cmp`]).
    pub fn sorted_entries(&self) -> Vec<(&Multipartition, u64)> {
        let mut v: Vec<_> = self.entries.iter().map(|(k, &m)| (k, m)).collect();
        v.sort_by(|a, b| a.0.output_cmp(b.0));
        v
    }
}

#[derive(Serialize)]
struct Entry {
    nu: Vec<Vec<usize>>,
    mult: u64,
}

/// JSON document for a branching result.
#[derive(Serialize)]
pub struct BranchDocument {
    m: usize,
    n: usize,
    rule: &'static str,
    lambda: Vec<Vec<usize>>,
    multiplicities: Vec<Entry>,
}

impl BranchDocument {
    pub fn new(m: usize, rule: BranchRule, lambda: &Multipartition, map: &MultiplicityMap) -> Self {
        BranchDocument {
            m,
            n: lambda.size(),
            rule: rule.name(),
            lambda: lambda.to_nested(),
            multiplicities: map
                .sorted_entries()
                .into_iter()
                .map(|(k, mult)| Entry { nu: k.to_nested(), mult })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("branch document serializes")
    }
}
