//! Schur-basis expansion of `s_α · s_β` computed from monomials alone, used
//! as an independent check on the Littlewood-Richardson rule.
//!
//! Both factors are expanded over semistandard tableaux in `N = |α| + |β|`
//! variables and multiplied. The product is symmetric, so only exponent
//! vectors that are partitions are kept. The lexicographically greatest
//! remaining exponent `λ` is then peeled off together with that multiple of
//! `s_λ`, until nothing remains.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Default bound on `|α| + |β|` for [`schur_product_oracle`].
pub const DEFAULT_SCHUR_BOUND: usize = 10;

type Exponent = Vec<u8>;
type Poly = HashMap<Exponent, i64>;

thread_local! {
    static MONOMIALS: RefCell<HashMap<(Partition, usize), std::rc::Rc<Poly>>> = RefCell::new(HashMap::new());
}

/// Finite Schur-basis expansion with positive coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SchurExpansion {
    terms: BTreeMap<Partition, u64>,
}

impl SchurExpansion {
    pub fn terms(&self) -> &BTreeMap<Partition, u64> {
        &self.terms
    }

    pub fn coefficient(&self, lambda: &Partition) -> u64 {
        self.terms.get(lambda).copied().unwrap_or(0)
    }

    pub fn total_mass(&self) -> u64 {
        self.terms.values().sum()
    }
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.terms.iter().rev().map(|(p, c)| format!("{p}:{c}")).collect();
        write!(f, "{{{}}}", body.join(", "))
    }
}

/// Monomial expansion of `s_λ` in `nvars` variables: exponent vector → number
/// of semistandard tableaux of shape `λ` with entries in `1..=nvars` and that
/// content.
fn schur_monomials(lambda: &Partition, nvars: usize) -> std::rc::Rc<Poly> {
    let key = (lambda.clone(), nvars);
    if let Some(p) = MONOMIALS.with(|m| m.borrow().get(&key).cloned()) {
        return p;
    }
    let mut poly = Poly::new();
    if lambda.len() <= nvars {
        let cells: Vec<(usize, usize)> =
            (0..lambda.len()).flat_map(|i| (0..lambda.part(i)).map(move |c| (i, c))).collect();
        let mut grid = vec![vec![0u8; lambda.part(0)]; lambda.len()];
        let mut exps = vec![0u8; nvars];
        fill(&cells, 0, nvars, &mut grid, &mut exps, &mut poly);
    }
    let poly = std::rc::Rc::new(poly);
    MONOMIALS.with(|m| m.borrow_mut().insert(key, poly.clone()));
    poly
}

fn fill(cells: &[(usize, usize)], k: usize, nvars: usize, grid: &mut [Vec<u8>], exps: &mut [u8], poly: &mut Poly) {
    if k == cells.len() {
        *poly.entry(exps.to_vec()).or_insert(0) += 1;
        return;
    }
    let (i, c) = cells[k];
    let mut lo = 1u8;
    if c > 0 {
        lo = lo.max(grid[i][c - 1]);
    }
    if i > 0 {
        lo = lo.max(grid[i - 1][c] + 1);
    }
    for v in lo..=nvars as u8 {
        grid[i][c] = v;
        exps[v as usize - 1] += 1;
        fill(cells, k + 1, nvars, grid, exps, poly);
        exps[v as usize - 1] -= 1;
    }
    grid[i][c] = 0;
}

fn is_weakly_decreasing(e: &[u8]) -> bool {
    e.windows(2).all(|w| w[0] >= w[1])
}

fn exponent_to_partition(e: &[u8]) -> Partition {
    Partition::from_parts_unchecked(e.iter().take_while(|&&x| x > 0).map(|&x| x as usize).collect())
}

/// Expansion of `s_α · s_β` in the Schur basis, without using the
/// Littlewood-Richardson rule.
pub fn schur_product_oracle(alpha: &Partition, beta: &Partition, bound: usize) -> Result<SchurExpansion> {
    let nvars = alpha.size() + beta.size();
    if nvars > bound {
        return Err(Error::OracleBoundExceeded { size: nvars, bound });
    }
    let fa = schur_monomials(alpha, nvars);
    let fb = schur_monomials(beta, nvars);

    // product, restricted to dominant exponents
    let mut remaining: BTreeMap<Exponent, i64> = BTreeMap::new();
    let mut sum = vec![0u8; nvars];
    for (ea, ca) in fa.iter() {
        for (eb, cb) in fb.iter() {
            for k in 0..nvars {
                sum[k] = ea[k] + eb[k];
            }
            if is_weakly_decreasing(&sum) {
                *remaining.entry(sum.clone()).or_insert(0) += ca * cb;
            }
        }
    }
    remaining.retain(|_, c| *c != 0);

    let mut terms = BTreeMap::new();
    while let Some((lead, &coeff)) = remaining.iter().next_back() {
        let lead = lead.clone();
        if coeff < 0 {
            return Err(Error::InvalidArgument(format!("negative leading coefficient at {lead:?}")));
        }
        let lambda = exponent_to_partition(&lead);
        for (e, c) in schur_monomials(&lambda, nvars).iter() {
            if is_weakly_decreasing(e) {
                let entry = remaining.entry(e.clone()).or_insert(0);
                *entry -= coeff * c;
                if *entry == 0 {
                    remaining.remove(e);
                }
            }
        }
        debug_assert!(!remaining.contains_key(&lead));
        terms.insert(lambda, coeff as u64);
    }
    Ok(SchurExpansion { terms })
}
