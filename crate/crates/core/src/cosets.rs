//! Double cosets of Young subgroups, indexed by tableaux with weakly
//! increasing rows.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::multipartition::Multipartition;
use crate::partition::Composition;
use crate::perm::{all_permutations, Permutation};
use crate::tableau::Tableau;

/// Default degree bound for [`brute_force_double_cosets`].
pub const DEFAULT_ORACLE_BOUND: usize = 7;

fn check_sizes(alpha: &Composition, gamma: &Composition) -> Result<usize> {
    if alpha.size() != gamma.size() {
        return Err(Error::SizeMismatch(format!(
            "shape {alpha} has size {}, type {gamma} has size {}",
            alpha.size(),
            gamma.size()
        )));
    }
    Ok(alpha.size())
}

/// The tableau of shape `alpha` filled in reading order with `gamma_1` ones,
/// then `gamma_2` twos, and so on.
pub fn standard_tableau(alpha: &Composition, gamma: &Composition) -> Result<Tableau> {
    check_sizes(alpha, gamma)?;
    let entries: Vec<usize> =
        gamma.parts().iter().enumerate().flat_map(|(v, &count)| std::iter::repeat_n(v + 1, count)).collect();
    Tableau::from_box_order(alpha, &entries)
}

/// All tableaux of shape `alpha` and type `gamma` whose rows weakly
/// increase. A row is determined by how many of each value it holds, so
/// these are the non-negative integer matrices with row sums `alpha` and
/// column sums `gamma`; they are listed in descending lexicographic order of
/// those matrices read row by row.
pub fn enumerate_weakly_increasing(alpha: &Composition, gamma: &Composition) -> Result<Vec<Tableau>> {
    check_sizes(alpha, gamma)?;
    let mut out = Vec::new();
    let mut budget = gamma.parts().to_vec();
    let mut rows: Vec<Vec<usize>> = Vec::new();

    fn go(i: usize, alpha: &[usize], budget: &mut Vec<usize>, rows: &mut Vec<Vec<usize>>, out: &mut Vec<Tableau>) {
        if i == alpha.len() {
            out.push(Tableau::from_rows_unchecked(rows.clone()));
            return;
        }
        for counts in bounded_compositions(alpha[i], budget) {
            for (b, c) in budget.iter_mut().zip(&counts) {
                *b -= c;
            }
            rows.push(counts.iter().enumerate().flat_map(|(v, &c)| std::iter::repeat_n(v + 1, c)).collect());
            go(i + 1, alpha, budget, rows, out);
            rows.pop();
            for (b, c) in budget.iter_mut().zip(&counts) {
                *b += c;
            }
        }
    }

    go(0, alpha.parts(), &mut budget, &mut rows, &mut out);
    Ok(out)
}

/// Vectors `c` with `Σ c = total` and `c[k] ≤ bounds[k]`, descending lex.
pub(crate) fn bounded_compositions(total: usize, bounds: &[usize]) -> Vec<Vec<usize>> {
    fn go(
        k: usize,
        rest: usize,
        bounds: &[usize],
        suffix_cap: &[usize],
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if k == bounds.len() {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if rest > suffix_cap[k] {
            return;
        }
        for c in (0..=bounds[k].min(rest)).rev() {
            cur.push(c);
            go(k + 1, rest - c, bounds, suffix_cap, cur, out);
            cur.pop();
        }
    }
    let mut suffix_cap = vec![0; bounds.len() + 1];
    for k in (0..bounds.len()).rev() {
        suffix_cap[k] = suffix_cap[k + 1] + bounds[k];
    }
    let mut out = Vec::new();
    go(0, total, bounds, &suffix_cap, &mut Vec::new(), &mut out);
    out
}

/// A system of `(S_gamma, S_alpha)`-double coset representatives in `S_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetSystem {
    pub gamma: Composition,
    pub alpha: Composition,
    pub reps: Vec<Permutation>,
}

/// The permutation carrying `from` to `to` under the tableau action, where
/// both have the same multiset of entries: the k-th occurrence of each value
/// in reading order of `from` goes to the k-th occurrence in `to`.
pub fn carrying_permutation(from: &Tableau, to: &Tableau) -> Result<Permutation> {
    let src = from.box_entries();
    let dst = to.box_entries();
    if src.len() != dst.len() {
        return Err(Error::DegreeMismatch { expected: src.len(), actual: dst.len() });
    }
    let max = src.iter().chain(&dst).copied().max().unwrap_or(0);
    let mut slots: Vec<VecDeque<usize>> = vec![VecDeque::new(); max + 1];
    for (pos, &v) in dst.iter().enumerate() {
        slots[v].push_back(pos);
    }
    let mut images = Vec::with_capacity(src.len());
    for &v in &src {
        let pos = slots[v].pop_front().ok_or_else(|| Error::SizeMismatch("tableaux have different contents".into()))?;
        images.push(pos);
    }
    Ok(Permutation::from_zero_based_unchecked(images))
}

/// One representative per tableau in `W^alpha_gamma`, each carrying the
/// standard tableau onto its tableau. The result is a complete
/// non-redundant double coset system.
pub fn double_coset_reps(gamma: &Composition, alpha: &Composition) -> Result<CosetSystem> {
    let standard = standard_tableau(alpha, gamma)?;
    let reps = enumerate_weakly_increasing(alpha, gamma)?
        .iter()
        .map(|t| carrying_permutation(&standard, t))
        .collect::<Result<Vec<_>>>()?;
    Ok(CosetSystem { gamma: gamma.clone(), alpha: alpha.clone(), reps })
}

/// The cycles `ρ_i = (b_i, n, n-1, …, b_i + 1)` for each component index `i`
/// (1-based) of nonzero size, where `b_i` is the partial sum of sizes
/// through component `i`; `ρ_i` is the identity when `b_i = n`.
pub fn rho_cosets_for_sizes(sizes: &Composition) -> Result<Vec<(usize, Permutation)>> {
    let n = sizes.size();
    if n == 0 {
        return Err(Error::InvalidArgument("rho cycles need n >= 1".into()));
    }
    let mut out = Vec::new();
    let mut b = 0;
    for (i, &s) in sizes.parts().iter().enumerate() {
        b += s;
        if s == 0 {
            continue;
        }
        let rho = if b == n {
            Permutation::identity(n)
        } else {
            let cycle: Vec<usize> = std::iter::once(b).chain((b + 1..=n).rev()).collect();
            Permutation::from_cycles(n, &[cycle])?
        };
        out.push((i + 1, rho));
    }
    Ok(out)
}

pub fn rho_cosets(lambda: &Multipartition) -> Result<Vec<(usize, Permutation)>> {
    rho_cosets_for_sizes(&lambda.size_composition())
}

/// Block index of each point `0..n` under a composition.
fn block_ids(c: &Composition) -> Vec<usize> {
    c.parts().iter().enumerate().flat_map(|(b, &len)| std::iter::repeat_n(b, len)).collect()
}

/// Adjacent transpositions `(j, j+1)` (0-based `j`) generating `S_c`.
fn young_generators(c: &Composition) -> Vec<usize> {
    let ids = block_ids(c);
    (0..ids.len().saturating_sub(1)).filter(|&j| ids[j] == ids[j + 1]).collect()
}

/// Partitions `S_n` into `(S_gamma, S_alpha)`-double cosets by orbit closure
/// under left multiplication by generators of `S_gamma` and right
/// multiplication by generators of `S_alpha`. Cosets are listed by their
/// lexicographically least element; members are sorted.
pub fn brute_force_double_cosets(
    gamma: &Composition,
    alpha: &Composition,
    bound: usize,
) -> Result<Vec<Vec<Permutation>>> {
    let n = check_sizes(alpha, gamma)?;
    if n > bound {
        return Err(Error::OracleBoundExceeded { size: n, bound });
    }
    let left = young_generators(gamma);
    let right = young_generators(alpha);
    let all = all_permutations(n);
    let mut coset_of = vec![usize::MAX; all.len()];
    let mut cosets = Vec::new();
    for start in 0..all.len() {
        if coset_of[start] != usize::MAX {
            continue;
        }
        let id = cosets.len();
        let mut members = vec![start];
        coset_of[start] = id;
        let mut queue = VecDeque::from([start]);
        while let Some(k) = queue.pop_front() {
            let p = all[k].zero_based();
            let mut neighbours = Vec::with_capacity(left.len() + right.len());
            for &j in &left {
                // (j j+1)·σ swaps positions j, j+1
                let mut q = p.to_vec();
                q.swap(j, j + 1);
                neighbours.push(q);
            }
            for &j in &right {
                // σ·(j j+1) swaps the values j, j+1
                neighbours.push(
                    p.iter()
                        .map(|&v| {
                            if v == j {
                                j + 1
                            } else if v == j + 1 {
                                j
                            } else {
                                v
                            }
                        })
                        .collect(),
                );
            }
            for q in neighbours {
                let r = Permutation::from_zero_based_unchecked(q).rank();
                if coset_of[r] == usize::MAX {
                    coset_of[r] = id;
                    members.push(r);
                    queue.push_back(r);
                }
            }
        }
        members.sort_unstable();
        cosets.push(members.into_iter().map(|k| all[k].clone()).collect());
    }
    Ok(cosets)
}

/// Index of the double coset containing each permutation, by rank.
pub fn coset_lookup(cosets: &[Vec<Permutation>]) -> Vec<usize> {
    let total: usize = cosets.iter().map(Vec::len).sum();
    let mut lookup = vec![usize::MAX; total];
    for (id, c) in cosets.iter().enumerate() {
        for p in c {
            lookup[p.rank()] = id;
        }
    }
    lookup
}

/// Elements of the Young subgroup `S_c`, as permutations of degree `|c|`.
pub fn young_subgroup_elements(c: &Composition) -> Vec<Permutation> {
    let ids = block_ids(c);
    all_permutations(c.size())
        .into_iter()
        .filter(|p| p.zero_based().iter().enumerate().all(|(i, &v)| ids[i] == ids[v]))
        .collect()
}
