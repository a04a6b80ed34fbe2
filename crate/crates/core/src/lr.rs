//! Littlewood-Richardson coefficients.
//!
//! `c^λ_{α,β}` counts semistandard skew tableaux of shape `λ∖α` and type `β`
//! whose reverse reading word is a lattice word. The counting routine fills
//! the skew shape in reading-word order (rows top to bottom, each right to
//! left) and rejects a partial filling as soon as its word stops being a
//! lattice word.
//!
//! The multi-argument coefficient `c(λ; α¹,…,αᵗ)` peels off `α¹` one
//! Littlewood-Richardson step at a time.

use std::cell::RefCell;
use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Composition, Partition};

thread_local! {
    static LR_CACHE: RefCell<HashMap<(Partition, Partition, Partition), u64>> = RefCell::new(HashMap::new());
    static MULTI_CACHE: RefCell<HashMap<(Partition, Vec<Partition>), u64>> = RefCell::new(HashMap::new());
}

/// `c^λ_{α,β}`. Zero when `α ⊄ λ` or `|α| + |β| ≠ |λ|`.
pub fn lr_coefficient(lambda: &Partition, alpha: &Partition, beta: &Partition) -> u64 {
    if alpha.size() + beta.size() != lambda.size() || !lambda.contains(&Composition::from(alpha)) {
        return 0;
    }
    let key = (lambda.clone(), alpha.clone(), beta.clone());
    if let Some(v) = LR_CACHE.with(|c| c.borrow().get(&key).copied()) {
        return v;
    }
    let v = count_lr_tableaux(lambda, alpha, beta);
    LR_CACHE.with(|c| c.borrow_mut().insert(key, v));
    v
}

fn count_lr_tableaux(lambda: &Partition, alpha: &Partition, beta: &Partition) -> u64 {
    // cells in reverse reading order: rows top to bottom, columns right to left
    let cells: Vec<(usize, usize)> =
        (0..lambda.len()).flat_map(|i| (alpha.part(i)..lambda.part(i)).rev().map(move |c| (i, c))).collect();
    let width = lambda.part(0);
    let mut grid = vec![vec![0usize; width]; lambda.len()];
    let mut remaining = beta.parts().to_vec();
    let mut counts = vec![0usize; beta.len()];

    struct Search<'a> {
        cells: &'a [(usize, usize)],
        alpha: &'a Partition,
    }

    fn go(s: &Search<'_>, k: usize, grid: &mut [Vec<usize>], remaining: &mut [usize], counts: &mut [usize]) -> u64 {
        if k == s.cells.len() {
            return 1;
        }
        let (i, c) = s.cells[k];
        // right neighbour was filled just before, and rows weakly increase
        let hi = if c + 1 < grid[i].len() && k > 0 && s.cells[k - 1] == (i, c + 1) {
            grid[i][c + 1]
        } else {
            remaining.len()
        };
        // box above lies in the skew shape iff its column is past the inner row
        let lo = if i > 0 && c >= s.alpha.part(i - 1) { grid[i - 1][c] + 1 } else { 1 };
        let mut total = 0;
        for v in lo..=hi {
            if remaining[v - 1] == 0 {
                continue;
            }
            if v > 1 && counts[v - 1] + 1 > counts[v - 2] {
                continue;
            }
            remaining[v - 1] -= 1;
            counts[v - 1] += 1;
            grid[i][c] = v;
            total += go(s, k + 1, grid, remaining, counts);
            grid[i][c] = 0;
            counts[v - 1] -= 1;
            remaining[v - 1] += 1;
        }
        total
    }

    let search = Search { cells: &cells, alpha };
    go(&search, 0, &mut grid, &mut remaining, &mut counts)
}

/// The generalized coefficient `c(λ; α¹,…,αᵗ)`, following the recursion
/// literally in the given component order with no caching.
///
/// `t = 0` gives 1 iff `λ` is empty; `t = 1` gives 1 iff `α¹ = λ`.
pub fn lr_multi_uncached(lambda: &Partition, parts: &[Partition]) -> Result<u64> {
    match parts {
        [] => Ok(u64::from(lambda.is_empty())),
        [only] => Ok(u64::from(only == lambda)),
        [a, b] => Ok(lr_coefficient(lambda, a, b)),
        [first, rest @ ..] => {
            let remaining_size = match lambda.size().checked_sub(first.size()) {
                Some(s) => s,
                None => return Ok(0),
            };
            let mut total: u64 = 0;
            for beta in enumerate_partitions(remaining_size) {
                let c = lr_coefficient(lambda, first, &beta);
                if c == 0 {
                    continue;
                }
                let term = c.checked_mul(lr_multi_uncached(&beta, rest)?).ok_or(Error::Overflow("lr_multi"))?;
                total = total.checked_add(term).ok_or(Error::Overflow("lr_multi"))?;
            }
            Ok(total)
        }
    }
}

/// The generalized coefficient `c(λ; α¹,…,αᵗ)`.
///
/// The value does not depend on the order of the components, and empty
/// components contribute nothing; results are memoized per thread under the
/// sorted nonempty components.
pub fn lr_multi(lambda: &Partition, parts: &[Partition]) -> Result<u64> {
    let total: usize = parts.iter().map(Partition::size).sum();
    if total != lambda.size() {
        return Ok(0);
    }
    let mut key: Vec<Partition> = parts.iter().filter(|p| !p.is_empty()).cloned().collect();
    key.sort_by(|a, b| b.size().cmp(&a.size()).then_with(|| b.cmp(a)));
    sorted_multi(lambda, key)
}

fn sorted_multi(lambda: &Partition, parts: Vec<Partition>) -> Result<u64> {
    if parts.len() <= 2 {
        return lr_multi_uncached(lambda, &parts);
    }
    let key = (lambda.clone(), parts);
    if let Some(v) = MULTI_CACHE.with(|c| c.borrow().get(&key).copied()) {
        return Ok(v);
    }
    let (lambda, parts) = &key;
    let first = &parts[0];
    let rest = &parts[1..];
    let mut total: u64 = 0;
    for beta in enumerate_partitions(lambda.size() - first.size()) {
        let c = lr_coefficient(lambda, first, &beta);
        if c == 0 {
            continue;
        }
        let term = c.checked_mul(sorted_multi(&beta, rest.to_vec())?).ok_or(Error::Overflow("lr_multi"))?;
        total = total.checked_add(term).ok_or(Error::Overflow("lr_multi"))?;
    }
    MULTI_CACHE.with(|c| c.borrow_mut().insert(key.clone(), total));
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::{enumerate_skew_ssyt, is_lattice_word, SkewShape};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// LR rule by enumerating every semistandard skew tableau and filtering.
    fn lr_by_filter(lambda: &Partition, alpha: &Partition, beta: &Partition) -> u64 {
        let Ok(shape) = SkewShape::new(lambda.clone(), Composition::from(alpha)) else {
            return 0;
        };
        enumerate_skew_ssyt(&shape, &Composition::from(beta))
            .iter()
            .filter(|t| is_lattice_word(&t.reverse_reading_word()))
            .count() as u64
    }

    #[test]
    fn worked_example_coefficients() {
        assert_eq!(lr_coefficient(&p(&[3]), &p(&[2]), &p(&[1])), 1);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[1]), &p(&[1, 1])), 1);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[2]), &p(&[2])), 0);
        assert_eq!(lr_coefficient(&p(&[2]), &p(&[1, 1]), &p(&[])), 0);
    }

    #[test]
    fn classic_coefficient_two() {
        assert_eq!(lr_coefficient(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2, 1])), 2);
    }

    #[test]
    fn counting_matches_enumerate_and_filter() {
        for n in 0..=6 {
            for lambda in enumerate_partitions(n) {
                for a in 0..=n {
                    for alpha in enumerate_partitions(a) {
                        for beta in enumerate_partitions(n - a) {
                            assert_eq!(
                                lr_coefficient(&lambda, &alpha, &beta),
                                lr_by_filter(&lambda, &alpha, &beta),
                                "{lambda} {alpha} {beta}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn multi_examples() {
        assert_eq!(lr_multi(&p(&[1, 1]), &[p(&[1]), p(&[1])]).unwrap(), 1);
        assert_eq!(lr_multi(&p(&[2]), &[p(&[2])]).unwrap(), 1);
        assert_eq!(lr_multi(&p(&[2]), &[p(&[1, 1])]).unwrap(), 0);
        assert_eq!(lr_multi(&p(&[3, 2, 1]), &vec![p(&[1]); 6]).unwrap(), 16);
        assert_eq!(lr_multi_uncached(&p(&[3, 2, 1]), &vec![p(&[1]); 6]).unwrap(), 16);
        assert_eq!(lr_multi(&Partition::empty(), &[]).unwrap(), 1);
        assert_eq!(lr_multi(&p(&[1]), &[]).unwrap(), 0);
    }

    #[test]
    fn degree_filter() {
        assert_eq!(lr_multi(&p(&[2, 1]), &[p(&[1]), p(&[1])]).unwrap(), 0);
        assert_eq!(lr_multi_uncached(&p(&[2, 1]), &[p(&[1]), p(&[1]), p(&[2])]).unwrap(), 0);
    }

    #[test]
    fn empty_components_are_neutral() {
        let lambda = p(&[2, 1]);
        let with_empty = [p(&[1]), Partition::empty(), p(&[1, 1])];
        assert_eq!(lr_multi_uncached(&lambda, &with_empty).unwrap(), 1);
        assert_eq!(lr_multi(&lambda, &with_empty).unwrap(), 1);
    }
}
