//! Multipartition matrices `Mat(L; α × β)` and the filtration multiplicity
//! formula summed over them.

use crate::error::{Error, Result};
use crate::lr::lr_multi;
use crate::multipartition::{
    cartesian, enumerate_multipartitions, multipartitions_with_sizes, IntegerMatrix, Multipartition,
    MultipartitionMatrix,
};
use crate::partition::{weak_compositions, Composition, Partition};

use super::MultiplicityMap;

/// Non-negative integer matrices supported on `cells` (row-major, sorted)
/// with the given row and column sums. Each is returned as the list of cell
/// values. Rows are filled in turn; each row runs over its compositions in
/// descending lexicographic order, bounded by what the columns still allow.
pub(crate) fn support_flows(
    rows: usize,
    cells: &[(usize, usize)],
    row_sums: &[usize],
    col_sums: &[usize],
) -> Vec<Vec<usize>> {
    let by_row: Vec<Vec<usize>> =
        (0..rows).map(|i| cells.iter().enumerate().filter(|(_, c)| c.0 == i).map(|(k, _)| k).collect()).collect();
    let mut out = Vec::new();
    let mut budget = col_sums.to_vec();
    let mut values = vec![0; cells.len()];

    #[allow(clippy::too_many_arguments)]
    fn go(
        i: usize,
        by_row: &[Vec<usize>],
        cells: &[(usize, usize)],
        row_sums: &[usize],
        budget: &mut [usize],
        values: &mut [usize],
        out: &mut Vec<Vec<usize>>,
    ) {
        if i == by_row.len() {
            if budget.iter().all(|&b| b == 0) {
                out.push(values.to_vec());
            }
            return;
        }
        let bounds: Vec<usize> = by_row[i].iter().map(|&k| budget[cells[k].1]).collect();
        for choice in crate::cosets::bounded_compositions(row_sums[i], &bounds) {
            for (&k, &v) in by_row[i].iter().zip(&choice) {
                values[k] = v;
                budget[cells[k].1] -= v;
            }
            go(i + 1, by_row, cells, row_sums, budget, values, out);
            for (&k, &v) in by_row[i].iter().zip(&choice) {
                values[k] = 0;
                budget[cells[k].1] += v;
            }
        }
    }

    go(0, &by_row, cells, row_sums, &mut budget, &mut values, &mut out);
    out
}

/// All multipartition matrices with entry `(i, j)` of length `L[i][j]`,
/// row `i` of total size `alpha[i]` and column `j` of total size `beta[j]`.
pub fn mat_lambda(
    lengths: &IntegerMatrix,
    alpha: &Composition,
    beta: &Composition,
) -> Result<Vec<MultipartitionMatrix>> {
    let (s, t) = (lengths.rows(), lengths.cols());
    if alpha.len() != s || beta.len() != t {
        return Err(Error::SizeMismatch(format!(
            "length matrix is {s}x{t} but row sizes {alpha} and column sizes {beta}"
        )));
    }
    if alpha.size() != beta.size() {
        return Ok(Vec::new());
    }
    let cells: Vec<(usize, usize)> =
        (0..s).flat_map(|i| (0..t).map(move |j| (i, j))).filter(|&(i, j)| lengths.get(i, j) > 0).collect();
    let mut out = Vec::new();
    for flow in support_flows(s, &cells, alpha.parts(), beta.parts()) {
        let choices: Vec<Vec<Multipartition>> = cells
            .iter()
            .zip(&flow)
            .map(|(&(i, j), &size)| enumerate_multipartitions(size, lengths.get(i, j)))
            .collect();
        for pick in cartesian(&choices) {
            let mut entries = vec![Multipartition::default(); s * t];
            for (&(i, j), mp) in cells.iter().zip(pick) {
                entries[i * t + j] = mp;
            }
            out.push(MultipartitionMatrix::from_entries(s, t, entries));
        }
    }
    Ok(out)
}

fn product_over<'a, I>(pairs: I) -> Result<u64>
where
    I: IntoIterator<Item = (&'a Partition, Vec<Partition>)>,
{
    let mut acc: u64 = 1;
    for (shape, tuple) in pairs {
        let c = lr_multi(shape, &tuple)?;
        if c == 0 {
            return Ok(0);
        }
        acc = acc.checked_mul(c).ok_or(Error::Overflow("filtration multiplicity"))?;
    }
    Ok(acc)
}

/// Multiplicities of the `t`-component Specht modules in the filtration
/// induced by filtration multiplicities `a` (an `s × t` matrix), for the
/// `s`-multipartition `eta`:
/// `Σ_{[ε] ∈ Mat(a; |η| × |ν|)} ∏ᵢ c(ηⁱ; Rᵢ[ε]) · ∏ⱼ c(νʲ; Cⱼ[ε])`.
pub fn filtration_multiplicities(a: &IntegerMatrix, eta: &Multipartition, t: usize) -> Result<MultiplicityMap> {
    if a.rows() != eta.len() || a.cols() != t {
        return Err(Error::SizeMismatch(format!(
            "matrix is {}x{} but multipartition has {} components and t = {t}",
            a.rows(),
            a.cols(),
            eta.len()
        )));
    }
    let n = eta.size();
    let eta_sizes = eta.size_composition();
    let mut out = MultiplicityMap::new();
    for nu_sizes in weak_compositions(n, t) {
        // row factors depend only on the matrix, not on ν
        let mut weighted: Vec<(u64, Vec<Vec<Partition>>)> = Vec::new();
        for mat in mat_lambda(a, &eta_sizes, &nu_sizes)? {
            let rows = product_over(eta.components().iter().enumerate().map(|(i, e)| (e, mat.row_tuple(i))))?;
            if rows > 0 {
                weighted.push((rows, (0..t).map(|j| mat.col_tuple(j)).collect()));
            }
        }
        if weighted.is_empty() {
            continue;
        }
        for nu in multipartitions_with_sizes(&nu_sizes) {
            let mut total: u64 = 0;
            for (rows, cols) in &weighted {
                let c = product_over(nu.components().iter().zip(cols.iter().cloned()))?;
                let term = rows.checked_mul(c).ok_or(Error::Overflow("filtration multiplicity"))?;
                total = total.checked_add(term).ok_or(Error::Overflow("filtration multiplicity"))?;
            }
            out.insert(nu, total);
        }
    }
    Ok(out)
}
