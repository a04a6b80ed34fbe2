//! Permutations of `{1,…,n}` acting on the right.
//!
//! `(i)σ` is written `σ.image(i)`, and the product `σπ` applies `σ` first:
//! `(i)(σπ) = ((i)σ)π`. Cycle notation follows the same convention, so
//! `(1,2)(2,3)` sends 1 to 3.

use std::fmt;

use crate::error::{Error, Result};
use crate::tableau::Tableau;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    // 0-based: images[i] = (i+1)σ - 1
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// From 1-based one-line notation.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut zero_based = Vec::with_capacity(n);
        for &v in images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection of 1..={n}")));
            }
            seen[v - 1] = true;
            zero_based.push(v - 1);
        }
        Ok(Permutation { images: zero_based })
    }

    pub(crate) fn from_zero_based_unchecked(images: Vec<usize>) -> Self {
        Permutation { images }
    }

    /// Product of the given cycles, applied left to right.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut acc = Permutation::identity(n);
        for cycle in cycles {
            let mut seen = std::collections::HashSet::new();
            if cycle.iter().any(|&v| v == 0 || v > n || !seen.insert(v)) {
                return Err(Error::InvalidPermutation(format!("bad cycle {cycle:?} in degree {n}")));
            }
            let mut c = Permutation::identity(n);
            for (k, &a) in cycle.iter().enumerate() {
                let b = cycle[(k + 1) % cycle.len()];
                c.images[a - 1] = b - 1;
            }
            acc = acc.then(&c);
        }
        Ok(acc)
    }

    /// Parses cycle notation such as `(1,12,3,6)(5,7,13)(8,10)` or `e`.
    pub fn parse_cycles(text: &str, n: usize) -> Result<Self> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s == "e" || s.is_empty() {
            return Ok(Permutation::identity(n));
        }
        let mut cycles = Vec::new();
        let mut rest = s.as_str();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .and_then(|r| r.find(')').map(|end| (&r[..end], &r[end + 1..])))
                .ok_or_else(|| Error::Parse(format!("malformed cycle notation {text:?}")))?;
            let cycle = body
                .0
                .split(',')
                .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad cycle entry {t:?}"))))
                .collect::<Result<Vec<_>>>()?;
            cycles.push(cycle);
            rest = body.1;
        }
        Permutation::from_cycles(n, &cycles)
    }

    /// Simple transposition `(j, j+1)`, 1-based `j`.
    pub fn adjacent_transposition(n: usize, j: usize) -> Self {
        assert!(j >= 1 && j < n, "adjacent transposition ({j},{}) outside degree {n}", j + 1);
        let mut p = Permutation::identity(n);
        p.images.swap(j - 1, j);
        p
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// `(i)σ`, 1-based.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|v| v + 1).collect()
    }

    pub(crate) fn zero_based(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// The product `self · other`: apply `self`, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch in product");
        Permutation { images: self.images.iter().map(|&v| other.images[v]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { images: inv }
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let n = self.images.len();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// 1-based positions `j` with `(j)σ > (j+1)σ`.
    pub fn descents(&self) -> Vec<usize> {
        self.images.windows(2).enumerate().filter(|(_, w)| w[0] > w[1]).map(|(j, _)| j + 1).collect()
    }

    /// Disjoint cycles of length at least two, each starting at its smallest
    /// element, ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i + 1);
                i = self.images[i];
            }
            out.push(cycle);
        }
        out
    }

    /// Moves the entry in box `i` to box `(i)σ`, boxes numbered in reading
    /// order. This is a right action.
    pub fn act_on_tableau(&self, tableau: &Tableau) -> Result<Tableau> {
        let entries = tableau.box_entries();
        if entries.len() != self.degree() {
            return Err(Error::DegreeMismatch { expected: entries.len(), actual: self.degree() });
        }
        let mut moved = vec![0; entries.len()];
        for (i, &v) in entries.iter().enumerate() {
            moved[self.images[i]] = v;
        }
        Tableau::from_box_order(&tableau.shape(), &moved)
    }

    /// Lexicographic rank among all permutations of the same degree.
    pub fn rank(&self) -> usize {
        let n = self.images.len();
        let mut rank = 0;
        for i in 0..n {
            let smaller = self.images[i + 1..].iter().filter(|&&v| v < self.images[i]).count();
            rank = rank * (n - i) + smaller;
        }
        rank
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "e");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(usize::to_string).collect();
            write!(f, "({})", body.join(","))?;
        }
        Ok(())
    }
}

/// All permutations of degree `n` in lexicographic order of one-line notation.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut cur: Vec<usize> = (0..n).collect();
    let mut out = vec![Permutation { images: cur.clone() }];
    // next_permutation
    while let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) {
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(Permutation { images: cur.clone() });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn length_examples() {
        assert_eq!(Permutation::identity(5).length(), 0);
        assert_eq!(Permutation::adjacent_transposition(5, 3).length(), 1);
        assert_eq!(Permutation::from_images(&[4, 3, 2, 1]).unwrap().length(), 6);
    }

    #[test]
    fn descent_examples() {
        assert!(Permutation::identity(4).descents().is_empty());
        assert_eq!(Permutation::from_images(&[2, 1]).unwrap().descents(), vec![1]);
        assert_eq!(Permutation::from_images(&[2, 3, 1]).unwrap().descents(), vec![2]);
    }

    #[test]
    fn cycle_notation_round_trip() {
        let s = Permutation::parse_cycles("(1,12,3,6)(5,7,13)(8,10)", 13).unwrap();
        assert_eq!(s.image(1), 12);
        assert_eq!(s.image(6), 1);
        assert_eq!(s.image(13), 5);
        assert_eq!(s.to_string(), "(1,12,3,6)(5,7,13)(8,10)");
        assert_eq!(Permutation::identity(3).to_string(), "e");
        assert_eq!(Permutation::parse_cycles("e", 4).unwrap(), Permutation::identity(4));
        assert_eq!(Permutation::parse_cycles("(6,9,8,7)", 9).unwrap().to_string(), "(6,9,8,7)");
    }

    #[test]
    fn cycles_compose_left_to_right() {
        let p = Permutation::parse_cycles("(1,2)(2,3)", 3).unwrap();
        assert_eq!(p.image(1), 3);
        assert_eq!(p.image(2), 1);
    }

    #[test]
    fn bad_input_rejected() {
        assert!(Permutation::from_images(&[1, 1]).is_err());
        assert!(Permutation::from_images(&[0, 1]).is_err());
        assert!(Permutation::parse_cycles("(1,4)", 3).is_err());
        assert!(Permutation::parse_cycles("(1,2", 3).is_err());
        assert!(Permutation::parse_cycles("(1,1)", 3).is_err());
    }

    #[test]
    fn tableau_action_example() {
        let tau = Tableau::from_rows(vec![vec![1, 2, 1, 3, 2], vec![2, 3, 2], vec![2, 3, 1, 3], vec![1]]).unwrap();
        let sigma = Permutation::parse_cycles("(1,12,3,6)(5,7,13)(8,10)", 13).unwrap();
        let expected = Tableau::from_rows(vec![vec![2, 2, 3, 3, 1], vec![1, 2, 3], vec![2, 2, 1, 1], vec![3]]).unwrap();
        assert_eq!(sigma.act_on_tableau(&tau).unwrap(), expected);
        assert_eq!(Permutation::identity(13).act_on_tableau(&tau).unwrap(), tau);
        assert!(Permutation::identity(12).act_on_tableau(&tau).is_err());
    }

    #[test]
    fn enumeration_and_rank() {
        let all = all_permutations(4);
        assert_eq!(all.len(), 24);
        for (k, p) in all.iter().enumerate() {
            assert_eq!(p.rank(), k);
        }
        assert_eq!(all_permutations(0).len(), 1);
    }
}
