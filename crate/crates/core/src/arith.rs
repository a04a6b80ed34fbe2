//! Exact integer helpers. Every product is checked; ratios are formed on
//! prime exponents so intermediate values never exceed the final result.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

fn add_factor(exps: &mut BTreeMap<u64, i64>, mut k: u64, sign: i64) {
    let mut p = 2;
    while p * p <= k {
        while k.is_multiple_of(p) {
            *exps.entry(p).or_insert(0) += sign;
            k /= p;
        }
        p += 1;
    }
    if k > 1 {
        *exps.entry(k).or_insert(0) += sign;
    }
}

/// Computes `∏ numer / ∏ denom`, which must be an integer.
pub fn exact_ratio<N, D>(numer: N, denom: D, what: &'static str) -> Result<u64>
where
    N: IntoIterator<Item = u64>,
    D: IntoIterator<Item = u64>,
{
    let mut exps = BTreeMap::new();
    for k in numer {
        if k == 0 {
            return Ok(0);
        }
        add_factor(&mut exps, k, 1);
    }
    for k in denom {
        if k == 0 {
            return Err(Error::InvalidArgument(format!("zero divisor in {what}")));
        }
        add_factor(&mut exps, k, -1);
    }
    let mut out: u64 = 1;
    for (p, e) in exps {
        if e < 0 {
            return Err(Error::InvalidArgument(format!("non-integral ratio in {what}")));
        }
        for _ in 0..e {
            out = out.checked_mul(p).ok_or(Error::Overflow(what))?;
        }
    }
    Ok(out)
}

pub fn factorial(n: usize) -> Result<u64> {
    (1..=n as u64).try_fold(1u64, |acc, k| acc.checked_mul(k).ok_or(Error::Overflow("factorial")))
}

/// `n! / ∏ kᵢ!` where `n = Σ kᵢ`.
pub fn multinomial(parts: &[usize]) -> Result<u64> {
    let n: usize = parts.iter().sum();
    exact_ratio(1..=n as u64, parts.iter().flat_map(|&k| 1..=k as u64), "multinomial")
}

pub fn checked_pow(base: u64, exp: usize, what: &'static str) -> Result<u64> {
    (0..exp).try_fold(1u64, |acc, _| acc.checked_mul(base).ok_or(Error::Overflow(what)))
}
