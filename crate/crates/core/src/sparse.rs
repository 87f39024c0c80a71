use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num::{BigInt, Zero};

use crate::coeffring::Coefficient;

/// Accumulates `coeff` into `map[key]`, dropping the entry if it cancels.
pub(crate) fn add_term<K: Ord>(map: &mut BTreeMap<K, Coefficient>, key: K, coeff: Coefficient) {
    if coeff.is_zero() {
        return;
    }
    match map.entry(key) {
        Entry::Vacant(e) => {
            e.insert(coeff);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += &coeff;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

pub(crate) fn falling_factorial(n: u32, k: u32) -> BigInt {
    (0..k).map(|j| BigInt::from(n - j)).product()
}

pub(crate) fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    falling_factorial(n, k) / factorial(k)
}

pub(crate) fn factorial(n: u32) -> BigInt {
    (1..=n).map(BigInt::from).product()
}
