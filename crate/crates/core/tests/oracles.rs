//! Independent re-derivations checked against the library's fast paths.

use std::collections::BTreeMap;

use quantcore::generators::g_poly;
use quantcore::quantizer::quantize_monomial;
use quantcore::{Coefficient, OpMono, Operator, PhaseMono, PhasePoly, Scheme};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Letter {
    X,
    Y,
    Px,
    Py,
}

/// Normal-orders a word by single adjacent swaps, using only `p q = q p − iħ`.
fn normal_order_by_swaps(word: Vec<Letter>) -> Operator {
    let minus_ih = -(Coefficient::i() * Coefficient::hbar());
    let mut pending: Vec<(Vec<Letter>, Coefficient)> = vec![(word, Coefficient::one())];
    let mut done: BTreeMap<Vec<Letter>, Coefficient> = BTreeMap::new();
    while let Some((w, c)) = pending.pop() {
        match w.windows(2).position(|p| p[0] > p[1]) {
            None => {
                let e = done.entry(w).or_default();
                *e = e.clone() + c;
            }
            Some(j) => {
                let mut swapped = w.clone();
                swapped.swap(j, j + 1);
                pending.push((swapped, c.clone()));
                let canonical_pair = matches!((w[j], w[j + 1]), (Letter::Px, Letter::X) | (Letter::Py, Letter::Y));
                if canonical_pair {
                    let mut shorter = w.clone();
                    shorter.drain(j..j + 2);
                    pending.push((shorter, c * minus_ih.clone()));
                }
            }
        }
    }
    Operator::from_terms(done.into_iter().map(|(w, c)| {
        let count = |l| w.iter().filter(|x| **x == l).count() as u32;
        (OpMono::new(count(Letter::X), count(Letter::Y), count(Letter::Px), count(Letter::Py)), c)
    }))
}

fn word(parts: &[(Letter, u32)]) -> Vec<Letter> {
    parts.iter().flat_map(|(l, e)| std::iter::repeat_n(*l, *e as usize)).collect()
}

#[test]
fn closed_form_reordering_matches_single_swaps() {
    for r in 0..=6 {
        for s in 0..=6 {
            let fast = Operator::px().pow(s) * Operator::x().pow(r);
            let slow = normal_order_by_swaps(word(&[(Letter::Px, s), (Letter::X, r)]));
            assert_eq!(fast, slow, "p^{} x^{}", s, r);
        }
    }
}

#[test]
fn mixed_index_words_match_single_swaps() {
    let fast = Operator::py().pow(2) * Operator::px() * Operator::y().pow(3) * Operator::x().pow(2) * Operator::py();
    let slow = normal_order_by_swaps(word(&[(Letter::Py, 2), (Letter::Px, 1), (Letter::Y, 3), (Letter::X, 2), (Letter::Py, 1)]));
    assert_eq!(fast, slow);
}

/// Symmetrized sum for one pair written out as explicit words.
fn quantize_by_words(scheme: Scheme, r: u32, s: u32, q: Letter, p: Letter) -> Operator {
    let mut out = Operator::zero();
    for k in 0..=s {
        let weight = match scheme {
            Scheme::BornJordan => Coefficient::ratio(1, (s + 1) as i64),
            Scheme::Weyl => {
                let binom = (0..k).fold(1i64, |acc, j| acc * (s - j) as i64 / (j + 1) as i64);
                Coefficient::ratio(binom, 1i64 << s)
            }
        };
        out = out + normal_order_by_swaps(word(&[(p, s - k), (q, r), (p, k)])).scale(&weight);
    }
    out
}

#[test]
fn monomial_rules_match_word_expansion() {
    for scheme in Scheme::ALL {
        for r in 0..=4 {
            for s in 0..=4 {
                let x = quantize_by_words(scheme, r, s, Letter::X, Letter::Px);
                assert_eq!(quantize_monomial(scheme, &PhaseMono::new(r, 0, s, 0)), x);
                let y = quantize_by_words(scheme, r, s, Letter::Y, Letter::Py);
                assert_eq!(quantize_monomial(scheme, &PhaseMono::new(0, r, 0, s)), y);
            }
        }
    }
}

#[test]
fn schemes_agree_exactly_when_r_or_s_at_most_one() {
    for r in 0..=5 {
        for s in 0..=5 {
            let m = PhaseMono::new(r, 0, s, 0);
            let same = quantize_monomial(Scheme::BornJordan, &m) == quantize_monomial(Scheme::Weyl, &m);
            assert_eq!(same, r <= 1 || s <= 1, "x^{} p^{}", r, s);
        }
    }
}

/// Term-by-term accumulation of `G_n` with a Pascal-triangle binomial.
fn g_poly_naive(n: u32) -> PhasePoly {
    let mut pascal = vec![vec![1i64]];
    for row in 1..=n as usize {
        let prev = &pascal[row - 1];
        let mut next = vec![1i64; row + 1];
        for j in 1..row {
            next[j] = prev[j - 1] + prev[j];
        }
        pascal.push(next);
    }
    let mut out = PhasePoly::zero();
    let mut k = 0u32;
    while 2 * k < n {
        let c = pascal[n as usize][(2 * k + 1) as usize] * (-2i64).pow(k);
        let coeff = Coefficient::from_int(c) * Coefficient::omega().pow(2 * k);
        out = out + PhasePoly::monomial(coeff, PhaseMono::new(2 * k + 1, 0, n - 2 * k - 1, 0));
        k += 1;
    }
    out
}

#[test]
fn g_poly_matches_naive_accumulation() {
    for n in 1..=12 {
        assert_eq!(g_poly(n), g_poly_naive(n), "n = {}", n);
    }
}
