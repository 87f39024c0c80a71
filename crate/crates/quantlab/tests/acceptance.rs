//! Exit criteria. Each test prints one `criterion N ... PASS|FAIL` line and then
//! asserts. All comparisons are exact.

use std::time::{Duration, Instant};

use num::{BigInt, BigRational};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use quantcore::generators::{hamiltonian, k_integral, ladder_integrals, l_integral};
use quantcore::phasepoly::poisson;
use quantcore::quantizer::{quantize, quantize_monomial};
use quantcore::weylalgebra::{classical_symbol, commutator, commutator_by_action};
use quantcore::{CoeffMono, Coefficient, DiffForm, OpMono, Operator, OscillatorParams, PhaseMono, PhasePoly, Scalar, Scheme};
use quantlab::pipeline::{hamiltonian_operator, DIVERGING_PAIRS, COINCIDING_PAIRS};
use quantlab::report::EVIDENCE_NOTE;
use quantlab::{parse_poly, sweep, verify_pair, SweepTarget};

fn report(id: u32, name: &str, pass: bool, detail: &str) {
    println!("criterion {:>2} {:<40} {} {}", id, name, if pass { "PASS" } else { "FAIL" }, detail);
}

fn h(k: u32) -> Coefficient {
    Coefficient::hbar().pow(k)
}

fn w(k: u32) -> Coefficient {
    Coefficient::omega().pow(k)
}

fn q(a: i64, b: i64) -> Coefficient {
    Coefficient::ratio(a, b)
}

fn p41() -> OscillatorParams {
    OscillatorParams::new(4, 1).unwrap()
}

const FAST: Duration = Duration::from_secs(1);

#[test]
fn criterion_01_k41_closed_form() {
    let start = Instant::now();
    let k = k_integral(&p41());
    let elapsed = start.elapsed();
    let t = |c: Coefficient, a, b, cc, d| PhasePoly::monomial(c, PhaseMono::new(a, b, cc, d));
    let expected = (t(q(1, 1), 1, 0, 0, 4) - t(q(1, 1), 0, 1, 1, 3) - t(q(3, 4) * w(2), 1, 2, 0, 2)
        + t(q(1, 8) * w(2), 0, 3, 1, 1)
        + t(q(1, 64) * w(4), 1, 4, 0, 0))
    .scale(&q(256, 1));
    let pass = k == expected && elapsed < FAST;
    report(1, "K_{4,1} closed form", pass, &format!("{:?}", elapsed));
    assert!(pass);
}

#[test]
fn criterion_02_bj_minus_weyl() {
    let start = Instant::now();
    let k = k_integral(&p41());
    let diff = quantize(Scheme::BornJordan, &k) - quantize(Scheme::Weyl, &k);
    let elapsed = start.elapsed();
    let pass = diff == Operator::x().scale(&(q(32, 1) * h(2) * w(2))) && elapsed < FAST;
    report(2, "BJ(K) - W(K) = 32 hbar^2 omega^2 x", pass, &format!("{:?}", elapsed));
    assert!(pass);
}

#[test]
fn criterion_03_commutators() {
    let start = Instant::now();
    let hop = hamiltonian_operator(&p41());
    let k = k_integral(&p41());
    let cw = commutator(&hop, &quantize(Scheme::Weyl, &k));
    let cbj = commutator(&hop, &quantize(Scheme::BornJordan, &k));
    let elapsed = start.elapsed();
    let expected_p = Operator::px().scale(&(q(-32, 1) * Coefficient::i() * h(3) * w(2)));
    let expected_d = DiffForm::from_terms([(OpMono::new(0, 0, 1, 0), q(-32, 1) * h(4) * w(2))]);
    let pass = cw.is_zero()
        && cbj == expected_p
        && cbj.to_diff_form() == expected_d
        && cbj.to_diff_form().to_string() == "-32*hbar^4*omega^2*dx"
        && elapsed < FAST;
    report(3, "[H,W(K)] = 0, [H,BJ(K)] = -32 hbar^4 w^2 dx", pass, &format!("{:?}", elapsed));
    assert!(pass);
}

#[test]
fn criterion_04_weyl_differential_form() {
    let t = |c: Coefficient, a, b, cx, cy| (OpMono::new(a, b, cx, cy), c * q(256, 1));
    let expected = DiffForm::from_terms([
        t(h(4), 1, 0, 0, 4),
        t(-h(4), 0, 1, 1, 3),
        t(q(-3, 2) * h(4), 0, 0, 1, 2),
        t(q(6, 8) * h(2) * w(2), 1, 2, 0, 2),
        t(q(-1, 8) * h(2) * w(2), 0, 3, 1, 1),
        t(q(3, 2) * h(2) * w(2), 1, 1, 0, 1),
        t(q(-3, 16) * h(2) * w(2), 0, 2, 1, 0),
        t(q(1, 64) * w(4), 1, 4, 0, 0),
        t(q(3, 8) * h(2) * w(2), 1, 0, 0, 0),
    ]);
    let got = quantize(Scheme::Weyl, &k_integral(&p41())).to_diff_form();
    let pass = got == expected;
    report(4, "Weyl K_{4,1} in d-form, term by term", pass, "");
    assert!(pass, "{}", got);
}

#[test]
fn criterion_05_proof_intermediates() {
    let i = Coefficient::i();
    let dy = |b, d, c: Coefficient| (OpMono::new(0, b, 0, d), c);
    let op = |terms: Vec<(OpMono, Coefficient)>| DiffForm::from_terms(terms).to_operator().unwrap();
    let q1_w = op(vec![dy(2, 2, q(-2, 2) * h(2)), dy(1, 1, q(-4, 2) * h(2)), dy(0, 0, q(-1, 2) * h(2))]);
    let q1_bj = op(vec![dy(2, 2, q(-3, 3) * h(2)), dy(1, 1, q(-6, 3) * h(2)), dy(0, 0, q(-2, 3) * h(2))]);
    let q2 = op(vec![dy(1, 3, q(2, 2) * i.clone() * h(3)), dy(0, 2, q(3, 2) * i.clone() * h(3))]);
    let q3 = op(vec![dy(3, 1, q(-2, 2) * i.clone() * h(1)), dy(2, 0, q(-3, 2) * i * h(1))]);
    let mono = |b, d| PhaseMono::new(0, b, 0, d);
    let mut pass = quantize_monomial(Scheme::Weyl, &mono(2, 2)) == q1_w
        && quantize_monomial(Scheme::BornJordan, &mono(2, 2)) == q1_bj;
    for s in Scheme::ALL {
        pass &= quantize_monomial(s, &mono(1, 3)) == q2 && quantize_monomial(s, &mono(3, 1)) == q3;
    }
    report(5, "Q1 (both schemes), Q2, Q3", pass, "");
    assert!(pass);
}

#[test]
fn criterion_06_listed_pairs() {
    let start = Instant::now();
    let mut pass = true;
    for (m, n) in COINCIDING_PAIRS {
        let r = verify_pair(m, n).unwrap();
        pass &= r.bj_equals_weyl && r.weyl_commutes && r.bj_commutes;
    }
    for (m, n) in DIVERGING_PAIRS {
        let r = verify_pair(m, n).unwrap();
        let factors = r.bj_commutator.terms().all(|(_, c)| {
            c.terms().all(|(cm, _)| cm.h_exp >= 2 && cm.w_exp >= 1)
        });
        pass &= !r.bj_equals_weyl && r.weyl_commutes && !r.bj_commutes && factors;
        pass &= r.min_h_exp >= 2 && r.min_w_exp >= 1;
    }
    let elapsed = start.elapsed();
    pass &= elapsed < Duration::from_secs(60);
    report(6, "listed (m,n) verdicts and hbar/omega factors", pass, &format!("{:?}", elapsed));
    assert!(pass);
}

#[test]
fn criterion_07_classical_first_integrals() {
    let mut pass = true;
    for s in 2..=8u32 {
        for m in 1..s {
            let p = OscillatorParams::new(m, s - m).unwrap();
            let hm = hamiltonian(&p);
            let (f1, f2) = ladder_integrals(&p);
            for f in [k_integral(&p), l_integral(), f1, f2] {
                pass &= poisson(&hm, &f).is_zero();
            }
        }
    }
    report(7, "{H, K}, {H, L}, {H, F1}, {H, F2} = 0, m+n<=8", pass, "");
    assert!(pass);
}

#[test]
fn criterion_08_action_oracle() {
    let mut pass = true;
    let pairs = std::iter::once((4, 1)).chain(COINCIDING_PAIRS).chain(DIVERGING_PAIRS);
    for (m, n) in pairs {
        let p = OscillatorParams::new(m, n).unwrap();
        let hop = hamiltonian_operator(&p);
        let k = k_integral(&p);
        for s in Scheme::ALL {
            let kq = quantize(s, &k);
            pass &= commutator_by_action(&hop, &kq).unwrap() == commutator(&hop, &kq);
        }
    }
    report(8, "symbolic commutators match action oracle", pass, "");
    assert!(pass);
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

fn coeff(max_h: u32, real: bool) -> BoxedStrategy<Coefficient> {
    prop::collection::vec((0..=max_h, 0u32..=2, 0u8..=1, rational(), rational()), 0..4)
        .prop_map(move |t| {
            t.into_iter().fold(Coefficient::zero(), |acc, (hh, ww, r, re, im)| {
                let s = if real { Scalar::real(re) } else { Scalar::new(re, im) };
                acc + Coefficient::term(s, CoeffMono::new(hh, ww, r))
            })
        })
        .boxed()
}

fn exps() -> impl Strategy<Value = (u32, u32, u32, u32)> {
    (0u32..=2, 0u32..=2, 0u32..=2, 0u32..=2)
}

fn poly(c: BoxedStrategy<Coefficient>) -> BoxedStrategy<PhasePoly> {
    prop::collection::vec((exps(), c), 0..4)
        .prop_map(|t| PhasePoly::from_terms(t.into_iter().map(|((a, b, cc, d), k)| (PhaseMono::new(a, b, cc, d), k))))
        .boxed()
}

fn operator() -> BoxedStrategy<Operator> {
    prop::collection::vec((exps(), coeff(2, false)), 0..4)
        .prop_map(|t| Operator::from_terms(t.into_iter().map(|((a, b, c, d), k)| (OpMono::new(a, b, c, d), k))))
        .boxed()
}

fn run_property<S: Strategy>(name: &str, strategy: S, check: impl Fn(S::Value) -> bool) -> bool
where
    S::Value: std::fmt::Debug,
{
    let mut runner = TestRunner::new(Config { cases: 1_000, failure_persistence: None, ..Config::default() });
    let outcome = runner.run(&strategy, |v| {
        prop_assert!(check(v));
        Ok(())
    });
    println!("    property {:<36} {}", name, if outcome.is_ok() { "ok" } else { "FAILED" });
    outcome.is_ok()
}

#[test]
fn criterion_09_property_suites() {
    let scheme = prop_oneof![Just(Scheme::BornJordan), Just(Scheme::Weyl)];
    let results = [
        run_property("ring axioms", (coeff(2, false), coeff(2, false), coeff(2, false)), |(a, b, c)| {
            &(&a * &b) * &c == &a * &(&b * &c)
                && &a * &(&b + &c) == &(&a * &b) + &(&a * &c)
                && &a * &b == &b * &a
                && &(&a + &b) + &c == &a + &(&b + &c)
        }),
        run_property("bracket antisymmetry", (poly(coeff(2, false)), poly(coeff(2, false))), |(f, g)| {
            poisson(&f, &g) == -poisson(&g, &f)
        }),
        run_property(
            "bracket Leibniz",
            (poly(coeff(2, false)), poly(coeff(2, false)), poly(coeff(2, false))),
            |(f, g, k)| poisson(&f, &(&g * &k)) == poisson(&f, &g) * k.clone() + g.clone() * poisson(&f, &k),
        ),
        run_property(
            "bracket Jacobi",
            (poly(coeff(2, false)), poly(coeff(2, false)), poly(coeff(2, false))),
            |(f, g, k)| {
                (poisson(&f, &poisson(&g, &k)) + poisson(&g, &poisson(&k, &f)) + poisson(&k, &poisson(&f, &g))).is_zero()
            },
        ),
        run_property("op_mul associativity", (operator(), operator(), operator()), |(a, b, c)| {
            &(&a * &b) * &c == &a * &(&b * &c)
        }),
        run_property("hermiticity surrogate", (scheme.clone(), poly(coeff(2, true))), |(s, f)| {
            let op = quantize(s, &f);
            op.adjoint() == op
        }),
        run_property("symbol round trip", (scheme, poly(coeff(0, false))), |(s, f)| {
            classical_symbol(&quantize(s, &f)) == f
        }),
        run_property("print-parse round trip", poly(coeff(3, false)), |f| parse_poly(&f.to_string()).ok() == Some(f)),
    ];
    let pass = results.iter().all(|r| *r);
    report(9, "property suites (1000 cases each)", pass, "");
    assert!(pass);
}

#[test]
fn criterion_10_weyl_conjecture_evidence() {
    let start = Instant::now();
    let records = sweep(8, SweepTarget::K).unwrap();
    let pass = records.len() == 28 && records.iter().all(|r| r.weyl_commutes && r.oracle_agreement);
    report(10, "sweep(8, K): Weyl commutes for every pair", pass, &format!("{} pairs, {:?}", records.len(), start.elapsed()));
    println!("    note: {}", EVIDENCE_NOTE);
    assert!(pass);
}
