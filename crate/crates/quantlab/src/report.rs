//! Report rendering. JSON is the canonical machine format; text and LaTeX are views.
//!
//! Integers inside serialized coefficients are decimal strings so that
//! arbitrary-precision values survive any JSON reader.

use std::fmt::Write as _;

use serde::Serialize;

use quantcore::{Coefficient, Operator, PhasePoly, Scheme};

use crate::pipeline::{checked_claims, failures, observations, Claim, SweepTarget, VerificationRecord};

#[derive(Serialize)]
pub struct CoeffTermJson {
    pub h: u32,
    pub w: u32,
    pub r: u8,
    pub re_num: String,
    pub re_den: String,
    pub im_num: String,
    pub im_den: String,
}

#[derive(Serialize)]
pub struct CoeffJson {
    pub terms: Vec<CoeffTermJson>,
}

#[derive(Serialize)]
pub struct TermJson {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub d: u32,
    pub coeff: CoeffJson,
}

pub fn coeff_json(c: &Coefficient) -> CoeffJson {
    CoeffJson {
        terms: c
            .terms()
            .rev()
            .map(|(m, s)| CoeffTermJson {
                h: m.h_exp,
                w: m.w_exp,
                r: m.r_exp,
                re_num: s.re.numer().to_string(),
                re_den: s.re.denom().to_string(),
                im_num: s.im.numer().to_string(),
                im_den: s.im.denom().to_string(),
            })
            .collect(),
    }
}

/// Terms in descending graded-lex order, as in the text rendering.
pub fn operator_json(op: &Operator) -> Vec<TermJson> {
    op.terms()
        .rev()
        .map(|(m, c)| TermJson { a: m.a, b: m.b, c: m.c, d: m.d, coeff: coeff_json(c) })
        .collect()
}

pub fn poly_json(f: &PhasePoly) -> Vec<TermJson> {
    f.terms()
        .rev()
        .map(|(m, c)| TermJson { a: m.a, b: m.b, c: m.c, d: m.d, coeff: coeff_json(c) })
        .collect()
}

#[derive(Serialize)]
struct Params {
    m: u32,
    n: u32,
}

#[derive(Serialize)]
struct Classical {
    bracket_zero: bool,
    observable: String,
}

#[derive(Serialize)]
struct Operators {
    bj_equals_weyl: bool,
    bj_minus_weyl: Vec<TermJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ladder_equals_weyl: Option<bool>,
}

#[derive(Serialize)]
struct Commutators {
    weyl: Vec<TermJson>,
    bj: Vec<TermJson>,
    min_h_exp: u32,
    min_w_exp: u32,
    weyl_commutes: bool,
    bj_commutes: bool,
    bj_differential: String,
}

#[derive(Serialize)]
struct Oracle {
    agreement: bool,
}

#[derive(Serialize)]
struct ClaimJson {
    id: &'static str,
    description: String,
    holds: bool,
}

impl From<Claim> for ClaimJson {
    fn from(c: Claim) -> Self {
        ClaimJson { id: c.id, description: c.description, holds: c.holds }
    }
}

#[derive(Serialize)]
pub struct RecordJson {
    params: Params,
    target: &'static str,
    classical: Classical,
    operators: Operators,
    commutators: Commutators,
    oracle: Oracle,
    claims: Vec<ClaimJson>,
    observations: Vec<ClaimJson>,
}

pub fn record_json(r: &VerificationRecord) -> RecordJson {
    RecordJson {
        params: Params { m: r.m, n: r.n },
        target: r.target.name(),
        classical: Classical { bracket_zero: r.classical_bracket_zero, observable: r.classical.to_string() },
        operators: Operators {
            bj_equals_weyl: r.bj_equals_weyl,
            bj_minus_weyl: operator_json(&r.bj_minus_weyl),
            ladder_equals_weyl: r.ladder_equals_weyl,
        },
        commutators: Commutators {
            weyl: operator_json(&r.weyl_commutator),
            bj: operator_json(&r.bj_commutator),
            min_h_exp: r.min_h_exp,
            min_w_exp: r.min_w_exp,
            weyl_commutes: r.weyl_commutes,
            bj_commutes: r.bj_commutes,
            bj_differential: r.bj_commutator.to_diff_form().to_string(),
        },
        oracle: Oracle { agreement: r.oracle_agreement },
        claims: checked_claims(r).into_iter().map(Into::into).collect(),
        observations: observations(r).into_iter().map(Into::into).collect(),
    }
}

#[derive(Serialize)]
struct VerifyJson {
    #[serde(flatten)]
    record: RecordJson,
    failures: Vec<String>,
}

pub fn verify_json(r: &VerificationRecord) -> String {
    let doc = VerifyJson { record: record_json(r), failures: failures(std::slice::from_ref(r)) };
    serde_json::to_string_pretty(&doc).expect("serializable")
}

pub const EVIDENCE_NOTE: &str =
    "finite exact computation over the listed pairs; evidence for the general Weyl commutation conjecture, not a proof";

#[derive(Serialize)]
struct SweepSummary {
    records: usize,
    weyl_commutes_all: bool,
    bj_differs: Vec<String>,
    bj_differs_and_commutes: Vec<String>,
    evidence_note: &'static str,
}

#[derive(Serialize)]
struct SweepJson {
    target: &'static str,
    max_sum: u32,
    records: Vec<RecordJson>,
    summary: SweepSummary,
    failures: Vec<String>,
}

fn label(r: &VerificationRecord) -> String {
    format!("{}({},{})", r.target, r.m, r.n)
}

pub fn sweep_json(max_sum: u32, target: SweepTarget, records: &[VerificationRecord]) -> String {
    let doc = SweepJson {
        target: target.name(),
        max_sum,
        records: records.iter().map(record_json).collect(),
        summary: SweepSummary {
            records: records.len(),
            weyl_commutes_all: records.iter().all(|r| r.weyl_commutes),
            bj_differs: records.iter().filter(|r| !r.bj_equals_weyl).map(label).collect(),
            bj_differs_and_commutes: records.iter().filter(|r| !r.bj_equals_weyl && r.bj_commutes).map(label).collect(),
            evidence_note: EVIDENCE_NOTE,
        },
        failures: failures(records),
    };
    serde_json::to_string_pretty(&doc).expect("serializable")
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn record_text(r: &VerificationRecord) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "(m, n) = ({}, {})  target = {}", r.m, r.n, r.target);
    let _ = writeln!(s, "  classical:           {}", r.classical);
    let _ = writeln!(s, "  {{H, {}}} = 0:          {}", r.target, yes_no(r.classical_bracket_zero));
    let _ = writeln!(s, "  BJ = Weyl:           {}", yes_no(r.bj_equals_weyl));
    let _ = writeln!(s, "  BJ - Weyl:           {}", r.bj_minus_weyl);
    let _ = writeln!(s, "  [H, Weyl]:           {}", r.weyl_commutator);
    let _ = writeln!(s, "  [H, BJ]:             {}", r.bj_commutator);
    let _ = writeln!(s, "  [H, BJ] (d-form):    {}", r.bj_commutator.to_diff_form());
    let _ = writeln!(s, "  min hbar/omega exp:  {} / {}", r.min_h_exp, r.min_w_exp);
    let _ = writeln!(s, "  oracle agreement:    {}", yes_no(r.oracle_agreement));
    if let Some(eq) = r.ladder_equals_weyl {
        let _ = writeln!(s, "  ladder = Weyl:       {}", yes_no(eq));
    }
    for c in checked_claims(r) {
        let _ = writeln!(s, "  [{}] {}: {}", if c.holds { "PASS" } else { "FAIL" }, c.id, c.description);
    }
    for c in observations(r) {
        let _ = writeln!(s, "  [note] {}: {}", c.id, yes_no(c.holds));
    }
    s
}

pub fn sweep_text(max_sum: u32, target: SweepTarget, records: &[VerificationRecord]) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "sweep target={} m+n<={}", target.name(), max_sum);
    let _ = writeln!(s, "{:<8} {:<6} {:<10} {:<10} {:<10} {:<6} {:<6} {:<7}", "target", "(m,n)", "BJ=Weyl", "Weyl-comm", "BJ-comm", "minh", "minw", "oracle");
    for r in records {
        let _ = writeln!(
            s,
            "{:<8} {:<6} {:<10} {:<10} {:<10} {:<6} {:<6} {:<7}",
            r.target.name(),
            format!("({},{})", r.m, r.n),
            yes_no(r.bj_equals_weyl),
            yes_no(r.weyl_commutes),
            yes_no(r.bj_commutes),
            r.min_h_exp,
            r.min_w_exp,
            yes_no(r.oracle_agreement)
        );
    }
    let _ = writeln!(s, "Weyl commutes for every record: {}", yes_no(records.iter().all(|r| r.weyl_commutes)));
    let _ = writeln!(s, "note: {}", EVIDENCE_NOTE);
    let fails = failures(records);
    if fails.is_empty() {
        let _ = writeln!(s, "all checked claims hold");
    } else {
        let _ = writeln!(s, "failures: {}", fails.join(", "));
    }
    s
}

pub fn record_latex(r: &VerificationRecord) -> String {
    let mut s = String::new();
    let t = match r.target.name() {
        "k" => "K",
        "f1" => "\\tilde F_1",
        _ => "\\tilde F_2",
    };
    let _ = writeln!(s, "\\begin{{align*}}");
    let _ = writeln!(s, "{t}_{{{m},{n}}} &= {}\\\\", r.classical.to_latex(), m = r.m, n = r.n);
    let _ = writeln!(s, "\\hat {t}^{{\\rm BJ}} - \\hat {t}^{{\\rm W}} &= {}\\\\", r.bj_minus_weyl.to_latex());
    let _ = writeln!(s, "[\\hat H, \\hat {t}^{{\\rm W}}] &= {}\\\\", r.weyl_commutator.to_diff_form().to_latex());
    let _ = writeln!(s, "[\\hat H, \\hat {t}^{{\\rm BJ}}] &= {}", r.bj_commutator.to_diff_form().to_latex());
    let _ = writeln!(s, "\\end{{align*}}");
    s
}

pub fn sweep_latex(records: &[VerificationRecord]) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "\\begin{{tabular}}{{llllll}}");
    let _ = writeln!(s, "target & $(m,n)$ & BJ $=$ W & $[\\hat H,\\hat W]=0$ & $[\\hat H,\\hat{{BJ}}]=0$ & $\\min(\\hbar,\\omega)$\\\\");
    for r in records {
        let _ = writeln!(
            s,
            "{} & $({},{})$ & {} & {} & {} & $({}, {})$\\\\",
            r.target,
            r.m,
            r.n,
            yes_no(r.bj_equals_weyl),
            yes_no(r.weyl_commutes),
            yes_no(r.bj_commutes),
            r.min_h_exp,
            r.min_w_exp
        );
    }
    let _ = writeln!(s, "\\end{{tabular}}");
    s
}

#[derive(Serialize)]
struct OperatorReport<'a> {
    scheme: &'static str,
    input: &'a str,
    classical: String,
    operator: Vec<TermJson>,
    normal_ordered: String,
    differential: String,
}

/// `quantize` output in the requested format.
pub fn quantized_report(format: Format, scheme: Scheme, input: &str, f: &PhasePoly, op: &Operator) -> String {
    match format {
        Format::Json => {
            let doc = OperatorReport {
                scheme: scheme.short_name(),
                input,
                classical: f.to_string(),
                operator: operator_json(op),
                normal_ordered: op.to_string(),
                differential: op.to_diff_form().to_string(),
            };
            serde_json::to_string_pretty(&doc).expect("serializable")
        }
        Format::Text => format!(
            "scheme:         {}\nclassical:      {}\nnormal-ordered: {}\ndifferential:   {}\n",
            scheme,
            f,
            op,
            op.to_diff_form()
        ),
        Format::Latex => format!(
            "\\begin{{align*}}\nf &= {}\\\\\n\\hat f &= {}\\\\\n&= {}\n\\end{{align*}}\n",
            f.to_latex(),
            op.to_latex(),
            op.to_diff_form().to_latex()
        ),
    }
}

#[derive(Serialize)]
struct CommutatorReport {
    params: Params,
    scheme: &'static str,
    commutator: Vec<TermJson>,
    normal_ordered: String,
    differential: String,
    is_zero: bool,
}

pub fn commutator_report(format: Format, scheme: Scheme, m: u32, n: u32, op: &Operator) -> String {
    match format {
        Format::Json => {
            let doc = CommutatorReport {
                params: Params { m, n },
                scheme: scheme.short_name(),
                commutator: operator_json(op),
                normal_ordered: op.to_string(),
                differential: op.to_diff_form().to_string(),
                is_zero: op.is_zero(),
            };
            serde_json::to_string_pretty(&doc).expect("serializable")
        }
        Format::Text => format!(
            "[H_{{{m},{n}}}, K^{}_{{{m},{n}}}]\nnormal-ordered: {}\ndifferential:   {}\n",
            scheme.short_name(),
            op,
            op.to_diff_form(),
            m = m,
            n = n
        ),
        Format::Latex => format!(
            "\\[ [\\hat H_{{{m},{n}}}, \\hat K^{{\\rm {}}}_{{{m},{n}}}] = {} \\]\n",
            if scheme == Scheme::Weyl { "W" } else { "BJ" },
            op.to_diff_form().to_latex(),
            m = m,
            n = n
        ),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}
