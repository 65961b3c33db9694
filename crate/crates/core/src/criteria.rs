//! Executable certifiers for real-rootedness and interlacing criteria on
//! linear combinations `a·f + b·g` (and friends) of rational polynomials.
//!
//! Each `check_*` function evaluates the hypothesis clauses of one criterion
//! exactly, constructs the combination polynomial(s), and then verifies the
//! claimed conclusion independently with the root engine — the conclusion is
//! never taken on faith, so the certifiers double as a regression net for
//! the engine. Failures are recorded as named clauses with witnesses in a
//! [`CheckReport`]; only malformed inputs (length mismatches, broken degree
//! laddering in a recurrence) surface as errors.
//!
//! A seeded randomized soundness harness drives every certifier over
//! generated instances and reports any hypotheses-pass/conclusion-fail
//! event, which would indicate a bug in either a certifier or the engine.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::interlace::{
    compare_zero_orders, is_generalized_sturm_sequence, is_sturm_sequence, Relation,
};
use crate::poly::{rat, Poly, Rat, Sign};
use crate::report::CheckReport;
use crate::roots::{
    compare_root_with_rational, is_real_rooted, isolate_real_roots, negative_on_half_line,
    nonpositive_on_half_line, sign_at_root, HalfLine, HalfLineVerdict,
};

fn fmt_deg(d: Option<usize>) -> String {
    match d {
        None => "-inf".to_string(),
        Some(k) => k.to_string(),
    }
}

fn sign_text(s: Sign) -> &'static str {
    match s {
        Sign::Negative => "negative",
        Sign::Zero => "zero",
        Sign::Positive => "positive",
    }
}

/// `deg upper ∈ {deg lower, deg lower + 1}`, with the zero polynomial as −∞
/// (so only zero matches zero).
fn degree_step_ok(upper: &Poly, lower: &Poly) -> bool {
    match (upper.degree(), lower.degree()) {
        (None, None) => true,
        (Some(du), Some(dl)) => du == dl || du == dl + 1,
        _ => false,
    }
}

/// `deg p ≤ deg q + offset`; the zero polynomial passes and a zero `q`
/// admits only a zero `p`.
fn degree_at_most(p: &Poly, q: &Poly, offset: usize) -> bool {
    match (p.degree(), q.degree()) {
        (None, _) => true,
        (Some(_), None) => false,
        (Some(dp), Some(dq)) => dp <= dq + offset,
    }
}

/// Leading coefficients of `p` and `q` have the same sign; a zero operand
/// has no leading sign and passes by convention.
fn leading_signs_match(p: &Poly, q: &Poly) -> (bool, String) {
    match (p.leading_coeff(), q.leading_coeff()) {
        (Some(cp), Some(cq)) => (
            Sign::of(cp) == Sign::of(cq),
            format!("leading coefficients {cp} and {cq}"),
        ),
        _ => (
            true,
            "a zero polynomial has no leading sign; vacuous".to_string(),
        ),
    }
}

/// Required sign of a test polynomial at the roots of a host.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum SignReq {
    NonPositive,
    Negative,
    NonNegative,
    Positive,
}

impl SignReq {
    fn admits(self, s: Sign) -> bool {
        match self {
            SignReq::NonPositive => s != Sign::Positive,
            SignReq::Negative => s == Sign::Negative,
            SignReq::NonNegative => s != Sign::Negative,
            SignReq::Positive => s == Sign::Positive,
        }
    }
}

/// Exact check that `test` has the required sign at every real root of
/// `host`. Vacuously true when `host` has no real roots; an identically
/// zero host is reported as a failure (its "roots" would be the whole
/// line), which keeps certifiers conservative on degenerate input.
fn at_all_roots(test: &Poly, host: &Poly, req: SignReq) -> (bool, String) {
    if host.is_zero() {
        return (
            false,
            "not evaluated: host polynomial is identically zero".to_string(),
        );
    }
    if host.degree() == Some(0) {
        return (true, "vacuous: host is a nonzero constant".to_string());
    }
    let iso = isolate_real_roots(host).expect("host is nonzero");
    if iso.roots.is_empty() {
        return (true, "vacuous: host has no real roots".to_string());
    }
    for root in &iso.roots {
        let s = sign_at_root(test, host, &root.interval)
            .expect("interval comes from an isolation of host");
        if !req.admits(s) {
            return (
                false,
                format!(
                    "sign is {} at host root in {} (~{})",
                    sign_text(s),
                    root.interval,
                    root.interval.approx(4)
                ),
            );
        }
    }
    (
        true,
        format!("verified at {} distinct real roots", iso.roots.len()),
    )
}

/// Every real root of `host` lies in `[lo, hi]` (either bound optional).
/// Vacuous for constants; an identically zero host fails.
fn roots_within(host: &Poly, lo: Option<&Rat>, hi: Option<&Rat>) -> (bool, String) {
    if host.is_zero() {
        return (
            false,
            "not evaluated: polynomial is identically zero".to_string(),
        );
    }
    if host.degree() == Some(0) {
        return (true, "vacuous: nonzero constant has no roots".to_string());
    }
    let iso = isolate_real_roots(host).expect("host is nonzero");
    for root in &iso.roots {
        if let Some(lo) = lo {
            if compare_root_with_rational(&iso.squarefree, &root.interval, lo) == Ordering::Less {
                return (false, format!("root in {} lies below {lo}", root.interval));
            }
        }
        if let Some(hi) = hi {
            if compare_root_with_rational(&iso.squarefree, &root.interval, hi) == Ordering::Greater
            {
                return (false, format!("root in {} lies above {hi}", root.interval));
            }
        }
    }
    (
        true,
        format!("all {} distinct real roots within range", iso.roots.len()),
    )
}

/// Zero-order relation of `g` against `f` with a witness string; when an
/// operand is not real-rooted the relation is reported as `None` instead of
/// erroring, so conclusion clauses on constructed polynomials stay total.
fn relation_clause(g: &Poly, f: &Poly) -> (Relation, String) {
    if !is_real_rooted(f) {
        return (
            Relation::None,
            "not evaluated: upper polynomial is not real-rooted".to_string(),
        );
    }
    if !is_real_rooted(g) {
        return (
            Relation::None,
            "not evaluated: lower polynomial is not real-rooted".to_string(),
        );
    }
    let cert = compare_zero_orders(f, g).expect("operands verified real-rooted");
    let tag = if cert.degenerate {
        " (degenerate convention)"
    } else {
        ""
    };
    (
        cert.relation,
        format!("zero orders: {}{}", cert.relation.label(), tag),
    )
}

/// Adds a real-rootedness clause for `p` and returns its verdict.
fn real_rooted_clause(rep: &mut CheckReport, kind: Kind, name: &str, p: &Poly) -> bool {
    let ok = is_real_rooted(p);
    let witness = match p.degree() {
        None => "zero polynomial: vacuously real-rooted".to_string(),
        Some(0) => "nonzero constant: vacuously real-rooted".to_string(),
        Some(d) => {
            let real: usize = isolate_real_roots(p)
                .expect("nonzero")
                .roots
                .iter()
                .map(|r| r.multiplicity)
                .sum();
            format!("{real} of {d} roots real (with multiplicity)")
        }
    };
    match kind {
        Kind::Hypothesis => rep.hypothesis(name, ok, witness),
        Kind::Conclusion => rep.conclusion(name, ok, witness),
    }
    ok
}

#[derive(Clone, Copy)]
enum Kind {
    Hypothesis,
    Conclusion,
}

fn standard_clause(rep: &mut CheckReport, name: &str, p: &Poly) {
    let witness = match p.leading_coeff() {
        None => "zero polynomial: standard by convention".to_string(),
        Some(c) => format!("leading coefficient {c}"),
    };
    rep.hypothesis(name, p.is_standard(), witness);
}

fn half_line_text(half: HalfLine) -> &'static str {
    match half {
        HalfLine::NonPositive => "x <= 0",
        HalfLine::NonNegative => "x >= 0",
    }
}

fn half_line_witness(v: &HalfLineVerdict) -> String {
    if v.holds {
        "holds on the whole half-line".to_string()
    } else {
        match &v.witness {
            Some(w) => format!("fails at x = {w}"),
            None => "fails (sign reaches zero at an irrational point)".to_string(),
        }
    }
}

/// Certifies: for `F = a·f + b·g` with (a) `deg F ∈ {deg f, deg f+1}`,
/// (b) `f, g` real-rooted and `g ⪯ f`, (c) `F` and `g` with same-sign
/// leading coefficients, and (d) `b ≤ 0` at every root of `f`, the
/// combination `F` is real-rooted with `f ⪯ F`; when moreover `g ≺ f` and
/// `b < 0` at every root of `f`, the order is strict.
pub fn check_thm_ffg(f: &Poly, g: &Poly, a: &Poly, b: &Poly) -> CheckReport {
    let big_f = &(a * f) + &(b * g);
    let mut rep = CheckReport::new();
    rep.constructed("F", big_f.to_text("x"));

    rep.hypothesis(
        "(a) deg F in {deg f, deg f+1}",
        degree_step_ok(&big_f, f),
        format!(
            "deg F = {}, deg f = {}",
            fmt_deg(big_f.degree()),
            fmt_deg(f.degree())
        ),
    );
    real_rooted_clause(&mut rep, Kind::Hypothesis, "(b) f real-rooted", f);
    real_rooted_clause(&mut rep, Kind::Hypothesis, "(b) g real-rooted", g);
    let (rel_gf, w) = relation_clause(g, f);
    rep.hypothesis("(b) g preceq f", rel_gf.holds_weak(), w);
    let (lead_ok, lead_w) = leading_signs_match(&big_f, g);
    rep.hypothesis("(c) F and g leading signs agree", lead_ok, lead_w);
    let (b_ok, b_w) = at_all_roots(b, f, SignReq::NonPositive);
    rep.hypothesis("(d) b <= 0 at every root of f", b_ok, b_w);

    real_rooted_clause(&mut rep, Kind::Conclusion, "F real-rooted", &big_f);
    let (rel_ff, w) = relation_clause(f, &big_f);
    rep.conclusion("f preceq F", rel_ff.holds_weak(), w.clone());

    let (b_strict, _) = at_all_roots(b, f, SignReq::Negative);
    if rel_gf.holds_strict() && b_strict {
        rep.conclusion("f prec F (strict clause)", rel_ff.holds_strict(), w);
    } else {
        rep.note("strict clause not applicable: needs g prec f and b < 0 at every root of f");
    }
    rep
}

/// Multi-summand variant of [`check_thm_ffg`]: `F = a·f + Σⱼ bⱼ·gⱼ`, with
/// the (b)–(d) clauses per summand; strictness needs, for each root `r` of
/// `f`, some index `j` with `gⱼ ≺ f` and `bⱼ(r) < 0`.
pub fn check_thm_ffgk(f: &Poly, gs: &[Poly], a: &Poly, bs: &[Poly]) -> Result<CheckReport> {
    if gs.len() != bs.len() {
        return Err(Error::LengthMismatch {
            expected: gs.len(),
            got: bs.len(),
        });
    }
    if gs.is_empty() {
        return Err(Error::ParameterDomain(
            "at least one (g, b) summand required".to_string(),
        ));
    }
    let mut big_f = a * f;
    for (g, b) in gs.iter().zip(bs) {
        big_f = &big_f + &(b * g);
    }
    let mut rep = CheckReport::new();
    rep.constructed("F", big_f.to_text("x"));

    rep.hypothesis(
        "(a) deg F in {deg f, deg f+1}",
        degree_step_ok(&big_f, f),
        format!(
            "deg F = {}, deg f = {}",
            fmt_deg(big_f.degree()),
            fmt_deg(f.degree())
        ),
    );
    real_rooted_clause(&mut rep, Kind::Hypothesis, "(b) f real-rooted", f);
    let mut strict_rel = Vec::with_capacity(gs.len());
    for (j, (g, b)) in gs.iter().zip(bs).enumerate() {
        real_rooted_clause(
            &mut rep,
            Kind::Hypothesis,
            &format!("(b) g[{j}] real-rooted"),
            g,
        );
        let (rel, w) = relation_clause(g, f);
        rep.hypothesis(format!("(b) g[{j}] preceq f"), rel.holds_weak(), w);
        strict_rel.push(rel.holds_strict());
        let (lead_ok, lead_w) = leading_signs_match(&big_f, g);
        rep.hypothesis(
            format!("(c) F and g[{j}] leading signs agree"),
            lead_ok,
            lead_w,
        );
        let (b_ok, b_w) = at_all_roots(b, f, SignReq::NonPositive);
        rep.hypothesis(format!("(d) b[{j}] <= 0 at every root of f"), b_ok, b_w);
    }

    real_rooted_clause(&mut rep, Kind::Conclusion, "F real-rooted", &big_f);
    let (rel_ff, w) = relation_clause(f, &big_f);
    rep.conclusion("f preceq F", rel_ff.holds_weak(), w.clone());

    // Strict clause: every root of f admits a strictly-negative summand
    // whose g strictly interlaces/alternates with f.
    let strict_applies = if f.is_zero() {
        false
    } else if f.degree() == Some(0) {
        true
    } else {
        isolate_real_roots(f)
            .expect("nonzero")
            .roots
            .iter()
            .all(|root| {
                gs.iter().zip(bs).enumerate().any(|(j, (_g, b))| {
                    strict_rel[j]
                        && sign_at_root(b, f, &root.interval).expect("isolating interval")
                            == Sign::Negative
                })
            })
    };
    if strict_applies {
        rep.conclusion("f prec F (strict clause)", rel_ff.holds_strict(), w);
    } else {
        rep.note(
            "strict clause not applicable: needs, at each root of f, some j with g[j] prec f and b[j] < 0",
        );
    }
    Ok(rep)
}

/// Expected coefficient-sign regime of a recurrence-generated sequence,
/// fixing the half-line on which the `b_n ≤ 0`, `c_n ≤ 0` tests run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignMode {
    /// Entries have nonnegative coefficients; sign tests run on `x ≤ 0`.
    Nonnegative,
    /// Entries have alternating-sign coefficients; tests run on `x ≥ 0`.
    Alternating,
}

impl SignMode {
    pub fn half_line(self) -> HalfLine {
        match self {
            SignMode::Nonnegative => HalfLine::NonPositive,
            SignMode::Alternating => HalfLine::NonNegative,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            SignMode::Nonnegative => "nonnegative",
            SignMode::Alternating => "alternating",
        }
    }

    /// Admissible sign for the coefficient of `x^k` in a degree-`deg` entry.
    fn coeff_ok(self, k: usize, deg: usize, c: &Rat) -> bool {
        match self {
            SignMode::Nonnegative => !c.is_negative(),
            SignMode::Alternating => {
                if (deg - k).is_multiple_of(2) {
                    !c.is_negative()
                } else {
                    !c.is_positive()
                }
            }
        }
    }
}

/// A derivative-augmented three-term recurrence
/// `P_n = a_n·P_{n−1} + b_n·P'_{n−1} + c_n·P_{n−2}` with explicit seeds.
pub struct Recurrence {
    pub name: String,
    pub seeds: Vec<Poly>,
    coeffs: Box<dyn Fn(usize) -> (Poly, Poly, Poly) + Send + Sync>,
}

impl Recurrence {
    pub fn new(
        name: impl Into<String>,
        seeds: Vec<Poly>,
        coeffs: impl Fn(usize) -> (Poly, Poly, Poly) + Send + Sync + 'static,
    ) -> Recurrence {
        Recurrence {
            name: name.into(),
            seeds,
            coeffs: Box::new(coeffs),
        }
    }

    /// Coefficients `(a_n, b_n, c_n)` used to build entry `n`.
    pub fn coefficients(&self, n: usize) -> (Poly, Poly, Poly) {
        (self.coeffs)(n)
    }

    /// Entries `P_0 … P_{n_max}`: seeds first, then the recurrence
    /// (`P_{n−2}` reads as the zero polynomial while out of range).
    pub fn generate(&self, n_max: usize) -> Vec<Poly> {
        let mut seq: Vec<Poly> = self.seeds.iter().take(n_max + 1).cloned().collect();
        for n in seq.len()..=n_max {
            let (a, b, c) = self.coefficients(n);
            let step = &(&a * &seq[n - 1]) + &(&b * &seq[n - 1].derivative());
            let next = if n >= 2 {
                &step + &(&c * &seq[n - 2])
            } else {
                step
            };
            seq.push(next);
        }
        seq
    }

    /// Second-kind Stirling polynomials: `S_n = x·S_{n−1} + x·S'_{n−1}`.
    pub fn stirling() -> Recurrence {
        Recurrence::new("stirling", vec![Poly::one()], |_| {
            (Poly::x(), Poly::x(), Poly::zero())
        })
    }

    /// Eulerian polynomials: `A_n = n·x·A_{n−1} + x(1−x)·A'_{n−1}`.
    pub fn eulerian() -> Recurrence {
        Recurrence::new("eulerian", vec![Poly::one()], |n| {
            (
                Poly::monomial(rat(n as i64), 1),
                Poly::from_ints(&[0, 1, -1]),
                Poly::zero(),
            )
        })
    }

    /// Derangement polynomials:
    /// `d_n = (n−1)x·d_{n−1} + x(1−x)·d'_{n−1} + (n−1)x·d_{n−2}`.
    pub fn derangement() -> Recurrence {
        Recurrence::new("derangement", vec![Poly::one(), Poly::zero()], |n| {
            let lin = Poly::monomial(rat(n as i64 - 1), 1);
            (lin.clone(), Poly::from_ints(&[0, 1, -1]), lin)
        })
    }
}

/// Certifies the generalized-Sturm-sequence criterion for a recurrence
/// `P_n = a_n·P_{n−1} + b_n·P'_{n−1} + c_n·P_{n−2}`: if the entries are
/// standard with coefficients in the `mode` regime and `b_n ≤ 0`, `c_n ≤ 0`
/// hold on the mode's half-line, the generated sequence is a generalized
/// Sturm sequence; with `deg P_n = n` throughout and `b_n` or `c_n`
/// strictly negative there, a Sturm sequence.
///
/// Errors when two consecutive nonzero entries violate
/// `deg P_n ∈ {deg P_{n−1}, deg P_{n−1}+1}`.
pub fn check_cor_ppp(rec: &Recurrence, n_max: usize, mode: SignMode) -> Result<CheckReport> {
    if rec.seeds.is_empty() {
        return Err(Error::ParameterDomain(
            "at least one seed required".to_string(),
        ));
    }
    let seq = rec.generate(n_max);
    for n in 1..seq.len() {
        let (lower, upper) = (&seq[n - 1], &seq[n]);
        if lower.is_zero() || upper.is_zero() {
            continue;
        }
        if !degree_step_ok(upper, lower) {
            return Err(Error::Shape(format!(
                "degree clause violated at n = {n}: deg P_{} = {}, deg P_{n} = {}",
                n - 1,
                fmt_deg(lower.degree()),
                fmt_deg(upper.degree()),
            )));
        }
    }

    let half = mode.half_line();
    let mut rep = CheckReport::new();
    rep.constructed(format!("P_{n_max}"), seq[n_max].to_text("x"));
    rep.note(format!(
        "sequence {}: {} entries ({} from seeds)",
        rec.name,
        seq.len(),
        rec.seeds.len().min(n_max + 1)
    ));

    let bad_std = seq.iter().position(|p| !p.is_standard());
    rep.hypothesis(
        "entries standard",
        bad_std.is_none(),
        match bad_std {
            None => "every entry is zero or has positive leading coefficient".to_string(),
            Some(i) => format!("entry P_{i} has negative leading coefficient"),
        },
    );

    let mut coeff_bad = None;
    'scan: for (n, p) in seq.iter().enumerate() {
        let Some(d) = p.degree() else { continue };
        for (k, c) in p.coeffs().iter().enumerate() {
            if !mode.coeff_ok(k, d, c) {
                coeff_bad = Some((n, k));
                break 'scan;
            }
        }
    }
    rep.hypothesis(
        format!("entry coefficients {}", mode.label()),
        coeff_bad.is_none(),
        match coeff_bad {
            None => "all coefficient signs in the expected regime".to_string(),
            Some((n, k)) => format!("coefficient of x^{k} in P_{n} breaks the sign regime"),
        },
    );

    let first_rec = rec.seeds.len().min(n_max + 1);
    let mut b_fail: Option<(usize, String)> = None;
    let mut c_fail: Option<(usize, String)> = None;
    let mut strict_each = first_rec <= n_max;
    let mut has_second_order = false;
    for n in first_rec..=n_max {
        let (_a, b, c) = rec.coefficients(n);
        has_second_order |= !c.is_zero();
        let vb = nonpositive_on_half_line(&b, half);
        if !vb.holds && b_fail.is_none() {
            b_fail = Some((n, half_line_witness(&vb)));
        }
        let vc = nonpositive_on_half_line(&c, half);
        if !vc.holds && c_fail.is_none() {
            c_fail = Some((n, half_line_witness(&vc)));
        }
        if strict_each {
            strict_each =
                negative_on_half_line(&b, half).holds || negative_on_half_line(&c, half).holds;
        }
    }
    let vacuous = first_rec > n_max;
    let describe = |fail: &Option<(usize, String)>| match fail {
        Some((n, w)) => format!("at n = {n}: {w}"),
        None if vacuous => "vacuous: no recurrence steps taken".to_string(),
        None => "holds at every recurrence step".to_string(),
    };
    rep.hypothesis(
        format!("b_n <= 0 on {}", half_line_text(half)),
        b_fail.is_none(),
        describe(&b_fail),
    );
    rep.hypothesis(
        format!("c_n <= 0 on {}", half_line_text(half)),
        c_fail.is_none(),
        describe(&c_fail),
    );
    if has_second_order {
        rep.note(
            "second-order coefficient c_n tested with the same half-line sign rule as b_n; \
             the conclusion below is verified independently of that reading",
        );
    }

    let verdict = is_generalized_sturm_sequence(&seq);
    rep.conclusion(
        "generalized Sturm sequence",
        verdict.ok,
        match (verdict.failure_index, verdict.reason) {
            (Some(i), Some(r)) => format!("fails at index {i}: {r}"),
            _ => "entries standard, real-rooted, adjacent zero orders related".to_string(),
        },
    );

    let degrees_exact = seq.iter().enumerate().all(|(n, p)| p.degree() == Some(n));
    if degrees_exact && strict_each {
        let (ok, w) = if bad_std.is_some() {
            (false, "not evaluated: non-standard entry".to_string())
        } else {
            let ok = is_sturm_sequence(&seq).expect("entries verified standard");
            let w = if ok {
                "neighbor sign change verified at every interior root".to_string()
            } else {
                "neighbor sign-change property fails".to_string()
            };
            (ok, w)
        };
        rep.conclusion("Sturm sequence (strict clause)", ok, w);
    } else {
        rep.note(
            "strict clause not applicable: needs deg P_n = n throughout and b_n or c_n strictly negative on the half-line",
        );
    }
    Ok(rep)
}

/// Which inequality of the two-sided combination lemma to certify.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LemmaPart {
    /// `deg G ≤ deg g + 1` and `c > 0` at roots of `g` give `g ≺ G`.
    I,
    /// `deg G ≤ deg f` and `d > 0` at roots of `f` give `G ≺ f`.
    II,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strictness {
    Strict,
    Weak,
}

/// Certifies one side of the sandwich for `G = c·f + d·g` between a
/// strictly (or weakly) related pair `g ≺ f` of standard real-rooted
/// polynomials: part I places `g` below `G`, part II places `G` below `f`.
pub fn check_lemma_gfg(
    f: &Poly,
    g: &Poly,
    c: &Poly,
    d: &Poly,
    part: LemmaPart,
    strictness: Strictness,
) -> CheckReport {
    let big_g = &(c * f) + &(d * g);
    let mut rep = CheckReport::new();
    rep.constructed("G", big_g.to_text("x"));

    standard_clause(&mut rep, "f standard", f);
    standard_clause(&mut rep, "g standard", g);
    standard_clause(&mut rep, "G standard", &big_g);
    real_rooted_clause(&mut rep, Kind::Hypothesis, "f real-rooted", f);
    real_rooted_clause(&mut rep, Kind::Hypothesis, "g real-rooted", g);
    let (rel_gf, w) = relation_clause(g, f);
    match strictness {
        Strictness::Strict => rep.hypothesis("g prec f", rel_gf.holds_strict(), w),
        Strictness::Weak => rep.hypothesis("g preceq f", rel_gf.holds_weak(), w),
    }

    let (sign_req, label) = match strictness {
        Strictness::Strict => (SignReq::Positive, "> 0"),
        Strictness::Weak => (SignReq::NonNegative, ">= 0"),
    };
    match part {
        LemmaPart::I => {
            rep.hypothesis(
                "(i) deg G <= deg g + 1",
                degree_at_most(&big_g, g, 1),
                format!(
                    "deg G = {}, deg g = {}",
                    fmt_deg(big_g.degree()),
                    fmt_deg(g.degree())
                ),
            );
            let (ok, w) = at_all_roots(c, g, sign_req);
            rep.hypothesis(format!("(i) c {label} at every root of g"), ok, w);
        }
        LemmaPart::II => {
            rep.hypothesis(
                "(ii) deg G <= deg f",
                degree_at_most(&big_g, f, 0),
                format!(
                    "deg G = {}, deg f = {}",
                    fmt_deg(big_g.degree()),
                    fmt_deg(f.degree())
                ),
            );
            let (ok, w) = at_all_roots(d, f, sign_req);
            rep.hypothesis(format!("(ii) d {label} at every root of f"), ok, w);
        }
    }

    real_rooted_clause(&mut rep, Kind::Conclusion, "G real-rooted", &big_g);
    match part {
        LemmaPart::I => {
            let (rel, w) = relation_clause(g, &big_g);
            match strictness {
                Strictness::Strict => rep.conclusion("g prec G", rel.holds_strict(), w),
                Strictness::Weak => rep.conclusion("g preceq G", rel.holds_weak(), w),
            }
        }
        LemmaPart::II => {
            let (rel, w) = relation_clause(&big_g, f);
            match strictness {
                Strictness::Strict => rep.conclusion("G prec f", rel.holds_strict(), w),
                Strictness::Weak => rep.conclusion("G preceq f", rel.holds_weak(), w),
            }
        }
    }
    rep
}

fn is_positive_constant(p: &Poly) -> bool {
    p.degree() == Some(0) && p.leading_coeff().is_some_and(|c| c.is_positive())
}

/// Certifies the paired-combination criterion for `F = a·f + b·g` and
/// `G = c·f + d·g`: with all four of `f, g, F, G` standard,
/// `deg F ∈ {deg G, deg G+1}`, `g ⪯ f` real-rooted,
/// `Δ = a·d − b·c ≥ 0` at every root of `G`, and a positive-constant
/// branch (`c` constant with `deg G ≤ deg g+1`, or `d` constant with
/// `deg G ≤ deg f`), both combinations are real-rooted with `G ⪯ F`;
/// strict when `g ≺ f` and `Δ > 0` at the roots of `G`.
pub fn check_thm_fgfg(f: &Poly, g: &Poly, a: &Poly, b: &Poly, c: &Poly, d: &Poly) -> CheckReport {
    let big_f = &(a * f) + &(b * g);
    let big_g = &(c * f) + &(d * g);
    let delta = &(a * d) - &(b * c);
    let mut rep = CheckReport::new();
    rep.constructed("F", big_f.to_text("x"));
    rep.constructed("G", big_g.to_text("x"));
    rep.constructed("Delta", delta.to_text("x"));

    standard_clause(&mut rep, "f standard", f);
    standard_clause(&mut rep, "g standard", g);
    standard_clause(&mut rep, "F standard", &big_f);
    standard_clause(&mut rep, "G standard", &big_g);
    rep.hypothesis(
        "(a) deg F in {deg G, deg G+1}",
        degree_step_ok(&big_f, &big_g),
        format!(
            "deg F = {}, deg G = {}",
            fmt_deg(big_f.degree()),
            fmt_deg(big_g.degree())
        ),
    );
    real_rooted_clause(&mut rep, Kind::Hypothesis, "(b) f real-rooted", f);
    real_rooted_clause(&mut rep, Kind::Hypothesis, "(b) g real-rooted", g);
    let (rel_gf, w) = relation_clause(g, f);
    rep.hypothesis("(b) g preceq f", rel_gf.holds_weak(), w);
    let (delta_ok, delta_w) = at_all_roots(&delta, &big_g, SignReq::NonNegative);
    rep.hypothesis("(c) Delta >= 0 at every root of G", delta_ok, delta_w);
    let c_branch = is_positive_constant(c) && degree_at_most(&big_g, g, 1);
    let d_branch = is_positive_constant(d) && degree_at_most(&big_g, f, 0);
    rep.hypothesis(
        "(d) c positive constant with deg G <= deg g+1, or d positive constant with deg G <= deg f",
        c_branch || d_branch,
        format!(
            "c branch: {}, d branch: {} (c = {}, d = {}, deg G = {})",
            c_branch,
            d_branch,
            c.to_text("x"),
            d.to_text("x"),
            fmt_deg(big_g.degree()),
        ),
    );

    real_rooted_clause(&mut rep, Kind::Conclusion, "F real-rooted", &big_f);
    real_rooted_clause(&mut rep, Kind::Conclusion, "G real-rooted", &big_g);
    let (rel_fg, w) = relation_clause(&big_g, &big_f);
    rep.conclusion("G preceq F", rel_fg.holds_weak(), w.clone());

    let (delta_strict, _) = at_all_roots(&delta, &big_g, SignReq::Positive);
    if rel_gf.holds_strict() && delta_strict {
        rep.conclusion("G prec F (strict clause)", rel_fg.holds_strict(), w);
    } else {
        rep.note("strict clause not applicable: needs g prec f and Delta > 0 at every root of G");
    }
    rep
}

/// Specialization of [`check_thm_fgfg`] to constant `c, d`: for
/// `F = a·f + b·g`, `G = c·f + d·g` standard with `deg F ∈ {deg G, deg G+1}`,
/// `g ⪯ f` real-rooted, and `d·a(x) ≥ c·b(x)` at every root of `G`, both
/// are real-rooted with `G ⪯ F`; strict when `g ≺ f` and the inequality is
/// strict at the roots.
pub fn check_cor_cfdg(f: &Poly, g: &Poly, a: &Poly, b: &Poly, c: &Rat, d: &Rat) -> CheckReport {
    let big_f = &(a * f) + &(b * g);
    let big_g = &f.scale(c) + &g.scale(d);
    let spread = &a.scale(d) - &b.scale(c);
    let mut rep = CheckReport::new();
    rep.constructed("F", big_f.to_text("x"));
    rep.constructed("G", big_g.to_text("x"));

    standard_clause(&mut rep, "f standard", f);
    standard_clause(&mut rep, "g standard", g);
    standard_clause(&mut rep, "F standard", &big_f);
    standard_clause(&mut rep, "G standard", &big_g);
    rep.hypothesis(
        "(a) deg F in {deg G, deg G+1}",
        degree_step_ok(&big_f, &big_g),
        format!(
            "deg F = {}, deg G = {}",
            fmt_deg(big_f.degree()),
            fmt_deg(big_g.degree())
        ),
    );
    real_rooted_clause(&mut rep, Kind::Hypothesis, "(b) f real-rooted", f);
    real_rooted_clause(&mut rep, Kind::Hypothesis, "(b) g real-rooted", g);
    let (rel_gf, w) = relation_clause(g, f);
    rep.hypothesis("(b) g preceq f", rel_gf.holds_weak(), w);
    let (ok, sw) = at_all_roots(&spread, &big_g, SignReq::NonNegative);
    rep.hypothesis("(c) d*a >= c*b at every root of G", ok, sw);

    real_rooted_clause(&mut rep, Kind::Conclusion, "F real-rooted", &big_f);
    real_rooted_clause(&mut rep, Kind::Conclusion, "G real-rooted", &big_g);
    let (rel_fg, w) = relation_clause(&big_g, &big_f);
    rep.conclusion("G preceq F", rel_fg.holds_weak(), w.clone());

    let (strict_ok, _) = at_all_roots(&spread, &big_g, SignReq::Positive);
    if rel_gf.holds_strict() && strict_ok {
        rep.conclusion("G prec F (strict clause)", rel_fg.holds_strict(), w);
    } else {
        rep.note("strict clause not applicable: needs g prec f and d*a > c*b at every root of G");
    }
    rep
}

/// Certifies the constant-coefficient mixture criterion: for real-rooted
/// `f, g` with same-sign leading coefficients and `g ⪯ f`, and rationals
/// with `a·d ≤ b·c`, the combination `F = (a·x+b)·f + (c·x+d)·g` is
/// real-rooted; moreover `G = a·f + c·g` is real-rooted with `G ⪯ F`.
pub fn check_thm_wy(f: &Poly, g: &Poly, a: &Rat, b: &Rat, c: &Rat, d: &Rat) -> CheckReport {
    let row_f = Poly::new(vec![b.clone(), a.clone()]);
    let row_g = Poly::new(vec![d.clone(), c.clone()]);
    let big_f = &(&row_f * f) + &(&row_g * g);
    let big_g = &f.scale(a) + &g.scale(c);
    let mut rep = CheckReport::new();
    rep.constructed("F", big_f.to_text("x"));
    rep.constructed("G", big_g.to_text("x"));

    let (lead_ok, lead_w) = leading_signs_match(f, g);
    rep.hypothesis("f and g leading signs agree", lead_ok, lead_w);
    real_rooted_clause(&mut rep, Kind::Hypothesis, "f real-rooted", f);
    real_rooted_clause(&mut rep, Kind::Hypothesis, "g real-rooted", g);
    let (rel_gf, w) = relation_clause(g, f);
    rep.hypothesis("g preceq f", rel_gf.holds_weak(), w);
    rep.hypothesis(
        "a*d <= b*c",
        a * d <= b * c,
        format!("a*d = {}, b*c = {}", a * d, b * c),
    );

    real_rooted_clause(&mut rep, Kind::Conclusion, "F real-rooted", &big_f);
    real_rooted_clause(&mut rep, Kind::Conclusion, "G real-rooted", &big_g);
    let (rel, w) = relation_clause(&big_g, &big_f);
    rep.conclusion("G preceq F", rel.holds_weak(), w);
    rep
}

fn nonnegative_coeffs(p: &Poly) -> (bool, String) {
    match p.coeffs().iter().position(|c| c.is_negative()) {
        None => (true, "all coefficients nonnegative".to_string()),
        Some(k) => (false, format!("coefficient of x^{k} is negative")),
    }
}

/// Certifies the totally-positive variant: for `f, g` real-rooted with
/// nonnegative coefficients, `g` interlacing `f` (degree gap one), and
/// rationals with `a·d ≥ b·c`, the combination
/// `F = (a·x+b)·f + x·(c·x+d)·g` is real-rooted.
pub fn check_cor_wy_pf(f: &Poly, g: &Poly, a: &Rat, b: &Rat, c: &Rat, d: &Rat) -> CheckReport {
    let row_f = Poly::new(vec![b.clone(), a.clone()]);
    let swing = Poly::new(vec![Rat::zero(), d.clone(), c.clone()]);
    let big_f = &(&row_f * f) + &(&swing * g);
    let mut rep = CheckReport::new();
    rep.constructed("F", big_f.to_text("x"));

    real_rooted_clause(&mut rep, Kind::Hypothesis, "f real-rooted", f);
    real_rooted_clause(&mut rep, Kind::Hypothesis, "g real-rooted", g);
    let (fc, fw) = nonnegative_coeffs(f);
    rep.hypothesis("f has nonnegative coefficients", fc, fw);
    let (gc, gw) = nonnegative_coeffs(g);
    rep.hypothesis("g has nonnegative coefficients", gc, gw);
    let (rel, w) = relation_clause(g, f);
    rep.hypothesis("g interlaces f", rel.is_interlacing(), w);
    rep.hypothesis(
        "a*d >= b*c",
        a * d >= b * c,
        format!("a*d = {}, b*c = {}", a * d, b * c),
    );

    real_rooted_clause(&mut rep, Kind::Conclusion, "F real-rooted", &big_f);
    rep
}

/// Certifies the one-sided positive-leading criterion for
/// `F = (a·x+b)·f + x·(x+d)·g`: with `f, g` real-rooted, positive leading
/// coefficients `α, β`, `g` interlacing `f`, `d ≥ 0`, `d ≥ b/a`, and either
/// `a > 0` with the roots of `f` nonpositive or `a < −β/α` with the roots
/// nonnegative, `F` is real-rooted; when every root of `f` lies in
/// `[−d, 0]`, `f` interlaces `F`.
pub fn check_cor_haglund(f: &Poly, g: &Poly, a: &Rat, b: &Rat, d: &Rat) -> CheckReport {
    let row_f = Poly::new(vec![b.clone(), a.clone()]);
    let swing = Poly::new(vec![Rat::zero(), d.clone(), Rat::one()]);
    let big_f = &(&row_f * f) + &(&swing * g);
    let mut rep = CheckReport::new();
    rep.constructed("F", big_f.to_text("x"));

    let leads = match (f.leading_coeff(), g.leading_coeff()) {
        (Some(alpha), Some(beta)) if alpha.is_positive() && beta.is_positive() => {
            Some((alpha.clone(), beta.clone()))
        }
        _ => None,
    };
    rep.hypothesis(
        "f and g have positive leading coefficients",
        leads.is_some(),
        match (f.leading_coeff(), g.leading_coeff()) {
            (Some(alpha), Some(beta)) => format!("alpha = {alpha}, beta = {beta}"),
            _ => "an operand is the zero polynomial".to_string(),
        },
    );
    real_rooted_clause(&mut rep, Kind::Hypothesis, "(a) f real-rooted", f);
    real_rooted_clause(&mut rep, Kind::Hypothesis, "(a) g real-rooted", g);
    let (rel, w) = relation_clause(g, f);
    rep.hypothesis("(a) g interlaces f", rel.is_interlacing(), w);
    rep.hypothesis("(b) d >= 0", !d.is_negative(), format!("d = {d}"));
    let ratio_ok = !a.is_zero() && *d >= b / a;
    rep.hypothesis(
        "(b) d >= b/a",
        ratio_ok,
        if a.is_zero() {
            "a = 0: ratio b/a undefined".to_string()
        } else {
            format!("b/a = {}", b / a)
        },
    );
    let lower_branch = a.is_positive();
    let upper_branch = leads
        .as_ref()
        .is_some_and(|(alpha, beta)| *a < -(beta / alpha));
    rep.hypothesis(
        "(b) a > 0 or a < -beta/alpha",
        lower_branch || upper_branch,
        match &leads {
            Some((alpha, beta)) => format!("a = {a}, -beta/alpha = {}", -(beta / alpha)),
            None => format!("a = {a}, leading ratio unavailable"),
        },
    );
    let (loc_ok, loc_w) = if lower_branch {
        let (ok, w) = roots_within(f, None, Some(&Rat::zero()));
        (ok, format!("branch a > 0 (roots must be <= 0): {w}"))
    } else if upper_branch {
        let (ok, w) = roots_within(f, Some(&Rat::zero()), None);
        (
            ok,
            format!("branch a < -beta/alpha (roots must be >= 0): {w}"),
        )
    } else {
        (false, "neither branch of (b) applies".to_string())
    };
    rep.hypothesis("(c) roots of f on the branch side of 0", loc_ok, loc_w);

    real_rooted_clause(&mut rep, Kind::Conclusion, "F real-rooted", &big_f);

    let (inside, _) = roots_within(f, Some(&-d), Some(&Rat::zero()));
    if inside {
        let (rel_ff, w) = relation_clause(f, &big_f);
        rep.conclusion("f interlaces F (addendum)", rel_ff.is_interlacing(), w);
    } else {
        rep.note("interlacing addendum not applicable: needs every root of f in [-d, 0]");
    }
    rep
}

// ---------------------------------------------------------------------------
// Randomized soundness harness
// ---------------------------------------------------------------------------

/// Outcome of one certifier's randomized sweep.
#[derive(Debug, Clone)]
pub struct HarnessOutcome {
    pub certifier: &'static str,
    pub instances: usize,
    /// Instances whose hypothesis clauses all passed.
    pub supported: usize,
    /// Hypotheses-pass/conclusion-fail events (must be zero).
    pub violations: usize,
    /// Report summary of the lowest-index violation, if any.
    pub first_violation: Option<String>,
}

/// Fixed default seed so harness runs are reproducible.
pub const DEFAULT_HARNESS_SEED: u64 = 20260814;

/// Harness seed: the `STURM_SEED` environment variable when set to an
/// integer, else [`DEFAULT_HARNESS_SEED`].
pub fn harness_seed() -> u64 {
    std::env::var("STURM_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_HARNESS_SEED)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Cert {
    Ffg,
    Ffgk,
    Gfg,
    Fgfg,
    Cfdg,
    Wy,
    Haglund,
}

const HARNESS_CERTIFIERS: [(&str, Cert); 7] = [
    ("check_thm_ffg", Cert::Ffg),
    ("check_thm_ffgk", Cert::Ffgk),
    ("check_lemma_gfg", Cert::Gfg),
    ("check_thm_fgfg", Cert::Fgfg),
    ("check_cor_cfdg", Cert::Cfdg),
    ("check_thm_wy", Cert::Wy),
    ("check_cor_haglund", Cert::Haglund),
];

/// Independent per-instance stream: SplitMix64-style mixing of the base
/// seed with the certifier and instance indices.
fn instance_rng(seed: u64, cert: u64, instance: u64) -> ChaCha8Rng {
    let mut z = seed
        ^ cert.wrapping_mul(0x9E37_79B9_7F4A_7C15)
        ^ instance.wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    ChaCha8Rng::seed_from_u64(z ^ (z >> 31))
}

fn small_rat(rng: &mut ChaCha8Rng) -> Rat {
    Rat::new(
        BigInt::from(rng.gen_range(-12i64..=12)),
        BigInt::from(rng.gen_range(1i64..=4)),
    )
}

fn positive_rat(rng: &mut ChaCha8Rng) -> Rat {
    Rat::new(
        BigInt::from(rng.gen_range(1i64..=6)),
        BigInt::from(rng.gen_range(1i64..=3)),
    )
}

fn poly_from_roots(lead: Rat, roots: &[Rat]) -> Poly {
    let mut p = Poly::constant(lead);
    for r in roots {
        p = &p * &Poly::new(vec![-r, Rat::one()]);
    }
    p
}

/// Distinct rationals drawn from a small grid, descending.
fn descending_values(rng: &mut ChaCha8Rng, count: usize, max_num: i64) -> Vec<Rat> {
    let mut vals = BTreeSet::new();
    while vals.len() < count {
        vals.insert(Rat::new(
            BigInt::from(rng.gen_range(-max_num..=max_num)),
            BigInt::from(rng.gen_range(1i64..=3)),
        ));
    }
    vals.into_iter().rev().collect()
}

/// Random standard pair with `g ⪯ f` by construction: roots woven in
/// descending order, with an occasional shared root to exercise the weak
/// cases. `force_interlacing` pins the degree gap to one;
/// `nonpositive_roots` draws every root from `x ≤ 0`.
fn random_related_pair(
    rng: &mut ChaCha8Rng,
    force_interlacing: bool,
    nonpositive_roots: bool,
) -> (Poly, Poly) {
    let n = rng.gen_range(1..=3usize);
    let interlacing = force_interlacing || rng.gen_bool(0.5);
    let count = if interlacing { 2 * n - 1 } else { 2 * n };
    let values = if nonpositive_roots {
        let mut vals = BTreeSet::new();
        while vals.len() < count {
            vals.insert(Rat::new(
                BigInt::from(rng.gen_range(-12i64..=0)),
                BigInt::from(rng.gen_range(1i64..=3)),
            ));
        }
        vals.into_iter().rev().collect::<Vec<_>>()
    } else {
        descending_values(rng, count, 12)
    };
    let mut f_roots = Vec::new();
    let mut g_roots = Vec::new();
    for (i, v) in values.into_iter().enumerate() {
        if i % 2 == 0 {
            f_roots.push(v);
        } else {
            g_roots.push(v);
        }
    }
    if !g_roots.is_empty() && rng.gen_bool(0.2) {
        let k = rng.gen_range(0..g_roots.len());
        g_roots[k] = f_roots[k].clone();
    }
    (
        poly_from_roots(positive_rat(rng), &f_roots),
        poly_from_roots(positive_rat(rng), &g_roots),
    )
}

fn random_coeff_poly(rng: &mut ChaCha8Rng, max_deg: usize) -> Poly {
    let deg = rng.gen_range(0..=max_deg);
    Poly::new(
        (0..=deg)
            .map(|_| Rat::new(BigInt::from(rng.gen_range(-3i64..=3)), BigInt::from(1)))
            .collect(),
    )
}

/// A polynomial that is ≤ 0 on the whole line: a negative constant, a
/// negated square of a linear form, or zero.
fn nonpositive_everywhere(rng: &mut ChaCha8Rng) -> Poly {
    match rng.gen_range(0..3) {
        0 => Poly::constant(-positive_rat(rng)),
        1 => {
            let l = Poly::new(vec![small_rat(rng), small_rat(rng)]);
            -&(&l * &l)
        }
        _ => Poly::zero(),
    }
}

fn run_instance(cert: Cert, rng: &mut ChaCha8Rng) -> CheckReport {
    match cert {
        Cert::Ffg => {
            let (f, g) = random_related_pair(rng, false, false);
            let a = if rng.gen_bool(0.8) {
                Poly::new(vec![small_rat(rng), positive_rat(rng)])
            } else {
                random_coeff_poly(rng, 1)
            };
            let b = if rng.gen_bool(0.6) {
                nonpositive_everywhere(rng)
            } else {
                random_coeff_poly(rng, 2)
            };
            check_thm_ffg(&f, &g, &a, &b)
        }
        Cert::Ffgk => {
            let (f, g0) = random_related_pair(rng, false, false);
            let k = rng.gen_range(1..=3usize);
            let gs: Vec<Poly> = (0..k)
                .map(|_| match rng.gen_range(0..3) {
                    0 => g0.clone(),
                    1 => f.derivative(),
                    _ => g0.scale(&positive_rat(rng)),
                })
                .collect();
            let bs: Vec<Poly> = (0..k)
                .map(|_| {
                    if rng.gen_bool(0.7) {
                        nonpositive_everywhere(rng)
                    } else {
                        random_coeff_poly(rng, 2)
                    }
                })
                .collect();
            let a = Poly::new(vec![small_rat(rng), positive_rat(rng)]);
            check_thm_ffgk(&f, &gs, &a, &bs).expect("lengths match by construction")
        }
        Cert::Gfg => {
            let (f, g) = random_related_pair(rng, false, false);
            let part = if rng.gen_bool(0.5) {
                LemmaPart::I
            } else {
                LemmaPart::II
            };
            let strictness = if rng.gen_bool(0.5) {
                Strictness::Strict
            } else {
                Strictness::Weak
            };
            let c = if rng.gen_bool(0.6) {
                Poly::constant(positive_rat(rng))
            } else {
                random_coeff_poly(rng, 1)
            };
            let d = if rng.gen_bool(0.6) {
                Poly::constant(positive_rat(rng))
            } else {
                random_coeff_poly(rng, 1)
            };
            check_lemma_gfg(&f, &g, &c, &d, part, strictness)
        }
        Cert::Fgfg => {
            let (f, g) = random_related_pair(rng, false, false);
            let a = random_coeff_poly(rng, 1);
            let b = random_coeff_poly(rng, 1);
            let (c, d) = if rng.gen_bool(0.5) {
                (Poly::constant(positive_rat(rng)), random_coeff_poly(rng, 1))
            } else {
                (random_coeff_poly(rng, 1), Poly::constant(positive_rat(rng)))
            };
            check_thm_fgfg(&f, &g, &a, &b, &c, &d)
        }
        Cert::Cfdg => {
            let (f, g) = random_related_pair(rng, false, false);
            let a = random_coeff_poly(rng, 1);
            let b = random_coeff_poly(rng, 1);
            let c = if rng.gen_bool(0.8) {
                positive_rat(rng)
            } else {
                small_rat(rng)
            };
            let d = if rng.gen_bool(0.8) {
                positive_rat(rng)
            } else {
                small_rat(rng)
            };
            check_cor_cfdg(&f, &g, &a, &b, &c, &d)
        }
        Cert::Wy => {
            let (f, g) = random_related_pair(rng, false, false);
            let mut a = small_rat(rng);
            let mut b = small_rat(rng);
            let c = small_rat(rng);
            let d = small_rat(rng);
            if rng.gen_bool(0.7) {
                for _ in 0..20 {
                    if &a * &d <= &b * &c {
                        break;
                    }
                    a = small_rat(rng);
                    b = small_rat(rng);
                }
            }
            check_thm_wy(&f, &g, &a, &b, &c, &d)
        }
        Cert::Haglund => {
            let (f, g) = random_related_pair(rng, true, true);
            let a = if rng.gen_bool(0.85) {
                positive_rat(rng)
            } else {
                -positive_rat(rng)
            };
            let d = if rng.gen_bool(0.8) {
                positive_rat(rng)
            } else {
                Rat::zero()
            };
            let b = if a.is_positive() {
                &(&a * &d) - &Rat::new(BigInt::from(rng.gen_range(0i64..=4)), BigInt::from(2))
            } else {
                small_rat(rng)
            };
            check_cor_haglund(&f, &g, &a, &b, &d)
        }
    }
}

/// Per-worker tally: supported count, violation count, lowest violation.
type WorkerTally = (usize, usize, Option<(usize, String)>);

/// Runs every harness certifier over `instances` generated inputs each,
/// in parallel, with per-instance seeds derived from `seed`. Outcomes are
/// deterministic for a fixed seed regardless of thread count.
pub fn run_soundness_harness(instances: usize, seed: u64) -> Vec<HarnessOutcome> {
    HARNESS_CERTIFIERS
        .iter()
        .enumerate()
        .map(|(ci, &(name, cert))| {
            let threads = std::thread::available_parallelism()
                .map_or(1, |n| n.get())
                .min(8);
            let chunk = instances.div_ceil(threads.max(1));
            let mut supported = 0usize;
            let mut violations = 0usize;
            let mut first: Option<(usize, String)> = None;
            let results: Vec<WorkerTally> = std::thread::scope(|scope| {
                let handles: Vec<_> = (0..instances)
                    .step_by(chunk.max(1))
                    .map(|start| {
                        let end = (start + chunk).min(instances);
                        scope.spawn(move || {
                            let mut sup = 0;
                            let mut vio = 0;
                            let mut first_local: Option<(usize, String)> = None;
                            for i in start..end {
                                let mut rng = instance_rng(seed, ci as u64, i as u64);
                                let report = run_instance(cert, &mut rng);
                                if report.hypotheses_pass() {
                                    sup += 1;
                                }
                                if report.is_violation() {
                                    vio += 1;
                                    if first_local.is_none() {
                                        first_local = Some((
                                            i,
                                            format!("instance {i}:\n{}", report.summary()),
                                        ));
                                    }
                                }
                            }
                            (sup, vio, first_local)
                        })
                    })
                    .collect();
                handles
                    .into_iter()
                    .map(|h| h.join().expect("harness worker"))
                    .collect()
            });
            for (sup, vio, first_local) in results {
                supported += sup;
                violations += vio;
                if let Some((i, s)) = first_local {
                    if first.as_ref().is_none_or(|(j, _)| i < *j) {
                        first = Some((i, s));
                    }
                }
            }
            HarnessOutcome {
                certifier: name,
                instances,
                supported,
                violations,
                first_violation: first.map(|(_, s)| s),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::interlace::preceq;

    fn p(text: &str) -> Poly {
        Poly::parse(text).unwrap()
    }

    fn clause<'r>(clauses: &'r [crate::report::Clause], name: &str) -> &'r crate::report::Clause {
        clauses
            .iter()
            .find(|c| c.name == name)
            .unwrap_or_else(|| panic!("clause {name} missing"))
    }

    #[test]
    fn ffg_strict_example() {
        let rep = check_thm_ffg(&p("x^2-1"), &p("x"), &p("x"), &p("-1"));
        assert_eq!(rep.constructed[0].1, p("x^3-2*x").to_text("x"));
        assert!(rep.all_pass(), "{}", rep.summary());
        assert!(clause(&rep.conclusions, "f prec F (strict clause)").pass);
    }

    #[test]
    fn ffg_weak_boundary_example() {
        // b(0) = 0 at the root of f: only the weak clause applies.
        let rep = check_thm_ffg(&p("x"), &p("1"), &p("2*x"), &p("-x^2"));
        assert_eq!(rep.constructed[0].1, p("x^2").to_text("x"));
        assert!(rep.all_pass(), "{}", rep.summary());
        assert!(!rep.conclusions.iter().any(|c| c.name.contains("strict")));
        assert!(rep
            .notes
            .iter()
            .any(|n| n.contains("strict clause not applicable")));
    }

    #[test]
    fn ffg_positive_b_fails_hypothesis_with_root_witness() {
        let rep = check_thm_ffg(&p("x^2-1"), &p("x"), &p("0"), &p("1"));
        let cl = clause(&rep.hypotheses, "(d) b <= 0 at every root of f");
        assert!(!cl.pass);
        assert!(cl.witness.contains("positive"), "witness: {}", cl.witness);
        assert!(!rep.hypotheses_pass());
        assert!(rep.supported(), "failed hypotheses make no claim");
    }

    #[test]
    fn ffgk_matching_step_for_three_vertex_path() {
        let rep =
            check_thm_ffgk(&p("x^2"), &[p("x"), p("x")], &p("x"), &[p("-1"), p("-1")]).unwrap();
        assert_eq!(rep.constructed[0].1, p("x^3-2*x").to_text("x"));
        assert!(rep.all_pass(), "{}", rep.summary());
    }

    #[test]
    fn ffgk_with_single_summand_matches_ffg() {
        let (f, g, a, b) = (p("x^2-1"), p("x"), p("x"), p("-1"));
        let many =
            check_thm_ffgk(&f, std::slice::from_ref(&g), &a, std::slice::from_ref(&b)).unwrap();
        let one = check_thm_ffg(&f, &g, &a, &b);
        assert_eq!(many.constructed[0].1, one.constructed[0].1);
        assert_eq!(many.hypotheses_pass(), one.hypotheses_pass());
        assert_eq!(many.conclusions_pass(), one.conclusions_pass());
        assert_eq!(many.conclusions.len(), one.conclusions.len());
    }

    #[test]
    fn ffgk_positive_b_entry_fails() {
        let rep =
            check_thm_ffgk(&p("x^2-1"), &[p("x"), p("x")], &p("x"), &[p("-1"), p("1")]).unwrap();
        assert!(!clause(&rep.hypotheses, "(d) b[1] <= 0 at every root of f").pass);
        assert!(!rep.hypotheses_pass());
    }

    #[test]
    fn ffgk_length_mismatch_errors() {
        assert!(matches!(
            check_thm_ffgk(&p("x"), &[p("1")], &p("x"), &[]),
            Err(Error::LengthMismatch {
                expected: 1,
                got: 0
            })
        ));
        assert!(matches!(
            check_thm_ffgk(&p("x"), &[], &p("x"), &[]),
            Err(Error::ParameterDomain(_))
        ));
    }

    #[test]
    fn ppp_stirling_sequence_is_generalized_sturm() {
        let rep = check_cor_ppp(&Recurrence::stirling(), 10, SignMode::Nonnegative).unwrap();
        assert!(rep.all_pass(), "{}", rep.summary());
        assert!(clause(&rep.conclusions, "generalized Sturm sequence").pass);
    }

    #[test]
    fn ppp_eulerian_sequence_is_generalized_sturm() {
        let rep = check_cor_ppp(&Recurrence::eulerian(), 10, SignMode::Nonnegative).unwrap();
        assert!(rep.all_pass(), "{}", rep.summary());
    }

    #[test]
    fn ppp_derangement_sequence_is_generalized_sturm() {
        let rep = check_cor_ppp(&Recurrence::derangement(), 10, SignMode::Nonnegative).unwrap();
        assert!(rep.all_pass(), "{}", rep.summary());
        assert!(rep
            .notes
            .iter()
            .any(|n| n.contains("second-order coefficient")));
    }

    #[test]
    fn ppp_generators_match_family_closed_forms() {
        let s = Recurrence::stirling().generate(8);
        let a = Recurrence::eulerian().generate(8);
        let d = Recurrence::derangement().generate(8);
        for n in 0..=8 {
            assert_eq!(s[n], families::stirling2_poly(n), "stirling n={n}");
            assert_eq!(a[n], families::eulerian_poly(n), "eulerian n={n}");
            assert_eq!(d[n], families::derangement_poly(n), "derangement n={n}");
        }
    }

    #[test]
    fn ppp_eulerian_total_mass_is_factorial() {
        let seq = Recurrence::eulerian().generate(8);
        let mut factorial = Rat::from_integer(BigInt::from(1));
        for (n, a_n) in seq.iter().enumerate() {
            if n > 0 {
                factorial *= Rat::from_integer(BigInt::from(n as i64));
            }
            assert_eq!(
                a_n.eval(&Rat::from_integer(BigInt::from(1))),
                factorial,
                "n = {n}"
            );
        }
    }

    #[test]
    fn ppp_degree_clause_violation_errors() {
        // P₂ = P₀ drops the degree from 1 back to 0 between nonzero entries.
        let rec = Recurrence::new("collapse", vec![Poly::one(), Poly::x()], |_| {
            (Poly::zero(), Poly::zero(), Poly::one())
        });
        assert!(matches!(
            check_cor_ppp(&rec, 3, SignMode::Nonnegative),
            Err(Error::Shape(_))
        ));
    }

    #[test]
    fn gfg_part_one_strict_example() {
        let rep = check_lemma_gfg(
            &p("x^2-1"),
            &p("x"),
            &p("1"),
            &p("1"),
            LemmaPart::I,
            Strictness::Strict,
        );
        assert_eq!(rep.constructed[0].1, p("x^2+x-1").to_text("x"));
        assert!(rep.all_pass(), "{}", rep.summary());
        assert!(clause(&rep.conclusions, "g prec G").pass);
    }

    #[test]
    fn gfg_part_two_strict_example() {
        let rep = check_lemma_gfg(
            &p("x^2-1"),
            &p("x"),
            &p("1"),
            &p("1"),
            LemmaPart::II,
            Strictness::Strict,
        );
        assert!(rep.all_pass(), "{}", rep.summary());
        assert!(clause(&rep.conclusions, "G prec f").pass);
    }

    #[test]
    fn gfg_negative_c_fails_hypothesis() {
        let rep = check_lemma_gfg(
            &p("x^2-1"),
            &p("x"),
            &p("-1"),
            &p("1"),
            LemmaPart::I,
            Strictness::Strict,
        );
        assert!(!clause(&rep.hypotheses, "(i) c > 0 at every root of g").pass);
        assert!(!rep.hypotheses_pass());
    }

    #[test]
    fn fgfg_negative_delta_at_roots_is_flagged() {
        let rep = check_thm_fgfg(&p("x^2-1"), &p("x"), &p("x"), &p("1"), &p("1"), &p("x"));
        assert_eq!(rep.constructed[1].1, p("2*x^2-1").to_text("x"));
        assert_eq!(rep.constructed[2].1, p("x^2-1").to_text("x"));
        let cl = clause(&rep.hypotheses, "(c) Delta >= 0 at every root of G");
        assert!(!cl.pass);
        assert!(cl.witness.contains("negative"), "witness: {}", cl.witness);
    }

    #[test]
    fn fgfg_mixed_delta_signs_flagged() {
        let rep = check_thm_fgfg(&p("x^2-4"), &p("x"), &p("x"), &p("-1"), &p("1"), &p("1"));
        assert_eq!(rep.constructed[1].1, p("x^2+x-4").to_text("x"));
        assert!(!clause(&rep.hypotheses, "(c) Delta >= 0 at every root of G").pass);
        // The constructed G is still real-rooted; only the hypothesis fails.
        assert!(clause(&rep.conclusions, "G real-rooted").pass);
    }

    #[test]
    fn fgfg_equal_combination_passes_weakly() {
        let rep = check_thm_fgfg(&p("x^2"), &p("x"), &p("1"), &p("0"), &p("1"), &p("0"));
        assert!(rep.all_pass(), "{}", rep.summary());
        assert!(!rep.conclusions.iter().any(|c| c.name.contains("strict")));
    }

    #[test]
    fn cfdg_constant_mixture_passes() {
        let rep = check_cor_cfdg(&p("x^2-1"), &p("x"), &p("3"), &p("1"), &rat(1), &rat(2));
        assert!(rep.all_pass(), "{}", rep.summary());
    }

    #[test]
    fn cfdg_identical_rows_pass_weakly() {
        let rep = check_cor_cfdg(&p("x^2-1"), &p("x"), &p("1"), &p("2"), &rat(1), &rat(2));
        assert_eq!(rep.constructed[0].1, rep.constructed[1].1);
        assert!(rep.all_pass(), "{}", rep.summary());
        assert!(!rep.conclusions.iter().any(|c| c.name.contains("strict")));
    }

    #[test]
    fn cfdg_negated_combination_flags_standardness() {
        let rep = check_cor_cfdg(&p("x^2-1"), &p("x"), &p("0"), &p("-1"), &rat(0), &rat(1));
        assert!(!clause(&rep.hypotheses, "F standard").pass);
        assert!(!rep.hypotheses_pass());
    }

    #[test]
    fn wy_linear_row_example() {
        let rep = check_thm_wy(&p("x^2-1"), &p("x"), &rat(1), &rat(0), &rat(0), &rat(-1));
        assert_eq!(rep.constructed[0].1, p("x^3-2*x").to_text("x"));
        assert!(rep.all_pass(), "{}", rep.summary());
    }

    #[test]
    fn wy_plain_sum_example() {
        let rep = check_thm_wy(&p("x^2-1"), &p("x"), &rat(0), &rat(1), &rat(0), &rat(1));
        assert_eq!(rep.constructed[0].1, p("x^2+x-1").to_text("x"));
        assert!(rep.all_pass(), "{}", rep.summary());
    }

    #[test]
    fn wy_pf_variant_example() {
        let rep = check_cor_wy_pf(&p("x+1"), &p("1"), &rat(1), &rat(0), &rat(0), &rat(1));
        assert_eq!(rep.constructed[0].1, p("x^2+2*x").to_text("x"));
        assert!(rep.all_pass(), "{}", rep.summary());
    }

    #[test]
    fn wy_agrees_with_constant_mixture_ordering() {
        // Wherever the constant-mixture ordering applies (all constants
        // nonnegative, a·d ≥ b·c), c·f + d·g ⪯ a·f + b·g must hold and the
        // mixture certifier must stay sound on the transposed instance.
        let mut rng = instance_rng(harness_seed(), 99, 0);
        for _ in 0..25 {
            let (f, g) = random_related_pair(&mut rng, false, false);
            let mut draw = || Rat::new(BigInt::from(rng.gen_range(0i64..=6)), BigInt::from(1));
            let (mut a, mut b, mut c, mut d) = (draw(), draw(), draw(), draw());
            if &a * &d < &b * &c {
                std::mem::swap(&mut a, &mut b);
                std::mem::swap(&mut c, &mut d);
            }
            assert!(&a * &d >= &b * &c);
            let upper = &f.scale(&a) + &g.scale(&b);
            let lower = &f.scale(&c) + &g.scale(&d);
            assert!(
                preceq(&lower, &upper).unwrap(),
                "mixture ordering fails for a={a} b={b} c={c} d={d}, f={f}, g={g}"
            );
            // Same instance through the certifier: b·c ≥ a·d read as the
            // mixture hypothesis with the rows swapped.
            let rep = check_thm_wy(&f, &g, &b, &a, &d, &c);
            assert!(!rep.is_violation(), "{}", rep.summary());
        }
    }

    #[test]
    fn haglund_unit_interval_example() {
        let rep = check_cor_haglund(&p("x+1"), &p("1"), &rat(1), &rat(0), &rat(1));
        assert_eq!(rep.constructed[0].1, p("2*x^2+2*x").to_text("x"));
        assert!(rep.all_pass(), "{}", rep.summary());
        assert!(clause(&rep.conclusions, "f interlaces F (addendum)").pass);
    }

    #[test]
    fn haglund_positive_root_fails_location_clause() {
        let rep = check_cor_haglund(&p("x-1"), &p("1"), &rat(1), &rat(0), &rat(1));
        assert!(!clause(&rep.hypotheses, "(c) roots of f on the branch side of 0").pass);
        assert!(!rep.hypotheses_pass());
    }

    #[test]
    fn haglund_negative_d_fails() {
        let rep = check_cor_haglund(&p("x+1"), &p("1"), &rat(1), &rat(-2), &rat(-1));
        assert!(!clause(&rep.hypotheses, "(b) d >= 0").pass);
    }

    #[test]
    fn soundness_harness_finds_no_violations() {
        let outcomes = run_soundness_harness(60, harness_seed());
        assert_eq!(outcomes.len(), HARNESS_CERTIFIERS.len());
        for o in &outcomes {
            assert_eq!(
                o.violations,
                0,
                "{}: {}",
                o.certifier,
                o.first_violation.as_deref().unwrap_or("")
            );
            assert!(
                o.supported > 0,
                "{} never exercised its hypotheses",
                o.certifier
            );
        }
    }

    #[test]
    fn harness_is_deterministic_for_a_fixed_seed() {
        let a = run_soundness_harness(25, 7);
        let b = run_soundness_harness(25, 7);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.supported, y.supported);
            assert_eq!(x.violations, y.violations);
        }
    }
}
