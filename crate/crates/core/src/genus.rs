//! Polynomial transfer matrices for linear families of graphs.
//!
//! A linear family of graphs (built by repeatedly amalgamating copies of a
//! fixed graph) has genus polynomials generated by a square matrix `M` and
//! a seed vector `v` over `ℤ[x]`: the `k`-th genus polynomial is the first
//! entry of `Mᵏv`. This module provides exact matrix/vector arithmetic over
//! `ℚ[x]`, the *nice matrix* predicate with its exact half-line determinant
//! test, interlacing propagation through nice matrices, real-rootedness
//! sweeps over matrix-power entries, the eight built-in families tabulated
//! by Stahl, and a bounded search that factors a matrix into nice factors.
//!
//! Layout convention for the nice predicate: `M = (a c; b d)` — `a` top
//! left, `c` top right, `b` bottom left, `d` bottom right — so a row vector
//! `(f, g)` maps to `(F, G) = (f, g)M = (af + bg, cf + dg)`. `M` is *nice*
//! when all entries have nonnegative coefficients, `deg a, deg d ≤ 1`,
//! `deg b ≤ 2`, `c` is a positive constant, and `det M = ad − cb ≥ 0` for
//! every `x ≤ 0` (decided by exact root isolation, never by sampling).

use num_traits::{One, Signed, Zero};

use crate::diagnostics;
use crate::error::{Error, Result};
use crate::interlace::compare_zero_orders;
use crate::poly::{frac, rat, Poly, Rat};
use crate::report::{CheckReport, Clause};
use crate::roots::{
    compare_root_with_rational, is_real_rooted, isolate_real_roots, nonnegative_on_half_line,
    refine_root, HalfLine, Interval,
};

/// A rectangular matrix of exact polynomials, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Poly>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Poly>) -> Result<PolyMatrix> {
        if rows == 0 || cols == 0 {
            return Err(Error::Shape(format!("degenerate shape {rows}x{cols}")));
        }
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(PolyMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(rows: Vec<Vec<Poly>>) -> Result<PolyMatrix> {
        let height = rows.len();
        let width = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != width) {
            return Err(Error::Shape("ragged rows".into()));
        }
        PolyMatrix::new(height, width, rows.into_iter().flatten().collect())
    }

    pub fn identity(n: usize) -> PolyMatrix {
        let entries = (0..n * n)
            .map(|i| {
                if i % (n + 1) == 0 {
                    Poly::one()
                } else {
                    Poly::zero()
                }
            })
            .collect();
        PolyMatrix::new(n, n, entries).expect("square shape")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Entry at row `r`, column `c` (panics out of range).
    pub fn entry(&self, r: usize, c: usize) -> &Poly {
        assert!(
            r < self.rows && c < self.cols,
            "index ({r}, {c}) out of range"
        );
        &self.entries[r * self.cols + c]
    }

    pub fn entries(&self) -> &[Poly] {
        &self.entries
    }

    /// Every entry multiplied by the rational `s`.
    pub fn scale(&self, s: &Rat) -> PolyMatrix {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e.scale(s)).collect(),
        }
    }

    /// One-line text rendering, rows separated by `;`.
    pub fn to_text(&self) -> String {
        let rows: Vec<String> = self
            .entries
            .chunks(self.cols)
            .map(|row| {
                row.iter()
                    .map(|e| e.to_text("x"))
                    .collect::<Vec<_>>()
                    .join(", ")
            })
            .collect();
        format!("[{}]", rows.join("; "))
    }

    /// Parses the matrix file format: a dimension line (`n` for square or
    /// `rows cols`), then one polynomial per line, row-major. Blank lines
    /// and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<PolyMatrix> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::Shape("empty matrix file: expected a dimension line".into()))?;
        let dims: Vec<usize> = header
            .split_whitespace()
            .map(|t| {
                t.parse()
                    .map_err(|_| Error::Shape(format!("bad dimension line {header:?}")))
            })
            .collect::<Result<_>>()?;
        let (rows, cols) = match dims[..] {
            [n] => (n, n),
            [r, c] => (r, c),
            _ => return Err(Error::Shape(format!("bad dimension line {header:?}"))),
        };
        let entries: Vec<Poly> = lines
            .map(|l| {
                Poly::parse(l).map_err(|e| Error::Shape(format!("bad entry {l:?}: {}", e.reason)))
            })
            .collect::<Result<_>>()?;
        PolyMatrix::new(rows, cols, entries)
    }
}

/// Exact matrix product.
pub fn mat_mul(a: &PolyMatrix, b: &PolyMatrix) -> Result<PolyMatrix> {
    if a.cols != b.rows {
        return Err(Error::Shape(format!(
            "cannot multiply {}x{} by {}x{}",
            a.rows, a.cols, b.rows, b.cols
        )));
    }
    let entries = (0..a.rows)
        .flat_map(|r| {
            (0..b.cols).map(move |c| {
                (0..a.cols)
                    .map(|k| a.entry(r, k) * b.entry(k, c))
                    .fold(Poly::zero(), |acc, term| &acc + &term)
            })
        })
        .collect();
    PolyMatrix::new(a.rows, b.cols, entries)
}

/// Exact matrix–vector product.
pub fn mat_vec(a: &PolyMatrix, v: &[Poly]) -> Result<Vec<Poly>> {
    if a.cols != v.len() {
        return Err(Error::Shape(format!(
            "cannot apply {}x{} to a vector of length {}",
            a.rows,
            a.cols,
            v.len()
        )));
    }
    Ok((0..a.rows)
        .map(|r| {
            (0..a.cols)
                .map(|c| a.entry(r, c) * &v[c])
                .fold(Poly::zero(), |acc, term| &acc + &term)
        })
        .collect())
}

/// `Mᵏv` by iterating `v ← Mv` — the matrix power is never formed.
pub fn mat_pow_apply(m: &PolyMatrix, k: usize, v: &[Poly]) -> Result<Vec<Poly>> {
    if !m.is_square() {
        return Err(Error::Shape(format!(
            "matrix power needs a square matrix, got {}x{}",
            m.rows, m.cols
        )));
    }
    let mut cur = v.to_vec();
    for _ in 0..k {
        cur = mat_vec(m, &cur)?;
    }
    Ok(cur)
}

fn pp(text: &str) -> Poly {
    Poly::parse(text).expect("fixed literal")
}

/// Transfer matrix and seed vector for the eight built-in linear families
/// tabulated by Stahl: (1) cobblestone paths, (2) ladders, (3) double
/// ladders, (4) diamonds, (5) triple ladders, (6) K₄-linear graphs,
/// (7) W₄-linear graphs, (8) triangular prisms. Scalar prefactors from the
/// printed tables (6 on M₃, 4 on M₄, 2 on v₃ and v₄, 4 on M₇) are
/// multiplied through exactly.
///
/// Known displays of family 5 disagree on the bottom-left entry
/// (`72 + 192x²` in the matrix table vs `72x + 192x²` forced by the
/// factorization `24·(4+12x, 8; 1+12x, 3+8x)·(0, 1; x, 0)`); the factored
/// form is taken as authoritative, so the decomposition reproduces the
/// matrix exactly.
pub fn builtin_family(i: usize) -> Result<(PolyMatrix, Vec<Poly>)> {
    let rows = |entries: [[&str; 2]; 2]| {
        PolyMatrix::from_rows(
            entries
                .iter()
                .map(|row| row.iter().map(|&t| pp(t)).collect())
                .collect(),
        )
        .expect("rectangular literal")
    };
    let pair = match i {
        1 => (rows([["4", "2"], ["6*x", "0"]]), vec![pp("1"), pp("x")]),
        2 => (rows([["0", "4"], ["2*x", "2"]]), vec![pp("1"), pp("1")]),
        3 => (
            rows([["3*x", "3"], ["2*x", "1 + 3*x"]]).scale(&rat(6)),
            vec![pp("2").scale(&rat(2)), pp("1 + x").scale(&rat(2))],
        ),
        4 => (
            rows([["2 + 3*x", "1"], ["4*x", "2*x"]]).scale(&rat(4)),
            vec![pp("1 + x").scale(&rat(2)), pp("2*x").scale(&rat(2))],
        ),
        5 => (
            rows([["192*x", "96 + 288*x"], ["72*x + 192*x^2", "24 + 288*x"]]),
            vec![pp("18 + 18*x"), pp("6 + 30*x")],
        ),
        6 => (
            rows([["8 + 68*x", "4 + 16*x"], ["32*x + 48*x^2", "16*x"]]),
            vec![pp("2 + 14*x"), pp("8*x + 8*x^2")],
        ),
        7 => (
            rows([
                ["2 + 65*x + 54*x^2", "1 + 22*x"],
                ["16*x + 104*x^2", "8*x + 16*x^2"],
            ])
            .scale(&rat(4)),
            vec![pp("2 + 58*x + 36*x^2"), pp("16 + 80*x")],
        ),
        8 => (
            PolyMatrix::from_rows(vec![
                vec![pp("0"), pp("162*x"), pp("54")],
                vec![pp("24*x^2"), pp("72*x"), pp("12 + 108*x")],
                vec![pp("11*x^2"), pp("15*x + 117*x^2"), pp("1 + 72*x")],
            ])
            .expect("rectangular literal"),
            vec![pp("8"), pp("4 + 4*x"), pp("1 + 7*x")],
        ),
        _ => {
            return Err(Error::ParameterDomain(format!(
                "family index must be in 1..=8, got {i}"
            )))
        }
    };
    Ok(pair)
}

/// Verdict of the nice-matrix predicate with per-clause evidence.
///
/// `verdict` is true iff every clause passes; `failure_witness` carries a
/// rational `x ≤ 0` with `det M (x) < 0` when the determinant clause is
/// the one that fails.
#[derive(Debug, Clone)]
pub struct NiceCertificate {
    pub verdict: bool,
    pub clauses: Vec<Clause>,
    pub determinant: Poly,
    pub failure_witness: Option<Rat>,
}

impl NiceCertificate {
    /// Names of the failing clauses (empty iff `verdict`).
    pub fn failing(&self) -> Vec<&str> {
        self.clauses
            .iter()
            .filter(|c| !c.pass)
            .map(|c| c.name.as_str())
            .collect()
    }
}

/// Decides the nice-matrix predicate for a 2×2 matrix `(a c; b d)`:
/// nonnegative coefficients everywhere, `deg a, deg d ≤ 1`, `deg b ≤ 2`,
/// `c` a positive constant, and `det M ≥ 0` on the half-line `x ≤ 0`.
pub fn is_nice(m: &PolyMatrix) -> Result<NiceCertificate> {
    if m.rows != 2 || m.cols != 2 {
        return Err(Error::Shape(format!(
            "nice predicate is defined for 2x2 matrices, got {}x{}",
            m.rows, m.cols
        )));
    }
    let (a, c, b, d) = (m.entry(0, 0), m.entry(0, 1), m.entry(1, 0), m.entry(1, 1));
    let mut clauses = Vec::new();

    let nonneg_witness: Vec<String> = [("a", a), ("c", c), ("b", b), ("d", d)]
        .iter()
        .filter(|(_, p)| p.coeffs().iter().any(Signed::is_negative))
        .map(|(name, _)| (*name).to_owned())
        .collect();
    clauses.push(Clause::new(
        "entries have nonnegative coefficients",
        nonneg_witness.is_empty(),
        if nonneg_witness.is_empty() {
            "all four entries".to_owned()
        } else {
            format!("negative coefficient in {}", nonneg_witness.join(", "))
        },
    ));

    let deg_text = |p: &Poly| p.degree().map_or("-inf".to_owned(), |d| d.to_string());
    let deg_clause = |name: &str, p: &Poly, cap: usize| {
        Clause::new(
            format!("deg {name} <= {cap}"),
            p.degree().is_none_or(|d| d <= cap),
            format!("deg {name} = {}", deg_text(p)),
        )
    };
    clauses.push(deg_clause("a", a, 1));
    clauses.push(deg_clause("d", d, 1));
    clauses.push(deg_clause("b", b, 2));

    let c_ok = c.degree() == Some(0) && c.leading_coeff().is_some_and(Signed::is_positive);
    clauses.push(Clause::new(
        "c is a positive constant",
        c_ok,
        format!("c = {}", c.to_text("x")),
    ));

    let determinant = &(a * d) - &(c * b);
    let det_verdict = nonnegative_on_half_line(&determinant, HalfLine::NonPositive);
    clauses.push(Clause::new(
        "det(M) >= 0 on x <= 0",
        det_verdict.holds,
        match &det_verdict.witness {
            None => format!("det = {}", determinant.to_text("x")),
            Some(w) => format!(
                "det = {}, det({w}) = {} < 0",
                determinant.to_text("x"),
                determinant.eval(w)
            ),
        },
    ));

    Ok(NiceCertificate {
        verdict: clauses.iter().all(|c| c.pass),
        clauses,
        determinant,
        failure_witness: det_verdict.witness,
    })
}

/// Which side of the matrix the polynomial pair enters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PropagationMode {
    /// `(F, G) = (f, g)·M`.
    Row,
    /// `(G, F)ᵀ = M·(g, f)ᵀ`.
    Column,
}

fn pf_clause(name: &str, p: &Poly) -> Clause {
    let real = is_real_rooted(p);
    let nonneg = p.coeffs().iter().all(|c| !c.is_negative());
    Clause::new(
        format!("{name} in PF"),
        real && nonneg,
        format!(
            "real-rooted: {}, nonnegative coefficients: {}",
            if real { "yes" } else { "no" },
            if nonneg { "yes" } else { "no" }
        ),
    )
}

fn relation_clause(g: &Poly, f: &Poly) -> (bool, String) {
    if !is_real_rooted(f) || !is_real_rooted(g) {
        return (
            false,
            "not evaluated: an operand is not real-rooted".to_owned(),
        );
    }
    let cert = compare_zero_orders(f, g).expect("operands real-rooted");
    let tag = if cert.degenerate {
        " (degenerate convention)"
    } else {
        ""
    };
    (
        cert.relation.holds_weak(),
        format!("relation: {}{tag}", cert.relation.label()),
    )
}

/// Verifies interlacing propagation through a nice matrix: for `f, g ∈ PF`
/// with `g ⪯ f`, the mapped pair is again in PF with the ⪯ relation
/// (`G ⪯ F` in row mode, `G₁ ⪯ F₁` in column mode). Hypothesis failures
/// are reported, never thrown.
pub fn check_nice_propagation(
    m: &PolyMatrix,
    f: &Poly,
    g: &Poly,
    mode: PropagationMode,
) -> Result<CheckReport> {
    let nice = is_nice(m)?;
    let (a, c, b, d) = (m.entry(0, 0), m.entry(0, 1), m.entry(1, 0), m.entry(1, 1));
    let mut rep = CheckReport::new();
    rep.hypothesis(
        "M is nice",
        nice.verdict,
        if nice.verdict {
            "all clauses pass".to_owned()
        } else {
            format!("failing clauses: {}", nice.failing().join("; "))
        },
    );
    rep.hypotheses.push(pf_clause("f", f));
    rep.hypotheses.push(pf_clause("g", g));
    let (rel_ok, rel_witness) = relation_clause(g, f);
    rep.hypothesis("g preceq f", rel_ok, rel_witness);

    let (upper, lower, formula) = match mode {
        PropagationMode::Row => (
            &(a * f) + &(b * g),
            &(c * f) + &(d * g),
            "(F, G) = (f, g)M with F = a*f + b*g, G = c*f + d*g",
        ),
        PropagationMode::Column => (
            &(b * g) + &(d * f),
            &(a * g) + &(c * f),
            "(G, F)^T = M(g, f)^T with F = b*g + d*f, G = a*g + c*f",
        ),
    };
    rep.note(formula);
    rep.constructed("F", upper.to_text("x"));
    rep.constructed("G", lower.to_text("x"));
    rep.conclusions.push(pf_clause("F", &upper));
    rep.conclusions.push(pf_clause("G", &lower));
    let (out_ok, out_witness) = relation_clause(&lower, &upper);
    rep.conclusion("G preceq F", out_ok, out_witness);
    Ok(rep)
}

/// Checks that every entry of `Mᵏ` is real-rooted for `k = 1..=k_max`,
/// one conclusion clause per power with the first failing entry as the
/// witness. Needs a square matrix.
pub fn verify_entry_realrootedness(m: &PolyMatrix, k_max: usize) -> Result<CheckReport> {
    if !m.is_square() {
        return Err(Error::Shape(format!(
            "matrix powers need a square matrix, got {}x{}",
            m.rows, m.cols
        )));
    }
    let mut rep = CheckReport::new();
    let mut power = m.clone();
    for k in 1..=k_max {
        if k > 1 {
            power = mat_mul(&power, m)?;
        }
        let bad = (0..m.rows)
            .flat_map(|r| (0..m.cols).map(move |c| (r, c)))
            .find(|&(r, c)| !is_real_rooted(power.entry(r, c)));
        match bad {
            None => rep.conclusion(
                format!("entries of M^{k} real-rooted"),
                true,
                format!("{} entries checked", m.rows * m.cols),
            ),
            Some((r, c)) => rep.conclusion(
                format!("entries of M^{k} real-rooted"),
                false,
                format!(
                    "entry ({r}, {c}) = {} is not real-rooted",
                    power.entry(r, c).to_text("x")
                ),
            ),
        }
    }
    Ok(rep)
}

/// First entries of `Mᵏv` for `k = 1..=k_max` for a built-in family.
pub fn genus_sequence(family: usize, k_max: usize) -> Result<Vec<Poly>> {
    let (m, v) = builtin_family(family)?;
    let mut cur = v;
    let mut out = Vec::with_capacity(k_max);
    for _ in 0..k_max {
        cur = mat_vec(&m, &cur)?;
        out.push(cur[0].clone());
    }
    Ok(out)
}

/// Decimal approximation of an isolated root of squarefree `s`, refined to
/// width `10⁻⁶` (verdicts never depend on this text).
fn approx_root(s: &Poly, iv: &Interval) -> String {
    let refined = refine_root(s, iv, &frac(1, 1_000_000)).unwrap_or_else(|_| iv.clone());
    refined.approx(7)
}

fn negative_real_roots_clause(p: &Poly) -> (bool, String) {
    match p.degree() {
        None => (false, "zero polynomial".into()),
        Some(0) => (true, "constant (no roots)".into()),
        Some(deg) => {
            let iso = isolate_real_roots(p).expect("nonzero");
            let real: usize = iso.roots.iter().map(|r| r.multiplicity).sum();
            if real != deg {
                return (false, format!("{real} of {deg} roots real"));
            }
            let offender = iso.roots.iter().find(|r| {
                compare_root_with_rational(&iso.squarefree, &r.interval, &Rat::zero())
                    != std::cmp::Ordering::Less
            });
            match offender {
                Some(r) => (false, format!("root in {} is not negative", r.interval)),
                None => (true, format!("{deg} real roots, all negative")),
            }
        }
    }
}

fn log_concavity_note(rep: &mut CheckReport, entries: &[Poly]) {
    let first_failure = entries
        .iter()
        .position(|p| !diagnostics::profile(p).log_concave);
    match first_failure {
        None => rep.note(format!(
            "observed: first-entry coefficients log-concave for every k <= {}",
            entries.len()
        )),
        Some(i) => rep.note(format!(
            "observed: first-entry coefficients NOT log-concave at k = {}",
            i + 1
        )),
    }
}

/// Verifies the expected root behavior of a built-in family's genus
/// polynomials (first entries of `Mᵏv`, `k = 1..=k_max`):
///
/// * families 1–6 — every polynomial real-rooted with all roots strictly
///   negative (one conclusion per `k`);
/// * family 7 — a power with nonreal zeros appears (the counterexample is
///   the *expected* outcome, with per-`k` root counts as notes);
/// * family 8 — no established expectation: observations are reported as
///   notes and the report carries no conclusions.
pub fn verify_stahl(family: usize, k_max: usize) -> Result<CheckReport> {
    let entries = genus_sequence(family, k_max)?;
    let mut rep = CheckReport::new();
    match family {
        1..=6 => {
            rep.note("expectation: real-rooted with all roots negative at every power");
            for (i, p) in entries.iter().enumerate() {
                let (pass, witness) = negative_real_roots_clause(p);
                rep.conclusion(
                    format!("first entry of M^{} v has real, negative roots", i + 1),
                    pass,
                    witness,
                );
            }
        }
        7 => {
            rep.note("expectation: some power exhibits nonreal zeros (counterexample)");
            let mut found = None;
            for (i, p) in entries.iter().enumerate() {
                let deg = p.degree().unwrap_or(0);
                let iso = isolate_real_roots(p).expect("nonzero");
                let real: usize = iso.roots.iter().map(|r| r.multiplicity).sum();
                let approx: Vec<String> = iso
                    .roots
                    .iter()
                    .map(|r| approx_root(&iso.squarefree, &r.interval))
                    .collect();
                rep.note(format!(
                    "k = {}: degree {deg}, {real} real roots at ~[{}]",
                    i + 1,
                    approx.join(", ")
                ));
                if real < deg && found.is_none() {
                    found = Some((i + 1, real, deg, p.clone()));
                }
            }
            match found {
                Some((k, real, deg, p)) => rep.conclusion(
                    format!("nonreal zeros appear at some k <= {k_max}"),
                    true,
                    format!(
                        "k = {k}: only {real} of {deg} roots of {} are real",
                        p.to_text("x")
                    ),
                ),
                None => rep.conclusion(
                    format!("nonreal zeros appear at some k <= {k_max}"),
                    false,
                    "every first entry is real-rooted in the range checked".to_owned(),
                ),
            }
        }
        8 => {
            rep.note("no established expectation for this family; observations only");
            for (i, p) in entries.iter().enumerate() {
                let (negative_real, witness) = negative_real_roots_clause(p);
                rep.note(format!(
                    "k = {}: real-and-negative = {negative_real} ({witness})",
                    i + 1
                ));
            }
        }
        _ => unreachable!("builtin_family bounds the index"),
    }
    log_concavity_note(&mut rep, &entries);
    Ok(rep)
}

fn swap_factor() -> PolyMatrix {
    PolyMatrix::from_rows(vec![
        vec![Poly::zero(), Poly::one()],
        vec![Poly::x(), Poly::zero()],
    ])
    .expect("rectangular literal")
}

/// Positive rational `content` and primitive part with integer, jointly
/// coprime coefficients (`m = content · primitive`). The zero matrix gets
/// content 1.
fn content_split(m: &PolyMatrix) -> (Rat, PolyMatrix) {
    use num_bigint::BigInt;
    use num_integer::Integer;
    let mut denom_lcm = BigInt::one();
    for e in &m.entries {
        for c in e.coeffs() {
            denom_lcm = denom_lcm.lcm(c.denom());
        }
    }
    let mut numer_gcd = BigInt::zero();
    for e in &m.entries {
        for c in e.coeffs() {
            numer_gcd = numer_gcd.gcd(&(c * Rat::from_integer(denom_lcm.clone())).to_integer());
        }
    }
    if numer_gcd.is_zero() {
        return (Rat::one(), m.clone());
    }
    let content = Rat::new(numer_gcd, denom_lcm);
    (content.clone(), m.scale(&(Rat::one() / content)))
}

fn det2(m: &PolyMatrix) -> Poly {
    &(m.entry(0, 0) * m.entry(1, 1)) - &(m.entry(0, 1) * m.entry(1, 0))
}

fn adjugate2(m: &PolyMatrix) -> PolyMatrix {
    PolyMatrix::from_rows(vec![
        vec![m.entry(1, 1).clone(), -m.entry(0, 1)],
        vec![-m.entry(1, 0), m.entry(0, 0).clone()],
    ])
    .expect("rectangular literal")
}

fn divide_entries(m: &PolyMatrix, d: &Poly) -> Option<PolyMatrix> {
    let entries: Option<Vec<Poly>> = m
        .entries
        .iter()
        .map(|e| e.exact_div(d).ok().flatten())
        .collect();
    Some(PolyMatrix {
        rows: m.rows,
        cols: m.cols,
        entries: entries?,
    })
}

/// `L` with `L·R = M`, if the exact quotient exists.
fn right_quotient(m: &PolyMatrix, r: &PolyMatrix) -> Option<PolyMatrix> {
    let det = det2(r);
    if det.is_zero() {
        return None;
    }
    divide_entries(&mat_mul(m, &adjugate2(r)).ok()?, &det)
}

/// `R` with `L·R = M`, if the exact quotient exists.
fn left_quotient(l: &PolyMatrix, m: &PolyMatrix) -> Option<PolyMatrix> {
    let det = det2(l);
    if det.is_zero() {
        return None;
    }
    divide_entries(&mat_mul(&adjugate2(l), m).ok()?, &det)
}

fn search_nice_factors(m: &PolyMatrix, depth: usize) -> Option<Vec<PolyMatrix>> {
    if is_nice(m).expect("2x2 by construction").verdict {
        return Some(vec![m.clone()]);
    }
    if depth <= 1 {
        return None;
    }
    let atoms = [swap_factor()];
    for atom in &atoms {
        if let Some(left) = right_quotient(m, atom) {
            if let Some(mut factors) = search_nice_factors(&left, depth - 1) {
                factors.push(atom.clone());
                return Some(factors);
            }
        }
        if let Some(right) = left_quotient(atom, m) {
            if let Some(factors) = search_nice_factors(&right, depth - 1) {
                let mut all = vec![atom.clone()];
                all.extend(factors);
                return Some(all);
            }
        }
    }
    None
}

/// Bounded search for a factorization of a 2×2 matrix into at most
/// `max_depth` nice factors: an already-nice matrix returns `[M]`;
/// otherwise scalar content is factored out first and swap-pattern atoms
/// `(0, 1; x, 0)` are peeled from either side with exact division, in a
/// deterministic order. `None` is an honest "not found within the budget",
/// never an error.
pub fn decompose_nice(m: &PolyMatrix, max_depth: usize) -> Result<Option<Vec<PolyMatrix>>> {
    if m.rows != 2 || m.cols != 2 {
        return Err(Error::Shape(format!(
            "decomposition into nice factors is defined for 2x2 matrices, got {}x{}",
            m.rows, m.cols
        )));
    }
    if max_depth == 0 {
        return Err(Error::ParameterDomain("max_depth must be >= 1".into()));
    }
    if is_nice(m)?.verdict {
        return Ok(Some(vec![m.clone()]));
    }
    let (content, primitive) = content_split(m);
    Ok(
        search_nice_factors(&primitive, max_depth).map(|mut factors| {
            factors[0] = factors[0].scale(&content);
            debug_assert_eq!(
                &factors[1..]
                    .iter()
                    .fold(factors[0].clone(), |acc, f| mat_mul(&acc, f).expect("2x2")),
                m
            );
            factors
        }),
    )
}
