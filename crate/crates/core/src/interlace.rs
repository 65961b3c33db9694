//! Certified comparison of the zero orders of two real-rooted polynomials.
//!
//! For real-rooted `f` (roots `r₁ ≥ r₂ ≥ …`) and `g` (roots `s₁ ≥ s₂ ≥ …`),
//! counted with multiplicity:
//!
//! * `g` **alternates left of** `f` when `deg f = deg g` and
//!   `sₙ ≤ rₙ ≤ sₙ₋₁ ≤ ⋯ ≤ s₁ ≤ r₁`;
//! * `g` **interlaces** `f` when `deg f = deg g + 1` and
//!   `rₙ ≤ sₙ₋₁ ≤ ⋯ ≤ s₁ ≤ r₁`;
//! * the *strict* variants hold when no equality occurs.
//!
//! `g ⪯ f` means one of the weak relations holds, `g ≺ f` a strict one.
//! Degenerate conventions: every constant is ⪯ any constant or linear
//! polynomial, and `f ⪯ 0`, `0 ⪯ f` for every `f`; certificates produced
//! through a convention clause carry `degenerate = true`.
//!
//! All comparisons are exact: the roots of `f·g` are isolated once on a
//! common squarefree reference, so ordering two algebraic roots reduces to
//! comparing positions in that single isolation.

use crate::error::{Error, Result};
use crate::poly::{Poly, Sign};
use crate::roots::{
    is_real_rooted, isolate_real_roots, sign_at_root, squarefree_part, Interval, SturmChain,
};

/// Zero-order relation of `g` against `f`, strongest applicable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    StrictInterlaces,
    Interlaces,
    StrictAlternates,
    Alternates,
    None,
}

impl Relation {
    /// Weak order `g ⪯ f` holds.
    pub fn holds_weak(self) -> bool {
        self != Relation::None
    }

    /// Strict order `g ≺ f` holds.
    pub fn holds_strict(self) -> bool {
        matches!(
            self,
            Relation::StrictInterlaces | Relation::StrictAlternates
        )
    }

    /// The relation is an interlacing (degree gap one), weak or strict.
    pub fn is_interlacing(self) -> bool {
        matches!(self, Relation::StrictInterlaces | Relation::Interlaces)
    }

    pub fn label(self) -> &'static str {
        match self {
            Relation::StrictInterlaces => "strict_interlaces",
            Relation::Interlaces => "interlaces",
            Relation::StrictAlternates => "strict_alternates",
            Relation::Alternates => "alternates",
            Relation::None => "none",
        }
    }
}

/// One root of `f·g` in the merged (nonincreasing) ordering, with its
/// multiplicity in each polynomial (zero when absent from one of them).
#[derive(Debug, Clone)]
pub struct MergedRoot {
    pub interval: Interval,
    pub mult_f: usize,
    pub mult_g: usize,
}

/// Outcome of a zero-order comparison: the strongest relation, the merged
/// root ordering as evidence, and whether a degenerate convention applied.
#[derive(Debug, Clone)]
pub struct InterlacingCertificate {
    pub relation: Relation,
    /// Merged roots in nonincreasing order of value.
    pub evidence: Vec<MergedRoot>,
    pub degenerate: bool,
}

/// True when the locator holds a root of the squarefree polynomial `s`
/// (locators come from an isolation of a multiple of `s`).
fn root_present(chain: &SturmChain, iv: &Interval) -> bool {
    chain.count_interval(iv) == 1
}

/// Compares the zero orders of real-rooted `f` and `g`, reporting the
/// strongest relation of `g` against `f` with the merged-root evidence.
pub fn compare_zero_orders(f: &Poly, g: &Poly) -> Result<InterlacingCertificate> {
    if !is_real_rooted(f) {
        return Err(Error::NotRealRooted { which: "f" });
    }
    if !is_real_rooted(g) {
        return Err(Error::NotRealRooted { which: "g" });
    }
    if f.is_zero() || g.is_zero() {
        // `f ⪯ 0` and `0 ⪯ f` hold by convention, weakly.
        return Ok(InterlacingCertificate {
            relation: Relation::Alternates,
            evidence: Vec::new(),
            degenerate: true,
        });
    }
    let n = f.degree().unwrap();
    let m = g.degree().unwrap();
    // Constants against constants or linears: the convention clause. The
    // chains below are vacuous, so strictness is granted outright.
    let degenerate = m == 0 && n <= 1;
    if n != m && n != m + 1 {
        return Ok(InterlacingCertificate {
            relation: Relation::None,
            evidence: Vec::new(),
            degenerate: false,
        });
    }

    // Isolate the union of roots once: w = squarefree(f)·squarefree(g)/gcd.
    let s_f = squarefree_part(f)?;
    let s_g = squarefree_part(g)?;
    let h = Poly::gcd(&s_f, &s_g);
    let w = (&s_f * &s_g).exact_div(&h)?.expect("gcd divides");
    let iso_w = isolate_real_roots(&w)?;
    let chain_f = SturmChain::new(&s_f)?;
    let chain_g = SturmChain::new(&s_g)?;
    let ladder = |p: &Poly| -> Result<Vec<SturmChain>> {
        let mut chains = Vec::new();
        let mut g = Poly::gcd(p, &p.derivative());
        while g.degree() > Some(0) {
            chains.push(SturmChain::new(&g)?);
            g = Poly::gcd(&g, &g.derivative());
        }
        Ok(chains)
    };
    let ladder_f = ladder(f)?;
    let ladder_g = ladder(g)?;

    let mut evidence: Vec<MergedRoot> = Vec::new();
    for root in &iso_w.roots {
        let iv = &root.interval;
        let mult = |chain: &SturmChain, lad: &[SturmChain]| -> usize {
            if root_present(chain, iv) {
                1 + lad.iter().filter(|c| root_present(c, iv)).count()
            } else {
                0
            }
        };
        evidence.push(MergedRoot {
            interval: iv.clone(),
            mult_f: mult(&chain_f, &ladder_f),
            mult_g: mult(&chain_g, &ladder_g),
        });
    }
    evidence.reverse(); // nonincreasing order of root value
    debug_assert_eq!(evidence.iter().map(|e| e.mult_f).sum::<usize>(), n);
    debug_assert_eq!(evidence.iter().map(|e| e.mult_g).sum::<usize>(), m);

    // Roots as positions in the ascending isolation; position comparison is
    // exact comparison of the algebraic roots.
    let total = evidence.len();
    let mut f_pos: Vec<usize> = Vec::with_capacity(n);
    let mut g_pos: Vec<usize> = Vec::with_capacity(m);
    for (i, e) in evidence.iter().enumerate() {
        let pos = total - 1 - i; // ascending index of this root
        f_pos.extend(std::iter::repeat_n(pos, e.mult_f));
        g_pos.extend(std::iter::repeat_n(pos, e.mult_g));
    }

    // Weave r₁ ≥ s₁ ≥ r₂ ≥ s₂ ≥ … (the two defining chains both reduce to
    // these pairwise inequalities on descending root lists).
    let mut weak = true;
    let mut strict = true;
    for k in 0..m {
        match f_pos[k].cmp(&g_pos[k]) {
            std::cmp::Ordering::Less => {
                weak = false;
                strict = false;
                break;
            }
            std::cmp::Ordering::Equal => strict = false,
            std::cmp::Ordering::Greater => {}
        }
        if k + 1 < n {
            match g_pos[k].cmp(&f_pos[k + 1]) {
                std::cmp::Ordering::Less => {
                    weak = false;
                    strict = false;
                    break;
                }
                std::cmp::Ordering::Equal => strict = false,
                std::cmp::Ordering::Greater => {}
            }
        }
    }

    let relation = if !weak {
        Relation::None
    } else if n == m {
        if strict {
            Relation::StrictAlternates
        } else {
            Relation::Alternates
        }
    } else if strict {
        Relation::StrictInterlaces
    } else {
        Relation::Interlaces
    };
    Ok(InterlacingCertificate {
        relation,
        evidence,
        degenerate,
    })
}

/// `g ⪯ f`: the zero orders weakly alternate or interlace (conventions for
/// zero and constant operands included).
pub fn preceq(g: &Poly, f: &Poly) -> Result<bool> {
    Ok(compare_zero_orders(f, g)?.relation.holds_weak())
}

/// `g ≺ f`: strict variant of [`preceq`].
pub fn prec(g: &Poly, f: &Poly) -> Result<bool> {
    Ok(compare_zero_orders(f, g)?.relation.holds_strict())
}

/// Checks the classical Sturm-sequence property: `deg Pₙ = n` and, at every
/// root `r` of an interior `Pₙ`, the neighbors satisfy
/// `Pₙ₋₁(r)·Pₙ₊₁(r) < 0`. All entries must be standard.
pub fn is_sturm_sequence(seq: &[Poly]) -> Result<bool> {
    for (index, p) in seq.iter().enumerate() {
        if !p.is_standard() {
            return Err(Error::NonStandardEntry { index });
        }
    }
    for (i, p) in seq.iter().enumerate() {
        if p.degree() != Some(i) {
            return Ok(false);
        }
    }
    for i in 1..seq.len().saturating_sub(1) {
        let iso = isolate_real_roots(&seq[i])?;
        for root in &iso.roots {
            let below = sign_at_root(&seq[i - 1], &seq[i], &root.interval)?;
            let above = sign_at_root(&seq[i + 1], &seq[i], &root.interval)?;
            if below.product(above) != Sign::Negative {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Verdict for a sequence check, with the index where it first fails.
#[derive(Debug, Clone)]
pub struct SequenceVerdict {
    pub ok: bool,
    /// Index of the offending entry (for pair conditions, the left entry).
    pub failure_index: Option<usize>,
    pub reason: Option<String>,
}

impl SequenceVerdict {
    fn pass() -> SequenceVerdict {
        SequenceVerdict {
            ok: true,
            failure_index: None,
            reason: None,
        }
    }

    fn fail(index: usize, reason: &str) -> SequenceVerdict {
        SequenceVerdict {
            ok: false,
            failure_index: Some(index),
            reason: Some(reason.to_string()),
        }
    }
}

/// Checks that every entry is standard and real-rooted and that each
/// adjacent pair satisfies `Pₙ ⪯ Pₙ₊₁`. Failures are reported with a
/// witness index instead of an error.
pub fn is_generalized_sturm_sequence(seq: &[Poly]) -> SequenceVerdict {
    for (i, p) in seq.iter().enumerate() {
        if !p.is_standard() {
            return SequenceVerdict::fail(i, "entry is not standard");
        }
    }
    for (i, p) in seq.iter().enumerate() {
        if !is_real_rooted(p) {
            return SequenceVerdict::fail(i, "entry is not real-rooted");
        }
    }
    for i in 0..seq.len().saturating_sub(1) {
        let ok = preceq(&seq[i], &seq[i + 1]).expect("entries verified real-rooted");
        if !ok {
            return SequenceVerdict::fail(i, "adjacent zero orders are not related");
        }
    }
    SequenceVerdict::pass()
}
