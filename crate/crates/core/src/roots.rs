//! Exact real-root machinery: Sturm chains, counting, isolation,
//! refinement, multiplicities, and sign evaluation at algebraic points.
//!
//! All intervals are half-open `(lo, hi]` so that Sturm counts compose
//! additively; an interval with `lo == hi` marks an exact rational root.

use crate::error::{Error, Result};
use crate::poly::{
    frac, int_primitive_parts, int_pseudo_rem, int_sign_at, int_sign_neg_infinity,
    int_sign_pos_infinity, rat, Poly, Rat, Sign,
};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::cell::OnceCell;
use std::cmp::Ordering;
use std::fmt;

/// A root locator: either the exact rational `lo == hi`, or the half-open
/// interval `(lo, hi]` known to contain exactly one root of the polynomial
/// it was produced for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub lo: Rat,
    pub hi: Rat,
}

impl Interval {
    pub fn exact(r: Rat) -> Interval {
        Interval {
            lo: r.clone(),
            hi: r,
        }
    }

    pub fn open_closed(lo: Rat, hi: Rat) -> Interval {
        assert!(lo < hi, "open-closed interval needs lo < hi");
        Interval { lo, hi }
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rat {
        (&self.lo + &self.hi) / rat(2)
    }

    /// Decimal rendering of the midpoint, good enough for human output.
    pub fn approx(&self, digits: u32) -> String {
        let scale = num_bigint::BigInt::from(10u32).pow(digits);
        let m = self.midpoint() * Rat::from_integer(scale.clone());
        let rounded = m.round().to_integer();
        let neg = rounded.is_negative();
        let mag = rounded.magnitude().to_string();
        let mag = if mag.len() <= digits as usize {
            format!("{}{}", "0".repeat(digits as usize + 1 - mag.len()), mag)
        } else {
            mag
        };
        let split = mag.len() - digits as usize;
        format!(
            "{}{}.{}",
            if neg { "-" } else { "" },
            &mag[..split],
            &mag[split..]
        )
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_exact() {
            write!(f, "={}", self.lo)
        } else {
            write!(f, "({}, {}]", self.lo, self.hi)
        }
    }
}

/// Sturm chain of a squarefree polynomial: the polynomial, its derivative,
/// then successive negated Euclidean remainders.
///
/// Internally each element is held as `scale · prim` with `scale` a positive
/// rational and `prim` a primitive integer polynomial: the chain is built by
/// integer pseudo-division and all sign queries run over the integers, while
/// [`SturmChain::polys`] reconstructs the literal rational elements exactly
/// from the tracked scales.
#[derive(Debug, Clone)]
pub struct SturmChain {
    /// Literal first element: the squarefree part the chain counts roots of.
    sf: Poly,
    /// `(prim, factor)` per element. `prim` is the primitive integer image
    /// of the literal element (same signs); the literal scale obeys the
    /// two-back recurrence `scale_i = factor_i · scale_{i−2}`, with the
    /// first two factors being the scales themselves. Factors are positive
    /// and may be stored unreduced; only [`SturmChain::polys`] pays the
    /// large-rational arithmetic, and only when asked.
    elems: Vec<(Vec<BigInt>, Rat)>,
    /// Literal rational elements, reconstructed on first use.
    literal: OnceCell<Vec<Poly>>,
}

impl SturmChain {
    /// Builds the chain for `p` (nonzero). Non-squarefree input is reduced
    /// to its squarefree part first, so counts are of *distinct* roots.
    pub fn new(p: &Poly) -> Result<SturmChain> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let g = Poly::gcd(p, &p.derivative());
        let s = if g.degree() == Some(0) {
            p.clone()
        } else {
            p.exact_div(&g)?.expect("gcd divides")
        };
        let (scale0, prim0) = int_primitive_parts(&s);
        let mut elems = vec![(prim0, scale0)];
        if s.degree() > Some(0) {
            let (scale1, prim1) = int_primitive_parts(&s.derivative());
            elems.push((prim1, scale1));
            while elems.last().unwrap().0.len() > 1 {
                let n = elems.len();
                let prim_a = &elems[n - 2].0;
                let prim_b = &elems[n - 1].0;
                let (mut r, k) = int_pseudo_rem(prim_a, prim_b);
                if r.is_empty() {
                    break;
                }
                let content = crate::poly::int_content(&r);
                for c in r.iter_mut() {
                    *c /= &content;
                }
                // literal next = −rem(literal a, literal b)
                //              = −scale_a · content / lc(prim_b)^k · r,
                // so the factor against scale_a is content/|lc|^k > 0 and the
                // sign −sign(lc^k) is folded into the stored coefficients.
                let lead = prim_b.last().unwrap();
                if k % 2 == 0 || !lead.is_negative() {
                    for c in r.iter_mut() {
                        *c = -&*c;
                    }
                }
                let lead_pow = lead.magnitude().pow(k);
                let factor = Rat::new_raw(content, BigInt::from(lead_pow));
                elems.push((r, factor));
            }
        }
        Ok(SturmChain {
            sf: s,
            elems,
            literal: OnceCell::new(),
        })
    }

    /// The literal chain elements `[s, s′, −rem(s, s′), …]`.
    pub fn polys(&self) -> &[Poly] {
        self.literal.get_or_init(|| {
            let mut scales: Vec<Rat> = Vec::with_capacity(self.elems.len());
            for (i, (_, factor)) in self.elems.iter().enumerate() {
                let scale = if i < 2 {
                    factor.clone()
                } else {
                    (&scales[i - 2] * factor).reduced()
                };
                scales.push(scale);
            }
            self.elems
                .iter()
                .zip(&scales)
                .map(|((prim, _), scale)| {
                    Poly::new(
                        prim.iter()
                            .map(|c| Rat::new(c * scale.numer(), scale.denom().clone()))
                            .collect::<Vec<_>>(),
                    )
                })
                .collect()
        })
    }

    /// The squarefree polynomial the chain counts roots of.
    pub fn squarefree(&self) -> &Poly {
        &self.sf
    }

    /// Integer-primitive image of the squarefree part (same signs).
    pub(crate) fn squarefree_int(&self) -> &[BigInt] {
        &self.elems[0].0
    }

    fn variations(signs: impl Iterator<Item = Sign>) -> usize {
        let mut count = 0;
        let mut prev = Sign::Zero;
        for s in signs {
            if s.is_zero() {
                continue;
            }
            if !prev.is_zero() && s != prev {
                count += 1;
            }
            prev = s;
        }
        count
    }

    pub fn variations_at(&self, x: &Rat) -> usize {
        Self::variations(self.elems.iter().map(|(prim, _)| int_sign_at(prim, x)))
    }

    pub fn variations_at_neg_infinity(&self) -> usize {
        Self::variations(
            self.elems
                .iter()
                .map(|(prim, _)| int_sign_neg_infinity(prim)),
        )
    }

    pub fn variations_at_pos_infinity(&self) -> usize {
        Self::variations(
            self.elems
                .iter()
                .map(|(prim, _)| int_sign_pos_infinity(prim)),
        )
    }

    /// Number of distinct real roots in `(lo, hi]` (requires `lo ≤ hi`).
    pub fn count_in(&self, lo: &Rat, hi: &Rat) -> usize {
        debug_assert!(lo <= hi);
        self.variations_at(lo) - self.variations_at(hi)
    }

    /// Number of distinct real roots on the whole line.
    pub fn count_all(&self) -> usize {
        self.variations_at_neg_infinity() - self.variations_at_pos_infinity()
    }

    /// Distinct real roots in the (possibly exact) interval, where an exact
    /// interval contributes 1 when the point is a root.
    pub fn count_interval(&self, iv: &Interval) -> usize {
        if iv.is_exact() {
            usize::from(int_sign_at(self.squarefree_int(), &iv.lo).is_zero())
        } else {
            self.count_in(&iv.lo, &iv.hi)
        }
    }
}

/// Sturm chain of `p` (squarefree part is used for non-squarefree input).
pub fn sturm_chain(p: &Poly) -> Result<SturmChain> {
    SturmChain::new(p)
}

/// Distinct real roots of `p` in `(lo, hi]`.
pub fn count_real_roots_between(p: &Poly, lo: &Rat, hi: &Rat) -> Result<usize> {
    Ok(SturmChain::new(p)?.count_in(lo, hi))
}

/// `1 + max |c_i| / |lead|`: every real root lies strictly inside `(−B, B)`.
pub fn cauchy_bound(p: &Poly) -> Result<Rat> {
    let deg = p.degree().ok_or(Error::ZeroPolynomial)?;
    let lead = p.leading_coeff().unwrap().abs();
    let max = p.coeffs()[..deg]
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_else(Rat::zero);
    Ok(Rat::one() + max / lead)
}

/// Squarefree part `p / gcd(p, p′)`, normalized to a positive leading
/// coefficient. Same distinct roots as `p`, all simple.
pub fn squarefree_part(p: &Poly) -> Result<Poly> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let g = Poly::gcd(p, &p.derivative());
    let s = p.exact_div(&g)?.expect("gcd divides");
    let lead = s.leading_coeff().unwrap();
    Ok(if lead.is_negative() { -&s } else { s })
}

/// One isolated real root: its locator interval and multiplicity in the
/// original (not squarefree-reduced) polynomial.
#[derive(Debug, Clone)]
pub struct IsolatedRoot {
    pub interval: Interval,
    pub multiplicity: usize,
}

/// Full root isolation output, roots in ascending order.
#[derive(Debug, Clone)]
pub struct RootIsolation {
    /// Positive-leading squarefree part the locators refer to.
    pub squarefree: Poly,
    pub roots: Vec<IsolatedRoot>,
}

impl RootIsolation {
    pub fn distinct_count(&self) -> usize {
        self.roots.len()
    }

    pub fn total_with_multiplicity(&self) -> usize {
        self.roots.iter().map(|r| r.multiplicity).sum()
    }
}

struct Isolator {
    /// Squarefree working polynomial; exact rational roots found midway are
    /// divided out, which keeps bisection counts consistent.
    s: Poly,
    /// Integer-primitive image of `s`, for sign tests.
    s_int: Vec<BigInt>,
    chain: SturmChain,
    found: Vec<Interval>,
}

impl Isolator {
    /// Bisects `(lo, hi]` carrying the chain's variation counts at both
    /// endpoints, so each midpoint is evaluated once.
    fn bisect(&mut self, lo: Rat, v_lo: usize, hi: Rat, v_hi: usize) -> Result<()> {
        let count = v_lo - v_hi;
        if count == 0 {
            return Ok(());
        }
        if count == 1 {
            if int_sign_at(&self.s_int, &hi).is_zero() {
                self.found.push(Interval::exact(hi));
            } else {
                self.found.push(Interval::open_closed(lo, hi));
            }
            return Ok(());
        }
        let mid = (&lo + &hi) / rat(2);
        if int_sign_at(&self.s_int, &mid).is_zero() {
            self.found.push(Interval::exact(mid.clone()));
            let linear = Poly::new(vec![-&mid, Rat::one()]);
            self.s = self.s.exact_div(&linear)?.expect("root divides");
            self.s_int = int_primitive_parts(&self.s).1;
            self.chain = SturmChain::new(&self.s)?;
            let v_lo = self.chain.variations_at(&lo);
            let v_mid = self.chain.variations_at(&mid);
            let v_hi = self.chain.variations_at(&hi);
            self.bisect(lo, v_lo, mid.clone(), v_mid)?;
            self.bisect(mid, v_mid, hi, v_hi)
        } else {
            let v_mid = self.chain.variations_at(&mid);
            self.bisect(lo, v_lo, mid.clone(), v_mid)?;
            self.bisect(mid, v_mid, hi, v_hi)
        }
    }
}

/// Isolates every real root of `p` (nonzero) with multiplicities: disjoint
/// rational intervals each containing exactly one root, bounded by the
/// Cauchy bound and split by Sturm-count bisection.
pub fn isolate_real_roots(p: &Poly) -> Result<RootIsolation> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let squarefree = squarefree_part(p)?;
    if squarefree.degree() == Some(0) {
        return Ok(RootIsolation {
            squarefree,
            roots: Vec::new(),
        });
    }
    let chain = SturmChain::new(&squarefree)?;
    let bound = cauchy_bound(&squarefree)?;
    let lo = -&bound;
    let v_lo = chain.variations_at(&lo);
    let v_hi = chain.variations_at(&bound);
    let mut iso = Isolator {
        s: squarefree.clone(),
        s_int: int_primitive_parts(&squarefree).1,
        chain,
        found: Vec::new(),
    };
    iso.bisect(lo, v_lo, bound, v_hi)?;
    // Deflating an exact rational root can leave an earlier interval with
    // that root sitting on its closed right endpoint; shrink until every
    // interval excludes all exact roots, so locators are pairwise disjoint.
    let exacts: Vec<Rat> = iso
        .found
        .iter()
        .filter(|iv| iv.is_exact())
        .map(|iv| iv.lo.clone())
        .collect();
    if !exacts.is_empty() {
        for iv in iso.found.iter_mut() {
            while !iv.is_exact() && exacts.iter().any(|e| *e > iv.lo && *e <= iv.hi) {
                *iv = shrink_once(&iso.s_int, iv);
            }
        }
    }
    iso.found
        .sort_by(|a, b| a.hi.cmp(&b.hi).then_with(|| a.lo.cmp(&b.lo)));

    // Multiplicity of each root: one more than the number of gcd-ladder
    // levels (p, gcd(p,p′), gcd of that with its derivative, ...) that still
    // vanish there.
    let mut ladder: Vec<Poly> = Vec::new();
    let mut g = Poly::gcd(p, &p.derivative());
    while g.degree() > Some(0) {
        let next = Poly::gcd(&g, &g.derivative());
        ladder.push(g);
        g = next;
    }
    let ladder_chains: Vec<SturmChain> =
        ladder.iter().map(SturmChain::new).collect::<Result<_>>()?;
    let roots = iso
        .found
        .into_iter()
        .map(|interval| {
            let extra: usize = ladder_chains
                .iter()
                .map(|c| c.count_interval(&interval))
                .sum();
            IsolatedRoot {
                interval,
                multiplicity: 1 + extra,
            }
        })
        .collect();
    Ok(RootIsolation { squarefree, roots })
}

/// One sign-based bisection step on an isolating interval of a squarefree
/// polynomial, given in integer-primitive form. Returns the shrunk interval
/// (exact if the midpoint or right endpoint turns out to be the root).
fn shrink_once(s_int: &[BigInt], iv: &Interval) -> Interval {
    if iv.is_exact() {
        return iv.clone();
    }
    let sign_hi = int_sign_at(s_int, &iv.hi);
    if sign_hi.is_zero() {
        return Interval::exact(iv.hi.clone());
    }
    let mid = iv.midpoint();
    match int_sign_at(s_int, &mid) {
        Sign::Zero => Interval::exact(mid),
        sgn if sgn == sign_hi => Interval::open_closed(iv.lo.clone(), mid),
        _ => Interval::open_closed(mid, iv.hi.clone()),
    }
}

/// Shrinks an isolating interval until its width is ≤ `width`.
fn shrink_to_width(s_int: &[BigInt], iv: &Interval, width: &Rat) -> Interval {
    let mut cur = iv.clone();
    while !cur.is_exact() && cur.width() > *width {
        cur = shrink_once(s_int, &cur);
    }
    cur
}

/// Refines an isolating interval for a root of `p` to width ≤ `width`.
///
/// The interval must isolate exactly one (distinct) root of `p`; exact
/// rational roots stay exact (width 0).
pub fn refine_root(p: &Poly, iv: &Interval, width: &Rat) -> Result<Interval> {
    let chain = SturmChain::new(p)?;
    let found = chain.count_interval(iv);
    if found != 1 {
        return Err(Error::NotIsolating { found });
    }
    Ok(shrink_to_width(chain.squarefree_int(), iv, width))
}

/// True when every root of `p` is real (counted with multiplicity); the
/// zero polynomial and constants hold vacuously.
pub fn is_real_rooted(p: &Poly) -> bool {
    match p.degree() {
        None | Some(0) => true,
        Some(_) => {
            let s = squarefree_part(p).expect("nonzero");
            let chain = SturmChain::new(&s).expect("nonzero");
            chain.count_all() == s.degree().unwrap()
        }
    }
}

/// Real-rooted with all coefficients ≥ 0; the zero polynomial qualifies.
pub fn is_pf(p: &Poly) -> bool {
    p.coeffs().iter().all(|c| !c.is_negative()) && is_real_rooted(p)
}

/// Sign of `test` at the root of `host` isolated by `iv`.
///
/// Decided exactly: a shared root (detected through the gcd) gives zero;
/// otherwise the interval is refined until `test` has constant sign on it.
pub fn sign_at_root(test: &Poly, host: &Poly, iv: &Interval) -> Result<Sign> {
    if iv.is_exact() {
        return Ok(test.sign_at(&iv.lo));
    }
    if test.is_zero() {
        return Ok(Sign::Zero);
    }
    let host_chain = SturmChain::new(host)?;
    let found = host_chain.count_interval(iv);
    if found != 1 {
        return Err(Error::NotIsolating { found });
    }
    let shared = Poly::gcd(host_chain.squarefree(), test);
    if shared.degree() > Some(0) && SturmChain::new(&shared)?.count_interval(iv) == 1 {
        return Ok(Sign::Zero);
    }
    let test_int = int_primitive_parts(test).1;
    let test_chain = SturmChain::new(test)?;
    let mut cur = iv.clone();
    loop {
        if cur.is_exact() {
            return Ok(int_sign_at(&test_int, &cur.lo));
        }
        if test_chain.count_in(&cur.lo, &cur.hi) == 0 {
            // No root of `test` in (lo, hi], so the sign there is constant
            // and the right endpoint is not a root of `test`.
            return Ok(int_sign_at(&test_int, &cur.hi));
        }
        cur = shrink_once(host_chain.squarefree_int(), &cur);
    }
}

/// Exact order of the root of `s` isolated by `iv` against the rational `t`
/// (`s` must be squarefree on the interval, as produced by isolation).
pub fn compare_root_with_rational(s: &Poly, iv: &Interval, t: &Rat) -> Ordering {
    if iv.is_exact() {
        return iv.lo.cmp(t);
    }
    let s_int = int_primitive_parts(s).1;
    if *t > iv.lo && *t <= iv.hi && int_sign_at(&s_int, t).is_zero() {
        return Ordering::Equal;
    }
    let mut cur = iv.clone();
    loop {
        if cur.is_exact() {
            return cur.lo.cmp(t);
        }
        if *t <= cur.lo {
            return Ordering::Greater;
        }
        if *t >= cur.hi {
            return Ordering::Less;
        }
        cur = shrink_once(&s_int, &cur);
    }
}

/// Half-lines used for sign conditions on coefficient polynomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HalfLine {
    /// `x ≤ 0`.
    NonPositive,
    /// `x ≥ 0`.
    NonNegative,
}

/// Outcome of a half-line sign test, with a rational witness point where
/// the inequality fails (if it does).
#[derive(Debug, Clone)]
pub struct HalfLineVerdict {
    pub holds: bool,
    pub witness: Option<Rat>,
}

/// Decides exactly whether `p(x) ≤ 0 for every x` in the half-line.
///
/// Reduction: with `q(t) = p(±t)` on `t ≥ 0` and `q = t^v·w`, the condition
/// is `w(0) < 0`, `w(+∞) < 0`, and every positive root of `w` of odd
/// multiplicity absent — decided by root isolation plus endpoint signs.
pub fn nonpositive_on_half_line(p: &Poly, half: HalfLine) -> HalfLineVerdict {
    let q = match half {
        HalfLine::NonNegative => p.clone(),
        HalfLine::NonPositive => p.reflect(),
    };
    let back = |t: Rat| match half {
        HalfLine::NonNegative => t,
        HalfLine::NonPositive => -t,
    };
    if q.is_zero() {
        return HalfLineVerdict {
            holds: true,
            witness: None,
        };
    }
    let (v, w) = q.trim_valuation();
    let fail = |t: Rat| {
        debug_assert!(q.sign_at(&t).is_positive());
        HalfLineVerdict {
            holds: false,
            witness: Some(back(t)),
        }
    };
    if w.sign_at(&Rat::zero()).is_positive() {
        if v == 0 {
            return fail(Rat::zero());
        }
        // q > 0 just right of 0; roots of w are at distance ≥ 1/rev_bound
        // from 0, so halfway there q keeps w's sign at 0.
        let rev = Poly::new(w.coeffs().iter().rev().cloned().collect());
        let t = Rat::one() / (rat(2) * cauchy_bound(&rev).expect("nonzero"));
        return fail(t);
    }
    let bound = cauchy_bound(&w).expect("nonzero");
    if w.sign_at_pos_infinity().is_positive() {
        return fail(bound);
    }
    if w.degree() == Some(0) {
        return HalfLineVerdict {
            holds: true,
            witness: None,
        };
    }
    let iso = isolate_real_roots(&w).expect("nonzero");
    // Confine every locator to one side of 0, then check multiplicities of
    // the positive roots.
    let positive: Vec<&IsolatedRoot> = iso
        .roots
        .iter()
        .filter(|r| {
            compare_root_with_rational(&iso.squarefree, &r.interval, &Rat::zero())
                == Ordering::Greater
        })
        .collect();
    let all_even = positive.iter().all(|r| r.multiplicity % 2 == 0);
    if all_even {
        return HalfLineVerdict {
            holds: true,
            witness: None,
        };
    }
    // Some sign change happens on (0, ∞): a positive point exists among the
    // refined locator endpoints (each endpoint realizes the sign of w on the
    // adjacent root gap) or at the outer bound.
    let sf_int = int_primitive_parts(&iso.squarefree).1;
    let mut candidates: Vec<Rat> = vec![bound];
    for r in &positive {
        let tight = shrink_to_width(&sf_int, &r.interval, &frac(1, 4));
        if tight.is_exact() {
            continue;
        }
        candidates.push(tight.lo.clone());
        candidates.push(tight.hi.clone());
    }
    // Exact roots contribute their midpoints toward the neighbor gap.
    for pair in iso.roots.windows(2) {
        let m = (&pair[0].interval.hi + &pair[1].interval.lo) / rat(2);
        candidates.push(m);
    }
    for t in candidates {
        if t.is_positive() && q.sign_at(&t).is_positive() {
            return HalfLineVerdict {
                holds: false,
                witness: Some(back(t)),
            };
        }
    }
    unreachable!("an odd-multiplicity positive root forces a positive point among candidates");
}

/// Decides exactly whether `p(x) ≥ 0 for every x` in the half-line.
pub fn nonnegative_on_half_line(p: &Poly, half: HalfLine) -> HalfLineVerdict {
    nonpositive_on_half_line(&-p, half)
}

/// Decides exactly whether `p(x) < 0 for every x` in the half-line: `p ≤ 0`
/// there and no root lies in the (closed) half-line. When strictness fails
/// only at an irrational root the witness is `None`.
pub fn negative_on_half_line(p: &Poly, half: HalfLine) -> HalfLineVerdict {
    let weak = nonpositive_on_half_line(p, half);
    if !weak.holds {
        return weak;
    }
    if p.is_zero() {
        return HalfLineVerdict {
            holds: false,
            witness: Some(Rat::zero()),
        };
    }
    if p.degree() == Some(0) {
        return HalfLineVerdict {
            holds: true,
            witness: None,
        };
    }
    let zero = Rat::zero();
    let chain = SturmChain::new(p).expect("nonzero");
    let roots_inside = match half {
        HalfLine::NonPositive => chain.variations_at_neg_infinity() - chain.variations_at(&zero),
        HalfLine::NonNegative => {
            chain.variations_at(&zero) - chain.variations_at_pos_infinity()
                + usize::from(p.sign_at(&zero).is_zero())
        }
    };
    if roots_inside == 0 {
        HalfLineVerdict {
            holds: true,
            witness: None,
        }
    } else {
        let witness = p.sign_at(&zero).is_zero().then(Rat::zero);
        HalfLineVerdict {
            holds: false,
            witness,
        }
    }
}
