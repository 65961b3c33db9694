//! Coefficient-sequence consequences of real-rootedness: Newton's
//! inequalities, log-concavity, unimodality, mode location, and Darroch's
//! mode bound `⌊P′(1)/P(1)⌋ ≤ m ≤ ⌈P′(1)/P(1)⌉`.
//!
//! Newton's inequality is a *consequence* check, never a real-rootedness
//! test (it is necessary, not sufficient). Newton and Darroch clauses
//! require strictly positive coefficients; sequences with zeros or negative
//! entries get those fields absent rather than an error.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{Poly, Rat};

/// Shape summary of a coefficient sequence `a₀, …, aₙ`.
#[derive(Debug, Clone)]
pub struct SequenceProfile {
    pub coeffs: Vec<Rat>,
    pub unimodal: bool,
    pub log_concave: bool,
    /// Indices of maximal entries; nonempty iff the sequence is nonempty
    /// with all entries strictly positive.
    pub modes: Vec<usize>,
    /// Newton slack values, present iff all entries are strictly positive.
    pub newton_margins: Option<Vec<Rat>>,
    /// `(⌊P′(1)/P(1)⌋, ⌈P′(1)/P(1)⌉)`, present iff all entries are
    /// strictly positive.
    pub darroch_interval: Option<(BigInt, BigInt)>,
}

impl SequenceProfile {
    /// Every mode lies inside the Darroch interval (true when the interval
    /// is absent, since nothing is then claimed).
    pub fn modes_within_darroch(&self) -> bool {
        match &self.darroch_interval {
            None => true,
            Some((lo, hi)) => self
                .modes
                .iter()
                .all(|&m| &BigInt::from(m) >= lo && &BigInt::from(m) <= hi),
        }
    }
}

/// Newton slack values `aᵢ² − aᵢ₋₁aᵢ₊₁(1+1/i)(1+1/(n−i))` for
/// `1 ≤ i ≤ n−1`. All slacks nonnegative is a necessary condition for a
/// positive-coefficient polynomial to be real-rooted.
pub fn newton_check(p: &Poly) -> Result<Vec<Rat>> {
    let coeffs = positive_coeffs(p)?;
    Ok(newton_margins(&coeffs))
}

fn newton_margins(coeffs: &[Rat]) -> Vec<Rat> {
    let n = coeffs.len() - 1;
    (1..n)
        .map(|i| {
            let stretch = (Rat::one() + Rat::new(1.into(), i.into()))
                * (Rat::one() + Rat::new(1.into(), (n - i).into()));
            &coeffs[i] * &coeffs[i] - &coeffs[i - 1] * &coeffs[i + 1] * stretch
        })
        .collect()
}

fn positive_coeffs(p: &Poly) -> Result<Vec<Rat>> {
    if p.is_zero() {
        return Err(Error::NonPositiveCoefficient { index: 0 });
    }
    let coeffs = p.coeffs().to_vec();
    if let Some(index) = coeffs.iter().position(|c| !c.is_positive()) {
        return Err(Error::NonPositiveCoefficient { index });
    }
    Ok(coeffs)
}

/// Weakly rises then weakly falls.
fn is_unimodal(coeffs: &[Rat]) -> bool {
    let mut falling = false;
    for pair in coeffs.windows(2) {
        match pair[1].cmp(&pair[0]) {
            std::cmp::Ordering::Greater if falling => return false,
            std::cmp::Ordering::Less => falling = true,
            _ => {}
        }
    }
    true
}

/// `aᵢ² ≥ aᵢ₋₁aᵢ₊₁` at every interior index.
fn is_log_concave(coeffs: &[Rat]) -> bool {
    coeffs.windows(3).all(|w| &w[1] * &w[1] >= &w[0] * &w[2])
}

/// Full shape profile of the coefficient sequence of `p`.
pub fn profile(p: &Poly) -> SequenceProfile {
    let coeffs = p.coeffs().to_vec();
    let unimodal = is_unimodal(&coeffs);
    let log_concave = is_log_concave(&coeffs);
    let all_positive = !coeffs.is_empty() && coeffs.iter().all(|c| c.is_positive());

    let modes = if all_positive {
        let max = coeffs.iter().max().expect("nonempty");
        coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| *c == max)
            .map(|(i, _)| i)
            .collect()
    } else {
        Vec::new()
    };

    let (newton, darroch) = if all_positive {
        let p1 = p.eval(&Rat::one());
        let dp1 = p.derivative().eval(&Rat::one());
        debug_assert!(!p1.is_zero());
        let ratio = dp1 / p1;
        (
            Some(newton_margins(&coeffs)),
            Some((ratio.floor().to_integer(), ratio.ceil().to_integer())),
        )
    } else {
        (None, None)
    };

    SequenceProfile {
        coeffs,
        unimodal,
        log_concave,
        modes,
        newton_margins: newton,
        darroch_interval: darroch,
    }
}

/// Profile of the strictly positive coefficient window of `p`: the
/// valuation is trimmed first, so polynomials with zero constant term
/// (derangement-style) still get Newton/Darroch clauses on their support.
/// Returns the valuation offset together with the window profile; mode
/// indices in the profile are relative to the window and shift back by the
/// offset.
pub fn support_profile(p: &Poly) -> (usize, SequenceProfile) {
    let (valuation, trimmed) = p.trim_valuation();
    (valuation, profile(&trimmed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn p(text: &str) -> Poly {
        Poly::parse(text).unwrap()
    }

    #[test]
    fn newton_margins_match_hand_values() {
        assert_eq!(newton_check(&p("1+2*x+x^2")).unwrap(), vec![rat(0)]);
        assert_eq!(newton_check(&p("1+3*x+x^2")).unwrap(), vec![rat(5)]);
        assert_eq!(newton_check(&p("1+4*x+x^2")).unwrap(), vec![rat(12)]);
    }

    #[test]
    fn newton_rejects_nonpositive_coefficients() {
        assert!(matches!(
            newton_check(&p("x")),
            Err(Error::NonPositiveCoefficient { index: 0 })
        ));
        assert!(matches!(
            newton_check(&p("1 - 2*x + x^2")),
            Err(Error::NonPositiveCoefficient { index: 1 })
        ));
        assert!(matches!(
            newton_check(&Poly::zero()),
            Err(Error::NonPositiveCoefficient { index: 0 })
        ));
    }

    #[test]
    fn profile_of_positive_quadratic() {
        let prof = profile(&p("1+4*x+x^2"));
        assert!(prof.unimodal && prof.log_concave);
        assert_eq!(prof.modes, vec![1]);
        assert_eq!(prof.newton_margins, Some(vec![rat(12)]));
        assert_eq!(prof.darroch_interval, Some((1.into(), 1.into())));
        assert!(prof.modes_within_darroch());
    }

    #[test]
    fn profile_with_two_modes() {
        let prof = profile(&p("1+2*x+2*x^2+x^3"));
        assert!(prof.log_concave);
        assert!(prof.unimodal);
        assert_eq!(prof.modes, vec![1, 2]);
        // P′(1)/P(1) = 9/6: interval [1, 2] holds both modes.
        assert_eq!(prof.darroch_interval, Some((1.into(), 2.into())));
        assert!(prof.modes_within_darroch());
    }

    #[test]
    fn zero_coefficients_suppress_newton_and_darroch() {
        // Canonical form of the padded sequence 0, 1, 0 is the monomial x.
        let prof = profile(&p("x"));
        assert!(prof.newton_margins.is_none());
        assert!(prof.darroch_interval.is_none());
        assert!(prof.modes.is_empty());
        assert!(prof.unimodal);
        assert!(
            prof.modes_within_darroch(),
            "absent interval claims nothing"
        );
    }

    #[test]
    fn shape_flags_on_non_positive_sequences() {
        let prof = profile(&p("1 - x + x^2"));
        assert!(!prof.unimodal);
        assert!(prof.log_concave, "(-1)^2 >= 1*1 under the raw inequality");
        assert!(prof.modes.is_empty());

        let prof = profile(&p("2 + x + 2*x^2"));
        assert!(!prof.unimodal);
        assert!(!prof.log_concave);

        let prof = profile(&p("1 + x + x^2 + x^3"));
        assert!(prof.unimodal && prof.log_concave);
        assert_eq!(prof.modes, vec![0, 1, 2, 3]);
    }

    #[test]
    fn support_profile_trims_valuation() {
        // q + 4q² + q³: window 1 + 4x + x² at offset 1.
        let (offset, prof) = support_profile(&p("q + 4*q^2 + q^3"));
        assert_eq!(offset, 1);
        assert_eq!(prof.modes, vec![1]);
        assert_eq!(prof.newton_margins, Some(vec![rat(12)]));
    }

    #[test]
    fn positive_scaling_preserves_shape_and_squares_margins() {
        let base = p("1+4*x+x^2");
        let scaled = base.scale(&rat(3));
        let a = profile(&base);
        let b = profile(&scaled);
        assert_eq!(a.unimodal, b.unimodal);
        assert_eq!(a.log_concave, b.log_concave);
        assert_eq!(a.modes, b.modes);
        assert_eq!(a.darroch_interval, b.darroch_interval);
        let margins_a = a.newton_margins.unwrap();
        let margins_b = b.newton_margins.unwrap();
        assert_eq!(
            margins_b,
            margins_a.iter().map(|m| m * rat(9)).collect::<Vec<_>>()
        );
    }
}
