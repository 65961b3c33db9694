//! Randomized invariants of the exact engine: ring axioms, calculus and
//! substitution identities, division/gcd contracts, root isolation on
//! constructed products of linear factors, interlacing of derivatives,
//! half-line sign decisions, coefficient-profile scaling invariance,
//! matrix-power composition, and the matching recurrence against direct
//! edge-subset enumeration.

use proptest::collection::vec;
use proptest::prelude::*;
use sturm_core::diagnostics::profile;
use sturm_core::genus::{mat_pow_apply, PolyMatrix};
use sturm_core::graph::{matching_counts, matching_counts_by_enumeration, GraphSpec};
use sturm_core::interlace::{prec, preceq};
use sturm_core::poly::{frac, rat, Poly, Rat};
use sturm_core::roots::{
    compare_root_with_rational, is_pf, is_real_rooted, isolate_real_roots, negative_on_half_line,
    nonnegative_on_half_line, HalfLine,
};

fn small_rat() -> impl Strategy<Value = Rat> {
    (-24i64..=24, 1i64..=6).prop_map(|(n, d)| frac(n, d))
}

fn small_poly(max_len: usize) -> impl Strategy<Value = Poly> {
    vec(small_rat(), 0..=max_len).prop_map(Poly::new)
}

fn rational_roots() -> impl Strategy<Value = Vec<Rat>> {
    vec((-12i64..=12, 1i64..=4).prop_map(|(n, d)| frac(n, d)), 1..=5)
}

fn nonpositive_roots() -> impl Strategy<Value = Vec<Rat>> {
    vec((0i64..=10, 1i64..=3).prop_map(|(n, d)| frac(-n, d)), 0..=4)
}

fn product_from_roots(roots: &[Rat], lead: &Rat) -> Poly {
    roots.iter().fold(Poly::constant(lead.clone()), |acc, r| {
        &acc * &Poly::new(vec![-r, rat(1)])
    })
}

proptest! {
    #[test]
    fn ring_axioms(a in small_poly(7), b in small_poly(7), c in small_poly(7)) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, Poly::zero());
        prop_assert_eq!(&a * &Poly::one(), a.clone());
        prop_assert_eq!(&a + &Poly::zero(), a);
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(
        a in small_poly(7),
        b in small_poly(7),
        t in small_rat(),
    ) {
        prop_assert_eq!((&a + &b).eval(&t), a.eval(&t) + b.eval(&t));
        prop_assert_eq!((&a * &b).eval(&t), a.eval(&t) * b.eval(&t));
    }

    #[test]
    fn derivative_satisfies_the_product_rule(f in small_poly(6), g in small_poly(6)) {
        let product_rule = &(&f.derivative() * &g) + &(&f * &g.derivative());
        prop_assert_eq!((&f * &g).derivative(), product_rule);
    }

    #[test]
    fn reflection_is_an_involution(p in small_poly(8), t in small_rat()) {
        prop_assert_eq!(p.reflect().reflect(), p.clone());
        prop_assert_eq!(p.reflect().eval(&t), p.eval(&(-&t)));
    }

    #[test]
    fn text_rendering_reparses_exactly(p in small_poly(8)) {
        let text = p.to_text("x");
        prop_assert_eq!(Poly::parse(&text).unwrap(), p);
    }

    #[test]
    fn variable_scaling_is_substitution(
        p in small_poly(6),
        c in small_rat(),
        t in small_rat(),
    ) {
        prop_assert_eq!(p.scale_variable(&c).eval(&t), p.eval(&(&c * &t)));
    }

    #[test]
    fn division_reconstructs_the_dividend(a in small_poly(8), d in small_poly(5)) {
        prop_assume!(!d.is_zero());
        let (q, r) = a.div_rem(&d).unwrap();
        prop_assert_eq!(&(&q * &d) + &r, a);
        if !r.is_zero() {
            prop_assert!(r.degree().unwrap() < d.degree().unwrap());
        }
    }

    #[test]
    fn gcd_divides_both_operands_and_is_monic(a in small_poly(6), b in small_poly(6)) {
        let g = Poly::gcd(&a, &b);
        if g.is_zero() {
            prop_assert!(a.is_zero() && b.is_zero());
        } else {
            prop_assert_eq!(g.leading_coeff().unwrap(), &rat(1));
            prop_assert!(a.exact_div(&g).unwrap().is_some());
            prop_assert!(b.exact_div(&g).unwrap().is_some());
        }
    }

    #[test]
    fn products_of_linear_factors_are_recovered_by_isolation(
        roots in rational_roots(),
        lead in (1i64..=5).prop_map(rat),
    ) {
        let p = product_from_roots(&roots, &lead);
        prop_assert!(is_real_rooted(&p));
        let iso = isolate_real_roots(&p).unwrap();
        prop_assert_eq!(iso.total_with_multiplicity(), roots.len());

        let mut distinct = roots.clone();
        distinct.sort();
        distinct.dedup();
        prop_assert_eq!(iso.distinct_count(), distinct.len());
        for (found, expected) in iso.roots.iter().zip(&distinct) {
            prop_assert_eq!(
                compare_root_with_rational(&iso.squarefree, &found.interval, expected),
                std::cmp::Ordering::Equal
            );
            let mult = roots.iter().filter(|r| *r == expected).count();
            prop_assert_eq!(found.multiplicity, mult);
        }
    }

    #[test]
    fn derivatives_of_real_rooted_polynomials_interlace(
        roots in rational_roots(),
        lead in (1i64..=4).prop_map(rat),
    ) {
        let p = product_from_roots(&roots, &lead);
        let dp = p.derivative();
        prop_assert!(is_real_rooted(&dp));
        prop_assert!(preceq(&dp, &p).unwrap());

        let mut sorted = roots.clone();
        sorted.sort();
        if sorted.windows(2).all(|w| w[0] != w[1]) {
            prop_assert!(prec(&dp, &p).unwrap());
        }
    }

    #[test]
    fn pf_polynomials_are_closed_under_products(
        aroots in nonpositive_roots(),
        broots in nonpositive_roots(),
        alead in (1i64..=4).prop_map(rat),
        blead in (1i64..=4).prop_map(rat),
    ) {
        let a = product_from_roots(&aroots, &alead);
        let b = product_from_roots(&broots, &blead);
        prop_assert!(is_pf(&a) && is_pf(&b));
        prop_assert!(is_pf(&(&a * &b)));
    }

    #[test]
    fn half_line_sign_decisions_are_exact(p in small_poly(5)) {
        let sq = &p * &p;
        prop_assert!(nonnegative_on_half_line(&sq, HalfLine::NonPositive).holds);
        prop_assert!(nonnegative_on_half_line(&sq, HalfLine::NonNegative).holds);

        let neg = -&(&sq + &Poly::one());
        prop_assert!(negative_on_half_line(&neg, HalfLine::NonPositive).holds);
        prop_assert!(negative_on_half_line(&neg, HalfLine::NonNegative).holds);
        let verdict = nonnegative_on_half_line(&neg, HalfLine::NonPositive);
        prop_assert!(!verdict.holds);
        let w = verdict.witness.unwrap();
        prop_assert!(w <= rat(0));
        prop_assert!(neg.eval(&w) < rat(0));
    }

    #[test]
    fn coefficient_profiles_ignore_positive_scaling(
        coeffs in vec(0i64..40, 1..=8),
        num in 1i64..=9,
        den in 1i64..=4,
    ) {
        let p = Poly::new(coeffs.iter().map(|&c| rat(c)).collect());
        prop_assume!(!p.is_zero());
        let base = profile(&p);
        let scaled = profile(&p.scale(&frac(num, den)));
        prop_assert_eq!(base.unimodal, scaled.unimodal);
        prop_assert_eq!(base.log_concave, scaled.log_concave);
        prop_assert_eq!(base.modes, scaled.modes);
    }

    #[test]
    fn matrix_power_application_composes(
        entries in vec(small_poly(2), 4),
        v in vec(small_poly(2), 2),
        j in 0usize..=3,
        k in 0usize..=3,
    ) {
        let m = PolyMatrix::new(2, 2, entries).unwrap();
        let stepwise = mat_pow_apply(&m, j, &mat_pow_apply(&m, k, &v).unwrap()).unwrap();
        prop_assert_eq!(mat_pow_apply(&m, j + k, &v).unwrap(), stepwise);
    }

    #[test]
    fn matching_recurrence_agrees_with_edge_enumeration(
        n in 2usize..=7,
        mask in any::<u32>(),
        weights in vec((0i64..=6, 1i64..=3), 21),
    ) {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let edges: Vec<(usize, usize, Rat)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .take(12)
            .map(|(i, &(u, v))| (u, v, frac(weights[i].0, weights[i].1)))
            .collect();
        let g = GraphSpec::new(n, edges).unwrap();
        prop_assert_eq!(matching_counts(&g), matching_counts_by_enumeration(&g).unwrap());
    }
}
