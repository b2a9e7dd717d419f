use proptest::prelude::*;

use hopf_scf::scalars::{int, parse_scalar, rat, PolyQT, Rational, ScalarQT};

fn poly() -> impl Strategy<Value = PolyQT> {
    prop::collection::vec((-4i64..=4, 1i64..=3, 0u32..=2, 0u32..=2), 0..4).prop_map(|terms| {
        terms.into_iter().fold(PolyQT::zero(), |acc, (n, d, a, b)| &acc + &PolyQT::monomial(rat(n, d), a, b))
    })
}

fn scalar() -> impl Strategy<Value = ScalarQT> {
    (poly(), poly()).prop_map(|(n, d)| {
        let d = if d.is_zero() { PolyQT::one() } else { d };
        ScalarQT::fraction(n, d).expect("nonzero denominator")
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn addition_is_associative_and_commutative(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
    }

    #[test]
    fn multiplication_distributes(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn division_inverts_multiplication(a in scalar(), b in scalar()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!(&(&a * &b) / &b, a.clone());
        prop_assert_eq!(&(&a - &a), &ScalarQT::zero());
    }

    #[test]
    fn display_parses_back(a in scalar()) {
        prop_assert_eq!(parse_scalar(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn evaluation_is_a_ring_map(a in poly(), b in poly(), q0 in -3i64..=3, t0 in -3i64..=3) {
        let (q0, t0) = (int(q0), int(t0));
        let (x, y) = (ScalarQT::from_poly(a), ScalarQT::from_poly(b));
        let lhs = (&x * &y).eval_at(&q0, &t0).unwrap();
        prop_assert_eq!(lhs, x.eval_at(&q0, &t0).unwrap() * y.eval_at(&q0, &t0).unwrap());
    }

    #[test]
    fn exact_division_recovers_factor(a in poly(), b in poly()) {
        prop_assume!(!b.is_zero());
        let prod = &a * &b;
        prop_assert_eq!(prod.div_exact(&b), Some(a));
    }
}

#[test]
fn specializations_and_vanishing_denominators() {
    let s = parse_scalar("q + 2*t").unwrap();
    assert_eq!(s.eval_at(&int(1), &int(0)).unwrap(), int(1));
    let s = parse_scalar("(q + t)*t").unwrap();
    assert_eq!(s.eval_at(&int(-1), &int(1)).unwrap(), int(0));
    let s = parse_scalar("1/(q + t)").unwrap();
    assert!(s.eval_at(&int(1), &int(-1)).is_err());
}

#[test]
fn identity_substitution_is_identity() {
    let s = parse_scalar("(q^2 - 3*q*t)/(q + t)").unwrap();
    assert_eq!(s.substitute(&ScalarQT::q(), &ScalarQT::t()).unwrap(), s);
}

// q^a t^b under (q, t) ↦ (−Q, Q − 1) with Q = q/(q+t) is (−q)^a (−t)^b / (q+t)^{a+b}.
#[test]
fn rescaling_on_monomials() {
    let q_plus_t = &ScalarQT::q() + &ScalarQT::t();
    let big_q = ScalarQT::q().checked_div(&q_plus_t).unwrap();
    let e_q = -&big_q;
    let e_t = &big_q - &ScalarQT::one();
    for a in 0..=3 {
        for b in 0..=3 {
            let mono = ScalarQT::from_poly(PolyQT::monomial(Rational::from_integer(1.into()), a, b));
            let lhs = mono.substitute(&e_q, &e_t).unwrap();
            let sign = ScalarQT::from_int(if (a + b) % 2 == 0 { 1 } else { -1 });
            let rhs = (&sign * &ScalarQT::q().pow(a)) * &ScalarQT::t().pow(b);
            let rhs = rhs.checked_div(&q_plus_t.pow(a + b)).unwrap();
            assert_eq!(lhs, rhs, "a={a} b={b}");
        }
    }
}

#[test]
fn integrality_detection() {
    let s = parse_scalar("(q^2 - t^2)/(q - t)").unwrap();
    assert!(s.is_polynomial());
    assert!(s.as_integer_poly().is_some());
    assert!(parse_scalar("q/2").unwrap().as_integer_poly().is_none());
    assert!(!parse_scalar("1/(q + t)").unwrap().is_polynomial());
}

#[test]
fn malformed_literals_are_rejected() {
    for bad in ["", "q +", "(q", "x", "1/0", "q^", "2^q"] {
        assert!(parse_scalar(bad).is_err(), "{bad}");
    }
}
