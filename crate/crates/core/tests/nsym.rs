use std::collections::BTreeMap;

use proptest::prelude::*;

use hopf_scf::combinatorics::{comp_of_set, Composition, SubsetLabel};
use hopf_scf::nsym::{b_to_h, b_to_h_is_triangular, bhat_to_h, pairing, structconst, NBasis, NSymElem, Params};
use hopf_scf::qsym::{QBasis, QSymElem};
use hopf_scf::scalars::{int, parse_scalar, ScalarQT};
use hopf_scf::sym::{comm, comm_bhat_closed_form, Partition};

fn composition(max: u32) -> impl Strategy<Value = Composition> {
    (0..=max).prop_flat_map(|n| {
        let all = Composition::all_of(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn bases() -> Vec<NBasis> {
    vec![
        NBasis::H,
        NBasis::Lambda,
        NBasis::R,
        NBasis::Estar,
        NBasis::B(Params::symbolic()),
        NBasis::Bhat(Params::symbolic()),
        NBasis::B(Params::ints(2, 3)),
        NBasis::Bhat(Params::ints(-3, 2)),
    ]
}

fn check_dual(nb: NBasis, qb: QBasis, n_max: u32) {
    for n in 0..=n_max {
        for a in Composition::all_of(n) {
            let f = NSymElem::basis_elem(nb.clone(), a.clone());
            for b in Composition::all_of(n) {
                let x = QSymElem::basis_elem(qb, b.clone());
                let expected = if a == b { ScalarQT::one() } else { ScalarQT::zero() };
                assert_eq!(pairing(&f, &x).unwrap(), expected, "<{}_{a}, {}_{b}>", nb.tag(), qb.tag());
            }
        }
    }
}

#[test]
fn dual_bases() {
    check_dual(NBasis::H, QBasis::M, 6);
    check_dual(NBasis::R, QBasis::L, 6);
    check_dual(NBasis::Estar, QBasis::E, 6);
}

#[test]
fn specialized_b_is_dual_to_pi() {
    for nu in [2i64, 3, 5] {
        check_dual(NBasis::B(Params::ints(-nu, nu - 1)), QBasis::Pi(nu as u32), 6);
    }
}

#[test]
fn b_is_triangular_with_unit_diagonal() {
    for n in 1..=7 {
        assert!(b_to_h_is_triangular(n, &Params::symbolic()), "n={n}");
    }
}

// B(q,t)_α = (−q−t)^{ℓ(α)−1} B(−Q, Q−1)_α with Q = q/(q+t).
#[test]
fn rescaling_identity() {
    let q_plus_t = &ScalarQT::q() + &ScalarQT::t();
    let big_q = ScalarQT::q().checked_div(&q_plus_t).unwrap();
    let rescaled = Params::new(-&big_q, &big_q - &ScalarQT::one());
    let minus = -&q_plus_t;
    for n in 1..=6 {
        for a in Composition::all_of(n) {
            let lhs = b_to_h(&a, &Params::symbolic());
            let rhs = b_to_h(&a, &rescaled).scale(&minus.pow(a.len() as u32 - 1));
            assert_eq!(lhs, rhs, "{a}");
        }
    }
}

#[test]
fn b_specializes_to_classical_bases() {
    for n in 1..=6 {
        for a in Composition::all_of(n) {
            let ac = a.complement();
            let b10 = NSymElem::basis_elem(NBasis::B(Params::ints(1, 0)), a.clone());
            assert!(b10.equals(&NSymElem::basis_elem(NBasis::H, ac.clone())), "B(1,0)_{a}");
            let b = NSymElem::basis_elem(NBasis::B(Params::ints(-1, 1)), a.clone());
            assert!(b.equals(&NSymElem::basis_elem(NBasis::Lambda, ac.clone())), "B(-1,1)_{a}");
            let b = NSymElem::basis_elem(NBasis::B(Params::ints(1, -1)), a.clone());
            assert!(b.equals(&NSymElem::basis_elem(NBasis::Estar, ac)), "B(1,-1)_{a}");
        }
    }
}

#[test]
fn worked_expansions() {
    let p = Params::symbolic();
    let b12 = b_to_h(&Composition::new(vec![1, 2]).unwrap(), &p);
    assert_eq!(b12.coeff(&Composition::new(vec![2, 1]).unwrap()), ScalarQT::q());
    assert_eq!(b12.coeff(&Composition::new(vec![1, 1, 1]).unwrap()), ScalarQT::t());
    let k = SubsetLabel::from_elems(3, [1, 2]).unwrap();
    let j = SubsetLabel::from_elems(2, [1]).unwrap();
    let c = structconst(&k, &SubsetLabel::empty(1), &j).unwrap();
    assert_eq!(c, parse_scalar("q + 2*t").unwrap());
    // comm is injective in degree 2, so the closed form for comm(B̂_2) pins B̂_2 down.
    let bhat = bhat_to_h(&Composition::single(2), &p);
    assert_eq!(bhat.coeff(&Composition::single(2)), ScalarQT::q());
    assert_eq!(bhat.coeff(&Composition::ones(2)), ScalarQT::t());
    assert_eq!(bhat.len(), 2);
}

// At (q,t) = (1,0) the constants count overlapping shuffles of the complementary compositions.
#[test]
fn structure_constants_at_one_zero_count_overlapping_shuffles() {
    for total in 1..=6u32 {
        for m in 0..=total {
            for i in SubsetLabel::all(m) {
                for j in SubsetLabel::all(total - m) {
                    let (a, b) = (comp_of_set(&i.complement()), comp_of_set(&j.complement()));
                    let counts = hopf_scf::combinatorics::overlapping_shuffles(&a, &b);
                    for k in SubsetLabel::all(total) {
                        let c = structconst(&k, &i, &j).unwrap();
                        assert!(c.as_integer_poly().is_some(), "C^{k}_{{{i},{j}}} = {c}");
                        let at = c.eval_at(&int(1), &int(0)).unwrap();
                        let expected = counts.get(&comp_of_set(&k.complement())).copied().unwrap_or(0);
                        assert_eq!(at, int(expected as i64), "C^{k}_{{{i},{j}}}(1,0)");
                    }
                }
            }
        }
    }
}

#[test]
fn compositions_per_partition_type() {
    for n in 0..=10u32 {
        let mut counts: BTreeMap<Partition, u64> = BTreeMap::new();
        for a in Composition::all_of(n) {
            *counts.entry(Partition::of(&a)).or_insert(0) += 1;
        }
        assert_eq!(counts.len(), Partition::all_of(n).len());
        for (l, c) in counts {
            assert_eq!(l.c_lambda(), c, "{l}");
        }
    }
}

#[test]
fn comm_of_bhat_closed_form() {
    for p in [Params::symbolic(), Params::ints(2, 3), Params::ints(-1, 4)] {
        for n in 0..=7 {
            let x = NSymElem::basis_elem(NBasis::Bhat(p.clone()), Composition::single(n));
            assert_eq!(comm(&x), comm_bhat_closed_form(n, &p), "n={n}");
        }
    }
}

#[test]
fn omega_on_bhat() {
    let p = Params::symbolic();
    for n in 0..=5 {
        for a in Composition::all_of(n) {
            let x = NSymElem::basis_elem(NBasis::Bhat(p.clone()), a.clone());
            let expected = NSymElem::basis_elem(NBasis::Bhat(p.omega()), a.reversed());
            assert!(x.omega().equals(&expected), "{a}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn conversions_round_trip(a in composition(5), bi in 0usize..8, ti in 0usize..8) {
        let (from, to) = (bases()[bi].clone(), bases()[ti].clone());
        let x = NSymElem::basis_elem(from.clone(), a);
        let y = x.convert(&to).unwrap();
        prop_assert!(y.equals(&x));
        prop_assert_eq!(y.convert(&from).unwrap(), x);
    }

    #[test]
    fn native_products_match_h_route(a in composition(3), b in composition(3), bi in 0usize..8) {
        let basis = bases()[bi].clone();
        let x = NSymElem::basis_elem(basis.clone(), a);
        let y = NSymElem::basis_elem(basis, b);
        prop_assert!(x.mul(&y).unwrap().equals(&x.mul_via_h(&y).unwrap()));
    }

    #[test]
    fn comm_is_multiplicative(a in composition(4), b in composition(4), bi in 0usize..8) {
        let basis = bases()[bi].clone();
        let x = NSymElem::basis_elem(basis.clone(), a);
        let y = NSymElem::basis_elem(basis, b);
        prop_assert_eq!(comm(&x.mul(&y).unwrap()), comm(&x).mul(&comm(&y)));
    }

    #[test]
    fn omega_is_an_involutive_anti_automorphism(a in composition(4), b in composition(3)) {
        let x = NSymElem::basis_elem(NBasis::R, a);
        let y = NSymElem::basis_elem(NBasis::R, b);
        prop_assert!(x.mul(&y).unwrap().omega().equals(&y.omega().mul(&x.omega()).unwrap()));
        prop_assert!(x.omega().omega().equals(&x));
    }

    #[test]
    fn counit_picks_degree_zero(a in composition(5), bi in 0usize..8) {
        let x = NSymElem::basis_elem(bases()[bi].clone(), a.clone());
        let expected = if a.is_empty() { ScalarQT::one() } else { ScalarQT::zero() };
        prop_assert_eq!(x.counit(), expected);
    }
}
