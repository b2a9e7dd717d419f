use std::collections::BTreeMap;

use proptest::prelude::*;

use hopf_scf::combinatorics::{
    a_shuffle, comp_of_set, descent_representative, descent_set, permutations, set_of_comp, BitSet, Composition,
    SubsetLabel,
};
use hopf_scf::formal::{LinComb, TensorKey};
use hopf_scf::fqsym::{coproduct_f, product_f, project_pi, project_pi_tensor, FQSymElem};
use hopf_scf::qsym::{
    antipode_axiom_left, antipode_axiom_right, antipode_m, coproduct_l, coproduct_m, product_l, product_m, QBasis,
    QSymElem,
};
use hopf_scf::scalars::ScalarQT;

fn comp(parts: &[u32]) -> Composition {
    Composition::new(parts.to_vec()).unwrap()
}

fn composition(max: u32) -> impl Strategy<Value = Composition> {
    (0..=max).prop_flat_map(|n| {
        let all = Composition::all_of(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn bases() -> Vec<QBasis> {
    vec![QBasis::M, QBasis::L, QBasis::E, QBasis::Pi(2), QBasis::Pi(3), QBasis::Pi(5)]
}

/// Exponent vectors of `M_α` in `k` commuting variables.
fn monomials(alpha: &Composition, k: usize) -> BTreeMap<Vec<u32>, i64> {
    let mut out = BTreeMap::new();
    let l = alpha.len();
    for cols in hopf_scf::combinatorics::subsets_of_size(k as u32, l as u32) {
        let mut e = vec![0; k];
        for (p, c) in alpha.parts().iter().zip(cols.iter()) {
            e[c as usize - 1] = *p;
        }
        *out.entry(e).or_insert(0) += 1;
    }
    out
}

fn poly_mul(x: &BTreeMap<Vec<u32>, i64>, y: &BTreeMap<Vec<u32>, i64>) -> BTreeMap<Vec<u32>, i64> {
    let mut out = BTreeMap::new();
    for (a, ca) in x {
        for (b, cb) in y {
            let e: Vec<u32> = a.iter().zip(b).map(|(i, j)| i + j).collect();
            *out.entry(e).or_insert(0) += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn integer_coeffs(x: &LinComb<Composition>) -> BTreeMap<Composition, i64> {
    x.iter()
        .map(|(k, c)| {
            let r = c.as_rational().expect("rational coefficient");
            assert!(r.is_integer());
            (k.clone(), r.to_integer().try_into().unwrap())
        })
        .collect()
}

// M_α M_β evaluated in ℓ(α)+ℓ(β) variables determines the product, since every
// composition in its support has at most that many parts.
#[test]
fn monomial_product_matches_polynomial_evaluation() {
    for total in 0..=6u32 {
        for m in 0..=total {
            for a in Composition::all_of(m) {
                for b in Composition::all_of(total - m) {
                    let k = a.len() + b.len();
                    let lhs = poly_mul(&monomials(&a, k), &monomials(&b, k));
                    let mut rhs = BTreeMap::new();
                    for (g, c) in integer_coeffs(&product_m(&a, &b)) {
                        for (e, d) in monomials(&g, k) {
                            *rhs.entry(e).or_insert(0) += c * d;
                        }
                    }
                    rhs.retain(|_, c| *c != 0);
                    assert_eq!(lhs, rhs, "M_{a} M_{b}");
                }
            }
        }
    }
}

#[test]
fn fundamental_products_match_fqsym() {
    for total in 0..=7u32 {
        for m in 0..=total {
            let n = total - m;
            for i in SubsetLabel::all(m) {
                for j in SubsetLabel::all(n) {
                    let prod = product_f(&descent_representative(&i), &descent_representative(&j));
                    let projected = project_pi(&prod);
                    let direct = QSymElem::new(QBasis::L, product_l(&comp_of_set(&i), &comp_of_set(&j)));
                    assert_eq!(projected, direct, "I={i} J={j}");
                }
            }
        }
    }
}

// Each shuffle w of u and v[m] is recorded by the positions A of the letters of
// v; its descent set must be I ⧢_A J.
#[test]
fn a_shuffle_predicts_each_shuffle_descent_set() {
    for total in 1..=7u32 {
        for m in 0..=total {
            let n = total - m;
            for i in SubsetLabel::all(m) {
                for j in SubsetLabel::all(n) {
                    let (u, v) = (descent_representative(&i), descent_representative(&j));
                    for w in product_f(&u, &v).terms.keys() {
                        let a = BitSet::try_from_elems(
                            w.iter().enumerate().filter(|(_, &x)| x > m).map(|(p, _)| p as u32 + 1),
                        )
                        .unwrap();
                        assert_eq!(a_shuffle(&i, &j, a).unwrap(), descent_set(w), "I={i} J={j} w={w:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn fundamental_coproducts_match_fqsym() {
    for n in 0..=6u32 {
        for w in permutations(n) {
            let projected = project_pi_tensor(&coproduct_f(&w));
            let expected = coproduct_l(&comp_of_set(&descent_set(&w)));
            assert_eq!(projected.terms, expected, "w={w:?}");
        }
    }
}

#[test]
fn projection_is_multiplicative_on_arbitrary_permutations() {
    for (p, q) in [(2u32, 3u32), (3, 3), (1, 4), (4, 2)] {
        for u in permutations(p) {
            for v in permutations(q).into_iter().step_by(5) {
                let lhs = project_pi(&FQSymElem::f(u.clone()).mul(&FQSymElem::f(v.clone())));
                let rhs = project_pi(&FQSymElem::f(u.clone())).mul(&project_pi(&FQSymElem::f(v.clone()))).unwrap();
                assert!(lhs.equals(&rhs), "u={u:?} v={v:?}");
            }
        }
    }
}

#[test]
fn antipode_axioms_hold() {
    for n in 1..=6 {
        for a in Composition::all_of(n) {
            assert!(antipode_axiom_left(&a).is_zero(), "{a}");
            assert!(antipode_axiom_right(&a).is_zero(), "{a}");
        }
    }
    assert_eq!(antipode_axiom_left(&Composition::empty()), LinComb::single(Composition::empty(), ScalarQT::one()));
}

// S(L_α) = (-1)^{|α|} L_{(α^r)^c}.
#[test]
fn antipode_on_fundamentals() {
    for n in 0..=6 {
        for a in Composition::all_of(n) {
            let s = QSymElem::basis_elem(QBasis::L, a.clone()).antipode().unwrap();
            let sign = ScalarQT::from_int(if n % 2 == 0 { 1 } else { -1 });
            let expected = QSymElem::basis_elem(QBasis::L, a.reversed().complement()).scale(&sign);
            assert!(s.equals(&expected), "{a}");
        }
    }
}

#[test]
fn small_transitions() {
    // L_(1,1) = M_(1,1); L_(2) = M_(2) + M_(1,1).
    let l2 = QSymElem::basis_elem(QBasis::L, comp(&[2])).to_m();
    assert_eq!(l2.coeff(&comp(&[2])), ScalarQT::one());
    assert_eq!(l2.coeff(&comp(&[1, 1])), ScalarQT::one());
    let l11 = QSymElem::basis_elem(QBasis::L, comp(&[1, 1])).to_m();
    assert_eq!(l11.terms.len(), 1);
    // E_α sums over coarsenings.
    let e11 = QSymElem::basis_elem(QBasis::E, comp(&[1, 1])).to_m();
    assert_eq!(e11.coeff(&comp(&[2])), ScalarQT::one());
    assert_eq!(e11.coeff(&comp(&[1, 1])), ScalarQT::one());
}

fn tensor_mul(x: &LinComb<TensorKey>, y: &LinComb<TensorKey>) -> LinComb<TensorKey> {
    let mut out = LinComb::new();
    for ((a, b), c) in x {
        for ((d, e), f) in y {
            let left = product_m(a, d);
            let right = product_m(b, e);
            out.add_scaled(&hopf_scf::formal::tensor(&left, &right), &(c * f));
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn transitions_round_trip(a in composition(6), bi in 0usize..6) {
        let basis = bases()[bi];
        let x = QSymElem::basis_elem(basis, a.clone());
        prop_assert_eq!(x.to_m().convert(basis).unwrap(), x.clone());
        for target in bases() {
            prop_assert!(x.convert(target).unwrap().equals(&x));
        }
    }

    #[test]
    fn products_agree_across_bases(a in composition(4), b in composition(3), bi in 0usize..6) {
        let basis = bases()[bi];
        let x = QSymElem::basis_elem(basis, a);
        let y = QSymElem::basis_elem(basis, b);
        let direct = x.mul(&y).unwrap();
        let via_m = x.to_m().mul(&y.to_m()).unwrap();
        prop_assert!(direct.equals(&via_m));
        prop_assert!(direct.equals(&y.mul(&x).unwrap()));
    }

    #[test]
    fn coproduct_is_multiplicative(a in composition(3), b in composition(3)) {
        let lhs = product_m(&a, &b).flat_map(coproduct_m);
        let rhs = tensor_mul(&coproduct_m(&a), &coproduct_m(&b));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn antipode_is_an_involution(a in composition(6)) {
        let twice = antipode_m(&a).flat_map(antipode_m);
        prop_assert_eq!(twice, LinComb::single(a, ScalarQT::one()));
    }

    #[test]
    fn set_composition_bijection(a in composition(9)) {
        prop_assert_eq!(comp_of_set(&set_of_comp(&a)), a);
    }
}
