use std::collections::BTreeMap;

use hopf_scf::charmap::{ch, ScfBasis, ScfElem};
use hopf_scf::combinatorics::{comp_of_set, subsets_of_size, BitSet, SubsetLabel};
use hopf_scf::group::{
    coproduct_k, coproduct_k_by_factoring, dot_chi, expand_dot_chi, expand_kappa, hall_inner, kappa, kappa_n,
    lattice_superclass_oracle, product_m, product_m_a, verify_axioms, ClassFunction, DenseTensor, GroupSpec,
};
use hopf_scf::qsym::{QBasis, QSymElem};
use hopf_scf::scalars::{int, Rational, ScalarQT};

fn set(elems: &[u32]) -> BitSet {
    BitSet::try_from_elems(elems.iter().copied()).unwrap()
}

#[test]
fn lattice_oracle_recovers_superclass_indicators() {
    for (nu, s) in [(2, set(&[1, 2])), (3, set(&[1, 2, 3])), (2, set(&[2, 5, 6])), (3, set(&[1, 4]))] {
        let spec = GroupSpec::new(nu, s).unwrap();
        for i in s.subsets() {
            assert_eq!(lattice_superclass_oracle(&spec, i).unwrap(), kappa(&spec, i).unwrap(), "{spec} I={i}");
        }
    }
}

#[test]
fn axioms_on_non_interval_index_sets() {
    for (nu, s) in [(2, set(&[1, 3, 4])), (3, set(&[2, 5])), (4, set(&[1, 2])), (5, set(&[3]))] {
        let spec = GroupSpec::new(nu, s).unwrap();
        let report = verify_axioms(&spec).unwrap();
        assert!(report.passed(), "{spec}: {:?}", report.first_failure());
    }
}

// ⟨κ_I, κ_I⟩ = |cl_I| / |G|, with |cl_I| counted element by element.
#[test]
fn kappa_norms_count_superclass_sizes() {
    for (nu, n) in [(2u32, 5u32), (3, 4), (5, 3)] {
        let spec = GroupSpec::q_n(nu, n).unwrap();
        for i in SubsetLabel::all(n) {
            let size = (0..spec.order()).filter(|&g| spec.support(g) == i.members()).count();
            let k = kappa_n(nu, &i).unwrap();
            let expected = Rational::new((size as i64).into(), (spec.order() as i64).into());
            assert_eq!(hall_inner(&k, &k).unwrap(), expected, "{spec} I={i}");
            let closed = num_traits::pow(int(nu as i64 - 1), i.len() as usize)
                / num_traits::pow(int(nu as i64), (n - 1) as usize);
            assert_eq!(expected, closed);
        }
    }
}

#[test]
fn basis_expansions_are_coordinate_maps() {
    let spec = GroupSpec::q_n(3, 4).unwrap();
    for i in SubsetLabel::all(4) {
        let k = kappa(&spec, i.members()).unwrap();
        assert_eq!(expand_kappa(&k).unwrap(), BTreeMap::from([(i.members(), int(1))]));
        let c = dot_chi(&spec, i.members()).unwrap();
        assert_eq!(expand_dot_chi(&c).unwrap(), BTreeMap::from([(i.members(), int(1))]));
    }
}

#[test]
fn products_are_sums_over_selectors() {
    for nu in [2, 3] {
        for (m, n) in [(2u32, 2u32), (1, 3), (3, 2)] {
            for i in SubsetLabel::all(m) {
                for j in SubsetLabel::all(n) {
                    let phi = kappa_n(nu, &i).unwrap();
                    let psi = kappa_n(nu, &j).unwrap();
                    let total = product_m(&phi, m, &psi, n).unwrap();
                    assert!(total.is_superclass_constant());
                    let mut acc = ClassFunction::zero(total.spec());
                    for a in subsets_of_size(m + n, n) {
                        acc.add_scaled(&product_m_a(&phi, m, &psi, n, a).unwrap(), &int(1)).unwrap();
                    }
                    assert_eq!(acc, total, "nu={nu} I={i} J={j}");
                }
            }
        }
    }
}

#[test]
fn coproduct_closed_form_matches_restriction() {
    for (nu, n) in [(2u32, 5u32), (3, 4)] {
        for i in SubsetLabel::all(n) {
            let phi = kappa_n(nu, &i).unwrap();
            for k in 0..=n {
                let closed = coproduct_k(&phi, n, k).unwrap();
                let (l, r) = coproduct_k_by_factoring(&phi, n, k).unwrap();
                let direct = DenseTensor { left_degree: k, right_degree: n - k, terms: vec![(l, r)] };
                assert_eq!(
                    closed.kappa_coefficients().unwrap(),
                    direct.kappa_coefficients().unwrap(),
                    "nu={nu} I={i} k={k}"
                );
            }
        }
    }
}

#[test]
fn characteristic_of_kappa() {
    for nu in [2u32, 3, 5] {
        for n in 0..=5 {
            for i in SubsetLabel::all(n) {
                let image = ch(&ScfElem::basis_elem(nu, ScfBasis::Kappa, i));
                let scale = ScalarQT::from_int((nu as i64 - 1).pow(i.len()));
                let expected = QSymElem::basis_elem(QBasis::Pi(nu), comp_of_set(&i)).scale(&scale);
                assert!(image.equals(&expected), "nu={nu} I={i}");
            }
        }
    }
}

#[test]
fn dense_round_trip_through_kappa() {
    let spec = GroupSpec::q_n(3, 4).unwrap();
    let phi = ClassFunction::from_fn(&spec, |g| int(g.iter().filter(|&&x| x != 0).count() as i64 * 2 - 1));
    let x = ScfElem::from_dense(&phi, 4).unwrap();
    assert_eq!(x.lower(4).unwrap(), phi);
}

#[test]
fn oversized_groups_are_rejected() {
    assert!(GroupSpec::q_n(2, 40).is_err());
    assert!(GroupSpec::q_n(1, 3).is_err());
}
