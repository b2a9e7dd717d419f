//! Free quasisymmetric functions on the basis `F_w`, `w` a permutation, and
//! the projection `π: F_w ↦ L_{comp(Des(w))}`.

use crate::combinatorics::{comp_of_set, descent_set, shifted_shuffle, standardize, Composition};
use crate::formal::LinComb;
use crate::qsym::{QBasis, QSymElem, QSymTensor};
use crate::scalars::ScalarQT;

pub type Word = Vec<u32>;

/// An element of FQSym in the `F` basis.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FQSymElem {
    pub terms: LinComb<Word>,
}

/// An element of FQSym ⊗ FQSym.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FQSymTensor {
    pub terms: LinComb<(Word, Word)>,
}

impl FQSymElem {
    pub fn f(w: Word) -> Self {
        FQSymElem { terms: LinComb::single(w, ScalarQT::one()) }
    }

    pub fn mul(&self, other: &FQSymElem) -> FQSymElem {
        let mut terms = LinComb::new();
        for (u, cu) in &self.terms {
            for (v, cv) in &other.terms {
                terms.add_scaled(&product_f(u, v).terms, &(cu * cv));
            }
        }
        FQSymElem { terms }
    }

    pub fn coproduct(&self) -> FQSymTensor {
        FQSymTensor { terms: self.terms.flat_map(|w| coproduct_f(w).terms) }
    }
}

/// `F_u F_v = Σ_{w ∈ u ⧢ v[m]} F_w` with `m = |u|`.
pub fn product_f(u: &[u32], v: &[u32]) -> FQSymElem {
    let terms =
        shifted_shuffle(u, v, u.len() as u32).into_iter().map(|(w, c)| (w, ScalarQT::from_int(c as i64))).collect();
    FQSymElem { terms }
}

/// `△F_w = Σ_k F_{std(w_1 ⋯ w_k)} ⊗ F_{std(w_{k+1} ⋯ w_n)}`.
pub fn coproduct_f(w: &[u32]) -> FQSymTensor {
    let terms = (0..=w.len()).map(|k| ((standardize(&w[..k]), standardize(&w[k..])), ScalarQT::one())).collect();
    FQSymTensor { terms }
}

fn descent_comp(w: &[u32]) -> Composition {
    comp_of_set(&descent_set(w))
}

/// `π(F_w) = L_{comp(Des(w))}`.
pub fn project_pi(x: &FQSymElem) -> QSymElem {
    QSymElem::new(QBasis::L, x.terms.map_keys(|w| descent_comp(w)))
}

/// `π ⊗ π`.
pub fn project_pi_tensor(x: &FQSymTensor) -> QSymTensor {
    QSymTensor { basis: QBasis::L, terms: x.terms.map_keys(|(l, r)| (descent_comp(l), descent_comp(r))) }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_example() {
        let p = product_f(&[1, 2], &[2, 1]);
        let words: Vec<Word> = p.terms.keys().cloned().collect();
        let expected: Vec<Word> = vec![
            vec![1, 2, 4, 3],
            vec![1, 4, 2, 3],
            vec![1, 4, 3, 2],
            vec![4, 1, 2, 3],
            vec![4, 1, 3, 2],
            vec![4, 3, 1, 2],
        ];
        assert_eq!(words, expected);
    }

    #[test]
    fn coproduct_example() {
        let d = coproduct_f(&[1, 3, 2]);
        let keys: Vec<(Word, Word)> = d.terms.keys().cloned().collect();
        assert_eq!(keys.len(), 4);
        assert!(keys.contains(&(vec![1], vec![2, 1])));
        assert!(keys.contains(&(vec![1, 2], vec![1])));
        assert!(keys.contains(&(vec![], vec![1, 3, 2])));
        assert!(keys.contains(&(vec![1, 3, 2], vec![])));
    }

    #[test]
    fn projection_reads_descents() {
        let x = project_pi(&FQSymElem::f(vec![1, 4, 3, 2]));
        assert_eq!(x, QSymElem::basis_elem(QBasis::L, Composition::new(vec![2, 1, 1]).unwrap()));
    }
}
