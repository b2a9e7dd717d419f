//! Finite linear combinations with [`ScalarQT`] coefficients.

use std::collections::btree_map::{self, Entry};
use std::collections::BTreeMap;

use crate::combinatorics::Composition;
use crate::scalars::ScalarQT;

/// A finite formal sum `Σ c_k · k` over ordered keys. Zero coefficients are
/// never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, ScalarQT>,
}

/// Keys of tensor-square elements.
pub type TensorKey = (Composition, Composition);

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(key: K, coeff: ScalarQT) -> Self {
        let mut out = Self::new();
        out.add_term(key, coeff);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, ScalarQT> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, ScalarQT> {
        self.terms.keys()
    }

    pub fn coeff(&self, key: &K) -> ScalarQT {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    pub fn get(&self, key: &K) -> Option<&ScalarQT> {
        self.terms.get(key)
    }

    pub fn add_term(&mut self, key: K, coeff: ScalarQT) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &LinComb<K>, c: &ScalarQT) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v * c);
        }
    }

    pub fn add(&self, other: &LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        out.add_scaled(other, &ScalarQT::one());
        out
    }

    pub fn sub(&self, other: &LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        out.add_scaled(other, &ScalarQT::from_int(-1));
        out
    }

    pub fn scale(&self, c: &ScalarQT) -> LinComb<K> {
        let mut out = LinComb::new();
        out.add_scaled(self, c);
        out
    }

    /// Apply `f` to every coefficient, dropping the ones that become zero.
    pub fn try_map_coeffs<E>(&self, mut f: impl FnMut(&ScalarQT) -> Result<ScalarQT, E>) -> Result<LinComb<K>, E> {
        let mut out = LinComb::new();
        for (k, v) in &self.terms {
            out.add_term(k.clone(), f(v)?);
        }
        Ok(out)
    }

    /// Linear extension of `f` on keys.
    pub fn flat_map<K2: Ord + Clone>(&self, mut f: impl FnMut(&K) -> LinComb<K2>) -> LinComb<K2> {
        let mut out = LinComb::new();
        for (k, v) in &self.terms {
            out.add_scaled(&f(k), v);
        }
        out
    }

    pub fn map_keys<K2: Ord + Clone>(&self, mut f: impl FnMut(&K) -> K2) -> LinComb<K2> {
        let mut out = LinComb::new();
        for (k, v) in &self.terms {
            out.add_term(f(k), v.clone());
        }
        out
    }
}

impl<K: Ord + Clone> FromIterator<(K, ScalarQT)> for LinComb<K> {
    fn from_iter<T: IntoIterator<Item = (K, ScalarQT)>>(iter: T) -> Self {
        let mut out = LinComb::new();
        for (k, v) in iter {
            out.add_term(k, v);
        }
        out
    }
}

impl<K: Ord> IntoIterator for LinComb<K> {
    type Item = (K, ScalarQT);
    type IntoIter = btree_map::IntoIter<K, ScalarQT>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<'a, K: Ord> IntoIterator for &'a LinComb<K> {
    type Item = (&'a K, &'a ScalarQT);
    type IntoIter = btree_map::Iter<'a, K, ScalarQT>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

/// `(Σ a_i x_i) ⊗ (Σ b_j y_j) = Σ a_i b_j (x_i, y_j)`.
pub fn tensor<K1: Ord + Clone, K2: Ord + Clone>(a: &LinComb<K1>, b: &LinComb<K2>) -> LinComb<(K1, K2)> {
    let mut out = LinComb::new();
    for (ka, va) in a {
        for (kb, vb) in b {
            out.add_term((ka.clone(), kb.clone()), va * vb);
        }
    }
    out
}

/// Bilinear extension of `f` to a tensor-square element.
pub fn tensor_map<K: Ord + Clone, K2: Ord + Clone>(
    x: &LinComb<(K, K)>,
    mut f: impl FnMut(&K) -> LinComb<K2>,
) -> LinComb<(K2, K2)> {
    let mut out = LinComb::new();
    for ((l, r), c) in x {
        out.add_scaled(&tensor(&f(l), &f(r)), c);
    }
    out
}
