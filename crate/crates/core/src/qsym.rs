//! Quasisymmetric functions in the monomial basis `M`, the fundamental basis
//! `L`, the basis `E` and the superclass basis `Π(ν)`.
//!
//! Every transition is written against `M`. Basis labels are compositions;
//! internally the formulas run over split-point sets `I ⊆ [n-1]`.

use std::fmt;

use crate::combinatorics::{
    a_shuffle, comp_of_bits, overlapping_shuffles, set_of_comp, subsets_of_size, BitSet, Composition,
};
use crate::error::{Error, Result};
use crate::formal::{LinComb, TensorKey};
use crate::scalars::{int, Rational, ScalarQT};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QBasis {
    M,
    L,
    E,
    /// `Π(ν)` for an integer `ν ≥ 2`.
    Pi(u32),
}

impl QBasis {
    pub fn tag(&self) -> &'static str {
        match self {
            QBasis::M => "M",
            QBasis::L => "L",
            QBasis::E => "E",
            QBasis::Pi(_) => "Pi",
        }
    }

    pub fn nu(&self) -> Option<u32> {
        match self {
            QBasis::Pi(nu) => Some(*nu),
            _ => None,
        }
    }

    /// Parse a tag; `Pi` needs `nu`.
    pub fn from_tag(tag: &str, nu: Option<u32>) -> Result<Self> {
        match tag {
            "M" => Ok(QBasis::M),
            "L" | "F" => Ok(QBasis::L),
            "E" => Ok(QBasis::E),
            "Pi" | "PI" | "Π" => match nu {
                Some(nu) if nu >= 2 => Ok(QBasis::Pi(nu)),
                _ => Err(Error::MissingNu("Pi".into())),
            },
            other => Err(Error::UnknownBasis(other.to_string())),
        }
    }

    fn validate(&self) -> Result<()> {
        match self {
            QBasis::Pi(nu) if *nu < 2 => Err(Error::MissingNu("Pi".into())),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for QBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QBasis::Pi(nu) => write!(f, "Pi({nu})"),
            other => f.write_str(other.tag()),
        }
    }
}

/// An element of QSym written in a single basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSymElem {
    pub basis: QBasis,
    pub terms: LinComb<Composition>,
}

/// An element of QSym ⊗ QSym with both factors in one basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSymTensor {
    pub basis: QBasis,
    pub terms: LinComb<TensorKey>,
}

fn split(alpha: &Composition) -> (u32, BitSet) {
    let s = set_of_comp(alpha);
    (s.ambient(), s.members())
}

fn full(n: u32) -> BitSet {
    BitSet::range(n.saturating_sub(1))
}

fn sq(r: Rational) -> ScalarQT {
    ScalarQT::from_rational(r)
}

fn rpow(x: &Rational, e: u32) -> Rational {
    num_traits::pow(x.clone(), e as usize)
}

/// Integer-power table `x^0, ..., x^n`.
fn powers(x: &Rational, n: u32) -> Vec<Rational> {
    (0..=n).map(|e| rpow(x, e)).collect()
}

/// `L_{comp(K)} = Σ_{K ⊆ I} M_{comp(I)}`.
pub fn l_to_m(alpha: &Composition) -> LinComb<Composition> {
    let (n, k) = split(alpha);
    let free = full(n).difference(k);
    free.subsets().map(|s| (comp_of_bits(n, k.union(s)), ScalarQT::one())).collect()
}

/// `M_{comp(I)} = Σ_{I ⊆ K} (-1)^{|K ∖ I|} L_{comp(K)}`.
pub fn m_to_l(alpha: &Composition) -> LinComb<Composition> {
    let (n, i) = split(alpha);
    let free = full(n).difference(i);
    free.subsets()
        .map(|s| (comp_of_bits(n, i.union(s)), ScalarQT::from_int(if s.len() % 2 == 0 { 1 } else { -1 })))
        .collect()
}

/// `E_{comp(K)} = Σ_{I ⊆ K} M_{comp(I)}`.
pub fn e_to_m(alpha: &Composition) -> LinComb<Composition> {
    let (n, k) = split(alpha);
    k.subsets().map(|s| (comp_of_bits(n, s), ScalarQT::one())).collect()
}

/// `M_{comp(I)} = Σ_{K ⊆ I} (-1)^{|I ∖ K|} E_{comp(K)}`.
pub fn m_to_e(alpha: &Composition) -> LinComb<Composition> {
    let (n, i) = split(alpha);
    i.subsets()
        .map(|s| {
            let sign = if i.difference(s).len() % 2 == 0 { 1 } else { -1 };
            (comp_of_bits(n, s), ScalarQT::from_int(sign))
        })
        .collect()
}

/// `M_{comp(I)} = Σ_{J : I ∪ J = [n-1]} (-ν)^{|J ∖ I|} (ν-1)^{|I ∩ J|} Π(ν)_{comp(J)}`.
pub fn m_to_pi(alpha: &Composition, nu: u32) -> LinComb<Composition> {
    let (n, i) = split(alpha);
    let forced = full(n).difference(i);
    let neg_nu = powers(&-int(nu as i64), n);
    let nu_m1 = powers(&int(nu as i64 - 1), n);
    i.subsets()
        .map(|s| {
            let j = forced.union(s);
            let c = &neg_nu[forced.len() as usize] * &nu_m1[s.len() as usize];
            (comp_of_bits(n, j), sq(c))
        })
        .collect()
}

/// `Π(ν)_{comp(J)} = (1/(1-ν))^{|J|} Σ_{I ∩ J = ∅} ((ν-1)/ν)^{(n-1)-|I|} M_{comp(I)}`.
pub fn pi_to_m(alpha: &Composition, nu: u32) -> LinComb<Composition> {
    let (n, j) = split(alpha);
    let nu_r = int(nu as i64);
    let pre = rpow(&(int(1) / (int(1) - &nu_r)), j.len());
    let ratio = powers(&((&nu_r - int(1)) / &nu_r), n);
    let top = n.saturating_sub(1);
    full(n).difference(j).subsets().map(|i| (comp_of_bits(n, i), sq(&pre * &ratio[(top - i.len()) as usize]))).collect()
}

/// `L_{comp(I)} = Σ_J (-1)^{|J ∖ I|} (ν-1)^{|I ∩ J|} Π(ν)_{comp(J)}`.
pub fn l_to_pi(alpha: &Composition, nu: u32) -> LinComb<Composition> {
    let (n, i) = split(alpha);
    let nu_m1 = powers(&int(nu as i64 - 1), n);
    full(n)
        .subsets()
        .map(|j| {
            let sign = if j.difference(i).len() % 2 == 0 { int(1) } else { int(-1) };
            (comp_of_bits(n, j), sq(sign * &nu_m1[i.intersection(j).len() as usize]))
        })
        .collect()
}

/// `Π(ν)_{comp(J)} = Σ_I ν^{-(n-1)} (-1)^{|J ∖ I|} (ν-1)^{|(I ∪ J)^c|} L_{comp(I)}`.
pub fn pi_to_l(alpha: &Composition, nu: u32) -> LinComb<Composition> {
    let (n, j) = split(alpha);
    let f = full(n);
    let pre = int(1) / rpow(&int(nu as i64), n.saturating_sub(1));
    let nu_m1 = powers(&int(nu as i64 - 1), n);
    f.subsets()
        .map(|i| {
            let sign = if j.difference(i).len() % 2 == 0 { int(1) } else { int(-1) };
            let outside = f.difference(i.union(j)).len();
            (comp_of_bits(n, i), sq(sign * &pre * &nu_m1[outside as usize]))
        })
        .collect()
}

/// Expansion of one basis element in `M`.
pub fn basis_to_m(basis: QBasis, alpha: &Composition) -> LinComb<Composition> {
    match basis {
        QBasis::M => LinComb::single(alpha.clone(), ScalarQT::one()),
        QBasis::L => l_to_m(alpha),
        QBasis::E => e_to_m(alpha),
        QBasis::Pi(nu) => pi_to_m(alpha, nu),
    }
}

/// Expansion of `M_α` in `basis`.
pub fn m_to_basis(basis: QBasis, alpha: &Composition) -> LinComb<Composition> {
    match basis {
        QBasis::M => LinComb::single(alpha.clone(), ScalarQT::one()),
        QBasis::L => m_to_l(alpha),
        QBasis::E => m_to_e(alpha),
        QBasis::Pi(nu) => m_to_pi(alpha, nu),
    }
}

impl QSymElem {
    pub fn zero(basis: QBasis) -> Self {
        QSymElem { basis, terms: LinComb::new() }
    }

    pub fn one(basis: QBasis) -> Self {
        QSymElem::basis_elem(basis, Composition::empty())
    }

    pub fn basis_elem(basis: QBasis, alpha: Composition) -> Self {
        QSymElem { basis, terms: LinComb::single(alpha, ScalarQT::one()) }
    }

    pub fn new(basis: QBasis, terms: LinComb<Composition>) -> Self {
        QSymElem { basis, terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn coeff(&self, alpha: &Composition) -> ScalarQT {
        self.terms.coeff(alpha)
    }

    /// Rewrite in `target`, passing through `M`.
    pub fn convert(&self, target: QBasis) -> Result<QSymElem> {
        self.basis.validate()?;
        target.validate()?;
        if self.basis == target {
            return Ok(self.clone());
        }
        let in_m = self.terms.flat_map(|a| basis_to_m(self.basis, a));
        Ok(QSymElem { basis: target, terms: in_m.flat_map(|a| m_to_basis(target, a)) })
    }

    pub fn to_m(&self) -> QSymElem {
        self.convert(QBasis::M).expect("source basis is valid")
    }

    pub fn add(&self, other: &QSymElem) -> Result<QSymElem> {
        let other = other.convert(self.basis)?;
        Ok(QSymElem { basis: self.basis, terms: self.terms.add(&other.terms) })
    }

    pub fn sub(&self, other: &QSymElem) -> Result<QSymElem> {
        let other = other.convert(self.basis)?;
        Ok(QSymElem { basis: self.basis, terms: self.terms.sub(&other.terms) })
    }

    pub fn scale(&self, c: &ScalarQT) -> QSymElem {
        QSymElem { basis: self.basis, terms: self.terms.scale(c) }
    }

    /// Product, returned in the basis of `self`. `L` multiplies natively by
    /// `A`-shuffles; every other basis goes through `M`.
    pub fn mul(&self, other: &QSymElem) -> Result<QSymElem> {
        if self.basis == QBasis::L && other.basis == QBasis::L {
            let mut terms = LinComb::new();
            for (a, ca) in &self.terms {
                for (b, cb) in &other.terms {
                    terms.add_scaled(&product_l(a, b), &(ca * cb));
                }
            }
            return Ok(QSymElem { basis: QBasis::L, terms });
        }
        let x = self.convert(QBasis::M)?;
        let y = other.convert(QBasis::M)?;
        let mut terms = LinComb::new();
        for (a, ca) in &x.terms {
            for (b, cb) in &y.terms {
                terms.add_scaled(&product_m(a, b), &(ca * cb));
            }
        }
        QSymElem { basis: QBasis::M, terms }.convert(self.basis)
    }

    /// Coproduct in the basis of `self`; `M` and `L` are native.
    pub fn coproduct(&self) -> Result<QSymTensor> {
        self.basis.validate()?;
        match self.basis {
            QBasis::M => Ok(QSymTensor { basis: QBasis::M, terms: self.terms.flat_map(coproduct_m) }),
            QBasis::L => Ok(QSymTensor { basis: QBasis::L, terms: self.terms.flat_map(coproduct_l) }),
            b => {
                let m = self.to_m().coproduct()?;
                m.convert(b)
            }
        }
    }

    /// Counit: the coefficient of the empty composition.
    pub fn counit(&self) -> ScalarQT {
        self.terms.coeff(&Composition::empty())
    }

    /// Antipode, computed in `M` and returned in the basis of `self`.
    pub fn antipode(&self) -> Result<QSymElem> {
        let m = self.to_m();
        QSymElem { basis: QBasis::M, terms: m.terms.flat_map(antipode_m) }.convert(self.basis)
    }

    /// Equality as elements of QSym, independent of basis.
    pub fn equals(&self, other: &QSymElem) -> bool {
        self.to_m().terms == other.to_m().terms
    }
}

impl QSymTensor {
    pub fn convert(&self, target: QBasis) -> Result<QSymTensor> {
        self.basis.validate()?;
        target.validate()?;
        if self.basis == target {
            return Ok(self.clone());
        }
        let src = self.basis;
        let in_m = crate::formal::tensor_map(&self.terms, |a| basis_to_m(src, a));
        Ok(QSymTensor { basis: target, terms: crate::formal::tensor_map(&in_m, |a| m_to_basis(target, a)) })
    }

    pub fn to_m(&self) -> QSymTensor {
        self.convert(QBasis::M).expect("source basis is valid")
    }

    pub fn equals(&self, other: &QSymTensor) -> bool {
        self.to_m().terms == other.to_m().terms
    }
}

/// `M_α M_β = Σ_γ e^γ_{α,β} M_γ` over overlapping shuffles.
pub fn product_m(alpha: &Composition, beta: &Composition) -> LinComb<Composition> {
    overlapping_shuffles(alpha, beta).into_iter().map(|(g, c)| (g, ScalarQT::from_int(c as i64))).collect()
}

/// `L_{comp(I)} L_{comp(J)} = Σ_{A ∈ binom([m+n], n)} L_{comp(I ⧢_A J)}`.
pub fn product_l(alpha: &Composition, beta: &Composition) -> LinComb<Composition> {
    let i = set_of_comp(alpha);
    let j = set_of_comp(beta);
    let (m, n) = (i.ambient(), j.ambient());
    let mut out = LinComb::new();
    for a in subsets_of_size(m + n, n) {
        let s = a_shuffle(&i, &j, a).expect("selector has the right size");
        out.add_term(crate::combinatorics::comp_of_set(&s), ScalarQT::one());
    }
    out
}

/// Deconcatenation `△M_α = Σ_{β·γ = α} M_β ⊗ M_γ`.
pub fn coproduct_m(alpha: &Composition) -> LinComb<TensorKey> {
    let p = alpha.parts();
    (0..=p.len())
        .map(|i| {
            let l = Composition::new(p[..i].to_vec()).expect("parts are positive");
            let r = Composition::new(p[i..].to_vec()).expect("parts are positive");
            ((l, r), ScalarQT::one())
        })
        .collect()
}

/// `△L_{comp(I)} = Σ_{k=0}^{n} L_{comp(I ∩ [k-1])} ⊗ L_{comp((I ∩ [k+1, n-1]) - k)}`,
/// i.e. the sum over `α·β = γ` and `α ⊙ β = γ`.
pub fn coproduct_l(gamma: &Composition) -> LinComb<TensorKey> {
    let s = set_of_comp(gamma);
    let n = s.ambient();
    if n == 0 {
        return LinComb::single((Composition::empty(), Composition::empty()), ScalarQT::one());
    }
    let i = s.members();
    let mut out = LinComb::new();
    for k in 0..=n {
        let (l, r) = match k {
            0 => (Composition::empty(), gamma.clone()),
            k if k == n => (gamma.clone(), Composition::empty()),
            k => {
                let left = i.intersection(BitSet::range(k.saturating_sub(1)));
                let right = i.intersection(BitSet::interval(k + 1, n - 1)).shift_down(k);
                (comp_of_bits(k, left), comp_of_bits(n - k, right))
            }
        };
        out.add_term((l, r), ScalarQT::one());
    }
    out
}

/// `S(M_α) = (-1)^{ℓ(α)} Σ_γ M_γ` over the coarsenings `γ` of `α^r`.
pub fn antipode_m(alpha: &Composition) -> LinComb<Composition> {
    let rev = alpha.reversed();
    let (n, r) = split(&rev);
    let sign = if alpha.len().is_multiple_of(2) { 1 } else { -1 };
    r.subsets().map(|s| (comp_of_bits(n, s), ScalarQT::from_int(sign))).collect()
}

/// `m ∘ (S ⊗ id) ∘ △` applied to `M_α`, in `M`.
pub fn antipode_axiom_left(alpha: &Composition) -> LinComb<Composition> {
    let mut out = LinComb::new();
    for ((l, r), c) in &coproduct_m(alpha) {
        for (g, cg) in &antipode_m(l) {
            out.add_scaled(&product_m(g, r), &(c * cg));
        }
    }
    out
}

/// `m ∘ (id ⊗ S) ∘ △` applied to `M_α`, in `M`.
pub fn antipode_axiom_right(alpha: &Composition) -> LinComb<Composition> {
    let mut out = LinComb::new();
    for ((l, r), c) in &coproduct_m(alpha) {
        for (g, cg) in &antipode_m(r) {
            out.add_scaled(&product_m(l, g), &(c * cg));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(p: &[u32]) -> Composition {
        Composition::new(p.to_vec()).unwrap()
    }

    fn one() -> ScalarQT {
        ScalarQT::one()
    }

    #[test]
    fn small_products() {
        let l1 = QSymElem::basis_elem(QBasis::L, c(&[1]));
        let p = l1.mul(&l1).unwrap();
        let want: LinComb<_> = [(c(&[1, 1]), one()), (c(&[2]), one())].into_iter().collect();
        assert_eq!(p.terms, want);
        let m1 = QSymElem::basis_elem(QBasis::M, c(&[1]));
        let p = m1.mul(&m1).unwrap();
        let want: LinComb<_> = [(c(&[1, 1]), ScalarQT::from_int(2)), (c(&[2]), one())].into_iter().collect();
        assert_eq!(p.terms, want);
    }

    #[test]
    fn m_coproduct_deconcatenates() {
        let d = coproduct_m(&c(&[1, 2]));
        assert_eq!(d.len(), 3);
        assert!(d.get(&(c(&[1]), c(&[2]))).is_some());
        assert!(d.get(&(Composition::empty(), c(&[1, 2]))).is_some());
    }

    #[test]
    fn l_coproduct_contains_near_concatenation() {
        let d = coproduct_l(&c(&[1, 3, 2]));
        assert_eq!(d.coeff(&(c(&[1, 2]), c(&[1, 2]))), one());
        assert_eq!(d.len(), 7);
    }

    #[test]
    fn l_of_single_part_sums_all_m() {
        for n in 1..=4 {
            let x = l_to_m(&Composition::single(n));
            assert_eq!(x.len(), 1 << (n - 1));
        }
    }

    #[test]
    fn pi_m_small_case() {
        // n = 2, ν = 2: M_(1,1) = Π_(2) + Π_(1,1) and M_(2) = -2 Π_(1,1).
        let x = m_to_pi(&c(&[1, 1]), 2);
        assert_eq!(x.coeff(&c(&[2])), one());
        assert_eq!(x.coeff(&c(&[1, 1])), one());
        let y = m_to_pi(&c(&[2]), 2);
        assert_eq!(y.coeff(&c(&[1, 1])), ScalarQT::from_int(-2));
        assert_eq!(y.len(), 1);
    }

    #[test]
    fn antipode_of_single_part() {
        let s = antipode_m(&c(&[3]));
        assert_eq!(s, LinComb::single(c(&[3]), ScalarQT::from_int(-1)));
        assert_eq!(antipode_m(&Composition::empty()), LinComb::single(Composition::empty(), one()));
    }
}
