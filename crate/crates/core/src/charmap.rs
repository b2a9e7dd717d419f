//! The characteristic map `ch_ν: ⊕_n scf(𝒩_n(ν)) → QSym` and the check that
//! it intertwines `(𝐦, ▲)` with the Hopf structure of QSym.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::combinatorics::{comp_of_set, Composition, SubsetLabel};
use crate::error::Result;
use crate::formal::LinComb;
use crate::group::{
    coproduct_k, coproduct_k_by_factoring, dot_chi_n, expand_kappa, kappa_n, product_m, ClassFunction, DenseTensor,
    GroupSpec,
};
use crate::qsym::{l_to_m, pi_to_m, QBasis, QSymElem, QSymTensor};
use crate::scalars::{int, Rational, ScalarQT};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ScfBasis {
    /// `κ_I(ν)`.
    Kappa,
    /// `χ̇^I(ν)`.
    DotChi,
}

impl fmt::Display for ScfBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ScfBasis::Kappa => "kappa",
            ScfBasis::DotChi => "chi_dot",
        })
    }
}

/// A superclass function of mixed degree, kept symbolically. The degree of a
/// term is the ambient size of its label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScfElem {
    pub nu: u32,
    pub terms: BTreeMap<(ScfBasis, SubsetLabel), Rational>,
}

impl ScfElem {
    pub fn zero(nu: u32) -> Self {
        ScfElem { nu, terms: BTreeMap::new() }
    }

    pub fn basis_elem(nu: u32, basis: ScfBasis, label: SubsetLabel) -> Self {
        let mut out = ScfElem::zero(nu);
        out.add_term(basis, label, Rational::one());
        out
    }

    pub fn add_term(&mut self, basis: ScfBasis, label: SubsetLabel, c: Rational) {
        let entry = self.terms.entry((basis, label)).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(basis, label));
        }
    }

    /// The `κ`-expansion of a dense superclass function on `Q_n(ν)`.
    pub fn from_dense(phi: &ClassFunction, n: u32) -> Result<Self> {
        let mut out = ScfElem::zero(phi.spec().nu());
        for (i, c) in expand_kappa(phi)? {
            out.add_term(ScfBasis::Kappa, SubsetLabel::new(n, i)?, c);
        }
        Ok(out)
    }

    /// The degree-`n` part as a dense class function on `Q_n(ν)`.
    pub fn lower(&self, n: u32) -> Result<ClassFunction> {
        let mut acc = ClassFunction::zero(&GroupSpec::q_n(self.nu, n)?);
        for ((basis, label), c) in &self.terms {
            if label.ambient() != n {
                continue;
            }
            let f = match basis {
                ScfBasis::Kappa => kappa_n(self.nu, label)?,
                ScfBasis::DotChi => dot_chi_n(self.nu, label)?,
            };
            acc.add_scaled(&f, c)?;
        }
        Ok(acc)
    }
}

/// `ch_ν(κ_I) = (ν-1)^{|I|} Π(ν)_{comp(I)}` in `M`.
fn ch_kappa_m(nu: u32, label: &SubsetLabel) -> LinComb<Composition> {
    let scale = ScalarQT::from_rational(num_traits::pow(int(nu as i64 - 1), label.len() as usize));
    pi_to_m(&comp_of_set(label), nu).scale(&scale)
}

/// `ch_ν`, returned in `M`: `χ̇^I ↦ L_{comp(I)}`, `κ_I ↦ (ν-1)^{|I|} Π(ν)_{comp(I)}`.
pub fn ch(x: &ScfElem) -> QSymElem {
    let mut terms = LinComb::new();
    for ((basis, label), c) in &x.terms {
        let image = match basis {
            ScfBasis::Kappa => ch_kappa_m(x.nu, label),
            ScfBasis::DotChi => l_to_m(&comp_of_set(label)),
        };
        terms.add_scaled(&image, &ScalarQT::from_rational(c.clone()));
    }
    QSymElem::new(QBasis::M, terms)
}

/// `(ch ⊗ ch)` of a dense tensor of superclass functions, in `M ⊗ M`.
pub fn ch_tensor(x: &DenseTensor, nu: u32) -> Result<QSymTensor> {
    let mut terms = LinComb::new();
    for ((a, b), c) in x.kappa_coefficients()? {
        let l = ch_kappa_m(nu, &SubsetLabel::new(x.left_degree, a)?);
        let r = ch_kappa_m(nu, &SubsetLabel::new(x.right_degree, b)?);
        terms.add_scaled(&crate::formal::tensor(&l, &r), &ScalarQT::from_rational(c));
    }
    Ok(QSymTensor { basis: QBasis::M, terms })
}

/// All `(α, β)` with `α ⊙ β = γ`, empty compositions included.
pub fn near_concat_factorizations(gamma: &Composition) -> Vec<(Composition, Composition)> {
    let n = gamma.size();
    let mut out = Vec::new();
    for k in 0..=n {
        for a in Composition::all_of(k) {
            for b in Composition::all_of(n - k) {
                if a.near_concat(&b) == *gamma {
                    out.push((a.clone(), b));
                }
            }
        }
    }
    out
}

/// Outcome of [`verify_diagrams`].
#[derive(Clone, Debug, Default)]
pub struct DiagramReport {
    pub products_checked: usize,
    pub coproducts_checked: usize,
    pub failures: Vec<String>,
}

impl DiagramReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn basis_elements(nu: u32, n: u32) -> Vec<ScfElem> {
    let mut out = Vec::new();
    for label in SubsetLabel::all(n) {
        out.push(ScfElem::basis_elem(nu, ScfBasis::Kappa, label));
        out.push(ScfElem::basis_elem(nu, ScfBasis::DotChi, label));
    }
    out
}

fn describe(x: &ScfElem) -> String {
    x.terms.keys().map(|(b, l)| format!("{b}_{}", l.members())).collect::<Vec<_>>().join("+")
}

fn check_product(nu: u32, m: u32, x: &ScfElem, n: u32, y: &ScfElem) -> Result<Option<String>> {
    let dense = product_m(&x.lower(m)?, m, &y.lower(n)?, n)?;
    let lhs = ch(&ScfElem::from_dense(&dense, m + n)?);
    let rhs = ch(x).mul(&ch(y))?;
    Ok((lhs.terms != rhs.terms).then(|| format!("nu={nu}: ch(m({}, {})) != ch * ch", describe(x), describe(y))))
}

fn check_coproduct(nu: u32, n: u32, x: &ScfElem) -> Result<Option<String>> {
    let phi = x.lower(n)?;
    let mut lhs = LinComb::new();
    for k in 0..=n {
        let (l, r) = coproduct_k_by_factoring(&phi, n, k)?;
        let factored = DenseTensor { left_degree: k, right_degree: n - k, terms: vec![(l, r)] };
        let expanded = coproduct_k(&phi, n, k)?;
        if factored.kappa_coefficients()? != expanded.kappa_coefficients()? {
            return Ok(Some(format!("nu={nu}: two routes to coproduct_{k}({}) disagree", describe(x))));
        }
        lhs.add_scaled(&ch_tensor(&factored, nu)?.terms, &ScalarQT::one());
    }
    let rhs = ch(x).coproduct()?;
    Ok((lhs != rhs.terms).then(|| format!("nu={nu}: (ch ⊗ ch)(coproduct({})) != coproduct(ch)", describe(x))))
}

/// Check `ch ∘ 𝐦 = · ∘ (ch ⊗ ch)` on all pairs of basis elements with total
/// degree at most `max_degree`, and `(ch ⊗ ch) ∘ ▲ = △ ∘ ch` on all basis
/// elements of degree at most `max_degree`. Both bases `κ` and `χ̇` are used.
/// The group side is computed densely; `▲_k` is computed both by factoring
/// the restriction and by `κ`-expansion.
pub fn verify_diagrams(nu: u32, max_degree: u32) -> Result<DiagramReport> {
    let mut product_jobs = Vec::new();
    for total in 0..=max_degree {
        for m in 0..=total {
            let n = total - m;
            for x in basis_elements(nu, m) {
                for y in basis_elements(nu, n) {
                    product_jobs.push((m, x.clone(), n, y));
                }
            }
        }
    }
    let product_results: Vec<Option<String>> =
        product_jobs.par_iter().map(|(m, x, n, y)| check_product(nu, *m, x, *n, y)).collect::<Result<_>>()?;
    let coproduct_jobs: Vec<(u32, ScfElem)> =
        (0..=max_degree).flat_map(|n| basis_elements(nu, n).into_iter().map(move |x| (n, x))).collect();
    let coproduct_results: Vec<Option<String>> =
        coproduct_jobs.par_iter().map(|(n, x)| check_coproduct(nu, *n, x)).collect::<Result<_>>()?;
    Ok(DiagramReport {
        products_checked: product_results.len(),
        coproducts_checked: coproduct_results.len(),
        failures: product_results.into_iter().chain(coproduct_results).flatten().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ch_on_small_elements() {
        let x = ScfElem::basis_elem(3, ScfBasis::DotChi, SubsetLabel::empty(4));
        assert_eq!(ch(&x), QSymElem::basis_elem(QBasis::L, Composition::single(4)).to_m());
        let k = ScfElem::basis_elem(3, ScfBasis::Kappa, SubsetLabel::empty(4));
        assert_eq!(ch(&k), QSymElem::basis_elem(QBasis::Pi(3), Composition::single(4)).to_m());
    }

    #[test]
    fn near_concat_factorizations_of_132() {
        let g = Composition::new(vec![1, 3, 2]).unwrap();
        assert_eq!(near_concat_factorizations(&g).len(), 5);
    }

    #[test]
    fn diagrams_small() {
        let report = verify_diagrams(2, 3).unwrap();
        assert!(report.passed(), "{:?}", report.failures);
    }
}
