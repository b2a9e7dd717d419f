//! Noncommutative symmetric functions in the complete basis `H`, the bases
//! `Λ`, `R`, `E*`, and the two-parameter bases `𝓑(a,b)` and `𝓑̂(a,b)`.
//!
//! Every transition is written against `H`. `𝓑` and `𝓑̂` carry their
//! parameters, so specializations and formal substitutions such as
//! `(a, b) = (-Q, Q-1)` are ordinary bases.

use std::fmt;

use crate::combinatorics::{
    comp_of_bits, preshuffle, run_markers, set_of_comp, subsets_of_size, BitSet, Composition, RunDecomposition,
    RunMarkers, SubsetLabel,
};
use crate::error::{Error, Result};
use crate::formal::{tensor, tensor_map, LinComb, TensorKey};
use crate::qsym::{QBasis, QSymElem};
use crate::scalars::ScalarQT;

/// The parameters `(a, b)` of `𝓑(a,b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Params {
    pub a: ScalarQT,
    pub b: ScalarQT,
}

impl Params {
    pub fn new(a: ScalarQT, b: ScalarQT) -> Self {
        Params { a, b }
    }

    /// The generic parameters `(q, t)`.
    pub fn symbolic() -> Self {
        Params { a: ScalarQT::q(), b: ScalarQT::t() }
    }

    pub fn ints(a: i64, b: i64) -> Self {
        Params { a: ScalarQT::from_int(a), b: ScalarQT::from_int(b) }
    }

    pub fn is_symbolic(&self) -> bool {
        *self == Params::symbolic()
    }

    /// `(-a, a+b)`, the parameters after `ω`.
    pub fn omega(&self) -> Self {
        Params { a: -&self.a, b: &self.a + &self.b }
    }

    fn check_invertible(&self) -> Result<()> {
        if self.a.is_zero() {
            return Err(Error::InvalidArgument("B(a, b) is not a basis when a = 0".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NBasis {
    H,
    Lambda,
    R,
    Estar,
    B(Params),
    Bhat(Params),
}

impl NBasis {
    pub fn tag(&self) -> &'static str {
        match self {
            NBasis::H => "H",
            NBasis::Lambda => "Lambda",
            NBasis::R => "R",
            NBasis::Estar => "Estar",
            NBasis::B(_) => "B",
            NBasis::Bhat(_) => "Bhat",
        }
    }

    /// Parse a tag; `B` and `Bhat` get the symbolic parameters `(q, t)`.
    pub fn from_tag(tag: &str) -> Result<Self> {
        Ok(match tag {
            "H" => NBasis::H,
            "Lambda" | "Λ" => NBasis::Lambda,
            "R" => NBasis::R,
            "Estar" | "E*" => NBasis::Estar,
            "B" => NBasis::B(Params::symbolic()),
            "Bhat" => NBasis::Bhat(Params::symbolic()),
            other => return Err(Error::UnknownBasis(other.to_string())),
        })
    }

    pub fn params(&self) -> Option<&Params> {
        match self {
            NBasis::B(p) | NBasis::Bhat(p) => Some(p),
            _ => None,
        }
    }
}

impl fmt::Display for NBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.params() {
            Some(p) if !p.is_symbolic() => write!(f, "{}({}, {})", self.tag(), p.a, p.b),
            _ => f.write_str(self.tag()),
        }
    }
}

/// An element of NSym written in a single basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NSymElem {
    pub basis: NBasis,
    pub terms: LinComb<Composition>,
}

/// An element of NSym ⊗ NSym with both factors in one basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NSymTensor {
    pub basis: NBasis,
    pub terms: LinComb<TensorKey>,
}

fn split(alpha: &Composition) -> (u32, BitSet) {
    let s = set_of_comp(alpha);
    (s.ambient(), s.members())
}

fn full(n: u32) -> BitSet {
    BitSet::range(n.saturating_sub(1))
}

fn sign(e: u32) -> ScalarQT {
    ScalarQT::from_int(if e.is_multiple_of(2) { 1 } else { -1 })
}

fn powers(x: &ScalarQT, n: u32) -> Vec<ScalarQT> {
    let mut v = vec![ScalarQT::one()];
    for i in 1..=n as usize {
        let next = &v[i - 1] * x;
        v.push(next);
    }
    v
}

/// `Λ_{comp(S)} = Σ_{S ⊆ J} (-1)^{(n-1)-|J|} H_{comp(J)}`.
pub fn lambda_to_h(alpha: &Composition) -> LinComb<Composition> {
    let (n, s) = split(alpha);
    let top = n.saturating_sub(1);
    full(n)
        .difference(s)
        .subsets()
        .map(|x| {
            let j = s.union(x);
            (comp_of_bits(n, j), sign(top - j.len()))
        })
        .collect()
}

/// `H_{comp(J)} = (-1)^{(n-1)-|J|} Σ_{J ⊆ S} (-1)^{|S ∖ J|} Λ_{comp(S)}`.
pub fn h_to_lambda(alpha: &Composition) -> LinComb<Composition> {
    let (n, j) = split(alpha);
    let top = n.saturating_sub(1);
    full(n).difference(j).subsets().map(|x| (comp_of_bits(n, j.union(x)), sign(top - j.len() + x.len()))).collect()
}

/// `R_{comp(K)} = Σ_{J ⊆ K} (-1)^{|K ∖ J|} H_{comp(J)}`.
pub fn r_to_h(alpha: &Composition) -> LinComb<Composition> {
    let (n, k) = split(alpha);
    k.subsets().map(|j| (comp_of_bits(n, j), sign(k.len() - j.len()))).collect()
}

/// `H_{comp(K)} = Σ_{J ⊆ K} R_{comp(J)}`.
pub fn h_to_r(alpha: &Composition) -> LinComb<Composition> {
    let (n, k) = split(alpha);
    k.subsets().map(|j| (comp_of_bits(n, j), ScalarQT::one())).collect()
}

/// `E*_{comp(S)} = Σ_{S ⊆ J} (-1)^{|J| - |S|} H_{comp(J)}`.
pub fn estar_to_h(alpha: &Composition) -> LinComb<Composition> {
    let (n, s) = split(alpha);
    full(n).difference(s).subsets().map(|x| (comp_of_bits(n, s.union(x)), sign(x.len()))).collect()
}

/// `H_{comp(J)} = Σ_{J ⊆ S} E*_{comp(S)}`.
pub fn h_to_estar(alpha: &Composition) -> LinComb<Composition> {
    let (n, j) = split(alpha);
    full(n).difference(j).subsets().map(|x| (comp_of_bits(n, j.union(x)), ScalarQT::one())).collect()
}

/// `𝓑(a,b)_{comp(I)} = Σ_{J : I ∪ J = [n-1]} a^{|I ∖ J|} b^{|I ∩ J|} H_{comp(J)}`.
pub fn b_to_h(alpha: &Composition, p: &Params) -> LinComb<Composition> {
    let (n, i) = split(alpha);
    let forced = full(n).difference(i);
    let pa = powers(&p.a, i.len());
    let pb = powers(&p.b, i.len());
    i.subsets()
        .map(|s| {
            let c = &pa[(i.len() - s.len()) as usize] * &pb[s.len() as usize];
            (comp_of_bits(n, forced.union(s)), c)
        })
        .collect()
}

/// `H_{comp(I)} = Σ_{J : I ∩ J = ∅} a^{|I|-(n-1)} (-b)^{(n-1)-|I|-|J|} 𝓑(a,b)_{comp(J)}`.
pub fn h_to_b(alpha: &Composition, p: &Params) -> Result<LinComb<Composition>> {
    p.check_invertible()?;
    let (n, i) = split(alpha);
    let top = n.saturating_sub(1);
    let pre = p.a.powi(i.len() as i32 - top as i32)?;
    let neg_b = powers(&-&p.b, top);
    Ok(full(n)
        .difference(i)
        .subsets()
        .map(|j| (comp_of_bits(n, j), &pre * &neg_b[(top - i.len() - j.len()) as usize]))
        .collect())
}

/// `𝓑̂(a,b)_α = 𝓑(a,b)_{α^c}` in `H`.
pub fn bhat_to_h(alpha: &Composition, p: &Params) -> LinComb<Composition> {
    b_to_h(&alpha.complement(), p)
}

/// `H_α` in `𝓑̂(a,b)`.
pub fn h_to_bhat(alpha: &Composition, p: &Params) -> Result<LinComb<Composition>> {
    Ok(h_to_b(alpha, p)?.map_keys(Composition::complement))
}

/// Expansion of one basis element in `H`.
pub fn basis_to_h(basis: &NBasis, alpha: &Composition) -> LinComb<Composition> {
    match basis {
        NBasis::H => LinComb::single(alpha.clone(), ScalarQT::one()),
        NBasis::Lambda => lambda_to_h(alpha),
        NBasis::R => r_to_h(alpha),
        NBasis::Estar => estar_to_h(alpha),
        NBasis::B(p) => b_to_h(alpha, p),
        NBasis::Bhat(p) => bhat_to_h(alpha, p),
    }
}

/// Expansion of `H_α` in `basis`.
pub fn h_to_basis(basis: &NBasis, alpha: &Composition) -> Result<LinComb<Composition>> {
    Ok(match basis {
        NBasis::H => LinComb::single(alpha.clone(), ScalarQT::one()),
        NBasis::Lambda => h_to_lambda(alpha),
        NBasis::R => h_to_r(alpha),
        NBasis::Estar => h_to_estar(alpha),
        NBasis::B(p) => h_to_b(alpha, p)?,
        NBasis::Bhat(p) => h_to_bhat(alpha, p)?,
    })
}

fn try_flat_map(
    x: &LinComb<Composition>,
    mut f: impl FnMut(&Composition) -> Result<LinComb<Composition>>,
) -> Result<LinComb<Composition>> {
    let mut out = LinComb::new();
    for (k, c) in x {
        out.add_scaled(&f(k)?, c);
    }
    Ok(out)
}

/// `△H_α = ∏_i Σ_{a+b=α_i} H_a ⊗ H_b`, with `H_0 = 1`.
pub fn coproduct_h(alpha: &Composition) -> LinComb<TensorKey> {
    let mut acc: LinComb<(Vec<u32>, Vec<u32>)> = LinComb::single((Vec::new(), Vec::new()), ScalarQT::one());
    for &part in alpha.parts() {
        let mut next = LinComb::new();
        for ((l, r), c) in &acc {
            for a in 0..=part {
                let (mut l2, mut r2) = (l.clone(), r.clone());
                if a > 0 {
                    l2.push(a);
                }
                if part > a {
                    r2.push(part - a);
                }
                next.add_term((l2, r2), c.clone());
            }
        }
        acc = next;
    }
    acc.map_keys(|(l, r)| {
        (Composition::new(l.clone()).expect("positive parts"), Composition::new(r.clone()).expect("positive parts"))
    })
}

impl NSymElem {
    pub fn zero(basis: NBasis) -> Self {
        NSymElem { basis, terms: LinComb::new() }
    }

    pub fn one(basis: NBasis) -> Self {
        NSymElem::basis_elem(basis, Composition::empty())
    }

    pub fn basis_elem(basis: NBasis, alpha: Composition) -> Self {
        NSymElem { basis, terms: LinComb::single(alpha, ScalarQT::one()) }
    }

    pub fn new(basis: NBasis, terms: LinComb<Composition>) -> Self {
        NSymElem { basis, terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn coeff(&self, alpha: &Composition) -> ScalarQT {
        self.terms.coeff(alpha)
    }

    pub fn to_h(&self) -> NSymElem {
        NSymElem { basis: NBasis::H, terms: self.terms.flat_map(|a| basis_to_h(&self.basis, a)) }
    }

    /// Rewrite in `target`, passing through `H`.
    pub fn convert(&self, target: &NBasis) -> Result<NSymElem> {
        if self.basis == *target {
            return Ok(self.clone());
        }
        let h = self.to_h();
        Ok(NSymElem { basis: target.clone(), terms: try_flat_map(&h.terms, |a| h_to_basis(target, a))? })
    }

    pub fn add(&self, other: &NSymElem) -> Result<NSymElem> {
        let other = other.convert(&self.basis)?;
        Ok(NSymElem { basis: self.basis.clone(), terms: self.terms.add(&other.terms) })
    }

    pub fn sub(&self, other: &NSymElem) -> Result<NSymElem> {
        let other = other.convert(&self.basis)?;
        Ok(NSymElem { basis: self.basis.clone(), terms: self.terms.sub(&other.terms) })
    }

    pub fn scale(&self, c: &ScalarQT) -> NSymElem {
        NSymElem { basis: self.basis.clone(), terms: self.terms.scale(c) }
    }

    /// Product, returned in the basis of `self`. `H` and `𝓑̂` multiply by
    /// concatenation and `𝓑` by near-concatenation when both factors share
    /// the basis; everything else goes through `H`.
    pub fn mul(&self, other: &NSymElem) -> Result<NSymElem> {
        let native: Option<fn(&Composition, &Composition) -> Composition> = match (&self.basis, &other.basis) {
            (NBasis::H, NBasis::H) => Some(Composition::concat),
            (NBasis::B(p), NBasis::B(r)) if p == r => Some(Composition::near_concat),
            (NBasis::Bhat(p), NBasis::Bhat(r)) if p == r => Some(Composition::concat),
            _ => None,
        };
        if let Some(op) = native {
            return Ok(NSymElem { basis: self.basis.clone(), terms: mul_keys(&self.terms, &other.terms, op) });
        }
        self.mul_via_h(other)?.convert(&self.basis)
    }

    /// Product computed in `H`, returned in `H`.
    pub fn mul_via_h(&self, other: &NSymElem) -> Result<NSymElem> {
        let x = self.to_h();
        let y = other.to_h();
        Ok(NSymElem { basis: NBasis::H, terms: mul_keys(&x.terms, &y.terms, Composition::concat) })
    }

    /// Coproduct computed in `H` and rewritten in the basis of `self`.
    pub fn coproduct(&self) -> Result<NSymTensor> {
        let h = self.to_h();
        NSymTensor { basis: NBasis::H, terms: h.terms.flat_map(coproduct_h) }.convert(&self.basis)
    }

    /// Counit: the coefficient of the empty composition.
    pub fn counit(&self) -> ScalarQT {
        self.terms.coeff(&Composition::empty())
    }

    /// `ω`, returned in `H`.
    pub fn omega(&self) -> NSymElem {
        let h = self.to_h();
        NSymElem { basis: NBasis::H, terms: h.terms.flat_map(|a| lambda_to_h(&a.reversed())) }
    }

    /// Equality as elements of NSym, independent of basis.
    pub fn equals(&self, other: &NSymElem) -> bool {
        self.to_h().terms == other.to_h().terms
    }
}

fn mul_keys(
    x: &LinComb<Composition>,
    y: &LinComb<Composition>,
    op: impl Fn(&Composition, &Composition) -> Composition,
) -> LinComb<Composition> {
    let mut out = LinComb::new();
    for (a, ca) in x {
        for (b, cb) in y {
            out.add_term(op(a, b), ca * cb);
        }
    }
    out
}

impl NSymTensor {
    pub fn to_h(&self) -> NSymTensor {
        NSymTensor { basis: NBasis::H, terms: tensor_map(&self.terms, |a| basis_to_h(&self.basis, a)) }
    }

    pub fn convert(&self, target: &NBasis) -> Result<NSymTensor> {
        if self.basis == *target {
            return Ok(self.clone());
        }
        let h = self.to_h();
        let mut cache = std::collections::BTreeMap::new();
        let mut expand = |a: &Composition| -> Result<LinComb<Composition>> {
            if let Some(v) = cache.get(a) {
                return Ok(LinComb::clone(v));
            }
            let v = h_to_basis(target, a)?;
            cache.insert(a.clone(), v.clone());
            Ok(v)
        };
        let mut out = LinComb::new();
        for ((l, r), c) in &h.terms {
            out.add_scaled(&tensor(&expand(l)?, &expand(r)?), c);
        }
        Ok(NSymTensor { basis: target.clone(), terms: out })
    }

    pub fn equals(&self, other: &NSymTensor) -> bool {
        self.to_h().terms == other.to_h().terms
    }
}

/// The pairing `⟨H_α, M_β⟩ = δ_{α,β}`, extended bilinearly.
pub fn pairing(f: &NSymElem, x: &QSymElem) -> Result<ScalarQT> {
    let h = f.to_h();
    let m = x.convert(QBasis::M)?;
    let mut acc = ScalarQT::zero();
    for (a, c) in &h.terms {
        if let Some(d) = m.terms.get(a) {
            acc += &(c * d);
        }
    }
    Ok(acc)
}

/// `⟨Σ c H_α ⊗ H_β, x ⊗ y⟩` for `x`, `y` given in `M`.
pub fn pairing_tensor(f: &NSymTensor, x: &LinComb<Composition>, y: &LinComb<Composition>) -> ScalarQT {
    let h = f.to_h();
    let mut acc = ScalarQT::zero();
    for ((l, r), c) in &h.terms {
        if let (Some(a), Some(b)) = (x.get(l), y.get(r)) {
            acc += &(&(c * a) * b);
        }
    }
    acc
}

/// `𝓑(q,t)*_{comp(I)} = Σ_{J : I ∩ J = ∅} q^{|J|-(n-1)} (-t)^{(n-1)-|I|-|J|} M_{comp(J)}`,
/// the dual basis in QSym, for general parameters.
pub fn b_dual_to_m(alpha: &Composition, p: &Params) -> Result<LinComb<Composition>> {
    p.check_invertible()?;
    let (n, i) = split(alpha);
    let top = n.saturating_sub(1);
    let neg_b = powers(&-&p.b, top);
    full(n)
        .difference(i)
        .subsets()
        .map(|j| {
            Ok((
                comp_of_bits(n, j),
                &p.a.powi(j.len() as i32 - top as i32)? * &neg_b[(top - i.len() - j.len()) as usize],
            ))
        })
        .collect()
}

/// The selectors `A ∈ binom([m+n], n)` with `(I #_A J) ∩ c(A) = ∅` and
/// `I #_A J ⊆ K ⊆ (I #_A J) ∪ c(A)`, with their run markers.
pub fn admissible_selectors(k: &SubsetLabel, i: &SubsetLabel, j: &SubsetLabel) -> Result<Vec<(BitSet, RunMarkers)>> {
    let (m, n) = (i.ambient(), j.ambient());
    if m + n != k.ambient() {
        return Err(Error::InvalidArgument(format!("degrees {m} + {n} do not add up to {}", k.ambient())));
    }
    let kk = k.members();
    let mut out = Vec::new();
    for a in subsets_of_size(m + n, n) {
        let pre = preshuffle(i, j, a)?.members();
        let c = run_markers(a, m + n);
        if pre.is_disjoint(c.c) && pre.is_subset(kk) && kk.is_subset(pre.union(c.c)) {
            out.push((a, c));
        }
    }
    Ok(out)
}

/// `C^K_{I,J}(q,t) = t^{-|I|-|J|} Σ_A (q+t)^{|K ∩ c_2(A)|} t^{|K ∖ c_2(A)|}` over the
/// [`admissible_selectors`].
pub fn structconst(k: &SubsetLabel, i: &SubsetLabel, j: &SubsetLabel) -> Result<ScalarQT> {
    let (q, t) = (ScalarQT::q(), ScalarQT::t());
    let q_plus_t = &q + &t;
    let kk = k.members();
    let mut sum = ScalarQT::zero();
    for (_, c) in admissible_selectors(k, i, j)? {
        sum += &(&q_plus_t.pow(kk.intersection(c.c2).len()) * &t.pow(kk.difference(c.c2).len()));
    }
    Ok(&sum * &t.powi(-((i.len() + j.len()) as i32))?)
}

/// The `κ`-product constant `d_K = Σ_A (1/(1-ν))^{|K ∩ c_2(A)|}` over the
/// [`admissible_selectors`].
pub fn kappa_product_constant(k: &SubsetLabel, i: &SubsetLabel, j: &SubsetLabel, nu: u32) -> Result<ScalarQT> {
    let ratio = ScalarQT::from_int(1).checked_div(&ScalarQT::from_int(1 - nu as i64))?;
    let kk = k.members();
    let mut sum = ScalarQT::zero();
    for (_, c) in admissible_selectors(k, i, j)? {
        sum += &ratio.pow(kk.intersection(c.c2).len());
    }
    Ok(sum)
}

/// One summand of `△𝓑̂(q,t)_k`, before collecting equal tensor keys.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BhatCoproductTerm {
    pub a: BitSet,
    pub coeff: ScalarQT,
    pub left: Composition,
    pub right: Composition,
}

/// `△𝓑̂(q,t)_k = Σ_{A ⊆ [k]} (q+t)^{|c_2(A)|} t^{|c_1(A)|} 𝓑̂_{α_A} ⊗ 𝓑̂_{β_A}`, one
/// term per `A`, in the order of `BitSet::subsets`.
pub fn coproduct_bhat_n_raw(k: u32) -> Vec<BhatCoproductTerm> {
    let q_plus_t = &ScalarQT::q() + &ScalarQT::t();
    BitSet::range(k)
        .subsets()
        .map(|a| {
            let c = run_markers(a, k);
            BhatCoproductTerm {
                a,
                coeff: &q_plus_t.pow(c.c2.len()) * &ScalarQT::t().pow(c.c1.len()),
                left: RunDecomposition::of(a).lengths(),
                right: RunDecomposition::of(a.complement_in(k)).lengths(),
            }
        })
        .collect()
}

/// `△𝓑̂(q,t)_k` with equal tensor keys collected.
pub fn coproduct_bhat_n(k: u32) -> NSymTensor {
    let terms = coproduct_bhat_n_raw(k).into_iter().map(|t| ((t.left, t.right), t.coeff)).collect();
    NSymTensor { basis: NBasis::Bhat(Params::symbolic()), terms }
}

/// Row `I`, column `J`: the coefficient of `H_{comp(J)}` in `𝓑(q,t)_{comp(I)}`.
/// Rows and columns follow `BitSet::subsets` of `[n-1]`.
pub fn b_to_h_matrix(n: u32, p: &Params) -> Vec<Vec<ScalarQT>> {
    let subsets: Vec<BitSet> = full(n).subsets().collect();
    subsets
        .iter()
        .map(|&i| {
            let row = b_to_h(&comp_of_bits(n, i), p);
            subsets.iter().map(|&j| row.coeff(&comp_of_bits(n, j))).collect()
        })
        .collect()
}

/// The matrix `M_{I,J} = q^{|J ∖ I|} t^{|J ∩ I|}` when `I ∪ J = [n-1]`, else `0`.
pub fn remark_m(n: u32, p: &Params) -> Vec<Vec<ScalarQT>> {
    let f = full(n);
    let subsets: Vec<BitSet> = f.subsets().collect();
    subsets
        .iter()
        .map(|&i| {
            subsets
                .iter()
                .map(|&j| {
                    if i.union(j) != f {
                        return ScalarQT::zero();
                    }
                    &p.a.pow(j.difference(i).len()) * &p.b.pow(j.intersection(i).len())
                })
                .collect()
        })
        .collect()
}

/// The matrix `N_{I,J} = q^{|J|-(n-1)} (-t)^{(n-1)-|I|-|J|}` when `I ∩ J = ∅`, else `0`.
pub fn remark_n(n: u32, p: &Params) -> Result<Vec<Vec<ScalarQT>>> {
    p.check_invertible()?;
    let top = n.saturating_sub(1);
    let subsets: Vec<BitSet> = full(n).subsets().collect();
    let neg_b = powers(&-&p.b, top);
    subsets
        .iter()
        .map(|&i| {
            subsets
                .iter()
                .map(|&j| {
                    if !i.is_disjoint(j) {
                        return Ok(ScalarQT::zero());
                    }
                    Ok(&p.a.powi(j.len() as i32 - top as i32)? * &neg_b[(top - i.len() - j.len()) as usize])
                })
                .collect()
        })
        .collect()
}

/// Whether the `𝓑(a,b) → H` matrix is lower triangular with nonzero
/// diagonal when rows are ordered by `set(α^c)` and columns by `J`, both by
/// size descending then lexicographically.
pub fn b_to_h_is_triangular(n: u32, p: &Params) -> bool {
    let f = full(n);
    let key = |s: &BitSet| (std::cmp::Reverse(s.len()), s.iter().collect::<Vec<_>>());
    let mut order: Vec<BitSet> = f.subsets().collect();
    order.sort_by_key(key);
    for (r, &ic) in order.iter().enumerate() {
        let row = b_to_h(&comp_of_bits(n, f.difference(ic)), p);
        for (c, &j) in order.iter().enumerate() {
            let v = row.coeff(&comp_of_bits(n, j));
            if (c > r && !v.is_zero()) || (c == r && v.is_zero()) {
                return false;
            }
        }
    }
    true
}
