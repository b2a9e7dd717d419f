use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::{ClassFunction, Factor, FactorVector, GroupSpec};
use crate::combinatorics::{run_markers, subsets_of_size, BitSet, SubsetLabel};
use crate::error::{Error, Result};
use crate::scalars::{int, Rational};

/// `φ↓_{Q_T}`: evaluate at the embedding that is zero on `S ∖ T`.
pub fn restrict(phi: &ClassFunction, t: BitSet) -> Result<ClassFunction> {
    let spec = phi.spec();
    spec.check_subset(t)?;
    let target = GroupSpec::new(spec.nu(), t)?;
    let positions: Vec<usize> = spec.indices().iter().map(|&s| if t.contains(s) { 1 } else { 0 }).collect();
    let mut digits = vec![0u32; spec.rank() as usize];
    Ok(ClassFunction::from_fn(&target, |h| {
        let mut hi = h.iter();
        for (d, &keep) in digits.iter_mut().zip(&positions) {
            *d = if keep == 1 { *hi.next().expect("arity") } else { 0 };
        }
        phi.value(spec.encode(&digits)).clone()
    }))
}

/// `φ ⊗_A ψ` on `Q_{A ⊔ B}` for `φ` on `Q_A` and `ψ` on `Q_B`.
pub fn tensor_embed(phi: &ClassFunction, psi: &ClassFunction, target: BitSet) -> Result<ClassFunction> {
    let (a, b) = (phi.spec().index_set(), psi.spec().index_set());
    if phi.spec().nu() != psi.spec().nu() {
        return Err(Error::SpecMismatch(format!("{} vs {}", phi.spec(), psi.spec())));
    }
    if !a.is_disjoint(b) || a.union(b) != target {
        return Err(Error::NotAPartition(format!("{a} and {b} against {target}")));
    }
    let spec = GroupSpec::new(phi.spec().nu(), target)?;
    let side: Vec<bool> = spec.indices().iter().map(|&s| a.contains(s)).collect();
    let mut da = Vec::with_capacity(a.len() as usize);
    let mut db = Vec::with_capacity(b.len() as usize);
    Ok(ClassFunction::from_fn(&spec, |g| {
        da.clear();
        db.clear();
        for (&d, &left) in g.iter().zip(&side) {
            if left {
                da.push(d);
            } else {
                db.push(d);
            }
        }
        phi.value(phi.spec().encode(&da)) * psi.value(psi.spec().encode(&db))
    }))
}

/// The pullback `ι_S^*` along the order-preserving relabelling of indices
/// onto `S`.
pub fn relabel(phi: &ClassFunction, s: BitSet) -> Result<ClassFunction> {
    if s.len() != phi.spec().rank() {
        return Err(Error::InvalidArgument(format!("cannot relabel a rank {} group onto {s}", phi.spec().rank())));
    }
    let spec = GroupSpec::new(phi.spec().nu(), s)?;
    ClassFunction::from_values(&spec, phi.values().to_vec())
}

/// Relabel onto `[t]`.
pub fn standardize(phi: &ClassFunction) -> Result<ClassFunction> {
    relabel(phi, BitSet::range(phi.spec().rank()))
}

fn check_degree(phi: &ClassFunction, m: u32) -> Result<()> {
    if phi.spec().index_set() != BitSet::range(m.saturating_sub(1)) {
        return Err(Error::InvalidArgument(format!("{} is not Q_{m}", phi.spec())));
    }
    Ok(())
}

fn single(nu: u32, index: u32, f: Factor) -> Result<ClassFunction> {
    let spec = GroupSpec::new(nu, BitSet::try_from_elems([index])?)?;
    FactorVector { prefactor: Rational::one(), factors: vec![f] }.to_dense(&spec)
}

/// `𝐦_A(φ, ψ)` for `φ` on `Q_m(ν)`, `ψ` on `Q_n(ν)` and `A ∈ binom([m+n], n)`:
/// `χ̇^{c_1(A)} ⊗_{c(A)} (𝐬_A(φ, ψ)↓_{Q_{[m+n-1] ∖ c(A)}})`.
pub fn product_m_a(phi: &ClassFunction, m: u32, psi: &ClassFunction, n: u32, a: BitSet) -> Result<ClassFunction> {
    check_degree(phi, m)?;
    check_degree(psi, n)?;
    let nu = phi.spec().nu();
    if psi.spec().nu() != nu {
        return Err(Error::SpecMismatch(format!("{} vs {}", phi.spec(), psi.spec())));
    }
    if a.len() != n || !a.is_subset(BitSet::range(m + n)) {
        return Err(Error::SelectorSize { got: a.len() as usize, expected: n as usize });
    }
    if m == 0 {
        return Ok(psi.scale(phi.at_identity()));
    }
    if n == 0 {
        return Ok(phi.scale(psi.at_identity()));
    }
    let ac = a.complement_in(m + n);
    let phi_ext = tensor_embed(phi, &single(nu, m, Factor::RegMinusOneNormalized)?, BitSet::range(m))?;
    let psi_ext = tensor_embed(psi, &single(nu, n, Factor::RegMinusOneNormalized)?, BitSet::range(n))?;
    let s_a = tensor_embed(&relabel(&phi_ext, ac)?, &relabel(&psi_ext, a)?, BitSet::range(m + n))?;
    let markers = run_markers(a, m + n);
    let rest = BitSet::range(m + n - 1).difference(markers.c);
    let lowered = restrict(&s_a, rest)?;
    let c_spec = GroupSpec::new(nu, markers.c)?;
    let marker_part = super::dot_chi(&c_spec, markers.c1)?;
    tensor_embed(&marker_part, &lowered, BitSet::range(m + n - 1))
}

/// `𝐦 = Σ_{A ∈ binom([m+n], n)} 𝐦_A`.
pub fn product_m(phi: &ClassFunction, m: u32, psi: &ClassFunction, n: u32) -> Result<ClassFunction> {
    let spec = GroupSpec::q_n(phi.spec().nu(), m + n)?;
    let mut acc = ClassFunction::zero(&spec);
    for a in subsets_of_size(m + n, n) {
        acc.add_scaled(&product_m_a(phi, m, psi, n, a)?, &Rational::one())?;
    }
    Ok(acc)
}

/// Hall inner product `(1/|G|) Σ_g φ(g) ψ(g^{-1})`.
pub fn hall_inner(phi: &ClassFunction, psi: &ClassFunction) -> Result<Rational> {
    if phi.spec() != psi.spec() {
        return Err(Error::SpecMismatch(format!("{} vs {}", phi.spec(), psi.spec())));
    }
    let spec = phi.spec();
    let mut acc = Rational::zero();
    for (c, v) in phi.values().iter().enumerate() {
        if !v.is_zero() {
            acc += v * psi.value(spec.negate(c));
        }
    }
    Ok(acc / int(spec.order() as i64))
}

/// Coefficients of `φ` in the `κ` basis, keyed by support. Rejects functions
/// that are not superclass constant.
pub fn expand_kappa(phi: &ClassFunction) -> Result<BTreeMap<BitSet, Rational>> {
    let spec = phi.spec();
    let mut out: BTreeMap<BitSet, Rational> = BTreeMap::new();
    for (c, v) in phi.values().iter().enumerate() {
        let s = spec.support(c);
        match out.get(&s) {
            Some(prev) if prev != v => return Err(Error::NotSuperclassConstant),
            Some(_) => {}
            None => {
                out.insert(s, v.clone());
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    Ok(out)
}

/// Coefficients of `φ` in the `χ̇` basis, read off with Hall orthogonality:
/// `[χ̇^I] φ = χ^I(0) ⟨φ, χ^I⟩ / ⟨χ^I, χ^I⟩`.
pub fn expand_dot_chi(phi: &ClassFunction) -> Result<BTreeMap<BitSet, Rational>> {
    if !phi.is_superclass_constant() {
        return Err(Error::NotSuperclassConstant);
    }
    let spec = phi.spec();
    let mut out = BTreeMap::new();
    for i in spec.index_set().subsets() {
        let c = super::chi(spec, i)?;
        let coeff = hall_inner(phi, &c)? * c.at_identity() / hall_inner(&c, &c)?;
        if !coeff.is_zero() {
            out.insert(i, coeff);
        }
    }
    Ok(out)
}

/// `▲_k(κ_I)`: `κ_{I ∩ [k-1]} ⊗ κ_{(I ∩ [k+1, n-1]) - k}` when `k ∉ I`, else zero.
pub fn kappa_coproduct_k(i: &SubsetLabel, k: u32) -> Result<Option<(SubsetLabel, SubsetLabel)>> {
    let n = i.ambient();
    if k > n {
        return Err(Error::CoproductIndex { k, n });
    }
    if k == 0 {
        return Ok(Some((SubsetLabel::empty(0), *i)));
    }
    if k == n {
        return Ok(Some((*i, SubsetLabel::empty(0))));
    }
    if i.contains(k) {
        return Ok(None);
    }
    let m = i.members();
    let left = SubsetLabel::new(k, m.intersection(BitSet::range(k - 1)))?;
    let right = SubsetLabel::new(n - k, m.intersection(BitSet::interval(k + 1, n - 1)).shift_down(k))?;
    Ok(Some((left, right)))
}

/// A finite sum of pure tensors of class functions on `Q_k(ν) × Q_{n-k}(ν)`.
#[derive(Clone, Debug)]
pub struct DenseTensor {
    pub left_degree: u32,
    pub right_degree: u32,
    pub terms: Vec<(ClassFunction, ClassFunction)>,
}

impl DenseTensor {
    /// Coefficients in the `κ ⊗ κ` basis.
    pub fn kappa_coefficients(&self) -> Result<BTreeMap<(BitSet, BitSet), Rational>> {
        let mut out: BTreeMap<(BitSet, BitSet), Rational> = BTreeMap::new();
        for (l, r) in &self.terms {
            let el = expand_kappa(l)?;
            let er = expand_kappa(r)?;
            for (a, ca) in &el {
                for (b, cb) in &er {
                    *out.entry((*a, *b)).or_insert_with(Rational::zero) += ca * cb;
                }
            }
        }
        out.retain(|_, v| !v.is_zero());
        Ok(out)
    }
}

/// `▲_k(φ)` for `φ` on `Q_n(ν)`, computed by expanding `φ` in the `κ` basis
/// and applying the closed form on each `κ_I`.
pub fn coproduct_k(phi: &ClassFunction, n: u32, k: u32) -> Result<DenseTensor> {
    check_degree(phi, n)?;
    if k > n {
        return Err(Error::CoproductIndex { k, n });
    }
    let nu = phi.spec().nu();
    let left_spec = GroupSpec::q_n(nu, k)?;
    let right_spec = GroupSpec::q_n(nu, n - k)?;
    if k == 0 {
        return Ok(DenseTensor {
            left_degree: 0,
            right_degree: n,
            terms: vec![(ClassFunction::one(&left_spec), phi.clone())],
        });
    }
    if k == n {
        return Ok(DenseTensor {
            left_degree: n,
            right_degree: 0,
            terms: vec![(phi.clone(), ClassFunction::one(&right_spec))],
        });
    }
    let mut terms = Vec::new();
    for (i, c) in expand_kappa(phi)? {
        let label = SubsetLabel::new(n, i)?;
        if let Some((l, r)) = kappa_coproduct_k(&label, k)? {
            let left = super::kappa(&left_spec, l.members())?.scale(&c);
            let right = super::kappa(&right_spec, r.members())?;
            terms.push((left, right));
        }
    }
    Ok(DenseTensor { left_degree: k, right_degree: n - k, terms })
}

/// `▲_k(φ)` straight from the definition: restrict to `Q_{[1,k-1] ⊔ [k+1,n-1]}`
/// and split the result as a pure tensor. Fails when it is not one.
pub fn coproduct_k_by_factoring(phi: &ClassFunction, n: u32, k: u32) -> Result<(ClassFunction, ClassFunction)> {
    check_degree(phi, n)?;
    if k > n {
        return Err(Error::CoproductIndex { k, n });
    }
    let nu = phi.spec().nu();
    if k == 0 {
        return Ok((ClassFunction::one(&GroupSpec::q_n(nu, 0)?), phi.clone()));
    }
    if k == n {
        return Ok((phi.clone(), ClassFunction::one(&GroupSpec::q_n(nu, 0)?)));
    }
    let left_set = BitSet::range(k - 1);
    let right_set = BitSet::interval(k + 1, n - 1);
    let lowered = restrict(phi, left_set.union(right_set))?;
    let ls = GroupSpec::new(nu, left_set)?;
    let rs = GroupSpec::new(nu, right_set)?;
    let spec = lowered.spec().clone();
    let split_code = |a: usize, b: usize| -> usize {
        let da = ls.decode(a);
        let db = rs.decode(b);
        let mut digits = Vec::with_capacity(spec.rank() as usize);
        digits.extend_from_slice(&da);
        digits.extend_from_slice(&db);
        spec.encode(&digits)
    };
    let pivot = (0..ls.order())
        .flat_map(|a| (0..rs.order()).map(move |b| (a, b)))
        .find(|&(a, b)| !lowered.value(split_code(a, b)).is_zero());
    let (left, right) = match pivot {
        None => (ClassFunction::zero(&ls), ClassFunction::zero(&rs)),
        Some((a0, b0)) => {
            let p = lowered.value(split_code(a0, b0)).clone();
            let left: Vec<Rational> = (0..ls.order()).map(|a| lowered.value(split_code(a, b0)).clone()).collect();
            let right: Vec<Rational> = (0..rs.order()).map(|b| lowered.value(split_code(a0, b)) / &p).collect();
            for (a, l) in left.iter().enumerate() {
                for (b, r) in right.iter().enumerate() {
                    if lowered.value(split_code(a, b)) != &(l * r) {
                        return Err(Error::NotFactorizable);
                    }
                }
            }
            (ClassFunction::from_values(&ls, left)?, ClassFunction::from_values(&rs, right)?)
        }
    };
    Ok((left, standardize(&right)?))
}

/// `▲ = Σ_{k=0}^{n} ▲_k`.
pub fn coproduct(phi: &ClassFunction, n: u32) -> Result<Vec<DenseTensor>> {
    (0..=n).map(|k| coproduct_k(phi, n, k)).collect()
}

#[cfg(test)]
mod tests {
    use super::super::{chi, dot_chi, kappa};
    use super::*;

    fn bits(e: &[u32]) -> BitSet {
        BitSet::try_from_elems(e.iter().copied()).unwrap()
    }

    #[test]
    fn restriction_of_kappa() {
        let spec = GroupSpec::q_n(2, 6).unwrap();
        let k = kappa(&spec, bits(&[1, 4])).unwrap();
        let r = restrict(&k, bits(&[1, 2, 4])).unwrap();
        assert_eq!(r, kappa(r.spec(), bits(&[1, 4])).unwrap());
        let r = restrict(&k, bits(&[1, 2, 3])).unwrap();
        assert!(r.is_zero());
        let one = ClassFunction::one(&spec);
        let r = restrict(&one, bits(&[2, 5])).unwrap();
        assert_eq!(r, ClassFunction::one(r.spec()));
    }

    #[test]
    fn relabel_moves_supercharacters() {
        for nu in 2..=3 {
            let std = GroupSpec::q_n(nu, 3).unwrap();
            let s = bits(&[2, 5]);
            let target = GroupSpec::new(nu, s).unwrap();
            for i in std.index_set().subsets() {
                let moved = relabel(&chi(&std, i).unwrap(), s).unwrap();
                assert_eq!(moved, chi(&target, s.select(i)).unwrap());
                let moved = relabel(&kappa(&std, i).unwrap(), s).unwrap();
                assert_eq!(moved, kappa(&target, s.select(i)).unwrap());
                assert_eq!(standardize(&moved).unwrap(), kappa(&std, i).unwrap());
            }
        }
    }

    #[test]
    fn tensor_of_kappas() {
        let nu = 2;
        let a = GroupSpec::new(nu, bits(&[1, 3])).unwrap();
        let b = GroupSpec::new(nu, bits(&[2])).unwrap();
        for i in a.index_set().subsets() {
            for j in b.index_set().subsets() {
                let t = tensor_embed(&kappa(&a, i).unwrap(), &kappa(&b, j).unwrap(), bits(&[1, 2, 3])).unwrap();
                assert_eq!(t, kappa(t.spec(), i.union(j)).unwrap());
            }
        }
        let one = ClassFunction::one(&a);
        assert!(tensor_embed(&one, &one, bits(&[1, 3])).is_err());
    }

    #[test]
    fn a_shuffle_example_on_the_group() {
        for nu in 2..=3 {
            let phi = dot_chi(&GroupSpec::q_n(nu, 4).unwrap(), bits(&[2, 3])).unwrap();
            let psi = dot_chi(&GroupSpec::q_n(nu, 3).unwrap(), bits(&[2])).unwrap();
            let got = product_m_a(&phi, 4, &psi, 3, bits(&[1, 3, 4])).unwrap();
            assert_eq!(got, dot_chi(got.spec(), bits(&[1, 3, 4, 5, 6])).unwrap());
        }
    }

    #[test]
    fn coproduct_example() {
        let nu = 3;
        let phi = dot_chi(&GroupSpec::q_n(nu, 5).unwrap(), bits(&[1, 3, 4])).unwrap();
        let (l, r) = coproduct_k_by_factoring(&phi, 5, 2).unwrap();
        assert_eq!(l, ClassFunction::one(l.spec()));
        assert_eq!(r, ClassFunction::one(r.spec()));
        assert_eq!(r.spec().rank(), 2);
    }

    #[test]
    fn hall_norms() {
        let nu = 3;
        let spec = GroupSpec::q_n(nu, 4).unwrap();
        for i in spec.index_set().subsets() {
            let c = chi(&spec, i).unwrap();
            let k = kappa(&spec, i).unwrap();
            let ic = 3 - i.len();
            assert_eq!(hall_inner(&c, &c).unwrap(), int(2i64.pow(ic)));
            // |cl_I| / |G| = (ν-1)^{|I|} / ν^{n-1}.
            assert_eq!(hall_inner(&k, &k).unwrap(), int(2i64.pow(i.len())) / int(27));
        }
    }
}
