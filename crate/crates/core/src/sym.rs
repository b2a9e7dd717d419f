//! Symmetric functions in the complete homogeneous basis `h`, and the
//! abelianization `comm: NSym → Sym`.

use std::fmt;

use num_traits::Zero;

use crate::combinatorics::Composition;
use crate::error::{Error, Result};
use crate::formal::LinComb;
use crate::linalg::rank;
use crate::nsym::{bhat_to_h, NBasis, NSymElem, Params};
use crate::scalars::{Rational, ScalarQT};

/// A partition: weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Parse("partition parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition(parts))
    }

    /// `λ(α)`: the parts of `α` sorted.
    pub fn of(alpha: &Composition) -> Self {
        Partition(alpha.sorted_parts())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Multiset union of parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut p = self.0.clone();
        p.extend_from_slice(&other.0);
        Partition::new(p).expect("positive parts")
    }

    /// `C_λ = ℓ(λ)! / ∏_i m_i(λ)!`, the number of compositions with sorted parts `λ`.
    pub fn c_lambda(&self) -> u64 {
        let mut out = factorial(self.0.len() as u64);
        let mut i = 0;
        while i < self.0.len() {
            let run = self.0[i..].iter().take_while(|&&p| p == self.0[i]).count();
            out /= factorial(run as u64);
            i += run;
        }
        out
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all_of(n: u32) -> Vec<Partition> {
        fn rec(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(prefix.clone()));
                return;
            }
            for p in (1..=n.min(max)).rev() {
                prefix.push(p);
                rec(n - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

fn factorial(n: u64) -> u64 {
    (1..=n).product::<u64>().max(1)
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// An element of Sym in the `h` basis.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SymElem {
    pub terms: LinComb<Partition>,
}

impl SymElem {
    pub fn h(lambda: Partition) -> Self {
        SymElem { terms: LinComb::single(lambda, ScalarQT::one()) }
    }

    pub fn mul(&self, other: &SymElem) -> SymElem {
        let mut terms = LinComb::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                terms.add_term(a.union(b), ca * cb);
            }
        }
        SymElem { terms }
    }

    pub fn add(&self, other: &SymElem) -> SymElem {
        SymElem { terms: self.terms.add(&other.terms) }
    }
}

/// `comm(H_α) = h_{λ(α)}`, extended linearly.
pub fn comm(x: &NSymElem) -> SymElem {
    SymElem { terms: x.to_h().terms.map_keys(Partition::of) }
}

/// `Σ_{λ ⊢ n} a^{n-ℓ(λ)} b^{ℓ(λ)-1} C_λ h_λ`.
pub fn comm_bhat_closed_form(n: u32, p: &Params) -> SymElem {
    if n == 0 {
        return SymElem::h(Partition(Vec::new()));
    }
    let terms = Partition::all_of(n)
        .into_iter()
        .map(|l| {
            let len = l.len() as u32;
            let c = &(&p.a.pow(n - len) * &p.b.pow(len - 1)) * &ScalarQT::from_int(l.c_lambda() as i64);
            (l, c)
        })
        .collect();
    SymElem { terms }
}

/// Ranks found by [`generating_set_rank`] in one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratingRank {
    pub n: u32,
    pub nsym_rank: usize,
    pub nsym_dim: usize,
    pub sym_rank: usize,
    pub sym_dim: usize,
}

impl GeneratingRank {
    pub fn full(&self) -> bool {
        self.nsym_rank == self.nsym_dim && self.sym_rank == self.sym_dim
    }
}

fn rational_row<K: Ord + Clone>(x: &LinComb<K>, keys: &[K]) -> Result<Vec<Rational>> {
    keys.iter()
        .map(|k| {
            x.coeff(k)
                .as_rational()
                .ok_or_else(|| Error::InvalidArgument(format!("coefficient {} is not rational", x.coeff(k))))
        })
        .collect()
}

/// For `n = 1..=n_max`: the rank of the products `𝓑̂(a,b)_{α_1} ⋯ 𝓑̂(a,b)_{α_l}`
/// over `α ⊨ n` inside `NSym_n` (computed in `H`), and of their images under
/// `comm` over `λ ⊢ n` inside `Sym_n`.
pub fn generating_set_rank(a: &Rational, b: &Rational, n_max: u32) -> Result<Vec<GeneratingRank>> {
    if a.is_zero() {
        return Err(Error::InvalidArgument("a must be nonzero".into()));
    }
    let p = Params::new(ScalarQT::from_rational(a.clone()), ScalarQT::from_rational(b.clone()));
    let generators: Vec<NSymElem> =
        (0..=n_max).map(|k| NSymElem::new(NBasis::H, bhat_to_h(&Composition::single(k), &p))).collect();
    let product = |parts: &[u32]| -> Result<NSymElem> {
        let mut acc = NSymElem::one(NBasis::H);
        for &k in parts {
            acc = acc.mul_via_h(&generators[k as usize])?;
        }
        Ok(acc)
    };
    let mut out = Vec::new();
    for n in 1..=n_max {
        let comps = Composition::all_of(n);
        let rows =
            comps.iter().map(|c| rational_row(&product(c.parts())?.terms, &comps)).collect::<Result<Vec<_>>>()?;
        let parts = Partition::all_of(n);
        let sym_rows = parts
            .iter()
            .map(|l| rational_row(&comm(&product(l.parts())?).terms, &parts))
            .collect::<Result<Vec<_>>>()?;
        out.push(GeneratingRank {
            n,
            nsym_rank: rank(rows),
            nsym_dim: comps.len(),
            sym_rank: rank(sym_rows),
            sym_dim: parts.len(),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partitions_and_c_lambda() {
        assert_eq!(Partition::all_of(4).len(), 5);
        assert_eq!(Partition::new(vec![1, 2, 1]).unwrap().c_lambda(), 3);
        assert_eq!(Partition::new(vec![]).unwrap().c_lambda(), 1);
    }

    #[test]
    fn comm_forgets_order() {
        let c = |p: &[u32]| Composition::new(p.to_vec()).unwrap();
        let x = comm(&NSymElem::basis_elem(NBasis::H, c(&[2, 1])));
        let y = comm(&NSymElem::basis_elem(NBasis::H, c(&[1, 2])));
        assert_eq!(x, y);
        assert_eq!(x, SymElem::h(Partition::new(vec![2, 1]).unwrap()));
    }

    #[test]
    fn generating_ranks_small() {
        for r in generating_set_rank(&Rational::from_integer(1.into()), &Rational::from_integer(0.into()), 4).unwrap() {
            assert!(r.full(), "{r:?}");
        }
        assert!(generating_set_rank(&Rational::from_integer(0.into()), &Rational::from_integer(1.into()), 2).is_err());
    }
}
