//! The groups `Q_S(ν) = ⊕_{s∈S} C_ν`, their class functions, and the
//! superclass-function operations built on them.
//!
//! Elements are tuples `(g_s)_{s∈S}` with `g_s ∈ {0, ..., ν-1}`, encoded in
//! base `ν` with the smallest index in the least significant digit.

mod lattice;
mod ops;

pub use lattice::{
    block_character, character_blocks, lattice_superclass_oracle, superclass_blocks, verify_axioms, AxiomReport,
};
pub use ops::{
    coproduct, coproduct_k, coproduct_k_by_factoring, expand_dot_chi, expand_kappa, hall_inner, kappa_coproduct_k,
    product_m, product_m_a, relabel, restrict, standardize, tensor_embed, DenseTensor,
};

use std::fmt;

use num_traits::{One, Zero};

use crate::combinatorics::{BitSet, SubsetLabel};
use crate::error::{Error, Result};
use crate::scalars::{int, Rational};

/// Default bound on `ν^{|S|}`.
pub const DEFAULT_MAX_GROUP: u128 = 1 << 20;

/// The enumeration bound, overridable through `HOPF_SCF_MAX_GROUP`.
pub fn max_group_order() -> u128 {
    std::env::var("HOPF_SCF_MAX_GROUP").ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_MAX_GROUP)
}

/// The group `Q_S(ν)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    nu: u32,
    index_set: BitSet,
}

impl GroupSpec {
    pub fn new(nu: u32, index_set: BitSet) -> Result<Self> {
        if nu < 2 {
            return Err(Error::InvalidGroup(format!("nu = {nu} must be at least 2")));
        }
        let bound = max_group_order();
        let order = (nu as u128).checked_pow(index_set.len()).unwrap_or(u128::MAX);
        if order > bound {
            return Err(Error::GroupTooLarge { order, bound });
        }
        Ok(GroupSpec { nu, index_set })
    }

    /// `Q_n(ν) = Q_{[n-1]}(ν)`.
    pub fn q_n(nu: u32, n: u32) -> Result<Self> {
        GroupSpec::new(nu, BitSet::range(n.saturating_sub(1)))
    }

    pub fn nu(&self) -> u32 {
        self.nu
    }

    pub fn index_set(&self) -> BitSet {
        self.index_set
    }

    /// `|S|`.
    pub fn rank(&self) -> u32 {
        self.index_set.len()
    }

    pub fn order(&self) -> usize {
        (self.nu as usize).pow(self.rank())
    }

    pub fn indices(&self) -> Vec<u32> {
        self.index_set.iter().collect()
    }

    /// Digits of the element with the given code, one per index in ascending order.
    pub fn decode(&self, mut code: usize) -> Vec<u32> {
        let nu = self.nu as usize;
        (0..self.rank())
            .map(|_| {
                let d = code % nu;
                code /= nu;
                d as u32
            })
            .collect()
    }

    pub fn encode(&self, digits: &[u32]) -> usize {
        digits.iter().rev().fold(0usize, |acc, &d| acc * self.nu as usize + d as usize)
    }

    /// The support `{s : g_s ≠ 0}` of an element.
    pub fn support(&self, code: usize) -> BitSet {
        let mut out = BitSet::EMPTY;
        for (s, d) in self.index_set.iter().zip(self.decode(code)) {
            if d != 0 {
                out.insert(s);
            }
        }
        out
    }

    /// Code of `-g`.
    pub fn negate(&self, code: usize) -> usize {
        let nu = self.nu;
        let digits: Vec<u32> = self.decode(code).into_iter().map(|d| (nu - d) % nu).collect();
        self.encode(&digits)
    }

    fn check_subset(&self, i: BitSet) -> Result<()> {
        if !i.is_subset(self.index_set) {
            return Err(Error::NotASubset {
                subset: i.to_string(),
                ambient_max: self.index_set.max().map_or(0, |m| m as i64),
            });
        }
        Ok(())
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q_{}({})", self.index_set, self.nu)
    }
}

/// A rational-valued function on `Q_S(ν)`, stored densely.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    spec: GroupSpec,
    values: Vec<Rational>,
}

impl ClassFunction {
    pub fn from_fn(spec: &GroupSpec, mut f: impl FnMut(&[u32]) -> Rational) -> Self {
        let values = (0..spec.order()).map(|c| f(&spec.decode(c))).collect();
        ClassFunction { spec: spec.clone(), values }
    }

    pub fn from_values(spec: &GroupSpec, values: Vec<Rational>) -> Result<Self> {
        if values.len() != spec.order() {
            return Err(Error::InvalidArgument(format!(
                "{} values supplied for a group of order {}",
                values.len(),
                spec.order()
            )));
        }
        Ok(ClassFunction { spec: spec.clone(), values })
    }

    pub fn constant(spec: &GroupSpec, c: Rational) -> Self {
        ClassFunction { spec: spec.clone(), values: vec![c; spec.order()] }
    }

    /// The trivial character `𝟙`.
    pub fn one(spec: &GroupSpec) -> Self {
        ClassFunction::constant(spec, Rational::one())
    }

    pub fn zero(spec: &GroupSpec) -> Self {
        ClassFunction::constant(spec, Rational::zero())
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn value(&self, code: usize) -> &Rational {
        &self.values[code]
    }

    /// Value at the identity.
    pub fn at_identity(&self) -> &Rational {
        &self.values[0]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    fn check_same(&self, other: &ClassFunction) -> Result<()> {
        if self.spec != other.spec {
            return Err(Error::SpecMismatch(format!("{} vs {}", self.spec, other.spec)));
        }
        Ok(())
    }

    pub fn add(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.check_same(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect();
        Ok(ClassFunction { spec: self.spec.clone(), values })
    }

    pub fn sub(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.check_same(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a - b).collect();
        Ok(ClassFunction { spec: self.spec.clone(), values })
    }

    /// Pointwise product.
    pub fn pointwise(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.check_same(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect();
        Ok(ClassFunction { spec: self.spec.clone(), values })
    }

    pub fn scale(&self, c: &Rational) -> ClassFunction {
        ClassFunction { spec: self.spec.clone(), values: self.values.iter().map(|v| v * c).collect() }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &ClassFunction, c: &Rational) -> Result<()> {
        self.check_same(other)?;
        for (a, b) in self.values.iter_mut().zip(&other.values) {
            *a += b * c;
        }
        Ok(())
    }

    /// Whether the function is constant on every superclass `cl_I`.
    pub fn is_superclass_constant(&self) -> bool {
        let mut seen: std::collections::HashMap<BitSet, &Rational> = std::collections::HashMap::new();
        for (code, v) in self.values.iter().enumerate() {
            match seen.entry(self.spec.support(code)) {
                std::collections::hash_map::Entry::Occupied(o) => {
                    if *o.get() != v {
                        return false;
                    }
                }
                std::collections::hash_map::Entry::Vacant(e) => {
                    e.insert(v);
                }
            }
        }
        true
    }
}

/// A class function of `C_ν` used as one tensor factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Factor {
    /// `𝟙`.
    One,
    /// `reg`: `ν` at `0`, `0` elsewhere.
    Reg,
    /// `reg - 𝟙`.
    RegMinusOne,
    /// `(reg - 𝟙)/(ν - 1)`.
    RegMinusOneNormalized,
    /// `𝟙 - reg/ν`.
    OneMinusRegOverNu,
    /// `reg/ν`.
    RegOverNu,
    /// Explicit values on `0, ..., ν-1`.
    Values(Vec<Rational>),
}

impl Factor {
    pub fn eval(&self, nu: u32, g: u32) -> Rational {
        let nu_r = int(nu as i64);
        let zero = g == 0;
        match self {
            Factor::One => Rational::one(),
            Factor::Reg => {
                if zero {
                    nu_r
                } else {
                    Rational::zero()
                }
            }
            Factor::RegMinusOne => {
                if zero {
                    nu_r - int(1)
                } else {
                    int(-1)
                }
            }
            Factor::RegMinusOneNormalized => {
                if zero {
                    Rational::one()
                } else {
                    int(-1) / (nu_r - int(1))
                }
            }
            Factor::OneMinusRegOverNu => {
                if zero {
                    Rational::zero()
                } else {
                    Rational::one()
                }
            }
            Factor::RegOverNu => {
                if zero {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }
            Factor::Values(v) => v[g as usize].clone(),
        }
    }
}

/// A pure tensor `c · ⟦φ_{s_1}, ..., φ_{s_t}⟧` in coordinate notation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorVector {
    pub prefactor: Rational,
    /// One factor per index of the group, in ascending index order.
    pub factors: Vec<Factor>,
}

impl FactorVector {
    /// `⟦·⟧`: the dense class function `g ↦ c · ∏ φ_s(g_s)`.
    pub fn to_dense(&self, spec: &GroupSpec) -> Result<ClassFunction> {
        if self.factors.len() != spec.rank() as usize {
            return Err(Error::InvalidArgument(format!(
                "{} factors for a group of rank {}",
                self.factors.len(),
                spec.rank()
            )));
        }
        let nu = spec.nu();
        let tables: Vec<Vec<Rational>> =
            self.factors.iter().map(|f| (0..nu).map(|g| f.eval(nu, g)).collect()).collect();
        Ok(ClassFunction::from_fn(spec, |digits| {
            let mut v = self.prefactor.clone();
            for (t, &d) in tables.iter().zip(digits) {
                v *= &t[d as usize];
            }
            v
        }))
    }

    /// Factors of `κ_I`: `𝟙 - reg/ν` on `I`, `reg/ν` off `I`.
    pub fn kappa(spec: &GroupSpec, i: BitSet) -> Self {
        let factors = spec
            .index_set()
            .iter()
            .map(|s| if i.contains(s) { Factor::OneMinusRegOverNu } else { Factor::RegOverNu })
            .collect();
        FactorVector { prefactor: Rational::one(), factors }
    }

    /// Factors of `χ^I`: `𝟙` on `I`, `reg - 𝟙` off `I`.
    pub fn chi(spec: &GroupSpec, i: BitSet) -> Self {
        let factors =
            spec.index_set().iter().map(|s| if i.contains(s) { Factor::One } else { Factor::RegMinusOne }).collect();
        FactorVector { prefactor: Rational::one(), factors }
    }

    /// Factors of `χ̇^I = χ^I / χ^I(0)`.
    pub fn dot_chi(spec: &GroupSpec, i: BitSet) -> Self {
        let factors = spec
            .index_set()
            .iter()
            .map(|s| if i.contains(s) { Factor::One } else { Factor::RegMinusOneNormalized })
            .collect();
        FactorVector { prefactor: Rational::one(), factors }
    }
}

/// The superclass identifier `κ_I`: the indicator of `{g : supp(g) = I}`.
pub fn kappa(spec: &GroupSpec, i: BitSet) -> Result<ClassFunction> {
    spec.check_subset(i)?;
    let values =
        (0..spec.order()).map(|c| if spec.support(c) == i { Rational::one() } else { Rational::zero() }).collect();
    Ok(ClassFunction { spec: spec.clone(), values })
}

/// The supercharacter `χ^I = ∏_{i∈I} 𝟙 · ∏_{j∉I} (reg - 𝟙)`.
pub fn chi(spec: &GroupSpec, i: BitSet) -> Result<ClassFunction> {
    spec.check_subset(i)?;
    FactorVector::chi(spec, i).to_dense(spec)
}

/// `χ̇^I = χ^I / χ^I(0)`.
pub fn dot_chi(spec: &GroupSpec, i: BitSet) -> Result<ClassFunction> {
    let c = chi(spec, i)?;
    let at0 = c.at_identity().clone();
    Ok(c.scale(&(Rational::one() / at0)))
}

/// `κ_I` for a subset label of degree `n`, on `Q_n(ν)`.
pub fn kappa_n(nu: u32, i: &SubsetLabel) -> Result<ClassFunction> {
    kappa(&GroupSpec::q_n(nu, i.ambient())?, i.members())
}

/// `χ̇^I` for a subset label of degree `n`, on `Q_n(ν)`.
pub fn dot_chi_n(nu: u32, i: &SubsetLabel) -> Result<ClassFunction> {
    dot_chi(&GroupSpec::q_n(nu, i.ambient())?, i.members())
}
