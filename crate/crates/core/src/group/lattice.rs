//! The normal-subgroup lattice `{Q_I(ν) : I ⊆ S}` worked out on group
//! elements, and the supercharacter theory it induces.
//!
//! Nothing here uses the closed forms of the parent module: superclasses come
//! from the covering relation of element sets, character blocks from kernels
//! of the linear characters `ψ_a(g) = ζ^{a·g}`, and block sums from integer
//! counts reduced modulo the cyclotomic polynomial `Φ_ν`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::{chi, kappa, ops::hall_inner, ClassFunction, GroupSpec};
use crate::combinatorics::BitSet;
use crate::error::{Error, Result};
use crate::scalars::{int, Rational};

/// Codes of `G = Q_S(ν)` grouped by support.
pub fn superclass_blocks(spec: &GroupSpec) -> BTreeMap<BitSet, Vec<usize>> {
    let mut out: BTreeMap<BitSet, Vec<usize>> = BTreeMap::new();
    for c in 0..spec.order() {
        out.entry(spec.support(c)).or_default().push(c);
    }
    out
}

/// The coordinate subgroups as membership tables, with their inclusion order.
struct Lattice {
    labels: Vec<BitSet>,
    members: Vec<Vec<bool>>,
    /// `below[i]`: members covered by member `i`.
    below: Vec<Vec<usize>>,
    /// `above[i]`: members covering member `i`.
    above: Vec<Vec<usize>>,
}

impl Lattice {
    fn new(spec: &GroupSpec) -> Lattice {
        let labels: Vec<BitSet> = spec.index_set().subsets().collect();
        let members: Vec<Vec<bool>> =
            labels.iter().map(|&j| (0..spec.order()).map(|c| spec.support(c).is_subset(j)).collect()).collect();
        let len = labels.len();
        let contains = |big: usize, small: usize| members[small].iter().zip(&members[big]).all(|(&s, &b)| !s || b);
        let sizes: Vec<usize> = members.iter().map(|m| m.iter().filter(|&&x| x).count()).collect();
        let mut strict = vec![vec![false; len]; len];
        for (a, row) in strict.iter_mut().enumerate() {
            for (b, cell) in row.iter_mut().enumerate() {
                *cell = sizes[b] < sizes[a] && contains(a, b);
            }
        }
        let mut below = vec![Vec::new(); len];
        let mut above = vec![Vec::new(); len];
        for a in 0..len {
            for b in 0..len {
                if strict[a][b] && !(0..len).any(|p| strict[a][p] && strict[p][b]) {
                    below[a].push(b);
                    above[b].push(a);
                }
            }
        }
        Lattice { labels, members, below, above }
    }

    fn index_of(&self, i: BitSet) -> usize {
        self.labels.iter().position(|&l| l == i).expect("lattice member")
    }

    /// `N∘`: elements of member `i` lying in no member it covers.
    fn interior(&self, i: usize) -> Vec<bool> {
        let mut out = self.members[i].clone();
        for &o in &self.below[i] {
            for (x, &inside) in out.iter_mut().zip(&self.members[o]) {
                if inside {
                    *x = false;
                }
            }
        }
        out
    }
}

fn dot(spec: &GroupSpec, a: usize, g: usize) -> u32 {
    let nu = spec.nu();
    spec.decode(a).iter().zip(spec.decode(g)).fold(0, |acc, (x, y)| (acc + x * y) % nu)
}

/// The character blocks `X^{N•}`, one per lattice member `N = Q_I`, keyed by
/// `I`. A character `ψ_a` lies in `X^{N•}` when `N ⊆ ker ψ_a` and no member
/// covering `N` is.
pub fn character_blocks(spec: &GroupSpec) -> Vec<(BitSet, Vec<usize>)> {
    let lattice = Lattice::new(spec);
    let kernels: Vec<Vec<bool>> =
        (0..spec.order()).map(|a| (0..spec.order()).map(|g| dot(spec, a, g) == 0).collect()).collect();
    let within = |member: &[bool], ker: &[bool]| member.iter().zip(ker).all(|(&m, &k)| !m || k);
    lattice
        .labels
        .iter()
        .enumerate()
        .map(|(i, &label)| {
            let block = (0..spec.order())
                .filter(|&a| {
                    within(&lattice.members[i], &kernels[a])
                        && lattice.above[i].iter().all(|&o| !within(&lattice.members[o], &kernels[a]))
                })
                .collect();
            (label, block)
        })
        .collect()
}

/// Indicator of `Q_I(ν)∘`, computed from the covering relation of the lattice.
pub fn lattice_superclass_oracle(spec: &GroupSpec, i: BitSet) -> Result<ClassFunction> {
    spec.check_subset(i)?;
    let lattice = Lattice::new(spec);
    let interior = lattice.interior(lattice.index_of(i));
    let values = interior.into_iter().map(|x| if x { Rational::one() } else { Rational::zero() }).collect();
    ClassFunction::from_values(spec, values)
}

/// Coefficients of `Φ_ν`, constant term first.
fn cyclotomic(nu: u32) -> Vec<i64> {
    // x^ν - 1 divided by Φ_d for every proper divisor d.
    let mut p = vec![0i64; nu as usize + 1];
    p[0] = -1;
    p[nu as usize] = 1;
    for d in 1..nu {
        if nu.is_multiple_of(d) {
            p = divide_monic(&p, &cyclotomic(d)).0;
        }
    }
    p
}

/// Quotient and remainder by a monic divisor.
fn divide_monic(p: &[i64], d: &[i64]) -> (Vec<i64>, Vec<i64>) {
    let dd = d.len() - 1;
    let mut r = p.to_vec();
    if r.len() <= dd {
        return (vec![0], r);
    }
    let mut q = vec![0i64; r.len() - dd];
    for k in (0..q.len()).rev() {
        let c = r[k + dd];
        q[k] = c;
        for (j, &dj) in d.iter().enumerate() {
            r[k + j] -= c * dj;
        }
    }
    r.truncate(dd.max(1));
    (q, r)
}

/// `Σ_{a ∈ block} ψ_a`, evaluated exactly. Fails when a value is not rational.
pub fn block_character(spec: &GroupSpec, block: &[usize]) -> Result<ClassFunction> {
    let nu = spec.nu();
    let phi = cyclotomic(nu);
    let mut values = Vec::with_capacity(spec.order());
    for g in 0..spec.order() {
        let mut counts = vec![0i64; nu as usize];
        for &a in block {
            counts[dot(spec, a, g) as usize] += 1;
        }
        let (_, r) = divide_monic(&counts, &phi);
        if r.iter().skip(1).any(|&c| c != 0) {
            return Err(Error::InvalidArgument(format!("block sum is irrational at element {:?}", spec.decode(g))));
        }
        values.push(int(r[0]));
    }
    ClassFunction::from_values(spec, values)
}

/// Outcome of [`verify_axioms`]: one entry per named check, holding a
/// witness when the check failed.
#[derive(Clone, Debug)]
pub struct AxiomReport {
    pub spec: GroupSpec,
    pub checks: Vec<(String, Option<String>)>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|(_, w)| w.is_none())
    }

    pub fn first_failure(&self) -> Option<(&str, &str)> {
        self.checks.iter().find_map(|(n, w)| w.as_deref().map(|w| (n.as_str(), w)))
    }
}

/// Check the supercharacter theory axioms and the Hall relations on `spec`.
///
/// Checks: C1 (`{e}` is a superclass), C2 (as many superclasses as blocks,
/// both `2^{|S|}`), C3 (every block sum is constant on every superclass),
/// the superclass partition of `G` and block partition of `Irr(G)`, the
/// lattice oracle against `κ_I`, the block sums against the product formula
/// for `χ^I`, Hall orthogonality of `χ` and `κ`, and the norms
/// `⟨χ^I, χ^I⟩ = (ν-1)^{|I^c|}` and `⟨κ_I, κ_I⟩ = |cl_I| / |G|`.
pub fn verify_axioms(spec: &GroupSpec) -> Result<AxiomReport> {
    let lattice = Lattice::new(spec);
    let expected = 1usize << spec.rank();
    let mut checks: Vec<(String, Option<String>)> = Vec::new();
    let mut push = |name: &str, witness: Option<String>| checks.push((name.to_string(), witness));

    let superclasses: Vec<(BitSet, Vec<bool>)> =
        lattice.labels.iter().enumerate().map(|(i, &l)| (l, lattice.interior(i))).collect();
    let identity_only: Vec<bool> = (0..spec.order()).map(|c| c == 0).collect();
    push(
        "C1",
        (!superclasses.iter().any(|(_, s)| *s == identity_only)).then(|| "no superclass equals {e}".to_string()),
    );

    let mut cover = vec![0usize; spec.order()];
    for (_, s) in &superclasses {
        for (n, &x) in cover.iter_mut().zip(s) {
            *n += x as usize;
        }
    }
    push(
        "superclass-partition",
        cover
            .iter()
            .position(|&n| n != 1)
            .map(|g| format!("element {:?} lies in {} superclasses", spec.decode(g), cover[g])),
    );

    let blocks = character_blocks(spec);
    let mut seen = vec![0usize; spec.order()];
    for (_, b) in &blocks {
        for &a in b {
            seen[a] += 1;
        }
    }
    push(
        "block-partition",
        seen.iter().position(|&n| n != 1).map(|a| format!("character {:?} lies in {} blocks", spec.decode(a), seen[a])),
    );
    let nonempty_classes = superclasses.iter().filter(|(_, s)| s.iter().any(|&x| x)).count();
    let nonempty_blocks = blocks.iter().filter(|(_, b)| !b.is_empty()).count();
    push(
        "C2",
        (nonempty_classes != nonempty_blocks || nonempty_classes != expected)
            .then(|| format!("{nonempty_classes} superclasses, {nonempty_blocks} blocks, expected {expected}")),
    );

    let mut c3 = None;
    let mut product_formula = None;
    let mut characters = Vec::with_capacity(blocks.len());
    for (label, block) in &blocks {
        let sigma = block_character(spec, block)?;
        if c3.is_none() {
            for (class_label, class) in &superclasses {
                let mut vals = class.iter().enumerate().filter(|(_, &x)| x).map(|(g, _)| sigma.value(g));
                if let Some(first) = vals.next() {
                    if vals.any(|v| v != first) {
                        c3 = Some(format!("block of Q_{label} is not constant on the superclass of {class_label}"));
                        break;
                    }
                }
            }
        }
        if product_formula.is_none() && sigma != chi(spec, *label)? {
            product_formula = Some(format!("block sum of Q_{label} differs from chi^{label}"));
        }
        characters.push((*label, sigma));
    }
    push("C3", c3);
    push("chi-product-formula", product_formula);

    let mut oracle = None;
    for (label, class) in &superclasses {
        let k = kappa(spec, *label)?;
        let matches = class.iter().zip(k.values()).all(|(&x, v)| v.is_one() == x && (x || v.is_zero()));
        if !matches {
            oracle = Some(format!("Q_{label}∘ differs from the support-{label} superclass"));
            break;
        }
    }
    push("lattice-oracle", oracle);

    let kappas: Vec<(BitSet, ClassFunction)> =
        lattice.labels.iter().map(|&l| kappa(spec, l).map(|k| (l, k))).collect::<Result<_>>()?;
    let nu1 = int(spec.nu() as i64 - 1);
    let order = int(spec.order() as i64);
    let mut orth = None;
    let mut chi_norm = None;
    let mut kappa_norm = None;
    for (family, fs) in [("chi", &characters), ("kappa", &kappas)] {
        for (x, (li, fi)) in fs.iter().enumerate() {
            for (lj, fj) in fs.iter().skip(x) {
                let h = hall_inner(fi, fj)?;
                if li != lj {
                    if !h.is_zero() && orth.is_none() {
                        orth = Some(format!("<{family}_{li}, {family}_{lj}> = {h}"));
                    }
                    continue;
                }
                if family == "chi" {
                    let want = pow(&nu1, spec.rank() - li.len());
                    if h != want && chi_norm.is_none() {
                        chi_norm = Some(format!("<chi_{li}, chi_{li}> = {h}, expected {want}"));
                    }
                } else {
                    let size = fi.values().iter().filter(|v| !v.is_zero()).count();
                    let want = int(size as i64) / &order;
                    if (h != want || want != pow(&nu1, li.len()) / &order) && kappa_norm.is_none() {
                        kappa_norm = Some(format!("<kappa_{li}, kappa_{li}> = {h}, expected {want}"));
                    }
                }
            }
        }
    }
    push("hall-orthogonality", orth);
    push("chi-norm", chi_norm);
    push("kappa-norm", kappa_norm);

    Ok(AxiomReport { spec: spec.clone(), checks })
}

fn pow(base: &Rational, e: u32) -> Rational {
    (0..e).fold(Rational::one(), |acc, _| acc * base)
}
