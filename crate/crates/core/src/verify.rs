//! Named verification suites. Each suite runs a list of checks over every
//! admissible input up to a degree bound and reports one result per check.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::charmap::verify_diagrams;
use crate::combinatorics::{
    comp_of_set, descent_representative, descent_set, overlapping_shuffles, permutations, set_of_comp, Composition,
    SubsetLabel,
};
use crate::error::{Error, Result};
use crate::formal::{LinComb, TensorKey};
use crate::fqsym::{product_f, project_pi, project_pi_tensor, FQSymElem};
use crate::group::{verify_axioms, GroupSpec};
use crate::linalg::{is_identity, mat_mul, transpose};
use crate::nsym::{
    admissible_selectors, b_dual_to_m, b_to_h, b_to_h_is_triangular, b_to_h_matrix, coproduct_h, estar_to_h,
    lambda_to_h, pairing, pairing_tensor, remark_m, remark_n, structconst, NBasis, NSymElem, Params,
};
use crate::qsym::{
    antipode_axiom_left, antipode_axiom_right, coproduct_l, coproduct_m, l_to_m, product_l, product_m, QBasis, QSymElem,
};
use crate::scalars::{int, ScalarQT};
use crate::sym::{comm, comm_bhat_closed_form};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    HopfAxioms,
    Diagrams,
    Dualities,
    Specializations,
    Omega,
    Overlap,
    GroupAxioms,
    Integrality,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::HopfAxioms,
        Suite::Diagrams,
        Suite::Dualities,
        Suite::Specializations,
        Suite::Omega,
        Suite::Overlap,
        Suite::GroupAxioms,
        Suite::Integrality,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::HopfAxioms => "hopf-axioms",
            Suite::Diagrams => "diagrams",
            Suite::Dualities => "dualities",
            Suite::Specializations => "specializations",
            Suite::Omega => "omega",
            Suite::Overlap => "overlap",
            Suite::GroupAxioms => "group-axioms",
            Suite::Integrality => "integrality",
        }
    }

    pub fn from_name(name: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|s| s.name() == name)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite `{name}`")))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub cases: usize,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub max_degree: u32,
    pub nu: Vec<u32>,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Runs `f` on every case in parallel; the first failing case (in input
/// order) becomes the detail.
fn check<T: Sync>(
    name: impl Into<String>,
    cases: &[T],
    f: impl Fn(&T) -> Result<Option<String>> + Sync,
) -> Result<CheckResult> {
    let outcomes: Vec<Option<String>> = cases.par_iter().map(&f).collect::<Result<_>>()?;
    let failure = outcomes.into_iter().flatten().next();
    Ok(CheckResult {
        name: name.into(),
        passed: failure.is_none(),
        cases: cases.len(),
        detail: failure.unwrap_or_default(),
    })
}

fn fails(ok: bool, msg: impl FnOnce() -> String) -> Option<String> {
    (!ok).then(msg)
}

fn compositions_up_to(d: u32) -> Vec<Composition> {
    (0..=d).flat_map(Composition::all_of).collect()
}

fn pairs_up_to(d: u32) -> Vec<(Composition, Composition)> {
    let mut out = Vec::new();
    for total in 0..=d {
        for m in 0..=total {
            for a in Composition::all_of(m) {
                for b in Composition::all_of(total - m) {
                    out.push((a.clone(), b));
                }
            }
        }
    }
    out
}

fn triples_up_to(d: u32) -> Vec<(Composition, Composition, Composition)> {
    let mut out = Vec::new();
    for (a, b) in pairs_up_to(d) {
        for c in compositions_up_to(d - a.size() - b.size()) {
            out.push((a.clone(), b.clone(), c));
        }
    }
    out
}

/// Every `(K, I, J)` with `|I| + |J| = |K| ≤ d` as subset labels.
fn label_triples(d: u32) -> Vec<(SubsetLabel, SubsetLabel, SubsetLabel)> {
    let mut out = Vec::new();
    for k in 0..=d {
        for m in 0..=k {
            for i in SubsetLabel::all(m) {
                for j in SubsetLabel::all(k - m) {
                    for kk in SubsetLabel::all(k) {
                        out.push((kk, i, j));
                    }
                }
            }
        }
    }
    out
}

fn mul_lin(
    x: &LinComb<Composition>,
    y: &LinComb<Composition>,
    mul: &impl Fn(&Composition, &Composition) -> LinComb<Composition>,
) -> LinComb<Composition> {
    let mut out = LinComb::new();
    for (a, ca) in x {
        for (b, cb) in y {
            out.add_scaled(&mul(a, b), &(ca * cb));
        }
    }
    out
}

/// The product on `A ⊗ A` induced by `mul`.
fn mul_tensor(
    x: &LinComb<TensorKey>,
    y: &LinComb<TensorKey>,
    mul: &impl Fn(&Composition, &Composition) -> LinComb<Composition>,
) -> LinComb<TensorKey> {
    let mut out = LinComb::new();
    for ((a1, a2), ca) in x {
        for ((b1, b2), cb) in y {
            let left = mul(a1, b1);
            let right = mul(a2, b2);
            out.add_scaled(&crate::formal::tensor(&left, &right), &(ca * cb));
        }
    }
    out
}

type Triple = (Composition, Composition, Composition);

fn coassociative(alpha: &Composition, delta: &impl Fn(&Composition) -> LinComb<TensorKey>) -> bool {
    let mut left: LinComb<Triple> = LinComb::new();
    let mut right: LinComb<Triple> = LinComb::new();
    for ((l, r), c) in &delta(alpha) {
        for ((ll, lr), c2) in &delta(l) {
            left.add_term((ll.clone(), lr.clone(), r.clone()), c * c2);
        }
        for ((rl, rr), c2) in &delta(r) {
            right.add_term((l.clone(), rl.clone(), rr.clone()), c * c2);
        }
    }
    left == right
}

fn concat_h(a: &Composition, b: &Composition) -> LinComb<Composition> {
    LinComb::single(a.concat(b), ScalarQT::one())
}

fn unit_or_zero(alpha: &Composition) -> LinComb<Composition> {
    if alpha.is_empty() {
        LinComb::single(Composition::empty(), ScalarQT::one())
    } else {
        LinComb::new()
    }
}

fn hopf_axioms(d: u32) -> Result<Vec<CheckResult>> {
    let comps = compositions_up_to(d);
    let pairs = pairs_up_to(d);
    let triples = triples_up_to(d);
    let pm = |a: &Composition, b: &Composition| product_m(a, b);
    let pl = |a: &Composition, b: &Composition| product_l(a, b);
    let mut out = vec![
        check("qsym M associativity", &triples, |(a, b, c)| {
            let left = mul_lin(&product_m(a, b), &LinComb::single(c.clone(), ScalarQT::one()), &pm);
            let right = mul_lin(&LinComb::single(a.clone(), ScalarQT::one()), &product_m(b, c), &pm);
            Ok(fails(left == right, || format!("(M_{a} M_{b}) M_{c} != M_{a} (M_{b} M_{c})")))
        })?,
        check("qsym L associativity", &triples, |(a, b, c)| {
            let left = mul_lin(&product_l(a, b), &LinComb::single(c.clone(), ScalarQT::one()), &pl);
            let right = mul_lin(&LinComb::single(a.clone(), ScalarQT::one()), &product_l(b, c), &pl);
            Ok(fails(left == right, || format!("(L_{a} L_{b}) L_{c} != L_{a} (L_{b} L_{c})")))
        })?,
        check("qsym M coassociativity", &comps, |a| Ok(fails(coassociative(a, &coproduct_m), || format!("M_{a}"))))?,
        check("qsym L coassociativity", &comps, |a| Ok(fails(coassociative(a, &coproduct_l), || format!("L_{a}"))))?,
        check("qsym M bialgebra", &pairs, |(a, b)| {
            let left = product_m(a, b).flat_map(coproduct_m);
            let right = mul_tensor(&coproduct_m(a), &coproduct_m(b), &pm);
            Ok(fails(left == right, || format!("△(M_{a} M_{b}) != △M_{a} △M_{b}")))
        })?,
        check("qsym L bialgebra", &pairs, |(a, b)| {
            let left = product_l(a, b).flat_map(coproduct_l);
            let right = mul_tensor(&coproduct_l(a), &coproduct_l(b), &pl);
            Ok(fails(left == right, || format!("△(L_{a} L_{b}) != △L_{a} △L_{b}")))
        })?,
        check("qsym antipode", &comps, |a| {
            let unit = unit_or_zero(a);
            Ok(fails(antipode_axiom_left(a) == unit && antipode_axiom_right(a) == unit, || format!("M_{a}")))
        })?,
        check("qsym M/L coproducts agree", &comps, |a| {
            let via_l = QSymElem::basis_elem(QBasis::L, a.clone()).coproduct()?.to_m();
            let via_m = QSymElem::new(QBasis::M, l_to_m(a)).coproduct()?;
            Ok(fails(via_l == via_m, || format!("△L_{a}")))
        })?,
        check("nsym H coassociativity", &comps, |a| Ok(fails(coassociative(a, &coproduct_h), || format!("H_{a}"))))?,
        check("nsym H bialgebra", &pairs, |(a, b)| {
            let left = coproduct_h(&a.concat(b));
            let right = mul_tensor(&coproduct_h(a), &coproduct_h(b), &concat_h);
            Ok(fails(left == right, || format!("△(H_{a} H_{b}) != △H_{a} △H_{b}")))
        })?,
        check("nsym native products", &pairs, |(a, b)| {
            for basis in
                [NBasis::B(Params::symbolic()), NBasis::Bhat(Params::symbolic()), NBasis::B(Params::ints(2, 3))]
            {
                let x = NSymElem::basis_elem(basis.clone(), a.clone());
                let y = NSymElem::basis_elem(basis.clone(), b.clone());
                if x.mul(&y)?.to_h() != x.mul_via_h(&y)? {
                    return Ok(Some(format!("{basis}_{a} {basis}_{b}: native product differs from the H route")));
                }
            }
            Ok(None)
        })?,
    ];

    let words: Vec<Vec<u32>> = (0..=d.min(7)).flat_map(permutations).collect();
    let word_pairs: Vec<(Vec<u32>, Vec<u32>)> = words
        .iter()
        .flat_map(|u| {
            words.iter().filter(|v| u.len() + v.len() <= d.min(7) as usize).map(move |v| (u.clone(), v.clone()))
        })
        .collect();
    out.push(check("fqsym projection is multiplicative", &word_pairs, |(u, v)| {
        let left = project_pi(&product_f(u, v));
        let right = project_pi(&FQSymElem::f(u.clone())).mul(&project_pi(&FQSymElem::f(v.clone())))?;
        Ok(fails(left == right, || format!("π(F_{u:?} F_{v:?}) != π(F_{u:?}) π(F_{v:?})")))
    })?);
    out.push(check("fqsym projection is comultiplicative", &words, |w| {
        let x = FQSymElem::f(w.clone());
        let left = project_pi_tensor(&x.coproduct());
        let right = project_pi(&x).coproduct()?;
        Ok(fails(left == right, || format!("(π ⊗ π) △F_{w:?} != △π(F_{w:?})")))
    })?);
    let small_pairs = pairs_up_to(d.min(6));
    out.push(check("fqsym products of a descent class project alike", &small_pairs, |(a, b)| {
        let reps = |c: &Composition| -> Vec<Vec<u32>> {
            let set = set_of_comp(c);
            permutations(c.size()).into_iter().filter(|w| descent_set(w) == set).collect()
        };
        let (us, vs) = (reps(a), reps(b));
        let canonical = (descent_representative(&set_of_comp(a)), descent_representative(&set_of_comp(b)));
        if !us.contains(&canonical.0) || !vs.contains(&canonical.1) {
            return Ok(Some(format!("descent representative of {a} or {b} has the wrong descent set")));
        }
        let expected = project_pi(&product_f(&canonical.0, &canonical.1));
        let ok = us.iter().all(|u| vs.iter().all(|v| project_pi(&product_f(u, v)) == expected));
        Ok(fails(ok, || format!("L_{a} L_{b}")))
    })?);
    Ok(out)
}

fn dualities(d: u32, nus: &[u32]) -> Result<Vec<CheckResult>> {
    let comps = compositions_up_to(d);
    let same_size: Vec<(Composition, Composition)> =
        comps.iter().flat_map(|a| Composition::all_of(a.size()).into_iter().map(move |b| (a.clone(), b))).collect();
    let classical = [(NBasis::H, QBasis::M), (NBasis::R, QBasis::L), (NBasis::Estar, QBasis::E)];
    let mut out = Vec::new();
    for (nb, qb) in classical {
        out.push(check(format!("<{nb}, {qb}> = δ"), &same_size, |(a, b)| {
            let v = pairing(&NSymElem::basis_elem(nb.clone(), a.clone()), &QSymElem::basis_elem(qb, b.clone()))?;
            Ok(fails(if a == b { v.is_one() } else { v.is_zero() }, || format!("<{nb}_{a}, {qb}_{b}> = {v}")))
        })?);
    }
    for p in [Params::symbolic(), Params::ints(2, 3)] {
        let basis = NBasis::B(p.clone());
        out.push(check(format!("<{basis}, {basis}*> = δ"), &same_size, |(a, b)| {
            let dual = QSymElem::new(QBasis::M, b_dual_to_m(b, &p)?);
            let v = pairing(&NSymElem::basis_elem(basis.clone(), a.clone()), &dual)?;
            Ok(fails(if a == b { v.is_one() } else { v.is_zero() }, || format!("<{basis}_{a}, {basis}*_{b}> = {v}")))
        })?);
    }
    for &nu in nus {
        let basis = NBasis::B(Params::ints(-(nu as i64), nu as i64 - 1));
        out.push(check(format!("<{basis}, Pi({nu})> = δ"), &same_size, |(a, b)| {
            let v = pairing(
                &NSymElem::basis_elem(basis.clone(), a.clone()),
                &QSymElem::basis_elem(QBasis::Pi(nu), b.clone()),
            )?;
            Ok(fails(if a == b { v.is_one() } else { v.is_zero() }, || format!("<{basis}_{a}, Pi_{b}> = {v}")))
        })?);
    }
    let pairs = pairs_up_to(d);
    out.push(check("<△H_γ, M_α ⊗ M_β> = <H_γ, M_α M_β>", &pairs, |(a, b)| {
        let prod = QSymElem::new(QBasis::M, product_m(a, b));
        for g in Composition::all_of(a.size() + b.size()) {
            let h = NSymElem::basis_elem(NBasis::H, g.clone());
            let left = pairing_tensor(
                &h.coproduct()?,
                &LinComb::single(a.clone(), ScalarQT::one()),
                &LinComb::single(b.clone(), ScalarQT::one()),
            );
            if left != pairing(&h, &prod)? {
                return Ok(Some(format!("γ = {g}, α = {a}, β = {b}")));
            }
        }
        Ok(None)
    })?);
    out.push(check("<H_α H_β, M_γ> = <H_α ⊗ H_β, △M_γ>", &pairs, |(a, b)| {
        let prod = NSymElem::basis_elem(NBasis::H, a.clone()).mul(&NSymElem::basis_elem(NBasis::H, b.clone()))?;
        for g in Composition::all_of(a.size() + b.size()) {
            let left = pairing(&prod, &QSymElem::basis_elem(QBasis::M, g.clone()))?;
            let right = coproduct_m(&g).coeff(&(a.clone(), b.clone()));
            if left != right {
                return Ok(Some(format!("α = {a}, β = {b}, γ = {g}")));
            }
        }
        Ok(None)
    })?);
    let triples = label_triples(d);
    let p = Params::symbolic();
    out.push(check("structconst = <△B_K, B*_I ⊗ B*_J>", &triples, |(k, i, j)| {
        let delta = NSymElem::basis_elem(NBasis::B(p.clone()), comp_of_set(k)).coproduct()?;
        let v = pairing_tensor(&delta, &b_dual_to_m(&comp_of_set(i), &p)?, &b_dual_to_m(&comp_of_set(j), &p)?);
        let c = structconst(k, i, j)?;
        Ok(fails(v == c, || format!("K={k} I={i} J={j}: pairing {v}, closed sum {c}")))
    })?);
    let degrees: Vec<u32> = (0..=d).collect();
    out.push(check("B/H matrix is the transpose of the remark matrix M, and MN = NM = I", &degrees, |&n| {
        let m = remark_m(n, &p);
        let inv = remark_n(n, &p)?;
        let ok =
            b_to_h_matrix(n, &p) == transpose(&m) && is_identity(&mat_mul(&m, &inv)) && is_identity(&mat_mul(&inv, &m));
        Ok(fails(ok, || format!("n = {n}")))
    })?);
    Ok(out)
}

fn specializations(d: u32) -> Result<Vec<CheckResult>> {
    let comps = compositions_up_to(d);
    let degrees: Vec<u32> = (0..=d).collect();
    Ok(vec![
        check("B(1,0)_α = H_{α^c}", &comps, |a| {
            let ok = b_to_h(a, &Params::ints(1, 0)) == LinComb::single(a.complement(), ScalarQT::one());
            Ok(fails(ok, || format!("α = {a}")))
        })?,
        check("B(-1,1)_α = Λ_{α^c}", &comps, |a| {
            Ok(fails(b_to_h(a, &Params::ints(-1, 1)) == lambda_to_h(&a.complement()), || format!("α = {a}")))
        })?,
        check("B(1,-1)_α = E*_{α^c}", &comps, |a| {
            Ok(fails(b_to_h(a, &Params::ints(1, -1)) == estar_to_h(&a.complement()), || format!("α = {a}")))
        })?,
        check("B/H matrix is triangular", &degrees, |&n| {
            let ok = [Params::symbolic(), Params::ints(2, 3), Params::ints(-1, 1)]
                .iter()
                .all(|p| b_to_h_is_triangular(n, p));
            Ok(fails(ok, || format!("n = {n}")))
        })?,
        check("comm(B̂(a,b)_n) closed form", &degrees, |&n| {
            for p in [Params::symbolic(), Params::ints(2, 3)] {
                let x = NSymElem::basis_elem(NBasis::Bhat(p.clone()), Composition::single(n));
                if comm(&x) != comm_bhat_closed_form(n, &p) {
                    return Ok(Some(format!("n = {n}, params ({}, {})", p.a, p.b)));
                }
            }
            Ok(None)
        })?,
    ])
}

fn omega(d: u32) -> Result<Vec<CheckResult>> {
    let comps = compositions_up_to(d);
    let pairs = pairs_up_to(d);
    Ok(vec![
        check("ω(B̂(a,b)_α) = B̂(-a,a+b)_{α^r}", &comps, |a| {
            for p in [Params::symbolic(), Params::ints(2, 3)] {
                let x = NSymElem::basis_elem(NBasis::Bhat(p.clone()), a.clone());
                let expected = NSymElem::basis_elem(NBasis::Bhat(p.omega()), a.reversed()).to_h();
                if x.omega() != expected {
                    return Ok(Some(format!("α = {a}, params ({}, {})", p.a, p.b)));
                }
            }
            Ok(None)
        })?,
        check("ω² = id", &comps, |a| {
            let x = NSymElem::basis_elem(NBasis::Bhat(Params::symbolic()), a.clone());
            Ok(fails(x.omega().omega() == x.to_h(), || format!("α = {a}")))
        })?,
        check("ω is an anti-automorphism", &pairs, |(a, b)| {
            let x = NSymElem::basis_elem(NBasis::R, a.clone());
            let y = NSymElem::basis_elem(NBasis::R, b.clone());
            Ok(fails(x.mul(&y)?.omega() == y.omega().mul(&x.omega())?, || format!("R_{a} R_{b}")))
        })?,
    ])
}

fn overlap(d: u32) -> Result<Vec<CheckResult>> {
    let triples = label_triples(d);
    let pairs = pairs_up_to(d);
    Ok(vec![
        check(
            "overlapping shuffles, weight-restricted and c2-avoiding selectors are equinumerous",
            &triples,
            |(k, i, j)| {
                let shuffles = overlapping_shuffles(&comp_of_set(&i.complement()), &comp_of_set(&j.complement()));
                let a = shuffles.get(&comp_of_set(&k.complement())).copied().unwrap_or(0) as usize;
                let adm = admissible_selectors(k, i, j)?;
                let b = adm.iter().filter(|(_, c)| k.members().difference(c.c2).len() == i.len() + j.len()).count();
                let c = adm.iter().filter(|(_, c)| k.members().is_disjoint(c.c2)).count();
                Ok(fails(a == b && b == c, || format!("K={k} I={i} J={j}: {a}, {b}, {c}")))
            },
        )?,
        check("C(1,0) counts overlapping shuffles", &triples, |(k, i, j)| {
            let shuffles = overlapping_shuffles(&comp_of_set(&i.complement()), &comp_of_set(&j.complement()));
            let count = shuffles.get(&comp_of_set(&k.complement())).copied().unwrap_or(0);
            let v = structconst(k, i, j)?.eval_at(&int(1), &int(0))?;
            Ok(fails(v == int(count as i64), || format!("K={k} I={i} J={j}: C(1,0) = {v}, count {count}")))
        })?,
        check("L products: A-shuffles agree with overlapping shuffles", &pairs, |(a, b)| {
            let via_m = QSymElem::new(QBasis::M, l_to_m(a)).mul(&QSymElem::new(QBasis::M, l_to_m(b)))?;
            let via_l = QSymElem::new(QBasis::L, product_l(a, b)).to_m();
            Ok(fails(via_m == via_l, || format!("L_{a} L_{b}")))
        })?,
    ])
}

fn group_axioms(d: u32, nus: &[u32]) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for &nu in nus {
        let degrees: Vec<u32> = (1..=d).collect();
        out.push(check(format!("supercharacter theory axioms, nu = {nu}"), &degrees, |&n| {
            let report = verify_axioms(&GroupSpec::q_n(nu, n)?)?;
            Ok(report.first_failure().map(|(name, why)| format!("n = {n}: {name}: {why}")))
        })?);
    }
    Ok(out)
}

fn integrality(d: u32) -> Result<Vec<CheckResult>> {
    let triples = label_triples(d);
    let ks: Vec<SubsetLabel> = (0..=d).flat_map(SubsetLabel::all).collect();
    Ok(vec![
        check("structconst lies in Z[q,t]", &triples, |(k, i, j)| {
            let c = structconst(k, i, j)?;
            Ok(fails(c.as_integer_poly().is_some(), || format!("C^{k}_{{{i},{j}}} = {c}")))
        })?,
        check("structconst equals the H-route coproduct", &ks, |k| {
            let basis = NBasis::B(Params::symbolic());
            let tensor = NSymElem::basis_elem(basis.clone(), comp_of_set(k)).coproduct()?.convert(&basis)?;
            let mut expected = LinComb::new();
            for m in 0..=k.ambient() {
                for i in SubsetLabel::all(m) {
                    for j in SubsetLabel::all(k.ambient() - m) {
                        expected.add_term((comp_of_set(&i), comp_of_set(&j)), structconst(k, &i, &j)?);
                    }
                }
            }
            Ok(fails(tensor.terms == expected, || format!("K = {k}")))
        })?,
    ])
}

/// Run one suite. `nus` is used by the suites that involve `ν`.
pub fn run_suite(suite: Suite, max_degree: u32, nus: &[u32]) -> Result<SuiteReport> {
    if let Some(&nu) = nus.iter().find(|&&nu| nu < 2) {
        return Err(Error::InvalidGroup(format!("nu = {nu} must be at least 2")));
    }
    let d = max_degree;
    let checks = match suite {
        Suite::HopfAxioms => hopf_axioms(d)?,
        Suite::Diagrams => nus
            .iter()
            .map(|&nu| {
                let r = verify_diagrams(nu, d)?;
                Ok(CheckResult {
                    name: format!("ch intertwines products and coproducts, nu = {nu}"),
                    passed: r.passed(),
                    cases: r.products_checked + r.coproducts_checked,
                    detail: r.failures.first().cloned().unwrap_or_default(),
                })
            })
            .collect::<Result<_>>()?,
        Suite::Dualities => dualities(d, nus)?,
        Suite::Specializations => specializations(d)?,
        Suite::Omega => omega(d)?,
        Suite::Overlap => overlap(d)?,
        Suite::GroupAxioms => group_axioms(d, nus)?,
        Suite::Integrality => integrality(d)?,
    };
    Ok(SuiteReport { suite: suite.name().into(), max_degree, nu: nus.to_vec(), checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_passes_at_low_degree() {
        for suite in Suite::ALL {
            let report = run_suite(suite, 3, &[2, 3]).unwrap();
            assert!(report.passed(), "{suite}: {:?}", report.checks.iter().find(|c| !c.passed));
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for suite in Suite::ALL {
            assert_eq!(Suite::from_name(suite.name()).unwrap(), suite);
        }
        assert!(Suite::from_name("nope").is_err());
    }
}
