//! The JSON element schema shared by QSym, NSym and Sym:
//! `{"basis": tag, "nu": n?, "params": [a, b]?, "terms": [{"comp": [..], "coeff": ".."}]}`
//! with terms in lexicographic order of their compositions.

use serde::{Deserialize, Serialize};

use crate::combinatorics::Composition;
use crate::error::{Error, Result};
use crate::formal::LinComb;
use crate::nsym::{NBasis, NSymElem, NSymTensor, Params};
use crate::qsym::{QBasis, QSymElem, QSymTensor};
use crate::scalars::{parse_scalar, ScalarQT};
use crate::sym::{Partition, SymElem};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub comp: Vec<u32>,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub basis: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nu: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<[String; 2]>,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorTermJson {
    pub left: Vec<u32>,
    pub right: Vec<u32>,
    pub coeff: String,
}

/// A tensor square element; both factors share the basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorJson {
    pub basis: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nu: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<[String; 2]>,
    pub terms: Vec<TensorTermJson>,
}

fn terms_json(terms: &LinComb<Composition>) -> Vec<TermJson> {
    terms.iter().map(|(c, v)| TermJson { comp: c.parts().to_vec(), coeff: v.to_string() }).collect()
}

fn tensor_terms_json(terms: &LinComb<(Composition, Composition)>) -> Vec<TensorTermJson> {
    terms
        .iter()
        .map(|((l, r), v)| TensorTermJson { left: l.parts().to_vec(), right: r.parts().to_vec(), coeff: v.to_string() })
        .collect()
}

fn terms_from_json(terms: &[TermJson]) -> Result<LinComb<Composition>> {
    let mut out = LinComb::new();
    for t in terms {
        out.add_term(Composition::new(t.comp.clone())?, parse_scalar(&t.coeff)?);
    }
    Ok(out)
}

fn params_json(basis: &NBasis) -> Option<[String; 2]> {
    basis.params().filter(|p| !p.is_symbolic()).map(|p| [p.a.to_string(), p.b.to_string()])
}

fn nbasis_from_json(tag: &str, params: Option<&[String; 2]>) -> Result<NBasis> {
    let basis = NBasis::from_tag(tag)?;
    let Some([a, b]) = params else {
        return Ok(basis);
    };
    nbasis_with(basis, Some(&Params::new(parse_scalar(a)?, parse_scalar(b)?)))
}

pub fn qsym_to_json(x: &QSymElem) -> ElementJson {
    ElementJson { basis: x.basis.tag().to_string(), nu: x.basis.nu(), params: None, terms: terms_json(&x.terms) }
}

pub fn qsym_from_json(e: &ElementJson) -> Result<QSymElem> {
    Ok(QSymElem::new(QBasis::from_tag(&e.basis, e.nu)?, terms_from_json(&e.terms)?))
}

pub fn qsym_tensor_to_json(x: &QSymTensor) -> TensorJson {
    TensorJson { basis: x.basis.tag().to_string(), nu: x.basis.nu(), params: None, terms: tensor_terms_json(&x.terms) }
}

pub fn nsym_to_json(x: &NSymElem) -> ElementJson {
    ElementJson {
        basis: x.basis.tag().to_string(),
        nu: None,
        params: params_json(&x.basis),
        terms: terms_json(&x.terms),
    }
}

pub fn nsym_from_json(e: &ElementJson) -> Result<NSymElem> {
    Ok(NSymElem::new(nbasis_from_json(&e.basis, e.params.as_ref())?, terms_from_json(&e.terms)?))
}

pub fn nsym_tensor_to_json(x: &NSymTensor) -> TensorJson {
    TensorJson {
        basis: x.basis.tag().to_string(),
        nu: None,
        params: params_json(&x.basis),
        terms: tensor_terms_json(&x.terms),
    }
}

pub fn sym_to_json(x: &SymElem) -> ElementJson {
    let terms = x.terms.iter().map(|(l, v)| TermJson { comp: l.parts().to_vec(), coeff: v.to_string() }).collect();
    ElementJson { basis: "h".into(), nu: None, params: None, terms }
}

pub fn sym_from_json(e: &ElementJson) -> Result<SymElem> {
    if e.basis != "h" {
        return Err(Error::UnknownBasis(e.basis.clone()));
    }
    let mut terms = LinComb::new();
    for t in &e.terms {
        terms.add_term(Partition::new(t.comp.clone())?, parse_scalar(&t.coeff)?);
    }
    Ok(SymElem { terms })
}

/// Pretty-printed JSON.
pub fn to_string<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("schema types always serialize")
}

pub fn from_str(src: &str) -> Result<ElementJson> {
    serde_json::from_str(src).map_err(|e| Error::Parse(e.to_string()))
}

/// Parse an element literal `tag:(parts)`, e.g. `B:(1,2)` or `Pi:(2,1)`, as a
/// QSym element when the tag names a QSym basis and as an NSym element
/// otherwise.
pub fn parse_element(src: &str, nu: Option<u32>, params: Option<&Params>) -> Result<Element> {
    let (tag, comp) =
        src.split_once(':').ok_or_else(|| Error::Parse(format!("`{src}`: expected <basis>:<composition>")))?;
    let (tag, comp) = (tag.trim(), comp.parse::<Composition>()?);
    match QBasis::from_tag(tag, nu) {
        Ok(b) => return Ok(Element::Q(QSymElem::basis_elem(b, comp))),
        Err(Error::UnknownBasis(_)) => {}
        Err(e) => return Err(e),
    }
    let basis = nbasis_with(NBasis::from_tag(tag)?, params)?;
    Ok(Element::N(NSymElem::basis_elem(basis, comp)))
}

/// Replace the parameters of `B`/`Bhat`; other bases reject parameters.
pub fn nbasis_with(basis: NBasis, params: Option<&Params>) -> Result<NBasis> {
    match (basis, params) {
        (b, None) => Ok(b),
        (NBasis::B(_), Some(p)) => Ok(NBasis::B(p.clone())),
        (NBasis::Bhat(_), Some(p)) => Ok(NBasis::Bhat(p.clone())),
        (b, Some(_)) => Err(Error::InvalidArgument(format!("basis {b} takes no parameters"))),
    }
}

/// An element of either graded dual.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Element {
    Q(QSymElem),
    N(NSymElem),
}

impl Element {
    pub fn to_json(&self) -> ElementJson {
        match self {
            Element::Q(x) => qsym_to_json(x),
            Element::N(x) => nsym_to_json(x),
        }
    }
}

/// Scalar coefficients round-trip through their display strings.
pub fn scalar_round_trip(c: &ScalarQT) -> Result<bool> {
    Ok(parse_scalar(&c.to_string())? == *c)
}
