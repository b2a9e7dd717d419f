use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};

use super::poly::PolyQT;
use super::Rational;
use crate::error::{Error, Result};

/// An element of the rational function field `ℚ(q, t)`, kept as `num / den`.
///
/// Reduction is partial: common monomials and rational content are stripped
/// and the denominator is cleared whenever it divides the numerator exactly.
/// Equality is decided by cross-multiplication, so it never depends on the
/// representation.
#[derive(Clone)]
pub struct ScalarQT {
    num: PolyQT,
    den: PolyQT,
}

impl ScalarQT {
    pub fn zero() -> Self {
        ScalarQT { num: PolyQT::zero(), den: PolyQT::one() }
    }

    pub fn one() -> Self {
        ScalarQT::from_poly(PolyQT::one())
    }

    pub fn from_int(c: i64) -> Self {
        ScalarQT::from_poly(PolyQT::from_int(c))
    }

    pub fn from_rational(c: Rational) -> Self {
        ScalarQT::from_poly(PolyQT::constant(c))
    }

    pub fn from_poly(p: PolyQT) -> Self {
        ScalarQT { num: p, den: PolyQT::one() }
    }

    pub fn q() -> Self {
        ScalarQT::from_poly(PolyQT::q())
    }

    pub fn t() -> Self {
        ScalarQT::from_poly(PolyQT::t())
    }

    /// `num / den`, rejecting a zero denominator.
    pub fn fraction(num: PolyQT, den: PolyQT) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(ScalarQT { num, den }.normalized())
    }

    pub fn numer(&self) -> &PolyQT {
        &self.num
    }

    pub fn denom(&self) -> &PolyQT {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    fn normalized(mut self) -> Self {
        if self.num.is_zero() {
            self.den = PolyQT::one();
            return self;
        }
        if self.den.is_one() {
            return self;
        }
        let (nq, nt) = self.num.monomial_content();
        let (dq, dt) = self.den.monomial_content();
        let (sq, st) = (nq.min(dq), nt.min(dt));
        if sq > 0 || st > 0 {
            self.num = self.num.shift_down(sq, st);
            self.den = self.den.shift_down(sq, st);
        }
        if let Some(c) = self.den.as_constant() {
            self.num = self.num.scale(&c.recip());
            self.den = PolyQT::one();
            return self;
        }
        if let Some(quot) = self.num.div_exact(&self.den) {
            self.num = quot;
            self.den = PolyQT::one();
            return self;
        }
        // Integer-normalize the denominator with a positive leading coefficient.
        let mut c = self.den.rational_content();
        if self.den.display_leading_coeff().is_some_and(|l| l.is_negative()) {
            c = -c;
        }
        if !c.is_one() {
            let inv = c.recip();
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
        self
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(ScalarQT { num: self.den.clone(), den: self.num.clone() }.normalized())
    }

    pub fn checked_div(&self, rhs: &ScalarQT) -> Result<Self> {
        Ok(self * &rhs.recip()?)
    }

    /// Integer powers, negative exponents included.
    pub fn powi(&self, e: i32) -> Result<Self> {
        let base = if e < 0 { self.recip()? } else { self.clone() };
        Ok(ScalarQT { num: base.num.pow(e.unsigned_abs()), den: base.den.pow(e.unsigned_abs()) }.normalized())
    }

    pub fn pow(&self, e: u32) -> Self {
        ScalarQT { num: self.num.pow(e), den: self.den.pow(e) }.normalized()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        ScalarQT { num: self.num.scale(c), den: self.den.clone() }.normalized()
    }

    /// Exact evaluation at `(q0, t0)`.
    pub fn eval_at(&self, q0: &Rational, t0: &Rational) -> Result<Rational> {
        let d = self.den.eval(q0, t0);
        if d.is_zero() {
            return Err(Error::VanishingDenominator { q: q0.to_string(), t: t0.to_string() });
        }
        Ok(self.num.eval(q0, t0) / d)
    }

    /// Formal substitution `q ↦ e_q`, `t ↦ e_t`.
    pub fn substitute(&self, e_q: &ScalarQT, e_t: &ScalarQT) -> Result<Self> {
        let num = substitute_poly(&self.num, e_q, e_t);
        let den = substitute_poly(&self.den, e_q, e_t);
        num.checked_div(&den)
    }

    /// Substitution of rational values, returned as a constant scalar.
    pub fn specialize(&self, q0: &Rational, t0: &Rational) -> Result<Self> {
        Ok(ScalarQT::from_rational(self.eval_at(q0, t0)?))
    }

    pub fn is_polynomial(&self) -> bool {
        self.as_poly().is_some()
    }

    /// The polynomial equal to `self`, if the denominator divides the numerator.
    pub fn as_poly(&self) -> Option<PolyQT> {
        if let Some(c) = self.den.as_constant() {
            return Some(self.num.scale(&c.recip()));
        }
        self.num.div_exact(&self.den)
    }

    /// The polynomial equal to `self` if it lies in `ℤ[q, t]`.
    pub fn as_integer_poly(&self) -> Option<PolyQT> {
        self.as_poly().filter(|p| p.has_integer_coefficients())
    }

    pub fn as_rational(&self) -> Option<Rational> {
        self.as_poly().and_then(|p| p.as_constant())
    }
}

fn substitute_poly(p: &PolyQT, e_q: &ScalarQT, e_t: &ScalarQT) -> ScalarQT {
    let max_q = p.terms().map(|(k, _)| k.0).max().unwrap_or(0);
    let max_t = p.terms().map(|(k, _)| k.1).max().unwrap_or(0);
    let powers = |e: &ScalarQT, n: u32| {
        let mut v = vec![ScalarQT::one()];
        for i in 1..=n as usize {
            let next = &v[i - 1] * e;
            v.push(next);
        }
        v
    };
    let qp = powers(e_q, max_q);
    let tp = powers(e_t, max_t);
    let mut acc = ScalarQT::zero();
    for (&(a, b), c) in p.terms() {
        acc += &(&qp[a as usize] * &tp[b as usize]).scale(c);
    }
    acc
}

impl Default for ScalarQT {
    fn default() -> Self {
        ScalarQT::zero()
    }
}

impl PartialEq for ScalarQT {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for ScalarQT {}

impl From<i64> for ScalarQT {
    fn from(c: i64) -> Self {
        ScalarQT::from_int(c)
    }
}

impl From<Rational> for ScalarQT {
    fn from(c: Rational) -> Self {
        ScalarQT::from_rational(c)
    }
}

impl From<PolyQT> for ScalarQT {
    fn from(p: PolyQT) -> Self {
        ScalarQT::from_poly(p)
    }
}

impl Add for &ScalarQT {
    type Output = ScalarQT;
    fn add(self, rhs: &ScalarQT) -> ScalarQT {
        if self.den == rhs.den {
            return ScalarQT { num: &self.num + &rhs.num, den: self.den.clone() }.normalized();
        }
        ScalarQT { num: &(&self.num * &rhs.den) + &(&rhs.num * &self.den), den: &self.den * &rhs.den }.normalized()
    }
}

impl Sub for &ScalarQT {
    type Output = ScalarQT;
    fn sub(self, rhs: &ScalarQT) -> ScalarQT {
        self + &(-rhs)
    }
}

impl Mul for &ScalarQT {
    type Output = ScalarQT;
    fn mul(self, rhs: &ScalarQT) -> ScalarQT {
        if self.is_zero() || rhs.is_zero() {
            return ScalarQT::zero();
        }
        ScalarQT { num: &self.num * &rhs.num, den: &self.den * &rhs.den }.normalized()
    }
}

/// Panics on division by zero; use [`ScalarQT::checked_div`] to handle it.
impl Div for &ScalarQT {
    type Output = ScalarQT;
    fn div(self, rhs: &ScalarQT) -> ScalarQT {
        self.checked_div(rhs).expect("division by zero in ScalarQT")
    }
}

impl Neg for &ScalarQT {
    type Output = ScalarQT;
    fn neg(self) -> ScalarQT {
        ScalarQT { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for ScalarQT {
    type Output = ScalarQT;
    fn neg(self) -> ScalarQT {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for ScalarQT {
            type Output = ScalarQT;
            fn $m(self, rhs: ScalarQT) -> ScalarQT {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&ScalarQT> for ScalarQT {
            type Output = ScalarQT;
            fn $m(self, rhs: &ScalarQT) -> ScalarQT {
                (&self).$m(rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl AddAssign<&ScalarQT> for ScalarQT {
    fn add_assign(&mut self, rhs: &ScalarQT) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&ScalarQT> for ScalarQT {
    fn sub_assign(&mut self, rhs: &ScalarQT) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&ScalarQT> for ScalarQT {
    fn mul_assign(&mut self, rhs: &ScalarQT) {
        *self = &*self * rhs;
    }
}

impl Zero for ScalarQT {
    fn zero() -> Self {
        ScalarQT::zero()
    }
    fn is_zero(&self) -> bool {
        ScalarQT::is_zero(self)
    }
}

impl One for ScalarQT {
    fn one() -> Self {
        ScalarQT::one()
    }
}

/// `num` alone when the denominator is 1, otherwise `num / den` with
/// parentheses around multi-term parts and compound denominators.
impl fmt::Display for ScalarQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &PolyQT| {
            let leading_neg = p.display_leading_coeff().is_some_and(|c| c.is_negative());
            if p.num_terms() > 1 || leading_neg {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        // A product or fraction in the denominator binds looser than `/`.
        let den = self.den.to_string();
        let den = if den.contains(['*', '/']) && !den.starts_with('(') && self.den.num_terms() == 1 {
            format!("({den})")
        } else {
            wrap(&self.den)
        };
        write!(f, "{} / {den}", wrap(&self.num))
    }
}

impl fmt::Debug for ScalarQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
