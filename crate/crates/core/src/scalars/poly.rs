use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rational;

/// A sparse polynomial in the commuting variables `q` and `t` with rational
/// coefficients. Keys are `(q-exponent, t-exponent)`; zero coefficients are
/// never stored, so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct PolyQT {
    terms: BTreeMap<(u32, u32), Rational>,
}

/// Display order: higher total degree first, then higher `q`-degree.
pub(crate) fn display_order(a: &(u32, u32), b: &(u32, u32)) -> Ordering {
    (b.0 + b.1).cmp(&(a.0 + a.1)).then(b.0.cmp(&a.0))
}

impl PolyQT {
    pub fn zero() -> Self {
        PolyQT::default()
    }

    pub fn one() -> Self {
        PolyQT::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        PolyQT::monomial(c, 0, 0)
    }

    pub fn from_int(c: i64) -> Self {
        PolyQT::constant(Rational::from_integer(c.into()))
    }

    pub fn monomial(c: Rational, q_exp: u32, t_exp: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((q_exp, t_exp), c);
        }
        PolyQT { terms }
    }

    pub fn q() -> Self {
        PolyQT::monomial(Rational::one(), 1, 0)
    }

    pub fn t() -> Self {
        PolyQT::monomial(Rational::one(), 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, q_exp: u32, t_exp: u32) -> Rational {
        self.terms.get(&(q_exp, t_exp)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    fn add_term(&mut self, key: (u32, u32), c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return PolyQT::zero();
        }
        PolyQT { terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = PolyQT::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Lex-leading term with `q > t`.
    pub fn leading(&self) -> Option<(&(u32, u32), &Rational)> {
        self.terms.last_key_value()
    }

    /// Leading coefficient in display order.
    pub fn display_leading_coeff(&self) -> Option<&Rational> {
        self.terms.iter().min_by(|a, b| display_order(a.0, b.0)).map(|(_, c)| c)
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> (u32, u32) {
        let q = self.terms.keys().map(|k| k.0).min().unwrap_or(0);
        let t = self.terms.keys().map(|k| k.1).min().unwrap_or(0);
        (q, t)
    }

    /// Divide by `q^a t^b`; the caller guarantees divisibility.
    pub fn shift_down(&self, a: u32, b: u32) -> Self {
        PolyQT { terms: self.terms.iter().map(|(k, v)| ((k.0 - a, k.1 - b), v.clone())).collect() }
    }

    pub fn shift_up(&self, a: u32, b: u32) -> Self {
        PolyQT { terms: self.terms.iter().map(|(k, v)| ((k.0 + a, k.1 + b), v.clone())).collect() }
    }

    /// The positive rational `c` with `self / c` having coprime integer
    /// coefficients.
    pub fn rational_content(&self) -> Rational {
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        if num_gcd.is_zero() {
            return Rational::one();
        }
        Rational::new(num_gcd, den_lcm)
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder. Uses multivariate division in lex order, which decides
    /// divisibility for a single divisor.
    pub fn div_exact(&self, divisor: &PolyQT) -> Option<PolyQT> {
        let (&(dq, dt), dc) = divisor.leading()?;
        let mut rem = self.clone();
        let mut quot = PolyQT::zero();
        while let Some((&(rq, rt), rc)) = rem.leading() {
            if rq < dq || rt < dt {
                return None;
            }
            let c = rc / dc;
            let step = PolyQT::monomial(c.clone(), rq - dq, rt - dt);
            rem = &rem - &(&step * divisor);
            quot.add_term((rq - dq, rt - dt), c);
        }
        Some(quot)
    }

    pub fn eval(&self, q0: &Rational, t0: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (&(a, b), c) in &self.terms {
            acc += c * pow_rat(q0, a) * pow_rat(t0, b);
        }
        acc
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.0 + k.1).max()
    }
}

pub(crate) fn pow_rat(x: &Rational, e: u32) -> Rational {
    num_traits::pow(x.clone(), e as usize)
}

impl Add for &PolyQT {
    type Output = PolyQT;
    fn add(self, rhs: &PolyQT) -> PolyQT {
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.add_term(*k, v.clone());
        }
        out
    }
}

impl Sub for &PolyQT {
    type Output = PolyQT;
    fn sub(self, rhs: &PolyQT) -> PolyQT {
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.add_term(*k, -v.clone());
        }
        out
    }
}

impl Mul for &PolyQT {
    type Output = PolyQT;
    fn mul(self, rhs: &PolyQT) -> PolyQT {
        let mut out = PolyQT::zero();
        for (ka, va) in &self.terms {
            for (kb, vb) in &rhs.terms {
                out.add_term((ka.0 + kb.0, ka.1 + kb.1), va * vb);
            }
        }
        out
    }
}

impl Neg for &PolyQT {
    type Output = PolyQT;
    fn neg(self) -> PolyQT {
        PolyQT { terms: self.terms.iter().map(|(k, v)| (*k, -v.clone())).collect() }
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, q_exp: u32, t_exp: u32) -> fmt::Result {
    let mut first = true;
    for (name, e) in [("q", q_exp), ("t", t_exp)] {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        if e == 1 {
            f.write_str(name)?;
        } else {
            write!(f, "{name}^{e}")?;
        }
    }
    Ok(())
}

/// Canonical form, e.g. `3*q^2*t - 1`, `q*t + t^2`, `1/2*q`.
impl fmt::Display for PolyQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut keys: Vec<&(u32, u32)> = self.terms.keys().collect();
        keys.sort_by(|a, b| display_order(a, b));
        for (i, key) in keys.into_iter().enumerate() {
            let c = &self.terms[key];
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let is_const = *key == (0, 0);
            if is_const {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write_monomial(f, key.0, key.1)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PolyQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn display_is_canonical() {
        let p = &(&PolyQT::monomial(r(3), 2, 1) - &PolyQT::one()) + &PolyQT::zero();
        assert_eq!(p.to_string(), "3*q^2*t - 1");
        let qt = &(&PolyQT::q() + &PolyQT::t()) * &PolyQT::t();
        assert_eq!(qt.to_string(), "q*t + t^2");
        let p = &PolyQT::q() + &PolyQT::monomial(r(2), 0, 1);
        assert_eq!(p.to_string(), "q + 2*t");
        assert_eq!(PolyQT::zero().to_string(), "0");
        assert_eq!(PolyQT::monomial(Rational::new(1.into(), 2.into()), 1, 0).to_string(), "1/2*q");
        assert_eq!((-&PolyQT::t()).to_string(), "-t");
    }

    #[test]
    fn exact_division() {
        let q_plus_t = &PolyQT::q() + &PolyQT::t();
        let prod = &q_plus_t.pow(3) * &(&PolyQT::q() - &PolyQT::from_int(2));
        assert_eq!(prod.div_exact(&q_plus_t.pow(2)), Some(&q_plus_t * &(&PolyQT::q() - &PolyQT::from_int(2))));
        assert_eq!(PolyQT::one().div_exact(&q_plus_t), None);
        assert_eq!((&PolyQT::q() * &PolyQT::t()).div_exact(&PolyQT::q()), Some(PolyQT::t()));
        assert_eq!(PolyQT::zero().div_exact(&q_plus_t), Some(PolyQT::zero()));
        assert_eq!(PolyQT::one().div_exact(&PolyQT::zero()), None);
    }

    #[test]
    fn evaluation() {
        let p = &PolyQT::q() + &PolyQT::monomial(r(2), 0, 1);
        assert_eq!(p.eval(&r(1), &r(0)), r(1));
        let p = &(&PolyQT::q() + &PolyQT::t()) * &PolyQT::t();
        assert_eq!(p.eval(&r(-1), &r(1)), r(0));
    }

    #[test]
    fn content() {
        let p = &PolyQT::monomial(Rational::new(2.into(), 3.into()), 2, 1)
            + &PolyQT::monomial(Rational::new(4.into(), 9.into()), 1, 3);
        assert_eq!(p.monomial_content(), (1, 1));
        assert_eq!(p.rational_content(), Rational::new(2.into(), 9.into()));
    }
}
