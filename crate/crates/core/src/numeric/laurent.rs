//! Sparse univariate Laurent polynomials in `u`.

use std::collections::BTreeMap;
use std::fmt;

use super::{Rational, Scalar};

/// `Σ c_d u^d` over integer exponents `d`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPoly<C: Scalar = Rational> {
    coeffs: BTreeMap<i32, C>,
}

impl<C: Scalar> Default for LaurentPoly<C> {
    fn default() -> Self {
        LaurentPoly { coeffs: BTreeMap::new() }
    }
}

impl<C: Scalar> LaurentPoly<C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(C::one(), 0)
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: C, exp: i32) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        LaurentPoly { coeffs }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i32, C)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, &c);
        }
        p
    }

    pub fn add_term(&mut self, exp: i32, c: &C) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&exp) {
            Some(slot) => {
                *slot = slot.add(c);
                if slot.is_zero() {
                    self.coeffs.remove(&exp);
                }
            }
            None => {
                self.coeffs.insert(exp, c.clone());
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Highest exponent; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<i32> {
        self.coeffs.keys().next_back().copied()
    }

    /// Lowest exponent; `None` for the zero polynomial.
    pub fn valuation(&self) -> Option<i32> {
        self.coeffs.keys().next().copied()
    }

    pub fn coeff(&self, exp: i32) -> C {
        self.coeffs.get(&exp).cloned().unwrap_or_else(C::zero)
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, &C)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The single `(coefficient, exponent)` pair if this is a nonzero monomial.
    pub fn as_monomial(&self) -> Option<(&C, i32)> {
        if self.coeffs.len() == 1 {
            self.coeffs.iter().next().map(|(e, c)| (c, *e))
        } else {
            None
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.coeffs {
            out.add_term(*e, c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ea, ca) in &self.coeffs {
            for (eb, cb) in &other.coeffs {
                out.add_term(ea + eb, &ca.mul(cb));
            }
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, v)| (*e, v.mul(c))).collect(),
        }
    }

    /// Multiplies by `u^k`.
    pub fn shift(&self, k: i32) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Inverse of a monomial `c u^d` as `c^{-1} u^{-d}`.
    pub fn monomial_inverse(&self) -> Option<Self> {
        let (c, e) = self.as_monomial()?;
        Some(Self::monomial(c.try_inverse()?, -e))
    }

    /// Applies `f` to every coefficient, dropping resulting zeros.
    pub fn map_coeffs<D: Scalar>(&self, mut f: impl FnMut(&C) -> D) -> LaurentPoly<D> {
        LaurentPoly::from_terms(self.coeffs.iter().map(|(e, c)| (*e, f(c))))
    }

    pub fn eval_f64(&self, u: f64, symbols: &[f64]) -> f64 {
        self.coeffs
            .iter()
            .map(|(e, c)| c.eval_f64(symbols) * u.powi(*e))
            .sum()
    }

    pub fn render(&self, symbols: &[String]) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        // Highest power first.
        self.coeffs
            .iter()
            .rev()
            .map(|(e, c)| {
                if *e == 0 {
                    format!("({})", c.render(symbols))
                } else {
                    format!("({})u^{}", c.render(symbols), e)
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl<C: Scalar> fmt::Debug for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(&[]))
    }
}

impl<C: Scalar> fmt::Display for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(&[]))
    }
}
