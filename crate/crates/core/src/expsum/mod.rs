//! Canonical exponential sums `Σ Q_i(u) e^{γ_i u}`.
//!
//! Exponentials with distinct frequencies are linearly independent over the
//! field of rational functions in `u`, so the map `frequency -> coefficient`
//! with zero coefficients removed is a canonical form: two sums denote the same
//! function exactly when their maps coincide. Equality is decided on that map
//! alone; numeric evaluation exists only as an independent cross-check.

mod render;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::numeric::{LaurentPoly, Rational, Scalar};

pub use render::{parse_json, LatexOptions};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExpSumError {
    #[error("mixed symbol bases: [{0}] vs [{1}]")]
    MixedBasis(String, String),
    /// A pole `u^{-order}` with the given coefficient survived summation.
    #[error("negative power residue: u^-{order} has coefficient {value}")]
    NegativePowerResidue { order: i32, value: Rational },
    #[error("operation requires the scalar basis [1]")]
    NotScalarBasis,
    #[error("frequency has {got} coordinates, basis expects {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("malformed exponential-sum JSON: {0}")]
    Json(String),
}

/// Ordered symbol basis `[1, g1, g2, ...]`. Only the symbol names are stored;
/// the leading constant direction is implicit.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Basis(Arc<[String]>);

impl Basis {
    /// The basis `[1]`: frequencies are plain rationals.
    pub fn scalar() -> Self {
        Basis(Arc::from(Vec::<String>::new()))
    }

    pub fn with_symbols<S: AsRef<str>>(symbols: &[S]) -> Self {
        Basis(symbols.iter().map(|s| s.as_ref().to_string()).collect::<Vec<_>>().into())
    }

    pub fn symbols(&self) -> &[String] {
        &self.0
    }

    /// Number of coordinates, including the constant direction.
    pub fn dim(&self) -> usize {
        self.0.len() + 1
    }

    pub fn is_scalar(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> Vec<String> {
        std::iter::once("1".to_string()).chain(self.0.iter().cloned()).collect()
    }
}

impl fmt::Debug for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.names().join(", "))
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.names().join(", "))
    }
}

/// A frequency `γ = c0 + c1 g1 + ...` over a symbol basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Frequency {
    basis: Basis,
    coords: Vec<Rational>,
}

impl Frequency {
    pub fn new(basis: Basis, coords: Vec<Rational>) -> Result<Self, ExpSumError> {
        if coords.len() != basis.dim() {
            return Err(ExpSumError::DimensionMismatch { expected: basis.dim(), got: coords.len() });
        }
        Ok(Frequency { basis, coords })
    }

    /// A plain rational frequency over `[1]`.
    pub fn scalar(r: Rational) -> Self {
        Frequency { basis: Basis::scalar(), coords: vec![r] }
    }

    pub fn zero(basis: &Basis) -> Self {
        Frequency { basis: basis.clone(), coords: vec![Rational::zero(); basis.dim()] }
    }

    pub fn constant(basis: &Basis, r: Rational) -> Self {
        let mut f = Self::zero(basis);
        f.coords[0] = r;
        f
    }

    /// `coeff * g_i` where `i` indexes the symbols (0-based).
    pub fn symbol(basis: &Basis, i: usize, coeff: Rational) -> Self {
        let mut f = Self::zero(basis);
        f.coords[i + 1] = coeff;
        f
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rational::is_zero)
    }

    /// The constant value, if no symbol coordinate is set.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coords[1..].iter().all(Rational::is_zero) {
            Some(self.coords[0].clone())
        } else {
            None
        }
    }

    pub fn add(&self, other: &Frequency) -> Frequency {
        debug_assert_eq!(self.basis, other.basis);
        Frequency {
            basis: self.basis.clone(),
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn neg(&self) -> Frequency {
        Frequency { basis: self.basis.clone(), coords: self.coords.iter().map(|a| -a).collect() }
    }

    pub fn sub(&self, other: &Frequency) -> Frequency {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rational) -> Frequency {
        Frequency { basis: self.basis.clone(), coords: self.coords.iter().map(|a| a * c).collect() }
    }

    /// Substitutes symbol values, giving a scalar frequency.
    pub fn specialize(&self, symbols: &[Rational]) -> Frequency {
        let mut v = self.coords[0].clone();
        for (c, s) in self.coords[1..].iter().zip(symbols) {
            v += &(c * s);
        }
        Frequency::scalar(v)
    }

    pub fn eval_f64(&self, symbols: &[f64]) -> f64 {
        let mut v = self.coords[0].to_f64();
        for (c, s) in self.coords[1..].iter().zip(symbols) {
            v += c.to_f64() * s;
        }
        v
    }

    /// The frequency as a coefficient-ring element (a linear polynomial in the symbols).
    pub fn to_scalar<C: Scalar>(&self) -> Option<C> {
        C::from_linear_form(&self.coords)
    }

    pub fn render(&self) -> String {
        match self.as_rational() {
            Some(r) => r.to_string(),
            None => {
                let p = crate::numeric::SymPoly::from_linear_form(&self.coords)
                    .expect("linear forms are representable");
                format!("({})", p.render(self.basis.symbols()))
            }
        }
    }
}

impl Ord for Frequency {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coords
            .cmp(&other.coords)
            .then_with(|| self.basis.symbols().cmp(other.basis.symbols()))
    }
}

impl PartialOrd for Frequency {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Frequency {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl fmt::Display for Frequency {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// `Σ Q_i(u) e^{γ_i u}` in canonical form.
#[derive(Clone, PartialEq, Eq)]
pub struct ExpSum<C: Scalar = Rational> {
    basis: Basis,
    terms: BTreeMap<Frequency, LaurentPoly<C>>,
}

impl<C: Scalar> ExpSum<C> {
    pub fn zero(basis: &Basis) -> Self {
        ExpSum { basis: basis.clone(), terms: BTreeMap::new() }
    }

    pub fn one(basis: &Basis) -> Self {
        Self::term(Frequency::zero(basis), LaurentPoly::one())
    }

    /// A constant (frequency zero) sum holding `poly`.
    pub fn laurent(basis: &Basis, poly: LaurentPoly<C>) -> Self {
        Self::term(Frequency::zero(basis), poly)
    }

    pub fn term(freq: Frequency, poly: LaurentPoly<C>) -> Self {
        let mut s = ExpSum { basis: freq.basis().clone(), terms: BTreeMap::new() };
        s.insert_add(freq, &poly);
        s
    }

    /// Merges raw terms by frequency and drops zero coefficients.
    ///
    /// An empty input yields the zero sum over the scalar basis.
    pub fn canonicalize(
        raw_terms: impl IntoIterator<Item = (Frequency, LaurentPoly<C>)>,
    ) -> Result<Self, ExpSumError> {
        let mut out: Option<Self> = None;
        for (freq, poly) in raw_terms {
            let sum = out.get_or_insert_with(|| Self::zero(freq.basis()));
            if sum.basis != *freq.basis() {
                return Err(mixed(&sum.basis, freq.basis()));
            }
            sum.insert_add(freq, &poly);
        }
        Ok(out.unwrap_or_else(|| Self::zero(&Basis::scalar())))
    }

    fn insert_add(&mut self, freq: Frequency, poly: &LaurentPoly<C>) {
        if poly.is_zero() {
            return;
        }
        match self.terms.get_mut(&freq) {
            Some(slot) => {
                *slot = slot.add(poly);
                if slot.is_zero() {
                    self.terms.remove(&freq);
                }
            }
            None => {
                self.terms.insert(freq, poly.clone());
            }
        }
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms sorted by frequency.
    pub fn terms(&self) -> impl Iterator<Item = (&Frequency, &LaurentPoly<C>)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, freq: &Frequency) -> Option<&LaurentPoly<C>> {
        self.terms.get(freq)
    }

    pub fn frequencies(&self) -> Vec<Frequency> {
        self.terms.keys().cloned().collect()
    }

    fn check_basis(&self, other: &Self) -> Result<(), ExpSumError> {
        if self.basis == other.basis {
            Ok(())
        } else {
            Err(mixed(&self.basis, &other.basis))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, ExpSumError> {
        self.check_basis(other)?;
        let mut out = self.clone();
        for (f, p) in &other.terms {
            out.insert_add(f.clone(), p);
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        ExpSum {
            basis: self.basis.clone(),
            terms: self.terms.iter().map(|(f, p)| (f.clone(), p.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self, ExpSumError> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self, ExpSumError> {
        self.check_basis(other)?;
        let mut out = Self::zero(&self.basis);
        for (fa, pa) in &self.terms {
            for (fb, pb) in &other.terms {
                out.insert_add(fa.add(fb), &pa.mul(pb));
            }
        }
        Ok(out)
    }

    pub fn mul_poly(&self, poly: &LaurentPoly<C>) -> Self {
        let mut out = Self::zero(&self.basis);
        for (f, p) in &self.terms {
            out.insert_add(f.clone(), &p.mul(poly));
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        self.mul_poly(&LaurentPoly::constant(c.clone()))
    }

    /// Multiplies by `e^{γ u}`.
    pub fn shift_frequency(&self, gamma: &Frequency) -> Self {
        ExpSum {
            basis: self.basis.clone(),
            terms: self.terms.iter().map(|(f, p)| (f.add(gamma), p.clone())).collect(),
        }
    }

    /// The substitution `u ↦ m u`.
    pub fn rescale_variable(&self, m: &Rational) -> Result<Self, crate::numeric::NumericError> {
        let mut terms = BTreeMap::new();
        for (f, p) in &self.terms {
            let mut q = LaurentPoly::zero();
            for (e, c) in p.terms() {
                q.add_term(e, &c.mul(&C::from_rational(m.pow(e)?)));
            }
            terms.insert(f.scale(m), q);
        }
        Ok(ExpSum { basis: self.basis.clone(), terms })
    }

    /// The inverse `c^{-1} u^{-d}` when this sum is a single monomial `c u^d` at
    /// frequency zero with `c` invertible.
    pub fn monomial_inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (f, p) = self.terms.iter().next()?;
        if !f.is_zero() {
            return None;
        }
        Some(Self::laurent(&self.basis, p.monomial_inverse()?))
    }

    /// Substitutes rational symbol values, collapsing to the scalar basis.
    pub fn specialize(&self, symbols: &[Rational]) -> ExpSum<Rational> {
        let mut out = ExpSum::zero(&Basis::scalar());
        for (f, p) in &self.terms {
            out.insert_add(f.specialize(symbols), &p.map_coeffs(|c| c.specialize(symbols)));
        }
        out
    }

    /// Maps coefficients into another ring.
    pub fn map_coeffs<D: Scalar>(&self, f: impl Fn(&C) -> D) -> ExpSum<D> {
        let mut out = ExpSum::zero(&self.basis);
        for (fr, p) in &self.terms {
            out.insert_add(fr.clone(), &p.map_coeffs(&f));
        }
        out
    }

    /// Plain floating-point evaluation at `u = u0`.
    pub fn eval_numeric(&self, u0: f64, symbol_values: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|(f, p)| p.eval_f64(u0, symbol_values) * (f.eval_f64(symbol_values) * u0).exp())
            .sum()
    }

    /// `(frequency, Laurent degree)` per term, sorted by frequency.
    pub fn degree_profile(&self) -> Vec<(Frequency, i32)> {
        self.terms
            .iter()
            .map(|(f, p)| (f.clone(), p.degree().expect("stored coefficients are nonzero")))
            .collect()
    }
}

impl ExpSum<Rational> {
    /// Taylor coefficients of `u^0 ... u^max_order`.
    ///
    /// Fails with `NegativePowerResidue` when a pole survives summation, which
    /// means the sum is not a genuine power series.
    pub fn u_series(&self, max_order: usize) -> Result<Vec<Rational>, ExpSumError> {
        if !self.basis.is_scalar() {
            return Err(ExpSumError::NotScalarBasis);
        }
        let lowest = self.terms.values().filter_map(|p| p.valuation()).min().unwrap_or(0).min(0);
        let top = max_order as i32;
        let mut coeffs = Vec::with_capacity((top - lowest + 1) as usize);
        for k in lowest..=top {
            let mut acc = Rational::zero();
            for (f, p) in &self.terms {
                let gamma = &f.coords()[0];
                for (d, c) in p.terms() {
                    if d > k {
                        break;
                    }
                    let j = (k - d) as u32;
                    let g = gamma.pow(j as i32).expect("nonnegative power");
                    acc += &(c * &g * Rational::inv_factorial(j));
                }
            }
            coeffs.push(acc);
        }
        for (k, c) in (lowest..0).zip(&coeffs) {
            if !c.is_zero() {
                return Err(ExpSumError::NegativePowerResidue { order: -k, value: c.clone() });
            }
        }
        Ok(coeffs.split_off((-lowest) as usize))
    }

    /// Embeds a rational sum into the symbolic coefficient ring over `basis`.
    ///
    /// Frequencies are padded with zero symbol coordinates.
    pub fn lift_to(&self, basis: &Basis) -> ExpSum<crate::numeric::SymPoly> {
        let mut out = ExpSum::zero(basis);
        for (f, p) in &self.terms {
            let mut coords = f.coords().to_vec();
            coords.resize(basis.dim(), Rational::zero());
            let freq = Frequency::new(basis.clone(), coords).expect("padded to basis dimension");
            out.insert_add(freq, &p.map_coeffs(|c| crate::numeric::SymPoly::constant(c.clone())));
        }
        out
    }
}

fn mixed(a: &Basis, b: &Basis) -> ExpSumError {
    ExpSumError::MixedBasis(a.to_string(), b.to_string())
}

/// Decides equality of the functions represented by two sums.
pub fn exp_sum_equal<C: Scalar>(a: &ExpSum<C>, b: &ExpSum<C>) -> Result<bool, ExpSumError> {
    a.check_basis(b)?;
    Ok(a.terms == b.terms)
}

impl<C: Scalar> fmt::Debug for ExpSum<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl<C: Scalar> fmt::Display for ExpSum<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}
