//! Truncated Laurent series in `ε` with exponential-sum coefficients.

use thiserror::Error;

use super::Scalar;
use crate::expsum::{Basis, ExpSum, ExpSumError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("leading coefficient is not an invertible monomial")]
    NonInvertibleLeadingTerm,
    #[error(transparent)]
    ExpSum(#[from] ExpSumError),
}

/// `Σ_{k=valuation}^{order} c_k ε^k + O(ε^{order+1})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries<C: Scalar = super::Rational> {
    basis: Basis,
    valuation: i32,
    coeffs: Vec<ExpSum<C>>,
}

impl<C: Scalar> TruncatedSeries<C> {
    /// Builds a series from `coeffs[i]` = coefficient of `ε^{valuation+i}`.
    /// The last entry fixes the order; an empty list is the unknown series `O(ε^valuation)`.
    pub fn new(basis: &Basis, valuation: i32, coeffs: Vec<ExpSum<C>>) -> Result<Self, SeriesError> {
        for c in &coeffs {
            if c.basis() != basis {
                return Err(ExpSumError::MixedBasis(basis.to_string(), c.basis().to_string()).into());
            }
        }
        Ok(TruncatedSeries { basis: basis.clone(), valuation, coeffs })
    }

    /// `c` exactly, known through `ε^order`.
    pub fn constant(c: ExpSum<C>, order: i32) -> Self {
        let basis = c.basis().clone();
        let mut coeffs = vec![c];
        coeffs.extend((0..order.max(0)).map(|_| ExpSum::zero(&basis)));
        TruncatedSeries { basis, valuation: 0, coeffs }
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    pub fn valuation(&self) -> i32 {
        self.valuation
    }

    /// Highest exponent whose coefficient is known.
    pub fn order(&self) -> i32 {
        self.valuation + self.coeffs.len() as i32 - 1
    }

    /// Coefficient of `ε^k`; `None` beyond the truncation order.
    pub fn coefficient(&self, k: i32) -> Option<ExpSum<C>> {
        if k > self.order() {
            None
        } else if k < self.valuation {
            Some(ExpSum::zero(&self.basis))
        } else {
            Some(self.coeffs[(k - self.valuation) as usize].clone())
        }
    }

    /// The lowest exponent with a nonzero known coefficient.
    pub fn leading_exponent(&self) -> Option<i32> {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .map(|i| self.valuation + i as i32)
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        let v = self.valuation.min(other.valuation);
        let o = self.order().min(other.order());
        let mut coeffs = Vec::new();
        for k in v..=o {
            let a = self.coefficient(k).expect("within order");
            let b = other.coefficient(k).expect("within order");
            coeffs.push(a.add(&b)?);
        }
        Ok(TruncatedSeries { basis: self.basis.clone(), valuation: v, coeffs })
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            basis: self.basis.clone(),
            valuation: self.valuation,
            coeffs: self.coeffs.iter().map(ExpSum::neg).collect(),
        }
    }

    /// Multiplies every coefficient by an exponential sum.
    pub fn scale(&self, c: &ExpSum<C>) -> Result<Self, SeriesError> {
        Ok(TruncatedSeries {
            basis: self.basis.clone(),
            valuation: self.valuation,
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect::<Result<_, _>>()?,
        })
    }

    /// Coefficients of `ε^k` for negative `k` that are nonzero.
    pub fn negative_residues(&self) -> Vec<(i32, ExpSum<C>)> {
        (self.valuation..0)
            .filter_map(|k| {
                let c = self.coefficient(k)?;
                (!c.is_zero()).then_some((k, c))
            })
            .collect()
    }
}

/// Product of two truncated series.
pub fn series_mul<C: Scalar>(
    a: &TruncatedSeries<C>,
    b: &TruncatedSeries<C>,
) -> Result<TruncatedSeries<C>, SeriesError> {
    let v = a.valuation + b.valuation;
    let o = (a.order() + b.valuation).min(b.order() + a.valuation);
    let mut coeffs = Vec::with_capacity((o - v + 1).max(0) as usize);
    for k in v..=o {
        let mut acc = ExpSum::zero(&a.basis);
        for i in a.valuation..=(k - b.valuation) {
            let ai = &a.coeffs[(i - a.valuation) as usize];
            if ai.is_zero() {
                continue;
            }
            let bj = &b.coeffs[(k - i - b.valuation) as usize];
            acc = acc.add(&ai.mul(bj)?)?;
        }
        coeffs.push(acc);
    }
    Ok(TruncatedSeries { basis: a.basis.clone(), valuation: v, coeffs })
}

/// Reciprocal of a series whose leading coefficient is a monomial `c u^d`.
///
/// The relative precision (number of known coefficients past the leading one)
/// is preserved.
pub fn series_invert<C: Scalar>(a: &TruncatedSeries<C>) -> Result<TruncatedSeries<C>, SeriesError> {
    let lead = a.leading_exponent().ok_or(SeriesError::NonInvertibleLeadingTerm)?;
    let known: Vec<&ExpSum<C>> = a.coeffs[(lead - a.valuation) as usize..].iter().collect();
    let inv0 = known[0].monomial_inverse().ok_or(SeriesError::NonInvertibleLeadingTerm)?;
    let mut out: Vec<ExpSum<C>> = vec![inv0.clone()];
    for k in 1..known.len() {
        let mut acc = ExpSum::zero(&a.basis);
        for j in 1..=k {
            acc = acc.add(&known[j].mul(&out[k - j])?)?;
        }
        out.push(acc.mul(&inv0)?.neg());
    }
    Ok(TruncatedSeries { basis: a.basis.clone(), valuation: -lead, coeffs: out })
}
