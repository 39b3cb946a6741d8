//! Coefficient rings for Laurent polynomials and exponential sums.
//!
//! Concrete computations use [`Rational`]. Two-symbol parametric computations
//! (symbolic areas on products of simplices) produce coefficients polynomial in
//! the symbols, carried by [`SymPoly`].

use std::collections::BTreeMap;
use std::fmt;

use serde_json::Value;

use super::Rational;

/// Exact commutative coefficient ring.
pub trait Scalar: Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn from_rational(r: Rational) -> Self;

    /// Multiplicative inverse when it exists inside the ring.
    fn try_inverse(&self) -> Option<Self>;

    /// The linear form `c0 + c1 g1 + c2 g2 + ...` over the symbol basis, if
    /// representable. `coords[0]` is the constant part.
    fn from_linear_form(coords: &[Rational]) -> Option<Self>;

    /// Collapses to a rational when the value involves no symbols.
    fn as_rational(&self) -> Option<Rational>;

    /// Substitutes rational values for the symbols.
    fn specialize(&self, symbols: &[Rational]) -> Rational;

    fn eval_f64(&self, symbols: &[f64]) -> f64;

    fn to_json(&self) -> Value;
    fn from_json(value: &Value) -> Result<Self, String>;

    /// Rendering with symbol names for human-readable output.
    fn render(&self, symbols: &[String]) -> String;
    fn render_latex(&self, symbols: &[String]) -> String;
}

impl Scalar for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_rational(r: Rational) -> Self {
        r
    }
    fn try_inverse(&self) -> Option<Self> {
        self.recip().ok()
    }
    fn from_linear_form(coords: &[Rational]) -> Option<Self> {
        match coords.split_first() {
            None => Some(Rational::zero()),
            Some((c0, rest)) if rest.iter().all(Rational::is_zero) => Some(c0.clone()),
            _ => None,
        }
    }
    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
    fn specialize(&self, _symbols: &[Rational]) -> Rational {
        self.clone()
    }
    fn eval_f64(&self, _symbols: &[f64]) -> f64 {
        self.to_f64()
    }
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
    fn from_json(value: &Value) -> Result<Self, String> {
        match value {
            Value::String(s) => s.parse().map_err(|e| format!("{e}")),
            Value::Number(n) => n
                .as_i64()
                .map(Rational::from_integer)
                .ok_or_else(|| format!("non-integer number {n}; write rationals as strings")),
            other => Err(format!("expected rational string, got {other}")),
        }
    }
    fn render(&self, _symbols: &[String]) -> String {
        self.to_string()
    }
    fn render_latex(&self, _symbols: &[String]) -> String {
        latex_rational(self)
    }
}

pub(crate) fn latex_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.to_string()
    } else if r.is_negative() {
        format!("-\\frac{{{}}}{{{}}}", -r.numer(), r.denom())
    } else {
        format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom())
    }
}

/// Sparse polynomial in the basis symbols with rational coefficients.
///
/// Monomial keys are exponent vectors with trailing zeros trimmed, so the
/// constant monomial is the empty vector and no symbol count is stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SymPoly {
    terms: BTreeMap<Vec<u32>, Rational>,
}

fn trim(mut exps: Vec<u32>) -> Vec<u32> {
    while exps.last() == Some(&0) {
        exps.pop();
    }
    exps
}

impl SymPoly {
    pub fn constant(r: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !r.is_zero() {
            terms.insert(Vec::new(), r);
        }
        SymPoly { terms }
    }

    /// The symbol with index `i` (0-based among the non-constant basis entries).
    pub fn symbol(i: usize) -> Self {
        let mut exps = vec![0; i + 1];
        exps[i] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(exps, Rational::one());
        SymPoly { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rational)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    fn insert_add(&mut self, exps: Vec<u32>, c: Rational) {
        let exps = trim(exps);
        let slot = self.terms.entry(exps.clone()).or_insert_with(Rational::zero);
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&exps);
        }
    }

    fn monomial_text(exps: &[u32], symbols: &[String], latex: bool) -> String {
        let mut parts = Vec::new();
        for (i, &e) in exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let name = symbols.get(i).cloned().unwrap_or_else(|| format!("g{}", i + 1));
            let name = if latex { latex_symbol(&name) } else { name };
            if e == 1 {
                parts.push(name);
            } else if latex {
                parts.push(format!("{name}^{{{e}}}"));
            } else {
                parts.push(format!("{name}^{e}"));
            }
        }
        parts.join(if latex { " " } else { "*" })
    }

    fn render_with(&self, symbols: &[String], latex: bool) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (exps, c)) in self.terms.iter().enumerate() {
            let mono = Self::monomial_text(exps, symbols, latex);
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let coeff = if latex { latex_rational(&mag) } else { mag.to_string() };
            if mono.is_empty() {
                out.push_str(&coeff);
            } else if mag.is_one() {
                out.push_str(&mono);
            } else if latex {
                out.push_str(&format!("{coeff} {mono}"));
            } else {
                out.push_str(&format!("{coeff}*{mono}"));
            }
        }
        out
    }
}

pub(crate) fn latex_symbol(name: &str) -> String {
    match name {
        "sigma" | "tau" | "lambda" | "kappa" => format!("\\{name}"),
        other => other.to_string(),
    }
}

impl fmt::Debug for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render_with(&[], false))
    }
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render_with(&[], false))
    }
}

impl Scalar for SymPoly {
    fn zero() -> Self {
        SymPoly::default()
    }
    fn one() -> Self {
        SymPoly::constant(Rational::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.insert_add(k.clone(), v.clone());
        }
        out
    }
    fn mul(&self, other: &Self) -> Self {
        let mut out = SymPoly::default();
        for (ka, va) in &self.terms {
            for (kb, vb) in &other.terms {
                let len = ka.len().max(kb.len());
                let exps = (0..len)
                    .map(|i| ka.get(i).copied().unwrap_or(0) + kb.get(i).copied().unwrap_or(0))
                    .collect();
                out.insert_add(exps, va * vb);
            }
        }
        out
    }
    fn neg(&self) -> Self {
        SymPoly {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), -v)).collect(),
        }
    }
    fn from_rational(r: Rational) -> Self {
        SymPoly::constant(r)
    }
    fn try_inverse(&self) -> Option<Self> {
        let c = self.as_rational()?;
        c.recip().ok().map(SymPoly::constant)
    }
    fn from_linear_form(coords: &[Rational]) -> Option<Self> {
        let mut out = SymPoly::default();
        for (i, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut exps = vec![0; i];
            if i > 0 {
                exps[i - 1] = 1;
            }
            out.insert_add(exps, c.clone());
        }
        Some(out)
    }
    fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Vec::new()).cloned(),
            _ => None,
        }
    }
    fn specialize(&self, symbols: &[Rational]) -> Rational {
        self.terms
            .iter()
            .map(|(exps, c)| {
                exps.iter().enumerate().fold(c.clone(), |acc, (i, &e)| {
                    let base = symbols.get(i).cloned().unwrap_or_else(Rational::zero);
                    acc * base.pow(e as i32).expect("nonnegative power")
                })
            })
            .sum()
    }
    fn eval_f64(&self, symbols: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|(exps, c)| {
                exps.iter().enumerate().fold(c.to_f64(), |acc, (i, &e)| {
                    acc * symbols.get(i).copied().unwrap_or(0.0).powi(e as i32)
                })
            })
            .sum()
    }
    fn to_json(&self) -> Value {
        if let Some(r) = self.as_rational() {
            return Value::String(r.to_string());
        }
        Value::Array(
            self.terms
                .iter()
                .map(|(exps, c)| {
                    serde_json::json!({ "exponents": exps, "coeff": c.to_string() })
                })
                .collect(),
        )
    }
    fn from_json(value: &Value) -> Result<Self, String> {
        match value {
            Value::Array(items) => {
                let mut out = SymPoly::default();
                for item in items {
                    let exps: Vec<u32> = serde_json::from_value(item["exponents"].clone())
                        .map_err(|e| format!("bad monomial exponents: {e}"))?;
                    let c = <Rational as Scalar>::from_json(&item["coeff"])?;
                    out.insert_add(exps, c);
                }
                Ok(out)
            }
            other => <Rational as Scalar>::from_json(other).map(SymPoly::constant),
        }
    }
    fn render(&self, symbols: &[String]) -> String {
        self.render_with(symbols, false)
    }
    fn render_latex(&self, symbols: &[String]) -> String {
        self.render_with(symbols, true)
    }
}
