//! Text, LaTeX and JSON forms of exponential sums.

use serde_json::{json, Value};

use super::{Basis, ExpSum, ExpSumError, Frequency};
use crate::numeric::{latex_rational, LaurentPoly, Rational, Scalar, SymPoly};

/// Options for LaTeX output.
#[derive(Debug, Clone, Default)]
pub struct LatexOptions {
    /// Factor `e^{q u}` printed in front of the sum.
    pub prefactor: Option<Frequency>,
}

fn text_frequency(f: &Frequency) -> Option<String> {
    if f.is_zero() {
        None
    } else {
        Some(format!("e^{{{} u}}", f.render()))
    }
}

fn latex_frequency(f: &Frequency) -> String {
    match f.as_rational() {
        Some(r) => latex_rational(&r),
        None => {
            let p = SymPoly::from_linear_form(f.coords()).expect("linear form");
            format!("\\left({}\\right)", p.render_latex(f.basis().symbols()))
        }
    }
}

fn latex_poly<C: Scalar>(p: &LaurentPoly<C>, symbols: &[String]) -> String {
    let parts: Vec<String> = p
        .terms()
        .rev()
        .map(|(e, c)| {
            let c = c.render_latex(symbols);
            match e {
                0 => format!("\\left({c}\\right)"),
                1 => format!("\\left({c}\\right)u"),
                _ => format!("\\left({c}\\right)u^{{{e}}}"),
            }
        })
        .collect();
    parts.join(" + ")
}

impl<C: Scalar> ExpSum<C> {
    /// Plain text such as `(-1/2)u^-2 e^{3/2 u} + (1/2)u^-2 e^{-3/2 u}`.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let symbols = self.basis().symbols();
        self.terms()
            .map(|(f, p)| {
                let coeff = if p.len() > 1 {
                    format!("[{}]", p.render(symbols))
                } else {
                    p.render(symbols)
                };
                match text_frequency(f) {
                    Some(e) => format!("{coeff} {e}"),
                    None => coeff,
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    pub fn to_latex(&self, opts: &LatexOptions) -> String {
        let symbols = self.basis().symbols();
        let body = if self.is_zero() {
            "0".to_string()
        } else {
            self.terms()
                .map(|(f, p)| {
                    let coeff = if p.len() > 1 {
                        format!("\\left[{}\\right]", latex_poly(p, symbols))
                    } else {
                        latex_poly(p, symbols)
                    };
                    if f.is_zero() {
                        coeff
                    } else {
                        format!("{coeff} e^{{{} u}}", latex_frequency(f))
                    }
                })
                .collect::<Vec<_>>()
                .join(" + ")
        };
        match &opts.prefactor {
            Some(q) if !q.is_zero() => {
                format!("e^{{{} u}}\\left({body}\\right)", latex_frequency(q))
            }
            _ => body,
        }
    }

    /// `{"basis": [...], "terms": [{"frequency": [...], "coefficients": [{"power", "coeff"}]}]}`.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms()
            .map(|(f, p)| {
                let coeffs: Vec<Value> = p
                    .terms()
                    .map(|(e, c)| json!({"power": e, "coeff": c.to_json()}))
                    .collect();
                json!({
                    "frequency": f.coords().iter().map(|r| r.to_string()).collect::<Vec<_>>(),
                    "coefficients": coeffs,
                })
            })
            .collect();
        json!({"basis": self.basis().names(), "terms": terms})
    }
}

fn bad(msg: impl Into<String>) -> ExpSumError {
    ExpSumError::Json(msg.into())
}

/// Parses the form written by [`ExpSum::to_json`].
pub fn parse_json<C: Scalar>(value: &Value) -> Result<ExpSum<C>, ExpSumError> {
    let names = value
        .get("basis")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing basis"))?;
    let names: Vec<&str> = names
        .iter()
        .map(|v| v.as_str().ok_or_else(|| bad("basis entries must be strings")))
        .collect::<Result<_, _>>()?;
    if names.first() != Some(&"1") {
        return Err(bad("basis must start with \"1\""));
    }
    let basis = Basis::with_symbols(&names[1..]);
    let terms = value
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing terms"))?;
    let mut out = ExpSum::zero(&basis);
    for t in terms {
        let coords = t
            .get("frequency")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("term without frequency"))?
            .iter()
            .map(|v| Rational::from_json(v).map_err(bad))
            .collect::<Result<Vec<_>, _>>()?;
        let freq = Frequency::new(basis.clone(), coords)?;
        let mut poly = LaurentPoly::zero();
        for c in t
            .get("coefficients")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("term without coefficients"))?
        {
            let e = c
                .get("power")
                .and_then(Value::as_i64)
                .and_then(|e| i32::try_from(e).ok())
                .ok_or_else(|| bad("power must be an integer"))?;
            let v = C::from_json(c.get("coeff").ok_or_else(|| bad("missing coeff"))?).map_err(bad)?;
            poly.add_term(e, &v);
        }
        out.insert_add(freq, &poly);
    }
    Ok(out)
}
