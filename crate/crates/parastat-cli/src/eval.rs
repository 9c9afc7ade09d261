//! Lowering parsed expressions to kernel values and normalizing them.

use parastat::kernel::{Element, TensorElement};
use parastat::quotient::{self, Presentation};
use parastat::AlgebraError;

use crate::ast::Ast;

/// A fully evaluated expression: a plain element or a tensor of rank 2 or 3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Element(Element),
    Tensor(TensorElement),
}

impl Value {
    pub fn render(&self) -> String {
        match self {
            Value::Element(e) => e.render(),
            Value::Tensor(t) => t.render(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvalError(pub String);

impl std::fmt::Display for EvalError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for EvalError {}

fn algebra_err(e: AlgebraError) -> EvalError {
    EvalError(e.to_string())
}

fn element_of(v: Value, context: &str) -> Result<Element, EvalError> {
    match v {
        Value::Element(e) => Ok(e),
        Value::Tensor(_) => Err(EvalError(format!(
            "{context} is not defined on tensors; tensors may only be added and subtracted"
        ))),
    }
}

fn lower(ast: &Ast, p: &Presentation) -> Result<Value, EvalError> {
    match ast {
        Ast::Scalar(c) => Ok(Value::Element(Element::scalar(
            p.alphabet().clone(),
            c.clone(),
        ))),
        Ast::Gen(token) => p
            .generator_element(token)
            .map(Value::Element)
            .ok_or_else(|| {
                EvalError(format!(
                    "unknown generator `{token}` in algebra `{}`",
                    p.name()
                ))
            }),
        Ast::Neg(x) => Ok(match lower(x, p)? {
            Value::Element(e) => Value::Element(e.neg()),
            Value::Tensor(t) => Value::Tensor(t.neg()),
        }),
        Ast::Add(l, r) | Ast::Sub(l, r) => {
            let subtract = matches!(ast, Ast::Sub(..));
            let lv = lower(l, p)?;
            let rv = lower(r, p)?;
            match (lv, rv) {
                (Value::Element(a), Value::Element(b)) => {
                    let out = if subtract { a.sub(&b) } else { a.add(&b) };
                    Ok(Value::Element(out.map_err(algebra_err)?))
                }
                (Value::Tensor(a), Value::Tensor(b)) => {
                    let out = if subtract { a.sub(&b) } else { a.add(&b) };
                    Ok(Value::Tensor(out.map_err(algebra_err)?))
                }
                _ => Err(EvalError(
                    "cannot mix tensors and plain elements in a sum".into(),
                )),
            }
        }
        Ast::Mul(l, r) => {
            let a = element_of(lower(l, p)?, "multiplication")?;
            let b = element_of(lower(r, p)?, "multiplication")?;
            Ok(Value::Element(a.multiply(&b).map_err(algebra_err)?))
        }
        Ast::Pow(b, e) => {
            let a = element_of(lower(b, p)?, "exponentiation")?;
            Ok(Value::Element(a.pow(*e).map_err(algebra_err)?))
        }
        Ast::Commutator(l, r) => {
            let a = element_of(lower(l, p)?, "the commutator")?;
            let b = element_of(lower(r, p)?, "the commutator")?;
            Ok(Value::Element(a.commutator(&b).map_err(algebra_err)?))
        }
        Ast::Anticommutator(l, r) => {
            let a = element_of(lower(l, p)?, "the anticommutator")?;
            let b = element_of(lower(r, p)?, "the anticommutator")?;
            Ok(Value::Element(a.anticommutator(&b).map_err(algebra_err)?))
        }
        Ast::Tensor(parts) => {
            let mut slots = Vec::new();
            for part in parts {
                slots.push(element_of(lower(part, p)?, "a tensor slot")?);
            }
            let refs: Vec<&Element> = slots.iter().collect();
            Ok(Value::Tensor(
                TensorElement::of_elements(&refs).map_err(algebra_err)?,
            ))
        }
    }
}

/// Lowers the AST over the presentation's alphabet without reducing modulo
/// the ideal.  Used where the raw free-algebra element is wanted, e.g. when
/// reading relation and structure-map lines from a presentation file.
pub fn lower_raw(ast: &Ast, p: &Presentation) -> Result<Value, EvalError> {
    lower(ast, p)
}

/// Lowers the AST over the presentation's alphabet and reduces the result to
/// its canonical normal form at truncation degree `degree`.
pub fn evaluate(ast: &Ast, p: &Presentation, degree: u32) -> Result<Value, EvalError> {
    let raw = lower(ast, p)?;
    let normalized = match &raw {
        Value::Element(e) => quotient::normal_form(e, p, degree).map(Value::Element),
        Value::Tensor(t) => quotient::tensor_normal_form(t, p, degree).map(Value::Tensor),
    };
    normalized.map_err(|err| match err {
        AlgebraError::TruncationExceeded { required, .. } => EvalError(format!(
            "the expression needs truncation degree {required}; rerun with --degree {required} or higher",
        )),
        other => algebra_err(other),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ast;
    use parastat::presets;

    #[test]
    fn worked_evaluations() {
        let pb = presets::parabosonic(1).unwrap();
        let v = evaluate(&ast::parse("[{b1+,b1-},b1-]").unwrap(), &pb, 3).unwrap();
        assert_eq!(v.render(), "-2*b1-");

        let (pbg, _) = presets::load("pbg:1").unwrap();
        let v = evaluate(&ast::parse("g*b1+*g").unwrap(), &pbg, 3).unwrap();
        assert_eq!(v.render(), "-b1+");

        let (pbk, _) = presets::load("pbk:1").unwrap();
        let v = evaluate(&ast::parse("K+*K-").unwrap(), &pbk, 3).unwrap();
        assert_eq!(v.render(), "1");
    }

    #[test]
    fn tensor_evaluation() {
        let (pbg, maps) = presets::load("pbg:1").unwrap();
        let idx = pbg.alphabet().index_of("b1+").unwrap();
        let v = evaluate(&ast::parse("b1+ ox 1 + g ox b1+").unwrap(), &pbg, 3).unwrap();
        match v {
            Value::Tensor(t) => assert_eq!(&t, maps.coproduct_image(idx).unwrap()),
            other => panic!("expected a tensor, got {other:?}"),
        }
    }

    #[test]
    fn truncation_message_is_actionable() {
        let pb = presets::parabosonic(1).unwrap();
        let err = evaluate(&ast::parse("b1+^5").unwrap(), &pb, 3).unwrap_err();
        assert!(err.0.contains("--degree 5"), "{}", err.0);
    }

    #[test]
    fn unknown_generator_is_reported() {
        let pb = presets::parabosonic(1).unwrap();
        let err = evaluate(&ast::parse("f1+").unwrap(), &pb, 3).unwrap_err();
        assert!(err.0.contains("unknown generator"));
    }

    #[test]
    fn seeded_round_trip_through_printer() {
        use parastat::superhopf::{random_elements, SampleConfig};
        let pb = presets::parabosonic(2).unwrap();
        let cfg = SampleConfig {
            seed: 0xC0FFEE,
            count: 200,
        };
        for x in random_elements(pb.alphabet(), cfg) {
            let printed = x.render();
            let reparsed = ast::parse(&printed).unwrap();
            let v = evaluate(&reparsed, &pb, 4).unwrap();
            let expected = quotient::normal_form(&x, &pb, 4).unwrap();
            assert_eq!(v, Value::Element(expected), "round-tripping `{printed}`");
        }
    }
}
