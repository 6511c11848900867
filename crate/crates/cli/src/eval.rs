//! Evaluation of parsed expressions into normal-form elements.
//!
//! Inside one context only two kinds of value circulate: scalars and the
//! context's element type. Scalars embed as multiples of the unit (the empty
//! word, the empty link, or the bracket unit) on demand.

use std::fmt;

use num_rational::BigRational;
use serde_json::Value as Json;

use skein_core::annulus::{AnnulusElement, Hook};
use skein_core::bracket::BracketElement;
use skein_core::coeff::{brace, delta, RatFunc};
use skein_core::torus::{CurveClass, SkeinElement};

use crate::expr::{Context, Expr, ExprKind};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalError {
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "evaluation error at byte {}: {}", self.offset, self.message)
    }
}

impl std::error::Error for EvalError {}

#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Scalar(RatFunc),
    Skein(SkeinElement),
    Annulus(AnnulusElement),
    Bracket(BracketElement),
}

impl Value {
    /// Render in the context's text form.
    pub fn render(&self) -> String {
        match self {
            Value::Scalar(c) => c.to_string(),
            Value::Skein(p) => p.to_string(),
            Value::Annulus(p) => p.to_string(),
            Value::Bracket(p) => p.to_string(),
        }
    }

    pub fn to_json(&self) -> Json {
        match self {
            Value::Scalar(c) => c.to_json(),
            Value::Skein(p) => p.to_json(),
            Value::Annulus(p) => p.to_json(),
            Value::Bracket(p) => p.to_json(),
        }
    }

    /// Force the value into the context's element type.
    pub fn into_element(self, ctx: Context) -> Value {
        match (self, ctx) {
            (Value::Scalar(c), Context::Torus) => Value::Skein(SkeinElement::scalar(c)),
            (Value::Scalar(c), Context::Annulus) => Value::Annulus(AnnulusElement::unit(c)),
            (Value::Scalar(c), Context::Bracket) => Value::Bracket(BracketElement::unit(c)),
            (v, _) => v,
        }
    }
}

fn err<T>(offset: usize, message: impl Into<String>) -> Result<T, EvalError> {
    Err(EvalError {
        offset,
        message: message.into(),
    })
}

fn combine_linear(
    offset: usize,
    ctx: Context,
    a: Value,
    b: Value,
    sub: bool,
) -> Result<Value, EvalError> {
    // Pure scalars stay scalars; anything else promotes both sides.
    if let (Value::Scalar(x), Value::Scalar(y)) = (&a, &b) {
        return Ok(Value::Scalar(if sub { x - y } else { x + y }));
    }
    match (a.into_element(ctx), b.into_element(ctx)) {
        (Value::Skein(x), Value::Skein(y)) => Ok(Value::Skein(if sub { &x - &y } else { &x + &y })),
        (Value::Annulus(x), Value::Annulus(y)) => {
            Ok(Value::Annulus(if sub { &x - &y } else { &x + &y }))
        }
        (Value::Bracket(x), Value::Bracket(y)) => {
            Ok(Value::Bracket(if sub { &x - &y } else { &x + &y }))
        }
        _ => err(offset, "mixed element kinds"),
    }
}

fn combine_mul(offset: usize, a: Value, b: Value) -> Result<Value, EvalError> {
    match (a, b) {
        (Value::Scalar(x), Value::Scalar(y)) => Ok(Value::Scalar(&x * &y)),
        (Value::Scalar(c), Value::Skein(p)) | (Value::Skein(p), Value::Scalar(c)) => {
            Ok(Value::Skein(p.scale(&c)))
        }
        (Value::Scalar(c), Value::Annulus(p)) | (Value::Annulus(p), Value::Scalar(c)) => {
            Ok(Value::Annulus(p.scale(&c)))
        }
        (Value::Scalar(c), Value::Bracket(p)) | (Value::Bracket(p), Value::Scalar(c)) => {
            Ok(Value::Bracket(p.scale(&c)))
        }
        (Value::Skein(x), Value::Skein(y)) => Ok(Value::Skein(x.multiply(&y))),
        (Value::Bracket(x), Value::Bracket(y)) => Ok(Value::Bracket(x.multiply(&y))),
        (Value::Annulus(_), Value::Annulus(_)) => err(
            offset,
            "products of annulus elements are not defined in the hook span",
        ),
        _ => err(offset, "mixed element kinds"),
    }
}

pub fn evaluate(e: &Expr, ctx: Context) -> Result<Value, EvalError> {
    match &e.kind {
        ExprKind::Add(a, b) => {
            combine_linear(e.offset, ctx, evaluate(a, ctx)?, evaluate(b, ctx)?, false)
        }
        ExprKind::Sub(a, b) => {
            combine_linear(e.offset, ctx, evaluate(a, ctx)?, evaluate(b, ctx)?, true)
        }
        ExprKind::Mul(a, b) => combine_mul(e.offset, evaluate(a, ctx)?, evaluate(b, ctx)?),
        ExprKind::Div(a, b) => {
            let (a, b) = (evaluate(a, ctx)?, evaluate(b, ctx)?);
            match (a, b) {
                (Value::Scalar(x), Value::Scalar(y)) => match x.checked_div(&y) {
                    Ok(q) => Ok(Value::Scalar(q)),
                    Err(_) => err(e.offset, "division by zero"),
                },
                _ => err(e.offset, "division is defined for scalars only"),
            }
        }
        ExprKind::Pow(a, n) => {
            let base = evaluate(a, ctx)?;
            match base {
                Value::Scalar(x) => match x.pow(*n) {
                    Ok(p) => Ok(Value::Scalar(p)),
                    Err(_) => err(e.offset, "zero raised to a negative power"),
                },
                element => {
                    if *n < 0 {
                        return err(e.offset, "elements cannot be raised to negative powers");
                    }
                    let mut acc = Value::Scalar(RatFunc::one()).into_element(ctx);
                    for _ in 0..*n {
                        acc = combine_mul(e.offset, acc, element.clone())?;
                    }
                    Ok(acc)
                }
            }
        }
        ExprKind::Neg(a) => {
            let v = evaluate(a, ctx)?;
            combine_mul(e.offset, Value::Scalar(-&RatFunc::one()), v)
        }
        ExprKind::Gen(a, b) => {
            if ctx != Context::Torus {
                return err(e.offset, format!("D[..] is not a {} atom", ctx.name()));
            }
            match CurveClass::new(*a, *b) {
                Ok(x) => Ok(Value::Skein(SkeinElement::generator(x))),
                Err(_) => err(e.offset, "the zero vector does not index a generator"),
            }
        }
        ExprKind::Curve(a, b) => {
            if ctx != Context::Bracket {
                return err(e.offset, format!("e[..] is not a {} atom", ctx.name()));
            }
            match CurveClass::new(*a, *b) {
                Ok(x) => Ok(Value::Bracket(BracketElement::generator(x))),
                Err(_) => err(e.offset, "the zero vector does not index a generator"),
            }
        }
        ExprKind::Hook(arm, leg) => {
            if ctx != Context::Annulus {
                return err(e.offset, format!("Q[..] is not a {} atom", ctx.name()));
            }
            Ok(Value::Annulus(AnnulusElement::hook(
                Hook::new(*arm, *leg),
                RatFunc::one(),
            )))
        }
        ExprKind::Brace(n) => Ok(Value::Scalar(brace(*n))),
        ExprKind::Delta => {
            if ctx == Context::Bracket {
                return err(e.offset, "delta involves v and is not a bracket scalar");
            }
            Ok(Value::Scalar(delta()))
        }
        ExprKind::S => Ok(Value::Scalar(RatFunc::s())),
        ExprKind::V => {
            if ctx == Context::Bracket {
                return err(e.offset, "v is not a bracket scalar");
            }
            Ok(Value::Scalar(RatFunc::v()))
        }
        ExprKind::Int(n) => Ok(Value::Scalar(RatFunc::from_rational(
            BigRational::from_integer(n.clone()),
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse;
    use skein_core::torus::{relation_rhs, Word};

    fn eval_torus(src: &str) -> Value {
        evaluate(&parse(src).unwrap(), Context::Torus).unwrap()
    }

    #[test]
    fn commutator_expression_matches_relation() {
        let v = eval_torus("D[1,0]*D[0,1] - D[0,1]*D[1,0]");
        let x = CurveClass::new(1, 0).unwrap();
        let y = CurveClass::new(0, 1).unwrap();
        assert_eq!(v, Value::Skein(relation_rhs(&x, &y)));
    }

    #[test]
    fn dx_equals_d_minus_x() {
        let v = eval_torus("D[1,0] - D[-1,0]");
        assert_eq!(v, Value::Skein(SkeinElement::zero()));
    }

    #[test]
    fn bracket_square_has_unit_two() {
        let v = evaluate(&parse("e[1,0]*e[1,0]").unwrap(), Context::Bracket).unwrap();
        match v {
            Value::Bracket(p) => {
                assert_eq!(p.unit_coeff(), &RatFunc::from_int(2));
                assert_eq!(
                    p.curve_coeff(&CurveClass::new(2, 0).unwrap()),
                    RatFunc::one()
                );
            }
            other => panic!("expected a bracket element, got {other:?}"),
        }
    }

    #[test]
    fn annulus_hook_sum_matches_expansion() {
        let v = evaluate(&parse("Q[2|0] - Q[1|1] + Q[0|2]").unwrap(), Context::Annulus).unwrap();
        match v {
            Value::Annulus(p) => {
                assert_eq!(p, skein_core::annulus::hook_expansion(3).unwrap());
            }
            other => panic!("expected an annulus element, got {other:?}"),
        }
    }

    #[test]
    fn context_mismatch_and_domain_errors() {
        assert!(evaluate(&parse("Q[1|0]").unwrap(), Context::Torus).is_err());
        assert!(evaluate(&parse("D[0,0]").unwrap(), Context::Torus).is_err());
        assert!(evaluate(&parse("Q[1|0]*Q[1|0]").unwrap(), Context::Annulus).is_err());
        assert!(evaluate(&parse("delta").unwrap(), Context::Bracket).is_err());
        assert!(evaluate(&parse("{2}/{0}").unwrap(), Context::Torus).is_err());
    }

    #[test]
    fn scalar_times_word_power() {
        let v = eval_torus("{2}*D[1,0]^2");
        match v {
            Value::Skein(p) => {
                let w = Word::from_gens(vec![
                    CurveClass::new(1, 0).unwrap(),
                    CurveClass::new(1, 0).unwrap(),
                ]);
                assert_eq!(p.coeff(&w), brace(2));
            }
            other => panic!("expected a torus element, got {other:?}"),
        }
    }
}
