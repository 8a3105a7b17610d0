//! Text syntax for scalar literals.
//!
//! Rationals are written "p/q", symbols "t1", "t2", …, linear combinations
//! "1/2 + 2*t1". Products, powers and parenthesized quotients are accepted
//! for general field elements, e.g. "(t2 + 1)/(2*t1)" or "1/t1".

use super::poly::{Monomial, Poly};
use super::Scalar;
use crate::error::TwistError;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use std::collections::BTreeMap;

pub fn scalar_to_text(x: &Scalar) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    if x.denominator().is_one_poly() {
        poly_to_text(x.numerator())
    } else {
        format!("({})/({})", poly_to_text(x.numerator()), poly_to_text(x.denominator()))
    }
}

fn poly_to_text(p: &Poly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut parts: Vec<String> = Vec::new();
    // highest term first reads naturally
    for (m, c) in p.terms.iter().rev() {
        let mono = mono_to_text(m);
        let piece = if mono.is_empty() {
            rat_to_text(c)
        } else if c.is_one() {
            mono
        } else if (-c).is_one() {
            format!("-{mono}")
        } else {
            format!("{}*{}", rat_to_text(c), mono)
        };
        parts.push(piece);
    }
    let mut out = String::new();
    for (i, piece) in parts.iter().enumerate() {
        if i == 0 {
            out.push_str(piece);
        } else if let Some(rest) = piece.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(piece);
        }
    }
    out
}

fn mono_to_text(m: &Monomial) -> String {
    m.0.iter()
        .map(|&(s, e)| if e == 1 { format!("t{s}") } else { format!("t{s}^{e}") })
        .collect::<Vec<_>>()
        .join("*")
}

fn rat_to_text(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

// ---------------------------------------------------------------------------
// parser
// ---------------------------------------------------------------------------

pub fn parse_scalar(text: &str) -> Result<Scalar, TwistError> {
    let mut p = Parser { input: text.as_bytes(), pos: 0 };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != p.input.len() {
        return Err(TwistError::Parse(format!(
            "unexpected trailing input at byte {} in scalar literal {:?}",
            p.pos, text
        )));
    }
    Ok(v)
}

struct Parser<'a> {
    input: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.input.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Scalar, TwistError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Scalar, TwistError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.factor()?);
                }
                Some(b'/') => {
                    self.pos += 1;
                    let d = self.factor()?;
                    if d.is_zero() {
                        return Err(TwistError::Parse("division by zero in scalar literal".into()));
                    }
                    acc = acc.div(&d);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Scalar, TwistError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(self.factor()?.neg())
            }
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(TwistError::Parse("missing closing parenthesis".into()));
                }
                self.pos += 1;
                self.maybe_pow(v)
            }
            Some(b't') => {
                self.pos += 1;
                let id = self.integer_digits()?;
                let id: u32 = id
                    .parse()
                    .map_err(|_| TwistError::Parse("symbol index out of range".into()))?;
                if id == 0 {
                    return Err(TwistError::Parse("symbol indices start at t1".into()));
                }
                self.maybe_pow(Scalar::symbol(id))
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer_digits()?;
                let n: BigInt = n.parse().expect("digits parse as integer");
                self.maybe_pow(Scalar::from_rational(BigRational::from(n)))
            }
            other => Err(TwistError::Parse(format!(
                "unexpected {:?} in scalar literal",
                other.map(|c| c as char)
            ))),
        }
    }

    fn maybe_pow(&mut self, base: Scalar) -> Result<Scalar, TwistError> {
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let neg = if self.peek() == Some(b'-') {
                self.pos += 1;
                true
            } else {
                false
            };
            let e = self.integer_digits()?;
            let e: u32 = e.parse().map_err(|_| TwistError::Parse("exponent out of range".into()))?;
            let mut acc = Scalar::one();
            for _ in 0..e {
                acc = acc.mul(&base);
            }
            if neg {
                if acc.is_zero() {
                    return Err(TwistError::Parse("zero to a negative power".into()));
                }
                acc = acc.inv();
            }
            Ok(acc)
        } else {
            Ok(base)
        }
    }

    fn integer_digits(&mut self) -> Result<String, TwistError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(TwistError::Parse("expected digits".into()));
        }
        Ok(std::str::from_utf8(&self.input[start..self.pos]).unwrap().to_string())
    }
}

// ---------------------------------------------------------------------------
// JSON forms
// ---------------------------------------------------------------------------

/// Accepts "1/2 + 2*t1" (string), {"q": "1/2", "sym": {"t1": "2"}} or
/// {"num": "...", "den": "..."}.
pub fn scalar_from_json(v: &serde_json::Value) -> Result<Scalar, TwistError> {
    match v {
        serde_json::Value::String(s) => parse_scalar(s),
        serde_json::Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Scalar::from_int(i))
            } else {
                Err(TwistError::Parse(format!(
                    "non-integer number {n} in scalar position; write exact literals as strings"
                )))
            }
        }
        serde_json::Value::Object(map) => {
            if map.contains_key("num") || map.contains_key("den") {
                let num = match map.get("num") {
                    Some(serde_json::Value::String(s)) => parse_scalar(s)?,
                    None => Scalar::zero(),
                    _ => return Err(TwistError::Parse("\"num\" must be a string".into())),
                };
                let den = match map.get("den") {
                    Some(serde_json::Value::String(s)) => parse_scalar(s)?,
                    None => Scalar::one(),
                    _ => return Err(TwistError::Parse("\"den\" must be a string".into())),
                };
                if den.is_zero() {
                    return Err(TwistError::Parse("zero denominator".into()));
                }
                return Ok(num.div(&den));
            }
            let mut acc = match map.get("q") {
                Some(serde_json::Value::String(s)) => parse_rational(s)?,
                None => Scalar::zero(),
                _ => return Err(TwistError::Parse("\"q\" must be a string like \"p/q\"".into())),
            };
            if let Some(sym) = map.get("sym") {
                let serde_json::Value::Object(sym) = sym else {
                    return Err(TwistError::Parse("\"sym\" must be an object".into()));
                };
                // BTreeMap ordering for determinism
                let ordered: BTreeMap<&String, &serde_json::Value> = sym.iter().collect();
                for (k, val) in ordered {
                    let id: u32 = k
                        .strip_prefix('t')
                        .and_then(|s| s.parse().ok())
                        .filter(|&i| i > 0)
                        .ok_or_else(|| {
                            TwistError::Parse(format!("symbol key {k:?} is not of the form \"t<k>\""))
                        })?;
                    let serde_json::Value::String(cs) = val else {
                        return Err(TwistError::Parse("symbol coefficients must be strings".into()));
                    };
                    let c = parse_rational(cs)?
                        .as_rational()
                        .ok_or_else(|| TwistError::Parse("symbol coefficient must be rational".into()))?;
                    acc = acc.add(&Scalar::symbol(id).scale(&c));
                }
            }
            Ok(acc)
        }
        _ => Err(TwistError::Parse("scalar literal must be a string or object".into())),
    }
}

fn parse_rational(s: &str) -> Result<Scalar, TwistError> {
    let v = parse_scalar(s)?;
    if v.as_rational().is_none() {
        return Err(TwistError::Parse(format!("expected a rational literal, got {s:?}")));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_basics() {
        assert_eq!(parse_scalar("1/2").unwrap(), Scalar::rat(1, 2));
        assert_eq!(parse_scalar("-3").unwrap(), Scalar::from_int(-3));
        let x = parse_scalar("1/2 + 2*t1").unwrap();
        assert_eq!(x, Scalar::rat(1, 2).add(&Scalar::symbol(1).scale_int(2)));
        let y = parse_scalar("1/t1").unwrap();
        assert_eq!(y, Scalar::one().div(&Scalar::symbol(1)));
        let z = parse_scalar("(t2 + 1)/(2*t1)").unwrap();
        assert_eq!(
            z,
            Scalar::symbol(2).add(&Scalar::one()).div(&Scalar::symbol(1).scale_int(2))
        );
        assert_eq!(parse_scalar("t1^2").unwrap(), Scalar::symbol(1).mul(&Scalar::symbol(1)));
        assert!(parse_scalar("t0").is_err());
        assert!(parse_scalar("1 +").is_err());
        assert!(parse_scalar("q").is_err());
    }

    #[test]
    fn json_forms() {
        let v: serde_json::Value = serde_json::json!({"q": "1/2", "sym": {"t1": "2"}});
        let x = scalar_from_json(&v).unwrap();
        assert_eq!(x, parse_scalar("1/2 + 2*t1").unwrap());
        let v2: serde_json::Value = serde_json::json!({"num": "1", "den": "t1"});
        assert_eq!(scalar_from_json(&v2).unwrap(), parse_scalar("1/t1").unwrap());
        let v3 = serde_json::json!(7);
        assert_eq!(scalar_from_json(&v3).unwrap(), Scalar::from_int(7));
    }

    fn arb_scalar() -> impl Strategy<Value = Scalar> {
        let coeff = (-6i64..7, 1i64..5).prop_map(|(n, d)| Scalar::rat(n, d));
        (coeff.clone(), coeff.clone(), coeff, any::<bool>()).prop_map(|(a, b, c, frac)| {
            let lin = a.add(&Scalar::symbol(1).mul(&b)).add(&Scalar::symbol(2).mul(&c));
            if frac && !lin.is_zero() {
                Scalar::one().add(&Scalar::symbol(1)).div(&lin)
            } else {
                lin
            }
        })
    }

    proptest! {
        #[test]
        fn roundtrip(x in arb_scalar()) {
            let text = scalar_to_text(&x);
            let back = parse_scalar(&text).unwrap();
            prop_assert_eq!(back, x);
        }

        #[test]
        fn field_axioms(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            if !a.is_zero() {
                prop_assert_eq!(a.mul(&a.inv()), Scalar::one());
            }
        }

        #[test]
        fn integrality_closure(n in -20i64..20, m in -20i64..20) {
            let x = Scalar::from_int(n);
            let y = Scalar::from_int(m);
            prop_assert!(x.add(&y).is_integer());
            prop_assert!(x.mul(&y).is_integer());
        }
    }
}
