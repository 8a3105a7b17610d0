//! Exact scalars: the field Q(t1, …, tk) generated by the rationals and
//! finitely many formal symbols assumed rationally independent.
//!
//! The symbols are never evaluated numerically in kernel logic; zero tests,
//! integrality tests and circle-value equality are all decided syntactically.

pub mod parse;
pub mod poly;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use poly::{poly_gcd, Poly};
use std::collections::BTreeMap;
use std::fmt;

/// An element of Q(t1, …, tk), stored as a reduced fraction of polynomials.
///
/// Canonical form: gcd(num, den) = 1, den has integer coefficients with
/// content 1 and positive leading coefficient; a constant denominator is 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Scalar {
    num: Poly,
    den: Poly,
}

impl Scalar {
    fn make(num: Poly, den: Poly) -> Scalar {
        assert!(!den.is_zero(), "scalar with zero denominator");
        if num.is_zero() {
            return Scalar { num: Poly::zero(), den: Poly::one() };
        }
        let g = poly_gcd(&num, &den);
        let (mut num, mut den) = match (num.exact_div(&g), den.exact_div(&g)) {
            (Some(n), Some(d)) => (n, d),
            _ => panic!(
                "computed gcd does not divide operands: num={:?} den={:?} g={:?}",
                num.terms, den.terms, g.terms
            ),
        };
        // unit normalization
        let dp = den.primitive_int();
        let unit = den.leading().unwrap().1 / dp.leading().unwrap().1;
        den = dp;
        num = num.scale(&(BigRational::one() / unit));
        if den.is_constant() {
            let c = den.constant_coeff();
            num = num.scale(&(BigRational::one() / c));
            den = Poly::one();
        }
        Scalar { num, den }
    }

    pub fn zero() -> Scalar {
        Scalar { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Scalar {
        Scalar { num: Poly::one(), den: Poly::one() }
    }

    pub fn from_rational(q: BigRational) -> Scalar {
        Scalar { num: Poly::constant(q), den: Poly::one() }
    }

    pub fn from_int(n: i64) -> Scalar {
        Scalar::from_rational(BigRational::from(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Scalar {
        Scalar::from_rational(BigRational::from(n))
    }

    pub fn rat(n: i64, d: i64) -> Scalar {
        Scalar::from_rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    /// The formal symbol `t<id>` (ids are 1-based in the text syntax).
    pub fn symbol(id: u32) -> Scalar {
        Scalar { num: Poly::symbol(id), den: Poly::one() }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        Scalar::make(num, den)
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        Scalar { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        Scalar::make(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn inv(&self) -> Scalar {
        assert!(!self.is_zero(), "inverting zero scalar");
        Scalar::make(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &Scalar) -> Scalar {
        self.mul(&other.inv())
    }

    pub fn scale(&self, q: &BigRational) -> Scalar {
        Scalar::make(self.num.scale(q), self.den.clone())
    }

    pub fn scale_int(&self, n: i64) -> Scalar {
        self.scale(&BigRational::from(BigInt::from(n)))
    }

    /// Exact integrality test: true iff the value is a rational integer.
    pub fn is_integer(&self) -> bool {
        self.den.is_one_poly() && self.num.is_constant() && self.num.constant_coeff().is_integer()
    }

    /// True iff the value lies in Q.
    pub fn is_rational(&self) -> bool {
        self.den.is_one_poly() && self.num.is_constant()
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if self.is_rational() {
            Some(self.num.constant_coeff())
        } else {
            None
        }
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        let q = self.as_rational()?;
        if q.is_integer() {
            Some(q.to_integer())
        } else {
            None
        }
    }

    /// Decompose a polynomial scalar as (rational part, symbol-coefficient map
    /// for degree-one monomials). `None` when the value is a genuine fraction
    /// or involves higher-degree monomials.
    pub fn linear_parts(&self) -> Option<(BigRational, BTreeMap<u32, BigRational>)> {
        if !self.den.is_one_poly() {
            return None;
        }
        let mut q = BigRational::zero();
        let mut sym = BTreeMap::new();
        for (m, c) in &self.num.terms {
            match m.0.as_slice() {
                [] => q = c.clone(),
                [(id, 1)] => {
                    sym.insert(*id, c.clone());
                }
                _ => return None,
            }
        }
        Some((q, sym))
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn symbols(&self) -> Vec<u32> {
        let mut s = self.num.symbols();
        s.extend(self.den.symbols());
        s.sort_unstable();
        s.dedup();
        s
    }

    /// Subtract the canonical integer part, leaving a representative of the
    /// class mod 1. Invariant: `reduce_mod1(x + n) == reduce_mod1(x)` for all
    /// integers n, and the result is in [0,1) whenever the value is rational.
    pub fn reduce_mod1(&self) -> Scalar {
        let dc = self.den.constant_coeff();
        if dc.is_zero() {
            return self.clone();
        }
        let nc = self.num.constant_coeff();
        let k = (nc / dc).floor();
        if k.is_zero() {
            self.clone()
        } else {
            self.sub(&Scalar::from_rational(k))
        }
    }

    /// Optional numeric rendering for reports; `values` assigns reals to
    /// symbol ids. Never used in kernel decisions.
    pub fn approx(&self, values: &BTreeMap<u32, f64>) -> Option<f64> {
        fn eval(p: &Poly, values: &BTreeMap<u32, f64>) -> Option<f64> {
            let mut acc = 0.0;
            for (m, c) in &p.terms {
                let mut t = c.to_f64()?;
                for &(s, e) in &m.0 {
                    t *= values.get(&s)?.powi(e as i32);
                }
                acc += t;
            }
            Some(acc)
        }
        let n = eval(&self.num, values)?;
        let d = eval(&self.den, values)?;
        Some(n / d)
    }
}

impl Poly {
    pub fn is_one_poly(&self) -> bool {
        self.is_constant() && self.constant_coeff().is_one()
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", parse::scalar_to_text(self))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", parse::scalar_to_text(self))
    }
}

/// A point of the circle group T = R/Z, written e(x) = exp(2*pi*i*x).
#[derive(Clone, Debug)]
pub struct CircleValue {
    angle: Scalar,
}

impl CircleValue {
    pub fn new(angle: Scalar) -> CircleValue {
        CircleValue { angle: angle.reduce_mod1() }
    }

    pub fn one() -> CircleValue {
        CircleValue::new(Scalar::zero())
    }

    pub fn angle(&self) -> &Scalar {
        &self.angle
    }

    pub fn is_one(&self) -> bool {
        self.angle.is_integer()
    }

    pub fn mul(&self, other: &CircleValue) -> CircleValue {
        CircleValue::new(self.angle.add(&other.angle))
    }

    pub fn conj(&self) -> CircleValue {
        CircleValue::new(self.angle.neg())
    }
}

impl PartialEq for CircleValue {
    fn eq(&self, other: &Self) -> bool {
        self.angle.sub(&other.angle).is_integer()
    }
}

impl Eq for CircleValue {}

impl fmt::Display for CircleValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e({})", self.angle)
    }
}

// ---------------------------------------------------------------------------
// serde: scalars serialize as canonical text; deserialization accepts the
// text syntax, the {"q": …, "sym": {…}} object for linear values, and a
// {"num": …, "den": …} object for general fractions.
// ---------------------------------------------------------------------------

impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&parse::scalar_to_text(self))
    }
}

impl<'de> serde::Deserialize<'de> for Scalar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let v = serde_json::Value::deserialize(d)?;
        parse::scalar_from_json(&v).map_err(|e| D::Error::custom(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(i: u32) -> Scalar {
        Scalar::symbol(i)
    }

    #[test]
    fn add_examples() {
        // (1/2) + (1/3) = 5/6
        assert_eq!(Scalar::rat(1, 2).add(&Scalar::rat(1, 3)), Scalar::rat(5, 6));
        // t1 + (-t1) = 0
        assert!(t(1).add(&t(1).neg()).is_zero());
        // (1/2 + 2 t1) + (1/2 + t2) = 1 + 2 t1 + t2
        let a = Scalar::rat(1, 2).add(&t(1).scale_int(2));
        let b = Scalar::rat(1, 2).add(&t(2));
        let expect = Scalar::one().add(&t(1).scale_int(2)).add(&t(2));
        assert_eq!(a.add(&b), expect);
    }

    #[test]
    fn is_integer_examples() {
        assert!(Scalar::from_int(3).is_integer());
        assert!(!Scalar::rat(1, 2).is_integer());
        // 2 + 0*t1 normalizes with the absent symbol
        assert!(Scalar::from_int(2).add(&t(1).scale_int(0)).is_integer());
        assert!(!t(1).is_integer());
        // t1 / t1 = 1
        assert!(t(1).div(&t(1)).is_integer());
        // (2 t1) / t1 = 2
        assert!(t(1).scale_int(2).div(&t(1)).is_integer());
        // (t2) / t1 is not an integer
        assert!(!t(2).div(&t(1)).is_integer());
        // (t1 + t2)/t1 is not an integer
        assert!(!t(1).add(&t(2)).div(&t(1)).is_integer());
    }

    #[test]
    fn scale_examples() {
        assert_eq!(t(1).scale_int(2), t(1).add(&t(1)));
        assert_eq!(Scalar::rat(1, 3).scale_int(3), Scalar::one());
        assert!(Scalar::rat(1, 2).add(&t(1)).scale_int(0).is_zero());
    }

    #[test]
    fn fraction_field() {
        let x = Scalar::one().div(&t(1)); // 1/t1
        assert_eq!(x.mul(&t(1)), Scalar::one());
        let y = t(2).div(&t(1).add(&Scalar::one())); // t2/(1+t1)
        let back = y.mul(&t(1).add(&Scalar::one()));
        assert_eq!(back, t(2));
    }

    #[test]
    fn mod1_reduction() {
        let x = Scalar::rat(7, 3);
        assert_eq!(x.reduce_mod1(), Scalar::rat(1, 3));
        let y = Scalar::rat(-1, 3);
        assert_eq!(y.reduce_mod1(), Scalar::rat(2, 3));
        // invariance under integer shifts, also for fractions
        let f = Scalar::one().div(&t(1)).add(&Scalar::from_int(5));
        assert_eq!(f.reduce_mod1(), Scalar::one().div(&t(1)).reduce_mod1());
        let w = t(1).add(&Scalar::from_int(2));
        assert_eq!(w.reduce_mod1(), t(1));
    }

    #[test]
    fn circle_values() {
        let a = CircleValue::new(Scalar::rat(1, 2));
        let b = CircleValue::new(Scalar::rat(3, 2));
        assert_eq!(a, b);
        assert!(a.mul(&b).is_one());
        assert_eq!(a.conj(), a);
        let c = CircleValue::new(t(1));
        assert_ne!(a, c);
        assert!(c.mul(&c.conj()).is_one());
    }

    #[test]
    fn approx_rendering() {
        let mut vals = BTreeMap::new();
        vals.insert(1u32, 0.5f64);
        let x = t(1).scale_int(2).add(&Scalar::one());
        assert!((x.approx(&vals).unwrap() - 2.0).abs() < 1e-12);
        assert!(x.approx(&BTreeMap::new()).is_none());
    }
}
