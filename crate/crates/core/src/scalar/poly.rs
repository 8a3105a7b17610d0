//! Multivariate polynomials over Q in the formal symbols t1, t2, …
//!
//! The symbols are treated as algebraically independent transcendentals, so a
//! polynomial is zero exactly when every coefficient vanishes. Sizes stay tiny
//! throughout the toolkit, so the primitive-PRS gcd below is entirely adequate.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

/// A power product of symbols, sorted by symbol id with positive exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monomial(pub Vec<(u32, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn symbol(id: u32) -> Self {
        Monomial(vec![(id, 1)])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn deg_in(&self, id: u32) -> u32 {
        self.0.iter().find(|&&(s, _)| s == id).map_or(0, |&(_, e)| e)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m: BTreeMap<u32, u32> = self.0.iter().copied().collect();
        for &(s, e) in &other.0 {
            *m.entry(s).or_insert(0) += e;
        }
        Monomial(m.into_iter().collect())
    }

    /// self / other, if other divides self.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut m: BTreeMap<u32, u32> = self.0.iter().copied().collect();
        for &(s, e) in &other.0 {
            let have = m.get_mut(&s)?;
            if *have < e {
                return None;
            }
            *have -= e;
            if *have == 0 {
                m.remove(&s);
            }
        }
        Some(Monomial(m.into_iter().collect()))
    }

    pub fn without(&self, id: u32) -> Monomial {
        Monomial(self.0.iter().copied().filter(|&(s, _)| s != id).collect())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Graded order: by total degree, then by the exponent vector.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Poly {
    pub terms: BTreeMap<Monomial, BigRational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Poly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        Poly { terms }
    }

    pub fn symbol(id: u32) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::symbol(id), BigRational::one());
        Poly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.keys().all(|m| m.0.is_empty())
    }

    pub fn constant_coeff(&self) -> BigRational {
        self.terms.get(&Monomial::one()).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn leading(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn symbols(&self) -> Vec<u32> {
        let mut s: Vec<u32> = self.terms.keys().flat_map(|m| m.0.iter().map(|&(id, _)| id)).collect();
        s.sort_unstable();
        s.dedup();
        s
    }

    fn insert_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get() + c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.insert_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    /// Exact division; `None` if `d` does not divide `self`.
    pub fn exact_div(&self, d: &Poly) -> Option<Poly> {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        let (dlm, dlc) = {
            let (m, c) = d.leading().unwrap();
            (m.clone(), c.clone())
        };
        while !rem.is_zero() {
            let (rlm, rlc) = {
                let (m, c) = rem.leading().unwrap();
                (m.clone(), c.clone())
            };
            let qm = rlm.div(&dlm)?;
            let qc = rlc / &dlc;
            let t = Poly { terms: [(qm, qc)].into_iter().collect() };
            rem = rem.sub(&t.mul(d));
            quot = quot.add(&t);
        }
        Some(quot)
    }

    /// Degree in one symbol.
    pub fn deg_in(&self, id: u32) -> u32 {
        self.terms.keys().map(|m| m.deg_in(id)).max().unwrap_or(0)
    }

    /// Coefficients as polynomials in the remaining symbols, viewing self in `id`.
    fn coeffs_in(&self, id: u32) -> Vec<Poly> {
        let d = self.deg_in(id) as usize;
        let mut out = vec![Poly::zero(); d + 1];
        for (m, c) in &self.terms {
            let e = m.deg_in(id) as usize;
            out[e].insert_term(m.without(id), c.clone());
        }
        out
    }

    fn from_coeffs_in(id: u32, coeffs: &[Poly]) -> Poly {
        let mut out = Poly::zero();
        for (e, c) in coeffs.iter().enumerate() {
            let xe = Poly {
                terms: [(
                    if e == 0 { Monomial::one() } else { Monomial(vec![(id, e as u32)]) },
                    BigRational::one(),
                )]
                .into_iter()
                .collect(),
            };
            out = out.add(&c.mul(&xe));
        }
        out
    }

    /// Canonical unit normalization: leading coefficient 1.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some((_, c)) => {
                let inv = BigRational::one() / c.clone();
                self.scale(&inv)
            }
        }
    }

    /// Scale to integer coefficients with content 1 and positive leading coefficient.
    pub fn primitive_int(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut lcm = BigInt::one();
        for c in self.terms.values() {
            lcm = lcm.lcm(c.denom());
        }
        let mut gcd = BigInt::zero();
        for c in self.terms.values() {
            gcd = gcd.gcd(&(c.numer() * &lcm / c.denom()));
        }
        let mut factor = BigRational::new(lcm, gcd);
        if self.leading().unwrap().1.is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }
}

/// Gcd of multivariate polynomials over Q, normalized monic.
pub fn poly_gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    let mut syms = a.symbols();
    syms.extend(b.symbols());
    syms.sort_unstable();
    syms.dedup();
    let x = syms[0];
    gcd_univ(a, b, x).monic()
}

/// Gcd viewing both as univariate in `x` with polynomial coefficients.
fn gcd_univ(a: &Poly, b: &Poly, x: u32) -> Poly {
    let ca = content_in(a, x);
    let cb = content_in(b, x);
    let c = poly_gcd(&ca, &cb);
    let mut p = a.exact_div(&ca).unwrap();
    let mut q = b.exact_div(&cb).unwrap();
    if p.deg_in(x) < q.deg_in(x) {
        std::mem::swap(&mut p, &mut q);
    }
    while !q.is_zero() {
        let r = pseudo_rem(&p, &q, x);
        p = q;
        q = if r.is_zero() {
            Poly::zero()
        } else {
            let cr = content_in(&r, x);
            r.exact_div(&cr).unwrap()
        };
    }
    let pp = {
        let cp = content_in(&p, x);
        p.exact_div(&cp).unwrap()
    };
    c.mul(&pp)
}

/// Content: gcd of the coefficient polynomials w.r.t. `x`.
fn content_in(p: &Poly, x: u32) -> Poly {
    let coeffs = p.coeffs_in(x);
    let mut g = Poly::zero();
    for c in coeffs.iter().filter(|c| !c.is_zero()) {
        g = poly_gcd(&g, c);
        if g.is_constant() && !g.is_zero() {
            return Poly::one();
        }
    }
    g
}

/// Pseudo-remainder of `a` by `b` in the variable `x`.
fn pseudo_rem(a: &Poly, b: &Poly, x: u32) -> Poly {
    fn trim(v: &mut Vec<Poly>) {
        while v.len() > 1 && v.last().unwrap().is_zero() {
            v.pop();
        }
    }
    let mut ra = a.coeffs_in(x);
    trim(&mut ra);
    let mut cb = b.coeffs_in(x);
    trim(&mut cb);
    let db = cb.len() - 1;
    let lb = cb[db].clone();
    while !(ra.len() == 1 && ra[0].is_zero()) && ra.len() - 1 >= db {
        let da = ra.len() - 1;
        let lead = ra[da].clone();
        // ra := lb * ra - lead * x^(da-db) * b; the top term cancels exactly
        for c in ra.iter_mut() {
            *c = c.mul(&lb);
        }
        for (i, cbi) in cb.iter().enumerate() {
            let idx = da - db + i;
            ra[idx] = ra[idx].sub(&lead.mul(cbi));
        }
        debug_assert!(ra[da].is_zero());
        trim(&mut ra);
        if da == db {
            break; // degree fell below db (or ra is now the remainder)
        }
    }
    Poly::from_coeffs_in(x, &ra)
}

pub fn poly_lcm(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() || b.is_zero() {
        return Poly::zero();
    }
    let g = poly_gcd(a, b);
    a.mul(b).exact_div(&g).unwrap().monic()
}
