//! The cyclotomic field Q(v), v a primitive m-th root of unity.
//!
//! Elements are coefficient vectors of length phi(m) in the power basis
//! 1, v, ..., v^(phi(m)-1), always reduced modulo the m-th cyclotomic
//! polynomial, so equality is coefficient-wise.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ring::{Domain, Field, Ring};
use crate::error::{ContourError, Result};

pub type Rational = BigRational;

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// Long division by a monic integer polynomial; panics if inexact.
fn div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    if rem.len() <= dd {
        return vec![BigInt::zero()];
    }
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for k in (dd..rem.len()).rev() {
        let c = rem[k].clone();
        if c.is_zero() {
            continue;
        }
        quot[k - dd] = c.clone();
        for (j, dj) in den.iter().enumerate() {
            rem[k - dd + j] -= &c * dj;
        }
    }
    assert!(rem.iter().all(Zero::is_zero), "cyclotomic division inexact");
    quot
}

/// The m-th cyclotomic polynomial, coefficients listed from x^0 upwards.
pub fn cyclotomic_modulus(m: u32) -> Vec<BigInt> {
    assert!(m >= 1, "cyclotomic order must be positive");
    let mut poly = vec![BigInt::zero(); m as usize + 1];
    poly[0] = -BigInt::one();
    poly[m as usize] = BigInt::one();
    for e in divisors(m) {
        if e < m {
            poly = div_monic(&poly, &cyclotomic_modulus(e));
        }
    }
    poly
}

/// Shared data for Q(v) at a fixed order.
#[derive(Debug)]
pub struct CyclotomicField {
    order: u32,
    modulus: Vec<Rational>,
    nu_powers: Vec<Vec<Rational>>,
}

impl CyclotomicField {
    fn build(order: u32) -> Self {
        let modulus: Vec<Rational> = cyclotomic_modulus(order)
            .into_iter()
            .map(Rational::from_integer)
            .collect();
        let degree = modulus.len() - 1;
        let mut field = CyclotomicField {
            order,
            modulus,
            nu_powers: Vec::new(),
        };
        let mut powers = Vec::with_capacity(order as usize);
        for k in 0..order as usize {
            let mut v = vec![Rational::zero(); (k + 1).max(degree)];
            v[k] = Rational::one();
            powers.push(field.reduce(v));
        }
        field.nu_powers = powers;
        field
    }

    /// Registry lookup; fields are built once per order.
    pub fn get(order: u32) -> Arc<CyclotomicField> {
        static REGISTRY: OnceLock<Mutex<HashMap<u32, Arc<CyclotomicField>>>> = OnceLock::new();
        let registry = REGISTRY.get_or_init(|| Mutex::new(HashMap::new()));
        let mut map = registry.lock().expect("cyclotomic registry poisoned");
        map.entry(order)
            .or_insert_with(|| Arc::new(CyclotomicField::build(order)))
            .clone()
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// phi(m), the dimension of Q(v) over Q.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    fn reduce(&self, mut v: Vec<Rational>) -> Vec<Rational> {
        let deg = self.degree();
        if v.len() > deg {
            for k in (deg..v.len()).rev() {
                if v[k].is_zero() {
                    continue;
                }
                let c = v[k].clone();
                for j in 0..deg {
                    let t = &c * &self.modulus[j];
                    v[k - deg + j] -= t;
                }
                v[k] = Rational::zero();
            }
        }
        v.resize(deg, Rational::zero());
        v
    }
}

#[derive(Clone)]
pub struct CyclotomicNumber {
    field: Arc<CyclotomicField>,
    coeffs: Vec<Rational>,
}

impl PartialEq for CyclotomicNumber {
    fn eq(&self, other: &Self) -> bool {
        self.field.order == other.field.order && self.coeffs == other.coeffs
    }
}

impl Eq for CyclotomicNumber {}

impl std::hash::Hash for CyclotomicNumber {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.field.order.hash(state);
        self.coeffs.hash(state);
    }
}

impl fmt::Debug for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [m={}]", self, self.field.order)
    }
}

impl CyclotomicNumber {
    pub fn zero(order: u32) -> Self {
        let field = CyclotomicField::get(order);
        let coeffs = vec![Rational::zero(); field.degree()];
        CyclotomicNumber { field, coeffs }
    }

    pub fn one(order: u32) -> Self {
        Self::from_rational(order, Rational::one())
    }

    pub fn from_rational(order: u32, q: Rational) -> Self {
        let mut x = Self::zero(order);
        x.coeffs[0] = q;
        x
    }

    pub fn from_integer(order: u32, n: i64) -> Self {
        Self::from_rational(order, Rational::from_integer(BigInt::from(n)))
    }

    /// Builds sum c_t v^t; the vector may be longer than phi(m).
    pub fn from_coeffs(order: u32, coeffs: Vec<Rational>) -> Self {
        let field = CyclotomicField::get(order);
        let coeffs = field.reduce(coeffs);
        CyclotomicNumber { field, coeffs }
    }

    /// v^k for any integer k.
    pub fn nu_pow(order: u32, k: i64) -> Self {
        let field = CyclotomicField::get(order);
        let e = k.rem_euclid(order as i64) as usize;
        let coeffs = field.nu_powers[e].clone();
        CyclotomicNumber { field, coeffs }
    }

    pub fn order(&self) -> u32 {
        self.field.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs.iter().skip(1).all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.field.order != other.field.order {
            Err(ContourError::OrderMismatch(
                self.field.order,
                other.field.order,
            ))
        } else {
            Ok(())
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Ring::add(self, other))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Ring::mul(self, other))
    }

    pub fn checked_inv(&self) -> Result<Self> {
        Field::inv(self).ok_or(ContourError::DivisionByZero)
    }

    pub fn scale(&self, q: &Rational) -> Self {
        CyclotomicNumber {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Image under the automorphism v -> v^(-1).
    pub fn conjugate(&self) -> Self {
        let m = self.field.order as usize;
        let deg = self.field.degree();
        let mut out = vec![Rational::zero(); deg];
        for (t, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let power = &self.field.nu_powers[(m - t % m) % m];
            for (o, p) in out.iter_mut().zip(power) {
                *o += c * p;
            }
        }
        CyclotomicNumber {
            field: self.field.clone(),
            coeffs: out,
        }
    }

    /// Least common denominator and integer numerators of the coefficients.
    pub fn integer_form(&self) -> (Vec<BigInt>, BigInt) {
        let den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let nums = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
            .collect();
        (nums, den)
    }
}

fn trim(v: &mut Vec<Rational>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

fn poly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = a.to_vec();
    trim(&mut rem);
    let db = b.len() - 1;
    let lead = &b[db];
    if rem.len() <= db {
        return (vec![], rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - db];
    for k in (db..rem.len()).rev() {
        if rem[k].is_zero() {
            continue;
        }
        let c = &rem[k] / lead;
        for (j, bj) in b.iter().enumerate() {
            let t = &c * bj;
            rem[k - db + j] -= t;
        }
        quot[k - db] = c;
    }
    trim(&mut rem);
    trim(&mut quot);
    (quot, rem)
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(&mut out);
    out
}

impl Ring for CyclotomicNumber {
    fn zero_like(&self) -> Self {
        CyclotomicNumber {
            field: self.field.clone(),
            coeffs: vec![Rational::zero(); self.coeffs.len()],
        }
    }

    fn one_like(&self) -> Self {
        let mut z = self.zero_like();
        z.coeffs[0] = Rational::one();
        z
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.field.order, rhs.field.order, "cyclotomic order mismatch");
        CyclotomicNumber {
            field: self.field.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.field.order, rhs.field.order, "cyclotomic order mismatch");
        CyclotomicNumber {
            field: self.field.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.field.order, rhs.field.order, "cyclotomic order mismatch");
        let deg = self.coeffs.len();
        if deg == 1 {
            return CyclotomicNumber {
                field: self.field.clone(),
                coeffs: vec![&self.coeffs[0] * &rhs.coeffs[0]],
            };
        }
        let mut prod = vec![Rational::zero(); 2 * deg - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        CyclotomicNumber {
            field: self.field.clone(),
            coeffs: self.field.reduce(prod),
        }
    }

    fn neg(&self) -> Self {
        CyclotomicNumber {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Domain for CyclotomicNumber {
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        Field::div(self, rhs)
    }
}

impl Field for CyclotomicNumber {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if let Some(q) = self.as_rational() {
            return Some(Self::from_rational(self.order(), q.recip()));
        }
        // Extended Euclid against the modulus: s*a + t*Phi = g, g constant.
        let mut a = self.coeffs.clone();
        trim(&mut a);
        let mut r0 = self.field.modulus.clone();
        let mut r1 = a;
        let mut s0: Vec<Rational> = vec![];
        let mut s1: Vec<Rational> = vec![Rational::one()];
        while !r1.is_empty() {
            let (q, r) = poly_divrem(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        debug_assert_eq!(r0.len(), 1, "modulus not irreducible?");
        let g = r0[0].clone();
        let coeffs = s0.iter().map(|c| c / &g).collect();
        Some(Self::from_coeffs(self.order(), coeffs))
    }
}

fn fmt_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.as_rational() {
            return write!(f, "{}", fmt_rational(&q));
        }
        let (nums, den) = self.integer_form();
        let mut body = String::new();
        for (t, c) in nums.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            let mag = match (t, abs.is_one()) {
                (0, _) => abs.to_string(),
                (1, true) => "v".to_string(),
                (1, false) => format!("{}*v", abs),
                (_, true) => format!("v^{}", t),
                (_, false) => format!("{}*v^{}", abs, t),
            };
            if body.is_empty() {
                if c.is_negative() {
                    body.push('-');
                }
            } else if c.is_negative() {
                body.push_str(" - ");
            } else {
                body.push_str(" + ");
            }
            body.push_str(&mag);
        }
        if den.is_one() {
            write!(f, "({})", body)
        } else {
            write!(f, "({})/{}", body, den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_moduli() {
        assert_eq!(cyclotomic_modulus(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_modulus(2), ints(&[1, 1]));
        assert_eq!(cyclotomic_modulus(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_modulus(4), ints(&[1, 0, 1]));
    }

    #[test]
    fn nu_squares() {
        let v2 = CyclotomicNumber::nu_pow(2, 1);
        assert!(v2.mul(&v2).is_one());
        let v4 = CyclotomicNumber::nu_pow(4, 1);
        assert_eq!(v4.mul(&v4), CyclotomicNumber::from_integer(4, -1));
    }

    #[test]
    fn conjugate_of_nu_order_three() {
        let v = CyclotomicNumber::nu_pow(3, 1);
        let expected = CyclotomicNumber::from_coeffs(
            3,
            vec![Rational::from_integer((-1).into()), Rational::from_integer((-1).into())],
        );
        assert_eq!(v.conjugate(), expected);
        assert_eq!(v.conjugate(), CyclotomicNumber::nu_pow(3, 2));
    }

    #[test]
    fn inverse_and_errors() {
        let x = CyclotomicNumber::from_coeffs(5, ints(&[2, 0, 1]).into_iter().map(Rational::from_integer).collect());
        let y = x.checked_inv().unwrap();
        assert!(x.mul(&y).is_one());
        assert_eq!(
            CyclotomicNumber::zero(3).checked_inv(),
            Err(ContourError::DivisionByZero)
        );
        assert_eq!(
            CyclotomicNumber::one(3).checked_mul(&CyclotomicNumber::one(4)),
            Err(ContourError::OrderMismatch(3, 4))
        );
    }

    #[test]
    fn display_forms() {
        assert_eq!(CyclotomicNumber::from_integer(3, -2).to_string(), "-2");
        assert_eq!(CyclotomicNumber::nu_pow(3, 1).to_string(), "(v)");
        assert_eq!(CyclotomicNumber::nu_pow(3, 2).to_string(), "(-1 - v)");
        let half = CyclotomicNumber::nu_pow(4, 1).scale(&Rational::new(1.into(), 2.into()));
        assert_eq!(half.to_string(), "(v)/2");
    }
}
