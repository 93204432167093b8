//! Sparse polynomials in the loop parameters d0..d(m-1) over Q(v).

use std::collections::BTreeMap;
use std::fmt;

use super::cyclotomic::{CyclotomicNumber, Rational};
use super::ring::{Domain, Field, Ring};
use crate::error::{ContourError, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycPolynomial {
    order: u32,
    terms: BTreeMap<Vec<u32>, CyclotomicNumber>,
}

impl fmt::Debug for CycPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [m={}]", self, self.order)
    }
}

impl CycPolynomial {
    pub fn zero(order: u32) -> Self {
        CycPolynomial {
            order,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(order: u32) -> Self {
        Self::constant(CyclotomicNumber::one(order))
    }

    pub fn constant(c: CyclotomicNumber) -> Self {
        Self::monomial(c, vec![0; 0])
    }

    pub fn from_integer(order: u32, n: i64) -> Self {
        Self::constant(CyclotomicNumber::from_integer(order, n))
    }

    /// The parameter d_k.
    pub fn var(order: u32, k: usize) -> Self {
        let mut exps = vec![0; order as usize];
        exps[k] = 1;
        Self::monomial(CyclotomicNumber::one(order), exps)
    }

    /// c times the product of d_k^exps[k]; a short exponent vector is padded.
    pub fn monomial(c: CyclotomicNumber, mut exps: Vec<u32>) -> Self {
        let order = c.order();
        exps.resize(order as usize, 0);
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        CycPolynomial { order, terms }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &CyclotomicNumber)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// The constant value, if the polynomial has no parameter dependence.
    pub fn as_constant(&self) -> Option<CyclotomicNumber> {
        match self.terms.len() {
            0 => Some(CyclotomicNumber::zero(self.order)),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.iter().all(|&x| x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Largest exponent of d_k over all terms (0 for the zero polynomial).
    pub fn degree_in(&self, k: usize) -> u32 {
        self.terms.keys().map(|e| e[k]).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum())
            .max()
            .unwrap_or(0)
    }

    fn insert_add(terms: &mut BTreeMap<Vec<u32>, CyclotomicNumber>, e: Vec<u32>, c: CyclotomicNumber) {
        use std::collections::btree_map::Entry;
        match terms.entry(e) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn scale(&self, c: &CyclotomicNumber) -> Self {
        assert_eq!(c.order(), self.order, "cyclotomic order mismatch");
        if c.is_zero() {
            return Self::zero(self.order);
        }
        CycPolynomial {
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|(e, x)| (e.clone(), x.mul(c)))
                .collect(),
        }
    }

    /// Multiplies by the monomial prod d_k^exps[k].
    pub fn shift(&self, exps: &[u32]) -> Self {
        CycPolynomial {
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|(e, x)| (e.iter().zip(exps).map(|(a, b)| a + b).collect(), x.clone()))
                .collect(),
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

    fn check(&self, other: &Self) -> Result<()> {
        if self.order == other.order {
            Ok(())
        } else {
            Err(ContourError::OrderMismatch(self.order, other.order))
        }
    }

    /// Substitutes d_k := point[k].
    pub fn evaluate(&self, point: &[CyclotomicNumber]) -> Result<CyclotomicNumber> {
        if point.len() != self.order as usize {
            return Err(ContourError::PointDimension {
                expected: self.order as usize,
                got: point.len(),
            });
        }
        if let Some(p) = point.iter().find(|p| p.order() != self.order) {
            return Err(ContourError::OrderMismatch(self.order, p.order()));
        }
        let mut acc = CyclotomicNumber::zero(self.order);
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (k, &a) in e.iter().enumerate() {
                for _ in 0..a {
                    t = t.mul(&point[k]);
                }
            }
            acc = acc.add(&t);
        }
        Ok(acc)
    }

    /// Applies v -> v^(-1) to the coefficients only.
    pub fn conjugate_coeffs(&self) -> Self {
        CycPolynomial {
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c.conjugate()))
                .collect(),
        }
    }

    /// Applies v -> v^(-1) together with d_k -> d_(-k mod m).
    pub fn bar(&self) -> Self {
        let m = self.order as usize;
        CycPolynomial {
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut f = vec![0; m];
                    for (k, &a) in e.iter().enumerate() {
                        f[(m - k) % m] = a;
                    }
                    (f, c.conjugate())
                })
                .collect(),
        }
    }

    fn leading(&self) -> Option<(&Vec<u32>, &CyclotomicNumber)> {
        self.terms.iter().next_back()
    }

    /// Canonical text form, e.g. `d0^2 - d1^2` or `(1 + v)/2 * d0 d1`.
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    pub fn parse(text: &str, order: u32) -> Result<Self> {
        super::text::parse_polynomial(text, order)
    }

    pub fn from_rational(order: u32, q: Rational) -> Self {
        Self::constant(CyclotomicNumber::from_rational(order, q))
    }
}

impl Ring for CycPolynomial {
    fn zero_like(&self) -> Self {
        Self::zero(self.order)
    }

    fn one_like(&self) -> Self {
        Self::one(self.order)
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.order, rhs.order, "cyclotomic order mismatch");
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            Self::insert_add(&mut terms, e.clone(), c.clone());
        }
        CycPolynomial {
            order: self.order,
            terms,
        }
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.order, rhs.order, "cyclotomic order mismatch");
        let mut terms = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                Self::insert_add(&mut terms, e, c1.mul(c2));
            }
        }
        CycPolynomial {
            order: self.order,
            terms,
        }
    }

    fn neg(&self) -> Self {
        CycPolynomial {
            order: self.order,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect(),
        }
    }
}

impl Domain for CycPolynomial {
    /// Exact multivariate division using lexicographic leading terms.
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        let (le, lc) = rhs.leading()?;
        let lc_inv = lc.inv()?;
        let mut rem = self.terms.clone();
        let mut quot = BTreeMap::new();
        while let Some((re, rc)) = rem.iter().next_back() {
            if re.iter().zip(le).any(|(a, b)| a < b) {
                return None;
            }
            let e: Vec<u32> = re.iter().zip(le).map(|(a, b)| a - b).collect();
            let c = rc.mul(&lc_inv);
            for (f, d) in &rhs.terms {
                let key: Vec<u32> = f.iter().zip(&e).map(|(a, b)| a + b).collect();
                Self::insert_add(&mut rem, key, d.mul(&c).neg());
            }
            quot.insert(e, c);
        }
        Some(CycPolynomial {
            order: self.order,
            terms: quot,
        })
    }
}

fn monomial_text(e: &[u32]) -> String {
    e.iter()
        .enumerate()
        .filter(|(_, &a)| a > 0)
        .map(|(k, &a)| {
            if a == 1 {
                format!("d{}", k)
            } else {
                format!("d{}^{}", k, a)
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

impl fmt::Display for CycPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut ordered: Vec<_> = self.terms.iter().collect();
        ordered.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        let mut out = String::new();
        for (i, (e, c)) in ordered.into_iter().enumerate() {
            let mono = monomial_text(e);
            let (negative, mag) = match c.as_rational() {
                Some(q) => {
                    let neg = q < Rational::from_integer(0.into());
                    let abs = if neg { -q } else { q };
                    let s = CyclotomicNumber::from_rational(self.order, abs.clone()).to_string();
                    (neg, if abs == Rational::from_integer(1.into()) { None } else { Some(s) })
                }
                None => (false, Some(c.to_string())),
            };
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else if negative {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            match (mag, mono.is_empty()) {
                (None, true) => out.push('1'),
                (None, false) => out.push_str(&mono),
                (Some(s), true) => out.push_str(&s),
                (Some(s), false) => {
                    out.push_str(&s);
                    out.push_str(" * ");
                    out.push_str(&mono);
                }
            }
        }
        write!(f, "{}", out)
    }
}
