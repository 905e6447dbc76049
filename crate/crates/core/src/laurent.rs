//! Integer Laurent polynomials in the framing variable `A`.
//!
//! Values are kept in a sparse canonical form: exponents strictly increasing,
//! no zero coefficients, and the zero polynomial is the empty term list. Every
//! constructor and operation re-canonicalizes, so derived equality is ring
//! equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: Vec<(i64, BigInt)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `coeff * A^exp`.
    pub fn monomial(coeff: impl Into<BigInt>, exp: i64) -> Self {
        let c = coeff.into();
        if c.is_zero() {
            Self::zero()
        } else {
            Self { terms: vec![(exp, c)] }
        }
    }

    /// `A^exp`.
    pub fn a_pow(exp: i64) -> Self {
        Self::monomial(1, exp)
    }

    /// The value of an unknotted, unlinked loop: `-A^-2 - A^2`.
    pub fn delta() -> Self {
        Self::from_terms([(-2, -1), (2, -1)])
    }

    /// Builds a polynomial from arbitrary `(exponent, coefficient)` pairs,
    /// merging repeated exponents and dropping zeros.
    pub fn from_terms<C, I>(terms: I) -> Self
    where
        C: Into<BigInt>,
        I: IntoIterator<Item = (i64, C)>,
    {
        let mut acc: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            *acc.entry(e).or_default() += c.into();
        }
        Self::from_map(acc)
    }

    fn from_map(map: BTreeMap<i64, BigInt>) -> Self {
        Self {
            terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn terms(&self) -> &[(i64, BigInt)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms
            .binary_search_by_key(&exp, |(e, _)| *e)
            .map(|idx| self.terms[idx].1.clone())
            .unwrap_or_default()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.first().map(|(e, _)| *e)
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.last().map(|(e, _)| *e)
    }

    /// Returns `(sign, n)` when the polynomial is `sign * A^n`, i.e. when it
    /// is invertible in `Z[A, A^-1]`.
    pub fn is_unit(&self) -> Option<(i8, i64)> {
        match self.terms.as_slice() {
            [(e, c)] if c.abs().is_one() => Some((if c.is_positive() { 1 } else { -1 }, *e)),
            _ => None,
        }
    }

    /// Multiplicative inverse, available only for units.
    pub fn unit_inverse(&self) -> Option<Self> {
        self.is_unit().map(|(s, e)| Self::monomial(s, -e))
    }

    /// The ring automorphism `A -> A^-1`, which is what reversing every
    /// crossing of a diagram does to its bracket coefficients.
    pub fn mirror(&self) -> Self {
        Self {
            terms: self.terms.iter().rev().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Multiplication by `A^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn eval_minus_one(&self) -> BigInt {
        self.terms.iter().fold(BigInt::zero(), |acc, (e, c)| {
            if e.rem_euclid(2) == 0 {
                acc + c
            } else {
                acc - c
            }
        })
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        // merge of two sorted term lists
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut l, mut r) = (self.terms.iter().peekable(), rhs.terms.iter().peekable());
        loop {
            match (l.peek(), r.peek()) {
                (Some((le, lc)), Some((re, rc))) => {
                    if le < re {
                        out.push((*le, lc.clone()));
                        l.next();
                    } else if re < le {
                        out.push((*re, rc.clone()));
                        r.next();
                    } else {
                        let c = lc + rc;
                        if !c.is_zero() {
                            out.push((*le, c));
                        }
                        l.next();
                        r.next();
                    }
                }
                (Some(_), None) => {
                    out.extend(l.cloned());
                    break;
                }
                (None, Some(_)) => {
                    out.extend(r.cloned());
                    break;
                }
                (None, None) => break,
            }
        }
        LaurentPoly { terms: out }
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self + rhs;
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut acc: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (le, lc) in &self.terms {
            for (re, rc) in &rhs.terms {
                *acc.entry(le + re).or_default() += lc * rc;
            }
        }
        LaurentPoly::from_map(acc)
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::monomial(c, 0)
    }
}

/// Renders as e.g. `-A^3 + 2A^-1`; the zero polynomial renders as `0`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (e, c)) in self.terms.iter().enumerate().rev() {
            let first = idx + 1 == self.terms.len();
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            if *e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            if *e == 1 {
                f.write_str("A")?;
            } else {
                write!(f, "A^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

/// JSON form: `[[exponent, "coefficient"], ...]`, exponent ascending.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            seq.serialize_element(&(e, c.to_string()))?;
        }
        seq.end()
    }
}
