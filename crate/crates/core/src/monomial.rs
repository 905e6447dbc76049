//! Loop monomials `x^i y^j z^k`, surgery parameters and the strict linear
//! order used to pick greatest terms.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// `i` parallel copies of the loop `x`, `j` of `y` and `k` of `z`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(from = "[u32; 3]", into = "[u32; 3]")]
pub struct Monomial {
    pub i: u32,
    pub j: u32,
    pub k: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { i: 0, j: 0, k: 0 };

    pub const fn new(i: u32, j: u32, k: u32) -> Self {
        Self { i, j, k }
    }

    /// Builds a monomial from signed exponents, failing if any is negative.
    pub fn from_signed(i: i64, j: i64, k: i64) -> Option<Self> {
        Some(Self {
            i: u32::try_from(i).ok()?,
            j: u32::try_from(j).ok()?,
            k: u32::try_from(k).ok()?,
        })
    }

    pub fn exponents(self) -> [u32; 3] {
        [self.i, self.j, self.k]
    }
}

impl From<[u32; 3]> for Monomial {
    fn from([i, j, k]: [u32; 3]) -> Self {
        Self { i, j, k }
    }
}

impl From<Monomial> for [u32; 3] {
    fn from(m: Monomial) -> Self {
        m.exponents()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == Self::ONE {
            return f.write_str("1");
        }
        let parts: Vec<String> = [("x", self.i), ("y", self.j), ("z", self.k)]
            .into_iter()
            .filter(|(_, e)| *e > 0)
            .map(|(v, e)| if e == 1 { v.to_string() } else { format!("{v}^{e}") })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamError {
    #[error("{name} = |{symbol}| must be greater than 1 (got {value})")]
    TooSmall {
        name: char,
        symbol: &'static str,
        value: i64,
    },
    #[error("{0} fails")]
    Triangle(&'static str),
}

/// Surgery coefficients `(alpha, beta, gamma)` satisfying `a, b, c > 1` and
/// the three reciprocal triangle inequalities, where `a = |alpha|` etc.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct SurgeryParams {
    alpha: i64,
    beta: i64,
    gamma: i64,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SignPattern {
    /// `(a, b, c)`
    AllPositive,
    /// `(a, -b, c)`
    MiddleNegative,
    Other,
}

impl SurgeryParams {
    pub fn new(alpha: i64, beta: i64, gamma: i64) -> Result<Self, ParamError> {
        let sizes = [('a', "alpha", alpha), ('b', "beta", beta), ('c', "gamma", gamma)];
        for (name, symbol, value) in sizes {
            if value.unsigned_abs() <= 1 {
                return Err(ParamError::TooSmall {
                    name,
                    symbol,
                    value,
                });
            }
        }
        let (a, b, c) = (
            i128::from(alpha.unsigned_abs()),
            i128::from(beta.unsigned_abs()),
            i128::from(gamma.unsigned_abs()),
        );
        // 1/p < 1/q + 1/r  <=>  qr < pr + pq
        if b * c >= a * c + a * b {
            return Err(ParamError::Triangle("1/a < 1/b + 1/c"));
        }
        if a * c >= b * c + a * b {
            return Err(ParamError::Triangle("1/b < 1/a + 1/c"));
        }
        if a * b >= b * c + a * c {
            return Err(ParamError::Triangle("1/c < 1/a + 1/b"));
        }
        Ok(Self { alpha, beta, gamma })
    }

    pub fn alpha(&self) -> i64 {
        self.alpha
    }

    pub fn beta(&self) -> i64 {
        self.beta
    }

    pub fn gamma(&self) -> i64 {
        self.gamma
    }

    pub fn signed(&self) -> [i64; 3] {
        [self.alpha, self.beta, self.gamma]
    }

    pub fn a(&self) -> u64 {
        self.alpha.unsigned_abs()
    }

    pub fn b(&self) -> u64 {
        self.beta.unsigned_abs()
    }

    pub fn c(&self) -> u64 {
        self.gamma.unsigned_abs()
    }

    pub fn sign_pattern(&self) -> SignPattern {
        match (self.alpha > 0, self.beta > 0, self.gamma > 0) {
            (true, true, true) => SignPattern::AllPositive,
            (true, false, true) => SignPattern::MiddleNegative,
            _ => SignPattern::Other,
        }
    }

    pub fn order(&self) -> MonomialOrder {
        MonomialOrder {
            a: self.a(),
            b: self.b(),
            c: self.c(),
        }
    }
}

impl fmt::Display for SurgeryParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M({}, {}, {})", self.alpha, self.beta, self.gamma)
    }
}

/// The order only depends on the absolute values `(a, b, c)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct MonomialOrder {
    a: u64,
    b: u64,
    c: u64,
}

impl MonomialOrder {
    /// Panics if any weight is zero.
    pub fn new(a: u64, b: u64, c: u64) -> Self {
        assert!(a > 0 && b > 0 && c > 0, "order weights must be positive");
        Self { a, b, c }
    }

    pub fn weights(&self) -> (u64, u64, u64) {
        (self.a, self.b, self.c)
    }

    /// Compares with cleared denominators:
    /// 1. `i/a + j/b + k/c` (scaled by `abc`),
    /// 2. `i(k+1)`,
    /// 3. `max(j/b, k/c)` (scaled by `bc`),
    /// 4. `j`,
    /// 5. `k`.
    pub fn cmp(&self, u: Monomial, v: Monomial) -> Ordering {
        let (a, b, c) = (i128::from(self.a), i128::from(self.b), i128::from(self.c));
        let weight = |m: Monomial| {
            i128::from(m.i) * b * c + i128::from(m.j) * a * c + i128::from(m.k) * a * b
        };
        let twist = |m: Monomial| i128::from(m.i) * (i128::from(m.k) + 1);
        let peak = |m: Monomial| (i128::from(m.j) * c).max(i128::from(m.k) * b);
        weight(u)
            .cmp(&weight(v))
            .then_with(|| twist(u).cmp(&twist(v)))
            .then_with(|| peak(u).cmp(&peak(v)))
            .then_with(|| u.j.cmp(&v.j))
            .then_with(|| u.k.cmp(&v.k))
    }

    pub fn max<I: IntoIterator<Item = Monomial>>(&self, it: I) -> Option<Monomial> {
        it.into_iter().max_by(|u, v| self.cmp(*u, *v))
    }

    pub fn sort(&self, ms: &mut [Monomial]) {
        ms.sort_by(|u, v| self.cmp(*u, *v));
    }
}

pub fn cmp_monomials(params: &SurgeryParams, u: Monomial, v: Monomial) -> Ordering {
    params.order().cmp(u, v)
}

/// Direct transcription of the order's definition with exact rationals.
/// Only meant as an independent cross-check of [`MonomialOrder::cmp`]; both
/// directions are evaluated, so `Equal` means neither direction holds.
pub fn cmp_rational_oracle(order: &MonomialOrder, u: Monomial, v: Monomial) -> Ordering {
    if definition_less(order, u, v) {
        Ordering::Less
    } else if definition_less(order, v, u) {
        Ordering::Greater
    } else {
        Ordering::Equal
    }
}

fn definition_less(order: &MonomialOrder, u: Monomial, v: Monomial) -> bool {
    let (a, b, c) = order.weights();
    let q = |n: u32, d: u64| BigRational::new(BigInt::from(n), BigInt::from(d));
    let (wu, wv) = (
        q(u.i, a) + q(u.j, b) + q(u.k, c),
        q(v.i, a) + q(v.j, b) + q(v.k, c),
    );
    let (tu, tv) = (
        BigInt::from(u.i) * BigInt::from(u.k + 1),
        BigInt::from(v.i) * BigInt::from(v.k + 1),
    );
    let (mu, mv) = (
        std::cmp::max(q(u.j, b), q(u.k, c)),
        std::cmp::max(q(v.j, b), q(v.k, c)),
    );
    wu < wv
        || (wu == wv && tu < tv)
        || (wu == wv && tu == tv && mu < mv)
        || (wu == wv && tu == tv && mu == mv && u.j < v.j)
        || (wu == wv && tu == tv && mu == mv && u.j == v.j && u.k < v.k)
}
