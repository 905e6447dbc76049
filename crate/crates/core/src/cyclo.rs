//! Exact arithmetic in `Q(zeta)`, `zeta = e^{2 pi i / 5}`, and 2x2 matrices
//! over it.
//!
//! Elements are stored in the power basis `1, zeta, zeta^2, zeta^3`, i.e.
//! reduced modulo `1 + x + x^2 + x^3 + x^4`, which makes equality structural.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum CycloError {
    #[error("division by zero in Q(zeta_5)")]
    DivisionByZero,
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Cyclotomic5 {
    coeffs: [BigRational; 4],
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Cyclotomic5 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat(n))
    }

    pub fn from_rational(q: BigRational) -> Self {
        let mut out = Self::zero();
        out.coeffs[0] = q;
        out
    }

    /// `c0 + c1 zeta + c2 zeta^2 + c3 zeta^3`.
    pub fn from_coeffs(coeffs: [BigRational; 4]) -> Self {
        Self { coeffs }
    }

    /// `sum_e coeffs[e] * zeta^e` for `e = 0..5`, integer coefficients.
    pub fn from_powers(coeffs: [i64; 5]) -> Self {
        Self::reduce(coeffs.map(rat))
    }

    pub fn zeta() -> Self {
        Self::zeta_pow(1)
    }

    pub fn zeta_pow(e: i64) -> Self {
        let mut powers = [0; 5];
        powers[e.rem_euclid(5) as usize] = 1;
        Self::from_powers(powers)
    }

    fn reduce(mut c: [BigRational; 5]) -> Self {
        // zeta^4 = -1 - zeta - zeta^2 - zeta^3
        let top = std::mem::take(&mut c[4]);
        let [c0, c1, c2, c3, _] = c;
        Self {
            coeffs: [c0 - &top, c1 - &top, c2 - &top, c3 - top],
        }
    }

    pub fn coeffs(&self) -> &[BigRational; 4] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        Self {
            coeffs: self.coeffs.clone().map(|c| c * q),
        }
    }

    /// The field automorphism `zeta -> zeta^k`, `k` coprime to 5.
    pub fn galois(&self, k: i64) -> Self {
        assert!(k.rem_euclid(5) != 0, "zeta -> zeta^k needs k coprime to 5");
        let mut out: [BigRational; 5] = Default::default();
        for (e, c) in self.coeffs.iter().enumerate() {
            out[(k * e as i64).rem_euclid(5) as usize] += c;
        }
        Self::reduce(out)
    }

    /// Complex conjugation, `zeta -> zeta^4`.
    pub fn conj(&self) -> Self {
        self.galois(4)
    }

    /// Field norm down to `Q`.
    pub fn norm(&self) -> BigRational {
        let prod = self * &self.galois(2) * self.galois(3) * self.galois(4);
        debug_assert!(prod.coeffs[1..].iter().all(Zero::is_zero));
        prod.coeffs[0].clone()
    }

    pub fn inv(&self) -> Result<Self, CycloError> {
        if self.is_zero() {
            return Err(CycloError::DivisionByZero);
        }
        let cofactor = self.galois(2) * self.galois(3) * self.galois(4);
        Ok(cofactor.scale(&self.norm().recip()))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self, CycloError> {
        Ok(self * &rhs.inv()?)
    }

    /// Numerical value, for sanity checks only.
    pub fn to_complex(&self) -> (f64, f64) {
        let theta = 2.0 * std::f64::consts::PI / 5.0;
        self.coeffs
            .iter()
            .enumerate()
            .fold((0.0, 0.0), |(re, im), (e, c)| {
                let v = c.to_f64().unwrap_or(f64::NAN);
                let angle = theta * e as f64;
                (re + v * angle.cos(), im + v * angle.sin())
            })
    }
}

impl Add<&Cyclotomic5> for &Cyclotomic5 {
    type Output = Cyclotomic5;

    fn add(self, rhs: &Cyclotomic5) -> Cyclotomic5 {
        let [a0, a1, a2, a3] = &self.coeffs;
        let [b0, b1, b2, b3] = &rhs.coeffs;
        Cyclotomic5 {
            coeffs: [a0 + b0, a1 + b1, a2 + b2, a3 + b3],
        }
    }
}

impl Neg for &Cyclotomic5 {
    type Output = Cyclotomic5;

    fn neg(self) -> Cyclotomic5 {
        Cyclotomic5 {
            coeffs: self.coeffs.clone().map(|c| -c),
        }
    }
}

impl Sub<&Cyclotomic5> for &Cyclotomic5 {
    type Output = Cyclotomic5;

    fn sub(self, rhs: &Cyclotomic5) -> Cyclotomic5 {
        self + &(-rhs)
    }
}

impl Mul<&Cyclotomic5> for &Cyclotomic5 {
    type Output = Cyclotomic5;

    fn mul(self, rhs: &Cyclotomic5) -> Cyclotomic5 {
        let mut acc: [BigRational; 5] = Default::default();
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                acc[(i + j) % 5] += a * b;
            }
        }
        Cyclotomic5::reduce(acc)
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $f:ident),*) => {$(
        impl $tr for Cyclotomic5 {
            type Output = Cyclotomic5;
            fn $f(self, rhs: Cyclotomic5) -> Cyclotomic5 {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&Cyclotomic5> for Cyclotomic5 {
            type Output = Cyclotomic5;
            fn $f(self, rhs: &Cyclotomic5) -> Cyclotomic5 {
                (&self).$f(rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for Cyclotomic5 {
    type Output = Cyclotomic5;

    fn neg(self) -> Cyclotomic5 {
        -&self
    }
}

impl From<i64> for Cyclotomic5 {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

/// `a + b*z + c*z^2 + d*z^3` with zero terms omitted; `z` is the root of unity.
impl fmt::Display for Cyclotomic5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            match (first, sign) {
                (true, "-") => f.write_str("-")?,
                (true, _) => {}
                (false, s) => write!(f, " {s} ")?,
            }
            first = false;
            let mag = c.abs();
            let var = match e {
                0 => "",
                1 => "z",
                2 => "z^2",
                _ => "z^3",
            };
            if e == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(var)?;
            } else {
                write!(f, "{mag}*{var}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic5({self})")
    }
}

/// JSON form: four `["num", "den"]` pairs, power basis order.
impl Serialize for Cyclotomic5 {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(4))?;
        for c in &self.coeffs {
            seq.serialize_element(&(c.numer().to_string(), c.denom().to_string()))?;
        }
        seq.end()
    }
}

/// Row-major 2x2 matrix over `Q(zeta_5)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct Mat2 {
    entries: [Cyclotomic5; 4],
}

impl Mat2 {
    pub fn new(a: Cyclotomic5, b: Cyclotomic5, c: Cyclotomic5, d: Cyclotomic5) -> Self {
        Self {
            entries: [a, b, c, d],
        }
    }

    pub fn identity() -> Self {
        Self::scalar(Cyclotomic5::one())
    }

    pub fn scalar(x: Cyclotomic5) -> Self {
        Self::new(x.clone(), Cyclotomic5::zero(), Cyclotomic5::zero(), x)
    }

    /// Entry at `(row, col)`, zero-based.
    pub fn get(&self, row: usize, col: usize) -> &Cyclotomic5 {
        &self.entries[2 * row + col]
    }

    pub fn entries(&self) -> &[Cyclotomic5; 4] {
        &self.entries
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        Self {
            entries: self.entries.clone().map(|e| e.scale(q)),
        }
    }

    pub fn det(&self) -> Cyclotomic5 {
        let [a, b, c, d] = &self.entries;
        a * d - b * c
    }

    pub fn trace(&self) -> Cyclotomic5 {
        &self.entries[0] + &self.entries[3]
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::identity(), |acc, _| &acc * self)
    }
}

impl Mul<&Mat2> for &Mat2 {
    type Output = Mat2;

    fn mul(self, rhs: &Mat2) -> Mat2 {
        let [a, b, c, d] = &self.entries;
        let [e, f, g, h] = &rhs.entries;
        Mat2::new(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)
    }
}

impl Mul for Mat2 {
    type Output = Mat2;

    fn mul(self, rhs: Mat2) -> Mat2 {
        &self * &rhs
    }
}

impl Neg for &Mat2 {
    type Output = Mat2;

    fn neg(self) -> Mat2 {
        Mat2 {
            entries: self.entries.clone().map(|e| -e),
        }
    }
}
