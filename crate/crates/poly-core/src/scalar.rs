use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Arbitrary-precision rational number.
pub type Rat = BigRational;

/// Exact complex number with rational real and imaginary parts.
///
/// Both parts are kept canonical (numerator and denominator coprime,
/// denominator positive) by the underlying `Ratio` type, so structural
/// equality is exact equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: Rat,
    pub im: Rat,
}

impl GaussianRational {
    pub fn new(re: Rat, im: Rat) -> Self {
        Self { re, im }
    }

    pub fn from_int(n: i64) -> Self {
        Self::real(Rat::from_integer(BigInt::from(n)))
    }

    /// Exact rational p/q as a real scalar. Panics when q = 0.
    pub fn from_ratio(p: i64, q: i64) -> Self {
        Self::real(Rat::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn real(re: Rat) -> Self {
        Self {
            re,
            im: Rat::zero(),
        }
    }

    pub fn zero() -> Self {
        Self::real(Rat::zero())
    }

    pub fn one() -> Self {
        Self::real(Rat::one())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self {
            re: Rat::zero(),
            im: Rat::one(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// True for exact rational integers (imaginary part zero, denominator one).
    pub fn is_integer(&self) -> bool {
        self.im.is_zero() && self.re.is_integer()
    }

    pub fn conj(&self) -> Self {
        Self {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// |z|^2 = re^2 + im^2, exact.
    pub fn norm_sqr(&self) -> Rat {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse; None for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(Self {
            re: &self.re / &n,
            im: -(&self.im / &n),
        })
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(rat_to_f64(&self.re), rat_to_f64(&self.im))
    }
}

/// Rational to nearest double; saturates to +/-inf far outside the range.
pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        if r.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: Self) -> GaussianRational {
        GaussianRational {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: Self) -> GaussianRational {
        GaussianRational {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: Self) -> GaussianRational {
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

/// Exact division. Panics on a zero divisor; use `inv` to check first.
impl Div for &GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: Self) -> GaussianRational {
        let inv = rhs.inv().expect("division by zero GaussianRational");
        self * &inv
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

macro_rules! forward_value_ops {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: Self) -> GaussianRational {
                (&self).$method(&rhs)
            }
        }
    )*};
}
forward_value_ops!(Add::add, Sub::sub, Mul::mul, Div::div);

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        -&self
    }
}

fn fmt_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for GaussianRational {
    /// Canonical rendering, re-parseable by the expression parser:
    /// "3", "-3/4", "3i", "1/2+3i", "1/2-i".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", fmt_rat(&self.re));
        }
        let im_part = |g: &mut fmt::Formatter<'_>, r: &Rat| -> fmt::Result {
            if r.is_one() {
                write!(g, "i")
            } else if r.is_integer() {
                write!(g, "{}i", r.numer())
            } else {
                write!(g, "{}/{}i", r.numer(), r.denom())
            }
        };
        if self.re.is_zero() {
            if self.im.is_negative() {
                write!(f, "-")?;
                return im_part(f, &-self.im.clone());
            }
            return im_part(f, &self.im);
        }
        write!(f, "{}", fmt_rat(&self.re))?;
        if self.im.is_negative() {
            write!(f, "-")?;
            im_part(f, &-self.im.clone())
        } else {
            write!(f, "+")?;
            im_part(f, &self.im)
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
