use crate::error::PolyError;
use crate::gcd::gcd_monic;
use crate::poly::Polynomial;
use crate::scalar::GaussianRational;
use num_complex::Complex64;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Rational function stored reduced: gcd(numerator, denominator) constant
/// and the denominator monic. Equality of reduced forms is exact structural
/// equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self, PolyError> {
        if den.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self {
                num: Polynomial::zero(),
                den: Polynomial::one(),
            });
        }
        let g = gcd_monic(&num, &den)?;
        let mut num = num.div_exact(&g).expect("gcd divides numerator");
        let mut den = den.div_exact(&g).expect("gcd divides denominator");
        let lc_inv = den
            .leading()?
            .inv()
            .expect("nonzero leading coefficient");
        num = num.scale(&lc_inv);
        den = den.scale(&lc_inv);
        Ok(Self { num, den })
    }

    pub fn from_poly(p: Polynomial) -> Self {
        Self {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::from_poly(Polynomial::constant(c))
    }

    /// The formal variable u.
    pub fn var() -> Self {
        Self::from_poly(Polynomial::var())
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// Max of numerator/denominator degrees (the rational-function degree);
    /// errors for the zero function.
    pub fn degree(&self) -> Result<usize, PolyError> {
        Ok(self.num.degree()?.max(self.den.degree()?))
    }

    /// d/du, reduced.
    pub fn derivative_in_u(&self) -> Self {
        let num = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        let den = &self.den * &self.den;
        Self::new(num, den).expect("denominator square is nonzero")
    }

    pub fn inv(&self) -> Result<Self, PolyError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::from_poly(Polynomial::one());
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }

    /// Exact evaluation; None at a pole.
    pub fn eval(&self, z: &GaussianRational) -> Option<GaussianRational> {
        let d = self.den.eval(z);
        if d.is_zero() {
            return None;
        }
        Some(&self.num.eval(z) / &d)
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.num.eval_complex(z) / self.den.eval_complex(z)
    }

    pub fn render(&self, var: char) -> String {
        if self.den.is_constant() {
            return self.num.render(var);
        }
        format!("({}) / ({})", self.num.render(var), self.den.render(var))
    }
}

/// Derivative in z of a rational function written in u = e^{cz}:
/// by the chain rule d/dz = c·u·d/du.
pub fn rf_derivative_in_z(f: &RationalFunction, c: &GaussianRational) -> RationalFunction {
    let cu = RationalFunction::from_poly(Polynomial::monomial(c.clone(), 1));
    &f.derivative_in_u() * &cu
}

/// Exact equality test: cross-multiplied polynomials identical. Works on any
/// pair; reduced canonical forms make it a plain structural comparison too.
pub fn rf_equal(f: &RationalFunction, g: &RationalFunction) -> bool {
    &f.num * &g.den == &g.num * &f.den
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: Self) -> RationalFunction {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        RationalFunction::new(num, den).expect("nonzero denominators")
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: Self) -> RationalFunction {
        let num = &(&self.num * &rhs.den) - &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        RationalFunction::new(num, den).expect("nonzero denominators")
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: Self) -> RationalFunction {
        let num = &self.num * &rhs.num;
        let den = &self.den * &rhs.den;
        RationalFunction::new(num, den).expect("nonzero denominators")
    }
}

/// Panics when dividing by the zero function; use `inv` + `Mul` to check.
impl Div for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: Self) -> RationalFunction {
        let inv = rhs.inv().expect("division by the zero rational function");
        self * &inv
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render('u'))
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render('u'))
    }
}
