use crate::error::PolyError;
use crate::scalar::GaussianRational;
use num_complex::Complex64;
use num_traits::Zero;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Dense exact-coefficient univariate polynomial.
///
/// `coeffs[k]` is the coefficient of the k-th power; the highest index is
/// nonzero. The zero polynomial is the empty sequence and has no degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<GaussianRational>,
}

impl Polynomial {
    /// Builds from low-to-high coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<GaussianRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::one())
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::new(vec![c])
    }

    /// c * x^k
    pub fn monomial(c: GaussianRational, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![GaussianRational::zero(); k + 1];
        coeffs[k] = c;
        Self { coeffs }
    }

    /// The identity polynomial x.
    pub fn var() -> Self {
        Self::monomial(GaussianRational::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree; the zero polynomial has none and errors.
    pub fn degree(&self) -> Result<usize, PolyError> {
        if self.coeffs.is_empty() {
            Err(PolyError::ZeroPolynomial)
        } else {
            Ok(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    /// Coefficient of x^k (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> GaussianRational {
        self.coeffs.get(k).cloned().unwrap_or_else(GaussianRational::zero)
    }

    /// Leading coefficient; errors on the zero polynomial.
    pub fn leading(&self) -> Result<GaussianRational, PolyError> {
        self.coeffs
            .last()
            .cloned()
            .ok_or(PolyError::ZeroPolynomial)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    /// Scales to leading coefficient one; errors on the zero polynomial.
    pub fn monic(&self) -> Result<Polynomial, PolyError> {
        let lc = self.leading()?;
        let inv = lc.inv().expect("leading coefficient is nonzero");
        Ok(self.scale(&inv))
    }

    pub fn scale(&self, s: &GaussianRational) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * &GaussianRational::from_int(k as i64))
            .collect();
        Polynomial::new(coeffs)
    }

    /// Antiderivative with zero constant term.
    pub fn antiderivative(&self) -> Polynomial {
        if self.coeffs.is_empty() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![GaussianRational::zero()];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c / &GaussianRational::from_int((k + 1) as i64));
        }
        Polynomial::new(coeffs)
    }

    pub fn eval(&self, z: &GaussianRational) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * z) + c;
        }
        acc
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c.to_complex();
        }
        acc
    }

    /// Substitutes `inner` for the variable (Horner over polynomials).
    pub fn compose(&self, inner: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Polynomial::constant(c.clone());
        }
        acc
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one();
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

    /// Euclidean division: self = q*d + r with deg r < deg d.
    pub fn divrem(&self, d: &Polynomial) -> Result<(Polynomial, Polynomial), PolyError> {
        let dd = d.degree().map_err(|_| PolyError::DivisionByZero)?;
        let lc_inv = d.leading()?.inv().expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![GaussianRational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1;
            let factor = &rem[k] * &lc_inv;
            if !factor.is_zero() {
                let shift = k - dd;
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[shift + j] = &rem[shift + j] - &(dc * &factor);
                }
                quot[shift] = factor;
            }
            rem.pop();
        }
        Ok((Polynomial::new(quot), Polynomial::new(rem)))
    }

    /// Exact quotient when `d` divides self; None otherwise.
    pub fn div_exact(&self, d: &Polynomial) -> Option<Polynomial> {
        let (q, r) = self.divrem(d).ok()?;
        r.is_zero().then_some(q)
    }

    /// Multiplicity of `d` as a linear-shift root: largest e with (x-d)^e | self.
    pub fn root_multiplicity(&self, d: &GaussianRational) -> usize {
        if self.is_zero() {
            return 0;
        }
        let lin = Polynomial::new(vec![-d, GaussianRational::one()]);
        let mut p = self.clone();
        let mut e = 0;
        while let Some(q) = p.div_exact(&lin) {
            e += 1;
            p = q;
        }
        e
    }

    /// Order of the root at 0 (count of leading zero coefficients); 0 for the
    /// zero polynomial by convention.
    pub fn order_at_zero(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(0)
    }

    /// Largest absolute value over all rational components, as f64.
    pub fn max_coeff_magnitude(&self) -> f64 {
        self.coeffs
            .iter()
            .map(|c| c.to_complex().norm())
            .fold(0.0, f64::max)
    }

    /// Canonical text form re-parseable by the expression parser.
    pub fn render(&self, var: char) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (sign_neg, mag) = coefficient_sign_split(c);
            if out.is_empty() {
                if sign_neg {
                    out.push('-');
                }
            } else if sign_neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            out.push_str(&render_term(&mag, k, var));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// Splits a coefficient into sign and magnitude for rendering. Complex
/// coefficients with nonzero imaginary part only pull out an overall minus
/// when the real part is negative, or the real part is zero and the
/// imaginary part is negative.
fn coefficient_sign_split(c: &GaussianRational) -> (bool, GaussianRational) {
    use num_traits::Signed;
    let neg = if c.im.is_zero() {
        c.re.is_negative()
    } else if c.re.is_zero() {
        c.im.is_negative()
    } else {
        c.re.is_negative()
    };
    if neg {
        (true, -c)
    } else {
        (false, c.clone())
    }
}

fn render_term(mag: &GaussianRational, k: usize, var: char) -> String {
    let needs_parens = !mag.is_real() || !mag.re.is_integer();
    let coeff_txt = if mag.is_one() && k > 0 {
        String::new()
    } else if needs_parens && k > 0 {
        format!("({mag})")
    } else {
        format!("{mag}")
    };
    match k {
        0 => {
            if needs_parens {
                format!("({mag})")
            } else {
                coeff_txt
            }
        }
        1 => format!("{coeff_txt}{var}"),
        _ => format!("{coeff_txt}{var}^{k}"),
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Self) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(&self.coeff(k) + &rhs.coeff(k));
        }
        Polynomial::new(coeffs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Self) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(&self.coeff(k) - &rhs.coeff(k));
        }
        Polynomial::new(coeffs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Self) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs =
            vec![GaussianRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (j, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (k, b) in rhs.coeffs.iter().enumerate() {
                coeffs[j + k] = &coeffs[j + k] + &(a * b);
            }
        }
        Polynomial::new(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render('z'))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render('z'))
    }
}

/// Convenience: polynomial from small integer coefficients, low to high.
pub fn poly_from_ints(coeffs: &[i64]) -> Polynomial {
    Polynomial::new(coeffs.iter().map(|&c| GaussianRational::from_int(c)).collect())
}

impl Zero for Polynomial {
    fn zero() -> Self {
        Polynomial::zero()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Self) -> Polynomial {
        &self + &rhs
    }
}
