use crate::error::PolyError;
use crate::poly::Polynomial;
use crate::scalar::GaussianRational;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;

/// Monic exact greatest common divisor.
///
/// Inputs are cleared to Gaussian-integer coefficients, then reduced with the
/// subresultant polynomial remainder sequence, which keeps every intermediate
/// division exact while bounding coefficient growth. The final result is
/// scaled monic over the field.
pub fn gcd_monic(p: &Polynomial, q: &Polynomial) -> Result<Polynomial, PolyError> {
    if p.is_zero() && q.is_zero() {
        return Err(PolyError::GcdBothZero);
    }
    if p.is_zero() {
        return q.monic();
    }
    if q.is_zero() {
        return p.monic();
    }
    if p.is_constant() || q.is_constant() {
        return Ok(Polynomial::one());
    }

    let (mut a, mut b) = if p.degree()? >= q.degree()? {
        (clear_denominators(p), clear_denominators(q))
    } else {
        (clear_denominators(q), clear_denominators(p))
    };

    let mut g = GaussianRational::one();
    let mut h = GaussianRational::one();
    loop {
        let da = a.degree().expect("nonzero in PRS");
        let db = b.degree().expect("nonzero in PRS");
        let delta = (da - db) as u32;
        let r = pseudo_rem(&a, &b, delta);
        if r.is_zero() {
            return b.monic();
        }
        if r.is_constant() {
            return Ok(Polynomial::one());
        }
        let divisor = &g * &h.pow(delta);
        a = b;
        b = exact_scale_down(&r, &divisor);
        g = a.leading().expect("nonzero leading");
        // h <- g^delta * h^(1-delta); for delta >= 1 this is an exact division
        h = if delta == 0 {
            h
        } else {
            let num = g.pow(delta);
            let den = h.pow(delta - 1);
            exact_div_scalar(&num, &den)
        };
    }
}

/// Pseudo-remainder rem(lc(b)^(delta+1) * a, b), exact over Gaussian integers.
fn pseudo_rem(a: &Polynomial, b: &Polynomial, delta: u32) -> Polynomial {
    let lcb = b.leading().expect("nonzero leading");
    let scaled = a.scale(&lcb.pow(delta + 1));
    let (_, r) = scaled.divrem(b).expect("nonzero divisor");
    r
}

/// Multiplies by the least common multiple of all coefficient denominators so
/// every coefficient becomes a Gaussian integer.
fn clear_denominators(p: &Polynomial) -> Polynomial {
    let mut l = BigInt::one();
    for c in p.coeffs() {
        l = l.lcm(c.re.denom());
        l = l.lcm(c.im.denom());
    }
    p.scale(&GaussianRational::real(BigRational::from_integer(l)))
}

fn exact_scale_down(p: &Polynomial, divisor: &GaussianRational) -> Polynomial {
    Polynomial::new(
        p.coeffs()
            .iter()
            .map(|c| exact_div_scalar(c, divisor))
            .collect(),
    )
}

/// Division known to be exact in the Gaussian integers (asserts exactness).
fn exact_div_scalar(n: &GaussianRational, d: &GaussianRational) -> GaussianRational {
    debug_assert!(!d.is_zero());
    let q = n / d;
    debug_assert!(
        q.re.denom().is_one() && q.im.denom().is_one(),
        "inexact division in subresultant PRS"
    );
    q
}
