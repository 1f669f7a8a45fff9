use crate::error::PolyError;
use crate::poly::Polynomial;
use crate::scalar::GaussianRational;

/// Resultant Res(p, q) via fraction-free Bareiss elimination on the
/// Sylvester matrix. Exact; zero iff p and q share a root.
pub fn resultant(p: &Polynomial, q: &Polynomial) -> Result<GaussianRational, PolyError> {
    let dp = p.degree().map_err(|_| PolyError::ZeroPolynomial)?;
    let dq = q.degree().map_err(|_| PolyError::ZeroPolynomial)?;
    if dp == 0 && dq == 0 {
        return Ok(GaussianRational::one());
    }
    if dp == 0 {
        return Ok(p.coeff(0).pow(dq as u32));
    }
    if dq == 0 {
        return Ok(q.coeff(0).pow(dp as u32));
    }
    let n = dp + dq;
    // Sylvester matrix: dq rows of p's coefficients, dp rows of q's.
    let mut m = vec![vec![GaussianRational::zero(); n]; n];
    for row in 0..dq {
        for k in 0..=dp {
            m[row][row + k] = p.coeff(dp - k);
        }
    }
    for row in 0..dp {
        for k in 0..=dq {
            m[dq + row][row + k] = q.coeff(dq - k);
        }
    }
    Ok(bareiss_determinant(m))
}

/// Fraction-free determinant with row pivoting.
fn bareiss_determinant(mut m: Vec<Vec<GaussianRational>>) -> GaussianRational {
    let n = m.len();
    let mut sign_flip = false;
    let mut prev = GaussianRational::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return GaussianRational::zero();
            };
            m.swap(k, swap);
            sign_flip = !sign_flip;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = &num / &prev;
            }
            m[i][k] = GaussianRational::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign_flip {
        -&det
    } else {
        det
    }
}

/// Classical discriminant: (-1)^(n(n-1)/2) * Res(p, p') / lc(p).
/// Exact; zero iff p has a multiple root. Errors on constants.
pub fn discriminant(p: &Polynomial) -> Result<GaussianRational, PolyError> {
    let n = p.degree().map_err(|_| PolyError::DegreeTooSmall {
        op: "discriminant",
        min_degree: 1,
    })?;
    if n < 1 {
        return Err(PolyError::DegreeTooSmall {
            op: "discriminant",
            min_degree: 1,
        });
    }
    if n == 1 {
        return Ok(GaussianRational::one());
    }
    let res = resultant(p, &p.derivative())?;
    let lc = p.leading()?;
    let signed = if (n * (n - 1) / 2) % 2 == 1 { -&res } else { res };
    Ok(&signed / &lc)
}

/// Exact polynomial through the given (x, y) points (distinct x), degree
/// below the number of points.
pub fn lagrange_interpolate(points: &[(GaussianRational, GaussianRational)]) -> Polynomial {
    let mut acc = Polynomial::zero();
    for (j, (xj, yj)) in points.iter().enumerate() {
        let mut basis = Polynomial::one();
        let mut denom = GaussianRational::one();
        for (k, (xk, _)) in points.iter().enumerate() {
            if k == j {
                continue;
            }
            basis = &basis * &Polynomial::new(vec![-xk, GaussianRational::one()]);
            denom = &denom * &(xj - xk);
        }
        acc = &acc + &basis.scale(&(yj / &denom));
    }
    acc
}
