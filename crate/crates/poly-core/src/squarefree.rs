use crate::error::PolyError;
use crate::gcd::gcd_monic;
use crate::poly::Polynomial;

/// Yun's squarefree decomposition over the exact field.
///
/// Returns monic pairwise-coprime squarefree factors with multiplicities;
/// the product of factor^multiplicity equals the input up to its leading
/// constant. Multiplicities are exact regardless of where the roots lie.
pub fn squarefree_decomposition(
    p: &Polynomial,
) -> Result<Vec<(Polynomial, usize)>, PolyError> {
    let deg = p.degree().map_err(|_| PolyError::DegreeTooSmall {
        op: "squarefree_decomposition",
        min_degree: 1,
    })?;
    if deg < 1 {
        return Err(PolyError::DegreeTooSmall {
            op: "squarefree_decomposition",
            min_degree: 1,
        });
    }
    let p = p.monic()?;
    let dp = p.derivative();
    let g = gcd_monic(&p, &dp)?;
    let mut w = p.div_exact(&g).expect("gcd divides p");
    let mut y = dp.div_exact(&g).expect("gcd divides p'");
    let mut out = Vec::new();
    let mut i = 1usize;
    loop {
        let z = &y - &w.derivative();
        if z.is_zero() {
            // remaining w is the factor of highest multiplicity
            if w.degree().map(|d| d >= 1).unwrap_or(false) {
                out.push((w, i));
            }
            break;
        }
        let gi = gcd_monic(&w, &z)?;
        if gi.degree().map(|d| d >= 1).unwrap_or(false) {
            out.push((gi.clone(), i));
        }
        w = w.div_exact(&gi).expect("factor divides");
        y = z.div_exact(&gi).expect("factor divides");
        if w.is_constant() {
            break;
        }
        i += 1;
    }
    Ok(out)
}

/// Product of the distinct irreducible factors (monic), i.e. p / gcd(p, p').
pub fn squarefree_part(p: &Polynomial) -> Result<Polynomial, PolyError> {
    let g = gcd_monic(p, &p.derivative())?;
    p.monic()?
        .div_exact(&g)
        .ok_or(PolyError::DivisionByZero)
}
