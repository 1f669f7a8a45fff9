use crate::error::PolyError;
use crate::poly::Polynomial;
use crate::squarefree::squarefree_decomposition;
use num_complex::Complex64;

/// One numerically located root with its exact multiplicity and the monic
/// squarefree factor it came from.
#[derive(Clone, Debug)]
pub struct RootEntry {
    pub location: Complex64,
    pub multiplicity: usize,
    pub source_factor: Polynomial,
}

#[derive(Clone, Debug)]
pub struct RootSet {
    pub entries: Vec<RootEntry>,
}

impl RootSet {
    pub fn total_multiplicity(&self) -> usize {
        self.entries.iter().map(|e| e.multiplicity).sum()
    }
}

#[derive(Clone, Copy, Debug)]
pub struct RootConfig {
    pub tol: f64,
    pub max_iter: usize,
}

impl Default for RootConfig {
    fn default() -> Self {
        Self {
            tol: crate::DEFAULT_ROOT_TOL,
            max_iter: crate::DEFAULT_ROOT_ITER_BUDGET,
        }
    }
}

/// Numeric roots with exact multiplicities.
///
/// Multiplicities come first from the exact squarefree decomposition; only
/// the squarefree factors are handed to the simultaneous iteration, so a
/// triple root is three exact copies of one well-conditioned simple root.
/// Entries are ordered lexicographically by rounded (re, im) parts; the
/// ordering and the iteration are deterministic for a fixed config.
pub fn roots_numeric(p: &Polynomial, tol: f64) -> Result<RootSet, PolyError> {
    roots_numeric_cfg(
        p,
        RootConfig {
            tol,
            ..RootConfig::default()
        },
    )
}

pub fn roots_numeric_cfg(p: &Polynomial, cfg: RootConfig) -> Result<RootSet, PolyError> {
    p.degree().map_err(|_| PolyError::DegreeTooSmall {
        op: "roots_numeric",
        min_degree: 1,
    })?;
    let mut entries = Vec::new();
    for (factor, mult) in squarefree_decomposition(p)? {
        let deg = factor.degree().expect("factor nonconstant");
        let coeffs: Vec<Complex64> = factor.coeffs().iter().map(|c| c.to_complex()).collect();
        let locations = if deg == 1 {
            // exact in rational arithmetic, rendered to floats once
            let root = &(-&factor.coeff(0)) / &factor.coeff(1);
            vec![root.to_complex()]
        } else {
            aberth_roots(&coeffs, cfg.max_iter).map_err(|budget| {
                PolyError::RootNonConvergence {
                    factor: factor.render('z'),
                    budget,
                }
            })?
        };
        let scale = factor.max_coeff_magnitude().max(1.0);
        for z in locations {
            let residual = factor.eval_complex(z).norm();
            let bound = cfg.tol * scale * (1.0 + z.norm()).powi(deg as i32);
            if residual > bound {
                return Err(PolyError::RootResidual {
                    factor: factor.render('z'),
                    residual,
                    tol: cfg.tol,
                });
            }
            entries.push(RootEntry {
                location: z,
                multiplicity: mult,
                source_factor: factor.clone(),
            });
        }
    }
    entries.sort_by_key(|e| sort_key(e.location));
    Ok(RootSet { entries })
}

fn sort_key(z: Complex64) -> (i64, i64) {
    let grid = |x: f64| -> i64 {
        let scaled = (x * 1e9).round();
        if scaled >= i64::MAX as f64 {
            i64::MAX
        } else if scaled <= i64::MIN as f64 {
            i64::MIN
        } else {
            scaled as i64
        }
    };
    (grid(z.re), grid(z.im))
}

/// Aberth–Ehrlich simultaneous iteration on a squarefree polynomial given by
/// complex coefficients (low to high). Deterministic initial configuration;
/// Err carries the exhausted budget.
pub fn aberth_roots(coeffs: &[Complex64], max_iter: usize) -> Result<Vec<Complex64>, usize> {
    let deg = coeffs.len() - 1;
    assert!(deg >= 1, "aberth_roots needs degree >= 1");
    let lead = coeffs[deg];
    let monic: Vec<Complex64> = coeffs.iter().map(|c| c / lead).collect();
    if deg == 1 {
        return Ok(vec![-monic[0]]);
    }
    // Fujiwara root bound for the starting circle
    let radius = 2.0
        * (1..=deg)
            .map(|k| monic[deg - k].norm().powf(1.0 / k as f64))
            .fold(0.0, f64::max)
        + 1e-6;
    let mut zs: Vec<Complex64> = (0..deg)
        .map(|k| {
            let angle = 2.0 * std::f64::consts::PI * (k as f64) / (deg as f64) + 0.37;
            Complex64::from_polar(radius * 0.5, angle)
        })
        .collect();
    // Horner evaluation plus a running bound on its own rounding error; a
    // root is converged once |p(z)| sinks below the evaluation noise floor.
    let eval = |z: Complex64| -> (Complex64, Complex64, f64) {
        let mut p = Complex64::new(0.0, 0.0);
        let mut dp = Complex64::new(0.0, 0.0);
        let mut bound = 0.0f64;
        let az = z.norm();
        for c in monic.iter().rev() {
            dp = dp * z + p;
            p = p * z + c;
            bound = bound * az + p.norm();
        }
        (p, dp, bound * 4.0 * f64::EPSILON)
    };
    let mut converged = vec![false; deg];
    for _ in 0..max_iter {
        let prev = zs.clone();
        let mut all_done = true;
        for i in 0..deg {
            if converged[i] {
                continue;
            }
            let z = prev[i];
            let (p, dp, noise) = eval(z);
            if p.norm() <= noise {
                converged[i] = true;
                continue;
            }
            all_done = false;
            let newton = if dp.norm() == 0.0 {
                Complex64::new(1e-12, 1e-12)
            } else {
                p / dp
            };
            let mut rep = Complex64::new(0.0, 0.0);
            for (j, &w) in prev.iter().enumerate() {
                if j != i {
                    rep += (z - w).finv();
                }
            }
            let denom = Complex64::new(1.0, 0.0) - newton * rep;
            let step = if denom.norm() < 1e-300 {
                newton
            } else {
                newton / denom
            };
            zs[i] = z - step;
            if step.norm() <= 1e-15 * (1.0 + zs[i].norm()) {
                converged[i] = true;
            }
        }
        if all_done {
            return Ok(zs);
        }
    }
    if converged.iter().all(|&c| c) {
        Ok(zs)
    } else {
        Err(max_iter)
    }
}
