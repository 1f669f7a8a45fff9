use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum PolyError {
    #[error("degree of the zero polynomial is undefined")]
    ZeroPolynomial,
    #[error("gcd of two zero polynomials is undefined")]
    GcdBothZero,
    #[error("{op} requires degree >= {min_degree}, got a smaller input")]
    DegreeTooSmall { op: &'static str, min_degree: usize },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("root iteration did not converge within {budget} iterations on factor {factor}")]
    RootNonConvergence { factor: String, budget: usize },
    #[error("root residual {residual:e} exceeds tolerance {tol:e} on factor {factor}")]
    RootResidual {
        factor: String,
        residual: f64,
        tol: f64,
    },
}
