use crate::error::PolyError;
use crate::poly::Polynomial;
use crate::ratfun::RationalFunction;
use crate::scalar::{GaussianRational, Rat};
use num_bigint::BigInt;
use std::str::FromStr;

/// Result of parsing: a polynomial, or a rational function when the input
/// splits as `expr / expr` at the top level.
#[derive(Clone, Debug)]
pub enum Parsed {
    Poly(Polynomial),
    Rational(RationalFunction),
}

/// Parses with the variable inferred from the input: the first letter other
/// than `i` fixes the variable; any different letter afterwards is an error.
/// Purely numeric input parses as a constant polynomial.
pub fn parse_expression(text: &str) -> Result<Parsed, PolyError> {
    Parser::new(text, None)?.parse_input()
}

/// Parses a polynomial in the given variable; a top-level `/` is an error
/// unless it sits between two integer literals.
pub fn parse_polynomial(text: &str, var: char) -> Result<Polynomial, PolyError> {
    match Parser::new(text, Some(var))?.parse_input()? {
        Parsed::Poly(p) => Ok(p),
        Parsed::Rational(_) => Err(PolyError::Syntax {
            pos: 0,
            msg: "expected a polynomial, found a rational function".into(),
        }),
    }
}

/// Parses a rational function (or a polynomial, promoted to denominator 1).
pub fn parse_rational(text: &str, var: char) -> Result<RationalFunction, PolyError> {
    match Parser::new(text, Some(var))?.parse_input()? {
        Parsed::Poly(p) => RationalFunction::new(p, Polynomial::one()),
        Parsed::Rational(r) => Ok(r),
    }
}

impl FromStr for GaussianRational {
    type Err = PolyError;

    /// Exact scalar strings: "96/25", "1/2+3i", "-i", "4".
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match Parser::new(s, Some('\0'))?.parse_input()? {
            Parsed::Poly(p) if p.is_constant() => Ok(p.coeff(0)),
            _ => Err(PolyError::Syntax {
                pos: 0,
                msg: "expected an exact scalar".into(),
            }),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Letter(char),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    text_len: usize,
    var: Option<char>,
    var_fixed: bool,
}

fn err(pos: usize, msg: impl Into<String>) -> PolyError {
    PolyError::Syntax {
        pos,
        msg: msg.into(),
    }
}

impl Parser {
    fn new(text: &str, var: Option<char>) -> Result<Self, PolyError> {
        let mut toks = Vec::new();
        let bytes = text.as_bytes();
        let mut k = 0;
        while k < bytes.len() {
            let b = bytes[k];
            match b {
                b' ' | b'\t' | b'\n' | b'\r' => k += 1,
                b'0'..=b'9' => {
                    let start = k;
                    while k < bytes.len() && bytes[k].is_ascii_digit() {
                        k += 1;
                    }
                    let n = BigInt::parse_bytes(&bytes[start..k], 10)
                        .ok_or_else(|| err(start, "bad integer literal"))?;
                    toks.push((start, Tok::Int(n)));
                }
                b'+' => {
                    toks.push((k, Tok::Plus));
                    k += 1;
                }
                b'-' => {
                    toks.push((k, Tok::Minus));
                    k += 1;
                }
                b'*' => {
                    toks.push((k, Tok::Star));
                    k += 1;
                }
                b'/' => {
                    toks.push((k, Tok::Slash));
                    k += 1;
                }
                b'^' => {
                    toks.push((k, Tok::Caret));
                    k += 1;
                }
                b'(' => {
                    toks.push((k, Tok::LParen));
                    k += 1;
                }
                b')' => {
                    toks.push((k, Tok::RParen));
                    k += 1;
                }
                c if c.is_ascii_alphabetic() => {
                    toks.push((k, Tok::Letter(c as char)));
                    k += 1;
                }
                _ => return Err(err(k, format!("unexpected character '{}'", b as char))),
            }
        }
        Ok(Self {
            toks,
            pos: 0,
            text_len: text.len(),
            var: var.filter(|&v| v != '\0'),
            var_fixed: var.is_some(),
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn peek2(&self) -> Option<&Tok> {
        self.toks.get(self.pos + 1).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|(p, _)| *p)
            .unwrap_or(self.text_len)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn parse_input(&mut self) -> Result<Parsed, PolyError> {
        let num = self.parse_expr()?;
        match self.peek() {
            None => Ok(Parsed::Poly(num)),
            Some(Tok::Slash) => {
                self.bump();
                let den_start = self.here();
                let den = self.parse_expr()?;
                if let Some(_) = self.peek() {
                    return Err(err(self.here(), "trailing input after denominator"));
                }
                if den.is_zero() {
                    return Err(err(den_start, "division by the zero polynomial"));
                }
                Ok(Parsed::Rational(RationalFunction::new(num, den)?))
            }
            Some(_) => Err(err(self.here(), "trailing input after expression")),
        }
    }

    fn parse_expr(&mut self) -> Result<Polynomial, PolyError> {
        let mut negate_first = false;
        match self.peek() {
            Some(Tok::Plus) => {
                self.bump();
            }
            Some(Tok::Minus) => {
                self.bump();
                negate_first = true;
            }
            _ => {}
        }
        let mut acc = self.parse_term()?;
        if negate_first {
            acc = -&acc;
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    let t = self.parse_term()?;
                    acc = &acc + &t;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    let t = self.parse_term()?;
                    acc = &acc - &t;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn parse_term(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = self.parse_factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    let f = self.parse_factor()?;
                    acc = &acc * &f;
                }
                // implicit multiplication by adjacency
                Some(Tok::Int(_)) | Some(Tok::Letter(_)) | Some(Tok::LParen) => {
                    let f = self.parse_factor()?;
                    acc = &acc * &f;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn parse_factor(&mut self) -> Result<Polynomial, PolyError> {
        let base = self.parse_base()?;
        if let Some(Tok::Caret) = self.peek() {
            self.bump();
            let pos = self.here();
            match self.bump() {
                Some(Tok::Int(n)) => {
                    let e = u32::try_from(&n)
                        .map_err(|_| err(pos, "exponent out of range"))?;
                    Ok(base.pow(e))
                }
                _ => Err(err(pos, "expected a nonnegative integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn parse_base(&mut self) -> Result<Polynomial, PolyError> {
        let pos = self.here();
        match self.bump() {
            Some(Tok::Int(n)) => {
                // greedy rational literal: integer '/' integer
                if self.peek() == Some(&Tok::Slash) {
                    if let Some(Tok::Int(_)) = self.peek2() {
                        self.bump();
                        let dpos = self.here();
                        let Some(Tok::Int(d)) = self.bump() else {
                            unreachable!()
                        };
                        if d == BigInt::from(0) {
                            return Err(err(dpos, "zero denominator in rational literal"));
                        }
                        return Ok(Polynomial::constant(GaussianRational::real(Rat::new(
                            n, d,
                        ))));
                    }
                }
                Ok(Polynomial::constant(GaussianRational::real(
                    Rat::from_integer(n),
                )))
            }
            Some(Tok::Letter('i')) => Ok(Polynomial::constant(GaussianRational::i())),
            Some(Tok::Letter(v)) => {
                match self.var {
                    Some(declared) if declared == v => Ok(Polynomial::var()),
                    Some(declared) => Err(err(
                        pos,
                        format!("unexpected variable '{v}'; expression uses '{declared}'"),
                    )),
                    None if self.var_fixed => Err(err(
                        pos,
                        format!("unexpected variable '{v}' in a constant expression"),
                    )),
                    None => {
                        self.var = Some(v);
                        Ok(Polynomial::var())
                    }
                }
            }
            Some(Tok::LParen) => {
                let e = self.parse_expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(e),
                    _ => Err(err(pos, "unbalanced parenthesis")),
                }
            }
            Some(t) => Err(err(pos, format!("unexpected token {t:?}"))),
            None => Err(err(pos, "unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::poly_from_ints;

    #[test]
    fn direct_transcription() {
        let p = parse_polynomial("z^3 - z", 'z').unwrap();
        assert_eq!(p, poly_from_ints(&[0, -1, 0, 1]));
    }

    #[test]
    fn rational_coefficients() {
        let p = parse_polynomial("(1/7)z^7 - (3/6)z^6 + (3/5)z^5 - (1/4)z^4 + 1", 'z').unwrap();
        assert_eq!(p.coeff(7), GaussianRational::from_ratio(1, 7));
        assert_eq!(p.coeff(6), GaussianRational::from_ratio(-1, 2));
        assert_eq!(p.coeff(5), GaussianRational::from_ratio(3, 5));
        assert_eq!(p.coeff(4), GaussianRational::from_ratio(-1, 4));
        assert_eq!(p.coeff(0), GaussianRational::one());
        assert_eq!(p.degree().unwrap(), 7);
    }

    #[test]
    fn top_level_quotient() {
        let f = parse_rational("2/(1-u)", 'u').unwrap();
        // canonical: monic denominator u - 1, numerator -2
        assert_eq!(f.numerator(), &poly_from_ints(&[-2]));
        assert_eq!(f.denominator(), &poly_from_ints(&[-1, 1]));
    }

    #[test]
    fn literal_slash_literal_stays_scalar() {
        match parse_expression("1/2").unwrap() {
            Parsed::Poly(p) => assert_eq!(p.coeff(0), GaussianRational::from_ratio(1, 2)),
            Parsed::Rational(_) => panic!("1/2 should be a constant polynomial"),
        }
    }

    #[test]
    fn imaginary_unit_and_implicit_multiplication() {
        let p = parse_polynomial("3i z^2 + (1/2+3i)", 'z').unwrap();
        assert_eq!(
            p.coeff(2),
            GaussianRational::new(Rat::from_integer(0.into()), Rat::from_integer(3.into()))
        );
        assert_eq!(
            p.coeff(0),
            GaussianRational::new(Rat::new(1.into(), 2.into()), Rat::from_integer(3.into()))
        );
        let q = parse_polynomial("i^2", 'z').unwrap();
        assert_eq!(q, poly_from_ints(&[-1]));
    }

    #[test]
    fn variable_inference_and_mismatch() {
        match parse_expression("t^2 - 1").unwrap() {
            Parsed::Poly(p) => assert_eq!(p, poly_from_ints(&[-1, 0, 1])),
            _ => panic!(),
        }
        assert!(matches!(
            parse_expression("z + t"),
            Err(PolyError::Syntax { .. })
        ));
        assert!(matches!(
            parse_polynomial("u^2", 'z'),
            Err(PolyError::Syntax { .. })
        ));
    }

    #[test]
    fn syntax_error_positions() {
        let e = parse_expression("z^").unwrap_err();
        match e {
            PolyError::Syntax { pos, .. } => assert_eq!(pos, 2),
            _ => panic!(),
        }
        assert!(parse_expression("(z+1").is_err());
        assert!(parse_expression("z $ 1").is_err());
    }

    #[test]
    fn division_by_zero_polynomial_rejected() {
        assert!(matches!(
            parse_expression("(z+1)/(z - z)"),
            Err(PolyError::Syntax { .. })
        ));
    }

    #[test]
    fn scalar_from_str() {
        let s: GaussianRational = "96/25".parse().unwrap();
        assert_eq!(s, GaussianRational::from_ratio(96, 25));
        let c: GaussianRational = "1/2+3i".parse().unwrap();
        assert_eq!(
            c,
            GaussianRational::new(Rat::new(1.into(), 2.into()), Rat::from_integer(3.into()))
        );
        let m: GaussianRational = "-i".parse().unwrap();
        assert_eq!(m, -&GaussianRational::i());
        assert!("z+1".parse::<GaussianRational>().is_err());
    }
}
