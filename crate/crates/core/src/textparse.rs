//! Tiny polynomial-expression syntax for CLI flags and the browser demo:
//! sums of terms, each a '*'-separated product of rational literals and
//! powered variables, e.g. "3/2*x^2 - x + 1" or "y - j" or "i*j*x".
//!
//! Which variables are legal depends on the context: rational polynomials
//! admit one main variable (x or t), polynomials over `F[j]` additionally
//! admit j (the field generator), and probe elements admit the central
//! variables x, y and the algebra generators i, j — with multiplication
//! order preserved, since i and j do not commute.

use crate::arith::{QPoly, Rational};
use crate::cycalg::CyclicAlgebra;
use crate::error::Error;
use crate::factor::NfPoly;
use crate::numfield::NumberField;
use crate::skewpoly::{BiPoly, SkewPoly};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(Rational),
    Var(char),
    Plus,
    Minus,
    Star,
    Caret,
}

fn lex(text: &str) -> Result<Vec<Token>, Error> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' | '\n' => {
                chars.next();
            }
            '+' => {
                chars.next();
                out.push(Token::Plus);
            }
            '-' | '−' => {
                chars.next();
                out.push(Token::Minus);
            }
            '*' | '·' => {
                chars.next();
                out.push(Token::Star);
            }
            '^' => {
                chars.next();
                out.push(Token::Caret);
            }
            '0'..='9' => {
                let mut num = String::new();
                while chars.peek().is_some_and(char::is_ascii_digit) {
                    num.push(chars.next().unwrap());
                }
                if chars.peek() == Some(&'/') {
                    chars.next();
                    num.push('/');
                    if !chars.peek().is_some_and(char::is_ascii_digit) {
                        return Err(Error::Parse("expected digits after '/'".into()));
                    }
                    while chars.peek().is_some_and(char::is_ascii_digit) {
                        num.push(chars.next().unwrap());
                    }
                }
                out.push(Token::Num(num.parse()?));
            }
            'a'..='z' => {
                chars.next();
                out.push(Token::Var(c));
            }
            other => {
                return Err(Error::Parse(format!("unexpected character {other:?}")));
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone)]
enum Factor {
    Coef(Rational),
    Var(char, u32),
}

/// One term: a sign and an ordered product of factors.
#[derive(Debug, Clone)]
struct Term {
    negative: bool,
    factors: Vec<Factor>,
}

fn parse_terms(text: &str) -> Result<Vec<Term>, Error> {
    let tokens = lex(text)?;
    if tokens.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut terms = Vec::new();
    let mut pos = 0usize;
    loop {
        let mut negative = false;
        while pos < tokens.len() {
            match tokens[pos] {
                Token::Plus => pos += 1,
                Token::Minus => {
                    negative = !negative;
                    pos += 1;
                }
                _ => break,
            }
        }
        if pos >= tokens.len() {
            return Err(Error::Parse("dangling sign".into()));
        }
        let mut factors = Vec::new();
        loop {
            match &tokens[pos] {
                Token::Num(r) => {
                    factors.push(Factor::Coef(r.clone()));
                    pos += 1;
                }
                Token::Var(v) => {
                    let var = *v;
                    pos += 1;
                    let mut exp = 1u32;
                    if pos < tokens.len() && tokens[pos] == Token::Caret {
                        pos += 1;
                        match tokens.get(pos) {
                            Some(Token::Num(r)) if r.is_integer() && r > &Rational::zero() => {
                                exp = r
                                    .numerator()
                                    .to_string()
                                    .parse::<u32>()
                                    .map_err(|_| Error::Parse("exponent too large".into()))?;
                                pos += 1;
                            }
                            _ => {
                                return Err(Error::Parse(
                                    "expected a positive integer exponent after '^'".into(),
                                ))
                            }
                        }
                    }
                    factors.push(Factor::Var(var, exp));
                }
                _ => return Err(Error::Parse("expected a number or variable".into())),
            }
            if pos < tokens.len() && tokens[pos] == Token::Star {
                pos += 1;
                continue;
            }
            break;
        }
        terms.push(Term { negative, factors });
        if pos >= tokens.len() {
            return Ok(terms);
        }
        match tokens[pos] {
            Token::Plus | Token::Minus => continue,
            _ => return Err(Error::Parse("expected '+' or '-' between terms".into())),
        }
    }
}

/// Parses a univariate rational polynomial; the main variable may be x or t
/// but must be used consistently.
pub fn parse_qpoly(text: &str) -> Result<QPoly, Error> {
    let terms = parse_terms(text)?;
    let mut main_var: Option<char> = None;
    let mut acc = QPoly::zero();
    for term in terms {
        let mut coef = Rational::one();
        let mut degree = 0u32;
        for factor in &term.factors {
            match factor {
                Factor::Coef(r) => coef = &coef * r,
                Factor::Var(v, e) => {
                    if !matches!(v, 'x' | 't') {
                        return Err(Error::Parse(format!(
                            "variable '{v}' is not allowed in a rational polynomial"
                        )));
                    }
                    match main_var {
                        None => main_var = Some(*v),
                        Some(mv) if mv == *v => {}
                        Some(mv) => {
                            return Err(Error::Parse(format!("mixed variables '{mv}' and '{v}'")))
                        }
                    }
                    degree += e;
                }
            }
        }
        if term.negative {
            coef = -coef;
        }
        acc = &acc + &QPoly::monomial(coef, degree as usize);
    }
    Ok(acc)
}

/// Parses a polynomial over K' = `ℚ[s]/(sᵖ−β)`; the main variable is x or t,
/// and j (or s) denotes the field generator.
pub fn parse_nfpoly(text: &str, field: &NumberField) -> Result<NfPoly, Error> {
    let terms = parse_terms(text)?;
    let mut main_var: Option<char> = None;
    let mut acc = NfPoly::zero(field.clone());
    for term in terms {
        let mut coef = field.one();
        let mut degree = 0u32;
        for factor in &term.factors {
            match factor {
                Factor::Coef(r) => coef = coef.scale(r),
                Factor::Var(v, e) => match v {
                    'x' | 't' => {
                        match main_var {
                            None => main_var = Some(*v),
                            Some(mv) if mv == *v => {}
                            Some(mv) => {
                                return Err(Error::Parse(format!(
                                    "mixed variables '{mv}' and '{v}'"
                                )))
                            }
                        }
                        degree += e;
                    }
                    'j' | 's' => coef = coef.mul(&field.generator().pow(*e)),
                    other => {
                        return Err(Error::Parse(format!(
                            "variable '{other}' is not allowed over F[j]"
                        )))
                    }
                },
            }
        }
        if term.negative {
            coef = coef.neg();
        }
        let mut coeffs = vec![field.zero(); degree as usize];
        coeffs.push(coef);
        acc = acc.add(&NfPoly::new(field.clone(), coeffs));
    }
    Ok(acc)
}

/// Parses an element of `D[x,y]`: x and y are central, i and j are the
/// algebra generators, and factor order within a term is preserved.
pub fn parse_bipoly(text: &str, alg: &CyclicAlgebra) -> Result<BiPoly, Error> {
    let terms = parse_terms(text)?;
    let mut acc = BiPoly::zero(alg.clone());
    for term in terms {
        let mut prod = BiPoly::from_skew(SkewPoly::one(alg.clone()));
        for factor in &term.factors {
            let next = match factor {
                Factor::Coef(r) => {
                    BiPoly::from_skew(SkewPoly::constant(alg.from_rational(r.clone())))
                }
                Factor::Var('x', e) => {
                    let mut coeffs = vec![alg.zero(); *e as usize];
                    coeffs.push(alg.one());
                    BiPoly::from_skew(SkewPoly::new(alg.clone(), coeffs))
                }
                Factor::Var('y', e) => {
                    let mut coeffs = vec![SkewPoly::zero(alg.clone()); *e as usize];
                    coeffs.push(SkewPoly::one(alg.clone()));
                    BiPoly::new(alg.clone(), coeffs)
                }
                Factor::Var('i', e) => BiPoly::from_skew(SkewPoly::constant(alg.gen_i().pow(*e))),
                Factor::Var('j', e) => BiPoly::from_skew(SkewPoly::constant(alg.gen_j().pow(*e))),
                Factor::Var(other, _) => {
                    return Err(Error::Parse(format!(
                        "variable '{other}' is not allowed in a probe element"
                    )))
                }
            };
            prod = prod.mul(&next);
        }
        if term.negative {
            prod = prod.neg();
        }
        acc = acc.add(&prod);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycalg::fixtures::fix3;

    #[test]
    fn qpoly_syntax() {
        assert_eq!(parse_qpoly("x^2-1").unwrap(), QPoly::from_ints(&[-1, 0, 1]));
        assert_eq!(
            parse_qpoly("t^3+t^2-2*t-1").unwrap(),
            QPoly::from_ints(&[-1, -2, 1, 1])
        );
        assert_eq!(
            parse_qpoly("3/2*x^2 - x + 1").unwrap(),
            QPoly::new(vec![
                Rational::from_int(1),
                Rational::from_int(-1),
                "3/2".parse().unwrap()
            ])
        );
        assert_eq!(parse_qpoly("-x").unwrap(), QPoly::from_ints(&[0, -1]));
        assert_eq!(parse_qpoly("+1").unwrap(), QPoly::one());
        assert!(parse_qpoly("x + t").is_err());
        assert!(parse_qpoly("x + y").is_err());
        assert!(parse_qpoly("").is_err());
        assert!(parse_qpoly("x^").is_err());
        assert!(parse_qpoly("2 2").is_err());
    }

    #[test]
    fn nfpoly_syntax() {
        let k = NumberField::new(QPoly::from_ints(&[-2, 0, 0, 1])).unwrap();
        let f = parse_nfpoly("x^2 - j", &k).unwrap();
        assert_eq!(f.degree(), Some(2));
        assert_eq!(f.coeff(0), k.generator().neg());
        // j^3 = 2 in ℚ[s]/(s³−2).
        let c = parse_nfpoly("j^3", &k).unwrap();
        assert_eq!(c.coeff(0).as_rational().unwrap(), Rational::from_int(2));
        assert!(parse_nfpoly("y", &k).is_err());
    }

    #[test]
    fn bipoly_syntax_and_order() {
        let alg = fix3();
        // y − j.
        let e = parse_bipoly("y - j", &alg).unwrap();
        assert_eq!(e, BiPoly::y_minus_j(&alg));
        // i*j ≠ j*i: order preserved.
        let ij = parse_bipoly("i*j", &alg).unwrap();
        let ji = parse_bipoly("j*i", &alg).unwrap();
        assert_ne!(ij, ji);
        assert_eq!(
            ij,
            BiPoly::from_skew(SkewPoly::constant(alg.gen_i().mul(&alg.gen_j())))
        );
        // x is central: x*j == j*x.
        assert_eq!(
            parse_bipoly("x*j", &alg).unwrap(),
            parse_bipoly("j*x", &alg).unwrap()
        );
        // f itself parses.
        let f = parse_bipoly("x^3+x^2-2*x-1", &alg).unwrap();
        assert_eq!(f.degree_y(), Some(0));
        assert_eq!(f.coeff_y(0).degree(), Some(3));
        assert!(parse_bipoly("s", &alg).is_err());
    }
}
