//! Parsers for the polynomial and series arguments.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use stable_ideals::{HilbertPolynomial, RationalPoly, SeriesNumerator};

fn rational(text: &str) -> Result<BigRational, String> {
    let text = text.trim();
    let parse_int = |s: &str| {
        s.trim()
            .parse::<BigInt>()
            .map_err(|_| format!("{text:?} is not a rational number"))
    };
    match text.split_once('/') {
        Some((n, d)) => {
            let d = parse_int(d)?;
            if d.is_zero() {
                return Err(format!("{text:?} has a zero denominator"));
            }
            Ok(BigRational::new(parse_int(n)?, d))
        }
        None => Ok(BigRational::from_integer(parse_int(text)?)),
    }
}

/// Parses expressions such as `3/2*z^2+5/2*z`, `2z^2 + z + 1` or `8z-16`.
///
/// Terms are `[coefficient][*]z[^k]` or a bare coefficient; coefficients are
/// integers or fractions `a/b`; whitespace is ignored.
pub fn parse_polynomial(text: &str) -> Result<RationalPoly, String> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err("empty polynomial".into());
    }
    let mut coeffs: Vec<BigRational> = Vec::new();
    let mut rest = s.as_str();
    let mut first = true;
    while !rest.is_empty() {
        let negative = match rest.as_bytes()[0] {
            b'+' => {
                rest = &rest[1..];
                false
            }
            b'-' => {
                rest = &rest[1..];
                true
            }
            _ if first => false,
            _ => return Err(format!("expected + or - in {text:?}")),
        };
        first = false;
        let end = rest[1.min(rest.len())..]
            .find(['+', '-'])
            .map_or(rest.len(), |i| i + 1);
        let (term, tail) = rest.split_at(end);
        rest = tail;
        let (coeff, power) = parse_term(term).map_err(|e| format!("{e} in {text:?}"))?;
        let coeff = if negative { -coeff } else { coeff };
        if coeffs.len() <= power {
            coeffs.resize(power + 1, BigRational::zero());
        }
        coeffs[power] += coeff;
    }
    Ok(RationalPoly::new(coeffs))
}

fn parse_term(term: &str) -> Result<(BigRational, usize), String> {
    if term.is_empty() {
        return Err("missing term".into());
    }
    let Some(z) = term.find('z') else {
        return Ok((rational(term)?, 0));
    };
    let coeff_text = term[..z].strip_suffix('*').unwrap_or(&term[..z]);
    let coeff = if coeff_text.is_empty() {
        BigRational::from_integer(1.into())
    } else {
        rational(coeff_text)?
    };
    let power = match &term[z + 1..] {
        "" => 1,
        p => p
            .strip_prefix('^')
            .and_then(|k| k.parse::<usize>().ok())
            .ok_or_else(|| format!("bad exponent {p:?}"))?,
    };
    Ok((coeff, power))
}

/// `c_0,c_1,...` with `c_i` the coefficient of `z^i`.
pub fn parse_coefficients(text: &str) -> Result<RationalPoly, String> {
    let coeffs = text
        .split(',')
        .map(rational)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(RationalPoly::new(coeffs))
}

/// `b_0,b_1,...,b_d`.
pub fn parse_gotzmann(text: &str) -> Result<HilbertPolynomial, String> {
    let b = text
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<u64>()
                .map_err(|_| format!("{s:?} is not a non-negative integer"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    HilbertPolynomial::from_gotzmann(b).map_err(|e| e.to_string())
}

/// `g_0,g_1,...` with `g_i` the coefficient of `t^i`.
pub fn parse_numerator(text: &str) -> Result<SeriesNumerator, String> {
    let coeffs = text
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<BigInt>()
                .map_err(|_| format!("{s:?} is not an integer"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SeriesNumerator::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn expressions() {
        let p = parse_polynomial("3/2*z^2+5/2*z").unwrap();
        assert_eq!(p, RationalPoly::new(vec![q(0, 1), q(5, 2), q(3, 2)]));
        assert_eq!(
            parse_polynomial("2z^2 + z + 1").unwrap(),
            RationalPoly::from_integers(&[1, 1, 2])
        );
        assert_eq!(
            parse_polynomial("8z-16").unwrap(),
            RationalPoly::from_integers(&[-16, 8])
        );
        assert_eq!(
            parse_polynomial("-z+4").unwrap(),
            RationalPoly::from_integers(&[4, -1])
        );
        assert_eq!(parse_polynomial("0").unwrap(), RationalPoly::zero());
        assert_eq!(
            parse_polynomial("31").unwrap(),
            RationalPoly::from_integers(&[31])
        );
    }

    #[test]
    fn bad_expressions() {
        for bad in ["", "z^", "3/0", "2x", "1++z", "z^-1"] {
            assert!(parse_polynomial(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn lists() {
        assert_eq!(
            parse_coefficients("0,5/2,3/2").unwrap(),
            parse_polynomial("3/2*z^2+5/2*z").unwrap()
        );
        assert_eq!(parse_gotzmann("5,4,3").unwrap().gotzmann(), &[5, 4, 3]);
        assert!(parse_gotzmann("3,4").is_err());
        assert_eq!(
            parse_numerator("1,0,-6,8,-3").unwrap(),
            SeriesNumerator::from_i64(&[1, 0, -6, 8, -3])
        );
    }
}
