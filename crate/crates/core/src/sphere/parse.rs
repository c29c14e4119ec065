//! Parser for the polynomial literal syntax used on the command line.
//!
//! Terms are separated by `+`/`-`; a term is a `*`-separated product of
//! an optional rational coefficient (`2`, `3/4`) and variable powers
//! `z^2`, `w`, `zb^3`, `wb`, `i`, where `zb`/`wb` denote the conjugate
//! variables and `i` the imaginary unit. Example: `2*z^2*wb^1 - 1/3*i*w`.

use super::{Monomial, SpherePolynomial};
use crate::error::{Error, Result};
use crate::exact::{rat_int, Qc, Rat};
use num_bigint::BigInt;
use num_traits::Zero;

pub fn parse_polynomial(input: &str) -> Result<SpherePolynomial> {
    let input = input.trim();
    if input.is_empty() {
        return Err(Error::PolyParse("empty input".into()));
    }
    let mut poly = SpherePolynomial::zero();
    for (sign, term) in split_terms(input)? {
        let t = parse_term(term)?;
        poly = if sign < 0 { poly.sub(&t) } else { poly.add(&t) };
    }
    Ok(poly)
}

/// Splits on + and -, returning (sign, term) pairs. Signs with no term
/// before them are unary and fold into the pending sign.
fn split_terms(input: &str) -> Result<Vec<(i32, &str)>> {
    let mut out = Vec::new();
    let mut start = 0usize;
    let mut sign = 1;
    for (idx, ch) in input.char_indices() {
        if ch == '+' || ch == '-' {
            let segment = input[start..idx].trim();
            if !segment.is_empty() {
                out.push((sign, segment));
                sign = 1;
            }
            if ch == '-' {
                sign = -sign;
            }
            start = idx + 1;
        }
    }
    let last = input[start..].trim();
    if last.is_empty() {
        return Err(Error::PolyParse("dangling operator".into()));
    }
    out.push((sign, last));
    Ok(out)
}

fn parse_term(term: &str) -> Result<SpherePolynomial> {
    let mut coeff = Qc::one();
    let mut mono = Monomial::one();
    for factor in term.split('*') {
        let factor = factor.trim();
        if factor.is_empty() {
            return Err(Error::PolyParse(format!("empty factor in `{term}`")));
        }
        let (name, exp) = match factor.split_once('^') {
            Some((n, e)) => {
                let exp: u32 = e
                    .trim()
                    .parse()
                    .map_err(|_| Error::PolyParse(format!("bad exponent in `{factor}`")))?;
                (n.trim(), exp)
            }
            None => (factor, 1),
        };
        match name {
            "z" => mono.a += exp,
            "w" => mono.b += exp,
            "zb" => mono.c += exp,
            "wb" => mono.d += exp,
            "i" => {
                for _ in 0..exp {
                    coeff = &coeff * &Qc::i();
                }
            }
            _ => {
                let base = Qc::from_rat(parse_rational(name)?);
                for _ in 0..exp {
                    coeff = &coeff * &base;
                }
            }
        }
    }
    Ok(SpherePolynomial::monomial(mono, coeff))
}

fn parse_rational(s: &str) -> Result<Rat> {
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num
            .trim()
            .parse()
            .map_err(|_| Error::PolyParse(format!("bad numerator `{num}`")))?;
        let d: BigInt = den
            .trim()
            .parse()
            .map_err(|_| Error::PolyParse(format!("bad denominator `{den}`")))?;
        if d.is_zero() {
            return Err(Error::PolyParse("zero denominator".into()));
        }
        Ok(Rat::new(n, d))
    } else if let Ok(n) = s.parse::<i64>() {
        Ok(rat_int(n))
    } else {
        Err(Error::PolyParse(format!(
            "unknown factor `{s}` (expected z, w, zb, wb, i, or a rational)"
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::sphere::integrate_sphere;

    #[test]
    fn parses_spec_example() {
        let p = parse_polynomial("2*z^2*wb^1").unwrap();
        assert_eq!(
            p,
            SpherePolynomial::monomial(Monomial::new(2, 0, 0, 1), Qc::from_int(2))
        );
    }

    #[test]
    fn parses_sums_and_signs() {
        let p = parse_polynomial("z^2 + zb^2 - 2*z*zb").unwrap();
        let z = SpherePolynomial::var_z();
        let zb = SpherePolynomial::var_zb();
        let expect = z.mul(&z).add(&zb.mul(&zb)).sub(&z.mul(&zb).scale(&Qc::from_int(2)));
        assert_eq!(p, expect);
        let m = parse_polynomial("-z + 1/2").unwrap();
        assert_eq!(
            m,
            SpherePolynomial::constant(Qc::from_rat(rat(1, 2))).sub(&SpherePolynomial::var_z())
        );
    }

    #[test]
    fn parses_imaginary_unit() {
        let p = parse_polynomial("i*z - i*zb").unwrap();
        assert!(p.is_real(), "i z - i zb is real-valued");
    }

    #[test]
    fn mean_of_parsed_mode() {
        let p = parse_polynomial("z^2*wb^2 + zb^2*w^2").unwrap();
        assert!(integrate_sphere(&p).is_zero());
        assert!(p.is_real());
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_polynomial("").is_err());
        assert!(parse_polynomial("q^2").is_err());
        assert!(parse_polynomial("z +").is_err());
        assert!(parse_polynomial("1/0").is_err());
    }
}
