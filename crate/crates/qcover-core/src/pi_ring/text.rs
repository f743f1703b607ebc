//! Canonical text form for scalars, bit-exact for golden files.
//!
//! Grammar:
//!
//! ```text
//! scalar := "0" | term (" + " term)*
//! term   := [int "*"] ["p" "*"] ("q" | "q^" int) | [int "*"] "p" | int
//! ```
//!
//! `p` is the parity parameter. Canonical ordering merges both parts and
//! sorts by descending `q`-exponent with the even part first on ties;
//! coefficient `1` is omitted, `-1` renders as `-1*`, exponent `0` renders
//! the bare coefficient, exponent `1` renders `q`.

use num_bigint::BigInt;
use num_traits::One;

use super::poly::IntPoly;
use super::rational::PiRational;
use super::scalar::PiScalar;
use crate::error::Error;

pub fn format_scalar(x: &PiScalar) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    // (exponent, is_odd, coeff), descending exponent, even first on ties.
    let mut terms: Vec<(i64, bool, BigInt)> = Vec::new();
    for (e, c) in x.even.iter() {
        terms.push((*e, false, c.clone()));
    }
    for (e, c) in x.odd.iter() {
        terms.push((*e, true, c.clone()));
    }
    terms.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    let rendered: Vec<String> = terms.iter().map(|(e, odd, c)| format_term(*e, *odd, c)).collect();
    rendered.join(" + ")
}

fn format_term(e: i64, odd: bool, c: &BigInt) -> String {
    let coeff_prefix = if c.is_one() { String::new() } else { format!("{c}*") };
    match (odd, e) {
        (false, 0) => format!("{c}"),
        (false, 1) => format!("{coeff_prefix}q"),
        (false, _) => format!("{coeff_prefix}q^{e}"),
        (true, 0) => format!("{coeff_prefix}p"),
        (true, 1) => format!("{coeff_prefix}p*q"),
        (true, _) => format!("{coeff_prefix}p*q^{e}"),
    }
}

/// Scalar text when the denominator is `1`, otherwise `(num)/(den)` with
/// both sides in the scalar grammar.
pub fn format_rational(x: &PiRational) -> String {
    let (num, den) = x.as_fraction();
    if den.is_one() {
        format_scalar(&num)
    } else {
        let den_scalar = PiScalar::from_parts(poly_to_laurent(&den), Default::default());
        format!("({})/({})", format_scalar(&num), format_scalar(&den_scalar))
    }
}

fn poly_to_laurent(p: &IntPoly) -> super::laurent::LaurentPoly {
    let mut out = super::laurent::LaurentPoly::zero();
    for (i, c) in p.coeffs().iter().enumerate() {
        out.add_term(i as i64, c);
    }
    out
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { text, pos: 0 }
    }

    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn eat(&mut self, token: &str) -> bool {
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn parse_int(&mut self) -> Result<BigInt, Error> {
        let start = self.pos;
        let mut len = 0;
        let bytes = self.rest().as_bytes();
        if bytes.first() == Some(&b'-') {
            len += 1;
        }
        while len < bytes.len() && bytes[len].is_ascii_digit() {
            len += 1;
        }
        if len == 0 || (len == 1 && bytes[0] == b'-') {
            return Err(Error::parse(start, "expected an integer"));
        }
        self.pos += len;
        self.text[start..start + len]
            .parse::<BigInt>()
            .map_err(|e| Error::parse(start, format!("bad integer: {e}")))
    }
}

pub fn parse_scalar(text: &str) -> Result<PiScalar, Error> {
    let mut cur = Cursor::new(text.trim());
    let out = parse_scalar_at(&mut cur)?;
    if !cur.rest().is_empty() {
        return Err(Error::parse(cur.pos, format!("unexpected trailing input `{}`", cur.rest())));
    }
    Ok(out)
}

fn parse_scalar_at(cur: &mut Cursor) -> Result<PiScalar, Error> {
    if cur.rest() == "0" {
        cur.pos += 1;
        return Ok(PiScalar::zero());
    }
    let mut out = PiScalar::zero();
    loop {
        let (e, odd, c) = parse_term(cur)?;
        if odd {
            out.odd.add_term(e, &c);
        } else {
            out.even.add_term(e, &c);
        }
        if !cur.eat(" + ") {
            break;
        }
    }
    Ok(out)
}

fn parse_term(cur: &mut Cursor) -> Result<(i64, bool, BigInt), Error> {
    let start = cur.pos;
    let mut coeff = BigInt::one();
    let mut have_coeff = false;
    match cur.peek() {
        Some(ch) if ch.is_ascii_digit() || ch == '-' => {
            coeff = cur.parse_int()?;
            have_coeff = true;
            if !cur.eat("*") {
                // bare integer term
                return Ok((0, false, coeff));
            }
        }
        _ => {}
    }
    let odd = if cur.eat("p") {
        // "p" alone, or "p*q..."
        if !cur.eat("*") {
            return Ok((0, true, coeff));
        }
        true
    } else {
        false
    };
    if !cur.eat("q") {
        return Err(Error::parse(
            cur.pos,
            if have_coeff || odd { "expected `q` factor" } else { "expected a term" },
        ));
    }
    let e = if cur.eat("^") {
        let e = cur.parse_int()?;
        i64::try_from(e).map_err(|_| Error::parse(start, "exponent out of range"))?
    } else {
        1
    };
    Ok((e, odd, coeff))
}

/// Parse `(num)/(den)` or a plain scalar into the fraction ring.
pub fn parse_rational(text: &str) -> Result<PiRational, Error> {
    let t = text.trim();
    if let Some(rest) = t.strip_prefix('(') {
        if let Some(idx) = find_matching(rest) {
            let num_text = &rest[..idx];
            let tail = rest[idx + 1..].trim_start();
            if let Some(den_part) = tail.strip_prefix('/') {
                let den_part = den_part.trim_start();
                let inner = den_part
                    .strip_prefix('(')
                    .and_then(|s| s.strip_suffix(')'))
                    .ok_or_else(|| Error::parse(0, "expected `(den)` after `/`"))?;
                let num = parse_scalar(num_text)?;
                let den = parse_scalar(inner)?;
                if den.is_zero() {
                    return Err(Error::parse(0, "zero denominator"));
                }
                let num: PiRational = num.into();
                let den: PiRational = den.into();
                return num.div(&den).map_err(|_| Error::parse(0, "denominator is a zero divisor"));
            } else if tail.is_empty() {
                // redundant wrapping parens around a scalar or a fraction
                return parse_rational(num_text);
            }
        }
        Err(Error::parse(0, "unbalanced parentheses in scalar"))
    } else {
        Ok(parse_scalar(t)?.into())
    }
}

fn find_matching(s: &str) -> Option<usize> {
    let mut depth = 1usize;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    return Some(i);
                }
            }
            _ => {}
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::super::scalar::qint;
    use super::super::Sign;
    use super::*;

    #[test]
    fn canonical_examples() {
        assert_eq!(format_scalar(&PiScalar::zero()), "0");
        assert_eq!(format_scalar(&qint(2)), "p*q + q^-1");
        assert_eq!(format_scalar(&PiScalar::pi()), "p");
        assert_eq!(format_scalar(&PiScalar::q_pow(1).neg()), "-1*q");
        assert_eq!(format_scalar(&PiScalar::from_int(3)), "3");
        assert_eq!(format_scalar(&qint(3)), "q^2 + p + q^-2");
    }

    #[test]
    fn parse_grammar_cases() {
        let x = parse_scalar("q^-1 + -1*p*q").unwrap();
        assert_eq!(x.even, super::super::laurent::LaurentPoly::q_pow(-1));
        assert_eq!(x.odd, super::super::laurent::LaurentPoly::q_pow(1).neg());
        assert!(parse_scalar("0").unwrap().is_zero());
        assert_eq!(parse_scalar("p*q + q^-1").unwrap(), qint(2));
        assert_eq!(parse_scalar("5*p").unwrap(), PiScalar::pi().mul(&PiScalar::from_int(5)));
        assert_eq!(parse_scalar("-2").unwrap(), PiScalar::from_int(-2));
    }

    #[test]
    fn parse_errors_carry_positions() {
        match parse_scalar("q^") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse_scalar("q + junk").is_err());
    }

    #[test]
    fn roundtrips() {
        for n in -6..=6 {
            let x = qint(n);
            assert_eq!(parse_scalar(&format_scalar(&x)).unwrap(), x);
        }
        let y = PiScalar::q_pow(-2).add(&PiScalar::pi().mul(&PiScalar::q_pow(-1)));
        assert_eq!(format_scalar(&y), "p*q^-1 + q^-2");
        assert_eq!(parse_scalar("p*q^-1 + q^-2").unwrap(), y);
    }

    #[test]
    fn rational_rendering() {
        let x: PiRational = qint(2).into();
        assert_eq!(format_rational(&x), "p*q + q^-1");
        let inv = x.invert().unwrap();
        let text = format_rational(&inv);
        assert_eq!(parse_rational(&text).unwrap(), inv);
        let _ = Sign::Plus;
    }

    #[test]
    fn rational_roundtrip_with_denominators() {
        let a: PiRational = qint(3).into();
        let b: PiRational = super::super::scalar::pq_minus_qinv().into();
        let x = a.div(&b).unwrap().add(&PiRational::pi());
        assert_eq!(parse_rational(&format_rational(&x)).unwrap(), x);
    }
}
