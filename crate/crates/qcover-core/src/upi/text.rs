//! Text form for algebra elements.
//!
//! A term is `(coeff) * factors` with the coefficient in the scalar grammar
//! (wrapped in parentheses, omitted when 1) and factors drawn from
//! `F{eps}^(a)`, `K{eps}^b`, `E{eps}^(c)`, `e0`, `e1`. Exponent 1 renders
//! bare (`F0`, `K1`); omitted factors mean exponent 0. Printing is always
//! in PBW order; the parser accepts factors in any order and any number of
//! repetitions, multiplying them out, so parsing doubles as normal-forming.

use super::element::{PbwElement, PbwMonomial, Sector};
use crate::pi_ring::{format_rational, parse_rational, PiRational};
use crate::Error;

pub fn format_monomial(m: &PbwMonomial) -> String {
    if m.f == 0 && m.k == 0 && m.e == 0 {
        return format!("e{}", m.sector);
    }
    let mut parts = Vec::new();
    if m.f > 0 {
        parts.push(if m.f == 1 {
            format!("F{}", m.sector)
        } else {
            format!("F{}^({})", m.sector, m.f)
        });
    }
    if m.k != 0 {
        parts.push(if m.k == 1 {
            format!("K{}", m.sector)
        } else {
            format!("K{}^{}", m.sector, m.k)
        });
    }
    if m.e > 0 {
        parts.push(if m.e == 1 {
            format!("E{}", m.sector)
        } else {
            format!("E{}^({})", m.sector, m.e)
        });
    }
    parts.join(" ")
}

pub(crate) fn format_coeff_prefix(c: &PiRational) -> String {
    if c.is_one() {
        String::new()
    } else {
        format!("({}) * ", format_rational(c))
    }
}

pub fn format_element(x: &PbwElement) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let terms: Vec<String> = x
        .terms()
        .map(|(m, c)| format!("{}{}", format_coeff_prefix(c), format_monomial(m)))
        .collect();
    terms.join(" + ")
}

/// Split a sum on top-level `" + "` (outside parentheses).
pub(crate) fn split_terms(text: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        match bytes[i] {
            b'(' => depth += 1,
            b')' => depth = depth.saturating_sub(1),
            b' ' if depth == 0 && text[i..].starts_with(" + ") => {
                out.push(&text[start..i]);
                start = i + 3;
                i += 2;
            }
            _ => {}
        }
        i += 1;
    }
    out.push(&text[start..]);
    out
}

/// Parse a term's leading `(coeff) * ` prefix, if present.
pub(crate) fn parse_coeff_prefix(term: &str) -> Result<(PiRational, &str), Error> {
    let t = term.trim_start();
    if !t.starts_with('(') {
        return Ok((PiRational::one(), t));
    }
    // The coefficient runs to the matching close paren, possibly followed by
    // `/(...)`; find the end of the whole rational then expect " * ".
    let mut depth = 0usize;
    let mut end = None;
    for (i, ch) in t.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    // a following "/(" continues the rational
                    if !t[i + 1..].trim_start().starts_with("/") {
                        end = Some(i + 1);
                        break;
                    }
                }
            }
            _ => {}
        }
    }
    let end = end.ok_or_else(|| Error::parse(0, "unbalanced parentheses in coefficient"))?;
    let coeff = parse_rational(&t[..end])?;
    let rest = t[end..]
        .strip_prefix(" * ")
        .ok_or_else(|| Error::parse(end, "expected ` * ` after coefficient"))?;
    Ok((coeff, rest))
}

pub fn parse_element(text: &str) -> Result<PbwElement, Error> {
    let t = text.trim();
    if t == "0" {
        return Ok(PbwElement::zero());
    }
    let mut out = PbwElement::zero();
    for term in split_terms(t) {
        let (coeff, rest) = parse_coeff_prefix(term)?;
        let mut acc = PbwElement::one();
        if rest.trim().is_empty() {
            return Err(Error::parse(0, "term has no factors (write e0 or e1 for idempotents)"));
        }
        for factor in rest.split_whitespace() {
            acc = acc.mul(&parse_factor(factor)?);
        }
        out = out.add(&acc.scale(&coeff));
    }
    Ok(out)
}

fn parse_factor(factor: &str) -> Result<PbwElement, Error> {
    let bytes = factor.as_bytes();
    if factor == "e0" {
        return Ok(PbwElement::idempotent(Sector::Zero));
    }
    if factor == "e1" {
        return Ok(PbwElement::idempotent(Sector::One));
    }
    if bytes.len() < 2 {
        return Err(Error::parse(0, format!("unrecognized factor `{factor}`")));
    }
    let kind = bytes[0];
    let sector = match bytes[1] {
        b'0' => Sector::Zero,
        b'1' => Sector::One,
        _ => return Err(Error::parse(1, format!("expected sector 0 or 1 in `{factor}`"))),
    };
    let rest = &factor[2..];
    let exponent = |rest: &str, parens: bool| -> Result<i64, Error> {
        if rest.is_empty() {
            return Ok(1);
        }
        let body = rest
            .strip_prefix('^')
            .ok_or_else(|| Error::parse(2, format!("expected `^` in `{factor}`")))?;
        let digits = if parens {
            body.strip_prefix('(')
                .and_then(|s| s.strip_suffix(')'))
                .ok_or_else(|| Error::parse(3, format!("divided power needs `^(a)` in `{factor}`")))?
        } else {
            body
        };
        digits
            .parse::<i64>()
            .map_err(|e| Error::parse(3, format!("bad exponent in `{factor}`: {e}")))
    };
    match kind {
        b'F' => {
            let a = exponent(rest, true)?;
            if a < 0 {
                return Err(Error::parse(0, "divided power exponent must be nonnegative"));
            }
            Ok(PbwElement::f_divided(sector, a))
        }
        b'E' => {
            let c = exponent(rest, true)?;
            if c < 0 {
                return Err(Error::parse(0, "divided power exponent must be nonnegative"));
            }
            Ok(PbwElement::e_divided(sector, c))
        }
        b'K' => Ok(PbwElement::generator_k(sector, exponent(rest, false)?)),
        _ => Err(Error::parse(0, format!("unrecognized factor `{factor}`"))),
    }
}
