//! Text form for modified-algebra elements and canonical basis indices.
//!
//! Monomials render as `E^(a) 1_{n} F^(b)` (storage order) with zero-power
//! factors omitted and bare idempotents as `1_{n}`; the parser also accepts
//! the opposite order `F^(a) 1_{n} E^(b)` and rewrites it. Canonical basis
//! elements are addressed as `CB(a,b,k)`.

use super::{cb_element, fe_to_ef, CbIndex, UdotElement, UdotMonomial};
use crate::pi_ring::PiRational;
use crate::upi::text::{parse_coeff_prefix, split_terms};
use crate::Error;

pub fn format_monomial(m: &UdotMonomial) -> String {
    let mut parts = Vec::new();
    if m.a > 0 {
        parts.push(if m.a == 1 { "E".to_string() } else { format!("E^({})", m.a) });
    }
    parts.push(format!("1_{{{}}}", m.n));
    if m.b > 0 {
        parts.push(if m.b == 1 { "F".to_string() } else { format!("F^({})", m.b) });
    }
    parts.join(" ")
}

pub fn format_element(x: &UdotElement) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let terms: Vec<String> = x
        .terms()
        .map(|(m, c)| format!("{}{}", crate::upi::text::format_coeff_prefix(c), format_monomial(m)))
        .collect();
    terms.join(" + ")
}

/// The natural shape of a canonical basis element: the storage monomial on
/// the `E..F` side of the overlap, the opposite order with its sign on the
/// other side.
pub fn format_cb_natural(idx: CbIndex) -> String {
    let CbIndex { a, b, k } = idx;
    if a == 0 && b == 0 {
        return format!("1_{{{k}}}");
    }
    if k <= b - a {
        format_monomial(&UdotMonomial::new(a, k - 2 * b, b))
    } else {
        let mut parts = Vec::new();
        if (a * b) % 2 == 1 {
            parts.push("(p) *".to_string());
        }
        if b > 0 {
            parts.push(if b == 1 { "F".to_string() } else { format!("F^({b})") });
        }
        parts.push(format!("1_{{{}}}", k + 2 * a));
        if a > 0 {
            parts.push(if a == 1 { "E".to_string() } else { format!("E^({a})") });
        }
        parts.join(" ")
    }
}

/// Render a canonical-basis expansion with `CB(a,b,k)` labels.
pub fn format_cb_expansion(expansion: &std::collections::BTreeMap<CbIndex, PiRational>) -> String {
    if expansion.is_empty() {
        return "0".to_string();
    }
    expansion
        .iter()
        .map(|(idx, c)| {
            format!(
                "{}CB({},{},{})",
                crate::upi::text::format_coeff_prefix(c),
                idx.a,
                idx.b,
                idx.k
            )
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

pub fn parse_element(input: &str) -> Result<UdotElement, Error> {
    let t = input.trim();
    if t == "0" {
        return Ok(UdotElement::zero());
    }
    let mut out = UdotElement::zero();
    for term in split_terms(t) {
        let (coeff, rest) = parse_coeff_prefix(term)?;
        out = out.add(&parse_monomial_word(rest.trim())?.scale(&coeff));
    }
    Ok(out)
}

/// Parse `[E^(a)] 1_{n} [F^(b)]` or `[F^(a)] 1_{n} [E^(b)]` or `CB(a,b,k)`.
fn parse_monomial_word(word: &str) -> Result<UdotElement, Error> {
    if let Some(args) = word.strip_prefix("CB(").and_then(|s| s.strip_suffix(')')) {
        let nums: Vec<&str> = args.split(',').map(|s| s.trim()).collect();
        if nums.len() != 3 {
            return Err(Error::parse(0, "CB takes three arguments: CB(a,b,k)"));
        }
        let parse = |s: &str| {
            s.parse::<i64>().map_err(|e| Error::parse(0, format!("bad CB argument `{s}`: {e}")))
        };
        let (a, b, k) = (parse(nums[0])?, parse(nums[1])?, parse(nums[2])?);
        if a < 0 || b < 0 {
            return Err(Error::parse(0, "CB indices a, b must be nonnegative"));
        }
        return Ok(cb_element(CbIndex::new(a, b, k)));
    }
    let mut pre: Option<(char, i64)> = None;
    let mut idem: Option<i64> = None;
    let mut post: Option<(char, i64)> = None;
    for factor in word.split_whitespace() {
        if let Some(body) = factor.strip_prefix("1_") {
            if idem.is_some() {
                return Err(Error::parse(0, "repeated idempotent factor"));
            }
            let digits = body
                .strip_prefix('{')
                .and_then(|s| s.strip_suffix('}'))
                .unwrap_or(body);
            idem = Some(
                digits
                    .parse::<i64>()
                    .map_err(|e| Error::parse(0, format!("bad idempotent weight `{body}`: {e}")))?,
            );
            continue;
        }
        let (kind, power) = parse_divided_factor(factor)?;
        let slot = if idem.is_none() { &mut pre } else { &mut post };
        if slot.is_some() {
            return Err(Error::parse(0, format!("repeated `{kind}` factor around one idempotent")));
        }
        *slot = Some((kind, power));
    }
    let n = idem.ok_or_else(|| Error::parse(0, "every term needs an idempotent 1_{n}"))?;
    match (pre, post) {
        (None, None) => Ok(UdotElement::idempotent(n)),
        // E^(a) 1_n is the storage monomial (a, n, 0); 1_n E^(b) = E^(b) 1_{n-2b}
        (Some(('E', a)), None) => Ok(UdotElement::monomial(UdotMonomial::new(a, n, 0))),
        (None, Some(('E', b))) => Ok(UdotElement::monomial(UdotMonomial::new(b, n - 2 * b, 0))),
        // F^(a) 1_n = 1_{n-2a} F^(a); 1_n F^(b) is the storage monomial (0, n, b)
        (Some(('F', a)), None) => Ok(UdotElement::monomial(UdotMonomial::new(0, n - 2 * a, a))),
        (None, Some(('F', b))) => Ok(UdotElement::monomial(UdotMonomial::new(0, n, b))),
        (Some(('E', a)), Some(('F', b))) => Ok(UdotElement::monomial(UdotMonomial::new(a, n, b))),
        (Some(('F', a)), Some(('E', b))) => Ok(fe_to_ef(a, n, b)),
        _ => Err(Error::parse(0, "a term has two raising or two lowering factors")),
    }
}

fn parse_divided_factor(factor: &str) -> Result<(char, i64), Error> {
    let mut chars = factor.chars();
    let kind = chars.next().ok_or_else(|| Error::parse(0, "empty factor"))?;
    if kind != 'E' && kind != 'F' {
        return Err(Error::parse(0, format!("unrecognized factor `{factor}`")));
    }
    let rest = chars.as_str();
    if rest.is_empty() {
        return Ok((kind, 1));
    }
    let digits = rest
        .strip_prefix("^(")
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| Error::parse(0, format!("divided power needs `^(a)` in `{factor}`")))?;
    let power = digits
        .parse::<i64>()
        .map_err(|e| Error::parse(0, format!("bad exponent in `{factor}`: {e}")))?;
    if power < 0 {
        return Err(Error::parse(0, "divided power exponent must be nonnegative"));
    }
    Ok((kind, power))
}
