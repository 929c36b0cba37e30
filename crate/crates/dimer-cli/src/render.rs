//! Human-oriented rendering helpers: math-style polynomial layout, rational
//! formatting, and JSON assembly.

use laurent_core::{BigInt, BigRational, LaurentPoly2};
use num_traits::{One, Signed};

/// Renders a two-variable Laurent polynomial the way it would be written by
/// hand: the pure-z terms first in ascending exponent, then the pure-w terms
/// (positive exponent first), then any mixed terms.
///
/// Examples: `2 - z - w - w^-1`, `z^-2 - 8*z^-1 + 16 - 8*z + z^2 - w - w^-1`.
pub fn pretty_poly(p: &LaurentPoly2) -> String {
    if p.is_zero() {
        return "0".to_string();
    }

    let mut z_terms = Vec::new();
    let mut w_terms = Vec::new();
    let mut mixed = Vec::new();
    for (&(ez, ew), c) in p.terms() {
        match (ez, ew) {
            (_, 0) => z_terms.push(((ez, ew), c)),
            (0, _) => w_terms.push(((ez, ew), c)),
            _ => mixed.push(((ez, ew), c)),
        }
    }
    z_terms.sort_by_key(|&((ez, _), _)| ez);
    w_terms.sort_by_key(|&((_, ew), _)| -ew);
    mixed.sort_by_key(|&(e, _)| e);

    let mut out = String::new();
    for ((ez, ew), c) in z_terms.into_iter().chain(w_terms).chain(mixed) {
        let negative = c.is_negative();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        out.push_str(&monomial_body(&c.abs(), ez, ew));
    }
    out
}

/// The unsigned body of one monomial: coefficient (dropped when it is 1 and a
/// variable is present) and `z^…`/`w^…` factors joined by `*`.
fn monomial_body(c: &BigInt, ez: i64, ew: i64) -> String {
    let mut factors = Vec::new();
    if !c.is_one() || (ez == 0 && ew == 0) {
        factors.push(c.to_string());
    }
    if ez != 0 {
        factors.push(power("z", ez));
    }
    if ew != 0 {
        factors.push(power("w", ew));
    }
    factors.join("*")
}

fn power(var: &str, e: i64) -> String {
    if e == 1 {
        var.to_string()
    } else {
        format!("{var}^{e}")
    }
}

/// Renders an exact rational: plain integer when the denominator is 1,
/// `numer/denom` otherwise.
pub fn rational_str(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Serializes a JSON value as the tool's standard machine output: pretty,
/// key-sorted (the default object representation), newline-terminated.
pub fn json_page(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON serialization cannot fail");
    s.push('\n');
    s
}

/// Embeds a polynomial into a JSON tree using its native term schema.
pub fn poly_json(p: &LaurentPoly2) -> serde_json::Value {
    serde_json::from_str(&p.to_json_string()).expect("polynomial JSON is well-formed")
}

/// CSV listing of a polynomial's terms, ascending by exponent pair.
pub fn poly_csv(p: &LaurentPoly2) -> String {
    let mut out = String::from("ez,ew,coeff\n");
    for (&(ez, ew), c) in p.terms() {
        out.push_str(&format!("{ez},{ew},{c}\n"));
    }
    out
}

/// Joins display items with `", "`.
pub fn comma_list<T: std::fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}
