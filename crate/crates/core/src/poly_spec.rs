//! Text format for curves and function elements.
//!
//! Curves are sums of monomials `c*z1^i*z2^j*z3^k`; coefficients are complex
//! literals — `2`, `-0.5`, `i`, `2i`, or a parenthesized `(a+bi)`. A function
//! element is `NUM / DEN` with both sides polynomials of equal degree; the
//! named elements `clean` and `pole` are shipped defaults. The degree of a
//! polynomial is inferred from its first term and inhomogeneous input is
//! rejected naming the offending monomial.

use num_complex::Complex64;

use crate::continuation::FunctionElement;
use crate::error::{Error, Result};
use crate::projective::HomogeneousPolynomial;

fn parse_err(s: impl Into<String>) -> Error {
    Error::Parse(s.into())
}

/// Split a string on top-level occurrences of any of `seps` (parentheses
/// protect); keeps separators attached: the first piece may have none.
fn split_top_level(s: &str, seps: &[char]) -> Vec<(char, String)> {
    let mut parts = Vec::new();
    let mut current = String::new();
    let mut depth = 0usize;
    let mut lead = '+';
    let bytes: Vec<char> = s.chars().collect();
    for (idx, &ch) in bytes.iter().enumerate() {
        match ch {
            '(' => {
                depth += 1;
                current.push(ch);
            }
            ')' => {
                depth = depth.saturating_sub(1);
                current.push(ch);
            }
            c if depth == 0 && seps.contains(&c) => {
                // Keep exponent signs inside float literals ("1e-3") intact.
                let after_e = idx > 0
                    && matches!(bytes[idx - 1], 'e' | 'E')
                    && idx + 1 < bytes.len()
                    && bytes[idx + 1].is_ascii_digit()
                    && (c == '+' || c == '-');
                if after_e {
                    current.push(ch);
                } else {
                    if !current.trim().is_empty() || !parts.is_empty() || lead != '+' {
                        parts.push((lead, current.clone()));
                    }
                    current.clear();
                    lead = c;
                }
            }
            _ => current.push(ch),
        }
    }
    parts.push((lead, current));
    parts
}

/// Complex literal: `a`, `bi`, `i`, or `(a+bi)` / `(a-bi)`.
fn parse_complex(tok: &str) -> Result<Complex64> {
    let t = tok.trim();
    if t.is_empty() {
        return Err(parse_err("empty coefficient"));
    }
    if let Some(inner) = t.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (sign, piece) in split_top_level(inner, &['+', '-']) {
            let v = parse_complex(&piece)?;
            let s = if sign == '-' { -1.0 } else { 1.0 };
            re += s * v.re;
            im += s * v.im;
        }
        return Ok(Complex64::new(re, im));
    }
    if t == "i" {
        return Ok(Complex64::new(0.0, 1.0));
    }
    if let Some(mag) = t.strip_suffix('i') {
        let v: f64 = mag
            .trim()
            .parse()
            .map_err(|_| parse_err(format!("bad imaginary literal '{t}'")))?;
        return Ok(Complex64::new(0.0, v));
    }
    let v: f64 = t
        .parse()
        .map_err(|_| parse_err(format!("bad numeric literal '{t}'")))?;
    Ok(Complex64::new(v, 0.0))
}

/// One factor of a term: a variable power or a coefficient literal.
fn parse_factor(tok: &str, coeff: &mut Complex64, exps: &mut [u32; 3]) -> Result<()> {
    let t = tok.trim();
    if let Some(rest) = t.strip_prefix('z') {
        let (var, pow) = match rest.split_once('^') {
            Some((v, p)) => (
                v,
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| parse_err(format!("bad exponent in '{t}'")))?,
            ),
            None => (rest, 1),
        };
        let axis = match var.trim() {
            "1" => 0,
            "2" => 1,
            "3" => 2,
            _ => return Err(parse_err(format!("unknown variable '{t}'; use z1, z2, z3"))),
        };
        exps[axis] += pow;
        return Ok(());
    }
    *coeff *= parse_complex(t)?;
    Ok(())
}

/// Strip balanced enclosing parentheses: `((z1 + z2))` → `z1 + z2`. Leaves
/// partial wraps like `(z1+z2)*z3` alone.
fn strip_outer_parens(s: &str) -> &str {
    let mut out = s.trim();
    loop {
        let bytes = out.as_bytes();
        if bytes.len() < 2 || bytes[0] != b'(' || bytes[bytes.len() - 1] != b')' {
            return out;
        }
        let mut depth = 0i32;
        let mut wraps = true;
        for (i, b) in bytes.iter().enumerate() {
            match b {
                b'(' => depth += 1,
                b')' => {
                    depth -= 1;
                    if depth == 0 && i != bytes.len() - 1 {
                        wraps = false;
                        break;
                    }
                }
                _ => {}
            }
        }
        if !wraps {
            return out;
        }
        out = out[1..out.len() - 1].trim();
    }
}

/// Parse a polynomial: a sum of monomial terms. The degree is inferred from
/// the first term; any later term of different degree is rejected by name.
pub fn parse_polynomial(s: &str) -> Result<HomogeneousPolynomial> {
    let s = strip_outer_parens(s);
    if s.trim().is_empty() {
        return Err(parse_err("empty polynomial"));
    }
    let mut terms: Vec<([u32; 3], Complex64)> = Vec::new();
    for (sign, term) in split_top_level(s, &['+', '-']) {
        if term.trim().is_empty() {
            return Err(parse_err(format!("dangling '{sign}' in '{s}'")));
        }
        let mut coeff = Complex64::new(if sign == '-' { -1.0 } else { 1.0 }, 0.0);
        let mut exps = [0u32; 3];
        for (op, factor) in split_top_level(&term, &['*']) {
            if op == '*' && factor.trim().is_empty() {
                return Err(parse_err(format!("dangling '*' in '{term}'")));
            }
            parse_factor(&factor, &mut coeff, &mut exps)?;
        }
        terms.push((exps, coeff));
    }
    let degree = terms[0].0.iter().sum::<u32>();
    HomogeneousPolynomial::from_terms(degree, &terms)
}

/// Parse a function element: `clean`, `pole`, or `NUM / DEN`.
pub fn parse_element(s: &str) -> Result<FunctionElement> {
    match s.trim() {
        "clean" => return Ok(FunctionElement::clean_default()),
        "pole" => return Ok(FunctionElement::pole_crossing_default()),
        _ => {}
    }
    let parts = split_top_level(s, &['/']);
    if parts.len() != 2 {
        return Err(parse_err(format!(
            "function element must be NUM/DEN (one top-level '/'), got '{s}'"
        )));
    }
    let num = parse_polynomial(&parts[0].1)?;
    let den = parse_polynomial(&parts[1].1)?;
    FunctionElement::new(num, den)
}
