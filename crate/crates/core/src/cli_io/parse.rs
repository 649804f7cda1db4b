//! Text forms of monomials, ideals and primes.
//!
//! Grammar: a monomial is `1` or a `*`-separated product of factors `var` or
//! `var^k` with `k ≥ 1`; whitespace is ignored. When every ring variable is a
//! single character, juxtaposed names such as `xy^2z` are accepted too.

use crate::decomposition::MonomialPrime;
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::ring::RingSpec;
use crate::varset::VarSet;

fn parse_err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse { pos, msg: msg.into() }
}

pub fn parse_monomial(text: &str, ring: &RingSpec) -> Result<Monomial> {
    let chars: Vec<(usize, char)> = text.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
    if chars.is_empty() {
        return Err(parse_err(0, "empty monomial"));
    }
    let single_char_vars = ring.vars().iter().all(|v| v.chars().count() == 1);
    let mut exps = vec![0u32; ring.nvars()];
    let mut k = 0;
    loop {
        let (start, c) = chars[k];
        if c == '1' && chars.get(k + 1).is_none_or(|&(_, c)| c == '*') {
            k += 1;
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut end = k;
            while end < chars.len() && (chars[end].1.is_ascii_alphanumeric() || chars[end].1 == '_') {
                end += 1;
            }
            let name: String = chars[k..end].iter().map(|&(_, c)| c).collect();
            let mut factors: Vec<(usize, usize)> = Vec::new();
            if let Some(i) = ring.var_index(&name) {
                factors.push((i, start));
            } else if single_char_vars {
                for &(pos, ch) in &chars[k..end] {
                    let i = ring
                        .var_index(&ch.to_string())
                        .ok_or_else(|| parse_err(pos, format!("unknown variable {ch:?}")))?;
                    factors.push((i, pos));
                }
            } else {
                return Err(parse_err(start, format!("unknown variable {name:?}")));
            }
            k = end;
            let mut exponent = 1u32;
            if k < chars.len() && chars[k].1 == '^' {
                let caret = chars[k].0;
                k += 1;
                let digits_start = k;
                while k < chars.len() && chars[k].1.is_ascii_digit() {
                    k += 1;
                }
                let digits: String = chars[digits_start..k].iter().map(|&(_, c)| c).collect();
                exponent = match digits.parse::<u32>() {
                    Ok(e) if e >= 1 => e,
                    _ => return Err(parse_err(caret, "malformed exponent")),
                };
            }
            // `xy^2` raises only the last juxtaposed variable
            let last = factors.len() - 1;
            for (n, &(i, _)) in factors.iter().enumerate() {
                let e = if n == last { exponent } else { 1 };
                exps[i] = exps[i].checked_add(e).ok_or(Error::Overflow)?;
            }
        } else {
            return Err(parse_err(start, format!("unexpected character {c:?}")));
        }
        if k == chars.len() {
            break;
        }
        let (pos, c) = chars[k];
        if single_char_vars && c.is_ascii_alphabetic() {
            continue;
        }
        if c != '*' {
            return Err(parse_err(pos, format!("expected '*', found {c:?}")));
        }
        k += 1;
        if k == chars.len() {
            return Err(parse_err(pos, "dangling '*'"));
        }
    }
    Ok(Monomial::new(exps))
}

/// Ideal from a list of generator strings; an empty list is the zero ideal.
pub fn parse_ideal<S: AsRef<str>>(gens: &[S], ring: &RingSpec) -> Result<MonomialIdeal> {
    let gens = gens
        .iter()
        .map(|g| parse_monomial(g.as_ref(), ring))
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::new(ring.nvars(), gens)
}

/// Ideal from a comma-separated generator list such as `"x*y, x*z"`.
pub fn parse_ideal_str(text: &str, ring: &RingSpec) -> Result<MonomialIdeal> {
    if text.trim().is_empty() {
        return Ok(MonomialIdeal::zero(ring.nvars()));
    }
    let mut gens = Vec::new();
    let mut offset = 0;
    for piece in text.split(',') {
        let g = parse_monomial(piece, ring).map_err(|e| match e {
            Error::Parse { pos, msg } => Error::Parse { pos: pos + offset, msg },
            other => other,
        })?;
        gens.push(g);
        offset += piece.len() + 1;
    }
    MonomialIdeal::new(ring.nvars(), gens)
}

pub fn parse_prime<S: AsRef<str>>(names: &[S], ring: &RingSpec) -> Result<MonomialPrime> {
    let mut vars = VarSet::EMPTY;
    for name in names {
        let name = name.as_ref().trim();
        let i = ring
            .var_index(name)
            .ok_or_else(|| parse_err(0, format!("unknown variable {name:?} in prime")))?;
        vars = vars.with(i);
    }
    MonomialPrime::new(ring.nvars(), vars)
}

pub fn format_monomial(m: &Monomial, ring: &RingSpec) -> String {
    if m.is_one() {
        return "1".into();
    }
    m.exps()
        .iter()
        .zip(ring.vars())
        .filter(|(&e, _)| e > 0)
        .map(|(&e, v)| if e == 1 { v.clone() } else { format!("{v}^{e}") })
        .collect::<Vec<_>>()
        .join("*")
}

/// Sorted minimal generators; the zero ideal prints as an empty list.
pub fn format_ideal(ideal: &MonomialIdeal, ring: &RingSpec) -> Vec<String> {
    ideal.gens().iter().map(|g| format_monomial(g, ring)).collect()
}

/// Variable names of the prime in ring order; `(0)` prints as `[]`.
pub fn format_prime(p: &MonomialPrime, ring: &RingSpec) -> Vec<String> {
    p.vars().iter().map(|i| ring.vars()[i].clone()).collect()
}

pub fn format_varset(s: VarSet, ring: &RingSpec) -> Vec<String> {
    s.iter().map(|i| ring.vars()[i].clone()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    fn xyz() -> RingSpec {
        RingSpec::new(["x", "y", "z"], Field::Rational).unwrap()
    }

    #[test]
    fn parse_examples() {
        let r = xyz();
        assert_eq!(parse_monomial("x*y^2", &r).unwrap().exps(), &[1, 2, 0]);
        assert_eq!(parse_monomial("1", &r).unwrap().exps(), &[0, 0, 0]);
        assert_eq!(parse_monomial("y^2*x", &r).unwrap().exps(), &[1, 2, 0]);
        assert_eq!(parse_monomial(" x * y ^ 2 ", &r).unwrap().exps(), &[1, 2, 0]);
        assert_eq!(parse_monomial("x*x", &r).unwrap().exps(), &[2, 0, 0]);
    }

    #[test]
    fn juxtaposition_with_single_letter_names() {
        let r = xyz();
        assert_eq!(parse_monomial("xy^2z", &r).unwrap().exps(), &[1, 2, 1]);
        assert_eq!(parse_ideal_str("xy,xz", &r).unwrap(), parse_ideal(&["x*y", "x*z"], &r).unwrap());
        let long = RingSpec::new(["x1", "x2"], Field::Rational).unwrap();
        assert_eq!(parse_monomial("x1*x2^3", &long).unwrap().exps(), &[1, 3]);
        assert!(matches!(parse_monomial("x1x2", &long), Err(Error::Parse { pos: 0, .. })));
    }

    #[test]
    fn parse_errors_carry_positions() {
        let r = xyz();
        assert!(matches!(parse_monomial("", &r), Err(Error::Parse { pos: 0, .. })));
        assert!(matches!(parse_monomial("   ", &r), Err(Error::Parse { .. })));
        assert!(matches!(parse_monomial("x*w", &r), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse_monomial("x^0", &r), Err(Error::Parse { pos: 1, .. })));
        assert!(matches!(parse_monomial("x^", &r), Err(Error::Parse { pos: 1, .. })));
        assert!(matches!(parse_monomial("x^99999999999", &r), Err(Error::Parse { pos: 1, .. })));
        assert!(matches!(parse_monomial("x*", &r), Err(Error::Parse { pos: 1, .. })));
        assert!(matches!(parse_monomial("x+y", &r), Err(Error::Parse { pos: 1, .. })));
        assert!(matches!(parse_ideal_str("x,y*q", &r), Err(Error::Parse { pos: 4, .. })));
    }

    #[test]
    fn printing() {
        let r = xyz();
        assert_eq!(format_monomial(&Monomial::new(vec![1, 2, 0]), &r), "x*y^2");
        assert_eq!(format_monomial(&Monomial::one(3), &r), "1");
        let i = parse_ideal_str("xz, xy, x^2y", &r).unwrap();
        assert_eq!(format_ideal(&i, &r), vec!["x*y", "x*z"]);
        assert!(format_ideal(&MonomialIdeal::zero(3), &r).is_empty());
        let p = parse_prime(&["z", "x"], &r).unwrap();
        assert_eq!(format_prime(&p, &r), vec!["x", "z"]);
        assert!(format_prime(&MonomialPrime::zero(3), &r).is_empty());
    }
}
