//! Complex literals: `a`, `bi`, `a+bi`, `a-bi`, whitespace ignored.

use num_complex::Complex64;

use crate::error::{Error, Result};

fn number(text: &str, literal: &str) -> Result<f64> {
    let x: f64 = text
        .parse()
        .map_err(|_| Error::InvalidArgument(format!("bad complex literal '{literal}'")))?;
    if !x.is_finite() {
        return Err(Error::InvalidArgument(format!("non-finite complex literal '{literal}'")));
    }
    Ok(x)
}

/// Coefficient of `i`; a bare sign means unit magnitude.
fn imaginary(text: &str, literal: &str) -> Result<f64> {
    match text {
        "" | "+" => Ok(1.0),
        "-" => Ok(-1.0),
        _ => number(text, literal),
    }
}

pub fn parse_complex(literal: &str) -> Result<Complex64> {
    let s: String = literal.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::InvalidArgument("empty complex literal".into()));
    }
    let Some(body) = s.strip_suffix('i') else {
        return Ok(Complex64::new(number(&s, literal)?, 0.0));
    };
    let bytes = body.as_bytes();
    // Last sign that is neither leading nor part of an exponent.
    let split = (1..bytes.len())
        .rev()
        .find(|&p| matches!(bytes[p], b'+' | b'-') && !matches!(bytes[p - 1], b'e' | b'E'));
    match split {
        Some(p) => Ok(Complex64::new(number(&body[..p], literal)?, imaginary(&body[p..], literal)?)),
        None => Ok(Complex64::new(0.0, imaginary(body, literal)?)),
    }
}

/// Comma-separated complex literals.
pub fn parse_complex_list(text: &str) -> Result<Vec<Complex64>> {
    text.split(',').map(parse_complex).collect()
}
