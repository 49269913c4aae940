//! Text format: a `dim n` header, then one hyperplane per line as `n + 1`
//! rationals `a_1 ... a_n c` meaning `a · x = c`. `#` starts a comment.

use std::str::FromStr;

use num_rational::BigRational;

use super::{Arrangement, Hyperplane};
use crate::error::{Error, Result};

pub(crate) fn parse_rational(tok: &str, line: usize) -> Result<BigRational> {
    BigRational::from_str(tok).map_err(|_| Error::Parse { line, msg: format!("invalid rational `{tok}`") })
}

/// Non-empty lines with comments stripped, paired with 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let body = l.split('#').next().unwrap_or("").trim();
        (!body.is_empty()).then_some((i + 1, body))
    })
}

pub(crate) fn parse_header(lines: &mut dyn Iterator<Item = (usize, &str)>, keyword: &str) -> Result<usize> {
    let Some((line, header)) = lines.next() else {
        return Err(Error::Parse { line: 1, msg: format!("missing `{keyword} n` header") });
    };
    let mut toks = header.split_whitespace();
    if toks.next() != Some(keyword) {
        return Err(Error::Parse { line, msg: format!("expected `{keyword} n` header") });
    }
    let n = toks
        .next()
        .and_then(|t| t.parse::<usize>().ok())
        .ok_or_else(|| Error::Parse { line, msg: "header needs a nonnegative dimension".into() })?;
    if toks.next().is_some() {
        return Err(Error::Parse { line, msg: "trailing tokens after header".into() });
    }
    Ok(n)
}

pub fn parse_arrangement(text: &str) -> Result<Arrangement> {
    let mut lines = content_lines(text);
    let n = parse_header(&mut lines, "dim")?;
    let mut hyperplanes = Vec::new();
    let mut line_of = Vec::new();
    for (line, body) in lines {
        let vals = body.split_whitespace().map(|t| parse_rational(t, line)).collect::<Result<Vec<_>>>()?;
        if vals.len() != n + 1 {
            return Err(Error::Parse { line, msg: format!("expected {} rationals, found {}", n + 1, vals.len()) });
        }
        let mut vals = vals;
        let offset = vals.pop().unwrap();
        hyperplanes.push(Hyperplane::new(vals, offset));
        line_of.push(line);
    }
    Arrangement::new(n, hyperplanes).map_err(|e| match e {
        Error::DuplicateHyperplane { first, second } => Error::DuplicateLine { first: line_of[first], second: line_of[second] },
        Error::ZeroNormal(i) => Error::Parse { line: line_of[i], msg: "zero normal vector".into() },
        other => other,
    })
}

/// Inverse of [`parse_arrangement`], rationals in lowest terms.
pub fn to_text(a: &Arrangement) -> String {
    let mut out = format!("dim {}\n", a.dim());
    for h in a.hyperplanes() {
        let toks: Vec<String> = h.normal().iter().chain(std::iter::once(h.offset())).map(|v| v.to_string()).collect();
        out.push_str(&toks.join(" "));
        out.push('\n');
    }
    out
}
