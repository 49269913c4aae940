//! Text format: a `torus n` header, then one hypersurface per line as `n`
//! integers and an offset `p/q`, meaning `x^a = exp(2πi p/q)`.

use num_rational::BigRational;

use super::{ToricArrangement, ToricHypersurface};
use crate::arrangement::format::{content_lines, parse_header, parse_rational};
use crate::error::{Error, Result};

pub fn parse_toric(text: &str) -> Result<ToricArrangement> {
    let mut lines = content_lines(text);
    let n = parse_header(&mut lines, "torus")?;
    let mut hs: Vec<ToricHypersurface> = Vec::new();
    let mut line_of = Vec::new();
    for (line, body) in lines {
        let toks: Vec<&str> = body.split_whitespace().collect();
        if toks.len() != n + 1 {
            return Err(Error::Parse { line, msg: format!("expected {} exponents and an offset, found {} tokens", n, toks.len()) });
        }
        let exponent = toks[..n]
            .iter()
            .map(|t| t.parse::<i64>().map_err(|_| Error::Parse { line, msg: format!("invalid integer `{t}`") }))
            .collect::<Result<Vec<i64>>>()?;
        let offset: BigRational = parse_rational(toks[n], line)?;
        let h = ToricHypersurface::new(exponent, offset).map_err(|e| Error::Parse { line, msg: e.to_string() })?;
        if let Some(i) = hs.iter().position(|g| g.canonical() == h.canonical()) {
            return Err(Error::DuplicateLine { first: line_of[i], second: line });
        }
        hs.push(h);
        line_of.push(line);
    }
    ToricArrangement::new(n, hs)
}

pub fn toric_to_text(t: &ToricArrangement) -> String {
    let mut out = format!("torus {}\n", t.dim());
    for h in t.hypersurfaces() {
        let mut toks: Vec<String> = h.exponent().iter().map(|e| e.to_string()).collect();
        toks.push(format!("{}/{}", h.offset().numer(), h.offset().denom()));
        out.push_str(&toks.join(" "));
        out.push('\n');
    }
    out
}
