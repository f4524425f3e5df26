//! Text formats for Cayley tables and transformation generators.
//!
//! Cayley file: `n <order>`, an optional `e <identity>`, then `order` rows of
//! space-separated 0-based indices. Transformation file: `d <degree>` then
//! one generator per line. Blank lines and `#` comments are ignored.

use super::{FiniteSemigroup, Transformation};
use crate::error::{Budget, Error, Result};
use std::fmt::Write;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("");
        let toks: Vec<&str> = l.split_whitespace().collect();
        (!toks.is_empty()).then_some((i + 1, toks))
    })
}

fn number<T: std::str::FromStr>(line: usize, tok: &str) -> Result<T> {
    tok.parse().map_err(|_| Error::parse(line, format!("expected an integer, found {tok:?}")))
}

fn header(line: usize, toks: &[&str], key: &str) -> Result<usize> {
    match toks {
        [k, v] if *k == key => number(line, v),
        _ => Err(Error::parse(line, format!("expected \"{key} <integer>\""))),
    }
}

pub fn parse_cayley(text: &str) -> Result<FiniteSemigroup> {
    let mut lines = content_lines(text).peekable();
    let (l, toks) = lines.next().ok_or_else(|| Error::parse(1, "empty file"))?;
    let order = header(l, &toks, "n")?;
    if order == 0 {
        return Err(Error::parse(l, "order must be positive"));
    }
    let mut identity = None;
    if let Some((l, toks)) = lines.peek() {
        if toks[0] == "e" {
            identity = Some(header(*l, toks, "e")? as i64);
            lines.next();
        }
    }
    let mut rows = Vec::with_capacity(order);
    for (l, toks) in lines {
        if rows.len() == order {
            return Err(Error::parse(l, "more rows than the declared order"));
        }
        if toks.len() != order {
            return Err(Error::parse(l, format!("row has {} entries, expected {order}", toks.len())));
        }
        let row = toks.iter().map(|t| number::<i64>(l, t)).collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    if rows.len() != order {
        return Err(Error::parse(text.lines().count(), format!("expected {order} rows, found {}", rows.len())));
    }
    FiniteSemigroup::validate(&rows, identity)
}

pub fn render_cayley(s: &FiniteSemigroup) -> String {
    let mut out = format!("n {}\n", s.order());
    if let Some(e) = s.identity() {
        let _ = writeln!(out, "e {e}");
    }
    for row in s.rows() {
        let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "{}", cells.join(" "));
    }
    out
}

pub fn parse_transformations(text: &str) -> Result<Vec<Transformation>> {
    let mut lines = content_lines(text);
    let (l, toks) = lines.next().ok_or_else(|| Error::parse(1, "empty file"))?;
    let degree = header(l, &toks, "d")?;
    let mut gens = Vec::new();
    for (l, toks) in lines {
        if toks.len() != degree {
            return Err(Error::parse(l, format!("generator has {} images, expected {degree}", toks.len())));
        }
        let map = toks.iter().map(|t| number::<u32>(l, t)).collect::<Result<Vec<_>>>()?;
        gens.push(Transformation::new(map).map_err(|e| Error::parse(l, e.to_string()))?);
    }
    if gens.is_empty() {
        return Err(Error::parse(l, "no generators"));
    }
    Ok(gens)
}

/// Reads either format, deciding by the first header keyword.
pub fn parse_semigroup_file(text: &str, budget: &Budget) -> Result<FiniteSemigroup> {
    let first = content_lines(text).next().map(|(_, t)| t[0].to_string());
    match first.as_deref() {
        Some("d") => FiniteSemigroup::from_transformations(&parse_transformations(text)?, budget),
        _ => parse_cayley(text),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cayley_round_trip() {
        let b = FiniteSemigroup::brandt_b2().monoid_closure();
        let text = render_cayley(&b);
        assert!(text.starts_with("n 6\ne 5\n"));
        assert_eq!(parse_cayley(&text).unwrap(), b);
    }

    #[test]
    fn cayley_errors_carry_lines() {
        let err = parse_cayley("n 2\n0 0\n1 x\n").unwrap_err();
        assert_eq!(err, Error::parse(3, "expected an integer, found \"x\""));
        assert!(matches!(parse_cayley("n 2\n0 1\n1 2\n"), Err(Error::OutOfRangeEntry { .. })));
        assert!(matches!(parse_cayley("n 2\n0 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_cayley("x 2\n"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn comments_and_identity() {
        let s = parse_cayley("# semilattice\nn 2\ne 0\n0 1 # row 0\n1 1\n").unwrap();
        assert_eq!(s, FiniteSemigroup::semilattice2());
    }

    #[test]
    fn transformation_file() {
        let gens = parse_transformations("d 2\n0 0\n1 1\n").unwrap();
        assert_eq!(gens.len(), 2);
        let s = parse_semigroup_file("d 2\n0 0\n1 1\n", &Budget::default()).unwrap();
        assert_eq!(s.order(), 2);
        assert!(matches!(parse_transformations("d 2\n0 0 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_transformations("d 2\n0 5\n"), Err(Error::Parse { line: 2, .. })));
    }
}
