//! Text formats: CGF (one graph per file) and Graphviz DOT export.
//!
//! CGF layout:
//!
//! ```text
//! cgf <d> <n>
//! <colour 1: black vertex matched to white 1, 2, ..., n/2>
//! ...
//! <colour d+1>
//! ```
//!
//! White vertices are `1..=n/2`, black vertices `n/2+1..=n`. Lines whose
//! first non-blank character is `#` are comments; blank lines are ignored.

use std::fmt::Write as _;

use crate::graph::{ColourfulGraph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("line {line}, token {token} (`{text}`): {message}")]
    Token {
        line: usize,
        token: usize,
        text: String,
        message: String,
    },
    #[error("unexpected end of input: {0}")]
    Eof(String),
    #[error("invalid graph: {0}")]
    Graph(#[from] GraphError),
}

fn token_err(line: usize, token: usize, text: &str, message: impl Into<String>) -> ParseError {
    ParseError::Token {
        line,
        token,
        text: text.to_string(),
        message: message.into(),
    }
}

pub fn parse_cgf(input: &str) -> Result<ColourfulGraph, ParseError> {
    let mut lines = input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines
        .next()
        .ok_or_else(|| ParseError::Eof("missing `cgf <d> <n>` header".into()))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks[0] != "cgf" {
        return Err(token_err(hline, 1, toks[0], "expected `cgf`"));
    }
    if toks.len() != 3 {
        return Err(ParseError::Line {
            line: hline,
            message: format!("header needs 3 tokens, found {}", toks.len()),
        });
    }
    let d: usize = toks[1]
        .parse()
        .ok()
        .filter(|&d| (1..crate::colours::MAX_COLOUR).contains(&d))
        .ok_or_else(|| token_err(hline, 2, toks[1], "dimension must be an integer in 1..=31"))?;
    let n: usize = toks[2]
        .parse()
        .ok()
        .filter(|&n| n >= 2 && n % 2 == 0)
        .ok_or_else(|| token_err(hline, 3, toks[2], "vertex count must be a positive even integer"))?;
    let half = n / 2;

    let mut matchings = Vec::with_capacity(d + 1);
    for colour in 1..=d + 1 {
        let (lno, line) = lines
            .next()
            .ok_or_else(|| ParseError::Eof(format!("missing matching line for colour {colour}")))?;
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != half {
            return Err(ParseError::Line {
                line: lno,
                message: format!(
                    "colour {colour}: expected {half} black vertices, found {}",
                    toks.len()
                ),
            });
        }
        let mut seen = vec![false; half];
        let mut m = Vec::with_capacity(half);
        for (ti, tok) in toks.iter().enumerate() {
            let v: usize = tok
                .parse()
                .map_err(|_| token_err(lno, ti + 1, tok, "not an integer"))?;
            if v <= half || v > n {
                return Err(token_err(
                    lno,
                    ti + 1,
                    tok,
                    format!("black vertex must lie in {}..={n}", half + 1),
                ));
            }
            let b = v - half - 1;
            if std::mem::replace(&mut seen[b], true) {
                return Err(token_err(
                    lno,
                    ti + 1,
                    tok,
                    format!("colour {colour} matches black vertex {v} twice"),
                ));
            }
            m.push(b);
        }
        matchings.push(m);
    }
    if let Some((lno, _)) = lines.next() {
        return Err(ParseError::Line {
            line: lno,
            message: "trailing content after the last matching".into(),
        });
    }
    Ok(ColourfulGraph::from_matchings(d, matchings)?)
}

pub fn to_cgf(g: &ColourfulGraph) -> String {
    let mut out = format!("cgf {} {}\n", g.d(), g.n());
    for m in g.matchings() {
        let line: Vec<String> = m.iter().map(|&b| (g.half() + b + 1).to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// Edge colours for DOT output; colour `c` uses `DOT_PALETTE[(c - 1) % 8]`.
pub const DOT_PALETTE: [&str; 8] = [
    "red", "blue", "green", "orange", "purple", "brown", "magenta", "cyan",
];

pub fn to_dot(g: &ColourfulGraph) -> String {
    let mut out = String::from("graph G {\n");
    for w in 1..=g.half() {
        let _ = writeln!(out, "  w{w} [style=filled, fillcolor=white];");
    }
    for b in 1..=g.half() {
        let _ = writeln!(out, "  b{b} [style=filled, fillcolor=black, fontcolor=white];");
    }
    for (c, w, b) in g.edges() {
        let _ = writeln!(
            out,
            "  w{} -- b{} [color={}, label=\"{c}\"];",
            w + 1,
            b - g.half() + 1,
            DOT_PALETTE[(c - 1) % DOT_PALETTE.len()]
        );
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments() {
        let g = parse_cgf("# two balls\ncgf 3 4\n3 4\n3 4\n\n3 4\n4 3\n").unwrap();
        assert_eq!(g.d(), 3);
        assert_eq!(g.matching(4), &[1, 0]);
        assert_eq!(parse_cgf(&to_cgf(&g)).unwrap(), g);
    }

    #[test]
    fn errors_cite_line_and_token() {
        let err = parse_cgf("cgf 1 4\n3 4\n3 9\n").unwrap_err();
        assert_eq!(
            err,
            ParseError::Token {
                line: 3,
                token: 2,
                text: "9".into(),
                message: "black vertex must lie in 3..=4".into()
            }
        );
        let err = parse_cgf("cgf 1 4\n3 3\n3 4\n").unwrap_err();
        assert!(matches!(err, ParseError::Token { line: 2, token: 2, .. }));
        let err = parse_cgf("cgf 1 5\n").unwrap_err();
        assert!(matches!(err, ParseError::Token { line: 1, token: 3, .. }));
        let err = parse_cgf("cgf 1 4\n3 4\n").unwrap_err();
        assert!(matches!(err, ParseError::Eof(_)));
        let err = parse_cgf("cgf 1 4\n3 x\n3 4").unwrap_err();
        assert!(err.to_string().contains("line 2, token 2"));
        let err = parse_cgf("graph 1 4\n").unwrap_err();
        assert!(matches!(err, ParseError::Token { line: 1, token: 1, .. }));
        let err = parse_cgf("cgf 1 2\n2\n2\n2\n").unwrap_err();
        assert!(matches!(err, ParseError::Line { line: 4, .. }));
    }

    #[test]
    fn dot_uses_palette_order() {
        let g = ColourfulGraph::dipole(8);
        let dot = to_dot(&g);
        assert!(dot.contains("w1 -- b1 [color=red, label=\"1\"]"));
        assert!(dot.contains("w1 -- b1 [color=cyan, label=\"8\"]"));
        assert!(dot.contains("w1 -- b1 [color=red, label=\"9\"]"));
    }
}
