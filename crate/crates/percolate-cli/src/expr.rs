//! Builder-expression grammar for naming graphs on the command line:
//! builders with integer arguments, the infix product operator `x`,
//! `file:PATH` references to edge-list files, and parentheses.
//!
//! Examples: `path 7 x path 5`, `cycle 6`, `biclique 3 3 x complete 2`,
//! `file:g.el`.

use std::fs;

use percolate::families;
use percolate::graph::Graph;
use percolate::io::parse_edge_list;
use percolate::product::direct_product;

/// Parse failure with the byte offset of the offending token.
#[derive(Debug)]
pub struct ExprError {
    pub message: String,
    pub offset: usize,
}

impl ExprError {
    fn new(message: impl Into<String>, offset: usize) -> ExprError {
        ExprError { message: message.into(), offset }
    }

    /// Two-line caret diagnostic pointing into `input`.
    pub fn render(&self, input: &str) -> String {
        let col = input[..self.offset.min(input.len())].chars().count();
        format!("error: {}\n  {}\n  {}^", self.message, input, " ".repeat(col))
    }
}

#[derive(Debug, Clone)]
struct Token<'a> {
    text: &'a str,
    offset: usize,
}

fn tokenize(input: &str) -> Vec<Token<'_>> {
    let mut tokens = Vec::new();
    let bytes = input.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_whitespace() {
            i += 1;
        } else if c == '(' || c == ')' {
            tokens.push(Token { text: &input[i..i + 1], offset: i });
            i += 1;
        } else {
            let start = i;
            while i < bytes.len() {
                let c = bytes[i] as char;
                if c.is_whitespace() || c == '(' || c == ')' {
                    break;
                }
                i += 1;
            }
            tokens.push(Token { text: &input[start..i], offset: start });
        }
    }
    tokens
}

struct Parser<'a> {
    tokens: Vec<Token<'a>>,
    pos: usize,
    input_len: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token<'a>> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token<'a>> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn end_offset(&self) -> usize {
        self.input_len
    }

    fn expect_int(&mut self, what: &str) -> Result<usize, ExprError> {
        match self.next() {
            Some(t) => t
                .text
                .parse()
                .map_err(|_| ExprError::new(format!("expected integer {what}, got `{}`", t.text), t.offset)),
            None => Err(ExprError::new(format!("expected integer {what}"), self.end_offset())),
        }
    }

    fn parse_expr(&mut self) -> Result<Graph, ExprError> {
        let mut g = self.parse_term()?;
        while let Some(t) = self.peek() {
            if t.text.eq_ignore_ascii_case("x") {
                let op = self.next().expect("peeked");
                let rhs = self.parse_term()?;
                g = direct_product(&g, &rhs)
                    .map_err(|e| ExprError::new(e.to_string(), op.offset))?;
            } else {
                break;
            }
        }
        Ok(g)
    }

    fn parse_term(&mut self) -> Result<Graph, ExprError> {
        let Some(t) = self.next() else {
            return Err(ExprError::new("expected a graph expression", self.end_offset()));
        };
        if t.text == "(" {
            let g = self.parse_expr()?;
            match self.next() {
                Some(close) if close.text == ")" => Ok(g),
                Some(other) => Err(ExprError::new("expected `)`", other.offset)),
                None => Err(ExprError::new("expected `)`", self.end_offset())),
            }
        } else if let Some(path) = t.text.strip_prefix("file:") {
            let text = fs::read_to_string(path)
                .map_err(|e| ExprError::new(format!("cannot read {path:?}: {e}"), t.offset))?;
            parse_edge_list(&text).map_err(|e| ExprError::new(e.to_string(), t.offset))
        } else {
            self.parse_builder(t)
        }
    }

    fn parse_builder(&mut self, t: Token<'a>) -> Result<Graph, ExprError> {
        let build = |r: Result<Graph, percolate::GraphError>| {
            r.map_err(|e| ExprError::new(e.to_string(), t.offset))
        };
        match t.text.to_ascii_lowercase().as_str() {
            "path" => {
                let n = self.expect_int("after `path`")?;
                build(families::path(n))
            }
            "cycle" => {
                let n = self.expect_int("after `cycle`")?;
                build(families::cycle(n))
            }
            "complete" | "clique" => {
                let n = self.expect_int("after `complete`")?;
                build(families::complete(n))
            }
            "biclique" | "bipartite" => {
                let a = self.expect_int("after `biclique`")?;
                let b = self.expect_int("(second part size)")?;
                build(families::complete_bipartite(a, b))
            }
            "cube" | "hypercube" => {
                let d = self.expect_int("after `cube`")?;
                build(families::hypercube(d))
            }
            "star" => {
                let n = self.expect_int("after `star`")?;
                build(families::star(n))
            }
            "starplus" => {
                let n = self.expect_int("after `starplus`")?;
                build(families::star_plus_edge(n))
            }
            "bfamily" => {
                let m = self.expect_int("after `bfamily`")?;
                build(families::b_family(m))
            }
            "grid" => {
                let n = self.expect_int("after `grid`")?;
                let m = self.expect_int("(second grid side)")?;
                let pn = build(families::path(n))?;
                let pm = build(families::path(m))?;
                direct_product(&pn, &pm).map_err(|e| ExprError::new(e.to_string(), t.offset))
            }
            other => Err(ExprError::new(
                format!("unknown builder `{other}` (expected path, cycle, complete, biclique, cube, star, starplus, bfamily, grid, or file:PATH)"),
                t.offset,
            )),
        }
    }
}

/// Parses a graph expression.
pub fn parse_graph_expr(input: &str) -> Result<Graph, ExprError> {
    let tokens = tokenize(input);
    let mut parser = Parser { tokens, pos: 0, input_len: input.len() };
    let g = parser.parse_expr()?;
    if let Some(t) = parser.peek() {
        return Err(ExprError::new(format!("unexpected trailing input `{}`", t.text), t.offset));
    }
    Ok(g)
}
