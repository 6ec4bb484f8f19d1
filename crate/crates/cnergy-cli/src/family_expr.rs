//! The one-line family expression language.
//!
//! Atoms: `K<n>` complete, `Kmn:<m>,<n>` complete bipartite, `S<k>` star,
//! `P<n>` path, `C<n>` cycle. Operators: `+` disjoint union, `v` join,
//! both left-associative with equal precedence; parentheses group.
//! Example: `K4+K6`, `K2vK3`, `(K1vP3)+C5`.

use anyhow::{anyhow, bail, Result};
use cnergy::family::GraphFamily;

pub const GRAMMAR_HELP: &str = "\
family expression grammar:
  K<n>        complete graph, e.g. K4
  Kmn:<m>,<n> complete bipartite graph, e.g. Kmn:2,3
  S<k>        star with k leaves, e.g. S5
  P<n>        path on n vertices, e.g. P7
  C<n>        cycle on n vertices (n >= 3), e.g. C6
  a+b         disjoint union
  avb         join (all cross edges added)
  ( ... )     grouping; + and v are left-associative, equal precedence
examples: K4+K6   K2vK3   (P4+P4)vK1   Kmn:3,3+C5";

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Atom(GraphFamily),
    Union,
    Join,
    Open,
    Close,
}

fn lex(input: &str) -> Result<Vec<Token>> {
    let mut tokens = Vec::new();
    let bytes = input.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        match bytes[i] {
            b' ' | b'\t' => i += 1,
            b'+' => {
                tokens.push(Token::Union);
                i += 1;
            }
            b'v' => {
                tokens.push(Token::Join);
                i += 1;
            }
            b'(' => {
                tokens.push(Token::Open);
                i += 1;
            }
            b')' => {
                tokens.push(Token::Close);
                i += 1;
            }
            b'K' if input[i..].starts_with("Kmn:") => {
                i += 4;
                let m = take_number(input, &mut i)?;
                if bytes.get(i) != Some(&b',') {
                    bail!("expected ',' after the first size in Kmn:<m>,<n>");
                }
                i += 1;
                let n = take_number(input, &mut i)?;
                tokens.push(Token::Atom(GraphFamily::CompleteBipartite(m, n)));
            }
            b'K' | b'S' | b'P' | b'C' => {
                let kind = bytes[i];
                i += 1;
                let size = take_number(input, &mut i)?;
                tokens.push(Token::Atom(match kind {
                    b'K' => GraphFamily::Complete(size),
                    b'S' => GraphFamily::Star(size),
                    b'P' => GraphFamily::Path(size),
                    _ => GraphFamily::Cycle(size),
                }));
            }
            other => bail!("unexpected character {:?} at position {i}", other as char),
        }
    }
    Ok(tokens)
}

fn take_number(input: &str, i: &mut usize) -> Result<usize> {
    let start = *i;
    let bytes = input.as_bytes();
    while *i < bytes.len() && bytes[*i].is_ascii_digit() {
        *i += 1;
    }
    if *i == start {
        bail!("expected a number at position {start} in {input:?}");
    }
    Ok(input[start..*i].parse()?)
}

/// Parses a family expression into a [`GraphFamily`].
pub fn parse_family(input: &str) -> Result<GraphFamily> {
    let tokens = lex(input)?;
    let mut pos = 0;
    let family = parse_expr(&tokens, &mut pos)?;
    if pos != tokens.len() {
        bail!("unexpected trailing tokens in {input:?}");
    }
    Ok(family)
}

fn parse_expr(tokens: &[Token], pos: &mut usize) -> Result<GraphFamily> {
    let mut acc = parse_term(tokens, pos)?;
    while let Some(op) = tokens.get(*pos) {
        let is_union = match op {
            Token::Union => true,
            Token::Join => false,
            _ => break,
        };
        *pos += 1;
        let rhs = parse_term(tokens, pos)?;
        acc = if is_union {
            GraphFamily::DisjointUnion(vec![acc, rhs])
        } else {
            GraphFamily::Join(vec![acc, rhs])
        };
    }
    Ok(acc)
}

fn parse_term(tokens: &[Token], pos: &mut usize) -> Result<GraphFamily> {
    match tokens.get(*pos) {
        Some(Token::Atom(family)) => {
            *pos += 1;
            Ok(family.clone())
        }
        Some(Token::Open) => {
            *pos += 1;
            let inner = parse_expr(tokens, pos)?;
            if tokens.get(*pos) != Some(&Token::Close) {
                bail!("missing closing parenthesis");
            }
            *pos += 1;
            Ok(inner)
        }
        other => Err(anyhow!("expected a family or '(': found {other:?}")),
    }
}
