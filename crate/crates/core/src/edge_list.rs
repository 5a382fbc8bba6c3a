//! Plain-text edge lists.
//!
//! ```text
//! n 4
//! 0 1
//! 1 2
//! ```
//!
//! The first non-blank line declares the vertex count; every following
//! non-blank line is a pair of 0-based vertex indices. Lines starting with
//! `#` are comments.

use crate::error::{Error, Result};
use crate::graph::{EdgeList, Graph};

fn parse_index(token: &str, line: usize) -> Result<usize> {
    token.parse().map_err(|_| Error::Malformed {
        line,
        message: format!("expected a vertex index, found {token:?}"),
    })
}

/// Parses an edge list into a [`Graph`]. Duplicate pairs collapse.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(Error::Malformed {
        line: 1,
        message: "missing \"n <count>\" header".into(),
    })?;
    let n = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["n", count] => parse_index(count, header_line)?,
        _ => {
            return Err(Error::Malformed {
                line: header_line,
                message: format!("expected \"n <count>\", found {header:?}"),
            })
        }
    };

    let mut g = Graph::empty(n);
    for (line, text) in lines {
        let (i, j) = match text.split_whitespace().collect::<Vec<_>>()[..] {
            [a, b] => (parse_index(a, line)?, parse_index(b, line)?),
            _ => {
                return Err(Error::Malformed {
                    line,
                    message: format!("expected \"i j\", found {text:?}"),
                })
            }
        };
        g.try_add_edge(i, j).map_err(|e| match e {
            Error::IndexOutOfRange { index, n, .. } => Error::IndexOutOfRange { line, index, n },
            Error::SelfLoop { vertex, .. } => Error::SelfLoop { line, vertex },
            other => other,
        })?;
    }
    Ok(g)
}

/// Writes the canonical edge-list text for `g`.
pub fn write_edge_list(g: &Graph) -> String {
    let EdgeList { n, edges } = g.edge_list();
    let mut out = format!("n {n}\n");
    for (i, j) in edges {
        out.push_str(&format!("{i} {j}\n"));
    }
    out
}
