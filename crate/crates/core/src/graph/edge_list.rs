//! Plain-text edge lists: a header line `n m`, then `m` lines `u v` with
//! 1-based vertices. Blank lines and `#` comments are ignored.

use std::fmt::Write as _;

use super::{Graph, GraphError};

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize), GraphError> {
    let mut fields = text.split_whitespace();
    let mut next = |what: &str| -> Result<usize, GraphError> {
        let field = fields.next().ok_or_else(|| GraphError::Parse { line, msg: format!("missing {what}") })?;
        field
            .parse()
            .map_err(|_| GraphError::Parse { line, msg: format!("{what} `{field}` is not a non-negative integer") })
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if let Some(extra) = fields.next() {
        return Err(GraphError::Parse { line, msg: format!("unexpected trailing field `{extra}`") });
    }
    Ok((a, b))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (header_line, header) =
        lines.next().ok_or(GraphError::Parse { line: 0, msg: "missing `n m` header".into() })?;
    let (n, m) = parse_pair(header_line, header)?;

    let mut edges = Vec::with_capacity(m);
    for (line, body) in lines {
        if edges.len() == m {
            return Err(GraphError::Parse { line, msg: format!("more than the {m} edges announced in the header") });
        }
        edges.push(parse_pair(line, body)?);
    }
    if edges.len() != m {
        return Err(GraphError::Parse {
            line: header_line,
            msg: format!("header announces {m} edges, found {}", edges.len()),
        });
    }
    Graph::new(n, &edges)
}

/// Serializes `g` with its edges sorted, 1-based.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::with_capacity(16 * (g.size() + 1));
    let _ = writeln!(out, "{} {}", g.order(), g.size());
    for (u, v) in g.edges_one_based() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    #[test]
    fn parses_with_comments_and_blanks() {
        let text = "# a path\n3 2\n\n1 2   # first\n2 3\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(g, Family::Path(3).build().unwrap());
    }

    #[test]
    fn writes_what_it_reads() {
        let g = Family::Petersen.build().unwrap();
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn count_mismatch_and_garbage() {
        assert!(parse_edge_list("3 2\n1 2\n").is_err());
        assert!(parse_edge_list("3 1\n1 2\n2 3\n").is_err());
        assert!(parse_edge_list("3 1\n1 x\n").is_err());
        assert!(parse_edge_list("3 1\n1 2 3\n").is_err());
        assert!(parse_edge_list("").is_err());
        let err = parse_edge_list("3 1\n2 2\n").unwrap_err();
        assert_eq!(err, GraphError::SelfLoop { u: 2, v: 2 });
    }
}
