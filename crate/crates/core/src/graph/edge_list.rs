//! Plain-text edge lists: a header line `n m`, then `m` lines `u v`
//! with 0-indexed endpoints. Blank lines and `#` comments are ignored.

use super::{Graph, GraphError};

pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (header_line, header) = lines.next().ok_or(GraphError::EdgeList {
        line: 1,
        message: "missing `n m` header".into(),
    })?;
    let [n, m] = parse_pair(header_line, header)?;
    let mut g = Graph::empty(n)?;

    let mut seen = 0;
    for (line, body) in lines {
        let [u, v] = parse_pair(line, body)?;
        g.try_add_edge(u, v).map_err(|e| GraphError::EdgeList {
            line,
            message: e.to_string(),
        })?;
        seen += 1;
    }
    if seen != m {
        return Err(GraphError::EdgeList {
            line: 1,
            message: format!("header declares {m} edges, found {seen}"),
        });
    }
    Ok(g)
}

fn parse_pair(line: usize, body: &str) -> Result<[usize; 2], GraphError> {
    let err = |message: String| GraphError::EdgeList { line, message };
    let fields: Vec<&str> = body.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(err(format!("expected two integers, found {:?}", body)));
    }
    let mut out = [0; 2];
    for (slot, f) in out.iter_mut().zip(&fields) {
        *slot = f.parse().map_err(|_| err(format!("not a vertex index: {f:?}")))?;
    }
    Ok(out)
}

/// Renders `g` in the same format `parse_edge_list` reads.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
