//! Graph inputs: single graphs for `analyze`, corpora for `verify`.

use std::fs;
use std::io::BufRead;
use std::path::Path;

use sqsum_core::graph::{
    encode_graph6, enumerate_all_labeled_graphs, parse_edge_list, parse_graph6, MAX_ENUMERATION_VERTICES,
};
use sqsum_core::Graph;

use crate::CliError;

/// A graph with its canonical graph6 encoding.
#[derive(Debug, Clone)]
pub struct Entry {
    pub graph6: String,
    pub graph: Graph,
}

impl Entry {
    pub fn new(graph: Graph) -> Result<Self, CliError> {
        let graph6 = encode_graph6(&graph).map_err(|e| CliError::Operational(e.to_string()))?;
        Ok(Entry { graph6, graph })
    }
}

/// Every labeled graph on `n` vertices for a name `allN`.
pub fn builtin(name: &str) -> Option<Result<Vec<Entry>, CliError>> {
    let n: usize = name.strip_prefix("all")?.parse().ok()?;
    if n == 0 || n > MAX_ENUMERATION_VERTICES {
        return None;
    }
    let graphs = enumerate_all_labeled_graphs(n).expect("n within enumeration limit");
    Some(graphs.map(Entry::new).collect())
}

/// One graph6 string per non-blank line.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Entry>, CliError> {
    text.lines()
        .enumerate()
        .filter(|(_, line)| !line.trim().is_empty())
        .map(|(i, line)| {
            let g = parse_graph6(line.trim()).map_err(|e| CliError::Operational(format!("line {}: {e}", i + 1)))?;
            Entry::new(g)
        })
        .collect()
}

/// Loads a built-in corpus name, `-` for standard input, or a graph6 file.
pub fn load_corpus(source: &str, stdin: &mut dyn BufRead) -> Result<Vec<Entry>, CliError> {
    if let Some(entries) = builtin(source) {
        return entries;
    }
    let text = if source == "-" {
        let mut text = String::new();
        stdin
            .read_to_string(&mut text)
            .map_err(|e| CliError::Operational(format!("reading standard input: {e}")))?;
        text
    } else {
        fs::read_to_string(source).map_err(|e| CliError::Operational(format!("reading {source}: {e}")))?
    };
    parse_graph6_lines(&text)
}

/// Edge-list text starts with a `n m` header once comments are stripped.
fn looks_like_edge_list(text: &str) -> bool {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty());
    first.is_some_and(|l| {
        let fields: Vec<&str> = l.split_whitespace().collect();
        fields.len() == 2 && fields.iter().all(|f| f.parse::<usize>().is_ok())
    })
}

fn parse_single(text: &str, origin: &str) -> Result<Graph, CliError> {
    let usage = |e: sqsum_core::GraphError| CliError::Usage(format!("{origin}: {e}"));
    if looks_like_edge_list(text) {
        return parse_edge_list(text).map_err(usage);
    }
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let line = lines
        .next()
        .ok_or_else(|| CliError::Usage(format!("{origin}: no graph")))?;
    if lines.next().is_some() {
        return Err(CliError::Usage(format!("{origin}: expected a single graph")));
    }
    parse_graph6(line).map_err(usage)
}

/// A graph6 string, `-` for standard input, or a file holding one graph in
/// graph6 or edge-list form.
pub fn load_single(input: &str, stdin: &mut dyn BufRead) -> Result<Graph, CliError> {
    if input == "-" {
        let mut text = String::new();
        stdin
            .read_to_string(&mut text)
            .map_err(|e| CliError::Operational(format!("reading standard input: {e}")))?;
        return parse_single(&text, "standard input");
    }
    if Path::new(input).is_file() {
        let text = fs::read_to_string(input).map_err(|e| CliError::Operational(format!("reading {input}: {e}")))?;
        return parse_single(&text, input);
    }
    parse_graph6(input).map_err(|e| CliError::Usage(format!("{input:?} is neither a file nor valid graph6: {e}")))
}
