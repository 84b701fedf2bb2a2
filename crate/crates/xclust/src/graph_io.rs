//! Plain-text graphs: a header `n m`, then `m` lines `u v` (1-based ids).

use std::fmt::Write;

use xclust_core::reductions::Graph;

use crate::{Error, Result};

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let bad = |line: usize, msg: &str| Error::GraphFormat(format!("line {}: {msg}", line + 1));
    let pair = |line: usize, l: &str| -> Result<(usize, usize)> {
        let nums: Vec<&str> = l.split_whitespace().collect();
        if nums.len() != 2 {
            return Err(bad(line, "expected two integers"));
        }
        let parse = |s: &str| s.parse::<usize>().map_err(|_| bad(line, &format!("`{s}` is not an integer")));
        Ok((parse(nums[0])?, parse(nums[1])?))
    };
    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::GraphFormat("empty input".into()))?;
    let (n, m) = pair(hline, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines {
        if edges.len() == m {
            return Err(bad(line, &format!("more than the declared {m} edges")));
        }
        edges.push(pair(line, l)?);
    }
    if edges.len() != m {
        return Err(Error::GraphFormat(format!(
            "declared {m} edges, found {}",
            edges.len()
        )));
    }
    Ok(Graph::new(n, edges)?)
}

pub fn format_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.num_vertices(), g.num_edges());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").expect("string write");
    }
    out
}

pub fn load_graph(path: impl AsRef<std::path::Path>) -> Result<Graph> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_graph(&text)
}
