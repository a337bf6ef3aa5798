use log::warn;

use super::Graph;
use crate::error::{Error, Result};

/// Result of [`parse_edge_list`]: the graph plus any repeated edges that were
/// merged (reported in 0-based indices).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeList {
    pub graph: Graph,
    pub duplicates: Vec<(usize, usize)>,
}

/// Parses the plain edge-list format.
///
/// Records are separated by newlines or `;`, and `#` starts a comment. The
/// first record is either a header `n=<k> base=<0|1>` (`base` defaults to 1)
/// or a bare vertex count `k`, which implies 1-based vertices. Every later
/// record is one edge `u v`.
///
/// ```text
/// n=3 base=1
/// 1 2
/// 2 3
/// ```
pub fn parse_edge_list(text: &str) -> Result<EdgeList> {
    let mut records = text
        .lines()
        .enumerate()
        .flat_map(|(i, line)| {
            let line = line.split('#').next().unwrap_or("");
            line.split(';').map(move |r| (i + 1, r.trim()))
        })
        .filter(|(_, r)| !r.is_empty());

    let (header_line, header) = records.next().ok_or(Error::Parse {
        line: 1,
        msg: "empty input".into(),
    })?;
    let (k, base) = parse_header(header_line, header)?;

    let mut edges = Vec::new();
    let mut duplicates = Vec::new();
    for (line, record) in records {
        let bad = |msg: String| Error::Parse { line, msg };
        let mut fields = record.split_whitespace();
        let (Some(a), Some(b), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(bad(format!("expected `u v`, got {record:?}")));
        };
        let u = parse_vertex(a, base, k).map_err(bad)?;
        let v = parse_vertex(b, base, k).map_err(bad)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let e = (u.min(v), u.max(v));
        if edges.contains(&e) {
            warn!("line {line}: duplicate edge {a} {b} ignored");
            duplicates.push(e);
        } else {
            edges.push(e);
        }
    }
    let graph = Graph::from_edges(k, edges)?;
    Ok(EdgeList { graph, duplicates })
}

fn parse_header(line: usize, header: &str) -> Result<(usize, usize)> {
    let bad = |msg: String| Error::Parse { line, msg };
    if let Ok(k) = header.parse::<usize>() {
        return Ok((k, 1));
    }
    let mut k = None;
    let mut base = 1;
    for field in header.split_whitespace() {
        let (key, value) = field
            .split_once('=')
            .ok_or_else(|| bad(format!("malformed header field {field:?}")))?;
        let value: usize = value
            .parse()
            .map_err(|_| bad(format!("non-numeric header value {value:?}")))?;
        match key {
            "n" | "k" => k = Some(value),
            "base" if value <= 1 => base = value,
            "base" => return Err(bad(format!("base must be 0 or 1, got {value}"))),
            _ => return Err(bad(format!("unknown header key {key:?}"))),
        }
    }
    let k = k.ok_or_else(|| bad("header lacks n=<k>".into()))?;
    Ok((k, base))
}

fn parse_vertex(token: &str, base: usize, k: usize) -> std::result::Result<usize, String> {
    let raw: usize = token
        .parse()
        .map_err(|_| format!("invalid vertex {token:?}"))?;
    if raw < base || raw - base >= k {
        return Err(format!("vertex {raw} out of range for n={k} base={base}"));
    }
    Ok(raw - base)
}
