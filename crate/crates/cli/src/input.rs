//! Graph and metric ingestion for the subcommands.

use std::fs;

use clap::Args;

use blowup_core::graph::{
    distance_matrix, parse_distance_matrix, parse_edge_list, parse_graph6, DistMatrix, Graph,
    MetricCheck,
};

use crate::CliError;

#[derive(Args, Debug, Clone)]
pub struct InputArgs {
    /// File holding an edge list, a graph6 string or a `dist n=<k>` matrix.
    #[arg(long, value_name = "FILE", conflicts_with_all = ["graph6", "edges"])]
    pub input: Option<String>,
    /// Inline graph6 string.
    #[arg(long, value_name = "STR", conflicts_with = "edges")]
    pub graph6: Option<String>,
    /// Inline edge list; records separated by `;`, e.g. "3; 1 2; 2 3".
    #[arg(long, value_name = "STR")]
    pub edges: Option<String>,
    /// Accept distance matrices that are only symmetric with zero diagonal.
    #[arg(long)]
    pub no_metric_check: bool,
}

/// What the user supplied: a graph, or a bare metric.
pub enum Source {
    Graph(Graph),
    Metric(DistMatrix),
}

impl Source {
    pub fn metric(&self) -> Result<DistMatrix, CliError> {
        match self {
            Source::Graph(g) => Ok(distance_matrix(g)?),
            Source::Metric(d) => Ok(d.clone()),
        }
    }

    pub fn graph(&self) -> Result<&Graph, CliError> {
        match self {
            Source::Graph(g) => Ok(g),
            Source::Metric(_) => Err(CliError::Input(
                "this command needs a graph, not a distance matrix".into(),
            )),
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Source::Graph(_) => "graph",
            Source::Metric(_) => "metric-input",
        }
    }
}

pub fn read_file(path: &str) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("cannot read {path}: {e}")))
}

fn looks_like_graph6(text: &str) -> bool {
    let t = text.trim();
    let body = t.strip_prefix(">>graph6<<").unwrap_or(t);
    !body.is_empty()
        && !body.contains(char::is_whitespace)
        && body.bytes().all(|b| (63..=126).contains(&b))
}

fn first_record(text: &str) -> &str {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .unwrap_or("")
}

pub fn load(args: &InputArgs) -> Result<Source, CliError> {
    let check = if args.no_metric_check {
        MetricCheck::Relaxed
    } else {
        MetricCheck::Full
    };
    if let Some(s) = &args.graph6 {
        return Ok(Source::Graph(parse_graph6(s.trim().as_bytes())?));
    }
    if let Some(s) = &args.edges {
        return graph_from_edges(s);
    }
    let Some(path) = &args.input else {
        return Err(CliError::Input(
            "no input: give --input, --graph6 or --edges".into(),
        ));
    };
    let text = read_file(path)?;
    if first_record(&text).starts_with("dist") {
        Ok(Source::Metric(parse_distance_matrix(&text, check)?))
    } else if looks_like_graph6(&text) {
        Ok(Source::Graph(parse_graph6(text.trim().as_bytes())?))
    } else {
        graph_from_edges(&text)
    }
}

fn graph_from_edges(text: &str) -> Result<Source, CliError> {
    let parsed = parse_edge_list(text)?;
    for (u, v) in &parsed.duplicates {
        eprintln!("note: duplicate edge {} {} ignored", u + 1, v + 1);
    }
    parsed.graph.require_connected()?;
    Ok(Source::Graph(parsed.graph))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph6_detection() {
        assert!(looks_like_graph6("Cl\n"));
        assert!(looks_like_graph6(">>graph6<<A_"));
        assert!(!looks_like_graph6("3\n1 2\n"));
        assert!(!looks_like_graph6("3; 1 2"));
    }

    #[test]
    fn first_record_skips_comments() {
        assert_eq!(first_record("# hello\n\ndist n=2\n"), "dist n=2");
    }
}
