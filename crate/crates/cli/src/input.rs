//! Reading graphs from files, standard input or inline arguments.

use std::fs;
use std::io::{self, Read};

use clap::ValueEnum;
use mostar_core::{decode_graph6_stream, parse_edge_lists, Error, Graph};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    /// Edge lists if the first record line is `n <count>`, graph6 otherwise.
    Auto,
    Graph6,
    EdgeList,
}

/// File contents, or standard input for `-`.
pub fn read_source(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        fs::read_to_string(path).map_err(|e| CliError::Io(format!("{path}: {e}")))
    }
}

fn looks_like_edge_list(text: &str) -> bool {
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .is_some_and(|l| l == "n" || l.starts_with("n ") || l.starts_with("n\t"))
}

pub fn parse_graphs(text: &str, format: InputFormat) -> Result<Vec<Graph>, CliError> {
    let edge_list = match format {
        InputFormat::Auto => looks_like_edge_list(text),
        InputFormat::Graph6 => false,
        InputFormat::EdgeList => true,
    };
    let graphs = if edge_list {
        parse_edge_lists(text)?
    } else {
        decode_graph6_stream(text)?
    };
    if graphs.is_empty() {
        return Err(Error::EmptyStream.into());
    }
    Ok(graphs)
}

/// Inline edge list `N:u-v,u-v,...`, e.g. `4:0-1,1-2,2-3`.
pub fn parse_inline_edges(spec: &str) -> Result<Graph, CliError> {
    let bad = || Error::MalformedRecord(format!("inline edge list '{spec}', expected N:u-v,u-v,..."));
    let (n, rest) = spec.split_once(':').ok_or_else(bad)?;
    let n: usize = n.trim().parse().map_err(|_| bad())?;
    let mut edges = Vec::new();
    for pair in rest.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (u, v) = pair.split_once('-').ok_or_else(bad)?;
        edges.push((u.trim().parse().map_err(|_| bad())?, v.trim().parse().map_err(|_| bad())?));
    }
    Ok(Graph::from_edges(n, edges)?)
}
