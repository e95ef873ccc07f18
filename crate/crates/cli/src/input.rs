//! Reading graphs from a file, an inline argument or stdin.

use std::io::Read;
use std::path::Path;

use dismis_core::io::{parse_catalog, parse_edge_list};
use dismis_core::{Error, Graph, Result};

/// Graphs named by `arg`: an existing file, otherwise inline text; `-` or
/// no argument reads stdin. Edge-list input holds one graph, graph6 input
/// one graph per line.
pub fn read_graphs(arg: Option<&str>) -> Result<Vec<Graph>> {
    let (text, source) = match arg {
        None | Some("-") => {
            let mut text = String::new();
            std::io::stdin().read_to_string(&mut text).map_err(|e| Error::Io(format!("stdin: {e}")))?;
            (text, "stdin".to_string())
        }
        Some(a) if Path::new(a).is_file() => {
            let text = std::fs::read_to_string(a).map_err(|e| Error::Io(format!("{a}: {e}")))?;
            (text, a.to_string())
        }
        Some(a) => (a.to_string(), "inline".to_string()),
    };
    let graphs = parse_text(&text)?;
    let many = graphs.len() > 1;
    Ok(graphs
        .into_iter()
        .enumerate()
        .map(|(i, g)| if many { g.with_label(format!("{source}#{}", i + 1)) } else { g.with_label(source.clone()) })
        .collect())
}

fn parse_text(text: &str) -> Result<Vec<Graph>> {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        None => Err(Error::Graph6("empty input".into())),
        Some(l) if l == "n" || l.starts_with("n ") => Ok(vec![parse_edge_list(text)?]),
        Some(_) => {
            parse_catalog(&text.lines().filter(|l| !l.trim_start().starts_with('#')).collect::<Vec<_>>().join("\n"))
        }
    }
}
