//! Plain-text graph format: a header line `n m`, then `m` lines `u v` with
//! 0-based endpoints. Lines starting with `#` are comments.

use std::fmt::Write as _;

use crate::digraph::Digraph;
use crate::error::{Error, Result};

pub fn parse_graph(text: &str) -> Result<Digraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or(Error::Parse {
        line: 0,
        msg: "missing `n m` header".into(),
    })?;
    let [n, m] = parse_pair(hline, header)?;

    let mut arcs = Vec::with_capacity(m);
    for (line, l) in lines {
        if arcs.len() == m {
            return Err(Error::Parse {
                line,
                msg: format!("more than the declared {m} arcs"),
            });
        }
        let [u, v] = parse_pair(line, l)?;
        arcs.push((u, v));
    }
    if arcs.len() != m {
        return Err(Error::Parse {
            line: 0,
            msg: format!("declared {m} arcs, found {}", arcs.len()),
        });
    }
    Digraph::from_arcs(n, arcs)
}

fn parse_pair(line: usize, l: &str) -> Result<[usize; 2]> {
    let fields: Vec<&str> = l.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::Parse {
            line,
            msg: format!("expected two integers, got `{l}`"),
        });
    }
    let mut out = [0; 2];
    for (slot, f) in out.iter_mut().zip(fields) {
        *slot = f.parse().map_err(|_| Error::Parse {
            line,
            msg: format!("`{f}` is not a nonnegative integer"),
        })?;
    }
    Ok(out)
}

/// Writes the graph with arcs sorted lexicographically.
pub fn write_graph(g: &Digraph) -> String {
    let arcs = g.arcs();
    let mut s = format!("{} {}\n", g.n(), arcs.len());
    for (u, v) in arcs {
        writeln!(s, "{u} {v}").unwrap();
    }
    s
}
