//! Text formats for simple graphs: graph6 and headed edge lists.

use crate::error::{Error, Result};
use crate::graph::LabelledGraph;

const HEADER: &str = ">>graph6<<";

fn push_size(out: &mut String, n: usize) {
    let groups: &[u32] = if n <= 62 {
        out.push((n as u8 + 63) as char);
        return;
    } else if n <= 258_047 {
        out.push(126 as char);
        &[12, 6, 0]
    } else {
        out.push(126 as char);
        out.push(126 as char);
        &[30, 24, 18, 12, 6, 0]
    };
    for &shift in groups {
        out.push((((n >> shift) & 0x3f) as u8 + 63) as char);
    }
}

/// Encodes `g` in graph6.
pub fn to_graph6(g: &LabelledGraph) -> String {
    let mut out = String::new();
    push_size(&mut out, g.n());
    let mut chunk = 0u8;
    let mut filled = 0;
    for bit in g.pair_bits() {
        chunk = chunk << 1 | bit as u8;
        filled += 1;
        if filled == 6 {
            out.push((chunk + 63) as char);
            chunk = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        out.push(((chunk << (6 - filled)) + 63) as char);
    }
    out
}

pub fn from_graph6(s: &str) -> Result<LabelledGraph> {
    let s = s.trim();
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Parse(format!(
            "graph6: byte {b:#04x} outside the printable range 63..=126"
        )));
    }
    let (n, rest) = match bytes {
        [] => return Err(Error::Parse("graph6: empty input".into())),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(Error::Parse("graph6: truncated size field".into()));
            }
            let n = rest[..6]
                .iter()
                .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
            (n, &rest[6..])
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::Parse("graph6: truncated size field".into()));
            }
            let n = rest[..3]
                .iter()
                .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
            (n, &rest[3..])
        }
        [b, rest @ ..] => ((b - 63) as usize, rest),
    };
    let pairs = n * n.saturating_sub(1) / 2;
    let expected = pairs.div_ceil(6);
    if rest.len() != expected {
        return Err(Error::Parse(format!(
            "graph6: expected {expected} data bytes for n={n}, found {}",
            rest.len()
        )));
    }
    let mut g = LabelledGraph::empty(n);
    let mut bits = rest
        .iter()
        .flat_map(|&b| (0..6).rev().map(move |i| (b - 63) >> i & 1 == 1));
    for v in 1..n {
        for u in 0..v {
            if bits.next() == Some(true) {
                g.set_edge(u, v, true)?;
            }
        }
    }
    if bits.any(|b| b) {
        return Err(Error::Parse("graph6: nonzero padding bits".into()));
    }
    Ok(g)
}

/// Parses an edge list: a header line `n` (optionally `n m`), then one `u v`
/// pair per line. Blank lines and `#` comments are ignored.
pub fn from_edge_list(s: &str) -> Result<LabelledGraph> {
    let mut lines = s
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .enumerate()
        .filter(|(_, l)| !l.is_empty());
    let (_, header) = lines
        .next()
        .ok_or_else(|| Error::Parse("edge list: missing vertex-count header".into()))?;
    let head: Vec<usize> = parse_numbers(header, 0)?;
    let (n, m) = match head.as_slice() {
        [n] => (*n, None),
        [n, m] => (*n, Some(*m)),
        _ => {
            return Err(Error::Parse(format!(
                "edge list: header must be `n` or `n m`, got `{header}`"
            )))
        }
    };
    let mut edges = Vec::new();
    for (lineno, line) in lines {
        match parse_numbers(line, lineno)?.as_slice() {
            [u, v] => edges.push((*u, *v)),
            _ => {
                return Err(Error::Parse(format!(
                    "edge list line {}: expected `u v`, got `{line}`",
                    lineno + 1
                )))
            }
        }
    }
    if let Some(m) = m {
        if m != edges.len() {
            return Err(Error::Parse(format!(
                "edge list: header announces {m} edges, found {}",
                edges.len()
            )));
        }
    }
    LabelledGraph::from_edges(n, edges)
}

pub fn to_edge_list(g: &LabelledGraph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub(crate) fn parse_numbers(line: &str, lineno: usize) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|t| {
            t.parse::<usize>().map_err(|_| {
                Error::Parse(format!("line {}: `{t}` is not a vertex index", lineno + 1))
            })
        })
        .collect()
}
