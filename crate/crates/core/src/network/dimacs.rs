//! Extended DIMACS text format.
//!
//! ```text
//! c comment
//! p lflow <n> <m>
//! n <vertex> s
//! n <vertex> t
//! a <tail> <head> <capacity> <length>
//! ```
//!
//! Vertices are 1-based in files and 0-based in memory.

use std::fmt::Write as _;

use super::Network;
use crate::error::{Error, Result};

pub fn parse_network(text: &str) -> Result<Network> {
    let mut header: Option<(usize, usize)> = None;
    let mut source: Option<usize> = None;
    let mut sink: Option<usize> = None;
    let mut arcs = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let mut tokens = raw.split_whitespace();
        let Some(tag) = tokens.next() else { continue };
        let fields: Vec<&str> = tokens.collect();
        match tag {
            "c" => continue,
            "p" => {
                if header.is_some() {
                    return Err(Error::parse(line_no, "duplicate problem line"));
                }
                if fields.len() != 3 || fields[0] != "lflow" {
                    return Err(Error::parse(line_no, "expected `p lflow <n> <m>`"));
                }
                let n = parse_count(fields[1], line_no, "vertex count")?;
                let m = parse_count(fields[2], line_no, "edge count")?;
                if n == 0 {
                    return Err(Error::parse(line_no, "vertex count must be positive"));
                }
                header = Some((n, m));
            }
            "n" => {
                let (n, _) =
                    header.ok_or_else(|| Error::parse(line_no, "node line before problem line"))?;
                if fields.len() != 2 {
                    return Err(Error::parse(line_no, "expected `n <vertex> s|t`"));
                }
                let v = parse_vertex(fields[0], n, line_no)?;
                let slot = match fields[1] {
                    "s" => &mut source,
                    "t" => &mut sink,
                    other => {
                        return Err(Error::parse(
                            line_no,
                            format!("unknown node designator {other:?}"),
                        ))
                    }
                };
                if slot.is_some() {
                    return Err(Error::parse(
                        line_no,
                        format!("duplicate {} declaration", fields[1]),
                    ));
                }
                *slot = Some(v);
            }
            "a" => {
                let (n, _) =
                    header.ok_or_else(|| Error::parse(line_no, "arc line before problem line"))?;
                if fields.len() != 4 {
                    return Err(Error::parse(
                        line_no,
                        "expected `a <tail> <head> <capacity> <length>`",
                    ));
                }
                let tail = parse_vertex(fields[0], n, line_no)?;
                let head = parse_vertex(fields[1], n, line_no)?;
                if tail == head {
                    return Err(Error::parse(
                        line_no,
                        format!("self-loop at vertex {}", tail + 1),
                    ));
                }
                let capacity: f64 = fields[2]
                    .parse()
                    .map_err(|_| Error::parse(line_no, format!("bad capacity {:?}", fields[2])))?;
                if !(capacity.is_finite() && capacity > 0.0) {
                    return Err(Error::parse(
                        line_no,
                        format!("nonpositive capacity {}", fields[2]),
                    ));
                }
                let length: u64 = fields[3]
                    .parse()
                    .map_err(|_| Error::parse(line_no, format!("bad length {:?}", fields[3])))?;
                if length == 0 {
                    return Err(Error::parse(line_no, "nonpositive length 0"));
                }
                arcs.push((tail, head, capacity, length));
            }
            other => {
                return Err(Error::parse(
                    line_no,
                    format!("unknown record tag {other:?}"),
                ))
            }
        }
    }

    let last = text.lines().count().max(1);
    let (n, m) = header.ok_or_else(|| Error::parse(last, "missing problem line"))?;
    let source = source.ok_or_else(|| Error::parse(last, "missing source declaration"))?;
    let sink = sink.ok_or_else(|| Error::parse(last, "missing sink declaration"))?;
    if arcs.len() != m {
        return Err(Error::parse(
            last,
            format!(
                "problem line declares {m} arcs but {} were given",
                arcs.len()
            ),
        ));
    }
    if source == sink {
        return Err(Error::parse(last, "source and sink coincide"));
    }
    Network::new(n, source, sink, arcs)
}

fn parse_count(token: &str, line: usize, what: &str) -> Result<usize> {
    token
        .parse()
        .map_err(|_| Error::parse(line, format!("bad {what} {token:?}")))
}

fn parse_vertex(token: &str, n: usize, line: usize) -> Result<usize> {
    let v: usize = token
        .parse()
        .map_err(|_| Error::parse(line, format!("bad vertex {token:?}")))?;
    if v == 0 || v > n {
        return Err(Error::parse(
            line,
            format!("vertex {v} out of range 1..={n}"),
        ));
    }
    Ok(v - 1)
}

pub fn serialize_network(net: &Network) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "p lflow {} {}", net.vertex_count(), net.edge_count());
    let _ = writeln!(out, "n {} s", net.source() + 1);
    let _ = writeln!(out, "n {} t", net.sink() + 1);
    for e in net.edges() {
        // `{}` on f64 prints the shortest decimal that round-trips.
        let _ = writeln!(
            out,
            "a {} {} {} {}",
            e.tail + 1,
            e.head + 1,
            e.capacity,
            e.length
        );
    }
    out
}
