//! Text encodings: graph6 (simple graphs), digraph6 (oriented graphs) and
//! the line-based mixed-text format.
//!
//! mixed-text is `n=<count>` on the first line followed by one relation per
//! line, `a <u> <v>` for the arc `u -> v` or `e <u> <v>` for an edge. Lines are
//! LF-terminated ASCII; `#` starts a comment. The inline form used on the
//! command line replaces newlines with `;`.

use std::str::FromStr;

use super::{MixedGraph, Relation};
use crate::error::{parse_err, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Format {
    Graph6,
    Digraph6,
    MixedText,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Format> {
        match s {
            "g6" | "graph6" => Ok(Format::Graph6),
            "d6" | "digraph6" => Ok(Format::Digraph6),
            "mixed" | "mixed-text" => Ok(Format::MixedText),
            other => Err(Error::Unknown {
                what: "format",
                name: other.to_string(),
            }),
        }
    }
}

pub fn parse(text: &str, format: Format) -> Result<MixedGraph> {
    match format {
        Format::Graph6 => parse_graph6(text),
        Format::Digraph6 => parse_digraph6(text),
        Format::MixedText => parse_mixed(text),
    }
}

pub fn serialize(g: &MixedGraph, format: Format) -> Result<String> {
    match format {
        Format::Graph6 => to_graph6(g),
        Format::Digraph6 => to_digraph6(g),
        Format::MixedText => Ok(to_mixed(g)),
    }
}

const G6: &str = "graph6";
const D6: &str = "digraph6";
const MIXED: &str = "mixed-text";

fn encode_size(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

fn decode_size<'a>(bytes: &'a [u8], fmt: &'static str) -> Result<(usize, &'a [u8])> {
    let sextet = |b: u8| -> Result<usize> {
        if (63..=126).contains(&b) {
            Ok((b - 63) as usize)
        } else {
            Err(parse_err(
                fmt,
                format!("byte {b:#04x} outside the printable range"),
            ))
        }
    };
    let read = |bytes: &[u8], k: usize| -> Result<usize> {
        if bytes.len() < k {
            return Err(parse_err(fmt, "truncated size header"));
        }
        bytes[..k]
            .iter()
            .try_fold(0usize, |acc, &b| Ok(acc << 6 | sextet(b)?))
    };
    match bytes {
        [] => Err(parse_err(fmt, "empty input")),
        [126, 126, rest @ ..] => Ok((read(rest, 6)?, &rest[6..])),
        [126, rest @ ..] => Ok((read(rest, 3)?, &rest[3..])),
        [b, rest @ ..] => Ok((sextet(*b)?, rest)),
    }
}

fn encode_bits(bits: &[bool], out: &mut Vec<u8>) {
    for chunk in bits.chunks(6) {
        let mut v = 0u8;
        for (i, &b) in chunk.iter().enumerate() {
            if b {
                v |= 1 << (5 - i);
            }
        }
        out.push(v + 63);
    }
}

fn decode_bits(bytes: &[u8], count: usize, fmt: &'static str) -> Result<Vec<bool>> {
    let expected = count.div_ceil(6);
    if bytes.len() != expected {
        return Err(parse_err(
            fmt,
            format!("expected {expected} data bytes, found {}", bytes.len()),
        ));
    }
    let mut bits = Vec::with_capacity(expected * 6);
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(parse_err(
                fmt,
                format!("byte {b:#04x} outside the printable range"),
            ));
        }
        let v = b - 63;
        bits.extend((0..6).rev().map(|i| v >> i & 1 == 1));
    }
    if bits[count..].iter().any(|&b| b) {
        return Err(parse_err(fmt, "nonzero padding bits"));
    }
    bits.truncate(count);
    Ok(bits)
}

fn strip<'a>(text: &'a str, header: &str) -> &'a str {
    let t = text.trim_end_matches(['\n', '\r']);
    t.strip_prefix(header).unwrap_or(t)
}

fn parse_graph6(text: &str) -> Result<MixedGraph> {
    let body = strip(text, ">>graph6<<").as_bytes();
    let (n, rest) = decode_size(body, G6)?;
    let bits = decode_bits(rest, n * n.saturating_sub(1) / 2, G6)?;
    let mut g = MixedGraph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[k] {
                g.set(i, j, Relation::Edge);
            }
            k += 1;
        }
    }
    Ok(g)
}

fn to_graph6(g: &MixedGraph) -> Result<String> {
    g.require_simple()?;
    let mut out = Vec::new();
    encode_size(g.n(), &mut out);
    let mut bits = Vec::new();
    for j in 1..g.n() {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    encode_bits(&bits, &mut out);
    Ok(String::from_utf8(out).expect("graph6 is ASCII"))
}

fn parse_digraph6(text: &str) -> Result<MixedGraph> {
    let body = strip(text, ">>digraph6<<").as_bytes();
    let Some((b'&', body)) = body.split_first() else {
        return Err(parse_err(D6, "missing '&' prefix"));
    };
    let (n, rest) = decode_size(body, D6)?;
    let bits = decode_bits(rest, n * n, D6)?;
    let mut g = MixedGraph::empty(n);
    for u in 0..n {
        if bits[u * n + u] {
            return Err(parse_err(D6, format!("loop at vertex {u}")));
        }
        for v in u + 1..n {
            match (bits[u * n + v], bits[v * n + u]) {
                (true, true) => {
                    return Err(parse_err(
                        D6,
                        format!("both {u}->{v} and {v}->{u} present; not an oriented graph"),
                    ))
                }
                (true, false) => g.set(u, v, Relation::Out),
                (false, true) => g.set(u, v, Relation::In),
                (false, false) => {}
            }
        }
    }
    Ok(g)
}

fn to_digraph6(g: &MixedGraph) -> Result<String> {
    g.require_oriented()?;
    let n = g.n();
    let mut out = vec![b'&'];
    encode_size(n, &mut out);
    let bits: Vec<bool> = (0..n * n).map(|k| g.has_arc(k / n, k % n)).collect();
    encode_bits(&bits, &mut out);
    Ok(String::from_utf8(out).expect("digraph6 is ASCII"))
}

fn parse_vertex(tok: Option<&str>, line: usize) -> Result<usize> {
    let tok = tok.ok_or_else(|| parse_err(MIXED, format!("line {line}: missing vertex")))?;
    tok.parse()
        .map_err(|_| parse_err(MIXED, format!("line {line}: bad vertex {tok:?}")))
}

fn parse_lines<'a>(lines: impl Iterator<Item = &'a str>) -> Result<MixedGraph> {
    let mut g: Option<MixedGraph> = None;
    for (idx, raw) in lines.enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some(graph) = g.as_mut() else {
            let count = line.strip_prefix("n=").ok_or_else(|| {
                parse_err(MIXED, format!("line {line_no}: expected header n=<count>"))
            })?;
            let n = count.trim().parse().map_err(|_| {
                parse_err(MIXED, format!("line {line_no}: bad vertex count {count:?}"))
            })?;
            g = Some(MixedGraph::empty(n));
            continue;
        };
        let mut toks = line.split_whitespace();
        let rel = match toks.next() {
            Some("a") => Relation::Out,
            Some("e") => Relation::Edge,
            Some(t) => {
                return Err(parse_err(
                    MIXED,
                    format!("line {line_no}: unknown relation {t:?}"),
                ))
            }
            None => unreachable!("line is non-empty"),
        };
        let u = parse_vertex(toks.next(), line_no)?;
        let v = parse_vertex(toks.next(), line_no)?;
        if toks.next().is_some() {
            return Err(parse_err(MIXED, format!("line {line_no}: trailing tokens")));
        }
        graph
            .insert(u, v, rel)
            .map_err(|e| parse_err(MIXED, format!("line {line_no}: {e}")))?;
    }
    g.ok_or_else(|| parse_err(MIXED, "missing header n=<count>"))
}

fn parse_mixed(text: &str) -> Result<MixedGraph> {
    parse_lines(text.split('\n'))
}

/// Parses the single-line form where `;` separates records.
pub fn parse_inline(text: &str) -> Result<MixedGraph> {
    parse_lines(text.split(['\n', ';']))
}

fn records(g: &MixedGraph) -> Vec<String> {
    let mut lines = vec![format!("n={}", g.n())];
    for (u, v) in g.pairs() {
        match g.relation(u, v) {
            Relation::None => {}
            Relation::Edge => lines.push(format!("e {u} {v}")),
            Relation::Out => lines.push(format!("a {u} {v}")),
            Relation::In => lines.push(format!("a {v} {u}")),
        }
    }
    lines
}

/// Canonical mixed-text: relations in lexicographic pair order.
pub fn to_mixed(g: &MixedGraph) -> String {
    let mut s = records(g).join("\n");
    s.push('\n');
    s
}

pub fn to_inline(g: &MixedGraph) -> String {
    records(g).join(";")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate::{gen_complete, gen_cycle, gen_tournament};

    #[test]
    fn graph6_k2() {
        let g = parse("A_", Format::Graph6).unwrap();
        assert_eq!(g, MixedGraph::simple(2, &[(0, 1)]).unwrap());
        assert_eq!(serialize(&g, Format::Graph6).unwrap(), "A_");
    }

    #[test]
    fn graph6_reference_strings() {
        // Values produced by networkx.to_graph6_bytes(header=False).
        assert_eq!(to_graph6(&gen_complete(4)).unwrap(), "C~");
        assert_eq!(to_graph6(&gen_cycle(5).unwrap()).unwrap(), "Dhc");
        assert_eq!(to_graph6(&MixedGraph::empty(0)).unwrap(), "?");
        assert_eq!(
            parse(">>graph6<<C~\n", Format::Graph6).unwrap(),
            gen_complete(4)
        );
    }

    #[test]
    fn graph6_large_size_header() {
        let g = MixedGraph::empty(100);
        let s = to_graph6(&g).unwrap();
        assert!(s.starts_with("~?@c"));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn graph6_rejects_length_mismatch_and_bad_bytes() {
        assert!(parse("C~~", Format::Graph6).is_err());
        assert!(parse("C", Format::Graph6).is_err());
        assert!(parse("", Format::Graph6).is_err());
        assert!(parse("C\x01", Format::Graph6).is_err());
    }

    #[test]
    fn graph6_refuses_arcs() {
        let g = MixedGraph::oriented(2, &[(0, 1)]).unwrap();
        assert!(matches!(
            serialize(&g, Format::Graph6),
            Err(Error::KindMismatch { .. })
        ));
    }

    #[test]
    fn digraph6_round_trip_and_reference() {
        // networkx.to_graph6_bytes is graph6 only; this one follows the nauty
        // digraph6 description: "&" N(n) then the row-major adjacency matrix.
        let g = MixedGraph::oriented(2, &[(0, 1)]).unwrap();
        assert_eq!(to_digraph6(&g).unwrap(), "&AO");
        assert_eq!(parse("&AO", Format::Digraph6).unwrap(), g);
        let t = gen_tournament(7, 5).unwrap();
        assert_eq!(
            parse(&to_digraph6(&t).unwrap(), Format::Digraph6).unwrap(),
            t
        );
    }

    #[test]
    fn digraph6_rejects_symmetric_pair_and_loop() {
        // 0->1 and 1->0: bits 01 10 -> 011000 -> 'W'
        assert!(matches!(
            parse("&AW", Format::Digraph6),
            Err(Error::Parse { .. })
        ));
        // loop at 0: bits 1000 -> '_'
        assert!(parse("&A_", Format::Digraph6).is_err());
        assert!(parse("AO", Format::Digraph6).is_err());
    }

    #[test]
    fn mixed_text_parse() {
        let g = parse("n=3\na 0 1\ne 1 2\n", Format::MixedText).unwrap();
        assert_eq!(g, MixedGraph::from_parts(3, &[(0, 1)], &[(1, 2)]).unwrap());
        assert_eq!(to_mixed(&g), "n=3\na 0 1\ne 1 2\n");
        let with_comments = "# H\nn=4\n\na 0 1 # first arc\na 2 3\ne 1 3\ne 0 2\n";
        let h = parse(with_comments, Format::MixedText).unwrap();
        assert_eq!((h.arc_count(), h.edge_count()), (2, 2));
    }

    #[test]
    fn mixed_text_errors() {
        for bad in [
            "",
            "a 0 1",
            "n=x",
            "n=2\na 0",
            "n=2\na 0 2",
            "n=2\na 0 0",
            "n=2\na 0 1\ne 1 0",
            "n=2\nz 0 1",
            "n=2\ne 0 1 1",
        ] {
            assert!(parse(bad, Format::MixedText).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn inline_form() {
        let g = parse_inline("n=3;a 0 1;e 1 2").unwrap();
        assert_eq!(to_inline(&g), "n=3;a 0 1;e 1 2");
        let rev = parse_inline("n=2;a 1 0").unwrap();
        assert_eq!(to_inline(&rev), "n=2;a 1 0");
    }
}
