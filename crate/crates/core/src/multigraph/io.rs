//! Text formats: edge lists, graph6, digraph lists and edge-weight files.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::digraph::Digraph;
use super::graph::{EdgeId, Multigraph};
use crate::error::{Error, Result};
use crate::Rational;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Non-blank, non-comment lines with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn two_numbers(line: usize, text: &str) -> Result<(usize, usize)> {
    let parts: Vec<&str> = text.split_whitespace().collect();
    if parts.len() != 2 {
        return Err(parse_err(line, format!("expected two integers, found {text:?}")));
    }
    let num = |s: &str| s.parse::<usize>().map_err(|_| parse_err(line, format!("not a non-negative integer: {s:?}")));
    Ok((num(parts[0])?, num(parts[1])?))
}

/// `n m` followed by `m` lines `u v` (0-based); loops as `u u`.
pub fn parse_edgelist(text: &str) -> Result<Multigraph> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    let (n, m) = two_numbers(hl, header)?;
    let mut g = Multigraph::new(n);
    for _ in 0..m {
        let (ln, l) = lines.next().ok_or_else(|| parse_err(hl, format!("expected {m} edge lines")))?;
        let (u, v) = two_numbers(ln, l)?;
        g.add_edge(u, v).map_err(|e| parse_err(ln, e.to_string()))?;
    }
    if let Some((ln, _)) = lines.next() {
        return Err(parse_err(ln, "unexpected trailing line"));
    }
    Ok(g)
}

pub fn to_edgelist(g: &Multigraph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.u, e.v));
    }
    out
}

const G6_HEADER: &str = ">>graph6<<";

/// Decodes one graph6 string.
pub fn parse_graph6(text: &str) -> Result<Multigraph> {
    let s = text.trim();
    let s = s.strip_prefix(G6_HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(parse_err(1, format!("invalid graph6 byte at offset {pos}")));
    }
    let (n, body) = match bytes {
        [126, 126, rest @ ..] if rest.len() >= 6 => (sextets(&rest[..6]), &rest[6..]),
        [126, rest @ ..] if rest.len() >= 3 => (sextets(&rest[..3]), &rest[3..]),
        [first, rest @ ..] if *first != 126 => ((*first - 63) as usize, rest),
        _ => return Err(parse_err(1, "truncated graph6 order field")),
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(parse_err(1, format!("graph6 body has {} bytes, expected {expected} for n={n}", body.len())));
    }
    let mut g = Multigraph::new(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

fn sextets(b: &[u8]) -> usize {
    b.iter().fold(0, |acc, &x| (acc << 6) | (x - 63) as usize)
}

/// Encodes a simple graph in graph6.
pub fn to_graph6(g: &Multigraph) -> Result<String> {
    if !g.is_simple() {
        return Err(Error::Precondition("graph6 encodes simple graphs only".into()));
    }
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + 63));
    }
    let mut adj = vec![vec![false; n]; n];
    for e in g.edges() {
        adj[e.u][e.v] = true;
        adj[e.v][e.u] = true;
    }
    let mut bits = Vec::with_capacity(n * n / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(adj[i][j]);
        }
    }
    for chunk in bits.chunks(6) {
        let mut v = 0u8;
        for (k, &b) in chunk.iter().enumerate() {
            if b {
                v |= 1 << (5 - k);
            }
        }
        out.push(v + 63);
    }
    Ok(String::from_utf8(out).expect("printable ascii"))
}

/// One graph per non-empty line.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Multigraph>> {
    content_lines(text)
        .map(|(ln, l)| parse_graph6(l).map_err(|e| parse_err(ln, e.to_string())))
        .collect()
}

/// `p a` followed by `a` lines `tail head`, 1-based.
pub fn parse_digraph(text: &str) -> Result<Digraph> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    let (p, a) = two_numbers(hl, header)?;
    let mut arcs = Vec::with_capacity(a);
    for _ in 0..a {
        let (ln, l) = lines.next().ok_or_else(|| parse_err(hl, format!("expected {a} arc lines")))?;
        let (t, h) = two_numbers(ln, l)?;
        if t == 0 || h == 0 || t > p || h > p {
            return Err(parse_err(ln, format!("arc endpoint out of range 1..={p}")));
        }
        arcs.push((t - 1, h - 1));
    }
    Digraph::new(p, arcs)
}

pub fn to_digraph_text(d: &Digraph) -> String {
    let mut out = format!("{} {}\n", d.order(), d.arcs().len());
    for (t, h) in d.arcs() {
        out.push_str(&format!("{} {}\n", t + 1, h + 1));
    }
    out
}

/// Parses `num`, `num/den` or a decimal such as `-0.25` exactly.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        return (!d.is_zero()).then(|| Rational::new(n, d));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let neg = int.starts_with('-');
        let digits = format!("{}{}", int.trim_start_matches(['-', '+']), frac);
        let num: BigInt = digits.parse().ok()?;
        let den = BigInt::from(10).pow(frac.len() as u32);
        let r = Rational::new(num, den);
        return Some(if neg { -r } else { r });
    }
    s.parse::<BigInt>().ok().map(Rational::from_integer)
}

/// Lines `edge-id num/den`; every edge of `g` must receive exactly one weight.
pub fn parse_weights(text: &str, g: &Multigraph) -> Result<BTreeMap<EdgeId, Rational>> {
    let mut out = BTreeMap::new();
    for (ln, l) in content_lines(text) {
        let parts: Vec<&str> = l.split_whitespace().collect();
        if parts.len() != 2 {
            return Err(parse_err(ln, "expected `edge-id weight`"));
        }
        let id: u32 = parts[0].parse().map_err(|_| parse_err(ln, "bad edge id"))?;
        let id = EdgeId(id);
        g.edge(id).map_err(|e| parse_err(ln, e.to_string()))?;
        let w = parse_rational(parts[1]).ok_or_else(|| parse_err(ln, format!("bad rational {:?}", parts[1])))?;
        if out.insert(id, w).is_some() {
            return Err(parse_err(ln, format!("duplicate weight for edge {}", id.0)));
        }
    }
    if let Some(missing) = g.edges().iter().find(|e| !out.contains_key(&e.id)) {
        return Err(parse_err(0, format!("no weight for edge {}", missing.id.0)));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::generators::{complete, cycle};
    use crate::scalar::rational;

    #[test]
    fn edgelist_examples() {
        let k2 = parse_edgelist("2 1\n0 1").unwrap();
        assert_eq!(k2.edge_multiset(), vec![(0, 1)]);
        let looped = parse_edgelist("3 1\n0 0\n").unwrap();
        assert_eq!((looped.order(), looped.loop_count()), (3, 1));
        let err = parse_edgelist("3 2\n0 1\n0 x\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
        assert!(parse_edgelist("2 1\n0 5").is_err());
    }

    #[test]
    fn graph6_k4() {
        let g = parse_graph6("C~").unwrap();
        assert_eq!((g.order(), g.size()), (4, 6));
        assert_eq!(to_graph6(&complete(4)).unwrap(), "C~");
        assert!(parse_graph6("C~~").is_err());
        assert!(parse_graph6("C").is_err());
    }

    #[test]
    fn graph6_round_trip_large_order() {
        let g = cycle(70);
        let s = to_graph6(&g).unwrap();
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap().edge_multiset(), g.edge_multiset());
    }

    #[test]
    fn digraph_one_based() {
        let d = parse_digraph("3 2\n1 2\n3 2\n").unwrap();
        assert!(d.has_arc(0, 1) && d.has_arc(2, 1));
        assert!(parse_digraph("2 1\n0 1").is_err());
        assert_eq!(parse_digraph(&to_digraph_text(&d)).unwrap(), d);
    }

    #[test]
    fn weights_and_rationals() {
        let g = complete(2);
        let w = parse_weights("0 -1/2\n", &g).unwrap();
        assert_eq!(w[&EdgeId(0)], rational(-1, 2));
        assert!(parse_weights("", &g).is_err());
        assert!(parse_weights("4 1", &g).is_err());
        assert_eq!(parse_rational("-0.25"), Some(rational(-1, 4)));
        assert_eq!(parse_rational("3"), Some(rational(3, 1)));
        assert_eq!(parse_rational("1/0"), None);
    }
}
