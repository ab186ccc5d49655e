//! graph6 and DIMACS readers/writers.
//!
//! graph6 follows the de-facto format: N(n) encoding (offset 63), then the
//! upper triangle in column order x(0,1), x(0,2), x(1,2), x(0,3), ... packed
//! big-endian into 6-bit groups, each offset by 63.

use crate::{Error, Graph};

/// Encode a graph as a graph6 string (no trailing newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut bytes = Vec::new();
    if n <= 62 {
        bytes.push(63 + n as u8);
    } else if n <= 258047 {
        bytes.push(126);
        for shift in [12, 6, 0] {
            bytes.push(63 + ((n >> shift) & 0x3f) as u8);
        }
    } else {
        bytes.push(126);
        bytes.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            bytes.push(63 + ((n >> shift) & 0x3f) as u8);
        }
    }
    let mut acc: u8 = 0;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc <<= 1;
            if g.has_edge(i, j) {
                acc |= 1;
            }
            k += 1;
            if k == 6 {
                bytes.push(63 + acc);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        acc <<= 6 - k;
        bytes.push(63 + acc);
    }
    String::from_utf8(bytes).unwrap()
}

/// Decode one graph6 line. Accepts and strips the optional `>>graph6<<`
/// header.
pub fn from_graph6(line: &str) -> Result<Graph, Error> {
    let line = line.trim();
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6 {
            pos: 0,
            msg: "empty input".into(),
        });
    }
    let check = |pos: usize| -> Result<u64, Error> {
        let b = *bytes.get(pos).ok_or(Error::Graph6 {
            pos,
            msg: "unexpected end of input".into(),
        })?;
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6 {
                pos,
                msg: format!("byte {b} outside graph6 range 63..=126"),
            });
        }
        Ok((b - 63) as u64)
    };
    let (n, mut pos): (u64, usize) = if bytes[0] == 126 {
        if bytes.len() > 1 && bytes[1] == 126 {
            let mut n = 0;
            for i in 2..8 {
                n = (n << 6) | check(i)?;
            }
            (n, 8)
        } else {
            let mut n = 0;
            for i in 1..4 {
                n = (n << 6) | check(i)?;
            }
            (n, 4)
        }
    } else {
        (check(0)?, 1)
    };
    let n = n as usize;
    let nbits = n * (n.saturating_sub(1)) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() != pos + nbytes {
        return Err(Error::Graph6 {
            pos: bytes.len().min(pos + nbytes),
            msg: format!(
                "expected {} data bytes for n={}, found {}",
                nbytes,
                n,
                bytes.len() - pos
            ),
        });
    }
    let mut g = Graph::new(n);
    let mut acc: u64 = 0;
    let mut have = 0;
    let mut next_bit = {
        let mut i = 0usize;
        let mut j = 1usize;
        move || {
            let out = (i, j);
            i += 1;
            if i == j {
                i = 0;
                j += 1;
            }
            out
        }
    };
    for _ in 0..nbits {
        if have == 0 {
            acc = check(pos)?;
            pos += 1;
            have = 6;
        }
        have -= 1;
        let (i, j) = next_bit();
        if acc >> have & 1 == 1 {
            g.add_edge(i, j).unwrap();
        }
    }
    // Padding bits must be zero per the format.
    if have > 0 && acc & ((1 << have) - 1) != 0 {
        return Err(Error::Graph6 {
            pos: pos - 1,
            msg: "nonzero padding bits".into(),
        });
    }
    Ok(g)
}

/// Parse a DIMACS .col file: `c` comments, one `p edge <n> <m>` header,
/// `e <u> <v>` edge lines with 1-based endpoints.
pub fn from_dimacs(text: &str) -> Result<Graph, Error> {
    let mut g: Option<Graph> = None;
    let mut declared_edges = 0usize;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let l = raw.trim();
        if l.is_empty() || l.starts_with('c') {
            continue;
        }
        let mut it = l.split_whitespace();
        match it.next() {
            Some("p") => {
                if g.is_some() {
                    return Err(Error::Dimacs {
                        line,
                        msg: "duplicate problem line".into(),
                    });
                }
                let kind = it.next().unwrap_or("");
                if kind != "edge" && kind != "edges" && kind != "col" {
                    return Err(Error::Dimacs {
                        line,
                        msg: format!("expected 'p edge', found 'p {kind}'"),
                    });
                }
                let n: usize = parse_field(it.next(), line, "vertex count")?;
                declared_edges = parse_field(it.next(), line, "edge count")?;
                g = Some(Graph::new(n));
            }
            Some("e") => {
                let g = g.as_mut().ok_or(Error::Dimacs {
                    line,
                    msg: "edge before problem line".into(),
                })?;
                let u: usize = parse_field(it.next(), line, "edge endpoint")?;
                let v: usize = parse_field(it.next(), line, "edge endpoint")?;
                if u == 0 || v == 0 {
                    return Err(Error::Dimacs {
                        line,
                        msg: "DIMACS vertices are 1-based".into(),
                    });
                }
                g.add_edge(u - 1, v - 1).map_err(|e| Error::Dimacs {
                    line,
                    msg: e.to_string(),
                })?;
            }
            Some(other) => {
                return Err(Error::Dimacs {
                    line,
                    msg: format!("unrecognized line type '{other}'"),
                });
            }
            None => {}
        }
    }
    let g = g.ok_or(Error::Dimacs {
        line: 0,
        msg: "missing problem line".into(),
    })?;
    let _ = declared_edges; // header edge counts are advisory in the wild
    Ok(g)
}

fn parse_field<T: std::str::FromStr>(
    field: Option<&str>,
    line: usize,
    what: &str,
) -> Result<T, Error> {
    field
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| Error::Dimacs {
            line,
            msg: format!("missing or malformed {what}"),
        })
}

/// Auto-detect graph6 vs DIMACS input and parse every graph found.
/// DIMACS input yields one graph; graph6 input yields one per line.
pub fn parse_auto(text: &str) -> Result<Vec<Graph>, Error> {
    let looks_dimacs = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .is_some_and(|l| l.starts_with("c ") || l == "c" || l.starts_with("p "));
    if looks_dimacs {
        Ok(vec![from_dimacs(text)?])
    } else {
        text.lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(from_graph6)
            .collect()
    }
}

/// Adjacency-list JSON for certificates: vertex i's sorted neighbor list at
/// index i, plus labels when present.
pub fn to_adjacency_json(g: &Graph) -> serde_json::Value {
    let adj: Vec<Vec<usize>> = (0..g.n()).map(|v| g.neighbors(v).collect()).collect();
    let mut obj = serde_json::json!({
        "schema": crate::SCHEMA,
        "n": g.n(),
        "adj": adj,
    });
    let labels: Vec<String> = (0..g.n()).filter_map(|v| g.label(v).map(String::from)).collect();
    if labels.len() == g.n() {
        obj["labels"] = serde_json::json!(labels);
    }
    obj
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn known_graph6_vectors() {
        assert_eq!(to_graph6(&Graph::complete(4)), "C~");
        assert_eq!(to_graph6(&Graph::complete(3)), "Bw");
        assert_eq!(to_graph6(&Graph::cycle(5)), "Dhc");
        assert_eq!(to_graph6(&Graph::path(3)), "Bg");
        assert_eq!(to_graph6(&Graph::new(1)), "@");
    }

    #[test]
    fn graph6_round_trip() {
        for g in [
            Graph::new(0),
            Graph::new(7),
            Graph::cycle(9),
            named::complete_multipartite(&[2, 2, 2, 3, 3]),
            Graph::complete(13),
        ] {
            let s = to_graph6(&g);
            assert_eq!(from_graph6(&s).unwrap(), g, "g6 {s}");
        }
    }

    #[test]
    fn graph6_header_and_errors() {
        assert_eq!(from_graph6(">>graph6<<C~").unwrap(), Graph::complete(4));
        assert!(from_graph6("").is_err());
        assert!(from_graph6("C").is_err());
        assert!(from_graph6("C~~").is_err());
        // 0x1f is outside the printable range
        assert!(from_graph6("\u{1f}").is_err());
    }

    #[test]
    fn large_n_header() {
        let g = Graph::new(100);
        let s = to_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(from_graph6(&s).unwrap().n(), 100);
    }

    #[test]
    fn dimacs_parse() {
        let text = "c sample\np edge 4 3\ne 1 2\ne 2 3\ne 3 4\n";
        let g = from_dimacs(text).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 3);
        assert!(g.has_edge(0, 1));

        assert!(from_dimacs("e 1 2\n").is_err());
        assert!(from_dimacs("p edge 2 1\ne 0 1\n").is_err());
        assert!(from_dimacs("p edge 2 1\nq 1 2\n").is_err());
    }

    #[test]
    fn auto_detect() {
        let gs = parse_auto("C~\nBw\n").unwrap();
        assert_eq!(gs.len(), 2);
        let gs = parse_auto("c x\np edge 3 1\ne 1 3\n").unwrap();
        assert_eq!(gs.len(), 1);
        assert!(gs[0].has_edge(0, 2));
    }
}
