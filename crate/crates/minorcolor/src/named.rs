//! Constructors for the named graphs used throughout the library, each with a
//! fixed canonical vertex ordering (documented in `fixtures/named_graphs.md`
//! so test vectors stay stable).

use crate::{Error, Graph};

/// Tags for the named graphs.
///
/// `CompleteEqual(p)` removes two missing edges sharing no endpoint (the
/// default reading of "K_p minus two edges"); `CompleteEqualAdjacent(p)` is
/// the variant where the two missing edges share an endpoint. Both are
/// exposed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NamedGraph {
    /// Complement of the 8-cycle.
    C8Bar,
    /// Join of two complements of the 4-cycle.
    C4BarJoinC4Bar,
    /// Join of an independent 3-set with a 5-cycle.
    K3BarJoinC5,
    /// Join of an independent 2-set with the complement of a 6-cycle.
    K2BarJoinC6Bar,
    K233,
    K22222,
    K122222,
    K22233,
    Complete(usize),
    /// K_p minus one edge.
    CompleteMinus(usize),
    /// K_p minus two independent edges.
    CompleteEqual(usize),
    /// K_p minus two adjacent edges.
    CompleteEqualAdjacent(usize),
    /// The exceptional 10-vertex alpha=2 graph; recovered computationally,
    /// shipped as a fixture. See [`crate::structure::recover_j`].
    J,
}

/// Complete multipartite graph; part i occupies a contiguous index block, in
/// the order given.
pub fn complete_multipartite(parts: &[usize]) -> Graph {
    let n: usize = parts.iter().sum();
    let mut g = Graph::new(n);
    let mut start = 0;
    let mut blocks = Vec::new();
    for &p in parts {
        blocks.push(start..start + p);
        start += p;
    }
    for (i, bi) in blocks.iter().enumerate() {
        for bj in blocks.iter().skip(i + 1) {
            for u in bi.clone() {
                for v in bj.clone() {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
    }
    g
}

/// Build a named graph. For `J` the edge list must first have been produced
/// by [`crate::structure::recover_j`]; the shipped fixture records that run.
pub fn build(tag: NamedGraph) -> Result<Graph, Error> {
    let g = match tag {
        NamedGraph::C8Bar => Graph::cycle(8).complement(),
        NamedGraph::C4BarJoinC4Bar => {
            let c4bar = Graph::cycle(4).complement();
            c4bar.join(&c4bar)
        }
        NamedGraph::K3BarJoinC5 => Graph::new(3).join(&Graph::cycle(5)),
        NamedGraph::K2BarJoinC6Bar => Graph::new(2).join(&Graph::cycle(6).complement()),
        NamedGraph::K233 => complete_multipartite(&[2, 3, 3]),
        NamedGraph::K22222 => complete_multipartite(&[2, 2, 2, 2, 2]),
        NamedGraph::K122222 => complete_multipartite(&[1, 2, 2, 2, 2, 2]),
        NamedGraph::K22233 => complete_multipartite(&[2, 2, 2, 3, 3]),
        NamedGraph::Complete(p) => Graph::complete(p),
        NamedGraph::CompleteMinus(p) => {
            if p < 2 {
                return Err(Error::invalid("K_p minus an edge needs p >= 2"));
            }
            let mut g = Graph::complete(p);
            g.remove_edge(p - 2, p - 1).unwrap();
            g
        }
        NamedGraph::CompleteEqual(p) => {
            if p < 4 {
                return Err(Error::invalid("K_p minus two independent edges needs p >= 4"));
            }
            let mut g = Graph::complete(p);
            g.remove_edge(p - 4, p - 3).unwrap();
            g.remove_edge(p - 2, p - 1).unwrap();
            g
        }
        NamedGraph::CompleteEqualAdjacent(p) => {
            if p < 3 {
                return Err(Error::invalid("K_p minus two adjacent edges needs p >= 3"));
            }
            let mut g = Graph::complete(p);
            g.remove_edge(p - 3, p - 1).unwrap();
            g.remove_edge(p - 2, p - 1).unwrap();
            g
        }
        NamedGraph::J => crate::structure::j_graph()?,
    };
    debug_assert!(g.invariants_ok());
    Ok(g)
}

/// Parse a graph name as used by the CLI: `K7`, `K8-`, `K8=`, `K8=adj`,
/// `C8bar`, `C4bar+C4bar`, `K3bar+C5`, `K2bar+C6bar`, `J`, or a complete
/// multipartite form like `K_{2,2,2,3,3}`.
pub fn parse_name(name: &str) -> Result<NamedGraph, Error> {
    let name = name.trim();
    match name {
        "C8bar" => return Ok(NamedGraph::C8Bar),
        "C4bar+C4bar" => return Ok(NamedGraph::C4BarJoinC4Bar),
        "K3bar+C5" => return Ok(NamedGraph::K3BarJoinC5),
        "K2bar+C6bar" => return Ok(NamedGraph::K2BarJoinC6Bar),
        "K_{2,3,3}" => return Ok(NamedGraph::K233),
        "K_{2,2,2,2,2}" => return Ok(NamedGraph::K22222),
        "K_{1,2,2,2,2,2}" => return Ok(NamedGraph::K122222),
        "K_{2,2,2,3,3}" => return Ok(NamedGraph::K22233),
        "J" => return Ok(NamedGraph::J),
        _ => {}
    }
    if let Some(rest) = name.strip_prefix('K') {
        if let Some(p) = rest.strip_suffix("=adj") {
            let p: usize = p.parse().map_err(|_| bad_name(name))?;
            return Ok(NamedGraph::CompleteEqualAdjacent(p));
        }
        if let Some(p) = rest.strip_suffix('=') {
            let p: usize = p.parse().map_err(|_| bad_name(name))?;
            return Ok(NamedGraph::CompleteEqual(p));
        }
        if let Some(p) = rest.strip_suffix('-') {
            let p: usize = p.parse().map_err(|_| bad_name(name))?;
            return Ok(NamedGraph::CompleteMinus(p));
        }
        if let Ok(p) = rest.parse::<usize>() {
            return Ok(NamedGraph::Complete(p));
        }
    }
    Err(bad_name(name))
}

/// Parse `K_{a,b,...}` into its parts, for names not covered by the fixed
/// tags.
pub fn parse_multipartite(name: &str) -> Option<Vec<usize>> {
    let inner = name.strip_prefix("K_{")?.strip_suffix('}')?;
    inner
        .split(',')
        .map(|s| s.trim().parse::<usize>().ok())
        .collect()
}

fn bad_name(name: &str) -> Error {
    Error::invalid(format!("unknown graph name: {name}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multipartite_counts() {
        let cases: &[(&[usize], usize, usize)] = &[
            (&[2, 2, 2, 2, 2], 10, 40),
            (&[2, 2, 2, 3, 3], 13, 69),
            (&[1, 2, 2, 2, 2, 2], 11, 50),
            (&[2, 3, 3], 8, 21),
        ];
        for &(parts, n, e) in cases {
            let g = complete_multipartite(parts);
            assert_eq!(g.n(), n);
            assert_eq!(g.edge_count(), e, "parts {parts:?}");
        }
    }

    #[test]
    fn c8bar_degrees() {
        let g = build(NamedGraph::C8Bar).unwrap();
        assert_eq!(g.n(), 8);
        assert_eq!(g.min_degree(), 5);
        assert_eq!(g.max_degree(), 5);
    }

    #[test]
    fn kp_variants() {
        let k8m = build(NamedGraph::CompleteMinus(8)).unwrap();
        assert_eq!(k8m.edge_count(), 27);
        let k8e = build(NamedGraph::CompleteEqual(8)).unwrap();
        assert_eq!(k8e.edge_count(), 26);
        assert_eq!(k8e.min_degree(), 6);
        let k8ea = build(NamedGraph::CompleteEqualAdjacent(8)).unwrap();
        assert_eq!(k8ea.edge_count(), 26);
        assert_eq!(k8ea.min_degree(), 5);
        assert!(build(NamedGraph::CompleteEqual(3)).is_err());
    }

    #[test]
    fn name_parsing() {
        assert_eq!(parse_name("K7").unwrap(), NamedGraph::Complete(7));
        assert_eq!(parse_name("K8-").unwrap(), NamedGraph::CompleteMinus(8));
        assert_eq!(parse_name("K8=").unwrap(), NamedGraph::CompleteEqual(8));
        assert_eq!(
            parse_name("K8=adj").unwrap(),
            NamedGraph::CompleteEqualAdjacent(8)
        );
        assert_eq!(parse_name("K_{2,2,2,2,2}").unwrap(), NamedGraph::K22222);
        assert!(parse_name("Q17").is_err());
        assert_eq!(parse_multipartite("K_{2,3,4}").unwrap(), vec![2, 3, 4]);
    }
}
