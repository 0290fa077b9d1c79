use super::{is_scaled_embedding, Address, Graph};
use crate::error::Result;

/// Binary addresses realizing the path metric exactly (scale 1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialCubeLabeling {
    pub dim: usize,
    pub addresses: Vec<Address>,
}

/// Recognizes isometric subgraphs of hypercubes.
///
/// The graph must be bipartite and the relation on edges `xy ~ uv` iff
/// `d(x,u) + d(y,v) != d(x,v) + d(y,u)` must be transitive; its classes are
/// then the coordinates, with `x` on the `1` side of class `uv` when `x` is
/// closer to `v` than to `u`. The labeling is checked against the metric
/// before it is returned.
pub fn partial_cube(graph: &Graph) -> Result<Option<PartialCubeLabeling>> {
    graph.require_connected()?;
    if !graph.is_bipartite() {
        return Ok(None);
    }
    let edges = graph.edges();
    let related = |e: (usize, usize), f: (usize, usize)| {
        let (x, y) = e;
        let (u, v) = f;
        graph.d(x, u) + graph.d(y, v) != graph.d(x, v) + graph.d(y, u)
    };
    let mut class = vec![usize::MAX; edges.len()];
    let mut representatives: Vec<(usize, usize)> = Vec::new();
    for (i, &e) in edges.iter().enumerate() {
        if class[i] != usize::MAX {
            continue;
        }
        let id = representatives.len();
        representatives.push(e);
        for (j, &f) in edges.iter().enumerate().skip(i) {
            if related(e, f) {
                if class[j] != usize::MAX {
                    return Ok(None);
                }
                class[j] = id;
            }
        }
    }
    // transitivity: every pair inside a class must be related
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            if (class[i] == class[j]) != related(edges[i], edges[j]) {
                return Ok(None);
            }
        }
    }
    let addresses: Vec<Address> = (0..graph.vertex_count())
        .map(|x| Address(representatives.iter().map(|&(u, v)| graph.d(x, v) < graph.d(x, u)).collect()))
        .collect();
    if !is_scaled_embedding(graph, 1, &addresses) {
        return Ok(None);
    }
    Ok(Some(PartialCubeLabeling { dim: representatives.len(), addresses }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::{make_graph, GraphKind};

    #[test]
    fn cubes_and_even_cycles() {
        let q3 = make_graph(GraphKind::Hypercube(3)).unwrap();
        assert_eq!(partial_cube(&q3).unwrap().unwrap().dim, 3);
        let c6 = make_graph(GraphKind::Cycle(6)).unwrap();
        assert_eq!(partial_cube(&c6).unwrap().unwrap().dim, 3);
    }

    #[test]
    fn rejections() {
        let k23 = Graph::new(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        assert_eq!(partial_cube(&k23).unwrap(), None);
        assert_eq!(partial_cube(&make_graph(GraphKind::Cycle(5)).unwrap()).unwrap(), None);
        assert!(partial_cube(&Graph::new(3, [(0, 1)]).unwrap()).is_err());
    }

    #[test]
    fn trees_are_partial_cubes() {
        let star = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(partial_cube(&star).unwrap().unwrap().dim, 3);
        let single = Graph::new(1, []).unwrap();
        assert_eq!(partial_cube(&single).unwrap().unwrap().dim, 0);
    }
}
