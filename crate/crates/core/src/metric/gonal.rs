use itertools::Itertools;

use super::Graph;
use crate::error::{Error, Result};

/// Default `k` for [`kgonal_violations`]: covers the 5- and 7-gonal families.
pub const DEFAULT_HYPERMETRIC_BOUND: usize = 3;

/// Integer weights `b` on the vertices with `Σ b_i = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GonalVector {
    b: Vec<i64>,
}

impl GonalVector {
    pub fn new(b: Vec<i64>) -> Result<Self> {
        if b.iter().sum::<i64>() != 1 {
            return Err(Error::OutOfRange { what: "gonal vector", detail: format!("{b:?} does not sum to 1") });
        }
        Ok(GonalVector { b })
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.b
    }

    pub fn l1(&self) -> u64 {
        self.b.iter().map(|x| x.unsigned_abs()).sum()
    }

    /// `Σ_{i<j} b_i b_j d(i,j)`; the inequality holds when this is `<= 0`.
    pub fn value(&self, graph: &Graph) -> i64 {
        let support: Vec<(usize, i64)> =
            self.b.iter().copied().enumerate().filter(|&(_, x)| x != 0).collect();
        support
            .iter()
            .tuple_combinations()
            .map(|(&(i, bi), &(j, bj))| bi * bj * graph.d(i, j) as i64)
            .sum()
    }
}

/// Every `b` with `Σ b_i = 1` and `Σ |b_i| <= 2 * bound + 1` whose inequality
/// fails on the path metric of `graph`. An empty result means the metric is
/// hypermetric up to the bound.
pub fn kgonal_violations(graph: &Graph, bound: usize) -> Result<Vec<GonalVector>> {
    if bound < 2 {
        return Err(Error::OutOfRange { what: "hypermetric bound", detail: format!("{bound} < 2") });
    }
    graph.require_connected()?;
    let mut found = Vec::new();
    let mut b = vec![0i64; graph.vertex_count()];
    enumerate(graph, &mut b, 0, (2 * bound + 1) as i64, 0, &mut found);
    Ok(found)
}

fn enumerate(
    graph: &Graph,
    b: &mut Vec<i64>,
    index: usize,
    budget: i64,
    sum: i64,
    found: &mut Vec<GonalVector>,
) {
    if (1 - sum).abs() > budget {
        return;
    }
    if index == b.len() {
        if sum == 1 {
            let v = GonalVector { b: b.clone() };
            if v.value(graph) > 0 {
                found.push(v);
            }
        }
        return;
    }
    for x in -budget..=budget {
        b[index] = x;
        enumerate(graph, b, index + 1, budget - x.abs(), sum + x, found);
    }
    b[index] = 0;
}

/// Violations among the pure 5-gonal vectors: `+1` on three vertices, `-1`
/// on two others.
pub fn five_gonal_violations(graph: &Graph) -> Result<Vec<GonalVector>> {
    graph.require_connected()?;
    let n = graph.vertex_count();
    let mut found = Vec::new();
    for plus in (0..n).combinations(3) {
        let rest: Vec<usize> = (0..n).filter(|v| !plus.contains(v)).collect();
        for minus in rest.into_iter().combinations(2) {
            let mut b = vec![0i64; n];
            plus.iter().for_each(|&v| b[v] = 1);
            minus.iter().for_each(|&v| b[v] = -1);
            let v = GonalVector { b };
            if v.value(graph) > 0 {
                found.push(v);
            }
        }
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::{make_graph, GraphKind};

    #[test]
    fn k5_minus_triangle_violates() {
        let g = make_graph(GraphKind::CompleteMinusCycle { m: 5, h: 3 }).unwrap();
        let witness = GonalVector::new(vec![1, 1, 1, -1, -1]).unwrap();
        assert_eq!(witness.value(&g), 1);
        assert!(kgonal_violations(&g, 2).unwrap().contains(&witness));
        assert_eq!(five_gonal_violations(&g).unwrap(), vec![witness]);
    }

    #[test]
    fn complete_graph_is_five_gonal() {
        let g = make_graph(GraphKind::Complete(5)).unwrap();
        assert!(kgonal_violations(&g, 2).unwrap().is_empty());
        assert_eq!(GonalVector::new(vec![1, 1, 1, -1, -1]).unwrap().value(&g), -2);
    }

    #[test]
    fn triangle_inequality_is_covered() {
        // an odd cycle fails nothing; a path metric never violates 3-gonal vectors
        let g = make_graph(GraphKind::Cycle(7)).unwrap();
        assert!(kgonal_violations(&g, 2).unwrap().iter().all(|v| v.l1() >= 5));
    }

    #[test]
    fn argument_checks() {
        let g = make_graph(GraphKind::Complete(3)).unwrap();
        assert!(kgonal_violations(&g, 1).is_err());
        assert!(GonalVector::new(vec![1, 1]).is_err());
        let split = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(kgonal_violations(&split, 2), Err(Error::NotConnected));
    }
}
