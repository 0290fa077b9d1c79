use super::{Address, Graph};
use crate::error::{Error, Result};

pub const MAX_SCALED_VERTICES: usize = 8;
pub const MAX_SCALED_DIM: usize = 12;

/// Searches `{0,1}^dim` for addresses with Hamming distance `scale * d` on
/// every pair, by backtracking. `None` means no embedding with exactly these
/// parameters exists.
///
/// The first vertex sits at the origin. Coordinates that agree on every
/// vertex placed so far are interchangeable, so within each such group a new
/// address is only tried with its ones first.
pub fn find_scaled_embedding(graph: &Graph, scale: u64, dim: usize) -> Result<Option<Vec<Address>>> {
    let n = graph.vertex_count();
    if n > MAX_SCALED_VERTICES || dim > MAX_SCALED_DIM {
        return Err(Error::guard(format!(
            "scaled embedding search is limited to {MAX_SCALED_VERTICES} vertices and dimension {MAX_SCALED_DIM}"
        )));
    }
    if scale == 0 {
        return Err(Error::OutOfRange { what: "scale", detail: "0".into() });
    }
    graph.require_connected()?;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(graph.degree(v)), v));
    let mut placed: Vec<u16> = Vec::with_capacity(n);
    if !place(graph, scale, dim, &order, &mut placed) {
        return Ok(None);
    }
    let mut addresses = vec![Address::zeros(dim); n];
    for (&v, &code) in order.iter().zip(&placed) {
        addresses[v] = Address((0..dim).map(|c| code >> c & 1 == 1).collect());
    }
    Ok(Some(addresses))
}

fn place(graph: &Graph, scale: u64, dim: usize, order: &[usize], placed: &mut Vec<u16>) -> bool {
    let depth = placed.len();
    if depth == order.len() {
        return true;
    }
    if depth == 0 {
        placed.push(0);
        return place(graph, scale, dim, order, placed) || {
            placed.pop();
            false
        };
    }
    let v = order[depth];
    let targets: Vec<u32> = order[..depth]
        .iter()
        .map(|&u| graph.d(u, v) as u64 * scale)
        .map(|t| u32::try_from(t).unwrap_or(u32::MAX))
        .collect();
    if targets.iter().any(|&t| t as usize > dim) {
        return false;
    }
    // coordinate c's values on the placed vertices
    let history: Vec<u16> = (0..dim)
        .map(|c| placed.iter().enumerate().fold(0u16, |h, (k, &a)| h | (a >> c & 1) << k))
        .collect();
    for candidate in 0u16..(1 << dim) {
        let sorted_in_groups = (0..dim).all(|c| {
            (c + 1..dim).all(|e| history[c] != history[e] || candidate >> c & 1 >= candidate >> e & 1)
        });
        if !sorted_in_groups {
            continue;
        }
        if placed.iter().zip(&targets).all(|(&a, &t)| (a ^ candidate).count_ones() == t) {
            placed.push(candidate);
            if place(graph, scale, dim, order, placed) {
                return true;
            }
            placed.pop();
        }
    }
    false
}

/// `a_m = C(m-2, m/2 - 1)` for even `m`, `2 C(m-2, (m-3)/2)` for odd `m`.
pub fn a_m(m: u64) -> Result<u64> {
    if m < 3 {
        return Err(Error::OutOfRange { what: "a_m index", detail: format!("{m} < 3") });
    }
    let value = if m.is_multiple_of(2) { binomial(m - 2, m / 2 - 1) } else { binomial(m - 2, (m - 3) / 2) * 2 };
    u64::try_from(value).map_err(|_| Error::guard(format!("a_{m} overflows u64")))
}

fn binomial(n: u64, k: u64) -> u128 {
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::{is_scaled_embedding, make_graph, GraphKind};

    #[test]
    fn a_m_values() {
        assert_eq!(a_m(3).unwrap(), 2);
        assert_eq!(a_m(4).unwrap(), 2);
        assert_eq!(a_m(5).unwrap(), 6);
        assert_eq!(a_m(6).unwrap(), 6);
        assert!(a_m(2).is_err());
    }

    #[test]
    fn doubled_embeddings() {
        for kind in [
            GraphKind::CompleteMinusMatching { m: 5, h: 1 },
            GraphKind::CompleteMinusMatching { m: 6, h: 3 },
        ] {
            let g = make_graph(kind).unwrap();
            let addrs = find_scaled_embedding(&g, 2, 4).unwrap().expect("embedding exists");
            assert!(is_scaled_embedding(&g, 2, &addrs));
        }
    }

    #[test]
    fn odd_triangle() {
        let k3 = make_graph(GraphKind::Complete(3)).unwrap();
        for dim in 0..=MAX_SCALED_DIM {
            assert_eq!(find_scaled_embedding(&k3, 1, dim).unwrap(), None);
        }
    }

    #[test]
    fn cube_at_scale_one() {
        let q3 = make_graph(GraphKind::Hypercube(3)).unwrap();
        let addrs = find_scaled_embedding(&q3, 1, 3).unwrap().unwrap();
        assert!(is_scaled_embedding(&q3, 1, &addrs));
        assert_eq!(find_scaled_embedding(&q3, 1, 2).unwrap(), None);
    }

    #[test]
    fn guards() {
        let c9 = make_graph(GraphKind::Cycle(9)).unwrap();
        assert!(find_scaled_embedding(&c9, 2, 4).unwrap_err().is_guard());
        let c4 = make_graph(GraphKind::Cycle(4)).unwrap();
        assert!(find_scaled_embedding(&c4, 1, 13).unwrap_err().is_guard());
        assert!(find_scaled_embedding(&c4, 0, 2).is_err());
    }
}
