//! Backtracking search for vertex bijections carrying one facet set onto
//! another. Facets are held as `u128` vertex masks, so complexes are limited
//! to 128 vertices.

use std::collections::VecDeque;
use std::ops::ControlFlow;

use crate::complex::{SimplicialComplex, VertexId, VertexMap};
use crate::error::{Error, Result};

pub(crate) const MAX_VERTICES: usize = 128;

pub(crate) struct Indexed {
    ids: Vec<VertexId>,
    facets: Vec<u128>,
    adjacency: Vec<u128>,
    /// (skeleton degree, facet degree) per vertex.
    signature: Vec<(u32, u32)>,
}

impl Indexed {
    pub(crate) fn new(complex: &SimplicialComplex) -> Result<Self> {
        let ids = complex.vertices().to_vec();
        if ids.len() > MAX_VERTICES {
            return Err(Error::guard(format!(
                "bijection search supports at most {MAX_VERTICES} vertices, got {}",
                ids.len()
            )));
        }
        let index = |v: VertexId| ids.binary_search(&v).expect("facet vertex is a vertex");
        let mut facets = Vec::with_capacity(complex.facet_count());
        let mut adjacency = vec![0u128; ids.len()];
        let mut facet_degree = vec![0u32; ids.len()];
        for facet in complex.facets() {
            let mask = facet.vertices().iter().fold(0u128, |m, &v| m | 1 << index(v));
            for &v in facet.vertices() {
                let i = index(v);
                adjacency[i] |= mask & !(1 << i);
                facet_degree[i] += 1;
            }
            facets.push(mask);
        }
        facets.sort_unstable();
        let signature =
            adjacency.iter().zip(&facet_degree).map(|(a, &f)| (a.count_ones(), f)).collect();
        Ok(Indexed { ids, facets, adjacency, signature })
    }

    fn len(&self) -> usize {
        self.ids.len()
    }

    fn has_facet(&self, mask: u128) -> bool {
        self.facets.binary_search(&mask).is_ok()
    }

    /// Breadth-first order from a vertex of maximal degree, so that adjacency
    /// constraints bite from the second level on.
    fn search_order(&self) -> Vec<usize> {
        let mut order = Vec::with_capacity(self.len());
        let mut placed = 0u128;
        while order.len() < self.len() {
            let root = (0..self.len())
                .filter(|&v| placed >> v & 1 == 0)
                .max_by_key(|&v| (self.signature[v], std::cmp::Reverse(v)))
                .expect("unplaced vertex exists");
            let mut queue = VecDeque::from([root]);
            placed |= 1 << root;
            while let Some(v) = queue.pop_front() {
                order.push(v);
                let mut next = self.adjacency[v] & !placed;
                while next != 0 {
                    let w = next.trailing_zeros() as usize;
                    next &= next - 1;
                    placed |= 1 << w;
                    queue.push_back(w);
                }
            }
        }
        order
    }
}

fn image(mask: u128, map: &[usize]) -> u128 {
    let mut rest = mask;
    let mut out = 0u128;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        out |= 1 << map[v];
    }
    out
}

/// Calls `visit` with every facet-preserving bijection `src -> dst` (as a
/// slice indexed by source position) until it breaks.
pub(crate) fn for_each_bijection<F>(src: &Indexed, dst: &Indexed, mut visit: F)
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let n = src.len();
    if n != dst.len() || src.facets.len() != dst.facets.len() {
        return;
    }
    let mut sig_src = src.signature.clone();
    let mut sig_dst = dst.signature.clone();
    sig_src.sort_unstable();
    sig_dst.sort_unstable();
    if sig_src != sig_dst {
        return;
    }
    let order = src.search_order();
    let mut depth_of = vec![0usize; n];
    for (d, &v) in order.iter().enumerate() {
        depth_of[v] = d;
    }
    // facets become checkable once their last vertex in search order is placed
    let mut completes: Vec<Vec<u128>> = vec![Vec::new(); n];
    for &f in &src.facets {
        let last = (0..n).filter(|&v| f >> v & 1 == 1).map(|v| depth_of[v]).max().unwrap();
        completes[last].push(f);
    }
    let mut state = State {
        src,
        dst,
        order: &order,
        completes: &completes,
        map: vec![usize::MAX; n],
        used: 0,
    };
    let _ = state.extend(0, &mut visit);
}

struct State<'a> {
    src: &'a Indexed,
    dst: &'a Indexed,
    order: &'a [usize],
    completes: &'a [Vec<u128>],
    map: Vec<usize>,
    used: u128,
}

impl State<'_> {
    fn extend<F>(&mut self, depth: usize, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        if depth == self.order.len() {
            return visit(&self.map);
        }
        let u = self.order[depth];
        for w in 0..self.dst.len() {
            if self.used >> w & 1 == 1 || self.src.signature[u] != self.dst.signature[w] {
                continue;
            }
            let adjacent_ok = self.order[..depth].iter().all(|&v| {
                let x = self.map[v];
                (self.src.adjacency[u] >> v & 1) == (self.dst.adjacency[w] >> x & 1)
            });
            if !adjacent_ok {
                continue;
            }
            self.map[u] = w;
            let facets_ok =
                self.completes[depth].iter().all(|&f| self.dst.has_facet(image(f, &self.map)));
            if facets_ok {
                self.used |= 1 << w;
                let flow = self.extend(depth + 1, visit);
                self.used &= !(1 << w);
                if flow.is_break() {
                    self.map[u] = usize::MAX;
                    return flow;
                }
            }
            self.map[u] = usize::MAX;
        }
        ControlFlow::Continue(())
    }
}

pub(crate) fn to_vertex_map(src: &Indexed, dst: &Indexed, map: &[usize]) -> VertexMap {
    map.iter().enumerate().map(|(i, &j)| (src.ids[i], dst.ids[j])).collect()
}

pub(crate) fn find_isomorphism(
    a: &SimplicialComplex,
    b: &SimplicialComplex,
) -> Result<Option<VertexMap>> {
    let (ia, ib) = (Indexed::new(a)?, Indexed::new(b)?);
    let mut found = None;
    for_each_bijection(&ia, &ib, |map| {
        found = Some(to_vertex_map(&ia, &ib, map));
        ControlFlow::Break(())
    });
    Ok(found)
}

pub(crate) fn vertex_ids(indexed: &Indexed) -> &[VertexId] {
    &indexed.ids
}
