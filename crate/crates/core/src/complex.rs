//! Pure simplicial complexes stored by their facets.
//!
//! Lower-dimensional faces are never stored; they are enumerated from the
//! facets when asked for. Vertex ids are arbitrary positive integers and need
//! not be contiguous.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::metric::Graph;
use crate::partition::Partition;
use crate::search;

pub type VertexId = u32;

/// A face, identified with its sorted vertex set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Face(Vec<VertexId>);

impl Face {
    pub fn new<I: IntoIterator<Item = VertexId>>(vertices: I) -> Result<Self> {
        let mut vertices: Vec<VertexId> = vertices.into_iter().collect();
        if vertices.is_empty() {
            return Err(Error::InvalidFace("a face needs at least one vertex".into()));
        }
        if vertices.contains(&0) {
            return Err(Error::InvalidFace("vertex ids must be positive".into()));
        }
        vertices.sort_unstable();
        if let Some(w) = vertices.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidFace(format!("vertex {} repeated", w[0])));
        }
        Ok(Face(vertices))
    }

    /// Caller guarantees `vertices` is sorted, positive and duplicate-free.
    pub(crate) fn from_sorted(vertices: Vec<VertexId>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Face(vertices)
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subface_of(&self, other: &Face) -> bool {
        self.0.iter().all(|&v| other.contains(v))
    }

    /// The face with the given vertices removed.
    pub(crate) fn without(&self, removed: &[VertexId]) -> Face {
        Face(self.0.iter().copied().filter(|v| !removed.contains(v)).collect())
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.0.iter().join(","))
    }
}

/// Outcome of the closed-pseudomanifold test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Closedness {
    /// Every (n-1)-face lies in exactly two facets.
    Closed,
    /// Every (n-1)-face lies in one or two facets; these lie in exactly one.
    Boundary(Vec<Face>),
    /// An (n-1)-face lying in three or more facets.
    Bad { face: Face, count: usize },
}

/// The link of an (n-2)-face: the edges `F' \ F` over all facets `F' ⊇ F`,
/// decomposed into cycles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkReport {
    pub face: Face,
    /// Each cycle starts at its smallest vertex and continues towards the
    /// smaller of that vertex's two neighbours.
    pub cycles: Vec<Vec<VertexId>>,
    /// Cycle lengths, sorted.
    pub sizes: Vec<usize>,
}

impl LinkReport {
    pub fn edge_count(&self) -> usize {
        self.sizes.iter().sum()
    }

    /// The link length `l(F)` when the link is a single cycle.
    pub fn length(&self) -> Option<usize> {
        match self.sizes.as_slice() {
            [len] => Some(*len),
            _ => None,
        }
    }
}

/// A pure `n`-dimensional simplicial complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    dim: usize,
    facets: Vec<Face>,
    vertices: Vec<VertexId>,
}

impl SimplicialComplex {
    /// Builds a complex from its facets. Duplicate facets are merged; every
    /// facet must have exactly `dim + 1` vertices.
    pub fn new<I: IntoIterator<Item = Face>>(dim: usize, facets: I) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidComplex("dimension must be at least 1".into()));
        }
        let facets: BTreeSet<Face> = facets.into_iter().collect();
        if facets.is_empty() {
            return Err(Error::InvalidComplex("no facets".into()));
        }
        if let Some(bad) = facets.iter().find(|f| f.len() != dim + 1) {
            return Err(Error::InvalidComplex(format!(
                "facet {bad} has {} vertices, expected {}",
                bad.len(),
                dim + 1
            )));
        }
        let vertices: BTreeSet<VertexId> =
            facets.iter().flat_map(|f| f.vertices().iter().copied()).collect();
        Ok(SimplicialComplex {
            dim,
            facets: facets.into_iter().collect(),
            vertices: vertices.into_iter().collect(),
        })
    }

    pub fn from_vertex_lists<I, F>(dim: usize, facets: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = VertexId>,
    {
        let facets = facets.into_iter().map(Face::new).collect::<Result<Vec<_>>>()?;
        Self::new(dim, facets)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Facets in sorted order.
    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    pub fn has_facet(&self, face: &Face) -> bool {
        self.facets.binary_search(face).is_ok()
    }

    /// Applies a vertex relabeling. The map must be injective on the vertex set.
    pub fn relabeled<F: Fn(VertexId) -> VertexId>(&self, map: F) -> Result<Self> {
        let facets = self
            .facets
            .iter()
            .map(|f| Face::new(f.vertices().iter().map(|&v| map(v))))
            .collect::<Result<Vec<_>>>()?;
        let out = Self::new(self.dim, facets)?;
        if out.facet_count() != self.facet_count() {
            return Err(Error::InvalidComplex("relabeling is not injective".into()));
        }
        Ok(out)
    }

    /// All faces of dimension `k`.
    pub fn faces_of_dim(&self, k: usize) -> Result<BTreeSet<Face>> {
        if k > self.dim {
            return Err(Error::OutOfRange {
                what: "face dimension",
                detail: format!("{k} > {}", self.dim),
            });
        }
        Ok(self
            .facets
            .iter()
            .flat_map(|f| f.vertices().iter().copied().combinations(k + 1))
            .map(Face::from_sorted)
            .collect())
    }

    /// Number of faces in each dimension `0..=n`.
    pub fn f_vector(&self) -> Vec<usize> {
        let width = self.dim + 1;
        let mut seen: Vec<HashSet<Vec<VertexId>>> = vec![HashSet::new(); width];
        for facet in &self.facets {
            let v = facet.vertices();
            for mask in 1u64..(1 << width) {
                let subset: Vec<VertexId> =
                    (0..width).filter(|i| mask >> i & 1 == 1).map(|i| v[i]).collect();
                seen[subset.len() - 1].insert(subset);
            }
        }
        seen.iter().map(HashSet::len).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(k, &count)| if k % 2 == 0 { count as i64 } else { -(count as i64) })
            .sum()
    }

    /// Number of facets containing each (n-1)-face.
    fn ridge_incidence(&self) -> BTreeMap<Face, usize> {
        let mut counts = BTreeMap::new();
        for facet in &self.facets {
            for &v in facet.vertices() {
                *counts.entry(facet.without(&[v])).or_insert(0) += 1;
            }
        }
        counts
    }

    pub fn closedness(&self) -> Closedness {
        let counts = self.ridge_incidence();
        if let Some((face, &count)) = counts.iter().find(|(_, &c)| c >= 3) {
            return Closedness::Bad { face: face.clone(), count };
        }
        let boundary: Vec<Face> =
            counts.into_iter().filter(|&(_, c)| c == 1).map(|(f, _)| f).collect();
        if boundary.is_empty() {
            Closedness::Closed
        } else {
            Closedness::Boundary(boundary)
        }
    }

    pub fn is_closed(&self) -> bool {
        self.closedness() == Closedness::Closed
    }

    fn require_link_dim(&self) -> Result<()> {
        if self.dim < 2 {
            Err(Error::DimensionTooLow(self.dim))
        } else {
            Ok(())
        }
    }

    /// Link edges of every (n-2)-face.
    fn link_edges(&self) -> BTreeMap<Face, Vec<(VertexId, VertexId)>> {
        let mut edges: BTreeMap<Face, Vec<(VertexId, VertexId)>> = BTreeMap::new();
        for facet in &self.facets {
            for (&a, &b) in facet.vertices().iter().tuple_combinations() {
                edges.entry(facet.without(&[a, b])).or_default().push((a, b));
            }
        }
        edges
    }

    pub fn link_of_face(&self, face: &Face) -> Result<LinkReport> {
        self.require_link_dim()?;
        if face.len() != self.dim - 1 {
            return Err(Error::NotRidgeOfRidge(face.clone()));
        }
        let edges: Vec<(VertexId, VertexId)> = self
            .facets
            .iter()
            .filter(|f| face.is_subface_of(f))
            .map(|f| {
                let e = f.without(face.vertices());
                (e.vertices()[0], e.vertices()[1])
            })
            .collect();
        if edges.is_empty() {
            return Err(Error::NotRidgeOfRidge(face.clone()));
        }
        link_report(face.clone(), &edges)
    }

    /// Links of all (n-2)-faces, in face order.
    pub fn links(&self) -> Result<Vec<LinkReport>> {
        self.require_link_dim()?;
        self.link_edges()
            .into_iter()
            .map(|(face, edges)| link_report(face, &edges))
            .collect()
    }

    /// The set of all link cycle lengths. Requires a closed complex.
    pub fn complex_type(&self) -> Result<BTreeSet<usize>> {
        self.require_link_dim()?;
        if !self.is_closed() {
            return Err(Error::NotClosed);
        }
        Ok(self.links()?.into_iter().flat_map(|l| l.sizes).collect())
    }

    /// Vertices joined when they share a facet. Graph vertex `i` carries the
    /// label `self.vertices()[i]`.
    pub fn skeleton(&self) -> Graph {
        let index: BTreeMap<VertexId, usize> =
            self.vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let edges: BTreeSet<(usize, usize)> = self
            .facets
            .iter()
            .flat_map(|f| f.vertices().iter().tuple_combinations())
            .map(|(a, b)| (index[a], index[b]))
            .collect();
        Graph::with_labels(self.vertices.clone(), edges)
            .expect("skeleton edges are valid by construction")
    }

    /// Characteristic partition of `facet`, with elements numbered by
    /// position (1-based) in the facet's sorted vertex list.
    pub fn characteristic_partition(&self, facet: &Face) -> Result<Partition> {
        let table = ShortLinkTable::new(self)?;
        let parts = table.parts_of(facet)?;
        positional_partition(facet, &parts)
    }

    /// Characteristic parts of `facet` as sets of vertex ids.
    pub fn characteristic_parts(&self, facet: &Face) -> Result<Vec<Vec<VertexId>>> {
        ShortLinkTable::new(self)?.parts_of(facet)
    }

    /// The vertex `w` with `facet - v + w` a facet, for a closed complex.
    pub(crate) fn opposite_vertex(&self, facet: &Face, v: VertexId) -> Option<VertexId> {
        let ridge = facet.without(&[v]);
        self.facets
            .iter()
            .filter(|f| *f != facet && ridge.is_subface_of(f))
            .find_map(|f| f.vertices().iter().copied().find(|w| !ridge.contains(*w)))
    }
}

fn link_report(face: Face, edges: &[(VertexId, VertexId)]) -> Result<LinkReport> {
    let cycles = decompose_cycles(edges).ok_or_else(|| Error::LinkNotCycles(face.clone()))?;
    let mut sizes: Vec<usize> = cycles.iter().map(Vec::len).collect();
    sizes.sort_unstable();
    Ok(LinkReport { face, cycles, sizes })
}

/// Splits an edge set into vertex-disjoint cycles; `None` unless every vertex
/// has degree exactly two.
fn decompose_cycles(edges: &[(VertexId, VertexId)]) -> Option<Vec<Vec<VertexId>>> {
    let mut adjacency: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
    for &(a, b) in edges {
        adjacency.entry(a).or_default().push(b);
        adjacency.entry(b).or_default().push(a);
    }
    if adjacency.values().any(|n| n.len() != 2) {
        return None;
    }
    for n in adjacency.values_mut() {
        n.sort_unstable();
    }
    let mut visited = BTreeSet::new();
    let mut cycles = Vec::new();
    for &start in adjacency.keys() {
        if visited.contains(&start) {
            continue;
        }
        let mut cycle = vec![start];
        visited.insert(start);
        let (mut prev, mut cur) = (start, adjacency[&start][0]);
        while cur != start {
            if !visited.insert(cur) {
                return None;
            }
            cycle.push(cur);
            let n = &adjacency[&cur];
            let next = if n[0] == prev { n[1] } else { n[0] };
            prev = cur;
            cur = next;
        }
        if cycle.len() < 3 {
            return None;
        }
        cycles.push(cycle);
    }
    Some(cycles)
}

/// Link lengths of every (n-2)-face of a closed complex of type `{3,4}`.
pub(crate) struct ShortLinkTable<'a> {
    complex: &'a SimplicialComplex,
    lengths: BTreeMap<Face, usize>,
}

impl<'a> ShortLinkTable<'a> {
    pub(crate) fn new(complex: &'a SimplicialComplex) -> Result<Self> {
        complex.require_link_dim()?;
        if !complex.is_closed() {
            return Err(Error::NotClosed);
        }
        let links = complex.links()?;
        let kinds: BTreeSet<usize> = links.iter().flat_map(|l| l.sizes.iter().copied()).collect();
        if kinds.iter().any(|&l| l != 3 && l != 4) {
            return Err(Error::NotShortLinked(kinds.into_iter().collect()));
        }
        let mut lengths = BTreeMap::new();
        for link in links {
            let len = link.length().ok_or_else(|| {
                Error::Inconsistent(format!(
                    "link of {} splits into {} cycles",
                    link.face,
                    link.cycles.len()
                ))
            })?;
            lengths.insert(link.face, len);
        }
        Ok(ShortLinkTable { complex, lengths })
    }

    /// Components of the graph joining `i, j` when `l(facet - {i,j}) = 3`,
    /// checked to be cliques.
    pub(crate) fn parts_of(&self, facet: &Face) -> Result<Vec<Vec<VertexId>>> {
        if !self.complex.has_facet(facet) {
            return Err(Error::InvalidFace(format!("{facet} is not a facet")));
        }
        let v = facet.vertices();
        let width = v.len();
        let mut short = vec![vec![false; width]; width];
        let mut component: Vec<usize> = (0..width).collect();
        for (i, j) in (0..width).tuple_combinations() {
            let len = self.lengths[&facet.without(&[v[i], v[j]])];
            if len == 3 {
                short[i][j] = true;
                short[j][i] = true;
                let (from, to) = (component[j], component[i]);
                for c in component.iter_mut().filter(|c| **c == from) {
                    *c = to;
                }
            }
        }
        for (i, j) in (0..width).tuple_combinations() {
            if (component[i] == component[j]) != short[i][j] {
                return Err(Error::Inconsistent(format!(
                    "short-link graph on facet {facet} is not a union of cliques"
                )));
            }
        }
        let mut parts: BTreeMap<usize, Vec<VertexId>> = BTreeMap::new();
        for (i, c) in component.into_iter().enumerate() {
            parts.entry(c).or_default().push(v[i]);
        }
        let mut parts: Vec<Vec<VertexId>> = parts.into_values().collect();
        parts.sort_by_key(|p| (p.len(), p[0]));
        Ok(parts)
    }

    pub(crate) fn complex(&self) -> &SimplicialComplex {
        self.complex
    }
}

fn positional_partition(facet: &Face, parts: &[Vec<VertexId>]) -> Result<Partition> {
    let position = |v: VertexId| {
        facet.vertices().iter().position(|&w| w == v).expect("part vertex lies in facet") as u32 + 1
    };
    let parts = parts.iter().map(|p| p.iter().map(|&v| position(v)).collect()).collect();
    Ok(Partition::new(parts)?.canonical())
}

/// A vertex bijection from one complex to another, as a sorted map.
pub type VertexMap = BTreeMap<VertexId, VertexId>;

/// Finds a vertex bijection carrying the facets of `a` onto the facets of `b`.
///
/// Complexes of type `{3,4}` are compared through their characteristic
/// partitions and the bijection is built directly; anything else falls back
/// to a backtracking search, which handles up to 128 vertices.
pub fn are_isomorphic(a: &SimplicialComplex, b: &SimplicialComplex) -> Result<Option<VertexMap>> {
    if a.dim != b.dim
        || a.vertex_count() != b.vertex_count()
        || a.facet_count() != b.facet_count()
    {
        return Ok(None);
    }
    let short_a = ShortLinkTable::new(a).ok();
    let short_b = ShortLinkTable::new(b).ok();
    match (&short_a, &short_b) {
        (Some(ta), Some(tb)) => {
            if let Some(map) = short_link_bijection(ta, tb)? {
                return Ok(Some(map));
            }
            let sizes = |t: &ShortLinkTable| -> Result<Vec<usize>> {
                let facet = &t.complex().facets()[0];
                Ok(t.parts_of(facet)?.iter().map(Vec::len).sorted().collect())
            };
            if sizes(ta)? != sizes(tb)? {
                return Ok(None);
            }
        }
        (Some(_), None) | (None, Some(_)) => return Ok(None),
        (None, None) => {}
    }
    search::find_isomorphism(a, b)
}

/// Matches characteristic parts of size-equal partitions and extends the
/// matching to opposite vertices. Returns `None` when the size multisets
/// differ or the candidate fails to carry facets onto facets.
fn short_link_bijection(ta: &ShortLinkTable, tb: &ShortLinkTable) -> Result<Option<VertexMap>> {
    let (a, b) = (ta.complex(), tb.complex());
    let (da, db) = (&a.facets()[0], &b.facets()[0]);
    let (pa, pb) = (ta.parts_of(da)?, tb.parts_of(db)?);
    if pa.iter().map(Vec::len).collect_vec() != pb.iter().map(Vec::len).collect_vec() {
        return Ok(None);
    }
    let mut map = VertexMap::new();
    for (part_a, part_b) in pa.iter().zip(&pb) {
        for (&x, &y) in part_a.iter().zip(part_b) {
            map.insert(x, y);
            let (Some(xo), Some(yo)) = (a.opposite_vertex(da, x), b.opposite_vertex(db, y)) else {
                return Ok(None);
            };
            if let Some(&prev) = map.get(&xo) {
                if prev != yo {
                    return Ok(None);
                }
            }
            map.insert(xo, yo);
        }
    }
    if map.len() != a.vertex_count() || !is_facet_bijection(a, b, &map) {
        return Ok(None);
    }
    Ok(Some(map))
}

/// Checks that `map` is a bijection of vertex sets carrying facets onto facets.
pub fn is_facet_bijection(a: &SimplicialComplex, b: &SimplicialComplex, map: &VertexMap) -> bool {
    let image: BTreeSet<VertexId> = map.values().copied().collect();
    if map.len() != a.vertex_count()
        || image.len() != map.len()
        || !a.vertices().iter().all(|v| map.contains_key(v))
        || !b.vertices().iter().all(|v| image.contains(v))
        || a.facet_count() != b.facet_count()
    {
        return false;
    }
    a.facets().iter().all(|f| {
        let g = Face::from_sorted(f.vertices().iter().map(|v| map[v]).sorted().collect());
        b.has_facet(&g)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complex(dim: usize, facets: &[&[u32]]) -> SimplicialComplex {
        SimplicialComplex::from_vertex_lists(dim, facets.iter().map(|f| f.iter().copied())).unwrap()
    }

    fn tetrahedron() -> SimplicialComplex {
        complex(2, &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]])
    }

    fn octahedron() -> SimplicialComplex {
        // 1/4, 2/5, 3/6 antipodal
        let facets: Vec<Vec<u32>> = (0..8u32)
            .map(|m| (0..3).map(|i| if m >> i & 1 == 1 { i + 4 } else { i + 1 }).collect())
            .collect();
        SimplicialComplex::from_vertex_lists(2, facets).unwrap()
    }

    #[test]
    fn face_validation() {
        assert!(Face::new([]).is_err());
        assert!(Face::new([0, 1]).is_err());
        assert!(Face::new([2, 2]).is_err());
        assert_eq!(Face::new([3, 1, 2]).unwrap().vertices(), &[1, 2, 3]);
    }

    #[test]
    fn impure_facets_rejected() {
        let err = SimplicialComplex::from_vertex_lists(2, [vec![1, 2, 3], vec![1, 2]]);
        assert!(matches!(err, Err(Error::InvalidComplex(_))));
    }

    #[test]
    fn duplicate_facets_merge() {
        let k = complex(2, &[&[1, 2, 3], &[3, 2, 1]]);
        assert_eq!(k.facet_count(), 1);
    }

    #[test]
    fn face_counts() {
        assert_eq!(tetrahedron().faces_of_dim(1).unwrap().len(), 6);
        assert_eq!(octahedron().faces_of_dim(0).unwrap().len(), 6);
        assert!(octahedron().faces_of_dim(3).is_err());
        assert_eq!(octahedron().f_vector(), vec![6, 12, 8]);
        assert_eq!(octahedron().euler_characteristic(), 2);
    }

    #[test]
    fn closedness_verdicts() {
        assert_eq!(octahedron().closedness(), Closedness::Closed);
        match complex(2, &[&[1, 2, 3]]).closedness() {
            Closedness::Boundary(faces) => assert_eq!(faces.len(), 3),
            other => panic!("unexpected {other:?}"),
        }
        let fan = complex(2, &[&[1, 2, 3], &[1, 2, 4], &[1, 2, 5]]);
        assert_eq!(
            fan.closedness(),
            Closedness::Bad { face: Face::new([1, 2]).unwrap(), count: 3 }
        );
    }

    #[test]
    fn links_and_type() {
        let oct = octahedron();
        let link = oct.link_of_face(&Face::new([1]).unwrap()).unwrap();
        assert_eq!(link.sizes, vec![4]);
        assert_eq!(link.cycles, vec![vec![2, 3, 5, 6]]);
        assert_eq!(oct.complex_type().unwrap(), BTreeSet::from([4]));
        assert_eq!(tetrahedron().complex_type().unwrap(), BTreeSet::from([3]));
        assert!(oct.link_of_face(&Face::new([1, 2]).unwrap()).is_err());
        assert!(oct.link_of_face(&Face::new([7]).unwrap()).is_err());
    }

    #[test]
    fn link_family_of_two_cycles() {
        // two triangles' worth of cones around vertex 9 (a pinched point)
        let k = complex(
            2,
            &[&[9, 1, 2], &[9, 2, 3], &[9, 1, 3], &[9, 4, 5], &[9, 5, 6], &[9, 4, 6]],
        );
        let link = k.link_of_face(&Face::new([9]).unwrap()).unwrap();
        assert_eq!(link.sizes, vec![3, 3]);
        assert_eq!(link.edge_count(), 6);
        assert_eq!(link.length(), None);
    }

    #[test]
    fn type_needs_closed_and_dim_two() {
        assert_eq!(complex(2, &[&[1, 2, 3]]).complex_type(), Err(Error::NotClosed));
        let cycle = complex(1, &[&[1, 2], &[2, 3], &[1, 3]]);
        assert_eq!(cycle.complex_type(), Err(Error::DimensionTooLow(1)));
    }

    #[test]
    fn skeletons() {
        let g = octahedron().skeleton();
        assert_eq!((g.vertex_count(), g.edge_count()), (6, 12));
        assert_eq!(g.complement_matching(), Some(3));
        assert_eq!(tetrahedron().skeleton().complement_matching(), Some(0));
    }

    #[test]
    fn characteristic_partitions() {
        let oct = octahedron();
        let p = oct.characteristic_partition(&oct.facets()[0]).unwrap();
        assert_eq!(p.part_sizes(), vec![1, 1, 1]);
        let tet = tetrahedron();
        let p = tet.characteristic_partition(&tet.facets()[0]).unwrap();
        assert_eq!(p.part_sizes(), vec![3]);
        assert!(oct.characteristic_partition(&Face::new([1, 2, 4]).unwrap()).is_err());
    }

    #[test]
    fn isomorphism_fallback_on_non_short_complexes() {
        let pentagon = complex(1, &[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[5, 1]]);
        let relabeled = pentagon.relabeled(|v| 10 + (v * 3) % 5).unwrap();
        let map = are_isomorphic(&pentagon, &relabeled).unwrap().unwrap();
        assert!(is_facet_bijection(&pentagon, &relabeled, &map));
        assert_eq!(are_isomorphic(&tetrahedron(), &octahedron()).unwrap(), None);
    }
}
