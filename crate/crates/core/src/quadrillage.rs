//! Two-dimensional cubical complexes (quadrillages) and their zones.
//!
//! A zone is a maximal sequence of edges in which consecutive edges are
//! opposite sides of a shared quadrangle. On a closed quadrillage every zone
//! is a circuit; on one with boundary, zones starting at a boundary edge are
//! paths ending at another boundary edge.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;

use crate::complex::VertexId;
use crate::error::{Error, Result};
use crate::metric::Graph;

/// An edge `(a, b)` with `a < b`.
pub type Edge = (VertexId, VertexId);

fn edge(a: VertexId, b: VertexId) -> Edge {
    (a.min(b), a.max(b))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quadrillage {
    vertex_count: usize,
    faces: Vec<[VertexId; 4]>,
    incidence: BTreeMap<Edge, Vec<usize>>,
}

/// A zone: `edges[i]` and `edges[i + 1]` are opposite in `faces[i]`; for a
/// closed zone the last face joins the last edge back to the first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Zone {
    pub edges: Vec<Edge>,
    pub faces: Vec<usize>,
    pub closed: bool,
}

impl Zone {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// Verdict of the zone criterion for hypercube embeddability.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZoneCriterion {
    /// All zones simple and convex.
    pub embeddable: bool,
    pub zones_simple: bool,
    pub zones_convex: bool,
    /// Whether the criterion's hypothesis (a bipartite sphere or disk) holds;
    /// when it does not, `embeddable` is still computed but proves nothing.
    pub planar_bipartite: bool,
}

impl Quadrillage {
    /// Faces are 4-cycles of vertex ids in `1..=vertex_count`.
    pub fn new(vertex_count: usize, faces: Vec<[VertexId; 4]>) -> Result<Self> {
        let invalid = |msg: String| Err(Error::InvalidQuadrillage(msg));
        let mut incidence: BTreeMap<Edge, Vec<usize>> = BTreeMap::new();
        for (i, face) in faces.iter().enumerate() {
            if face.iter().any(|&v| v == 0 || v as usize > vertex_count) {
                return invalid(format!("face {face:?} uses a vertex outside 1..={vertex_count}"));
            }
            if face.iter().collect::<BTreeSet<_>>().len() != 4 {
                return invalid(format!("face {face:?} repeats a vertex"));
            }
            for k in 0..4 {
                incidence.entry(edge(face[k], face[(k + 1) % 4])).or_default().push(i);
            }
        }
        if let Some((e, _)) = incidence.iter().find(|(_, f)| f.len() > 2) {
            return invalid(format!("edge {e:?} lies in more than two faces"));
        }
        Ok(Quadrillage { vertex_count, faces, incidence })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn faces(&self) -> &[[VertexId; 4]] {
        &self.faces
    }

    pub fn edges(&self) -> Vec<Edge> {
        self.incidence.keys().copied().collect()
    }

    pub fn edge_count(&self) -> usize {
        self.incidence.len()
    }

    pub fn faces_of_edge(&self, e: Edge) -> &[usize] {
        self.incidence.get(&edge(e.0, e.1)).map_or(&[], Vec::as_slice)
    }

    pub fn boundary_edges(&self) -> Vec<Edge> {
        self.incidence.iter().filter(|(_, f)| f.len() == 1).map(|(&e, _)| e).collect()
    }

    pub fn is_closed(&self) -> bool {
        self.incidence.values().all(|f| f.len() == 2)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count as i64 - self.edge_count() as i64 + self.faces.len() as i64
    }

    /// Vertex `i` of the graph is vertex id `i + 1`.
    pub fn skeleton(&self) -> Graph {
        let edges: Vec<(usize, usize)> =
            self.incidence.keys().map(|&(a, b)| (a as usize - 1, b as usize - 1)).collect();
        Graph::new(self.vertex_count, edges).expect("face edges are in range")
    }

    /// A connected sphere (closed, `χ = 2`) or disk (`χ = 1`, one boundary
    /// circuit).
    pub fn is_planar_surface(&self) -> bool {
        if self.faces.is_empty() || !self.skeleton().is_connected() {
            return false;
        }
        if self.is_closed() {
            return self.euler_characteristic() == 2;
        }
        if self.euler_characteristic() != 1 {
            return false;
        }
        let boundary = self.boundary_edges();
        let mut degree: BTreeMap<VertexId, usize> = BTreeMap::new();
        for &(a, b) in &boundary {
            *degree.entry(a).or_default() += 1;
            *degree.entry(b).or_default() += 1;
        }
        if degree.values().any(|&d| d != 2) {
            return false;
        }
        // one circuit: the boundary edges form a connected 2-regular graph
        let ids: Vec<VertexId> = degree.keys().copied().collect();
        let index = |v: VertexId| ids.binary_search(&v).unwrap();
        Graph::new(ids.len(), boundary.iter().map(|&(a, b)| (index(a), index(b))))
            .map(|g| g.is_connected())
            .unwrap_or(false)
    }

    fn opposite(&self, face: usize, e: Edge) -> Edge {
        let f = &self.faces[face];
        let k = (0..4).find(|&k| edge(f[k], f[(k + 1) % 4]) == e).expect("edge lies in face");
        edge(f[(k + 2) % 4], f[(k + 3) % 4])
    }

    fn other_face(&self, e: Edge, face: usize) -> Option<usize> {
        self.incidence[&e].iter().copied().find(|&f| f != face)
    }

    /// Every zone, each edge in exactly one. Paths (from boundary edges)
    /// come first, then circuits, each started at its smallest edge.
    pub fn zones(&self) -> Vec<Zone> {
        let mut visited: BTreeSet<Edge> = BTreeSet::new();
        let mut zones = Vec::new();
        let starts = self
            .boundary_edges()
            .into_iter()
            .chain(self.incidence.iter().filter(|(_, f)| f.len() == 2).map(|(&e, _)| e))
            .collect_vec();
        for start in starts {
            if visited.contains(&start) {
                continue;
            }
            let open = self.incidence[&start].len() == 1;
            let mut edges = vec![start];
            let mut faces = Vec::new();
            visited.insert(start);
            let (mut current, mut face) = (start, self.incidence[&start][0]);
            loop {
                faces.push(face);
                let next = self.opposite(face, current);
                if next == start {
                    break;
                }
                visited.insert(next);
                edges.push(next);
                match self.other_face(next, face) {
                    Some(f) => {
                        current = next;
                        face = f;
                    }
                    None => break,
                }
            }
            zones.push(Zone { edges, faces, closed: !open });
        }
        zones
    }

    /// No face is traversed twice.
    pub fn zone_is_simple(&self, zone: &Zone) -> bool {
        zone.faces.iter().collect::<BTreeSet<_>>().len() == zone.faces.len()
    }

    /// The band of the zone (all edges of its faces) is an isometric
    /// subgraph of the skeleton.
    pub fn zone_is_convex(&self, zone: &Zone) -> Result<bool> {
        if !self.zone_is_simple(zone) {
            return Err(Error::ZoneNotSimple);
        }
        let band_edges: BTreeSet<Edge> = zone
            .faces
            .iter()
            .flat_map(|&f| {
                let q = self.faces[f];
                (0..4).map(move |k| edge(q[k], q[(k + 1) % 4]))
            })
            .collect();
        let vertices: Vec<VertexId> =
            band_edges.iter().flat_map(|&(a, b)| [a, b]).sorted().dedup().collect();
        let index = |v: VertexId| vertices.binary_search(&v).unwrap();
        let band = Graph::new(vertices.len(), band_edges.iter().map(|&(a, b)| (index(a), index(b))))?;
        let skeleton = self.skeleton();
        Ok((0..vertices.len()).all(|i| {
            (0..i).all(|j| {
                band.distance(i, j)
                    == skeleton.distance(vertices[i] as usize - 1, vertices[j] as usize - 1)
            })
        }))
    }

    pub fn embeddable_by_zones(&self) -> ZoneCriterion {
        let zones = self.zones();
        let zones_simple = zones.iter().all(|z| self.zone_is_simple(z));
        let zones_convex =
            zones_simple && zones.iter().all(|z| self.zone_is_convex(z).unwrap_or(false));
        ZoneCriterion {
            embeddable: zones_simple && zones_convex,
            zones_simple,
            zones_convex,
            planar_bipartite: self.is_planar_surface() && self.skeleton().is_bipartite(),
        }
    }

    /// Number of faces at each vertex; the set of those numbers.
    pub fn quadrillage_type(&self) -> Result<BTreeSet<usize>> {
        if !self.is_closed() {
            return Err(Error::NotClosed);
        }
        let mut counts: BTreeMap<VertexId, usize> = BTreeMap::new();
        for face in &self.faces {
            for &v in face {
                *counts.entry(v).or_default() += 1;
            }
        }
        Ok(counts.into_values().collect())
    }

    /// Boundary of the 3-cube; vertex `1 + x + 2y + 4z`.
    pub fn cube() -> Self {
        let id = |bits: [u32; 3]| 1 + bits[0] + 2 * bits[1] + 4 * bits[2];
        let mut faces = Vec::new();
        for axis in 0..3 {
            let (b, c) = ((axis + 1) % 3, (axis + 2) % 3);
            for side in 0..2 {
                let corner = |u: u32, w: u32| {
                    let mut bits = [0; 3];
                    bits[axis] = side;
                    bits[b] = u;
                    bits[c] = w;
                    id(bits)
                };
                faces.push([corner(0, 0), corner(1, 0), corner(1, 1), corner(0, 1)]);
            }
        }
        Self::new(8, faces).expect("cube is valid")
    }

    /// `p × q` squares; vertex `(i, j)`, `0 <= i <= p`, `0 <= j <= q`, has id
    /// `1 + i (q + 1) + j`.
    pub fn grid(p: usize, q: usize) -> Result<Self> {
        if p < 1 || q < 1 {
            return Err(Error::OutOfRange { what: "grid size", detail: format!("{p}x{q}") });
        }
        let id = |i: usize, j: usize| (1 + i * (q + 1) + j) as VertexId;
        let faces = (0..p)
            .cartesian_product(0..q)
            .map(|(i, j)| [id(i, j), id(i + 1, j), id(i + 1, j + 1), id(i, j + 1)])
            .collect();
        Self::new((p + 1) * (q + 1), faces)
    }

    /// `C_p × C_q` on the torus; vertex `(i, j)` has id `1 + i q + j`.
    pub fn torus(p: usize, q: usize) -> Result<Self> {
        if p < 3 || q < 3 {
            return Err(Error::OutOfRange { what: "torus size", detail: format!("{p}x{q}") });
        }
        let id = |i: usize, j: usize| (1 + (i % p) * q + j % q) as VertexId;
        let faces = (0..p)
            .cartesian_product(0..q)
            .map(|(i, j)| [id(i, j), id(i + 1, j), id(i + 1, j + 1), id(i, j + 1)])
            .collect();
        Self::new(p * q, faces)
    }

    /// The rhombic dodecahedron: ids `1..=8` are the cube corners
    /// `1 + x + 2y + 4z` (valency 3), `9..=14` the axis points
    /// `+x, -x, +y, -y, +z, -z` (valency 4). One rhombus per pair of
    /// orthogonal axis points.
    pub fn dual_cuboctahedron() -> Self {
        let corner = |signs: [u32; 3]| 1 + signs[0] + 2 * signs[1] + 4 * signs[2];
        let axis_point = |axis: usize, positive: u32| 9 + 2 * axis as u32 + (1 - positive);
        let mut faces = Vec::new();
        for (a, b) in (0..3).tuple_combinations() {
            let c = 3 - a - b;
            for (sa, sb) in (0..2).cartesian_product(0..2) {
                let at = |sc: u32| {
                    let mut s = [0; 3];
                    s[a] = sa;
                    s[b] = sb;
                    s[c] = sc;
                    corner(s)
                };
                faces.push([axis_point(a, sa), at(1), axis_point(b, sb), at(0)]);
            }
        }
        Self::new(14, faces).expect("rhombic dodecahedron is valid")
    }
}
