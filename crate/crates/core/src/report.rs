//! Analysis reports for complexes, quadrillages and graphs, and the table of
//! type-`{3,4}` complexes. Every report renders as aligned text or as TSV
//! with one `key<TAB>value` row per field.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::complex::{Closedness, Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::metric::{
    cut_cone_decompose, embedding_from_cuts, five_gonal_violations, kgonal_violations,
    partial_cube, CutConeVerdict, GonalVector, Graph,
};
use crate::partition::{build_kp, classify, enumerate_partitions, kp_summary, Partition};
use crate::quadrillage::{Quadrillage, ZoneCriterion};
use crate::symmetry::{automorphisms, coxeter_order_bruteforce, vertex_orbits};

/// A computed value, or the reason it was not computed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Check<T> {
    Done(T),
    Skipped(String),
}

impl<T> Check<T> {
    fn from_result(r: Result<T>) -> Self {
        match r {
            Ok(v) => Check::Done(v),
            Err(e) => Check::Skipped(e.to_string()),
        }
    }

    pub fn done(&self) -> Option<&T> {
        match self {
            Check::Done(v) => Some(v),
            Check::Skipped(_) => None,
        }
    }

    fn render(&self, f: impl FnOnce(&T) -> String) -> String {
        match self {
            Check::Done(v) => f(v),
            Check::Skipped(why) => format!("skipped ({why})"),
        }
    }
}

type Fields = Vec<(String, String)>;

fn render_text(fields: &Fields) -> String {
    let width = fields.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    fields.iter().fold(String::new(), |mut out, (k, v)| {
        let _ = writeln!(out, "{k:<width$}  {v}");
        out
    })
}

fn render_tsv(fields: &Fields) -> String {
    fields.iter().fold(String::new(), |mut out, (k, v)| {
        let _ = writeln!(out, "{k}\t{v}");
        out
    })
}

fn set_string(set: &BTreeSet<usize>) -> String {
    format!("{{{}}}", set.iter().map(usize::to_string).collect::<Vec<_>>().join(","))
}

/// `b` restricted to its support, written against the vertex labels.
fn witness(graph: &Graph, b: &GonalVector) -> String {
    let terms: Vec<String> = b
        .coefficients()
        .iter()
        .enumerate()
        .filter(|(_, &x)| x != 0)
        .map(|(i, x)| format!("{}:{x:+}", graph.label(i)))
        .collect();
    format!("b=({}) value {:+}", terms.join(" "), b.value(graph))
}

/// Embeddability tests on the path metric of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddabilityReport {
    pub hypermetric_bound: usize,
    /// First violated 5-gonal inequality, if any.
    pub five_gonal: Check<Option<GonalVector>>,
    /// First violated hypermetric inequality up to the bound, if any.
    pub hypermetric: Check<Option<GonalVector>>,
    pub cut_cone: Check<CutConeVerdict>,
    /// Dimension of the isometric hypercube embedding, if one exists.
    pub partial_cube: Check<Option<usize>>,
    /// Scale of the embedding read off the cut decomposition.
    pub cut_scale: Option<u64>,
}

impl EmbeddabilityReport {
    pub fn new(graph: &Graph, hypermetric_bound: usize) -> Self {
        let first = |r: Result<Vec<GonalVector>>| Check::from_result(r.map(|v| v.into_iter().next()));
        let cut_cone = Check::from_result(cut_cone_decompose(graph));
        let cut_scale = cut_cone
            .done()
            .and_then(CutConeVerdict::decomposition)
            .and_then(|d| embedding_from_cuts(d).ok())
            .map(|e| e.scale);
        EmbeddabilityReport {
            hypermetric_bound,
            five_gonal: first(five_gonal_violations(graph)),
            hypermetric: first(kgonal_violations(graph, hypermetric_bound)),
            cut_cone,
            partial_cube: Check::from_result(partial_cube(graph).map(|p| p.map(|l| l.dim))),
            cut_scale,
        }
    }

    /// One-line summary, e.g. `hypermetric up to bound 3; NOT L1-embeddable`.
    pub fn verdict(&self) -> String {
        let k = self.hypermetric_bound;
        if let Check::Done(Some(_)) = self.five_gonal {
            return "NOT 5-gonal; NOT L1-embeddable".into();
        }
        if let Check::Done(Some(_)) = self.hypermetric {
            return format!("5-gonal; NOT hypermetric (bound {k}); NOT L1-embeddable");
        }
        let prefix = match self.hypermetric {
            Check::Done(None) => format!("hypermetric up to bound {k}"),
            Check::Skipped(_) => "hypermetricity not decided".into(),
            Check::Done(Some(_)) => unreachable!(),
        };
        match (&self.cut_cone, &self.partial_cube) {
            (_, Check::Done(Some(dim))) => {
                format!("{prefix}; L1-embeddable; isometric in the {dim}-cube")
            }
            (Check::Done(CutConeVerdict::Feasible(_)), _) => match self.cut_scale {
                Some(scale) => format!("{prefix}; L1-embeddable (scale {scale})"),
                None => format!("{prefix}; L1-embeddable"),
            },
            (Check::Done(CutConeVerdict::Infeasible(_)), _) => format!("{prefix}; NOT L1-embeddable"),
            (Check::Skipped(why), _) => format!("{prefix}; L1-embeddability not decided ({why})"),
        }
    }

    fn fields(&self, graph: &Graph) -> Fields {
        let gonal = |c: &Check<Option<GonalVector>>| {
            c.render(|v| match v {
                None => "ok".into(),
                Some(b) => format!("violated {}", witness(graph, b)),
            })
        };
        vec![
            ("5-gonal".into(), gonal(&self.five_gonal)),
            (format!("hypermetric (bound {})", self.hypermetric_bound), gonal(&self.hypermetric)),
            (
                "cut cone".into(),
                self.cut_cone.render(|v| match v {
                    CutConeVerdict::Feasible(d) => format!("feasible ({} cuts)", d.cuts().len()),
                    CutConeVerdict::Infeasible(_) => "infeasible (Farkas certificate)".into(),
                }),
            ),
            (
                "partial cube".into(),
                self.partial_cube.render(|p| match p {
                    Some(dim) => format!("yes, dimension {dim}"),
                    None => "no".into(),
                }),
            ),
            ("verdict".into(), self.verdict()),
        ]
    }
}

/// A link of length at least 5 and whether its cycle is isometric in the
/// skeleton.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LongLink {
    pub face: Face,
    pub cycle: Vec<u32>,
    pub isometric: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexReport {
    pub dim: usize,
    pub f_vector: Vec<usize>,
    pub closedness: Closedness,
    pub euler_characteristic: i64,
    pub complex_type: Check<BTreeSet<usize>>,
    pub long_links: Check<Vec<LongLink>>,
    pub skeleton: Graph,
    /// `h` when the skeleton is `K_m - hK_2`.
    pub skeleton_matching: Option<usize>,
    pub classification: Check<Partition>,
    pub embeddability: EmbeddabilityReport,
}

impl ComplexReport {
    pub fn new(complex: &SimplicialComplex, hypermetric_bound: usize) -> Self {
        let skeleton = complex.skeleton();
        let long_links = Check::from_result(complex.links().and_then(|links| {
            links
                .into_iter()
                .filter_map(|l| l.length().filter(|&len| len >= 5).map(|_| l))
                .map(|l| {
                    let cycle = l.cycles[0].clone();
                    let indices: Vec<usize> =
                        cycle.iter().map(|&v| skeleton.index_of(v).expect("link vertex")).collect();
                    let isometric = skeleton.is_isometric_cycle(&indices)?;
                    Ok(LongLink { face: l.face, cycle, isometric })
                })
                .collect()
        }));
        ComplexReport {
            dim: complex.dim(),
            f_vector: complex.f_vector(),
            closedness: complex.closedness(),
            euler_characteristic: complex.euler_characteristic(),
            complex_type: Check::from_result(complex.complex_type()),
            long_links,
            skeleton_matching: skeleton.complement_matching(),
            classification: Check::from_result(classify(complex)),
            embeddability: EmbeddabilityReport::new(&skeleton, hypermetric_bound),
            skeleton,
        }
    }

    /// Long links that are isometric cycles in a closed complex of dimension
    /// at least 3, each of which rules out a hypercube embedding.
    pub fn obstructions(&self) -> Vec<&LongLink> {
        let applies = self.dim >= 3 && self.closedness == Closedness::Closed;
        match &self.long_links {
            Check::Done(links) if applies => links.iter().filter(|l| l.isometric).collect(),
            _ => Vec::new(),
        }
    }

    fn fields(&self) -> Fields {
        let g = &self.skeleton;
        let mut fields: Fields = vec![
            ("dimension".into(), self.dim.to_string()),
            ("f-vector".into(), format!("{:?}", self.f_vector)),
            (
                "closed".into(),
                match &self.closedness {
                    Closedness::Closed => "yes".into(),
                    Closedness::Boundary(faces) => format!("no, {} boundary faces", faces.len()),
                    Closedness::Bad { face, count } => format!("no, face {face} lies in {count} facets"),
                },
            ),
            ("euler characteristic".into(), self.euler_characteristic.to_string()),
            ("type".into(), self.complex_type.render(set_string)),
        ];
        match &self.long_links {
            Check::Done(links) => {
                for l in links {
                    let cycle = l.cycle.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
                    let kind = if l.isometric { "isometric" } else { "not isometric" };
                    fields.push((format!("link {}", l.face), format!("C{} ({cycle}) {kind}", l.cycle.len())));
                }
            }
            Check::Skipped(why) => fields.push(("links".into(), format!("skipped ({why})"))),
        }
        let identified = match self.skeleton_matching {
            Some(h) => format!(", K{}-{h}K2", g.vertex_count()),
            None => String::new(),
        };
        fields.push((
            "skeleton".into(),
            format!("{} vertices, {} edges{identified}", g.vertex_count(), g.edge_count()),
        ));
        fields.push(("classification".into(), self.classification.render(|p| p.to_string())));
        let obstructions = self.obstructions();
        if !obstructions.is_empty() {
            let faces: Vec<String> = obstructions.iter().map(|l| l.face.to_string()).collect();
            fields.push((
                "warning".into(),
                format!("isometric long link at {}; skeleton not embeddable", faces.join(" ")),
            ));
        }
        fields.extend(self.embeddability.fields(g));
        fields
    }

    pub fn to_text(&self) -> String {
        render_text(&self.fields())
    }

    pub fn to_tsv(&self) -> String {
        render_tsv(&self.fields())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZoneSummary {
    pub length: usize,
    pub closed: bool,
    pub simple: bool,
    /// `None` for non-simple zones.
    pub convex: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadReport {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub face_count: usize,
    pub closed: bool,
    pub euler_characteristic: i64,
    pub quad_type: Check<BTreeSet<usize>>,
    pub zones: Vec<ZoneSummary>,
    pub criterion: ZoneCriterion,
    pub partial_cube: Check<Option<usize>>,
}

impl QuadReport {
    pub fn new(quad: &Quadrillage) -> Self {
        let zones = quad
            .zones()
            .iter()
            .map(|z| {
                let simple = quad.zone_is_simple(z);
                ZoneSummary {
                    length: z.len(),
                    closed: z.closed,
                    simple,
                    convex: simple.then(|| quad.zone_is_convex(z).unwrap_or(false)),
                }
            })
            .collect();
        QuadReport {
            vertex_count: quad.vertex_count(),
            edge_count: quad.edge_count(),
            face_count: quad.faces().len(),
            closed: quad.is_closed(),
            euler_characteristic: quad.euler_characteristic(),
            quad_type: Check::from_result(quad.quadrillage_type()),
            zones,
            criterion: quad.embeddable_by_zones(),
            partial_cube: Check::from_result(partial_cube(&quad.skeleton()).map(|p| p.map(|l| l.dim))),
        }
    }

    fn fields(&self) -> Fields {
        let yes_no = |b: bool| if b { "yes" } else { "no" }.to_string();
        let mut fields: Fields = vec![
            (
                "size".into(),
                format!("{} vertices, {} edges, {} faces", self.vertex_count, self.edge_count, self.face_count),
            ),
            ("closed".into(), yes_no(self.closed)),
            ("euler characteristic".into(), self.euler_characteristic.to_string()),
            ("type".into(), self.quad_type.render(set_string)),
            ("zones".into(), self.zones.len().to_string()),
        ];
        for (i, z) in self.zones.iter().enumerate() {
            let shape = if z.closed { "circuit" } else { "path" };
            let convex = match z.convex {
                Some(true) => "convex",
                Some(false) => "not convex",
                None => "not simple",
            };
            fields.push((format!("zone {}", i + 1), format!("length {}, {shape}, {convex}", z.length)));
        }
        fields.push(("planar bipartite".into(), yes_no(self.criterion.planar_bipartite)));
        let criterion = match (self.criterion.planar_bipartite, self.criterion.embeddable) {
            (true, true) => "embeddable".to_string(),
            (true, false) => "not embeddable".to_string(),
            (false, all) => format!("not applicable; zones simple and convex: {}", yes_no(all)),
        };
        fields.push(("zone criterion".into(), criterion));
        fields.push((
            "partial cube".into(),
            self.partial_cube.render(|p| match p {
                Some(dim) => format!("yes, dimension {dim}"),
                None => "no".into(),
            }),
        ));
        fields
    }

    pub fn to_text(&self) -> String {
        render_text(&self.fields())
    }

    pub fn to_tsv(&self) -> String {
        render_tsv(&self.fields())
    }
}

/// Embeddability of a graph given directly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphReport {
    pub graph: Graph,
    pub embeddability: EmbeddabilityReport,
}

impl GraphReport {
    pub fn new(graph: &Graph, hypermetric_bound: usize) -> Self {
        GraphReport { graph: graph.clone(), embeddability: EmbeddabilityReport::new(graph, hypermetric_bound) }
    }

    fn fields(&self) -> Fields {
        let g = &self.graph;
        let identified = match g.complement_matching() {
            Some(h) => format!(", K{}-{h}K2", g.vertex_count()),
            None => String::new(),
        };
        let mut fields: Fields = vec![(
            "graph".into(),
            format!("{} vertices, {} edges{identified}", g.vertex_count(), g.edge_count()),
        )];
        fields.extend(self.embeddability.fields(g));
        fields
    }

    pub fn to_text(&self) -> String {
        render_text(&self.fields())
    }

    pub fn to_tsv(&self) -> String {
        render_tsv(&self.fields())
    }
}

/// Largest `m` accepted by [`table`]; `m = D + 1` for `D <= 6`.
pub const TABLE_MAX_DIM: usize = 6;

/// Table rows for every canonical partition of `m = 3..=max_dim + 1`:
/// partition, skeleton, facets, `|Aut|`, vertex orbits, `|Cox|`. With
/// `verify`, a last column reports whether brute force reproduces every
/// count (`yes`), contradicts one (`no`), or was out of reach (`-`).
pub fn table(max_dim: usize, verify: bool) -> Result<String> {
    if !(2..=TABLE_MAX_DIM).contains(&max_dim) {
        return Err(Error::OutOfRange { what: "max dimension", detail: format!("{max_dim} not in 2..={TABLE_MAX_DIM}") });
    }
    let mut out = String::from("partition\tskeleton\tfacets\taut_order\tvertex_orbits\tcox_order");
    out.push_str(if verify { "\tverified\n" } else { "\n" });
    for m in 3..=max_dim + 1 {
        for p in enumerate_partitions(m)? {
            let s = kp_summary(&p);
            let _ = write!(
                out,
                "{p}\t{}\t{}\t{}\t{}\t{}",
                s.skeleton_name(),
                s.facet_count,
                s.aut_order,
                s.vertex_orbit_count,
                s.cox_order
            );
            if verify {
                let mark = match verify_row(&p) {
                    Ok(true) => "yes",
                    Ok(false) => "no",
                    Err(e) if e.is_guard() => "-",
                    Err(e) => return Err(e),
                };
                out.push('\t');
                out.push_str(mark);
            }
            out.push('\n');
        }
    }
    Ok(out)
}

/// Recomputes one table row from the built complex.
pub fn verify_row(partition: &Partition) -> Result<bool> {
    let s = kp_summary(partition);
    let complex = build_kp(partition);
    let skeleton = complex.skeleton();
    let shape_ok = complex.facet_count() as u128 == s.facet_count
        && skeleton.vertex_count() == s.skeleton_m
        && skeleton.complement_matching() == Some(s.skeleton_h);
    let auts = automorphisms(&complex)?;
    let cox = coxeter_order_bruteforce(partition)?;
    Ok(shape_ok
        && auts.len() as u128 == s.aut_order
        && vertex_orbits(&complex, &auts).len() == s.vertex_orbit_count
        && cox == s.cox_order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::{make_graph, GraphKind};

    #[test]
    fn table_shape() {
        let t = table(2, false).unwrap();
        assert_eq!(t.lines().count(), 4);
        assert!(t.lines().nth(1).unwrap().starts_with("1,2,3\tK4-0K2\t4\t24\t1\t24"));
        assert!(table(1, false).is_err());
        assert!(table(7, false).is_err());
    }

    #[test]
    fn verified_table_small() {
        let t = table(3, true).unwrap();
        assert!(t.lines().skip(1).all(|l| l.ends_with("\tyes")), "{t}");
    }

    #[test]
    fn graph_verdicts() {
        let k7c5 = make_graph(GraphKind::CompleteMinusCycle { m: 7, h: 5 }).unwrap();
        assert_eq!(
            EmbeddabilityReport::new(&k7c5, 3).verdict(),
            "hypermetric up to bound 3; NOT L1-embeddable"
        );
        let k5k3 = make_graph(GraphKind::CompleteMinusCycle { m: 5, h: 3 }).unwrap();
        let r = EmbeddabilityReport::new(&k5k3, 3);
        assert_eq!(r.verdict(), "NOT 5-gonal; NOT L1-embeddable");
        let text = GraphReport::new(&k5k3, 3).to_text();
        assert!(text.contains("value +1"), "{text}");
        let q3 = make_graph(GraphKind::Hypercube(3)).unwrap();
        assert!(EmbeddabilityReport::new(&q3, 3).verdict().ends_with("isometric in the 3-cube"));
    }

    #[test]
    fn octahedron_report() {
        let octa = build_kp(&"1|2|3".parse().unwrap());
        let r = ComplexReport::new(&octa, 3);
        assert_eq!(r.complex_type, Check::Done(BTreeSet::from([4])));
        assert_eq!(r.classification, Check::Done("1|2|3".parse().unwrap()));
        assert!(r.to_tsv().contains("type\t{4}\n"));
    }

    #[test]
    fn cube_report() {
        let r = QuadReport::new(&Quadrillage::cube());
        assert_eq!(r.zones.len(), 3);
        assert!(r.zones.iter().all(|z| z.length == 4 && z.convex == Some(true)));
        assert!(r.criterion.embeddable);
        assert_eq!(r.partial_cube, Check::Done(Some(3)));
    }

    #[test]
    fn open_complex_is_partial() {
        let disk = SimplicialComplex::from_vertex_lists(2, [[1, 2, 3], [1, 3, 4]]).unwrap();
        let r = ComplexReport::new(&disk, 3);
        assert!(matches!(r.complex_type, Check::Skipped(_)));
        assert!(matches!(r.classification, Check::Skipped(_)));
        assert!(r.to_text().contains("no, 4 boundary faces"));
    }
}
