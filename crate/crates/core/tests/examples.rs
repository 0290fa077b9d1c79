//! Worked examples with values recomputed independently in the test.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use num_rational::BigRational;
use short_links::complex::{Closedness, Face};
use short_links::format::{parse_graph, parse_quad, parse_simplicial};
use short_links::metric::{
    a_m, embedding_from_cuts, is_scaled_embedding, kgonal_violations, make_graph, partial_cube,
    CutDecomposition, GonalVector, Graph, GraphKind,
};
use short_links::{build_kp, classify, Error, Partition, Quadrillage, SimplicialComplex};

fn fixture(name: &str) -> String {
    std::fs::read_to_string(format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

fn figure_one() -> SimplicialComplex {
    parse_simplicial(&fixture("figure1.simplicial")).unwrap()
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn figure_one_edges_from_facet_pairs() {
    let k = figure_one();
    let pairs: BTreeSet<(u32, u32)> = k
        .facets()
        .iter()
        .flat_map(|f| f.vertices().iter().copied().tuple_combinations())
        .collect();
    assert_eq!(pairs.len(), 20);
    assert_eq!(k.faces_of_dim(1).unwrap().len(), 20);
    let missing: Vec<(u32, u32)> =
        (1..=7).tuple_combinations().filter(|p| !pairs.contains(p)).collect();
    assert_eq!(missing, vec![(2, 5)]);
    let g = k.skeleton();
    assert_eq!(g.complement_matching(), Some(1));
    assert!(!g.has_edge(g.index_of(2).unwrap(), g.index_of(5).unwrap()));
}

#[test]
fn figure_one_triangle_incidences() {
    let k = figure_one();
    let mut count: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
    for f in k.facets() {
        for t in f.vertices().iter().copied().combinations(3) {
            *count.entry(t).or_default() += 1;
        }
    }
    assert!(count.values().all(|&c| c == 2));
    assert_eq!(k.closedness(), Closedness::Closed);
}

#[test]
fn figure_one_is_not_short_linked() {
    assert_eq!(classify(&figure_one()), Err(Error::NotShortLinked(vec![3, 4, 5])));
    assert_eq!(figure_one().complex_type().unwrap(), BTreeSet::from([3, 4, 5]));
}

#[test]
fn sphere_euler_characteristics() {
    for (m, chi) in [(4, 0), (5, 2)] {
        for p in short_links::enumerate_partitions(m).unwrap() {
            assert_eq!(build_kp(&p).euler_characteristic(), chi, "{p}");
        }
    }
}

#[test]
fn six_facet_complex_by_hand() {
    let k = build_kp(&"1|2,3".parse().unwrap());
    let by_hand = SimplicialComplex::from_vertex_lists(
        2,
        [[1, 2, 3], [4, 2, 3], [1, 5, 3], [1, 2, 5], [4, 5, 3], [4, 2, 5]],
    )
    .unwrap();
    assert_eq!(k, by_hand);
    let facet = Face::new([1, 2, 3]).unwrap();
    assert_eq!(k.characteristic_parts(&facet).unwrap(), vec![vec![1], vec![2, 3]]);
    assert_eq!(k.characteristic_partition(&facet).unwrap(), "1|2,3".parse::<Partition>().unwrap());
}

#[test]
fn k7_minus_c5_size() {
    let g = parse_graph(&fixture("k7_minus_c5.graph")).unwrap();
    assert_eq!((g.vertex_count(), g.edge_count()), (7, 21 - 5));
    assert_eq!(g, make_graph(GraphKind::CompleteMinusCycle { m: 7, h: 5 }).unwrap());
}

#[test]
fn octahedron_vertex_link_is_isometric() {
    let k = parse_simplicial(&fixture("octahedron.simplicial")).unwrap();
    let link = k.link_of_face(&Face::new([1]).unwrap()).unwrap();
    assert_eq!(link.sizes, vec![4]);
    let g = k.skeleton();
    let cycle: Vec<usize> = link.cycles[0].iter().map(|&v| g.index_of(v).unwrap()).collect();
    assert!(g.is_isometric_cycle(&cycle).unwrap());
    // antipodes on the 4-cycle are at distance 2 in the skeleton too
    assert_eq!(g.distance(cycle[0], cycle[2]), Some(2));
    assert_eq!(classify(&k).unwrap(), "1|2|3".parse().unwrap());
}

#[test]
fn k5_minus_k3_five_gonal_witness() {
    let g = parse_graph(&fixture("k5_minus_k3.graph")).unwrap();
    let b = GonalVector::new(vec![1, 1, 1, -1, -1]).unwrap();
    // three pairs at distance 2 among the +1s, one edge among the -1s,
    // six cross pairs at distance 1
    assert_eq!(b.value(&g), 2 + 2 + 2 + 1 - 6);
    assert!(kgonal_violations(&g, 2).unwrap().contains(&b));
}

/// All binary addresses of length `dim` for `g`, found by brute force.
fn brute_force_cube(g: &Graph, dim: usize) -> bool {
    let n = g.vertex_count();
    (0..n)
        .map(|_| 0u32..1 << dim)
        .multi_cartesian_product()
        .any(|a| {
            (0..n).tuple_combinations().all(|(i, j)| {
                (a[i] ^ a[j]).count_ones() == g.distance(i, j).unwrap()
            })
        })
}

#[test]
fn partial_cube_examples_against_brute_force() {
    let c6 = make_graph(GraphKind::Cycle(6)).unwrap();
    assert_eq!(partial_cube(&c6).unwrap().map(|l| l.dim), Some(3));
    assert!(brute_force_cube(&c6, 3));
    let k23 = Graph::new(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
    assert!(partial_cube(&k23).unwrap().is_none());
    assert!(!brute_force_cube(&k23, 4));
}

fn half() -> BigRational {
    BigRational::new(1.into(), 2.into())
}

#[test]
fn pentagon_from_adjacent_cuts() {
    let c5 = make_graph(GraphKind::Cycle(5)).unwrap();
    let cuts = (0..5).map(|i| (vec![i, (i + 1) % 5], half())).collect();
    let d = CutDecomposition::new(5, cuts).unwrap();
    for (i, j) in (0..5).tuple_combinations() {
        let separating = (0..5)
            .filter(|&k| {
                let side = [k, (k + 1) % 5];
                side.contains(&i) != side.contains(&j)
            })
            .count();
        let expected = c5.distance(i, j).unwrap() as usize;
        assert_eq!(separating, 2 * expected);
    }
    assert!(d.realizes(&c5));
    let e = embedding_from_cuts(&d).unwrap();
    assert_eq!((e.scale, e.dim()), (2, 5));
    assert!(is_scaled_embedding(&c5, 2, &e.addresses));
}

#[test]
fn k4_from_balanced_splits() {
    let k4 = make_graph(GraphKind::Complete(4)).unwrap();
    let cuts = vec![(vec![0, 1], half()), (vec![0, 2], half()), (vec![0, 3], half())];
    let e = embedding_from_cuts(&CutDecomposition::new(4, cuts).unwrap()).unwrap();
    assert_eq!((e.scale, e.dim()), (2, 3));
    for (i, j) in (0..4).tuple_combinations() {
        assert_eq!(e.addresses[i].hamming(&e.addresses[j]), 2);
    }
    assert!(is_scaled_embedding(&k4, 2, &e.addresses));
}

#[test]
fn a_m_matches_binomials() {
    assert_eq!(a_m(6).unwrap(), binomial(4, 2));
    for m in 3..=20u64 {
        let expected =
            if m % 2 == 0 { binomial(m - 2, m / 2 - 1) } else { 2 * binomial(m - 2, (m - 3) / 2) };
        assert_eq!(a_m(m).unwrap(), expected, "m = {m}");
    }
}

#[test]
fn dual_cuboctahedron_counts() {
    let rd = parse_quad(&fixture("dual_cuboctahedron.quad")).unwrap();
    assert_eq!(rd, Quadrillage::dual_cuboctahedron());
    // the cuboctahedron has 12 vertices, 24 edges, 14 faces
    assert_eq!((rd.vertex_count(), rd.edge_count(), rd.faces().len()), (14, 24, 12));
    assert_eq!(rd.quadrillage_type().unwrap(), BTreeSet::from([3, 4]));
    let zones = rd.zones();
    assert_eq!(zones.len(), 4);
    for z in &zones {
        assert_eq!(z.len(), 6);
        assert!(rd.zone_is_simple(z));
        assert!(rd.zone_is_convex(z).unwrap());
    }
    assert!(partial_cube(&rd.skeleton()).unwrap().is_some());
}

#[test]
fn cube_and_torus_zones() {
    let cube = Quadrillage::cube();
    assert!(cube.zones().iter().all(|z| z.len() == 4 && cube.zone_is_simple(z)));
    assert!(cube.zones().iter().all(|z| cube.zone_is_convex(z).unwrap()));
    let torus = Quadrillage::torus(4, 4).unwrap();
    assert_eq!(torus.zones().len(), 8);
    assert!(torus.zones().iter().all(|z| torus.zone_is_simple(z)));
}

#[test]
fn grid_zones_and_embedding() {
    let g33 = Quadrillage::grid(3, 3).unwrap();
    assert!(g33.zones().iter().all(|z| g33.zone_is_convex(z).unwrap()));
    let g23 = Quadrillage::grid(2, 3).unwrap();
    assert!(g23.embeddable_by_zones().embeddable);
    assert_eq!(partial_cube(&g23.skeleton()).unwrap().map(|l| l.dim), Some(5));
}

#[test]
fn non_simple_zone_is_not_convex() {
    let k23 = parse_quad(&fixture("k23.quad")).unwrap();
    let zones = k23.zones();
    assert_eq!(zones.len(), 1);
    assert!(!k23.zone_is_simple(&zones[0]));
    assert_eq!(k23.zone_is_convex(&zones[0]), Err(Error::ZoneNotSimple));
    let verdict = k23.embeddable_by_zones();
    assert!(verdict.planar_bipartite && !verdict.embeddable);
}
