//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
//! the process fails if any criterion fails.

use std::collections::{BTreeMap, BTreeSet};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use short_links::complex::{are_isomorphic, is_facet_bijection};
use short_links::format::{parse_graph, parse_quad, parse_simplicial};
use short_links::metric::{
    a_m, cut_cone_decompose, find_scaled_embedding, five_gonal_violations, kgonal_violations,
    make_graph, partial_cube, CutConeVerdict, Graph, GraphKind,
};
use short_links::symmetry::{
    automorphism_count, automorphisms, coxeter_order_bruteforce, vertex_orbits,
};
use short_links::{build_kp, classify, enumerate_partitions, product_dual, Face, Partition, Quadrillage};

type Outcome = Result<String, String>;

fn fixture(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "fixtures", name].iter().collect();
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, || format!("took {elapsed:.2?}, limit {limit:?}"))
}

fn factorial(k: usize) -> u128 {
    (1..=k as u128).product()
}

fn sizes(p: &Partition) -> Vec<usize> {
    let mut s: Vec<usize> = p.parts().iter().map(Vec::len).collect();
    s.sort_unstable();
    s
}

/// Brute-force counts for every Table 1 row, compared with the transcribed
/// values in the fixture.
fn table_reproduction() -> Outcome {
    let start = Instant::now();
    let golden = fixture("table1.tsv");
    let rows: Vec<Vec<&str>> = golden.lines().skip(1).map(|l| l.split('\t').collect()).collect();
    let partitions: Vec<Partition> =
        (3..=5).flat_map(|m| enumerate_partitions(m).unwrap()).collect();
    ensure(partitions.len() == 15 && rows.len() == 15, || {
        format!("{} partitions, {} table rows", partitions.len(), rows.len())
    })?;
    for (p, row) in partitions.iter().zip(&rows) {
        ensure(row[0] == p.to_string(), || format!("row {row:?} for partition {p}"))?;
        let k = build_kp(p);
        let g = k.skeleton();
        let h = g.complement_matching().ok_or_else(|| format!("{p}: skeleton not K_m-hK2"))?;
        let auts = automorphisms(&k).map_err(|e| e.to_string())?;
        let computed = [
            p.to_string(),
            format!("K{}-{h}K2", g.vertex_count()),
            k.facet_count().to_string(),
            auts.len().to_string(),
            vertex_orbits(&k, &auts).len().to_string(),
            coxeter_order_bruteforce(p).map_err(|e| e.to_string())?.to_string(),
        ];
        ensure(computed.iter().map(String::as_str).eq(row.iter().copied()), || {
            format!("{p}: computed {computed:?}, table {row:?}")
        })?;
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(10))?;
    Ok(format!("15 rows match in {elapsed:.2?}"))
}

/// Brute-force `|Aut|` and Coxeter closure against the product formulas for
/// every partition whose complex has at most 10 vertices.
fn formula_vs_oracle() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for m in 2..=9 {
        for p in enumerate_partitions(m).unwrap() {
            if m + p.part_count() > 10 {
                continue;
            }
            let s = sizes(&p);
            let cox: u128 = s.iter().map(|&n| factorial(n + 1)).product();
            let mut multiplicity: BTreeMap<usize, usize> = BTreeMap::new();
            for &n in &s {
                *multiplicity.entry(n).or_default() += 1;
            }
            let aut = cox * multiplicity.values().map(|&c| factorial(c)).product::<u128>();
            let k = build_kp(&p);
            let got_aut = automorphism_count(&k).map_err(|e| e.to_string())? as u128;
            let got_cox = coxeter_order_bruteforce(&p).map_err(|e| e.to_string())?;
            ensure(got_aut == aut && got_cox == cox, || {
                format!("{p}: |Aut| {got_aut} vs {aut}, |Cox| {got_cox} vs {cox}")
            })?;
            checked += 1;
        }
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(120))?;
    Ok(format!("{checked} partitions in {elapsed:.2?}"))
}

/// A 1-dimensional complex is closed with "type" `{l}` when it is one cycle of
/// length `l`; the link of the empty face is then the whole complex.
fn cycle_length(k: &short_links::SimplicialComplex) -> Option<usize> {
    let g = k.skeleton();
    let regular = (0..g.vertex_count()).all(|v| g.degree(v) == 2);
    (regular && g.is_connected()).then_some(g.vertex_count())
}

fn classification_soundness() -> Outcome {
    let mut checked = 0;
    for m in 2..=7 {
        for p in enumerate_partitions(m).unwrap() {
            let k = build_kp(&p);
            ensure(k.is_closed(), || format!("{p}: not closed"))?;
            let expected = sizes(&p);
            if m == 2 {
                // dimension 1: the complex is a triangle (one part) or a square
                let len = cycle_length(&k).ok_or_else(|| format!("{p}: not a cycle"))?;
                let parts = if len == 3 { vec![2] } else { vec![1, 1] };
                ensure(parts == expected, || format!("{p}: cycle of length {len}"))?;
            } else {
                let ty = k.complex_type().map_err(|e| e.to_string())?;
                ensure(ty.is_subset(&BTreeSet::from([3, 4])), || format!("{p}: type {ty:?}"))?;
                for facet in k.facets() {
                    let cp = k.characteristic_partition(facet).map_err(|e| e.to_string())?;
                    ensure(sizes(&cp) == expected, || format!("{p}: facet {facet} gives {cp}"))?;
                }
                let back = classify(&k).map_err(|e| e.to_string())?;
                ensure(back == p.canonical(), || format!("{p}: classified as {back}"))?;
            }
            if m <= 6 {
                let dual = product_dual(&p);
                let map = are_isomorphic(&dual, &k)
                    .map_err(|e| e.to_string())?
                    .ok_or_else(|| format!("{p}: product dual not isomorphic"))?;
                ensure(is_facet_bijection(&dual, &k, &map), || format!("{p}: bad bijection"))?;
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} partitions of m <= 7"))
}

fn same_skeleton_distinct() -> Outcome {
    let a = build_kp(&"1,2|3,4,5,6".parse().unwrap());
    let b = build_kp(&"1,2,3|4,5,6".parse().unwrap());
    for k in [&a, &b] {
        let g = k.skeleton();
        ensure(g.vertex_count() == 8 && g.edge_count() == 28, || {
            format!("skeleton has {} vertices, {} edges", g.vertex_count(), g.edge_count())
        })?;
    }
    let iso = are_isomorphic(&a, &b).map_err(|e| e.to_string())?;
    ensure(iso.is_none(), || "complexes reported isomorphic".into())?;
    Ok("both skeletons K8, complexes not isomorphic".into())
}

fn figure_one() -> Outcome {
    let k = parse_simplicial(&fixture("figure1.simplicial")).map_err(|e| e.to_string())?;
    ensure(k.dim() == 3 && k.facet_count() == 13 && k.is_closed(), || {
        "not a closed 3-complex with 13 facets".into()
    })?;
    let g = k.skeleton();
    ensure(g.vertex_count() == 7 && g.edge_count() == 20, || {
        format!("skeleton has {} vertices, {} edges", g.vertex_count(), g.edge_count())
    })?;
    let link = k.link_of_face(&Face::new([6, 7]).unwrap()).map_err(|e| e.to_string())?;
    ensure(link.cycles == vec![vec![1, 2, 3, 4, 5]], || format!("link {:?}", link.cycles))?;
    let cycle: Vec<usize> = link.cycles[0].iter().map(|&v| g.index_of(v).unwrap()).collect();
    ensure(!g.is_isometric_cycle(&cycle).map_err(|e| e.to_string())?, || {
        "link is isometric".into()
    })?;
    ensure(five_gonal_violations(&g).map_err(|e| e.to_string())?.is_empty(), || {
        "5-gonal violation".into()
    })?;
    ensure(kgonal_violations(&g, 3).map_err(|e| e.to_string())?.is_empty(), || {
        "hypermetric violation".into()
    })?;
    match cut_cone_decompose(&g).map_err(|e| e.to_string())? {
        CutConeVerdict::Feasible(d) => ensure(d.realizes(&g), || "decomposition wrong".into())?,
        CutConeVerdict::Infeasible(_) => return Err("cut cone infeasible".into()),
    }
    Ok("closed, K7-K2, link {6,7} = non-isometric C5, cut-cone feasible".into())
}

fn obstructions() -> Outcome {
    let k5k3 = parse_graph(&fixture("k5_minus_k3.graph")).map_err(|e| e.to_string())?;
    let violations = five_gonal_violations(&k5k3).map_err(|e| e.to_string())?;
    ensure(!violations.is_empty(), || "K5-K3 is 5-gonal".into())?;
    ensure(violations.iter().all(|b| b.value(&k5k3) == 1), || "violation value != 1".into())?;
    let start = Instant::now();
    let k7c5 = parse_graph(&fixture("k7_minus_c5.graph")).map_err(|e| e.to_string())?;
    ensure(kgonal_violations(&k7c5, 3).map_err(|e| e.to_string())?.is_empty(), || {
        "K7-C5 violates a bounded hypermetric inequality".into()
    })?;
    match cut_cone_decompose(&k7c5).map_err(|e| e.to_string())? {
        CutConeVerdict::Infeasible(y) => ensure(y.certifies(&k7c5), || "bad certificate".into())?,
        CutConeVerdict::Feasible(_) => return Err("K7-C5 reported L1-embeddable".into()),
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(30))?;
    Ok(format!("K5-K3 value +1; K7-C5 hypermetric to 3, LP infeasible in {elapsed:.2?}"))
}

fn scaled_embeddings() -> Outcome {
    for name in ["k5_minus_k2.graph", "k6_minus_3k2.graph"] {
        let g = parse_graph(&fixture(name)).map_err(|e| e.to_string())?;
        let addresses = find_scaled_embedding(&g, 2, 4)
            .map_err(|e| e.to_string())?
            .ok_or_else(|| format!("{name}: no embedding"))?;
        for i in 0..g.vertex_count() {
            for j in 0..g.vertex_count() {
                let hamming = addresses[i].0.iter().zip(&addresses[j].0).filter(|(x, y)| x != y).count();
                let expected = if i == j { 0 } else if g.has_edge(i, j) { 2 } else { 4 };
                ensure(hamming == expected && addresses[i].len() == 4, || {
                    format!("{name}: vertices {i},{j} at Hamming {hamming}")
                })?;
            }
        }
    }
    let values = [(3, 2), (4, 2), (6, 6)];
    for (m, want) in values {
        let got = a_m(m).map_err(|e| e.to_string())?;
        ensure(got == want, || format!("a_{m} = {got}, expected {want}"))?;
    }
    Ok("K5-K2 and K6-3K2 at scale 2 in Q4; a_3 = a_4 = 2, a_6 = 6".into())
}

/// Every connected graph on `n <= 6` vertices, as edge lists.
fn connected_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    (0u32..1 << pairs.len())
        .map(|mask| {
            Graph::new(n, pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e))
                .unwrap()
        })
        .filter(Graph::is_connected)
        .collect()
}

/// Exhaustive isometric placement into `Q_{n-1}`. An isometric embedding
/// uses at most `n - 1` non-constant coordinates, since each is flipped by
/// some edge of a spanning tree, so `n - 1` is enough.
fn exhaustive_cube_embedding(g: &Graph) -> Option<Vec<u32>> {
    let n = g.vertex_count();
    let dim = n.saturating_sub(1);
    let mut placed = vec![0u32; n];
    fn extend(g: &Graph, dim: usize, placed: &mut Vec<u32>, v: usize) -> bool {
        if v == g.vertex_count() {
            return true;
        }
        for a in 0..1u32 << dim {
            if (0..v).all(|u| (a ^ placed[u]).count_ones() == g.distance(u, v).unwrap()) {
                placed[v] = a;
                if extend(g, dim, placed, v + 1) {
                    return true;
                }
            }
        }
        false
    }
    extend(g, dim, &mut placed, 1).then_some(placed)
}

fn partial_cube_oracle() -> Outcome {
    let mut total = 0;
    let mut cubes = 0;
    for n in 1..=6 {
        for g in connected_graphs(n) {
            let fast = partial_cube(&g).map_err(|e| e.to_string())?;
            let slow = exhaustive_cube_embedding(&g);
            match (&fast, &slow) {
                (Some(labeling), Some(addresses)) => {
                    let used = (0..n.saturating_sub(1))
                        .filter(|&c| addresses.iter().any(|a| a >> c & 1 != addresses[0] >> c & 1))
                        .count();
                    ensure(labeling.dim == used, || {
                        format!("{:?}: dimension {} vs {used}", g.edges(), labeling.dim)
                    })?;
                    cubes += 1;
                }
                (None, None) => {}
                _ => return Err(format!("{:?}: fast {}, exhaustive {}", g.edges(), fast.is_some(), slow.is_some())),
            }
            total += 1;
        }
    }
    for dim in 1..=6 {
        let q = make_graph(GraphKind::Hypercube(dim)).unwrap();
        let got = partial_cube(&q).map_err(|e| e.to_string())?.map(|l| l.dim);
        ensure(got == Some(dim), || format!("Q{dim} recognized as {got:?}"))?;
    }
    Ok(format!("{total} connected graphs agree ({cubes} partial cubes); Q1..Q6 recognized"))
}

fn zones() -> Outcome {
    let cube = parse_quad(&fixture("cube.quad")).map_err(|e| e.to_string())?;
    ensure(cube == Quadrillage::cube(), || "cube fixture differs from builder".into())?;
    let zs = cube.zones();
    ensure(zs.len() == 3, || format!("cube has {} zones", zs.len()))?;
    for z in &zs {
        ensure(z.len() == 4 && cube.zone_is_simple(z), || format!("cube zone {z:?}"))?;
        ensure(cube.zone_is_convex(z).map_err(|e| e.to_string())?, || "cube zone not convex".into())?;
    }
    for p in 3..=6 {
        for q in 3..=6 {
            let t = Quadrillage::torus(p, q).map_err(|e| e.to_string())?;
            let zs = t.zones();
            ensure(zs.len() == p + q, || format!("torus {p}x{q}: {} zones", zs.len()))?;
            let mut covered: Vec<_> = zs.iter().flat_map(|z| z.edges.iter().copied()).collect();
            covered.sort_unstable();
            ensure(covered == t.edges(), || format!("torus {p}x{q}: edges not covered once"))?;
        }
    }
    let rd = parse_quad(&fixture("dual_cuboctahedron.quad")).map_err(|e| e.to_string())?;
    let lengths: Vec<usize> = rd.zones().iter().map(|z| z.len()).collect();
    ensure(lengths == [6, 6, 6, 6], || format!("dual cuboctahedron zone lengths {lengths:?}"))?;
    let mut fixtures: Vec<(String, Quadrillage)> = ["cube.quad", "dual_cuboctahedron.quad", "grid_3x2.quad", "k23.quad"]
        .iter()
        .map(|name| (name.to_string(), parse_quad(&fixture(name)).unwrap()))
        .collect();
    for p in 1..=4 {
        for q in 1..=4 {
            fixtures.push((format!("grid {p}x{q}"), Quadrillage::grid(p, q).unwrap()));
        }
    }
    let mut compared = 0;
    let mut negatives = 0;
    for (name, quad) in &fixtures {
        let verdict = quad.embeddable_by_zones();
        if !verdict.planar_bipartite {
            continue;
        }
        let pc = partial_cube(&quad.skeleton()).map_err(|e| e.to_string())?.is_some();
        ensure(verdict.embeddable == pc, || format!("{name}: zones {} vs partial cube {pc}", verdict.embeddable))?;
        compared += 1;
        negatives += usize::from(!pc);
    }
    ensure(compared == fixtures.len(), || "a planar fixture was not recognized".into())?;
    Ok(format!("cube, tori 3..6, dual cuboctahedron; {compared} planar fixtures agree ({negatives} non-embeddable)"))
}

fn euler_characteristic() -> Outcome {
    let mut checked = 0;
    for m in 2..=6 {
        let n = m as i64 - 1;
        for p in enumerate_partitions(m).unwrap() {
            let chi = build_kp(&p).euler_characteristic();
            let sphere = 1 + (-1i64).pow(n as u32);
            ensure(chi == sphere, || format!("{p}: chi = {chi}, sphere {sphere}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} partitions with n <= 5"))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("table reproduction", table_reproduction),
        ("formula vs brute force", formula_vs_oracle),
        ("classification soundness", classification_soundness),
        ("distinct complexes, same skeleton", same_skeleton_distinct),
        ("figure-1 complex", figure_one),
        ("embeddability obstructions", obstructions),
        ("scaled embeddings", scaled_embeddings),
        ("partial-cube oracle", partial_cube_oracle),
        ("zones", zones),
        ("euler characteristic", euler_characteristic),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
