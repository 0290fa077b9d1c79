//! Partitions of `{1..n+1}` and the complexes `K(P)` they determine.
//!
//! `K(P)` is obtained from the boundary of the `n`-dimensional cross-polytope
//! on `1..n+1, 1'..(n+1)'` by sending each primed vertex to a new vertex
//! standing for its part, and discarding every facet whose image repeats a
//! vertex. Every closed complex whose ridge-of-ridge links are 3- or 4-cycles
//! arises this way, and two partitions give isomorphic complexes exactly when
//! their part sizes agree.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::complex::{Face, ShortLinkTable, SimplicialComplex, VertexId};
use crate::error::{Error, Result};

/// Largest supported `n + 1`. Keeps every closed-form count inside `u128`.
pub const MAX_ELEMENTS: usize = 20;

/// An ordered partition of `{1..m}` into nonempty parts, `m >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<Vec<u32>>,
}

impl Partition {
    /// Validates and stores the parts in the given order, each part sorted.
    pub fn new(parts: Vec<Vec<u32>>) -> Result<Self> {
        let invalid = |msg: String| Err(Error::InvalidPartition(msg));
        if parts.iter().any(Vec::is_empty) {
            return invalid("empty part".into());
        }
        let m: usize = parts.iter().map(Vec::len).sum();
        if m < 2 {
            return invalid(format!("need at least 2 elements, got {m}"));
        }
        if m > MAX_ELEMENTS {
            return invalid(format!("at most {MAX_ELEMENTS} elements supported, got {m}"));
        }
        let all: BTreeSet<u32> = parts.iter().flatten().copied().collect();
        if all.len() != m {
            return invalid("parts are not disjoint".into());
        }
        if all != (1..=m as u32).collect() {
            return invalid(format!("parts must cover exactly 1..{m}"));
        }
        let parts = parts
            .into_iter()
            .map(|mut p| {
                p.sort_unstable();
                p
            })
            .collect();
        Ok(Partition { parts })
    }

    /// The canonical labeling for a multiset of part sizes: sizes ascending,
    /// elements assigned consecutively.
    pub fn from_sizes(sizes: &[usize]) -> Result<Self> {
        let mut next = 1u32;
        let parts = sizes
            .iter()
            .copied()
            .sorted()
            .map(|s| {
                let part: Vec<u32> = (next..next + s as u32).collect();
                next += s as u32;
                part
            })
            .collect();
        Self::new(parts)
    }

    pub fn parts(&self) -> &[Vec<u32>] {
        &self.parts
    }

    /// `n + 1`, the number of partitioned elements.
    pub fn element_count(&self) -> usize {
        self.parts.iter().map(Vec::len).sum()
    }

    /// `n`, the dimension of `K(P)`.
    pub fn dim(&self) -> usize {
        self.element_count() - 1
    }

    pub fn part_count(&self) -> usize {
        self.parts.len()
    }

    /// Part sizes, ascending.
    pub fn part_sizes(&self) -> Vec<usize> {
        self.parts.iter().map(Vec::len).sorted().collect()
    }

    /// Number of parts of each size.
    pub fn size_multiplicities(&self) -> BTreeMap<usize, usize> {
        self.parts.iter().map(Vec::len).counts().into_iter().collect()
    }

    pub fn singleton_count(&self) -> usize {
        self.parts.iter().filter(|p| p.len() == 1).count()
    }

    /// Index of the part containing `element`.
    pub fn part_of(&self, element: u32) -> Option<usize> {
        self.parts.iter().position(|p| p.binary_search(&element).is_ok())
    }

    /// Same parts, ordered by (size, smallest element).
    pub fn canonical(&self) -> Partition {
        let mut parts = self.parts.clone();
        parts.sort_by_key(|p| (p.len(), p[0]));
        Partition { parts }
    }

    /// The canonical labeling of this partition's size multiset.
    pub fn representative(&self) -> Partition {
        Self::from_sizes(&self.part_sizes()).expect("sizes come from a valid partition")
    }

    /// Vertex id of part `j` (0-based) in `K(P)`.
    pub fn part_vertex(&self, j: usize) -> VertexId {
        (self.element_count() + 1 + j) as VertexId
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.parts.iter().map(|p| p.iter().join(",")).join("|"))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `"1,2|3,4,5"`: parts separated by `|`, elements by `,`.
    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split('|')
            .map(|part| {
                part.split(',')
                    .map(|e| {
                        e.trim().parse::<u32>().map_err(|_| {
                            Error::InvalidPartition(format!("bad element {:?} in {s:?}", e.trim()))
                        })
                    })
                    .collect::<Result<Vec<u32>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// Closed-form invariants of `K(P)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KpSummary {
    pub facet_count: u128,
    /// The skeleton is `K_m - hK_2` with `m = skeleton_m`, `h = skeleton_h`.
    pub skeleton_m: usize,
    pub skeleton_h: usize,
    pub aut_order: u128,
    pub cox_order: u128,
    pub vertex_orbit_count: usize,
}

impl KpSummary {
    /// Skeleton written as `K{m}-{h}K2`.
    pub fn skeleton_name(&self) -> String {
        format!("K{}-{}K2", self.skeleton_m, self.skeleton_h)
    }
}

fn factorial(k: usize) -> u128 {
    (1..=k as u128).product()
}

pub fn kp_summary(partition: &Partition) -> KpSummary {
    let sizes = partition.part_sizes();
    let facet_count = sizes.iter().map(|&s| s as u128 + 1).product();
    let cox_order: u128 = sizes.iter().map(|&s| factorial(s + 1)).product();
    let swaps: u128 = partition.size_multiplicities().values().map(|&c| factorial(c)).product();
    KpSummary {
        facet_count,
        skeleton_m: partition.element_count() + partition.part_count(),
        skeleton_h: partition.singleton_count(),
        aut_order: cox_order * swaps,
        cox_order,
        vertex_orbit_count: partition.size_multiplicities().len(),
    }
}

/// Builds `K(P)`: vertices `1..=n+1`, then `n+2..` for the parts in order.
pub fn build_kp(partition: &Partition) -> SimplicialComplex {
    let m = partition.element_count();
    let owner: Vec<usize> =
        (1..=m as u32).map(|i| partition.part_of(i).expect("partition covers 1..m")).collect();
    let mut facets = Vec::new();
    for primed in 0u32..1 << m {
        let mut seen_parts = 0u64;
        let mut vertices = Vec::with_capacity(m);
        let mut rejected = false;
        for (i, &part) in owner.iter().enumerate() {
            if primed >> i & 1 == 0 {
                vertices.push(i as VertexId + 1);
            } else if seen_parts >> part & 1 == 1 {
                rejected = true;
                break;
            } else {
                seen_parts |= 1 << part;
                vertices.push(partition.part_vertex(part));
            }
        }
        if !rejected {
            facets.push(Face::new(vertices).expect("facet vertices are distinct"));
        }
    }
    SimplicialComplex::new(m - 1, facets).expect("K(P) facets are pure")
}

/// The complex dual to the product of simplices of dimensions `|P_1|, ..,
/// |P_t|`: one vertex per simplex vertex, one facet per product vertex
/// `(v_1, .., v_t)` made of every simplex vertex except the chosen `v_j`.
pub fn product_dual(partition: &Partition) -> SimplicialComplex {
    let simplex_sizes: Vec<usize> = partition.parts().iter().map(|p| p.len() + 1).collect();
    let offsets: Vec<u32> = simplex_sizes
        .iter()
        .scan(0u32, |acc, &s| {
            let start = *acc;
            *acc += s as u32;
            Some(start)
        })
        .collect();
    let facets = simplex_sizes
        .iter()
        .map(|&s| 0..s)
        .multi_cartesian_product()
        .map(|choice| {
            let vertices = choice.iter().enumerate().flat_map(|(j, &skip)| {
                let offset = offsets[j];
                (0..simplex_sizes[j]).filter(move |&w| w != skip).map(move |w| offset + w as u32 + 1)
            });
            Face::new(vertices).expect("simplex vertices are distinct")
        })
        .collect::<Vec<_>>();
    SimplicialComplex::new(partition.dim(), facets).expect("product dual is pure")
}

/// Recovers `P` from a closed complex of type `{3,4}`, checking that every
/// facet carries the same part sizes. `K(P)` determines `P` only up to
/// relabeling, so the result is the representative with consecutive labels
/// and sizes ascending.
pub fn classify(complex: &SimplicialComplex) -> Result<Partition> {
    let table = ShortLinkTable::new(complex)?;
    let first = &complex.facets()[0];
    let sizes = |parts: &[Vec<VertexId>]| parts.iter().map(Vec::len).sorted().collect_vec();
    let expected = sizes(&table.parts_of(first)?);
    for facet in &complex.facets()[1..] {
        let got = sizes(&table.parts_of(facet)?);
        if got != expected {
            return Err(Error::Inconsistent(format!(
                "facet {first} has part sizes {expected:?} but {facet} has {got:?}"
            )));
        }
    }
    Partition::from_sizes(&expected)
}

/// One canonical partition per multiset of part sizes summing to `m`, ordered
/// by number of parts, then by the ascending size list.
pub fn enumerate_partitions(m: usize) -> Result<Vec<Partition>> {
    if !(2..=MAX_ELEMENTS).contains(&m) {
        return Err(Error::OutOfRange { what: "element count", detail: format!("{m}") });
    }
    let mut all = Vec::new();
    integer_partitions(m, 1, &mut Vec::new(), &mut all);
    all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    all.iter().map(|sizes| Partition::from_sizes(sizes)).collect()
}

fn integer_partitions(rest: usize, min: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if rest == 0 {
        out.push(prefix.clone());
        return;
    }
    for s in min..=rest {
        prefix.push(s);
        integer_partitions(rest - s, s, prefix, out);
        prefix.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("1|2,3").parts(), &[vec![1], vec![2, 3]]);
        assert_eq!(p(" 3, 2 | 1 ").to_string(), "2,3|1");
        assert_eq!(p("3,2|1").canonical().to_string(), "1|2,3");
    }

    #[test]
    fn invalid_partitions() {
        for bad in ["", "1", "1|1,2", "1,3", "0,1", "1,x", "1||2", "2,3"] {
            assert!(bad.parse::<Partition>().is_err(), "{bad:?} accepted");
        }
        let too_big = (1..=21).map(|i| i.to_string()).join(",");
        assert!(too_big.parse::<Partition>().is_err());
    }

    #[test]
    fn derived_counts() {
        let q = p("1|2|3,4,5");
        assert_eq!(q.element_count(), 5);
        assert_eq!(q.dim(), 4);
        assert_eq!(q.part_count(), 3);
        assert_eq!(q.singleton_count(), 2);
        assert_eq!(q.size_multiplicities(), BTreeMap::from([(1, 2), (3, 1)]));
        assert_eq!(q.part_vertex(0), 6);
    }

    #[test]
    fn kp_small_cases() {
        let k = build_kp(&p("1|2,3"));
        let expected = [[1, 2, 3], [4, 2, 3], [1, 5, 3], [1, 2, 5], [4, 5, 3], [4, 2, 5]];
        let expected = SimplicialComplex::from_vertex_lists(2, expected).unwrap();
        assert_eq!(k, expected);
        assert_eq!(build_kp(&p("1|2|3")).facet_count(), 8);
        assert_eq!(build_kp(&p("1,2,3")).facet_count(), 4);
    }

    #[test]
    fn summaries_match_table_rows() {
        let s = kp_summary(&p("1,2|3,4"));
        assert_eq!(
            (s.facet_count, s.skeleton_m, s.skeleton_h, s.aut_order, s.cox_order, s.vertex_orbit_count),
            (9, 6, 0, 72, 36, 1)
        );
        let s = kp_summary(&p("1|2|3|4|5"));
        assert_eq!(
            (s.facet_count, s.skeleton_m, s.skeleton_h, s.aut_order, s.cox_order, s.vertex_orbit_count),
            (32, 10, 5, 3840, 32, 1)
        );
        let s = kp_summary(&p("1|2,3,4,5"));
        assert_eq!(
            (s.facet_count, s.skeleton_m, s.skeleton_h, s.aut_order, s.cox_order, s.vertex_orbit_count),
            (10, 7, 1, 240, 240, 2)
        );
        assert_eq!(s.skeleton_name(), "K7-1K2");
    }

    #[test]
    fn product_dual_shapes() {
        let d = product_dual(&p("1|2,3"));
        assert_eq!((d.vertex_count(), d.facet_count(), d.dim()), (5, 6, 2));
        let square = product_dual(&p("1|2"));
        assert_eq!((square.vertex_count(), square.facet_count()), (4, 4));
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> =
            (2..=8).map(|m| enumerate_partitions(m).unwrap().len()).collect();
        assert_eq!(counts, vec![2, 3, 5, 7, 11, 15, 22]);
        let four: Vec<String> = enumerate_partitions(4).unwrap().iter().map(|p| p.to_string()).collect();
        assert_eq!(four, ["1,2,3,4", "1|2,3,4", "1,2|3,4", "1|2|3,4", "1|2|3|4"]);
        assert!(enumerate_partitions(1).is_err());
    }

    #[test]
    fn classify_rejects_wrong_type() {
        let pentagon_bipyramid = SimplicialComplex::from_vertex_lists(
            2,
            (0..5u32).flat_map(|i| [vec![i + 1, (i + 1) % 5 + 1, 6], vec![i + 1, (i + 1) % 5 + 1, 7]]),
        )
        .unwrap();
        assert!(matches!(classify(&pentagon_bipyramid), Err(Error::NotShortLinked(_))));
    }
}
