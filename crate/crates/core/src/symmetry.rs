//! Brute-force symmetry groups of small complexes.
//!
//! Groups are materialized element by element; guards keep the searches to
//! the sizes met in practice (a few million elements at most).

use std::collections::{HashMap, HashSet, VecDeque};
use std::hash::Hash;
use std::ops::ControlFlow;

use itertools::Itertools;

use crate::complex::{Face, SimplicialComplex, VertexId, VertexMap};
use crate::error::{Error, Result};
use crate::partition::{kp_summary, Partition};
use crate::search::{self, Indexed};

/// Largest vertex count accepted by [`automorphisms`] and [`automorphism_count`].
pub const MAX_AUTOMORPHISM_VERTICES: usize = 12;

/// Largest group order accepted by [`coxeter_order_bruteforce`].
pub const MAX_COXETER_ORDER: u128 = 10_000_000;

/// A bijection of a finite vertex set onto itself.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    domain: Vec<VertexId>,
    images: Vec<VertexId>,
}

impl Permutation {
    pub fn new(map: &VertexMap) -> Result<Self> {
        let domain: Vec<VertexId> = map.keys().copied().collect();
        let images: Vec<VertexId> = map.values().copied().collect();
        let mut sorted = images.clone();
        sorted.sort_unstable();
        if sorted != domain {
            return Err(Error::InvalidComplex("map is not a permutation of its domain".into()));
        }
        Ok(Permutation { domain, images })
    }

    pub fn identity(domain: &[VertexId]) -> Self {
        let domain: Vec<VertexId> = domain.iter().copied().sorted().dedup().collect();
        Permutation { images: domain.clone(), domain }
    }

    pub fn domain(&self) -> &[VertexId] {
        &self.domain
    }

    /// Image of `v`; points outside the domain are fixed.
    pub fn apply(&self, v: VertexId) -> VertexId {
        match self.domain.binary_search(&v) {
            Ok(i) => self.images[i],
            Err(_) => v,
        }
    }

    pub fn apply_face(&self, face: &Face) -> Face {
        Face::from_sorted(face.vertices().iter().map(|&v| self.apply(v)).sorted().collect())
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        let domain: Vec<VertexId> =
            self.domain.iter().chain(&other.domain).copied().sorted().dedup().collect();
        let images = domain.iter().map(|&v| self.apply(other.apply(v))).collect();
        Permutation { domain, images }
    }

    pub fn is_identity(&self) -> bool {
        self.domain == self.images
    }

    pub fn as_map(&self) -> VertexMap {
        self.domain.iter().copied().zip(self.images.iter().copied()).collect()
    }
}

fn guarded_index(complex: &SimplicialComplex) -> Result<Indexed> {
    if complex.vertex_count() > MAX_AUTOMORPHISM_VERTICES {
        return Err(Error::guard(format!(
            "automorphism search is limited to {MAX_AUTOMORPHISM_VERTICES} vertices, got {}",
            complex.vertex_count()
        )));
    }
    Indexed::new(complex)
}

/// Every vertex permutation mapping the facet set onto itself, sorted.
pub fn automorphisms(complex: &SimplicialComplex) -> Result<Vec<Permutation>> {
    let index = guarded_index(complex)?;
    let ids = search::vertex_ids(&index).to_vec();
    let mut out = Vec::new();
    search::for_each_bijection(&index, &index, |map| {
        out.push(Permutation {
            domain: ids.clone(),
            images: map.iter().map(|&j| ids[j]).collect(),
        });
        ControlFlow::Continue(())
    });
    out.sort_unstable();
    Ok(out)
}

/// `|Aut(K)|` by the same search as [`automorphisms`], without storing elements.
pub fn automorphism_count(complex: &SimplicialComplex) -> Result<u64> {
    let index = guarded_index(complex)?;
    let mut count = 0u64;
    search::for_each_bijection(&index, &index, |_| {
        count += 1;
        ControlFlow::Continue(())
    });
    Ok(count)
}

/// Orbits of `domain` under the group generated by `perms`. Images falling
/// outside `domain` are ignored. Each orbit is sorted, and orbits are ordered
/// by their first element.
pub fn orbits(perms: &[Permutation], domain: &[Face]) -> Vec<Vec<Face>> {
    let position: HashMap<&Face, usize> = domain.iter().enumerate().map(|(i, f)| (f, i)).collect();
    let mut orbit_of = vec![usize::MAX; domain.len()];
    let mut out: Vec<Vec<Face>> = Vec::new();
    for start in 0..domain.len() {
        if orbit_of[start] != usize::MAX {
            continue;
        }
        let id = out.len();
        orbit_of[start] = id;
        let mut orbit = vec![domain[start].clone()];
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            for p in perms {
                if let Some(&j) = position.get(&p.apply_face(&domain[i])) {
                    if orbit_of[j] == usize::MAX {
                        orbit_of[j] = id;
                        orbit.push(domain[j].clone());
                        queue.push_back(j);
                    }
                }
            }
        }
        orbit.sort_unstable();
        out.push(orbit);
    }
    out.sort_unstable();
    out
}

/// Vertex orbits of `complex` under `perms`.
pub fn vertex_orbits(complex: &SimplicialComplex, perms: &[Permutation]) -> Vec<Vec<VertexId>> {
    let points: Vec<Face> =
        complex.vertices().iter().map(|&v| Face::from_sorted(vec![v])).collect();
    orbits(perms, &points)
        .into_iter()
        .map(|o| o.into_iter().map(|f| f.vertices()[0]).collect())
        .collect()
}

/// Coxeter matrix of the reflection group of `K(P)`: one generator per
/// element `1..=n+1`, with `m_ij = 3` inside a part and `2` across parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterPresentation {
    matrix: Vec<Vec<u8>>,
}

impl CoxeterPresentation {
    pub fn generator_count(&self) -> usize {
        self.matrix.len()
    }

    /// `m_ij` for 0-based generator indices.
    pub fn entry(&self, i: usize, j: usize) -> u8 {
        self.matrix[i][j]
    }

    pub fn matrix(&self) -> &[Vec<u8>] {
        &self.matrix
    }
}

pub fn coxeter_presentation(partition: &Partition) -> CoxeterPresentation {
    let m = partition.element_count() as u32;
    let matrix = (1..=m)
        .map(|i| {
            (1..=m)
                .map(|j| match (i == j, partition.part_of(i) == partition.part_of(j)) {
                    (true, _) => 1,
                    (false, true) => 3,
                    (false, false) => 2,
                })
                .collect()
        })
        .collect();
    CoxeterPresentation { matrix }
}

/// The permutation realization of the Coxeter generators: generator `i`
/// (element `i+1` in part `j`) swaps point `i` with the auxiliary point
/// `n + 1 + j`. Each generator is an image table on `n + 1 + t` points.
pub fn coxeter_generators(partition: &Partition) -> Vec<Vec<u8>> {
    let m = partition.element_count();
    let points = m + partition.part_count();
    (1..=m as u32)
        .map(|e| {
            let i = e as usize - 1;
            let aux = m + partition.part_of(e).expect("partition covers 1..m");
            let mut g: Vec<u8> = (0..points as u8).collect();
            g.swap(i, aux);
            g
        })
        .collect()
}

/// Order of the product of two permutations given as image tables.
pub fn product_order(a: &[u8], b: &[u8]) -> usize {
    let ab: Vec<u8> = (0..a.len()).map(|p| a[b[p] as usize]).collect();
    let mut power = ab.clone();
    let mut order = 1;
    while power.iter().enumerate().any(|(i, &x)| x as usize != i) {
        power = power.iter().map(|&x| ab[x as usize]).collect();
        order += 1;
    }
    order
}

/// Order of the group generated by [`coxeter_generators`], by closure.
pub fn coxeter_order_bruteforce(partition: &Partition) -> Result<u128> {
    let expected = kp_summary(partition).cox_order;
    if expected > MAX_COXETER_ORDER {
        return Err(Error::guard(format!(
            "reflection group of order {expected} exceeds the closure limit {MAX_COXETER_ORDER}"
        )));
    }
    group_order(&coxeter_generators(partition), MAX_COXETER_ORDER)
}

/// Size of the permutation group generated by `generators` (image tables on
/// a common point set), refusing to grow beyond `limit` elements.
pub fn group_order(generators: &[Vec<u8>], limit: u128) -> Result<u128> {
    let Some(points) = generators.first().map(Vec::len) else {
        return Ok(1);
    };
    let bits = (usize::BITS - (points.max(2) - 1).leading_zeros()) as usize;
    if bits * points <= 128 {
        let encode = |p: &[u8]| p.iter().rev().fold(0u128, |acc, &x| acc << bits | x as u128);
        let mask = (1u128 << bits) - 1;
        let decode = |&code: &u128, out: &mut [u8]| {
            let mut c = code;
            for x in out.iter_mut() {
                *x = (c & mask) as u8;
                c >>= bits;
            }
        };
        closure(generators, limit, encode, decode)
    } else {
        let encode = |p: &[u8]| p.to_vec().into_boxed_slice();
        #[allow(clippy::borrowed_box)]
        let decode = |code: &Box<[u8]>, out: &mut [u8]| out.copy_from_slice(code);
        closure(generators, limit, encode, decode)
    }
}

fn closure<K, E, D>(generators: &[Vec<u8>], limit: u128, encode: E, decode: D) -> Result<u128>
where
    K: Hash + Eq + Clone,
    E: Fn(&[u8]) -> K,
    D: Fn(&K, &mut [u8]),
{
    let points = generators[0].len();
    let identity: Vec<u8> = (0..points as u8).collect();
    let mut seen: HashSet<K> = HashSet::new();
    let mut frontier: Vec<K> = vec![encode(&identity)];
    seen.insert(frontier[0].clone());
    let mut current = vec![0u8; points];
    let mut next = vec![0u8; points];
    while let Some(code) = frontier.pop() {
        decode(&code, &mut current);
        for g in generators {
            for (n, &c) in next.iter_mut().zip(&current) {
                *n = g[c as usize];
            }
            let key = encode(&next);
            if !seen.contains(&key) {
                seen.insert(key.clone());
                frontier.push(key);
                if seen.len() as u128 > limit {
                    return Err(Error::guard(format!("group exceeds {limit} elements")));
                }
            }
        }
    }
    Ok(seen.len() as u128)
}
