use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};

const UNREACHABLE: u32 = u32::MAX;

/// A simple undirected graph with its all-pairs path distances.
///
/// Vertices are `0..n` internally; each carries a label used for display and
/// for mapping back to complex vertex ids (by default `1..=n`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<u32>,
    adjacency: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
    distances: Vec<u32>,
}

impl Graph {
    /// A graph on `0..n`, labeled `1..=n`. Duplicate edges are merged.
    pub fn new<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Result<Self> {
        Self::with_labels((1..=n as u32).collect(), edges)
    }

    pub fn with_labels<I: IntoIterator<Item = (usize, usize)>>(
        labels: Vec<u32>,
        edges: I,
    ) -> Result<Self> {
        let n = labels.len();
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::InvalidGraph(format!("edge ({a},{b}) out of range 0..{n}")));
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("self-loop at {a}")));
            }
            set.insert((a.min(b), a.max(b)));
        }
        let mut adjacency = vec![Vec::new(); n];
        for &(a, b) in &set {
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        let mut graph =
            Graph { labels, adjacency, edges: set.into_iter().collect(), distances: Vec::new() };
        graph.distances = graph.all_pairs();
        Ok(graph)
    }

    fn all_pairs(&self) -> Vec<u32> {
        let n = self.vertex_count();
        let mut dist = vec![UNREACHABLE; n * n];
        for s in 0..n {
            let row = &mut dist[s * n..(s + 1) * n];
            row[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adjacency[v] {
                    if row[w] == UNREACHABLE {
                        row[w] = row[v] + 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        dist
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].binary_search(&b).is_ok()
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> u32 {
        self.labels[v]
    }

    pub fn index_of(&self, label: u32) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    /// Path distance, `None` across components.
    pub fn distance(&self, a: usize, b: usize) -> Option<u32> {
        match self.distances[a * self.vertex_count() + b] {
            UNREACHABLE => None,
            d => Some(d),
        }
    }

    /// Path distance for a graph already known to be connected.
    pub(crate) fn d(&self, a: usize, b: usize) -> u32 {
        self.distances[a * self.vertex_count() + b]
    }

    pub fn is_connected(&self) -> bool {
        self.distances.iter().all(|&d| d != UNREACHABLE)
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.vertex_count() > 0 && self.is_connected() {
            Ok(())
        } else {
            Err(Error::NotConnected)
        }
    }

    pub fn diameter(&self) -> Option<u32> {
        if self.is_connected() {
            self.distances.iter().copied().max()
        } else {
            None
        }
    }

    pub fn is_bipartite(&self) -> bool {
        let n = self.vertex_count();
        let mut side = vec![u8::MAX; n];
        for s in 0..n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adjacency[v] {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[v];
                        queue.push_back(w);
                    } else if side[w] == side[v] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `Some(h)` when the graph is `K_n - hK_2`, i.e. the missing edges form
    /// a matching of size `h`.
    pub fn complement_matching(&self) -> Option<usize> {
        let n = self.vertex_count();
        let mut missing_degree = vec![0usize; n];
        let mut missing = 0;
        for a in 0..n {
            for b in a + 1..n {
                if !self.has_edge(a, b) {
                    missing += 1;
                    missing_degree[a] += 1;
                    missing_degree[b] += 1;
                }
            }
        }
        missing_degree.iter().all(|&d| d <= 1).then_some(missing)
    }

    /// The subgraph induced on `vertices` (in the given order), keeping labels.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let labels = vertices.iter().map(|&v| self.labels[v]).collect();
        let edges = (0..vertices.len()).flat_map(|i| {
            (i + 1..vertices.len())
                .filter(move |&j| self.has_edge(vertices[i], vertices[j]))
                .map(move |j| (i, j))
        });
        Graph::with_labels(labels, edges.collect::<Vec<_>>()).expect("induced edges are valid")
    }

    /// Whether the induced subgraph on `vertices` keeps the distances of `self`.
    pub fn is_isometric_subset(&self, vertices: &[usize]) -> bool {
        let sub = self.induced(vertices);
        (0..vertices.len()).all(|i| {
            (0..i).all(|j| sub.distance(i, j) == self.distance(vertices[i], vertices[j]))
        })
    }

    /// Whether `cycle` (a closed walk through distinct vertices, consecutive
    /// ones adjacent) has cycle distances equal to graph distances.
    pub fn is_isometric_cycle(&self, cycle: &[usize]) -> Result<bool> {
        let k = cycle.len();
        let distinct: BTreeSet<usize> = cycle.iter().copied().collect();
        if k < 3 || distinct.len() != k || cycle.iter().any(|&v| v >= self.vertex_count()) {
            return Err(Error::NotACycle(format!("{cycle:?}")));
        }
        if (0..k).any(|i| !self.has_edge(cycle[i], cycle[(i + 1) % k])) {
            return Err(Error::NotACycle(format!("{cycle:?}")));
        }
        Ok((0..k).all(|i| {
            (0..i).all(|j| {
                let along = (i - j).min(k - (i - j)) as u32;
                self.distance(cycle[i], cycle[j]) == Some(along)
            })
        }))
    }
}

/// Named graph families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphKind {
    /// `K_m`.
    Complete(usize),
    /// `K_m - hK_2`: the edges `(0,1), (2,3), ..` of `K_m` removed.
    CompleteMinusMatching { m: usize, h: usize },
    /// `K_m - C_h`: the cycle `0, 1, .., h-1` removed from `K_m`.
    CompleteMinusCycle { m: usize, h: usize },
    /// `C_m`.
    Cycle(usize),
    /// `Q_N`, vertex `i` having address bits of `i`.
    Hypercube(usize),
}

/// Largest hypercube built by [`make_graph`].
pub const MAX_HYPERCUBE_DIM: usize = 10;

pub fn make_graph(kind: GraphKind) -> Result<Graph> {
    let range = |detail: String| Err(Error::OutOfRange { what: "graph parameter", detail });
    let complete_except = |m: usize, removed: &BTreeSet<(usize, usize)>| {
        let edges: Vec<(usize, usize)> = (0..m)
            .flat_map(|a| (a + 1..m).map(move |b| (a, b)))
            .filter(|e| !removed.contains(e))
            .collect();
        Graph::new(m, edges)
    };
    match kind {
        GraphKind::Complete(m) => {
            if m == 0 {
                return range("K_0".into());
            }
            complete_except(m, &BTreeSet::new())
        }
        GraphKind::CompleteMinusMatching { m, h } => {
            if m == 0 || 2 * h > m {
                return range(format!("K{m}-{h}K2 needs 2h <= m"));
            }
            complete_except(m, &(0..h).map(|i| (2 * i, 2 * i + 1)).collect())
        }
        GraphKind::CompleteMinusCycle { m, h } => {
            if h < 3 || h > m {
                return range(format!("K{m}-C{h} needs 3 <= h <= m"));
            }
            complete_except(m, &(0..h).map(|i| (i.min((i + 1) % h), i.max((i + 1) % h))).collect())
        }
        GraphKind::Cycle(m) => {
            if m < 3 {
                return range(format!("C{m} needs m >= 3"));
            }
            Graph::new(m, (0..m).map(|i| (i, (i + 1) % m)))
        }
        GraphKind::Hypercube(dim) => {
            if dim == 0 || dim > MAX_HYPERCUBE_DIM {
                return range(format!("Q{dim} needs 1 <= N <= {MAX_HYPERCUBE_DIM}"));
            }
            let n = 1usize << dim;
            Graph::new(n, (0..n).flat_map(|v| (0..dim).map(move |b| (v, v ^ (1 << b)))))
        }
    }
}
