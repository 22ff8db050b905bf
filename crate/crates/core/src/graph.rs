//! Labeled simple graphs on the ground set `1..=n`, Hamiltonian paths,
//! perfect matchings and permutations, together with the exact-length
//! cycle machinery used to decide whether two objects are `C_L`-creating.
//!
//! Every public function takes and returns 1-based vertex labels. Storage
//! is 0-based.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};

/// An undirected simple graph on the vertices `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LabeledGraph {
    n: usize,
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl fmt::Debug for LabeledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LabeledGraph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

impl LabeledGraph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        LabeledGraph {
            n,
            adj: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    /// Builds a graph from 1-based edge pairs. Loops, duplicates and
    /// out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = LabeledGraph::empty(n);
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::Loop(u));
            }
            if g.has_edge(u, v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.insert(u - 1, v - 1);
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        let edges = (1..=n).map(|i| (i, i % n + 1));
        LabeledGraph::from_edges(n, edges).expect("cycle edges are valid")
    }

    pub fn path(n: usize) -> Self {
        LabeledGraph::from_edges(n, (1..n).map(|i| (i, i + 1))).expect("path edges are valid")
    }

    pub fn complete(n: usize) -> Self {
        let edges = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v)));
        LabeledGraph::from_edges(n, edges).expect("complete graph edges are valid")
    }

    /// `K_{a,b}` with classes `1..=a` and `a+1..=a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges = (1..=a).flat_map(|u| (a + 1..=a + b).map(move |v| (u, v)));
        LabeledGraph::from_edges(a + b, edges).expect("complete bipartite edges are valid")
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    fn insert(&mut self, u: usize, v: usize) {
        let pos = self.adj[u].binary_search(&v).unwrap_err();
        self.adj[u].insert(pos, v);
        let pos = self.adj[v].binary_search(&u).unwrap_err();
        self.adj[v].insert(pos, u);
        self.edge_count += 1;
    }

    /// Adds the edge if absent; returns whether it was new.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Loop(u));
        }
        if self.has_edge(u, v) {
            return Ok(false);
        }
        self.insert(u - 1, v - 1);
        Ok(true)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u == 0 || v == 0 || u > self.n || v > self.n {
            return false;
        }
        self.adj[u - 1].binary_search(&(v - 1)).is_ok()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].len()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v - 1].iter().map(|&w| w + 1)
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for (u, row) in self.adj.iter().enumerate() {
            for &v in row.iter().filter(|&&v| v > u) {
                out.push((u + 1, v + 1));
            }
        }
        out
    }

    pub fn edge_set(&self) -> BTreeSet<(usize, usize)> {
        self.edges().into_iter().collect()
    }

    pub fn union(&self, other: &LabeledGraph) -> Result<LabeledGraph> {
        if self.n != other.n {
            return Err(Error::GroundSetMismatch { left: self.n, right: other.n });
        }
        let mut g = self.clone();
        for (u, v) in other.edges() {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn is_subgraph_of(&self, other: &LabeledGraph) -> bool {
        self.n == other.n && self.edges().into_iter().all(|(u, v)| other.has_edge(u, v))
    }

    /// Whether the graph has a cycle on exactly `len` distinct vertices.
    ///
    /// Exhaustive: each candidate cycle is rooted at its smallest vertex and
    /// grown by DFS through larger vertices only.
    pub fn contains_cycle_of_length(&self, len: usize) -> bool {
        if len < 3 || len > self.n {
            return false;
        }
        let mut search = CycleSearch::new(self, len);
        (0..self.n).any(|root| search.run(root, false))
    }

    /// Every cycle of exactly `len` vertices, each reported once: it starts
    /// at its smallest vertex and its second vertex is smaller than its last.
    pub fn cycles_of_length(&self, len: usize) -> Vec<Vec<usize>> {
        if len < 3 || len > self.n {
            return Vec::new();
        }
        let mut search = CycleSearch::new(self, len);
        for root in 0..self.n {
            search.run(root, true);
        }
        search.found
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut queue = VecDeque::new();
        for root in 0..self.n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            queue.clear();
            queue.push_back(root);
            'bfs: while let Some(u) = queue.pop_front() {
                if let Some(b) = best {
                    if 2 * dist[u] >= b {
                        break 'bfs;
                    }
                }
                for &w in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        if best.is_none_or(|b| len < b) {
                            best = Some(len);
                        }
                    }
                }
            }
        }
        best
    }

    /// A proper 2-colouring (0/1 per vertex, the smallest vertex of every
    /// component coloured 0), or `None` if the graph has an odd cycle.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut color = vec![u8::MAX; self.n];
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[u];
                        queue.push_back(w);
                    } else if color[w] == color[u] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// The common degree if every vertex has the same degree.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first()?.len();
        self.adj.iter().all(|row| row.len() == d).then_some(d)
    }
}

struct CycleSearch<'a> {
    g: &'a LabeledGraph,
    len: usize,
    on_path: Vec<bool>,
    path: Vec<usize>,
    found: Vec<Vec<usize>>,
}

impl<'a> CycleSearch<'a> {
    fn new(g: &'a LabeledGraph, len: usize) -> Self {
        CycleSearch {
            g,
            len,
            on_path: vec![false; g.n],
            path: Vec::with_capacity(len),
            found: Vec::new(),
        }
    }

    fn run(&mut self, root: usize, collect: bool) -> bool {
        // vertices above root must supply the remaining len - 1 slots
        if self.g.n - root < self.len || self.g.adj[root].len() < 2 {
            return false;
        }
        self.path.clear();
        self.path.push(root);
        self.on_path[root] = true;
        let hit = self.extend(root, collect);
        self.on_path[root] = false;
        hit
    }

    fn extend(&mut self, root: usize, collect: bool) -> bool {
        let last = *self.path.last().unwrap();
        if self.path.len() == self.len {
            if self.g.adj[last].binary_search(&root).is_err() {
                return false;
            }
            if collect {
                if self.path[1] < last {
                    self.found.push(self.path.iter().map(|&v| v + 1).collect());
                }
                return false;
            }
            return true;
        }
        let g = self.g;
        for &w in &g.adj[last] {
            if w <= root || self.on_path[w] {
                continue;
            }
            self.on_path[w] = true;
            self.path.push(w);
            let hit = self.extend(root, collect);
            self.path.pop();
            self.on_path[w] = false;
            if hit {
                return true;
            }
        }
        false
    }
}

/// Anything that can be viewed as a graph on a fixed ground set.
pub trait AsGraph {
    fn ground_size(&self) -> usize;
    fn to_graph(&self) -> LabeledGraph;
}

impl AsGraph for LabeledGraph {
    fn ground_size(&self) -> usize {
        self.n
    }

    fn to_graph(&self) -> LabeledGraph {
        self.clone()
    }
}

/// A Hamiltonian path of `K_n`, stored in canonical orientation
/// (first vertex smaller than last).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HamPath {
    order: Vec<usize>,
}

impl HamPath {
    /// Accepts any orientation; the stored order is canonical.
    pub fn new(mut order: Vec<usize>) -> Result<Self> {
        check_permutation(&order)?;
        if order.len() > 1 && order[0] > order[order.len() - 1] {
            order.reverse();
        }
        Ok(HamPath { order })
    }

    pub fn identity(n: usize) -> Self {
        HamPath { order: (1..=n).collect() }
    }

    pub fn n(&self) -> usize {
        self.order.len()
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// The vertex at 1-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.order[i - 1]
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.order.windows(2).map(|w| (w[0].min(w[1]), w[0].max(w[1]))).collect()
    }

    pub fn first(&self) -> usize {
        self.order[0]
    }

    pub fn last(&self) -> usize {
        self.order[self.order.len() - 1]
    }
}

impl AsGraph for HamPath {
    fn ground_size(&self) -> usize {
        self.order.len()
    }

    fn to_graph(&self) -> LabeledGraph {
        LabeledGraph::from_edges(self.n(), self.edges()).expect("path edges are valid")
    }
}

fn check_permutation(seq: &[usize]) -> Result<()> {
    let n = seq.len();
    let mut seen = vec![false; n];
    for &v in seq {
        if v == 0 || v > n {
            return Err(Error::NotPermutation { n, reason: format!("label {v} out of range") });
        }
        if std::mem::replace(&mut seen[v - 1], true) {
            return Err(Error::NotPermutation { n, reason: format!("label {v} repeated") });
        }
    }
    Ok(())
}

/// A perfect matching on `1..=n`, pairs stored as `(a, b)` with `a < b`
/// sorted by `a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PerfectMatching {
    n: usize,
    pairs: Vec<(usize, usize)>,
}

impl PerfectMatching {
    pub fn new<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let bad = |reason: String| Error::NotPerfectMatching { n, reason };
        if !n.is_multiple_of(2) {
            return Err(bad("odd ground set".into()));
        }
        let mut covered = vec![false; n];
        let mut out = Vec::with_capacity(n / 2);
        for (a, b) in pairs {
            for v in [a, b] {
                if v == 0 || v > n {
                    return Err(bad(format!("label {v} out of range")));
                }
            }
            if a == b {
                return Err(bad(format!("loop at {a}")));
            }
            for v in [a, b] {
                if std::mem::replace(&mut covered[v - 1], true) {
                    return Err(bad(format!("vertex {v} covered twice")));
                }
            }
            out.push((a.min(b), a.max(b)));
        }
        if let Some(v) = covered.iter().position(|c| !c) {
            return Err(bad(format!("vertex {} uncovered", v + 1)));
        }
        out.sort_unstable();
        Ok(PerfectMatching { n, pairs: out })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// The vertex matched to `v`.
    pub fn partner(&self, v: usize) -> usize {
        self.pairs
            .iter()
            .find_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .expect("every vertex is covered")
    }

    fn partner_table(&self) -> Vec<usize> {
        let mut t = vec![0; self.n];
        for &(a, b) in &self.pairs {
            t[a - 1] = b - 1;
            t[b - 1] = a - 1;
        }
        t
    }
}

impl AsGraph for PerfectMatching {
    fn ground_size(&self) -> usize {
        self.n
    }

    fn to_graph(&self) -> LabeledGraph {
        LabeledGraph::from_edges(self.n, self.pairs.iter().copied()).expect("matching edges are valid")
    }
}

/// A bijection on `1..=m`, stored as its image sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        check_permutation(&images)?;
        Ok(Permutation { images })
    }

    pub fn identity(m: usize) -> Self {
        Permutation { images: (1..=m).collect() }
    }

    pub fn m(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `π(i)` for 1-based `i`.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1]
    }
}

/// Whether the union of `a` and `b` contains a cycle of exactly `len`
/// vertices.
pub fn is_creating<T: AsGraph + ?Sized>(a: &T, b: &T, len: usize) -> Result<bool> {
    if len < 3 {
        return Err(Error::CycleLengthTooSmall(len));
    }
    let u = a.to_graph().union(&b.to_graph())?;
    Ok(u.contains_cycle_of_length(len))
}

/// One connected component of the union of two perfect matchings.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum UnionComponent {
    /// An edge present in both matchings.
    SharedEdge(usize, usize),
    /// An alternating cycle on this many vertices (always even, at least 4).
    Cycle(usize),
}

/// Decomposes `m1 ∪ m2` into shared edges and alternating even cycles,
/// ordered by the smallest vertex of each component.
pub fn matching_union_components(
    m1: &PerfectMatching,
    m2: &PerfectMatching,
) -> Result<Vec<UnionComponent>> {
    if m1.n != m2.n {
        return Err(Error::GroundSetMismatch { left: m1.n, right: m2.n });
    }
    let p1 = m1.partner_table();
    let p2 = m2.partner_table();
    let mut seen = vec![false; m1.n];
    let mut out = Vec::new();
    for s in 0..m1.n {
        if seen[s] {
            continue;
        }
        if p1[s] == p2[s] {
            seen[s] = true;
            seen[p1[s]] = true;
            out.push(UnionComponent::SharedEdge(s + 1, p1[s] + 1));
            continue;
        }
        let mut len = 0;
        let mut v = s;
        loop {
            seen[v] = true;
            let w = p1[v];
            seen[w] = true;
            len += 2;
            v = p2[w];
            if v == s {
                break;
            }
        }
        out.push(UnionComponent::Cycle(len));
    }
    Ok(out)
}

/// `is_creating` for perfect matchings through the alternating-cycle
/// decomposition.
pub fn matchings_create_cycle(m1: &PerfectMatching, m2: &PerfectMatching, len: usize) -> Result<bool> {
    Ok(matching_union_components(m1, m2)?
        .iter()
        .any(|c| matches!(c, UnionComponent::Cycle(l) if *l == len)))
}

/// Outcome of checking every unordered pair of a family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyReport {
    pub family_size: usize,
    pub cycle_length: usize,
    pub pairs_checked: usize,
    pub creating_pairs: usize,
    /// Lexicographically first pair (0-based indices) that is not creating.
    pub first_noncreating: Option<(usize, usize)>,
    /// Lexicographically first pair that is creating.
    pub first_creating: Option<(usize, usize)>,
}

impl FamilyReport {
    /// Every pair is creating.
    pub fn passed(&self) -> bool {
        self.first_noncreating.is_none()
    }

    /// No pair is creating.
    pub fn none_creating(&self) -> bool {
        self.creating_pairs == 0
    }
}

/// Checks every unordered pair of `family` for the `C_len`-creating
/// property. Pairs are evaluated in parallel; the report does not depend
/// on scheduling.
pub fn verify_pairwise_creating<T>(family: &[T], len: usize) -> Result<FamilyReport>
where
    T: AsGraph + Sync,
{
    if len < 3 {
        return Err(Error::CycleLengthTooSmall(len));
    }
    if let Some(first) = family.first() {
        let n = first.ground_size();
        if let Some(bad) = family.iter().find(|x| x.ground_size() != n) {
            return Err(Error::GroundSetMismatch { left: n, right: bad.ground_size() });
        }
    }
    let graphs: Vec<LabeledGraph> = family.iter().map(AsGraph::to_graph).collect();
    let rows: Vec<Vec<bool>> = (0..graphs.len())
        .into_par_iter()
        .map(|i| {
            (i + 1..graphs.len())
                .map(|j| {
                    graphs[i]
                        .union(&graphs[j])
                        .expect("ground sets checked")
                        .contains_cycle_of_length(len)
                })
                .collect()
        })
        .collect();

    let mut report = FamilyReport {
        family_size: family.len(),
        cycle_length: len,
        pairs_checked: 0,
        creating_pairs: 0,
        first_noncreating: None,
        first_creating: None,
    };
    for (i, row) in rows.iter().enumerate() {
        for (off, &hit) in row.iter().enumerate() {
            let pair = (i, i + 1 + off);
            report.pairs_checked += 1;
            if hit {
                report.creating_pairs += 1;
                report.first_creating.get_or_insert(pair);
            } else {
                report.first_noncreating.get_or_insert(pair);
            }
        }
    }
    Ok(report)
}
