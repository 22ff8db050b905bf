//! Exact maximum clique on dense bitset graphs.
//!
//! Branch and bound with a greedy colouring bound (the MCQ family of
//! algorithms). After the optimum size is known, the lexicographically
//! least optimal clique is extracted vertex by vertex so that the witness
//! does not depend on search order.

/// A fixed-size set of vertex indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(n: usize) -> Self {
        BitSet { words: vec![0; n.div_ceil(64)] }
    }

    pub fn full(n: usize) -> Self {
        let mut s = BitSet::new(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.words[v / 64] |= 1 << (v % 64);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.words[v / 64] &= !(1 << (v % 64));
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.words[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn intersect(&self, other: &BitSet) -> BitSet {
        BitSet {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        }
    }

    fn difference_with(&mut self, other: &BitSet) {
        self.words.iter_mut().zip(&other.words).for_each(|(a, b)| *a &= !b);
    }

    /// Smallest member.
    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            })
        })
    }
}

/// Symmetric adjacency over `0..n` stored as one bitset per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitGraph {
    n: usize,
    rows: Vec<BitSet>,
}

impl BitGraph {
    pub fn new(n: usize) -> Self {
        BitGraph { n, rows: vec![BitSet::new(n); n] }
    }

    pub fn from_rows(rows: Vec<BitSet>) -> Self {
        BitGraph { n: rows.len(), rows }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u != v {
            self.rows[u].insert(v);
            self.rows[v].insert(u);
        }
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.rows[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(BitSet::len).sum::<usize>() / 2
    }

    pub fn complement(&self) -> BitGraph {
        let mut out = BitGraph::new(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.adjacent(u, v) {
                    out.add_edge(u, v);
                }
            }
        }
        out
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| u != v && self.adjacent(u, v)))
    }

    /// Copy with vertex `order[i]` renamed to `i`.
    fn permuted(&self, order: &[usize]) -> BitGraph {
        let mut inv = vec![0; self.n];
        for (i, &v) in order.iter().enumerate() {
            inv[v] = i;
        }
        let mut out = BitGraph::new(self.n);
        for u in 0..self.n {
            for v in self.rows[u].iter().filter(|&v| v > u) {
                out.add_edge(inv[u], inv[v]);
            }
        }
        out
    }
}

struct Search<'a> {
    g: &'a BitGraph,
    best: usize,
    /// Stop as soon as a clique of this size is found.
    target: Option<usize>,
    current: Vec<usize>,
}

impl Search<'_> {
    fn done(&self) -> bool {
        self.target.is_some_and(|t| self.best >= t)
    }

    /// Greedy sequential colouring of `p`; returns vertices in
    /// nondecreasing colour order with their colour numbers.
    fn colour(&self, p: &BitSet) -> (Vec<usize>, Vec<usize>) {
        let mut order = Vec::with_capacity(p.len());
        let mut colours = Vec::with_capacity(p.len());
        let mut uncoloured = p.clone();
        let mut colour = 0;
        while !uncoloured.is_empty() {
            colour += 1;
            let mut q = uncoloured.clone();
            while let Some(v) = q.first() {
                q.remove(v);
                q.difference_with(self.g.neighbors(v));
                uncoloured.remove(v);
                order.push(v);
                colours.push(colour);
            }
        }
        (order, colours)
    }

    fn expand(&mut self, mut p: BitSet) {
        let (order, colours) = self.colour(&p);
        for idx in (0..order.len()).rev() {
            if self.current.len() + colours[idx] <= self.best || self.done() {
                return;
            }
            let v = order[idx];
            self.current.push(v);
            let np = p.intersect(self.g.neighbors(v));
            if np.is_empty() {
                if self.current.len() > self.best {
                    self.best = self.current.len();
                }
            } else {
                self.expand(np);
            }
            self.current.pop();
            p.remove(v);
        }
    }
}

/// Size of a maximum clique inside `candidates`, or an early `true` as
/// soon as one of size `target` is found.
fn clique_at_least(g: &BitGraph, candidates: &BitSet, target: usize) -> bool {
    if target == 0 {
        return true;
    }
    if candidates.len() < target {
        return false;
    }
    let mut s = Search {
        g,
        best: target - 1,
        target: Some(target),
        current: Vec::new(),
    };
    s.expand(candidates.clone());
    s.best >= target
}

fn max_clique_size(g: &BitGraph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    // degree-descending renumbering tightens the colouring bound
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let h = g.permuted(&order);
    let mut s = Search {
        g: &h,
        best: 0,
        target: None,
        current: Vec::new(),
    };
    s.expand(BitSet::full(h.n()));
    s.best
}

/// A maximum clique: its size and the lexicographically least optimal
/// vertex set (sorted).
pub fn max_clique(g: &BitGraph) -> (usize, Vec<usize>) {
    let size = max_clique_size(g);
    let mut chosen = Vec::with_capacity(size);
    let mut cand = BitSet::full(g.n());
    for v in 0..g.n() {
        if chosen.len() == size {
            break;
        }
        if !cand.contains(v) {
            continue;
        }
        cand.remove(v);
        let mut next = cand.intersect(g.neighbors(v));
        let need = size - chosen.len() - 1;
        if clique_at_least(g, &next, need) {
            chosen.push(v);
            std::mem::swap(&mut cand, &mut next);
        }
    }
    debug_assert_eq!(chosen.len(), size);
    (size, chosen)
}

/// A maximum independent set, as a maximum clique of the complement.
pub fn max_independent_set(g: &BitGraph) -> (usize, Vec<usize>) {
    max_clique(&g.complement())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> BitGraph {
        let mut g = BitGraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    #[test]
    fn bitset_basics() {
        let mut s = BitSet::new(130);
        s.insert(3);
        s.insert(64);
        s.insert(129);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![3, 64, 129]);
        assert_eq!(s.first(), Some(3));
        assert_eq!(s.len(), 3);
        s.remove(3);
        assert_eq!(s.first(), Some(64));
        assert!(BitSet::new(0).is_empty());
    }

    #[test]
    fn trivial_graphs() {
        assert_eq!(max_clique(&BitGraph::new(0)), (0, vec![]));
        assert_eq!(max_clique(&BitGraph::new(4)), (1, vec![0]));
        let k3 = graph(3, &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(max_clique(&k3), (3, vec![0, 1, 2]));
        assert_eq!(max_independent_set(&k3), (1, vec![0]));
    }

    #[test]
    fn lexicographically_least_witness() {
        // two triangles {1,2,3} and {0,4,5}; the least is {0,4,5}
        let g = graph(6, &[(1, 2), (2, 3), (1, 3), (0, 4), (4, 5), (0, 5), (3, 4)]);
        assert_eq!(max_clique(&g), (3, vec![0, 4, 5]));
        // C5 has independence number 2, least witness {0, 2}
        let c5 = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert_eq!(max_independent_set(&c5), (2, vec![0, 2]));
    }
}
