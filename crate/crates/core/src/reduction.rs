//! From pairwise `C_2k`-creating Hamiltonian paths to pairwise
//! `C_2k`-creating perfect matchings.
//!
//! Split every path into consecutive blocks of `k` positions and colour the
//! blocks 1, 2, 3, 1, 2, 3, ... The three induced subgraphs form the path's
//! associated triple. Paths sharing a triple share all within-block edges
//! (the fixed graph `F`), no `2k`-cycle of a union of two such paths uses an
//! edge of `F`, and so deleting `F` leaves perfect matchings that are still
//! pairwise creating. A second pigeonhole step removes one vertex pair from
//! a matching family while keeping the creating property.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::graph::{AsGraph, HamPath, LabeledGraph, PerfectMatching};

/// The three position-class subgraphs of a Hamiltonian path.
///
/// Each class is a list of directed `k`-vertex paths (vertex sequences in
/// increasing position order), sorted by their smallest vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AssociatedTriple {
    pub n: usize,
    pub k: usize,
    pub classes: [Vec<Vec<usize>>; 3],
}

impl AssociatedTriple {
    pub fn class_vertices(&self, j: usize) -> Vec<usize> {
        let mut v: Vec<usize> = self.classes[j].iter().flatten().copied().collect();
        v.sort_unstable();
        v
    }

    pub fn components(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.classes.iter().flatten()
    }
}

fn check_triple_params(n: usize, k: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("k must be at least 2, got {k}")));
    }
    if n == 0 || !n.is_multiple_of(2) || !n.is_multiple_of(3 * k) {
        return Err(Error::TripleDivisibility { n, k });
    }
    Ok(())
}

pub fn associated_triple(h: &HamPath, k: usize) -> Result<AssociatedTriple> {
    check_triple_params(h.n(), k)?;
    let mut classes: [Vec<Vec<usize>>; 3] = Default::default();
    for (b, block) in h.order().chunks(k).enumerate() {
        classes[b % 3].push(block.to_vec());
    }
    for class in classes.iter_mut() {
        class.sort_by_key(|c| *c.iter().min().expect("blocks are nonempty"));
    }
    Ok(AssociatedTriple { n: h.n(), k, classes })
}

/// `F = X1 ∪ X2 ∪ X3`: `n/k` disjoint paths on `k` vertices.
pub fn fixed_graph(t: &AssociatedTriple) -> LabeledGraph {
    let edges = t
        .components()
        .flat_map(|c| c.windows(2).map(|w| (w[0], w[1])).collect::<Vec<_>>());
    LabeledGraph::from_edges(t.n, edges).expect("triple components are vertex-disjoint paths")
}

/// A largest group of paths sharing one associated triple.
#[derive(Clone, Debug)]
pub struct TripleClass {
    pub triple: AssociatedTriple,
    /// Indices into the input family, increasing.
    pub members: Vec<usize>,
    pub paths: Vec<HamPath>,
    /// How many distinct triples occur in the input.
    pub distinct_triples: usize,
}

/// Groups the family by associated triple and returns a largest group;
/// ties go to the smallest triple.
pub fn pigeonhole_largest_class(family: &[HamPath], k: usize) -> Result<TripleClass> {
    if family.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let mut groups: BTreeMap<AssociatedTriple, Vec<usize>> = BTreeMap::new();
    for (i, h) in family.iter().enumerate() {
        groups.entry(associated_triple(h, k)?).or_default().push(i);
    }
    let distinct_triples = groups.len();
    let best = groups.values().map(Vec::len).max().expect("family is nonempty");
    let (triple, members) = groups
        .into_iter()
        .find(|(_, m)| m.len() == best)
        .expect("a group attains the maximum");
    let paths = members.iter().map(|&i| family[i].clone()).collect();
    Ok(TripleClass { triple, members, paths, distinct_triples })
}

/// Perfect matchings on a relabelled ground set together with the map
/// back to the original labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelabeledMatchings {
    pub matchings: Vec<PerfectMatching>,
    /// `original_labels[v - 1]` is the original label of new vertex `v`.
    pub original_labels: Vec<usize>,
}

impl RelabeledMatchings {
    pub fn ground_size(&self) -> usize {
        self.original_labels.len()
    }

    /// The matching edges in original labels.
    pub fn original_pairs(&self, idx: usize) -> Vec<(usize, usize)> {
        self.matchings[idx]
            .pairs()
            .iter()
            .map(|&(a, b)| (self.original_labels[a - 1], self.original_labels[b - 1]))
            .collect()
    }
}

fn relabel_map(n: usize, keep: impl Fn(usize) -> bool) -> (Vec<usize>, Vec<usize>) {
    let original: Vec<usize> = (1..=n).filter(|&v| keep(v)).collect();
    let mut new_label = vec![0; n + 1];
    for (i, &v) in original.iter().enumerate() {
        new_label[v] = i + 1;
    }
    (original, new_label)
}

/// Deletes the shared fixed graph from every path. What is left of each
/// path is a perfect matching on the `2n/k - 2` block endpoints other than
/// the path's first and last vertex.
///
/// All members must share the associated triple and the same first and
/// last vertex, so that every output matching lives on the same ground set.
pub fn strip_to_matchings(subfamily: &[HamPath], k: usize) -> Result<RelabeledMatchings> {
    let first = subfamily.first().ok_or(Error::EmptyFamily)?;
    let triple = associated_triple(first, k)?;
    let fixed = fixed_graph(&triple);
    let ends = (first.first(), first.last());
    for h in subfamily {
        if h.n() != first.n() {
            return Err(Error::GroundSetMismatch { left: first.n(), right: h.n() });
        }
        if !fixed.is_subgraph_of(&h.to_graph()) {
            return Err(Error::MissingFixedEdges);
        }
        if associated_triple(h, k)? != triple {
            return Err(Error::TripleMismatch);
        }
        if (h.first(), h.last()) != ends {
            return Err(Error::EndpointMismatch(ends, (h.first(), h.last())));
        }
    }

    let n = first.n();
    let mut block_end = vec![false; n + 1];
    for c in triple.components() {
        block_end[c[0]] = true;
        block_end[c[c.len() - 1]] = true;
    }
    block_end[ends.0] = false;
    block_end[ends.1] = false;
    let (original_labels, new_label) = relabel_map(n, |v| block_end[v]);

    let matchings = subfamily
        .iter()
        .map(|h| {
            let pairs = h
                .edges()
                .into_iter()
                .filter(|&(a, b)| !fixed.has_edge(a, b))
                .map(|(a, b)| (new_label[a], new_label[b]));
            PerfectMatching::new(original_labels.len(), pairs)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RelabeledMatchings { matchings, original_labels })
}

/// Output of the full path-to-matching pipeline.
#[derive(Clone, Debug)]
pub struct PathReduction {
    pub triple: AssociatedTriple,
    pub distinct_triples: usize,
    pub class_size: usize,
    /// Shared first and last vertex of the retained paths.
    pub endpoints: (usize, usize),
    /// Indices into the input family of the retained paths.
    pub members: Vec<usize>,
    pub matchings: RelabeledMatchings,
}

/// Triple pigeonhole, then a pigeonhole on the `(first, last)` vertex pair
/// within the class (ties to the smallest pair), then stripping.
pub fn paths_to_matchings(family: &[HamPath], k: usize) -> Result<PathReduction> {
    let class = pigeonhole_largest_class(family, k)?;
    let mut by_ends: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (pos, h) in class.paths.iter().enumerate() {
        by_ends.entry((h.first(), h.last())).or_default().push(pos);
    }
    let best = by_ends.values().map(Vec::len).max().expect("class is nonempty");
    let (endpoints, picked) = by_ends
        .into_iter()
        .find(|(_, v)| v.len() == best)
        .expect("a group attains the maximum");
    let paths: Vec<HamPath> = picked.iter().map(|&p| class.paths[p].clone()).collect();
    let matchings = strip_to_matchings(&paths, k)?;
    Ok(PathReduction {
        class_size: class.members.len(),
        distinct_triples: class.distinct_triples,
        members: picked.iter().map(|&p| class.members[p]).collect(),
        triple: class.triple,
        endpoints,
        matchings,
    })
}

/// Checks empirically that no `2k`-cycle in `h1 ∪ h2` uses an edge of the
/// fixed graph the two paths share.
pub fn verify_claim_notused(h1: &HamPath, h2: &HamPath, k: usize) -> Result<bool> {
    let t1 = associated_triple(h1, k)?;
    let t2 = associated_triple(h2, k)?;
    if t1 != t2 {
        return Err(Error::TripleMismatch);
    }
    let fixed = fixed_graph(&t1);
    let union = h1.to_graph().union(&h2.to_graph())?;
    Ok(union.cycles_of_length(2 * k).iter().all(|cycle| {
        (0..cycle.len()).all(|i| !fixed.has_edge(cycle[i], cycle[(i + 1) % cycle.len()]))
    }))
}

/// A matching family with one vertex pair removed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShrunkFamily {
    /// The partner of vertex 1 shared by every retained matching.
    pub partner: usize,
    /// Indices into the input family of the retained matchings.
    pub kept: Vec<usize>,
    pub matchings: RelabeledMatchings,
}

/// Keeps the matchings that pair vertex 1 with its most frequent partner
/// `i` (ties to the smallest `i`) and deletes vertices 1 and `i`.
pub fn ground_set_reduce(family: &[PerfectMatching]) -> Result<ShrunkFamily> {
    let first = family.first().ok_or(Error::EmptyFamily)?;
    let n = first.n();
    if n < 4 {
        return Err(Error::InvalidParameter(format!("ground set must have at least 4 vertices, got {n}")));
    }
    if let Some(m) = family.iter().find(|m| m.n() != n) {
        return Err(Error::GroundSetMismatch { left: n, right: m.n() });
    }
    let mut counts = vec![0usize; n + 1];
    for m in family {
        counts[m.partner(1)] += 1;
    }
    let best = *counts.iter().max().expect("n >= 4");
    let partner = (2..=n).find(|&i| counts[i] == best).expect("a partner attains the maximum");

    let (original_labels, new_label) = relabel_map(n, |v| v != 1 && v != partner);
    let mut kept = Vec::new();
    let mut matchings = Vec::new();
    for (idx, m) in family.iter().enumerate() {
        if m.partner(1) != partner {
            continue;
        }
        let pairs = m
            .pairs()
            .iter()
            .filter(|&&(a, _)| a != 1)
            .map(|&(a, b)| (new_label[a], new_label[b]));
        matchings.push(PerfectMatching::new(n - 2, pairs)?);
        kept.push(idx);
    }
    Ok(ShrunkFamily {
        partner,
        kept,
        matchings: RelabeledMatchings { matchings, original_labels },
    })
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// Number of possible associated triples on `n` vertices:
/// `multinomial(n; k,...,k) / (n/k)! * (k!)^(n/k) * multinomial(n/k; n/3k, n/3k, n/3k)`.
pub fn triple_count(n: usize, k: usize) -> Result<BigUint> {
    check_triple_params(n, k)?;
    let blocks = n / k;
    let per_class = n / (3 * k);
    let k_fact = factorial(k);
    let k_fact_pow = num_traits::pow(k_fact, blocks);
    let partitions = factorial(n) / &k_fact_pow / factorial(blocks);
    let class_split = factorial(blocks) / num_traits::pow(factorial(per_class), 3);
    Ok(partitions * k_fact_pow * class_split)
}
