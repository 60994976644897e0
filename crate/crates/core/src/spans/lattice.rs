//! The lattice of all subsemimodules of a finite semimodule, and its
//! length (the longest strictly increasing chain).

use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use crate::error::Result;
use crate::scalars::{Scalar, Semiring};
use crate::spans::{BitSet, FiniteAmbient, SpanBasis};

/// Every subsemimodule of a finite ambient semimodule, with covering
/// inclusions. Node 0 is `{0}`.
#[derive(Debug)]
pub struct SubmoduleLattice {
    ambient: Arc<FiniteAmbient>,
    nodes: Vec<BitSet>,
    covers: Vec<(usize, usize)>,
}

impl SubmoduleLattice {
    pub fn semiring(&self) -> &Semiring {
        self.ambient.semiring()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient.dim()
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn node_size(&self, i: usize) -> usize {
        self.nodes[i].count()
    }

    pub fn node_elements(&self, i: usize) -> Vec<Vec<Scalar>> {
        self.nodes[i].iter().map(|c| self.ambient.decode(c)).collect()
    }

    /// Pairs `(lower, upper)` where `upper` covers `lower`.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// `a ⊆ b` as element sets.
    pub fn included(&self, a: usize, b: usize) -> bool {
        self.nodes[a].is_subset(&self.nodes[b])
    }

    /// Index of the largest node (the ambient semimodule itself).
    pub fn top(&self) -> usize {
        (0..self.nodes.len())
            .max_by_key(|&i| self.nodes[i].count())
            .expect("lattice has at least one node")
    }

    /// Checks each node is a subsemimodule; used by tests.
    pub fn all_nodes_closed(&self) -> bool {
        self.nodes.iter().all(|n| self.ambient.is_subsemimodule(n))
    }
}

fn enumerate(ambient: Arc<FiniteAmbient>, top: BitSet) -> SubmoduleLattice {
    let start = ambient.zero_set();
    let mut nodes = vec![start.clone()];
    let mut ids: HashMap<BitSet, usize> = HashMap::from([(start, 0)]);
    let mut queue = VecDeque::from([0usize]);
    let mut covers = Vec::new();
    let top_elements: Vec<usize> = top.iter().collect();

    while let Some(i) = queue.pop_front() {
        let node = nodes[i].clone();
        // Every cover of `node` is ⟨node ∪ {e}⟩ for some e outside it.
        let mut successors: Vec<usize> = Vec::new();
        for &e in &top_elements {
            if node.contains(e) {
                continue;
            }
            let next = ambient.extend(&node, &[e]);
            let id = match ids.get(&next) {
                Some(&id) => id,
                None => {
                    let id = nodes.len();
                    ids.insert(next.clone(), id);
                    nodes.push(next);
                    queue.push_back(id);
                    id
                }
            };
            if !successors.contains(&id) {
                successors.push(id);
            }
        }
        for &s in &successors {
            let minimal = successors
                .iter()
                .all(|&t| t == s || !(nodes[t].is_subset(&nodes[s])));
            if minimal {
                covers.push((i, s));
            }
        }
    }
    SubmoduleLattice {
        ambient,
        nodes,
        covers,
    }
}

/// All subsemimodules of `S^n`. Refuses when `|S|^n > budget`.
pub fn enumerate_lattice(semiring: &Semiring, dim: usize, budget: usize) -> Result<SubmoduleLattice> {
    let ambient = Arc::new(FiniteAmbient::new(semiring, dim, budget)?);
    let mut top = BitSet::new(ambient.size());
    for code in 0..ambient.size() {
        top.insert(code);
    }
    Ok(enumerate(ambient, top))
}

/// All subsemimodules of the span `⟨B⟩` (a finite semimodule in its own
/// right).
pub fn enumerate_span_lattice(span: &SpanBasis) -> Result<SubmoduleLattice> {
    let (ambient, set) = span.closure_set()?;
    Ok(enumerate(ambient, set))
}

/// Number of strict steps in the longest chain of the lattice.
pub fn length_exact(lattice: &SubmoduleLattice) -> usize {
    let mut order: Vec<usize> = (0..lattice.nodes.len()).collect();
    order.sort_by_key(|&i| lattice.nodes[i].count());
    let mut upward: Vec<Vec<usize>> = vec![Vec::new(); lattice.nodes.len()];
    for &(lo, hi) in &lattice.covers {
        upward[lo].push(hi);
    }
    let mut longest = vec![0usize; lattice.nodes.len()];
    for &i in &order {
        for &j in &upward[i] {
            longest[j] = longest[j].max(longest[i] + 1);
        }
    }
    longest.into_iter().max().unwrap_or(0)
}
