//! Enumeration of Arf oversemigroups and Arf-irreducible decompositions.
//!
//! Every Arf semigroup containing H is reachable from H by repeatedly
//! adjoining Arf special gaps, so the full family is built by breadth-first
//! search with canonical deduplication. Filtering the family by
//! Arf-irreducibility and taking its inclusion-minimal members yields an
//! intersection decomposition of H.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::semigroup::NumericalSemigroup;
use crate::Error;

/// Default refusal threshold for enumerations; the family of oversemigroups
/// can grow quickly with the genus.
pub const DEFAULT_GENUS_CAP: u64 = 40;

/// Directed graph on the Arf oversemigroups of a root semigroup: one edge
/// per adjoined Arf special gap, pointing at the enlarged semigroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OverGraph {
    /// Canonically ordered: genus descending, then small elements
    /// lexicographically. The root comes first, the naturals last.
    pub nodes: Vec<NumericalSemigroup>,
    pub edges: Vec<OverEdge>,
}

/// Edge `nodes[from] -> nodes[to]` labelled with the adjoined gap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OverEdge {
    pub from: usize,
    pub to: usize,
    pub gap: u64,
}

/// An irredundant list of Arf-irreducible oversemigroups whose intersection
/// is the decomposed semigroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub factors: Vec<NumericalSemigroup>,
}

/// All Arf numerical semigroups containing `h`, including `h` itself and
/// the naturals, in canonical order.
pub fn arf_oversemigroups(h: &NumericalSemigroup) -> Result<Vec<NumericalSemigroup>, Error> {
    arf_oversemigroups_with_cap(h, DEFAULT_GENUS_CAP)
}

pub fn arf_oversemigroups_with_cap(
    h: &NumericalSemigroup,
    cap: u64,
) -> Result<Vec<NumericalSemigroup>, Error> {
    if !h.is_arf() {
        return Err(Error::NotArf);
    }
    if h.genus() > cap {
        return Err(Error::GenusCapExceeded {
            genus: h.genus(),
            cap,
        });
    }
    let mut seen: HashSet<NumericalSemigroup> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(h.clone());
    queue.push_back(h.clone());
    while let Some(node) = queue.pop_front() {
        let gaps = node
            .arf_special_gaps()
            .expect("adjoining an Arf special gap keeps the semigroup Arf");
        for x in gaps {
            let next = node
                .adjoin_arf(x)
                .expect("x was just reported as an Arf special gap");
            if !seen.contains(&next) {
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    let mut nodes: Vec<NumericalSemigroup> = seen.into_iter().collect();
    nodes.sort_by(NumericalSemigroup::canonical_cmp);
    Ok(nodes)
}

/// The oversemigroup family as a graph, one edge per Arf special gap.
pub fn over_graph(h: &NumericalSemigroup) -> Result<OverGraph, Error> {
    over_graph_with_cap(h, DEFAULT_GENUS_CAP)
}

pub fn over_graph_with_cap(h: &NumericalSemigroup, cap: u64) -> Result<OverGraph, Error> {
    let nodes = arf_oversemigroups_with_cap(h, cap)?;
    let index: HashMap<&NumericalSemigroup, usize> =
        nodes.iter().enumerate().map(|(i, n)| (n, i)).collect();
    let mut edges = Vec::new();
    for (from, node) in nodes.iter().enumerate() {
        for x in node.arf_special_gaps().expect("nodes are Arf") {
            let next = node.adjoin_arf(x).expect("Arf special gap");
            let to = index[&next];
            edges.push(OverEdge { from, to, gap: x });
        }
    }
    Ok(OverGraph { nodes, edges })
}

/// The chain from `lower` to `upper` obtained by repeatedly adjoining the
/// largest missing element; every link is an Arf semigroup and the chain
/// has `|upper \ lower| + 1` entries.
pub fn chain_between(
    lower: &NumericalSemigroup,
    upper: &NumericalSemigroup,
) -> Result<Vec<NumericalSemigroup>, Error> {
    if !lower.is_arf() || !upper.is_arf() {
        return Err(Error::NotArf);
    }
    if !lower.is_subset_of(upper) {
        return Err(Error::NotNested);
    }
    let mut chain = vec![lower.clone()];
    let mut cur = lower.clone();
    while &cur != upper {
        let x = (1..cur.conductor())
            .rev()
            .find(|&x| upper.contains_u(x) && !cur.contains_u(x))
            .expect("a proper subset misses some element below its conductor");
        cur = cur
            .adjoin_arf(x)
            .expect("the largest missing element is an Arf special gap");
        chain.push(cur.clone());
    }
    Ok(chain)
}

/// The Arf-irreducible members of the oversemigroup family.
pub fn arf_irreducible_oversemigroups(
    h: &NumericalSemigroup,
) -> Result<Vec<NumericalSemigroup>, Error> {
    arf_irreducible_oversemigroups_with_cap(h, DEFAULT_GENUS_CAP)
}

pub fn arf_irreducible_oversemigroups_with_cap(
    h: &NumericalSemigroup,
    cap: u64,
) -> Result<Vec<NumericalSemigroup>, Error> {
    let nodes = arf_oversemigroups_with_cap(h, cap)?;
    Ok(nodes
        .into_iter()
        .filter(|n| n.is_arf_irreducible().expect("nodes are Arf"))
        .collect())
}

/// Expresses `h` as an irredundant intersection of Arf-irreducible
/// semigroups: the inclusion-minimal Arf-irreducible oversemigroups, with
/// redundant factors dropped from the canonical tail.
pub fn decompose_arf_irreducible(h: &NumericalSemigroup) -> Result<Decomposition, Error> {
    decompose_arf_irreducible_with_cap(h, DEFAULT_GENUS_CAP)
}

pub fn decompose_arf_irreducible_with_cap(
    h: &NumericalSemigroup,
    cap: u64,
) -> Result<Decomposition, Error> {
    let qa = arf_irreducible_oversemigroups_with_cap(h, cap)?;
    let mut factors: Vec<NumericalSemigroup> = qa
        .iter()
        .filter(|s| !qa.iter().any(|t| t != *s && t.is_subset_of(s)))
        .cloned()
        .collect();
    factors.sort_by(|a, b| a.small_elements().cmp(b.small_elements()));
    let mut idx = factors.len();
    while idx > 0 && factors.len() > 1 {
        idx -= 1;
        let trial: Vec<&NumericalSemigroup> = factors
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != idx)
            .map(|(_, s)| s)
            .collect();
        let meet = trial
            .iter()
            .skip(1)
            .fold((*trial[0]).clone(), |acc, s| acc.intersect(s));
        if &meet == h {
            factors.remove(idx);
        }
    }
    debug_assert_eq!(
        &factors
            .iter()
            .skip(1)
            .fold(factors[0].clone(), |acc, s| acc.intersect(s)),
        h
    );
    Ok(Decomposition { factors })
}
