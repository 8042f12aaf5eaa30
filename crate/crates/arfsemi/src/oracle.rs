//! Brute-force reference implementations, straight from the definitions.
//!
//! These deliberately share no algorithmic code with the fast paths: the
//! Arf test uses the triple form a + b - c instead of the pair form, gap
//! adjunction and removal are rechecked from the axioms, and families are
//! produced by enumerating every subset of the gap set. They back the test
//! suite and the CLI `--verify` mode; clarity over speed throughout.

use crate::semigroup::NumericalSemigroup;
use crate::Error;

/// Refusal threshold for the 2^genus subset enumerations.
pub const BRUTE_GENUS_CAP: u64 = 22;

/// Additive-closure check over a sorted member list. The list is read as
/// `elems ∪ {last, last+1, …}`; all pairwise sums landing below the last
/// entry must be present.
pub fn brute_is_semigroup(elems: &[u64]) -> bool {
    if elems.first() != Some(&0) {
        return false;
    }
    if elems.windows(2).any(|w| w[0] >= w[1]) {
        return false;
    }
    let last = *elems.last().unwrap();
    let member = |x: u64| x >= last || elems.binary_search(&x).is_ok();
    for (i, &a) in elems.iter().enumerate().skip(1) {
        for &b in &elems[i..] {
            if a + b >= last {
                break;
            }
            if !member(a + b) {
                return false;
            }
        }
    }
    true
}

/// Arf check in triple form: a + b - c is a member for all members
/// a >= b >= c. Same list semantics as [`brute_is_semigroup`]. Triples led
/// by the last entry or beyond hold automatically.
pub fn brute_is_arf(elems: &[u64]) -> bool {
    let last = *elems.last().expect("non-empty member list");
    let member = |x: u64| x >= last || elems.binary_search(&x).is_ok();
    for (i, &a) in elems.iter().enumerate() {
        if a >= last {
            break;
        }
        for (j, &b) in elems[..=i].iter().enumerate() {
            for &c in &elems[..=j] {
                if !member(a + b - c) {
                    return false;
                }
            }
        }
    }
    true
}

/// Gaps whose adjunction passes both axiom checks.
pub fn brute_arf_special_gaps(h: &NumericalSemigroup) -> Vec<u64> {
    h.gaps()
        .into_iter()
        .filter(|&x| {
            let mut cand = h.small_elements().to_vec();
            cand.push(x);
            cand.sort_unstable();
            brute_is_semigroup(&cand) && brute_is_arf(&cand)
        })
        .collect()
}

/// Every Arf semigroup containing `h`, found by testing all 2^genus gap
/// subsets. Canonical order, like the fast enumeration.
pub fn brute_arf_oversemigroups(h: &NumericalSemigroup) -> Result<Vec<NumericalSemigroup>, Error> {
    let genus = h.genus();
    if genus > BRUTE_GENUS_CAP {
        return Err(Error::BruteInfeasible {
            genus,
            cap: BRUTE_GENUS_CAP,
        });
    }
    let gaps = h.gaps();
    let mut out = Vec::new();
    for mask in 0u64..1 << gaps.len() {
        let mut cand = h.small_elements().to_vec();
        for (bit, &g) in gaps.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                cand.push(g);
            }
        }
        cand.sort_unstable();
        if brute_is_semigroup(&cand) && brute_is_arf(&cand) {
            out.push(
                NumericalSemigroup::from_small_elements(&cand)
                    .expect("candidate passed the axiom checks"),
            );
        }
    }
    out.sort_by(NumericalSemigroup::canonical_cmp);
    Ok(out)
}

/// Members (plus F + 2) whose removal leaves an Arf numerical semigroup.
pub fn brute_minimal_arf_generators(h: &NumericalSemigroup) -> Vec<u64> {
    let c = h.conductor();
    let mut out = Vec::new();
    let candidates: Vec<u64> = h.small_elements()[1..]
        .iter()
        .copied()
        .chain([c + 1])
        .collect();
    for a in candidates {
        let cand: Vec<u64> = if a < c {
            h.small_elements()
                .iter()
                .copied()
                .filter(|&s| s != a)
                .collect()
        } else {
            h.small_elements()
                .iter()
                .copied()
                .chain(c + 1..=a + 1)
                .filter(|&s| s != a)
                .collect()
        };
        if brute_is_semigroup(&cand) && brute_is_arf(&cand) {
            out.push(a);
        }
    }
    out
}

/// Arf closure as the intersection of every Arf semigroup in the gap
/// lattice of the plain closure of the generators.
pub fn brute_arf_closure(gens: &[u64]) -> Result<NumericalSemigroup, Error> {
    let base = NumericalSemigroup::from_generators(gens)?;
    let supersets = brute_arf_oversemigroups(&base)?;
    let first = supersets.first().expect("the naturals always qualify");
    Ok(supersets
        .iter()
        .skip(1)
        .fold(first.clone(), |acc, s| acc.intersect(s)))
}
