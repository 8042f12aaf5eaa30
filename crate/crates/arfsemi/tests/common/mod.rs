//! Shared corpus for the integration suites.
// Each test target compiles this module on its own and uses a subset of it.
#![allow(dead_code)]
//!
//! The deterministic corpus is the one the acceptance criteria run over:
//! every Arf oversemigroup of the half-lines {0,c,->} for c <= 13, found by
//! brute subset enumeration, plus the Arf closures of 200 fixed-seed random
//! generator sets.

use std::sync::OnceLock;

use arfsemi::oracle::brute_arf_oversemigroups;
use arfsemi::{arf_closure, NumericalSemigroup, RemoveOutcome};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Seed for the random half of the corpus; fixed for reproducible runs.
pub const CORPUS_SEED: u64 = 0x0a5f_5eed;

/// Seed for the nested-pair sampler.
pub const PAIR_SEED: u64 = 0x9a1e_d0d0;

pub fn half_line(c: u64) -> NumericalSemigroup {
    NumericalSemigroup::from_small_elements(&[0, c]).unwrap()
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// 200 generator sets with gcd 1 whose plain closure has genus at most 10,
/// so the brute Arf closure stays enumerable.
pub fn random_generator_sets() -> &'static Vec<Vec<u64>> {
    static SETS: OnceLock<Vec<Vec<u64>>> = OnceLock::new();
    SETS.get_or_init(|| {
        let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED);
        let mut sets = Vec::new();
        while sets.len() < 200 {
            let k = rng.gen_range(2..=4);
            let gens: Vec<u64> = (0..k).map(|_| rng.gen_range(2..=40)).collect();
            if gens.iter().fold(0, |acc, &g| gcd(acc, g)) != 1 {
                continue;
            }
            let base = NumericalSemigroup::from_generators(&gens).unwrap();
            if base.genus() > 10 {
                continue;
            }
            sets.push(gens);
        }
        sets
    })
}

/// The acceptance corpus, deduplicated, in deterministic order.
pub fn corpus() -> &'static Vec<NumericalSemigroup> {
    static CORPUS: OnceLock<Vec<NumericalSemigroup>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        let mut all = Vec::new();
        for c in 2..=13 {
            all.extend(brute_arf_oversemigroups(&half_line(c)).unwrap());
        }
        for gens in random_generator_sets() {
            all.push(arf_closure(gens).unwrap());
        }
        all.sort_by(NumericalSemigroup::canonical_cmp);
        all.dedup();
        all
    })
}

/// Every Arf numerical semigroup of genus at most `max_genus`, walked down
/// the tree whose children remove a minimal Arf generator larger than the
/// Frobenius number.
pub fn arf_semigroups_up_to_genus(max_genus: u64) -> Vec<NumericalSemigroup> {
    let naturals = NumericalSemigroup::naturals();
    let mut out = vec![naturals.clone()];
    let mut frontier = vec![naturals];
    for _ in 0..max_genus {
        let mut next = Vec::new();
        for h in &frontier {
            let children: Vec<NumericalSemigroup> = if h.is_naturals() {
                vec![half_line(2)]
            } else {
                h.minimal_arf_generators()
                    .unwrap()
                    .into_iter()
                    .filter(|&a| a as i64 > h.frobenius())
                    .map(|a| match h.remove_element(a).unwrap() {
                        RemoveOutcome::Removed(s) => s,
                        RemoveOutcome::NotClosed { .. } => {
                            panic!("removing a minimal Arf generator stays closed")
                        }
                    })
                    .collect()
            };
            next.extend(children);
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}
