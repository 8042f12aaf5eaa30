//! Arf predicates and constructions.
//!
//! A numerical semigroup H is Arf when 2a - b is a member for all members
//! a >= b. This module provides the Arf test, the Arf closure of a
//! generating set, the representation of an Arf semigroup by consecutive
//! small-element differences, Arf special gaps (the gaps whose adjunction
//! keeps the semigroup Arf), Arf-irreducibility, the minimal Arf system of
//! generators and the leaf test for the tree of Arf semigroups.

use crate::semigroup::NumericalSemigroup;
use crate::Error;

/// Differences of consecutive small elements of an Arf semigroup:
/// `diffs[j] = h_{j+1} - h_j` over `0 = h_0 < h_1 < … < h_n = conductor`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArfSequence {
    diffs: Vec<u64>,
}

impl ArfSequence {
    pub fn diffs(&self) -> &[u64] {
        &self.diffs
    }

    /// Sum of the differences, which is the conductor.
    pub fn conductor(&self) -> u64 {
        self.diffs.iter().sum()
    }

    /// A difference vector represents an Arf semigroup exactly when every
    /// entry equals a partial sum of the entries after it, or is at least
    /// their total.
    pub fn is_valid(&self) -> bool {
        let n = self.diffs.len();
        (0..n).all(|j| {
            let mut sum = 0;
            let mut hit = false;
            for &x in &self.diffs[j + 1..] {
                sum += x;
                if self.diffs[j] == sum {
                    hit = true;
                    break;
                }
            }
            hit || self.diffs[j] >= sum
        })
    }
}

/// How Arf-irreducibility of a semigroup relates to plain irreducibility.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArfIrreducibleOverlap {
    /// Irreducible and Arf-irreducible; exactly the semigroups generated by
    /// {2, m} with m odd, by {3,4,5} or by {3,5,7} (the naturals included
    /// as <2,1>).
    Both,
    /// Arf-irreducible but not irreducible.
    ArfIrreducibleOnly,
    /// Reserved: irreducible without being Arf-irreducible cannot occur,
    /// since a semigroup with no proper intersection decomposition at all
    /// has none among Arf semigroups either. Never returned.
    NeitherIrreducible,
    /// Not Arf-irreducible (hence not irreducible either).
    NotArfIrreducible,
}

/// Smallest Arf numerical semigroup containing the given generators.
///
/// Computed by monotone saturation: the additive closure of the generators
/// is repeatedly closed under addition and under 2a - b for members a >= b
/// until a fixpoint. Every element added belongs to any Arf semigroup
/// containing the current set, and all additions fall in the finite gap set
/// of the starting semigroup, so the fixpoint is the least Arf container.
pub fn arf_closure(gens: &[u64]) -> Result<NumericalSemigroup, Error> {
    let base = NumericalSemigroup::from_generators(gens)?;
    let c = base.conductor() as usize;
    if c == 0 {
        return Ok(base);
    }
    let mut member = vec![false; c + 1];
    for &s in base.small_elements() {
        member[s as usize] = true;
    }
    // Everything at or beyond c is a member throughout.
    loop {
        let mut changed = false;
        let elems: Vec<usize> = (1..=c).filter(|&x| member[x]).collect();
        for (i, &a) in elems.iter().enumerate() {
            for &b in &elems[i..] {
                let s = a + b;
                if s >= c {
                    break;
                }
                if !member[s] {
                    member[s] = true;
                    changed = true;
                }
            }
            for &b in &elems[..=i] {
                let d = 2 * a - b;
                if d < c && !member[d] {
                    member[d] = true;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    let members: Vec<u64> = (0..=c as u64).filter(|&x| member[x as usize]).collect();
    let closed = NumericalSemigroup::from_small_elements(&members)
        .expect("saturation preserves additive closure");
    debug_assert!(closed.is_arf());
    Ok(closed)
}

impl NumericalSemigroup {
    /// Arf test in pair form: 2a - b is a member for all small elements
    /// a >= b. Pairs led by an element at or past the conductor hold
    /// automatically and are skipped.
    pub fn is_arf(&self) -> bool {
        let c = self.conductor();
        for (i, &a) in self.small_elements().iter().enumerate() {
            if a >= c {
                break;
            }
            for &b in &self.small_elements()[..=i] {
                if !self.contains_u(2 * a - b) {
                    return false;
                }
            }
        }
        true
    }

    /// Consecutive small-element differences of an Arf semigroup.
    pub fn arf_sequence(&self) -> Result<ArfSequence, Error> {
        if !self.is_arf() {
            return Err(Error::NotArf);
        }
        if self.is_naturals() {
            return Err(Error::FullSemigroup);
        }
        let diffs = self
            .small_elements()
            .windows(2)
            .map(|w| w[1] - w[0])
            .collect();
        let seq = ArfSequence { diffs };
        debug_assert!(seq.is_valid());
        Ok(seq)
    }

    /// Arf special gaps: special gaps x, lying between consecutive small
    /// elements lo < x < hi, with 2x - lo and 2hi - x both members. These
    /// are exactly the gaps whose adjunction yields an Arf semigroup.
    pub fn arf_special_gaps(&self) -> Result<Vec<u64>, Error> {
        if !self.is_arf() {
            return Err(Error::NotArf);
        }
        let out = self
            .special_gaps()
            .into_iter()
            .filter(|&x| {
                let pos = self
                    .small_elements()
                    .binary_search(&x)
                    .expect_err("special gaps are gaps");
                let lo = self.small_elements()[pos - 1];
                let hi = self.small_elements()[pos];
                self.contains_u(2 * x - lo) && self.contains_u(2 * hi - x)
            })
            .collect();
        Ok(out)
    }

    /// Adjoins an Arf special gap; the result is again Arf.
    pub fn adjoin_arf(&self, x: u64) -> Result<Self, Error> {
        if !self.arf_special_gaps()?.contains(&x) {
            return Err(Error::NotAnArfSpecialGap(x));
        }
        self.adjoin(x)
    }

    /// An Arf semigroup is Arf-irreducible when it is not an intersection
    /// of two Arf semigroups properly containing it; for anything other
    /// than the naturals this means having exactly one Arf special gap.
    pub fn is_arf_irreducible(&self) -> Result<bool, Error> {
        if self.is_naturals() {
            if !self.is_arf() {
                return Err(Error::NotArf);
            }
            return Ok(true);
        }
        Ok(self.arf_special_gaps()?.len() == 1)
    }

    /// Minimal Arf system of generators.
    ///
    /// With the sentinel x_0 = 0 and x_i the consecutive differences:
    /// h_i is kept iff x_j differs from x_{j+1} + … + x_i for every j < i,
    /// and the extra candidate F + 2 is kept iff x_j differs from
    /// x_{j+1} + … + x_n + 1 for every j <= n.
    // Index arithmetic follows the x_j / h_i conventions directly.
    #[allow(clippy::needless_range_loop)]
    pub fn minimal_arf_generators(&self) -> Result<Vec<u64>, Error> {
        let seq = self.arf_sequence()?;
        let x = seq.diffs();
        let n = x.len();
        let small = self.small_elements();
        let mut out = Vec::new();
        for i in 1..=n {
            let mut sum = 0;
            let mut keep = true;
            for j in (0..i).rev() {
                sum += x[j]; // sum = x_{j+1} + … + x_i in one-based terms
                let xj = if j == 0 { 0 } else { x[j - 1] };
                if xj == sum {
                    keep = false;
                    break;
                }
            }
            if keep {
                out.push(small[i]);
            }
        }
        let mut suffix = 0;
        let mut keep = true;
        for j in (0..=n).rev() {
            let xj = if j == 0 { 0 } else { x[j - 1] };
            if xj == suffix + 1 {
                keep = false;
                break;
            }
            if j > 0 {
                suffix += x[j - 1];
            }
        }
        if keep {
            out.push(small[n] + 1);
        }
        Ok(out)
    }

    /// Leaf test for the tree of Arf semigroups: some x_i equals the sum of
    /// the differences after it and some x_j equals that sum plus one;
    /// equivalently no minimal Arf generator exceeds the Frobenius number.
    pub fn is_leaf(&self) -> Result<bool, Error> {
        let seq = self.arf_sequence()?;
        let d = seq.diffs();
        let mut hit_sum = false;
        let mut hit_sum_plus_one = false;
        for idx in 0..d.len() {
            let suffix: u64 = d[idx + 1..].iter().sum();
            if d[idx] == suffix {
                hit_sum = true;
            }
            if d[idx] == suffix + 1 {
                hit_sum_plus_one = true;
            }
        }
        let leaf = hit_sum && hit_sum_plus_one;
        debug_assert_eq!(leaf, {
            let msg = self.minimal_arf_generators()?;
            (*msg.last().expect("minimal Arf generators are non-empty") as i64)
                <= self.frobenius()
        });
        Ok(leaf)
    }

    /// Places an Arf semigroup in the irreducible/Arf-irreducible diagram.
    pub fn classify_arf_irreducible_overlap(&self) -> Result<ArfIrreducibleOverlap, Error> {
        if !self.is_arf_irreducible()? {
            return Ok(ArfIrreducibleOverlap::NotArfIrreducible);
        }
        if self.is_irreducible() {
            Ok(ArfIrreducibleOverlap::Both)
        } else {
            Ok(ArfIrreducibleOverlap::ArfIrreducibleOnly)
        }
    }
}
