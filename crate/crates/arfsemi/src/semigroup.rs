//! Numerical semigroups in canonical small-elements form.
//!
//! A numerical semigroup is a subset of the non-negative integers that
//! contains 0, is closed under addition and has a finite complement. The
//! canonical representation stores the *small elements*: every member up to
//! and including the conductor (the point from which all integers belong to
//! the set). The full set of non-negative integers is stored as `[0]`.
//!
//! Values are immutable after construction, so they can be shared and sent
//! between threads freely; every operation here is a pure function.

use std::cmp::Ordering;
use std::fmt;

use crate::Error;

/// Upper bound on admissible input values. Everything below this keeps all
/// intermediate sums and doubled differences inside 64 bits.
pub const MAX_ELEMENT: u64 = 1 << 31;

/// A numerical semigroup, held as its sorted small elements.
///
/// Invariants maintained by every constructor:
/// - the list is strictly increasing and starts with 0;
/// - the last entry is exactly the conductor (so `[0]` is the set of all
///   non-negative integers);
/// - the implied set `small ∪ {conductor, conductor+1, …}` is closed under
///   addition and has gcd 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NumericalSemigroup {
    small: Vec<u64>,
}

/// Apery set of a semigroup with respect to a positive member `modulus`:
/// `witnesses[i]` is the least member congruent to `i` mod `modulus`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AperySet {
    pub modulus: u64,
    pub witnesses: Vec<u64>,
}

impl AperySet {
    pub fn max_witness(&self) -> u64 {
        *self.witnesses.iter().max().expect("witness per residue")
    }
}

/// Gap-side summary of a semigroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapReport {
    pub frobenius: i64,
    pub gaps: Vec<u64>,
    pub pseudo_frobenius: Vec<u64>,
    pub special_gaps: Vec<u64>,
    pub genus: u64,
}

/// Result of removing a single element: either the residual set is again a
/// numerical semigroup, or a witness pair shows where additive closure broke.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RemoveOutcome {
    Removed(NumericalSemigroup),
    NotClosed { lhs: u64, rhs: u64 },
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl NumericalSemigroup {
    /// The semigroup of all non-negative integers.
    pub fn naturals() -> Self {
        NumericalSemigroup { small: vec![0] }
    }

    /// Builds the semigroup generated by `gens` in canonical form.
    ///
    /// The generators must be positive with gcd 1; order and duplicates do
    /// not matter. Membership is sieved over a growing bound until a run of
    /// `multiplicity` consecutive members certifies the conductor.
    pub fn from_generators(gens: &[u64]) -> Result<Self, Error> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        let mut gens = gens.to_vec();
        gens.sort_unstable();
        gens.dedup();
        if gens[0] == 0 {
            return Err(Error::ZeroGenerator);
        }
        if let Some(&g) = gens.iter().find(|&&g| g >= MAX_ELEMENT) {
            return Err(Error::ElementTooLarge(g));
        }
        let g = gens.iter().fold(0, |acc, &x| gcd(acc, x));
        if g != 1 {
            return Err(Error::InfiniteComplement { gcd: g });
        }
        if gens[0] == 1 {
            return Ok(Self::naturals());
        }

        let m = gens[0] as usize;
        let mut bound = 2 * (*gens.last().unwrap() as usize) + 2;
        loop {
            let mut member = vec![false; bound + 1];
            member[0] = true;
            for x in 1..=bound {
                member[x] = gens
                    .iter()
                    .take_while(|&&g| g as usize <= x)
                    .any(|&g| member[x - g as usize]);
            }
            // A run of m consecutive members certifies everything beyond it.
            let mut run = 0;
            let mut certified = None;
            for (x, &is_member) in member.iter().enumerate() {
                if is_member {
                    run += 1;
                    if run == m {
                        certified = Some(x + 1 - m);
                        break;
                    }
                } else {
                    run = 0;
                }
            }
            if let Some(start) = certified {
                let mut c = start;
                while c > 0 && member[c - 1] {
                    c -= 1;
                }
                let small = (0..=c).filter(|&x| member[x]).map(|x| x as u64).collect();
                return Ok(NumericalSemigroup { small });
            }
            bound *= 2;
        }
    }

    /// Validates a small-elements list and returns its canonical form.
    ///
    /// The list is interpreted as `elems ∪ {max(elems), max(elems)+1, …}`
    /// after sorting and deduplication. Entries at or beyond the true
    /// conductor are trimmed so the stored list ends exactly at it.
    pub fn from_small_elements(elems: &[u64]) -> Result<Self, Error> {
        let mut v = elems.to_vec();
        v.sort_unstable();
        v.dedup();
        match v.first() {
            Some(0) => {}
            _ => return Err(Error::MissingZero),
        }
        let last = *v.last().unwrap();
        if last >= MAX_ELEMENT {
            return Err(Error::ElementTooLarge(last));
        }
        check_closure(&v).map_err(|(lhs, rhs)| Error::NotClosed { lhs, rhs })?;
        Ok(Self::from_members_trimmed(v))
    }

    /// Canonicalizes a sorted member list whose implied set is already known
    /// to be a numerical semigroup (everything from the last entry onward is
    /// a member).
    fn from_members_trimmed(v: Vec<u64>) -> Self {
        debug_assert!(v.first() == Some(&0));
        let mut k = v.len() - 1;
        while k > 0 && v[k - 1] + 1 == v[k] {
            k -= 1;
        }
        if k == 0 {
            return Self::naturals();
        }
        let mut small = v;
        small.truncate(k + 1);
        NumericalSemigroup { small }
    }

    /// The canonical small-elements list (members up to the conductor).
    pub fn small_elements(&self) -> &[u64] {
        &self.small
    }

    pub fn is_naturals(&self) -> bool {
        self.small.len() == 1
    }

    /// Membership test; false for negative integers.
    pub fn contains(&self, x: i64) -> bool {
        x >= 0 && self.contains_u(x as u64)
    }

    pub(crate) fn contains_u(&self, x: u64) -> bool {
        x >= self.conductor() || self.small.binary_search(&x).is_ok()
    }

    /// The conductor: least element from which all integers are members.
    pub fn conductor(&self) -> u64 {
        *self.small.last().expect("small elements are never empty")
    }

    /// The Frobenius number: largest gap, or -1 for the naturals.
    pub fn frobenius(&self) -> i64 {
        self.conductor() as i64 - 1
    }

    /// Least positive member.
    pub fn multiplicity(&self) -> u64 {
        if self.is_naturals() {
            1
        } else {
            self.small[1]
        }
    }

    /// Number of gaps.
    pub fn genus(&self) -> u64 {
        self.conductor() + 1 - self.small.len() as u64
    }

    /// Sorted list of gaps (non-members below the conductor).
    pub fn gaps(&self) -> Vec<u64> {
        (0..self.conductor())
            .filter(|&x| self.small.binary_search(&x).is_err())
            .collect()
    }

    /// The unique minimal system of generators; `[1]` for the naturals.
    pub fn minimal_generators(&self) -> Vec<u64> {
        if self.is_naturals() {
            return vec![1];
        }
        let c = self.conductor();
        let m = self.multiplicity();
        // Every member of at least c + m splits off an m, so generators
        // live in [m, c + m).
        (m..c + m)
            .filter(|&x| self.contains_u(x))
            .filter(|&x| !(m..=x / 2).any(|a| self.contains_u(a) && self.contains_u(x - a)))
            .collect()
    }

    /// Size of the minimal generating set.
    pub fn embedding_dimension(&self) -> usize {
        self.minimal_generators().len()
    }

    /// Apery set with respect to a positive member `h`.
    pub fn apery_set(&self, h: u64) -> Result<AperySet, Error> {
        if h == 0 {
            return Err(Error::ZeroModulus);
        }
        if !self.contains_u(h) {
            return Err(Error::NotAMember(h));
        }
        let mut witnesses = vec![u64::MAX; h as usize];
        let mut missing = h as usize;
        let mut x = 0;
        while missing > 0 {
            if self.contains_u(x) {
                let r = (x % h) as usize;
                if witnesses[r] == u64::MAX {
                    witnesses[r] = x;
                    missing -= 1;
                }
            }
            x += 1;
        }
        Ok(AperySet { modulus: h, witnesses })
    }

    /// Pseudo-Frobenius numbers: gaps g with g + s a member for every
    /// positive member s. Empty for the naturals.
    pub fn pseudo_frobenius(&self) -> Vec<u64> {
        self.gaps()
            .into_iter()
            .filter(|&g| self.small.iter().skip(1).all(|&s| self.contains_u(g + s)))
            .collect()
    }

    /// Special gaps: pseudo-Frobenius numbers whose double is a member.
    /// These are exactly the gaps whose adjunction yields a semigroup.
    pub fn special_gaps(&self) -> Vec<u64> {
        self.pseudo_frobenius()
            .into_iter()
            .filter(|&g| self.contains_u(2 * g))
            .collect()
    }

    pub fn gap_report(&self) -> GapReport {
        GapReport {
            frobenius: self.frobenius(),
            gaps: self.gaps(),
            pseudo_frobenius: self.pseudo_frobenius(),
            special_gaps: self.special_gaps(),
            genus: self.genus(),
        }
    }

    /// Set intersection, re-canonicalized.
    pub fn intersect(&self, other: &Self) -> Self {
        let bound = self.conductor().max(other.conductor());
        let members = (0..=bound)
            .filter(|&x| self.contains_u(x) && other.contains_u(x))
            .collect();
        Self::from_members_trimmed(members)
    }

    /// Whether every member of `self` is a member of `other`.
    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.conductor() >= other.conductor()
            && self.small.iter().all(|&s| other.contains_u(s))
    }

    /// Adjoins a special gap, yielding the semigroup `self ∪ {x}`.
    pub fn adjoin(&self, x: u64) -> Result<Self, Error> {
        if !self.special_gaps().contains(&x) {
            return Err(Error::NotASpecialGap(x));
        }
        let mut v = self.small.clone();
        let pos = v.binary_search(&x).expect_err("special gaps are gaps");
        v.insert(pos, x);
        Ok(Self::from_members_trimmed(v))
    }

    /// Removes a positive member. Returns the residual semigroup when the
    /// remaining set is additively closed, otherwise the witness pair whose
    /// sum became unreachable.
    pub fn remove_element(&self, a: u64) -> Result<RemoveOutcome, Error> {
        if a == 0 {
            return Err(Error::RemoveZero);
        }
        if !self.contains_u(a) {
            return Err(Error::NotAMember(a));
        }
        let c = self.conductor();
        let v: Vec<u64> = if a < c {
            self.small.iter().copied().filter(|&s| s != a).collect()
        } else {
            // Removing a tail element moves the stored bound to a + 1.
            self.small
                .iter()
                .copied()
                .chain(c + 1..=a + 1)
                .filter(|&s| s != a)
                .collect()
        };
        match check_closure(&v) {
            Ok(()) => Ok(RemoveOutcome::Removed(Self::from_members_trimmed(v))),
            Err((lhs, rhs)) => Ok(RemoveOutcome::NotClosed { lhs, rhs }),
        }
    }

    /// Symmetry: F - x is a member for every gap x.
    pub fn is_symmetric(&self) -> bool {
        let f = self.frobenius();
        self.gaps().into_iter().all(|g| self.contains(f - g as i64))
    }

    /// Pseudo-symmetry: F is even and F - x is a member for every gap x
    /// other than F/2.
    pub fn is_pseudo_symmetric(&self) -> bool {
        let f = self.frobenius();
        if f < 0 || f % 2 != 0 {
            return false;
        }
        self.gaps()
            .into_iter()
            .all(|g| g as i64 == f / 2 || self.contains(f - g as i64))
    }

    /// Irreducibility: the semigroup is not an intersection of two proper
    /// oversemigroups, equivalently it is symmetric or pseudo-symmetric.
    /// The naturals count as irreducible.
    pub fn is_irreducible(&self) -> bool {
        self.is_symmetric() || self.is_pseudo_symmetric()
    }

    /// Deterministic display order for semigroup collections: genus
    /// descending, then small elements lexicographically.
    pub fn canonical_cmp(a: &Self, b: &Self) -> Ordering {
        b.genus()
            .cmp(&a.genus())
            .then_with(|| a.small.cmp(&b.small))
    }
}

/// Checks additive closure of `v ∪ {last(v), last(v)+1, …}` over the pairs
/// that matter (both entries positive, sum below the last entry).
fn check_closure(v: &[u64]) -> Result<(), (u64, u64)> {
    let last = *v.last().expect("non-empty member list");
    let member = |x: u64| x >= last || v.binary_search(&x).is_ok();
    for (i, &a) in v.iter().enumerate().skip(1) {
        for &b in &v[i..] {
            if a + b >= last {
                break;
            }
            if !member(a + b) {
                return Err((a, b));
            }
        }
    }
    Ok(())
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for s in &self.small {
            write!(f, "{s}, ")?;
        }
        write!(f, "->}}")
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ns(gens: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    fn nse(small: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::from_small_elements(small).unwrap()
    }

    /// Independent sieve used to derive expected member lists: all sums of
    /// generators up to the bound.
    fn sieve(gens: &[u64], bound: u64) -> Vec<u64> {
        let mut member = vec![false; bound as usize + 1];
        member[0] = true;
        for x in 1..=bound as usize {
            member[x] = gens
                .iter()
                .any(|&g| g as usize <= x && member[x - g as usize]);
        }
        (0..=bound).filter(|&x| member[x as usize]).collect()
    }

    #[test]
    fn from_generators_two_three() {
        let h = ns(&[2, 3]);
        assert_eq!(h.small_elements(), [0, 2]);
        // Cross-check against the plain sieve: every sieved member at or
        // past the stored conductor, none below it outside the list.
        let members = sieve(&[2, 3], 9);
        for x in members {
            assert!(h.contains(x as i64));
        }
        assert!(!h.contains(1));
    }

    #[test]
    fn from_generators_naturals() {
        assert_eq!(ns(&[1]).small_elements(), [0]);
        assert!(ns(&[1]).is_naturals());
        assert_eq!(ns(&[3, 5, 1]).small_elements(), [0]);
    }

    #[test]
    fn from_generators_ten_gen_example() {
        let h = ns(&[10, 24, 25, 26, 27, 28, 29, 31, 32, 33]);
        assert_eq!(h.small_elements(), [0, 10, 20, 24]);
    }

    #[test]
    fn from_generators_is_order_insensitive() {
        let a = ns(&[3, 11, 13]);
        let b = ns(&[13, 3, 11, 3]);
        assert_eq!(a, b);
    }

    #[test]
    fn from_generators_errors() {
        assert_eq!(
            NumericalSemigroup::from_generators(&[]),
            Err(Error::EmptyGenerators)
        );
        assert_eq!(
            NumericalSemigroup::from_generators(&[0, 3]),
            Err(Error::ZeroGenerator)
        );
        assert_eq!(
            NumericalSemigroup::from_generators(&[4, 6]),
            Err(Error::InfiniteComplement { gcd: 2 })
        );
        assert!(matches!(
            NumericalSemigroup::from_generators(&[2, MAX_ELEMENT]),
            Err(Error::ElementTooLarge(_))
        ));
    }

    #[test]
    fn from_small_elements_paper_example() {
        let h = nse(&[0, 10, 17, 20]);
        assert_eq!(h.conductor(), 20);
        assert_eq!(h.small_elements(), [0, 10, 17, 20]);
    }

    #[test]
    fn from_small_elements_naturals_and_closure() {
        assert!(nse(&[0]).is_naturals());
        // {0,3,5,->} is generated by 3,5,7; 3+3 lands past the conductor.
        assert_eq!(nse(&[0, 3, 5]), ns(&[3, 5, 7]));
    }

    #[test]
    fn from_small_elements_normalizes() {
        assert_eq!(nse(&[0, 20, 10, 17, 17]).small_elements(), [0, 10, 17, 20]);
        // Trailing members past the true conductor are trimmed.
        assert_eq!(nse(&[0, 3, 5, 6, 7]).small_elements(), [0, 3, 5]);
        assert_eq!(nse(&[0, 2, 3, 4, 5]).small_elements(), [0, 2]);
        assert!(nse(&[0, 1, 2, 3]).is_naturals());
    }

    #[test]
    fn from_small_elements_errors() {
        assert_eq!(
            NumericalSemigroup::from_small_elements(&[]),
            Err(Error::MissingZero)
        );
        assert_eq!(
            NumericalSemigroup::from_small_elements(&[1, 2]),
            Err(Error::MissingZero)
        );
        assert_eq!(
            NumericalSemigroup::from_small_elements(&[0, 3, 7]),
            Err(Error::NotClosed { lhs: 3, rhs: 3 })
        );
    }

    #[test]
    fn contains_cases() {
        let h = nse(&[0, 10, 20, 24]);
        assert!(h.contains(20));
        assert!(!h.contains(15));
        assert!(h.contains(999));
        assert!(!h.contains(-1));
    }

    #[test]
    fn minimal_generators_examples() {
        assert_eq!(
            nse(&[0, 6, 9, 11]).minimal_generators(),
            [6, 9, 11, 13, 14, 16]
        );
        assert_eq!(NumericalSemigroup::naturals().minimal_generators(), [1]);
        // Derived by regeneration: dropping either candidate no longer
        // yields the same numerical semigroup.
        let h = nse(&[0, 2]);
        assert_eq!(h.minimal_generators(), [2, 3]);
        for g in [2, 3] {
            let rest: Vec<u64> = [2, 3].into_iter().filter(|&x| x != g).collect();
            assert!(NumericalSemigroup::from_generators(&rest)
                .map(|s| s != h)
                .unwrap_or(true));
        }
    }

    #[test]
    fn basic_invariants() {
        let h = nse(&[0, 10, 20, 24]);
        assert_eq!(h.multiplicity(), 10);
        assert_eq!(h.frobenius(), 23);
        assert_eq!(h.conductor(), 24);
        assert_eq!(h.genus(), 21);

        let n = NumericalSemigroup::naturals();
        assert_eq!(n.multiplicity(), 1);
        assert_eq!(n.embedding_dimension(), 1);
        assert_eq!(n.frobenius(), -1);
        assert_eq!(n.conductor(), 0);
        assert_eq!(n.genus(), 0);
        assert!(n.gaps().is_empty());

        let h = ns(&[2, 3]);
        assert_eq!(h.frobenius(), 1);
        assert_eq!(h.gaps(), [1]);
        assert_eq!(h.genus(), 1);
    }

    #[test]
    fn apery_examples() {
        let ap = ns(&[2, 3]).apery_set(2).unwrap();
        assert_eq!(ap.witnesses, [0, 3]);

        let ap = NumericalSemigroup::naturals().apery_set(1).unwrap();
        assert_eq!(ap.witnesses, [0]);

        let h = nse(&[0, 10, 20, 24]);
        let ap = h.apery_set(10).unwrap();
        assert_eq!(ap.max_witness(), 24 + 10 - 1);
        assert_eq!(ap.witnesses[0], 0);

        assert_eq!(h.apery_set(15), Err(Error::NotAMember(15)));
        assert_eq!(h.apery_set(0), Err(Error::ZeroModulus));
    }

    #[test]
    fn pseudo_frobenius_examples() {
        // Half-line {0,c,->}: every gap is pseudo-Frobenius.
        assert_eq!(nse(&[0, 5]).pseudo_frobenius(), [1, 2, 3, 4]);
        assert_eq!(ns(&[2, 3]).pseudo_frobenius(), [1]);
        let pf = nse(&[0, 6, 9, 11]).pseudo_frobenius();
        assert!(pf.contains(&10));
        assert!(NumericalSemigroup::naturals().pseudo_frobenius().is_empty());
    }

    #[test]
    fn special_gaps_examples() {
        let h = ns(&[10, 24, 25, 26, 27, 28, 29, 31, 32, 33]);
        assert_eq!(h.special_gaps(), [14, 15, 16, 17, 18, 19, 21, 22, 23]);
        assert_eq!(ns(&[6, 9, 11, 13, 14, 16]).special_gaps(), [3, 7, 8, 10]);
        assert!(NumericalSemigroup::naturals().special_gaps().is_empty());
    }

    #[test]
    fn gap_report_nesting() {
        let h = nse(&[0, 6, 9, 11]);
        let r = h.gap_report();
        assert_eq!(r.frobenius, 10);
        assert_eq!(r.genus as usize, r.gaps.len());
        for g in &r.special_gaps {
            assert!(r.pseudo_frobenius.contains(g));
        }
        for g in &r.pseudo_frobenius {
            assert!(r.gaps.contains(g));
        }
    }

    #[test]
    fn intersect_examples() {
        assert_eq!(
            ns(&[3, 11, 13]).intersect(&ns(&[2, 9])),
            ns(&[6, 9, 11, 13, 14, 16])
        );
        let h = nse(&[0, 6, 9, 11]);
        assert_eq!(h.intersect(&NumericalSemigroup::naturals()), h);
        assert_eq!(
            nse(&[0, 10, 14, 18, 20]).intersect(&nse(&[0, 10, 16, 18, 20])),
            nse(&[0, 10, 18, 20])
        );
    }

    #[test]
    fn adjoin_examples() {
        let h = nse(&[0, 10, 20, 24]);
        assert_eq!(h.adjoin(15).unwrap(), nse(&[0, 10, 15, 20, 24]));
        assert_eq!(h.adjoin(23).unwrap(), nse(&[0, 10, 20, 23]));
        assert_eq!(nse(&[0, 2]).adjoin(1).unwrap(), NumericalSemigroup::naturals());
        assert_eq!(h.adjoin(11), Err(Error::NotASpecialGap(11)));
        assert_eq!(h.adjoin(20), Err(Error::NotASpecialGap(20)));
    }

    #[test]
    fn remove_element_examples() {
        // {0,3,->} minus 5 stays closed: {0,3,4,6,->}.
        assert_eq!(
            ns(&[3, 4, 5]).remove_element(5).unwrap(),
            RemoveOutcome::Removed(nse(&[0, 3, 4, 6]))
        );
        assert_eq!(
            nse(&[0, 3, 5]).remove_element(3).unwrap(),
            RemoveOutcome::Removed(nse(&[0, 5]))
        );
        assert_eq!(
            ns(&[2, 3]).remove_element(2).unwrap(),
            RemoveOutcome::Removed(nse(&[0, 3]))
        );
        // Removing 4 from <2,5> breaks closure at 2+2.
        assert_eq!(
            ns(&[2, 5]).remove_element(4).unwrap(),
            RemoveOutcome::NotClosed { lhs: 2, rhs: 2 }
        );
        let h = ns(&[2, 5]);
        assert_eq!(h.remove_element(0), Err(Error::RemoveZero));
        assert_eq!(h.remove_element(3), Err(Error::NotAMember(3)));
    }

    #[test]
    fn symmetry_examples() {
        assert!(ns(&[2, 7]).is_symmetric());
        assert!(ns(&[3, 5, 7]).is_pseudo_symmetric());
        assert!(!nse(&[0, 10, 17, 20]).is_irreducible());
        assert!(NumericalSemigroup::naturals().is_irreducible());
        assert!(NumericalSemigroup::naturals().is_symmetric());
        assert!(!NumericalSemigroup::naturals().is_pseudo_symmetric());
    }

    #[test]
    fn round_trip_canonical() {
        for h in [
            ns(&[2, 3]),
            ns(&[6, 9, 11, 13, 14, 16]),
            nse(&[0, 10, 20, 24]),
            NumericalSemigroup::naturals(),
        ] {
            assert_eq!(
                NumericalSemigroup::from_small_elements(h.small_elements()).unwrap(),
                h
            );
        }
    }

    #[test]
    fn display_form() {
        assert_eq!(nse(&[0, 2]).to_string(), "{0, 2, ->}");
        assert_eq!(NumericalSemigroup::naturals().to_string(), "{0, ->}");
    }

    #[test]
    fn values_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<NumericalSemigroup>();
        assert_send_sync::<AperySet>();
        assert_send_sync::<GapReport>();
    }
}
