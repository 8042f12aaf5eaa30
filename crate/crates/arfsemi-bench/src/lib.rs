//! Fixed inputs for the criterion benchmarks.

use arfsemi::NumericalSemigroup;

/// The ten-generator Arf semigroup {0,10,20,24,->}.
pub fn paper_semigroup() -> NumericalSemigroup {
    NumericalSemigroup::from_generators(&[10, 24, 25, 26, 27, 28, 29, 31, 32, 33]).unwrap()
}

/// An Arf semigroup with a longer small-element list, for the sequence
/// based operations: halving steps 0, 64, 96, 112, 120, 124, 126, 127.
pub fn wide_semigroup() -> NumericalSemigroup {
    let mut elems = vec![0u64];
    let mut step = 64;
    let mut cur = 0;
    while step >= 1 {
        cur += step;
        elems.push(cur);
        step /= 2;
    }
    let h = NumericalSemigroup::from_small_elements(&elems).unwrap();
    assert!(h.is_arf());
    h
}

pub fn half_line(c: u64) -> NumericalSemigroup {
    NumericalSemigroup::from_small_elements(&[0, c]).unwrap()
}
