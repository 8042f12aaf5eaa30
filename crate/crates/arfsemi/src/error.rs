use thiserror::Error as ThisError;

/// Errors reported by semigroup constructors and operations.
#[derive(Debug, Clone, PartialEq, Eq, ThisError)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("generators must be positive")]
    ZeroGenerator,
    #[error("not a numerical semigroup (infinite complement): generators have gcd {gcd}")]
    InfiniteComplement { gcd: u64 },
    #[error("element {0} is too large (inputs must be below 2^31)")]
    ElementTooLarge(u64),
    #[error("small-element list must contain 0")]
    MissingZero,
    #[error("not closed under addition: {lhs} + {rhs} is missing")]
    NotClosed { lhs: u64, rhs: u64 },
    #[error("{0} is not an element of the semigroup")]
    NotAMember(u64),
    #[error("Apery modulus must be a positive element of the semigroup")]
    ZeroModulus,
    #[error("0 cannot be removed from a numerical semigroup")]
    RemoveZero,
    #[error("{0} is not a special gap")]
    NotASpecialGap(u64),
    #[error("{0} is not an Arf special gap")]
    NotAnArfSpecialGap(u64),
    #[error("operation requires an Arf numerical semigroup")]
    NotArf,
    #[error("operation is not defined for the semigroup of all non-negative integers")]
    FullSemigroup,
    #[error("the first semigroup is not contained in the second")]
    NotNested,
    #[error("genus {genus} exceeds the enumeration cap {cap}")]
    GenusCapExceeded { genus: u64, cap: u64 },
    #[error("brute-force enumeration refused: genus {genus} exceeds {cap}")]
    BruteInfeasible { genus: u64, cap: u64 },
}
