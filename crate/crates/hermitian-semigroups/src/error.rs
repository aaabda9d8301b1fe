use std::fmt;

/// Errors surfaced by the library.
///
/// Internal inconsistencies (a closed form disagreeing with an enumeration,
/// a failed cross-check between two computation paths) are bugs and panic
/// instead of returning a variant here.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// The characteristic passed to a field constructor is not prime.
    NotPrime(u64),
    /// The extension exponent must be at least 1.
    ZeroExponent,
    /// `q` is not a prime power.
    NotPrimePower(u64),
    /// An input exceeds the supported desk scale.
    TooLarge {
        what: &'static str,
        value: u64,
        max: u64,
    },
    /// A triangle type `d` that does not divide `q + 1`.
    TypeNotDivisor { d: u64, q: u64 },
    /// The zero element has no multiplicative order or inverse.
    ZeroElement,
    /// An element index outside `[0, q^2)`.
    IndexOutOfRange { index: u64, order: u64 },
    /// A point that does not satisfy the curve equation.
    PointOffCurve,
    /// An affine-only operation applied to the point at infinity.
    PointAtInfinity,
    /// Coincident points where distinct ones are required.
    DegeneratePoints,
    /// A scaling automorphism with `eps = 0`.
    ZeroScale,
    /// `(i, j)` outside the strip on which the closed discrepancy formula holds.
    OutsideLambda { i: i64, j: i64 },
    /// A predicate that only accepts nonnegative coefficients.
    NegativeCoefficient { value: i64 },
    /// A residue outside `[0, m)`.
    ResidueOutOfRange { value: i64, modulus: i64 },
    /// The oracle requires a triangle `{P_inf, P_00, P_ab}` in standard form.
    NotStandardTriangle,
    /// A discrepancy check needs two distinct slots.
    SameSlots,
    /// Least upper bound of an empty list.
    EmptyList,
    /// A semigroup box too small to contain all gaps.
    BoundTooSmall { bound: u64, min: u64 },
    /// The zero function has no valuation.
    ZeroFunction,
    /// Malformed textual input (CLI points, elements, suite selectors).
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::ZeroExponent => write!(f, "extension exponent must be at least 1"),
            Error::NotPrimePower(q) => write!(f, "q = {q} is not a prime power"),
            Error::TooLarge { what, value, max } => {
                write!(f, "{what} = {value} exceeds the supported maximum {max}")
            }
            Error::TypeNotDivisor { d, q } => {
                write!(f, "triangle type d = {d} does not divide q + 1 = {}", q + 1)
            }
            Error::ZeroElement => write!(f, "the zero element is not invertible"),
            Error::IndexOutOfRange { index, order } => {
                write!(f, "element index {index} outside [0, {order})")
            }
            Error::PointOffCurve => write!(f, "point does not lie on the Hermitian curve"),
            Error::PointAtInfinity => write!(f, "operation requires an affine point"),
            Error::DegeneratePoints => write!(f, "points must be pairwise distinct"),
            Error::ZeroScale => write!(f, "scaling parameter eps must be nonzero"),
            Error::OutsideLambda { i, j } => {
                write!(
                    f,
                    "({i}, {j}) lies outside the strip 1 <= j <= q+1, j <= i <= j + q"
                )
            }
            Error::NegativeCoefficient { value } => {
                write!(f, "coefficient {value} must be nonnegative")
            }
            Error::ResidueOutOfRange { value, modulus } => {
                write!(f, "residue {value} outside [0, {modulus})")
            }
            Error::NotStandardTriangle => {
                write!(f, "triangle is not in standard form {{P_inf, P_00, P_ab}}")
            }
            Error::SameSlots => write!(f, "the two slots of a point pair must differ"),
            Error::EmptyList => write!(f, "least upper bound of an empty list"),
            Error::BoundTooSmall { bound, min } => {
                write!(f, "box bound {bound} is smaller than the required minimum {min}")
            }
            Error::ZeroFunction => write!(f, "the zero function has no valuation"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
