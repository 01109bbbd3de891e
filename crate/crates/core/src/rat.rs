//! The exact scalar type and a few small helpers.

use num_rational::Ratio;
use num_traits::Zero;

/// Exact rational scalar. Every quantity in this crate is an integer or a
/// rational with a tiny denominator (bounded by the index of connection of
/// the root lattice), so `i64` components are more than enough.
pub type Rat = Ratio<i64>;

/// Shorthand for an integer as a `Rat`.
pub fn rat(n: i64) -> Rat {
    Ratio::from_integer(n)
}

/// Exact fraction `n/d`; panics if `d == 0`.
pub fn frac(n: i64, d: i64) -> Rat {
    Ratio::new(n, d)
}

/// The integer value of `r`, if `r` is an integer.
pub fn as_integer(r: &Rat) -> Option<i64> {
    if r.is_integer() {
        Some(r.to_integer())
    } else {
        None
    }
}

/// True when every entry is an integer.
pub fn all_integers(v: &[Rat]) -> bool {
    v.iter().all(Rat::is_integer)
}

/// Sum of the entries (the "height" of a vector in the simple-root basis).
pub fn height(v: &[Rat]) -> Rat {
    v.iter().fold(Rat::zero(), |acc, x| acc + x)
}

/// Renders a rational vector compactly, e.g. `(1, 3/2, 0)`.
pub fn display_vec(v: &[Rat]) -> String {
    let body: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", body.join(", "))
}
