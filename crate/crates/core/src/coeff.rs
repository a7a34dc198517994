//! Exact coefficient rings for Chow-ring classes.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, Signed, ToPrimitive};

/// Integer-like scalar usable as a Schubert-basis coefficient.
///
/// All ring operations go through the checked variants, so a fixed-width
/// type reports [`Error::Overflow`](crate::Error::Overflow) instead of
/// wrapping.
pub trait Coefficient:
    Clone
    + Debug
    + Display
    + Eq
    + Ord
    + Signed
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
{
}

impl Coefficient for i32 {}
impl Coefficient for i64 {}
impl Coefficient for i128 {}
impl Coefficient for BigInt {}
