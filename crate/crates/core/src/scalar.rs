//! Scalar abstraction for the formula evaluators.
//!
//! The charge formulas are rational functions of (d, Delta, k, p, ...),
//! so they are written once, generically, and instantiated with:
//!
//! * [`Rat`] - exact evaluation (d in {3, 4}, where omega is rational),
//! * [`Interval`] - enclosure evaluation (d >= 19, irrational omega),
//! * `f64` - quick plotting / smoke checks, never for verdicts.

use std::cmp::Ordering;
use std::fmt::Debug;

use num::Zero;

use crate::interval::Interval;
use crate::Rat;

pub trait Scalar: Clone + Debug {
    fn from_int(v: i64) -> Self;
    fn from_rat(v: &Rat) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn div(&self, other: &Self) -> Self;
    /// Three-way comparison when the representation can decide it.
    fn try_cmp(&self, other: &Self) -> Option<Ordering>;

    fn neg(&self) -> Self {
        Self::from_int(0).sub(self)
    }

    /// Definitely greater-or-equal (an undecidable comparison is not a
    /// certificate).
    fn certainly_ge(&self, other: &Self) -> bool {
        matches!(
            self.try_cmp(other),
            Some(Ordering::Greater) | Some(Ordering::Equal)
        )
    }

    fn certainly_gt(&self, other: &Self) -> bool {
        matches!(self.try_cmp(other), Some(Ordering::Greater))
    }
}

impl Scalar for Rat {
    fn from_int(v: i64) -> Self {
        Rat::from_integer(v.into())
    }

    fn from_rat(v: &Rat) -> Self {
        v.clone()
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn sub(&self, other: &Self) -> Self {
        self - other
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn div(&self, other: &Self) -> Self {
        assert!(!other.is_zero(), "rational division by zero");
        self / other
    }

    fn try_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Scalar for Interval {
    fn from_int(v: i64) -> Self {
        Interval::from_int(v)
    }

    fn from_rat(v: &Rat) -> Self {
        Interval::exact(v.clone())
    }

    fn add(&self, other: &Self) -> Self {
        Interval::add(self, other)
    }

    fn sub(&self, other: &Self) -> Self {
        Interval::sub(self, other)
    }

    fn mul(&self, other: &Self) -> Self {
        Interval::mul(self, other)
    }

    fn div(&self, other: &Self) -> Self {
        Interval::div(self, other)
    }

    fn try_cmp(&self, other: &Self) -> Option<Ordering> {
        if self.hi() < other.lo() {
            Some(Ordering::Less)
        } else if self.lo() > other.hi() {
            Some(Ordering::Greater)
        } else if self.is_exact() && other.is_exact() && self.lo() == other.lo() {
            Some(Ordering::Equal)
        } else {
            None
        }
    }
}

impl Scalar for f64 {
    fn from_int(v: i64) -> Self {
        v as f64
    }

    fn from_rat(v: &Rat) -> Self {
        let num = v.numer().to_string().parse::<f64>().unwrap_or(f64::NAN);
        let den = v.denom().to_string().parse::<f64>().unwrap_or(f64::NAN);
        num / den
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn sub(&self, other: &Self) -> Self {
        self - other
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn div(&self, other: &Self) -> Self {
        self / other
    }

    fn try_cmp(&self, other: &Self) -> Option<Ordering> {
        self.partial_cmp(other)
    }
}
