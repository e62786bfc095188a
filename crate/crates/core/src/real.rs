//! Exact representation of the derived parameters.
//!
//! Every quantity in the parameter family is of the form
//! `a + b * cbrt(r)` with rational `a`, `b`, `r`: rational outright for
//! d in {3, 4} (omega = 2), and affine in omega = cbrt((d-1)d) otherwise.
//! Comparisons against rationals go through interval enclosures with
//! escalating precision; rational-vs-rational comparisons are exact.

use std::cmp::Ordering;
use std::fmt;

use num::{BigInt, Signed, Zero};

use crate::interval::{certify_sign, Interval, Sign, DEFAULT_PRECISION_CAP};
use crate::Rat;

/// `lin + coef * cbrt(radicand)`.
#[derive(Clone, PartialEq, Debug)]
pub struct Real {
    lin: Rat,
    coef: Rat,
    radicand: Rat,
}

impl Real {
    pub fn exact(v: Rat) -> Self {
        Real {
            lin: v,
            coef: Rat::zero(),
            radicand: Rat::zero(),
        }
    }

    pub fn from_int(v: i64) -> Self {
        Self::exact(Rat::from_integer(v.into()))
    }

    /// `a + b * cbrt(r)`. Nonnegative radicand only; that is all the
    /// parameter family needs.
    pub fn affine_cbrt(lin: Rat, coef: Rat, radicand: Rat) -> Self {
        assert!(!radicand.is_negative());
        Real {
            lin,
            coef,
            radicand,
        }
    }

    pub fn cbrt_of(radicand: Rat) -> Self {
        Self::affine_cbrt(Rat::zero(), Rat::from_integer(1.into()), radicand)
    }

    pub fn is_rational(&self) -> bool {
        // Exact when the irrational part vanishes or the radicand is a
        // perfect cube of a rational.
        if self.coef.is_zero() || self.radicand.is_zero() {
            return true;
        }
        rational_cbrt(&self.radicand).is_some()
    }

    /// Exact rational value, when there is one.
    pub fn as_rational(&self) -> Option<Rat> {
        if self.coef.is_zero() || self.radicand.is_zero() {
            return Some(self.lin.clone());
        }
        rational_cbrt(&self.radicand).map(|c| &self.lin + &self.coef * c)
    }

    pub fn enclosure(&self, bits: u32) -> Interval {
        if let Some(v) = self.as_rational() {
            return Interval::exact(v);
        }
        let root = Interval::nth_root(&self.radicand, 3, bits);
        root.scale(&self.coef)
            .add(&Interval::exact(self.lin.clone()))
    }

    pub fn add_rat(&self, v: &Rat) -> Real {
        Real {
            lin: &self.lin + v,
            coef: self.coef.clone(),
            radicand: self.radicand.clone(),
        }
    }

    pub fn scale(&self, v: &Rat) -> Real {
        Real {
            lin: &self.lin * v,
            coef: &self.coef * v,
            radicand: self.radicand.clone(),
        }
    }

    /// Compare against an exact rational. Decidable: equality can only
    /// occur in the rational case.
    pub fn cmp_rat(&self, v: &Rat) -> Ordering {
        if let Some(exact) = self.as_rational() {
            return exact.cmp(v);
        }
        let (sign, _, _) = certify_sign(
            |bits| {
                self.enclosure(bits)
                    .sub(&Interval::exact(v.clone()))
            },
            32,
            DEFAULT_PRECISION_CAP,
        );
        match sign {
            Sign::Negative => Ordering::Less,
            Sign::Positive => Ordering::Greater,
            // Unreachable for a genuinely irrational value; treat a cap
            // hit as equality rather than guessing a side.
            _ => Ordering::Equal,
        }
    }

    /// Smallest integer >= self.
    pub fn ceil(&self) -> BigInt {
        if let Some(v) = self.as_rational() {
            return v.ceil().to_integer();
        }
        let mut bits = 32;
        loop {
            let iv = self.enclosure(bits);
            let lo = iv.lo().ceil().to_integer();
            let hi = iv.hi().ceil().to_integer();
            if lo == hi {
                return lo;
            }
            bits *= 2;
            assert!(
                bits <= DEFAULT_PRECISION_CAP,
                "ceil of an irrational landed on an integer boundary"
            );
        }
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_rational() {
            Some(v) => write!(f, "{v}"),
            None => write!(f, "{} + {}*cbrt({})", self.lin, self.coef, self.radicand),
        }
    }
}

/// Exact rational cube root, when the rational is a perfect cube.
fn rational_cbrt(v: &Rat) -> Option<Rat> {
    if v.is_negative() {
        return None;
    }
    let num = v.numer().nth_root(3);
    let den = v.denom().nth_root(3);
    let candidate = Rat::new(num, den);
    (&candidate * &candidate * &candidate == *v).then_some(candidate)
}
