//! Enclosing intervals with exact rational endpoints.
//!
//! Field operations on rationals are exact, so enclosures only widen at
//! root extraction, where the requested precision controls the width.
//! Sign certification escalates precision until the enclosure excludes
//! zero or a hard cap declares the question indeterminate.

use num::bigint::Sign as BigSign;
use num::{BigInt, One, Signed, Zero};

use crate::Rat;

/// Precision cap for sign certification, in bits.
pub const DEFAULT_PRECISION_CAP: u32 = 4096;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Interval {
    lo: Rat,
    hi: Rat,
}

/// Outcome of a sign certification.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
    /// The enclosure straddles zero at the precision cap.
    Indeterminate,
}

impl Interval {
    pub fn new(lo: Rat, hi: Rat) -> Self {
        assert!(lo <= hi, "inverted interval");
        Interval { lo, hi }
    }

    pub fn exact(v: Rat) -> Self {
        Interval {
            lo: v.clone(),
            hi: v,
        }
    }

    pub fn from_int(v: i64) -> Self {
        Self::exact(Rat::from_integer(v.into()))
    }

    pub fn lo(&self) -> &Rat {
        &self.lo
    }

    pub fn hi(&self) -> &Rat {
        &self.hi
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn as_exact(&self) -> Option<&Rat> {
        self.is_exact().then_some(&self.lo)
    }

    pub fn add(&self, other: &Interval) -> Interval {
        Interval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    pub fn sub(&self, other: &Interval) -> Interval {
        Interval {
            lo: &self.lo - &other.hi,
            hi: &self.hi - &other.lo,
        }
    }

    pub fn neg(&self) -> Interval {
        Interval {
            lo: -self.hi.clone(),
            hi: -self.lo.clone(),
        }
    }

    pub fn mul(&self, other: &Interval) -> Interval {
        let candidates = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        Interval {
            lo: candidates.iter().min().unwrap().clone(),
            hi: candidates.iter().max().unwrap().clone(),
        }
    }

    /// Division; the divisor must exclude zero.
    pub fn div(&self, other: &Interval) -> Interval {
        assert!(
            other.lo.is_positive() || other.hi.is_negative(),
            "division by an interval containing zero"
        );
        let candidates = [
            &self.lo / &other.lo,
            &self.lo / &other.hi,
            &self.hi / &other.lo,
            &self.hi / &other.hi,
        ];
        Interval {
            lo: candidates.iter().min().unwrap().clone(),
            hi: candidates.iter().max().unwrap().clone(),
        }
    }

    pub fn scale(&self, factor: &Rat) -> Interval {
        if factor.is_negative() {
            Interval {
                lo: &self.hi * factor,
                hi: &self.lo * factor,
            }
        } else {
            Interval {
                lo: &self.lo * factor,
                hi: &self.hi * factor,
            }
        }
    }

    /// Enclosure of `x^(1/n)` for nonnegative rational `x`, with the
    /// endpoints on the grid of multiples of `2^-bits`.
    pub fn nth_root(x: &Rat, n: u32, bits: u32) -> Interval {
        assert!(!x.is_negative(), "nth_root of a negative rational");
        assert!(n >= 1);
        if x.is_zero() {
            return Interval::exact(Rat::zero());
        }
        let scale: BigInt = BigInt::one() << bits;
        // floor(x * 2^(n*bits)) has nth root m with m/2^bits <= x^(1/n).
        let scaled_num = x.numer() * (&scale).pow(n) / x.denom();
        let m = scaled_num.nth_root(n);
        let lo = Rat::new(m.clone(), scale.clone());
        // Smallest grid point whose nth power reaches x.
        let mut hi_m = m;
        loop {
            let p = Rat::new(hi_m.clone().pow(n), (&scale).pow(n));
            if &p >= x {
                break;
            }
            hi_m += 1;
        }
        Interval {
            lo,
            hi: Rat::new(hi_m, scale),
        }
    }

    /// Enclosure of the nth root of an interval enclosure.
    pub fn nth_root_iv(&self, n: u32, bits: u32) -> Interval {
        let lo = Interval::nth_root(&self.lo, n, bits);
        let hi = Interval::nth_root(&self.hi, n, bits);
        Interval {
            lo: lo.lo,
            hi: hi.hi,
        }
    }

    pub fn sqrt(&self, bits: u32) -> Interval {
        self.nth_root_iv(2, bits)
    }

    pub fn cbrt(&self, bits: u32) -> Interval {
        self.nth_root_iv(3, bits)
    }

    /// Sign of the enclosure, when definite.
    pub fn sign(&self) -> Sign {
        if self.lo.is_positive() {
            Sign::Positive
        } else if self.hi.is_negative() {
            Sign::Negative
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Sign::Zero
        } else {
            Sign::Indeterminate
        }
    }

    /// True when the whole enclosure lies strictly below `other`.
    pub fn strictly_below(&self, other: &Interval) -> bool {
        self.hi < other.lo
    }

    pub fn contains(&self, v: &Rat) -> bool {
        &self.lo <= v && v <= &self.hi
    }

    /// Decimal rendering of an endpoint with the given number of digits,
    /// rounded toward minus (lo) / plus (hi) infinity.
    pub fn decimal_lo(&self, digits: u32) -> String {
        decimal(&self.lo, digits, false)
    }

    pub fn decimal_hi(&self, digits: u32) -> String {
        decimal(&self.hi, digits, true)
    }
}

/// Evaluate `f` at doubling precisions until the sign is definite or the
/// cap is reached.
pub fn certify_sign<F>(mut f: F, start_bits: u32, cap_bits: u32) -> (Sign, Interval, u32)
where
    F: FnMut(u32) -> Interval,
{
    let mut bits = start_bits.max(8);
    loop {
        let iv = f(bits);
        match iv.sign() {
            Sign::Indeterminate if bits < cap_bits => bits = (bits * 2).min(cap_bits),
            sign => return (sign, iv, bits),
        }
    }
}

/// Fixed-point decimal rendering of a rational, rounding outward.
fn decimal(v: &Rat, digits: u32, round_up: bool) -> String {
    let scale = BigInt::from(10u32).pow(digits);
    let scaled = v * Rat::from_integer(scale.clone());
    let (floor, is_integer) = {
        let f = scaled.floor();
        (f.to_integer(), f == scaled)
    };
    let int = if round_up && !is_integer {
        floor + 1
    } else {
        floor
    };
    let negative = int.sign() == BigSign::Minus;
    let mag = int.magnitude().clone();
    let whole = &mag / scale.magnitude();
    let frac = &mag % scale.magnitude();
    let mut s = String::new();
    if negative {
        s.push('-');
    }
    s.push_str(&whole.to_string());
    if digits > 0 {
        s.push('.');
        let frac_str = frac.to_string();
        for _ in frac_str.len()..digits as usize {
            s.push('0');
        }
        s.push_str(&frac_str);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(n.into(), d.into())
    }

    #[test]
    fn exact_field_ops_stay_exact() {
        let a = Interval::exact(rat(3, 7));
        let b = Interval::exact(rat(-2, 5));
        assert!(a.add(&b).is_exact());
        assert!(a.mul(&b).is_exact());
        assert_eq!(a.add(&b).as_exact().unwrap(), &rat(1, 35));
    }

    #[test]
    fn cube_root_of_342() {
        // omega for d = 19.
        let iv = Interval::nth_root(&rat(342, 1), 3, 64);
        assert!(iv.lo() > &rat(6993, 1000));
        assert!(iv.hi() < &rat(6994, 1000));
        // enclosure really brackets: lo^3 <= 342 <= hi^3
        assert!(iv.lo() * iv.lo() * iv.lo() <= rat(342, 1));
        assert!(iv.hi() * iv.hi() * iv.hi() >= rat(342, 1));
    }

    #[test]
    fn sqrt_of_square_is_tight() {
        let iv = Interval::nth_root(&rat(49, 4), 2, 32);
        assert!(iv.contains(&rat(7, 2)));
        assert!(iv.width() <= rat(1, 1 << 30));
    }

    #[test]
    fn sign_certification_escalates() {
        // cbrt(2) - 5/4 is positive but tight at low precision.
        let f = |bits: u32| {
            Interval::nth_root(&rat(2, 1), 3, bits).sub(&Interval::exact(rat(5, 4)))
        };
        let (sign, _, _) = certify_sign(f, 2, 256);
        assert_eq!(sign, Sign::Positive);
    }

    #[test]
    fn indeterminate_at_cap() {
        // cbrt(8) - 2 is exactly zero; the enclosure always straddles or
        // touches zero and can never certify a strict sign.
        let f = |bits: u32| {
            Interval::nth_root(&rat(8, 1), 3, bits).sub(&Interval::exact(rat(2, 1)))
        };
        let (sign, iv, _) = certify_sign(f, 8, 64);
        assert!(matches!(sign, Sign::Indeterminate | Sign::Zero));
        assert!(iv.contains(&Rat::zero()));
    }

    #[test]
    fn interval_division() {
        let a = Interval::new(rat(1, 1), rat(2, 1));
        let b = Interval::new(rat(3, 1), rat(4, 1));
        let q = a.div(&b);
        assert_eq!(q.lo(), &rat(1, 4));
        assert_eq!(q.hi(), &rat(2, 3));
    }

    #[test]
    fn decimal_rendering_rounds_outward() {
        let iv = Interval::new(rat(1, 3), rat(2, 3));
        assert_eq!(iv.decimal_lo(3), "0.333");
        assert_eq!(iv.decimal_hi(3), "0.667");
    }
}
