//! The constant family tied to a minimum-degree parameter `d` and a
//! maximum-degree parameter `Delta`:
//!
//! * omega: 2 for d in {3, 4}, cbrt((d-1)d) for d >= 19
//! * eps = omega/(d+2), lambda = omega^3 / (2(d+2)^3)
//! * q = (d+2-omega)/(d+2) * Delta
//! * c0 = ceil((1-eps)/eps)
//! * f(eps) = (3c0^5 + 19c0^4 + 34c0^3 + 27c0^2 + 11c0 + 2) / eps
//! * N = (c0+2)(1/lambda + 1)^(3c0+2)
//! * D0 = max{f(eps), (3c0+2)/lambda^2, (N+1)/eps^3}
//!
//! omega^3 and hence lambda and eps^3 are rational for every supported d,
//! so N and the dominant branch of D0 stay exact rationals even when
//! omega itself is irrational.

use num::{BigInt, Signed, Zero};
use num::traits::Pow;

use crate::error::{Error, Result};
use crate::real::Real;
use crate::Rat;

#[derive(Clone, Debug)]
pub struct Params {
    pub d: u32,
    pub delta: Rat,
    pub omega: Real,
    pub eps: Real,
    /// omega^3 / (2(d+2)^3), always rational.
    pub lambda: Rat,
    pub q: Real,
    pub c0: BigInt,
    pub f_eps: Real,
    /// N = (c0+2)(1/lambda+1)^(3c0+2), rational.
    pub n_bound: Rat,
    /// D0; rational because the (N+1)/eps^3 branch dominates for every
    /// supported d (asserted at construction).
    pub d0: Rat,
    /// Set when `d` came through the override escape hatch rather than
    /// the supported set {3, 4} and [19, inf).
    pub outside_supported_range: bool,
}

fn rat_int(v: i64) -> Rat {
    Rat::from_integer(v.into())
}

fn big_rat(v: BigInt) -> Rat {
    Rat::from_integer(v)
}

/// omega for a supported d: 2 when d in {3, 4}, cbrt((d-1)d) when d >= 19.
pub fn omega_for(d: u32) -> Result<Real> {
    match d {
        3 | 4 => Ok(Real::from_int(2)),
        d if d >= 19 => Ok(Real::cbrt_of(rat_int((d as i64 - 1) * d as i64))),
        d => Err(Error::UnsupportedD(d)),
    }
}

impl Params {
    /// Build the family for a supported d. Values 5..=18 are rejected.
    pub fn new(d: u32, delta: Rat) -> Result<Params> {
        let omega = omega_for(d)?;
        Self::with_omega(d, delta, omega, false)
    }

    /// Escape hatch: build with an explicit rational omega, for d outside
    /// the supported set. All downstream verdicts should carry the
    /// `outside_supported_range` watermark.
    pub fn with_omega_override(d: u32, delta: Rat, omega: Rat) -> Result<Params> {
        if omega.is_zero() || omega.is_negative() {
            return Err(Error::Domain("omega override must be positive".into()));
        }
        Self::with_omega(d, delta, Real::exact(omega), true)
    }

    fn with_omega(d: u32, delta: Rat, omega: Real, outside: bool) -> Result<Params> {
        if delta.is_zero() || delta.is_negative() {
            return Err(Error::Domain("Delta must be positive".into()));
        }
        let dp2 = rat_int(d as i64 + 2);
        let eps = omega.scale(&(rat_int(1) / &dp2));

        // omega^3 is rational in every supported case: 8, or (d-1)d.
        let omega_cubed = match d {
            3 | 4 => rat_int(8),
            d if d >= 19 => rat_int((d as i64 - 1) * d as i64),
            _ => {
                let w = omega
                    .as_rational()
                    .ok_or_else(|| Error::Domain("override omega must be rational".into()))?;
                &w * &w * &w
            }
        };
        let dp2_cubed = &dp2 * &dp2 * &dp2;
        let lambda = &omega_cubed / (rat_int(2) * &dp2_cubed);
        let eps_cubed = &omega_cubed / &dp2_cubed;

        // q = (d+2-omega)/(d+2) * Delta = Delta - (Delta/(d+2)) * omega.
        let q = omega
            .scale(&(-&delta / &dp2))
            .add_rat(&delta);

        // c0 = ceil((1-eps)/eps) = ceil((d+2)/omega - 1); (d+2)/omega =
        // (d+2) * omega^2 / omega^3, and omega^2 = cbrt(omega_cubed^2).
        let c0 = match eps.as_rational() {
            Some(e) => ((rat_int(1) - &e) / &e).ceil().to_integer(),
            None => {
                let coef = &dp2 / &omega_cubed;
                Real::affine_cbrt(rat_int(-1), coef, &omega_cubed * &omega_cubed).ceil()
            }
        };
        if c0.is_negative() || c0.is_zero() {
            return Err(Error::Domain(format!("c0 = {c0} must be positive")));
        }

        // f(eps) = P(c0)/eps with P the fixed quintic.
        let c0r = big_rat(c0.clone());
        let poly = rat_int(3) * c0r.clone().pow(5u32)
            + rat_int(19) * c0r.clone().pow(4u32)
            + rat_int(34) * c0r.clone().pow(3u32)
            + rat_int(27) * &c0r * &c0r
            + rat_int(11) * &c0r
            + rat_int(2);
        // 1/eps = (d+2)/omega = (d+2) omega^2 / omega^3.
        let f_eps = match eps.as_rational() {
            Some(e) => Real::exact(&poly / e),
            None => Real::affine_cbrt(
                Rat::zero(),
                &poly * &dp2 / &omega_cubed,
                &omega_cubed * &omega_cubed,
            ),
        };

        let exponent = 3 * &c0 + 2;
        let exponent_u32 = u32::try_from(&exponent)
            .map_err(|_| Error::Domain("c0 too large".into()))?;
        let n_bound = (&c0r + rat_int(2))
            * (rat_int(1) / &lambda + rat_int(1)).pow(exponent_u32);

        // D0 = max of the three branches; certify that the rational
        // (N+1)/eps^3 branch dominates so the ledger stays exact.
        let branch_rat = (&n_bound + rat_int(1)) / &eps_cubed;
        let branch_lambda = big_rat(exponent) / (&lambda * &lambda);
        if branch_lambda > branch_rat {
            return Err(Error::Domain(
                "(3c0+2)/lambda^2 dominates D0; unsupported parameter regime".into(),
            ));
        }
        if f_eps.cmp_rat(&branch_rat) == std::cmp::Ordering::Greater {
            return Err(Error::Domain(
                "f(eps) dominates D0; unsupported parameter regime".into(),
            ));
        }

        Ok(Params {
            d,
            delta,
            omega,
            eps,
            lambda,
            q,
            c0,
            f_eps,
            n_bound,
            d0: branch_rat,
            outside_supported_range: outside,
        })
    }

    /// g1 evaluated at q, which collapses to omega(d+2)/(d+2-omega).
    /// Exact rational whenever omega is.
    pub fn g1_at_q_rational(&self) -> Option<Rat> {
        let dp2 = rat_int(self.d as i64 + 2);
        self.omega
            .as_rational()
            .map(|w| &w * &dp2 / (&dp2 - &w))
    }

    /// Enclosure of g1(q) = omega(d+2)/(d+2-omega).
    pub fn g1_at_q_enclosure(&self, bits: u32) -> crate::interval::Interval {
        if let Some(v) = self.g1_at_q_rational() {
            return crate::interval::Interval::exact(v);
        }
        let dp2 = crate::interval::Interval::exact(rat_int(self.d as i64 + 2));
        let omega = self.omega.enclosure(bits);
        omega.mul(&dp2).div(&dp2.sub(&omega))
    }

    /// Enclosure of Delta as an interval (exact; Delta is rational).
    pub fn delta_iv(&self) -> crate::interval::Interval {
        crate::interval::Interval::exact(self.delta.clone())
    }
}
