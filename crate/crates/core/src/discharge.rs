//! The charge ledger: X-partition, initial charge distributions, and the
//! three-step redistribution, all in exact rational arithmetic.
//!
//! X is an independent set; Y is everything else. Charges start at
//! M0(x) = 0, M0(y) = (d+2+omega)Delta and are redistributed in three
//! steps; the target distribution is M2(x) = (d+2)Delta, M2(y) = 0. The
//! ledger demands a rational omega (d in {3, 4}, or an override), since
//! the transferred amounts must stay exact. The partition itself only
//! compares degrees against q and eps*Delta, which is decidable for every
//! supported d.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use num::{FromPrimitive, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::params::Params;
use crate::Rat;

/// Degree classes of the independent set X.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XPartition {
    /// d(x) = Delta.
    pub x_pp: BTreeSet<usize>,
    /// q <= d(x) < Delta.
    pub x_p: BTreeSet<usize>,
    /// eps*Delta <= d(x) < q.
    pub x1m: BTreeSet<usize>,
    /// Below eps*Delta, down to 3d-3 for d in {3, 4} or to d otherwise.
    pub x2m: BTreeSet<usize>,
    /// d <= d(x) < 3(d-1); empty unless d in {3, 4}.
    pub x3m: BTreeSet<usize>,
}

impl XPartition {
    /// The low-degree classes together.
    pub fn x_minus(&self) -> BTreeSet<usize> {
        let mut out = self.x1m.clone();
        out.extend(&self.x2m);
        out.extend(&self.x3m);
        out
    }

    pub fn all(&self) -> BTreeSet<usize> {
        let mut out = self.x_pp.clone();
        out.extend(&self.x_p);
        out.extend(self.x_minus());
        out
    }
}

fn rat_usize(v: usize) -> Rat {
    Rat::from_usize(v).unwrap()
}

/// Split an independent set X by degree against Delta, q, eps*Delta, and
/// (for d in {3, 4}) the 3d-3 boundary.
pub fn classify_x(g: &Graph, x_set: &BTreeSet<usize>, params: &Params) -> Result<XPartition> {
    let members: Vec<usize> = x_set.iter().copied().collect();
    g.check_independent(&members)?;
    let delta = rat_usize(g.max_degree());
    if delta != params.delta {
        return Err(Error::Domain(format!(
            "params built for Delta = {}, graph has Delta = {delta}",
            params.delta
        )));
    }
    let d = params.d as usize;
    if g.min_degree() < d {
        return Err(Error::Domain(format!(
            "minimum degree {} below parameter d = {d}",
            g.min_degree()
        )));
    }
    let eps_delta = params.eps.scale(&delta);
    let small_d = matches!(params.d, 3 | 4);
    let mut out = XPartition {
        x_pp: BTreeSet::new(),
        x_p: BTreeSet::new(),
        x1m: BTreeSet::new(),
        x2m: BTreeSet::new(),
        x3m: BTreeSet::new(),
    };
    for &v in x_set {
        let deg = rat_usize(g.degree(v));
        if deg == delta {
            out.x_pp.insert(v);
        } else if params.q.cmp_rat(&deg) != Ordering::Greater {
            out.x_p.insert(v);
        } else if eps_delta.cmp_rat(&deg) != Ordering::Greater {
            out.x1m.insert(v);
        } else if !small_d || g.degree(v) >= 3 * d - 3 {
            out.x2m.insert(v);
        } else {
            out.x3m.insert(v);
        }
    }
    Ok(out)
}

/// Per-vertex charge snapshots before, between, and after the steps,
/// plus the target distribution.
#[derive(Clone, Debug)]
pub struct ChargeLedger {
    pub m0: BTreeMap<usize, Rat>,
    pub m0_star: BTreeMap<usize, Rat>,
    pub m1: BTreeMap<usize, Rat>,
    pub m1_star: BTreeMap<usize, Rat>,
    pub m2_star: BTreeMap<usize, Rat>,
    pub m2: BTreeMap<usize, Rat>,
}

impl ChargeLedger {
    /// Vertices whose final charge reaches the target.
    pub fn satisfied(&self) -> BTreeSet<usize> {
        self.m2_star
            .iter()
            .filter(|(v, charge)| *charge >= &self.m2[v])
            .map(|(&v, _)| v)
            .collect()
    }

    pub fn deficient(&self) -> BTreeSet<usize> {
        let ok = self.satisfied();
        self.m2.keys().copied().filter(|v| !ok.contains(v)).collect()
    }

    pub fn total(map: &BTreeMap<usize, Rat>) -> Rat {
        map.values().sum()
    }

    /// One row per vertex: vertex,M0,M0*,M1,M1*,M2*,M2.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("vertex,M0,M0*,M1,M1*,M2*,M2\n");
        for v in self.m0.keys() {
            writeln!(
                out,
                "{v},{},{},{},{},{},{}",
                self.m0[v],
                self.m0_star[v],
                self.m1[v],
                self.m1_star[v],
                self.m2_star[v],
                self.m2[v]
            )
            .unwrap();
        }
        out
    }
}

/// Execute Steps 0-2 and return all snapshots.
///
/// Step 0: each y gives d+2 to every neighbor in X (from M0).
/// Step 1: each y gives g1(d(x)) to every neighbor in X+ (from M1).
/// Step 2: each y with positive remaining charge splits it equally among
/// its X- neighbors, if it has any (from M1*).
///
/// Asserts the structural identities that hold on any input: Step 0
/// conservation, M0*(x) = (d+2)d(x) = M1(x), and M0*(y) >= M1(y)
/// (which needs only |N(y) & X| <= Delta).
pub fn run_discharging(
    g: &Graph,
    x_set: &BTreeSet<usize>,
    params: &Params,
) -> Result<ChargeLedger> {
    let partition = classify_x(g, x_set, params)?;
    let omega = params.omega.as_rational().ok_or_else(|| {
        Error::Domain("charge ledger needs a rational omega (d in {3, 4} or an override)".into())
    })?;
    let d_plus_2 = Rat::from_u32(params.d + 2).unwrap();
    let delta = &params.delta;
    let x_minus = partition.x_minus();

    let in_x = |v: usize| x_set.contains(&v);

    let mut m0 = BTreeMap::new();
    let mut m1 = BTreeMap::new();
    let mut m2 = BTreeMap::new();
    for v in 0..g.n() {
        if in_x(v) {
            m0.insert(v, Rat::zero());
            m1.insert(v, &d_plus_2 * rat_usize(g.degree(v)));
            m2.insert(v, &d_plus_2 * delta);
        } else {
            m0.insert(v, (&d_plus_2 + &omega) * delta);
            m1.insert(v, &omega * delta);
            m2.insert(v, Rat::zero());
        }
    }

    // Step 0.
    let mut m0_star = m0.clone();
    for y in 0..g.n() {
        if in_x(y) {
            continue;
        }
        for &x in g.neighbors(y) {
            if in_x(x) {
                *m0_star.get_mut(&y).unwrap() -= &d_plus_2;
                *m0_star.get_mut(&x).unwrap() += &d_plus_2;
            }
        }
    }
    assert_eq!(
        ChargeLedger::total(&m0_star),
        ChargeLedger::total(&m0),
        "Step 0 moved charge without conserving it"
    );
    for v in 0..g.n() {
        if in_x(v) {
            assert_eq!(m0_star[&v], m1[&v], "M0*(x) != (d+2)d(x) at x = {v}");
        } else {
            assert!(m0_star[&v] >= m1[&v], "M0*(y) < omega*Delta at y = {v}");
        }
    }

    // Step 1: transfers g1(d(x)) = (d+2)(Delta - d(x))/d(x) to X+.
    let mut m1_star = m1.clone();
    for y in 0..g.n() {
        if in_x(y) {
            continue;
        }
        for &x in g.neighbors(y) {
            if partition.x_p.contains(&x) {
                let k = rat_usize(g.degree(x));
                let amount = &d_plus_2 * (delta - &k) / &k;
                *m1_star.get_mut(&y).unwrap() -= &amount;
                *m1_star.get_mut(&x).unwrap() += &amount;
            }
        }
    }

    // Step 2: split positive remainders over X- neighborhoods.
    let mut m2_star = m1_star.clone();
    for y in 0..g.n() {
        if in_x(y) || !m1_star[&y].is_positive() {
            continue;
        }
        let recipients: Vec<usize> = g
            .neighbors(y)
            .iter()
            .copied()
            .filter(|v| x_minus.contains(v))
            .collect();
        if recipients.is_empty() {
            continue;
        }
        let share = &m1_star[&y] / rat_usize(recipients.len());
        for &x in &recipients {
            *m2_star.get_mut(&x).unwrap() += &share;
        }
        *m2_star.get_mut(&y).unwrap() = Rat::zero();
    }
    assert_eq!(
        ChargeLedger::total(&m2_star),
        ChargeLedger::total(&m1),
        "Steps 1-2 moved charge without conserving it"
    );

    Ok(ChargeLedger {
        m0,
        m0_star,
        m1,
        m1_star,
        m2_star,
        m2,
    })
}
