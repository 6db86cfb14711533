//! Event finders along the analytic trajectory. Each one scans a fixed τ grid
//! for a sign change and then bisects the bracketing cell.

use serde::{Deserialize, Serialize};

use super::fit::{decay_rate_fit, FitColumn};
use super::sweep::sweep;
use crate::correlations::{concurrence_lambda_x_symmetric, discord_d1, discord_d2, ConcurrenceCase};
use crate::dynamics::{analytic_state, check_gamma, MAX_TAU};
use crate::quantum_core::Subsystem;
use crate::{Error, Result};

pub const ONSET_SCAN_STEP: f64 = 0.01;
pub const ONSET_TOL: f64 = 1e-10;
pub const BRANCH_SCAN_STEP: f64 = 0.005;
pub const BRANCH_TOL: f64 = 1e-9;
/// Regions narrower than this are reported as a point.
pub const POINT_WIDTH: f64 = 1e-6;

/// First time at which the concurrence becomes positive, or `None` when it
/// never does before `τ = 50` (always the case for `γ ∈ {0, 1}`).
pub fn onset_time(gamma: f64) -> Result<Option<f64>> {
    onset_time_with_step(gamma, ONSET_SCAN_STEP)
}

/// [`onset_time`] with a custom scan resolution.
pub fn onset_time_with_step(gamma: f64, scan_step: f64) -> Result<Option<f64>> {
    check_gamma(gamma)?;
    if gamma == 0.0 || gamma == 1.0 {
        return Ok(None);
    }
    let lambda = |tau: f64| -> Result<(f64, ConcurrenceCase)> {
        Ok(concurrence_lambda_x_symmetric(&analytic_state(gamma, tau)?))
    };

    let n = (MAX_TAU / scan_step).floor() as usize;
    let mut prev = 0.0;
    for k in 1..=n {
        let tau = k as f64 * scan_step;
        let (value, case) = lambda(tau)?;
        // only the |b − c| dominated case can give Λ > 0 on this trajectory
        if value > 0.0 && case == ConcurrenceCase::AntisymmetricCoherence {
            let root = bisect(|t| Ok(lambda(t)?.0), prev, tau, ONSET_TOL)?;
            return Ok(Some(root));
        }
        prev = tau;
    }
    Ok(None)
}

/// Connected set of times where `D1 ≤ D2`, i.e. where the MID equals the
/// discord.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MidDiscordRegion {
    Interval { start: f64, end: f64 },
    Point { tau: f64 },
}

impl MidDiscordRegion {
    pub fn start(&self) -> f64 {
        match *self {
            MidDiscordRegion::Interval { start, .. } => start,
            MidDiscordRegion::Point { tau } => tau,
        }
    }

    pub fn end(&self) -> f64 {
        match *self {
            MidDiscordRegion::Interval { end, .. } => end,
            MidDiscordRegion::Point { tau } => tau,
        }
    }

    pub fn width(&self) -> f64 {
        self.end() - self.start()
    }
}

/// First connected region with `D1(τ) ≤ D2(τ)` on `(0, tau_max]`.
///
/// Only the first region is reported: at late times both expressions are
/// below 1e-8 for small γ and their difference is round-off.
pub fn mid_discord_interval(gamma: f64, tau_max: f64) -> Result<Option<MidDiscordRegion>> {
    if !(gamma > 0.0 && gamma < 1.0) {
        return Err(Error::ParamOutOfRange {
            name: "gamma",
            value: gamma,
            expected: "(0, 1)",
        });
    }
    if !(tau_max > 0.0 && tau_max <= MAX_TAU) {
        return Err(Error::ParamOutOfRange {
            name: "tau_max",
            value: tau_max,
            expected: "(0, 50]",
        });
    }
    let gap = |tau: f64| -> Result<f64> {
        let s = analytic_state(gamma, tau)?;
        Ok(discord_d2(&s) - discord_d1(&s))
    };

    let n = (tau_max / BRANCH_SCAN_STEP).floor() as usize;
    let mut prev = 0.0;
    let mut start = None;
    for k in 1..=n {
        let tau = k as f64 * BRANCH_SCAN_STEP;
        let inside = gap(tau)? >= 0.0;
        match (start, inside) {
            (None, true) => {
                // at τ = 0 both branches vanish; treat it as outside
                let s = bisect(gap, prev, tau, BRANCH_TOL)?;
                start = Some(s);
            }
            (Some(s), false) => {
                let e = bisect(|t| Ok(-gap(t)?), prev, tau, BRANCH_TOL)?;
                return Ok(Some(region(s, e)));
            }
            _ => {}
        }
        prev = tau;
    }
    Ok(start.map(|s| region(s, tau_max)))
}

fn region(start: f64, end: f64) -> MidDiscordRegion {
    if end - start < POINT_WIDTH {
        MidDiscordRegion::Point {
            tau: 0.5 * (start + end),
        }
    } else {
        MidDiscordRegion::Interval { start, end }
    }
}

/// Unique time at which the reduced states are maximally mixed,
/// `a(τ) + b(τ) = ½`.
pub fn degeneracy_time(gamma: f64) -> Result<f64> {
    check_gamma(gamma)?;
    let excess = |tau: f64| -> Result<f64> { Ok(analytic_state(gamma, tau)?.excited_population() - 0.5) };
    // a + b falls monotonically from 1, so the bracket is [0, 50]
    let (mut lo, mut hi) = (0.0, MAX_TAU);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if excess(mid)? > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(if excess(lo)?.abs() <= excess(hi)?.abs() { lo } else { hi })
}

/// Root of `f` in `[lo, hi]` given `f(lo) ≤ 0 < f(hi)`, to width `tol`.
fn bisect(f: impl Fn(f64) -> Result<f64>, mut lo: f64, mut hi: f64, tol: f64) -> Result<f64> {
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid)? > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Structural events of one trajectory.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EventSet {
    pub gamma: f64,
    pub onset_tau: Option<f64>,
    pub mid_discord: Option<MidDiscordRegion>,
    pub degeneracy_tau: f64,
    /// Log-slope of the discord over `τ ∈ [15, 25]`; `None` when the discord
    /// vanishes there.
    pub decay_rate: Option<f64>,
}

pub const DECAY_WINDOW: (f64, f64) = (15.0, 25.0);

impl EventSet {
    pub fn compute(gamma: f64) -> Result<Self> {
        check_gamma(gamma)?;
        let mid_discord = if gamma > 0.0 && gamma < 1.0 {
            mid_discord_interval(gamma, MAX_TAU)?
        } else {
            None
        };
        let series = sweep(gamma, DECAY_WINDOW.1, 2501, Subsystem::B)?;
        let decay_rate = match decay_rate_fit(&series, FitColumn::Discord, DECAY_WINDOW) {
            Ok(rate) => Some(rate),
            Err(Error::NonPositiveData { .. }) => None,
            Err(e) => return Err(e),
        };
        Ok(EventSet {
            gamma,
            onset_tau: onset_time(gamma)?,
            mid_discord,
            degeneracy_tau: degeneracy_time(gamma)?,
            decay_rate,
        })
    }
}
