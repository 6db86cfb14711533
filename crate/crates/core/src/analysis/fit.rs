use serde::{Deserialize, Serialize};

use super::sweep::TimeSeries;
use crate::{Error, Result};

/// Series column used for an exponential-decay fit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FitColumn {
    Discord,
    Mid,
    Antisymmetric,
}

impl FitColumn {
    fn value(self, series: &TimeSeries, k: usize) -> f64 {
        match self {
            FitColumn::Discord => series.reports[k].discord,
            FitColumn::Mid => series.reports[k].mid,
            FitColumn::Antisymmetric => series.populations[k].antisymmetric,
        }
    }
}

/// Least-squares slope of `ln(value)` against τ over `window`. For a column
/// decaying as `e^{−kτ}` this returns `−k`.
pub fn decay_rate_fit(series: &TimeSeries, column: FitColumn, window: (f64, f64)) -> Result<f64> {
    let (lo, hi) = window;
    let invalid = || Error::InvalidWindow { lo, hi };
    let (first, last) = match (series.taus.first(), series.taus.last()) {
        (Some(&f), Some(&l)) => (f, l),
        _ => return Err(invalid()),
    };
    if !(lo < hi && lo >= first && hi <= last) {
        return Err(invalid());
    }

    let mut points = Vec::new();
    for (k, &tau) in series.taus.iter().enumerate() {
        if tau < lo || tau > hi {
            continue;
        }
        let v = column.value(series, k);
        if !(v > 0.0) {
            return Err(Error::NonPositiveData { tau, value: v });
        }
        points.push((tau, v.ln()));
    }
    if points.len() < 2 {
        return Err(invalid());
    }

    let n = points.len() as f64;
    let mean_t = points.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / n;
    let (mut sxy, mut sxx) = (0.0, 0.0);
    for &(t, y) in &points {
        sxy += (t - mean_t) * (y - mean_y);
        sxx += (t - mean_t) * (t - mean_t);
    }
    Ok(sxy / sxx)
}
