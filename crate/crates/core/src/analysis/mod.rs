//! Time sweeps and structural events of the two-qubit trajectory.

mod events;
mod fit;
mod sweep;

pub use events::{
    degeneracy_time, mid_discord_interval, onset_time, onset_time_with_step, EventSet, MidDiscordRegion,
    BRANCH_SCAN_STEP, DECAY_WINDOW, ONSET_SCAN_STEP,
};
pub use fit::{decay_rate_fit, FitColumn};
pub use sweep::{dicke_sweep, series_from_states, sweep, uniform_grid, Coefficients, TimeSeries};
