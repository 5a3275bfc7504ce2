//! Umbral engine: Gamma-ratio moment sequences, umbral series, the master
//! theorem and Mellin multipliers `F(x d/dx)` for dilation integrals.

mod mellin;
mod multiplier;
mod sequence;
mod series;

pub use mellin::{mellin_master, mellin_master_strided};
pub use multiplier::{
    apply_mellin_multiplier, apply_mellin_multiplier_summed, CustomMultiplier, MellinMultiplier,
    PowerSeriesSpec,
};
pub use sequence::{phi_eval, GammaFactor, GammaRatioSequence, Slope};
pub use series::{eval_umbral_series, eval_umbral_series_summed, UmbralSeries};
