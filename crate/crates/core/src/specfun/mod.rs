//! Special-function kernel: Gamma machinery and the concrete function families
//! used by the umbral engine, the closed forms and the transforms.
//!
//! Every series is summed by the guarded stopping rule in [`crate::series`].
//! All functions are pure.

mod bessel;
mod gamma;
mod hermite;
mod hyper;
mod pseudo_trig;
mod struve;

pub use bessel::{
    b_nu, b_nu_closed_form, b_nu_series, bessel_i, bessel_i_complex, bessel_i_complex_series,
    bessel_i_series, bessel_j, bessel_j_series, BnuMethod,
};
pub use gamma::{
    beta, beta_real, cos_pi, factorial, gamma, gamma_ratio, gamma_real, ln_abs_gamma_real,
    ln_gamma, pochhammer, recip_gamma, recip_gamma_real, sin_pi,
};
pub use hermite::{
    hermite_higher, hermite_hybrid, hermite_tricomi, hermite_tricomi_series, truncated_e,
    MAX_DEGREE,
};
pub use hyper::{hyper_pfq, hyper_pfq_series};
pub use pseudo_trig::{pseudo_trig, pseudo_trig_series};
pub use struve::{struve_h, struve_h_series};

/// Complex value type used throughout the kernel.
pub type ComplexValue<T> = num_complex::Complex<T>;
