//! Concrete integral evaluations and the generating-function identity, each
//! cataloged as a named identity with its defining side and its evaluated side.

mod catalog;
mod integrals;

pub use catalog::{
    catalog, find_identity, Bound, CrossConstraint, IdentityDescriptor, LhsKind, ParameterRange,
    RhsKind,
};
pub use integrals::{
    bessel_gauss_dilation, bessel_gauss_dilation_summed, bessel_generating_function,
    fresnel_bessel, fresnel_bessel_order_zero, fresnel_bessel_with, lorentz_gauss_integral,
    struve_halfline_integral, struve_moment_integral, GeneratingMethod, LorentzGaussMethod,
};

#[cfg(test)]
mod tests;
