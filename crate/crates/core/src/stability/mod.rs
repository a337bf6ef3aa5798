//! Real-stability evidence and the exact Lorentzian / PSD / multipartite
//! battery.
//!
//! Real stability is certified by sampling, never decided: a reported
//! violation is exact (rational arithmetic throughout), while a pass only
//! means no violation was found at the seeded points.

mod lorentz;
mod report;
mod sampling;
mod sparse;

pub use lorentz::{
    derivative_hessian, lorentzian_check, lorentzian_check_with, support_is_m_convex,
};
pub use report::{
    spectrum_correspondence_check, spectrum_sides, strongly_rayleigh_normalized_check,
    theorem4_report, StronglyRayleighVerdict, Theorem4Report,
};
pub use sampling::{
    line_realroot_check, line_realroot_check_general, rayleigh_sample_check, Sampling,
    StabilityVerdict, Violation, DEFAULT_BOX, DEFAULT_DENOMINATOR, DEFAULT_SAMPLES,
};
pub use sparse::SparsePoly;
