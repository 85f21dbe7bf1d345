//! Achievable rates of a downlink ISAC broadcast channel over correlated
//! Rayleigh fading: the degraded-channel rate `R_α`, its closed-form upper
//! bound, the sensing-only rate `R_β`, and independent oracles to check them.

pub mod fading;
pub mod oracle;
pub mod quadrature;
pub mod rates;
pub mod specfun;
