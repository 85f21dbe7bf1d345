//! Bivariate Rayleigh fading: parameters, densities, moments and a sampler.

use std::f64::consts::{FRAC_PI_4, LN_2};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::Serialize;
use thiserror::Error;

use crate::specfun::{self, i0e_unchecked};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParamError {
    #[error("{name} = {value} must be finite and positive")]
    NotPositive { name: &'static str, value: f64 },
    #[error("power correlation rho^2 = {0} must lie in [0, 1)")]
    Correlation(f64),
}

/// Second moments `E[S1²]`, `E[S2²]` and the power correlation coefficient
/// `ρ² = cor(S1², S2²)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FadingParams {
    sigma_s1_sq: f64,
    sigma_s2_sq: f64,
    rho_sq: f64,
}

impl FadingParams {
    pub fn new(sigma_s1_sq: f64, sigma_s2_sq: f64, rho_sq: f64) -> Result<Self, ParamError> {
        positive("sigma_s1_sq", sigma_s1_sq)?;
        positive("sigma_s2_sq", sigma_s2_sq)?;
        if !(rho_sq.is_finite() && (0.0..1.0).contains(&rho_sq)) {
            return Err(ParamError::Correlation(rho_sq));
        }
        Ok(Self {
            sigma_s1_sq,
            sigma_s2_sq,
            rho_sq,
        })
    }

    pub fn sigma_s1_sq(&self) -> f64 {
        self.sigma_s1_sq
    }

    pub fn sigma_s2_sq(&self) -> f64 {
        self.sigma_s2_sq
    }

    pub fn rho_sq(&self) -> f64 {
        self.rho_sq
    }

    pub fn mean_s1(&self) -> f64 {
        (FRAC_PI_4 * self.sigma_s1_sq).sqrt()
    }

    pub fn mean_s2(&self) -> f64 {
        (FRAC_PI_4 * self.sigma_s2_sq).sqrt()
    }

    pub fn var_s1(&self) -> f64 {
        (1.0 - FRAC_PI_4) * self.sigma_s1_sq
    }

    pub fn var_s2(&self) -> f64 {
        (1.0 - FRAC_PI_4) * self.sigma_s2_sq
    }

    /// `cov[S1, S2]` of the amplitudes.
    pub fn covariance(&self) -> f64 {
        amplitude_correlation(self) * (self.var_s1() * self.var_s2()).sqrt()
    }

    pub fn joint_density(&self) -> JointDensity {
        JointDensity::new(*self)
    }

    pub fn sampler(&self, seed: u64) -> PairSampler {
        PairSampler::new(*self, ChaCha8Rng::seed_from_u64(seed))
    }
}

/// Fading parameters plus noise variances and the transmit power `P`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ChannelParams {
    fading: FadingParams,
    sigma_n1_sq: f64,
    sigma_n2_sq: f64,
    power: f64,
}

impl ChannelParams {
    pub fn new(
        fading: FadingParams,
        sigma_n1_sq: f64,
        sigma_n2_sq: f64,
        power: f64,
    ) -> Result<Self, ParamError> {
        positive("sigma_n1_sq", sigma_n1_sq)?;
        positive("sigma_n2_sq", sigma_n2_sq)?;
        positive("power", power)?;
        Ok(Self {
            fading,
            sigma_n1_sq,
            sigma_n2_sq,
            power,
        })
    }

    /// Convenience constructor taking every scalar directly.
    pub fn from_values(
        sigma_n1_sq: f64,
        sigma_n2_sq: f64,
        sigma_s1_sq: f64,
        sigma_s2_sq: f64,
        rho_sq: f64,
        power: f64,
    ) -> Result<Self, ParamError> {
        let fading = FadingParams::new(sigma_s1_sq, sigma_s2_sq, rho_sq)?;
        Self::new(fading, sigma_n1_sq, sigma_n2_sq, power)
    }

    pub fn fading(&self) -> &FadingParams {
        &self.fading
    }

    pub fn sigma_n1_sq(&self) -> f64 {
        self.sigma_n1_sq
    }

    pub fn sigma_n2_sq(&self) -> f64 {
        self.sigma_n2_sq
    }

    pub fn power(&self) -> f64 {
        self.power
    }

    pub fn with_power(&self, power: f64) -> Result<Self, ParamError> {
        Self::new(self.fading, self.sigma_n1_sq, self.sigma_n2_sq, power)
    }
}

fn positive(name: &'static str, value: f64) -> Result<(), ParamError> {
    if value.is_finite() && value > 0.0 {
        Ok(())
    } else {
        Err(ParamError::NotPositive { name, value })
    }
}

/// Joint amplitude density with the parameter-only terms hoisted.
#[derive(Debug, Clone, Copy)]
pub struct JointDensity {
    inv_s1: f64,
    inv_s2: f64,
    inv_one_minus: f64,
    rho: f64,
    log_norm: f64,
}

impl JointDensity {
    fn new(p: FadingParams) -> Self {
        let one_minus = 1.0 - p.rho_sq;
        Self {
            inv_s1: 1.0 / p.sigma_s1_sq,
            inv_s2: 1.0 / p.sigma_s2_sq,
            inv_one_minus: 1.0 / one_minus,
            rho: p.rho_sq.sqrt(),
            log_norm: (4.0 / (p.sigma_s1_sq * p.sigma_s2_sq * one_minus)).ln(),
        }
    }

    /// `f_{S1,S2}(s1, s2)`; zero outside the positive quadrant.
    pub fn eval(&self, s1: f64, s2: f64) -> f64 {
        if !(s1 > 0.0 && s2 > 0.0) {
            return 0.0;
        }
        let u1 = s1 * s1 * self.inv_s1;
        let u2 = s2 * s2 * self.inv_s2;
        let z = 2.0 * self.rho * (u1 * u2).sqrt() * self.inv_one_minus;
        // I0(z) = e^{z} i0e(z); the e^{z} is folded into the exponent so the
        // whole exponent stays non-positive
        let exponent = -(u1 + u2) * self.inv_one_minus + z;
        (self.log_norm + (s1 * s2).ln() + exponent).exp() * i0e_unchecked(z)
    }
}

/// `f_{S1,S2}(s1, s2)` of the bivariate Rayleigh law.
pub fn joint_pdf(p: &FadingParams, s1: f64, s2: f64) -> f64 {
    p.joint_density().eval(s1, s2)
}

fn rayleigh_pdf(second_moment: f64, s: f64) -> f64 {
    if s < 0.0 {
        return 0.0;
    }
    2.0 * s / second_moment * (-s * s / second_moment).exp()
}

pub fn marginal_pdf_s1(p: &FadingParams, s1: f64) -> f64 {
    rayleigh_pdf(p.sigma_s1_sq, s1)
}

pub fn marginal_pdf_s2(p: &FadingParams, s2: f64) -> f64 {
    rayleigh_pdf(p.sigma_s2_sq, s2)
}

/// Pearson correlation of the amplitudes `S1`, `S2`, expressed through the
/// complete elliptic integrals at modulus `sqrt(ρ²)`.
pub fn amplitude_correlation(p: &FadingParams) -> f64 {
    let z = p.rho_sq.sqrt();
    // ρ² < 1 is a construction invariant, so both calls are in-domain
    let k = specfun::elliptic_k(z).expect("modulus below one");
    let e = specfun::elliptic_e(z).expect("modulus below one");
    (e - 0.5 * (1.0 - p.rho_sq) * k - FRAC_PI_4) / (1.0 - FRAC_PI_4)
}

/// `Pr[S1² >= s]`.
pub fn ccdf_s1_sq(p: &FadingParams, s: f64) -> f64 {
    (-s.max(0.0) / p.sigma_s1_sq).exp()
}

/// `Pr[S2² >= s]`.
pub fn ccdf_s2_sq(p: &FadingParams, s: f64) -> f64 {
    (-s.max(0.0) / p.sigma_s2_sq).exp()
}

// Slack for the boundary case: parameter sets built as σ_S2² = σ_S1²/σ_N2²
// sit exactly on the boundary and must not flip on the last bit.
const DEGRADED_SLACK: f64 = 8.0 * f64::EPSILON;

/// Whether `S1²/σ_N1²` is stochastically larger than `S2²/σ_N2²`, i.e.
/// `σ_N2²/σ_N1² <= σ_S1²/σ_S2²`. Equality counts as degraded.
pub fn is_stochastically_degraded(c: &ChannelParams) -> bool {
    let lhs = c.sigma_n2_sq * c.fading.sigma_s2_sq;
    let rhs = c.fading.sigma_s1_sq * c.sigma_n1_sq;
    lhs <= rhs * (1.0 + DEGRADED_SLACK)
}

/// Draws `(S1, S2)` as magnitudes of two correlated circular Gaussian pairs.
///
/// With Pearson correlation `r = sqrt(ρ²)` between the in-phase (and the
/// quadrature) components, `S1²` and `S2²` are exponential with power
/// correlation `ρ²`, which is the bivariate Rayleigh law above.
#[derive(Debug, Clone)]
pub struct PairSampler {
    scale1: f64,
    scale2: f64,
    r: f64,
    r_perp: f64,
    rng: ChaCha8Rng,
}

impl PairSampler {
    pub fn new(p: FadingParams, rng: ChaCha8Rng) -> Self {
        let r = p.rho_sq.sqrt();
        Self {
            scale1: (0.5 * p.sigma_s1_sq).sqrt(),
            scale2: (0.5 * p.sigma_s2_sq).sqrt(),
            r,
            r_perp: (1.0 - p.rho_sq).sqrt(),
            rng,
        }
    }

    pub fn sample_pair(&mut self) -> (f64, f64) {
        sample_with(self.scale1, self.scale2, self.r, self.r_perp, &mut self.rng)
    }
}

/// One draw of `(S1, S2)` from an arbitrary generator.
pub fn sample_pair<R: Rng + ?Sized>(p: &FadingParams, rng: &mut R) -> (f64, f64) {
    let r = p.rho_sq.sqrt();
    sample_with(
        (0.5 * p.sigma_s1_sq).sqrt(),
        (0.5 * p.sigma_s2_sq).sqrt(),
        r,
        (1.0 - p.rho_sq).sqrt(),
        rng,
    )
}

#[inline]
fn sample_with<R: Rng + ?Sized>(
    scale1: f64,
    scale2: f64,
    r: f64,
    r_perp: f64,
    rng: &mut R,
) -> (f64, f64) {
    let a1: f64 = rng.sample(StandardNormal);
    let b1: f64 = rng.sample(StandardNormal);
    let za: f64 = rng.sample(StandardNormal);
    let zb: f64 = rng.sample(StandardNormal);
    let a2 = r * a1 + r_perp * za;
    let b2 = r * b1 + r_perp * zb;
    (scale1 * a1.hypot(b1), scale2 * a2.hypot(b2))
}

/// Differential entropy of a Rayleigh amplitude with second moment `Ω`, in bits.
pub(crate) fn rayleigh_entropy_bits(second_moment: f64) -> f64 {
    (1.0 + 0.5 * specfun::EULER_GAMMA) / LN_2 + 0.5 * (second_moment / 4.0).log2()
}
