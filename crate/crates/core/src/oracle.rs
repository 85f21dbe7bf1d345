//! Independent verifiers for the closed forms in [`crate::rates`].
//!
//! Nothing here reuses the reductions it checks. The ratio density is
//! integrated straight from the joint law of `(T1, T2)`. The amplitude
//! correlation comes from a 2-D integral instead of elliptic integrals. Rate
//! terms and entropies are estimated by Monte Carlo from the fading sampler.
//!
//! Monte Carlo runs are split into fixed-size batches. Batch `b` draws from
//! ChaCha8 stream `b` of the configured seed, and batch statistics are
//! merged in batch order. Estimates are therefore bit-identical for a given
//! `(seed, sample_count, batch_size)` whatever the thread count.

use std::f64::consts::{FRAC_PI_4, LN_2, PI};
use std::fmt::Debug;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Exp1, StandardNormal};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fading::{sample_pair, ChannelParams, FadingParams};
use crate::quadrature::{
    expect_half_gaussian, integrate_2d, integrate_semi_infinite, integrate_semi_infinite_scaled,
    CompensatedSum, QuadratureConfig, QuadratureError, Rect,
};
use crate::rates::{
    effective_snr, entropy_h_s2, joint_pdf_y1_s2, PartAParams, PartBUbParams, RateError, RbetaMode,
};
use crate::specfun::i0e_unchecked;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct McConfig {
    pub sample_count: u64,
    pub seed: u64,
    /// Samples per independently seeded stream.
    pub batch_size: u64,
}

impl Default for McConfig {
    fn default() -> Self {
        Self {
            sample_count: 10_000_000,
            seed: 42,
            batch_size: 1 << 16,
        }
    }
}

impl McConfig {
    pub fn with_samples(sample_count: u64, seed: u64) -> Self {
        Self {
            sample_count,
            seed,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct McEstimate {
    pub mean: f64,
    pub std_error: f64,
    pub sample_count: u64,
}

impl McEstimate {
    /// `|mean - value|` in units of the standard error.
    pub fn z_score(&self, value: f64) -> f64 {
        (self.mean - value).abs() / self.std_error
    }

    pub fn agrees_with(&self, value: f64, sigmas: f64) -> bool {
        (self.mean - value).abs() <= sigmas * self.std_error
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OracleError {
    #[error("density evaluated to {value} at sample {point}")]
    BadDensity { point: String, value: f64 },
    #[error("invalid Monte Carlo configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Rate(#[from] RateError),
    #[error(transparent)]
    Quadrature(#[from] QuadratureError),
}

// Running mean and sum of squared deviations for one batch.
#[derive(Debug, Clone, Copy, Default)]
struct Moments {
    n: f64,
    mean: f64,
    m2: f64,
}

impl Moments {
    fn push(&mut self, v: f64) {
        self.n += 1.0;
        let d = v - self.mean;
        self.mean += d / self.n;
        self.m2 += d * (v - self.mean);
    }
}

/// Mean and standard error of `draw` over `mc.sample_count` samples.
pub fn mc_mean<F>(mc: &McConfig, draw: F) -> Result<McEstimate, OracleError>
where
    F: Fn(&mut ChaCha8Rng) -> Result<f64, OracleError> + Sync,
{
    if mc.sample_count < 2 || mc.batch_size == 0 {
        return Err(OracleError::Config(format!("{mc:?}")));
    }
    let batches = mc.sample_count.div_ceil(mc.batch_size);
    let per_batch: Vec<Moments> = (0..batches)
        .into_par_iter()
        .map(|b| {
            let mut rng = ChaCha8Rng::seed_from_u64(mc.seed);
            rng.set_stream(b);
            let count = mc.batch_size.min(mc.sample_count - b * mc.batch_size);
            let mut m = Moments::default();
            for _ in 0..count {
                m.push(draw(&mut rng)?);
            }
            Ok(m)
        })
        .collect::<Result<_, OracleError>>()?;

    // merge in batch order: mean via a compensated sum of batch totals, the
    // second moment via the pairwise (Chan et al.) update
    let n: f64 = per_batch.iter().map(|m| m.n).sum();
    let mut total = CompensatedSum::default();
    for m in &per_batch {
        total.add(m.mean * m.n);
    }
    let mean = total.total() / n;
    let mut m2 = CompensatedSum::default();
    for m in &per_batch {
        let d = m.mean - mean;
        m2.add(m.m2 + d * d * m.n);
    }
    let var = m2.total() / (n - 1.0);
    Ok(McEstimate {
        mean,
        std_error: (var / n).sqrt(),
        sample_count: mc.sample_count,
    })
}

/// `f_S(s)` straight from the ratio `S = T1 / (T2 + 1/P)`:
/// `∫_{1/P}^∞ u f_{T1,T2}(s u, u - 1/P) du` with the bivariate exponential
/// density of `T_i = S_i² / σ_Ni²`.
pub fn brute_force_f_s(
    c: &ChannelParams,
    s: f64,
    cfg: &QuadratureConfig,
) -> Result<f64, OracleError> {
    if s.is_nan() || s < 0.0 {
        return Ok(0.0);
    }
    let p = c.power();
    let f = c.fading();
    let a1 = c.sigma_n1_sq() / f.sigma_s1_sq();
    let a2 = c.sigma_n2_sq() / f.sigma_s2_sq();
    let rho_sq = f.rho_sq();
    let om = 1.0 - rho_sq;
    let log_norm = (a1 * a2 / om).ln();
    // f_{T1,T2}(t1, t2) = a1 a2/(1-ρ²) exp(-(a1 t1 + a2 t2)/(1-ρ²)) I0(2 sqrt(ρ² a1 t1 a2 t2)/(1-ρ²))
    let pdf_t = |t1: f64, t2: f64| {
        let z = 2.0 * (rho_sq * a1 * t1 * a2 * t2).sqrt() / om;
        (log_norm - (a1 * t1 + a2 * t2) / om + z).exp() * i0e_unchecked(z)
    };
    let scale = om / (a1 * s + a2);
    let e = integrate_semi_infinite_scaled(
        |v| {
            let u = v + 1.0 / p;
            u * pdf_t(s * u, v)
        },
        scale,
        cfg,
    )?;
    Ok(e.value)
}

/// `f_S(s)` at `ρ² = 0`, where `T1` and `T2` are independent and the ratio
/// integral is elementary.
pub fn ratio_density_uncorrelated(c: &ChannelParams, s: f64) -> f64 {
    let pa = PartAParams::new(c);
    let p = c.power();
    let lam = pa.sigma1_sq * s + pa.sigma2_sq;
    pa.sigma1_sq
        * pa.sigma2_sq
        * (-pa.sigma1_sq * s / p).exp()
        * (1.0 / (p * lam) + 1.0 / (lam * lam))
}

/// `½ E[log2(1 + (S1²/σ_N1²) / (S2²/σ_N2² + 1/P))]` over sampled fading pairs.
pub fn mc_rate_part_a(c: &ChannelParams, mc: &McConfig) -> Result<McEstimate, OracleError> {
    let f = *c.fading();
    let (n1, n2, inv_p) = (c.sigma_n1_sq(), c.sigma_n2_sq(), 1.0 / c.power());
    mc_mean(mc, |rng| {
        let (s1, s2) = sample_pair(&f, rng);
        let snr = (s1 * s1 / n1) / (s2 * s2 / n2 + inv_p);
        Ok(0.5 * snr.ln_1p() / LN_2)
    })
}

/// Resubstitution estimate of a differential entropy in bits: the mean of
/// `-log2 pdf(X_i)` over samples `X_i` drawn by `sample`.
pub fn mc_entropy<T, S, F>(sample: S, pdf: F, mc: &McConfig) -> Result<McEstimate, OracleError>
where
    T: Debug,
    S: Fn(&mut ChaCha8Rng) -> T + Sync,
    F: Fn(&T) -> f64 + Sync,
{
    mc_mean(mc, |rng| {
        let point = sample(rng);
        let value = pdf(&point);
        if value > 0.0 && value.is_finite() {
            Ok(-value.log2())
        } else {
            Err(OracleError::BadDensity {
                point: format!("{point:?}"),
                value,
            })
        }
    })
}

/// `½ E[log2(1 + T P')]` with `T ~ Exp(1)`, `P'` the mode's effective SNR.
pub fn mc_rate_part_c(
    c: &ChannelParams,
    mc: &McConfig,
    mode: RbetaMode,
) -> Result<McEstimate, OracleError> {
    let snr = effective_snr(c, mode);
    mc_mean(mc, |rng| {
        let t: f64 = rng.sample(Exp1);
        Ok(0.5 * (t * snr).ln_1p() / LN_2)
    })
}

/// The third term through the shifted form `½ E[log2(T + 1/P')] + ½ log2 P'`,
/// integrated against the `Exp(1)` density.
pub fn quad_rate_part_c(
    c: &ChannelParams,
    mode: RbetaMode,
    cfg: &QuadratureConfig,
) -> Result<f64, OracleError> {
    let snr = effective_snr(c, mode);
    let e = integrate_semi_infinite(|t| (-t).exp() * (t + 1.0 / snr).log2(), cfg)?;
    Ok(0.5 * e.value + 0.5 * snr.log2())
}

/// Pearson correlation of the amplitudes from `E[S1 S2] = ∫∫ s1 s2 f dS`.
/// The correlation depends on `ρ²` only, so unit second moments are used.
pub fn amplitude_correlation_by_quadrature(
    p: &FadingParams,
    cfg: &QuadratureConfig,
) -> Result<f64, OracleError> {
    let unit = FadingParams::new(1.0, 1.0, p.rho_sq()).expect("unit moments are valid");
    let joint = unit.joint_density();
    let e = integrate_2d(
        |u, v| u * v * joint.eval(u, v),
        Rect::positive_quadrant(),
        &cfg.tightened(0.1),
    )?;
    Ok((e.value - FRAC_PI_4) / (1.0 - FRAC_PI_4))
}

/// The second-term bound as the integral
/// `2 ∫_0^∞ (a + ½ log2(c̃ x² + σ̃1²)) f_X(x) dx - h(S2)`,
/// `a = ½ log2((2πe)² σ_S1² σ_S2²)`, with the correlation in `c̃` computed
/// by [`amplitude_correlation_by_quadrature`].
pub fn quad_part_b_ub(c: &ChannelParams, cfg: &QuadratureConfig) -> Result<f64, RateError> {
    let cor = amplitude_correlation_by_quadrature(c.fading(), cfg).map_err(|e| match e {
        OracleError::Quadrature(q) => RateError::Quadrature(q),
        OracleError::Rate(r) => r,
        other => RateError::Domain(other.to_string()),
    })?;
    let q = PartBUbParams::with_correlation(c, cor)?;
    let f = c.fading();
    let two_pi_e = 2.0 * PI * std::f64::consts::E;
    let a = 0.5 * (two_pi_e * two_pi_e * f.sigma_s1_sq() * f.sigma_s2_sq()).log2();
    let e = expect_half_gaussian(
        |x| a + 0.5 * (q.c_tilde * x * x + q.sigma1_tilde_sq).log2(),
        c.power(),
        cfg,
    )?;
    Ok(e.value - entropy_h_s2(f))
}

/// Resubstitution estimate of `h(x S1 + N1, S2)` using the pointwise
/// convolution density.
pub fn mc_entropy_joint_given_x(
    c: &ChannelParams,
    x: f64,
    cfg: &QuadratureConfig,
    mc: &McConfig,
) -> Result<McEstimate, OracleError> {
    let f = *c.fading();
    let sn = c.sigma_n1_sq().sqrt();
    mc_entropy(
        |rng| {
            let (s1, s2) = sample_pair(&f, rng);
            let n: f64 = rng.sample(StandardNormal);
            (x * s1 + sn * n, s2)
        },
        |&(y, s2)| joint_pdf_y1_s2(c, x, y, s2, cfg).unwrap_or(f64::NAN),
        mc,
    )
}

/// Full Monte Carlo estimate of the second term `E_X[h(S1 X + N1 | S2)]`:
/// draws `(X, S1, S2, N1)` and averages `-log2 f(y1 | s2; x)`.
pub fn mc_rate_part_b(
    c: &ChannelParams,
    cfg: &QuadratureConfig,
    mc: &McConfig,
) -> Result<McEstimate, OracleError> {
    let f = *c.fading();
    let sd = c.power().sqrt();
    let sn = c.sigma_n1_sq().sqrt();
    mc_mean(mc, |rng| {
        let (s1, s2) = sample_pair(&f, rng);
        let x: f64 = sd * rng.sample::<f64, _>(StandardNormal);
        let n: f64 = rng.sample(StandardNormal);
        let y = x * s1 + sn * n;
        // (y; x) and (-y; -x) have the same density
        let joint = joint_pdf_y1_s2(c, x.abs(), if x < 0.0 { -y } else { y }, s2, cfg)?;
        let marginal = crate::fading::marginal_pdf_s2(&f, s2);
        if joint > 0.0 && marginal > 0.0 {
            Ok(-(joint / marginal).log2())
        } else {
            Err(OracleError::BadDensity {
                point: format!("(x={x}, y1={y}, s2={s2})"),
                value: joint,
            })
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mc_is_reproducible_and_batch_order_fixed() {
        let mc = McConfig {
            sample_count: 50_000,
            seed: 7,
            batch_size: 4096,
        };
        let draw = |rng: &mut ChaCha8Rng| Ok(rng.sample::<f64, _>(StandardNormal));
        let a = mc_mean(&mc, draw).unwrap();
        let b = mc_mean(&mc, draw).unwrap();
        assert_eq!(a, b);
        let other = mc_mean(&McConfig { seed: 8, ..mc }, draw).unwrap();
        assert_ne!(a.mean, other.mean);
        assert!(a.mean.abs() < 5.0 * a.std_error);
        assert!((a.std_error * (50_000f64).sqrt() - 1.0).abs() < 0.02);
    }

    #[test]
    fn rejects_tiny_configs() {
        let mc = McConfig {
            sample_count: 1,
            ..McConfig::default()
        };
        assert!(mc_mean(&mc, |_| Ok(0.0)).is_err());
    }

    #[test]
    fn entropy_reports_zero_density() {
        let mc = McConfig::with_samples(1000, 1);
        let err = mc_entropy(|rng| rng.random::<f64>(), |_| 0.0, &mc).unwrap_err();
        assert!(matches!(err, OracleError::BadDensity { .. }));
    }
}
