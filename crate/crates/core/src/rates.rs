//! The three rate terms for a zero-mean Gaussian input of variance `P`,
//! the closed-form upper bound on the second term, and their assembly into
//! `R_α`, `R_α,ub`, `R_β` and the achievable rate `min(R_α, R_β)`.
//!
//! All values are in bits per channel use.
//!
//! The second term `E_X[h(S1 X + N1 | S2)]` is evaluated as follows. For a
//! fixed `x` the joint density of `(x S1 + N1, S2)` is tabulated on a uniform
//! `(s2, y)` grid. Each `s2` row is the conditional density of `S1` given
//! `S2 = s2` (Rician), convolved with the noise and scaled by `f_S2(s2)`.
//! The entropy integral `-∫∫ f log2 f` is then split as
//! `-∫∫ f log2(f / f_S2) + h(S2)`. The first part goes to Simpson's rule and
//! the second is exact, which keeps the `s2 log s2` endpoint behaviour out of
//! the numerics. The map `x ↦ h` is sampled on adaptively bisected nodes,
//! interpolated, and averaged against the half-Gaussian weight.

use std::f64::consts::{E, LN_2, PI};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fading::{
    is_stochastically_degraded, marginal_pdf_s2, rayleigh_entropy_bits, ChannelParams,
    FadingParams, ParamError,
};
use crate::quadrature::{
    expect_half_gaussian_on, gauss_legendre_10, integrate_semi_infinite_scaled, integrate_tol,
    uniform_nodes, Estimate, Grid1D, Grid2D, GridMeta, QuadratureConfig, QuadratureError,
};
use crate::specfun::{
    erfi, exp_integral_e1_scaled, hyp2f2_1_1_3h_2, i0e_unchecked, SpecialFunctionError, EULER_GAMMA,
};

/// How `R_β` treats `σ_S1² ≠ σ_N1²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RbetaMode {
    /// `T1 ~ Exp(1)` whatever the fading and noise variances; `R_β` depends on
    /// `P` alone.
    #[default]
    PaperLiteral,
    /// `T1 = S1²/σ_N1² ~ Exp` with mean `σ_S1²/σ_N1²`, i.e. `P` is replaced by
    /// the receive SNR `P σ_S1²/σ_N1²`.
    GeneralSnr,
}

impl RbetaMode {
    pub fn as_str(self) -> &'static str {
        match self {
            RbetaMode::PaperLiteral => "paper_literal",
            RbetaMode::GeneralSnr => "general_snr",
        }
    }
}

impl fmt::Display for RbetaMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RbetaMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "paper_literal" | "paper-literal" => Ok(RbetaMode::PaperLiteral),
            "general_snr" | "general-snr" => Ok(RbetaMode::GeneralSnr),
            other => Err(format!(
                "unknown mode `{other}` (expected paper_literal or general_snr)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RateError {
    #[error(
        "channel is not stochastically degraded: sigma_n2^2/sigma_n1^2 = {noise_ratio} exceeds sigma_s1^2/sigma_s2^2 = {fading_ratio}"
    )]
    NotDegraded { noise_ratio: f64, fading_ratio: f64 },
    #[error(transparent)]
    Param(#[from] ParamError),
    #[error(transparent)]
    Special(#[from] SpecialFunctionError),
    #[error(transparent)]
    Quadrature(#[from] QuadratureError),
    #[error("{0}")]
    Domain(String),
    #[error(
        "entropy grid at x = {x} did not converge: {estimate} ± {abs_err:e} bits with {points} intervals per axis"
    )]
    GridNotConverged {
        x: f64,
        estimate: f64,
        abs_err: f64,
        points: usize,
    },
    #[error("x -> h interpolation not converged with {nodes} nodes (largest midpoint miss {miss:e} bits)")]
    InterpolationNotConverged { nodes: usize, miss: f64 },
    #[error("entropy grid disagrees with the exact small-x value by {gap:e} bits at x = {x}")]
    SpliceMismatch { x: f64, gap: f64 },
    #[error("amplitude correlation gives c~ = {0}; the bound needs rho^2 < 1")]
    DegenerateCorrelation(f64),
}

impl RateError {
    /// Domain/parameter problems, as opposed to numerical failures.
    pub fn is_domain(&self) -> bool {
        matches!(
            self,
            RateError::NotDegraded { .. }
                | RateError::Param(_)
                | RateError::Domain(_)
                | RateError::DegenerateCorrelation(_)
                | RateError::Special(SpecialFunctionError::Domain { .. })
        )
    }
}

/// Differential entropy of `N(0, variance)` in bits.
pub fn gaussian_entropy_bits(variance: f64) -> f64 {
    0.5 * (2.0 * PI * E * variance).log2()
}

/// Normalized noise-to-fading ratios `σ1² = σ_N1²/σ_S1²`, `σ2² = σ_N2²/σ_S2²`
/// together with `ρ²` and `P`: everything the ratio density `f_S` needs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PartAParams {
    pub sigma1_sq: f64,
    pub sigma2_sq: f64,
    rho_sq: f64,
    power: f64,
}

impl PartAParams {
    pub fn new(c: &ChannelParams) -> Self {
        let f = c.fading();
        Self {
            sigma1_sq: c.sigma_n1_sq() / f.sigma_s1_sq(),
            sigma2_sq: c.sigma_n2_sq() / f.sigma_s2_sq(),
            rho_sq: f.rho_sq(),
            power: c.power(),
        }
    }

    /// `A(s) = (σ1² s)² + (2 - 4ρ²) σ1² σ2² s + σ2⁴`.
    pub fn a_poly(&self, s: f64) -> f64 {
        let t = self.sigma1_sq * s;
        t * t + (2.0 - 4.0 * self.rho_sq) * t * self.sigma2_sq + self.sigma2_sq * self.sigma2_sq
    }

    /// Density of the SNR ratio `S = T1 / (T2 + 1/P)`.
    pub fn density(&self, s: f64) -> f64 {
        if s.is_nan() || s < 0.0 {
            return 0.0;
        }
        let (a1, a2) = (self.sigma1_sq, self.sigma2_sq);
        let p = self.power;
        let one_minus = 1.0 - self.rho_sq;
        let t = a1 * s;
        let lin = (2.0 - 4.0 * self.rho_sq) * t * a2;
        let a = t * t + lin + a2 * a2;
        // A(s) >= 4(1-ρ²)σ1²σ2² s + ... > 0 whenever ρ² < 1
        assert!(a > 0.0, "A({s}) = {a} is not positive");
        let root = a.sqrt();
        // σ2² - sqrt(A) rewritten so the two exponentials combine without
        // cancellation
        let head = -(t * t + lin) / (a2 + root);
        let exponent = (head - t) / (2.0 * p * one_minus);
        let u = t + a2;
        let bracket = 1.0 / (2.0 * p * root) + u / (2.0 * p * a) + one_minus * u / (a * root);
        a1 * a2 * exponent.exp() * bracket
    }

    /// Rough scale of `S`, used to size the first integration panel.
    fn typical_s(&self) -> f64 {
        1.0 / (self.sigma1_sq * (self.sigma2_sq.recip() + self.power.recip()))
    }
}

/// `f_S(s)`: density of the ratio whose `½ E[log2(1 + S)]` is the first
/// rate term.
pub fn density_f_s(c: &ChannelParams, s: f64) -> f64 {
    PartAParams::new(c).density(s)
}

/// First term, `½ ∫_0^∞ log2(1 + s) f_S(s) ds`.
pub fn rate_part_a(c: &ChannelParams, cfg: &QuadratureConfig) -> Result<Estimate, RateError> {
    let pa = PartAParams::new(c);
    let e = integrate_semi_infinite_scaled(|s| s.ln_1p() * pa.density(s), pa.typical_s(), cfg)?;
    let scale = 0.5 / LN_2;
    Ok(Estimate {
        value: scale * e.value,
        abs_err: scale * e.abs_err,
        truncation: e.truncation,
    })
}

/// `h(S2)` in bits.
pub fn entropy_h_s2(p: &FadingParams) -> f64 {
    rayleigh_entropy_bits(p.sigma_s2_sq())
}

/// Parameters of `S1 | S2 = s2`: a Rician law with location `nu_per_s2 · s2`
/// and per-component variance `tau²`.
#[derive(Debug, Clone, Copy)]
struct ConditionalS1 {
    nu_per_s2: f64,
    tau: f64,
}

impl ConditionalS1 {
    fn new(f: &FadingParams) -> Self {
        Self {
            nu_per_s2: (f.rho_sq() * f.sigma_s1_sq() / f.sigma_s2_sq()).sqrt(),
            tau: (0.5 * f.sigma_s1_sq() * (1.0 - f.rho_sq())).sqrt(),
        }
    }

    /// Support window holding all but a negligible share of the mass.
    fn window(&self, s2: f64, cutoff: f64) -> (f64, f64) {
        let nu = self.nu_per_s2 * s2;
        let spread = (cutoff + 1.0) * self.tau;
        ((nu - spread).max(0.0), nu + spread)
    }

    fn pdf(&self, s1: f64, s2: f64) -> f64 {
        if s1 <= 0.0 {
            return 0.0;
        }
        let nu = self.nu_per_s2 * s2;
        let var = self.tau * self.tau;
        let d = s1 - nu;
        s1 / var * (-0.5 * d * d / var).exp() * i0e_unchecked(s1 * nu / var)
    }
}

/// `f_{Y1(x), S2}(y1, s2)` for `Y1(x) = x S1 + N1`, by adaptive quadrature of
/// the convolution (written over `s1 = t/x`) restricted to where both the
/// fading and the noise factors carry mass.
pub fn joint_pdf_y1_s2(
    c: &ChannelParams,
    x: f64,
    y1: f64,
    s2: f64,
    cfg: &QuadratureConfig,
) -> Result<f64, RateError> {
    if !(x >= 0.0 && x.is_finite() && y1.is_finite() && s2.is_finite()) {
        return Err(RateError::Domain(format!(
            "joint_pdf_y1_s2 needs finite x >= 0, y1, s2 (got x = {x}, y1 = {y1}, s2 = {s2})"
        )));
    }
    if s2 <= 0.0 {
        return Ok(0.0);
    }
    let fading = c.fading();
    let sn = c.sigma_n1_sq().sqrt();
    let k = cfg.gaussian_cutoff();
    let (mut lo, mut hi) = ConditionalS1::new(fading).window(s2, k);
    if x > 0.0 {
        lo = lo.max((y1 - k * sn) / x);
        hi = hi.min((y1 + k * sn) / x);
    } else if y1.abs() > k * sn {
        return Ok(0.0);
    }
    if hi <= lo {
        return Ok(0.0);
    }
    let joint = fading.joint_density();
    let norm = 1.0 / (sn * (2.0 * PI).sqrt());
    let e = integrate_tol(
        &|s1: f64| {
            let d = (y1 - x * s1) / sn;
            joint.eval(s1, s2) * norm * (-0.5 * d * d).exp()
        },
        lo,
        hi,
        0.0,
        cfg.rel_tol,
        cfg.max_subdivisions,
    )?;
    Ok(e.value)
}

/// Tabulates `f_{Y1(x), S2}` on `(n + 1)²` uniform nodes: first axis `s2`,
/// second axis `y1`, both truncated where the neglected mass falls below
/// `tail_mass_tol`.
pub fn tabulate_joint_y1_s2(
    c: &ChannelParams,
    x: f64,
    n: usize,
    cfg: &QuadratureConfig,
) -> Result<Grid2D, RateError> {
    if !(x >= 0.0 && x.is_finite()) {
        return Err(RateError::Domain(format!(
            "x = {x} must be finite and >= 0"
        )));
    }
    let fading = c.fading();
    let cond = ConditionalS1::new(fading);
    let sn = c.sigma_n1_sq().sqrt();
    let k = cfg.gaussian_cutoff();
    let s2_max = (fading.sigma_s2_sq() * cfg.tail_log()).sqrt();
    let s1_max = cond.window(s2_max, k).1;
    let y0 = -k * sn;
    let y_range = (y0, x * s1_max + k * sn);
    let s2s = uniform_nodes((0.0, s2_max), n);
    let ys = uniform_nodes(y_range, n);
    let h = (y_range.1 - y_range.0) / n as f64;

    // s1 panels no wider than the conditional spread or the noise footprint
    // (in s1 units) so the 10-point rule sees smooth, resolved integrands
    let panel_cap = if x > 0.0 {
        (4.0 * sn / x).min(1.5 * cond.tau)
    } else {
        1.5 * cond.tau
    };
    let rule = gauss_legendre_10();
    let inv_two_var = 0.5 / (sn * sn);
    let step_ratio = (-h * h / (sn * sn)).exp();
    let gauss_norm = 1.0 / (sn * (2.0 * PI).sqrt());

    let mut values = vec![0.0; (n + 1) * (n + 1)];
    values
        .par_chunks_mut(n + 1)
        .zip(s2s.par_iter())
        .for_each(|(row, &s2)| {
            let fs2 = marginal_pdf_s2(fading, s2);
            if fs2 == 0.0 {
                return;
            }
            let (lo, hi) = cond.window(s2, k);
            let panels = (((hi - lo) / panel_cap).ceil() as usize).max(4);
            let half = 0.5 * (hi - lo) / panels as f64;
            for p in 0..panels {
                let mid = lo + (2 * p + 1) as f64 * half;
                for &(t, w) in &rule {
                    let s1 = mid + half * t;
                    let weight = w * half * cond.pdf(s1, s2) * fs2 * gauss_norm;
                    if weight == 0.0 {
                        continue;
                    }
                    // deposit weight·φ(y - x s1) on the y nodes within the
                    // noise cutoff; exp(-d²/2σ²) advances by the usual
                    // two-multiplication recurrence
                    let center = x * s1;
                    let first = ((center - k * sn - y0) / h).ceil().max(0.0) as usize;
                    let last =
                        (((center + k * sn - y0) / h).floor().max(-1.0) as isize).min(n as isize);
                    if last < first as isize {
                        continue;
                    }
                    let d = y0 + first as f64 * h - center;
                    let mut g = (-d * d * inv_two_var).exp();
                    let mut q = (-(2.0 * d * h + h * h) * inv_two_var).exp();
                    for v in &mut row[first..=last as usize] {
                        *v += weight * g;
                        g *= q;
                        q *= step_ratio;
                    }
                }
            }
        });
    Ok(Grid2D::new(s2s, ys, values, cfg.tail_mass_tol)?)
}

/// Result of a tabulated entropy evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EntropyEstimate {
    pub value: f64,
    pub abs_err: f64,
    pub points_per_axis: usize,
    pub grid: Option<GridMeta>,
}

// Densities below this contribute nothing to entropy integrals.
const DENSITY_FLOOR: f64 = 1e-300;

/// `h(x S1 + N1 | S2)` from the tabulated joint density.
fn conditional_entropy(
    c: &ChannelParams,
    x: f64,
    cfg: &QuadratureConfig,
) -> Result<EntropyEstimate, RateError> {
    let mut n = cfg.grid_points_per_axis;
    let mut last = None;
    for _ in 0..=cfg.max_grid_doublings {
        let grid = tabulate_joint_y1_s2(c, x, n, cfg)?;
        let fs2: Vec<f64> = grid
            .xs()
            .iter()
            .map(|&s2| marginal_pdf_s2(c.fading(), s2))
            .collect();
        let integrand = |ix: usize, f: f64| {
            if f <= DENSITY_FLOOR || fs2[ix] <= DENSITY_FLOOR {
                0.0
            } else {
                -f * (f / fs2[ix]).log2()
            }
        };
        let fine = grid.simpson_by(integrand, 1)?;
        let coarse = grid.simpson_by(integrand, 2)?;
        // Simpson's error shrinks 16-fold per halving of the step
        let abs_err = (fine - coarse).abs() / 15.0;
        let est = EntropyEstimate {
            value: fine,
            abs_err,
            points_per_axis: n,
            grid: Some(*grid.meta()),
        };
        if abs_err <= cfg.entropy_tol {
            return Ok(est);
        }
        last = Some(est);
        n *= 2;
    }
    let est = last.expect("at least one grid level runs");
    Err(RateError::GridNotConverged {
        x,
        estimate: est.value,
        abs_err: est.abs_err,
        points: est.points_per_axis,
    })
}

/// `h(x S1 + N1, S2)` in bits; exact at `x = 0`, where the pair is independent.
pub fn entropy_joint_given_x(
    c: &ChannelParams,
    x: f64,
    cfg: &QuadratureConfig,
) -> Result<EntropyEstimate, RateError> {
    let h_s2 = entropy_h_s2(c.fading());
    if x == 0.0 {
        return Ok(EntropyEstimate {
            value: gaussian_entropy_bits(c.sigma_n1_sq()) + h_s2,
            abs_err: 0.0,
            points_per_axis: 0,
            grid: None,
        });
    }
    let mut e = conditional_entropy(c, x, cfg)?;
    e.value += h_s2;
    Ok(e)
}

/// Below `X_MIN_REL · sqrt(P)` the exact `x = 0` entropy is used.
pub const X_MIN_REL: f64 = 1e-3;
const INITIAL_X_INTERVALS: usize = 8;
const MAX_X_NODES: usize = 257;

/// Second term, `E_X[h(S1 X + N1 | S2)] = E_X[h(S1 X + N1, S2)] - h(S2)`.
pub fn rate_part_b(c: &ChannelParams, cfg: &QuadratureConfig) -> Result<Estimate, RateError> {
    cfg.validate()?;
    let sd = c.power().sqrt();
    let cutoff = cfg.gaussian_cutoff();
    let h_noise = gaussian_entropy_bits(c.sigma_n1_sq());
    let x_min = X_MIN_REL * sd;
    let tol = cfg.entropy_tol;

    // nodes live in u = x / sqrt(P) on [0, cutoff]
    let eval = |u: f64| -> Result<(f64, f64), RateError> {
        let x = u * sd;
        if x < x_min {
            Ok((h_noise, 0.0))
        } else {
            conditional_entropy(c, x, cfg).map(|e| (e.value, e.abs_err))
        }
    };
    let mut us: Vec<f64> = (0..=INITIAL_X_INTERVALS)
        .map(|i| cutoff * i as f64 / INITIAL_X_INTERVALS as f64)
        .collect();
    let first: Vec<(f64, f64)> = us.par_iter().map(|&u| eval(u)).collect::<Result<_, _>>()?;
    let mut hs: Vec<f64> = first.iter().map(|v| v.0).collect();
    let mut grid_err = first.iter().map(|v| v.1).fold(0.0, f64::max);
    let mut active = vec![true; INITIAL_X_INTERVALS];
    let mut settled_miss = 0.0f64;

    loop {
        let interp = Grid1D::new(us.clone(), hs.clone())?;
        let mids: Vec<f64> = active
            .iter()
            .enumerate()
            .filter(|(_, a)| **a)
            .map(|(i, _)| 0.5 * (us[i] + us[i + 1]))
            .collect();
        if mids.is_empty() {
            break;
        }
        if us.len() + mids.len() > MAX_X_NODES {
            let miss = mids
                .iter()
                .map(|&m| eval(m).map(|v| (v.0 - interp.eval_inside(m)).abs()))
                .collect::<Result<Vec<_>, _>>()?
                .into_iter()
                .fold(0.0, f64::max);
            return Err(RateError::InterpolationNotConverged {
                nodes: us.len(),
                miss,
            });
        }
        let vals: Vec<(f64, f64)> = mids
            .par_iter()
            .map(|&m| eval(m))
            .collect::<Result<_, _>>()?;
        let mut next_us = Vec::with_capacity(us.len() + mids.len());
        let mut next_hs = Vec::with_capacity(us.len() + mids.len());
        let mut next_active = Vec::with_capacity(active.len() + mids.len());
        let mut k = 0;
        for i in 0..active.len() {
            next_us.push(us[i]);
            next_hs.push(hs[i]);
            if active[i] {
                let (m, (v, e)) = (mids[k], vals[k]);
                k += 1;
                grid_err = grid_err.max(e);
                let miss = (v - interp.eval_inside(m)).abs();
                let refine = miss > tol;
                if !refine {
                    settled_miss = settled_miss.max(miss);
                }
                next_us.push(m);
                next_hs.push(v);
                next_active.extend([refine, refine]);
            } else {
                next_active.push(false);
            }
        }
        next_us.push(*us.last().unwrap());
        next_hs.push(*hs.last().unwrap());
        us = next_us;
        hs = next_hs;
        active = next_active;
    }

    let interp = Grid1D::new(us.clone(), hs)?;
    let breaks: Vec<f64> = us.iter().map(|u| u * sd).collect();
    let e = expect_half_gaussian_on(|x| interp.eval_inside(x / sd), c.power(), &breaks, cfg)?;

    // the exact small-x value and the grid must meet at the splice point
    let spliced = conditional_entropy(c, x_min, cfg)?;
    let gap = (spliced.value - h_noise).abs();
    if gap > 10.0 * tol {
        return Err(RateError::SpliceMismatch { x: x_min, gap });
    }

    Ok(Estimate {
        value: e.value,
        abs_err: e.abs_err + grid_err + settled_miss + gap,
        truncation: e.truncation,
    })
}

/// Ingredients of the closed-form bound on the second term.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PartBUbParams {
    /// `σ̃1² = (1 - π/4) σ_N1²/σ_S1²`.
    pub sigma1_tilde_sq: f64,
    /// `c̃ = (1 - π/4)² (1 - cor(S1, S2)²)`.
    pub c_tilde: f64,
    /// `z = σ̃1² / (2 c̃ P)`, the argument of `erfi(sqrt z)` and `₂F₂`.
    pub z: f64,
}

impl PartBUbParams {
    pub fn new(c: &ChannelParams) -> Result<Self, RateError> {
        Self::with_correlation(c, crate::fading::amplitude_correlation(c.fading()))
    }

    /// Same ingredients from an externally supplied amplitude correlation.
    pub fn with_correlation(c: &ChannelParams, cor: f64) -> Result<Self, RateError> {
        let k = 1.0 - std::f64::consts::FRAC_PI_4;
        let sigma1_tilde_sq = k * c.sigma_n1_sq() / c.fading().sigma_s1_sq();
        let c_tilde = k * k * (1.0 - cor * cor);
        if !(c_tilde > 0.0 && c_tilde.is_finite()) {
            return Err(RateError::DegenerateCorrelation(c_tilde));
        }
        Ok(Self {
            sigma1_tilde_sq,
            c_tilde,
            z: sigma1_tilde_sq / (2.0 * c_tilde * c.power()),
        })
    }
}

/// The erfi / ₂F₂ closed form of the bound, with no regime switch.
///
/// Two terms growing like `e^z` cancel, so accuracy degrades as roughly
/// `ε e^z`; see [`rate_part_b_ub`] for the guarded version.
pub fn part_b_ub_closed_form(c: &ChannelParams) -> Result<f64, RateError> {
    let q = PartBUbParams::new(c)?;
    let z = q.z;
    let lead =
        0.5 * (2.0 * (PI * E).powi(2) * c.fading().sigma_s1_sq() * q.c_tilde * c.power()).log2();
    let erfi_term = PI / (2.0 * LN_2) * erfi(z.sqrt())?;
    let hyp_term = (z * hyp2f2_1_1_3h_2(z)? + 1.0 + EULER_GAMMA) / LN_2;
    Ok(lead + erfi_term + 1.0 - hyp_term)
}

/// Upper bound on the second term. Uses the closed form while
/// `z <= cfg.closed_form_z_max` and the direct Gaussian-weighted integral
/// beyond, where the closed form cancels catastrophically.
pub fn rate_part_b_ub(c: &ChannelParams, cfg: &QuadratureConfig) -> Result<f64, RateError> {
    let q = PartBUbParams::new(c)?;
    if q.z <= cfg.closed_form_z_max {
        part_b_ub_closed_form(c)
    } else {
        crate::oracle::quad_part_b_ub(c, cfg)
    }
}

/// Third term `R_β = e^{1/P'} E1(1/P') / (2 ln 2)` with `P' = P`
/// (paper-literal) or `P' = P σ_S1²/σ_N1²` (general SNR).
pub fn rate_part_c(c: &ChannelParams, mode: RbetaMode) -> Result<f64, RateError> {
    let snr = effective_snr(c, mode);
    Ok(exp_integral_e1_scaled(1.0 / snr)? / (2.0 * LN_2))
}

pub(crate) fn effective_snr(c: &ChannelParams, mode: RbetaMode) -> f64 {
    match mode {
        RbetaMode::PaperLiteral => c.power(),
        RbetaMode::GeneralSnr => c.power() * c.fading().sigma_s1_sq() / c.sigma_n1_sq(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RateOptions {
    pub mode: RbetaMode,
    /// Run the tabulated second-term pipeline; otherwise only its bound.
    pub with_part_b: bool,
    /// Evaluate channels that fail the degradedness test instead of erroring.
    pub allow_nondegraded: bool,
}

impl Default for RateOptions {
    fn default() -> Self {
        Self {
            mode: RbetaMode::PaperLiteral,
            with_part_b: true,
            allow_nondegraded: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RateBreakdown {
    pub part_a: f64,
    pub part_b: Option<f64>,
    pub part_b_ub: f64,
    pub part_c: f64,
    pub r_alpha: Option<f64>,
    pub r_alpha_ub: f64,
    pub r_beta: f64,
    pub achievable: Option<f64>,
    pub achievable_ub: f64,
    /// Sum of the reported absolute error estimates of the numerical terms.
    pub err_est: f64,
    pub part_b_ub_closed_form: bool,
    pub degraded: bool,
}

impl RateBreakdown {
    /// Names of the breakdown invariants that do not hold.
    pub fn invariant_violations(&self) -> Vec<&'static str> {
        let mut bad = Vec::new();
        let all = [
            Some(self.part_a),
            self.part_b,
            Some(self.part_b_ub),
            Some(self.part_c),
            self.r_alpha,
            Some(self.r_alpha_ub),
            self.achievable,
            Some(self.achievable_ub),
        ];
        if all.iter().flatten().any(|v| !v.is_finite()) {
            bad.push("all finite");
        }
        if let Some(ra) = self.r_alpha {
            if ra > self.r_alpha_ub {
                bad.push("r_alpha <= r_alpha_ub");
            }
        }
        if self.r_beta < 0.0 {
            bad.push("r_beta >= 0");
        }
        if let Some(a) = self.achievable {
            if a > self.achievable_ub {
                bad.push("achievable <= achievable_ub");
            }
        }
        bad
    }
}

/// Terms that were computed before a failure.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize)]
pub struct PartialRates {
    pub part_a: Option<f64>,
    pub part_b: Option<f64>,
    pub part_b_ub: Option<f64>,
    pub part_c: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Error)]
#[error("{error}")]
pub struct RateFailure {
    pub error: RateError,
    pub partial: PartialRates,
}

/// Every rate term for one channel and power.
pub fn compute_rates(
    c: &ChannelParams,
    cfg: &QuadratureConfig,
    opts: &RateOptions,
) -> Result<RateBreakdown, RateFailure> {
    let mut partial = PartialRates::default();
    let fail = |error: RateError, partial: PartialRates| RateFailure { error, partial };
    let degraded = is_stochastically_degraded(c);
    if !degraded && !opts.allow_nondegraded {
        let f = c.fading();
        return Err(fail(
            RateError::NotDegraded {
                noise_ratio: c.sigma_n2_sq() / c.sigma_n1_sq(),
                fading_ratio: f.sigma_s1_sq() / f.sigma_s2_sq(),
            },
            partial,
        ));
    }
    cfg.validate().map_err(|e| fail(e.into(), partial))?;

    let part_c = rate_part_c(c, opts.mode).map_err(|e| fail(e, partial))?;
    partial.part_c = Some(part_c);
    let closed = PartBUbParams::new(c).map_err(|e| fail(e, partial))?.z <= cfg.closed_form_z_max;
    let part_b_ub = rate_part_b_ub(c, cfg).map_err(|e| fail(e, partial))?;
    partial.part_b_ub = Some(part_b_ub);
    let a = rate_part_a(c, cfg).map_err(|e| fail(e, partial))?;
    partial.part_a = Some(a.value);
    let mut err_est = a.abs_err;
    let part_b = if opts.with_part_b {
        let b = rate_part_b(c, cfg).map_err(|e| fail(e, partial))?;
        err_est += b.abs_err;
        Some(b.value)
    } else {
        None
    };

    let r_alpha = part_b.map(|b| a.value + b);
    let r_alpha_ub = a.value + part_b_ub;
    Ok(RateBreakdown {
        part_a: a.value,
        part_b,
        part_b_ub,
        part_c,
        r_alpha,
        r_alpha_ub,
        r_beta: part_c,
        achievable: r_alpha.map(|r| r.min(part_c)),
        achievable_ub: r_alpha_ub.min(part_c),
        err_est,
        part_b_ub_closed_form: closed,
        degraded,
    })
}
