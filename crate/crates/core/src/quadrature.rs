//! Numerical integration and grid machinery shared by every rate term.
//!
//! * [`integrate`]: globally adaptive 21-point Gauss–Kronrod on a finite
//!   interval.
//! * [`integrate_semi_infinite`]: geometric panels `[0,L], [L,2L], [2L,4L], …`
//!   each integrated adaptively; the domain is truncated once two consecutive
//!   panels carry less than `tail_mass_tol`.
//! * [`integrate_2d`]: iterated adaptive integration over rectangles whose
//!   sides may be infinite.
//! * [`Grid1D`] / [`Grid2D`]: tabulated functions with monotone cubic
//!   (1-D) and bilinear (2-D) interpolation.
//! * [`expect_half_gaussian`]: `2 ∫_0^∞ g(x) f_X(x) dx` for zero-mean
//!   Gaussian `X`, computed by substituting `x = sqrt(P) u` and truncating at
//!   the `u` where the Gaussian tail mass drops below `tail_mass_tol`.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::f64::consts::PI;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct QuadratureConfig {
    pub abs_tol: f64,
    pub rel_tol: f64,
    /// Probability / integrand mass allowed to be cut off by truncation.
    pub tail_mass_tol: f64,
    pub max_subdivisions: usize,
    /// Intervals per axis for 2-D tabulations (nodes = this + 1). Must be a
    /// multiple of 4 so the half-resolution Simpson estimate exists.
    pub grid_points_per_axis: usize,
    /// Target accuracy, in bits, for tabulated entropies and for the
    /// interpolated `x -> h(x)` curve.
    pub entropy_tol: f64,
    /// Grid doublings allowed before a tabulated entropy is declared
    /// unconverged.
    pub max_grid_doublings: u32,
    /// Largest `z = σ̃1²/(2 c̃ P)` for which the erfi/₂F₂ closed form of the
    /// second-term bound is trusted; beyond it the bound is integrated
    /// directly.
    pub closed_form_z_max: f64,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            abs_tol: 1e-9,
            rel_tol: 1e-8,
            tail_mass_tol: 1e-10,
            max_subdivisions: 500,
            grid_points_per_axis: 512,
            entropy_tol: 1e-4,
            max_grid_doublings: 1,
            closed_form_z_max: 12.0,
        }
    }
}

impl QuadratureConfig {
    pub fn validate(&self) -> Result<(), QuadratureError> {
        let ok = self.abs_tol > 0.0
            && self.rel_tol > 0.0
            && self.tail_mass_tol > 0.0
            && self.tail_mass_tol < 1.0
            && self.entropy_tol > 0.0
            && self.closed_form_z_max >= 0.0
            && self.max_subdivisions > 0
            && self.grid_points_per_axis >= 8
            && self.grid_points_per_axis.is_multiple_of(4);
        if ok {
            Ok(())
        } else {
            Err(QuadratureError::Config(format!("{self:?}")))
        }
    }

    /// Same tolerances scaled by `factor` (used for nested inner integrals).
    pub fn tightened(&self, factor: f64) -> Self {
        Self {
            abs_tol: self.abs_tol * factor,
            rel_tol: self.rel_tol * factor,
            ..*self
        }
    }

    /// `ln(1 / tail_mass_tol)`.
    pub fn tail_log(&self) -> f64 {
        -self.tail_mass_tol.ln()
    }

    /// Number of standard deviations beyond which a Gaussian carries less
    /// than `tail_mass_tol` (two-sided).
    pub fn gaussian_cutoff(&self) -> f64 {
        (2.0 * self.tail_log()).sqrt()
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QuadratureError {
    #[error(
        "subdivision budget of {subdivisions} exhausted: best estimate {estimate} ± {abs_err:e}"
    )]
    BudgetExhausted {
        estimate: f64,
        abs_err: f64,
        subdivisions: usize,
    },
    #[error("integrand returned {value} at {at}")]
    NonFinite { at: f64, value: f64 },
    #[error(
        "tail truncation did not settle: last panel ended at {reached} with mass {last_panel:e}"
    )]
    TailNotSettled { reached: f64, last_panel: f64 },
    #[error("point {point:?} lies outside the grid")]
    Extrapolation { point: Vec<f64> },
    #[error("invalid grid: {0}")]
    Grid(String),
    #[error("invalid quadrature configuration: {0}")]
    Config(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Estimate {
    pub value: f64,
    pub abs_err: f64,
    /// Upper limit actually used when the domain was truncated.
    pub truncation: Option<f64>,
}

impl Estimate {
    fn finite(value: f64, abs_err: f64) -> Self {
        Self {
            value,
            abs_err,
            truncation: None,
        }
    }
}

// 21-point Gauss–Kronrod abscissae and weights; the 10-point Gauss rule
// uses the odd-indexed abscissae.
#[allow(clippy::excessive_precision)]
const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];
#[allow(clippy::excessive_precision)]
const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_958_109_831_074,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];
#[allow(clippy::excessive_precision)]
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_748,
];

struct Panel {
    a: f64,
    b: f64,
    value: f64,
    err: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.err == other.err
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.err.total_cmp(&other.err)
    }
}

fn gauss_kronrod<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Result<Panel, QuadratureError> {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let eval = |x: f64| {
        let v = f(x);
        if v.is_finite() {
            Ok(v)
        } else {
            Err(QuadratureError::NonFinite { at: x, value: v })
        }
    };
    let fc = eval(center)?;
    let mut kronrod = fc * WGK[10];
    let mut gauss = 0.0;
    let mut fv = [0.0; 21];
    fv[10] = fc;
    for i in 0..10 {
        let dx = half * XGK[i];
        let f1 = eval(center - dx)?;
        let f2 = eval(center + dx)?;
        fv[i] = f1;
        fv[20 - i] = f2;
        kronrod += WGK[i] * (f1 + f2);
        if i % 2 == 1 {
            gauss += WG[i / 2] * (f1 + f2);
        }
    }
    let mean = 0.5 * kronrod;
    let mut asc = WGK[10] * (fc - mean).abs();
    let mut abs_k = WGK[10] * fc.abs();
    for i in 0..10 {
        asc += WGK[i] * ((fv[i] - mean).abs() + (fv[20 - i] - mean).abs());
        abs_k += WGK[i] * (fv[i].abs() + fv[20 - i].abs());
    }
    let value = kronrod * half;
    let res_abs = abs_k * half.abs();
    let res_asc = asc * half.abs();
    let mut err = ((kronrod - gauss) * half).abs();
    if res_asc != 0.0 && err != 0.0 {
        err = res_asc * (200.0 * err / res_asc).powf(1.5).min(1.0);
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * res_abs);
    }
    Ok(Panel { a, b, value, err })
}

/// Adaptive integral of `f` over the finite interval `[a, b]`.
pub fn integrate<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    cfg: &QuadratureConfig,
) -> Result<Estimate, QuadratureError> {
    integrate_tol(&f, a, b, cfg.abs_tol, cfg.rel_tol, cfg.max_subdivisions)
}

pub(crate) fn integrate_tol<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    abs_tol: f64,
    rel_tol: f64,
    max_subdivisions: usize,
) -> Result<Estimate, QuadratureError> {
    if a == b {
        return Ok(Estimate::finite(0.0, 0.0));
    }
    let first = gauss_kronrod(f, a, b)?;
    let mut total = first.value;
    let mut total_err = first.err;
    let mut heap = BinaryHeap::new();
    heap.push(first);
    let mut subdivisions = 1;
    while total_err > abs_tol.max(rel_tol * total.abs()) {
        if subdivisions >= max_subdivisions {
            return Err(QuadratureError::BudgetExhausted {
                estimate: total,
                abs_err: total_err,
                subdivisions,
            });
        }
        let worst = heap.pop().expect("heap holds at least one panel");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // interval cannot be split further in floating point
            heap.push(worst);
            return Err(QuadratureError::BudgetExhausted {
                estimate: total,
                abs_err: total_err,
                subdivisions,
            });
        }
        let left = gauss_kronrod(f, worst.a, mid)?;
        let right = gauss_kronrod(f, mid, worst.b)?;
        total += left.value + right.value - worst.value;
        total_err += left.err + right.err - worst.err;
        heap.push(left);
        heap.push(right);
        subdivisions += 1;
    }
    // re-sum to shed the drift of the running updates
    let (mut value, mut err) = (0.0, 0.0);
    for p in heap.iter() {
        value += p.value;
        err += p.err;
    }
    Ok(Estimate::finite(value, err))
}

/// `∫_0^∞ f`, truncated where the tail mass falls below `tail_mass_tol`.
pub fn integrate_semi_infinite<F: Fn(f64) -> f64>(
    f: F,
    cfg: &QuadratureConfig,
) -> Result<Estimate, QuadratureError> {
    integrate_semi_infinite_scaled(f, 1.0, cfg)
}

const MAX_TAIL_PANELS: usize = 400;
// An integrand still identically zero after this many doublings is taken
// to be zero.
const ZERO_PANELS: usize = 64;

/// As [`integrate_semi_infinite`] with the first panel `[0, scale]`.
///
/// A panel counts as tail once its contribution is below `tail_mass_tol`
/// relative to the accumulated integral (for densities: absolute mass);
/// the domain is cut after two such panels in a row.
pub fn integrate_semi_infinite_scaled<F: Fn(f64) -> f64>(
    f: F,
    scale: f64,
    cfg: &QuadratureConfig,
) -> Result<Estimate, QuadratureError> {
    let panel_tol = 0.25 * cfg.abs_tol;
    let mut lo = 0.0;
    let mut hi = scale;
    let mut value = 0.0;
    let mut err = 0.0;
    let mut quiet = 0;
    let mut last = f64::INFINITY;
    for panel in 0..MAX_TAIL_PANELS {
        let est = integrate_tol(&f, lo, hi, panel_tol, cfg.rel_tol, cfg.max_subdivisions)?;
        value += est.value;
        err += est.abs_err;
        last = est.value.abs();
        let settled = if value == 0.0 {
            panel >= ZERO_PANELS
        } else {
            last <= cfg.tail_mass_tol * value.abs()
        };
        if settled {
            quiet += 1;
            if quiet == 2 {
                return Ok(Estimate {
                    value,
                    abs_err: err + last,
                    truncation: Some(hi),
                });
            }
        } else {
            quiet = 0;
        }
        lo = hi;
        hi *= 2.0;
    }
    Err(QuadratureError::TailNotSettled {
        reached: lo,
        last_panel: last,
    })
}

/// `∫_lo^hi f` where either end may be infinite.
pub fn integrate_interval<F: Fn(f64) -> f64>(
    f: F,
    lo: f64,
    hi: f64,
    cfg: &QuadratureConfig,
) -> Result<Estimate, QuadratureError> {
    match (lo.is_finite(), hi.is_finite()) {
        (true, true) => integrate(f, lo, hi, cfg),
        (true, false) => integrate_semi_infinite(|t| f(lo + t), cfg),
        (false, true) => integrate_semi_infinite(|t| f(hi - t), cfg),
        (false, false) => {
            let right = integrate_semi_infinite(&f, cfg)?;
            let left = integrate_semi_infinite(|t| f(-t), cfg)?;
            Ok(Estimate::finite(
                left.value + right.value,
                left.abs_err + right.abs_err,
            ))
        }
    }
}

/// Axis-aligned integration domain; bounds may be `±∞`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rect {
    pub x: (f64, f64),
    pub y: (f64, f64),
}

impl Rect {
    pub fn positive_quadrant() -> Self {
        Self {
            x: (0.0, f64::INFINITY),
            y: (0.0, f64::INFINITY),
        }
    }
}

/// Iterated adaptive integral of `f(x, y)` over `domain`. Inner integrals
/// run at ten times tighter tolerance than the outer one.
pub fn integrate_2d<F: Fn(f64, f64) -> f64>(
    f: F,
    domain: Rect,
    cfg: &QuadratureConfig,
) -> Result<Estimate, QuadratureError> {
    let inner_cfg = cfg.tightened(0.1);
    let inner_err = std::cell::Cell::new(0.0f64);
    let failure = std::cell::RefCell::new(None);
    let outer = integrate_interval(
        |x| match integrate_interval(|y| f(x, y), domain.y.0, domain.y.1, &inner_cfg) {
            Ok(e) => {
                inner_err.set(inner_err.get().max(e.abs_err));
                e.value
            }
            Err(e) => {
                failure.borrow_mut().get_or_insert(e);
                f64::NAN
            }
        },
        domain.x.0,
        domain.x.1,
        cfg,
    );
    if let Some(e) = failure.into_inner() {
        return Err(e);
    }
    let outer = outer?;
    let width = match (domain.x.0.is_finite(), domain.x.1.is_finite()) {
        (true, true) => domain.x.1 - domain.x.0,
        _ => outer.truncation.unwrap_or(1.0),
    };
    Ok(Estimate::finite(
        outer.value,
        outer.abs_err + inner_err.get() * width.abs(),
    ))
}

/// `2 ∫_0^∞ g(x) φ_P(x) dx` with `φ_P` the zero-mean Gaussian density of
/// variance `variance`: the expectation `E[g(|X|)]`.
pub fn expect_half_gaussian<G: Fn(f64) -> f64>(
    g: G,
    variance: f64,
    cfg: &QuadratureConfig,
) -> Result<Estimate, QuadratureError> {
    expect_half_gaussian_on(g, variance, &[], cfg)
}

/// As [`expect_half_gaussian`], splitting the `x` range at `breaks` (useful
/// when `g` is only piecewise smooth, e.g. an interpolant).
pub fn expect_half_gaussian_on<G: Fn(f64) -> f64>(
    g: G,
    variance: f64,
    breaks: &[f64],
    cfg: &QuadratureConfig,
) -> Result<Estimate, QuadratureError> {
    if !(variance.is_finite() && variance > 0.0) {
        return Err(QuadratureError::Config(format!(
            "Gaussian variance {variance} must be positive"
        )));
    }
    let sd = variance.sqrt();
    let cutoff = cfg.gaussian_cutoff();
    let weight = (2.0 / PI).sqrt();
    let integrand = |u: f64| weight * (-0.5 * u * u).exp() * g(sd * u);
    let mut cuts: Vec<f64> = breaks
        .iter()
        .map(|b| b / sd)
        .filter(|u| *u > 0.0 && *u < cutoff)
        .collect();
    cuts.insert(0, 0.0);
    cuts.push(cutoff);
    let mut value = 0.0;
    let mut err = 0.0;
    for w in cuts.windows(2) {
        let e = integrate_tol(
            &integrand,
            w[0],
            w[1],
            cfg.abs_tol / cuts.len() as f64,
            cfg.rel_tol,
            cfg.max_subdivisions,
        )?;
        value += e.value;
        err += e.abs_err;
    }
    Ok(Estimate {
        value,
        abs_err: err,
        truncation: Some(cutoff * sd),
    })
}

fn check_axis(name: &str, nodes: &[f64]) -> Result<(), QuadratureError> {
    if nodes.len() < 2 {
        return Err(QuadratureError::Grid(format!(
            "{name} axis needs at least two nodes"
        )));
    }
    if !nodes.iter().all(|v| v.is_finite()) || nodes.windows(2).any(|w| w[1] <= w[0]) {
        return Err(QuadratureError::Grid(format!(
            "{name} axis must be finite and strictly increasing"
        )));
    }
    Ok(())
}

fn locate(nodes: &[f64], t: f64) -> usize {
    // index i with nodes[i] <= t <= nodes[i+1]
    let i = nodes.partition_point(|&v| v <= t);
    i.clamp(1, nodes.len() - 1) - 1
}

/// Tabulated 1-D function with a monotone piecewise-cubic (Fritsch–Carlson)
/// interpolant.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid1D {
    nodes: Vec<f64>,
    values: Vec<f64>,
    slopes: Vec<f64>,
    clamp_nonnegative: bool,
}

impl Grid1D {
    pub fn new(nodes: Vec<f64>, values: Vec<f64>) -> Result<Self, QuadratureError> {
        check_axis("node", &nodes)?;
        if values.len() != nodes.len() || !values.iter().all(|v| v.is_finite()) {
            return Err(QuadratureError::Grid(
                "values must be finite and match the node count".into(),
            ));
        }
        let slopes = pchip_slopes(&nodes, &values);
        Ok(Self {
            nodes,
            values,
            slopes,
            clamp_nonnegative: false,
        })
    }

    /// Grid holding a density: interpolated values are clamped at zero.
    pub fn density(nodes: Vec<f64>, values: Vec<f64>) -> Result<Self, QuadratureError> {
        let mut g = Self::new(nodes, values)?;
        g.clamp_nonnegative = true;
        Ok(g)
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn bounds(&self) -> (f64, f64) {
        (self.nodes[0], *self.nodes.last().unwrap())
    }

    pub fn interpolate(&self, t: f64) -> Result<f64, QuadratureError> {
        let (lo, hi) = self.bounds();
        if !(t >= lo && t <= hi) {
            return Err(QuadratureError::Extrapolation { point: vec![t] });
        }
        Ok(self.eval_inside(t))
    }

    /// Interpolant value; `t` outside the grid is clamped to the nearest end.
    pub(crate) fn eval_inside(&self, t: f64) -> f64 {
        let i = locate(&self.nodes, t);
        let (x0, x1) = (self.nodes[i], self.nodes[i + 1]);
        let h = x1 - x0;
        let s = ((t - x0) / h).clamp(0.0, 1.0);
        let (y0, y1) = (self.values[i], self.values[i + 1]);
        let (d0, d1) = (self.slopes[i] * h, self.slopes[i + 1] * h);
        let s2 = s * s;
        let s3 = s2 * s;
        let v = (2.0 * s3 - 3.0 * s2 + 1.0) * y0
            + (s3 - 2.0 * s2 + s) * d0
            + (-2.0 * s3 + 3.0 * s2) * y1
            + (s3 - s2) * d1;
        if self.clamp_nonnegative {
            v.max(0.0)
        } else {
            v
        }
    }
}

fn pchip_slopes(x: &[f64], y: &[f64]) -> Vec<f64> {
    let n = x.len();
    let h: Vec<f64> = x.windows(2).map(|w| w[1] - w[0]).collect();
    let delta: Vec<f64> = (0..n - 1).map(|i| (y[i + 1] - y[i]) / h[i]).collect();
    if n == 2 {
        return vec![delta[0]; 2];
    }
    let mut d = vec![0.0; n];
    for k in 1..n - 1 {
        if delta[k - 1] * delta[k] <= 0.0 {
            d[k] = 0.0;
        } else {
            let w1 = 2.0 * h[k] + h[k - 1];
            let w2 = h[k] + 2.0 * h[k - 1];
            d[k] = (w1 + w2) / (w1 / delta[k - 1] + w2 / delta[k]);
        }
    }
    d[0] = pchip_end(h[0], h[1], delta[0], delta[1]);
    d[n - 1] = pchip_end(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
    d
}

fn pchip_end(h0: f64, h1: f64, m0: f64, m1: f64) -> f64 {
    let d = ((2.0 * h0 + h1) * m0 - h0 * m1) / (h0 + h1);
    if d.signum() != m0.signum() {
        0.0
    } else if m0.signum() != m1.signum() && d.abs() > 3.0 * m0.abs() {
        3.0 * m0
    } else {
        d
    }
}

/// Where a 2-D tabulation was truncated.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GridMeta {
    pub x_range: (f64, f64),
    pub y_range: (f64, f64),
    pub tail_mass_tol: f64,
}

/// Values of `f(x, y)` on a tensor grid, stored `values[ix * ny + iy]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid2D {
    xs: Vec<f64>,
    ys: Vec<f64>,
    values: Vec<f64>,
    meta: GridMeta,
}

impl Grid2D {
    pub fn new(
        xs: Vec<f64>,
        ys: Vec<f64>,
        values: Vec<f64>,
        tail_mass_tol: f64,
    ) -> Result<Self, QuadratureError> {
        check_axis("x", &xs)?;
        check_axis("y", &ys)?;
        if values.len() != xs.len() * ys.len() || !values.iter().all(|v| v.is_finite()) {
            return Err(QuadratureError::Grid(
                "values must be finite and sized nx * ny".into(),
            ));
        }
        let meta = GridMeta {
            x_range: (xs[0], *xs.last().unwrap()),
            y_range: (ys[0], *ys.last().unwrap()),
            tail_mass_tol,
        };
        Ok(Self {
            xs,
            ys,
            values,
            meta,
        })
    }

    /// Tabulates `f` on `n + 1` uniformly spaced nodes per axis.
    pub fn tabulate<F: Fn(f64, f64) -> f64>(
        x_range: (f64, f64),
        y_range: (f64, f64),
        n: usize,
        tail_mass_tol: f64,
        f: F,
    ) -> Result<Self, QuadratureError> {
        let xs = uniform_nodes(x_range, n);
        let ys = uniform_nodes(y_range, n);
        let mut values = Vec::with_capacity(xs.len() * ys.len());
        for &x in &xs {
            for &y in &ys {
                values.push(f(x, y));
            }
        }
        Self::new(xs, ys, values, tail_mass_tol)
    }

    pub fn xs(&self) -> &[f64] {
        &self.xs
    }

    pub fn ys(&self) -> &[f64] {
        &self.ys
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn meta(&self) -> &GridMeta {
        &self.meta
    }

    pub fn value_at(&self, ix: usize, iy: usize) -> f64 {
        self.values[ix * self.ys.len() + iy]
    }

    /// Bilinear interpolation, clamped at zero (grids hold densities).
    pub fn interpolate(&self, x: f64, y: f64) -> Result<f64, QuadratureError> {
        let (x0, x1) = self.meta.x_range;
        let (y0, y1) = self.meta.y_range;
        if !(x >= x0 && x <= x1 && y >= y0 && y <= y1) {
            return Err(QuadratureError::Extrapolation { point: vec![x, y] });
        }
        let i = locate(&self.xs, x);
        let j = locate(&self.ys, y);
        let tx = (x - self.xs[i]) / (self.xs[i + 1] - self.xs[i]);
        let ty = (y - self.ys[j]) / (self.ys[j + 1] - self.ys[j]);
        let v = (1.0 - tx) * ((1.0 - ty) * self.value_at(i, j) + ty * self.value_at(i, j + 1))
            + tx * ((1.0 - ty) * self.value_at(i + 1, j) + ty * self.value_at(i + 1, j + 1));
        Ok(v.max(0.0))
    }

    /// `∫∫ g(f(x, y)) dx dy` by tensor-product composite Simpson, i.e. the
    /// exact integral of the piecewise-quadratic interpolant through every
    /// `stride`-th node. Axes must be uniform with a node count `1 + k·2·stride`.
    pub fn simpson<G: Fn(f64) -> f64>(&self, g: G, stride: usize) -> Result<f64, QuadratureError> {
        self.simpson_by(|_, v| g(v), stride)
    }

    /// As [`Grid2D::simpson`], with the integrand also seeing the first-axis
    /// index of each value.
    pub fn simpson_by<G: Fn(usize, f64) -> f64>(
        &self,
        g: G,
        stride: usize,
    ) -> Result<f64, QuadratureError> {
        let wx = simpson_weights(&self.xs, stride)?;
        let wy = simpson_weights(&self.ys, stride)?;
        let ny = self.ys.len();
        let mut total = 0.0;
        for (ix, &wxi) in wx.iter().enumerate() {
            if wxi == 0.0 {
                continue;
            }
            let row = &self.values[ix * ny..(ix + 1) * ny];
            let mut acc = 0.0;
            for (iy, &wyi) in wy.iter().enumerate() {
                if wyi != 0.0 {
                    acc += wyi * g(ix, row[iy]);
                }
            }
            total += wxi * acc;
        }
        Ok(total)
    }
}

/// 10-point Gauss–Legendre rule on `[-1, 1]` as `(node, weight)` pairs.
pub(crate) fn gauss_legendre_10() -> [(f64, f64); 10] {
    let mut rule = [(0.0, 0.0); 10];
    for i in 0..5 {
        rule[2 * i] = (-XGK[2 * i + 1], WG[i]);
        rule[2 * i + 1] = (XGK[2 * i + 1], WG[i]);
    }
    rule
}

pub(crate) fn uniform_nodes(range: (f64, f64), n: usize) -> Vec<f64> {
    let h = (range.1 - range.0) / n as f64;
    (0..=n)
        .map(|i| {
            if i == n {
                range.1
            } else {
                range.0 + h * i as f64
            }
        })
        .collect()
}

/// Composite Simpson weights on every `stride`-th node (zero elsewhere).
fn simpson_weights(nodes: &[f64], stride: usize) -> Result<Vec<f64>, QuadratureError> {
    let intervals = nodes.len() - 1;
    if stride == 0 || !intervals.is_multiple_of(2 * stride) {
        return Err(QuadratureError::Grid(format!(
            "{intervals} intervals cannot carry Simpson's rule at stride {stride}"
        )));
    }
    let h = (nodes[intervals] - nodes[0]) / intervals as f64 * stride as f64;
    let mut w = vec![0.0; nodes.len()];
    let m = intervals / stride;
    for k in 0..=m {
        let c = if k == 0 || k == m {
            1.0
        } else if k % 2 == 1 {
            4.0
        } else {
            2.0
        };
        w[k * stride] = c * h / 3.0;
    }
    Ok(w)
}

/// Neumaier-compensated running sum.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    comp: f64,
}

impl CompensatedSum {
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn total(&self) -> f64 {
        self.sum + self.comp
    }
}
