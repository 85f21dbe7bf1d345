//! Real-argument special functions used by the fading model and the rate
//! closed forms.
//!
//! Every routine is a plain `f64 -> f64` map with no global state. Switch
//! points between series and asymptotic branches were placed where the
//! error against a 40-digit reference crosses over (see
//! `tests/specfun`).

use std::f64::consts::{FRAC_2_SQRT_PI, PI};
use thiserror::Error;

/// Euler–Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpecialFunctionError {
    #[error("{function}: argument {arg} outside the domain")]
    Domain { function: &'static str, arg: f64 },
    #[error("{function}: result overflows f64 at argument {arg}")]
    Overflow { function: &'static str, arg: f64 },
    #[error("{function}: series did not converge at {arg} after {terms} terms (last term {last_term:e})")]
    NoConvergence {
        function: &'static str,
        arg: f64,
        terms: usize,
        last_term: f64,
    },
}

type Result<T> = std::result::Result<T, SpecialFunctionError>;

pub fn euler_gamma() -> f64 {
    EULER_GAMMA
}

// I0: power series below this point, Hankel asymptotic expansion above.
const I0_ASYMPTOTIC_FROM: f64 = 20.0;

/// Modified Bessel function of the first kind, order zero.
pub fn bessel_i0(x: f64) -> Result<f64> {
    check_nonneg("bessel_i0", x)?;
    if x < I0_ASYMPTOTIC_FROM {
        return Ok(i0_series(x));
    }
    let v = x.exp() * i0e_asymptotic(x);
    if v.is_finite() {
        Ok(v)
    } else {
        Err(SpecialFunctionError::Overflow {
            function: "bessel_i0",
            arg: x,
        })
    }
}

/// Exponentially scaled `e^{-x} I0(x)`, finite for every `x >= 0`.
pub fn bessel_i0e(x: f64) -> Result<f64> {
    check_nonneg("bessel_i0e", x)?;
    Ok(i0e_unchecked(x))
}

/// `e^{-x} I0(x)` without argument validation. `x` must be finite and
/// non-negative; used in the density hot loops.
#[inline]
pub(crate) fn i0e_unchecked(x: f64) -> f64 {
    if x < I0_ASYMPTOTIC_FROM {
        (-x).exp() * i0_series(x)
    } else {
        i0e_asymptotic(x)
    }
}

fn i0_series(x: f64) -> f64 {
    let q = 0.25 * x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut k = 1.0;
    loop {
        term *= q / (k * k);
        sum += term;
        if term <= sum * 1e-17 {
            return sum;
        }
        k += 1.0;
    }
}

fn i0e_asymptotic(x: f64) -> f64 {
    // sum_k ((2k-1)!!)^2 / (k! (8x)^k), truncated at the smallest term
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut k = 1.0;
    loop {
        let next = term * (2.0 * k - 1.0) * (2.0 * k - 1.0) / (8.0 * k * x);
        if next >= term || next < sum * 1e-17 {
            break;
        }
        sum += next;
        term = next;
        k += 1.0;
    }
    sum / (2.0 * PI * x).sqrt()
}

/// Arithmetic–geometric mean iteration shared by K and E. Returns the
/// limit `a_N` and `sum_{n>=0} 2^{n-1} c_n^2` with `c_0 = z`.
fn agm(z: f64) -> (f64, f64) {
    let mut a = 1.0;
    let mut b = (1.0 - z * z).sqrt();
    let mut c = z;
    let mut pow = 0.5;
    let mut sum = pow * c * c;
    for _ in 0..64 {
        if (a - b).abs() <= f64::EPSILON * a {
            break;
        }
        c = 0.5 * (a - b);
        (a, b) = (0.5 * (a + b), (a * b).sqrt());
        pow *= 2.0;
        sum += pow * c * c;
    }
    (a, sum)
}

/// Complete elliptic integral of the first kind, `K(z) = ∫_0^{π/2} (1 - z² sin² t)^{-1/2} dt`,
/// modulus `z` in `[0, 1)`.
pub fn elliptic_k(z: f64) -> Result<f64> {
    if !(z.is_finite() && (0.0..1.0).contains(&z)) {
        return Err(SpecialFunctionError::Domain {
            function: "elliptic_k",
            arg: z,
        });
    }
    let (a, _) = agm(z);
    Ok(PI / (2.0 * a))
}

/// Complete elliptic integral of the second kind, modulus `z` in `[0, 1]`.
pub fn elliptic_e(z: f64) -> Result<f64> {
    if !(z.is_finite() && (0.0..=1.0).contains(&z)) {
        return Err(SpecialFunctionError::Domain {
            function: "elliptic_e",
            arg: z,
        });
    }
    if z == 1.0 {
        return Ok(1.0);
    }
    let (a, sum) = agm(z);
    Ok(PI / (2.0 * a) * (1.0 - sum))
}

// erfi: Maclaurin series up to here, asymptotic e^{y^2}/(y√π) expansion beyond.
const ERFI_ASYMPTOTIC_FROM: f64 = 6.0;

/// Imaginary error function `erfi(y) = -i erf(iy)`.
pub fn erfi(y: f64) -> Result<f64> {
    if !y.is_finite() {
        return Err(SpecialFunctionError::Domain {
            function: "erfi",
            arg: y,
        });
    }
    let ay = y.abs();
    let v = if ay < ERFI_ASYMPTOTIC_FROM {
        erfi_series(ay)
    } else {
        let v = erfi_asymptotic(ay);
        if !v.is_finite() {
            return Err(SpecialFunctionError::Overflow {
                function: "erfi",
                arg: y,
            });
        }
        v
    };
    Ok(v.copysign(y))
}

fn erfi_series(y: f64) -> f64 {
    let y2 = y * y;
    let mut power = y;
    let mut sum = y;
    let mut k = 1.0;
    loop {
        power *= y2 / k;
        let term = power / (2.0 * k + 1.0);
        sum += term;
        if term <= sum * 1e-17 {
            return FRAC_2_SQRT_PI * sum;
        }
        k += 1.0;
    }
}

fn erfi_asymptotic(y: f64) -> f64 {
    let inv = 1.0 / (2.0 * y * y);
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut k = 1.0;
    loop {
        let next = term * (2.0 * k - 1.0) * inv;
        if next >= term || next < sum * 1e-17 {
            break;
        }
        sum += next;
        term = next;
        k += 1.0;
    }
    // split e^{y^2} so large-but-representable results are not lost to an
    // intermediate overflow
    let half = (0.5 * y * y).exp();
    half * (half * sum / (y * PI.sqrt()))
}

const HYP2F2_TERM_BUDGET: usize = 100_000;

/// `2F2(1, 1; 3/2, 2; z)` for `z >= 0` by direct summation.
pub fn hyp2f2_1_1_3h_2(z: f64) -> Result<f64> {
    check_nonneg("hyp2f2_1_1_3h_2", z)?;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 0..HYP2F2_TERM_BUDGET {
        let kf = k as f64;
        term *= z * (kf + 1.0) / ((kf + 1.5) * (kf + 2.0));
        sum += term;
        if !sum.is_finite() {
            return Err(SpecialFunctionError::Overflow {
                function: "hyp2f2_1_1_3h_2",
                arg: z,
            });
        }
        // past the peak the ratio is below one, so the tail is bounded by a
        // geometric series
        if kf > z && term <= sum * 1e-16 {
            return Ok(sum);
        }
    }
    Err(SpecialFunctionError::NoConvergence {
        function: "hyp2f2_1_1_3h_2",
        arg: z,
        terms: HYP2F2_TERM_BUDGET,
        last_term: term,
    })
}

// E1: alternating series below this point, continued fraction above.
const E1_CF_FROM: f64 = 1.0;

/// Exponential integral `E1(x) = ∫_x^∞ e^{-t}/t dt = -Ei(-x)`, `x > 0`.
pub fn exp_integral_e1(x: f64) -> Result<f64> {
    check_positive("exp_integral_e1", x)?;
    if x < E1_CF_FROM {
        Ok(e1_series(x))
    } else {
        Ok(e1_scaled_cf(x) * (-x).exp())
    }
}

/// `e^{x} E1(x)`, `x > 0`. Tends to `1/x` as `x` grows.
pub fn exp_integral_e1_scaled(x: f64) -> Result<f64> {
    check_positive("exp_integral_e1_scaled", x)?;
    if x < E1_CF_FROM {
        Ok(x.exp() * e1_series(x))
    } else {
        Ok(e1_scaled_cf(x))
    }
}

fn e1_series(x: f64) -> f64 {
    // E1(x) = -γ - ln x - sum_{k>=1} (-x)^k / (k k!)
    let mut fact_term = 1.0;
    let mut sum = 0.0;
    for k in 1..200 {
        let kf = k as f64;
        fact_term *= -x / kf;
        let term = fact_term / kf;
        sum += term;
        if term.abs() < 1e-18 * sum.abs().max(1e-300) {
            break;
        }
    }
    -EULER_GAMMA - x.ln() - sum
}

fn e1_scaled_cf(x: f64) -> f64 {
    // modified Lentz on the even continued fraction 1/(x+1- 1/(x+3- 4/(x+5- ...)))
    const TINY: f64 = 1e-300;
    let mut b = x + 1.0;
    let mut c = 1.0 / TINY;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..10_000 {
        let an = -((i * i) as f64);
        b += 2.0;
        d = 1.0 / (an * d + b);
        c = b + an / c;
        let del = c * d;
        h *= del;
        if (del - 1.0).abs() < 1e-16 {
            break;
        }
    }
    h
}

fn check_nonneg(function: &'static str, x: f64) -> Result<()> {
    if x.is_finite() && x >= 0.0 {
        Ok(())
    } else {
        Err(SpecialFunctionError::Domain { function, arg: x })
    }
}

fn check_positive(function: &'static str, x: f64) -> Result<()> {
    if x.is_finite() && x > 0.0 {
        Ok(())
    } else {
        Err(SpecialFunctionError::Domain { function, arg: x })
    }
}
