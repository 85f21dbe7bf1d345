//! Human-readable and JSON rendering of a single-point evaluation.

use std::fmt::Write;

use isac_rates::fading::ChannelParams;
use isac_rates::rates::{PartialRates, RateBreakdown, RbetaMode};
use serde::Serialize;

/// Decimal places used for every rate in the text table.
pub const DIGITS: usize = 10;

fn line(out: &mut String, name: &str, v: Option<f64>, note: &str) {
    let value = match v {
        Some(x) => format!("{x:>width$.DIGITS$}", width = DIGITS + 6),
        None => format!("{:>width$}", "-", width = DIGITS + 6),
    };
    let _ = writeln!(out, "  {name:<14}{value}{note}");
}

fn header(out: &mut String, c: &ChannelParams, mode: RbetaMode) {
    let f = c.fading();
    let _ = writeln!(
        out,
        "channel: rho2={} sn1={} sn2={} ss1={} ss2={} P={}  (R_beta mode {mode})",
        f.rho_sq(),
        c.sigma_n1_sq(),
        c.sigma_n2_sq(),
        f.sigma_s1_sq(),
        f.sigma_s2_sq(),
        c.power()
    );
    let _ = writeln!(out, "rates in bits per channel use, {DIGITS} decimals");
}

pub fn render_breakdown(c: &ChannelParams, mode: RbetaMode, r: &RateBreakdown) -> String {
    let mut out = String::new();
    header(&mut out, c, mode);
    let skipped = " (skipped)";
    let ub_note = if r.part_b_ub_closed_form {
        " (closed form)"
    } else {
        " (direct integral)"
    };
    line(&mut out, "part_a", Some(r.part_a), "");
    line(
        &mut out,
        "part_b",
        r.part_b,
        if r.part_b.is_none() { skipped } else { "" },
    );
    line(&mut out, "part_b_ub", Some(r.part_b_ub), ub_note);
    line(&mut out, "r_beta", Some(r.r_beta), "");
    line(&mut out, "r_alpha", r.r_alpha, "");
    line(&mut out, "r_alpha_ub", Some(r.r_alpha_ub), "");
    line(&mut out, "achievable", r.achievable, "");
    line(&mut out, "achievable_ub", Some(r.achievable_ub), "");
    let _ = writeln!(out, "  {:<14}{:>16.3e}", "err_est", r.err_est);
    if !r.degraded {
        let _ = writeln!(out, "warning: channel is not stochastically degraded");
    }
    for v in r.invariant_violations() {
        let _ = writeln!(out, "warning: invariant {v} does not hold");
    }
    out
}

pub fn render_partial(c: &ChannelParams, mode: RbetaMode, p: &PartialRates) -> String {
    let mut out = String::new();
    header(&mut out, c, mode);
    let _ = writeln!(out, "terms computed before the failure:");
    line(&mut out, "part_a", p.part_a, "");
    line(&mut out, "part_b", p.part_b, "");
    line(&mut out, "part_b_ub", p.part_b_ub, "");
    line(&mut out, "r_beta", p.part_c, "");
    out
}

#[derive(Serialize)]
pub struct JsonReport<'a> {
    pub channel: &'a ChannelParams,
    pub mode: RbetaMode,
    pub rates: &'a RateBreakdown,
}
