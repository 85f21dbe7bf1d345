//! Oracle verification runs: every closed form or pipeline value next to
//! its independent estimate, with the tolerance that decides pass/fail.

use std::fmt;
use std::str::FromStr;

use isac_rates::fading::{ChannelParams, FadingParams};
use isac_rates::oracle::{
    brute_force_f_s, mc_entropy, mc_entropy_joint_given_x, mc_rate_part_a, mc_rate_part_b,
    mc_rate_part_c, quad_part_b_ub, quad_rate_part_c, McConfig, McEstimate,
};
use isac_rates::quadrature::{integrate_semi_infinite, QuadratureConfig};
use isac_rates::rates::{
    density_f_s, entropy_h_s2, entropy_joint_given_x, rate_part_a, rate_part_b, rate_part_b_ub,
    rate_part_c, PartBUbParams, RbetaMode,
};
use isac_rates::specfun;

use crate::spec::{PowerAxis, SweepSpec, TABLE1_TOML};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scope {
    Specfun,
    Density,
    PartA,
    PartB,
    PartC,
    All,
}

impl Scope {
    pub const ALL: [Scope; 5] = [
        Scope::Specfun,
        Scope::Density,
        Scope::PartA,
        Scope::PartB,
        Scope::PartC,
    ];

    fn name(self) -> &'static str {
        match self {
            Scope::Specfun => "specfun",
            Scope::Density => "density",
            Scope::PartA => "part_a",
            Scope::PartB => "part_b",
            Scope::PartC => "part_c",
            Scope::All => "all",
        }
    }
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Scope {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Scope::ALL
            .into_iter()
            .chain([Scope::All])
            .find(|sc| sc.name() == s || sc.name().replace('_', "-") == s)
            .ok_or_else(|| {
                format!("unknown scope `{s}` (expected specfun, density, part_a, part_b, part_c or all)")
            })
    }
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub scope: Scope,
    /// Samples for the part_a / part_c / h(S2) Monte Carlo checks.
    pub samples: u64,
    /// Samples for the (much slower) three-dimensional part_b estimates.
    pub part_b_samples: u64,
    pub seed: u64,
    pub quadrature: QuadratureConfig,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            scope: Scope::All,
            samples: 10_000_000,
            part_b_samples: 200_000,
            seed: 42,
            quadrature: QuadratureConfig::default(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Check {
    pub scope: Scope,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed).count()
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("{tag} [{}] {}: {}\n", c.scope, c.name, c.detail));
        }
        out.push_str(&format!(
            "{} checks, {} failed\n",
            self.checks.len(),
            self.failed()
        ));
        out
    }

    fn push(&mut self, scope: Scope, name: impl Into<String>, passed: bool, detail: String) {
        self.checks.push(Check {
            scope,
            name: name.into(),
            passed,
            detail,
        });
    }

    fn push_err(&mut self, scope: Scope, name: impl Into<String>, err: impl fmt::Display) {
        self.push(scope, name, false, format!("error: {err}"));
    }

    /// `value` against a Monte Carlo estimate at 3 standard errors.
    fn push_mc(&mut self, scope: Scope, name: String, value: f64, est: &McEstimate) {
        let z = est.z_score(value);
        self.push(
            scope,
            name,
            z <= 3.0,
            format!(
                "value {value:.10} vs MC {:.10} ± {:.2e} (N = {}, z = {z:.2}, limit 3)",
                est.mean, est.std_error, est.sample_count
            ),
        );
    }

    fn push_rel(&mut self, scope: Scope, name: String, got: f64, want: f64, tol: f64, what: &str) {
        let err = rel_err(got, want);
        self.push(
            scope,
            name,
            err <= tol,
            format!("{got:.12e} vs {what} {want:.12e} (rel err {err:.2e}, limit {tol:.0e})"),
        );
    }
}

fn rel_err(got: f64, want: f64) -> f64 {
    if got == want {
        0.0
    } else {
        ((got - want) / want).abs()
    }
}

/// The bundled grid's 36 channels at power `p`.
pub fn table1_channels(p: f64) -> Vec<ChannelParams> {
    let mut spec = SweepSpec::from_toml_str(TABLE1_TOML).expect("bundled spec parses");
    spec.power = PowerAxis {
        values: Some(vec![p]),
        ..PowerAxis::default()
    };
    spec.resolve()
        .expect("bundled spec resolves")
        .iter()
        .map(|g| g.channel().expect("bundled points are valid"))
        .collect()
}

fn label(c: &ChannelParams) -> String {
    let f = c.fading();
    format!(
        "rho2={} ss1={} sn2={} ss2={} P={}",
        f.rho_sq(),
        f.sigma_s1_sq(),
        c.sigma_n2_sq(),
        f.sigma_s2_sq(),
        c.power()
    )
}

/// Two configurations per correlation level, at opposite corners of the grid.
pub fn representative_channels(p: f64) -> Vec<ChannelParams> {
    let mut out = Vec::new();
    for rho in [0.01, 0.5, 0.9] {
        for (ss1, sn2, k) in [(0.1, 0.1, 1.0), (1.0, 0.5, 10.0)] {
            out.push(
                ChannelParams::from_values(1.0, sn2, ss1, ss1 / (k * sn2), rho, p)
                    .expect("valid parameters"),
            );
        }
    }
    out
}

type Special = fn(f64) -> Result<f64, specfun::SpecialFunctionError>;

// 40-digit references (mpmath); elliptic integrals take the modulus
const SPECFUN_ANCHORS: [(&str, Special, f64, f64); 20] = [
    ("I0", specfun::bessel_i0, 0.5, 1.0634833707413236),
    ("I0", specfun::bessel_i0, 3.0, 4.8807925858650245),
    ("I0", specfun::bessel_i0, 15.0, 339649.3732979139),
    ("I0e", specfun::bessel_i0e, 25.0, 0.0801967735474367),
    ("I0e", specfun::bessel_i0e, 400.0, 0.01995335628193999),
    ("K", specfun::elliptic_k, 0.3, 1.6080486199305128),
    ("K", specfun::elliptic_k, 0.9, 2.2805491384227703),
    ("K", specfun::elliptic_k, 0.99, 3.356600523361192),
    ("E", specfun::elliptic_e, 0.3, 1.5348334649232491),
    ("E", specfun::elliptic_e, 0.9, 1.1716970527816142),
    ("E", specfun::elliptic_e, 0.99, 1.028475809028804),
    ("erfi", specfun::erfi, 0.25, 0.288083619794972),
    ("erfi", specfun::erfi, 2.0, 18.564802414575553),
    ("erfi", specfun::erfi, 7.5, 2.038818719178621e23),
    ("2F2", specfun::hyp2f2_1_1_3h_2, 0.5, 1.1914986370255154),
    ("2F2", specfun::hyp2f2_1_1_3h_2, 10.0, 654.5765063410786),
    ("2F2", specfun::hyp2f2_1_1_3h_2, 80.0, 6.906000959449668e31),
    ("E1", specfun::exp_integral_e1, 0.01, 4.037929576538114),
    ("E1", specfun::exp_integral_e1, 1.0, 0.21938393439552029),
    ("E1", specfun::exp_integral_e1, 20.0, 9.835525290649882e-11),
];

fn verify_specfun(r: &mut Report) {
    let sc = Scope::Specfun;
    for (name, f, x, want) in SPECFUN_ANCHORS {
        match f(x) {
            Ok(v) => r.push_rel(sc, format!("{name}({x})"), v, want, 1e-12, "reference"),
            Err(e) => r.push_err(sc, format!("{name}({x})"), e),
        }
    }
    r.push_rel(
        sc,
        "euler_gamma".into(),
        specfun::euler_gamma(),
        0.5772156649015329,
        1e-16,
        "reference",
    );
}

fn verify_density(r: &mut Report, cfg: &QuadratureConfig) {
    let sc = Scope::Density;
    for p in [0.1, 1.0, 10.0] {
        for c in table1_channels(p) {
            let name = label(&c);
            match integrate_semi_infinite(|s| density_f_s(&c, s), cfg) {
                Ok(e) => {
                    let err = (e.value - 1.0).abs();
                    r.push(
                        sc,
                        format!("normalization {name}"),
                        err <= 1e-6,
                        format!("∫f_S = {:.15} (|err| {err:.2e}, limit 1e-6)", e.value),
                    );
                }
                Err(e) => r.push_err(sc, format!("normalization {name}"), e),
            }
            for s in [0.1, 1.0, 10.0] {
                let check = format!("f_S({s}) vs ratio integral {name}");
                match brute_force_f_s(&c, s, cfg) {
                    Ok(b) => {
                        let a = density_f_s(&c, s);
                        if b == 0.0 && a < 1e-300 {
                            r.push(sc, check, true, format!("both underflow ({a:e})"));
                        } else {
                            r.push_rel(sc, check, a, b, 1e-5, "brute force");
                        }
                    }
                    Err(e) => r.push_err(sc, check, e),
                }
            }
        }
    }
}

fn verify_part_a(r: &mut Report, opts: &VerifyOptions) {
    let sc = Scope::PartA;
    let mc = McConfig::with_samples(opts.samples, opts.seed);
    for p in [0.1, 1.0, 10.0] {
        for c in representative_channels(p) {
            let name = label(&c);
            match (rate_part_a(&c, &opts.quadrature), mc_rate_part_a(&c, &mc)) {
                (Ok(a), Ok(m)) => r.push_mc(sc, name, a.value, &m),
                (Err(e), _) => r.push_err(sc, name, e),
                (_, Err(e)) => r.push_err(sc, name, e),
            }
        }
    }
}

fn verify_part_b(r: &mut Report, opts: &VerifyOptions) {
    let sc = Scope::PartB;
    let cfg = &opts.quadrature;
    for p in [0.1, 1.0, 10.0] {
        for c in table1_channels(p) {
            let name = format!("bound closed form vs integral {}", label(&c));
            let z = match PartBUbParams::new(&c) {
                Ok(q) => q.z,
                Err(e) => {
                    r.push_err(sc, name, e);
                    continue;
                }
            };
            if z > cfg.closed_form_z_max {
                continue;
            }
            match (rate_part_b_ub(&c, cfg), quad_part_b_ub(&c, cfg)) {
                (Ok(a), Ok(b)) => r.push_rel(sc, name, a, b, 1e-7, "direct integral"),
                (Err(e), _) | (_, Err(e)) => r.push_err(sc, name, e),
            }
        }
    }

    let c = ChannelParams::from_values(1.0, 0.1, 0.5, 0.5, 0.5, 1.0).expect("valid parameters");
    let mc = McConfig::with_samples(opts.part_b_samples, opts.seed);
    let name = format!("h(S1 x + N1, S2) at x=1 {}", label(&c));
    match (
        entropy_joint_given_x(&c, 1.0, cfg),
        mc_entropy_joint_given_x(&c, 1.0, cfg, &mc),
    ) {
        (Ok(h), Ok(m)) => r.push_mc(sc, name, h.value, &m),
        (Err(e), _) => r.push_err(sc, name, e),
        (_, Err(e)) => r.push_err(sc, name, e),
    }

    let name = format!("pipeline vs 3-D MC {}", label(&c));
    let b = match rate_part_b(&c, cfg) {
        Ok(b) => b.value,
        Err(e) => return r.push_err(sc, name, e),
    };
    match mc_rate_part_b(&c, cfg, &mc) {
        Ok(m) => r.push_mc(sc, name, b, &m),
        Err(e) => r.push_err(sc, name, e),
    }
    match rate_part_b_ub(&c, cfg) {
        Ok(ub) => r.push(
            sc,
            format!("part_b <= part_b_ub {}", label(&c)),
            b <= ub,
            format!("{b:.10} <= {ub:.10}"),
        ),
        Err(e) => r.push_err(sc, "part_b_ub", e),
    }
}

fn verify_part_c(r: &mut Report, opts: &VerifyOptions) {
    let sc = Scope::PartC;
    let mc = McConfig::with_samples(opts.samples, opts.seed);
    let base = ChannelParams::from_values(1.0, 0.1, 1.0, 10.0, 0.5, 1.0).expect("valid parameters");
    for p in [0.1, 1.0, 10.0, 100.0] {
        let c = base.with_power(p).expect("positive power");
        let mode = RbetaMode::PaperLiteral;
        let closed = match rate_part_c(&c, mode) {
            Ok(v) => v,
            Err(e) => {
                r.push_err(sc, format!("R_beta P={p}"), e);
                continue;
            }
        };
        match mc_rate_part_c(&c, &mc, mode) {
            Ok(m) => r.push_mc(sc, format!("R_beta vs MC P={p}"), closed, &m),
            Err(e) => r.push_err(sc, format!("R_beta vs MC P={p}"), e),
        }
        match quad_rate_part_c(&c, mode, &opts.quadrature) {
            Ok(q) => r.push_rel(
                sc,
                format!("R_beta vs shifted form P={p}"),
                closed,
                q,
                1e-8,
                "quadrature",
            ),
            Err(e) => r.push_err(sc, format!("R_beta vs shifted form P={p}"), e),
        }
    }
    for om in [0.2, 1.0, 4.0, 10.0] {
        let f = FadingParams::new(1.0, om, 0.5).expect("valid parameters");
        let name = format!("h(S2) vs MC ss2={om}");
        let est = mc_entropy(
            |rng| isac_rates::fading::sample_pair(&f, rng).1,
            |&s| isac_rates::fading::marginal_pdf_s2(&f, s),
            &mc,
        );
        match est {
            Ok(m) => r.push_mc(sc, name, entropy_h_s2(&f), &m),
            Err(e) => r.push_err(sc, name, e),
        }
    }
}

/// Runs the checks selected by `opts.scope`.
pub fn cmd_verify(opts: &VerifyOptions) -> Report {
    let mut r = Report::default();
    let scopes: Vec<Scope> = match opts.scope {
        Scope::All => Scope::ALL.to_vec(),
        s => vec![s],
    };
    for s in scopes {
        match s {
            Scope::Specfun => verify_specfun(&mut r),
            Scope::Density => verify_density(&mut r, &opts.quadrature),
            Scope::PartA => verify_part_a(&mut r, opts),
            Scope::PartB => verify_part_b(&mut r, opts),
            Scope::PartC => verify_part_c(&mut r, opts),
            Scope::All => unreachable!("expanded above"),
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scopes_parse() {
        assert_eq!("part_b".parse::<Scope>().unwrap(), Scope::PartB);
        assert_eq!("part-c".parse::<Scope>().unwrap(), Scope::PartC);
        assert_eq!("all".parse::<Scope>().unwrap(), Scope::All);
        assert!("parts".parse::<Scope>().is_err());
    }

    #[test]
    fn specfun_scope_passes() {
        let r = cmd_verify(&VerifyOptions {
            scope: Scope::Specfun,
            ..VerifyOptions::default()
        });
        assert!(r.all_passed(), "{}", r.render());
        assert_eq!(r.checks.len(), 21);
    }

    #[test]
    fn bundled_grid_helpers() {
        assert_eq!(table1_channels(1.0).len(), 36);
        assert_eq!(representative_channels(1.0).len(), 6);
    }
}
