//! Sweep specifications: axis lists, rule-based `ss2` entries and the
//! power axis, read from TOML.

use std::fmt;
use std::path::Path;

use evalexpr::{
    build_operator_tree, ContextWithMutableVariables, DefaultNumericTypes, HashMapContext, Node,
    Value,
};
use isac_rates::fading::{is_stochastically_degraded, ChannelParams};
use isac_rates::quadrature::QuadratureConfig;
use isac_rates::rates::RbetaMode;
use serde::{Deserialize, Serialize};

use crate::CliError;

/// The bundled parameter grid, selectable as `--spec table1`.
pub const TABLE1_TOML: &str = include_str!("../specs/table1.toml");

/// Variables visible inside `ss2` rule expressions.
pub const RULE_VARIABLES: [&str; 4] = ["ss1", "sn1", "sn2", "rho2"];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSpec {
    pub rho2: Vec<f64>,
    #[serde(default = "unit_axis")]
    pub sn1: Vec<f64>,
    pub sn2: Vec<f64>,
    pub ss1: Vec<f64>,
    pub ss2: Vec<Ss2Rule>,
    #[serde(default)]
    pub power: PowerAxis,
    #[serde(default)]
    pub mode: RbetaMode,
    #[serde(default = "default_seed")]
    pub seed: u64,
    #[serde(default)]
    pub with_part_b: bool,
    #[serde(default)]
    pub allow_nondegraded: bool,
    #[serde(default)]
    pub quadrature: QuadratureConfig,
}

fn unit_axis() -> Vec<f64> {
    vec![1.0]
}

fn default_seed() -> u64 {
    42
}

/// A fixed `ss2` value or an arithmetic expression over [`RULE_VARIABLES`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Ss2Rule {
    Value(f64),
    Expr(String),
}

impl fmt::Display for Ss2Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ss2Rule::Value(v) => write!(f, "{v:?}"),
            Ss2Rule::Expr(e) => f.write_str(e),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Spacing {
    #[default]
    Log,
    Linear,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct PowerAxis {
    pub min: f64,
    pub max: f64,
    pub points: usize,
    pub spacing: Spacing,
    /// Explicit values; when present, `min`/`max`/`points` are ignored.
    pub values: Option<Vec<f64>>,
}

impl Default for PowerAxis {
    fn default() -> Self {
        Self {
            min: 0.01,
            max: 100.0,
            points: 20,
            spacing: Spacing::Log,
            values: None,
        }
    }
}

impl PowerAxis {
    pub fn resolve(&self) -> Result<Vec<f64>, CliError> {
        let values = match &self.values {
            Some(v) => v.clone(),
            None => {
                let n = self.points;
                if n == 0 {
                    return Err(CliError::Usage("power axis has no points".into()));
                }
                if !(self.min > 0.0 && self.max >= self.min && self.max.is_finite()) {
                    return Err(CliError::Usage(format!(
                        "power axis needs 0 < min <= max, got [{}, {}]",
                        self.min, self.max
                    )));
                }
                (0..n)
                    .map(|i| {
                        if i == 0 {
                            return self.min;
                        }
                        if i == n - 1 {
                            return self.max;
                        }
                        let t = i as f64 / (n - 1) as f64;
                        match self.spacing {
                            Spacing::Log => {
                                // base-10 exponents keep whole decades exact
                                let (lo, hi) = (self.min.log10(), self.max.log10());
                                10f64.powf(lo + t * (hi - lo))
                            }
                            Spacing::Linear => self.min + t * (self.max - self.min),
                        }
                    })
                    .collect()
            }
        };
        if values.is_empty() {
            return Err(CliError::Usage("power axis has no points".into()));
        }
        if let Some(p) = values.iter().find(|p| !(**p > 0.0 && p.is_finite())) {
            return Err(CliError::Usage(format!("power {p} must be positive")));
        }
        Ok(values)
    }
}

/// One resolved sweep point.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GridPoint {
    pub rho2: f64,
    pub sn1: f64,
    pub sn2: f64,
    pub ss1: f64,
    pub ss2: f64,
    pub ss2_rule: String,
    pub power: f64,
}

impl GridPoint {
    pub fn channel(&self) -> Result<ChannelParams, CliError> {
        ChannelParams::from_values(
            self.sn1, self.sn2, self.ss1, self.ss2, self.rho2, self.power,
        )
        .map_err(|e| CliError::Domain(format!("{e} at {}", self.label())))
    }

    pub fn label(&self) -> String {
        format!(
            "rho2={:?} sn1={:?} sn2={:?} ss1={:?} ss2={:?} P={:?}",
            self.rho2, self.sn1, self.sn2, self.ss1, self.ss2, self.power
        )
    }
}

/// Compiled `ss2` rule.
struct Rule {
    source: Ss2Rule,
    tree: Option<Node<DefaultNumericTypes>>,
}

impl Rule {
    fn compile(source: &Ss2Rule) -> Result<Self, CliError> {
        let tree = match source {
            Ss2Rule::Value(_) => None,
            Ss2Rule::Expr(e) => {
                let tree = build_operator_tree::<DefaultNumericTypes>(e)
                    .map_err(|err| CliError::Usage(format!("ss2 rule {e:?}: {err}")))?;
                if let Some(v) = tree
                    .iter_read_variable_identifiers()
                    .find(|v| !RULE_VARIABLES.contains(v))
                {
                    return Err(CliError::Usage(format!(
                        "ss2 rule {e:?} uses unknown variable {v:?}; allowed: {}",
                        RULE_VARIABLES.join(", ")
                    )));
                }
                Some(tree)
            }
        };
        Ok(Self {
            source: source.clone(),
            tree,
        })
    }

    fn eval(&self, rho2: f64, sn1: f64, sn2: f64, ss1: f64) -> Result<f64, CliError> {
        let v = match (&self.source, &self.tree) {
            (Ss2Rule::Value(v), _) => *v,
            (Ss2Rule::Expr(e), Some(tree)) => {
                let mut ctx = HashMapContext::<DefaultNumericTypes>::new();
                for (name, value) in [("ss1", ss1), ("sn1", sn1), ("sn2", sn2), ("rho2", rho2)] {
                    ctx.set_value(name.into(), Value::Float(value))
                        .expect("fresh context accepts floats");
                }
                tree.eval_number_with_context(&ctx)
                    .map_err(|err| CliError::Usage(format!("ss2 rule {e:?}: {err}")))?
            }
            (Ss2Rule::Expr(_), None) => unreachable!("expressions are compiled"),
        };
        if !(v > 0.0 && v.is_finite()) {
            return Err(CliError::Domain(format!(
                "ss2 rule {} gives {v} at ss1={ss1}, sn2={sn2}",
                self.source
            )));
        }
        Ok(v)
    }
}

impl SweepSpec {
    pub fn from_toml_str(text: &str) -> Result<Self, CliError> {
        toml::from_str(text).map_err(|e| CliError::Usage(format!("invalid sweep spec: {e}")))
    }

    /// Reads a spec from a TOML file, a sweep manifest (`.json`), or the
    /// bundled `table1` grid.
    pub fn load(name: &str) -> Result<Self, CliError> {
        let path = Path::new(name);
        if name == "table1" && !path.exists() {
            return Self::from_toml_str(TABLE1_TOML);
        }
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::io(format!("reading spec {name}"), e))?;
        if path.extension().is_some_and(|e| e == "json") {
            let manifest: crate::sweep::Manifest = serde_json::from_str(&text)
                .map_err(|e| CliError::Usage(format!("invalid manifest {name}: {e}")))?;
            return Ok(manifest.spec);
        }
        Self::from_toml_str(&text)
    }

    /// Expands the grid in the fixed order rho2, sn1, sn2, ss1, ss2 rule,
    /// power, checking every point against the model constraints.
    pub fn resolve(&self) -> Result<Vec<GridPoint>, CliError> {
        for (name, axis) in [
            ("rho2", &self.rho2),
            ("sn1", &self.sn1),
            ("sn2", &self.sn2),
            ("ss1", &self.ss1),
        ] {
            if axis.is_empty() {
                return Err(CliError::Usage(format!("axis {name} is empty")));
            }
        }
        if self.ss2.is_empty() {
            return Err(CliError::Usage("axis ss2 is empty".into()));
        }
        self.quadrature
            .validate()
            .map_err(|e| CliError::Usage(format!("quadrature overrides: {e}")))?;
        let powers = self.power.resolve()?;
        let rules = self
            .ss2
            .iter()
            .map(Rule::compile)
            .collect::<Result<Vec<_>, _>>()?;

        let mut out = Vec::new();
        for &rho2 in &self.rho2 {
            for &sn1 in &self.sn1 {
                for &sn2 in &self.sn2 {
                    for &ss1 in &self.ss1 {
                        for rule in &rules {
                            let ss2 = rule.eval(rho2, sn1, sn2, ss1)?;
                            for &power in &powers {
                                let point = GridPoint {
                                    rho2,
                                    sn1,
                                    sn2,
                                    ss1,
                                    ss2,
                                    ss2_rule: rule.source.to_string(),
                                    power,
                                };
                                let c = point.channel()?;
                                if !self.allow_nondegraded && !is_stochastically_degraded(&c) {
                                    return Err(CliError::Domain(format!(
                                        "channel is not stochastically degraded at {}: \
                                         sn2/sn1 = {} > ss1/ss2 = {} (pass --allow-nondegraded to evaluate anyway)",
                                        point.label(),
                                        sn2 / sn1,
                                        ss1 / ss2
                                    )));
                                }
                                out.push(point);
                            }
                        }
                    }
                }
            }
        }
        Ok(out)
    }
}
