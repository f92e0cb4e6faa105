//! Run configuration: a flat TOML file merged with command-line overrides
//! and validated into a [`SweepSpec`].

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::Deserialize;
use steadycoh::generator::Approximation;
use steadycoh::{Case, Channels, DegeneratePolicy, SystemParams};

use crate::CliError;

/// Quantity varied along a sweep axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AxisName {
    /// Cold-bath temperature `T_a`.
    Ta,
    /// `Δ_T = T_b − T_a`.
    DeltaT,
    /// Detuning `Δ = ω₁ − ω₂`.
    Delta,
}

impl fmt::Display for AxisName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AxisName::Ta => "Ta",
            AxisName::DeltaT => "DeltaT",
            AxisName::Delta => "Delta",
        })
    }
}

impl FromStr for AxisName {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "Ta" | "ta" => Ok(AxisName::Ta),
            "DeltaT" | "deltat" | "delta_t" | "delta-t" => Ok(AxisName::DeltaT),
            "Delta" | "delta" => Ok(AxisName::Delta),
            other => Err(CliError::Config(format!("unknown axis {other:?} (expected Ta, DeltaT or Delta)"))),
        }
    }
}

/// A uniform grid `min, …, max` with `steps` points, written `Name:min:max:steps`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Axis {
    pub name: AxisName,
    pub min: f64,
    pub max: f64,
    pub steps: usize,
}

impl Axis {
    pub fn new(name: AxisName, min: f64, max: f64, steps: usize) -> Result<Self, CliError> {
        if steps < 2 {
            return Err(CliError::Config(format!("axis {name} needs steps >= 2, got {steps}")));
        }
        if !min.is_finite() || !max.is_finite() || min >= max {
            return Err(CliError::Config(format!("axis {name} needs finite min < max, got {min}..{max}")));
        }
        Ok(Self { name, min, max, steps })
    }

    /// The `k`-th grid value; the last one is exactly `max`.
    pub fn value(&self, k: usize) -> f64 {
        self.min + (self.max - self.min) * k as f64 / (self.steps - 1) as f64
    }

    pub fn values(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.steps).map(|k| self.value(k))
    }
}

impl FromStr for Axis {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || CliError::Config(format!("bad axis {s:?} (expected Name:min:max:steps, e.g. DeltaT:0:100:200)"));
        let parts: Vec<&str> = s.split(':').map(str::trim).collect();
        let [name, min, max, steps] = parts.as_slice() else {
            return Err(bad());
        };
        let min = min.parse().map_err(|_| bad())?;
        let max = max.parse().map_err(|_| bad())?;
        let steps = steps.parse().map_err(|_| bad())?;
        Axis::new(name.parse()?, min, max, steps)
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}:{}", self.name, self.min, self.max, self.steps)
    }
}

/// Column groups that can be requested; unrequested ones are left blank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Output {
    CoherenceAbs,
    Rho32Re,
    Rho32Im,
    Populations,
    Flux,
}

impl Output {
    pub const ALL: [Output; 5] =
        [Output::CoherenceAbs, Output::Rho32Re, Output::Rho32Im, Output::Populations, Output::Flux];
}

impl FromStr for Output {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "coherence_abs" => Ok(Output::CoherenceAbs),
            "rho32_re" => Ok(Output::Rho32Re),
            "rho32_im" => Ok(Output::Rho32Im),
            "populations" => Ok(Output::Populations),
            "flux" | "flux12" => Ok(Output::Flux),
            other => Err(CliError::Config(format!(
                "unknown output {other:?} (expected coherence_abs, rho32_re, rho32_im, populations or flux)"
            ))),
        }
    }
}

/// The second temperature, given directly or as an offset from `T_a`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum HotBath {
    Tb(f64),
    DeltaT(f64),
}

/// Every setting a run can take, all optional, as read from a config file
/// or the command line. Later sources override earlier ones field by field.
#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawConfig {
    pub case: Option<String>,
    /// Explicit switches `c1a,c1b,c2a,c2b`, instead of `case`.
    pub channels: Option<String>,
    pub secular: Option<bool>,
    pub omega: Option<f64>,
    pub xi: Option<f64>,
    pub delta: Option<f64>,
    pub ta: Option<f64>,
    pub tb: Option<f64>,
    pub delta_t: Option<f64>,
    pub gamma: Option<f64>,
    pub axis1: Option<String>,
    pub axis2: Option<String>,
    pub outputs: Option<Vec<String>>,
    /// `"mixed"` or `"error"`.
    pub degenerate: Option<String>,
    pub allow_uncoupled: Option<bool>,
}

impl RawConfig {
    pub fn from_toml(text: &str) -> Result<Self, CliError> {
        toml::from_str(text).map_err(|e| CliError::Config(format!("config: {}", e.message())))
    }

    pub fn from_file(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("cannot read config {}: {e}", path.display())))?;
        Self::from_toml(&text).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))
    }

    /// Fields set in `other` replace those in `self`. Setting one way of
    /// choosing the coupling or the hot bath clears the other.
    pub fn merge(mut self, other: RawConfig) -> Self {
        if other.case.is_some() || other.channels.is_some() {
            self.case = other.case;
            self.channels = other.channels;
        }
        if other.tb.is_some() || other.delta_t.is_some() {
            self.tb = other.tb;
            self.delta_t = other.delta_t;
        }
        macro_rules! take {
            ($($f:ident),*) => { $( if other.$f.is_some() { self.$f = other.$f; } )* };
        }
        take!(secular, omega, xi, delta, ta, gamma, axis1, axis2, outputs, degenerate, allow_uncoupled);
        self
    }
}

/// A validated run description.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub channels: Channels,
    pub approximation: Approximation,
    pub omega: f64,
    pub xi: f64,
    pub delta: f64,
    /// `None` only when an axis supplies `T_a`.
    pub ta: Option<f64>,
    /// `None` only when a `DeltaT` axis supplies it.
    pub hot: Option<HotBath>,
    pub gamma: f64,
    pub axis1: Option<Axis>,
    pub axis2: Option<Axis>,
    pub outputs: Vec<Output>,
    pub degenerate: DegeneratePolicy,
    pub allow_uncoupled: bool,
}

fn required(value: Option<f64>, name: &str) -> Result<f64, CliError> {
    value.ok_or_else(|| CliError::Config(format!("missing required setting `{name}`")))
}

impl TryFrom<RawConfig> for SweepSpec {
    type Error = CliError;

    fn try_from(raw: RawConfig) -> Result<Self, CliError> {
        let channels = match (&raw.case, &raw.channels) {
            (Some(_), Some(_)) => return Err(CliError::Config("set either `case` or `channels`, not both".into())),
            (Some(c), None) => Case::from_str(c).map_err(|e| CliError::Config(e.to_string()))?.channels(),
            (None, Some(c)) => Channels::from_str(c).map_err(|e| CliError::Config(e.to_string()))?,
            (None, None) => return Err(CliError::Config("missing required setting `case` (or `channels`)".into())),
        };
        let hot = match (raw.tb, raw.delta_t) {
            (Some(_), Some(_)) => return Err(CliError::Config("set either `tb` or `delta_t`, not both".into())),
            (Some(tb), None) => Some(HotBath::Tb(tb)),
            (None, Some(dt)) => Some(HotBath::DeltaT(dt)),
            (None, None) => None,
        };
        let axis1 = raw.axis1.as_deref().map(Axis::from_str).transpose()?;
        let axis2 = raw.axis2.as_deref().map(Axis::from_str).transpose()?;
        let outputs = match raw.outputs {
            None => Output::ALL.to_vec(),
            Some(list) => list.iter().map(|s| s.parse()).collect::<Result<Vec<_>, _>>()?,
        };
        let degenerate = match raw.degenerate.as_deref() {
            None | Some("mixed") => DegeneratePolicy::FromMaximallyMixed,
            Some("error") => DegeneratePolicy::Reject,
            Some(other) => {
                return Err(CliError::Config(format!("unknown degenerate policy {other:?} (expected mixed or error)")))
            }
        };
        let spec = SweepSpec {
            channels,
            approximation: Approximation::from_secular_flag(raw.secular.unwrap_or(false)),
            omega: required(raw.omega, "omega")?,
            xi: required(raw.xi, "xi")?,
            delta: raw.delta.unwrap_or(0.0),
            ta: raw.ta,
            hot,
            gamma: raw.gamma.unwrap_or(1.0),
            axis1,
            axis2,
            outputs,
            degenerate,
            allow_uncoupled: raw.allow_uncoupled.unwrap_or(false),
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl SweepSpec {
    pub fn axes(&self) -> impl Iterator<Item = &Axis> {
        self.axis1.iter().chain(self.axis2.iter())
    }

    fn has_axis(&self, name: AxisName) -> bool {
        self.axes().any(|a| a.name == name)
    }

    fn validate(&self) -> Result<(), CliError> {
        let cfg = |msg: String| Err(CliError::Config(msg));
        if self.axis1.is_none() && self.axis2.is_some() {
            return cfg("axis2 given without axis1".into());
        }
        if let (Some(a), Some(b)) = (&self.axis1, &self.axis2) {
            if a.name == b.name {
                return cfg(format!("axis1 and axis2 both sweep {}", a.name));
            }
        }
        match (self.ta, self.has_axis(AxisName::Ta)) {
            (None, false) => return cfg("missing required setting `ta`".into()),
            (Some(_), true) => return cfg("`ta` is fixed but also swept by an axis; drop one".into()),
            _ => {}
        }
        match (self.hot, self.has_axis(AxisName::DeltaT)) {
            (None, false) => return cfg("missing required setting `tb` or `delta_t`".into()),
            (Some(_), true) => {
                return cfg("`tb`/`delta_t` is fixed but DeltaT is also swept by an axis; drop one".into())
            }
            _ => {}
        }
        if !self.allow_uncoupled {
            if let Some(atom) = self.channels.uncoupled_atom() {
                return cfg(format!(
                    "channels {} leave atom {} without a bath; set allow_uncoupled to run anyway",
                    self.channels,
                    if atom == steadycoh::model::Atom::One { 1 } else { 2 }
                ));
            }
        }
        if !self.gamma.is_finite() || self.gamma <= 0.0 {
            return cfg(format!("gamma must be finite and > 0, got {}", self.gamma));
        }

        // Detuning and temperatures are monotone in the axis values, so the
        // extreme corners of the grid bound every point.
        let range = |name: AxisName, fixed: f64| match self.axes().find(|a| a.name == name) {
            Some(a) => [a.min, a.max],
            None => [fixed, fixed],
        };
        for delta in range(AxisName::Delta, self.delta) {
            SystemParams::from_mean_and_detuning(self.omega, delta, self.xi)
                .map_err(|e| CliError::Config(format!("system parameters at Delta = {delta}: {e}")))?;
        }
        let ta_range = range(AxisName::Ta, self.ta.unwrap_or(0.0));
        if ta_range[0] < 0.0 {
            return cfg(format!("Ta must be >= 0, got {}", ta_range[0]));
        }
        match self.hot {
            Some(HotBath::Tb(tb)) if tb.is_nan() || tb < 0.0 => return cfg(format!("Tb must be >= 0, got {tb}")),
            Some(HotBath::Tb(_)) => {}
            _ => {
                let dt_fixed = match self.hot {
                    Some(HotBath::DeltaT(d)) => d,
                    _ => 0.0,
                };
                let dt_min = range(AxisName::DeltaT, dt_fixed)[0];
                if ta_range[0] + dt_min < 0.0 {
                    return cfg(format!("Tb = Ta + DeltaT is negative at Ta = {}, DeltaT = {dt_min}", ta_range[0]));
                }
            }
        }
        for (name, v) in [("omega", self.omega), ("xi", self.xi), ("delta", self.delta)] {
            if !v.is_finite() {
                return cfg(format!("{name} must be finite, got {v}"));
            }
        }
        Ok(())
    }

    /// The `(T_a, T_b, Δ)` at one grid point.
    pub fn resolve(&self, axis1: Option<f64>, axis2: Option<f64>) -> (f64, f64, f64) {
        let mut ta = self.ta.unwrap_or(0.0);
        let mut hot = self.hot.unwrap_or(HotBath::DeltaT(0.0));
        let mut delta = self.delta;
        for (axis, value) in [(self.axis1, axis1), (self.axis2, axis2)] {
            if let (Some(axis), Some(v)) = (axis, value) {
                match axis.name {
                    AxisName::Ta => ta = v,
                    AxisName::DeltaT => hot = HotBath::DeltaT(v),
                    AxisName::Delta => delta = v,
                }
            }
        }
        let tb = match hot {
            HotBath::Tb(tb) => tb,
            HotBath::DeltaT(dt) => ta + dt,
        };
        (ta, tb, delta)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn base() -> RawConfig {
        RawConfig::from_toml("case = \"A\"\nomega = 30.0\nxi = 2.0\nta = 10.0\ndelta_t = 50.0\n").unwrap()
    }

    #[test]
    fn axis_parsing_and_grid() {
        let a: Axis = "DeltaT:0:100:201".parse().unwrap();
        assert_eq!(a.value(0), 0.0);
        assert_eq!(a.value(100), 50.0);
        assert_eq!(a.value(200), 100.0);
        assert!("Ta:0:1:1".parse::<Axis>().is_err());
        assert!("Ta:1:0:5".parse::<Axis>().is_err());
        assert!("Tc:0:1:5".parse::<Axis>().is_err());
        assert!("Ta:0:1".parse::<Axis>().is_err());
    }

    #[test]
    fn defaults_and_resolution() {
        let spec = SweepSpec::try_from(base()).unwrap();
        assert_eq!(spec.channels, Case::A.channels());
        assert_eq!(spec.approximation, Approximation::NonSecular);
        assert_eq!(spec.degenerate, DegeneratePolicy::FromMaximallyMixed);
        assert_eq!(spec.resolve(None, None), (10.0, 60.0, 0.0));
    }

    #[test]
    fn overrides_replace_alternatives() {
        let cli = RawConfig { tb: Some(20.0), channels: Some("1,1,1,1".into()), ..Default::default() };
        let spec = SweepSpec::try_from(base().merge(cli)).unwrap();
        assert_eq!(spec.hot, Some(HotBath::Tb(20.0)));
        assert_eq!(spec.channels, Case::D.channels());
    }

    #[test]
    fn axes_supply_swept_quantities() {
        let raw = RawConfig {
            ta: None,
            delta_t: None,
            axis1: Some("DeltaT:0:100:5".into()),
            axis2: Some("Ta:0.5:20:4".into()),
            ..base()
        };
        let spec = SweepSpec::try_from(raw).unwrap();
        assert_eq!(spec.resolve(Some(25.0), Some(0.5)), (0.5, 25.5, 0.0));
    }

    #[test]
    fn validation_failures_name_the_problem() {
        let msg = |raw: RawConfig| SweepSpec::try_from(raw).unwrap_err().to_string();
        assert!(msg(RawConfig { xi: None, ..base() }).contains("xi"));
        assert!(msg(RawConfig { axis1: Some("Ta:0:10:5".into()), ..base() }).contains("ta"));
        assert!(msg(RawConfig { delta_t: Some(-20.0), ..base() }).contains("negative"));
        assert!(msg(RawConfig { xi: Some(0.0), ..base() }).contains("xi"));
        assert!(msg(RawConfig { case: None, channels: Some("1,1,0,0".into()), ..base() }).contains("atom 2"));
        assert!(msg(RawConfig { case: Some("E".into()), ..base() }).contains("unknown coupling case"));
        assert!(RawConfig::from_toml("omgea = 3.0").is_err());
    }
}
