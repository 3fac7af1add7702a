//! Tunable parameters of the rational approximation and the expansion
//! coefficients derived from them.

use std::f64::consts::PI;
use std::fmt;

use thiserror::Error;

/// Number of summation terms used by default.
pub const DEFAULT_TERMS: usize = 16;
/// Default shift constant.
pub const DEFAULT_SIGMA: f64 = 1.5;
/// Default cutoff of the Gaussian `e^{-t^2}` used to place the margin value.
pub const DEFAULT_T_MARGIN: f64 = 6.0;
/// Default reference height of the narrow-band blend.
pub const DEFAULT_Y_MIN: f64 = 1e-5;
/// Default ceiling of the narrow-band domain.
pub const DEFAULT_Y_NARROW: f64 = 1e-6;
/// Default `|z|` at and above which the continued fraction is used.
pub const DEFAULT_Z_CF_THRESHOLD: f64 = 15.0;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParamError {
    #[error("number of summation terms must be at least 1")]
    NoTerms,
    #[error("shift constant sigma = {0} is below 1; the periodic replicas of the kernel are not suppressed")]
    SigmaTooSmall(f64),
    #[error("narrow-band heights must satisfy 0 < y_narrow < y_min < 1 (got y_narrow = {y_narrow}, y_min = {y_min})")]
    HeightOrdering { y_narrow: f64, y_min: f64 },
    #[error("margin t_margin = {0} must be finite and positive")]
    BadMargin(f64),
    #[error("continued-fraction threshold {0} must be finite and positive")]
    BadThreshold(f64),
    #[error("line {line}: unknown key `{key}`")]
    UnknownKey { line: usize, key: String },
    #[error("line {line}: cannot parse value for `{key}`: `{value}`")]
    BadValue {
        line: usize,
        key: String,
        value: String,
    },
    #[error("line {line}: expected `key=value`")]
    Malformed { line: usize },
}

/// The tuple of settings governing every evaluation path.
///
/// `nu_m` and `h_i` are derived: `nu_m = t_margin / (2 pi)` and
/// `h_i = nu_m / N`. Construct through [`ApproximationParams::new`] (or
/// `Default`) so the invariants always hold.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ApproximationParams {
    n_terms: usize,
    sigma: f64,
    t_margin: f64,
    nu_m: f64,
    h_i: f64,
    y_min: f64,
    y_narrow: f64,
    z_cf_threshold: f64,
}

impl ApproximationParams {
    pub fn new(
        n_terms: usize,
        sigma: f64,
        y_min: f64,
        y_narrow: f64,
        z_cf_threshold: f64,
    ) -> Result<Self, ParamError> {
        Self::with_margin(
            n_terms,
            sigma,
            DEFAULT_T_MARGIN,
            y_min,
            y_narrow,
            z_cf_threshold,
        )
    }

    /// Like [`new`](Self::new) but with an explicit Gaussian margin, for
    /// sensitivity studies.
    pub fn with_margin(
        n_terms: usize,
        sigma: f64,
        t_margin: f64,
        y_min: f64,
        y_narrow: f64,
        z_cf_threshold: f64,
    ) -> Result<Self, ParamError> {
        if n_terms < 1 {
            return Err(ParamError::NoTerms);
        }
        // written as a negated comparison so NaN is rejected too
        if !(sigma >= 1.0) || !sigma.is_finite() {
            return Err(ParamError::SigmaTooSmall(sigma));
        }
        if !(t_margin > 0.0) || !t_margin.is_finite() {
            return Err(ParamError::BadMargin(t_margin));
        }
        if !(0.0 < y_narrow && y_narrow < y_min && y_min < 1.0) {
            return Err(ParamError::HeightOrdering { y_narrow, y_min });
        }
        if !(z_cf_threshold > 0.0) || !z_cf_threshold.is_finite() {
            return Err(ParamError::BadThreshold(z_cf_threshold));
        }
        let nu_m = t_margin / (2.0 * PI);
        let h_i = nu_m / n_terms as f64;
        Ok(Self {
            n_terms,
            sigma,
            t_margin,
            nu_m,
            h_i,
            y_min,
            y_narrow,
            z_cf_threshold,
        })
    }

    pub fn n_terms(&self) -> usize {
        self.n_terms
    }
    pub fn sigma(&self) -> f64 {
        self.sigma
    }
    pub fn t_margin(&self) -> f64 {
        self.t_margin
    }
    /// Margin value of the sampled spectrum, `t_margin / (2 pi)`.
    pub fn nu_m(&self) -> f64 {
        self.nu_m
    }
    /// Sampling step, `nu_m / N`.
    pub fn h_i(&self) -> f64 {
        self.h_i
    }
    pub fn y_min(&self) -> f64 {
        self.y_min
    }
    pub fn y_narrow(&self) -> f64 {
        self.y_narrow
    }
    pub fn z_cf_threshold(&self) -> f64 {
        self.z_cf_threshold
    }
}

impl Default for ApproximationParams {
    fn default() -> Self {
        Self::new(
            DEFAULT_TERMS,
            DEFAULT_SIGMA,
            DEFAULT_Y_MIN,
            DEFAULT_Y_NARROW,
            DEFAULT_Z_CF_THRESHOLD,
        )
        .expect("default parameters are valid")
    }
}

impl fmt::Display for ApproximationParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "N={} sigma={} t_margin={} y_min={:e} y_narrow={:e} z_cf_threshold={}",
            self.n_terms, self.sigma, self.t_margin, self.y_min, self.y_narrow, self.z_cf_threshold
        )
    }
}

/// Partial parameter settings, as read from a `key=value` config file or
/// from command-line flags. Unset fields fall back to the defaults.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct ParamOverrides {
    pub n_terms: Option<usize>,
    pub sigma: Option<f64>,
    pub y_min: Option<f64>,
    pub y_narrow: Option<f64>,
    pub z_cf_threshold: Option<f64>,
}

impl ParamOverrides {
    /// Parses the plain-text config format: one `key=value` per line with
    /// keys `N`, `sigma`, `y_min`, `y_narrow`, `z_cf_threshold`. Blank lines
    /// and lines starting with `#` are ignored.
    pub fn parse_config(text: &str) -> Result<Self, ParamError> {
        let mut out = Self::default();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let (key, value) = trimmed
                .split_once('=')
                .ok_or(ParamError::Malformed { line })?;
            let key = key.trim();
            let value = value.trim();
            let bad = || ParamError::BadValue {
                line,
                key: key.to_string(),
                value: value.to_string(),
            };
            match key {
                "N" => out.n_terms = Some(value.parse().map_err(|_| bad())?),
                "sigma" => out.sigma = Some(value.parse().map_err(|_| bad())?),
                "y_min" => out.y_min = Some(value.parse().map_err(|_| bad())?),
                "y_narrow" => out.y_narrow = Some(value.parse().map_err(|_| bad())?),
                "z_cf_threshold" => out.z_cf_threshold = Some(value.parse().map_err(|_| bad())?),
                _ => {
                    return Err(ParamError::UnknownKey {
                        line,
                        key: key.to_string(),
                    })
                }
            }
        }
        Ok(out)
    }

    /// Fields set in `other` take precedence.
    pub fn merge(self, other: ParamOverrides) -> ParamOverrides {
        ParamOverrides {
            n_terms: other.n_terms.or(self.n_terms),
            sigma: other.sigma.or(self.sigma),
            y_min: other.y_min.or(self.y_min),
            y_narrow: other.y_narrow.or(self.y_narrow),
            z_cf_threshold: other.z_cf_threshold.or(self.z_cf_threshold),
        }
    }

    pub fn build(self) -> Result<ApproximationParams, ParamError> {
        ApproximationParams::new(
            self.n_terms.unwrap_or(DEFAULT_TERMS),
            self.sigma.unwrap_or(DEFAULT_SIGMA),
            self.y_min.unwrap_or(DEFAULT_Y_MIN),
            self.y_narrow.unwrap_or(DEFAULT_Y_NARROW),
            self.z_cf_threshold.unwrap_or(DEFAULT_Z_CF_THRESHOLD),
        )
    }
}

/// Expansion coefficients of the rational approximation, fixed per
/// parameter set.
///
/// ```text
/// A_n = 8 pi h^2 n e^{s^2 - (2 pi h n)^2} sin(4 pi h n s)
/// B_n = 4 h e^{s^2 - (2 pi h n)^2} cos(4 pi h n s)
/// C_n = 2 pi h n
/// ```
///
/// with `h` the sampling step and `s` the shift constant. The pole term of
/// the approximation has numerator `2 h e^{s^2}`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientSet {
    a: Vec<f64>,
    b: Vec<f64>,
    c: Vec<f64>,
    c_squared: Vec<f64>,
    pole_prefactor: f64,
    sigma: f64,
}

impl CoefficientSet {
    pub fn derive(params: &ApproximationParams) -> Self {
        let h = params.h_i();
        let sigma = params.sigma();
        let sigma_sq = sigma * sigma;
        let n_terms = params.n_terms();
        let mut a = Vec::with_capacity(n_terms);
        let mut b = Vec::with_capacity(n_terms);
        let mut c = Vec::with_capacity(n_terms);
        for n in 1..=n_terms {
            let nf = n as f64;
            let c_n = 2.0 * PI * h * nf;
            let damping = (sigma_sq - c_n * c_n).exp();
            let phase = 4.0 * PI * h * nf * sigma;
            a.push(8.0 * PI * h * h * nf * damping * phase.sin());
            b.push(4.0 * h * damping * phase.cos());
            c.push(c_n);
        }
        let c_squared = c.iter().map(|v| v * v).collect();
        Self {
            a,
            b,
            c,
            c_squared,
            pole_prefactor: 2.0 * h * sigma_sq.exp(),
            sigma,
        }
    }

    pub fn len(&self) -> usize {
        self.c.len()
    }

    pub fn is_empty(&self) -> bool {
        self.c.is_empty()
    }

    pub fn a(&self) -> &[f64] {
        &self.a
    }
    pub fn b(&self) -> &[f64] {
        &self.b
    }
    pub fn c(&self) -> &[f64] {
        &self.c
    }
    pub(crate) fn c_squared(&self) -> &[f64] {
        &self.c_squared
    }
    /// `2 h e^{sigma^2}`.
    pub fn pole_prefactor(&self) -> f64 {
        self.pole_prefactor
    }
    /// Shift constant the set was derived with.
    pub fn sigma(&self) -> f64 {
        self.sigma
    }
}
