//! Error maps over rectangular `(x, y)` grids.

use faddeeva_core::{Complex64, Faddeeva};
use rayon::prelude::*;

use crate::error::AnalysisError;
use crate::reference::ReferenceSource;
use crate::relative::relative_errors;

/// Errors at or below this are stored as `log10 = -30` so that exact
/// matches stay finite.
pub const ERROR_FLOOR: f64 = 1e-30;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub x_range: (f64, f64),
    pub y_range: (f64, f64),
    pub nx: usize,
    pub ny: usize,
    pub y_log: bool,
}

impl GridSpec {
    /// `0 <= x <= 15`, `1e-6 <= y <= 15`, 100 x 100, log-spaced `y`.
    pub fn acceptance() -> Self {
        Self {
            x_range: (0.0, 15.0),
            y_range: (1e-6, 15.0),
            nx: 100,
            ny: 100,
            y_log: true,
        }
    }

    pub fn validate(&self) -> Result<(), AnalysisError> {
        let bad = |m: &str| Err(AnalysisError::InvalidGrid(m.to_string()));
        if self.nx < 1 || self.ny < 1 {
            return bad("nx and ny must be at least 1");
        }
        let (x0, x1) = self.x_range;
        let (y0, y1) = self.y_range;
        if !(x0.is_finite() && x1.is_finite() && y0.is_finite() && y1.is_finite()) {
            return bad("ranges must be finite");
        }
        if x1 < x0 || y1 < y0 {
            return bad("ranges must be increasing");
        }
        if self.y_log && y0 <= 0.0 {
            return bad("log-spaced y needs a positive range");
        }
        Ok(())
    }

    pub fn x_axis(&self) -> Vec<f64> {
        linspace(self.x_range.0, self.x_range.1, self.nx)
    }

    pub fn y_axis(&self) -> Vec<f64> {
        if self.y_log {
            let (a, b) = (self.y_range.0.log10(), self.y_range.1.log10());
            let mut v: Vec<f64> = linspace(a, b, self.ny).into_iter().map(|e| 10f64.powf(e)).collect();
            // pin the ends exactly
            v[0] = self.y_range.0;
            if self.ny > 1 {
                v[self.ny - 1] = self.y_range.1;
            }
            v
        } else {
            linspace(self.y_range.0, self.y_range.1, self.ny)
        }
    }

    /// Cells in output order: row-major over `y`, then `x`.
    pub fn points(&self) -> Vec<(f64, f64)> {
        let xs = self.x_axis();
        self.y_axis()
            .into_iter()
            .flat_map(|y| xs.iter().map(move |&x| (x, y)))
            .collect()
    }

    /// Identifies the grid in cache headers.
    pub fn signature(&self) -> String {
        format!(
            "grid:x={:e}..{:e}:nx={}:y={:e}..{:e}:ny={}:{}",
            self.x_range.0,
            self.x_range.1,
            self.nx,
            self.y_range.0,
            self.y_range.1,
            self.ny,
            if self.y_log { "log" } else { "lin" }
        )
    }
}

fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![a];
    }
    (0..n)
        .map(|i| {
            if i == n - 1 {
                b
            } else {
                a + (b - a) * i as f64 / (n - 1) as f64
            }
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrorStats {
    pub max_dre: f64,
    pub max_dim: f64,
    pub mean_dre: f64,
    pub mean_dim: f64,
}

impl ErrorStats {
    /// Aggregates `log10` fields; NaN cells are sentinels and are skipped.
    /// Summation runs in a fixed order so the result only depends on the
    /// field values.
    pub fn from_fields(dre: &[Vec<f64>], dim: &[Vec<f64>]) -> Self {
        let (max_dre, mean_dre) = max_mean(dre);
        let (max_dim, mean_dim) = max_mean(dim);
        Self {
            max_dre,
            max_dim,
            mean_dre,
            mean_dim,
        }
    }
}

fn max_mean(field: &[Vec<f64>]) -> (f64, f64) {
    let mut max = f64::NAN;
    let mut sum = 0.0;
    let mut n = 0usize;
    for v in field.iter().flatten().filter(|v| !v.is_nan()) {
        let e = 10f64.powf(*v);
        max = if max.is_nan() { e } else { max.max(e) };
        sum += e;
        n += 1;
    }
    let mean = if n == 0 { f64::NAN } else { sum / n as f64 };
    (max, mean)
}

/// `log10` of a relative error, floored; `None` becomes NaN.
pub fn log10_error(e: Option<f64>) -> f64 {
    match e {
        Some(e) => e.max(ERROR_FLOOR).log10(),
        None => f64::NAN,
    }
}

/// Relative-error fields over a grid; rows are `y`, columns are `x`.
#[derive(Debug, Clone, PartialEq)]
pub struct ErrorMapGrid {
    pub x_axis: Vec<f64>,
    pub y_axis: Vec<f64>,
    pub log10_dre: Vec<Vec<f64>>,
    pub log10_dim: Vec<Vec<f64>>,
    pub stats: ErrorStats,
}

impl ErrorMapGrid {
    pub fn new(
        x_axis: Vec<f64>,
        y_axis: Vec<f64>,
        log10_dre: Vec<Vec<f64>>,
        log10_dim: Vec<Vec<f64>>,
    ) -> Result<Self, AnalysisError> {
        let shape_ok = |f: &Vec<Vec<f64>>| f.len() == y_axis.len() && f.iter().all(|r| r.len() == x_axis.len());
        if !shape_ok(&log10_dre) || !shape_ok(&log10_dim) {
            return Err(AnalysisError::InvalidGrid("field shape does not match axes".into()));
        }
        let stats = ErrorStats::from_fields(&log10_dre, &log10_dim);
        Ok(Self {
            x_axis,
            y_axis,
            log10_dre,
            log10_dim,
            stats,
        })
    }

    pub fn nx(&self) -> usize {
        self.x_axis.len()
    }

    pub fn ny(&self) -> usize {
        self.y_axis.len()
    }

    /// Stats over the rows whose `y` satisfies `keep`.
    pub fn stats_where(&self, keep: impl Fn(f64) -> bool) -> ErrorStats {
        let rows: Vec<usize> = (0..self.ny()).filter(|&j| keep(self.y_axis[j])).collect();
        let pick = |f: &Vec<Vec<f64>>| rows.iter().map(|&j| f[j].clone()).collect::<Vec<_>>();
        ErrorStats::from_fields(&pick(&self.log10_dre), &pick(&self.log10_dim))
    }
}

/// Evaluates the approximation and the reference on every cell.
///
/// Rows are processed in parallel in `chunks` contiguous groups; each cell
/// is a pure function of its coordinates, so the result does not depend on
/// `chunks`.
pub fn sweep_domain(
    spec: &GridSpec,
    f: &Faddeeva,
    source: &dyn ReferenceSource,
    chunks: usize,
) -> Result<ErrorMapGrid, AnalysisError> {
    spec.validate()?;
    let xs = spec.x_axis();
    let ys = spec.y_axis();
    let rows_per_chunk = ys.len().div_ceil(chunks.max(1)).max(1);
    let groups: Vec<&[f64]> = ys.chunks(rows_per_chunk).collect();
    let computed: Vec<Vec<(Vec<f64>, Vec<f64>)>> = groups
        .par_iter()
        .map(|rows| {
            rows.iter()
                .map(|&y| sweep_row(&xs, y, f, source))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<_, _>>()?;
    let (dre, dim): (Vec<_>, Vec<_>) = computed.into_iter().flatten().unzip();
    ErrorMapGrid::new(xs, ys, dre, dim)
}

fn sweep_row(
    xs: &[f64],
    y: f64,
    f: &Faddeeva,
    source: &dyn ReferenceSource,
) -> Result<(Vec<f64>, Vec<f64>), AnalysisError> {
    let mut dre = Vec::with_capacity(xs.len());
    let mut dim = Vec::with_capacity(xs.len());
    for &x in xs {
        let w = f
            .w(Complex64::new(x, y))
            .map_err(|source| AnalysisError::Eval { x, y, source })?;
        let r = source.reference(x, y)?;
        let e = relative_errors(w, &r);
        dre.push(log10_error(e.dre));
        dim.push(log10_error(e.dim));
    }
    Ok((dre, dim))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axes_hit_their_ends() {
        let s = GridSpec::acceptance();
        let y = s.y_axis();
        assert_eq!(y[0], 1e-6);
        assert_eq!(y[99], 15.0);
        assert_eq!(s.x_axis()[99], 15.0);
        assert_eq!(s.points().len(), 10_000);
        assert_eq!(s.points()[1], (s.x_axis()[1], 1e-6));
    }

    #[test]
    fn single_cell_axes() {
        let s = GridSpec {
            x_range: (2.0, 2.0),
            y_range: (1.0, 3.0),
            nx: 1,
            ny: 2,
            y_log: false,
        };
        assert_eq!(s.points(), vec![(2.0, 1.0), (2.0, 3.0)]);
    }

    #[test]
    fn invalid_specs_are_rejected() {
        let mut s = GridSpec::acceptance();
        s.y_range = (0.0, 1.0);
        assert!(s.validate().is_err());
        s.y_log = false;
        assert!(s.validate().is_ok());
        s.nx = 0;
        assert!(s.validate().is_err());
    }

    #[test]
    fn stats_skip_sentinels() {
        let dre = vec![vec![-10.0, f64::NAN]];
        let dim = vec![vec![-12.0, -14.0]];
        let s = ErrorStats::from_fields(&dre, &dim);
        assert_eq!(s.max_dre, 1e-10);
        assert_eq!(s.mean_dre, 1e-10);
        assert_eq!(s.max_dim, 1e-12);
        assert!((s.mean_dim - 0.505e-12).abs() < 1e-27);
    }

    #[test]
    fn floor_keeps_exact_matches_finite() {
        assert_eq!(log10_error(Some(0.0)), -30.0);
        assert!(log10_error(None).is_nan());
    }
}
