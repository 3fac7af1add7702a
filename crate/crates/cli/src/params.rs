use std::fs;

use faddeeva_core::{ApproximationParams, Faddeeva, ParamOverrides};

use crate::args::ParamArgs;
use crate::error::CliError;

impl ParamArgs {
    fn overrides(&self) -> ParamOverrides {
        ParamOverrides {
            n_terms: self.n_terms,
            sigma: self.sigma,
            y_min: self.y_min,
            y_narrow: self.y_narrow,
            z_cf_threshold: self.z_cf_threshold,
        }
    }

    /// Config file first, then flags on top; invalid combinations are
    /// rejected here, before any evaluation.
    pub fn resolve(&self) -> Result<ApproximationParams, CliError> {
        let base = match &self.config {
            Some(path) => {
                let text = fs::read_to_string(path)
                    .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
                ParamOverrides::parse_config(&text)
                    .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?
            }
            None => ParamOverrides::default(),
        };
        Ok(base.merge(self.overrides()).build()?)
    }

    pub fn evaluator(&self) -> Result<Faddeeva, CliError> {
        Ok(Faddeeva::new(self.resolve()?))
    }
}
