use std::f64::consts::FRAC_1_SQRT_2;

use faddeeva_core::{
    dawson, erf_complex, erfc_scaled, fresnel, normal_distribution, plasma_dispersion, voigt,
    Complex64, EvalError, Faddeeva, RegionTag,
};

use crate::args::FunctionKind;

const SQRT_PI: f64 = 1.772_453_850_905_516;

impl FunctionKind {
    /// The point at which `w` is evaluated on the way to this function.
    pub fn w_argument(self, z: Complex64) -> Complex64 {
        match self {
            FunctionKind::W | FunctionKind::Voigt | FunctionKind::Dawson | FunctionKind::Plasma => z,
            FunctionKind::Erf | FunctionKind::ErfcScaled => Complex64::i() * z,
            FunctionKind::Fresnel => 0.5 * SQRT_PI * Complex64::new(1.0, 1.0) * z,
            FunctionKind::Normal => Complex64::i() * z * FRAC_1_SQRT_2,
        }
    }

    /// Value and the region that served its `w` evaluation. The Voigt pair
    /// is reported as `(K, L)`.
    pub fn apply(self, f: &Faddeeva, z: Complex64) -> Result<(Complex64, RegionTag), EvalError> {
        let region = f.evaluate(self.w_argument(z))?.region;
        let v = match self {
            FunctionKind::W => f.w(z)?,
            FunctionKind::Voigt => {
                let p = voigt(f, z.re, z.im)?;
                Complex64::new(p.k, p.l)
            }
            FunctionKind::Erf => erf_complex(f, z)?,
            FunctionKind::ErfcScaled => erfc_scaled(f, z)?,
            FunctionKind::Dawson => dawson(f, z)?,
            FunctionKind::Plasma => plasma_dispersion(f, z)?,
            FunctionKind::Fresnel => fresnel(f, z)?,
            FunctionKind::Normal => normal_distribution(f, z)?,
        };
        Ok((v, region))
    }
}
