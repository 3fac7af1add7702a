use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum EvalError {
    #[error("argument ({re}, {im}) is not finite")]
    NonFinite { re: f64, im: f64 },
    #[error("e^(-z^2) overflows at z = ({re}, {im}): exponent {exponent:.3} exceeds the double range")]
    Overflow { re: f64, im: f64, exponent: f64 },
    #[error("argument ({re}, {im}) lies on or next to a pole of the rational form")]
    PoleProximity { re: f64, im: f64 },
    #[error("|z| = {modulus} is below the continued-fraction threshold {threshold}")]
    BelowThreshold { modulus: f64, threshold: f64 },
    #[error("argument ({re}, {im}) is in the wrong half-plane for this path")]
    WrongHalfPlane { re: f64, im: f64 },
    #[error("imaginary part {0} is negative; the Voigt pair is defined for y >= 0")]
    NegativeHeight(f64),
}
