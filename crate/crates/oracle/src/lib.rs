//! Extended-precision reference values for `w(z)` and related functions.
//!
//! Three independent methods are available: the Maclaurin series
//! ([`oracle_series`]), adaptive Gauss-Legendre quadrature of the Laplace
//! integral ([`oracle_quadrature`]) and a deep continued fraction
//! ([`oracle_cf`]). [`oracle_w`] picks a method, cross-checks where two
//! apply and refuses to return values it cannot vouch for.
//!
//! ```
//! use faddeeva_oracle::{oracle_series, oracle_quadrature, Complex64};
//!
//! let z = Complex64::new(3.0, 2.0);
//! let s = oracle_series(z, 30).unwrap();
//! let q = oracle_quadrature(z, 30).unwrap();
//! assert!(s.rel_diff(&q) < 1e-25);
//! ```

mod cache;
mod cf;
pub mod coefficients;
mod error;
mod legendre;
mod precision;
mod quadrature;
mod related;
mod series;
mod value;
mod w;

pub use cache::{CacheRecord, OracleCache, CACHE_DIGITS, CACHE_PREC, CACHE_VERSION};
pub use cf::{oracle_cf, MAX_DEPTH};
pub use error::{CacheError, OracleError};
pub use num_complex::Complex64;
pub use quadrature::{oracle_quadrature, ROTATE_ABOVE};
pub use related::{oracle_daw, oracle_erf, oracle_fresnel};
pub use rug;
pub use series::{oracle_series, SERIES_RADIUS};
pub use value::{OracleValue, VALIDATED_ERROR};
pub use w::{oracle_w, oracle_w_digits, DEFAULT_DIGITS, SERIES_BELOW};
