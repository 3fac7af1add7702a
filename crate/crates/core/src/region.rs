use std::fmt;
use std::str::FromStr;

/// Computation path that produced a value in the first quadrant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BaseRegion {
    Rational,
    ContinuedFraction,
    NarrowBand,
}

impl BaseRegion {
    pub const ALL: [BaseRegion; 3] = [
        BaseRegion::Rational,
        BaseRegion::ContinuedFraction,
        BaseRegion::NarrowBand,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BaseRegion::Rational => "Rational",
            BaseRegion::ContinuedFraction => "ContinuedFraction",
            BaseRegion::NarrowBand => "NarrowBand",
        }
    }
}

/// Which path evaluated a point, plus the symmetry maps applied on the way.
///
/// The dispatcher reflects lower-half-plane arguments first and mirrors
/// negative real parts second, so the reflection (when present) is always
/// the outermost wrapper: `ReflectedLowerHalf(ParityMirrored(Rational))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RegionTag {
    pub base: BaseRegion,
    pub reflected: bool,
    pub mirrored: bool,
}

impl RegionTag {
    pub const fn base(base: BaseRegion) -> Self {
        Self {
            base,
            reflected: false,
            mirrored: false,
        }
    }

    pub fn with_reflection(self) -> Self {
        Self {
            reflected: true,
            ..self
        }
    }

    pub fn with_mirror(self) -> Self {
        Self {
            mirrored: true,
            ..self
        }
    }
}

impl fmt::Display for RegionTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut closing = 0;
        if self.reflected {
            f.write_str("ReflectedLowerHalf(")?;
            closing += 1;
        }
        if self.mirrored {
            f.write_str("ParityMirrored(")?;
            closing += 1;
        }
        f.write_str(self.base.name())?;
        for _ in 0..closing {
            f.write_str(")")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRegionError(pub String);

impl fmt::Display for ParseRegionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unrecognised region tag `{}`", self.0)
    }
}

impl std::error::Error for ParseRegionError {}

impl FromStr for RegionTag {
    type Err = ParseRegionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseRegionError(s.to_string());
        let mut rest = s.trim();
        let mut tag_reflected = false;
        let mut tag_mirrored = false;
        if let Some(inner) = rest.strip_prefix("ReflectedLowerHalf(") {
            rest = inner.strip_suffix(')').ok_or_else(err)?;
            tag_reflected = true;
        }
        if let Some(inner) = rest.strip_prefix("ParityMirrored(") {
            rest = inner.strip_suffix(')').ok_or_else(err)?;
            tag_mirrored = true;
        }
        let base = BaseRegion::ALL
            .into_iter()
            .find(|b| b.name() == rest)
            .ok_or_else(err)?;
        Ok(RegionTag {
            base,
            reflected: tag_reflected,
            mirrored: tag_mirrored,
        })
    }
}
