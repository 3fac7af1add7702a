//! Plain-text cache of oracle values.
//!
//! ```text
//! # faddeeva-oracle cache v1
//! # signature grid:x=0..15:nx=100:y=1e-6..15:ny=100:log
//! # columns x y re im est_error
//! 0e0 1e-6 1.00000000000000000000000000000e0 1.12837916709551257389615890312e-6 1e-31
//! ```
//!
//! `x` and `y` are written in shortest round-trip form, so lookups by the
//! original doubles are exact.

use std::collections::HashMap;
use std::fs;
use std::io::{BufRead, BufReader, Read, Write};
use std::path::Path;

use rug::Float;

use crate::error::CacheError;
use crate::value::OracleValue;

pub const CACHE_VERSION: &str = "faddeeva-oracle cache v1";
/// Significant digits written for each part.
pub const CACHE_DIGITS: usize = 30;
/// Precision used when parsing cached parts back.
pub const CACHE_PREC: u32 = 128;

#[derive(Debug, Clone, PartialEq)]
pub struct CacheRecord {
    pub x: f64,
    pub y: f64,
    pub value: OracleValue,
}

#[derive(Debug, Clone, Default)]
pub struct OracleCache {
    signature: String,
    records: Vec<CacheRecord>,
    index: HashMap<(u64, u64), usize>,
}

fn key(x: f64, y: f64) -> (u64, u64) {
    // +0 and -0 are the same point
    ((x + 0.0).to_bits(), (y + 0.0).to_bits())
}

impl OracleCache {
    pub fn new(signature: impl Into<String>) -> Self {
        Self {
            signature: signature.into(),
            ..Self::default()
        }
    }

    pub fn signature(&self) -> &str {
        &self.signature
    }

    pub fn records(&self) -> &[CacheRecord] {
        &self.records
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// Adds a record; a later record for the same point replaces the earlier.
    pub fn insert(&mut self, x: f64, y: f64, value: OracleValue) {
        let rec = CacheRecord { x, y, value };
        match self.index.get(&key(x, y)) {
            Some(&i) => self.records[i] = rec,
            None => {
                self.index.insert(key(x, y), self.records.len());
                self.records.push(rec);
            }
        }
    }

    pub fn get(&self, x: f64, y: f64) -> Option<&OracleValue> {
        self.index.get(&key(x, y)).map(|&i| &self.records[i].value)
    }

    pub fn lookup(&self, x: f64, y: f64) -> Result<&OracleValue, CacheError> {
        self.get(x, y).ok_or(CacheError::Missing { x, y })
    }

    pub fn write_to<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        writeln!(out, "# {CACHE_VERSION}")?;
        writeln!(out, "# signature {}", self.signature)?;
        writeln!(out, "# columns x y re im est_error")?;
        for r in &self.records {
            writeln!(
                out,
                "{:e} {:e} {} {} {:e}",
                r.x,
                r.y,
                fmt_part(&r.value.re),
                fmt_part(&r.value.im),
                r.value.est_error
            )?;
        }
        out.flush()
    }

    /// Writes through a temporary file and renames, so an interrupted run
    /// never leaves a truncated cache behind.
    pub fn write(&self, path: &Path) -> Result<(), CacheError> {
        let tmp = path.with_extension("tmp");
        {
            let f = fs::File::create(&tmp)?;
            self.write_to(std::io::BufWriter::new(f))?;
        }
        fs::rename(&tmp, path)?;
        Ok(())
    }

    pub fn read_from<R: Read>(input: R) -> Result<Self, CacheError> {
        let mut cache = OracleCache::default();
        let mut seen_version = false;
        for (i, line) in BufReader::new(input).lines().enumerate() {
            let line = line?;
            let lineno = i + 1;
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(h) = line.strip_prefix('#') {
                let h = h.trim();
                if h == CACHE_VERSION {
                    seen_version = true;
                } else if let Some(sig) = h.strip_prefix("signature ") {
                    cache.signature = sig.trim().to_string();
                }
                continue;
            }
            let parse_err = |msg: &str| CacheError::Parse {
                line: lineno,
                msg: msg.to_string(),
            };
            let cols: Vec<&str> = line.split_whitespace().collect();
            if cols.len() != 5 {
                return Err(parse_err("expected 5 columns"));
            }
            let x: f64 = cols[0].parse().map_err(|_| parse_err("bad x"))?;
            let y: f64 = cols[1].parse().map_err(|_| parse_err("bad y"))?;
            let re = parse_part(cols[2]).ok_or_else(|| parse_err("bad re"))?;
            let im = parse_part(cols[3]).ok_or_else(|| parse_err("bad im"))?;
            let est: f64 = cols[4].parse().map_err(|_| parse_err("bad est_error"))?;
            cache.insert(x, y, OracleValue::new(re, im, est));
        }
        if !seen_version {
            return Err(CacheError::Parse {
                line: 1,
                msg: format!("missing `# {CACHE_VERSION}` header"),
            });
        }
        Ok(cache)
    }

    pub fn read(path: &Path) -> Result<Self, CacheError> {
        Self::read_from(fs::File::open(path)?)
    }

    /// Reads a cache and insists that it was generated for `signature`.
    pub fn read_expecting(path: &Path, signature: &str) -> Result<Self, CacheError> {
        let cache = Self::read(path)?;
        if cache.signature != signature {
            return Err(CacheError::SignatureMismatch {
                expected: signature.to_string(),
                found: cache.signature,
            });
        }
        Ok(cache)
    }
}

fn fmt_part(f: &Float) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    f.to_string_radix(10, Some(CACHE_DIGITS))
}

fn parse_part(s: &str) -> Option<Float> {
    Float::parse(s).ok().map(|p| Float::with_val(CACHE_PREC, p))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn value(re: &str, im: &str) -> OracleValue {
        OracleValue::new(parse_part(re).unwrap(), parse_part(im).unwrap(), 1e-31)
    }

    #[test]
    fn round_trip() {
        let mut c = OracleCache::new("test:grid");
        c.insert(0.1, 1e-6, value("0.3678794411714423215955237701614", "-1.5e-300"));
        c.insert(15.0, 0.0, value("0", "0.037"));
        let mut buf = Vec::new();
        c.write_to(&mut buf).unwrap();
        let back = OracleCache::read_from(buf.as_slice()).unwrap();
        assert_eq!(back.signature(), "test:grid");
        assert_eq!(back.len(), 2);
        let v = back.get(0.1, 1e-6).unwrap();
        let orig = c.get(0.1, 1e-6).unwrap();
        let d = Float::with_val(64, &v.re - &orig.re).abs() / 0.36;
        assert!(d < 1e-29);
        assert!(back.get(15.0, -0.0).unwrap().re.is_zero());
    }

    #[test]
    fn bad_lines_are_reported_with_numbers() {
        let text = format!("# {CACHE_VERSION}\n# signature s\n1 2 3 4\n");
        match OracleCache::read_from(text.as_bytes()) {
            Err(CacheError::Parse { line: 3, .. }) => {}
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn signature_mismatch_names_the_expected_grid() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.txt");
        OracleCache::new("a").write(&path).unwrap();
        let err = OracleCache::read_expecting(&path, "b").unwrap_err();
        assert!(err.to_string().contains("expected `b`"));
        assert!(!path.with_extension("tmp").exists());
    }

    #[test]
    fn missing_points_are_errors() {
        let c = OracleCache::new("s");
        assert!(matches!(c.lookup(1.0, 2.0), Err(CacheError::Missing { .. })));
    }
}
