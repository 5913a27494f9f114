//! Sweep specifications such as `n=0..4,m=0..4,r=1..4`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

/// Inclusive integer ranges per named variable.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SweepSpec {
    ranges: BTreeMap<String, RangeInclusive<i64>>,
}

/// Parses `lo..hi` (inclusive) or a single integer.
pub fn parse_range(text: &str) -> Result<RangeInclusive<i64>, String> {
    let t = text.trim();
    let (lo, hi) = match t.split_once("..") {
        Some((lo, hi)) => (lo, hi.strip_prefix('=').unwrap_or(hi)),
        None => (t, t),
    };
    let parse = |s: &str| {
        s.trim()
            .parse::<i64>()
            .map_err(|_| format!("`{s}` is not an integer in range `{text}`"))
    };
    let (lo, hi) = (parse(lo)?, parse(hi)?);
    if lo > hi {
        return Err(format!("empty range `{text}`"));
    }
    Ok(lo..=hi)
}

impl FromStr for SweepSpec {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let mut ranges = BTreeMap::new();
        for part in s.split(',').filter(|p| !p.trim().is_empty()) {
            let (name, range) = part
                .split_once('=')
                .ok_or_else(|| format!("expected `name=lo..hi`, got `{part}`"))?;
            let name = name.trim().to_string();
            if ranges.insert(name.clone(), parse_range(range)?).is_some() {
                return Err(format!("variable `{name}` given twice"));
            }
        }
        Ok(SweepSpec { ranges })
    }
}

impl fmt::Display for SweepSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .ranges
            .iter()
            .map(|(k, r)| format!("{k}={}..{}", r.start(), r.end()))
            .collect();
        f.write_str(&parts.join(","))
    }
}

impl SweepSpec {
    /// Fills in defaults and rejects variables the suite does not use.
    pub fn resolve(&self, defaults: &[(&str, RangeInclusive<i64>)]) -> Result<SweepSpec, String> {
        for name in self.ranges.keys() {
            if !defaults.iter().any(|(d, _)| d == name) {
                let known: Vec<&str> = defaults.iter().map(|(d, _)| *d).collect();
                return Err(format!(
                    "unknown sweep variable `{name}` (expected {})",
                    known.join(", ")
                ));
            }
        }
        let ranges = defaults
            .iter()
            .map(|(name, default)| {
                let r = self
                    .ranges
                    .get(*name)
                    .cloned()
                    .unwrap_or_else(|| default.clone());
                (name.to_string(), r)
            })
            .collect();
        Ok(SweepSpec { ranges })
    }

    /// The range of a variable (after [`SweepSpec::resolve`]).
    pub fn range(&self, name: &str) -> RangeInclusive<i64> {
        self.ranges[name].clone()
    }

    /// Number of grid points, saturating.
    pub fn size(&self) -> u64 {
        self.ranges
            .values()
            .map(|r| (r.end() - r.start() + 1) as u64)
            .fold(1u64, |a, b| a.saturating_mul(b))
    }

    /// Errors when the grid exceeds `cap` points.
    pub fn check_cap(&self, cap: u64) -> Result<(), String> {
        if self.size() > cap {
            return Err(format!(
                "sweep {self} has {} points, above the cap of {cap} (raise --max-points)",
                self.size()
            ));
        }
        Ok(())
    }
}
