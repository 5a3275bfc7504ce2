//! Key-value defaults for `opint verify`, one setting per line:
//!
//! ```text
//! # comment
//! tol = 1e-6
//! format = csv
//! variant = series
//! grid.eq12_struve_halfline = nu=-0.5,-1 b=1:2:3
//! ```

use std::collections::BTreeMap;
use std::path::Path;

use anyhow::{bail, Context, Result};

#[derive(Debug, Default, Clone, PartialEq)]
pub struct Config {
    pub tol: Option<f64>,
    pub format: Option<String>,
    pub variant: Option<String>,
    pub out: Option<String>,
    /// Grid axis specs per identity id.
    pub grids: BTreeMap<String, Vec<String>>,
}

impl Config {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("cannot read config {}", path.display()))?;
        Self::parse(&text).with_context(|| format!("in config {}", path.display()))
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut cfg = Self::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                bail!("line {}: expected `key = value`", lineno + 1);
            };
            let (key, value) = (key.trim(), value.trim());
            match key {
                "tol" => {
                    cfg.tol = Some(value.parse().with_context(|| format!("line {}: bad tolerance", lineno + 1))?)
                }
                "format" => cfg.format = Some(value.to_string()),
                "variant" => cfg.variant = Some(value.to_string()),
                "out" => cfg.out = Some(value.to_string()),
                k if k.starts_with("grid.") => {
                    let id = &k["grid.".len()..];
                    cfg.grids
                        .entry(id.to_string())
                        .or_default()
                        .extend(value.split_whitespace().map(str::to_string));
                }
                k => bail!("line {}: unknown key {k:?}", lineno + 1),
            }
        }
        Ok(cfg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_keys_and_grids() {
        let cfg = Config::parse("# defaults\ntol = 1e-7\ngrid.eq30_lorentz_gauss = x=0,1\n\nformat = csv\n").unwrap();
        assert_eq!(cfg.tol, Some(1e-7));
        assert_eq!(cfg.format.as_deref(), Some("csv"));
        assert_eq!(cfg.grids["eq30_lorentz_gauss"], vec!["x=0,1".to_string()]);
        assert!(Config::parse("bogus = 1").is_err());
        assert!(Config::parse("tol 1e-3").is_err());
    }
}
