//! Optional TOML defaults. Every key mirrors a flag; flags override.
//!
//! ```toml
//! format = "json"
//!
//! [count]
//! cap = 100000
//!
//! [grover]
//! marked = 0
//! max_n = 1048576
//!
//! [energy]
//! hbar = 1.05e-27
//! delta_x = 1.7e-8
//! mass = 1.67e-24
//! hbond = 7e-14
//! scale = 3.0
//!
//! [synth]
//! seed = 7
//! kind = "mixed"
//! ```

use std::path::Path;

use serde::Deserialize;

use crate::args::{Format, SynthKind};

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub format: Option<Format>,
    #[serde(default)]
    pub count: CountConfig,
    #[serde(default)]
    pub grover: GroverConfig,
    #[serde(default)]
    pub energy: EnergyConfig,
    #[serde(default)]
    pub synth: SynthConfig,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CountConfig {
    pub cap: Option<u64>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroverConfig {
    pub marked: Option<u64>,
    pub max_n: Option<u64>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EnergyConfig {
    pub hbar: Option<f64>,
    pub delta_x: Option<f64>,
    pub mass: Option<f64>,
    pub hbond: Option<f64>,
    pub scale: Option<f64>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SynthConfig {
    pub seed: Option<u64>,
    pub kind: Option<SynthKind>,
}

impl Config {
    pub fn parse(text: &str) -> Result<Self, String> {
        toml::from_str(text).map_err(|e| e.to_string())
    }

    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        Self::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_documented_example() {
        let doc = include_str!("config.rs");
        let example: String = doc
            .lines()
            .skip_while(|l| !l.starts_with("//! ```toml"))
            .skip(1)
            .take_while(|l| !l.starts_with("//! ```"))
            .map(|l| l.trim_start_matches("//!").trim_start())
            .map(|l| format!("{l}\n"))
            .collect();
        let config = Config::parse(&example).unwrap();
        assert_eq!(config.format, Some(Format::Json));
        assert_eq!(config.energy.scale, Some(3.0));
        assert_eq!(config.synth.kind, Some(SynthKind::Mixed));
    }

    #[test]
    fn empty_and_unknown() {
        assert!(Config::parse("").unwrap().format.is_none());
        assert!(Config::parse("colour = 1").is_err());
        assert!(Config::parse("[energy]\nhbar = \"x\"").is_err());
    }
}
