//! Runtime configuration: a key=value file overridden by ORIGAMI_*
//! environment variables.

use origami_core::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct Config {
    /// Cap on orbit BFS vertices.
    pub max_vertices: usize,
    /// All-source BFS threshold for exact diameters.
    pub all_pairs_threshold: usize,
    /// Bound constant checked by the bounds suite and reported by sweeps.
    pub c_max: f64,
    /// Cap on the sweep range.
    pub sweep_max_n: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            max_vertices: origami_core::orbit::DEFAULT_MAX_VERTICES,
            all_pairs_threshold: origami_core::orbit::ALL_PAIRS_THRESHOLD,
            c_max: 10.0,
            sweep_max_n: 60,
        }
    }
}

impl Config {
    pub fn load(path: Option<&str>) -> Result<Config> {
        let mut config = Config::default();
        if let Some(path) = path {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Parse(format!("cannot read config {path}: {e}")))?;
            for (lineno, line) in text.lines().enumerate() {
                let line = line.trim();
                if line.is_empty() || line.starts_with('#') {
                    continue;
                }
                let (key, value) = line.split_once('=').ok_or_else(|| {
                    Error::Parse(format!("config line {} is not key=value", lineno + 1))
                })?;
                config.set(key.trim(), value.trim())?;
            }
        }
        for (key, var) in [
            ("max_vertices", "ORIGAMI_MAX_VERTICES"),
            ("all_pairs_threshold", "ORIGAMI_ALL_PAIRS_THRESHOLD"),
            ("c_max", "ORIGAMI_C_MAX"),
            ("sweep_max_n", "ORIGAMI_SWEEP_MAX_N"),
        ] {
            if let Ok(value) = std::env::var(var) {
                config.set(key, &value)?;
            }
        }
        Ok(config)
    }

    fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let bad = |e: String| Error::Parse(format!("bad config value for {key}: {e}"));
        match key {
            "max_vertices" => {
                self.max_vertices = value.parse().map_err(|e: std::num::ParseIntError| bad(e.to_string()))?
            }
            "all_pairs_threshold" => {
                self.all_pairs_threshold =
                    value.parse().map_err(|e: std::num::ParseIntError| bad(e.to_string()))?
            }
            "c_max" => {
                self.c_max = value.parse().map_err(|e: std::num::ParseFloatError| bad(e.to_string()))?
            }
            "sweep_max_n" => {
                self.sweep_max_n =
                    value.parse().map_err(|e: std::num::ParseIntError| bad(e.to_string()))?
            }
            other => return Err(Error::Parse(format!("unknown config key {other:?}"))),
        }
        Ok(())
    }
}
