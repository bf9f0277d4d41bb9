use std::time::Duration;

use exuniv::lr::DEFAULT_LR_CAP;
use exuniv::tableau::DEFAULT_ENUMERATION_CAP;
use serde::Serialize;

pub const DEFAULT_TOLERANCE: f64 = 1e-9;
pub const DEFAULT_SEED: u64 = 20_240_517;
pub const DEFAULT_TIME_BUDGET_MS: u64 = 300_000;
pub const DEFAULT_PRECISION: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OutputFormat {
    Text,
    Json,
}

/// Settings shared by all subcommands.
#[derive(Clone, Debug, Serialize)]
pub struct CliConfig {
    pub tolerance: f64,
    pub enumeration_cap: usize,
    pub lr_cap: usize,
    pub output: OutputFormat,
    pub time_budget_ms: u64,
    pub seed: u64,
    pub precision: usize,
}

impl Default for CliConfig {
    fn default() -> Self {
        CliConfig {
            tolerance: DEFAULT_TOLERANCE,
            enumeration_cap: DEFAULT_ENUMERATION_CAP,
            lr_cap: DEFAULT_LR_CAP,
            output: OutputFormat::Text,
            time_budget_ms: DEFAULT_TIME_BUDGET_MS,
            seed: DEFAULT_SEED,
            precision: DEFAULT_PRECISION,
        }
    }
}

impl CliConfig {
    pub fn validate(&self) -> Result<(), String> {
        if !(self.tolerance > 0.0 && self.tolerance < 1e-3) {
            return Err(format!("tolerance must lie in (0, 1e-3), got {}", self.tolerance));
        }
        if self.enumeration_cap == 0 {
            return Err("enumeration cap must be positive".into());
        }
        if self.lr_cap == 0 {
            return Err("LR cap must be positive".into());
        }
        if self.time_budget_ms == 0 {
            return Err("time budget must be positive".into());
        }
        Ok(())
    }

    pub fn time_budget(&self) -> Duration {
        Duration::from_millis(self.time_budget_ms)
    }

    pub fn json(&self) -> bool {
        self.output == OutputFormat::Json
    }
}
