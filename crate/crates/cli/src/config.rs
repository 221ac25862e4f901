use std::path::Path;

use serde::Deserialize;
use yangian_qchar::EngineConfig;

use crate::args::Format;
use crate::CliError;

/// Settings read from `--config`; every field is optional in the file.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CliConfig {
    pub default_height_bound: u32,
    pub term_budget: usize,
    pub stabilization_k_ceiling: u32,
    pub output_format: Format,
}

impl Default for CliConfig {
    fn default() -> Self {
        let engine = EngineConfig::default();
        CliConfig {
            default_height_bound: 3,
            term_budget: engine.term_budget,
            stabilization_k_ceiling: engine.k_ceiling,
            output_format: Format::Json,
        }
    }
}

impl CliConfig {
    pub fn load(path: &Path) -> Result<CliConfig, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", path.display())))?;
        let config: CliConfig = serde_json::from_str(&text)
            .map_err(|e| CliError::Usage(format!("invalid config {}: {e}", path.display())))?;
        config.validate()?;
        Ok(config)
    }

    fn validate(&self) -> Result<(), CliError> {
        if self.default_height_bound == 0 || self.term_budget == 0 || self.stabilization_k_ceiling == 0 {
            return Err(CliError::Usage(
                "config bounds must be positive".into(),
            ));
        }
        Ok(())
    }

    pub fn engine(&self) -> EngineConfig {
        EngineConfig {
            term_budget: self.term_budget,
            k_ceiling: self.stabilization_k_ceiling,
            ..EngineConfig::default()
        }
    }
}
