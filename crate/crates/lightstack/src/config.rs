//! Configuration documents describing a scene, parsed from TOML.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::model::{Pump, Scatterer, Stack, StackError};
use num_complex::Complex64;

/// Default sampling density for intensity profiles, points per wavelength.
pub const DEFAULT_GRID_POINTS_PER_WAVELENGTH: u32 = 256;

/// One scatterer entry of the configuration document.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ScattererConfig {
    pub position: f64,
    pub lambda: f64,
}

/// Pump block: `[re, im]` pairs for the two incoming waves.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PumpConfig {
    pub left: [f64; 2],
    pub right: [f64; 2],
}

/// The full configuration document.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SceneConfig {
    pub scatterers: Vec<ScattererConfig>,
    pub pump: PumpConfig,
    #[serde(default = "default_grid_points")]
    pub grid_points_per_wavelength: u32,
    #[serde(default)]
    pub seed: u64,
}

fn default_grid_points() -> u32 {
    DEFAULT_GRID_POINTS_PER_WAVELENGTH
}

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("configuration parse error: {0}")]
    Parse(#[from] toml::de::Error),
    #[error("invalid scene: {0}")]
    Invalid(#[from] StackError),
}

impl SceneConfig {
    pub fn from_toml(text: &str) -> Result<Self, ConfigError> {
        Ok(toml::from_str(text)?)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("scene config serializes")
    }

    pub fn stack(&self) -> Result<Stack, StackError> {
        let scatterers = self
            .scatterers
            .iter()
            .map(|s| Scatterer::new(s.position, s.lambda))
            .collect();
        let pump = Pump::new(
            Complex64::new(self.pump.left[0], self.pump.left[1]),
            Complex64::new(self.pump.right[0], self.pump.right[1]),
        );
        Stack::new(scatterers, pump)
    }

    pub fn from_stack(stack: &Stack, grid_points_per_wavelength: u32, seed: u64) -> Self {
        SceneConfig {
            scatterers: stack
                .scatterers()
                .iter()
                .map(|s| ScattererConfig {
                    position: s.position,
                    lambda: s.lambda,
                })
                .collect(),
            pump: PumpConfig {
                left: [stack.pump.left_amplitude.re, stack.pump.left_amplitude.im],
                right: [stack.pump.right_amplitude.re, stack.pump.right_amplitude.im],
            },
            grid_points_per_wavelength,
            seed,
        }
    }
}
