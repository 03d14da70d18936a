use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScaleMode {
    /// Thresholds are `eps` itself.
    Absolute,
    /// Thresholds are `eps` times a magnitude supplied by the caller, the
    /// largest absolute eigenvalue for definiteness tests.
    Relative,
}

#[derive(Debug, Clone, PartialEq, Error)]
#[error("tolerance must be a finite nonnegative number, got {0}")]
pub struct ToleranceError(pub f64);

/// Zero test used by every numeric verdict in the crate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    pub eps: f64,
    pub scale_mode: ScaleMode,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            eps: 1e-9,
            scale_mode: ScaleMode::Relative,
        }
    }
}

impl Tolerance {
    pub fn relative(eps: f64) -> Result<Self, ToleranceError> {
        Self::check(eps)?;
        Ok(Tolerance {
            eps,
            scale_mode: ScaleMode::Relative,
        })
    }

    pub fn absolute(eps: f64) -> Result<Self, ToleranceError> {
        Self::check(eps)?;
        Ok(Tolerance {
            eps,
            scale_mode: ScaleMode::Absolute,
        })
    }

    fn check(eps: f64) -> Result<(), ToleranceError> {
        if eps.is_finite() && eps >= 0.0 {
            Ok(())
        } else {
            Err(ToleranceError(eps))
        }
    }

    /// Magnitude below which a quantity measured against `scale` is zero.
    pub fn threshold(&self, scale: f64) -> f64 {
        match self.scale_mode {
            ScaleMode::Absolute => self.eps,
            ScaleMode::Relative => self.eps * scale.abs(),
        }
    }
}
