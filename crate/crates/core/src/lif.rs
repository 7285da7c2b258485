use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Leaky integrate-and-fire neuron constants, shared between the moment
/// mapping and the spiking simulator. Units: time in ms, potential in mV,
/// so currents are mV/ms and the leak is 1/ms.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LifConstants {
    /// Leak conductance L (1/ms).
    pub leak: f64,
    /// Firing threshold V_th (mV).
    pub v_threshold: f64,
    /// Reset potential V_res (mV).
    pub v_reset: f64,
    /// Refractory period T_ref (ms).
    pub t_refractory: f64,
}

impl Default for LifConstants {
    fn default() -> Self {
        LifConstants {
            leak: 0.05,
            v_threshold: 20.0,
            v_reset: 0.0,
            t_refractory: 5.0,
        }
    }
}

impl LifConstants {
    pub fn validate(&self) -> Result<()> {
        if !(self.leak > 0.0 && self.leak.is_finite()) {
            return Err(Error::domain(format!("leak must be positive, got {}", self.leak)));
        }
        if !(self.v_threshold > self.v_reset) {
            return Err(Error::domain(format!(
                "v_threshold ({}) must exceed v_reset ({})",
                self.v_threshold, self.v_reset
            )));
        }
        if !(self.t_refractory >= 0.0 && self.t_refractory.is_finite()) {
            return Err(Error::domain(format!(
                "t_refractory must be non-negative, got {}",
                self.t_refractory
            )));
        }
        Ok(())
    }

    /// Rheobase current L * V_th: constant drive below this never fires.
    pub fn rheobase(&self) -> f64 {
        self.leak * self.v_threshold
    }

    /// Hard ceiling on the firing rate set by the refractory period.
    pub fn max_rate(&self) -> f64 {
        if self.t_refractory > 0.0 {
            1.0 / self.t_refractory
        } else {
            f64::INFINITY
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_valid() {
        let k = LifConstants::default();
        k.validate().unwrap();
        assert_eq!(k.rheobase(), 1.0);
        assert_eq!(k.max_rate(), 0.2);
    }

    #[test]
    fn rejects_bad_constants() {
        let mut k = LifConstants::default();
        k.leak = 0.0;
        assert!(k.validate().is_err());
        let mut k = LifConstants::default();
        k.v_reset = 25.0;
        assert!(k.validate().is_err());
        let mut k = LifConstants::default();
        k.t_refractory = -1.0;
        assert!(k.validate().is_err());
    }
}
