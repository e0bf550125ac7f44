use crate::error::{Error, Result};

/// Resource limits for tensor-power computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest allowed number of basis words in a single chain group.
    pub max_columns: usize,
    /// Largest allowed tensor degree.
    pub max_degree: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_columns: 20_000,
            max_degree: 7,
        }
    }
}

impl Caps {
    pub fn unlimited() -> Self {
        Caps {
            max_columns: usize::MAX,
            max_degree: usize::MAX,
        }
    }

    /// Checks that `dim^degree` words are within the cap.
    pub fn check_power(&self, what: &str, dim: usize, degree: usize) -> Result<()> {
        if degree > self.max_degree {
            return Err(Error::CapExceeded {
                what: format!("{what} (degree {degree} exceeds max degree {})", self.max_degree),
                required: (dim as u128).saturating_pow(degree as u32),
                cap: self.max_columns,
            });
        }
        self.check_count(what, (dim as u128).saturating_pow(degree as u32))
    }

    pub fn check_count(&self, what: &str, required: u128) -> Result<()> {
        if required > self.max_columns as u128 {
            return Err(Error::CapExceeded {
                what: what.to_string(),
                required,
                cap: self.max_columns,
            });
        }
        Ok(())
    }
}
