use std::str::FromStr;

use crate::error::CliError;

/// Largest number of intervals a grid may have.
pub const MAX_INTERVALS: f64 = 1e7;

/// Inclusive uniform grid parsed from `start:stop:step`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub start: f64,
    pub stop: f64,
    pub step: f64,
    /// Decimal places of the written bounds, used to print clean nodes.
    decimals: usize,
}

impl GridSpec {
    pub fn len(&self) -> usize {
        // the stop value is included when it lies on the lattice up to rounding
        ((self.stop - self.start) / self.step * (1.0 + 1e-12)).floor() as usize + 1
    }

    pub fn points(&self) -> Vec<f64> {
        (0..self.len())
            .map(|i| {
                let x = self.start + i as f64 * self.step;
                // 0.1 + 2·0.1 prints as 0.30000000000000004 otherwise
                format!("{x:.*}", self.decimals).parse().unwrap_or(x)
            })
            .collect()
    }
}

fn decimals(s: &str) -> usize {
    let mantissa = s.split(['e', 'E']).next().unwrap_or(s);
    let frac = mantissa.split('.').nth(1).map_or(0, str::len);
    let exp: i64 = s.split(['e', 'E']).nth(1).and_then(|e| e.parse().ok()).unwrap_or(0);
    (frac as i64 - exp).clamp(0, 17) as usize
}

impl FromStr for GridSpec {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').collect();
        let [a, b, h] = parts[..] else {
            return Err(CliError::invalid(format!(
                "grid '{s}' must have the form start:stop:step"
            )));
        };
        let num = |p: &str| {
            p.trim()
                .parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| CliError::invalid(format!("'{p}' in grid '{s}' is not a finite number")))
        };
        let (start, stop, step) = (num(a)?, num(b)?, num(h)?);
        if !(step > 0.0) {
            return Err(CliError::invalid(format!("grid step must be positive, got {step}")));
        }
        if !(start < stop) {
            return Err(CliError::invalid(format!(
                "grid start {start} must be below stop {stop}"
            )));
        }
        if (stop - start) / step > MAX_INTERVALS {
            return Err(CliError::invalid(format!("grid '{s}' has more than 1e7 intervals")));
        }
        Ok(Self {
            start,
            stop,
            step,
            decimals: decimals(a.trim()).max(decimals(h.trim())),
        })
    }
}

/// Comma-separated list of reals, e.g. `0.5,1,2`.
pub fn parse_list(s: &str) -> Result<Vec<f64>, CliError> {
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| CliError::invalid(format!("'{p}' in list '{s}' is not a finite number")))
        })
        .collect()
}
