//! Piecewise-constant densities on an n×n grid over the unit square.
//!
//! Cell `(ix, iy)` covers `[ix/n,(ix+1)/n) x [iy/n,(iy+1)/n)` and is stored
//! at flat index `ix·n + iy` (row-major, y fastest). Values are densities
//! (probability per unit area), so a normalized grid sums to `n²`.

use serde::{Deserialize, Serialize};

use crate::goedel::Rect;
use crate::rational::Rat;

use super::macrostate::{FieldError, RectMacrostate};

pub const MASS_TOL: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GridDensity {
    n: usize,
    cells: Vec<f64>,
}

impl GridDensity {
    /// Validates shape, nonnegativity, and unit total mass (to 1e-12).
    pub fn new(n: usize, cells: Vec<f64>) -> Result<Self, FieldError> {
        if n == 0 || cells.len() != n * n {
            return Err(FieldError::DimensionMismatch {
                got: cells.len(),
                expected: n * n,
            });
        }
        let d = GridDensity { n, cells };
        let mass = d.mass();
        if !d.cells.iter().all(|v| *v >= 0.0) || (mass - 1.0).abs() > MASS_TOL {
            return Err(FieldError::NotNormalized { mass });
        }
        Ok(d)
    }

    /// The uniform density on the whole square.
    pub fn uniform(n: usize) -> Self {
        GridDensity {
            n,
            cells: vec![1.0; n * n],
        }
    }

    /// Rasterize a rectangular macrostate: every grid cell whose interior
    /// meets the support receives the macrostate's weight. Exact when the
    /// support boundaries lie on grid lines; otherwise the result fails
    /// normalization and is rejected.
    pub fn rasterize(r: &RectMacrostate, n: usize) -> Result<Self, FieldError> {
        let mut cells = vec![0.0; n * n];
        let weight = r.weight().to_f64();
        let s = r.support();
        let nr = Rat::from_int(n as i64);
        let lo_cell = |v: &Rat| -> usize {
            // first cell k with (k+1)/n > v, i.e. k = floor(v*n) for
            // half-open supports
            let scaled = v * &nr;
            let floor = scaled.numer() / scaled.denom();
            let k: i64 = i64::try_from(&floor).expect("grid index fits i64");
            k as usize
        };
        let hi_cell = |v: &Rat| -> usize {
            // last cell k with k/n < v, i.e. ceil(v*n) - 1
            let scaled = v * &nr;
            let num = scaled.numer();
            let den = scaled.denom();
            let div = num / den;
            let ceil: i64 = if (num % den) == num_bigint::BigInt::from(0) {
                i64::try_from(&div).expect("grid index fits i64")
            } else {
                i64::try_from(&div).expect("grid index fits i64") + 1
            };
            (ceil - 1) as usize
        };
        for ix in lo_cell(&s.x_lo)..=hi_cell(&s.x_hi).min(n - 1) {
            for iy in lo_cell(&s.y_lo)..=hi_cell(&s.y_hi).min(n - 1) {
                cells[ix * n + iy] = weight;
            }
        }
        GridDensity::new(n, cells)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cells(&self) -> &[f64] {
        &self.cells
    }

    pub fn get(&self, ix: usize, iy: usize) -> f64 {
        self.cells[ix * self.n + iy]
    }

    /// Total probability `Σ cells / n²`.
    pub fn mass(&self) -> f64 {
        let cell_area = 1.0 / (self.n * self.n) as f64;
        self.cells.iter().sum::<f64>() * cell_area
    }

    /// The rectangle covered by grid cell `(ix, iy)`.
    pub fn cell_rect(n: usize, ix: usize, iy: usize) -> Rect {
        let f = |k: usize| Rat::ratio(k as i64, n as i64);
        Rect {
            x_lo: f(ix),
            x_hi: f(ix + 1),
            y_lo: f(iy),
            y_hi: f(iy + 1),
        }
    }

    /// Binary form: 8-byte header (`n` then a reserved word, both u32
    /// little-endian) followed by the cells as little-endian f64.
    pub fn to_binary(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(8 + self.cells.len() * 8);
        out.extend_from_slice(&(self.n as u32).to_le_bytes());
        out.extend_from_slice(&0u32.to_le_bytes());
        for v in &self.cells {
            out.extend_from_slice(&v.to_le_bytes());
        }
        out
    }

    pub fn from_binary(bytes: &[u8]) -> Result<Self, FieldError> {
        if bytes.len() < 8 {
            return Err(FieldError::DimensionMismatch {
                got: bytes.len(),
                expected: 8,
            });
        }
        let n = u32::from_le_bytes(bytes[..4].try_into().expect("4 bytes")) as usize;
        let payload = &bytes[8..];
        if payload.len() != n * n * 8 {
            return Err(FieldError::DimensionMismatch {
                got: payload.len() / 8,
                expected: n * n,
            });
        }
        let cells = payload
            .chunks_exact(8)
            .map(|c| f64::from_le_bytes(c.try_into().expect("8 bytes")))
            .collect();
        GridDensity::new(n, cells)
    }
}
