//! Uniform probability densities with rectangular support and their exact
//! evolution: the map sends such a density to the uniform density on the
//! image rectangle, with weight 1/area.

use serde::{Deserialize, Serialize};

use crate::goedel::{NdaMachine, Rect};
use crate::rational::Rat;

/// A uniform density `weight · χ_support` with `weight = 1/area(support)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RectMacrostate {
    support: Rect,
    weight: Rat,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("macrostate {support} straddles the partition at step {step}")]
    StraddlesPartition { support: String, step: usize },
    #[error("grid resolution {n} does not align with {boundary} (needs {boundary} · n integral)")]
    ResolutionMismatch { n: usize, boundary: String },
    #[error("density has {got} cells, operator expects {expected}")]
    DimensionMismatch { got: usize, expected: usize },
    #[error("density mass {mass} deviates from 1 by more than 1e-12")]
    NotNormalized { mass: f64 },
}

impl RectMacrostate {
    /// Uniform density on `support`; the weight is forced to `1/area`.
    pub fn new(support: Rect) -> Self {
        let weight = support.area().recip();
        RectMacrostate { support, weight }
    }

    pub fn support(&self) -> &Rect {
        &self.support
    }

    pub fn weight(&self) -> &Rat {
        &self.weight
    }

    pub fn area(&self) -> Rat {
        self.support.area()
    }

    /// One exact evolution step.
    ///
    /// The support must lie entirely inside one branch cell (then the
    /// image rectangle carries the image density) or entirely in the
    /// identity region (then nothing moves). A support meeting a cell
    /// without being contained in it is inconsistent with the partition.
    pub fn step(&self, m: &NdaMachine, step_index: usize) -> Result<RectMacrostate, FieldError> {
        for branch in m.branches() {
            if branch.cell.contains_rect(&self.support) {
                return Ok(RectMacrostate::new(branch.apply_rect(&self.support)));
            }
            if branch.cell.intersects(&self.support) {
                return Err(FieldError::StraddlesPartition {
                    support: self.support.to_string(),
                    step: step_index,
                });
            }
        }
        Ok(self.clone())
    }
}

/// Exact orbit `r0, Φ(r0), ..., Φ^steps(r0)` of a rectangular macrostate.
pub fn macrostate_orbit(
    m: &NdaMachine,
    r0: RectMacrostate,
    steps: usize,
) -> Result<Vec<RectMacrostate>, FieldError> {
    let mut orbit = Vec::with_capacity(steps + 1);
    orbit.push(r0);
    for k in 0..steps {
        let next = orbit.last().expect("nonempty").step(m, k)?;
        orbit.push(next);
    }
    Ok(orbit)
}
