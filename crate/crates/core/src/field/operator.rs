//! Grid discretization of the transfer operator induced by a piecewise
//! affine map: each source cell's measure is distributed forward over the
//! target cells its image meets, in exact intersection proportions.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::goedel::{NdaMachine, Rect};
use crate::rational::Rat;

use super::grid::GridDensity;
use super::macrostate::FieldError;

/// Sparse row-stochastic operator on grid densities.
///
/// `rows[src]` lists `(target, fraction)` with the fractions of the source
/// cell's measure landing in each target cell; every row sums to exactly 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransferOperator {
    n: usize,
    rows: Vec<Vec<(usize, Rat)>>,
}

impl TransferOperator {
    /// Discretize the map at resolution `n`.
    ///
    /// Every branch-cell boundary and every image boundary must lie on a
    /// grid line; misaligned resolutions are rejected rather than smoothed.
    /// Cells inside a branch cell push their measure to the image of the
    /// cell rectangle; cells outside every branch keep their measure
    /// (identity region). Because the map need not be injective, a target
    /// cell may collect from many sources.
    pub fn build(m: &NdaMachine, n: usize) -> Result<Self, FieldError> {
        if n == 0 {
            return Err(FieldError::ResolutionMismatch {
                n,
                boundary: "n must be positive".to_string(),
            });
        }
        let nr = Rat::from_int(n as i64);
        let on_grid = |v: &Rat| (v * &nr).is_integer();
        for b in m.branches() {
            let img = b.image();
            for (rect, what) in [(&b.cell, "cell"), (&img, "image")] {
                for v in [&rect.x_lo, &rect.x_hi, &rect.y_lo, &rect.y_hi] {
                    if !on_grid(v) {
                        return Err(FieldError::ResolutionMismatch {
                            n,
                            boundary: format!("{} boundary {} of branch {:?}", what, v, b.label),
                        });
                    }
                }
            }
        }

        let mut rows = Vec::with_capacity(n * n);
        for ix in 0..n {
            for iy in 0..n {
                let src = GridDensity::cell_rect(n, ix, iy);
                let row = match m.branches().iter().find(|b| b.cell.intersects(&src)) {
                    None => vec![(ix * n + iy, Rat::one())],
                    Some(branch) => {
                        // alignment makes every intersecting cell a subset
                        debug_assert!(branch.cell.contains_rect(&src));
                        let img = branch.apply_rect(&src);
                        distribute(&img, n)
                    }
                };
                debug_assert_eq!(
                    row.iter().fold(Rat::zero(), |acc, (_, f)| acc + f),
                    Rat::one(),
                    "row must conserve measure"
                );
                rows.push(row);
            }
        }
        Ok(TransferOperator { n, rows })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<(usize, Rat)>] {
        &self.rows
    }

    /// Push a density one step forward. Grid cells all have equal area, so
    /// densities transform with the same fractions as masses.
    pub fn apply(&self, d: &GridDensity) -> Result<GridDensity, FieldError> {
        if d.n() != self.n {
            return Err(FieldError::DimensionMismatch {
                got: d.n() * d.n(),
                expected: self.n * self.n,
            });
        }
        let mut out = vec![0.0; self.n * self.n];
        for (src, row) in self.rows.iter().enumerate() {
            let v = d.cells()[src];
            if v == 0.0 {
                continue;
            }
            for (tgt, frac) in row {
                out[*tgt] += v * frac.to_f64();
            }
        }
        GridDensity::new(self.n, out)
    }

    /// One Euler step of the field equation with kernel = this operator:
    /// `u' = (1 - dt/τ)·u + (dt/τ)·(op u)` for linear activation.
    pub fn euler_step(
        &self,
        d: &GridDensity,
        dt_over_tau: f64,
    ) -> Result<GridDensity, FieldError> {
        let pushed = self.apply(d)?;
        let cells = d
            .cells()
            .iter()
            .zip(pushed.cells())
            .map(|(u, pu)| (1.0 - dt_over_tau) * u + dt_over_tau * pu)
            .collect();
        GridDensity::new(self.n, cells)
    }
}

/// Split an image rectangle's measure over the grid cells it meets,
/// proportionally to exact intersection areas.
fn distribute(img: &Rect, n: usize) -> Vec<(usize, Rat)> {
    let area = img.area();
    let mut row = Vec::new();
    let span = |lo: &Rat, hi: &Rat| -> (usize, usize) {
        let nr = Rat::from_int(n as i64);
        let first = floor_int(&(lo * &nr));
        let last = ceil_int(&(hi * &nr)) - 1;
        (first as usize, (last as usize).min(n - 1))
    };
    let (x0, x1) = span(&img.x_lo, &img.x_hi);
    let (y0, y1) = span(&img.y_lo, &img.y_hi);
    for ix in x0..=x1 {
        for iy in y0..=y1 {
            let cell = GridDensity::cell_rect(n, ix, iy);
            if let Some(overlap) = img.intersection(&cell) {
                row.push((ix * n + iy, overlap.area() / &area));
            }
        }
    }
    row
}

fn floor_int(v: &Rat) -> i64 {
    let q = v.numer() / v.denom();
    i64::try_from(&q).expect("grid index fits i64")
}

fn ceil_int(v: &Rat) -> i64 {
    let q = v.numer() / v.denom();
    let q: i64 = i64::try_from(&q).expect("grid index fits i64");
    if v.is_integer() {
        q
    } else {
        q + 1
    }
}

/// Comparison of the operator push with the discretized field step.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct AmariCheckReport {
    pub n: usize,
    pub steps: usize,
    /// Max |fp_apply - euler(τ=1)| over all cells and steps; the two are
    /// the same linear map, so this must be exactly 0.
    pub max_deviation: f64,
    /// Max |mass - 1| along the evolution.
    pub max_mass_drift: f64,
}

/// Verify that the Frobenius-Perron push equals one Euler step of the
/// field dynamics with τ = dt and linear activation, along an orbit.
pub fn amari_discretization_check(
    op: &TransferOperator,
    d0: &GridDensity,
    steps: usize,
) -> Result<AmariCheckReport, FieldError> {
    let mut d = d0.clone();
    let mut max_dev: f64 = 0.0;
    let mut max_drift: f64 = (d.mass() - 1.0).abs();
    for _ in 0..steps {
        let pushed = op.apply(&d)?;
        let euler = op.euler_step(&d, 1.0)?;
        for (a, b) in pushed.cells().iter().zip(euler.cells()) {
            max_dev = max_dev.max((a - b).abs());
        }
        max_drift = max_drift.max((pushed.mass() - 1.0).abs());
        d = pushed;
    }
    Ok(AmariCheckReport {
        n: op.n(),
        steps,
        max_deviation: max_dev,
        max_mass_drift: max_drift,
    })
}

/// On-disk form: sparse triples with exact fractions.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct OperatorFile {
    pub n: usize,
    /// `(source, target, fraction)` triples, sorted by source then target.
    pub entries: Vec<(usize, usize, Rat)>,
}

impl OperatorFile {
    pub fn from_operator(op: &TransferOperator) -> Self {
        let mut entries = Vec::new();
        for (src, row) in op.rows().iter().enumerate() {
            let mut sorted: Vec<_> = row.clone();
            sorted.sort_by_key(|(tgt, _)| *tgt);
            for (tgt, frac) in sorted {
                entries.push((src, tgt, frac));
            }
        }
        OperatorFile {
            n: op.n(),
            entries,
        }
    }

    pub fn into_operator(self) -> Result<TransferOperator, FieldError> {
        let mut rows: BTreeMap<usize, Vec<(usize, Rat)>> = BTreeMap::new();
        for (src, tgt, frac) in self.entries {
            if src >= self.n * self.n || tgt >= self.n * self.n {
                return Err(FieldError::DimensionMismatch {
                    got: src.max(tgt),
                    expected: self.n * self.n,
                });
            }
            rows.entry(src).or_default().push((tgt, frac));
        }
        let rows = (0..self.n * self.n)
            .map(|src| rows.remove(&src).unwrap_or_default())
            .collect();
        Ok(TransferOperator { n: self.n, rows })
    }
}
