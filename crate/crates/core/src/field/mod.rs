//! Density dynamics over the compiled map: exact rectangle macrostates,
//! grid densities, and the discretized transfer operator.

pub mod grid;
pub mod macrostate;
pub mod operator;

pub use grid::{GridDensity, MASS_TOL};
pub use macrostate::{macrostate_orbit, FieldError, RectMacrostate};
pub use operator::{
    amari_discretization_check, AmariCheckReport, OperatorFile, TransferOperator,
};

use crate::goedel::NdaMachine;

/// Build the operator at resolution `n`, rasterize `r0`, and compare the
/// transfer-operator push with the discretized field step along `steps`
/// iterations.
pub fn amari_check_from_macrostate(
    m: &NdaMachine,
    r0: &RectMacrostate,
    steps: usize,
    n: usize,
) -> Result<AmariCheckReport, FieldError> {
    let op = TransferOperator::build(m, n)?;
    let d0 = GridDensity::rasterize(r0, n)?;
    amari_discretization_check(&op, &d0, steps)
}
