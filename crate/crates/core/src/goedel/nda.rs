//! Nonlinear dynamical automata: a rectangular partition of the unit
//! square with one affine-linear branch per cell, compiled from a
//! generalized shift through a Gödel coding.

use crate::rational::Rat;
use crate::symbolic::{GeneralizedShift, GsRule, SymbolId};

use super::coding::{CodingError, GoedelCoding};
use super::geometry::{Point, Rect};

/// One affine branch `p ↦ (a_x + λ_x·x, a_y + λ_y·y)` on its cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineBranch {
    pub cell: Rect,
    pub a_x: Rat,
    pub a_y: Rat,
    pub lambda_x: Rat,
    pub lambda_y: Rat,
    pub label: String,
}

impl AffineBranch {
    pub fn apply(&self, p: &Point) -> Point {
        Point::new(&self.a_x + &(&self.lambda_x * &p.x), &self.a_y + &(&self.lambda_y * &p.y))
    }

    /// Image of an axis-aligned rectangle (λ > 0 keeps orientation).
    pub fn apply_rect(&self, r: &Rect) -> Rect {
        Rect {
            x_lo: &self.a_x + &(&self.lambda_x * &r.x_lo),
            x_hi: &self.a_x + &(&self.lambda_x * &r.x_hi),
            y_lo: &self.a_y + &(&self.lambda_y * &r.y_lo),
            y_hi: &self.a_y + &(&self.lambda_y * &r.y_hi),
        }
    }

    /// Image of the branch's own cell.
    pub fn image(&self) -> Rect {
        self.apply_rect(&self.cell)
    }
}

/// A compiled piecewise affine-linear map with its coding.
///
/// Points outside every cell are fixed; the identity region is implicit.
#[derive(Debug)]
pub struct NdaMachine {
    branches: Vec<AffineBranch>,
    coding: GoedelCoding,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CompileError {
    #[error(transparent)]
    Coding(#[from] CodingError),
    #[error("rule {label:?} has no affine action on its cell: {reason}")]
    InexpressibleRule { label: String, reason: String },
    #[error("branches {first:?} and {second:?} have intersecting cells")]
    OverlappingCells { first: String, second: String },
    #[error("branch {label:?} maps its cell outside the unit square")]
    ImageOutOfSquare { label: String },
}

/// Per-branch domain and image, for symbologram rendering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchReport {
    pub cell: Rect,
    pub image: Rect,
    pub label: String,
}

impl NdaMachine {
    /// Validate that cells are pairwise disjoint and images stay inside
    /// the unit square.
    pub fn new(branches: Vec<AffineBranch>, coding: GoedelCoding) -> Result<Self, CompileError> {
        for (i, a) in branches.iter().enumerate() {
            for b in &branches[i + 1..] {
                if a.cell.intersects(&b.cell) {
                    return Err(CompileError::OverlappingCells {
                        first: a.label.clone(),
                        second: b.label.clone(),
                    });
                }
            }
        }
        let zero = Rat::zero();
        let one = Rat::one();
        for b in &branches {
            let img = b.image();
            if img.x_lo < zero || img.x_hi > one || img.y_lo < zero || img.y_hi > one {
                return Err(CompileError::ImageOutOfSquare {
                    label: b.label.clone(),
                });
            }
        }
        Ok(NdaMachine { branches, coding })
    }

    /// Compile a generalized shift: one branch per rule.
    ///
    /// The branch cell is the cylinder rectangle of the rule's concrete
    /// DoD words. The coefficients are fixed by requiring the branch to
    /// agree with the rule on every continuation of its cylinder: with
    /// consumed length `d` and effective replacement length `e` on a side
    /// of base `b`, the slope is `b^(d-e)` and the offset is
    /// `enc(DoE) - slope·enc(DoD)`. The dot shift is absorbed by moving
    /// symbols between the two replacement words; a shift that would pull
    /// symbols from beyond them has no affine form and is rejected.
    pub fn compile(gs: &GeneralizedShift, coding: GoedelCoding) -> Result<Self, CompileError> {
        let mut branches = Vec::with_capacity(gs.rules().len());
        for rule in gs.rules() {
            branches.push(compile_rule(rule, &coding)?);
        }
        NdaMachine::new(branches, coding)
    }

    pub fn branches(&self) -> &[AffineBranch] {
        &self.branches
    }

    pub fn coding(&self) -> &GoedelCoding {
        &self.coding
    }

    /// Branch whose cell contains `p`, if any.
    pub fn branch_at(&self, p: &Point) -> Option<&AffineBranch> {
        self.branches.iter().find(|b| b.cell.contains_point(p))
    }

    /// One map application: the matching branch, or the identity outside
    /// every cell.
    pub fn step(&self, p: &Point) -> Point {
        match self.branch_at(p) {
            Some(branch) => branch.apply(p),
            None => p.clone(),
        }
    }

    /// Orbit `p0, Φ(p0), ..., Φ^steps(p0)`.
    pub fn orbit(&self, p0: Point, steps: usize) -> Vec<Point> {
        let mut points = Vec::with_capacity(steps + 1);
        points.push(p0);
        for _ in 0..steps {
            let next = self.step(points.last().expect("nonempty"));
            points.push(next);
        }
        points
    }

    /// Domains of dependence and effect of every branch.
    pub fn report(&self) -> Vec<BranchReport> {
        self.branches
            .iter()
            .map(|b| BranchReport {
                cell: b.cell.clone(),
                image: b.image(),
                label: b.label.clone(),
            })
            .collect()
    }
}

fn compile_rule(rule: &GsRule, coding: &GoedelCoding) -> Result<AffineBranch, CompileError> {
    let inexpressible = |reason: &str| CompileError::InexpressibleRule {
        label: rule.label.clone(),
        reason: reason.to_string(),
    };

    let dod_stack: Vec<SymbolId> = concrete_prefix(rule, true);
    let dod_input: Vec<SymbolId> = concrete_prefix(rule, false);

    // absorb the dot shift into the replacement words
    let mut doe_stack = rule.doe_left.clone();
    let mut doe_input = rule.doe_right.clone();
    let (from, to, count) = if rule.shift >= 0 {
        (&mut doe_input, &mut doe_stack, rule.shift as usize)
    } else {
        (&mut doe_stack, &mut doe_input, (-rule.shift) as usize)
    };
    for _ in 0..count {
        if from.is_empty() {
            return Err(inexpressible(
                "dot shift crosses symbols outside the domain of effect",
            ));
        }
        to.insert(0, from.remove(0));
    }

    let cell = coding.cylinder_rect(&dod_stack, &dod_input)?;
    let axis = |base: u32, dod_value: Rat, doe_value: Rat, d: usize, e: usize| -> (Rat, Rat) {
        let lambda = Rat::int_pow(base, d as i32 - e as i32);
        let offset = &doe_value - &(&lambda * &dod_value);
        (lambda, offset)
    };
    let (lambda_x, a_x) = axis(
        coding.base_left(),
        coding.stack_value(&dod_stack)?,
        coding.stack_value(&doe_stack)?,
        dod_stack.len(),
        doe_stack.len(),
    );
    let (lambda_y, a_y) = axis(
        coding.base_right(),
        coding.input_value(&dod_input)?,
        coding.input_value(&doe_input)?,
        dod_input.len(),
        doe_input.len(),
    );

    let branch = AffineBranch {
        cell,
        a_x,
        a_y,
        lambda_x,
        lambda_y,
        label: rule.label.clone(),
    };
    // the image must be the DoE cylinder, inside the square by construction
    let expected = coding.cylinder_rect(&doe_stack, &doe_input)?;
    debug_assert_eq!(branch.image(), expected);
    Ok(branch)
}

fn concrete_prefix(rule: &GsRule, stack_side: bool) -> Vec<SymbolId> {
    let (pats, consumed) = if stack_side {
        (&rule.dod_left, rule.consumed_left())
    } else {
        (&rule.dod_right, rule.consumed_right())
    };
    pats[..consumed]
        .iter()
        .map(|p| match p {
            crate::symbolic::Pat::Sym(id) => *id,
            crate::symbolic::Pat::Any => unreachable!("wildcards follow the concrete prefix"),
        })
        .collect()
}
