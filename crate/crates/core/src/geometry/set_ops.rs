//! Set algebra on spherical polyhedra: union, intersection, containment,
//! equality. Containment subtracts cell by cell, expanding the complement
//! of the covering set into DNF branches of strict systems and deciding each
//! branch with Fourier-Motzkin.

use super::feasibility::feasible_rows;
use super::halfspace::{Cell, HalfSpace, Relation, SphSet};
use crate::num::{neg_vec, Int};
use crate::{Error, Result};

/// Default cap on explored DNF branches per containment query.
pub const DEFAULT_BRANCH_CAP: u64 = 1_000_000;

impl SphSet {
    pub fn union(&self, other: &SphSet) -> Result<SphSet> {
        self.check_dim(other)?;
        let mut cells = self.cells().to_vec();
        cells.extend_from_slice(other.cells());
        SphSet::new(self.dim(), cells)
    }

    pub fn intersect(&self, other: &SphSet) -> Result<SphSet> {
        self.check_dim(other)?;
        let mut cells = Vec::new();
        for a in self.cells() {
            for b in other.cells() {
                let mut cs = a.constraints().to_vec();
                cs.extend_from_slice(b.constraints());
                cells.push(Cell::new(self.dim(), cs)?);
            }
        }
        SphSet::new(self.dim(), cells)
    }

    /// True iff every point of `other` lies in `self`.
    pub fn contains(&self, other: &SphSet) -> Result<bool> {
        self.contains_with_cap(other, DEFAULT_BRANCH_CAP)
    }

    pub fn contains_with_cap(&self, other: &SphSet, cap: u64) -> Result<bool> {
        self.check_dim(other)?;
        let mut budget = cap;
        for cell in other.cells() {
            // A cell refining some covering cell (constraint superset) is
            // contained in it outright.
            if self
                .cells()
                .iter()
                .any(|d| d.constraints().iter().all(|c| cell.constraints().contains(c)))
            {
                continue;
            }
            let rows: Vec<(Vec<Int>, Relation)> = cell
                .constraints()
                .iter()
                .map(|c| (c.normal().to_vec(), c.relation()))
                .collect();
            if !feasible_rows(self.dim(), &rows)? {
                continue;
            }
            if !diff_is_empty(self.dim(), &rows, self.cells(), cap, &mut budget)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn equal(&self, other: &SphSet) -> Result<bool> {
        Ok(self.contains(other)? && other.contains(self)?)
    }

    fn check_dim(&self, other: &SphSet) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: other.dim(),
            });
        }
        Ok(())
    }
}

/// Is `rows ∩ complement(every cell)` empty? `rows` is feasible on entry;
/// each recursion level picks one negated constraint of the next cell.
fn diff_is_empty(
    dim: usize,
    rows: &[(Vec<Int>, Relation)],
    cover: &[Cell],
    cap: u64,
    budget: &mut u64,
) -> Result<bool> {
    let Some((cell, rest)) = cover.split_first() else {
        // All complement choices are in force and the system is feasible:
        // a point escapes the cover.
        return Ok(false);
    };
    if cell.constraints().is_empty() {
        // Complement of the full sphere: every branch dies here.
        return Ok(true);
    }
    for c in cell.constraints() {
        for negated in negate_constraint(c) {
            if *budget == 0 {
                return Err(Error::BranchLimitExceeded { cap });
            }
            *budget -= 1;
            let mut extended = rows.to_vec();
            extended.push(negated);
            if feasible_rows(dim, &extended)? && !diff_is_empty(dim, &extended, rest, cap, budget)?
            {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `not (v.x >= 0)` is `-v.x > 0`; `not (v.x = 0)` splits into two strict
/// branches.
fn negate_constraint(c: &HalfSpace) -> Vec<(Vec<Int>, Relation)> {
    match c.relation() {
        Relation::Ge => vec![(neg_vec(c.normal()), Relation::Gt)],
        Relation::Eq => vec![
            (c.normal().to_vec(), Relation::Gt),
            (neg_vec(c.normal()), Relation::Gt),
        ],
        Relation::Gt => unreachable!("stored cells are GE/EQ only"),
    }
}
