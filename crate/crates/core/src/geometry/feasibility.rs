//! Exact feasibility of homogeneous linear systems over the reals.
//!
//! The question is always: does a NONZERO real vector satisfy every
//! constraint? Nonzero-ness is enforced by `2*dim` anchored sub-queries, one
//! per signed coordinate direction; by homogeneity `x_i >= 1` is achievable
//! exactly when `x_i > 0`, so each anchor is a single strict row.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use super::halfspace::{HalfSpace, Relation};
use crate::num::{canonical_sign, combine, is_zero_vec, neg_vec, primitive, Int};
use crate::{Error, Result};

/// A GE/EQ/GT system posed for nonzero solvability.
#[derive(Clone, Debug)]
pub struct FeasibilitySystem {
    dim: usize,
    constraints: Vec<HalfSpace>,
}

impl FeasibilitySystem {
    pub fn new(dim: usize, constraints: Vec<HalfSpace>) -> Result<Self> {
        for c in &constraints {
            if c.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: c.dim(),
                });
            }
        }
        Ok(Self { dim, constraints })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn constraints(&self) -> &[HalfSpace] {
        &self.constraints
    }
}

/// True iff some nonzero real vector satisfies every constraint.
pub fn feasible(sys: &FeasibilitySystem) -> Result<bool> {
    let rows: Vec<(Vec<Int>, Relation)> = sys
        .constraints
        .iter()
        .map(|c| (c.normal().to_vec(), c.relation()))
        .collect();
    feasible_rows(sys.dim, &rows)
}

/// Row-level entry point shared with set algebra, which needs to pose
/// transient strict rows that never live in a stored cell.
pub(crate) fn feasible_rows(dim: usize, rows: &[(Vec<Int>, Relation)]) -> Result<bool> {
    for (normal, _) in rows {
        if normal.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: normal.len(),
            });
        }
    }
    for i in 0..dim {
        for sign in [1i64, -1] {
            let mut anchored = rows.to_vec();
            let mut anchor = vec![Int::zero(); dim];
            anchor[i] = Int::from(sign);
            anchored.push((anchor, Relation::Gt));
            if fm_feasible(dim, anchored) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Fourier-Motzkin elimination with strict-inequality tracking. Decides
/// whether the (possibly zero) solution set of the rows is nonempty.
fn fm_feasible(dim: usize, mut rows: Vec<(Vec<Int>, Relation)>) -> bool {
    loop {
        match simplify(&mut rows) {
            Verdict::Infeasible => return false,
            Verdict::Open => {}
        }
        if rows.is_empty() {
            return true;
        }

        // Equalities substitute a variable outright.
        if let Some((idx, var)) = rows.iter().enumerate().find_map(|(i, (n, rel))| {
            (*rel == Relation::Eq).then(|| (i, n.iter().position(|c| !c.is_zero()).unwrap()))
        }) {
            let (eq_row, _) = rows.remove(idx);
            substitute(&mut rows, &eq_row, var);
            continue;
        }

        let Some(var) = cheapest_variable(dim, &rows) else {
            // No variable occurs in any row; simplify() already disposed of
            // zero rows, so this is unreachable, but be safe.
            return true;
        };
        eliminate(&mut rows, var);
        if rows.len() >= 16 {
            drop_pairwise_redundant(&mut rows);
        }
    }
}

enum Verdict {
    Infeasible,
    Open,
}

/// Primitive-normalizes rows, drops vacuous ones, merges rows sharing a
/// normal direction and detects single-direction contradictions.
fn simplify(rows: &mut Vec<(Vec<Int>, Relation)>) -> Verdict {
    // Orientation-aware bucket per canonical direction.
    #[derive(Default)]
    struct Bucket {
        ge_pos: bool,
        gt_pos: bool,
        ge_neg: bool,
        gt_neg: bool,
        eq: bool,
    }

    let mut buckets: BTreeMap<Vec<Int>, Bucket> = BTreeMap::new();
    for (normal, rel) in rows.drain(..) {
        if is_zero_vec(&normal) {
            match rel {
                Relation::Gt => return Verdict::Infeasible,
                Relation::Ge | Relation::Eq => continue,
            }
        }
        let normal = primitive(&normal).expect("nonzero");
        let key = canonical_sign(&normal);
        let pos = normal == key;
        let b = buckets.entry(key).or_default();
        match (rel, pos) {
            (Relation::Eq, _) => b.eq = true,
            (Relation::Ge, true) => b.ge_pos = true,
            (Relation::Ge, false) => b.ge_neg = true,
            (Relation::Gt, true) => b.gt_pos = true,
            (Relation::Gt, false) => b.gt_neg = true,
        }
    }

    for (key, b) in buckets {
        let eq = b.eq || (b.ge_pos && b.ge_neg);
        if (eq && (b.gt_pos || b.gt_neg))
            || (b.gt_pos && b.gt_neg)
            || (b.gt_pos && b.ge_neg)
            || (b.ge_pos && b.gt_neg)
        {
            return Verdict::Infeasible;
        }
        if eq {
            rows.push((key, Relation::Eq));
        } else {
            if b.gt_pos {
                rows.push((key.clone(), Relation::Gt));
            } else if b.ge_pos {
                rows.push((key.clone(), Relation::Ge));
            }
            if b.gt_neg {
                rows.push((neg_vec(&key), Relation::Gt));
            } else if b.ge_neg {
                rows.push((neg_vec(&key), Relation::Ge));
            }
        }
    }
    Verdict::Open
}

/// Zeroes column `var` in every row using the equality row `eq_row`.
fn substitute(rows: &mut [(Vec<Int>, Relation)], eq_row: &[Int], var: usize) {
    let p = &eq_row[var];
    let p_abs = p.abs();
    let sign = if p.is_negative() { -1 } else { 1 };
    for (normal, _) in rows.iter_mut() {
        let c = normal[var].clone();
        if c.is_zero() {
            continue;
        }
        let factor = -(Int::from(sign) * c);
        *normal = combine(&p_abs, normal, &factor, eq_row);
        debug_assert!(normal[var].is_zero());
    }
}

/// Variable whose elimination produces the fewest new rows.
fn cheapest_variable(dim: usize, rows: &[(Vec<Int>, Relation)]) -> Option<usize> {
    let mut best: Option<(usize, usize)> = None;
    for var in 0..dim {
        let mut pos = 0usize;
        let mut neg = 0usize;
        let mut occurs = false;
        for (normal, _) in rows {
            if normal[var].is_positive() {
                pos += 1;
                occurs = true;
            } else if normal[var].is_negative() {
                neg += 1;
                occurs = true;
            }
        }
        if !occurs {
            continue;
        }
        let cost = pos * neg;
        if best.map_or(true, |(_, c)| cost < c) {
            best = Some((var, cost));
        }
        if cost == 0 {
            break;
        }
    }
    best.map(|(v, _)| v)
}

/// Classic inequality elimination: keep rows with zero coefficient, combine
/// each positive row with each negative row. GT is contagious.
fn eliminate(rows: &mut Vec<(Vec<Int>, Relation)>, var: usize) {
    let mut zero = Vec::new();
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    for row in rows.drain(..) {
        if row.0[var].is_zero() {
            zero.push(row);
        } else if row.0[var].is_positive() {
            pos.push(row);
        } else {
            neg.push(row);
        }
    }
    if pos.is_empty() || neg.is_empty() {
        // The variable is unbounded on one side: those rows impose nothing.
        *rows = zero;
        return;
    }
    for (pn, pr) in &pos {
        for (nn, nr) in &neg {
            let a = nn[var].abs();
            let b = pn[var].clone();
            let comb = combine(&a, pn, &b, nn);
            debug_assert!(comb[var].is_zero());
            let rel = if *pr == Relation::Gt || *nr == Relation::Gt {
                Relation::Gt
            } else {
                Relation::Ge
            };
            zero.push((comb, rel));
        }
    }
    *rows = zero;
}

/// Drops rows that are nonnegative combinations of two others. A partial
/// sweep is enough: this mitigates row blow-up, correctness never depends
/// on it.
fn drop_pairwise_redundant(rows: &mut Vec<(Vec<Int>, Relation)>) {
    const SCAN: usize = 48;
    let upper = rows.len().min(SCAN);
    let mut removed = vec![false; rows.len()];
    for t in 0..rows.len() {
        if rows[t].1 == Relation::Eq {
            continue;
        }
        'pairs: for i in 0..upper {
            if i == t || removed[i] || rows[i].1 == Relation::Eq {
                continue;
            }
            for j in (i + 1)..upper {
                if j == t || removed[j] || rows[j].1 == Relation::Eq {
                    continue;
                }
                if let Some(rel) = implied_by_pair(&rows[t].0, &rows[i], &rows[j]) {
                    let redundant = match rows[t].1 {
                        Relation::Ge => true,
                        Relation::Gt => rel == Relation::Gt,
                        Relation::Eq => false,
                    };
                    if redundant {
                        removed[t] = true;
                        break 'pairs;
                    }
                }
            }
        }
    }
    let mut idx = 0;
    rows.retain(|_| {
        let keep = !removed[idx];
        idx += 1;
        keep
    });
}

/// If `target = la*a + mu*b` with `la, mu >= 0`, returns the relation the
/// combination implies (GT when a strict row enters with positive weight).
fn implied_by_pair(
    target: &[Int],
    a: &(Vec<Int>, Relation),
    b: &(Vec<Int>, Relation),
) -> Option<Relation> {
    let (an, ar) = a;
    let (bn, br) = b;
    let n = target.len();
    // Two coordinates with an invertible 2x2 minor.
    let mut pivot = None;
    'outer: for i in 0..n {
        for j in (i + 1)..n {
            let det = &an[i] * &bn[j] - &an[j] * &bn[i];
            if !det.is_zero() {
                pivot = Some((i, j, det));
                break 'outer;
            }
        }
    }
    let (i, j, det) = pivot?;
    // Cramer, scaled by det: la = det_la / det, mu = det_mu / det.
    let det_la = &target[i] * &bn[j] - &target[j] * &bn[i];
    let det_mu = &an[i] * &target[j] - &an[j] * &target[i];
    let (la_num, mu_num, den) = if det.is_negative() {
        (-det_la, -det_mu, -det)
    } else {
        (det_la, det_mu, det)
    };
    if la_num.is_negative() || mu_num.is_negative() {
        return None;
    }
    // Verify every coordinate: den*target == la_num*a + mu_num*b.
    for k in 0..n {
        if &den * &target[k] != &la_num * &an[k] + &mu_num * &bn[k] {
            return None;
        }
    }
    let strict = (la_num.is_positive() && *ar == Relation::Gt)
        || (mu_num.is_positive() && *br == Relation::Gt);
    Some(if strict { Relation::Gt } else { Relation::Ge })
}
