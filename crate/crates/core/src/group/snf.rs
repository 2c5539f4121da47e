//! Smith normal form over the integers and the abelianization it yields.

use num_traits::{Signed, Zero};

use crate::num::Int;
use crate::{Error, Result};

pub type IntMat = Vec<Vec<Int>>;

pub fn im_identity(n: usize) -> IntMat {
    (0..n)
        .map(|i| {
            let mut row = vec![Int::zero(); n];
            row[i] = Int::from(1);
            row
        })
        .collect()
}

pub fn im_mul(a: &IntMat, b: &IntMat) -> IntMat {
    let rows = a.len();
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    let mut out = vec![vec![Int::zero(); cols]; rows];
    for i in 0..rows {
        for k in 0..inner {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..cols {
                let add = &a[i][k] * &b[k][j];
                out[i][j] += add;
            }
        }
    }
    out
}

pub(crate) struct SnfFull {
    pub u: IntMat,
    #[allow(dead_code)]
    pub u_inv: IntMat,
    pub d: IntMat,
    pub v: IntMat,
    #[allow(dead_code)]
    pub v_inv: IntMat,
}

/// `U * A * V = D` with `D` diagonal, entries nonnegative and each dividing
/// the next; `U`, `V` unimodular.
pub fn smith_normal_form(a: &IntMat) -> (IntMat, IntMat, IntMat) {
    let f = snf_full(a);
    (f.u, f.d, f.v)
}

pub(crate) fn snf_full(a: &IntMat) -> SnfFull {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut d = a.clone();
    let mut u = im_identity(m);
    let mut u_inv = im_identity(m);
    let mut v = im_identity(n);
    let mut v_inv = im_identity(n);

    let swap_rows = |d: &mut IntMat, u: &mut IntMat, u_inv: &mut IntMat, i: usize, j: usize| {
        d.swap(i, j);
        u.swap(i, j);
        for row in u_inv.iter_mut() {
            row.swap(i, j);
        }
    };
    let swap_cols = |d: &mut IntMat, v: &mut IntMat, v_inv: &mut IntMat, i: usize, j: usize| {
        for row in d.iter_mut() {
            row.swap(i, j);
        }
        for row in v.iter_mut() {
            row.swap(i, j);
        }
        v_inv.swap(i, j);
    };
    // row_i -= q * row_j
    let add_row = |d: &mut IntMat, u: &mut IntMat, u_inv: &mut IntMat, i: usize, j: usize, q: &Int| {
        for k in 0..n {
            let sub = q * &d[j][k];
            d[i][k] -= sub;
        }
        for k in 0..m {
            let sub = q * &u[j][k];
            u[i][k] -= sub;
        }
        for row in u_inv.iter_mut() {
            let add = q * &row[i];
            row[j] += add;
        }
    };
    // col_i -= q * col_j
    let add_col = |d: &mut IntMat, v: &mut IntMat, v_inv: &mut IntMat, i: usize, j: usize, q: &Int| {
        for row in d.iter_mut() {
            let sub = q * &row[j];
            row[i] -= sub;
        }
        for row in v.iter_mut() {
            let sub = q * &row[j];
            row[i] -= sub;
        }
        for k in 0..n {
            let add = q * &v_inv[i][k];
            v_inv[j][k] += add;
        }
    };

    let mut t = 0;
    while t < m.min(n) {
        // Smallest nonzero entry in the remaining block becomes the pivot.
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                if d[i][j].is_zero() {
                    continue;
                }
                match &pivot {
                    None => pivot = Some((i, j)),
                    Some((pi, pj)) => {
                        if d[i][j].abs() < d[*pi][*pj].abs() {
                            pivot = Some((i, j));
                        }
                    }
                }
            }
        }
        let Some((pi, pj)) = pivot else {
            break;
        };
        if pi != t {
            swap_rows(&mut d, &mut u, &mut u_inv, t, pi);
        }
        if pj != t {
            swap_cols(&mut d, &mut v, &mut v_inv, t, pj);
        }

        let mut dirty = false;
        for i in t + 1..m {
            if d[i][t].is_zero() {
                continue;
            }
            let q = &d[i][t] / &d[t][t];
            if !q.is_zero() {
                add_row(&mut d, &mut u, &mut u_inv, i, t, &q);
            }
            if !d[i][t].is_zero() {
                dirty = true;
            }
        }
        for j in t + 1..n {
            if d[t][j].is_zero() {
                continue;
            }
            let q = &d[t][j] / &d[t][t];
            if !q.is_zero() {
                add_col(&mut d, &mut v, &mut v_inv, j, t, &q);
            }
            if !d[t][j].is_zero() {
                dirty = true;
            }
        }
        if dirty {
            continue;
        }

        // Divisibility: pull a bad entry into row t and restart the stage.
        let mut bad = None;
        'scan: for i in t + 1..m {
            for j in t + 1..n {
                if !(&d[i][j] % &d[t][t]).is_zero() {
                    bad = Some(i);
                    break 'scan;
                }
            }
        }
        if let Some(i) = bad {
            let minus_one = Int::from(-1);
            add_row(&mut d, &mut u, &mut u_inv, t, i, &minus_one);
            continue;
        }

        if d[t][t].is_negative() {
            for x in d[t].iter_mut() {
                *x = -std::mem::take(x);
            }
            for x in u[t].iter_mut() {
                *x = -std::mem::take(x);
            }
            for row in u_inv.iter_mut() {
                row[t] = -std::mem::take(&mut row[t]);
            }
        }
        t += 1;
    }

    SnfFull {
        u,
        u_inv,
        d,
        v,
        v_inv,
    }
}

/// Abelianization data computed from a presentation's exponent matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianData {
    pub ab_rank: usize,
    pub torsion: Vec<Int>,
    /// Maps generator exponent vectors onto the free part `Z^ab_rank`.
    pub ab_projection: IntMat,
}

/// Exponent-sum vector of a word given as signed 1-based generator indices.
pub fn word_exponent_vec(num_gens: usize, word: &[i64]) -> Result<Vec<Int>> {
    let mut e = vec![Int::zero(); num_gens];
    for &letter in word {
        if letter == 0 || letter.unsigned_abs() as usize > num_gens {
            return Err(Error::IllFormedWord(format!(
                "letter {letter} out of range for {num_gens} generators"
            )));
        }
        let idx = letter.unsigned_abs() as usize - 1;
        if letter > 0 {
            e[idx] += 1;
        } else {
            e[idx] -= 1;
        }
    }
    Ok(e)
}

/// Free rank, torsion and free-part projection of the abelianization of
/// `<gens | relators>`.
pub fn abelianize(num_gens: usize, relators: &[Vec<i64>]) -> Result<AbelianData> {
    // Columns are relators: the transpose of the exponent-sum matrix.
    let mut mt = vec![vec![Int::zero(); relators.len()]; num_gens];
    for (r, word) in relators.iter().enumerate() {
        let e = word_exponent_vec(num_gens, word)?;
        for (g, val) in e.into_iter().enumerate() {
            mt[g][r] = val;
        }
    }
    let f = snf_full(&mt);
    let min = num_gens.min(relators.len());
    let mut r0 = 0;
    let mut torsion = Vec::new();
    for i in 0..min {
        if f.d[i][i].is_zero() {
            break;
        }
        r0 += 1;
        if f.d[i][i] > Int::from(1) {
            torsion.push(f.d[i][i].clone());
        }
    }
    let ab_rank = num_gens - r0;
    let ab_projection = f.u[r0..].to_vec();
    Ok(AbelianData {
        ab_rank,
        torsion,
        ab_projection,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::int;

    fn mat(rows: &[&[i64]]) -> IntMat {
        rows.iter()
            .map(|r| r.iter().map(|&x| int(x)).collect())
            .collect()
    }

    fn check_snf(a: &IntMat) {
        let f = snf_full(a);
        let uav = im_mul(&im_mul(&f.u, a), &f.v);
        assert_eq!(uav, f.d, "U*A*V = D");
        let m = a.len();
        let n = a.first().map_or(0, Vec::len);
        assert_eq!(im_mul(&f.u, &f.u_inv), im_identity(m), "U unimodular");
        assert_eq!(im_mul(&f.v, &f.v_inv), im_identity(n), "V unimodular");
        let min = m.min(n);
        for i in 0..min {
            assert!(!f.d[i][i].is_negative());
            if i + 1 < min && !f.d[i][i].is_zero() && !f.d[i + 1][i + 1].is_zero() {
                assert!((&f.d[i + 1][i + 1] % &f.d[i][i]).is_zero(), "divisibility");
            }
            if f.d[i][i].is_zero() && i + 1 < min {
                assert!(f.d[i + 1][i + 1].is_zero(), "zeros trail");
            }
        }
        for i in 0..m {
            for j in 0..n {
                if i != j {
                    assert!(f.d[i][j].is_zero(), "off-diagonal zero");
                }
            }
        }
    }

    #[test]
    fn snf_scalar() {
        let a = mat(&[&[2]]);
        let (_, d, _) = smith_normal_form(&a);
        assert_eq!(d, mat(&[&[2]]));
    }

    #[test]
    fn snf_rank_one() {
        let a = mat(&[&[1, 0], &[0, 0]]);
        let (_, d, _) = smith_normal_form(&a);
        assert_eq!(d, mat(&[&[1, 0], &[0, 0]]));
    }

    #[test]
    fn snf_structure_small_cases() {
        for a in [
            mat(&[&[2, 4, 4], &[-6, 6, 12], &[10, 4, 16]]),
            mat(&[&[0, 0], &[0, 0]]),
            mat(&[&[1, 2, 3]]),
            mat(&[&[-1], &[0]]),
            mat(&[&[6, 10], &[10, 15]]),
        ] {
            check_snf(&a);
        }
    }

    #[test]
    fn abelianize_free_group() {
        let d = abelianize(2, &[]).unwrap();
        assert_eq!(d.ab_rank, 2);
        assert!(d.torsion.is_empty());
    }

    #[test]
    fn abelianize_bs12() {
        // t a t^-1 a^-2: exponent sums a -> -1, t -> 0.
        let d = abelianize(2, &[vec![2, 1, -2, -1, -1]]).unwrap();
        assert_eq!(d.ab_rank, 1);
        assert!(d.torsion.is_empty());
        // The surviving coordinate is generated by t.
        assert_eq!(d.ab_projection.len(), 1);
        let row = &d.ab_projection[0];
        assert!(row[0].is_zero());
        assert_eq!(row[1].abs(), int(1));
    }

    #[test]
    fn abelianize_commutator_relator() {
        let d = abelianize(2, &[vec![1, 2, -1, -2]]).unwrap();
        assert_eq!(d.ab_rank, 2);
        assert!(d.torsion.is_empty());
    }

    #[test]
    fn abelianize_with_torsion() {
        // <a | a^2> has abelianization Z/2.
        let d = abelianize(1, &[vec![1, 1]]).unwrap();
        assert_eq!(d.ab_rank, 0);
        assert_eq!(d.torsion, vec![int(2)]);
    }

    #[test]
    fn word_exponent_rejects_bad_letters() {
        assert!(word_exponent_vec(2, &[3]).is_err());
        assert!(word_exponent_vec(2, &[0]).is_err());
    }
}
