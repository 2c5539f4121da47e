//! Sigma-invariant complements of `X(G)` and `X(G)/W(G)` from the sigma
//! data of `G`, with independent pointwise case evaluations as oracles.
//!
//! Every constructed set is a union of kernel slices and pairwise cone sums:
//! `V_i` pairs the sigma^1 complement of `G` with the character subspace of
//! the i-th retraction, `M_i` does the same with the sigma^2 complement, and
//! the mixed region is covered by `V_i + V_j`. The pullbacks include kernel
//! rays by design; each is intersected with a subspace cell on which those
//! rays collapse to the origin.

use super::result::{Exactness, SigmaResult};
use crate::geometry::{RayPoint, SphSet};
use crate::group::{xg_space, Coefficient, SigmaData, Tri, XGSpace};
use crate::num::{is_zero_vec, Int};
use crate::{Error, Result};

fn require(flag: Tri, name: &str, hyps: &mut Vec<String>) -> Result<()> {
    match flag {
        Tri::True => Ok(()),
        Tri::False => Err(Error::HypothesisViolated { flag: name.into() }),
        Tri::Unknown => {
            hyps.push(name.to_string());
            Ok(())
        }
    }
}

fn coeff_flag_name(coeff: Coefficient) -> Result<&'static str> {
    match coeff {
        Coefficient::Z => Ok("is_fp2"),
        Coefficient::Htpy => Ok("is_fp"),
        Coefficient::FieldQ => Err(Error::InvalidArgument(
            "field coefficients are not defined for this construction".into(),
        )),
    }
}

fn coeff_flag(s: &SigmaData, coeff: Coefficient) -> Result<Tri> {
    Ok(match coeff {
        Coefficient::Z => s.owner().flags.is_fp2,
        Coefficient::Htpy => s.owner().flags.is_fp,
        Coefficient::FieldQ => {
            return Err(Error::InvalidArgument(
                "field coefficients are not defined for this construction".into(),
            ))
        }
    })
}

/// The three sigma^1 kernel slices of the complement decomposition.
pub(crate) fn v_pieces(s: &SigmaData, x: &XGSpace) -> Result<[SphSet; 3]> {
    let s1 = s.sigma1c()?;
    let v1 = SphSet::from_cell(x.second_block_zero()?)?.intersect(&s1.preimage(x.c1.matrix())?)?;
    let v2 = SphSet::from_cell(x.first_block_zero()?)?.intersect(&s1.preimage(x.c2.matrix())?)?;
    let v3 = SphSet::from_cell(x.diag_cell.clone())?.intersect(&s1.preimage(x.c1.matrix())?)?;
    Ok([v1, v2, v3])
}

fn m_pieces(s: &SigmaData, x: &XGSpace, coeff: Coefficient) -> Result<[SphSet; 3]> {
    let s2 = s.sigma2c(coeff)?;
    let m1 = SphSet::from_cell(x.second_block_zero()?)?.intersect(&s2.preimage(x.c1.matrix())?)?;
    let m2 = SphSet::from_cell(x.first_block_zero()?)?.intersect(&s2.preimage(x.c2.matrix())?)?;
    let m3 = SphSet::from_cell(x.diag_cell.clone())?.intersect(&s2.preimage(x.c1.matrix())?)?;
    Ok([m1, m2, m3])
}

/// The complement of sigma^1 of `X(G)`, which is also the complement for
/// `X(G)/W(G)` under the canonical sphere identification: characters with a
/// zero block restrict into the sigma^1 complement of `G`, and diagonal
/// characters do the same.
pub fn xg_sigma1_complement(s: &SigmaData) -> Result<SigmaResult> {
    let mut hyps = Vec::new();
    require(s.owner().flags.is_fg, "is_fg", &mut hyps)?;
    let x = xg_space(s.owner())?;
    let [v1, v2, v3] = v_pieces(s, &x)?;
    let set = v1.union(&v2)?.union(&v3)?;
    Ok(SigmaResult::new(
        set,
        Exactness::conditional_on(hyps),
        "xg_sigma1",
    ))
}

/// Literal case evaluation for membership of `[chi]` in sigma^1 of `X(G)`:
/// true iff both restrictions are nonzero and distinct, or the surviving
/// data lies in sigma^1 of `G`. Oracle for [`xg_sigma1_complement`].
pub fn sigma1_pointwise(chi: &RayPoint, s: &SigmaData) -> Result<bool> {
    let x = xg_space(s.owner())?;
    if chi.dim() != x.dim() {
        return Err(Error::DimensionMismatch {
            expected: x.dim(),
            got: chi.dim(),
        });
    }
    let s1 = s.sigma1c()?;
    let (chi1, chi2) = x.split(chi.coords());
    let z1 = is_zero_vec(chi1);
    let z2 = is_zero_vec(chi2);
    let in_sigma1 = |v: &[Int]| -> Result<bool> { Ok(!s1.member(&RayPoint::new(v)?)?) };
    if z1 {
        return in_sigma1(chi2);
    }
    if z2 {
        return in_sigma1(chi1);
    }
    if chi1 == chi2 {
        return in_sigma1(chi1);
    }
    Ok(true)
}

/// The complement of sigma^2 of `X(G)/W(G)` for the given coefficient
/// regime: the three kernel slices for sigma^2 together with the pairwise
/// cone sums of the sigma^1 slices.
pub fn xg_mod_w_sigma2_complement(s: &SigmaData, coeff: Coefficient) -> Result<SigmaResult> {
    let mut hyps = Vec::new();
    require(s.owner().flags.is_fg, "is_fg", &mut hyps)?;
    require(coeff_flag(s, coeff)?, coeff_flag_name(coeff)?, &mut hyps)?;
    let x = xg_space(s.owner())?;
    let [v1, v2, v3] = v_pieces(s, &x)?;
    let [m1, m2, m3] = m_pieces(s, &x, coeff)?;
    let set = m1
        .union(&m2)?
        .union(&m3)?
        .union(&v1.cone_sum(&v2)?)?
        .union(&v2.cone_sum(&v3)?)?
        .union(&v1.cone_sum(&v3)?)?;
    Ok(SigmaResult::new(
        set,
        Exactness::conditional_on(hyps),
        format!("xg_mod_w_sigma2({})", coeff.as_str()),
    ))
}

/// Literal case evaluation for membership of `[chi]` in sigma^2 of
/// `X(G)/W(G)`: a zero or diagonal restriction defers to sigma^2 of `G`;
/// otherwise at least one of the pairs `{chi_1, chi_2}`,
/// `{chi_1, chi_1 - chi_2}`, `{chi_2, chi_2 - chi_1}` must lie in sigma^1
/// of `G`. Oracle for [`xg_mod_w_sigma2_complement`].
pub fn mod_w_sigma2_pointwise(chi: &RayPoint, s: &SigmaData, coeff: Coefficient) -> Result<bool> {
    let x = xg_space(s.owner())?;
    if chi.dim() != x.dim() {
        return Err(Error::DimensionMismatch {
            expected: x.dim(),
            got: chi.dim(),
        });
    }
    let s1 = s.sigma1c()?;
    let s2 = s.sigma2c(coeff)?;
    let (chi1, chi2) = x.split(chi.coords());
    let z1 = is_zero_vec(chi1);
    let z2 = is_zero_vec(chi2);
    let in_sigma1 = |v: &[Int]| -> Result<bool> { Ok(!s1.member(&RayPoint::new(v)?)?) };
    let in_sigma2 = |v: &[Int]| -> Result<bool> { Ok(!s2.member(&RayPoint::new(v)?)?) };
    if z1 {
        return in_sigma2(chi2);
    }
    if z2 {
        return in_sigma2(chi1);
    }
    if chi1 == chi2 {
        return in_sigma2(chi1);
    }
    let diff12: Vec<Int> = chi1.iter().zip(chi2).map(|(a, b)| a - b).collect();
    let diff21: Vec<Int> = diff12.iter().map(|v| -v).collect();
    let case41 = in_sigma1(chi1)? && in_sigma1(chi2)?;
    let case42 = in_sigma1(chi1)? && in_sigma1(&diff12)?;
    let case43 = in_sigma1(chi2)? && in_sigma1(&diff21)?;
    Ok(case41 || case42 || case43)
}

/// The complement of sigma^2 of `X(G)` itself. Exact when `W(G)` is known
/// finitely generated (a finitely generated abelianized commutator forces
/// that) or when the sigma^1 complement of `G` is the full sphere with
/// integral coefficients; otherwise the quotient construction is only a
/// lower bound of the complement.
pub fn xg_sigma2_complement(
    s: &SigmaData,
    coeff: Coefficient,
    w_fg_asserted: bool,
) -> Result<SigmaResult> {
    let base = xg_mod_w_sigma2_complement(s, coeff)?;
    let base_hyps = match &base.exactness {
        Exactness::Conditional(h) => h.clone(),
        _ => Vec::new(),
    };
    let tag = |suffix: &str| format!("xg_sigma2({}):{}", coeff.as_str(), suffix);

    if w_fg_asserted || s.owner().flags.gprime_ab_fg == Tri::True {
        // W(G) is finitely generated: either asserted by the caller or
        // forced by FP_2 together with a finitely generated G'/G''. The
        // quotient complement lifts exactly.
        return Ok(SigmaResult::new(
            base.set,
            Exactness::conditional_on(base_hyps),
            tag("w_fg_lift"),
        ));
    }

    if coeff == Coefficient::Z {
        let s1 = s.sigma1c()?;
        let full = SphSet::full(s.char_dim());
        if s1.equal(&full)? {
            // Empty sigma^1 of G forces empty sigma^2 of X(G) with integral
            // coefficients, unconditionally for finitely generated G.
            let full_x = SphSet::full(2 * s.char_dim());
            return Ok(SigmaResult::new(full_x, Exactness::Exact, tag("sigma1c_full")));
        }
    }

    Ok(SigmaResult::new(
        base.set,
        Exactness::LowerBoundOfComplement,
        tag("quotient_bound"),
    ))
}

/// The kernel-slice decomposition of the computed complements, with its
/// forced consistency checks evaluated.
#[derive(Clone, Debug)]
pub struct KernelParts {
    pub v: [SphSet; 3],
    pub m: [SphSet; 3],
    /// `V_1 + V_2`, `V_2 + V_3`, `V_1 + V_3`.
    pub sums: [SphSet; 3],
    /// Union of the `V_i` equals the computed sigma^1 complement of `X(G)`.
    pub union_equals_sigma1c: bool,
    /// Pairwise intersections of the `V_i` are contained in the pairwise
    /// intersections of the kernel subspaces (empty on the sphere).
    pub pairwise_disjoint: bool,
}

/// Computes the `V_i`/`M_i` decomposition and checks the partition facts it
/// must satisfy.
pub fn kernel_parts(s: &SigmaData, coeff: Coefficient) -> Result<KernelParts> {
    let x = xg_space(s.owner())?;
    let v = v_pieces(s, &x)?;
    let m = m_pieces(s, &x, coeff)?;
    let sums = [
        v[0].cone_sum(&v[1])?,
        v[1].cone_sum(&v[2])?,
        v[0].cone_sum(&v[2])?,
    ];
    let sigma1 = xg_sigma1_complement(s)?.set;
    let union = v[0].union(&v[1])?.union(&v[2])?;
    let union_equals_sigma1c = union.equal(&sigma1)?;

    let kernel_cells = [
        SphSet::from_cell(x.second_block_zero()?)?,
        SphSet::from_cell(x.first_block_zero()?)?,
        SphSet::from_cell(x.diag_cell.clone())?,
    ];
    let mut pairwise_disjoint = true;
    for i in 0..3 {
        for j in i + 1..3 {
            let meet = v[i].intersect(&v[j])?;
            let kernel_meet = kernel_cells[i].intersect(&kernel_cells[j])?;
            if !kernel_meet.contains(&meet)? {
                pairwise_disjoint = false;
            }
        }
    }

    Ok(KernelParts {
        v,
        m,
        sums,
        union_equals_sigma1c,
        pairwise_disjoint,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{Cell, HalfSpace};
    use crate::group::catalog_lookup;
    use crate::num::int;
    use std::collections::BTreeMap;

    fn ray(v: &[i64]) -> RayPoint {
        let w: Vec<Int> = v.iter().map(|&x| int(x)).collect();
        RayPoint::new(&w).unwrap()
    }

    fn free2() -> SigmaData {
        catalog_lookup("free(2)").unwrap().1
    }

    fn z2() -> SigmaData {
        catalog_lookup("free_abelian(2)").unwrap().1
    }

    /// dim-1 data with sigma1 and sigma2 complements both {x <= 0}.
    fn halfline() -> SigmaData {
        let (g, _) = catalog_lookup("bs(1,2)").unwrap();
        let set = SphSet::from_cell(Cell::new(1, vec![HalfSpace::ge(&[-1])]).unwrap()).unwrap();
        SigmaData::new(
            g,
            Some(set.clone()),
            BTreeMap::from([(Coefficient::Z, set.clone()), (Coefficient::Htpy, set)]),
        )
        .unwrap()
    }

    #[test]
    fn abelian_collapse() {
        let r = xg_sigma1_complement(&z2()).unwrap();
        assert!(r.set.is_empty_set());
        let r2 = xg_mod_w_sigma2_complement(&z2(), Coefficient::Z).unwrap();
        assert!(r2.set.is_empty_set());
    }

    #[test]
    fn free2_sigma1_is_three_subspaces() {
        let r = xg_sigma1_complement(&free2()).unwrap();
        assert_eq!(r.exactness, Exactness::Exact);
        let x = xg_space(free2().owner()).unwrap();
        let expected = SphSet::from_cell(x.first_block_zero().unwrap())
            .unwrap()
            .union(&SphSet::from_cell(x.second_block_zero().unwrap()).unwrap())
            .unwrap()
            .union(&SphSet::from_cell(x.diag_cell.clone()).unwrap())
            .unwrap();
        assert!(r.set.equal(&expected).unwrap());
    }

    #[test]
    fn sigma1_pointwise_cases() {
        let f2 = free2();
        // All-distinct nonzero restrictions lie in sigma^1.
        assert!(sigma1_pointwise(&ray(&[1, 0, 0, 1]), &f2).unwrap());
        // Diagonal characters fall out of sigma^1 when sigma^1(G) is empty.
        assert!(!sigma1_pointwise(&ray(&[1, 0, 1, 0]), &f2).unwrap());
        // For Z the complement is empty: any character is in sigma^1.
        let z1 = catalog_lookup("free_abelian(1)").unwrap().1;
        assert!(sigma1_pointwise(&ray(&[1, 2]), &z1).unwrap());
    }

    #[test]
    fn mod_w_sigma2_limit_collapse() {
        let r = xg_mod_w_sigma2_complement(&free2(), Coefficient::Z).unwrap();
        assert!(r.set.equal(&SphSet::full(4)).unwrap());
        assert_eq!(r.exactness, Exactness::Exact);
    }

    #[test]
    fn mod_w_pointwise_cases() {
        let f2 = free2();
        assert!(!mod_w_sigma2_pointwise(&ray(&[1, 0, 0, 1]), &f2, Coefficient::Z).unwrap());
        let z2 = z2();
        assert!(mod_w_sigma2_pointwise(&ray(&[1, 0, 0, 1]), &z2, Coefficient::Z).unwrap());
        // dim-1 complements {x <= 0}: chi = (1, 2) has both restrictions in
        // sigma^1, so case 4.1 puts it in sigma^2.
        let h = halfline();
        assert!(mod_w_sigma2_pointwise(&ray(&[1, 2]), &h, Coefficient::Z).unwrap());
        assert!(!mod_w_sigma2_pointwise(&ray(&[-1, -3]), &h, Coefficient::Z).unwrap());
    }

    #[test]
    fn sigma2_exactness_labels() {
        // Z^n: abelianized commutator is trivially finitely generated.
        let r = xg_sigma2_complement(&z2(), Coefficient::Z, false).unwrap();
        assert!(r.set.is_empty_set());
        assert_eq!(r.exactness, Exactness::Exact);
        // free(2): full sigma^1 complement triggers the unconditional path.
        let r = xg_sigma2_complement(&free2(), Coefficient::Z, false).unwrap();
        assert!(r.set.equal(&SphSet::full(4)).unwrap());
        assert_eq!(r.exactness, Exactness::Exact);
        // Unknown flags: the quotient construction is a lower bound.
        let r = xg_sigma2_complement(&halfline(), Coefficient::Z, false).unwrap();
        assert_eq!(r.exactness, Exactness::LowerBoundOfComplement);
        // Asserting W finitely generated upgrades it.
        let r = xg_sigma2_complement(&halfline(), Coefficient::Z, true).unwrap();
        assert_eq!(r.exactness, Exactness::Exact);
    }

    #[test]
    fn kernel_parts_partition_free2() {
        let parts = kernel_parts(&free2(), Coefficient::Z).unwrap();
        assert!(parts.union_equals_sigma1c);
        assert!(parts.pairwise_disjoint);
        let x = xg_space(free2().owner()).unwrap();
        assert!(parts.v[0]
            .equal(&SphSet::from_cell(x.second_block_zero().unwrap()).unwrap())
            .unwrap());
        assert!(parts.v[1]
            .equal(&SphSet::from_cell(x.first_block_zero().unwrap()).unwrap())
            .unwrap());
        assert!(parts.v[2]
            .equal(&SphSet::from_cell(x.diag_cell.clone()).unwrap())
            .unwrap());
    }

    #[test]
    fn missing_sigma_errors() {
        let (_, bs) = catalog_lookup("bs(1,2)").unwrap();
        assert!(matches!(
            xg_sigma1_complement(&bs),
            Err(Error::MissingSigma(_))
        ));
    }
}
