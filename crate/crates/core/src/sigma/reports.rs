//! Reports derived from the quotient identifications: the sigma-invariants
//! of `nu(G)` and the finiteness conclusions for the non-abelian tensor
//! square and the commutator chain.

use super::result::SigmaResult;
use super::xg_ops::{xg_mod_w_sigma2_complement, xg_sigma1_complement};
use crate::group::{Coefficient, SigmaData, Tri};
use crate::Result;

/// Sigma-invariant complements of `nu(G)`, identified with those of
/// `X(G)/W(G)` through the finitely generated nilpotent kernel `W_0` with
/// `nu(G)/W_0` isomorphic to `X(G)/W(G)`.
#[derive(Clone, Debug)]
pub struct NuInvariants {
    pub sigma1c: SigmaResult,
    pub sigma2c_z: SigmaResult,
    pub sigma2c_htpy: SigmaResult,
}

pub fn nu_invariants(s: &SigmaData) -> Result<NuInvariants> {
    let retag = |mut r: SigmaResult, tag: &str| {
        r.provenance = format!("{tag}:w0_quotient");
        r
    };
    let sigma1c = retag(xg_sigma1_complement(s)?, "nu_sigma1");
    let sigma2c_z = retag(
        xg_mod_w_sigma2_complement(s, Coefficient::Z)?,
        "nu_sigma2_z",
    );
    let sigma2c_htpy = retag(
        xg_mod_w_sigma2_complement(s, Coefficient::Htpy)?,
        "nu_sigma2_htpy",
    );
    Ok(NuInvariants {
        sigma1c,
        sigma2c_z,
        sigma2c_htpy,
    })
}

/// Finiteness conclusions propagated from the flags of `G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorReport {
    /// The non-abelian tensor square is finitely presented (sufficient
    /// condition: the commutator subgroup is finitely presented).
    pub tensor_fp: Tri,
    /// The non-abelian tensor square is FP_2 (sufficient condition: the
    /// commutator subgroup is FP_2).
    pub tensor_fp2: Tri,
    /// `X(G)'` is finitely generated iff `G'` is.
    pub xg_commutator_fg: Tri,
    /// `X(G)'` is FP_2 iff `G'` is, for G of type FP_2.
    pub xg_commutator_fp2: Tri,
    /// `X(G)'` is finitely presented iff `G'` is, for finitely presented G.
    pub xg_commutator_fp: Tri,
    /// `W(G)` is finitely generated when G is FP_2 with `G'/G''` finitely
    /// generated.
    pub w_fg: Tri,
}

pub fn tensor_square_report(s: &SigmaData) -> TensorReport {
    let f = s.owner().flags;
    // Sufficient conditions only: a failed hypothesis yields no conclusion.
    let sufficient = |hyp: Tri| match hyp {
        Tri::True => Tri::True,
        _ => Tri::Unknown,
    };
    // Biconditionals transfer all three truth values once the ambient
    // hypothesis holds.
    let iff_under = |ambient: Tri, value: Tri| match ambient {
        Tri::True => value,
        _ => Tri::Unknown,
    };
    TensorReport {
        tensor_fp: sufficient(f.gprime_fp),
        tensor_fp2: sufficient(f.gprime_fp2),
        xg_commutator_fg: f.gprime_fg,
        xg_commutator_fp2: iff_under(f.is_fp2, f.gprime_fp2),
        xg_commutator_fp: iff_under(f.is_fp, f.gprime_fp),
        w_fg: sufficient(f.is_fp2.and(f.gprime_ab_fg)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::SphSet;
    use crate::group::catalog_lookup;
    use crate::sigma::Exactness;

    #[test]
    fn nu_matches_the_quotient_sets() {
        let f2 = catalog_lookup("free(2)").unwrap().1;
        let nu = nu_invariants(&f2).unwrap();
        let direct = xg_sigma1_complement(&f2).unwrap();
        assert!(nu.sigma1c.set.equal(&direct.set).unwrap());
        assert!(nu.sigma2c_z.set.equal(&SphSet::full(4)).unwrap());
        assert_eq!(nu.sigma1c.exactness, Exactness::Exact);
        assert!(nu.sigma1c.provenance.contains("w0_quotient"));

        let z3 = catalog_lookup("free_abelian(3)").unwrap().1;
        let nu = nu_invariants(&z3).unwrap();
        assert!(nu.sigma1c.set.is_empty_set());
        assert!(nu.sigma2c_z.set.is_empty_set());
        assert!(nu.sigma2c_htpy.set.is_empty_set());
    }

    #[test]
    fn tensor_conclusions() {
        // Z^n: trivial commutator subgroup, every conclusion positive.
        let zn = catalog_lookup("free_abelian(2)").unwrap().1;
        let r = tensor_square_report(&zn);
        assert_eq!(r.tensor_fp, Tri::True);
        assert_eq!(r.tensor_fp2, Tri::True);
        assert_eq!(r.w_fg, Tri::True);
        // free(2): the commutator is not finitely generated; the sufficient
        // condition gives no conclusion for the tensor square, while the
        // biconditionals propagate the negative answer.
        let f2 = catalog_lookup("free(2)").unwrap().1;
        let r = tensor_square_report(&f2);
        assert_eq!(r.tensor_fp, Tri::Unknown);
        assert_eq!(r.xg_commutator_fg, Tri::False);
        assert_eq!(r.xg_commutator_fp, Tri::False);
        // bs(1,m): nothing is known about the commutator flags.
        let bs = catalog_lookup("bs(1,2)").unwrap().1;
        let r = tensor_square_report(&bs);
        assert_eq!(r.tensor_fp, Tri::Unknown);
        assert_eq!(r.w_fg, Tri::Unknown);
    }
}
