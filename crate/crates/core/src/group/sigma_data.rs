//! Sigma-invariant complements attached to a group descriptor.

use std::collections::BTreeMap;

use super::descriptor::GroupDescriptor;
use crate::geometry::SphSet;
use crate::{Error, Result};

/// Coefficient regime of a sigma-invariant in dimension 2. Dimension 1 is
/// coefficient-independent and stored once.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Coefficient {
    /// Homological, integral coefficients.
    Z,
    /// Homotopical.
    Htpy,
    /// Homological over the rationals (field coefficients).
    FieldQ,
}

impl Coefficient {
    pub fn as_str(&self) -> &'static str {
        match self {
            Coefficient::Z => "z",
            Coefficient::Htpy => "htpy",
            Coefficient::FieldQ => "q",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "z" => Ok(Coefficient::Z),
            "htpy" => Ok(Coefficient::Htpy),
            "q" => Ok(Coefficient::FieldQ),
            other => Err(Error::InvalidArgument(format!("bad coefficient `{other}`"))),
        }
    }
}

/// A group descriptor together with the closed complements of its
/// sigma-invariants in dimensions 1 and 2, all living in `Q^ab_rank`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaData {
    owner: GroupDescriptor,
    sigma1c: Option<SphSet>,
    sigma2c: BTreeMap<Coefficient, SphSet>,
}

impl SigmaData {
    /// Validates dimensions and the monotonicity the theory forces: the
    /// dimension-2 complement contains the dimension-1 complement, and the
    /// homotopical complement contains the integral one.
    pub fn new(
        owner: GroupDescriptor,
        sigma1c: Option<SphSet>,
        sigma2c: BTreeMap<Coefficient, SphSet>,
    ) -> Result<Self> {
        if owner.ab_rank == 0 {
            return Err(Error::InvalidArgument(format!(
                "group `{}` has trivial character sphere (ab_rank 0)",
                owner.name
            )));
        }
        if let Some(s) = &sigma1c {
            if s.dim() != owner.ab_rank {
                return Err(Error::DimensionMismatch {
                    expected: owner.ab_rank,
                    got: s.dim(),
                });
            }
        }
        for s in sigma2c.values() {
            if s.dim() != owner.ab_rank {
                return Err(Error::DimensionMismatch {
                    expected: owner.ab_rank,
                    got: s.dim(),
                });
            }
        }
        if let Some(s1) = &sigma1c {
            for (coeff, s2) in &sigma2c {
                if !s2.contains(s1)? {
                    return Err(Error::InvalidArgument(format!(
                        "sigma2 complement ({}) does not contain the sigma1 complement",
                        coeff.as_str()
                    )));
                }
            }
        }
        if let (Some(z), Some(h)) = (sigma2c.get(&Coefficient::Z), sigma2c.get(&Coefficient::Htpy))
        {
            if !h.contains(z)? {
                return Err(Error::InvalidArgument(
                    "homotopical sigma2 complement does not contain the integral one".into(),
                ));
            }
        }
        Ok(Self {
            owner,
            sigma1c,
            sigma2c,
        })
    }

    pub fn owner(&self) -> &GroupDescriptor {
        &self.owner
    }

    pub fn char_dim(&self) -> usize {
        self.owner.ab_rank
    }

    pub fn sigma1c_opt(&self) -> Option<&SphSet> {
        self.sigma1c.as_ref()
    }

    pub fn sigma1c(&self) -> Result<&SphSet> {
        self.sigma1c.as_ref().ok_or_else(|| {
            Error::MissingSigma(format!("sigma1 complement of `{}`", self.owner.name))
        })
    }

    pub fn sigma2c_opt(&self, coeff: Coefficient) -> Option<&SphSet> {
        self.sigma2c.get(&coeff)
    }

    pub fn sigma2c(&self, coeff: Coefficient) -> Result<&SphSet> {
        self.sigma2c.get(&coeff).ok_or_else(|| {
            Error::MissingSigma(format!(
                "sigma2 complement ({}) of `{}`",
                coeff.as_str(),
                self.owner.name
            ))
        })
    }

    pub fn sigma2c_map(&self) -> &BTreeMap<Coefficient, SphSet> {
        &self.sigma2c
    }

    /// Complement of sigma^n; n = 0 is empty by convention for finitely
    /// generated groups.
    pub fn sigma_nc(&self, n: usize, coeff: Coefficient) -> Result<SphSet> {
        match n {
            0 => Ok(SphSet::empty(self.char_dim())),
            1 => Ok(self.sigma1c()?.clone()),
            2 => Ok(self.sigma2c(coeff)?.clone()),
            _ => Err(Error::UnsupportedDimension(format!(
                "sigma^{n} data is not stored"
            ))),
        }
    }
}
