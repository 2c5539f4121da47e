//! Labeled outputs: every computed complement carries an exactness label so
//! a set is never claimed beyond what its hypotheses support.

use crate::geometry::SphSet;

/// How sharp a computed complement is.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Exactness {
    /// The set equals the complement it names.
    Exact,
    /// The set is contained in the complement it names; equality is open.
    /// Only the sigma^2 computation for `X(G)` itself produces this, when
    /// finite generation of `W(G)` is not known.
    LowerBoundOfComplement,
    /// Exact provided the listed hypotheses (currently unknown) hold.
    Conditional(Vec<String>),
}

impl Exactness {
    pub fn conditional_on(hyps: Vec<String>) -> Self {
        if hyps.is_empty() {
            Exactness::Exact
        } else {
            Exactness::Conditional(hyps)
        }
    }
}

/// A computed complement with its exactness label and the tag of the
/// transformation that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaResult {
    pub set: SphSet,
    pub exactness: Exactness,
    pub provenance: String,
}

impl SigmaResult {
    pub fn new(set: SphSet, exactness: Exactness, provenance: impl Into<String>) -> Self {
        Self {
            set,
            exactness,
            provenance: provenance.into(),
        }
    }
}
