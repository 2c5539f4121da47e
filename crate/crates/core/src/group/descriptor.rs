//! Group descriptors: presentation data, abelianization, finiteness flags,
//! and character maps induced by homomorphisms.

use num_traits::{One, Zero};

use super::snf::{self, word_exponent_vec, IntMat};
use crate::num::{Int, Rat};
use crate::RatMatrix;
use crate::{Error, Result};

/// Three-valued truth for finiteness hypotheses that are not decidable from
/// a presentation. Theorems whose hypotheses are `Unknown` produce outputs
/// labeled conditional.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Tri {
    True,
    False,
    Unknown,
}

impl Tri {
    pub fn and(self, other: Tri) -> Tri {
        match (self, other) {
            (Tri::False, _) | (_, Tri::False) => Tri::False,
            (Tri::True, Tri::True) => Tri::True,
            _ => Tri::Unknown,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Tri::True => "true",
            Tri::False => "false",
            Tri::Unknown => "unknown",
        }
    }

    pub fn parse(s: &str) -> Result<Tri> {
        match s {
            "true" => Ok(Tri::True),
            "false" => Ok(Tri::False),
            "unknown" => Ok(Tri::Unknown),
            other => Err(Error::InvalidArgument(format!("bad tri-state `{other}`"))),
        }
    }
}

/// Finiteness hypotheses consumed by the sigma transformations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Flags {
    pub is_fg: Tri,
    pub is_fp2: Tri,
    pub is_fp: Tri,
    /// Commutator subgroup finitely generated.
    pub gprime_fg: Tri,
    /// Abelianization of the commutator subgroup finitely generated.
    pub gprime_ab_fg: Tri,
    /// Commutator subgroup finitely presented.
    pub gprime_fp: Tri,
    /// Commutator subgroup of homological type FP_2.
    pub gprime_fp2: Tri,
    pub is_nonabelian_limit_group: Tri,
}

impl Flags {
    pub fn unknown() -> Self {
        Flags {
            is_fg: Tri::Unknown,
            is_fp2: Tri::Unknown,
            is_fp: Tri::Unknown,
            gprime_fg: Tri::Unknown,
            gprime_ab_fg: Tri::Unknown,
            gprime_fp: Tri::Unknown,
            gprime_fp2: Tri::Unknown,
            is_nonabelian_limit_group: Tri::Unknown,
        }
    }

    pub fn all_true() -> Self {
        Flags {
            is_fg: Tri::True,
            is_fp2: Tri::True,
            is_fp: Tri::True,
            gprime_fg: Tri::True,
            gprime_ab_fg: Tri::True,
            gprime_fp: Tri::True,
            gprime_fp2: Tri::True,
            is_nonabelian_limit_group: Tri::False,
        }
    }
}

/// A finitely generated group given by name, presentation data and the
/// abelianization through which its characters factor. Characters live in
/// `Q^ab_rank`; torsion carries no characters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupDescriptor {
    pub name: String,
    pub generators: Vec<String>,
    /// Words as signed 1-based generator indices.
    pub relators: Vec<Vec<i64>>,
    pub ab_rank: usize,
    pub torsion: Vec<Int>,
    /// `ab_rank x generators` integer matrix mapping exponent vectors onto
    /// the free part of the abelianization.
    pub ab_projection: IntMat,
    pub flags: Flags,
}

impl GroupDescriptor {
    /// Computes the abelianization data from the presentation.
    pub fn from_presentation(
        name: &str,
        generators: Vec<String>,
        relators: Vec<Vec<i64>>,
        flags: Flags,
    ) -> Result<Self> {
        let ab = snf::abelianize(generators.len(), &relators)?;
        Ok(Self {
            name: name.to_string(),
            generators,
            relators,
            ab_rank: ab.ab_rank,
            torsion: ab.torsion,
            ab_projection: ab.ab_projection,
            flags,
        })
    }

    /// Validates externally supplied abelianization data against the
    /// presentation: rank and torsion must match the Smith normal form, the
    /// projection must kill every relator and be surjective onto the free
    /// part.
    pub fn new(
        name: String,
        generators: Vec<String>,
        relators: Vec<Vec<i64>>,
        ab_rank: usize,
        torsion: Vec<Int>,
        ab_projection: IntMat,
        flags: Flags,
    ) -> Result<Self> {
        let ab = snf::abelianize(generators.len(), &relators)?;
        if ab.ab_rank != ab_rank {
            return Err(Error::InvalidArgument(format!(
                "ab_rank {ab_rank} inconsistent with presentation (expected {})",
                ab.ab_rank
            )));
        }
        if ab.torsion != torsion {
            return Err(Error::InvalidArgument(
                "torsion inconsistent with presentation".into(),
            ));
        }
        if ab_projection.len() != ab_rank
            || ab_projection.iter().any(|r| r.len() != generators.len())
        {
            return Err(Error::InvalidArgument(
                "ab_projection has wrong shape".into(),
            ));
        }
        for rel in &relators {
            let e = word_exponent_vec(generators.len(), rel)?;
            for row in &ab_projection {
                if !crate::num::dot(row, &e).is_zero() {
                    return Err(Error::InvalidArgument(
                        "ab_projection does not kill a relator".into(),
                    ));
                }
            }
        }
        if ab_rank > 0 {
            let (_, d, _) = snf::smith_normal_form(&ab_projection);
            let surjective = (0..ab_rank).all(|i| d[i][i].is_one());
            if !surjective {
                return Err(Error::InvalidArgument(
                    "ab_projection is not surjective onto Z^ab_rank".into(),
                ));
            }
        }
        Ok(Self {
            name,
            generators,
            relators,
            ab_rank,
            torsion,
            ab_projection,
            flags,
        })
    }

    /// Free-part coordinates of a word's exponent vector.
    pub fn project_word(&self, word: &[i64]) -> Result<Vec<Int>> {
        let e = word_exponent_vec(self.generators.len(), word)?;
        Ok(self
            .ab_projection
            .iter()
            .map(|row| crate::num::dot(row, &e))
            .collect())
    }
}

/// An exact rational linear map between character spaces, applied as
/// `chi -> M chi` on coordinate vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharMap {
    matrix: RatMatrix,
}

impl CharMap {
    pub fn new(matrix: RatMatrix) -> Self {
        Self { matrix }
    }

    pub fn from_int_rows(rows: &[Vec<Int>]) -> Self {
        Self {
            matrix: RatMatrix::from_int_rows(rows),
        }
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.matrix
    }

    /// Source character dimension.
    pub fn source_dim(&self) -> usize {
        self.matrix.cols()
    }

    /// Target character dimension.
    pub fn target_dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn apply(&self, chi: &[Rat]) -> Result<Vec<Rat>> {
        self.matrix.apply(chi)
    }

    pub fn compose(&self, inner: &CharMap) -> Result<CharMap> {
        Ok(CharMap {
            matrix: self.matrix.mul(&inner.matrix)?,
        })
    }
}

/// Pullback of characters along a homomorphism `phi: source -> target` given
/// by generator images. The resulting map sends coordinates of a character
/// `chi` of `target` to coordinates of `chi . phi` on `source`; evaluating
/// the pullback on each source generator agrees with `chi` on its image
/// word.
pub fn induced_char_map(
    phi: &[Vec<i64>],
    source: &GroupDescriptor,
    target: &GroupDescriptor,
) -> Result<CharMap> {
    if phi.len() != source.generators.len() {
        return Err(Error::IllFormedWord(format!(
            "{} generator images for {} generators",
            phi.len(),
            source.generators.len()
        )));
    }
    // Gen-level values of the pulled-back character: E[i] = abProj_T(phi_i).
    let e_rows: Vec<Vec<Int>> = phi
        .iter()
        .map(|w| target.project_word(w))
        .collect::<Result<_>>()?;
    // Solve abProj_S^T * M = E column by column.
    let proj_t = RatMatrix::from_int_rows(&source.ab_projection).transpose();
    let mut m = RatMatrix::zero(source.ab_rank, target.ab_rank);
    for j in 0..target.ab_rank {
        let col: Vec<Rat> = e_rows.iter().map(|r| Rat::from(r[j].clone())).collect();
        let x = proj_t.solve(&col).ok_or_else(|| {
            Error::IllFormedWord("generator images do not induce a character map".into())
        })?;
        for (i, v) in x.into_iter().enumerate() {
            m.set(i, j, v);
        }
    }
    Ok(CharMap::new(m))
}
