//! Exact sigma^1 NON-membership certificates for free groups.
//!
//! In the Cayley tree of a free group the geodesic from the identity to a
//! vertex is its prefix chain. A freely reduced word with nonnegative
//! character value but a strictly negative prefix therefore witnesses that
//! the nonnegative subgraph is disconnected: a proof that the character lies
//! outside sigma^1. The search is shortlex over letters ordered
//! `a_1 < a_1^-1 < a_2 < a_2^-1 < ...`, first hit returned; completeness is
//! not claimed for a fixed radius.

use num_traits::{Signed, Zero};

use crate::num::Rat;
use crate::{Error, Result};

/// A disconnection certificate: a freely reduced word with `chi(word) >= 0`
/// whose prefix at `dip_prefix_index` has negative value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeWitness {
    /// Signed 1-based generator indices.
    pub word: Vec<i64>,
    pub chi_value: Rat,
    /// Length of the first strictly negative proper prefix.
    pub dip_prefix_index: usize,
}

impl TreeWitness {
    /// Recomputes everything from scratch and asserts the certificate.
    fn check(&self, chi: &[Rat]) -> Result<()> {
        for pair in self.word.windows(2) {
            if pair[0] == -pair[1] {
                return Err(Error::IllFormedWord("witness word is not reduced".into()));
            }
        }
        let mut value = Rat::zero();
        let mut dip_ok = false;
        for (i, &letter) in self.word.iter().enumerate() {
            let idx = letter.unsigned_abs() as usize - 1;
            if letter > 0 {
                value += &chi[idx];
            } else {
                value -= &chi[idx];
            }
            if i + 1 == self.dip_prefix_index {
                if !value.is_negative() {
                    return Err(Error::InvalidArgument(
                        "witness dip prefix is not negative".into(),
                    ));
                }
                dip_ok = true;
            }
        }
        if !dip_ok || value.is_negative() || value != self.chi_value {
            return Err(Error::InvalidArgument("witness endpoint check failed".into()));
        }
        Ok(())
    }
}

/// Shortlex BFS over freely reduced words of length at most `radius`,
/// returning the first word whose value is nonnegative while some proper
/// prefix is negative. `None` is a valid outcome: no certificate within the
/// radius.
pub fn free_tree_sigma1_witness(
    rank: usize,
    chi: &[Rat],
    radius: usize,
) -> Result<Option<TreeWitness>> {
    if rank < 2 {
        return Err(Error::InvalidArgument(
            "the tree certificate needs rank >= 2".into(),
        ));
    }
    if chi.len() != rank {
        return Err(Error::DimensionMismatch {
            expected: rank,
            got: chi.len(),
        });
    }
    if chi.iter().all(Zero::is_zero) {
        return Err(Error::ZeroVector);
    }

    // Letters in shortlex order: +1, -1, +2, -2, ...
    let letters: Vec<i64> = (1..=rank as i64).flat_map(|g| [g, -g]).collect();
    let value_of = |letter: i64| -> Rat {
        let idx = letter.unsigned_abs() as usize - 1;
        if letter > 0 {
            chi[idx].clone()
        } else {
            -chi[idx].clone()
        }
    };

    struct Node {
        word: Vec<i64>,
        value: Rat,
        first_dip: Option<usize>,
    }

    let mut frontier = vec![Node {
        word: Vec::new(),
        value: Rat::zero(),
        first_dip: None,
    }];
    for _len in 1..=radius {
        let mut next = Vec::new();
        for node in &frontier {
            for &letter in &letters {
                if node.word.last() == Some(&-letter) {
                    continue;
                }
                let value = &node.value + value_of(letter);
                let mut word = node.word.clone();
                word.push(letter);
                let first_dip = node.first_dip.or_else(|| {
                    value.is_negative().then_some(word.len())
                });
                // A dip strictly before the endpoint plus a nonnegative
                // endpoint is a certificate.
                if let Some(dip) = first_dip {
                    if dip < word.len() && !value.is_negative() {
                        let witness = TreeWitness {
                            word,
                            chi_value: value,
                            dip_prefix_index: dip,
                        };
                        witness.check(chi)?;
                        return Ok(Some(witness));
                    }
                }
                next.push(Node {
                    word,
                    value,
                    first_dip,
                });
            }
        }
        frontier = next;
    }
    Ok(None)
}
