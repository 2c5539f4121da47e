//! The character-space structure of the weak commutativity group `X(G)`.
//!
//! `X(G)` is generated by two commuting-per-generator copies of `G`; the
//! relations `[g, g-bar] = 1` die in the abelianization, so the character
//! space of `X(G)` is `Q^2n` for `n = ab_rank(G)`. A character `chi`
//! restricts to `chi_1` on the first copy and `chi_2` on the second; the
//! three retractions onto `G` and the subdirect embedding into `G^3` induce
//! the maps below. Under the embedding, extensions `(mu_1, mu_2, mu_3)` of
//! `chi` satisfy `chi_1 = mu_1 + mu_2` and `chi_2 = mu_2 + mu_3`.

use num_traits::{One, Zero};

use super::descriptor::{CharMap, GroupDescriptor};
use crate::geometry::{Cell, HalfSpace, Relation};
use crate::num::{Int, Rat};
use crate::RatMatrix;
use crate::Result;

#[derive(Clone, Debug)]
pub struct XGSpace {
    /// `ab_rank` of the base group.
    pub n: usize,
    /// First-block retraction `chi -> chi_1`.
    pub c1: CharMap,
    /// Second-block retraction `chi -> chi_2`.
    pub c2: CharMap,
    /// Pullback of the retraction killing the second copy: `chi -> (chi, 0)`.
    pub pi1_star: CharMap,
    /// Pullback of the retraction killing the first copy: `chi -> (0, chi)`.
    pub pi2_star: CharMap,
    /// Pullback of the retraction identifying the copies: `chi -> (chi, chi)`.
    pub pi3_star: CharMap,
    /// Pullback of the subdirect embedding:
    /// `(mu_1, mu_2, mu_3) -> (mu_1 + mu_2, mu_2 + mu_3)`.
    pub rho_star: CharMap,
    /// The diagonal `chi_1 = chi_2` as an equality cell in `Q^2n`.
    pub diag_cell: Cell,
}

fn blocks(rows: usize, cols: usize, pattern: &[(usize, usize)], n: usize) -> RatMatrix {
    let mut m = RatMatrix::zero(rows * n, cols * n);
    for &(bi, bj) in pattern {
        for k in 0..n {
            m.set(bi * n + k, bj * n + k, Rat::one());
        }
    }
    m
}

/// Builds the `X(G)` character-space structure for a group of character
/// dimension `n = G.ab_rank`.
pub fn xg_space(g: &GroupDescriptor) -> Result<XGSpace> {
    let n = g.ab_rank;
    if n == 0 {
        return Err(crate::Error::InvalidArgument(format!(
            "group `{}` has trivial character sphere (ab_rank 0)",
            g.name
        )));
    }
    let c1 = CharMap::new(blocks(1, 2, &[(0, 0)], n));
    let c2 = CharMap::new(blocks(1, 2, &[(0, 1)], n));
    let pi1_star = CharMap::new(blocks(2, 1, &[(0, 0)], n));
    let pi2_star = CharMap::new(blocks(2, 1, &[(1, 0)], n));
    let pi3_star = CharMap::new(blocks(2, 1, &[(0, 0), (1, 0)], n));
    let rho_star = CharMap::new(blocks(2, 3, &[(0, 0), (0, 1), (1, 1), (1, 2)], n));

    let mut diag_rows = Vec::with_capacity(n);
    for k in 0..n {
        let mut normal = vec![Int::zero(); 2 * n];
        normal[k] = Int::from(1);
        normal[n + k] = Int::from(-1);
        diag_rows.push(HalfSpace::new(&normal, Relation::Eq)?);
    }
    let diag_cell = Cell::new(2 * n, diag_rows)?;

    Ok(XGSpace {
        n,
        c1,
        c2,
        pi1_star,
        pi2_star,
        pi3_star,
        rho_star,
        diag_cell,
    })
}

impl XGSpace {
    pub fn dim(&self) -> usize {
        2 * self.n
    }

    /// The cell `{chi_1 = 0}` (first block zero).
    pub fn first_block_zero(&self) -> Result<Cell> {
        self.block_zero(0)
    }

    /// The cell `{chi_2 = 0}` (second block zero).
    pub fn second_block_zero(&self) -> Result<Cell> {
        self.block_zero(1)
    }

    fn block_zero(&self, block: usize) -> Result<Cell> {
        let mut rows = Vec::with_capacity(self.n);
        for k in 0..self.n {
            let mut normal = vec![Int::zero(); 2 * self.n];
            normal[block * self.n + k] = Int::from(1);
            rows.push(HalfSpace::new(&normal, Relation::Eq)?);
        }
        Cell::new(2 * self.n, rows)
    }

    /// Splits a character of `X(G)` into its two restrictions.
    pub fn split<'a>(&self, chi: &'a [Int]) -> (&'a [Int], &'a [Int]) {
        (&chi[..self.n], &chi[self.n..])
    }
}
