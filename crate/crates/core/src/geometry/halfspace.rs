use std::cmp::Ordering;

use num_traits::{Signed, Zero};

use crate::num::{canonical_sign, dot, is_zero_vec, primitive, rat_vec_to_primitive, Int, Rat};
use crate::{Error, Result};

/// A point of the character sphere: a nonzero primitive integer vector
/// standing for its positive ray.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RayPoint {
    coords: Vec<Int>,
}

impl RayPoint {
    /// Scales `v` to the primitive vector with the same direction.
    pub fn new(v: &[Int]) -> Result<Self> {
        Ok(Self {
            coords: primitive(v)?,
        })
    }

    pub fn from_rats(v: &[Rat]) -> Result<Self> {
        Ok(Self {
            coords: rat_vec_to_primitive(v)?,
        })
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Int] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Int> {
        self.coords
    }
}

/// Scales `v` to a primitive vector; the public face of ray normalization.
pub fn normalize_ray(v: &[Int]) -> Result<RayPoint> {
    RayPoint::new(v)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Relation {
    /// `<v, x> >= 0`
    Ge,
    /// `<v, x> = 0`
    Eq,
    /// `<v, x> > 0`; only legal inside a [`super::FeasibilitySystem`].
    Gt,
}

/// One closed or strict half-space condition with primitive nonzero normal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HalfSpace {
    normal: Vec<Int>,
    relation: Relation,
}

impl HalfSpace {
    pub fn new(normal: &[Int], relation: Relation) -> Result<Self> {
        let mut normal = primitive(normal)?;
        // Equalities are sign-free; fix a sign so duplicates collapse.
        if relation == Relation::Eq {
            normal = canonical_sign(&normal);
        }
        Ok(Self { normal, relation })
    }

    pub fn ge(normal: &[i64]) -> Self {
        let v: Vec<Int> = normal.iter().map(|&x| Int::from(x)).collect();
        Self::new(&v, Relation::Ge).expect("nonzero literal normal")
    }

    pub fn eq(normal: &[i64]) -> Self {
        let v: Vec<Int> = normal.iter().map(|&x| Int::from(x)).collect();
        Self::new(&v, Relation::Eq).expect("nonzero literal normal")
    }

    pub fn normal(&self) -> &[Int] {
        &self.normal
    }

    pub fn relation(&self) -> Relation {
        self.relation
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    pub fn holds_at(&self, p: &[Int]) -> bool {
        let v = dot(&self.normal, p);
        match self.relation {
            Relation::Ge => !v.is_negative(),
            Relation::Eq => v.is_zero(),
            Relation::Gt => v.is_positive(),
        }
    }
}

impl PartialOrd for HalfSpace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for HalfSpace {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.relation, &self.normal).cmp(&(other.relation, &other.normal))
    }
}

/// A closed polyhedral cone minus the origin: the nonzero solutions of a
/// finite GE/EQ system. An empty constraint list denotes the full sphere.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    dim: usize,
    constraints: Vec<HalfSpace>,
}

impl Cell {
    pub fn new(dim: usize, constraints: Vec<HalfSpace>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::UnsupportedDimension("cell of dimension 0".into()));
        }
        let mut cs = Vec::with_capacity(constraints.len());
        for c in constraints {
            if c.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: c.dim(),
                });
            }
            if c.relation() == Relation::Gt {
                return Err(Error::InvalidArgument(
                    "strict constraint in a stored cell".into(),
                ));
            }
            cs.push(c);
        }
        cs.sort();
        cs.dedup();
        Ok(Self {
            dim,
            constraints: cs,
        })
    }

    /// Builds a cell from raw normals, silently dropping vacuous rows with
    /// zero normal (`0 >= 0`, `0 = 0`). Pullbacks produce such rows.
    pub fn from_raw(dim: usize, rows: Vec<(Vec<Int>, Relation)>) -> Result<Self> {
        let mut cs = Vec::new();
        for (normal, rel) in rows {
            if normal.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: normal.len(),
                });
            }
            if is_zero_vec(&normal) {
                continue;
            }
            cs.push(HalfSpace::new(&normal, rel)?);
        }
        Cell::new(dim, cs)
    }

    pub fn full(dim: usize) -> Self {
        Self {
            dim,
            constraints: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn constraints(&self) -> &[HalfSpace] {
        &self.constraints
    }

    pub fn member(&self, p: &RayPoint) -> Result<bool> {
        if p.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: p.dim(),
            });
        }
        Ok(self.constraints.iter().all(|c| c.holds_at(p.coords())))
    }

    /// Does the closed cone (with origin) contain `v`? Same test as
    /// [`Cell::member`] but accepts the zero vector.
    pub fn cone_contains(&self, v: &[Int]) -> Result<bool> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: v.len(),
            });
        }
        Ok(self.constraints.iter().all(|c| c.holds_at(v)))
    }

    pub(crate) fn is_feasible(&self) -> Result<bool> {
        super::feasibility::feasible_rows(
            self.dim,
            &self
                .constraints
                .iter()
                .map(|c| (c.normal().to_vec(), c.relation()))
                .collect::<Vec<_>>(),
        )
    }
}

/// A rationally defined spherical polyhedron: the union of its cells.
/// No cells denotes the empty set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SphSet {
    dim: usize,
    cells: Vec<Cell>,
}

impl SphSet {
    /// Canonicalizes: sorts constraints and cells, removes duplicates, drops
    /// infeasible cells. This is a deterministic storage form, not a semantic
    /// normal form; semantic equality is [`SphSet::equal`].
    pub fn new(dim: usize, cells: Vec<Cell>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::UnsupportedDimension("sphere of dimension 0".into()));
        }
        let mut kept = Vec::with_capacity(cells.len());
        for c in cells {
            if c.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: c.dim(),
                });
            }
            if c.is_feasible()? {
                kept.push(c);
            }
        }
        kept.sort();
        kept.dedup();
        Ok(Self { dim, cells: kept })
    }

    pub fn empty(dim: usize) -> Self {
        Self {
            dim,
            cells: Vec::new(),
        }
    }

    pub fn full(dim: usize) -> Self {
        Self {
            dim,
            cells: vec![Cell::full(dim)],
        }
    }

    pub fn from_cell(cell: Cell) -> Result<Self> {
        Self::new(cell.dim(), vec![cell])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn is_empty_set(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn member(&self, p: &RayPoint) -> Result<bool> {
        if p.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: p.dim(),
            });
        }
        for c in &self.cells {
            if c.member(p)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Membership of `v` in the closed cone over the set (origin included).
    pub fn cone_contains(&self, v: &[Int]) -> Result<bool> {
        if is_zero_vec(v) {
            return Ok(true);
        }
        self.member(&RayPoint::new(v)?)
    }
}
