//! Wire-format structs and their validated conversions to domain types.
//! Integers travel as decimal strings so arbitrary-precision values survive
//! byte-identically; constraints travel as `"<rel> <n_1> ... <n_d>"` lines.

use std::collections::BTreeMap;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::geometry::{Cell, HalfSpace, Relation, SphSet};
use crate::group::{Coefficient, Flags, GroupDescriptor, SigmaData, Tri};
use crate::num::Int;
use crate::sigma::{Exactness, SigmaResult};
use crate::{Error, Result};

fn parse_int(s: &str) -> Result<Int> {
    Int::from_str(s.trim()).map_err(|e| Error::Parse {
        line: 0,
        column: 0,
        message: format!("bad integer `{s}`: {e}"),
    })
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct SphSetDoc {
    pub dim: usize,
    pub cells: Vec<CellDoc>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct CellDoc {
    pub constraints: Vec<String>,
}

impl From<&SphSet> for SphSetDoc {
    fn from(s: &SphSet) -> Self {
        let cells = s
            .cells()
            .iter()
            .map(|c| CellDoc {
                constraints: c
                    .constraints()
                    .iter()
                    .map(|h| {
                        let rel = match h.relation() {
                            Relation::Ge => "ge",
                            Relation::Eq => "eq",
                            Relation::Gt => unreachable!("stored cells are GE/EQ only"),
                        };
                        let mut line = rel.to_string();
                        for x in h.normal() {
                            line.push(' ');
                            line.push_str(&x.to_string());
                        }
                        line
                    })
                    .collect(),
            })
            .collect();
        SphSetDoc { dim: s.dim(), cells }
    }
}

impl TryFrom<SphSetDoc> for SphSet {
    type Error = Error;

    fn try_from(doc: SphSetDoc) -> Result<SphSet> {
        let mut cells = Vec::with_capacity(doc.cells.len());
        for c in doc.cells {
            let mut constraints = Vec::with_capacity(c.constraints.len());
            for line in &c.constraints {
                let mut tokens = line.split_whitespace();
                let rel = match tokens.next() {
                    Some("ge") => Relation::Ge,
                    Some("eq") => Relation::Eq,
                    other => {
                        return Err(Error::Parse {
                            line: 0,
                            column: 0,
                            message: format!("bad relation `{other:?}` in `{line}`"),
                        })
                    }
                };
                let normal: Vec<Int> = tokens.map(parse_int).collect::<Result<_>>()?;
                if normal.len() != doc.dim {
                    return Err(Error::DimensionMismatch {
                        expected: doc.dim,
                        got: normal.len(),
                    });
                }
                constraints.push(HalfSpace::new(&normal, rel)?);
            }
            cells.push(Cell::new(doc.dim, constraints)?);
        }
        SphSet::new(doc.dim, cells)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FlagsDoc {
    pub is_fg: String,
    pub is_fp2: String,
    pub is_fp: String,
    pub gprime_fg: String,
    pub gprime_ab_fg: String,
    pub gprime_fp: String,
    pub gprime_fp2: String,
    pub is_nonabelian_limit_group: String,
}

impl From<&Flags> for FlagsDoc {
    fn from(f: &Flags) -> Self {
        FlagsDoc {
            is_fg: f.is_fg.as_str().into(),
            is_fp2: f.is_fp2.as_str().into(),
            is_fp: f.is_fp.as_str().into(),
            gprime_fg: f.gprime_fg.as_str().into(),
            gprime_ab_fg: f.gprime_ab_fg.as_str().into(),
            gprime_fp: f.gprime_fp.as_str().into(),
            gprime_fp2: f.gprime_fp2.as_str().into(),
            is_nonabelian_limit_group: f.is_nonabelian_limit_group.as_str().into(),
        }
    }
}

impl TryFrom<&FlagsDoc> for Flags {
    type Error = Error;

    fn try_from(d: &FlagsDoc) -> Result<Flags> {
        Ok(Flags {
            is_fg: Tri::parse(&d.is_fg)?,
            is_fp2: Tri::parse(&d.is_fp2)?,
            is_fp: Tri::parse(&d.is_fp)?,
            gprime_fg: Tri::parse(&d.gprime_fg)?,
            gprime_ab_fg: Tri::parse(&d.gprime_ab_fg)?,
            gprime_fp: Tri::parse(&d.gprime_fp)?,
            gprime_fp2: Tri::parse(&d.gprime_fp2)?,
            is_nonabelian_limit_group: Tri::parse(&d.is_nonabelian_limit_group)?,
        })
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupDoc {
    pub name: String,
    pub generators: Vec<String>,
    pub relators: Vec<Vec<i64>>,
    pub ab_rank: usize,
    pub torsion: Vec<String>,
    /// Rows of the projection matrix, space-separated integers.
    pub ab_projection: Vec<String>,
    pub flags: FlagsDoc,
}

impl From<&GroupDescriptor> for GroupDoc {
    fn from(g: &GroupDescriptor) -> Self {
        GroupDoc {
            name: g.name.clone(),
            generators: g.generators.clone(),
            relators: g.relators.clone(),
            ab_rank: g.ab_rank,
            torsion: g.torsion.iter().map(|t| t.to_string()).collect(),
            ab_projection: g
                .ab_projection
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                })
                .collect(),
            flags: (&g.flags).into(),
        }
    }
}

impl TryFrom<GroupDoc> for GroupDescriptor {
    type Error = Error;

    fn try_from(d: GroupDoc) -> Result<GroupDescriptor> {
        let torsion: Vec<Int> = d.torsion.iter().map(|s| parse_int(s)).collect::<Result<_>>()?;
        let ab_projection = d
            .ab_projection
            .iter()
            .map(|row| row.split_whitespace().map(parse_int).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        GroupDescriptor::new(
            d.name,
            d.generators,
            d.relators,
            d.ab_rank,
            torsion,
            ab_projection,
            (&d.flags).try_into()?,
        )
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SigmaDoc {
    pub group: GroupDoc,
    pub sigma1c: Option<SphSetDoc>,
    pub sigma2c_z: Option<SphSetDoc>,
    pub sigma2c_htpy: Option<SphSetDoc>,
    pub sigma2c_q: Option<SphSetDoc>,
}

impl From<&SigmaData> for SigmaDoc {
    fn from(s: &SigmaData) -> Self {
        let get = |c: Coefficient| s.sigma2c_opt(c).map(SphSetDoc::from);
        SigmaDoc {
            group: s.owner().into(),
            sigma1c: s.sigma1c_opt().map(SphSetDoc::from),
            sigma2c_z: get(Coefficient::Z),
            sigma2c_htpy: get(Coefficient::Htpy),
            sigma2c_q: get(Coefficient::FieldQ),
        }
    }
}

impl TryFrom<SigmaDoc> for SigmaData {
    type Error = Error;

    fn try_from(d: SigmaDoc) -> Result<SigmaData> {
        let group: GroupDescriptor = d.group.try_into()?;
        let sigma1c = d.sigma1c.map(SphSet::try_from).transpose()?;
        let mut sigma2c = BTreeMap::new();
        for (coeff, doc) in [
            (Coefficient::Z, d.sigma2c_z),
            (Coefficient::Htpy, d.sigma2c_htpy),
            (Coefficient::FieldQ, d.sigma2c_q),
        ] {
            if let Some(doc) = doc {
                sigma2c.insert(coeff, doc.try_into()?);
            }
        }
        SigmaData::new(group, sigma1c, sigma2c)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct ExactnessDoc {
    /// `exact`, `lower_bound_of_complement`, or `conditional`.
    pub label: String,
    /// Hypotheses a conditional result depends on; empty otherwise.
    pub hypotheses: Vec<String>,
}

impl From<&Exactness> for ExactnessDoc {
    fn from(e: &Exactness) -> Self {
        match e {
            Exactness::Exact => ExactnessDoc {
                label: "exact".into(),
                hypotheses: vec![],
            },
            Exactness::LowerBoundOfComplement => ExactnessDoc {
                label: "lower_bound_of_complement".into(),
                hypotheses: vec![],
            },
            Exactness::Conditional(h) => ExactnessDoc {
                label: "conditional".into(),
                hypotheses: h.clone(),
            },
        }
    }
}

impl TryFrom<&ExactnessDoc> for Exactness {
    type Error = Error;

    fn try_from(d: &ExactnessDoc) -> Result<Exactness> {
        match d.label.as_str() {
            "exact" => Ok(Exactness::Exact),
            "lower_bound_of_complement" => Ok(Exactness::LowerBoundOfComplement),
            "conditional" => Ok(Exactness::Conditional(d.hypotheses.clone())),
            other => Err(Error::Parse {
                line: 0,
                column: 0,
                message: format!("bad exactness label `{other}`"),
            }),
        }
    }
}

/// A computed set with full provenance: what ran, under which hypotheses,
/// which tool version, and how sharp the answer is.
#[derive(Clone, Debug)]
pub struct ResultMeta {
    pub operation: String,
    pub result: SigmaResult,
    /// Flag values consumed by the operation, recorded verbatim.
    pub hypotheses: BTreeMap<String, String>,
    pub seed: Option<u64>,
    pub tool_version: String,
}

impl ResultMeta {
    pub fn new(
        operation: impl Into<String>,
        result: SigmaResult,
        hypotheses: BTreeMap<String, String>,
        seed: Option<u64>,
    ) -> Self {
        ResultMeta {
            operation: operation.into(),
            result,
            hypotheses,
            seed,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct ResultDoc {
    pub operation: String,
    pub provenance: String,
    pub exactness: ExactnessDoc,
    pub hypotheses: BTreeMap<String, String>,
    pub seed: Option<u64>,
    pub tool_version: String,
    pub set: SphSetDoc,
}

impl From<&ResultMeta> for ResultDoc {
    fn from(r: &ResultMeta) -> Self {
        ResultDoc {
            operation: r.operation.clone(),
            provenance: r.result.provenance.clone(),
            exactness: (&r.result.exactness).into(),
            hypotheses: r.hypotheses.clone(),
            seed: r.seed,
            tool_version: r.tool_version.clone(),
            set: (&r.result.set).into(),
        }
    }
}

impl TryFrom<ResultDoc> for ResultMeta {
    type Error = Error;

    fn try_from(d: ResultDoc) -> Result<ResultMeta> {
        Ok(ResultMeta {
            operation: d.operation,
            result: SigmaResult::new(
                d.set.try_into()?,
                (&d.exactness).try_into()?,
                d.provenance,
            ),
            hypotheses: d.hypotheses,
            seed: d.seed,
            tool_version: d.tool_version,
        })
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct FgReportDoc {
    pub pi1: bool,
    pub pi2: bool,
    pub pi3: bool,
    pub overall: bool,
    pub direct: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct TensorReportDoc {
    pub tensor_fp: String,
    pub tensor_fp2: String,
    pub xg_commutator_fg: String,
    pub xg_commutator_fp2: String,
    pub xg_commutator_fp: String,
    pub w_fg: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct CrossCheckDoc {
    pub check: String,
    pub samples: usize,
    pub mismatches: Vec<String>,
    pub seed: u64,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct NuDoc {
    pub sigma1c: ResultDoc,
    pub sigma2c_z: ResultDoc,
    pub sigma2c_htpy: ResultDoc,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct TreeWitnessDoc {
    pub rank: usize,
    pub chi: Vec<String>,
    pub radius: usize,
    pub found: bool,
    pub word: Vec<i64>,
    pub chi_value: String,
    pub dip_prefix_index: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct LatticeDoc {
    pub n: usize,
    pub chi: Vec<String>,
    pub radius: i64,
    pub connected: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct PatternDoc {
    pub s: usize,
    pub n: usize,
    pub coefficient: String,
    pub seed: u64,
    pub passed: bool,
}

/// Reports are serialized at DTO level; parsing them back yields the DTO.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "report", content = "data", rename_all = "snake_case")]
pub enum ReportDoc {
    Fg(FgReportDoc),
    Tensor(TensorReportDoc),
    CrossCheck(CrossCheckDoc),
    Nu(NuDoc),
    TreeWitness(TreeWitnessDoc),
    Lattice(LatticeDoc),
    PatternCheck(PatternDoc),
}
