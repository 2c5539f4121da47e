//! Canonical text formats for groups, sigma data, spherical sets, results
//! and reports. Serialization is byte-deterministic (sorted cells and
//! constraints, lowest-term integers, fixed field order) and parsing is
//! strict: unknown fields and unsupported versions are rejected.

mod docs;

pub use docs::{
    CrossCheckDoc, ExactnessDoc, FgReportDoc, LatticeDoc, NuDoc, PatternDoc, ReportDoc,
    ResultDoc, ResultMeta, TensorReportDoc, TreeWitnessDoc,
};

use serde::{Deserialize, Serialize};

use crate::geometry::SphSet;
use crate::group::{GroupDescriptor, SigmaData};
use crate::{Error, Result};

pub const FORMAT_VERSION: u32 = 1;

/// A parsed document of any supported kind.
#[derive(Clone, Debug)]
pub enum Document {
    Group(GroupDescriptor),
    Sigma(SigmaData),
    SphSet(SphSet),
    Result(ResultMeta),
    Report(ReportDoc),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Group(_) => "group",
            Document::Sigma(_) => "sigma",
            Document::SphSet(_) => "sphset",
            Document::Result(_) => "result",
            Document::Report(_) => "report",
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Envelope {
    kind: String,
    version: u32,
    payload: serde_json::Value,
}

fn to_value<T: Serialize>(value: &T) -> serde_json::Value {
    serde_json::to_value(value).expect("document DTOs serialize infallibly")
}

/// Canonical bytes of a document: pretty JSON plus a trailing newline.
pub fn serialize_document(doc: &Document) -> String {
    let payload = match doc {
        Document::Group(g) => to_value(&docs::GroupDoc::from(g)),
        Document::Sigma(s) => to_value(&docs::SigmaDoc::from(s)),
        Document::SphSet(s) => to_value(&docs::SphSetDoc::from(s)),
        Document::Result(r) => to_value(&docs::ResultDoc::from(r)),
        Document::Report(r) => to_value(r),
    };
    let envelope = Envelope {
        kind: doc.kind().to_string(),
        version: FORMAT_VERSION,
        payload,
    };
    let mut out = serde_json::to_string_pretty(&envelope).expect("infallible");
    out.push('\n');
    out
}

fn json_error(e: &serde_json::Error) -> Error {
    Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

fn payload_error<E: std::fmt::Display>(path: &serde_path_to_error::Path, e: E) -> Error {
    Error::Parse {
        line: 0,
        column: 0,
        message: format!("{e} (at payload path `{path}`)"),
    }
}

fn from_payload<'de, T: Deserialize<'de>>(payload: serde_json::Value) -> Result<T> {
    let mut track = serde_path_to_error::Track::new();
    let de = serde_path_to_error::Deserializer::new(payload, &mut track);
    T::deserialize(de).map_err(|e| payload_error(&track.path(), e))
}

/// Strict parse: version check, kind dispatch, unknown fields rejected,
/// domain invariants revalidated.
pub fn parse_document(text: &str) -> Result<Document> {
    let envelope: Envelope = serde_json::from_str(text).map_err(|e| json_error(&e))?;
    if envelope.version != FORMAT_VERSION {
        return Err(Error::Version {
            got: envelope.version,
            supported: FORMAT_VERSION,
        });
    }
    match envelope.kind.as_str() {
        "group" => {
            let doc: docs::GroupDoc = from_payload(envelope.payload)?;
            Ok(Document::Group(doc.try_into()?))
        }
        "sigma" => {
            let doc: docs::SigmaDoc = from_payload(envelope.payload)?;
            Ok(Document::Sigma(doc.try_into()?))
        }
        "sphset" => {
            let doc: docs::SphSetDoc = from_payload(envelope.payload)?;
            Ok(Document::SphSet(doc.try_into()?))
        }
        "result" => {
            let doc: docs::ResultDoc = from_payload(envelope.payload)?;
            Ok(Document::Result(doc.try_into()?))
        }
        "report" => {
            let doc: ReportDoc = from_payload(envelope.payload)?;
            Ok(Document::Report(doc))
        }
        other => Err(Error::Parse {
            line: 0,
            column: 0,
            message: format!("unknown document kind `{other}`"),
        }),
    }
}

/// Convenience accessors with kind errors.
pub fn expect_sigma(doc: Document) -> Result<SigmaData> {
    match doc {
        Document::Sigma(s) => Ok(s),
        other => Err(Error::InvalidArgument(format!(
            "expected a sigma document, got `{}`",
            other.kind()
        ))),
    }
}

pub fn expect_sphset(doc: Document) -> Result<SphSet> {
    match doc {
        Document::SphSet(s) => Ok(s),
        Document::Result(r) => Ok(r.result.set),
        other => Err(Error::InvalidArgument(format!(
            "expected a sphset document, got `{}`",
            other.kind()
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{Cell, HalfSpace};
    use crate::group::catalog_lookup;

    #[test]
    fn sphset_round_trip() {
        let s = SphSet::new(
            3,
            vec![
                Cell::new(3, vec![HalfSpace::ge(&[1, 0, -2]), HalfSpace::eq(&[0, 1, 1])]).unwrap(),
                Cell::full(3),
            ],
        )
        .unwrap();
        let text = serialize_document(&Document::SphSet(s.clone()));
        let back = parse_document(&text).unwrap();
        match back {
            Document::SphSet(t) => assert_eq!(s, t),
            _ => panic!("wrong kind"),
        }
    }

    #[test]
    fn empty_sphset_round_trip() {
        let s = SphSet::empty(3);
        let text = serialize_document(&Document::SphSet(s.clone()));
        let text2 = serialize_document(&Document::SphSet(s.clone()));
        assert_eq!(text, text2);
        match parse_document(&text).unwrap() {
            Document::SphSet(t) => assert_eq!(s, t),
            _ => panic!("wrong kind"),
        }
    }

    #[test]
    fn sigma_round_trip_byte_identical() {
        let (_, data) = catalog_lookup("free(2)").unwrap();
        let text = serialize_document(&Document::Sigma(data));
        let reparsed = parse_document(&text).unwrap();
        let text2 = serialize_document(&reparsed);
        assert_eq!(text, text2);
    }

    #[test]
    fn version_is_checked() {
        let (_, data) = catalog_lookup("free_abelian(1)").unwrap();
        let text = serialize_document(&Document::Sigma(data));
        let bumped = text.replace("\"version\": 1", "\"version\": 99");
        assert!(matches!(
            parse_document(&bumped),
            Err(Error::Version { got: 99, .. })
        ));
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let s = SphSet::empty(2);
        let text = serialize_document(&Document::SphSet(s));
        let broken = text.replace("\"dim\": 2", "\"dim\": 2, \"extra\": 1");
        assert!(parse_document(&broken).is_err());
    }

    #[test]
    fn garbage_is_a_parse_error() {
        assert!(matches!(
            parse_document("not json"),
            Err(Error::Parse { .. })
        ));
    }
}
