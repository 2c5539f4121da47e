//! Document round-trips, parser robustness, and end-to-end runs of the
//! binary: exit codes, output shapes and byte-determinism.

mod common;

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use common::*;
use proptest::prelude::*;

use xsigma::geometry::{Relation, SphSet};
use xsigma::group::catalog_lookup;
use xsigma::io::{parse_document, serialize_document, Document, ReportDoc};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_xsigma")
}

fn run(args: &[&str]) -> Output {
    Command::new(bin())
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn write_sigma(dir: &Path, name: &str, data: &xsigma::group::SigmaData) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, serialize_document(&Document::Sigma(data.clone()))).unwrap();
    path
}

fn write_sphset(dir: &Path, name: &str, set: &SphSet) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, serialize_document(&Document::SphSet(set.clone()))).unwrap();
    path
}

#[test]
fn corpus_documents_round_trip_byte_identically() {
    for (name, data) in corpus() {
        let text = serialize_document(&Document::Sigma(data.clone()));
        let doc = parse_document(&text).unwrap_or_else(|e| panic!("[{name}] {e}"));
        let text2 = serialize_document(&doc);
        assert_eq!(text, text2, "[{name}] reserialization changed bytes");
        let group_text = serialize_document(&Document::Group(data.owner().clone()));
        let group_doc = parse_document(&group_text).unwrap();
        assert_eq!(group_text, serialize_document(&group_doc));
    }
}

#[test]
fn result_documents_round_trip() {
    let f2 = catalog_lookup("free(2)").unwrap().1;
    let r = xsigma::sigma::xg_sigma1_complement(&f2).unwrap();
    let meta = xsigma::io::ResultMeta::new(
        "xg sigma1",
        r,
        std::collections::BTreeMap::from([("is_fg".to_string(), "true".to_string())]),
        Some(7),
    );
    let text = serialize_document(&Document::Result(meta));
    let doc = parse_document(&text).unwrap();
    assert_eq!(text, serialize_document(&doc));
    match doc {
        Document::Result(m) => {
            assert_eq!(m.operation, "xg sigma1");
            assert_eq!(m.seed, Some(7));
        }
        _ => panic!("wrong kind"),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    /// The parser never panics: arbitrary input yields a value or an error.
    #[test]
    fn parser_total_on_arbitrary_input(text in ".{0,400}") {
        let _ = parse_document(&text);
    }

    /// Mutating one byte of a valid document never panics either.
    #[test]
    fn parser_total_on_mutated_documents(pos in 0usize..1000, byte in 0u8..=255) {
        let f2 = catalog_lookup("free(2)").unwrap().1;
        let mut bytes = serialize_document(&Document::Sigma(f2)).into_bytes();
        let idx = pos % bytes.len();
        bytes[idx] = byte;
        if let Ok(text) = String::from_utf8(bytes) {
            let _ = parse_document(&text);
        }
    }
}

#[test]
fn cli_catalog_list_and_show() {
    let out = run(&["catalog", "list"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("free(k)"));
    assert!(text.contains("bs(1,m)"));

    let out = run(&["catalog", "show", "free(2)"]);
    assert!(out.status.success());
    let doc = parse_document(&stdout_of(&out)).unwrap();
    assert!(matches!(doc, Document::Sigma(_)));

    let out = run(&["catalog", "show", "nope(1)"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cli_xg_sigma1_prints_result_document() {
    let dir = tempfile::tempdir().unwrap();
    let f2 = catalog_lookup("free(2)").unwrap().1;
    let input = write_sigma(dir.path(), "free2.sigma", &f2);
    let out = run(&["xg", "sigma1", "-i", input.to_str().unwrap()]);
    assert!(out.status.success());
    let doc = parse_document(&stdout_of(&out)).unwrap();
    match doc {
        Document::Result(m) => {
            assert_eq!(m.result.set.cells().len(), 3);
            assert_eq!(m.result.provenance, "xg_sigma1");
        }
        _ => panic!("expected a result document"),
    }
}

#[test]
fn cli_xg_sigma2_exactness_paths() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_sigma(dir.path(), "halfline.sigma", &halfline_data());
    let plain = run(&[
        "xg", "sigma2", "--coeff", "z", "-i", input.to_str().unwrap(),
    ]);
    assert!(plain.status.success());
    assert!(stdout_of(&plain).contains("lower_bound_of_complement"));

    let lifted = run(&[
        "xg", "sigma2", "--coeff", "z", "--w-fg", "-i", input.to_str().unwrap(),
    ]);
    assert!(lifted.status.success());
    assert!(stdout_of(&lifted).contains("\"label\": \"exact\""));
    assert!(stdout_of(&lifted).contains("w_fg_lift"));
}

#[test]
fn cli_verify_commands_report_zero_mismatches() {
    let dir = tempfile::tempdir().unwrap();
    let z2 = catalog_lookup("free_abelian(2)").unwrap().1;
    let input = write_sigma(dir.path(), "z2.sigma", &z2);
    let out = run(&[
        "--seed", "7", "verify", "theorem-a", "-i", input.to_str().unwrap(), "--samples", "200",
    ]);
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("0 mismatches"));

    let out = run(&[
        "--seed", "7", "verify", "e1", "-i", input.to_str().unwrap(), "--samples", "200",
        "--coeff", "z",
    ]);
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("0 mismatches"));
}

#[test]
fn cli_set_algebra_and_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let quadrant = sphset(
        2,
        vec![cell(
            2,
            &[(&[1, 0], Relation::Ge), (&[0, 1], Relation::Ge)],
        )],
    );
    let halfplane = sphset(2, vec![cell(2, &[(&[1, 0], Relation::Ge)])]);
    let q = write_sphset(dir.path(), "q.sphset", &quadrant);
    let h = write_sphset(dir.path(), "h.sphset", &halfplane);

    let member = run(&["set", "member", "--ray", "1,1", "-i", q.to_str().unwrap()]);
    assert_eq!(member.status.code(), Some(0));
    assert_eq!(stdout_of(&member), "true\n");
    let member = run(&["set", "member", "--ray", "-1,0", "-i", q.to_str().unwrap()]);
    assert_eq!(member.status.code(), Some(1));

    let contains = run(&[
        "set", "contains",
        "-a", h.to_str().unwrap(),
        "-b", q.to_str().unwrap(),
    ]);
    assert_eq!(contains.status.code(), Some(0));
    let contains = run(&[
        "set", "contains",
        "-a", q.to_str().unwrap(),
        "-b", h.to_str().unwrap(),
    ]);
    assert_eq!(contains.status.code(), Some(1));

    let joined = run(&[
        "set", "join",
        "-a", q.to_str().unwrap(),
        "-b", h.to_str().unwrap(),
    ]);
    assert!(joined.status.success());
    let doc = parse_document(&stdout_of(&joined)).unwrap();
    match doc {
        Document::SphSet(s) => assert_eq!(s.dim(), 4),
        _ => panic!("expected sphset"),
    }

    let equal = run(&[
        "set", "equal",
        "-a", q.to_str().unwrap(),
        "-b", q.to_str().unwrap(),
    ]);
    assert_eq!(equal.status.code(), Some(0));
}

#[test]
fn cli_fgtest_and_b2report() {
    let dir = tempfile::tempdir().unwrap();
    let f2 = catalog_lookup("free(2)").unwrap().1;
    let z2 = catalog_lookup("free_abelian(2)").unwrap().1;
    let f2_path = write_sigma(dir.path(), "free2.sigma", &f2);
    let z2_path = write_sigma(dir.path(), "z2.sigma", &z2);

    let u2 = dir.path().join("u2.txt");
    std::fs::write(&u2, "1 0\n0 1\n").unwrap();
    let u4 = dir.path().join("u4.txt");
    std::fs::write(&u4, "1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n").unwrap();

    // The full character space annihilates the commutator subgroup: free
    // groups fail, abelian groups pass.
    let fail = run(&[
        "fgtest", "--dim", "1", "--subspace", u2.to_str().unwrap(),
        "-i", f2_path.to_str().unwrap(),
    ]);
    assert_eq!(fail.status.code(), Some(1));
    assert_eq!(stdout_of(&fail), "false\n");
    let pass = run(&[
        "fgtest", "--dim", "1", "--subspace", u2.to_str().unwrap(),
        "-i", z2_path.to_str().unwrap(),
    ]);
    assert_eq!(pass.status.code(), Some(0));

    let report = run(&[
        "b2report", "--subspace", u4.to_str().unwrap(),
        "-i", f2_path.to_str().unwrap(),
    ]);
    assert_eq!(report.status.code(), Some(1));
    match parse_document(&stdout_of(&report)).unwrap() {
        Document::Report(ReportDoc::Fg(f)) => {
            assert!(!f.overall);
            assert_eq!(f.overall, f.direct);
        }
        _ => panic!("expected fg report"),
    }
}

#[test]
fn cli_product_tensor_nu() {
    let dir = tempfile::tempdir().unwrap();
    let f2 = catalog_lookup("free(2)").unwrap().1;
    let path = write_sigma(dir.path(), "free2.sigma", &f2);

    let product = run(&[
        "product", "--dim", "2", "--coeff", "z",
        "-a", path.to_str().unwrap(),
        "-b", path.to_str().unwrap(),
    ]);
    assert!(product.status.success());
    match parse_document(&stdout_of(&product)).unwrap() {
        Document::Result(m) => {
            let full = SphSet::full(4);
            assert!(m.result.set.equal(&full).unwrap());
        }
        _ => panic!("expected result"),
    }

    let tensor = run(&["tensor", "report", "-i", path.to_str().unwrap()]);
    assert!(tensor.status.success());
    match parse_document(&stdout_of(&tensor)).unwrap() {
        Document::Report(ReportDoc::Tensor(t)) => {
            assert_eq!(t.xg_commutator_fg, "false");
        }
        _ => panic!("expected tensor report"),
    }

    let nu = run(&["nu", "invariants", "-i", path.to_str().unwrap()]);
    assert!(nu.status.success());
    match parse_document(&stdout_of(&nu)).unwrap() {
        Document::Report(ReportDoc::Nu(n)) => {
            assert_eq!(n.sigma1c.set.cells.len(), 3);
        }
        _ => panic!("expected nu report"),
    }
}

#[test]
fn cli_oracles() {
    let witness = run(&[
        "oracle", "tree-witness", "--rank", "2", "--chi", "1,0", "--radius", "3",
    ]);
    assert_eq!(witness.status.code(), Some(0));
    match parse_document(&stdout_of(&witness)).unwrap() {
        Document::Report(ReportDoc::TreeWitness(w)) => {
            assert!(w.found);
            assert_eq!(w.word, vec![-1, 2, 1]);
        }
        _ => panic!("expected witness report"),
    }

    let none = run(&[
        "oracle", "tree-witness", "--rank", "2", "--chi", "1,0", "--radius", "1",
    ]);
    assert_eq!(none.status.code(), Some(1));

    let lattice = run(&[
        "oracle", "lattice", "--n", "2", "--chi", "2,-3", "--radius", "4",
    ]);
    assert_eq!(lattice.status.code(), Some(0));
    match parse_document(&stdout_of(&lattice)).unwrap() {
        Document::Report(ReportDoc::Lattice(l)) => assert!(l.connected),
        _ => panic!("expected lattice report"),
    }
}

#[test]
fn cli_canon_is_idempotent() {
    let dir = tempfile::tempdir().unwrap();
    // A noncanonical handwritten sphset document.
    let raw = r#"{
  "kind": "sphset",
  "version": 1,
  "payload": {
    "dim": 2,
    "cells": [
      { "constraints": ["ge 2 4", "ge 2 4"] },
      { "constraints": ["ge 1 -1", "ge -1 1", "ge 1 1"] }
    ]
  }
}
"#;
    let input = dir.path().join("raw.sphset");
    std::fs::write(&input, raw).unwrap();
    let once = run(&["canon", "-i", input.to_str().unwrap()]);
    assert!(once.status.success());
    let canon1 = stdout_of(&once);
    let again = dir.path().join("canon.sphset");
    std::fs::write(&again, &canon1).unwrap();
    let twice = run(&["canon", "-i", again.to_str().unwrap()]);
    assert_eq!(canon1, stdout_of(&twice));
    // Duplicate constraint collapsed, normals reduced to lowest terms.
    assert!(canon1.contains("ge 1 2"));
}

#[test]
fn cli_runs_are_byte_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let f2 = catalog_lookup("free(2)").unwrap().1;
    let input = write_sigma(dir.path(), "free2.sigma", &f2);
    let input = input.to_str().unwrap();
    let quadrant = sphset(
        2,
        vec![cell(
            2,
            &[(&[1, 0], Relation::Ge), (&[0, 1], Relation::Ge)],
        )],
    );
    let q = write_sphset(dir.path(), "q.sphset", &quadrant);
    let q = q.to_str().unwrap();
    let u4 = dir.path().join("u4.txt");
    std::fs::write(&u4, "1 0 0 0\n").unwrap();
    let u4 = u4.to_str().unwrap();

    let commands: Vec<Vec<&str>> = vec![
        vec!["catalog", "list"],
        vec!["catalog", "show", "free(2)"],
        vec!["xg", "sigma1", "-i", input],
        vec!["xg", "sigma2", "--coeff", "htpy", "-i", input],
        vec!["xgmodw", "sigma2", "--coeff", "z", "-i", input],
        vec!["nu", "invariants", "-i", input],
        vec!["product", "--dim", "1", "--coeff", "q", "-a", input, "-b", input],
        vec!["fgtest", "--dim", "1", "--subspace", u4, "-i", input],
        vec!["b2report", "--subspace", u4, "-i", input],
        vec!["tensor", "report", "-i", input],
        vec!["set", "member", "--ray", "1,1", "-i", q],
        vec!["set", "union", "-a", q, "-b", q],
        vec!["set", "conesum", "-a", q, "-b", q],
        vec!["--seed", "11", "verify", "theorem-a", "-i", input, "--samples", "50"],
        vec!["--seed", "11", "verify", "e1", "-i", input, "--samples", "50", "--coeff", "htpy"],
        vec!["oracle", "tree-witness", "--rank", "2", "--chi", "1/2,-1/3", "--radius", "4"],
        vec!["oracle", "lattice", "--n", "2", "--chi", "1,1", "--radius", "3"],
    ];
    for args in commands {
        let first = run(&args);
        let second = run(&args);
        assert_eq!(
            stdout_of(&first),
            stdout_of(&second),
            "nondeterministic stdout for {args:?}"
        );
        assert_eq!(first.status.code(), second.status.code());
    }
}

#[test]
fn cli_usage_errors_exit_two() {
    let out = run(&["xg", "sigma2", "-i", "missing.sigma"]);
    assert_eq!(out.status.code(), Some(2)); // missing --coeff
    let out = run(&["xg", "sigma2", "--coeff", "bogus", "-i", "missing.sigma"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["definitely-not-a-command"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn branch_cap_env_is_honored() {
    let dir = tempfile::tempdir().unwrap();
    let halves = sphset(
        2,
        vec![
            cell(2, &[(&[1, 0], Relation::Ge)]),
            cell(2, &[(&[-1, 0], Relation::Ge)]),
        ],
    );
    let full = SphSet::full(2);
    let a = write_sphset(dir.path(), "halves.sphset", &halves);
    let b = write_sphset(dir.path(), "full.sphset", &full);
    let ok = Command::new(bin())
        .args([
            "set", "contains",
            "-a", a.to_str().unwrap(),
            "-b", b.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let capped = Command::new(bin())
        .args([
            "set", "contains",
            "-a", a.to_str().unwrap(),
            "-b", b.to_str().unwrap(),
        ])
        .env("XSIGMA_BRANCH_CAP", "1")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(2));
}
