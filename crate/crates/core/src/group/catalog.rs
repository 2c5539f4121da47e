//! Built-in descriptors whose sigma-invariants are published facts.

use std::collections::BTreeMap;

use super::descriptor::{Flags, GroupDescriptor, Tri};
use super::sigma_data::{Coefficient, SigmaData};
use crate::geometry::SphSet;
use crate::{Error, Result};

/// Names understood by [`catalog_lookup`], with a one-line description.
pub fn catalog_entries() -> Vec<(&'static str, &'static str)> {
    vec![
        (
            "free(k)",
            "free group of rank k >= 2: sigma1 and sigma2 complements are the full sphere",
        ),
        (
            "free_abelian(n)",
            "Z^n: all sigma complements are empty, every finiteness flag holds",
        ),
        (
            "nonabelian_limit_placeholder(n)",
            "non-abelian limit group with user-supplied character rank n: full-sphere complements",
        ),
        (
            "bs(1,m)",
            "Baumslag-Solitar BS(1,m), m >= 2: abelianization data only; supply sigma data yourself",
        ),
    ]
}

/// Resolves a catalog name like `free(2)` or `bs(1,3)`.
pub fn catalog_lookup(name: &str) -> Result<(GroupDescriptor, SigmaData)> {
    let unknown = || Error::UnknownCatalogEntry(name.to_string());
    let name = name.trim();
    let (family, args) = match name.find('(') {
        Some(open) if name.ends_with(')') => {
            let family = &name[..open];
            let inner = &name[open + 1..name.len() - 1];
            let args: Vec<i64> = inner
                .split(',')
                .map(|p| p.trim().parse::<i64>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| unknown())?;
            (family, args)
        }
        _ => return Err(unknown()),
    };

    match (family, args.as_slice()) {
        ("free", [k]) if *k >= 2 => free_group(name, *k as usize),
        ("free_abelian", [n]) if *n >= 1 => free_abelian(name, *n as usize),
        ("nonabelian_limit_placeholder", [n]) if *n >= 1 => limit_placeholder(name, *n as usize),
        ("bs", [1, m]) if *m >= 2 => baumslag_solitar(name, *m),
        _ => Err(unknown()),
    }
}

fn gen_names(k: usize) -> Vec<String> {
    (0..k)
        .map(|i| {
            if k <= 26 {
                ((b'a' + i as u8) as char).to_string()
            } else {
                format!("x{}", i + 1)
            }
        })
        .collect()
}

fn free_group(name: &str, k: usize) -> Result<(GroupDescriptor, SigmaData)> {
    let flags = Flags {
        is_fg: Tri::True,
        is_fp2: Tri::True,
        is_fp: Tri::True,
        // The commutator subgroup of a non-abelian free group is free of
        // infinite rank: nothing downstream of it is finitely generated.
        gprime_fg: Tri::False,
        gprime_ab_fg: Tri::False,
        gprime_fp: Tri::False,
        gprime_fp2: Tri::False,
        is_nonabelian_limit_group: Tri::True,
    };
    let g = GroupDescriptor::from_presentation(name, gen_names(k), vec![], flags)?;
    let full = SphSet::full(k);
    let sigma2 = BTreeMap::from([
        (Coefficient::Z, full.clone()),
        (Coefficient::Htpy, full.clone()),
        (Coefficient::FieldQ, full.clone()),
    ]);
    let data = SigmaData::new(g.clone(), Some(full), sigma2)?;
    Ok((g, data))
}

fn free_abelian(name: &str, n: usize) -> Result<(GroupDescriptor, SigmaData)> {
    let gens = gen_names(n);
    let mut relators = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = (i as i64 + 1, j as i64 + 1);
            relators.push(vec![a, b, -a, -b]);
        }
    }
    let g = GroupDescriptor::from_presentation(name, gens, relators, Flags::all_true())?;
    let empty = SphSet::empty(n);
    let sigma2 = BTreeMap::from([
        (Coefficient::Z, empty.clone()),
        (Coefficient::Htpy, empty.clone()),
        (Coefficient::FieldQ, empty.clone()),
    ]);
    let data = SigmaData::new(g.clone(), Some(empty), sigma2)?;
    Ok((g, data))
}

fn limit_placeholder(name: &str, n: usize) -> Result<(GroupDescriptor, SigmaData)> {
    let flags = Flags {
        is_fg: Tri::True,
        is_fp2: Tri::True,
        is_fp: Tri::True,
        gprime_fg: Tri::Unknown,
        gprime_ab_fg: Tri::Unknown,
        gprime_fp: Tri::Unknown,
        gprime_fp2: Tri::Unknown,
        is_nonabelian_limit_group: Tri::True,
    };
    // Placeholder presentation: the descriptor carries the stated character
    // rank and invariants, not an actual presentation of the group.
    let g = GroupDescriptor::from_presentation(name, gen_names(n), vec![], flags)?;
    let full = SphSet::full(n);
    let sigma2 = BTreeMap::from([
        (Coefficient::Z, full.clone()),
        (Coefficient::Htpy, full.clone()),
        (Coefficient::FieldQ, full.clone()),
    ]);
    let data = SigmaData::new(g.clone(), Some(full), sigma2)?;
    Ok((g, data))
}

fn baumslag_solitar(name: &str, m: i64) -> Result<(GroupDescriptor, SigmaData)> {
    // <a, t | t a t^-1 a^-m>
    let mut relator = vec![2, 1, -2];
    relator.extend(std::iter::repeat(-1).take(m as usize));
    let flags = Flags {
        is_fg: Tri::True,
        is_fp2: Tri::True,
        is_fp: Tri::True,
        gprime_fg: Tri::Unknown,
        gprime_ab_fg: Tri::Unknown,
        gprime_fp: Tri::Unknown,
        gprime_fp2: Tri::Unknown,
        is_nonabelian_limit_group: Tri::Unknown,
    };
    let g = GroupDescriptor::from_presentation(
        name,
        vec!["a".into(), "t".into()],
        vec![relator],
        flags,
    )?;
    let data = SigmaData::new(g.clone(), None, BTreeMap::new())?;
    Ok((g, data))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::int;

    #[test]
    fn free2_has_full_complements() {
        let (g, data) = catalog_lookup("free(2)").unwrap();
        assert_eq!(g.ab_rank, 2);
        assert!(data.sigma1c().unwrap().equal(&SphSet::full(2)).unwrap());
        assert!(data
            .sigma2c(Coefficient::Z)
            .unwrap()
            .equal(&SphSet::full(2))
            .unwrap());
        assert_eq!(g.flags.gprime_fg, Tri::False);
        assert_eq!(g.flags.is_nonabelian_limit_group, Tri::True);
    }

    #[test]
    fn free_abelian_has_empty_complements() {
        let (g, data) = catalog_lookup("free_abelian(3)").unwrap();
        assert_eq!(g.ab_rank, 3);
        assert!(data.sigma1c().unwrap().is_empty_set());
        assert_eq!(g.flags.gprime_fg, Tri::True);
    }

    #[test]
    fn bs_entry_has_abelianization_but_no_sigma() {
        let (g, data) = catalog_lookup("bs(1,2)").unwrap();
        assert_eq!(g.ab_rank, 1);
        assert!(g.torsion.is_empty());
        assert!(data.sigma1c_opt().is_none());
        let (g3, _) = catalog_lookup("bs(1,3)").unwrap();
        assert_eq!(g3.torsion, vec![int(2)]);
    }

    #[test]
    fn unknown_names_are_rejected() {
        for bad in ["free(1)", "free", "bs(2,3)", "mystery(4)", "free(0)"] {
            assert!(matches!(
                catalog_lookup(bad),
                Err(Error::UnknownCatalogEntry(_))
            ));
        }
    }
}
