//! Reference data shipped with the crate: the Leech basis, the 14 diagram
//! roots and the Leech+H to 3E8+H basis change.

use std::str::FromStr;

use crate::error::{ParseError, Result};
use crate::hlattice::LVec;
use crate::hquat::Hq;

pub const LEECH_BASIS: &str = include_str!("../fixtures/leech_basis.txt");
pub const ROOTS14: &str = include_str!("../fixtures/roots14.txt");
pub const BASIS_CHANGE: &str = include_str!("../fixtures/basis_change.txt");

pub const LEECH_BASIS_FILE: &str = "leech_basis.txt";
pub const ROOTS14_FILE: &str = "roots14.txt";
pub const BASIS_CHANGE_FILE: &str = "basis_change.txt";

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum NodeKind {
    Point,
    Line,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootEntry {
    pub label: String,
    pub kind: NodeKind,
    /// Ambient `3E8 ⊕ H` coordinates: three pairs in `H²`, then the cell.
    pub ambient: Vec<Hq>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixtures {
    pub leech_basis: Vec<LVec>,
    pub roots: Vec<RootEntry>,
    pub basis_change: Vec<LVec>,
}

fn data_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'))
}

pub fn parse_rows(text: &str, width: usize) -> Result<Vec<LVec>> {
    data_lines(text)
        .map(|l| {
            let v = LVec::from_str(l)?;
            if v.len() != width {
                return Err(ParseError::Vector(format!("expected {width} entries: {l}")).into());
            }
            Ok(v)
        })
        .collect()
}

pub fn parse_roots(text: &str) -> Result<Vec<RootEntry>> {
    data_lines(text)
        .map(|l| {
            let mut it = l.split_whitespace();
            let bad = || ParseError::Vector(l.to_string());
            let label = it.next().ok_or_else(bad)?.to_string();
            let kind = match it.next().ok_or_else(bad)? {
                "point" => NodeKind::Point,
                "line" => NodeKind::Line,
                _ => return Err(bad().into()),
            };
            let ambient = it.map(Hq::from_str).collect::<Result<Vec<_>, _>>()?;
            if ambient.len() != 8 {
                return Err(bad().into());
            }
            Ok(RootEntry { label, kind, ambient })
        })
        .collect()
}

impl Fixtures {
    pub fn parse(leech_basis: &str, roots: &str, basis_change: &str) -> Result<Fixtures> {
        Ok(Fixtures {
            leech_basis: parse_rows(leech_basis, 6)?,
            roots: parse_roots(roots)?,
            basis_change: parse_rows(basis_change, 8)?,
        })
    }

    pub fn embedded() -> Fixtures {
        Fixtures::parse(LEECH_BASIS, ROOTS14, BASIS_CHANGE).expect("embedded fixtures parse")
    }
}
