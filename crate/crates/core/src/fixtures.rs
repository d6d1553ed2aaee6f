//! Reference tables committed under `fixtures/` and the machinery that checks
//! every cell against the branching computation.
//!
//! A cell marked `expected_discrepancy` is a known disagreement between the
//! reference value and the computation. It is reported, never patched, and
//! does not fail a run.

use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::branching::branch;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rep_ring::ULabel;
use crate::valuation::{hom_dim_spherical, hom_dim_sym, val_irrep_multiplicity, ValContext};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FixtureKind {
    /// Raw coefficient of `{j; i}` in the expansion of `[(g, 2^h)]`.
    RawBranching,
    /// Multiplicity of `{j; i}` in `[(g, 2^h)]` after modification.
    BoundaryMultiplicity,
    /// Multiplicity of `{j; i}` in `Val_k`.
    ValMultiplicity,
    /// `dim Hom([e], Val_k)`.
    HomSpherical,
    /// `dim (Val_k ⊗ Sym^d)^U(m)`.
    SymDimension,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FixtureCell {
    pub row: String,
    pub column: String,
    pub m: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub e: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub j: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub i: Option<u32>,
    pub expected: u64,
    #[serde(default)]
    pub expected_discrepancy: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl FixtureCell {
    fn need<T: Copy>(v: Option<T>, name: &str) -> Result<T> {
        v.ok_or_else(|| Error::Fixture(format!("cell is missing `{name}`")))
    }

    pub fn params(&self) -> String {
        let mut out = format!("m={}", self.m);
        let fields = [
            ("k", self.k.map(|v| v as u64)),
            ("d", self.d.map(u64::from)),
            ("e", self.e.map(u64::from)),
            ("g", self.g.map(u64::from)),
            ("h", self.h.map(|v| v as u64)),
            ("j", self.j.map(u64::from)),
            ("i", self.i.map(u64::from)),
        ];
        for (name, v) in fields {
            if let Some(v) = v {
                out.push_str(&format!(" {name}={v}"));
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FixtureTable {
    pub name: String,
    pub kind: FixtureKind,
    pub description: String,
    pub cells: Vec<FixtureCell>,
}

const BUILTIN: [&str; 5] = [
    include_str!("../fixtures/raw_branching.json"),
    include_str!("../fixtures/boundary_multiplicity.json"),
    include_str!("../fixtures/val_multiplicity.json"),
    include_str!("../fixtures/hom_spherical.json"),
    include_str!("../fixtures/sym_dimension.json"),
];

fn parse_table(text: &str, origin: &str) -> Result<FixtureTable> {
    serde_json::from_str(text).map_err(|e| Error::Fixture(format!("{origin}: {e}")))
}

/// The tables compiled into the library.
pub fn builtin_tables() -> Vec<FixtureTable> {
    BUILTIN
        .iter()
        .map(|t| parse_table(t, "builtin").expect("builtin fixtures are valid"))
        .collect()
}

/// Every `*.json` table in `dir`, in file-name order.
pub fn load_dir(dir: &Path) -> Result<Vec<FixtureTable>> {
    let io = |e: std::io::Error| Error::Fixture(format!("{}: {e}", dir.display()));
    let mut paths: Vec<_> = std::fs::read_dir(dir)
        .map_err(io)?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    if paths.is_empty() {
        return Err(Error::Fixture(format!(
            "no *.json tables in {}",
            dir.display()
        )));
    }
    paths
        .iter()
        .map(|p| {
            let text = std::fs::read_to_string(p).map_err(io)?;
            parse_table(&text, &p.display().to_string())
        })
        .collect()
}

/// Computes the value a cell asserts, by the branching route.
pub fn evaluate_cell(kind: FixtureKind, cell: &FixtureCell) -> Result<u64> {
    let label = || -> Result<ULabel> {
        Ok(ULabel::rows(
            FixtureCell::need(cell.j, "j")?,
            FixtureCell::need(cell.i, "i")?,
        ))
    };
    let source = || -> Result<Partition> {
        Partition::g_two_h(
            FixtureCell::need(cell.g, "g")?,
            FixtureCell::need(cell.h, "h")?,
        )
    };
    let ctx = || ValContext::new(cell.m, FixtureCell::need(cell.k, "k")?);
    match kind {
        FixtureKind::RawBranching => {
            let l = label()?;
            Ok(branch(&source()?, cell.m)?.raw_coefficient(&l.mu, &l.lambda))
        }
        FixtureKind::BoundaryMultiplicity => {
            let c = branch(&source()?, cell.m)?.multiplicity(&label()?);
            u64::try_from(c).map_err(|_| Error::Fixture(format!("negative multiplicity {c}")))
        }
        FixtureKind::ValMultiplicity => val_irrep_multiplicity(
            &ctx()?,
            FixtureCell::need(cell.j, "j")?,
            FixtureCell::need(cell.i, "i")?,
        ),
        FixtureKind::HomSpherical => hom_dim_spherical(&ctx()?, FixtureCell::need(cell.e, "e")?),
        FixtureKind::SymDimension => hom_dim_sym(&ctx()?, FixtureCell::need(cell.d, "d")?),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    /// A marked cell that disagrees, as documented.
    Discrepancy,
    /// A marked cell that unexpectedly agrees.
    Resolved,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CellOutcome {
    pub row: String,
    pub column: String,
    pub params: String,
    pub expected: u64,
    pub computed: u64,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TableReport {
    pub name: String,
    pub kind: FixtureKind,
    pub cells: usize,
    pub passed: usize,
    pub failed: usize,
    pub discrepancies: usize,
    pub resolved: usize,
    /// Every outcome other than a plain pass.
    pub exceptions: Vec<CellOutcome>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReproductionReport {
    pub tables: Vec<TableReport>,
}

impl ReproductionReport {
    pub fn ok(&self) -> bool {
        self.tables.iter().all(|t| t.failed == 0)
    }

    pub fn table(&self, name: &str) -> Option<&TableReport> {
        self.tables.iter().find(|t| t.name == name)
    }
}

pub fn check_table(table: &FixtureTable) -> Result<TableReport> {
    let outcomes: Vec<CellOutcome> = table
        .cells
        .par_iter()
        .map(|cell| {
            let computed = evaluate_cell(table.kind, cell)?;
            let verdict = match (computed == cell.expected, cell.expected_discrepancy) {
                (true, false) => Verdict::Pass,
                (false, false) => Verdict::Fail,
                (false, true) => Verdict::Discrepancy,
                (true, true) => Verdict::Resolved,
            };
            Ok(CellOutcome {
                row: cell.row.clone(),
                column: cell.column.clone(),
                params: cell.params(),
                expected: cell.expected,
                computed,
                verdict,
                note: cell.note.clone(),
            })
        })
        .collect::<Result<_>>()?;
    let count = |v: Verdict| outcomes.iter().filter(|o| o.verdict == v).count();
    Ok(TableReport {
        name: table.name.clone(),
        kind: table.kind,
        cells: outcomes.len(),
        passed: count(Verdict::Pass),
        failed: count(Verdict::Fail),
        discrepancies: count(Verdict::Discrepancy),
        resolved: count(Verdict::Resolved),
        exceptions: outcomes
            .into_iter()
            .filter(|o| o.verdict != Verdict::Pass)
            .collect(),
    })
}

pub fn reproduce(tables: &[FixtureTable]) -> Result<ReproductionReport> {
    Ok(ReproductionReport {
        tables: tables.iter().map(check_table).collect::<Result<_>>()?,
    })
}
