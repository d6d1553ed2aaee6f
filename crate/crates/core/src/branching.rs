//! Restriction of irreducible `O(2m)` modules `[lambda]` to `U(m)`.
//!
//! The raw expansion
//! `[lambda] = sum c^mu_{xi,nu} c^lambda_{mu,delta} {xi; nu}` runs over
//! even-column `delta`; its symbols need not be irreducible labels, so the
//! normalized form pushes every term through the modification rule.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use serde::Serialize;

use crate::error::{out_of_range, Error, Result};
use crate::lr::{lr_coefficient, lr_decompositions};
use crate::partition::{even_column_sub_partitions, sub_partitions_of_size, Partition};
use crate::rep_ring::{ULabel, VirtualURep};

/// `[lambda]` for `O(2m)`, with `lambda` having at most `m` parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct OrthLabel {
    pub lambda: Partition,
    pub m: usize,
}

impl OrthLabel {
    pub fn new(lambda: Partition, m: usize) -> Result<Self> {
        if m == 0 {
            return Err(out_of_range("m", 0, "m >= 1"));
        }
        if !lambda.fits(m) {
            return Err(Error::TooManyParts {
                partition: lambda.to_string(),
                m,
            });
        }
        Ok(OrthLabel { lambda, m })
    }
}

/// One symbol `{xi; nu}` of the raw expansion with its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RawTerm {
    pub xi: Partition,
    pub nu: Partition,
    pub coeff: u64,
}

#[derive(Clone, Debug)]
pub struct BranchResult {
    pub source: OrthLabel,
    pub raw: Vec<RawTerm>,
    pub normalized: VirtualURep,
}

impl BranchResult {
    /// Coefficient of `{xi; nu}` in the raw expansion (before modification).
    pub fn raw_coefficient(&self, xi: &Partition, nu: &Partition) -> u64 {
        self.raw
            .iter()
            .find(|t| &t.xi == xi && &t.nu == nu)
            .map_or(0, |t| t.coeff)
    }

    /// Multiplicity of the irreducible `label` in the restriction.
    pub fn multiplicity(&self, label: &ULabel) -> i64 {
        self.normalized.coefficient(label)
    }
}

/// The expansion behind [`branch`], recomputed on every call.
pub fn raw_expansion(lambda: &Partition) -> Vec<RawTerm> {
    let mut acc: BTreeMap<(Partition, Partition), u64> = BTreeMap::new();
    for delta in even_column_sub_partitions(lambda) {
        for mu in sub_partitions_of_size(lambda, lambda.size() - delta.size()) {
            let outer = lr_coefficient(lambda, &mu, &delta);
            if outer == 0 {
                continue;
            }
            for (xi, nu, inner) in lr_decompositions(&mu) {
                let c = inner
                    .checked_mul(outer)
                    .expect("branching coefficient overflow");
                let slot = acc.entry((xi, nu)).or_insert(0);
                *slot = slot.checked_add(c).expect("branching coefficient overflow");
            }
        }
    }
    acc.into_iter()
        .map(|((xi, nu), coeff)| RawTerm { xi, nu, coeff })
        .collect()
}

fn branch_cache() -> &'static RwLock<HashMap<OrthLabel, Arc<BranchResult>>> {
    static CACHE: OnceLock<RwLock<HashMap<OrthLabel, Arc<BranchResult>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Raw and normalized restriction of `[lambda]`, memoized per `(lambda, m)`.
pub fn branch(lambda: &Partition, m: usize) -> Result<Arc<BranchResult>> {
    let source = OrthLabel::new(lambda.clone(), m)?;
    if let Some(hit) = branch_cache().read().unwrap().get(&source) {
        return Ok(Arc::clone(hit));
    }
    let raw = raw_expansion(lambda);
    let mut normalized = VirtualURep::new(m);
    for t in &raw {
        let c = i64::try_from(t.coeff).expect("branching coefficient overflow");
        normalized.accumulate(c, &t.xi, &t.nu);
    }
    let result = Arc::new(BranchResult {
        source: source.clone(),
        raw,
        normalized,
    });
    branch_cache()
        .write()
        .unwrap()
        .insert(source, Arc::clone(&result));
    Ok(result)
}

pub fn branch_raw(lambda: &Partition, m: usize) -> Result<Vec<RawTerm>> {
    Ok(branch(lambda, m)?.raw.clone())
}

pub fn branch_orth_to_unitary(lambda: &Partition, m: usize) -> Result<VirtualURep> {
    Ok(branch(lambda, m)?.normalized.clone())
}

/// Restriction of the complexified `d`-th symmetric power of `R^{2m}`:
/// `[d] + [d-2] + ...`.
pub fn sym_power_branch(d: u32, m: usize) -> Result<VirtualURep> {
    if m < 2 {
        return Err(out_of_range("m", m, "m >= 2"));
    }
    let mut out = VirtualURep::new(m);
    for e in (0..=d).rev().step_by(2) {
        out.add_assign(&branch(&Partition::row(e), m)?.normalized);
    }
    Ok(out)
}
