//! Multiplicities of `{j; i}` in the complexified space of `k`-homogeneous
//! translation-invariant valuations on `C^m`, and the resulting dimensions of
//! `U(m)`-equivariant tensor valuations.
//!
//! Two routes are kept side by side. The branching route restricts every
//! `[(g, 2^h)]` occurring in `Val_k` to `U(m)` and reads off coefficients;
//! the `closed_form_*` functions are the tabulated formulas. Neither route
//! depends on the other.

use rayon::prelude::*;
use serde::Serialize;

use crate::branching::branch;
use crate::error::{out_of_range, Result};
use crate::partition::Partition;
use crate::rep_ring::ULabel;

/// Ambient rank `m`, degree `k`, and `ell = min(k, 2m - k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ValContext {
    m: usize,
    k: usize,
}

impl ValContext {
    pub fn new(m: usize, k: usize) -> Result<Self> {
        if m < 2 {
            return Err(out_of_range("m", m, "m >= 2"));
        }
        if k > 2 * m {
            return Err(out_of_range("k", k, format!("0 <= k <= {}", 2 * m)));
        }
        Ok(ValContext { m, k })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn ell(&self) -> usize {
        self.k.min(2 * self.m - self.k)
    }
}

/// The labels `(g, 2^h)`, `g != 1`, with at most `ell` parts and first row in
/// `gs`.
pub fn source_labels(ctx: &ValContext, gs: impl IntoIterator<Item = u32>) -> Vec<Partition> {
    let ell = ctx.ell();
    let mut out = Vec::new();
    for g in gs {
        match g {
            0 => out.push(Partition::empty()),
            1 => {}
            _ => {
                for h in 0..ell {
                    out.push(Partition::g_two_h(g, h).expect("g >= 2"));
                }
            }
        }
    }
    out
}

/// Per-source contributions to the multiplicity of `{j; i}`, over first rows
/// `gs`. Zero contributions are omitted.
pub fn multiplicity_contributions(
    ctx: &ValContext,
    j: u32,
    i: u32,
    gs: impl IntoIterator<Item = u32>,
) -> Result<Vec<(Partition, i64)>> {
    let target = ULabel::rows(j, i);
    let mut out = Vec::new();
    for lam in source_labels(ctx, gs) {
        let c = branch(&lam, ctx.m)?.multiplicity(&target);
        if c != 0 {
            out.push((lam, c));
        }
    }
    Ok(out)
}

/// First rows that can contribute to `{j; i}`: `g` within 2 of `i + j`.
fn candidate_rows(j: u32, i: u32) -> impl Iterator<Item = u32> {
    let e = i + j;
    [e.checked_sub(2), Some(e), Some(e + 2)]
        .into_iter()
        .flatten()
}

/// Multiplicity of `{j; i}` in `Val_{k,C}` restricted to `U(m)`.
pub fn val_irrep_multiplicity(ctx: &ValContext, j: u32, i: u32) -> Result<u64> {
    let total: i64 = multiplicity_contributions(ctx, j, i, candidate_rows(j, i))?
        .iter()
        .map(|(_, c)| c)
        .sum();
    Ok(u64::try_from(total).expect("negative multiplicity"))
}

/// `dim Hom_U(m)([e], Val_{k,C})`: `[e]` restricts to `sum_{i+j=e} {j; i}`
/// without multiplicity.
pub fn hom_dim_spherical(ctx: &ValContext, e: u32) -> Result<u64> {
    (0..=e).try_fold(0u64, |acc, j| {
        Ok(acc
            .checked_add(val_irrep_multiplicity(ctx, j, e - j)?)
            .expect("dimension overflow"))
    })
}

/// `dim (Val_k ⊗ Sym^d(R^{2m}))^{U(m)}`, summing over `[d], [d-2], ...`.
pub fn hom_dim_sym(ctx: &ValContext, d: u32) -> Result<u64> {
    (0..=d).rev().step_by(2).try_fold(0u64, |acc, e| {
        Ok(acc
            .checked_add(hom_dim_spherical(ctx, e)?)
            .expect("dimension overflow"))
    })
}

fn checked_ctx(m: usize, k: usize) -> Result<(i64, i64)> {
    let ctx = ValContext::new(m, k)?;
    Ok((ctx.m as i64, ctx.ell() as i64))
}

fn nonneg(v: i64) -> u64 {
    u64::try_from(v).expect("closed form produced a negative dimension")
}

/// Tabulated dimension of `(Val_k ⊗ Sym^d(R^{2m}))^{U(m)}`.
pub fn closed_form_dim(m: usize, k: usize, d: u32) -> Result<u64> {
    let (m, ell) = checked_ctx(m, k)?;
    let f = (d / 2) as i64;
    let v = if d == 0 {
        1 + ell / 2
    } else if d.is_multiple_of(2) {
        match ell {
            0 => 1,
            l if l < m => 3 * l * f * f + 2 * (l / 2) - 2 * f * f + 2 * f + 1,
            _ => 3 * m * f * f + 2 * (m / 2) - 3 * f * f + 2 * f + 1,
        }
    } else {
        match ell {
            0 => 0,
            l if l < m => 3 * l * f * f + 3 * l * f + 2 * (l / 2) - 2 * f * f,
            _ => 3 * m * f * f + 3 * m * f + 2 * (m / 2) - 3 * f * f - f,
        }
    };
    Ok(nonneg(v))
}

/// Tabulated `dim Hom_U(m)([e], Val_{k,C})`.
pub fn closed_form_hom_spherical(m: usize, k: usize, e: u32) -> Result<u64> {
    let (m, ell) = checked_ctx(m, k)?;
    let e = e as i64;
    let v = match (e, ell) {
        (0, 0) => 1,
        (_, 0) => 0,
        (0, l) => 1 + l / 2,
        (1, l) => 2 * (l / 2),
        (2, l) if l < m => 3 * l + l / 2,
        (_, l) if l < m => 3 * l * e - 3 * l - 2 * e + 4,
        (2, _) => 3 * m + m / 2 - 1,
        _ => 3 * m * e - 3 * m - 3 * e + 5,
    };
    Ok(nonneg(v))
}

/// Tabulated multiplicity of `{j; i}` in `Val_{k,C}`; symmetric in `(j, i)`.
///
/// This reproduces the tabulated values verbatim, including the `{0; e}`,
/// `e >= 2`, `k = m` entry `m - 1` which the branching route contradicts (see
/// [`is_disputed_cell`]).
pub fn closed_form_val_mult(m: usize, k: usize, j: u32, i: u32) -> Result<u64> {
    let (m, ell) = checked_ctx(m, k)?;
    let (a, b) = (j.min(i), j.max(i));
    if ell == 0 {
        return Ok(u64::from(a == 0 && b == 0));
    }
    let middle = ell < m;
    let l = ell;
    let v = match (a, b) {
        (0, 0) => 1 + l / 2,
        (0, 1) => l / 2,
        (0, _) if middle => l,
        (0, _) => m - 1,
        (1, 1) if middle => l + l / 2,
        (1, 1) => m + m / 2 - 1,
        (1, _) if middle => 2 * l - 1,
        (1, _) => 2 * m - 2,
        _ if middle => 3 * l - 2,
        _ => 3 * m - 3,
    };
    Ok(nonneg(v))
}

/// The `{0; e}` (`e >= 2`), `k = m` cells, where the tabulated `m - 1`
/// disagrees with the computed multiplicity `m`.
pub fn is_disputed_cell(m: usize, k: usize, j: u32, i: u32) -> bool {
    k == m && j.min(i) == 0 && j.max(i) >= 2
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimCell {
    pub m: usize,
    pub k: usize,
    pub d: u32,
    pub value: u64,
}

/// Dimensions for every `k in 0..=2m` and `d in ds`, computed in parallel,
/// returned in `(k, d)` order.
pub fn dimension_grid(m: usize, ds: &[u32]) -> Result<Vec<DimCell>> {
    ValContext::new(m, 0)?;
    let cells: Vec<(usize, u32)> = (0..=2 * m)
        .flat_map(|k| ds.iter().map(move |&d| (k, d)))
        .collect();
    cells
        .into_par_iter()
        .map(|(k, d)| {
            let ctx = ValContext::new(m, k)?;
            Ok(DimCell {
                m,
                k,
                d,
                value: hom_dim_sym(&ctx, d)?,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(m: usize, k: usize) -> ValContext {
        ValContext::new(m, k).unwrap()
    }

    #[test]
    fn context_validation() {
        assert!(ValContext::new(2, 5).is_err());
        assert!(ValContext::new(1, 0).is_err());
        assert_eq!(ctx(3, 4).ell(), 2);
        assert_eq!(ctx(3, 3).ell(), 3);
        assert_eq!(ctx(3, 6).ell(), 0);
        assert!(closed_form_dim(2, 5, 0).is_err());
        assert!(closed_form_val_mult(3, 7, 0, 0).is_err());
    }

    #[test]
    fn multiplicity_examples() {
        assert_eq!(val_irrep_multiplicity(&ctx(2, 2), 1, 1), Ok(2));
        assert_eq!(val_irrep_multiplicity(&ctx(2, 2), 0, 0), Ok(2));
        assert_eq!(val_irrep_multiplicity(&ctx(3, 3), 1, 2), Ok(4));
        // {0;2} at m = k = 2: 1 from [2], 0 from [(2,2)], 1 from [(4,2)]
        let parts = multiplicity_contributions(&ctx(2, 2), 0, 2, [0, 2, 4]).unwrap();
        assert_eq!(
            parts,
            vec![
                (Partition::row(2), 1),
                (Partition::g_two_h(4, 1).unwrap(), 1)
            ]
        );
        assert_eq!(val_irrep_multiplicity(&ctx(2, 2), 0, 2), Ok(2));
        assert_eq!(val_irrep_multiplicity(&ctx(3, 0), 0, 0), Ok(1));
        for (j, i) in [(0, 1), (1, 1), (0, 2), (2, 3)] {
            assert_eq!(val_irrep_multiplicity(&ctx(3, 0), j, i), Ok(0));
        }
    }

    #[test]
    fn hom_examples() {
        assert_eq!(hom_dim_spherical(&ctx(2, 2), 2), Ok(6));
        assert_eq!(hom_dim_spherical(&ctx(3, 2), 3), Ok(10));
        assert_eq!(hom_dim_spherical(&ctx(3, 0), 0), Ok(1));
        assert_eq!(hom_dim_spherical(&ctx(3, 0), 2), Ok(0));
        assert_eq!(hom_dim_sym(&ctx(2, 2), 2), Ok(8));
        assert_eq!(hom_dim_sym(&ctx(3, 2), 3), Ok(12));
        assert_eq!(hom_dim_sym(&ctx(2, 0), 4), Ok(1));
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(closed_form_dim(3, 3, 0), Ok(2));
        assert_eq!(closed_form_dim(2, 1, 1), Ok(0));
        assert_eq!(closed_form_dim(3, 3, 1), Ok(2));
        assert_eq!(closed_form_hom_spherical(3, 2, 3), Ok(10));
        assert_eq!(closed_form_hom_spherical(2, 2, 2), Ok(6));
        assert_eq!(closed_form_hom_spherical(2, 0, 1), Ok(0));
        assert_eq!(closed_form_val_mult(3, 2, 1, 1), Ok(3));
        assert_eq!(closed_form_val_mult(4, 3, 2, 2), Ok(7));
        assert_eq!(closed_form_val_mult(2, 2, 0, 2), Ok(1));
    }

    #[test]
    fn swap_symmetry() {
        for m in 2..=3 {
            for k in 0..=2 * m {
                for e in 0..=5 {
                    for j in 0..=e {
                        assert_eq!(
                            val_irrep_multiplicity(&ctx(m, k), j, e - j),
                            val_irrep_multiplicity(&ctx(m, k), e - j, j)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn tabulated_rows_sum_to_spherical_table_except_disputed_column() {
        // With the disputed cell replaced by m, the multiplicity table sums to
        // the spherical table; verbatim it falls short by 2 at k = m, e >= 2.
        for m in 2..=5 {
            for k in 0..=2 * m {
                for e in 0..=6u32 {
                    let verbatim: u64 = (0..=e)
                        .map(|j| closed_form_val_mult(m, k, j, e - j).unwrap())
                        .sum();
                    let corrected: u64 = (0..=e)
                        .map(|j| {
                            let v = closed_form_val_mult(m, k, j, e - j).unwrap();
                            v + u64::from(is_disputed_cell(m, k, j, e - j))
                        })
                        .sum();
                    assert_eq!(corrected, closed_form_hom_spherical(m, k, e).unwrap());
                    if k == m && e >= 2 {
                        assert_eq!(verbatim + 2, corrected);
                    }
                }
            }
        }
    }

    #[test]
    fn spherical_table_sums_to_dimension_table() {
        for m in 2..=6 {
            for k in 0..=2 * m {
                for d in 0..=9u32 {
                    let sum: u64 = (0..=d)
                        .rev()
                        .step_by(2)
                        .map(|e| closed_form_hom_spherical(m, k, e).unwrap())
                        .sum();
                    assert_eq!(sum, closed_form_dim(m, k, d).unwrap(), "m={m} k={k} d={d}");
                }
            }
        }
    }

    #[test]
    fn grid_is_ordered() {
        let grid = dimension_grid(2, &[0, 1, 2]).unwrap();
        assert_eq!(grid.len(), 15);
        assert_eq!(
            grid[0],
            DimCell {
                m: 2,
                k: 0,
                d: 0,
                value: 1
            }
        );
        let k2d2 = grid.iter().find(|c| c.k == 2 && c.d == 2).unwrap();
        assert_eq!(k2d2.value, 8);
    }

    #[test]
    fn support_is_within_two_of_degree() {
        for m in 2..=3 {
            for k in 0..=2 * m {
                for e in 0..=5u32 {
                    for j in 0..=e {
                        let i = e - j;
                        let all = multiplicity_contributions(&ctx(m, k), j, i, 0..=e + 8).unwrap();
                        for (lam, c) in all {
                            let g = lam.part(0);
                            assert!(
                                g + 2 >= e && g <= e + 2,
                                "m={m} k={k} {{{j};{i}}}: [{lam}] contributes {c}"
                            );
                        }
                    }
                }
            }
        }
    }
}
