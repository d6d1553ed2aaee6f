use nalgebra::{Complex, DMatrix};
use serde::Serialize;

use super::{build_simplex_tq, restricted_centroid_psi};
use crate::error::{out_of_range, Result};

/// Outcome of evaluating `Psi_{k,r}(T_q)` for all `1 <= r, i <= n`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Certificate {
    pub m: usize,
    pub k: usize,
    pub m_prime: usize,
    pub n: usize,
    /// Complex rank of the `n × n·m'` matrix of stacked centroids.
    pub rank: usize,
    /// Whether `Psi_{k,r}(T_{k-m'+i})` vanishes exactly when `r > i`.
    pub pattern_ok: bool,
    /// `norms[r-1][i-1] = |Psi_{k,r}(T_{k-m'+i})|`.
    pub norms: Vec<Vec<f64>>,
}

impl Certificate {
    pub fn full_rank(&self) -> bool {
        self.rank == self.n && self.pattern_ok
    }
}

pub const RANK_REL_TOL: f64 = 1e-8;

/// Numerical evidence that the `n = floor(min(k, 2m-k)/2)` vector-valued
/// valuations of degree `k` on `C^m` are linearly independent.
pub fn independence_certificate(m: usize, k: usize) -> Result<Certificate> {
    if m < 2 {
        return Err(out_of_range("m", m, "m >= 2"));
    }
    if k >= 2 * m {
        return Err(out_of_range("k", k, format!("0 <= k < {}", 2 * m)));
    }
    let m_prime = m.min(k);
    let n = k.min(2 * m - k) / 2;
    let empty = Certificate {
        m,
        k,
        m_prime,
        n,
        rank: 0,
        pattern_ok: true,
        norms: Vec::new(),
    };
    if n == 0 {
        return Ok(empty);
    }
    let mut rows = DMatrix::<Complex<f64>>::zeros(n, n * m_prime);
    let mut norms = vec![vec![0.0; n]; n];
    for i in 1..=n {
        let body = build_simplex_tq(m_prime, k, k - m_prime + i)?;
        for r in 1..=n {
            let v = restricted_centroid_psi(k, r, &body, m_prime)?;
            norms[r - 1][i - 1] = v.norm();
            for j in 0..m_prime {
                rows[(r - 1, (i - 1) * m_prime + j)] = Complex::new(v[j], v[m_prime + j]);
            }
        }
    }
    let scale = norms.iter().flatten().copied().fold(0.0, f64::max);
    let pattern_ok =
        (1..=n).all(|r| (1..=n).all(|i| (norms[r - 1][i - 1] <= RANK_REL_TOL * scale) == (r > i)));
    let sv = rows.singular_values();
    let top = sv.iter().copied().fold(0.0, f64::max);
    let rank = sv.iter().filter(|&&s| s > RANK_REL_TOL * top).count();
    Ok(Certificate {
        rank,
        pattern_ok,
        norms,
        ..empty
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_certificates() {
        let c = independence_certificate(2, 2).unwrap();
        assert_eq!((c.n, c.rank, c.pattern_ok), (1, 1, true));
        let c = independence_certificate(3, 0).unwrap();
        assert_eq!((c.n, c.rank, c.pattern_ok), (0, 0, true));
        let c = independence_certificate(3, 1).unwrap();
        assert_eq!(c.n, 0);
        assert!(independence_certificate(3, 6).is_err());
        assert!(independence_certificate(1, 1).is_err());
    }

    #[test]
    fn full_rank_through_m_five() {
        for m in 2..=5 {
            for k in 0..2 * m {
                let c = independence_certificate(m, k).unwrap();
                assert!(c.full_rank(), "m={m} k={k}: {c:?}");
            }
        }
    }
}
