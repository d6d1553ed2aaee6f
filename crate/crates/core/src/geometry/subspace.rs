use nalgebra::{DMatrix, DVector};
use serde::Serialize;

use super::{Unitary, ORTHONORMAL_TOL, RANK_TOL};
use crate::error::{out_of_range, Error, Result};

/// `C^m` viewed as `R^{2m}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Ambient {
    m: usize,
}

impl Ambient {
    pub fn new(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(out_of_range("m", 0, "m >= 1"));
        }
        Ok(Ambient { m })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn real_dim(&self) -> usize {
        2 * self.m
    }

    /// `e_j`, 1-based.
    pub fn e(&self, j: usize) -> DVector<f64> {
        assert!((1..=self.m).contains(&j), "e_{j} outside C^{}", self.m);
        DVector::from_fn(2 * self.m, |r, _| if r == j - 1 { 1.0 } else { 0.0 })
    }

    /// `J e_j`, 1-based.
    pub fn je(&self, j: usize) -> DVector<f64> {
        assert!((1..=self.m).contains(&j), "Je_{j} outside C^{}", self.m);
        DVector::from_fn(
            2 * self.m,
            |r, _| if r == self.m + j - 1 { 1.0 } else { 0.0 },
        )
    }

    pub fn j_matrix(&self) -> DMatrix<f64> {
        let m = self.m;
        DMatrix::from_fn(2 * m, 2 * m, |r, c| {
            if r == c + m {
                1.0
            } else if c == r + m {
                -1.0
            } else {
                0.0
            }
        })
    }

    pub fn apply_j(&self, v: &DVector<f64>) -> DVector<f64> {
        let m = self.m;
        DVector::from_fn(2 * m, |r, _| if r < m { -v[r + m] } else { v[r - m] })
    }

    pub(crate) fn check_vector(&self, v: &DVector<f64>) -> Result<()> {
        if v.len() != self.real_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.real_dim(),
                actual: v.len(),
            });
        }
        Ok(())
    }
}

/// A real linear subspace, stored as a `2m × p` matrix with orthonormal
/// columns.
#[derive(Clone, Debug, PartialEq)]
pub struct RealSubspace {
    ambient: Ambient,
    frame: DMatrix<f64>,
}

impl RealSubspace {
    /// Accepts a frame whose columns are orthonormal to within
    /// [`ORTHONORMAL_TOL`].
    pub fn new(ambient: Ambient, frame: DMatrix<f64>) -> Result<Self> {
        if frame.nrows() != ambient.real_dim() {
            return Err(Error::DimensionMismatch {
                expected: ambient.real_dim(),
                actual: frame.nrows(),
            });
        }
        if frame.ncols() > ambient.real_dim() {
            return Err(out_of_range(
                "p",
                frame.ncols(),
                format!("p <= {}", ambient.real_dim()),
            ));
        }
        let gram = frame.transpose() * &frame;
        let deviation = (gram - DMatrix::identity(frame.ncols(), frame.ncols())).amax();
        if deviation > ORTHONORMAL_TOL {
            return Err(Error::NonOrthonormalFrame { deviation });
        }
        Ok(RealSubspace { ambient, frame })
    }

    /// The span of `vectors`, orthonormalized; dependent vectors are dropped.
    pub fn span(ambient: Ambient, vectors: &[DVector<f64>]) -> Result<Self> {
        let mut basis: Vec<DVector<f64>> = Vec::new();
        for v in vectors {
            ambient.check_vector(v)?;
            let scale = v.norm();
            if scale < RANK_TOL {
                continue;
            }
            let mut w = v / scale;
            // two passes of modified Gram-Schmidt
            for _ in 0..2 {
                for b in &basis {
                    w -= b * b.dot(&w);
                }
            }
            let n = w.norm();
            if n > RANK_TOL.sqrt() {
                basis.push(w / n);
            }
        }
        let frame = if basis.is_empty() {
            DMatrix::zeros(ambient.real_dim(), 0)
        } else {
            DMatrix::from_columns(&basis)
        };
        Ok(RealSubspace { ambient, frame })
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.frame.ncols()
    }

    pub fn frame(&self) -> &DMatrix<f64> {
        &self.frame
    }

    pub fn project(&self, v: &DVector<f64>) -> DVector<f64> {
        &self.frame * (self.frame.transpose() * v)
    }

    pub fn contains(&self, v: &DVector<f64>, tol: f64) -> bool {
        (v - self.project(v)).norm() <= tol * v.norm().max(1.0)
    }

    pub fn orthogonal_complement(&self) -> RealSubspace {
        let n = self.ambient.real_dim();
        let mut vectors: Vec<DVector<f64>> =
            self.frame.column_iter().map(|c| c.into_owned()).collect();
        let p = vectors.len();
        vectors.extend((1..=self.ambient.m).flat_map(|j| [self.ambient.e(j), self.ambient.je(j)]));
        let full = RealSubspace::span(self.ambient, &vectors).expect("standard basis vectors fit");
        debug_assert_eq!(full.dim(), n);
        RealSubspace {
            ambient: self.ambient,
            frame: full.frame.columns(p, n - p).into_owned(),
        }
    }

    pub fn transformed(&self, u: &Unitary) -> Result<RealSubspace> {
        if u.m() != self.ambient.m {
            return Err(Error::DimensionMismatch {
                expected: self.ambient.m,
                actual: u.m(),
            });
        }
        Ok(RealSubspace {
            ambient: self.ambient,
            frame: u.real() * &self.frame,
        })
    }
}

/// Cosines of the Kähler angles, in decreasing order.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct KahlerProfile {
    pub cosines: Vec<f64>,
}

impl KahlerProfile {
    pub fn squared(&self) -> Vec<f64> {
        self.cosines.iter().map(|c| c * c).collect()
    }
}

/// The `floor(p/2)` Kähler cosines of a `p`-dimensional subspace: singular
/// values of `B_ab = <J u_a, u_b>`, which come in equal pairs.
pub fn kahler_cosines(space: &RealSubspace) -> KahlerProfile {
    let p = space.dim();
    if p < 2 {
        return KahlerProfile {
            cosines: Vec::new(),
        };
    }
    let ju = space.ambient.j_matrix() * &space.frame;
    let b = ju.transpose() * &space.frame;
    let mut sv: Vec<f64> = b.singular_values().iter().copied().collect();
    sv.sort_by(|a, b| b.total_cmp(a));
    let cosines = (0..p / 2)
        .map(|i| {
            debug_assert!(
                (sv[2 * i] - sv[2 * i + 1]).abs() < 1e-6,
                "unpaired singular values {sv:?}"
            );
            ((sv[2 * i] + sv[2 * i + 1]) / 2.0).clamp(0.0, 1.0)
        })
        .collect();
    KahlerProfile { cosines }
}
