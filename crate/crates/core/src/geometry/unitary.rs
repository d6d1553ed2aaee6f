use nalgebra::{Complex, DMatrix};
use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{out_of_range, Result};

/// An element of `U(m)` with its real `2m × 2m` form `[[A, -B], [B, A]]`.
#[derive(Clone, Debug, PartialEq)]
pub struct Unitary {
    complex: DMatrix<Complex<f64>>,
    real: DMatrix<f64>,
}

impl Unitary {
    pub fn from_complex(u: DMatrix<Complex<f64>>) -> Result<Self> {
        if !u.is_square() || u.nrows() == 0 {
            return Err(out_of_range("m", u.nrows(), "a nonempty square matrix"));
        }
        let m = u.nrows();
        let dev = (u.adjoint() * &u - DMatrix::identity(m, m))
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max);
        if dev > super::ORTHONORMAL_TOL {
            return Err(crate::Error::NonOrthonormalFrame { deviation: dev });
        }
        let real = DMatrix::from_fn(2 * m, 2 * m, |r, c| {
            let z = u[(r % m, c % m)];
            match (r < m, c < m) {
                (true, true) | (false, false) => z.re,
                (true, false) => -z.im,
                (false, true) => z.im,
            }
        });
        Ok(Unitary { complex: u, real })
    }

    /// Haar-distributed, via QR of a complex Gaussian matrix with the phases of
    /// `R`'s diagonal absorbed into `Q`.
    pub fn random<R: Rng + ?Sized>(m: usize, rng: &mut R) -> Self {
        assert!(m > 0);
        let g = DMatrix::from_fn(m, m, |_, _| {
            Complex::new(
                rng.sample::<f64, _>(StandardNormal),
                rng.sample::<f64, _>(StandardNormal),
            )
        });
        let qr = g.qr();
        let r = qr.r();
        let mut q = qr.q();
        for (j, mut col) in q.column_iter_mut().enumerate() {
            let d = r[(j, j)];
            let n = d.norm();
            if n > 0.0 {
                col *= d / n;
            }
        }
        Unitary::from_complex(q).expect("QR factor is unitary")
    }

    pub fn m(&self) -> usize {
        self.complex.nrows()
    }

    pub fn complex(&self) -> &DMatrix<Complex<f64>> {
        &self.complex
    }

    pub fn real(&self) -> &DMatrix<f64> {
        &self.real
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Ambient;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    #[test]
    fn real_form_is_orthogonal_and_commutes_with_j() {
        let mut rng = StdRng::seed_from_u64(7);
        for m in 1..=4 {
            let u = Unitary::random(m, &mut rng);
            let o = u.real();
            assert!((o.transpose() * o - DMatrix::identity(2 * m, 2 * m)).amax() < 1e-12);
            let j = Ambient::new(m).unwrap().j_matrix();
            assert!((o * &j - &j * o).amax() < 1e-12);
        }
    }

    #[test]
    fn rejects_non_unitary() {
        let u = DMatrix::from_element(2, 2, Complex::new(1.0, 0.0));
        assert!(Unitary::from_complex(u).is_err());
    }
}
