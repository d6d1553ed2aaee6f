use super::{binomial, kahler_cosines, RealSubspace};
use crate::error::{out_of_range, Error, Result};

/// `e_r(values)`; zero for `r > values.len()`.
pub fn elementary_symmetric(values: &[f64], r: usize) -> f64 {
    let mut e = vec![0.0; values.len() + 1];
    e[0] = 1.0;
    for (n, &x) in values.iter().enumerate() {
        for i in (1..=n + 1).rev() {
            e[i] += x * e[i - 1];
        }
    }
    e.get(r).copied().unwrap_or(0.0)
}

fn check_dim(space: &RealSubspace, k: usize) -> Result<()> {
    if space.dim() != k {
        return Err(Error::DimensionMismatch {
            expected: k,
            actual: space.dim(),
        });
    }
    Ok(())
}

fn mu_from_cos2(k: usize, q: usize, cos2: &[f64]) -> f64 {
    (q..=k / 2)
        .map(|i| {
            let sign = if (i + q).is_multiple_of(2) { 1.0 } else { -1.0 };
            sign * binomial(i, q) * elementary_symmetric(cos2, i)
        })
        .sum()
}

/// Klain function of the unitary-invariant valuation `mu_{k,q}` at a
/// `k`-dimensional subspace.
pub fn klain_mu(k: usize, q: usize, space: &RealSubspace) -> Result<f64> {
    let m = space.ambient().m();
    if k > 2 * m {
        return Err(out_of_range("k", k, format!("0 <= k <= {}", 2 * m)));
    }
    let lo = k.saturating_sub(m);
    if q < lo || q > k / 2 {
        return Err(out_of_range("q", q, format!("{lo} <= q <= {}", k / 2)));
    }
    check_dim(space, k)?;
    if k <= m {
        Ok(mu_from_cos2(k, q, &kahler_cosines(space).squared()))
    } else {
        let perp = space.orthogonal_complement();
        Ok(mu_from_cos2(
            2 * m - k,
            m + q - k,
            &kahler_cosines(&perp).squared(),
        ))
    }
}

/// `sigma_r` of the squared Kähler cosines of the orthogonal complement,
/// for `m <= k < 2m`.
pub fn klain_psi_sigma(k: usize, r: usize, space: &RealSubspace) -> Result<f64> {
    let m = space.ambient().m();
    if k < m || k >= 2 * m {
        return Err(out_of_range("k", k, format!("{m} <= k < {}", 2 * m)));
    }
    let top = (2 * m - k) / 2;
    if r < 1 || r > top {
        return Err(out_of_range("r", r, format!("1 <= r <= {top}")));
    }
    check_dim(space, k)?;
    let perp = space.orthogonal_complement();
    Ok(elementary_symmetric(&kahler_cosines(&perp).squared(), r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{Ambient, Unitary};
    use proptest::prelude::*;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    #[test]
    fn elementary_symmetric_values() {
        let v = [1.0, 2.0, 3.0];
        let got: Vec<f64> = (0..5).map(|r| elementary_symmetric(&v, r)).collect();
        assert_eq!(got, [1.0, 6.0, 11.0, 6.0, 0.0]);
        assert_eq!(elementary_symmetric(&[], 0), 1.0);
    }

    #[test]
    fn klain_on_coordinate_planes() {
        let a = Ambient::new(2).unwrap();
        let complex_line = RealSubspace::span(a, &[a.e(1), a.je(1)]).unwrap();
        let lagrangian = RealSubspace::span(a, &[a.e(1), a.e(2)]).unwrap();
        assert_eq!(klain_mu(2, 1, &complex_line).unwrap(), 1.0);
        assert_eq!(klain_mu(2, 0, &complex_line).unwrap(), 0.0);
        assert_eq!(klain_mu(2, 1, &lagrangian).unwrap(), 0.0);
        assert_eq!(klain_mu(2, 0, &lagrangian).unwrap(), 1.0);
    }

    #[test]
    fn klain_argument_checks() {
        let a = Ambient::new(2).unwrap();
        let plane = RealSubspace::span(a, &[a.e(1), a.e(2)]).unwrap();
        assert!(matches!(
            klain_mu(2, 2, &plane),
            Err(Error::OutOfRange { name: "q", .. })
        ));
        assert!(matches!(
            klain_mu(3, 1, &plane),
            Err(Error::DimensionMismatch { .. })
        ));
        let three = RealSubspace::span(a, &[a.e(1), a.e(2), a.je(1)]).unwrap();
        assert_eq!(kahler_cosines(&three).cosines, [1.0]);
        let face = RealSubspace::span(a, &[a.je(1) - a.e(1), a.e(2) - a.e(1)]).unwrap();
        assert!((klain_mu(2, 1, &face).unwrap() - 1.0 / 3.0).abs() < 1e-12);
        assert!((klain_psi_sigma(2, 1, &face).unwrap() - 1.0 / 3.0).abs() < 1e-12);
        let line = RealSubspace::span(a, &[a.e(1), a.je(1)]).unwrap();
        assert!((klain_psi_sigma(2, 1, &line).unwrap() - 1.0).abs() < 1e-12);
        assert!(matches!(
            klain_mu(3, 0, &three),
            Err(Error::OutOfRange { name: "q", .. })
        ));
        assert!(klain_psi_sigma(3, 1, &three).is_err());
        let b = Ambient::new(3).unwrap();
        let four = RealSubspace::span(b, &[b.e(1), b.e(2), b.e(3), b.je(1)]).unwrap();
        assert_eq!(klain_psi_sigma(4, 1, &four).unwrap(), 0.0);
        assert!(klain_psi_sigma(4, 2, &four).is_err());
        assert!(klain_psi_sigma(1, 1, &RealSubspace::span(a, &[a.e(1)]).unwrap()).is_err());
    }

    fn random_subspace(m: usize, p: usize, seed: u64) -> RealSubspace {
        use rand::Rng;
        let mut rng = StdRng::seed_from_u64(seed);
        let a = Ambient::new(m).unwrap();
        let vs: Vec<_> = (0..p)
            .map(|_| nalgebra::DVector::from_fn(2 * m, |_, _| rng.random_range(-1.0..1.0)))
            .collect();
        RealSubspace::span(a, &vs).unwrap()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        /// The mu_{k,q} with fixed k sum to one on every k-plane.
        #[test]
        fn klain_functions_partition_unity(m in 2usize..=4, k_off in 0usize..=8, seed in any::<u64>()) {
            let k = k_off % (2 * m + 1);
            let f = random_subspace(m, k, seed);
            prop_assume!(f.dim() == k);
            let total: f64 = (k.saturating_sub(m)..=k / 2).map(|q| klain_mu(k, q, &f).unwrap()).sum();
            prop_assert!((total - 1.0).abs() < 1e-9);
        }

        #[test]
        fn klain_is_unitarily_invariant(m in 2usize..=4, k_off in 0usize..=8, seed in any::<u64>()) {
            let k = k_off % (2 * m + 1);
            let f = random_subspace(m, k, seed);
            prop_assume!(f.dim() == k);
            let u = Unitary::random(m, &mut StdRng::seed_from_u64(seed ^ 0x5eed));
            let g = f.transformed(&u).unwrap();
            for q in k.saturating_sub(m)..=k / 2 {
                prop_assert!((klain_mu(k, q, &f).unwrap() - klain_mu(k, q, &g).unwrap()).abs() < 1e-9);
            }
        }

        #[test]
        fn direct_and_double_complement_agree(m in 2usize..=4, k_off in 0usize..=4, seed in any::<u64>()) {
            let k = k_off % (m + 1);
            let f = random_subspace(m, k, seed);
            prop_assume!(f.dim() == k);
            let ff = f.orthogonal_complement().orthogonal_complement();
            for q in 0..=k / 2 {
                prop_assert!((klain_mu(k, q, &f).unwrap() - klain_mu(k, q, &ff).unwrap()).abs() < 1e-9);
            }
        }

        #[test]
        fn psi_sigma_matches_mu_combination(m in 2usize..=4, k_off in 0usize..=4, seed in any::<u64>()) {
            let k = m + k_off % m;
            let f = random_subspace(m, k, seed);
            prop_assume!(f.dim() == k);
            for r in 1..=(2 * m - k) / 2 {
                let combo: f64 = (r..=(2 * m - k) / 2)
                    .map(|i| crate::geometry::binomial(i, r) * klain_mu(k, k - m + i, &f).unwrap())
                    .sum();
                prop_assert!((combo - klain_psi_sigma(k, r, &f).unwrap()).abs() < 1e-9);
            }
        }

        #[test]
        fn cosines_ignore_choice_of_frame(m in 2usize..=4, p in 1usize..=8, seed in any::<u64>()) {
            use rand::Rng;
            let p = p.min(2 * m);
            let f = random_subspace(m, p, seed);
            prop_assume!(f.dim() == p);
            let mut rng = StdRng::seed_from_u64(!seed);
            let mixed: Vec<_> = (0..p)
                .map(|_| f.frame() * nalgebra::DVector::from_fn(p, |_, _| rng.random_range(-1.0..1.0)))
                .collect();
            let g = RealSubspace::span(f.ambient(), &mixed).unwrap();
            prop_assume!(g.dim() == p);
            let (a, b) = (kahler_cosines(&f).cosines, kahler_cosines(&g).cosines);
            for (x, y) in a.iter().zip(&b) {
                prop_assert!((x - y).abs() < 1e-9);
            }
        }

        /// For k = m a subspace and its complement share Kähler angles.
        #[test]
        fn half_dimensional_complement_has_same_angles(m in 2usize..=5, seed in any::<u64>()) {
            let f = random_subspace(m, m, seed);
            prop_assume!(f.dim() == m);
            let a = kahler_cosines(&f).cosines;
            let b = kahler_cosines(&f.orthogonal_complement()).cosines;
            prop_assert_eq!(a.len(), b.len());
            for (x, y) in a.iter().zip(&b) {
                prop_assert!((x - y).abs() < 1e-9, "{:?} vs {:?}", a, b);
            }
        }
    }
}
