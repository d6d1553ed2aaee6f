//! Real subspaces of `C^m = R^{2m}`, Kähler angles, Klain functions and
//! restricted centroids of simplices.
//!
//! Coordinates are `(x_1..x_m, y_1..y_m)` with `z_j = x_j + i y_j`, so the
//! complex structure sends `e_j` to `e_{m+j}` and `e_{m+j}` to `-e_j`.

mod certificate;
mod klain;
mod simplex;
mod subspace;
mod unitary;

pub use certificate::{independence_certificate, Certificate};
pub use klain::{elementary_symmetric, klain_mu, klain_psi_sigma};
pub use simplex::{
    build_simplex_tq, psi_closed_form, restricted_centroid_delta, restricted_centroid_psi, Facet,
    SimplexBody,
};
pub use subspace::{kahler_cosines, Ambient, KahlerProfile, RealSubspace};
pub use unitary::Unitary;

/// Frames whose Gram matrix deviates from the identity by more than this are
/// rejected.
pub const ORTHONORMAL_TOL: f64 = 1e-8;

/// Vectors shorter than this are treated as linearly dependent.
pub(crate) const RANK_TOL: f64 = 1e-10;

pub(crate) fn binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

pub(crate) fn factorial(n: usize) -> f64 {
    (1..=n).map(|i| i as f64).product()
}
