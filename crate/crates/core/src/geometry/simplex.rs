use nalgebra::{DMatrix, DVector};

use super::{binomial, factorial, klain_mu, Ambient, RealSubspace, Unitary};
use crate::error::{out_of_range, Error, Result};

/// A nondegenerate simplex in `R^{2m}`. `span` is the direction space of its
/// affine hull.
#[derive(Clone, Debug)]
pub struct SimplexBody {
    ambient: Ambient,
    vertices: Vec<DVector<f64>>,
    span: RealSubspace,
}

/// The facet opposite one vertex.
#[derive(Clone, Debug)]
pub struct Facet {
    pub opposite: usize,
    pub direction: RealSubspace,
    pub volume: f64,
    pub outer_normal: DVector<f64>,
}

fn differences(vertices: &[DVector<f64>]) -> Vec<DVector<f64>> {
    vertices[1..].iter().map(|v| v - &vertices[0]).collect()
}

/// `p`-volume of the simplex with these vertices.
fn simplex_volume(vertices: &[DVector<f64>]) -> f64 {
    let d = differences(vertices);
    if d.is_empty() {
        return 1.0;
    }
    let m = DMatrix::from_columns(&d);
    let gram = m.transpose() * &m;
    gram.determinant().max(0.0).sqrt() / factorial(d.len())
}

impl SimplexBody {
    pub fn new(ambient: Ambient, vertices: Vec<DVector<f64>>) -> Result<Self> {
        if vertices.len() < 2 {
            return Err(Error::DegenerateSimplex(format!(
                "{} vertices",
                vertices.len()
            )));
        }
        for v in &vertices {
            ambient.check_vector(v)?;
        }
        let span = RealSubspace::span(ambient, &differences(&vertices))?;
        if span.dim() + 1 != vertices.len() {
            return Err(Error::DegenerateSimplex(format!(
                "{} vertices span an affine space of dimension {}",
                vertices.len(),
                span.dim()
            )));
        }
        Ok(SimplexBody {
            ambient,
            vertices,
            span,
        })
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn vertices(&self) -> &[DVector<f64>] {
        &self.vertices
    }

    pub fn span(&self) -> &RealSubspace {
        &self.span
    }

    pub fn dim(&self) -> usize {
        self.span.dim()
    }

    pub fn volume(&self) -> f64 {
        simplex_volume(&self.vertices)
    }

    pub fn translated(&self, t: &DVector<f64>) -> Result<Self> {
        self.ambient.check_vector(t)?;
        SimplexBody::new(self.ambient, self.vertices.iter().map(|v| v + t).collect())
    }

    pub fn transformed(&self, u: &Unitary) -> Result<Self> {
        if u.m() != self.ambient.m() {
            return Err(Error::DimensionMismatch {
                expected: self.ambient.m(),
                actual: u.m(),
            });
        }
        SimplexBody::new(
            self.ambient,
            self.vertices.iter().map(|v| u.real() * v).collect(),
        )
    }

    pub fn facets(&self) -> Result<Vec<Facet>> {
        (0..self.vertices.len())
            .map(|opposite| {
                let rest: Vec<DVector<f64>> = self
                    .vertices
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != opposite)
                    .map(|(_, v)| v.clone())
                    .collect();
                let direction = RealSubspace::span(self.ambient, &differences(&rest))?;
                let inward = &self.vertices[opposite] - &rest[0];
                let inward = self.span.project(&inward);
                let inward = &inward - direction.project(&inward);
                let height = inward.norm();
                let volume = simplex_volume(&rest);
                if height < 1e-12 || volume < 1e-12 || direction.dim() + 1 != rest.len() {
                    return Err(Error::DegenerateSimplex(format!(
                        "facet opposite vertex {opposite}"
                    )));
                }
                Ok(Facet {
                    opposite,
                    direction,
                    volume,
                    outer_normal: -inward / height,
                })
            })
            .collect()
    }
}

/// `T_q = conv{0, e_1, Je_1, .., e_q, Je_q, e_{q+1}, .., e_{k-q+1}}` in
/// `C^{m'}`, a `(k+1)`-simplex.
pub fn build_simplex_tq(m_prime: usize, k: usize, q: usize) -> Result<SimplexBody> {
    let ambient = Ambient::new(m_prime)?;
    if 2 * q > k + 1 {
        return Err(out_of_range("q", q, format!("0 <= q <= {}", k.div_ceil(2))));
    }
    if k - q + 1 > m_prime {
        return Err(out_of_range("k", k, format!("k - q + 1 <= m' = {m_prime}")));
    }
    let mut vertices = vec![DVector::zeros(2 * m_prime)];
    for j in 1..=q {
        vertices.push(ambient.e(j));
        vertices.push(ambient.je(j));
    }
    for j in q + 1..=k - q + 1 {
        vertices.push(ambient.e(j));
    }
    SimplexBody::new(ambient, vertices)
}

/// `Delta_{k,q}(S) = sum_F Kl_{mu_{k,q}}(F) vol_k(F) n_F / 2` over the facets
/// of a `(k+1)`-simplex.
pub fn restricted_centroid_delta(k: usize, q: usize, body: &SimplexBody) -> Result<DVector<f64>> {
    if body.dim() != k + 1 {
        return Err(Error::DimensionMismatch {
            expected: k + 1,
            actual: body.dim(),
        });
    }
    let mut total = DVector::zeros(body.ambient.real_dim());
    for facet in body.facets()? {
        let kl = klain_mu(k, q, &facet.direction)?;
        total += &facet.outer_normal * (0.5 * kl * facet.volume);
    }
    Ok(total)
}

/// `Psi_{k,r}(S) = sum_{i=r}^{floor((2m'-k)/2)} C(i, r) Delta_{k, k-m'+i}(S)`
/// for `m' <= k < 2m'`.
pub fn restricted_centroid_psi(
    k: usize,
    r: usize,
    body: &SimplexBody,
    m_prime: usize,
) -> Result<DVector<f64>> {
    if body.ambient.m() != m_prime {
        return Err(Error::DimensionMismatch {
            expected: m_prime,
            actual: body.ambient.m(),
        });
    }
    if k < m_prime || k >= 2 * m_prime {
        return Err(out_of_range(
            "k",
            k,
            format!("{m_prime} <= k < {}", 2 * m_prime),
        ));
    }
    let top = (2 * m_prime - k) / 2;
    if r < 1 || r > top {
        return Err(out_of_range("r", r, format!("1 <= r <= {top}")));
    }
    let mut total = DVector::zeros(2 * m_prime);
    for i in r..=top {
        total += restricted_centroid_delta(k, k - m_prime + i, body)? * binomial(i, r);
    }
    Ok(total)
}

/// Closed form of `Psi_{k,r}(T_q)`:
/// `C(m'-k+q-1, r-1) / (2 (k+1)!) [(k-2q+1) sum_{j<=q} (e_j + Je_j) - 2q sum_{q<j<=k-q+1} e_j]`.
pub fn psi_closed_form(m_prime: usize, k: usize, q: usize, r: usize) -> Result<DVector<f64>> {
    let ambient = Ambient::new(m_prime)?;
    if r < 1 || 2 * q > k + 1 || k - q + 1 > m_prime {
        return Err(out_of_range("q", q, "a valid (k, q, r) for T_q"));
    }
    let scale = binomial(m_prime + q - k - 1, r - 1) / (2.0 * factorial(k + 1));
    let mut v = DVector::zeros(2 * m_prime);
    for j in 1..=q {
        v += (ambient.e(j) + ambient.je(j)) * (k + 1 - 2 * q) as f64;
    }
    for j in q + 1..=k - q + 1 {
        v -= ambient.e(j) * (2 * q) as f64;
    }
    Ok(v * scale)
}
