//! Irreducible `U(m)` labels `{mu; lambda}`, King's modification rule, and
//! integer combinations of labels (virtual characters).

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{out_of_range, Error, Result};
use crate::lr::schur_product_covariant;
use crate::partition::Partition;

/// `{mu; lambda}`: highest weight `(lambda_1, .., 0, .., -mu_q, .., -mu_1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ULabel {
    pub mu: Partition,
    pub lambda: Partition,
}

impl ULabel {
    pub fn new(mu: Partition, lambda: Partition) -> Self {
        ULabel { mu, lambda }
    }

    /// The one-row label `{j; i}`.
    pub fn rows(j: u32, i: u32) -> Self {
        ULabel::new(Partition::row(j), Partition::row(i))
    }

    pub fn is_basis(&self, m: usize) -> bool {
        self.mu.num_parts() + self.lambda.num_parts() <= m
    }

    pub fn dual(&self) -> ULabel {
        ULabel::new(self.lambda.clone(), self.mu.clone())
    }

    fn sort_key(&self) -> (usize, &Partition, &Partition) {
        (self.lambda.size() + self.mu.size(), &self.lambda, &self.mu)
    }

    /// The highest weight padded to length `m`.
    pub fn highest_weight(&self, m: usize) -> Result<Vec<i64>> {
        if !self.is_basis(m) {
            return Err(Error::NonBasisLabel {
                label: self.to_string(),
                m,
            });
        }
        let mut w = vec![0i64; m];
        for (i, &l) in self.lambda.parts().iter().enumerate() {
            w[i] = l as i64;
        }
        for (i, &u) in self.mu.parts().iter().enumerate() {
            w[m - 1 - i] = -(u as i64);
        }
        Ok(w)
    }
}

impl Ord for ULabel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for ULabel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn partition_or_zero(p: &Partition) -> String {
    if p.is_empty() {
        "0".to_string()
    } else {
        p.to_string()
    }
}

/// Paper-style `mu;lambda` with `0` for an empty partition, e.g. `4;3,3`.
impl fmt::Display for ULabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{};{}",
            partition_or_zero(&self.mu),
            partition_or_zero(&self.lambda)
        )
    }
}

impl FromStr for ULabel {
    type Err = Error;

    /// Parses `mu=<partition>;lambda=<partition>`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidLabel(s.to_string());
        let (a, b) = s.split_once(';').ok_or_else(bad)?;
        let mu = a.trim().strip_prefix("mu=").ok_or_else(bad)?;
        let lambda = b.trim().strip_prefix("lambda=").ok_or_else(bad)?;
        Ok(ULabel::new(
            mu.parse().map_err(|_| bad())?,
            lambda.parse().map_err(|_| bad())?,
        ))
    }
}

/// A label with a sign; `sign == 0` is the zero element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedTerm {
    pub sign: i8,
    pub label: ULabel,
}

impl SignedTerm {
    pub fn zero() -> Self {
        SignedTerm {
            sign: 0,
            label: ULabel::new(Partition::empty(), Partition::empty()),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }
}

impl fmt::Display for SignedTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            0 => f.write_str("0"),
            s => write!(f, "{}1 {{{}}}", if s > 0 { "+" } else { "-" }, self.label),
        }
    }
}

/// Rewrites `{mu; lambda}` in the basis of irreducible `U(m)` labels by
/// repeated border-strip removal.
pub fn normalize_label(mu: &Partition, lambda: &Partition, m: usize) -> SignedTerm {
    let mut sign = 1i8;
    let mut mu = mu.clone();
    let mut lambda = lambda.clone();
    loop {
        let total = lambda.num_parts() + mu.num_parts();
        if total <= m {
            return SignedTerm {
                sign,
                label: ULabel::new(mu, lambda),
            };
        }
        let h = total - m - 1;
        if h == 0 {
            return SignedTerm::zero();
        }
        let (Some((lam, x)), Some((mu_rest, y))) =
            (lambda.remove_border_strip(h), mu.remove_border_strip(h))
        else {
            return SignedTerm::zero();
        };
        // (-1)^(x+y-1)
        if (x + y) % 2 == 0 {
            sign = -sign;
        }
        lambda = lam;
        mu = mu_rest;
    }
}

/// A finite integer combination of irreducible `U(m)` labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VirtualURep {
    m: usize,
    coeffs: BTreeMap<ULabel, i64>,
}

impl VirtualURep {
    pub fn new(m: usize) -> Self {
        VirtualURep {
            m,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coefficient(&self, label: &ULabel) -> i64 {
        self.coeffs.get(label).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ULabel, i64)> {
        self.coeffs.iter().map(|(l, &c)| (l, c))
    }

    fn add_basis(&mut self, label: ULabel, coeff: i64) {
        debug_assert!(label.is_basis(self.m));
        if coeff == 0 {
            return;
        }
        match self.coeffs.entry(label) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                let sum = slot.get().checked_add(coeff).expect("coefficient overflow");
                if sum == 0 {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    /// Adds `coeff * {mu; lambda}` after normalizing the symbol.
    pub fn accumulate(&mut self, coeff: i64, mu: &Partition, lambda: &Partition) {
        let term = normalize_label(mu, lambda, self.m);
        if !term.is_zero() {
            let c = coeff
                .checked_mul(term.sign as i64)
                .expect("coefficient overflow");
            self.add_basis(term.label, c);
        }
    }

    /// Consuming form of [`VirtualURep::accumulate`].
    pub fn with(mut self, coeff: i64, mu: &Partition, lambda: &Partition) -> Self {
        self.accumulate(coeff, mu, lambda);
        self
    }

    pub fn add_assign(&mut self, other: &VirtualURep) {
        assert_eq!(
            self.m, other.m,
            "adding virtual representations of different rank"
        );
        for (label, c) in other.iter() {
            self.add_basis(label.clone(), c);
        }
    }

    /// Swaps `{mu; lambda}` to `{lambda; mu}` termwise.
    pub fn dual(&self) -> VirtualURep {
        VirtualURep {
            m: self.m,
            coeffs: self.coeffs.iter().map(|(l, &c)| (l.dual(), c)).collect(),
        }
    }

    pub fn dimension(&self) -> i128 {
        self.iter()
            .map(|(l, c)| c as i128 * weyl_dim_u(l, self.m).expect("basis label") as i128)
            .sum()
    }

    /// Product of two combinations of covariant labels `{0; nu}`.
    pub fn covariant_product(&self, other: &VirtualURep) -> Result<VirtualURep> {
        assert_eq!(self.m, other.m);
        let mut out = VirtualURep::new(self.m);
        for (a, ca) in self.iter() {
            for (b, cb) in other.iter() {
                for l in [a, b] {
                    if !l.mu.is_empty() {
                        return Err(Error::InvalidLabel(format!(
                            "{{{l}}} is not covariant; only {{0;nu}} products are supported"
                        )));
                    }
                }
                for (lam, c) in schur_product_covariant(&a.lambda, &b.lambda, self.m) {
                    out.add_basis(ULabel::new(Partition::empty(), lam), ca * cb * c as i64);
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Display for VirtualURep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (i, (label, c)) in self.iter().enumerate() {
            match (i, c < 0) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                (_, false) => f.write_str(" + ")?,
                (_, true) => f.write_str(" - ")?,
            }
            match c.abs() {
                1 => write!(f, "{{{label}}}")?,
                a => write!(f, "{a}{{{label}}}")?,
            }
        }
        Ok(())
    }
}

/// Weyl dimension of the irreducible `U(m)` module `label`.
pub fn weyl_dim_u(label: &ULabel, m: usize) -> Result<u64> {
    if m == 0 {
        return Err(out_of_range("m", 0, "m >= 1"));
    }
    let w = label.highest_weight(m)?;
    let mut num: i128 = 1;
    let mut den: i128 = 1;
    for i in 0..m {
        for j in i + 1..m {
            let gap = (j - i) as i128;
            num = num
                .checked_mul(w[i] as i128 - w[j] as i128 + gap)
                .expect("Weyl dimension overflow");
            den = den.checked_mul(gap).expect("Weyl dimension overflow");
            let g = gcd(num, den);
            num /= g;
            den /= g;
        }
    }
    debug_assert_eq!(den, 1);
    Ok(u64::try_from(num / den).expect("Weyl dimension overflow"))
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.max(1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn label(mu: &str, lambda: &str) -> ULabel {
        ULabel::new(p(mu), p(lambda))
    }

    #[test]
    fn normalize_examples() {
        let t = normalize_label(&p("4,1,1,1"), &p("3,3,2,1"), 4);
        assert_eq!((t.sign, t.label), (1, label("4", "3,3")));
        assert!(normalize_label(&p("4,1,1,1"), &p("3,3,2,1"), 5).is_zero());
        let t = normalize_label(&p("1,1"), &p("1,1"), 2);
        assert_eq!((t.sign, t.label), (-1, label("1", "1")));
        let t = normalize_label(&p("1"), &p("2"), 3);
        assert_eq!((t.sign, t.label), (1, label("1", "2")));
    }

    #[test]
    fn normalize_is_idempotent_on_basis() {
        for a in 0..=4 {
            for b in 0..=4 {
                for mu in partitions_of(a, 3) {
                    for lam in partitions_of(b, 3) {
                        let m = (mu.num_parts() + lam.num_parts()).max(1);
                        let t = normalize_label(&mu, &lam, m);
                        assert_eq!(t.sign, 1);
                        assert_eq!(t.label, ULabel::new(mu.clone(), lam.clone()));
                    }
                }
            }
        }
    }

    #[test]
    fn one_row_over_is_zero() {
        for a in 0..=8 {
            for b in 0..=8 - a {
                for mu in partitions_of(a, a) {
                    for lam in partitions_of(b, b) {
                        let total = mu.num_parts() + lam.num_parts();
                        if total >= 1 {
                            assert!(
                                normalize_label(&mu, &lam, total - 1).is_zero(),
                                "{mu};{lam}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn hook_pairs_reduce_to_minus_rows() {
        for m in 2..=5 {
            for i in 1..=4 {
                for j in 1..=4 {
                    let t =
                        normalize_label(&Partition::hook(j, m - 1), &Partition::hook(i, m - 1), m);
                    assert_eq!(t.sign, -1);
                    assert_eq!(t.label, ULabel::rows(j, i));
                }
            }
        }
    }

    #[test]
    fn accumulate_examples() {
        let v = VirtualURep::new(3).with(1, &Partition::empty(), &p("2"));
        assert_eq!(v.coefficient(&ULabel::rows(0, 2)), 1);
        assert_eq!(v.len(), 1);

        let v = VirtualURep::new(2)
            .with(1, &p("1"), &p("1"))
            .with(1, &p("1,1"), &p("1,1"));
        assert!(v.is_empty());

        let v = VirtualURep::new(5).with(2, &p("4,1,1,1"), &p("3,3,2,1"));
        assert!(v.is_empty());
    }

    #[test]
    fn dual_examples_and_involution() {
        let v = VirtualURep::new(2).with(1, &Partition::empty(), &p("1"));
        assert_eq!(
            v.dual(),
            VirtualURep::new(2).with(1, &p("1"), &Partition::empty())
        );
        let triv = VirtualURep::new(2).with(5, &Partition::empty(), &Partition::empty());
        assert_eq!(triv.dual(), triv);
        let v =
            VirtualURep::new(3)
                .with(1, &p("1"), &p("2"))
                .with(2, &Partition::empty(), &p("1,1"));
        let d = v.dual();
        assert_eq!(d.coefficient(&label("2", "1")), 1);
        assert_eq!(d.coefficient(&label("1,1", "")), 2);
        assert_eq!(d.dual(), v);
    }

    #[test]
    fn weyl_dimensions() {
        for m in 1..=5 {
            assert_eq!(weyl_dim_u(&ULabel::rows(0, 0), m), Ok(1));
        }
        assert_eq!(weyl_dim_u(&ULabel::rows(1, 1), 2), Ok(3));
        assert_eq!(weyl_dim_u(&ULabel::rows(0, 2), 2), Ok(3));
        // exterior powers of C^4
        for k in 1..=4 {
            let l = ULabel::new(Partition::empty(), Partition::hook(1, k - 1));
            assert_eq!(weyl_dim_u(&l, 4), Ok([4, 6, 4, 1][k - 1]));
        }
        // adjoint of U(3)
        assert_eq!(weyl_dim_u(&ULabel::rows(1, 1), 3), Ok(8));
        assert!(weyl_dim_u(&label("1,1", "1"), 2).is_err());
    }

    #[test]
    fn label_text_format() {
        let l: ULabel = "mu=1;lambda=2,1".parse().unwrap();
        assert_eq!(l, label("1", "2,1"));
        assert_eq!(l.to_string(), "1;2,1");
        let l: ULabel = "mu=;lambda=2".parse().unwrap();
        assert_eq!(l.to_string(), "0;2");
        assert!("lambda=2;mu=1".parse::<ULabel>().is_err());
        assert!("mu=1".parse::<ULabel>().is_err());
    }

    #[test]
    fn covariant_product_is_commutative_and_associative() {
        let m = 3;
        let mut labels = Vec::new();
        for n in 0..=3 {
            labels.extend(partitions_of(n, m));
        }
        let cov = |p: &Partition| VirtualURep::new(m).with(1, &Partition::empty(), p);
        for a in &labels {
            for b in &labels {
                let ab = cov(a).covariant_product(&cov(b)).unwrap();
                let ba = cov(b).covariant_product(&cov(a)).unwrap();
                assert_eq!(ab, ba);
                for c in &labels {
                    if a.size() + b.size() + c.size() > 6 {
                        continue;
                    }
                    let left = ab.covariant_product(&cov(c)).unwrap();
                    let right = cov(a)
                        .covariant_product(&cov(b).covariant_product(&cov(c)).unwrap())
                        .unwrap();
                    assert_eq!(left, right);
                }
            }
        }
    }

    #[test]
    fn covariant_product_conserves_dimension() {
        let m = 3;
        for a in partitions_of(3, m) {
            for b in partitions_of(2, m) {
                let va = VirtualURep::new(m).with(1, &Partition::empty(), &a);
                let vb = VirtualURep::new(m).with(1, &Partition::empty(), &b);
                let prod = va.covariant_product(&vb).unwrap();
                assert_eq!(prod.dimension(), va.dimension() * vb.dimension());
            }
        }
    }

    #[test]
    fn display_format() {
        let v = VirtualURep::new(2)
            .with(2, &Partition::empty(), &p("1"))
            .with(-1, &p("1"), &Partition::empty())
            .with(1, &p("1"), &p("1"));
        assert_eq!(v.to_string(), "-{1;0} + 2{0;1} + {1;1}");
        assert_eq!(VirtualURep::new(2).to_string(), "0");
        let t = normalize_label(&p("4,1,1,1"), &p("3,3,2,1"), 4);
        assert_eq!(t.to_string(), "+1 {4;3,3}");
    }

    #[test]
    fn mixed_product_is_rejected() {
        let v = VirtualURep::new(2).with(1, &p("1"), &p("1"));
        assert!(v.covariant_product(&v).is_err());
    }
}
