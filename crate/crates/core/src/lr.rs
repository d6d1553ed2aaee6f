//! Littlewood-Richardson coefficients.
//!
//! [`lr_coefficient`] counts LR tableaux by backtracking, memoized in a
//! process-wide cache. [`lr_oracle`] is a structurally unrelated check: it
//! expands `s_mu * s_nu` in monomials through Kostka numbers and peels off
//! Schur functions in dominance order.

use std::collections::{BTreeMap, HashMap};
use std::sync::{OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};

/// Largest `|lambda|` accepted by [`lr_oracle`].
pub const ORACLE_LIMIT: usize = 10;

type Triple = (Partition, Partition, Partition);

fn lr_cache() -> &'static RwLock<HashMap<Triple, u64>> {
    static CACHE: OnceLock<RwLock<HashMap<Triple, u64>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `c^lambda_{mu,nu}`: the number of LR skew tableaux of shape `lambda/mu`
/// and content `nu`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.size() != mu.size() + nu.size() || !lambda.contains(mu) || !lambda.contains(nu) {
        return 0;
    }
    if mu.is_empty() || nu.is_empty() {
        return 1;
    }
    // symmetric in (mu, nu); fill the smaller skew region
    let (inner, content) = if mu >= nu { (mu, nu) } else { (nu, mu) };
    let key = (lambda.clone(), inner.clone(), content.clone());
    if let Some(&v) = lr_cache().read().unwrap().get(&key) {
        return v;
    }
    let v = count_lr_tableaux(lambda, inner, content);
    lr_cache().write().unwrap().insert(key, v);
    v
}

/// [`lr_coefficient`] without the cache.
pub fn lr_coefficient_uncached(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.size() != mu.size() + nu.size() || !lambda.contains(mu) || !lambda.contains(nu) {
        return 0;
    }
    count_lr_tableaux(lambda, mu, nu)
}

fn count_lr_tableaux(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    // Cells of lambda/mu in reverse reading order: rows top to bottom, each
    // row right to left.
    let mut cells = Vec::with_capacity(lambda.size() - mu.size());
    for r in 0..lambda.num_parts() {
        for c in (mu.part(r)..lambda.part(r)).rev() {
            cells.push((r, c as usize));
        }
    }
    let mut filler = Filler {
        lambda,
        mu,
        nu: nu.parts(),
        cells: &cells,
        grid: lambda
            .parts()
            .iter()
            .map(|&l| vec![0u8; l as usize])
            .collect(),
        counts: vec![0; nu.num_parts()],
    };
    filler.fill(0)
}

struct Filler<'a> {
    lambda: &'a Partition,
    mu: &'a Partition,
    nu: &'a [u32],
    cells: &'a [(usize, usize)],
    // letters are 1-based; 0 marks cells of mu
    grid: Vec<Vec<u8>>,
    counts: Vec<u32>,
}

impl Filler<'_> {
    fn fill(&mut self, idx: usize) -> u64 {
        let Some(&(r, c)) = self.cells.get(idx) else {
            return 1;
        };
        let lo = if r > 0 && c as u32 >= self.mu.part(r - 1) {
            self.grid[r - 1][c] + 1
        } else {
            1
        };
        let mut hi = self.nu.len().min(r + 1) as u8;
        if (c as u32) + 1 < self.lambda.part(r) {
            hi = hi.min(self.grid[r][c + 1]);
        }
        let mut total = 0u64;
        for letter in lo..=hi {
            let v = letter as usize - 1;
            if self.counts[v] >= self.nu[v] {
                continue;
            }
            if v > 0 && self.counts[v] + 1 > self.counts[v - 1] {
                continue;
            }
            self.counts[v] += 1;
            self.grid[r][c] = letter;
            total = total
                .checked_add(self.fill(idx + 1))
                .expect("LR coefficient overflow");
            self.counts[v] -= 1;
        }
        self.grid[r][c] = 0;
        total
    }
}

/// Expansion of `s_mu * s_nu` restricted to Schur functions with at most `m`
/// rows; the dropped terms vanish for `U(m)`.
pub fn schur_product_covariant(
    mu: &Partition,
    nu: &Partition,
    m: usize,
) -> BTreeMap<Partition, u64> {
    let n = mu.size() + nu.size();
    let rows = m.min(mu.num_parts() + nu.num_parts());
    partitions_of(n, rows)
        .into_iter()
        .filter_map(|lam| {
            let c = lr_coefficient(&lam, mu, nu);
            (c > 0).then_some((lam, c))
        })
        .collect()
}

/// All `(xi, nu, c^outer_{xi,nu})` with a positive coefficient.
pub fn lr_decompositions(outer: &Partition) -> Vec<(Partition, Partition, u64)> {
    let mut out = Vec::new();
    let n = outer.size();
    for xi in crate::partition::sub_partitions(outer) {
        for nu in crate::partition::sub_partitions_of_size(outer, n - xi.size()) {
            let c = lr_coefficient(outer, &xi, &nu);
            if c > 0 {
                out.push((xi.clone(), nu, c));
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Oracle

type KostkaMemo = RwLock<HashMap<(Partition, Vec<u32>), u64>>;

fn kostka_cache() -> &'static KostkaMemo {
    static CACHE: OnceLock<KostkaMemo> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Number of semistandard tableaux of `shape` with content `weight` (any
/// composition): the coefficient of `x^weight` in the Schur polynomial.
///
/// Peels the largest letter off as a horizontal strip.
pub fn kostka(shape: &Partition, weight: &[u32]) -> u64 {
    let total: usize = weight.iter().map(|&w| w as usize).sum();
    if total != shape.size() {
        return 0;
    }
    if shape.is_empty() {
        return 1;
    }
    let Some((&last, rest)) = weight.split_last() else {
        return 0;
    };
    // a column of height h needs at least h distinct letters
    if shape.num_parts() > weight.len() {
        return 0;
    }
    let key = (shape.clone(), weight.to_vec());
    if let Some(&v) = kostka_cache().read().unwrap().get(&key) {
        return v;
    }
    let mut total = 0u64;
    for inner in horizontal_strip_removals(shape, last as usize) {
        total = total
            .checked_add(kostka(&inner, rest))
            .expect("Kostka number overflow");
    }
    kostka_cache().write().unwrap().insert(key, total);
    total
}

/// Partitions `inner` with `shape / inner` a horizontal strip of `size` boxes,
/// i.e. `shape[i+1] <= inner[i] <= shape[i]`.
fn horizontal_strip_removals(shape: &Partition, size: usize) -> Vec<Partition> {
    fn go(shape: &Partition, row: usize, rem: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if row == shape.num_parts() {
            if rem == 0 {
                out.push(Partition::from_sorted(cur.iter().copied()));
            }
            return;
        }
        let top = shape.part(row);
        let floor = shape.part(row + 1);
        for keep in floor..=top {
            let removed = (top - keep) as usize;
            if removed > rem {
                continue;
            }
            cur.push(keep);
            go(shape, row + 1, rem - removed, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(shape, 0, size, &mut Vec::new(), &mut out);
    out
}

/// Coefficient of `x^alpha` in `s_mu * s_nu`.
fn product_monomial_coefficient(mu: &Partition, nu: &Partition, alpha: &[u32]) -> u64 {
    fn go(mu: &Partition, nu: &Partition, alpha: &[u32], gamma: &mut Vec<u32>, acc: &mut u64) {
        let i = gamma.len();
        if i == alpha.len() {
            let g: usize = gamma.iter().map(|&x| x as usize).sum();
            if g != mu.size() {
                return;
            }
            let delta: Vec<u32> = alpha.iter().zip(gamma.iter()).map(|(a, g)| a - g).collect();
            let k = kostka(mu, gamma);
            if k > 0 {
                *acc += k * kostka(nu, &delta);
            }
            return;
        }
        for g in 0..=alpha[i] {
            gamma.push(g);
            go(mu, nu, alpha, gamma, acc);
            gamma.pop();
        }
    }
    let mut acc = 0;
    go(
        mu,
        nu,
        alpha,
        &mut Vec::with_capacity(alpha.len()),
        &mut acc,
    );
    acc
}

/// Brute-force LR coefficient for `|lambda| <= ORACLE_LIMIT`.
pub fn lr_oracle(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    let n = lambda.size();
    if n > ORACLE_LIMIT {
        return Err(Error::OracleTooLarge {
            size: n,
            limit: ORACLE_LIMIT,
        });
    }
    if mu.size() + nu.size() != n {
        return Ok(0);
    }
    // Decreasing lexicographic order refines dominance, so each s_alpha
    // coefficient is fixed once all larger alphas have been subtracted.
    let shapes = partitions_of(n, n);
    let mut schur_coeffs: Vec<(Partition, i64)> = Vec::new();
    for alpha in shapes {
        let weight: Vec<u32> = (0..n.max(1)).map(|i| alpha.part(i)).collect();
        let mut c = product_monomial_coefficient(mu, nu, &weight) as i64;
        for (beta, cb) in &schur_coeffs {
            if *cb != 0 {
                c -= cb * kostka(beta, &weight) as i64;
            }
        }
        assert!(c >= 0, "negative Schur coefficient in oracle");
        if &alpha == lambda {
            return Ok(c as u64);
        }
        schur_coeffs.push((alpha, c));
    }
    unreachable!("lambda is a partition of n")
}
