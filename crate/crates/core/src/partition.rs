//! Integer partitions and the Young-diagram operations the branching rules need.
//!
//! A [`Partition`] never stores trailing zeros, so one value serves every
//! ambient rank: membership in "at most `m` rows" is the predicate
//! [`Partition::fits`], not a separate type.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition(
                parts
                    .iter()
                    .map(u32::to_string)
                    .collect::<Vec<_>>()
                    .join(","),
            ));
        }
        Ok(Partition(parts))
    }

    /// Builds a partition from parts already known to be weakly decreasing.
    ///
    /// Trailing zeros are trimmed. Panics on an increasing pair, which is a
    /// logic error in the caller.
    pub fn from_sorted(parts: impl IntoIterator<Item = u32>) -> Self {
        let mut parts: Vec<u32> = parts.into_iter().collect();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]) && !parts.contains(&0),
            "not a partition: {parts:?}"
        );
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(n)`; empty for `n = 0`.
    pub fn row(n: u32) -> Self {
        Self::from_sorted([n])
    }

    /// `(head, 1^ones)`, the hook shape. Requires `head >= 1` when `ones > 0`.
    pub fn hook(head: u32, ones: usize) -> Self {
        Self::from_sorted(std::iter::once(head).chain(std::iter::repeat_n(1, ones)))
    }

    /// `(g, 2^h)`: a first row of length `g` followed by `h` rows of length 2.
    pub fn g_two_h(g: u32, h: usize) -> Result<Self> {
        let mut parts = vec![g];
        parts.extend(std::iter::repeat_n(2, h));
        Self::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn num_parts(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    /// Part `i` (0-based), or 0 past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Whether the partition has at most `m` nonzero parts.
    pub fn fits(&self, m: usize) -> bool {
        self.num_parts() <= m
    }

    /// Componentwise containment of Young diagrams: `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.num_parts() <= self.num_parts() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        Partition(
            (1..=width)
                .map(|j| self.0.iter().take_while(|&&p| p >= j).count() as u32)
                .collect(),
        )
    }

    /// True iff every column of the diagram has even length.
    pub fn is_even_column(&self) -> bool {
        self.0.len().is_multiple_of(2) && self.0.chunks(2).all(|c| c[0] == c[1])
    }

    /// Removes the border strip of `h` boxes that starts at the foot of the
    /// first column, returning the remaining partition and the column (1-based)
    /// where the strip ends.
    ///
    /// With `t` rows the strip exists iff some row `r` (1-based) has
    /// first-column hook length `p[r] + t - r` equal to `h`; hook lengths down
    /// the first column are strictly decreasing so `r` is unique.
    pub fn remove_border_strip(&self, h: usize) -> Option<(Partition, u32)> {
        assert!(h >= 1, "border strip length must be positive");
        let t = self.num_parts();
        let r = (0..t).find(|&r| self.0[r] as usize + (t - 1 - r) == h)?;
        let end_column = self.0[r];
        let parts = self.0[..r]
            .iter()
            .copied()
            .chain(self.0[r + 1..].iter().map(|&p| p - 1));
        Some((Partition::from_sorted(parts), end_column))
    }

    /// Subtracts `other` row by row when `other ⊆ self`; used for skew sizes.
    pub fn skew_size(&self, other: &Partition) -> Option<usize> {
        self.contains(other).then(|| self.size() - other.size())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.0 {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `"3,3,2,1"`. The empty string and `"0"` both mean the empty
    /// partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|tok| tok.trim().parse::<u32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::InvalidPartition(s.to_string()))?;
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(s.to_string()));
        }
        Partition::new(parts).map_err(|_| Error::InvalidPartition(s.to_string()))
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

/// All partitions of `n` with at most `max_parts` parts, in decreasing
/// lexicographic order.
pub fn partitions_of(n: usize, max_parts: usize) -> Vec<Partition> {
    fn go(rem: usize, cap: usize, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=cap.min(rem)).rev() {
            cur.push(p as u32);
            go(rem - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, max_parts, &mut Vec::new(), &mut out);
    out
}

/// All partitions `mu ⊆ outer` with `|mu| = size`.
pub fn sub_partitions_of_size(outer: &Partition, size: usize) -> Vec<Partition> {
    fn go(
        outer: &[u32],
        row: usize,
        rem: usize,
        cap: u32,
        cur: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if row == outer.len() {
            return;
        }
        let hi = cap.min(outer[row]).min(rem as u32);
        // The remaining rows can hold at most `hi` boxes each.
        let room: usize = outer[row..].iter().map(|&o| o.min(hi) as usize).sum();
        if room < rem {
            return;
        }
        for p in (1..=hi).rev() {
            cur.push(p);
            go(outer, row + 1, rem - p as usize, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if size <= outer.size() {
        go(&outer.0, 0, size, u32::MAX, &mut Vec::new(), &mut out);
    }
    out
}

/// All partitions contained in `outer`, of every size.
pub fn sub_partitions(outer: &Partition) -> Vec<Partition> {
    (0..=outer.size())
        .flat_map(|s| sub_partitions_of_size(outer, s))
        .collect()
}

/// Even-column partitions `δ ⊆ outer`: parts come in equal pairs.
pub fn even_column_sub_partitions(outer: &Partition) -> Vec<Partition> {
    fn go(outer: &Partition, pair: usize, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        out.push(Partition(cur.clone()));
        // A pair occupies rows 2*pair and 2*pair+1; the second row bounds it.
        let hi = cap.min(outer.part(2 * pair + 1));
        for v in (1..=hi).rev() {
            cur.extend([v, v]);
            go(outer, pair + 1, v, cur, out);
            cur.truncate(cur.len() - 2);
        }
    }
    let mut out = Vec::new();
    go(outer, 0, u32::MAX, &mut Vec::new(), &mut out);
    out
}
