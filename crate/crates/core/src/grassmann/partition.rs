use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of nonnegative integers.
///
/// Box partitions built through [`GrassmannContext::partition`] are stored at
/// the fixed length `k+1` with explicit trailing zeros. Free-standing
/// partitions (LR inputs, Schur expansions) may have any length; comparisons
/// that care about diagrams ([`Partition::contains`], [`Partition::same_diagram`])
/// ignore trailing zeros.
///
/// [`GrassmannContext::partition`]: super::GrassmannContext::partition
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition { parts });
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Stored length, trailing zeros included.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weight() == 0
    }

    /// Number of nonzero parts.
    pub fn num_rows(&self) -> usize {
        self.0.iter().take_while(|&&p| p > 0).count()
    }

    /// `i`-th part (0-based), zero past the stored length.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn first(&self) -> usize {
        self.part(0)
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn trimmed(&self) -> Partition {
        Partition(self.0[..self.num_rows()].to_vec())
    }

    /// Pads with zeros to `len`. Panics if that would drop a nonzero part.
    pub fn padded(&self, len: usize) -> Partition {
        assert!(self.num_rows() <= len, "{self} has more than {len} rows");
        let mut parts = self.0[..self.num_rows()].to_vec();
        parts.resize(len, 0);
        Partition(parts)
    }

    /// Diagram containment: `other_i <= self_i` for every row.
    pub fn contains(&self, other: &Partition) -> bool {
        let rows = self.len().max(other.len());
        (0..rows).all(|i| other.part(i) <= self.part(i))
    }

    pub fn same_diagram(&self, other: &Partition) -> bool {
        self.trimmed() == other.trimmed()
    }

    /// Conjugate (transposed) partition, trimmed.
    pub fn conjugate(&self) -> Partition {
        let cols = self.first();
        Partition((1..=cols).map(|c| self.0.iter().filter(|&&p| p >= c).count()).collect())
    }
}

impl fmt::Display for Partition {
    /// `(3,3,0)` style; the empty partition prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions with at most `rows` parts, each at most `cols`, of the given
/// weight, stored at length `rows`, in increasing lexicographic order.
pub(crate) fn partitions_in_box(rows: usize, cols: usize, weight: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(rows);
    fill_box(rows, cols, weight, &mut cur, &mut out);
    out.reverse();
    out
}

fn fill_box(rows: usize, cap: usize, remaining: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    let left = rows - cur.len();
    if left == 0 {
        if remaining == 0 {
            out.push(Partition(cur.clone()));
        }
        return;
    }
    if remaining > left * cap {
        return;
    }
    for p in (0..=cap.min(remaining)).rev() {
        cur.push(p);
        fill_box(rows, p, remaining - p, cur, out);
        cur.pop();
    }
}

/// Partitions `nu` of `weight` inside the box that contain `lower`.
pub(crate) fn partitions_between(
    rows: usize,
    cols: usize,
    weight: usize,
    lower: &Partition,
) -> Vec<Partition> {
    fn go(
        rows: usize,
        cap: usize,
        remaining: usize,
        lower: &Partition,
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        let i = cur.len();
        if i == rows {
            if remaining == 0 {
                out.push(Partition(cur.clone()));
            }
            return;
        }
        let floor = lower.part(i);
        // Remaining rows need at least their lower bounds.
        let min_rest: usize = (i + 1..rows).map(|j| lower.part(j)).sum();
        if remaining > (rows - i) * cap || floor > cap {
            return;
        }
        for p in floor..=cap.min(remaining) {
            if remaining - p < min_rest {
                break;
            }
            cur.push(p);
            go(rows, p, remaining - p, lower, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if lower.num_rows() > rows {
        return out;
    }
    go(rows, cols, weight, lower, &mut Vec::with_capacity(rows), &mut out);
    out.sort();
    out
}
