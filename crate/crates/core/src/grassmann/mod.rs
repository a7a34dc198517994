//! Partitions in the `(k+1) x (n-k)` box, Schubert symbols, the conversions
//! between them, duality and the Bruhat order.
//!
//! Two partition conventions meet here. The *dimension* partition of a
//! symbol `I` has `lambda_j = i_{k+2-j} - (k+2-j)` and weight `dim X_I`. Its
//! complement rotated by 180 degrees is the *codimension* partition, which
//! is what [`CycleClass`](crate::CycleClass) keys on. [`GrassmannContext::dual_partition`]
//! converts between the two.

mod diagram;
mod partition;
mod symbol;

use serde::Serialize;

pub use diagram::render_diagram;
pub(crate) use partition::{partitions_between, partitions_in_box};
pub use partition::Partition;
pub use symbol::SchubertSymbol;

use crate::error::{Error, Result};

/// The Grassmannian `G(k,n)` of projective `k`-planes in `P^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct GrassmannContext {
    k: usize,
    n: usize,
}

impl GrassmannContext {
    pub fn new(k: usize, n: usize) -> Result<Self> {
        if n == 0 || k >= n {
            return Err(Error::InvalidContext { k, n });
        }
        Ok(GrassmannContext { k, n })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> usize {
        self.k + 1
    }

    pub fn cols(&self) -> usize {
        self.n - self.k
    }

    pub fn dim(&self) -> usize {
        self.rows() * self.cols()
    }

    /// `G(n-k-1, n)`, isomorphic via `W -> W^perp`.
    pub fn dual_grassmannian(&self) -> GrassmannContext {
        GrassmannContext {
            k: self.n - self.k - 1,
            n: self.n,
        }
    }

    /// Every context `G(k,n)` with `1 <= n <= max_n`.
    pub fn all_up_to(max_n: usize) -> impl Iterator<Item = GrassmannContext> {
        (1..=max_n).flat_map(|n| (0..n).map(move |k| GrassmannContext { k, n }))
    }

    /// Contexts with `1 <= k <= n-2` and `n <= max_n`.
    pub fn interior_up_to(max_n: usize) -> impl Iterator<Item = GrassmannContext> {
        (3..=max_n).flat_map(|n| (1..n - 1).map(move |k| GrassmannContext { k, n }))
    }

    pub fn is_interior(&self) -> bool {
        self.k >= 1 && self.k + 2 <= self.n
    }

    /// Box partition from possibly short `parts`; pads with zeros to `k+1`.
    pub fn partition(&self, parts: &[usize]) -> Result<Partition> {
        let p = Partition::new(parts.to_vec())?;
        if p.num_rows() > self.rows() || p.first() > self.cols() {
            return Err(self.outside_box(parts));
        }
        Ok(p.padded(self.rows()))
    }

    /// True if `p` is stored at length `k+1` and fits the box.
    pub fn fits(&self, p: &Partition) -> bool {
        p.len() == self.rows() && p.first() <= self.cols()
    }

    pub(crate) fn check_fits(&self, p: &Partition) -> Result<()> {
        if self.fits(p) {
            Ok(())
        } else {
            Err(self.outside_box(p.parts()))
        }
    }

    fn outside_box(&self, parts: &[usize]) -> Error {
        Error::OutsideBox {
            parts: parts.to_vec(),
            rows: self.rows(),
            cols: self.cols(),
        }
    }

    pub fn symbol(&self, indices: &[usize]) -> Result<SchubertSymbol> {
        let bad = |reason| Error::InvalidSymbol {
            indices: indices.to_vec(),
            k: self.k,
            n: self.n,
            reason,
        };
        if indices.len() != self.rows() {
            return Err(bad("length must be k+1"));
        }
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(bad("indices must be strictly increasing"));
        }
        if indices[0] == 0 || indices[self.k] > self.n + 1 {
            return Err(bad("indices must lie in [1, n+1]"));
        }
        Ok(SchubertSymbol(indices.to_vec()))
    }

    pub(crate) fn check_symbol(&self, s: &SchubertSymbol) -> Result<()> {
        self.symbol(s.indices()).map(|_| ())
    }

    /// All box partitions ordered by `(weight, parts)`.
    pub fn partitions(&self) -> Vec<Partition> {
        (0..=self.dim())
            .flat_map(|w| partitions_in_box(self.rows(), self.cols(), w))
            .collect()
    }

    pub fn partitions_of_weight(&self, weight: usize) -> Vec<Partition> {
        partitions_in_box(self.rows(), self.cols(), weight)
    }

    /// All Schubert symbols, in the order of their dimension partitions.
    pub fn symbols(&self) -> Vec<SchubertSymbol> {
        self.partitions()
            .iter()
            .map(|p| self.dim_partition_to_symbol_unchecked(p))
            .collect()
    }

    /// `lambda_j = i_{k+2-j} - (k+2-j)`; the weight is `dim X_I`.
    pub fn symbol_to_dim_partition(&self, symbol: &SchubertSymbol) -> Result<Partition> {
        self.check_symbol(symbol)?;
        let i = symbol.indices();
        let k = self.k;
        let parts = (0..=k).map(|j| i[k - j] - (k + 1 - j)).collect();
        Ok(Partition::from_parts_unchecked(parts))
    }

    pub fn dim_partition_to_symbol(&self, lambda: &Partition) -> Result<SchubertSymbol> {
        self.check_fits(lambda)?;
        Ok(self.dim_partition_to_symbol_unchecked(lambda))
    }

    fn dim_partition_to_symbol_unchecked(&self, lambda: &Partition) -> SchubertSymbol {
        let k = self.k;
        SchubertSymbol((0..=k).map(|m| lambda.part(k - m) + m + 1).collect())
    }

    /// `I^vee = {n+2-i_{k+1} < ... < n+2-i_1}`.
    pub fn dual_symbol(&self, symbol: &SchubertSymbol) -> Result<SchubertSymbol> {
        self.check_symbol(symbol)?;
        let n = self.n;
        Ok(SchubertSymbol(
            symbol.indices().iter().rev().map(|&i| n + 2 - i).collect(),
        ))
    }

    /// `lambda^vee_j = (n-k) - lambda_{k+2-j}`: complement in the box, rotated.
    pub fn dual_partition(&self, lambda: &Partition) -> Result<Partition> {
        self.check_fits(lambda)?;
        let cols = self.cols();
        Ok(Partition::from_parts_unchecked(
            lambda.parts().iter().rev().map(|&p| cols - p).collect(),
        ))
    }

    /// Bruhat order by comparing indices: `i_j <= l_j` for all `j`.
    pub fn bruhat_leq(&self, a: &SchubertSymbol, b: &SchubertSymbol) -> Result<bool> {
        self.check_symbol(a)?;
        self.check_symbol(b)?;
        Ok(a.indices().iter().zip(b.indices()).all(|(x, y)| x <= y))
    }

    /// Bruhat order as containment of dimension partitions.
    pub fn bruhat_leq_by_diagram(&self, a: &SchubertSymbol, b: &SchubertSymbol) -> Result<bool> {
        let la = self.symbol_to_dim_partition(a)?;
        let lb = self.symbol_to_dim_partition(b)?;
        Ok(lb.contains(&la))
    }

    /// `(I_H, I_p)`: planes inside a fixed hyperplane, planes through a fixed point.
    pub fn special_symbols(&self) -> (SchubertSymbol, SchubertSymbol) {
        let (k, n) = (self.k, self.n);
        let hyperplane = (n - k..=n).collect();
        let point = std::iter::once(1).chain(n - k + 2..=n + 1).collect();
        (SchubertSymbol(hyperplane), SchubertSymbol(point))
    }

    /// Codimension partitions of `[X_H]` and `[X_p]`: `(1,...,1)` and `(n-k,0,...,0)`.
    pub fn special_classes(&self) -> (Partition, Partition) {
        let hyperplane = Partition::from_parts_unchecked(vec![1; self.rows()]);
        let mut point = vec![0; self.rows()];
        point[0] = self.cols();
        (hyperplane, Partition::from_parts_unchecked(point))
    }

    /// Symbol `I` with `[X_I] = sigma_a` for a codimension partition `a`.
    pub fn symbol_of_class(&self, codim: &Partition) -> Result<SchubertSymbol> {
        self.dim_partition_to_symbol(&self.dual_partition(codim)?)
    }

    /// Codimension partition `a` with `sigma_a = [X_I]`.
    pub fn class_of_symbol(&self, symbol: &SchubertSymbol) -> Result<Partition> {
        self.dual_partition(&self.symbol_to_dim_partition(symbol)?)
    }
}
