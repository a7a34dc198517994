//! Exhaustive search for zero products among Schubert basis classes.
//!
//! The Chow ring of `G(k,n)` has nonnegative structure constants and its
//! effective cones are spanned by Schubert classes, so two nonzero effective
//! classes multiply to zero exactly when every pair of basis classes in their
//! supports does. All searches here therefore run over basis pairs only; a
//! basis-level md-pair `{sigma_a, sigma_b}` stands for the whole family of
//! positive multiples `{x sigma_a, y sigma_b}`.

mod verify;

use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::chow::basis_product;
use crate::error::{Error, Result};
use crate::grassmann::{GrassmannContext, Partition};

pub use verify::{
    sweep_prop_comp, sweep_thm_md, verify_egd, verify_egd_sweep, verify_egd_sweep_with, verify_egd_with,
    verify_prop_comp, verify_thm_md,
    Counterexample, Status, SweepReport, VerificationReport,
};

/// How a scan decides whether `sigma_a * sigma_b` vanishes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ScanMode {
    /// Bruhat comparison of symbols only.
    #[default]
    Fast,
    /// Bruhat comparison plus a full LR product for every pair; any
    /// disagreement is an error.
    CrossValidated,
}

/// Unordered pair of codimensions, stored smaller first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PairType(usize, usize);

impl PairType {
    pub fn new(i: usize, j: usize) -> Self {
        PairType(i.min(j), i.max(j))
    }

    pub fn smaller(&self) -> usize {
        self.0
    }

    pub fn larger(&self) -> usize {
        self.1
    }

    pub fn sum(&self) -> usize {
        self.0 + self.1
    }
}

impl fmt::Display for PairType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.0, self.1)
    }
}

impl Serialize for PairType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.0, self.1].serialize(s)
    }
}

/// Basis classes `sigma_a`, `sigma_b` with `sigma_a * sigma_b = 0`.
/// `a` is lexicographically smaller than or equal to `b`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ZeroPair {
    pub codim_sum: usize,
    pub a: Partition,
    pub b: Partition,
}

impl ZeroPair {
    fn new(x: &Partition, y: &Partition) -> Self {
        let (a, b) = if x <= y { (x, y) } else { (y, x) };
        ZeroPair {
            codim_sum: a.weight() + b.weight(),
            a: a.clone(),
            b: b.clone(),
        }
    }

    pub fn pair_type(&self) -> PairType {
        PairType::new(self.a.weight(), self.b.weight())
    }
}

/// A maximal disjoint pair of basis classes: zero product at total
/// codimension one more than the effective good divisibility.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MdPair {
    pub ctx: GrassmannContext,
    pub a: Partition,
    pub b: Partition,
    pub pair_type: PairType,
}

impl MdPair {
    pub fn codims(&self) -> (usize, usize) {
        (self.a.weight(), self.b.weight())
    }
}

impl Serialize for MdPair {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let (i, j) = self.codims();
        let mut m = s.serialize_map(Some(4))?;
        m.serialize_entry("a", &self.a)?;
        m.serialize_entry("b", &self.b)?;
        m.serialize_entry("codims", &[i, j])?;
        m.serialize_entry("type", &self.pair_type)?;
        m.end()
    }
}

/// Result of a full basis-pair scan of one Grassmannian.
#[derive(Debug, Clone, Serialize)]
pub struct SearchReport {
    pub k: usize,
    pub n: usize,
    /// Unordered basis pairs examined.
    pub scanned: u64,
    pub egd: usize,
    pub zero_pairs: Vec<ZeroPair>,
    pub md_pairs: Vec<MdPair>,
    #[serde(rename = "elapsed_ms", serialize_with = "millis")]
    pub elapsed: Duration,
}

fn millis<S: Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_u64(d.as_millis() as u64)
}

/// Per-partition data for the fast criterion: the symbol `J` with
/// `[X_J] = sigma_a` and its dual `J^vee`.
struct Indexed {
    classes: Vec<Partition>,
    symbols: Vec<Vec<usize>>,
    duals: Vec<Vec<usize>>,
}

impl Indexed {
    fn new(ctx: &GrassmannContext) -> Result<Self> {
        let classes = ctx.partitions();
        let mut symbols = Vec::with_capacity(classes.len());
        let mut duals = Vec::with_capacity(classes.len());
        for a in &classes {
            let s = ctx.symbol_of_class(a)?;
            duals.push(ctx.dual_symbol(&s)?.indices().to_vec());
            symbols.push(s.indices().to_vec());
        }
        Ok(Indexed {
            classes,
            symbols,
            duals,
        })
    }

    /// `!(I^vee <= J)` componentwise.
    fn vanishes_fast(&self, i: usize, j: usize) -> bool {
        self.duals[i].iter().zip(&self.symbols[j]).any(|(x, y)| x > y)
    }
}

/// Scans unordered pairs with codimension sum at most `max_sum`.
/// Returns the zero pairs in canonical order and the number of pairs seen.
fn scan(ctx: &GrassmannContext, max_sum: usize, mode: Option<ScanMode>) -> Result<(Vec<ZeroPair>, u64)> {
    let idx = Indexed::new(ctx)?;
    let n = idx.classes.len();
    let per_row: Vec<(Vec<ZeroPair>, u64)> = (0..n)
        .into_par_iter()
        .map(|i| {
            let a = &idx.classes[i];
            let mut found = Vec::new();
            let mut seen = 0u64;
            // classes are sorted by weight, so the inner loop can stop early
            for j in i..n {
                let b = &idx.classes[j];
                if a.weight() + b.weight() > max_sum {
                    break;
                }
                seen += 1;
                let zero = match mode {
                    Some(ScanMode::Fast) => idx.vanishes_fast(i, j),
                    None => basis_product(ctx, a, b).is_empty(),
                    Some(ScanMode::CrossValidated) => {
                        let fast = idx.vanishes_fast(i, j);
                        if fast != basis_product(ctx, a, b).is_empty() {
                            return Err(Error::CriterionMismatch {
                                a: a.to_string(),
                                b: b.to_string(),
                            });
                        }
                        fast
                    }
                };
                if zero {
                    found.push(ZeroPair::new(a, b));
                }
            }
            Ok((found, seen))
        })
        .collect::<Result<_>>()?;
    let scanned = per_row.iter().map(|(_, s)| s).sum();
    let mut pairs: Vec<ZeroPair> = per_row.into_iter().flat_map(|(p, _)| p).collect();
    pairs.sort();
    Ok((pairs, scanned))
}

fn check_bound(ctx: &GrassmannContext, max: usize) -> Result<()> {
    if max > 2 * ctx.dim() {
        return Err(Error::CodimBoundTooLarge { max, dim: ctx.dim() });
    }
    Ok(())
}

/// Unordered basis pairs `{a, b}` with `|a| + |b| <= max_codim_sum` and zero
/// product, decided by the fast Bruhat criterion. Sorted by codimension sum,
/// then lexicographically.
pub fn enumerate_zero_pairs(ctx: &GrassmannContext, max_codim_sum: usize) -> Result<Vec<ZeroPair>> {
    enumerate_zero_pairs_with(ctx, max_codim_sum, ScanMode::Fast)
}

pub fn enumerate_zero_pairs_with(
    ctx: &GrassmannContext,
    max_codim_sum: usize,
    mode: ScanMode,
) -> Result<Vec<ZeroPair>> {
    check_bound(ctx, max_codim_sum)?;
    Ok(scan(ctx, max_codim_sum, Some(mode))?.0)
}

/// Same as [`enumerate_zero_pairs`] but every product is computed with the
/// LR rule; shares nothing with the fast criterion.
pub fn zero_pairs_by_product(ctx: &GrassmannContext, max_codim_sum: usize) -> Result<Vec<ZeroPair>> {
    check_bound(ctx, max_codim_sum)?;
    Ok(scan(ctx, max_codim_sum, None)?.0)
}

fn egd_from(pairs: &[ZeroPair]) -> usize {
    // sigma_(1) times the point class always vanishes, so `pairs` is never empty
    pairs.iter().map(|p| p.codim_sum).min().expect("no zero pairs") - 1
}

/// Largest `s` such that no two basis classes of total codimension `<= s`
/// multiply to zero.
pub fn compute_egd(ctx: &GrassmannContext) -> usize {
    let (pairs, _) = scan(ctx, 2 * ctx.dim(), Some(ScanMode::Fast)).expect("box partitions are valid");
    egd_from(&pairs)
}

fn md_from(ctx: &GrassmannContext, pairs: &[ZeroPair], egd: usize) -> Vec<MdPair> {
    pairs
        .iter()
        .filter(|p| p.codim_sum == egd + 1)
        .map(|p| MdPair {
            ctx: *ctx,
            a: p.a.clone(),
            b: p.b.clone(),
            pair_type: p.pair_type(),
        })
        .collect()
}

/// All basis-level md-pairs of `G(k,n)`.
pub fn md_pairs(ctx: &GrassmannContext) -> Vec<MdPair> {
    let (pairs, _) = scan(ctx, 2 * ctx.dim(), Some(ScanMode::Fast)).expect("box partitions are valid");
    md_from(ctx, &pairs, egd_from(&pairs))
}

pub fn has_mdpair_of_type(ctx: &GrassmannContext, t: PairType) -> bool {
    md_pairs(ctx).iter().any(|p| p.pair_type == t)
}

/// Full scan of `G(k,n)`. `zero_pairs` lists the zero pairs up to
/// `list_up_to` (default: `egd + 1`, i.e. exactly the md-pairs).
pub fn search(ctx: &GrassmannContext, mode: ScanMode, list_up_to: Option<usize>) -> Result<SearchReport> {
    if let Some(m) = list_up_to {
        check_bound(ctx, m)?;
    }
    let start = Instant::now();
    let (pairs, scanned) = scan(ctx, 2 * ctx.dim(), Some(mode))?;
    let egd = egd_from(&pairs);
    let md = md_from(ctx, &pairs, egd);
    let limit = list_up_to.unwrap_or(egd + 1);
    let zero_pairs = pairs.into_iter().filter(|p| p.codim_sum <= limit).collect();
    Ok(SearchReport {
        k: ctx.k(),
        n: ctx.n(),
        scanned,
        egd,
        zero_pairs,
        md_pairs: md,
        elapsed: start.elapsed(),
    })
}
