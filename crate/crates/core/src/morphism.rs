//! Classification of morphisms `G(l,n) -> G(k,n)`.
//!
//! The decision tree:
//!
//! 1. `l` in `{0, n-1}`: the domain is a projective space, not covered.
//! 2. `k` in `{0, n-1}`: the target is `P^n`, and a nonconstant morphism
//!    from a Picard-rank-one variety is finite, so it would need
//!    `dim G(l,n) <= n`. The inequality is checked, not assumed.
//! 3. Otherwise the pullbacks of `[X_H]` and `[X_p]` would form an md-pair of
//!    type `{k+1, n-k}` in `G(l,n)` unless one of them vanishes. If the live
//!    search finds no md-pair of that type, the morphism is constant.
//! 4. Otherwise the types agree, which forces `l = k` or `l = n-k-1`.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::grassmann::GrassmannContext;
use crate::mdpair::{md_pairs, PairType};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct MorphismQuery {
    pub l: usize,
    pub k: usize,
    pub n: usize,
}

impl MorphismQuery {
    pub fn new(l: usize, k: usize, n: usize) -> Result<Self> {
        if n == 0 || l >= n || k >= n {
            return Err(Error::InvalidQuery { l, k, n });
        }
        Ok(MorphismQuery { l, k, n })
    }

    pub fn domain(&self) -> GrassmannContext {
        GrassmannContext::new(self.l, self.n).expect("validated")
    }

    pub fn target(&self) -> GrassmannContext {
        GrassmannContext::new(self.k, self.n).expect("validated")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    MustBeConstant,
    NonconstantImpliesIsomorphism,
    NotCovered,
}

impl Verdict {
    pub fn glyph(&self) -> char {
        match self {
            Verdict::MustBeConstant => 'C',
            Verdict::NonconstantImpliesIsomorphism => 'I',
            Verdict::NotCovered => '-',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    DomainProjectiveSpace,
    DimensionArgument,
    DimensionInconclusive,
    MdPairTypeMismatch,
    LEqualsK,
    #[serde(rename = "l_equals_n_minus_k_minus_1")]
    LEqualsNMinusKMinus1,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Reason {
    pub branch: Branch,
    pub details: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationOutcome {
    pub l: usize,
    pub k: usize,
    pub n: usize,
    pub verdict: Verdict,
    pub reason: Reason,
}

fn outcome(q: &MorphismQuery, verdict: Verdict, branch: Branch, details: String) -> ClassificationOutcome {
    ClassificationOutcome {
        l: q.l,
        k: q.k,
        n: q.n,
        verdict,
        reason: Reason { branch, details },
    }
}

fn format_types(types: &[PairType]) -> String {
    let shown: Vec<String> = types.iter().map(ToString::to_string).collect();
    shown.join(", ")
}

/// `domain_types` yields the md-pair types of `G(l,n)`; it is only called
/// when the decision reaches the md-pair branch.
fn decide<F>(q: &MorphismQuery, domain_types: F) -> ClassificationOutcome
where
    F: FnOnce() -> Vec<PairType>,
{
    let (l, k, n) = (q.l, q.k, q.n);
    if l == 0 || l == n - 1 {
        return outcome(
            q,
            Verdict::NotCovered,
            Branch::DomainProjectiveSpace,
            format!("G({l},{n}) is a projective space; only l != 0, n-1 is covered"),
        );
    }
    if k == 0 || k == n - 1 {
        let dim = q.domain().dim();
        return if dim > n {
            outcome(
                q,
                Verdict::MustBeConstant,
                Branch::DimensionArgument,
                format!(
                    "target G({k},{n}) is isomorphic to P^{n}; a nonconstant morphism would be finite, \
                     but dim G({l},{n}) = {dim} > {n}"
                ),
            )
        } else {
            outcome(
                q,
                Verdict::NotCovered,
                Branch::DimensionInconclusive,
                format!("dim G({l},{n}) = {dim} <= {n}"),
            )
        };
    }
    let wanted = PairType::new(k + 1, n - k);
    let types = domain_types();
    if !types.contains(&wanted) {
        return outcome(
            q,
            Verdict::MustBeConstant,
            Branch::MdPairTypeMismatch,
            format!(
                "md-pairs of G({l},{n}) have type {}; none of type {wanted}, so a pullback of [X_H] or \
                 [X_p] vanishes and the morphism factors through a smaller Grassmannian, which \
                 forces it to be constant (inductive step cited, not mechanized)",
                format_types(&types)
            ),
        );
    }
    let hm = "isomorphism by the Hwang-Mok rigidity theorem (cited, not computed)";
    let (branch, identity) = match (l == k, l + k + 1 == n) {
        (true, true) => (Branch::LEqualsK, format!("l = k = n-k-1 = {l}")),
        (true, false) => (Branch::LEqualsK, format!("l = k = {l}")),
        _ => (Branch::LEqualsNMinusKMinus1, format!("l = n-k-1 = {l}")),
    };
    outcome(
        q,
        Verdict::NonconstantImpliesIsomorphism,
        branch,
        format!(
            "G({l},{n}) has an md-pair of type {wanted}; {identity}; dimensions agree, so a \
             nonconstant morphism is surjective; {hm}"
        ),
    )
}

fn live_types(ctx: &GrassmannContext) -> Vec<PairType> {
    let mut types: Vec<PairType> = md_pairs(ctx).iter().map(|p| p.pair_type).collect();
    types.sort();
    types.dedup();
    types
}

/// Classifies a single query, running the md-pair search on `G(l,n)` when
/// the decision gets that far.
pub fn classify(q: &MorphismQuery) -> ClassificationOutcome {
    decide(q, || live_types(&q.domain()))
}

/// Outcomes for every `(l, k)` with `0 <= l, k <= n-1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationTable {
    pub n: usize,
    /// `cells[l][k]`.
    pub cells: Vec<Vec<ClassificationOutcome>>,
}

impl ClassificationTable {
    pub fn get(&self, l: usize, k: usize) -> &ClassificationOutcome {
        &self.cells[l][k]
    }

    /// Aligned grid, rows indexed by `l`, columns by `k`. `C` constant,
    /// `I` nonconstant implies isomorphism, `-` not covered.
    pub fn render_text(&self) -> String {
        let w = (self.n.saturating_sub(1)).to_string().len();
        let label = w.max(3);
        let mut s = String::new();
        let _ = write!(s, "{:>label$}", "l\\k");
        for k in 0..self.n {
            let _ = write!(s, " {k:>w$}");
        }
        s.push('\n');
        for (l, row) in self.cells.iter().enumerate() {
            let _ = write!(s, "{l:>label$}");
            for cell in row {
                let _ = write!(s, " {:>w$}", cell.verdict.glyph());
            }
            s.push('\n');
        }
        s
    }
}

/// The full `(l, k)` grid for one `n >= 3`. Md-pair types are searched once
/// per domain `G(l,n)`.
pub fn classify_table(n: usize) -> Result<ClassificationTable> {
    if n < 3 {
        return Err(Error::TableTooSmall(n));
    }
    let types: Vec<Vec<PairType>> = (0..n)
        .into_par_iter()
        .map(|l| {
            let ctx = GrassmannContext::new(l, n).expect("l < n");
            if ctx.is_interior() {
                live_types(&ctx)
            } else {
                Vec::new()
            }
        })
        .collect();
    let cells = (0..n)
        .map(|l| {
            (0..n)
                .map(|k| {
                    let q = MorphismQuery { l, k, n };
                    decide(&q, || types[l].clone())
                })
                .collect()
        })
        .collect();
    Ok(ClassificationTable { n, cells })
}
