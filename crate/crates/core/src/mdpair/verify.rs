//! Mechanical checks of the classification results over whole Grassmannians.
//!
//! Every check scans its full hypothesis space and reports how many cases it
//! looked at; a report only says `pass` when no case disagreed.

use rayon::prelude::*;
use serde::Serialize;

use super::{scan, zero_pairs_by_product, ScanMode, ZeroPair};
use crate::error::{Error, Result};
use crate::grassmann::{GrassmannContext, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Counterexample {
    /// Pair in the hypothesis where non-containment and membership in the
    /// exceptional list disagree.
    Containment {
        lambda: Partition,
        mu: Partition,
        contained: bool,
    },
    /// An exceptional pair the scan never saw fail containment.
    MissingExceptional { lambda: Partition, mu: Partition },
    UnexpectedZeroPair { a: Partition, b: Partition, codim_sum: usize },
    MissingZeroPair { a: Partition, b: Partition },
    /// Fast criterion and LR product disagree.
    CriterionDisagreement {
        a: Partition,
        b: Partition,
        fast_vanishes: bool,
    },
    Egd { expected: usize, computed: usize },
}

/// Outcome of one check on one Grassmannian.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub claim: &'static str,
    pub k: usize,
    pub n: usize,
    pub status: Status,
    pub counterexamples: Vec<Counterexample>,
    /// Cases satisfying the claim's hypothesis.
    pub hypothesis_count: u64,
    /// Cases examined, hypothesis or not.
    pub scanned: u64,
    /// Pairs the claim singles out, as found by the scan.
    pub exceptional: Vec<(Partition, Partition)>,
}

impl VerificationReport {
    fn new(
        claim: &'static str,
        ctx: &GrassmannContext,
        counterexamples: Vec<Counterexample>,
        hypothesis_count: u64,
        scanned: u64,
        exceptional: Vec<(Partition, Partition)>,
    ) -> Self {
        let status = if counterexamples.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        };
        VerificationReport {
            claim,
            k: ctx.k(),
            n: ctx.n(),
            status,
            counterexamples,
            hypothesis_count,
            scanned,
            exceptional,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// A check run over every Grassmannian up to `max_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub claim: &'static str,
    pub max_n: usize,
    pub status: Status,
    pub scanned: u64,
    pub contexts: Vec<VerificationReport>,
}

impl SweepReport {
    fn new(claim: &'static str, max_n: usize, contexts: Vec<VerificationReport>) -> Self {
        let status = if contexts.iter().all(VerificationReport::passed) {
            Status::Pass
        } else {
            Status::Fail
        };
        SweepReport {
            claim,
            max_n,
            status,
            scanned: contexts.iter().map(|r| r.scanned).sum(),
            contexts,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

fn require_interior(ctx: &GrassmannContext) -> Result<()> {
    if ctx.is_interior() {
        Ok(())
    } else {
        Err(Error::OutsideHypothesis { k: ctx.k(), n: ctx.n() })
    }
}

/// For all box partitions `lambda`, `mu` with
/// `|lambda| <= |mu| - k(n-k) + (k+1)`: `lambda` is not contained in `mu`
/// exactly for `((n-k,0,...,0), (n-k-1,...,n-k-1))` and
/// `((1,...,1), (n-k,...,n-k,0))`.
pub fn verify_prop_comp(ctx: &GrassmannContext) -> Result<VerificationReport> {
    require_interior(ctx)?;
    let (k, n) = (ctx.k(), ctx.n());
    let rows = ctx.rows();
    let cols = ctx.cols();
    let mut first_row = vec![0; rows];
    first_row[0] = cols;
    let exceptions = [
        (ctx.partition(&first_row)?, ctx.partition(&vec![cols - 1; rows])?),
        (ctx.partition(&vec![1; rows])?, ctx.partition(&vec![cols; rows - 1])?),
    ];
    let parts = ctx.partitions();
    let slack = k * (n - k);

    type Row = (Vec<Counterexample>, Vec<(Partition, Partition)>, u64);
    let rows_out: Vec<Row> = parts
        .par_iter()
        .map(|lambda| {
            let mut bad = Vec::new();
            let mut found = Vec::new();
            let mut hyp = 0u64;
            for mu in &parts {
                if lambda.weight() + slack > mu.weight() + k + 1 {
                    continue;
                }
                hyp += 1;
                let contained = mu.contains(lambda);
                let listed = exceptions.iter().any(|(l, m)| l == lambda && m == mu);
                if !contained {
                    found.push((lambda.clone(), mu.clone()));
                }
                if contained == listed {
                    bad.push(Counterexample::Containment {
                        lambda: lambda.clone(),
                        mu: mu.clone(),
                        contained,
                    });
                }
            }
            (bad, found, hyp)
        })
        .collect();

    let mut counterexamples = Vec::new();
    let mut found = Vec::new();
    let mut hypothesis_count = 0;
    for (bad, f, h) in rows_out {
        counterexamples.extend(bad);
        found.extend(f);
        hypothesis_count += h;
    }
    for (lambda, mu) in &exceptions {
        if !found.iter().any(|(l, m)| l == lambda && m == mu) {
            counterexamples.push(Counterexample::MissingExceptional {
                lambda: lambda.clone(),
                mu: mu.clone(),
            });
        }
    }
    found.sort();
    let scanned = (parts.len() * parts.len()) as u64;
    Ok(VerificationReport::new(
        "prop-comp",
        ctx,
        counterexamples,
        hypothesis_count,
        scanned,
        found,
    ))
}

/// For basis classes with codimension sum at most `n+1`, the product
/// vanishes exactly for `{[X_H], [X_p]}`. Both the fast criterion and the
/// full LR product are run and compared.
pub fn verify_thm_md(ctx: &GrassmannContext) -> Result<VerificationReport> {
    require_interior(ctx)?;
    let bound = ctx.n() + 1;
    let (fast, scanned) = scan(ctx, bound, Some(ScanMode::Fast))?;
    let slow = zero_pairs_by_product(ctx, bound)?;
    let mut counterexamples = Vec::new();

    for p in symmetric_difference(&fast, &slow) {
        counterexamples.push(Counterexample::CriterionDisagreement {
            a: p.a.clone(),
            b: p.b.clone(),
            fast_vanishes: fast.contains(p),
        });
    }

    let (h, pt) = ctx.special_classes();
    let expected = ZeroPair::new(&h, &pt);
    for p in &fast {
        if *p != expected {
            counterexamples.push(Counterexample::UnexpectedZeroPair {
                a: p.a.clone(),
                b: p.b.clone(),
                codim_sum: p.codim_sum,
            });
        }
    }
    if !fast.contains(&expected) {
        counterexamples.push(Counterexample::MissingZeroPair {
            a: expected.a.clone(),
            b: expected.b.clone(),
        });
    }
    let exceptional = fast.iter().map(|p| (p.a.clone(), p.b.clone())).collect();
    Ok(VerificationReport::new(
        "thm-md",
        ctx,
        counterexamples,
        scanned,
        scanned,
        exceptional,
    ))
}

fn symmetric_difference<'a>(x: &'a [ZeroPair], y: &'a [ZeroPair]) -> Vec<&'a ZeroPair> {
    let mut out: Vec<&ZeroPair> = x
        .iter()
        .filter(|p| !y.contains(p))
        .chain(y.iter().filter(|p| !x.contains(p)))
        .collect();
    out.sort();
    out
}

/// `compute_egd(ctx) == n`.
pub fn verify_egd(ctx: &GrassmannContext) -> VerificationReport {
    verify_egd_with(ctx, ScanMode::Fast).expect("fast scan cannot disagree with itself")
}

/// As [`verify_egd`]; with [`ScanMode::CrossValidated`] every pair is also
/// multiplied out, and a disagreement is an error.
pub fn verify_egd_with(ctx: &GrassmannContext, mode: ScanMode) -> Result<VerificationReport> {
    let (pairs, scanned) = scan(ctx, 2 * ctx.dim(), Some(mode))?;
    let computed = super::egd_from(&pairs);
    let mut counterexamples = Vec::new();
    if computed != ctx.n() {
        counterexamples.push(Counterexample::Egd {
            expected: ctx.n(),
            computed,
        });
    }
    Ok(VerificationReport::new("egd", ctx, counterexamples, scanned, scanned, Vec::new()))
}

pub fn verify_egd_sweep(max_n: usize) -> SweepReport {
    verify_egd_sweep_with(max_n, ScanMode::Fast).expect("fast scan cannot disagree with itself")
}

pub fn verify_egd_sweep_with(max_n: usize, mode: ScanMode) -> Result<SweepReport> {
    let reports = GrassmannContext::all_up_to(max_n)
        .map(|c| verify_egd_with(&c, mode))
        .collect::<Result<_>>()?;
    Ok(SweepReport::new("egd-sweep", max_n, reports))
}

pub fn sweep_thm_md(max_n: usize) -> Result<SweepReport> {
    let reports = GrassmannContext::interior_up_to(max_n)
        .map(|c| verify_thm_md(&c))
        .collect::<Result<_>>()?;
    Ok(SweepReport::new("thm-md", max_n, reports))
}

pub fn sweep_prop_comp(max_n: usize) -> Result<SweepReport> {
    let reports = GrassmannContext::interior_up_to(max_n)
        .map(|c| verify_prop_comp(&c))
        .collect::<Result<_>>()?;
    Ok(SweepReport::new("prop-comp", max_n, reports))
}
