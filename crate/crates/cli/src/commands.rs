use std::fmt::Write as _;
use std::process::ExitCode;
use std::time::Duration;

use serde_json::{json, Value};
use schubert::mdpair::{self, SweepReport, VerificationReport};
use schubert::{
    classify, classify_table, render_diagram, Class, Error, GrassmannContext, MorphismQuery,
    ScanMode, SchubertSymbol,
};

use crate::{Claim, Cli, Command, Convention, Format, Space};

/// What a command produced: the JSON report, its text rendering, and whether
/// a verification found a counterexample.
struct Report {
    json: Value,
    text: String,
    failed: bool,
}

impl Report {
    fn ok(json: Value, text: String) -> Self {
        Report { json, text, failed: false }
    }
}

pub fn run(cli: &Cli) -> ExitCode {
    let report = match execute(cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return match e {
                Error::CriterionMismatch { .. } => ExitCode::from(1),
                _ => ExitCode::from(2),
            };
        }
    };
    let json = serde_json::to_string_pretty(&report.json).expect("report values serialize") + "\n";
    if let Some(path) = &cli.output {
        if let Err(e) = std::fs::write(path, &json) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    match cli.format {
        Format::Json => print!("{json}"),
        Format::Text => print!("{}", report.text),
    }
    if report.failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn context(space: &Space) -> Result<GrassmannContext, Error> {
    GrassmannContext::new(space.k, space.n)
}

fn scan_mode(cross_validate: bool) -> ScanMode {
    if cross_validate {
        ScanMode::CrossValidated
    } else {
        ScanMode::Fast
    }
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report values serialize")
}

fn execute(cli: &Cli) -> Result<Report, Error> {
    match &cli.command {
        Command::Convert { space, symbol, partition, convention } => {
            let ctx = context(space)?;
            let sym = match (symbol, partition) {
                (Some(s), _) => ctx.symbol(s)?,
                (None, Some(p)) => {
                    let p = ctx.partition(p)?;
                    match convention {
                        Convention::Dim => ctx.dim_partition_to_symbol(&p)?,
                        Convention::Codim => ctx.symbol_of_class(&p)?,
                    }
                }
                (None, None) => unreachable!("clap requires one of --symbol, --partition"),
            };
            convert(&ctx, &sym)
        }
        Command::Render { space, partition, overlay } => {
            let ctx = context(space)?;
            let p = ctx.partition(partition)?;
            let o = overlay.as_deref().map(|o| ctx.partition(o)).transpose()?;
            let diagram = render_diagram(&ctx, &p, o.as_ref())?;
            let json = json!({
                "k": ctx.k(),
                "n": ctx.n(),
                "partition": p,
                "overlay": o,
                "diagram": diagram,
            });
            Ok(Report::ok(json, diagram))
        }
        Command::Product { space, a, b } => {
            let ctx = context(space)?;
            let x = Class::schubert(ctx, &ctx.partition(a)?)?;
            let y = Class::schubert(ctx, &ctx.partition(b)?)?;
            let p = x.multiply(&y)?;
            Ok(Report::ok(to_value(&p), format!("{p}\n")))
        }
        Command::Vanishes { space, symbol_a, symbol_b, a, b, cross_validate } => {
            let ctx = context(space)?;
            let (i, j) = match (symbol_a, symbol_b, a, b) {
                (Some(i), Some(j), _, _) => (ctx.symbol(i)?, ctx.symbol(j)?),
                (_, _, Some(a), Some(b)) => (
                    ctx.symbol_of_class(&ctx.partition(a)?)?,
                    ctx.symbol_of_class(&ctx.partition(b)?)?,
                ),
                _ => unreachable!("clap requires a complete pair"),
            };
            vanishes(&ctx, &i, &j, *cross_validate)
        }
        Command::Mdpairs { space, cross_validate, max_codim_sum } => {
            let ctx = context(space)?;
            let mut r = mdpair::search(&ctx, scan_mode(*cross_validate), *max_codim_sum)?;
            if cli.no_timing {
                r.elapsed = Duration::ZERO;
            }
            let mut text = format!(
                "G({},{}): egd = {}, scanned {} pairs in {} ms\n",
                r.k,
                r.n,
                r.egd,
                r.scanned,
                r.elapsed.as_millis()
            );
            let _ = writeln!(text, "md-pairs ({}):", r.md_pairs.len());
            for p in &r.md_pairs {
                let _ = writeln!(text, "  σ{} · σ{}  type {}", p.a, p.b, p.pair_type);
            }
            let limit = max_codim_sum.unwrap_or(r.egd + 1);
            let _ = writeln!(text, "zero pairs with codim sum <= {limit} ({}):", r.zero_pairs.len());
            for p in &r.zero_pairs {
                let _ = writeln!(text, "  {:>3}  σ{} · σ{}", p.codim_sum, p.a, p.b);
            }
            Ok(Report::ok(to_value(&r), text))
        }
        Command::Egd { space, cross_validate } => {
            let ctx = context(space)?;
            let r = mdpair::search(&ctx, scan_mode(*cross_validate), Some(0))?;
            let json = json!({
                "k": r.k,
                "n": r.n,
                "egd": r.egd,
                "scanned": r.scanned,
                "cross_validated": cross_validate,
            });
            let text = format!("egd(G({},{})) = {}  (scanned {} pairs)\n", r.k, r.n, r.egd, r.scanned);
            Ok(Report::ok(json, text))
        }
        Command::Verify { claim, k, n, max_n, cross_validate } => {
            verify(*claim, k.zip(*n), *max_n, *cross_validate)
        }
        Command::Classify { l, k, n, table } => {
            if *table {
                let t = classify_table(*n)?;
                let grid = t.render_text();
                let mut json = to_value(&t);
                json["grid"] = Value::String(grid.clone());
                Ok(Report::ok(json, grid))
            } else {
                let (l, k) = l.zip(*k).expect("clap requires --l and --k");
                let q = MorphismQuery::new(l, k, *n)?;
                let o = classify(&q);
                let json = to_value(&o);
                let text = format!(
                    "G({l},{n}) -> G({k},{n}): {}\n  {}: {}\n",
                    json["verdict"].as_str().unwrap_or_default(),
                    json["reason"]["branch"].as_str().unwrap_or_default(),
                    o.reason.details
                );
                Ok(Report::ok(json, text))
            }
        }
    }
}

fn convert(ctx: &GrassmannContext, sym: &SchubertSymbol) -> Result<Report, Error> {
    let dim = ctx.symbol_to_dim_partition(sym)?;
    let codim = ctx.class_of_symbol(sym)?;
    let dual = ctx.dual_symbol(sym)?;
    let dual_dim = ctx.symbol_to_dim_partition(&dual)?;
    let json = json!({
        "k": ctx.k(),
        "n": ctx.n(),
        "symbol": sym.indices(),
        "dim_partition": dim,
        "codim_partition": codim,
        "dimension": dim.weight(),
        "codimension": codim.weight(),
        "dual_symbol": dual.indices(),
        "dual_dim_partition": dual_dim,
    });
    let text = format!(
        "G({},{})\n\
         symbol          {sym}\n\
         dim partition   {dim}  dimension {}\n\
         codim partition {codim}  codimension {}\n\
         dual symbol     {dual}\n\
         dual partition  {dual_dim}\n",
        ctx.k(),
        ctx.n(),
        dim.weight(),
        codim.weight(),
    );
    Ok(Report::ok(json, text))
}

fn vanishes(
    ctx: &GrassmannContext,
    i: &SchubertSymbol,
    j: &SchubertSymbol,
    cross_validate: bool,
) -> Result<Report, Error> {
    let fast = schubert::product_vanishes_fast(ctx, i, j)?;
    let dual = ctx.dual_symbol(i)?;
    let product = if cross_validate {
        let x = Class::schubert(*ctx, &ctx.class_of_symbol(i)?)?;
        let y = Class::schubert(*ctx, &ctx.class_of_symbol(j)?)?;
        let p = x.multiply(&y)?;
        if p.is_zero() != fast {
            return Err(Error::CriterionMismatch {
                a: format!("fast criterion: vanishes = {fast}"),
                b: format!("product {i} · {j} = {p}"),
            });
        }
        Some(p)
    } else {
        None
    };
    let json = json!({
        "k": ctx.k(),
        "n": ctx.n(),
        "symbol_a": i.indices(),
        "symbol_b": j.indices(),
        "dual_a": dual.indices(),
        "vanishes": fast,
        "cross_validated": cross_validate,
        "product": product,
    });
    let mut text = format!(
        "[X_{i}]·[X_{j}] {}  ({dual} {} {j})\n",
        if fast { "= 0" } else { "!= 0" },
        if fast { "is not <=" } else { "<=" },
    );
    if let Some(p) = &product {
        let _ = writeln!(text, "product: {p}");
    }
    Ok(Report::ok(json, text))
}

fn verify(
    claim: Claim,
    single: Option<(usize, usize)>,
    max_n: Option<usize>,
    cross_validate: bool,
) -> Result<Report, Error> {
    let mode = scan_mode(cross_validate);
    if let Some((k, n)) = single {
        let ctx = GrassmannContext::new(k, n)?;
        let r = match claim {
            Claim::ThmMd => mdpair::verify_thm_md(&ctx)?,
            Claim::PropComp => mdpair::verify_prop_comp(&ctx)?,
            Claim::EgdSweep => mdpair::verify_egd_with(&ctx, mode)?,
        };
        let mut text = String::new();
        context_line(&mut text, &r);
        let _ = writeln!(text, "{}", status_word(r.passed()));
        return Ok(Report { json: to_value(&r), text, failed: !r.passed() });
    }
    let max_n = max_n.unwrap_or(if cross_validate { 8 } else { 10 });
    let sweep = match claim {
        Claim::ThmMd => mdpair::sweep_thm_md(max_n)?,
        Claim::PropComp => mdpair::sweep_prop_comp(max_n)?,
        Claim::EgdSweep => mdpair::verify_egd_sweep_with(max_n, mode)?,
    };
    Ok(sweep_report(&sweep))
}

fn sweep_report(s: &SweepReport) -> Report {
    let mut text = String::new();
    for r in &s.contexts {
        context_line(&mut text, r);
    }
    let _ = writeln!(
        text,
        "{} over {} Grassmannians with n <= {}: {} cases scanned",
        s.claim,
        s.contexts.len(),
        s.max_n,
        s.scanned
    );
    let _ = writeln!(text, "{}", status_word(s.passed()));
    Report { json: to_value(s), text, failed: !s.passed() }
}

fn context_line(text: &mut String, r: &VerificationReport) {
    let _ = writeln!(
        text,
        "G({},{}) {}: {}  scanned {}, hypothesis {}, counterexamples {}",
        r.k,
        r.n,
        r.claim,
        status_word(r.passed()),
        r.scanned,
        r.hypothesis_count,
        r.counterexamples.len()
    );
    for c in &r.counterexamples {
        let _ = writeln!(text, "  {}", serde_json::to_string(c).expect("counterexamples serialize"));
    }
    for (a, b) in &r.exceptional {
        let _ = writeln!(text, "  exceptional {a} {b}");
    }
}

fn status_word(passed: bool) -> &'static str {
    if passed {
        "pass"
    } else {
        "fail"
    }
}
