use proptest::prelude::*;
use proptest::sample::subsequence;

use schubert::{
    basis_product, classes_vanish_fast, lr_coefficient, lr_oracle, product_vanishes_fast, Class,
    GrassmannContext, Partition, SchubertSymbol,
};

fn context(max_n: usize) -> impl Strategy<Value = GrassmannContext> {
    (1..=max_n)
        .prop_flat_map(|n| (0..n, Just(n)))
        .prop_map(|(k, n)| GrassmannContext::new(k, n).unwrap())
}

fn symbol_in(ctx: GrassmannContext) -> impl Strategy<Value = SchubertSymbol> {
    subsequence((1..=ctx.n() + 1).collect::<Vec<_>>(), ctx.rows())
        .prop_map(move |idx| ctx.symbol(&idx).unwrap())
}

fn class_partition_in(ctx: GrassmannContext) -> impl Strategy<Value = Partition> {
    symbol_in(ctx).prop_map(move |s| ctx.class_of_symbol(&s).unwrap())
}

fn with_symbols(max_n: usize, count: usize) -> impl Strategy<Value = (GrassmannContext, Vec<SchubertSymbol>)> {
    context(max_n).prop_flat_map(move |ctx| (Just(ctx), proptest::collection::vec(symbol_in(ctx), count)))
}

/// An effective class: a few basis classes with positive coefficients.
fn effective_in(ctx: GrassmannContext) -> impl Strategy<Value = Class> {
    proptest::collection::vec((class_partition_in(ctx), 1i64..5), 1..4)
        .prop_map(move |terms| Class::from_terms(ctx, terms).unwrap())
}

fn free_partition() -> impl Strategy<Value = Partition> {
    proptest::collection::vec(0usize..4, 0..4).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn conversions_round_trip((ctx, s) in with_symbols(10, 1)) {
        let lam = ctx.symbol_to_dim_partition(&s[0]).unwrap();
        prop_assert_eq!(&ctx.dim_partition_to_symbol(&lam).unwrap(), &s[0]);
        prop_assert!(ctx.fits(&lam));
    }

    #[test]
    fn duality_is_coherent((ctx, s) in with_symbols(10, 1)) {
        let s = &s[0];
        let dual = ctx.dual_symbol(s).unwrap();
        let lam = ctx.symbol_to_dim_partition(s).unwrap();
        let dual_lam = ctx.dual_partition(&lam).unwrap();
        prop_assert_eq!(&ctx.symbol_to_dim_partition(&dual).unwrap(), &dual_lam);
        prop_assert_eq!(&ctx.dual_symbol(&dual).unwrap(), s);
        prop_assert_eq!(ctx.dual_partition(&dual_lam).unwrap(), lam.clone());
        prop_assert_eq!(lam.weight() + dual_lam.weight(), ctx.dim());
    }

    #[test]
    fn bruhat_is_a_partial_order((ctx, s) in with_symbols(8, 3)) {
        let (a, b, c) = (&s[0], &s[1], &s[2]);
        let leq = |x, y| ctx.bruhat_leq(x, y).unwrap();
        prop_assert!(leq(a, a));
        if leq(a, b) && leq(b, a) {
            prop_assert_eq!(a, b);
        }
        if leq(a, b) && leq(b, c) {
            prop_assert!(leq(a, c));
        }
        prop_assert_eq!(leq(a, b), ctx.bruhat_leq_by_diagram(a, b).unwrap());
        let (da, db) = (ctx.dual_symbol(a).unwrap(), ctx.dual_symbol(b).unwrap());
        prop_assert_eq!(leq(a, b), leq(&db, &da));
    }

    #[test]
    fn fast_criterion_matches_product((ctx, s) in with_symbols(8, 2)) {
        let a = ctx.class_of_symbol(&s[0]).unwrap();
        let b = ctx.class_of_symbol(&s[1]).unwrap();
        let fast = product_vanishes_fast(&ctx, &s[0], &s[1]).unwrap();
        prop_assert_eq!(fast, basis_product(&ctx, &a, &b).is_empty());
        prop_assert_eq!(fast, classes_vanish_fast(&ctx, &a, &b).unwrap());
    }

    #[test]
    fn multiplication_is_graded_and_commutative(
        (x, y) in context(8).prop_flat_map(|ctx| (effective_in(ctx), effective_in(ctx)))
    ) {
        let xy = x.multiply(&y).unwrap();
        prop_assert_eq!(&xy, &y.multiply(&x).unwrap());
        prop_assert!(xy.is_effective());
        if let (Some(dx), Some(dy)) = (
            x.homogeneous_degree().ok().flatten(),
            y.homogeneous_degree().ok().flatten(),
        ) {
            let dim = x.ctx().dim();
            prop_assert!(xy.terms().keys().all(|nu| nu.weight() == dx + dy));
            if dx + dy > dim {
                prop_assert!(xy.is_zero());
            }
        }
    }

    #[test]
    fn multiplication_is_associative(
        (x, y, z) in context(6).prop_flat_map(|ctx| (effective_in(ctx), effective_in(ctx), effective_in(ctx)))
    ) {
        let left = x.multiply(&y).unwrap().multiply(&z).unwrap();
        let right = x.multiply(&y.multiply(&z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn lr_coefficients_match_oracle(lam in free_partition(), mu in free_partition()) {
        let vars = lam.num_rows() + mu.num_rows();
        let expansion = lr_oracle(&lam, &mu, vars.max(1)).unwrap();
        for (nu, c) in &expansion {
            prop_assert_eq!(lr_coefficient(&lam, &mu, nu) as i64, *c);
            prop_assert_eq!(lr_coefficient(&mu, &lam, nu) as i64, *c);
        }
        prop_assert!(expansion.keys().all(|nu| nu.weight() == lam.weight() + mu.weight()));
        // and nothing the oracle misses: scan every nu in a box large enough
        let rows = vars.max(1);
        let cols = (lam.first() + mu.first()).max(1);
        let bigbox = GrassmannContext::new(rows - 1, rows - 1 + cols).unwrap();
        for nu in bigbox.partitions_of_weight(lam.weight() + mu.weight()) {
            let c = lr_coefficient(&lam, &mu, &nu);
            let listed = expansion.iter().find(|(p, _)| p.same_diagram(&nu)).map(|(_, c)| *c);
            prop_assert_eq!(c as i64, listed.unwrap_or(0));
        }
    }
}
