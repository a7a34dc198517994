//! The Chow ring of `G(k,n)` in the Schubert basis.
//!
//! Products are computed with the Littlewood-Richardson rule and truncated to
//! the `(k+1) x (n-k)` box, which is exactly the quotient of the ring of
//! symmetric functions that gives the Chow ring of the Grassmannian.

mod class;
mod lr;
mod schur;

pub use class::CycleClass;
pub use lr::{is_lattice_word, lr_coefficient, lr_tableaux, LrTableau};
pub use schur::{lr_oracle, SchurOracle};

use crate::coeff::Coefficient;
use crate::error::{Error, Result};
use crate::grassmann::{partitions_between, GrassmannContext, Partition, SchubertSymbol};

/// Basis class `sigma_a` (codimension convention).
pub fn schubert_class<C: Coefficient>(ctx: GrassmannContext, a: &Partition) -> Result<CycleClass<C>> {
    CycleClass::schubert(ctx, a)
}

pub fn multiply<C: Coefficient>(x: &CycleClass<C>, y: &CycleClass<C>) -> Result<CycleClass<C>> {
    x.multiply(y)
}

/// Nonzero terms of `sigma_a * sigma_b` inside the box, increasing order.
pub fn basis_product(ctx: &GrassmannContext, a: &Partition, b: &Partition) -> Vec<(Partition, u64)> {
    let weight = a.weight() + b.weight();
    if weight > ctx.dim() {
        return Vec::new();
    }
    // nu must contain both factors
    let rows = ctx.rows();
    let lower = Partition::from_parts_unchecked((0..rows).map(|i| a.part(i).max(b.part(i))).collect());
    partitions_between(rows, ctx.cols(), weight, &lower)
        .into_iter()
        .filter_map(|nu| {
            let c = lr_coefficient(a, b, &nu);
            (c > 0).then_some((nu, c))
        })
        .collect()
}

/// `[X_I] * [X_J] = 0`, decided by the Bruhat test `I^vee <= J` alone.
pub fn product_vanishes_fast(ctx: &GrassmannContext, i: &SchubertSymbol, j: &SchubertSymbol) -> Result<bool> {
    let dual = ctx.dual_symbol(i)?;
    Ok(!ctx.bruhat_leq(&dual, j)?)
}

/// Same question for codimension partitions `sigma_a`, `sigma_b`.
pub fn classes_vanish_fast(ctx: &GrassmannContext, a: &Partition, b: &Partition) -> Result<bool> {
    product_vanishes_fast(ctx, &ctx.symbol_of_class(a)?, &ctx.symbol_of_class(b)?)
}

/// Coefficient of the point class in `x * y`, for homogeneous classes of
/// complementary degree.
pub fn poincare_pair<C: Coefficient>(x: &CycleClass<C>, y: &CycleClass<C>) -> Result<C> {
    let ctx = *x.ctx();
    let (dx, dy) = (x.homogeneous_degree()?, y.homogeneous_degree()?);
    let (Some(dx), Some(dy)) = (dx, dy) else {
        if x.ctx() != y.ctx() {
            return Err(Error::ContextMismatch(ctx.k(), ctx.n(), y.ctx().k(), y.ctx().n()));
        }
        return Ok(C::zero());
    };
    if dx + dy != ctx.dim() {
        return Err(Error::DegreeMismatch {
            left: dx,
            right: dy,
            dim: ctx.dim(),
        });
    }
    let full = ctx.partition(&vec![ctx.cols(); ctx.rows()])?;
    Ok(x.multiply(y)?.coefficient(&full))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type Class = CycleClass<i64>;

    fn g(k: usize, n: usize) -> GrassmannContext {
        GrassmannContext::new(k, n).unwrap()
    }

    fn sigma(ctx: GrassmannContext, parts: &[usize]) -> Class {
        Class::schubert(ctx, &ctx.partition(parts).unwrap()).unwrap()
    }

    #[test]
    fn schubert_class_examples() {
        let c = g(2, 6);
        assert_eq!(sigma(c, &[1, 1, 1]).homogeneous_degree(), Ok(Some(3)));
        assert_eq!(sigma(c, &[4]).homogeneous_degree(), Ok(Some(4)));
        assert_eq!(sigma(c, &[]), Class::fundamental(c));
        assert_eq!(Class::fundamental(c).homogeneous_degree(), Ok(Some(0)));
        let bad = Partition::new(vec![5, 0, 0]).unwrap();
        assert!(Class::schubert(c, &bad).is_err());
    }

    #[test]
    fn product_examples() {
        let c = g(1, 3);
        let sq = sigma(c, &[1]).multiply(&sigma(c, &[1])).unwrap();
        assert_eq!(sq, sigma(c, &[2]).checked_add(&sigma(c, &[1, 1])).unwrap());
        assert_eq!(sq.to_string(), "σ(2) + σ(1,1)");
        assert!(sigma(c, &[2, 2]).multiply(&sigma(c, &[1])).unwrap().is_zero());

        let c = g(2, 6);
        assert!(sigma(c, &[1, 1, 1]).multiply(&sigma(c, &[4])).unwrap().is_zero());
        let x = sigma(c, &[2, 1]);
        assert_eq!(x.multiply(&Class::fundamental(c)).unwrap(), x);
    }

    #[test]
    fn four_lines_meeting_four_lines() {
        // sigma_1^4 in G(1,3) is 2 points.
        let c = g(1, 3);
        let h = sigma(c, &[1]);
        let mut acc = Class::fundamental(c);
        for _ in 0..4 {
            acc = acc.multiply(&h).unwrap();
        }
        assert_eq!(acc, Class::point(c).scale(&2).unwrap());
    }

    #[test]
    fn mixed_degree_and_mismatch_errors() {
        let c = g(1, 3);
        let mixed = sigma(c, &[1]).checked_add(&sigma(c, &[2])).unwrap();
        assert_eq!(mixed.homogeneous_degree(), Err(Error::NotHomogeneous));
        assert_eq!(poincare_pair(&mixed, &sigma(c, &[1])), Err(Error::NotHomogeneous));
        assert!(matches!(
            poincare_pair(&sigma(c, &[1]), &sigma(c, &[1])),
            Err(Error::DegreeMismatch { .. })
        ));
        assert!(matches!(
            sigma(c, &[1]).multiply(&sigma(g(1, 4), &[1])),
            Err(Error::ContextMismatch(..))
        ));
    }

    #[test]
    fn pairing_examples() {
        let c = g(2, 6);
        assert_eq!(poincare_pair(&Class::fundamental(c), &Class::point(c)), Ok(1));
        assert_eq!(poincare_pair(&sigma(c, &[2, 1]), &sigma(c, &[4, 3, 2])), Ok(1));
        assert_eq!(poincare_pair(&sigma(c, &[2, 1]), &sigma(c, &[4, 4, 1])), Ok(0));
        assert_eq!(poincare_pair(&Class::zero(c), &sigma(c, &[1])), Ok(0));
    }

    #[test]
    fn fast_vanishing_examples() {
        let c = g(2, 6);
        let (h, p) = c.special_symbols();
        assert!(product_vanishes_fast(&c, &h, &p).unwrap());
        // [X_I] for the top symbol is the unit: never annihilates anything
        let top = c.symbol(&[5, 6, 7]).unwrap();
        for i in c.symbols() {
            assert!(!product_vanishes_fast(&c, &i, &top).unwrap());
        }
        let s = c.symbol(&[3, 4, 5]).unwrap();
        let a = c.class_of_symbol(&s).unwrap();
        let prod = Class::schubert(c, &a).unwrap().multiply(&Class::schubert(c, &a).unwrap()).unwrap();
        assert_eq!(product_vanishes_fast(&c, &s, &s).unwrap(), prod.is_zero());
    }

    #[test]
    fn overflow_is_an_error() {
        let c = g(1, 3);
        let big = sigma(c, &[1]).scale(&(i64::MAX / 2 + 1)).unwrap();
        assert_eq!(big.multiply(&sigma(c, &[1]).scale(&4).unwrap()), Err(Error::Overflow));
        let x = CycleClass::<BigInt>::schubert(c, &c.partition(&[1]).unwrap()).unwrap();
        let huge = x.scale(&(BigInt::from(i64::MAX) * 4)).unwrap();
        assert!(huge.multiply(&x).is_ok());
    }

    #[test]
    fn json_shape() {
        let c = g(1, 3);
        let sq = sigma(c, &[1]).multiply(&sigma(c, &[1])).unwrap();
        let v = serde_json::to_string(&sq).unwrap();
        assert_eq!(
            v,
            r#"{"k":1,"n":3,"terms":[{"coeff":1,"partition":[1,1]},{"coeff":1,"partition":[2,0]}]}"#
        );
        let huge = CycleClass::<BigInt>::point(c).scale(&(BigInt::from(u64::MAX) * 3)).unwrap();
        assert!(serde_json::to_string(&huge).unwrap().contains("\"55340232221128654845\""));
    }
}
