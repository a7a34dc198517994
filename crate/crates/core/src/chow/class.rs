use std::collections::BTreeMap;
use std::fmt;

use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::coeff::Coefficient;
use crate::error::{Error, Result};
use crate::grassmann::{GrassmannContext, Partition};

/// An element of the Chow ring of `G(k,n)` in the Schubert basis.
///
/// Keys are codimension partitions (`sigma_a` has codimension `|a|`), stored
/// at length `k+1`. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleClass<C> {
    ctx: GrassmannContext,
    terms: BTreeMap<Partition, C>,
}

impl<C: Coefficient> CycleClass<C> {
    pub fn zero(ctx: GrassmannContext) -> Self {
        CycleClass {
            ctx,
            terms: BTreeMap::new(),
        }
    }

    /// The unit `sigma_()`, class of the whole Grassmannian.
    pub fn fundamental(ctx: GrassmannContext) -> Self {
        let empty = ctx.partition(&[]).expect("empty partition fits every box");
        Self::basis_unchecked(ctx, empty)
    }

    /// The class of a point, `sigma` of the full box.
    pub fn point(ctx: GrassmannContext) -> Self {
        let full = ctx
            .partition(&vec![ctx.cols(); ctx.rows()])
            .expect("full box fits");
        Self::basis_unchecked(ctx, full)
    }

    pub fn schubert(ctx: GrassmannContext, a: &Partition) -> Result<Self> {
        ctx.check_fits(a)?;
        Ok(Self::basis_unchecked(ctx, a.clone()))
    }

    fn basis_unchecked(ctx: GrassmannContext, a: Partition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(a, C::one());
        CycleClass { ctx, terms }
    }

    /// Sums duplicate keys and drops zero coefficients.
    pub fn from_terms<I>(ctx: GrassmannContext, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, C)>,
    {
        let mut out = Self::zero(ctx);
        for (p, c) in terms {
            ctx.check_fits(&p)?;
            out.add_term(p, c)?;
        }
        Ok(out)
    }

    pub(crate) fn add_term(&mut self, p: Partition, c: C) -> Result<()> {
        if c.is_zero() {
            return Ok(());
        }
        match self.terms.get_mut(&p) {
            Some(slot) => {
                *slot = slot.checked_add(&c).ok_or(Error::Overflow)?;
                if slot.is_zero() {
                    self.terms.remove(&p);
                }
            }
            None => {
                self.terms.insert(p, c);
            }
        }
        Ok(())
    }

    pub fn ctx(&self) -> &GrassmannContext {
        &self.ctx
    }

    pub fn terms(&self) -> &BTreeMap<Partition, C> {
        &self.terms
    }

    pub fn coefficient(&self, p: &Partition) -> C {
        self.terms.get(p).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// All coefficients positive. The zero class counts as effective.
    pub fn is_effective(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
    }

    /// `Ok(Some(d))` if every term has codimension `d`, `Ok(None)` for the
    /// zero class, `Err(NotHomogeneous)` for mixed degrees.
    pub fn homogeneous_degree(&self) -> Result<Option<usize>> {
        let mut degrees = self.terms.keys().map(Partition::weight);
        let Some(d) = degrees.next() else {
            return Ok(None);
        };
        if degrees.all(|e| e == d) {
            Ok(Some(d))
        } else {
            Err(Error::NotHomogeneous)
        }
    }

    fn check_same_ctx(&self, other: &Self) -> Result<()> {
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch(
                self.ctx.k(),
                self.ctx.n(),
                other.ctx.k(),
                other.ctx.n(),
            ));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_same_ctx(other)?;
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn scale(&self, factor: &C) -> Result<Self> {
        let mut out = Self::zero(self.ctx);
        for (p, c) in &self.terms {
            out.add_term(p.clone(), c.checked_mul(factor).ok_or(Error::Overflow)?)?;
        }
        Ok(out)
    }

    /// Ring product, `sigma_a * sigma_b = sum_nu c^nu_{ab} sigma_nu` over
    /// `nu` in the box, extended bilinearly.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_same_ctx(other)?;
        let mut out = Self::zero(self.ctx);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let scale = ca.checked_mul(cb).ok_or(Error::Overflow)?;
                for (nu, lr) in super::basis_product(&self.ctx, a, b) {
                    let lr = C::from_u64(lr).ok_or(Error::Overflow)?;
                    out.add_term(nu, scale.checked_mul(&lr).ok_or(Error::Overflow)?)?;
                }
            }
        }
        Ok(out)
    }
}

impl<C: Coefficient> fmt::Display for CycleClass<C> {
    /// `σ(2) + σ(1,1)`, largest partition first; `0` for the zero class and
    /// `σ(0)` for the unit.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.terms.iter().rev().enumerate() {
            let magnitude = c.abs();
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !magnitude.is_one() {
                write!(f, "{magnitude}")?;
            }
            let trimmed = p.trimmed();
            if trimmed.is_empty() {
                write!(f, "σ(0)")?;
            } else {
                write!(f, "σ{trimmed}")?;
            }
        }
        Ok(())
    }
}

/// Writes a coefficient as a JSON number when it fits in `i64`, otherwise as
/// a decimal string.
struct JsonCoeff<'a, C>(&'a C);

impl<C: Coefficient> Serialize for JsonCoeff<'_, C> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

struct Term<'a, C>(&'a Partition, &'a C);

impl<C: Coefficient> Serialize for Term<'_, C> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(2))?;
        m.serialize_entry("coeff", &JsonCoeff(self.1))?;
        m.serialize_entry("partition", self.0)?;
        m.end()
    }
}

impl<C: Coefficient> Serialize for CycleClass<C> {
    /// `{"k":..,"n":..,"terms":[{"coeff":..,"partition":[..]}]}`, terms in
    /// increasing lexicographic order of partitions.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<Term<'_, C>> = self.terms.iter().map(|(p, c)| Term(p, c)).collect();
        let mut st = s.serialize_struct("CycleClass", 3)?;
        st.serialize_field("k", &self.ctx.k())?;
        st.serialize_field("n", &self.ctx.n())?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}
