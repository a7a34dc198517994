//! Schur-polynomial expansion of `s_lambda * s_mu`, independent of the LR
//! tableau code.
//!
//! Each Schur polynomial is expanded into monomials by enumerating its
//! semistandard tableaux in `m` variables. A tableau with entries `<= m` is
//! the same thing as a chain of shapes in which the cells holding `m` form a
//! horizontal strip, so the expansion peels one strip per variable and
//! memoizes per (shape, variable count).
//!
//! The product is only ever needed on dominant monomials (weakly decreasing
//! exponent vectors): a symmetric polynomial is determined by them, and the
//! Schur decomposition reads them off by repeatedly taking the
//! lexicographically largest monomial `x^beta`, recording its coefficient `c`
//! as the multiplicity of `s_beta`, and subtracting `c * s_beta`.

use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;

use crate::error::{Error, Result};
use crate::grassmann::Partition;

type Exponent = Vec<u16>;

/// Monomial expansion of one Schur polynomial, flat `(exponent, count)` list.
#[derive(Debug)]
struct Expansion {
    monomials: Vec<(Exponent, u64)>,
}

/// Memoizing Schur expander for a fixed number of variables. Not shared
/// between threads; make one per worker.
pub struct SchurOracle {
    num_vars: usize,
    cache: HashMap<(Vec<usize>, usize), Rc<Expansion>>,
}

impl SchurOracle {
    pub fn new(num_vars: usize) -> Self {
        SchurOracle {
            num_vars,
            cache: HashMap::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    /// Monomial coefficients of `s_lambda(x_1..x_m)` as a map from exponent
    /// vector (length `m`) to count.
    pub fn monomials(&mut self, lambda: &Partition) -> BTreeMap<Vec<usize>, u64> {
        let exp = self.expansion(lambda.trimmed().parts(), self.num_vars);
        exp.monomials
            .iter()
            .map(|(e, c)| (e.iter().map(|&x| x as usize).collect(), *c))
            .collect()
    }

    fn expansion(&mut self, shape: &[usize], vars: usize) -> Rc<Expansion> {
        let key = (shape.to_vec(), vars);
        if let Some(e) = self.cache.get(&key) {
            return Rc::clone(e);
        }
        let e = Rc::new(self.expand(shape, vars));
        self.cache.insert(key, Rc::clone(&e));
        e
    }

    fn expand(&mut self, shape: &[usize], vars: usize) -> Expansion {
        if vars == 0 {
            let monomials = if shape.is_empty() {
                vec![(Vec::new(), 1)]
            } else {
                Vec::new()
            };
            return Expansion { monomials };
        }
        // more rows than variables: no tableaux
        if shape.len() > vars {
            return Expansion {
                monomials: Vec::new(),
            };
        }
        let total: usize = shape.iter().sum();
        let mut acc: HashMap<Exponent, u64> = HashMap::new();
        for smaller in horizontal_strip_removals(shape) {
            let strip = (total - smaller.iter().sum::<usize>()) as u16;
            let sub = self.expansion(&smaller, vars - 1);
            for (e, c) in &sub.monomials {
                let mut e = e.clone();
                e.push(strip);
                *acc.entry(e).or_insert(0) += c;
            }
        }
        Expansion {
            monomials: acc.into_iter().collect(),
        }
    }

    /// Dominant part of `s_lambda * s_mu`.
    fn dominant_product(&mut self, lambda: &[usize], mu: &[usize]) -> Result<BTreeMap<Exponent, i128>> {
        let m = self.num_vars;
        let a = self.expansion(lambda, m);
        let b = self.expansion(mu, m);
        let mut out: HashMap<Exponent, i128> = HashMap::new();
        let mut beta: Exponent = vec![0; m];
        for (ea, ca) in &a.monomials {
            'inner: for (eb, cb) in &b.monomials {
                for i in 0..m {
                    beta[i] = ea[i] + eb[i];
                    if i > 0 && beta[i] > beta[i - 1] {
                        continue 'inner;
                    }
                }
                let term = i128::from(*ca)
                    .checked_mul(i128::from(*cb))
                    .ok_or(Error::Overflow)?;
                let slot = out.entry(beta.clone()).or_insert(0);
                *slot = slot.checked_add(term).ok_or(Error::Overflow)?;
            }
        }
        Ok(out.into_iter().filter(|(_, c)| *c != 0).collect())
    }

    /// Full Schur expansion of `s_lambda * s_mu` in this oracle's variables.
    /// Shapes with more rows than variables are invisible and never appear.
    pub fn product(&mut self, lambda: &Partition, mu: &Partition) -> Result<BTreeMap<Partition, i64>> {
        let needed = lambda.num_rows().max(mu.num_rows());
        if self.num_vars < needed {
            return Err(Error::InsufficientVariables {
                needed,
                got: self.num_vars,
            });
        }
        let m = self.num_vars;
        let mut poly = self.dominant_product(lambda.trimmed().parts(), mu.trimmed().parts())?;
        let mut result = BTreeMap::new();
        while let Some((lead, c)) = poly.iter().next_back().map(|(e, c)| (e.clone(), *c)) {
            let shape: Vec<usize> = lead.iter().map(|&x| x as usize).filter(|&x| x > 0).collect();
            let schur = self.expansion(&shape, m);
            for (e, k) in &schur.monomials {
                if !e.windows(2).all(|w| w[0] >= w[1]) {
                    continue;
                }
                let term = c.checked_mul(i128::from(*k)).ok_or(Error::Overflow)?;
                let slot = poly.entry(e.clone()).or_insert(0);
                *slot = slot.checked_sub(term).ok_or(Error::Overflow)?;
                if *slot == 0 {
                    poly.remove(e);
                }
            }
            let c = i64::try_from(c).map_err(|_| Error::Overflow)?;
            result.insert(Partition::from_parts_unchecked(shape), c);
        }
        Ok(result)
    }
}

/// Shapes `kappa` with `lambda / kappa` a horizontal strip:
/// `lambda_{i+1} <= kappa_i <= lambda_i`. Returned trimmed.
fn horizontal_strip_removals(shape: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(shape.len());
    fn go(shape: &[usize], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let i = cur.len();
        if i == shape.len() {
            let rows = cur.iter().take_while(|&&x| x > 0).count();
            out.push(cur[..rows].to_vec());
            return;
        }
        let lo = shape.get(i + 1).copied().unwrap_or(0);
        for x in lo..=shape[i] {
            cur.push(x);
            go(shape, cur, out);
            cur.pop();
        }
    }
    go(shape, &mut cur, &mut out);
    out
}

/// Schur expansion of `s_lambda * s_mu` in `num_vars` variables, untruncated.
pub fn lr_oracle(lambda: &Partition, mu: &Partition, num_vars: usize) -> Result<BTreeMap<Partition, i64>> {
    SchurOracle::new(num_vars).product(lambda, mu)
}
