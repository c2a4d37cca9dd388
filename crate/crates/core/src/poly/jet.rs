use alloc::sync::Arc;
use alloc::vec::Vec;

use super::{Polynomial, VarSet};
use crate::error::{Error, Result};

/// Truncated ε-polynomial `Σ_{j≤m} c_j ε^j` with `ε^{m+1} = 0` and
/// polynomial coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Jet {
    coeffs: Vec<Polynomial>,
}

impl Jet {
    /// Builds a jet from its `m + 1` coefficients; they must share a varset.
    pub fn new(coeffs: Vec<Polynomial>) -> Result<Self> {
        let first = coeffs.first().ok_or(Error::OrderMismatch {
            expected: 1,
            found: 0,
        })?;
        if coeffs.iter().any(|c| !c.same_vars(first)) {
            return Err(Error::VarsetMismatch);
        }
        Ok(Self { coeffs })
    }

    pub fn zero(vars: &Arc<VarSet>, order: usize) -> Self {
        Self {
            coeffs: alloc::vec![Polynomial::zero(vars); order + 1],
        }
    }

    pub fn one(vars: &Arc<VarSet>, order: usize) -> Self {
        let mut jet = Self::zero(vars, order);
        jet.coeffs[0] = Polynomial::one(vars);
        jet
    }

    /// Truncation order `m`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Polynomial] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Polynomial> {
        self.coeffs
    }

    pub fn coeff(&self, j: usize) -> &Polynomial {
        &self.coeffs[j]
    }

    pub fn vars(&self) -> &Arc<VarSet> {
        self.coeffs[0].vars()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                expected: self.order(),
                found: other.order(),
            });
        }
        if !self.coeffs[0].same_vars(&other.coeffs[0]) {
            return Err(Error::VarsetMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// Truncated product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let m = self.order();
        let mut out = Self::zero(self.vars(), m);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=m - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] = &out.coeffs[i + j] + &(a * b);
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Polynomial) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }
}

/// Substitutes `subst[i]` for variable `i` of `p` and expands in ε.
///
/// Coefficient `j` of the result is the polynomial multiplying `ε^j`,
/// expressed over the jets' common varset.
pub fn jet_substitute(p: &Polynomial, subst: &[Jet], order: usize) -> Result<Jet> {
    if subst.len() != p.vars().len() {
        return Err(Error::DimensionMismatch {
            expected: p.vars().len(),
            found: subst.len(),
        });
    }
    let target = match subst.first() {
        Some(jet) => Arc::clone(jet.vars()),
        None => {
            return Ok(Jet {
                coeffs: alloc::vec![p.clone()],
            })
        }
    };
    for jet in subst {
        if jet.order() != order {
            return Err(Error::OrderMismatch {
                expected: order,
                found: jet.order(),
            });
        }
        if !jet.coeffs[0].same_vars(&subst[0].coeffs[0]) {
            return Err(Error::VarsetMismatch);
        }
    }

    let mut powers: Vec<Vec<Jet>> = alloc::vec![Vec::new(); subst.len()];
    let mut total = Jet::zero(&target, order);
    for (m, c) in p.terms() {
        let mut term = Jet::one(&target, order).scale(&Polynomial::constant(&target, c.clone()));
        for &(v, e) in m.exponents() {
            let cache = &mut powers[v as usize];
            if cache.is_empty() {
                cache.push(Jet::one(&target, order));
            }
            while cache.len() <= e as usize {
                let next = cache[cache.len() - 1].mul(&subst[v as usize])?;
                cache.push(next);
            }
            term = term.mul(&cache[e as usize])?;
        }
        total = total.add(&term)?;
    }
    Ok(total)
}
