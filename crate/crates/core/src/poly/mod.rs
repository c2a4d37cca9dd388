//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Variables are basis elements of a Lie algebra viewed as linear
//! coordinates on its dual, so a [`Polynomial`] is an element of the
//! symmetric algebra `S(q) = k[q*]`. Terms are kept in graded reverse
//! lexicographic order over the declared variable order.

mod jet;
mod monomial;
mod parse;

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use jet::{jet_substitute, Jet};
pub use monomial::Monomial;
pub use parse::is_identifier;

/// Exact rational number in lowest terms.
pub type Rational = num_rational::BigRational;

/// Builds a rational from a machine integer.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Parses `"p"` or `"p/q"` into a rational.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = |message: &str| Error::Syntax {
        position: 0,
        message: alloc::format!("{message}: `{text}`"),
    };
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: num_bigint::BigInt = num.parse().map_err(|_| bad("invalid rational"))?;
    let den: num_bigint::BigInt = den.parse().map_err(|_| bad("invalid rational"))?;
    if den.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(Rational::new(num, den))
}

/// Ordered list of variable names shared by a family of polynomials.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VarSet {
    names: Vec<String>,
}

impl VarSet {
    /// Builds a variable set, rejecting duplicates and malformed names.
    pub fn new<I, S>(names: I) -> Result<Arc<Self>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut seen = BTreeSet::new();
        for name in &names {
            if !is_identifier(name) {
                return Err(Error::Syntax {
                    position: 0,
                    message: alloc::format!("invalid variable name `{name}`"),
                });
            }
            if !seen.insert(name.as_str()) {
                return Err(Error::InvalidAlgebra(alloc::format!(
                    "duplicate variable `{name}`"
                )));
            }
        }
        Ok(Arc::new(Self { names }))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// Sparse polynomial over a named variable set.
#[derive(Clone)]
pub struct Polynomial {
    vars: Arc<VarSet>,
    terms: BTreeMap<Monomial, Rational>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.same_vars(other) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl Polynomial {
    pub fn zero(vars: &Arc<VarSet>) -> Self {
        Self {
            vars: Arc::clone(vars),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &Arc<VarSet>, c: Rational) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(), c);
        }
        p
    }

    pub fn one(vars: &Arc<VarSet>) -> Self {
        Self::constant(vars, Rational::one())
    }

    /// The coordinate function of variable `index`.
    pub fn var(vars: &Arc<VarSet>, index: usize) -> Self {
        assert!(index < vars.len(), "variable index out of range");
        let mut p = Self::zero(vars);
        p.terms
            .insert(Monomial::var(index as u32, 1), Rational::one());
        p
    }

    pub fn var_named(vars: &Arc<VarSet>, name: &str) -> Result<Self> {
        let index = vars
            .index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(Self::var(vars, index))
    }

    /// Linear form `Σ coeffs[i] * x_i`.
    pub fn linear(vars: &Arc<VarSet>, coeffs: &[(usize, Rational)]) -> Self {
        let mut p = Self::zero(vars);
        for (index, c) in coeffs {
            p.add_term(Monomial::var(*index as u32, 1), c.clone());
        }
        p
    }

    /// Builds a polynomial from raw terms, merging duplicates.
    pub fn from_terms<I>(vars: &Arc<VarSet>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Self::zero(vars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Parses text in the polynomial grammar against `vars`.
    pub fn parse(text: &str, vars: &Arc<VarSet>) -> Result<Self> {
        parse::parse(text, vars)
    }

    pub fn vars(&self) -> &Arc<VarSet> {
        &self.vars
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn same_vars(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.same_vars(other) {
            Ok(())
        } else {
            Err(Error::VarsetMismatch)
        }
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Coefficient of the monomial `m` (zero if absent).
    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::one())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = Self::zero(&self.vars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scalar_mul(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        Self {
            vars: Arc::clone(&self.vars),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut result = Self::one(&self.vars);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Partial derivative with respect to variable `index`.
    pub fn partial(&self, index: usize) -> Self {
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            if let Some((e, dm)) = m.derivative(index as u32) {
                out.add_term(dm, c * int(e as i64));
            }
        }
        out
    }

    pub fn partial_named(&self, name: &str) -> Result<Self> {
        let index = self
            .vars
            .index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(self.partial(index))
    }

    /// Evaluates at a point given in variable order.
    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.vars.len() {
            return Err(Error::DimensionMismatch {
                expected: self.vars.len(),
                found: point.len(),
            });
        }
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut value = c.clone();
            for &(v, e) in m.exponents() {
                value *= num_traits::pow(point[v as usize].clone(), e as usize);
                if value.is_zero() {
                    break;
                }
            }
            total += value;
        }
        Ok(total)
    }

    /// Evaluates at a point given as a name-to-value map.
    pub fn evaluate_map(&self, point: &BTreeMap<String, Rational>) -> Result<Rational> {
        let values = self
            .vars
            .names()
            .iter()
            .map(|name| {
                point
                    .get(name)
                    .cloned()
                    .ok_or_else(|| Error::MissingAssignment(name.clone()))
            })
            .collect::<Result<Vec<_>>>()?;
        self.evaluate(&values)
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Degree when every term has the same total degree.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// Indices of variables that occur with positive exponent.
    pub fn support(&self) -> BTreeSet<usize> {
        self.terms
            .keys()
            .flat_map(|m| m.exponents().iter().map(|&(v, _)| v as usize))
            .collect()
    }

    pub fn depends_on(&self, index: usize) -> bool {
        self.terms.keys().any(|m| m.exponent(index as u32) > 0)
    }

    /// Moves the polynomial into `target`, sending variable `i` to `map[i]`.
    pub fn embed(&self, target: &Arc<VarSet>, map: &[usize]) -> Self {
        assert_eq!(map.len(), self.vars.len(), "embedding map has wrong length");
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let renamed = Monomial::from_exponents(
                m.exponents()
                    .iter()
                    .map(|&(v, e)| (map[v as usize] as u32, e)),
            );
            out.add_term(renamed, c.clone());
        }
        out
    }

    /// Substitutes `images[i]` for variable `i`; all images share one varset.
    pub fn compose(&self, images: &[Polynomial]) -> Result<Self> {
        if images.len() != self.vars.len() {
            return Err(Error::DimensionMismatch {
                expected: self.vars.len(),
                found: images.len(),
            });
        }
        let target = match images.first() {
            Some(p) => Arc::clone(&p.vars),
            None => return Ok(self.clone()),
        };
        if images
            .iter()
            .any(|p| !Arc::ptr_eq(&p.vars, &target) && *p.vars != *target)
        {
            return Err(Error::VarsetMismatch);
        }
        let mut powers: Vec<Vec<Polynomial>> = vec![Vec::new(); images.len()];
        let mut out = Self::zero(&target);
        for (m, c) in &self.terms {
            let mut term = Self::constant(&target, c.clone());
            for &(v, e) in m.exponents() {
                let cache = &mut powers[v as usize];
                if cache.is_empty() {
                    cache.push(Self::one(&target));
                }
                while cache.len() <= e as usize {
                    let next = &cache[cache.len() - 1] * &images[v as usize];
                    cache.push(next);
                }
                term = &term * &cache[e as usize];
            }
            out = &out + &term;
        }
        Ok(out)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let magnitude = c.abs();
            if m.is_one() {
                write!(f, "{magnitude}")?;
                continue;
            }
            if !magnitude.is_one() {
                write!(f, "{magnitude}*")?;
            }
            for (j, &(v, e)) in m.exponents().iter().enumerate() {
                if j > 0 {
                    f.write_str("*")?;
                }
                f.write_str(self.vars.name(v as usize))?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl core::ops::$trait<&Polynomial> for &Polynomial {
            type Output = Polynomial;

            /// Panics when the operands live over different variable sets.
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs)
                    .expect("polynomial operands share a varset")
            }
        }

        impl core::ops::$trait<Polynomial> for Polynomial {
            type Output = Polynomial;

            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self)
                    .$checked(&rhs)
                    .expect("polynomial operands share a varset")
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl core::ops::Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            vars: Arc::clone(&self.vars),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sl2_vars() -> Arc<VarSet> {
        VarSet::new(["e", "h", "f"]).unwrap()
    }

    fn casimir() -> Polynomial {
        Polynomial::parse("h^2 + 4*e*f", &sl2_vars()).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let vars = VarSet::new(["x", "y"]).unwrap();
        let x = Polynomial::var(&vars, 0);
        let y = Polynomial::var(&vars, 1);
        let prod = &(&x + &y) * &(&x - &y);
        assert_eq!(prod, Polynomial::parse("x^2 - y^2", &vars).unwrap());
    }

    #[test]
    fn additive_inverse_and_zero_power() {
        let p = casimir();
        let minus = p.scalar_mul(&int(-1));
        assert!((&p + &minus).is_zero());
        assert_eq!(p.pow(0), Polynomial::one(p.vars()));
    }

    #[test]
    fn mismatched_varsets_are_rejected() {
        let p = casimir();
        let q = Polynomial::var(&VarSet::new(["x"]).unwrap(), 0);
        assert_eq!(p.checked_add(&q), Err(Error::VarsetMismatch));
        assert_eq!(p.checked_mul(&q), Err(Error::VarsetMismatch));
    }

    #[test]
    fn partials_of_the_casimir() {
        let p = casimir();
        let vars = sl2_vars();
        assert_eq!(
            p.partial_named("h").unwrap(),
            Polynomial::parse("2*h", &vars).unwrap()
        );
        assert_eq!(
            p.partial_named("e").unwrap(),
            Polynomial::parse("4*f", &vars).unwrap()
        );
        assert!(Polynomial::constant(&vars, int(7)).partial(0).is_zero());
        assert_eq!(
            p.partial_named("q"),
            Err(Error::UnknownVariable("q".to_string()))
        );
    }

    #[test]
    fn evaluation() {
        let p = casimir();
        assert_eq!(p.evaluate(&[int(1), int(0), int(0)]).unwrap(), int(0));
        assert_eq!(p.evaluate(&[int(1), int(1), int(1)]).unwrap(), int(5));
        let q = Polynomial::parse("3 + e*h", &sl2_vars()).unwrap();
        assert_eq!(q.evaluate(&[int(0), int(0), int(0)]).unwrap(), int(3));

        let mut point = BTreeMap::new();
        point.insert("e".to_string(), int(1));
        point.insert("h".to_string(), int(1));
        assert_eq!(
            p.evaluate_map(&point),
            Err(Error::MissingAssignment("f".to_string()))
        );
    }

    #[test]
    fn grevlex_display_order() {
        let vars = VarSet::new(["x", "y", "z"]).unwrap();
        let p = Polynomial::parse("z^2 + x*z + y^2 + x*y + x^2 + 1 + z", &vars).unwrap();
        assert_eq!(p.to_string(), "x^2 + x*y + y^2 + x*z + z^2 + z + 1");
        let q = Polynomial::parse("-1/2*x - 3", &vars).unwrap();
        assert_eq!(q.to_string(), "-1/2*x - 3");
    }

    #[test]
    fn homogeneity_and_support() {
        let p = casimir();
        assert_eq!(p.homogeneous_degree(), Some(2));
        assert_eq!(p.support().into_iter().collect::<Vec<_>>(), vec![0, 1, 2]);
        let q = Polynomial::parse("h + e*f", &sl2_vars()).unwrap();
        assert!(!q.is_homogeneous());
        assert!(Polynomial::zero(&sl2_vars()).is_homogeneous());
    }

    #[test]
    fn composition_with_a_parametrization() {
        // The rank-one nilpotent cone (s^2, 2st, -t^2) kills the Casimir.
        let params = VarSet::new(["s", "t"]).unwrap();
        let images = [
            Polynomial::parse("s^2", &params).unwrap(),
            Polynomial::parse("2*s*t", &params).unwrap(),
            Polynomial::parse("-t^2", &params).unwrap(),
        ];
        assert!(casimir().compose(&images).unwrap().is_zero());
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(
            parse_rational("6/4").unwrap(),
            Rational::new(3.into(), 2.into())
        );
        assert_eq!(parse_rational("-5").unwrap(), int(-5));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
