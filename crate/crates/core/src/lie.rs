//! Lie algebras given by structure constants, the Kirillov form, the
//! index, and the Lie–Poisson bracket on `S(q)`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::poly::{Polynomial, Rational, VarSet};
use crate::report::{Check, Report, Status};
use crate::sample;
use crate::takiff::TakiffGrading;

/// Sparse vector in a basis: `(basis index, coefficient)` sorted by index.
pub type SparseVec = Vec<(usize, Rational)>;

/// Finite-dimensional Lie algebra with exact structure constants.
///
/// Only brackets `[b_i, b_j]` with `i < j` are stored; the full
/// antisymmetric table is derived once at construction.
#[derive(Debug, Clone)]
pub struct LieAlgebra {
    label: String,
    vars: Arc<VarSet>,
    brackets: BTreeMap<(usize, usize), SparseVec>,
    table: Vec<SparseVec>,
    grading: Option<TakiffGrading>,
}

impl PartialEq for LieAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars && self.brackets == other.brackets
    }
}

fn normalize(coeffs: impl IntoIterator<Item = (usize, Rational)>) -> SparseVec {
    let mut merged: BTreeMap<usize, Rational> = BTreeMap::new();
    for (k, c) in coeffs {
        *merged.entry(k).or_insert_with(Rational::zero) += c;
    }
    merged.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

fn sparse_to_string(vars: &VarSet, v: &[(usize, Rational)]) -> String {
    if v.is_empty() {
        return "0".to_string();
    }
    let p = Polynomial::linear(&Arc::new(vars.clone()), v);
    p.to_string()
}

impl LieAlgebra {
    /// Builds an algebra from brackets `[b_i, b_j] = Σ c_k b_k`.
    ///
    /// Pairs with `i > j` are stored as `-[b_j, b_i]`; `i == j`, repeated
    /// pairs and out-of-range indices are rejected.
    pub fn new<I>(label: impl Into<String>, basis: Vec<String>, brackets: I) -> Result<Self>
    where
        I: IntoIterator<Item = ((usize, usize), SparseVec)>,
    {
        let vars = VarSet::new(basis)?;
        let n = vars.len();
        let mut stored: BTreeMap<(usize, usize), SparseVec> = BTreeMap::new();
        for ((i, j), coeffs) in brackets {
            if i >= n || j >= n {
                return Err(Error::InvalidAlgebra(format!(
                    "bracket pair ({i}, {j}) out of range for dimension {n}"
                )));
            }
            if i == j {
                return Err(Error::InvalidAlgebra(format!(
                    "bracket pair ({i}, {i}) must vanish by antisymmetry"
                )));
            }
            if let Some(&(k, _)) = coeffs.iter().find(|(k, _)| *k >= n) {
                return Err(Error::InvalidAlgebra(format!(
                    "structure constant index {k} out of range for dimension {n}"
                )));
            }
            let (key, coeffs) = if i < j {
                ((i, j), normalize(coeffs))
            } else {
                ((j, i), normalize(coeffs.into_iter().map(|(k, c)| (k, -c))))
            };
            if stored.contains_key(&key) {
                return Err(Error::InvalidAlgebra(format!(
                    "bracket pair ({}, {}) given twice",
                    key.0, key.1
                )));
            }
            if !coeffs.is_empty() {
                stored.insert(key, coeffs);
            }
        }
        let mut table = alloc::vec![SparseVec::new(); n * n];
        for (&(i, j), coeffs) in &stored {
            table[i * n + j] = coeffs.clone();
            table[j * n + i] = coeffs.iter().map(|(k, c)| (*k, -c.clone())).collect();
        }
        Ok(Self {
            label: label.into(),
            vars,
            brackets: stored,
            table,
            grading: None,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.vars.len()
    }

    pub fn basis(&self) -> &[String] {
        self.vars.names()
    }

    pub fn vars(&self) -> &Arc<VarSet> {
        &self.vars
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.index_of(name)
    }

    /// `[b_i, b_j]` as a sparse vector.
    pub fn bracket(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.table[i * self.dim() + j]
    }

    /// Stored brackets `[b_i, b_j]`, `i < j`, nonzero only.
    pub fn brackets(&self) -> impl Iterator<Item = (&(usize, usize), &SparseVec)> {
        self.brackets.iter()
    }

    pub fn grading(&self) -> Option<&TakiffGrading> {
        self.grading.as_ref()
    }

    pub(crate) fn set_grading(&mut self, grading: TakiffGrading) {
        self.grading = Some(grading);
    }

    /// Bracket of two elements given by coordinate vectors.
    pub fn bracket_vectors(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let n = self.dim();
        let mut out = alloc::vec![Rational::zero(); n];
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                for (k, c) in self.bracket(i, j) {
                    out[*k] += xi * yj * c;
                }
            }
        }
        out
    }

    fn bracket_sparse(&self, x: &[(usize, Rational)], j: usize) -> SparseVec {
        normalize(
            x.iter()
                .flat_map(|(i, xi)| self.bracket(*i, j).iter().map(move |(k, c)| (*k, xi * c))),
        )
    }

    /// Nonzero Jacobiator values `[[b_i,b_j],b_k] + [[b_j,b_k],b_i] + [[b_k,b_i],b_j]`
    /// over basis triples `i < j < k`.
    pub fn jacobi_residuals(&self) -> Vec<((usize, usize, usize), SparseVec)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let terms = self
                        .bracket_sparse(self.bracket(i, j), k)
                        .into_iter()
                        .chain(self.bracket_sparse(self.bracket(j, k), i))
                        .chain(self.bracket_sparse(self.bracket(k, i), j));
                    let residual = normalize(terms);
                    if !residual.is_empty() {
                        out.push(((i, j, k), residual));
                    }
                }
            }
        }
        out
    }

    pub fn sparse_to_string(&self, v: &[(usize, Rational)]) -> String {
        sparse_to_string(&self.vars, v)
    }
}

/// Checks the Jacobi identity on every basis triple.
pub fn validate(algebra: &LieAlgebra) -> Report {
    let mut report = Report::new(format!("validate {}", algebra.label()));
    let n = algebra.dim();
    let triples = n * n.saturating_sub(1) * n.saturating_sub(2) / 6;
    let residuals = algebra.jacobi_residuals();
    let mut check = Check::new(
        "jacobi",
        "plumbing",
        Status::from_bool(residuals.is_empty()),
    )
    .with("algebra", algebra.label())
    .with("triples_checked", triples)
    .with("failing_triples", residuals.len());
    if let Some(((i, j, k), residual)) = residuals.first() {
        let b = algebra.basis();
        check = check
            .with("triple", format!("({}, {}, {})", b[*i], b[*j], b[*k]))
            .with("residual", algebra.sparse_to_string(residual));
    }
    report.push(check);
    report
}

/// Point `ξ ∈ q*`, stored as its values on the basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualPoint {
    coords: Vec<Rational>,
}

impl DualPoint {
    pub fn new(coords: Vec<Rational>) -> Self {
        Self { coords }
    }

    pub fn zero(n: usize) -> Self {
        Self::new(alloc::vec![Rational::zero(); n])
    }

    /// Builds a point from a complete name-to-value assignment.
    pub fn from_map(algebra: &LieAlgebra, values: &BTreeMap<String, Rational>) -> Result<Self> {
        for name in values.keys() {
            if algebra.index_of(name).is_none() {
                return Err(Error::UnknownVariable(name.clone()));
            }
        }
        let coords = algebra
            .basis()
            .iter()
            .map(|name| {
                values
                    .get(name)
                    .cloned()
                    .ok_or_else(|| Error::MissingAssignment(name.clone()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { coords })
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, t: &Rational) -> Self {
        Self::new(self.coords.iter().map(|x| x * t).collect())
    }
}

impl core::fmt::Display for DualPoint {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

/// Kirillov form `B(ξ)_{ij} = ξ([b_i, b_j])`.
pub fn kirillov_matrix(algebra: &LieAlgebra, xi: &DualPoint) -> Matrix {
    let n = algebra.dim();
    assert_eq!(xi.dim(), n, "dual point has wrong dimension");
    let mut b = Matrix::zeros(n, n);
    for (&(i, j), coeffs) in algebra.brackets() {
        let value = coeffs
            .iter()
            .fold(Rational::zero(), |acc, (k, c)| acc + c * &xi.coords[*k]);
        if !value.is_zero() {
            b.set(j, i, -value.clone());
            b.set(i, j, value);
        }
    }
    b
}

/// Dimension of the coadjoint orbit through `ξ`.
pub fn orbit_dim(algebra: &LieAlgebra, xi: &DualPoint) -> usize {
    kirillov_matrix(algebra, xi).rank()
}

/// Largest Kirillov rank seen over `trials` seeded integer points.
pub fn generic_rank(algebra: &LieAlgebra, trials: usize, seed: u64) -> usize {
    (0..trials.max(1) as u64)
        .map(|t| {
            let mut rng = sample::rng(sample::trial_seed(seed, t));
            let xi = DualPoint::new(sample::generic_point(&mut rng, algebra.dim()));
            orbit_dim(algebra, &xi)
        })
        .max()
        .unwrap_or(0)
}

/// Randomized index: `dim q` minus the largest Kirillov rank over seeded
/// points with integer coordinates in `[-1000, 1000]`.
pub fn index(algebra: &LieAlgebra, trials: usize, seed: u64) -> usize {
    algebra.dim() - generic_rank(algebra, trials, seed)
}

/// `b(q) = (dim q + ind q) / 2`.
pub fn magic_number(algebra: &LieAlgebra, trials: usize, seed: u64) -> Result<usize> {
    magic_from_index(algebra.dim(), index(algebra, trials, seed))
}

pub fn magic_from_index(dim: usize, index: usize) -> Result<usize> {
    if (dim + index) % 2 == 1 {
        return Err(Error::OddMagicNumber { dim, index });
    }
    Ok((dim + index) / 2)
}

fn check_vars(algebra: &LieAlgebra, f: &Polynomial) -> Result<()> {
    if **f.vars() == **algebra.vars() {
        Ok(())
    } else {
        Err(Error::VarsetMismatch)
    }
}

/// Lie–Poisson bracket on `S(q)`, extending `{x, y} = [x, y]` on `q`.
pub fn poisson_bracket(algebra: &LieAlgebra, f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    check_vars(algebra, f)?;
    check_vars(algebra, g)?;
    let vars = f.vars();
    let n = algebra.dim();
    let df: Vec<Polynomial> = (0..n).map(|i| f.partial(i)).collect();
    let dg: Vec<Polynomial> = (0..n).map(|i| g.partial(i)).collect();
    let mut out = Polynomial::zero(vars);
    for (&(i, j), coeffs) in algebra.brackets() {
        let cross = &(&df[i] * &dg[j]) - &(&df[j] * &dg[i]);
        if cross.is_zero() {
            continue;
        }
        out = &out + &(&cross * &Polynomial::linear(vars, coeffs));
    }
    Ok(out)
}

/// `{f, b_j} = Σ_i ∂f/∂b_i · [b_i, b_j]`.
pub fn bracket_with_basis(algebra: &LieAlgebra, f: &Polynomial, j: usize) -> Result<Polynomial> {
    check_vars(algebra, f)?;
    let vars = f.vars();
    let mut out = Polynomial::zero(vars);
    for i in f.support() {
        let c = algebra.bracket(i, j);
        if c.is_empty() {
            continue;
        }
        out = &out + &(&f.partial(i) * &Polynomial::linear(vars, c));
    }
    Ok(out)
}

/// First basis element `b` with `{f, b} ≠ 0`, with the offending bracket.
pub fn invariance_witness(
    algebra: &LieAlgebra,
    f: &Polynomial,
) -> Result<Option<(usize, Polynomial)>> {
    for j in 0..algebra.dim() {
        let bracket = bracket_with_basis(algebra, f, j)?;
        if !bracket.is_zero() {
            return Ok(Some((j, bracket)));
        }
    }
    Ok(None)
}

/// Whether `f` Poisson-commutes with all of `q`.
pub fn is_symmetric_invariant(algebra: &LieAlgebra, f: &Polynomial) -> Result<bool> {
    Ok(invariance_witness(algebra, f)?.is_none())
}

/// `(df)_ξ` as a coefficient vector in `q`.
pub fn differential_at(f: &Polynomial, xi: &DualPoint) -> Result<Vec<Rational>> {
    (0..f.vars().len())
        .map(|k| f.partial(k).evaluate(xi.coords()))
        .collect()
}

/// Precomputed partial derivatives of a list of polynomials.
#[derive(Debug, Clone)]
pub struct Gradients {
    nvars: usize,
    partials: Vec<Vec<(usize, Polynomial)>>,
}

impl Gradients {
    pub fn new(polys: &[Polynomial]) -> Self {
        let nvars = polys.first().map_or(0, |p| p.vars().len());
        let partials = polys
            .iter()
            .map(|p| p.support().into_iter().map(|k| (k, p.partial(k))).collect())
            .collect();
        Self { nvars, partials }
    }

    pub fn len(&self) -> usize {
        self.partials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.partials.is_empty()
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Differential of polynomial `i` at `point`.
    pub fn row(&self, i: usize, point: &[Rational]) -> Vec<Rational> {
        let mut row = alloc::vec![Rational::zero(); self.nvars];
        for (k, p) in &self.partials[i] {
            row[*k] = p
                .evaluate(point)
                .expect("gradient point has full dimension");
        }
        row
    }

    /// Jacobian matrix at `point`, one row per polynomial.
    pub fn at(&self, point: &[Rational]) -> Matrix {
        Matrix::from_rows(
            (0..self.len()).map(|i| self.row(i, point)).collect(),
            self.nvars,
        )
    }

    /// Rank of the differentials at `point`.
    pub fn rank_at(&self, point: &[Rational]) -> usize {
        if self.is_empty() {
            return 0;
        }
        self.at(point).rank()
    }
}

/// Homogeneous polynomials `f_1, …, f_l` on `q*` presented as basic invariants.
#[derive(Debug, Clone, PartialEq)]
pub struct InvariantSet {
    polys: Vec<Polynomial>,
    degrees: Vec<u32>,
    pub claimed_index: Option<usize>,
}

impl InvariantSet {
    /// Rejects polynomials over a foreign varset and non-homogeneous input.
    pub fn new(algebra: &LieAlgebra, polys: Vec<Polynomial>) -> Result<Self> {
        let mut degrees = Vec::with_capacity(polys.len());
        for p in &polys {
            check_vars(algebra, p)?;
            let degree = p
                .homogeneous_degree()
                .ok_or_else(|| Error::NotHomogeneous(p.to_string()))?;
            degrees.push(degree);
        }
        Ok(Self {
            polys,
            degrees,
            claimed_index: None,
        })
    }

    /// Parses each string over the algebra's basis.
    pub fn parse(algebra: &LieAlgebra, texts: &[&str]) -> Result<Self> {
        let polys = texts
            .iter()
            .map(|t| Polynomial::parse(t, algebra.vars()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(algebra, polys)
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn degree_sum(&self) -> u32 {
        self.degrees.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn gradients(&self) -> Gradients {
        Gradients::new(&self.polys)
    }
}

/// Rank of the `l × n` matrix of differentials at `ξ`.
pub fn differential_rank(fs: &InvariantSet, xi: &DualPoint) -> usize {
    fs.gradients().rank_at(xi.coords())
}

/// `ξ ∈ Ω`: the differentials of all basic invariants are independent at `ξ`.
pub fn omega_test(fs: &InvariantSet, xi: &DualPoint) -> bool {
    differential_rank(fs, xi) == fs.len()
}

/// `ξ` is regular when its orbit has the generic dimension `dim q - ind q`.
pub fn is_regular(algebra: &LieAlgebra, xi: &DualPoint, known_index: usize) -> bool {
    orbit_dim(algebra, xi) + known_index == algebra.dim()
}

/// `ad*(x)ξ` through the structure constants: `<ad*(x)ξ, y> = -<ξ, [x, y]>`.
pub fn coadjoint_action(algebra: &LieAlgebra, x: &[Rational], xi: &DualPoint) -> DualPoint {
    let b = kirillov_matrix(algebra, xi);
    let n = algebra.dim();
    let coords = (0..n)
        .map(|j| {
            -(0..n)
                .filter(|&i| !x[i].is_zero())
                .fold(Rational::zero(), |acc, i| acc + &x[i] * b.get(i, j))
        })
        .collect();
    DualPoint::new(coords)
}

/// Dot product helper re-exported for pairing `<x, ξ>`.
pub fn pairing(x: &[Rational], xi: &DualPoint) -> Rational {
    linalg::dot(x, xi.coords())
}
