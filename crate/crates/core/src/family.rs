//! Symmetric invariants of `q<m>` from basic invariants of `q`.
//!
//! A homogeneous `f ∈ k[q*]` is expanded along
//! `f(ξ_m + εξ_{m-1} + ⋯ + ε^m ξ_0) = Σ_j F^j(ξ) ε^j` with `ε^{m+1} = 0`.
//! When `f` is invariant, every coefficient `F^j` is a symmetric invariant
//! of `q<m>`; `F^j` only involves grades `m-j, …, m`, and the lowest graded
//! piece of its differential is `(df)_{ξ_m}` sitting in grade `m-j`.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lie::{self, DualPoint, Gradients, InvariantSet, LieAlgebra};
use crate::linalg::Matrix;
use crate::poly::{jet_substitute, Jet, Polynomial, Rational};
use crate::takiff::{TakiffDualPoint, TakiffGrading};

fn grading_of(algebra: &LieAlgebra) -> Result<&TakiffGrading> {
    algebra
        .grading()
        .ok_or_else(|| Error::MissingGrading(algebra.label().to_string()))
}

/// Coefficients `F^0, …, F^m` of the ε-expansion of `f` on `q<m>*`.
pub fn expand_invariant(takiff: &LieAlgebra, f: &Polynomial) -> Result<Vec<Polynomial>> {
    let grading = grading_of(takiff)?;
    let base = grading.base();
    if **f.vars() != **base.vars() {
        return Err(Error::VarsetMismatch);
    }
    if !f.is_zero() && f.homogeneous_degree().is_none() {
        return Err(Error::NotHomogeneous(f.to_string()));
    }
    let m = grading.depth();
    let target = takiff.vars();
    // b ↦ b@m + ε·b@(m-1) + ⋯ + ε^m·b@0
    let subst = (0..base.dim())
        .map(|b| {
            Jet::new(
                (0..=m)
                    .map(|j| Polynomial::var(target, grading.index(b, m - j)))
                    .collect(),
            )
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(jet_substitute(f, &subst, m)?.into_coeffs())
}

/// The table `{F_i^j}` attached to basic invariants `f_1, …, f_l`.
#[derive(Debug, Clone, PartialEq)]
pub struct InvariantFamily {
    depth: usize,
    base: InvariantSet,
    table: Vec<Vec<Polynomial>>,
}

impl InvariantFamily {
    /// Truncation depth `m`.
    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn base(&self) -> &InvariantSet {
        &self.base
    }

    /// Number of base invariants `l`.
    pub fn rank(&self) -> usize {
        self.table.len()
    }

    pub fn len(&self) -> usize {
        self.rank() * (self.depth + 1)
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    /// `F_i^j` with `i` counted from zero.
    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.table[i][j]
    }

    pub fn row(&self, i: usize) -> &[Polynomial] {
        &self.table[i]
    }

    /// `(i, j, F_i^j)` in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Polynomial)> {
        self.table
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().enumerate().map(move |(j, p)| (i, j, p)))
    }

    /// Polynomials ordered `F_1^0, …, F_l^0, F_1^1, …, F_l^m`.
    pub fn polys_by_grade(&self) -> Vec<Polynomial> {
        (0..=self.depth)
            .flat_map(|j| self.table.iter().map(move |row| row[j].clone()))
            .collect()
    }

    /// The family as basic invariants of `q<m>`, ready for another Takiff step.
    pub fn to_invariant_set(&self, takiff: &LieAlgebra) -> Result<InvariantSet> {
        let mut set = InvariantSet::new(takiff, self.polys_by_grade())?;
        set.claimed_index = self.base.claimed_index.map(|l| l * (self.depth + 1));
        Ok(set)
    }

    pub fn degree_sum(&self) -> u32 {
        self.entries()
            .map(|(_, _, p)| p.total_degree().unwrap_or(0))
            .sum()
    }
}

/// Expands every base invariant.
pub fn build_family(takiff: &LieAlgebra, fs: &InvariantSet) -> Result<InvariantFamily> {
    let depth = grading_of(takiff)?.depth();
    let table = fs
        .polys()
        .iter()
        .map(|f| expand_invariant(takiff, f))
        .collect::<Result<Vec<_>>>()?;
    Ok(InvariantFamily {
        depth,
        base: fs.clone(),
        table,
    })
}

/// Lowest nonzero graded piece of a differential `(dF)_ξ ∈ q<m>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LowestComponent {
    Zero,
    Grade { grade: usize, vector: Vec<Rational> },
}

pub fn lowest_component(
    takiff: &LieAlgebra,
    f: &Polynomial,
    xi: &TakiffDualPoint,
) -> Result<LowestComponent> {
    let grading = grading_of(takiff)?;
    let diff = lie::differential_at(f, &xi.to_flat())?;
    for grade in 0..=grading.depth() {
        let block = &diff[grading.grade_range(grade)];
        if block.iter().any(|x| !x.is_zero()) {
            return Ok(LowestComponent::Grade {
                grade,
                vector: block.to_vec(),
            });
        }
    }
    Ok(LowestComponent::Zero)
}

/// Jacobian of the whole family at one point, read by grade blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobianProfile {
    /// `block_ranks[j][k]`: rank of the rows `F_·^j` restricted to grade `k`.
    pub block_ranks: Vec<Vec<usize>>,
    pub total_rank: usize,
    /// Blocks strictly below grade `m - j` vanish for every `j`.
    pub triangular: bool,
    /// The grade-`(m-j)` block of `dF_i^j` equals `(df_i)_{ξ_m}`.
    pub diagonal_matches: bool,
    /// `ξ_m ∈ Ω` for the base invariants.
    pub base_omega: bool,
    /// `(m+1)·l`.
    pub expected_rank: usize,
}

impl JacobianProfile {
    pub fn full_rank(&self) -> bool {
        self.total_rank == self.expected_rank
    }
}

/// Differential data of a family, reusable across many points.
#[derive(Debug, Clone)]
pub struct FamilyJacobian {
    depth: usize,
    rank: usize,
    grading: TakiffGrading,
    gradients: Gradients,
    base_gradients: Gradients,
}

impl FamilyJacobian {
    pub fn new(takiff: &LieAlgebra, family: &InvariantFamily) -> Result<Self> {
        let grading = grading_of(takiff)?.clone();
        Ok(Self {
            depth: family.depth(),
            rank: family.rank(),
            gradients: Gradients::new(&family.polys_by_grade()),
            base_gradients: family.base().gradients(),
            grading,
        })
    }

    pub fn matrix(&self, xi: &TakiffDualPoint) -> Matrix {
        self.gradients.at(xi.to_flat().coords())
    }

    pub fn profile(&self, xi: &TakiffDualPoint) -> JacobianProfile {
        let (l, m) = (self.rank, self.depth);
        let jac = self.matrix(xi);
        let top = xi.top().coords();
        let base_rows: Vec<Vec<Rational>> =
            (0..l).map(|i| self.base_gradients.row(i, top)).collect();
        let mut block_ranks = alloc::vec![alloc::vec![0; m + 1]; m + 1];
        let mut triangular = true;
        let mut diagonal_matches = true;
        for j in 0..=m {
            let rows = j * l..(j + 1) * l;
            for k in 0..=m {
                let block = jac.block(rows.clone(), self.grading.grade_range(k));
                block_ranks[j][k] = if l == 0 { 0 } else { block.rank() };
                if k < m - j && !block.is_zero() {
                    triangular = false;
                }
                if k == m - j {
                    for (r, base_row) in base_rows.iter().enumerate() {
                        if block.row(r) != base_row.as_slice() {
                            diagonal_matches = false;
                        }
                    }
                }
            }
        }
        let total_rank = if l == 0 { 0 } else { jac.rank() };
        let base_omega = l == 0 || self.base_gradients.rank_at(top) == l;
        JacobianProfile {
            block_ranks,
            total_rank,
            triangular,
            diagonal_matches,
            base_omega,
            expected_rank: (m + 1) * l,
        }
    }
}

/// Blockwise Jacobian of all `F_i^j` at `ξ`.
pub fn jacobian_profile(
    takiff: &LieAlgebra,
    family: &InvariantFamily,
    xi: &TakiffDualPoint,
) -> Result<JacobianProfile> {
    Ok(FamilyJacobian::new(takiff, family)?.profile(xi))
}

/// Entries `F_i^j` that depend on a variable of grade `< m - j`, with the
/// first such variable.
pub fn triangularity_violations(
    takiff: &LieAlgebra,
    family: &InvariantFamily,
) -> Result<Vec<(usize, usize, usize)>> {
    let grading = grading_of(takiff)?;
    let m = family.depth();
    let mut out = Vec::new();
    for (i, j, f) in family.entries() {
        if let Some(v) = f
            .support()
            .into_iter()
            .find(|&v| grading.grade_of(v) < m - j)
        {
            out.push((i, j, v));
        }
    }
    Ok(out)
}

/// Entries whose degree differs from the base invariant's degree.
pub fn degree_violations(family: &InvariantFamily) -> Vec<(usize, usize, Option<u32>)> {
    family
        .entries()
        .filter_map(|(i, j, f)| {
            let expected = family.base().degrees()[i];
            let actual = f.homogeneous_degree();
            (!f.is_zero() && actual != Some(expected)).then_some((i, j, actual))
        })
        .collect()
}

/// Generators of the invariants of the nilpotent ideal: the grade-`m`
/// coordinates together with `F_i^j` for `j ≥ 1`.
pub fn unipotent_generators(
    takiff: &LieAlgebra,
    family: &InvariantFamily,
) -> Result<Vec<(alloc::string::String, Polynomial)>> {
    let grading = grading_of(takiff)?;
    let m = grading.depth();
    let mut gens: Vec<(alloc::string::String, Polynomial)> = grading
        .grade_range(m)
        .map(|v| (takiff.basis()[v].clone(), Polynomial::var(takiff.vars(), v)))
        .collect();
    for (i, j, f) in family.entries() {
        if j >= 1 {
            gens.push((format!("F_{}^{}", i + 1, j), f.clone()));
        }
    }
    Ok(gens)
}

/// First pair (generator, ideal element) whose Poisson bracket is nonzero.
pub fn ideal_invariance_witness(
    takiff: &LieAlgebra,
    family: &InvariantFamily,
) -> Result<Option<(alloc::string::String, usize, Polynomial)>> {
    let start = grading_of(takiff)?.base_dim();
    for (name, g) in unipotent_generators(takiff, family)? {
        for u in start..takiff.dim() {
            let bracket = lie::bracket_with_basis(takiff, &g, u)?;
            if !bracket.is_zero() {
                return Ok(Some((name, u, bracket)));
            }
        }
    }
    Ok(None)
}

/// Splits a flat point of `q<m>*` and reports `ξ_m`.
pub fn top_component(takiff: &LieAlgebra, xi: &DualPoint) -> Result<DualPoint> {
    let grading = grading_of(takiff)?;
    Ok(TakiffDualPoint::from_flat(grading, xi).top().clone())
}
