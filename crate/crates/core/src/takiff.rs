//! Takiff algebras `q<m> = q ⊗ k[T]/(T^{m+1})` and truncated multi-current
//! algebras obtained by iterating the construction.
//!
//! The basis of `q<m>` is grade-major: `b@0` for every base element `b`,
//! then `b@1`, and so on, so the element `b@j` sits at index `j·n + b`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lie::{self, DualPoint, LieAlgebra, SparseVec};
use crate::poly::Rational;

/// Grading metadata attached to `q<m>`.
#[derive(Debug, Clone)]
pub struct TakiffGrading {
    base: Arc<LieAlgebra>,
    depth: usize,
}

impl TakiffGrading {
    pub fn base(&self) -> &LieAlgebra {
        &self.base
    }

    pub fn base_dim(&self) -> usize {
        self.base.dim()
    }

    /// Truncation depth `m`.
    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn grade_of(&self, index: usize) -> usize {
        index / self.base_dim()
    }

    pub fn base_index_of(&self, index: usize) -> usize {
        index % self.base_dim()
    }

    pub fn base_name_of(&self, index: usize) -> &str {
        &self.base.basis()[self.base_index_of(index)]
    }

    /// Index of `b@grade`.
    pub fn index(&self, base_index: usize, grade: usize) -> usize {
        grade * self.base_dim() + base_index
    }

    pub fn grade_range(&self, grade: usize) -> core::ops::Range<usize> {
        let n = self.base_dim();
        grade * n..(grade + 1) * n
    }
}

pub fn graded_name(base: &str, grade: usize) -> String {
    format!("{base}@{grade}")
}

/// Display form of a nested name: `e@0@1` becomes `e@[0,1]`.
pub fn flatten_name(name: &str) -> String {
    let mut parts = name.split('@');
    let head = parts.next().unwrap_or_default();
    let grades: Vec<&str> = parts.collect();
    if grades.is_empty() {
        return head.to_string();
    }
    format!("{head}@[{}]", grades.join(","))
}

/// Builds `q<m>`: `[a@i, b@j] = [a, b]@(i+j)` when `i + j ≤ m`, else zero.
pub fn takiff(base: &LieAlgebra, m: usize) -> Result<LieAlgebra> {
    if m < 1 {
        return Err(Error::DepthTooSmall(m));
    }
    let n = base.dim();
    let names: Vec<String> = (0..=m)
        .flat_map(|j| base.basis().iter().map(move |b| graded_name(b, j)))
        .collect();
    let mut brackets: Vec<((usize, usize), SparseVec)> = Vec::new();
    for (&(a, b), coeffs) in base.brackets() {
        for i in 0..=m {
            for j in 0..=m - i {
                let lifted: SparseVec = coeffs
                    .iter()
                    .map(|(k, c)| ((i + j) * n + k, c.clone()))
                    .collect();
                let (x, y) = (i * n + a, j * n + b);
                brackets.push(((x, y), lifted));
            }
        }
    }
    // Iterating merges depths: sl2<1> then <1> gives sl2<1,1>.
    let label = match base.label().strip_suffix('>') {
        Some(head) if base.grading().is_some() => format!("{head},{m}>"),
        _ => format!("{}<{m}>", base.label()),
    };
    let mut algebra = LieAlgebra::new(label, names, brackets)?;
    algebra.set_grading(TakiffGrading {
        base: Arc::new(base.clone()),
        depth: m,
    });
    Ok(algebra)
}

/// `q<m_1, …, m_r>` as the iteration `((q<m_1>)<m_2>)…<m_r>`.
///
/// Names nest as `b@j1@j2…`; the result carries the grading of the last
/// step only.
pub fn multi_current(base: &LieAlgebra, degrees: &[usize]) -> Result<LieAlgebra> {
    let (first, rest) = degrees.split_first().ok_or(Error::EmptyDegreeList)?;
    let mut algebra = takiff(base, *first)?;
    for &m in rest {
        algebra = takiff(&algebra, m)?;
    }
    let list: Vec<String> = degrees.iter().map(|d| d.to_string()).collect();
    Ok(algebra.with_label(format!("{}<{}>", base.label(), list.join(","))))
}

fn grading_of(algebra: &LieAlgebra) -> Result<&TakiffGrading> {
    algebra
        .grading()
        .ok_or_else(|| Error::MissingGrading(algebra.label().to_string()))
}

/// Basis of the ad-nilpotent ideal `⊕_{j≥1} q_[j]`.
///
/// Closure under bracketing with all of `q<m>` is verified before returning.
pub fn nilpotent_ideal(algebra: &LieAlgebra) -> Result<Vec<String>> {
    let grading = grading_of(algebra)?;
    let start = grading.base_dim();
    let members = start..algebra.dim();
    for x in 0..algebra.dim() {
        for y in members.clone() {
            if let Some((k, _)) = algebra.bracket(x, y).iter().find(|(k, _)| *k < start) {
                return Err(Error::InvalidAlgebra(format!(
                    "[{}, {}] leaves the ideal through {}",
                    algebra.basis()[x],
                    algebra.basis()[y],
                    algebra.basis()[*k]
                )));
            }
        }
    }
    Ok(algebra.basis()[start..].to_vec())
}

/// Point `(ξ_0, …, ξ_m)` of `q<m>*`, where `ξ_j` pairs with `q_[j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TakiffDualPoint {
    components: Vec<DualPoint>,
}

impl TakiffDualPoint {
    pub fn new(components: Vec<DualPoint>) -> Result<Self> {
        let Some(first) = components.first() else {
            return Err(Error::Precondition(
                "a Takiff dual point needs at least one component".into(),
            ));
        };
        let n = first.dim();
        if let Some(bad) = components.iter().find(|c| c.dim() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: bad.dim(),
            });
        }
        Ok(Self { components })
    }

    /// Splits a flat point of `q<m>*` into its graded components.
    pub fn from_flat(grading: &TakiffGrading, xi: &DualPoint) -> Self {
        let n = grading.base_dim();
        let components = (0..=grading.depth())
            .map(|j| DualPoint::new(xi.coords()[j * n..(j + 1) * n].to_vec()))
            .collect();
        Self { components }
    }

    pub fn to_flat(&self) -> DualPoint {
        DualPoint::new(
            self.components
                .iter()
                .flat_map(|c| c.coords().iter().cloned())
                .collect(),
        )
    }

    pub fn depth(&self) -> usize {
        self.components.len() - 1
    }

    pub fn component(&self, j: usize) -> &DualPoint {
        &self.components[j]
    }

    pub fn components(&self) -> &[DualPoint] {
        &self.components
    }

    /// The top component `ξ_m`.
    pub fn top(&self) -> &DualPoint {
        &self.components[self.depth()]
    }
}

/// `ad*(x)ξ` on `q<m>*` through the ε-expansion: with `x = Σ x_i ε^i` and
/// `ξ_ε = Σ ξ_j ε^{m-j}`, the grade-`k` component of the result is
/// `Σ_{i+k≤m} ad*_q(x_i) ξ_{i+k}`.
pub fn coadjoint_apply(
    algebra: &LieAlgebra,
    x: &[Rational],
    xi: &TakiffDualPoint,
) -> Result<TakiffDualPoint> {
    let grading = grading_of(algebra)?;
    let (n, m) = (grading.base_dim(), grading.depth());
    if x.len() != algebra.dim() {
        return Err(Error::DimensionMismatch {
            expected: algebra.dim(),
            found: x.len(),
        });
    }
    if xi.depth() != m || xi.top().dim() != n {
        return Err(Error::DimensionMismatch {
            expected: algebra.dim(),
            found: xi.to_flat().dim(),
        });
    }
    let base = grading.base();
    let components = (0..=m)
        .map(|k| {
            let mut acc = alloc::vec![Rational::zero(); n];
            for i in 0..=m - k {
                let xi_part = &x[i * n..(i + 1) * n];
                if xi_part.iter().all(Zero::is_zero) {
                    continue;
                }
                let moved = lie::coadjoint_action(base, xi_part, xi.component(i + k));
                for (a, b) in acc.iter_mut().zip(moved.coords()) {
                    *a += b;
                }
            }
            DualPoint::new(acc)
        })
        .collect();
    TakiffDualPoint::new(components)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::int;
    use crate::report::Status;

    fn sv(pairs: &[(usize, i64)]) -> SparseVec {
        pairs.iter().map(|&(k, c)| (k, int(c))).collect()
    }

    fn names(ns: &[&str]) -> Vec<String> {
        ns.iter().map(|s| s.to_string()).collect()
    }

    fn sl2() -> LieAlgebra {
        LieAlgebra::new(
            "sl2",
            names(&["e", "h", "f"]),
            [
                ((0, 1), sv(&[(0, -2)])),
                ((0, 2), sv(&[(1, 1)])),
                ((1, 2), sv(&[(2, -2)])),
            ],
        )
        .unwrap()
    }

    fn heis1() -> LieAlgebra {
        LieAlgebra::new("heis1", names(&["x", "y", "z"]), [((0, 1), sv(&[(2, 1)]))]).unwrap()
    }

    fn named_bracket(a: &LieAlgebra, x: &str, y: &str) -> String {
        let (i, j) = (a.index_of(x).unwrap(), a.index_of(y).unwrap());
        a.sparse_to_string(a.bracket(i, j))
    }

    #[test]
    fn graded_brackets_of_sl2() {
        let t = takiff(&sl2(), 1).unwrap();
        assert_eq!(named_bracket(&t, "h@0", "e@1"), "2*e@1");
        assert_eq!(named_bracket(&t, "e@1", "f@1"), "0");
        assert_eq!(named_bracket(&t, "e@0", "f@1"), "h@1");
        assert_eq!(t.label(), "sl2<1>");
    }

    #[test]
    fn graded_brackets_of_heisenberg() {
        let t = takiff(&heis1(), 2).unwrap();
        assert_eq!(named_bracket(&t, "x@1", "y@1"), "z@2");
        assert_eq!(named_bracket(&t, "x@2", "y@1"), "0");
        assert_eq!(t.dim(), 9);
    }

    #[test]
    fn depth_zero_is_rejected() {
        assert_eq!(takiff(&sl2(), 0).unwrap_err(), Error::DepthTooSmall(0));
        assert_eq!(
            multi_current(&sl2(), &[]).unwrap_err(),
            Error::EmptyDegreeList
        );
    }

    #[test]
    fn takiff_preserves_jacobi() {
        for m in 1..=3 {
            assert_eq!(
                lie::validate(&takiff(&sl2(), m).unwrap()).summary(),
                Status::Pass
            );
        }
    }

    #[test]
    fn multi_current_nesting() {
        let mc = multi_current(&sl2(), &[1, 1]).unwrap();
        assert_eq!(mc.dim(), 12);
        assert_eq!(mc.basis()[0], "e@0@0");
        assert_eq!(mc.basis()[9], "e@1@1");
        assert_eq!(mc.label(), "sl2<1,1>");
        assert_eq!(flatten_name("e@1@0"), "e@[1,0]");
        assert_eq!(flatten_name("e"), "e");
        let single = multi_current(&sl2(), &[2]).unwrap();
        assert_eq!(single, takiff(&sl2(), 2).unwrap());
    }

    #[test]
    fn nilpotent_ideals() {
        let t = takiff(&sl2(), 1).unwrap();
        assert_eq!(nilpotent_ideal(&t).unwrap(), names(&["e@1", "h@1", "f@1"]));
        let h = takiff(&heis1(), 2).unwrap();
        let ideal = nilpotent_ideal(&h).unwrap();
        assert_eq!(ideal.len(), 6);
        assert_eq!(h.dim() - ideal.len(), heis1().dim());
        assert!(matches!(
            nilpotent_ideal(&sl2()),
            Err(Error::MissingGrading(_))
        ));
    }

    #[test]
    fn grade_zero_acts_componentwise() {
        let t = takiff(&sl2(), 2).unwrap();
        let g = t.grading().unwrap().clone();
        let xi = TakiffDualPoint::new(alloc::vec![
            DualPoint::new(alloc::vec![int(1), int(2), int(3)]),
            DualPoint::new(alloc::vec![int(-4), int(5), int(0)]),
            DualPoint::new(alloc::vec![int(7), int(0), int(-1)]),
        ])
        .unwrap();
        let mut x = alloc::vec![int(0); 9];
        x[g.index(1, 0)] = int(3); // 3·h@0
        let out = coadjoint_apply(&t, &x, &xi).unwrap();
        for j in 0..3 {
            let expected =
                lie::coadjoint_action(&sl2(), &[int(0), int(3), int(0)], xi.component(j));
            assert_eq!(out.component(j), &expected);
        }
    }

    #[test]
    fn top_grade_element_reads_only_the_top_component() {
        // x@1 in heis1<1>: ad*(x@1)ξ only sees ξ_1.
        let t = takiff(&heis1(), 1).unwrap();
        let mut x = alloc::vec![int(0); 6];
        x[3] = int(1);
        let xi = TakiffDualPoint::new(alloc::vec![
            DualPoint::new(alloc::vec![int(1), int(1), int(9)]),
            DualPoint::new(alloc::vec![int(0), int(0), int(2)]),
        ])
        .unwrap();
        let out = coadjoint_apply(&t, &x, &xi).unwrap();
        assert_eq!(out.component(0).coords(), &[int(0), int(-2), int(0)]);
        assert!(out.component(1).is_zero());
        let structural = lie::coadjoint_action(&t, &x, &xi.to_flat());
        assert_eq!(out.to_flat(), structural);
    }
}
