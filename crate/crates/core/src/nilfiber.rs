//! Null fibres of the invariant quotient and their stratification.
//!
//! For basic invariants `f_1, …, f_l` the null fibre `N` is their common
//! zero set. `N` is stratified by the rank `i` of the differentials, and over
//! a point of rank `i` the fibre of `N<1> → N, (ξ_0, ξ_1) ↦ ξ_1` is the
//! linear space `{ξ_0 | <(df_k)_{ξ_1}, ξ_0> = 0}` of dimension `dim q - i`.
//! Stratum dimensions come from rational parametrizations whose declared
//! dimension is checked by the rank of their Jacobian; everything else here
//! is exact linear algebra at sampled points, reported as evidence.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::catalog::CatalogEntry;
use crate::error::{Error, Result};
use crate::family::{self, InvariantFamily};
use crate::lie::{self, DualPoint, Gradients, InvariantSet, LieAlgebra};
use crate::linalg::{self, Matrix};
use crate::poly::{Polynomial, Rational, VarSet};
use crate::report::{Check, Report, Status};
use crate::sample;
use crate::takiff::{self, TakiffDualPoint};

/// How a parametrized stratum is expected to sit in the null fibre.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StratumRole {
    /// Meets Ω; its fibres form the principal component.
    Principal,
    /// Candidate bad component, expected to avoid Ω.
    BadCandidate,
    Other,
}

impl StratumRole {
    pub fn as_str(self) -> &'static str {
        match self {
            StratumRole::Principal => "principal",
            StratumRole::BadCandidate => "bad-candidate",
            StratumRole::Other => "other",
        }
    }
}

/// Polynomial map from a parameter space onto a stratum of a null fibre.
#[derive(Debug, Clone)]
pub struct Parametrization {
    pub name: String,
    /// Number of `<1>` steps above the catalog algebra.
    pub level: usize,
    pub params: Arc<VarSet>,
    /// One polynomial per basis coordinate of the level's algebra.
    pub map: Vec<Polynomial>,
    pub declared_dim: usize,
    pub declared_index: Option<usize>,
    pub role: StratumRole,
}

impl Parametrization {
    pub fn point(&self, values: &[Rational]) -> DualPoint {
        DualPoint::new(
            self.map
                .iter()
                .map(|p| {
                    p.evaluate(values)
                        .expect("parameter vector has full length")
                })
                .collect(),
        )
    }

    /// Rank of the Jacobian of the map at `values`.
    pub fn jacobian_rank(&self, values: &[Rational]) -> usize {
        let k = self.params.len();
        if k == 0 {
            return 0;
        }
        let rows = self
            .map
            .iter()
            .map(|p| {
                (0..k)
                    .map(|j| {
                        p.partial(j)
                            .evaluate(values)
                            .expect("full parameter vector")
                    })
                    .collect()
            })
            .collect();
        Matrix::from_rows(rows, k).rank()
    }

    /// `count` seeded parameter vectors with their images.
    pub fn sample(&self, count: usize, seed: u64) -> Vec<(Vec<Rational>, DualPoint)> {
        (0..count as u64)
            .map(|t| {
                let mut rng = sample::rng(sample::trial_seed(seed, t));
                let values = sample::generic_point(&mut rng, self.params.len());
                let point = self.point(&values);
                (values, point)
            })
            .collect()
    }

    /// The map composed with `fs`; zero exactly when the image lies in `N`.
    pub fn pullback(&self, fs: &InvariantSet) -> Result<Vec<Polynomial>> {
        fs.polys().iter().map(|f| f.compose(&self.map)).collect()
    }
}

/// `ξ ∈ N`: every basic invariant vanishes at `ξ`.
pub fn on_null_fibre(fs: &InvariantSet, xi: &DualPoint) -> bool {
    fs.polys()
        .iter()
        .all(|f| f.evaluate(xi.coords()).is_ok_and(|v| v.is_zero()))
}

/// `ξ ∈ N<m>`: every `F_i^j` vanishes at `ξ`.
pub fn null_fiber_member(family: &InvariantFamily, xi: &TakiffDualPoint) -> bool {
    let flat = xi.to_flat();
    family
        .entries()
        .all(|(_, _, f)| f.evaluate(flat.coords()).is_ok_and(|v| v.is_zero()))
}

/// Stratum index: rank of the differentials of `fs` at `ξ`.
pub fn stratum_index(fs: &InvariantSet, xi: &DualPoint) -> usize {
    lie::differential_rank(fs, xi)
}

/// Dimension of `{ξ_0 | <(df_k)_{ξ_1}, ξ_0> = 0 ∀k}` for `ξ_1 ∈ N`.
pub fn fiber_dim_over(fs: &InvariantSet, xi1: &DualPoint) -> Result<usize> {
    if !on_null_fibre(fs, xi1) {
        return Err(Error::NotOnNullFibre(xi1.to_string()));
    }
    Ok(xi1.dim() - stratum_index(fs, xi1))
}

/// Basis of the linear fibre over `ξ_1`.
pub fn fiber_basis(fs: &InvariantSet, xi1: &DualPoint) -> Vec<Vec<Rational>> {
    let n = xi1.dim();
    if fs.is_empty() {
        return (0..n)
            .map(|k| {
                let mut v = alloc::vec![Rational::zero(); n];
                v[k] = num_traits::One::one();
                v
            })
            .collect();
    }
    fs.gradients().at(xi1.coords()).nullspace()
}

/// Outcome of the stratum-containment bounds at one point of `N<1>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LemmaBounds {
    /// Stratum index of `ξ_1` in `N`.
    pub base_index: usize,
    /// Rank of all `2l` differentials at `ξ`.
    pub total_index: usize,
    pub rank: usize,
}

impl LemmaBounds {
    /// `2i ≤ J ≤ l + i`.
    pub fn holds(&self) -> bool {
        2 * self.base_index <= self.total_index && self.total_index <= self.rank + self.base_index
    }
}

/// Computes `i` and `J` at `ξ ∈ N<1>`.
pub fn lemma_containment_check(
    takiff_algebra: &LieAlgebra,
    family: &InvariantFamily,
    xi: &TakiffDualPoint,
) -> Result<LemmaBounds> {
    if family.depth() != 1 {
        return Err(Error::Precondition(format!(
            "containment bounds need depth 1, got {}",
            family.depth()
        )));
    }
    if !null_fiber_member(family, xi) {
        return Err(Error::NotOnNullFibre(xi.to_flat().to_string()));
    }
    let base_index = stratum_index(family.base(), xi.top());
    let total_index = family::FamilyJacobian::new(takiff_algebra, family)?
        .profile(xi)
        .total_rank;
    Ok(LemmaBounds {
        base_index,
        total_index,
        rank: family.rank(),
    })
}

/// Sampled points of one stratum together with its declared dimension.
#[derive(Debug, Clone)]
pub struct StratumEvidence {
    pub name: String,
    pub role: StratumRole,
    pub declared_dim: usize,
    pub declared_index: Option<usize>,
    pub points: Vec<DualPoint>,
}

/// Dimension bookkeeping for the fibres over one stratum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratumSummary {
    pub name: String,
    pub role: StratumRole,
    pub declared_dim: usize,
    /// Largest stratum index seen over the samples.
    pub sampled_index: usize,
    /// `dim q - i`, exact.
    pub fiber_dim: usize,
    pub total_dim: usize,
    /// `2 (dim q - l)`.
    pub target_dim: usize,
    pub omega_hits: usize,
    pub samples: usize,
}

impl StratumSummary {
    pub fn excess(&self) -> bool {
        self.total_dim > self.target_dim
    }

    pub fn at_target(&self) -> bool {
        self.total_dim == self.target_dim
    }

    /// No sample lies in Ω.
    pub fn avoids_omega(&self) -> bool {
        self.omega_hits == 0
    }
}

/// Fibre dimensions over each sampled stratum against `2 (dim q - l)`.
pub fn equidim_diagnostic(
    algebra: &LieAlgebra,
    fs: &InvariantSet,
    strata: &[StratumEvidence],
) -> Result<Vec<StratumSummary>> {
    let n = algebra.dim();
    let l = fs.len();
    let target_dim = 2 * (n - l);
    let gradients = fs.gradients();
    strata
        .iter()
        .map(|s| {
            let mut sampled_index = 0;
            let mut omega_hits = 0;
            for p in &s.points {
                if !on_null_fibre(fs, p) {
                    return Err(Error::NotOnNullFibre(format!("{}: {p}", s.name)));
                }
                let i = gradients.rank_at(p.coords());
                sampled_index = sampled_index.max(i);
                if i == l {
                    omega_hits += 1;
                }
            }
            if let Some(declared) = s.declared_index {
                if declared != sampled_index {
                    return Err(Error::InconsistentStratum {
                        stratum: s.name.clone(),
                        declared,
                        sampled: sampled_index,
                    });
                }
            }
            let fiber_dim = n - sampled_index;
            Ok(StratumSummary {
                name: s.name.clone(),
                role: s.role,
                declared_dim: s.declared_dim,
                sampled_index,
                fiber_dim,
                total_dim: s.declared_dim + fiber_dim,
                target_dim,
                omega_hits,
                samples: s.points.len(),
            })
        })
        .collect()
}

/// What one level of the chain shows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LevelVerdict {
    NoExcess,
    /// At least two strata reach the target dimension and one avoids Ω.
    Reducible,
    /// Some stratum's fibres exceed the target dimension.
    Excess,
}

impl LevelVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            LevelVerdict::NoExcess => "no excess",
            LevelVerdict::Reducible => {
                "reducible: several components of the target dimension, one avoiding omega"
            }
            LevelVerdict::Excess => {
                "excess dimension at sampled witness: quotient map not equidimensional"
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct LevelOutcome {
    pub level: usize,
    pub algebra_label: String,
    pub dim: usize,
    pub rank: usize,
    pub strata: Vec<StratumSummary>,
    pub verdict: LevelVerdict,
}

pub fn level_verdict(strata: &[StratumSummary]) -> LevelVerdict {
    if strata.iter().any(StratumSummary::excess) {
        return LevelVerdict::Excess;
    }
    let at_target: Vec<&StratumSummary> = strata.iter().filter(|s| s.at_target()).collect();
    if at_target.len() >= 2 && at_target.iter().any(|s| s.avoids_omega()) {
        return LevelVerdict::Reducible;
    }
    LevelVerdict::NoExcess
}

/// Samples per stratum in the chain run.
pub const STRATUM_SAMPLES: usize = 20;

const STATEMENT_FIBRE: &str = "fibre dimension over a stratum: dim p^-1(X_i) = dim X_i + dim q - i";
const STATEMENT_EQUIDIM: &str =
    "equidimensionality of N<1> needs every stratum fibre to stay within 2(dim q - l); a component avoiding omega is bad";

/// Runs the null-fibre diagnostics over `levels` successive `<1>` steps.
///
/// Level `k` (from 1) studies the algebra `q<1,…,1>` with `k - 1` steps and
/// the fibres of its `<1>` extension over the entry's parametrized strata.
pub fn run_chain(
    entry: &CatalogEntry,
    levels: usize,
    seed: u64,
) -> Result<(Report, Vec<LevelOutcome>)> {
    let mut report = Report::new(format!("nilfiber {} levels={levels}", entry.name));
    let mut outcomes = Vec::new();
    let mut algebra = entry.algebra.clone();
    let mut fs = entry.invariants.clone();
    for level in 1..=levels {
        let strata: Vec<&Parametrization> = entry
            .parametrizations
            .iter()
            .filter(|p| p.level == level - 1)
            .collect();
        if strata.is_empty() {
            return Err(Error::Precondition(format!(
                "catalog entry `{}` has no parametrized strata at level {level}",
                entry.name
            )));
        }
        let mut evidence = Vec::new();
        for p in &strata {
            let stream = sample::stream_seed(seed, &format!("level{level}:{}", p.name));
            let samples = p.sample(STRATUM_SAMPLES, stream);
            let param_rank = samples
                .iter()
                .map(|(values, _)| p.jacobian_rank(values))
                .max()
                .unwrap_or(0);
            let pullback_zero = p.pullback(&fs)?.iter().all(Polynomial::is_zero);
            let ok = param_rank == p.declared_dim && pullback_zero;
            report.push(
                Check::new(
                    format!("level {level}: parametrization {}", p.name),
                    "stratum dimension from the rank of a rational parametrization",
                    Status::from_bool(ok),
                )
                .with("algebra", algebra.label())
                .with("declared_dim", p.declared_dim)
                .with("jacobian_rank", param_rank)
                .with("lies_on_null_fibre", pullback_zero)
                .seeded(stream),
            );
            evidence.push(StratumEvidence {
                name: p.name.clone(),
                role: p.role,
                declared_dim: p.declared_dim,
                declared_index: p.declared_index,
                points: samples.into_iter().map(|(_, pt)| pt).collect(),
            });
        }
        let summaries = equidim_diagnostic(&algebra, &fs, &evidence)?;
        for s in &summaries {
            report.push(
                Check::new(
                    format!("level {level}: fibres over {}", s.name),
                    STATEMENT_FIBRE,
                    Status::SampledPass,
                )
                .with("role", s.role.as_str())
                .with("declared_dim", s.declared_dim)
                .with("stratum_index", s.sampled_index)
                .with("fiber_dim", s.fiber_dim)
                .with("total_dim", s.total_dim)
                .with("target_dim", s.target_dim)
                .with("comparison", compare(s.total_dim, s.target_dim))
                .with("omega_hits", format!("{}/{}", s.omega_hits, s.samples)),
            );
        }
        let verdict = level_verdict(&summaries);
        let at_target = summaries.iter().filter(|s| s.at_target()).count();
        let avoiding = summaries
            .iter()
            .filter(|s| s.at_target() && s.avoids_omega())
            .count();
        let max_total = summaries.iter().map(|s| s.total_dim).max().unwrap_or(0);
        report.push(
            Check::new(
                format!("level {level}: verdict"),
                STATEMENT_EQUIDIM,
                Status::SampledPass,
            )
            .with("algebra", algebra.label())
            .with("dim", algebra.dim())
            .with("rank", fs.len())
            .with("target_dim", 2 * (algebra.dim() - fs.len()))
            .with("max_total_dim", max_total)
            .with("witnesses_at_target", at_target)
            .with("at_target_avoiding_omega", avoiding)
            .with("verdict", verdict.as_str()),
        );
        outcomes.push(LevelOutcome {
            level,
            algebra_label: algebra.label().to_string(),
            dim: algebra.dim(),
            rank: fs.len(),
            strata: summaries,
            verdict,
        });
        if level < levels {
            let next = takiff::takiff(&algebra, 1)?;
            let fam = family::build_family(&next, &fs)?;
            fs = fam.to_invariant_set(&next)?;
            algebra = next;
        }
    }
    Ok((report, outcomes))
}

fn compare(total: usize, target: usize) -> String {
    match total.cmp(&target) {
        core::cmp::Ordering::Less => format!("{total} < {target}"),
        core::cmp::Ordering::Equal => format!("{total} = {target}"),
        core::cmp::Ordering::Greater => format!("{total} > {target}"),
    }
}

/// Tally of the `N<1>` characterization run.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct N1Tally {
    pub samples: usize,
    pub agreements: usize,
    pub members: usize,
    pub lemma_checked: usize,
    pub lemma_violations: usize,
}

/// Compares membership in `N<1>` (all `F_i^0`, `F_i^1` vanish) with the
/// description `f_i(ξ_1) = 0` and `<(df_i)_{ξ_1}, ξ_0> = 0`, evaluated
/// directly from the base invariants, at seeded points; checks the
/// containment bounds at every member.
///
/// Points mix five kinds: `ξ_1` on the parametrized cone with `ξ_0` random
/// or in the linear fibre, `ξ_1 = 0`, `ξ_1` generic, and the origin.
pub fn check_n1_characterization(
    algebra: &LieAlgebra,
    fs: &InvariantSet,
    cone: &Parametrization,
    samples: usize,
    seed: u64,
) -> Result<(Report, N1Tally)> {
    let lm = takiff::takiff(algebra, 1)?;
    let fam = family::build_family(&lm, fs)?;
    let jacobian = family::FamilyJacobian::new(&lm, &fam)?;
    let base_gradients: Gradients = fs.gradients();
    let n = algebra.dim();
    let mut tally = N1Tally::default();
    let mut first_disagreement = None;
    let mut first_violation = None;
    for t in 0..samples as u64 {
        let mut rng = sample::rng(sample::trial_seed(seed, t));
        let on_cone = || {
            let values = sample::integer_point(
                &mut sample::rng(sample::trial_seed(seed ^ 0x5eed, t)),
                cone.params.len(),
                50,
            );
            cone.point(&values)
        };
        let (xi0, xi1) = match t % 5 {
            0 => (
                DualPoint::new(sample::generic_point(&mut rng, n)),
                on_cone(),
            ),
            1 => {
                let xi1 = on_cone();
                let basis = fiber_basis(fs, &xi1);
                let mut xi0 = alloc::vec![Rational::zero(); n];
                for v in &basis {
                    let c = sample::small_scalar(&mut rng);
                    for (a, b) in xi0.iter_mut().zip(v) {
                        *a += &c * b;
                    }
                }
                (DualPoint::new(xi0), xi1)
            }
            2 => (
                DualPoint::new(sample::generic_point(&mut rng, n)),
                DualPoint::zero(n),
            ),
            3 => (
                DualPoint::new(sample::generic_point(&mut rng, n)),
                DualPoint::new(sample::generic_point(&mut rng, n)),
            ),
            _ => (DualPoint::zero(n), DualPoint::zero(n)),
        };
        let xi = TakiffDualPoint::new(alloc::vec![xi0.clone(), xi1.clone()])?;
        let member = null_fiber_member(&fam, &xi);
        let description = on_null_fibre(fs, &xi1)
            && (0..fs.len())
                .all(|i| linalg::dot(&base_gradients.row(i, xi1.coords()), xi0.coords()).is_zero());
        tally.samples += 1;
        if member == description {
            tally.agreements += 1;
        } else if first_disagreement.is_none() {
            first_disagreement = Some(xi.to_flat());
        }
        if member {
            tally.members += 1;
            let bounds = LemmaBounds {
                base_index: stratum_index(fs, &xi1),
                total_index: jacobian.profile(&xi).total_rank,
                rank: fs.len(),
            };
            tally.lemma_checked += 1;
            if !bounds.holds() {
                tally.lemma_violations += 1;
                if first_violation.is_none() {
                    first_violation = Some((xi.to_flat(), bounds));
                }
            }
        }
    }
    let mut report = Report::new(format!("N<1> characterization {}", algebra.label()));
    let mut check = Check::new(
        "N<1> characterization",
        "N<1> = {(xi_0, xi_1) | xi_1 in N and <(df_i)_{xi_1}, xi_0> = 0 for all i}",
        Status::from_bool(tally.agreements == tally.samples),
    )
    .with("parametrization", &cone.name)
    .with(
        "agreements",
        format!("{}/{}", tally.agreements, tally.samples),
    )
    .with("members", tally.members)
    .seeded(seed);
    if let Some(p) = first_disagreement {
        check = check.with("counterexample", p);
    }
    report.push(check);
    let mut check = Check::new(
        "stratum containment bounds",
        "p^-1(X_i) lies in the union of the strata X_J of N<1> with 2i <= J <= l + i",
        Status::from_bool(tally.lemma_violations == 0),
    )
    .with("points_checked", tally.lemma_checked)
    .with("violations", tally.lemma_violations)
    .seeded(seed);
    if let Some((p, b)) = first_violation {
        check = check
            .with("point", p)
            .with("i", b.base_index)
            .with("J", b.total_index);
    }
    report.push(check);
    Ok((report, tally))
}

/// Samples for the `N<1>` characterization in [`run_nilfiber`].
pub const N1_SAMPLES: usize = 50;

/// The full null-fibre run on a catalog entry: the `N<1>` characterization
/// with its containment bounds on the entry's principal cone, followed by
/// [`run_chain`].
pub fn run_nilfiber(
    entry: &CatalogEntry,
    levels: usize,
    seed: u64,
) -> Result<(Report, Vec<LevelOutcome>)> {
    let cone = entry
        .parametrizations
        .iter()
        .find(|p| p.level == 0 && p.role == StratumRole::Principal)
        .ok_or_else(|| {
            Error::Precondition(format!(
                "catalog entry `{}` has no parametrized null cone",
                entry.name
            ))
        })?;
    let (mut report, _) =
        check_n1_characterization(&entry.algebra, &entry.invariants, cone, N1_SAMPLES, seed)?;
    report.title = format!("nilfiber {} levels={levels}", entry.name);
    let (chain, outcomes) = run_chain(entry, levels, seed)?;
    report.extend(chain);
    Ok((report, outcomes))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::poly::int;

    fn pt(v: &[i64]) -> DualPoint {
        DualPoint::new(v.iter().map(|&x| int(x)).collect())
    }

    #[test]
    fn sl2_strata_and_fibres() {
        let sl2 = catalog::load("sl2").unwrap();
        let fs = &sl2.invariants;
        assert_eq!(stratum_index(fs, &pt(&[1, 0, 0])), 1);
        assert_eq!(stratum_index(fs, &pt(&[0, 0, 0])), 0);
        assert_eq!(fiber_dim_over(fs, &pt(&[1, 0, 0])).unwrap(), 2);
        assert_eq!(fiber_dim_over(fs, &pt(&[0, 0, 0])).unwrap(), 3);
        assert!(matches!(
            fiber_dim_over(fs, &pt(&[1, 1, 1])),
            Err(Error::NotOnNullFibre(_))
        ));
    }

    #[test]
    fn heisenberg_fibres() {
        let h = catalog::load("heis1").unwrap();
        assert_eq!(fiber_dim_over(&h.invariants, &pt(&[3, -7, 0])).unwrap(), 2);
    }

    #[test]
    fn declared_index_mismatch_is_an_error() {
        let sl2 = catalog::load("sl2").unwrap();
        let evidence = [StratumEvidence {
            name: "wrong".into(),
            role: StratumRole::Other,
            declared_dim: 2,
            declared_index: Some(0),
            points: alloc::vec![pt(&[1, 0, 0])],
        }];
        assert!(matches!(
            equidim_diagnostic(&sl2.algebra, &sl2.invariants, &evidence),
            Err(Error::InconsistentStratum {
                declared: 0,
                sampled: 1,
                ..
            })
        ));
    }

    #[test]
    fn lemma_requires_depth_one_and_membership() {
        let sl2 = catalog::load("sl2").unwrap();
        let l2 = takiff::takiff(&sl2.algebra, 2).unwrap();
        let fam2 = family::build_family(&l2, &sl2.invariants).unwrap();
        let zero = TakiffDualPoint::new(alloc::vec![DualPoint::zero(3); 3]).unwrap();
        assert!(matches!(
            lemma_containment_check(&l2, &fam2, &zero),
            Err(Error::Precondition(_))
        ));
        let l1 = takiff::takiff(&sl2.algebra, 1).unwrap();
        let fam1 = family::build_family(&l1, &sl2.invariants).unwrap();
        let off = TakiffDualPoint::new(alloc::vec![pt(&[0, 0, 0]), pt(&[1, 1, 1])]).unwrap();
        assert!(matches!(
            lemma_containment_check(&l1, &fam1, &off),
            Err(Error::NotOnNullFibre(_))
        ));
    }

    #[test]
    fn sl2_chain_verdicts() {
        let sl2 = catalog::load("sl2").unwrap();
        let (report, outcomes) = run_chain(&sl2, 3, 7).unwrap();
        assert!(
            report.failures().next().is_none(),
            "{:?}",
            report.failures().collect::<Vec<_>>()
        );
        let verdicts: Vec<LevelVerdict> = outcomes.iter().map(|o| o.verdict).collect();
        assert_eq!(
            verdicts,
            [
                LevelVerdict::NoExcess,
                LevelVerdict::Reducible,
                LevelVerdict::Excess
            ]
        );
        let over_d = &outcomes[2].strata[0];
        assert_eq!(
            (over_d.declared_dim, over_d.sampled_index, over_d.total_dim),
            (8, 3, 17)
        );
    }

    #[test]
    fn sl2_n1_characterization() {
        let sl2 = catalog::load("sl2").unwrap();
        let cone = &sl2.parametrizations[0];
        let (report, tally) =
            check_n1_characterization(&sl2.algebra, &sl2.invariants, cone, 50, 3).unwrap();
        assert_eq!(tally.agreements, 50);
        assert!(tally.members >= 20);
        assert_eq!(tally.lemma_violations, 0);
        assert!(report.failures().next().is_none());
    }
}
