//! The ε-expansion against an interpolation oracle.
//!
//! Along the curve `t ↦ ξ_m + tξ_{m-1} + ⋯ + t^m ξ_0` the value of `f` is a
//! polynomial in `t` of degree at most `m·deg f`; its first `m+1`
//! coefficients are `F^0(ξ), …, F^m(ξ)`. They are recovered here by exact
//! Lagrange interpolation, without touching jets.

use num_traits::{One, Zero};
use takiff_core::catalog;
use takiff_core::family::{self, LowestComponent};
use takiff_core::poly::{int, Rational};
use takiff_core::sample;
use takiff_core::takiff;
use takiff_core::{DualPoint, Polynomial, TakiffDualPoint};

/// Coefficients of the polynomial through `(t_k, y_k)`, lowest first.
fn interpolate(ts: &[Rational], ys: &[Rational]) -> Vec<Rational> {
    let n = ts.len();
    let mut coeffs = vec![Rational::zero(); n];
    for k in 0..n {
        // basis polynomial Π_{i≠k} (t - t_i) / (t_k - t_i)
        let mut basis = vec![Rational::one()];
        let mut denom = Rational::one();
        for i in 0..n {
            if i == k {
                continue;
            }
            let mut next = vec![Rational::zero(); basis.len() + 1];
            for (d, c) in basis.iter().enumerate() {
                next[d + 1] += c;
                next[d] -= c * &ts[i];
            }
            basis = next;
            denom *= &ts[k] - &ts[i];
        }
        let scale = &ys[k] / denom;
        for (d, c) in basis.iter().enumerate() {
            coeffs[d] += c * &scale;
        }
    }
    coeffs
}

fn oracle(f: &Polynomial, xi: &TakiffDualPoint) -> Vec<Rational> {
    let m = xi.depth();
    let deg = f.total_degree().unwrap_or(0) as usize;
    let npts = m * deg + 1;
    let n = xi.top().dim();
    let ts: Vec<Rational> = (0..npts as i64).map(int).collect();
    let ys: Vec<Rational> = ts
        .iter()
        .map(|t| {
            let mut point = vec![Rational::zero(); n];
            let mut power = Rational::one();
            for j in 0..=m {
                for (p, c) in point.iter_mut().zip(xi.component(m - j).coords()) {
                    *p += &power * c;
                }
                power *= t;
            }
            f.evaluate(&point).unwrap()
        })
        .collect();
    let mut coeffs = interpolate(&ts, &ys);
    coeffs.resize(m + 1, Rational::zero());
    coeffs.truncate(m + 1);
    coeffs
}

#[test]
fn expansion_matches_interpolation_oracle() {
    let cases = [
        ("sl2", 1),
        ("sl2", 2),
        ("sl2", 3),
        ("sl3", 1),
        ("heis2", 2),
        ("slnV2", 2),
        ("slnV3", 1),
    ];
    let per_case = 200 / cases.len() + 1;
    let mut checked = 0;
    for (name, m) in cases {
        let entry = catalog::load(name).unwrap();
        let lm = takiff::takiff(&entry.algebra, m).unwrap();
        let grading = lm.grading().unwrap();
        let fam = family::build_family(&lm, &entry.invariants).unwrap();
        for t in 0..per_case as u64 {
            let mut rng = sample::rng(sample::trial_seed(0xE5, t));
            let flat = DualPoint::new(sample::integer_point(&mut rng, lm.dim(), 20));
            let xi = TakiffDualPoint::from_flat(grading, &flat);
            for (i, f) in entry.invariants.polys().iter().enumerate() {
                let expected = oracle(f, &xi);
                for (j, want) in expected.iter().enumerate() {
                    let got = fam.get(i, j).evaluate(flat.coords()).unwrap();
                    assert_eq!(&got, want, "{name} m={m} F_{}^{j} at {flat}", i + 1);
                }
            }
            checked += 1;
        }
    }
    assert!(checked >= 200);
}

#[test]
fn sl2_first_order_term() {
    let sl2 = catalog::load("sl2").unwrap();
    let l1 = takiff::takiff(&sl2.algebra, 1).unwrap();
    let fam = family::build_family(&l1, &sl2.invariants).unwrap();
    let vars = l1.vars();
    let f0 = Polynomial::parse("h@1^2 + 4*e@1*f@1", vars).unwrap();
    let f1 = Polynomial::parse("2*h@1*h@0 + 4*e@1*f@0 + 4*e@0*f@1", vars).unwrap();
    assert_eq!(fam.get(0, 0), &f0);
    assert_eq!(fam.get(0, 1), &f1);
}

#[test]
fn heisenberg_family_is_linear() {
    let heis = catalog::load("heis1").unwrap();
    let l2 = takiff::takiff(&heis.algebra, 2).unwrap();
    let fam = family::build_family(&l2, &heis.invariants).unwrap();
    let printed: Vec<String> = fam.row(0).iter().map(ToString::to_string).collect();
    assert_eq!(printed, ["z@2", "z@1", "z@0"]);
    assert_eq!(fam.degree_sum(), 3);
}

#[test]
fn sl3_family_degrees() {
    let sl3 = catalog::load("sl3").unwrap();
    let l2 = takiff::takiff(&sl3.algebra, 2).unwrap();
    let fam = family::build_family(&l2, &sl3.invariants).unwrap();
    for (i, j, f) in fam.entries() {
        assert_eq!(f.homogeneous_degree(), Some([2, 3][i]), "F_{}^{j}", i + 1);
    }
    assert!(family::triangularity_violations(&l2, &fam)
        .unwrap()
        .is_empty());
    assert!(family::degree_violations(&fam).is_empty());
}

#[test]
fn lowest_component_is_base_differential() {
    let sl2 = catalog::load("sl2").unwrap();
    let m = 2;
    let lm = takiff::takiff(&sl2.algebra, m).unwrap();
    let fam = family::build_family(&lm, &sl2.invariants).unwrap();
    let c = &sl2.invariants.polys()[0];
    let xi = TakiffDualPoint::new(vec![
        DualPoint::new(vec![int(2), int(-1), int(5)]),
        DualPoint::new(vec![int(0), int(3), int(1)]),
        DualPoint::new(vec![int(1), int(1), int(-4)]),
    ])
    .unwrap();
    let dc: Vec<Rational> = (0..3)
        .map(|k| c.partial(k).evaluate(xi.top().coords()).unwrap())
        .collect();
    for j in 0..=m {
        let got = family::lowest_component(&lm, fam.get(0, j), &xi).unwrap();
        assert_eq!(
            got,
            LowestComponent::Grade {
                grade: m - j,
                vector: dc.clone()
            }
        );
    }
    let zero_top = TakiffDualPoint::new(vec![
        DualPoint::new(vec![int(1), int(0), int(0)]),
        DualPoint::zero(3),
        DualPoint::zero(3),
    ])
    .unwrap();
    assert_eq!(
        family::lowest_component(&lm, fam.get(0, 1), &zero_top).unwrap(),
        LowestComponent::Zero
    );
    // F^2 pairs ξ_2 with ξ_0, so its lowest piece moves up to grade 2.
    assert_eq!(
        family::lowest_component(&lm, fam.get(0, 2), &zero_top).unwrap(),
        LowestComponent::Grade {
            grade: 2,
            vector: vec![int(0), int(0), int(4)]
        }
    );
}

#[test]
fn nested_takiff_family_feeds_next_level() {
    let sl2 = catalog::load("sl2").unwrap();
    let l1 = takiff::takiff(&sl2.algebra, 1).unwrap();
    let fam = family::build_family(&l1, &sl2.invariants).unwrap();
    let set = fam.to_invariant_set(&l1).unwrap();
    let l11 = takiff::takiff(&l1, 1).unwrap();
    let fam2 = family::build_family(&l11, &set).unwrap();
    assert_eq!(l11.dim(), 12);
    assert_eq!(fam2.len(), 4);
    for (_, _, f) in fam2.entries() {
        assert!(takiff_core::lie::is_symmetric_invariant(&l11, f).unwrap());
    }
}
