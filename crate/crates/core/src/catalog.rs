//! Built-in algebras with known basic invariants.
//!
//! Matrix algebras are generated from matrix units, so structure constants
//! come from actual commutators. The sl3 invariants are the traces of the
//! second and third powers of the generic element, expanded once offline
//! (`3/2·tr M^2` and `9·tr M^3`, with `M = Σ x_b b^∨` for the trace-form dual
//! basis) and pinned here; the catalog self-tests re-certify them.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::lie::{InvariantSet, LieAlgebra, SparseVec};
use crate::nilfiber::{Parametrization, StratumRole};
use crate::poly::{int, Polynomial, Rational, VarSet};

/// Structural flags recorded for an entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Flags {
    pub semisimple: bool,
    /// Supplied, never computed: the coadjoint group has no proper
    /// semi-invariants, which makes Ω big when the invariant ring is free.
    pub no_proper_semiinvariants: bool,
    pub frobenius: bool,
}

/// Values an entry is expected to reproduce under default seeds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expected {
    pub index: usize,
    pub magic: usize,
    pub degrees: Vec<u32>,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub summary: &'static str,
    pub algebra: LieAlgebra,
    pub invariants: InvariantSet,
    pub flags: Flags,
    pub expected: Expected,
    /// Rational parametrizations of null-fibre strata, by Takiff level.
    pub parametrizations: Vec<Parametrization>,
}

const ENTRIES: [(&str, &str); 8] = [
    ("sl2", "sl(2), dim 3, Casimir of degree 2"),
    ("sl3", "sl(3), dim 8, invariants of degrees 2 and 3"),
    ("heis1", "Heisenberg algebra Hei_1, dim 3, invariant z"),
    ("heis2", "Heisenberg algebra Hei_2, dim 5, invariant z"),
    ("affine2", "2-dim algebra [x,y] = y, Frobenius"),
    ("slnV2", "sl(2) x| 2k^2, dim 7, invariant det of degree 2"),
    ("slnV3", "sl(3) x| 3k^3, dim 17, invariant det of degree 3"),
    (
        "nilrad_sl3",
        "nilradical of a Borel of sl(3), isomorphic to Hei_1",
    ),
];

/// Entry names with one-line summaries.
pub fn list() -> Vec<(&'static str, &'static str)> {
    ENTRIES.to_vec()
}

pub fn load(name: &str) -> Result<CatalogEntry> {
    match name {
        "sl2" => sl2(),
        "sl3" => sl3(),
        "heis1" => heisenberg(1, "heis1"),
        "heis2" => heisenberg(2, "heis2"),
        "affine2" => affine2(),
        "slnV2" => sln_v(2, "slnV2"),
        "slnV3" => sln_v(3, "slnV3"),
        "nilrad_sl3" => nilradical_sl3(),
        _ => Err(Error::UnknownEntry(name.to_string())),
    }
}

fn summary_of(name: &str) -> &'static str {
    ENTRIES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, s)| *s)
        .unwrap_or("")
}

type Mat = Vec<Vec<i64>>;

fn unit(n: usize, i: usize, j: usize) -> Mat {
    let mut m = alloc::vec![alloc::vec![0; n]; n];
    m[i][j] = 1;
    m
}

fn matmul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

fn commutator(a: &Mat, b: &Mat) -> Mat {
    let (ab, ba) = (matmul(a, b), matmul(b, a));
    ab.iter()
        .zip(&ba)
        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x - y).collect())
        .collect()
}

/// Basis of sl(n): `E_ij` for `i ≠ j`, then `H_k = E_kk - E_{k+1,k+1}`.
struct SlBasis {
    n: usize,
    names: Vec<String>,
    mats: Vec<Mat>,
    /// Position of `E_ij` in the basis.
    off_diag: Vec<Vec<Option<usize>>>,
    /// Position of `H_k`.
    cartan: Vec<usize>,
}

impl SlBasis {
    fn new(n: usize, names: Option<[&str; 3]>) -> Self {
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                pairs.push((i, j));
            }
        }
        let lower: Vec<(usize, usize)> = pairs.iter().map(|&(i, j)| (j, i)).collect();
        let mut names_out = Vec::new();
        let mut mats = Vec::new();
        let mut off_diag = alloc::vec![alloc::vec![None; n]; n];
        let mut cartan = Vec::new();
        if let Some([e, h, f]) = names {
            // sl2 in the order e, h, f
            assert_eq!(n, 2);
            names_out.extend([e.to_string(), h.to_string(), f.to_string()]);
            mats.push(unit(2, 0, 1));
            mats.push(commutator(&unit(2, 0, 1), &unit(2, 1, 0)));
            mats.push(unit(2, 1, 0));
            off_diag[0][1] = Some(0);
            off_diag[1][0] = Some(2);
            cartan.push(1);
        } else {
            for &(i, j) in pairs.iter().chain(&lower) {
                off_diag[i][j] = Some(mats.len());
                names_out.push(format!("e{}{}", i + 1, j + 1));
                mats.push(unit(n, i, j));
            }
            for k in 0..n - 1 {
                cartan.push(mats.len());
                names_out.push(format!("h{}", k + 1));
                mats.push(commutator(&unit(n, k, k + 1), &unit(n, k + 1, k)));
            }
        }
        Self {
            n,
            names: names_out,
            mats,
            off_diag,
            cartan,
        }
    }

    /// Coordinates of a traceless matrix in this basis.
    fn decompose(&self, m: &Mat) -> SparseVec {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j && m[i][j] != 0 {
                    out.push((
                        self.off_diag[i][j].expect("basis covers off-diagonal"),
                        int(m[i][j]),
                    ));
                }
            }
        }
        let trace: i64 = (0..self.n).map(|i| m[i][i]).sum();
        assert_eq!(trace, 0, "commutators are traceless");
        let mut partial = 0;
        for k in 0..self.n - 1 {
            partial += m[k][k];
            if partial != 0 {
                out.push((self.cartan[k], int(partial)));
            }
        }
        out
    }

    fn brackets(&self) -> Vec<((usize, usize), SparseVec)> {
        let d = self.mats.len();
        let mut out = Vec::new();
        for a in 0..d {
            for b in a + 1..d {
                let c = self.decompose(&commutator(&self.mats[a], &self.mats[b]));
                if !c.is_empty() {
                    out.push(((a, b), c));
                }
            }
        }
        out
    }
}

fn entry(
    name: &'static str,
    algebra: LieAlgebra,
    invariants: &[&str],
    flags: Flags,
    expected: Expected,
) -> Result<CatalogEntry> {
    let mut invariants = InvariantSet::parse(&algebra, invariants)?;
    invariants.claimed_index = Some(expected.index);
    Ok(CatalogEntry {
        name,
        summary: summary_of(name),
        algebra,
        invariants,
        flags,
        expected,
        parametrizations: Vec::new(),
    })
}

fn sl2() -> Result<CatalogEntry> {
    let basis = SlBasis::new(2, Some(["e", "h", "f"]));
    let algebra = LieAlgebra::new("sl2", basis.names.clone(), basis.brackets())?;
    let mut e = entry(
        "sl2",
        algebra,
        &["h^2 + 4*e*f"],
        Flags {
            semisimple: true,
            no_proper_semiinvariants: true,
            frobenius: false,
        },
        Expected {
            index: 1,
            magic: 2,
            degrees: alloc::vec![2],
        },
    )?;
    e.parametrizations = sl2_parametrizations()?;
    Ok(e)
}

fn param(
    name: &str,
    level: usize,
    params: &[&str],
    map: &[&str],
    declared_dim: usize,
    declared_index: Option<usize>,
    role: StratumRole,
) -> Result<Parametrization> {
    let vars = VarSet::new(params.iter().copied())?;
    let map = map
        .iter()
        .map(|t| Polynomial::parse(t, &vars))
        .collect::<Result<Vec<_>>>()?;
    Ok(Parametrization {
        name: name.to_string(),
        level,
        params: vars,
        map,
        declared_dim,
        declared_index,
        role,
    })
}

/// Strata of the sl2 null fibres used for the three-level chain.
///
/// Level 0 lives in sl2* (coordinates e, h, f), level 1 in sl2<1>* and
/// level 2 in sl2<1,1>*, each in the algebra's basis order. Fibres over a
/// base point are solved by hand from `<(df)_{ξ_1}, ξ_0> = 0`; composing each
/// map with the level's invariants gives zero identically.
fn sl2_parametrizations() -> Result<Vec<Parametrization>> {
    Ok(alloc::vec![
        param(
            "sl2.nilcone.regular",
            0,
            &["s", "t"],
            &["s^2", "2*s*t", "-t^2"],
            2,
            Some(1),
            StratumRole::Principal,
        )?,
        param(
            "sl2.nilcone.origin",
            0,
            &[],
            &["0", "0", "0"],
            0,
            Some(0),
            StratumRole::Other
        )?,
        // ξ_1 regular nilpotent, ξ_0 in the kernel of (dC)_{ξ_1} = 4(-t^2, st, s^2)
        param(
            "sl2<1>.null.principal",
            1,
            &["s", "t", "u", "v"],
            &["u*s", "u*t + v*s", "-v*t", "s^2", "2*s*t", "-t^2"],
            4,
            Some(2),
            StratumRole::Principal,
        )?,
        // D = p^{-1}(0): ξ_1 = 0, ξ_0 arbitrary
        param(
            "sl2<1>.null.D",
            1,
            &["a", "b", "c"],
            &["a", "b", "c", "0", "0", "0"],
            3,
            Some(1),
            StratumRole::BadCandidate,
        )?,
        // η_1 = (ξ_0, 0) ∈ D with ξ_0 = (a, b, c); η_0 = (p, w) where w is in
        // the kernel of (dC)_{ξ_0} ∝ (2c, b, 2a), spanned by (b, -2c, 0) and (0, 2a, -b)
        param(
            "sl2<1,1>.null.over-D",
            2,
            &["a", "b", "c", "p1", "p2", "p3", "u", "v"],
            &[
                "p1",
                "p2",
                "p3",
                "u*b",
                "-2*u*c + 2*v*a",
                "-v*b",
                "a",
                "b",
                "c",
                "0",
                "0",
                "0",
            ],
            8,
            None,
            StratumRole::BadCandidate,
        )?,
    ])
}

fn sl3() -> Result<CatalogEntry> {
    let basis = SlBasis::new(3, None);
    let algebra = LieAlgebra::new("sl3", basis.names.clone(), basis.brackets())?;
    entry(
        "sl3",
        algebra,
        &[
            "3*e12*e21 + 3*e13*e31 + 3*e23*e32 + h1^2 + h1*h2 + h2^2",
            "9*e12*e21*h1 + 18*e12*e21*h2 + 27*e12*e23*e31 + 27*e13*e21*e32 \
             + 9*e13*e31*h1 - 9*e13*e31*h2 - 18*e23*e32*h1 - 9*e23*e32*h2 \
             + 2*h1^3 + 3*h1^2*h2 - 3*h1*h2^2 - 2*h2^3",
        ],
        Flags {
            semisimple: true,
            no_proper_semiinvariants: true,
            frobenius: false,
        },
        Expected {
            index: 2,
            magic: 5,
            degrees: alloc::vec![2, 3],
        },
    )
}

fn heisenberg(n: usize, name: &'static str) -> Result<CatalogEntry> {
    let (xs, ys): (Vec<String>, Vec<String>) = if n == 1 {
        (alloc::vec!["x".into()], alloc::vec!["y".into()])
    } else {
        (
            (1..=n).map(|i| format!("x{i}")).collect(),
            (1..=n).map(|i| format!("y{i}")).collect(),
        )
    };
    let mut names = xs;
    names.extend(ys);
    names.push("z".into());
    let z = 2 * n;
    let brackets = (0..n).map(|i| ((i, n + i), alloc::vec![(z, int(1))]));
    let algebra = LieAlgebra::new(name, names, brackets)?;
    entry(
        name,
        algebra,
        &["z"],
        Flags {
            semisimple: false,
            no_proper_semiinvariants: true,
            frobenius: false,
        },
        Expected {
            index: 1,
            magic: n + 1,
            degrees: alloc::vec![1],
        },
    )
}

fn affine2() -> Result<CatalogEntry> {
    let algebra = LieAlgebra::new(
        "affine2",
        alloc::vec!["x".into(), "y".into()],
        [((0, 1), alloc::vec![(1, int(1))])],
    )?;
    entry(
        "affine2",
        algebra,
        &[],
        Flags {
            semisimple: false,
            no_proper_semiinvariants: false,
            frobenius: true,
        },
        Expected {
            index: 0,
            magic: 1,
            degrees: Vec::new(),
        },
    )
}

/// `sl(n) ⋉ n·k^n`: module elements are `n × n` matrices `v_ij`, sl(n)
/// acting by left multiplication, module brackets zero.
fn sln_v(n: usize, name: &'static str) -> Result<CatalogEntry> {
    let sl = if n == 2 {
        SlBasis::new(2, Some(["e", "h", "f"]))
    } else {
        SlBasis::new(n, None)
    };
    let d = sl.mats.len();
    let mut names = sl.names.clone();
    for i in 0..n {
        for j in 0..n {
            names.push(format!("v{}{}", i + 1, j + 1));
        }
    }
    let v_index = |i: usize, j: usize| d + i * n + j;
    let mut brackets = sl.brackets();
    for (a, mat) in sl.mats.iter().enumerate() {
        for i in 0..n {
            for j in 0..n {
                let image = matmul(mat, &unit(n, i, j));
                let coeffs: SparseVec = (0..n)
                    .flat_map(|r| (0..n).map(move |c| (r, c)))
                    .filter(|&(r, c)| image[r][c] != 0)
                    .map(|(r, c)| (v_index(r, c), int(image[r][c])))
                    .collect();
                if !coeffs.is_empty() {
                    brackets.push(((a, v_index(i, j)), coeffs));
                }
            }
        }
    }
    let algebra = LieAlgebra::new(name, names, brackets)?;
    let det = determinant(&algebra, n, d)?;
    let det_text = det.to_string();
    entry(
        name,
        algebra,
        &[det_text.as_str()],
        Flags {
            semisimple: false,
            no_proper_semiinvariants: true,
            frobenius: false,
        },
        Expected {
            index: 1,
            magic: n * n,
            degrees: alloc::vec![n as u32],
        },
    )
}

/// Leibniz expansion of `det(v_ij)`.
fn determinant(algebra: &LieAlgebra, n: usize, offset: usize) -> Result<Polynomial> {
    let vars = algebra.vars();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = Polynomial::zero(vars);
    loop {
        let inversions = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| perm[i] > perm[j])
            .count();
        let sign: Rational = int(if inversions % 2 == 0 { 1 } else { -1 });
        let mut term = Polynomial::constant(vars, sign);
        for (row, &col) in perm.iter().enumerate() {
            term = &term * &Polynomial::var(vars, offset + row * n + col);
        }
        total = &total + &term;
        if !next_permutation(&mut perm) {
            return Ok(total);
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn nilradical_sl3() -> Result<CatalogEntry> {
    let algebra = LieAlgebra::new(
        "nilrad_sl3",
        alloc::vec!["e12".into(), "e23".into(), "e13".into()],
        [((0, 1), alloc::vec![(2, int(1))])],
    )?;
    entry(
        "nilrad_sl3",
        algebra,
        &["e13"],
        Flags {
            semisimple: false,
            no_proper_semiinvariants: true,
            frobenius: false,
        },
        Expected {
            index: 1,
            magic: 2,
            degrees: alloc::vec![1],
        },
    )
}
