use alloc::vec::Vec;
use core::cmp::Ordering;

/// Sparse exponent vector: `(variable index, exponent)` pairs sorted by
/// index, exponents strictly positive.
///
/// Ordered by graded reverse lexicographic order, so the largest monomial
/// has the highest total degree and, among equal degrees, the smallest
/// exponent in the last variable where the two differ.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    degree: u32,
    exps: Vec<(u32, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Self {
            degree: 0,
            exps: Vec::new(),
        }
    }

    pub fn var(index: u32, exp: u32) -> Self {
        if exp == 0 {
            return Self::one();
        }
        Self {
            degree: exp,
            exps: alloc::vec![(index, exp)],
        }
    }

    /// Builds a monomial from arbitrary pairs, merging repeated indices.
    pub fn from_exponents<I: IntoIterator<Item = (u32, u32)>>(pairs: I) -> Self {
        let mut exps: Vec<(u32, u32)> = pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        exps.sort_unstable_by_key(|&(v, _)| v);
        let mut merged: Vec<(u32, u32)> = Vec::with_capacity(exps.len());
        for (v, e) in exps {
            match merged.last_mut() {
                Some(last) if last.0 == v => last.1 += e,
                _ => merged.push((v, e)),
            }
        }
        let degree = merged.iter().map(|&(_, e)| e).sum();
        Self {
            degree,
            exps: merged,
        }
    }

    /// Builds a monomial from a dense exponent vector.
    pub fn from_dense(exps: &[u32]) -> Self {
        Self::from_exponents(exps.iter().enumerate().map(|(v, &e)| (v as u32, e)))
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponents(&self) -> &[(u32, u32)] {
        &self.exps
    }

    pub fn exponent(&self, index: u32) -> u32 {
        match self.exps.binary_search_by_key(&index, |&(v, _)| v) {
            Ok(pos) => self.exps[pos].1,
            Err(_) => 0,
        }
    }

    pub fn to_dense(&self, nvars: usize) -> Vec<u32> {
        let mut dense = alloc::vec![0; nvars];
        for &(v, e) in &self.exps {
            dense[v as usize] = e;
        }
        dense
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut exps = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            let (a, b) = (self.exps[i], other.exps[j]);
            match a.0.cmp(&b.0) {
                Ordering::Less => {
                    exps.push(a);
                    i += 1;
                }
                Ordering::Greater => {
                    exps.push(b);
                    j += 1;
                }
                Ordering::Equal => {
                    exps.push((a.0, a.1 + b.1));
                    i += 1;
                    j += 1;
                }
            }
        }
        exps.extend_from_slice(&self.exps[i..]);
        exps.extend_from_slice(&other.exps[j..]);
        Self {
            degree: self.degree + other.degree,
            exps,
        }
    }

    /// `∂/∂x_index`: the exponent that came down and the lowered monomial.
    pub fn derivative(&self, index: u32) -> Option<(u32, Self)> {
        let pos = self.exps.binary_search_by_key(&index, |&(v, _)| v).ok()?;
        let e = self.exps[pos].1;
        let mut exps = self.exps.clone();
        if e == 1 {
            exps.remove(pos);
        } else {
            exps[pos].1 -= 1;
        }
        Some((
            e,
            Self {
                degree: self.degree - 1,
                exps,
            },
        ))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.degree != other.degree {
            return self.degree.cmp(&other.degree);
        }
        let (mut i, mut j) = (self.exps.len(), other.exps.len());
        while i > 0 && j > 0 {
            let (va, ea) = self.exps[i - 1];
            let (vb, eb) = other.exps[j - 1];
            match va.cmp(&vb) {
                Ordering::Equal => {
                    if ea != eb {
                        return eb.cmp(&ea);
                    }
                    i -= 1;
                    j -= 1;
                }
                // self carries a positive power of a later variable
                Ordering::Greater => return Ordering::Less,
                Ordering::Less => return Ordering::Greater,
            }
        }
        match (i, j) {
            (0, 0) => Ordering::Equal,
            (0, _) => Ordering::Greater,
            _ => Ordering::Less,
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grevlex_in_three_variables() {
        // x > y > z; degree two in descending grevlex order
        let expected = [
            [2, 0, 0],
            [1, 1, 0],
            [0, 2, 0],
            [1, 0, 1],
            [0, 1, 1],
            [0, 0, 2],
        ];
        let monos: Vec<Monomial> = expected.iter().map(|e| Monomial::from_dense(e)).collect();
        for pair in monos.windows(2) {
            assert!(
                pair[0] > pair[1],
                "{:?} should exceed {:?}",
                pair[0],
                pair[1]
            );
        }
        assert!(Monomial::var(2, 1) > Monomial::one());
        assert!(Monomial::from_dense(&[0, 0, 2]) > Monomial::var(0, 1));
    }

    #[test]
    fn derivative_lowers_exponent() {
        let m = Monomial::from_dense(&[2, 1]);
        assert_eq!(m.derivative(0), Some((2, Monomial::from_dense(&[1, 1]))));
        assert_eq!(m.derivative(1), Some((1, Monomial::var(0, 2))));
        assert_eq!(m.derivative(2), None);
    }
}
