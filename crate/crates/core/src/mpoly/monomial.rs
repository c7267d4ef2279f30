use alloc::vec::Vec;
use core::cmp::Ordering;

/// Exponent vector of a monomial. Its length is the number of ring variables.
///
/// Monomials are ordered graded-lexicographically with the first variable
/// largest: `x^2 > x*y > x*z > y^2 > y*z > z^2 > x > ...`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Self(alloc::vec![0; nvars])
    }

    pub fn var(index: usize, nvars: usize) -> Self {
        let mut e = alloc::vec![0; nvars];
        e[index] = 1;
        Self(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

/// All monomials of total degree `degree` in `nvars` variables, largest first.
///
/// There are `binom(nvars - 1 + degree, degree)` of them. This ordering fixes
/// the columns of every conditions matrix.
pub fn monomial_basis(nvars: usize, degree: u32) -> Vec<Monomial> {
    assert!(nvars >= 1, "monomial basis needs at least one variable");
    let mut out = Vec::new();
    let mut current = alloc::vec![0u32; nvars];
    fill(&mut out, &mut current, 0, degree);
    out
}

fn fill(out: &mut Vec<Monomial>, current: &mut [u32], index: usize, remaining: u32) {
    if index + 1 == current.len() {
        current[index] = remaining;
        out.push(Monomial(current.to_vec()));
        return;
    }
    for e in (0..=remaining).rev() {
        current[index] = e;
        fill(out, current, index + 1, remaining - e);
    }
    current[index] = 0;
}

/// All exponent vectors of total degree at most `max_order`, by increasing order.
pub fn multi_indices_up_to(nvars: usize, max_order: u32) -> Vec<Monomial> {
    (0..=max_order).flat_map(|k| monomial_basis(nvars, k)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binomial;

    #[test]
    fn basis_sizes() {
        assert_eq!(monomial_basis(3, 4).len(), 15);
        assert_eq!(monomial_basis(4, 4).len(), 35);
        assert_eq!(monomial_basis(2, 0), alloc::vec![Monomial::one(2)]);
        for n in 1..5usize {
            for d in 0..7u32 {
                assert_eq!(
                    monomial_basis(n, d).len() as u64,
                    binomial(n as u64 - 1 + u64::from(d), u64::from(d))
                );
            }
        }
    }

    #[test]
    fn basis_is_strictly_decreasing() {
        let b = monomial_basis(3, 2);
        let exps: Vec<&[u32]> = b.iter().map(|m| m.exponents()).collect();
        assert_eq!(
            exps,
            alloc::vec![
                &[2, 0, 0][..],
                &[1, 1, 0],
                &[1, 0, 1],
                &[0, 2, 0],
                &[0, 1, 1],
                &[0, 0, 2]
            ]
        );
        assert!(b.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn graded_before_lex() {
        assert!(Monomial::new(alloc::vec![0, 0, 2]) > Monomial::new(alloc::vec![1, 0, 0]));
    }
}
