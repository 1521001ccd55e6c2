//! Exact real-rootedness via square-free reduction and a Sturm chain.
//!
//! Everything runs over arbitrary-precision rationals: a factor `x^k` is
//! split off, the square-free part is computed with a polynomial gcd, and a
//! Sturm chain evaluated at the classical root bound `+-(1 + max|c_i|/|c_n|)`
//! counts the distinct real roots. The polynomial has only real zeros iff
//! that count equals the square-free degree.

use crate::coeffs::{BigRational, CoeffSeq};
use crate::{Error, Result};
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Polynomial over Q, low degree first, no trailing zeros (empty = zero).
#[derive(Debug, Clone, PartialEq)]
struct QPoly(Vec<BigRational>);

impl QPoly {
    fn new(mut coeffs: Vec<BigRational>) -> QPoly {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly(coeffs)
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> usize {
        debug_assert!(!self.is_zero());
        self.0.len() - 1
    }

    fn leading(&self) -> &BigRational {
        self.0.last().expect("nonzero polynomial")
    }

    fn derivative(&self) -> QPoly {
        QPoly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    fn monic(mut self) -> QPoly {
        if !self.is_zero() {
            let lead = self.leading().clone();
            for c in &mut self.0 {
                *c /= lead.clone();
            }
        }
        self
    }

    /// Euclidean division, returning `(quotient, remainder)`.
    fn div_rem(&self, divisor: &QPoly) -> (QPoly, QPoly) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.is_zero() || self.degree() < divisor.degree() {
            return (QPoly::new(Vec::new()), self.clone());
        }
        let mut rem = self.0.clone();
        let dlead = divisor.leading();
        let ddeg = divisor.degree();
        let mut quot = alloc::vec![BigRational::zero(); rem.len() - ddeg];
        for top in (ddeg..rem.len()).rev() {
            if rem[top].is_zero() {
                continue;
            }
            let factor = &rem[top] / dlead;
            let shift = top - ddeg;
            for (i, dc) in divisor.0.iter().enumerate() {
                let sub = dc * &factor;
                rem[shift + i] -= sub;
            }
            quot[shift] = factor;
        }
        (QPoly::new(quot), QPoly::new(rem))
    }

    fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

fn poly_gcd(a: &QPoly, b: &QPoly) -> QPoly {
    let mut a = a.clone().monic();
    let mut b = b.clone();
    while !b.is_zero() {
        b = b.monic();
        let (_, r) = a.div_rem(&b);
        a = b;
        b = r;
    }
    a.monic()
}

/// Strictly exceeds the magnitude of every root (Cauchy bound).
fn root_bound(p: &QPoly) -> BigRational {
    let lead = p.leading();
    let max = p.0[..p.0.len() - 1]
        .iter()
        .map(|c| (c / lead).abs())
        .max()
        .unwrap_or_else(BigRational::zero);
    max + BigRational::one()
}

/// Sign variations of the chain evaluated at `x`, zeros skipped.
fn sign_variations(chain: &[QPoly], x: &BigRational) -> usize {
    let mut variations = 0;
    let mut prev = 0i8;
    for p in chain {
        let v = p.eval(x);
        let sign = if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        };
        if sign != 0 {
            if prev != 0 && sign != prev {
                variations += 1;
            }
            prev = sign;
        }
    }
    variations
}

fn sturm_chain(p: QPoly) -> Vec<QPoly> {
    let mut chain = alloc::vec![p.clone(), p.derivative()];
    loop {
        let len = chain.len();
        if chain[len - 1].is_zero() {
            chain.pop();
            return chain;
        }
        let (_, r) = chain[len - 2].div_rem(&chain[len - 1]);
        let neg = QPoly::new(r.0.into_iter().map(|c| -c).collect());
        chain.push(neg);
    }
}

/// Number of distinct real roots of a nonzero polynomial.
fn distinct_real_roots(square_free: &QPoly) -> usize {
    if square_free.degree() == 0 {
        return 0;
    }
    let chain = sturm_chain(square_free.clone());
    let bound = root_bound(square_free);
    sign_variations(&chain, &(-bound.clone())) - sign_variations(&chain, &bound)
}

/// Whether every complex root of the polynomial is real.
///
/// Splits off the `x^k` factor, reduces to the square-free part via gcd with
/// the derivative, and compares the Sturm count of distinct real roots to the
/// square-free degree.
pub fn is_real_rooted(seq: &CoeffSeq) -> Result<bool> {
    let mut coeffs: Vec<BigRational> = seq
        .coeffs()
        .iter()
        .map(|c| BigRational::from_integer(BigInt::from(c.clone())))
        .collect();
    while coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
    if coeffs.is_empty() {
        return Err(Error::ZeroPolynomial);
    }
    // roots at zero are real; strip them
    let low_zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
    let p = QPoly::new(coeffs[low_zeros..].to_vec());
    if p.degree() <= 1 {
        return Ok(true);
    }
    let gcd = poly_gcd(&p, &p.derivative());
    let (square_free, rem) = p.div_rem(&gcd);
    debug_assert!(rem.is_zero(), "gcd must divide the polynomial");
    if square_free.degree() <= 1 {
        return Ok(true);
    }
    Ok(distinct_real_roots(&square_free) == square_free.degree())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(cs: &[u64]) -> CoeffSeq {
        CoeffSeq::from_u64s(cs)
    }

    #[test]
    fn cube_of_linear_factor_is_real_rooted() {
        assert!(is_real_rooted(&seq(&[1, 3, 3, 1])).unwrap());
    }

    #[test]
    fn x_squared_plus_one_is_not() {
        assert!(!is_real_rooted(&seq(&[1, 0, 1])).unwrap());
    }

    #[test]
    fn partition_polynomial_is_not() {
        assert!(!is_real_rooted(&seq(&[1, 1, 2, 2, 1, 1])).unwrap());
    }

    #[test]
    fn binomial_rows_are_real_rooted() {
        for n in 1..=12 {
            assert!(is_real_rooted(&CoeffSeq::binomial_row(n)).unwrap());
        }
    }

    #[test]
    fn zero_factor_and_degenerate_cases() {
        assert!(is_real_rooted(&seq(&[0, 1])).unwrap()); // x
        assert!(is_real_rooted(&seq(&[0, 0, 1, 1])).unwrap()); // x^2 (x + 1)
        assert!(is_real_rooted(&seq(&[5])).unwrap()); // constant
        assert!(matches!(
            is_real_rooted(&seq(&[0, 0])),
            Err(Error::ZeroPolynomial)
        ));
        assert!(!is_real_rooted(&seq(&[1, 0, 0, 0, 1])).unwrap()); // x^4 + 1
    }

    #[test]
    fn repeated_roots_are_handled_by_squarefree_reduction() {
        // (x+1)^2 (x+2)^2 = x^4 + 6x^3 + 13x^2 + 12x + 4
        assert!(is_real_rooted(&seq(&[4, 12, 13, 6, 1])).unwrap());
        // (x^2+1)^2 = x^4 + 2x^2 + 1
        assert!(!is_real_rooted(&seq(&[1, 0, 2, 0, 1])).unwrap());
    }
}
