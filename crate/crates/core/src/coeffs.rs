//! Exact checks on nonnegative integer coefficient sequences.
//!
//! A [`CoeffSeq`] holds the coefficients `(u_0, .., u_n)` of a polynomial
//! `sum u_j x^j` as arbitrary-precision nonnegative integers. All predicates
//! run in exact integer arithmetic; there is no floating point anywhere.

use crate::mask::check_ground_size;
use crate::{Error, PartitionType, Result};
use alloc::vec;
use alloc::vec::Vec;
use num_bigint::{BigInt, BigUint};
use num_rational::Ratio;
use num_traits::{One, Zero};

pub type BigRational = Ratio<BigInt>;

/// A nonnegative integer coefficient sequence, low degree first.
///
/// ```
/// use topolab_core::CoeffSeq;
///
/// let seq = CoeffSeq::from_u64s(&[1, 1, 4, 5, 4, 2, 1]);
/// assert_eq!(seq.unimodal_modes(), Some((3, 3)));
/// assert!(!seq.is_log_concave()); // 1*1 < 1*4 at j = 1
/// ```
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CoeffSeq {
    coeffs: Vec<BigUint>,
}

impl CoeffSeq {
    /// Wraps a nonempty coefficient vector.
    pub fn new(coeffs: Vec<BigUint>) -> CoeffSeq {
        assert!(!coeffs.is_empty(), "coefficient sequence must be nonempty");
        CoeffSeq { coeffs }
    }

    pub fn from_u64s(coeffs: &[u64]) -> CoeffSeq {
        CoeffSeq::new(coeffs.iter().map(|&c| BigUint::from(c)).collect())
    }

    /// The constant 1 polynomial.
    pub fn one() -> CoeffSeq {
        CoeffSeq::new(vec![BigUint::one()])
    }

    /// `x^k`.
    pub fn x_pow(k: usize) -> CoeffSeq {
        let mut coeffs = vec![BigUint::zero(); k + 1];
        coeffs[k] = BigUint::one();
        CoeffSeq::new(coeffs)
    }

    /// The binomial row `(1 + x)^m`.
    pub fn binomial_row(m: u32) -> CoeffSeq {
        let mut coeffs = vec![BigUint::one()];
        for j in 1..=m as u64 {
            let prev = coeffs.last().unwrap();
            // C(m, j) = C(m, j-1) * (m - j + 1) / j
            let next = prev * BigUint::from(m as u64 - j + 1) / BigUint::from(j);
            coeffs.push(next);
        }
        CoeffSeq::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn get(&self, j: usize) -> Result<&BigUint> {
        self.coeffs.get(j).ok_or(Error::IndexOutOfRange {
            index: j,
            degree: self.degree(),
        })
    }

    /// Sum of all coefficients, i.e. the polynomial evaluated at 1.
    pub fn sum(&self) -> BigUint {
        self.coeffs.iter().sum()
    }

    /// Mode interval `[k0, k1]` if the sequence rises weakly to a plateau and
    /// then falls weakly; `None` otherwise.
    pub fn unimodal_modes(&self) -> Option<(usize, usize)> {
        let c = &self.coeffs;
        let last = c.len() - 1;
        let mut peak = 0;
        while peak < last && c[peak] <= c[peak + 1] {
            peak += 1;
        }
        let mut down = peak;
        while down < last && c[down] >= c[down + 1] {
            down += 1;
        }
        if down != last {
            return None;
        }
        let mut k0 = peak;
        while k0 > 0 && c[k0 - 1] == c[peak] {
            k0 -= 1;
        }
        let mut k1 = peak;
        while k1 < last && c[k1 + 1] == c[peak] {
            k1 += 1;
        }
        Some((k0, k1))
    }

    pub fn is_unimodal(&self) -> bool {
        self.unimodal_modes().is_some()
    }

    /// `u_j^2 >= u_{j-1} u_{j+1}` for every internal index.
    pub fn is_log_concave(&self) -> bool {
        self.coeffs
            .windows(3)
            .all(|w| &w[1] * &w[1] >= &w[0] * &w[2])
    }

    /// Strict log-concavity: `u_j^2 > u_{j-1} u_{j+1}` at every internal index.
    pub fn is_slc(&self) -> bool {
        self.coeffs.windows(3).all(|w| &w[1] * &w[1] > &w[0] * &w[2])
    }

    /// A zero strictly between two nonzero coefficients.
    pub fn has_internal_zeros(&self) -> bool {
        let first = self.coeffs.iter().position(|c| !c.is_zero());
        let last = self.coeffs.iter().rposition(|c| !c.is_zero());
        match (first, last) {
            (Some(f), Some(l)) => self.coeffs[f..=l].iter().any(|c| c.is_zero()),
            _ => false,
        }
    }

    /// No internal zeros.
    pub fn is_niz(&self) -> bool {
        !self.has_internal_zeros()
    }

    /// Newton's inequalities, cross-multiplied so everything stays integral:
    /// `u_j^2 * j * (n-j) >= (j+1)(n-j+1) * u_{j-1} u_{j+1}` for internal `j`.
    ///
    /// Necessary for real-rootedness.
    pub fn newton_check(&self) -> Result<bool> {
        let n = self.degree();
        if n < 2 {
            return Err(Error::DegreeTooSmall { degree: n });
        }
        let c = &self.coeffs;
        for j in 1..n {
            let (j64, n64) = (j as u64, n as u64);
            let lhs = &c[j] * &c[j] * BigUint::from(j64 * (n64 - j64));
            let rhs = &c[j - 1] * &c[j + 1] * BigUint::from((j64 + 1) * (n64 - j64 + 1));
            if lhs < rhs {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The largest `d` with `u_j^2 >= d * u_{j-1} u_{j+1}` at every internal
    /// index: the minimum of the exact ratios `u_j^2 / (u_{j-1} u_{j+1})`
    /// over indices where the product is positive. `None` means no index
    /// constrains `d` (the supremum is infinite).
    pub fn max_lc_ratio(&self) -> Option<BigRational> {
        let mut best: Option<BigRational> = None;
        for w in self.coeffs.windows(3) {
            let denom = &w[0] * &w[2];
            if denom.is_zero() {
                continue;
            }
            let num = &w[1] * &w[1];
            let ratio = BigRational::new(BigInt::from(num), BigInt::from(denom));
            best = Some(match best {
                Some(b) if b <= ratio => b,
                _ => ratio,
            });
        }
        best
    }

    /// Convolution product (polynomial multiplication), exact.
    pub fn convolve(&self, other: &CoeffSeq) -> CoeffSeq {
        let mut out = vec![BigUint::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        CoeffSeq::new(out)
    }

    /// The coefficient list reversed (the reciprocal polynomial).
    pub fn reversed(&self) -> CoeffSeq {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        CoeffSeq::new(coeffs)
    }

    /// Scales every coefficient by `k`.
    pub fn scaled(&self, k: u64) -> CoeffSeq {
        let k = BigUint::from(k);
        CoeffSeq::new(self.coeffs.iter().map(|c| c * &k).collect())
    }

    /// Coefficient-wise sum, padding with zeros.
    pub fn plus(&self, other: &CoeffSeq) -> CoeffSeq {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigUint::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            out[i] += a;
        }
        for (i, b) in other.coeffs.iter().enumerate() {
            out[i] += b;
        }
        CoeffSeq::new(out)
    }

    /// Whether every complex root of `sum u_j x^j` is real, decided exactly
    /// by square-free reduction and a Sturm chain. See [`crate::realroots`].
    pub fn is_real_rooted(&self) -> Result<bool> {
        crate::realroots::is_real_rooted(self)
    }

    /// Positions where two sequences differ, padding the shorter with zeros.
    pub fn diff_positions(&self, other: &CoeffSeq) -> Vec<usize> {
        let len = self.coeffs.len().max(other.coeffs.len());
        let zero = BigUint::zero();
        (0..len)
            .filter(|&i| {
                self.coeffs.get(i).unwrap_or(&zero) != other.coeffs.get(i).unwrap_or(&zero)
            })
            .collect()
    }
}

/// Expands `prod_i (x^i + 1)^{alpha_i}`, the open-set polynomial of a
/// partition topology of the given type.
pub fn expand_binomial_product(ty: &PartitionType) -> Result<CoeffSeq> {
    check_ground_size(ty.ground_size())?;
    let mut acc = CoeffSeq::one();
    for (i, &count) in ty.counts().iter().enumerate() {
        if count == 0 {
            continue;
        }
        // x^{i+1} + 1
        let mut factor = vec![BigUint::zero(); i + 2];
        factor[0] = BigUint::one();
        factor[i + 1] = BigUint::one();
        let factor = CoeffSeq::new(factor);
        for _ in 0..count {
            acc = acc.convolve(&factor);
        }
    }
    Ok(acc)
}

/// Evaluates the composition sum
/// `u_m = sum_{j_1 + 2 j_2 + .. + l j_l = m} C(alpha_1, j_1) .. C(alpha_l, j_l)`
/// directly, without expanding the product.
pub fn partition_coefficient(ty: &PartitionType, m: usize) -> Result<BigUint> {
    let n = ty.ground_size() as usize;
    if m > n {
        return Err(Error::IndexOutOfRange {
            index: m,
            degree: n,
        });
    }

    fn binomial(n: u32, k: u32) -> BigUint {
        if k > n {
            return BigUint::zero();
        }
        let mut acc = BigUint::one();
        for j in 1..=k as u64 {
            acc = acc * BigUint::from(n as u64 - j + 1) / BigUint::from(j);
        }
        acc
    }

    fn rec(alpha: &[u32], part: usize, remaining: usize, acc: &BigUint, total: &mut BigUint) {
        if part == alpha.len() {
            if remaining == 0 {
                *total += acc;
            }
            return;
        }
        let size = part + 1;
        let max_j = (alpha[part] as usize).min(remaining / size);
        for j in 0..=max_j {
            let term = acc * binomial(alpha[part], j as u32);
            if !term.is_zero() {
                rec(alpha, part + 1, remaining - size * j, &term, total);
            }
        }
    }

    let mut total = BigUint::zero();
    rec(ty.counts(), 0, m, &BigUint::one(), &mut total);
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    fn seq(cs: &[u64]) -> CoeffSeq {
        CoeffSeq::from_u64s(cs)
    }

    #[test]
    fn unimodal_examples() {
        assert_eq!(seq(&[1, 1, 4, 5, 4, 2, 1]).unimodal_modes(), Some((3, 3)));
        assert!(!seq(&[0, 1, 0, 0, 2, 1]).is_unimodal());
        // (x+1)^3 + 2x^4 + x^5 expanded
        assert!(!seq(&[1, 3, 3, 1, 2, 1]).is_unimodal());
        assert_eq!(seq(&[1, 2, 2, 1]).unimodal_modes(), Some((1, 2)));
        assert_eq!(seq(&[1]).unimodal_modes(), Some((0, 0)));
    }

    #[test]
    fn log_concavity_examples() {
        let a = seq(&[1, 1, 4, 5, 4, 2, 1]);
        assert!(!a.is_log_concave()); // 1*1 < 1*4
        let b = seq(&[0, 1, 0, 0, 2, 1]);
        assert!(b.is_log_concave());
        assert!(b.has_internal_zeros());
        let c = seq(&[1, 3, 3, 1]);
        assert!(c.is_log_concave());
        assert!(c.is_slc());
        assert!(c.is_niz());
    }

    #[test]
    fn newton_examples() {
        assert!(seq(&[1, 2, 1]).newton_check().unwrap()); // equality at j = 1
        assert!(!seq(&[1, 1, 2, 2, 1, 1]).newton_check().unwrap());
        for n in 2..=10 {
            assert!(CoeffSeq::binomial_row(n).newton_check().unwrap());
        }
        assert!(matches!(
            seq(&[1, 1]).newton_check(),
            Err(Error::DegreeTooSmall { .. })
        ));
    }

    #[test]
    fn max_lc_ratio_examples() {
        let four = seq(&[1, 2, 1]).max_lc_ratio().unwrap();
        assert_eq!(four, BigRational::from_integer(4.into()));
        let zero = seq(&[1, 0, 1, 1, 0, 1]).max_lc_ratio().unwrap();
        assert_eq!(zero, BigRational::from_integer(0.into()));
        let three = seq(&[1, 3, 3, 1]).max_lc_ratio().unwrap();
        assert_eq!(three, BigRational::from_integer(3.into()));
        assert!(seq(&[1, 1]).max_lc_ratio().is_none());
        assert!(seq(&[1, 0, 0, 1]).max_lc_ratio().is_none());
    }

    #[test]
    fn convolve_and_reverse() {
        assert_eq!(seq(&[1, 1]).convolve(&seq(&[1, 1])), seq(&[1, 2, 1]));
        assert_eq!(
            seq(&[1, 0, 1]).convolve(&seq(&[1, 0, 0, 1])),
            seq(&[1, 0, 1, 1, 0, 1])
        );
        assert_eq!(seq(&[1, 3, 3, 1, 2, 1]).reversed(), seq(&[1, 2, 1, 3, 3, 1]));
    }

    #[test]
    fn binomial_product_expansions() {
        let ty = PartitionType::new(vec![1, 2]).unwrap();
        assert_eq!(
            expand_binomial_product(&ty).unwrap(),
            seq(&[1, 1, 2, 2, 1, 1])
        );
        let discrete = PartitionType::new(vec![4]).unwrap();
        assert_eq!(
            expand_binomial_product(&discrete).unwrap(),
            CoeffSeq::binomial_row(4)
        );
        let ty = PartitionType::new(vec![0, 1, 1]).unwrap();
        assert_eq!(
            expand_binomial_product(&ty).unwrap(),
            seq(&[1, 0, 1, 1, 0, 1])
        );
    }

    #[test]
    fn composition_sum_matches_expansion() {
        // Two independent computations of the same coefficients.
        for n in 1..=10u32 {
            for ty in crate::partition::partition_types_of(n) {
                let expanded = expand_binomial_product(&ty).unwrap();
                for m in 0..=n as usize {
                    assert_eq!(
                        &partition_coefficient(&ty, m).unwrap(),
                        expanded.get(m).unwrap(),
                        "type {ty:?} coefficient {m}"
                    );
                }
                assert!(partition_coefficient(&ty, n as usize + 1).is_err());
            }
        }
    }

    #[test]
    fn composition_sum_edges() {
        let ty = PartitionType::new(vec![1, 2]).unwrap();
        assert_eq!(partition_coefficient(&ty, 2).unwrap(), BigUint::from(2u32));
        assert_eq!(partition_coefficient(&ty, 0).unwrap(), BigUint::one());
        assert_eq!(partition_coefficient(&ty, 5).unwrap(), BigUint::one());
    }

    #[test]
    fn diff_positions_pads() {
        let d = seq(&[1, 2, 1]).diff_positions(&seq(&[1, 2, 1, 3]));
        assert_eq!(d, Vec::from([3]));
        assert!(seq(&[1, 2, 1]).diff_positions(&seq(&[1, 2, 1])).is_empty());
    }
}
