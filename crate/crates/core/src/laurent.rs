//! Integer Laurent polynomials in `q`.
//!
//! Stored densely as a lowest degree plus a run of coefficients. The run
//! never starts or ends with zero; the zero polynomial has an empty run.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{ConventionFault, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    min_deg: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            min_deg: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(BigInt::one(), 0)
    }

    /// `c·q^d`.
    pub fn monomial(c: BigInt, d: i64) -> Self {
        LaurentPoly::from_coeffs(d, vec![c])
    }

    /// `q^d`.
    pub fn q_pow(d: i64) -> Self {
        LaurentPoly::monomial(BigInt::one(), d)
    }

    pub fn constant(c: i64) -> Self {
        LaurentPoly::monomial(BigInt::from(c), 0)
    }

    /// Coefficient of `q^{min_deg + k}` at position `k`; normalizes.
    pub fn from_coeffs(min_deg: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = LaurentPoly { min_deg, coeffs };
        p.normalize();
        p
    }

    pub fn from_i64s(min_deg: i64, coeffs: &[i64]) -> Self {
        LaurentPoly::from_coeffs(min_deg, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.min_deg += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.min_deg = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.min_deg == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest degree with a nonzero coefficient; `None` for zero.
    pub fn min_degree(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.min_deg)
    }

    /// Highest degree with a nonzero coefficient; `None` for zero.
    pub fn degree(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.min_deg + self.coeffs.len() as i64 - 1)
    }

    /// Raw storage: `(min_deg, coeffs)`.
    pub fn raw(&self) -> (i64, &[BigInt]) {
        (self.min_deg, &self.coeffs)
    }

    pub fn coeff(&self, d: i64) -> BigInt {
        let k = d - self.min_deg;
        if k < 0 || k >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[k as usize].clone()
        }
    }

    /// Nonzero `(degree, coefficient)` pairs in increasing degree.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (self.min_deg + k as i64, c))
    }

    /// Multiplication by `q^d`.
    pub fn shift(&self, d: i64) -> Self {
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            min_deg: self.min_deg + d,
            coeffs: self.coeffs.clone(),
        }
    }

    /// The bar involution `q ↦ q⁻¹`.
    pub fn bar(&self) -> Self {
        let Some(top) = self.degree() else {
            return LaurentPoly::zero();
        };
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        LaurentPoly {
            min_deg: -top,
            coeffs,
        }
    }

    pub fn is_bar_invariant(&self) -> bool {
        *self == self.bar()
    }

    /// True iff every term has strictly positive degree (the zero
    /// polynomial included).
    pub fn in_q_zq(&self) -> bool {
        self.is_zero() || self.min_deg >= 1
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Value at `q = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// The unique bar-invariant `m` with `self − m ∈ qZ[q]`:
    /// `c_0 + Σ_{d>0} c_{−d}(q^d + q^{−d})`.
    pub fn bar_symmetric_part(&self) -> Self {
        if self.is_zero() || self.min_deg > 0 {
            return LaurentPoly::zero();
        }
        let lo = self.min_deg;
        let width = (2 * -lo + 1) as usize;
        let mut coeffs = vec![BigInt::zero(); width];
        for d in lo..=0 {
            let c = self.coeff(d);
            coeffs[(d - lo) as usize] = c.clone();
            coeffs[(-d - lo) as usize] = c;
        }
        LaurentPoly::from_coeffs(lo, coeffs)
    }

    /// The exact quotient `self / divisor`. Fails when no Laurent
    /// polynomial `h` with `self = divisor·h` exists.
    ///
    /// # Panics
    /// If `divisor` is zero.
    pub fn exact_div(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        let (f, g) = (&self.coeffs, &divisor.coeffs);
        if f.len() < g.len() {
            return Err(ConventionFault::InexactDivision.into());
        }
        // Both runs start with a nonzero constant term, so divide upward.
        let mut rem = f.clone();
        let qlen = f.len() - g.len() + 1;
        let mut quot = Vec::with_capacity(qlen);
        for k in 0..qlen {
            let c = &rem[k];
            if !(c % &g[0]).is_zero() {
                return Err(ConventionFault::InexactDivision.into());
            }
            let h = c / &g[0];
            if !h.is_zero() {
                for (j, gj) in g.iter().enumerate() {
                    rem[k + j] -= &h * gj;
                }
            }
            quot.push(h);
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(ConventionFault::InexactDivision.into());
        }
        Ok(LaurentPoly::from_coeffs(
            self.min_deg - divisor.min_deg,
            quot,
        ))
    }
}

/// Balanced quantum integer `[k] = q^{k−1} + q^{k−3} + … + q^{1−k}`;
/// `[−k] = −[k]`.
pub fn quantum_int(k: i64) -> LaurentPoly {
    if k == 0 {
        return LaurentPoly::zero();
    }
    let m = k.unsigned_abs() as i64;
    let sign = if k < 0 { -BigInt::one() } else { BigInt::one() };
    let mut coeffs = vec![BigInt::zero(); (2 * m - 1) as usize];
    for idx in (0..coeffs.len()).step_by(2) {
        coeffs[idx] = sign.clone();
    }
    LaurentPoly::from_coeffs(1 - m, coeffs)
}

/// `[k]! = [1][2]⋯[k]`.
pub fn quantum_factorial(k: u32) -> LaurentPoly {
    (1..=i64::from(k)).fold(LaurentPoly::one(), |acc, j| &acc * &quantum_int(j))
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        combine(self, rhs, |a, b| *a += b);
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        combine(self, rhs, |a, b| *a -= b);
    }
}

fn combine(lhs: &mut LaurentPoly, rhs: &LaurentPoly, op: impl Fn(&mut BigInt, &BigInt)) {
    if rhs.is_zero() {
        return;
    }
    if lhs.is_zero() {
        lhs.min_deg = rhs.min_deg;
        lhs.coeffs = vec![BigInt::zero(); rhs.coeffs.len()];
    }
    let lo = lhs.min_deg.min(rhs.min_deg);
    let hi = (lhs.min_deg + lhs.coeffs.len() as i64).max(rhs.min_deg + rhs.coeffs.len() as i64);
    if lo < lhs.min_deg {
        let pad = (lhs.min_deg - lo) as usize;
        lhs.coeffs
            .splice(0..0, core::iter::repeat_n(BigInt::zero(), pad));
        lhs.min_deg = lo;
    }
    lhs.coeffs.resize((hi - lo) as usize, BigInt::zero());
    let offset = (rhs.min_deg - lo) as usize;
    for (k, c) in rhs.coeffs.iter().enumerate() {
        op(&mut lhs.coeffs[offset + k], c);
    }
    lhs.normalize();
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            min_deg: self.min_deg,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly::from_coeffs(self.min_deg + rhs.min_deg, coeffs)
    }
}

/// Increasing degree: `q^-1 + 3 + 2q^2`, `-q - 4q^3`, `0`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (d, c)) in self.terms().enumerate() {
            let mag = c.abs();
            if idx == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            if d == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match d {
                1 => f.write_str("q")?,
                _ => write!(f, "q^{d}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn p(min: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_i64s(min, c)
    }

    #[test]
    fn ring_examples() {
        assert_eq!(
            &LaurentPoly::q_pow(1) * &LaurentPoly::q_pow(-1),
            LaurentPoly::one()
        );
        assert_eq!(&p(-1, &[1, 0, 1]) + &p(-1, &[-1]), LaurentPoly::q_pow(1));
        assert_eq!(&p(0, &[1, 1]) * &p(0, &[1, 1]), p(0, &[1, 2, 1]));
        assert_eq!(&p(0, &[1, 1]) - &p(0, &[1, 1]), LaurentPoly::zero());
        assert_eq!(-&p(2, &[3]), p(2, &[-3]));
    }

    #[test]
    fn canonical_form() {
        let z = p(5, &[0, 0]);
        assert!(z.is_zero());
        assert_eq!(z, LaurentPoly::zero());
        assert_eq!(p(-2, &[0, 3, 0]), p(-1, &[3]));
    }

    #[test]
    fn bar_examples() {
        assert_eq!(LaurentPoly::one().bar(), LaurentPoly::one());
        assert_eq!(LaurentPoly::q_pow(2).bar(), LaurentPoly::q_pow(-2));
        // 2q^-1 + 3 + 5q^3  ->  5q^-3 + 3 + 2q
        assert_eq!(p(-1, &[2, 3, 0, 0, 5]).bar(), p(-3, &[5, 0, 0, 3, 2]));
    }

    #[test]
    fn quantum_integers() {
        assert!(quantum_int(0).is_zero());
        assert!(quantum_int(1).is_one());
        assert_eq!(quantum_int(2), p(-1, &[1, 0, 1]));
        assert_eq!(quantum_int(-2), p(-1, &[-1, 0, -1]));
        // (q + q^-1)(q^2 + 1 + q^-2) = q^3 + 2q + 2q^-1 + q^-3
        assert_eq!(quantum_factorial(3), p(-3, &[1, 0, 2, 0, 2, 0, 1]));
        assert!(quantum_factorial(0).is_one());
        for k in 0..=50 {
            assert!(quantum_int(k).is_bar_invariant());
        }
    }

    #[test]
    fn bar_symmetric_part_examples() {
        assert!(LaurentPoly::q_pow(2).bar_symmetric_part().is_zero());
        assert_eq!(
            LaurentPoly::constant(3).bar_symmetric_part(),
            LaurentPoly::constant(3)
        );
        assert_eq!(p(-1, &[1, 3]).bar_symmetric_part(), p(-1, &[1, 3, 1]));
    }

    #[test]
    fn exact_division() {
        let two = quantum_int(2);
        assert!(two.exact_div(&two).unwrap().is_one());
        assert_eq!(
            p(-2, &[-1, 0, 0, 0, 1])
                .exact_div(&p(-1, &[-1, 0, 1]))
                .unwrap(),
            two
        );
        assert!(LaurentPoly::q_pow(1).exact_div(&p(0, &[1, 1])).is_err());
        assert!(LaurentPoly::constant(3)
            .exact_div(&LaurentPoly::constant(2))
            .is_err());
        assert!(LaurentPoly::zero().exact_div(&two).unwrap().is_zero());
    }

    #[test]
    fn rendering() {
        assert_eq!(p(-1, &[1, 3, 0, 2]).to_string(), "q^-1 + 3 + 2q^2");
        assert_eq!(p(1, &[-1, 0, -4]).to_string(), "-q - 4q^3");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(LaurentPoly::q_pow(1).to_string(), "q");
        assert_eq!(LaurentPoly::constant(-1).to_string(), "-1");
    }

    #[test]
    fn big_coefficients_do_not_overflow() {
        let big = LaurentPoly::monomial(BigInt::from(i64::MAX), 0);
        let sq = &big * &big;
        assert_eq!(sq.coeff(0), BigInt::from(i64::MAX) * BigInt::from(i64::MAX));
        assert_eq!(sq.exact_div(&big).unwrap(), big);
    }

    #[test]
    fn eval_and_degrees() {
        let f = p(-1, &[1, 3, 0, 2]);
        assert_eq!(f.eval_at_one(), BigInt::from(6));
        assert_eq!(f.degree(), Some(2));
        assert_eq!(f.min_degree(), Some(-1));
        assert_eq!(LaurentPoly::zero().degree(), None);
        assert!(p(1, &[1]).in_q_zq());
        assert!(!p(0, &[1]).in_q_zq());
    }
}
