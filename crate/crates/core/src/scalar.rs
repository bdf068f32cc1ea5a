//! Exact coefficients: integer polynomials in the formal parameter `t`.
//!
//! An identity verified over `Z[t]` specializes to every commutative ring, so
//! this is the only coefficient ring the crate needs.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// A sparse integer polynomial in `t`. No zero coefficients are stored; the
/// zero polynomial is the empty map.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Scalar {
    coeffs: BTreeMap<usize, i64>,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if c != 0 {
            coeffs.insert(0, c);
        }
        Scalar { coeffs }
    }

    /// The monomial `t^n`.
    pub fn t_power(n: usize) -> Self {
        Scalar::monomial(1, n)
    }

    /// The monomial `c * t^n`.
    pub fn monomial(c: i64, n: usize) -> Self {
        let mut coeffs = BTreeMap::new();
        if c != 0 {
            coeffs.insert(n, c);
        }
        Scalar { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0) == Some(&1)
    }

    /// True when the polynomial has at most one monomial.
    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn coeff(&self, exponent: usize) -> i64 {
        self.coeffs.get(&exponent).copied().unwrap_or(0)
    }

    /// Monomials as `(exponent, coefficient)` pairs, ascending exponents.
    pub fn terms(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    /// Substitutes an integer for `t`.
    pub fn eval_at(&self, t: i64) -> i64 {
        // Horner evaluation over the sparse support.
        let mut acc = 0i64;
        let mut prev_exp = self.degree().unwrap_or(0);
        for (e, c) in self.coeffs.iter().rev() {
            acc *= t.pow((prev_exp - e) as u32);
            acc += c;
            prev_exp = *e;
        }
        acc * t.pow(prev_exp as u32)
    }

    fn insert(&mut self, exponent: usize, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.coeffs.entry(exponent).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.coeffs.remove(&exponent);
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;

    fn add(self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.insert(e, c);
        }
        out
    }
}

impl Add for Scalar {
    type Output = Scalar;

    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        for (e, c) in rhs.terms() {
            self.insert(e, c);
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;

    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        Scalar {
            coeffs: self.coeffs.iter().map(|(&e, &c)| (e, -c)).collect(),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;

    fn mul(self, rhs: &Scalar) -> Scalar {
        let mut out = Scalar::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.insert(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for Scalar {
    type Output = Scalar;

    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl fmt::Display for Scalar {
    /// Canonical text: monomials in descending exponent order, e.g.
    /// `2t^3+t-4`; the zero polynomial prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.coeffs.iter().rev().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if *c < 0 {
                    f.write_str("-")?;
                }
            } else if *c < 0 {
                f.write_str("-")?;
            } else {
                f.write_str("+")?;
            }
            match (mag, e) {
                (_, 0) => write!(f, "{mag}")?,
                (1, 1) => f.write_str("t")?,
                (1, _) => write!(f, "t^{e}")?,
                (_, 1) => write!(f, "{mag}t")?,
                (_, _) => write!(f, "{mag}t^{e}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn addition_collects_like_terms() {
        let two_t2 = &Scalar::t_power(2) + &Scalar::t_power(2);
        assert_eq!(two_t2, Scalar::monomial(2, 2));
    }

    #[test]
    fn multiplication_adds_exponents() {
        let t = Scalar::t_power(1);
        assert_eq!(&t * &t, Scalar::t_power(2));
    }

    #[test]
    fn eval_substitutes() {
        let p = &Scalar::monomial(2, 2) + &Scalar::one(); // 2t^2 + 1
        assert_eq!(p.eval_at(3), 19);
        assert_eq!(Scalar::zero().eval_at(7), 0);
        assert_eq!(Scalar::t_power(3).eval_at(0), 0);
        assert_eq!(Scalar::constant(5).eval_at(0), 5);
    }

    #[test]
    fn eval_is_a_ring_homomorphism() {
        let a = &Scalar::monomial(3, 2) + &Scalar::monomial(-1, 0);
        let b = &Scalar::t_power(1) + &Scalar::constant(4);
        for t in -3..=3 {
            assert_eq!((&a * &b).eval_at(t), a.eval_at(t) * b.eval_at(t));
            assert_eq!((&a + &b).eval_at(t), a.eval_at(t) + b.eval_at(t));
        }
    }

    #[test]
    fn zero_coefficients_are_never_stored() {
        let p = &Scalar::t_power(2) - &Scalar::t_power(2);
        assert!(p.is_zero());

        let q = &(&Scalar::t_power(1) + &Scalar::one()) * &(&Scalar::t_power(1) - &Scalar::one());
        assert_eq!(q, &Scalar::t_power(2) - &Scalar::one());
        assert_eq!(q.coeff(1), 0);
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(Scalar::zero().to_string(), "0");
        assert_eq!(Scalar::one().to_string(), "1");
        assert_eq!(Scalar::t_power(1).to_string(), "t");
        assert_eq!(Scalar::t_power(2).to_string(), "t^2");
        assert_eq!(Scalar::monomial(-1, 1).to_string(), "-t");
        let p = &(&Scalar::monomial(2, 3) + &Scalar::t_power(1)) + &Scalar::constant(-4);
        assert_eq!(p.to_string(), "2t^3+t-4");
    }
}
