use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Truncated formal power series `sum_{k < order} a_k x^k` over the
/// rationals. Arithmetic never extends the truncation order.
#[derive(Clone, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<Rational>,
}

impl PowerSeries {
    pub fn zero(order: usize) -> Self {
        PowerSeries {
            coeffs: vec![Rational::zero(); order],
        }
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        if order > 0 {
            s.coeffs[0] = c;
        }
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    /// The series `x`.
    pub fn x(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order > 1 {
            s.coeffs[1] = Rational::one();
        }
        s
    }

    /// Coefficients beyond `order` are dropped, missing ones are zero.
    pub fn from_coeffs(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order, Rational::zero());
        PowerSeries { coeffs }
    }

    pub fn from_integers<I, T>(values: I, order: usize) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let coeffs = values
            .into_iter()
            .take(order)
            .map(|v| Rational::from_integer(v.into()))
            .collect();
        Self::from_coeffs(coeffs, order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    fn same_order(&self, other: &Self) -> Result<()> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(Error::OrderMismatch(self.order(), other.order()))
        }
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        Ok(PowerSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn difference(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        Ok(PowerSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Truncated Cauchy product.
    pub fn product(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        let n = self.order();
        let mut out = vec![Rational::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..n - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Ok(PowerSeries { coeffs: out })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.order();
        if n == 0 {
            return Ok(self.clone());
        }
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let inv0 = a0.recip();
        let mut b = Vec::with_capacity(n);
        b.push(inv0.clone());
        for k in 1..n {
            let acc: Rational = (1..=k).map(|i| &self.coeffs[i] * &b[k - i]).sum();
            b.push(-acc * &inv0);
        }
        Ok(PowerSeries { coeffs: b })
    }

    pub fn quotient(&self, other: &Self) -> Result<Self> {
        self.product(&other.inverse()?)
    }

    /// Square root with constant term 1, by Newton iteration
    /// `b <- (b + a / b) / 2`, doubling the working precision each step.
    pub fn sqrt(&self) -> Result<Self> {
        let n = self.order();
        if n == 0 {
            return Ok(self.clone());
        }
        if !self.coeffs[0].is_one() {
            return Err(Error::ConstantTermNotOne);
        }
        let half = Rational::new(BigInt::one(), BigInt::from(2));
        let mut b = PowerSeries::one(1);
        let mut prec = 1;
        while prec < n {
            prec = (2 * prec).min(n);
            let a = self.truncated(prec);
            let b_ext = b.truncated(prec);
            let next = b_ext.sum(&a.quotient(&b_ext)?)?.scale(&half);
            b = next;
        }
        Ok(b)
    }

    /// Same coefficients, different truncation order.
    pub fn truncated(&self, order: usize) -> Self {
        Self::from_coeffs(self.coeffs.clone(), order)
    }

    /// `x * self`, keeping the order.
    pub fn mul_x(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.order());
        if self.order() > 0 {
            coeffs.push(Rational::zero());
            coeffs.extend(self.coeffs[..self.order() - 1].iter().cloned());
        }
        PowerSeries { coeffs }
    }

    /// `self / x`. The constant term must vanish; the result has order one
    /// less than `self`.
    pub fn div_x(&self) -> Result<Self> {
        match self.coeffs.first() {
            None => Err(Error::InternalInconsistency(
                "division by x of an empty series".into(),
            )),
            Some(c) if !c.is_zero() => Err(Error::InternalInconsistency(format!(
                "division by x with nonzero constant term {c}"
            ))),
            Some(_) => Ok(PowerSeries {
                coeffs: self.coeffs[1..].to_vec(),
            }),
        }
    }

    /// `f(c x)`.
    pub fn scale_argument(&self, c: &Rational) -> Self {
        let mut power = Rational::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| {
                let v = a * &power;
                power *= c;
                v
            })
            .collect();
        PowerSeries { coeffs }
    }

    /// Coefficients as integers, if all are integral.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }
}

impl fmt::Debug for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}] + O(x^{})", terms.join(", "), self.order())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(v: &[i64], order: usize) -> PowerSeries {
        PowerSeries::from_integers(v.iter().copied(), order)
    }

    fn r(p: i64, q: i64) -> Rational {
        Rational::new(p.into(), q.into())
    }

    #[test]
    fn product_truncates() {
        assert_eq!(
            s(&[1, 1], 3).product(&s(&[1, -1], 3)).unwrap(),
            s(&[1, 0, -1], 3)
        );
        assert_eq!(
            s(&[0, 1], 2).product(&s(&[0, 1], 2)).unwrap(),
            PowerSeries::zero(2)
        );
        let a = s(&[3, 1, 4], 3);
        assert_eq!(a.sum(&PowerSeries::zero(3)).unwrap(), a);
        assert_eq!(
            a.sum(&PowerSeries::zero(2)),
            Err(Error::OrderMismatch(3, 2))
        );
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(s(&[1, -1], 5).inverse().unwrap(), s(&[1, 1, 1, 1, 1], 5));
        assert_eq!(PowerSeries::one(4).inverse().unwrap(), PowerSeries::one(4));
        assert_eq!(
            PowerSeries::constant(r(2, 1), 3).inverse().unwrap(),
            PowerSeries::constant(r(1, 2), 3)
        );
        assert_eq!(s(&[0, 1], 3).inverse(), Err(Error::ZeroConstantTerm));
    }

    #[test]
    fn sqrt_examples() {
        // sqrt(1 - 4x) = 1 - 2x C(x)
        assert_eq!(
            s(&[1, -4], 6).sqrt().unwrap(),
            s(&[1, -2, -2, -4, -10, -28], 6)
        );
        assert_eq!(PowerSeries::one(3).sqrt().unwrap(), PowerSeries::one(3));
        assert_eq!(s(&[1, 2, 1], 5).sqrt().unwrap(), s(&[1, 1], 5));
        assert_eq!(s(&[2, 1], 3).sqrt(), Err(Error::ConstantTermNotOne));
    }

    #[test]
    fn div_x_requires_vanishing_constant() {
        assert_eq!(s(&[0, 1, 2], 3).div_x().unwrap(), s(&[1, 2], 2));
        assert!(matches!(
            s(&[1, 1], 2).div_x(),
            Err(Error::InternalInconsistency(_))
        ));
    }

    fn series_strategy(order: usize) -> impl Strategy<Value = PowerSeries> {
        prop::collection::vec((-20i64..=20, 1i64..=6), order - 1).prop_map(move |tail| {
            let mut coeffs = vec![Rational::one()];
            coeffs.extend(tail.into_iter().map(|(p, q)| r(p, q)));
            PowerSeries::from_coeffs(coeffs, order)
        })
    }

    proptest! {
        #[test]
        fn sqrt_squares_back(a in series_strategy(8)) {
            let b = a.sqrt().unwrap();
            prop_assert_eq!(b.product(&b).unwrap(), a);
        }

        #[test]
        fn inverse_multiplies_to_one(a in series_strategy(8), c in 1i64..5) {
            let a = a.scale(&r(c, 3));
            let b = a.inverse().unwrap();
            prop_assert_eq!(a.product(&b).unwrap(), PowerSeries::one(8));
        }
    }
}
