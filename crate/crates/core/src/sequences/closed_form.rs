//! Guarded evaluation of `round(((3 + sqrt 17) / 2)^n / sqrt 17)`.
//!
//! `sqrt 17` is enclosed in a rational interval, the expression is evaluated
//! on both endpoints (it is monotone in each occurrence of the root), and the
//! nearest integer is accepted only when the whole interval sits at least
//! [`DECISION_MARGIN`] away from a half-integer. Precision doubles until that
//! holds or the budget runs out.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::series::Rational;
use crate::error::{Error, Result};

/// Required distance from the nearest half-integer: `10^-6`.
pub fn decision_margin() -> Rational {
    Rational::new(BigInt::one(), BigInt::from(1_000_000))
}

const START_DIGITS: u32 = 20;
const MAX_DIGITS: u32 = 640;
const MAX_N: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedForm {
    pub value: BigInt,
    /// Lower bound on the distance from the true value to the nearest
    /// half-integer.
    pub margin: Rational,
}

pub fn closed_form_2341_1423(n: usize) -> Result<BigInt> {
    Ok(closed_form_2341_1423_with_margin(n)?.value)
}

pub fn closed_form_2341_1423_with_margin(n: usize) -> Result<ClosedForm> {
    if !(1..=MAX_N).contains(&n) {
        return Err(Error::DomainError(format!(
            "closed form defined for 1 <= n <= {MAX_N}, got {n}"
        )));
    }
    let mut digits = START_DIGITS;
    while digits <= MAX_DIGITS {
        if let Some(found) = evaluate(n, digits) {
            return Ok(found);
        }
        digits *= 2;
    }
    Err(Error::PrecisionExhausted(n))
}

fn evaluate(n: usize, digits: u32) -> Option<ClosedForm> {
    let scale = BigInt::from(10).pow(digits);
    let floor = (BigInt::from(17) * &scale * &scale).sqrt();
    let root_lo = Rational::new(floor.clone(), scale.clone());
    let root_hi = Rational::new(floor + 1, scale);

    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let three = Rational::from_integer(BigInt::from(3));
    let base = |r: &Rational| (&three + r) * &half;

    let lo = pow(&base(&root_lo), n) / &root_hi;
    let hi = pow(&base(&root_hi), n) / &root_lo;

    let nearest = |x: &Rational| (x + &half).floor().to_integer();
    let value = nearest(&lo);
    if nearest(&hi) != value {
        return None;
    }
    let center = Rational::from_integer(value.clone());
    let margin = [&lo, &hi]
        .into_iter()
        .map(|x| &half - (x - &center).abs())
        .min()
        .expect("two endpoints");
    (margin >= decision_margin()).then_some(ClosedForm { value, margin })
}

fn pow(x: &Rational, n: usize) -> Rational {
    (0..n).fold(Rational::one(), |acc, _| acc * x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::rec_2341_1423;

    #[test]
    fn examples() {
        assert_eq!(closed_form_2341_1423(1).unwrap(), BigInt::from(1));
        assert_eq!(closed_form_2341_1423(3).unwrap(), BigInt::from(11));
        assert_eq!(closed_form_2341_1423(5).unwrap(), BigInt::from(139));
    }

    #[test]
    fn agrees_with_recurrence() {
        for n in 1..=20 {
            let cf = closed_form_2341_1423_with_margin(n).unwrap();
            assert_eq!(cf.value, rec_2341_1423(n), "n = {n}");
            assert!(cf.margin >= decision_margin());
        }
    }

    #[test]
    fn domain() {
        assert!(matches!(
            closed_form_2341_1423(0),
            Err(Error::DomainError(_))
        ));
        assert!(matches!(
            closed_form_2341_1423(21),
            Err(Error::DomainError(_))
        ));
    }
}
