//! Generating functions of the counting theorems, expanded exactly.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::catalan;
use super::series::{PowerSeries, Rational};
use crate::error::{Error, Result};

/// Truncation order used when none is requested.
pub const DEFAULT_ORDER: usize = 12;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum GfId {
    /// Catalan numbers.
    C,
    /// First kind avoiding {2413, 3142}.
    F,
    /// First kind avoiding {1423, 4132}.
    G,
    /// First kind avoiding {2413, 4132}, equivalently {1423, 3142}.
    H,
    /// Little Schröder numbers `sum_{n>=1} s_n x^n`.
    S,
}

impl GfId {
    pub const ALL: [GfId; 5] = [GfId::C, GfId::F, GfId::G, GfId::H, GfId::S];

    pub fn name(self) -> &'static str {
        match self {
            GfId::C => "gf-C",
            GfId::F => "gf-F",
            GfId::G => "gf-G",
            GfId::H => "gf-H",
            GfId::S => "gf-s",
        }
    }
}

impl fmt::Display for GfId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GfId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bare = s.strip_prefix("gf-").unwrap_or(s);
        match bare {
            "C" | "c" => Ok(GfId::C),
            "F" | "f" => Ok(GfId::F),
            "G" | "g" => Ok(GfId::G),
            "H" | "h" => Ok(GfId::H),
            "s" | "S" => Ok(GfId::S),
            _ => Err(Error::UnknownSeries(s.to_string())),
        }
    }
}

/// First `order` Taylor coefficients of the selected generating function.
pub fn gf_coefficients(id: GfId, order: usize) -> Result<Vec<Rational>> {
    Ok(gf_series(id, order)?.into_coeffs())
}

pub fn gf_series(id: GfId, order: usize) -> Result<PowerSeries> {
    if order == 0 {
        return Err(Error::DomainError(
            "truncation order must be positive".into(),
        ));
    }
    match id {
        GfId::C => catalan_series(order),
        GfId::F => f_series(order),
        GfId::G => g_series(order),
        GfId::H => h_series(order),
        GfId::S => s_series(order),
    }
}

fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `a + b x` at the given order.
fn linear(a: i64, b: i64, order: usize) -> PowerSeries {
    PowerSeries::from_integers([a, b], order)
}

fn agree(what: &str, a: &PowerSeries, b: &PowerSeries) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::InternalInconsistency(format!(
            "{what}: {a:?} vs {b:?}"
        )))
    }
}

/// `C(x)` from the Catalan numbers, checked against `(1 - sqrt(1 - 4x)) / (2x)`.
fn catalan_series(order: usize) -> Result<PowerSeries> {
    let from_numbers = PowerSeries::from_integers((0..order).map(catalan), order);
    let root = linear(1, -4, order + 1).sqrt()?;
    let closed = PowerSeries::one(order + 1)
        .difference(&root)?
        .div_x()?
        .scale(&Rational::new(BigInt::one(), BigInt::from(2)));
    agree("C(x) recurrence vs closed form", &from_numbers, &closed)?;
    Ok(from_numbers)
}

/// `F = (3 - sqrt(1 - 8x)) / (2 (1 + x))`, cross-checked against the root
/// of `(x + 1) F^2 - 3F + 2 = 0` with `F(0) = 1` and against
/// `1 / (1 - x C(2x))`.
fn f_series(order: usize) -> Result<PowerSeries> {
    let closed = PowerSeries::constant(int(3), order)
        .difference(&linear(1, -8, order).sqrt()?)?
        .quotient(&linear(2, 2, order))?;

    let quadratic = f_from_quadratic(order);
    agree("F closed form vs quadratic", &closed, &quadratic)?;

    let c2x = catalan_series(order)?.scale_argument(&int(2));
    let via_catalan = PowerSeries::one(order)
        .difference(&c2x.mul_x())?
        .inverse()?;
    agree("F closed form vs 1/(1 - xC(2x))", &closed, &via_catalan)?;
    Ok(closed)
}

/// Coefficientwise solution of `(x + 1) F^2 - 3F + 2 = 0` on the branch
/// `F(0) = 1`. At degree `n >= 1` the unknown `F_n` enters `F^2` as `2 F_n`,
/// which leaves `F_n = sum_{k=1}^{n-1} F_k F_{n-k} + [x^{n-1}] F^2`.
fn f_from_quadratic(order: usize) -> PowerSeries {
    let mut f: Vec<Rational> = vec![Rational::one()];
    // square[m] = [x^m] F^2, filled once F_0..F_m are known.
    let mut square: Vec<Rational> = vec![Rational::one()];
    for n in 1..order {
        let inner: Rational = (1..n).map(|k| &f[k] * &f[n - k]).sum();
        let fn_ = inner.clone() + &square[n - 1];
        f.push(fn_.clone());
        square.push(inner + fn_ * int(2));
    }
    PowerSeries::from_coeffs(f, order)
}

/// `G = (2 - (1 + x) C) / (2 - x - (1 + x) C)`.
fn g_series(order: usize) -> Result<PowerSeries> {
    let c = catalan_series(order)?;
    let one_plus_x_c = linear(1, 1, order).product(&c)?;
    let num = PowerSeries::constant(int(2), order).difference(&one_plus_x_c)?;
    let den = linear(2, -1, order).difference(&one_plus_x_c)?;
    num.quotient(&den)
}

/// `H = (1 + xC - sqrt(1 - xC - 5x)) / (2x (1 + C))`.
fn h_series(order: usize) -> Result<PowerSeries> {
    let ext = order + 1;
    let xc = catalan_series(ext)?.mul_x();
    let radicand = linear(1, -5, ext).difference(&xc)?;
    let num = PowerSeries::one(ext)
        .sum(&xc)?
        .difference(&radicand.sqrt()?)?
        .div_x()?;
    let c = catalan_series(order)?;
    let den = PowerSeries::one(order).sum(&c)?.scale(&int(2));
    num.quotient(&den)
}

/// `s(x) = (1 + x - sqrt(1 - 6x + x^2)) / 4`.
fn s_series(order: usize) -> Result<PowerSeries> {
    let root = PowerSeries::from_integers([1, -6, 1], order).sqrt()?;
    let s = linear(1, 1, order)
        .difference(&root)?
        .scale(&Rational::new(BigInt::one(), BigInt::from(4)));
    if !s.coeff(0).is_zero() {
        return Err(Error::InternalInconsistency("s(0) must vanish".into()));
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::{gen_catalan2, little_schroeder};

    fn ints(id: GfId, order: usize) -> Vec<i64> {
        gf_series(id, order)
            .unwrap()
            .integer_coeffs()
            .expect("integral")
            .into_iter()
            .map(|b| i64::try_from(b).unwrap())
            .collect()
    }

    #[test]
    fn examples() {
        assert_eq!(ints(GfId::C, 5), [1, 1, 2, 5, 14]);
        assert_eq!(ints(GfId::F, 4), [1, 1, 3, 13]);
        assert_eq!(ints(GfId::F, 5), [1, 1, 3, 13, 67]);
        assert_eq!(ints(GfId::S, 5), [0, 1, 1, 3, 11]);
    }

    #[test]
    fn catalan_functional_equation() {
        for order in 1..=12 {
            let c = gf_series(GfId::C, order).unwrap();
            let rhs = PowerSeries::one(order)
                .sum(&c.product(&c).unwrap().mul_x())
                .unwrap();
            assert_eq!(c, rhs, "order {order}");
        }
    }

    #[test]
    fn f_satisfies_quadratic_and_closed_sums() {
        for order in 1..=12 {
            let f = gf_series(GfId::F, order).unwrap();
            let lhs = PowerSeries::from_integers([1, 1], order)
                .product(&f.product(&f).unwrap())
                .unwrap()
                .difference(&f.scale(&int(3)))
                .unwrap()
                .sum(&PowerSeries::constant(int(2), order))
                .unwrap();
            assert_eq!(lhs, PowerSeries::zero(order));
        }
        let f = gf_series(GfId::F, 12).unwrap();
        for n in 0..12 {
            assert_eq!(f.coeff(n), Rational::from_integer(gen_catalan2(n)));
        }
    }

    #[test]
    fn s_matches_recurrence() {
        let s = gf_series(GfId::S, 13).unwrap();
        for n in 1..13 {
            assert_eq!(
                s.coeff(n),
                Rational::from_integer(little_schroeder(n).unwrap())
            );
        }
    }

    #[test]
    fn all_integral() {
        for id in GfId::ALL {
            assert!(
                gf_series(id, 12).unwrap().integer_coeffs().is_some(),
                "{id}"
            );
        }
    }

    #[test]
    fn ids() {
        for id in GfId::ALL {
            assert_eq!(id.name().parse::<GfId>().unwrap(), id);
        }
        assert!(matches!(
            "gf-Q".parse::<GfId>(),
            Err(Error::UnknownSeries(_))
        ));
        assert!(gf_coefficients(GfId::C, 0).is_err());
    }
}
