//! Dense univariate polynomials in the deformation parameter `t`.
//!
//! Coefficients of every symmetric-algebra and enveloping-algebra element
//! live in `Q[t]`. The deformation parameter is an honest polynomial
//! variable, never a truncated power series: products of polynomial inputs
//! only ever produce finitely many powers of `t`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::rat::{fmt_rat, is_negative, Rat};

/// Polynomial in `t` with rational coefficients, ascending degree order.
///
/// Canonical form: empty vector for zero, otherwise the last coefficient is
/// nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TPoly {
    coeffs: Vec<Rat>,
}

impl TPoly {
    pub fn zero() -> Self {
        TPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        TPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        if c.is_zero() {
            TPoly::zero()
        } else {
            TPoly { coeffs: vec![c] }
        }
    }

    /// The monomial `c * t^k`.
    pub fn t_power(c: Rat, k: usize) -> Self {
        if c.is_zero() {
            return TPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        TPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// True when the polynomial is a constant (degree 0 or zero).
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Coefficient of `t^k`.
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    /// Degree in `t`, or `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Substitute a rational value for `t`.
    pub fn eval(&self, t: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t.clone() + c.clone();
        }
        acc
    }

    /// Exact division by `t`. Panics when the constant term is nonzero;
    /// callers only divide quantities that vanish at `t = 0`.
    pub fn div_t_exact(&self) -> Self {
        if self.is_zero() {
            return TPoly::zero();
        }
        assert!(
            self.coeffs[0].is_zero(),
            "division by t of a polynomial with nonzero constant term"
        );
        TPoly::from_vec(self.coeffs[1..].to_vec())
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return TPoly::zero();
        }
        TPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return TPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        TPoly { coeffs }
    }

    pub fn from_vec(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        TPoly { coeffs }
    }

    /// Leading rational used for sign-aware printing: the lowest-order
    /// nonzero coefficient.
    pub fn lowest_coeff(&self) -> Rat {
        self.coeffs
            .iter()
            .find(|c| !c.is_zero())
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    /// Number of nonzero `t`-terms.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }
}

impl Add for &TPoly {
    type Output = TPoly;
    fn add(self, rhs: &TPoly) -> TPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) + rhs.coeff(k));
        }
        TPoly::from_vec(coeffs)
    }
}

impl Sub for &TPoly {
    type Output = TPoly;
    fn sub(self, rhs: &TPoly) -> TPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) - rhs.coeff(k));
        }
        TPoly::from_vec(coeffs)
    }
}

impl Mul for &TPoly {
    type Output = TPoly;
    fn mul(self, rhs: &TPoly) -> TPoly {
        if self.is_zero() || rhs.is_zero() {
            return TPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        TPoly::from_vec(coeffs)
    }
}

impl Neg for &TPoly {
    type Output = TPoly;
    fn neg(self) -> TPoly {
        TPoly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                first = false;
                if is_negative(c) {
                    write!(f, "-")?;
                }
            } else if is_negative(c) {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.clone().abs();
            let coeff_is_one = mag.is_one();
            match (k, coeff_is_one) {
                (0, _) => write!(f, "{}", fmt_rat(&mag))?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{}*t", fmt_rat(&mag))?,
                (_, true) => write!(f, "t^{k}")?,
                (_, false) => write!(f, "{}*t^{k}", fmt_rat(&mag))?,
            }
        }
        Ok(())
    }
}
