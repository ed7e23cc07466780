//! Integer Laurent polynomials in one variable `v`, the coefficient ring
//! `Z[v, v^-1]` of the Hecke algebra.
//!
//! Storage is dense over the support interval: a lowest exponent and the
//! run of coefficients from there up. The representation is normalized so
//! that structural equality coincides with equality of polynomials.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use dashu_int::IBig;
use dashu_ratio::RBig;

/// Degree of a Laurent polynomial; the zero polynomial has degree `-inf`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Degree {
    NegInfinity,
    Finite(i32),
}

impl Degree {
    pub fn finite(self) -> Option<i32> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Subsets of `Z[v, v^-1]` that membership statements quantify over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Cone {
    /// `Z[v^-1]`: no positive powers.
    NonPositive,
    /// `v^a Z[v^-1]`: degree at most `a`.
    Shifted(i32),
    /// `Z[v^2]`: only even exponents.
    EvenIntegral,
    /// `N[v^2]`: only even exponents, all coefficients nonnegative.
    EvenNatural,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LaurentError {
    #[error("cannot evaluate a Laurent polynomial at zero")]
    EvalAtZero,
}

/// An element of `Z[v, v^-1]`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    // exponent of coeffs[0]; 0 when the polynomial is zero
    low: i32,
    coeffs: Vec<IBig>,
}

impl LaurentPoly {
    pub const fn zero() -> Self {
        LaurentPoly { low: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(IBig::ONE, 0)
    }

    pub fn constant(c: impl Into<IBig>) -> Self {
        Self::monomial(c.into(), 0)
    }

    /// `c * v^exp`.
    pub fn monomial(c: IBig, exp: i32) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { low: exp, coeffs: alloc::vec![c] }
    }

    /// `v^exp`.
    pub fn v_pow(exp: i32) -> Self {
        Self::monomial(IBig::ONE, exp)
    }

    /// `v^n - v^-n`, the coefficient appearing in the quadratic relation.
    pub fn xi(n: i32) -> Self {
        Self::from_terms([(n, IBig::ONE), (-n, IBig::NEG_ONE)])
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i32, C)>,
        C: Into<IBig>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, &c.into());
        }
        p
    }

    /// Coefficients starting at exponent `low`.
    pub fn from_coeffs(low: i32, coeffs: Vec<IBig>) -> Self {
        let mut p = LaurentPoly { low, coeffs };
        p.normalize();
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn degree(&self) -> Degree {
        if self.is_zero() {
            Degree::NegInfinity
        } else {
            Degree::Finite(self.high())
        }
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<i32> {
        (!self.is_zero()).then_some(self.low)
    }

    fn high(&self) -> i32 {
        self.low + self.coeffs.len() as i32 - 1
    }

    pub fn coeff(&self, exp: i32) -> IBig {
        self.coeff_ref(exp).cloned().unwrap_or(IBig::ZERO)
    }

    fn coeff_ref(&self, exp: i32) -> Option<&IBig> {
        if exp < self.low {
            return None;
        }
        self.coeffs.get((exp - self.low) as usize)
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, &IBig)> + '_ {
        let low = self.low;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (low + i as i32, c))
    }

    /// The substitution `v -> v^-1`.
    pub fn bar(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        LaurentPoly { low: -self.high(), coeffs }
    }

    /// Multiplication by `v^k`.
    pub fn shift(&self, k: i32) -> Self {
        let mut p = self.clone();
        if !p.is_zero() {
            p.low += k;
        }
        p
    }

    /// The part with exponents strictly below `bound`.
    pub fn truncate_below(&self, bound: i32) -> Self {
        if self.is_zero() || bound <= self.low {
            return Self::zero();
        }
        let keep = ((bound - self.low) as usize).min(self.coeffs.len());
        Self::from_coeffs(self.low, self.coeffs[..keep].to_vec())
    }

    pub fn in_cone(&self, cone: Cone) -> bool {
        match cone {
            Cone::NonPositive => self.degree() <= Degree::Finite(0),
            Cone::Shifted(a) => self.degree() <= Degree::Finite(a),
            Cone::EvenIntegral => self.terms().all(|(e, _)| e % 2 == 0),
            Cone::EvenNatural => self.terms().all(|(e, c)| e % 2 == 0 && *c > IBig::ZERO),
        }
    }

    /// Exact evaluation at `v = c`.
    pub fn eval(&self, c: &RBig) -> Result<RBig, LaurentError> {
        if c.is_zero() {
            return Err(LaurentError::EvalAtZero);
        }
        if self.is_zero() {
            return Ok(RBig::ZERO);
        }
        // Horner in v over the stored run, then scale by c^low.
        let mut acc = RBig::ZERO;
        for a in self.coeffs.iter().rev() {
            acc = acc * c + RBig::from(a.clone());
        }
        Ok(acc * rational_pow(c, self.low))
    }

    /// Evaluation at `v = 1`, which needs no rationals.
    pub fn eval_at_one(&self) -> IBig {
        self.coeffs.iter().fold(IBig::ZERO, |acc, c| acc + c)
    }

    /// `self += v^shift * other`, or `-=` when `negate`; the inner loop of
    /// Hecke products.
    pub fn add_shifted(&mut self, other: &LaurentPoly, shift: i32, negate: bool) {
        if other.is_zero() {
            return;
        }
        let olow = other.low + shift;
        let ohigh = other.high() + shift;
        if self.is_zero() {
            self.low = olow;
            self.coeffs = if negate {
                other.coeffs.iter().map(|c| -c).collect()
            } else {
                other.coeffs.clone()
            };
            return;
        }
        self.widen(olow, ohigh);
        let off = (olow - self.low) as usize;
        for (slot, c) in self.coeffs[off..].iter_mut().zip(&other.coeffs) {
            if negate {
                *slot -= c;
            } else {
                *slot += c;
            }
        }
        self.normalize();
    }

    fn add_term(&mut self, exp: i32, c: &IBig) {
        if c.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = Self::monomial(c.clone(), exp);
            return;
        }
        self.widen(exp, exp);
        self.coeffs[(exp - self.low) as usize] += c;
        self.normalize();
    }

    fn widen(&mut self, low: i32, high: i32) {
        if low < self.low {
            let pad = (self.low - low) as usize;
            self.coeffs.splice(0..0, core::iter::repeat(IBig::ZERO).take(pad));
            self.low = low;
        }
        let top = self.high();
        if high > top {
            self.coeffs
                .extend(core::iter::repeat(IBig::ZERO).take((high - top) as usize));
        }
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i32;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }
}

fn rational_pow(c: &RBig, exp: i32) -> RBig {
    let base = if exp < 0 { RBig::ONE / c } else { c.clone() };
    let mut acc = RBig::ONE;
    for _ in 0..exp.unsigned_abs() {
        acc *= &base;
    }
    acc
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<IBig> for LaurentPoly {
    fn from(c: IBig) -> Self {
        Self::constant(c)
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        self.add_shifted(rhs, 0, false);
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        self.add_shifted(rhs, 0, true);
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = alloc::vec![IBig::ZERO; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly::from_coeffs(self.low + rhs.low, coeffs)
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Mul<&IBig> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &IBig) -> LaurentPoly {
        LaurentPoly::from_coeffs(self.low, self.coeffs.iter().map(|c| c * rhs).collect())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Highest power first, e.g. `v^2 - 2 + v^-2`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().rev().enumerate() {
            let negative = *c < IBig::ZERO;
            let mag = if negative { -c } else { c.clone() };
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let unit = mag.is_one();
            if e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !unit {
                write!(f, "{mag}*")?;
            }
            if e == 1 {
                f.write_str("v")?;
            } else {
                write!(f, "v^{e}")?;
            }
        }
        Ok(())
    }
}
