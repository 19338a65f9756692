//! Exact arithmetic in the real quadratic field Q[√3].
//!
//! Every direction that appears in the cone and triangle geometry (multiples
//! of 60° and their bisectors) has components in `{0, ±1/2, ±1, ±√3/2}`, so
//! all predicates reduce to sign tests on numbers `a + b√3` with rational
//! `a` and `b`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_rational::BigRational;

use crate::rational::Rational;

/// A number `rational + root3 * √3` with exact rational parts.
///
/// The representation is canonical because √3 is irrational, so the derived
/// `Eq`/`Hash` agree with numeric equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ExactScalar {
    rational: Rational,
    root3: Rational,
}

const THREE: Rational = Rational::Small(3, 1);

impl ExactScalar {
    pub fn new(rational: BigRational, root3: BigRational) -> Self {
        Self::from_parts(rational.into(), root3.into())
    }

    pub fn from_parts(rational: Rational, root3: Rational) -> Self {
        Self { rational, root3 }
    }

    pub fn from_rational(rational: BigRational) -> Self {
        Self::from_parts(rational.into(), Rational::ZERO)
    }

    pub fn from_int(value: i64) -> Self {
        Self::from_parts(Rational::from_int(value), Rational::ZERO)
    }

    /// `num/den` as an exact scalar. Panics if `den == 0`.
    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_parts(Rational::from_i128(num as i128, den as i128), Rational::ZERO)
    }

    pub fn zero() -> Self {
        Self::default()
    }

    /// √3
    pub fn sqrt3() -> Self {
        Self::from_parts(Rational::ZERO, Rational::ONE)
    }

    pub fn rational_part(&self) -> &Rational {
        &self.rational
    }

    pub fn root3_part(&self) -> &Rational {
        &self.root3
    }

    /// True when the √3 coefficient vanishes.
    pub fn is_rational(&self) -> bool {
        self.root3.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.root3.is_zero()
    }

    /// Exact sign as -1, 0 or +1.
    pub fn signum(&self) -> i8 {
        let a = self.rational.signum();
        let b = self.root3.signum();
        if b == 0 {
            return a;
        }
        if a == 0 || a == b {
            return b;
        }
        // Opposite signs: |a| vs |b|√3, i.e. a² vs 3b².
        match self.rational.cmp_square_with_three_times(&self.root3) {
            Ordering::Greater => a,
            Ordering::Less => b,
            // a² = 3b² with b ≠ 0 would make √3 rational.
            Ordering::Equal => unreachable!("a^2 = 3 b^2 has no rational solution with b != 0"),
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    /// Multiply by a rational constant.
    pub fn scale(&self, k: &BigRational) -> Self {
        self.scale_by(&Rational::from_big(k.clone()))
    }

    pub fn scale_by(&self, k: &Rational) -> Self {
        Self::from_parts(&self.rational * k, &self.root3 * k)
    }

    /// Multiply by √3: `(a + b√3)√3 = 3b + a√3`.
    pub fn times_sqrt3(&self) -> Self {
        Self::from_parts(&self.root3 * &THREE, self.rational.clone())
    }

    pub fn half(&self) -> Self {
        self.scale_by(&Rational::Small(1, 2))
    }

    /// Floating-point approximation, for rendering and reporting only.
    pub fn to_f64(&self) -> f64 {
        self.rational.to_f64() + self.root3.to_f64() * 3f64.sqrt()
    }

    pub fn max_ref<'a>(&'a self, other: &'a Self) -> &'a Self {
        if self >= other {
            self
        } else {
            other
        }
    }
}

impl PartialOrd for ExactScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExactScalar {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.root3 == other.root3 {
            return self.rational.cmp(&other.rational);
        }
        (self - other).signum().cmp(&0)
    }
}

impl fmt::Debug for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.root3.is_zero() {
            write!(f, "{}", self.rational)
        } else if self.rational.is_zero() {
            write!(f, "{}√3", self.root3)
        } else {
            write!(f, "{} + {}√3", self.rational, self.root3)
        }
    }
}

impl From<BigRational> for ExactScalar {
    fn from(r: BigRational) -> Self {
        Self::from_rational(r)
    }
}

impl From<i64> for ExactScalar {
    fn from(v: i64) -> Self {
        Self::from_int(v)
    }
}

impl Add<&ExactScalar> for &ExactScalar {
    type Output = ExactScalar;
    fn add(self, rhs: &ExactScalar) -> ExactScalar {
        ExactScalar::from_parts(&self.rational + &rhs.rational, &self.root3 + &rhs.root3)
    }
}

impl Add for ExactScalar {
    type Output = ExactScalar;
    fn add(self, rhs: ExactScalar) -> ExactScalar {
        &self + &rhs
    }
}

impl AddAssign<&ExactScalar> for ExactScalar {
    fn add_assign(&mut self, rhs: &ExactScalar) {
        *self = &*self + rhs;
    }
}

impl Sub<&ExactScalar> for &ExactScalar {
    type Output = ExactScalar;
    fn sub(self, rhs: &ExactScalar) -> ExactScalar {
        ExactScalar::from_parts(&self.rational - &rhs.rational, &self.root3 - &rhs.root3)
    }
}

impl Sub for ExactScalar {
    type Output = ExactScalar;
    fn sub(self, rhs: ExactScalar) -> ExactScalar {
        &self - &rhs
    }
}

impl Mul<&ExactScalar> for &ExactScalar {
    type Output = ExactScalar;
    fn mul(self, rhs: &ExactScalar) -> ExactScalar {
        // (a + b√3)(c + d√3) = (ac + 3bd) + (ad + bc)√3
        let (a, b, c, d) = (&self.rational, &self.root3, &rhs.rational, &rhs.root3);
        let rational = if b.is_zero() || d.is_zero() {
            a * c
        } else {
            &(a * c) + &(&(b * d) * &THREE)
        };
        let root3 = &(a * d) + &(b * c);
        ExactScalar::from_parts(rational, root3)
    }
}

impl Mul for ExactScalar {
    type Output = ExactScalar;
    fn mul(self, rhs: ExactScalar) -> ExactScalar {
        &self * &rhs
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar::from_parts(-&self.rational, -&self.root3)
    }
}

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        -&self
    }
}
