//! Floating point abstraction used by the asymptotic evaluators.
//!
//! Two backends implement [`Real`]: plain `f64` (the fast path) and
//! [`BigFloat`], a binary floating point number of caller-chosen precision.
//! Precision is carried by a [`Real::Context`] value that is created per call;
//! there is no global state.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use dashu_float::round::mode::HalfEven;
use dashu_float::FBig;
use dashu_int::{IBig, UBig};
use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::ToPrimitive;

/// Ordered field with the handful of transcendental helpers the asymptotic
/// formulas need.
pub trait Real:
    Clone
    + fmt::Debug
    + PartialOrd
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    type Context: Copy + fmt::Debug + Send + Sync;

    fn from_i64(ctx: Self::Context, v: i64) -> Self;
    fn from_f64(ctx: Self::Context, v: f64) -> Self;
    fn from_bigint(ctx: Self::Context, v: &BigInt) -> Self;
    fn pi(ctx: Self::Context) -> Self;
    /// Relative accuracy of the arithmetic.
    fn epsilon(ctx: Self::Context) -> Self;
    /// Relative tolerance for iterative root finding.
    fn tolerance(ctx: Self::Context) -> Self;

    fn sqrt(&self) -> Self;
    fn powi(&self, e: i64) -> Self;
    fn to_f64(&self) -> f64;
    /// Decimal rendering with `digits` significant digits.
    fn to_decimal(&self, digits: usize) -> String;

    fn from_ratio(ctx: Self::Context, q: &BigRational) -> Self {
        Self::from_bigint(ctx, q.numer()) / Self::from_bigint(ctx, q.denom())
    }

    fn abs(&self) -> Self {
        if *self < Self::zero_like(self) {
            -self.clone()
        } else {
            self.clone()
        }
    }

    fn zero_like(&self) -> Self {
        self.clone() - self.clone()
    }
}

impl Real for f64 {
    type Context = ();

    fn from_i64(_: (), v: i64) -> Self {
        v as f64
    }
    fn from_f64(_: (), v: f64) -> Self {
        v
    }
    fn from_bigint(_: (), v: &BigInt) -> Self {
        v.to_f64().unwrap_or(f64::NAN)
    }
    fn from_ratio(_: (), q: &BigRational) -> Self {
        // Ratio<BigInt>::to_f64 rescales, so huge numerators and denominators
        // still give a finite quotient.
        q.to_f64().unwrap_or(f64::NAN)
    }
    fn pi(_: ()) -> Self {
        std::f64::consts::PI
    }
    fn epsilon(_: ()) -> Self {
        f64::EPSILON
    }
    fn tolerance(_: ()) -> Self {
        1e-14
    }
    fn sqrt(&self) -> Self {
        f64::sqrt(*self)
    }
    fn powi(&self, e: i64) -> Self {
        match i32::try_from(e) {
            Ok(e) => f64::powi(*self, e),
            Err(_) => f64::powf(*self, e as f64),
        }
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn to_decimal(&self, digits: usize) -> String {
        let digits = digits.clamp(1, 17);
        format!("{:.*e}", digits - 1, self)
    }
}

type Float = FBig<HalfEven, 2>;

#[derive(Clone, PartialEq, PartialOrd)]
pub struct BigFloat(Float);

/// Precision of a [`BigFloat`] computation, in bits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bits(pub usize);

impl Bits {
    /// Enough bits for `digits` significant decimal digits plus guard bits.
    pub fn for_digits(digits: usize) -> Self {
        Bits((digits as f64 * std::f64::consts::LOG2_10).ceil() as usize + 24)
    }
}

impl BigFloat {
    fn with_bits(x: Float, bits: Bits) -> Self {
        BigFloat(x.with_precision(bits.0).value())
    }

    pub fn precision(&self) -> usize {
        self.0.precision()
    }

    /// Renders with `digits` significant decimal digits.
    fn decimal(&self, digits: usize) -> String {
        if self.0 == Float::ZERO {
            return "0".to_string();
        }
        let dec = self
            .0
            .clone()
            .with_base_and_precision::<10>(digits.max(1))
            .value();
        dec.to_string()
    }

    fn machin_pi(bits: Bits) -> Float {
        // pi = 16 atan(1/5) - 4 atan(1/239)
        let work = Bits(bits.0 + 16);
        let atan_inv = |k: i64| -> Float {
            let one = Float::from(1).with_precision(work.0).value();
            let x = one.clone() / Float::from(k).with_precision(work.0).value();
            let x2 = x.clone() * x.clone();
            let eps = Float::from(1).with_precision(work.0).value() >> (work.0 as isize + 4);
            let mut term = x.clone();
            let mut sum = x;
            let mut j: i64 = 1;
            loop {
                term = -(term * x2.clone());
                let add = term.clone() / Float::from(2 * j + 1).with_precision(work.0).value();
                sum += add.clone();
                j += 1;
                if add <= eps && -add <= eps {
                    break;
                }
            }
            sum
        };
        let pi = atan_inv(5) * Float::from(16) - atan_inv(239) * Float::from(4);
        pi.with_precision(bits.0).value()
    }
}

fn to_ibig(v: &BigInt) -> IBig {
    let (sign, bytes) = v.to_bytes_le();
    let mag = IBig::from(UBig::from_le_bytes(&bytes));
    if sign == Sign::Minus {
        -mag
    } else {
        mag
    }
}

impl fmt::Debug for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BigFloat({})", self.decimal(20))
    }
}

impl fmt::Display for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = (self.precision() as f64 / std::f64::consts::LOG2_10).floor() as usize;
        f.write_str(&self.decimal(digits.max(1)))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for BigFloat {
            type Output = BigFloat;
            fn $m(self, rhs: BigFloat) -> BigFloat {
                BigFloat($tr::$m(self.0, rhs.0))
            }
        }
    };
}
forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for BigFloat {
    type Output = BigFloat;
    fn neg(self) -> BigFloat {
        BigFloat(-self.0)
    }
}

impl Real for BigFloat {
    type Context = Bits;

    fn from_i64(ctx: Bits, v: i64) -> Self {
        Self::with_bits(Float::from(v), ctx)
    }
    fn from_f64(ctx: Bits, v: f64) -> Self {
        let x = Float::try_from(v).expect("finite f64");
        Self::with_bits(x, ctx)
    }
    fn from_bigint(ctx: Bits, v: &BigInt) -> Self {
        // Rounding happens here when v has more bits than the context.
        BigFloat(Float::from(to_ibig(v)).with_precision(ctx.0).value())
    }
    fn from_ratio(ctx: Bits, q: &BigRational) -> Self {
        Self::from_bigint(ctx, q.numer()) / Self::from_bigint(ctx, q.denom())
    }
    fn pi(ctx: Bits) -> Self {
        BigFloat(Self::machin_pi(ctx))
    }
    fn epsilon(ctx: Bits) -> Self {
        let one = Float::from(1).with_precision(ctx.0).value();
        BigFloat(one >> (ctx.0 as isize - 1))
    }
    fn tolerance(ctx: Bits) -> Self {
        // 10^(4 - digits), `digits` being the decimal precision behind `ctx`.
        let digits = ((ctx.0.saturating_sub(24)) as f64 / std::f64::consts::LOG2_10).floor() as i64;
        Self::from_i64(ctx, 10).powi(4 - digits.max(5))
    }
    fn sqrt(&self) -> Self {
        BigFloat(self.0.sqrt())
    }
    fn powi(&self, e: i64) -> Self {
        if e < 0 {
            let one = Float::from(1).with_precision(self.precision()).value();
            BigFloat(one / self.0.powi(IBig::from(-e)))
        } else {
            BigFloat(self.0.powi(IBig::from(e)))
        }
    }
    fn to_f64(&self) -> f64 {
        self.0.to_f64().value()
    }
    fn to_decimal(&self, digits: usize) -> String {
        self.decimal(digits)
    }
    fn abs(&self) -> Self {
        if self.0 < Float::ZERO {
            -self.clone()
        } else {
            self.clone()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn big_float_pi_matches_known_digits() {
        let pi = BigFloat::pi(Bits::for_digits(40));
        let s = pi.to_decimal(35);
        assert!(s.starts_with("3.14159265358979323846264338327950"), "{s}");
    }

    #[test]
    fn big_float_sqrt_and_powers() {
        let ctx = Bits::for_digits(30);
        let two = BigFloat::from_i64(ctx, 2);
        let r = two.sqrt();
        let back = r.powi(2);
        let err = (back - two).abs().to_f64();
        assert!(err < 1e-28);
        let inv = BigFloat::from_i64(ctx, 4).powi(-2).to_f64();
        assert_eq!(inv, 1.0 / 16.0);
    }

    #[test]
    fn ratio_conversion_handles_huge_terms() {
        let big = BigInt::from(7).pow(2000);
        let q = BigRational::new(big.clone() * 3, big);
        assert_eq!(f64::from_ratio((), &q), 3.0);
        let b = BigFloat::from_ratio(Bits::for_digits(20), &q).to_f64();
        assert_eq!(b, 3.0);
    }

    #[test]
    fn f64_decimal_rendering() {
        assert_eq!(1.5f64.to_decimal(3), "1.50e0");
    }
}
