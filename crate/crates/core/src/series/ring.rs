use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Commutative ring of series coefficients.
pub trait Ring: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_int(v: i64) -> Self;
    /// Multiplicative inverse if this is a unit of the ring.
    fn inverse(&self) -> Option<Self>;
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_int(v: i64) -> Self {
        BigInt::from(v)
    }
    fn inverse(&self) -> Option<Self> {
        (self.abs() == One::one()).then(|| self.clone())
    }
}

impl Ring for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_int(v: i64) -> Self {
        BigRational::from_integer(v.into())
    }
    fn inverse(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
}

/// Polynomial in `t` with integer coefficients, lowest degree first and no
/// trailing zeros.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct TPoly(Vec<BigInt>);

impl TPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        TPoly(coeffs)
    }

    /// `t - 1`.
    pub fn t_minus_one() -> Self {
        TPoly::new(vec![BigInt::from(-1), BigInt::from(1)])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    /// Coefficient of `t^k`.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.0.get(k).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn eval_one(&self) -> BigInt {
        self.0.iter().sum()
    }

    /// `Σ_k k(k-1)...(k-j+1) c_k`, the `j`-th derivative at `t = 1`.
    pub fn derivative_at_one(&self, j: usize) -> BigInt {
        self.0
            .iter()
            .enumerate()
            .map(|(k, c)| {
                let ff: BigInt = (0..j).map(|i| BigInt::from(k as i64 - i as i64)).product();
                ff * c
            })
            .sum()
    }
}

impl fmt::Debug for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, c)| !Zero::is_zero(*c))
            .map(|(k, c)| match k {
                0 => format!("{c}"),
                1 => format!("{c}t"),
                _ => format!("{c}t^{k}"),
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

impl Ring for TPoly {
    fn zero() -> Self {
        TPoly(Vec::new())
    }
    fn one() -> Self {
        TPoly(vec![One::one()])
    }
    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        TPoly::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }
    fn sub(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        TPoly::new((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }
    fn mul(&self, other: &Self) -> Self {
        if self.0.is_empty() || other.0.is_empty() {
            return TPoly::zero();
        }
        let mut out = vec![<BigInt as Zero>::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if Zero::is_zero(a) {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        TPoly::new(out)
    }
    fn neg(&self) -> Self {
        TPoly(self.0.iter().map(|c| -c).collect())
    }
    fn from_int(v: i64) -> Self {
        TPoly::new(vec![BigInt::from(v)])
    }
    fn inverse(&self) -> Option<Self> {
        match self.0.as_slice() {
            [c] => c.inverse().map(|c| TPoly(vec![c])),
            _ => None,
        }
    }
}
