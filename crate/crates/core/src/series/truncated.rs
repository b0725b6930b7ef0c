use super::ring::Ring;

/// Power series in `z` known up to and including `z^order`; everything above
/// is unknown, not zero.
#[derive(Clone, PartialEq, Debug)]
pub struct Series<R: Ring> {
    coeffs: Vec<R>,
    order: usize,
}

impl<R: Ring> Series<R> {
    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![R::zero(); order + 1],
            order,
        }
    }

    pub fn constant(c: R, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The monomial `c z^k`, which is zero if `k > order`.
    pub fn monomial(c: R, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Builds from an explicit prefix; missing coefficients up to `order`
    /// are zero and surplus ones are dropped.
    pub fn from_coeffs(mut coeffs: Vec<R>, order: usize) -> Self {
        coeffs.resize(order + 1, R::zero());
        Series { coeffs, order }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// `[z^n]`, or `None` beyond the truncation order.
    pub fn coeff(&self, n: usize) -> Option<&R> {
        self.coeffs.get(n)
    }

    /// Index of the first non-zero known coefficient, `order + 1` if none.
    pub fn valuation(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(self.order + 1)
    }

    pub fn truncate(mut self, order: usize) -> Self {
        if order < self.order {
            self.coeffs.truncate(order + 1);
            self.order = order;
        }
        self
    }

    pub fn map<Q: Ring>(&self, f: impl Fn(&R) -> Q) -> Series<Q> {
        Series {
            coeffs: self.coeffs.iter().map(f).collect(),
            order: self.order,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let coeffs = (0..=order)
            .map(|n| self.coeffs[n].add(&other.coeffs[n]))
            .collect();
        Series { coeffs, order }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let coeffs = (0..=order)
            .map(|n| self.coeffs[n].sub(&other.coeffs[n]))
            .collect();
        Series { coeffs, order }
    }

    pub fn neg(&self) -> Self {
        self.map(R::neg)
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|x| x.mul(c))
    }

    /// Product; the result is known as far as both error terms allow, which
    /// exceeds `min(order)` when a factor has positive valuation.
    pub fn mul(&self, other: &Self) -> Self {
        let (va, vb) = (self.valuation(), other.valuation());
        let order = (self.order + vb).min(other.order + va);
        let mut coeffs = vec![R::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().skip(va) {
            if a.is_zero() || i > order {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().skip(vb) {
                if i + j > order {
                    break;
                }
                if !b.is_zero() {
                    coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
                }
            }
        }
        Series { coeffs, order }
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::constant(R::one(), self.order + e * self.valuation());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplication by `z^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut coeffs = vec![R::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Series {
            coeffs,
            order: self.order + k,
        }
    }

    /// Division by `z^k`; `None` unless the valuation is at least `k` and
    /// `k <= order`.
    pub fn shift_down(&self, k: usize) -> Option<Self> {
        if k > self.order || self.valuation() < k {
            return None;
        }
        Some(Series {
            coeffs: self.coeffs[k..].to_vec(),
            order: self.order - k,
        })
    }

    /// Reciprocal of a series whose constant term is a unit.
    pub fn inverse(&self) -> Option<Self> {
        let inv0 = self.coeffs[0].inverse()?;
        let mut out: Vec<R> = Vec::with_capacity(self.order + 1);
        out.push(inv0.clone());
        for n in 1..=self.order {
            let mut acc = R::zero();
            for k in 1..=n {
                let a = &self.coeffs[k];
                if !a.is_zero() && !out[n - k].is_zero() {
                    acc = acc.add(&a.mul(&out[n - k]));
                }
            }
            out.push(acc.mul(&inv0).neg());
        }
        Some(Series {
            coeffs: out,
            order: self.order,
        })
    }

    /// Quotient `self / other` after cancelling the valuation of `other`;
    /// `None` if the numerator vanishes to lower order or the shifted
    /// denominator does not start with a unit.
    pub fn div(&self, other: &Self) -> Option<Self> {
        let k = other.valuation();
        let den = other.shift_down(k)?;
        let num = self.shift_down(k)?;
        Some(num.mul(&den.inverse()?))
    }
}
