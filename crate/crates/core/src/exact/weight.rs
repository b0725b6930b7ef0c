use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Payload carried by a DP state.
pub(crate) trait Weight: Clone + Send + Sync {
    fn zero() -> Self;
    /// Weight of the empty path.
    fn unit() -> Self;
    fn add(&mut self, other: &Self);
    /// Adds `other` after incrementing the ascent count of every path in it.
    fn add_ascent(&mut self, other: &Self);
}

/// Plain path count; ascents are ignored.
#[derive(Clone, Default)]
pub(crate) struct Counted(pub BigUint);

impl Weight for Counted {
    fn zero() -> Self {
        Counted(BigUint::zero())
    }
    fn unit() -> Self {
        Counted(BigUint::one())
    }
    fn add(&mut self, other: &Self) {
        if !other.0.is_zero() {
            self.0 += &other.0;
        }
    }
    fn add_ascent(&mut self, other: &Self) {
        self.add(other);
    }
}

/// Counts indexed by number of ascents.
#[derive(Clone, Default)]
pub(crate) struct Distribution(Vec<BigUint>);

impl Distribution {
    pub(crate) fn into_dense(mut self, len: usize) -> Vec<BigUint> {
        debug_assert!(
            self.0.iter().skip(len).all(Zero::is_zero),
            "support bound violated"
        );
        self.0.resize(len, BigUint::zero());
        self.0
    }

    fn add_at(&mut self, other: &Self, offset: usize) {
        let need = other.0.len() + offset;
        if self.0.len() < need {
            self.0.resize(need, BigUint::zero());
        }
        for (k, c) in other.0.iter().enumerate() {
            if !c.is_zero() {
                self.0[k + offset] += c;
            }
        }
    }
}

impl Weight for Distribution {
    fn zero() -> Self {
        Distribution(Vec::new())
    }
    fn unit() -> Self {
        Distribution(vec![BigUint::one()])
    }
    fn add(&mut self, other: &Self) {
        self.add_at(other, 0);
    }
    fn add_ascent(&mut self, other: &Self) {
        self.add_at(other, 1);
    }
}

/// `(count, Σk, Σk²)` over the paths represented by a state.
#[derive(Clone, Default, Debug, PartialEq, Eq)]
pub(crate) struct MomentSums {
    pub count: BigUint,
    pub first: BigUint,
    pub second: BigUint,
}

impl Weight for MomentSums {
    fn zero() -> Self {
        MomentSums::default()
    }
    fn unit() -> Self {
        MomentSums {
            count: BigUint::one(),
            ..Default::default()
        }
    }
    fn add(&mut self, other: &Self) {
        if other.count.is_zero() {
            return;
        }
        self.count += &other.count;
        self.first += &other.first;
        self.second += &other.second;
    }
    fn add_ascent(&mut self, other: &Self) {
        if other.count.is_zero() {
            return;
        }
        // (k + 1)² = k² + 2k + 1
        self.count += &other.count;
        self.first += &other.first;
        self.first += &other.count;
        self.second += &other.second;
        self.second += &other.first << 1u32;
        self.second += &other.count;
    }
}
