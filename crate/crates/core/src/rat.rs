//! Arbitrary-precision rationals and the handful of combinatorial helpers
//! the mode formulas need.

use num::bigint::BigInt;
use num::traits::{One, Signed, Zero};

/// Scalar field of the whole crate: reduced fractions with positive
/// denominator, as guaranteed by `num`.
pub type Rat = num::BigRational;

/// `n` as a rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `p/q` as a rational. Panics on `q = 0`.
pub fn ratio(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// `k!` as a rational.
pub fn factorial(k: u32) -> Rat {
    let mut acc = BigInt::one();
    for i in 2..=k as u64 {
        acc *= BigInt::from(i);
    }
    Rat::from_integer(acc)
}

/// Generalized binomial coefficient `binom(p, k)` for integer `p` of either
/// sign: `p (p-1) ... (p-k+1) / k!`.
pub fn binom_int(p: i64, k: u32) -> Rat {
    let mut num = BigInt::one();
    for i in 0..k as i64 {
        num *= BigInt::from(p - i);
    }
    Rat::from_integer(num) / factorial(k)
}

/// Binomial coefficient with a rational top argument, needed for the
/// `(1+x)^{wt u + n}` kernels when weights are not integers.
pub fn binom_rat(a: &Rat, k: u32) -> Rat {
    let mut acc = Rat::one();
    for i in 0..k as i64 {
        acc *= a - rat(i);
    }
    acc / factorial(k)
}

/// `m^j` with the convention `0^0 = 1`, as used in the component
/// commutator `sum_j m^j/j! (u_j v)_{[m+n]}`.
pub fn int_pow(m: i64, j: u32) -> Rat {
    if j == 0 {
        return Rat::one();
    }
    let mut acc = BigInt::one();
    for _ in 0..j {
        acc *= BigInt::from(m);
    }
    Rat::from_integer(acc)
}

/// True when `r` is an integer.
pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// `(-1)^{L(0)}`-style sign for an integer weight: `+1` for even, `-1` for odd.
pub fn neg_one_pow(r: &Rat) -> Option<Rat> {
    if !is_integer(r) {
        return None;
    }
    let numer = r.numer();
    if (numer % BigInt::from(2)).is_zero() {
        Some(Rat::one())
    } else {
        Some(-Rat::one())
    }
}

/// Signed absolute value helper for lexicographic counterexample keys.
pub fn abs(r: &Rat) -> Rat {
    r.abs()
}
