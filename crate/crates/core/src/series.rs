//! Truncated Laurent series over `Q` with certified orders.
//!
//! A value represents an element of `Q((x))` known exactly on the exponent
//! window `valuation ..= order`. Coefficients beyond `order` are UNKNOWN,
//! never assumed zero; every operation computes the largest order it can
//! certify and records it. Coefficients below `valuation` are certified
//! zero. An empty window (`order = valuation - 1`) is a series known to be
//! zero through `order`.

use std::fmt;

use num::traits::{One, Signed, Zero};
use thiserror::Error;

use crate::rat::{binom_rat, factorial, rat, Rat};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    /// Inversion needs a certified nonzero leading coefficient.
    #[error("cannot invert: leading coefficient is zero or uncertified")]
    ZeroLeadingCoefficient,
    /// Composition needs `inner` to have valuation >= 1.
    #[error("cannot compose: inner series must have valuation >= 1 (found {0})")]
    InvalidComposition(i64),
    /// A residue was requested beyond the certified window.
    #[error("coefficient of x^{0} is not certified at order {1}")]
    UncertifiedCoefficient(i64, i64),
}

/// A Laurent series known exactly on `valuation ..= order`.
#[derive(Clone, PartialEq, Eq)]
pub struct Series {
    val: i64,
    /// Coefficients for exponents `val, val+1, ..., val + len - 1`.
    coeffs: Vec<Rat>,
}

impl Series {
    /// Series known to be zero through `order`.
    pub fn zero(order: i64) -> Self {
        Series { val: order + 1, coeffs: Vec::new() }
    }

    /// Constant `c`, certified through `order`.
    pub fn constant(c: Rat, order: i64) -> Self {
        Series::monomial(c, 0, order)
    }

    /// `c * x^k`, certified through `order >= k - 1`.
    pub fn monomial(c: Rat, k: i64, order: i64) -> Self {
        assert!(order >= k - 1, "order too small for monomial");
        let mut coeffs = vec![Rat::zero(); (order - k + 1) as usize];
        if !coeffs.is_empty() {
            coeffs[0] = c;
        }
        Series { val: k, coeffs }.normalized()
    }

    /// Build from an explicit coefficient window starting at `val`.
    pub fn from_window(val: i64, coeffs: Vec<Rat>) -> Self {
        Series { val, coeffs }.normalized()
    }

    fn normalized(mut self) -> Self {
        let mut trimmed = 0;
        while trimmed < self.coeffs.len() && self.coeffs[trimmed].is_zero() {
            trimmed += 1;
        }
        if trimmed > 0 {
            self.coeffs.drain(..trimmed);
            self.val += trimmed as i64;
        }
        self
    }

    pub fn valuation(&self) -> i64 {
        self.val
    }

    pub fn order(&self) -> i64 {
        self.val + self.coeffs.len() as i64 - 1
    }

    /// True when every certified coefficient is zero.
    pub fn is_zero_through_order(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Certified coefficient of `x^k`, or `None` when `k` is beyond the window.
    pub fn coeff(&self, k: i64) -> Option<Rat> {
        if k < self.val {
            Some(Rat::zero())
        } else if k <= self.order() {
            Some(self.coeffs[(k - self.val) as usize].clone())
        } else {
            None
        }
    }

    /// Coefficient of `x^{-1}`.
    pub fn residue(&self) -> Result<Rat, SeriesError> {
        self.coeff(-1)
            .ok_or_else(|| SeriesError::UncertifiedCoefficient(-1, self.order()))
    }

    /// Forget information above `order`.
    pub fn truncate(&self, order: i64) -> Self {
        if order >= self.order() {
            return self.clone();
        }
        if order < self.val {
            return Series::zero(order);
        }
        let keep = (order - self.val + 1) as usize;
        Series { val: self.val, coeffs: self.coeffs[..keep].to_vec() }.normalized()
    }

    pub fn neg(&self) -> Self {
        Series { val: self.val, coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Series::zero(self.order());
        }
        Series { val: self.val, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Exact sum; certified through `min(self.order, other.order)`.
    pub fn add(&self, other: &Series) -> Self {
        let order = self.order().min(other.order());
        let val = self.val.min(other.val).min(order + 1);
        let mut coeffs = vec![Rat::zero(); (order - val + 1) as usize];
        for (k, c) in coeffs.iter_mut().enumerate() {
            let e = val + k as i64;
            *c = self.coeff(e).unwrap() + other.coeff(e).unwrap();
        }
        Series { val, coeffs }.normalized()
    }

    pub fn sub(&self, other: &Series) -> Self {
        self.add(&other.neg())
    }

    /// Cauchy product; certified through
    /// `min(self.order + other.val, other.order + self.val)`.
    pub fn mul(&self, other: &Series) -> Self {
        let order = (self.order() + other.val).min(other.order() + self.val);
        let val = self.val + other.val;
        if order < val {
            return Series::zero(order);
        }
        let mut coeffs = vec![Rat::zero(); (order - val + 1) as usize];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let ea = self.val + i as i64;
            for (j, b) in other.coeffs.iter().enumerate() {
                let e = ea + other.val + j as i64;
                if e > order {
                    break;
                }
                if !b.is_zero() {
                    coeffs[(e - val) as usize] += a * b;
                }
            }
        }
        Series { val, coeffs }.normalized()
    }

    /// Multiplicative inverse; requires a certified nonzero leading
    /// coefficient. Certified through `self.order - 2*self.val`.
    pub fn invert(&self) -> Result<Self, SeriesError> {
        if self.coeffs.is_empty() || self.coeffs[0].is_zero() {
            return Err(SeriesError::ZeroLeadingCoefficient);
        }
        let window = self.coeffs.len();
        let c0 = &self.coeffs[0];
        let mut inv = vec![Rat::zero(); window];
        inv[0] = Rat::one() / c0;
        for k in 1..window {
            let mut acc = Rat::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j] * &inv[k - j];
                }
            }
            inv[k] = -acc / c0;
        }
        Ok(Series { val: -self.val, coeffs: inv }.normalized())
    }

    /// `d/dx` (order drops by one) or the Euler operator `x d/dx`
    /// (order preserved).
    pub fn derive(&self, euler: bool) -> Self {
        let mut coeffs: Vec<Rat> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c * rat(self.val + i as i64))
            .collect();
        if euler {
            Series { val: self.val, coeffs }.normalized()
        } else {
            // The constant term (exponent 0) has no derivative information to
            // lose; the window simply shifts down one exponent.
            if self.coeffs.is_empty() {
                return Series::zero(self.order() - 1);
            }
            Series { val: self.val - 1, coeffs }.normalized()
        }
    }

    /// `self^k` for any integer `k`; negative exponents go through `invert`.
    pub fn pow(&self, k: i64) -> Result<Self, SeriesError> {
        if k < 0 {
            return self.invert()?.pow(-k);
        }
        // With an exact representation the certified order of a product is
        // tracked by `mul`, so repeated multiplication is both simplest and
        // correct.
        let mut acc: Option<Series> = None;
        for _ in 0..k {
            acc = Some(match acc {
                None => self.clone(),
                Some(a) => a.mul(self),
            });
        }
        Ok(match acc {
            None => Series::constant(Rat::one(), self.order().max(0)),
            Some(a) => a,
        })
    }

    /// Substitute `inner` into `self`. Requires `inner.valuation >= 1`.
    pub fn compose(&self, inner: &Series) -> Result<Self, SeriesError> {
        if inner.val < 1 {
            return Err(SeriesError::InvalidComposition(inner.val));
        }
        // Terms of `self` beyond its order would contribute exponents of at
        // least (order+1) * inner.val, so the result is certified through one
        // less than that, further capped by the certified orders of the
        // computed powers of `inner`.
        let cap = (self.order() + 1) * inner.val - 1;
        let mut result = Series::zero(cap);
        if self.coeffs.is_empty() {
            return Ok(result);
        }
        let inv = if self.val < 0 { Some(inner.invert()?) } else { None };
        let mut pow_cache: Option<(i64, Series)> = None;
        for (i, c) in self.coeffs.iter().enumerate() {
            let k = self.val + i as i64;
            if c.is_zero() {
                continue;
            }
            let p = match pow_cache.take() {
                Some((kk, s)) if kk + 1 == k && kk != -1 => s.mul(inner),
                Some((kk, s)) if kk == k => s,
                _ => {
                    if k == 0 {
                        // inner^0 is exactly 1; certify it through the cap.
                        Series::constant(Rat::one(), cap)
                    } else if k > 0 {
                        inner.pow(k)?
                    } else {
                        inv.as_ref().unwrap().pow(-k)?
                    }
                }
            };
            result = result.add(&p.scale(c));
            pow_cache = Some((k, p));
        }
        Ok(result)
    }

    /// Exponential series `e^{w x}`, certified through `order`.
    pub fn exp_scaled(w: &Rat, order: i64) -> Self {
        let mut coeffs = Vec::with_capacity((order.max(0) + 1) as usize);
        let mut term = Rat::one();
        for k in 0..=order.max(-1) {
            if k > 0 {
                term = term * w / rat(k);
            }
            coeffs.push(term.clone());
        }
        Series { val: 0, coeffs }.normalized()
    }

    /// `e^x - 1`, certified through `order`.
    pub fn em1(order: i64) -> Self {
        let mut s = Series::exp_scaled(&Rat::one(), order);
        if !s.coeffs.is_empty() && s.val == 0 {
            s.coeffs[0] = Rat::zero();
        }
        s.normalized()
    }

    /// `log(1+x) = x - x^2/2 + x^3/3 - ...`, certified through `order`.
    pub fn log1p(order: i64) -> Self {
        let mut coeffs = Vec::new();
        for k in 1..=order.max(0) {
            let sign = if k % 2 == 1 { Rat::one() } else { -Rat::one() };
            coeffs.push(sign / rat(k));
        }
        Series { val: 1, coeffs }.normalized()
    }

    /// Binomial series `(1+x)^a` for rational `a`, certified through `order`.
    pub fn binomial_power(a: &Rat, order: i64) -> Self {
        let mut coeffs = Vec::with_capacity((order.max(0) + 1) as usize);
        for k in 0..=order.max(-1) {
            coeffs.push(binom_rat(a, k as u32));
        }
        Series { val: 0, coeffs }.normalized()
    }

    /// `x^j / j!` paired against `e^{xD}`-style expansions.
    pub fn taylor_monomial(j: u32, order: i64) -> Self {
        Series::monomial(Rat::one() / factorial(j), j as i64, order)
    }

    /// Equality of every coefficient certified by both sides.
    pub fn agrees_with(&self, other: &Series) -> bool {
        let order = self.order().min(other.order());
        let val = self.val.min(other.val);
        if order < val {
            return true;
        }
        for e in val..=order {
            if self.coeff(e).unwrap() != other.coeff(e).unwrap() {
                return false;
            }
        }
        true
    }

    /// JSON in the wire format `{"valuation": v, "order": T, "coeffs": [...]}`,
    /// coefficients as `p/q` strings.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "valuation": self.val,
            "order": self.order(),
            "coeffs": self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = self.val + i as i64;
            if wrote {
                if c.is_negative() {
                    write!(f, " - ")?;
                } else {
                    write!(f, " + ")?;
                }
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            match e {
                0 => write!(f, "{}", a)?,
                1 if a.is_one() => write!(f, "x")?,
                1 => write!(f, "{}*x", a)?,
                _ if a.is_one() => write!(f, "x^{}", e)?,
                _ => write!(f, "{}*x^{}", a, e)?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::ratio;

    /// Independent Bernoulli-number oracle via the defining recurrence
    /// `sum_{j=0}^{k} binom(k+1, j) B_j = 0` for `k >= 1`, `B_0 = 1`.
    pub fn bernoulli(n: usize) -> Rat {
        let mut b: Vec<Rat> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            if k == 0 {
                b.push(Rat::one());
                continue;
            }
            let mut acc = Rat::zero();
            for (j, bj) in b.iter().enumerate() {
                acc += crate::rat::binom_int(k as i64 + 1, j as u32) * bj;
            }
            b.push(-acc / rat(k as i64 + 1));
        }
        b[n].clone()
    }

    #[test]
    fn add_cancellation_and_identity() {
        let a = Series::from_window(-1, vec![rat(1), ratio(1, 2)]);
        let b = Series::monomial(rat(-1), -1, 0);
        let s = a.add(&b);
        assert_eq!(s.coeff(-1), Some(rat(0)));
        assert_eq!(s.coeff(0), Some(ratio(1, 2)));
        let z = Series::zero(10);
        assert!(a.add(&z).agrees_with(&a));
        assert_eq!(a.add(&z).order(), 0);
    }

    #[test]
    fn mul_inverse_pairs() {
        let em1 = Series::em1(12);
        let inv = em1.invert().unwrap();
        let prod = em1.mul(&inv);
        assert_eq!(prod.coeff(0), Some(rat(1)));
        for k in 1..=prod.order() {
            assert_eq!(prod.coeff(k), Some(rat(0)));
        }
        let x = Series::monomial(rat(1), 1, 8);
        let xi = Series::monomial(rat(1), -1, 8);
        assert_eq!(x.mul(&xi).coeff(0), Some(rat(1)));
    }

    #[test]
    fn invert_em1_matches_bernoulli_oracle() {
        // x/(e^x - 1) = sum B_k x^k / k!, so 1/(e^x-1) has coefficient
        // B_{k+1}/(k+1)! at x^k.
        let inv = Series::em1(20).invert().unwrap();
        assert_eq!(inv.valuation(), -1);
        for k in -1..=inv.order() {
            let expected = bernoulli((k + 1) as usize) / factorial((k + 1) as u32);
            assert_eq!(inv.coeff(k), Some(expected), "coefficient at x^{}", k);
        }
    }

    #[test]
    fn invert_geometric_and_monomial() {
        let one_plus_x = Series::from_window(0, vec![rat(1), rat(1), rat(0), rat(0), rat(0), rat(0)]);
        let inv = one_plus_x.invert().unwrap();
        for k in 0..=5 {
            let sign = if k % 2 == 0 { rat(1) } else { rat(-1) };
            assert_eq!(inv.coeff(k), Some(sign));
        }
        let x2 = Series::monomial(rat(1), 2, 6);
        assert_eq!(x2.invert().unwrap().coeff(-2), Some(rat(1)));
        assert_eq!(x2.invert().unwrap().valuation(), -2);
    }

    #[test]
    fn derive_and_residue() {
        let xi = Series::monomial(rat(1), -1, 5);
        let d = xi.derive(false);
        assert_eq!(d.coeff(-2), Some(rat(-1)));
        for n in [-3i64, 0, 2, 7] {
            let m = Series::monomial(rat(1), n, n + 4);
            let e = m.derive(true);
            assert_eq!(e.coeff(n), Some(rat(n)));
        }
        // Residue of an exact derivative vanishes whenever certified.
        let s = Series::from_window(-3, (0..9).map(|i| ratio(i - 4, 3)).collect());
        assert_eq!(s.derive(false).residue(), Ok(rat(0)));
    }

    #[test]
    fn composition_inverse_laws() {
        let log = Series::log1p(24);
        let em1 = Series::em1(24);
        let a = log.compose(&em1).unwrap();
        assert_eq!(a.coeff(1), Some(rat(1)));
        for k in a.valuation()..=a.order() {
            let want = if k == 1 { rat(1) } else { rat(0) };
            assert_eq!(a.coeff(k), Some(want), "log(e^x - 1 + 1) at x^{}", k);
        }
        let b = em1.compose(&log).unwrap();
        for k in b.valuation()..=b.order() {
            let want = if k == 1 { rat(1) } else { rat(0) };
            assert_eq!(b.coeff(k), Some(want), "e^{{log(1+z)}} - 1 at z^{}", k);
        }
    }

    #[test]
    fn compose_rejects_bad_inner() {
        let log = Series::log1p(6);
        let inner = Series::constant(rat(1), 6);
        assert!(matches!(log.compose(&inner), Err(SeriesError::InvalidComposition(0))));
    }

    #[test]
    fn exp_series_coefficients() {
        let e = Series::exp_scaled(&rat(1), 10);
        for k in 0..=10 {
            assert_eq!(e.coeff(k), Some(Rat::one() / factorial(k as u32)));
        }
        let e2 = Series::exp_scaled(&ratio(1, 2), 6);
        assert_eq!(e2.coeff(2), Some(ratio(1, 8)));
    }

    #[test]
    fn truncation_semantics() {
        let s = Series::em1(10);
        let t = s.truncate(3);
        assert_eq!(t.order(), 3);
        assert_eq!(t.coeff(3), Some(Rat::one() / factorial(3)));
        assert_eq!(t.coeff(4), None);
    }
}
