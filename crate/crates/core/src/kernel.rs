//! Named residue kernels, expanded lazily and memoized per (kernel, order).
//!
//! The Zhu-style kernels are
//!
//! * `f_n(x) = sum_{i=0}^{n} binom(-n-1, i) e^{(n+1)x} / (e^x - 1)^{n+1+i}`
//!   with valuation `-(2n+1)`,
//! * `g_n(x) = e^{(n+1)x} / (e^x - 1)^{2n+2}` with valuation `-(2n+2)`,
//!
//! together with Huang's `e^x/(e^x-1)` (= `f_0`) and `e^x/(e^x-1)^2`
//! (= `g_0`), and the exponential-substitution kernels
//! `x^k e^{wx} / (e^x - 1)^{m+1}` that arise from pairing a residue in `x`
//! against `Y(e^{xL(0)}u, e^x - 1)`.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use num::traits::One;

use crate::rat::{binom_int, Rat};
use crate::series::Series;

/// Identifier of an expandable kernel.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum KernelId {
    /// `f_n(x)`, valuation `-(2n+1)`.
    F(u32),
    /// `g_n(x)`, valuation `-(2n+2)`.
    G(u32),
    /// Huang's `e^x/(e^x-1)`; identical to `F(0)`.
    HuangF,
    /// Huang's `e^x/(e^x-1)^2`; identical to `G(0)`.
    HuangG,
    /// `x^k e^{wx} / (e^x - 1)^{m+1}`.
    ExpMode { k: i64, w: Rat, m: i64 },
}

impl KernelId {
    /// Lowest exponent that can carry a nonzero coefficient.
    pub fn valuation(&self) -> i64 {
        match self {
            KernelId::F(n) => -(2 * *n as i64 + 1),
            KernelId::HuangF => -1,
            KernelId::G(n) => -(2 * *n as i64 + 2),
            KernelId::HuangG => -2,
            KernelId::ExpMode { k, m, .. } => k - m - 1,
        }
    }

    fn expand(&self, order: i64) -> Series {
        // Inversion of a valuation-1 series certified through K yields order
        // K - 2; powers lose a little more, so expand with generous slack.
        match self {
            KernelId::F(n) => {
                let n = *n as i64;
                let slack = order + 4 * n + 8;
                let em1 = Series::em1(slack);
                let exp = Series::exp_scaled(&crate::rat::rat(n + 1), slack);
                let mut acc = Series::zero(order);
                for i in 0..=n {
                    let p = em1.pow(-(n + 1 + i)).expect("e^x - 1 is invertible");
                    acc = acc.add(&exp.mul(&p).scale(&binom_int(-n - 1, i as u32)));
                }
                acc.truncate(order)
            }
            KernelId::HuangF => KernelId::F(0).expand(order),
            KernelId::G(n) => {
                let n = *n as i64;
                let slack = order + 4 * n + 8;
                let em1 = Series::em1(slack);
                let exp = Series::exp_scaled(&crate::rat::rat(n + 1), slack);
                let p = em1.pow(-(2 * n + 2)).expect("e^x - 1 is invertible");
                exp.mul(&p).truncate(order)
            }
            KernelId::HuangG => KernelId::G(0).expand(order),
            KernelId::ExpMode { k, w, m } => {
                let slack = order + 2 * m.abs() + 2 * k.abs() + 8;
                let em1 = Series::em1(slack);
                let exp = Series::exp_scaled(w, slack);
                let p = em1.pow(-(m + 1)).expect("e^x - 1 is invertible");
                let xk = Series::monomial(Rat::one(), *k, slack + k);
                xk.mul(&exp.mul(&p)).truncate(order)
            }
        }
    }
}

/// Shared memo table for kernel expansions. Values are immutable once
/// inserted; concurrent fills are idempotent by construction.
#[derive(Default)]
pub struct KernelTable {
    memo: RwLock<HashMap<(KernelId, i64), Arc<Series>>>,
}

impl KernelTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Expand `id` through `order`, exactly.
    pub fn expand(&self, id: &KernelId, order: i64) -> Arc<Series> {
        if let Some(hit) = self.memo.read().unwrap().get(&(id.clone(), order)) {
            return Arc::clone(hit);
        }
        let fresh = Arc::new(id.expand(order));
        let mut table = self.memo.write().unwrap();
        Arc::clone(table.entry((id.clone(), order)).or_insert(fresh))
    }
}

/// Process-wide kernel table; quotient builds request many orders of the
/// same kernels.
pub fn global_table() -> &'static KernelTable {
    use std::sync::OnceLock;
    static TABLE: OnceLock<KernelTable> = OnceLock::new();
    TABLE.get_or_init(KernelTable::new)
}

/// Convenience: expand through `order` via the global table.
pub fn expand_kernel(id: &KernelId, order: i64) -> Arc<Series> {
    global_table().expand(id, order)
}
