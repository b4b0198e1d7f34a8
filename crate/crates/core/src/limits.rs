use crate::arith::FactorBudget;
use crate::poly::KroneckerConfig;

/// Caps and effort budgets shared by the search procedures.
#[derive(Clone, Copy, Debug)]
pub struct Limits {
    pub factor: FactorBudget,
    /// Candidate divisors tried when factoring over F_p.
    pub fp_factor_candidates: u64,
    pub kronecker: KroneckerConfig,
    /// Full-period enumeration over ℤ: at most this many residues.
    pub integer_period_cap: u64,
    /// Full-period enumeration over F_p[u]: at most this many residues.
    pub poly_period_cap: u64,
    /// Candidate `m(u)` tried by the structured ℤ[u] search, and again by its fallback.
    pub polyring_candidates: u64,
    /// Candidates tried by constant scans (ℚ[u] finder, Hilbert scans).
    pub scan_candidates: u64,
    /// Candidates examined per prime-in-progression search.
    pub prime_candidates: u64,
    /// Longest window accepted by density measurement.
    pub density_window_cap: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            factor: FactorBudget::default(),
            fp_factor_candidates: 1_000_000,
            kronecker: KroneckerConfig::default(),
            integer_period_cap: 1_000_000,
            poly_period_cap: 100_000,
            polyring_candidates: 20_000,
            scan_candidates: 10_000,
            prime_candidates: 1_000_000,
            density_window_cap: 10_000_000,
        }
    }
}

impl Limits {
    /// Every budget multiplied by `num/den` (at least 1).
    pub fn scaled(&self, num: u64, den: u64) -> Self {
        let s = |v: u64| ((v as u128 * num as u128) / den.max(1) as u128).clamp(1, u64::MAX as u128) as u64;
        Limits {
            factor: self.factor.scaled(num, den),
            fp_factor_candidates: s(self.fp_factor_candidates),
            kronecker: KroneckerConfig {
                degree_cap: self.kronecker.degree_cap,
                node_budget: s(self.kronecker.node_budget),
                value_budget: self.kronecker.value_budget.scaled(num, den),
            },
            integer_period_cap: s(self.integer_period_cap),
            poly_period_cap: s(self.poly_period_cap),
            polyring_candidates: s(self.polyring_candidates),
            scan_candidates: s(self.scan_candidates),
            prime_candidates: s(self.prime_candidates),
            density_window_cap: s(self.density_window_cap),
        }
    }
}
