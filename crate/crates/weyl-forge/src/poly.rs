//! Monic real-rooted polynomials represented by their root multisets.
//!
//! Every polynomial here is monic with all roots real, so the multiset of
//! roots in non-increasing order is a complete representation. All the
//! arithmetic the constructions need — evaluation, products, common-factor
//! splitting, derivative roots — works directly on the sorted roots; general
//! root-finding never happens outside `derivative_roots`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default tolerance under which two roots count as equal.
pub const DEFAULT_EQ_TOL: f64 = 1e-9;

/// Iteration cap for the derivative-root bisection.
const BISECT_MAX_ITERS: usize = 200;

/// Relative interval-width target for the derivative-root bisection.
const BISECT_WIDTH_TOL: f64 = 1e-13;

/// A monic real-rooted polynomial stored as roots in non-increasing order.
///
/// Degree 0 (no roots) is the constant polynomial 1. Stored entries are
/// always finite; the sentinels ±∞ exist only through [`RootedPoly::root_at`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "PolyJson")]
pub struct RootedPoly {
    roots: Vec<f64>,
}

#[derive(Deserialize)]
struct PolyJson {
    roots: Vec<f64>,
}

impl TryFrom<PolyJson> for RootedPoly {
    type Error = Error;

    fn try_from(raw: PolyJson) -> Result<Self> {
        RootedPoly::new(raw.roots)
    }
}

impl RootedPoly {
    /// Builds a polynomial from its roots in any order; rejects non-finite
    /// values and sorts non-increasing.
    pub fn new(values: impl Into<Vec<f64>>) -> Result<Self> {
        let mut roots = values.into();
        if let Some(bad) = roots.iter().find(|v| !v.is_finite()) {
            return Err(Error::invalid(format!("non-finite root {bad}")));
        }
        roots.sort_unstable_by(|a, b| b.total_cmp(a));
        Ok(Self { roots })
    }

    pub fn degree(&self) -> usize {
        self.roots.len()
    }

    pub fn roots(&self) -> &[f64] {
        &self.roots
    }

    /// 1-indexed root lookup with the sentinel convention: +∞ for i < 1 and
    /// −∞ past the last root. Monotone non-increasing over all of ℤ.
    pub fn root_at(&self, i: i64) -> f64 {
        if i < 1 {
            f64::INFINITY
        } else if i as usize > self.roots.len() {
            f64::NEG_INFINITY
        } else {
            self.roots[i as usize - 1]
        }
    }

    /// Evaluates the monic product Π (x − rᵢ). Degree 0 evaluates to 1.
    pub fn eval(&self, x: f64) -> f64 {
        self.roots.iter().map(|r| x - r).product()
    }

    /// Monic coefficients, highest degree first, by expanding Π (x − rᵢ).
    pub fn coefficients(&self) -> Vec<f64> {
        let mut coeffs = vec![1.0];
        for &r in &self.roots {
            coeffs.push(0.0);
            for k in (1..coeffs.len()).rev() {
                coeffs[k] -= r * coeffs[k - 1];
            }
        }
        coeffs
    }

    /// Number of roots in the closed ray [r, +∞).
    pub fn root_count_geq(&self, r: f64) -> usize {
        self.roots.iter().take_while(|&&v| v >= r).count()
    }

    /// Roots of the derivative, exploiting real-rootedness: a root of
    /// multiplicity m contributes itself m−1 times, and each open interval
    /// between consecutive distinct roots holds exactly one simple critical
    /// point, located by bisection on the sign of f′.
    ///
    /// The bisection runs on the logarithmic derivative Σ mⱼ/(x − dⱼ), which
    /// has the same zero as f′ inside the interval, is strictly decreasing
    /// there, and never needs evaluation at a root.
    pub fn derivative_roots(&self) -> Result<RootedPoly> {
        if self.roots.is_empty() {
            return Err(Error::domain(
                "derivative_roots: degree-0 polynomial has a constant derivative",
            ));
        }
        // Distinct roots with multiplicities, still non-increasing.
        let mut distinct: Vec<(f64, usize)> = Vec::new();
        for &r in &self.roots {
            match distinct.last_mut() {
                Some((v, m)) if *v == r => *m += 1,
                _ => distinct.push((r, 1)),
            }
        }
        let mut out = Vec::with_capacity(self.roots.len() - 1);
        for &(v, m) in &distinct {
            out.extend(std::iter::repeat_n(v, m - 1));
        }
        for w in distinct.windows(2) {
            out.push(bisect_critical(&distinct, w[1].0, w[0].0));
        }
        RootedPoly::new(out)
    }

    /// Greedy multiset split into (common part d, remainder of self, remainder
    /// of other). Walks both sorted sequences once: the current pair of roots
    /// is matched when within `eq_tol`, otherwise the larger side advances.
    /// Matched entries take the value from `self`, so d is an exact sub-multiset
    /// of `self`'s roots.
    pub fn common_roots(
        &self,
        other: &RootedPoly,
        eq_tol: f64,
    ) -> (RootedPoly, RootedPoly, RootedPoly) {
        debug_assert!(eq_tol >= 0.0);
        let (mut i, mut j) = (0usize, 0usize);
        let (mut d, mut f1, mut g1) = (Vec::new(), Vec::new(), Vec::new());
        while i < self.roots.len() && j < other.roots.len() {
            let (a, b) = (self.roots[i], other.roots[j]);
            if (a - b).abs() <= eq_tol {
                d.push(a);
                i += 1;
                j += 1;
            } else if a > b {
                f1.push(a);
                i += 1;
            } else {
                g1.push(b);
                j += 1;
            }
        }
        f1.extend_from_slice(&self.roots[i..]);
        g1.extend_from_slice(&other.roots[j..]);
        // All three stay non-increasing because the walk consumes in order.
        (
            RootedPoly { roots: d },
            RootedPoly { roots: f1 },
            RootedPoly { roots: g1 },
        )
    }

    /// Multiset union of roots — the polynomial product.
    pub fn merge_roots(&self, other: &RootedPoly) -> RootedPoly {
        let mut roots = Vec::with_capacity(self.roots.len() + other.roots.len());
        roots.extend_from_slice(&self.roots);
        roots.extend_from_slice(&other.roots);
        roots.sort_unstable_by(|a, b| b.total_cmp(a));
        RootedPoly { roots }
    }
}

/// Logarithmic derivative Σ mⱼ/(x − dⱼ) over the distinct roots.
fn log_deriv(distinct: &[(f64, usize)], x: f64) -> f64 {
    distinct.iter().map(|&(v, m)| m as f64 / (x - v)).sum()
}

/// Bisects the unique critical point in the open interval (lo, hi) between
/// two consecutive distinct roots. The logarithmic derivative decreases from
/// +∞ to −∞ across the interval, so plain sign bisection on midpoints is
/// robust; iteration stops at 200 steps or relative width 1e-13.
fn bisect_critical(distinct: &[(f64, usize)], mut lo: f64, mut hi: f64) -> f64 {
    for _ in 0..BISECT_MAX_ITERS {
        if hi - lo <= BISECT_WIDTH_TOL * (1.0 + lo.abs().max(hi.abs())) {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break; // interval exhausted in floating point
        }
        let s = log_deriv(distinct, mid);
        if s > 0.0 {
            lo = mid;
        } else if s < 0.0 {
            hi = mid;
        } else {
            return mid;
        }
    }
    0.5 * (lo + hi)
}
