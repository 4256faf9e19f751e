//! The (p,q)-interlacing calculus on root multisets.
//!
//! `f` (p,q)-interlaces `g` when r_{i+p}(g) ≤ r_i(f) ≤ r_{i−q}(g) for every
//! integer index i, under the sentinel convention of [`RootedPoly::root_at`].
//! Larger p lets roots of f sit above more roots of g, larger q below; (0,0)
//! forces equality of the multisets. Everything downstream — the splitting
//! construction, the realization chains, the generators — reduces to this
//! family of index-shifted comparisons, which is why the predicate is exact
//! (no tolerances) on stored values.

use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::RootedPoly;

/// Exact (p,q)-interlacing predicate.
pub fn is_pq_interlacing(f: &RootedPoly, g: &RootedPoly, p: usize, q: usize) -> bool {
    is_pq_interlacing_with_slack(f, g, p, q, 0.0)
}

/// Interlacing predicate with an additive slack on every inequality; the
/// verifier uses this form when the compared values come out of an
/// eigensolver rather than exact storage.
pub fn is_pq_interlacing_with_slack(
    f: &RootedPoly,
    g: &RootedPoly,
    p: usize,
    q: usize,
    slack: f64,
) -> bool {
    let (lo, hi) = index_range(f, g, p, q);
    for i in lo..=hi {
        if g.root_at(i + p as i64) > f.root_at(i) + slack {
            return false;
        }
        if f.root_at(i) > g.root_at(i - q as i64) + slack {
            return false;
        }
    }
    true
}

/// Index window outside which both inequalities are sentinel-trivial.
fn index_range(f: &RootedPoly, g: &RootedPoly, p: usize, q: usize) -> (i64, i64) {
    let span = p.max(q) as i64;
    (1 - span, f.degree().max(g.degree()) as i64 + span)
}

/// Which side of the interlacing sandwich failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Lower,
    Upper,
}

/// One failed inequality: index, side, and the signed margin (negative when
/// violated). Margins driven to ±∞ by sentinel roots are clamped to ±MAX so
/// reports stay JSON-representable.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Violation {
    pub i: i64,
    pub side: Side,
    pub slack: f64,
}

fn clamp_margin(m: f64) -> f64 {
    m.clamp(-f64::MAX, f64::MAX)
}

fn collect_violations(f: &RootedPoly, g: &RootedPoly, p: usize, q: usize) -> Vec<Violation> {
    let (lo, hi) = index_range(f, g, p, q);
    let mut out = Vec::new();
    for i in lo..=hi {
        let fv = f.root_at(i);
        let below = g.root_at(i + p as i64);
        if below > fv {
            out.push(Violation {
                i,
                side: Side::Lower,
                slack: clamp_margin(fv - below),
            });
        }
        let above = g.root_at(i - q as i64);
        if fv > above {
            out.push(Violation {
                i,
                side: Side::Upper,
                slack: clamp_margin(above - fv),
            });
        }
    }
    out
}

/// Largest violation margin of the (p,q) sandwich over all indices (0 when it
/// holds); infinite margins clamp to MAX.
pub fn worst_violation(f: &RootedPoly, g: &RootedPoly, p: usize, q: usize) -> f64 {
    collect_violations(f, g, p, q)
        .iter()
        .map(|v| -v.slack)
        .fold(0.0, f64::max)
}

/// Componentwise-least (p, q) making the interlacing hold. The scans are
/// independent because p appears only in the lower bounds and q only in the
/// upper bounds; p = deg g and q = deg f always satisfy their family, so both
/// scans terminate and every finite pair is comparable.
pub fn minimal_pq(f: &RootedPoly, g: &RootedPoly) -> (usize, usize) {
    let hi = f.degree().max(g.degree()) as i64;
    let p = (0..=g.degree())
        .find(|&p| (1..=hi).all(|i| g.root_at(i + p as i64) <= f.root_at(i)))
        .expect("p = deg g always satisfies the lower family");
    let q = (0..=f.degree())
        .find(|&q| (1..=f.degree() as i64).all(|i| f.root_at(i) <= g.root_at(i - q as i64)))
        .expect("q = deg f always satisfies the upper family");
    (p, q)
}

/// Root-counting characterization: f (p,q)-interlaces g exactly when the
/// closed-ray counts satisfy −p ≤ n(f,r) − n(g,r) ≤ q for all real r. The
/// difference is piecewise constant with jumps only at roots, and each
/// constancy interval attains its value at one of the roots, so checking the
/// union of roots covers all of ℝ (above every root the difference is 0).
pub fn root_count_criterion(f: &RootedPoly, g: &RootedPoly, p: usize, q: usize) -> bool {
    let lo = -(p as i64);
    let hi = q as i64;
    f.roots().iter().chain(g.roots().iter()).all(|&r| {
        let d = f.root_count_geq(r) as i64 - g.root_count_geq(r) as i64;
        lo <= d && d <= hi
    })
}

/// Full diagnosis of a candidate (p,q)-interlacing: the verdict, the minimal
/// comparable pair, and every failed inequality.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InterlaceReport {
    pub holds: bool,
    pub minimal_p: usize,
    pub minimal_q: usize,
    pub violations: Vec<Violation>,
}

impl InterlaceReport {
    pub fn analyze(f: &RootedPoly, g: &RootedPoly, p: usize, q: usize) -> InterlaceReport {
        let violations = collect_violations(f, g, p, q);
        let (minimal_p, minimal_q) = minimal_pq(f, g);
        InterlaceReport {
            holds: violations.is_empty(),
            minimal_p,
            minimal_q,
            violations,
        }
    }
}

/// Splits one interlacing relation into two: given f ⊴(p,q) g, builds h of
/// degree d with f ⊴(s,t) h and h ⊴(p−s,q−t) g.
///
/// Root i of h must lie in [aᵢ, bᵢ] where
///   aᵢ = max(r_{i+t}(f), r_{i+p−s}(g)),  bᵢ = min(r_{i−s}(f), r_{i−q+t}(g));
/// the interlacing hypothesis makes every such interval nonempty and the aᵢ
/// non-increasing. The admissible degree window is
///   d ∈ [max(deg f − t, deg g − p + s), min(deg f + s, deg g + q − t)],
/// exactly the range where no bᵢ degenerates to −∞. Within the windows the
/// choice rᵢ(h) = min(bᵢ, r_{i−1}(h)) — seeded with r₀ = U+1 above every
/// finite root U of f and g — is deterministic, keeps h sorted, and selects
/// stored root values unchanged wherever possible, so chains built from
/// repeated splits satisfy their interlacing postconditions exactly.
pub fn split(
    f: &RootedPoly,
    g: &RootedPoly,
    p: usize,
    q: usize,
    s: usize,
    t: usize,
    d: usize,
) -> Result<RootedPoly> {
    if s > p {
        return Err(Error::domain(format!("split: s={s} exceeds p={p}")));
    }
    if t > q {
        return Err(Error::domain(format!("split: t={t} exceeds q={q}")));
    }
    if !is_pq_interlacing(f, g, p, q) {
        return Err(Error::domain(format!(
            "split: inputs do not ({p},{q})-interlace"
        )));
    }
    let (df, dg) = (f.degree() as i64, g.degree() as i64);
    let (pi, qi, si, ti) = (p as i64, q as i64, s as i64, t as i64);
    let lo = (df - ti).max(dg - pi + si);
    let hi = (df + si).min(dg + qi - ti);
    if (d as i64) < lo || (d as i64) > hi {
        return Err(Error::domain(format!(
            "split: degree d={d} outside admissible window [{lo}, {hi}]"
        )));
    }
    let top = f.root_at(1).max(g.root_at(1));
    let mut prev = if top.is_finite() { top + 1.0 } else { 1.0 };
    let mut roots = Vec::with_capacity(d);
    for i in 1..=d as i64 {
        let a = f.root_at(i + ti).max(g.root_at(i + pi - si));
        let b = f.root_at(i - si).min(g.root_at(i - qi + ti));
        let r = b.min(prev);
        debug_assert!(r.is_finite() && r >= a, "interval [{a}, {b}] at i={i}");
        roots.push(r);
        prev = r;
    }
    RootedPoly::new(roots)
}

/// Strict variant of the interlacing relation for equal degrees n: on top of
/// the componentwise inequalities, the shifted difference vectors must carry
/// at least p (resp. q) strictly positive entries.
pub fn is_strict_pq(f: &RootedPoly, g: &RootedPoly, p: usize, q: usize) -> Result<bool> {
    if f.degree() != g.degree() {
        return Err(Error::domain(format!(
            "is_strict_pq: equal degrees required, got {} and {}",
            f.degree(),
            g.degree()
        )));
    }
    Ok(shifted_dominates(g.roots(), f.roots(), q, p)
        && shifted_dominates(f.roots(), g.roots(), p, q))
}

/// upper[j] ≥ lower[shift+j] for all overlapping j, with at least
/// `need_strict` strict inequalities. An empty overlap only satisfies a zero
/// strictness demand.
fn shifted_dominates(upper: &[f64], lower: &[f64], shift: usize, need_strict: usize) -> bool {
    let n = upper.len();
    if shift >= n {
        return need_strict == 0;
    }
    let mut strict = 0usize;
    for j in 0..n - shift {
        let gap = upper[j] - lower[shift + j];
        if gap < 0.0 {
            return false;
        }
        if gap > 0.0 {
            strict += 1;
        }
    }
    strict >= need_strict
}

/// Seeded generator for a pair with f ⊴(p,q) g: g gets n roots in [−5, 5]
/// with pairwise separation ≥ min_gap, then each root of f is drawn uniformly
/// from its admissible interval (sentinels padded by the extreme roots of g
/// ∓ 1, clipped to keep f sorted). Identical seeds reproduce identical pairs.
pub fn gen_pq_pair(
    n: usize,
    p: usize,
    q: usize,
    min_gap: f64,
    seed: u64,
) -> Result<(RootedPoly, RootedPoly)> {
    if n == 0 {
        return Err(Error::domain("gen_pq_pair: n must be at least 1"));
    }
    if min_gap.is_nan() || min_gap < 0.0 {
        return Err(Error::domain("gen_pq_pair: min_gap must be nonnegative"));
    }
    let span = 10.0 - (n - 1) as f64 * min_gap;
    if span < 0.0 {
        return Err(Error::domain(format!(
            "gen_pq_pair: min_gap {min_gap} infeasible for n={n} roots on [-5, 5]"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut offsets: Vec<f64> = (0..n).map(|_| rng.gen::<f64>() * span).collect();
    offsets.sort_unstable_by(f64::total_cmp);
    let mut g_roots: Vec<f64> = offsets
        .iter()
        .enumerate()
        .map(|(i, off)| -5.0 + off + i as f64 * min_gap)
        .collect();
    g_roots.reverse();
    let g = RootedPoly::new(g_roots)?;
    let f = draw_interlacing(&g, p, q, n, &mut rng)?;
    debug_assert!(is_pq_interlacing(&f, &g, p, q));
    Ok((f, g))
}

/// Draws a polynomial of degree `deg_f` that (p,q)-interlaces `g`. The
/// degree must lie in [deg g − p, deg g + q]; each root is uniform on its
/// admissible interval, clipped below the previous draw so the sequence
/// stays sorted. The sampled values land inside the closed intervals even
/// after rounding, so the output satisfies the exact predicate.
pub fn draw_interlacing(
    g: &RootedPoly,
    p: usize,
    q: usize,
    deg_f: usize,
    rng: &mut impl Rng,
) -> Result<RootedPoly> {
    let dg = g.degree();
    if deg_f + p < dg || deg_f > dg + q {
        return Err(Error::domain(format!(
            "draw_interlacing: degree {deg_f} incompatible with ({p},{q}) against degree {dg}"
        )));
    }
    let (pad_lo, pad_hi) = if dg >= 1 {
        (g.root_at(dg as i64) - 1.0, g.root_at(1) + 1.0)
    } else {
        (-1.0, 1.0)
    };
    let mut prev = f64::INFINITY;
    let mut roots = Vec::with_capacity(deg_f);
    for i in 1..=deg_f as i64 {
        let lo = g.root_at(i + p as i64).max(pad_lo);
        let hi = g.root_at(i - q as i64).min(pad_hi).min(prev);
        debug_assert!(lo <= hi);
        // the final min keeps rounding of lo + u·(hi−lo) from overshooting hi
        let r = if hi > lo {
            (lo + rng.gen::<f64>() * (hi - lo)).min(hi)
        } else {
            lo
        };
        roots.push(r);
        prev = r;
    }
    RootedPoly::new(roots)
}

impl std::fmt::Display for InterlaceReport {
    fn fmt(&self, out: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            out,
            "holds={} minimal=({}, {})",
            self.holds, self.minimal_p, self.minimal_q
        )?;
        for v in &self.violations {
            let side = match v.side {
                Side::Lower => "lower",
                Side::Upper => "upper",
            };
            let mut item = String::new();
            let _ = write!(item, " [i={} {} margin={:.3e}]", v.i, side, v.slack);
            out.write_str(&item)?;
        }
        Ok(())
    }
}
