//! Constructive realization of interlacing data by symmetric matrices.
//!
//! Four builders, stacked on each other:
//!
//! * [`realize_rank_one`] — for f ⊴(1,0) g of equal degree, a diagonal
//!   A ∈ H(f) and a vector α with A + ααᵀ ∈ H(g);
//! * [`realize_p0`] — for f ⊴(p,0) g, a chain of p rank-one updates carrying
//!   A ∈ H(f) to B ∈ H(g);
//! * [`realize_weyl_converse`] — the full converse: for f ⊴(p,q) g, matrices
//!   A ∈ H(f), B ∈ H(g) with B − A a sum of at most p positive and at most
//!   q negative rank-one terms, built by running two ⊴(·,0) chains into a
//!   common intermediate spectrum and gluing them with an orthogonal
//!   alignment;
//! * [`realize_bordered`] — for deg g = deg f + p and f ⊴(p,0) g, a matrix
//!   in H(g) whose leading principal block is literally diag(roots of f).
//!
//! Every certificate these functions emit is meant to be re-checked by the
//! verify module; nothing here is trusted on faith.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::interlace::{is_pq_interlacing, split};
use crate::linalg::{align_orthogonal, sym_eigen, SymMatrix, ALIGN_TOL};
use crate::poly::RootedPoly;

/// Weights whose sign is only wrong by less than this relative amount are
/// treated as exactly zero (their vector entry becomes 0, which is a
/// permitted degenerate rank-one term).
const WEIGHT_CLAMP_REL: f64 = 1e-10;

/// A certificate for the two-sided converse: A ∈ H(f), B ∈ H(g), and
/// B − A = Σ plusᵢ·plusᵢᵀ − Σ minusⱼ·minusⱼᵀ with at most p plus and q minus
/// vectors (zero vectors permitted).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Realization {
    pub f: RootedPoly,
    pub g: RootedPoly,
    pub p: usize,
    pub q: usize,
    #[serde(rename = "A")]
    pub a: SymMatrix,
    #[serde(rename = "B")]
    pub b: SymMatrix,
    pub plus: Vec<Vec<f64>>,
    pub minus: Vec<Vec<f64>>,
}

/// A certificate for the bordered construction: M ∈ H(g) whose leading
/// principal (deg f)×(deg f) block is diag(roots of f), so f and g exhibit
/// the Cauchy-type interlacing of a matrix against its bordered extension.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BorderedRealization {
    pub f: RootedPoly,
    pub g: RootedPoly,
    #[serde(rename = "M")]
    pub m: SymMatrix,
}

impl BorderedRealization {
    /// Number of borders added on top of the diag(roots of f) core.
    pub fn border_depth(&self) -> usize {
        self.g.degree().saturating_sub(self.f.degree())
    }
}

/// Rank-one coupling weights for a coprime pair f1 ⊴(1,0) g1 of equal degree
/// (plain orientation) or deg g1 = deg f1 + 1 (bordered orientation): the
/// i-th weight is −cᵢ with cᵢ = g1(rᵢ) / Π_{j≠i}(rᵢ − rⱼ) over the roots of
/// f1, which interlacing forces to be ≤ 0. Returns the vector entries
/// √(−cᵢ), clamping sign-noise cᵢ ∈ (0, tol] to zero and failing on anything
/// larger.
fn rank_one_weights(f1: &RootedPoly, g1: &RootedPoly, context: &str) -> Result<Vec<f64>> {
    let roots = f1.roots();
    let mut cs = Vec::with_capacity(roots.len());
    for (i, &r) in roots.iter().enumerate() {
        let mut denom = 1.0;
        for (j, &s) in roots.iter().enumerate() {
            if j != i {
                denom *= r - s;
            }
        }
        let c = g1.eval(r) / denom;
        if !c.is_finite() {
            return Err(Error::numerical(
                format!("{context}: weight {i} is not finite (root separation too small)"),
                f64::INFINITY,
            ));
        }
        cs.push(c);
    }
    let scale = cs.iter().fold(1.0f64, |acc, c| acc.max(c.abs()));
    let tol_c = WEIGHT_CLAMP_REL * scale;
    let mut entries = Vec::with_capacity(cs.len());
    for (i, &c) in cs.iter().enumerate() {
        if c > tol_c {
            return Err(Error::numerical(
                format!("{context}: weight {i} has the wrong sign (interlacing numerically violated)"),
                c,
            ));
        }
        entries.push((-c).max(0.0).sqrt());
    }
    Ok(entries)
}

/// Distributes coprime-part vector entries over the full root list of f:
/// roots of f1 carry their entries, common roots carry 0, and the result is
/// ordered to match `f.roots()` (stable sort, so ties keep insertion order).
fn scatter_over_common(
    f: &RootedPoly,
    f1: &RootedPoly,
    d: &RootedPoly,
    entries: &[f64],
) -> Vec<f64> {
    let mut pairs: Vec<(f64, f64)> = f1
        .roots()
        .iter()
        .zip(entries)
        .map(|(&r, &e)| (r, e))
        .chain(d.roots().iter().map(|&r| (r, 0.0)))
        .collect();
    pairs.sort_by(|a, b| b.0.total_cmp(&a.0));
    debug_assert!(pairs.iter().map(|p| p.0).eq(f.roots().iter().copied()));
    pairs.into_iter().map(|p| p.1).collect()
}

/// Diagonal A ∈ H(f) and vector α with A + ααᵀ ∈ H(g), for f ⊴(1,0) g of
/// equal degree n ≥ 1.
///
/// Common roots of f and g are split off first (they contribute diagonal
/// entries with zero α entry); on the coprime remainder the classical
/// weights cᵢ = g1(rᵢ)/Π_{j≠i}(rᵢ−rⱼ) are all ≤ 0, and α entries √(−cᵢ)
/// produce the required characteristic polynomial. A is diag(roots of f) in
/// non-increasing order, with α permuted to match.
pub fn realize_rank_one(
    f: &RootedPoly,
    g: &RootedPoly,
    eq_tol: f64,
) -> Result<(SymMatrix, Vec<f64>)> {
    let n = f.degree();
    if n == 0 {
        return Err(Error::domain("realize_rank_one: degree must be at least 1"));
    }
    if g.degree() != n {
        return Err(Error::domain(format!(
            "realize_rank_one: degree mismatch {} vs {}",
            n,
            g.degree()
        )));
    }
    if !is_pq_interlacing(f, g, 1, 0) {
        return Err(Error::domain(
            "realize_rank_one: f does not (1,0)-interlace g",
        ));
    }
    let (d, f1, g1) = f.common_roots(g, eq_tol);
    let entries = rank_one_weights(&f1, &g1, "realize_rank_one")?;
    let alpha = scatter_over_common(f, &f1, &d, &entries);
    Ok((SymMatrix::diag(f.roots()), alpha))
}

/// Realization of f ⊴(p,0) g (equal degrees) by a chain of p rank-one
/// updates: A = diag(roots of f), and each step realizes one link
/// h_{k−1} ⊴(1,0) h_k of the interpolating chain, rotated into the
/// coordinates of the accumulated matrix by an orthogonal alignment. The
/// chain ends at g exactly, because the split rule only ever selects stored
/// root values.
pub fn realize_p0(f: &RootedPoly, g: &RootedPoly, p: usize, eq_tol: f64) -> Result<Realization> {
    let n = f.degree();
    if n == 0 {
        return Err(Error::domain("realize_p0: degree must be at least 1"));
    }
    if g.degree() != n {
        return Err(Error::domain(format!(
            "realize_p0: degree mismatch {} vs {}",
            n,
            g.degree()
        )));
    }
    if !is_pq_interlacing(f, g, p, 0) {
        return Err(Error::domain(format!(
            "realize_p0: f does not ({p},0)-interlace g"
        )));
    }
    let a = SymMatrix::diag(f.roots());
    let mut m = a.clone();
    let mut h_prev = f.clone();
    let mut plus = Vec::with_capacity(p);
    for k in 1..=p {
        let h_next = split(&h_prev, g, p - k + 1, 0, 1, 0, n)?;
        let (_, alpha) = realize_rank_one(&h_prev, &h_next, eq_tol)?;
        let v = align_orthogonal(&h_prev, &m)?;
        let beta = v.matvec(&alpha);
        m = m.add_outer(&beta, 1.0)?;
        plus.push(beta);
        h_prev = h_next;
    }
    debug_assert_eq!(h_prev.roots(), g.roots());
    Ok(Realization {
        f: f.clone(),
        g: g.clone(),
        p,
        q: 0,
        a,
        b: m,
        plus,
        minus: Vec::new(),
    })
}

/// The full two-sided converse: for f ⊴(p,q) g of equal degree n ≥ 1,
/// produces A ∈ H(f) and B ∈ H(g) with B − A = Σ plus·plusᵀ − Σ minus·minusᵀ
/// using at most p plus and q minus vectors.
///
/// The general case picks the intermediate polynomial h = split(f,g,p,q,p,0)
/// — so f ⊴(p,0) h and g ⊴(q,0) h — runs one chain from each side, and
/// conjugates the g-side chain by the orthogonal V = P·P1ᵀ (P, P1 the sorted
/// eigenvector matrices of the two chain endpoints, which share the spectrum
/// of h) so both chains meet in the same matrix. Equal inputs short-circuit
/// to B = A with no vectors; one-sided cases skip the gluing entirely.
pub fn realize_weyl_converse(
    f: &RootedPoly,
    g: &RootedPoly,
    p: usize,
    q: usize,
    eq_tol: f64,
) -> Result<Realization> {
    let n = f.degree();
    if n == 0 {
        return Err(Error::domain(
            "realize_weyl_converse: degree must be at least 1",
        ));
    }
    if g.degree() != n {
        return Err(Error::domain(format!(
            "realize_weyl_converse: degree mismatch {} vs {}",
            n,
            g.degree()
        )));
    }
    if !is_pq_interlacing(f, g, p, q) {
        return Err(Error::domain(format!(
            "realize_weyl_converse: f does not ({p},{q})-interlace g"
        )));
    }
    if f.roots() == g.roots() {
        let a = SymMatrix::diag(f.roots());
        return Ok(Realization {
            f: f.clone(),
            g: g.clone(),
            p,
            q,
            a: a.clone(),
            b: a,
            plus: Vec::new(),
            minus: Vec::new(),
        });
    }
    if q == 0 {
        return realize_p0(f, g, p, eq_tol);
    }
    if p == 0 {
        // f ⊴(0,q) g means g ⊴(q,0) f: run the one-sided chain from g up to
        // f and read it backwards — its plus vectors become our minus ones.
        let r = realize_p0(g, f, q, eq_tol)?;
        return Ok(Realization {
            f: f.clone(),
            g: g.clone(),
            p,
            q,
            a: r.b,
            b: r.a,
            plus: Vec::new(),
            minus: r.plus,
        });
    }

    let h = split(f, g, p, q, p, 0, n)?;
    let rf = realize_p0(f, &h, p, eq_tol)?;
    let rg = realize_p0(g, &h, q, eq_tol)?;
    // Both chain endpoints lie in H(h); glue them with V·(rg endpoint)·Vᵀ =
    // (rf endpoint).
    let c = rf.b;
    let c1 = rg.b;
    let vecs = sym_eigen(&c)?.vectors;
    let vecs1 = sym_eigen(&c1)?.vectors;
    let v = vecs.matmul_bt(&vecs1);
    let scale = c.max_abs().max(1.0);
    let residual = v.congruence_sym(&c1).max_abs_diff(&c);
    if residual > ALIGN_TOL * scale {
        return Err(Error::numerical(
            "realize_weyl_converse: chain endpoints failed to align".to_string(),
            residual,
        ));
    }
    let b = v.congruence_sym(&rg.a);
    let minus = rg.plus.iter().map(|u| v.matvec(u)).collect();
    Ok(Realization {
        f: f.clone(),
        g: g.clone(),
        p,
        q,
        a: rf.a,
        b,
        plus: rf.plus,
        minus,
    })
}

/// One border layer: for deg g = deg f + 1 and f ⊴(1,0) g, a border vector α
/// and corner a such that [[diag(roots of f), α], [αᵀ, a]] ∈ H(g).
///
/// The corner is fixed by trace matching, a = Σ roots(g) − Σ roots(f); the
/// border entries are αᵢ = √(cᵢ) with cᵢ = −g1(rᵢ)/Π_{j≠i}(rᵢ−rⱼ) ≥ 0 on the
/// coprime remainder (common roots get zero border entries), which makes the
/// bordered determinant expand to exactly g.
pub fn realize_border_step(
    f: &RootedPoly,
    g: &RootedPoly,
    eq_tol: f64,
) -> Result<(Vec<f64>, f64)> {
    if g.degree() != f.degree() + 1 {
        return Err(Error::domain(format!(
            "realize_border_step: need deg g = deg f + 1, got {} and {}",
            f.degree(),
            g.degree()
        )));
    }
    if !is_pq_interlacing(f, g, 1, 0) {
        return Err(Error::domain(
            "realize_border_step: f does not (1,0)-interlace g",
        ));
    }
    let corner = g.roots().iter().sum::<f64>() - f.roots().iter().sum::<f64>();
    let (d, f1, g1) = f.common_roots(g, eq_tol);
    let entries = rank_one_weights(&f1, &g1, "realize_border_step")?;
    let alpha = scatter_over_common(f, &f1, &d, &entries);
    Ok((alpha, corner))
}

/// The bordered construction: for p = deg g − deg f ≥ 1 and f ⊴(p,0) g,
/// produces M ∈ H(g) whose leading principal (deg f)-block is exactly
/// diag(roots of f) — each of the p border layers extends the previous
/// matrix without touching it, so the core block survives bit-for-bit.
/// deg f = 0 is allowed: the chain starts from the empty matrix.
pub fn realize_bordered(
    f: &RootedPoly,
    g: &RootedPoly,
    eq_tol: f64,
) -> Result<BorderedRealization> {
    let (df, dg) = (f.degree(), g.degree());
    if dg <= df {
        return Err(Error::domain(format!(
            "realize_bordered: need deg g > deg f, got {dg} and {df}"
        )));
    }
    let p = dg - df;
    if !is_pq_interlacing(f, g, p, 0) {
        return Err(Error::domain(format!(
            "realize_bordered: f does not ({p},0)-interlace g"
        )));
    }
    let mut m = SymMatrix::diag(f.roots());
    let mut h_prev = f.clone();
    for k in 1..=p {
        let h_next = split(&h_prev, g, p - k + 1, 0, 1, 0, df + k)?;
        let (alpha, corner) = realize_border_step(&h_prev, &h_next, eq_tol)?;
        let v = align_orthogonal(&h_prev, &m)?;
        let beta = v.matvec(&alpha);
        m = m.border_extend(&beta, corner)?;
        h_prev = h_next;
    }
    debug_assert_eq!(h_prev.roots(), g.roots());
    Ok(BorderedRealization {
        f: f.clone(),
        g: g.clone(),
        m,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{inertia, DEFAULT_ZERO_TOL};
    use crate::poly::DEFAULT_EQ_TOL;

    fn poly(roots: &[f64]) -> RootedPoly {
        RootedPoly::new(roots.to_vec()).unwrap()
    }

    fn spectrum(m: &SymMatrix) -> Vec<f64> {
        sym_eigen(m).unwrap().values
    }

    fn max_spectrum_err(m: &SymMatrix, target: &RootedPoly) -> f64 {
        spectrum(m)
            .iter()
            .zip(target.roots())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    #[test]
    fn rank_one_worked_example() {
        let f = poly(&[1.0, -1.0]);
        let g = poly(&[2.0, 0.0]);
        let (a, alpha) = realize_rank_one(&f, &g, DEFAULT_EQ_TOL).unwrap();
        assert_eq!(a, SymMatrix::diag(&[1.0, -1.0]));
        assert!((alpha[0] - 0.5f64.sqrt()).abs() <= 1e-15);
        assert!((alpha[1] - 1.5f64.sqrt()).abs() <= 1e-15);

        let sum = a.add_outer(&alpha, 1.0).unwrap();
        assert!((sum.get(0, 0) - 1.5).abs() <= 1e-12);
        assert!((sum.get(0, 1) - 0.75f64.sqrt()).abs() <= 1e-12);
        assert!((sum.get(1, 1) - 0.5).abs() <= 1e-12);
        assert!(max_spectrum_err(&sum, &g) <= 1e-12);
    }

    #[test]
    fn rank_one_equal_inputs_give_zero_vector() {
        let f = poly(&[2.0, 2.0, -1.0]);
        let (a, alpha) = realize_rank_one(&f, &f, DEFAULT_EQ_TOL).unwrap();
        assert_eq!(a, SymMatrix::diag(f.roots()));
        assert_eq!(alpha, vec![0.0, 0.0, 0.0]);
    }

    #[test]
    fn rank_one_single_root() {
        let f = poly(&[0.0]);
        let g = poly(&[1.0]);
        let (a, alpha) = realize_rank_one(&f, &g, DEFAULT_EQ_TOL).unwrap();
        assert_eq!(a.get(0, 0), 0.0);
        assert_eq!(alpha, vec![1.0]);
    }

    #[test]
    fn rank_one_rejects_bad_inputs() {
        let f = poly(&[1.0, -1.0]);
        let g = poly(&[2.0, 0.0]);
        assert!(realize_rank_one(&g, &f, DEFAULT_EQ_TOL).is_err());
        assert!(realize_rank_one(&f, &poly(&[2.0]), DEFAULT_EQ_TOL).is_err());
        assert!(realize_rank_one(&poly(&[]), &poly(&[]), DEFAULT_EQ_TOL).is_err());
    }

    #[test]
    fn p0_single_step_matches_rank_one() {
        let f = poly(&[1.0, -1.0]);
        let g = poly(&[2.0, 0.0]);
        let r = realize_p0(&f, &g, 1, DEFAULT_EQ_TOL).unwrap();
        let (a, alpha) = realize_rank_one(&f, &g, DEFAULT_EQ_TOL).unwrap();
        assert_eq!(r.a, a);
        assert_eq!(r.plus.len(), 1);
        assert_eq!(r.plus[0], alpha);
        assert_eq!(r.b, a.add_outer(&alpha, 1.0).unwrap());
        assert!(r.minus.is_empty());
    }

    #[test]
    fn p0_three_step_chain() {
        let f = poly(&[1.0, -1.0, -3.0]);
        let g = poly(&[4.0, 2.0, 0.0]);
        let r = realize_p0(&f, &g, 3, DEFAULT_EQ_TOL).unwrap();
        assert_eq!(r.plus.len(), 3);
        assert!(max_spectrum_err(&r.a, &f) <= 1e-12);
        assert!(max_spectrum_err(&r.b, &g) <= 1e-9);
        let h = r.b.sub(&r.a).unwrap();
        let i = inertia(&h, DEFAULT_ZERO_TOL).unwrap();
        assert!(i.n_plus <= 3);
        assert_eq!(i.n_minus, 0);
    }

    #[test]
    fn p0_zero_steps_requires_equality() {
        let f = poly(&[5.0]);
        let r = realize_p0(&f, &f, 0, DEFAULT_EQ_TOL).unwrap();
        assert_eq!(r.a, r.b);
        assert!(r.plus.is_empty());
        assert!(realize_p0(&poly(&[1.0]), &poly(&[2.0]), 0, DEFAULT_EQ_TOL).is_err());
    }

    #[test]
    fn converse_equal_inputs_short_circuit() {
        let f = poly(&[3.0, 1.0, 1.0, -2.0]);
        let r = realize_weyl_converse(&f, &f, 2, 3, DEFAULT_EQ_TOL).unwrap();
        assert_eq!(r.a, r.b);
        assert_eq!(r.a, SymMatrix::diag(f.roots()));
        assert!(r.plus.is_empty() && r.minus.is_empty());
    }

    #[test]
    fn converse_one_sided_reductions() {
        let f = poly(&[1.0, -1.0]);
        let g = poly(&[2.0, 0.0]);
        let r = realize_weyl_converse(&f, &g, 1, 0, DEFAULT_EQ_TOL).unwrap();
        let direct = realize_p0(&f, &g, 1, DEFAULT_EQ_TOL).unwrap();
        assert_eq!(r.b, direct.b);
        assert_eq!(r.plus, direct.plus);

        // mirrored: g ⊴(0,1) f
        let r = realize_weyl_converse(&g, &f, 0, 1, DEFAULT_EQ_TOL).unwrap();
        assert!(r.plus.is_empty());
        assert_eq!(r.minus.len(), 1);
        assert!(max_spectrum_err(&r.a, &g) <= 1e-12);
        assert!(max_spectrum_err(&r.b, &f) <= 1e-12);
        let h = r.b.sub(&r.a).unwrap();
        let i = inertia(&h, DEFAULT_ZERO_TOL).unwrap();
        assert_eq!((i.n_plus, i.n_minus), (0, 1));
    }

    #[test]
    fn converse_general_two_sided() {
        let f = poly(&[1.0, -1.0]);
        let g = poly(&[2.0, 0.0]);
        let r = realize_weyl_converse(&f, &g, 1, 1, DEFAULT_EQ_TOL).unwrap();
        assert!(r.plus.len() <= 1 && r.minus.len() <= 1);
        assert!(max_spectrum_err(&r.a, &f) <= 1e-9);
        assert!(max_spectrum_err(&r.b, &g) <= 1e-9);
        let diff = r.b.sub(&r.a).unwrap();
        let i = inertia(&diff, DEFAULT_ZERO_TOL).unwrap();
        assert!(i.n_plus <= 1 && i.n_minus <= 1);

        // decomposition identity
        let mut rebuilt = r.a.clone();
        for v in &r.plus {
            rebuilt = rebuilt.add_outer(v, 1.0).unwrap();
        }
        for v in &r.minus {
            rebuilt = rebuilt.add_outer(v, -1.0).unwrap();
        }
        assert!(rebuilt.max_abs_diff(&r.b) <= 1e-12);
    }

    #[test]
    fn border_step_examples() {
        let (alpha, a) = realize_border_step(&poly(&[0.0]), &poly(&[1.0, -1.0]), DEFAULT_EQ_TOL)
            .unwrap();
        assert_eq!(alpha, vec![1.0]);
        assert_eq!(a, 0.0);

        let (alpha, a) =
            realize_border_step(&poly(&[1.0, -1.0]), &poly(&[2.0, 0.0, -2.0]), DEFAULT_EQ_TOL)
                .unwrap();
        assert!((alpha[0] - 1.5f64.sqrt()).abs() <= 1e-15);
        assert!((alpha[1] - 1.5f64.sqrt()).abs() <= 1e-15);
        assert_eq!(a, 0.0);

        // common root splits off with a zero border entry
        let (alpha, a) =
            realize_border_step(&poly(&[3.0]), &poly(&[3.0, 0.5]), DEFAULT_EQ_TOL).unwrap();
        assert_eq!(alpha, vec![0.0]);
        assert_eq!(a, 0.5);

        assert!(realize_border_step(&poly(&[0.0]), &poly(&[1.0]), DEFAULT_EQ_TOL).is_err());
        assert!(
            realize_border_step(&poly(&[2.0]), &poly(&[1.0, 0.0]), DEFAULT_EQ_TOL).is_err()
        );
    }

    #[test]
    fn bordered_single_layer() {
        let r = realize_bordered(&poly(&[0.0]), &poly(&[1.0, -1.0]), DEFAULT_EQ_TOL).unwrap();
        assert_eq!(r.m.rows(), vec![vec![0.0, 1.0], vec![1.0, 0.0]]);
        assert_eq!(r.border_depth(), 1);
    }

    #[test]
    fn bordered_worked_example() {
        let f = poly(&[1.0, -1.0]);
        let g = poly(&[2.0, 0.0, -2.0]);
        let r = realize_bordered(&f, &g, DEFAULT_EQ_TOL).unwrap();
        assert_eq!(r.m.leading_block(2), SymMatrix::diag(&[1.0, -1.0]));
        assert!(max_spectrum_err(&r.m, &g) <= 1e-10);
    }

    #[test]
    fn bordered_two_layers_keeps_core() {
        let f = poly(&[1.0, -1.0]);
        let g = poly(&[2.0, 1.0, -1.0, -2.0]);
        let r = realize_bordered(&f, &g, DEFAULT_EQ_TOL).unwrap();
        assert_eq!(r.m.n(), 4);
        assert_eq!(r.m.leading_block(2), SymMatrix::diag(&[1.0, -1.0]));
        assert!(max_spectrum_err(&r.m, &g) <= 1e-9);
    }

    #[test]
    fn bordered_pure_corner() {
        let r = realize_bordered(&poly(&[]), &poly(&[4.5]), DEFAULT_EQ_TOL).unwrap();
        assert_eq!(r.m.rows(), vec![vec![4.5]]);
    }

    #[test]
    fn bordered_rejects_equal_degrees() {
        let f = poly(&[1.0]);
        assert!(realize_bordered(&f, &f, DEFAULT_EQ_TOL).is_err());
    }

    #[test]
    fn realization_json_shape() {
        let f = poly(&[1.0, -1.0]);
        let g = poly(&[2.0, 0.0]);
        let r = realize_p0(&f, &g, 1, DEFAULT_EQ_TOL).unwrap();
        let text = serde_json::to_string(&r).unwrap();
        assert!(text.starts_with(r#"{"f":{"roots":[1.0,-1.0]},"g":{"roots":[2.0,0.0]},"p":1,"q":0,"A":"#));
        assert!(text.contains(r#""plus":[["#));
        assert!(text.contains(r#""minus":[]"#));
        let back: Realization = serde_json::from_str(&text).unwrap();
        assert_eq!(back.a, r.a);
        assert_eq!(back.plus, r.plus);
    }
}
