//! Seeded property suites over the whole pipeline.
//!
//! Each suite draws deterministic instances (ChaCha8 keyed by instance
//! index), exercises one contract at volume, and reports how many instances
//! failed, keeping a bounded sample of failure descriptions. The acceptance
//! tests run these at full instance counts; the CLI `selftest` command runs
//! the same code at reduced counts.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::interlace::{
    draw_interlacing, gen_pq_pair, is_pq_interlacing, is_pq_interlacing_with_slack, minimal_pq,
    root_count_criterion, split,
};
use crate::linalg::SymMatrix;
use crate::poly::RootedPoly;
use crate::realize::{realize_bordered, realize_weyl_converse, BorderedRealization, Realization};
use crate::verify::{check_bordered, check_realization, check_weyl_forward, TolProfile};

/// How many failure descriptions a suite keeps verbatim.
const MAX_EXAMPLES: usize = 12;

/// Outcome of one suite: instance count, failure count, and up to
/// [`MAX_EXAMPLES`] failure descriptions.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub name: &'static str,
    pub instances: usize,
    pub failure_count: usize,
    pub examples: Vec<String>,
}

impl SuiteReport {
    fn new(name: &'static str) -> SuiteReport {
        SuiteReport {
            name,
            instances: 0,
            failure_count: 0,
            examples: Vec::new(),
        }
    }

    fn fail(&mut self, msg: String) {
        self.failure_count += 1;
        if self.examples.len() < MAX_EXAMPLES {
            self.examples.push(msg);
        }
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        if !ok {
            self.fail(msg());
        }
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    pub fn summary(&self) -> String {
        format!(
            "{}: {} instances, {} failures",
            self.name, self.instances, self.failure_count
        )
    }
}

fn rng_for(salt: u64, i: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(salt.wrapping_add((i as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)))
}

fn random_poly(rng: &mut impl Rng, max_deg: usize) -> RootedPoly {
    let deg = rng.gen_range(0..=max_deg);
    let roots: Vec<f64> = (0..deg).map(|_| rng.gen_range(-5.0..5.0)).collect();
    RootedPoly::new(roots).expect("finite roots")
}

/// Draws a themed (f, g, p, q) instance: valid pairs, unrelated random
/// pairs, and near-misses obtained by nudging a valid pair.
fn mixed_instance(rng: &mut impl Rng, kind: usize) -> (RootedPoly, RootedPoly, usize, usize) {
    match kind % 3 {
        0 => {
            let n = rng.gen_range(1..=10);
            let p = rng.gen_range(0..=4);
            let q = rng.gen_range(0..=4);
            let seed = rng.gen::<u64>();
            let (f, g) = gen_pq_pair(n, p, q, 0.0, seed).expect("min_gap 0 is always feasible");
            (f, g, p, q)
        }
        1 => {
            let f = random_poly(rng, 10);
            let g = random_poly(rng, 10);
            (f, g, rng.gen_range(0..=4), rng.gen_range(0..=4))
        }
        _ => {
            let n = rng.gen_range(1..=10);
            let p = rng.gen_range(0..=4);
            let q = rng.gen_range(0..=4);
            let seed = rng.gen::<u64>();
            let (f, g) = gen_pq_pair(n, p, q, 0.0, seed).expect("min_gap 0 is always feasible");
            if rng.gen::<bool>() || (p == 0 && q == 0) {
                // nudge one root of f up or down
                let mut roots = f.roots().to_vec();
                let i = rng.gen_range(0..roots.len());
                roots[i] += rng.gen_range(-0.5..0.5);
                (RootedPoly::new(roots).unwrap(), g, p, q)
            } else {
                // tighten a budget below what the pair was drawn for
                let (np, nq) = if p > 0 && rng.gen::<bool>() || q == 0 {
                    (p - 1, q)
                } else {
                    (p, q - 1)
                };
                (f, g, np, nq)
            }
        }
    }
}

/// The shifted-inequality predicate must agree with the root-counting
/// characterization on every instance, valid or not.
pub fn equivalence_suite(count: usize) -> SuiteReport {
    let mut report = SuiteReport::new("predicate_vs_root_counting");
    report.instances = count;
    for i in 0..count {
        let mut rng = rng_for(0x5eed_0001, i);
        let (f, g, p, q) = mixed_instance(&mut rng, i);
        let lhs = is_pq_interlacing(&f, &g, p, q);
        let rhs = root_count_criterion(&f, &g, p, q);
        report.check(lhs == rhs, || {
            format!(
                "instance {i}: predicate {lhs} vs root counting {rhs} for f={:?} g={:?} ({p},{q})",
                f.roots(),
                g.roots()
            )
        });
    }
    report
}

/// Order-theoretic properties of the relation: reflexivity, symmetry,
/// transitivity, monotonicity in (p,q), the degree bound, minimality of
/// `minimal_pq`, and the two-sided compatibility witness at (1,1).
pub fn relation_properties_suite(count: usize) -> SuiteReport {
    let mut report = SuiteReport::new("relation_properties");
    report.instances = count;
    for i in 0..count {
        let mut rng = rng_for(0x5eed_0002, i);

        let any = random_poly(&mut rng, 10);
        let (rp, rq) = (rng.gen_range(0..=4), rng.gen_range(0..=4));
        report.check(is_pq_interlacing(&any, &any, rp, rq), || {
            format!("instance {i}: reflexivity failed at ({rp},{rq})")
        });

        let (f, g, p, q) = mixed_instance(&mut rng, i);
        let fwd = is_pq_interlacing(&f, &g, p, q);
        report.check(fwd == is_pq_interlacing(&g, &f, q, p), || {
            format!("instance {i}: symmetry mismatch at ({p},{q})")
        });

        if fwd {
            let (up_p, up_q) = (p + rng.gen_range(0..=3), q + rng.gen_range(0..=3));
            report.check(is_pq_interlacing(&f, &g, up_p, up_q), || {
                format!("instance {i}: monotonicity failed at ({up_p},{up_q})")
            });
            let (dl, du) = (f.degree() as i64 - g.degree() as i64, q as i64);
            report.check(-(p as i64) <= dl && dl <= du, || {
                format!("instance {i}: degree bound violated ({dl} outside [-{p},{q}])")
            });
            let (mp, mq) = minimal_pq(&f, &g);
            report.check(mp <= p && mq <= q, || {
                format!("instance {i}: minimal ({mp},{mq}) exceeds a holding pair ({p},{q})")
            });
            report.check(is_pq_interlacing(&f, &g, mp, mq), || {
                format!("instance {i}: relation fails at its own minimal pair ({mp},{mq})")
            });
            report.check(mp == 0 || !is_pq_interlacing(&f, &g, mp - 1, mq), || {
                format!("instance {i}: minimal p={mp} is not least")
            });
            report.check(mq == 0 || !is_pq_interlacing(&f, &g, mp, mq - 1), || {
                format!("instance {i}: minimal q={mq} is not least")
            });
        }

        // transitivity: chain a second relation off g
        let (s, t) = (rng.gen_range(0..=3), rng.gen_range(0..=3));
        let deg_k = rng.gen_range(g.degree().saturating_sub(t)..=g.degree() + s);
        let k = draw_interlacing(&g, t, s, deg_k, &mut rng).expect("degree inside window");
        if fwd {
            report.check(is_pq_interlacing(&f, &k, p + s, q + t), || {
                format!("instance {i}: transitivity failed at ({},{})", p + s, q + t)
            });
        }

        // compatibility witness: f ⊴(1,1) g of equal degree admits h below both
        let n = rng.gen_range(1..=8);
        let (cf, cg) = gen_pq_pair(n, 1, 1, 0.0, rng.gen::<u64>()).unwrap();
        for d in [n - 1, n] {
            if d == 0 {
                continue;
            }
            match split(&cf, &cg, 1, 1, 0, 1, d) {
                Ok(h) => {
                    report.check(
                        is_pq_interlacing(&h, &cf, 1, 0) && is_pq_interlacing(&h, &cg, 1, 0),
                        || format!("instance {i}: compatibility witness invalid at d={d}"),
                    );
                }
                Err(e) => report.fail(format!("instance {i}: witness split failed: {e}")),
            }
        }
    }
    report
}

/// Appending a shared factor must not change the relation in either
/// direction.
pub fn common_factor_suite(count: usize) -> SuiteReport {
    let mut report = SuiteReport::new("common_factor_invariance");
    report.instances = count;
    for i in 0..count {
        let mut rng = rng_for(0x5eed_0003, i);
        let (f, g, p, q) = mixed_instance(&mut rng, i);
        let h = random_poly(&mut rng, 4);
        let plain = is_pq_interlacing(&f, &g, p, q);
        let lifted = is_pq_interlacing(&f.merge_roots(&h), &g.merge_roots(&h), p, q);
        report.check(plain == lifted, || {
            format!(
                "instance {i}: relation changed under common factor {:?} ({plain} -> {lifted})",
                h.roots()
            )
        });
    }
    report
}

/// Differentiation preserves the relation (checked with a small slack, since
/// derivative roots come from bisection).
pub fn derivative_suite(count: usize) -> SuiteReport {
    let mut report = SuiteReport::new("derivative_preserves_relation");
    report.instances = count;
    for i in 0..count {
        let mut rng = rng_for(0x5eed_0004, i);
        let n = rng.gen_range(1..=10);
        let p = rng.gen_range(0..=4);
        let q = rng.gen_range(0..=4);
        let min_gap = if rng.gen::<bool>() { 0.0 } else { 0.05 };
        let (f, g) = match gen_pq_pair(n, p, q, min_gap, rng.gen::<u64>()) {
            Ok(pair) => pair,
            Err(e) => {
                report.fail(format!("instance {i}: generator failed: {e}"));
                continue;
            }
        };
        let df = f.derivative_roots().expect("degree >= 1");
        let dg = g.derivative_roots().expect("degree >= 1");
        report.check(is_pq_interlacing_with_slack(&df, &dg, p, q, 1e-10), || {
            format!(
                "instance {i}: derivatives lost ({p},{q}) for f={:?} g={:?}",
                f.roots(),
                g.roots()
            )
        });
    }
    report
}

/// Split soundness: for every admissible (s,t,d) the intermediate polynomial
/// has the requested degree and satisfies both interlacing postconditions;
/// one level of re-splitting works on both produced relations.
pub fn split_soundness_suite(count: usize) -> SuiteReport {
    let mut report = SuiteReport::new("split_soundness");
    report.instances = count;
    for i in 0..count {
        let mut rng = rng_for(0x5eed_0005, i);
        let n = rng.gen_range(1..=8);
        let p = rng.gen_range(0..=3);
        let q = rng.gen_range(0..=3);
        let (_, g) = gen_pq_pair(n, 0, 0, 0.0, rng.gen::<u64>()).unwrap();
        let deg_f = rng.gen_range(n.saturating_sub(p)..=n + q);
        let f = draw_interlacing(&g, p, q, deg_f, &mut rng).unwrap();

        for s in 0..=p {
            for t in 0..=q {
                let lo = (deg_f as i64 - t as i64).max(n as i64 - p as i64 + s as i64);
                let hi = (deg_f as i64 + s as i64).min(n as i64 + q as i64 - t as i64);
                if lo > hi {
                    report.fail(format!("instance {i}: empty degree window at ({s},{t})"));
                    continue;
                }
                for d in lo..=hi {
                    let d = d.max(0) as usize;
                    match split(&f, &g, p, q, s, t, d) {
                        Ok(h) => {
                            report.check(h.degree() == d, || {
                                format!("instance {i}: split degree {} != {d}", h.degree())
                            });
                            report.check(is_pq_interlacing(&f, &h, s, t), || {
                                format!("instance {i}: f-side postcondition failed at ({s},{t},{d})")
                            });
                            report.check(
                                is_pq_interlacing(&h, &g, p - s, q - t),
                                || {
                                    format!(
                                        "instance {i}: g-side postcondition failed at ({s},{t},{d})"
                                    )
                                },
                            );
                            // one level of recursive splitting on each side,
                            // each at the low end of its own degree window
                            if s > 0 {
                                let d2 = (f.degree() as i64)
                                    .max(h.degree() as i64 + 1 - s as i64)
                                    .max(0) as usize;
                                report.check(
                                    split(&f, &h, s, t, 1, 0, d2).is_ok(),
                                    || format!("instance {i}: re-split of (f,h) failed"),
                                );
                            }
                            if p - s > 0 {
                                let d2 = (h.degree() as i64)
                                    .max(g.degree() as i64 + 1 - (p - s) as i64)
                                    .max(0) as usize;
                                report.check(
                                    split(&h, &g, p - s, q - t, 1, 0, d2).is_ok(),
                                    || format!("instance {i}: re-split of (h,g) failed"),
                                );
                            }
                        }
                        Err(e) => {
                            report.fail(format!("instance {i}: split({s},{t},{d}) errored: {e}"))
                        }
                    }
                }
            }
        }
    }
    report
}

/// End-to-end two-sided realization at desk scale: construct, then verify
/// with default tolerances, and additionally demand the absolute spectrum
/// residuals stay below 1e−6.
pub fn realization_suite(count: usize) -> SuiteReport {
    let mut report = SuiteReport::new("weyl_converse_realization");
    report.instances = count;
    let tol = TolProfile::default();
    for i in 0..count {
        let mut rng = rng_for(0x5eed_0006, i);
        let n = rng.gen_range(2..=10);
        let p = rng.gen_range(0..=4);
        let q = rng.gen_range(0..=4);
        let (f, g) = gen_pq_pair(n, p, q, 0.05, rng.gen::<u64>()).unwrap();
        match realize_weyl_converse(&f, &g, p, q, tol.eq_tol) {
            Ok(r) => {
                let rep = check_realization(&r, p, q, &tol);
                report.check(rep.passed, || {
                    let bad: Vec<String> = rep
                        .checks
                        .iter()
                        .filter(|c| !c.passed)
                        .map(|c| format!("{} residual {:.3e}", c.name, c.residual))
                        .collect();
                    format!("instance {i} (n={n}, p={p}, q={q}): {}", bad.join(", "))
                });
                for name in ["spectrum_a_matches_f", "spectrum_b_matches_g"] {
                    let residual = rep.check(name).map_or(f64::INFINITY, |c| c.residual);
                    report.check(residual <= 1e-6, || {
                        format!("instance {i}: {name} absolute residual {residual:.3e} > 1e-6")
                    });
                }
            }
            Err(e) => report.fail(format!("instance {i} (n={n}, p={p}, q={q}): {e}")),
        }
    }
    report
}

/// End-to-end bordered realization: construct, verify, and insist the
/// leading block is bit-identical to diag(roots of f).
pub fn bordered_suite(count: usize) -> SuiteReport {
    let mut report = SuiteReport::new("bordered_realization");
    report.instances = count;
    let tol = TolProfile::default();
    for i in 0..count {
        let mut rng = rng_for(0x5eed_0007, i);
        let n = rng.gen_range(1..=8);
        let p = rng.gen_range(1..=n.min(4));
        let (_, g) = gen_pq_pair(n, 0, 0, 0.05, rng.gen::<u64>()).unwrap();
        let f = draw_interlacing(&g, p, 0, n - p, &mut rng).unwrap();
        match realize_bordered(&f, &g, tol.eq_tol) {
            Ok(r) => {
                let rep = check_bordered(&r, &tol);
                report.check(rep.passed, || {
                    let bad: Vec<String> = rep
                        .checks
                        .iter()
                        .filter(|c| !c.passed)
                        .map(|c| format!("{} residual {:.3e}", c.name, c.residual))
                        .collect();
                    format!("instance {i} (n={n}, p={p}): {}", bad.join(", "))
                });
                report.check(
                    r.m.leading_block(n - p) == SymMatrix::diag(f.roots()),
                    || format!("instance {i} (n={n}, p={p}): leading block not bit-identical"),
                );
            }
            Err(e) => report.fail(format!("instance {i} (n={n}, p={p}): {e}")),
        }
    }
    report
}

/// The forward inequality on random symmetric pairs B = A + H, with H built
/// from random vectors of prescribed signs: the measured inertia never
/// exceeds the vector counts and the interlacing always holds.
pub fn weyl_forward_suite(count: usize) -> SuiteReport {
    let mut report = SuiteReport::new("weyl_forward");
    report.instances = count;
    let tol = TolProfile::default();
    for i in 0..count {
        let mut rng = rng_for(0x5eed_0008, i);
        let n = rng.gen_range(2..=10);
        let p = rng.gen_range(0..=4);
        let q = rng.gen_range(0..=4);
        let mut a = SymMatrix::zeros(n);
        for r in 0..n {
            for c in r..n {
                a.set_sym(r, c, rng.gen_range(-5.0..5.0));
            }
        }
        let mut b = a.clone();
        for _ in 0..p {
            let v: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
            b = b.add_outer(&v, 1.0).unwrap();
        }
        for _ in 0..q {
            let v: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
            b = b.add_outer(&v, -1.0).unwrap();
        }
        match check_weyl_forward(&a, &b, &tol) {
            Ok((p_star, q_star, rep)) => {
                report.check(p_star <= p && q_star <= q, || {
                    format!(
                        "instance {i}: measured inertia ({p_star},{q_star}) exceeds budgets ({p},{q})"
                    )
                });
                report.check(rep.passed, || {
                    let c = &rep.checks[0];
                    format!(
                        "instance {i}: forward interlacing residual {:.3e} > {:.3e}",
                        c.residual, c.threshold
                    )
                });
            }
            Err(e) => report.fail(format!("instance {i}: {e}")),
        }
    }
    report
}

fn run_degenerate_realize(
    report: &mut SuiteReport,
    f: &RootedPoly,
    g: &RootedPoly,
    p: usize,
    q: usize,
    label: &str,
) -> Option<Realization> {
    let tol = TolProfile::default();
    report.instances += 1;
    match realize_weyl_converse(f, g, p, q, tol.eq_tol) {
        Ok(r) => {
            let rep = check_realization(&r, p, q, &tol);
            if !rep.passed {
                let bad: Vec<&str> = rep
                    .checks
                    .iter()
                    .filter(|c| !c.passed)
                    .map(|c| c.name.as_str())
                    .collect();
                report.fail(format!("{label}: verification failed ({})", bad.join(", ")));
            }
            Some(r)
        }
        Err(e) => {
            report.fail(format!("{label}: {e}"));
            None
        }
    }
}

fn run_degenerate_border(
    report: &mut SuiteReport,
    f: &RootedPoly,
    g: &RootedPoly,
    label: &str,
) -> Option<BorderedRealization> {
    let tol = TolProfile::default();
    report.instances += 1;
    match realize_bordered(f, g, tol.eq_tol) {
        Ok(r) => {
            let rep = check_bordered(&r, &tol);
            if !rep.passed {
                report.fail(format!("{label}: verification failed"));
            }
            Some(r)
        }
        Err(e) => {
            report.fail(format!("{label}: {e}"));
            None
        }
    }
}

/// Handwritten corner cases: equal inputs, maximal multiplicity, budgets
/// exceeding the degree, one-sided budgets, and degenerate borders.
pub fn degenerate_suite() -> SuiteReport {
    let mut report = SuiteReport::new("degenerate_coverage");
    let poly = |roots: &[f64]| RootedPoly::new(roots.to_vec()).unwrap();

    // equal inputs must yield B = A and no vectors, whatever the budgets
    for (roots, p, q) in [
        (vec![2.0, -1.0, -1.0], 0, 0),
        (vec![2.0, -1.0, -1.0], 3, 2),
        (vec![5.0], 4, 4),
    ] {
        let f = poly(&roots);
        let label = format!("equal inputs ({p},{q})");
        if let Some(r) = run_degenerate_realize(&mut report, &f, &f, p, q, &label) {
            if r.a != r.b || !r.plus.is_empty() || !r.minus.is_empty() {
                report.fail(format!("{label}: nontrivial certificate"));
            }
        }
    }

    // full multiplicity on both sides: f = (1,1,1,1), g = (3,3,3,3) needs p = n
    let f4 = poly(&[1.0; 4]);
    let g4 = poly(&[3.0; 4]);
    run_degenerate_realize(&mut report, &f4, &g4, 4, 0, "multiplicity n shift up");
    run_degenerate_realize(&mut report, &f4, &g4, 5, 3, "multiplicity n with slack budgets");
    run_degenerate_realize(&mut report, &g4, &f4, 0, 4, "multiplicity n shift down");

    // mixed multiplicities
    let fm = poly(&[1.0, 1.0, 0.0]);
    let gm = poly(&[2.0, 1.0, 1.0]);
    run_degenerate_realize(&mut report, &fm, &gm, 1, 0, "mixed multiplicity (1,0)");
    run_degenerate_realize(&mut report, &fm, &gm, 2, 1, "mixed multiplicity (2,1)");

    // budgets exceeding the degree
    let (f2, g2) = (poly(&[1.0, -1.0]), poly(&[2.0, 0.0]));
    run_degenerate_realize(&mut report, &f2, &g2, 2, 3, "p+q > n");

    // one-sided edges
    let (f5, g5) = gen_pq_pair(5, 3, 0, 0.05, 101).unwrap();
    run_degenerate_realize(&mut report, &f5, &g5, 3, 0, "q = 0 edge");
    let (f6, g6) = gen_pq_pair(5, 0, 2, 0.05, 102).unwrap();
    run_degenerate_realize(&mut report, &f6, &g6, 0, 2, "p = 0 edge");

    // degenerate borders
    if let Some(r) = run_degenerate_border(&mut report, &poly(&[]), &poly(&[7.25]), "pure corner")
    {
        if r.m.rows() != vec![vec![7.25]] {
            report.fail("pure corner: expected the 1x1 matrix [7.25]".to_string());
        }
    }
    if let Some(r) = run_degenerate_border(
        &mut report,
        &poly(&[2.5]),
        &poly(&[2.5, 1.0]),
        "common-root border",
    ) {
        if r.m != SymMatrix::diag(&[2.5, 1.0]) {
            report.fail("common-root border: expected diag(2.5, 1.0)".to_string());
        }
    }
    run_degenerate_border(
        &mut report,
        &poly(&[1.0, 1.0]),
        &poly(&[2.0, 1.0, 1.0]),
        "repeated-root border",
    );
    run_degenerate_border(
        &mut report,
        &poly(&[0.0]),
        &poly(&[3.0, 2.0, 1.0, 0.0]),
        "depth-3 border",
    );

    report
}

/// The six canonical certificate corruptions, each of which must flip its
/// targeted check and leave every other check passing.
pub fn fault_injection_suite() -> SuiteReport {
    let mut report = SuiteReport::new("fault_injection");
    let tol = TolProfile::default();
    let poly = |roots: &[f64]| RootedPoly::new(roots.to_vec()).unwrap();

    let f = poly(&[1.0, -1.0]);
    let g = poly(&[2.0, 0.0]);
    let base = realize_weyl_converse(&f, &g, 1, 0, tol.eq_tol).expect("base realization");
    let base_rep = check_realization(&base, 1, 0, &tol);
    report.instances += 1;
    report.check(base_rep.passed, || "baseline realization fails".to_string());

    // corrupt the stored f: its spectrum claim is now wrong, nothing else is
    let mut r1 = base.clone();
    let delta_f = 1e-4 * r1.a.frob_norm().max(1.0);
    let mut roots = r1.f.roots().to_vec();
    roots[0] += delta_f;
    r1.f = RootedPoly::new(roots).unwrap();
    expect_flip(&mut report, "perturbed f root", &r1, "spectrum_a_matches_f");

    // corrupt the stored g the same way
    let mut r2 = base.clone();
    let delta_g = 1e-4 * r2.b.frob_norm().max(1.0);
    let mut roots = r2.g.roots().to_vec();
    roots[0] += delta_g;
    r2.g = RootedPoly::new(roots).unwrap();
    expect_flip(&mut report, "perturbed g root", &r2, "spectrum_b_matches_g");

    // drop the (nonzero) plus vector: B − A is no longer explained
    let mut r3 = base.clone();
    r3.plus.clear();
    expect_flip(&mut report, "dropped plus vector", &r3, "decomposition");

    // smuggle in an extra zero minus vector: budget exceeded, nothing else moves
    let mut r4 = base.clone();
    r4.minus.push(vec![0.0; 2]);
    expect_flip(&mut report, "extra zero minus vector", &r4, "vector_budget");

    let bf = poly(&[1.0, -1.0]);
    let bg = poly(&[2.0, 0.0, -2.0]);
    let border_base = realize_bordered(&bf, &bg, tol.eq_tol).expect("base bordered");
    report.instances += 1;
    report.check(check_bordered(&border_base, &tol).passed, || {
        "baseline bordered certificate fails".to_string()
    });

    // corner nudged by 100x the spectrum threshold: only the full spectrum breaks
    let mut b1 = border_base.clone();
    let corner = b1.m.n() - 1;
    let delta_c = 100.0 * tol.spectrum_tol * b1.m.frob_norm().max(1.0);
    let v = b1.m.get(corner, corner);
    b1.m.set_sym(corner, corner, v + delta_c);
    expect_border_flip(&mut report, "perturbed corner", &b1, "full_spectrum");

    // leading diagonal nudged by 1e−10: exact-block equality is the only casualty
    let mut b2 = border_base.clone();
    let v = b2.m.get(0, 0);
    b2.m.set_sym(0, 0, v + 1e-10);
    expect_border_flip(
        &mut report,
        "perturbed leading diagonal",
        &b2,
        "leading_block_exact",
    );

    report
}

fn expect_flip(report: &mut SuiteReport, label: &str, r: &Realization, target: &str) {
    report.instances += 1;
    let rep = check_realization(r, 1, 0, &TolProfile::default());
    record_flip(report, label, &rep.checks, target);
}

fn expect_border_flip(report: &mut SuiteReport, label: &str, r: &BorderedRealization, target: &str) {
    report.instances += 1;
    let rep = check_bordered(r, &TolProfile::default());
    record_flip(report, label, &rep.checks, target);
}

fn record_flip(
    report: &mut SuiteReport,
    label: &str,
    checks: &[crate::verify::CheckEntry],
    target: &str,
) {
    for c in checks {
        let want_pass = c.name != target;
        if c.passed != want_pass {
            report.fail(format!(
                "{label}: check {} was {} (residual {:.3e}, threshold {:.3e})",
                c.name,
                if c.passed { "passing" } else { "failing" },
                c.residual,
                c.threshold
            ));
        }
    }
}

/// Runs every suite at reduced instance counts; used by the CLI selftest.
pub fn run_selftest() -> Vec<SuiteReport> {
    vec![
        equivalence_suite(1000),
        relation_properties_suite(400),
        common_factor_suite(500),
        derivative_suite(400),
        split_soundness_suite(120),
        realization_suite(60),
        bordered_suite(40),
        weyl_forward_suite(120),
        degenerate_suite(),
        fault_injection_suite(),
    ]
}
