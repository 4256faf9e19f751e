//! Independent certificate checking.
//!
//! Every check here recomputes what it needs from the certificate's matrices
//! using only the eigensolver, the inertia counter, and the interlacing
//! predicates — it never trusts a quantity the construction side derived.
//! Failures are report entries, not errors: a report always comes back, and
//! `passed` holds exactly when every entry passed.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::interlace::worst_violation;
use crate::linalg::{inertia, sym_eigen, SymMatrix};
use crate::poly::RootedPoly;
use crate::realize::{BorderedRealization, Realization};

/// Tolerances threaded through verification (and, for `eq_tol`, through
/// construction). Verifier thresholds sit at least a decade above what the
/// constructions actually achieve, so a failing check signals a genuine
/// defect rather than rounding.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TolProfile {
    /// Root-equality tolerance used when pairing common roots.
    pub eq_tol: f64,
    /// Relative half-width of the inertia zero band.
    pub zero_tol: f64,
    /// Relative bound on |eigenvalue − target root| per position.
    pub spectrum_tol: f64,
    /// Relative bound on the rank-one decomposition residual.
    pub decomp_tol: f64,
}

impl Default for TolProfile {
    fn default() -> TolProfile {
        TolProfile {
            eq_tol: 1e-9,
            zero_tol: 1e-8,
            spectrum_tol: 1e-6,
            decomp_tol: 1e-9,
        }
    }
}

/// One verified property: its measured residual and the threshold it had to
/// stay under. `passed` is always `residual <= threshold`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckEntry {
    pub name: String,
    pub passed: bool,
    pub residual: f64,
    pub threshold: f64,
}

impl CheckEntry {
    fn new(name: &str, residual: f64, threshold: f64) -> CheckEntry {
        CheckEntry {
            name: name.to_string(),
            passed: residual <= threshold,
            residual,
            threshold,
        }
    }
}

/// Outcome of a verification run; `passed` iff every check passed.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerifyReport {
    pub passed: bool,
    pub checks: Vec<CheckEntry>,
}

impl VerifyReport {
    fn from_checks(checks: Vec<CheckEntry>) -> VerifyReport {
        VerifyReport {
            passed: checks.iter().all(|c| c.passed),
            checks,
        }
    }

    /// Looks up a check by name.
    pub fn check(&self, name: &str) -> Option<&CheckEntry> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Compares the spectrum of `m` against the roots of `target` positionwise;
/// residual is the largest deviation, threshold scales with ‖m‖_F. An
/// eigensolver breakdown surfaces as a failed entry carrying its residual.
fn spectrum_entry(name: &str, m: &SymMatrix, target: &RootedPoly, spectrum_tol: f64) -> CheckEntry {
    let threshold = spectrum_tol * m.frob_norm().max(1.0);
    match sym_eigen(m) {
        Ok(decomp) => {
            let residual = decomp
                .values
                .iter()
                .zip(target.roots())
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max);
            CheckEntry::new(name, residual, threshold)
        }
        Err(e) => CheckEntry::new(name, e.residual_or_inf(), threshold),
    }
}

/// The forward-inequality entry shared by [`check_realization`] and
/// [`check_weyl_forward`]: with (p*, q*) the tolerant inertia of B − A, the
/// spectra of A and B must (p*, q*)-interlace. The slack allows for
/// eigenvalue extraction error on both matrices plus the inertia zero band
/// (positive eigenvalues of B − A inside the band are not counted in p*, yet
/// shift the spectrum of B by up to the band width).
fn weyl_forward_entry(
    a: &SymMatrix,
    b: &SymMatrix,
    tol: &TolProfile,
) -> Result<(usize, usize, CheckEntry)> {
    let diff = b.sub(a)?;
    let i = inertia(&diff, tol.zero_tol)?;
    let spec_a = RootedPoly::new(sym_eigen(a)?.values)?;
    let spec_b = RootedPoly::new(sym_eigen(b)?.values)?;
    let slack =
        tol.spectrum_tol * a.frob_norm().max(b.frob_norm()).max(1.0) + i.zero_threshold;
    let residual = worst_violation(&spec_a, &spec_b, i.n_plus, i.n_minus);
    Ok((
        i.n_plus,
        i.n_minus,
        CheckEntry::new("weyl_forward", residual, slack),
    ))
}

/// Full audit of a two-sided realization certificate against budgets (p, q):
///
/// * `well_formed` — orders and vector lengths agree with deg f = deg g ≥ 1,
///   all payload numbers finite (failure short-circuits the report, since
///   nothing else is well-posed);
/// * `vector_budget` — at most p plus and q minus vectors;
/// * `spectrum_a_matches_f`, `spectrum_b_matches_g` — eigenvalues vs roots;
/// * `inertia_bounds` — n₊(B−A) ≤ p and n₋(B−A) ≤ q;
/// * `decomposition` — B − A − Σ plus·plusᵀ + Σ minus·minusᵀ ≈ 0;
/// * `weyl_forward` — the forward inequality at the measured inertia, which
///   every genuine pair of symmetric matrices satisfies.
pub fn check_realization(r: &Realization, p: usize, q: usize, tol: &TolProfile) -> VerifyReport {
    let n = r.f.degree();
    let structural_ok = n >= 1
        && r.g.degree() == n
        && r.a.n() == n
        && r.b.n() == n
        && r.plus.iter().chain(r.minus.iter()).all(|v| {
            v.len() == n && v.iter().all(|x| x.is_finite())
        });
    if !structural_ok {
        return VerifyReport::from_checks(vec![CheckEntry::new("well_formed", 1.0, 0.0)]);
    }
    let mut checks = vec![CheckEntry::new("well_formed", 0.0, 0.0)];

    let excess = r.plus.len().saturating_sub(p).max(r.minus.len().saturating_sub(q));
    checks.push(CheckEntry::new("vector_budget", excess as f64, 0.0));

    checks.push(spectrum_entry("spectrum_a_matches_f", &r.a, &r.f, tol.spectrum_tol));
    checks.push(spectrum_entry("spectrum_b_matches_g", &r.b, &r.g, tol.spectrum_tol));

    // B − A is reused by the inertia, decomposition, and forward checks.
    let diff = r.b.sub(&r.a).expect("orders validated above");
    let diff_norm = diff.frob_norm();
    checks.push(match inertia(&diff, tol.zero_tol) {
        Ok(i) => {
            let excess = i.n_plus.saturating_sub(p).max(i.n_minus.saturating_sub(q));
            CheckEntry::new("inertia_bounds", excess as f64, 0.0)
        }
        Err(e) => CheckEntry::new("inertia_bounds", e.residual_or_inf(), 0.0),
    });

    let mut residue = diff;
    for (v, sign) in r
        .plus
        .iter()
        .map(|v| (v, -1.0))
        .chain(r.minus.iter().map(|v| (v, 1.0)))
    {
        residue = residue.add_outer(v, sign).expect("lengths validated above");
    }
    checks.push(CheckEntry::new(
        "decomposition",
        residue.max_abs(),
        tol.decomp_tol * diff_norm.max(1.0),
    ));

    checks.push(match weyl_forward_entry(&r.a, &r.b, tol) {
        Ok((_, _, entry)) => entry,
        Err(e) => CheckEntry::new("weyl_forward", e.residual_or_inf(), 0.0),
    });

    VerifyReport::from_checks(checks)
}

/// Standalone forward check for an arbitrary pair of symmetric matrices of
/// equal order: measures (p*, q*) = inertia(B − A) and confirms the spectra
/// (p*, q*)-interlace. Returns the measured pair with the report. A failure
/// here cannot be blamed on the input — it means the numerics broke down.
pub fn check_weyl_forward(
    a: &SymMatrix,
    b: &SymMatrix,
    tol: &TolProfile,
) -> Result<(usize, usize, VerifyReport)> {
    let (p_star, q_star, entry) = weyl_forward_entry(a, b, tol)?;
    Ok((p_star, q_star, VerifyReport::from_checks(vec![entry])))
}

/// Audit of a bordered certificate:
///
/// * `well_formed` — deg g = deg f + p with p ≥ 1, M of order deg g;
/// * `leading_block_exact` — the leading (deg f)-block equals diag(roots of
///   f) with zero tolerance (the construction copies it bit-for-bit, so any
///   deviation is a corruption);
/// * `leading_block_spectrum`, `full_spectrum` — eigenvalues vs f and g;
/// * `interlacing` — f against the measured spectrum of M at (p, 0).
pub fn check_bordered(r: &BorderedRealization, tol: &TolProfile) -> VerifyReport {
    let (df, dg) = (r.f.degree(), r.g.degree());
    if dg <= df || r.m.n() != dg {
        return VerifyReport::from_checks(vec![CheckEntry::new("well_formed", 1.0, 0.0)]);
    }
    let p = dg - df;
    let mut checks = vec![CheckEntry::new("well_formed", 0.0, 0.0)];

    let block = r.m.leading_block(df);
    checks.push(CheckEntry::new(
        "leading_block_exact",
        block.max_abs_diff(&SymMatrix::diag(r.f.roots())),
        0.0,
    ));
    checks.push(spectrum_entry("leading_block_spectrum", &block, &r.f, tol.spectrum_tol));
    checks.push(spectrum_entry("full_spectrum", &r.m, &r.g, tol.spectrum_tol));

    let slack = tol.spectrum_tol * r.m.frob_norm().max(1.0);
    checks.push(match sym_eigen(&r.m) {
        Ok(decomp) => {
            let spectrum = RootedPoly::new(decomp.values).expect("eigenvalues are finite");
            CheckEntry::new("interlacing", worst_violation(&r.f, &spectrum, p, 0), slack)
        }
        Err(e) => CheckEntry::new("interlacing", e.residual_or_inf(), slack),
    });

    VerifyReport::from_checks(checks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::DEFAULT_EQ_TOL;
    use crate::realize::{realize_bordered, realize_weyl_converse};

    fn poly(roots: &[f64]) -> RootedPoly {
        RootedPoly::new(roots.to_vec()).unwrap()
    }

    fn example_realization() -> Realization {
        realize_weyl_converse(
            &poly(&[1.0, -1.0]),
            &poly(&[2.0, 0.0]),
            1,
            0,
            DEFAULT_EQ_TOL,
        )
        .unwrap()
    }

    #[test]
    fn valid_realization_passes_all_checks() {
        let r = example_realization();
        let report = check_realization(&r, 1, 0, &TolProfile::default());
        assert!(report.passed, "{report:?}");
        assert_eq!(report.checks.len(), 7);
        let names: Vec<&str> = report.checks.iter().map(|c| c.name.as_str()).collect();
        assert_eq!(
            names,
            [
                "well_formed",
                "vector_budget",
                "spectrum_a_matches_f",
                "spectrum_b_matches_g",
                "inertia_bounds",
                "decomposition",
                "weyl_forward"
            ]
        );
    }

    #[test]
    fn perturbed_diagonal_fails_spectrum_check() {
        let mut r = example_realization();
        let v = r.b.get(0, 0);
        r.b.set_sym(0, 0, v + 0.1);
        let report = check_realization(&r, 1, 0, &TolProfile::default());
        assert!(!report.passed);
        assert!(!report.check("spectrum_b_matches_g").unwrap().passed);
    }

    #[test]
    fn dropped_vector_fails_decomposition_check() {
        let mut r = example_realization();
        r.plus.clear();
        let report = check_realization(&r, 1, 0, &TolProfile::default());
        assert!(!report.passed);
        assert!(!report.check("decomposition").unwrap().passed);
        assert!(report.check("spectrum_b_matches_g").unwrap().passed);
    }

    #[test]
    fn budget_overrun_is_flagged() {
        let r = example_realization();
        let report = check_realization(&r, 0, 0, &TolProfile::default());
        assert!(!report.check("vector_budget").unwrap().passed);
        assert!(!report.check("inertia_bounds").unwrap().passed);
    }

    #[test]
    fn malformed_certificate_short_circuits() {
        let mut r = example_realization();
        r.plus[0].push(3.0);
        let report = check_realization(&r, 1, 0, &TolProfile::default());
        assert!(!report.passed);
        assert_eq!(report.checks.len(), 1);
        assert_eq!(report.checks[0].name, "well_formed");
    }

    #[test]
    fn forward_check_identity_and_rank_one() {
        let a = SymMatrix::diag(&[3.0, 1.0, -2.0]);
        let tol = TolProfile::default();
        let (p, q, report) = check_weyl_forward(&a, &a, &tol).unwrap();
        assert_eq!((p, q), (0, 0));
        assert!(report.passed);

        let b = a.add_outer(&[1.0, 2.0, -1.0], 1.0).unwrap();
        let (p, q, report) = check_weyl_forward(&a, &b, &tol).unwrap();
        assert_eq!((p, q), (1, 0));
        assert!(report.passed);

        assert!(check_weyl_forward(&a, &SymMatrix::diag(&[1.0]), &tol).is_err());
    }

    #[test]
    fn valid_bordered_passes_all_checks() {
        let r = realize_bordered(
            &poly(&[1.0, -1.0]),
            &poly(&[2.0, 0.0, -2.0]),
            DEFAULT_EQ_TOL,
        )
        .unwrap();
        let report = check_bordered(&r, &TolProfile::default());
        assert!(report.passed, "{report:?}");
        let names: Vec<&str> = report.checks.iter().map(|c| c.name.as_str()).collect();
        assert_eq!(
            names,
            [
                "well_formed",
                "leading_block_exact",
                "leading_block_spectrum",
                "full_spectrum",
                "interlacing"
            ]
        );
    }

    #[test]
    fn bordered_corner_perturbation_fails_full_spectrum() {
        let mut r = realize_bordered(
            &poly(&[1.0, -1.0]),
            &poly(&[2.0, 0.0, -2.0]),
            DEFAULT_EQ_TOL,
        )
        .unwrap();
        let v = r.m.get(2, 2);
        r.m.set_sym(2, 2, v + 0.05);
        let report = check_bordered(&r, &TolProfile::default());
        assert!(!report.check("full_spectrum").unwrap().passed);
        assert!(report.check("leading_block_exact").unwrap().passed);
    }

    #[test]
    fn bordered_equal_degrees_is_malformed() {
        let f = poly(&[1.0]);
        let r = BorderedRealization {
            f: f.clone(),
            g: f,
            m: SymMatrix::diag(&[1.0]),
        };
        let report = check_bordered(&r, &TolProfile::default());
        assert!(!report.passed);
        assert_eq!(report.checks.len(), 1);
        assert_eq!(report.checks[0].name, "well_formed");
    }

    #[test]
    fn report_json_shape() {
        let r = example_realization();
        let report = check_realization(&r, 1, 0, &TolProfile::default());
        let text = serde_json::to_string(&report).unwrap();
        assert!(text.starts_with(r#"{"passed":true,"checks":[{"name":"well_formed""#));
        let back: VerifyReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back.checks.len(), report.checks.len());
    }
}
