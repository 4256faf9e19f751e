//! Dense real symmetric linear algebra: cyclic Jacobi eigendecomposition,
//! tolerant inertia counting, and the orthogonal alignment that matches a
//! diagonal model to a congruent matrix with the same spectrum.
//!
//! Everything here is value-in/value-out over row-major `f64` storage. At the
//! problem sizes this crate targets (n well under 100) Jacobi is accurate,
//! easy to make deterministic, and fast enough that no blocked or
//! tridiagonal-QL machinery earns its complexity.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::RootedPoly;

/// Eigenvalues within `zero_tol·max(1, ‖M‖_F)` of zero count as zero.
pub const DEFAULT_ZERO_TOL: f64 = 1e-8;
/// Spectrum agreement required before alignment is attempted.
pub const MATCH_TOL: f64 = 1e-6;
/// Max-norm residual the alignment output must satisfy.
pub const ALIGN_TOL: f64 = 1e-8;
/// Jacobi stops once the off-diagonal Frobenius norm drops below this
/// relative threshold.
const EIGEN_OFF_NORM_REL: f64 = 1e-12;
const EIGEN_MAX_SWEEPS: usize = 50;

/// Real symmetric matrix with exact (bitwise) symmetry maintained by
/// construction: every mutation writes both mirror entries.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(into = "MatrixJson", try_from = "MatrixJson")]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
}

/// Wire format: `{"n": 2, "rows": [[...], [...]]}`, row-major.
#[derive(Serialize, Deserialize)]
struct MatrixJson {
    n: usize,
    rows: Vec<Vec<f64>>,
}

impl From<SymMatrix> for MatrixJson {
    fn from(m: SymMatrix) -> MatrixJson {
        MatrixJson {
            n: m.n,
            rows: m.rows(),
        }
    }
}

impl TryFrom<MatrixJson> for SymMatrix {
    type Error = Error;

    fn try_from(j: MatrixJson) -> Result<SymMatrix> {
        if j.n == 0 {
            return Err(Error::invalid("matrix order must be at least 1"));
        }
        if j.rows.len() != j.n {
            return Err(Error::invalid(format!(
                "matrix declares n={} but has {} rows",
                j.n,
                j.rows.len()
            )));
        }
        SymMatrix::from_rows(&j.rows)
    }
}

impl SymMatrix {
    /// Zero matrix of the given order (order 0 is allowed internally for
    /// empty chain starts; it never appears on the wire).
    pub fn zeros(n: usize) -> SymMatrix {
        SymMatrix {
            n,
            data: vec![0.0; n * n],
        }
    }

    /// Diagonal matrix from the given entries.
    pub fn diag(values: &[f64]) -> SymMatrix {
        let mut m = SymMatrix::zeros(values.len());
        for (i, &v) in values.iter().enumerate() {
            m.data[i * m.n + i] = v;
        }
        m
    }

    /// Builds from dense rows, enforcing symmetry by averaging the two mirror
    /// entries. Rejects ragged shapes and non-finite values. Averaging a
    /// matrix that is already exactly symmetric reproduces it bit-for-bit,
    /// so serialization round-trips are exact.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<SymMatrix> {
        let n = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::invalid(format!(
                    "row {i} has length {}, expected {n}",
                    row.len()
                )));
            }
            if let Some(bad) = row.iter().find(|v| !v.is_finite()) {
                return Err(Error::invalid(format!(
                    "matrix entries must be finite, found {bad} in row {i}"
                )));
            }
        }
        let mut m = SymMatrix::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            for (j, &upper) in row.iter().enumerate().skip(i) {
                let avg = (upper + rows[j][i]) / 2.0;
                m.data[i * n + j] = avg;
                m.data[j * n + i] = avg;
            }
        }
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    /// Writes both mirror entries, preserving exact symmetry.
    pub fn set_sym(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n + j] = v;
        self.data[j * self.n + i] = v;
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        (0..self.n)
            .map(|i| self.data[i * self.n..(i + 1) * self.n].to_vec())
            .collect()
    }

    pub fn frob_norm(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |acc, v| acc.max(v.abs()))
    }

    /// Largest entrywise difference; orders must agree.
    pub fn max_abs_diff(&self, other: &SymMatrix) -> f64 {
        assert_eq!(self.n, other.n, "max_abs_diff: order mismatch");
        self.data
            .iter()
            .zip(&other.data)
            .fold(0.0, |acc, (a, b)| acc.max((a - b).abs()))
    }

    /// M + sign·v·vᵀ, exactly symmetric. `sign` must be ±1.
    pub fn add_outer(&self, v: &[f64], sign: f64) -> Result<SymMatrix> {
        if v.len() != self.n {
            return Err(Error::domain(format!(
                "add_outer: vector length {} does not match order {}",
                v.len(),
                self.n
            )));
        }
        if sign != 1.0 && sign != -1.0 {
            return Err(Error::domain(format!("add_outer: sign must be ±1, got {sign}")));
        }
        let mut out = self.clone();
        for i in 0..self.n {
            for j in i..self.n {
                let w = out.data[i * self.n + j] + sign * v[i] * v[j];
                out.data[i * self.n + j] = w;
                out.data[j * self.n + i] = w;
            }
        }
        Ok(out)
    }

    /// Entrywise difference; orders must agree.
    pub fn sub(&self, other: &SymMatrix) -> Result<SymMatrix> {
        if self.n != other.n {
            return Err(Error::domain(format!(
                "sub: order mismatch {} vs {}",
                self.n, other.n
            )));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        Ok(SymMatrix { n: self.n, data })
    }

    /// Order n+1 matrix with `self` as the leading principal block (copied
    /// bit-for-bit), `border` as the last column/row, and `corner` in the
    /// bottom-right cell.
    pub fn border_extend(&self, border: &[f64], corner: f64) -> Result<SymMatrix> {
        if border.len() != self.n {
            return Err(Error::domain(format!(
                "border_extend: border length {} does not match order {}",
                border.len(),
                self.n
            )));
        }
        let m = self.n + 1;
        let mut out = SymMatrix::zeros(m);
        for (i, &edge) in border.iter().enumerate() {
            for j in 0..self.n {
                out.data[i * m + j] = self.data[i * self.n + j];
            }
            out.data[i * m + self.n] = edge;
            out.data[self.n * m + i] = edge;
        }
        out.data[self.n * m + self.n] = corner;
        Ok(out)
    }

    /// Leading principal k×k block, copied bit-for-bit.
    pub fn leading_block(&self, k: usize) -> SymMatrix {
        assert!(k <= self.n, "leading_block: k exceeds order");
        let mut out = SymMatrix::zeros(k);
        for i in 0..k {
            for j in 0..k {
                out.data[i * k + j] = self.data[i * self.n + j];
            }
        }
        out
    }
}

/// General square matrix; used for eigenvector bundles and alignment
/// products, where intermediate values are not symmetric.
#[derive(Debug, Clone, PartialEq)]
pub struct Mat {
    n: usize,
    data: Vec<f64>,
}

impl Mat {
    pub fn identity(n: usize) -> Mat {
        let mut m = Mat {
            n,
            data: vec![0.0; n * n],
        };
        for i in 0..n {
            m.data[i * n + i] = 1.0;
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n + j] = v;
    }

    pub fn col(&self, j: usize) -> Vec<f64> {
        (0..self.n).map(|i| self.get(i, j)).collect()
    }

    pub fn matvec(&self, v: &[f64]) -> Vec<f64> {
        assert_eq!(v.len(), self.n, "matvec: length mismatch");
        (0..self.n)
            .map(|i| (0..self.n).map(|k| self.get(i, k) * v[k]).sum())
            .collect()
    }

    /// self · otherᵀ.
    pub fn matmul_bt(&self, other: &Mat) -> Mat {
        assert_eq!(self.n, other.n, "matmul_bt: order mismatch");
        let n = self.n;
        let mut out = Mat {
            n,
            data: vec![0.0; n * n],
        };
        for i in 0..n {
            for j in 0..n {
                out.data[i * n + j] = (0..n).map(|k| self.get(i, k) * other.get(j, k)).sum();
            }
        }
        out
    }

    /// V·diag(d)·Vᵀ as an exactly symmetric matrix.
    pub fn congruence_diag(&self, d: &[f64]) -> SymMatrix {
        assert_eq!(d.len(), self.n, "congruence_diag: length mismatch");
        let n = self.n;
        let mut out = SymMatrix::zeros(n);
        for i in 0..n {
            for j in i..n {
                let w: f64 = (0..n).map(|k| self.get(i, k) * d[k] * self.get(j, k)).sum();
                out.data[i * n + j] = w;
                out.data[j * n + i] = w;
            }
        }
        out
    }

    /// V·S·Vᵀ, symmetrized by averaging the (numerically near-equal) mirror
    /// entries of the raw product.
    pub fn congruence_sym(&self, s: &SymMatrix) -> SymMatrix {
        assert_eq!(self.n, s.n(), "congruence_sym: order mismatch");
        let n = self.n;
        // w = V·S
        let mut w = vec![0.0; n * n];
        for i in 0..n {
            for k in 0..n {
                let vik = self.get(i, k);
                if vik != 0.0 {
                    for j in 0..n {
                        w[i * n + j] += vik * s.get(k, j);
                    }
                }
            }
        }
        // out = (w·Vᵀ) symmetrized
        let mut out = SymMatrix::zeros(n);
        for i in 0..n {
            for j in i..n {
                let rij: f64 = (0..n).map(|k| w[i * n + k] * self.get(j, k)).sum();
                let rji: f64 = (0..n).map(|k| w[j * n + k] * self.get(i, k)).sum();
                let avg = (rij + rji) / 2.0;
                out.data[i * n + j] = avg;
                out.data[j * n + i] = avg;
            }
        }
        out
    }

    /// ‖VᵀV − I‖_max.
    pub fn orthonormality_residual(&self) -> f64 {
        let n = self.n;
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                let dot: f64 = (0..n).map(|k| self.get(k, i) * self.get(k, j)).sum();
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((dot - target).abs());
            }
        }
        worst
    }
}

/// Spectral decomposition M = V·diag(values)·Vᵀ with `values` non-increasing
/// and `vectors` holding the paired orthonormal eigenvector columns.
#[derive(Debug, Clone)]
pub struct EigenDecomp {
    pub values: Vec<f64>,
    pub vectors: Mat,
}

/// Signed eigenvalue counts of a symmetric matrix under a zero threshold.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Inertia {
    pub n_plus: usize,
    pub n_minus: usize,
    pub n_zero: usize,
    pub zero_threshold: f64,
}

fn off_diag_norm(data: &[f64], n: usize) -> f64 {
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let v = data[i * n + j];
                sum += v * v;
            }
        }
    }
    sum.sqrt()
}

/// Eigendecomposition by cyclic Jacobi sweeps.
///
/// Sweeps run until the off-diagonal Frobenius norm falls below
/// 1e−12·max(1, ‖M‖_F), failing with the residual after 50 sweeps (a bound
/// that dense symmetric matrices at this scale never approach; quadratic
/// convergence typically finishes in under ten). Output columns are sorted by
/// non-increasing eigenvalue (stable, so degenerate clusters keep rotation
/// order) and sign-fixed so each column's largest-magnitude entry is
/// positive, making serialized results reproducible.
pub fn sym_eigen(m: &SymMatrix) -> Result<EigenDecomp> {
    let n = m.n;
    let mut a = m.data.clone();
    let mut v = Mat::identity(n);
    let threshold = EIGEN_OFF_NORM_REL * m.frob_norm().max(1.0);

    let mut off = off_diag_norm(&a, n);
    let mut sweeps = 0;
    while off > threshold {
        if sweeps == EIGEN_MAX_SWEEPS {
            return Err(Error::numerical(
                format!("eigensolver did not converge within {EIGEN_MAX_SWEEPS} sweeps"),
                off,
            ));
        }
        for p in 0..n.saturating_sub(1) {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                // Classical two-sided rotation choosing the smaller angle:
                // t solves t² + 2θt − 1 = 0 with θ = (a_qq − a_pp)/(2a_pq).
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let denom = theta.abs() + (1.0 + theta * theta).sqrt();
                let t = if theta >= 0.0 { 1.0 / denom } else { -1.0 / denom };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;

                a[p * n + p] -= t * apq;
                a[q * n + q] += t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[p * n + k] = a[k * n + p];
                    a[k * n + q] = s * akp + c * akq;
                    a[q * n + k] = a[k * n + q];
                }
                for k in 0..n {
                    let vkp = v.data[k * n + p];
                    let vkq = v.data[k * n + q];
                    v.data[k * n + p] = c * vkp - s * vkq;
                    v.data[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
        sweeps += 1;
        off = off_diag_norm(&a, n);
    }

    let raw: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| raw[j].total_cmp(&raw[i]));

    let values: Vec<f64> = order.iter().map(|&i| raw[i]).collect();
    let mut vectors = Mat::identity(n);
    for (dst, &src) in order.iter().enumerate() {
        let mut col = v.col(src);
        let mut lead = 0;
        for (k, entry) in col.iter().enumerate() {
            if entry.abs() > col[lead].abs() {
                lead = k;
            }
        }
        if col[lead] < 0.0 {
            for entry in &mut col {
                *entry = -*entry;
            }
        }
        for (k, &entry) in col.iter().enumerate() {
            vectors.set(k, dst, entry);
        }
    }
    Ok(EigenDecomp { values, vectors })
}

/// Counts eigenvalues above/below ±τ with τ = zero_tol·max(1, ‖M‖_F); the
/// band around zero absorbs rounding of genuinely-zero eigenvalues.
pub fn inertia(m: &SymMatrix, zero_tol: f64) -> Result<Inertia> {
    if zero_tol.is_nan() || zero_tol < 0.0 {
        return Err(Error::domain(format!(
            "inertia: zero_tol must be nonnegative, got {zero_tol}"
        )));
    }
    let tau = zero_tol * m.frob_norm().max(1.0);
    let decomp = sym_eigen(m)?;
    let n_plus = decomp.values.iter().filter(|&&v| v > tau).count();
    let n_minus = decomp.values.iter().filter(|&&v| v < -tau).count();
    Ok(Inertia {
        n_plus,
        n_minus,
        n_zero: m.n - n_plus - n_minus,
        zero_threshold: tau,
    })
}

/// Orthogonal V with V·diag(roots of h)·Vᵀ ≈ C, valid whenever C's spectrum
/// matches the roots of h.
///
/// V is the eigenvector matrix of C with columns in non-increasing eigenvalue
/// order — the same order `roots()` uses — so index pairing is the correct
/// correspondence. Inside a degenerate eigenvalue cluster any orthonormal
/// basis works, because the diagonal entries it must reproduce agree within
/// tolerance. The residual postcondition is checked before returning.
pub fn align_orthogonal(h: &RootedPoly, c: &SymMatrix) -> Result<Mat> {
    if h.degree() != c.n() {
        return Err(Error::domain(format!(
            "align_orthogonal: degree {} does not match order {}",
            h.degree(),
            c.n()
        )));
    }
    let scale = c.max_abs().max(1.0);
    let decomp = sym_eigen(c)?;
    let mut worst = 0.0;
    let mut worst_i = 0;
    for (i, (&lambda, &root)) in decomp.values.iter().zip(h.roots()).enumerate() {
        let diff = (lambda - root).abs();
        if diff > worst {
            worst = diff;
            worst_i = i;
        }
    }
    if worst > MATCH_TOL * scale {
        return Err(Error::domain(format!(
            "align_orthogonal: spectrum mismatch at position {worst_i}: eigenvalue {} vs root {} (difference {worst:.3e})",
            decomp.values[worst_i],
            h.roots()[worst_i]
        )));
    }
    let rebuilt = decomp.vectors.congruence_diag(h.roots());
    let residual = rebuilt.max_abs_diff(c);
    if residual > ALIGN_TOL * scale {
        return Err(Error::numerical(
            "align_orthogonal: residual exceeds tolerance".to_string(),
            residual,
        ));
    }
    Ok(decomp.vectors)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn approx(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn eigen_already_diagonal() {
        let m = SymMatrix::diag(&[3.0, 1.0, 0.0]);
        let e = sym_eigen(&m).unwrap();
        assert_eq!(e.values, vec![3.0, 1.0, 0.0]);
        assert!(e.vectors.orthonormality_residual() <= 1e-10);
        assert!(e.vectors.congruence_diag(&e.values).max_abs_diff(&m) <= 1e-12);
    }

    #[test]
    fn eigen_unsorted_diagonal_permutes() {
        let m = SymMatrix::diag(&[1.0, 3.0]);
        let e = sym_eigen(&m).unwrap();
        assert_eq!(e.values, vec![3.0, 1.0]);
        // column 0 must select the second coordinate
        assert_eq!(e.vectors.col(0), vec![0.0, 1.0]);
        assert_eq!(e.vectors.col(1), vec![1.0, 0.0]);
    }

    #[test]
    fn eigen_exchange_matrix() {
        let m = SymMatrix::from_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap();
        let e = sym_eigen(&m).unwrap();
        let r = 0.5f64.sqrt();
        assert!(approx(e.values[0], 1.0, 1e-12));
        assert!(approx(e.values[1], -1.0, 1e-12));
        // sign convention: largest-magnitude entry positive (ties resolve to
        // the first index)
        assert!(approx(e.vectors.get(0, 0), r, 1e-12));
        assert!(approx(e.vectors.get(1, 0), r, 1e-12));
        assert!(approx(e.vectors.get(0, 1), r, 1e-12));
        assert!(approx(e.vectors.get(1, 1), -r, 1e-12));
    }

    #[test]
    fn eigen_zero_matrix() {
        let e = sym_eigen(&SymMatrix::zeros(4)).unwrap();
        assert_eq!(e.values, vec![0.0; 4]);
        assert!(e.vectors.orthonormality_residual() <= 1e-12);
    }

    #[test]
    fn eigen_dense_reconstruction() {
        // deterministic dense test matrix with spread-out entries
        let n = 8;
        let mut m = SymMatrix::zeros(n);
        for i in 0..n {
            for j in i..n {
                let v = ((i * 7 + j * 3 + 1) % 11) as f64 - 5.0;
                m.set_sym(i, j, v / (1.0 + (i + j) as f64));
            }
        }
        let e = sym_eigen(&m).unwrap();
        assert!(e.values.windows(2).all(|w| w[0] >= w[1]));
        assert!(e.vectors.orthonormality_residual() <= 1e-10);
        let residual = e.vectors.congruence_diag(&e.values).max_abs_diff(&m);
        assert!(residual <= 1e-10 * m.max_abs().max(1.0), "residual {residual}");
        let trace: f64 = (0..n).map(|i| m.get(i, i)).sum();
        let sum: f64 = e.values.iter().sum();
        assert!(approx(trace, sum, 1e-10 * m.frob_norm().max(1.0)));
    }

    #[test]
    fn inertia_examples() {
        let i1 = inertia(&SymMatrix::diag(&[1.0, -1.0, 0.0]), DEFAULT_ZERO_TOL).unwrap();
        assert_eq!((i1.n_plus, i1.n_minus, i1.n_zero), (1, 1, 1));

        let rank_one = SymMatrix::zeros(2).add_outer(&[1.0, 2.0], 1.0).unwrap();
        let i2 = inertia(&rank_one, DEFAULT_ZERO_TOL).unwrap();
        assert_eq!((i2.n_plus, i2.n_minus, i2.n_zero), (1, 0, 1));

        let i3 = inertia(&SymMatrix::diag(&[-1.0, -1.0, -1.0]), DEFAULT_ZERO_TOL).unwrap();
        assert_eq!((i3.n_plus, i3.n_minus, i3.n_zero), (0, 3, 0));
        assert!(i3.zero_threshold > 0.0);

        assert!(inertia(&rank_one, -1.0).is_err());
    }

    #[test]
    fn add_outer_examples() {
        let zero = SymMatrix::zeros(2);
        let m = zero.add_outer(&[1.0, 0.0], 1.0).unwrap();
        assert_eq!(m.rows(), vec![vec![1.0, 0.0], vec![0.0, 0.0]]);

        let arbitrary = SymMatrix::from_rows(&[vec![2.0, -1.0], vec![-1.0, 5.0]]).unwrap();
        assert_eq!(arbitrary.add_outer(&[0.0, 0.0], 1.0).unwrap(), arbitrary);

        let eye = SymMatrix::diag(&[1.0, 1.0]);
        let m = eye.add_outer(&[1.0, 1.0], -1.0).unwrap();
        assert_eq!(m.rows(), vec![vec![0.0, -1.0], vec![-1.0, 0.0]]);

        assert!(eye.add_outer(&[1.0], 1.0).is_err());
        assert!(eye.add_outer(&[1.0, 1.0], 2.0).is_err());
    }

    #[test]
    fn border_extend_keeps_block_bitwise() {
        let m = SymMatrix::diag(&[1.0, -1.0]);
        let b = m.border_extend(&[0.5, 0.25], 7.0).unwrap();
        assert_eq!(b.n(), 3);
        assert_eq!(b.leading_block(2), m);
        assert_eq!(b.get(0, 2), 0.5);
        assert_eq!(b.get(2, 1), 0.25);
        assert_eq!(b.get(2, 2), 7.0);
        assert!(m.border_extend(&[1.0], 0.0).is_err());
    }

    #[test]
    fn align_identity_case() {
        let h = RootedPoly::new(vec![3.0, 1.0]).unwrap();
        let c = SymMatrix::diag(&[3.0, 1.0]);
        let v = align_orthogonal(&h, &c).unwrap();
        assert_eq!(v.col(0), vec![1.0, 0.0]);
        assert_eq!(v.col(1), vec![0.0, 1.0]);
    }

    #[test]
    fn align_exchange_case() {
        let h = RootedPoly::new(vec![1.0, -1.0]).unwrap();
        let c = SymMatrix::from_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap();
        let v = align_orthogonal(&h, &c).unwrap();
        let rebuilt = v.congruence_diag(h.roots());
        assert!(rebuilt.max_abs_diff(&c) <= 1e-12);
    }

    #[test]
    fn align_degenerate_cluster() {
        let h = RootedPoly::new(vec![5.0, 5.0]).unwrap();
        let c = SymMatrix::diag(&[5.0, 5.0]);
        let v = align_orthogonal(&h, &c).unwrap();
        assert!(v.congruence_diag(h.roots()).max_abs_diff(&c) <= 1e-12);
    }

    #[test]
    fn align_rejects_spectrum_mismatch() {
        let h = RootedPoly::new(vec![3.0, 1.0]).unwrap();
        let c = SymMatrix::diag(&[3.0, 2.0]);
        let err = align_orthogonal(&h, &c).unwrap_err();
        assert!(matches!(err, Error::Domain(msg) if msg.contains("mismatch")));

        let short = RootedPoly::new(vec![3.0]).unwrap();
        assert!(align_orthogonal(&short, &c).is_err());
    }

    #[test]
    fn congruence_sym_matches_direct_product() {
        let s = SymMatrix::from_rows(&[vec![2.0, 1.0], vec![1.0, -3.0]]).unwrap();
        let r = 0.5f64.sqrt();
        let mut v = Mat::identity(2);
        v.set(0, 0, r);
        v.set(1, 0, r);
        v.set(0, 1, r);
        v.set(1, 1, -r);
        let out = v.congruence_sym(&s);
        // hand product: V·S·Vᵀ for the Hadamard-like V above
        let expect = SymMatrix::from_rows(&[vec![0.5, 2.5], vec![2.5, -1.5]]).unwrap();
        assert!(out.max_abs_diff(&expect) <= 1e-12);
    }

    #[test]
    fn matrix_json_round_trip() {
        let m = SymMatrix::from_rows(&[vec![1.5, 0.75], vec![0.75, -0.5]]).unwrap();
        let text = serde_json::to_string(&m).unwrap();
        assert_eq!(text, r#"{"n":2,"rows":[[1.5,0.75],[0.75,-0.5]]}"#);
        let back: SymMatrix = serde_json::from_str(&text).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn matrix_json_rejects_bad_shapes() {
        assert!(serde_json::from_str::<SymMatrix>(r#"{"n":2,"rows":[[1.0,2.0]]}"#).is_err());
        assert!(serde_json::from_str::<SymMatrix>(r#"{"n":0,"rows":[]}"#).is_err());
        assert!(
            serde_json::from_str::<SymMatrix>(r#"{"n":1,"rows":[[null]]}"#).is_err()
        );
    }

    #[test]
    fn matrix_json_averages_asymmetry() {
        let m: SymMatrix =
            serde_json::from_str(r#"{"n":2,"rows":[[0.0,1.0],[3.0,0.0]]}"#).unwrap();
        assert_eq!(m.get(0, 1), 2.0);
        assert_eq!(m.get(1, 0), 2.0);
    }
}
