//! Dense complex linear algebra for small multi-qubit operators.
//!
//! Everything here targets matrices of dimension at most 16 (four qubits),
//! so the implementations favor clarity and robustness over asymptotic
//! performance. Subsystem index 0 always refers to the leftmost tensor
//! factor.

use num_complex::Complex64;

use crate::error::{Error, Result};

pub type C64 = Complex64;

/// Hermiticity tolerance for density-matrix validation.
pub const HERM_TOL: f64 = 1e-12;
/// Unit-trace tolerance for density-matrix validation.
pub const TRACE_TOL: f64 = 1e-12;
/// Eigenvalues above `-PSD_TOL` count as non-negative.
pub const PSD_TOL: f64 = 1e-10;
/// Jacobi iteration target for the off-diagonal Frobenius norm.
const JACOBI_TOL: f64 = 1e-13;

/// Square complex matrix with tensor-factor bookkeeping, row-major storage.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    subsystem_dims: Vec<usize>,
    data: Vec<C64>,
}

impl ComplexMatrix {
    pub fn zeros(subsystem_dims: &[usize]) -> Self {
        let dim: usize = subsystem_dims.iter().product();
        assert!(dim > 0, "subsystem dims must be nonempty and positive");
        Self {
            dim,
            subsystem_dims: subsystem_dims.to_vec(),
            data: vec![C64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(subsystem_dims: &[usize]) -> Self {
        let mut m = Self::zeros(subsystem_dims);
        for i in 0..m.dim {
            m.data[i * m.dim + i] = C64::new(1.0, 0.0);
        }
        m
    }

    /// Build from row-major complex entries.
    pub fn from_entries(subsystem_dims: &[usize], entries: Vec<C64>) -> Result<Self> {
        let dim: usize = subsystem_dims.iter().product();
        if entries.len() != dim * dim {
            return Err(Error::DimensionMismatch(format!(
                "expected {} entries for dim {}, got {}",
                dim * dim,
                dim,
                entries.len()
            )));
        }
        Ok(Self {
            dim,
            subsystem_dims: subsystem_dims.to_vec(),
            data: entries,
        })
    }

    /// Build from row-major real entries.
    pub fn from_real(subsystem_dims: &[usize], entries: &[f64]) -> Result<Self> {
        Self::from_entries(
            subsystem_dims,
            entries.iter().map(|&x| C64::new(x, 0.0)).collect(),
        )
    }

    /// Projector |psi><psi| from a state vector.
    pub fn outer(subsystem_dims: &[usize], psi: &[C64]) -> Result<Self> {
        let dim: usize = subsystem_dims.iter().product();
        if psi.len() != dim {
            return Err(Error::DimensionMismatch(format!(
                "state vector length {} does not match dim {}",
                psi.len(),
                dim
            )));
        }
        let mut m = Self::zeros(subsystem_dims);
        for i in 0..dim {
            for j in 0..dim {
                m.data[i * dim + j] = psi[i] * psi[j].conj();
            }
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn subsystem_dims(&self) -> &[usize] {
        &self.subsystem_dims
    }

    pub fn get(&self, i: usize, j: usize) -> C64 {
        self.data[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: C64) {
        self.data[i * self.dim + j] = v;
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: C64) {
        self.data[i * self.dim + j] += v;
    }

    pub fn entries(&self) -> &[C64] {
        &self.data
    }

    /// Reinterpret the factor structure without touching entries.
    pub fn with_subsystem_dims(mut self, subsystem_dims: &[usize]) -> Result<Self> {
        let dim: usize = subsystem_dims.iter().product();
        if dim != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "subsystem dims product {} does not match dim {}",
                dim, self.dim
            )));
        }
        self.subsystem_dims = subsystem_dims.to_vec();
        Ok(self)
    }

    pub fn trace(&self) -> C64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn dagger(&self) -> Self {
        let mut out = self.clone();
        for i in 0..self.dim {
            for j in 0..self.dim {
                out.data[i * self.dim + j] = self.get(j, i).conj();
            }
        }
        out
    }

    pub fn scale(&self, s: C64) -> Self {
        let mut out = self.clone();
        for v in &mut out.data {
            *v *= s;
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_dim(other)?;
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(other.data.iter()) {
            *a += b;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_dim(other)?;
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(other.data.iter()) {
            *a -= b;
        }
        Ok(out)
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        self.check_same_dim(other)?;
        let n = self.dim;
        let mut out = Self::zeros(&self.subsystem_dims);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.norm_sqr() == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * other.get(k, j);
                }
            }
        }
        Ok(out)
    }

    /// Maximum entrywise deviation from the conjugate transpose.
    pub fn hermiticity_deviation(&self) -> f64 {
        let mut dev: f64 = 0.0;
        for i in 0..self.dim {
            for j in 0..self.dim {
                dev = dev.max((self.get(i, j) - self.get(j, i).conj()).norm());
            }
        }
        dev
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermiticity_deviation() <= tol
    }

    fn check_same_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(format!(
                "dims {} vs {}",
                self.dim, other.dim
            )));
        }
        Ok(())
    }

    /// Kronecker product; subsystem dims concatenate.
    pub fn tensor(&self, other: &Self) -> Self {
        let da = self.dim;
        let db = other.dim;
        let mut dims = self.subsystem_dims.clone();
        dims.extend_from_slice(&other.subsystem_dims);
        let mut out = Self::zeros(&dims);
        let n = da * db;
        for ia in 0..da {
            for ja in 0..da {
                let a = self.get(ia, ja);
                if a.norm_sqr() == 0.0 {
                    continue;
                }
                for ib in 0..db {
                    for jb in 0..db {
                        out.data[(ia * db + ib) * n + (ja * db + jb)] = a * other.get(ib, jb);
                    }
                }
            }
        }
        out
    }

    fn unravel(&self, mut idx: usize) -> Vec<usize> {
        let mut multi = vec![0usize; self.subsystem_dims.len()];
        for (k, &d) in self.subsystem_dims.iter().enumerate().rev() {
            multi[k] = idx % d;
            idx /= d;
        }
        multi
    }

    fn check_subsystems(&self, subs: &[usize]) -> Result<()> {
        if subs.is_empty() {
            return Err(Error::InvalidSubsystem("empty index set".into()));
        }
        let mut seen = vec![false; self.subsystem_dims.len()];
        for &s in subs {
            if s >= self.subsystem_dims.len() {
                return Err(Error::InvalidSubsystem(format!(
                    "index {} out of range for {} factors",
                    s,
                    self.subsystem_dims.len()
                )));
            }
            if seen[s] {
                return Err(Error::InvalidSubsystem(format!("repeated index {}", s)));
            }
            seen[s] = true;
        }
        Ok(())
    }

    /// Trace out every factor not listed in `keep` (kept order follows `keep`,
    /// which must be ascending relative to the original factor order).
    pub fn partial_trace(&self, keep: &[usize]) -> Result<Self> {
        self.check_subsystems(keep)?;
        let kept_dims: Vec<usize> = keep.iter().map(|&k| self.subsystem_dims[k]).collect();
        let traced: Vec<usize> = (0..self.subsystem_dims.len())
            .filter(|k| !keep.contains(k))
            .collect();
        let out_dim: usize = kept_dims.iter().product();
        let mut out = Self::zeros(&kept_dims);
        for i in 0..self.dim {
            let mi = self.unravel(i);
            for j in 0..self.dim {
                let mj = self.unravel(j);
                if traced.iter().any(|&t| mi[t] != mj[t]) {
                    continue;
                }
                let mut oi = 0usize;
                let mut oj = 0usize;
                for &k in keep {
                    oi = oi * self.subsystem_dims[k] + mi[k];
                    oj = oj * self.subsystem_dims[k] + mj[k];
                }
                out.data[oi * out_dim + oj] += self.get(i, j);
            }
        }
        Ok(out)
    }

    /// Transpose the chosen tensor factor.
    pub fn partial_transpose(&self, subsystem: usize) -> Result<Self> {
        self.check_subsystems(&[subsystem])?;
        let mut out = Self::zeros(&self.subsystem_dims);
        for i in 0..self.dim {
            let mut mi = self.unravel(i);
            for j in 0..self.dim {
                let mut mj = self.unravel(j);
                std::mem::swap(&mut mi[subsystem], &mut mj[subsystem]);
                let ti = self.ravel(&mi);
                let tj = self.ravel(&mj);
                std::mem::swap(&mut mi[subsystem], &mut mj[subsystem]);
                out.data[ti * self.dim + tj] = self.get(i, j);
            }
        }
        Ok(out)
    }

    fn ravel(&self, multi: &[usize]) -> usize {
        let mut idx = 0usize;
        for (k, &d) in self.subsystem_dims.iter().enumerate() {
            idx = idx * d + multi[k];
        }
        idx
    }

    /// Reorder tensor factors: output factor `k` is input factor `perm[k]`.
    pub fn permute_subsystems(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.subsystem_dims.len() {
            return Err(Error::InvalidSubsystem(format!(
                "permutation length {} vs {} factors",
                perm.len(),
                self.subsystem_dims.len()
            )));
        }
        self.check_subsystems(perm)?;
        let new_dims: Vec<usize> = perm.iter().map(|&p| self.subsystem_dims[p]).collect();
        let mut out = Self::zeros(&new_dims);
        for i in 0..self.dim {
            let mi = self.unravel(i);
            let ni: Vec<usize> = perm.iter().map(|&p| mi[p]).collect();
            let oi = out.ravel(&ni);
            for j in 0..self.dim {
                let mj = self.unravel(j);
                let nj: Vec<usize> = perm.iter().map(|&p| mj[p]).collect();
                let oj = out.ravel(&nj);
                out.data[oi * self.dim + oj] = self.get(i, j);
            }
        }
        Ok(out)
    }

    /// Real eigenvalues of a Hermitian matrix, ascending.
    ///
    /// Embeds H = A + iB into the real symmetric 2n x 2n form
    /// [[A, -B], [B, A]] (each eigenvalue doubled) and runs cyclic Jacobi
    /// sweeps until the off-diagonal Frobenius norm drops below 1e-13.
    pub fn hermitian_eigenvalues(&self) -> Result<Vec<f64>> {
        let dev = self.hermiticity_deviation();
        if dev > 1e-10 {
            return Err(Error::NonHermitian { deviation: dev });
        }
        let n = self.dim;
        let m = 2 * n;
        let mut s = vec![0.0f64; m * m];
        for i in 0..n {
            for j in 0..n {
                let a = 0.5 * (self.get(i, j) + self.get(j, i).conj());
                s[i * m + j] = a.re;
                s[i * m + (j + n)] = -a.im;
                s[(i + n) * m + j] = a.im;
                s[(i + n) * m + (j + n)] = a.re;
            }
        }
        jacobi_symmetric(&mut s, m);
        let mut eigs: Vec<f64> = (0..m).map(|i| s[i * m + i]).collect();
        eigs.sort_by(|a, b| a.partial_cmp(b).unwrap());
        Ok(eigs.into_iter().step_by(2).collect())
    }

    /// Determinant via Gaussian elimination with partial pivoting.
    pub fn determinant(&self) -> C64 {
        let n = self.dim;
        let mut a = self.data.clone();
        let mut det = C64::new(1.0, 0.0);
        for col in 0..n {
            let mut pivot = col;
            let mut best = a[col * n + col].norm();
            for r in (col + 1)..n {
                let v = a[r * n + col].norm();
                if v > best {
                    best = v;
                    pivot = r;
                }
            }
            if best == 0.0 {
                return C64::new(0.0, 0.0);
            }
            if pivot != col {
                for c in 0..n {
                    a.swap(col * n + c, pivot * n + c);
                }
                det = -det;
            }
            let p = a[col * n + col];
            det *= p;
            for r in (col + 1)..n {
                let f = a[r * n + col] / p;
                if f.norm_sqr() == 0.0 {
                    continue;
                }
                for c in col..n {
                    let v = a[col * n + c];
                    a[r * n + c] -= f * v;
                }
            }
        }
        det
    }

    /// Leading k x k principal submatrix (loses factor structure).
    pub fn leading_minor(&self, k: usize) -> Result<Self> {
        if k == 0 || k > self.dim {
            return Err(Error::DimensionMismatch(format!(
                "minor size {} for dim {}",
                k, self.dim
            )));
        }
        let mut entries = Vec::with_capacity(k * k);
        for i in 0..k {
            for j in 0..k {
                entries.push(self.get(i, j));
            }
        }
        Self::from_entries(&[k], entries)
    }
}

fn jacobi_symmetric(s: &mut [f64], n: usize) {
    let off_norm = |s: &[f64]| -> f64 {
        let mut acc = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    acc += s[i * n + j] * s[i * n + j];
                }
            }
        }
        acc.sqrt()
    };
    for _sweep in 0..100 {
        if off_norm(s) < JACOBI_TOL {
            return;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = s[p * n + q];
                if apq.abs() < JACOBI_TOL / (n as f64 * n as f64) {
                    continue;
                }
                let app = s[p * n + p];
                let aqq = s[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let sn = t * c;
                for k in 0..n {
                    let skp = s[k * n + p];
                    let skq = s[k * n + q];
                    s[k * n + p] = c * skp - sn * skq;
                    s[k * n + q] = sn * skp + c * skq;
                }
                for k in 0..n {
                    let spk = s[p * n + k];
                    let sqk = s[q * n + k];
                    s[p * n + k] = c * spk - sn * sqk;
                    s[q * n + k] = sn * spk + c * sqk;
                }
            }
        }
    }
}

/// Validated quantum state: Hermitian, unit trace, positive semidefinite.
#[derive(Debug, Clone)]
pub struct DensityMatrix {
    mat: ComplexMatrix,
}

impl DensityMatrix {
    pub fn new(mat: ComplexMatrix) -> Result<Self> {
        Self::new_with_eps(mat, PSD_TOL)
    }

    /// `psd_eps` is the magnitude below which negative eigenvalues are
    /// treated as numerical zero.
    pub fn new_with_eps(mat: ComplexMatrix, psd_eps: f64) -> Result<Self> {
        let dev = mat.hermiticity_deviation();
        if dev > HERM_TOL {
            return Err(Error::InvalidState(format!(
                "hermiticity deviation {dev:.3e}"
            )));
        }
        let tr = mat.trace();
        if (tr.re - 1.0).abs() > TRACE_TOL || tr.im.abs() > TRACE_TOL {
            return Err(Error::InvalidState(format!("trace {tr} is not 1")));
        }
        let eigs = mat.hermitian_eigenvalues()?;
        let min = eigs.first().copied().unwrap_or(0.0);
        if min < -psd_eps {
            return Err(Error::InvalidState(format!("min eigenvalue {min:.3e}")));
        }
        Ok(Self { mat })
    }

    /// Skip validation; caller vouches for the invariants.
    pub fn new_unchecked(mat: ComplexMatrix) -> Self {
        Self { mat }
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.mat
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.mat
    }
}

impl std::ops::Deref for DensityMatrix {
    type Target = ComplexMatrix;

    fn deref(&self) -> &ComplexMatrix {
        &self.mat
    }
}
