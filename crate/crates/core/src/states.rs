//! Two-qubit input families and the Bloch / correlation-matrix picture.
//!
//! Pauli convention: sigma_1 = X, sigma_2 = Y with [[0,-i],[i,0]],
//! sigma_3 = Z. Amplitudes alpha, beta are taken real nonnegative with
//! alpha^2 the sole family parameter.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, DensityMatrix, C64, PSD_TOL};

/// Pauli matrix sigma_k for k in 1..=3.
pub fn pauli(k: usize) -> ComplexMatrix {
    let z = C64::new(0.0, 0.0);
    let one = C64::new(1.0, 0.0);
    let i = C64::new(0.0, 1.0);
    let entries = match k {
        1 => vec![z, one, one, z],
        2 => vec![z, -i, i, z],
        3 => vec![one, z, z, -one],
        _ => panic!("pauli index must be 1..=3"),
    };
    ComplexMatrix::from_entries(&[2], entries).unwrap()
}

/// Bloch-vector / correlation-matrix form of a two-qubit operator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochTwoQubit {
    pub x: [f64; 3],
    pub y: [f64; 3],
    pub t: [[f64; 3]; 3],
}

impl BlochTwoQubit {
    pub fn zero() -> Self {
        Self {
            x: [0.0; 3],
            y: [0.0; 3],
            t: [[0.0; 3]; 3],
        }
    }

    pub fn diag(x: [f64; 3], y: [f64; 3], t_diag: [f64; 3]) -> Self {
        let mut t = [[0.0; 3]; 3];
        for k in 0..3 {
            t[k][k] = t_diag[k];
        }
        Self { x, y, t }
    }
}

/// rho = (1/4)[I + sum x_i s_i(x)I + sum y_i I(x)s_i + sum t_ij s_i(x)s_j].
///
/// Always Hermitian with unit trace; positivity depends on the input and is
/// the caller's concern.
pub fn bloch_to_density(b: &BlochTwoQubit) -> ComplexMatrix {
    let i2 = ComplexMatrix::identity(&[2]);
    let mut acc = i2.tensor(&i2);
    for k in 0..3 {
        let s = pauli(k + 1);
        acc = acc
            .add(&s.tensor(&i2).scale(C64::new(b.x[k], 0.0)))
            .unwrap();
        acc = acc
            .add(&i2.tensor(&s).scale(C64::new(b.y[k], 0.0)))
            .unwrap();
    }
    for i in 0..3 {
        for j in 0..3 {
            if b.t[i][j] != 0.0 {
                let s = pauli(i + 1).tensor(&pauli(j + 1));
                acc = acc.add(&s.scale(C64::new(b.t[i][j], 0.0))).unwrap();
            }
        }
    }
    acc.scale(C64::new(0.25, 0.0))
}

/// Inverse of [`bloch_to_density`] via the trace formulas
/// x_i = Tr[rho (s_i (x) I)], t_ij = Tr[rho (s_i (x) s_j)].
pub fn density_to_bloch(rho: &ComplexMatrix) -> Result<BlochTwoQubit> {
    if rho.dim() != 4 {
        return Err(Error::DimensionMismatch(format!(
            "expected a 4x4 matrix, got dim {}",
            rho.dim()
        )));
    }
    let rho = rho.clone().with_subsystem_dims(&[2, 2])?;
    let i2 = ComplexMatrix::identity(&[2]);
    let tr = |op: &ComplexMatrix| -> f64 { rho.matmul(op).unwrap().trace().re };
    let mut b = BlochTwoQubit::zero();
    for k in 0..3 {
        let s = pauli(k + 1);
        b.x[k] = tr(&s.tensor(&i2));
        b.y[k] = tr(&i2.tensor(&s));
    }
    for i in 0..3 {
        for j in 0..3 {
            b.t[i][j] = tr(&pauli(i + 1).tensor(&pauli(j + 1)));
        }
    }
    Ok(b)
}

/// Non-maximally entangled pure state alpha|00> + beta|11>.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NmeParams {
    pub alpha_sq: f64,
}

/// Werner-like state p|psi><psi| + (1-p)/4 I with |psi> the NME state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WernerParams {
    pub alpha_sq: f64,
    pub p: f64,
}

/// Bell-diagonal state with correlation matrix diag(c1, c2, c3).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BdsParams {
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
}

fn unit_interval(name: &str, v: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&v) {
        return Err(Error::InvalidParameter(format!("{name}={v} outside [0,1]")));
    }
    Ok(())
}

impl NmeParams {
    pub fn new(alpha_sq: f64) -> Result<Self> {
        unit_interval("alpha_sq", alpha_sq)?;
        Ok(Self { alpha_sq })
    }

    pub fn bloch(&self) -> BlochTwoQubit {
        let a2 = self.alpha_sq;
        let ab = (a2 * (1.0 - a2)).sqrt();
        let z = 2.0 * a2 - 1.0;
        BlochTwoQubit::diag([0.0, 0.0, z], [0.0, 0.0, z], [2.0 * ab, -2.0 * ab, 1.0])
    }
}

impl WernerParams {
    pub fn new(alpha_sq: f64, p: f64) -> Result<Self> {
        unit_interval("alpha_sq", alpha_sq)?;
        unit_interval("p", p)?;
        Ok(Self { alpha_sq, p })
    }

    pub fn bloch(&self) -> BlochTwoQubit {
        let a2 = self.alpha_sq;
        let p = self.p;
        let ab = (a2 * (1.0 - a2)).sqrt();
        let z = p * (2.0 * a2 - 1.0);
        BlochTwoQubit::diag(
            [0.0, 0.0, z],
            [0.0, 0.0, z],
            [2.0 * p * ab, -2.0 * p * ab, p],
        )
    }
}

impl BdsParams {
    pub fn new(c1: f64, c2: f64, c3: f64) -> Result<Self> {
        for (name, v) in [("c1", c1), ("c2", c2), ("c3", c3)] {
            if !(-1.0..=1.0).contains(&v) {
                return Err(Error::InvalidParameter(format!(
                    "{name}={v} outside [-1,1]"
                )));
            }
        }
        Ok(Self { c1, c2, c3 })
    }

    /// The four Bell-basis weights (eigenvalues of the state).
    pub fn bell_weights(&self) -> [f64; 4] {
        let (c1, c2, c3) = (self.c1, self.c2, self.c3);
        [
            (1.0 - c1 - c2 - c3) / 4.0,
            (1.0 - c1 + c2 + c3) / 4.0,
            (1.0 + c1 - c2 + c3) / 4.0,
            (1.0 + c1 + c2 - c3) / 4.0,
        ]
    }

    pub fn is_physical(&self) -> bool {
        self.bell_weights().iter().all(|&w| w >= -PSD_TOL)
    }

    pub fn bloch(&self) -> BlochTwoQubit {
        BlochTwoQubit::diag([0.0; 3], [0.0; 3], [self.c1, self.c2, self.c3])
    }
}

/// Parameters of one of the input families handled by the cloning and
/// broadcasting layers. `Pure` is the single-qubit state alpha|0>+beta|1>.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FamilyParams {
    Pure { alpha_sq: f64 },
    Nme(NmeParams),
    Werner(WernerParams),
    Bds(BdsParams),
}

impl FamilyParams {
    /// Two-qubit Bloch form; errors for the single-qubit family.
    pub fn bloch(&self) -> Result<BlochTwoQubit> {
        match self {
            FamilyParams::Pure { .. } => Err(Error::InvalidParameter(
                "single-qubit pure family has no two-qubit Bloch form".into(),
            )),
            FamilyParams::Nme(p) => Ok(p.bloch()),
            FamilyParams::Werner(p) => Ok(p.bloch()),
            FamilyParams::Bds(p) => Ok(p.bloch()),
        }
    }
}

/// Construct the density matrix of a two-qubit family member.
pub fn make_family(params: &FamilyParams) -> Result<DensityMatrix> {
    match params {
        FamilyParams::Pure { alpha_sq } => {
            unit_interval("alpha_sq", *alpha_sq)?;
            let (a, b) = (alpha_sq.sqrt(), (1.0 - alpha_sq).sqrt());
            let psi = [Complex64::new(a, 0.0), Complex64::new(b, 0.0)];
            Ok(DensityMatrix::new_unchecked(
                ComplexMatrix::outer(&[2], &psi).unwrap(),
            ))
        }
        FamilyParams::Nme(p) => {
            NmeParams::new(p.alpha_sq)?;
            DensityMatrix::new(bloch_to_density(&p.bloch()))
        }
        FamilyParams::Werner(p) => {
            WernerParams::new(p.alpha_sq, p.p)?;
            DensityMatrix::new(bloch_to_density(&p.bloch()))
        }
        FamilyParams::Bds(p) => {
            BdsParams::new(p.c1, p.c2, p.c3)?;
            if !p.is_physical() {
                let w = p.bell_weights();
                return Err(Error::UnphysicalState(format!(
                    "Bell weights {w:?} contain a negative entry"
                )));
            }
            DensityMatrix::new(bloch_to_density(&p.bloch()))
        }
    }
}

/// Diagnostics attached to a physicality check.
#[derive(Debug, Clone, Copy)]
pub struct PhysicalityReport {
    pub hermiticity_deviation: f64,
    pub trace_deviation: f64,
    pub min_eigenvalue: f64,
    pub physical: bool,
}

/// Hermitian + unit trace + PSD check with diagnostics.
pub fn is_physical(m: &ComplexMatrix, psd_eps: f64) -> PhysicalityReport {
    let hdev = m.hermiticity_deviation();
    let tr = m.trace();
    let tdev = ((tr.re - 1.0).powi(2) + tr.im.powi(2)).sqrt();
    let min_eig = if hdev <= 1e-10 {
        m.hermitian_eigenvalues()
            .map(|e| e.first().copied().unwrap_or(0.0))
            .unwrap_or(f64::NEG_INFINITY)
    } else {
        f64::NEG_INFINITY
    };
    PhysicalityReport {
        hermiticity_deviation: hdev,
        trace_deviation: tdev,
        min_eigenvalue: min_eig,
        physical: hdev <= crate::linalg::HERM_TOL
            && tdev <= crate::linalg::TRACE_TOL
            && min_eig >= -psd_eps,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn maximally_mixed_roundtrip() {
        let b = BlochTwoQubit::zero();
        let rho = bloch_to_density(&b);
        for i in 0..4 {
            for j in 0..4 {
                let expect = if i == j { 0.25 } else { 0.0 };
                assert_abs_diff_eq!(rho.get(i, j).re, expect, epsilon = 1e-15);
                assert_abs_diff_eq!(rho.get(i, j).im, 0.0, epsilon = 1e-15);
            }
        }
        let back = density_to_bloch(&rho).unwrap();
        assert_eq!(back, BlochTwoQubit::zero());
    }

    #[test]
    fn nme_half_is_bell_state() {
        let p = NmeParams::new(0.5).unwrap();
        let rho = bloch_to_density(&p.bloch());
        // |Phi+><Phi+|: corners and center of the outer block are 1/2
        assert_abs_diff_eq!(rho.get(0, 0).re, 0.5, epsilon = 1e-14);
        assert_abs_diff_eq!(rho.get(0, 3).re, 0.5, epsilon = 1e-14);
        assert_abs_diff_eq!(rho.get(3, 0).re, 0.5, epsilon = 1e-14);
        assert_abs_diff_eq!(rho.get(3, 3).re, 0.5, epsilon = 1e-14);
        assert_abs_diff_eq!(rho.get(1, 1).re, 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!(rho.get(2, 2).re, 0.0, epsilon = 1e-14);
    }

    #[test]
    fn werner_bloch_closed_form() {
        let w = WernerParams::new(0.3, 0.8).unwrap();
        let rho = make_family(&FamilyParams::Werner(w)).unwrap();
        let b = density_to_bloch(rho.matrix()).unwrap();
        let ab = (0.3f64 * 0.7).sqrt();
        assert_abs_diff_eq!(b.x[2], 0.8 * (0.6 - 1.0), epsilon = 1e-12);
        assert_abs_diff_eq!(b.t[0][0], 2.0 * 0.8 * ab, epsilon = 1e-12);
        assert_abs_diff_eq!(b.t[1][1], -2.0 * 0.8 * ab, epsilon = 1e-12);
        assert_abs_diff_eq!(b.t[2][2], 0.8, epsilon = 1e-12);
    }

    #[test]
    fn werner_limits() {
        let bell =
            make_family(&FamilyParams::Werner(WernerParams::new(0.5, 1.0).unwrap())).unwrap();
        assert_abs_diff_eq!(bell.get(0, 3).re, 0.5, epsilon = 1e-13);
        let mixed =
            make_family(&FamilyParams::Werner(WernerParams::new(0.3, 0.0).unwrap())).unwrap();
        for i in 0..4 {
            assert_abs_diff_eq!(mixed.get(i, i).re, 0.25, epsilon = 1e-13);
        }
    }

    #[test]
    fn bds_bloch_is_diagonal_correlation() {
        let p = BdsParams::new(-0.5, -0.5, -0.5).unwrap();
        let rho = make_family(&FamilyParams::Bds(p)).unwrap();
        let b = density_to_bloch(rho.matrix()).unwrap();
        assert_abs_diff_eq!(b.x[2], 0.0, epsilon = 1e-13);
        assert_abs_diff_eq!(b.y[2], 0.0, epsilon = 1e-13);
        assert_abs_diff_eq!(b.t[0][0], -0.5, epsilon = 1e-13);
        assert_abs_diff_eq!(b.t[1][1], -0.5, epsilon = 1e-13);
        assert_abs_diff_eq!(b.t[2][2], -0.5, epsilon = 1e-13);
    }

    #[test]
    fn bds_physicality_boundary() {
        // c1 = c2 = -7/8: physical window for c3 is [-1, -3/4]
        let ok = BdsParams::new(-7.0 / 8.0, -7.0 / 8.0, -0.8).unwrap();
        assert!(ok.is_physical());
        assert!(make_family(&FamilyParams::Bds(ok)).is_ok());

        let bad = BdsParams::new(-7.0 / 8.0, -7.0 / 8.0, -0.5).unwrap();
        assert!(!bad.is_physical());
        assert!(matches!(
            make_family(&FamilyParams::Bds(bad)),
            Err(Error::UnphysicalState(_))
        ));
    }

    #[test]
    fn bds_vertex_is_physical_with_zero_eigenvalue() {
        let v = BdsParams::new(1.0, 1.0, -1.0).unwrap();
        assert!(v.is_physical());
        let rho = make_family(&FamilyParams::Bds(v)).unwrap();
        let eigs = rho.hermitian_eigenvalues().unwrap();
        assert_abs_diff_eq!(eigs[0], 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(eigs[3], 1.0, epsilon = 1e-12);
    }

    #[test]
    fn nme_is_pure_on_grid() {
        for k in 0..=100 {
            let a2 = k as f64 / 100.0;
            let rho = make_family(&FamilyParams::Nme(NmeParams::new(a2).unwrap())).unwrap();
            let purity = rho.matmul(rho.matrix()).unwrap().trace().re;
            assert_abs_diff_eq!(purity, 1.0, epsilon = 1e-10);
        }
    }

    #[test]
    fn is_physical_diagnostics() {
        let good = bloch_to_density(&BlochTwoQubit::zero());
        let rep = is_physical(&good, 1e-10);
        assert!(rep.physical);
        assert_abs_diff_eq!(rep.min_eigenvalue, 0.25, epsilon = 1e-12);

        let bad = ComplexMatrix::from_real(&[2], &[1.5, 0.0, 0.0, -0.5]).unwrap();
        let rep = is_physical(&bad, 1e-10);
        assert!(!rep.physical);
        assert!(rep.min_eigenvalue < -0.4);
    }
}
