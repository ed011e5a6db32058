//! Buzek-Hillery cloning channels built from the machine-state Gram rules.
//!
//! A channel is stored as its action on the operator basis |i><j| of the
//! input space; application to an arbitrary operator is linear combination.
//! The copy dimension M is 2 for local (per-qubit) cloning and 4 for
//! non-local (pair) cloning.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, DensityMatrix, C64};
use crate::states::BlochTwoQubit;

/// Whether a cloner acts per qubit or on the whole pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Local,
    NonLocal,
}

impl Mode {
    /// Copy dimension of the underlying machine.
    pub fn m(&self) -> usize {
        match self {
            Mode::Local => 2,
            Mode::NonLocal => 4,
        }
    }
}

/// Upper end of the valid lambda interval, from <X_ii|X_ii> >= 0.
pub fn lambda_max(m: usize) -> f64 {
    1.0 / (2.0 * (m as f64 - 1.0))
}

/// State-independent machine parameter 1/(2(M+1)).
pub fn si_lambda(mode: Mode) -> f64 {
    1.0 / (2.0 * (mode.m() as f64 + 1.0))
}

/// Machine-state overlap table: lambda, mu = 1 - M lambda and the copy
/// dimension define every inner product of the transformed machine states.
#[derive(Debug, Clone, Copy)]
pub struct MachineGram {
    m: usize,
    lambda: f64,
    mu: f64,
}

impl MachineGram {
    pub fn new(m: usize, lambda: f64) -> Result<Self> {
        if m != 2 && m != 4 {
            return Err(Error::InvalidParameter(format!(
                "copy dimension M={m} not supported (need 2 or 4)"
            )));
        }
        let max = lambda_max(m);
        if !(0.0..=max + 1e-15).contains(&lambda) {
            return Err(Error::InvalidLambda { lambda, max });
        }
        Ok(Self {
            m,
            lambda,
            mu: 1.0 - m as f64 * lambda,
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    /// <X_ii|X_ii> = 1 - 2(M-1) lambda.
    pub fn x_norm(&self) -> f64 {
        1.0 - 2.0 * (self.m as f64 - 1.0) * self.lambda
    }

    /// State-independent amplitude constants c^2 = 2/(M+1), d^2 = 1/(2(M+1)).
    pub fn si_amplitude_constants(m: usize) -> (f64, f64) {
        (2.0 / (m as f64 + 1.0), 1.0 / (2.0 * (m as f64 + 1.0)))
    }
}

/// 1 -> 2 cloning channel on an M-dimensional input.
#[derive(Debug, Clone)]
pub struct Channel {
    m: usize,
    mu: f64,
    /// maps[i*M + j] is the image of |i><j|, an M^2 x M^2 operator on
    /// (original copy, clone copy).
    maps: Vec<ComplexMatrix>,
}

impl Channel {
    pub fn new(gram: &MachineGram) -> Self {
        Self::with_x_norm(gram.m, gram.lambda, gram.x_norm())
    }

    /// Audit variant with an explicit <X_ii|X_ii> value; the standard
    /// construction uses 1 - 2(M-1) lambda.
    pub fn with_x_norm(m: usize, lambda: f64, x_norm: f64) -> Self {
        let mu = 1.0 - m as f64 * lambda;
        let out_dims = Self::output_dims(m);
        let mut maps = Vec::with_capacity(m * m);
        for i in 0..m {
            for j in 0..m {
                let mut op = ComplexMatrix::zeros(&out_dims);
                let idx = |a: usize, b: usize| a * m + b;
                if i == j {
                    op.add_at(idx(i, i), idx(i, i), C64::new(x_norm, 0.0));
                    for k in 0..m {
                        if k == i {
                            continue;
                        }
                        // lambda |chi_ik><chi_ik| with chi_ik = |ik> + |ki>
                        let lam = C64::new(lambda, 0.0);
                        for &r in &[idx(i, k), idx(k, i)] {
                            for &c in &[idx(i, k), idx(k, i)] {
                                op.add_at(r, c, lam);
                            }
                        }
                    }
                } else {
                    let half_mu = C64::new(mu / 2.0, 0.0);
                    for l in 0..m {
                        if l == j {
                            continue;
                        }
                        op.add_at(idx(i, i), idx(j, l), half_mu);
                        op.add_at(idx(i, i), idx(l, j), half_mu);
                    }
                    for k in 0..m {
                        if k == i {
                            continue;
                        }
                        op.add_at(idx(i, k), idx(j, j), half_mu);
                        op.add_at(idx(k, i), idx(j, j), half_mu);
                    }
                }
                maps.push(op);
            }
        }
        Self { m, mu, maps }
    }

    fn output_dims(m: usize) -> Vec<usize> {
        match m {
            2 => vec![2, 2],
            4 => vec![2, 2, 2, 2],
            _ => vec![m, m],
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    /// Apply the channel to an M x M operator, yielding the joint
    /// (original, clone) operator.
    pub fn apply(&self, rho: &ComplexMatrix) -> Result<ComplexMatrix> {
        if rho.dim() != self.m {
            return Err(Error::DimensionMismatch(format!(
                "channel expects dim {}, got {}",
                self.m,
                rho.dim()
            )));
        }
        let mut out = ComplexMatrix::zeros(&Self::output_dims(self.m));
        for i in 0..self.m {
            for j in 0..self.m {
                let w = rho.get(i, j);
                if w.norm_sqr() == 0.0 {
                    continue;
                }
                out = out.add(&self.maps[i * self.m + j].scale(w))?;
            }
        }
        Ok(out)
    }
}

/// Output-pair label; subsystems numbered 1,2 for the originals and 3,4 for
/// the clones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PairLabel {
    P12,
    P13,
    P14,
    P23,
    P24,
    P34,
}

impl PairLabel {
    pub fn as_str(&self) -> &'static str {
        match self {
            PairLabel::P12 => "12",
            PairLabel::P13 => "13",
            PairLabel::P14 => "14",
            PairLabel::P23 => "23",
            PairLabel::P24 => "24",
            PairLabel::P34 => "34",
        }
    }

    pub fn keep(&self) -> [usize; 2] {
        match self {
            PairLabel::P12 => [0, 1],
            PairLabel::P13 => [0, 2],
            PairLabel::P14 => [0, 3],
            PairLabel::P23 => [1, 2],
            PairLabel::P24 => [1, 3],
            PairLabel::P34 => [2, 3],
        }
    }
}

/// Reduced two-qubit outputs of a joint cloning operation plus the full
/// four-qubit state, ordered (1,2,3,4).
#[derive(Debug, Clone)]
pub struct CloneOutputs {
    pub mode: Mode,
    pub joint: ComplexMatrix,
    pairs: Vec<(PairLabel, DensityMatrix)>,
}

impl CloneOutputs {
    fn from_joint(mode: Mode, joint: ComplexMatrix) -> Result<Self> {
        let labels: [PairLabel; 4] = match mode {
            Mode::Local => [
                PairLabel::P13,
                PairLabel::P24,
                PairLabel::P14,
                PairLabel::P23,
            ],
            Mode::NonLocal => [
                PairLabel::P13,
                PairLabel::P24,
                PairLabel::P12,
                PairLabel::P34,
            ],
        };
        let mut pairs = Vec::with_capacity(4);
        for label in labels {
            let red = joint.partial_trace(&label.keep())?;
            pairs.push((label, DensityMatrix::new_unchecked(red)));
        }
        Ok(Self { mode, joint, pairs })
    }

    pub fn pair(&self, label: PairLabel) -> Option<&DensityMatrix> {
        self.pairs.iter().find(|(l, _)| *l == label).map(|(_, m)| m)
    }

    /// The two local (same-party) pairs 13 and 24.
    pub fn local_pairs(&self) -> [&DensityMatrix; 2] {
        [
            self.pair(PairLabel::P13).unwrap(),
            self.pair(PairLabel::P24).unwrap(),
        ]
    }

    /// The two pairs whose entanglement is being broadcast: {14, 23} in
    /// local mode, {12, 34} in non-local mode.
    pub fn broadcast_pairs(&self) -> [&DensityMatrix; 2] {
        match self.mode {
            Mode::Local => [
                self.pair(PairLabel::P14).unwrap(),
                self.pair(PairLabel::P23).unwrap(),
            ],
            Mode::NonLocal => [
                self.pair(PairLabel::P12).unwrap(),
                self.pair(PairLabel::P34).unwrap(),
            ],
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (PairLabel, &DensityMatrix)> {
        self.pairs.iter().map(|(l, m)| (*l, m))
    }
}

/// Apply one local cloner to each qubit of a two-qubit state.
///
/// Qubit 1 is cloned onto subsystem 3 and qubit 2 onto subsystem 4; the
/// joint output is reordered to (1,2,3,4).
pub fn clone_joint_local(rho12: &ComplexMatrix, lambda: f64) -> Result<CloneOutputs> {
    if rho12.dim() != 4 {
        return Err(Error::DimensionMismatch(format!(
            "expected a two-qubit state, got dim {}",
            rho12.dim()
        )));
    }
    let channel = Channel::new(&MachineGram::new(2, lambda)?);
    let rho = rho12.clone().with_subsystem_dims(&[2, 2])?;
    // joint over (1,3,2,4): sum over the operator basis of both qubits
    let mut joint = ComplexMatrix::zeros(&[2, 2, 2, 2]);
    for i1 in 0..2 {
        for j1 in 0..2 {
            let m1 = &channel.maps[i1 * 2 + j1];
            for i2 in 0..2 {
                for j2 in 0..2 {
                    let w = rho.get(i1 * 2 + i2, j1 * 2 + j2);
                    if w.norm_sqr() == 0.0 {
                        continue;
                    }
                    let m2 = &channel.maps[i2 * 2 + j2];
                    joint = joint.add(&m1.tensor(m2).scale(w))?;
                }
            }
        }
    }
    let joint = joint.permute_subsystems(&[0, 2, 1, 3])?;
    CloneOutputs::from_joint(Mode::Local, joint)
}

/// Apply the non-local (M=4) cloner to a two-qubit state; the clone pair
/// occupies subsystems (3,4).
pub fn clone_joint_nonlocal(rho12: &ComplexMatrix, lambda: f64) -> Result<CloneOutputs> {
    if rho12.dim() != 4 {
        return Err(Error::DimensionMismatch(format!(
            "expected a two-qubit state, got dim {}",
            rho12.dim()
        )));
    }
    let channel = Channel::new(&MachineGram::new(4, lambda)?);
    let joint = channel.apply(rho12)?;
    CloneOutputs::from_joint(Mode::NonLocal, joint)
}

/// Closed-form joint and reduced outputs for a pure input with real
/// amplitudes, evaluated directly from the traced-out transformation sums.
pub fn bh_pure_outputs(
    amplitudes: &[f64],
    lambda: f64,
    m: usize,
) -> Result<(ComplexMatrix, ComplexMatrix)> {
    if amplitudes.len() != m {
        return Err(Error::DimensionMismatch(format!(
            "{} amplitudes for M={}",
            amplitudes.len(),
            m
        )));
    }
    let norm: f64 = amplitudes.iter().map(|a| a * a).sum();
    if (norm - 1.0).abs() > 1e-10 {
        return Err(Error::Unnormalized(norm));
    }
    let gram = MachineGram::new(m, lambda)?;
    let x_norm = gram.x_norm();
    let mu = gram.mu();
    let idx = |a: usize, b: usize| a * m + b;
    let mut joint = ComplexMatrix::zeros(&Channel::output_dims(m));
    let mut reduced = ComplexMatrix::zeros(&[m]);
    for i in 0..m {
        let wi = amplitudes[i] * amplitudes[i];
        joint.add_at(idx(i, i), idx(i, i), C64::new(x_norm * wi, 0.0));
        reduced.add_at(i, i, C64::new(x_norm * wi, 0.0));
        for j in 0..m {
            if j == i {
                continue;
            }
            // lambda |chi_ij><chi_ij| weighted by |alpha_i|^2
            let lam = C64::new(lambda * wi, 0.0);
            for &r in &[idx(i, j), idx(j, i)] {
                for &c in &[idx(i, j), idx(j, i)] {
                    joint.add_at(r, c, lam);
                }
            }
            reduced.add_at(i, i, C64::new(lambda * wi, 0.0));
            reduced.add_at(j, j, C64::new(lambda * wi, 0.0));
            // mu/2 cross terms between |ii> and the symmetric chi states
            let w = C64::new(mu / 2.0 * amplitudes[i] * amplitudes[j], 0.0);
            for l in 0..m {
                if l == j {
                    continue;
                }
                joint.add_at(idx(i, i), idx(j, l), w);
                joint.add_at(idx(i, i), idx(l, j), w);
                joint.add_at(idx(j, l), idx(i, i), w.conj());
                joint.add_at(idx(l, j), idx(i, i), w.conj());
            }
            reduced.add_at(i, j, C64::new(mu * amplitudes[i] * amplitudes[j], 0.0));
        }
    }
    Ok((joint, reduced))
}

/// F = <psi| rho |psi>.
pub fn fidelity(rho: &ComplexMatrix, psi: &[C64]) -> Result<f64> {
    if psi.len() != rho.dim() {
        return Err(Error::DimensionMismatch(format!(
            "state vector length {} vs matrix dim {}",
            psi.len(),
            rho.dim()
        )));
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for i in 0..rho.dim() {
        for j in 0..rho.dim() {
            acc += psi[i].conj() * rho.get(i, j) * psi[j];
        }
    }
    debug_assert!(acc.im.abs() < 1e-12);
    Ok(acc.re)
}

/// Reduced Bloch outputs of a local cloning operation.
#[derive(Debug, Clone, Copy)]
pub struct LocalBlochOutputs {
    pub p13: BlochTwoQubit,
    pub p24: BlochTwoQubit,
    /// p14 = p23
    pub cross: BlochTwoQubit,
}

/// Closed-form Bloch maps for local cloning: same-party pairs pick up the
/// machine correlation diag(2l, 2l, 1-4l), cross-party pairs keep the input
/// correlations shrunk by mu^2 (each qubit depolarized independently).
#[allow(clippy::needless_range_loop)]
pub fn local_bloch_outputs(input: &BlochTwoQubit, lambda: f64) -> LocalBlochOutputs {
    let mu = 1.0 - 2.0 * lambda;
    let t_machine = [2.0 * lambda, 2.0 * lambda, 1.0 - 4.0 * lambda];
    let scale3 = |v: [f64; 3], s: f64| [v[0] * s, v[1] * s, v[2] * s];
    let mut cross_t = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            cross_t[i][j] = mu * mu * input.t[i][j];
        }
    }
    LocalBlochOutputs {
        p13: BlochTwoQubit::diag(scale3(input.x, mu), scale3(input.x, mu), t_machine),
        p24: BlochTwoQubit::diag(scale3(input.y, mu), scale3(input.y, mu), t_machine),
        cross: BlochTwoQubit {
            x: scale3(input.x, mu),
            y: scale3(input.y, mu),
            t: cross_t,
        },
    }
}

/// Reduced Bloch outputs of a non-local cloning operation.
#[derive(Debug, Clone, Copy)]
pub struct NonLocalBlochOutputs {
    pub p13: BlochTwoQubit,
    pub p24: BlochTwoQubit,
    /// p12 = p34
    pub kept: BlochTwoQubit,
}

/// Closed-form Bloch maps for non-local cloning with mu = 1 - 4 lambda:
/// the copy pairs are uniformly shrunk, {mu x, mu y, mu T}.
#[allow(clippy::needless_range_loop)]
pub fn nonlocal_bloch_outputs(input: &BlochTwoQubit, lambda: f64) -> NonLocalBlochOutputs {
    let mu = 1.0 - 4.0 * lambda;
    let t_machine = [2.0 * lambda, 2.0 * lambda, 1.0 - 8.0 * lambda];
    let scale3 = |v: [f64; 3], s: f64| [v[0] * s, v[1] * s, v[2] * s];
    let mut kept_t = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            kept_t[i][j] = mu * input.t[i][j];
        }
    }
    NonLocalBlochOutputs {
        p13: BlochTwoQubit::diag(scale3(input.x, mu), scale3(input.x, mu), t_machine),
        p24: BlochTwoQubit::diag(scale3(input.y, mu), scale3(input.y, mu), t_machine),
        kept: BlochTwoQubit {
            x: scale3(input.x, mu),
            y: scale3(input.y, mu),
            t: kept_t,
        },
    }
}

/// How the machine parameter is chosen.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Flavor {
    /// lambda = 1/(2(M+1)), independent of the input.
    StateIndependent,
    /// Fixed lambda supplied by the caller.
    StaticStateDependent(f64),
    /// lambda re-optimized per input from the distortion closed forms.
    DynamicStateDependent,
}

/// A cloner is a mode (local or non-local) plus a lambda-selection flavor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClonerConfig {
    pub mode: Mode,
    pub flavor: Flavor,
}

impl ClonerConfig {
    pub fn new(mode: Mode, flavor: Flavor) -> Self {
        Self { mode, flavor }
    }
}

/// Explicit single-qubit joint output matrix for input alpha|0> + beta|1>.
///
/// Kept as an independent reference for the channel construction.
pub fn local_pure_joint_reference(alpha_sq: f64, lambda: f64) -> ComplexMatrix {
    let a = alpha_sq.sqrt();
    let b = (1.0 - alpha_sq).sqrt();
    let mu = 1.0 - 2.0 * lambda;
    let e = a * b * mu / 2.0;
    let rows = [
        [alpha_sq * (1.0 - 2.0 * lambda), e, e, 0.0],
        [e, lambda, lambda, e],
        [e, lambda, lambda, e],
        [0.0, e, e, (1.0 - alpha_sq) * (1.0 - 2.0 * lambda)],
    ];
    let flat: Vec<f64> = rows.iter().flatten().copied().collect();
    ComplexMatrix::from_real(&[2, 2], &flat).unwrap()
}
