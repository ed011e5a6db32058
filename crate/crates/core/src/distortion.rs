//! Hilbert-Schmidt distortions of cloner outputs and the machine parameters
//! minimizing them.
//!
//! Closed-form optimal lambdas exist for every supported input family; a
//! grid-plus-golden-section scalar minimizer is provided as an independent
//! numeric cross-check against the channel-level distortion curves.

use crate::cloner::{
    clone_joint_local, clone_joint_nonlocal, lambda_max, si_lambda, ClonerConfig, Flavor, Mode,
    PairLabel,
};
use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::states::{make_family, BlochTwoQubit, FamilyParams};

/// Squared Hilbert-Schmidt distance Tr[(a - b)^2] between Hermitian
/// operators.
pub fn hs_dist_sq(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<f64> {
    let d = a.sub(b)?;
    let v = d.matmul(&d)?.trace();
    Ok(v.re)
}

/// Squared HS distance between two-qubit operators in Bloch form,
/// (1/4)[|dx|^2 + |dy|^2 + |dT|_F^2].
pub fn hs_dist_sq_bloch(a: &BlochTwoQubit, b: &BlochTwoQubit) -> f64 {
    let mut acc = 0.0;
    for k in 0..3 {
        acc += (a.x[k] - b.x[k]).powi(2);
        acc += (a.y[k] - b.y[k]).powi(2);
        for l in 0..3 {
            acc += (a.t[k][l] - b.t[k][l]).powi(2);
        }
    }
    acc / 4.0
}

/// Single-copy distortion of an M-dimensional pure input, M(M-1) lambda^2.
pub fn closed_da(m: usize, lambda: f64) -> f64 {
    (m * (m - 1)) as f64 * lambda * lambda
}

/// Two-copy distortion of a single-qubit pure input against two ideal
/// copies: 2 a^2 b^2 - 12 a^2 b^2 lambda + 8 lambda^2 with b^2 = 1 - a^2.
pub fn closed_dab_pure(alpha_sq: f64, lambda: f64) -> f64 {
    let s = alpha_sq * (1.0 - alpha_sq);
    2.0 * s - 12.0 * s * lambda + 8.0 * lambda * lambda
}

/// Variant of [`closed_dab_pure`] with the constant term 2 a^2 (1 - 2 a^2);
/// kept only so tests can demonstrate it disagrees with the channel output.
pub fn closed_dab_pure_literal(alpha_sq: f64, lambda: f64) -> f64 {
    let s = alpha_sq * (1.0 - alpha_sq);
    2.0 * alpha_sq * (1.0 - 2.0 * alpha_sq) - 12.0 * s * lambda + 8.0 * lambda * lambda
}

/// Distortion of the local output pair (original qubit, its clone) from two
/// ideal copies of the first marginal; depends on the input only through the
/// marginal Bloch vector x.
pub fn closed_d13_local(x: [f64; 3], lambda: f64) -> f64 {
    let mut t_machine = [[0.0; 3]; 3];
    t_machine[0][0] = 2.0 * lambda;
    t_machine[1][1] = 2.0 * lambda;
    t_machine[2][2] = 1.0 - 4.0 * lambda;
    let norm_x_sq: f64 = x.iter().map(|v| v * v).sum();
    let mut acc = 2.0 * 4.0 * lambda * lambda * norm_x_sq;
    for i in 0..3 {
        for j in 0..3 {
            acc += (t_machine[i][j] - x[i] * x[j]).powi(2);
        }
    }
    acc / 4.0
}

/// Which closed-form lambda rule applies to a (family, mode) combination.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LambdaRule {
    PureQubit,
    NmeLocal,
    NmeNonLocal,
    WernerLocal,
    WernerNonLocal,
    BdsLocal,
    BdsNonLocal,
}

impl LambdaRule {
    pub fn for_family(family: &FamilyParams, mode: Mode) -> Result<Self> {
        match (family, mode) {
            (FamilyParams::Pure { .. }, Mode::Local) => Ok(LambdaRule::PureQubit),
            (FamilyParams::Pure { .. }, Mode::NonLocal) => Err(Error::InvalidParameter(
                "single-qubit inputs have no non-local cloner".into(),
            )),
            (FamilyParams::Nme(_), Mode::Local) => Ok(LambdaRule::NmeLocal),
            (FamilyParams::Nme(_), Mode::NonLocal) => Ok(LambdaRule::NmeNonLocal),
            (FamilyParams::Werner(_), Mode::Local) => Ok(LambdaRule::WernerLocal),
            (FamilyParams::Werner(_), Mode::NonLocal) => Ok(LambdaRule::WernerNonLocal),
            (FamilyParams::Bds(_), Mode::Local) => Ok(LambdaRule::BdsLocal),
            (FamilyParams::Bds(_), Mode::NonLocal) => Ok(LambdaRule::BdsNonLocal),
        }
    }
}

/// Closed-form distortion-minimizing lambda for the given family.
pub fn optimal_lambda(rule: LambdaRule, family: &FamilyParams) -> Result<f64> {
    let lam = match (rule, family) {
        (LambdaRule::PureQubit, FamilyParams::Pure { alpha_sq }) => {
            3.0 * alpha_sq * (1.0 - alpha_sq) / 4.0
        }
        (LambdaRule::NmeLocal, FamilyParams::Nme(p)) => {
            let s = p.alpha_sq * (1.0 - p.alpha_sq);
            s / (2.0 * (1.0 - s))
        }
        (LambdaRule::NmeNonLocal, FamilyParams::Nme(p)) => {
            let s = p.alpha_sq * (1.0 - p.alpha_sq);
            13.0 * s / (4.0 * (6.0 + s))
        }
        (LambdaRule::WernerLocal, FamilyParams::Werner(p)) => {
            let w = p.p * p.p * (2.0 * p.alpha_sq - 1.0).powi(2);
            (1.0 - w) / (2.0 * (3.0 + w))
        }
        (LambdaRule::WernerNonLocal, FamilyParams::Werner(pr)) => {
            let a2 = pr.alpha_sq;
            let a4 = a2 * a2;
            let p = pr.p;
            let num = -3.0
                + p * p * (34.0 * a4 - 34.0 * a2 - 3.0)
                + 6.0 * p.powi(3) * (3.0 * a4 - 3.0 * a2 + 1.0);
            let den = 2.0 * (-15.0 + p * p * (8.0 * a4 - 8.0 * a2 - 33.0));
            num / den
        }
        (LambdaRule::BdsLocal, FamilyParams::Bds(_)) => 1.0 / 6.0,
        (LambdaRule::BdsNonLocal, FamilyParams::Bds(p)) => {
            let (c1, c2, c3) = (p.c1, p.c2, p.c3);
            let num = 21.0 * c1 * c1 + 6.0 * c1 * c2 * c3 + 21.0 * c2 * c2 + 4.0 * c3 * c3 + 12.0;
            let den = 8.0 * (12.0 * c1 * c1 + 12.0 * c2 * c2 + 11.0 * c3 * c3 + 15.0);
            num / den
        }
        _ => {
            return Err(Error::InvalidParameter(format!(
                "rule {rule:?} does not apply to {family:?}"
            )))
        }
    };
    // the unconstrained optimum can leave the machine-parameter interval
    // near the corners of the parameter box; the constrained optimum then
    // sits on the boundary
    let m = match rule {
        LambdaRule::PureQubit
        | LambdaRule::NmeLocal
        | LambdaRule::WernerLocal
        | LambdaRule::BdsLocal => 2,
        _ => 4,
    };
    Ok(lam.clamp(0.0, lambda_max(m)))
}

/// Sign-flipped Werner-local expression, (w - 1)/(2(3 + w)); retained as an
/// audit reference because it is never a valid machine parameter.
pub fn werner_local_lambda_sign_flipped(alpha_sq: f64, p: f64) -> f64 {
    let w = p * p * (2.0 * alpha_sq - 1.0).powi(2);
    (w - 1.0) / (2.0 * (3.0 + w))
}

/// Resolve the lambda implied by a cloner configuration for a given input.
pub fn resolve_lambda(cfg: &ClonerConfig, family: &FamilyParams) -> Result<f64> {
    match cfg.flavor {
        Flavor::StateIndependent => Ok(si_lambda(cfg.mode)),
        Flavor::StaticStateDependent(lam) => {
            let max = lambda_max(cfg.mode.m());
            if !(0.0..=max + 1e-15).contains(&lam) {
                return Err(Error::InvalidLambda { lambda: lam, max });
            }
            Ok(lam)
        }
        Flavor::DynamicStateDependent => {
            let rule = LambdaRule::for_family(family, cfg.mode)?;
            optimal_lambda(rule, family)
        }
    }
}

/// Result of a 1D numeric minimization.
#[derive(Debug, Clone, Copy)]
pub struct NumericOptimum {
    pub lambda: f64,
    pub value: f64,
    /// The minimum sits at an end of the search interval.
    pub at_boundary: bool,
}

/// Minimize a scalar function over [lo, hi]: 201-point grid bracketing
/// followed by golden-section refinement to interval width 1e-9.
pub fn minimize_scalar<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64) -> NumericOptimum {
    const GRID: usize = 200;
    let step = (hi - lo) / GRID as f64;
    let mut best_i = 0usize;
    let mut best_v = f64::INFINITY;
    for i in 0..=GRID {
        let v = f(lo + step * i as f64);
        if v < best_v {
            best_v = v;
            best_i = i;
        }
    }
    let mut a = lo + step * best_i.saturating_sub(1) as f64;
    let mut b = lo + step * (best_i + 1).min(GRID) as f64;
    let inv_phi = (5.0f64.sqrt() - 1.0) / 2.0;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    while b - a > 1e-9 {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    let lambda = 0.5 * (a + b);
    NumericOptimum {
        lambda,
        value: f(lambda),
        at_boundary: lambda - lo < 1e-6 || hi - lambda < 1e-6,
    }
}

/// Channel-level joint distortion of a two-qubit input: squared HS distance
/// of the full cloner output from two ideal copies of the input.
pub fn d_joint_channel(mode: Mode, rho_in: &ComplexMatrix, lambda: f64) -> Result<f64> {
    let outputs = match mode {
        Mode::Local => clone_joint_local(rho_in, lambda)?,
        Mode::NonLocal => clone_joint_nonlocal(rho_in, lambda)?,
    };
    let rho = rho_in.clone().with_subsystem_dims(&[2, 2])?;
    let ideal = rho.tensor(&rho);
    // outputs.joint is ordered (1,2,3,4); ideal copies are (1,2) and (3,4)
    hs_dist_sq(&outputs.joint, &ideal)
}

/// Channel-level distortion of one broadcast copy from the input.
pub fn d_copy_channel(mode: Mode, rho_in: &ComplexMatrix, lambda: f64) -> Result<f64> {
    let outputs = match mode {
        Mode::Local => clone_joint_local(rho_in, lambda)?,
        Mode::NonLocal => clone_joint_nonlocal(rho_in, lambda)?,
    };
    let label = match mode {
        Mode::Local => PairLabel::P14,
        Mode::NonLocal => PairLabel::P12,
    };
    hs_dist_sq(outputs.pair(label).unwrap().matrix(), rho_in)
}

/// Channel-level local-pair distortion: squared HS distance of the
/// (original, clone) pair from two ideal copies of the first marginal.
pub fn d13_channel(rho_in: &ComplexMatrix, lambda: f64) -> Result<f64> {
    let outputs = clone_joint_local(rho_in, lambda)?;
    let rho = rho_in.clone().with_subsystem_dims(&[2, 2])?;
    let marginal = rho.partial_trace(&[0])?;
    let ideal = marginal.tensor(&marginal);
    hs_dist_sq(outputs.pair(PairLabel::P13).unwrap().matrix(), &ideal)
}

/// Distortion summary for one cloning operation.
#[derive(Debug, Clone, Copy)]
pub struct DistortionReport {
    pub lambda: f64,
    /// Single-copy distortion of the underlying machine.
    pub d_single: f64,
    /// Joint distortion: two ideal copies for pure single-qubit inputs and
    /// the non-local machine, local-pair distortion for local cloning of
    /// two-qubit inputs.
    pub d_joint: f64,
}

/// Evaluate both distortion figures for a family member at a given lambda.
pub fn distortion_report(
    family: &FamilyParams,
    mode: Mode,
    lambda: f64,
) -> Result<DistortionReport> {
    match (family, mode) {
        (FamilyParams::Pure { alpha_sq }, Mode::Local) => Ok(DistortionReport {
            lambda,
            d_single: closed_da(2, lambda),
            d_joint: closed_dab_pure(*alpha_sq, lambda),
        }),
        (FamilyParams::Pure { .. }, Mode::NonLocal) => Err(Error::InvalidParameter(
            "single-qubit inputs have no non-local cloner".into(),
        )),
        (_, Mode::Local) => {
            let bloch = family.bloch()?;
            Ok(DistortionReport {
                lambda,
                d_single: closed_da(2, lambda),
                d_joint: closed_d13_local(bloch.x, lambda),
            })
        }
        (_, Mode::NonLocal) => {
            let rho = make_family(family)?;
            Ok(DistortionReport {
                lambda,
                d_single: closed_da(4, lambda),
                d_joint: d_joint_channel(mode, rho.matrix(), lambda)?,
            })
        }
    }
}
