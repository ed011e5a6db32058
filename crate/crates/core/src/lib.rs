//! Simulation of symmetric 1-to-2 quantum cloning machines on qubit pairs:
//! channel construction, Hilbert-Schmidt distortion optimization and
//! entanglement-broadcasting analysis for several two-qubit input families.
//!
//! The crate is organized bottom-up:
//! - [`linalg`]: dense complex matrices with tensor-factor bookkeeping,
//!   partial trace/transpose, Hermitian eigenvalues;
//! - [`states`]: Pauli/Bloch tooling and the supported input families;
//! - [`cloner`]: the cloning channels, local (per qubit) and non-local
//!   (whole pair), plus closed-form Bloch output maps;
//! - [`distortion`]: distortion figures and optimal machine parameters,
//!   closed-form and numeric;
//! - [`broadcast`]: inseparability tests and parameter-range/region scans.

pub mod broadcast;
pub mod cloner;
pub mod distortion;
pub mod error;
pub mod linalg;
pub mod states;

pub use broadcast::{
    bds_c3_range, classify_point, nme_range, ppt_verdict, ppt_verdict_with_eps, scan_range_1d,
    scan_region, werner_alpha_range, werner_p_range, PointClass, RegionSample, RegionSpec,
    SeparabilityVerdict, NEG_TOL, RANGE_EPS, RANGE_GRID,
};
pub use cloner::{
    bh_pure_outputs, clone_joint_local, clone_joint_nonlocal, fidelity, lambda_max,
    local_bloch_outputs, nonlocal_bloch_outputs, si_lambda, Channel, CloneOutputs, ClonerConfig,
    Flavor, MachineGram, Mode, PairLabel,
};
pub use distortion::{
    closed_d13_local, closed_da, closed_dab_pure, closed_dab_pure_literal, d13_channel,
    d_copy_channel, d_joint_channel, distortion_report, hs_dist_sq, minimize_scalar,
    optimal_lambda, resolve_lambda, werner_local_lambda_sign_flipped, DistortionReport, LambdaRule,
    NumericOptimum,
};
pub use error::{Error, Result};
pub use linalg::{ComplexMatrix, DensityMatrix, C64};
pub use states::{
    bloch_to_density, density_to_bloch, is_physical, make_family, pauli, BdsParams, BlochTwoQubit,
    FamilyParams, NmeParams, PhysicalityReport, WernerParams,
};
