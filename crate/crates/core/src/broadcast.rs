//! Entanglement broadcasting: which inputs let a cloner hand each party an
//! inseparable pair while keeping the same-party pairs separable.
//!
//! Separability of two-qubit states is decided by the positivity of the
//! partial transpose; the leading principal minors of the partially
//! transposed matrix are reported alongside as determinant witnesses.

use crate::cloner::{local_bloch_outputs, nonlocal_bloch_outputs, ClonerConfig, Mode};
use crate::distortion::resolve_lambda;
use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::states::{bloch_to_density, BlochTwoQubit, FamilyParams};

/// Minimum eigenvalue below `-NEG_TOL` counts as a negative partial
/// transpose.
pub const NEG_TOL: f64 = 1e-10;

/// Outcome of the positive-partial-transpose test on a two-qubit state.
#[derive(Debug, Clone, Copy)]
pub struct SeparabilityVerdict {
    pub separable: bool,
    pub min_pt_eigenvalue: f64,
    /// det of the partially transposed matrix.
    pub w44: f64,
    /// Leading 3x3 principal minor of the partial transpose.
    pub w33: f64,
    /// Leading 2x2 principal minor of the partial transpose.
    pub w22: f64,
}

/// Decide separability of a two-qubit state via the partial transpose of
/// the second factor.
pub fn ppt_verdict(rho: &ComplexMatrix) -> Result<SeparabilityVerdict> {
    ppt_verdict_with_eps(rho, NEG_TOL)
}

/// [`ppt_verdict`] with an explicit negativity tolerance.
pub fn ppt_verdict_with_eps(rho: &ComplexMatrix, eps: f64) -> Result<SeparabilityVerdict> {
    if rho.dim() != 4 {
        return Err(Error::DimensionMismatch(format!(
            "expected a two-qubit state, got dim {}",
            rho.dim()
        )));
    }
    let rho = rho.clone().with_subsystem_dims(&[2, 2])?;
    let pt = rho.partial_transpose(1)?;
    let eigs = pt.hermitian_eigenvalues()?;
    let min = eigs[0];
    let w44 = pt.determinant().re;
    let w33 = pt.leading_minor(3)?.determinant().re;
    let w22 = pt.leading_minor(2)?.determinant().re;
    Ok(SeparabilityVerdict {
        separable: min >= -eps,
        min_pt_eigenvalue: min,
        w44,
        w33,
        w22,
    })
}

/// Classification of one input point under a fixed cloner.
#[derive(Debug, Clone, Copy)]
pub struct PointClass {
    /// The input parameters describe a valid state.
    pub physical: bool,
    pub input_entangled: bool,
    /// Both cross-party output pairs inseparable and both same-party pairs
    /// separable.
    pub broadcastable: bool,
}

impl PointClass {
    fn unphysical() -> Self {
        Self {
            physical: false,
            input_entangled: false,
            broadcastable: false,
        }
    }
}

/// Classify a family member: physicality, input entanglement and whether
/// the configured cloner broadcasts that entanglement.
///
/// Uses the closed-form Bloch output maps; their agreement with the channel
/// construction is pinned by the cloner tests.
pub fn classify_point(
    family: &FamilyParams,
    cfg: &ClonerConfig,
    psd_eps: f64,
) -> Result<PointClass> {
    if let FamilyParams::Bds(p) = family {
        if p.bell_weights().iter().any(|&w| w < -psd_eps) {
            return Ok(PointClass::unphysical());
        }
    }
    let input = family.bloch()?;
    let rho_in = bloch_to_density(&input);
    let in_verdict = ppt_verdict_with_eps(&rho_in, psd_eps)?;
    let lambda = resolve_lambda(cfg, family)?;
    let (broadcast, local): ([BlochTwoQubit; 2], [BlochTwoQubit; 2]) = match cfg.mode {
        Mode::Local => {
            let out = local_bloch_outputs(&input, lambda);
            ([out.cross, out.cross], [out.p13, out.p24])
        }
        Mode::NonLocal => {
            let out = nonlocal_bloch_outputs(&input, lambda);
            ([out.kept, out.kept], [out.p13, out.p24])
        }
    };
    let mut broadcastable = !in_verdict.separable;
    for b in &broadcast {
        let v = ppt_verdict_with_eps(&bloch_to_density(b), psd_eps)?;
        broadcastable &= !v.separable;
    }
    for b in &local {
        let v = ppt_verdict_with_eps(&bloch_to_density(b), psd_eps)?;
        broadcastable &= v.separable;
    }
    Ok(PointClass {
        physical: true,
        input_entangled: !in_verdict.separable,
        broadcastable,
    })
}

/// Grid resolution of the 1D range scanner.
pub const RANGE_GRID: usize = 2000;
/// Bisection width at which a range endpoint is considered resolved.
pub const RANGE_EPS: f64 = 1e-6;

/// Maximal intervals of `[lo, hi]` on which the predicate holds, located on
/// a uniform grid and bisection-refined at the edges.
pub fn scan_range_1d<F: Fn(f64) -> bool>(pred: F, lo: f64, hi: f64) -> Vec<(f64, f64)> {
    let step = (hi - lo) / RANGE_GRID as f64;
    let at = |i: usize| lo + step * i as f64;
    let mut intervals: Vec<(f64, f64)> = Vec::new();
    let mut start: Option<f64> = None;
    let mut prev = pred(at(0));
    if prev {
        start = Some(lo);
    }
    for i in 1..=RANGE_GRID {
        let cur = pred(at(i));
        if cur != prev {
            // bisect the crossing between grid points i-1 and i
            let mut a = at(i - 1);
            let mut b = at(i);
            while b - a > RANGE_EPS {
                let m = 0.5 * (a + b);
                if pred(m) == prev {
                    a = m;
                } else {
                    b = m;
                }
            }
            let edge = 0.5 * (a + b);
            if cur {
                start = Some(edge);
            } else {
                intervals.push((start.take().unwrap(), edge));
            }
            prev = cur;
        }
    }
    if let Some(s) = start {
        intervals.push((s, hi));
    }
    intervals
}

/// Broadcastable alpha^2 intervals of the pure two-qubit family.
pub fn nme_range(cfg: &ClonerConfig, psd_eps: f64) -> Vec<(f64, f64)> {
    scan_range_1d(
        |a2| {
            crate::states::NmeParams::new(a2)
                .map(|p| {
                    classify_point(&FamilyParams::Nme(p), cfg, psd_eps)
                        .map(|c| c.broadcastable)
                        .unwrap_or(false)
                })
                .unwrap_or(false)
        },
        0.0,
        1.0,
    )
}

/// Broadcastable alpha^2 intervals at fixed mixing p.
pub fn werner_alpha_range(cfg: &ClonerConfig, p: f64, psd_eps: f64) -> Vec<(f64, f64)> {
    scan_range_1d(
        |a2| {
            crate::states::WernerParams::new(a2, p)
                .map(|w| {
                    classify_point(&FamilyParams::Werner(w), cfg, psd_eps)
                        .map(|c| c.broadcastable)
                        .unwrap_or(false)
                })
                .unwrap_or(false)
        },
        0.0,
        1.0,
    )
}

/// Broadcastable p intervals at fixed alpha^2.
pub fn werner_p_range(cfg: &ClonerConfig, alpha_sq: f64, psd_eps: f64) -> Vec<(f64, f64)> {
    scan_range_1d(
        |p| {
            crate::states::WernerParams::new(alpha_sq, p)
                .map(|w| {
                    classify_point(&FamilyParams::Werner(w), cfg, psd_eps)
                        .map(|c| c.broadcastable)
                        .unwrap_or(false)
                })
                .unwrap_or(false)
        },
        0.0,
        1.0,
    )
}

/// Broadcastable c3 intervals at fixed (c1, c2); unphysical points count as
/// non-broadcastable.
pub fn bds_c3_range(cfg: &ClonerConfig, c1: f64, c2: f64, psd_eps: f64) -> Vec<(f64, f64)> {
    scan_range_1d(
        |c3| {
            crate::states::BdsParams::new(c1, c2, c3)
                .map(|b| {
                    classify_point(&FamilyParams::Bds(b), cfg, psd_eps)
                        .map(|c| c.broadcastable)
                        .unwrap_or(false)
                })
                .unwrap_or(false)
        },
        -1.0,
        1.0,
    )
}

/// One sampled point of a region scan.
#[derive(Debug, Clone)]
pub struct RegionSample {
    /// Family coordinates: [alpha^2] for the pure family, [alpha^2, p] for
    /// the mixed family, [c1, c2, c3] for the Bell-diagonal family.
    pub coords: Vec<f64>,
    pub class: PointClass,
}

/// Which family a region scan covers, with per-axis resolutions (number of
/// samples per axis).
#[derive(Debug, Clone, Copy)]
pub enum RegionSpec {
    Nme { res: usize },
    Werner { res: [usize; 2] },
    Bds { res: [usize; 3] },
}

fn axis(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    assert!(n >= 2);
    (0..n)
        .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
        .collect()
}

/// Classify every point of a uniform grid over the family's parameter box.
pub fn scan_region(
    spec: &RegionSpec,
    cfg: &ClonerConfig,
    psd_eps: f64,
) -> Result<Vec<RegionSample>> {
    let mut out = Vec::new();
    match spec {
        RegionSpec::Nme { res } => {
            for a2 in axis(0.0, 1.0, *res) {
                let p = crate::states::NmeParams::new(a2)?;
                let class = classify_point(&FamilyParams::Nme(p), cfg, psd_eps)?;
                out.push(RegionSample {
                    coords: vec![a2],
                    class,
                });
            }
        }
        RegionSpec::Werner { res } => {
            for a2 in axis(0.0, 1.0, res[0]) {
                for p in axis(0.0, 1.0, res[1]) {
                    let w = crate::states::WernerParams::new(a2, p)?;
                    let class = classify_point(&FamilyParams::Werner(w), cfg, psd_eps)?;
                    out.push(RegionSample {
                        coords: vec![a2, p],
                        class,
                    });
                }
            }
        }
        RegionSpec::Bds { res } => {
            for c1 in axis(-1.0, 1.0, res[0]) {
                for c2 in axis(-1.0, 1.0, res[1]) {
                    for c3 in axis(-1.0, 1.0, res[2]) {
                        let b = crate::states::BdsParams::new(c1, c2, c3)?;
                        let class = classify_point(&FamilyParams::Bds(b), cfg, psd_eps)?;
                        out.push(RegionSample {
                            coords: vec![c1, c2, c3],
                            class,
                        });
                    }
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cloner::Flavor;
    use crate::linalg::PSD_TOL;
    use crate::states::{make_family, BdsParams, NmeParams, WernerParams};
    use approx::assert_abs_diff_eq;

    fn silc() -> ClonerConfig {
        ClonerConfig::new(Mode::Local, Flavor::StateIndependent)
    }

    fn sinlc() -> ClonerConfig {
        ClonerConfig::new(Mode::NonLocal, Flavor::StateIndependent)
    }

    #[test]
    fn ppt_verdict_bell_and_product() {
        let bell = make_family(&FamilyParams::Nme(NmeParams::new(0.5).unwrap())).unwrap();
        let v = ppt_verdict(bell.matrix()).unwrap();
        assert!(!v.separable);
        assert_abs_diff_eq!(v.min_pt_eigenvalue, -0.5, epsilon = 1e-10);
        assert_abs_diff_eq!(v.w44, -1.0 / 16.0, epsilon = 1e-10);

        let a = crate::linalg::ComplexMatrix::from_real(&[2], &[0.7, 0.0, 0.0, 0.3]).unwrap();
        let b = crate::linalg::ComplexMatrix::from_real(&[2], &[0.4, 0.0, 0.0, 0.6]).unwrap();
        let v = ppt_verdict(&a.tensor(&b)).unwrap();
        assert!(v.separable);
        assert!(v.w44 > 0.0);
    }

    #[test]
    fn werner_entanglement_threshold() {
        // isotropic at alpha^2 = 1/2: entangled iff p > 1/3
        for &(p, entangled) in &[(0.2, false), (0.33, false), (0.34, true), (0.9, true)] {
            let w = make_family(&FamilyParams::Werner(WernerParams::new(0.5, p).unwrap())).unwrap();
            let v = ppt_verdict(w.matrix()).unwrap();
            assert_eq!(!v.separable, entangled, "p = {p}");
        }
    }

    #[test]
    fn minor_witness_sign_agrees_with_eigenvalues() {
        for &(a2, p) in &[(0.5, 0.9), (0.3, 0.5), (0.1, 0.95)] {
            let w = make_family(&FamilyParams::Werner(WernerParams::new(a2, p).unwrap())).unwrap();
            let v = ppt_verdict(w.matrix()).unwrap();
            // one negative eigenvalue at most, so det < 0 iff inseparable
            // (up to the numerical zero band)
            if v.w44 < -1e-9 {
                assert!(!v.separable);
            }
            if v.separable {
                assert!(v.w44 >= -1e-9);
            }
        }
    }

    #[test]
    fn classify_point_pure_family_si_local() {
        let c = classify_point(
            &FamilyParams::Nme(NmeParams::new(0.5).unwrap()),
            &silc(),
            PSD_TOL,
        )
        .unwrap();
        assert!(c.physical && c.input_entangled && c.broadcastable);

        // separable input cannot broadcast
        let c = classify_point(
            &FamilyParams::Nme(NmeParams::new(0.0).unwrap()),
            &silc(),
            PSD_TOL,
        )
        .unwrap();
        assert!(!c.input_entangled && !c.broadcastable);

        let c = classify_point(
            &FamilyParams::Bds(BdsParams::new(-7.0 / 8.0, -7.0 / 8.0, -0.5).unwrap()),
            &silc(),
            PSD_TOL,
        )
        .unwrap();
        assert!(!c.physical);
    }

    #[test]
    fn nme_range_si_cloners() {
        let r = nme_range(&silc(), PSD_TOL);
        assert_eq!(r.len(), 1);
        assert_abs_diff_eq!(r[0].0, 0.109688, epsilon = 1e-4);
        assert_abs_diff_eq!(r[0].1, 0.890312, epsilon = 1e-4);

        let r = nme_range(&sinlc(), PSD_TOL);
        assert_eq!(r.len(), 1);
        assert_abs_diff_eq!(r[0].0, 0.0286, epsilon = 1e-3);
        assert_abs_diff_eq!(r[0].1, 0.9714, epsilon = 1e-3);
    }

    #[test]
    fn range_endpoints_are_symmetric() {
        for cfg in [silc(), sinlc()] {
            let r = nme_range(&cfg, PSD_TOL);
            assert_eq!(r.len(), 1);
            assert_abs_diff_eq!(r[0].0 + r[0].1, 1.0, epsilon = 1e-5);
        }
    }

    #[test]
    fn bds_range_matches_physical_window() {
        // c1 = c2 = -7/8 under the symmetric local cloner: the whole
        // physical window [-1, -3/4] broadcasts
        let r = bds_c3_range(&silc(), -7.0 / 8.0, -7.0 / 8.0, PSD_TOL);
        assert_eq!(r.len(), 1);
        assert_abs_diff_eq!(r[0].0, -1.0, epsilon = 1e-5);
        assert_abs_diff_eq!(r[0].1, -0.75, epsilon = 1e-4);
    }

    #[test]
    fn werner_p_range_threshold() {
        // alpha^2 = 0.2 under the symmetric local cloner
        let r = werner_p_range(&silc(), 0.2, PSD_TOL);
        assert_eq!(r.len(), 1);
        assert_abs_diff_eq!(r[0].0, 0.865385, epsilon = 1e-4);
        assert_abs_diff_eq!(r[0].1, 1.0, epsilon = 1e-9);
    }

    #[test]
    fn scan_range_finds_interior_interval() {
        let r = scan_range_1d(|x| (0.25..0.5).contains(&x), 0.0, 1.0);
        assert_eq!(r.len(), 1);
        assert_abs_diff_eq!(r[0].0, 0.25, epsilon = 1e-5);
        assert_abs_diff_eq!(r[0].1, 0.5, epsilon = 1e-5);

        let empty = scan_range_1d(|_| false, 0.0, 1.0);
        assert!(empty.is_empty());

        let full = scan_range_1d(|_| true, 0.0, 1.0);
        assert_eq!(full, vec![(0.0, 1.0)]);
    }

    #[test]
    fn region_counts_match_range() {
        let spec = RegionSpec::Nme { res: 201 };
        let samples = scan_region(&spec, &silc(), PSD_TOL).unwrap();
        assert_eq!(samples.len(), 201);
        let inside = samples.iter().filter(|s| s.class.broadcastable).count();
        // range width 0.7806 over a 1/200 grid
        assert!((150..=162).contains(&inside), "inside = {inside}");
    }

    #[test]
    fn dynamic_nonlocal_bds_boundary() {
        let cfg = ClonerConfig::new(Mode::NonLocal, Flavor::DynamicStateDependent);
        let r = bds_c3_range(&cfg, -1.0 / 3.0, -1.0 / 3.0, PSD_TOL);
        assert_eq!(r.len(), 1);
        assert_abs_diff_eq!(r[0].0, -1.0, epsilon = 1e-5);
        assert_abs_diff_eq!(r[0].1, -0.902749, epsilon = 1e-4);
    }
}
