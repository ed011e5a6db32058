//! Deterministic number formatting and report rendering.
//!
//! JSON payloads carry numbers as decimal strings with 12 significant
//! digits; CSV uses 6. Formatting goes through `format!` with a fixed number
//! of decimals, so output is bit-stable across runs.

use broadcastlab_core::{
    closed_da, closed_dab_pure, distortion_report, fidelity, make_family, minimize_scalar,
    optimal_lambda, ppt_verdict_with_eps, resolve_lambda, Channel, ClonerConfig, DensityMatrix,
    FamilyParams, LambdaRule, MachineGram, Mode, PairLabel, Result,
};
use serde_json::{json, Value as Json};

use crate::golden::{CellCheck, TableArtifact, Value};

/// Format with `sig` significant digits as a plain decimal string.
pub fn fmt_sig(v: f64, sig: i32) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    if !v.is_finite() {
        return format!("{v}");
    }
    let mag = v.abs().log10().floor() as i32;
    let decimals = (sig - 1 - mag).max(0) as usize;
    format!("{v:.decimals$}")
}

/// JSON-side number: decimal string, 12 significant digits.
pub fn json_num(v: f64) -> Json {
    Json::String(fmt_sig(v, 12))
}

/// CSV-side number: 6 significant digits.
pub fn csv_num(v: f64) -> String {
    fmt_sig(v, 6)
}

pub fn csv_bool(b: bool) -> &'static str {
    if b {
        "1"
    } else {
        "0"
    }
}

fn fmt_value(v: &Value) -> String {
    match v {
        Value::Num(x) => fmt_sig(*x, 6),
        Value::Range(None) => "empty".to_string(),
        Value::Range(Some((lo, hi))) => format!("({}, {})", fmt_sig(*lo, 6), fmt_sig(*hi, 6)),
        Value::Text(s) => s.clone(),
    }
}

fn fmt_check(c: &CellCheck) -> String {
    let status = if c.pass { "PASS" } else { "FAIL" };
    let mut line = format!(
        "  {:<14} {:<14} dev={:<10} tol={:<8} {}",
        c.row,
        c.cell,
        fmt_sig(c.deviation, 3),
        fmt_sig(c.tol, 3),
        status
    );
    if let Some(w) = c.waiver {
        line.push_str(&format!("  [registered against corrected value: {w}]"));
    }
    line
}

/// Render a full table report; returns (text, all_pass).
pub fn render_table(table: &TableArtifact) -> (String, bool) {
    let mut out = String::new();
    out.push_str(&format!("{}: {}\n", table.id, table.title));
    for row in &table.rows {
        let cells: Vec<String> = row
            .cells
            .iter()
            .map(|c| format!("{}={}", c.name, fmt_value(&c.computed)))
            .collect();
        out.push_str(&format!("  {:<28} {}\n", row.label, cells.join("  ")));
    }
    let checks = table.checks();
    let failed: Vec<&CellCheck> = checks.iter().filter(|c| !c.pass).collect();
    out.push_str(&format!(
        "checks: {} registered, {} failed\n",
        checks.len(),
        failed.len()
    ));
    for c in &checks {
        out.push_str(&fmt_check(c));
        out.push('\n');
    }
    (out, failed.is_empty())
}

/// One-line summary used by `verify`; returns (line, all_pass).
pub fn summarize_table(table: &TableArtifact) -> (String, bool) {
    let checks = table.checks();
    let failed: Vec<&CellCheck> = checks.iter().filter(|c| !c.pass).collect();
    let waived = checks.iter().filter(|c| c.waiver.is_some()).count();
    let mut line = format!(
        "{:<22} {:>3} checks  {:>2} failed  {:>2} waived  {}",
        table.id,
        checks.len(),
        failed.len(),
        waived,
        if failed.is_empty() { "PASS" } else { "FAIL" }
    );
    for c in failed {
        line.push_str(&format!("\n{}", fmt_check(c)));
    }
    (line, checks.iter().all(|c| c.pass))
}

fn bloch_json(b: &broadcastlab_core::BlochTwoQubit) -> Json {
    json!({
        "x": b.x.iter().map(|&v| json_num(v)).collect::<Vec<_>>(),
        "y": b.y.iter().map(|&v| json_num(v)).collect::<Vec<_>>(),
        "t": b.t.iter()
            .map(|row| row.iter().map(|&v| json_num(v)).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    })
}

fn pair_json(label: PairLabel, rho: &DensityMatrix, eps: f64) -> Result<Json> {
    let verdict = ppt_verdict_with_eps(rho.matrix(), eps)?;
    let bloch = broadcastlab_core::density_to_bloch(rho.matrix())?;
    Ok(json!({
        "pair": label.as_str(),
        "kept": label.keep(),
        "separable": verdict.separable,
        "min_pt_eigenvalue": json_num(verdict.min_pt_eigenvalue),
        "bloch": bloch_json(&bloch),
    }))
}

/// Full JSON report for `clone`.
pub fn clone_report(family: &FamilyParams, cfg: &ClonerConfig, eps: f64) -> Result<Json> {
    let lambda = resolve_lambda(cfg, family)?;
    let rho = make_family(family)?;
    if let FamilyParams::Pure { alpha_sq } = family {
        // single-qubit machine: report copy fidelity and closed distortions
        let channel = Channel::new(&MachineGram::new(2, lambda)?);
        let joint = channel.apply(rho.matrix())?;
        let copy = joint.partial_trace(&[0])?;
        let psi = [
            broadcastlab_core::C64::new(alpha_sq.sqrt(), 0.0),
            broadcastlab_core::C64::new((1.0 - alpha_sq).sqrt(), 0.0),
        ];
        let fid = fidelity(&copy, &psi)?;
        return Ok(json!({
            "family": "pure",
            "alpha2": json_num(*alpha_sq),
            "mode": "local",
            "lambda": json_num(lambda),
            "copy_fidelity": json_num(fid),
            "d_a": json_num(closed_da(2, lambda)),
            "d_ab": json_num(closed_dab_pure(*alpha_sq, lambda)),
        }));
    }

    let outputs = match cfg.mode {
        Mode::Local => broadcastlab_core::clone_joint_local(rho.matrix(), lambda)?,
        Mode::NonLocal => broadcastlab_core::clone_joint_nonlocal(rho.matrix(), lambda)?,
    };
    let mut pairs = Vec::new();
    for (label, pair) in outputs.iter() {
        pairs.push(pair_json(label, pair, eps)?);
    }
    let class = broadcastlab_core::classify_point(family, cfg, eps)?;
    let report = distortion_report(family, cfg.mode, lambda)?;
    Ok(json!({
        "family": family_name(family),
        "params": family_params_json(family),
        "mode": mode_name(cfg.mode),
        "lambda": json_num(lambda),
        "pairs": pairs,
        "input_entangled": class.input_entangled,
        "broadcastable": class.broadcastable,
        "d_single": json_num(report.d_single),
        "d_joint": json_num(report.d_joint),
    }))
}

pub fn family_name(family: &FamilyParams) -> &'static str {
    match family {
        FamilyParams::Pure { .. } => "pure",
        FamilyParams::Nme(_) => "nme",
        FamilyParams::Werner(_) => "werner",
        FamilyParams::Bds(_) => "bds",
    }
}

pub fn mode_name(mode: Mode) -> &'static str {
    match mode {
        Mode::Local => "local",
        Mode::NonLocal => "nonlocal",
    }
}

fn family_params_json(family: &FamilyParams) -> Json {
    match family {
        FamilyParams::Pure { alpha_sq } => json!({ "alpha2": json_num(*alpha_sq) }),
        FamilyParams::Nme(p) => json!({ "alpha2": json_num(p.alpha_sq) }),
        FamilyParams::Werner(p) => {
            json!({ "alpha2": json_num(p.alpha_sq), "p": json_num(p.p) })
        }
        FamilyParams::Bds(p) => {
            json!({ "c1": json_num(p.c1), "c2": json_num(p.c2), "c3": json_num(p.c3) })
        }
    }
}

/// Closed-form vs numeric optimum comparison for `optimize`.
pub fn optimize_report(family: &FamilyParams, mode: Mode) -> Result<Json> {
    let rule = LambdaRule::for_family(family, mode)?;
    let closed = optimal_lambda(rule, family)?;
    let max = broadcastlab_core::lambda_max(mode.m());
    let numeric = match (family, mode) {
        (FamilyParams::Pure { alpha_sq }, Mode::Local) => {
            let a2 = *alpha_sq;
            minimize_scalar(|l| closed_dab_pure(a2, l), 0.0, max)
        }
        (_, Mode::Local) => {
            let rho = make_family(family)?;
            minimize_scalar(
                |l| broadcastlab_core::d13_channel(rho.matrix(), l).unwrap(),
                0.0,
                max,
            )
        }
        (_, Mode::NonLocal) => {
            let rho = make_family(family)?;
            minimize_scalar(
                |l| broadcastlab_core::d_joint_channel(mode, rho.matrix(), l).unwrap(),
                0.0,
                max,
            )
        }
    };
    let gap = (closed - numeric.lambda).abs();
    Ok(json!({
        "family": family_name(family),
        "params": family_params_json(family),
        "mode": mode_name(mode),
        "lambda_closed": json_num(closed),
        "lambda_numeric": json_num(numeric.lambda),
        "objective_at_numeric": json_num(numeric.value),
        "numeric_at_boundary": numeric.at_boundary,
        "gap": json_num(gap),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digit_formatting() {
        assert_eq!(fmt_sig(0.0675, 6), "0.0675000");
        assert_eq!(fmt_sig(0.12, 2), "0.12");
        assert_eq!(fmt_sig(123.456, 6), "123.456");
        assert_eq!(fmt_sig(-0.5, 6), "-0.500000");
        assert_eq!(fmt_sig(0.0, 6), "0");
        assert_eq!(fmt_sig(1.0, 12), "1.00000000000");
    }

    #[test]
    fn optimize_gap_is_small_for_nme_local() {
        let family = FamilyParams::Nme(broadcastlab_core::NmeParams::new(0.3).unwrap());
        let rep = optimize_report(&family, Mode::Local).unwrap();
        let gap: f64 = rep["gap"].as_str().unwrap().parse().unwrap();
        assert!(gap < 1e-5, "gap {gap}");
    }
}
