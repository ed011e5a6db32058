//! Region scans: grids of broadcastability flags over a family's parameter
//! box, one flag column per requested cloner, in row-major axis order.

use std::fmt::Write as _;

use broadcastlab_core::{
    nme_range, optimal_lambda, scan_region, ClonerConfig, FamilyParams, Flavor, LambdaRule, Mode,
    NmeParams, RegionSample, RegionSpec, Result,
};
use serde_json::{json, Value as Json};

use crate::report::{csv_bool, csv_num, json_num};

/// A cloner column of a region report: parsed token plus display name.
#[derive(Debug, Clone)]
pub struct ClonerColumn {
    pub name: String,
    pub cfg: ClonerConfig,
}

/// Parse one cloner token: silc | sinlc | dsdlc | dsdnlc | ssdlc:<lambda> |
/// ssdnlc:<lambda>.
pub fn parse_cloner(token: &str) -> Option<ClonerColumn> {
    let cfg = match token {
        "silc" => ClonerConfig::new(Mode::Local, Flavor::StateIndependent),
        "sinlc" => ClonerConfig::new(Mode::NonLocal, Flavor::StateIndependent),
        "dsdlc" => ClonerConfig::new(Mode::Local, Flavor::DynamicStateDependent),
        "dsdnlc" => ClonerConfig::new(Mode::NonLocal, Flavor::DynamicStateDependent),
        _ => {
            let (kind, lam) = token.split_once(':')?;
            let lam: f64 = lam.parse().ok()?;
            match kind {
                "ssdlc" => ClonerConfig::new(Mode::Local, Flavor::StaticStateDependent(lam)),
                "ssdnlc" => ClonerConfig::new(Mode::NonLocal, Flavor::StaticStateDependent(lam)),
                _ => return None,
            }
        }
    };
    Some(ClonerColumn {
        name: token.to_string(),
        cfg,
    })
}

pub fn default_cloners() -> Vec<ClonerColumn> {
    ["silc", "dsdlc", "sinlc", "dsdnlc"]
        .iter()
        .map(|t| parse_cloner(t).unwrap())
        .collect()
}

/// Which region to scan.
#[derive(Debug, Clone, Copy)]
pub enum RegionFamily {
    Nme,
    Werner,
    Bds,
    /// Broadcastable-range width of the per-input static local machine vs
    /// the state-independent local machine, as a function of alpha^2.
    Fig2,
}

impl RegionFamily {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "nme" => Some(Self::Nme),
            "werner" => Some(Self::Werner),
            "bds" => Some(Self::Bds),
            "fig2" => Some(Self::Fig2),
            _ => None,
        }
    }

    pub fn axes(&self) -> &'static [&'static str] {
        match self {
            Self::Nme => &["alpha2"],
            Self::Werner => &["alpha2", "p"],
            Self::Bds => &["c1", "c2", "c3"],
            Self::Fig2 => &["alpha2"],
        }
    }

    pub fn default_res(&self) -> Vec<usize> {
        match self {
            Self::Nme => vec![2001],
            Self::Werner => vec![201, 201],
            Self::Bds => vec![61, 61, 61],
            Self::Fig2 => vec![99],
        }
    }

    pub fn spec(&self, res: &[usize]) -> Option<RegionSpec> {
        match self {
            Self::Nme => Some(RegionSpec::Nme { res: res[0] }),
            Self::Werner => Some(RegionSpec::Werner {
                res: [res[0], res[1]],
            }),
            Self::Bds => Some(RegionSpec::Bds {
                res: [res[0], res[1], res[2]],
            }),
            Self::Fig2 => None,
        }
    }
}

/// One row of a multi-cloner region report.
pub struct RegionRow {
    pub coords: Vec<f64>,
    pub flags: Vec<bool>,
    pub input_entangled: bool,
    pub input_physical: bool,
}

/// Scan the family grid once per cloner and merge the flags column-wise.
pub fn region_rows(
    spec: &RegionSpec,
    cloners: &[ClonerColumn],
    eps: f64,
) -> Result<Vec<RegionRow>> {
    let mut per_cloner: Vec<Vec<RegionSample>> = Vec::new();
    for c in cloners {
        per_cloner.push(scan_region(spec, &c.cfg, eps)?);
    }
    let n = per_cloner[0].len();
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let base = &per_cloner[0][i];
        rows.push(RegionRow {
            coords: base.coords.clone(),
            flags: per_cloner
                .iter()
                .map(|s| s[i].class.broadcastable)
                .collect(),
            input_entangled: base.class.input_entangled,
            input_physical: base.class.physical,
        });
    }
    Ok(rows)
}

/// Total broadcastable alpha^2 width for one local cloner configuration.
fn range_width(cfg: &ClonerConfig, eps: f64) -> f64 {
    nme_range(cfg, eps).iter().map(|(lo, hi)| hi - lo).sum()
}

/// One row of the range-width comparison: alpha^2, width for the static
/// machine tuned at that alpha^2, width for the state-independent machine.
pub fn fig2_row(alpha_sq: f64, si_width: f64, eps: f64) -> Result<(f64, f64, f64)> {
    let family = FamilyParams::Nme(NmeParams::new(alpha_sq)?);
    let lam = optimal_lambda(LambdaRule::NmeLocal, &family)?;
    let cfg = ClonerConfig::new(Mode::Local, Flavor::StaticStateDependent(lam));
    Ok((alpha_sq, range_width(&cfg, eps), si_width))
}

pub fn si_local_width(eps: f64) -> f64 {
    range_width(
        &ClonerConfig::new(Mode::Local, Flavor::StateIndependent),
        eps,
    )
}

pub fn fig2_rows(res: usize, eps: f64) -> Result<Vec<(f64, f64, f64)>> {
    let si_width = si_local_width(eps);
    let mut rows = Vec::with_capacity(res);
    for i in 0..res {
        // endpoints excluded: the pure family degenerates at alpha^2 = 0, 1
        let k = 0.01 + (0.99 - 0.01) * i as f64 / (res - 1) as f64;
        rows.push(fig2_row(k, si_width, eps)?);
    }
    Ok(rows)
}

pub fn region_csv(family: RegionFamily, cloners: &[ClonerColumn], rows: &[RegionRow]) -> String {
    let mut out = String::new();
    let mut header: Vec<String> = family.axes().iter().map(|s| s.to_string()).collect();
    for c in cloners {
        header.push(c.name.clone());
    }
    header.push("input_entangled".to_string());
    if matches!(family, RegionFamily::Bds) {
        header.push("input_physical".to_string());
    }
    let _ = writeln!(out, "{}", header.join(","));
    for row in rows {
        let mut fields: Vec<String> = row.coords.iter().map(|&v| csv_num(v)).collect();
        for &f in &row.flags {
            fields.push(csv_bool(f).to_string());
        }
        fields.push(csv_bool(row.input_entangled).to_string());
        if matches!(family, RegionFamily::Bds) {
            fields.push(csv_bool(row.input_physical).to_string());
        }
        let _ = writeln!(out, "{}", fields.join(","));
    }
    out
}

pub fn region_json(family: RegionFamily, cloners: &[ClonerColumn], rows: &[RegionRow]) -> Json {
    let rows_json: Vec<Json> = rows
        .iter()
        .map(|row| {
            let mut obj = json!({
                "coords": row.coords.iter().map(|&v| json_num(v)).collect::<Vec<_>>(),
                "broadcastable": row.flags,
                "input_entangled": row.input_entangled,
            });
            if matches!(family, RegionFamily::Bds) {
                obj["input_physical"] = Json::Bool(row.input_physical);
            }
            obj
        })
        .collect();
    json!({
        "axes": family.axes(),
        "cloners": cloners.iter().map(|c| c.name.as_str()).collect::<Vec<_>>(),
        "rows": rows_json,
    })
}

pub fn fig2_csv(rows: &[(f64, f64, f64)]) -> String {
    let mut out = String::from("alpha2,width_ssdlc,width_silc\n");
    for &(k, w_ssd, w_si) in rows {
        let _ = writeln!(out, "{},{},{}", csv_num(k), csv_num(w_ssd), csv_num(w_si));
    }
    out
}

pub fn fig2_json(rows: &[(f64, f64, f64)]) -> Json {
    json!({
        "axes": ["alpha2"],
        "columns": ["width_ssdlc", "width_silc"],
        "rows": rows.iter().map(|&(k, a, b)| {
            json!({ "alpha2": json_num(k), "width_ssdlc": json_num(a), "width_silc": json_num(b) })
        }).collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cloner_tokens_parse() {
        assert!(parse_cloner("silc").is_some());
        assert!(parse_cloner("ssdlc:0.12").is_some());
        assert!(parse_cloner("ssdnlc:0.1").is_some());
        assert!(parse_cloner("bogus").is_none());
        assert!(parse_cloner("ssdlc:x").is_none());
    }

    #[test]
    fn region_row_count_matches_resolution() {
        let cloners = vec![parse_cloner("silc").unwrap()];
        let spec = RegionFamily::Nme.spec(&[21]).unwrap();
        let rows = region_rows(&spec, &cloners, 1e-10).unwrap();
        assert_eq!(rows.len(), 21);
        // pure states are entangled strictly inside (0, 1)
        assert!(rows[10].input_entangled);
        assert!(!rows[0].input_entangled);
    }
}
