//! Data-driven registry of published reference values.
//!
//! Every table cell regenerated by the report layer can carry a registered
//! reference value with the number of printed decimals, a tolerance and an
//! optional waiver note for cells whose printed value is a known misprint.
//! Deviations are measured after rounding the computed value to the printed
//! precision.

/// A reference number as printed: value plus printed decimal places.
#[derive(Debug, Clone, Copy)]
pub struct GoldenNum {
    pub value: f64,
    pub decimals: i32,
}

impl GoldenNum {
    pub fn new(value: f64, decimals: i32) -> Self {
        Self { value, decimals }
    }
}

/// Registered reference for one cell.
#[derive(Debug, Clone)]
pub enum GoldenValue {
    Num(GoldenNum),
    /// `None` encodes a published empty range ("False").
    Range(Option<(GoldenNum, GoldenNum)>),
}

#[derive(Debug, Clone)]
pub struct Golden {
    pub value: GoldenValue,
    pub tol: f64,
    /// Note attached when the published cell is a misprint and the
    /// registered value is the corrected one.
    pub waiver: Option<&'static str>,
}

/// A computed cell value.
#[derive(Debug, Clone)]
pub enum Value {
    Num(f64),
    Range(Option<(f64, f64)>),
    Text(String),
}

#[derive(Debug, Clone)]
pub struct Cell {
    pub name: &'static str,
    pub computed: Value,
    pub golden: Option<Golden>,
}

#[derive(Debug, Clone)]
pub struct Row {
    pub label: String,
    pub cells: Vec<Cell>,
}

#[derive(Debug, Clone)]
pub struct TableArtifact {
    pub id: &'static str,
    pub title: &'static str,
    pub rows: Vec<Row>,
}

/// Outcome of checking one registered cell.
#[derive(Debug, Clone)]
pub struct CellCheck {
    pub row: String,
    pub cell: &'static str,
    pub deviation: f64,
    pub tol: f64,
    pub pass: bool,
    pub waiver: Option<&'static str>,
}

fn num_deviation(computed: f64, golden: &GoldenNum) -> f64 {
    // published values at d decimals are sometimes rounded and sometimes
    // truncated; accept both by quantizing to the nearest and the two
    // adjacent grid points of the printed precision
    let f = 10f64.powi(golden.decimals);
    let scaled = computed * f;
    [scaled.round(), scaled.floor(), scaled.ceil()]
        .iter()
        .map(|q| (q / f - golden.value).abs())
        .fold(f64::INFINITY, f64::min)
}

/// Deviation of a computed cell from its registered value; `INFINITY` for a
/// structural mismatch (empty vs non-empty range, type mismatch).
pub fn deviation(computed: &Value, golden: &GoldenValue) -> f64 {
    match (computed, golden) {
        (Value::Num(c), GoldenValue::Num(g)) => num_deviation(*c, g),
        (Value::Range(c), GoldenValue::Range(g)) => match (c, g) {
            (None, None) => 0.0,
            (Some((clo, chi)), Some((glo, ghi))) => {
                num_deviation(*clo, glo).max(num_deviation(*chi, ghi))
            }
            _ => f64::INFINITY,
        },
        _ => f64::INFINITY,
    }
}

impl TableArtifact {
    /// Check every registered cell.
    pub fn checks(&self) -> Vec<CellCheck> {
        let mut out = Vec::new();
        for row in &self.rows {
            for cell in &row.cells {
                if let Some(golden) = &cell.golden {
                    let dev = deviation(&cell.computed, &golden.value);
                    out.push(CellCheck {
                        row: row.label.clone(),
                        cell: cell.name,
                        deviation: dev,
                        tol: golden.tol,
                        // a hair of slack so a deviation landing exactly on
                        // the tolerance passes
                        pass: dev <= golden.tol + 1e-12,
                        waiver: golden.waiver,
                    });
                }
            }
        }
        out
    }

    pub fn all_pass(&self) -> bool {
        self.checks().iter().all(|c| c.pass)
    }
}

/// Shorthand constructors for table builders.
pub fn num_cell(
    name: &'static str,
    computed: f64,
    published: f64,
    decimals: i32,
    tol: f64,
) -> Cell {
    Cell {
        name,
        computed: Value::Num(computed),
        golden: Some(Golden {
            value: GoldenValue::Num(GoldenNum::new(published, decimals)),
            tol,
            waiver: None,
        }),
    }
}

pub fn num_cell_waived(
    name: &'static str,
    computed: f64,
    published: f64,
    decimals: i32,
    tol: f64,
    waiver: &'static str,
) -> Cell {
    Cell {
        name,
        computed: Value::Num(computed),
        golden: Some(Golden {
            value: GoldenValue::Num(GoldenNum::new(published, decimals)),
            tol,
            waiver: Some(waiver),
        }),
    }
}

/// Range cell; `published` endpoints carry their own printed decimals.
pub fn range_cell(
    name: &'static str,
    computed: Option<(f64, f64)>,
    published: Option<((f64, i32), (f64, i32))>,
    tol: f64,
) -> Cell {
    range_cell_opts(name, computed, published, tol, None)
}

pub fn range_cell_opts(
    name: &'static str,
    computed: Option<(f64, f64)>,
    published: Option<((f64, i32), (f64, i32))>,
    tol: f64,
    waiver: Option<&'static str>,
) -> Cell {
    Cell {
        name,
        computed: Value::Range(computed),
        golden: Some(Golden {
            value: GoldenValue::Range(
                published
                    .map(|((lo, dl), (hi, dh))| (GoldenNum::new(lo, dl), GoldenNum::new(hi, dh))),
            ),
            tol,
            waiver,
        }),
    }
}

/// Cell with no registered reference.
pub fn plain_cell(name: &'static str, computed: Value) -> Cell {
    Cell {
        name,
        computed,
        golden: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding_policy() {
        // deviations are taken after rounding to the printed precision
        let g = GoldenNum::new(0.3221, 4);
        assert!(num_deviation(0.32204999, &g) < 1e-12);
        let g = GoldenNum::new(0.71, 2);
        assert!(num_deviation(0.71447, &g) < 1e-12);
        let g = GoldenNum::new(0.0277, 4);
        assert!((num_deviation(0.027692, &g) - 0.0).abs() < 1e-12);
        // truncated published value: 0.7576 printed as 0.75
        let g = GoldenNum::new(0.75, 2);
        assert!(num_deviation(0.757576, &g) < 1e-12);
        // a genuinely wrong value still deviates by a printed-precision step
        let g = GoldenNum::new(0.75, 2);
        assert!(num_deviation(0.7712, &g) > 9e-3);
    }

    #[test]
    fn range_deviation_rules() {
        let empty = Value::Range(None);
        let golden_empty = GoldenValue::Range(None);
        assert_eq!(deviation(&empty, &golden_empty), 0.0);
        let golden_full =
            GoldenValue::Range(Some((GoldenNum::new(0.1, 3), GoldenNum::new(0.9, 3))));
        assert!(deviation(&empty, &golden_full).is_infinite());
        let close = Value::Range(Some((0.1004, 0.8996)));
        assert!(deviation(&close, &golden_full) < 1e-3);
    }
}
