//! Named residual measurements with tolerances and pass/fail verdicts.

use serde::Serialize;

/// One measured value. Gated values carry a tolerance; informational
/// values (`tolerance: None`) are recorded without a verdict.
#[derive(Debug, Clone, Serialize)]
pub struct ResidualValue {
    pub name: String,
    pub measured: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    pub passed: bool,
}

impl ResidualValue {
    pub fn gated(name: impl Into<String>, measured: f64, tolerance: f64) -> Self {
        Self {
            name: name.into(),
            measured,
            tolerance: Some(tolerance),
            passed: measured <= tolerance,
        }
    }

    pub fn informational(name: impl Into<String>, measured: f64) -> Self {
        Self {
            name: name.into(),
            measured,
            tolerance: None,
            passed: true,
        }
    }
}

/// A named check: its measured values, the conventions that were in force,
/// and a context echo of the model and parameters it ran against.
#[derive(Debug, Clone, Serialize)]
pub struct ResidualReport {
    pub check_name: String,
    pub values: Vec<ResidualValue>,
    pub passed: bool,
    pub conventions_used: Vec<String>,
    pub context: String,
}

impl ResidualReport {
    pub fn new(
        check_name: impl Into<String>,
        values: Vec<ResidualValue>,
        conventions_used: Vec<String>,
        context: impl Into<String>,
    ) -> Self {
        let passed = values.iter().all(|v| v.passed);
        Self {
            check_name: check_name.into(),
            values,
            passed,
            conventions_used,
            context: context.into(),
        }
    }

    /// Largest gated measurement, handy for one-line summaries.
    pub fn worst_gated(&self) -> Option<&ResidualValue> {
        self.values
            .iter()
            .filter(|v| v.tolerance.is_some())
            .max_by(|a, b| a.measured.total_cmp(&b.measured))
    }

    pub fn summary_line(&self) -> String {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        match self.worst_gated() {
            Some(worst) => format!(
                "[{verdict}] {}: worst {} = {:.3e} (tol {:.1e}) [{}]",
                self.check_name,
                worst.name,
                worst.measured,
                worst.tolerance.unwrap_or(f64::NAN),
                self.context
            ),
            None => format!("[{verdict}] {}: informational [{}]", self.check_name, self.context),
        }
    }
}
