//! Result type shared by every verification suite.

use std::fmt;

/// Outcome of one verification suite run.
///
/// `pass` is true exactly when `counterexamples` is empty. `findings` are
/// observations that do not falsify anything proven — e.g. a discrepancy
/// uncovered while probing a conjecture — and never affect `pass`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub suite: String,
    pub bounds: String,
    pub pass: bool,
    pub counterexamples: Vec<String>,
    pub findings: Vec<String>,
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>, bounds: impl Into<String>) -> Self {
        VerificationReport {
            suite: suite.into(),
            bounds: bounds.into(),
            pass: true,
            counterexamples: Vec::new(),
            findings: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn counterexample(&mut self, cx: impl Into<String>) {
        self.counterexamples.push(cx.into());
        self.pass = false;
    }

    pub fn finding(&mut self, finding: impl Into<String>) {
        self.findings.push(finding.into());
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    /// Re-derives `pass` from the counterexample list; call after any
    /// direct field manipulation.
    pub fn finish(mut self) -> Self {
        self.pass = self.counterexamples.is_empty();
        self
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        writeln!(f, "suite {} ({}): {verdict}", self.suite, self.bounds)?;
        let show = |f: &mut fmt::Formatter<'_>, label: &str, items: &[String]| {
            const CAP: usize = 20;
            for item in items.iter().take(CAP) {
                writeln!(f, "  {label}: {item}")?;
            }
            if items.len() > CAP {
                writeln!(f, "  ... and {} more {label}s", items.len() - CAP)?;
            }
            Ok(())
        };
        show(f, "counterexample", &self.counterexamples)?;
        show(f, "finding", &self.findings)?;
        show(f, "note", &self.notes)?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pass_tracks_counterexamples() {
        let mut r = VerificationReport::new("demo", "bound 3");
        assert!(r.pass);
        r.finding("odd but not wrong");
        r.note("context");
        assert!(r.pass);
        r.counterexample("(1,2,3)");
        assert!(!r.pass);
        assert_eq!(r.clone().finish(), r);
    }

    #[test]
    fn display_shows_verdict_and_items() {
        let mut r = VerificationReport::new("demo", "bound 3");
        r.counterexample("(1,2,3)");
        let text = r.to_string();
        assert!(text.contains("FAIL"));
        assert!(text.contains("counterexample: (1,2,3)"));
    }
}
