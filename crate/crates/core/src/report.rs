//! Structured pass/fail reports for certified checks.
//!
//! A check evaluates named hypothesis clauses and named conclusion clauses.
//! Conclusions are always computed, even when a hypothesis fails; the report
//! then marks itself unsupported rather than skipping the computation, so a
//! failing run still shows exactly what held and what did not.

/// One named condition with its verdict and a human-readable witness.
#[derive(Debug, Clone)]
pub struct Clause {
    pub name: String,
    pub pass: bool,
    /// What was checked and what was seen (roots, bounds, counterexample
    /// points, …). Always populated; most useful when `pass` is false.
    pub witness: String,
}

impl Clause {
    pub fn new(name: impl Into<String>, pass: bool, witness: impl Into<String>) -> Clause {
        Clause {
            name: name.into(),
            pass,
            witness: witness.into(),
        }
    }
}

/// Outcome of one certified check.
#[derive(Debug, Clone, Default)]
pub struct CheckReport {
    pub hypotheses: Vec<Clause>,
    pub conclusions: Vec<Clause>,
    /// Auxiliary objects built during the check, rendered as text
    /// (constructed polynomials, sequences, witness points).
    pub constructed: Vec<(String, String)>,
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn new() -> CheckReport {
        CheckReport::default()
    }

    pub fn hypothesis(&mut self, name: impl Into<String>, pass: bool, witness: impl Into<String>) {
        self.hypotheses.push(Clause::new(name, pass, witness));
    }

    pub fn conclusion(&mut self, name: impl Into<String>, pass: bool, witness: impl Into<String>) {
        self.conclusions.push(Clause::new(name, pass, witness));
    }

    pub fn constructed(&mut self, name: impl Into<String>, value: impl Into<String>) {
        self.constructed.push((name.into(), value.into()));
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn hypotheses_pass(&self) -> bool {
        self.hypotheses.iter().all(|c| c.pass)
    }

    pub fn conclusions_pass(&self) -> bool {
        self.conclusions.iter().all(|c| c.pass)
    }

    /// Hypotheses hold and every conclusion holds: the implication is
    /// witnessed on this instance.
    pub fn all_pass(&self) -> bool {
        self.hypotheses_pass() && self.conclusions_pass()
    }

    /// The check is *supported*: either the hypotheses hold (so conclusions
    /// are asserted) or they do not (so nothing is claimed).
    pub fn supported(&self) -> bool {
        !self.hypotheses_pass() || self.conclusions_pass()
    }

    /// Counterexample to the implication: hypotheses hold, a conclusion fails.
    pub fn is_violation(&self) -> bool {
        self.hypotheses_pass() && !self.conclusions_pass()
    }

    /// Multi-line plain-text rendering.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        let verdict = if self.is_violation() {
            "VIOLATION"
        } else if self.all_pass() {
            "PASS"
        } else {
            "NOT APPLICABLE (hypotheses fail)"
        };
        out.push_str(&format!("verdict: {verdict}\n"));
        let render = |out: &mut String, title: &str, clauses: &[Clause]| {
            if clauses.is_empty() {
                return;
            }
            out.push_str(title);
            out.push('\n');
            for c in clauses {
                let mark = if c.pass { "ok " } else { "FAIL" };
                out.push_str(&format!("  [{mark}] {}: {}\n", c.name, c.witness));
            }
        };
        render(&mut out, "hypotheses:", &self.hypotheses);
        render(&mut out, "conclusions:", &self.conclusions);
        if !self.constructed.is_empty() {
            out.push_str("constructed:\n");
            for (name, value) in &self.constructed {
                out.push_str(&format!("  {name} = {value}\n"));
            }
        }
        for note in &self.notes {
            out.push_str(&format!("note: {note}\n"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_logic() {
        let mut r = CheckReport::new();
        r.hypothesis("h1", true, "holds");
        r.conclusion("c1", true, "holds");
        assert!(r.all_pass() && r.supported() && !r.is_violation());

        let mut r = CheckReport::new();
        r.hypothesis("h1", false, "fails");
        r.conclusion("c1", false, "fails");
        assert!(!r.all_pass());
        assert!(r.supported(), "failed hypotheses make the check vacuous");
        assert!(!r.is_violation());

        let mut r = CheckReport::new();
        r.hypothesis("h1", true, "holds");
        r.conclusion("c1", false, "fails");
        assert!(r.is_violation());
        assert!(!r.supported());
        assert!(r.summary().contains("VIOLATION"));
    }

    #[test]
    fn summary_lists_clauses_and_constructions() {
        let mut r = CheckReport::new();
        r.hypothesis("f real-rooted", true, "3 real roots");
        r.conclusion("F real-rooted", true, "4 real roots");
        r.constructed("F", "x^4 - 2*x^2");
        r.note("strict variant not requested");
        let s = r.summary();
        assert!(s.contains("[ok ] f real-rooted"));
        assert!(s.contains("F = x^4 - 2*x^2"));
        assert!(s.contains("note: strict variant"));
    }
}
