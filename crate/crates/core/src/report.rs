//! Verification reports: named checks with pass/fail/skipped status, a
//! witness on failure, and exact values rendered as strings.

use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

impl CheckStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Skipped => "skipped",
        }
    }
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckItem {
    pub id: String,
    pub status: CheckStatus,
    /// Failing basis tuple or reason; empty on pass.
    pub witness: String,
    /// Exact values attached to the check, as `(key, value)` strings.
    pub values: Vec<(String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Report {
    pub suite: String,
    pub items: Vec<CheckItem>,
}

/// Bumped whenever catalog constructions change observable output.
pub const CATALOG_VERSION: &str = "1";

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report {
            suite: suite.into(),
            items: Vec::new(),
        }
    }

    pub fn push(&mut self, id: impl Into<String>, status: CheckStatus, witness: impl Into<String>) {
        self.items.push(CheckItem {
            id: id.into(),
            status,
            witness: witness.into(),
            values: Vec::new(),
        });
    }

    pub fn pass(&mut self, id: impl Into<String>) {
        self.push(id, CheckStatus::Pass, "");
    }

    pub fn fail(&mut self, id: impl Into<String>, witness: impl Into<String>) {
        self.push(id, CheckStatus::Fail, witness);
    }

    pub fn skip(&mut self, id: impl Into<String>, reason: impl Into<String>) {
        self.push(id, CheckStatus::Skipped, reason);
    }

    /// Records `id` as passing iff `witness` is `None`.
    pub fn check(&mut self, id: impl Into<String>, witness: Option<String>) {
        match witness {
            None => self.pass(id),
            Some(w) => self.fail(id, w),
        }
    }

    pub fn check_bool(&mut self, id: impl Into<String>, ok: bool, witness: impl Into<String>) {
        if ok {
            self.pass(id)
        } else {
            self.fail(id, witness)
        }
    }

    /// Adds a value to the most recent item, creating an informational
    /// passing item named `id` when there is none with that name.
    pub fn value(&mut self, id: &str, key: impl Into<String>, value: impl ToString) {
        let pos = self.items.iter().rposition(|it| it.id == id);
        let idx = match pos {
            Some(i) => i,
            None => {
                self.pass(id);
                self.items.len() - 1
            }
        };
        self.items[idx].values.push((key.into(), value.to_string()));
    }

    /// Appends all items of `other`, prefixing their ids with `prefix/`.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut it in other.items {
            if !prefix.is_empty() {
                it.id = format!("{prefix}/{}", it.id);
            }
            self.items.push(it);
        }
    }

    pub fn all_pass(&self) -> bool {
        self.items.iter().all(|it| it.status != CheckStatus::Fail)
    }

    pub fn status(&self) -> CheckStatus {
        if self.all_pass() {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        }
    }

    pub fn failures(&self) -> Vec<&CheckItem> {
        self.items
            .iter()
            .filter(|it| it.status == CheckStatus::Fail)
            .collect()
    }

    pub fn get(&self, id: &str) -> Option<&CheckItem> {
        self.items.iter().find(|it| it.id == id)
    }

    pub fn get_value(&self, id: &str, key: &str) -> Option<&str> {
        self.get(id)?
            .values
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    /// Line-based text rendering. Everything except the `elapsed-ms` line is
    /// deterministic.
    pub fn render(&self, elapsed_ms: Option<u128>) -> String {
        let mut out = String::new();
        out.push_str(&format!("report {}\n", self.suite));
        out.push_str(&format!("catalog-version {CATALOG_VERSION}\n"));
        for it in &self.items {
            out.push_str(&format!("item {} {}\n", it.id, it.status));
            if !it.witness.is_empty() {
                out.push_str(&format!("  witness {}\n", it.witness.replace('\n', " ")));
            }
            for (k, v) in &it.values {
                out.push_str(&format!("  value {k} {v}\n"));
            }
        }
        let failed = self.failures().len();
        out.push_str(&format!(
            "summary {} checks, {} failed\n",
            self.items.len(),
            failed
        ));
        out.push_str(&format!("status {}\n", self.status()));
        if let Some(ms) = elapsed_ms {
            out.push_str(&format!("elapsed-ms {ms}\n"));
        }
        out
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(None))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn any_failure_fails_suite() {
        let mut r = Report::new("t");
        r.pass("a");
        r.skip("b", "not applicable");
        assert!(r.all_pass());
        r.fail("c", "(0, 1)");
        assert_eq!(r.status(), CheckStatus::Fail);
        assert_eq!(r.failures().len(), 1);
    }

    #[test]
    fn values_attach_to_items() {
        let mut r = Report::new("t");
        r.value("dim", "dim", 3);
        r.value("dim", "stabilized", true);
        assert_eq!(r.get_value("dim", "dim"), Some("3"));
        assert_eq!(r.items.len(), 1);
        let text = r.render(Some(5));
        assert!(text.contains("  value stabilized true\n"));
        assert!(text.ends_with("elapsed-ms 5\n"));
    }
}
