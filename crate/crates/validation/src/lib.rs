//! Acceptance criteria C1-C10, one function each. Every criterion is
//! checked at its literal threshold; where a better-conditioned measure
//! exists it is reported alongside, but never decides the verdict.

pub mod criteria;
pub mod tolerances;

/// Outcome of one criterion.
#[derive(Debug, Clone, PartialEq)]
pub struct Verdict {
    pub id: &'static str,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Verdict {
    pub fn line(&self) -> String {
        format!(
            "{:<4}{}  {}: {}",
            self.id,
            if self.passed { "PASS" } else { "FAIL" },
            self.title,
            self.detail
        )
    }
}

pub fn run_all() -> Vec<Verdict> {
    use criteria::*;
    let all: [fn() -> Verdict; 10] = [c1, c2, c3, c4, c5, c6, c7, c8, c9, c10];
    all.iter().map(|c| c()).collect()
}
