use std::fmt::Write as _;

use serde::Serialize;

use super::VerificationRecord;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub graphs: usize,
    pub records: usize,
    pub holds: usize,
    pub violations: usize,
    pub equalities: usize,
    pub regular: usize,
    pub consistent: usize,
    pub inconsistent: usize,
    /// Records where no equality characterization was asserted.
    pub unasserted: usize,
    /// (graph, theorem, kind) combinations whose hypotheses were not met.
    pub skipped: usize,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub records: Vec<VerificationRecord>,
    pub summary: Summary,
}

impl Report {
    pub fn new(records: Vec<VerificationRecord>, graphs: usize, skipped: usize) -> Self {
        let count = |f: fn(&VerificationRecord) -> bool| records.iter().filter(|r| f(r)).count();
        let summary = Summary {
            graphs,
            records: records.len(),
            holds: count(|r| r.holds),
            violations: count(|r| !r.holds),
            equalities: count(|r| r.equality),
            regular: count(|r| r.regular),
            consistent: count(|r| r.consistency == Some(true)),
            inconsistent: count(|r| r.consistency == Some(false)),
            unasserted: count(|r| r.consistency.is_none()),
            skipped,
            passed: records.iter().all(VerificationRecord::passed),
        };
        Report { records, summary }
    }

    /// One JSON object per record, then `{"summary": ...}`.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            out.push_str(&serde_json::to_string(r).expect("records serialize"));
            out.push('\n');
        }
        let summary = serde_json::json!({ "summary": self.summary });
        out.push_str(&summary.to_string());
        out.push('\n');
        out
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::from(
            "index\tgraph\tkind\ttheorem\tleft\tmiddle\tright\tslack\tholds\tequality\tregular\tconsistency\n",
        );
        for r in &self.records {
            let _ = writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                r.index,
                r.graph,
                r.kind.map_or("-", |k| k.as_str()),
                r.theorem,
                r.left,
                r.middle.map_or_else(|| "-".to_string(), |m| m.to_string()),
                r.right,
                r.slack,
                r.holds,
                r.equality,
                r.regular,
                r.consistency.map_or("-", |c| if c { "true" } else { "false" }),
            );
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "# graphs={} records={} violations={} inconsistent={} skipped={} passed={}",
            s.graphs, s.records, s.violations, s.inconsistent, s.skipped, s.passed
        );
        out
    }
}
