//! Parallel corpus scanning with canonically sorted reports.

use std::fmt;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{Certificates, ConjectureSpec, Status};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::{parse_graph6, write_graph6};
use crate::limits::Limits;

/// A corpus line that did not parse.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParseIssue {
    pub line: usize,
    pub message: String,
}

pub type CorpusItem = std::result::Result<Graph, ParseIssue>;

/// Parses one graph6 string per nonblank line; line numbers are 1-based.
pub fn read_graph6_corpus(text: &str) -> Vec<CorpusItem> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            parse_graph6(l.trim()).map_err(|e| ParseIssue {
                line: i + 1,
                message: e.to_string(),
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub graph6: String,
    pub clause: usize,
    pub certificates: Certificates,
}

/// Settings that influence the result. The worker count is deliberately
/// absent: it does not.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanParams {
    pub source: String,
    pub limits: Limits,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub conjecture_id: String,
    pub status: Status,
    pub statement: String,
    pub scanned: usize,
    pub skipped: usize,
    pub parse_errors: Vec<ParseIssue>,
    pub counterexamples: Vec<Counterexample>,
    pub duration_ms: u64,
    pub params: ScanParams,
}

impl ScanReport {
    /// A theorem-status statement was violated.
    pub fn theorem_violated(&self) -> bool {
        self.status == Status::Theorem && !self.counterexamples.is_empty()
    }
}

enum Outcome {
    Clean,
    Hit(Counterexample),
    Skipped,
}

/// Checks every corpus graph against `spec` on `jobs` worker threads.
///
/// Graphs over the caps are skipped and counted; parse failures are listed
/// and do not stop the scan. Counterexamples are sorted by graph6 string.
pub fn scan(
    corpus: &[CorpusItem],
    spec: &ConjectureSpec,
    limits: &Limits,
    jobs: usize,
    source: &str,
) -> Result<ScanReport> {
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?;
    let outcomes: Vec<Result<Outcome>> = pool.install(|| {
        corpus
            .par_iter()
            .filter_map(|item| item.as_ref().ok())
            .map(|g| match spec.check(g, limits) {
                Ok(None) => Ok(Outcome::Clean),
                Ok(Some((clause, certificates))) => Ok(Outcome::Hit(Counterexample {
                    graph6: write_graph6(g),
                    clause,
                    certificates,
                })),
                Err(Error::CapExceeded { .. }) => Ok(Outcome::Skipped),
                Err(e) => Err(e),
            })
            .collect()
    });
    let mut report = ScanReport {
        conjecture_id: spec.id.clone(),
        status: spec.status,
        statement: spec
            .clauses
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join("; "),
        scanned: 0,
        skipped: 0,
        parse_errors: corpus
            .iter()
            .filter_map(|i| i.as_ref().err().cloned())
            .collect(),
        counterexamples: Vec::new(),
        duration_ms: 0,
        params: ScanParams {
            source: source.to_string(),
            limits: *limits,
        },
    };
    for o in outcomes {
        match o? {
            Outcome::Clean => report.scanned += 1,
            Outcome::Hit(c) => {
                report.scanned += 1;
                report.counterexamples.push(c);
            }
            Outcome::Skipped => report.skipped += 1,
        }
    }
    report
        .counterexamples
        .sort_by(|x, y| (&x.graph6, x.clause).cmp(&(&y.graph6, y.clause)));
    report.duration_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// Re-derives a reported counterexample from its graph6 line alone.
pub fn revalidate(spec: &ConjectureSpec, cx: &Counterexample, limits: &Limits) -> Result<bool> {
    let g = parse_graph6(&cx.graph6)?;
    Ok(
        matches!(spec.check(&g, limits)?, Some((clause, certs)) if clause == cx.clause && certs == cx.certificates),
    )
}

impl fmt::Display for ScanReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "conjecture {} ({}): {}",
            self.conjecture_id, self.status, self.statement
        )?;
        writeln!(
            f,
            "source {}, exact cap {}, search cap {}",
            self.params.source, self.params.limits.exact_cap, self.params.limits.search_cap
        )?;
        writeln!(
            f,
            "scanned {}, skipped {}, parse errors {}, counterexamples {}",
            self.scanned,
            self.skipped,
            self.parse_errors.len(),
            self.counterexamples.len()
        )?;
        for p in &self.parse_errors {
            writeln!(f, "  parse error on line {}: {}", p.line, p.message)?;
        }
        for c in &self.counterexamples {
            writeln!(f, "  {} (clause {})", c.graph6, c.clause)?;
            for (k, v) in &c.certificates {
                writeln!(f, "    {k}: {v}")?;
            }
        }
        writeln!(f, "duration_ms {}", self.duration_ms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::conjectures::{corpus_up_to, lookup, Clause, Literal, Predicate};

    fn corpus(n: usize) -> Vec<CorpusItem> {
        corpus_up_to(n).unwrap().into_iter().map(Ok).collect()
    }

    #[test]
    fn grotzsch_scan() {
        let items = vec![Ok(catalog::grotzsch())];
        let r = scan(
            &items,
            &lookup("C4.1").unwrap(),
            &Limits::default(),
            1,
            "test",
        )
        .unwrap();
        assert_eq!((r.scanned, r.skipped, r.counterexamples.len()), (1, 0, 0));
    }

    #[test]
    fn parse_errors_and_skips_are_counted() {
        let text = format!(
            "{}\n\nnot graph6 ~~\n{}\n",
            write_graph6(&catalog::figure1()),
            write_graph6(&Graph::empty(20).unwrap())
        );
        let items = read_graph6_corpus(&text);
        let r = scan(
            &items,
            &lookup("C4.2").unwrap(),
            &Limits::default(),
            2,
            "text",
        )
        .unwrap();
        assert_eq!(r.parse_errors.len(), 1);
        assert_eq!(r.parse_errors[0].line, 3);
        assert_eq!(r.scanned, 1);
        assert_eq!(r.skipped, 1);
    }

    #[test]
    fn hits_are_sorted_revalidated_and_independent_of_jobs() {
        // a false statement: every odd-hole-free graph is triangle-free
        let spec = ConjectureSpec {
            id: "X".into(),
            status: Status::Conjecture,
            clauses: vec![Clause {
                hypothesis: vec![Literal {
                    pred: Predicate::OddHoleFree,
                    value: true,
                }],
                conclusion: Some(Literal {
                    pred: Predicate::TriangleFree,
                    value: true,
                }),
            }],
        };
        let items = corpus(5);
        let mut one = scan(&items, &spec, &Limits::default(), 1, "n<=5").unwrap();
        let mut four = scan(&items, &spec, &Limits::default(), 4, "n<=5").unwrap();
        assert!(!one.counterexamples.is_empty());
        assert!(one
            .counterexamples
            .windows(2)
            .all(|w| w[0].graph6 <= w[1].graph6));
        for c in &one.counterexamples {
            assert!(revalidate(&spec, c, &Limits::default()).unwrap());
        }
        one.duration_ms = 0;
        four.duration_ms = 0;
        assert_eq!(one, four);
        let json = serde_json::to_string(&one).unwrap();
        let back: ScanReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, one);
        assert!(!one.theorem_violated());
    }

    #[test]
    fn theorems_hold_up_to_six() {
        let items = corpus(6);
        for spec in crate::conjectures::registry() {
            let r = scan(&items, &spec, &Limits::default(), 4, "n<=6").unwrap();
            assert_eq!(r.scanned, 156 + 34 + 11 + 4 + 2 + 1 + 1);
            assert!(r.counterexamples.is_empty(), "{r}");
        }
    }
}
