//! Campaign report assembly and rendering (JSON and Markdown).

use std::collections::BTreeMap;
use std::time::Duration;

use gstar_core::Verdict;
use serde::Serialize;

#[derive(Serialize, Clone)]
pub struct ConfigEcho {
    pub statements: Vec<String>,
    pub k_min: usize,
    pub k_max: usize,
    pub max_order: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub groups: Option<Vec<String>>,
    pub group_files: Vec<String>,
    pub witnesses: bool,
    pub stable: bool,
    pub format: String,
}

#[derive(Serialize, Default, PartialEq, Debug)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub vacuous: usize,
    pub skipped: usize,
}

#[derive(Serialize)]
pub struct CampaignReport {
    pub tool_version: String,
    pub config: ConfigEcho,
    pub verdicts: Vec<Verdict>,
    pub summary: Summary,
    #[serde(serialize_with = "seconds")]
    pub total_elapsed: Duration,
}

fn seconds<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl CampaignReport {
    pub fn new(config: ConfigEcho, mut verdicts: Vec<Verdict>, total_elapsed: Duration) -> Self {
        if !config.witnesses {
            for v in &mut verdicts {
                v.witness = None;
            }
        }
        let mut report = CampaignReport {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            config,
            summary: summarize(&verdicts),
            verdicts,
            total_elapsed,
        };
        if report.config.stable {
            report.total_elapsed = Duration::ZERO;
            for v in &mut report.verdicts {
                v.elapsed = Duration::ZERO;
            }
        }
        report
    }

    pub fn exit_code(&self) -> u8 {
        if self.summary.fail > 0 {
            1
        } else if self.summary.skipped > 0 {
            3
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        out.push_str("# coprime commutator verification campaign\n\n");
        out.push_str(&format!("- tool: gstar {}\n", self.tool_version));
        out.push_str(&format!(
            "- statements: {}\n",
            self.config.statements.join(", ")
        ));
        out.push_str(&format!(
            "- k: {}..{}  |  max order: {}\n",
            self.config.k_min, self.config.k_max, self.config.max_order
        ));
        out.push_str(&format!(
            "- result: {} pass / {} fail / {} vacuous / {} skipped\n",
            self.summary.pass, self.summary.fail, self.summary.vacuous, self.summary.skipped
        ));
        if !self.config.stable {
            out.push_str(&format!(
                "- elapsed: {:.2}s\n",
                self.total_elapsed.as_secs_f64()
            ));
        }

        let mut by_statement: BTreeMap<&str, Vec<&Verdict>> = BTreeMap::new();
        let mut order: Vec<&str> = Vec::new();
        for v in &self.verdicts {
            let key = v.statement.name();
            if !by_statement.contains_key(key) {
                order.push(key);
            }
            by_statement.entry(key).or_default().push(v);
        }
        for key in order {
            out.push_str(&format!("\n## {key}\n\n"));
            out.push_str("| group | order | k | pi | left | right | equivalent | detail |\n");
            out.push_str("|---|---|---|---|---|---|---|---|\n");
            for v in &by_statement[key] {
                out.push_str(&render_row(v));
            }
        }
        out
    }
}

fn render_row(v: &Verdict) -> String {
    let k = v.parameter_k.map(|k| k.to_string()).unwrap_or_default();
    let pi = v
        .parameter_pi
        .as_ref()
        .map(|pi| {
            format!(
                "{{{}}}",
                pi.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
            )
        })
        .unwrap_or_default();
    let eq = if v.skipped {
        "skipped".to_string()
    } else if v.vacuous {
        "vacuous".to_string()
    } else if v.equivalent {
        "yes".to_string()
    } else {
        "NO".to_string()
    };
    let mut detail = String::new();
    if let Some(w) = &v.witness {
        detail = format!(
            "witness a={} b={} orders {}·{} product {}",
            w.a, w.b, w.order_a, w.order_b, w.order_product
        );
    } else if let Some(note) = &v.note {
        detail = note.clone();
    }
    let order = if v.group_order == 0 {
        String::new()
    } else {
        v.group_order.to_string()
    };
    format!(
        "| {} | {} | {} | {} | {} | {} | {} | {} |\n",
        v.group_name, order, k, pi, v.left_side, v.right_side, eq, detail
    )
}

fn summarize(verdicts: &[Verdict]) -> Summary {
    let mut s = Summary::default();
    for v in verdicts {
        if v.skipped {
            s.skipped += 1;
        } else if !v.equivalent {
            s.fail += 1;
        } else if v.vacuous {
            s.vacuous += 1;
        } else {
            s.pass += 1;
        }
    }
    s
}

/// Sanity check used by tests: the summary always tallies the verdicts.
pub fn consistent(report: &CampaignReport) -> bool {
    summarize(&report.verdicts) == report.summary
        && report.summary.pass
            + report.summary.fail
            + report.summary.vacuous
            + report.summary.skipped
            == report.verdicts.len()
}
