//! Human-readable rendering of a report.

use serde_json::Value as Json;

use crate::ast::TaskKind;
use crate::run::{Report, TaskReport};

fn s(v: &Json) -> String {
    match v {
        Json::String(x) => x.clone(),
        Json::Null => "-".into(),
        other => other.to_string(),
    }
}

fn list(v: &Json) -> String {
    match v {
        Json::Array(xs) => xs.iter().map(s).collect::<Vec<_>>().join(", "),
        other => s(other),
    }
}

fn summary(t: &TaskReport) -> Vec<String> {
    let Some(r) = &t.result else { return Vec::new() };
    match t.kind {
        TaskKind::Profile => vec![format!(
            "edim {}, dim {}, depth {}, codepth {}, mult {}, socle dim {}, CM {}, Gorenstein {}, CI {}",
            r["edim"], r["dim"], r["depth"], r["codepth"], s(&r["multiplicity"]), s(&r["socle_dim"]),
            r["is_cohen_macaulay"], r["is_gorenstein"], r["is_ci"]
        )],
        TaskKind::Hilbert => vec![format!("coefficients {}", list(&r["coefficients"]))],
        TaskKind::Betti => vec![format!(
            "betti numbers {}; projective dimension {}",
            list(&r["totals"]),
            s(&r["projective_dimension"])
        )],
        TaskKind::Tor | TaskKind::Ext => {
            let mut out = vec![format!("ranks {}", list(&r["ranks"]))];
            if let Some(w) = &t.window {
                out.push(format!("vanishing {}", s(&w["vanishing"]["verdict"])));
            }
            out
        }
        TaskKind::KoszulAlgebra => vec![format!(
            "ranks {}; trivial-extension witness dims {}",
            list(&r["algebra"]["ranks"]),
            list(&r["trivial_extension_witness"]["w_dims"])
        )],
        TaskKind::Certify => {
            let mut out = vec![format!("verdict {} via {}", s(&r["verdict"]), s(&r["clause"]))];
            if let Some(st) = r["statement"].as_str() {
                out.push(st.to_string());
            }
            out
        }
        TaskKind::GoodFactorization => vec![match r["display"].as_str() {
            Some(d) => format!("good: {d}"),
            None => "no good factorization".into(),
        }],
        TaskKind::Selmer => {
            let rep = &r["report"];
            vec![format!(
                "m = {}: irreducible {}, p = [{}], r = [{}]",
                rep["m"],
                rep["irreducible"],
                list(&rep["p"]),
                list(&rep["r"])
            )]
        }
    }
}

pub fn render_text(report: &Report) -> String {
    let mut out = format!("{} {}\n", report.tool, report.version);
    for d in &report.declarations {
        match (&d.value, &d.error) {
            (_, Some(e)) => out.push_str(&format!("{} {}: error: {}\n", d.kind, d.name, e.message)),
            (Some(v), None) => out.push_str(&format!("{} {} = {}\n", d.kind, d.name, v)),
            (None, None) => {}
        }
    }
    for t in &report.tasks {
        out.push_str(&format!("[{}] {}\n", t.index, t.task));
        if let Some(e) = &t.error {
            out.push_str(&format!("    error ({}): {}\n", e.kind, e.message));
        }
        for line in summary(t) {
            out.push_str(&format!("    {line}\n"));
        }
        if let Some(ms) = t.timing_ms {
            out.push_str(&format!("    {ms} ms\n"));
        }
    }
    out
}
