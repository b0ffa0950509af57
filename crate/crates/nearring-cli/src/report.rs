//! Verdict serialization: one canonical JSON shape shared by classify,
//! search census lines and the worked-example runner, plus the short
//! human-readable summary.

use serde_json::{json, Value};

use nearring_core::group::ElementSet;
use nearring_core::nearring::NearRing;
use nearring_core::primitivity::PrimitivityVerdict;
use nearring_core::sandwich::SandwichScheme;

use crate::docs::SchemeDoc;

fn set_json(s: &ElementSet) -> Value {
    json!(s.as_slice())
}

fn opt_set_json(s: &Option<ElementSet>) -> Value {
    match s {
        Some(s) => set_json(s),
        None => Value::Null,
    }
}

/// The verdict document: scheme, both sides, the merged answer and all
/// witnesses. serde_json orders object keys deterministically, so equal
/// verdicts serialize identically.
pub fn verdict_json(scheme: &SandwichScheme, verdict: &PrimitivityVerdict, n_size: usize) -> Value {
    let theorem = verdict.theorem.as_ref().map(|t| {
        json!({
            "conditions_hold": t.conditions.is_valid(),
            "p_holds": t.p_report.holds,
            "gamma0_subgroup_free": t.gamma0_subgroup_free,
            "one_primitive": t.one_primitive,
            "two_primitive": t.two_primitive,
        })
    });
    let direct = verdict.direct.as_ref().map(|d| {
        json!({
            "faithful": d.verdict.faithful,
            "theta0": set_json(&d.verdict.theta0),
            "theta1": set_json(&d.verdict.theta1),
            "types": {
                "type0": d.verdict.type0,
                "type1": d.verdict.type1,
                "type2": d.verdict.type2,
            },
            "one_primitive": d.one_primitive,
            "two_primitive": d.two_primitive,
        })
    });
    let p_witnesses: Vec<Value> = verdict
        .theorem
        .as_ref()
        .map(|t| {
            t.p_report
                .witnesses
                .iter()
                .map(|(ideal, w)| {
                    json!({
                        "ideal": set_json(ideal),
                        "witness": w.map(|w| json!({
                            "i": w.i, "gamma1": w.gamma1, "s": w.s, "gamma": w.gamma,
                        })),
                    })
                })
                .collect()
        })
        .unwrap_or_default();
    json!({
        "scheme": serde_json::to_value(SchemeDoc::from_core(scheme)).expect("serializable"),
        "n_size": n_size,
        "ring": verdict.ring_flag,
        "one_primitive": verdict.one_primitive,
        "two_primitive": verdict.two_primitive,
        "agree": verdict.agree,
        "theorem": theorem,
        "direct": direct,
        "witnesses": {
            "offending_n_ideal": verdict
                .direct
                .as_ref()
                .map(|d| opt_set_json(&d.verdict.offending_n_ideal))
                .unwrap_or(Value::Null),
            "offending_n_subgroup": verdict
                .direct
                .as_ref()
                .map(|d| opt_set_json(&d.verdict.offending_n_subgroup))
                .unwrap_or(Value::Null),
            "p_witnesses": p_witnesses,
        },
    })
}

/// One-line human summary, e.g. "2-primitive, no identity, |N|=7".
pub fn verdict_summary(verdict: &PrimitivityVerdict, nr: &NearRing) -> String {
    let mut parts: Vec<String> = Vec::new();
    match (verdict.one_primitive, verdict.two_primitive) {
        (_, Some(true)) => parts.push("2-primitive".into()),
        (Some(true), Some(false)) => {
            parts.push("1-primitive".into());
            parts.push("not 2-primitive".into());
        }
        (Some(false), _) => parts.push("not 1-primitive".into()),
        _ => parts.push("primitivity not applicable".into()),
    }
    if verdict.ring_flag {
        parts.push("a ring".into());
    }
    if nr.has_tables() {
        match nr.identities().two_sided {
            Some(_) => parts.push("with identity".into()),
            None => parts.push("no identity".into()),
        }
    }
    parts.push(format!("|N|={}", nr.len()));
    parts.join(", ")
}
