//! JSON views of library results. Big integers are emitted as decimal strings.

use serde_json::{json, Value};
use setramsey_core::bounds::{
    BoundReport, Direction, HypergraphUpper, LowerBoundPlan, Regime, Rounding,
};
use setramsey_core::solver::{
    ProcessEnd, ProcessOutcome, ProcessStep, SolveResult, SolveStatus, UpperCertificate,
};
use setramsey_core::CliqueWitness;

pub fn bound(rep: &BoundReport) -> Value {
    json!({
        "name": rep.name,
        "direction": match rep.direction {
            Direction::Lower => "lower",
            Direction::Upper => "upper",
        },
        "params": rep.params,
        "value": rep.value.to_string(),
        "rounding": match rep.rounding {
            Rounding::Exact => "exact",
            Rounding::Floor => "floor",
            Rounding::Ceil => "ceil",
        },
        "provenance": rep.provenance,
    })
}

pub fn hypergraph(h: &HypergraphUpper) -> Value {
    match h {
        HypergraphUpper::Value(rep) => bound(rep),
        HypergraphUpper::Power { base, exponent } => json!({
            "name": "hypergraph_upper",
            "direction": "upper",
            "value": null,
            "power": { "base": base.to_string(), "exponent": exponent.to_string() },
        }),
    }
}

pub fn plan(p: &LowerBoundPlan) -> Value {
    let product = p.product.as_ref().map(|x| {
        json!({
            "a": x.a, "b": x.b, "r_prime": x.r_prime, "s_prime": x.s_prime, "m": x.m, "d": x.d,
            "exponent": x.exponent.to_string(),
            "target": x.target.to_string(),
            "meets_target": x.meets_target(),
        })
    });
    json!({
        "name": "lower_bound_plan",
        "params": { "n": p.n, "r": p.r, "s": p.s },
        "regime": match p.regime {
            Regime::Direct => "direct-first-moment",
            Regime::ProductOfCodes => "product-of-codes",
        },
        "product": product,
    })
}

pub fn witness(w: &CliqueWitness) -> Value {
    json!({ "vertices": w.vertices, "color": w.color })
}

pub fn solve(res: &SolveResult) -> Value {
    json!({
        "n": res.n,
        "r": res.r,
        "s": res.s,
        "k": res.k,
        "status": match res.status {
            SolveStatus::Exact => "exact",
            SolveStatus::LowerOnly => "lower-only",
            SolveStatus::Unknown => "unknown",
        },
        "value": res.value(),
        "lower": res.lower,
        "upper": res.upper,
        "upper_certificate": res.upper_certificate.map(|c| match c {
            UpperCertificate::Exhaustive => "exhaustive",
            UpperCertificate::Turan => "turan",
            UpperCertificate::Trivial => "trivial",
        }),
        "witness_vertices": res.witness.as_ref().map(|w| w.num_vertices()),
        "stats": {
            "nodes": res.stats.nodes,
            "searched": res.stats.searched,
            "budget_exhausted": res.stats.budget_exhausted,
        },
    })
}

pub fn process(out: &ProcessOutcome) -> Value {
    let st = &out.state;
    let steps: Vec<Value> = st
        .steps
        .iter()
        .map(|step| match step {
            ProcessStep::Majority {
                color,
                vertex,
                size_before,
                size_after,
                omega_before,
                omega_after,
            } => json!({
                "kind": "majority", "color": color, "vertex": vertex,
                "size_before": size_before, "size_after": size_after,
                "omega_before": omega_before, "omega_after": omega_after,
            }),
            ProcessStep::TurnOn {
                color,
                size_before,
                dense,
                clique,
                attached,
                excluded,
                size_after,
                omega_after,
            } => json!({
                "kind": "turn_on", "color": color, "size_before": size_before,
                "t": dense, "q": clique, "u": attached, "q_prime": excluded,
                "size_after": size_after, "omega_after": omega_after,
            }),
        })
        .collect();
    json!({
        "process": {
            "end": match st.end {
                ProcessEnd::Small => "small",
                ProcessEnd::NoDenseColor => "no_dense_color",
                ProcessEnd::CliqueBudget => "clique_budget",
                ProcessEnd::Witness => "witness",
            },
            "epsilon": st.epsilon.to_string(),
            "on": st.on.to_vec(),
            "max_on": st.max_on,
            "on_limit": st.on_limit(),
            "invariants_hold": st.invariants_hold(),
            "final_size": st.set.len(),
            "steps": steps,
        },
        "witness": out.witness.as_ref().map(witness),
    })
}
