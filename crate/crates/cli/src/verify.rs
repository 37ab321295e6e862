use std::collections::{BTreeSet, HashSet};
use std::process::ExitCode;

use anyhow::Result;
use serde_json::json;
use siltlab::search;
use siltlab::sign::sign_decomposition_report;

use crate::VerifyArgs;

struct Failure {
    check: &'static str,
    detail: serde_json::Value,
}

pub fn run(args: &VerifyArgs) -> Result<ExitCode> {
    let (name, alg) = args.source.load()?;
    let opts = args.search.options(false)?;
    let result = siltlab::enumerate(&alg, &name, &opts)?;
    println!("{}", result.summary());
    if !result.complete {
        println!("enumeration incomplete; checks skipped");
        return Ok(ExitCode::from(2));
    }

    let mut first: Option<Failure> = None;
    let mut report = |check: &'static str, outcome: std::result::Result<String, serde_json::Value>| match outcome {
        Ok(msg) => println!("PASS {check}: {msg}"),
        Err(detail) => {
            println!("FAIL {check}");
            first.get_or_insert(Failure { check, detail });
        }
    };

    report(
        "presilting",
        match search::validate(&alg, &result) {
            Ok(()) => Ok(format!("{} objects", result.count())),
            Err(e) => Err(json!(e.to_string())),
        },
    );

    let totals = result.total_g_vectors();
    let mut seen = HashSet::new();
    let dup = totals.iter().find(|g| !seen.insert(g.as_slice()));
    report(
        "injectivity",
        match dup {
            None => Ok(format!("{} distinct g-vectors", totals.len())),
            Some(g) => Err(json!({ "g_vector": g })),
        },
    );

    let sign = sign_decomposition_report(&alg, &name, &opts)?;
    report(
        "orthant-partition",
        if !sign.complete {
            Err(json!("orthant enumeration incomplete"))
        } else if sign.consistent {
            Ok(format!("{} orthants sum to {}", sign.orthants.len(), sign.sum))
        } else {
            Err(serde_json::to_value(&sign)?)
        },
    );

    let op = siltlab::enumerate(&alg.opposite(), &format!("{name}^op"), &opts)?;
    let ours: BTreeSet<Vec<i32>> = totals.iter().map(|g| g.iter().map(|x| -x).collect()).collect();
    let theirs: BTreeSet<Vec<i32>> = op.total_g_vectors().into_iter().collect();
    report(
        "duality",
        if !op.complete {
            Err(json!("opposite enumeration incomplete"))
        } else if ours == theirs {
            Ok("opposite g-vectors are the negations".to_string())
        } else {
            let missing = ours.symmetric_difference(&theirs).next().cloned();
            Err(json!({ "unmatched_g_vector": missing }))
        },
    );

    match first {
        None => Ok(ExitCode::SUCCESS),
        Some(f) => {
            println!("{}", json!({ "check": f.check, "counterexample": f.detail }));
            Ok(ExitCode::FAILURE)
        }
    }
}
