//! Acceptance gate: each criterion runs once with its time budget and prints
//! one PASS/FAIL line. The process exits non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use wreath_specht::cli::run;
use wreath_specht::cosets::{brute_force_double_cosets, coset_lookup, double_coset_reps, rho_cosets_for_sizes};
use wreath_specht::verify::{run_suite, Bounds, Suite, SuiteReport};
use wreath_specht::{branch_first, Composition, Multipartition, Permutation};

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn suite(suite: Suite, max_m: usize, max_n: usize) -> Result<SuiteReport, String> {
    let report = run_suite(suite, Bounds { max_m, max_n }).map_err(|e| format!("{suite}: {e}"))?;
    if report.passed() {
        Ok(report)
    } else {
        Err(report.to_string())
    }
}

fn summary(reports: &[SuiteReport]) -> String {
    reports.iter().map(|r| format!("{} checked {}", r.suite, r.checked)).collect::<Vec<_>>().join(", ")
}

fn worked_example() -> Outcome {
    let lambda = Multipartition::from_parts(vec![vec![2], vec![1, 1], vec![1, 1]]).unwrap();
    let nu = Multipartition::from_parts(vec![vec![3], vec![2, 1]]).unwrap();
    let mult = branch_first(3, &lambda).map_err(|e| e.to_string())?.get(&nu);
    if mult != 1 {
        return Err(format!("library gives multiplicity {mult}"));
    }
    let r = run(["wreath-specht", "branch-first", "-m", "3", "--lambda", "[[2],[1,1],[1,1]]", "--json"]);
    let out = r.rendered();
    if r.exit_code != 0 || !out.contains(r#"{"nu":[[3],[2,1]],"mult":1}"#) {
        return Err(format!("CLI output {out}"));
    }
    Ok("multiplicity 1 at ([3],[2,1])".into())
}

fn labelling_equivalence() -> Outcome {
    Ok(summary(&[suite(Suite::LabellingEquivalence, 4, 4)?]))
}

fn first_rule_dimensions() -> Outcome {
    Ok(summary(&[suite(Suite::DimensionsFirst, 4, 5)?]))
}

fn second_rule_dimensions() -> Outcome {
    Ok(summary(&[suite(Suite::DimensionsSecond, 5, 6)?]))
}

fn lr_oracle() -> Outcome {
    Ok(summary(&[suite(Suite::LrOracle, 0, 8)?]))
}

fn specht_dimensions() -> Outcome {
    // hook lengths against tableau counts up to 8 boxes, against the
    // repeated Littlewood-Richardson product up to 7
    Ok(summary(&[suite(Suite::SpechtDimension, 0, 8)?]))
}

fn worked_coset_list() -> Outcome {
    let gamma = Composition::new(vec![3, 1, 0, 2, 3]);
    let point_stabilizer = Composition::new(vec![8, 1]);
    let listed = ["e", "(6,9,8,7)", "(4,9,8,7,6,5)", "(3,9,8,7,6,5,4)"];
    let listed: Vec<Permutation> = listed.iter().map(|c| Permutation::parse_cycles(c, 9).unwrap()).collect();

    let oracle = brute_force_double_cosets(&gamma, &point_stabilizer, 9).map_err(|e| e.to_string())?;
    let lookup = coset_lookup(&oracle);
    let coset_of = |p: &Permutation| lookup[p.rank()];
    let listed_cosets: BTreeSet<usize> = listed.iter().map(coset_of).collect();
    if oracle.len() != 4 || listed_cosets.len() != 4 {
        return Err(format!("{} cosets, listed cycles hit {}", oracle.len(), listed_cosets.len()));
    }
    let rho = rho_cosets_for_sizes(&gamma).map_err(|e| e.to_string())?;
    let rho_cosets: BTreeSet<usize> = rho.iter().map(|(_, p)| coset_of(p)).collect();
    if rho_cosets != listed_cosets || rho.len() != 4 {
        return Err("rho cycles do not match the listed double cosets".into());
    }
    let reps = double_coset_reps(&gamma, &point_stabilizer).map_err(|e| e.to_string())?.reps;
    let rep_cosets: BTreeSet<usize> = reps.iter().map(coset_of).collect();
    if rep_cosets != listed_cosets {
        return Err("tableau representatives do not match the listed double cosets".into());
    }
    Ok("worked list reproduced".into())
}

fn coset_machinery() -> Outcome {
    let reports = [
        suite(Suite::Cosets, 0, 6)?,
        suite(Suite::Stabilizers, 0, 6)?,
        suite(Suite::LengthLemma, 0, 6)?,
        suite(Suite::MinimalLength, 0, 6)?,
        suite(Suite::Rho, 5, 6)?,
    ];
    let worked = worked_coset_list()?;
    Ok(format!("{}; {worked}", summary(&reports)))
}

fn degeneration() -> Outcome {
    Ok(summary(&[suite(Suite::Degeneration, 0, 8)?]))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 worked example", Duration::from_secs(1), worked_example),
        ("2 labelling/matrix equivalence", Duration::from_secs(120), labelling_equivalence),
        ("3 first-rule dimension identity", Duration::from_secs(300), first_rule_dimensions),
        ("4 second-rule dimension identity", Duration::from_secs(120), second_rule_dimensions),
        ("5 LR oracle agreement", Duration::from_secs(180), lr_oracle),
        ("6 Specht-dimension consistency", Duration::from_secs(60), specht_dimensions),
        ("7 coset machinery", Duration::from_secs(300), coset_machinery),
        ("8 m=1 degeneration", Duration::from_secs(1), degeneration),
    ];
    let mut all_passed = true;
    for (name, budget, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let (passed, detail) = match outcome {
            Ok(d) if elapsed <= budget => (true, d),
            Ok(d) => (false, format!("{d}; over budget")),
            Err(e) => (false, e),
        };
        all_passed &= passed;
        println!(
            "{} criterion {name}: {:.3}s of {}s ({detail})",
            if passed { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            budget.as_secs()
        );
    }
    if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
