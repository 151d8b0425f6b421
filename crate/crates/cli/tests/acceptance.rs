//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use monocurve_core::invariants::{self, composite_invariants, Decomposition};
use monocurve_core::semigroup::gcd;
use monocurve_core::sweep::{curve_universe, maps_for_curve};
use monocurve_core::{
    full_report, is_ci_presentable, ConsistentPlaneMap, MonomialCurve, NumericalSemigroup, Oracle,
};
use std::process::{Command, ExitCode};
use std::thread;
use std::time::{Duration, Instant};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn map(weights: &[u32], l1: u32, l2: u32) -> ConsistentPlaneMap {
    ConsistentPlaneMap::new(MonomialCurve::new(weights).unwrap(), l1, l2).unwrap()
}

fn expect(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    expect(elapsed < limit, || {
        format!("took {elapsed:?}, limit {limit:?}")
    })
}

fn golden_cusp_map() -> Outcome {
    let start = Instant::now();
    let r = full_report(&map(&[3, 2], 3, 4)).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let got = (
        r.mu_x,
        r.mu_y,
        r.mu_i,
        r.ae_codim_f,
        r.ae_codim_pair,
        r.delta_f,
        r.delta_x,
        r.delta_y,
    );
    expect(got == (2, 6, 4, 2, 4, 2, 1, 3), || format!("got {got:?}"))?;
    within(elapsed, Duration::from_millis(1))?;
    Ok(format!("mu_I = 4 = codim(X,f) in {elapsed:?}"))
}

fn golden_space_curve_map() -> Outcome {
    let start = Instant::now();
    let m = map(&[2, 3, 5], 2, 11);
    let r = full_report(&m).map_err(|e| e.to_string())?;
    let c = composite_invariants(&m).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let got = (r.mu_x, r.mu_y, r.mu_i, r.ae_codim_pair);
    expect(got == (2, 10, 6, 6), || format!("got {got:?}"))?;
    let decomposed = r.delta_y - r.param_codim / (r.n - 1);
    expect(
        (r.ae_codim_f, r.delta_y, r.param_codim, decomposed) == (4, 5, 2, 4),
        || {
            format!(
                "codim(f) = {}, delta_Y = {}, param_codim = {}",
                r.ae_codim_f, r.delta_y, r.param_codim
            )
        },
    )?;
    expect(c.decomposition == Decomposition::Holds, || {
        "decomposition not applicable".into()
    })?;
    within(elapsed, Duration::from_millis(1))?;
    Ok(format!("codim(f) = 4 = 5 - 2/2, mu_I = 6 in {elapsed:?}"))
}

fn pair_universe() -> Vec<ConsistentPlaneMap> {
    curve_universe(2, 12, false)
        .iter()
        .flat_map(|c| maps_for_curve(c, 40))
        .collect()
}

fn theorem_sweep() -> Outcome {
    let start = Instant::now();
    let maps = pair_universe();
    let mut failures = Vec::new();
    for m in &maps {
        let ok = full_report(m).is_ok_and(|r| {
            r.ae_codim_pair == r.mu_i
                && r.jacobian_quotient_dim - r.ker_ev_dim == r.mu_x
                && r.ae_codim_f == r.ker_ev_dim + r.jg_quotient_dim
                && (r.conductor_ideal_dim_x, r.conductor_ideal_dim_y) == (2 * r.delta_f, r.delta_f)
                && r.mu_i == r.delta_x + r.delta_y
        });
        if !ok {
            failures.push((m.curve().weights().to_vec(), m.l1(), m.l2()));
        }
    }
    let elapsed = start.elapsed();
    expect(failures.is_empty(), || {
        format!("{} failures, first {:?}", failures.len(), failures[0])
    })?;
    within(elapsed, Duration::from_secs(10))?;
    Ok(format!("{} maps, 0 failures in {elapsed:?}", maps.len()))
}

/// Runs the oracle at the computed bound and again with the bound extended
/// by the source conductor; both must agree with the formulas.
fn oracle_agrees(m: &ConsistentPlaneMap) -> bool {
    let tight = Oracle::default().cross_check(m);
    let padded = Oracle::padded(m.curve().milnor().max(1)).cross_check(m);
    tight.all_pass() && tight == padded
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut maps = pair_universe();
    let triples = curve_universe(3, 10, true);
    maps.extend(triples.iter().flat_map(|c| maps_for_curve(c, 40)));
    let workers = thread::available_parallelism().map_or(1, |n| n.get());
    let chunk = maps.len().div_ceil(workers).max(1);
    let failures: Vec<(Vec<u32>, u32, u32)> = thread::scope(|s| {
        let handles: Vec<_> = maps
            .chunks(chunk)
            .map(|part| {
                s.spawn(move || {
                    part.iter()
                        .filter(|m| !oracle_agrees(m))
                        .map(|m| (m.curve().weights().to_vec(), m.l1(), m.l2()))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().unwrap())
            .collect()
    });
    let elapsed = start.elapsed();
    expect(!triples.is_empty(), || {
        "no space-curve families generated".into()
    })?;
    expect(failures.is_empty(), || {
        format!("{} failures, first {:?}", failures.len(), failures[0])
    })?;
    within(elapsed, Duration::from_secs(60))?;
    Ok(format!(
        "{} maps ({} space curves), padded and unpadded agree, in {elapsed:?}",
        maps.len(),
        triples.len()
    ))
}

fn generator_sets() -> Vec<Vec<u32>> {
    let mut sets = Vec::new();
    for a in 1..=15u32 {
        sets.push(vec![a]);
        for b in a + 1..=15 {
            sets.push(vec![a, b]);
            for c in b + 1..=15 {
                sets.push(vec![a, b, c]);
            }
        }
    }
    sets.retain(|g| g.iter().fold(0, |acc, &x| gcd(acc, x)) == 1);
    sets
}

fn semigroup_structure() -> Outcome {
    let sets = generator_sets();
    for gens in &sets {
        let sg = NumericalSemigroup::from_generators(gens).map_err(|e| format!("{gens:?}: {e}"))?;
        let (c, g) = (sg.conductor(), sg.genus());
        expect(sg.is_symmetric() == (c == 2 * g), || {
            format!("{gens:?}: symmetry")
        })?;
        for &m in gens {
            let apery = sg.apery_set(m).map_err(|e| e.to_string())?;
            expect(apery.len() == m as usize, || format!("{gens:?}: |Ap({m})|"))?;
            let max = *apery.iter().max().unwrap() as i64;
            expect(max == sg.frobenius() + m as i64, || {
                format!("{gens:?}: max Ap({m})")
            })?;
        }
        let horizon = c + gens.iter().max().unwrap();
        for a in (0..horizon).filter(|&a| sg.contains_nat(a)) {
            for b in (0..horizon - a).filter(|&b| sg.contains_nat(b)) {
                expect(sg.contains_nat(a + b), || format!("{gens:?}: {a} + {b}"))?;
            }
        }
        if is_ci_presentable(gens).map_err(|e| e.to_string())? {
            expect(sg.is_symmetric(), || {
                format!("{gens:?}: CI but not symmetric")
            })?;
        }
    }
    Ok(format!("{} semigroups", sets.len()))
}

fn degenerate_cases() -> Outcome {
    let mut checked = 0;
    for curve in curve_universe(2, 12, false) {
        let w = curve.weights().to_vec();
        let m = ConsistentPlaneMap::new(curve, w[0], w[1]).map_err(|e| e.to_string())?;
        let r = full_report(&m).map_err(|e| e.to_string())?;
        expect(
            r.delta_f == 0 && r.ae_codim_f == 0 && r.mu_i == r.mu_x,
            || format!("identity map of {w:?}"),
        )?;
        checked += 1;
    }
    for weights in [vec![1], vec![1, 2], vec![1, 5]] {
        for l1 in 1..=25 {
            for l2 in l1..=25 {
                if gcd(l1, l2) != 1 {
                    continue;
                }
                let m = map(&weights, l1, l2);
                let r = full_report(&m).map_err(|e| e.to_string())?;
                expect(r.mu_i == r.delta_y && r.ae_codim_pair == r.delta_y, || {
                    format!("smooth {weights:?} with ({l1},{l2})")
                })?;
                expect(invariants::delta_map(&m) == r.delta_y, || {
                    format!("delta(f) for smooth {weights:?} with ({l1},{l2})")
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} maps"))
}

fn run_cli(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_monocurve"))
        .args(args)
        .env_remove("MONOCURVE_PARALLELISM")
        .output()
        .expect("binary runs")
}

const REPORT_KEYS: [&str; 22] = [
    "weights",
    "l1",
    "l2",
    "n",
    "mu_x",
    "delta_x",
    "mu_y",
    "delta_y",
    "k",
    "delta_f",
    "mu_i",
    "ae_codim_f",
    "ae_codim_pair",
    "s",
    "ker_ev_dim",
    "jac_quot_dim",
    "jg_quot_dim",
    "cond_ideal_x",
    "cond_ideal_y",
    "param_codim",
    "composite_mu_i",
    "composite_codim",
];

fn json_object(
    out: &std::process::Output,
) -> Result<serde_json::Map<String, serde_json::Value>, String> {
    match serde_json::from_slice(&out.stdout) {
        Ok(serde_json::Value::Object(o)) => Ok(o),
        other => Err(format!("not a JSON object: {other:?}")),
    }
}

fn cli_contract() -> Outcome {
    let out = run_cli(&[
        "invariants",
        "--weights",
        "3,2",
        "--degrees",
        "3,4",
        "--format",
        "json",
    ]);
    expect(out.status.code() == Some(0), || {
        format!("cusp map exit {:?}", out.status.code())
    })?;
    let o = json_object(&out)?;
    let keys: Vec<&str> = o.keys().map(String::as_str).collect();
    expect(keys == REPORT_KEYS, || format!("cusp map keys {keys:?}"))?;
    expect(o["mu_i"] == 4 && o["ae_codim_pair"] == 4, || {
        "cusp map values".into()
    })?;

    let out = run_cli(&[
        "invariants",
        "--weights",
        "3,2",
        "--degrees",
        "3,4",
        "--format",
        "json",
        "--oracle",
    ]);
    expect(out.status.code() == Some(0), || {
        "cusp map with oracle".into()
    })?;
    let o = json_object(&out)?;
    let oracle = o
        .get("oracle")
        .and_then(|v| v.as_object())
        .ok_or("no oracle object")?;
    let shaped = oracle.values().all(|c| {
        c.as_object().is_some_and(|c| {
            c.keys()
                .map(String::as_str)
                .eq(["formula", "oracle", "pass"])
                && c["pass"] == true
        })
    });
    expect(
        o.keys().next_back().map(String::as_str) == Some("oracle") && shaped,
        || "oracle object shape".into(),
    )?;

    let out = run_cli(&[
        "invariants",
        "--weights",
        "2,3,5",
        "--degrees",
        "2,11",
        "--format",
        "json",
    ]);
    expect(out.status.code() == Some(0), || "space curve map exit".into())?;
    let o = json_object(&out)?;
    expect(o["mu_i"] == 6 && o["ae_codim_pair"] == 6, || {
        "space curve map values".into()
    })?;
    let table = run_cli(&["invariants", "--weights", "2,3,5", "--degrees", "2,11"]);
    expect(table.status.code() == Some(0), || {
        "space curve map table exit".into()
    })?;

    let out = run_cli(&["invariants", "--weights", "2,3", "--degrees", "2,4"]);
    let stderr = String::from_utf8_lossy(&out.stderr);
    expect(
        out.status.code() == Some(2) && stderr.contains("NotDegreeOne"),
        || format!("non-degree-one map exit {:?}, stderr {stderr:?}", out.status.code()),
    )?;

    for format in ["json", "csv"] {
        let run = |p: &str| {
            run_cli(&[
                "sweep",
                "--max-weight",
                "7",
                "--max-degree",
                "14",
                "--format",
                format,
                "--parallelism",
                p,
            ])
        };
        let (one, eight) = (run("1"), run("8"));
        expect(one.status.success() && eight.status.success(), || {
            format!("{format} sweep exit")
        })?;
        expect(!one.stdout.is_empty() && one.stdout == eight.stdout, || {
            format!("{format} sweep output differs between 1 and 8 workers")
        })?;
    }
    Ok("exit codes 0/0/2, documented JSON keys, sweep byte-identical for 1 and 8 workers".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("cusp to (3,4) golden values", golden_cusp_map),
        ("(2,3,5) to (2,11) golden values", golden_space_curve_map),
        ("exhaustive theorem sweep", theorem_sweep),
        ("formula-vs-oracle equivalence", oracle_equivalence),
        ("semigroup structural suite", semigroup_structure),
        ("degenerate cases", degenerate_cases),
        ("cli contract", cli_contract),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "{}/{} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
