//! Acceptance suite: one pass/fail line per criterion.

use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use punctual::artinian::universal_family_multiplicity;
use punctual::corpus;
use punctual::parse::parse_ideal;
use punctual::report::{Value, VerificationReport};
use punctual::staircase::{b2_bound, corners, is_triangular, optimal_witness, partitions_of, Partition};
use punctual::verify::{
    analyze_ideal, partition_invariants, random_ideal_sample, semicontinuity_check, verify_lemma_b2, verify_theorem1,
    verify_theorem2, SamplerConfig,
};
use punctual::{buchberger, Field, MonomialOrder, OrderKind, VarPrecedence};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check, Duration);

const QQ: Field = Field::Rationals;
const PRIMES: [u32; 3] = [2, 101, 32003];

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn small_partitions() -> Vec<Partition> {
    (1..=10).flat_map(partitions_of).collect()
}

/// Pairs through the origin plus triples without linear terms, per prime.
fn sample_configs() -> Vec<SamplerConfig> {
    PRIMES
        .iter()
        .enumerate()
        .flat_map(|(i, &p)| {
            let pairs = SamplerConfig::new(p, 3, 100, 1000 + i as u64);
            let triples = SamplerConfig {
                generators: 3,
                min_degree: 2,
                ..SamplerConfig::new(p, 3, 100, 2000 + i as u64)
            };
            [pairs, triples]
        })
        .collect()
}

fn samples() -> Result<Vec<VerificationReport>, String> {
    sample_configs()
        .iter()
        .map(|cfg| random_ideal_sample(cfg).map_err(|e| format!("{cfg}: {e}")))
        .collect()
}

fn criterion_1() -> Check {
    let parts = small_partitions();
    ensure(parts.len() == 138, || format!("expected 138 partitions of 1..=10, found {}", parts.len()))?;
    for lambda in &parts {
        let inv = partition_invariants(lambda).map_err(|e| e.to_string())?;
        ensure(inv.socle + 1 == inv.e, || format!("{lambda}: socle {} vs e {}", inv.socle, inv.e))?;
    }
    ensure(corpus::LOCAL.len() >= 10, || "corpus too small".into())?;
    let mut components = 0;
    for entry in corpus::all() {
        let r = verify_lemma_b2(entry.ideal, QQ, MonomialOrder::default()).map_err(|e| e.to_string())?;
        ensure(r.passed(), || format!("corpus {}: {}", entry.name, r.to_text()))?;
        components += r.rows.len();
    }
    let mut sampled = 0;
    for r in samples()? {
        ensure(r.passed(), || format!("sample {} failed", r.input))?;
        ensure(r.summary["socle_passes"] == r.summary["requested"], || format!("{}: short", r.input))?;
        sampled += r.rows.len();
    }
    ensure(sampled >= 500, || format!("only {sampled} random ideals"))?;
    Ok(format!(
        "{} monomial ideals, {} corpus components, {sampled} random ideals over F_2, F_101, F_32003",
        parts.len(),
        components
    ))
}

fn criterion_2() -> Check {
    let mut witnesses = Vec::new();
    for n in 1..=30 {
        let r = verify_theorem2(n, 10).map_err(|e| e.to_string())?;
        ensure(r.passed(), || format!("n={n}: {:?}", r.conditions))?;
        let exhaustive = partitions_of(n).map(|l| l.distinct_parts()).max().unwrap();
        ensure(exhaustive == b2_bound(n) as usize, || format!("n={n}: max {exhaustive}"))?;
        if is_triangular(n) {
            let w = optimal_witness(b2_bound(n)).map_err(|e| e.to_string())?;
            ensure(w.size() == n && corners(&w).b2() == b2_bound(n) as usize, || format!("witness {w}"))?;
            witnesses.push(w.to_string());
        }
    }
    Ok(format!("max b2 = bound for n in 1..=30; witnesses {}", witnesses.join(" ")))
}

fn criterion_3() -> Check {
    let mut checked = 0usize;
    for n in 1..=30u32 {
        for lambda in partitions_of(n) {
            let mu = universal_family_multiplicity(corners(&lambda).b2()).map_err(|e| e.to_string())?;
            ensure(mu <= n as u64, || format!("{lambda}: mu {mu} > {n}"))?;
            checked += 1;
        }
    }
    for entry in corpus::all() {
        let r = verify_theorem1(entry.ideal, QQ, MonomialOrder::default()).map_err(|e| e.to_string())?;
        ensure(r.passed(), || format!("corpus {}", entry.name))?;
        checked += r.rows.len();
    }
    for r in samples()? {
        ensure(r.summary["multiplicity_passes"] == r.summary["accepted"], || r.input.clone())?;
        checked += r.rows.len();
    }
    let a = analyze_ideal("y, x^5", QQ, MonomialOrder::default()).map_err(|e| e.to_string())?;
    let c = &a.components[0];
    ensure(c.mu == 1 && c.local_length == 5, || format!("(y, x^5): mu {} n_p {}", c.mu, c.local_length))?;
    Ok(format!("mu <= n on {checked} cases; strict instance (y, x^5): mu 1 < 5"))
}

fn criterion_4() -> Check {
    let orders = MonomialOrder::all();
    let mut pairs = 0;
    let mut strict = 0;
    for entry in corpus::LOCAL {
        let r = semicontinuity_check(entry.ideal, QQ, &orders).map_err(|e| format!("{}: {e}", entry.name))?;
        ensure(r.passed(), || format!("{}: {}", entry.name, r.to_text()))?;
        pairs += r.rows.len();
        strict += r.rows.iter().filter(|row| row.values["relation"] == Value::from("strict")).count();
    }
    let drl = MonomialOrder::new(OrderKind::DegRevLex, VarPrecedence::XY);
    let r = semicontinuity_check("y - x^2, x^3", QQ, &[drl]).map_err(|e| e.to_string())?;
    let row = &r.rows[0];
    ensure(
        row.values["b2"] == Value::from(1) && row.values["b2_in"] == Value::from(2),
        || format!("(y - x^2, x^3) degrevlex: {:?}", row.values),
    )?;
    Ok(format!("{pairs} ideal/order pairs, {strict} strict; (y - x^2, x^3) degrevlex x>y gives 2 > 1"))
}

fn criterion_5() -> Check {
    for lambda in small_partitions() {
        let inv = partition_invariants(&lambda).map_err(|e| e.to_string())?;
        let c = corners(&lambda);
        ensure((inv.e, inv.socle) == (c.e(), c.b2()), || format!("{lambda}: engine {inv:?} corners {c:?}"))?;
        ensure(inv.colength == lambda.size() as usize, || format!("{lambda}: colength {}", inv.colength))?;
    }
    let mut ideals: Vec<(String, Field)> = corpus::all().map(|e| (e.ideal.to_string(), QQ)).collect();
    for r in samples()? {
        let p: u32 = r.input["Fp:".len()..].split(' ').next().unwrap().parse().unwrap();
        for row in r.rows.iter().take(25) {
            if let Value::Text(t) = &row.values["ideal"] {
                ideals.push((t.clone(), Field::Prime(p)));
            }
        }
    }
    let mut bases = 0;
    for (text, field) in &ideals {
        let gens = parse_ideal(text, *field).map_err(|e| e.to_string())?;
        let mut colengths = Vec::new();
        for ord in MonomialOrder::all() {
            let gb = buchberger(&gens, ord);
            ensure(gb.certify(), || format!("{text} {ord}: certificate failed"))?;
            colengths.push(punctual::artinian::quotient_basis(&gb).map_err(|e| e.to_string())?.dim());
            bases += 1;
        }
        ensure(colengths.windows(2).all(|w| w[0] == w[1]), || format!("{text}: colengths {colengths:?}"))?;
    }
    Ok(format!(
        "138 staircases match the engine; {} ideals x 6 orders, {bases} certified bases",
        ideals.len()
    ))
}

fn criterion_6() -> Check {
    let parts: Vec<Partition> = partitions_of(2).collect();
    ensure(parts.len() == 2, || format!("{} partitions of 2", parts.len()))?;
    for lambda in &parts {
        let b2 = corners(lambda).b2();
        let inv = partition_invariants(lambda).map_err(|e| e.to_string())?;
        let mu = universal_family_multiplicity(b2).map_err(|e| e.to_string())?;
        ensure(b2 == 1 && inv.socle == 1 && mu == 1, || format!("{lambda}: b2 {b2} mu {mu}"))?;
    }
    Ok("(2) and (1,1) both have b2 = 1 and mu = 1".into())
}

fn run_cli(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_punctual"))
        .args(args)
        .env_remove("PUNCTUAL_FIELD")
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.success(), || format!("{args:?} exited {:?}", out.status.code()))?;
    Ok(out.stdout)
}

fn criterion_7() -> Check {
    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    for (ideal, file) in [
        ("x^2, x*y, y^2", "analyze_m_squared.json"),
        ("y, x^5", "analyze_curvilinear.json"),
        ("x, y", "analyze_point.json"),
    ] {
        let want = std::fs::read(golden.join(file)).map_err(|e| e.to_string())?;
        let got = run_cli(&["analyze", "--ideal", ideal, "--format", "json"])?;
        ensure(got == want, || format!("{file} differs"))?;
    }
    let runs: [&[&str]; 3] = [
        &["sample", "--field", "Fp:101", "--degree", "3", "--count", "100", "--seed", "42", "--format", "json"],
        &["sample", "--field", "Fp:2", "--generators", "3", "--min-degree", "2", "--count", "50", "--seed", "7", "--format", "json"],
        &["sweep", "--n", "1..12", "--format", "json"],
    ];
    for args in runs {
        let a = run_cli(args)?;
        let b = run_cli(args)?;
        ensure(a == b, || format!("{args:?} is not reproducible"))?;
        if args[0] == "sample" {
            let text = String::from_utf8(a).map_err(|e| e.to_string())?;
            let reports: Vec<VerificationReport> = serde_json::from_str(&text).map_err(|e| e.to_string())?;
            let again = serde_json::to_string_pretty(&reports).map_err(|e| e.to_string())? + "\n";
            ensure(again == text, || "JSON does not round-trip".into())?;
        }
    }
    Ok("3 golden files match; sample and sweep reruns are byte-identical".into())
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("lemma b2: socle = e - 1", criterion_1, Duration::from_secs(60)),
        ("partition bound and its witnesses", criterion_2, Duration::from_secs(60)),
        ("mu <= n with a strict instance", criterion_3, Duration::from_secs(60)),
        ("semicontinuity under degeneration", criterion_4, Duration::from_secs(10)),
        ("engine self-consistency", criterion_5, Duration::from_secs(60)),
        ("length two is smooth", criterion_6, Duration::from_secs(10)),
        ("deterministic CLI output", criterion_7, Duration::from_secs(60)),
    ];
    let mut failed = 0;
    for (i, (name, check, budget)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let result = result.and_then(|detail| {
            if elapsed <= budget {
                Ok(detail)
            } else {
                Err(format!("took {elapsed:.1?}, budget {budget:?}"))
            }
        });
        match result {
            Ok(detail) => println!("criterion {} PASS  {name}: {detail} [{elapsed:.2?}]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} FAIL  {name}: {why} [{elapsed:.2?}]", i + 1);
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
