//! Acceptance gate. Runs every criterion, prints one PASS/FAIL line each,
//! and exits non-zero if any fails.

use std::collections::BTreeMap;
use std::process::Command;
use std::time::{Duration, Instant};

use codon_gas::codon_model::{builtin_standard_code, parse_table, serialize_table, Codon, STANDARD_TABLE};
use codon_gas::combinatorics::{
    arrangements, canonicalize, enumerate_multisets, multiset_count, total_class_size, Alphabet, CountParams,
};
use codon_gas::grover_sim::{solve_n, success_probability, GroverRun};
use codon_gas::physics_estimates::{kinetic_energy, momentum_uncertainty, scale_comparison, PhysicalParams};
use codon_gas::symmetry_analysis::{multiset_invariance_violation, partition_classes, prefix_significance, synthetic};
use num_bigint::BigUint;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within_budget(started: Instant, budget: Duration) -> Result<Duration, String> {
    let elapsed = started.elapsed();
    ensure(elapsed < budget, || format!("took {elapsed:?}, budget {budget:?}"))?;
    Ok(elapsed)
}

fn counting_exactness() -> Check {
    let t = Instant::now();
    ensure(arrangements(CountParams::CODON) == BigUint::from(64u32), || "4^3 != 64".into())?;
    ensure(multiset_count(CountParams::CODON).map_err(|e| e.to_string())? == BigUint::from(20u32), || {
        "C(6,3) != 20".into()
    })?;
    for k in 1..=6 {
        for r in 0..=6 {
            let p = CountParams::new(k, r);
            let classes = enumerate_multisets(p).map_err(|e| e.to_string())?;
            let formula = multiset_count(p).map_err(|e| e.to_string())?;
            ensure(BigUint::from(classes.len()) == formula, || format!("k={k} r={r}: enumeration length"))?;
            ensure(total_class_size(&classes) == arrangements(p), || format!("k={k} r={r}: partition identity"))?;
        }
    }
    let elapsed = within_budget(t, Duration::from_secs(1))?;
    Ok(format!("64 and 20 exact; 49 grid points agree ({elapsed:?})"))
}

fn class_structure() -> Check {
    let t = Instant::now();
    let report = partition_classes(&builtin_standard_code());
    ensure(report.per_class.len() == 20, || format!("{} classes", report.per_class.len()))?;
    let expected = BTreeMap::from([(1, 4), (3, 12), (6, 4)]);
    ensure(report.size_profile == expected, || format!("profile {:?}", report.size_profile))?;
    let mut seen = [0u32; 64];
    for class in &report.per_class {
        for codon in &class.codons {
            seen[codon.index()] += 1;
        }
    }
    ensure(seen.iter().all(|&n| n == 1), || "a codon is missing or repeated".into())?;
    let elapsed = within_budget(t, Duration::from_secs(1))?;
    Ok(format!("20 classes, 4x1 12x3 4x6, 64 codons once each ({elapsed:?})"))
}

fn standard_code_facts() -> Check {
    // Oracle: the embedded table text, read column by column here.
    let rows: BTreeMap<&str, Vec<char>> = STANDARD_TABLE
        .lines()
        .filter_map(|l| l.split_once('='))
        .map(|(k, v)| (k.trim(), v.trim().chars().collect()))
        .collect();
    let oracle = |word: &str| -> char {
        let dna: Vec<char> = word.chars().map(|c| if c == 'U' { 'T' } else { c }).collect();
        (0..64)
            .find(|&i| rows["Base1"][i] == dna[0] && rows["Base2"][i] == dna[1] && rows["Base3"][i] == dna[2])
            .map(|i| rows["AAs"][i])
            .expect("every codon has a column")
    };
    let stops = rows["AAs"].iter().filter(|&&c| c == '*').count();
    let mut aminos: Vec<char> = rows["AAs"].iter().copied().filter(|&c| c != '*').collect();
    aminos.sort();
    aminos.dedup();

    let code = builtin_standard_code();
    ensure(code.sense_codon_count() == 61 && 64 - stops == 61, || format!("sense {}", code.sense_codon_count()))?;
    let stop_words: Vec<String> = code.stop_codons().iter().map(|c| c.to_string()).collect();
    ensure(stop_words == ["UAA", "UAG", "UGA"] && stops == 3, || format!("stops {stop_words:?}"))?;
    ensure(code.amino_image().len() == 20 && aminos.len() == 20, || format!("{} amino acids", code.amino_image().len()))?;
    for codon in Codon::all() {
        let word = codon.to_string();
        ensure(code.translate(codon).symbol() == oracle(&word), || format!("{word} disagrees with table"))?;
    }

    let prefix = prefix_significance(&code);
    let gg = prefix.per_prefix.iter().find(|p| p.prefix == "GG").ok_or("no GG prefix")?;
    let gg_oracle: Vec<char> = ["GGU", "GGC", "GGA", "GGG"].iter().map(|w| oracle(w)).collect();
    ensure(gg.degenerate && gg_oracle.iter().all(|&c| c == 'G'), || "GG not third-base degenerate".into())?;

    let report = partition_classes(&code);
    let rna = Alphabet::rna();
    let agu = report
        .per_class
        .iter()
        .find(|c| c.class.canonical_word(&rna).as_deref() == Ok("AGU"))
        .ok_or("no AGU class")?;
    let mut got: Vec<char> = agu.products.iter().map(|a| a.symbol()).collect();
    got.sort();
    let mut want = vec!['M', 'S', '*', '*', 'D', 'V'];
    want.sort();
    let mut from_oracle: Vec<char> = ["AUG", "AGU", "UAG", "UGA", "GAU", "GUA"].iter().map(|w| oracle(w)).collect();
    from_oracle.sort();
    ensure(got == want && from_oracle == want, || format!("AGU products {got:?}"))?;
    ensure(!agu.coherent, || "AGU class reported coherent".into())?;
    Ok("61 sense, 3 stops, 20 amino acids; GG degenerate; AGU -> {M,S,*,*,D,V} incoherent".into())
}

fn grover_numerics() -> Check {
    let t = Instant::now();
    let n3 = solve_n(3).map_err(|e| e.to_string())?;
    ensure((n3 - 20.19).abs() <= 0.05, || format!("solve_n(3) = {n3}"))?;
    let n1 = solve_n(1).map_err(|e| e.to_string())?;
    ensure((n1 - 4.0).abs() <= 1e-9, || format!("solve_n(1) = {n1}"))?;
    let mut worst_gap = 0.0f64;
    let mut worst_drift = 0.0f64;
    for n in 2..=64u64 {
        let mut run = GroverRun::new(n, n - 1).map_err(|e| e.to_string())?;
        for q in 0..=10u64 {
            if q > 0 {
                let before = run.norm();
                run.step();
                let drift = (run.norm() - before).abs();
                worst_drift = worst_drift.max(drift);
                ensure(drift <= 1e-12, || format!("n={n} q={q}: norm drift {drift:e}"))?;
            }
            let closed = success_probability(n, q).map_err(|e| e.to_string())?;
            let gap = (run.marked_probability() - closed).abs();
            worst_gap = worst_gap.max(gap);
            ensure(gap <= 1e-10, || format!("n={n} q={q}: |sim - closed| = {gap:e}"))?;
        }
    }
    let elapsed = within_budget(t, Duration::from_secs(10))?;
    Ok(format!(
        "solve_n(3) = {n3:.4}, solve_n(1) = {n1}; max gap {worst_gap:.1e}, max drift {worst_drift:.1e} ({elapsed:?})"
    ))
}

fn physics_estimates() -> Check {
    let t = Instant::now();
    let p = PhysicalParams { hbar: 1.05e-27, delta_x: 1.7e-8, mass: 1.67e-24, hbond_energy: 7e-14 };
    let dp = momentum_uncertainty(&p).map_err(|e| e.to_string())?;
    ensure(((dp - 6.2e-20) / 6.2e-20).abs() <= 0.02, || format!("dp = {dp:e}"))?;
    let de = kinetic_energy(dp, p.mass).map_err(|e| e.to_string())?;
    ensure(((de - 1.2e-15) / 1.2e-15).abs() <= 0.05, || format!("dE = {de:e}"))?;
    let cmp = scale_comparison(&p, 3.0).map_err(|e| e.to_string())?;
    ensure(cmp.energy_ratio == 1.0 / 9.0, || format!("ratio {}", cmp.energy_ratio))?;
    let elapsed = within_budget(t, Duration::from_secs(1))?;
    Ok(format!("dp = {dp:.4e}, dE = {de:.4e}, ratio at x3 = 1/9 ({elapsed:?})"))
}

fn property_suites() -> Check {
    let t = Instant::now();
    let rna = Alphabet::rna();
    const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    for codon in Codon::all() {
        let letters: Vec<char> = codon.to_string().chars().collect();
        let class = canonicalize(&codon.to_string(), &rna).map_err(|e| e.to_string())?;
        for perm in PERMS {
            let w: String = perm.iter().map(|&i| letters[i]).collect();
            ensure(canonicalize(&w, &rna).as_ref() == Ok(&class), || format!("{w} vs {codon}"))?;
        }
    }

    let standard = builtin_standard_code();
    ensure(parse_table(&serialize_table(&standard)).as_ref() == Ok(&standard), || "standard round trip".into())?;
    for seed in 0..100 {
        let code = synthetic::random_code(seed);
        ensure(parse_table(&serialize_table(&code)).as_ref() == Ok(&code), || format!("seed {seed} round trip"))?;
    }

    let mut invariant = 0;
    for seed in 0..100 {
        let code = synthetic::mixed_code(seed);
        let zero = multiset_invariance_violation(&code).incoherence_pairs == 0;
        let coherent = partition_classes(&code).per_class.iter().all(|c| c.coherent);
        ensure(zero == coherent, || format!("seed {seed}: violations==0 is {zero}, coherent is {coherent}"))?;
        invariant += zero as usize;
    }
    let elapsed = within_budget(t, Duration::from_secs(10))?;
    Ok(format!("384 permutations, 101 round trips, 100 codes ({invariant} invariant) ({elapsed:?})"))
}

fn deterministic_reports() -> Check {
    let bin = env!("CARGO_BIN_EXE_codon-gas");
    let mut outputs = Vec::new();
    for format in ["json", "text"] {
        let runs: Vec<Vec<u8>> = (0..2)
            .map(|_| {
                Command::new(bin)
                    .args(["analyze", "--builtin", "standard", "--format", format])
                    .output()
                    .map_err(|e| e.to_string())
                    .and_then(|o| if o.status.success() { Ok(o.stdout) } else { Err(format!("exit {}", o.status)) })
            })
            .collect::<Result<_, _>>()?;
        ensure(runs[0] == runs[1], || format!("{format} reports differ between runs"))?;
        outputs.push(runs[0].clone());
    }
    let json: serde_json::Value = serde_json::from_slice(&outputs[0]).map_err(|e| e.to_string())?;
    let s = &json["symmetry"];
    let v = &json["violations"];
    ensure(s["bijective_20_to_20"] == false, || "standard code reported bijective".into())?;
    Ok(format!(
        "byte-identical; coherent classes {}/20, incoherent pairs {}/{} ({} / {} excluding stop), 20->20 bijective: {}",
        s["coherent_count"], v["incoherence_pairs"], v["same_class_pairs"], v["incoherence_pairs_excluding_stop"],
        v["same_class_pairs_excluding_stop"], s["bijective_20_to_20"]
    ))
}

fn main() {
    let criteria: [(&str, fn() -> Check); 7] = [
        ("AC1 counting exactness", counting_exactness),
        ("AC2 class structure of the genetic code", class_structure),
        ("AC3 standard-code facts", standard_code_facts),
        ("AC4 Grover numerics", grover_numerics),
        ("AC5 physics estimates", physics_estimates),
        ("AC6 property suites", property_suites),
        ("AC7 deterministic symmetry reports", deterministic_reports),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}: {why}");
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
