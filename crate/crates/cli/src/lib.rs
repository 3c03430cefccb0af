//! Command implementations behind the `codon-gas` binary.
//!
//! [`run`] turns parsed arguments into a fully rendered report, or a
//! [`Failure`] carrying the process exit code. Nothing is written until the
//! whole report exists.

pub mod args;
pub mod config;
pub mod numbers;
pub mod report;

use std::fmt;

use codon_gas::codon_model::{builtin_standard_code, parse_table, GeneticCode};
use codon_gas::combinatorics::{self, Alphabet, CountParams, DEFAULT_ENUMERATION_CAP};
use codon_gas::grover_sim::{self, DEFAULT_SIMULATION_CAP};
use codon_gas::physics_estimates::{self, PhysicalParams};
use codon_gas::symmetry_analysis::{self, synthetic};
use codon_gas::Error;

use args::{AnalyzeArgs, Cli, Command, CountArgs, EnergyArgs, Format, GroverCommand, SynthArgs, SynthKind};
use config::Config;
use report::*;

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_CAPACITY: i32 = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub exit_code: i32,
    pub message: String,
}

impl Failure {
    pub fn invalid(message: impl Into<String>) -> Self {
        Self { exit_code: EXIT_INVALID, message: message.into() }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let exit_code = match e {
            Error::CapacityExceeded { .. } => EXIT_CAPACITY,
            _ => EXIT_INVALID,
        };
        Self { exit_code, message: e.to_string() }
    }
}

/// Loads the config file named on the command line, if any, and runs the command.
pub fn run(cli: &Cli) -> Result<String, Failure> {
    let config = match &cli.config {
        Some(path) => Config::load(path).map_err(Failure::invalid)?,
        None => Config::default(),
    };
    run_with_config(cli, &config)
}

pub fn run_with_config(cli: &Cli, config: &Config) -> Result<String, Failure> {
    let format = cli.format.or(config.format).unwrap_or(Format::Text);
    let report = build_report(&cli.command, config)?;
    Ok(report.render(format))
}

pub fn build_report(command: &Command, config: &Config) -> Result<Report, Failure> {
    Ok(match command {
        Command::Count(a) => Report::Count(count(a, config)?),
        Command::Analyze(a) => Report::Analyze(analyze(&load_code(a)?)),
        Command::Grover(g) => grover(g, config)?,
        Command::Energy(a) => Report::Energy(energy(a, config)?),
        Command::Synth(a) => Report::Synth(synth(a, config)),
    })
}

fn count(a: &CountArgs, config: &Config) -> Result<CountReport, Failure> {
    let alphabet = match (&a.alphabet, a.k) {
        (Some(letters), k) => {
            let alphabet = Alphabet::new(letters.chars())?;
            if let Some(k) = k {
                if k as usize != alphabet.len() {
                    return Err(Failure::invalid(format!(
                        "--k {k} does not match the {}-letter alphabet {letters:?}",
                        alphabet.len()
                    )));
                }
            }
            Some(alphabet)
        }
        (None, Some(4)) => Some(Alphabet::rna()),
        (None, Some(k)) => Alphabet::latin(k).ok(),
        (None, None) => return Err(Failure::invalid("either --k or --alphabet is required")),
    };
    let k = a.k.unwrap_or_else(|| alphabet.as_ref().map_or(0, |al| al.len() as u32));
    let p = CountParams::new(k, a.r);

    let arrangements = combinatorics::arrangements(p);
    let multiset_count = combinatorics::multiset_count(p)?;
    let mut report = CountReport {
        command: "count",
        k,
        r: a.r,
        alphabet: alphabet.as_ref().map(|al| al.letters().iter().collect()),
        arrangements: arrangements.to_string(),
        multiset_count: multiset_count.to_string(),
        enumerated: false,
        classes: None,
        class_size_total: None,
        partition_identity_holds: None,
    };
    if a.counts_only {
        return Ok(report);
    }

    let cap = a.cap.or(config.count.cap).unwrap_or(DEFAULT_ENUMERATION_CAP);
    let classes = combinatorics::enumerate_multisets_capped(p, cap).map_err(|e| {
        let mut failure = Failure::from(e);
        if failure.exit_code == EXIT_CAPACITY {
            failure.message.push_str("; use --counts-only or raise --cap");
        }
        failure
    })?;
    let total = combinatorics::total_class_size(&classes);
    report.classes = Some(
        classes
            .iter()
            .map(|c| ClassRow {
                class: match &alphabet {
                    Some(al) => c.canonical_word(al).expect("alphabet has k letters"),
                    None => c.to_string(),
                },
                counts: c.counts().to_vec(),
                class_size: combinatorics::class_size(c).to_string(),
            })
            .collect(),
    );
    report.enumerated = true;
    report.partition_identity_holds = Some(total == arrangements);
    report.class_size_total = Some(total.to_string());
    Ok(report)
}

/// Reads a table file or resolves a built-in code name.
pub fn load_code(a: &AnalyzeArgs) -> Result<GeneticCode, Failure> {
    match (&a.source.table, &a.source.builtin) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::invalid(format!("{}: {e}", path.display())))?;
            parse_table(&text).map_err(|e| Failure::invalid(format!("{}: {e}", path.display())))
        }
        (None, Some(name)) => match name.to_ascii_lowercase().as_str() {
            "standard" | "1" => Ok(builtin_standard_code()),
            other => Err(Failure::invalid(format!("unknown built-in code {other:?}; available: standard (1)"))),
        },
        (None, None) => Err(Failure::invalid("one of --table or --builtin is required")),
    }
}

pub fn analyze(code: &GeneticCode) -> AnalyzeReport {
    AnalyzeReport {
        command: "analyze",
        code: CodeSummary::of(code),
        symmetry: symmetry_analysis::partition_classes(code),
        prefix: symmetry_analysis::prefix_significance(code),
        violations: symmetry_analysis::multiset_invariance_violation(code).into(),
    }
}

fn grover(g: &GroverCommand, config: &Config) -> Result<Report, Failure> {
    Ok(match *g {
        GroverCommand::SolveN { q } => {
            let n = grover_sim::solve_n(q)?;
            let nearest_n = n.round() as u64;
            Report::SolveN(SolveNReport {
                command: "grover-solve-n",
                q,
                n,
                nearest_n,
                success_probability_at_nearest_n: grover_sim::success_probability(nearest_n, q as u64).ok(),
            })
        }
        GroverCommand::SolveQ { n } => {
            let q = grover_sim::solve_q(n)?;
            let nearest_q = q.round() as u64;
            let integral = n.fract() == 0.0 && n >= 2.0;
            Report::SolveQ(SolveQReport {
                command: "grover-solve-q",
                n,
                q,
                nearest_q,
                success_probability_at_nearest_q: if integral {
                    grover_sim::success_probability(n as u64, nearest_q).ok()
                } else {
                    None
                },
            })
        }
        GroverCommand::Simulate { n, q, marked, max_n } => {
            let marked = marked.or(config.grover.marked).unwrap_or(0);
            let cap = max_n.or(config.grover.max_n).unwrap_or(DEFAULT_SIMULATION_CAP);
            let run = grover_sim::simulate_capped(n, q, marked, cap)?;
            let closed = grover_sim::success_probability(n, q)?;
            let p = run.marked_probability();
            Report::Simulate(SimulateReport {
                command: "grover-simulate",
                n,
                q,
                marked,
                final_marked_probability: p,
                closed_form_probability: closed,
                abs_difference: (p - closed).abs(),
                final_norm: run.norm(),
                max_norm_drift: run.max_norm_drift(),
                trace: run.trace().iter().map(TraceRow::from).collect(),
            })
        }
    })
}

fn energy(a: &EnergyArgs, config: &Config) -> Result<EnergyReport, Failure> {
    let defaults = PhysicalParams::default();
    let c = &config.energy;
    let params = PhysicalParams {
        hbar: a.hbar.or(c.hbar).unwrap_or(defaults.hbar),
        delta_x: a.delta_x.or(c.delta_x).unwrap_or(defaults.delta_x),
        mass: a.mass.or(c.mass).unwrap_or(defaults.mass),
        hbond_energy: a.hbond.or(c.hbond).unwrap_or(defaults.hbond_energy),
    };
    let scale = a.scale.or(c.scale).unwrap_or(3.0);
    let cmp = physics_estimates::scale_comparison(&params, scale)?;
    Ok(EnergyReport {
        command: "energy",
        params: EnergyParams {
            hbar: params.hbar,
            delta_x: params.delta_x,
            mass: params.mass,
            hbond_energy: params.hbond_energy,
        },
        scale_factor: scale,
        momentum: cmp.momentum,
        energy: cmp.energy,
        energy_ev: physics_estimates::erg_to_ev(cmp.energy),
        energy_joule: physics_estimates::erg_to_joule(cmp.energy),
        scaled_delta_x: params.delta_x * scale,
        scaled_momentum: cmp.scaled_momentum,
        scaled_energy: cmp.scaled_energy,
        scaled_energy_ev: physics_estimates::erg_to_ev(cmp.scaled_energy),
        energy_ratio: cmp.energy_ratio,
        energy_to_hbond: cmp.energy_to_hbond,
        scaled_energy_to_hbond: cmp.scaled_energy_to_hbond,
        hbond_energy_ev: physics_estimates::erg_to_ev(params.hbond_energy),
    })
}

fn synth(a: &SynthArgs, config: &Config) -> SynthReport {
    let seed = a.seed.or(config.synth.seed).unwrap_or(0);
    let kind = a.kind.or(config.synth.kind).unwrap_or(SynthKind::Random);
    let code = match kind {
        SynthKind::Random => synthetic::random_code(seed),
        SynthKind::Invariant => synthetic::multiset_invariant_code(seed),
        SynthKind::Bijective => synthetic::class_bijective_code(seed),
        SynthKind::Prefix => synthetic::third_base_degenerate_code(seed),
        SynthKind::Mixed => synthetic::mixed_code(seed),
    };
    SynthReport::new(kind, seed, &code)
}
