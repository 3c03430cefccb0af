//! Report types and their text, JSON and CSV renderings.
//!
//! Field names are stable; `docs/reports.md` and `docs/schemas/` describe them.
//! Text reports print scalar fields as `dotted.key: value` lines using the JSON
//! paths, followed by aligned tables.

use codon_gas::codon_model::{serialize_table, Codon, GeneticCode};
use codon_gas::grover_sim::IterationRecord;
use codon_gas::symmetry_analysis::{PrefixReport, SymmetryReport, ViolationMetrics};
use serde::Serialize;

use crate::args::{Format, SynthKind};
use crate::numbers::{self, fmt};

#[derive(Debug, Serialize)]
#[serde(untagged)]
pub enum Report {
    Count(CountReport),
    Analyze(AnalyzeReport),
    SolveN(SolveNReport),
    SolveQ(SolveQReport),
    Simulate(SimulateReport),
    Energy(EnergyReport),
    Synth(SynthReport),
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
                s.push('\n');
                s
            }
            Format::Text => self.text(),
            Format::Csv => self.csv(),
        }
    }

    fn text(&self) -> String {
        match self {
            Report::Count(r) => r.text(),
            Report::Analyze(r) => r.text(),
            Report::SolveN(r) => r.text(),
            Report::SolveQ(r) => r.text(),
            Report::Simulate(r) => r.text(),
            Report::Energy(r) => r.text(),
            Report::Synth(r) => r.table.clone(),
        }
    }

    fn csv(&self) -> String {
        let (header, rows): (Vec<&str>, Vec<Vec<String>>) = match self {
            Report::Count(r) => (
                vec!["class", "counts", "class_size"],
                r.classes
                    .iter()
                    .flatten()
                    .map(|c| vec![c.class.clone(), join(&c.counts), c.class_size.clone()])
                    .collect(),
            ),
            Report::Analyze(r) => (
                vec!["class", "size", "codons", "products", "coherent", "coherent_excluding_stop"],
                r.symmetry
                    .per_class
                    .iter()
                    .map(|c| {
                        vec![
                            rna_word(c),
                            c.codons.len().to_string(),
                            join(&c.codons),
                            join(&c.products),
                            c.coherent.to_string(),
                            c.coherent_excluding_stop.to_string(),
                        ]
                    })
                    .collect(),
            ),
            Report::SolveN(r) => (vec!["q", "n"], vec![vec![r.q.to_string(), fmt(r.n)]]),
            Report::SolveQ(r) => (vec!["n", "q"], vec![vec![fmt(r.n), fmt(r.q)]]),
            Report::Simulate(r) => (
                vec!["iteration", "marked_probability", "norm"],
                r.trace
                    .iter()
                    .map(|t| vec![t.iteration.to_string(), fmt(t.marked_probability), fmt(t.norm)])
                    .collect(),
            ),
            Report::Energy(r) => (
                vec!["quantity", "value", "unit"],
                r.quantities().into_iter().map(|(k, v, u)| vec![k.to_string(), fmt(v), u.to_string()]).collect(),
            ),
            Report::Synth(r) => (
                vec!["codon", "amino_acid"],
                r.mapping.iter().map(|(c, a)| vec![c.clone(), a.clone()]).collect(),
            ),
        };
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&header).expect("in-memory csv");
        for row in rows {
            w.write_record(&row).expect("in-memory csv");
        }
        String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8 fields")
    }
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn rna_word(c: &codon_gas::symmetry_analysis::ClassReport) -> String {
    c.class.canonical_word(&codon_gas::Alphabet::rna()).expect("codon classes have k = 4")
}

/// `key: value` lines.
#[derive(Default)]
struct Lines(String);

impl Lines {
    fn kv(&mut self, key: &str, value: impl std::fmt::Display) -> &mut Self {
        self.0.push_str(&format!("{key}: {value}\n"));
        self
    }

    fn blank(&mut self) -> &mut Self {
        self.0.push('\n');
        self
    }

    fn table(&mut self, title: &str, header: &[&str], rows: &[Vec<String>]) -> &mut Self {
        let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
        for row in rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let line = |cells: Vec<&str>| {
            let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
            format!("{}\n", padded.join("  ").trim_end())
        };
        self.0.push_str(&format!("[{title}]\n"));
        self.0.push_str(&line(header.to_vec()));
        for row in rows {
            self.0.push_str(&line(row.iter().map(String::as_str).collect()));
        }
        self
    }
}

fn opt<T: std::fmt::Display>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "null".to_string(), ToString::to_string)
}

fn opt_num(v: Option<f64>) -> String {
    v.map_or_else(|| "null".to_string(), fmt)
}

#[derive(Debug, Serialize)]
pub struct ClassRow {
    pub class: String,
    pub counts: Vec<u32>,
    pub class_size: String,
}

/// Big integers are decimal strings.
#[derive(Debug, Serialize)]
pub struct CountReport {
    pub command: &'static str,
    pub k: u32,
    pub r: u32,
    pub alphabet: Option<String>,
    pub arrangements: String,
    pub multiset_count: String,
    pub enumerated: bool,
    pub classes: Option<Vec<ClassRow>>,
    pub class_size_total: Option<String>,
    pub partition_identity_holds: Option<bool>,
}

impl CountReport {
    fn text(&self) -> String {
        let mut out = Lines::default();
        out.kv("command", self.command)
            .kv("k", self.k)
            .kv("r", self.r)
            .kv("alphabet", opt(&self.alphabet))
            .kv("arrangements", &self.arrangements)
            .kv("multiset_count", &self.multiset_count)
            .kv("enumerated", self.enumerated)
            .kv("class_size_total", opt(&self.class_size_total))
            .kv("partition_identity_holds", opt(&self.partition_identity_holds));
        if let Some(classes) = &self.classes {
            let rows: Vec<Vec<String>> =
                classes.iter().map(|c| vec![c.class.clone(), join(&c.counts), c.class_size.clone()]).collect();
            out.blank().table("classes", &["class", "counts", "class_size"], &rows);
        }
        out.0
    }
}

#[derive(Debug, Serialize)]
pub struct CodeSummary {
    pub name: String,
    pub id: Option<u32>,
    pub sense_codons: usize,
    pub stop_codons: Vec<Codon>,
    pub distinct_amino_acids: usize,
}

impl CodeSummary {
    pub fn of(code: &GeneticCode) -> Self {
        Self {
            name: code.name().to_string(),
            id: code.id(),
            sense_codons: code.sense_codon_count(),
            stop_codons: code.stop_codons(),
            distinct_amino_acids: code.amino_image().len(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Violations {
    pub incoherence_pairs: u64,
    pub same_class_pairs: u64,
    #[serde(serialize_with = "numbers::ser")]
    pub fraction: f64,
    pub incoherence_pairs_excluding_stop: u64,
    pub same_class_pairs_excluding_stop: u64,
    #[serde(serialize_with = "numbers::ser")]
    pub fraction_excluding_stop: f64,
    pub multiset_invariant: bool,
}

impl From<ViolationMetrics> for Violations {
    fn from(m: ViolationMetrics) -> Self {
        Self {
            incoherence_pairs: m.incoherence_pairs,
            same_class_pairs: m.same_class_pairs,
            fraction: m.fraction,
            incoherence_pairs_excluding_stop: m.incoherence_pairs_excluding_stop,
            same_class_pairs_excluding_stop: m.same_class_pairs_excluding_stop,
            fraction_excluding_stop: m.fraction_excluding_stop,
            multiset_invariant: m.is_invariant(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct AnalyzeReport {
    pub command: &'static str,
    pub code: CodeSummary,
    pub symmetry: SymmetryReport,
    pub prefix: PrefixReport,
    pub violations: Violations,
}

impl AnalyzeReport {
    fn text(&self) -> String {
        let s = &self.symmetry;
        let p = &self.prefix;
        let v = &self.violations;
        let profile: Vec<String> = s.size_profile.iter().map(|(size, n)| format!("{n}x{size}")).collect();
        let mut out = Lines::default();
        out.kv("command", self.command)
            .kv("code.name", &self.code.name)
            .kv("code.id", opt(&self.code.id))
            .kv("code.sense_codons", self.code.sense_codons)
            .kv("code.stop_codons", join(&self.code.stop_codons))
            .kv("code.distinct_amino_acids", self.code.distinct_amino_acids)
            .kv("symmetry.classes", s.per_class.len())
            .kv("symmetry.size_profile", profile.join(" "))
            .kv("symmetry.coherent_count", s.coherent_count)
            .kv("symmetry.coherent_count_excluding_stop", s.coherent_count_excluding_stop)
            .kv("symmetry.amino_image_size", s.amino_image_size)
            .kv("symmetry.symbol_image_size", s.symbol_image_size)
            .kv("symmetry.bijective_20_to_20", s.bijective_20_to_20)
            .kv("symmetry.bijective_20_to_20_excluding_stop", s.bijective_20_to_20_excluding_stop)
            .kv("symmetry.incoherence_pairs", s.incoherence_pairs)
            .kv("symmetry.incoherence_pairs_excluding_stop", s.incoherence_pairs_excluding_stop)
            .kv("prefix.fully_degenerate_prefix_count", p.fully_degenerate_prefix_count)
            .kv("prefix.fully_degenerate_prefix_count_excluding_stop", p.fully_degenerate_prefix_count_excluding_stop)
            .kv("prefix.distinct_amino_count_actual", p.distinct_amino_count_actual)
            .kv("prefix.degenerate_ceiling", p.degenerate_ceiling)
            .kv("violations.incoherence_pairs", v.incoherence_pairs)
            .kv("violations.same_class_pairs", v.same_class_pairs)
            .kv("violations.fraction", fmt(v.fraction))
            .kv("violations.incoherence_pairs_excluding_stop", v.incoherence_pairs_excluding_stop)
            .kv("violations.same_class_pairs_excluding_stop", v.same_class_pairs_excluding_stop)
            .kv("violations.fraction_excluding_stop", fmt(v.fraction_excluding_stop))
            .kv("violations.multiset_invariant", v.multiset_invariant);

        let class_rows: Vec<Vec<String>> = s
            .per_class
            .iter()
            .map(|c| {
                vec![
                    rna_word(c),
                    c.codons.len().to_string(),
                    join(&c.codons),
                    join(&c.products),
                    c.coherent.to_string(),
                    c.coherent_excluding_stop.to_string(),
                ]
            })
            .collect();
        out.blank().table(
            "classes",
            &["class", "size", "codons", "products", "coherent", "coherent_excluding_stop"],
            &class_rows,
        );

        let prefix_rows: Vec<Vec<String>> = p
            .per_prefix
            .iter()
            .map(|e| {
                let products: Vec<_> = e.products.iter().collect();
                vec![
                    e.prefix.clone(),
                    join(&e.codons),
                    join(&products),
                    e.degenerate.to_string(),
                    e.degenerate_excluding_stop.to_string(),
                ]
            })
            .collect();
        out.blank().table(
            "prefixes",
            &["prefix", "codons", "products", "degenerate", "degenerate_excluding_stop"],
            &prefix_rows,
        );
        out.0
    }
}

#[derive(Debug, Serialize)]
pub struct SolveNReport {
    pub command: &'static str,
    pub q: i64,
    #[serde(serialize_with = "numbers::ser")]
    pub n: f64,
    /// `n` rounded to the nearest integer.
    pub nearest_n: u64,
    /// Closed-form success after `q` iterations on `nearest_n` items; null below 2 items.
    #[serde(serialize_with = "numbers::ser_opt")]
    pub success_probability_at_nearest_n: Option<f64>,
}

impl SolveNReport {
    fn text(&self) -> String {
        let mut out = Lines::default();
        out.kv("command", self.command)
            .kv("q", self.q)
            .kv("n", fmt(self.n))
            .kv("nearest_n", self.nearest_n)
            .kv("success_probability_at_nearest_n", opt_num(self.success_probability_at_nearest_n));
        out.0
    }
}

#[derive(Debug, Serialize)]
pub struct SolveQReport {
    pub command: &'static str,
    #[serde(serialize_with = "numbers::ser")]
    pub n: f64,
    #[serde(serialize_with = "numbers::ser")]
    pub q: f64,
    /// `q` rounded to the nearest integer.
    pub nearest_q: u64,
    /// Closed-form success after `nearest_q` iterations; null unless `n` is an integer >= 2.
    #[serde(serialize_with = "numbers::ser_opt")]
    pub success_probability_at_nearest_q: Option<f64>,
}

impl SolveQReport {
    fn text(&self) -> String {
        let mut out = Lines::default();
        out.kv("command", self.command)
            .kv("n", fmt(self.n))
            .kv("q", fmt(self.q))
            .kv("nearest_q", self.nearest_q)
            .kv("success_probability_at_nearest_q", opt_num(self.success_probability_at_nearest_q));
        out.0
    }
}

#[derive(Debug, Serialize)]
pub struct TraceRow {
    pub iteration: u64,
    #[serde(serialize_with = "numbers::ser")]
    pub marked_probability: f64,
    #[serde(serialize_with = "numbers::ser")]
    pub norm: f64,
}

impl From<&IterationRecord> for TraceRow {
    fn from(r: &IterationRecord) -> Self {
        Self { iteration: r.iteration, marked_probability: r.marked_probability, norm: r.norm }
    }
}

#[derive(Debug, Serialize)]
pub struct SimulateReport {
    pub command: &'static str,
    pub n: u64,
    pub q: u64,
    pub marked: u64,
    #[serde(serialize_with = "numbers::ser")]
    pub final_marked_probability: f64,
    #[serde(serialize_with = "numbers::ser")]
    pub closed_form_probability: f64,
    #[serde(serialize_with = "numbers::ser")]
    pub abs_difference: f64,
    #[serde(serialize_with = "numbers::ser")]
    pub final_norm: f64,
    #[serde(serialize_with = "numbers::ser")]
    pub max_norm_drift: f64,
    pub trace: Vec<TraceRow>,
}

impl SimulateReport {
    fn text(&self) -> String {
        let mut out = Lines::default();
        out.kv("command", self.command)
            .kv("n", self.n)
            .kv("q", self.q)
            .kv("marked", self.marked)
            .kv("final_marked_probability", fmt(self.final_marked_probability))
            .kv("closed_form_probability", fmt(self.closed_form_probability))
            .kv("abs_difference", fmt(self.abs_difference))
            .kv("final_norm", fmt(self.final_norm))
            .kv("max_norm_drift", fmt(self.max_norm_drift));
        let rows: Vec<Vec<String>> = self
            .trace
            .iter()
            .map(|t| vec![t.iteration.to_string(), fmt(t.marked_probability), fmt(t.norm)])
            .collect();
        out.blank().table("trace", &["iteration", "marked_probability", "norm"], &rows);
        out.0
    }
}

#[derive(Debug, Serialize)]
pub struct EnergyParams {
    #[serde(serialize_with = "numbers::ser")]
    pub hbar: f64,
    #[serde(serialize_with = "numbers::ser")]
    pub delta_x: f64,
    #[serde(serialize_with = "numbers::ser")]
    pub mass: f64,
    #[serde(serialize_with = "numbers::ser")]
    pub hbond_energy: f64,
}

/// CGS values, with eV and joule conversions for the energies.
#[derive(Debug, Serialize)]
pub struct EnergyReport {
    pub command: &'static str,
    pub params: EnergyParams,
    #[serde(serialize_with = "numbers::ser")]
    pub scale_factor: f64,
    #[serde(serialize_with = "numbers::ser")]
    pub momentum: f64,
    #[serde(serialize_with = "numbers::ser")]
    pub energy: f64,
    #[serde(serialize_with = "numbers::ser")]
    pub energy_ev: f64,
    #[serde(serialize_with = "numbers::ser")]
    pub energy_joule: f64,
    #[serde(serialize_with = "numbers::ser")]
    pub scaled_delta_x: f64,
    #[serde(serialize_with = "numbers::ser")]
    pub scaled_momentum: f64,
    #[serde(serialize_with = "numbers::ser")]
    pub scaled_energy: f64,
    #[serde(serialize_with = "numbers::ser")]
    pub scaled_energy_ev: f64,
    #[serde(serialize_with = "numbers::ser")]
    pub energy_ratio: f64,
    #[serde(serialize_with = "numbers::ser")]
    pub energy_to_hbond: f64,
    #[serde(serialize_with = "numbers::ser")]
    pub scaled_energy_to_hbond: f64,
    #[serde(serialize_with = "numbers::ser")]
    pub hbond_energy_ev: f64,
}

impl EnergyReport {
    fn quantities(&self) -> Vec<(&'static str, f64, &'static str)> {
        vec![
            ("params.hbar", self.params.hbar, "erg*s"),
            ("params.delta_x", self.params.delta_x, "cm"),
            ("params.mass", self.params.mass, "g"),
            ("params.hbond_energy", self.params.hbond_energy, "erg"),
            ("scale_factor", self.scale_factor, "1"),
            ("momentum", self.momentum, "g*cm/s"),
            ("energy", self.energy, "erg"),
            ("energy_ev", self.energy_ev, "eV"),
            ("energy_joule", self.energy_joule, "J"),
            ("scaled_delta_x", self.scaled_delta_x, "cm"),
            ("scaled_momentum", self.scaled_momentum, "g*cm/s"),
            ("scaled_energy", self.scaled_energy, "erg"),
            ("scaled_energy_ev", self.scaled_energy_ev, "eV"),
            ("energy_ratio", self.energy_ratio, "1"),
            ("energy_to_hbond", self.energy_to_hbond, "1"),
            ("scaled_energy_to_hbond", self.scaled_energy_to_hbond, "1"),
            ("hbond_energy_ev", self.hbond_energy_ev, "eV"),
        ]
    }

    fn text(&self) -> String {
        let mut out = Lines::default();
        out.kv("command", self.command);
        for (key, value, unit) in self.quantities() {
            if unit == "1" {
                out.kv(key, fmt(value));
            } else {
                out.kv(key, format!("{} {unit}", fmt(value)));
            }
        }
        out.0
    }
}

#[derive(Debug, Serialize)]
pub struct SynthReport {
    pub command: &'static str,
    pub kind: SynthKind,
    pub seed: u64,
    pub name: String,
    pub table: String,
    #[serde(skip)]
    pub mapping: Vec<(String, String)>,
}

impl SynthReport {
    pub fn new(kind: SynthKind, seed: u64, code: &GeneticCode) -> Self {
        Self {
            command: "synth",
            kind,
            seed,
            name: code.name().to_string(),
            table: serialize_table(code),
            mapping: Codon::all().map(|c| (c.to_string(), code.translate(c).to_string())).collect(),
        }
    }
}

impl Serialize for SynthKind {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(match self {
            SynthKind::Random => "random",
            SynthKind::Invariant => "invariant",
            SynthKind::Bijective => "bijective",
            SynthKind::Prefix => "prefix",
            SynthKind::Mixed => "mixed",
        })
    }
}
