//! Permutation-class structure of a genetic code.
//!
//! The 64 codons fall into 20 classes under reordering of their bases. A code
//! that only looked at base content would give every codon in a class the same
//! product. These reports measure how far a real table is from that, and how
//! much the third position matters compared with the first two.
//!
//! Every metric comes in two readings: Stop treated as a 21st symbol, and
//! Stop-coding codons left out.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Serialize, Serializer};

use crate::codon_model::{AminoAcid, Codon, GeneticCode, Nucleotide};
use crate::combinatorics::{self, Alphabet, CountParams, MultisetClass};

/// Codons sharing one permutation class, and what the code makes of them.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassReport {
    #[serde(serialize_with = "rna_word")]
    pub class: MultisetClass,
    /// Sorted in canonical `A < C < G < U` order.
    pub codons: Vec<Codon>,
    /// `products[i]` is the translation of `codons[i]`.
    pub products: Vec<AminoAcid>,
    pub coherent: bool,
    /// True when all non-Stop products agree (vacuously when there are none).
    pub coherent_excluding_stop: bool,
}

impl ClassReport {
    /// The shared product of a coherent class.
    pub fn product(&self) -> Option<AminoAcid> {
        self.coherent.then(|| self.products[0])
    }

    /// The shared non-Stop product, when the class is coherent in that reading and has one.
    pub fn product_excluding_stop(&self) -> Option<AminoAcid> {
        if !self.coherent_excluding_stop {
            return None;
        }
        self.products.iter().copied().find(|aa| !aa.is_stop())
    }

    fn incoherent_pairs(&self, skip_stop: bool) -> (u64, u64) {
        let mut tally: BTreeMap<AminoAcid, u64> = BTreeMap::new();
        for &aa in &self.products {
            if !(skip_stop && aa.is_stop()) {
                *tally.entry(aa).or_default() += 1;
            }
        }
        let members: u64 = tally.values().sum();
        let same: u64 = tally.values().map(|&m| pairs(m)).sum();
        (pairs(members) - same, pairs(members))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SymmetryReport {
    pub code_name: String,
    pub per_class: Vec<ClassReport>,
    /// Class size -> number of classes of that size.
    pub size_profile: BTreeMap<usize, usize>,
    pub coherent_count: usize,
    pub coherent_count_excluding_stop: usize,
    /// Distinct amino acids the code produces, Stop excluded.
    pub amino_image_size: usize,
    /// Distinct symbols the code produces, Stop included.
    pub symbol_image_size: usize,
    /// Every class coherent and the 20 class products pairwise distinct.
    pub bijective_20_to_20: bool,
    /// Same, with Stop codons ignored and a non-Stop product required for every class.
    pub bijective_20_to_20_excluding_stop: bool,
    pub incoherence_pairs: u64,
    pub incoherence_pairs_excluding_stop: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ViolationMetrics {
    /// Unordered same-class codon pairs with different products.
    pub incoherence_pairs: u64,
    pub same_class_pairs: u64,
    pub fraction: f64,
    pub incoherence_pairs_excluding_stop: u64,
    pub same_class_pairs_excluding_stop: u64,
    pub fraction_excluding_stop: f64,
}

impl ViolationMetrics {
    pub fn is_invariant(&self) -> bool {
        self.incoherence_pairs == 0
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PrefixEntry {
    pub prefix: String,
    /// The four completions, third base in `A C G U` order.
    pub codons: Vec<Codon>,
    pub products: BTreeSet<AminoAcid>,
    /// One product for all four completions.
    pub degenerate: bool,
    /// At most one non-Stop product.
    pub degenerate_excluding_stop: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PrefixReport {
    pub code_name: String,
    pub per_prefix: Vec<PrefixEntry>,
    pub fully_degenerate_prefix_count: usize,
    pub fully_degenerate_prefix_count_excluding_stop: usize,
    /// Distinct amino acids, Stop excluded.
    pub distinct_amino_count_actual: usize,
    /// Most amino acids a code could have if the third base never mattered.
    pub degenerate_ceiling: usize,
}

fn pairs(n: u64) -> u64 {
    n * n.saturating_sub(1) / 2
}

fn rna_word<S: Serializer>(class: &MultisetClass, s: S) -> Result<S::Ok, S::Error> {
    let word = class.canonical_word(&Alphabet::rna()).map_err(serde::ser::Error::custom)?;
    s.serialize_str(&word)
}

fn canonical_codons() -> Vec<Codon> {
    let mut codons: Vec<Codon> = Codon::all().collect();
    codons.sort();
    codons
}

fn all_distinct(products: impl IntoIterator<Item = Option<AminoAcid>>) -> bool {
    let mut seen = BTreeSet::new();
    products.into_iter().all(|p| p.is_some_and(|aa| seen.insert(aa)))
}

/// Groups the 64 codons into their 20 classes and checks each for coherence.
pub fn partition_classes(code: &GeneticCode) -> SymmetryReport {
    let classes = combinatorics::enumerate_multisets(CountParams::CODON)
        .expect("20 classes are below any cap");
    let slot: BTreeMap<&MultisetClass, usize> = classes.iter().enumerate().map(|(i, c)| (c, i)).collect();

    let mut members: Vec<Vec<Codon>> = vec![Vec::new(); classes.len()];
    for codon in canonical_codons() {
        members[slot[&codon.class()]].push(codon);
    }

    let per_class: Vec<ClassReport> = classes
        .iter()
        .zip(members)
        .map(|(class, codons)| {
            let products: Vec<AminoAcid> = codons.iter().map(|&c| code.translate(c)).collect();
            let coherent = products.windows(2).all(|w| w[0] == w[1]);
            let sense: BTreeSet<AminoAcid> = products.iter().copied().filter(|aa| !aa.is_stop()).collect();
            ClassReport {
                class: class.clone(),
                codons,
                products,
                coherent,
                coherent_excluding_stop: sense.len() <= 1,
            }
        })
        .collect();

    let mut size_profile = BTreeMap::new();
    for report in &per_class {
        *size_profile.entry(report.codons.len()).or_default() += 1;
    }

    let coherent_count = per_class.iter().filter(|c| c.coherent).count();
    let coherent_count_excluding_stop = per_class.iter().filter(|c| c.coherent_excluding_stop).count();
    let symbols: BTreeSet<AminoAcid> = Codon::all().map(|c| code.translate(c)).collect();
    let violations = violation_metrics(&per_class);

    SymmetryReport {
        code_name: code.name().to_string(),
        bijective_20_to_20: coherent_count == per_class.len()
            && all_distinct(per_class.iter().map(ClassReport::product)),
        bijective_20_to_20_excluding_stop: coherent_count_excluding_stop == per_class.len()
            && all_distinct(per_class.iter().map(ClassReport::product_excluding_stop)),
        per_class,
        size_profile,
        coherent_count,
        coherent_count_excluding_stop,
        amino_image_size: code.amino_image().len(),
        symbol_image_size: symbols.len(),
        incoherence_pairs: violations.incoherence_pairs,
        incoherence_pairs_excluding_stop: violations.incoherence_pairs_excluding_stop,
    }
}

/// How often two codons with the same base content disagree. Zero exactly
/// when the code depends on base content alone.
pub fn multiset_invariance_violation(code: &GeneticCode) -> ViolationMetrics {
    violation_metrics(&partition_classes(code).per_class)
}

fn violation_metrics(per_class: &[ClassReport]) -> ViolationMetrics {
    let sum = |skip_stop: bool| {
        per_class.iter().map(|c| c.incoherent_pairs(skip_stop)).fold((0, 0), |a, b| (a.0 + b.0, a.1 + b.1))
    };
    let fraction = |(bad, total): (u64, u64)| if total == 0 { 0.0 } else { bad as f64 / total as f64 };
    let all = sum(false);
    let sense = sum(true);
    ViolationMetrics {
        incoherence_pairs: all.0,
        same_class_pairs: all.1,
        fraction: fraction(all),
        incoherence_pairs_excluding_stop: sense.0,
        same_class_pairs_excluding_stop: sense.1,
        fraction_excluding_stop: fraction(sense),
    }
}

/// For each two-base prefix, what the third base can still change.
pub fn prefix_significance(code: &GeneticCode) -> PrefixReport {
    let mut per_prefix = Vec::with_capacity(16);
    for first in Nucleotide::ALL {
        for second in Nucleotide::ALL {
            let codons: Vec<Codon> = Nucleotide::ALL.iter().map(|&third| Codon([first, second, third])).collect();
            let products: BTreeSet<AminoAcid> = codons.iter().map(|&c| code.translate(c)).collect();
            let sense = products.iter().filter(|aa| !aa.is_stop()).count();
            per_prefix.push(PrefixEntry {
                prefix: format!("{first}{second}"),
                codons,
                degenerate: products.len() == 1,
                degenerate_excluding_stop: sense <= 1,
                products,
            });
        }
    }
    PrefixReport {
        code_name: code.name().to_string(),
        fully_degenerate_prefix_count: per_prefix.iter().filter(|p| p.degenerate).count(),
        fully_degenerate_prefix_count_excluding_stop: per_prefix
            .iter()
            .filter(|p| p.degenerate_excluding_stop)
            .count(),
        per_prefix,
        distinct_amino_count_actual: code.amino_image().len(),
        degenerate_ceiling: 16,
    }
}

/// Seeded generators of synthetic codes. The same seed always yields the same table.
pub mod synthetic {
    use std::collections::BTreeSet;

    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    use crate::codon_model::{AminoAcid, Codon, GeneticCode};
    use crate::combinatorics::{self, CountParams};

    fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    fn pick(rng: &mut ChaCha8Rng) -> AminoAcid {
        AminoAcid::ALL[rng.gen_range(0..AminoAcid::ALL.len())]
    }

    fn class_index(codon: Codon) -> usize {
        let classes = combinatorics::enumerate_multisets(CountParams::CODON).expect("20 classes");
        let class = codon.class();
        classes.iter().position(|c| *c == class).expect("every codon has a class")
    }

    /// Every codon gets an independent uniform symbol; id and start codons are random too.
    pub fn random_code(seed: u64) -> GeneticCode {
        let mut rng = rng(seed);
        let mut mapping = [AminoAcid::Stop; 64];
        for slot in &mut mapping {
            *slot = pick(&mut rng);
        }
        let id = rng.gen_bool(0.5).then(|| rng.gen_range(0..1000));
        let starts = rng.gen_bool(0.5).then(|| {
            Codon::all().filter(|_| rng.gen_bool(0.1)).collect::<BTreeSet<_>>()
        });
        GeneticCode::new(&format!("random-{seed}"), id, mapping, starts).expect("single-line name")
    }

    /// One random symbol per permutation class.
    pub fn multiset_invariant_code(seed: u64) -> GeneticCode {
        let mut rng = rng(seed);
        let per_class: Vec<AminoAcid> = (0..20).map(|_| pick(&mut rng)).collect();
        GeneticCode::from_fn(&format!("invariant-{seed}"), |c| per_class[class_index(c)])
            .expect("single-line name")
    }

    /// The 20 amino acids dealt one per class in random order.
    pub fn class_bijective_code(seed: u64) -> GeneticCode {
        let mut rng = rng(seed);
        let mut aminos: Vec<AminoAcid> = AminoAcid::ALL.iter().copied().filter(|a| !a.is_stop()).collect();
        aminos.shuffle(&mut rng);
        GeneticCode::from_fn(&format!("bijective-{seed}"), |c| aminos[class_index(c)])
            .expect("single-line name")
    }

    /// One random symbol per two-base prefix; the third base never matters.
    pub fn third_base_degenerate_code(seed: u64) -> GeneticCode {
        let mut rng = rng(seed);
        let per_prefix: Vec<AminoAcid> = (0..16).map(|_| pick(&mut rng)).collect();
        GeneticCode::from_fn(&format!("prefix-{seed}"), |c| per_prefix[c.index() / 4])
            .expect("single-line name")
    }

    /// A code that is invariant, bijective, or random depending on the seed,
    /// with a few codons perturbed half the time.
    pub fn mixed_code(seed: u64) -> GeneticCode {
        let base = match seed % 3 {
            0 => multiset_invariant_code(seed),
            1 => class_bijective_code(seed),
            _ => random_code(seed),
        };
        let mut rng = rng(seed ^ 0x9e37_79b9_7f4a_7c15);
        if rng.gen_bool(0.5) {
            return base;
        }
        let flips: Vec<(usize, AminoAcid)> =
            (0..rng.gen_range(1..4)).map(|_| (rng.gen_range(0..64), pick(&mut rng))).collect();
        GeneticCode::from_fn(&format!("mixed-{seed}"), |c| {
            flips
                .iter()
                .rev()
                .find(|(i, _)| *i == c.index())
                .map(|&(_, aa)| aa)
                .unwrap_or_else(|| base.translate(c))
        })
        .expect("single-line name")
    }
}
