//! Nucleotides, codons, amino acids and translation tables.
//!
//! Bases are stored as RNA (`A C G U`); DNA input has `T` mapped to `U` on the
//! way in. Tables use the positional NCBI layout: the `AAs` line is read
//! column by column against the three base lines, so any column order works.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::Serialize;

use crate::combinatorics::{self, Alphabet, MultisetClass};
use crate::error::{Error, Result, TableError, TableErrorKind};

/// NCBI translation table 1.
pub const STANDARD_TABLE: &str = "\
name   = Standard
id     = 1
AAs    = FFLLSSSSYY**CC*WLLLLPPPPHHQQRRRRIIIMTTTTNNKKSSRRVVVVAAAADDEEGGGG
Starts = ---M---------------M---------------M----------------------------
Base1  = TTTTTTTTTTTTTTTTCCCCCCCCCCCCCCCCAAAAAAAAAAAAAAAAGGGGGGGGGGGGGGGG
Base2  = TTTTCCCCAAAAGGGGTTTTCCCCAAAAGGGGTTTTCCCCAAAAGGGGTTTTCCCCAAAAGGGG
Base3  = TCAGTCAGTCAGTCAGTCAGTCAGTCAGTCAGTCAGTCAGTCAGTCAGTCAGTCAGTCAGTCAG
";

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Nucleotide {
    A,
    C,
    G,
    U,
}

impl Nucleotide {
    /// Canonical order `A < C < G < U`.
    pub const ALL: [Nucleotide; 4] = [Nucleotide::A, Nucleotide::C, Nucleotide::G, Nucleotide::U];

    /// Per-position order of NCBI tables: `T(U), C, A, G`.
    pub const NCBI_ORDER: [Nucleotide; 4] =
        [Nucleotide::U, Nucleotide::C, Nucleotide::A, Nucleotide::G];

    /// Accepts `ACGTU` in either case.
    pub fn from_char(c: char) -> Option<Self> {
        match c.to_ascii_uppercase() {
            'A' => Some(Nucleotide::A),
            'C' => Some(Nucleotide::C),
            'G' => Some(Nucleotide::G),
            'U' | 'T' => Some(Nucleotide::U),
            _ => None,
        }
    }

    pub fn rna_char(self) -> char {
        match self {
            Nucleotide::A => 'A',
            Nucleotide::C => 'C',
            Nucleotide::G => 'G',
            Nucleotide::U => 'U',
        }
    }

    pub fn dna_char(self) -> char {
        match self {
            Nucleotide::U => 'T',
            other => other.rna_char(),
        }
    }

    /// Rank in the canonical order.
    pub fn rank(self) -> usize {
        self as usize
    }

    fn ncbi_rank(self) -> usize {
        match self {
            Nucleotide::U => 0,
            Nucleotide::C => 1,
            Nucleotide::A => 2,
            Nucleotide::G => 3,
        }
    }
}

impl fmt::Display for Nucleotide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rna_char())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Codon(pub [Nucleotide; 3]);

impl Codon {
    pub const COUNT: usize = 64;

    /// Position in NCBI column order: first base slowest, each base over `U C A G`.
    pub fn index(self) -> usize {
        let [a, b, c] = self.0;
        16 * a.ncbi_rank() + 4 * b.ncbi_rank() + c.ncbi_rank()
    }

    pub fn from_index(index: usize) -> Option<Self> {
        if index >= Self::COUNT {
            return None;
        }
        let base = |i: usize| Nucleotide::NCBI_ORDER[i];
        Some(Codon([base(index / 16), base(index / 4 % 4), base(index % 4)]))
    }

    /// All 64 codons in NCBI column order.
    pub fn all() -> impl Iterator<Item = Codon> {
        (0..Self::COUNT).map(|i| Codon::from_index(i).expect("index below 64"))
    }

    pub fn bases(self) -> [Nucleotide; 3] {
        self.0
    }

    pub fn dna_string(self) -> String {
        self.0.iter().map(|n| n.dna_char()).collect()
    }

    /// The permutation class of this codon over the `A < C < G < U` alphabet.
    pub fn class(self) -> MultisetClass {
        combinatorics::canonicalize(&self.to_string(), &Alphabet::rna())
            .expect("RNA letters are in the RNA alphabet")
    }
}

impl fmt::Display for Codon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for n in self.0 {
            write!(f, "{n}")?;
        }
        Ok(())
    }
}

impl FromStr for Codon {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut bases = [Nucleotide::A; 3];
        let mut len = 0;
        for (position, letter) in s.chars().enumerate() {
            let n = Nucleotide::from_char(letter).ok_or(Error::UnknownLetter { letter, position })?;
            if position < 3 {
                bases[position] = n;
            }
            len += 1;
        }
        if len != 3 {
            return Err(Error::InvalidParams(format!("a codon has 3 bases, got {len}")));
        }
        Ok(Codon(bases))
    }
}

impl Serialize for Codon {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// One of the 20 standard amino acids, or a stop signal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AminoAcid {
    Ala,
    Arg,
    Asn,
    Asp,
    Cys,
    Gln,
    Glu,
    Gly,
    His,
    Ile,
    Leu,
    Lys,
    Met,
    Phe,
    Pro,
    Ser,
    Thr,
    Trp,
    Tyr,
    Val,
    Stop,
}

impl AminoAcid {
    pub const ALL: [AminoAcid; 21] = [
        AminoAcid::Ala,
        AminoAcid::Arg,
        AminoAcid::Asn,
        AminoAcid::Asp,
        AminoAcid::Cys,
        AminoAcid::Gln,
        AminoAcid::Glu,
        AminoAcid::Gly,
        AminoAcid::His,
        AminoAcid::Ile,
        AminoAcid::Leu,
        AminoAcid::Lys,
        AminoAcid::Met,
        AminoAcid::Phe,
        AminoAcid::Pro,
        AminoAcid::Ser,
        AminoAcid::Thr,
        AminoAcid::Trp,
        AminoAcid::Tyr,
        AminoAcid::Val,
        AminoAcid::Stop,
    ];

    /// IUPAC one-letter code; `*` for stop.
    pub fn symbol(self) -> char {
        match self {
            AminoAcid::Ala => 'A',
            AminoAcid::Arg => 'R',
            AminoAcid::Asn => 'N',
            AminoAcid::Asp => 'D',
            AminoAcid::Cys => 'C',
            AminoAcid::Gln => 'Q',
            AminoAcid::Glu => 'E',
            AminoAcid::Gly => 'G',
            AminoAcid::His => 'H',
            AminoAcid::Ile => 'I',
            AminoAcid::Leu => 'L',
            AminoAcid::Lys => 'K',
            AminoAcid::Met => 'M',
            AminoAcid::Phe => 'F',
            AminoAcid::Pro => 'P',
            AminoAcid::Ser => 'S',
            AminoAcid::Thr => 'T',
            AminoAcid::Trp => 'W',
            AminoAcid::Tyr => 'Y',
            AminoAcid::Val => 'V',
            AminoAcid::Stop => '*',
        }
    }

    /// Case-insensitive; only the 21 symbols of [`AminoAcid::ALL`].
    pub fn from_symbol(c: char) -> Option<Self> {
        let c = c.to_ascii_uppercase();
        Self::ALL.into_iter().find(|aa| aa.symbol() == c)
    }

    pub fn is_stop(self) -> bool {
        self == AminoAcid::Stop
    }
}

impl fmt::Display for AminoAcid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

impl Serialize for AminoAcid {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A total map from the 64 codons to amino acids or stop.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneticCode {
    name: String,
    id: Option<u32>,
    mapping: [AminoAcid; 64],
    starts: Option<BTreeSet<Codon>>,
}

impl GeneticCode {
    /// `mapping` is indexed by [`Codon::index`]. The name is trimmed and must fit on one line.
    pub fn new(
        name: &str,
        id: Option<u32>,
        mapping: [AminoAcid; 64],
        starts: Option<BTreeSet<Codon>>,
    ) -> Result<Self> {
        if name.contains(['\n', '\r']) {
            return Err(Error::InvalidParams("code name must be a single line".into()));
        }
        Ok(Self { name: name.trim().to_string(), id, mapping, starts })
    }

    /// Builds a code from a per-codon function.
    pub fn from_fn(name: &str, mut f: impl FnMut(Codon) -> AminoAcid) -> Result<Self> {
        let mut mapping = [AminoAcid::Stop; 64];
        for codon in Codon::all() {
            mapping[codon.index()] = f(codon);
        }
        Self::new(name, None, mapping, None)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn id(&self) -> Option<u32> {
        self.id
    }

    pub fn starts(&self) -> Option<&BTreeSet<Codon>> {
        self.starts.as_ref()
    }

    pub fn translate(&self, codon: Codon) -> AminoAcid {
        self.mapping[codon.index()]
    }

    pub fn stop_codons(&self) -> Vec<Codon> {
        Codon::all().filter(|&c| self.translate(c).is_stop()).collect()
    }

    pub fn sense_codon_count(&self) -> usize {
        Codon::COUNT - self.stop_codons().len()
    }

    /// Distinct amino acids produced, Stop excluded.
    pub fn amino_image(&self) -> BTreeSet<AminoAcid> {
        self.mapping.iter().copied().filter(|aa| !aa.is_stop()).collect()
    }
}

/// Translation of a codon under a code.
pub fn translate(code: &GeneticCode, codon: Codon) -> AminoAcid {
    code.translate(codon)
}

/// NCBI table 1, parsed from [`STANDARD_TABLE`].
pub fn builtin_standard_code() -> GeneticCode {
    static STANDARD: OnceLock<GeneticCode> = OnceLock::new();
    STANDARD
        .get_or_init(|| parse_table(STANDARD_TABLE).expect("embedded standard table parses"))
        .clone()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    DnaToRna,
    RnaToDna,
}

/// Uppercases `word` and swaps `T`/`U` toward the target alphabet.
pub fn normalize_alphabet(word: &str, direction: Direction) -> Result<String> {
    word.chars()
        .enumerate()
        .map(|(position, letter)| {
            let n = Nucleotide::from_char(letter).ok_or(Error::UnknownLetter { letter, position })?;
            Ok(match direction {
                Direction::DnaToRna => n.rna_char(),
                Direction::RnaToDna => n.dna_char(),
            })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Field {
    Name,
    Id,
    Aas,
    Starts,
    Base1,
    Base2,
    Base3,
}

impl Field {
    fn parse(key: &str) -> Option<Self> {
        Some(match key.to_ascii_lowercase().as_str() {
            "name" => Field::Name,
            "id" => Field::Id,
            "aas" => Field::Aas,
            "starts" => Field::Starts,
            "base1" => Field::Base1,
            "base2" => Field::Base2,
            "base3" => Field::Base3,
            _ => return None,
        })
    }

    fn label(self) -> &'static str {
        match self {
            Field::Name => "name",
            Field::Id => "id",
            Field::Aas => "AAs",
            Field::Starts => "Starts",
            Field::Base1 => "Base1",
            Field::Base2 => "Base2",
            Field::Base3 => "Base3",
        }
    }
}

struct RawValue<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

/// Parses the `key = value` table layout. Blank lines and lines starting with `#` are ignored.
pub fn parse_table(text: &str) -> Result<GeneticCode> {
    let mut fields: BTreeMap<Field, RawValue<'_>> = BTreeMap::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let Some(eq) = raw.find('=') else {
            let column = raw.chars().take_while(|c| c.is_whitespace()).count() + 1;
            return Err(TableError::new(line, column, TableErrorKind::MissingSeparator).into());
        };
        let key_part = &raw[..eq];
        let key = key_part.trim();
        let key_column = key_part.chars().take_while(|c| c.is_whitespace()).count() + 1;
        let field = Field::parse(key).ok_or_else(|| {
            TableError::new(line, key_column, TableErrorKind::UnknownKey(key.to_string()))
        })?;

        let after = &raw[eq + 1..];
        let leading = after.chars().take_while(|c| c.is_whitespace()).count();
        let value = after.trim();
        let column = raw[..eq].chars().count() + 1 + leading + 1;

        if fields.contains_key(&field) {
            return Err(TableError::new(
                line,
                key_column,
                TableErrorKind::DuplicateKey(field.label().to_string()),
            )
            .into());
        }
        fields.insert(field, RawValue { text: value, line, column });
    }

    let missing = |field: Field| TableError::new(last_line + 1, 1, TableErrorKind::MissingField(field.label()));

    let name = fields.get(&Field::Name).ok_or_else(|| missing(Field::Name))?.text;
    let id = match fields.get(&Field::Id) {
        None => None,
        Some(v) => Some(v.text.parse::<u32>().map_err(|_| {
            TableError::new(v.line, v.column, TableErrorKind::InvalidId(v.text.to_string()))
        })?),
    };

    // Decode in file order so the first bad line is the one reported.
    let mut present: Vec<(Field, &RawValue<'_>)> = fields
        .iter()
        .filter(|(f, _)| !matches!(f, Field::Name | Field::Id))
        .map(|(f, raw)| (*f, raw))
        .collect();
    present.sort_by_key(|(_, raw)| raw.line);
    let mut aas = None;
    let mut starts = None;
    let mut bases: [Option<Vec<Nucleotide>>; 3] = [None, None, None];
    for (field, raw) in present {
        match field {
            Field::Aas => aas = Some(decode_line(raw, field, AminoAcid::from_symbol)?),
            Field::Starts => {
                starts = Some(decode_line(raw, field, |c| match c {
                    '-' | '*' => Some(false),
                    'M' | 'm' => Some(true),
                    _ => None,
                })?)
            }
            Field::Base1 => bases[0] = Some(decode_line(raw, field, Nucleotide::from_char)?),
            Field::Base2 => bases[1] = Some(decode_line(raw, field, Nucleotide::from_char)?),
            Field::Base3 => bases[2] = Some(decode_line(raw, field, Nucleotide::from_char)?),
            Field::Name | Field::Id => unreachable!("filtered above"),
        }
    }
    let aas = aas.ok_or_else(|| missing(Field::Aas))?;
    let [b1, b2, b3] = bases;
    let base_lines = [
        b1.ok_or_else(|| missing(Field::Base1))?,
        b2.ok_or_else(|| missing(Field::Base2))?,
        b3.ok_or_else(|| missing(Field::Base3))?,
    ];

    let mut mapping = [AminoAcid::Stop; 64];
    let mut seen: [Option<usize>; 64] = [None; 64];
    let mut start_set = starts.as_ref().map(|_| BTreeSet::new());
    let base1 = &fields[&Field::Base1];
    for col in 0..Codon::COUNT {
        let codon = Codon([base_lines[0][col], base_lines[1][col], base_lines[2][col]]);
        if let Some(first) = seen[codon.index()] {
            return Err(TableError::new(
                base1.line,
                base1.column + col,
                TableErrorKind::DuplicateCodon { codon: codon.to_string(), first: base1.column + first },
            )
            .into());
        }
        seen[codon.index()] = Some(col);
        mapping[codon.index()] = aas[col];
        if let (Some(set), Some(flags)) = (start_set.as_mut(), starts.as_ref()) {
            if flags[col] {
                set.insert(codon);
            }
        }
    }

    GeneticCode::new(name, id, mapping, start_set)
}

fn decode_line<T>(raw: &RawValue<'_>, field: Field, decode: impl Fn(char) -> Option<T>) -> Result<Vec<T>> {
    let found = raw.text.chars().count();
    if found != Codon::COUNT {
        return Err(TableError::new(
            raw.line,
            raw.column,
            TableErrorKind::WrongLength { field: field.label(), found },
        )
        .into());
    }
    raw.text
        .chars()
        .enumerate()
        .map(|(i, letter)| {
            decode(letter).ok_or_else(|| {
                TableError::new(
                    raw.line,
                    raw.column + i,
                    TableErrorKind::UnknownLetter { field: field.label(), letter },
                )
                .into()
            })
        })
        .collect()
}

/// Writes `code` in NCBI column order with DNA base letters.
pub fn serialize_table(code: &GeneticCode) -> String {
    let mut out = String::new();
    let mut line = |key: &str, value: &str| {
        out.push_str(&format!("{key:<6} = {value}\n"));
    };
    line("name", &code.name);
    if let Some(id) = code.id {
        line("id", &id.to_string());
    }
    let aas: String = Codon::all().map(|c| code.translate(c).symbol()).collect();
    line("AAs", &aas);
    if let Some(starts) = &code.starts {
        let s: String = Codon::all().map(|c| if starts.contains(&c) { 'M' } else { '-' }).collect();
        line("Starts", &s);
    }
    for pos in 0..3 {
        let s: String = Codon::all().map(|c| c.0[pos].dna_char()).collect();
        line(&format!("Base{}", pos + 1), &s);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn codon(s: &str) -> Codon {
        s.parse().unwrap()
    }

    fn replace_field(text: &str, key: &str, value: &str) -> String {
        text.lines()
            .map(|l| {
                if l.split('=').next().unwrap().trim() == key {
                    format!("{key:<6} = {value}")
                } else {
                    l.to_string()
                }
            })
            .collect::<Vec<_>>()
            .join("\n")
    }

    #[test]
    fn codon_index_round_trip() {
        for i in 0..64 {
            assert_eq!(Codon::from_index(i).unwrap().index(), i);
        }
        assert_eq!(Codon::from_index(64), None);
        assert_eq!(codon("UUU").index(), 0);
        assert_eq!(codon("GGG").index(), 63);
        assert_eq!(Codon::all().collect::<BTreeSet<_>>().len(), 64);
    }

    #[test]
    fn codon_parsing_normalizes_dna() {
        assert_eq!(codon("atg"), codon("AUG"));
        assert_eq!(codon("AUG").dna_string(), "ATG");
        assert!(matches!("AXG".parse::<Codon>(), Err(Error::UnknownLetter { letter: 'X', position: 1 })));
        assert!("AUGC".parse::<Codon>().is_err());
        assert!("AU".parse::<Codon>().is_err());
    }

    #[test]
    fn amino_acid_symbols() {
        assert_eq!(AminoAcid::ALL.len(), 21);
        let symbols: BTreeSet<char> = AminoAcid::ALL.iter().map(|a| a.symbol()).collect();
        assert_eq!(symbols.len(), 21);
        for aa in AminoAcid::ALL {
            assert_eq!(AminoAcid::from_symbol(aa.symbol()), Some(aa));
        }
        assert_eq!(AminoAcid::from_symbol('X'), None);
        assert_eq!(AminoAcid::from_symbol('m'), Some(AminoAcid::Met));
    }

    #[test]
    fn standard_code_lookups() {
        let code = builtin_standard_code();
        assert_eq!(code.name(), "Standard");
        assert_eq!(code.id(), Some(1));
        assert_eq!(translate(&code, codon("AUG")), AminoAcid::Met);
        assert_eq!(translate(&code, codon("UUU")), AminoAcid::Phe);
        assert_eq!(translate(&code, codon("UAA")), AminoAcid::Stop);
        assert_eq!(translate(&code, codon("GGG")), AminoAcid::Gly);
        assert_eq!(code.amino_image().len(), 20);
    }

    #[test]
    fn standard_code_against_embedded_text() {
        // Oracle: read the embedded string directly, column by column.
        let rows: BTreeMap<&str, Vec<char>> = STANDARD_TABLE
            .lines()
            .map(|l| {
                let (k, v) = l.split_once('=').unwrap();
                (k.trim(), v.trim().chars().collect())
            })
            .collect();
        let code = builtin_standard_code();
        for col in 0..64 {
            let word: String = ["Base1", "Base2", "Base3"].iter().map(|k| rows[k][col]).collect();
            let aa = code.translate(word.parse().unwrap());
            assert_eq!(aa.symbol(), rows["AAs"][col], "column {col}");
        }
        let stops: Vec<String> = code.stop_codons().iter().map(|c| c.to_string()).collect();
        assert_eq!(stops, ["UAA", "UAG", "UGA"]);
        assert_eq!(code.sense_codon_count(), 61);
        let starts: Vec<String> = code.starts().unwrap().iter().map(|c| c.to_string()).collect();
        assert_eq!(starts, ["AUG", "CUG", "UUG"]);
    }

    #[test]
    fn serialize_reproduces_embedded_text() {
        assert_eq!(serialize_table(&builtin_standard_code()), STANDARD_TABLE);
    }

    #[test]
    fn parse_reads_columns_positionally() {
        // Reverse every column; the resulting code must be unchanged.
        let rows: Vec<(String, String)> = STANDARD_TABLE
            .lines()
            .map(|l| {
                let (k, v) = l.split_once('=').unwrap();
                (k.trim().to_string(), v.trim().to_string())
            })
            .collect();
        let mut text = String::new();
        for (k, v) in rows {
            let v = if k == "name" || k == "id" { v } else { v.chars().rev().collect() };
            text.push_str(&format!("{k} = {v}\n"));
        }
        assert_eq!(parse_table(&text).unwrap(), builtin_standard_code());
    }

    #[test]
    fn parse_accepts_rna_letters_and_comments() {
        let rna: String = STANDARD_TABLE
            .lines()
            .map(|l| if l.starts_with("Base") { l.replace('T', "U") } else { l.to_lowercase() })
            .map(|l| format!("{l}\n"))
            .collect();
        let text = format!("# comment\n\n{rna}");
        let code = parse_table(&text).unwrap();
        assert_eq!(code.translate(codon("UGG")), AminoAcid::Trp);
    }

    #[test]
    fn short_aas_line_is_a_length_error() {
        let aas = &"FFLLSSSSYY**CC*WLLLLPPPPHHQQRRRRIIIMTTTTNNKKSSRRVVVVAAAADDEEGGGG"[..63];
        let err = parse_table(&replace_field(STANDARD_TABLE, "AAs", aas)).unwrap_err();
        assert_eq!(
            err,
            Error::Table(TableError::new(3, 10, TableErrorKind::WrongLength { field: "AAs", found: 63 }))
        );
    }

    #[test]
    fn unknown_base_letter_is_reported_with_column() {
        let err = parse_table(&replace_field(STANDARD_TABLE, "Base3", &"X".repeat(64))).unwrap_err();
        assert_eq!(
            err,
            Error::Table(TableError::new(
                7,
                10,
                TableErrorKind::UnknownLetter { field: "Base3", letter: 'X' }
            ))
        );
    }

    #[test]
    fn unknown_amino_letter_is_rejected() {
        let aas = "XFLLSSSSYY**CC*WLLLLPPPPHHQQRRRRIIIMTTTTNNKKSSRRVVVVAAAADDEEGGGG";
        let err = parse_table(&replace_field(STANDARD_TABLE, "AAs", aas)).unwrap_err();
        assert!(matches!(err, Error::Table(TableError { kind: TableErrorKind::UnknownLetter { letter: 'X', .. }, .. })));
    }

    #[test]
    fn missing_and_malformed_fields() {
        let no_base2: String =
            STANDARD_TABLE.lines().filter(|l| !l.starts_with("Base2")).map(|l| format!("{l}\n")).collect();
        assert!(matches!(
            parse_table(&no_base2),
            Err(Error::Table(TableError { kind: TableErrorKind::MissingField("Base2"), .. }))
        ));

        let no_eq = STANDARD_TABLE.replacen("id     = 1", "id 1", 1);
        assert!(matches!(
            parse_table(&no_eq),
            Err(Error::Table(TableError { line: 2, kind: TableErrorKind::MissingSeparator, .. }))
        ));

        let bad_key = STANDARD_TABLE.replacen("id     =", "ident  =", 1);
        assert!(matches!(
            parse_table(&bad_key),
            Err(Error::Table(TableError { kind: TableErrorKind::UnknownKey(_), .. }))
        ));

        let dup = format!("{STANDARD_TABLE}id = 2\n");
        assert!(matches!(
            parse_table(&dup),
            Err(Error::Table(TableError { line: 8, kind: TableErrorKind::DuplicateKey(_), .. }))
        ));

        let bad_id = STANDARD_TABLE.replacen("id     = 1", "id     = one", 1);
        assert!(matches!(
            parse_table(&bad_id),
            Err(Error::Table(TableError { kind: TableErrorKind::InvalidId(_), .. }))
        ));
    }

    #[test]
    fn repeated_codon_in_base_lines_is_inconsistent() {
        let base3 = "TTAGTCAGTCAGTCAGTCAGTCAGTCAGTCAGTCAGTCAGTCAGTCAGTCAGTCAGTCAGTCAG";
        let err = parse_table(&replace_field(STANDARD_TABLE, "Base3", base3)).unwrap_err();
        assert_eq!(
            err,
            Error::Table(TableError::new(
                5,
                11,
                TableErrorKind::DuplicateCodon { codon: "UUU".into(), first: 10 }
            ))
        );
    }

    #[test]
    fn optional_fields() {
        let minimal: String = STANDARD_TABLE
            .lines()
            .filter(|l| !l.starts_with("Starts") && !l.starts_with("id"))
            .map(|l| format!("{l}\n"))
            .collect();
        let code = parse_table(&minimal).unwrap();
        assert_eq!(code.id(), None);
        assert_eq!(code.starts(), None);
        assert_eq!(parse_table(&serialize_table(&code)).unwrap(), code);
    }

    #[test]
    fn ncbi_style_starts_with_stop_markers() {
        let starts = "---M------**--*----M---------------M----------------------------";
        let code = parse_table(&replace_field(STANDARD_TABLE, "Starts", starts)).unwrap();
        assert_eq!(code, builtin_standard_code());
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(normalize_alphabet("atg", Direction::DnaToRna).unwrap(), "AUG");
        assert_eq!(normalize_alphabet("AUG", Direction::RnaToDna).unwrap(), "ATG");
        assert_eq!(
            normalize_alphabet("AXG", Direction::DnaToRna),
            Err(Error::UnknownLetter { letter: 'X', position: 1 })
        );
        let rna = normalize_alphabet("gattaca", Direction::DnaToRna).unwrap();
        assert_eq!(normalize_alphabet(&rna, Direction::RnaToDna).unwrap(), "GATTACA");
    }

    #[test]
    fn names_must_be_single_line() {
        assert!(GeneticCode::from_fn("a\nb", |_| AminoAcid::Gly).is_err());
        assert_eq!(GeneticCode::from_fn("  padded ", |_| AminoAcid::Gly).unwrap().name(), "padded");
    }
}
