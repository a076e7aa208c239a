//! Genes, genomes and the ACGT action grammar.
//!
//! A gene is read as consecutive letter pairs: the first letter of a pair
//! picks a direction, the second picks a verb. Every pair is meaningful, so
//! decoding never fails on a valid sequence; a trailing odd letter is dropped.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand_distr::{Distribution, Geometric};
use thiserror::Error;

use crate::engine::{Action, Direction, GridConfig, Position, Verb};

pub const ALPHABET: [u8; 4] = *b"ACGT";
pub const DEFAULT_GENE_LENGTH: usize = 512;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenomeError {
    #[error("invalid base {byte:?} at offset {offset}")]
    InvalidBase { byte: char, offset: usize },
    #[error("token table: {0}")]
    BadTable(&'static str),
    #[error("genome must contain at least one gene")]
    Empty,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("gene index {index} out of range for {len} genes")]
    IndexOutOfRange { index: usize, len: usize },
}

fn base_index(b: u8) -> Option<usize> {
    match b {
        b'A' => Some(0),
        b'C' => Some(1),
        b'G' => Some(2),
        b'T' => Some(3),
        _ => None,
    }
}

fn validate_sequence(seq: &[u8]) -> Result<(), GenomeError> {
    match seq.iter().position(|&b| base_index(b).is_none()) {
        Some(offset) => Err(GenomeError::InvalidBase {
            byte: seq[offset] as char,
            offset,
        }),
        None => Ok(()),
    }
}

/// Letter-to-token mapping, indexed in `ACGT` order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TokenTable {
    direction_of: [Direction; 4],
    verb_of: [Verb; 4],
}

impl Default for TokenTable {
    /// A→up, C→right, G→down, T→left; A,C→move, G,T→attack.
    fn default() -> Self {
        TokenTable {
            direction_of: [Direction::Up, Direction::Right, Direction::Down, Direction::Left],
            verb_of: [Verb::Move, Verb::Move, Verb::Attack, Verb::Attack],
        }
    }
}

impl TokenTable {
    pub fn new(direction_of: [Direction; 4], verb_of: [Verb; 4]) -> Result<Self, GenomeError> {
        for d in Direction::ALL {
            if !direction_of.contains(&d) {
                return Err(GenomeError::BadTable("direction map must be a bijection"));
            }
        }
        let moves = verb_of.iter().filter(|&&v| v == Verb::Move).count();
        if moves != 2 {
            return Err(GenomeError::BadTable("exactly two letters must map to each verb"));
        }
        Ok(TokenTable { direction_of, verb_of })
    }

    pub fn direction(&self, base: u8) -> Option<Direction> {
        base_index(base).map(|i| self.direction_of[i])
    }

    pub fn verb(&self, base: u8) -> Option<Verb> {
        base_index(base).map(|i| self.verb_of[i])
    }

    fn decode_pair(&self, a: u8, b: u8) -> Action {
        // Callers guarantee both bytes are in the alphabet.
        let d = self.direction_of[base_index(a).unwrap_or(0)];
        let v = self.verb_of[base_index(b).unwrap_or(0)];
        Action { direction: d, verb: v }
    }
}

pub fn decode_gene(sequence: &[u8], table: &TokenTable) -> Result<Vec<Action>, GenomeError> {
    validate_sequence(sequence)?;
    Ok(decode_valid(sequence, table))
}

fn decode_valid(sequence: &[u8], table: &TokenTable) -> Vec<Action> {
    sequence
        .chunks_exact(2)
        .map(|pair| table.decode_pair(pair[0], pair[1]))
        .collect()
}

pub fn random_sequence<R: Rng + ?Sized>(length: usize, rng: &mut R) -> Vec<u8> {
    (0..length).map(|_| ALPHABET[rng.random_range(0..4)]).collect()
}

/// Replaces each site, with probability `rate`, by one of the three other
/// letters chosen uniformly.
pub fn point_mutate_in_place<R: Rng + ?Sized>(sequence: &mut [u8], rate: f64, rng: &mut R) {
    if rate <= 0.0 {
        return;
    }
    let substitute = |site: &mut u8, rng: &mut R| {
        let current = base_index(*site).expect("sequence validated on construction");
        let shift = rng.random_range(1..4);
        *site = ALPHABET[(current + shift) % 4];
    };
    if rate >= 1.0 {
        sequence.iter_mut().for_each(|site| substitute(site, rng));
        return;
    }
    // Gaps between mutated sites are geometric.
    let gaps = Geometric::new(rate).expect("rate lies in (0, 1)");
    let mut i = 0usize;
    loop {
        let gap = gaps.sample(rng);
        match usize::try_from(gap).ok().and_then(|g| i.checked_add(g)) {
            Some(site) if site < sequence.len() => {
                substitute(&mut sequence[site], rng);
                i = site + 1;
            }
            _ => return,
        }
    }
}

pub fn point_mutate<R: Rng + ?Sized>(sequence: &[u8], rate: f64, rng: &mut R) -> Vec<u8> {
    let mut out = sequence.to_vec();
    point_mutate_in_place(&mut out, rate, rng);
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StartScheme {
    Same,
    Corners,
    Random,
}

impl StartScheme {
    pub fn name(self) -> &'static str {
        match self {
            StartScheme::Same => "same",
            StartScheme::Corners => "corners",
            StartScheme::Random => "random",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GeneOrigin {
    Duplication,
    DeNovo,
}

impl GeneOrigin {
    pub fn name(self) -> &'static str {
        match self {
            GeneOrigin::Duplication => "duplication",
            GeneOrigin::DeNovo => "de_novo",
        }
    }
}

/// Start position for a gene created at `gene_index`.
pub fn resolve_start<R: Rng + ?Sized>(
    scheme: StartScheme,
    gene_index: usize,
    grid: &GridConfig,
    rng: &mut R,
) -> Position {
    let corners = grid.corners();
    match scheme {
        StartScheme::Same => corners[0],
        StartScheme::Corners => corners[gene_index % corners.len()],
        StartScheme::Random => {
            let n = grid.size as i32;
            Position::new(rng.random_range(0..n), rng.random_range(0..n))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Gene {
    sequence: Vec<u8>,
    start: Position,
}

impl Gene {
    pub fn new(sequence: impl Into<Vec<u8>>, start: Position) -> Result<Self, GenomeError> {
        let sequence = sequence.into();
        validate_sequence(&sequence)?;
        Ok(Gene { sequence, start })
    }

    pub fn random<R: Rng + ?Sized>(length: usize, start: Position, rng: &mut R) -> Self {
        Gene {
            sequence: random_sequence(length, rng),
            start,
        }
    }

    pub fn sequence(&self) -> &[u8] {
        &self.sequence
    }

    pub fn start(&self) -> Position {
        self.start
    }

    pub fn actions(&self, table: &TokenTable) -> Vec<Action> {
        decode_valid(&self.sequence, table)
    }

    pub fn mutate<R: Rng + ?Sized>(&mut self, rate: f64, rng: &mut R) {
        point_mutate_in_place(&mut self.sequence, rate, rng);
    }
}

/// Ordered gene list; index is the character's priority.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Genome {
    genes: Vec<Gene>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct GeneEvents {
    pub removed: Option<usize>,
    /// Source index for duplications, `None` for de novo genes.
    pub added: Option<Option<usize>>,
}

impl Genome {
    pub fn new(genes: Vec<Gene>) -> Result<Self, GenomeError> {
        if genes.is_empty() {
            return Err(GenomeError::Empty);
        }
        Ok(Genome { genes })
    }

    pub fn single(gene: Gene) -> Self {
        Genome { genes: vec![gene] }
    }

    pub fn genes(&self) -> &[Gene] {
        &self.genes
    }

    pub fn len(&self) -> usize {
        self.genes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn push(&mut self, gene: Gene) {
        self.genes.push(gene);
    }

    /// Copy with one gene removed; `None` when that would leave it empty.
    pub fn without(&self, index: usize) -> Result<Option<Genome>, GenomeError> {
        if index >= self.genes.len() {
            return Err(GenomeError::IndexOutOfRange {
                index,
                len: self.genes.len(),
            });
        }
        if self.genes.len() == 1 {
            return Ok(None);
        }
        let mut genes = self.genes.clone();
        genes.remove(index);
        Ok(Some(Genome { genes }))
    }

    pub fn decode(&self, table: &TokenTable) -> Vec<Vec<Action>> {
        self.genes.iter().map(|g| g.actions(table)).collect()
    }

    pub fn mutate<R: Rng + ?Sized>(&mut self, rate: f64, rng: &mut R) {
        for gene in &mut self.genes {
            gene.mutate(rate, rng);
        }
    }

    /// Appends a new gene by the given origin: duplicates inherit the source
    /// position under the random scheme, de novo genes draw a fresh one.
    pub fn add_gene<R: Rng + ?Sized>(
        &mut self,
        origin: GeneOrigin,
        scheme: StartScheme,
        grid: &GridConfig,
        gene_length: usize,
        rng: &mut R,
    ) -> Option<usize> {
        let index = self.genes.len();
        match origin {
            GeneOrigin::Duplication => {
                let source = rng.random_range(0..self.genes.len());
                let parent = &self.genes[source];
                let start = match scheme {
                    StartScheme::Random => parent.start,
                    _ => resolve_start(scheme, index, grid, rng),
                };
                let gene = Gene {
                    sequence: parent.sequence.clone(),
                    start,
                };
                self.genes.push(gene);
                Some(source)
            }
            GeneOrigin::DeNovo => {
                let start = resolve_start(scheme, index, grid, rng);
                self.genes.push(Gene::random(gene_length, start, rng));
                None
            }
        }
    }

    /// Independent removal and addition events; removal is applied first.
    #[allow(clippy::too_many_arguments)]
    pub fn apply_gene_events<R: Rng + ?Sized>(
        &mut self,
        p_add: f64,
        p_remove: f64,
        origin: GeneOrigin,
        scheme: StartScheme,
        grid: &GridConfig,
        gene_length: usize,
        rng: &mut R,
    ) -> GeneEvents {
        let remove = p_remove > 0.0 && rng.random_bool(p_remove.min(1.0));
        let add = p_add > 0.0 && rng.random_bool(p_add.min(1.0));
        let mut events = GeneEvents::default();
        if remove && self.genes.len() > 1 {
            let i = rng.random_range(0..self.genes.len());
            self.genes.remove(i);
            events.removed = Some(i);
        }
        if add {
            events.added = Some(self.add_gene(origin, scheme, grid, gene_length, rng));
        }
        events
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Genome {
    /// One gene per line: `start_x,start_y,SEQUENCE`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.genes {
            writeln!(
                f,
                "{},{},{}",
                g.start.x,
                g.start.y,
                std::str::from_utf8(&g.sequence).expect("ACGT is ascii")
            )?;
        }
        Ok(())
    }
}

impl FromStr for Genome {
    type Err = GenomeError;

    /// Blank lines and lines starting with `#` are skipped.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut genes = Vec::new();
        for (i, raw) in s.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: String| GenomeError::Parse { line: i + 1, message };
            let mut parts = line.splitn(3, ',');
            let (Some(x), Some(y), Some(seq)) = (parts.next(), parts.next(), parts.next()) else {
                return Err(err("expected start_x,start_y,SEQUENCE".into()));
            };
            let x: i32 = x.trim().parse().map_err(|e| err(format!("start_x: {e}")))?;
            let y: i32 = y.trim().parse().map_err(|e| err(format!("start_y: {e}")))?;
            let gene = Gene::new(seq.trim().as_bytes(), Position::new(x, y)).map_err(|e| err(e.to_string()))?;
            genes.push(gene);
        }
        Genome::new(genes)
    }
}
