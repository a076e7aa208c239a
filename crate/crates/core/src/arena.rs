//! Scoring genomes against a fixed arena.

use crate::engine::{
    compute_max_score, run_session, run_session_traced, AttackKind, EngineError, OpponentConfig, Score,
    SessionOutcome, SessionRules, SessionTrace, TeamMember,
};
use crate::genome::{Gene, Genome, TokenTable};

/// Everything needed to turn a genome into a session outcome.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scenario {
    pub rules: SessionRules,
    pub opponents: OpponentConfig,
    pub attack_kind: AttackKind,
    pub tokens: TokenTable,
}

impl Scenario {
    pub fn new(rules: SessionRules, opponents: OpponentConfig, attack_kind: AttackKind) -> Self {
        Scenario {
            rules,
            opponents,
            attack_kind,
            tokens: TokenTable::default(),
        }
    }

    pub fn max_score(&self) -> Score {
        compute_max_score(&self.opponents)
    }

    pub fn with_opponents(&self, opponents: OpponentConfig) -> Scenario {
        Scenario {
            opponents,
            ..self.clone()
        }
    }

    pub fn outcome_of<'g, I>(&self, genes: I) -> Result<Option<SessionOutcome>, EngineError>
    where
        I: IntoIterator<Item = &'g Gene>,
    {
        let genes: Vec<&Gene> = genes.into_iter().collect();
        if genes.is_empty() {
            return Ok(None);
        }
        let actions: Vec<_> = genes.iter().map(|g| g.actions(&self.tokens)).collect();
        let team: Vec<TeamMember<'_>> = genes
            .iter()
            .zip(&actions)
            .map(|(g, a)| TeamMember {
                actions: a,
                start: g.start(),
                attack_kind: self.attack_kind,
            })
            .collect();
        run_session(&team, &self.opponents, &self.rules).map(Some)
    }

    /// Score of an arbitrary subset of genes; an empty team scores 0.
    pub fn score_genes<'g, I>(&self, genes: I) -> Result<Score, EngineError>
    where
        I: IntoIterator<Item = &'g Gene>,
    {
        Ok(self.outcome_of(genes)?.map_or(0, |o| o.score))
    }

    pub fn outcome(&self, genome: &Genome) -> Result<SessionOutcome, EngineError> {
        Ok(self.outcome_of(genome.genes())?.expect("genomes are never empty"))
    }

    pub fn score(&self, genome: &Genome) -> Result<Score, EngineError> {
        self.score_genes(genome.genes())
    }

    pub fn trace(&self, genome: &Genome) -> Result<SessionTrace, EngineError> {
        let actions = genome.decode(&self.tokens);
        let team: Vec<TeamMember<'_>> = genome
            .genes()
            .iter()
            .zip(&actions)
            .map(|(g, a)| TeamMember {
                actions: a,
                start: g.start(),
                attack_kind: self.attack_kind,
            })
            .collect();
        run_session_traced(&team, &self.opponents, &self.rules)
    }
}
