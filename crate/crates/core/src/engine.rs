//! Deterministic simulation of one Quandary Den session.
//!
//! A session places a team of player characters and a set of stationary
//! opponents on a square grid with hard edges. Each tick, every living player
//! executes the next action from its list in priority order, then every
//! living opponent fires one ranged attack along its fixed direction. Each
//! action is fully resolved (including deaths) before the next one starts, and
//! the termination conditions are checked after every resolution.
//!
//! The score of a session is the damage dealt to opponents minus the health
//! lost by players, so a flawless win scores exactly [`compute_max_score`].

use std::fmt;

use thiserror::Error;

pub type Score = i64;

/// Health removed by one successful attack of any kind.
pub const ATTACK_DAMAGE: u32 = 1;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error("team is empty")]
    EmptyTeam,
    #[error("player {index} has an empty action list")]
    EmptyActions { index: usize },
    #[error("{what} position ({x},{y}) is outside the {size}x{size} grid")]
    OffGrid {
        what: &'static str,
        x: i32,
        y: i32,
        size: usize,
    },
    #[error("grid size must be at least 2, got {0}")]
    GridTooSmall(usize),
    #[error("max_ticks must be positive")]
    NoTicks,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Up,
    Down,
    Left,
    Right,
}

impl Direction {
    pub const ALL: [Direction; 4] = [
        Direction::Up,
        Direction::Down,
        Direction::Left,
        Direction::Right,
    ];

    /// Grid delta; `y` grows upwards.
    pub fn delta(self) -> (i32, i32) {
        match self {
            Direction::Up => (0, 1),
            Direction::Down => (0, -1),
            Direction::Left => (-1, 0),
            Direction::Right => (1, 0),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Direction::Up => "up",
            Direction::Down => "down",
            Direction::Left => "left",
            Direction::Right => "right",
        }
    }

    pub fn parse(s: &str) -> Option<Direction> {
        match s {
            "up" => Some(Direction::Up),
            "down" => Some(Direction::Down),
            "left" => Some(Direction::Left),
            "right" => Some(Direction::Right),
            _ => None,
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verb {
    Move,
    Attack,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Action {
    pub direction: Direction,
    pub verb: Verb,
}

impl Action {
    pub const fn new(verb: Verb, direction: Direction) -> Self {
        Action { direction, verb }
    }

    pub const fn moving(direction: Direction) -> Self {
        Action::new(Verb::Move, direction)
    }

    pub const fn attack(direction: Direction) -> Self {
        Action::new(Verb::Attack, direction)
    }
}

impl fmt::Display for Action {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verb = match self.verb {
            Verb::Move => "move",
            Verb::Attack => "attack",
        };
        write!(f, "{verb}-{}", self.direction)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AttackKind {
    Melee,
    Ranged,
}

impl AttackKind {
    pub fn name(self) -> &'static str {
        match self {
            AttackKind::Melee => "melee",
            AttackKind::Ranged => "ranged",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Position {
    pub x: i32,
    pub y: i32,
}

impl Position {
    pub const fn new(x: i32, y: i32) -> Self {
        Position { x, y }
    }

    pub fn step(self, direction: Direction) -> Position {
        let (dx, dy) = direction.delta();
        Position::new(self.x + dx, self.y + dy)
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GridConfig {
    pub size: usize,
    pub max_ticks: usize,
}

impl Default for GridConfig {
    fn default() -> Self {
        GridConfig {
            size: 8,
            max_ticks: 256,
        }
    }
}

impl GridConfig {
    pub fn contains(&self, p: Position) -> bool {
        let n = self.size as i32;
        p.x >= 0 && p.y >= 0 && p.x < n && p.y < n
    }

    /// The numbered start positions 1..4: `(0,0)`, `(n-1,n-1)`, `(0,n-1)`,
    /// `(n-1,0)`.
    pub fn corners(&self) -> [Position; 4] {
        let m = self.size as i32 - 1;
        [
            Position::new(0, 0),
            Position::new(m, m),
            Position::new(0, m),
            Position::new(m, 0),
        ]
    }

    pub fn validate(&self) -> Result<(), EngineError> {
        if self.size < 2 {
            return Err(EngineError::GridTooSmall(self.size));
        }
        if self.max_ticks == 0 {
            return Err(EngineError::NoTicks);
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct OpponentSpec {
    pub position: Position,
    pub fire_direction: Direction,
    pub health: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct OpponentConfig {
    pub opponents: Vec<OpponentSpec>,
}

pub const DEFAULT_OPPONENT_HEALTH: u32 = 3;
pub const DEFAULT_PLAYER_HEALTH: u32 = 5;

impl OpponentConfig {
    pub fn new(opponents: Vec<OpponentSpec>) -> Self {
        OpponentConfig { opponents }
    }

    /// Four opponents on the interior ring of the default 8x8 arena.
    pub fn default_ring() -> Self {
        let ring = [
            (Position::new(2, 2), Direction::Right),
            (Position::new(5, 2), Direction::Down),
            (Position::new(5, 5), Direction::Left),
            (Position::new(2, 5), Direction::Up),
        ];
        OpponentConfig::new(
            ring.iter()
                .map(|&(position, fire_direction)| OpponentSpec {
                    position,
                    fire_direction,
                    health: DEFAULT_OPPONENT_HEALTH,
                })
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.opponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.opponents.is_empty()
    }

    pub fn with_health(mut self, health: u32) -> Self {
        for o in &mut self.opponents {
            o.health = health;
        }
        self
    }
}

/// Session-wide rules shared by every session in an experiment.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SessionRules {
    pub grid: GridConfig,
    pub friendly_fire: bool,
    pub player_health: u32,
}

impl Default for SessionRules {
    fn default() -> Self {
        SessionRules {
            grid: GridConfig::default(),
            friendly_fire: false,
            player_health: DEFAULT_PLAYER_HEALTH,
        }
    }
}

/// One player character as handed to the engine.
#[derive(Clone, Copy, Debug)]
pub struct TeamMember<'a> {
    pub actions: &'a [Action],
    pub start: Position,
    pub attack_kind: AttackKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Player,
    Opponent,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    /// Players take ids `0..players`, opponents follow in configuration order.
    pub id: usize,
    pub side: Side,
    pub attack_kind: AttackKind,
    pub position: Position,
    pub health: u32,
    /// Lower resolves earlier and is hit first when sharing a square.
    pub priority: usize,
    pub fire_direction: Option<Direction>,
}

impl Character {
    pub fn alive(&self) -> bool {
        self.health > 0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RayHit {
    Character(usize),
    Boundary,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EndReason {
    OpponentsDepleted,
    PlayersDepleted,
    ActionsExhausted,
}

impl EndReason {
    pub fn name(self) -> &'static str {
        match self {
            EndReason::OpponentsDepleted => "opponents_depleted",
            EndReason::PlayersDepleted => "players_depleted",
            EndReason::ActionsExhausted => "actions_exhausted",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SessionOutcome {
    pub score: Score,
    pub ticks_elapsed: usize,
    pub end_reason: EndReason,
    pub damage_to_opponents: u64,
    pub player_health_lost: u64,
    /// Indexed by character id.
    pub final_health: Vec<u32>,
}

/// The mutable grid state of a running session.
#[derive(Clone, Debug)]
pub struct SessionState {
    pub grid: GridConfig,
    pub friendly_fire: bool,
    pub characters: Vec<Character>,
    pub players: usize,
}

impl SessionState {
    pub fn new(
        team: &[TeamMember<'_>],
        opponents: &OpponentConfig,
        rules: &SessionRules,
    ) -> Result<Self, EngineError> {
        rules.grid.validate()?;
        if team.is_empty() {
            return Err(EngineError::EmptyTeam);
        }
        let size = rules.grid.size;
        let mut characters = Vec::with_capacity(team.len() + opponents.len());
        for (index, member) in team.iter().enumerate() {
            if member.actions.is_empty() {
                return Err(EngineError::EmptyActions { index });
            }
            if !rules.grid.contains(member.start) {
                return Err(EngineError::OffGrid {
                    what: "player start",
                    x: member.start.x,
                    y: member.start.y,
                    size,
                });
            }
            characters.push(Character {
                id: index,
                side: Side::Player,
                attack_kind: member.attack_kind,
                position: member.start,
                health: rules.player_health,
                priority: index,
                fire_direction: None,
            });
        }
        for spec in &opponents.opponents {
            if !rules.grid.contains(spec.position) {
                return Err(EngineError::OffGrid {
                    what: "opponent",
                    x: spec.position.x,
                    y: spec.position.y,
                    size,
                });
            }
            let id = characters.len();
            characters.push(Character {
                id,
                side: Side::Opponent,
                attack_kind: AttackKind::Ranged,
                position: spec.position,
                health: spec.health,
                priority: id,
                fire_direction: Some(spec.fire_direction),
            });
        }
        Ok(SessionState {
            grid: rules.grid,
            friendly_fire: rules.friendly_fire,
            characters,
            players: team.len(),
        })
    }

    fn can_hit(&self, shooter: &Character, target: &Character) -> bool {
        if shooter.id == target.id || !target.alive() {
            return false;
        }
        match (shooter.side, target.side) {
            (Side::Player, Side::Player) => self.friendly_fire,
            (Side::Player, Side::Opponent) | (Side::Opponent, Side::Player) => true,
            (Side::Opponent, Side::Opponent) => false,
        }
    }

    /// First eligible character strictly beyond `origin` along `direction`.
    /// Characters the shooter cannot damage are transparent.
    pub fn trace_ray(&self, origin: Position, direction: Direction, shooter: usize) -> RayHit {
        let shooter = &self.characters[shooter];
        let mut best: Option<(i32, usize, usize)> = None;
        for c in &self.characters {
            if !self.can_hit(shooter, c) {
                continue;
            }
            let dx = c.position.x - origin.x;
            let dy = c.position.y - origin.y;
            let distance = match direction {
                Direction::Right if dy == 0 && dx > 0 => dx,
                Direction::Left if dy == 0 && dx < 0 => -dx,
                Direction::Up if dx == 0 && dy > 0 => dy,
                Direction::Down if dx == 0 && dy < 0 => -dy,
                _ => continue,
            };
            let key = (distance, c.priority, c.id);
            if best.is_none_or(|b| (key.0, key.1) < (b.0, b.1)) {
                best = Some(key);
            }
        }
        best.map_or(RayHit::Boundary, |(_, _, id)| RayHit::Character(id))
    }

    /// Highest-priority eligible character on the square adjacent to `origin`.
    pub fn melee_target(&self, origin: Position, direction: Direction, shooter: usize) -> Option<usize> {
        let square = origin.step(direction);
        if !self.grid.contains(square) {
            return None;
        }
        let shooter = &self.characters[shooter];
        self.characters
            .iter()
            .filter(|c| c.position == square && self.can_hit(shooter, c))
            .min_by_key(|c| c.priority)
            .map(|c| c.id)
    }

    fn alive_count(&self, side: Side) -> usize {
        self.characters.iter().filter(|c| c.side == side && c.alive()).count()
    }
}

/// What happened when one action was resolved.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Resolution {
    Moved(Position),
    Blocked,
    Hit { target: usize, before: u32, after: u32 },
    Miss,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceEvent {
    pub tick: usize,
    pub actor: usize,
    pub action: Action,
    pub resolution: Resolution,
}

/// Line-per-action record of a session; see the README for the format.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SessionTrace {
    pub players: usize,
    pub events: Vec<TraceEvent>,
    pub outcome: Option<SessionOutcome>,
}

impl SessionTrace {
    fn label(&self, id: usize) -> String {
        if id < self.players {
            format!("P{id}")
        } else {
            format!("O{}", id - self.players)
        }
    }
}

impl fmt::Display for SessionTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.events {
            let actor = self.label(e.actor);
            let action = if e.actor < self.players {
                e.action.to_string()
            } else {
                format!("fire-{}", e.action.direction)
            };
            match &e.resolution {
                Resolution::Moved(p) => writeln!(f, "{} {actor} {action} moved:{},{} -", e.tick, p.x, p.y)?,
                Resolution::Blocked => writeln!(f, "{} {actor} {action} blocked -", e.tick)?,
                Resolution::Miss => writeln!(f, "{} {actor} {action} miss -", e.tick)?,
                Resolution::Hit { target, before, after } => {
                    let t = self.label(*target);
                    writeln!(f, "{} {actor} {action} hit:{t} {t}:{before}>{after}", e.tick)?
                }
            }
        }
        if let Some(o) = &self.outcome {
            writeln!(
                f,
                "end {} ticks={} score={} dealt={} lost={}",
                o.end_reason.name(),
                o.ticks_elapsed,
                o.score,
                o.damage_to_opponents,
                o.player_health_lost
            )?;
        }
        Ok(())
    }
}

/// Score of a flawless win: the sum of opponent starting health.
pub fn compute_max_score(opponents: &OpponentConfig) -> Score {
    opponents.opponents.iter().map(|o| Score::from(o.health)).sum()
}

pub fn run_session(
    team: &[TeamMember<'_>],
    opponents: &OpponentConfig,
    rules: &SessionRules,
) -> Result<SessionOutcome, EngineError> {
    simulate(team, opponents, rules, None)
}

pub fn run_session_traced(
    team: &[TeamMember<'_>],
    opponents: &OpponentConfig,
    rules: &SessionRules,
) -> Result<SessionTrace, EngineError> {
    let mut trace = SessionTrace {
        players: team.len(),
        ..SessionTrace::default()
    };
    let outcome = simulate(team, opponents, rules, Some(&mut trace.events))?;
    trace.outcome = Some(outcome);
    Ok(trace)
}

struct Ledger {
    dealt: u64,
    lost: u64,
    players_alive: usize,
    opponents_alive: usize,
}

impl Ledger {
    fn apply(&mut self, state: &mut SessionState, target: usize) -> (u32, u32) {
        let c = &mut state.characters[target];
        let before = c.health;
        let after = before.saturating_sub(ATTACK_DAMAGE);
        c.health = after;
        let delta = u64::from(before - after);
        let died = usize::from(before > 0 && after == 0);
        match c.side {
            Side::Player => {
                self.lost += delta;
                self.players_alive -= died;
            }
            Side::Opponent => {
                self.dealt += delta;
                self.opponents_alive -= died;
            }
        }
        (before, after)
    }

    fn check_end(&self) -> Option<EndReason> {
        if self.opponents_alive == 0 {
            Some(EndReason::OpponentsDepleted)
        } else if self.players_alive == 0 {
            Some(EndReason::PlayersDepleted)
        } else {
            None
        }
    }
}

fn simulate(
    team: &[TeamMember<'_>],
    opponents: &OpponentConfig,
    rules: &SessionRules,
    mut trace: Option<&mut Vec<TraceEvent>>,
) -> Result<SessionOutcome, EngineError> {
    let mut state = SessionState::new(team, opponents, rules)?;
    let mut ledger = Ledger {
        dealt: 0,
        lost: 0,
        players_alive: state.alive_count(Side::Player),
        opponents_alive: state.alive_count(Side::Opponent),
    };
    let players = state.players;
    let total = state.characters.len();

    let mut end = ledger.check_end();
    let mut ticks = 0;
    'ticks: while end.is_none() {
        let tick = ticks;
        ticks += 1;
        for id in 0..total {
            let actor = &state.characters[id];
            if !actor.alive() {
                continue;
            }
            let action = if id < players {
                match team[id].actions.get(tick) {
                    Some(&a) => a,
                    None => continue,
                }
            } else {
                Action::attack(actor.fire_direction.expect("opponents always fire"))
            };
            let origin = actor.position;
            let resolution = match action.verb {
                Verb::Move => {
                    let next = origin.step(action.direction);
                    if state.grid.contains(next) {
                        state.characters[id].position = next;
                        Resolution::Moved(next)
                    } else {
                        Resolution::Blocked
                    }
                }
                Verb::Attack => {
                    let target = match actor.attack_kind {
                        AttackKind::Melee => state.melee_target(origin, action.direction, id),
                        AttackKind::Ranged => match state.trace_ray(origin, action.direction, id) {
                            RayHit::Character(t) => Some(t),
                            RayHit::Boundary => None,
                        },
                    };
                    match target {
                        Some(target) => {
                            let (before, after) = ledger.apply(&mut state, target);
                            Resolution::Hit { target, before, after }
                        }
                        None => Resolution::Miss,
                    }
                }
            };
            if let Some(events) = trace.as_deref_mut() {
                events.push(TraceEvent {
                    tick: ticks,
                    actor: id,
                    action,
                    resolution,
                });
            }
            end = ledger.check_end();
            if end.is_some() {
                break 'ticks;
            }
        }
        let exhausted = state.characters[..players]
            .iter()
            .zip(team)
            .all(|(c, m)| !c.alive() || m.actions.len() <= ticks);
        if exhausted || ticks >= rules.grid.max_ticks {
            end = Some(EndReason::ActionsExhausted);
        }
    }

    Ok(SessionOutcome {
        score: ledger.dealt as Score - ledger.lost as Score,
        ticks_elapsed: ticks,
        end_reason: end.expect("loop exits with an end reason"),
        damage_to_opponents: ledger.dealt,
        player_health_lost: ledger.lost,
        final_health: state.characters.iter().map(|c| c.health).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rules(size: usize, friendly_fire: bool) -> SessionRules {
        SessionRules {
            grid: GridConfig { size, max_ticks: 256 },
            friendly_fire,
            player_health: DEFAULT_PLAYER_HEALTH,
        }
    }

    fn opp(x: i32, y: i32, dir: Direction, health: u32) -> OpponentSpec {
        OpponentSpec {
            position: Position::new(x, y),
            fire_direction: dir,
            health,
        }
    }

    #[test]
    fn ranged_kill_ends_on_first_tick() {
        let actions = [Action::attack(Direction::Right)];
        let team = [TeamMember {
            actions: &actions,
            start: Position::new(0, 0),
            attack_kind: AttackKind::Ranged,
        }];
        let opps = OpponentConfig::new(vec![opp(2, 0, Direction::Up, 1)]);
        let out = run_session(&team, &opps, &rules(3, false)).unwrap();
        assert_eq!(out.score, 1);
        assert_eq!(out.ticks_elapsed, 1);
        assert_eq!(out.end_reason, EndReason::OpponentsDepleted);
        assert_eq!(out.final_health, vec![DEFAULT_PLAYER_HEALTH, 0]);
    }

    #[test]
    fn moves_only_away_from_fire_score_zero() {
        let actions = [
            Action::moving(Direction::Down),
            Action::moving(Direction::Left),
            Action::moving(Direction::Up),
        ];
        let team = [TeamMember {
            actions: &actions,
            start: Position::new(0, 0),
            attack_kind: AttackKind::Melee,
        }];
        // Fires along row 7, which the player never enters.
        let opps = OpponentConfig::new(vec![opp(7, 7, Direction::Left, 3)]);
        let out = run_session(&team, &opps, &rules(8, true)).unwrap();
        assert_eq!(out.score, 0);
        assert_eq!(out.end_reason, EndReason::ActionsExhausted);
        assert_eq!(out.ticks_elapsed, 3);
    }

    #[test]
    fn friendly_fire_melee_costs_one() {
        let first = [Action::attack(Direction::Up)];
        let second = [Action::moving(Direction::Left)];
        let team = [
            TeamMember {
                actions: &first,
                start: Position::new(3, 4),
                attack_kind: AttackKind::Melee,
            },
            TeamMember {
                actions: &second,
                start: Position::new(3, 5),
                attack_kind: AttackKind::Melee,
            },
        ];
        let opps = OpponentConfig::new(vec![opp(7, 0, Direction::Right, 3)]);
        let out = run_session(&team, &opps, &rules(8, true)).unwrap();
        assert_eq!(out.score, -1);
        assert_eq!(out.player_health_lost, 1);
        assert_eq!(out.end_reason, EndReason::ActionsExhausted);

        let safe = run_session(&team, &opps, &rules(8, false)).unwrap();
        assert_eq!(safe.score, 0);
    }

    #[test]
    fn ray_to_boundary_on_empty_row() {
        let actions = [Action::attack(Direction::Right)];
        let team = [TeamMember {
            actions: &actions,
            start: Position::new(0, 3),
            attack_kind: AttackKind::Ranged,
        }];
        let opps = OpponentConfig::new(vec![opp(7, 0, Direction::Up, 3)]);
        let state = SessionState::new(&team, &opps, &rules(8, false)).unwrap();
        assert_eq!(state.trace_ray(Position::new(0, 3), Direction::Right, 0), RayHit::Boundary);
    }

    #[test]
    fn ray_picks_higher_priority_of_stacked_pair() {
        let actions = [Action::attack(Direction::Right)];
        let member = |x, y| TeamMember {
            actions: &actions,
            start: Position::new(x, y),
            attack_kind: AttackKind::Ranged,
        };
        // Two teammates stacked at (4,3) under friendly fire.
        let team = [member(0, 3), member(4, 3), member(4, 3)];
        let opps = OpponentConfig::new(vec![opp(4, 3, Direction::Up, 3)]);
        let state = SessionState::new(&team, &opps, &rules(8, true)).unwrap();
        assert_eq!(state.trace_ray(Position::new(0, 3), Direction::Right, 0), RayHit::Character(1));

        // Two opponents stacked: the first configured one wins.
        let opps = OpponentConfig::new(vec![opp(4, 3, Direction::Up, 3), opp(4, 3, Direction::Up, 3)]);
        let state = SessionState::new(&team[..1], &opps, &rules(8, false)).unwrap();
        assert_eq!(state.trace_ray(Position::new(0, 3), Direction::Right, 0), RayHit::Character(1));
    }

    #[test]
    fn safe_mode_rays_pass_through_teammates() {
        let actions = [Action::attack(Direction::Right)];
        let team = [
            TeamMember {
                actions: &actions,
                start: Position::new(0, 3),
                attack_kind: AttackKind::Ranged,
            },
            TeamMember {
                actions: &actions,
                start: Position::new(2, 3),
                attack_kind: AttackKind::Ranged,
            },
        ];
        let opps = OpponentConfig::new(vec![opp(5, 3, Direction::Up, 3)]);
        let state = SessionState::new(&team, &opps, &rules(8, false)).unwrap();
        assert_eq!(state.trace_ray(Position::new(0, 3), Direction::Right, 0), RayHit::Character(2));
        let state = SessionState::new(&team, &opps, &rules(8, true)).unwrap();
        assert_eq!(state.trace_ray(Position::new(0, 3), Direction::Right, 0), RayHit::Character(1));
    }

    #[test]
    fn opponents_fire_through_each_other() {
        let actions = [Action::moving(Direction::Up)];
        let team = [TeamMember {
            actions: &actions,
            start: Position::new(7, 4),
            attack_kind: AttackKind::Melee,
        }];
        let opps = OpponentConfig::new(vec![opp(0, 4, Direction::Right, 3), opp(3, 4, Direction::Up, 3)]);
        let state = SessionState::new(&team, &opps, &rules(8, false)).unwrap();
        assert_eq!(state.trace_ray(Position::new(0, 4), Direction::Right, 1), RayHit::Character(0));
    }

    #[test]
    fn boundary_move_is_noop() {
        let actions = [Action::moving(Direction::Left), Action::moving(Direction::Down)];
        let team = [TeamMember {
            actions: &actions,
            start: Position::new(0, 0),
            attack_kind: AttackKind::Melee,
        }];
        let opps = OpponentConfig::new(vec![opp(7, 7, Direction::Right, 3)]);
        let trace = run_session_traced(&team, &opps, &rules(8, false)).unwrap();
        assert!(trace.events.iter().filter(|e| e.actor == 0).all(|e| e.resolution == Resolution::Blocked));
        assert_eq!(trace.outcome.unwrap().ticks_elapsed, 2);
    }

    #[test]
    fn melee_into_empty_square_is_noop() {
        let actions = [Action::attack(Direction::Down)];
        let team = [TeamMember {
            actions: &actions,
            start: Position::new(0, 0),
            attack_kind: AttackKind::Melee,
        }];
        let opps = OpponentConfig::new(vec![opp(0, 2, Direction::Right, 3)]);
        let out = run_session(&team, &opps, &rules(8, false)).unwrap();
        assert_eq!(out.damage_to_opponents, 0);
        assert_eq!(out.ticks_elapsed, 1);
    }

    #[test]
    fn dead_players_stop_acting() {
        // Player sits in the opponent's line of fire with 5 health and a long list.
        let actions = vec![Action::moving(Direction::Down); 20];
        let team = [TeamMember {
            actions: &actions,
            start: Position::new(3, 0),
            attack_kind: AttackKind::Melee,
        }];
        let opps = OpponentConfig::new(vec![opp(0, 0, Direction::Right, 3)]);
        let out = run_session(&team, &opps, &rules(8, false)).unwrap();
        assert_eq!(out.end_reason, EndReason::PlayersDepleted);
        assert_eq!(out.ticks_elapsed, DEFAULT_PLAYER_HEALTH as usize);
        assert_eq!(out.score, -(DEFAULT_PLAYER_HEALTH as Score));
    }

    #[test]
    fn configuration_errors() {
        let actions = [Action::moving(Direction::Up)];
        let opps = OpponentConfig::default_ring();
        assert_eq!(run_session(&[], &opps, &SessionRules::default()), Err(EngineError::EmptyTeam));
        let off = [TeamMember {
            actions: &actions,
            start: Position::new(8, 0),
            attack_kind: AttackKind::Melee,
        }];
        assert!(matches!(
            run_session(&off, &opps, &SessionRules::default()),
            Err(EngineError::OffGrid { .. })
        ));
        let empty = [TeamMember {
            actions: &[],
            start: Position::new(0, 0),
            attack_kind: AttackKind::Melee,
        }];
        assert_eq!(
            run_session(&empty, &opps, &SessionRules::default()),
            Err(EngineError::EmptyActions { index: 0 })
        );
    }

    #[test]
    fn max_score_sums_health() {
        assert_eq!(compute_max_score(&OpponentConfig::default_ring()), 12);
        assert_eq!(compute_max_score(&OpponentConfig::default()), 0);
        let two = OpponentConfig::new(vec![opp(0, 0, Direction::Up, 1), opp(1, 1, Direction::Up, 5)]);
        assert_eq!(compute_max_score(&two), 6);
    }

    #[test]
    fn trace_format_is_stable() {
        let actions = [Action::moving(Direction::Up), Action::attack(Direction::Right)];
        let team = [TeamMember {
            actions: &actions,
            start: Position::new(0, 0),
            attack_kind: AttackKind::Ranged,
        }];
        let opps = OpponentConfig::new(vec![opp(2, 1, Direction::Down, 1)]);
        let trace = run_session_traced(&team, &opps, &rules(3, false)).unwrap();
        let expected = "\
1 P0 move-up moved:0,1 -
1 O0 fire-down miss -
2 P0 attack-right hit:O0 O0:1>0
end opponents_depleted ticks=2 score=1 dealt=1 lost=0
";
        assert_eq!(trace.to_string(), expected);
    }
}
