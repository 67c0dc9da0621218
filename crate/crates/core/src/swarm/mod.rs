//! Swarm state and dynamics.
//!
//! A [`Swarm`] owns its particles and a seeded ChaCha8 stream. Each call to
//! [`Swarm::step`] performs one sweep over the particles under the
//! configured [`Schedule`]:
//!
//! * synchronous: every guide and velocity is computed from the bests as
//!   they stood when the sweep began; personal bests refresh at the end.
//! * asynchronous: particles are handled in index order and each refreshes
//!   its personal best right after its evaluation, so later particles in
//!   the same sweep already see it.
//!
//! Before every move the swarm consults [`BudgetedEvaluator::halt`]. A
//! sweep that halts leaves the remaining particles where they were, so the
//! evaluator's count is always `swarm_size + moves`.

mod config;
mod particle;

pub use config::{
    constriction_coefficient, Bounds, ConfigError, Model, Schedule, SwarmConfig, Topology,
};
pub use particle::{move_particle, refresh_best, update_velocity, Particle, VelocityRule};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::objective::{BudgetedEvaluator, EvalError, Halt, ObjectiveError, ObjectiveFn, Point};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SwarmError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Objective(#[from] ObjectiveError),
    #[error("run halted during initialization: {0:?}")]
    HaltedDuringInit(Halt),
}

/// Result of one sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StepOutcome {
    /// Particles moved and evaluated in this sweep.
    pub evaluated: usize,
    /// Set when the evaluator refused further work during the sweep.
    pub halt: Option<Halt>,
}

/// Index of the particle whose personal best steers particle `i`.
///
/// Ring candidates are `{i−1, i, i+1}` (wrapping), star candidates are all
/// particles; the selfless model drops `i` from either set. The lowest
/// index wins ties.
pub fn neighborhood_best(p_fitness: &[f64], i: usize, topology: Topology, model: Model) -> usize {
    let n = p_fitness.len();
    assert!(i < n, "particle index {i} out of range for swarm of {n}");
    let exclude_self = model == Model::Selfless;
    let mut best: Option<usize> = None;
    let mut consider = |j: usize| {
        if exclude_self && j == i {
            return;
        }
        match best {
            Some(b) if p_fitness[j] > p_fitness[b] => {}
            Some(b) if p_fitness[j] == p_fitness[b] && j > b => {}
            _ => best = Some(j),
        }
    };
    match topology {
        Topology::Ring => {
            for j in [(i + n - 1) % n, i, (i + 1) % n] {
                consider(j);
            }
        }
        Topology::Star => (0..n).for_each(&mut consider),
    }
    best.expect("neighborhood has at least one candidate")
}

#[derive(Debug, Clone)]
pub struct Swarm {
    particles: Vec<Particle>,
    config: SwarmConfig,
    rng: ChaCha8Rng,
    moves: u64,
    social_lookups: u64,
    last_guides: Vec<Option<usize>>,
}

impl Swarm {
    /// Uniform positions inside the bounds, zero velocities, and one
    /// evaluation per particle in index order.
    pub fn init<F: ObjectiveFn>(
        config: SwarmConfig,
        seed: u64,
        ev: &mut BudgetedEvaluator<F>,
    ) -> Result<Swarm, SwarmError> {
        config.validate()?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut particles = Vec::with_capacity(config.swarm_size);
        for _ in 0..config.swarm_size {
            if let Some(h) = ev.halt() {
                return Err(SwarmError::HaltedDuringInit(h));
            }
            let coords: Vec<f64> = config
                .bounds
                .iter()
                .map(|b| rng.gen_range(b.low..b.high))
                .collect();
            let x = Point::new(coords)?;
            let fitness = evaluate(ev, &x)?;
            particles.push(Particle::at_rest(x, fitness));
        }
        let n = particles.len();
        Ok(Swarm {
            particles,
            config,
            rng,
            moves: 0,
            social_lookups: 0,
            last_guides: vec![None; n],
        })
    }

    pub fn config(&self) -> &SwarmConfig {
        &self.config
    }

    pub fn particles(&self) -> &[Particle] {
        &self.particles
    }

    pub fn len(&self) -> usize {
        self.particles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.particles.is_empty()
    }

    /// Particle moves performed since initialization.
    pub fn moves(&self) -> u64 {
        self.moves
    }

    /// How many times a velocity update consulted the neighborhood.
    pub fn social_lookups(&self) -> u64 {
        self.social_lookups
    }

    /// Guide index used by each particle in the most recent sweep; `None`
    /// for particles that did not move or did not consult a neighborhood.
    pub fn last_guides(&self) -> &[Option<usize>] {
        &self.last_guides
    }

    pub fn p_fitness(&self) -> Vec<f64> {
        self.particles.iter().map(|p| p.p_fitness).collect()
    }

    pub fn neighborhood_best(&self, i: usize) -> usize {
        neighborhood_best(
            &self.p_fitness(),
            i,
            self.config.topology,
            self.config.model,
        )
    }

    /// Best particle: minimal personal-best fitness, lowest index on ties.
    pub fn global_best(&self) -> (usize, &Point, f64) {
        let mut best = 0;
        for (i, part) in self.particles.iter().enumerate().skip(1) {
            if part.p_fitness < self.particles[best].p_fitness {
                best = i;
            }
        }
        let b = &self.particles[best];
        (best, &b.p, b.p_fitness)
    }

    pub fn step<F: ObjectiveFn>(
        &mut self,
        ev: &mut BudgetedEvaluator<F>,
    ) -> Result<StepOutcome, SwarmError> {
        match self.config.schedule {
            Schedule::Synchronous => self.step_synchronous(ev),
            Schedule::Asynchronous => self.step_asynchronous(ev),
        }
    }

    /// One sweep with bests frozen at the start of the sweep.
    pub fn step_synchronous<F: ObjectiveFn>(
        &mut self,
        ev: &mut BudgetedEvaluator<F>,
    ) -> Result<StepOutcome, SwarmError> {
        self.last_guides.fill(None);
        if let Some(h) = ev.halt() {
            return Ok(StepOutcome {
                evaluated: 0,
                halt: Some(h),
            });
        }

        // Velocities only read x, v, p of the particle and p of its guide;
        // none of those change before the refresh at the end of the sweep,
        // so computing them all up front is the frozen-best semantics.
        let frozen = self.p_fitness();
        let n = self.particles.len();
        let mut guides = Vec::with_capacity(n);
        let mut velocities = Vec::with_capacity(n);
        for i in 0..n {
            let g = self.guide_for(&frozen, i);
            guides.push(g);
            let guide_pos = &self.particles[g.unwrap_or(i)].p;
            velocities.push(update_velocity(
                &self.particles[i],
                guide_pos,
                &self.config,
                &mut self.rng,
            ));
        }

        let mut evaluated = 0;
        let mut halt = None;
        for (i, v) in velocities.into_iter().enumerate() {
            if let Some(h) = ev.halt() {
                halt = Some(h);
                break;
            }
            let part = &mut self.particles[i];
            part.v = v;
            move_particle(part);
            self.moves += 1;
            self.last_guides[i] = guides[i];
            part.x_fitness = evaluate(ev, &part.x)?;
            evaluated += 1;
        }
        for part in &mut self.particles[..evaluated] {
            refresh_best(part);
        }
        Ok(StepOutcome {
            evaluated,
            halt: halt.or_else(|| ev.halt()),
        })
    }

    /// One sweep in index order, refreshing each best immediately.
    pub fn step_asynchronous<F: ObjectiveFn>(
        &mut self,
        ev: &mut BudgetedEvaluator<F>,
    ) -> Result<StepOutcome, SwarmError> {
        self.last_guides.fill(None);
        let mut evaluated = 0;
        for i in 0..self.particles.len() {
            if let Some(h) = ev.halt() {
                return Ok(StepOutcome {
                    evaluated,
                    halt: Some(h),
                });
            }
            let current = self.p_fitness();
            let g = self.guide_for(&current, i);
            let guide_pos = &self.particles[g.unwrap_or(i)].p;
            let v = update_velocity(&self.particles[i], guide_pos, &self.config, &mut self.rng);
            let part = &mut self.particles[i];
            part.v = v;
            move_particle(part);
            self.moves += 1;
            self.last_guides[i] = g;
            part.x_fitness = evaluate(ev, &part.x)?;
            refresh_best(part);
            evaluated += 1;
        }
        Ok(StepOutcome {
            evaluated,
            halt: ev.halt(),
        })
    }

    /// The guide index, or `None` when the model has no social term.
    fn guide_for(&mut self, p_fitness: &[f64], i: usize) -> Option<usize> {
        if self.config.phi2 == 0.0 {
            return None;
        }
        self.social_lookups += 1;
        Some(neighborhood_best(
            p_fitness,
            i,
            self.config.topology,
            self.config.model,
        ))
    }
}

fn evaluate<F: ObjectiveFn>(ev: &mut BudgetedEvaluator<F>, x: &Point) -> Result<f64, SwarmError> {
    match ev.evaluate(x) {
        Ok(f) => Ok(f),
        Err(EvalError::Objective(e)) => Err(SwarmError::Objective(e)),
        // Callers check `halt()` first, so the budget cannot be spent here.
        Err(EvalError::BudgetExhausted { .. }) => unreachable!("evaluation past budget"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::objective::Objective;

    fn config(topology: Topology, schedule: Schedule) -> SwarmConfig {
        SwarmConfig {
            topology,
            schedule,
            ..SwarmConfig::default()
        }
    }

    #[test]
    fn star_picks_global_argmin() {
        let f = [5.0, 1.0, 3.0, 4.0];
        for i in 0..4 {
            assert_eq!(neighborhood_best(&f, i, Topology::Star, Model::Full), 1);
        }
    }

    #[test]
    fn ring_uses_window_of_three() {
        let f = [9.0, 2.0, 9.0, 9.0, 1.0];
        assert_eq!(neighborhood_best(&f, 2, Topology::Ring, Model::Full), 1);
        // wraps at both ends
        assert_eq!(neighborhood_best(&f, 0, Topology::Ring, Model::Full), 4);
        assert_eq!(neighborhood_best(&f, 4, Topology::Ring, Model::Full), 4);
        assert_eq!(neighborhood_best(&f, 3, Topology::Ring, Model::Full), 4);
    }

    #[test]
    fn selfless_excludes_own_index() {
        let f = [1.0, 5.0, 3.0];
        assert_eq!(neighborhood_best(&f, 0, Topology::Star, Model::Selfless), 2);
        assert_eq!(neighborhood_best(&f, 1, Topology::Star, Model::Selfless), 0);
        let ring = [1.0, 5.0, 3.0, 0.5];
        assert_eq!(
            neighborhood_best(&ring, 0, Topology::Ring, Model::Selfless),
            3
        );
        assert_eq!(
            neighborhood_best(&ring, 3, Topology::Ring, Model::Selfless),
            0
        );
    }

    #[test]
    fn ties_break_to_lowest_index() {
        let f = [0.2, 0.2, 0.2];
        assert_eq!(neighborhood_best(&f, 2, Topology::Star, Model::Full), 0);
        assert_eq!(neighborhood_best(&f, 0, Topology::Ring, Model::Full), 0);
        assert_eq!(neighborhood_best(&f, 0, Topology::Ring, Model::Selfless), 1);
    }

    #[test]
    fn init_consumes_one_evaluation_per_particle() {
        let mut ev = BudgetedEvaluator::new(Objective::SchafferF6, 4000);
        let swarm = Swarm::init(SwarmConfig::default(), 11, &mut ev).unwrap();
        assert_eq!(ev.used(), 30);
        assert_eq!(swarm.len(), 30);
        for p in swarm.particles() {
            assert_eq!(p.v, vec![0.0, 0.0]);
            assert_eq!(p.p, p.x);
            assert_eq!(p.p_fitness, p.x_fitness);
            assert_eq!(p.x_fitness, schaffer_f6_of(&p.x));
        }
    }

    fn schaffer_f6_of(p: &Point) -> f64 {
        crate::objective::schaffer_f6(p).unwrap()
    }

    #[test]
    fn init_is_deterministic() {
        let run = |seed| {
            let mut ev = BudgetedEvaluator::new(Objective::SchafferF6, 4000);
            Swarm::init(SwarmConfig::default(), seed, &mut ev)
                .unwrap()
                .particles()
                .to_vec()
        };
        assert_eq!(run(5), run(5));
        assert_ne!(run(5), run(6));
    }

    #[test]
    fn init_with_short_budget_halts() {
        let mut ev = BudgetedEvaluator::new(Objective::SchafferF6, 10);
        let err = Swarm::init(SwarmConfig::default(), 1, &mut ev).unwrap_err();
        assert_eq!(err, SwarmError::HaltedDuringInit(Halt::BudgetExhausted));
        assert_eq!(ev.used(), 10);
    }

    #[test]
    fn init_rejects_invalid_config() {
        let cfg = SwarmConfig {
            phi1: 0.0,
            ..SwarmConfig::default()
        };
        let mut ev = BudgetedEvaluator::new(Objective::SchafferF6, 4000);
        assert!(matches!(
            Swarm::init(cfg, 1, &mut ev),
            Err(SwarmError::Config(_))
        ));
        assert_eq!(ev.used(), 0);
    }

    #[test]
    fn synchronous_step_evaluates_every_particle() {
        let mut ev = BudgetedEvaluator::new(Objective::SchafferF6, 4000);
        let mut s = Swarm::init(config(Topology::Ring, Schedule::Synchronous), 3, &mut ev).unwrap();
        let out = s.step(&mut ev).unwrap();
        assert_eq!(
            out,
            StepOutcome {
                evaluated: 30,
                halt: None
            }
        );
        assert_eq!(ev.used(), 60);
    }

    #[test]
    fn synchronous_step_stops_at_budget() {
        let mut ev = BudgetedEvaluator::new(Objective::SchafferF6, 37);
        let mut s = Swarm::init(config(Topology::Star, Schedule::Synchronous), 3, &mut ev).unwrap();
        let out = s.step(&mut ev).unwrap();
        assert_eq!(out.evaluated, 7);
        assert_eq!(out.halt, Some(Halt::BudgetExhausted));
        assert_eq!(ev.used(), 37);
        assert_eq!(s.moves(), 7);
        let again = s.step(&mut ev).unwrap();
        assert_eq!(again.evaluated, 0);
    }

    #[test]
    fn asynchronous_step_with_one_evaluation_left() {
        let mut ev = BudgetedEvaluator::new(Objective::SchafferF6, 31);
        let mut s =
            Swarm::init(config(Topology::Star, Schedule::Asynchronous), 3, &mut ev).unwrap();
        let before = s.particles().to_vec();
        let out = s.step(&mut ev).unwrap();
        assert_eq!(out.evaluated, 1);
        assert_eq!(out.halt, Some(Halt::BudgetExhausted));
        assert_ne!(s.particles()[0].x, before[0].x);
        assert_eq!(&s.particles()[1..], &before[1..]);
    }

    #[test]
    fn cognition_never_consults_neighbors() {
        let cfg = SwarmConfig {
            model: Model::Cognition,
            phi2: 0.0,
            ..config(Topology::Star, Schedule::Asynchronous)
        };
        let mut ev = BudgetedEvaluator::new(Objective::SchafferF6, 4000);
        let mut s = Swarm::init(cfg, 9, &mut ev).unwrap();
        while s.step(&mut ev).unwrap().halt.is_none() {}
        assert_eq!(s.social_lookups(), 0);
        assert!(s.last_guides().iter().all(Option::is_none));
    }

    #[test]
    fn global_best_ties_and_argmin() {
        let mut ev = BudgetedEvaluator::new(Objective::SchafferF6, 4000);
        let cfg = SwarmConfig {
            swarm_size: 3,
            ..SwarmConfig::default()
        };
        let mut s = Swarm::init(cfg, 1, &mut ev).unwrap();
        for (part, f) in s.particles.iter_mut().zip([0.5, 0.2, 0.9]) {
            part.p_fitness = f;
        }
        assert_eq!(s.global_best().0, 1);
        s.particles[0].p_fitness = 0.2;
        assert_eq!(s.global_best().0, 0);
    }
}
