use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::objective::Point;

use super::config::SwarmConfig;

/// One candidate solution: current position `x` with velocity `v`, and the
/// best position `p` it has visited.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Particle {
    pub x: Point,
    pub v: Vec<f64>,
    pub p: Point,
    pub x_fitness: f64,
    pub p_fitness: f64,
}

impl Particle {
    /// A particle at rest whose personal best is its starting position.
    pub fn at_rest(x: Point, fitness: f64) -> Self {
        let n = x.dimension();
        Particle {
            p: x.clone(),
            x,
            v: vec![0.0; n],
            x_fitness: fitness,
            p_fitness: fitness,
        }
    }

    pub fn dimension(&self) -> usize {
        self.x.dimension()
    }
}

/// Coefficients of the velocity rule
/// `v' = χ(ωv + φ₁r₁(p − x) + φ₂r₂(g − x))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VelocityRule {
    pub chi: f64,
    pub omega: f64,
    pub phi1: f64,
    pub phi2: f64,
}

impl VelocityRule {
    pub fn from_config(config: &SwarmConfig) -> Self {
        VelocityRule {
            chi: config.chi(),
            omega: config.omega,
            phi1: config.phi1,
            phi2: config.phi2,
        }
    }

    /// Applies the rule with explicit per-dimension draws `r1`, `r2`.
    pub fn apply(&self, part: &Particle, guide: &Point, r1: &[f64], r2: &[f64]) -> Vec<f64> {
        let n = part.dimension();
        assert_eq!(guide.dimension(), n, "guide dimension mismatch");
        assert!(r1.len() == n && r2.len() == n, "draw length mismatch");
        let (x, p, g) = (part.x.coords(), part.p.coords(), guide.coords());
        (0..n)
            .map(|d| {
                self.chi
                    * (self.omega * part.v[d]
                        + self.phi1 * r1[d] * (p[d] - x[d])
                        + self.phi2 * r2[d] * (g[d] - x[d]))
            })
            .collect()
    }
}

/// New velocity for `part` steered by the neighborhood best position
/// `guide`. Draws fresh `r1`, `r2 ∈ [0, 1)` per dimension (all of `r1`, then
/// all of `r2`). The particle is not modified.
pub fn update_velocity<R: Rng + ?Sized>(
    part: &Particle,
    guide: &Point,
    config: &SwarmConfig,
    rng: &mut R,
) -> Vec<f64> {
    let n = part.dimension();
    let r1: Vec<f64> = (0..n).map(|_| rng.gen::<f64>()).collect();
    let r2: Vec<f64> = (0..n).map(|_| rng.gen::<f64>()).collect();
    VelocityRule::from_config(config).apply(part, guide, &r1, &r2)
}

/// `x ← x + v`. No clamping; the fitness is stale until re-evaluated.
pub fn move_particle(part: &mut Particle) {
    part.x.translate(&part.v);
}

/// Adopts the current position as personal best on strict improvement.
/// Returns whether the best changed.
pub fn refresh_best(part: &mut Particle) -> bool {
    if part.x_fitness < part.p_fitness {
        part.p = part.x.clone();
        part.p_fitness = part.x_fitness;
        true
    } else {
        false
    }
}
