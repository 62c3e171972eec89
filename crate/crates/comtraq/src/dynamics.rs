//! Kinematic bicycle model with per-step heading slip.
//!
//! Forward-Euler update with the rear axle as the reference point. Slip enters
//! as an additive Gaussian deviation on heading applied after the Euler
//! integration; position and speed receive no direct noise.

use std::f64::consts::PI;

use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rng::Stream;

/// Normalizes an angle into `(-PI, PI]`. This is the repo-wide heading
/// convention; all stored headings go through it.
pub fn wrap_angle(angle: f64) -> f64 {
    let a = angle.rem_euclid(2.0 * PI);
    if a > PI {
        a - 2.0 * PI
    } else {
        a
    }
}

/// Partially observable physical state: planar position, speed, heading.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalState {
    /// Position x (m).
    pub x: f64,
    /// Position y (m).
    pub y: f64,
    /// Forward speed (m/s).
    pub v: f64,
    /// Heading (rad), normalized to `(-PI, PI]`.
    pub psi: f64,
}

impl PhysicalState {
    pub fn new(x: f64, y: f64, v: f64, psi: f64) -> Self {
        Self { x, y, v, psi: wrap_angle(psi) }
    }

    /// Euclidean distance between the positions of two states.
    pub fn position_distance(&self, other: &PhysicalState) -> f64 {
        ((self.x - other.x).powi(2) + (self.y - other.y).powi(2)).sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.v.is_finite() && self.psi.is_finite()
    }
}

/// Acceleration and steering command.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ControlInput {
    /// Acceleration (m/s^2).
    pub a: f64,
    /// Steering angle (rad).
    pub delta: f64,
}

impl ControlInput {
    pub fn new(a: f64, delta: f64) -> Self {
        Self { a, delta }
    }
}

/// Model parameters and actuation bounds.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct DynamicsParams {
    /// Wheelbase (m).
    pub wheelbase: f64,
    /// Integration step (s).
    pub dt: f64,
    /// Std of the per-step heading slip (rad).
    pub slip_sigma: f64,
    pub a_min: f64,
    pub a_max: f64,
    pub delta_min: f64,
    pub delta_max: f64,
    pub v_min: f64,
    pub v_max: f64,
}

impl Default for DynamicsParams {
    fn default() -> Self {
        Self {
            wheelbase: 0.16,
            dt: 0.1,
            slip_sigma: 15.0_f64.to_radians(),
            a_min: -0.2,
            a_max: 0.2,
            delta_min: -PI / 3.0,
            delta_max: PI / 3.0,
            v_min: 0.0,
            v_max: 0.5,
        }
    }
}

impl DynamicsParams {
    pub fn validate(&self) -> Result<()> {
        if !(self.dt > 0.0) {
            return Err(Error::InvalidConfig(format!("dt must be > 0, got {}", self.dt)));
        }
        if !(self.wheelbase > 0.0) {
            return Err(Error::InvalidConfig(format!(
                "wheelbase must be > 0, got {}",
                self.wheelbase
            )));
        }
        if !(self.slip_sigma >= 0.0) {
            return Err(Error::InvalidConfig(format!(
                "slip_sigma must be >= 0, got {}",
                self.slip_sigma
            )));
        }
        for (name, lo, hi) in [
            ("a", self.a_min, self.a_max),
            ("delta", self.delta_min, self.delta_max),
            ("v", self.v_min, self.v_max),
        ] {
            if lo > hi {
                return Err(Error::InvalidConfig(format!("{name}_min {lo} exceeds {name}_max {hi}")));
            }
        }
        Ok(())
    }

    /// Tightest turn the model can hold: wheelbase / tan(max steer).
    pub fn min_turn_radius(&self) -> f64 {
        let steer = self.delta_max.abs().max(self.delta_min.abs());
        self.wheelbase / steer.tan()
    }
}

/// Projects a control into the actuation box. Idempotent.
pub fn clamp_control(u: ControlInput, p: &DynamicsParams) -> ControlInput {
    ControlInput { a: u.a.clamp(p.a_min, p.a_max), delta: u.delta.clamp(p.delta_min, p.delta_max) }
}

/// Noise-free forward-Euler bicycle step. Expects a clamped control.
pub fn step_deterministic(s: &PhysicalState, u: &ControlInput, p: &DynamicsParams) -> PhysicalState {
    PhysicalState {
        x: s.x + s.v * s.psi.cos() * p.dt,
        y: s.y + s.v * s.psi.sin() * p.dt,
        v: (s.v + u.a * p.dt).clamp(p.v_min, p.v_max),
        psi: wrap_angle(s.psi + (s.v / p.wheelbase) * u.delta.tan() * p.dt),
    }
}

/// Deterministic step followed by one Gaussian heading-slip draw.
pub fn step_stochastic(
    s: &PhysicalState,
    u: &ControlInput,
    p: &DynamicsParams,
    rng: &mut Stream,
) -> PhysicalState {
    let mut next = step_deterministic(s, u, p);
    let w: f64 = StandardNormal.sample(rng);
    next.psi = wrap_angle(next.psi + p.slip_sigma * w);
    next
}
