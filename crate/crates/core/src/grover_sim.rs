//! Grover search with a single marked item.
//!
//! After `q` iterations the marked probability is `sin²((2q+1)·θ)` with
//! `sin θ = 1/√N`. Certainty needs `(2q+1)·θ = π/2`, which is inverted here
//! in closed form in both directions. The state-vector simulator checks it.

use std::f64::consts::FRAC_PI_2;

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest database the simulator will allocate.
pub const DEFAULT_SIMULATION_CAP: u64 = 1 << 20;

/// Database size for which `q` iterations find the item with certainty:
/// `N = 1 / sin²(π / (2(2q+1)))`.
pub fn solve_n(q: i64) -> Result<f64> {
    if q < 0 {
        return Err(Error::InvalidParams(format!("query count must be >= 0, got {q}")));
    }
    let s = (FRAC_PI_2 / (2 * q + 1) as f64).sin();
    Ok(1.0 / (s * s))
}

/// Real-valued iteration count that makes a database of size `n` certain:
/// `Q = (π / (2·asin(1/√n)) − 1) / 2`.
pub fn solve_q(n: f64) -> Result<f64> {
    if !n.is_finite() || n < 1.0 {
        return Err(Error::InvalidParams(format!("database size must be a finite value >= 1, got {n}")));
    }
    let theta = (1.0 / n.sqrt()).asin();
    Ok((FRAC_PI_2 / theta - 1.0) / 2.0)
}

/// Closed-form probability of measuring the marked item after `q` iterations.
pub fn success_probability(n: u64, q: u64) -> Result<f64> {
    if n < 2 {
        return Err(Error::InvalidParams(format!("database size must be >= 2, got {n}")));
    }
    let theta = (1.0 / (n as f64).sqrt()).asin();
    Ok(((2 * q + 1) as f64 * theta).sin().powi(2))
}

/// Marked probability and total norm after one iteration.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IterationRecord {
    pub iteration: u64,
    pub marked_probability: f64,
    pub norm: f64,
}

/// Real amplitude vector under Grover iterations.
#[derive(Debug, Clone, PartialEq)]
pub struct GroverRun {
    n: usize,
    marked: usize,
    amplitudes: Vec<f64>,
    iterations_applied: u64,
    trace: Vec<IterationRecord>,
}

impl GroverRun {
    /// Uniform superposition over `n` items with `marked` as the oracle's target.
    pub fn new(n: u64, marked: u64) -> Result<Self> {
        Self::with_cap(n, marked, DEFAULT_SIMULATION_CAP)
    }

    pub fn with_cap(n: u64, marked: u64, cap: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParams(format!("database size must be >= 2, got {n}")));
        }
        if marked >= n {
            return Err(Error::InvalidParams(format!("marked index {marked} out of range 0..{n}")));
        }
        if n > cap {
            return Err(Error::CapacityExceeded { requested: n.to_string(), cap });
        }
        let n = n as usize;
        let amplitudes = vec![1.0 / (n as f64).sqrt(); n];
        let mut run = Self { n, marked: marked as usize, amplitudes, iterations_applied: 0, trace: Vec::new() };
        run.record();
        Ok(run)
    }

    /// Oracle sign flip on the marked item, then inversion about the mean.
    pub fn step(&mut self) {
        self.amplitudes[self.marked] = -self.amplitudes[self.marked];
        let mean = self.amplitudes.iter().sum::<f64>() / self.n as f64;
        for a in &mut self.amplitudes {
            *a = 2.0 * mean - *a;
        }
        self.iterations_applied += 1;
        self.record();
    }

    fn record(&mut self) {
        self.trace.push(IterationRecord {
            iteration: self.iterations_applied,
            marked_probability: self.marked_probability(),
            norm: self.norm(),
        });
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn marked(&self) -> usize {
        self.marked
    }

    pub fn amplitudes(&self) -> &[f64] {
        &self.amplitudes
    }

    pub fn iterations_applied(&self) -> u64 {
        self.iterations_applied
    }

    /// One record per state, starting with the initial superposition.
    pub fn trace(&self) -> &[IterationRecord] {
        &self.trace
    }

    pub fn marked_probability(&self) -> f64 {
        self.amplitudes[self.marked].powi(2)
    }

    /// L2 norm of the amplitude vector.
    pub fn norm(&self) -> f64 {
        self.amplitudes.iter().map(|a| a * a).sum::<f64>().sqrt()
    }

    /// Largest change of the norm between consecutive states.
    pub fn max_norm_drift(&self) -> f64 {
        self.trace.windows(2).map(|w| (w[1].norm - w[0].norm).abs()).fold(0.0, f64::max)
    }
}

/// Runs `q` iterations from the uniform state.
pub fn simulate(n: u64, q: u64, marked: u64) -> Result<GroverRun> {
    simulate_capped(n, q, marked, DEFAULT_SIMULATION_CAP)
}

pub fn simulate_capped(n: u64, q: u64, marked: u64, cap: u64) -> Result<GroverRun> {
    let mut run = GroverRun::with_cap(n, marked, cap)?;
    for _ in 0..q {
        run.step();
    }
    Ok(run)
}
