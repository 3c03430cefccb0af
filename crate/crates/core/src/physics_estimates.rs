//! Uncertainty-principle energy scale of a localized hydrogen atom, in CGS units.
//!
//! `Δp ≈ ħ/Δx` and `ΔE = Δp²/2m`, compared against a hydrogen-bond energy.

use serde::Serialize;

use crate::error::{Error, Result};

/// Reduced Planck constant, erg·s.
pub const HBAR_ERG_S: f64 = 1.05e-27;
/// Size of a nucleotide, cm.
pub const NUCLEOTIDE_SIZE_CM: f64 = 1.7e-8;
/// Mass of a hydrogen atom, g.
pub const HYDROGEN_MASS_G: f64 = 1.67e-24;
/// Hydrogen bond in water, about 1 kcal/mol, erg.
pub const HBOND_ENERGY_ERG: f64 = 7e-14;

/// erg to joule.
pub const JOULE_PER_ERG: f64 = 1e-7;
/// erg per electronvolt.
pub const ERG_PER_EV: f64 = 1.602_176_634e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PhysicalParams {
    /// erg·s
    pub hbar: f64,
    /// cm
    pub delta_x: f64,
    /// g
    pub mass: f64,
    /// erg
    pub hbond_energy: f64,
}

impl Default for PhysicalParams {
    fn default() -> Self {
        Self {
            hbar: HBAR_ERG_S,
            delta_x: NUCLEOTIDE_SIZE_CM,
            mass: HYDROGEN_MASS_G,
            hbond_energy: HBOND_ENERGY_ERG,
        }
    }
}

impl PhysicalParams {
    pub fn validate(&self) -> Result<()> {
        for (name, value) in [
            ("hbar", self.hbar),
            ("delta_x", self.delta_x),
            ("mass", self.mass),
            ("hbond_energy", self.hbond_energy),
        ] {
            require_positive(name, value)?;
        }
        Ok(())
    }
}

fn require_positive(name: &str, value: f64) -> Result<()> {
    if value.is_finite() && value > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidParams(format!("{name} must be finite and > 0, got {value}")))
    }
}

/// `ħ / Δx`, g·cm/s.
pub fn momentum_uncertainty(p: &PhysicalParams) -> Result<f64> {
    p.validate()?;
    Ok(p.hbar / p.delta_x)
}

/// `Δp² / 2m`, erg.
pub fn kinetic_energy(dp: f64, mass: f64) -> Result<f64> {
    require_positive("mass", mass)?;
    if !dp.is_finite() {
        return Err(Error::InvalidParams(format!("momentum must be finite, got {dp}")));
    }
    Ok(dp * dp / (2.0 * mass))
}

/// Energy at `Δx` and at `scale_factor · Δx`, side by side.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScaleComparison {
    pub scale_factor: f64,
    /// g·cm/s
    pub momentum: f64,
    /// g·cm/s
    pub scaled_momentum: f64,
    /// erg
    pub energy: f64,
    /// erg
    pub scaled_energy: f64,
    /// `scale_factor⁻²`, the exact ratio `scaled_energy / energy`.
    pub energy_ratio: f64,
    pub energy_to_hbond: f64,
    pub scaled_energy_to_hbond: f64,
}

pub fn scale_comparison(p: &PhysicalParams, scale_factor: f64) -> Result<ScaleComparison> {
    require_positive("scale_factor", scale_factor)?;
    let momentum = momentum_uncertainty(p)?;
    let energy = kinetic_energy(momentum, p.mass)?;
    let scaled = PhysicalParams { delta_x: p.delta_x * scale_factor, ..*p };
    let scaled_momentum = momentum_uncertainty(&scaled)?;
    let scaled_energy = kinetic_energy(scaled_momentum, p.mass)?;
    Ok(ScaleComparison {
        scale_factor,
        momentum,
        scaled_momentum,
        energy,
        scaled_energy,
        energy_ratio: 1.0 / (scale_factor * scale_factor),
        energy_to_hbond: energy / p.hbond_energy,
        scaled_energy_to_hbond: scaled_energy / p.hbond_energy,
    })
}

pub fn erg_to_joule(erg: f64) -> f64 {
    erg * JOULE_PER_ERG
}

pub fn erg_to_ev(erg: f64) -> f64 {
    erg / ERG_PER_EV
}
