//! Domain types and unit conventions shared by every other module.
//!
//! Lengths are measured in units of the laser wavelength (λ ≡ 1, so the
//! wavenumber is k = 2π) and ε₀ ≡ 1. Intensities are |E|² in these units and
//! forces are per unit transverse area; the natural intensity unit is the
//! squared modulus of a pump amplitude.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Free-space wavenumber for λ = 1.
pub const WAVENUMBER: f64 = 2.0 * std::f64::consts::PI;

/// Minimum allowed gap between scatterers, in units of λ. Two deltas closer
/// than this are physically a single delta with summed strength; we reject
/// the configuration instead of silently merging it.
pub const MIN_GAP: f64 = 1e-9;

/// One infinitely thin polarizable sheet: an atom cloud or a mirror.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Scatterer {
    /// Position along the axis, in units of λ.
    pub position: f64,
    /// Dimensionless real polarizability density of the sheet.
    pub lambda: f64,
}

impl Scatterer {
    pub fn new(position: f64, lambda: f64) -> Self {
        Scatterer { position, lambda }
    }
}

/// Incoming traveling-wave amplitudes driving the stack.
///
/// `left_amplitude` is the rightward wave entering from z = −∞, referenced at
/// the leftmost scatterer; `right_amplitude` is the leftward wave entering
/// from z = +∞, referenced at the rightmost scatterer.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Pump {
    pub left_amplitude: Complex64,
    pub right_amplitude: Complex64,
}

impl Pump {
    pub fn new(left: impl Into<Complex64>, right: impl Into<Complex64>) -> Self {
        Pump {
            left_amplitude: left.into(),
            right_amplitude: right.into(),
        }
    }

    /// Rightward-only drive of unit amplitude.
    pub fn left_only() -> Self {
        Pump::new(1.0, 0.0)
    }

    /// Equal-intensity counter-propagating drive, one unit per beam.
    pub fn symmetric() -> Self {
        Pump::new(1.0, 1.0)
    }

    pub fn is_dark(&self) -> bool {
        self.left_amplitude.norm() == 0.0 && self.right_amplitude.norm() == 0.0
    }
}

/// An ordered stack of scatterers together with its drive: the full scene.
#[derive(Debug, Clone, PartialEq)]
pub struct Stack {
    scatterers: Vec<Scatterer>,
    pub pump: Pump,
}

/// Validation failures for [`Stack`] construction.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum StackError {
    #[error("EmptyStack: a stack needs at least one scatterer")]
    EmptyStack,
    #[error("NoPump: both pump amplitudes are zero")]
    NoPump,
    #[error("OverlappingScatterers at index {index}: gap {gap:e} below minimum {MIN_GAP:e}")]
    OverlappingScatterers { index: usize, gap: f64 },
    #[error("NonFiniteValue in field `{field}`")]
    NonFiniteValue { field: &'static str },
    #[error("ZeroPolarizability at index {index}: lambda must be nonzero")]
    ZeroPolarizability { index: usize },
}

impl Stack {
    /// Builds a validated stack. Scatterers are sorted by position; every
    /// type invariant is checked here so downstream operations can assume
    /// well-formed input.
    pub fn new(mut scatterers: Vec<Scatterer>, pump: Pump) -> Result<Self, StackError> {
        if scatterers.is_empty() {
            return Err(StackError::EmptyStack);
        }
        for s in &scatterers {
            if !s.position.is_finite() {
                return Err(StackError::NonFiniteValue { field: "position" });
            }
            if !s.lambda.is_finite() {
                return Err(StackError::NonFiniteValue { field: "lambda" });
            }
        }
        if !pump.left_amplitude.re.is_finite()
            || !pump.left_amplitude.im.is_finite()
            || !pump.right_amplitude.re.is_finite()
            || !pump.right_amplitude.im.is_finite()
        {
            return Err(StackError::NonFiniteValue { field: "pump" });
        }
        if pump.is_dark() {
            return Err(StackError::NoPump);
        }
        scatterers.sort_by(|a, b| a.position.total_cmp(&b.position));
        for (i, s) in scatterers.iter().enumerate() {
            if s.lambda == 0.0 {
                return Err(StackError::ZeroPolarizability { index: i });
            }
        }
        for i in 1..scatterers.len() {
            let gap = scatterers[i].position - scatterers[i - 1].position;
            if gap < MIN_GAP {
                return Err(StackError::OverlappingScatterers { index: i, gap });
            }
        }
        Ok(Stack { scatterers, pump })
    }

    pub fn scatterers(&self) -> &[Scatterer] {
        &self.scatterers
    }

    pub fn len(&self) -> usize {
        self.scatterers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scatterers.is_empty()
    }

    pub fn positions(&self) -> Vec<f64> {
        self.scatterers.iter().map(|s| s.position).collect()
    }

    pub fn lambdas(&self) -> Vec<f64> {
        self.scatterers.iter().map(|s| s.lambda).collect()
    }

    pub fn leftmost(&self) -> f64 {
        self.scatterers[0].position
    }

    pub fn rightmost(&self) -> f64 {
        self.scatterers[self.scatterers.len() - 1].position
    }

    /// Same stack with one scatterer displaced; fails if ordering or the
    /// minimum gap would be violated.
    pub fn with_position(&self, index: usize, position: f64) -> Result<Self, StackError> {
        let mut scatterers = self.scatterers.clone();
        scatterers[index].position = position;
        Stack::new(scatterers, self.pump)
    }
}

/// Re-validates a stack. Idempotent: stacks built by [`Stack::new`] pass
/// unchanged.
pub fn validate_stack(stack: Stack) -> Result<Stack, StackError> {
    Stack::new(stack.scatterers, stack.pump)
}

/// The pump expressed as fixed plane waves in the lab frame: `rightward` is
/// the amplitude of the e^{+ikz} wave at z = 0, `leftward` of the e^{−ikz}
/// wave at z = 0.
///
/// A [`Stack`] references its pump amplitudes at its own outermost
/// scatterers, which is convenient for a single solve but ties the phase of
/// the drive to the configuration. Operations that move scatterers (force
/// derivatives, relaxation, Monte-Carlo moves) must instead hold the incoming
/// waves fixed in space while positions change; this type is that fixed
/// anchor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LabPump {
    pub rightward: Complex64,
    pub leftward: Complex64,
}

impl LabPump {
    /// Captures the lab-frame waves realized by `stack`'s pump convention.
    pub fn from_stack(stack: &Stack) -> Self {
        let phase_l = Complex64::from_polar(1.0, -WAVENUMBER * stack.leftmost());
        let phase_r = Complex64::from_polar(1.0, WAVENUMBER * stack.rightmost());
        LabPump {
            rightward: stack.pump.left_amplitude * phase_l,
            leftward: stack.pump.right_amplitude * phase_r,
        }
    }

    /// Edge-referenced pump for a stack spanning [leftmost, rightmost].
    pub fn pump_at(&self, leftmost: f64, rightmost: f64) -> Pump {
        Pump {
            left_amplitude: self.rightward * Complex64::from_polar(1.0, WAVENUMBER * leftmost),
            right_amplitude: self.leftward * Complex64::from_polar(1.0, -WAVENUMBER * rightmost),
        }
    }

    /// Builds the stack with the given geometry driven by these lab waves.
    pub fn stack(&self, positions: &[f64], lambdas: &[f64]) -> Result<Stack, StackError> {
        debug_assert_eq!(positions.len(), lambdas.len());
        let scatterers = positions
            .iter()
            .zip(lambdas)
            .map(|(&z, &l)| Scatterer::new(z, l))
            .collect::<Vec<_>>();
        let (lo, hi) = positions
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &z| {
                (lo.min(z), hi.max(z))
            });
        Stack::new(scatterers, self.pump_at(lo, hi))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn well_formed_stack_is_accepted() {
        let stack = Stack::new(
            vec![Scatterer::new(0.0, 10.0), Scatterer::new(0.5, 10.0)],
            Pump::left_only(),
        )
        .unwrap();
        assert_eq!(stack.len(), 2);
        assert_eq!(stack.positions(), vec![0.0, 0.5]);
    }

    #[test]
    fn coincident_scatterers_are_rejected() {
        let err = Stack::new(
            vec![Scatterer::new(0.3, 1.0), Scatterer::new(0.3, 1.0)],
            Pump::left_only(),
        )
        .unwrap_err();
        assert!(matches!(err, StackError::OverlappingScatterers { index: 1, .. }));
    }

    #[test]
    fn dark_pump_is_rejected() {
        let err = Stack::new(vec![Scatterer::new(0.0, 1.0)], Pump::new(0.0, 0.0)).unwrap_err();
        assert_eq!(err, StackError::NoPump);
    }

    #[test]
    fn empty_stack_is_rejected() {
        let err = Stack::new(vec![], Pump::left_only()).unwrap_err();
        assert_eq!(err, StackError::EmptyStack);
    }

    #[test]
    fn non_finite_values_are_rejected() {
        let err = Stack::new(vec![Scatterer::new(f64::NAN, 1.0)], Pump::left_only()).unwrap_err();
        assert!(matches!(err, StackError::NonFiniteValue { field: "position" }));
        let err = Stack::new(
            vec![Scatterer::new(0.0, f64::INFINITY)],
            Pump::left_only(),
        )
        .unwrap_err();
        assert!(matches!(err, StackError::NonFiniteValue { field: "lambda" }));
    }

    #[test]
    fn zero_polarizability_is_rejected() {
        let err = Stack::new(vec![Scatterer::new(0.0, 0.0)], Pump::left_only()).unwrap_err();
        assert!(matches!(err, StackError::ZeroPolarizability { index: 0 }));
    }

    #[test]
    fn positions_are_sorted_on_construction() {
        let stack = Stack::new(
            vec![Scatterer::new(0.7, 1.0), Scatterer::new(0.1, 2.0)],
            Pump::left_only(),
        )
        .unwrap();
        assert_eq!(stack.positions(), vec![0.1, 0.7]);
        assert_eq!(stack.lambdas(), vec![2.0, 1.0]);
    }

    #[test]
    fn validate_is_idempotent() {
        let stack = Stack::new(
            vec![Scatterer::new(0.0, 1.0), Scatterer::new(0.4, -0.5)],
            Pump::symmetric(),
        )
        .unwrap();
        let revalidated = validate_stack(stack.clone()).unwrap();
        assert_eq!(stack, revalidated);
    }

    #[test]
    fn lab_pump_round_trips_edge_referencing() {
        let stack = Stack::new(
            vec![Scatterer::new(0.13, 1.0), Scatterer::new(0.77, 2.0)],
            Pump::new(Complex64::new(0.4, 0.3), Complex64::new(-0.2, 0.9)),
        )
        .unwrap();
        let lab = LabPump::from_stack(&stack);
        let rebuilt = lab.pump_at(stack.leftmost(), stack.rightmost());
        assert!((rebuilt.left_amplitude - stack.pump.left_amplitude).norm() < 1e-14);
        assert!((rebuilt.right_amplitude - stack.pump.right_amplitude).norm() < 1e-14);
    }
}
