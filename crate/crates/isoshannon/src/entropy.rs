//! Shannon entropies of position and momentum densities, the angular
//! entropy of the spherical-harmonic factor, and the
//! Beckner–Bialynicki-Birula–Mycielski (BBM) uncertainty check
//! `S_pos + S_mom ≥ D(1 + ln π)`.
//!
//! All entropies are differential entropies in nats (natural logarithm),
//! the convention pinned by the D = 1 bound `1 + ln π = 2.1447…` and the
//! oscillator ground-state value `(1 + ln π)/2 = 1.0724…`.
//!
//! Radial states are product states `(χ(r)/r)·Y_L^0`, so the D = 3 entropy
//! splits exactly into a reduced-radial term and the angular entropy of
//! `Y_L^0`:
//!
//! ```text
//! S_pos = −∫₀^∞ χ² ln(χ²/r²) dr + S_ang(L) ,
//! ```
//!
//! and likewise in momentum with the reduced amplitude g(p). The angular
//! index is `L = l` in the plus sector and `L = l + 1` in the minus sector
//! (the index of the spherical harmonic each state actually carries).

use crate::momentum::{angular_index, momentum_radius, Method, MomentumAmplitude};
use crate::quadrature::{
    entropy_functional, integrate, Estimate, IntegrationDomain, QuadratureConfig,
};
use crate::specfun::legendre;
use crate::wavefunctions::BoundState;
use crate::{Family, Result, StateSpec};

/// Achieved quadrature error estimates for one report.
#[derive(Debug, Clone, Copy)]
pub struct Numerics {
    pub err_pos: f64,
    pub err_mom: f64,
}

/// Entropies, their sum and the BBM margin for one state.
#[derive(Debug, Clone, Copy)]
pub struct EntropyReport {
    pub spec: StateSpec,
    /// Position entropy in nats.
    pub s_pos: f64,
    /// Momentum entropy in nats.
    pub s_mom: f64,
    /// `s_pos + s_mom`, by construction.
    pub sum: f64,
    /// Spatial dimension D (3 radial, 1 linear).
    pub dimension: u32,
    /// `D (1 + ln π)`.
    pub bbm_bound: f64,
    /// `sum − bbm_bound`; ≥ −1e-6 for every physical state.
    pub margin: f64,
    pub numerics: Numerics,
}

/// The BBM lower bound `D (1 + ln π)` in nats.
pub fn bbm_bound(dimension: u32) -> f64 {
    dimension as f64 * (1.0 + std::f64::consts::PI.ln())
}

/// Entropy of the m = 0 spherical harmonic `Y_L^0`:
/// `−∫ |Y|² ln |Y|² dΩ` with `|Y_L^0|² = (2L+1)/(4π) P_L(cos θ)²`.
pub fn angular_entropy(l_eff: u32, cfg: &QuadratureConfig) -> Result<Estimate> {
    let c = (2 * l_eff + 1) as f64 / (4.0 * std::f64::consts::PI);
    let est = integrate(
        |u| {
            let p = legendre(l_eff, u.clamp(-1.0, 1.0)).expect("|u| <= 1");
            let q = c * p * p;
            if q <= 1e-300 {
                0.0
            } else {
                -q * q.ln()
            }
        },
        IntegrationDomain::Finite { a: -1.0, b: 1.0 },
        cfg,
    )?;
    // the azimuthal integral contributes a factor 2π
    Ok(Estimate {
        value: 2.0 * std::f64::consts::PI * est.value,
        error: 2.0 * std::f64::consts::PI * est.error,
    })
}

/// Position-space Shannon entropy of a state (full D-dimensional density).
pub fn position_entropy(spec: StateSpec, cfg: &QuadratureConfig) -> Result<Estimate> {
    spec.validate()?;
    let state = BoundState::new(spec, cfg)?;
    match spec.family {
        Family::Linear1d => {
            entropy_functional(|x| state.eval(x).powi(2), IntegrationDomain::FullLine, cfg)
        }
        Family::Radial3d => {
            let radial = integrate(
                |r| {
                    let chi2 = state.eval(r).powi(2);
                    if chi2 <= 1e-300 || r <= 0.0 {
                        0.0
                    } else {
                        -chi2 * (chi2 / (r * r)).ln()
                    }
                },
                IntegrationDomain::HalfLine,
                cfg,
            )?;
            let angular = angular_entropy(angular_index(spec), cfg)?;
            Ok(Estimate {
                value: radial.value + angular.value,
                error: radial.error + angular.error,
            })
        }
    }
}

/// Momentum-space Shannon entropy of a state, from the canonical momentum
/// amplitude (closed form for the self-reciprocal plus sector, direct
/// transform for the minus sector; the transform is Parseval-guarded).
pub fn momentum_entropy(spec: StateSpec, cfg: &QuadratureConfig) -> Result<Estimate> {
    spec.validate()?;
    let amp = MomentumAmplitude::for_state(spec, cfg)?;
    if amp.method() == Method::DirectTransform {
        amp.parseval_check(cfg)?;
    }
    let p_max = momentum_radius(spec, cfg);
    let panels = (2.0 * p_max).ceil() as usize;
    match spec.family {
        Family::Linear1d => {
            // the density is even in p for parity eigenstates
            let half = crate::quadrature::integrate_on(
                &|p: f64| {
                    let rho = amp.evaluate(p).powi(2);
                    if rho <= 1e-300 {
                        0.0
                    } else {
                        -rho * rho.ln()
                    }
                },
                0.0,
                p_max,
                panels,
                cfg,
            )?;
            Ok(Estimate {
                value: 2.0 * half.value,
                error: 2.0 * half.error,
            })
        }
        Family::Radial3d => {
            let radial = crate::quadrature::integrate_on(
                &|p: f64| {
                    let g2 = amp.evaluate(p).powi(2);
                    if g2 <= 1e-300 || p <= 0.0 {
                        0.0
                    } else {
                        -g2 * (g2 / (p * p)).ln()
                    }
                },
                0.0,
                p_max,
                panels,
                cfg,
            )?;
            let angular = angular_entropy(angular_index(spec), cfg)?;
            Ok(Estimate {
                value: radial.value + angular.value,
                error: radial.error + angular.error,
            })
        }
    }
}

/// Computes the full entropy report for one state.
pub fn report_for(spec: StateSpec, cfg: &QuadratureConfig) -> Result<EntropyReport> {
    let pos = position_entropy(spec, cfg)?;
    let mom = momentum_entropy(spec, cfg)?;
    let dimension = spec.dimension();
    let bound = bbm_bound(dimension);
    let sum = pos.value + mom.value;
    Ok(EntropyReport {
        spec,
        s_pos: pos.value,
        s_mom: mom.value,
        sum,
        dimension,
        bbm_bound: bound,
        margin: sum - bound,
        numerics: Numerics {
            err_pos: pos.error,
            err_mom: mom.error,
        },
    })
}

/// BBM check: satisfied iff the margin is above −1e-6 (the slack absorbs
/// quadrature error for exactly saturating Gaussian states).
pub fn bbm_check(report: &EntropyReport) -> (bool, f64) {
    (report.margin >= -1e-6, report.margin)
}
