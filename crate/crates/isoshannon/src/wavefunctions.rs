//! Closed-form position-space eigenfunctions of the four potentials, the
//! exceptional orthogonal polynomials with their weights, and the
//! normalization / orthogonality guards.
//!
//! The radial primitive is the reduced wavefunction χ(r) (r times the
//! radial factor), normalized as `∫₀^∞ χ² dr = 1`; the full 3-D state
//! `(χ/r)·Y` is only assembled inside the entropy layer. Every printed
//! normalization constant is verified numerically by `norm_check`, and all
//! downstream consumers go through [`BoundState`], which renormalizes by
//! the computed norm so a misprinted constant could never corrupt an
//! entropy.

use crate::quadrature::{integrate, Estimate, IntegrationDomain, QuadratureConfig};
use crate::specfun::{hermite, laguerre_or_zero, log_factorial};
use crate::{Error, Family, Result, Sector, StateSpec};

const SQRT_PI: f64 = 1.772_453_850_905_516;

fn log_gamma_half(n: u32, offset_half: u32) -> f64 {
    // ln Γ(n + offset_half/2) for the half-integer gammas the norms need
    crate::specfun::log_gamma(n as f64 + offset_half as f64 / 2.0).expect("positive argument")
}

/// Position-space wavefunction, exactly as printed (reduced radial χ for
/// the radial family). Radial arguments must satisfy `r ≥ 0`.
pub fn psi_position(spec: StateSpec, x: f64) -> Result<f64> {
    spec.validate()?;
    if spec.family == Family::Radial3d && x < 0.0 {
        return Err(Error::Domain(format!("radial coordinate r = {x} < 0")));
    }
    Ok(psi_unchecked(spec, x))
}

pub(crate) fn psi_unchecked(spec: StateSpec, x: f64) -> f64 {
    let n = spec.n;
    let l = spec.l;
    match (spec.family, spec.sector) {
        (Family::Radial3d, Sector::Plus) => {
            // sqrt(2 n! / Γ(n+l+3/2)) r^{l+1} e^{-r²/2} L_n^{l+1/2}(r²)
            let ln_norm = 0.5 * (2.0_f64.ln() + log_factorial(n) - log_gamma_half(n + l, 3));
            let t = x * x;
            ln_norm.exp()
                * x.powi(l as i32 + 1)
                * (-t / 2.0).exp()
                * laguerre_or_zero(n as i64, l as f64 + 0.5, t)
        }
        (Family::Radial3d, Sector::Minus) => {
            // sqrt(n! / ((2n+2l+5) Γ(n+l+3/2))) e^{-r²/2} r^{l+2} / (2r²+2l+3)
            //   · [4 L_n^{l+1/2}(r²) + 2(2r²+2l+3) L_n^{l+3/2}(r²)]
            let ln_norm = 0.5
                * (log_factorial(n) - ((2 * n + 2 * l + 5) as f64).ln() - log_gamma_half(n + l, 3));
            let t = x * x;
            let d = 2.0 * t + 2.0 * l as f64 + 3.0;
            let bracket = 4.0 * laguerre_or_zero(n as i64, l as f64 + 0.5, t)
                + 2.0 * d * laguerre_or_zero(n as i64, l as f64 + 1.5, t);
            ln_norm.exp() * (-t / 2.0).exp() * x.powi(l as i32 + 2) / d * bracket
        }
        (Family::Linear1d, Sector::Plus) => oscillator_eigenfunction(n, x),
        (Family::Linear1d, Sector::Minus) => {
            let t = x * x;
            let d = 1.0 + 2.0 * t;
            if n == 0 {
                // zero-energy singlet
                (2.0 / SQRT_PI).sqrt() * (-t / 2.0).exp() / d
            } else {
                let m = n - 1;
                // [2^{m+1} m! (m+3) √π]^{-1/2} e^{-x²/2} / (1+2x²)
                //   · [(1+2x²) H_{m+1}(x) + 4x H_m(x)]
                let ln_c = -0.5
                    * ((m + 1) as f64 * 2.0_f64.ln()
                        + log_factorial(m)
                        + ((m + 3) as f64).ln()
                        + 0.5 * std::f64::consts::PI.ln());
                let bracket = d * hermite(n, x) + 4.0 * x * hermite(m, x);
                ln_c.exp() * (-t / 2.0).exp() / d * bracket
            }
        }
    }
}

/// Normalized oscillator eigenfunction `(2ⁿ n! √π)^{-1/2} e^{-x²/2} H_n(x)`.
///
/// This is simultaneously the linear plus-sector position eigenfunction and
/// (being self-reciprocal under the Fourier transform) its momentum
/// amplitude, so the momentum layer reuses it.
pub fn oscillator_eigenfunction(n: u32, x: f64) -> f64 {
    let ln_norm =
        -0.5 * (n as f64 * 2.0_f64.ln() + log_factorial(n) + 0.5 * std::f64::consts::PI.ln());
    ln_norm.exp() * (-x * x / 2.0).exp() * hermite(n, x)
}

/// Exceptional orthogonal polynomial p_n of the minus sector.
pub fn exceptional_poly(family: Family, n: u32, l: u32, x: f64) -> f64 {
    match family {
        Family::Radial3d => {
            let t = x * x;
            let d = 2.0 * t + 2.0 * l as f64 + 3.0;
            (4.0 * laguerre_or_zero(n as i64, l as f64 + 0.5, t)
                + 2.0 * d * laguerre_or_zero(n as i64, l as f64 + 1.5, t))
                / (2.0 * l as f64 + 3.0)
        }
        Family::Linear1d => {
            if n == 0 {
                1.0
            } else {
                (1.0 + 2.0 * x * x) * hermite(n, x) + 4.0 * x * hermite(n - 1, x)
            }
        }
    }
}

/// Weight function of the exceptional family.
pub fn weight(family: Family, l: u32, x: f64) -> f64 {
    let t = x * x;
    match family {
        Family::Radial3d => {
            let c = 2.0 * l as f64 + 3.0;
            let d = 2.0 * t + c;
            (c / d).powi(2) * (-t).exp() * x.powi(2 * l as i32 + 4)
        }
        Family::Linear1d => (-t).exp() / (1.0 + 2.0 * t).powi(2),
    }
}

/// Normalization constant N_n of the factorization ψ_n⁻ = N_n √w p_n.
pub fn factorization_norm(family: Family, n: u32, l: u32) -> f64 {
    match family {
        Family::Radial3d => (0.5
            * (log_factorial(n) - ((2 * n + 2 * l + 5) as f64).ln() - log_gamma_half(n + l, 3)))
        .exp(),
        Family::Linear1d => {
            if n == 0 {
                (2.0 / SQRT_PI).sqrt()
            } else {
                let m = n - 1;
                (-0.5
                    * ((m + 1) as f64 * 2.0_f64.ln()
                        + log_factorial(m)
                        + ((m + 3) as f64).ln()
                        + 0.5 * std::f64::consts::PI.ln()))
                .exp()
            }
        }
    }
}

pub(crate) fn position_domain(family: Family) -> IntegrationDomain {
    match family {
        Family::Radial3d => IntegrationDomain::HalfLine,
        Family::Linear1d => IntegrationDomain::FullLine,
    }
}

/// `∫ |ψ|²` over the family domain; must be 1 for the printed constants.
pub fn norm_check(spec: StateSpec, cfg: &QuadratureConfig) -> Result<f64> {
    spec.validate()?;
    let est = integrate(
        |x| psi_unchecked(spec, x).powi(2),
        position_domain(spec.family),
        cfg,
    )?;
    Ok(est.value)
}

/// `∫ p_{n1} p_{n2} w` over the family domain. Vanishes for n1 ≠ n2.
pub fn orthogonality_check(
    family: Family,
    l: u32,
    n1: u32,
    n2: u32,
    cfg: &QuadratureConfig,
) -> Result<f64> {
    let est: Estimate = integrate(
        |x| {
            exceptional_poly(family, n1, l, x)
                * exceptional_poly(family, n2, l, x)
                * weight(family, l, x)
        },
        position_domain(family),
        cfg,
    )?;
    Ok(est.value)
}

/// A position eigenstate with its numerically verified norm.
///
/// Evaluation divides by the computed norm, so downstream densities are
/// exactly normalized even if a printed constant were off. A deviation
/// beyond 1e-6 is flagged as a suspected erratum in the printed constant.
#[derive(Debug, Clone)]
pub struct BoundState {
    spec: StateSpec,
    norm: f64,
    inv_sqrt_norm: f64,
}

impl BoundState {
    pub fn new(spec: StateSpec, cfg: &QuadratureConfig) -> Result<Self> {
        let norm = norm_check(spec, cfg)?;
        if norm <= 0.0 || !norm.is_finite() {
            return Err(Error::Domain(format!(
                "state {spec:?} has non-positive norm {norm}"
            )));
        }
        Ok(BoundState {
            spec,
            norm,
            inv_sqrt_norm: 1.0 / norm.sqrt(),
        })
    }

    pub fn spec(&self) -> StateSpec {
        self.spec
    }

    /// Renormalized wavefunction value.
    pub fn eval(&self, x: f64) -> f64 {
        psi_unchecked(self.spec, x) * self.inv_sqrt_norm
    }

    /// `∫|ψ|² − 1` for the printed constants.
    pub fn norm_deviation(&self) -> f64 {
        self.norm - 1.0
    }

    /// Whether the printed constant deviates enough to suspect an erratum.
    pub fn norm_suspect(&self) -> bool {
        self.norm_deviation().abs() > 1e-6
    }
}

/// L² norm of the Schrödinger residual `−ψ″/2 + Vψ − Eψ` over an interior
/// grid, second derivative by 5-point differences. Guards every closed-form
/// ingredient of a state at once.
pub fn schrodinger_residual(spec: StateSpec, cfg: &QuadratureConfig) -> Result<f64> {
    spec.validate()?;
    let h = 1e-3;
    let (a, b) = match spec.family {
        // stay away from the centrifugal singularity at the origin
        Family::Radial3d => (0.2, cfg.truncation_radius.min(10.0)),
        Family::Linear1d => (
            -cfg.truncation_radius.min(10.0),
            cfg.truncation_radius.min(10.0),
        ),
    };
    let e = crate::susy::energy(spec);
    let n = ((b - a) / h).round() as usize + 1;
    let mut acc = 0.0;
    let mut window = [0.0; 5];
    for (i, slot) in window.iter_mut().enumerate() {
        *slot = psi_unchecked(spec, a + i as f64 * h);
    }
    for i in 2..n - 2 {
        let x = a + i as f64 * h;
        let d2 = (-window[0] + 16.0 * window[1] - 30.0 * window[2] + 16.0 * window[3] - window[4])
            / (12.0 * h * h);
        let v = crate::susy::potential(spec.family, spec.sector, spec.l, x)?;
        let res = -0.5 * d2 + (v - e) * window[2];
        acc += res * res;
        window.rotate_left(1);
        window[4] = psi_unchecked(spec, x + 3.0 * h);
    }
    Ok((h * acc).sqrt())
}
