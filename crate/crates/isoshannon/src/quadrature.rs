//! Adaptive Gauss–Legendre quadrature over finite, half-line and full-line
//! domains, plus the differential-entropy functional.
//!
//! Infinite domains are truncated first: every integrand in this crate
//! carries a Gaussian or exponential envelope, so a fixed truncation radius
//! (default 12, where a Gaussian envelope is ~1e-18 of its peak) is applied
//! before any adaptivity. Each panel is evaluated with paired 10- and
//! 21-point Gauss–Legendre rules; the difference serves as the panel error
//! estimate and the panel with the largest estimate is bisected until the
//! global estimate meets tolerance or the panel budget runs out.

use crate::{Error, Result};
use std::cell::Cell;
use std::sync::OnceLock;

/// Integration domain.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum IntegrationDomain {
    Finite {
        a: f64,
        b: f64,
    },
    /// `[0, ∞)`, truncated at the configured radius.
    HalfLine,
    /// `(-∞, ∞)`, truncated symmetrically.
    FullLine,
}

impl IntegrationDomain {
    fn truncated(self, cfg: &QuadratureConfig) -> Result<(f64, f64)> {
        let r = cfg.truncation_radius;
        match self {
            IntegrationDomain::Finite { a, b } => {
                if a >= b || !a.is_finite() || !b.is_finite() {
                    return Err(Error::Domain(format!("invalid finite domain [{a}, {b}]")));
                }
                Ok((a, b))
            }
            IntegrationDomain::HalfLine => Ok((0.0, r)),
            IntegrationDomain::FullLine => Ok((-r, r)),
        }
    }
}

/// Tolerances and budgets governing every integral.
#[derive(Debug, Clone, Copy)]
pub struct QuadratureConfig {
    pub rel_tol: f64,
    pub abs_tol: f64,
    /// Truncation radius for infinite domains, in natural units.
    pub truncation_radius: f64,
    pub max_panels: usize,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            rel_tol: 1e-10,
            abs_tol: 1e-12,
            truncation_radius: 12.0,
            max_panels: 4096,
        }
    }
}

impl QuadratureConfig {
    pub fn validate(&self) -> Result<()> {
        if self.rel_tol <= 0.0
            || self.abs_tol <= 0.0
            || !self.rel_tol.is_finite()
            || !self.abs_tol.is_finite()
        {
            return Err(Error::Domain(
                "quadrature tolerances must be positive".into(),
            ));
        }
        if self.max_panels < 16 {
            return Err(Error::Domain("max_panels must be at least 16".into()));
        }
        if self.truncation_radius <= 0.0 || !self.truncation_radius.is_finite() {
            return Err(Error::Domain("truncation radius must be positive".into()));
        }
        Ok(())
    }
}

/// An integral value together with its achieved error estimate.
#[derive(Debug, Clone, Copy)]
pub struct Estimate {
    pub value: f64,
    pub error: f64,
}

/// Fixed Gauss–Legendre rule on [-1, 1].
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    /// Nodes are the roots of P_n found by Newton iteration from the
    /// Chebyshev initial guess; weights are 2 / ((1-x²) P_n′(x)²).
    pub fn new(n: usize) -> Self {
        assert!(n >= 2);
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let m = n.div_ceil(2);
        for i in 0..m {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(n, x);
                dp = d;
                let dx = -p / d;
                x += dx;
                if dx.abs() < 1e-15 {
                    let (p2, d2) = legendre_with_derivative(n, x);
                    dp = d2;
                    x -= p2 / d2;
                    break;
                }
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        if n % 2 == 1 {
            // middle node is exactly zero
            nodes[n / 2] = 0.0;
        }
        GaussLegendre { nodes, weights }
    }

    pub fn integrate<F: FnMut(f64) -> f64>(&self, a: f64, b: f64, mut f: F) -> f64 {
        let mid = 0.5 * (a + b);
        let half = 0.5 * (b - a);
        let mut acc = 0.0;
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            acc += w * f(mid + half * x);
        }
        acc * half
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut pm = 1.0;
    let mut p = x;
    for k in 1..n {
        let k = k as f64;
        let next = ((2.0 * k + 1.0) * x * p - k * pm) / (k + 1.0);
        pm = p;
        p = next;
    }
    let dp = n as f64 * (x * p - pm) / (x * x - 1.0);
    (p, dp)
}

fn low_rule() -> &'static GaussLegendre {
    static LOW: OnceLock<GaussLegendre> = OnceLock::new();
    LOW.get_or_init(|| GaussLegendre::new(10))
}

fn high_rule() -> &'static GaussLegendre {
    static HIGH: OnceLock<GaussLegendre> = OnceLock::new();
    HIGH.get_or_init(|| GaussLegendre::new(21))
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

fn eval_panel<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Panel {
    let hi = high_rule().integrate(a, b, f);
    let lo = low_rule().integrate(a, b, f);
    Panel {
        a,
        b,
        value: hi,
        error: (hi - lo).abs().max(1e-17 * hi.abs()),
    }
}

/// Adaptive integration of `f` over `[a, b]` starting from `initial_panels`
/// equal panels. Exposed within the crate so the transform layer can seed
/// oscillation-aware panelizations.
pub(crate) fn integrate_on<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    initial_panels: usize,
    cfg: &QuadratureConfig,
) -> Result<Estimate> {
    cfg.validate()?;
    let initial = initial_panels.clamp(1, cfg.max_panels);
    let width = (b - a) / initial as f64;
    let mut panels: Vec<Panel> = (0..initial)
        .map(|i| {
            let pa = a + i as f64 * width;
            let pb = if i + 1 == initial { b } else { pa + width };
            eval_panel(f, pa, pb)
        })
        .collect();

    loop {
        let value: f64 = panels.iter().map(|p| p.value).sum();
        let error: f64 = panels.iter().map(|p| p.error).sum();
        let tol = cfg.abs_tol.max(cfg.rel_tol * value.abs());
        if error <= tol {
            return Ok(Estimate { value, error });
        }
        if panels.len() >= cfg.max_panels {
            return Err(Error::NonConvergence {
                achieved: error,
                requested: tol,
                panels: panels.len(),
            });
        }
        let worst = panels
            .iter()
            .enumerate()
            .max_by(|(_, x), (_, y)| x.error.total_cmp(&y.error))
            .map(|(i, _)| i)
            .expect("non-empty panel list");
        let Panel { a: pa, b: pb, .. } = panels[worst];
        let mid = 0.5 * (pa + pb);
        panels[worst] = eval_panel(f, pa, mid);
        panels.push(eval_panel(f, mid, pb));
    }
}

/// Integrates `f` over `domain` to the configured tolerances.
pub fn integrate<F: Fn(f64) -> f64>(
    f: F,
    domain: IntegrationDomain,
    cfg: &QuadratureConfig,
) -> Result<Estimate> {
    let (a, b) = domain.truncated(cfg)?;
    let initial = (((b - a) / 1.5).ceil() as usize).clamp(4, 64);
    integrate_on(&f, a, b, initial, cfg)
}

/// Differential entropy `−∫ ρ ln ρ` of a non-negative density.
///
/// The integrand is defined as 0 wherever the density vanishes or
/// underflows (ρ ln ρ → 0 as ρ → 0⁺), and densities are clamped at zero
/// from below; a density observed below −1e-12 is rejected as genuinely
/// negative rather than floating-point noise.
pub fn entropy_functional<F: Fn(f64) -> f64>(
    density: F,
    domain: IntegrationDomain,
    cfg: &QuadratureConfig,
) -> Result<Estimate> {
    let worst_negative = Cell::new((0.0_f64, 0.0_f64));
    let integrand = |x: f64| {
        let rho = density(x);
        if rho < worst_negative.get().0 {
            worst_negative.set((rho, x));
        }
        if rho <= 1e-300 {
            0.0
        } else {
            -rho * rho.ln()
        }
    };
    let (a, b) = domain.truncated(cfg)?;
    let initial = (((b - a) / 1.5).ceil() as usize).clamp(4, 64);
    let result = integrate_on(&integrand, a, b, initial, cfg);
    let (value, at) = worst_negative.get();
    if value < -1e-12 {
        return Err(Error::NegativeDensity { value, at });
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    fn cfg() -> QuadratureConfig {
        QuadratureConfig::default()
    }

    #[test]
    fn rule_nodes_are_symmetric_and_weights_sum_to_two() {
        for n in [10usize, 21] {
            let rule = GaussLegendre::new(n);
            let wsum: f64 = rule.weights().iter().sum();
            assert_abs_diff_eq!(wsum, 2.0, epsilon = 1e-14);
            for (lo, hi) in rule.nodes().iter().zip(rule.nodes().iter().rev()) {
                assert_abs_diff_eq!(*lo, -*hi, epsilon = 1e-14);
            }
        }
    }

    #[test]
    fn polynomial_exactness() {
        // a 21-point rule integrates x^40 on [0,1] near machine precision
        let rule = GaussLegendre::new(21);
        let v = rule.integrate(0.0, 1.0, |x| x.powi(40));
        assert_abs_diff_eq!(v, 1.0 / 41.0, epsilon = 1e-15);
    }

    #[test]
    fn basic_integrals() {
        let v = integrate(|x| x, IntegrationDomain::Finite { a: 0.0, b: 1.0 }, &cfg()).unwrap();
        assert_abs_diff_eq!(v.value, 0.5, epsilon = 1e-12);

        let g = integrate(|x| (-x * x).exp(), IntegrationDomain::FullLine, &cfg()).unwrap();
        assert_abs_diff_eq!(g.value, PI.sqrt(), epsilon = 1e-10);

        let h = integrate(
            |r| r * r * (-r * r).exp(),
            IntegrationDomain::HalfLine,
            &cfg(),
        )
        .unwrap();
        assert_abs_diff_eq!(h.value, PI.sqrt() / 4.0, epsilon = 1e-10);
    }

    #[test]
    fn error_estimate_is_honest() {
        let v = integrate(
            |x| (10.0 * x).sin() / (1.0 + x * x),
            IntegrationDomain::Finite { a: 0.0, b: 6.0 },
            &cfg(),
        )
        .unwrap();
        // compare against a much tighter run
        let tight = QuadratureConfig {
            rel_tol: 1e-13,
            abs_tol: 1e-15,
            ..cfg()
        };
        let w = integrate(
            |x| (10.0 * x).sin() / (1.0 + x * x),
            IntegrationDomain::Finite { a: 0.0, b: 6.0 },
            &tight,
        )
        .unwrap();
        assert!((v.value - w.value).abs() <= v.error.max(1e-12));
    }

    #[test]
    fn non_convergence_reports_achieved_error() {
        let nasty = |x: f64| (1.0 / (x + 1e-9)).sin();
        let tiny = QuadratureConfig {
            rel_tol: 1e-14,
            abs_tol: 1e-16,
            max_panels: 16,
            ..cfg()
        };
        match integrate(nasty, IntegrationDomain::Finite { a: 0.0, b: 1.0 }, &tiny) {
            Err(Error::NonConvergence {
                achieved, panels, ..
            }) => {
                assert!(achieved > 0.0);
                assert_eq!(panels, 16);
            }
            other => panic!("expected NonConvergence, got {other:?}"),
        }
    }

    #[test]
    fn entropy_examples() {
        // uniform density on [0,1] has zero entropy
        let z = entropy_functional(
            |_| 1.0,
            IntegrationDomain::Finite { a: 0.0, b: 1.0 },
            &cfg(),
        )
        .unwrap();
        assert_abs_diff_eq!(z.value, 0.0, epsilon = 1e-12);

        // normalized Gaussian: (1 + ln pi) / 2
        let g = entropy_functional(
            |x| (-x * x).exp() / PI.sqrt(),
            IntegrationDomain::FullLine,
            &cfg(),
        )
        .unwrap();
        assert_abs_diff_eq!(g.value, 0.5 * (1.0 + PI.ln()), epsilon = 1e-10);

        // uniform density 1/2 on [0,2]: ln 2
        let u = entropy_functional(
            |_| 0.5,
            IntegrationDomain::Finite { a: 0.0, b: 2.0 },
            &cfg(),
        )
        .unwrap();
        assert_abs_diff_eq!(u.value, 2.0_f64.ln(), epsilon = 1e-12);
    }

    #[test]
    fn entropy_handles_interior_zeros() {
        // density with a node, like an excited-state wavefunction
        let norm = 2.0 / PI.sqrt(); // ∫ x² e^{-x²} = √π/2
        let d = entropy_functional(
            |x: f64| norm * x * x * (-x * x).exp(),
            IntegrationDomain::FullLine,
            &cfg(),
        )
        .unwrap();
        assert!(d.value.is_finite());
        // rho ln rho -> 0 at the node keeps the integral finite and the
        // result refinement-stable
        let tight = QuadratureConfig {
            rel_tol: 1e-12,
            ..cfg()
        };
        let d2 = entropy_functional(
            |x: f64| norm * x * x * (-x * x).exp(),
            IntegrationDomain::FullLine,
            &tight,
        )
        .unwrap();
        assert_abs_diff_eq!(d.value, d2.value, epsilon = 1e-9);
    }

    #[test]
    fn entropy_rejects_negative_density() {
        let r = entropy_functional(
            |x| if x > 0.5 { -1e-6 } else { 1.0 },
            IntegrationDomain::Finite { a: 0.0, b: 1.0 },
            &cfg(),
        );
        assert!(matches!(r, Err(Error::NegativeDensity { .. })));

        // noise-level negatives are clamped, not fatal
        let ok = entropy_functional(
            |x| if x > 0.5 { -1e-14 } else { 1.0 },
            IntegrationDomain::Finite { a: 0.0, b: 1.0 },
            &cfg(),
        );
        assert!(ok.is_ok());
    }

    #[test]
    fn entropy_reflection_symmetry() {
        // even density about the midpoint of [-R, R]
        let f = |x: f64| (-x * x).exp() / PI.sqrt();
        let g = |x: f64| f(-x);
        let a = entropy_functional(f, IntegrationDomain::FullLine, &cfg()).unwrap();
        let b = entropy_functional(g, IntegrationDomain::FullLine, &cfg()).unwrap();
        assert_abs_diff_eq!(a.value, b.value, epsilon = 1e-11);
    }

    #[test]
    fn refinement_monotonicity() {
        let f = |x: f64| (3.0 * x).cos() * (-x * x / 2.0).exp();
        let loose = integrate(f, IntegrationDomain::FullLine, &cfg()).unwrap();
        let tight_cfg = QuadratureConfig {
            rel_tol: cfg().rel_tol / 2.0,
            ..cfg()
        };
        let tight = integrate(f, IntegrationDomain::FullLine, &tight_cfg).unwrap();
        assert!((loose.value - tight.value).abs() <= loose.error.max(1e-14));
    }

    proptest! {
        #[test]
        fn linearity(a in -3.0f64..3.0, b in -3.0f64..3.0, k in 0.5f64..4.0) {
            let f = move |x: f64| (k * x).sin() * (-x * x).exp();
            let g = move |x: f64| (-x * x / 2.0).exp();
            let dom = IntegrationDomain::FullLine;
            let c = cfg();
            let lhs = integrate(|x| a * f(x) + b * g(x), dom, &c).unwrap().value;
            let rhs = a * integrate(f, dom, &c).unwrap().value
                + b * integrate(g, dom, &c).unwrap().value;
            prop_assert!((lhs - rhs).abs() < 1e-10 * (1.0 + lhs.abs().max(rhs.abs())));
        }
    }
}
