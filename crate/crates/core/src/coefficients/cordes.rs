//! Cordes-type conditions and the renormalization function.

use std::f64::consts::PI;

use super::field::CoefficientField;
use crate::error::{Error, Result};
use crate::tensor::{frobenius_sq, norm_sq, trace, Vector};

/// Boundary setting of the FPK problem.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Setting {
    Periodic,
    Dirichlet,
}

impl Setting {
    pub fn as_str(&self) -> &'static str {
        match self {
            Setting::Periodic => "periodic",
            Setting::Dirichlet => "dirichlet",
        }
    }
}

/// Which condition a [`CordesReport`] certifies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CordesSetting {
    Periodic,
    Dirichlet,
    LowerOrder,
}

impl CordesSetting {
    pub fn as_str(&self) -> &'static str {
        match self {
            CordesSetting::Periodic => "periodic",
            CordesSetting::Dirichlet => "dirichlet",
            CordesSetting::LowerOrder => "lower_order",
        }
    }
}

impl From<Setting> for CordesSetting {
    fn from(s: Setting) -> Self {
        match s {
            Setting::Periodic => CordesSetting::Periodic,
            Setting::Dirichlet => CordesSetting::Dirichlet,
        }
    }
}

/// Outcome of a sampled Cordes check.
#[derive(Debug, Clone, PartialEq)]
pub struct CordesReport {
    pub setting: CordesSetting,
    /// Sampled minimum of the admissible delta, clamped to 1.
    pub delta_star: f64,
    /// The unclamped sampled minimum.
    pub delta_star_raw: f64,
    /// Closed-form delta (clamped) when the family provides one.
    pub analytic_delta_star: Option<f64>,
    pub delta_threshold: f64,
    pub eta: u8,
    /// `kappa` (periodic) or `kappa_hat` (Dirichlet).
    pub nearness_const: Option<f64>,
    pub lambda_shift: Option<f64>,
    /// Largest angle between the eigenvalue vector and `(1, ..., 1)`.
    pub max_cone_angle: f64,
    pub ell_lower: f64,
    pub ell_upper: f64,
    /// Range of the renormalization function over the samples.
    pub renormalization_range: (f64, f64),
    /// Largest value of `|I - gamma A|^2 + |gamma b|^2 - (1 - delta_star)`
    /// (resp. its lower-order analogue) over the samples.
    pub consequence_excess: f64,
    pub sample_count: usize,
    pub passed: bool,
}

/// `gamma = tr(A) / (|A|^2 + |b|^2)` at `x`.
pub fn eval_gamma(coeffs: &CoefficientField, x: &Vector) -> Result<f64> {
    let a = coeffs.diffusion(x)?;
    let b = coeffs.drift(x)?;
    Ok(trace(&a) / (frobenius_sq(&a) + norm_sq(&b)))
}

fn cone_angle(tr: f64, frob_sq: f64, dim: usize) -> f64 {
    let c = tr / (frob_sq.sqrt() * (dim as f64).sqrt());
    c.clamp(-1.0, 1.0).acos()
}

const CONSEQUENCE_TOL: f64 = 1e-10;
const DRIFT_ZERO_TOL: f64 = 1e-14;

/// Checks the Cordes-type condition for the periodic or Dirichlet FPK
/// problem on a sample set.
pub fn check_cordes(
    coeffs: &CoefficientField,
    setting: Setting,
    samples: &[Vector],
) -> Result<CordesReport> {
    if samples.is_empty() {
        return Err(Error::EmptySamples);
    }
    let n = coeffs.dim();
    let nf = n as f64;
    let mut raw = f64::INFINITY;
    let mut angle = 0.0f64;
    let mut drift_seen = false;
    let mut ell = (f64::INFINITY, f64::NEG_INFINITY);
    let mut gamma_range = (f64::INFINITY, f64::NEG_INFINITY);
    let mut pointwise = Vec::with_capacity(samples.len());
    for x in samples {
        let (lo, hi) = coeffs.check_point(x)?;
        ell = (ell.0.min(lo), ell.1.max(hi));
        let a = coeffs.diffusion(x)?;
        let b = coeffs.drift(x)?;
        let tr = trace(&a);
        let fa = frobenius_sq(&a);
        let b2 = norm_sq(&b);
        drift_seen |= b2.sqrt() > DRIFT_ZERO_TOL;
        raw = raw.min(tr * tr / (fa + b2) - (nf - 1.0));
        angle = angle.max(cone_angle(tr, fa, n));
        let gamma = tr / (fa + b2);
        gamma_range = (gamma_range.0.min(gamma), gamma_range.1.max(gamma));
        // |I - gamma A|^2 + |gamma b|^2
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                let id = if i == j { 1.0 } else { 0.0 };
                s += (id - gamma * a[i][j]).powi(2);
            }
        }
        s += gamma * gamma * b2;
        pointwise.push(s);
    }
    let eta = coeffs.analytic_eta().unwrap_or(drift_seen) as u8;
    let delta_star = raw.min(1.0);
    let eta_f = eta as f64;
    let (threshold, poincare) = match setting {
        Setting::Periodic => (eta_f / (1.0 + 4.0 * PI * PI), (2.0 * PI).powi(-2)),
        Setting::Dirichlet => (eta_f / (1.0 + PI * PI), PI.powi(-2)),
    };
    let passed = delta_star > threshold && delta_star <= 1.0;
    let nearness = ((delta_star - threshold) * (1.0 + eta_f * poincare)).min(1.0);
    let excess = pointwise
        .iter()
        .map(|s| s - (1.0 - delta_star))
        .fold(f64::NEG_INFINITY, f64::max);
    debug_assert!(!passed || excess <= CONSEQUENCE_TOL);
    Ok(CordesReport {
        setting: setting.into(),
        delta_star,
        delta_star_raw: raw,
        analytic_delta_star: coeffs.analytic_delta_star().map(|d| d.min(1.0)),
        delta_threshold: threshold,
        eta,
        nearness_const: Some(nearness),
        lambda_shift: None,
        max_cone_angle: angle,
        ell_lower: ell.0,
        ell_upper: ell.1,
        renormalization_range: gamma_range,
        consequence_excess: excess,
        sample_count: samples.len(),
        passed,
    })
}

/// Checks the Cordes-type condition for `-A:D^2 - b.grad + c` with a given
/// shift `lambda > 0`.
pub fn check_cordes_lower_order(
    coeffs: &CoefficientField,
    lambda_shift: f64,
    samples: &[Vector],
) -> Result<CordesReport> {
    if !(lambda_shift > 0.0) {
        return Err(Error::InvalidLambdaShift(lambda_shift));
    }
    if coeffs.reaction_fn().is_none() {
        return Err(Error::MissingReaction);
    }
    if samples.is_empty() {
        return Err(Error::EmptySamples);
    }
    let n = coeffs.dim();
    let l = lambda_shift;
    let mut raw = f64::INFINITY;
    let mut angle = 0.0f64;
    let mut ell = (f64::INFINITY, f64::NEG_INFINITY);
    let mut s_range = (f64::INFINITY, f64::NEG_INFINITY);
    let mut drift_seen = false;
    let mut pointwise = Vec::with_capacity(samples.len());
    for x in samples {
        let (lo, hi) = coeffs.check_point(x)?;
        ell = (ell.0.min(lo), ell.1.max(hi));
        let a = coeffs.diffusion(x)?;
        let b = coeffs.drift(x)?;
        let c = coeffs.reaction(x)?;
        let tr = trace(&a);
        let fa = frobenius_sq(&a);
        let b2 = norm_sq(&b);
        drift_seen |= b2.sqrt() > DRIFT_ZERO_TOL;
        let num = tr + c / l;
        let den = fa + b2 / (2.0 * l) + c * c / (l * l);
        raw = raw.min(num * num / den - n as f64);
        angle = angle.max(cone_angle(tr, fa, n));
        let s = num / den;
        s_range = (s_range.0.min(s), s_range.1.max(s));
        let mut q = 0.0;
        for i in 0..n {
            for j in 0..n {
                let id = if i == j { 1.0 } else { 0.0 };
                q += (id - s * a[i][j]).powi(2);
            }
        }
        q += s * s * b2 / (2.0 * l) + (l - s * c).powi(2) / (l * l);
        pointwise.push(q);
    }
    let delta_star = raw.min(1.0);
    let passed = delta_star > 0.0;
    let excess = pointwise
        .iter()
        .map(|q| q - (1.0 - delta_star))
        .fold(f64::NEG_INFINITY, f64::max);
    Ok(CordesReport {
        setting: CordesSetting::LowerOrder,
        delta_star,
        delta_star_raw: raw,
        analytic_delta_star: None,
        delta_threshold: 0.0,
        eta: drift_seen as u8,
        nearness_const: None,
        lambda_shift: Some(lambda_shift),
        max_cone_angle: angle,
        ell_lower: ell.0,
        ell_upper: ell.1,
        renormalization_range: s_range,
        consequence_excess: excess,
        sample_count: samples.len(),
        passed,
    })
}
