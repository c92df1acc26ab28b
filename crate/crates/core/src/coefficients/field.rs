use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::tensor::{
    eigen_range, is_finite_matrix, is_finite_vector, relative_asymmetry, scale_matrix,
    scale_vector, truncate_matrix, truncate_vector, Matrix, Vector, ZERO_VECTOR,
};

pub type MatrixFn = Arc<dyn Fn(&Vector) -> Matrix + Send + Sync>;
pub type VectorFn = Arc<dyn Fn(&Vector) -> Vector + Send + Sync>;
pub type ScalarFn = Arc<dyn Fn(&Vector) -> f64 + Send + Sync>;

/// Right-hand side data: either a scalar source `f` or a vector potential
/// `F` with `f = -div F`.
#[derive(Clone)]
pub enum Source {
    Scalar(ScalarFn),
    Potential(VectorFn),
}

impl fmt::Debug for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Source::Scalar(_) => f.write_str("Source::Scalar(..)"),
            Source::Potential(_) => f.write_str("Source::Potential(..)"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    ConstantIdentity,
    ConstantMatrix,
    Checkerboard,
    Layered,
    TrigDrift,
    Table,
    Custom,
}

impl Family {
    pub fn as_str(&self) -> &'static str {
        match self {
            Family::ConstantIdentity => "constant_identity",
            Family::ConstantMatrix => "constant_matrix",
            Family::Checkerboard => "checkerboard",
            Family::Layered => "layered",
            Family::TrigDrift => "trig_drift",
            Family::Table => "table",
            Family::Custom => "custom",
        }
    }
}

/// Diffusion `A`, drift `b`, optional reaction `c` and optional source on
/// the unit square or cube.
///
/// Closures must be reentrant; the field is shared read-only across
/// assembly workers.
#[derive(Clone)]
pub struct CoefficientField {
    dim: usize,
    diffusion: MatrixFn,
    drift: Option<VectorFn>,
    reaction: Option<ScalarFn>,
    source: Option<Source>,
    family: Family,
    alignment: Option<usize>,
    analytic_delta_star: Option<f64>,
    analytic_eta: Option<bool>,
}

impl fmt::Debug for CoefficientField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CoefficientField")
            .field("dim", &self.dim)
            .field("family", &self.family)
            .field("has_drift", &self.drift.is_some())
            .field("has_reaction", &self.reaction.is_some())
            .field("source", &self.source)
            .field("alignment", &self.alignment)
            .finish()
    }
}

impl CoefficientField {
    pub fn new(dim: usize, diffusion: MatrixFn) -> Result<Self> {
        if dim != 2 && dim != 3 {
            return Err(Error::UnsupportedDimension(dim));
        }
        Ok(Self {
            dim,
            diffusion,
            drift: None,
            reaction: None,
            source: None,
            family: Family::Custom,
            alignment: None,
            analytic_delta_star: None,
            analytic_eta: None,
        })
    }

    pub fn with_drift(mut self, drift: VectorFn) -> Self {
        self.drift = Some(drift);
        self
    }

    pub fn with_reaction(mut self, reaction: ScalarFn) -> Self {
        self.reaction = Some(reaction);
        self
    }

    pub fn with_source(mut self, source: Source) -> Self {
        self.source = Some(source);
        self
    }

    pub fn with_family(mut self, family: Family) -> Self {
        self.family = family;
        self
    }

    /// Requires meshes whose cells-per-dimension is a multiple of `multiple`.
    pub fn with_alignment(mut self, multiple: usize) -> Self {
        self.alignment = Some(multiple);
        self
    }

    /// Closed-form `delta_star` (before clamping) and drift indicator for
    /// built-in families.
    pub fn with_analytic(mut self, delta_star: Option<f64>, eta: Option<bool>) -> Self {
        self.analytic_delta_star = delta_star;
        self.analytic_eta = eta;
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn alignment(&self) -> Option<usize> {
        self.alignment
    }

    pub fn analytic_delta_star(&self) -> Option<f64> {
        self.analytic_delta_star
    }

    pub fn analytic_eta(&self) -> Option<bool> {
        self.analytic_eta
    }

    pub fn has_drift(&self) -> bool {
        self.drift.is_some()
    }

    pub fn source(&self) -> Option<&Source> {
        self.source.as_ref()
    }

    pub fn reaction_fn(&self) -> Option<&ScalarFn> {
        self.reaction.as_ref()
    }

    pub fn check_alignment(&self, cells: usize) -> Result<()> {
        match self.alignment {
            Some(m) if !cells.is_multiple_of(m) => Err(Error::MisalignedMesh { cells, multiple: m }),
            _ => Ok(()),
        }
    }

    pub fn diffusion(&self, x: &Vector) -> Result<Matrix> {
        let a = (self.diffusion)(x);
        if !is_finite_matrix(&a) {
            return Err(Error::NonFinite { point: *x });
        }
        Ok(truncate_matrix(&a, self.dim))
    }

    pub fn drift(&self, x: &Vector) -> Result<Vector> {
        match &self.drift {
            None => Ok(ZERO_VECTOR),
            Some(b) => {
                let v = b(x);
                if !is_finite_vector(&v) {
                    return Err(Error::NonFinite { point: *x });
                }
                Ok(truncate_vector(&v, self.dim))
            }
        }
    }

    pub fn reaction(&self, x: &Vector) -> Result<f64> {
        let c = self.reaction.as_ref().ok_or(Error::MissingReaction)?;
        let v = c(x);
        if !v.is_finite() {
            return Err(Error::NonFinite { point: *x });
        }
        if v < 0.0 {
            return Err(Error::NegativeReaction { point: *x, value: v });
        }
        Ok(v)
    }

    /// Vector potential `F` at `x`. Fails when the field carries a scalar
    /// source or no source at all.
    pub fn potential(&self, x: &Vector) -> Result<Vector> {
        match &self.source {
            Some(Source::Potential(f)) => {
                let v = f(x);
                if !is_finite_vector(&v) {
                    return Err(Error::NonFinite { point: *x });
                }
                Ok(truncate_vector(&v, self.dim))
            }
            _ => Err(Error::MissingSource),
        }
    }

    /// Symmetry and ellipticity checks at one point; returns the eigenvalue range.
    pub fn check_point(&self, x: &Vector) -> Result<(f64, f64)> {
        let a = self.diffusion(x)?;
        let asym = relative_asymmetry(&a);
        if asym > 1e-12 {
            return Err(Error::NotSymmetric {
                point: *x,
                asymmetry: asym,
            });
        }
        let (lo, hi) = eigen_range(&a, self.dim);
        if !(lo > 0.0) {
            return Err(Error::NotElliptic {
                point: *x,
                min: lo,
                max: hi,
            });
        }
        if self.reaction.is_some() {
            self.reaction(x)?;
        }
        Ok((lo, hi))
    }

    /// Sampled ellipticity bounds `(ell_lower, ell_upper)`.
    pub fn ellipticity_bounds(&self, samples: &[Vector]) -> Result<(f64, f64)> {
        if samples.is_empty() {
            return Err(Error::EmptySamples);
        }
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for x in samples {
            let (l, h) = self.check_point(x)?;
            lo = lo.min(l);
            hi = hi.max(h);
        }
        Ok((lo, hi))
    }

    /// The field with `(A, b)` replaced by `(tA, tb)`.
    pub fn scaled(&self, t: f64) -> Self {
        let diffusion = self.diffusion.clone();
        let mut out = self.clone();
        out.diffusion = Arc::new(move |x| scale_matrix(&diffusion(x), t));
        if let Some(b) = self.drift.clone() {
            out.drift = Some(Arc::new(move |x| scale_vector(&b(x), t)));
        }
        out
    }
}
