//! Fixtures shared by the benchmarks under `benches/`.

use std::sync::Arc;

use cordes_fpk::oracle::dirichlet_sine_manufactured;
use cordes_fpk::{CheckerPattern, CoefficientField, Result, Source};

/// Periodic benchmark problems in 2D.
pub fn periodic_problems() -> Result<Vec<(&'static str, CoefficientField)>> {
    Ok(vec![
        ("trig_drift", CoefficientField::trig_drift(2, 0.15)?),
        (
            "checkerboard",
            CoefficientField::checkerboard(2, 1.0, 2.0, CheckerPattern::Checker)?,
        ),
    ])
}

/// Dirichlet problem with the manufactured sine solution and a nondiagonal
/// constant matrix.
pub fn dirichlet_problem() -> Result<CoefficientField> {
    let a = [[1.0, 0.1, 0.0], [0.1, 1.0, 0.0], [0.0; 3]];
    let b = [0.2, 0.0, 0.0];
    let m = dirichlet_sine_manufactured(2, a, b);
    let f = m.source.expect("manufactured source");
    Ok(CoefficientField::constant_matrix(2, a, b)?.with_source(Source::Scalar(Arc::clone(&f))))
}
