//! Problem data (diffusion, drift, reaction, source) as point-evaluable
//! fields, together with the Cordes-condition arithmetic.

mod cordes;
mod families;
mod field;
mod table;

pub use cordes::{
    check_cordes, check_cordes_lower_order, eval_gamma, CordesReport, CordesSetting, Setting,
};
pub use families::{trig_potential, CheckerPattern, TRIG_DRIFT_FREQUENCY};
pub use field::{CoefficientField, Family, MatrixFn, ScalarFn, Source, VectorFn};
pub use table::CoefficientTable;
