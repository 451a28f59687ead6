//! Survey sweeps fanned out over the rayon pool, one task per prime.

use lcordial_core::survey::{SurveyPlan, SurveyTable};
use lcordial_core::Result;
use rayon::prelude::*;

/// Same table as [`lcordial_core::survey::sweep`], computed in parallel.
///
/// Columns are collected in prime order, so the result does not depend on
/// scheduling.
pub fn sweep_parallel(
    n_min: u64,
    n_max: u64,
    m_values: &[u64],
    with_sets: bool,
) -> Result<SurveyTable> {
    let plan = SurveyPlan::new(n_min, n_max, m_values)?;
    let columns: Vec<Vec<bool>> = plan.primes().par_iter().map(|&p| plan.column(p)).collect();
    Ok(plan.assemble(&columns, with_sets))
}
