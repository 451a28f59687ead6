//! `𝕁(n, m)`: the odd primes `p <= m` for which `K_n` is Legendre cordial
//! modulo `p`, and `J(n, m) = |𝕁(n, m)|`, over grids of `(n, m)`.

use alloc::vec::Vec;

use crate::cordial::is_cordial_theorem_with;
use crate::error::{Error, Result};
use crate::numtheory::{sieve_primes, OddPrime, ResidueTable};

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct SurveyCell {
    pub n: u64,
    pub m: u64,
    pub j: usize,
    /// Increasing list of the primes counted in `j`, when requested.
    pub j_set: Option<Vec<u64>>,
}

/// Cells sorted by `(m, n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurveyTable {
    m_values: Vec<u64>,
    n_min: u64,
    n_max: u64,
    cells: Vec<SurveyCell>,
}

impl SurveyTable {
    /// Assembles a table from cells produced in any order.
    pub fn from_cells(
        n_min: u64,
        n_max: u64,
        mut m_values: Vec<u64>,
        mut cells: Vec<SurveyCell>,
    ) -> Self {
        m_values.sort_unstable();
        m_values.dedup();
        cells.sort_by_key(|c| (c.m, c.n));
        SurveyTable {
            m_values,
            n_min,
            n_max,
            cells,
        }
    }

    pub fn m_values(&self) -> &[u64] {
        &self.m_values
    }

    pub fn n_range(&self) -> (u64, u64) {
        (self.n_min, self.n_max)
    }

    pub fn cells(&self) -> &[SurveyCell] {
        &self.cells
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cell(&self, n: u64, m: u64) -> Option<&SurveyCell> {
        self.cells
            .binary_search_by_key(&(m, n), |c| (c.m, c.n))
            .ok()
            .map(|i| &self.cells[i])
    }

    /// `(n, J(n, m))` for one bound, in increasing `n`.
    pub fn series(&self, m: u64) -> Vec<(u64, usize)> {
        self.cells
            .iter()
            .filter(|c| c.m == m)
            .map(|c| (c.n, c.j))
            .collect()
    }
}

fn odd_primes_up_to(m: u64) -> Vec<OddPrime> {
    sieve_primes(m)
        .into_iter()
        .skip(1)
        .map(|p| OddPrime::new(p).expect("sieve output is prime"))
        .collect()
}

/// `𝕁(n, m)` in increasing order, decided by the closed-form characterization.
pub fn j_set(n: u64, m: u64) -> Vec<u64> {
    odd_primes_up_to(m)
        .into_iter()
        .filter(|&p| is_cordial_theorem_with(n, &p).cordial)
        .map(OddPrime::get)
        .collect()
}

pub fn j_count(n: u64, m: u64) -> usize {
    j_set(n, m).len()
}

/// Shared, read-only state for a sweep over `n_min..=n_max` and a set of
/// bounds. Work splits into one independent column per odd prime.
#[derive(Debug, Clone)]
pub struct SurveyPlan {
    n_min: u64,
    n_max: u64,
    m_values: Vec<u64>,
    primes: Vec<OddPrime>,
}

impl SurveyPlan {
    pub fn new(n_min: u64, n_max: u64, m_values: &[u64]) -> Result<Self> {
        if n_min < 2 {
            return Err(Error::InvalidSurvey("n_min must be at least 2"));
        }
        if n_min > n_max {
            return Err(Error::InvalidSurvey("n_min must not exceed n_max"));
        }
        let mut m_values = m_values.to_vec();
        m_values.sort_unstable();
        m_values.dedup();
        let Some(&m_max) = m_values.last() else {
            return Err(Error::InvalidSurvey("no bounds given"));
        };
        if m_values[0] < 3 {
            return Err(Error::InvalidSurvey("every bound m must be at least 3"));
        }
        Ok(SurveyPlan {
            n_min,
            n_max,
            m_values,
            primes: odd_primes_up_to(m_max),
        })
    }

    pub fn m_values(&self) -> &[u64] {
        &self.m_values
    }

    /// Odd primes up to the largest bound, increasing.
    pub fn primes(&self) -> &[OddPrime] {
        &self.primes
    }

    /// Cordiality of `K_n` modulo `p` for every `n` in the range.
    pub fn column(&self, p: OddPrime) -> Vec<bool> {
        let orders = self.n_min..=self.n_max;
        let span = (self.n_max - self.n_min + 1).saturating_mul(self.n_max.min(p.get()));
        // a residue table costs O(p); only worth it when it is reused enough
        if p.get() <= span {
            let table = ResidueTable::new(p);
            orders
                .map(|n| is_cordial_theorem_with(n, &table).cordial)
                .collect()
        } else {
            orders
                .map(|n| is_cordial_theorem_with(n, &p).cordial)
                .collect()
        }
    }

    /// Builds the table from one column per entry of [`primes`](Self::primes), in that order.
    pub fn assemble(&self, columns: &[Vec<bool>], with_sets: bool) -> SurveyTable {
        assert_eq!(columns.len(), self.primes.len(), "one column per prime");
        let mut cells =
            Vec::with_capacity(self.m_values.len() * (self.n_max - self.n_min + 1) as usize);
        for (row, n) in (self.n_min..=self.n_max).enumerate() {
            let members: Vec<u64> = self
                .primes
                .iter()
                .zip(columns)
                .filter(|(_, col)| col[row])
                .map(|(p, _)| p.get())
                .collect();
            for &m in &self.m_values {
                let j = members.partition_point(|&p| p <= m);
                cells.push(SurveyCell {
                    n,
                    m,
                    j,
                    j_set: with_sets.then(|| members[..j].to_vec()),
                });
            }
        }
        SurveyTable::from_cells(self.n_min, self.n_max, self.m_values.clone(), cells)
    }
}

/// Sequential sweep over `n_min..=n_max` and every bound in `m_values`.
pub fn sweep(n_min: u64, n_max: u64, m_values: &[u64], with_sets: bool) -> Result<SurveyTable> {
    let plan = SurveyPlan::new(n_min, n_max, m_values)?;
    let columns: Vec<Vec<bool>> = plan.primes().iter().map(|&p| plan.column(p)).collect();
    Ok(plan.assemble(&columns, with_sets))
}

/// Mean of `J(n, m)` over the first `head_window` and the last
/// `tail_window` orders of the table.
pub fn trend_statistic(
    table: &SurveyTable,
    m: u64,
    head_window: usize,
    tail_window: usize,
) -> Result<(f64, f64)> {
    if !table.m_values.contains(&m) {
        return Err(Error::UnknownBound(m));
    }
    let series = table.series(m);
    if head_window == 0 || tail_window == 0 {
        return Err(Error::InvalidSurvey("trend windows must be nonempty"));
    }
    if head_window > series.len() || tail_window > series.len() {
        return Err(Error::InvalidSurvey("trend window larger than the n range"));
    }
    let mean = |w: &[(u64, usize)]| w.iter().map(|&(_, j)| j as f64).sum::<f64>() / w.len() as f64;
    Ok((
        mean(&series[..head_window]),
        mean(&series[series.len() - tail_window..]),
    ))
}
