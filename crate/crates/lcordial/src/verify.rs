//! Cross-validation suites run by `lcordial verify`.
//!
//! Each suite compares a closed form against direct enumeration over
//! `2 <= n <= n_max` and odd primes `p <= p_max`, stopping at the first
//! counterexample.

use std::fmt;

use lcordial_core::cordial::{
    corollary_qp_case, is_cordial_direct, is_cordial_paper_algorithm, is_cordial_theorem,
};
use lcordial_core::legraph::{
    degree_closed_form, min_max_degree, omega_set, pi_set, psi, size_closed_form, LegendreGraph,
};
use lcordial_core::numtheory::sieve_primes;
use lcordial_core::{LegendreValue, OddPrime};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub cases: u64,
    pub counterexample: Option<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

impl fmt::Display for SuiteResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.counterexample {
            None => write!(f, "PASS {} ({} cases)", self.name, self.cases),
            Some(c) => write!(f, "FAIL {} after {} cases: {c}", self.name, self.cases),
        }
    }
}

struct Suite {
    name: &'static str,
    cases: u64,
}

impl Suite {
    fn new(name: &'static str) -> Self {
        Suite { name, cases: 0 }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) -> Result<(), String> {
        self.cases += 1;
        if ok {
            Ok(())
        } else {
            Err(describe())
        }
    }

    fn finish(self, outcome: Result<(), String>) -> SuiteResult {
        SuiteResult {
            name: self.name,
            cases: self.cases,
            counterexample: outcome.err(),
        }
    }
}

fn odd_primes(p_max: u64) -> Vec<OddPrime> {
    sieve_primes(p_max)
        .into_iter()
        .skip(1)
        .map(|p| OddPrime::new(p).expect("sieve output is prime"))
        .collect()
}

fn size_formula(n_max: u64, primes: &[OddPrime]) -> SuiteResult {
    let mut suite = Suite::new("size_formula");
    let outcome = (|| {
        for &p in primes {
            for n in 2..=n_max {
                for k in LegendreValue::BOTH {
                    let closed = size_closed_form(n, p, k).map_err(|e| e.to_string())?;
                    let counted = LegendreGraph::with_identity(n, p, k).size() as u64;
                    suite.check(closed.size == counted, || {
                        format!(
                            "n={n} p={p} k={k}: closed form {} vs enumerated {counted}",
                            closed.size
                        )
                    })?;
                }
            }
        }
        Ok(())
    })();
    suite.finish(outcome)
}

fn degree_formula(n_max: u64, primes: &[OddPrime]) -> SuiteResult {
    let mut suite = Suite::new("degree_formula");
    let outcome = (|| {
        for &p in primes {
            for n in 2..=n_max {
                for k in LegendreValue::BOTH {
                    let degrees = LegendreGraph::with_identity(n, p, k).degrees();
                    for v in 1..=n {
                        let closed = degree_closed_form(v, n, p, k).map_err(|e| e.to_string())?;
                        let counted = degrees[v as usize - 1] as u64;
                        suite.check(closed == counted, || {
                            format!("n={n} p={p} k={k} label {v}: closed form {closed} vs enumerated {counted}")
                        })?;
                    }
                }
            }
        }
        Ok(())
    })();
    suite.finish(outcome)
}

fn three_way(n_max: u64, primes: &[OddPrime]) -> SuiteResult {
    let mut suite = Suite::new("cordiality_agreement");
    let outcome = (|| {
        for &p in primes {
            for n in 2..=n_max {
                let d = is_cordial_direct(n, p);
                let t = is_cordial_theorem(n, p);
                let a = is_cordial_paper_algorithm(n, p);
                suite.check(d.cordial == t.cordial && t.cordial == a.cordial, || {
                    format!(
                        "K_{n} mod {p}: direct={} theorem={} paper_algorithm={}",
                        d.cordial, t.cordial, a.cordial
                    )
                })?;
                let counts = d.counts.expect("direct verdict carries counts");
                let (s, target) = (t.s_value.unwrap_or(0), t.t_value.unwrap_or(0));
                suite.check(2 * counts.difference() == target - s, || {
                    format!(
                        "K_{n} mod {p}: e0-e1 = {} but (T-S)/2 = ({target}-{s})/2",
                        counts.difference()
                    )
                })?;
            }
        }
        Ok(())
    })();
    suite.finish(outcome)
}

fn head_sets(n_max: u64, primes: &[OddPrime]) -> SuiteResult {
    let mut suite = Suite::new("head_residue_sum");
    let outcome = (|| {
        for &p in primes {
            for n in 2..=n_max {
                let q = n / p.get();
                let r = n - q * p.get();
                for k in LegendreValue::BOTH {
                    let mut total = 0;
                    for v in 1..=q * p.get() {
                        total += omega_set(v, n, p, k).map_err(|e| e.to_string())?.len() as u64;
                    }
                    let expected = q * r * p.half();
                    suite.check(total == expected, || {
                        format!("n={n} p={p} k={k}: sum |omega| = {total}, expected {expected}")
                    })?;
                }
            }
        }
        Ok(())
    })();
    suite.finish(outcome)
}

fn tail_sets(n_max: u64, primes: &[OddPrime]) -> SuiteResult {
    let mut suite = Suite::new("tail_residue_sum");
    let outcome = (|| {
        for &p in primes {
            for n in 2..=n_max {
                let q = n / p.get();
                let r = n - q * p.get();
                for k in LegendreValue::BOTH {
                    let b = size_closed_form(n, p, k).map_err(|e| e.to_string())?;
                    let mut total = 0i64;
                    for v in q * p.get() + 1..=n {
                        total += pi_set(v, n, p, k).map_err(|e| e.to_string())?.len() as i64;
                    }
                    let twice =
                        (r * r.saturating_sub(1)) as i64 - psi(n, p) as i64 + k.sign() * b.s_total;
                    suite.check(2 * total == twice, || {
                        format!(
                            "n={n} p={p} k={k}: 2·sum |pi| = {}, expected {twice}",
                            2 * total
                        )
                    })?;
                }
            }
        }
        Ok(())
    })();
    suite.finish(outcome)
}

fn corollary(primes: &[OddPrime]) -> SuiteResult {
    let mut suite = Suite::new("corollary_qp");
    let outcome = (|| {
        for &p in primes {
            for q in 1..=5 {
                let direct = is_cordial_direct(q * p.get(), p).cordial;
                suite.check(direct == corollary_qp_case(q, p), || {
                    format!("K_{} mod {p}: direct says {direct}", q * p.get())
                })?;
            }
        }
        Ok(())
    })();
    suite.finish(outcome)
}

fn extreme_degrees(primes: &[OddPrime]) -> SuiteResult {
    let mut suite = Suite::new("min_max_degree");
    let outcome = (|| {
        for &p in primes {
            for q in 1..=4 {
                let (lo, hi) = min_max_degree(q, p).map_err(|e| e.to_string())?;
                for k in LegendreValue::BOTH {
                    let g = LegendreGraph::with_identity(q * p.get(), p, k);
                    let (dmin, dmax) = (
                        g.min_degree().unwrap_or(0) as u64,
                        g.max_degree().unwrap_or(0) as u64,
                    );
                    suite.check((dmin, dmax) == (lo, hi), || {
                        format!(
                            "L_{}^{k}({p}): enumerated ({dmin}, {dmax}), expected ({lo}, {hi})",
                            q * p.get()
                        )
                    })?;
                }
            }
        }
        Ok(())
    })();
    suite.finish(outcome)
}

/// Runs every suite and returns one result per suite, in a fixed order.
pub fn run_all(n_max: u64, p_max: u64) -> Vec<SuiteResult> {
    let primes = odd_primes(p_max);
    vec![
        size_formula(n_max, &primes),
        degree_formula(n_max, &primes),
        three_way(n_max, &primes),
        head_sets(n_max, &primes),
        tail_sets(n_max, &primes),
        corollary(&primes),
        extreme_degrees(&primes),
    ]
}
