//! The induced edge labeling `f_p^*` on `K_n` and three ways to decide
//! whether `K_n` is Legendre cordial modulo `p`.
//!
//! On a complete graph every pair of labels `{i, j} ⊆ {1..n}` is an edge
//! exactly once, so none of the deciders depend on the labeling.

use core::fmt;

use crate::legraph::{psi, s1_sum_with, s2_sum_with, VertexLabeling};
use crate::numtheory::{mod_pow, LegendreValue, OddPrime, SymbolSource};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct EdgeLabelCounts {
    pub e0: u64,
    pub e1: u64,
}

impl EdgeLabelCounts {
    #[inline]
    pub fn difference(&self) -> i64 {
        self.e0 as i64 - self.e1 as i64
    }

    #[inline]
    pub fn total(&self) -> u64 {
        self.e0 + self.e1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(
    feature = "serde",
    derive(serde::Serialize),
    serde(rename_all = "snake_case")
)]
pub enum Method {
    Direct,
    Theorem,
    PaperAlgorithm,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Direct, Method::Theorem, Method::PaperAlgorithm];

    pub fn name(self) -> &'static str {
        match self {
            Method::Direct => "direct",
            Method::Theorem => "theorem",
            Method::PaperAlgorithm => "paper_algorithm",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A cordiality decision plus the quantities it was derived from.
///
/// `counts` is set for [`Method::Direct`]; `s_value`/`t_value` for the other two.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct CordialVerdict {
    pub n: u64,
    pub p: OddPrime,
    pub cordial: bool,
    pub method: Method,
    pub s_value: Option<i64>,
    pub t_value: Option<i64>,
    pub counts: Option<EdgeLabelCounts>,
}

/// `f_p^*` on an edge whose endpoint labels add up to `sum`.
#[inline]
pub fn edge_label(sum: u64, p: OddPrime) -> u8 {
    match p.symbol(sum) {
        Some(LegendreValue::Residue) => 1,
        _ => 0,
    }
}

/// `(e0, e1)` over all label pairs of `K_n`.
pub fn count_edge_labels(n: u64, p: OddPrime) -> EdgeLabelCounts {
    let mut e1 = 0;
    for i in 1..=n {
        for j in i + 1..=n {
            e1 += edge_label(i + j, p) as u64;
        }
    }
    let total = n * n.saturating_sub(1) / 2;
    EdgeLabelCounts { e0: total - e1, e1 }
}

/// `(e0, e1)` with edges of `K_n` taken between vertices and labeled through `labeling`.
pub fn count_edge_labels_under(labeling: &VertexLabeling, p: OddPrime) -> EdgeLabelCounts {
    let n = labeling.order();
    let (mut e0, mut e1) = (0, 0);
    for a in 0..n {
        for b in a + 1..n {
            if edge_label(labeling.label(a) + labeling.label(b), p) == 1 {
                e1 += 1;
            } else {
                e0 += 1;
            }
        }
    }
    EdgeLabelCounts { e0, e1 }
}

pub fn is_cordial_direct(n: u64, p: OddPrime) -> CordialVerdict {
    let counts = count_edge_labels(n, p);
    CordialVerdict {
        n,
        p,
        cordial: counts.difference().abs() <= 1,
        method: Method::Direct,
        s_value: None,
        t_value: None,
        counts: Some(counts),
    }
}

/// `T = 2nq - pq² - q + ψ`, the value `S` is compared against.
pub fn cordial_target(n: u64, p: OddPrime) -> i64 {
    let q = (n / p.get()) as i64;
    let (n, pv) = (n as i64, p.get() as i64);
    2 * n * q - pv * q * q - q + psi(n as u64, p) as i64
}

pub fn is_cordial_theorem(n: u64, p: OddPrime) -> CordialVerdict {
    is_cordial_theorem_with(n, &p)
}

/// Same as [`is_cordial_theorem`] with `(s/p)` taken from `src`.
pub fn is_cordial_theorem_with<S: SymbolSource>(n: u64, src: &S) -> CordialVerdict {
    let p = src.prime();
    let s = s1_sum_with(n, src) + s2_sum_with(n, src);
    let t = cordial_target(n, p);
    CordialVerdict {
        n,
        p,
        cordial: s == t || s == t - 2 || s == t + 2,
        method: Method::Theorem,
        s_value: Some(s),
        t_value: Some(t),
        counts: None,
    }
}

/// Line-for-line rendering of the published decision procedure, kept
/// separate from [`is_cordial_theorem`] on purpose.
pub fn is_cordial_paper_algorithm(n: u64, p: OddPrime) -> CordialVerdict {
    fn legendre_symbol(a: i64, p: i64) -> i64 {
        let r = mod_pow(a as u64, ((p - 1) / 2) as u64, p as u64);
        if r == 1 {
            1
        } else {
            -1
        }
    }

    fn delta(s: i64) -> i64 {
        let t = s % 2;
        if t == 0 {
            1
        } else {
            0
        }
    }

    let (nn, pp) = (n as i64, p.get() as i64);
    let q = nn / pp;
    let psi = 0.max(2 * (nn - q * pp) - pp + 1);

    let mut s1 = 0;
    for s in 2..=nn - q * pp + 1 {
        if s != pp {
            let l = legendre_symbol(s, pp);
            s1 += (s - 1 - delta(s)) * l;
        }
    }

    let mut s2 = 0;
    for s in nn - q * pp + 2..=2 * (nn - q * pp) {
        if s != pp {
            let l = legendre_symbol(s, pp);
            s2 += (2 * (nn - q * pp) - s + 1 - delta(s)) * l;
        }
    }

    let s = s1 + s2;
    let t = 2 * nn * q - pp * q * q - q + psi;
    let cordial = s == t || s == t + 2 || s == t - 2;

    CordialVerdict {
        n,
        p,
        cordial,
        method: Method::PaperAlgorithm,
        s_value: Some(s),
        t_value: Some(t),
        counts: None,
    }
}

pub fn decide(method: Method, n: u64, p: OddPrime) -> CordialVerdict {
    match method {
        Method::Direct => is_cordial_direct(n, p),
        Method::Theorem => is_cordial_theorem(n, p),
        Method::PaperAlgorithm => is_cordial_paper_algorithm(n, p),
    }
}

/// `K_{qp}` is Legendre cordial modulo `p` iff `q = 1` and `p = 3`.
pub fn corollary_qp_case(q: u64, p: OddPrime) -> bool {
    q == 1 && p.get() == 3
}
