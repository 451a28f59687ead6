//! Legendre graphs `L_n^k(f, p)` and the closed forms for their degrees and size.
//!
//! Throughout, `q = ⌊n/p⌋` and the *tail* is the label range `qp+1..=n`,
//! of length `r = n - qp < p`. The closed forms only ever look at `n`, `p`
//! and `k`; the labeling matters for which vertex gets which degree, never
//! for the degree multiset or the size.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::RangeInclusive;

use crate::error::{Error, Result};
use crate::numtheory::{LegendreValue, OddPrime, SymbolSource};

/// A bijection from vertex indices `0..n` onto labels `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexLabeling {
    labels: Vec<u64>,
}

impl VertexLabeling {
    pub fn identity(n: usize) -> Self {
        VertexLabeling {
            labels: (1..=n as u64).collect(),
        }
    }

    /// `labels[v]` is the label of vertex `v`.
    pub fn new(labels: Vec<u64>) -> Result<Self> {
        let n = labels.len();
        let mut seen = vec![false; n];
        for &l in &labels {
            let slot = (l as usize).wrapping_sub(1);
            if l == 0 || slot >= n || seen[slot] {
                return Err(Error::NotBijective { n });
            }
            seen[slot] = true;
        }
        Ok(VertexLabeling { labels })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.labels.len()
    }

    #[inline]
    pub fn label(&self, v: usize) -> u64 {
        self.labels[v]
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    /// Vertex carrying `label`, if it is in `1..=n`.
    pub fn vertex_of(&self, label: u64) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }
}

/// A Legendre graph: `{a, b}` is an edge iff `f(a) + f(b) ≢ 0 (mod p)` and
/// `((f(a) + f(b))/p) = k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LegendreGraph {
    p: OddPrime,
    k: LegendreValue,
    labeling: VertexLabeling,
    // vertex index pairs (a, b) with a < b, sorted
    edges: Vec<(usize, usize)>,
}

pub fn build_legendre_graph(
    n: u64,
    p: OddPrime,
    k: LegendreValue,
    labeling: VertexLabeling,
) -> Result<LegendreGraph> {
    if labeling.order() as u64 != n {
        return Err(Error::OrderMismatch {
            expected: n,
            found: labeling.order() as u64,
        });
    }
    let order = labeling.order();
    let mut edges = Vec::new();
    for a in 0..order {
        for b in a + 1..order {
            if p.symbol(labeling.label(a) + labeling.label(b)) == Some(k) {
                edges.push((a, b));
            }
        }
    }
    Ok(LegendreGraph {
        p,
        k,
        labeling,
        edges,
    })
}

impl LegendreGraph {
    /// `L_n^k(id, p)`: vertex `v` carries label `v + 1`.
    pub fn with_identity(n: u64, p: OddPrime, k: LegendreValue) -> Self {
        build_legendre_graph(n, p, k, VertexLabeling::identity(n as usize))
            .expect("identity labeling has the right order")
    }

    pub fn order(&self) -> usize {
        self.labeling.order()
    }

    pub fn prime(&self) -> OddPrime {
        self.p
    }

    pub fn k(&self) -> LegendreValue {
        self.k
    }

    pub fn labeling(&self) -> &VertexLabeling {
        &self.labeling
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.order()];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.degrees().into_iter().min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.degrees().into_iter().max()
    }

    /// Edges as label pairs `(x, y)`, `x < y`, sorted lexicographically.
    pub fn label_edges(&self) -> Vec<(u64, u64)> {
        let mut out: Vec<(u64, u64)> = self
            .edges
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (self.labeling.label(a), self.labeling.label(b));
                (x.min(y), x.max(y))
            })
            .collect();
        out.sort_unstable();
        out
    }
}

#[inline]
fn blocks(n: u64, p: OddPrime) -> (u64, u64) {
    let q = n / p.get();
    (q, n - q * p.get())
}

/// `δ_s`: 1 for even `s`, 0 otherwise.
#[inline]
pub fn delta_s(s: u64) -> i64 {
    if s.is_multiple_of(2) {
        1
    } else {
        0
    }
}

/// `η_s`, the number of ordered pairs `(i, c)` in `[1, r]^2` with `i + c = s`.
pub fn eta_s(s: u64, n: u64, p: OddPrime) -> Result<u64> {
    let (_, r) = blocks(n, p);
    if s < 2 || s > 2 * r {
        return Err(Error::OutOfRange {
            what: "s",
            value: s as i64,
            lo: 2,
            hi: 2 * r as i64,
        });
    }
    Ok(if s <= r + 1 { s - 1 } else { 2 * r - s + 1 })
}

/// `ψ = max{0, 2r - p + 1}`.
pub fn psi(n: u64, p: OddPrime) -> u64 {
    let (_, r) = blocks(n, p);
    (2 * r + 1).saturating_sub(p.get())
}

fn signed_symbol<S: SymbolSource>(src: &S, s: u64) -> i64 {
    src.symbol(s)
        .expect("tail sums below 2p other than p are coprime to p")
        .sign()
}

/// `S₁ = Σ_{s=2, s≠p}^{r+1} (s - 1 - δ_s)(s/p)`.
pub fn s1_sum_with<S: SymbolSource>(n: u64, src: &S) -> i64 {
    let p = src.prime();
    let (_, r) = blocks(n, p);
    debug_assert!(2 * r < 2 * p.get());
    (2..=r + 1)
        .filter(|&s| s != p.get())
        .map(|s| (s as i64 - 1 - delta_s(s)) * signed_symbol(src, s))
        .sum()
}

/// `S₂ = Σ_{s=r+2, s≠p}^{2r} (2r - s + 1 - δ_s)(s/p)`.
pub fn s2_sum_with<S: SymbolSource>(n: u64, src: &S) -> i64 {
    let p = src.prime();
    let (_, r) = blocks(n, p);
    debug_assert!(2 * r < 2 * p.get());
    (r + 2..=2 * r)
        .filter(|&s| s != p.get())
        .map(|s| (2 * r as i64 - s as i64 + 1 - delta_s(s)) * signed_symbol(src, s))
        .sum()
}

pub fn s1_sum(n: u64, p: OddPrime) -> i64 {
    s1_sum_with(n, &p)
}

pub fn s2_sum(n: u64, p: OddPrime) -> i64 {
    s2_sum_with(n, &p)
}

/// Every term of the closed-form size of `L_n^k(f, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct SizeFormulaBreakdown {
    pub n: u64,
    pub p: OddPrime,
    pub k: LegendreValue,
    pub q: u64,
    pub psi: u64,
    pub s1: i64,
    pub s2: i64,
    pub s_total: i64,
    pub size: u64,
}

/// `|E(L_n^k)| = (n² - n - 2nq + pq² + q - ψ + k(S₁ + S₂)) / 4`.
pub fn size_closed_form(n: u64, p: OddPrime, k: LegendreValue) -> Result<SizeFormulaBreakdown> {
    size_closed_form_with(n, k, &p)
}

pub fn size_closed_form_with<S: SymbolSource>(
    n: u64,
    k: LegendreValue,
    src: &S,
) -> Result<SizeFormulaBreakdown> {
    let p = src.prime();
    let (q, _) = blocks(n, p);
    let psi = psi(n, p);
    let s1 = s1_sum_with(n, src);
    let s2 = s2_sum_with(n, src);
    let s_total = s1 + s2;
    let (ni, pi, qi) = (n as i64, p.get() as i64, q as i64);
    let bracket = ni * ni - ni - 2 * ni * qi + pi * qi * qi + qi - psi as i64 + k.sign() * s_total;
    if bracket < 0 || bracket % 4 != 0 {
        return Err(Error::SizeNotIntegral {
            n,
            p: p.get(),
            bracket,
        });
    }
    Ok(SizeFormulaBreakdown {
        n,
        p,
        k,
        q,
        psi,
        s1,
        s2,
        s_total,
        size: (bracket / 4) as u64,
    })
}

/// Residue data attached to a single label `f(v)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexResidueProfile {
    pub v_label: u64,
    /// `ε(v) ∈ F` with `f(v) ≡ ε(v)`, only for tail labels.
    pub epsilon: Option<u64>,
    /// Length of the residue pool `F = {1, ..., n - qp}`.
    pub pool_len: u64,
    /// `ω^k(v)`, only for labels `1..=qp`.
    pub omega: Option<BTreeSet<u64>>,
    /// `π^k(v)`, only for tail labels.
    pub pi: Option<BTreeSet<u64>>,
}

impl VertexResidueProfile {
    pub fn residue_pool(&self) -> RangeInclusive<u64> {
        1..=self.pool_len
    }
}

pub fn residue_profile(
    v_label: u64,
    n: u64,
    p: OddPrime,
    k: LegendreValue,
) -> Result<VertexResidueProfile> {
    check_label(v_label, 1, n)?;
    let (q, r) = blocks(n, p);
    let head = v_label <= q * p.get();
    Ok(VertexResidueProfile {
        v_label,
        epsilon: (!head).then(|| v_label - q * p.get()),
        pool_len: r,
        omega: if head {
            Some(omega_set(v_label, n, p, k)?)
        } else {
            None
        },
        pi: if head {
            None
        } else {
            Some(pi_set(v_label, n, p, k)?)
        },
    })
}

fn check_label(v_label: u64, lo: u64, hi: u64) -> Result<()> {
    if v_label < lo || v_label > hi {
        return Err(Error::OutOfRange {
            what: "vertex label",
            value: v_label as i64,
            lo: lo as i64,
            hi: hi as i64,
        });
    }
    Ok(())
}

fn residues_hit(
    v_label: u64,
    pool: impl Iterator<Item = u64>,
    p: OddPrime,
    k: LegendreValue,
) -> BTreeSet<u64> {
    pool.map(|c| (v_label + c) % p.get())
        .filter(|&xi| p.symbol(xi) == Some(k))
        .collect()
}

/// `ω^k(v)` for `1 <= f(v) <= qp`: residues `ξ ≡ f(v) + c`, `c ∈ F`, with `(ξ/p) = k`.
pub fn omega_set(v_label: u64, n: u64, p: OddPrime, k: LegendreValue) -> Result<BTreeSet<u64>> {
    let (q, r) = blocks(n, p);
    check_label(v_label, 1, q * p.get())?;
    Ok(residues_hit(v_label, 1..=r, p, k))
}

/// `π^k(v)` for `qp < f(v) <= n`: like `ω^k` but with `c ∈ F \ {ε(v)}`.
pub fn pi_set(v_label: u64, n: u64, p: OddPrime, k: LegendreValue) -> Result<BTreeSet<u64>> {
    let (q, r) = blocks(n, p);
    check_label(v_label, q * p.get() + 1, n)?;
    let epsilon = v_label - q * p.get();
    Ok(residues_hit(
        v_label,
        (1..=r).filter(|&c| c != epsilon),
        p,
        k,
    ))
}

/// Degree of the vertex labeled `v_label` in `L_n^k(f, p)`, from the residue sets.
pub fn degree_closed_form(v_label: u64, n: u64, p: OddPrime, k: LegendreValue) -> Result<u64> {
    check_label(v_label, 1, n)?;
    let (q, _) = blocks(n, p);
    let base = q * p.half();
    if v_label <= q * p.get() {
        let omega = omega_set(v_label, n, p, k)?.len() as u64;
        // 2·f(v) is a unit unless p | f(v), since p is odd
        if p.symbol(2 * v_label) == Some(k) {
            Ok(base - 1 + omega)
        } else {
            Ok(base + omega)
        }
    } else {
        Ok(base + pi_set(v_label, n, p, k)?.len() as u64)
    }
}

/// `(δ, Δ)` of `L_{qp}^k(f, p)`: `(q(p-1)/2 - 1, q(p-1)/2)`.
pub fn min_max_degree(q: u64, p: OddPrime) -> Result<(u64, u64)> {
    if q == 0 {
        return Err(Error::OutOfRange {
            what: "q",
            value: 0,
            lo: 1,
            hi: i64::MAX,
        });
    }
    let top = q * p.half();
    Ok((top - 1, top))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numtheory::{sieve_primes, ResidueTable};
    use alloc::collections::BTreeSet;
    use LegendreValue::{Nonresidue as Minus, Residue as Plus};

    fn p(v: u64) -> OddPrime {
        OddPrime::new(v).unwrap()
    }

    fn label_edges(n: u64, q: u64, k: LegendreValue) -> Vec<(u64, u64)> {
        LegendreGraph::with_identity(n, p(q), k).label_edges()
    }

    #[test]
    fn small_graphs() {
        assert_eq!(label_edges(3, 3, Plus), [(1, 3)]);
        assert_eq!(label_edges(3, 3, Minus), [(2, 3)]);
        assert_eq!(label_edges(4, 3, Plus), [(1, 3), (3, 4)]);
        assert_eq!(label_edges(4, 3, Minus), [(1, 4), (2, 3)]);
    }

    #[test]
    fn labeling_validation() {
        assert!(VertexLabeling::new(vec![2, 1, 3]).is_ok());
        assert_eq!(
            VertexLabeling::new(vec![1, 1, 3]),
            Err(Error::NotBijective { n: 3 })
        );
        assert!(VertexLabeling::new(vec![0, 1, 2]).is_err());
        assert!(VertexLabeling::new(vec![1, 2, 4]).is_err());
        let err = build_legendre_graph(4, p(3), Plus, VertexLabeling::identity(3)).unwrap_err();
        assert_eq!(
            err,
            Error::OrderMismatch {
                expected: 4,
                found: 3
            }
        );
    }

    #[test]
    fn permuted_labels_move_edges_not_their_count() {
        let f = VertexLabeling::new(vec![3, 1, 4, 2]).unwrap();
        let g = build_legendre_graph(4, p(3), Plus, f).unwrap();
        // labels (1,3) and (3,4) sit on vertices (1,0) and (0,2)
        assert_eq!(g.edges(), [(0, 1), (0, 2)]);
        assert_eq!(g.label_edges(), [(1, 3), (3, 4)]);
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta_s(2), 1);
        assert_eq!(delta_s(3), 0);
        assert_eq!(delta_s(10), 1);
    }

    #[test]
    fn eta_examples() {
        let five = p(5);
        assert_eq!(eta_s(2, 9, five), Ok(1));
        assert_eq!(eta_s(5, 9, five), Ok(4));
        assert_eq!(eta_s(8, 9, five), Ok(1));
        assert!(eta_s(1, 9, five).is_err());
        assert!(eta_s(9, 9, five).is_err());
        // empty tail: no valid s at all
        assert!(eta_s(2, 10, five).is_err());
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi(3, p(3)), 0);
        assert_eq!(psi(5, p(3)), 2);
        assert_eq!(psi(4, p(5)), 4);
    }

    #[test]
    fn tail_sum_examples() {
        for (n, q) in [(3, 3), (4, 5), (5, 3)] {
            assert_eq!(s1_sum(n, p(q)), 0, "S1({n}, {q})");
            assert_eq!(s2_sum(n, p(q)), 0, "S2({n}, {q})");
        }
        // n = 8, p = 11: r = 8, S1 over s = 2..=9, S2 over s = 10..=16 minus 11
        // QR mod 11 = {1, 3, 4, 5, 9}
        // S1 = 0·(2) + 2·(3) + 2·(4) + 4·(5) + 4·(6) + 6·(7) + 6·(8) + 8·(9)
        //    = 0 + 2 + 2 + 4 - 4 - 6 - 6 + 8 = 0
        assert_eq!(s1_sum(8, p(11)), 0);
        // S2 = 6·(10) + [s=12: 4·(1)] + [13: 4·(2)] + [14: 2·(3)] + [15: 2·(4)] + [16: 0]
        //    = -6 + 4 - 4 + 2 + 2 = -2
        assert_eq!(s2_sum(8, p(11)), -2);
    }

    #[test]
    fn size_examples() {
        let cases = [
            (4, 3, Plus, 2),
            (4, 3, Minus, 2),
            (5, 3, Plus, 3),
            (4, 5, Plus, 2),
        ];
        for (n, q, k, size) in cases {
            let b = size_closed_form(n, p(q), k).unwrap();
            assert_eq!(b.size, size, "L_{n}^{k}({q})");
            assert_eq!(b.s_total, b.s1 + b.s2);
        }
        let b = size_closed_form(5, p(3), Plus).unwrap();
        assert_eq!((b.q, b.psi, b.s1, b.s2), (1, 2, 0, 0));
    }

    #[test]
    fn cached_and_euler_sizes_agree() {
        for q in sieve_primes(41).into_iter().skip(1) {
            let table = ResidueTable::new(p(q));
            for n in 2..=80 {
                for k in LegendreValue::BOTH {
                    assert_eq!(
                        size_closed_form(n, p(q), k),
                        size_closed_form_with(n, k, &table)
                    );
                }
            }
        }
    }

    #[test]
    fn omega_examples() {
        assert_eq!(omega_set(1, 4, p(3), Plus), Ok(BTreeSet::new()));
        assert_eq!(omega_set(1, 4, p(3), Minus), Ok(BTreeSet::from([2])));
        assert_eq!(omega_set(3, 5, p(3), Plus), Ok(BTreeSet::from([1])));
        assert!(omega_set(4, 4, p(3), Plus).is_err());
        assert!(omega_set(0, 4, p(3), Plus).is_err());
    }

    #[test]
    fn pi_examples() {
        assert_eq!(pi_set(4, 4, p(3), Plus), Ok(BTreeSet::new()));
        assert_eq!(pi_set(4, 5, p(3), Plus), Ok(BTreeSet::new()));
        assert_eq!(pi_set(5, 5, p(3), Plus), Ok(BTreeSet::new()));
        assert_eq!(pi_set(2, 4, p(5), Plus), Ok(BTreeSet::from([1])));
        assert!(pi_set(3, 4, p(3), Plus).is_err());
        assert!(pi_set(5, 4, p(3), Plus).is_err());
    }

    #[test]
    fn profile_splits_head_and_tail() {
        let head = residue_profile(3, 5, p(3), Plus).unwrap();
        assert_eq!(head.epsilon, None);
        assert_eq!(head.omega, Some(BTreeSet::from([1])));
        assert_eq!(head.pi, None);
        assert_eq!(head.residue_pool(), 1..=2);

        let tail = residue_profile(5, 5, p(3), Plus).unwrap();
        assert_eq!(tail.epsilon, Some(2));
        assert_eq!(tail.omega, None);
        assert_eq!(tail.pi, Some(BTreeSet::new()));
        assert!(residue_profile(6, 5, p(3), Plus).is_err());
    }

    #[test]
    fn degree_examples() {
        assert_eq!(degree_closed_form(2, 3, p(3), Plus), Ok(0));
        assert_eq!(degree_closed_form(1, 3, p(3), Plus), Ok(1));
        assert_eq!(degree_closed_form(3, 3, p(3), Plus), Ok(1));
        assert!(degree_closed_form(0, 3, p(3), Plus).is_err());
        assert!(degree_closed_form(4, 3, p(3), Plus).is_err());
    }

    #[test]
    fn min_max_examples() {
        assert_eq!(min_max_degree(1, p(3)), Ok((0, 1)));
        assert_eq!(min_max_degree(2, p(3)), Ok((1, 2)));
        assert_eq!(min_max_degree(1, p(5)), Ok((1, 2)));
        assert!(min_max_degree(0, p(5)).is_err());
        for (q, pp) in [(1, 3), (2, 3), (1, 5)] {
            let g = LegendreGraph::with_identity(q * pp, p(pp), Plus);
            let (lo, hi) = min_max_degree(q, p(pp)).unwrap();
            assert_eq!(g.min_degree(), Some(lo as usize));
            assert_eq!(g.max_degree(), Some(hi as usize));
        }
    }
}
