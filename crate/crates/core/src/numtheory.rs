//! Primes, modular exponentiation and the Legendre symbol.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Mul, Neg};

use crate::error::{Error, Result};

/// A modulus that has been checked to be an odd prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize), serde(transparent))]
pub struct OddPrime(u64);

impl OddPrime {
    pub fn new(value: u64) -> Result<Self> {
        if value >= 3 && value % 2 == 1 && is_prime(value) {
            Ok(OddPrime(value))
        } else {
            Err(Error::NotOddPrime(value))
        }
    }

    #[inline]
    pub const fn get(self) -> u64 {
        self.0
    }

    /// `(p - 1) / 2`, the number of residues (and of nonresidues) in `1..p`.
    #[inline]
    pub const fn half(self) -> u64 {
        (self.0 - 1) / 2
    }
}

impl TryFrom<u64> for OddPrime {
    type Error = Error;

    fn try_from(value: u64) -> Result<Self> {
        OddPrime::new(value)
    }
}

impl From<OddPrime> for u64 {
    fn from(p: OddPrime) -> u64 {
        p.0
    }
}

impl fmt::Display for OddPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Value of a Legendre symbol on an argument coprime to `p`.
///
/// The divisible case has no representation here; callers that can meet a
/// sum `≡ 0 (mod p)` handle it on their own branch. The same two-valued type
/// doubles as the `k` selector of a Legendre graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LegendreValue {
    Residue,
    Nonresidue,
}

impl LegendreValue {
    #[inline]
    pub const fn sign(self) -> i64 {
        match self {
            LegendreValue::Residue => 1,
            LegendreValue::Nonresidue => -1,
        }
    }

    pub const fn from_sign(sign: i64) -> Option<Self> {
        match sign {
            1 => Some(LegendreValue::Residue),
            -1 => Some(LegendreValue::Nonresidue),
            _ => None,
        }
    }

    pub const BOTH: [LegendreValue; 2] = [LegendreValue::Residue, LegendreValue::Nonresidue];
}

impl Neg for LegendreValue {
    type Output = LegendreValue;

    fn neg(self) -> LegendreValue {
        match self {
            LegendreValue::Residue => LegendreValue::Nonresidue,
            LegendreValue::Nonresidue => LegendreValue::Residue,
        }
    }
}

impl Mul for LegendreValue {
    type Output = LegendreValue;

    fn mul(self, rhs: LegendreValue) -> LegendreValue {
        if self == rhs {
            LegendreValue::Residue
        } else {
            LegendreValue::Nonresidue
        }
    }
}

impl fmt::Display for LegendreValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.sign())
    }
}

#[cfg(feature = "serde")]
impl serde::Serialize for LegendreValue {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> core::result::Result<S::Ok, S::Error> {
        serializer.serialize_i64(self.sign())
    }
}

/// Deterministic trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d <= n / d {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// All primes `<= m` in increasing order (sieve of Eratosthenes).
pub fn sieve_primes(m: u64) -> Vec<u64> {
    if m < 2 {
        return Vec::new();
    }
    let m = usize::try_from(m).expect("sieve bound exceeds the address space");
    let mut composite = vec![false; m + 1];
    let mut primes = Vec::new();
    for i in 2..=m {
        if composite[i] {
            continue;
        }
        primes.push(i as u64);
        let mut j = i.saturating_mul(i);
        while j <= m {
            composite[j] = true;
            j += i;
        }
    }
    primes
}

/// `π(m)`, the number of primes not exceeding `m`.
pub fn prime_count(m: u64) -> usize {
    sieve_primes(m).len()
}

/// `base^exponent mod modulus` by square-and-multiply with `u128`
/// intermediates, so any `u64` modulus is safe.
///
/// # Panics
///
/// Panics if `modulus` is zero.
pub fn mod_pow(base: u64, exponent: u64, modulus: u64) -> u64 {
    assert!(modulus != 0, "mod_pow: modulus must be nonzero");
    if modulus == 1 {
        return 0;
    }
    let m = modulus as u128;
    let mut acc: u128 = 1;
    let mut b = base as u128 % m;
    let mut e = exponent;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc as u64
}

/// `a mod p` in `[0, p)`, for any signed `a`.
#[inline]
pub fn reduce(a: i64, p: OddPrime) -> u64 {
    (a as i128).rem_euclid(p.get() as i128) as u64
}

/// `(a/p)` by Euler's criterion on `a mod p`.
///
/// Fails with [`Error::DivisibleArgument`] when `p | a`.
pub fn legendre_symbol(a: i64, p: OddPrime) -> Result<LegendreValue> {
    let r = reduce(a, p);
    euler_symbol(r, p).ok_or(Error::DivisibleArgument { a, p: p.get() })
}

fn euler_symbol(a: u64, p: OddPrime) -> Option<LegendreValue> {
    let a = a % p.get();
    if a == 0 {
        return None;
    }
    if mod_pow(a, p.half(), p.get()) == 1 {
        Some(LegendreValue::Residue)
    } else {
        Some(LegendreValue::Nonresidue)
    }
}

/// The quadratic residues of `p` in `1..p`.
pub fn quadratic_residues(p: OddPrime) -> BTreeSet<u64> {
    (1..p.get())
        .filter(|&a| euler_symbol(a, p) == Some(LegendreValue::Residue))
        .collect()
}

/// Something that can evaluate `(a/p)` for one fixed odd prime.
///
/// `symbol` returns `None` exactly when `p | a`.
pub trait SymbolSource {
    fn prime(&self) -> OddPrime;
    fn symbol(&self, a: u64) -> Option<LegendreValue>;
}

/// Euler's criterion, evaluated on demand.
impl SymbolSource for OddPrime {
    #[inline]
    fn prime(&self) -> OddPrime {
        *self
    }

    #[inline]
    fn symbol(&self, a: u64) -> Option<LegendreValue> {
        euler_symbol(a, *self)
    }
}

/// Precomputed `(a/p)` for every residue class, built from the squares
/// `x^2 mod p` rather than from Euler's criterion.
#[derive(Debug, Clone)]
pub struct ResidueTable {
    p: OddPrime,
    // 0 for the zero class, otherwise +1 / -1
    signs: Vec<i8>,
}

impl ResidueTable {
    pub fn new(p: OddPrime) -> Self {
        let n = usize::try_from(p.get()).expect("prime too large for a residue table");
        let mut signs = vec![-1i8; n];
        signs[0] = 0;
        for x in 1..=p.half() {
            signs[(x * x % p.get()) as usize] = 1;
        }
        ResidueTable { p, signs }
    }
}

impl SymbolSource for ResidueTable {
    #[inline]
    fn prime(&self) -> OddPrime {
        self.p
    }

    #[inline]
    fn symbol(&self, a: u64) -> Option<LegendreValue> {
        LegendreValue::from_sign(self.signs[(a % self.p.get()) as usize] as i64)
    }
}
