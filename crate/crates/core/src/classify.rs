//! Closed-form classification of genus-minimizing triples.
//!
//! * [`gm_q_set`]: the genus-minimizing `q` at `p = k²`.
//! * [`match_families`]: the Berge families I–V a pair `(p, k)` belongs to.
//!   Family VI is a special case of V and is not reported separately.
//! * [`reduce_p`]: the passage from `p > k²` to a triple at `p = k²`.
//! * [`conjecture_check`]: compares the family prediction with `Ḡ`.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::invariants::{gbar, is_genus_minimizing, GbarMode, Triple};
use crate::modmath::{gcd, inv, md, mul_mod, Sign, MODULUS_LIMIT};

fn check_k(k: i64) -> Result<i64> {
    if k < 2 {
        return Err(Error::usage(format!("k must be >= 2, got {k}")));
    }
    match k.checked_mul(k) {
        Some(kk) if kk < MODULUS_LIMIT => Ok(kk),
        _ => Err(Error::usage(format!("k = {k} too large"))),
    }
}

fn divisors(n: i64) -> Vec<i64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// The genus-minimizing `q` modulo `k²`, from the closed-form list.
pub fn gm_q_set(k: i64) -> Result<BTreeSet<i64>> {
    let kk = check_k(k)?;
    let mut out = BTreeSet::new();
    let mut both = |x: i64| {
        out.insert(md(x, kk));
        out.insert(md(-x, kk));
    };
    for i in 0..k {
        if matches!(gcd(i, k), 1 | 2) {
            both(i * k + 1);
            both(i * k - 1);
        }
    }
    for d in divisors(k + 1) {
        let e = (k + 1) / d;
        if e % 2 == 1 {
            both(e * (k + 1));
        }
        if d % 2 == 1 {
            both(e * (2 * k - 1));
        }
    }
    for d in divisors(k - 1) {
        let e = (k - 1) / d;
        if e % 2 == 1 {
            both(e * (k - 1));
        }
        if d % 2 == 1 {
            both(e * (2 * k + 1));
        }
    }
    for d in divisors(2 * k + 1) {
        both((2 * k + 1) / d * (k - 1));
    }
    for d in divisors(2 * k - 1) {
        both((2 * k - 1) / d * (k + 1));
    }
    Ok(out)
}

#[allow(non_camel_case_types)]
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Family {
    /// `p ≡ ik ± 1`; families I and II share this congruence.
    I_II,
    III,
    IV,
    V,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::I_II => "I_II",
            Family::III => "III",
            Family::IV => "IV",
            Family::V => "V",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct FamilyMatch {
    pub family: Family,
    pub sign: Sign,
    /// `i` for I/II, the divisor `d` for III–V.
    pub witness: i64,
    /// `[p]_{k²}`.
    #[serde(skip)]
    pub congruence: i64,
}

impl fmt::Display for FamilyMatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.family, self.sign, self.witness)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyReport {
    pub p: i64,
    pub k: i64,
    /// `gcd(p, k) = 1`. When false, `matches` is empty by convention.
    pub coprime: bool,
    pub matches: Vec<FamilyMatch>,
}

/// All family memberships of `(p, k)`, sorted by `(family, sign, witness)`.
pub fn match_families(p: i64, k: i64) -> Result<FamilyReport> {
    let kk = check_k(k)?;
    let coprime = gcd(p, k) == 1;
    let mut report = FamilyReport {
        p,
        k,
        coprime,
        matches: Vec::new(),
    };
    if !coprime {
        return Ok(report);
    }
    let r = md(p, kk);
    let mut found = BTreeSet::new();
    for i in 0..k {
        if matches!(gcd(i, k), 1 | 2) {
            for sign in [Sign::Plus, Sign::Minus] {
                if md(i * k + sign.value(), kk) == r {
                    found.insert(FamilyMatch {
                        family: Family::I_II,
                        sign,
                        witness: i,
                        congruence: r,
                    });
                }
            }
        }
    }
    let mut test = |family, witness: i64, base: i64| {
        for sign in [Sign::Plus, Sign::Minus] {
            if md(sign.value() * base, kk) == r {
                found.insert(FamilyMatch {
                    family,
                    sign,
                    witness,
                    congruence: r,
                });
            }
        }
    };
    for d in divisors(k - 1) {
        if ((k - 1) / d) % 2 == 1 {
            test(Family::III, d, d * (2 * k + 1));
        }
        if d % 2 == 1 {
            test(Family::V, d, d * (k - 1));
        }
    }
    for d in divisors(k + 1) {
        if ((k + 1) / d) % 2 == 1 {
            test(Family::III, d, d * (2 * k - 1));
        }
        if d % 2 == 1 {
            test(Family::V, d, d * (k + 1));
        }
    }
    for d in divisors(2 * k - 1) {
        test(Family::IV, d, d * (k + 1));
    }
    for d in divisors(2 * k + 1) {
        test(Family::IV, d, d * (k - 1));
    }
    report.matches = found.into_iter().collect();
    Ok(report)
}

/// The triple `(k², [p]_{k²}⁻¹, k)` attached to `(p, k)` with `p > k²`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ReducedTriple {
    pub triple: Triple,
    /// `[-p]_{k²}`.
    pub eps_p: i64,
    /// `[-p⁻¹]_k`, so that `k | np + 1`.
    pub n: i64,
}

fn check_reduction_input(p: i64, k: i64) -> Result<i64> {
    let kk = check_k(k)?;
    if p <= kk {
        return Err(Error::usage(format!(
            "reduction needs p > k², got p={p} k={k}"
        )));
    }
    if p >= MODULUS_LIMIT {
        return Err(Error::usage(format!(
            "p = {p} exceeds the 2^40 width guard"
        )));
    }
    if gcd(p, k) != 1 {
        return Err(Error::usage(format!(
            "reduction needs gcd(p, k) = 1, got p={p} k={k}"
        )));
    }
    Ok(kk)
}

pub fn reduce_p(p: i64, k: i64) -> Result<ReducedTriple> {
    let kk = check_reduction_input(p, k)?;
    let triple = Triple::new(kk, inv(p, kk)?, k)?;
    let n = md(-inv(p, k)?, k);
    if md(n * p + 1, k) != 0 {
        return Err(Error::internal(format!(
            "k does not divide np + 1 for p={p} k={k}"
        )));
    }
    Ok(ReducedTriple {
        triple,
        eps_p: md(-p, kk),
        n,
    })
}

/// The two intermediate triples `A = (k², ε, nk)` and `B = (p, k², (np+1)/k)`
/// used to pass between `p` and `k²`.
pub fn bridge_triples(p: i64, k: i64) -> Result<(Triple, Triple)> {
    let red = reduce_p(p, k)?;
    let kk = k * k;
    let a = Triple::new(kk, red.eps_p, red.n * k)?;
    let b = Triple::new(
        p,
        kk,
        (red.n as i128 * p as i128 + 1).div_euclid(k as i128) as i64,
    )?;
    Ok((a, b))
}

/// The triple `(p, k⁻², k)` whose `Ḡ` decides the surgery question.
pub fn surgery_triple(p: i64, k: i64) -> Result<Triple> {
    let k_sq = mul_mod(k, k, p);
    Triple::new(p, inv(k_sq, p)?, k)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureCheck {
    pub p: i64,
    pub q: i64,
    pub k: i64,
    /// `q ≡ k² (mod p)`.
    pub congruence_ok: bool,
    pub families: Vec<FamilyMatch>,
    /// `Ḡ(p, k⁻², k)`.
    pub gbar: i64,
    pub gm: bool,
    pub eligible: bool,
    /// Genus-minimizing exactly when some family matches.
    pub consistent: bool,
}

pub fn conjecture_check(p: i64, q: i64, k: i64) -> Result<ConjectureCheck> {
    let kk = check_k(k)?;
    if p <= kk {
        return Err(Error::OutOfScope(format!("p < k² (p={p}, k={k})")));
    }
    let t = Triple::new(p, q, k)?;
    if gcd(p, k) != 1 {
        return Err(Error::usage(format!("need gcd(p, k) = 1, got p={p} k={k}")));
    }
    let congruence_ok = t.q() == md(kk, p);
    let families = match_families(p, k)?.matches;
    let st = surgery_triple(p, k)?;
    let gm = is_genus_minimizing(&st);
    Ok(ConjectureCheck {
        p,
        q: t.q(),
        k,
        congruence_ok,
        gbar: gbar(&st, GbarMode::Fast).gbar,
        gm,
        eligible: congruence_ok && !families.is_empty(),
        consistent: gm == !families.is_empty(),
        families,
    })
}
