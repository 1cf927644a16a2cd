//! The signed counting map `v`, the degree invariants `G` and `Ḡ`, genus, and
//! the genus-minimizing predicate.
//!
//! `Ḡ` has three independent evaluation routes (see [`GbarMode`]); they are
//! expected to agree exactly on every valid triple and the test-suite checks
//! that they do.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::modmath::{gcd, inv, md, mul_mod, MODULUS_LIMIT};

/// A candidate `(p, q, k)`: `q` a unit mod `p`, `k` a nonzero class mod `p`.
///
/// Both `q` and `k` are stored by their canonical representatives, so `k()`
/// is the `κ = [k]_p` used throughout.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Triple {
    p: i64,
    q: i64,
    k: i64,
}

impl Triple {
    pub fn new(p: i64, q: i64, k: i64) -> Result<Self> {
        if p < 2 {
            return Err(Error::usage(format!("p must be >= 2, got {p}")));
        }
        if p >= MODULUS_LIMIT {
            return Err(Error::usage(format!(
                "p = {p} exceeds the 2^40 width guard"
            )));
        }
        let q = md(q, p);
        let k = md(k, p);
        let g = gcd(q, p);
        if g != 1 {
            return Err(Error::NotUnit {
                value: q,
                modulus: p,
                gcd: g,
            });
        }
        if k == 0 {
            return Err(Error::usage(format!("k must be nonzero mod p = {p}")));
        }
        Ok(Triple { p, q, k })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    /// `[k]_p`.
    pub fn k(&self) -> i64 {
        self.k
    }

    /// The triple with `q` replaced by its inverse mod `p`.
    pub fn with_inverse_q(&self) -> Triple {
        Triple {
            q: inv(self.q, self.p).expect("q is a unit by construction"),
            ..*self
        }
    }

    /// The set `Q = {aq : 0 <= a < κ}`, sorted ascending.
    pub fn q_points(&self) -> Vec<i64> {
        let mut pts: Vec<i64> = (0..self.k).map(|a| mul_mod(a, self.q, self.p)).collect();
        pts.sort_unstable();
        pts
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.p, self.q, self.k)
    }
}

/// Evaluator for `v_(p,q,k)` backed by the sorted point set `Q`.
#[derive(Clone, Debug)]
pub struct VMap {
    triple: Triple,
    points: Vec<i64>,
}

impl VMap {
    pub fn new(triple: Triple) -> Self {
        VMap {
            points: triple.q_points(),
            triple,
        }
    }

    pub fn triple(&self) -> Triple {
        self.triple
    }

    pub fn points(&self) -> &[i64] {
        &self.points
    }

    /// `#(Q̃ ∩ (0, x])` for an integer `x >= 0`.
    fn count_upto(&self, x: i64) -> i64 {
        let p = self.triple.p;
        let (blocks, r) = (x.div_euclid(p), x.rem_euclid(p));
        // points in (0, r]; 0 is always in Q and is excluded here
        let upto_r = self.points.partition_point(|&t| t <= r) as i64 - 1;
        blocks * self.triple.k + upto_r
    }

    /// `#(Q̃ ∩ (lo, hi])` for arbitrary integers `lo <= hi`.
    pub fn count_between(&self, lo: i64, hi: i64) -> i64 {
        debug_assert!(lo <= hi);
        let p = self.triple.p;
        let shift = lo.div_euclid(p) * p;
        self.count_upto(hi - shift) - self.count_upto(lo - shift)
    }

    /// `v` evaluated on explicit integer lifts `x_lift <= y_lift`.
    pub fn v_lifts(&self, x_lift: i64, y_lift: i64) -> i64 {
        if x_lift > y_lift {
            return -self.v_lifts(y_lift, x_lift);
        }
        (y_lift - x_lift) * self.triple.k - self.count_between(x_lift, y_lift) * self.triple.p
    }

    /// `v(x, y)` on residues, with the lift convention `ỹ - x̃ = [y - x]_p`.
    pub fn v(&self, x: i64, y: i64) -> i64 {
        let p = self.triple.p;
        let x0 = md(x, p);
        let gap = md(y - x, p);
        if gap == 0 {
            return 0;
        }
        self.v_lifts(x0, x0 + gap)
    }
}

/// `v_(p,q,k)(x, y)`. Builds a fresh [`VMap`]; use that directly in loops.
pub fn v_pair(t: &Triple, x: i64, y: i64) -> i64 {
    VMap::new(*t).v(x, y)
}

/// The sequence `f(0), ..., f(p)` of the rescaled Alexander polynomial and its
/// degree `G = max f - min f`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FProfile {
    pub values: Vec<i64>,
    pub degree: i64,
}

pub fn f_profile(t: &Triple) -> FProfile {
    let (p, q, k) = (t.p, t.q, t.k);
    let mut values = Vec::with_capacity(p as usize + 1);
    let mut f = 0i64;
    let mut iq = 0i64;
    values.push(0);
    for _ in 0..p {
        f += if iq < k { k - p } else { k };
        values.push(f);
        iq += q;
        if iq >= p {
            iq -= p;
        }
    }
    let body = &values[..p as usize];
    let degree = body.iter().max().unwrap() - body.iter().min().unwrap();
    FProfile { values, degree }
}

/// `G(p, q, k)`, the degree of the rescaled Alexander polynomial.
pub fn big_g(t: &Triple) -> i64 {
    let (p, q, k) = (t.p, t.q, t.k);
    let (mut f, mut lo, mut hi) = (0i64, 0i64, 0i64);
    let mut iq = 0i64;
    for _ in 0..p - 1 {
        f += if iq < k { k - p } else { k };
        lo = lo.min(f);
        hi = hi.max(f);
        iq += q;
        if iq >= p {
            iq -= p;
        }
    }
    hi - lo
}

/// Genus of the simple knot with `G`-triple `t`: `(G - p + 1) / 2`.
///
/// Only defined when `k` generates `Z/p`; otherwise the Alexander polynomial
/// is not symmetric and the formula does not apply.
pub fn genus(t: &Triple) -> Result<i64> {
    if gcd(t.k, t.p) != 1 {
        return Err(Error::usage(format!(
            "genus formula needs gcd(k, p) = 1, got gcd({}, {}) = {}",
            t.k,
            t.p,
            gcd(t.k, t.p)
        )));
    }
    let num = big_g(t) - t.p + 1;
    if num < 0 || num % 2 != 0 {
        return Err(Error::internal(format!(
            "G - p + 1 = {num} is not a non-negative even integer for {t}"
        )));
    }
    Ok(num / 2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GbarMode {
    /// Sorted `Q` potential, `O(κ log κ)`.
    Fast,
    /// `G` of the triple with `q` inverted, `O(p)`.
    Oracle,
    /// Prefix potential over all of `Z/p`, `O(p)`.
    FullDomain,
}

impl FromStr for GbarMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fast" => Ok(GbarMode::Fast),
            "oracle" => Ok(GbarMode::Oracle),
            "full" | "full_domain" | "full-domain" => Ok(GbarMode::FullDomain),
            _ => Err(Error::usage(format!("unknown gbar mode {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GbarResult {
    pub gbar: i64,
    /// Number of ordered pairs `(x, y) ∈ Q × Q` with `v(x, y) = max_{Q×Q} v`.
    pub argmax_count: u64,
    /// The lexicographically smallest such pair.
    pub max_pair: (i64, i64),
}

impl GbarResult {
    /// `max_{x,y ∈ Q} |v(x, y)|`, recovered from `Ḡ`.
    pub fn max_q_v(&self, t: &Triple) -> i64 {
        self.gbar - t.p + t.k
    }
}

/// Positions of the minimum and maximum of a sequence, plus the extreme values.
fn extremes(values: impl Iterator<Item = (i64, i64)>) -> (i64, Vec<i64>, i64, Vec<i64>) {
    let mut lo = i64::MAX;
    let mut hi = i64::MIN;
    let mut lo_at = Vec::new();
    let mut hi_at = Vec::new();
    for (pos, v) in values {
        if v < lo {
            lo = v;
            lo_at.clear();
        }
        if v == lo {
            lo_at.push(pos);
        }
        if v > hi {
            hi = v;
            hi_at.clear();
        }
        if v == hi {
            hi_at.push(pos);
        }
    }
    (lo, lo_at, hi, hi_at)
}

fn gbar_fast(t: &Triple) -> GbarResult {
    let pts = t.q_points();
    // h(i) = t_i κ - i p, with i counted from 1
    let h = pts
        .iter()
        .enumerate()
        .map(|(i, &ti)| (ti, ti * t.k - (i as i64 + 1) * t.p));
    let (lo, lo_at, hi, hi_at) = extremes(h);
    GbarResult {
        gbar: hi - lo + t.p - t.k,
        argmax_count: (lo_at.len() * hi_at.len()) as u64,
        max_pair: (lo_at[0], hi_at[0]),
    }
}

fn gbar_full_domain(t: &Triple) -> GbarResult {
    let (p, k) = (t.p, t.k);
    let mut in_q = vec![false; p as usize];
    for a in 0..k {
        in_q[mul_mod(a, t.q, p) as usize] = true;
    }
    // H(x) = xκ - #(Q̃ ∩ (0, x]) p
    let mut acc = 0i64;
    let potential = (0..p).map(move |x| {
        if x > 0 {
            acc += k - if in_q[x as usize] { p } else { 0 };
        }
        (x, acc)
    });
    let (lo, lo_at, hi, hi_at) = extremes(potential);
    // maxima sit one step before a point of Q
    let x_star = lo_at[0];
    let y_star = hi_at.iter().map(|&y| md(y + 1, p)).min().unwrap();
    GbarResult {
        gbar: hi - lo,
        argmax_count: (lo_at.len() * hi_at.len()) as u64,
        max_pair: (x_star, y_star),
    }
}

fn gbar_oracle(t: &Triple) -> GbarResult {
    let p = t.p;
    let prof = f_profile(&t.with_inverse_q());
    let body = prof.values[..p as usize].iter().copied().enumerate();
    let (_, lo_at, _, hi_at) = extremes(body.map(|(i, v)| (i as i64, v)));
    // f(x) = H(x - 1) + const
    let x_star = lo_at.iter().map(|&x| md(x - 1, p)).min().unwrap();
    let y_star = hi_at[0];
    GbarResult {
        gbar: prof.degree,
        argmax_count: (lo_at.len() * hi_at.len()) as u64,
        max_pair: (x_star, y_star),
    }
}

pub fn gbar(t: &Triple, mode: GbarMode) -> GbarResult {
    match mode {
        GbarMode::Fast => gbar_fast(t),
        GbarMode::Oracle => gbar_oracle(t),
        GbarMode::FullDomain => gbar_full_domain(t),
    }
}

/// `max_{x,y ∈ Q} |v(x, y)|` via the sorted potential.
pub fn max_q_abs_v(t: &Triple) -> i64 {
    let r = gbar_fast(t);
    r.max_q_v(t)
}

/// `Ḡ(p, q, k) < 2p`, evaluated as `max_Q |v| < p + κ`.
pub fn is_genus_minimizing(t: &Triple) -> bool {
    max_q_abs_v(t) < t.p + t.k
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn t(p: i64, q: i64, k: i64) -> Triple {
        Triple::new(p, q, k).unwrap()
    }

    /// Counts lattice points and `Q̃` points one by one.
    fn v_by_counting(tr: &Triple, x: i64, y: i64) -> i64 {
        let p = tr.p();
        let pts = tr.q_points();
        let (x0, mut y0) = (md(x, p), md(y, p));
        if y0 <= x0 {
            y0 += p;
        }
        if x0 == md(y, p) {
            return 0;
        }
        let mut ints = 0;
        let mut qs = 0;
        for z in x0 + 1..=y0 {
            ints += 1;
            if pts.binary_search(&md(z, p)).is_ok() {
                qs += 1;
            }
        }
        ints * tr.k() - qs * p
    }

    #[test]
    fn triple_validation() {
        assert!(matches!(
            Triple::new(10, 4, 3),
            Err(Error::NotUnit { gcd: 2, .. })
        ));
        assert!(matches!(Triple::new(10, 3, 20), Err(Error::Usage(_))));
        assert!(matches!(Triple::new(1, 0, 1), Err(Error::Usage(_))));
        assert!(Triple::new(MODULUS_LIMIT, 1, 1).is_err());
        assert_eq!(t(5, -2, 7), t(5, 3, 2));
    }

    #[test]
    fn v_pair_examples() {
        let tr = t(5, 3, 2);
        assert_eq!(v_by_counting(&tr, 0, 3), 1);
        assert_eq!(v_pair(&tr, 0, 3), 1);
        assert_eq!(v_pair(&tr, 3, 0), -1);
        assert_eq!(v_pair(&tr, 4, 4), 0);
    }

    #[test]
    fn f_profile_examples() {
        let prof = f_profile(&t(5, 2, 2));
        assert_eq!(prof.values, vec![0, -3, -1, 1, -2, 0]);
        assert_eq!(prof.degree, 4);
        assert_eq!(f_profile(&t(5, 4, 2)).degree, 6);
        assert_eq!(big_g(&t(5, 2, 2)), 4);
        assert_eq!(big_g(&t(5, 4, 2)), 6);
    }

    #[test]
    fn genus_examples() {
        assert_eq!(genus(&t(5, 2, 2)).unwrap(), 0);
        assert_eq!(genus(&t(5, 4, 2)).unwrap(), 1);
        // κ = 1 has G = p - 1
        assert_eq!(genus(&t(11, 3, 1)).unwrap(), 0);
        assert!(matches!(genus(&t(6, 1, 2)), Err(Error::Usage(_))));
    }

    #[test]
    fn gbar_examples() {
        for mode in [GbarMode::Fast, GbarMode::Oracle, GbarMode::FullDomain] {
            assert_eq!(gbar(&t(5, 3, 2), mode).gbar, 4, "{mode:?}");
            assert_eq!(gbar(&t(25, 6, 5), mode).gbar, 40, "{mode:?}");
            assert_eq!(gbar(&t(49, 30, 7), mode).gbar, 84, "{mode:?}");
        }
        assert_eq!(big_g(&t(5, 2, 2)), 4);
        let r = gbar(&t(25, 6, 5), GbarMode::Fast);
        assert_eq!(r.argmax_count, 1);
        assert_eq!(v_pair(&t(25, 6, 5), r.max_pair.0, r.max_pair.1), 20);
    }

    #[test]
    fn genus_minimizing_examples() {
        assert!(is_genus_minimizing(&t(25, 6, 5)));
        assert!(!is_genus_minimizing(&t(25, 2, 5)));
        let bad = t(25, 2, 5);
        let vm = VMap::new(bad);
        let big = vm
            .points()
            .iter()
            .flat_map(|&x| vm.points().iter().map(move |&y| (x, y)))
            .any(|(x, y)| vm.v(x, y).abs() >= 30);
        assert!(big);
        assert!(is_genus_minimizing(&t(5, 4, 2)));
        assert_eq!(gbar(&t(5, 4, 2), GbarMode::Fast).gbar, 6);
    }

    #[test]
    fn gbar_mode_parse() {
        assert_eq!("full".parse::<GbarMode>().unwrap(), GbarMode::FullDomain);
        assert!("slow".parse::<GbarMode>().is_err());
    }

    fn small_triple() -> impl Strategy<Value = Triple> {
        (2i64..160)
            .prop_flat_map(|p| (Just(p), 1..p, 1..p))
            .prop_filter_map("q unit", |(p, q, k)| Triple::new(p, q, k).ok())
    }

    proptest! {
        #[test]
        fn v_matches_counting(tr in small_triple(), x in 0i64..400, y in 0i64..400) {
            prop_assert_eq!(v_pair(&tr, x, y), v_by_counting(&tr, x, y));
        }

        #[test]
        fn v_is_antisymmetric_and_additive(tr in small_triple(), x in 0i64..400, a in 0i64..400, b in 0i64..400) {
            let vm = VMap::new(tr);
            let p = tr.p();
            prop_assert_eq!(vm.v(x, x + a), -vm.v(x + a, x));
            // consistent lifts x <= y <= z <= x + p
            let (a, b) = (a % (p + 1), b % (p + 1));
            let (lo, hi) = (a.min(b), a.max(b));
            prop_assert_eq!(vm.v_lifts(x, x + hi), vm.v_lifts(x, x + lo) + vm.v_lifts(x + lo, x + hi));
            // v(x, y) ≡ [y - x]_p κ (mod p)
            prop_assert_eq!(md(vm.v(x, x + a), p), mul_mod(md(a, p), tr.k(), p));
        }

        #[test]
        fn f_profile_closes(tr in small_triple()) {
            let prof = f_profile(&tr);
            prop_assert_eq!(prof.values[0], 0);
            prop_assert_eq!(*prof.values.last().unwrap(), 0);
            for w in prof.values.windows(2) {
                let step = w[1] - w[0];
                prop_assert!(step == tr.k() || step == tr.k() - tr.p());
            }
            prop_assert_eq!(prof.degree, big_g(&tr));
        }

        #[test]
        fn gbar_modes_agree(tr in small_triple()) {
            let fast = gbar(&tr, GbarMode::Fast);
            prop_assert_eq!(fast, gbar(&tr, GbarMode::Oracle));
            prop_assert_eq!(fast, gbar(&tr, GbarMode::FullDomain));
            prop_assert!(fast.argmax_count >= 1);
            let vm = VMap::new(tr);
            prop_assert_eq!(vm.v(fast.max_pair.0, fast.max_pair.1), fast.max_q_v(&tr));
        }

        #[test]
        fn genus_is_integral_for_primitive_k(tr in small_triple()) {
            prop_assume!(gcd(tr.k(), tr.p()) == 1);
            prop_assert!(genus(&tr).is_ok());
        }
    }
}
