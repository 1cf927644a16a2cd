//! Arithmetic-run decomposition of `Q` at `p = k²` for `q` of positive type,
//! and detection of mobile, pseudomobile and antipseudomobile points.
//!
//! Everything here is a diagnostic: the routines compute the objects and
//! report whether the expected structural statements hold, without assuming
//! they do. Those statements are only expected for `k > 100`
//! (see [`STRUCTURE_K_MIN`]).

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::invariants::{is_genus_minimizing, Triple, VMap};
use crate::modmath::{gcd, md, mul_mod, Sign};
use crate::params::{derive_params, ParamSet, QType};

/// Structural propositions are asserted only for `k` at least this large.
pub const STRUCTURE_K_MIN: i64 = 101;

fn check_theta_args(d: i64, eps: i64) -> Result<()> {
    if d < 2 || !(0 < eps && eps < d) || gcd(d, eps) != 1 {
        return Err(Error::usage(format!(
            "need d >= 2 and 0 < eps < d coprime to d, got d={d} eps={eps}"
        )));
    }
    Ok(())
}

fn theta_unchecked(d: i64, eps: i64, j: i64) -> i64 {
    ((j + 1) * eps).div_euclid(d) - (j * eps).div_euclid(d)
}

/// `θ^{d,ε}(j)`: 1 if `[jε]_d >= d - ε`, else 0.
///
/// Computed both from that threshold and as `⌊(j+1)ε/d⌋ - ⌊jε/d⌋`; a
/// disagreement is reported as an internal error.
pub fn theta(d: i64, eps: i64, j: i64) -> Result<u8> {
    check_theta_args(d, eps)?;
    let by_threshold = (md(j * eps, d) >= d - eps) as i64;
    let by_floor = theta_unchecked(d, eps, j);
    if by_threshold != by_floor {
        return Err(Error::internal(format!(
            "theta({d}, {eps}, {j}): threshold gives {by_threshold}, floors give {by_floor}"
        )));
    }
    Ok(by_floor as u8)
}

fn xi_sum_unchecked(d: i64, eps: i64, l: i64, j: i64) -> i64 {
    let (l, j) = (md(l, d), md(j, d));
    l * eps - d * (((j + l) * eps).div_euclid(d) - (j * eps).div_euclid(d))
}

/// `d · Ξ^{d,ε}_l(j)`, i.e. `lε - d Σ_{s=j}^{j+l-1} θ(s)` with `l` lifted to `[0, d)`.
pub fn xi_sum(d: i64, eps: i64, l: i64, j: i64) -> Result<i64> {
    check_theta_args(d, eps)?;
    Ok(xi_sum_unchecked(d, eps, l, j))
}

/// The runs `z^j = (z_0^j, ..., z_{n_j}^j)`, `j ∈ Z/d`, of a positive-type `q`.
#[derive(Clone, Debug, Serialize)]
pub struct ZDecomposition {
    pub k: i64,
    pub q: i64,
    pub params: ParamSet,
    pub d: i64,
    /// `[-k]_d` (0 when `d = 1`).
    pub eps_d: i64,
    pub n_lengths: Vec<i64>,
    pub z: Vec<Vec<i64>>,
    /// `[dq]_{k²}`.
    pub dq: i64,
    /// `[dq - kq]_{k²}`.
    pub psi: i64,
    /// `k² - ψ`.
    pub psibar: i64,
}

impl ZDecomposition {
    pub fn modulus(&self) -> i64 {
        self.k * self.k
    }

    /// `z_i^j` with `j` taken mod `d`.
    pub fn at(&self, j: i64, i: i64) -> i64 {
        self.z[md(j, self.d) as usize][i as usize]
    }

    /// `n_j` with `j` taken mod `d`.
    pub fn n(&self, j: i64) -> i64 {
        self.n_lengths[md(j, self.d) as usize]
    }

    /// Last element `z_{n_j}^j`.
    pub fn last(&self, j: i64) -> i64 {
        self.at(j, self.n(j))
    }

    /// The runs concatenated in `j` order; equals `([rd]_k q)_{r=0..k}`.
    pub fn flattened(&self) -> Vec<i64> {
        self.z.iter().flatten().copied().collect()
    }

    fn diff(&self, a: i64, b: i64) -> i64 {
        md(a - b, self.modulus())
    }
}

fn require_positive(k: i64, q: i64) -> Result<ParamSet> {
    let ps = derive_params(k, q)?;
    match ps.q_type {
        QType::Positive => Ok(ps),
        QType::Type0 if ps.xi == Sign::Plus => Ok(ps),
        other => Err(Error::usage(format!(
            "q = {} mod {} has type {other} with ξ = {}; pass ξq = {} instead",
            ps.q,
            k * k,
            ps.xi,
            ps.positive_q()
        ))),
    }
}

/// Splits `Q = {aq : 0 <= a < k}` mod `k²` into the runs of step `[dq]_{k²}`.
///
/// `q` must satisfy `[dq]_{k²} < k²/2`: positive type, or type 0 with `ξ = +1`
/// (which gives a single run).
pub fn z_decompose(k: i64, q: i64) -> Result<ZDecomposition> {
    let ps = require_positive(k, q)?;
    let (q, d) = (ps.q, ps.d);
    let kk = k * k;

    let (eps_d, n_lengths) = if d == 1 {
        (0, vec![k - 1])
    } else {
        let eps = md(-k, d);
        let n = (0..d)
            .map(|j| Ok(k / d - theta(d, eps, j)? as i64))
            .collect::<Result<Vec<_>>>()?;
        (eps, n)
    };
    let z: Vec<Vec<i64>> = n_lengths
        .iter()
        .enumerate()
        .map(|(j, &nj)| {
            let base = md(j as i64 * eps_d, d);
            (0..=nj).map(|i| mul_mod(base + i * d, q, kk)).collect()
        })
        .collect();
    let dq = mul_mod(d, q, kk);
    let psi = md(dq - mul_mod(k, q, kk), kk);

    let zd = ZDecomposition {
        k,
        q,
        params: ps,
        d,
        eps_d,
        n_lengths,
        z,
        dq,
        psi,
        psibar: kk - psi,
    };
    check_decomposition(&zd)?;
    Ok(zd)
}

fn check_decomposition(zd: &ZDecomposition) -> Result<()> {
    let (k, d) = (zd.k, zd.d);
    let kk = zd.modulus();
    let fail = |what: &str| {
        Err(Error::internal(format!(
            "{what} fails for k={k} q={}",
            zd.q
        )))
    };

    let flat = zd.flattened();
    if flat.len() as i64 != k {
        return fail("Σ (n_j + 1) = k");
    }
    for (r, &z) in flat.iter().enumerate() {
        if z != mul_mod(md(r as i64 * d, k), zd.q, kk) {
            return fail("run order z_r = [rd]_k q");
        }
    }
    for j in 0..d {
        for w in zd.z[j as usize].windows(2) {
            if zd.diff(w[1], w[0]) != zd.dq {
                return fail("step z_{i+1} - z_i = dq");
            }
        }
        if d > 1 && zd.diff(zd.at(j + 1, 0), zd.last(j)) != zd.psi {
            return fail("step z_0^{j+1} - z_{n_j}^j = ψ");
        }
    }
    if d > 1 && zd.n_lengths.iter().map(|&n| k / d - n).sum::<i64>() != zd.eps_d {
        return fail("Σ θ(j) = ε");
    }
    let ps = &zd.params;
    if ps.q_type == QType::Positive {
        let expect = (ps.mu.value() * ps.m + ps.gamma.value() * ps.c) * k + ps.alpha.value()
            - ps.gamma.value() * ps.cofactor() * k;
        if md(expect, kk) != zd.psi {
            return fail("ψ = (μm + γc)k + α - γ(ck + αγ)/d k");
        }
    }
    Ok(())
}

/// Values of `v` on consecutive elements of the flattened run sequence.
#[derive(Clone, Debug, Serialize)]
pub struct ConsecutiveCheck {
    pub values: Vec<i64>,
    /// The index `r` with `v(z_r, z_{r+1}) = α(k - k²)`, if the spectrum is right.
    pub r_star: Option<usize>,
    /// Exactly one value is `α(k - k²)` and the remaining `k - 1` are `αk`.
    pub spectrum_ok: bool,
}

pub fn consecutive_v_check(k: i64, q: i64) -> Result<ConsecutiveCheck> {
    let ps = require_positive(k, q)?;
    let kk = k * k;
    let vm = VMap::new(Triple::new(kk, ps.q, k)?);
    let z: Vec<i64> = (0..k).map(|r| mul_mod(md(r * ps.d, k), ps.q, kk)).collect();
    let values: Vec<i64> = (0..k as usize)
        .map(|r| vm.v(z[r], z[(r + 1) % k as usize]))
        .collect();

    let alpha = ps.alpha.value();
    if values.iter().sum::<i64>() != 0 {
        return Err(Error::internal(format!(
            "consecutive v does not sum to 0 for k={k} q={q}"
        )));
    }
    if values.iter().any(|&v| md(v - alpha * k, kk) != 0) {
        return Err(Error::internal(format!(
            "consecutive v not ≡ αk mod k² for k={k} q={q}"
        )));
    }
    let big: Vec<usize> = (0..values.len())
        .filter(|&r| values[r] == alpha * (k - kk))
        .collect();
    let small = values.iter().filter(|&&v| v == alpha * k).count();
    let spectrum_ok = big.len() == 1 && small == values.len() - 1;
    Ok(ConsecutiveCheck {
        values,
        r_star: spectrum_ok.then(|| big[0]),
        spectrum_ok,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Window {
    /// `⟨z_i^j, z_{i+1}^j]`.
    Rel0 { i: i64 },
    /// `⟨z_{n_j-(i+1)}^j, z_{n_j-i}^j]`.
    RelN { i: i64 },
    /// `⟨z_{n_{j-1}}^{j-1}, z_0^j]`.
    Pseudo,
    /// `⟨z_0^j, z_{n_{j-1}}^{j-1}]`.
    Antipseudo,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Side {
    R,
    L,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MobilePoint {
    pub window: Window,
    pub side: Side,
    /// Offset `l ∈ Z/d`, in `[0, d)`.
    pub l: i64,
    /// Times `j` at which the point lies in the window.
    pub active: Vec<i64>,
    /// The activity count predicted from `l` and `ε`.
    pub expected_active: i64,
}

impl MobilePoint {
    pub fn count_ok(&self) -> bool {
        self.active.len() as i64 == self.expected_active
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NeutralizedPair {
    pub window: Window,
    pub l_r: i64,
    pub l_l: i64,
    /// The L point is active exactly when the R point is not.
    pub complementary: bool,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct MobileReport {
    pub mobile: Vec<MobilePoint>,
    pub pseudomobile: Vec<MobilePoint>,
    pub antipseudomobile: Vec<MobilePoint>,
    pub neutralized_pairs: Vec<NeutralizedPair>,
}

impl MobileReport {
    pub fn all_points(&self) -> impl Iterator<Item = &MobilePoint> {
        self.mobile
            .iter()
            .chain(&self.pseudomobile)
            .chain(&self.antipseudomobile)
    }

    pub fn is_empty(&self) -> bool {
        self.all_points().next().is_none()
    }

    fn find(&self, window: Window, side: Side, l: i64) -> Option<&MobilePoint> {
        self.all_points()
            .find(|m| m.window == window && m.side == side && m.l == l)
    }

    fn is_neutralized(&self, p: &MobilePoint) -> bool {
        self.neutralized_pairs.iter().any(|n| {
            n.window == p.window
                && match p.side {
                    Side::R => n.l_r == p.l,
                    Side::L => n.l_l == p.l,
                }
        })
    }

    /// Mirror pairing between the two relative windows and within the
    /// pseudo and antipseudo windows.
    pub fn mirror_ok(&self, zd: &ZDecomposition) -> bool {
        let has = |w, s, l| self.find(w, s, l).is_some();
        for i in 0..rel_window_count(zd) {
            for l in 0..zd.d {
                let (r0, rn) = (Window::Rel0 { i }, Window::RelN { i });
                if has(r0, Side::R, l) != has(rn, Side::L, l)
                    || has(rn, Side::R, l) != has(r0, Side::L, l)
                {
                    return false;
                }
            }
        }
        (0..zd.d).all(|l| {
            has(Window::Pseudo, Side::R, l) == has(Window::Pseudo, Side::L, l)
                && has(Window::Antipseudo, Side::R, l) == has(Window::Antipseudo, Side::L, l)
        })
    }
}

fn rel_window_count(zd: &ZDecomposition) -> i64 {
    (zd.k / zd.d - 1).max(0)
}

/// Which of the two values in a `j`-family is `min_q` and which is `max_q`.
fn min_max_q(zd: &ZDecomposition, values: &[i64]) -> Result<Option<(i64, i64)>> {
    let distinct: BTreeSet<i64> = values.iter().copied().collect();
    let v: Vec<i64> = distinct.into_iter().collect();
    match v.len() {
        1 => Ok(None),
        2 if zd.diff(v[1], v[0]) == zd.dq => Ok(Some((v[0], v[1]))),
        2 if zd.diff(v[0], v[1]) == zd.dq => Ok(Some((v[1], v[0]))),
        _ => Err(Error::internal(format!(
            "family {v:?} is not a pair differing by dq = {} (k={} q={})",
            zd.dq, zd.k, zd.q
        ))),
    }
}

/// `F(j)` for the point tracked by `(window, side, l)`, or `None` when the
/// offset is excluded for that window.
fn family(zd: &ZDecomposition, window: Window, side: Side, l: i64) -> Option<Vec<i64>> {
    let d = zd.d;
    let excluded = match (window, side) {
        (Window::Rel0 { .. }, Side::R) | (Window::RelN { .. }, Side::L) => l == 0,
        (Window::Rel0 { .. }, Side::L) | (Window::RelN { .. }, Side::R) => l == 1,
        _ => l == 0,
    };
    if excluded {
        return None;
    }
    let f = |j: i64| -> i64 {
        let (a, b) = match (window, side) {
            (Window::Rel0 { i }, Side::R) => (zd.at(j + l, 0), zd.at(j, i)),
            (Window::Rel0 { i }, Side::L) => (zd.last(j - l), zd.at(j, i + 1)),
            (Window::RelN { i }, Side::R) => (zd.at(j + l, 0), zd.at(j, zd.n(j) - (i + 1))),
            (Window::RelN { i }, Side::L) => (zd.last(j - l), zd.at(j, zd.n(j) - i)),
            (Window::Pseudo, Side::R) => (zd.at(j + l, 0), zd.last(j - 1)),
            (Window::Pseudo, Side::L) => (zd.last(j - 1 - l), zd.at(j, 0)),
            (Window::Antipseudo, Side::R) => (zd.at(j + l, 0), zd.at(j, 0)),
            (Window::Antipseudo, Side::L) => (zd.last(j - 1 - l), zd.last(j - 1)),
        };
        zd.diff(a, b)
    };
    Some((0..d).map(f).collect())
}

fn expected_activity(zd: &ZDecomposition, window: Window, side: Side, l: i64) -> i64 {
    let shifted = matches!(
        (window, side),
        (Window::Rel0 { .. }, Side::L) | (Window::RelN { .. }, Side::R)
    );
    let l = if shifted { l - 1 } else { l };
    md(l * zd.eps_d, zd.d)
}

fn detect(zd: &ZDecomposition, window: Window, side: Side, l: i64) -> Result<Option<MobilePoint>> {
    let Some(values) = family(zd, window, side, l) else {
        return Ok(None);
    };
    let Some((lo, hi)) = min_max_q(zd, &values)? else {
        return Ok(None);
    };
    let width = match window {
        Window::Rel0 { .. } | Window::RelN { .. } => zd.dq,
        Window::Pseudo => zd.psi,
        Window::Antipseudo => zd.psibar,
    };
    let kk = zd.modulus();
    let (mobile, target) = match side {
        Side::R => (0 < lo && lo < width, lo),
        Side::L => (hi != 0 && kk - hi < width, hi),
    };
    if !mobile {
        return Ok(None);
    }
    let active = (0..zd.d)
        .filter(|&j| values[j as usize] == target)
        .collect();
    Ok(Some(MobilePoint {
        window,
        side,
        l,
        active,
        expected_active: expected_activity(zd, window, side, l),
    }))
}

/// Enumerates every mobile, pseudomobile and antipseudomobile point.
pub fn mobile_report(zd: &ZDecomposition) -> Result<MobileReport> {
    let mut rep = MobileReport::default();
    if zd.d == 1 {
        return Ok(rep);
    }
    let mut windows: Vec<Window> = Vec::new();
    for i in 0..rel_window_count(zd) {
        windows.push(Window::Rel0 { i });
        windows.push(Window::RelN { i });
    }
    windows.push(Window::Pseudo);
    windows.push(Window::Antipseudo);

    for &w in &windows {
        let mut found = Vec::new();
        for side in [Side::R, Side::L] {
            for l in 0..zd.d {
                if let Some(pt) = detect(zd, w, side, l)? {
                    found.push(pt);
                }
            }
        }
        let pair_sum = match w {
            Window::Rel0 { .. } | Window::RelN { .. } => 1,
            _ => 0,
        };
        for r in found.iter().filter(|p| p.side == Side::R) {
            for l in found.iter().filter(|p| p.side == Side::L) {
                if md(r.l + l.l, zd.d) == pair_sum {
                    let complementary =
                        (0..zd.d).all(|j| r.active.contains(&j) != l.active.contains(&j));
                    rep.neutralized_pairs.push(NeutralizedPair {
                        window: w,
                        l_r: r.l,
                        l_l: l.l,
                        complementary,
                    });
                }
            }
        }
        let bucket = match w {
            Window::Rel0 { .. } | Window::RelN { .. } => &mut rep.mobile,
            Window::Pseudo => &mut rep.pseudomobile,
            Window::Antipseudo => &mut rep.antipseudomobile,
        };
        bucket.extend(found);
    }
    Ok(rep)
}

/// Outcome of the structural checks for one `q`. `None` means the check does
/// not apply.
#[derive(Clone, Debug, Serialize)]
pub struct StructureChecks {
    pub genus_minimizing: bool,
    /// `k >= STRUCTURE_K_MIN`; only then are failures meaningful.
    pub gated: bool,
    pub spectrum_ok: bool,
    pub mirror_ok: bool,
    pub activity_counts_ok: bool,
    pub difference_formula_ok: bool,
    /// Each relative window holding mobile points meets `(x*, y*)` exactly once.
    pub unique_window_hit: Option<bool>,
    /// Same for the pseudo window when it has non-neutralized points.
    pub unique_pseudo_hit: Option<bool>,
    /// `(μ, γ) = (1, 1)` implies `v(z_{n_{j-1}}^{j-1}, z_0^j) = αk` for all `j`.
    pub pseudo_v_constant: Option<bool>,
    pub mobile_non_neutralized: bool,
    /// Members of each neutralized pair are active at complementary times.
    pub neutralized_complementary: bool,
    pub psi_bound_ok: bool,
    /// `⌊k/d⌋ [dq] < k²` whenever mobile points exist.
    pub run_length_bound: Option<bool>,
}

impl StructureChecks {
    /// Names of checks that failed.
    pub fn failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        let mut push = |ok: bool, name| {
            if !ok {
                out.push(name);
            }
        };
        push(self.spectrum_ok == self.genus_minimizing, "spectrum");
        push(self.mirror_ok, "mirror");
        push(self.difference_formula_ok, "difference formula");
        if self.genus_minimizing {
            push(self.activity_counts_ok, "activity counts");
            push(self.unique_window_hit.unwrap_or(true), "unique window hit");
            push(self.unique_pseudo_hit.unwrap_or(true), "unique pseudo hit");
            push(self.pseudo_v_constant.unwrap_or(true), "pseudo v constant");
            push(self.mobile_non_neutralized, "non-neutralized");
            push(self.neutralized_complementary, "neutralized complementary");
            push(self.psi_bound_ok, "psi bound");
            push(self.run_length_bound.unwrap_or(true), "run length bound");
        }
        out
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct StructureDiagnostics {
    pub decomposition: ZDecomposition,
    pub report: MobileReport,
    pub consecutive: ConsecutiveCheck,
    pub checks: StructureChecks,
}

/// `d (z_0^{j+l} - z_0^j) ≡ [μml]_d k² + dΞ_l(j) [dq]` mod `d k²` for all `j, l`.
fn difference_formula_ok(zd: &ZDecomposition) -> bool {
    let (d, kk) = (zd.d as i128, zd.modulus() as i128);
    let ps = &zd.params;
    (1..zd.d).all(|l| {
        let lead = md(ps.mu.value() * ps.m * l, zd.d) as i128 * kk;
        (0..zd.d).all(|j| {
            let lhs = d * zd.diff(zd.at(j + l, 0), zd.at(j, 0)) as i128;
            let rhs = lead + xi_sum_unchecked(zd.d, zd.eps_d, l, j) as i128 * zd.dq as i128;
            (lhs - rhs).rem_euclid(d * kk) == 0
        })
    })
}

pub fn structure_diagnostics(k: i64, q: i64) -> Result<StructureDiagnostics> {
    let zd = z_decompose(k, q)?;
    let report = mobile_report(&zd)?;
    let consecutive = consecutive_v_check(k, q)?;
    let kk = zd.modulus();
    let triple = Triple::new(kk, zd.q, k)?;
    let gm = is_genus_minimizing(&triple);
    let ps = zd.params;
    let d = zd.d;

    let star = consecutive.r_star.map(|r| {
        let flat = zd.flattened();
        (flat[r], flat[(r + 1) % flat.len()])
    });
    let hits = |pair: &dyn Fn(i64) -> (i64, i64)| -> Option<bool> {
        star.map(|s| (0..d).filter(|&j| pair(j) == s).count() == 1)
    };

    let mut unique_window_hit = None;
    for i in 0..rel_window_count(&zd) {
        for w in [Window::Rel0 { i }, Window::RelN { i }] {
            if !report.mobile.iter().any(|m| m.window == w) {
                continue;
            }
            let ok = match w {
                Window::Rel0 { i } => hits(&|j| (zd.at(j, i), zd.at(j, i + 1))),
                _ => hits(&|j| (zd.at(j, zd.n(j) - (i + 1)), zd.at(j, zd.n(j) - i))),
            }
            .unwrap_or(false);
            unique_window_hit = Some(unique_window_hit.unwrap_or(true) && ok);
        }
    }

    let pseudo_free = report
        .pseudomobile
        .iter()
        .any(|p| !report.is_neutralized(p));
    let unique_pseudo_hit =
        pseudo_free.then(|| hits(&|j| (zd.last(j - 1), zd.at(j, 0))).unwrap_or(false));

    let vm = VMap::new(triple);
    let pseudo_v_constant = (d > 1 && ps.mu == Sign::Plus && ps.gamma == Sign::Plus)
        .then(|| (0..d).all(|j| vm.v(zd.last(j - 1), zd.at(j, 0)) == ps.alpha.value() * k));

    let mobile_non_neutralized = report.mobile.iter().all(|m| !report.is_neutralized(m));
    let exceptional = ps.mu == Sign::Plus
        && ps.gamma == Sign::Plus
        && ps.alpha == Sign::Minus
        && ps.m == 2
        && ps.c == 1
        && 2 * d == k - 1
        && d % 2 == 0;
    let psi_bound_ok = d == 1 || exceptional || zd.psi > 2 * zd.dq;
    let run_length_bound = (!report.mobile.is_empty()).then(|| (k / d) * zd.dq < kk);

    let checks = StructureChecks {
        genus_minimizing: gm,
        gated: k >= STRUCTURE_K_MIN,
        spectrum_ok: consecutive.spectrum_ok,
        mirror_ok: report.mirror_ok(&zd),
        activity_counts_ok: report.all_points().all(MobilePoint::count_ok),
        difference_formula_ok: d == 1 || difference_formula_ok(&zd),
        unique_window_hit,
        unique_pseudo_hit,
        pseudo_v_constant,
        mobile_non_neutralized,
        neutralized_complementary: report.neutralized_pairs.iter().all(|n| n.complementary),
        psi_bound_ok,
        run_length_bound,
    };
    Ok(StructureDiagnostics {
        decomposition: zd,
        report,
        consecutive,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_examples() {
        let v: Vec<u8> = (0..3).map(|j| theta(3, 1, j).unwrap()).collect();
        assert_eq!(v, vec![0, 0, 1]);
        assert_eq!(theta(5, 2, 1).unwrap(), 0);
        assert_eq!(
            (0..7).map(|j| theta(7, 3, j).unwrap() as i64).sum::<i64>(),
            3
        );
        assert!(matches!(theta(6, 2, 0), Err(Error::Usage(_))));
        assert!(matches!(theta(1, 0, 0), Err(Error::Usage(_))));
    }

    #[test]
    fn xi_sum_examples() {
        for j in 0..5 {
            assert_eq!(xi_sum(5, 2, 0, j).unwrap(), 0);
        }
        // lift independence
        assert_eq!(xi_sum(7, 3, 2, 4).unwrap(), xi_sum(7, 3, 9, -3).unwrap());
    }

    #[test]
    fn z_decompose_example() {
        let zd = z_decompose(7, 19).unwrap();
        assert_eq!((zd.d, zd.eps_d, zd.psi), (3, 2, 22));
        assert_eq!(zd.n_lengths, vec![2, 1, 1]);
        assert_eq!(zd.n_lengths.iter().map(|n| n + 1).sum::<i64>(), 7);
        assert_eq!(md(zd.at(0, 1) - zd.at(0, 0), 49), 8);
        assert_eq!(zd.psi, md(8 - 133, 49));
        assert!(matches!(z_decompose(7, 30), Err(Error::Usage(_))));
    }

    #[test]
    fn type0_gives_empty_report() {
        let zd = z_decompose(7, 8).unwrap();
        assert_eq!(zd.d, 1);
        assert_eq!(zd.z.len(), 1);
        assert!(mobile_report(&zd).unwrap().is_empty());
    }

    #[test]
    fn consecutive_spectrum_small() {
        for k in 3..=25i64 {
            let kk = k * k;
            for q in (1..kk).filter(|&q| gcd(q, kk) == 1) {
                let Ok(cc) = consecutive_v_check(k, q) else {
                    continue;
                };
                let gm = is_genus_minimizing(&Triple::new(kk, q, k).unwrap());
                assert_eq!(cc.spectrum_ok, gm, "k={k} q={q}");
                assert_eq!(cc.r_star.is_some(), gm);
            }
        }
    }

    #[test]
    fn reports_are_internally_consistent() {
        for k in 5..=30i64 {
            let kk = k * k;
            for q in (1..kk).filter(|&q| gcd(q, kk) == 1) {
                let Ok(diag) = structure_diagnostics(k, q) else {
                    continue;
                };
                let c = &diag.checks;
                assert!(c.mirror_ok, "k={k} q={q}");
                assert!(c.difference_formula_ok, "k={k} q={q}");
                for pt in diag.report.all_points() {
                    assert!(
                        !pt.active.is_empty() && (pt.active.len() as i64) < diag.decomposition.d
                    );
                }
            }
        }
    }
}
