//! Parameterization of a primitive `q` modulo `k²` by `(d, ξ, α, c, γ, μ, m)`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::modmath::{gcd, inv, md, mul_mod, sigma, Sign};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum QType {
    /// `q ≡ ±1 (mod k)`.
    Type0,
    /// `q = ξq`.
    Positive,
    /// `q = -ξq`.
    Negative,
}

impl fmt::Display for QType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            QType::Type0 => "type0",
            QType::Positive => "positive",
            QType::Negative => "negative",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ParamSet {
    pub k: i64,
    pub q: i64,
    pub d: i64,
    pub xi: Sign,
    pub alpha: Sign,
    pub c: i64,
    pub gamma: Sign,
    pub mu: Sign,
    pub m: i64,
    pub q_type: QType,
}

impl ParamSet {
    /// `(ck + αγ) / d`, an integer whenever `q` is not of type 0.
    pub fn cofactor(&self) -> i64 {
        (self.c * self.k + (self.alpha * self.gamma).value()) / self.d
    }

    /// `[dq]_{k²}`.
    pub fn dq(&self) -> i64 {
        mul_mod(self.d, self.q, self.k * self.k)
    }

    /// The positive-type representative `ξq` mod `k²`.
    pub fn positive_q(&self) -> i64 {
        md(self.xi.value() * self.q, self.k * self.k)
    }

    /// Ranges that hold for every primitive `q` with `c != 0`. Returns the
    /// first violated condition.
    fn range_violation(&self) -> Option<&'static str> {
        if self.q_type == QType::Type0 {
            return None;
        }
        let (k, d, c, m) = (self.k, self.d, self.c, self.m);
        let ag = (self.alpha * self.gamma).value();
        if !(2 <= d && 2 * d < k) {
            return Some("2 <= d < k/2");
        }
        if ag == 1 && d < 3 {
            return Some("d >= 3 when αγ = 1");
        }
        if d == 2 && c != 1 {
            return Some("c = 1 when d = 2");
        }
        if d > 2 && !(1 <= c && 2 * c < d) {
            return Some("1 <= c < d/2");
        }
        match (self.mu, self.gamma) {
            (Sign::Minus, Sign::Minus) => Some("(μ, γ) != (-1, -1)"),
            (Sign::Plus, Sign::Plus) if !(0 <= m && 2 * m <= k - 2 * c) => {
                Some("0 <= m <= k/2 - c")
            }
            (Sign::Plus, Sign::Minus) if !(c <= m && 2 * m <= k + 2 * c) => {
                Some("c <= m <= k/2 + c")
            }
            (Sign::Minus, Sign::Plus) if !(0 < m && m <= c) => Some("0 < m <= c"),
            _ => None,
        }
    }

    /// Sharper ranges satisfied when `q` is genus-minimizing and not of
    /// type 0. Returns the first violated condition.
    pub fn gm_range_violation(&self) -> Option<&'static str> {
        if self.q_type == QType::Type0 {
            return None;
        }
        let (k, c, m) = (self.k, self.c, self.m);
        let cof = self.cofactor();
        if !(2 <= cof && 2 * cof < k) {
            return Some("2 <= (ck + αγ)/d < k/2");
        }
        match (self.mu, self.gamma) {
            (Sign::Plus, Sign::Plus) if m < 1 => Some("m >= 1"),
            (Sign::Plus, Sign::Minus) if !(c < m && 4 * m < 3 * k) => Some("c < m < 3k/4"),
            (Sign::Minus, Sign::Plus) if !(m < c && 4 * c < k) => Some("m < c < k/4"),
            _ => None,
        }
    }
}

impl fmt::Display for ParamSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "d={} xi={} alpha={} c={} gamma={} mu={} m={} type={}",
            self.d, self.xi, self.alpha, self.c, self.gamma, self.mu, self.m, self.q_type
        )
    }
}

/// Computes the parameters of a unit `q` modulo `k²`, for `k > 2`.
pub fn derive_params(k: i64, q: i64) -> Result<ParamSet> {
    if k <= 2 {
        return Err(Error::usage(format!("parameters need k > 2, got {k}")));
    }
    let kk = k
        .checked_mul(k)
        .filter(|&kk| kk < crate::modmath::MODULUS_LIMIT)
        .ok_or_else(|| Error::usage(format!("k = {k} too large")))?;
    let q = md(q, kk);
    let g = gcd(q, kk);
    if g != 1 {
        return Err(Error::NotUnit {
            value: q,
            modulus: kk,
            gcd: g,
        });
    }

    let q_inv_k = inv(q, k)?;
    let d = q_inv_k.min(k - q_inv_k);
    let dq = mul_mod(d, q, kk);
    let xi = if 2 * dq < kk { Sign::Plus } else { Sign::Minus };
    let alpha = sigma(k, dq)? * xi;
    let c = if d == 1 {
        0
    } else {
        let k_inv_d = inv(k, d)?;
        k_inv_d.min(d - k_inv_d)
    };
    let gamma = sigma(d, -c * k)? * alpha;
    let dxq = md(xi.value() * dq, kk);
    let shifted = dxq - alpha.value();
    if shifted % k != 0 {
        return Err(Error::internal(format!(
            "[dξq] - α not divisible by k for k={k} q={q}"
        )));
    }
    let m_prime = md(shifted / k, k) - gamma.value() * c;
    let mu = Sign::of(m_prime);
    let m = md(mu.value() * m_prime, k);
    let q_type = if c == 0 {
        QType::Type0
    } else if xi == Sign::Plus {
        QType::Positive
    } else {
        QType::Negative
    };

    let ps = ParamSet {
        k,
        q,
        d,
        xi,
        alpha,
        c,
        gamma,
        mu,
        m,
        q_type,
    };
    check(&ps, dxq)?;
    Ok(ps)
}

fn check(ps: &ParamSet, dxq: i64) -> Result<()> {
    let (k, q) = (ps.k, ps.q);
    let kk = k * k;
    let fail = |what: &str| {
        Err(Error::internal(format!(
            "{what} fails for k={k} q={q}: {ps}"
        )))
    };

    let r = md(q, k);
    let type0 = r == 1 || r == k - 1;
    if (ps.c == 0) != (ps.d == 1) || (ps.d == 1) != type0 {
        return fail("c = 0 <=> d = 1 <=> q = ±1 mod k");
    }
    if 2 * dxq >= kk {
        return fail("[dξq] < k²/2");
    }
    if ps.q_type == QType::Type0 {
        return Ok(());
    }
    let ag = (ps.alpha * ps.gamma).value();
    if (ps.c * k + ag) % ps.d != 0 {
        return fail("d | ck + αγ");
    }
    if dxq != (ps.mu.value() * ps.m + ps.gamma.value() * ps.c) * k + ps.alpha.value() {
        return fail("[dξq] = (μm + γc)k + α");
    }
    let sign = ag * ps.mu.value();
    let recon = mul_mod(
        sign * ps.cofactor(),
        ps.m * k + (ps.alpha * ps.mu).value(),
        kk,
    );
    if recon != ps.positive_q() {
        return fail("ξq = αγμ (ck + αγ)/d (mk + αμ)");
    }
    if let Some(what) = ps.range_violation() {
        return fail(what);
    }
    Ok(())
}
