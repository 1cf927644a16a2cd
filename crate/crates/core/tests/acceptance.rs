//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::time::Instant;

use lensgenus::harness::{self, Mode, SweepConfig};
use lensgenus::{
    consecutive_v_check, derive_params, gbar, gcd, gm_q_set, inv, is_genus_minimizing,
    mobile_report, reduce_p, structure_diagnostics, surgery_triple, theta, xi_sum, z_decompose,
    GbarMode, QType, Triple, VMap,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, &'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get().min(8))
}

/// Brute-force genus-minimizing set at `p = k²` equals the closed form, `2 <= k <= 100`.
fn k2_classification() -> Outcome {
    let cfg = SweepConfig {
        workers: workers(),
        ..SweepConfig::new(2, 100)
    };
    let s = harness::run(Mode::VerifyK2, &cfg).map_err(|e| e.to_string())?;
    ensure(s.all_consistent(), || {
        format!(
            "{} mismatches, first {}",
            s.mismatches.len(),
            s.mismatches[0]
        )
    })?;
    for k in 2..=100 {
        let brute = s.records.iter().filter(|r| r.k == k && r.gm).count();
        let closed = gm_q_set(k).unwrap().len();
        ensure(brute == closed, || {
            format!("k={k}: brute {brute} vs closed {closed}")
        })?;
    }
    Ok(format!("{} units checked, 0 mismatches", s.triples_checked))
}

/// Genus-minimizing `q` at `p = k²` have `Ḡ = 2k(k-1)` with a unique maximizing pair.
fn gbar_value_law() -> Outcome {
    let mut seen = 0;
    for k in 2..=60i64 {
        let kk = k * k;
        for q in (1..kk).filter(|&q| gcd(q, kk) == 1) {
            let t = Triple::new(kk, q, k).unwrap();
            if !is_genus_minimizing(&t) {
                continue;
            }
            seen += 1;
            let r = gbar(&t, GbarMode::Fast);
            ensure(r.gbar == 2 * k * (k - 1), || {
                format!("k={k} q={q}: gbar {}", r.gbar)
            })?;
            ensure(r.argmax_count == 1, || {
                format!("k={k} q={q}: {} maximizing pairs", r.argmax_count)
            })?;
        }
    }
    Ok(format!("{seen} genus-minimizing q"))
}

/// Three `Ḡ` routes agree on random triples, and the symmetries hold.
fn oracle_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_2024);
    let mut n = 0;
    while n < 500 {
        let p = rng.gen_range(2..=3000i64);
        let q = rng.gen_range(1..p);
        let k = rng.gen_range(1..p);
        let Ok(t) = Triple::new(p, q, k) else {
            continue;
        };
        n += 1;
        let fast = gbar(&t, GbarMode::Fast);
        let oracle = gbar(&t, GbarMode::Oracle);
        let full = gbar(&t, GbarMode::FullDomain);
        ensure(fast == oracle && fast == full, || {
            format!("{t}: {fast:?} {oracle:?} {full:?}")
        })?;
        let g = |q, k| gbar(&Triple::new(p, q, k).unwrap(), GbarMode::Fast).gbar;
        ensure(g(-q, k) == fast.gbar, || format!("{t}: q -> -q"))?;
        ensure(g(q, -k) == fast.gbar, || format!("{t}: k -> -k"))?;
        ensure(g(inv(q, p).unwrap(), q * k) == fast.gbar, || {
            format!("{t}: (q, k) -> (q⁻¹, qk)")
        })?;
    }
    Ok(format!("{n} triples"))
}

/// `max_Q |v|` at `p = k²` is `<= k(k-1)` or `>= k(k+1)`, never `k²`.
fn dichotomy() -> Outcome {
    let mut n = 0;
    for k in 2..=50i64 {
        let kk = k * k;
        for q in (1..kk).filter(|&q| gcd(q, kk) == 1) {
            let t = Triple::new(kk, q, k).unwrap();
            let vm = VMap::new(t);
            let pts = vm.points();
            let mut m = 0;
            for &x in pts {
                for &y in pts {
                    m = m.max(vm.v(x, y).abs());
                }
            }
            ensure(m == gbar(&t, GbarMode::Fast).max_q_v(&t), || {
                format!("k={k} q={q}: pair max {m}")
            })?;
            ensure(m <= k * (k - 1) || m >= k * (k + 1), || {
                format!("k={k} q={q}: max |v| = {m}")
            })?;
            n += 1;
        }
    }
    Ok(format!("{n} units"))
}

/// The reduction to `p = k²` preserves the genus-minimizing verdict.
fn reduction() -> Outcome {
    let mut n = 0;
    for k in 2..=40i64 {
        let kk = k * k;
        for p in (kk + 1..=2 * kk).filter(|&p| gcd(p, k) == 1) {
            let direct = is_genus_minimizing(&surgery_triple(p, k).unwrap());
            let reduced = is_genus_minimizing(&reduce_p(p, k).unwrap().triple);
            ensure(direct == reduced, || {
                format!("p={p} k={k}: {direct} vs {reduced}")
            })?;
            n += 1;
        }
    }
    Ok(format!("{n} pairs"))
}

/// Family prediction equals the `Ḡ` verdict over one period of `p` per `k`.
fn theorem() -> Outcome {
    let cfg = SweepConfig {
        workers: workers(),
        ..SweepConfig::new(2, 60)
    };
    let s = harness::run(Mode::VerifyTheorem, &cfg).map_err(|e| e.to_string())?;
    ensure(s.all_consistent(), || {
        format!(
            "{} inconsistent, first {}",
            s.mismatches.len(),
            s.mismatches[0]
        )
    })?;
    // recheck the verdicts through the inverse-q route
    for r in &s.records {
        let p = r.p.unwrap();
        let g = gbar(&surgery_triple(p, r.k).unwrap(), GbarMode::Oracle).gbar;
        ensure(g == r.gbar && (g < 2 * p) == r.gm, || {
            format!("k={} p={p}: oracle disagrees", r.k)
        })?;
    }
    let gm = s.records.iter().filter(|r| r.gm).count();
    Ok(format!(
        "{} records consistent ({gm} genus-minimizing, {} skipped)",
        s.triples_checked, s.skipped
    ))
}

/// θ, Ξ and the run-structure statements at `101 <= k <= 150`.
fn structure_suite() -> Outcome {
    let mut thetas = 0u64;
    for d in 2..=1000i64 {
        for eps in (1..d).filter(|&e| gcd(e, d) == 1) {
            let mut sum = 0;
            for j in 0..d {
                sum += theta(d, eps, j).map_err(|e| e.to_string())? as i64;
            }
            ensure(sum == eps, || format!("Σθ({d}, {eps}) = {sum}"))?;
            thetas += d as u64;
        }
    }

    for d in 2..=200i64 {
        for eps in (1..d).filter(|&e| gcd(e, d) == 1) {
            for l in 1..d {
                let le = (l * eps).rem_euclid(d);
                let (mut hi, mut lo) = (0, 0);
                for j in 0..d {
                    match xi_sum(d, eps, l, j).unwrap() {
                        v if v == le => hi += 1,
                        v if v == le - d => lo += 1,
                        v => return Err(format!("dΞ({d},{eps},{l},{j}) = {v}")),
                    }
                }
                ensure(hi == (-l * eps).rem_euclid(d) && lo == le, || {
                    format!("Ξ counts d={d} eps={eps} l={l}")
                })?;
            }
        }
    }

    let mut sampled = 0;
    let mut points = 0;
    for k in 101..=150i64 {
        let kk = k * k;
        let q = gm_q_set(k)
            .unwrap()
            .into_iter()
            .find(|&q| derive_params(k, q).unwrap().q_type == QType::Positive)
            .ok_or_else(|| format!("k={k}: no positive-type genus-minimizing q"))?;
        ensure(is_genus_minimizing(&Triple::new(kk, q, k).unwrap()), || {
            format!("k={k} q={q} not gm")
        })?;
        let cc = consecutive_v_check(k, q).map_err(|e| e.to_string())?;
        ensure(cc.spectrum_ok && cc.r_star.is_some(), || {
            format!("k={k} q={q}: spectrum {:?}", cc.values)
        })?;
        let rep = mobile_report(&z_decompose(k, q).unwrap()).map_err(|e| e.to_string())?;
        for pt in rep.all_points() {
            ensure(pt.count_ok(), || format!("k={k} q={q}: {pt:?}"))?;
            points += 1;
        }
        let diag = structure_diagnostics(k, q).map_err(|e| e.to_string())?;
        let fails = diag.checks.failures();
        ensure(fails.is_empty(), || {
            format!("k={k} q={q}: {}", fails.join(", "))
        })?;
        sampled += 1;
    }
    ensure(sampled == 50, || format!("only {sampled} q sampled"))?;
    Ok(format!(
        "{thetas} θ values, Ξ value and count identities for d <= 200, {sampled} q with {points} mobile-type points"
    ))
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("AC1", "k² classification, 2 <= k <= 100", k2_classification),
        (
            "AC2",
            "Ḡ = 2k(k-1) with unique maximum, 2 <= k <= 60",
            gbar_value_law,
        ),
        (
            "AC3",
            "oracle equivalence and symmetries, 500 triples",
            oracle_equivalence,
        ),
        ("AC4", "dichotomy at p = k², 2 <= k <= 50", dichotomy),
        ("AC5", "reduction p > k², 2 <= k <= 40", reduction),
        (
            "AC6",
            "family prediction matches Ḡ over one period, 2 <= k <= 60",
            theorem,
        ),
        ("AC7", "structure suite", structure_suite),
    ];
    let mut failed = 0;
    for (id, name, f) in criteria {
        let t0 = Instant::now();
        let outcome = f();
        let secs = t0.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {id} {name}: {detail} [{secs:.1}s]"),
            Err(why) => {
                failed += 1;
                println!("FAIL {id} {name}: {why} [{secs:.1}s]");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
