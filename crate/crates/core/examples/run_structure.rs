//! Runs of Q at p = k² and the mobile points between them.
//!
//!     cargo run --example run_structure -- 103

use lensgenus::{derive_params, gm_q_set, structure_diagnostics, QType};

fn main() -> lensgenus::Result<()> {
    let mut args = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse::<i64>().ok());
    let k = args.next().unwrap_or(103);
    let q = match args.next() {
        Some(q) => q,
        None => gm_q_set(k)?
            .into_iter()
            .find(|&q| {
                derive_params(k, q)
                    .map(|p| p.q_type == QType::Positive)
                    .unwrap_or(false)
            })
            .expect("no positive-type genus-minimizing q"),
    };
    let diag = structure_diagnostics(k, q)?;
    let zd = &diag.decomposition;
    println!("k = {k}, q = {q}: {}", zd.params);
    println!(
        "d = {}, ε = {}, [dq] = {}, ψ = {}, ψ̄ = {}",
        zd.d, zd.eps_d, zd.dq, zd.psi, zd.psibar
    );
    println!(
        "run lengths n_j + 1: {:?}",
        zd.n_lengths.iter().map(|n| n + 1).collect::<Vec<_>>()
    );

    for pt in diag.report.all_points() {
        println!(
            "{:?} {:?} l={:<3} active {} times (expected {})",
            pt.window,
            pt.side,
            pt.l,
            pt.active.len(),
            pt.expected_active
        );
    }
    println!("neutralized pairs: {}", diag.report.neutralized_pairs.len());
    println!(
        "consecutive v: r* = {:?}, spectrum ok = {}",
        diag.consecutive.r_star, diag.consecutive.spectrum_ok
    );
    let fails = diag.checks.failures();
    println!(
        "structural checks: {}",
        if fails.is_empty() {
            "all hold".to_string()
        } else {
            fails.join(", ")
        }
    );
    Ok(())
}
