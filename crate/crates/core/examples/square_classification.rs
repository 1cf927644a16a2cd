//! Genus-minimizing q at p = k²: brute force against the closed-form list.
//!
//!     cargo run --example square_classification -- 12

use lensgenus::{gbar, gcd, gm_q_set, is_genus_minimizing, GbarMode, Triple};

fn main() -> lensgenus::Result<()> {
    let k: i64 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(9);
    let kk = k * k;
    let closed = gm_q_set(k)?;
    let mut brute = Vec::new();
    for q in (1..kk).filter(|&q| gcd(q, kk) == 1) {
        let t = Triple::new(kk, q, k)?;
        if is_genus_minimizing(&t) {
            let r = gbar(&t, GbarMode::Fast);
            brute.push(q);
            println!(
                "q = {q:>5}  Ḡ = {}  maximizing pairs = {}",
                r.gbar, r.argmax_count
            );
        }
    }
    println!("2k(k-1) = {}", 2 * k * (k - 1));
    println!(
        "{} genus-minimizing q; closed form {}",
        brute.len(),
        if brute.iter().copied().eq(closed.iter().copied()) {
            "agrees"
        } else {
            "DISAGREES"
        }
    );
    Ok(())
}
