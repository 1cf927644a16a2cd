//! The (d, ξ, α, c, γ, μ, m) parameters of every unit q mod k².
//!
//!     cargo run --example parameters -- 11

use lensgenus::{derive_params, gcd, gm_q_set, QType};

fn main() -> lensgenus::Result<()> {
    let k: i64 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(7);
    let kk = k * k;
    let gm = gm_q_set(k)?;
    let mut by_type = [0usize; 3];
    for q in (1..kk).filter(|&q| gcd(q, kk) == 1) {
        let ps = derive_params(k, q)?;
        by_type[ps.q_type as usize] += 1;
        let mark = if gm.contains(&q) { "*" } else { " " };
        println!("{mark} q = {q:>4}  {ps}");
        if let (true, Some(why)) = (gm.contains(&q), ps.gm_range_violation()) {
            println!("    unexpected: {why}");
        }
    }
    println!(
        "type 0: {}, positive: {}, negative: {}  (* = genus-minimizing)",
        by_type[QType::Type0 as usize],
        by_type[QType::Positive as usize],
        by_type[QType::Negative as usize]
    );
    Ok(())
}
