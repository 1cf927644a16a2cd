//! Which p > k² fall into a Berge family, compared with Ḡ(p, k⁻², k).
//!
//!     cargo run --example berge_families -- 7

use lensgenus::{conjecture_check, gcd};

fn main() -> lensgenus::Result<()> {
    let k: i64 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(7);
    let kk = k * k;
    for p in (kk + 1..=2 * kk).filter(|&p| gcd(p, k) == 1) {
        let c = conjecture_check(p, kk, k)?;
        if c.families.is_empty() && !c.gm {
            continue;
        }
        let fams: Vec<String> = c.families.iter().map(|f| f.to_string()).collect();
        println!(
            "p = {p:>4}  Ḡ = {:>5}  gm = {:<5}  {}{}",
            c.gbar,
            c.gm,
            fams.join(" "),
            if c.consistent {
                ""
            } else {
                "  <- inconsistent"
            }
        );
    }
    Ok(())
}
