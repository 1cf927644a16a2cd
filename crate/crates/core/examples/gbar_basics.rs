//! The counting map, the f-profile, and the three ways of computing Ḡ.
//!
//!     cargo run --example gbar_basics -- 79 50 7

use lensgenus::{big_g, f_profile, gbar, genus, is_genus_minimizing, v_pair, GbarMode, Triple};

fn main() -> lensgenus::Result<()> {
    let args: Vec<i64> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let (p, q, k) = match args[..] {
        [p, q, k] => (p, q, k),
        _ => (79, 50, 7),
    };
    let t = Triple::new(p, q, k)?;
    println!("triple {t}, Q = {:?}", t.q_points());

    let pts = t.q_points();
    if pts.len() >= 2 {
        println!("v({}, {}) = {}", pts[0], pts[1], v_pair(&t, pts[0], pts[1]));
    }

    let prof = f_profile(&t);
    if p <= 30 {
        println!("f = {:?}", prof.values);
    }
    println!("G = {}", big_g(&t));
    match genus(&t) {
        Ok(g) => println!("genus = {g}"),
        Err(e) => println!("genus: {e}"),
    }

    for mode in [GbarMode::Fast, GbarMode::Oracle, GbarMode::FullDomain] {
        let r = gbar(&t, mode);
        println!(
            "{mode:?}: Ḡ = {}, max pair {:?} ({} maximizing pair(s))",
            r.gbar, r.max_pair, r.argmax_count
        );
    }
    println!("genus-minimizing (Ḡ < 2p): {}", is_genus_minimizing(&t));
    Ok(())
}
