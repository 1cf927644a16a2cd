//! Passing from p > k² to the triple at k², with the intermediate triples.
//!
//!     cargo run --example reduction -- 79 7

use lensgenus::{bridge_triples, gbar, reduce_p, surgery_triple, GbarMode, VMap};

fn main() -> lensgenus::Result<()> {
    let args: Vec<i64> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let (p, k) = match args[..] {
        [p, k] => (p, k),
        _ => (79, 7),
    };
    let red = reduce_p(p, k)?;
    println!(
        "reduced triple {}  (ε = {}, n = {})",
        red.triple, red.eps_p, red.n
    );

    let st = surgery_triple(p, k)?;
    let (g_big, g_small) = (
        gbar(&st, GbarMode::Fast).gbar,
        gbar(&red.triple, GbarMode::Fast).gbar,
    );
    println!("Ḡ{st} = {g_big}  (< 2p: {})", g_big < 2 * p);
    println!(
        "Ḡ{} = {g_small}  (< 2k²: {})",
        red.triple,
        g_small < 2 * k * k
    );

    let (a, b) = bridge_triples(p, k)?;
    let (va, vb) = (VMap::new(a), VMap::new(b));
    let mut worst = 0;
    for x in 0..p {
        for y in x..p {
            worst =
                worst.max((k * k * vb.v_lifts(x, y) - p * va.v_lifts(x, y) - k * (y - x)).abs());
        }
    }
    println!("A = {a}, B = {b}; max defect of k²v_B = p v_A + k(y - x): {worst}");
    Ok(())
}
