//! A parallel sweep over k with records written as JSON lines.
//!
//!     cargo run --release --example theorem_sweep -- 2 30 4 /tmp/theorem.jsonl

use std::path::PathBuf;

use lensgenus::harness::{run, Mode, SweepConfig};

fn main() -> lensgenus::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let num = |i: usize, d: i64| args.get(i).and_then(|a| a.parse().ok()).unwrap_or(d);
    let cfg = SweepConfig {
        workers: num(2, 4) as usize,
        output: args.get(3).map(PathBuf::from),
        ..SweepConfig::new(num(0, 2), num(1, 20))
    };
    for mode in [Mode::VerifyTheorem, Mode::VerifyReduction] {
        let s = run(mode, &cfg)?;
        println!(
            "{mode}: {} records, {} skipped, {} mismatches",
            s.triples_checked,
            s.skipped,
            s.mismatches.len()
        );
    }
    if let Some(p) = &cfg.output {
        println!("reduction records written to {}", p.display());
    }
    Ok(())
}
