//! Exact verification of every claim on seeded random rectangles.
//!
//! ```text
//! cargo run --release --example verify_sampled -- 100 7
//! ```

use rectpoint::theorems::{verify_sampled, ClaimId};

fn main() {
    let mut args = std::env::args().skip(1);
    let n: u64 = args
        .next()
        .map_or(100, |s| s.parse().expect("sample count"));
    let seed: u64 = args.next().map_or(7, |s| s.parse().expect("seed"));
    for id in ClaimId::ALL {
        let report = verify_sampled(id, n, seed).expect("n >= 1");
        println!(
            "{:<6} {:<12?} {:>3}/{n} ok  {:>3} resampled  {:>6} ms",
            id.name(),
            report.status,
            n - report.failures.len() as u64,
            report.resamples,
            report.elapsed_ms,
        );
        for (tag, count) in &report.degeneracies {
            println!("         {count:>3} × {tag}");
        }
    }
}
