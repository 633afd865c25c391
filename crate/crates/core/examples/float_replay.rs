//! Replays exact witnesses in `f64` with a relative tolerance.
//!
//! ```text
//! cargo run --release --example float_replay -- 100 7
//! ```

use rectpoint::theorems::{float_replay, ClaimId};

fn main() {
    let mut args = std::env::args().skip(1);
    let n: u64 = args
        .next()
        .map_or(100, |s| s.parse().expect("sample count"));
    let seed: u64 = args.next().map_or(7, |s| s.parse().expect("seed"));
    let mut total = 0;
    for id in ClaimId::ALL {
        let (report, stats) = float_replay(id, n, seed).expect("n >= 1");
        total += stats.replays;
        println!(
            "{:<6} {:<12?} {:>4} replays  {} float disagreements",
            id.name(),
            report.status,
            stats.replays,
            stats.failures
        );
    }
    println!("{total} witnesses replayed");
}
