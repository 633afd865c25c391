//! Symbolic proofs over rational functions in the rectangle parameters.
//!
//! ```text
//! cargo run --release --example prove_symbolic -- T1E T3
//! ```

use rectpoint::theorems::{verify_symbolic, ClaimId};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let claims: Vec<ClaimId> = if args.is_empty() {
        vec![
            ClaimId::T1E,
            ClaimId::T1B,
            ClaimId::T2,
            ClaimId::T3,
            ClaimId::T5,
            ClaimId::T6,
            ClaimId::T7,
            ClaimId::T8,
        ]
    } else {
        args.iter()
            .map(|a| a.parse().expect("claim name"))
            .collect()
    };
    for id in claims {
        let report = verify_symbolic(id);
        println!(
            "{:<6} {:<12?} {:>7} ms  {} denominators{}",
            id.name(),
            report.status,
            report.elapsed_ms,
            report.denominator_assumptions.len(),
            report
                .note
                .as_deref()
                .map(|n| format!("  ({n})"))
                .unwrap_or_default()
        );
    }
}
