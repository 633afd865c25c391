//! Rebuilds every reference formula from the construction and compares.
//!
//! ```text
//! cargo run --release --example formula_catalog
//! ```

use rectpoint::theorems::{formula_catalog, reference_formulas};

fn main() {
    let table = reference_formulas();
    let entries = formula_catalog(&table).expect("construction is nondegenerate");
    for e in &entries {
        let verdict = if e.matches { "match" } else { "MISMATCH" };
        println!("({:>2}) {:<12} {verdict}", e.index, e.label);
        if e.transcribed.len() < 100 {
            println!("     {}", e.transcribed);
        }
    }
    let ok = entries.iter().filter(|e| e.matches).count();
    println!("{ok}/{} formulas reproduced", entries.len());
}
