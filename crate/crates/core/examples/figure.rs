//! Exports a configuration as JSON and SVG.
//!
//! ```text
//! cargo run --example figure -- T1B 1 2 3 5 > brocard.svg
//! ```

use rectpoint::arith::BigRat;
use rectpoint::cli::{render_svg, FigureDoc};
use rectpoint::theorems::{check_claim, ClaimId, Config, ConfigKind};

fn main() {
    let mut args = std::env::args().skip(1);
    let id: ClaimId = args
        .next()
        .as_deref()
        .unwrap_or("T1E")
        .parse()
        .expect("claim id");
    let mut params: Vec<String> = args.collect();
    if params.is_empty() {
        params = ["1", "2", "3", "5"].map(String::from).to_vec();
        if id.kind() == ConfigKind::TwoRect {
            params.extend(["-1", "4"].map(String::from));
        }
    }
    let values: Vec<BigRat> = params
        .iter()
        .map(|s| s.parse().expect("rational"))
        .collect();
    let config = Config::from_params(id.kind(), values).expect("parameter count");
    let eval = check_claim(id, &config, None).expect("claim matches configuration");
    if let Some(tag) = eval.degeneracy() {
        eprintln!("degenerate configuration: {tag}");
        std::process::exit(3);
    }
    let doc = FigureDoc::from_witness(id, params, eval.holds() == Some(true), &eval.witness);
    eprintln!("{}", serde_json::to_string(&doc.bounding_box).unwrap());
    eprintln!(
        "{} elements, claim holds: {}",
        doc.elements.len(),
        doc.holds
    );
    print!("{}", render_svg(&doc));
}
