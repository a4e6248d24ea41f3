// Reading and writing polynomials in the text and JSON formats.
//
// `cargo run --example poly_io`

use rzdet::poly::io::{parse_auto, parse_text, to_json, to_text};
use rzdet::scalar::GaussRational;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let src = "# vars: 2\n1\n-x1^2\n-1/4 * x2^2\n(0,1/2) * x1*x2\n";
    let file = parse_text(src, None)?;
    println!("mode {}, {} terms", file.mode, file.poly.num_terms());
    let json = to_json(&file.poly);
    println!("{json}");
    let back = parse_auto(&json)?;
    assert_eq!(back.poly, file.poly);
    println!("{}", to_text(&back.to_poly::<GaussRational>()));

    match parse_auto("{\"vars\": 2, \"mode\": \"rational\", \"terms\": [{\"exp\": [1], \"re\": 1}]}") {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => println!("unexpectedly accepted"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
