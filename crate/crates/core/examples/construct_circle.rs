// Exact determinantal representation of the unit circle, with the
// intermediate stages printed.
//
// `cargo run --example construct_circle`

use rzdet::construct::{construct, ConstructOptions, InterlacerSpec};
use rzdet::corpus;
use rzdet::pencil::io::pencil_to_json;
use rzdet::scalar::GaussRational;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let circle = corpus::circle();
    let p = circle.poly_as::<GaussRational>();
    let x0 = circle.x0_as::<GaussRational>();
    let (pencil, trace) = construct(&p, &x0, &InterlacerSpec::default(), &ConstructOptions::default())?;
    let stages = &trace.to_json()["stages"];
    println!("divisor: {}", stages["divisor"]);
    println!("split:   {}", stages["split"]);
    println!("c = {}", stages["c"]);
    println!("residuals: {}", serde_json::to_string(&trace.residuals)?);
    println!("{}", pencil_to_json(&pencil));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
