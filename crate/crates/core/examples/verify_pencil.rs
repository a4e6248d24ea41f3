// Certify a pencil against a polynomial, then break it by a sign flip.
//
// `cargo run --example verify_pencil`

use rzdet::corpus;
use rzdet::pencil::verify_lmi;
use rzdet::scalar::{GaussRational, Scalar};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let circle = corpus::circle();
    let p = circle.poly_as::<GaussRational>();
    let x0 = circle.x0_as::<GaussRational>();
    let pencil = circle.pencil_as::<GaussRational>().ok_or("circle has a pencil")?;

    let good = verify_lmi(&pencil, &p, &x0, 1e-9, 100, 0)?;
    println!("original:     {:?}, cofactor one: {}", good.status, good.cofactor_is_one());

    let flipped = pencil.scale(&-GaussRational::one());
    let bad = verify_lmi(&flipped, &p, &x0, 1e-9, 100, 0)?;
    println!("sign flipped: {:?}, base point {:?}", bad.status, bad.basepoint);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
