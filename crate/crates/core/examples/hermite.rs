// Hermite matrix of the unit circle and a sampled PSD test.
//
// `cargo run --example hermite`

use rzdet::corpus;
use rzdet::poly::io::to_text;
use rzdet::rz::{hermite_matrix, hermite_psd_check};
use rzdet::scalar::GaussRational;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let circle = corpus::circle();
    let h = hermite_matrix(&circle.poly_as::<GaussRational>(), &circle.x0_as::<GaussRational>())?;
    for i in 0..h.matrix.rows() {
        for j in 0..h.matrix.cols() {
            println!("H[{i}][{j}] = {}", to_text(h.matrix.get(i, j)).trim().replace('\n', " + "));
        }
    }
    let report = hermite_psd_check(&h, 200, 1e-9, 1);
    println!("psd check: {:?}", report.status);

    let tv = corpus::tv_screen();
    let h = hermite_matrix(&tv.poly_as::<GaussRational>(), &tv.x0_as::<GaussRational>())?;
    let report = hermite_psd_check(&h, 200, 1e-9, 1);
    println!("tv screen psd check: {:?}", report.status);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
