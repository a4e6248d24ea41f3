// The real symmetric double of a hermitian pencil squares its determinant.
//
// `cargo run --example realify`

use num_complex::Complex64;
use rzdet::corpus;
use rzdet::pencil::{det_poly, realify, SymmetryClass};
use rzdet::poly::io::to_text;
use rzdet::scalar::{CoeffMode, GaussRational};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let inst = corpus::random_rz_with(2, 4, CoeffMode::Rational, SymmetryClass::Hermitian)?;
    let pencil = inst.pencil_as::<GaussRational>().ok_or("random instances carry a pencil")?;
    let real = realify(&pencil)?;
    println!("{}x{} {:?} -> {}x{} {:?}", pencil.size(), pencil.size(), pencil.class(), real.size(), real.size(), real.class());

    let (p, _) = det_poly(&pencil)?;
    let (p2, _) = det_poly(&real)?;
    println!("det A:\n{}", to_text(&p));
    println!("det realify(A) == (det A)^2: {}", p2 == p.pow(2));

    let x = [0.3, -0.7];
    let a = pencil.convert::<Complex64>().eval_f64(&x).determinant();
    let b = real.convert::<Complex64>().eval_f64(&x).determinant();
    println!("at {x:?}: det A = {a:.6}, det realify(A) = {b:.6}");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
