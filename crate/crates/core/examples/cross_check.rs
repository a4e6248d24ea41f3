// Diagonal cofactors of a pencil interlace its determinant exactly when
// the pencil is definite at the base point.
//
// `cargo run --example cross_check`

use rzdet::corpus;
use rzdet::pencil::{cauchy_cross_check, det_poly, MatrixPencil};
use rzdet::scalar::{GaussRational, Scalar};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let circle = corpus::circle();
    let x0 = circle.x0_as::<GaussRational>();
    let definite = circle.pencil_as::<GaussRational>().ok_or("circle has a pencil")?;

    // same determinant up to sign, indefinite at the origin
    let q = |n: i64| GaussRational::from_i64(n);
    let indefinite = MatrixPencil::new(vec![
        vec![vec![q(1), q(0)], vec![q(0), q(-1)]],
        vec![vec![q(0), q(1)], vec![q(1), q(0)]],
        vec![vec![q(1), q(0)], vec![q(0), q(1)]],
    ])?;

    for (name, pencil) in [("definite", definite), ("indefinite", indefinite)] {
        let (p, _) = det_poly(&pencil)?;
        let report = cauchy_cross_check(&pencil, &p, &x0, 50, 1e-9, 2)?;
        let verdicts: Vec<_> = report.cofactor_verdicts.iter().map(|v| v.status).collect();
        println!("{name:<10} base point {:?}, cofactors {:?}, agreement {}", report.basepoint, verdicts, report.agreement);
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
