// Two interlacing tests of the directional derivative, and a
// non-interlacing line.
//
// `cargo run --example interlacing`

use rzdet::corpus;
use rzdet::interlace::{interlaces_sampled, psd_interlacing_check};
use rzdet::poly::{HomogeneousPolynomial, Polynomial};
use rzdet::scalar::{GaussRational, Scalar};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let circle = corpus::circle();
    let p = circle.poly_as::<GaussRational>();
    let x0 = circle.x0_as::<GaussRational>();
    let form = HomogeneousPolynomial::homogenize(&p, 2)?;
    let mut base = vec![GaussRational::one()];
    base.extend(x0.iter().cloned());
    let (derivative, _) = form.directional_derivative(&base)?;

    // Q = 1/2 - x1: a line cutting the disk, which does not interlace.
    let secant = Polynomial::linear(GaussRational::from_ratio(1, 2), &[-GaussRational::one(), GaussRational::zero()]);
    let secant = HomogeneousPolynomial::homogenize(&secant, 1)?;

    for (name, q) in [("derivative", derivative), ("secant", secant)] {
        let sampled = interlaces_sampled(&form, &q, &x0, 100, 1e-9, 3)?;
        let psd = psd_interlacing_check(&form, &q, &x0, 100, 1e-9, 3)?;
        println!("{name:<10} sampled {:?}  bezoutiant {:?}", sampled.status, psd.status);
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
