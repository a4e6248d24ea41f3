// Real root isolation, Sturm counts and power sums of univariate
// polynomials.
//
// `cargo run --example real_roots`

use num_complex::Complex64;
use rzdet::poly::UnivariatePolynomial;
use rzdet::realroots::{power_sums, real_roots, sturm_count, DEFAULT_TOL};
use rzdet::scalar::{GaussRational, Scalar};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let q = |n: i64, d: i64| GaussRational::from_ratio(n, d);
    // (t - 1/2)^2 (t + 3) (t^2 + 1)
    let f = UnivariatePolynomial::from_roots(&[q(1, 2), q(1, 2), q(-3, 1)])
        .mul(&UnivariatePolynomial::new(vec![q(1, 1), q(0, 1), q(1, 1)]));
    let exact = real_roots(&f, DEFAULT_TOL)?;
    for r in &exact.roots {
        println!("root {:+.6} (multiplicity {}) in {:?}", r.value, r.multiplicity, r.bounds);
    }
    println!("nonreal: {}, rootedness {:?}", exact.complex_count, exact.rootedness());
    println!("distinct real roots in (0, 1]: {}", sturm_count(&f, &q(0, 1), &q(1, 1))?);
    println!("power sums: {:?}", power_sums(&f, 4)?.iter().map(|s| s.to_c64().re).collect::<Vec<_>>());

    let float = real_roots(&f.convert::<Complex64>(), DEFAULT_TOL)?;
    println!("float mode expands to {:?}", float.expanded());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
