// Float round trip: a random hermitian determinant is rebuilt from its
// polynomial alone and the result is certified.
//
// `cargo run --release --example construct_random -- 4 17`

use num_complex::Complex64;
use rzdet::construct::{construct, ConstructOptions, InterlacerSpec};
use rzdet::corpus;
use rzdet::pencil::verify_lmi;
use rzdet::scalar::CoeffMode;

fn run(m: usize, seed: u64) -> Result<(), Box<dyn std::error::Error>> {
    let inst = corpus::random_rz(m, seed, CoeffMode::Float)?;
    let p = inst.poly_as::<Complex64>();
    let x0 = inst.x0_as::<Complex64>();
    let opts = ConstructOptions { seed, ..ConstructOptions::default() };
    let (pencil, trace) = construct(&p, &x0, &InterlacerSpec::default(), &opts)?;
    let report = verify_lmi(&pencil, &p, &x0, 1e-9, 200, seed)?;
    println!(
        "{}: {} attempt(s), det residual {:.2e}, identity error {:.2e}, verify {:?}",
        inst.name, trace.attempts, report.det_residual, report.basepoint_identity_error, report.status
    );
    Ok(())
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    match args.as_slice() {
        [m, seed] => run(*m as usize, *seed),
        _ => {
            for m in 2..=4 {
                run(m, 5)?;
            }
            Ok(())
        }
    }
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
