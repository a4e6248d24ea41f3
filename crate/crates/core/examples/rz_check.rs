// Sampled real-zero test on three named polynomials.
//
// `cargo run --example rz_check`

use rzdet::corpus;
use rzdet::rz::is_rz_sampled;
use rzdet::scalar::GaussRational;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for inst in [corpus::circle(), corpus::tv_screen(), corpus::bad_quadratic(3)?] {
        let p = inst.poly_as::<GaussRational>();
        let x0 = inst.x0_as::<GaussRational>();
        let verdict = is_rz_sampled(&p, &x0, 100, 1e-9, 7)?;
        println!("{:<16} {:?}", inst.name, verdict.status);
        if let Some(w) = &verdict.witness {
            println!("  witness direction {:?}: {} nonreal roots", w.dir, w.complex_roots);
        }
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
