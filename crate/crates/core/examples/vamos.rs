// The basis generating polynomial of the Vamos matroid: bases and a
// sampled real-zero test at the origin.
//
// `cargo run --release --example vamos`

use rzdet::corpus::{self, VAMOS_LABELS};
use rzdet::rz::is_rz_sampled;
use rzdet::scalar::GaussRational;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let label = |b: &[usize; 4]| b.iter().map(|&i| VAMOS_LABELS[i]).collect::<Vec<_>>().join("");
    println!("non-bases: {:?}", corpus::vamos_nonbases().iter().map(label).collect::<Vec<_>>());
    println!("{} bases", corpus::vamos_bases().len());

    let inst = corpus::vamos();
    let p = inst.poly_as::<GaussRational>();
    let verdict = is_rz_sampled(&p, &inst.x0_as::<GaussRational>(), 200, 1e-9, 0)?;
    println!("{} terms, degree {:?}, sampled verdict {:?}", p.num_terms(), p.degree(), verdict.status);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
