// Renegar derivatives and the nested membership test for a cubic.
//
// `cargo run --example renegar_membership`

use rzdet::corpus;
use rzdet::poly::io::to_text;
use rzdet::rz::{renegar_derivative, MembershipOracle};
use rzdet::scalar::{CoeffMode, GaussRational};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let inst = corpus::random_rz(3, 11, CoeffMode::Rational)?;
    let p = inst.poly_as::<GaussRational>();
    let x0 = inst.x0_as::<GaussRational>();
    for k in 0..3 {
        let (q, _) = renegar_derivative(&p, &x0, k)?;
        println!("p^({k}) has {} terms:", q.num_terms());
        println!("{}", to_text(&q));
    }

    let oracle = MembershipOracle::new(&p, &x0)?;
    for x in [[0.0, 0.0], [0.3, -0.2], [2.0, 2.0], [-5.0, 1.0]] {
        println!("{x:?}: levels {:?} -> member {}", oracle.values(&x), oracle.contains(&x, 1e-12));
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
