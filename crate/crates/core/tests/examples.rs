//! Every example under `examples/` runs to completion.

#[allow(dead_code)]
mod rz_check {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/rz_check.rs"));
}

#[test]
fn rz_check_example_runs() {
    rz_check::run_example().expect("rz_check example");
}

#[allow(dead_code)]
mod hermite {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/hermite.rs"));
}

#[test]
fn hermite_example_runs() {
    hermite::run_example().expect("hermite example");
}

#[allow(dead_code)]
mod renegar_membership {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/renegar_membership.rs"));
}

#[test]
fn renegar_membership_example_runs() {
    renegar_membership::run_example().expect("renegar_membership example");
}

#[allow(dead_code)]
mod interlacing {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/interlacing.rs"));
}

#[test]
fn interlacing_example_runs() {
    interlacing::run_example().expect("interlacing example");
}

#[allow(dead_code)]
mod construct_circle {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/construct_circle.rs"));
}

#[test]
fn construct_circle_example_runs() {
    construct_circle::run_example().expect("construct_circle example");
}

#[allow(dead_code)]
mod construct_random {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/construct_random.rs"));
}

#[test]
fn construct_random_example_runs() {
    construct_random::run_example().expect("construct_random example");
}

#[allow(dead_code)]
mod verify_pencil {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/verify_pencil.rs"));
}

#[test]
fn verify_pencil_example_runs() {
    verify_pencil::run_example().expect("verify_pencil example");
}

#[allow(dead_code)]
mod cross_check {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/cross_check.rs"));
}

#[test]
fn cross_check_example_runs() {
    cross_check::run_example().expect("cross_check example");
}

#[allow(dead_code)]
mod realify {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/realify.rs"));
}

#[test]
fn realify_example_runs() {
    realify::run_example().expect("realify example");
}

#[allow(dead_code)]
mod vamos {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/vamos.rs"));
}

#[test]
fn vamos_example_runs() {
    vamos::run_example().expect("vamos example");
}

#[allow(dead_code)]
mod real_roots {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/real_roots.rs"));
}

#[test]
fn real_roots_example_runs() {
    real_roots::run_example().expect("real_roots example");
}

#[allow(dead_code)]
mod poly_io {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/poly_io.rs"));
}

#[test]
fn poly_io_example_runs() {
    poly_io::run_example().expect("poly_io example");
}
