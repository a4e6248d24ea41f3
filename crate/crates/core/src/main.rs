fn main() {
    std::process::exit(rzdet::cli::main());
}
