fn main() {
    std::process::exit(signlap::cli::main());
}
