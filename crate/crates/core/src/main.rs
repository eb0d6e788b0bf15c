fn main() {
    std::process::exit(hypergraphic::cli::main());
}
