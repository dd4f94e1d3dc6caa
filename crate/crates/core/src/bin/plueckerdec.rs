fn main() {
    std::process::exit(plueckerdec::cli::main());
}
