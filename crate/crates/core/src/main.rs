fn main() {
    std::process::exit(swsh::cli::main());
}
