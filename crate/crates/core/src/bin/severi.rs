fn main() {
    std::process::exit(severi::cli::main());
}
