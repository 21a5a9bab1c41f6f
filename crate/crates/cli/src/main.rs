fn main() {
    std::process::exit(indexcode_cli::run());
}
