fn main() {
    std::process::exit(loctri_cli::main_with_stdio());
}
