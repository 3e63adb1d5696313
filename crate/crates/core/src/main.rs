fn main() {
    std::process::exit(wiener_ecc::cli::main_with_args(std::env::args_os()));
}
