fn main() {
    std::process::exit(landau_delta::cli::main_with_args(std::env::args_os()));
}
