fn main() {
    std::process::exit(rmatch::cli::main_with_args(std::env::args_os()));
}
