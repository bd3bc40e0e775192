fn main() {
    std::process::exit(quotient::cli::run(std::env::args_os()));
}
