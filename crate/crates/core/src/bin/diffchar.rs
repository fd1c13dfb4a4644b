fn main() {
    std::process::exit(diffchar::cli::run(std::env::args_os()));
}
