fn main() {
    std::process::exit(rankcp::cli::run(std::env::args_os()));
}
