fn main() {
    std::process::exit(steiner::cli::run(std::env::args_os()));
}
