fn main() {
    std::process::exit(nodalgaps::cli::run(std::env::args_os()));
}
