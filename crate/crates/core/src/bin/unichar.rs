fn main() {
    std::process::exit(unichar::cli::run(std::env::args_os()));
}
