fn main() {
    std::process::exit(cheeger::cli::run(std::env::args_os()));
}
