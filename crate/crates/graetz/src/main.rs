fn main() {
    std::process::exit(graetz::cli::run(std::env::args_os()));
}
