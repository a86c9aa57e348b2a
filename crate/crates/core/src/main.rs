fn main() {
    std::process::exit(polycover::cli::run(std::env::args_os()));
}
