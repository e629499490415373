fn main() {
    std::process::exit(fockcanon::cli::run(std::env::args_os()));
}
