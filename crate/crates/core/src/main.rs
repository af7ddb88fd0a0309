fn main() {
    std::process::exit(slimtw::cli::run(std::env::args_os()));
}
