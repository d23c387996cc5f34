fn main() {
    std::process::exit(pbwfact::cli::run(std::env::args_os()));
}
