fn main() {
    std::process::exit(ambitrace::cli::run(std::env::args_os()));
}
