fn main() {
    std::process::exit(hajos_ramsey::cli::run(std::env::args_os()));
}
