fn main() {
    std::process::exit(skewprime_cli::run(std::env::args_os()));
}
