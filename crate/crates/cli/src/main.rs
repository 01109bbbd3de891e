fn main() {
    std::process::exit(horosplit_cli::run_cli(std::env::args_os()));
}
