fn main() {
    std::process::exit(epqm_cli::run(std::env::args_os()));
}
