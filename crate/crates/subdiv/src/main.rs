fn main() {
    std::process::exit(subdiv::cli::run_cli(std::env::args_os()));
}
