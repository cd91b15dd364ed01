fn main() {
    std::process::exit(affectix::cli::run(std::env::args_os()));
}
