fn main() {
    std::process::exit(qhopf::cli::run(std::env::args_os()));
}
