fn main() {
    std::process::exit(hyperarr::cli::main_with_args(std::env::args_os()));
}
