fn main() {
    std::process::exit(herglotz_lab::cli::main_with_args(std::env::args_os()));
}
