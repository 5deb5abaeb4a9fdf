fn main() {
    std::process::exit(switchbandit::cli::main_with_args(std::env::args_os()));
}
