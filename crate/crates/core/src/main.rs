fn main() {
    std::process::exit(detbetti::cli::main_exit_code());
}
