fn main() {
    let code = alliance_core::cli::main_from_env();
    std::process::exit(code);
}
