fn main() -> std::process::ExitCode {
    alt_hecke::cli::main()
}
