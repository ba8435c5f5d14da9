fn main() -> std::process::ExitCode {
    token_spectra::cli::main()
}
