fn main() -> std::process::ExitCode {
    dgsp::cli::main()
}
