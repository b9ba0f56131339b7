fn main() -> std::process::ExitCode {
    lincol::cli::main()
}
