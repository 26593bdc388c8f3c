fn main() -> std::process::ExitCode {
    ptdrsc::cli::main()
}
