fn main() -> std::process::ExitCode {
    crystal_fold::cli::main()
}
