fn main() -> std::process::ExitCode {
    gradlab::cli::run()
}
