fn main() -> std::process::ExitCode {
    topolab::cli::run()
}
