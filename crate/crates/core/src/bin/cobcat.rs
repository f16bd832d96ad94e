fn main() {
    let limit = std::env::var(cobcat::cli::SIZE_LIMIT_VAR).ok();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let code = cobcat::cli::run(std::env::args_os(), limit.as_deref(), &mut stdout.lock(), &mut stderr.lock());
    std::process::exit(code);
}
