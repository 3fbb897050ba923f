use std::io::Write;

fn main() {
    let env = match polite_cli::Env::from_process() {
        Ok(env) => env,
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(polite_cli::EXIT_USAGE);
        }
    };
    let stdout = std::io::stdout();
    let mut out = std::io::BufWriter::new(stdout.lock());
    let mut err = std::io::stderr();
    let mut code = polite_cli::run(std::env::args_os(), env, &mut out, &mut err);
    if out.flush().is_err() && code == polite_cli::EXIT_OK {
        code = polite_cli::EXIT_USAGE;
    }
    std::process::exit(code);
}
