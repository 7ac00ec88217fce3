use std::io::Write;

use hopf2::cli::{run, EXIT_FAIL, MAX_DIM_ENV};

fn main() {
    let max_dim = match std::env::var(MAX_DIM_ENV) {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(d) => Some(d),
            Err(_) => {
                eprintln!("hopf2: {MAX_DIM_ENV} must be a positive integer, got {v:?}");
                std::process::exit(EXIT_FAIL);
            }
        },
        Err(_) => None,
    };
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let code = run(std::env::args_os(), max_dim, &mut stdout.lock(), &mut stderr.lock());
    let _ = std::io::stdout().flush();
    std::process::exit(code);
}
