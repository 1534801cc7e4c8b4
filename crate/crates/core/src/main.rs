use std::io;
use std::process::ExitCode;

use yrqs::cli;

fn configure_threads() {
    let Ok(v) = std::env::var(cli::THREADS_ENV) else {
        return;
    };
    let Ok(n) = v.trim().parse::<usize>() else {
        eprintln!("warning: ignoring {}={v:?}, expected a thread count", cli::THREADS_ENV);
        return;
    };
    #[cfg(feature = "parallel")]
    if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
        eprintln!("warning: cannot size the thread pool: {e}");
    }
    #[cfg(not(feature = "parallel"))]
    let _ = n;
}

fn main() -> ExitCode {
    configure_threads();
    let status = cli::run(std::env::args_os(), &mut io::stdout().lock(), &mut io::stderr().lock());
    ExitCode::from(status as u8)
}
