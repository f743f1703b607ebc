use std::io::Write;

fn main() {
    configure_worker_pool();
    let outcome = qcover_cli::run(std::env::args());
    if !outcome.stdout.is_empty() {
        print!("{}", outcome.stdout);
    }
    if !outcome.stderr.is_empty() {
        let _ = write!(std::io::stderr(), "{}", outcome.stderr);
    }
    std::process::exit(outcome.code);
}

/// `QCOVER_THREADS` bounds the worker pool for the verification suites.
#[cfg(feature = "parallel")]
fn configure_worker_pool() {
    if let Ok(value) = std::env::var("QCOVER_THREADS") {
        if let Ok(threads) = value.parse::<usize>() {
            if threads > 0 {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
            }
        }
    }
}

#[cfg(not(feature = "parallel"))]
fn configure_worker_pool() {}
