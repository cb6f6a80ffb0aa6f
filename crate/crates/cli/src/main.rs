use std::io::Write;

fn main() {
    let outcome = cayint_cli::run(std::env::args_os());
    let mut out = std::io::stdout().lock();
    // A closed pipe is not worth a panic.
    let _ = writeln!(out, "{}", outcome.render());
    std::process::exit(outcome.exit_code());
}
