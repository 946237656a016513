use std::io::Write;

fn main() {
    let outcome = veronese::cli::run(std::env::args_os());
    let to_stdout = outcome.exit_code == 0 || outcome.json;
    let written = if to_stdout {
        std::io::stdout().write_all(outcome.rendered.as_bytes())
    } else {
        std::io::stderr().write_all(outcome.rendered.as_bytes())
    };
    if written.is_err() {
        std::process::exit(1);
    }
    std::process::exit(outcome.exit_code);
}
