use std::io::Write;

fn main() {
    let outcome = graph_minors::cli::run_args(std::env::args_os());
    let mut out: Box<dyn Write> =
        if outcome.status == 2 { Box::new(std::io::stderr()) } else { Box::new(std::io::stdout()) };
    out.write_all(outcome.report.as_bytes()).expect("write report");
    std::process::exit(outcome.status);
}
