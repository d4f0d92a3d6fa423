//! Writing graphs and certificates as text and checking them after parsing
//! them back, the way an independent checker would.
//!
//!     cargo run --example certificates

use graph_minors::cli::run_args;
use graph_minors::graph::{complete, petersen};
use graph_minors::io::{parse_branch_sets, parse_graph, write_graph};

fn main() -> graph_minors::Result<()> {
    let text = write_graph(&petersen());
    print!("edge list:\n{text}");
    let g = parse_graph(&text)?;

    let out = run_args(["minorkit", "check-minor", "petersen", "k5"]);
    print!("minorkit check-minor petersen k5 (exit {}):\n{}", out.status, out.report);
    let model = parse_branch_sets(&out.report, &g, &complete(5)?)?;
    println!("certificate re-verified: {}", model.verify()?);

    match parse_graph("2 1\n0 0\n") {
        Err(e) => println!("rejected: {e}"),
        Ok(g) => println!("unexpectedly parsed {g:?}"),
    }
    Ok(())
}
