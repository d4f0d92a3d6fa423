//! Topological minors, and turning a minor of a subcubic pattern into a
//! subdivision.
//!
//!     cargo run --example subdivision

use graph_minors::graph::{complete, complete_bipartite, petersen};
use graph_minors::topo::{find_subdivision, minor_to_subdivision, subdivision_to_model};
use graph_minors::GraphError;

fn main() -> graph_minors::Result<()> {
    let p = petersen();
    let k33 = complete_bipartite(3, 3)?;

    let direct = find_subdivision(&p, &k33)?.expect("found by search");
    println!("search:\n{direct}");

    let built = minor_to_subdivision(&p, &k33)?.expect("K3,3 has maximum degree 3");
    println!("built from a minimal minor witness:\n{built}");
    println!("verifies: {}", built.verify()?);

    let model = subdivision_to_model(&built)?;
    println!("and back to branch sets:\n{model}");

    // K5 has degree 4, so a minor need not give a subdivision.
    match minor_to_subdivision(&p, &complete(5)?) {
        Err(GraphError::PatternDegreeTooHigh { max_degree }) => {
            println!("K5 refused: pattern degree {max_degree}")
        }
        other => println!("unexpected: {other:?}"),
    }
    Ok(())
}
