//! Shrinking a host to a minimal subgraph that still carries a minor.
//!
//!     cargo run --example minimal_witness

use graph_minors::graph::{complete, complete_bipartite, Graph};
use graph_minors::minor::minimize_minor_witness;

fn main() -> graph_minors::Result<()> {
    // A grid-like graph with a few chords; look for K4 and K3,3.
    let edges = [
        (0, 1),
        (1, 2),
        (3, 4),
        (4, 5),
        (6, 7),
        (7, 8),
        (0, 3),
        (3, 6),
        (1, 4),
        (4, 7),
        (2, 5),
        (5, 8),
        (0, 4),
        (4, 8),
        (2, 6),
    ];
    let g = Graph::from_edges(9, edges)?;
    for (name, h) in [("K4", complete(4)?), ("K3,3", complete_bipartite(3, 3)?)] {
        match minimize_minor_witness(&g, &h)? {
            Some(w) => {
                println!("{name}: {} of {} edges kept", w.subgraph.edge_count(), g.edge_count());
                println!("  edges: {:?}", w.host_edges());
                println!("  sets:  {:?}", w.host_sets());
                println!("  structure: {:?}", w.structure());
            }
            None => println!("{name}: not a minor"),
        }
    }
    Ok(())
}
