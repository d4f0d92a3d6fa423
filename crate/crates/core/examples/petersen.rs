//! The Petersen graph: a K5 minor but no K5 subdivision.
//!
//!     cargo run --example petersen

use graph_minors::chromatic::chromatic_number;
use graph_minors::connectivity::vertex_connectivity;
use graph_minors::graph::{complete, complete_bipartite, petersen};
use graph_minors::minor::find_minor_model;
use graph_minors::planarity::is_planar;
use graph_minors::topo::find_subdivision;

fn main() -> graph_minors::Result<()> {
    let p = petersen();
    let k5 = complete(5)?;
    let k33 = complete_bipartite(3, 3)?;
    println!("{} vertices, {} edges, degrees {:?}", p.vertex_count(), p.edge_count(), p.degree_sequence());

    // Contracting the five spokes u_i v_i gives K5.
    let model = find_minor_model(&p, &k5)?.expect("K5 is a minor");
    println!("K5 branch sets (verified: {}):\n{model}", model.verify()?);

    // A K5 subdivision would need five degree-4 vertices.
    println!("K5 subdivision: {:?}", find_subdivision(&p, &k5)?.map(|_| "found"));

    let e = find_subdivision(&p, &k33)?.expect("K33 is a topological minor");
    println!("K3,3 subdivision:\n{e}");

    println!("planar: {}", is_planar(&p)?);
    println!("connectivity: {}", vertex_connectivity(&p));
    println!("chromatic number: {}", chromatic_number(&p)?.0);
    Ok(())
}
