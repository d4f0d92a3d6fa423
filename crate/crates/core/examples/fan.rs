//! Vertex connectivity, Menger paths and fans.
//!
//!     cargo run --example fan

use graph_minors::connectivity::{disjoint_paths, fan, local_connectivity, vertex_connectivity};
use graph_minors::graph::{complete_bipartite, petersen};

fn main() -> graph_minors::Result<()> {
    let p = petersen();
    println!("kappa(Petersen) = {}", vertex_connectivity(&p));
    println!("local connectivity 0..7 = {}", local_connectivity(&p, 0, 7)?);
    for path in disjoint_paths(&p, 0, 7, 3)?.expect("3-connected") {
        println!("  {path:?}");
    }

    // A 3-connected graph has a 3-fan from any vertex to any 3 others.
    let f = fan(&p, 0, &[5, 6, 7, 8, 9])?;
    print!("fan from 0 to the inner cycle (size {}):\n{f}", f.size());
    println!("valid: {}", f.verify(&p));

    let k34 = complete_bipartite(3, 4)?;
    let f = fan(&k34, 0, &[1, 2])?;
    print!("fan in K3,4 from 0 to its own side:\n{f}");
    Ok(())
}
