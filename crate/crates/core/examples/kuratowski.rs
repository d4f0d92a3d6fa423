//! Planarity by forbidden minors, with a Kuratowski subdivision as the
//! certificate and a DOT rendering of it.
//!
//!     cargo run --example kuratowski > witness.dot

use graph_minors::graph::{complete, cycle, petersen, wheel};
use graph_minors::io::{emit_dot, Highlight};
use graph_minors::minor::minimize_minor_witness;
use graph_minors::planarity::{classify_k5_trees, is_planar, kuratowski_witness, planarity_oracle};

fn main() -> graph_minors::Result<()> {
    for (name, g) in [("C6", cycle(6)?), ("W6", wheel(6)?), ("K5", complete(5)?)] {
        println!("# {name}: planar={} oracle={}", is_planar(&g)?, planarity_oracle(&g)?);
    }

    // Every branch tree of the minimal K5 witness in the Petersen graph has
    // two degree-3 vertices, which is how a K3,3 is found instead.
    let p = petersen();
    let w = minimize_minor_witness(&p, &complete(5)?)?.expect("K5 minor");
    for (i, t) in classify_k5_trees(&w)?.iter().enumerate() {
        println!("# tree {i}: leaves={} r2={} r3={} r4={} {:?}", t.leaves, t.r2, t.r3, t.r4, t.kind);
    }

    let witness = kuratowski_witness(&p)?.expect("Petersen is not planar");
    for line in witness.to_string().lines() {
        println!("# {line}");
    }
    print!("{}", emit_dot(&p, Some(Highlight::Subdivision(&witness.embedding)))?);
    Ok(())
}
