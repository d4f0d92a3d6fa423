//! Clique minors forced by large chromatic number.
//!
//!     cargo run --example clique_minors

use graph_minors::chromatic::{chromatic_number, extract_clique_minor, extract_k3, extract_k4, max_chromatic_layer};
use graph_minors::graph::{complete, cycle, petersen, wheel, Graph};

fn main() -> graph_minors::Result<()> {
    let c7 = cycle(7)?;
    print!("odd cycle C7 -> K3:\n{}", extract_k3(&c7)?);

    // Two 5-wheels sharing a rim edge: 4-chromatic with a 2-separator.
    let w = wheel(5)?;
    let shift = |v: usize| if v < 2 { v } else { v + 4 };
    let glued = Graph::from_edges(
        10,
        w.edges().chain(w.edges().filter(|&(a, b)| (a, b) != (0, 1)).map(|(a, b)| (shift(a), shift(b)))),
    )?;
    println!("glued wheels: chi = {}", chromatic_number(&glued)?.0);
    print!("K4:\n{}", extract_k4(&glued)?);

    let p = petersen();
    let layer = max_chromatic_layer(&p, 0)?;
    println!("Petersen, root 0: layer {} has chi {} (layers {:?})", layer.d, layer.chi(), layer.layers.layers);

    let k9 = complete(9)?;
    print!("K9, k = 3:\n{}", extract_clique_minor(&k9, 3)?);
    Ok(())
}
