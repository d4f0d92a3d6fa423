//! Branch-set models and the edit sequences they encode.
//!
//!     cargo run --example minor_model

use graph_minors::graph::{complete, cycle, is_isomorphic, wheel};
use graph_minors::minor::{apply_edits, find_minor_model, has_minor_oracle, model_to_edit_sequence};

fn main() -> graph_minors::Result<()> {
    let w = wheel(6)?;
    let k4 = complete(4)?;
    let model = find_minor_model(&w, &k4)?.expect("wheels contract to K4");
    print!("K4 in W6:\n{model}");

    let steps = model_to_edit_sequence(&model)?;
    println!("edit sequence ({} steps):", steps.len());
    for s in &steps {
        println!("  {s}");
    }
    let end = apply_edits(&w, &steps)?;
    println!("result isomorphic to K4: {}", is_isomorphic(&end, &k4)?);

    // The brute-force oracle agrees, including on negatives.
    let c7 = cycle(7)?;
    for (name, g) in [("W6", &w), ("C7", &c7)] {
        let fast = find_minor_model(g, &k4)?.is_some();
        let slow = has_minor_oracle(g, &k4)?;
        println!("{name} has K4 minor: search={fast} oracle={slow}");
    }
    Ok(())
}
