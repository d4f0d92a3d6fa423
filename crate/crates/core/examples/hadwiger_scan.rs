//! Checks that chromatic number k forces a K_k minor on small graphs.
//!
//!     cargo run --release --example hadwiger_scan            # all graphs on <= 6 vertices
//!     cargo run --release --example hadwiger_scan -- 9 7 42  # 9 vertices, seeded sampling

use graph_minors::chromatic::{hadwiger_scan, ScanMode};

fn main() -> graph_minors::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (n_max, k_max, mode) = match args[..] {
        [n, k, seed] => (n, k, ScanMode::Sampled { samples: 200, seed: seed as u64 }),
        [n, k] => (n, k, ScanMode::Exhaustive),
        _ => (6, 6, ScanMode::Exhaustive),
    };
    let start = std::time::Instant::now();
    let report = hadwiger_scan(n_max, k_max, mode)?;
    print!("{report}");
    println!("elapsed: {:.2?}", start.elapsed());
    Ok(())
}
