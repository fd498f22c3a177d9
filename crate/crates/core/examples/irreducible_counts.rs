// Irreducible curves with prescribed conic contacts and fixed multiple points.
//
// `cargo run --example irreducible_counts -- "d=4 g=0 alpha= beta=6 s=2"`

use severi::irreducible::enumerate_type2_terms;
use severi::{CurveConfig, Engine};

fn main() {
    let engine = Engine::new();

    if let Some(c) = std::env::args().nth(1).and_then(|t| t.parse::<CurveConfig>().ok()) {
        println!("{c}: {}", engine.count_irreducible(&c).unwrap());
        return;
    }

    // Rational plane curves through 3d - 1 general points.
    for d in 1..=5 {
        let c = CurveConfig::plane(d, 0, Vec::<u32>::new()).unwrap();
        println!("N^0_{d} = {}", engine.count_irreducible(&c).unwrap());
    }

    // Tangent lines from a general point to the conic.
    let c = CurveConfig::new(1, 0, [], [0, 1], Vec::<u32>::new());
    println!("{c}: {}", engine.count_irreducible(&c).unwrap());

    // The degenerations contributing to cubics meeting the conic at 6 fixed points.
    let c = CurveConfig::new(3, 0, [6], [], Vec::<u32>::new());
    for term in enumerate_type2_terms(&c) {
        let parts: Vec<String> = term.components.iter().map(|p| format!("[{}]", p.config())).collect();
        println!("  {} x {}", term.coefficient, parts.join(" "));
    }
    println!("{c}: {}", engine.count_irreducible(&c).unwrap());
    println!("memo holds {} values", engine.memo().len());
}
