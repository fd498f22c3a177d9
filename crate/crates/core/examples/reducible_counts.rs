// Possibly reducible curves, and the multigraph count behind the base case.

use severi::reducible::{count_loopless_multigraphs, DegreeSequence};
use severi::{CurveConfig, Engine};

fn main() {
    let engine = Engine::new();

    // Two lines through four fixed points of the conic: three ways to pair them.
    let c = CurveConfig::new(2, -1, [4], [], Vec::<u32>::new());
    println!("{c}: {}", engine.count_reducible(&c).unwrap());

    for (d, g) in [(3, 1), (3, 0), (3, -2), (4, 3)] {
        let c = CurveConfig::plane(d, g, Vec::<u32>::new()).unwrap();
        println!(
            "{c}: all {}  irreducible {}",
            engine.count_reducible(&c).unwrap(),
            engine.count_irreducible(&c).unwrap()
        );
    }

    for degrees in [vec![1, 1, 1, 1], vec![2, 2, 2], vec![3, 3, 2]] {
        let n = count_loopless_multigraphs(&DegreeSequence::new(degrees.clone()).unwrap());
        println!("loopless multigraphs with degrees {degrees:?}: {n}");
    }
}
