// Conjectural invariants of the cubic surface, degenerated to six points on a conic.

use severi::surfaces::{gw_cubic_conjectural, BlowupClass};
use severi::Engine;

fn main() {
    let engine = Engine::new();
    for class in [
        BlowupClass::new(1, vec![1, 1, 0, 0, 0, 0], 0),
        BlowupClass::new(3, vec![1; 6], 0),
        BlowupClass::new(6, vec![2; 6], 0),
    ] {
        let v = gw_cubic_conjectural(&engine, &class).unwrap();
        println!("{class}: {}", v.total);
        for t in &v.breakdown {
            println!(
                "  j={}: {} x {} ({})",
                t.j, t.attach_count, t.core_count, t.core
            );
        }
    }
}
