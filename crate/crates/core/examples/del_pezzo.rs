// Gromov-Witten invariants of the plane blown up at up to five points of a conic.

use severi::surfaces::{gw_delpezzo, BlowupClass};
use severi::Engine;

fn main() {
    let engine = Engine::new();
    let classes = [
        BlowupClass::new(0, vec![-1], 0),
        BlowupClass::new(1, vec![1, 1], 0),
        BlowupClass::new(2, vec![1; 5], 0),
        BlowupClass::new(3, vec![2, 1, 1, 1, 1], 0),
        BlowupClass::new(4, vec![2], 1),
        BlowupClass::new(5, vec![2; 5], 0),
        BlowupClass::new(5, vec![3, 2, 2, 2], 0),
    ];
    for class in &classes {
        let v = gw_delpezzo(&engine, class).unwrap();
        println!("GW[{class}] = {} ({} point conditions)", v.count, v.point_conditions);
    }
}
