// Saving the memo to disk and warming a new engine from it.

use std::sync::Arc;

use severi::{CurveConfig, Engine, MemoStore};

fn main() {
    let path = std::env::temp_dir().join(format!("severi-example-{}.cache", std::process::id()));
    let c = CurveConfig::plane(5, 1, vec![2]).unwrap();

    let cold = Engine::new();
    let n = cold.count_irreducible(&c).unwrap();
    cold.memo().save(&path).unwrap();
    println!("{c}: {n}; saved {} entries to {}", cold.memo().len(), path.display());

    let text = std::fs::read_to_string(&path).unwrap();
    for line in text.lines().take(4) {
        println!("  {line}");
    }

    let warm = Engine::with_memo(Arc::new(MemoStore::new()));
    let loaded = warm.memo().load(&path).unwrap();
    assert_eq!(warm.count_irreducible(&c).unwrap(), n);
    println!("reloaded {loaded} entries; warm engine agrees");
    std::fs::remove_file(&path).unwrap();
}
