//! Shuffle relations for small Grassmannians, and where they stop being
//! enough.

use plueckerdec::pluecker::{full_pluecker_relations, shuffle_relations};

fn main() {
    for r in shuffle_relations(4, 2) {
        println!("G(2,4): {r}");
    }
    println!("G(2,5): {} relations", shuffle_relations(5, 2).len());
    for (n, k) in [(5, 3), (6, 3)] {
        println!(
            "G({k},{n}): {} shuffle relations, {} exchange relations",
            shuffle_relations(n, k).len(),
            full_pluecker_relations(n, k).len()
        );
    }
}
