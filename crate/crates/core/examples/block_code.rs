//! The block code C^p of a lifted Gabidulin code and its parity checks,
//! for the worked example and a larger code.

use plueckerdec::gabidulin::example_code;
use plueckerdec::listdec::{build_block_code, extended_parity};
use plueckerdec::CodeParams;

fn main() -> plueckerdec::Result<()> {
    for code in [example_code(), CodeParams::new(2, 6, 3, 2).build()?] {
        let bc = build_block_code(&code);
        let labels: Vec<String> = bc.positions.iter().map(|p| format!("x{}", p.label())).collect();
        println!("n={} k={} delta={}: length {}, dimension {}", code.n(), code.k(), code.delta(), bc.len(), bc.gp.rows());
        println!("positions: {}", labels.join(" "));
        print!("Hp:\n{}", bc.hp);
        for f in extended_parity(&bc) {
            println!("  {}", f.display(code.n(), code.k()));
        }
        println!();
    }
    Ok(())
}
