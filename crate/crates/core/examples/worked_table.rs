//! The smallest lifted Gabidulin code: q = 2, k = ℓ = δ = 2, g = (α, 1).
//! Prints every codeword with its matrix, lifting and Plücker vector.

use plueckerdec::gabidulin::example_code;
use plueckerdec::{embed, lift};

fn main() -> plueckerdec::Result<()> {
    let code = example_code();
    let ext = code.ext();
    println!("{:<18} {:<10} {:<18} pluecker", "codeword", "matrix", "lifting");
    for w in code.enumerate_code(16)? {
        let u = lift(&w);
        let vec: Vec<String> = w.vec.iter().map(|e| ext.display(e)).collect();
        println!(
            "{:<18} {:<10} {:<18} {}",
            format!("({})", vec.join(",")),
            plueckerdec::cli::inline(&w.mat),
            plueckerdec::cli::inline(u.basis()),
            embed(&u)
        );
    }
    Ok(())
}
