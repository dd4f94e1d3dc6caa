//! Linear equations of the balls B_{2e}(R) in Plücker coordinates.

use plueckerdec::pluecker::{ball_equations, ball_forbidden_tuples, construction4, tau_count};
use plueckerdec::{FieldCtx, MatGF, Subspace};

fn main() -> plueckerdec::Result<()> {
    let f = FieldCtx::new(2)?;
    for rows in ["1 0 1 0;0 0 0 1", "1 0 0 1;0 1 1 1"] {
        let r = Subspace::row_space(&MatGF::parse_text(f, rows)?);
        let (_, a_inv) = construction4(&r);
        println!("R = {rows}");
        print!("A^-1 =\n{a_inv}");
        for e in 0..=2 {
            let forms = ball_equations(&r, e)?;
            println!("  e={e}: tau={}", tau_count(4, 2, e));
            for l in forms {
                println!("    {}", l.display(4, 2));
            }
        }
    }
    let forbidden: Vec<String> = ball_forbidden_tuples(6, 3, 1)?.iter().map(|t| t.to_string()).collect();
    println!("n=6 k=3 e=1 forbids {}", forbidden.join(" "));
    Ok(())
}
