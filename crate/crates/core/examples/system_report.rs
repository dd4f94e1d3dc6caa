//! Sizes of the decoding system against the number of variables.

use plueckerdec::listdec::system_report;
use plueckerdec::{lift, CodeParams};

fn main() -> plueckerdec::Result<()> {
    println!("(q,n,k,delta,e)  linear  quadratic  vars");
    for (q, n, k, d) in [(2, 4, 2, 2), (2, 6, 2, 2), (2, 6, 3, 2), (3, 7, 3, 3), (2, 8, 4, 3)] {
        let code = CodeParams::new(q, n, k, d).build()?;
        let r = lift(&code.encode_index(1));
        for e in 0..=k {
            let (_, s) = system_report(&code, &r, e)?;
            println!("({q},{n},{k},{d},{e})  {:>6}  {:>9}  {:>4}", s.linear_eqs, s.quadratic_eqs, s.vars);
        }
    }
    Ok(())
}
