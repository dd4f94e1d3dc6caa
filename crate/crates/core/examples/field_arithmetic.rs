//! Arithmetic in F_{2^3} and F_{3^2} with the shipped moduli.

use plueckerdec::{ExtFieldCtx, FieldCtx};

fn main() -> plueckerdec::Result<()> {
    for (q, ell) in [(2, 3), (3, 2)] {
        let f = ExtFieldCtx::with_default_modulus(FieldCtx::new(q)?, ell)?;
        println!("F_{}^{ell}, modulus {:?} (low degree first)", q, f.modulus());
        let a = f.alpha();
        let x = f.parse_element("alpha^2+1")?;
        println!("  x = {}  phi(x) = {:?}", f.display(&x), f.phi(&x));
        println!("  x * alpha = {}", f.display(&f.mul(&x, &a)));
        println!("  x^-1 = {}", f.display(&f.inv(&x)?));
        println!("  frobenius(x) = {}", f.display(&f.frobenius(&x, 1)));
        println!("  order(alpha) = {:?}", f.multiplicative_order(&a));
    }
    Ok(())
}
