//! For a received R and any A, a matrix M whose lifting is as far from
//! lift(A) as R is.

use plueckerdec::pluecker::equidistant_lift;
use plueckerdec::{lift_matrix, FieldCtx, MatGF, Subspace};

fn main() -> plueckerdec::Result<()> {
    let f = FieldCtx::new(3)?;
    let r = Subspace::row_space(&MatGF::parse_text(f, "1 2 0 1 1;0 0 1 2 0")?);
    let a = MatGF::parse_text(f, "1 0 2;2 1 1")?;
    let m = equidistant_lift(&r, &a)?;
    let lifted = lift_matrix(&a);
    println!("R =\n{r}A =\n{a}M =\n{m}");
    println!("d_S(lift(A), R) = {}", lifted.distance(&r)?);
    println!("d_S(lift(A), lift(M)) = {}", lifted.distance(&lift_matrix(&m))?);
    Ok(())
}
