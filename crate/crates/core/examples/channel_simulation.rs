//! Corrupt-then-decode trials in the unique and the list regime.

use plueckerdec::channel::simulate;
use plueckerdec::{CodeParams, Strategy};

fn main() -> plueckerdec::Result<()> {
    let code = CodeParams::new(2, 6, 3, 3).build()?;
    for t in [1, 2, 3] {
        let recs = simulate(&code, t, 50, 7, Strategy::Paper)?;
        let ok = recs.iter().filter(|r| r.success).count();
        let unique = recs.iter().filter(|r| r.unique).count();
        let mean = recs.iter().map(|r| r.list_size).sum::<usize>() as f64 / recs.len() as f64;
        println!("t={t}: {ok}/50 contain the codeword, {unique}/50 unique, mean list size {mean:.1}");
    }
    Ok(())
}
