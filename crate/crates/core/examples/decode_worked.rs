//! List decoding the two received spaces around the worked example, with
//! all three strategies.

use plueckerdec::gabidulin::example_code;
use plueckerdec::{FieldCtx, ListDecoder, MatGF, Strategy, Subspace};

fn main() -> plueckerdec::Result<()> {
    let f = FieldCtx::new(2)?;
    let dec = ListDecoder::new(example_code());
    for rows in ["1 0 1 0;0 0 0 1", "1 0 0 1;0 1 1 1"] {
        let r = Subspace::row_space(&MatGF::parse_text(f, rows)?);
        print!("received {rows}, e = 1\n{}", dec.assemble(&r, 1)?);
        for s in Strategy::ALL {
            let out = dec.decode_with(&r, 1, s)?;
            let found: Vec<String> = out.list.entries.iter().map(|e| e.pluecker.to_string()).collect();
            println!("  {:<8} {}", s.name(), found.join(" "));
        }
    }
    Ok(())
}
