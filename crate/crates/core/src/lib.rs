//! List decoding of lifted Gabidulin codes via the Plücker embedding.
//!
//! The pipeline runs bottom-up:
//!
//! * [`gf`]: prime fields F_q and extensions F_{q^ℓ};
//! * [`matgf`]: exact linear algebra over F_q;
//! * [`subspace`]: subspaces of F_q^n and the subspace distance;
//! * [`gabidulin`]: Gabidulin codes and their liftings;
//! * [`pluecker`]: Plücker coordinates, shuffle relations and ball equations;
//! * [`listdec`]: the block code `C^p` and the list decoder;
//! * [`channel`]: a seeded operator channel for experiments;
//! * [`cli`]: the `plueckerdec` command line.

pub mod channel;
pub mod cli;
pub mod error;
pub mod gabidulin;
pub mod gf;
pub mod listdec;
pub mod matgf;
pub mod pluecker;
pub mod subspace;

pub use error::{Error, Result};
pub use gabidulin::{lift, lift_matrix, CodeParams, GabidulinCode, RankCodeword};
pub use gf::{ExtElement, ExtFieldCtx, FieldCtx};
pub use listdec::{decode_list, DecodeList, DecodeOptions, ListDecoder, Strategy};
pub use matgf::MatGF;
pub use pluecker::{embed, IndexTuple, PlueckerVector};
pub use subspace::{subspace_distance, Subspace};
