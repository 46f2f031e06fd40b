//! Orthogonal polynomial systems and the Chebyshev closed forms.

mod chebyshev;
mod closed_forms;
mod system;

pub use chebyshev::{chebyshev_u, q_poly, u_at_inverse_2t};
pub use closed_forms::{
    gf_avoiders_12k, gf_avoiders_23k1, gf_avoiders_k1k, gf_exactly_r_12k, gf_exactly_r_23k1, gf_exactly_r_k1k,
    gf_one_23k1, occurrence_compositions,
};
pub use system::{strip_gf, PolySystem};
