//! `(α, β)`-Yetter-Drinfeld quasimodules and the braided crossed category
//! they form over the group of automorphism pairs.

mod braiding;
mod expr;
mod group;
mod module;
mod morphism;
mod tcategory;

pub use braiding::{
    braiding, braiding_inverse, braiding_inverse_entries, braiding_morphism_entries, conjugate, hexagon_entries,
    phi_braiding_witness, standard_twist, tensor_ydq, verify_braiding_inverse, verify_braiding_morphism,
    verify_braiding_morphism_with, verify_hexagons, verify_hexagons_with, verify_phi_braiding, Twist, COMODULE_MAP,
    HEXAGON_LEFT, HEXAGON_LEFT_TARGET, HEXAGON_RIGHT, HEXAGON_RIGHT_TARGET, MODULE_MAP,
};
pub use expr::{
    comodule_entries, compat, plain_entries, quasimodule_entries, CompatReport, YdqExpr, COACTION_OF_ACTION, PLAIN_YD,
    QUASI_LEFT, QUASI_MIDDLE, TWISTED_YD,
};
pub use group::{g_inv, g_mul, same_ambient, GElement};
pub use module::{check_comodule, check_compat, check_plain_ydq, check_quasimodule, make_canonical, YdqModule};
pub use morphism::{
    check_morphism, morphism_space, naturality_witness, random_invertible, sample_morphism, transport,
    verify_naturality, YdqMorphism,
};
pub use tcategory::{verify_t_category, Suite, TCategoryOptions};
