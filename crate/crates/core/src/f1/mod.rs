//! Linear algebra over `F_1`, `F_{1^n}` and `F̄_1`.
//!
//! Vector spaces are finite sets and morphisms are partially defined maps;
//! over `F_{1^n}` a morphism is an `n`-tuple of them.

mod adjunction;
mod frob;
mod monoid;
mod space;
mod sym;

pub use adjunction::{
    adjunction_check, left_transpose, left_untranspose, m_res_partial, m_res_partial_len,
    right_transpose, right_untranspose, AdjunctionReport, BijectionCheck,
    ADJUNCTION_ENUMERATION_CAP,
};
pub use frob::{
    a_res, aut_group_f1, frob_aut_group, gl_f1n, m_res, AutGroupF1, FrobAutGroup, FrobCarrier,
    FrobSet, GlF1n,
};
pub use monoid::{
    gl_module, GlModule, ModuleAutomorphism, MonoidFactor, StructuredMonoid,
    GL_MODULE_ENUMERATION_CAP,
};
pub use space::{extend_morphism, scalar_extend, F1Space, F1nMorphism, FbarMorphism, PartialMap};
pub use sym::{sym_rep, SymRep};
