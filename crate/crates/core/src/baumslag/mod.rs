//! Exact model of Baumslag's metabelian group `B = <a, b, c>` and of the
//! direct product `<h> x B`.
//!
//! `B` is realized as the semidirect product `M ⋊ Z^2` with
//! `M = GF(2)[x, 1/x, 1/(1+x)]`: `a` is the module element `1`, conjugation
//! by `b` multiplies by `x` and conjugation by `c` multiplies by `1 + x`
//! (with `u^v = v^-1 u v`). Every defining relator of `B` evaluates to the
//! identity here. The map is faithful by Baumslag's embedding theorem for
//! metabelian groups.

mod model;
mod poly;
mod polyfrac;

pub use model::{
    eval_b, eval_base, member_a, member_h2, member_ha, BElement, BaseElement, BaumslagGroup,
    ProductGroup, ProductSubgroup,
};
pub use poly::Gf2Poly;
pub use polyfrac::{span_membership, PolyFrac};
