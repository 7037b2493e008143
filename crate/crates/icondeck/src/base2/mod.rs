//! Strict 2-categories, permutative bases, pasting evaluation, and the
//! weak monoidal-bicategory data model with its axiom checkers.
//!
//! A strict 2-category is presented tabularly: a finite set of 0-cells,
//! a [`crate::fincat::FinCategory`] for every hom, and a composition
//! functor for every composable triple.  A *permutative base* adds a
//! strictly associative, strictly unital tensor with a strictly natural
//! involutive symmetry.  Bases may be tables ([`table_base`]) or lazy
//! computed structures ([`fincat_base`]) whose hom-categories are
//! materialized on demand under size caps.
//!
//! On top of any base, [`weak_data::WeakMonBicatData`] carries explicit
//! constraint data (associator and unitor families with their
//! invertible modifications, optional braiding and syllepsis), and the
//! `check_*_axioms` functions evaluate both pasted sides of every
//! coherence axiom instance by exhaustive cell computation.

pub mod fun_table;
pub mod paste;
pub mod perm_base;
pub mod two_category;
pub mod weak_data;

pub use fun_table::{value_resolver, CellResolver, FunctorTableBase, FunctorTableBuilder};
pub use paste::{paste_eval, PasteExpr, PasteHost};
pub use perm_base::{fincat_base, table_base, validate_perm_base, FinCatBase, HomProvider, PermBase, TableBase};
pub use two_category::{validate_two_category, TwoCategory};
pub use weak_data::{
    check_braiding_axioms, check_monoidal_axioms, check_syllepsis_axioms, check_symmetry_axiom,
    z4_scalar_base, z4_twisted_data, AdjEquivData, BraidingData, ConstraintMap, WeakMonBicatData,
};

use serde::{Deserialize, Serialize};

/// A 1-cell of a strict 2-category: an object `name` of the hom
/// category `hom(src0, tgt0)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell1 {
    pub src0: String,
    pub tgt0: String,
    pub name: String,
}

/// A 2-cell: a morphism `name` of `hom(src0, tgt0)` from the 1-cell
/// `src1` to the 1-cell `tgt1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell2 {
    pub src0: String,
    pub tgt0: String,
    pub src1: String,
    pub tgt1: String,
    pub name: String,
}

impl Cell1 {
    pub fn new(src0: impl Into<String>, tgt0: impl Into<String>, name: impl Into<String>) -> Cell1 {
        Cell1 {
            src0: src0.into(),
            tgt0: tgt0.into(),
            name: name.into(),
        }
    }
}

impl Cell2 {
    pub fn describe(&self) -> String {
        format!(
            "{}: {} => {} ({} -> {})",
            self.name, self.src1, self.tgt1, self.src0, self.tgt0
        )
    }
}
