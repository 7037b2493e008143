//! A finite computational engine for iterated icon constructions.
//!
//! The crate validates and manipulates finite categories, strict
//! 2-categories, and categories weakly enriched in a permutative
//! (strict symmetric monoidal) 2-category base.  From those ingredients
//! it materializes the icon 2-category on a finite seed of enriched
//! categories, equips it with its symmetric monoidal structure, iterates
//! the construction, and extracts monoidal / 2-tuply monoidal / braided
//! monoidal categories from degenerate objects — verifying every axiom
//! by exhaustive evaluation on the finite data.
//!
//! Module layout:
//!
//! * [`fincat`] — finite categories, functors, natural transformations,
//!   and exhaustive enumeration of both.
//! * [`base2`] — strict 2-categories, permutative bases, the weak
//!   monoidal-bicategory data model, pasting-expression evaluation, and
//!   checkers for the monoidal / braiding / syllepsis / symmetry axioms.
//! * [`enriched`] — weakly enriched categories, weak functors and icons
//!   over a base, with exhaustive axiom checkers.
//! * [`iconcat`] — materialization of the icon 2-category by exhaustive
//!   enumeration, and iteration of the base construction.
//! * [`montensor`] — the symmetric monoidal structure on the icon level:
//!   tensor, unit, braiding, and the closure verification.
//! * [`degeneracy`] — degenerate-object detection and extraction of
//!   monoidal, 2-tuply monoidal, and braided monoidal categories,
//!   including the Eckmann–Hilton braiding derivation.
//! * [`dsl`] / [`cli`] — the JSON presentation format and the `icondeck`
//!   command-line driver.

pub mod base2;
pub mod caps;
pub mod cli;
pub mod degeneracy;
pub mod dsl;
pub mod enriched;
pub mod error;
pub mod fincat;
pub mod iconcat;
pub mod montensor;
pub mod report;

pub use caps::Caps;
pub use error::{Error, Result};
