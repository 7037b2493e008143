//! Pasting expressions and their evaluation in a strict 2-category.

use serde::{Deserialize, Serialize};

use crate::base2::{Cell1, Cell2, TwoCategory};
use crate::error::Result;

/// A formal pasting of 2-cells: atoms, identity 2-cells of 1-cells,
/// vertical and horizontal composites, and whiskerings by 1-cells.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PasteExpr {
    /// A named 2-cell with explicit boundaries.
    Atom(Cell2),
    /// The identity 2-cell of a 1-cell.
    Id(Cell1),
    /// Vertical composite: second argument first, then first argument.
    VComp(Box<PasteExpr>, Box<PasteExpr>),
    /// Horizontal composite: second argument is the earlier (inner)
    /// cell, first the later (outer) one.
    HComp(Box<PasteExpr>, Box<PasteExpr>),
    /// Post-whiskering by a 1-cell (the 1-cell is applied after).
    WhiskerL(Cell1, Box<PasteExpr>),
    /// Pre-whiskering by a 1-cell (the 1-cell is applied before).
    WhiskerR(Box<PasteExpr>, Cell1),
}

impl PasteExpr {
    pub fn atom(cell: Cell2) -> PasteExpr {
        PasteExpr::Atom(cell)
    }
    pub fn id(cell: Cell1) -> PasteExpr {
        PasteExpr::Id(cell)
    }
    pub fn vcomp(later: PasteExpr, earlier: PasteExpr) -> PasteExpr {
        PasteExpr::VComp(Box::new(later), Box::new(earlier))
    }
    pub fn hcomp(later: PasteExpr, earlier: PasteExpr) -> PasteExpr {
        PasteExpr::HComp(Box::new(later), Box::new(earlier))
    }

    /// Number of atoms in the expression.
    pub fn atom_count(&self) -> usize {
        match self {
            PasteExpr::Atom(_) => 1,
            PasteExpr::Id(_) => 0,
            PasteExpr::VComp(a, b) | PasteExpr::HComp(a, b) => a.atom_count() + b.atom_count(),
            PasteExpr::WhiskerL(_, e) | PasteExpr::WhiskerR(e, _) => e.atom_count(),
        }
    }
}

/// The operations a strict 2-categorical substrate must provide for
/// pasting evaluation.
pub trait PasteHost {
    fn id2(&self, f: &Cell1) -> Result<Cell2>;
    fn vcomp2(&self, beta: &Cell2, alpha: &Cell2) -> Result<Cell2>;
    fn hcomp2(&self, beta: &Cell2, alpha: &Cell2) -> Result<Cell2>;
}

impl PasteHost for TwoCategory {
    fn id2(&self, f: &Cell1) -> Result<Cell2> {
        TwoCategory::id2(self, f)
    }
    fn vcomp2(&self, beta: &Cell2, alpha: &Cell2) -> Result<Cell2> {
        TwoCategory::vcomp2(self, beta, alpha)
    }
    fn hcomp2(&self, beta: &Cell2, alpha: &Cell2) -> Result<Cell2> {
        TwoCategory::hcomp2(self, beta, alpha)
    }
}

/// Evaluate a pasting expression to the single 2-cell it denotes,
/// checking all boundary conditions along the way.  In a strict
/// 2-category the result is independent of the order the composites
/// are carried out (middle-four interchange).
pub fn paste_eval<H: PasteHost>(host: &H, expr: &PasteExpr) -> Result<Cell2> {
    match expr {
        PasteExpr::Atom(cell) => Ok(cell.clone()),
        PasteExpr::Id(f) => host.id2(f),
        PasteExpr::VComp(later, earlier) => {
            let a = paste_eval(host, earlier)?;
            let b = paste_eval(host, later)?;
            host.vcomp2(&b, &a)
        }
        PasteExpr::HComp(later, earlier) => {
            let a = paste_eval(host, earlier)?;
            let b = paste_eval(host, later)?;
            host.hcomp2(&b, &a)
        }
        PasteExpr::WhiskerL(f, e) => {
            let a = paste_eval(host, e)?;
            host.hcomp2(&host.id2(f)?, &a)
        }
        PasteExpr::WhiskerR(e, f) => {
            let a = paste_eval(host, e)?;
            host.hcomp2(&a, &host.id2(f)?)
        }
    }
}
