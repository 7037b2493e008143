//! Weak monoidal-bicategory constraint data over a permutative base,
//! and exhaustive checkers for its coherence axioms.
//!
//! [`WeakMonBicatData`] stores the constraint cells explicitly: the
//! associator and unitor adjoint-equivalence families with their
//! invertible modifications, and optionally a braiding (with its two
//! hexagon modifications) and a syllepsis.  The checkers work over a
//! *strict* substrate: associators and unitors must be identity
//! 1-cells, the braiding must be the strict symmetry of the base, and
//! the equivalence units/counits must be identity 2-cells.  Data that
//! is weak at those spots is rejected with
//! [`Error::Unsupported`](crate::error::Error).  Constraint maps use
//! identity defaults: a missing entry means the identity cell.
//!
//! Each coherence axiom instance is evaluated by rewriting a path of
//! 1-cells through the two pasting diagrams of the axiom and comparing
//! the accumulated composite 2-cells, so a report failure pinpoints
//! the exact object tuple and the two cells that disagree.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::base2::{table_base, Cell1, Cell2, PermBase, TableBase, TwoCategory};
use crate::error::{Error, Result};
use crate::fincat::{cyclic_group, product_category, render_tuple, FinCategory, Functor};
use crate::report::Report;

/// Constraint cells keyed by object tuples; a missing key denotes the
/// identity cell.
pub type ConstraintMap = BTreeMap<Vec<String>, String>;

/// An adjoint-equivalence family: forward and reverse 1-cells with the
/// unit and counit 2-cells of the equivalence, all keyed by object
/// tuples.  Missing entries default to identities.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjEquivData {
    pub fwd: ConstraintMap,
    pub rev: ConstraintMap,
    pub eta: ConstraintMap,
    pub eps: ConstraintMap,
}

/// Braiding data: the braiding adjoint equivalence keyed by object
/// pairs, and the two hexagon modifications keyed by object triples.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraidingData {
    pub cell: AdjEquivData,
    pub hex_l: ConstraintMap,
    pub hex_r: ConstraintMap,
}

/// Explicit constraint data for a weak monoidal bicategory (optionally
/// braided, sylleptic) over a permutative base.
///
/// `objects` is the finite set the axiom checkers quantify over; the
/// base may have more 0-cells.  `assoc` is keyed by triples, `lunit`
/// and `runit` by single objects, `pi` by 4-tuples, and `mu`, `lambda`,
/// `rho` by pairs.  The syllepsis map is keyed by pairs.
#[derive(Debug, Clone)]
pub struct WeakMonBicatData {
    pub base: PermBase,
    pub objects: Vec<String>,
    pub assoc: AdjEquivData,
    pub lunit: AdjEquivData,
    pub runit: AdjEquivData,
    pub pi: ConstraintMap,
    pub mu: ConstraintMap,
    pub lambda: ConstraintMap,
    pub rho: ConstraintMap,
    pub braiding: Option<BraidingData>,
    pub syllepsis: Option<ConstraintMap>,
}

impl WeakMonBicatData {
    /// Fully strict data: every constraint cell is an identity (all
    /// maps empty), with braiding and syllepsis present.
    pub fn identity(base: PermBase, objects: Vec<String>) -> WeakMonBicatData {
        WeakMonBicatData {
            base,
            objects,
            assoc: AdjEquivData::default(),
            lunit: AdjEquivData::default(),
            runit: AdjEquivData::default(),
            pi: ConstraintMap::new(),
            mu: ConstraintMap::new(),
            lambda: ConstraintMap::new(),
            rho: ConstraintMap::new(),
            braiding: Some(BraidingData::default()),
            syllepsis: Some(ConstraintMap::new()),
        }
    }
}

pub(crate) fn key_of(parts: &[&str]) -> Vec<String> {
    parts.iter().map(|s| s.to_string()).collect()
}

// ---------------------------------------------------------------------------
// Edges, faces, and the path rewriter

/// A labelled 1-cell in a pasting-diagram path.  The label is the
/// formal constructor expression (`a(x,y,z)`, `R(x,y)`, `w1(x,…)`, …)
/// so segment matching stays unambiguous even when many edges are the
/// same identity cell of the strict substrate.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Edge {
    label: String,
    cell: Cell1,
}

/// One 2-cell region of a pasting diagram: it rewrites the edge
/// segment `src` into `tgt`, acting by `cell` on the composites.
struct Face {
    cell: Cell2,
    src: Vec<Edge>,
    tgt: Vec<Edge>,
}

/// Evaluation context: the data plus edge/face builders.
struct Cx<'a> {
    d: &'a WeakMonBicatData,
}

impl<'a> Cx<'a> {
    fn base(&self) -> &PermBase {
        &self.d.base
    }

    fn t(&self, x: &str, y: &str) -> Result<String> {
        self.base().tensor0(x, y)
    }

    fn braid(&self) -> Result<&'a BraidingData> {
        self.d
            .braiding
            .as_ref()
            .ok_or_else(|| Error::invalid("the data carries no braiding"))
    }

    fn syl(&self) -> Result<&'a ConstraintMap> {
        self.d
            .syllepsis
            .as_ref()
            .ok_or_else(|| Error::invalid("the data carries no syllepsis"))
    }

    // -- edge builders (strict substrate: all associator/unitor edges
    //    are identity 1-cells of the flattened word) --

    fn a(&self, x: &str, y: &str, z: &str) -> Result<Edge> {
        let w = self.t(&self.t(x, y)?, z)?;
        Ok(Edge {
            label: format!("a({x},{y},{z})"),
            cell: self.base().id1(&w)?,
        })
    }

    fn ai(&self, x: &str, y: &str, z: &str) -> Result<Edge> {
        let w = self.t(&self.t(x, y)?, z)?;
        Ok(Edge {
            label: format!("ai({x},{y},{z})"),
            cell: self.base().id1(&w)?,
        })
    }

    fn l(&self, x: &str) -> Result<Edge> {
        let w = self.t(&self.base().unit0(), x)?;
        Ok(Edge {
            label: format!("l({x})"),
            cell: self.base().id1(&w)?,
        })
    }

    fn ri(&self, x: &str) -> Result<Edge> {
        let w = self.t(x, &self.base().unit0())?;
        Ok(Edge {
            label: format!("ri({x})"),
            cell: self.base().id1(&w)?,
        })
    }

    /// The braiding edge `R(x,y): x⊗y → y⊗x` (the strict symmetry).
    fn rr(&self, x: &str, y: &str) -> Result<Edge> {
        Ok(Edge {
            label: format!("R({x},{y})"),
            cell: self.base().symmetry1(x, y)?,
        })
    }

    /// The reverse-equivalence braiding edge; under the strict
    /// involution it carries the same cell as `R(x,y)` but keeps a
    /// distinct label so faces can convert it explicitly.
    fn rd(&self, x: &str, y: &str) -> Result<Edge> {
        Ok(Edge {
            label: format!("Rd({x},{y})"),
            cell: self.base().symmetry1(x, y)?,
        })
    }

    fn w1(&self, x: &str, e: &Edge) -> Result<Edge> {
        Ok(Edge {
            label: format!("w1({x},{})", e.label),
            cell: self.base().tensor1(&self.base().id1(x)?, &e.cell)?,
        })
    }

    fn w2(&self, e: &Edge, x: &str) -> Result<Edge> {
        Ok(Edge {
            label: format!("w2({},{x})", e.label),
            cell: self.base().tensor1(&e.cell, &self.base().id1(x)?)?,
        })
    }

    /// Composite of a non-empty edge path, first edge applied first.
    fn compose_path(&self, edges: &[Edge]) -> Result<Cell1> {
        let mut it = edges.iter();
        let first = it
            .next()
            .ok_or_else(|| Error::invalid("cannot compose an empty edge path"))?;
        let mut acc = first.cell.clone();
        for e in it {
            acc = self.base().compose1(&e.cell, &acc)?;
        }
        Ok(acc)
    }

    /// Look up a constraint 2-cell from `src1` to `tgt1` (parallel
    /// 1-cells) in a constraint map, with identity default and
    /// boundary verification.
    fn map_cell(&self, map: &ConstraintMap, key: &[&str], src1: &Cell1, tgt1: &Cell1) -> Result<Cell2> {
        if src1.src0 != tgt1.src0 || src1.tgt0 != tgt1.tgt0 {
            return Err(Error::boundary(format!(
                "constraint cell at {key:?}: 1-cells `{}` and `{}` are not parallel",
                src1.name, tgt1.name
            )));
        }
        match map.get(&key_of(key)) {
            Some(name) => {
                let h = self.base().hom(&src1.src0, &src1.tgt0)?;
                if h.src(name)? != src1.name || h.tgt(name)? != tgt1.name {
                    return Err(Error::invalid(format!(
                        "constraint cell `{name}` at {key:?} is {} => {}, expected {} => {}",
                        h.src(name)?,
                        h.tgt(name)?,
                        src1.name,
                        tgt1.name
                    )));
                }
                Ok(Cell2 {
                    src0: src1.src0.clone(),
                    tgt0: src1.tgt0.clone(),
                    src1: src1.name.clone(),
                    tgt1: tgt1.name.clone(),
                    name: name.clone(),
                })
            }
            None => {
                if src1.name != tgt1.name {
                    return Err(Error::invalid(format!(
                        "no constraint entry at {key:?} between distinct 1-cells `{}` and `{}`",
                        src1.name, tgt1.name
                    )));
                }
                self.base().id2(src1)
            }
        }
    }

    /// Build a face whose 2-cell comes from a constraint map, checking
    /// that the stored cell's boundary matches the path composites.
    /// With `invert` the stored cell runs from the `tgt` composite to
    /// the `src` composite and is inverted.  An empty `tgt` denotes
    /// the identity 1-cell (the region must be an endo-path).
    fn face(&self, map: &ConstraintMap, key: &[&str], invert: bool, src: Vec<Edge>, tgt: Vec<Edge>) -> Result<Face> {
        let s1 = self.compose_path(&src)?;
        let t1 = self.tgt_composite(&s1, &tgt)?;
        let cell = if invert {
            let c = self.map_cell(map, key, &t1, &s1)?;
            self.base().inverse2(&c)?
        } else {
            self.map_cell(map, key, &s1, &t1)?
        };
        Ok(Face { cell, src, tgt })
    }

    /// Build a face from an explicitly constructed 2-cell, verifying
    /// its boundary against the path composites.
    fn raw_face(&self, cell: Cell2, src: Vec<Edge>, tgt: Vec<Edge>) -> Result<Face> {
        let s1 = self.compose_path(&src)?;
        let t1 = self.tgt_composite(&s1, &tgt)?;
        if cell.src0 != s1.src0 || cell.tgt0 != s1.tgt0 || cell.src1 != s1.name || cell.tgt1 != t1.name {
            return Err(Error::boundary(format!(
                "face cell {} does not match path composites {} => {}",
                cell.describe(),
                s1.name,
                t1.name
            )));
        }
        Ok(Face { cell, src, tgt })
    }

    fn tgt_composite(&self, s1: &Cell1, tgt: &[Edge]) -> Result<Cell1> {
        if tgt.is_empty() {
            if s1.src0 != s1.tgt0 {
                return Err(Error::boundary(format!(
                    "empty face target for a non-endo region {} -> {}",
                    s1.src0, s1.tgt0
                )));
            }
            self.base().id1(&s1.src0)
        } else {
            let t1 = self.compose_path(tgt)?;
            if s1.src0 != t1.src0 || s1.tgt0 != t1.tgt0 {
                return Err(Error::boundary(
                    "face source and target paths have different 0-cell boundaries".to_string(),
                ));
            }
            Ok(t1)
        }
    }

    /// Whisker a face on the left by an object: `1_x ⊗ face`.
    fn face_w1(&self, x: &str, f: &Face) -> Result<Face> {
        let idx = self.base().id2(&self.base().id1(x)?)?;
        let cell = self.base().tensor2(&idx, &f.cell)?;
        let src = f.src.iter().map(|e| self.w1(x, e)).collect::<Result<Vec<_>>>()?;
        let tgt = f.tgt.iter().map(|e| self.w1(x, e)).collect::<Result<Vec<_>>>()?;
        Ok(Face { cell, src, tgt })
    }

    /// Whisker a face on the right by an object: `face ⊗ 1_x`.
    fn face_w2(&self, f: &Face, x: &str) -> Result<Face> {
        let idx = self.base().id2(&self.base().id1(x)?)?;
        let cell = self.base().tensor2(&f.cell, &idx)?;
        let src = f.src.iter().map(|e| self.w2(e, x)).collect::<Result<Vec<_>>>()?;
        let tgt = f.tgt.iter().map(|e| self.w2(e, x)).collect::<Result<Vec<_>>>()?;
        Ok(Face { cell, src, tgt })
    }

    // -- canonical faces of the constraint modifications --

    /// π(w,x,y,z): a(wx,y,z)·a(w,x,yz) ⇒ (a(w,x,y)⊗z)·a(w,xy,z)·(w⊗a(x,y,z)).
    fn f_pi(&self, w: &str, x: &str, y: &str, z: &str) -> Result<Face> {
        let wx = self.t(w, x)?;
        let xy = self.t(x, y)?;
        let yz = self.t(y, z)?;
        self.face(
            &self.d.pi,
            &[w, x, y, z],
            false,
            vec![self.a(&wx, y, z)?, self.a(w, x, &yz)?],
            vec![
                self.w2(&self.a(w, x, y)?, z)?,
                self.a(w, &xy, z)?,
                self.w1(w, &self.a(x, y, z)?)?,
            ],
        )
    }

    /// μ(x,y): (ri(x)⊗y)·a(x,I,y)·(x⊗l(y)) ⇒ identity.
    fn f_mu(&self, x: &str, y: &str) -> Result<Face> {
        let u = self.base().unit0();
        self.face(
            &self.d.mu,
            &[x, y],
            false,
            vec![
                self.w2(&self.ri(x)?, y)?,
                self.a(x, &u, y)?,
                self.w1(x, &self.l(y)?)?,
            ],
            vec![],
        )
    }

    /// λ(x,y): l(x)⊗y ⇒ a(I,x,y)·l(xy).
    fn f_lambda(&self, x: &str, y: &str) -> Result<Face> {
        let u = self.base().unit0();
        let xy = self.t(x, y)?;
        self.face(
            &self.d.lambda,
            &[x, y],
            false,
            vec![self.w2(&self.l(x)?, y)?],
            vec![self.a(&u, x, y)?, self.l(&xy)?],
        )
    }

    /// ρ(x,y): x⊗ri(y) ⇒ ri(xy)·a(x,y,I).
    fn f_rho(&self, x: &str, y: &str) -> Result<Face> {
        let u = self.base().unit0();
        let xy = self.t(x, y)?;
        self.face(
            &self.d.rho,
            &[x, y],
            false,
            vec![self.w1(x, &self.ri(y)?)?],
            vec![self.ri(&xy)?, self.a(x, y, &u)?],
        )
    }

    /// Left hexagon modification at (x,y,z):
    /// (R(x,y)⊗z)·a(y,x,z)·(y⊗R(x,z)) ⇒ a(x,y,z)·R(x,yz)·a(y,z,x).
    fn f_hexl(&self, x: &str, y: &str, z: &str) -> Result<Face> {
        let yz = self.t(y, z)?;
        self.face(
            &self.braid()?.hex_l,
            &[x, y, z],
            false,
            vec![
                self.w2(&self.rr(x, y)?, z)?,
                self.a(y, x, z)?,
                self.w1(y, &self.rr(x, z)?)?,
            ],
            vec![self.a(x, y, z)?, self.rr(x, &yz)?, self.a(y, z, x)?],
        )
    }

    /// Right hexagon modification at (x,y,z):
    /// (x⊗R(y,z))·ai(x,z,y)·(R(x,z)⊗y) ⇒ ai(x,y,z)·R(xy,z)·ai(z,x,y).
    fn f_hexr(&self, x: &str, y: &str, z: &str) -> Result<Face> {
        let xy = self.t(x, y)?;
        self.face(
            &self.braid()?.hex_r,
            &[x, y, z],
            false,
            vec![
                self.w1(x, &self.rr(y, z)?)?,
                self.ai(x, z, y)?,
                self.w2(&self.rr(x, z)?, y)?,
            ],
            vec![self.ai(x, y, z)?, self.rr(&xy, z)?, self.ai(z, x, y)?],
        )
    }

    /// The stored left hexagon 2-cell at (x,y,z), an endomorphism of
    /// `R(x, yz)` under the strict substrate.
    fn hexl_cell(&self, x: &str, y: &str, z: &str) -> Result<Cell2> {
        let yz = self.t(y, z)?;
        let r = self.base().symmetry1(x, &yz)?;
        self.map_cell(&self.braid()?.hex_l, &[x, y, z], &r, &r)
    }

    /// The stored right hexagon 2-cell at (x,y,z), an endomorphism of
    /// `R(xy, z)` under the strict substrate.
    fn hexr_cell(&self, x: &str, y: &str, z: &str) -> Result<Cell2> {
        let xy = self.t(x, y)?;
        let r = self.base().symmetry1(&xy, z)?;
        self.map_cell(&self.braid()?.hex_r, &[x, y, z], &r, &r)
    }

    /// The syllepsis 2-cell at (x,y), an endomorphism of `1_{xy}`.
    fn v_cell(&self, x: &str, y: &str) -> Result<Cell2> {
        let idw = self.base().id1(&self.t(x, y)?)?;
        self.map_cell(self.syl()?, &[x, y], &idw, &idw)
    }

    /// The mate of the syllepsis against the reverse braiding edge: an
    /// endomorphism of `R(x,y)` converting `Rd(x,y)` to `R(x,y)`.
    fn v_hat(&self, x: &str, y: &str) -> Result<Cell2> {
        let r = self.base().id2(&self.base().symmetry1(x, y)?)?;
        let v = self.base().inverse2(&self.v_cell(x, y)?)?;
        self.base().hcomp2(&r, &v)
    }

    /// The mate of the inverse right hexagon at (b,c,a), conjugated to
    /// an endomorphism of `R(a, bc)` (used by the first syllepsis
    /// axiom).
    fn r_hat1(&self, a: &str, b: &str, c: &str) -> Result<Cell2> {
        let bc = self.t(b, c)?;
        let r = self.base().id2(&self.base().symmetry1(a, &bc)?)?;
        let inv = self.base().inverse2(&self.hexr_cell(b, c, a)?)?;
        let inner = self.base().hcomp2(&r, &inv)?;
        self.base().hcomp2(&inner, &r)
    }

    /// The mate of the inverse left hexagon at (c,a,b), conjugated to
    /// an endomorphism of `R(ab, c)` (used by the second syllepsis
    /// axiom).
    fn r_hat2(&self, a: &str, b: &str, c: &str) -> Result<Cell2> {
        let ab = self.t(a, b)?;
        let r = self.base().id2(&self.base().symmetry1(&ab, c)?)?;
        let inv = self.base().inverse2(&self.hexl_cell(c, a, b)?)?;
        let inner = self.base().hcomp2(&r, &inv)?;
        self.base().hcomp2(&inner, &r)
    }
}

/// Rewrites an edge path by applying faces and strict-substrate
/// exchange steps, accumulating the pasted 2-cell.
struct Rewriter<'a, 'b> {
    cx: &'a Cx<'b>,
    path: Vec<Edge>,
    acc: Cell2,
}

impl<'a, 'b> Rewriter<'a, 'b> {
    fn start(cx: &'a Cx<'b>, path: Vec<Edge>) -> Result<Rewriter<'a, 'b>> {
        let comp = cx.compose_path(&path)?;
        let acc = cx.base().id2(&comp)?;
        Ok(Rewriter { cx, path, acc })
    }

    /// Verify that the path carries exactly `seg` at position `i`.
    /// Steps address positions explicitly because degenerate object
    /// tuples can collapse distinct diagram edges onto equal labels,
    /// making search ambiguous.
    fn seg_at(&self, i: usize, seg: &[Edge]) -> Result<()> {
        if !seg.is_empty() && i + seg.len() <= self.path.len() && self.path[i..i + seg.len()] == *seg
        {
            return Ok(());
        }
        let want: Vec<&str> = seg.iter().map(|e| e.label.as_str()).collect();
        let have: Vec<&str> = self.path.iter().map(|e| e.label.as_str()).collect();
        Err(Error::invalid(format!(
            "segment {want:?} not at position {i} of path {have:?}"
        )))
    }

    /// Whisker a face cell by the identities of the path outside the
    /// matched segment `i..j`.
    fn sandwich(&self, cell: &Cell2, i: usize, j: usize) -> Result<Cell2> {
        let base = self.cx.base();
        let mut step = cell.clone();
        if i > 0 {
            let pre = self.cx.compose_path(&self.path[..i])?;
            step = base.hcomp2(&step, &base.id2(&pre)?)?;
        }
        if j < self.path.len() {
            let post = self.cx.compose_path(&self.path[j..])?;
            step = base.hcomp2(&base.id2(&post)?, &step)?;
        }
        Ok(step)
    }

    /// Apply a face at position `i` of the path: paste its cell onto
    /// the accumulator and splice the target edges into the path.
    fn apply(&mut self, i: usize, face: &Face) -> Result<()> {
        self.seg_at(i, &face.src)?;
        let j = i + face.src.len();
        let step = self.sandwich(&face.cell, i, j)?;
        self.acc = self.cx.base().vcomp2(&step, &self.acc)?;
        self.path.splice(i..j, face.tgt.iter().cloned());
        Ok(())
    }

    /// Exchange the segment at position `i` for another spelling of
    /// the *same* composite 1-cell (a strict-substrate equality:
    /// interchange, naturality with identities, unit/associativity
    /// flattening).  The accumulator is unchanged.  An empty `tgt`
    /// removes a segment whose composite is an identity 1-cell.
    fn iso(&mut self, i: usize, src: Vec<Edge>, tgt: Vec<Edge>) -> Result<()> {
        self.seg_at(i, &src)?;
        let j = i + src.len();
        let s1 = self.cx.compose_path(&src)?;
        let t1 = self.cx.tgt_composite(&s1, &tgt)?;
        if s1 != t1 {
            return Err(Error::invalid(format!(
                "exchange step is not an equality: `{}` vs `{}`",
                s1.name, t1.name
            )));
        }
        self.path.splice(i..j, tgt.into_iter());
        Ok(())
    }

    fn labels(&self) -> Vec<String> {
        self.path.iter().map(|e| e.label.clone()).collect()
    }
}

/// Compare the two sides of an axiom after rewriting: both rewrites
/// must end on the same path, and the instance passes when the
/// accumulated 2-cells agree.
fn finish(lhs: &Rewriter, rhs: &Rewriter) -> Result<Option<String>> {
    if lhs.path != rhs.path {
        return Err(Error::invalid(format!(
            "axiom sides ended on different paths: {:?} vs {:?}",
            lhs.labels(),
            rhs.labels()
        )));
    }
    if lhs.acc == rhs.acc {
        Ok(None)
    } else {
        Ok(Some(format!(
            "lhs {} != rhs {}",
            lhs.acc.describe(),
            rhs.acc.describe()
        )))
    }
}

// ---------------------------------------------------------------------------
// Strict-substrate preconditions

/// Require every present 1-cell entry of an adjoint-equivalence family
/// to be the identity 1-cell of its (flattened) boundary word, and
/// every unit/counit entry to be the identity 2-cell.
fn require_identity_equiv(d: &WeakMonBicatData, what: &str, ae: &AdjEquivData) -> Result<()> {
    let word = |key: &[String]| -> Result<String> {
        let mut it = key.iter();
        let mut w = it
            .next()
            .ok_or_else(|| Error::invalid(format!("{what}: empty key")))?
            .clone();
        for part in it {
            w = d.base.tensor0(&w, part)?;
        }
        Ok(w)
    };
    for (map, part) in [(&ae.fwd, "fwd"), (&ae.rev, "rev")] {
        for (key, name) in map {
            let id = d.base.id1(&word(key)?)?;
            if *name != id.name {
                return Err(Error::unsupported(format!(
                    "{what}.{part} at {key:?} is `{name}`, not the identity `{}`; \
                     the checkers require a strict substrate",
                    id.name
                )));
            }
        }
    }
    for (map, part) in [(&ae.eta, "eta"), (&ae.eps, "eps")] {
        for (key, name) in map {
            let id2 = d.base.id2(&d.base.id1(&word(key)?)?)?;
            if *name != id2.name {
                return Err(Error::unsupported(format!(
                    "{what}.{part} at {key:?} is `{name}`, not the identity 2-cell `{}`",
                    id2.name
                )));
            }
        }
    }
    Ok(())
}

/// Require the monoidal constraints to sit on the strict substrate.
fn require_strict_monoidal(d: &WeakMonBicatData) -> Result<()> {
    require_identity_equiv(d, "assoc", &d.assoc)?;
    require_identity_equiv(d, "lunit", &d.lunit)?;
    require_identity_equiv(d, "runit", &d.runit)?;
    Ok(())
}

/// Require the braiding equivalence to be the strict symmetry of the
/// base with identity unit/counit.
fn require_strict_braiding(d: &WeakMonBicatData, b: &BraidingData) -> Result<()> {
    for (key, name) in &b.cell.fwd {
        if key.len() != 2 {
            return Err(Error::invalid(format!("braiding key {key:?} is not a pair")));
        }
        let r = d.base.symmetry1(&key[0], &key[1])?;
        if *name != r.name {
            return Err(Error::unsupported(format!(
                "braiding.fwd at {key:?} is `{name}`, not the base symmetry `{}`",
                r.name
            )));
        }
    }
    for (key, name) in &b.cell.rev {
        if key.len() != 2 {
            return Err(Error::invalid(format!("braiding key {key:?} is not a pair")));
        }
        let r = d.base.symmetry1(&key[1], &key[0])?;
        if *name != r.name {
            return Err(Error::unsupported(format!(
                "braiding.rev at {key:?} is `{name}`, not the reverse symmetry `{}`",
                r.name
            )));
        }
    }
    for (map, part) in [(&b.cell.eta, "eta"), (&b.cell.eps, "eps")] {
        for (key, name) in map {
            if key.len() != 2 {
                return Err(Error::invalid(format!("braiding key {key:?} is not a pair")));
            }
            let (x, y) = if part == "eta" {
                (&key[0], &key[1])
            } else {
                (&key[1], &key[0])
            };
            let id2 = d.base.id2(&d.base.id1(&d.base.tensor0(x, y)?)?)?;
            if *name != id2.name {
                return Err(Error::unsupported(format!(
                    "braiding.{part} at {key:?} is `{name}`, not the identity 2-cell"
                )));
            }
        }
    }
    Ok(())
}

/// Require the base symmetry to be strictly involutive over the
/// quantified objects (needed to form the syllepsis mates).
fn require_involution(d: &WeakMonBicatData) -> Result<()> {
    for x in &d.objects {
        for y in &d.objects {
            let r = d.base.symmetry1(x, y)?;
            let r_back = d.base.symmetry1(y, x)?;
            if d.base.compose1(&r_back, &r)? != d.base.id1(&d.base.tensor0(x, y)?)? {
                return Err(Error::unsupported(format!(
                    "base symmetry is not strictly involutive at ({x}, {y})"
                )));
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Monoidal axiom instances

/// Associativity coherence at (a,b,c,d,e): the two pastings of π-cells
/// between a(abc,d,e)·a(ab,c,de)·a(a,b,cde) and the fully
/// right-associated boundary agree.
fn ma1(cx: &Cx, a: &str, b: &str, c: &str, d: &str, e: &str) -> Result<Option<String>> {
    let ab = cx.t(a, b)?;
    let bc = cx.t(b, c)?;
    let cd = cx.t(c, d)?;
    let de = cx.t(d, e)?;
    let abc = cx.t(&ab, c)?;
    let bcd = cx.t(&bc, d)?;
    let cde = cx.t(&cd, e)?;

    let s = vec![cx.a(&abc, d, e)?, cx.a(&ab, c, &de)?, cx.a(a, b, &cde)?];

    let mut lhs = Rewriter::start(cx, s.clone())?;
    lhs.apply(1, &cx.f_pi(a, b, c, &de)?)?;
    lhs.iso(0, 
        vec![cx.a(&abc, d, e)?, cx.w2(&cx.a(a, b, c)?, &de)?],
        vec![cx.w2(&cx.w2(&cx.a(a, b, c)?, d)?, e)?, cx.a(&abc, d, e)?],
    )?;
    lhs.apply(1, &cx.f_pi(a, &bc, d, e)?)?;
    lhs.apply(3, &cx.face_w1(a, &cx.f_pi(b, c, d, e)?)?)?;
    lhs.iso(2, 
        vec![cx.a(a, &bcd, e)?, cx.w1(a, &cx.w2(&cx.a(b, c, d)?, e)?)?],
        vec![cx.w2(&cx.w1(a, &cx.a(b, c, d)?)?, e)?, cx.a(a, &bcd, e)?],
    )?;

    let mut rhs = Rewriter::start(cx, s)?;
    rhs.apply(0, &cx.f_pi(&ab, c, d, e)?)?;
    rhs.iso(2, 
        vec![cx.w1(&ab, &cx.a(c, d, e)?)?, cx.a(a, b, &cde)?],
        vec![cx.a(a, b, &cde)?, cx.w1(a, &cx.w1(b, &cx.a(c, d, e)?)?)?],
    )?;
    rhs.apply(1, &cx.f_pi(a, b, &cd, e)?)?;
    rhs.apply(0, &cx.face_w2(&cx.f_pi(a, b, c, d)?, e)?)?;

    finish(&lhs, &rhs)
}

/// Left unit coherence at (a,b): μ(a,b)⊗c against the pasting through
/// λ and the inverse π.
fn ma2(cx: &Cx, a: &str, b: &str, c: &str) -> Result<Option<String>> {
    let u = cx.base().unit0();
    let bc = cx.t(b, c)?;

    let s = vec![
        cx.w2(&cx.w2(&cx.ri(a)?, b)?, c)?,
        cx.w2(&cx.a(a, &u, b)?, c)?,
        cx.w2(&cx.w1(a, &cx.l(b)?)?, c)?,
        cx.a(a, b, c)?,
    ];

    let mut lhs = Rewriter::start(cx, s.clone())?;
    lhs.iso(2, 
        vec![cx.w2(&cx.w1(a, &cx.l(b)?)?, c)?, cx.a(a, b, c)?],
        vec![cx.a(a, b, c)?, cx.w1(a, &cx.w2(&cx.l(b)?, c)?)?],
    )?;
    lhs.apply(3, &cx.face_w1(a, &cx.f_lambda(b, c)?)?)?;
    lhs.apply(1, &cx.face(
        &cx.d.pi,
        &[a, &u, b, c],
        true,
        vec![
            cx.w2(&cx.a(a, &u, b)?, c)?,
            cx.a(a, b, c)?,
            cx.w1(a, &cx.a(&u, b, c)?)?,
        ],
        vec![cx.a(a, b, c)?, cx.a(a, &u, &bc)?],
    )?)?;
    lhs.iso(0, 
        vec![cx.w2(&cx.w2(&cx.ri(a)?, b)?, c)?, cx.a(a, b, c)?],
        vec![cx.a(a, b, c)?, cx.w2(&cx.ri(a)?, &bc)?],
    )?;
    lhs.apply(1, &cx.f_mu(a, &bc)?)?;

    let mut rhs = Rewriter::start(cx, s)?;
    rhs.apply(0, &cx.face_w2(&cx.f_mu(a, b)?, c)?)?;

    finish(&lhs, &rhs)
}

/// Right unit coherence at (a,b,c): a⊗μ(b,c) against the pasting
/// through ρ and the inverse π.
fn ma3(cx: &Cx, a: &str, b: &str, c: &str) -> Result<Option<String>> {
    let u = cx.base().unit0();
    let ab = cx.t(a, b)?;

    let s = vec![
        cx.a(a, b, c)?,
        cx.w1(a, &cx.w2(&cx.ri(b)?, c)?)?,
        cx.w1(a, &cx.a(b, &u, c)?)?,
        cx.w1(a, &cx.w1(b, &cx.l(c)?)?)?,
    ];

    let mut lhs = Rewriter::start(cx, s.clone())?;
    lhs.iso(0, 
        vec![cx.a(a, b, c)?, cx.w1(a, &cx.w2(&cx.ri(b)?, c)?)?],
        vec![cx.w2(&cx.w1(a, &cx.ri(b)?)?, c)?, cx.a(a, b, c)?],
    )?;
    lhs.apply(0, &cx.face_w2(&cx.f_rho(a, b)?, c)?)?;
    lhs.apply(1, &cx.face(
        &cx.d.pi,
        &[a, b, &u, c],
        true,
        vec![
            cx.w2(&cx.a(a, b, &u)?, c)?,
            cx.a(a, b, c)?,
            cx.w1(a, &cx.a(b, &u, c)?)?,
        ],
        vec![cx.a(&ab, &u, c)?, cx.a(a, b, c)?],
    )?)?;
    lhs.iso(2, 
        vec![cx.a(a, b, c)?, cx.w1(a, &cx.w1(b, &cx.l(c)?)?)?],
        vec![cx.w1(&ab, &cx.l(c)?)?, cx.a(a, b, c)?],
    )?;
    lhs.apply(0, &cx.f_mu(&ab, c)?)?;

    let mut rhs = Rewriter::start(cx, s)?;
    rhs.apply(1, &cx.face_w1(a, &cx.f_mu(b, c)?)?)?;

    finish(&lhs, &rhs)
}

// ---------------------------------------------------------------------------
// Braiding axiom instances
//
// Each instance rewrites the upper outer path of the axiom's pasting
// diagram down to the lower one along both sides and compares the
// accumulated cells.

/// Braiding coherence (a,b,c,d): the two pastings between
/// a(a,b,cd)·(a⊗(b⊗R(c,d)))·… and ai(ab,c,d)·R(abc,d)·ai(d,ab,c)·(ai(d,a,b)⊗c).
fn ba1(cx: &Cx, a: &str, b: &str, c: &str, d: &str) -> Result<Option<String>> {
    let ab = cx.t(a, b)?;
    let ad = cx.t(a, d)?;
    let bc = cx.t(b, c)?;
    let cd = cx.t(c, d)?;
    let da = cx.t(d, a)?;
    let dc = cx.t(d, c)?;
    let bd = cx.t(b, d)?;
    let db = cx.t(d, b)?;
    let abc = cx.t(&ab, c)?;

    let t = vec![
        cx.a(a, b, &cd)?,
        cx.w1(a, &cx.w1(b, &cx.rr(c, d)?)?)?,
        cx.w1(a, &cx.ai(b, d, c)?)?,
        cx.w1(a, &cx.w2(&cx.rr(b, d)?, c)?)?,
        cx.w1(a, &cx.a(d, b, c)?)?,
        cx.ai(a, d, &bc)?,
        cx.ai(&ad, b, c)?,
        cx.w2(&cx.w2(&cx.rr(a, d)?, b)?, c)?,
    ];

    let mut lhs = Rewriter::start(cx, t.clone())?;
    // Right hexagon at (b,c,d), region form, whiskered by a.
    lhs.apply(1, &cx.face_w1(
        a,
        &cx.face(
            &cx.braid()?.hex_r,
            &[b, c, d],
            false,
            vec![
                cx.w1(b, &cx.rr(c, d)?)?,
                cx.ai(b, d, c)?,
                cx.w2(&cx.rr(b, d)?, c)?,
                cx.a(d, b, c)?,
            ],
            vec![cx.ai(b, c, d)?, cx.rr(&bc, d)?],
        )?,
    )?)?;
    lhs.iso(4, 
        vec![cx.ai(&ad, b, c)?, cx.w2(&cx.w2(&cx.rr(a, d)?, b)?, c)?],
        vec![cx.w2(&cx.rr(a, d)?, &bc)?, cx.ai(&da, b, c)?],
    )?;
    lhs.apply(2, &cx.f_hexr(a, &bc, d)?)?;
    // Inverse π at (d,a,b,c), region form.
    lhs.apply(4, &cx.face(
        &cx.d.pi,
        &[d, a, b, c],
        true,
        vec![cx.ai(d, a, &bc)?, cx.ai(&da, b, c)?],
        vec![
            cx.w1(d, &cx.ai(a, b, c)?)?,
            cx.ai(d, &ab, c)?,
            cx.w2(&cx.ai(d, a, b)?, c)?,
        ],
    )?)?;
    lhs.iso(3, 
        vec![cx.rr(&abc, d)?, cx.w1(d, &cx.ai(a, b, c)?)?],
        vec![cx.w2(&cx.ai(a, b, c)?, d)?, cx.rr(&abc, d)?],
    )?;
    // π at (a,b,c,d), region form.
    lhs.apply(0, &cx.face(
        &cx.d.pi,
        &[a, b, c, d],
        false,
        vec![
            cx.a(a, b, &cd)?,
            cx.w1(a, &cx.ai(b, c, d)?)?,
            cx.ai(a, &bc, d)?,
            cx.w2(&cx.ai(a, b, c)?, d)?,
        ],
        vec![cx.ai(&ab, c, d)?],
    )?)?;

    let mut rhs = Rewriter::start(cx, t)?;
    rhs.iso(0, 
        vec![cx.a(a, b, &cd)?, cx.w1(a, &cx.w1(b, &cx.rr(c, d)?)?)?],
        vec![cx.w1(&ab, &cx.rr(c, d)?)?, cx.a(a, b, &dc)?],
    )?;
    // π at (a,b,d,c), region form.
    rhs.apply(1, &cx.face(
        &cx.d.pi,
        &[a, b, d, c],
        false,
        vec![cx.a(a, b, &dc)?, cx.w1(a, &cx.ai(b, d, c)?)?],
        vec![
            cx.ai(&ab, d, c)?,
            cx.w2(&cx.a(a, b, d)?, c)?,
            cx.a(a, &bd, c)?,
        ],
    )?)?;
    rhs.iso(3, 
        vec![cx.a(a, &bd, c)?, cx.w1(a, &cx.w2(&cx.rr(b, d)?, c)?)?],
        vec![cx.w2(&cx.w1(a, &cx.rr(b, d)?)?, c)?, cx.a(a, &db, c)?],
    )?;
    // Inverse π at (a,d,b,c), region form.
    rhs.apply(4, &cx.face(
        &cx.d.pi,
        &[a, d, b, c],
        true,
        vec![
            cx.a(a, &db, c)?,
            cx.w1(a, &cx.a(d, b, c)?)?,
            cx.ai(a, d, &bc)?,
            cx.ai(&ad, b, c)?,
        ],
        vec![cx.w2(&cx.ai(a, d, b)?, c)?],
    )?)?;
    // Right hexagon at (a,b,d), region form, whiskered by c.
    rhs.apply(2, &cx.face_w2(
        &cx.face(
            &cx.braid()?.hex_r,
            &[a, b, d],
            false,
            vec![
                cx.a(a, b, d)?,
                cx.w1(a, &cx.rr(b, d)?)?,
                cx.ai(a, d, b)?,
                cx.w2(&cx.rr(a, d)?, b)?,
            ],
            vec![cx.rr(&ab, d)?, cx.ai(d, a, b)?],
        )?,
        c,
    )?)?;
    rhs.apply(0, &cx.f_hexr(&ab, c, d)?)?;

    finish(&lhs, &rhs)
}

/// Braiding coherence (a,b,c,d): the two pastings between
/// (R(a,b)⊗cd)·ai(ba,c,d)·… and a(a,b,cd)·R(a,bcd)·a(b,cd,a)·….
fn ba2(cx: &Cx, a: &str, b: &str, c: &str, d: &str) -> Result<Option<String>> {
    let ab = cx.t(a, b)?;
    let ba = cx.t(b, a)?;
    let ac = cx.t(a, c)?;
    let ca = cx.t(c, a)?;
    let ad = cx.t(a, d)?;
    let da = cx.t(d, a)?;
    let bc = cx.t(b, c)?;
    let cd = cx.t(c, d)?;

    let t = vec![
        cx.w2(&cx.rr(a, b)?, &cd)?,
        cx.ai(&ba, c, d)?,
        cx.w2(&cx.a(b, a, c)?, d)?,
        cx.w2(&cx.w1(b, &cx.rr(a, c)?)?, d)?,
        cx.w2(&cx.ai(b, c, a)?, d)?,
        cx.a(&bc, a, d)?,
        cx.w1(&bc, &cx.rr(a, d)?)?,
    ];

    let mut lhs = Rewriter::start(cx, t.clone())?;
    // Inverse π at (b,a,c,d), region form.
    lhs.apply(1, &cx.face(
        &cx.d.pi,
        &[b, a, c, d],
        true,
        vec![cx.ai(&ba, c, d)?, cx.w2(&cx.a(b, a, c)?, d)?],
        vec![
            cx.a(b, a, &cd)?,
            cx.w1(b, &cx.ai(a, c, d)?)?,
            cx.ai(b, &ac, d)?,
        ],
    )?)?;
    lhs.iso(3, 
        vec![cx.ai(b, &ac, d)?, cx.w2(&cx.w1(b, &cx.rr(a, c)?)?, d)?],
        vec![cx.w1(b, &cx.w2(&cx.rr(a, c)?, d)?)?, cx.ai(b, &ca, d)?],
    )?;
    // π at (b,c,a,d), region form.
    lhs.apply(4, &cx.face(
        &cx.d.pi,
        &[b, c, a, d],
        false,
        vec![
            cx.ai(b, &ca, d)?,
            cx.w2(&cx.ai(b, c, a)?, d)?,
            cx.a(&bc, a, d)?,
        ],
        vec![cx.w1(b, &cx.a(c, a, d)?)?, cx.ai(b, c, &ad)?],
    )?)?;
    lhs.iso(5, 
        vec![cx.ai(b, c, &ad)?, cx.w1(&bc, &cx.rr(a, d)?)?],
        vec![cx.w1(b, &cx.w1(c, &cx.rr(a, d)?)?)?, cx.ai(b, c, &da)?],
    )?;
    // Left hexagon at (a,c,d), region form, whiskered by b.
    lhs.apply(2, &cx.face_w1(
        b,
        &cx.face(
            &cx.braid()?.hex_l,
            &[a, c, d],
            false,
            vec![
                cx.ai(a, c, d)?,
                cx.w2(&cx.rr(a, c)?, d)?,
                cx.a(c, a, d)?,
                cx.w1(c, &cx.rr(a, d)?)?,
            ],
            vec![cx.rr(a, &cd)?, cx.a(c, d, a)?],
        )?,
    )?)?;
    lhs.apply(0, &cx.f_hexl(a, b, &cd)?)?;

    let mut rhs = Rewriter::start(cx, t)?;
    rhs.iso(0, 
        vec![cx.w2(&cx.rr(a, b)?, &cd)?, cx.ai(&ba, c, d)?],
        vec![cx.ai(&ab, c, d)?, cx.w2(&cx.w2(&cx.rr(a, b)?, c)?, d)?],
    )?;
    // Left hexagon at (a,b,c), region form, whiskered by d.
    rhs.apply(1, &cx.face_w2(
        &cx.face(
            &cx.braid()?.hex_l,
            &[a, b, c],
            false,
            vec![
                cx.w2(&cx.rr(a, b)?, c)?,
                cx.a(b, a, c)?,
                cx.w1(b, &cx.rr(a, c)?)?,
                cx.ai(b, c, a)?,
            ],
            vec![cx.a(a, b, c)?, cx.rr(a, &bc)?],
        )?,
        d,
    )?)?;
    rhs.apply(2, &cx.f_hexl(a, &bc, d)?)?;
    // Inverse π at (a,b,c,d), region form.
    rhs.apply(0, &cx.face(
        &cx.d.pi,
        &[a, b, c, d],
        true,
        vec![
            cx.ai(&ab, c, d)?,
            cx.w2(&cx.a(a, b, c)?, d)?,
            cx.a(a, &bc, d)?,
        ],
        vec![cx.a(a, b, &cd)?, cx.w1(a, &cx.ai(b, c, d)?)?],
    )?)?;
    let bcd = cx.t(&bc, d)?;
    rhs.iso(1, 
        vec![cx.w1(a, &cx.ai(b, c, d)?)?, cx.rr(a, &bcd)?],
        vec![cx.rr(a, &bcd)?, cx.w2(&cx.ai(b, c, d)?, a)?],
    )?;
    // π at (b,c,d,a), region form.
    rhs.apply(2, &cx.face(
        &cx.d.pi,
        &[b, c, d, a],
        false,
        vec![cx.w2(&cx.ai(b, c, d)?, a)?, cx.a(&bc, d, a)?],
        vec![
            cx.a(b, &cd, a)?,
            cx.w1(b, &cx.a(c, d, a)?)?,
            cx.ai(b, c, &da)?,
        ],
    )?)?;

    finish(&lhs, &rhs)
}

/// Braiding coherence (a,b,c,d): the two pastings between
/// ((a⊗R(b,c))⊗d)·… and (ai(a,b,c)⊗d)·a(ab,c,d)·R(ab,cd)·a(c,d,ab)·….
fn ba3(cx: &Cx, a: &str, b: &str, c: &str, d: &str) -> Result<Option<String>> {
    let ab = cx.t(a, b)?;
    let ac = cx.t(a, c)?;
    let ca = cx.t(c, a)?;
    let ad = cx.t(a, d)?;
    let da = cx.t(d, a)?;
    let bc = cx.t(b, c)?;
    let cb = cx.t(c, b)?;
    let bd = cx.t(b, d)?;
    let db = cx.t(d, b)?;
    let cd = cx.t(c, d)?;

    let t = vec![
        cx.w2(&cx.w1(a, &cx.rr(b, c)?)?, d)?,
        cx.w2(&cx.ai(a, c, b)?, d)?,
        cx.a(&ac, b, d)?,
        cx.w2(&cx.rr(a, c)?, &bd)?,
        cx.w1(&ca, &cx.rr(b, d)?)?,
        cx.a(c, a, &db)?,
        cx.w1(c, &cx.ai(a, d, b)?)?,
        cx.w1(c, &cx.w2(&cx.rr(a, d)?, b)?)?,
    ];

    let mut lhs = Rewriter::start(cx, t.clone())?;
    lhs.iso(2, 
        vec![cx.a(&ac, b, d)?, cx.w2(&cx.rr(a, c)?, &bd)?],
        vec![cx.w2(&cx.w2(&cx.rr(a, c)?, b)?, d)?, cx.a(&ca, b, d)?],
    )?;
    lhs.apply(0, &cx.face_w2(&cx.f_hexr(a, b, c)?, d)?)?;
    lhs.iso(4, 
        vec![cx.w1(&ca, &cx.rr(b, d)?)?, cx.a(c, a, &db)?],
        vec![cx.a(c, a, &bd)?, cx.w1(c, &cx.w1(a, &cx.rr(b, d)?)?)?],
    )?;
    lhs.apply(5, &cx.face_w1(c, &cx.f_hexr(a, b, d)?)?)?;
    // π at (c,a,b,d), region form.
    lhs.apply(2, &cx.face(
        &cx.d.pi,
        &[c, a, b, d],
        false,
        vec![
            cx.w2(&cx.ai(c, a, b)?, d)?,
            cx.a(&ca, b, d)?,
            cx.a(c, a, &bd)?,
            cx.w1(c, &cx.ai(a, b, d)?)?,
        ],
        vec![cx.a(c, &ab, d)?],
    )?)?;
    lhs.apply(1, &cx.f_hexl(&ab, c, d)?)?;

    let mut rhs = Rewriter::start(cx, t)?;
    // π at (a,c,b,d), region form.
    rhs.apply(1, &cx.face(
        &cx.d.pi,
        &[a, c, b, d],
        false,
        vec![cx.w2(&cx.ai(a, c, b)?, d)?, cx.a(&ac, b, d)?],
        vec![
            cx.a(a, &cb, d)?,
            cx.w1(a, &cx.a(c, b, d)?)?,
            cx.ai(a, c, &bd)?,
        ],
    )?)?;
    rhs.iso(0, 
        vec![cx.w2(&cx.w1(a, &cx.rr(b, c)?)?, d)?, cx.a(a, &cb, d)?],
        vec![cx.a(a, &bc, d)?, cx.w1(a, &cx.w2(&cx.rr(b, c)?, d)?)?],
    )?;
    rhs.iso(4, 
        vec![cx.w2(&cx.rr(a, c)?, &bd)?, cx.w1(&ca, &cx.rr(b, d)?)?],
        vec![cx.w1(&ac, &cx.rr(b, d)?)?, cx.w2(&cx.rr(a, c)?, &db)?],
    )?;
    rhs.iso(3, 
        vec![cx.ai(a, c, &bd)?, cx.w1(&ac, &cx.rr(b, d)?)?],
        vec![cx.w1(a, &cx.w1(c, &cx.rr(b, d)?)?)?, cx.ai(a, c, &db)?],
    )?;
    // π at (c,a,d,b), region form.
    rhs.apply(6, &cx.face(
        &cx.d.pi,
        &[c, a, d, b],
        false,
        vec![cx.a(c, a, &db)?, cx.w1(c, &cx.ai(a, d, b)?)?],
        vec![
            cx.ai(&ca, d, b)?,
            cx.w2(&cx.a(c, a, d)?, b)?,
            cx.a(c, &ad, b)?,
        ],
    )?)?;
    rhs.iso(8, 
        vec![cx.a(c, &ad, b)?, cx.w1(c, &cx.w2(&cx.rr(a, d)?, b)?)?],
        vec![cx.w2(&cx.w1(c, &cx.rr(a, d)?)?, b)?, cx.a(c, &da, b)?],
    )?;
    rhs.iso(5, 
        vec![cx.w2(&cx.rr(a, c)?, &db)?, cx.ai(&ca, d, b)?],
        vec![cx.ai(&ac, d, b)?, cx.w2(&cx.w2(&cx.rr(a, c)?, d)?, b)?],
    )?;
    // Inverse π at (a,c,d,b), region form.
    rhs.apply(4, &cx.face(
        &cx.d.pi,
        &[a, c, d, b],
        true,
        vec![cx.ai(a, c, &db)?, cx.ai(&ac, d, b)?],
        vec![
            cx.w1(a, &cx.ai(c, d, b)?)?,
            cx.ai(a, &cd, b)?,
            cx.w2(&cx.ai(a, c, d)?, b)?,
        ],
    )?)?;
    // Left hexagon at (a,c,d), region form, whiskered by b.
    rhs.apply(6, &cx.face_w2(
        &cx.face(
            &cx.braid()?.hex_l,
            &[a, c, d],
            false,
            vec![
                cx.ai(a, c, d)?,
                cx.w2(&cx.rr(a, c)?, d)?,
                cx.a(c, a, d)?,
                cx.w1(c, &cx.rr(a, d)?)?,
            ],
            vec![cx.rr(a, &cd)?, cx.a(c, d, a)?],
        )?,
        b,
    )?)?;
    rhs.apply(1, &cx.face_w1(a, &cx.f_hexl(b, c, d)?)?)?;
    // The two inverse associator spellings cancel.
    rhs.iso(3, 
        vec![
            cx.w1(a, &cx.a(c, d, b)?)?,
            cx.w1(a, &cx.ai(c, d, b)?)?,
        ],
        vec![],
    )?;
    rhs.apply(2, &cx.f_hexr(a, b, &cd)?)?;
    // Inverse π at (a,b,c,d), region form.
    rhs.apply(0, &cx.face(
        &cx.d.pi,
        &[a, b, c, d],
        true,
        vec![
            cx.a(a, &bc, d)?,
            cx.w1(a, &cx.a(b, c, d)?)?,
            cx.ai(a, b, &cd)?,
        ],
        vec![cx.w2(&cx.ai(a, b, c)?, d)?, cx.a(&ab, c, d)?],
    )?)?;
    // Inverse π at (c,d,a,b), region form.
    rhs.apply(3, &cx.face(
        &cx.d.pi,
        &[c, d, a, b],
        true,
        vec![
            cx.ai(&cd, a, b)?,
            cx.w2(&cx.a(c, d, a)?, b)?,
            cx.a(c, &da, b)?,
        ],
        vec![cx.a(c, d, &ab)?, cx.w1(c, &cx.ai(d, a, b)?)?],
    )?)?;

    finish(&lhs, &rhs)
}

/// Braiding coherence (a,b,c): the two hexagon pastings between
/// (R(a,b)⊗c)·a(b,a,c)·(b⊗R(a,c))·… and a(a,b,c)·(a⊗R(b,c))·….
fn ba4(cx: &Cx, a: &str, b: &str, c: &str) -> Result<Option<String>> {
    let ab = cx.t(a, b)?;
    let ba = cx.t(b, a)?;
    let bc = cx.t(b, c)?;
    let cb = cx.t(c, b)?;

    let t = vec![
        cx.w2(&cx.rr(a, b)?, c)?,
        cx.a(b, a, c)?,
        cx.w1(b, &cx.rr(a, c)?)?,
        cx.ai(b, c, a)?,
        cx.w2(&cx.rr(b, c)?, a)?,
        cx.a(c, b, a)?,
    ];

    let mut lhs = Rewriter::start(cx, t.clone())?;
    lhs.apply(0, &cx.f_hexl(a, b, c)?)?;
    lhs.iso(2, 
        vec![
            cx.a(b, c, a)?,
            cx.ai(b, c, a)?,
            cx.w2(&cx.rr(b, c)?, a)?,
        ],
        vec![cx.w2(&cx.rr(b, c)?, a)?],
    )?;
    lhs.iso(1, 
        vec![cx.rr(a, &bc)?, cx.w2(&cx.rr(b, c)?, a)?],
        vec![cx.w1(a, &cx.rr(b, c)?)?, cx.rr(a, &cb)?],
    )?;
    // Inverse left hexagon at (a,c,b), region form.
    lhs.apply(2, &cx.face(
        &cx.braid()?.hex_l,
        &[a, c, b],
        true,
        vec![cx.rr(a, &cb)?, cx.a(c, b, a)?],
        vec![
            cx.ai(a, c, b)?,
            cx.w2(&cx.rr(a, c)?, b)?,
            cx.a(c, a, b)?,
            cx.w1(c, &cx.rr(a, b)?)?,
        ],
    )?)?;

    let mut rhs = Rewriter::start(cx, t)?;
    // Right hexagon at (b,a,c), region form.
    rhs.apply(2, &cx.face(
        &cx.braid()?.hex_r,
        &[b, a, c],
        false,
        vec![
            cx.w1(b, &cx.rr(a, c)?)?,
            cx.ai(b, c, a)?,
            cx.w2(&cx.rr(b, c)?, a)?,
            cx.a(c, b, a)?,
        ],
        vec![cx.ai(b, a, c)?, cx.rr(&ba, c)?],
    )?)?;
    rhs.iso(0, 
        vec![
            cx.w2(&cx.rr(a, b)?, c)?,
            cx.a(b, a, c)?,
            cx.ai(b, a, c)?,
        ],
        vec![cx.w2(&cx.rr(a, b)?, c)?],
    )?;
    rhs.iso(0, 
        vec![cx.w2(&cx.rr(a, b)?, c)?, cx.rr(&ba, c)?],
        vec![cx.rr(&ab, c)?, cx.w1(c, &cx.rr(a, b)?)?],
    )?;
    // Inverse right hexagon at (a,b,c), region form.
    rhs.apply(0, &cx.face(
        &cx.braid()?.hex_r,
        &[a, b, c],
        true,
        vec![cx.rr(&ab, c)?],
        vec![
            cx.a(a, b, c)?,
            cx.w1(a, &cx.rr(b, c)?)?,
            cx.ai(a, c, b)?,
            cx.w2(&cx.rr(a, c)?, b)?,
            cx.a(c, a, b)?,
        ],
    )?)?;

    finish(&lhs, &rhs)
}

// ---------------------------------------------------------------------------
// Syllepsis and symmetry axiom instances

/// First syllepsis axiom at (a,b,c): converting both reverse braiding
/// edges of (Rd(a,b)⊗c)·a(b,a,c)·(b⊗Rd(a,c)) via the syllepsis and
/// pasting the left hexagon equals converting the whole path via the
/// inverse right hexagon mate and then R d(a,bc).
fn syl1(cx: &Cx, a: &str, b: &str, c: &str) -> Result<Option<String>> {
    let bc = cx.t(b, c)?;

    let start = vec![
        cx.w2(&cx.rd(a, b)?, c)?,
        cx.a(b, a, c)?,
        cx.w1(b, &cx.rd(a, c)?)?,
    ];

    let mut lhs = Rewriter::start(cx, start.clone())?;
    lhs.apply(0, &cx.face_w2(
        &cx.raw_face(cx.v_hat(a, b)?, vec![cx.rd(a, b)?], vec![cx.rr(a, b)?])?,
        c,
    )?)?;
    lhs.apply(2, &cx.face_w1(
        b,
        &cx.raw_face(cx.v_hat(a, c)?, vec![cx.rd(a, c)?], vec![cx.rr(a, c)?])?,
    )?)?;
    lhs.apply(0, &cx.f_hexl(a, b, c)?)?;

    let mut rhs = Rewriter::start(cx, start.clone())?;
    rhs.apply(0, &cx.raw_face(
        cx.r_hat1(a, b, c)?,
        start,
        vec![cx.a(a, b, c)?, cx.rd(a, &bc)?, cx.a(b, c, a)?],
    )?)?;
    rhs.apply(1, &cx.raw_face(
        cx.v_hat(a, &bc)?,
        vec![cx.rd(a, &bc)?],
        vec![cx.rr(a, &bc)?],
    )?)?;

    finish(&lhs, &rhs)
}

/// Second syllepsis axiom at (a,b,c), the mirror of the first through
/// the right hexagon and the inverse left hexagon mate.
fn syl2(cx: &Cx, a: &str, b: &str, c: &str) -> Result<Option<String>> {
    let ab = cx.t(a, b)?;

    let start = vec![
        cx.w1(a, &cx.rd(b, c)?)?,
        cx.ai(a, c, b)?,
        cx.w2(&cx.rd(a, c)?, b)?,
    ];

    let mut lhs = Rewriter::start(cx, start.clone())?;
    lhs.apply(0, &cx.face_w1(
        a,
        &cx.raw_face(cx.v_hat(b, c)?, vec![cx.rd(b, c)?], vec![cx.rr(b, c)?])?,
    )?)?;
    lhs.apply(2, &cx.face_w2(
        &cx.raw_face(cx.v_hat(a, c)?, vec![cx.rd(a, c)?], vec![cx.rr(a, c)?])?,
        b,
    )?)?;
    lhs.apply(0, &cx.f_hexr(a, b, c)?)?;

    let mut rhs = Rewriter::start(cx, start.clone())?;
    rhs.apply(0, &cx.raw_face(
        cx.r_hat2(a, b, c)?,
        start,
        vec![cx.ai(a, b, c)?, cx.rd(&ab, c)?, cx.ai(c, a, b)?],
    )?)?;
    rhs.apply(1, &cx.raw_face(
        cx.v_hat(&ab, c)?,
        vec![cx.rd(&ab, c)?],
        vec![cx.rr(&ab, c)?],
    )?)?;

    finish(&lhs, &rhs)
}

/// Symmetry axiom at (a,b): whiskering the syllepsis cell v(a,b) by
/// R(a,b) on either side gives the same endomorphism of R(a,b).
fn sym(cx: &Cx, a: &str, b: &str) -> Result<Option<String>> {
    let r = cx.base().id2(&cx.base().symmetry1(a, b)?)?;
    let lhs = cx.base().hcomp2(&r, &cx.v_cell(a, b)?)?;
    let rhs = cx.base().hcomp2(&cx.v_cell(b, a)?, &r)?;
    if lhs == rhs {
        Ok(None)
    } else {
        Ok(Some(format!(
            "lhs {} != rhs {}",
            lhs.describe(),
            rhs.describe()
        )))
    }
}

// ---------------------------------------------------------------------------
// Checker batteries

/// All length-`k` tuples over the quantified objects.
pub(crate) fn tuples(objects: &[String], k: usize) -> Vec<Vec<String>> {
    let mut out: Vec<Vec<String>> = vec![Vec::new()];
    for _ in 0..k {
        let mut next = Vec::with_capacity(out.len() * objects.len());
        for prefix in &out {
            for x in objects {
                let mut t = prefix.clone();
                t.push(x.clone());
                next.push(t);
            }
        }
        out = next;
    }
    out
}

/// Run one axiom over all instances: failing instances each get a
/// failing check with a witness; an all-pass axiom gets one summary
/// passing check.
pub(crate) fn battery<F>(report: &mut Report, name: &str, anchor: &str, instances: &[Vec<String>], mut f: F) -> Result<()>
where
    F: FnMut(&[String]) -> Result<Option<String>>,
{
    let mut failures = 0u64;
    for inst in instances {
        if let Some(witness) = f(inst)? {
            failures += 1;
            report.fail(name, anchor, inst.clone(), witness);
        }
    }
    report.count(&format!("{name}.instances"), instances.len() as u64);
    if failures == 0 {
        report.pass(name, anchor, vec![format!("{} instances", instances.len())]);
    }
    Ok(())
}

/// Check the three monoidal coherence axioms of the constraint data
/// over all tuples of its quantified objects.
pub fn check_monoidal_axioms(d: &WeakMonBicatData) -> Result<Report> {
    require_strict_monoidal(d)?;
    let cx = Cx { d };
    let mut report = Report::new();
    battery(
        &mut report,
        "monoidal.associativity",
        "monoidal.axiom1",
        &tuples(&d.objects, 5),
        |t| ma1(&cx, &t[0], &t[1], &t[2], &t[3], &t[4]),
    )?;
    battery(
        &mut report,
        "monoidal.left_unit",
        "monoidal.axiom2",
        &tuples(&d.objects, 3),
        |t| ma2(&cx, &t[0], &t[1], &t[2]),
    )?;
    battery(
        &mut report,
        "monoidal.right_unit",
        "monoidal.axiom3",
        &tuples(&d.objects, 3),
        |t| ma3(&cx, &t[0], &t[1], &t[2]),
    )?;
    Ok(report)
}

/// Check the four braiding coherence axioms.  Errors if the data has
/// no braiding.
pub fn check_braiding_axioms(d: &WeakMonBicatData) -> Result<Report> {
    require_strict_monoidal(d)?;
    let b = d
        .braiding
        .as_ref()
        .ok_or_else(|| Error::invalid("the data carries no braiding"))?;
    require_strict_braiding(d, b)?;
    let cx = Cx { d };
    let mut report = Report::new();
    battery(
        &mut report,
        "braiding.right_tail",
        "braiding.axiom1",
        &tuples(&d.objects, 4),
        |t| ba1(&cx, &t[0], &t[1], &t[2], &t[3]),
    )?;
    battery(
        &mut report,
        "braiding.left_tail",
        "braiding.axiom2",
        &tuples(&d.objects, 4),
        |t| ba2(&cx, &t[0], &t[1], &t[2], &t[3]),
    )?;
    battery(
        &mut report,
        "braiding.middle",
        "braiding.axiom3",
        &tuples(&d.objects, 4),
        |t| ba3(&cx, &t[0], &t[1], &t[2], &t[3]),
    )?;
    battery(
        &mut report,
        "braiding.yang_baxter",
        "braiding.axiom4",
        &tuples(&d.objects, 3),
        |t| ba4(&cx, &t[0], &t[1], &t[2]),
    )?;
    Ok(report)
}

/// Check the two syllepsis axioms.  Errors if the data has no braiding
/// or no syllepsis.
pub fn check_syllepsis_axioms(d: &WeakMonBicatData) -> Result<Report> {
    require_strict_monoidal(d)?;
    let b = d
        .braiding
        .as_ref()
        .ok_or_else(|| Error::invalid("the syllepsis axioms need braiding data"))?;
    require_strict_braiding(d, b)?;
    if d.syllepsis.is_none() {
        return Err(Error::invalid("the data carries no syllepsis"));
    }
    require_involution(d)?;
    let cx = Cx { d };
    let mut report = Report::new();
    battery(
        &mut report,
        "syllepsis.left_hexagon",
        "syllepsis.axiom1",
        &tuples(&d.objects, 3),
        |t| syl1(&cx, &t[0], &t[1], &t[2]),
    )?;
    battery(
        &mut report,
        "syllepsis.right_hexagon",
        "syllepsis.axiom2",
        &tuples(&d.objects, 3),
        |t| syl2(&cx, &t[0], &t[1], &t[2]),
    )?;
    Ok(report)
}

/// Check the symmetry axiom (the syllepsis is self-inverse under
/// whiskering by the braiding).  Errors without braiding + syllepsis.
pub fn check_symmetry_axiom(d: &WeakMonBicatData) -> Result<Report> {
    require_strict_monoidal(d)?;
    let b = d
        .braiding
        .as_ref()
        .ok_or_else(|| Error::invalid("the symmetry axiom needs braiding data"))?;
    require_strict_braiding(d, b)?;
    if d.syllepsis.is_none() {
        return Err(Error::invalid("the symmetry axiom needs syllepsis data"));
    }
    require_involution(d)?;
    let cx = Cx { d };
    let mut report = Report::new();
    battery(
        &mut report,
        "symmetry.self_inverse",
        "symmetry.axiom",
        &tuples(&d.objects, 2),
        |t| sym(&cx, &t[0], &t[1]),
    )?;
    Ok(report)
}

// ---------------------------------------------------------------------------
// Graded-scalar base over Z/4 and coboundary-twisted data
//
// The base has 0-cells 0..3 adding mod 4, a single 1-cell per 0-cell,
// and Z/4 worth of scalar 2-cells (`w0`..`w3`) on every hom, with
// horizontal, vertical, and tensor composition all adding exponents.
// Constraint data built from arbitrary cochains θ, σ, p, q satisfies
// every coherence axiom because each axiom difference telescopes to
// zero, which makes this a family of valid-by-construction fixtures
// for the checkers.

fn empty_category() -> FinCategory {
    FinCategory {
        objects: Default::default(),
        morphisms: BTreeMap::new(),
        identity_of: BTreeMap::new(),
        compose_table: BTreeMap::new(),
    }
}

/// Exponent-addition functor `Z/4 × Z/4 → Z/4` on scalar 2-cells (or
/// the empty functor when the source product is empty).
fn add_mod4_functor(source: FinCategory, target: FinCategory) -> Functor {
    let mut obj_map = BTreeMap::new();
    let mut mor_map = BTreeMap::new();
    if !source.objects.is_empty() {
        obj_map.insert(render_tuple(&["x", "x"]), "x".to_string());
        for i in 0..4 {
            for j in 0..4 {
                mor_map.insert(
                    render_tuple(&[&format!("w{i}"), &format!("w{j}")]),
                    format!("w{}", (i + j) % 4),
                );
            }
        }
    }
    Functor {
        source,
        target,
        obj_map,
        mor_map,
    }
}

/// The Z/4 graded-scalar permutative base.
pub fn z4_scalar_base() -> PermBase {
    let objs: Vec<String> = (0..4).map(|i| i.to_string()).collect();
    let add = |x: &str, y: &str| -> String {
        ((x.parse::<u32>().unwrap() + y.parse::<u32>().unwrap()) % 4).to_string()
    };
    let mut two = TwoCategory {
        zero_cells: objs.iter().cloned().collect(),
        hom: BTreeMap::new(),
        comp: BTreeMap::new(),
        unit_one_cell: BTreeMap::new(),
    };
    for x in &objs {
        two.unit_one_cell.insert(x.clone(), "x".to_string());
        for y in &objs {
            let h = if x == y { cyclic_group(4) } else { empty_category() };
            two.hom.insert((x.clone(), y.clone()), h);
        }
    }
    for x in &objs {
        for y in &objs {
            for z in &objs {
                let source = product_category(&[
                    two.hom[&(y.clone(), z.clone())].clone(),
                    two.hom[&(x.clone(), y.clone())].clone(),
                ]);
                let target = two.hom[&(x.clone(), z.clone())].clone();
                two.comp.insert(
                    (x.clone(), y.clone(), z.clone()),
                    add_mod4_functor(source, target),
                );
            }
        }
    }
    let mut tensor0 = BTreeMap::new();
    for x in &objs {
        for y in &objs {
            tensor0.insert((x.clone(), y.clone()), add(x, y));
        }
    }
    let mut tensor_hom = BTreeMap::new();
    for x in &objs {
        for x2 in &objs {
            for y in &objs {
                for y2 in &objs {
                    let source = product_category(&[
                        two.hom[&(x.clone(), x2.clone())].clone(),
                        two.hom[&(y.clone(), y2.clone())].clone(),
                    ]);
                    let target = two.hom[&(add(x, y), add(x2, y2))].clone();
                    tensor_hom.insert(
                        ((x.clone(), x2.clone()), (y.clone(), y2.clone())),
                        add_mod4_functor(source, target),
                    );
                }
            }
        }
    }
    let mut symmetry = BTreeMap::new();
    for x in &objs {
        for y in &objs {
            symmetry.insert((x.clone(), y.clone()), "x".to_string());
        }
    }
    table_base(TableBase {
        two,
        tensor0,
        unit0: "0".to_string(),
        tensor_hom,
        symmetry,
    })
}

/// Constraint data over [`z4_scalar_base`] twisted by arbitrary
/// cochains: θ feeds the associativity modification as its coboundary,
/// σ the hexagons, and p, q the unit modifications.  The result
/// satisfies all coherence axioms for every choice of cochains.
pub fn z4_twisted_data(
    theta: &[[[i32; 4]; 4]; 4],
    sigma: &[[i32; 4]; 4],
    p: &[i32; 4],
    q: &[i32; 4],
) -> WeakMonBicatData {
    let objects: Vec<String> = (0..4).map(|i| i.to_string()).collect();
    let mut d = WeakMonBicatData::identity(z4_scalar_base(), objects);
    let wname = |k: i32| format!("w{}", k.rem_euclid(4));
    let kstr = |parts: &[usize]| -> Vec<String> { parts.iter().map(|i| i.to_string()).collect() };
    for w in 0..4usize {
        for x in 0..4usize {
            for y in 0..4usize {
                for z in 0..4usize {
                    let k = theta[x][y][z] + theta[w][(x + y) % 4][z] + theta[w][x][y]
                        - theta[w][x][(y + z) % 4]
                        - theta[(w + x) % 4][y][z];
                    d.pi.insert(kstr(&[w, x, y, z]), wname(k));
                }
            }
        }
    }
    let mut hex_l = ConstraintMap::new();
    let mut hex_r = ConstraintMap::new();
    for x in 0..4usize {
        for y in 0..4usize {
            d.mu.insert(kstr(&[x, y]), wname(q[x] - p[y] - theta[x][0][y]));
            d.lambda
                .insert(kstr(&[x, y]), wname(p[(x + y) % 4] + theta[0][x][y] - p[x]));
            d.rho
                .insert(kstr(&[x, y]), wname(theta[x][y][0] - q[(x + y) % 4] + q[y]));
            for z in 0..4usize {
                hex_l.insert(
                    kstr(&[x, y, z]),
                    wname(
                        theta[x][y][z] + sigma[x][(y + z) % 4] + theta[y][z][x]
                            - sigma[x][y]
                            - theta[y][x][z]
                            - sigma[x][z],
                    ),
                );
                hex_r.insert(
                    kstr(&[x, y, z]),
                    wname(
                        -theta[x][y][z] + sigma[(x + y) % 4][z] - theta[z][x][y] - sigma[x][z]
                            + theta[x][z][y]
                            - sigma[y][z],
                    ),
                );
            }
        }
    }
    let mut v = ConstraintMap::new();
    for x in 0..4usize {
        for y in 0..4usize {
            v.insert(kstr(&[x, y]), wname(-sigma[x][y] - sigma[y][x]));
        }
    }
    d.braiding = Some(BraidingData {
        cell: AdjEquivData::default(),
        hex_l,
        hex_r,
    });
    d.syllepsis = Some(v);
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base2::perm_base::{fincat_base, validate_perm_base};
    use crate::caps::Caps;
    use crate::fincat;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};

    fn small_caps() -> Caps {
        Caps {
            objects: 16,
            morphisms: 64,
            enriched_objects: 2,
        }
    }

    fn z4_objects() -> Vec<String> {
        (0..4).map(|i| i.to_string()).collect()
    }

    fn check_all(d: &WeakMonBicatData) {
        let m = check_monoidal_axioms(d).unwrap();
        assert!(m.passed(), "monoidal failures: {:?}", m.failures());
        let b = check_braiding_axioms(d).unwrap();
        assert!(b.passed(), "braiding failures: {:?}", b.failures());
        let s = check_syllepsis_axioms(d).unwrap();
        assert!(s.passed(), "syllepsis failures: {:?}", s.failures());
        let y = check_symmetry_axiom(d).unwrap();
        assert!(y.passed(), "symmetry failures: {:?}", y.failures());
    }

    #[test]
    fn z4_base_validates() {
        validate_perm_base(&z4_scalar_base(), &small_caps()).unwrap();
    }

    #[test]
    fn identity_data_passes_all_batteries() {
        check_all(&WeakMonBicatData::identity(z4_scalar_base(), z4_objects()));
    }

    #[test]
    fn fixed_twist_passes_all_batteries() {
        let mut theta = [[[0i32; 4]; 4]; 4];
        let mut sigma = [[0i32; 4]; 4];
        let mut p = [0i32; 4];
        let mut q = [0i32; 4];
        for x in 0..4 {
            p[x] = (3 * x as i32 + 1) % 4;
            q[x] = (x as i32 * x as i32) % 4;
            for y in 0..4 {
                sigma[x][y] = (x as i32 + 3 * y as i32) % 4;
                for z in 0..4 {
                    theta[x][y][z] = (x as i32 * y as i32 + 2 * z as i32) % 4;
                }
            }
        }
        check_all(&z4_twisted_data(&theta, &sigma, &p, &q));
    }

    fn random_twist(seed: u64) -> WeakMonBicatData {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut theta = [[[0i32; 4]; 4]; 4];
        let mut sigma = [[0i32; 4]; 4];
        let mut p = [0i32; 4];
        let mut q = [0i32; 4];
        for plane in theta.iter_mut() {
            for row in plane.iter_mut() {
                for v in row.iter_mut() {
                    *v = rng.gen_range(0..4);
                }
            }
        }
        for row in sigma.iter_mut() {
            for v in row.iter_mut() {
                *v = rng.gen_range(0..4);
            }
        }
        for v in p.iter_mut() {
            *v = rng.gen_range(0..4);
        }
        for v in q.iter_mut() {
            *v = rng.gen_range(0..4);
        }
        z4_twisted_data(&theta, &sigma, &p, &q)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(6))]
        #[test]
        fn random_coboundary_twists_pass_all_batteries(seed in any::<u64>()) {
            check_all(&random_twist(seed));
        }
    }

    #[test]
    fn perturbed_pi_fails_associativity() {
        let mut d = WeakMonBicatData::identity(z4_scalar_base(), z4_objects());
        d.pi.insert(vec!["1".into(); 4], "w1".into());
        let r = check_monoidal_axioms(&d).unwrap();
        assert!(!r.passed());
        assert!(r.failures().iter().all(|c| c.anchor == "monoidal.axiom1"));
        assert!(r.failures()[0].witness.contains("!="));
    }

    #[test]
    fn perturbed_syllepsis_fails_syllepsis_and_symmetry() {
        let mut d = WeakMonBicatData::identity(z4_scalar_base(), z4_objects());
        d.syllepsis
            .as_mut()
            .unwrap()
            .insert(vec!["1".into(), "2".into()], "w1".into());
        assert!(!check_syllepsis_axioms(&d).unwrap().passed());
        assert!(!check_symmetry_axiom(&d).unwrap().passed());
        // The monoidal and braiding axioms do not see the syllepsis.
        assert!(check_monoidal_axioms(&d).unwrap().passed());
        assert!(check_braiding_axioms(&d).unwrap().passed());
    }

    #[test]
    fn perturbed_hexagon_fails_braiding() {
        let mut d = WeakMonBicatData::identity(z4_scalar_base(), z4_objects());
        d.braiding
            .as_mut()
            .unwrap()
            .hex_l
            .insert(vec!["1".into(), "2".into(), "3".into()], "w2".into());
        assert!(!check_braiding_axioms(&d).unwrap().passed());
    }

    #[test]
    fn empty_object_set_passes_vacuously() {
        let d = WeakMonBicatData::identity(z4_scalar_base(), Vec::new());
        let r = check_monoidal_axioms(&d).unwrap();
        assert!(r.passed());
        assert_eq!(r.stats["monoidal.associativity.instances"], 0);
        assert!(check_braiding_axioms(&d).unwrap().passed());
        assert!(check_syllepsis_axioms(&d).unwrap().passed());
        assert!(check_symmetry_axiom(&d).unwrap().passed());
    }

    #[test]
    fn identity_data_over_functor_base_passes() {
        let base = fincat_base(&[("T", fincat::terminal())], small_caps()).unwrap();
        check_all(&WeakMonBicatData::identity(base, vec!["T".to_string()]));
    }

    #[test]
    fn non_strict_associator_is_unsupported() {
        let mut d = WeakMonBicatData::identity(z4_scalar_base(), z4_objects());
        d.assoc.fwd.insert(vec!["1".into(); 3], "bogus".into());
        assert!(matches!(
            check_monoidal_axioms(&d),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn missing_braiding_is_an_error() {
        let mut d = WeakMonBicatData::identity(z4_scalar_base(), z4_objects());
        d.braiding = None;
        assert!(check_braiding_axioms(&d).is_err());
        assert!(check_syllepsis_axioms(&d).is_err());
        assert!(check_symmetry_axiom(&d).is_err());
        assert!(check_monoidal_axioms(&d).unwrap().passed());
    }
}
