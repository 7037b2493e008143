//! Permutative (strict symmetric monoidal) 2-category bases.
//!
//! A base is anything implementing [`HomProvider`]: it names its
//! 0-cells, materializes hom categories and composition / tensor
//! functors on demand, and provides the symmetry 1-cells.  Explicit
//! tables ([`TableBase`]) and the lazy functor-category base over a
//! finite seed of categories ([`FinCatBase`]) both implement it, as
//! does the icon-level base built in later modules.
//!
//! Lazy bases have an unbounded supply of 0-cells (all finite tensor
//! words in the seeds); [`HomProvider::zero_cells`] returns the finite
//! *probe set* over which [`validate_perm_base`] quantifies.  For a
//! table base the probe set is the full 0-cell set, so validation is
//! exhaustive.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

use crate::base2::paste::PasteHost;
use crate::base2::{Cell1, Cell2, TwoCategory};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::fincat::{
    compose_functor_pair, compose_morphisms, enumerate_functors, enumerate_nattrans,
    hcomp_nattrans, identity_functor, identity_nattrans, permutation_functor, product_category,
    product_functor, product_nattrans, render_tuple, tuple_components, validate_category,
    validate_functor, vcomp_nattrans, FinCategory, Functor, MorInfo, NatTransformation,
};

/// The operations a permutative base must provide.  All accessors are
/// fallible because lazy bases materialize data under size caps.
pub trait HomProvider: Send + Sync {
    /// Finite probe set of 0-cells (the full set for table bases, the
    /// seeds for lazy bases).
    fn zero_cells(&self) -> Vec<String>;
    /// Whether `x` names a 0-cell of the base (possibly outside the
    /// probe set).
    fn is_zero_cell(&self, x: &str) -> bool;
    /// The hom category `hom(x, y)`.
    fn hom(&self, x: &str, y: &str) -> Result<FinCategory>;
    /// Composition functor `hom(y,z) × hom(x,y) → hom(x,z)`.
    fn comp(&self, x: &str, y: &str, z: &str) -> Result<Functor>;
    /// Identity 1-cell of `x` (an object of `hom(x,x)`).
    fn unit_one_cell(&self, x: &str) -> Result<String>;
    /// Tensor of 0-cells (strictly associative and unital).
    fn tensor0(&self, x: &str, y: &str) -> Result<String>;
    /// Tensor unit 0-cell.
    fn unit0(&self) -> String;
    /// Tensor functor `hom(x,x') × hom(y,y') → hom(x⊗y, x'⊗y')`.
    fn tensor_hom(&self, x: (&str, &str), y: (&str, &str)) -> Result<Functor>;
    /// Symmetry 1-cell `R_{xy}: x⊗y → y⊗x`.
    fn symmetry(&self, x: &str, y: &str) -> Result<String>;
    /// Escape hatch for base-specific lookups (e.g. resolving a
    /// concrete functor to its 1-cell name in a [`FinCatBase`]).
    fn as_any(&self) -> &dyn std::any::Any;
}

/// Memo layer over a provider: everything the provider materializes is
/// kept behind an `Arc` keyed by its request, so the derived cell
/// operations never re-clone hom categories or functors.
#[derive(Default)]
struct Memo {
    homs: BTreeMap<(String, String), Arc<FinCategory>>,
    comps: BTreeMap<(String, String, String), Arc<Functor>>,
    tensors: BTreeMap<((String, String), (String, String)), Arc<Functor>>,
    tensor0: BTreeMap<(String, String), String>,
    symmetry: BTreeMap<(String, String), String>,
    unit1: BTreeMap<String, String>,
}

/// A permutative base behind a shared provider, with derived cell
/// operations.
#[derive(Clone)]
pub struct PermBase {
    provider: Arc<dyn HomProvider>,
    memo: Arc<Mutex<Memo>>,
}

impl std::fmt::Debug for PermBase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "PermBase(probe set {:?})", self.provider.zero_cells())
    }
}

impl PermBase {
    pub fn new(provider: Arc<dyn HomProvider>) -> PermBase {
        PermBase {
            provider,
            memo: Arc::new(Mutex::new(Memo::default())),
        }
    }

    pub fn provider(&self) -> &Arc<dyn HomProvider> {
        &self.provider
    }

    pub fn zero_cells(&self) -> Vec<String> {
        self.provider.zero_cells()
    }

    pub fn is_zero_cell(&self, x: &str) -> bool {
        self.provider.is_zero_cell(x)
    }

    pub fn hom(&self, x: &str, y: &str) -> Result<Arc<FinCategory>> {
        let key = (x.to_string(), y.to_string());
        if let Some(h) = self.memo.lock().unwrap().homs.get(&key) {
            return Ok(h.clone());
        }
        let h = Arc::new(self.provider.hom(x, y)?);
        self.memo.lock().unwrap().homs.insert(key, h.clone());
        Ok(h)
    }

    pub fn comp(&self, x: &str, y: &str, z: &str) -> Result<Arc<Functor>> {
        let key = (x.to_string(), y.to_string(), z.to_string());
        if let Some(c) = self.memo.lock().unwrap().comps.get(&key) {
            return Ok(c.clone());
        }
        let c = Arc::new(self.provider.comp(x, y, z)?);
        self.memo.lock().unwrap().comps.insert(key, c.clone());
        Ok(c)
    }

    pub fn tensor_hom(&self, x: (&str, &str), y: (&str, &str)) -> Result<Arc<Functor>> {
        let key = (
            (x.0.to_string(), x.1.to_string()),
            (y.0.to_string(), y.1.to_string()),
        );
        if let Some(t) = self.memo.lock().unwrap().tensors.get(&key) {
            return Ok(t.clone());
        }
        let t = Arc::new(self.provider.tensor_hom(x, y)?);
        self.memo.lock().unwrap().tensors.insert(key, t.clone());
        Ok(t)
    }

    pub fn unit0(&self) -> String {
        self.provider.unit0()
    }

    pub fn tensor0(&self, x: &str, y: &str) -> Result<String> {
        let key = (x.to_string(), y.to_string());
        if let Some(t) = self.memo.lock().unwrap().tensor0.get(&key) {
            return Ok(t.clone());
        }
        let t = self.provider.tensor0(x, y)?;
        self.memo.lock().unwrap().tensor0.insert(key, t.clone());
        Ok(t)
    }

    /// Identity 1-cell of a 0-cell.
    pub fn id1(&self, x: &str) -> Result<Cell1> {
        if let Some(u) = self.memo.lock().unwrap().unit1.get(x) {
            return Ok(Cell1::new(x, x, u.clone()));
        }
        let u = self.provider.unit_one_cell(x)?;
        self.memo
            .lock()
            .unwrap()
            .unit1
            .insert(x.to_string(), u.clone());
        Ok(Cell1::new(x, x, u))
    }

    /// Composite 1-cell g∘f (f first).
    pub fn compose1(&self, g: &Cell1, f: &Cell1) -> Result<Cell1> {
        if f.tgt0 != g.src0 {
            return Err(Error::boundary(format!(
                "compose1: `{}: {} -> {}` then `{}: {} -> {}`",
                f.name, f.src0, f.tgt0, g.name, g.src0, g.tgt0
            )));
        }
        let c = self.comp(&f.src0, &f.tgt0, &g.tgt0)?;
        let name = c.apply_obj(&render_tuple(&[&g.name, &f.name]))?;
        Ok(Cell1::new(f.src0.clone(), g.tgt0.clone(), name))
    }

    /// Tensor of 1-cells (first argument is the left factor).
    pub fn tensor1(&self, f: &Cell1, g: &Cell1) -> Result<Cell1> {
        let t = self.tensor_hom((&f.src0, &f.tgt0), (&g.src0, &g.tgt0))?;
        let name = t.apply_obj(&render_tuple(&[&f.name, &g.name]))?;
        Ok(Cell1::new(
            self.tensor0(&f.src0, &g.src0)?,
            self.tensor0(&f.tgt0, &g.tgt0)?,
            name,
        ))
    }

    /// Symmetry 1-cell `R_{xy}: x⊗y → y⊗x`.
    pub fn symmetry1(&self, x: &str, y: &str) -> Result<Cell1> {
        let key = (x.to_string(), y.to_string());
        let cached = self.memo.lock().unwrap().symmetry.get(&key).cloned();
        let name = match cached {
            Some(r) => r,
            None => {
                let r = self.provider.symmetry(x, y)?;
                self.memo.lock().unwrap().symmetry.insert(key, r.clone());
                r
            }
        };
        Ok(Cell1::new(self.tensor0(x, y)?, self.tensor0(y, x)?, name))
    }

    /// Identity 2-cell of a 1-cell.
    pub fn id2(&self, f: &Cell1) -> Result<Cell2> {
        let h = self.hom(&f.src0, &f.tgt0)?;
        Ok(Cell2 {
            src0: f.src0.clone(),
            tgt0: f.tgt0.clone(),
            src1: f.name.clone(),
            tgt1: f.name.clone(),
            name: h.identity(&f.name)?.to_string(),
        })
    }

    /// Vertical composite β∘α (α first).
    pub fn vcomp2(&self, beta: &Cell2, alpha: &Cell2) -> Result<Cell2> {
        if alpha.src0 != beta.src0 || alpha.tgt0 != beta.tgt0 || alpha.tgt1 != beta.src1 {
            return Err(Error::boundary(format!(
                "vcomp2: {} then {}",
                alpha.describe(),
                beta.describe()
            )));
        }
        let h = self.hom(&alpha.src0, &alpha.tgt0)?;
        let name = compose_morphisms(&h, &beta.name, &alpha.name)?;
        Ok(Cell2 {
            src0: alpha.src0.clone(),
            tgt0: alpha.tgt0.clone(),
            src1: alpha.src1.clone(),
            tgt1: beta.tgt1.clone(),
            name,
        })
    }

    /// Horizontal composite β★α (α the earlier cell).
    pub fn hcomp2(&self, beta: &Cell2, alpha: &Cell2) -> Result<Cell2> {
        if alpha.tgt0 != beta.src0 {
            return Err(Error::boundary(format!(
                "hcomp2: {} after {}",
                beta.describe(),
                alpha.describe()
            )));
        }
        let c = self.comp(&alpha.src0, &alpha.tgt0, &beta.tgt0)?;
        Ok(Cell2 {
            src0: alpha.src0.clone(),
            tgt0: beta.tgt0.clone(),
            src1: c
                .apply_obj(&render_tuple(&[&beta.src1, &alpha.src1]))?
                .to_string(),
            tgt1: c
                .apply_obj(&render_tuple(&[&beta.tgt1, &alpha.tgt1]))?
                .to_string(),
            name: c
                .apply_mor(&render_tuple(&[&beta.name, &alpha.name]))?
                .to_string(),
        })
    }

    /// Tensor of 2-cells (first argument is the left factor).
    pub fn tensor2(&self, a: &Cell2, b: &Cell2) -> Result<Cell2> {
        let t = self.tensor_hom((&a.src0, &a.tgt0), (&b.src0, &b.tgt0))?;
        Ok(Cell2 {
            src0: self.tensor0(&a.src0, &b.src0)?,
            tgt0: self.tensor0(&a.tgt0, &b.tgt0)?,
            src1: t
                .apply_obj(&render_tuple(&[&a.src1, &b.src1]))?
                .to_string(),
            tgt1: t
                .apply_obj(&render_tuple(&[&a.tgt1, &b.tgt1]))?
                .to_string(),
            name: t
                .apply_mor(&render_tuple(&[&a.name, &b.name]))?
                .to_string(),
        })
    }

    /// Inverse of an invertible 2-cell.
    pub fn inverse2(&self, alpha: &Cell2) -> Result<Cell2> {
        let h = self.hom(&alpha.src0, &alpha.tgt0)?;
        let name = h
            .inverse_of(&alpha.name)
            .ok_or_else(|| Error::invalid(format!("2-cell `{}` is not invertible", alpha.name)))?;
        Ok(Cell2 {
            src0: alpha.src0.clone(),
            tgt0: alpha.tgt0.clone(),
            src1: alpha.tgt1.clone(),
            tgt1: alpha.src1.clone(),
            name,
        })
    }
}

impl PasteHost for PermBase {
    fn id2(&self, f: &Cell1) -> Result<Cell2> {
        PermBase::id2(self, f)
    }
    fn vcomp2(&self, beta: &Cell2, alpha: &Cell2) -> Result<Cell2> {
        PermBase::vcomp2(self, beta, alpha)
    }
    fn hcomp2(&self, beta: &Cell2, alpha: &Cell2) -> Result<Cell2> {
        PermBase::hcomp2(self, beta, alpha)
    }
}

// ---------------------------------------------------------------------------
// Table bases

/// A permutative base given entirely by explicit tables.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct TableBase {
    pub two: TwoCategory,
    /// `(x, y)` → `x⊗y`.
    pub tensor0: BTreeMap<(String, String), String>,
    pub unit0: String,
    /// `((x, x'), (y, y'))` → tensor functor
    /// `hom(x,x') × hom(y,y') → hom(x⊗y, x'⊗y')`.
    pub tensor_hom: BTreeMap<((String, String), (String, String)), Functor>,
    /// `(x, y)` → name of the symmetry 1-cell `x⊗y → y⊗x`.
    pub symmetry: BTreeMap<(String, String), String>,
}

impl HomProvider for TableBase {
    fn zero_cells(&self) -> Vec<String> {
        self.two.zero_cells.iter().cloned().collect()
    }
    fn is_zero_cell(&self, x: &str) -> bool {
        self.two.zero_cells.contains(x)
    }
    fn hom(&self, x: &str, y: &str) -> Result<FinCategory> {
        self.two.hom(x, y).cloned()
    }
    fn comp(&self, x: &str, y: &str, z: &str) -> Result<Functor> {
        self.two.comp(x, y, z).cloned()
    }
    fn unit_one_cell(&self, x: &str) -> Result<String> {
        self.two
            .unit_one_cell
            .get(x)
            .cloned()
            .ok_or_else(|| Error::unresolved(format!("no identity 1-cell for `{x}`")))
    }
    fn tensor0(&self, x: &str, y: &str) -> Result<String> {
        self.tensor0
            .get(&(x.to_string(), y.to_string()))
            .cloned()
            .ok_or_else(|| Error::unresolved(format!("no tensor entry ({x}, {y})")))
    }
    fn unit0(&self) -> String {
        self.unit0.clone()
    }
    fn tensor_hom(&self, x: (&str, &str), y: (&str, &str)) -> Result<Functor> {
        self.tensor_hom
            .get(&(
                (x.0.to_string(), x.1.to_string()),
                (y.0.to_string(), y.1.to_string()),
            ))
            .cloned()
            .ok_or_else(|| {
                Error::unresolved(format!(
                    "no tensor functor for homs ({}, {}) and ({}, {})",
                    x.0, x.1, y.0, y.1
                ))
            })
    }
    fn symmetry(&self, x: &str, y: &str) -> Result<String> {
        self.symmetry
            .get(&(x.to_string(), y.to_string()))
            .cloned()
            .ok_or_else(|| Error::unresolved(format!("no symmetry entry ({x}, {y})")))
    }

    fn as_any(&self) -> &dyn std::any::Any {
        self
    }
}

/// Wrap explicit tables as a [`PermBase`] (validation is separate; see
/// [`validate_perm_base`]).
pub fn table_base(raw: TableBase) -> PermBase {
    PermBase::new(Arc::new(raw))
}

// ---------------------------------------------------------------------------
// Lazy functor-category base

/// A materialized hom category together with the structures behind its
/// cell names.  Cells get short hom-local names (`F0`, `F1`, … for
/// 1-cells, `N0`, `N1`, … for 2-cells) assigned in the canonical
/// enumeration order, so downstream tables never key on the full
/// assignment signatures.
struct HomEntry {
    hom: FinCategory,
    /// short 1-cell name → functor
    functors: BTreeMap<String, Functor>,
    /// short 2-cell name → natural transformation
    nattrans: BTreeMap<String, NatTransformation>,
    /// functor signature → short 1-cell name
    obj_ids: BTreeMap<String, String>,
    /// natural-transformation signature → short 2-cell name
    mor_ids: BTreeMap<String, String>,
}

#[derive(Default)]
struct FinCatCache {
    homs: BTreeMap<(String, String), Arc<HomEntry>>,
    comps: BTreeMap<(String, String, String), Functor>,
    tensors: BTreeMap<((String, String), (String, String)), Functor>,
}

/// The lazy base whose 0-cells are tensor words in a finite seed of
/// finite categories, with `hom(X, Y)` the functor category, tensor
/// the cartesian product, and symmetry the factor-swap functor.
/// Hom categories are materialized on demand by exhaustive enumeration
/// under the configured caps.  Enumerated functors and natural
/// transformations get deterministic short names (`F{i}` / `N{j}` in
/// canonical enumeration order of their hom category); the full
/// structures are recoverable via [`FinCatBase::functor_named`] and
/// [`FinCatBase::nattrans_named`].
pub struct FinCatBase {
    seeds: BTreeMap<String, FinCategory>,
    caps: Caps,
    cache: Mutex<FinCatCache>,
}

impl FinCatBase {
    /// Resolve a 0-cell name (a tensor word over the seeds) to its
    /// category.
    pub fn category_of(&self, x: &str) -> Result<FinCategory> {
        let mut factors = Vec::new();
        for part in tuple_components(x) {
            let c = self
                .seeds
                .get(&part)
                .ok_or_else(|| Error::unresolved(format!("0-cell component `{part}` is not a seed")))?;
            factors.push(c.clone());
        }
        Ok(product_category(&factors))
    }

    /// The functor behind a 1-cell name of `hom(x, y)`.
    pub fn functor_named(&self, x: &str, y: &str, name: &str) -> Result<Functor> {
        let entry = self.materialize_hom(x, y)?;
        entry
            .functors
            .get(name)
            .cloned()
            .ok_or_else(|| Error::unresolved(format!("unknown 1-cell `{name}` in hom({x}, {y})")))
    }

    /// The natural transformation behind a 2-cell name of `hom(x, y)`.
    pub fn nattrans_named(&self, x: &str, y: &str, name: &str) -> Result<NatTransformation> {
        let entry = self.materialize_hom(x, y)?;
        entry
            .nattrans
            .get(name)
            .cloned()
            .ok_or_else(|| Error::unresolved(format!("unknown 2-cell `{name}` in hom({x}, {y})")))
    }

    /// The 1-cell name of a functor in `hom(x, y)` (which must be one
    /// of the enumerated functors).
    pub fn name_of_functor(&self, x: &str, y: &str, f: &Functor) -> Result<String> {
        let entry = self.materialize_hom(x, y)?;
        entry
            .obj_ids
            .get(&f.signature())
            .cloned()
            .ok_or_else(|| Error::unresolved(format!("functor is not a 1-cell of hom({x}, {y})")))
    }

    /// The 2-cell name of a natural transformation in `hom(x, y)`.
    pub fn name_of_nattrans(&self, x: &str, y: &str, n: &NatTransformation) -> Result<String> {
        let entry = self.materialize_hom(x, y)?;
        entry
            .mor_ids
            .get(&n.signature())
            .cloned()
            .ok_or_else(|| {
                Error::unresolved(format!("transformation is not a 2-cell of hom({x}, {y})"))
            })
    }

    /// Materialize (and cache) the functor category `hom(x, y)`.
    fn materialize_hom(&self, x: &str, y: &str) -> Result<Arc<HomEntry>> {
        let key = (x.to_string(), y.to_string());
        if let Some(e) = self.cache.lock().unwrap().homs.get(&key) {
            return Ok(e.clone());
        }
        let cx = self.category_of(x)?;
        let cy = self.category_of(y)?;
        let functors = enumerate_functors(&cx, &cy, &self.caps)?;
        self.caps
            .admit_category(&format!("hom({x}, {y}) objects"), functors.len(), 0)?;

        let mut entry = HomEntry {
            hom: FinCategory {
                objects: Default::default(),
                morphisms: BTreeMap::new(),
                identity_of: BTreeMap::new(),
                compose_table: BTreeMap::new(),
            },
            functors: BTreeMap::new(),
            nattrans: BTreeMap::new(),
            obj_ids: BTreeMap::new(),
            mor_ids: BTreeMap::new(),
        };
        let mut fnames = Vec::with_capacity(functors.len());
        for (i, f) in functors.iter().enumerate() {
            let name = format!("F{i}");
            entry.hom.objects.insert(name.clone());
            entry.obj_ids.insert(f.signature(), name.clone());
            entry.functors.insert(name.clone(), f.clone());
            fnames.push(name);
        }
        let mut nats: Vec<(String, NatTransformation)> = Vec::new();
        let mut j = 0usize;
        for (fi, f) in functors.iter().enumerate() {
            for (gi, g) in functors.iter().enumerate() {
                for n in enumerate_nattrans(f, g, &self.caps)? {
                    let name = format!("N{j}");
                    j += 1;
                    entry.hom.morphisms.insert(
                        name.clone(),
                        MorInfo {
                            src: fnames[fi].clone(),
                            tgt: fnames[gi].clone(),
                        },
                    );
                    entry.mor_ids.insert(n.signature(), name.clone());
                    entry.nattrans.insert(name.clone(), n.clone());
                    nats.push((name, n));
                }
            }
        }
        for (fi, f) in functors.iter().enumerate() {
            let id_sig = identity_nattrans(f).signature();
            let id_name = entry.mor_ids.get(&id_sig).ok_or_else(|| {
                Error::invalid(format!(
                    "identity transformation escaped the enumerated hom({x}, {y})"
                ))
            })?;
            entry
                .hom
                .identity_of
                .insert(fnames[fi].clone(), id_name.clone());
        }
        self.caps.admit_category(
            &format!("hom({x}, {y})"),
            entry.hom.objects.len(),
            entry.hom.morphisms.len(),
        )?;
        for (bn, b) in &nats {
            for (an, a) in &nats {
                if a.target == b.source {
                    let ba = vcomp_nattrans(b, a)?;
                    let name = entry.mor_ids.get(&ba.signature()).ok_or_else(|| {
                        Error::invalid(format!(
                            "vertical composite escaped the enumerated hom({x}, {y})"
                        ))
                    })?;
                    entry
                        .hom
                        .compose_table
                        .insert((bn.clone(), an.clone()), name.clone());
                }
            }
        }
        let entry = Arc::new(entry);
        self.cache.lock().unwrap().homs.insert(key, entry.clone());
        Ok(entry)
    }
}

impl HomProvider for FinCatBase {
    fn zero_cells(&self) -> Vec<String> {
        self.seeds.keys().cloned().collect()
    }

    fn is_zero_cell(&self, x: &str) -> bool {
        x == "()" || tuple_components(x).iter().all(|p| self.seeds.contains_key(p))
    }

    fn hom(&self, x: &str, y: &str) -> Result<FinCategory> {
        Ok(self.materialize_hom(x, y)?.hom.clone())
    }

    fn comp(&self, x: &str, y: &str, z: &str) -> Result<Functor> {
        let key = (x.to_string(), y.to_string(), z.to_string());
        if let Some(c) = self.cache.lock().unwrap().comps.get(&key) {
            return Ok(c.clone());
        }
        let eyz = self.materialize_hom(y, z)?;
        let exy = self.materialize_hom(x, y)?;
        let exz = self.materialize_hom(x, z)?;
        let source = product_category(&[eyz.hom.clone(), exy.hom.clone()]);

        let mut obj_map = BTreeMap::new();
        let mut mor_map = BTreeMap::new();
        for (gn, g) in &eyz.functors {
            for (fn_, f) in &exy.functors {
                let gf = compose_functor_pair(g, f)?;
                let name = exz.obj_ids.get(&gf.signature()).ok_or_else(|| {
                    Error::invalid(format!("composite 1-cell escaped hom({x}, {z})"))
                })?;
                obj_map.insert(render_tuple(&[gn, fn_]), name.clone());
            }
        }
        for (bn, b) in &eyz.nattrans {
            for (an, a) in &exy.nattrans {
                let ba = hcomp_nattrans(b, a)?;
                let name = exz.mor_ids.get(&ba.signature()).ok_or_else(|| {
                    Error::invalid(format!("composite 2-cell escaped hom({x}, {z})"))
                })?;
                mor_map.insert(render_tuple(&[bn, an]), name.clone());
            }
        }
        let c = Functor {
            source,
            target: exz.hom.clone(),
            obj_map,
            mor_map,
        };
        self.cache.lock().unwrap().comps.insert(key, c.clone());
        Ok(c)
    }

    fn unit_one_cell(&self, x: &str) -> Result<String> {
        let idf = identity_functor(&self.category_of(x)?);
        self.name_of_functor(x, x, &idf)
    }

    fn tensor0(&self, x: &str, y: &str) -> Result<String> {
        if !self.is_zero_cell(x) || !self.is_zero_cell(y) {
            return Err(Error::unresolved(format!(
                "tensor0: `{x}` or `{y}` is not a 0-cell"
            )));
        }
        Ok(render_tuple(&[x, y]))
    }

    fn unit0(&self) -> String {
        "()".to_string()
    }

    fn tensor_hom(&self, x: (&str, &str), y: (&str, &str)) -> Result<Functor> {
        let key = (
            (x.0.to_string(), x.1.to_string()),
            (y.0.to_string(), y.1.to_string()),
        );
        if let Some(t) = self.cache.lock().unwrap().tensors.get(&key) {
            return Ok(t.clone());
        }
        let ex = self.materialize_hom(x.0, x.1)?;
        let ey = self.materialize_hom(y.0, y.1)?;
        let et = self.materialize_hom(&self.tensor0(x.0, y.0)?, &self.tensor0(x.1, y.1)?)?;
        let source = product_category(&[ex.hom.clone(), ey.hom.clone()]);
        let mut obj_map = BTreeMap::new();
        let mut mor_map = BTreeMap::new();
        for (fn_, f) in &ex.functors {
            for (gn, g) in &ey.functors {
                let fg = product_functor(&[f.clone(), g.clone()]);
                let name = et.obj_ids.get(&fg.signature()).ok_or_else(|| {
                    Error::invalid("tensor 1-cell escaped the materialized hom".to_string())
                })?;
                obj_map.insert(render_tuple(&[fn_, gn]), name.clone());
            }
        }
        for (an, a) in &ex.nattrans {
            for (bn, b) in &ey.nattrans {
                let ab = product_nattrans(&[a.clone(), b.clone()]);
                let name = et.mor_ids.get(&ab.signature()).ok_or_else(|| {
                    Error::invalid("tensor 2-cell escaped the materialized hom".to_string())
                })?;
                mor_map.insert(render_tuple(&[an, bn]), name.clone());
            }
        }
        let t = Functor {
            source,
            target: et.hom.clone(),
            obj_map,
            mor_map,
        };
        self.cache.lock().unwrap().tensors.insert(key, t.clone());
        Ok(t)
    }

    fn symmetry(&self, x: &str, y: &str) -> Result<String> {
        let xs: Vec<FinCategory> = tuple_components(x)
            .iter()
            .chain(tuple_components(y).iter())
            .map(|p| {
                self.seeds
                    .get(p)
                    .cloned()
                    .ok_or_else(|| Error::unresolved(format!("component `{p}` is not a seed")))
            })
            .collect::<Result<_>>()?;
        let nx = tuple_components(x).len();
        let n = xs.len();
        let perm: Vec<usize> = (nx..n).chain(0..nx).collect();
        let swap = permutation_functor(&xs, &perm);
        self.name_of_functor(&self.tensor0(x, y)?, &self.tensor0(y, x)?, &swap)
    }

    fn as_any(&self) -> &dyn std::any::Any {
        self
    }
}

/// Build the lazy functor-category base over named seed categories.
/// Seed names must be atomic; seed categories are validated eagerly.
pub fn fincat_base(seeds: &[(&str, FinCategory)], caps: Caps) -> Result<PermBase> {
    let mut map = BTreeMap::new();
    for (name, c) in seeds {
        crate::fincat::check_ident(name)?;
        if tuple_components(name).len() != 1 {
            return Err(Error::invalid(format!("seed name `{name}` must be atomic")));
        }
        let c = validate_category(c.clone())
            .map_err(|e| Error::invalid(format!("seed `{name}`: {e}")))?;
        if map.insert(name.to_string(), c).is_some() {
            return Err(Error::invalid(format!("duplicate seed name `{name}`")));
        }
    }
    Ok(PermBase::new(Arc::new(FinCatBase {
        seeds: map,
        caps,
        cache: Mutex::new(FinCatCache::default()),
    })))
}

// ---------------------------------------------------------------------------
// Validation

/// Run a sub-check, treating a size-cap refusal as a skip (lazy bases
/// may be unable to materialize some instances under the caps).
fn guarded(r: Result<()>) -> Result<()> {
    match r {
        Err(Error::CapExceeded(_)) => Ok(()),
        other => other,
    }
}

/// Validate all permutative-base invariants over the probe set of
/// 0-cells: hom categories are categories; composition functors are
/// functorial, strictly associative and strictly unital; the tensor is
/// strictly associative and unital on 0-cells and 1-cells, functorial,
/// and satisfies strict interchange with composition; the symmetry is
/// strictly natural, involutive, and satisfies the strict hexagon.
///
/// For table bases the probe set is everything and the check is
/// exhaustive.  For lazy bases, instances whose materialization would
/// exceed the caps are skipped.
pub fn validate_perm_base(base: &PermBase, _caps: &Caps) -> Result<()> {
    let probe = base.zero_cells();
    let p = &probe;

    // Hom categories and composition functors.
    for x in p {
        for y in p {
            guarded(
                base.hom(x, y)
                    .and_then(|h| validate_category((*h).clone()))
                    .map(|_| ())
                    .map_err(|e| match e {
                        Error::CapExceeded(m) => Error::CapExceeded(m),
                        e => Error::invalid(format!("hom({x}, {y}): {e}")),
                    }),
            )?;
        }
    }
    for x in p {
        for y in p {
            for z in p {
                guarded((|| {
                    let c = base.comp(x, y, z)?;
                    let hyz = base.hom(y, z)?;
                    let hxy = base.hom(x, y)?;
                    let hxz = base.hom(x, z)?;
                    if c.source != product_category(&[(*hyz).clone(), (*hxy).clone()])
                        || c.target != *hxz
                    {
                        return Err(Error::invalid(format!(
                            "comp({x}, {y}, {z}) has wrong boundaries"
                        )));
                    }
                    validate_functor((*c).clone())
                        .map_err(|e| Error::invalid(format!("comp({x}, {y}, {z}): {e}")))?;
                    Ok(())
                })())?;
            }
        }
    }
    // Strict units for composition.
    for x in p {
        for y in p {
            guarded((|| {
                let h = base.hom(x, y)?;
                let ux = base.id1(x)?;
                let uy = base.id1(y)?;
                for f in &h.objects {
                    let cell = Cell1::new(x.clone(), y.clone(), f.clone());
                    if base.compose1(&uy, &cell)?.name != *f {
                        return Err(Error::invalid(format!("left unit fails on `{f}`")));
                    }
                    if base.compose1(&cell, &ux)?.name != *f {
                        return Err(Error::invalid(format!("right unit fails on `{f}`")));
                    }
                }
                Ok(())
            })())?;
        }
    }
    // Strict associativity of composition (1-cells and 2-cells).
    for x in p {
        for y in p {
            for z in p {
                for w in p {
                    guarded((|| {
                        let c_xyz = base.comp(x, y, z)?;
                        let c_yzw = base.comp(y, z, w)?;
                        let c_xyw = base.comp(x, y, w)?;
                        let c_xzw = base.comp(x, z, w)?;
                        let hxy = base.hom(x, y)?;
                        let hyz = base.hom(y, z)?;
                        let hzw = base.hom(z, w)?;
                        for h in &hzw.objects {
                            for g in &hyz.objects {
                                for f in &hxy.objects {
                                    let hg = c_yzw.apply_obj(&render_tuple(&[h, g]))?.to_string();
                                    let gf = c_xyz.apply_obj(&render_tuple(&[g, f]))?.to_string();
                                    if c_xyw.apply_obj(&render_tuple(&[&hg, f]))?
                                        != c_xzw.apply_obj(&render_tuple(&[h, &gf]))?
                                    {
                                        return Err(Error::invalid(format!(
                                            "1-cell associativity fails on ({h}, {g}, {f})"
                                        )));
                                    }
                                }
                            }
                        }
                        for c in hzw.morphisms.keys() {
                            for b in hyz.morphisms.keys() {
                                for a in hxy.morphisms.keys() {
                                    let cb = c_yzw.apply_mor(&render_tuple(&[c, b]))?.to_string();
                                    let ba = c_xyz.apply_mor(&render_tuple(&[b, a]))?.to_string();
                                    if c_xyw.apply_mor(&render_tuple(&[&cb, a]))?
                                        != c_xzw.apply_mor(&render_tuple(&[c, &ba]))?
                                    {
                                        return Err(Error::invalid(format!(
                                            "2-cell associativity fails on ({c}, {b}, {a})"
                                        )));
                                    }
                                }
                            }
                        }
                        Ok(())
                    })())?;
                }
            }
        }
    }
    // Tensor on 0-cells: strictly associative and unital.
    let u = base.unit0();
    for x in p {
        guarded((|| {
            if base.tensor0(&u, x)? != *x || base.tensor0(x, &u)? != *x {
                return Err(Error::invalid(format!("tensor unit fails on 0-cell `{x}`")));
            }
            Ok(())
        })())?;
        for y in p {
            for z in p {
                guarded((|| {
                    let xy = base.tensor0(x, y)?;
                    let yz = base.tensor0(y, z)?;
                    if base.tensor0(&xy, z)? != base.tensor0(x, &yz)? {
                        return Err(Error::invalid(format!(
                            "tensor associativity fails on 0-cells ({x}, {y}, {z})"
                        )));
                    }
                    Ok(())
                })())?;
            }
        }
    }
    // Tensor functors: boundaries, functoriality, strict unit on
    // 1-cells, and strict interchange with composition.
    for x in p {
        for x2 in p {
            for y in p {
                for y2 in p {
                    guarded((|| {
                        let t = base.tensor_hom((x, x2), (y, y2))?;
                        let hx = base.hom(x, x2)?;
                        let hy = base.hom(y, y2)?;
                        let target = base.hom(&base.tensor0(x, y)?, &base.tensor0(x2, y2)?)?;
                        if t.source != product_category(&[(*hx).clone(), (*hy).clone()])
                            || t.target != *target
                        {
                            return Err(Error::invalid(format!(
                                "tensor functor ({x}, {x2}) × ({y}, {y2}) has wrong boundaries"
                            )));
                        }
                        validate_functor((*t).clone()).map_err(|e| {
                            Error::invalid(format!(
                                "tensor functor ({x}, {x2}) × ({y}, {y2}): {e}"
                            ))
                        })?;
                        Ok(())
                    })())?;
                }
            }
        }
    }
    for x in p {
        for y in p {
            guarded((|| {
                let h = base.hom(x, y)?;
                let uu = base.id1(&u)?;
                for f in &h.objects {
                    let cell = Cell1::new(x.clone(), y.clone(), f.clone());
                    if base.tensor1(&uu, &cell)?.name != *f
                        || base.tensor1(&cell, &uu)?.name != *f
                    {
                        return Err(Error::invalid(format!(
                            "tensor unit fails on 1-cell `{f}`"
                        )));
                    }
                }
                Ok(())
            })())?;
        }
    }
    // Strict interchange: (g∘f) ⊗ (g'∘f') == (g⊗g') ∘ (f⊗f') on 1-cells.
    for x in p {
        for y in p {
            for z in p {
                for x2 in p {
                    for y2 in p {
                        for z2 in p {
                            guarded((|| {
                                let hxy = base.hom(x, y)?;
                                let hyz = base.hom(y, z)?;
                                let hxy2 = base.hom(x2, y2)?;
                                let hyz2 = base.hom(y2, z2)?;
                                for g in &hyz.objects {
                                    let g = Cell1::new(y.clone(), z.clone(), g.clone());
                                    for f in &hxy.objects {
                                        let f = Cell1::new(x.clone(), y.clone(), f.clone());
                                        for g2 in &hyz2.objects {
                                            let g2 =
                                                Cell1::new(y2.clone(), z2.clone(), g2.clone());
                                            for f2 in &hxy2.objects {
                                                let f2 = Cell1::new(
                                                    x2.clone(),
                                                    y2.clone(),
                                                    f2.clone(),
                                                );
                                                let lhs = base.tensor1(
                                                    &base.compose1(&g, &f)?,
                                                    &base.compose1(&g2, &f2)?,
                                                )?;
                                                let rhs = base.compose1(
                                                    &base.tensor1(&g, &g2)?,
                                                    &base.tensor1(&f, &f2)?,
                                                )?;
                                                if lhs != rhs {
                                                    return Err(Error::invalid(format!(
                                                        "tensor/composition interchange fails on ({}, {}) ⊗ ({}, {})",
                                                        g.name, f.name, g2.name, f2.name
                                                    )));
                                                }
                                            }
                                        }
                                    }
                                }
                                Ok(())
                            })())?;
                        }
                    }
                }
            }
        }
    }
    // Tensor strictly associative on 1-cells.
    for x in p {
        for y in p {
            for z in p {
                guarded((|| {
                    let hx = base.hom(x, x)?;
                    let hy = base.hom(y, y)?;
                    let hz = base.hom(z, z)?;
                    for f in &hx.objects {
                        let f = Cell1::new(x.clone(), x.clone(), f.clone());
                        for g in &hy.objects {
                            let g = Cell1::new(y.clone(), y.clone(), g.clone());
                            for h in &hz.objects {
                                let h = Cell1::new(z.clone(), z.clone(), h.clone());
                                let lhs = base.tensor1(&base.tensor1(&f, &g)?, &h)?;
                                let rhs = base.tensor1(&f, &base.tensor1(&g, &h)?)?;
                                if lhs != rhs {
                                    return Err(Error::invalid(format!(
                                        "tensor associativity fails on 1-cells ({}, {}, {})",
                                        f.name, g.name, h.name
                                    )));
                                }
                            }
                        }
                    }
                    Ok(())
                })())?;
            }
        }
    }
    // Symmetry: boundaries, naturality (1-cells and 2-cells),
    // involution, hexagon.
    for x in p {
        for y in p {
            guarded((|| {
                let r = base.symmetry1(x, y)?;
                let r_back = base.symmetry1(y, x)?;
                if base.compose1(&r_back, &r)? != base.id1(&base.tensor0(x, y)?)? {
                    return Err(Error::invalid(format!(
                        "symmetry involution fails on ({x}, {y})"
                    )));
                }
                Ok(())
            })())?;
        }
    }
    for x in p {
        for x2 in p {
            for y in p {
                for y2 in p {
                    guarded((|| {
                        let hx = base.hom(x, x2)?;
                        let hy = base.hom(y, y2)?;
                        let r_src = base.symmetry1(x, y)?;
                        let r_tgt = base.symmetry1(x2, y2)?;
                        for f in &hx.objects {
                            let f = Cell1::new(x.clone(), x2.clone(), f.clone());
                            for g in &hy.objects {
                                let g = Cell1::new(y.clone(), y2.clone(), g.clone());
                                let lhs = base.compose1(&r_tgt, &base.tensor1(&f, &g)?)?;
                                let rhs = base.compose1(&base.tensor1(&g, &f)?, &r_src)?;
                                if lhs != rhs {
                                    return Err(Error::invalid(format!(
                                        "symmetry naturality fails on 1-cells ({}, {})",
                                        f.name, g.name
                                    )));
                                }
                            }
                        }
                        // 2-cell naturality: id2(R') ⋆ (α⊗β) == (β⊗α) ⋆ id2(R).
                        for a in hx.morphisms.keys() {
                            let a = cell2_of(&hx, x, x2, a)?;
                            for b in hy.morphisms.keys() {
                                let b = cell2_of(&hy, y, y2, b)?;
                                let lhs =
                                    base.hcomp2(&base.id2(&r_tgt)?, &base.tensor2(&a, &b)?)?;
                                let rhs =
                                    base.hcomp2(&base.tensor2(&b, &a)?, &base.id2(&r_src)?)?;
                                if lhs != rhs {
                                    return Err(Error::invalid(format!(
                                        "symmetry naturality fails on 2-cells ({}, {})",
                                        a.name, b.name
                                    )));
                                }
                            }
                        }
                        Ok(())
                    })())?;
                }
            }
        }
    }
    for x in p {
        for y in p {
            for z in p {
                guarded((|| {
                    let yz = base.tensor0(y, z)?;
                    let lhs = base.symmetry1(x, &yz)?;
                    let step1 = base.tensor1(&base.symmetry1(x, y)?, &base.id1(z)?)?;
                    let step2 = base.tensor1(&base.id1(y)?, &base.symmetry1(x, z)?)?;
                    let rhs = base.compose1(&step2, &step1)?;
                    if lhs != rhs {
                        return Err(Error::invalid(format!(
                            "symmetry hexagon fails on ({x}, {y}, {z})"
                        )));
                    }
                    Ok(())
                })())?;
            }
        }
    }
    Ok(())
}

fn cell2_of(h: &FinCategory, x: &str, y: &str, name: &str) -> Result<Cell2> {
    Ok(Cell2 {
        src0: x.to_string(),
        tgt0: y.to_string(),
        src1: h.src(name)?.to_string(),
        tgt1: h.tgt(name)?.to_string(),
        name: name.to_string(),
    })
}
