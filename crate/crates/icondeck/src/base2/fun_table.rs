//! An explicitly tabulated permutative base living inside the functor
//! 2-category.
//!
//! [`fincat_base`](super::fincat_base) materializes hom categories by
//! exhaustive enumeration, which is hopeless as soon as a seed category
//! has more than a couple of morphisms (the functor category out of a
//! four-fold tensor word grows doubly exponentially).  A
//! [`FunctorTableBase`] instead serves hom categories that contain
//! exactly the functors and natural transformations a caller
//! registered, closed under vertical composition, inversion, and
//! identities.  Every registered cell keeps its concrete value, so the
//! axiom checkers can evaluate pasting diagrams on values without ever
//! touching an unregistered cell.
//!
//! The composition and tensor functors served by the provider are
//! partial: they cover exactly the registered pairs whose composite is
//! itself registered.  Boundary computations on the registered cells
//! stay inside that fragment by construction; a lookup outside it is
//! reported as an unresolved-name error rather than silently enlarging
//! the tables.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fincat::{
    check_ident, compose_functor_pair, hcomp_nattrans, identity_functor, identity_nattrans,
    invert_nattrans, product_category, product_functor, product_nattrans, render_tuple,
    tuple_components, validate_category, validate_functor, validate_nattrans, vcomp_nattrans,
    FinCategory, Functor, MorInfo, NatTransformation,
};

use super::perm_base::{FinCatBase, HomProvider, PermBase};

/// Largest number of 2-cells a single tabulated hom may reach while
/// being closed under vertical composition.
const CLOSURE_GUARD: usize = 4096;

/// Resolution of named cells of a base to their concrete values in the
/// functor 2-category.  Implemented by every base whose cells *are*
/// functors and natural transformations; the enriched axiom checkers
/// use it to evaluate pasting diagrams on values.
pub trait CellResolver {
    /// The category a 0-cell word denotes.
    fn category_of(&self, x: &str) -> Result<FinCategory>;
    /// The functor behind a 1-cell name of `hom(x, y)`.
    fn functor_named(&self, x: &str, y: &str, name: &str) -> Result<Functor>;
    /// The natural transformation behind a 2-cell name of `hom(x, y)`.
    fn nattrans_named(&self, x: &str, y: &str, name: &str) -> Result<NatTransformation>;
}

impl CellResolver for FinCatBase {
    fn category_of(&self, x: &str) -> Result<FinCategory> {
        FinCatBase::category_of(self, x)
    }
    fn functor_named(&self, x: &str, y: &str, name: &str) -> Result<Functor> {
        FinCatBase::functor_named(self, x, y, name)
    }
    fn nattrans_named(&self, x: &str, y: &str, name: &str) -> Result<NatTransformation> {
        FinCatBase::nattrans_named(self, x, y, name)
    }
}

/// The value-resolving view of a base, when its provider has one.
pub fn value_resolver(base: &PermBase) -> Option<&dyn CellResolver> {
    let any = base.provider().as_any();
    if let Some(fb) = any.downcast_ref::<FinCatBase>() {
        return Some(fb);
    }
    if let Some(tb) = any.downcast_ref::<FunctorTableBase>() {
        return Some(tb);
    }
    None
}

#[derive(Default)]
struct HomTable {
    functors: BTreeMap<String, Functor>,
    nattrans: BTreeMap<String, NatTransformation>,
    /// functor signature → 1-cell name
    obj_ids: BTreeMap<String, String>,
    /// natural-transformation signature → 2-cell name
    mor_ids: BTreeMap<String, String>,
}

impl HomTable {
    fn next_functor_name(&self) -> String {
        format!("F{}", self.functors.len())
    }
    fn next_nattrans_name(&self) -> String {
        format!("N{}", self.nattrans.len())
    }
}

/// Incremental construction of a [`FunctorTableBase`].  Register the
/// cells the enriched data will name (plus the composites and tensors
/// its boundary expressions pass through), then [`finish`] to close
/// each hom under identities, inverses, and vertical composition.
///
/// [`finish`]: FunctorTableBuilder::finish
pub struct FunctorTableBuilder {
    seeds: BTreeMap<String, FinCategory>,
    homs: BTreeMap<(String, String), HomTable>,
}

impl FunctorTableBuilder {
    pub fn new(seeds: &[(&str, FinCategory)]) -> Result<FunctorTableBuilder> {
        let mut map = BTreeMap::new();
        for (name, c) in seeds {
            check_ident(name)?;
            if tuple_components(name).len() != 1 {
                return Err(Error::invalid(format!("seed name `{name}` must be atomic")));
            }
            let c = validate_category(c.clone())
                .map_err(|e| Error::invalid(format!("seed `{name}`: {e}")))?;
            if map.insert(name.to_string(), c).is_some() {
                return Err(Error::invalid(format!("duplicate seed name `{name}`")));
            }
        }
        Ok(FunctorTableBuilder {
            seeds: map,
            homs: BTreeMap::new(),
        })
    }

    /// The category a 0-cell word denotes.
    pub fn category_of(&self, x: &str) -> Result<FinCategory> {
        word_category(&self.seeds, x)
    }

    /// Register a functor as a 1-cell of `hom(x, y)`; returns its name.
    /// Registering the same value twice returns the existing name.
    pub fn add_functor(&mut self, x: &str, y: &str, f: Functor) -> Result<String> {
        let cx = self.category_of(x)?;
        let cy = self.category_of(y)?;
        if f.source != cx || f.target != cy {
            return Err(Error::boundary(format!(
                "functor boundaries do not match hom({x}, {y})"
            )));
        }
        let f = validate_functor(f)?;
        let tbl = self.homs.entry((x.to_string(), y.to_string())).or_default();
        if let Some(name) = tbl.obj_ids.get(&f.signature()) {
            return Ok(name.clone());
        }
        let name = tbl.next_functor_name();
        tbl.obj_ids.insert(f.signature(), name.clone());
        tbl.functors.insert(name.clone(), f);
        Ok(name)
    }

    /// Register a natural transformation as a 2-cell of `hom(x, y)`;
    /// its boundary functors are registered along with it, and its
    /// inverse when it has one.  Returns the 2-cell name.
    pub fn add_nattrans(&mut self, x: &str, y: &str, n: NatTransformation) -> Result<String> {
        let n = validate_nattrans(n)?;
        self.add_functor(x, y, n.source.clone())?;
        self.add_functor(x, y, n.target.clone())?;
        let name = self.insert_nattrans(x, y, n.clone());
        if let Ok(inv) = invert_nattrans(&n) {
            self.insert_nattrans(x, y, inv);
        }
        Ok(name)
    }

    fn insert_nattrans(&mut self, x: &str, y: &str, n: NatTransformation) -> String {
        let tbl = self.homs.entry((x.to_string(), y.to_string())).or_default();
        if let Some(name) = tbl.mor_ids.get(&n.signature()) {
            return name.clone();
        }
        let name = tbl.next_nattrans_name();
        tbl.mor_ids.insert(n.signature(), name.clone());
        tbl.nattrans.insert(name.clone(), n);
        name
    }

    /// Close every hom and build the base.
    pub fn finish(mut self) -> Result<PermBase> {
        // Identity 1-cells for every word that bounds a registered hom.
        let mut words: Vec<String> = Vec::new();
        for (x, y) in self.homs.keys() {
            words.push(x.clone());
            words.push(y.clone());
        }
        for w in words {
            let idf = identity_functor(&self.category_of(&w)?);
            self.add_functor(&w, &w, idf)?;
        }

        let mut snapshots = BTreeMap::new();
        for ((x, y), tbl) in &mut self.homs {
            // Identity 2-cells, then closure under vertical composition.
            let ids: Vec<NatTransformation> =
                tbl.functors.values().map(identity_nattrans).collect();
            for n in ids {
                insert_into(tbl, n);
            }
            loop {
                let current: Vec<NatTransformation> = tbl.nattrans.values().cloned().collect();
                let before = current.len();
                for b in &current {
                    for a in &current {
                        if a.target == b.source {
                            insert_into(tbl, vcomp_nattrans(b, a)?);
                        }
                    }
                }
                if tbl.nattrans.len() > CLOSURE_GUARD {
                    return Err(Error::cap(format!(
                        "hom({x}, {y}): vertical-composition closure exceeds {CLOSURE_GUARD} cells"
                    )));
                }
                if tbl.nattrans.len() == before {
                    break;
                }
            }
            snapshots.insert((x.clone(), y.clone()), snapshot_of(tbl)?);
        }

        Ok(PermBase::new(Arc::new(FunctorTableBase {
            seeds: self.seeds,
            homs: self.homs,
            snapshots,
        })))
    }
}

fn insert_into(tbl: &mut HomTable, n: NatTransformation) {
    if tbl.mor_ids.contains_key(&n.signature()) {
        return;
    }
    let name = tbl.next_nattrans_name();
    tbl.mor_ids.insert(n.signature(), name.clone());
    tbl.nattrans.insert(name, n);
}

fn word_category(seeds: &BTreeMap<String, FinCategory>, x: &str) -> Result<FinCategory> {
    let mut factors = Vec::new();
    for part in tuple_components(x) {
        let c = seeds
            .get(&part)
            .ok_or_else(|| Error::unresolved(format!("0-cell component `{part}` is not a seed")))?;
        factors.push(c.clone());
    }
    Ok(product_category(&factors))
}

fn snapshot_of(tbl: &HomTable) -> Result<FinCategory> {
    let mut hom = FinCategory {
        objects: Default::default(),
        morphisms: BTreeMap::new(),
        identity_of: BTreeMap::new(),
        compose_table: BTreeMap::new(),
    };
    for name in tbl.functors.keys() {
        hom.objects.insert(name.clone());
    }
    let functor_name = |f: &Functor| -> Result<String> {
        tbl.obj_ids
            .get(&f.signature())
            .cloned()
            .ok_or_else(|| Error::invalid("boundary functor escaped the tabulated hom".to_string()))
    };
    for (name, n) in &tbl.nattrans {
        hom.morphisms.insert(
            name.clone(),
            MorInfo {
                src: functor_name(&n.source)?,
                tgt: functor_name(&n.target)?,
            },
        );
    }
    for (fname, f) in &tbl.functors {
        let id_sig = identity_nattrans(f).signature();
        let id_name = tbl.mor_ids.get(&id_sig).ok_or_else(|| {
            Error::invalid("identity transformation escaped the tabulated hom".to_string())
        })?;
        hom.identity_of.insert(fname.clone(), id_name.clone());
    }
    for (bn, b) in &tbl.nattrans {
        for (an, a) in &tbl.nattrans {
            if a.target == b.source {
                let ba = vcomp_nattrans(b, a)?;
                let name = tbl.mor_ids.get(&ba.signature()).ok_or_else(|| {
                    Error::invalid("vertical composite escaped the tabulated hom".to_string())
                })?;
                hom.compose_table
                    .insert((bn.clone(), an.clone()), name.clone());
            }
        }
    }
    validate_category(hom)
}

/// A permutative base whose hom categories are the tabulated fragments
/// built by a [`FunctorTableBuilder`].
pub struct FunctorTableBase {
    seeds: BTreeMap<String, FinCategory>,
    homs: BTreeMap<(String, String), HomTable>,
    snapshots: BTreeMap<(String, String), FinCategory>,
}

impl FunctorTableBase {
    fn table(&self, x: &str, y: &str) -> Result<&HomTable> {
        self.homs
            .get(&(x.to_string(), y.to_string()))
            .ok_or_else(|| Error::unresolved(format!("hom({x}, {y}) is not tabulated")))
    }

    /// The 1-cell name of a registered functor of `hom(x, y)`.
    pub fn name_of_functor(&self, x: &str, y: &str, f: &Functor) -> Result<String> {
        self.table(x, y)?
            .obj_ids
            .get(&f.signature())
            .cloned()
            .ok_or_else(|| Error::unresolved(format!("functor is not a 1-cell of hom({x}, {y})")))
    }

    /// The 2-cell name of a registered natural transformation.
    pub fn name_of_nattrans(&self, x: &str, y: &str, n: &NatTransformation) -> Result<String> {
        self.table(x, y)?
            .mor_ids
            .get(&n.signature())
            .cloned()
            .ok_or_else(|| {
                Error::unresolved(format!("transformation is not a 2-cell of hom({x}, {y})"))
            })
    }
}

impl CellResolver for FunctorTableBase {
    fn category_of(&self, x: &str) -> Result<FinCategory> {
        word_category(&self.seeds, x)
    }

    fn functor_named(&self, x: &str, y: &str, name: &str) -> Result<Functor> {
        self.table(x, y)?
            .functors
            .get(name)
            .cloned()
            .ok_or_else(|| Error::unresolved(format!("unknown 1-cell `{name}` in hom({x}, {y})")))
    }

    fn nattrans_named(&self, x: &str, y: &str, name: &str) -> Result<NatTransformation> {
        self.table(x, y)?
            .nattrans
            .get(name)
            .cloned()
            .ok_or_else(|| Error::unresolved(format!("unknown 2-cell `{name}` in hom({x}, {y})")))
    }
}

impl HomProvider for FunctorTableBase {
    fn zero_cells(&self) -> Vec<String> {
        self.seeds.keys().cloned().collect()
    }

    fn is_zero_cell(&self, x: &str) -> bool {
        x == "()" || tuple_components(x).iter().all(|p| self.seeds.contains_key(p))
    }

    fn hom(&self, x: &str, y: &str) -> Result<FinCategory> {
        self.snapshots
            .get(&(x.to_string(), y.to_string()))
            .cloned()
            .ok_or_else(|| Error::unresolved(format!("hom({x}, {y}) is not tabulated")))
    }

    fn comp(&self, x: &str, y: &str, z: &str) -> Result<Functor> {
        let tyz = self.table(y, z)?;
        let txy = self.table(x, y)?;
        let txz = self.table(x, z)?;
        let source = product_category(&[self.hom(y, z)?, self.hom(x, y)?]);
        let mut obj_map = BTreeMap::new();
        let mut mor_map = BTreeMap::new();
        for (gn, g) in &tyz.functors {
            for (fn_, f) in &txy.functors {
                let gf = compose_functor_pair(g, f)?;
                if let Some(name) = txz.obj_ids.get(&gf.signature()) {
                    obj_map.insert(render_tuple(&[gn, fn_]), name.clone());
                }
            }
        }
        for (bn, b) in &tyz.nattrans {
            for (an, a) in &txy.nattrans {
                let ba = hcomp_nattrans(b, a)?;
                if let Some(name) = txz.mor_ids.get(&ba.signature()) {
                    mor_map.insert(render_tuple(&[bn, an]), name.clone());
                }
            }
        }
        Ok(Functor {
            source,
            target: self.hom(x, z)?,
            obj_map,
            mor_map,
        })
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
        let tx = self.table(x.0, x.1)?;
        let ty = self.table(y.0, y.1)?;
        let tw = (self.tensor0(x.0, y.0)?, self.tensor0(x.1, y.1)?);
        let tt = self.table(&tw.0, &tw.1)?;
        let source = product_category(&[self.hom(x.0, x.1)?, self.hom(y.0, y.1)?]);
        let mut obj_map = BTreeMap::new();
        let mut mor_map = BTreeMap::new();
        for (fn_, f) in &tx.functors {
            for (gn, g) in &ty.functors {
                let fg = product_functor(&[f.clone(), g.clone()]);
                if let Some(name) = tt.obj_ids.get(&fg.signature()) {
                    obj_map.insert(render_tuple(&[fn_, gn]), name.clone());
                }
            }
        }
        for (an, a) in &tx.nattrans {
            for (bn, b) in &ty.nattrans {
                let ab = product_nattrans(&[a.clone(), b.clone()]);
                if let Some(name) = tt.mor_ids.get(&ab.signature()) {
                    mor_map.insert(render_tuple(&[an, bn]), name.clone());
                }
            }
        }
        Ok(Functor {
            source,
            target: self.hom(&tw.0, &tw.1)?,
            obj_map,
            mor_map,
        })
    }

    fn symmetry(&self, _x: &str, _y: &str) -> Result<String> {
        Err(Error::unsupported(
            "tabulated functor bases do not register symmetry 1-cells".to_string(),
        ))
    }

    fn as_any(&self) -> &dyn std::any::Any {
        self
    }
}
