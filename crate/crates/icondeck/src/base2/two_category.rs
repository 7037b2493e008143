//! Tabular strict 2-categories.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::base2::{Cell1, Cell2};
use crate::error::{Error, Result};
use crate::fincat::{
    product_category, render_tuple, validate_category, validate_functor, FinCategory, Functor,
};

/// A strict 2-category given by explicit tables: a finite set of
/// 0-cells, a hom [`FinCategory`] per ordered pair, a composition
/// functor `hom(y,z) × hom(x,y) → hom(x,z)` per triple, and the
/// identity 1-cell of every 0-cell.  Composition is strictly
/// associative and strictly unital.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoCategory {
    pub zero_cells: BTreeSet<String>,
    /// `(x, y)` → hom category.
    pub hom: BTreeMap<(String, String), FinCategory>,
    /// `(x, y, z)` → composition functor with source
    /// `product_category([hom(y,z), hom(x,y)])` and target `hom(x,z)`.
    pub comp: BTreeMap<(String, String, String), Functor>,
    /// 0-cell → its identity 1-cell (an object of `hom(x,x)`).
    pub unit_one_cell: BTreeMap<String, String>,
}

impl TwoCategory {
    pub fn hom(&self, x: &str, y: &str) -> Result<&FinCategory> {
        self.hom
            .get(&(x.to_string(), y.to_string()))
            .ok_or_else(|| Error::unresolved(format!("no hom category ({x}, {y})")))
    }

    pub fn comp(&self, x: &str, y: &str, z: &str) -> Result<&Functor> {
        self.comp
            .get(&(x.to_string(), y.to_string(), z.to_string()))
            .ok_or_else(|| Error::unresolved(format!("no composition functor ({x}, {y}, {z})")))
    }

    /// Identity 1-cell of a 0-cell.
    pub fn id1(&self, x: &str) -> Result<Cell1> {
        let name = self
            .unit_one_cell
            .get(x)
            .ok_or_else(|| Error::unresolved(format!("no identity 1-cell for `{x}`")))?;
        Ok(Cell1::new(x, x, name.clone()))
    }

    /// Composite 1-cell g∘f (f first).
    pub fn compose1(&self, g: &Cell1, f: &Cell1) -> Result<Cell1> {
        if f.tgt0 != g.src0 {
            return Err(Error::boundary(format!(
                "compose1: `{}` ends at `{}` but `{}` starts at `{}`",
                f.name, f.tgt0, g.name, g.src0
            )));
        }
        let c = self.comp(&f.src0, &f.tgt0, &g.tgt0)?;
        let name = c.apply_obj(&render_tuple(&[&g.name, &f.name]))?;
        Ok(Cell1::new(f.src0.clone(), g.tgt0.clone(), name))
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
        let name = crate::fincat::compose_morphisms(h, &beta.name, &alpha.name)?;
        Ok(Cell2 {
            src0: alpha.src0.clone(),
            tgt0: alpha.tgt0.clone(),
            src1: alpha.src1.clone(),
            tgt1: beta.tgt1.clone(),
            name,
        })
    }

    /// Horizontal composite β★α for α: f⇒f' (x→y), β: g⇒g' (y→z).
    pub fn hcomp2(&self, beta: &Cell2, alpha: &Cell2) -> Result<Cell2> {
        if alpha.tgt0 != beta.src0 {
            return Err(Error::boundary(format!(
                "hcomp2: {} after {}",
                beta.describe(),
                alpha.describe()
            )));
        }
        let c = self.comp(&alpha.src0, &alpha.tgt0, &beta.tgt0)?;
        let name = c.apply_mor(&render_tuple(&[&beta.name, &alpha.name]))?;
        let src1 = c.apply_obj(&render_tuple(&[&beta.src1, &alpha.src1]))?;
        let tgt1 = c.apply_obj(&render_tuple(&[&beta.tgt1, &alpha.tgt1]))?;
        Ok(Cell2 {
            src0: alpha.src0.clone(),
            tgt0: beta.tgt0.clone(),
            src1: src1.to_string(),
            tgt1: tgt1.to_string(),
            name: name.to_string(),
        })
    }

    /// Inverse of an invertible 2-cell.
    pub fn inverse2(&self, alpha: &Cell2) -> Result<Cell2> {
        let h = self.hom(&alpha.src0, &alpha.tgt0)?;
        let name = h.inverse_of(&alpha.name).ok_or_else(|| {
            Error::invalid(format!("2-cell `{}` is not invertible", alpha.name))
        })?;
        Ok(Cell2 {
            src0: alpha.src0.clone(),
            tgt0: alpha.tgt0.clone(),
            src1: alpha.tgt1.clone(),
            tgt1: alpha.src1.clone(),
            name,
        })
    }
}

/// Validate every strict 2-category law exhaustively: all hom
/// categories are categories, all composition functors are functors
/// with the right boundaries, composition is strictly associative on
/// 1-cells and 2-cells, and identity 1-cells are strictly neutral.
pub fn validate_two_category(raw: TwoCategory) -> Result<TwoCategory> {
    let t = raw;
    for ((x, y), h) in &t.hom {
        if !t.zero_cells.contains(x) || !t.zero_cells.contains(y) {
            return Err(Error::invalid(format!(
                "hom table mentions unknown 0-cell in ({x}, {y})"
            )));
        }
        validate_category(h.clone())
            .map_err(|e| Error::invalid(format!("hom({x}, {y}): {e}")))?;
    }
    for x in &t.zero_cells {
        for y in &t.zero_cells {
            if !t.hom.contains_key(&(x.clone(), y.clone())) {
                return Err(Error::invalid(format!("missing hom category ({x}, {y})")));
            }
        }
    }
    for x in &t.zero_cells {
        let u = t
            .unit_one_cell
            .get(x)
            .ok_or_else(|| Error::invalid(format!("0-cell `{x}` has no identity 1-cell")))?;
        if !t.hom(x, x)?.objects.contains(u) {
            return Err(Error::invalid(format!(
                "identity 1-cell `{u}` of `{x}` is not an object of hom({x}, {x})"
            )));
        }
    }
    // Composition functors: present for all triples, correct boundaries,
    // functorial.
    for x in &t.zero_cells {
        for y in &t.zero_cells {
            for z in &t.zero_cells {
                let c = t.comp(x, y, z).map_err(|e| Error::invalid(e.to_string()))?;
                let expected_src = product_category(&[t.hom(y, z)?.clone(), t.hom(x, y)?.clone()]);
                if c.source != expected_src {
                    return Err(Error::invalid(format!(
                        "composition functor ({x}, {y}, {z}) has wrong source category"
                    )));
                }
                if &c.target != t.hom(x, z)? {
                    return Err(Error::invalid(format!(
                        "composition functor ({x}, {y}, {z}) has wrong target category"
                    )));
                }
                validate_functor(c.clone())
                    .map_err(|e| Error::invalid(format!("comp({x}, {y}, {z}): {e}")))?;
            }
        }
    }
    // Strict unit laws, on 1-cells and 2-cells.
    for x in &t.zero_cells {
        for y in &t.zero_cells {
            let h = t.hom(x, y)?;
            let ux = t.unit_one_cell[x].clone();
            let uy = t.unit_one_cell[y].clone();
            let left_unit = t.comp(x, y, y)?;
            let right_unit = t.comp(x, x, y)?;
            for f in &h.objects {
                let lu = left_unit.apply_obj(&render_tuple(&[&uy, f]))?;
                if lu != f {
                    return Err(Error::invalid(format!(
                        "left unit law fails on 1-cell `{f}`: 1∘{f} = {lu}"
                    )));
                }
                let ru = right_unit.apply_obj(&render_tuple(&[f, &ux]))?;
                if ru != f {
                    return Err(Error::invalid(format!(
                        "right unit law fails on 1-cell `{f}`: {f}∘1 = {ru}"
                    )));
                }
            }
            let idx = t.hom(x, x)?.identity(&ux)?.to_string();
            let idy = t.hom(y, y)?.identity(&uy)?.to_string();
            for a in h.morphisms.keys() {
                let lu = left_unit.apply_mor(&render_tuple(&[&idy, a]))?;
                if lu != a {
                    return Err(Error::invalid(format!(
                        "left unit law fails on 2-cell `{a}`"
                    )));
                }
                let ru = right_unit.apply_mor(&render_tuple(&[a, &idx]))?;
                if ru != a {
                    return Err(Error::invalid(format!(
                        "right unit law fails on 2-cell `{a}`"
                    )));
                }
            }
        }
    }
    // Strict associativity on 1-cells and 2-cells.
    for x in &t.zero_cells {
        for y in &t.zero_cells {
            for z in &t.zero_cells {
                for w in &t.zero_cells {
                    let cxy = t.hom(x, y)?;
                    let cyz = t.hom(y, z)?;
                    let czw = t.hom(z, w)?;
                    let c_xyz = t.comp(x, y, z)?;
                    let c_xzw = t.comp(x, z, w)?;
                    let c_yzw = t.comp(y, z, w)?;
                    let c_xyw = t.comp(x, y, w)?;
                    for h in &czw.objects {
                        for g in &cyz.objects {
                            for f in &cxy.objects {
                                let hg = c_yzw.apply_obj(&render_tuple(&[h, g]))?.to_string();
                                let gf = c_xyz.apply_obj(&render_tuple(&[g, f]))?.to_string();
                                let left = c_xyw.apply_obj(&render_tuple(&[&hg, f]))?;
                                let right = c_xzw.apply_obj(&render_tuple(&[h, &gf]))?;
                                if left != right {
                                    return Err(Error::invalid(format!(
                                        "associativity fails on 1-cells ({h}, {g}, {f}): {left} ≠ {right}"
                                    )));
                                }
                            }
                        }
                    }
                    for c in czw.morphisms.keys() {
                        for b in cyz.morphisms.keys() {
                            for a in cxy.morphisms.keys() {
                                let cb = c_yzw.apply_mor(&render_tuple(&[c, b]))?.to_string();
                                let ba = c_xyz.apply_mor(&render_tuple(&[b, a]))?.to_string();
                                let left = c_xyw.apply_mor(&render_tuple(&[&cb, a]))?;
                                let right = c_xzw.apply_mor(&render_tuple(&[c, &ba]))?;
                                if left != right {
                                    return Err(Error::invalid(format!(
                                        "associativity fails on 2-cells ({c}, {b}, {a}): {left} ≠ {right}"
                                    )));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(t)
}

/// Build the one-0-cell strict 2-category whose single hom category is
/// `delooping` with identity 1-cell `unit` (which must be an object of
/// `delooping` that is strictly neutral under `comp`).
pub fn one_object_two_category(
    zero_cell: &str,
    delooping: FinCategory,
    comp: Functor,
    unit: &str,
) -> TwoCategory {
    let mut t = TwoCategory {
        zero_cells: BTreeSet::new(),
        hom: BTreeMap::new(),
        comp: BTreeMap::new(),
        unit_one_cell: BTreeMap::new(),
    };
    t.zero_cells.insert(zero_cell.to_string());
    t.hom
        .insert((zero_cell.to_string(), zero_cell.to_string()), delooping);
    t.comp.insert(
        (
            zero_cell.to_string(),
            zero_cell.to_string(),
            zero_cell.to_string(),
        ),
        comp,
    );
    t.unit_one_cell
        .insert(zero_cell.to_string(), unit.to_string());
    t
}

/// The delooping of a one-object category whose composition is
/// commutative: 0-cell `*`, hom(*,*) = the given category, horizontal
/// composition = its own composition extended functorially.
pub fn delooped(h: FinCategory) -> TwoCategory {
    let obj = h.objects.iter().next().unwrap().clone();
    let prod = product_category(&[h.clone(), h.clone()]);
    let mut obj_map = BTreeMap::new();
    for o in &prod.objects {
        obj_map.insert(o.clone(), obj.clone());
    }
    let mut mor_map = BTreeMap::new();
    for m in prod.morphisms.keys() {
        let parts = crate::fincat::tuple_components(m);
        mor_map.insert(
            m.clone(),
            h.compose_table[&(parts[0].clone(), parts[1].clone())].clone(),
        );
    }
    let comp = Functor {
        source: prod,
        target: h.clone(),
        obj_map,
        mor_map,
    };
    one_object_two_category("*", h, comp, &obj)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat;

    #[test]
    fn delooped_cyclic_group_validates() {
        let t = delooped(fincat::cyclic_group(4));
        validate_two_category(t).unwrap();
    }

    #[test]
    fn cell_ops_on_delooping() {
        let t = delooped(fincat::cyclic_group(4));
        let u = t.id1("*").unwrap();
        assert_eq!(u.name, "x");
        let f = t.compose1(&u, &u).unwrap();
        assert_eq!(f.name, "x");
        let a = Cell2 {
            src0: "*".into(),
            tgt0: "*".into(),
            src1: "x".into(),
            tgt1: "x".into(),
            name: "w1".into(),
        };
        let b = Cell2 {
            name: "w2".into(),
            ..a.clone()
        };
        assert_eq!(t.vcomp2(&b, &a).unwrap().name, "w3");
        assert_eq!(t.hcomp2(&b, &a).unwrap().name, "w3");
        assert_eq!(t.inverse2(&a).unwrap().name, "w3");
        assert_eq!(t.id2(&u).unwrap().name, "w0");
    }

    #[test]
    fn validate_catches_broken_unit() {
        let mut t = delooped(fincat::cyclic_group(2));
        t.unit_one_cell.insert("*".into(), "nope".into());
        assert!(validate_two_category(t).is_err());
    }
}
