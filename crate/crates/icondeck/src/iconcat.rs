//! Materialization of icon 2-categories.
//!
//! Given a permutative base, this module enumerates every weak enriched
//! category (over hom 0-cells drawn from the base's generating set),
//! every weak functor between two such categories, and every icon
//! between two such functors — exhaustively, under size caps.  The
//! functors and icons between a fixed pair of enriched categories form
//! an ordinary finite category ([`hom_category`]), and these hom
//! categories assemble into a strict 2-category ([`icon_two_category`])
//! whose composition functors are induced by functor composition and
//! horizontal icon composition.
//!
//! Enumeration is cap-aware in two different ways.  The *category*
//! enumerator skips any candidate whose axiom checks would materialize
//! a hom category beyond the caps, so its output is exactly the set of
//! weak enriched categories checkable within the caps.  The functor and
//! icon enumerators instead propagate cap errors: once a pair of
//! enriched categories has been admitted, failing to materialize a hom
//! needed for their functors is an error, not an absence.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

use crate::base2::weak_data::{key_of, tuples};
use crate::base2::{fincat_base, ConstraintMap, HomProvider, PermBase, TwoCategory};
use crate::caps::Caps;
use crate::enriched::{
    check_icon, check_weak_category, check_weak_functor, compose_weak_functors, hcomp_icons,
    identity_icon, identity_weak_functor, vcomp_icons, EnrichedIcon, WeakEnrichedCategory,
    WeakEnrichedFunctor,
};
use crate::error::{Error, Result};
use crate::fincat::{
    product_category, render_tuple, tuple_components, validate_category, FinCategory, Functor,
    MorInfo,
};
use crate::montensor::{
    braiding_enriched, tensor_enriched, tensor_functors, tensor_icons, unit_enriched,
};
use crate::report::Report;

// ---------------------------------------------------------------------------
// Enumeration machinery

/// Mixed-radix counter over per-slot candidate counts.
struct Odometer {
    sizes: Vec<usize>,
    idx: Vec<usize>,
    fresh: bool,
    done: bool,
}

impl Odometer {
    fn new(sizes: Vec<usize>) -> Odometer {
        let done = sizes.iter().any(|&s| s == 0);
        let idx = vec![0; sizes.len()];
        Odometer {
            sizes,
            idx,
            fresh: true,
            done,
        }
    }

    fn next(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        if self.fresh {
            self.fresh = false;
            return Some(&self.idx);
        }
        for i in (0..self.sizes.len()).rev() {
            self.idx[i] += 1;
            if self.idx[i] < self.sizes[i] {
                return Some(&self.idx);
            }
            self.idx[i] = 0;
        }
        self.done = true;
        None
    }
}

/// Refuse enumeration spaces that could not finish in reasonable time.
fn space_guard(sizes: &[usize], what: &str) -> Result<()> {
    let mut product: usize = 1;
    for &s in sizes {
        product = product.saturating_mul(s.max(1));
    }
    if product > 1_000_000 {
        return Err(Error::cap(format!(
            "{what}: enumeration space has {product} candidates"
        )));
    }
    Ok(())
}

fn object_name(i: usize) -> String {
    if i < 26 {
        ((b'a' + i as u8) as char).to_string()
    } else {
        format!("o{i}")
    }
}

// ---------------------------------------------------------------------------
// Enumerating weak enriched categories

/// All weak enriched categories over `base` with at most
/// `caps.enriched_objects` objects (named `a`, `b`, …) and hom 0-cells
/// drawn from the base's generating 0-cells.
///
/// Candidates whose constraint cells or axiom checks would require
/// materializing a hom category beyond the caps are skipped; every
/// candidate that materializes within the caps is checked exhaustively
/// and kept exactly when all axioms pass.
pub fn enumerate_weak_categories(
    base: &PermBase,
    caps: &Caps,
) -> Result<Vec<WeakEnrichedCategory>> {
    let probe = base.zero_cells();
    let mut out = Vec::new();
    for n in 1..=caps.enriched_objects {
        let objects: Vec<String> = (0..n).map(object_name).collect();
        let pair_keys = tuples(&objects, 2);
        space_guard(&vec![probe.len(); pair_keys.len()], "hom assignments")?;
        let mut homs = Odometer::new(vec![probe.len(); pair_keys.len()]);
        while let Some(choice) = homs.next() {
            let mut hom = ConstraintMap::new();
            for (k, &ci) in pair_keys.iter().zip(choice) {
                hom.insert(k.clone(), probe[ci].clone());
            }
            match categories_with_hom(base, &objects, &hom) {
                Ok(cats) => out.extend(cats),
                Err(Error::CapExceeded(_)) => {}
                Err(e) => return Err(e),
            }
        }
    }
    Ok(out)
}

/// All passing weak enriched categories with a fixed hom assignment.
/// Cap errors propagate; the caller treats them as "this assignment is
/// not materializable within the caps" and skips it (whether a hom
/// materializes depends only on the hom words, never on the entry
/// choices, so the first cap error condemns the whole assignment).
fn categories_with_hom(
    base: &PermBase,
    objects: &[String],
    hom: &ConstraintMap,
) -> Result<Vec<WeakEnrichedCategory>> {
    let skel = WeakEnrichedCategory {
        base: base.clone(),
        objects: objects.to_vec(),
        hom: hom.clone(),
        comp: ConstraintMap::new(),
        unit: ConstraintMap::new(),
        assoc: ConstraintMap::new(),
        lunit: ConstraintMap::new(),
        runit: ConstraintMap::new(),
    };

    let triple_keys = tuples(objects, 3);
    let mut comp_cands: Vec<Vec<String>> = Vec::new();
    for t in &triple_keys {
        let src = base.tensor0(&skel.hom0(&t[1], &t[2])?, &skel.hom0(&t[0], &t[1])?)?;
        let tgt = skel.hom0(&t[0], &t[2])?;
        let h = base.hom(&src, &tgt)?;
        comp_cands.push(h.objects.iter().cloned().collect());
    }
    let mut unit_cands: Vec<Vec<String>> = Vec::new();
    for a in objects {
        let h = base.hom(&base.unit0(), &skel.hom0(a, a)?)?;
        unit_cands.push(h.objects.iter().cloned().collect());
    }

    let pair_keys = tuples(objects, 2);
    let quad_keys = tuples(objects, 4);
    space_guard(
        &comp_cands.iter().map(Vec::len).collect::<Vec<_>>(),
        "composition choices",
    )?;

    let mut out = Vec::new();
    let mut comp_odo = Odometer::new(comp_cands.iter().map(Vec::len).collect());
    while let Some(cc) = comp_odo.next() {
        let mut with_comp = skel.clone();
        for (i, k) in triple_keys.iter().enumerate() {
            with_comp.comp.insert(k.clone(), comp_cands[i][cc[i]].clone());
        }
        let mut assoc_cands: Vec<Vec<String>> = Vec::new();
        let mut feasible = true;
        for q in &quad_keys {
            let cs = with_comp.assoc_candidates(&q[0], &q[1], &q[2], &q[3])?;
            if cs.is_empty() {
                feasible = false;
                break;
            }
            assoc_cands.push(cs);
        }
        if !feasible {
            continue;
        }

        let mut unit_odo = Odometer::new(unit_cands.iter().map(Vec::len).collect());
        while let Some(uc) = unit_odo.next() {
            let mut with_unit = with_comp.clone();
            for (i, a) in objects.iter().enumerate() {
                with_unit.unit.insert(key_of(&[a]), unit_cands[i][uc[i]].clone());
            }
            let mut unitor_cands: Vec<Vec<String>> = Vec::new();
            let mut feasible = true;
            for p in &pair_keys {
                let ls = with_unit.lunit_candidates(&p[0], &p[1])?;
                let rs = with_unit.runit_candidates(&p[0], &p[1])?;
                if ls.is_empty() || rs.is_empty() {
                    feasible = false;
                    break;
                }
                unitor_cands.push(ls);
                unitor_cands.push(rs);
            }
            if !feasible {
                continue;
            }

            let mut all_cands = assoc_cands.clone();
            all_cands.append(&mut unitor_cands);
            space_guard(
                &all_cands.iter().map(Vec::len).collect::<Vec<_>>(),
                "constraint choices",
            )?;
            let mut con_odo = Odometer::new(all_cands.iter().map(Vec::len).collect());
            while let Some(sel) = con_odo.next() {
                let mut x = with_unit.clone();
                for (i, q) in quad_keys.iter().enumerate() {
                    x.assoc.insert(q.clone(), all_cands[i][sel[i]].clone());
                }
                for (i, p) in pair_keys.iter().enumerate() {
                    let li = quad_keys.len() + 2 * i;
                    x.lunit.insert(p.clone(), all_cands[li][sel[li]].clone());
                    x.runit.insert(p.clone(), all_cands[li + 1][sel[li + 1]].clone());
                }
                if check_weak_category(&x)?.passed() {
                    out.push(x);
                }
            }
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Enumerating weak functors and icons

/// All weak functors `x → y`, in canonical form, ordered by object map,
/// then hom entries, then comparison entries.
pub fn enumerate_weak_functors(
    x: &WeakEnrichedCategory,
    y: &WeakEnrichedCategory,
    caps: &Caps,
) -> Result<Vec<WeakEnrichedFunctor>> {
    caps.admit_enriched("weak functor enumeration (source)", x.objects.len())?;
    caps.admit_enriched("weak functor enumeration (target)", y.objects.len())?;
    let base = &x.base;
    let pair_keys = tuples(&x.objects, 2);
    let triple_keys = tuples(&x.objects, 3);
    space_guard(&vec![y.objects.len(); x.objects.len()], "object maps")?;

    let mut out = Vec::new();
    let mut obj_odo = Odometer::new(vec![y.objects.len(); x.objects.len()]);
    while let Some(oc) = obj_odo.next() {
        let obj_map: BTreeMap<String, String> = x
            .objects
            .iter()
            .zip(oc)
            .map(|(a, &i)| (a.clone(), y.objects[i].clone()))
            .collect();
        let skel = WeakEnrichedFunctor {
            source: x.clone(),
            target: y.clone(),
            obj_map,
            hom_map: ConstraintMap::new(),
            phi_comp: ConstraintMap::new(),
            phi_unit: ConstraintMap::new(),
        };

        let mut hom_cands: Vec<Vec<String>> = Vec::new();
        for k in &pair_keys {
            let src0 = x.hom0(&k[0], &k[1])?;
            let tgt0 = y.hom0(skel.obj(&k[0])?, skel.obj(&k[1])?)?;
            let h = base.hom(&src0, &tgt0)?;
            hom_cands.push(h.objects.iter().cloned().collect());
        }
        space_guard(
            &hom_cands.iter().map(Vec::len).collect::<Vec<_>>(),
            "functor hom entries",
        )?;
        let mut hom_odo = Odometer::new(hom_cands.iter().map(Vec::len).collect());
        while let Some(hc) = hom_odo.next() {
            let mut with_hom = skel.clone();
            for (i, k) in pair_keys.iter().enumerate() {
                with_hom.hom_map.insert(k.clone(), hom_cands[i][hc[i]].clone());
            }
            let mut phi_cands: Vec<Vec<String>> = Vec::new();
            let mut feasible = true;
            for t in &triple_keys {
                let cs = with_hom.phi_candidates(&t[0], &t[1], &t[2])?;
                if cs.is_empty() {
                    feasible = false;
                    break;
                }
                phi_cands.push(cs);
            }
            if feasible {
                for a in &x.objects {
                    let cs = with_hom.phiu_candidates(a)?;
                    if cs.is_empty() {
                        feasible = false;
                        break;
                    }
                    phi_cands.push(cs);
                }
            }
            if !feasible {
                continue;
            }
            space_guard(
                &phi_cands.iter().map(Vec::len).collect::<Vec<_>>(),
                "functor comparison entries",
            )?;
            let mut phi_odo = Odometer::new(phi_cands.iter().map(Vec::len).collect());
            while let Some(pc) = phi_odo.next() {
                let mut f = with_hom.clone();
                for (i, t) in triple_keys.iter().enumerate() {
                    f.phi_comp.insert(t.clone(), phi_cands[i][pc[i]].clone());
                }
                for (i, a) in x.objects.iter().enumerate() {
                    let j = triple_keys.len() + i;
                    f.phi_unit.insert(key_of(&[a]), phi_cands[j][pc[j]].clone());
                }
                if check_weak_functor(&f)?.passed() {
                    out.push(f.canonical()?);
                }
            }
        }
    }
    Ok(out)
}

/// All icons `f ⇒ g`, in canonical form.  Empty when the functors are
/// not parallel or disagree on objects.
pub fn enumerate_icons(
    f: &WeakEnrichedFunctor,
    g: &WeakEnrichedFunctor,
) -> Result<Vec<EnrichedIcon>> {
    if f.source != g.source || f.target != g.target {
        return Ok(Vec::new());
    }
    for a in &f.source.objects {
        if f.obj(a)? != g.obj(a)? {
            return Ok(Vec::new());
        }
    }
    let pair_keys = tuples(&f.source.objects, 2);
    let skel = EnrichedIcon {
        source: f.clone(),
        target: g.clone(),
        components: ConstraintMap::new(),
    };
    let mut cands: Vec<Vec<String>> = Vec::new();
    for k in &pair_keys {
        let cs = skel.component_candidates(&k[0], &k[1])?;
        if cs.is_empty() {
            return Ok(Vec::new());
        }
        cands.push(cs);
    }
    space_guard(
        &cands.iter().map(Vec::len).collect::<Vec<_>>(),
        "icon components",
    )?;
    let mut out = Vec::new();
    let mut odo = Odometer::new(cands.iter().map(Vec::len).collect());
    while let Some(sel) = odo.next() {
        let mut ic = skel.clone();
        for (i, k) in pair_keys.iter().enumerate() {
            ic.components.insert(k.clone(), cands[i][sel[i]].clone());
        }
        if check_icon(&ic)?.passed() {
            out.push(ic.canonical()?);
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Hom categories and the icon 2-category

/// A hom category of the icon 2-category, with the dictionaries
/// resolving its object names `F{i}` and morphism names `N{j}` back to
/// the functors and icons they stand for.
#[derive(Debug, Clone)]
pub struct IconHom {
    pub category: FinCategory,
    /// `functors[i]` is the object `F{i}`.
    pub functors: Vec<WeakEnrichedFunctor>,
    /// `icons[j]` is the morphism `N{j}`.
    pub icons: Vec<EnrichedIcon>,
}

impl IconHom {
    /// Name of a functor among the enumerated objects.
    pub fn functor_name(&self, f: &WeakEnrichedFunctor) -> Result<String> {
        self.functors
            .iter()
            .position(|g| g == f)
            .map(|i| format!("F{i}"))
            .ok_or_else(|| {
                Error::unresolved("functor is not among the enumerated objects".to_string())
            })
    }

    /// Name of an icon among the enumerated morphisms.
    pub fn icon_name(&self, ic: &EnrichedIcon) -> Result<String> {
        self.icons
            .iter()
            .position(|other| other == ic)
            .map(|j| format!("N{j}"))
            .ok_or_else(|| {
                Error::unresolved("icon is not among the enumerated morphisms".to_string())
            })
    }
}

/// The category of weak functors `x → y` and icons between them:
/// objects are the enumerated functors, morphisms the enumerated icons,
/// composition is vertical icon composition.  The result is validated
/// before being returned.
pub fn hom_category(
    x: &WeakEnrichedCategory,
    y: &WeakEnrichedCategory,
    caps: &Caps,
) -> Result<IconHom> {
    let functors = enumerate_weak_functors(x, y, caps)?;
    let mut icons = Vec::new();
    let mut ends: Vec<(usize, usize)> = Vec::new();
    for (i, fi) in functors.iter().enumerate() {
        for (j, fj) in functors.iter().enumerate() {
            for ic in enumerate_icons(fi, fj)? {
                icons.push(ic);
                ends.push((i, j));
            }
        }
    }
    caps.admit_category("icon hom category", functors.len(), icons.len())?;

    let mut cat = FinCategory {
        objects: (0..functors.len()).map(|i| format!("F{i}")).collect(),
        morphisms: BTreeMap::new(),
        identity_of: BTreeMap::new(),
        compose_table: BTreeMap::new(),
    };
    for (j, &(s, t)) in ends.iter().enumerate() {
        cat.morphisms.insert(
            format!("N{j}"),
            MorInfo {
                src: format!("F{s}"),
                tgt: format!("F{t}"),
            },
        );
    }
    let locate = |value: &EnrichedIcon, at: (usize, usize)| -> Result<String> {
        icons
            .iter()
            .zip(&ends)
            .position(|(ic, &e)| e == at && ic == value)
            .map(|j| format!("N{j}"))
            .ok_or_else(|| {
                Error::invalid(format!(
                    "icon composite between functors F{} and F{} is not among the enumerated icons",
                    at.0, at.1
                ))
            })
    };
    for (i, f) in functors.iter().enumerate() {
        let idc = identity_icon(f)?;
        cat.identity_of
            .insert(format!("F{i}"), locate(&idc, (i, i))?);
    }
    for (bj, beta) in icons.iter().enumerate() {
        for (aj, alpha) in icons.iter().enumerate() {
            if ends[aj].1 != ends[bj].0 {
                continue;
            }
            let composite = vcomp_icons(beta, alpha)?.canonical()?;
            let name = locate(&composite, (ends[aj].0, ends[bj].1))?;
            cat.compose_table
                .insert((format!("N{bj}"), format!("N{aj}")), name);
        }
    }
    let category = validate_category(cat)?;
    Ok(IconHom {
        category,
        functors,
        icons,
    })
}

/// The strict 2-category of the given weak enriched categories, the
/// weak functors between them, and the icons between those: 0-cells are
/// named `X{i}`, hom categories come from [`hom_category`], and the
/// composition functors are induced by functor composition on objects
/// and horizontal icon composition on morphisms.
pub fn icon_two_category(objects: &[WeakEnrichedCategory], caps: &Caps) -> Result<TwoCategory> {
    if objects.is_empty() {
        return Err(Error::invalid(
            "an icon 2-category needs at least one 0-cell".to_string(),
        ));
    }
    let mut homs: BTreeMap<(usize, usize), IconHom> = BTreeMap::new();
    for i in 0..objects.len() {
        for j in 0..objects.len() {
            homs.insert((i, j), hom_category(&objects[i], &objects[j], caps)?);
        }
    }

    let mut two = TwoCategory {
        zero_cells: (0..objects.len()).map(|i| format!("X{i}")).collect(),
        hom: BTreeMap::new(),
        comp: BTreeMap::new(),
        unit_one_cell: BTreeMap::new(),
    };
    for ((i, j), h) in &homs {
        two.hom
            .insert((format!("X{i}"), format!("X{j}")), h.category.clone());
    }
    for (i, x) in objects.iter().enumerate() {
        let idf = identity_weak_functor(x)?;
        two.unit_one_cell
            .insert(format!("X{i}"), homs[&(i, i)].functor_name(&idf)?);
    }
    for i in 0..objects.len() {
        for j in 0..objects.len() {
            for k in 0..objects.len() {
                let (hij, hjk, hik) = (&homs[&(i, j)], &homs[&(j, k)], &homs[&(i, k)]);
                let mut comp = crate::fincat::Functor {
                    source: product_category(&[hjk.category.clone(), hij.category.clone()]),
                    target: hik.category.clone(),
                    obj_map: BTreeMap::new(),
                    mor_map: BTreeMap::new(),
                };
                for (gi, g) in hjk.functors.iter().enumerate() {
                    for (fi, f) in hij.functors.iter().enumerate() {
                        let gf = compose_weak_functors(g, f)?.canonical()?;
                        comp.obj_map.insert(
                            render_tuple(&[&format!("F{gi}"), &format!("F{fi}")]),
                            hik.functor_name(&gf)?,
                        );
                    }
                }
                for (bj, beta) in hjk.icons.iter().enumerate() {
                    for (aj, alpha) in hij.icons.iter().enumerate() {
                        let ba = hcomp_icons(beta, alpha)?.canonical()?;
                        comp.mor_map.insert(
                            render_tuple(&[&format!("N{bj}"), &format!("N{aj}")]),
                            hik.icon_name(&ba)?,
                        );
                    }
                }
                two.comp
                    .insert((format!("X{i}"), format!("X{j}"), format!("X{k}")), comp);
            }
        }
    }
    Ok(two)
}

// ---------------------------------------------------------------------------
// Iterated bases

#[derive(Default)]
struct IconCache {
    /// Tensor word of seed names → the enriched category it stands for.
    enriched: BTreeMap<String, WeakEnrichedCategory>,
    /// Word pair → materialized hom category with its dictionaries.
    homs: BTreeMap<(String, String), Arc<IconHom>>,
}

/// A permutative base one level up: its 0-cells are tensor words of
/// named weak enriched categories over a lower-level base, its hom
/// categories are the functor/icon categories of [`hom_category`], its
/// composition is weak functor composition, and its tensor and symmetry
/// are the enriched tensor product and braiding.  Built by
/// [`iterate_base`].
pub struct IconBase {
    below: PermBase,
    seeds: BTreeMap<String, WeakEnrichedCategory>,
    caps: Caps,
    cache: Mutex<IconCache>,
}

impl IconBase {
    /// The enriched category a tensor word of seed names stands for:
    /// the fold of the enriched tensor over the word's components (the
    /// empty word is the one-object unit category).
    pub fn enriched_of(&self, word: &str) -> Result<WeakEnrichedCategory> {
        if let Some(x) = self.cache.lock().unwrap().enriched.get(word) {
            return Ok(x.clone());
        }
        if !self.is_zero_cell(word) {
            return Err(Error::unresolved(format!(
                "`{word}` is not a 0-cell of the icon base"
            )));
        }
        let mut acc = unit_enriched(&self.below)?;
        if word != "()" {
            for part in tuple_components(word) {
                acc = tensor_enriched(&acc, &self.seeds[&part])?;
            }
        }
        self.cache
            .lock()
            .unwrap()
            .enriched
            .insert(word.to_string(), acc.clone());
        Ok(acc)
    }

    /// The materialized hom category between two words, with the
    /// dictionaries resolving its 1-/2-cell names.
    pub fn hom_data(&self, x: &str, y: &str) -> Result<Arc<IconHom>> {
        let key = (x.to_string(), y.to_string());
        if let Some(h) = self.cache.lock().unwrap().homs.get(&key) {
            return Ok(h.clone());
        }
        let ex = self.enriched_of(x)?;
        let ey = self.enriched_of(y)?;
        let h = Arc::new(hom_category(&ex, &ey, &self.caps)?);
        self.cache.lock().unwrap().homs.insert(key, h.clone());
        Ok(h)
    }

    /// Resolve a 1-cell name `F{i}` of `hom(x, y)` to its weak functor.
    pub fn functor_named(&self, x: &str, y: &str, name: &str) -> Result<WeakEnrichedFunctor> {
        let missing =
            || Error::unresolved(format!("`{name}` is not a 1-cell of hom({x}, {y})"));
        let h = self.hom_data(x, y)?;
        let i: usize = name
            .strip_prefix('F')
            .and_then(|s| s.parse().ok())
            .ok_or_else(missing)?;
        h.functors.get(i).cloned().ok_or_else(missing)
    }

    /// Resolve a 2-cell name `N{j}` of `hom(x, y)` to its icon.
    pub fn icon_named(&self, x: &str, y: &str, name: &str) -> Result<EnrichedIcon> {
        let missing =
            || Error::unresolved(format!("`{name}` is not a 2-cell of hom({x}, {y})"));
        let h = self.hom_data(x, y)?;
        let j: usize = name
            .strip_prefix('N')
            .and_then(|s| s.parse().ok())
            .ok_or_else(missing)?;
        h.icons.get(j).cloned().ok_or_else(missing)
    }
}

impl HomProvider for IconBase {
    fn zero_cells(&self) -> Vec<String> {
        self.seeds.keys().cloned().collect()
    }

    fn is_zero_cell(&self, x: &str) -> bool {
        x == "()" || tuple_components(x).iter().all(|p| self.seeds.contains_key(p))
    }

    fn hom(&self, x: &str, y: &str) -> Result<FinCategory> {
        Ok(self.hom_data(x, y)?.category.clone())
    }

    fn comp(&self, x: &str, y: &str, z: &str) -> Result<Functor> {
        let hyz = self.hom_data(y, z)?;
        let hxy = self.hom_data(x, y)?;
        let hxz = self.hom_data(x, z)?;
        let mut comp = Functor {
            source: product_category(&[hyz.category.clone(), hxy.category.clone()]),
            target: hxz.category.clone(),
            obj_map: BTreeMap::new(),
            mor_map: BTreeMap::new(),
        };
        for (gi, g) in hyz.functors.iter().enumerate() {
            for (fi, f) in hxy.functors.iter().enumerate() {
                let gf = compose_weak_functors(g, f)?.canonical()?;
                comp.obj_map.insert(
                    render_tuple(&[&format!("F{gi}"), &format!("F{fi}")]),
                    hxz.functor_name(&gf)?,
                );
            }
        }
        for (bj, beta) in hyz.icons.iter().enumerate() {
            for (aj, alpha) in hxy.icons.iter().enumerate() {
                let ba = hcomp_icons(beta, alpha)?.canonical()?;
                comp.mor_map.insert(
                    render_tuple(&[&format!("N{bj}"), &format!("N{aj}")]),
                    hxz.icon_name(&ba)?,
                );
            }
        }
        Ok(comp)
    }

    fn unit_one_cell(&self, x: &str) -> Result<String> {
        let idf = identity_weak_functor(&self.enriched_of(x)?)?;
        self.hom_data(x, x)?.functor_name(&idf)
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
        let ex = self.hom_data(x.0, x.1)?;
        let ey = self.hom_data(y.0, y.1)?;
        let et = self.hom_data(&self.tensor0(x.0, y.0)?, &self.tensor0(x.1, y.1)?)?;
        let mut t = Functor {
            source: product_category(&[ex.category.clone(), ey.category.clone()]),
            target: et.category.clone(),
            obj_map: BTreeMap::new(),
            mor_map: BTreeMap::new(),
        };
        for (fi, f) in ex.functors.iter().enumerate() {
            for (gi, g) in ey.functors.iter().enumerate() {
                let fg = tensor_functors(f, g)?.canonical()?;
                t.obj_map.insert(
                    render_tuple(&[&format!("F{fi}"), &format!("F{gi}")]),
                    et.functor_name(&fg)?,
                );
            }
        }
        for (ai, a) in ex.icons.iter().enumerate() {
            for (bi, b) in ey.icons.iter().enumerate() {
                let ab = tensor_icons(a, b)?.canonical()?;
                t.mor_map.insert(
                    render_tuple(&[&format!("N{ai}"), &format!("N{bi}")]),
                    et.icon_name(&ab)?,
                );
            }
        }
        Ok(t)
    }

    fn symmetry(&self, x: &str, y: &str) -> Result<String> {
        let b = braiding_enriched(&self.enriched_of(x)?, &self.enriched_of(y)?)?;
        self.hom_data(&self.tensor0(x, y)?, &self.tensor0(y, x)?)?
            .functor_name(&b)
    }

    fn as_any(&self) -> &dyn std::any::Any {
        self
    }
}

/// The level-`depth` permutative base generated by the seed categories:
/// depth 0 is the functor-category base over the seeds; each further
/// level takes the weak enriched categories enumerable over the
/// previous level (named `C0`, `C1`, … in enumeration order) as its
/// 0-cells, with [`hom_category`] homs and the enriched tensor.
///
/// Level 1 enumerates up to `caps.enriched_objects` objects per
/// category; levels ≥ 2 are restricted to one-object (degenerate)
/// enriched categories, which is what remains materializable.
pub fn iterate_base(seeds: &[(&str, FinCategory)], depth: usize, caps: Caps) -> Result<PermBase> {
    let mut base = fincat_base(seeds, caps)?;
    for level in 1..=depth {
        let mut level_caps = caps;
        if level >= 2 {
            level_caps.enriched_objects = 1;
        }
        let objects = enumerate_weak_categories(&base, &level_caps)?;
        if objects.is_empty() {
            return Err(Error::invalid(format!(
                "no weak enriched categories are enumerable at level {level} within the caps"
            )));
        }
        let mut map = BTreeMap::new();
        for (i, x) in objects.into_iter().enumerate() {
            map.insert(format!("C{i}"), x);
        }
        base = PermBase::new(Arc::new(IconBase {
            below: base,
            seeds: map,
            caps: level_caps,
            cache: Mutex::new(IconCache::default()),
        }));
    }
    Ok(base)
}

// ---------------------------------------------------------------------------
// Strictness of iterated composition

/// For a weak category enriched over an icon-level base, composing
/// 1-cells means applying the composition entries — which are weak
/// functors between enriched hom categories — on objects.  This report
/// asserts that this object-level composition is strictly associative
/// and strictly unital for every composable family, then re-runs the
/// category checker so the globular constraint families (associators
/// and unitors) and their coherence are part of the same report.
pub fn strictness_report(x: &WeakEnrichedCategory) -> Result<Report> {
    let icon_base = x
        .base
        .provider()
        .as_any()
        .downcast_ref::<IconBase>()
        .ok_or_else(|| {
            Error::unsupported(
                "strictness_report needs a category enriched over an icon-level base".to_string(),
            )
        })?;
    let mut report = Report::new();

    let comp_of = |a: &str, b: &str, c: &str| -> Result<WeakEnrichedFunctor> {
        let cell = x.comp1(a, b, c)?;
        icon_base.functor_named(&cell.src0, &cell.tgt0, &cell.name)
    };
    let unit_object_of = |a: &str| -> Result<String> {
        let cell = x.unit1(a)?;
        let u = icon_base.functor_named(&cell.src0, &cell.tgt0, &cell.name)?;
        Ok(u.obj("()")?.to_string())
    };
    // The 1-cells of `x` from `a` to `b` are the objects of the
    // enriched category its hom word stands for.
    let one_cells = |a: &str, b: &str| -> Result<Vec<String>> {
        Ok(icon_base.enriched_of(&x.hom0(a, b)?)?.objects)
    };

    for t in tuples(&x.objects, 4) {
        let (a, b, c, d) = (&t[0], &t[1], &t[2], &t[3]);
        let m_abc = comp_of(a, b, c)?;
        let m_bcd = comp_of(b, c, d)?;
        let m_abd = comp_of(a, b, d)?;
        let m_acd = comp_of(a, c, d)?;
        for h in one_cells(c, d)? {
            for g in one_cells(b, c)? {
                for f in one_cells(a, b)? {
                    let hg = m_bcd.obj(&render_tuple(&[&h, &g]))?.to_string();
                    let gf = m_abc.obj(&render_tuple(&[&g, &f]))?.to_string();
                    let left = m_abd.obj(&render_tuple(&[&hg, &f]))?.to_string();
                    let right = m_acd.obj(&render_tuple(&[&h, &gf]))?.to_string();
                    let instance =
                        vec![a.clone(), b.clone(), c.clone(), d.clone(), h.clone(), g.clone(), f.clone()];
                    if left == right {
                        report.pass(
                            "one_cell_composition.associative",
                            "strictness.assoc",
                            instance,
                        );
                    } else {
                        report.fail(
                            "one_cell_composition.associative",
                            "strictness.assoc",
                            instance,
                            format!("(h g) f = `{left}` but h (g f) = `{right}`"),
                        );
                    }
                }
            }
        }
    }
    for t in tuples(&x.objects, 2) {
        let (a, b) = (&t[0], &t[1]);
        let ia = unit_object_of(a)?;
        let ib = unit_object_of(b)?;
        let m_aab = comp_of(a, a, b)?;
        let m_abb = comp_of(a, b, b)?;
        for f in one_cells(a, b)? {
            let r = m_aab.obj(&render_tuple(&[&f, &ia]))?.to_string();
            let instance = vec![a.clone(), b.clone(), f.clone()];
            if r == f {
                report.pass("one_cell_composition.right_unit", "strictness.unit", instance.clone());
            } else {
                report.fail(
                    "one_cell_composition.right_unit",
                    "strictness.unit",
                    instance.clone(),
                    format!("f I = `{r}` but f = `{f}`"),
                );
            }
            let l = m_abb.obj(&render_tuple(&[&ib, &f]))?.to_string();
            if l == f {
                report.pass("one_cell_composition.left_unit", "strictness.unit", instance);
            } else {
                report.fail(
                    "one_cell_composition.left_unit",
                    "strictness.unit",
                    instance,
                    format!("I f = `{l}` but f = `{f}`"),
                );
            }
        }
    }
    report.merge(check_weak_category(x)?);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base2::{fincat_base, validate_two_category};
    use crate::enriched::check_weak_category;
    use crate::fincat;

    fn caps1() -> Caps {
        Caps {
            objects: 64,
            morphisms: 256,
            enriched_objects: 1,
        }
    }

    fn tz2_base(caps: Caps) -> PermBase {
        fincat_base(
            &[("T", fincat::terminal()), ("Z2", fincat::z2_group())],
            caps,
        )
        .unwrap()
    }

    // -----------------------------------------------------------------
    // Independent brute-force enumerators.  These generate *every* total
    // assignment of entries over unfiltered candidate ranges (all
    // objects / all morphisms of the relevant hom categories, with no
    // boundary pruning and no staging) and count the ones the checkers
    // accept, treating structural rejections as "not a functor/icon".
    // The library enumerators must reproduce these counts exactly.

    fn all_maps(lists: &[Vec<String>]) -> Vec<Vec<String>> {
        let mut out = vec![Vec::new()];
        for list in lists {
            let mut next = Vec::new();
            for prefix in &out {
                for item in list {
                    let mut p = prefix.clone();
                    p.push(item.clone());
                    next.push(p);
                }
            }
            out = next;
        }
        out
    }

    fn structural(e: &Error) -> bool {
        matches!(
            e,
            Error::Invalid(_) | Error::Boundary(_) | Error::Unresolved(_)
        )
    }

    fn brute_force_functor_count(x: &WeakEnrichedCategory, y: &WeakEnrichedCategory) -> usize {
        let base = &x.base;
        let pair_keys = tuples(&x.objects, 2);
        let triple_keys = tuples(&x.objects, 3);
        let obj_lists: Vec<Vec<String>> = x.objects.iter().map(|_| y.objects.clone()).collect();
        let mut count = 0;
        for oc in all_maps(&obj_lists) {
            let obj_map: BTreeMap<String, String> =
                x.objects.iter().cloned().zip(oc.iter().cloned()).collect();
            let fo = |a: &str| obj_map[a].as_str();
            let hom_lists: Vec<Vec<String>> = pair_keys
                .iter()
                .map(|k| {
                    let src = x.hom0(&k[0], &k[1]).unwrap();
                    let tgt = y.hom0(fo(&k[0]), fo(&k[1])).unwrap();
                    base.hom(&src, &tgt).unwrap().objects.iter().cloned().collect()
                })
                .collect();
            let phi_lists: Vec<Vec<String>> = triple_keys
                .iter()
                .map(|t| {
                    let src = base
                        .tensor0(
                            &x.hom0(&t[1], &t[2]).unwrap(),
                            &x.hom0(&t[0], &t[1]).unwrap(),
                        )
                        .unwrap();
                    let tgt = y.hom0(fo(&t[0]), fo(&t[2])).unwrap();
                    base.hom(&src, &tgt).unwrap().morphisms.keys().cloned().collect()
                })
                .collect();
            let phiu_lists: Vec<Vec<String>> = x
                .objects
                .iter()
                .map(|a| {
                    let tgt = y.hom0(fo(a), fo(a)).unwrap();
                    base.hom(&base.unit0(), &tgt).unwrap().morphisms.keys().cloned().collect()
                })
                .collect();
            for hm in all_maps(&hom_lists) {
                for pc in all_maps(&phi_lists) {
                    for pu in all_maps(&phiu_lists) {
                        let f = WeakEnrichedFunctor {
                            source: x.clone(),
                            target: y.clone(),
                            obj_map: obj_map.clone(),
                            hom_map: pair_keys.iter().cloned().zip(hm.iter().cloned()).collect(),
                            phi_comp: triple_keys.iter().cloned().zip(pc.iter().cloned()).collect(),
                            phi_unit: x
                                .objects
                                .iter()
                                .map(|a| key_of(&[a]))
                                .zip(pu.iter().cloned())
                                .collect(),
                        };
                        match check_weak_functor(&f) {
                            Ok(rep) => {
                                if rep.passed() {
                                    count += 1;
                                }
                            }
                            Err(e) if structural(&e) => {}
                            Err(e) => panic!("unexpected error in brute force: {e}"),
                        }
                    }
                }
            }
        }
        count
    }

    fn brute_force_icon_count(f: &WeakEnrichedFunctor, g: &WeakEnrichedFunctor) -> usize {
        if f.source != g.source || f.target != g.target {
            return 0;
        }
        let x = &f.source;
        let y = &f.target;
        let base = &x.base;
        let pair_keys = tuples(&x.objects, 2);
        if x.objects.iter().any(|a| f.obj(a).unwrap() != g.obj(a).unwrap()) {
            return 0;
        }
        let comp_lists: Vec<Vec<String>> = pair_keys
            .iter()
            .map(|k| {
                let src = x.hom0(&k[0], &k[1]).unwrap();
                let tgt = y
                    .hom0(f.obj(&k[0]).unwrap(), f.obj(&k[1]).unwrap())
                    .unwrap();
                base.hom(&src, &tgt).unwrap().morphisms.keys().cloned().collect()
            })
            .collect();
        let mut count = 0;
        for cm in all_maps(&comp_lists) {
            let ic = EnrichedIcon {
                source: f.clone(),
                target: g.clone(),
                components: pair_keys.iter().cloned().zip(cm.iter().cloned()).collect(),
            };
            match check_icon(&ic) {
                Ok(rep) => {
                    if rep.passed() {
                        count += 1;
                    }
                }
                Err(e) if structural(&e) => {}
                Err(e) => panic!("unexpected error in brute force: {e}"),
            }
        }
        count
    }

    // -----------------------------------------------------------------
    // Fixtures: the three one-object enriched categories over {T, Z2}.
    // `xt` has the terminal hom; `x0` and `x1` have hom Z/2 with the
    // group multiplication as composition, distinguished by whether the
    // unit constraints are identities.

    fn one_object_fixtures() -> (PermBase, WeakEnrichedCategory, WeakEnrichedCategory, WeakEnrichedCategory) {
        let base = tz2_base(caps1());
        let cats = enumerate_weak_categories(&base, &caps1()).unwrap();
        assert_eq!(cats.len(), 3);
        let mut xt = None;
        let mut x0 = None;
        let mut x1 = None;
        for c in cats {
            if c.hom0("a", "a").unwrap() == "T" {
                xt = Some(c);
                continue;
            }
            let h = base.hom("Z2", "Z2").unwrap();
            let entry = c.runit.get(&key_of(&["a", "a"])).unwrap();
            if h.is_identity(entry) {
                x0 = Some(c);
            } else {
                x1 = Some(c);
            }
        }
        (base, xt.unwrap(), x0.unwrap(), x1.unwrap())
    }

    #[test]
    fn category_enumeration_over_z2_is_exactly_the_forced_family() {
        let base = fincat_base(&[("Z2", fincat::z2_group())], caps1()).unwrap();
        let cats = enumerate_weak_categories(&base, &caps1()).unwrap();
        // Unit constraints force the composition to be the group
        // multiplication, the pentagon forces the associator to the
        // identity, and the triangle ties the two unitors together,
        // leaving exactly the identity choice and the sign choice.
        assert_eq!(cats.len(), 2);
        let h = base.hom("(Z2,Z2)", "Z2").unwrap();
        for c in &cats {
            assert!(check_weak_category(c).unwrap().passed());
            let m = c.comp.get(&key_of(&["a", "a", "a"])).unwrap();
            // the multiplication functor sends (s, e) and (e, s) to s
            let f = base
                .provider()
                .as_any()
                .downcast_ref::<crate::base2::FinCatBase>()
                .unwrap()
                .functor_named("(Z2,Z2)", "Z2", m)
                .unwrap();
            assert_eq!(f.mor_map[&render_tuple(&["s", "e"])], "s");
            assert_eq!(f.mor_map[&render_tuple(&["e", "s"])], "s");
            let _ = h;
            let a = c.assoc.get(&key_of(&["a", "a", "a", "a"])).unwrap();
            let h3 = base.hom("(Z2,Z2,Z2)", "Z2").unwrap();
            assert!(h3.is_identity(a));
            assert_eq!(
                c.lunit.get(&key_of(&["a", "a"])),
                c.runit.get(&key_of(&["a", "a"]))
            );
        }
        let hz = base.hom("Z2", "Z2").unwrap();
        let identities = cats
            .iter()
            .filter(|c| hz.is_identity(c.runit.get(&key_of(&["a", "a"])).unwrap()))
            .count();
        assert_eq!(identities, 1);
    }

    #[test]
    fn functor_enumeration_matches_brute_force() {
        let (_base, xt, x0, x1) = one_object_fixtures();
        let fixtures = [("xt", &xt), ("x0", &x0), ("x1", &x1)];
        let mut counts = BTreeMap::new();
        for (nx, x) in &fixtures {
            for (ny, y) in &fixtures {
                let fs = enumerate_weak_functors(x, y, &caps1()).unwrap();
                assert_eq!(
                    fs.len(),
                    brute_force_functor_count(x, y),
                    "functor count between {nx} and {ny}"
                );
                counts.insert((*nx, *ny), fs.len());
            }
        }
        // Unit and composition comparisons contribute one free sign
        // each, tied by one linear relation; the hom 1-cell may also
        // collapse.  That gives 2·2 functors between any two Z/2
        // fixtures, 2 into them from the terminal one, and 1 out.
        assert_eq!(counts[&("x0", "x0")], 4);
        assert_eq!(counts[&("x0", "x1")], 4);
        assert_eq!(counts[&("x1", "x0")], 4);
        assert_eq!(counts[&("xt", "x0")], 2);
        assert_eq!(counts[&("x0", "xt")], 1);
        assert_eq!(counts[&("xt", "xt")], 1);
    }

    #[test]
    fn icon_enumeration_matches_brute_force() {
        let (_base, _xt, x0, x1) = one_object_fixtures();
        let fs = enumerate_weak_functors(&x0, &x1, &caps1()).unwrap();
        assert_eq!(fs.len(), 4);
        let mut total = 0;
        for f in &fs {
            for g in &fs {
                let icons = enumerate_icons(f, g).unwrap();
                assert_eq!(icons.len(), brute_force_icon_count(f, g));
                if f == g {
                    let idc = identity_icon(f).unwrap();
                    assert!(icons.contains(&idc));
                }
                total += icons.len();
            }
        }
        // Icons exist only between functors with the same hom 1-cell,
        // and are then unique: two classes of two functors each.
        assert_eq!(total, 8);
    }

    #[test]
    fn hom_categories_validate_with_predicted_shapes() {
        let (_base, xt, x0, x1) = one_object_fixtures();
        let h01 = hom_category(&x0, &x1, &caps1()).unwrap();
        assert_eq!(h01.category.objects.len(), 4);
        assert_eq!(h01.category.morphisms.len(), 8);
        let ht0 = hom_category(&xt, &x0, &caps1()).unwrap();
        assert_eq!(ht0.category.objects.len(), 2);
        assert_eq!(ht0.category.morphisms.len(), 4);
        let h0t = hom_category(&x0, &xt, &caps1()).unwrap();
        assert_eq!(h0t.category.objects.len(), 1);
        assert_eq!(h0t.category.morphisms.len(), 1);
    }

    #[test]
    fn icon_two_category_over_one_object_fixtures_validates() {
        let (_base, xt, x0, x1) = one_object_fixtures();
        let two = icon_two_category(&[xt, x0, x1], &caps1()).unwrap();
        validate_two_category(two).unwrap();
    }

    // -----------------------------------------------------------------
    // Iterated bases and strictness

    #[test]
    fn iterate_depth_zero_is_the_functor_category_base() {
        let b0 = iterate_base(&[("T", fincat::terminal())], 0, Caps::default()).unwrap();
        let direct = fincat_base(&[("T", fincat::terminal())], Caps::default()).unwrap();
        assert_eq!(b0.zero_cells(), vec!["T".to_string()]);
        assert_eq!(*b0.hom("T", "T").unwrap(), *direct.hom("T", "T").unwrap());
        assert!(b0.provider().as_any().downcast_ref::<IconBase>().is_none());
    }

    #[test]
    fn iterate_depth_one_over_the_terminal_seed() {
        let caps = Caps::default();
        let b1 = iterate_base(&[("T", fincat::terminal())], 1, caps).unwrap();
        // Level-1 0-cells: the one-object and the two-object category
        // with terminal homs (in enumeration order).
        assert_eq!(b1.zero_cells(), vec!["C0".to_string(), "C1".to_string()]);
        let icon = b1.provider().as_any().downcast_ref::<IconBase>().unwrap();
        assert_eq!(icon.enriched_of("C0").unwrap().objects.len(), 1);
        assert_eq!(icon.enriched_of("C1").unwrap().objects.len(), 2);
        // hom(C0, C0) is terminal: the identity functor and its icon.
        let h = b1.hom("C0", "C0").unwrap();
        assert_eq!((h.objects.len(), h.morphisms.len()), (1, 1));
        assert_eq!(b1.id1("C0").unwrap().name, "F0");
        crate::base2::validate_perm_base(&b1, &caps).unwrap();
    }

    #[test]
    fn iterate_depth_two_over_the_terminal_seed() {
        let caps = Caps::default();
        let b2 = iterate_base(&[("T", fincat::terminal())], 2, caps).unwrap();
        // Only the degenerate level-2 object over the one-object
        // level-1 category survives (tensor squares of the two-object
        // one exceed the enriched-object cap).
        assert_eq!(b2.zero_cells(), vec!["C0".to_string()]);
        crate::base2::validate_perm_base(&b2, &caps).unwrap();
    }

    #[test]
    fn iterate_depth_one_over_z2_seeds_validates_and_closes() {
        let caps = caps1();
        let b1 = iterate_base(&[("Z2", fincat::z2_group())], 1, caps).unwrap();
        // The two one-object Z/2-enriched categories become 0-cells.
        assert_eq!(b1.zero_cells().len(), 2);
        crate::base2::validate_perm_base(&b1, &caps).unwrap();
        let report = crate::montensor::verify_symmetric_closure(&b1, &caps).unwrap();
        assert!(report.passed(), "{:?}", report.failures());
    }

    #[test]
    fn closure_battery_runs_unskipped_on_the_degenerate_terminal_level() {
        let caps = Caps {
            enriched_objects: 1,
            ..Caps::default()
        };
        let b1 = iterate_base(&[("T", fincat::terminal())], 1, caps).unwrap();
        let report = crate::montensor::verify_symmetric_closure(&b1, &caps).unwrap();
        assert!(report.passed(), "{:?}", report.failures());
        assert!(
            report.checks.iter().all(|c| !c.name.contains("skipped")),
            "battery was skipped: {:?}",
            report.checks
        );
    }

    #[test]
    fn strictness_holds_on_level_two_objects() {
        let caps = Caps {
            enriched_objects: 1,
            ..Caps::default()
        };
        let b1 = iterate_base(&[("T", fincat::terminal())], 1, caps).unwrap();
        let objects = enumerate_weak_categories(&b1, &caps).unwrap();
        assert!(!objects.is_empty());
        for x in &objects {
            let report = strictness_report(x).unwrap();
            assert!(report.passed(), "{:?}", report.failures());
            assert!(report.checks.iter().any(|c| c.anchor == "strictness.assoc"));
            assert!(report.checks.iter().any(|c| c.anchor == "strictness.unit"));
            // The globular constraint families ride along from the
            // category checker.
            assert!(report.checks.iter().any(|c| c.anchor.starts_with("enriched.")));
        }
    }

    #[test]
    fn strictness_report_rejects_level_one_objects() {
        let base = fincat_base(&[("T", fincat::terminal())], Caps::default()).unwrap();
        let x = enumerate_weak_categories(&base, &Caps::default())
            .unwrap()
            .into_iter()
            .next()
            .unwrap();
        assert!(matches!(
            strictness_report(&x),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn default_caps_enumeration_stays_within_caps_and_validates() {
        let caps = Caps::default();
        let base = tz2_base(caps.clone());
        let cats = enumerate_weak_categories(&base, &caps).unwrap();
        assert!(!cats.is_empty());
        assert!(cats.iter().any(|c| c.objects.len() == 1));
        assert!(cats.iter().any(|c| c.objects.len() == 2));
        for c in &cats {
            assert!(c.objects.len() <= caps.enriched_objects);
            assert!(check_weak_category(c).unwrap().passed());
            // nothing with an endo Z/2 hom fits the default caps
            for a in &c.objects {
                assert_ne!(c.hom0(a, a).unwrap(), "Z2");
            }
        }
    }
}
