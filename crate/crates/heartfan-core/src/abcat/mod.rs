//! Finite presentations of length abelian categories over a lattice, and the
//! categorical enumeration primitives built on them: sub/quotient class
//! closures, torsion pairs, numerical torsion pairs, semistable and face
//! subcategories.
//!
//! A category is presented by its indecomposables with their classes, a
//! table of short exact sequences with indecomposable middle (ends may be
//! decomposable, given as multisets of ids), and a Hom-existence table. This
//! is exactly the structure the constructions consume; no module theory is
//! computed here.

pub mod fixtures;

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::cone::IntCone;
use crate::error::{Error, Result};
use crate::lattice::{DualVector, LatticeVector};

pub type ObjectId = String;

/// A short exact sequence `0 -> sub -> mid -> quot -> 0` with
/// indecomposable middle; `sub` and `quot` are multisets of ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ses {
    pub sub: Vec<ObjectId>,
    pub mid: ObjectId,
    pub quot: Vec<ObjectId>,
}

/// Metadata linking a dataset to a closed-form family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyTag {
    pub kind: String,
    pub arrows: Option<u32>,
    pub depth: u32,
}

const SES_END_CAP: usize = 4;
const CLOSURE_LIMIT: usize = 100_000;

/// A validated finite presentation of a length abelian category over a
/// lattice.
#[derive(Clone, Debug)]
pub struct CategoryModel {
    name: String,
    rank: usize,
    simples: Vec<ObjectId>,
    classes: BTreeMap<ObjectId, LatticeVector>,
    ses: Vec<Ses>,
    hom: BTreeSet<(ObjectId, ObjectId)>,
    /// Truncation of an infinite category: completeness and exactness
    /// assertions are disabled downstream.
    approximate: bool,
    family: Option<FamilyTag>,
    /// Classes of nonzero subobjects (nonempty sub-multisets), per id.
    sub_closure: BTreeMap<ObjectId, BTreeSet<LatticeVector>>,
    /// Classes of nonzero quotient objects, per id.
    quot_closure: BTreeMap<ObjectId, BTreeSet<LatticeVector>>,
}

impl CategoryModel {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        name: &str,
        rank: usize,
        simples: Vec<ObjectId>,
        classes: BTreeMap<ObjectId, LatticeVector>,
        ses: Vec<Ses>,
        hom: BTreeSet<(ObjectId, ObjectId)>,
        approximate: bool,
        family: Option<FamilyTag>,
    ) -> Result<Self> {
        for (id, class) in &classes {
            if class.rank() != rank {
                return Err(Error::InvalidModel(format!(
                    "class of {id} has rank {}, expected {rank}",
                    class.rank()
                )));
            }
        }
        for s in &simples {
            if !classes.contains_key(s) {
                return Err(Error::InvalidModel(format!("dangling simple id {s}")));
            }
        }
        for (a, b) in &hom {
            if !classes.contains_key(a) || !classes.contains_key(b) {
                return Err(Error::InvalidModel(format!("dangling hom pair ({a}, {b})")));
            }
        }
        for id in classes.keys() {
            if !hom.contains(&(id.clone(), id.clone())) {
                return Err(Error::InvalidModel(format!("hom table not reflexive at {id}")));
            }
        }
        for (i, entry) in ses.iter().enumerate() {
            if entry.sub.len() > SES_END_CAP || entry.quot.len() > SES_END_CAP {
                return Err(Error::InvalidModel(format!(
                    "ses entry {i} exceeds the multiset cap of {SES_END_CAP}"
                )));
            }
            if entry.sub.is_empty() || entry.quot.is_empty() {
                return Err(Error::InvalidModel(format!("ses entry {i} is trivial")));
            }
            for id in entry.sub.iter().chain(entry.quot.iter()).chain([&entry.mid]) {
                if !classes.contains_key(id) {
                    return Err(Error::InvalidModel(format!(
                        "ses entry {i} references unknown id {id}"
                    )));
                }
            }
            let mut total = LatticeVector::zero(rank);
            for id in entry.sub.iter().chain(entry.quot.iter()) {
                total = &total + &classes[id];
            }
            if total != classes[&entry.mid] {
                return Err(Error::InvalidModel(format!(
                    "class additivity fails for ses entry {i} (middle {}): ends sum to {total}, middle has class {}",
                    entry.mid, classes[&entry.mid]
                )));
            }
            if simples.contains(&entry.mid) && !entry.sub.is_empty() && !entry.quot.is_empty() {
                return Err(Error::InvalidModel(format!(
                    "simple {} has a nontrivial ses entry",
                    entry.mid
                )));
            }
        }

        let mut model = CategoryModel {
            name: String::from(name),
            rank,
            simples,
            classes,
            ses,
            hom,
            approximate,
            family,
            sub_closure: BTreeMap::new(),
            quot_closure: BTreeMap::new(),
        };
        for id in model.classes.keys().cloned().collect::<Vec<_>>() {
            let subs = model.closure_classes(&id, Side::Sub)?;
            let quots = model.closure_classes(&id, Side::Quot)?;
            model.sub_closure.insert(id.clone(), subs);
            model.quot_closure.insert(id, quots);
        }
        Ok(model)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn simples(&self) -> &[ObjectId] {
        &self.simples
    }

    pub fn ids(&self) -> impl Iterator<Item = &ObjectId> {
        self.classes.keys()
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class(&self, id: &str) -> Result<&LatticeVector> {
        self.classes
            .get(id)
            .ok_or_else(|| Error::InvalidModel(format!("unknown object id {id}")))
    }

    pub fn classes(&self) -> &BTreeMap<ObjectId, LatticeVector> {
        &self.classes
    }

    pub fn ses(&self) -> &[Ses] {
        &self.ses
    }

    pub fn hom(&self) -> &BTreeSet<(ObjectId, ObjectId)> {
        &self.hom
    }

    pub fn has_hom(&self, a: &str, b: &str) -> bool {
        self.hom.contains(&(String::from(a), String::from(b)))
    }

    pub fn is_approximate(&self) -> bool {
        self.approximate
    }

    pub fn family(&self) -> Option<&FamilyTag> {
        self.family.as_ref()
    }

    /// The effective cone: the monoid generated by all classes.
    pub fn effective_cone(&self) -> Result<IntCone> {
        let gens: Vec<LatticeVector> = self.classes.values().cloned().collect();
        IntCone::span_int(self.rank, &gens)
    }

    /// Classes of all quotient objects of `id`, including 0 and the class of
    /// `id` itself.
    pub fn quotient_classes(&self, id: &str) -> Result<BTreeSet<LatticeVector>> {
        let mut out = self
            .quot_closure
            .get(id)
            .ok_or_else(|| Error::InvalidModel(format!("unknown object id {id}")))?
            .clone();
        out.insert(LatticeVector::zero(self.rank));
        Ok(out)
    }

    /// Classes of all subobjects of `id`, including 0 and the class of `id`.
    pub fn sub_classes(&self, id: &str) -> Result<BTreeSet<LatticeVector>> {
        let mut out = self
            .sub_closure
            .get(id)
            .ok_or_else(|| Error::InvalidModel(format!("unknown object id {id}")))?
            .clone();
        out.insert(LatticeVector::zero(self.rank));
        Ok(out)
    }

    /// Classes of nonzero subobjects (nonempty sub multisets).
    pub fn sub_classes_nonzero(&self, id: &str) -> &BTreeSet<LatticeVector> {
        &self.sub_closure[id]
    }

    /// Classes of nonzero quotient objects.
    pub fn quotient_classes_nonzero(&self, id: &str) -> &BTreeSet<LatticeVector> {
        &self.quot_closure[id]
    }

    /// Fixed point of multiset moves: drop a summand, or replace a summand
    /// by the chosen end of one of its ses entries.
    fn closure_classes(&self, id: &str, side: Side) -> Result<BTreeSet<LatticeVector>> {
        let mut seen: BTreeSet<Vec<ObjectId>> = BTreeSet::new();
        let mut work: Vec<Vec<ObjectId>> = alloc::vec![alloc::vec![String::from(id)]];
        let mut classes: BTreeSet<LatticeVector> = BTreeSet::new();
        while let Some(multiset) = work.pop() {
            if multiset.is_empty() || seen.contains(&multiset) {
                continue;
            }
            if seen.len() > CLOSURE_LIMIT {
                return Err(Error::ResourceLimit("sub/quotient class closure"));
            }
            let mut class = LatticeVector::zero(self.rank);
            for m in &multiset {
                class = &class + &self.classes[m];
            }
            classes.insert(class);
            for i in 0..multiset.len() {
                // drop summand i
                let mut dropped = multiset.clone();
                dropped.remove(i);
                if !dropped.is_empty() && !seen.contains(&dropped) {
                    work.push(dropped);
                }
                // replace summand i by an end of one of its ses entries
                for entry in &self.ses {
                    if entry.mid != multiset[i] {
                        continue;
                    }
                    let parts = match side {
                        Side::Sub => &entry.sub,
                        Side::Quot => &entry.quot,
                    };
                    if parts.is_empty() {
                        continue;
                    }
                    let mut replaced = multiset.clone();
                    replaced.remove(i);
                    replaced.extend(parts.iter().cloned());
                    replaced.sort();
                    if !seen.contains(&replaced) {
                        work.push(replaced);
                    }
                }
            }
            seen.insert(multiset);
        }
        Ok(classes)
    }

    /// All torsion pairs, in deterministic order (by torsion-class size,
    /// then lexicographically).
    pub fn torsion_pairs(&self) -> Result<Vec<TorsionPair>> {
        let ids: Vec<ObjectId> = self.classes.keys().cloned().collect();
        let n = ids.len();
        if n > 20 {
            return Err(Error::ResourceLimit("torsion pair enumeration"));
        }
        let mut pairs: Vec<TorsionPair> = Vec::new();
        for mask in 0u32..(1u32 << n) {
            let t: BTreeSet<ObjectId> = ids
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, id)| id.clone())
                .collect();
            if !self.is_torsion_closed(&t) {
                continue;
            }
            let f: BTreeSet<ObjectId> = ids
                .iter()
                .filter(|x| !t.iter().any(|tt| self.has_hom(tt, x)))
                .cloned()
                .collect();
            if let Some(pair) = self.validate_pair(&t, &f)? {
                pairs.push(pair);
            }
        }
        pairs.sort_by(|a, b| {
            (a.torsion.ids.len(), &a.torsion.ids).cmp(&(b.torsion.ids.len(), &b.torsion.ids))
        });
        Ok(pairs)
    }

    /// Torsion-class closure rules on a candidate set: quotients of members
    /// stay in; extensions with both ends in come in.
    fn is_torsion_closed(&self, t: &BTreeSet<ObjectId>) -> bool {
        for entry in &self.ses {
            let mid_in = t.contains(&entry.mid);
            if mid_in && !entry.quot.iter().all(|q| t.contains(q)) {
                return false;
            }
            if !mid_in
                && !entry.sub.is_empty()
                && !entry.quot.is_empty()
                && entry.sub.iter().all(|s| t.contains(s))
                && entry.quot.iter().all(|q| t.contains(q))
            {
                return false;
            }
        }
        true
    }

    /// Torsion-free closure rules: subobjects of members stay in;
    /// extensions with both ends in come in.
    fn is_torsionfree_closed(&self, f: &BTreeSet<ObjectId>) -> bool {
        for entry in &self.ses {
            let mid_in = f.contains(&entry.mid);
            if mid_in && !entry.sub.iter().all(|s| f.contains(s)) {
                return false;
            }
            if !mid_in
                && !entry.sub.is_empty()
                && !entry.quot.is_empty()
                && entry.sub.iter().all(|s| f.contains(s))
                && entry.quot.iter().all(|q| f.contains(q))
            {
                return false;
            }
        }
        true
    }

    /// Full torsion-pair validation: Hom(T, F) = 0, closures on both sides,
    /// and a decomposition for every indecomposable.
    fn validate_pair(
        &self,
        t: &BTreeSet<ObjectId>,
        f: &BTreeSet<ObjectId>,
    ) -> Result<Option<TorsionPair>> {
        for tt in t {
            for ff in f {
                if self.has_hom(tt, ff) {
                    return Ok(None);
                }
            }
        }
        if !self.is_torsionfree_closed(f) {
            return Ok(None);
        }
        for id in self.classes.keys() {
            if t.contains(id) || f.contains(id) {
                continue;
            }
            let decomposes = self.ses.iter().any(|entry| {
                entry.mid == *id
                    && entry.sub.iter().all(|s| t.contains(s))
                    && entry.quot.iter().all(|q| f.contains(q))
            });
            if !decomposes {
                return Ok(None);
            }
        }
        Ok(Some(TorsionPair {
            torsion: Subcat {
                ids: t.iter().cloned().collect(),
                kind: ClosureKind::Torsion,
            },
            torsionfree: Subcat {
                ids: f.iter().cloned().collect(),
                kind: ClosureKind::TorsionFree,
            },
        }))
    }

    /// The numerical torsion pairs of a dual vector: the lower pair
    /// `(T_v, Fbar_v)` (strict on quotients) and the upper pair
    /// `(Tbar_v, F_v)` (strict on subobjects).
    pub fn numerical_tp(&self, v: &DualVector) -> Result<NumericalPairs> {
        let mut t_strict = Vec::new();
        let mut t_lax = Vec::new();
        let mut f_strict = Vec::new();
        let mut f_lax = Vec::new();
        for id in self.classes.keys() {
            let quots = self.quotient_classes_nonzero(id);
            let subs = self.sub_classes_nonzero(id);
            let mut q_all_pos = true;
            let mut q_all_nonneg = true;
            for c in quots {
                let val = v.pair(c)?;
                if !val.is_positive() {
                    q_all_pos = false;
                }
                if val.is_negative() {
                    q_all_nonneg = false;
                }
            }
            let mut s_all_neg = true;
            let mut s_all_nonpos = true;
            for c in subs {
                let val = v.pair(c)?;
                if !val.is_negative() {
                    s_all_neg = false;
                }
                if val.is_positive() {
                    s_all_nonpos = false;
                }
            }
            if q_all_pos {
                t_strict.push(id.clone());
            }
            if q_all_nonneg {
                t_lax.push(id.clone());
            }
            if s_all_neg {
                f_strict.push(id.clone());
            }
            if s_all_nonpos {
                f_lax.push(id.clone());
            }
        }
        let lower = TorsionPair {
            torsion: Subcat { ids: t_strict, kind: ClosureKind::Torsion },
            torsionfree: Subcat { ids: f_lax, kind: ClosureKind::TorsionFree },
        };
        let upper = TorsionPair {
            torsion: Subcat { ids: t_lax, kind: ClosureKind::Torsion },
            torsionfree: Subcat { ids: f_strict, kind: ClosureKind::TorsionFree },
        };
        Ok(NumericalPairs { lower, upper })
    }

    /// King-semistable objects of `v`: class pairs to zero and `v <= 0` on
    /// all subobject classes. The stable flag additionally requires that no
    /// subobject class other than 0 and the full class pairs to zero.
    pub fn semistable(&self, v: &DualVector) -> Result<Semistables> {
        let mut members = Vec::new();
        for (id, class) in &self.classes {
            if !v.pair(class)?.is_zero() {
                continue;
            }
            let subs = self.sub_classes_nonzero(id);
            let mut ok = true;
            for c in subs {
                if v.pair(c)?.is_positive() {
                    ok = false;
                    break;
                }
            }
            if !ok {
                continue;
            }
            let mut stable = true;
            for c in subs {
                if c != class && !c.is_zero() && v.pair(c)?.is_zero() {
                    stable = false;
                    break;
                }
            }
            members.push((id.clone(), stable));
        }
        Ok(Semistables { members })
    }

    /// Face subcategories: for each face of the effective cone, the ids
    /// whose class lies on it. Each is verified Serre against the ses table.
    pub fn face_subcats(&self) -> Result<Vec<(IntCone, Subcat)>> {
        let eff = self.effective_cone()?;
        let mut out = Vec::new();
        for face in eff.face_poset()?.faces {
            let ids: Vec<ObjectId> = self
                .classes
                .iter()
                .filter(|(_, c)| face.real.contains_lattice(c))
                .map(|(id, _)| id.clone())
                .collect();
            let sub = Subcat { ids, kind: ClosureKind::Serre };
            sub.verify_serre(self)?;
            out.push((face.cone, sub));
        }
        Ok(out)
    }

    /// Objects with class zero.
    pub fn null_subcat(&self) -> Subcat {
        let ids: Vec<ObjectId> = self
            .classes
            .iter()
            .filter(|(_, c)| c.is_zero())
            .map(|(id, _)| id.clone())
            .collect();
        Subcat { ids, kind: ClosureKind::Serre }
    }

    /// The restriction of the model to a subset of objects (entries and hom
    /// pairs entirely inside the subset are kept).
    pub fn restrict(&self, ids: &[ObjectId], name: &str) -> Result<CategoryModel> {
        let keep: BTreeSet<&ObjectId> = ids.iter().collect();
        let classes: BTreeMap<ObjectId, LatticeVector> = self
            .classes
            .iter()
            .filter(|(id, _)| keep.contains(id))
            .map(|(id, c)| (id.clone(), c.clone()))
            .collect();
        let ses: Vec<Ses> = self
            .ses
            .iter()
            .filter(|e| {
                keep.contains(&e.mid)
                    && e.sub.iter().all(|s| keep.contains(s))
                    && e.quot.iter().all(|q| keep.contains(q))
            })
            .cloned()
            .collect();
        let hom: BTreeSet<(ObjectId, ObjectId)> = self
            .hom
            .iter()
            .filter(|(a, b)| keep.contains(a) && keep.contains(b))
            .cloned()
            .collect();
        let simples: Vec<ObjectId> =
            self.simples.iter().filter(|s| keep.contains(s)).cloned().collect();
        CategoryModel::new(name, self.rank, simples, classes, ses, hom, self.approximate, None)
    }
}

enum Side {
    Sub,
    Quot,
}

/// Closure property a subcategory is tagged with.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ClosureKind {
    None,
    Torsion,
    TorsionFree,
    Serre,
    Wide,
}

/// A subcategory, presented by the indecomposables it contains.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Subcat {
    pub ids: Vec<ObjectId>,
    pub kind: ClosureKind,
}

impl Subcat {
    pub fn new(mut ids: Vec<ObjectId>, kind: ClosureKind) -> Self {
        ids.sort();
        ids.dedup();
        Subcat { ids, kind }
    }

    pub fn contains(&self, id: &str) -> bool {
        self.ids.iter().any(|x| x == id)
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn classes<'m>(&self, model: &'m CategoryModel) -> Result<Vec<&'m LatticeVector>> {
        self.ids.iter().map(|id| model.class(id)).collect()
    }

    /// Serre closure check against the ses table: the middle of an entry is
    /// in the subcategory iff both ends are.
    pub fn verify_serre(&self, model: &CategoryModel) -> Result<()> {
        for entry in model.ses() {
            let mid_in = self.contains(&entry.mid);
            let ends_in = entry
                .sub
                .iter()
                .chain(entry.quot.iter())
                .all(|id| self.contains(id));
            if mid_in != ends_in && !entry.sub.is_empty() && !entry.quot.is_empty() {
                return Err(Error::InvalidModel(format!(
                    "subcategory is not Serre: entry with middle {} straddles it",
                    entry.mid
                )));
            }
        }
        Ok(())
    }
}

/// A torsion pair of subcategories.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct TorsionPair {
    pub torsion: Subcat,
    pub torsionfree: Subcat,
}

impl TorsionPair {
    /// Printable label, used to name tilted hearts in reports.
    pub fn label(&self) -> String {
        format!(
            "T{{{}}}|F{{{}}}",
            self.torsion.ids.join(","),
            self.torsionfree.ids.join(",")
        )
    }
}

/// The lower and upper numerical torsion pairs of a dual vector.
#[derive(Clone, Debug)]
pub struct NumericalPairs {
    pub lower: TorsionPair,
    pub upper: TorsionPair,
}

/// Semistable objects with their stability flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Semistables {
    pub members: Vec<(ObjectId, bool)>,
}

impl Semistables {
    pub fn ids(&self) -> Vec<ObjectId> {
        self.members.iter().map(|(id, _)| id.clone()).collect()
    }

    pub fn subcat(&self) -> Subcat {
        Subcat::new(self.ids(), ClosureKind::Wide)
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Numerical comparison helper: pair and test sign, used by downstream
/// modules.
pub fn pair_sign(v: &DualVector, c: &LatticeVector) -> Result<i8> {
    let val: BigRational = v.pair(c)?;
    Ok(if val.is_positive() {
        1
    } else if val.is_negative() {
        -1
    } else {
        0
    })
}
