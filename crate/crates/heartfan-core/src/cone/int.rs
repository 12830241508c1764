//! Integral cones: finitely generated submonoids of a lattice.
//!
//! An `IntCone` is the set of non-negative integer combinations of its
//! generators. Monoid equality is structural equality of the canonical key:
//! the HNF basis of the unit group together with the atoms of the sharp
//! quotient monoid (reduced canonically modulo the unit lattice). Membership
//! is decided exactly by a bounded search: a functional strictly positive on
//! the sharp generators bounds the coefficients, and the unit part reduces to
//! lattice membership.

use alloc::string::ToString;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::cone::rat::RatCone;
use crate::error::{Error, Result};
use crate::lattice::LatticeVector;
use crate::linalg;

const MEMBER_SEARCH_LIMIT: u64 = 4_000_000;

#[derive(Clone)]
pub struct IntCone {
    rank: usize,
    /// Normalized but otherwise as-given generators (sorted, deduplicated,
    /// zero dropped). These define the monoid; they are *not* scaled.
    gens: Vec<LatticeVector>,
    hull: RatCone,
    /// HNF basis of the unit group (the maximal subgroup of the monoid).
    units: Vec<LatticeVector>,
    /// Atoms of the sharp quotient: canonical coset representatives modulo
    /// the unit lattice of an irredundant generating set.
    atoms: Vec<LatticeVector>,
    /// A functional strictly positive on every atom, zero on the units.
    grading: LatticeVector,
}

impl PartialEq for IntCone {
    fn eq(&self, other: &Self) -> bool {
        self.key() == other.key()
    }
}

impl Eq for IntCone {}

impl PartialOrd for IntCone {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for IntCone {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.key().cmp(&other.key())
    }
}

impl core::fmt::Debug for IntCone {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "IntCone{{gens: {:?}}}", self.gens)
    }
}

impl core::fmt::Display for IntCone {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "monoid[{}]", crate::lattice::display_list(&self.gens))
    }
}

/// Exact attribute record for a cone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeProps {
    pub dim: usize,
    pub is_full: bool,
    pub is_strictly_convex: bool,
    pub is_smooth: bool,
    pub is_polyhedral: bool,
}

impl IntCone {
    /// The monoid generated by the given vectors.
    pub fn span_int(rank: usize, gens: &[LatticeVector]) -> Result<Self> {
        for g in gens {
            if g.rank() != rank {
                return Err(Error::RankMismatch { expected: rank, found: g.rank() });
            }
        }
        let mut gens: Vec<LatticeVector> =
            gens.iter().filter(|g| !g.is_zero()).cloned().collect();
        gens.sort();
        gens.dedup();
        let hull = RatCone::from_generators(rank, &gens, &[])?;

        // generators that are units of the monoid are exactly those lying in
        // the lineality of the hull
        let unit_gens: Vec<Vec<BigInt>> = gens
            .iter()
            .filter(|g| hull.contains_lattice(&-*g))
            .map(|g| g.coords().to_vec())
            .collect();
        let unit_rows = linalg::hnf(&unit_gens);
        let units: Vec<LatticeVector> =
            unit_rows.iter().map(|r| LatticeVector::new(r.clone())).collect();

        // grading: sum of the facet normals of the hull is strictly positive
        // on every generator outside the lineality
        let mut grading = LatticeVector::zero(rank);
        for h in hull.facets() {
            grading = &grading + h;
        }

        // sharp generators, reduced canonically modulo the unit lattice
        let mut reduced: Vec<LatticeVector> = gens
            .iter()
            .filter(|g| !hull.contains_lattice(&-*g))
            .map(|g| LatticeVector::new(linalg::hermite_reduce(&unit_rows, g.coords())))
            .collect();
        reduced.sort();
        reduced.dedup();

        let mut cone = IntCone { rank, gens, hull, units, atoms: reduced, grading };
        cone.atoms = cone.minimal_atoms()?;
        Ok(cone)
    }

    pub fn from_i64(rank: usize, gens: &[&[i64]]) -> Self {
        let gens: Vec<LatticeVector> = gens.iter().map(|g| LatticeVector::from_i64(g)).collect();
        Self::span_int(rank, &gens).expect("generator ranks match")
    }

    pub fn zero(rank: usize) -> Self {
        Self::span_int(rank, &[]).expect("zero cone is always valid")
    }

    /// Greedy removal of redundant atoms; for a sharp quotient monoid the
    /// result is the unique atom set.
    fn minimal_atoms(&self) -> Result<Vec<LatticeVector>> {
        let mut kept: Vec<LatticeVector> = self.atoms.clone();
        let mut i = 0;
        while i < kept.len() {
            let candidate = kept[i].clone();
            let mut rest = kept.clone();
            rest.remove(i);
            let expressible = member_sharp(
                &rest,
                &self.units_rows(),
                &self.grading,
                &candidate,
                MEMBER_SEARCH_LIMIT,
            )?;
            if expressible {
                kept.remove(i);
            } else {
                i += 1;
            }
        }
        Ok(kept)
    }

    fn units_rows(&self) -> Vec<Vec<BigInt>> {
        self.units.iter().map(|u| u.coords().to_vec()).collect()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> &[LatticeVector] {
        &self.gens
    }

    /// The canonical key deciding monoid equality.
    pub fn key(&self) -> (usize, &[LatticeVector], &[LatticeVector]) {
        (self.rank, &self.units, &self.atoms)
    }

    /// HNF basis of the unit group of the monoid.
    pub fn unit_basis(&self) -> &[LatticeVector] {
        &self.units
    }

    /// Canonical irredundant generators of the sharp quotient.
    pub fn atoms(&self) -> &[LatticeVector] {
        &self.atoms
    }

    pub fn is_zero(&self) -> bool {
        self.units.is_empty() && self.atoms.is_empty()
    }

    /// The convex hull: the closure of the real cone generated by the
    /// monoid.
    pub fn hull(&self) -> &RatCone {
        &self.hull
    }

    /// Exact monoid membership by bounded search.
    pub fn member(&self, x: &LatticeVector) -> Result<bool> {
        if x.rank() != self.rank {
            return Err(Error::RankMismatch { expected: self.rank, found: x.rank() });
        }
        if x.is_zero() {
            return Ok(true);
        }
        if !self.hull.contains_lattice(x) {
            return Ok(false);
        }
        member_sharp(&self.atoms, &self.units_rows(), &self.grading, x, MEMBER_SEARCH_LIMIT)
    }

    pub fn contains_cone(&self, sub: &IntCone) -> Result<bool> {
        for g in &sub.gens {
            if !self.member(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Minkowski sum (generator union).
    pub fn minkowski_sum(&self, other: &IntCone) -> Result<IntCone> {
        if other.rank != self.rank {
            return Err(Error::RankMismatch { expected: self.rank, found: other.rank });
        }
        let gens: Vec<LatticeVector> =
            self.gens.iter().chain(other.gens.iter()).cloned().collect();
        IntCone::span_int(self.rank, &gens)
    }

    /// Minkowski difference `self - other` (negated generators of `other`).
    pub fn minkowski_diff(&self, other: &IntCone) -> Result<IntCone> {
        if other.rank != self.rank {
            return Err(Error::RankMismatch { expected: self.rank, found: other.rank });
        }
        let gens: Vec<LatticeVector> = self
            .gens
            .iter()
            .cloned()
            .chain(other.gens.iter().map(|g| -g))
            .collect();
        IntCone::span_int(self.rank, &gens)
    }

    /// The face lattice, via the poset isomorphism with the faces of the
    /// hull: the integral face attached to a real face consists of the
    /// generators lying on it.
    pub fn face_poset(&self) -> Result<IntFacePoset> {
        let real = self.hull.face_poset();
        let mut faces = Vec::with_capacity(real.len());
        for f in &real.faces {
            let gens: Vec<LatticeVector> = self
                .gens
                .iter()
                .filter(|g| f.cone.contains_lattice(g))
                .cloned()
                .collect();
            let cone = IntCone::span_int(self.rank, &gens)?;
            faces.push(IntFace { dim: cone.dim(), exposed: true, cone, real: f.cone.clone() });
        }
        Ok(IntFacePoset { faces })
    }

    /// All faces are exposed for a finitely generated cone; this is
    /// `face_poset` with the exposedness made explicit.
    pub fn exposed_faces(&self) -> Result<IntFacePoset> {
        self.face_poset()
    }

    /// The minimal face containing `sub` (which must be a subcone).
    pub fn min_face(&self, sub: &IntCone) -> Result<IntCone> {
        if !self.contains_cone(sub)? {
            return Err(Error::NotContained);
        }
        // active facet normals: those vanishing on all of `sub`
        let active: Vec<&LatticeVector> = self
            .hull
            .facets()
            .iter()
            .filter(|h| sub.gens.iter().all(|g| h.dot(g).is_zero()))
            .collect();
        let gens: Vec<LatticeVector> = self
            .gens
            .iter()
            .filter(|g| active.iter().all(|h| h.dot(g).is_zero()))
            .cloned()
            .collect();
        IntCone::span_int(self.rank, &gens)
    }

    /// Whether `face` is a face of `self`.
    pub fn is_face(&self, face: &IntCone) -> Result<bool> {
        if !self.contains_cone(face)? {
            return Ok(false);
        }
        Ok(&self.min_face(face)? == face)
    }

    /// The localisation `self - sub`, equal to the localisation at the
    /// minimal face containing `sub`.
    pub fn localize(&self, sub: &IntCone) -> Result<IntCone> {
        let mf = self.min_face(sub)?;
        let gens: Vec<LatticeVector> =
            self.gens.iter().cloned().chain(mf.gens.iter().map(|g| -g)).collect();
        IntCone::span_int(self.rank, &gens)
    }

    /// Whether `self` is a coface of `other`, i.e. a localisation of `other`
    /// at one of its faces.
    pub fn is_coface_of(&self, other: &IntCone) -> Result<bool> {
        for face in other.face_poset()?.faces {
            if &other.localize(&face.cone)? == self {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// The dual face `dual(self - face) = dual(self) ∩ face^perp` as a real
    /// cone in the dual space.
    pub fn dual_face(&self, face: &IntCone) -> Result<RatCone> {
        if !self.is_face(face)? {
            return Err(Error::NotAFace);
        }
        RatCone::from_halfspaces(
            self.rank,
            &self.gens,
            &face.gens.iter().cloned().collect::<Vec<_>>(),
        )
    }

    /// Dimension: the rank of the group of differences.
    pub fn dim(&self) -> usize {
        let rows: Vec<Vec<BigInt>> = self.gens.iter().map(|g| g.coords().to_vec()).collect();
        linalg::row_rank(&rows)
    }

    pub fn is_strictly_convex(&self) -> bool {
        self.units.is_empty()
    }

    /// The saturation `hull ∩ lattice`, generated by its Hilbert basis (plus
    /// a basis of the saturated unit lattice and its negatives).
    pub fn saturate(&self) -> Result<IntCone> {
        let lin = self.hull.lineality();
        let mut gens: Vec<LatticeVector> = Vec::new();
        for b in lin {
            gens.push(b.clone());
            gens.push(-b);
        }
        let sharp_rays: Vec<LatticeVector> = self.hull.rays().to_vec();
        if !sharp_rays.is_empty() {
            let lin_rows: Vec<Vec<BigInt>> = lin.iter().map(|v| v.coords().to_vec()).collect();
            if lin_rows.is_empty() {
                gens.extend(hilbert_basis_sharp(self.rank, &self.hull)?);
            } else {
                // project to the quotient, compute there, lift canonically
                let proj = linalg::quotient_projection(&lin_rows, self.rank);
                let qrank = proj.len();
                let proj_cols: Vec<Vec<BigInt>> = (0..self.rank)
                    .map(|i| proj.iter().map(|r| r[i].clone()).collect())
                    .collect();
                let down: Vec<LatticeVector> = sharp_rays
                    .iter()
                    .map(|r| {
                        LatticeVector::new(linalg::apply_matrix(&proj, r.coords()))
                            .primitive_or_zero()
                    })
                    .collect();
                let down_cone = RatCone::from_generators(qrank, &down, &[])?;
                for h in hilbert_basis_sharp(qrank, &down_cone)? {
                    let lift = linalg::solve_in_row_lattice(&proj_cols, h.coords())
                        .expect("quotient projection is surjective");
                    gens.push(LatticeVector::new(linalg::hermite_reduce(&lin_rows, &lift)));
                }
            }
        }
        IntCone::span_int(self.rank, &gens)
    }

    /// Whether the monoid equals its saturation.
    pub fn is_saturated(&self) -> Result<bool> {
        Ok(&self.saturate()? == self)
    }

    /// Exact attributes. Smooth means generated by part of a lattice basis:
    /// strictly convex, atoms linearly independent, and the atom matrix
    /// extends to a basis.
    pub fn props(&self) -> ConeProps {
        let dim = self.dim();
        let is_full = dim == self.rank;
        let is_strictly_convex = self.is_strictly_convex();
        let rows: Vec<Vec<BigInt>> = self.atoms.iter().map(|a| a.coords().to_vec()).collect();
        let is_smooth = is_strictly_convex
            && linalg::row_rank(&rows) == self.atoms.len()
            && linalg::maximal_minors_coprime(&rows);
        ConeProps { dim, is_full, is_strictly_convex, is_smooth, is_polyhedral: true }
    }

    /// The group of differences, as a cone.
    pub fn group_closure(&self) -> Result<IntCone> {
        self.minkowski_diff(self)
    }
}

/// Decide `x ∈ {sum a_i atom_i + u : a_i >= 0, u in unit lattice}` by DFS
/// with a grading bound.
fn member_sharp(
    atoms: &[LatticeVector],
    unit_rows: &[Vec<BigInt>],
    grading: &LatticeVector,
    x: &LatticeVector,
    limit: u64,
) -> Result<bool> {
    fn in_units(unit_rows: &[Vec<BigInt>], v: &LatticeVector) -> bool {
        linalg::is_zero_vec(&linalg::hermite_reduce(unit_rows, v.coords()))
    }

    fn dfs(
        atoms: &[LatticeVector],
        unit_rows: &[Vec<BigInt>],
        grading: &LatticeVector,
        rest: LatticeVector,
        idx: usize,
        budget: &mut u64,
    ) -> Result<bool> {
        if *budget == 0 {
            return Err(Error::ResourceLimit("monoid membership search"));
        }
        *budget -= 1;
        let w = grading.dot(&rest);
        if w.is_negative() {
            return Ok(false);
        }
        if idx == atoms.len() {
            return Ok(in_units(unit_rows, &rest));
        }
        let wa = grading.dot(&atoms[idx]);
        debug_assert!(wa.is_positive());
        let max: BigInt = &w / &wa;
        let mut k = BigInt::zero();
        let mut current = rest.clone();
        loop {
            if dfs(atoms, unit_rows, grading, current.clone(), idx + 1, budget)? {
                return Ok(true);
            }
            k += 1;
            if k > max {
                return Ok(false);
            }
            current = &current - &atoms[idx];
        }
    }

    let mut budget = limit;
    dfs(atoms, unit_rows, grading, x.clone(), 0, &mut budget)
}

/// Hilbert basis of the saturated monoid of a *strictly convex* rational
/// cone: enumerate the lattice points of the cone below the grading bound by
/// DFS over coordinates, then keep the additively irreducible ones.
fn hilbert_basis_sharp(rank: usize, hull: &RatCone) -> Result<Vec<LatticeVector>> {
    use alloc::collections::BTreeSet;
    use num_rational::BigRational;

    debug_assert!(hull.is_strictly_convex());
    if hull.rays().is_empty() {
        return Ok(Vec::new());
    }
    let mut grading = LatticeVector::zero(rank);
    for h in hull.facets() {
        grading = &grading + h;
    }
    let rays: Vec<LatticeVector> = hull.rays().iter().map(|r| r.primitive_or_zero()).collect();
    let mut bound = BigInt::zero();
    for r in &rays {
        bound += grading.dot(r);
    }

    // coordinate box: the region {x in cone, grading(x) <= bound} has
    // vertices (bound / grading(r)) * r over the extreme rays r
    let mut lo = alloc::vec![BigInt::zero(); rank];
    let mut hi = alloc::vec![BigInt::zero(); rank];
    for r in &rays {
        let w = grading.dot(r);
        debug_assert!(w.is_positive());
        for j in 0..rank {
            let extent = BigRational::new(&bound * &r.coords()[j], w.clone());
            let fl = extent.floor().to_integer();
            let ce = extent.ceil().to_integer();
            if fl < lo[j] {
                lo[j] = fl;
            }
            if ce > hi[j] {
                hi[j] = ce;
            }
        }
    }

    let mut points: BTreeSet<LatticeVector> = BTreeSet::new();
    let mut stack: Vec<Vec<BigInt>> = alloc::vec![Vec::new()];
    let mut steps: u64 = 0;
    while let Some(prefix) = stack.pop() {
        steps += 1;
        if steps > MEMBER_SEARCH_LIMIT {
            return Err(Error::ResourceLimit("Hilbert basis enumeration"));
        }
        if prefix.len() == rank {
            let v = LatticeVector::new(prefix);
            if !v.is_zero() && hull.contains_lattice(&v) && grading.dot(&v) <= bound {
                points.insert(v);
            }
            continue;
        }
        let j = prefix.len();
        let mut c = lo[j].clone();
        while c <= hi[j] {
            let mut next = prefix.clone();
            next.push(c.clone());
            // prune: partial grading already puts every completion over the
            // bound only when remaining coordinates cannot reduce it; keep
            // the simple box here, cones in practice are small
            stack.push(next);
            c += 1;
        }
    }

    // irreducible elements only
    let points_vec: Vec<LatticeVector> = points.iter().cloned().collect();
    let mut basis: Vec<LatticeVector> = Vec::new();
    'outer: for p in &points_vec {
        for a in &points_vec {
            let rest = p - a;
            if !rest.is_zero() && points.contains(&rest) {
                continue 'outer;
            }
        }
        basis.push(p.clone());
    }
    Ok(basis)
}

/// A face of an integral cone, with the corresponding real face of the hull.
#[derive(Clone, Debug)]
pub struct IntFace {
    pub cone: IntCone,
    pub real: RatCone,
    pub dim: usize,
    pub exposed: bool,
}

/// The graded face lattice of an integral cone.
#[derive(Clone, Debug)]
pub struct IntFacePoset {
    pub faces: Vec<IntFace>,
}

impl IntFacePoset {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn cones(&self) -> impl Iterator<Item = &IntCone> {
        self.faces.iter().map(|f| &f.cone)
    }
}

impl IntCone {
    /// Printable summary for error messages.
    pub fn describe(&self) -> alloc::string::String {
        self.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lv(xs: &[i64]) -> LatticeVector {
        LatticeVector::from_i64(xs)
    }

    fn ic(gens: &[&[i64]]) -> IntCone {
        let rank = gens.first().map(|g| g.len()).unwrap_or(2);
        IntCone::from_i64(rank, gens)
    }

    #[test]
    fn span_examples() {
        let empty = IntCone::zero(2);
        assert!(empty.is_zero());
        assert!(empty.member(&lv(&[0, 0])).unwrap());

        let quadrant = ic(&[&[1, 0], &[0, 1]]);
        assert!(quadrant.member(&lv(&[3, 5])).unwrap());
        assert!(!quadrant.member(&lv(&[-1, 0])).unwrap());

        // (1,1) is not a non-negative integer combination of (2,1),(1,2)
        let skew = ic(&[&[2, 1], &[1, 2]]);
        assert!(!skew.member(&lv(&[1, 1])).unwrap());
        assert!(skew.member(&lv(&[3, 3])).unwrap()); // (2,1)+(1,2)
        assert!(skew.member(&lv(&[0, 0])).unwrap());
    }

    #[test]
    fn monoid_equality_is_presentation_independent() {
        let a = ic(&[&[1, 0], &[0, 1], &[1, 1], &[2, 3]]);
        let b = ic(&[&[0, 1], &[1, 0]]);
        assert_eq!(a, b);
        // non-saturated: {(2,0)} differs from {(1,0)}
        assert_ne!(ic(&[&[2, 0]]), ic(&[&[1, 0]]));
        // group presentations: units normalize
        let g1 = ic(&[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]]);
        let g2 = ic(&[&[1, 0], &[-1, 0], &[0, 1], &[-1, -1]]);
        assert_eq!(g1, g2);
    }

    #[test]
    fn hull_examples() {
        assert!(IntCone::zero(2).hull().is_zero());
        let skew = ic(&[&[2, 1], &[1, 2]]);
        assert_eq!(skew.hull().rays(), &[lv(&[1, 2]), lv(&[2, 1])]);
        let half = ic(&[&[1, 0], &[-1, 0], &[0, 1]]);
        assert_eq!(half.hull().lineality(), &[lv(&[1, 0])]);
        assert_eq!(half.hull().rays(), &[lv(&[0, 1])]);
    }

    #[test]
    fn face_poset_of_quadrant_monoid() {
        let quadrant = ic(&[&[1, 0], &[0, 1]]);
        let faces = quadrant.face_poset().unwrap();
        assert_eq!(faces.len(), 4);
        assert!(faces.faces.iter().all(|f| f.exposed));
        // zero cone face poset
        assert_eq!(IntCone::zero(2).face_poset().unwrap().len(), 1);
        // interior generator spans no face
        let c = ic(&[&[1, 0], &[1, 1], &[1, 2]]);
        let faces = c.face_poset().unwrap();
        assert_eq!(faces.len(), 4);
        let rays: Vec<&IntCone> =
            faces.faces.iter().filter(|f| f.dim == 1).map(|f| &f.cone).collect();
        assert!(rays.iter().all(|f| {
            f.generators() == [lv(&[1, 0])] || f.generators() == [lv(&[1, 2])]
        }));
    }

    #[test]
    fn min_face_examples() {
        let quadrant = ic(&[&[1, 0], &[0, 1]]);
        assert!(quadrant.min_face(&IntCone::zero(2)).unwrap().is_zero());

        let c = ic(&[&[1, 0], &[1, 1]]);
        let mf = c.min_face(&ic(&[&[1, 0]])).unwrap();
        assert_eq!(mf, ic(&[&[1, 0]]));
        // (2,1) is interior, so the minimal face is the whole cone
        let mf = c.min_face(&ic(&[&[2, 1]])).unwrap();
        assert_eq!(mf, c);
        // containment error
        assert_eq!(c.min_face(&ic(&[&[0, 1]])).unwrap_err(), Error::NotContained);
    }

    #[test]
    fn localize_examples() {
        let quadrant = ic(&[&[1, 0], &[0, 1]]);
        assert_eq!(quadrant.localize(&IntCone::zero(2)).unwrap(), quadrant);

        let upper = quadrant.localize(&ic(&[&[1, 0]])).unwrap();
        assert_eq!(upper, ic(&[&[1, 0], &[-1, 0], &[0, 1]]));
        assert!(upper.member(&lv(&[-7, 2])).unwrap());
        assert!(!upper.member(&lv(&[0, -1])).unwrap());

        let group = quadrant.localize(&quadrant).unwrap();
        assert_eq!(group, ic(&[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]]));
        assert!(group.member(&lv(&[-5, -9])).unwrap());
        // localisation factors through the minimal face
        let c = ic(&[&[1, 0], &[1, 1]]);
        let at_interior = c.localize(&ic(&[&[2, 1]])).unwrap();
        assert_eq!(at_interior, c.group_closure().unwrap());
    }

    #[test]
    fn saturation_examples() {
        let quadrant = ic(&[&[1, 0], &[0, 1]]);
        assert_eq!(quadrant.saturate().unwrap(), quadrant);
        assert!(quadrant.is_saturated().unwrap());

        let skew = ic(&[&[2, 1], &[1, 2]]);
        let sat = skew.saturate().unwrap();
        assert!(sat.member(&lv(&[1, 1])).unwrap());
        assert_eq!(sat, ic(&[&[2, 1], &[1, 1], &[1, 2]]));
        assert!(!skew.is_saturated().unwrap());

        let double = ic(&[&[2, 0]]);
        assert_eq!(double.saturate().unwrap(), ic(&[&[1, 0]]));
        // idempotent
        assert_eq!(sat.saturate().unwrap(), sat);
        assert_eq!(sat.hull(), skew.hull());
    }

    #[test]
    fn props_examples() {
        let quadrant = ic(&[&[1, 0], &[0, 1]]);
        let p = quadrant.props();
        assert!(p.is_full && p.is_strictly_convex && p.is_smooth && p.is_polyhedral);

        let upper = ic(&[&[1, 0], &[-1, 0], &[0, 1]]);
        let p = upper.props();
        assert!(p.is_full && !p.is_strictly_convex);

        let sat = ic(&[&[2, 1], &[1, 2]]).saturate().unwrap();
        let p = sat.props();
        assert!(p.is_full && p.is_strictly_convex && !p.is_smooth);
        assert_eq!(crate::linalg::det(&[
            lv(&[2, 1]).coords().to_vec(),
            lv(&[1, 2]).coords().to_vec()
        ]), num_bigint::BigInt::from(3));

        // non-saturated monoid on a primitive-looking ray is not smooth
        assert!(!ic(&[&[2, 0]]).props().is_smooth);
        assert!(ic(&[&[3, 0], &[2, 0]]).props().is_smooth == false);
    }

    #[test]
    fn minkowski_examples() {
        let quadrant = ic(&[&[1, 0], &[0, 1]]);
        assert_eq!(quadrant.minkowski_sum(&IntCone::zero(2)).unwrap(), quadrant);
        let upper = quadrant.minkowski_diff(&ic(&[&[1, 0]])).unwrap();
        assert_eq!(upper, ic(&[&[1, 0], &[-1, 0], &[0, 1]]));
        let hull = quadrant.minkowski_diff(&quadrant).unwrap();
        assert_eq!(hull, quadrant.group_closure().unwrap());
    }

    #[test]
    fn dual_face_examples() {
        let quadrant = ic(&[&[1, 0], &[0, 1]]);
        let d = quadrant.dual_face(&IntCone::zero(2)).unwrap();
        assert_eq!(d, quadrant.hull().dual());

        let d = quadrant.dual_face(&ic(&[&[1, 0]])).unwrap();
        assert_eq!(d.rays(), &[lv(&[0, 1])]);
        assert_eq!(d.dim(), 1);

        let d = quadrant.dual_face(&quadrant).unwrap();
        assert!(d.is_zero());

        // witness form: dual(c) sliced by one relative-interior point
        let face = ic(&[&[1, 0]]);
        let witness = lv(&[1, 0]);
        let direct = quadrant.hull().dual().intersect_orthogonal(&[witness]).unwrap();
        assert_eq!(quadrant.dual_face(&face).unwrap(), direct);

        // non-face input
        assert_eq!(
            quadrant.dual_face(&ic(&[&[1, 1]])).unwrap_err(),
            Error::NotAFace
        );
    }

    #[test]
    fn coface_relation() {
        let quadrant = ic(&[&[1, 0], &[0, 1]]);
        let upper = ic(&[&[1, 0], &[-1, 0], &[0, 1]]);
        assert!(upper.is_coface_of(&quadrant).unwrap());
        assert!(quadrant.is_coface_of(&quadrant).unwrap());
        assert!(!quadrant.is_coface_of(&upper).unwrap());
        // distinct faces give distinct localizations
        let right = ic(&[&[1, 0], &[0, 1], &[0, -1]]);
        assert_ne!(upper, right);
        assert!(right.is_coface_of(&quadrant).unwrap());
    }
}
