//! Closed rational real cones in canonical form.
//!
//! A `RatCone` stores both a minimal generator system (extreme rays modulo a
//! lineality basis) and a minimal constraint system (facet normals plus span
//! equations), each canonicalized so that two cones are equal as sets iff
//! their representations are equal componentwise.
//!
//! Canonical form: the lineality basis is the HNF basis of the saturated
//! lineality lattice; each extreme ray is the Hermite-reduced integer lift of
//! the primitive projected ray modulo the lineality lattice; rays are sorted.
//! The constraint side is the canonical generator system of the dual cone.

use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::cone::dd::{dd, DdOutput};
use crate::error::{Error, Result};
use crate::lattice::{DualVector, LatticeVector};
use crate::linalg;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct RatCone {
    rank: usize,
    lineality: Vec<LatticeVector>,
    rays: Vec<LatticeVector>,
    /// Facet normals: together with `span_eqs` a minimal H-representation.
    facets: Vec<LatticeVector>,
    /// HNF basis of the orthogonal complement of the span.
    span_eqs: Vec<LatticeVector>,
}

impl RatCone {
    /// The cone generated by `rays` and the lines through `lineality`.
    pub fn from_generators(
        rank: usize,
        rays: &[LatticeVector],
        lineality: &[LatticeVector],
    ) -> Result<Self> {
        check_ranks(rank, rays.iter().chain(lineality))?;
        // dual side first, then the minimal primal system by double dualizing
        let dual = dd(rank, rays, lineality)?;
        let primal = dd(rank, &dual.rays, &dual.lineality)?;
        Ok(Self::from_dd(rank, primal, dual))
    }

    /// The cone `{ x : h.x >= 0, e.x = 0 }`.
    pub fn from_halfspaces(
        rank: usize,
        ineqs: &[LatticeVector],
        eqs: &[LatticeVector],
    ) -> Result<Self> {
        check_ranks(rank, ineqs.iter().chain(eqs))?;
        let primal = dd(rank, ineqs, eqs)?;
        let dual = dd(rank, &primal.rays, &primal.lineality)?;
        Ok(Self::from_dd(rank, primal, dual))
    }

    fn from_dd(rank: usize, primal: DdOutput, dual: DdOutput) -> Self {
        let (rays, lineality) = canonical_generators(rank, &primal.rays, &primal.lineality);
        let (facets, span_eqs) = canonical_generators(rank, &dual.rays, &dual.lineality);
        RatCone { rank, lineality, rays, facets, span_eqs }
    }

    pub fn zero(rank: usize) -> Self {
        Self::from_generators(rank, &[], &[]).expect("zero cone is always valid")
    }

    pub fn full_space(rank: usize) -> Self {
        let basis: Vec<LatticeVector> = (0..rank).map(|i| LatticeVector::unit(rank, i)).collect();
        Self::from_generators(rank, &[], &basis).expect("ambient space is always valid")
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn rays(&self) -> &[LatticeVector] {
        &self.rays
    }

    pub fn lineality(&self) -> &[LatticeVector] {
        &self.lineality
    }

    pub fn facets(&self) -> &[LatticeVector] {
        &self.facets
    }

    pub fn span_eqs(&self) -> &[LatticeVector] {
        &self.span_eqs
    }

    /// Dimension of the linear span.
    pub fn dim(&self) -> usize {
        self.rank - self.span_eqs.len()
    }

    pub fn lineality_dim(&self) -> usize {
        self.lineality.len()
    }

    pub fn is_full(&self) -> bool {
        self.span_eqs.is_empty()
    }

    pub fn is_strictly_convex(&self) -> bool {
        self.lineality.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.rays.is_empty() && self.lineality.is_empty()
    }

    /// The dual cone. Canonical by construction, and an involution on closed
    /// cones: `dual(dual(c)) == c` literally.
    pub fn dual(&self) -> RatCone {
        RatCone {
            rank: self.rank,
            lineality: self.span_eqs.clone(),
            rays: self.facets.clone(),
            facets: self.rays.clone(),
            span_eqs: self.lineality.clone(),
        }
    }

    pub fn contains_lattice(&self, x: &LatticeVector) -> bool {
        self.facets.iter().all(|h| !h.dot(x).is_negative())
            && self.span_eqs.iter().all(|e| e.dot(x).is_zero())
    }

    pub fn contains_dual(&self, v: &DualVector) -> Result<bool> {
        if v.rank() != self.rank {
            return Err(Error::RankMismatch { expected: self.rank, found: v.rank() });
        }
        for h in &self.facets {
            if v.pair(h)?.is_negative() {
                return Ok(false);
            }
        }
        for e in &self.span_eqs {
            if !v.pair(e)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether a rational point lies in the topological interior of the cone
    /// within its span (all facet inequalities strict).
    pub fn contains_dual_relative_interior(&self, v: &DualVector) -> Result<bool> {
        if !self.contains_dual(v)? {
            return Ok(false);
        }
        for h in &self.facets {
            if v.pair(h)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn contains_cone(&self, other: &RatCone) -> bool {
        other.rays.iter().all(|r| self.contains_lattice(r))
            && other
                .lineality
                .iter()
                .all(|b| self.contains_lattice(b) && self.contains_lattice(&-b))
    }

    pub fn intersect(&self, other: &RatCone) -> Result<RatCone> {
        if other.rank != self.rank {
            return Err(Error::RankMismatch { expected: self.rank, found: other.rank });
        }
        let ineqs: Vec<LatticeVector> =
            self.facets.iter().chain(other.facets.iter()).cloned().collect();
        let eqs: Vec<LatticeVector> =
            self.span_eqs.iter().chain(other.span_eqs.iter()).cloned().collect();
        RatCone::from_halfspaces(self.rank, &ineqs, &eqs)
    }

    /// Slice by the orthogonal complement of the given vectors.
    pub fn intersect_orthogonal(&self, vs: &[LatticeVector]) -> Result<RatCone> {
        check_ranks(self.rank, vs.iter())?;
        let eqs: Vec<LatticeVector> = self.span_eqs.iter().chain(vs.iter()).cloned().collect();
        RatCone::from_halfspaces(self.rank, &self.facets, &eqs)
    }

    pub fn negate(&self) -> RatCone {
        let rays: Vec<LatticeVector> = self.rays.iter().map(|r| -r).collect();
        RatCone::from_generators(self.rank, &rays, &self.lineality)
            .expect("negation preserves validity")
    }

    /// A rational point in the relative interior: the sum of the rays (or
    /// zero for a linear subspace).
    pub fn relative_interior_point(&self) -> DualVector {
        let mut acc = LatticeVector::zero(self.rank);
        for r in &self.rays {
            acc = &acc + r;
        }
        DualVector::from_lattice(&acc)
    }

    /// The face lattice. Every face of a polyhedral cone is an intersection
    /// of facets, so faces are identified with the subsets of extreme rays
    /// they contain; the lineality is common to all faces.
    pub fn face_poset(&self) -> FacePoset {
        let nrays = self.rays.len();
        let full: Vec<usize> = (0..nrays).collect();
        let mut subsets: Vec<Vec<usize>> = alloc::vec![full];
        let mut queue = 0usize;
        while queue < subsets.len() {
            let current = subsets[queue].clone();
            queue += 1;
            for h in &self.facets {
                let sliced: Vec<usize> = current
                    .iter()
                    .copied()
                    .filter(|&i| h.dot(&self.rays[i]).is_zero())
                    .collect();
                if sliced != current && !subsets.contains(&sliced) {
                    subsets.push(sliced);
                }
            }
        }
        // a cone with no facets (a linear subspace) has itself as only face
        let mut faces: Vec<Face> = subsets
            .into_iter()
            .map(|subset| {
                let rays: Vec<LatticeVector> =
                    subset.iter().map(|&i| self.rays[i].clone()).collect();
                let cone = RatCone::from_generators(self.rank, &rays, &self.lineality)
                    .expect("faces of a valid cone are valid");
                Face { ray_indices: subset, dim: cone.dim(), cone }
            })
            .collect();
        faces.sort_by(|a, b| (a.dim, &a.cone).cmp(&(b.dim, &b.cone)));
        FacePoset { faces }
    }

    /// Whether `other` is a face of `self`.
    pub fn has_face(&self, other: &RatCone) -> bool {
        self.face_poset().faces.iter().any(|f| &f.cone == other)
    }
}

impl core::fmt::Debug for RatCone {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "RatCone{{rays: {:?}, lineality: {:?}}}", self.rays, self.lineality)
    }
}

impl core::fmt::Display for RatCone {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(
            f,
            "cone(rays [{}]; lines [{}])",
            crate::lattice::display_list(&self.rays),
            crate::lattice::display_list(&self.lineality)
        )
    }
}

/// A face in a face poset, remembered by the extreme rays of the ambient
/// cone it contains.
#[derive(Clone, Debug)]
pub struct Face {
    pub cone: RatCone,
    pub ray_indices: Vec<usize>,
    pub dim: usize,
}

/// The graded face lattice of a cone, ordered by dimension.
#[derive(Clone, Debug)]
pub struct FacePoset {
    pub faces: Vec<Face>,
}

impl FacePoset {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn cones(&self) -> impl Iterator<Item = &RatCone> {
        self.faces.iter().map(|f| &f.cone)
    }

    pub fn contains_cone(&self, cone: &RatCone) -> bool {
        self.faces.iter().any(|f| &f.cone == cone)
    }

    /// Covering edges `(child, parent)` of the face order, by subset
    /// inclusion of ray sets with a dimension step.
    pub fn covering_edges(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::new();
        for (i, a) in self.faces.iter().enumerate() {
            for (j, b) in self.faces.iter().enumerate() {
                if a.dim < b.dim
                    && a.ray_indices.iter().all(|r| b.ray_indices.contains(r))
                    && !self.faces.iter().any(|c| {
                        c.dim > a.dim
                            && c.dim < b.dim
                            && a.ray_indices.iter().all(|r| c.ray_indices.contains(r))
                            && c.ray_indices.iter().all(|r| b.ray_indices.contains(r))
                    })
                {
                    edges.push((i, j));
                }
            }
        }
        edges
    }
}

fn check_ranks<'a>(
    rank: usize,
    vs: impl Iterator<Item = &'a LatticeVector>,
) -> Result<()> {
    for v in vs {
        if v.rank() != rank {
            return Err(Error::RankMismatch { expected: rank, found: v.rank() });
        }
    }
    Ok(())
}

/// Canonicalize a generator system: HNF the saturated lineality lattice and
/// lift the primitive projected extreme rays canonically.
fn canonical_generators(
    rank: usize,
    rays: &[LatticeVector],
    lineality: &[LatticeVector],
) -> (Vec<LatticeVector>, Vec<LatticeVector>) {
    let lin_rows: Vec<Vec<BigInt>> = lineality.iter().map(|v| v.coords().to_vec()).collect();
    let lin_sat = linalg::saturate_rows(&lin_rows, rank);
    let lin_canon: Vec<LatticeVector> =
        lin_sat.iter().map(|r| LatticeVector::new(r.clone())).collect();

    let mut out_rays: Vec<LatticeVector> = if lin_sat.is_empty() {
        rays.iter().map(|r| r.primitive_or_zero()).collect()
    } else {
        let proj = linalg::quotient_projection(&lin_sat, rank);
        let proj_cols: Vec<Vec<BigInt>> = (0..rank)
            .map(|i| proj.iter().map(|r| r[i].clone()).collect())
            .collect();
        rays.iter()
            .map(|r| {
                let down = LatticeVector::new(linalg::apply_matrix(&proj, r.coords()))
                    .primitive_or_zero();
                let lift = linalg::solve_in_row_lattice(&proj_cols, down.coords())
                    .expect("quotient projection is surjective");
                LatticeVector::new(linalg::hermite_reduce(&lin_sat, &lift))
            })
            .collect()
    };
    out_rays.retain(|r| !r.is_zero());
    out_rays.sort();
    out_rays.dedup();
    (out_rays, lin_canon)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lv(xs: &[i64]) -> LatticeVector {
        LatticeVector::from_i64(xs)
    }

    fn cone(rays: &[&[i64]], lines: &[&[i64]]) -> RatCone {
        let rank = rays.first().or(lines.first()).map(|r| r.len()).unwrap_or(0);
        let rays: Vec<LatticeVector> = rays.iter().map(|r| lv(r)).collect();
        let lines: Vec<LatticeVector> = lines.iter().map(|r| lv(r)).collect();
        RatCone::from_generators(rank, &rays, &lines).unwrap()
    }

    #[test]
    fn quadrant_is_self_dual() {
        let q = cone(&[&[1, 0], &[0, 1]], &[]);
        assert_eq!(q.dual(), q);
        assert_eq!(q.dual().dual(), q);
        assert!(q.is_full() && q.is_strictly_convex());
    }

    #[test]
    fn dual_of_upper_half_plane_is_a_ray() {
        let uh = cone(&[&[0, 1]], &[&[1, 0]]);
        assert!(uh.is_full());
        assert!(!uh.is_strictly_convex());
        let d = uh.dual();
        assert_eq!(d.rays(), &[lv(&[0, 1])]);
        assert!(d.lineality().is_empty());
        assert_eq!(d.dim(), 1);
        assert_eq!(uh.dual().dual(), uh);
    }

    #[test]
    fn dual_by_double_description_oracle() {
        // rays {(1,0),(1,1)} -> dual rays {[0,1],[1,-1]}
        let c = cone(&[&[1, 0], &[1, 1]], &[]);
        let d = c.dual();
        let mut expected = alloc::vec![lv(&[0, 1]), lv(&[1, -1])];
        expected.sort();
        assert_eq!(d.rays(), &expected[..]);
    }

    #[test]
    fn canonical_form_ignores_generator_presentation() {
        let a = cone(&[&[2, 0], &[0, 3], &[1, 1]], &[]);
        let b = cone(&[&[0, 1], &[1, 0]], &[]);
        assert_eq!(a, b);

        // lineality given as two opposite rays
        let c = cone(&[&[1, 0], &[-1, 0], &[0, 1]], &[]);
        let d = cone(&[&[5, 1]], &[&[1, 0]]);
        // both are the upper half-plane
        assert_eq!(c, d);
        assert_eq!(c.lineality(), &[lv(&[1, 0])]);
        assert_eq!(c.rays(), &[lv(&[0, 1])]);
    }

    #[test]
    fn face_poset_of_quadrant() {
        let q = cone(&[&[1, 0], &[0, 1]], &[]);
        let poset = q.face_poset();
        assert_eq!(poset.len(), 4);
        let dims: Vec<usize> = poset.faces.iter().map(|f| f.dim).collect();
        assert_eq!(dims, alloc::vec![0, 1, 1, 2]);
    }

    #[test]
    fn interior_generator_spans_no_face() {
        let c = cone(&[&[1, 0], &[1, 1], &[1, 2]], &[]);
        assert_eq!(c.rays(), &[lv(&[1, 0]), lv(&[1, 2])]);
        let poset = c.face_poset();
        assert_eq!(poset.len(), 4);
        let ray_faces: Vec<&RatCone> =
            poset.faces.iter().filter(|f| f.dim == 1).map(|f| &f.cone).collect();
        assert!(ray_faces.iter().all(|f| {
            f.rays() == [lv(&[1, 0])] || f.rays() == [lv(&[1, 2])]
        }));
    }

    #[test]
    fn face_poset_counts_edge_cases() {
        assert_eq!(RatCone::zero(2).face_poset().len(), 1);
        assert_eq!(RatCone::full_space(2).face_poset().len(), 1);
        let uh = cone(&[&[0, 1]], &[&[1, 0]]);
        assert_eq!(uh.face_poset().len(), 2);
    }

    #[test]
    fn intersection_and_containment() {
        let q = cone(&[&[1, 0], &[0, 1]], &[]);
        let c = cone(&[&[1, 1], &[-1, 1]], &[]);
        let i = q.intersect(&c).unwrap();
        assert_eq!(i, cone(&[&[1, 1], &[0, 1]], &[]));
        assert!(q.contains_cone(&i));
        assert!(c.contains_cone(&i));
    }

    #[test]
    fn rank_zero_lattice() {
        let z = RatCone::zero(0);
        assert_eq!(z.dim(), 0);
        assert!(z.contains_lattice(&LatticeVector::zero(0)));
        assert_eq!(z.face_poset().len(), 1);
    }
}
