//! Fans and cofans as first-class collections.
//!
//! A cofan is a set of integral cones closed under localisation at faces
//! whose pairwise sums are common cofaces; a fan is a set of real cones
//! closed under faces whose pairwise intersections are common faces. The fan
//! associated to a cofan collects the faces of the duals of its cones.
//! Equality of fans and cofans is set equality of canonical cone forms.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use num_traits::Zero;

use crate::cone::{IntCone, RatCone};
use crate::error::{Error, Result};
use crate::lattice::{DualVector, LatticeHom, LatticeVector};

/// A cofan: canonical deduplicated integral cones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cofan {
    rank: usize,
    cones: Vec<IntCone>,
}

impl Cofan {
    /// Closes the seed cones under localisation at all faces. The seeds must
    /// satisfy the cofan axiom: the sum of any two seeds is a common coface;
    /// the closure is then automatically a cofan.
    pub fn generate(rank: usize, seeds: &[IntCone]) -> Result<Cofan> {
        for s in seeds {
            if s.rank() != rank {
                return Err(Error::RankMismatch { expected: rank, found: s.rank() });
            }
        }
        for (i, a) in seeds.iter().enumerate() {
            for b in seeds.iter().skip(i + 1) {
                let sum = a.minkowski_sum(b)?;
                if !sum.is_coface_of(a)? || !sum.is_coface_of(b)? {
                    return Err(Error::CofanAxiom { left: a.describe(), right: b.describe() });
                }
            }
        }
        let mut cones: BTreeSet<IntCone> = BTreeSet::new();
        for seed in seeds {
            for face in seed.face_poset()?.faces {
                cones.insert(seed.localize(&face.cone)?);
            }
        }
        Ok(Cofan { rank, cones: cones.into_iter().collect() })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cones(&self) -> &[IntCone] {
        &self.cones
    }

    pub fn len(&self) -> usize {
        self.cones.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cones.is_empty()
    }

    pub fn contains(&self, cone: &IntCone) -> bool {
        self.cones.binary_search(cone).is_ok()
    }

    /// Cones maximal for the coface relation; under inclusion of subsets
    /// these are the minimal cones, and they generate the cofan.
    pub fn maximal_cones(&self) -> Result<Vec<&IntCone>> {
        let mut out = Vec::new();
        for c in &self.cones {
            let mut proper_coface = false;
            for other in &self.cones {
                if other != c && c.is_coface_of(other)? {
                    proper_coface = true;
                    break;
                }
            }
            if !proper_coface {
                out.push(c);
            }
        }
        Ok(out)
    }

    /// The associated fan: all faces of the duals of the hulls.
    pub fn associated_fan(&self) -> Result<Fan> {
        let mut fan = Fan::empty(self.rank);
        for c in &self.cones {
            let dual = c.hull().dual();
            for face in dual.face_poset().faces {
                fan.insert(face.cone);
            }
        }
        Ok(fan)
    }

    /// The dual face fan: dual faces of the maximal cones. For finitely
    /// generated cones every face is exposed, so this collects the dual
    /// faces at every face of each maximal cone. It is a subset of the
    /// associated fan with the same support.
    pub fn dual_face_fan(&self) -> Result<Fan> {
        let mut fan = Fan::empty(self.rank);
        for c in self.maximal_cones()? {
            for face in c.exposed_faces()?.faces {
                fan.insert(c.dual_face(&face.cone)?);
            }
        }
        Ok(fan)
    }

    /// The lowest coface of a fan cone `tau`: the minimal cofan cone whose
    /// dual has `tau` as a face, computed as the localisation of any such
    /// cone at its slice by the orthogonal of `tau`.
    pub fn lowest_coface(&self, tau: &RatCone) -> Result<IntCone> {
        for c in &self.cones {
            let dual = c.hull().dual();
            if dual.face_poset().contains_cone(tau) {
                return self.localize_by_orthogonal_slice(c, tau);
            }
        }
        Err(Error::NotInFan)
    }

    fn localize_by_orthogonal_slice(&self, c: &IntCone, tau: &RatCone) -> Result<IntCone> {
        // the slice c ∩ tau^perp is the face of c cut out by the rays of tau
        let slice_gens: Vec<LatticeVector> = c
            .generators()
            .iter()
            .filter(|g| tau.rays().iter().all(|r| r.dot(g).is_zero()))
            .cloned()
            .collect();
        let slice = IntCone::span_int(self.rank, &slice_gens)?;
        c.localize(&slice)
    }

    /// Pushforward along a lattice homomorphism; the image of a cofan is a
    /// cofan.
    pub fn pushforward(&self, f: &LatticeHom) -> Result<Cofan> {
        if f.source_rank() != self.rank {
            return Err(Error::RankMismatch { expected: self.rank, found: f.source_rank() });
        }
        let mut cones: BTreeSet<IntCone> = BTreeSet::new();
        for c in &self.cones {
            let gens: Result<Vec<LatticeVector>> =
                c.generators().iter().map(|g| f.apply(g)).collect();
            cones.insert(IntCone::span_int(f.target_rank(), &gens?)?);
        }
        Ok(Cofan { rank: f.target_rank(), cones: cones.into_iter().collect() })
    }
}

/// A fan: canonical deduplicated real cones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    rank: usize,
    cones: BTreeSet<RatCone>,
    /// Set when the fan is a finite truncation of an infinite object;
    /// support queries then only speak about the materialized cones.
    truncated: bool,
}

/// Result of a support query.
#[derive(Clone, Debug)]
pub struct SupportHit {
    pub query: DualVector,
    /// The unique minimal cone containing the query, if any.
    pub cone: Option<RatCone>,
    pub minimal: bool,
    /// Whether the answer is relative to a truncated fan.
    pub truncated: bool,
}

/// Outcome of the fan axiom check.
#[derive(Clone, Debug, Default)]
pub struct FanReport {
    pub violations: Vec<String>,
}

impl FanReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl Fan {
    pub fn empty(rank: usize) -> Fan {
        Fan { rank, cones: BTreeSet::new(), truncated: false }
    }

    pub fn from_cones(rank: usize, cones: impl IntoIterator<Item = RatCone>) -> Fan {
        let mut fan = Fan::empty(rank);
        for c in cones {
            fan.insert(c);
        }
        fan
    }

    /// Inserts the cone and all of its faces.
    pub fn insert_with_faces(&mut self, cone: RatCone) {
        for face in cone.face_poset().faces {
            self.insert(face.cone);
        }
    }

    pub fn insert(&mut self, cone: RatCone) {
        debug_assert_eq!(cone.rank(), self.rank);
        self.cones.insert(cone);
    }

    pub fn set_truncated(&mut self, truncated: bool) {
        self.truncated = truncated;
    }

    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cones(&self) -> impl Iterator<Item = &RatCone> {
        self.cones.iter()
    }

    pub fn len(&self) -> usize {
        self.cones.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cones.is_empty()
    }

    pub fn contains(&self, cone: &RatCone) -> bool {
        self.cones.contains(cone)
    }

    /// Cones not properly contained in another cone of the fan.
    pub fn maximal_cones(&self) -> Vec<&RatCone> {
        self.cones
            .iter()
            .filter(|c| {
                !self
                    .cones
                    .iter()
                    .any(|other| *other != **c && other.contains_cone(c))
            })
            .collect()
    }

    pub fn full_cones(&self) -> Vec<&RatCone> {
        self.cones.iter().filter(|c| c.is_full()).collect()
    }

    /// Verifies face closure and the common-face property of pairwise
    /// intersections (checked on maximal cones, which suffices).
    pub fn check(&self) -> FanReport {
        use alloc::format;
        let mut report = FanReport::default();
        for c in &self.cones {
            for face in c.face_poset().faces {
                if !self.cones.contains(&face.cone) {
                    report
                        .violations
                        .push(format!("face {} of {} missing from the fan", face.cone, c));
                }
            }
        }
        let maximal = self.maximal_cones();
        for (i, a) in maximal.iter().enumerate() {
            for b in maximal.iter().skip(i + 1) {
                match a.intersect(b) {
                    Ok(meet) => {
                        if !a.has_face(&meet) || !b.has_face(&meet) {
                            report.violations.push(format!(
                                "intersection {} of {} and {} is not a common face",
                                meet, a, b
                            ));
                        }
                    }
                    Err(e) => report.violations.push(format!("{e}")),
                }
            }
        }
        report
    }

    /// The unique minimal cone containing `v`, if `v` lies in the support.
    pub fn support_query(&self, v: &DualVector) -> Result<SupportHit> {
        let mut best: Option<&RatCone> = None;
        let mut hits: Vec<&RatCone> = Vec::new();
        for c in &self.cones {
            if c.contains_dual(v)? {
                hits.push(c);
                best = match best {
                    None => Some(c),
                    Some(b) => {
                        if c.dim() < b.dim() {
                            Some(c)
                        } else {
                            Some(b)
                        }
                    }
                };
            }
        }
        match best {
            None => Ok(SupportHit {
                query: v.clone(),
                cone: None,
                minimal: false,
                truncated: self.truncated,
            }),
            Some(minimal) => {
                let unique = hits.iter().all(|c| c.contains_cone(minimal));
                Ok(SupportHit {
                    query: v.clone(),
                    cone: Some(minimal.clone()),
                    minimal: unique,
                    truncated: self.truncated,
                })
            }
        }
    }

    /// Preimage fan along a lattice homomorphism: constraints pull back
    /// along the dual.
    pub fn pullback(&self, f: &LatticeHom) -> Result<Fan> {
        if f.target_rank() != self.rank {
            return Err(Error::RankMismatch { expected: self.rank, found: f.target_rank() });
        }
        let ft = f.dual_hom();
        let mut out = Fan::empty(f.source_rank());
        out.truncated = self.truncated;
        for c in &self.cones {
            let ineqs: Result<Vec<LatticeVector>> =
                c.facets().iter().map(|h| ft.apply(h)).collect();
            let eqs: Result<Vec<LatticeVector>> =
                c.span_eqs().iter().map(|e| ft.apply(e)).collect();
            out.insert(RatCone::from_halfspaces(f.source_rank(), &ineqs?, &eqs?)?);
        }
        Ok(out)
    }
}
