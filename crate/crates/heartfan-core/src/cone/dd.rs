//! Double description: from a halfspace/equation system to a minimal
//! generator system (extreme rays plus a lineality basis), exactly over the
//! integers.
//!
//! The state is a lineality basis together with a set of rays, each ray
//! carrying the set of already-processed constraints it satisfies with
//! equality. Constraints are processed one at a time; a constraint that is
//! nonzero on the lineality pivots one basis vector out of it, otherwise the
//! rays are split by sign and adjacent (+,-) pairs are combined. The
//! combinatorial adjacency test keeps the ray set minimal throughout.

use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::LatticeVector;

/// Maximum number of (nonzero) constraints per run; the tight sets are kept
/// in a u128 bitmask.
const MAX_CONSTRAINTS: usize = 128;

#[derive(Clone)]
struct Ray {
    v: LatticeVector,
    tight: u128,
}

pub struct DdOutput {
    /// Extreme rays modulo the lineality space, primitive integer vectors.
    pub rays: Vec<LatticeVector>,
    /// A basis of the lineality space (integer vectors, not canonicalized).
    pub lineality: Vec<LatticeVector>,
}

enum Kind {
    Ge,
    Eq,
}

/// The cone `{ x : a.x >= 0 for a in ineqs, e.x = 0 for e in eqs }`.
pub fn dd(rank: usize, ineqs: &[LatticeVector], eqs: &[LatticeVector]) -> Result<DdOutput> {
    let constraints: Vec<(&LatticeVector, Kind)> = eqs
        .iter()
        .filter(|e| !e.is_zero())
        .map(|e| (e, Kind::Eq))
        .chain(ineqs.iter().filter(|a| !a.is_zero()).map(|a| (a, Kind::Ge)))
        .collect();
    if constraints.len() > MAX_CONSTRAINTS {
        return Err(Error::ResourceLimit("double description constraint count"));
    }

    let mut lin: Vec<LatticeVector> = (0..rank).map(|i| LatticeVector::unit(rank, i)).collect();
    let mut rays: Vec<Ray> = Vec::new();

    for (i, (a, kind)) in constraints.iter().enumerate() {
        let bit = 1u128 << i;
        let pivot = lin.iter().position(|b| !a.dot(b).is_zero());
        if let Some(p) = pivot {
            let mut b = lin.swap_remove(p);
            let ab = a.dot(&b);
            if matches!(kind, Kind::Ge) && ab.is_negative() {
                b = -&b;
            }
            let ab = a.dot(&b);
            // reduce the remaining lineality into the hyperplane of `a`
            for l in lin.iter_mut() {
                let al = a.dot(l);
                if !al.is_zero() {
                    *l = (&l.scale(&ab) - &b.scale(&al)).primitive_or_zero();
                }
            }
            // reduce existing rays, keeping them positive multiples mod b
            let scale = ab.abs();
            let sgn_ab = if ab.is_negative() { BigInt::from(-1) } else { BigInt::from(1) };
            for r in rays.iter_mut() {
                let ar = a.dot(&r.v);
                if !ar.is_zero() {
                    r.v = (&r.v.scale(&scale) - &b.scale(&(&sgn_ab * &ar))).primitive_or_zero();
                }
                r.tight |= bit;
            }
            if matches!(kind, Kind::Ge) {
                // b leaves the lineality and becomes a ray with a.b > 0;
                // it satisfies all previously processed constraints with
                // equality because it was in the lineality.
                let prior: u128 = bit - 1;
                rays.push(Ray { v: b.primitive_or_zero(), tight: prior });
            }
            continue;
        }

        // `a` vanishes on the lineality: split the rays by sign
        let values: Vec<BigInt> = rays.iter().map(|r| a.dot(&r.v)).collect();
        let mut next: Vec<Ray> = Vec::new();
        for (r, s) in rays.iter().zip(values.iter()) {
            let keep = match kind {
                Kind::Ge => !s.is_negative(),
                Kind::Eq => s.is_zero(),
            };
            if keep {
                let mut nr = r.clone();
                if s.is_zero() {
                    nr.tight |= bit;
                }
                next.push(nr);
            }
        }
        for (pi, ps) in values.iter().enumerate() {
            if !ps.is_positive() {
                continue;
            }
            for (ni, ns) in values.iter().enumerate() {
                if !ns.is_negative() {
                    continue;
                }
                if !adjacent(&rays, pi, ni) {
                    continue;
                }
                // positive combination vanishing on `a`
                let v = (&rays[ni].v.scale(ps) - &rays[pi].v.scale(ns)).primitive_or_zero();
                if v.is_zero() {
                    continue;
                }
                // the tight set must be exact for later adjacency tests
                let tight = exact_tight(&constraints[..=i], &v);
                if !next.iter().any(|r| r.v == v) {
                    next.push(Ray { v, tight });
                }
            }
        }
        rays = next;
    }

    rays.sort_by(|x, y| x.v.cmp(&y.v));
    rays.dedup_by(|x, y| x.v == y.v);
    Ok(DdOutput { rays: rays.into_iter().map(|r| r.v).collect(), lineality: lin })
}

/// Combinatorial adjacency: the tight sets of `p` and `n` are not jointly
/// dominated by any third ray.
fn adjacent(rays: &[Ray], p: usize, n: usize) -> bool {
    let t = rays[p].tight & rays[n].tight;
    for (i, r) in rays.iter().enumerate() {
        if i != p && i != n && (r.tight & t) == t {
            return false;
        }
    }
    true
}

fn exact_tight(constraints: &[(&LatticeVector, Kind)], v: &LatticeVector) -> u128 {
    let mut tight = 0u128;
    for (j, (c, _)) in constraints.iter().enumerate() {
        if c.dot(v).is_zero() {
            tight |= 1u128 << j;
        }
    }
    tight
}
