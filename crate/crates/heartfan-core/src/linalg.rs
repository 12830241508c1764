//! Exact integer linear algebra: Hermite normal forms, integer kernels,
//! lattice membership and determinants.
//!
//! Everything here works on row vectors `Vec<BigInt>`. Lattices are given by
//! generating rows; the Hermite normal form is the canonical basis used for
//! structural comparison.

use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub fn is_zero_vec(v: &[BigInt]) -> bool {
    v.iter().all(|c| c.is_zero())
}

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = BigInt::zero();
    for (x, y) in a.iter().zip(b.iter()) {
        acc += x * y;
    }
    acc
}

/// `a - q*b`, componentwise.
fn row_sub_mul(a: &mut [BigInt], b: &[BigInt], q: &BigInt) {
    if q.is_zero() {
        return;
    }
    for (x, y) in a.iter_mut().zip(b.iter()) {
        *x -= q * y;
    }
}

/// Row Hermite normal form of the lattice spanned by `rows`.
///
/// Canonical: pivots positive, entries above a pivot reduced into
/// `[0, pivot)`, rows ordered by pivot column, zero rows dropped. Two row
/// sets generate the same lattice iff their HNFs are equal.
pub fn hnf(rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let mut m: Vec<Vec<BigInt>> = rows.iter().filter(|r| !is_zero_vec(r)).cloned().collect();
    if m.is_empty() {
        return Vec::new();
    }
    let ncols = m[0].len();
    let mut r = 0usize;
    for col in 0..ncols {
        if r == m.len() {
            break;
        }
        // gcd-eliminate column `col` on rows r..
        loop {
            let mut pivot: Option<usize> = None;
            for i in r..m.len() {
                if !m[i][col].is_zero() {
                    pivot = match pivot {
                        None => Some(i),
                        Some(p) => {
                            if m[i][col].abs() < m[p][col].abs() {
                                Some(i)
                            } else {
                                Some(p)
                            }
                        }
                    };
                }
            }
            let Some(p) = pivot else { break };
            m.swap(r, p);
            let mut clean = true;
            let pivot_row = m[r].clone();
            for i in (r + 1)..m.len() {
                if !m[i][col].is_zero() {
                    let q = &m[i][col] / &pivot_row[col];
                    row_sub_mul(&mut m[i], &pivot_row, &q);
                    if !m[i][col].is_zero() {
                        clean = false;
                    }
                }
            }
            if clean {
                break;
            }
        }
        if !m[r][col].is_zero() {
            if m[r][col].is_negative() {
                for c in m[r].iter_mut() {
                    *c = -&*c;
                }
            }
            let pivot_row = m[r].clone();
            for j in 0..r {
                let q = m[j][col].div_floor(&pivot_row[col]);
                row_sub_mul(&mut m[j], &pivot_row, &q);
            }
            r += 1;
        }
    }
    m.truncate(r);
    m
}

/// Canonical representative of the coset `v + L` where `h` is the HNF basis
/// of the lattice `L`: at every pivot column the entry is reduced into
/// `[0, pivot)`. Returns the zero vector iff `v` lies in `L`.
pub fn hermite_reduce(h: &[Vec<BigInt>], v: &[BigInt]) -> Vec<BigInt> {
    let mut out = v.to_vec();
    for row in h {
        let col = match row.iter().position(|c| !c.is_zero()) {
            Some(c) => c,
            None => continue,
        };
        let q = out[col].div_floor(&row[col]);
        row_sub_mul(&mut out, row, &q);
    }
    out
}

/// Whether `v` is in the lattice generated by `rows` (need not be in HNF).
pub fn in_lattice(rows: &[Vec<BigInt>], v: &[BigInt]) -> bool {
    is_zero_vec(&hermite_reduce(&hnf(rows), v))
}

/// Basis (HNF rows) of the integer kernel `{x : A x = 0}` for the matrix `a`
/// given by rows (mapping x in Z^n to Z^m, n = row length).
pub fn integer_kernel(a: &[Vec<BigInt>], ncols: usize) -> Vec<Vec<BigInt>> {
    let m = a.len();
    // rows of b: [column_i(A) | e_i], i = 0..n
    let mut b: Vec<Vec<BigInt>> = Vec::with_capacity(ncols);
    for i in 0..ncols {
        let mut row = Vec::with_capacity(m + ncols);
        for r in a {
            row.push(r[i].clone());
        }
        for j in 0..ncols {
            row.push(if i == j { BigInt::one() } else { BigInt::zero() });
        }
        b.push(row);
    }
    let h = hnf(&b);
    let mut kernel: Vec<Vec<BigInt>> = Vec::new();
    for row in &h {
        if is_zero_vec(&row[..m]) {
            kernel.push(row[m..].to_vec());
        }
    }
    hnf(&kernel)
}

/// Rank of the row span (over Q, equivalently over Z).
pub fn row_rank(rows: &[Vec<BigInt>]) -> usize {
    hnf(rows).len()
}

/// HNF basis of the saturation of the row span: `span_Q(rows)` intersected
/// with the integer lattice. Saturated lattices are exactly integer kernels,
/// so we take the kernel of the kernel.
pub fn saturate_rows(rows: &[Vec<BigInt>], ncols: usize) -> Vec<Vec<BigInt>> {
    let orth = integer_kernel(rows, ncols);
    integer_kernel(&orth, ncols)
}

/// Canonical projection matrix `Q` onto the quotient of the integer lattice
/// by the *saturated* lattice `w` (given by rows): the rows of `Q` form the
/// HNF basis of the orthogonal-complement lattice, and `x -> Q x` is a
/// surjection `Z^n -> Z^(n-l)` with kernel exactly `w`.
pub fn quotient_projection(w: &[Vec<BigInt>], ncols: usize) -> Vec<Vec<BigInt>> {
    integer_kernel(w, ncols)
}

pub fn apply_matrix(m: &[Vec<BigInt>], v: &[BigInt]) -> Vec<BigInt> {
    m.iter().map(|row| dot(row, v)).collect()
}

/// Some integer solution of `sum_i x_i rows_i = target`, if one exists.
pub fn solve_in_row_lattice(rows: &[Vec<BigInt>], target: &[BigInt]) -> Option<Vec<BigInt>> {
    let k = rows.len();
    if k == 0 {
        return if is_zero_vec(target) { Some(Vec::new()) } else { None };
    }
    let ncols = rows[0].len();
    // HNF with transform: eliminate on [rows | I_k].
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            for j in 0..k {
                row.push(if i == j { BigInt::one() } else { BigInt::zero() });
            }
            row
        })
        .collect();
    m = hnf(&m);
    // Reduce target against the leading blocks, collecting coefficients.
    let mut rest = target.to_vec();
    let mut coeffs = vec![BigInt::zero(); k];
    for row in &m {
        let col = match row[..ncols].iter().position(|c| !c.is_zero()) {
            Some(c) => c,
            None => continue,
        };
        if rest[col].is_zero() {
            continue;
        }
        let (q, r) = rest[col].div_rem(&row[col]);
        if !r.is_zero() {
            return None;
        }
        row_sub_mul(&mut rest, &row[..ncols], &q);
        for j in 0..k {
            coeffs[j] += &q * &row[ncols + j];
        }
    }
    if is_zero_vec(&rest) {
        Some(coeffs)
    } else {
        None
    }
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    debug_assert!(m.iter().all(|r| r.len() == n));
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let swap = (k + 1..n).find(|&i| !a[i][k].is_zero());
            match swap {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = &num / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

/// Whether the gcd of all maximal (k x k) minors of the k x n matrix is 1,
/// i.e. the rows extend to a basis of the integer lattice.
pub fn maximal_minors_coprime(rows: &[Vec<BigInt>]) -> bool {
    let k = rows.len();
    if k == 0 {
        return true;
    }
    let n = rows[0].len();
    if k > n {
        return false;
    }
    let mut g = BigInt::zero();
    let mut cols: Vec<usize> = (0..k).collect();
    loop {
        let sub: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| cols.iter().map(|&c| r[c].clone()).collect())
            .collect();
        g = g.gcd(&det(&sub));
        if g.is_one() {
            return true;
        }
        // next k-combination of 0..n
        let mut i = k;
        loop {
            if i == 0 {
                return g.is_one();
            }
            i -= 1;
            if cols[i] != i + n - k {
                cols[i] += 1;
                for j in i + 1..k {
                    cols[j] = cols[j - 1] + 1;
                }
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn hnf_is_canonical_for_the_lattice() {
        let a = hnf(&[v(&[2, 4]), v(&[1, 2])]);
        let b = hnf(&[v(&[1, 2]), v(&[3, 6]), v(&[0, 0])]);
        assert_eq!(a, b);
        assert_eq!(a, vec![v(&[1, 2])]);

        let full = hnf(&[v(&[2, 1]), v(&[1, 2])]);
        // index-3 sublattice of Z^2
        assert_eq!(full, vec![v(&[1, 2]), v(&[0, 3])]);
    }

    #[test]
    fn hermite_reduce_detects_membership() {
        let h = hnf(&[v(&[2, 0]), v(&[0, 3])]);
        assert!(is_zero_vec(&hermite_reduce(&h, &v(&[4, -3]))));
        assert!(!is_zero_vec(&hermite_reduce(&h, &v(&[1, 0]))));
        assert!(!is_zero_vec(&hermite_reduce(&h, &v(&[0, 2]))));
    }

    #[test]
    fn kernel_of_projection() {
        // A = [[1, 1]]: kernel generated by (1, -1)
        let k = integer_kernel(&[v(&[1, 1])], 2);
        assert_eq!(k, vec![v(&[1, -1])]);
        // A = [[2, 4]]: kernel generated by (2, -1), saturated
        let k = integer_kernel(&[v(&[2, 4])], 2);
        assert_eq!(k, vec![v(&[2, -1])]);
    }

    #[test]
    fn saturation_of_skew_line() {
        let s = saturate_rows(&[v(&[2, 4])], 2);
        assert_eq!(s, vec![v(&[1, 2])]);
    }

    #[test]
    fn quotient_projection_is_surjective_with_kernel_w() {
        let w = vec![v(&[1, 1, 0])];
        let w = saturate_rows(&w, 3);
        let q = quotient_projection(&w, 3);
        assert_eq!(q.len(), 2);
        // kernel check
        for row in &w {
            assert!(is_zero_vec(&apply_matrix(&q, row)));
        }
        // surjectivity: e_1, e_2 of the quotient are hit
        for target in [v(&[1, 0]), v(&[0, 1])] {
            let cols: Vec<Vec<BigInt>> = (0..3)
                .map(|i| q.iter().map(|r| r[i].clone()).collect())
                .collect();
            assert!(solve_in_row_lattice(&cols, &target).is_some());
        }
    }

    #[test]
    fn solve_recovers_coefficients() {
        let rows = vec![v(&[2, 1]), v(&[1, 2])];
        let target = v(&[4, 5]);
        let c = solve_in_row_lattice(&rows, &target).unwrap();
        let got: Vec<BigInt> = (0..2)
            .map(|j| &c[0] * &rows[0][j] + &c[1] * &rows[1][j])
            .collect();
        assert_eq!(got, target);
        // (1,1) is not in the index-3 sublattice spanned by (2,1),(1,2)
        assert!(solve_in_row_lattice(&rows, &v(&[1, 1])).is_none());
        assert!(solve_in_row_lattice(&[v(&[2, 0])], &v(&[1, 0])).is_none());
    }

    #[test]
    fn det_and_minors() {
        assert_eq!(det(&[v(&[2, 1]), v(&[1, 2])]), BigInt::from(3));
        assert_eq!(det(&[v(&[0, 1]), v(&[1, 0])]), BigInt::from(-1));
        assert!(maximal_minors_coprime(&[v(&[1, 0, 0]), v(&[0, 1, 0])]));
        assert!(!maximal_minors_coprime(&[v(&[2, 0]), v(&[0, 2])]));
        assert!(maximal_minors_coprime(&[v(&[2, 1]), v(&[1, 1])]));
    }
}
