//! Exact linear algebra kernels shared across the crate: Gaussian
//! elimination over an arbitrary field (used with rationals and with
//! cyclotomic scalars), integer Hermite normal form, and the
//! "rational span + integer lattice" membership test that the coweight
//! computations reduce to. No tolerances, no floating point.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cyclotomic::Cyclotomic;

/// Minimal field interface for the elimination routines.
pub trait Field: Clone {
    fn f_zero() -> Self;
    fn f_one() -> Self;
    fn f_add(&self, o: &Self) -> Self;
    fn f_sub(&self, o: &Self) -> Self;
    fn f_mul(&self, o: &Self) -> Self;
    /// Panics on zero.
    fn f_inv(&self) -> Self;
    fn f_is_zero(&self) -> bool;
}

impl Field for BigRational {
    fn f_zero() -> Self {
        BigRational::zero()
    }
    fn f_one() -> Self {
        BigRational::one()
    }
    fn f_add(&self, o: &Self) -> Self {
        self + o
    }
    fn f_sub(&self, o: &Self) -> Self {
        self - o
    }
    fn f_mul(&self, o: &Self) -> Self {
        self * o
    }
    fn f_inv(&self) -> Self {
        self.recip()
    }
    fn f_is_zero(&self) -> bool {
        self.is_zero()
    }
}

impl Field for Cyclotomic {
    fn f_zero() -> Self {
        Cyclotomic::zero()
    }
    fn f_one() -> Self {
        Cyclotomic::one()
    }
    fn f_add(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn f_sub(&self, o: &Self) -> Self {
        self.sub(o)
    }
    fn f_mul(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn f_inv(&self) -> Self {
        self.inv().expect("inverse of zero")
    }
    fn f_is_zero(&self) -> bool {
        self.is_zero()
    }
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref<F: Field>(rows: &mut Vec<Vec<F>>) -> Vec<usize> {
    let nrows = rows.len();
    if nrows == 0 {
        return vec![];
    }
    let ncols = rows[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r >= nrows {
            break;
        }
        let Some(pr) = (r..nrows).find(|&i| !rows[i][c].f_is_zero()) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = rows[r][c].f_inv();
        for x in rows[r].iter_mut() {
            *x = x.f_mul(&inv);
        }
        for i in 0..nrows {
            if i != r && !rows[i][c].f_is_zero() {
                let f = rows[i][c].clone();
                for j in 0..ncols {
                    let t = rows[r][j].f_mul(&f);
                    rows[i][j] = rows[i][j].f_sub(&t);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: Field>(mut rows: Vec<Vec<F>>) -> usize {
    rref(&mut rows).len()
}

/// Basis of the right kernel {x : A x = 0} for A given as rows.
pub fn kernel_basis<F: Field>(mut rows: Vec<Vec<F>>, ncols: usize) -> Vec<Vec<F>> {
    let pivots = rref(&mut rows);
    let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![F::f_zero(); ncols];
        v[free] = F::f_one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = F::f_zero().f_sub(&rows[r][free]);
        }
        basis.push(v);
    }
    basis
}

/// Any solution of A x = b (A as rows), or None.
pub fn solve<F: Field>(rows: &[Vec<F>], b: &[F]) -> Option<Vec<F>> {
    let nrows = rows.len();
    let ncols = if nrows == 0 { 0 } else { rows[0].len() };
    let mut aug: Vec<Vec<F>> = rows
        .iter()
        .zip(b.iter())
        .map(|(r, bi)| {
            let mut row = r.clone();
            row.push(bi.clone());
            row
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.last() == Some(&ncols) {
        return None; // pivot in the rhs column: inconsistent
    }
    let mut x = vec![F::f_zero(); ncols];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = aug[r][ncols].clone();
    }
    Some(x)
}

/// Column-style Hermite normal form of the lattice spanned by `cols`.
/// Returns the nonzero pivot columns (each with a positive pivot entry in a
/// strictly increasing pivot row).
pub fn column_hnf(cols: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    if cols.is_empty() {
        return vec![];
    }
    let n = cols[0].len();
    let mut work: Vec<Vec<BigInt>> = cols.to_vec();
    let mut out: Vec<Vec<BigInt>> = Vec::new();
    for row in 0..n {
        // Combine all columns with a nonzero entry in `row` into one via gcd.
        loop {
            let mut nz: Vec<usize> = (0..work.len())
                .filter(|&j| !work[j][row].is_zero())
                .collect();
            if nz.len() <= 1 {
                break;
            }
            // Pick the two smallest |entries| and reduce one by the other.
            nz.sort_by_key(|&j| work[j][row].abs());
            let (a, b) = (nz[0], nz[1]);
            let q = &work[b][row] / &work[a][row];
            for r in 0..n {
                let t = &work[a][r] * &q;
                work[b][r] -= t;
            }
        }
        if let Some(j) = (0..work.len()).find(|&j| !work[j][row].is_zero()) {
            let mut col = work.swap_remove(j);
            if col[row].is_negative() {
                for x in col.iter_mut() {
                    *x = -x.clone();
                }
            }
            // Reduce previously found pivots above this row is not needed for
            // membership testing; keep the triangular shape only.
            out.push(col);
        }
    }
    out
}

/// Does v lie in the integer column span of `gens`?
pub fn in_integer_lattice(gens: &[Vec<BigInt>], v: &[BigInt]) -> bool {
    let hnf = column_hnf(gens);
    let mut rem = v.to_vec();
    let n = rem.len();
    let mut h_iter = hnf.iter();
    let mut cur = h_iter.next();
    for row in 0..n {
        if let Some(col) = cur {
            if !col[row].is_zero() {
                let (q, r) = rem[row].div_rem(&col[row]);
                if !r.is_zero() {
                    return false;
                }
                for i in 0..n {
                    let t = &col[i] * &q;
                    rem[i] -= t;
                }
                cur = h_iter.next();
                continue;
            }
        }
        if !rem[row].is_zero() {
            return false;
        }
    }
    rem.iter().all(|x| x.is_zero())
}

/// Does v lie in span_Q(span_vecs) + Z^n?
///
/// This is the membership question behind coweight computations: reduce
/// modulo the rational span, then test the residue against the image of the
/// standard integer lattice with denominators cleared.
pub fn in_span_plus_integer_lattice(span_vecs: &[Vec<BigRational>], v: &[BigRational]) -> bool {
    let n = v.len();
    let mut span_rows: Vec<Vec<BigRational>> = span_vecs.to_vec();
    let pivots = rref(&mut span_rows);
    span_rows.truncate(pivots.len());

    // Reduce a vector modulo the span: zero out the pivot coordinates.
    let reduce = |w: &[BigRational]| -> Vec<BigRational> {
        let mut w = w.to_vec();
        for (r, &pc) in pivots.iter().enumerate() {
            if !w[pc].is_zero() {
                let f = w[pc].clone();
                for j in 0..n {
                    let t = &span_rows[r][j] * &f;
                    w[j] -= t;
                }
            }
        }
        w
    };

    let rv = reduce(v);
    let images: Vec<Vec<BigRational>> = (0..n)
        .map(|j| {
            let mut e = vec![BigRational::zero(); n];
            e[j] = BigRational::one();
            reduce(&e)
        })
        .collect();

    // Common denominator over residue coordinates (non-pivot columns).
    let free_cols: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut denom = BigInt::one();
    for w in images.iter().chain(std::iter::once(&rv)) {
        for &c in &free_cols {
            denom = denom.lcm(w[c].denom());
        }
    }
    let to_int = |w: &[BigRational]| -> Vec<BigInt> {
        free_cols
            .iter()
            .map(|&c| {
                let scaled = &w[c] * BigRational::from_integer(denom.clone());
                debug_assert!(scaled.denom().is_one());
                scaled.numer().clone()
            })
            .collect()
    };
    let gens: Vec<Vec<BigInt>> = images.iter().map(|w| to_int(w)).collect();
    in_integer_lattice(&gens, &to_int(&rv))
}

/// Rank over F2 of bit-vector rows.
pub fn f2_rank(mut rows: Vec<u64>) -> usize {
    let mut rank = 0;
    for bit in 0..64 {
        let mask = 1u64 << bit;
        if let Some(p) = (rank..rows.len()).find(|&i| rows[i] & mask != 0) {
            rows.swap(rank, p);
            let pivot = rows[rank];
            for (i, r) in rows.iter_mut().enumerate() {
                if i != rank && *r & mask != 0 {
                    *r ^= pivot;
                }
            }
            rank += 1;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(d))
    }

    #[test]
    fn kernel_of_singular_matrix() {
        // x + y + z = 0, x - z = 0 has a one-dimensional kernel (1, -2, 1).
        let rows = vec![
            vec![q(1, 1), q(1, 1), q(1, 1)],
            vec![q(1, 1), q(0, 1), q(-1, 1)],
        ];
        let k = kernel_basis(rows, 3);
        assert_eq!(k.len(), 1);
        let v = &k[0];
        assert_eq!(&v[0] + &v[1] + &v[2], q(0, 1));
        assert_eq!(&v[0] - &v[2], q(0, 1));
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let rows = vec![vec![q(2, 1), q(0, 1)], vec![q(0, 1), q(3, 1)]];
        let x = solve(&rows, &[q(4, 1), q(6, 1)]).unwrap();
        assert_eq!(x, vec![q(2, 1), q(2, 1)]);
        let rows2 = vec![vec![q(1, 1), q(1, 1)], vec![q(2, 1), q(2, 1)]];
        assert!(solve(&rows2, &[q(0, 1), q(1, 1)]).is_none());
    }

    #[test]
    fn integer_lattice_membership() {
        let gens = vec![
            vec![BigInt::from(2), BigInt::from(0)],
            vec![BigInt::from(1), BigInt::from(3)],
        ];
        assert!(in_integer_lattice(&gens, &[BigInt::from(3), BigInt::from(3)]));
        assert!(in_integer_lattice(&gens, &[BigInt::from(2), BigInt::from(0)]));
        assert!(!in_integer_lattice(&gens, &[BigInt::from(1), BigInt::from(0)]));
        assert!(!in_integer_lattice(&gens, &[BigInt::from(0), BigInt::from(1)]));
    }

    #[test]
    fn span_plus_lattice() {
        // span{(1/2, 1/2)} + Z^2 contains (1/4, 3/4) = (1/4, 1/4) + (0, 1/2)?
        // (1/4, 3/4) - 1/2*(1/2,1/2)... solve: t*(1/2,1/2) + w, w integer:
        // (1/4 - t/2, 3/4 - t/2): t = 1/2 gives (0, 1/2): not integer. t = 3/2:
        // (-1/2, 0): no. Difference of coords is 1/2, never integral: false.
        let span = vec![vec![q(1, 2), q(1, 2)]];
        assert!(!in_span_plus_integer_lattice(&span, &[q(1, 4), q(3, 4)]));
        // (1/3, 1/3) = 2/3*(1/2,1/2): true.
        assert!(in_span_plus_integer_lattice(&span, &[q(1, 3), q(1, 3)]));
        // (1/3, 4/3): difference 1: true.
        assert!(in_span_plus_integer_lattice(&span, &[q(1, 3), q(4, 3)]));
        // Empty span: membership is integrality.
        assert!(in_span_plus_integer_lattice(&[], &[q(2, 1), q(-5, 1)]));
        assert!(!in_span_plus_integer_lattice(&[], &[q(1, 2), q(0, 1)]));
    }

    #[test]
    fn f2_rank_works() {
        assert_eq!(f2_rank(vec![0b011, 0b101, 0b110]), 2);
        assert_eq!(f2_rank(vec![0b001, 0b010, 0b100]), 3);
        assert_eq!(f2_rank(vec![0, 0]), 0);
    }
}
