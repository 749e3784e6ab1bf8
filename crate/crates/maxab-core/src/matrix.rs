//! Matrices over cyclotomic scalars, plus the quaternionic pair model used
//! for the compact symplectic groups.

use std::cmp::Ordering;

use num_rational::BigRational;

use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};

/// Square matrix with entries in a cyclotomic field, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct CycMatrix {
    n: usize,
    entries: Vec<Cyclotomic>,
}

impl CycMatrix {
    pub fn zero(n: usize) -> Self {
        CycMatrix {
            n,
            entries: vec![Cyclotomic::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m[(i, i)] = Cyclotomic::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Cyclotomic>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        CycMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn diag(d: Vec<Cyclotomic>) -> Self {
        let n = d.len();
        let mut m = Self::zero(n);
        for (i, x) in d.into_iter().enumerate() {
            m[(i, i)] = x;
        }
        m
    }

    pub fn scalar(n: usize, z: &Cyclotomic) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m[(i, i)] = z.clone();
        }
        m
    }

    /// The cyclic shift with ones on the superdiagonal and in the lower-left
    /// corner: e_2 -> e_1, ..., e_1 -> e_n.
    pub fn cycle(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n - 1 {
            m[(i, i + 1)] = Cyclotomic::one();
        }
        m[(n - 1, 0)] = Cyclotomic::one();
        m
    }

    /// Permutation matrix sending e_j to e_{perm[j]}.
    pub fn permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        let mut m = Self::zero(n);
        for (j, &i) in perm.iter().enumerate() {
            m[(i, j)] = Cyclotomic::one();
        }
        m
    }

    pub fn block_diag(blocks: &[CycMatrix]) -> Self {
        let n: usize = blocks.iter().map(|b| b.n).sum();
        let mut m = Self::zero(n);
        let mut off = 0;
        for b in blocks {
            for i in 0..b.n {
                for j in 0..b.n {
                    m[(off + i, off + j)] = b[(i, j)].clone();
                }
            }
            off += b.n;
        }
        m
    }

    /// Kronecker product, (a ⊗ b)[(i1*nb+i2),(j1*nb+j2)] = a[i1,j1] b[i2,j2].
    pub fn kron(a: &CycMatrix, b: &CycMatrix) -> Self {
        let n = a.n * b.n;
        let mut m = Self::zero(n);
        for i1 in 0..a.n {
            for j1 in 0..a.n {
                if a[(i1, j1)].is_zero() {
                    continue;
                }
                for i2 in 0..b.n {
                    for j2 in 0..b.n {
                        if !b[(i2, j2)].is_zero() {
                            m[(i1 * b.n + i2, j1 * b.n + j2)] = a[(i1, j1)].mul(&b[(i2, j2)]);
                        }
                    }
                }
            }
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn mul(&self, other: &CycMatrix) -> Result<CycMatrix> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(self.n, other.n));
        }
        let n = self.n;
        let mut out = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = out[(i, j)].add(&a.mul(b));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &CycMatrix) -> Result<CycMatrix> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(self.n, other.n));
        }
        let mut out = self.clone();
        for (x, y) in out.entries.iter_mut().zip(other.entries.iter()) {
            *x = x.add(y);
        }
        Ok(out)
    }

    pub fn neg(&self) -> CycMatrix {
        self.map(|e| e.neg())
    }

    pub fn map(&self, f: impl Fn(&Cyclotomic) -> Cyclotomic) -> CycMatrix {
        CycMatrix {
            n: self.n,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> CycMatrix {
        let n = self.n;
        let mut out = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    /// Entrywise complex conjugation.
    pub fn conj_entries(&self) -> CycMatrix {
        self.map(|e| e.conj())
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> CycMatrix {
        self.conj_entries().transpose()
    }

    pub fn scale(&self, z: &Cyclotomic) -> CycMatrix {
        self.map(|e| e.mul(z))
    }

    pub fn eq_value(&self, other: &CycMatrix) -> bool {
        self.n == other.n
            && self
                .entries
                .iter()
                .zip(other.entries.iter())
                .all(|(a, b)| a.eq_value(b))
    }

    pub fn is_identity(&self) -> bool {
        self.eq_value(&Self::identity(self.n))
    }

    /// Some(lambda) when the matrix is lambda * I.
    pub fn as_scalar(&self) -> Option<Cyclotomic> {
        let lam = self[(0, 0)].clone();
        for i in 0..self.n {
            for j in 0..self.n {
                let want = if i == j { &lam } else { &Cyclotomic::zero() };
                if !self[(i, j)].eq_value(want) {
                    return None;
                }
            }
        }
        Some(lam)
    }

    pub fn is_unitary(&self) -> bool {
        match self.mul(&self.dagger()) {
            Ok(p) => p.is_identity(),
            Err(_) => false,
        }
    }

    pub fn is_real(&self) -> bool {
        self.entries.iter().all(|e| e.is_real())
    }

    pub fn det(&self) -> Cyclotomic {
        let n = self.n;
        let mut rows: Vec<Vec<Cyclotomic>> = (0..n)
            .map(|i| (0..n).map(|j| self[(i, j)].clone()).collect())
            .collect();
        let mut det = Cyclotomic::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !rows[r][c].is_zero()) else {
                return Cyclotomic::zero();
            };
            if p != c {
                rows.swap(p, c);
                det = det.neg();
            }
            det = det.mul(&rows[c][c]);
            let inv = rows[c][c].inv().expect("pivot nonzero");
            for r in c + 1..n {
                if !rows[r][c].is_zero() {
                    let f = rows[r][c].mul(&inv);
                    for j in c..n {
                        let t = rows[c][j].mul(&f);
                        rows[r][j] = rows[r][j].sub(&t);
                    }
                }
            }
        }
        det
    }

    /// General inverse by field elimination; errors on a singular matrix.
    pub fn inverse(&self) -> Result<CycMatrix> {
        let n = self.n;
        let mut aug: Vec<Vec<Cyclotomic>> = (0..n)
            .map(|i| {
                let mut row: Vec<Cyclotomic> = (0..n).map(|j| self[(i, j)].clone()).collect();
                row.extend((0..n).map(|j| {
                    if i == j {
                        Cyclotomic::one()
                    } else {
                        Cyclotomic::zero()
                    }
                }));
                row
            })
            .collect();
        let pivots = crate::linalg::rref(&mut aug);
        if pivots.len() < n {
            return Err(Error::DivisionByZero);
        }
        let mut out = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                out[(i, j)] = aug[i][n + j].clone();
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u64) -> CycMatrix {
        let mut acc = Self::identity(self.n);
        let mut sq = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq).unwrap();
            }
            sq = sq.mul(&sq).unwrap();
            e >>= 1;
        }
        acc
    }

    /// A B A^-1 B^-1 with A^-1 = A^dagger; both inputs must be unitary.
    pub fn commutator(&self, other: &CycMatrix) -> Result<CycMatrix> {
        if !self.is_unitary() || !other.is_unitary() {
            return Err(Error::NotUnitary);
        }
        self.mul(other)?
            .mul(&self.dagger())?
            .mul(&other.dagger())
    }

    pub fn trace(&self) -> Cyclotomic {
        let mut t = Cyclotomic::zero();
        for i in 0..self.n {
            t = t.add(&self[(i, i)]);
        }
        t
    }

    pub fn entry(&self, i: usize, j: usize) -> &Cyclotomic {
        &self[(i, j)]
    }

    /// All entries embedded into the given conductor, for canonical keys.
    pub fn at_conductor(&self, l: u64) -> CycMatrix {
        self.map(|e| e.embed_to(l))
    }

    pub fn conductor_lcm(&self) -> u64 {
        use num_integer::Integer;
        self.entries
            .iter()
            .fold(1u64, |acc, e| acc.lcm(&e.conductor()))
    }

    /// Flattened coefficient stream at the current conductors, used as an
    /// ordering/hash key. Only meaningful when all entries share a conductor.
    pub fn flat_key(&self) -> Vec<BigRational> {
        self.entries
            .iter()
            .flat_map(|e| e.coeffs().iter().cloned())
            .collect()
    }

    pub fn cmp_key(&self, other: &CycMatrix) -> Ordering {
        self.flat_key().cmp(&other.flat_key())
    }
}

impl std::ops::Index<(usize, usize)> for CycMatrix {
    type Output = Cyclotomic;
    fn index(&self, (i, j): (usize, usize)) -> &Cyclotomic {
        &self.entries[i * self.n + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for CycMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Cyclotomic {
        &mut self.entries[i * self.n + j]
    }
}

impl std::fmt::Debug for CycMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.n {
            write!(f, "  ")?;
            for j in 0..self.n {
                write!(f, "{}{}", self[(i, j)], if j + 1 < self.n { ", " } else { "" })?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Quaternionic matrix A + B j in the pair model: complex entries commute,
/// j z = conj(z) j, and (A+Bj)(C+Dj) = (AC - B conj(D)) + (AD + B conj(C)) j.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuatCycMatrix {
    pub a: CycMatrix,
    pub b: CycMatrix,
}

impl QuatCycMatrix {
    pub fn new(a: CycMatrix, b: CycMatrix) -> Self {
        assert_eq!(a.size(), b.size());
        QuatCycMatrix { a, b }
    }

    pub fn from_complex(a: CycMatrix) -> Self {
        let n = a.size();
        QuatCycMatrix {
            a,
            b: CycMatrix::zero(n),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_complex(CycMatrix::identity(n))
    }

    /// i I, j I, k I as quaternion scalar matrices.
    pub fn i_scalar(n: usize) -> Self {
        Self::from_complex(CycMatrix::scalar(n, &Cyclotomic::i()))
    }

    pub fn j_scalar(n: usize) -> Self {
        QuatCycMatrix {
            a: CycMatrix::zero(n),
            b: CycMatrix::identity(n),
        }
    }

    pub fn k_scalar(n: usize) -> Self {
        QuatCycMatrix {
            a: CycMatrix::zero(n),
            b: CycMatrix::scalar(n, &Cyclotomic::i()),
        }
    }

    pub fn size(&self) -> usize {
        self.a.size()
    }

    pub fn mul(&self, other: &QuatCycMatrix) -> Result<QuatCycMatrix> {
        let ac = self.a.mul(&other.a)?;
        let bd = self.b.mul(&other.b.conj_entries())?;
        let ad = self.a.mul(&other.b)?;
        let bc = self.b.mul(&other.a.conj_entries())?;
        Ok(QuatCycMatrix {
            a: ac.add(&bd.neg())?,
            b: ad.add(&bc)?,
        })
    }

    /// Quaternionic conjugate transpose.
    pub fn dagger(&self) -> QuatCycMatrix {
        QuatCycMatrix {
            a: self.a.dagger(),
            b: self.b.transpose().neg(),
        }
    }

    /// Left multiplication by a complex scalar.
    pub fn scale_complex(&self, z: &Cyclotomic) -> QuatCycMatrix {
        QuatCycMatrix {
            a: self.a.scale(z),
            b: self.b.scale(z),
        }
    }

    pub fn eq_value(&self, other: &QuatCycMatrix) -> bool {
        self.a.eq_value(&other.a) && self.b.eq_value(&other.b)
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_identity() && self.b.eq_value(&CycMatrix::zero(self.size()))
    }

    /// Some((alpha, beta)) when the matrix is (alpha + beta j) I.
    pub fn as_scalar(&self) -> Option<(Cyclotomic, Cyclotomic)> {
        let alpha = self.a.as_scalar()?;
        let beta = self.b.as_scalar()?;
        Some((alpha, beta))
    }

    pub fn is_unitary(&self) -> bool {
        match self.mul(&self.dagger()) {
            Ok(p) => p.is_identity(),
            Err(_) => false,
        }
    }

    pub fn at_conductor(&self, l: u64) -> QuatCycMatrix {
        QuatCycMatrix {
            a: self.a.at_conductor(l),
            b: self.b.at_conductor(l),
        }
    }

    pub fn conductor_lcm(&self) -> u64 {
        use num_integer::Integer;
        self.a.conductor_lcm().lcm(&self.b.conductor_lcm())
    }

    pub fn flat_key(&self) -> Vec<BigRational> {
        let mut k = self.a.flat_key();
        k.extend(self.b.flat_key());
        k
    }
}

/// One factor of a (possibly product) group element.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MatPart {
    C(CycMatrix),
    H(QuatCycMatrix),
}

impl MatPart {
    pub fn size(&self) -> usize {
        match self {
            MatPart::C(m) => m.size(),
            MatPart::H(m) => m.size(),
        }
    }

    pub fn identity_like(&self) -> MatPart {
        match self {
            MatPart::C(m) => MatPart::C(CycMatrix::identity(m.size())),
            MatPart::H(m) => MatPart::H(QuatCycMatrix::identity(m.size())),
        }
    }

    pub fn mul(&self, other: &MatPart) -> Result<MatPart> {
        match (self, other) {
            (MatPart::C(a), MatPart::C(b)) => Ok(MatPart::C(a.mul(b)?)),
            (MatPart::H(a), MatPart::H(b)) => Ok(MatPart::H(a.mul(b)?)),
            _ => Err(Error::CtxMismatch),
        }
    }

    pub fn dagger(&self) -> MatPart {
        match self {
            MatPart::C(m) => MatPart::C(m.dagger()),
            MatPart::H(m) => MatPart::H(m.dagger()),
        }
    }

    /// Entrywise complex conjugation (the tau_0 action on unitary factors).
    pub fn conj_entries(&self) -> MatPart {
        match self {
            MatPart::C(m) => MatPart::C(m.conj_entries()),
            MatPart::H(m) => MatPart::H(QuatCycMatrix {
                a: m.a.conj_entries(),
                b: m.b.conj_entries(),
            }),
        }
    }

    /// The action of the outer generator tau: complex conjugation on unitary
    /// factors, identity on quaternionic ones.
    pub fn tau_conj(&self) -> MatPart {
        match self {
            MatPart::C(m) => MatPart::C(m.conj_entries()),
            MatPart::H(_) => self.clone(),
        }
    }

    /// Inverse of a tau-tagged representative factor: transpose on unitary
    /// factors (conj of the dagger), plain dagger on quaternionic ones.
    pub fn tau_inverse(&self) -> MatPart {
        match self {
            MatPart::C(m) => MatPart::C(m.transpose()),
            MatPart::H(m) => MatPart::H(m.dagger()),
        }
    }

    pub fn transpose(&self) -> MatPart {
        match self {
            MatPart::C(m) => MatPart::C(m.transpose()),
            MatPart::H(m) => MatPart::H(QuatCycMatrix {
                a: m.a.transpose(),
                b: m.b.transpose(),
            }),
        }
    }

    /// Scale by a center scalar. Quaternionic factors only admit real ones
    /// here; complex scalars act by left multiplication.
    pub fn scale(&self, z: &Cyclotomic) -> MatPart {
        match self {
            MatPart::C(m) => MatPart::C(m.scale(z)),
            MatPart::H(m) => MatPart::H(m.scale_complex(z)),
        }
    }

    pub fn eq_value(&self, other: &MatPart) -> bool {
        match (self, other) {
            (MatPart::C(a), MatPart::C(b)) => a.eq_value(b),
            (MatPart::H(a), MatPart::H(b)) => a.eq_value(b),
            _ => false,
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            MatPart::C(m) => m.is_identity(),
            MatPart::H(m) => m.is_identity(),
        }
    }

    pub fn is_unitary(&self) -> bool {
        match self {
            MatPart::C(m) => m.is_unitary(),
            MatPart::H(m) => m.is_unitary(),
        }
    }

    /// Scalar ratio self = lambda * other, when it exists entrywise.
    pub fn scalar_ratio(&self, other: &MatPart) -> Option<Cyclotomic> {
        match (self, other) {
            (MatPart::C(a), MatPart::C(b)) => {
                let n = a.size();
                if n != b.size() {
                    return None;
                }
                let mut lam: Option<Cyclotomic> = None;
                for i in 0..n {
                    for j in 0..n {
                        if !b[(i, j)].is_zero() {
                            lam = Some(a[(i, j)].div(&b[(i, j)]).ok()?);
                            break;
                        }
                    }
                    if lam.is_some() {
                        break;
                    }
                }
                let lam = lam?;
                if a.eq_value(&b.scale(&lam)) {
                    Some(lam)
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    pub fn at_conductor(&self, l: u64) -> MatPart {
        match self {
            MatPart::C(m) => MatPart::C(m.at_conductor(l)),
            MatPart::H(m) => MatPart::H(m.at_conductor(l)),
        }
    }

    pub fn conductor_lcm(&self) -> u64 {
        match self {
            MatPart::C(m) => m.conductor_lcm(),
            MatPart::H(m) => m.conductor_lcm(),
        }
    }

    pub fn flat_key(&self) -> Vec<BigRational> {
        match self {
            MatPart::C(m) => m.flat_key(),
            MatPart::H(m) => m.flat_key(),
        }
    }
}

/// Named matrices from the constructions: I_{p,q}, J_n, J'_n, I'_{p,q},
/// J_{p,q}, K_p and friends.
pub mod named {
    use super::*;

    fn minus_one() -> Cyclotomic {
        Cyclotomic::from_integer(-1)
    }

    /// diag(-I_p, I_q).
    pub fn i_pq(p: usize, q: usize) -> CycMatrix {
        let mut d = vec![minus_one(); p];
        d.extend(vec![Cyclotomic::one(); q]);
        CycMatrix::diag(d)
    }

    /// [[0, I_n], [-I_n, 0]].
    pub fn j_n(n: usize) -> CycMatrix {
        let mut m = CycMatrix::zero(2 * n);
        for i in 0..n {
            m[(i, n + i)] = Cyclotomic::one();
            m[(n + i, i)] = minus_one();
        }
        m
    }

    /// [[0, I_n], [I_n, 0]].
    pub fn jp_n(n: usize) -> CycMatrix {
        let mut m = CycMatrix::zero(2 * n);
        for i in 0..n {
            m[(i, n + i)] = Cyclotomic::one();
            m[(n + i, i)] = Cyclotomic::one();
        }
        m
    }

    /// diag(-I_p, I_q, -I_p, I_q).
    pub fn ip_pq(p: usize, q: usize) -> CycMatrix {
        CycMatrix::block_diag(&[i_pq(p, q), i_pq(p, q)])
    }

    /// diag(J_p, J_q) in the 2p+2q block convention.
    pub fn j_pq(p: usize, q: usize) -> CycMatrix {
        CycMatrix::block_diag(&[j_n(p), j_n(q)])
    }

    /// The 4p x 4p matrix K_p with antidiagonal +/- I_p blocks.
    pub fn k_p(p: usize) -> CycMatrix {
        let mut m = CycMatrix::zero(4 * p);
        for i in 0..p {
            m[(i, 3 * p + i)] = Cyclotomic::one();
            m[(p + i, 2 * p + i)] = minus_one();
            m[(2 * p + i, p + i)] = Cyclotomic::one();
            m[(3 * p + i, i)] = minus_one();
        }
        m
    }

    /// Planar rotation by the rational angle 2*pi*q in the (i, i+1) plane
    /// of an n x n identity.
    pub fn so2_block(n: usize, plane: usize, q: &BigRational) -> CycMatrix {
        let denom: u64 = q
            .denom()
            .try_into()
            .expect("rotation denominator fits u64");
        let numer_mod = ((q.numer() % q.denom() + q.denom()) % q.denom())
            .try_into()
            .unwrap_or(0i64);
        let z = Cyclotomic::root_of_unity(denom, numer_mod);
        let c = z.re();
        let s = z.im();
        let mut m = CycMatrix::identity(n);
        m[(plane, plane)] = c.clone();
        m[(plane, plane + 1)] = s.clone();
        m[(plane + 1, plane)] = s.neg();
        m[(plane + 1, plane + 1)] = c;
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dagger_is_involutive() {
        let m = CycMatrix::from_rows(vec![
            vec![Cyclotomic::i(), Cyclotomic::one()],
            vec![Cyclotomic::zero(), Cyclotomic::omega()],
        ]);
        assert!(m.dagger().dagger().eq_value(&m));
    }

    #[test]
    fn named_matrices_are_in_their_groups() {
        assert!(named::i_pq(1, 2).is_unitary());
        assert!(named::j_n(2).is_unitary());
        assert!(named::jp_n(3).is_unitary());
        assert!(named::k_p(1).is_unitary());
        assert!(named::k_p(2).is_real());
        // J_n^2 = -I.
        let j = named::j_n(2);
        assert!(j.mul(&j).unwrap().eq_value(&CycMatrix::identity(4).neg()));
        // K_p^2 = -I.
        let k = named::k_p(1);
        assert!(k.mul(&k).unwrap().eq_value(&CycMatrix::identity(4).neg()));
    }

    #[test]
    fn commutator_anchors_and_errors() {
        // With A = diag(1, w, w^2) and B the 3-cycle, [B, A] = w I.
        let a = CycMatrix::diag(vec![
            Cyclotomic::one(),
            Cyclotomic::omega(),
            Cyclotomic::omega().pow(2).unwrap(),
        ]);
        let b = CycMatrix::cycle(3);
        let c = b.commutator(&a).unwrap();
        assert!(c.eq_value(&CycMatrix::scalar(3, &Cyclotomic::omega())));
        // [A, A] = I.
        assert!(a.commutator(&a).unwrap().is_identity());
        // Non-unitary input is rejected.
        let bad = CycMatrix::scalar(3, &Cyclotomic::from_integer(2));
        assert!(matches!(bad.commutator(&a), Err(Error::NotUnitary)));
    }

    #[test]
    fn quaternion_relations() {
        let i = QuatCycMatrix::i_scalar(1);
        let j = QuatCycMatrix::j_scalar(1);
        let k = QuatCycMatrix::k_scalar(1);
        let ij = i.mul(&j).unwrap();
        assert!(ij.eq_value(&k));
        let ji = j.mul(&i).unwrap();
        let minus_k = QuatCycMatrix {
            a: k.a.neg(),
            b: k.b.neg(),
        };
        assert!(ji.eq_value(&minus_k));
        let ii = i.mul(&i).unwrap();
        assert!(ii.a.eq_value(&CycMatrix::identity(1).neg()));
        let jj = j.mul(&j).unwrap();
        assert!(jj.a.eq_value(&CycMatrix::identity(1).neg()));
    }

    #[test]
    fn quat_dagger_gives_inverse() {
        // (iI + jI)/sqrt2-like element: use i then j separately; both unitary.
        let j = QuatCycMatrix::j_scalar(2);
        assert!(j.mul(&j.dagger()).unwrap().is_identity());
        let m = QuatCycMatrix::new(named::i_pq(1, 1), CycMatrix::zero(2));
        assert!(m.is_unitary());
    }

    #[test]
    fn determinant_and_inverse() {
        let m = CycMatrix::from_rows(vec![
            vec![Cyclotomic::one(), Cyclotomic::i()],
            vec![Cyclotomic::zero(), Cyclotomic::from_integer(2)],
        ]);
        assert!(m.det().eq_value(&Cyclotomic::from_integer(2)));
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).unwrap().is_identity());
    }

    #[test]
    fn rotation_block_is_orthogonal() {
        let q = BigRational::new(1.into(), 3.into());
        let r = named::so2_block(2, 0, &q);
        assert!(r.is_real());
        assert!(r.is_unitary());
        assert!(r.pow(3).is_identity());
    }
}
