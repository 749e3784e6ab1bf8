//! Exact arithmetic in cyclotomic fields Q(zeta_N).
//!
//! A [`Cyclotomic`] is stored as a rational coefficient vector with respect
//! to the power basis `1, z, ..., z^(phi(N)-1)` of Q(zeta_N) modulo the N-th
//! cyclotomic polynomial, so equality of values at a common conductor is
//! equality of coefficient vectors. All coefficients are arbitrary-precision
//! rationals; there is no floating point anywhere in this module.
//!
//! Arithmetic between different conductors embeds both operands into
//! Q(zeta_lcm) first. Results are *not* automatically pushed down to their
//! minimal conductor (that costs a linear solve); call
//! [`Cyclotomic::reduced`] when a canonical minimal form is wanted, e.g.
//! before serializing.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Euler totient.
pub fn euler_phi(n: u64) -> u64 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Distinct prime factors, ascending.
pub fn prime_factors(n: u64) -> Vec<u64> {
    let mut n = n;
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn cyclo_poly_cache() -> &'static Mutex<HashMap<u64, Vec<BigInt>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Vec<BigInt>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Coefficients of the N-th cyclotomic polynomial, constant term first.
/// The polynomial is monic of degree phi(N).
pub fn cyclotomic_polynomial(n: u64) -> Vec<BigInt> {
    if let Some(p) = cyclo_poly_cache().lock().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by prod of Phi_d for proper divisors d of n.
    let mut num = vec![BigInt::zero(); (n + 1) as usize];
    num[0] = BigInt::from(-1);
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            let phi_d = cyclotomic_polynomial(d);
            num = exact_div_int_poly(&num, &phi_d);
        }
    }
    cyclo_poly_cache().lock().unwrap().insert(n, num.clone());
    num
}

/// Exact division of integer polynomials (divisor monic), remainder known zero.
fn exact_div_int_poly(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = num.len() - 1;
    let dd = den.len() - 1;
    assert!(den[dd].is_one(), "divisor must be monic");
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); dn - dd + 1];
    for i in (0..=dn - dd).rev() {
        let c = rem[i + dd].clone();
        if !c.is_zero() {
            quot[i] = c.clone();
            for j in 0..=dd {
                let t = &den[j] * &c;
                rem[i + j] -= t;
            }
        }
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()));
    quot
}

/// An exact element of Q(zeta_N) in the power basis mod Phi_N.
#[derive(Clone, PartialEq, Eq)]
pub struct Cyclotomic {
    conductor: u64,
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    /// The zero of Q(zeta_n).
    pub fn zero_at(n: u64) -> Self {
        Cyclotomic {
            conductor: n,
            coeffs: vec![BigRational::zero(); euler_phi(n) as usize],
        }
    }

    pub fn zero() -> Self {
        Self::zero_at(1)
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    pub fn from_rational(q: BigRational) -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![q],
        }
    }

    pub fn from_integer(k: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(k)))
    }

    /// p/q as an exact rational scalar.
    pub fn ratio(p: i64, q: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    /// The primitive n-th root of unity zeta_n.
    pub fn zeta(n: u64) -> Self {
        Self::root_of_unity(n, 1)
    }

    /// zeta_n^k.
    pub fn root_of_unity(n: u64, k: i64) -> Self {
        assert!(n >= 1);
        let kk = k.rem_euclid(n as i64) as u64;
        let mut poly = vec![BigRational::zero(); (kk + 1) as usize];
        poly[kk as usize] = BigRational::one();
        Self::from_poly(n, poly)
    }

    /// i = zeta_4.
    pub fn i() -> Self {
        Self::zeta(4)
    }

    /// omega = zeta_3, the primitive cube root of unity.
    pub fn omega() -> Self {
        Self::zeta(3)
    }

    /// sqrt(2) = zeta_8 + zeta_8^-1.
    pub fn sqrt2() -> Self {
        Self::zeta(8).add(&Self::root_of_unity(8, -1))
    }

    /// Build from a polynomial in zeta_n of arbitrary degree; reduces mod Phi_n.
    pub fn from_poly(n: u64, mut poly: Vec<BigRational>) -> Self {
        // First fold exponents >= n using zeta^n = 1, then reduce mod Phi_n.
        if poly.len() > n as usize {
            let mut folded = vec![BigRational::zero(); n as usize];
            for (e, c) in poly.into_iter().enumerate() {
                folded[e % n as usize] += c;
            }
            poly = folded;
        }
        let phi = euler_phi(n) as usize;
        let modpoly = cyclotomic_polynomial(n);
        reduce_mod(&mut poly, &modpoly);
        poly.resize(phi, BigRational::zero());
        Cyclotomic {
            conductor: n,
            coeffs: poly,
        }
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Coefficients w.r.t. the power basis at the current conductor.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.eq_value(&Cyclotomic::one())
    }

    /// Some(q) when the value lies in Q.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Ring embedding Q(zeta_N) -> Q(zeta_M) for N | M, zeta_N -> zeta_M^(M/N).
    pub fn embed_to(&self, m: u64) -> Self {
        assert_eq!(
            m % self.conductor,
            0,
            "embedding requires divisibility of conductors"
        );
        if m == self.conductor {
            return self.clone();
        }
        let step = (m / self.conductor) as usize;
        let mut poly = vec![BigRational::zero(); m as usize];
        for (e, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                poly[e * step] += c;
            }
        }
        Self::from_poly(m, poly)
    }

    fn unify(&self, other: &Self) -> (Self, Self, u64) {
        let l = self.conductor.lcm(&other.conductor);
        (self.embed_to(l), other.embed_to(l), l)
    }

    /// Mathematical equality (unifies conductors first).
    pub fn eq_value(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (a, b, _) = self.unify(other);
        a.coeffs == b.coeffs
    }

    pub fn add(&self, other: &Self) -> Self {
        let (mut a, b, _) = self.unify(other);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs.iter()) {
            *x += y;
        }
        a
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b, l) = self.unify(other);
        let mut prod = vec![BigRational::zero(); a.coeffs.len() + b.coeffs.len()];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        Self::from_poly(l, prod)
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in Q[x]
    /// against Phi_N (irreducible, so any nonzero value is a unit).
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let modpoly: Vec<BigRational> = cyclotomic_polynomial(self.conductor)
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        // Extended gcd of (self, Phi): s*self + t*Phi = g with g a nonzero constant.
        let (g, s) = half_ext_gcd(&self.coeffs, &modpoly);
        debug_assert_eq!(poly_degree(&g), Some(0));
        let ginv = g[0].recip();
        let inv_poly: Vec<BigRational> = s.iter().map(|c| c * &ginv).collect();
        Ok(Self::from_poly(self.conductor, inv_poly))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    /// Galois automorphism zeta -> zeta^j for gcd(j, N) = 1.
    pub fn galois(&self, j: u64) -> Self {
        let n = self.conductor;
        assert_eq!(j.gcd(&n), 1, "galois exponent must be coprime to conductor");
        let mut poly = vec![BigRational::zero(); n as usize];
        for (e, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                poly[(e as u64 * j % n) as usize] += c;
            }
        }
        Self::from_poly(n, poly)
    }

    /// Complex conjugation zeta -> zeta^-1.
    pub fn conj(&self) -> Self {
        if self.conductor <= 2 {
            return self.clone();
        }
        self.galois(self.conductor - 1)
    }

    /// (z + conj z)/2.
    pub fn re(&self) -> Self {
        self.add(&self.conj()).scale(&BigRational::new(1.into(), 2.into()))
    }

    /// (z - conj z)/(2i).
    pub fn im(&self) -> Self {
        self.sub(&self.conj())
            .mul(&Cyclotomic::i().inv().unwrap())
            .scale(&BigRational::new(1.into(), 2.into()))
    }

    pub fn is_real(&self) -> bool {
        self.conj().eq_value(self)
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Cyclotomic::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            sq = sq.mul(&sq);
            e >>= 1;
        }
        Ok(acc)
    }

    /// Least k <= bound with self^k = 1, or None (in particular when the value
    /// is not a root of unity).
    pub fn order(&self, bound: u64) -> Option<u64> {
        let one = Cyclotomic::one();
        let mut acc = self.clone();
        for k in 1..=bound {
            if acc.eq_value(&one) {
                return Some(k);
            }
            acc = acc.mul(self);
        }
        None
    }

    /// When the value is a root of unity of order d, returns (d, a) with
    /// self = zeta_d^a and gcd(a, d) = 1 not enforced (a is reduced mod d).
    pub fn as_root_of_unity(&self, bound: u64) -> Option<(u64, u64)> {
        let d = self.order(bound)?;
        let z = Cyclotomic::zeta(d);
        let mut p = Cyclotomic::one();
        for a in 0..d {
            if p.eq_value(self) {
                return Some((d, a));
            }
            p = p.mul(&z);
        }
        None
    }

    /// Canonical form at the minimal conductor containing the value.
    pub fn reduced(&self) -> Self {
        let mut cur = self.clone();
        loop {
            let n = cur.conductor;
            if n == 1 {
                return cur;
            }
            let mut shrunk = false;
            for p in prime_factors(n) {
                let d = n / p;
                if let Some(smaller) = cur.try_descend(d) {
                    cur = smaller;
                    shrunk = true;
                    break;
                }
            }
            if !shrunk {
                return cur;
            }
        }
    }

    /// Attempt to rewrite the value in Q(zeta_d), d | N. Solves the exact
    /// linear system expressing the value in the embedded power basis of d.
    fn try_descend(&self, d: u64) -> Option<Self> {
        let phi_d = euler_phi(d) as usize;
        let phi_n = self.coeffs.len();
        // Columns: embeddings of zeta_d^j into conductor N.
        let mut cols = Vec::with_capacity(phi_d);
        for j in 0..phi_d {
            cols.push(Cyclotomic::root_of_unity(d, j as i64).embed_to(self.conductor));
        }
        // Gaussian elimination on the phi_n x phi_d system.
        let mut aug: Vec<Vec<BigRational>> = (0..phi_n)
            .map(|r| {
                let mut row: Vec<BigRational> =
                    cols.iter().map(|c| c.coeffs[r].clone()).collect();
                row.push(self.coeffs[r].clone());
                row
            })
            .collect();
        let mut pivot_row = 0;
        let mut pivots = Vec::new();
        for col in 0..phi_d {
            if let Some(r) = (pivot_row..phi_n).find(|&r| !aug[r][col].is_zero()) {
                aug.swap(pivot_row, r);
                let p = aug[pivot_row][col].clone();
                for x in aug[pivot_row].iter_mut() {
                    *x /= &p;
                }
                for r2 in 0..phi_n {
                    if r2 != pivot_row && !aug[r2][col].is_zero() {
                        let f = aug[r2][col].clone();
                        for c2 in 0..=phi_d {
                            let t = &aug[pivot_row][c2] * &f;
                            aug[r2][c2] -= t;
                        }
                    }
                }
                pivots.push(col);
                pivot_row += 1;
            }
        }
        // Consistency: rows below the pivots must have zero rhs.
        for r in pivot_row..phi_n {
            if !aug[r][phi_d].is_zero() {
                return None;
            }
        }
        let mut sol = vec![BigRational::zero(); phi_d];
        for (k, &col) in pivots.iter().enumerate() {
            sol[col] = aug[k][phi_d].clone();
        }
        Some(Cyclotomic {
            conductor: d,
            coeffs: sol,
        })
    }
}

fn poly_degree(p: &[BigRational]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

/// Reduce `poly` modulo the monic integer polynomial `m` in place.
fn reduce_mod(poly: &mut Vec<BigRational>, m: &[BigInt]) {
    let dm = m.len() - 1;
    while let Some(d) = poly_degree(poly) {
        if d < dm {
            break;
        }
        let lead = poly[d].clone();
        for j in 0..=dm {
            if !m[j].is_zero() {
                let t = &lead * BigRational::from_integer(m[j].clone());
                poly[d - dm + j] -= t;
            }
        }
    }
    poly.truncate(dm);
}

/// Extended gcd returning (g, s) with s*a + t*b = g (t discarded).
fn half_ext_gcd(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r0 = a.to_vec();
    let mut r1 = b.to_vec();
    let mut s0 = vec![BigRational::one()];
    let mut s1 = vec![BigRational::zero()];
    while poly_degree(&r1).is_some() {
        let (q, rem) = poly_divmod(&r0, &r1);
        r0 = r1;
        r1 = rem;
        let qs1 = poly_mul(&q, &s1);
        let new_s = poly_sub(&s0, &qs1);
        s0 = s1;
        s1 = new_s;
    }
    (r0, s0)
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out = vec![BigRational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    out
}

fn poly_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let db = poly_degree(b).expect("division by zero polynomial");
    let mut rem = a.to_vec();
    let mut quot = vec![BigRational::zero(); a.len().saturating_sub(db)];
    loop {
        let Some(dr) = poly_degree(&rem) else { break };
        if dr < db {
            break;
        }
        let f = &rem[dr] / &b[db];
        quot[dr - db] = f.clone();
        for j in 0..=db {
            if !b[j].is_zero() {
                let t = &b[j] * &f;
                rem[dr - db + j] -= t;
            }
        }
    }
    (quot, rem)
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            if e == 0 {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "z{}^{}", self.conductor, e)?;
            } else {
                write!(f, "{a}*z{}^{}", self.conductor, e)?;
            }
            first = false;
        }
        Ok(())
    }
}

/// Formats a rational as "p" or "p/q" for the JSON encodings.
pub fn rational_to_string(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses "p" or "p/q".
pub fn rational_from_str(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational numerator: {s}")))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational denominator: {s}")))?;
    if d.is_zero() {
        return Err(Error::Parse("rational with zero denominator".into()));
    }
    Ok(BigRational::new(n, d))
}

impl serde::Serialize for Cyclotomic {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let red = self.reduced();
        let mut st = ser.serialize_struct("Cyclotomic", 2)?;
        st.serialize_field("N", &red.conductor)?;
        let coeffs: Vec<String> = red.coeffs.iter().map(rational_to_string).collect();
        st.serialize_field("coeffs", &coeffs)?;
        st.end()
    }
}

impl<'de> serde::Deserialize<'de> for Cyclotomic {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        #[derive(serde::Deserialize)]
        struct Repr {
            #[serde(rename = "N")]
            n: u64,
            coeffs: Vec<String>,
        }
        let r = Repr::deserialize(de)?;
        if r.n == 0 {
            return Err(serde::de::Error::custom("conductor must be positive"));
        }
        let mut coeffs = Vec::with_capacity(r.coeffs.len());
        for s in &r.coeffs {
            coeffs.push(rational_from_str(s).map_err(serde::de::Error::custom)?);
        }
        Ok(Cyclotomic::from_poly(r.n, coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(p: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(d))
    }

    #[test]
    fn i_squared_is_minus_one() {
        let i = Cyclotomic::i();
        assert!(i.mul(&i).eq_value(&Cyclotomic::from_integer(-1)));
    }

    #[test]
    fn sqrt2_squared_is_two() {
        let s = Cyclotomic::sqrt2();
        assert!(s.mul(&s).eq_value(&Cyclotomic::from_integer(2)));
    }

    #[test]
    fn conj_omega_times_omega_is_one() {
        let w = Cyclotomic::omega();
        assert!(w.conj().mul(&w).eq_value(&Cyclotomic::one()));
    }

    #[test]
    fn conj_is_involutive_automorphism() {
        let x = Cyclotomic::zeta(12).add(&Cyclotomic::ratio(3, 7));
        assert!(x.conj().conj().eq_value(&x));
        let y = Cyclotomic::zeta(8);
        assert!(x.mul(&y).conj().eq_value(&x.conj().mul(&y.conj())));
    }

    #[test]
    fn orders() {
        assert_eq!(Cyclotomic::zeta(6).order(12), Some(6));
        assert_eq!(Cyclotomic::from_integer(-1).order(4), Some(2));
        assert_eq!(Cyclotomic::ratio(1, 2).order(100), None);
    }

    #[test]
    fn order_of_powers() {
        for n in 2..=24u64 {
            let z = Cyclotomic::zeta(n);
            for j in 1..n {
                let expect = n / n.gcd(&j);
                assert_eq!(z.pow(j as i64).unwrap().order(n), Some(expect), "n={n} j={j}");
            }
        }
    }

    #[test]
    fn inv_of_zero_errors() {
        assert!(matches!(
            Cyclotomic::zero().inv(),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn reduction_finds_minimal_conductor() {
        // zeta_4^2 = -1 lives in Q.
        let m = Cyclotomic::i().mul(&Cyclotomic::i());
        assert_eq!(m.reduced().conductor(), 1);
        // zeta_12^2 = zeta_6 which equals -zeta_3^2, conductor 3.
        let z = Cyclotomic::zeta(12).pow(2).unwrap().reduced();
        assert_eq!(z.conductor(), 3);
        assert!(z.eq_value(&Cyclotomic::zeta(6)));
    }

    #[test]
    fn embedding_is_transitive() {
        let x = Cyclotomic::zeta(3).add(&Cyclotomic::ratio(1, 2));
        let via = x.embed_to(6).embed_to(24);
        let direct = x.embed_to(24);
        assert_eq!(via, direct);
    }

    #[test]
    fn json_round_trip() {
        let x = Cyclotomic::zeta(8).scale(&q(3, 2)).add(&Cyclotomic::ratio(-1, 5));
        let s = serde_json::to_string(&x).unwrap();
        let y: Cyclotomic = serde_json::from_str(&s).unwrap();
        assert!(x.eq_value(&y));
    }

    fn arb_cyc() -> impl Strategy<Value = Cyclotomic> {
        // Small conductors and coefficients keep the proptest cases fast.
        (prop::sample::select(vec![1u64, 2, 3, 4, 6, 8, 12]), prop::collection::vec(-4i64..5, 1..4))
            .prop_map(|(n, cs)| {
                let mut acc = Cyclotomic::zero_at(n);
                for (e, c) in cs.into_iter().enumerate() {
                    acc = acc.add(
                        &Cyclotomic::root_of_unity(n, e as i64).scale(&q(c, 1)),
                    );
                }
                acc
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn field_axioms(a in arb_cyc(), b in arb_cyc(), c in arb_cyc()) {
            prop_assert!(a.mul(&b).eq_value(&b.mul(&a)));
            prop_assert!(a.mul(&b.mul(&c)).eq_value(&a.mul(&b).mul(&c)));
            prop_assert!(a.mul(&b.add(&c)).eq_value(&a.mul(&b).add(&a.mul(&c))));
            if !a.is_zero() {
                prop_assert!(a.mul(&a.inv().unwrap()).eq_value(&Cyclotomic::one()));
            }
        }

        #[test]
        fn embedding_is_ring_hom(a in arb_cyc(), b in arb_cyc()) {
            let m = a.conductor().lcm(&b.conductor()) * 2;
            prop_assert!(a.add(&b).embed_to(m).eq_value(&a.embed_to(m).add(&b.embed_to(m))));
            prop_assert!(a.mul(&b).embed_to(m).eq_value(&a.embed_to(m).mul(&b.embed_to(m))));
        }
    }
}
