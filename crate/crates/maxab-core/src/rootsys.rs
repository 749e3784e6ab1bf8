//! Root systems of the simple types with Bourbaki numbering: all roots in
//! simple-root coordinates, exact rational coweights as torus elements,
//! fixed root subsystems with Dynkin-type identification (long/short
//! decorated), Levi data, and coroot-lattice membership via exact integer
//! linear algebra.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash, Serialize, Deserialize)]
pub enum SimpleFamily {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash, Serialize, Deserialize)]
pub struct SimpleType {
    pub family: SimpleFamily,
    pub rank: usize,
}

impl SimpleType {
    pub fn new(family: SimpleFamily, rank: usize) -> Self {
        SimpleType { family, rank }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let (f, r) = s.split_at(1);
        let family = match f {
            "A" | "a" => SimpleFamily::A,
            "B" | "b" => SimpleFamily::B,
            "C" | "c" => SimpleFamily::C,
            "D" | "d" => SimpleFamily::D,
            "E" | "e" => SimpleFamily::E,
            "F" | "f" => SimpleFamily::F,
            "G" | "g" => SimpleFamily::G,
            _ => return Err(Error::Parse(format!("unknown type {s}"))),
        };
        let rank: usize = r
            .parse()
            .map_err(|_| Error::Parse(format!("bad rank in {s}")))?;
        Ok(SimpleType { family, rank })
    }

    pub fn root_count(&self) -> usize {
        let n = self.rank;
        match self.family {
            SimpleFamily::A => n * (n + 1),
            SimpleFamily::B | SimpleFamily::C => 2 * n * n,
            SimpleFamily::D => 2 * n * (n - 1),
            SimpleFamily::E => match n {
                6 => 72,
                7 => 126,
                8 => 240,
                _ => unreachable!(),
            },
            SimpleFamily::F => 48,
            SimpleFamily::G => 12,
        }
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.family {
            SimpleFamily::A => 'A',
            SimpleFamily::B => 'B',
            SimpleFamily::C => 'C',
            SimpleFamily::D => 'D',
            SimpleFamily::E => 'E',
            SimpleFamily::F => 'F',
            SimpleFamily::G => 'G',
        };
        write!(f, "{}{}", c, self.rank)
    }
}

/// Bourbaki Cartan matrix: entry [i][j] = alpha_j(H'_i) = 2(a_i,a_j)/(a_i,a_i).
pub fn cartan_matrix(t: SimpleType) -> Result<Vec<Vec<i64>>> {
    let n = t.rank;
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let edge = |a: &mut Vec<Vec<i64>>, i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match (t.family, n) {
        (SimpleFamily::A, _) if n >= 1 => {
            for i in 0..n - 1 {
                edge(&mut a, i, i + 1);
            }
        }
        (SimpleFamily::B, _) if n >= 2 => {
            for i in 0..n - 2 {
                edge(&mut a, i, i + 1);
            }
            // alpha_n short: the arrow points from n-1 to n.
            a[n - 2][n - 1] = -1;
            a[n - 1][n - 2] = -2;
        }
        (SimpleFamily::C, _) if n >= 2 => {
            for i in 0..n - 2 {
                edge(&mut a, i, i + 1);
            }
            a[n - 2][n - 1] = -2;
            a[n - 1][n - 2] = -1;
        }
        (SimpleFamily::D, _) if n >= 3 => {
            for i in 0..n - 2 {
                edge(&mut a, i, i + 1);
            }
            edge(&mut a, n - 3, n - 1);
        }
        (SimpleFamily::E, 6 | 7 | 8) => {
            // Chain 1-3-4-5-6(-7)(-8) with 2 attached to 4 (0-indexed).
            edge(&mut a, 0, 2);
            edge(&mut a, 2, 3);
            edge(&mut a, 3, 4);
            edge(&mut a, 4, 5);
            if n >= 7 {
                edge(&mut a, 5, 6);
            }
            if n >= 8 {
                edge(&mut a, 6, 7);
            }
            edge(&mut a, 1, 3);
        }
        (SimpleFamily::F, 4) => {
            edge(&mut a, 0, 1);
            a[1][2] = -1;
            a[2][1] = -2;
            edge(&mut a, 2, 3);
        }
        (SimpleFamily::G, 2) => {
            a[0][1] = -3;
            a[1][0] = -1;
        }
        _ => return Err(Error::Unsupported(format!("no simple type {t}"))),
    }
    Ok(a)
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    pub simple_type: SimpleType,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    /// All roots in simple-root coordinates.
    pub roots: Vec<Vec<i64>>,
    /// Half squared lengths d_i = (a_i, a_i)/2, normalized so long roots
    /// have d = 1.
    pub lengths: Vec<BigRational>,
}

impl RootSystem {
    pub fn new(t: SimpleType) -> Result<Self> {
        let cartan = cartan_matrix(t)?;
        let n = t.rank;
        // Propagate d_j / d_i = A[i][j] / A[j][i] over edges.
        let mut d: Vec<Option<BigRational>> = vec![None; n];
        d[0] = Some(BigRational::one());
        let mut changed = true;
        while changed {
            changed = false;
            for i in 0..n {
                for j in 0..n {
                    if i != j && cartan[i][j] != 0 {
                        if let (Some(di), None) = (d[i].clone(), &d[j]) {
                            // d_i A[i][j] = d_j A[j][i]
                            let ratio = BigRational::new(
                                BigInt::from(cartan[i][j]),
                                BigInt::from(cartan[j][i]),
                            );
                            d[j] = Some(di * ratio);
                            changed = true;
                        }
                    }
                }
            }
        }
        let mut lengths: Vec<BigRational> = d.into_iter().map(|x| x.expect("connected")).collect();
        let max = lengths.iter().cloned().fold(BigRational::zero(), |a, b| a.max(b));
        for l in lengths.iter_mut() {
            *l /= max.clone();
        }

        // Generate all roots by closing the simple roots under simple
        // reflections s_i(r) = r - <r, alpha_i^vee> alpha_i.
        let mut roots: Vec<Vec<i64>> = Vec::new();
        for i in 0..n {
            let mut r = vec![0i64; n];
            r[i] = 1;
            roots.push(r);
        }
        let mut head = 0;
        while head < roots.len() {
            let r = roots[head].clone();
            head += 1;
            for i in 0..n {
                let pairing: i64 = (0..n).map(|k| cartan[i][k] * r[k]).sum();
                let mut s = r.clone();
                s[i] -= pairing;
                if !roots.contains(&s) {
                    roots.push(s);
                }
            }
        }
        let rs = RootSystem {
            simple_type: t,
            rank: n,
            cartan,
            roots,
            lengths,
        };
        debug_assert_eq!(rs.roots.len(), t.root_count());
        Ok(rs)
    }

    /// alpha(H'_j) for alpha in simple-root coordinates.
    pub fn pairing_with_coroot(&self, alpha: &[i64], j: usize) -> i64 {
        (0..self.rank).map(|k| self.cartan[j][k] * alpha[k]).sum()
    }

    /// Inner product (alpha, beta) normalized so long roots have length^2 = 2.
    pub fn inner(&self, alpha: &[i64], beta: &[i64]) -> BigRational {
        // (a_i, a_j) = d_i * A[i][j].
        let mut acc = BigRational::zero();
        for i in 0..self.rank {
            if alpha[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                if beta[j] != 0 {
                    let v = &self.lengths[i]
                        * BigRational::from_integer(BigInt::from(
                            self.cartan[i][j] * alpha[i] * beta[j],
                        ));
                    acc += v;
                }
            }
        }
        acc
    }

    pub fn is_positive(alpha: &[i64]) -> bool {
        alpha.iter().find(|&&c| c != 0).map(|&c| c > 0).unwrap_or(false)
    }

    /// The highest root (maximal coefficient sum).
    pub fn highest_root(&self) -> Vec<i64> {
        self.roots
            .iter()
            .max_by_key(|r| r.iter().sum::<i64>())
            .cloned()
            .expect("nonempty")
    }

    pub fn dim(&self) -> usize {
        self.rank + self.roots.len()
    }
}

/// A rational coweight sum q_j H'_j representing exp(2 pi i sum q_j H'_j).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusElement {
    pub coeffs: Vec<BigRational>,
}

impl TorusElement {
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        TorusElement { coeffs }
    }

    pub fn from_i64_fractions(fracs: &[(i64, i64)]) -> Self {
        TorusElement {
            coeffs: fracs
                .iter()
                .map(|&(p, q)| BigRational::new(BigInt::from(p), BigInt::from(q)))
                .collect(),
        }
    }

    /// The exponent <alpha, sum q_j H'_j> as a rational.
    pub fn eval(&self, rs: &RootSystem, alpha: &[i64]) -> BigRational {
        let mut acc = BigRational::zero();
        for (j, q) in self.coeffs.iter().enumerate() {
            if !q.is_zero() {
                acc += q * BigRational::from_integer(BigInt::from(
                    rs.pairing_with_coroot(alpha, j),
                ));
            }
        }
        acc
    }
}

/// One component of a fixed subsystem: identified type plus the long/short
/// decoration relative to the ambient system (None for simply-laced
/// ambients or mixed-length components).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentType {
    pub simple_type: SimpleType,
    pub decoration: Option<LengthClass>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LengthClass {
    Long,
    Short,
}

impl fmt::Display for ComponentType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.simple_type)?;
        match self.decoration {
            Some(LengthClass::Long) => write!(f, "L"),
            Some(LengthClass::Short) => write!(f, "S"),
            None => Ok(()),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SubsystemReport {
    pub fixed_roots: Vec<Vec<i64>>,
    pub components: Vec<ComponentType>,
    /// dim g^theta = ambient rank + number of fixed roots.
    pub dim: usize,
    /// Center dimension of the fixed subalgebra.
    pub center_dim: usize,
}

impl SubsystemReport {
    /// "A2L+A2S", "3A2", "E6+A2", "" for a torus.
    pub fn type_string(&self) -> String {
        let mut sorted: Vec<&ComponentType> = self.components.iter().collect();
        sorted.sort_by(|a, b| {
            b.simple_type
                .rank
                .cmp(&a.simple_type.rank)
                .then(a.simple_type.family.cmp(&b.simple_type.family))
                .then(a.decoration.cmp(&b.decoration))
        });
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < sorted.len() {
            let mut j = i;
            while j < sorted.len() && sorted[j] == sorted[i] {
                j += 1;
            }
            let mult = j - i;
            if mult == 1 {
                parts.push(format!("{}", sorted[i]));
            } else {
                parts.push(format!("{}{}", mult, sorted[i]));
            }
            i = j;
        }
        parts.join("+")
    }
}

/// Roots fixed by Ad of the torus element (integer evaluation), a simple
/// base extracted from the positive ones, and the identified Dynkin type.
pub fn fixed_subsystem(rs: &RootSystem, t: &TorusElement) -> Result<SubsystemReport> {
    if t.coeffs.len() != rs.rank {
        return Err(Error::SizeMismatch(t.coeffs.len(), rs.rank));
    }
    let fixed: Vec<Vec<i64>> = rs
        .roots
        .iter()
        .filter(|r| t.eval(rs, r).is_integer())
        .cloned()
        .collect();
    let positives: Vec<Vec<i64>> = fixed
        .iter()
        .filter(|r| RootSystem::is_positive(r))
        .cloned()
        .collect();
    // Base: positive fixed roots not expressible as a sum of two of them.
    let mut base: Vec<Vec<i64>> = Vec::new();
    for r in &positives {
        let decomposable = positives.iter().any(|p| {
            let diff: Vec<i64> = r.iter().zip(p.iter()).map(|(a, b)| a - b).collect();
            diff != vec![0; rs.rank] && positives.contains(&diff)
        });
        if !decomposable {
            base.push(r.clone());
        }
    }
    let components = split_components(rs, &base)?;
    // Cross-check: the component root counts must add up to the fixed count.
    let total: usize = components
        .iter()
        .map(|(t, _)| t.root_count())
        .sum();
    if total != fixed.len() {
        return Err(Error::InvariantMismatch(format!(
            "component root count {total} != fixed count {}",
            fixed.len()
        )));
    }
    let comp_types: Vec<ComponentType> = components
        .into_iter()
        .map(|(st, dec)| ComponentType {
            simple_type: st,
            decoration: dec,
        })
        .collect();
    let base_rank: usize = comp_types.iter().map(|c| c.simple_type.rank).sum();
    Ok(SubsystemReport {
        dim: rs.rank + fixed.len(),
        center_dim: rs.rank - base_rank,
        fixed_roots: fixed,
        components: comp_types,
    })
}

/// Split a simple base into connected components and identify each type.
fn split_components(
    rs: &RootSystem,
    base: &[Vec<i64>],
) -> Result<Vec<(SimpleType, Option<LengthClass>)>> {
    let n = base.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    let ambient_mixed = rs
        .lengths
        .iter()
        .any(|l| l != &rs.lengths[0]);
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut head = 0;
        while head < comp.len() {
            let i = comp[head];
            head += 1;
            for j in 0..n {
                if !seen[j] && !rs.inner(&base[i], &base[j]).is_zero() {
                    seen[j] = true;
                    comp.push(j);
                }
            }
        }
        let vecs: Vec<&Vec<i64>> = comp.iter().map(|&i| &base[i]).collect();
        let st = identify_component(rs, &vecs)?;
        // Decoration: only when the ambient has two lengths and the
        // component is single-length.
        let dec = if ambient_mixed {
            let norms: Vec<BigRational> = vecs.iter().map(|v| rs.inner(v, v)).collect();
            if norms.iter().all(|x| x == &norms[0]) {
                if norms[0] == BigRational::from_integer(2.into()) {
                    Some(LengthClass::Long)
                } else {
                    Some(LengthClass::Short)
                }
            } else {
                None
            }
        } else {
            None
        };
        out.push((st, dec));
    }
    Ok(out)
}

/// Identify the Dynkin type of a connected simple base from its Cartan data.
fn identify_component(rs: &RootSystem, vecs: &[&Vec<i64>]) -> Result<SimpleType> {
    let r = vecs.len();
    // Sub-Cartan entries c[i][j] = 2 (v_i, v_j) / (v_i, v_i).
    let mut c = vec![vec![0i64; r]; r];
    for i in 0..r {
        for j in 0..r {
            let num = rs.inner(vecs[i], vecs[j]) * BigRational::from_integer(2.into());
            let den = rs.inner(vecs[i], vecs[i]);
            let q = num / den;
            if !q.is_integer() {
                return Err(Error::InvariantMismatch(
                    "sub-Cartan entry not an integer".into(),
                ));
            }
            c[i][j] = q.to_integer().try_into().map_err(|_| {
                Error::InvariantMismatch("sub-Cartan entry overflow".into())
            })?;
        }
    }
    identify_cartan(&c)
}

/// Type of a connected Cartan matrix.
pub fn identify_cartan(c: &[Vec<i64>]) -> Result<SimpleType> {
    let r = c.len();
    if r == 1 {
        return Ok(SimpleType::new(SimpleFamily::A, 1));
    }
    let mult = |i: usize, j: usize| (c[i][j] * c[j][i]) as usize;
    let degree = |i: usize| (0..r).filter(|&j| j != i && mult(i, j) > 0).count();
    let max_mult = (0..r)
        .flat_map(|i| (0..r).map(move |j| (i, j)))
        .filter(|&(i, j)| i != j)
        .map(|(i, j)| mult(i, j))
        .max()
        .unwrap_or(0);
    match max_mult {
        3 => {
            if r == 2 {
                Ok(SimpleType::new(SimpleFamily::G, 2))
            } else {
                Err(Error::InvariantMismatch("triple edge in rank > 2".into()))
            }
        }
        2 => {
            // Path with one double edge: B, C, or F4. Distinguish them by
            // propagating relative lengths d_j/d_i = c[j][i]/c[i][j] over
            // the edges and counting short vertices.
            if (0..r).any(|i| degree(i) > 2) {
                return Err(Error::InvariantMismatch("double edge in branched diagram".into()));
            }
            if r == 2 {
                return Ok(SimpleType::new(SimpleFamily::B, 2));
            }
            let mut d: Vec<Option<BigRational>> = vec![None; r];
            d[0] = Some(BigRational::one());
            let mut changed = true;
            while changed {
                changed = false;
                for i in 0..r {
                    for j in 0..r {
                        if i != j && c[i][j] != 0 {
                            if let (Some(di), None) = (d[i].clone(), &d[j]) {
                                d[j] = Some(
                                    di * BigRational::new(
                                        BigInt::from(c[i][j]),
                                        BigInt::from(c[j][i]),
                                    ),
                                );
                                changed = true;
                            }
                        }
                    }
                }
            }
            let lengths: Vec<BigRational> =
                d.into_iter().map(|x| x.expect("connected")).collect();
            let max = lengths
                .iter()
                .cloned()
                .fold(BigRational::zero(), |a, b| a.max(b));
            let short_count = lengths.iter().filter(|&l| *l < max).count();
            match (r, short_count) {
                (4, 2) => Ok(SimpleType::new(SimpleFamily::F, 4)),
                (_, 1) => Ok(SimpleType::new(SimpleFamily::B, r)),
                (_, s) if s == r - 1 => Ok(SimpleType::new(SimpleFamily::C, r)),
                _ => Err(Error::InvariantMismatch(format!(
                    "unrecognized multiply-laced diagram of rank {r}"
                ))),
            }
        }
        1 | 0 => {
            // Simply laced: A (path), D (fork with two arms of length 1),
            // E6/7/8.
            let deg3: Vec<usize> = (0..r).filter(|&i| degree(i) == 3).collect();
            if (0..r).any(|i| degree(i) > 3) || deg3.len() > 1 {
                return Err(Error::InvariantMismatch("not a Dynkin diagram".into()));
            }
            if deg3.is_empty() {
                return Ok(SimpleType::new(SimpleFamily::A, r));
            }
            // Arm lengths from the branch node.
            let b = deg3[0];
            let mut arms = Vec::new();
            for s in (0..r).filter(|&j| j != b && mult(b, j) > 0) {
                let mut len = 1;
                let mut prev = b;
                let mut cur = s;
                loop {
                    let next: Vec<usize> = (0..r)
                        .filter(|&j| j != prev && j != cur && mult(cur, j) > 0)
                        .collect();
                    if next.is_empty() {
                        break;
                    }
                    len += 1;
                    prev = cur;
                    cur = next[0];
                }
                arms.push(len);
            }
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, _] => Ok(SimpleType::new(SimpleFamily::D, r)),
                [1, 2, 2] => Ok(SimpleType::new(SimpleFamily::E, 6)),
                [1, 2, 3] => Ok(SimpleType::new(SimpleFamily::E, 7)),
                [1, 2, 4] => Ok(SimpleType::new(SimpleFamily::E, 8)),
                _ => Err(Error::InvariantMismatch(format!(
                    "unrecognized branched diagram with arms {arms:?}"
                ))),
            }
        }
        _ => Err(Error::InvariantMismatch("edge multiplicity > 3".into())),
    }
}

/// Order of Ad(exp 2 pi i sum q_j H'_j): least d with d * <alpha, .> integral
/// for every root. This is the adjoint-group order; the simply connected
/// order can be larger by the center (see
/// [`torus_element_order_simply_connected`]).
pub fn torus_element_order(rs: &RootSystem, t: &TorusElement) -> u64 {
    let mut l = BigInt::one();
    for r in &rs.roots {
        let v = t.eval(rs, r);
        l = l.lcm(v.denom());
    }
    l.try_into().expect("order fits u64")
}

/// Order of exp(2 pi i sum q_j H'_j) in the simply connected group: least d
/// with d q in the coroot lattice, i.e. the lcm of the coefficient
/// denominators in the H'-basis.
pub fn torus_element_order_simply_connected(rs: &RootSystem, t: &TorusElement) -> u64 {
    let _ = rs;
    let mut l = BigInt::one();
    for q in &t.coeffs {
        l = l.lcm(q.denom());
    }
    l.try_into().expect("order fits u64")
}

#[derive(Clone, Debug)]
pub struct LeviDatum {
    /// 1-indexed simple root indices (Bourbaki).
    pub subset: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct LeviReport {
    pub center_dim: usize,
    pub components: Vec<ComponentType>,
}

impl LeviReport {
    pub fn type_string(&self) -> String {
        SubsystemReport {
            fixed_roots: vec![],
            components: self.components.clone(),
            dim: 0,
            center_dim: self.center_dim,
        }
        .type_string()
    }
}

/// Levi type and center dimension for a subset Y of the simple roots.
pub fn levi_center(rs: &RootSystem, y: &LeviDatum) -> Result<LeviReport> {
    for &j in &y.subset {
        if j < 1 || j > rs.rank {
            return Err(Error::Parse(format!("simple root index {j} out of range")));
        }
    }
    let base: Vec<Vec<i64>> = y
        .subset
        .iter()
        .map(|&j| {
            let mut v = vec![0i64; rs.rank];
            v[j - 1] = 1;
            v
        })
        .collect();
    let comps = split_components(rs, &base)?;
    Ok(LeviReport {
        center_dim: rs.rank - y.subset.len(),
        components: comps
            .into_iter()
            .map(|(st, dec)| ComponentType {
                simple_type: st,
                decoration: dec,
            })
            .collect(),
    })
}

/// Does the coweight v lie in span_Q{H'_j : j in Y} + the full integral
/// coroot lattice? Decided by exact lattice linear algebra in the H'-basis.
pub fn central_in_levi(rs: &RootSystem, v: &TorusElement, y: &LeviDatum) -> Result<bool> {
    if v.coeffs.len() != rs.rank {
        return Err(Error::SizeMismatch(v.coeffs.len(), rs.rank));
    }
    let span: Vec<Vec<BigRational>> = y
        .subset
        .iter()
        .map(|&j| {
            let mut row = vec![BigRational::zero(); rs.rank];
            row[j - 1] = BigRational::one();
            row
        })
        .collect();
    Ok(linalg::in_span_plus_integer_lattice(&span, &v.coeffs))
}

/// Multiplicity of eigenvalue 1 of Ad(t) on the complexified algebra,
/// computed by the character projector (1/d) sum_k chi(t^k) with exact
/// cyclotomic arithmetic. Cross-check route for fixed_subsystem's count.
pub fn fixed_dim_via_characters(rs: &RootSystem, t: &TorusElement) -> Result<usize> {
    use crate::cyclotomic::Cyclotomic;
    let d = torus_element_order(rs, t);
    let mut total = Cyclotomic::zero();
    for k in 0..d {
        // chi(t^k) = rank + sum_alpha e^{2 pi i k <alpha, t>}.
        let mut chi = Cyclotomic::from_integer(rs.rank as i64);
        for r in &rs.roots {
            let e = t.eval(rs, r) * BigRational::from_integer(BigInt::from(k));
            let denom: u64 = e.denom().try_into().expect("denominator fits");
            // Reduce the exponent mod 1 to a/denom.
            let a = ((e.numer() % e.denom()) + e.denom()) % e.denom();
            let a: i64 = a.try_into().expect("numerator fits");
            chi = chi.add(&Cyclotomic::root_of_unity(denom, a));
        }
        total = total.add(&chi);
    }
    let avg = total.scale(&BigRational::new(BigInt::one(), BigInt::from(d as i64)));
    let q = avg
        .reduced()
        .as_rational()
        .ok_or_else(|| Error::InvariantMismatch("character sum not rational".into()))?;
    if !q.is_integer() || q.is_negative() {
        return Err(Error::InvariantMismatch(
            "character sum not a non-negative integer".into(),
        ));
    }
    Ok(q.to_integer().try_into().unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(d))
    }

    #[test]
    fn root_counts_match_tables() {
        let mut cases: Vec<SimpleType> = Vec::new();
        for r in 1..=8 {
            cases.push(SimpleType::new(SimpleFamily::A, r));
        }
        for r in 2..=8 {
            cases.push(SimpleType::new(SimpleFamily::B, r));
            cases.push(SimpleType::new(SimpleFamily::C, r));
        }
        for r in 3..=8 {
            cases.push(SimpleType::new(SimpleFamily::D, r));
        }
        for r in 6..=8 {
            cases.push(SimpleType::new(SimpleFamily::E, r));
        }
        cases.push(SimpleType::new(SimpleFamily::F, 4));
        cases.push(SimpleType::new(SimpleFamily::G, 2));
        for t in cases {
            let rs = RootSystem::new(t).unwrap();
            assert_eq!(rs.roots.len(), t.root_count(), "{t}");
            assert_eq!(rs.dim(), t.root_count() + t.rank);
        }
    }

    #[test]
    fn e6_highest_root_matches_fixed_vector() {
        let rs = RootSystem::new(SimpleType::new(SimpleFamily::E, 6)).unwrap();
        // beta = alpha_1 + alpha_6 + 2(alpha_2 + alpha_3 + alpha_5) + 3 alpha_4.
        assert_eq!(rs.highest_root(), vec![1, 2, 2, 3, 2, 1]);
    }

    #[test]
    fn f4_highest_root() {
        let rs = RootSystem::new(SimpleType::new(SimpleFamily::F, 4)).unwrap();
        assert_eq!(rs.highest_root(), vec![2, 3, 4, 2]);
    }

    #[test]
    fn g2_highest_root() {
        let rs = RootSystem::new(SimpleType::new(SimpleFamily::G, 2)).unwrap();
        assert_eq!(rs.highest_root(), vec![3, 2]);
    }

    #[test]
    fn f4_theta_fixed_type() {
        let rs = RootSystem::new(SimpleType::new(SimpleFamily::F, 4)).unwrap();
        let t = TorusElement::new(vec![q(0, 1), q(0, 1), q(2, 3), q(1, 3)]);
        let rep = fixed_subsystem(&rs, &t).unwrap();
        assert_eq!(rep.type_string(), "A2L+A2S");
        assert_eq!(rep.fixed_roots.len(), 12);
        assert_eq!(rep.dim, 16);
        assert_eq!(torus_element_order(&rs, &t), 3);
    }

    #[test]
    fn g2_order_three_element_fixes_long_a2() {
        // t = exp((2 pi i/3) H'_1): fixed roots a*a1 + b*a2 need 3 | 2a - 3b,
        // i.e. 3 | a, leaving the six long roots +-a2, +-(3a1+a2), +-(3a1+2a2).
        let rs = RootSystem::new(SimpleType::new(SimpleFamily::G, 2)).unwrap();
        let t = TorusElement::new(vec![q(1, 3), q(0, 1)]);
        let rep = fixed_subsystem(&rs, &t).unwrap();
        assert_eq!(rep.type_string(), "A2L");
        assert_eq!(rep.fixed_roots.len(), 6);
        assert_eq!(rep.dim, 8);
        assert_eq!(torus_element_order(&rs, &t), 3);
    }

    #[test]
    fn zero_torus_element_fixes_everything() {
        let rs = RootSystem::new(SimpleType::new(SimpleFamily::B, 3)).unwrap();
        let t = TorusElement::new(vec![q(0, 1); 3]);
        let rep = fixed_subsystem(&rs, &t).unwrap();
        assert_eq!(rep.fixed_roots.len(), 18);
        assert_eq!(rep.type_string(), "B3");
        assert_eq!(torus_element_order(&rs, &t), 1);
    }

    #[test]
    fn fixed_subsystem_is_closed() {
        let rs = RootSystem::new(SimpleType::new(SimpleFamily::E, 6)).unwrap();
        let t = TorusElement::new(vec![q(2, 3), q(0, 1), q(1, 3), q(0, 1), q(0, 1), q(0, 1)]);
        let rep = fixed_subsystem(&rs, &t).unwrap();
        for a in &rep.fixed_roots {
            for b in &rep.fixed_roots {
                let sum: Vec<i64> = a.iter().zip(b.iter()).map(|(x, y)| x + y).collect();
                if rs.roots.contains(&sum) {
                    assert!(rep.fixed_roots.contains(&sum));
                }
            }
        }
    }

    #[test]
    fn levi_types_in_e6_and_e7() {
        let e6 = RootSystem::new(SimpleType::new(SimpleFamily::E, 6)).unwrap();
        let rep = levi_center(&e6, &LeviDatum { subset: vec![2, 3, 4, 5] }).unwrap();
        assert_eq!(rep.type_string(), "D4");
        assert_eq!(rep.center_dim, 2);

        let e7 = RootSystem::new(SimpleType::new(SimpleFamily::E, 7)).unwrap();
        let rep = levi_center(&e7, &LeviDatum { subset: vec![1, 2, 3, 4, 5, 6] }).unwrap();
        assert_eq!(rep.type_string(), "E6");
        assert_eq!(rep.center_dim, 1);

        let full = levi_center(&e7, &LeviDatum { subset: (1..=7).collect() }).unwrap();
        assert_eq!(full.type_string(), "E7");
        assert_eq!(full.center_dim, 0);
    }

    #[test]
    fn central_in_levi_criterion() {
        let e7 = RootSystem::new(SimpleType::new(SimpleFamily::E, 7)).unwrap();
        let v = TorusElement::new(vec![
            q(0, 1),
            q(1, 2),
            q(0, 1),
            q(0, 1),
            q(1, 2),
            q(0, 1),
            q(1, 2),
        ]);
        assert!(central_in_levi(&e7, &v, &LeviDatum { subset: vec![2, 5, 7] }).unwrap());
        assert!(central_in_levi(&e7, &v, &LeviDatum { subset: vec![1, 2, 5, 7] }).unwrap());
        assert!(!central_in_levi(&e7, &v, &LeviDatum { subset: vec![1, 3, 4] }).unwrap());
        let zero = TorusElement::new(vec![q(0, 1); 7]);
        assert!(central_in_levi(&e7, &zero, &LeviDatum { subset: vec![] }).unwrap());
    }

    #[test]
    fn identification_is_involutive() {
        // Rebuild each reported classical type and re-identify.
        for t in [
            SimpleType::new(SimpleFamily::A, 4),
            SimpleType::new(SimpleFamily::B, 3),
            SimpleType::new(SimpleFamily::C, 4),
            SimpleType::new(SimpleFamily::D, 5),
            SimpleType::new(SimpleFamily::E, 6),
            SimpleType::new(SimpleFamily::F, 4),
            SimpleType::new(SimpleFamily::G, 2),
        ] {
            let c = cartan_matrix(t).unwrap();
            assert_eq!(identify_cartan(&c).unwrap(), t, "{t}");
        }
    }

    #[test]
    fn character_route_agrees_with_root_count() {
        let rs = RootSystem::new(SimpleType::new(SimpleFamily::F, 4)).unwrap();
        let t = TorusElement::new(vec![q(0, 1), q(0, 1), q(2, 3), q(1, 3)]);
        let via_roots = fixed_subsystem(&rs, &t).unwrap().dim;
        let via_chars = fixed_dim_via_characters(&rs, &t).unwrap();
        assert_eq!(via_roots, via_chars);
    }
}
