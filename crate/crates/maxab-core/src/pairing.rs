//! The commutator pairing m on abelian subgroups of projective classical
//! groups, its kernel, the Heisenberg-style canonical decomposition for
//! projective unitary groups, and the (k, s0, s1) block invariants for the
//! orthogonal, symplectic, and twisted-unitary quotients.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::f2struct::{MetricTuple, QuadraticMu, SymplecticSpaceF2};
use crate::group::{
    in_torus_span, torus_point, CenterSpec, Family, FiniteSubgroup, GroupContext, ProjElement,
};
use crate::linalg;
use crate::matrix::{CycMatrix, MatPart};

/// Root-of-unity order probe bound: every pairing value and torus angle in
/// play divides twice the ambient size times the center order.
fn order_bound(f: &FiniteSubgroup) -> u64 {
    let n: usize = f.ctx.factors.iter().map(|fc| fc.n).sum();
    let z = f.ctx.center_tuples().len() as u64;
    ((2 * n) as u64) * z.max(1) * 4
}

/// Pairing data over the enumerated finite part of a subgroup.
#[derive(Clone, Debug)]
pub struct PairingTable {
    /// Closure indices the table is defined on (the full closure for linear
    /// contexts, the non-tau part for twisted ones).
    pub h_indices: Vec<usize>,
    /// Per-factor commutator scalars of generator pairs, used to extend the
    /// table bimultiplicatively through exponent words.
    gen_gram: Vec<Vec<Vec<Cyclotomic>>>,
    /// Direct table (twisted contexts), indexed by positions in h_indices.
    direct: Option<Vec<Vec<Cyclotomic>>>,
}

impl PairingTable {
    /// m(x_i, x_j) for positions i, j in `h_indices`. For product contexts
    /// this is the first factor's scalar.
    pub fn value(&self, f: &FiniteSubgroup, i: usize, j: usize) -> Cyclotomic {
        self.value_tuple(f, i, j).swap_remove(0)
    }

    /// Per-factor scalars of the commutator of elements i and j.
    pub fn value_tuple(&self, f: &FiniteSubgroup, i: usize, j: usize) -> Vec<Cyclotomic> {
        if let Some(d) = &self.direct {
            return vec![d[i][j].clone()];
        }
        let c = f.closure.as_ref().expect("closure");
        let ei = &c.exponents[self.h_indices[i]];
        let ej = &c.exponents[self.h_indices[j]];
        let nfac = f.ctx.factors.len();
        let mut out = vec![Cyclotomic::one(); nfac];
        for (p, &ap) in ei.iter().enumerate() {
            if ap == 0 {
                continue;
            }
            for (q, &bq) in ej.iter().enumerate() {
                if bq == 0 {
                    continue;
                }
                let e = (ap as i64) * (bq as i64);
                for (fi, out_fi) in out.iter_mut().enumerate() {
                    let v = self.gen_gram[p][q][fi].pow(e).expect("root of unity");
                    *out_fi = out_fi.mul(&v);
                }
            }
        }
        out
    }

    /// Least order of m(x_i, x_j) as a root of unity.
    pub fn value_order(&self, f: &FiniteSubgroup, i: usize, j: usize, bound: u64) -> u64 {
        self.value(f, i, j).order(bound).expect("pairing value is a root of unity")
    }
}

fn commutator_scalar_tuple(
    f: &FiniteSubgroup,
    a: &ProjElement,
    b: &ProjElement,
) -> Result<Vec<Cyclotomic>> {
    let comm = a.commutator(b)?;
    if comm.tau {
        return Err(Error::NonScalarCommutator);
    }
    let mut out = Vec::with_capacity(comm.parts.len());
    for p in &comm.parts {
        match p {
            MatPart::C(m) => match m.as_scalar() {
                Some(z) => out.push(z),
                None => return Err(Error::NonScalarCommutator),
            },
            MatPart::H(q) => match q.as_scalar() {
                Some((alpha, beta)) if beta.is_zero() && alpha.is_real() => out.push(alpha),
                _ => return Err(Error::NonScalarCommutator),
            },
        }
    }
    // The scalar tuple must actually lie in the declared center for the
    // subgroup to be abelian in the quotient.
    match &f.ctx.center {
        CenterSpec::Trivial => {
            if out.iter().any(|z| !z.is_one()) {
                return Err(Error::NonScalarCommutator);
            }
        }
        CenterSpec::ProjectiveU1 => {}
        CenterSpec::Finite(tuples) => {
            let hit = tuples
                .iter()
                .any(|t| t.iter().zip(out.iter()).all(|(a, b)| a.eq_value(b)));
            if !hit {
                return Err(Error::NonScalarCommutator);
            }
        }
    }
    Ok(out)
}

/// First-factor commutator scalar of two generators (for reports).
pub fn commutator_value(f: &FiniteSubgroup, i: usize, j: usize) -> Result<Cyclotomic> {
    let t = commutator_scalar_tuple(f, &f.generators[i], &f.generators[j])?;
    Ok(t.into_iter().next().expect("at least one factor"))
}

/// Compute the pairing table of an abelian subgroup. Errors with
/// NonScalarCommutator when the subgroup is not abelian in the quotient.
pub fn pairing_m(f: &mut FiniteSubgroup, cap: usize) -> Result<PairingTable> {
    f.closure_enumerate(cap)?;
    let c = f.closure.as_ref().unwrap();
    if f.ctx.twisted {
        let h_indices: Vec<usize> = (0..c.elements.len())
            .filter(|&i| !c.elements[i].tau)
            .collect();
        // Abelianness of the full subgroup, tau elements included.
        for i in 0..f.generators.len() {
            for j in i + 1..f.generators.len() {
                commutator_scalar_tuple(f, &f.generators[i], &f.generators[j])?;
            }
        }
        let mut direct = vec![vec![Cyclotomic::one(); h_indices.len()]; h_indices.len()];
        for (a, &ia) in h_indices.iter().enumerate() {
            for (b, &ib) in h_indices.iter().enumerate() {
                let t = commutator_scalar_tuple(f, &c.elements[ia], &c.elements[ib])?;
                direct[a][b] = t[0].clone();
            }
        }
        Ok(PairingTable {
            h_indices,
            gen_gram: vec![],
            direct: Some(direct),
        })
    } else {
        let gens = f.generators.clone();
        let mut gram = vec![vec![vec![]; gens.len()]; gens.len()];
        for i in 0..gens.len() {
            for j in 0..gens.len() {
                gram[i][j] = commutator_scalar_tuple(f, &gens[i], &gens[j])?;
            }
        }
        Ok(PairingTable {
            h_indices: (0..c.elements.len()).collect(),
            gen_gram: gram,
            direct: None,
        })
    }
}

/// Exhaustive verification of antisymmetry and bimultiplicativity against
/// matrix commutators (used by the property suites; cost grows with |F|^2).
pub fn verify_pairing(f: &FiniteSubgroup, t: &PairingTable, exhaustive_limit: usize) -> Result<()> {
    let c = f.closure.as_ref().ok_or_else(|| {
        Error::InvariantMismatch("closure required".into())
    })?;
    let n = t.h_indices.len();
    let bound = order_bound(f);
    let idxs: Vec<(usize, usize)> = if n * n <= exhaustive_limit {
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect()
    } else {
        // All generator pairs plus a deterministic stride sample.
        let stride = (n * n / exhaustive_limit).max(1);
        (0..n * n)
            .step_by(stride)
            .map(|k| (k / n, k % n))
            .collect()
    };
    for &(i, j) in &idxs {
        let via_table = t.value(f, i, j);
        let direct = commutator_scalar_tuple(
            f,
            &c.elements[t.h_indices[i]],
            &c.elements[t.h_indices[j]],
        )?;
        if !via_table.eq_value(&direct[0]) {
            return Err(Error::InvariantMismatch(format!(
                "pairing table mismatch at ({i},{j})"
            )));
        }
        // Antisymmetry m(x,x) = 1 and m(x,y) m(y,x) = 1.
        if i == j && !via_table.is_one() {
            return Err(Error::InvariantMismatch("m(x,x) != 1".into()));
        }
        if !t.value(f, j, i).mul(&via_table).is_one() {
            return Err(Error::InvariantMismatch("m not antisymmetric".into()));
        }
        let _ = via_table.order(bound).ok_or_else(|| {
            Error::InvariantMismatch("pairing value is not a root of unity".into())
        })?;
    }
    // Bimultiplicativity on a deterministic sample of triples.
    let step = (n / 8).max(1);
    for i in (0..n).step_by(step) {
        for j in (0..n).step_by(step) {
            for k in (0..n).step_by(step) {
                // x_i x_j as an element: find its index by multiplying reps.
                let prod = c.elements[t.h_indices[i]].mul(&c.elements[t.h_indices[j]])?;
                let direct = commutator_scalar_tuple(f, &prod, &c.elements[t.h_indices[k]])?;
                let split = t.value(f, i, k).mul(&t.value(f, j, k));
                if !direct[0].eq_value(&split) {
                    return Err(Error::InvariantMismatch("m not bimultiplicative".into()));
                }
            }
        }
    }
    Ok(())
}

/// Positions (within the table's h_indices) of elements pairing trivially
/// with the whole finite part.
pub fn pairing_kernel_indices(f: &FiniteSubgroup, t: &PairingTable) -> Vec<usize> {
    let n = t.h_indices.len();
    (0..n)
        .filter(|&i| (0..n).all(|j| t.value(f, i, j).is_one()))
        .collect()
}

/// The kernel as a subgroup (generators = kernel elements; torus carried over).
pub fn pairing_kernel(f: &FiniteSubgroup, t: &PairingTable) -> Result<FiniteSubgroup> {
    let c = f.closure.as_ref().unwrap();
    let idx = pairing_kernel_indices(f, t);
    let gens: Vec<ProjElement> = idx
        .iter()
        .map(|&i| c.elements[t.h_indices[i]].clone())
        .filter(|e| !e.is_identity_strict())
        .collect();
    let mut k = FiniteSubgroup::new(f.ctx.clone(), gens).with_torus(f.torus.clone());
    k.closure_enumerate(c.elements.len() * 2)?;
    Ok(k)
}

#[derive(Clone, Debug)]
pub struct HeisenbergInvariants {
    /// (n_1, ..., n_s) with n_{i+1} | n_i.
    pub invariants: Vec<u64>,
    pub torus_dim: usize,
    /// Standard generator pairs (x_i, y_i) with o(x_i) = o(y_i) = n_i and
    /// m(x_i, y_i) a primitive n_i-th root of unity.
    pub pairs: Vec<(ProjElement, ProjElement)>,
}

/// The canonical decomposition of an abelian subgroup of PU(n): pick a pair
/// of maximal pairing order, correct orders along the identity component,
/// split off the pair, and recurse on its pairing-orthogonal complement.
pub fn heisenberg_decompose(f: &mut FiniteSubgroup, cap: usize) -> Result<HeisenbergInvariants> {
    let t = pairing_m(f, cap)?;
    if f.ctx.twisted {
        return Err(Error::Unsupported(
            "heisenberg decomposition applies to linear projective groups".into(),
        ));
    }
    let c = f.closure.as_ref().unwrap().clone();
    let bound = order_bound(f);
    let ambient_n: usize = f.ctx.factors.iter().map(|fc| fc.n).sum();

    let mut active: Vec<usize> = (0..c.elements.len()).collect();
    let mut invariants: Vec<u64> = Vec::new();
    let mut pairs: Vec<(ProjElement, ProjElement)> = Vec::new();

    loop {
        // Maximal pairing order over the active set.
        let mut best: Option<(u64, usize, usize)> = None;
        for &i in &active {
            for &j in &active {
                let d = t.value_order(f, i, j, bound);
                let better = match best {
                    None => d > 1,
                    Some((bd, bi, bj)) => {
                        d > bd
                            || (d == bd
                                && (c.exponents[i].clone(), c.exponents[j].clone())
                                    < (c.exponents[bi].clone(), c.exponents[bj].clone()))
                    }
                };
                if better && d > 1 {
                    best = Some((d, i, j));
                }
            }
        }
        let Some((n1, i, j)) = best else { break };
        let x1 = correct_order_along_torus(f, &c.elements[i], c.orders[i], n1, bound)?;
        let y1 = correct_order_along_torus(f, &c.elements[j], c.orders[j], n1, bound)?;
        invariants.push(n1);
        pairs.push((x1, y1));
        active.retain(|&k| {
            t.value(f, k, i).is_one() && t.value(f, k, j).is_one()
        });
    }

    // Divisibility chain and Claim-style property: every remaining pairing
    // value has order dividing n_1.
    for w in invariants.windows(2) {
        if w[1] > w[0] || w[0] % w[1] != 0 {
            return Err(Error::DecompositionFailed(format!(
                "invariants not a divisibility chain: {invariants:?}"
            )));
        }
    }
    let prod: u64 = invariants.iter().product::<u64>().max(1);
    if (ambient_n as u64) % prod != 0 {
        return Err(Error::DecompositionFailed(format!(
            "product of invariants {prod} does not divide n = {ambient_n}"
        )));
    }

    // Everything left pairs trivially with all of F; it must lie in the
    // identity component, otherwise ker m > F_0 and condition (*) fails.
    for &k in &active {
        let e = &c.elements[k];
        if e.is_identity_strict() {
            continue;
        }
        if !in_torus_span(&f.ctx, &f.torus, e, bound) {
            return Err(Error::DecompositionFailed(
                "ker m is strictly larger than the identity component".into(),
            ));
        }
    }

    let m_tilde = (ambient_n as u64) / prod;
    let torus_dim = f.torus_dim();
    if torus_dim as u64 != m_tilde - 1 {
        return Err(Error::DecompositionFailed(format!(
            "torus dimension {torus_dim} does not match n/(n_1...n_s) - 1 = {}",
            m_tilde - 1
        )));
    }

    Ok(HeisenbergInvariants {
        invariants,
        torus_dim,
        pairs,
    })
}

/// Claim-style order correction: when o(x) > n1, x^{n1} lies in the identity
/// component and a torus point t with (x t)^{n1} = 1 exists; find it by
/// exact linear algebra on the angle coordinates.
fn correct_order_along_torus(
    f: &FiniteSubgroup,
    x: &ProjElement,
    order: u64,
    n1: u64,
    bound: u64,
) -> Result<ProjElement> {
    if order == n1 {
        return Ok(x.clone());
    }
    if order % n1 != 0 {
        return Err(Error::DecompositionFailed(format!(
            "element order {order} not a multiple of pairing order {n1}"
        )));
    }
    let p = x.pow(n1)?;
    // Angles of x^{n1}, possibly after a center adjustment.
    let mut found: Option<Vec<BigRational>> = None;
    for tuple in f.ctx.center_tuples() {
        if let Some(a) = crate::group::torus_angles(&f.ctx, &p.scale_by_tuple(&tuple), bound) {
            found = Some(a);
            break;
        }
    }
    let theta = match (&found, &f.ctx.center) {
        (Some(a), _) => a.clone(),
        (None, CenterSpec::ProjectiveU1) => {
            // Scale so the first diagonal entry is 1, then read angles.
            let MatPart::C(m) = &p.parts[0] else {
                return Err(Error::DecompositionFailed("expected complex factor".into()));
            };
            let lam = m.entry(0, 0).clone();
            if lam.is_zero() {
                return Err(Error::DecompositionFailed(
                    "x^{n1} is not in the standard torus".into(),
                ));
            }
            let scaled = ProjElement::from_complex(m.scale(&lam.inv().unwrap()));
            crate::group::torus_angles(&f.ctx, &scaled, bound).ok_or_else(|| {
                Error::DecompositionFailed("x^{n1} is not in the standard torus".into())
            })?
        }
        (None, _) => {
            return Err(Error::DecompositionFailed(
                "x^{n1} is not in the standard torus".into(),
            ))
        }
    };
    // Solve theta = s + w with s in span(torus dirs + scalar), w integral;
    // then t = torus_point(-s / n1) corrects the order.
    let mut span = f.torus.clone();
    if let Some(dir) = f.ctx.u1_scalar_direction() {
        span.push(dir);
    }
    let (coeffs, _w) = decompose_span_plus_lattice(&span, &theta).ok_or_else(|| {
        Error::DecompositionFailed("x^{n1} does not lie in the declared torus".into())
    })?;
    let ncoords = f.ctx.torus_coords();
    let mut s = vec![BigRational::zero(); ncoords];
    for (ci, dir) in coeffs.iter().zip(span.iter()) {
        for (k, d) in dir.iter().enumerate() {
            s[k] += ci * d;
        }
    }
    let inv_n1 = BigRational::new(BigInt::from(-1), BigInt::from(n1 as i64));
    let u: Vec<BigRational> = s.iter().map(|v| v * &inv_n1).collect();
    let tpt = torus_point(&f.ctx, &u);
    let corrected = x.mul(&tpt)?;
    match corrected.proj_order(&f.ctx, 4 * n1) {
        Some(o) if o == n1 => Ok(corrected),
        o => Err(Error::DecompositionFailed(format!(
            "torus correction produced order {o:?}, wanted {n1}"
        ))),
    }
}

/// The involutive rational points of the declared identity component: half
/// the primitive integer vectors of an echelon basis of the direction span.
/// (The catalog normal forms have saturated primitive bases, so this is the
/// full 2-torsion there; a missed point would surface downstream as an
/// invariant mismatch, never as a silently wrong block structure.)
fn torus_half_points(f: &FiniteSubgroup) -> Vec<ProjElement> {
    if f.torus.is_empty() {
        return vec![];
    }
    let mut rows = f.torus.clone();
    let pivots = linalg::rref(&mut rows);
    rows.truncate(pivots.len());
    let mut out = Vec::new();
    for r in &rows {
        // Clear denominators to a primitive integer vector.
        let mut denom = BigInt::one();
        for x in r.iter() {
            denom = denom.lcm(x.denom());
        }
        let ints: Vec<BigInt> = r
            .iter()
            .map(|x| (x * BigRational::from_integer(denom.clone())).to_integer())
            .collect();
        let mut g = BigInt::zero();
        for v in &ints {
            g = g.gcd(v);
        }
        if g.is_zero() {
            continue;
        }
        let half: Vec<BigRational> = ints
            .iter()
            .map(|v| BigRational::new(v.clone(), &g * BigInt::from(2)))
            .collect();
        out.push(torus_point(&f.ctx, &half));
    }
    out
}

/// theta = sum_i c_i span_i + w with w integral; returns (c, w) when solvable.
fn decompose_span_plus_lattice(
    span: &[Vec<BigRational>],
    v: &[BigRational],
) -> Option<(Vec<BigRational>, Vec<BigInt>)> {
    if !linalg::in_span_plus_integer_lattice(span, v) {
        return None;
    }
    // Reduce v modulo the span; on the free coordinates the residue is the
    // candidate integer part w.
    let n = v.len();
    let mut rows = span.to_vec();
    let pivots = linalg::rref(&mut rows);
    rows.truncate(pivots.len());
    let mut rv = v.to_vec();
    for (r, &pc) in pivots.iter().enumerate() {
        if !rv[pc].is_zero() {
            let f = rv[pc].clone();
            for k in 0..n {
                let t = &rows[r][k] * &f;
                rv[k] -= t;
            }
        }
    }
    let free_cols: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut w = vec![BigInt::zero(); n];
    for &c in &free_cols {
        if rv[c].denom().is_one() {
            w[c] = rv[c].numer().clone();
        } else {
            // The reduced lattice image is not unimodular here; fall back
            // to a bounded search for the integer part.
            return solve_witness_by_clearing(span, v);
        }
    }
    // Span coefficients of v - w.
    let target: Vec<BigRational> = v
        .iter()
        .zip(w.iter())
        .map(|(a, b)| a - BigRational::from_integer(b.clone()))
        .collect();
    let system: Vec<Vec<BigRational>> = (0..n)
        .map(|k| span.iter().map(|row| row[k].clone()).collect())
        .collect();
    let coeffs = linalg::solve(&system, &target)?;
    Some((coeffs, w))
}

fn solve_witness_by_clearing(
    span: &[Vec<BigRational>],
    v: &[BigRational],
) -> Option<(Vec<BigRational>, Vec<BigInt>)> {
    // Exhaustive small search over integer offsets in a box: correctness
    // fallback for lattices whose reduced image is not unimodular. The box
    // bound comes from the denominators of v and span.
    let n = v.len();
    let mut denom = BigInt::one();
    for q in v.iter().chain(span.iter().flatten()) {
        denom = denom.lcm(q.denom());
    }
    let d: i64 = denom.try_into().ok()?;
    let d = d.unsigned_abs().min(8) as i64;
    let mut w = vec![BigInt::zero(); n];
    fn rec(
        k: usize,
        n: usize,
        d: i64,
        w: &mut Vec<BigInt>,
        span: &[Vec<BigRational>],
        v: &[BigRational],
    ) -> Option<Vec<BigRational>> {
        if k == n {
            let target: Vec<BigRational> = v
                .iter()
                .zip(w.iter())
                .map(|(a, b)| a - BigRational::from_integer(b.clone()))
                .collect();
            let system: Vec<Vec<BigRational>> = (0..n)
                .map(|r| span.iter().map(|s| s[r].clone()).collect())
                .collect();
            return linalg::solve(&system, &target);
        }
        for off in -d..=d {
            w[k] = BigInt::from(off);
            if let Some(c) = rec(k + 1, n, d, w, span, v) {
                return Some(c);
            }
        }
        w[k] = BigInt::zero();
        None
    }
    let c = rec(0, n, d, &mut w, span, v)?;
    Some((c, w))
}

/// Cor-style center test: SU(n)/<zeta_m I> admits a finite abelian subgroup
/// with zero fixed algebra iff n | m^k for some k, i.e. every prime of n
/// divides m.
pub fn condition_star_quotient_exists(n: u64, m: u64) -> Result<bool> {
    if m == 0 || n == 0 || n % m != 0 {
        return Err(Error::BadCenter);
    }
    Ok(crate::cyclotomic::prime_factors(n)
        .into_iter()
        .all(|p| m % p == 0))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BdFamily {
    Orthogonal,
    Symplectic,
    Twisted,
}

/// The involutive part of ker m (resp. ker nu in the twisted case): elements
/// whose lifts square to the identity exactly.
pub fn bf_subgroup(
    f: &mut FiniteSubgroup,
    family: BdFamily,
    cap: usize,
) -> Result<FiniteSubgroup> {
    let t = pairing_m(f, cap)?;
    match family {
        BdFamily::Orthogonal | BdFamily::Symplectic => {
            let c = f.closure.as_ref().unwrap();
            let kernel = pairing_kernel_indices(f, &t);
            let mut gens = Vec::new();
            for i in kernel {
                let e = &c.elements[t.h_indices[i]];
                let sq = e.mul(e)?;
                if sq.is_identity_strict() && !e.is_identity_strict() {
                    gens.push(e.clone());
                }
            }
            // ker m = B_F F_0, and B_F meets F_0 in its 2-torsion: adjoin
            // the half-points of the identity component.
            gens.extend(torus_half_points(f));
            let mut b = FiniteSubgroup::new(f.ctx.clone(), gens);
            b.closure_enumerate(cap)?;
            Ok(b)
        }
        BdFamily::Twisted => {
            let c = f.closure.as_ref().unwrap();
            let Some(u) = c.elements.iter().find(|e| e.tau) else {
                return Err(Error::NotTwisted);
            };
            let bound = order_bound(f);
            let mut gens: Vec<ProjElement> = Vec::new();
            let kernel = pairing_kernel_indices(f, &t);
            for i in kernel {
                let e = &c.elements[t.h_indices[i]];
                // nu(A) = scalar of [C, A]; correct the lift so nu = 1, then
                // keep it when it squares to the identity.
                let lam = commutator_scalar_tuple(f, u, e)?.swap_remove(0);
                let (d, a) = lam.as_root_of_unity(bound).ok_or_else(|| {
                    Error::InvariantMismatch("nu value is not a root of unity".into())
                })?;
                let mu = Cyclotomic::root_of_unity(2 * d, a as i64);
                debug_assert!(mu.mul(&mu).eq_value(&lam));
                let corrected = e.scale_by_tuple(&[mu]);
                let sq = corrected.mul(&corrected)?;
                if sq.is_identity_strict() {
                    gens.push(corrected);
                }
            }
            let mut ctx_u = GroupContext::u_plain(f.ctx.factors[0].n);
            ctx_u.torus_frames = f.ctx.torus_frames.clone();
            let mut gens: Vec<ProjElement> = gens
                .into_iter()
                .filter(|e| !e.is_identity_strict())
                .collect();
            for hp in torus_half_points(f) {
                let mut e = hp;
                e.tau = false;
                if !e.is_identity_strict() {
                    gens.push(e);
                }
            }
            let mut b = FiniteSubgroup::new(ctx_u, gens);
            b.closure_enumerate(cap)?;
            Ok(b)
        }
    }
}

#[derive(Clone, Debug)]
pub struct BdInvariants {
    pub family: BdFamily,
    pub k: u32,
    pub s0: usize,
    pub s1: usize,
    /// Sp case with trivial pairing: F must be toral, no block identity.
    pub toral: bool,
    pub rank_ker_mod_f0: usize,
    pub block_sizes: Vec<usize>,
    pub bf_order: usize,
    /// (m, mu_1..mu_{s0}) on F/ker m.
    pub metric: Option<MetricTuple>,
}

/// Block invariants of an abelian subgroup of O(n)/<-I>, Sp(n)/<-I>, or the
/// twisted unitary quotient: 2k = rank(F/ker m); B_F diagonalized, block
/// sizes read off, (s0, s1) derived and the family identity checked.
pub fn bd_invariants(f: &mut FiniteSubgroup, family: BdFamily, cap: usize) -> Result<BdInvariants> {
    let t = pairing_m(f, cap)?;
    let bound = order_bound(f);
    let nn = f.ctx.factors[0].n;

    // 2k = F2-rank of the pairing on a spanning family: the generators span
    // F/ker m in the linear contexts; twisted contexts (small here) use the
    // whole finite part.
    let hn = t.h_indices.len();
    let span_positions: Vec<usize> = if f.ctx.twisted {
        if hn > 64 {
            return Err(Error::Unsupported("twisted finite part too large".into()));
        }
        (0..hn).collect()
    } else {
        let c = f.closure.as_ref().unwrap();
        let g = f.generators.len();
        let mut pos = Vec::new();
        for gi in 0..g {
            let unit: Vec<u32> = (0..g).map(|j| u32::from(j == gi)).collect();
            if let Some(p) = (0..hn).find(|&i| c.exponents[t.h_indices[i]] == unit) {
                pos.push(p);
            }
        }
        pos
    };
    let sn = span_positions.len();
    if sn > 64 {
        return Err(Error::Unsupported("too many generators for rank".into()));
    }
    let mut rows: Vec<u64> = Vec::with_capacity(sn);
    for &i in &span_positions {
        let mut row = 0u64;
        for (jj, &j) in span_positions.iter().enumerate() {
            let v = t.value(f, i, j);
            if v.eq_value(&Cyclotomic::from_integer(-1)) {
                row |= 1 << jj;
            } else if !v.is_one() {
                return Err(Error::InvariantMismatch(
                    "pairing values outside {1,-1}".into(),
                ));
            }
        }
        rows.push(row);
    }
    let rank2k = linalg::f2_rank(rows.clone());
    if rank2k % 2 != 0 {
        return Err(Error::InvariantMismatch("odd symplectic rank".into()));
    }
    let k = (rank2k / 2) as u32;

    // A pairing-basis of F/ker m: greedily pick rows that grow the F2 rank.
    let mut basis_positions: Vec<usize> = Vec::new();
    {
        let mut chosen: Vec<u64> = Vec::new();
        for (ii, &i) in span_positions.iter().enumerate() {
            if chosen.len() == rank2k {
                break;
            }
            let mut cand = chosen.clone();
            cand.push(rows[ii]);
            if linalg::f2_rank(cand.clone()) > chosen.len() {
                chosen = cand;
                basis_positions.push(i);
            }
        }
        if basis_positions.len() != rank2k {
            return Err(Error::InvariantMismatch("rank extraction failed".into()));
        }
    }

    let b = bf_subgroup(f, family, cap)?;
    let bf_order = b.order().unwrap_or(1);
    let c = f.closure.as_ref().unwrap();

    // Simultaneous eigenspace splitting of the involutive lifts.
    let mats = involution_matrices(&b, family)?;
    let blocks = joint_eigenspaces(nn, &mats);
    let block_sizes: Vec<usize> = blocks.iter().map(|b| b.len()).collect();

    // Sp with trivial pairing: F is toral (no finite block structure).
    if family == BdFamily::Symplectic && k == 0 {
        return Ok(BdInvariants {
            family,
            k: 0,
            s0: 0,
            s1: 0,
            toral: true,
            rank_ker_mod_f0: 0,
            block_sizes,
            bf_order,
            metric: None,
        });
    }

    let (small, large) = match family {
        BdFamily::Orthogonal | BdFamily::Twisted => (1usize << k, 1usize << (k + 1)),
        BdFamily::Symplectic => (1usize << (k - 1), 1usize << k),
    };
    let mut s0 = 0;
    let mut s1 = 0;
    for &bs in &block_sizes {
        if bs == small {
            s0 += 1;
        } else if bs == large {
            s1 += 1;
        } else {
            return Err(Error::InvariantMismatch(format!(
                "block size {bs} incompatible with k = {k}"
            )));
        }
    }
    let expect_n = match family {
        BdFamily::Orthogonal | BdFamily::Twisted => small * s0 + large * s1,
        BdFamily::Symplectic => small * s0 + large * s1,
    };
    if expect_n != nn {
        return Err(Error::InvariantMismatch(format!(
            "identity failed: n = {nn}, blocks give {expect_n}"
        )));
    }
    if f.torus_dim() != s1 {
        return Err(Error::InvariantMismatch(format!(
            "dim F_0 = {} but s1 = {s1}",
            f.torus_dim()
        )));
    }

    // rank(ker m / F_0): count kernel cosets modulo torus membership.
    let kernel = pairing_kernel_indices(f, &t);
    let mut coset_reps: Vec<ProjElement> = Vec::new();
    for &i in &kernel {
        let e = &c.elements[t.h_indices[i]];
        let mut in_existing = in_torus_span(&f.ctx, &f.torus, e, bound);
        if !in_existing {
            for r in &coset_reps {
                let q = e.mul(&r.inverse())?;
                if in_torus_span(&f.ctx, &f.torus, &q, bound) {
                    in_existing = true;
                    break;
                }
            }
        }
        if !in_existing {
            coset_reps.push(e.clone());
        }
    }
    let classes = coset_reps.len() + 1;
    if !classes.is_power_of_two() {
        return Err(Error::InvariantMismatch(format!(
            "ker m / F_0 has {classes} classes, not a 2-power"
        )));
    }
    let rank_ker = classes.trailing_zeros() as usize;
    if rank_ker > s0.saturating_sub(1).max(0) {
        return Err(Error::InvariantMismatch(format!(
            "rank(ker m/F_0) = {rank_ker} exceeds max(s0-1, 0) = {}",
            s0.saturating_sub(1)
        )));
    }

    // The linear structure (m, mu_1..mu_{s0}) on F/ker m.
    let metric = if s0 > 0 && rank2k > 0 {
        Some(extract_metric_tuple(
            f,
            &t,
            &basis_positions,
            &blocks,
            &block_sizes,
            small,
            family,
            k,
        )?)
    } else {
        None
    };

    Ok(BdInvariants {
        family,
        k,
        s0,
        s1,
        toral: false,
        rank_ker_mod_f0: rank_ker,
        block_sizes,
        bf_order,
        metric,
    })
}

/// Real matrices of the involutive lifts used for the eigenspace splitting.
fn involution_matrices(b: &FiniteSubgroup, family: BdFamily) -> Result<Vec<CycMatrix>> {
    let c = b
        .closure
        .as_ref()
        .ok_or_else(|| Error::InvariantMismatch("B_F closure missing".into()))?;
    let mut out = Vec::new();
    for e in &c.elements {
        if e.is_identity_strict() {
            continue;
        }
        let m = match (&e.parts[0], family) {
            (MatPart::C(m), _) => m.clone(),
            (MatPart::H(q), BdFamily::Symplectic) => {
                if !q.b.eq_value(&CycMatrix::zero(q.size())) || !q.a.is_real() {
                    return Err(Error::InvariantMismatch(
                        "B_F lift is not in real normal form".into(),
                    ));
                }
                q.a.clone()
            }
            _ => return Err(Error::CtxMismatch),
        };
        if !m.is_real() {
            return Err(Error::InvariantMismatch("B_F lift is not real".into()));
        }
        // A strict involution by construction; note -A also appears in the
        // closure for the quotiented contexts and splits the same spaces.
        out.push(m);
    }
    Ok(out)
}

/// Joint eigenspaces of a commuting family of involutions, as bases of
/// column vectors. Starts from the standard basis and splits by each matrix.
fn joint_eigenspaces(n: usize, mats: &[CycMatrix]) -> Vec<Vec<Vec<Cyclotomic>>> {
    let mut spaces: Vec<Vec<Vec<Cyclotomic>>> = vec![(0..n)
        .map(|i| {
            let mut v = vec![Cyclotomic::zero(); n];
            v[i] = Cyclotomic::one();
            v
        })
        .collect()];
    for m in mats {
        let mut next = Vec::new();
        for basis in &spaces {
            let (plus, minus) = split_by_involution(n, m, basis);
            if !plus.is_empty() {
                next.push(plus);
            }
            if !minus.is_empty() {
                next.push(minus);
            }
        }
        spaces = next;
    }
    spaces
}

fn split_by_involution(
    n: usize,
    m: &CycMatrix,
    basis: &[Vec<Cyclotomic>],
) -> (Vec<Vec<Cyclotomic>>, Vec<Vec<Cyclotomic>>) {
    let d = basis.len();
    let mut out = (Vec::new(), Vec::new());
    for (sign, store) in [(1i64, &mut out.0), (-1i64, &mut out.1)] {
        // Solve (M - sign I) * (basis * c) = 0 over the subspace.
        let mut rows = vec![vec![Cyclotomic::zero(); d]; n];
        for (ci, v) in basis.iter().enumerate() {
            // column ci of (M -/+ I) * basis
            for r in 0..n {
                let mut acc = Cyclotomic::zero();
                for (k, item) in v.iter().enumerate() {
                    if !item.is_zero() {
                        acc = acc.add(&m.entry(r, k).mul(item));
                    }
                }
                acc = acc.sub(&v[r].scale(&BigRational::from_integer(sign.into())));
                rows[r][ci] = acc;
            }
        }
        let kern = linalg::kernel_basis(rows, d);
        for coef in kern {
            let mut v = vec![Cyclotomic::zero(); n];
            for (ci, c) in coef.iter().enumerate() {
                if !c.is_zero() {
                    for r in 0..n {
                        v[r] = v[r].add(&basis[ci][r].mul(c));
                    }
                }
            }
            store.push(v);
        }
    }
    out
}

/// mu_i(x) from the restriction of the canonical lift to the i-th small
/// block: the restricted matrix squares to mu * I.
#[allow(clippy::too_many_arguments)]
fn extract_metric_tuple(
    f: &FiniteSubgroup,
    t: &PairingTable,
    basis_positions: &[usize],
    blocks: &[Vec<Vec<Cyclotomic>>],
    block_sizes: &[usize],
    small: usize,
    family: BdFamily,
    k: u32,
) -> Result<MetricTuple> {
    let c = f.closure.as_ref().unwrap();
    let dim = basis_positions.len(); // 2k
    let space = SymplecticSpaceF2::from_gram(dim, |i, j| {
        let v = t.value(f, basis_positions[i], basis_positions[j]);
        v.eq_value(&Cyclotomic::from_integer(-1))
    });
    let small_blocks: Vec<&Vec<Vec<Cyclotomic>>> = blocks
        .iter()
        .zip(block_sizes.iter())
        .filter(|(_, &s)| s == small)
        .map(|(b, _)| b)
        .collect();
    let mut tables: Vec<Vec<bool>> = vec![vec![false; 1 << dim]; small_blocks.len()];
    for v in 0u32..(1 << dim) {
        // Representative of the coset: product of basis elements.
        let mut rep: Option<ProjElement> = None;
        for (bit, &pos) in basis_positions.iter().enumerate() {
            if (v >> bit) & 1 == 1 {
                let e = &c.elements[t.h_indices[pos]];
                rep = Some(match rep {
                    None => e.clone(),
                    Some(r) => r.mul(e)?,
                });
            }
        }
        let rep = rep.unwrap_or_else(|| ProjElement::identity(&f.ctx));
        for (bi, block) in small_blocks.iter().enumerate() {
            let mu = block_restriction_square_sign(&rep, block, family)?;
            tables[bi][v as usize] = mu; // true = -1
        }
    }
    let mus: Vec<QuadraticMu> = tables
        .into_iter()
        .map(|tt| QuadraticMu::from_table(&space, tt))
        .collect::<Result<_>>()?;
    let _ = k;
    Ok(MetricTuple { space, mus })
}

/// Restrict a lift to an invariant block and return the sign of its square
/// (false = +I, true = -I).
fn block_restriction_square_sign(
    e: &ProjElement,
    block: &[Vec<Cyclotomic>],
    family: BdFamily,
) -> Result<bool> {
    let d = block.len();
    match (&e.parts[0], family) {
        (MatPart::C(m), _) => {
            let r = restrict(m, block)?;
            let r2 = r.mul(&r)?;
            square_sign(&r2, d)
        }
        (MatPart::H(q), BdFamily::Symplectic) => {
            let ra = restrict(&q.a, block)?;
            let rb = restrict(&q.b, block)?;
            let quat = crate::matrix::QuatCycMatrix::new(ra, rb);
            let sq = quat.mul(&quat)?;
            if !sq.b.eq_value(&CycMatrix::zero(d)) {
                return Err(Error::InvariantMismatch(
                    "block restriction square has a j part".into(),
                ));
            }
            square_sign(&sq.a, d)
        }
        _ => Err(Error::CtxMismatch),
    }
}

fn square_sign(m: &CycMatrix, d: usize) -> Result<bool> {
    if m.eq_value(&CycMatrix::identity(d)) {
        Ok(false)
    } else if m.eq_value(&CycMatrix::identity(d).neg()) {
        Ok(true)
    } else {
        Err(Error::InvariantMismatch(
            "block restriction does not square to +/-I".into(),
        ))
    }
}

/// Matrix of the restriction of m to the span of `block` (m must preserve
/// the span; errors otherwise).
fn restrict(m: &CycMatrix, block: &[Vec<Cyclotomic>]) -> Result<CycMatrix> {
    let n = m.size();
    let d = block.len();
    // Solve basis * R = m * basis column by column.
    let rows: Vec<Vec<Cyclotomic>> = (0..n)
        .map(|r| (0..d).map(|c| block[c][r].clone()).collect())
        .collect();
    let mut out = CycMatrix::zero(d);
    for c in 0..d {
        let mut img = vec![Cyclotomic::zero(); n];
        for (k, item) in block[c].iter().enumerate() {
            if !item.is_zero() {
                for (r, img_r) in img.iter_mut().enumerate() {
                    *img_r = img_r.add(&m.entry(r, k).mul(item));
                }
            }
        }
        let sol = linalg::solve(&rows, &img).ok_or_else(|| {
            Error::InvariantMismatch("matrix does not preserve the block".into())
        })?;
        for r in 0..d {
            out[(r, c)] = sol[r].clone();
        }
    }
    Ok(out)
}

/// The lift F' of a twisted abelian subgroup to (U(n)/<-I>) >< tau with
/// F' cap (Z_n/<-I>) = <iI>/<-I>, by the lambda-correction of each element.
pub fn twisted_lift(f: &mut FiniteSubgroup, cap: usize) -> Result<FiniteSubgroup> {
    if !f.ctx.twisted {
        return Err(Error::NotTwisted);
    }
    if f.ctx.factors.len() != 1 || !matches!(f.ctx.factors[0].family, Family::U | Family::SU) {
        return Err(Error::Unsupported(
            "twisted lift applies to a single unitary factor".into(),
        ));
    }
    f.closure_enumerate(cap)?;
    let c = f.closure.as_ref().unwrap();
    let Some(u) = c.elements.iter().find(|e| e.tau).cloned() else {
        return Err(Error::NotTwisted);
    };
    let n = f.ctx.factors[0].n;
    let bound = order_bound(f) * 2;
    let mut gens: Vec<ProjElement> = vec![
        ProjElement::from_complex(CycMatrix::scalar(n, &Cyclotomic::i())),
        u.clone(),
    ];
    for e in &c.elements {
        if e.tau || e.is_identity_strict() {
            continue;
        }
        // [C, A] = lambda^2 I; the corrected lift lambda*A commutes with C.
        let lam2 = commutator_scalar_tuple(f, &u, e)?.swap_remove(0);
        let (d, a) = lam2
            .as_root_of_unity(bound)
            .ok_or_else(|| Error::LiftFailed("commutator scalar not a root of unity".into()))?;
        let lam = Cyclotomic::root_of_unity(2 * d, a as i64);
        gens.push(e.scale_by_tuple(&[lam]));
    }
    let mut ctx = GroupContext::twisted_u_neg(n);
    ctx.torus_frames = f.ctx.torus_frames.clone();
    let mut lifted = FiniteSubgroup::new(ctx, gens).with_torus(f.torus.clone());
    let data = lifted.closure_enumerate(cap * 4)?;
    if !data.abelian {
        return Err(Error::LiftFailed("corrected lifts do not commute".into()));
    }
    // F' cap scalars = <iI>/<-I>.
    for e in &lifted.closure.as_ref().unwrap().elements {
        if e.tau {
            continue;
        }
        if let MatPart::C(m) = &e.parts[0] {
            if let Some(z) = m.as_scalar() {
                let z4 = z.pow(4).expect("scalar power");
                if !z4.is_one() {
                    return Err(Error::LiftFailed(
                        "lift contains scalars outside <iI>".into(),
                    ));
                }
            }
        }
    }
    Ok(lifted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::matrix::named;
    use crate::QuatCycMatrix;

    #[test]
    fn h3_pairing_has_order_three() {
        let mut f = catalog::h_k(3, 3).unwrap();
        let t = pairing_m(&mut f, 1000).unwrap();
        // m on the generator pair is a primitive cube root of unity.
        let gens_idx: Vec<usize> = {
            let c = f.closure.as_ref().unwrap();
            (0..c.elements.len())
                .filter(|&i| c.exponents[i].iter().sum::<u32>() == 1)
                .collect()
        };
        let (i, j) = (gens_idx[0], gens_idx[1]);
        assert_eq!(t.value_order(&f, i, j, 100), 3);
        verify_pairing(&f, &t, 10_000).unwrap();
    }

    #[test]
    fn sp1_pairing_is_minus_one() {
        let mut f = FiniteSubgroup::new(
            GroupContext::sp_neg(1),
            vec![
                ProjElement::from_quat(QuatCycMatrix::i_scalar(1)),
                ProjElement::from_quat(QuatCycMatrix::j_scalar(1)),
            ],
        );
        let t = pairing_m(&mut f, 100).unwrap();
        let c = f.closure.as_ref().unwrap();
        let i = (0..c.elements.len())
            .find(|&i| c.exponents[i] == vec![1, 0])
            .unwrap();
        let j = (0..c.elements.len())
            .find(|&i| c.exponents[i] == vec![0, 1])
            .unwrap();
        assert!(t.value(&f, i, j).eq_value(&Cyclotomic::from_integer(-1)));
        // ker m is trivial.
        assert_eq!(pairing_kernel_indices(&f, &t).len(), 1);
    }

    #[test]
    fn nonabelian_input_raises() {
        let a = CycMatrix::diag(vec![
            Cyclotomic::one(),
            Cyclotomic::omega(),
            Cyclotomic::omega().pow(2).unwrap(),
        ]);
        let b = CycMatrix::cycle(3);
        let mut f = FiniteSubgroup::new(
            GroupContext::su_plain(3),
            vec![ProjElement::from_complex(a), ProjElement::from_complex(b)],
        );
        assert!(matches!(
            pairing_m(&mut f, 1000),
            Err(Error::NonScalarCommutator)
        ));
    }

    #[test]
    fn abelian_lift_has_full_kernel() {
        // Diagonal involutions in PU(4): m = 1 identically.
        let mut f = FiniteSubgroup::new(
            GroupContext::pu(4),
            vec![
                ProjElement::from_complex(named::i_pq(1, 3)),
                ProjElement::from_complex(named::i_pq(2, 2)),
            ],
        );
        let t = pairing_m(&mut f, 100).unwrap();
        let total = t.h_indices.len();
        assert_eq!(pairing_kernel_indices(&f, &t).len(), total);
    }

    #[test]
    fn decompose_h4() {
        let mut f = catalog::h_k(4, 4).unwrap();
        let inv = heisenberg_decompose(&mut f, 10_000).unwrap();
        assert_eq!(inv.invariants, vec![4]);
        assert_eq!(inv.torus_dim, 0);
    }

    #[test]
    fn decompose_h2xh2() {
        let mut f = catalog::h_product(&[2, 2], 4).unwrap();
        let inv = heisenberg_decompose(&mut f, 10_000).unwrap();
        assert_eq!(inv.invariants, vec![2, 2]);
        assert_eq!(inv.torus_dim, 0);
    }

    #[test]
    fn decompose_maximal_torus() {
        let mut f = catalog::h_product(&[], 5).unwrap();
        let inv = heisenberg_decompose(&mut f, 10_000).unwrap();
        assert!(inv.invariants.is_empty());
        assert_eq!(inv.torus_dim, 4);
    }

    #[test]
    fn quotient_exists_matches_prime_criterion() {
        assert!(condition_star_quotient_exists(4, 2).unwrap());
        assert!(!condition_star_quotient_exists(6, 2).unwrap());
        assert!(condition_star_quotient_exists(12, 12).unwrap());
        assert!(condition_star_quotient_exists(12, 6).unwrap());
        assert!(!condition_star_quotient_exists(12, 4).unwrap());
        assert!(matches!(
            condition_star_quotient_exists(6, 4),
            Err(Error::BadCenter)
        ));
    }

    #[test]
    fn bf_of_diagonal_involutions_is_everything() {
        let mut f = FiniteSubgroup::new(
            GroupContext::o_neg(3),
            vec![
                ProjElement::from_complex(named::i_pq(1, 2)),
                ProjElement::from_complex(CycMatrix::diag(vec![
                    Cyclotomic::one(),
                    Cyclotomic::from_integer(-1),
                    Cyclotomic::one(),
                ])),
            ],
        );
        let b = bf_subgroup(&mut f, BdFamily::Orthogonal, 100).unwrap();
        assert_eq!(b.order(), f.order());
    }

    #[test]
    fn bf_of_h2_is_trivial() {
        let mut f = FiniteSubgroup::new(
            GroupContext::o_neg(2),
            vec![
                ProjElement::from_complex(named::i_pq(1, 1)),
                ProjElement::from_complex(named::jp_n(1)),
            ],
        );
        let b = bf_subgroup(&mut f, BdFamily::Orthogonal, 100).unwrap();
        assert_eq!(b.order(), Some(1));
    }

    #[test]
    fn bf_of_quaternion_pair_is_trivial() {
        let mut f = FiniteSubgroup::new(
            GroupContext::sp_neg(1),
            vec![
                ProjElement::from_quat(QuatCycMatrix::i_scalar(1)),
                ProjElement::from_quat(QuatCycMatrix::j_scalar(1)),
            ],
        );
        let b = bf_subgroup(&mut f, BdFamily::Symplectic, 100).unwrap();
        assert_eq!(b.order(), Some(1));
    }

    #[test]
    fn bd_invariants_of_h2_squared_in_o4() {
        let mut f = catalog::bd_orthogonal(2, &[catalog::SmallPat::Std], 0).unwrap();
        let inv = bd_invariants(&mut f, BdFamily::Orthogonal, 10_000).unwrap();
        assert_eq!(inv.k, 2);
        assert_eq!(inv.s0, 1);
        assert_eq!(inv.s1, 0);
        assert_eq!(inv.rank_ker_mod_f0, 0);
    }

    #[test]
    fn bd_invariants_of_sp1_pair() {
        let mut f = FiniteSubgroup::new(
            GroupContext::sp_neg(1),
            vec![
                ProjElement::from_quat(QuatCycMatrix::i_scalar(1)),
                ProjElement::from_quat(QuatCycMatrix::j_scalar(1)),
            ],
        );
        let inv = bd_invariants(&mut f, BdFamily::Symplectic, 1000).unwrap();
        assert_eq!(inv.k, 1);
        assert_eq!(inv.s0, 1);
        assert_eq!(inv.s1, 0);
    }

    #[test]
    fn bd_invariants_of_full_diagonal() {
        for n in 2..=5usize {
            let mut f = catalog::diagonal_group(n).unwrap();
            let inv = bd_invariants(&mut f, BdFamily::Orthogonal, 10_000).unwrap();
            assert_eq!(inv.k, 0, "n={n}");
            assert_eq!(inv.s0, n);
            assert_eq!(inv.s1, 0);
            assert_eq!(inv.rank_ker_mod_f0, n - 1);
        }
    }

    #[test]
    fn twisted_lift_of_conjugation_with_involutions() {
        // F = <tau, [I_{1,1}]> in PU(2) >< tau.
        let ctx = GroupContext::twisted_pu(2);
        let mut f = FiniteSubgroup::new(
            ctx,
            vec![
                ProjElement::identity(&GroupContext::twisted_pu(2)).with_tau(),
                ProjElement::from_complex(named::i_pq(1, 1)),
            ],
        );
        let lifted = twisted_lift(&mut f, 1000).unwrap();
        assert_eq!(lifted.is_abelian(), Some(true));
        // [iI] is in the lift.
        let i_elem =
            ProjElement::from_complex(CycMatrix::scalar(2, &Cyclotomic::i()));
        assert!(lifted.contains(&i_elem).unwrap());
    }

    #[test]
    fn order_correction_along_the_torus() {
        // H_2 x T in PU(4) with a generator deliberately smeared by a torus
        // point of order 4: the decomposition must correct it back to an
        // exact order-2 representative.
        let mut f = catalog::h_product(&[2], 4).unwrap();
        // A quarter turn along the first torus direction (1, 0, 1, 0).
        let quarter: Vec<BigRational> = vec![
            BigRational::new(1.into(), 4.into()),
            BigRational::zero(),
            BigRational::new(1.into(), 4.into()),
            BigRational::zero(),
        ];
        let smear = torus_point(&f.ctx, &quarter);
        f.generators[0] = f.generators[0].mul(&smear).unwrap();
        let inv = heisenberg_decompose(&mut f, 10_000).unwrap();
        assert_eq!(inv.invariants, vec![2]);
        assert_eq!(inv.torus_dim, 1);
        for (x, y) in &inv.pairs {
            assert_eq!(x.proj_order(&f.ctx, 16), Some(2));
            assert_eq!(y.proj_order(&f.ctx, 16), Some(2));
        }
    }

    #[test]
    fn twisted_bd_invariants_finite_case() {
        // <tau, diagonal involutions> in PU(3) >< tau: k = 0, s0 = 3.
        let ctx = GroupContext::twisted_pu(3);
        let tau = ProjElement::identity(&ctx).with_tau();
        let d1 = ProjElement::from_complex(named::i_pq(1, 2));
        let d2 = ProjElement::from_complex(CycMatrix::diag(vec![
            Cyclotomic::one(),
            Cyclotomic::from_integer(-1),
            Cyclotomic::one(),
        ]));
        let mut f = FiniteSubgroup::new(ctx, vec![tau, d1, d2]);
        let inv = bd_invariants(&mut f, BdFamily::Twisted, 1000).unwrap();
        assert_eq!(inv.k, 0);
        assert_eq!(inv.s0, 3);
        assert_eq!(inv.s1, 0);
        assert_eq!(inv.rank_ker_mod_f0, 2);
    }

    #[test]
    fn twisted_lift_and_bd_with_torus_blocks() {
        // <tau, H_2, Delta(SO(2))> in PU(4) >< tau with real rotation
        // planes: lift to (U(4)/<-I>) >< tau, then k = 1, s0 = 0, s1 = 1.
        use crate::group::TorusFrame;
        let mut ctx = GroupContext::twisted_pu(4).with_torus_frame(0, TorusFrame::Planes);
        ctx.label = "PU(4)><tau planes".into();
        let tau = ProjElement::identity(&ctx).with_tau();
        let x = ProjElement::from_complex(named::i_pq(2, 2));
        let y = ProjElement::from_complex(named::jp_n(2));
        let dirs = vec![vec![BigRational::one(), BigRational::one()]];
        let mut f = FiniteSubgroup::new(ctx, vec![tau, x, y]).with_torus(dirs);
        // Condition (*) holds: fixed = Delta so(2), dimension 1 = dim F.
        let alg = crate::fixedspace::LieAlgebraBasis::su(4);
        let star = crate::fixedspace::condition_star(&f, &alg).unwrap();
        assert!(star.holds, "fixed {} dim_F {}", star.dim_fixed, star.dim_f);

        let mut lifted = twisted_lift(&mut f, 4096).unwrap();
        assert_eq!(lifted.is_abelian(), Some(true));
        let inv = bd_invariants(&mut lifted, BdFamily::Twisted, 4096).unwrap();
        assert_eq!(inv.k, 1);
        assert_eq!(inv.s0, 0);
        assert_eq!(inv.s1, 1);
    }

    #[test]
    fn twisted_lift_requires_twisted_input() {
        let mut f = FiniteSubgroup::new(
            GroupContext::pu(2),
            vec![ProjElement::from_complex(named::i_pq(1, 1))],
        );
        assert!(matches!(twisted_lift(&mut f, 100), Err(Error::NotTwisted)));
    }
}
