//! Group contexts, projective elements, and finite-subgroup closure.
//!
//! A [`GroupContext`] names a product of classical factors together with a
//! declared central scalar subgroup; a [`ProjElement`] is a tuple of matrix
//! parts (optionally tagged with the outer generator tau in the twisted
//! unitary case), and equality of projective elements is "equal up to the
//! declared center". Closure enumeration canonicalizes every element to a
//! distinguished coset representative so identity of cosets is identity of
//! keys.

use std::collections::HashMap;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::linalg;
use crate::matrix::{CycMatrix, MatPart, QuatCycMatrix};

pub const DEFAULT_CLOSURE_CAP: usize = 1 << 16;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Family {
    U,
    SU,
    O,
    SO,
    Sp,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Factor {
    pub family: Family,
    pub n: usize,
}

/// Which maximal-torus coordinates a factor uses: the complex diagonal
/// (U/SU and quaternionic-diagonal Sp circles) or real rotation planes in
/// consecutive coordinate pairs (orthogonal factors, and the real SO(2)
/// blocks inside Sp that commute with the quaternion scalars).
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum TorusFrame {
    Diagonal,
    Planes,
}

/// The declared central subgroup by which representatives are identified.
#[derive(Clone, Debug)]
pub enum CenterSpec {
    Trivial,
    /// Enumerated scalar tuples (one scalar per factor), identity included.
    Finite(Vec<Vec<Cyclotomic>>),
    /// Full U(1) scalar subgroup of a single complex factor (PU(n)).
    ProjectiveU1,
}

#[derive(Clone, Debug)]
pub struct GroupContext {
    pub factors: Vec<Factor>,
    pub center: CenterSpec,
    pub twisted: bool,
    pub label: String,
    pub torus_frames: Vec<TorusFrame>,
}

/// Closure of scalar tuples under componentwise multiplication.
fn close_scalar_tuples(gens: &[Vec<Cyclotomic>], nfac: usize) -> Vec<Vec<Cyclotomic>> {
    let identity: Vec<Cyclotomic> = vec![Cyclotomic::one(); nfac];
    let mut elems: Vec<Vec<Cyclotomic>> = vec![identity];
    let mut frontier = vec![0usize];
    while let Some(i) = frontier.pop() {
        let base = elems[i].clone();
        for g in gens {
            let prod: Vec<Cyclotomic> = base.iter().zip(g.iter()).map(|(a, b)| a.mul(b)).collect();
            if !elems
                .iter()
                .any(|e| e.iter().zip(prod.iter()).all(|(a, b)| a.eq_value(b)))
            {
                elems.push(prod);
                frontier.push(elems.len() - 1);
            }
        }
        if elems.len() > 4096 {
            panic!("declared center is unreasonably large");
        }
    }
    elems
}

fn default_frame(f: &Factor) -> TorusFrame {
    match f.family {
        Family::U | Family::SU | Family::Sp => TorusFrame::Diagonal,
        Family::O | Family::SO => TorusFrame::Planes,
    }
}

impl GroupContext {
    pub fn product(
        factors: Vec<Factor>,
        center_gens: Vec<Vec<Cyclotomic>>,
        label: impl Into<String>,
    ) -> Self {
        let nfac = factors.len();
        let center = if center_gens.is_empty() {
            CenterSpec::Trivial
        } else {
            CenterSpec::Finite(close_scalar_tuples(&center_gens, nfac))
        };
        let torus_frames = factors.iter().map(default_frame).collect();
        GroupContext {
            factors,
            center,
            twisted: false,
            label: label.into(),
            torus_frames,
        }
    }

    /// Override the torus frame of one factor (e.g. real rotation planes
    /// inside a symplectic factor).
    pub fn with_torus_frame(mut self, factor: usize, frame: TorusFrame) -> Self {
        self.torus_frames[factor] = frame;
        self
    }

    /// PU(n) with the full scalar circle as center.
    pub fn pu(n: usize) -> Self {
        let factors = vec![Factor {
            family: Family::U,
            n,
        }];
        let torus_frames = factors.iter().map(default_frame).collect();
        GroupContext {
            factors,
            center: CenterSpec::ProjectiveU1,
            twisted: false,
            label: format!("PU({n})"),
            torus_frames,
        }
    }

    /// SU(n) divided by the scalar subgroup of order m (m | n).
    pub fn su_quot(n: usize, m: u64) -> Self {
        let gens = if m <= 1 {
            vec![]
        } else {
            vec![vec![Cyclotomic::zeta(m)]]
        };
        Self::product(
            vec![Factor {
                family: Family::SU,
                n,
            }],
            gens,
            format!("SU({n})/Z{m}"),
        )
    }

    pub fn su_plain(n: usize) -> Self {
        Self::product(
            vec![Factor {
                family: Family::SU,
                n,
            }],
            vec![],
            format!("SU({n})"),
        )
    }

    pub fn o_neg(n: usize) -> Self {
        Self::product(
            vec![Factor {
                family: Family::O,
                n,
            }],
            vec![vec![Cyclotomic::from_integer(-1)]],
            format!("O({n})/<-I>"),
        )
    }

    pub fn so_neg(n: usize) -> Self {
        Self::product(
            vec![Factor {
                family: Family::SO,
                n,
            }],
            vec![vec![Cyclotomic::from_integer(-1)]],
            format!("SO({n})/<-I>"),
        )
    }

    pub fn sp_neg(n: usize) -> Self {
        Self::product(
            vec![Factor {
                family: Family::Sp,
                n,
            }],
            vec![vec![Cyclotomic::from_integer(-1)]],
            format!("Sp({n})/<-1>"),
        )
    }

    pub fn sp_plain(n: usize) -> Self {
        Self::product(
            vec![Factor {
                family: Family::Sp,
                n,
            }],
            vec![],
            format!("Sp({n})"),
        )
    }

    /// PU(n) extended by complex conjugation.
    pub fn twisted_pu(n: usize) -> Self {
        let mut ctx = Self::pu(n);
        ctx.twisted = true;
        ctx.label = format!("PU({n})><tau");
        ctx
    }

    /// (U(n)/<-I>) extended by tau.
    pub fn twisted_u_neg(n: usize) -> Self {
        let mut ctx = Self::product(
            vec![Factor {
                family: Family::U,
                n,
            }],
            vec![vec![Cyclotomic::from_integer(-1)]],
            format!("(U({n})/<-I>)><tau"),
        );
        ctx.twisted = true;
        ctx
    }

    pub fn u_plain(n: usize) -> Self {
        Self::product(
            vec![Factor {
                family: Family::U,
                n,
            }],
            vec![],
            format!("U({n})"),
        )
    }

    pub fn center_tuples(&self) -> Vec<Vec<Cyclotomic>> {
        match &self.center {
            CenterSpec::Trivial | CenterSpec::ProjectiveU1 => {
                vec![vec![Cyclotomic::one(); self.factors.len()]]
            }
            CenterSpec::Finite(ts) => ts.clone(),
        }
    }

    fn center_conductor(&self) -> u64 {
        self.center_tuples()
            .iter()
            .flatten()
            .fold(1u64, |acc, z| acc.lcm(&z.conductor()))
    }

    /// Number of standard-torus coordinates, concatenated over factors.
    pub fn torus_coords(&self) -> usize {
        self.factors
            .iter()
            .zip(self.torus_frames.iter())
            .map(|(f, fr)| match fr {
                TorusFrame::Diagonal => f.n,
                TorusFrame::Planes => f.n / 2,
            })
            .sum()
    }

    /// Compatible contexts: same factors and twisting.
    pub fn same_shape(&self, other: &GroupContext) -> bool {
        self.factors == other.factors && self.twisted == other.twisted
    }

    /// The continuous center as a torus-coordinate direction: the all-ones
    /// vector when the single unitary factor uses diagonal coordinates. In
    /// the Planes frame the scalar circle meets the coordinate torus only
    /// in finitely many points, so there is no direction to quotient by.
    pub fn u1_scalar_direction(&self) -> Option<Vec<BigRational>> {
        match (&self.center, self.torus_frames.first()) {
            (CenterSpec::ProjectiveU1, Some(TorusFrame::Diagonal)) => {
                Some(vec![BigRational::one(); self.torus_coords()])
            }
            _ => None,
        }
    }
}

/// An element of the (possibly twisted) quotient group, given by a
/// representative tuple of matrices and a tau flag. The optional twist is
/// the matrix tuple T through which tau acts, x -> T conj(x) T^-1 on
/// unitary factors (None means plain entrywise conjugation); it is shared
/// by all elements of one subgroup.
#[derive(Clone, Debug)]
pub struct ProjElement {
    pub parts: Vec<MatPart>,
    pub tau: bool,
    pub twist: Option<std::sync::Arc<Vec<MatPart>>>,
}

impl ProjElement {
    pub fn from_complex(m: CycMatrix) -> Self {
        ProjElement {
            parts: vec![MatPart::C(m)],
            tau: false,
            twist: None,
        }
    }

    pub fn from_quat(m: QuatCycMatrix) -> Self {
        ProjElement {
            parts: vec![MatPart::H(m)],
            tau: false,
            twist: None,
        }
    }

    pub fn from_parts(parts: Vec<MatPart>) -> Self {
        ProjElement {
            parts,
            tau: false,
            twist: None,
        }
    }

    pub fn with_tau(mut self) -> Self {
        self.tau = true;
        self
    }

    /// Tag as a tau element whose outer action is x -> T conj(x) T^-1.
    pub fn with_tau_twist(mut self, twist: Vec<MatPart>) -> Self {
        self.tau = true;
        self.twist = Some(std::sync::Arc::new(twist));
        self
    }

    /// The tau action of this element on a factor tuple.
    fn apply_tau(&self, parts: &[MatPart]) -> Result<Vec<MatPart>> {
        match &self.twist {
            None => Ok(parts.iter().map(|p| p.tau_conj()).collect()),
            Some(t) => parts
                .iter()
                .zip(t.iter())
                .map(|(p, ti)| match (p.tau_conj(), ti) {
                    (MatPart::C(pc), MatPart::C(tm)) => {
                        Ok(MatPart::C(tm.mul(&pc)?.mul(&tm.dagger())?))
                    }
                    (other, _) => Ok(other),
                })
                .collect(),
        }
    }

    pub fn identity(ctx: &GroupContext) -> Self {
        ProjElement {
            parts: ctx
                .factors
                .iter()
                .map(|f| match f.family {
                    Family::Sp => MatPart::H(QuatCycMatrix::identity(f.n)),
                    _ => MatPart::C(CycMatrix::identity(f.n)),
                })
                .collect(),
            tau: false,
            twist: None,
        }
    }

    pub fn mul(&self, other: &ProjElement) -> Result<ProjElement> {
        if self.parts.len() != other.parts.len() {
            return Err(Error::CtxMismatch);
        }
        let rhs_parts: Vec<MatPart> = if self.tau {
            self.apply_tau(&other.parts)?
        } else {
            other.parts.clone()
        };
        let mut parts = Vec::with_capacity(self.parts.len());
        for (a, b) in self.parts.iter().zip(rhs_parts.iter()) {
            parts.push(a.mul(b)?);
        }
        Ok(ProjElement {
            parts,
            tau: self.tau ^ other.tau,
            twist: self.twist.clone().or_else(|| other.twist.clone()),
        })
    }

    /// Inverse of a unitary representative. For tau-tagged elements
    /// (M tau)^-1 = (tau^-1(M^-1)) tau: the transpose on unitary factors
    /// when tau is plain conjugation, conjugated through the twist else.
    pub fn inverse(&self) -> ProjElement {
        if self.tau {
            let parts = match &self.twist {
                None => self.parts.iter().map(|p| p.tau_inverse()).collect(),
                Some(t) => self
                    .parts
                    .iter()
                    .zip(t.iter())
                    .map(|(p, ti)| match (p, ti) {
                        (MatPart::C(m), MatPart::C(tm)) => {
                            // phi^-1(M^-1) = conj(T)^-1 M^T conj(T).
                            let tc = tm.conj_entries();
                            MatPart::C(
                                tc.dagger()
                                    .mul(&m.transpose())
                                    .and_then(|x| x.mul(&tc))
                                    .expect("twist inverse"),
                            )
                        }
                        _ => p.tau_inverse(),
                    })
                    .collect(),
                };
            ProjElement {
                parts,
                tau: true,
                twist: self.twist.clone(),
            }
        } else {
            ProjElement {
                parts: self.parts.iter().map(|p| p.dagger()).collect(),
                tau: false,
                twist: self.twist.clone(),
            }
        }
    }

    /// x y x^-1 y^-1.
    pub fn commutator(&self, other: &ProjElement) -> Result<ProjElement> {
        self.mul(other)?
            .mul(&self.inverse())?
            .mul(&other.inverse())
    }

    pub fn pow(&self, k: u64) -> Result<ProjElement> {
        let mut acc: Option<ProjElement> = None;
        let mut sq = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = Some(match acc {
                    None => sq.clone(),
                    Some(a) => a.mul(&sq)?,
                });
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq)?;
            }
        }
        Ok(acc.expect("pow with k >= 1"))
    }

    pub fn scale_by_tuple(&self, tuple: &[Cyclotomic]) -> ProjElement {
        ProjElement {
            parts: self
                .parts
                .iter()
                .zip(tuple.iter())
                .map(|(p, z)| p.scale(z))
                .collect(),
            tau: self.tau,
            twist: self.twist.clone(),
        }
    }

    pub fn eq_value(&self, other: &ProjElement) -> bool {
        self.tau == other.tau
            && self.parts.len() == other.parts.len()
            && self
                .parts
                .iter()
                .zip(other.parts.iter())
                .all(|(a, b)| a.eq_value(b))
    }

    pub fn is_identity_strict(&self) -> bool {
        !self.tau && self.parts.iter().all(|p| p.is_identity())
    }

    /// Does the representative satisfy each factor's defining relations?
    pub fn check_family(&self, ctx: &GroupContext) -> Result<()> {
        if self.parts.len() != ctx.factors.len() {
            return Err(Error::CtxMismatch);
        }
        if self.tau && !ctx.twisted {
            return Err(Error::CtxMismatch);
        }
        for (p, f) in self.parts.iter().zip(ctx.factors.iter()) {
            if p.size() != f.n {
                return Err(Error::SizeMismatch(p.size(), f.n));
            }
            let ok = match (f.family, p) {
                (Family::U, MatPart::C(m)) => m.is_unitary(),
                (Family::SU, MatPart::C(m)) => {
                    m.is_unitary() && m.det().eq_value(&Cyclotomic::one())
                }
                (Family::O, MatPart::C(m)) => m.is_real() && m.is_unitary(),
                (Family::SO, MatPart::C(m)) => {
                    m.is_real() && m.is_unitary() && m.det().eq_value(&Cyclotomic::one())
                }
                (Family::Sp, MatPart::H(m)) => m.is_unitary(),
                _ => false,
            };
            if !ok {
                return Err(Error::NotUnitary);
            }
        }
        Ok(())
    }

    pub fn conductor_lcm(&self) -> u64 {
        self.parts
            .iter()
            .fold(1u64, |acc, p| acc.lcm(&p.conductor_lcm()))
    }

    pub fn at_conductor(&self, l: u64) -> ProjElement {
        ProjElement {
            parts: self.parts.iter().map(|p| p.at_conductor(l)).collect(),
            tau: self.tau,
            twist: self.twist.clone(),
        }
    }

    fn flat_key(&self) -> Vec<BigRational> {
        self.parts.iter().flat_map(|p| p.flat_key()).collect()
    }

    /// Canonical coset representative at conductor l: the minimum key over
    /// the declared center (or first-nonzero-entry normalization for the
    /// continuous center).
    pub fn canonicalize(&self, ctx: &GroupContext, l: u64) -> ProjElement {
        let e = self.at_conductor(l);
        match &ctx.center {
            CenterSpec::Trivial => e,
            CenterSpec::ProjectiveU1 => {
                let MatPart::C(m) = &e.parts[0] else {
                    return e;
                };
                let n = m.size();
                let mut lam = None;
                'outer: for i in 0..n {
                    for j in 0..n {
                        if !m[(i, j)].is_zero() {
                            // Entries sit at conductor l, a field, so the
                            // inverse stays at conductor l and keys remain
                            // comparable across elements.
                            lam = Some(m[(i, j)].inv().expect("nonzero"));
                            break 'outer;
                        }
                    }
                }
                match lam {
                    Some(s) => ProjElement {
                        parts: vec![MatPart::C(m.scale(&s).at_conductor(l))],
                        tau: e.tau,
                        twist: e.twist.clone(),
                    },
                    None => e,
                }
            }
            CenterSpec::Finite(tuples) => {
                let mut best: Option<(Vec<BigRational>, ProjElement)> = None;
                for t in tuples {
                    let cand = e.scale_by_tuple(t).at_conductor(l);
                    let key = cand.flat_key();
                    match &best {
                        Some((bk, _)) if *bk <= key => {}
                        _ => best = Some((key, cand)),
                    }
                }
                best.expect("center nonempty").1
            }
        }
    }

    /// Equality up to the declared center.
    pub fn proj_eq(&self, other: &ProjElement, ctx: &GroupContext) -> Result<bool> {
        if self.parts.len() != other.parts.len() || self.parts.len() != ctx.factors.len() {
            return Err(Error::CtxMismatch);
        }
        if self.tau != other.tau {
            return Ok(false);
        }
        match &ctx.center {
            CenterSpec::Trivial => Ok(self.eq_value(other)),
            CenterSpec::ProjectiveU1 => Ok(self.parts[0].scalar_ratio(&other.parts[0]).is_some()),
            CenterSpec::Finite(tuples) => Ok(tuples
                .iter()
                .any(|t| self.eq_value(&other.scale_by_tuple(t)))),
        }
    }

    /// Least k >= 1 with self^k projectively trivial, up to `cap`.
    pub fn proj_order(&self, ctx: &GroupContext, cap: u64) -> Option<u64> {
        let id = ProjElement::identity(ctx);
        let mut acc = self.clone();
        for k in 1..=cap {
            if acc.proj_eq(&id, ctx).ok()? {
                return Some(k);
            }
            acc = acc.mul(self).ok()?;
        }
        None
    }
}

/// A finitely generated subgroup together with identity-component data.
#[derive(Clone, Debug)]
pub struct FiniteSubgroup {
    pub ctx: GroupContext,
    pub generators: Vec<ProjElement>,
    /// Rational coweight directions spanning the identity component inside
    /// the standard maximal torus (concatenated factor coordinates).
    pub torus: Vec<Vec<BigRational>>,
    pub closure: Option<ClosureData>,
}

#[derive(Clone, Debug)]
pub struct ClosureData {
    /// Canonical coset representatives; index 0 is the identity.
    pub elements: Vec<ProjElement>,
    /// Generator-word exponents reaching each element (meaningful for
    /// projectively abelian subgroups).
    pub exponents: Vec<Vec<u32>>,
    pub abelian: bool,
    pub orders: Vec<u64>,
    pub conductor: u64,
}

impl FiniteSubgroup {
    pub fn new(ctx: GroupContext, generators: Vec<ProjElement>) -> Self {
        FiniteSubgroup {
            ctx,
            generators,
            torus: vec![],
            closure: None,
        }
    }

    pub fn with_torus(mut self, dirs: Vec<Vec<BigRational>>) -> Self {
        self.torus = dirs;
        self
    }

    /// Dimension of the declared identity component (modulo the continuous
    /// center when there is one).
    pub fn torus_dim(&self) -> usize {
        if self.torus.is_empty() {
            return 0;
        }
        let mut rows = self.torus.clone();
        match self.ctx.u1_scalar_direction() {
            Some(dir) => {
                rows.push(dir);
                linalg::rank(rows) - 1
            }
            None => linalg::rank(rows),
        }
    }

    /// Breadth-first closure under right multiplication by generators.
    pub fn closure_enumerate(&mut self, cap: usize) -> Result<&ClosureData> {
        if self.closure.is_some() {
            return Ok(self.closure.as_ref().unwrap());
        }
        for g in &self.generators {
            g.check_family(&self.ctx)?;
        }
        let mut l = self.ctx.center_conductor();
        for g in &self.generators {
            l = l.lcm(&g.conductor_lcm());
        }
        let id = ProjElement::identity(&self.ctx).canonicalize(&self.ctx, l);
        let mut elements = vec![id];
        let mut exponents = vec![vec![0u32; self.generators.len()]];
        let mut index: HashMap<(bool, Vec<BigRational>), usize> = HashMap::new();
        index.insert((elements[0].tau, elements[0].flat_key()), 0);
        let mut head = 0;
        while head < elements.len() {
            let base = elements[head].clone();
            let base_exp = exponents[head].clone();
            for (gi, g) in self.generators.iter().enumerate() {
                let prod = base.mul(g)?.canonicalize(&self.ctx, l);
                let key = (prod.tau, prod.flat_key());
                if !index.contains_key(&key) {
                    if elements.len() >= cap {
                        return Err(Error::ClosureTooLarge(cap));
                    }
                    index.insert(key, elements.len());
                    let mut e = base_exp.clone();
                    e[gi] += 1;
                    elements.push(prod);
                    exponents.push(e);
                }
            }
            head += 1;
        }
        // Abelianness in the quotient: all generator pairs commute projectively.
        let mut abelian = true;
        'ab: for i in 0..self.generators.len() {
            for j in i + 1..self.generators.len() {
                let ab = self.generators[i].mul(&self.generators[j])?;
                let ba = self.generators[j].mul(&self.generators[i])?;
                if !ab.proj_eq(&ba, &self.ctx)? {
                    abelian = false;
                    break 'ab;
                }
            }
        }
        let ord_cap = (elements.len() as u64).max(4) * 2;
        let mut orders = Vec::with_capacity(elements.len());
        for e in &elements {
            orders.push(e.proj_order(&self.ctx, ord_cap).ok_or_else(|| {
                Error::InvariantMismatch("element order exceeded closure bound".into())
            })?);
        }
        self.closure = Some(ClosureData {
            elements,
            exponents,
            abelian,
            orders,
            conductor: l,
        });
        Ok(self.closure.as_ref().unwrap())
    }

    pub fn order(&self) -> Option<usize> {
        self.closure.as_ref().map(|c| c.elements.len())
    }

    pub fn is_abelian(&self) -> Option<bool> {
        self.closure.as_ref().map(|c| c.abelian)
    }

    pub fn contains(&self, e: &ProjElement) -> Result<bool> {
        let c = self
            .closure
            .as_ref()
            .ok_or_else(|| Error::InvariantMismatch("closure not enumerated".into()))?;
        for x in &c.elements {
            if x.proj_eq(e, &self.ctx)? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// A rational point of the standard maximal torus with the given angle
/// coordinates (one angle per torus coordinate of the context).
pub fn torus_point(ctx: &GroupContext, angles: &[BigRational]) -> ProjElement {
    assert_eq!(angles.len(), ctx.torus_coords());
    let mut parts = Vec::new();
    let mut off = 0;
    for (f, frame) in ctx.factors.iter().zip(ctx.torus_frames.iter()) {
        match (frame, f.family) {
            (TorusFrame::Diagonal, Family::U | Family::SU) => {
                let d: Vec<Cyclotomic> = (0..f.n)
                    .map(|i| angle_to_root(&angles[off + i]))
                    .collect();
                off += f.n;
                parts.push(MatPart::C(CycMatrix::diag(d)));
            }
            (TorusFrame::Diagonal, Family::Sp) => {
                let d: Vec<Cyclotomic> = (0..f.n)
                    .map(|i| angle_to_root(&angles[off + i]))
                    .collect();
                off += f.n;
                parts.push(MatPart::H(QuatCycMatrix::from_complex(CycMatrix::diag(d))));
            }
            (TorusFrame::Planes, _) => {
                let planes = f.n / 2;
                let mut m = CycMatrix::identity(f.n);
                for p in 0..planes {
                    let blk = crate::matrix::named::so2_block(f.n, 2 * p, &angles[off + p]);
                    m = m.mul(&blk).unwrap();
                }
                off += planes;
                match f.family {
                    Family::Sp => parts.push(MatPart::H(QuatCycMatrix::from_complex(m))),
                    _ => parts.push(MatPart::C(m)),
                }
            }
            (TorusFrame::Diagonal, Family::O | Family::SO) => {
                panic!("orthogonal factors use the Planes frame");
            }
        }
    }
    ProjElement {
        parts,
        tau: false,
        twist: None,
    }
}

fn angle_to_root(q: &BigRational) -> Cyclotomic {
    let denom: u64 = q.denom().try_into().expect("angle denominator fits u64");
    let numer = ((q.numer() % q.denom() + q.denom()) % q.denom())
        .try_into()
        .unwrap_or(0i64);
    Cyclotomic::root_of_unity(denom, numer)
}

/// Extract torus angle coordinates when the representative lies in the
/// standard maximal torus exactly; None otherwise. `bound` caps the root of
/// unity order probe.
pub fn torus_angles(ctx: &GroupContext, e: &ProjElement, bound: u64) -> Option<Vec<BigRational>> {
    if e.tau {
        return None;
    }
    let mut angles = Vec::with_capacity(ctx.torus_coords());
    for ((p, f), frame) in e
        .parts
        .iter()
        .zip(ctx.factors.iter())
        .zip(ctx.torus_frames.iter())
    {
        let cm: CycMatrix = match p {
            MatPart::C(m) => m.clone(),
            MatPart::H(q) => {
                if !q.b.eq_value(&CycMatrix::zero(f.n)) {
                    return None;
                }
                q.a.clone()
            }
        };
        match frame {
            TorusFrame::Diagonal => {
                diag_angles(&cm, bound, &mut angles)?;
            }
            TorusFrame::Planes => {
                let m = &cm;
                let planes = f.n / 2;
                for pidx in 0..planes {
                    let i = 2 * pidx;
                    let c = m.entry(i, i).clone();
                    let s = m.entry(i, i + 1).clone();
                    if !m.entry(i + 1, i).eq_value(&s.neg())
                        || !m.entry(i + 1, i + 1).eq_value(&c)
                    {
                        return None;
                    }
                    // Off-block entries must vanish.
                    for j in 0..f.n {
                        if j != i && j != i + 1 {
                            if !m.entry(i, j).is_zero()
                                || !m.entry(i + 1, j).is_zero()
                                || !m.entry(j, i).is_zero()
                                || !m.entry(j, i + 1).is_zero()
                            {
                                return None;
                            }
                        }
                    }
                    let z = c.add(&Cyclotomic::i().mul(&s));
                    let (d, a) = z.as_root_of_unity(bound)?;
                    angles.push(BigRational::new(a.into(), d.into()));
                }
                if f.n % 2 == 1 && !m.entry(f.n - 1, f.n - 1).eq_value(&Cyclotomic::one()) {
                    return None;
                }
            }
        }
    }
    Some(angles)
}

fn diag_angles(m: &CycMatrix, bound: u64, out: &mut Vec<BigRational>) -> Option<()> {
    let n = m.size();
    for i in 0..n {
        for j in 0..n {
            if i != j && !m.entry(i, j).is_zero() {
                return None;
            }
        }
    }
    for i in 0..n {
        let (d, a) = m.entry(i, i).as_root_of_unity(bound)?;
        out.push(BigRational::new(a.into(), d.into()));
    }
    Some(())
}

/// Is the element a rational point of the subtorus spanned by `dirs`
/// (projectively, i.e. up to the declared center)?
pub fn in_torus_span(
    ctx: &GroupContext,
    dirs: &[Vec<BigRational>],
    e: &ProjElement,
    bound: u64,
) -> bool {
    let mut span: Vec<Vec<BigRational>> = dirs.to_vec();
    if let Some(dir) = ctx.u1_scalar_direction() {
        span.push(dir);
    }
    for t in ctx.center_tuples() {
        let cand = e.scale_by_tuple(&t);
        if let Some(angles) = torus_angles(ctx, &cand, bound) {
            if linalg::in_span_plus_integer_lattice(&span, &angles) {
                return true;
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::named;
    use num_traits::Zero;

    fn pu3_h3() -> FiniteSubgroup {
        let a = CycMatrix::diag(vec![
            Cyclotomic::one(),
            Cyclotomic::omega(),
            Cyclotomic::omega().pow(2).unwrap(),
        ]);
        let b = CycMatrix::cycle(3);
        FiniteSubgroup::new(
            GroupContext::pu(3),
            vec![ProjElement::from_complex(a), ProjElement::from_complex(b)],
        )
    }

    #[test]
    fn proj_eq_in_pu3() {
        let ctx = GroupContext::pu(3);
        let id = ProjElement::from_complex(CycMatrix::identity(3));
        let w = ProjElement::from_complex(CycMatrix::scalar(3, &Cyclotomic::omega()));
        assert!(id.proj_eq(&w, &ctx).unwrap());
        let a = ProjElement::from_complex(CycMatrix::diag(vec![
            Cyclotomic::one(),
            Cyclotomic::omega(),
            Cyclotomic::omega().pow(2).unwrap(),
        ]));
        assert!(!a.proj_eq(&id, &ctx).unwrap());
    }

    #[test]
    fn proj_eq_in_o2() {
        let ctx = GroupContext::o_neg(2);
        let x = ProjElement::from_complex(named::i_pq(1, 1));
        let y = ProjElement::from_complex(named::i_pq(1, 1).neg());
        assert!(x.proj_eq(&y, &ctx).unwrap());
    }

    #[test]
    fn h3_closure_in_pu3_has_nine_elements() {
        let mut f = pu3_h3();
        let c = f.closure_enumerate(1000).unwrap();
        assert_eq!(c.elements.len(), 9);
        assert!(c.abelian);
    }

    #[test]
    fn heisenberg_in_su3_has_27_elements_nonabelian() {
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
        let c = f.closure_enumerate(1000).unwrap();
        assert_eq!(c.elements.len(), 27);
        assert!(!c.abelian);
    }

    #[test]
    fn h2_closure_in_pu2() {
        let mut f = FiniteSubgroup::new(
            GroupContext::pu(2),
            vec![
                ProjElement::from_complex(named::i_pq(1, 1)),
                ProjElement::from_complex(named::jp_n(1)),
            ],
        );
        let c = f.closure_enumerate(100).unwrap();
        assert_eq!(c.elements.len(), 4);
        assert!(c.abelian);
    }

    #[test]
    fn closure_cap_is_enforced() {
        let a = CycMatrix::diag(vec![Cyclotomic::one(), Cyclotomic::zeta(16)]);
        let mut f = FiniteSubgroup::new(
            GroupContext::u_plain(2),
            vec![ProjElement::from_complex(a)],
        );
        assert!(matches!(
            f.closure_enumerate(8),
            Err(Error::ClosureTooLarge(8))
        ));
    }

    #[test]
    fn sp1_quaternion_group_mod_center() {
        let mut f = FiniteSubgroup::new(
            GroupContext::sp_neg(1),
            vec![
                ProjElement::from_quat(QuatCycMatrix::i_scalar(1)),
                ProjElement::from_quat(QuatCycMatrix::j_scalar(1)),
            ],
        );
        let c = f.closure_enumerate(100).unwrap();
        // Q8 / <-1> = Klein four group.
        assert_eq!(c.elements.len(), 4);
        assert!(c.abelian);
    }

    #[test]
    fn torus_membership() {
        let ctx = GroupContext::pu(4);
        let dirs = vec![vec![
            BigRational::one(),
            BigRational::one(),
            BigRational::zero(),
            BigRational::zero(),
        ]];
        let theta = BigRational::new(1.into(), 3.into());
        let pt = torus_point(
            &ctx,
            &[theta.clone(), theta, BigRational::zero(), BigRational::zero()],
        );
        assert!(in_torus_span(&ctx, &dirs, &pt, 100));
        let off = torus_point(
            &ctx,
            &[
                BigRational::new(1.into(), 3.into()),
                BigRational::zero(),
                BigRational::zero(),
                BigRational::zero(),
            ],
        );
        assert!(!in_torus_span(&ctx, &dirs, &off, 100));
    }

    #[test]
    fn closure_is_a_group() {
        // Inverses of every element are present, and a,b in F implies ab in F.
        let mut f = pu3_h3();
        let c = f.closure_enumerate(1000).unwrap().clone();
        for (i, e) in c.elements.iter().enumerate() {
            let inv = e.inverse();
            assert!(f.contains(&inv).unwrap(), "missing inverse of element {i}");
        }
        for a in c.elements.iter().take(4) {
            for b in c.elements.iter().take(4) {
                assert!(f.contains(&a.mul(b).unwrap()).unwrap());
            }
        }
    }

    #[test]
    fn proj_eq_is_an_equivalence_relation() {
        let mut f = pu3_h3();
        let c = f.closure_enumerate(1000).unwrap().clone();
        let ctx = &f.ctx;
        let w = Cyclotomic::omega();
        for x in c.elements.iter().take(5) {
            assert!(x.proj_eq(x, ctx).unwrap());
            let y = x.scale_by_tuple(&[w.clone()]);
            assert!(x.proj_eq(&y, ctx).unwrap());
            assert!(y.proj_eq(x, ctx).unwrap());
            let z = y.scale_by_tuple(&[w.pow(2).unwrap()]);
            assert!(y.proj_eq(&z, ctx).unwrap() && x.proj_eq(&z, ctx).unwrap());
        }
    }

    #[test]
    fn twisted_elements_multiply_with_conjugation() {
        let ctx = GroupContext::twisted_pu(2);
        let tau = ProjElement::identity(&ctx).with_tau();
        let zi = ProjElement::from_complex(CycMatrix::scalar(2, &Cyclotomic::i()));
        // tau (iI) tau = -iI, so [tau, iI] = tau iI tau (iI)^-1 = (-iI)(iI)^-1 = -I.
        let c = tau.commutator(&zi).unwrap();
        let minus_i = ProjElement::from_complex(CycMatrix::identity(2).neg());
        assert!(c.eq_value(&minus_i));
        assert!(c.proj_eq(&ProjElement::identity(&ctx), &ctx).unwrap());
    }
}
