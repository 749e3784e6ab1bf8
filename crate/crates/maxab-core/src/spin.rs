//! Subgroup machinery inside Pin/Spin groups: closure of Clifford generator
//! sets, the abelian + fixed-dimension check behind condition (*), and the
//! isotropic-subspace search that decides existence of finite abelian
//! subgroups of Spin(n) with zero fixed subalgebra.

use std::collections::HashMap;

use num_integer::Integer;
use num_rational::BigRational;

use crate::clifford::{pin_project, CliffordElement, PinElement};
use crate::error::{Error, Result};
use crate::fixedspace::{adjoint_fixed_dim, LieAlgebraBasis};
use crate::group::GroupContext;
use crate::ProjElement;

/// Central subgroup of the ambient group by which Clifford elements are
/// identified: trivial for Spin(n) itself, {1, c} for the half-spin group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpinCenter {
    Trivial,
    HalfSpin,
}

impl SpinCenter {
    fn elements(&self, n: usize) -> Vec<CliffordElement> {
        match self {
            SpinCenter::Trivial => vec![CliffordElement::one(n)],
            SpinCenter::HalfSpin => {
                vec![CliffordElement::one(n), CliffordElement::volume(n)]
            }
        }
    }
}

/// A subgroup of Pin(n) (or of Pin(n)/<c>) given by generators.
#[derive(Clone, Debug)]
pub struct SpinSubgroup {
    pub n: usize,
    pub generators: Vec<CliffordElement>,
    pub center: SpinCenter,
}

#[derive(Clone, Debug)]
pub struct SpinClosure {
    pub elements: Vec<CliffordElement>,
    pub abelian: bool,
}

impl SpinSubgroup {
    pub fn new(n: usize, generators: Vec<CliffordElement>) -> Self {
        SpinSubgroup {
            n,
            generators,
            center: SpinCenter::Trivial,
        }
    }

    pub fn half_spin(n: usize, generators: Vec<CliffordElement>) -> Self {
        SpinSubgroup {
            n,
            generators,
            center: SpinCenter::HalfSpin,
        }
    }

    fn working_conductor(&self) -> u64 {
        self.generators
            .iter()
            .fold(1u64, |acc, g| acc.lcm(&g.conductor_lcm()))
    }

    fn canonical_key(
        &self,
        e: &CliffordElement,
        l: u64,
        center: &[CliffordElement],
    ) -> Vec<(u64, Vec<BigRational>)> {
        center
            .iter()
            .map(|z| e.mul(z).flat_key(l))
            .min()
            .expect("center nonempty")
    }

    /// x and y equal modulo the declared center?
    pub fn proj_eq(&self, x: &CliffordElement, y: &CliffordElement) -> bool {
        self.center
            .elements(self.n)
            .iter()
            .any(|z| x.eq_value(&y.mul(z)))
    }

    /// BFS closure; all generators must be Pin units.
    pub fn closure(&self, cap: usize) -> Result<SpinClosure> {
        for g in &self.generators {
            if !g.is_pin_unit() {
                return Err(Error::NotPin);
            }
        }
        let l = self.working_conductor();
        let center = self.center.elements(self.n);
        let mut elements = vec![CliffordElement::one(self.n)];
        let mut seen: HashMap<Vec<(u64, Vec<BigRational>)>, usize> = HashMap::new();
        seen.insert(self.canonical_key(&elements[0], l, &center), 0);
        let mut head = 0;
        while head < elements.len() {
            let base = elements[head].clone();
            for g in &self.generators {
                let prod = base.mul(g);
                let key = self.canonical_key(&prod, l, &center);
                if !seen.contains_key(&key) {
                    if elements.len() >= cap {
                        return Err(Error::ClosureTooLarge(cap));
                    }
                    seen.insert(key, elements.len());
                    elements.push(prod);
                }
            }
            head += 1;
        }
        // Abelian modulo the declared center.
        let mut abelian = true;
        'outer: for i in 0..self.generators.len() {
            for j in i + 1..self.generators.len() {
                let comm = self.generators[i].commutator(&self.generators[j])?;
                if !self.proj_eq(&comm, &CliffordElement::one(self.n)) {
                    abelian = false;
                    break 'outer;
                }
            }
        }
        Ok(SpinClosure { elements, abelian })
    }
}

#[derive(Clone, Debug)]
pub struct SpinStarReport {
    pub abelian: bool,
    pub fixed_dim: usize,
    pub order: usize,
}

/// Abelianness of <gens> (modulo the declared center) plus
/// dim so(n)^{pi(gens)} computed exactly on the projected matrices.
pub fn spin_condition_star(sub: &SpinSubgroup, cap: usize) -> Result<SpinStarReport> {
    let closure = sub.closure(cap)?;
    let alg = LieAlgebraBasis::so(sub.n);
    let ctx = GroupContext::o_neg(sub.n);
    let projected: Vec<ProjElement> = sub
        .generators
        .iter()
        .map(|g| {
            let p = PinElement::new(g.clone())?;
            Ok(ProjElement::from_complex(pin_project(&p)?))
        })
        .collect::<Result<_>>()?;
    let fixed = adjoint_fixed_dim(&alg, &projected, &[], &ctx)?;
    Ok(SpinStarReport {
        abelian: closure.abelian,
        fixed_dim: fixed.dim,
        order: closure.elements.len(),
    })
}

/// A witness subgroup for the isotropic search: basis of the subspace
/// W <= K_n / <-1, c>, reported as monomial index sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsotropicWitness {
    pub rank: usize,
    /// Masks of the e_I basis monomials (bit i = generator e_{i+1}).
    pub basis_masks: Vec<u64>,
}

#[derive(Clone, Debug)]
pub struct SearchReport {
    pub n: usize,
    /// Minimal rank at which witnesses exist, when any.
    pub witness_rank: Option<usize>,
    pub witnesses: Vec<IsotropicWitness>,
    pub searched_max_rank: usize,
}

/// Default bound for the isotropic search.
pub const DEFAULT_SEARCH_BOUND: usize = 12;

/// Exhaustive search over subgroups F of K_n = <e1e2, ..., e1en> containing
/// -1 (and c when 2 | n), abelian in Spin(n), with so(n)^{pi(F)} = 0.
/// Abelian subgroups correspond exactly to isotropic subspaces of
/// K_n/<-1,c> under the commutator pairing m(e_I, e_J) = (-1)^{|I cap J|},
/// so the search enumerates isotropic subspaces in echelon form, rank by
/// rank, and reports all witnesses of the minimal rank.
pub fn isotropic_search(n: usize, bound: usize) -> Result<SearchReport> {
    if n > bound {
        return Err(Error::SearchTooLarge(bound));
    }
    if n < 2 {
        return Err(Error::Unsupported("spin search needs n >= 2".into()));
    }
    // Basis of V = K_n/<-1, c>: classes of e_1 e_{i+1}. For even n the class
    // of c kills one generator (dim n-2), for odd n dim is n-1.
    let dim = if n % 2 == 0 { n - 2 } else { n - 1 };
    let basis_masks: Vec<u64> = (0..dim).map(|i| 1 | (2u64 << i)).collect();
    let full: u64 = (1u64 << n) - 1;

    let mask_of = |coords: u32| -> u64 {
        let mut m = 0u64;
        let mut c = coords;
        while c != 0 {
            let i = c.trailing_zeros() as usize;
            c &= c - 1;
            m ^= basis_masks[i];
        }
        m
    };
    let pairing = |a: u64, b: u64| -> bool { (a & b).count_ones() % 2 == 1 };

    // fixed_dim = number of coordinate pairs (i < j) not separated by any
    // element of W (complement-invariant, so well-defined mod c).
    let fused_pairs = |rows: &[u32]| -> usize {
        let masks: Vec<u64> = rows.iter().map(|&r| mask_of(r)).collect();
        let mut fused = 0;
        for i in 0..n {
            for j in i + 1..n {
                if masks
                    .iter()
                    .all(|m| ((m >> i) & 1) == ((m >> j) & 1))
                {
                    fused += 1;
                }
            }
        }
        fused
    };

    let mut report = SearchReport {
        n,
        witness_rank: None,
        witnesses: vec![],
        searched_max_rank: 0,
    };

    // rank 0: F = <-1, c>; only passes when there are no fused pairs, i.e.
    // n = 1. Checked for completeness.
    if fused_pairs(&[]) == 0 {
        report.witness_rank = Some(0);
        report.witnesses.push(IsotropicWitness {
            rank: 0,
            basis_masks: vec![],
        });
        return Ok(report);
    }

    for r in 1..=dim {
        report.searched_max_rank = r;
        let mut witnesses: Vec<IsotropicWitness> = Vec::new();
        for_each_isotropic_subspace(dim, r, &mask_of, &pairing, &mut |rows| {
            if fused_pairs(rows) == 0 {
                witnesses.push(IsotropicWitness {
                    rank: r,
                    basis_masks: rows
                        .iter()
                        .map(|&w| {
                            let m = mask_of(w);
                            // Canonical representative of the class mod c:
                            // the smaller of the mask and its complement.
                            if n % 2 == 0 && (m ^ full) < m {
                                m ^ full
                            } else {
                                m
                            }
                        })
                        .collect(),
                });
            }
        });
        if !witnesses.is_empty() {
            report.witness_rank = Some(r);
            report.witnesses = witnesses;
            return Ok(report);
        }
    }
    Ok(report)
}

/// Visit every isotropic rank-r subspace of F2^dim exactly once, via its
/// unique reduced echelon basis: a pivot set p_1 < ... < p_r is chosen
/// first; row i then has a 1 at p_i, zeros at all other pivots, and free
/// bits only at non-pivot columns above p_i. Non-isotropic partial bases
/// are pruned.
fn for_each_isotropic_subspace(
    dim: usize,
    r: usize,
    mask_of: &impl Fn(u32) -> u64,
    pairing: &impl Fn(u64, u64) -> bool,
    emit: &mut impl FnMut(&[u32]),
) {
    let mut pivots = vec![0usize; r];
    choose_pivots(dim, r, 0, 0, &mut pivots, &mut |pivots| {
        let mut rows: Vec<u32> = Vec::with_capacity(r);
        fill_rows(dim, pivots, mask_of, pairing, &mut rows, emit);
    });
}

fn choose_pivots(
    dim: usize,
    r: usize,
    idx: usize,
    start: usize,
    pivots: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]),
) {
    if idx == r {
        f(pivots);
        return;
    }
    for p in start..=dim - (r - idx) {
        pivots[idx] = p;
        choose_pivots(dim, r, idx + 1, p + 1, pivots, f);
    }
}

fn fill_rows(
    dim: usize,
    pivots: &[usize],
    mask_of: &impl Fn(u32) -> u64,
    pairing: &impl Fn(u64, u64) -> bool,
    rows: &mut Vec<u32>,
    emit: &mut impl FnMut(&[u32]),
) {
    let i = rows.len();
    if i == pivots.len() {
        emit(rows);
        return;
    }
    let p = pivots[i];
    let free_cols: Vec<usize> = (p + 1..dim).filter(|c| !pivots.contains(c)).collect();
    let combos = 1u32 << free_cols.len();
    for fc in 0..combos {
        let mut v = 1u32 << p;
        for (bi, &c) in free_cols.iter().enumerate() {
            if (fc >> bi) & 1 == 1 {
                v |= 1 << c;
            }
        }
        let vm = mask_of(v);
        if rows.iter().all(|&w| !pairing(mask_of(w), vm)) {
            rows.push(v);
            fill_rows(dim, pivots, mask_of, pairing, rows, emit);
            rows.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::parse_element;

    fn f8_generators() -> Vec<CliffordElement> {
        ["-1", "c", "e1e2e3e4", "e1e2e5e6", "e1e3e5e7"]
            .iter()
            .map(|s| parse_element(8, s).unwrap())
            .collect()
    }

    #[test]
    fn f8_satisfies_condition_star() {
        let sub = SpinSubgroup::new(8, f8_generators());
        let r = spin_condition_star(&sub, 1 << 12).unwrap();
        assert!(r.abelian);
        assert_eq!(r.fixed_dim, 0);
        // <-1, c> has order 4 and F8/<-1,c> has rank 3.
        assert_eq!(r.order, 32);
    }

    #[test]
    fn pair_in_spin4_has_positive_fixed_dim() {
        let gens = vec![
            parse_element(4, "-1").unwrap(),
            parse_element(4, "e1e2").unwrap(),
        ];
        let sub = SpinSubgroup::new(4, gens);
        let r = spin_condition_star(&sub, 100).unwrap();
        assert!(r.abelian);
        // so(2) + so(2).
        assert_eq!(r.fixed_dim, 2);
    }

    #[test]
    fn spin_fixture_families_smallest_instances() {
        // The three infinite families at their smallest n: 16 (4m), 18
        // (18+8m), 22 (14+8m); the first two are cheap enough to check the
        // fixed dimension exactly, the third at least for abelianness.
        for n in [16usize, 18] {
            let sub = crate::catalog::spin_f(n).unwrap();
            let r = spin_condition_star(&sub, 1 << 13).unwrap();
            assert!(r.abelian, "F_{n} not abelian");
            assert_eq!(r.fixed_dim, 0, "F_{n} fixed dim");
        }
        let f22 = crate::catalog::spin_f(22).unwrap();
        let c = f22.closure(1 << 13).unwrap();
        assert!(c.abelian);
    }

    #[test]
    fn search_small_ranks() {
        // No witnesses for n in 2..=6.
        for n in 2..=6usize {
            let r = isotropic_search(n, 12).unwrap();
            assert!(r.witness_rank.is_none(), "n={n} found {:?}", r.witness_rank);
        }
    }

    #[test]
    fn search_n8_has_rank3_witnesses() {
        let r = isotropic_search(8, 12).unwrap();
        assert_eq!(r.witness_rank, Some(3));
        assert!(!r.witnesses.is_empty());
        for w in &r.witnesses {
            assert_eq!(w.rank, 3);
        }
    }

    #[test]
    fn search_bound_enforced() {
        assert!(matches!(
            isotropic_search(13, 12),
            Err(Error::SearchTooLarge(12))
        ));
    }

    #[test]
    fn subspace_enumeration_counts() {
        // With the trivial pairing the enumeration visits every subspace
        // exactly once: 2^d - 1 lines, and [4 2]_2 = 35 planes in F2^4.
        let mask_of = |c: u32| c as u64;
        let pairing = |_: u64, _: u64| false;
        let mut count = 0usize;
        for_each_isotropic_subspace(5, 1, &mask_of, &pairing, &mut |_| count += 1);
        assert_eq!(count, 31);
        count = 0;
        for_each_isotropic_subspace(4, 2, &mask_of, &pairing, &mut |_| count += 1);
        assert_eq!(count, 35);
        // Lagrangian count in a nondegenerate symplectic F2^4: 15... the
        // standard form m((a,b),(c,d)) = a.d + b.c gives (2+1)(4+1) = 15
        // maximal isotropic planes.
        let sympl = |a: u64, b: u64| -> bool {
            let (a1, a2) = (a & 0b11, (a >> 2) & 0b11);
            let (b1, b2) = (b & 0b11, (b >> 2) & 0b11);
            ((a1 & b2).count_ones() + (a2 & b1).count_ones()) % 2 == 1
        };
        count = 0;
        for_each_isotropic_subspace(4, 2, &mask_of, &sympl, &mut |_| count += 1);
        assert_eq!(count, 15);
    }
}
