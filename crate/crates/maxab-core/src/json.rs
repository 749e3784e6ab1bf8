//! JSON encodings for the shared object kinds (schema "maxab/1"): matrices
//! and subgroups round-trip through plain serde structs with rationals as
//! "p/q" strings, so output is deterministic and float-free.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::cyclotomic::{rational_from_str, rational_to_string, Cyclotomic};
use crate::error::{Error, Result};
use crate::group::{CenterSpec, Factor, FiniteSubgroup, GroupContext, ProjElement, TorusFrame};
use crate::matrix::{CycMatrix, MatPart, QuatCycMatrix};

pub const SCHEMA: &str = "maxab/1";

#[derive(Serialize, Deserialize)]
pub struct MatrixDto {
    pub rows: Vec<Vec<Cyclotomic>>,
}

impl From<&CycMatrix> for MatrixDto {
    fn from(m: &CycMatrix) -> Self {
        let n = m.size();
        MatrixDto {
            rows: (0..n)
                .map(|i| (0..n).map(|j| m.entry(i, j).clone()).collect())
                .collect(),
        }
    }
}

impl TryFrom<MatrixDto> for CycMatrix {
    type Error = Error;
    fn try_from(d: MatrixDto) -> Result<CycMatrix> {
        let n = d.rows.len();
        if d.rows.iter().any(|r| r.len() != n) {
            return Err(Error::Parse("matrix rows must be square".into()));
        }
        Ok(CycMatrix::from_rows(d.rows))
    }
}

#[derive(Serialize, Deserialize)]
pub struct QuatDto {
    pub a: MatrixDto,
    pub b: MatrixDto,
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PartDto {
    Complex(MatrixDto),
    Quaternion(QuatDto),
}

impl From<&MatPart> for PartDto {
    fn from(p: &MatPart) -> Self {
        match p {
            MatPart::C(m) => PartDto::Complex(m.into()),
            MatPart::H(q) => PartDto::Quaternion(QuatDto {
                a: (&q.a).into(),
                b: (&q.b).into(),
            }),
        }
    }
}

impl TryFrom<PartDto> for MatPart {
    type Error = Error;
    fn try_from(d: PartDto) -> Result<MatPart> {
        Ok(match d {
            PartDto::Complex(m) => MatPart::C(m.try_into()?),
            PartDto::Quaternion(q) => {
                MatPart::H(QuatCycMatrix::new(q.a.try_into()?, q.b.try_into()?))
            }
        })
    }
}

#[derive(Serialize, Deserialize)]
pub struct ElementDto {
    pub parts: Vec<PartDto>,
    #[serde(default)]
    pub tau: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub twist: Option<Vec<PartDto>>,
}

impl From<&ProjElement> for ElementDto {
    fn from(e: &ProjElement) -> Self {
        ElementDto {
            parts: e.parts.iter().map(PartDto::from).collect(),
            tau: e.tau,
            twist: e
                .twist
                .as_ref()
                .map(|t| t.iter().map(PartDto::from).collect()),
        }
    }
}

impl TryFrom<ElementDto> for ProjElement {
    type Error = Error;
    fn try_from(d: ElementDto) -> Result<ProjElement> {
        let parts: Vec<MatPart> = d
            .parts
            .into_iter()
            .map(MatPart::try_from)
            .collect::<Result<_>>()?;
        let mut e = ProjElement::from_parts(parts);
        if let Some(t) = d.twist {
            let tw: Vec<MatPart> = t.into_iter().map(MatPart::try_from).collect::<Result<_>>()?;
            e = e.with_tau_twist(tw);
        } else if d.tau {
            e = e.with_tau();
        }
        Ok(e)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CenterDto {
    Trivial,
    U1,
    Finite { generators: Vec<Vec<Cyclotomic>> },
}

#[derive(Serialize, Deserialize)]
pub struct ContextDto {
    pub factors: Vec<Factor>,
    pub center: CenterDto,
    #[serde(default)]
    pub twisted: bool,
    #[serde(default)]
    pub label: String,
    pub torus_frames: Vec<TorusFrame>,
}

impl From<&GroupContext> for ContextDto {
    fn from(c: &GroupContext) -> Self {
        let center = match &c.center {
            CenterSpec::Trivial => CenterDto::Trivial,
            CenterSpec::ProjectiveU1 => CenterDto::U1,
            // The closed list is small; ship it whole so loading needs no
            // re-closure.
            CenterSpec::Finite(ts) => CenterDto::Finite {
                generators: ts.clone(),
            },
        };
        ContextDto {
            factors: c.factors.clone(),
            center,
            twisted: c.twisted,
            label: c.label.clone(),
            torus_frames: c.torus_frames.clone(),
        }
    }
}

impl TryFrom<ContextDto> for GroupContext {
    type Error = Error;
    fn try_from(d: ContextDto) -> Result<GroupContext> {
        let mut ctx = match d.center {
            CenterDto::Finite { generators } => {
                GroupContext::product(d.factors, generators, d.label)
            }
            CenterDto::Trivial => GroupContext::product(d.factors, vec![], d.label),
            CenterDto::U1 => {
                if d.factors.len() != 1 {
                    return Err(Error::Parse("u1 center needs a single factor".into()));
                }
                let n = d.factors[0].n;
                let mut ctx = GroupContext::pu(n);
                ctx.label = d.label;
                ctx
            }
        };
        ctx.twisted = d.twisted;
        if d.torus_frames.len() == ctx.torus_frames.len() {
            ctx.torus_frames = d.torus_frames;
        } else if !d.torus_frames.is_empty() {
            return Err(Error::Parse("torus_frames length mismatch".into()));
        }
        Ok(ctx)
    }
}

#[derive(Serialize, Deserialize)]
pub struct SubgroupDto {
    pub schema: String,
    pub group: ContextDto,
    pub generators: Vec<ElementDto>,
    #[serde(default)]
    pub torus: Vec<Vec<String>>,
}

impl From<&FiniteSubgroup> for SubgroupDto {
    fn from(f: &FiniteSubgroup) -> Self {
        SubgroupDto {
            schema: SCHEMA.into(),
            group: (&f.ctx).into(),
            generators: f.generators.iter().map(ElementDto::from).collect(),
            torus: f
                .torus
                .iter()
                .map(|v| v.iter().map(rational_to_string).collect())
                .collect(),
        }
    }
}

impl TryFrom<SubgroupDto> for FiniteSubgroup {
    type Error = Error;
    fn try_from(d: SubgroupDto) -> Result<FiniteSubgroup> {
        if d.schema != SCHEMA {
            return Err(Error::Parse(format!(
                "unsupported schema {:?}, expected {SCHEMA:?}",
                d.schema
            )));
        }
        let ctx: GroupContext = d.group.try_into()?;
        let generators: Vec<ProjElement> = d
            .generators
            .into_iter()
            .map(ProjElement::try_from)
            .collect::<Result<_>>()?;
        let torus: Vec<Vec<BigRational>> = d
            .torus
            .iter()
            .map(|v| v.iter().map(|s| rational_from_str(s)).collect())
            .collect::<Result<_>>()?;
        for g in &generators {
            g.check_family(&ctx)?;
        }
        for dir in &torus {
            if dir.len() != ctx.torus_coords() {
                return Err(Error::Parse(format!(
                    "torus direction has {} coordinates, context wants {}",
                    dir.len(),
                    ctx.torus_coords()
                )));
            }
        }
        Ok(FiniteSubgroup::new(ctx, generators).with_torus(torus))
    }
}

pub fn subgroup_to_json(f: &FiniteSubgroup) -> serde_json::Value {
    serde_json::to_value(SubgroupDto::from(f)).expect("serializable")
}

pub fn subgroup_from_json(v: serde_json::Value) -> Result<FiniteSubgroup> {
    let dto: SubgroupDto =
        serde_json::from_value(v).map_err(|e| Error::Parse(format!("subgroup json: {e}")))?;
    dto.try_into()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn subgroup_round_trip() {
        for f in [
            catalog::h_product(&[2, 2], 8).unwrap(),
            catalog::e7_f1(),
            catalog::h2p_symplectic(2).unwrap(),
            catalog::e6_f6(),
        ] {
            let v = subgroup_to_json(&f);
            let mut g = subgroup_from_json(v.clone()).unwrap();
            let mut f = f.clone();
            let cf = f.closure_enumerate(1 << 14).unwrap();
            let cg = g.closure_enumerate(1 << 14).unwrap();
            assert_eq!(cf.elements.len(), cg.elements.len());
            assert_eq!(cf.abelian, cg.abelian);
            // Deterministic bytes.
            let v2 = subgroup_to_json(&g);
            assert_eq!(
                serde_json::to_string(&v).unwrap(),
                serde_json::to_string(&v2).unwrap()
            );
        }
    }
}
