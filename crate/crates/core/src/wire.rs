//! Serializable descriptions of algebras, algebra-valued forms, connections
//! and group elements. Rationals travel as `"num/den"` strings and are
//! normalized on load.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraValuedForm, HigherAlgebra, LieAlgebra, PairingData};
use crate::error::{Error, Result};
use crate::exterior::{OrdinaryForm, WireComponent, WireForm};
use crate::gauge::{Fields, ThreeConnection, TwoConnection};
use crate::group::{GroupElement, PolyMatrix};
use crate::linalg::{Bilinear, Matrix};
use crate::poly::{Polynomial, WireTerm};
use crate::rational::Q;

/// Sparse bilinear map entries `(a, b, c, value)`: `e_a ⋆ f_b = Σ value f_c`.
pub type WireTensor = Vec<(usize, usize, usize, Q)>;

fn tensor_to_wire(t: &Bilinear) -> WireTensor {
    t.nonzero().to_vec()
}

fn tensor_from_wire(what: &str, left: usize, right: usize, out: usize, entries: &WireTensor) -> Result<Bilinear> {
    if let Some((a, b, c, _)) = entries.iter().find(|(a, b, c, _)| *a >= left || *b >= right || *c >= out) {
        return Err(Error::Invalid(format!(
            "{what}: entry ({a}, {b}, {c}) out of range for shape {left}×{right}→{out}"
        )));
    }
    Ok(Bilinear::from_entries(left, right, out, entries.iter().cloned()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WireLie {
    pub name: String,
    pub labels: Vec<String>,
    /// Structure constants `[e_a, e_b] = Σ c e_c`. Read off the realization
    /// when omitted.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub structure: Option<WireTensor>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub realization: Option<Vec<Matrix>>,
}

impl WireLie {
    pub fn from_lie(g: &LieAlgebra) -> Self {
        WireLie {
            name: g.name().to_string(),
            labels: g.labels().to_vec(),
            structure: Some(tensor_to_wire(g.structure())),
            realization: g.realization().map(<[Matrix]>::to_vec),
        }
    }

    pub fn to_lie(&self) -> Result<LieAlgebra> {
        let m = self.labels.len();
        let labels: Vec<&str> = self.labels.iter().map(String::as_str).collect();
        match (&self.structure, &self.realization) {
            (Some(st), real) => {
                let t = tensor_from_wire(&self.name, m, m, m, st)?;
                let g = LieAlgebra::new(&self.name, self.labels.clone(), t)?;
                Ok(match real {
                    Some(r) => g.with_realization(r.clone()),
                    None => g,
                })
            }
            (None, Some(r)) => LieAlgebra::from_matrices(&self.name, &labels, r.clone()),
            (None, None) => Err(Error::MissingData(format!(
                "{}: needs structure constants or a realization",
                self.name
            ))),
        }
    }
}

/// An explicit Lie algebra, crossed module or 2-crossed module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WireAlgebra {
    pub name: String,
    pub g: WireLie,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<WireLie>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub l: Option<WireLie>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Matrix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<Matrix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub act_h: Option<WireTensor>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub act_l: Option<WireTensor>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub peiffer: Option<WireTensor>,
    #[serde(default)]
    pub pairings: PairingData,
    #[serde(default)]
    pub fine: bool,
    #[serde(default)]
    pub abelian_h: bool,
}

impl WireAlgebra {
    pub fn from_algebra(d: &HigherAlgebra) -> Self {
        WireAlgebra {
            name: d.name.clone(),
            g: WireLie::from_lie(&d.g),
            h: d.h.as_deref().map(WireLie::from_lie),
            l: d.l.as_deref().map(WireLie::from_lie),
            alpha: d.alpha.clone(),
            beta: d.beta.clone(),
            act_h: d.act_h.as_ref().map(tensor_to_wire),
            act_l: d.act_l.as_ref().map(tensor_to_wire),
            peiffer: d.peiffer.as_ref().map(tensor_to_wire),
            pairings: d.pairings.clone(),
            fine: d.fine,
            abelian_h: d.abelian_h,
        }
    }

    /// 1, 2 or 3 according to which of `h`, `l` are present.
    pub fn level(&self) -> u8 {
        match (&self.h, &self.l) {
            (_, Some(_)) => 3,
            (Some(_), None) => 2,
            (None, None) => 1,
        }
    }

    pub fn to_algebra(&self) -> Result<HigherAlgebra> {
        let need = |x: Option<&Matrix>, what: &str| {
            x.cloned()
                .ok_or_else(|| Error::MissingData(format!("{}: {what}", self.name)))
        };
        let need_t = |x: Option<&WireTensor>, what: &str| -> Result<WireTensor> {
            x.cloned()
                .ok_or_else(|| Error::MissingData(format!("{}: {what}", self.name)))
        };
        let g = self.g.to_lie()?;
        let dg = g.dim();
        let d = match (&self.h, &self.l) {
            (None, None) => HigherAlgebra::lie(&self.name, g),
            (Some(h), None) => {
                let h = h.to_lie()?;
                let act = tensor_from_wire("act_h", dg, h.dim(), h.dim(), &need_t(self.act_h.as_ref(), "act_h")?)?;
                HigherAlgebra::crossed(&self.name, g, h, need(self.alpha.as_ref(), "alpha")?, act)?
            }
            (Some(h), Some(l)) => {
                let (h, l) = (h.to_lie()?, l.to_lie()?);
                let (dh, dl) = (h.dim(), l.dim());
                let act_h = tensor_from_wire("act_h", dg, dh, dh, &need_t(self.act_h.as_ref(), "act_h")?)?;
                let act_l = tensor_from_wire("act_l", dg, dl, dl, &need_t(self.act_l.as_ref(), "act_l")?)?;
                let peiffer = tensor_from_wire("peiffer", dh, dh, dl, &need_t(self.peiffer.as_ref(), "peiffer")?)?;
                HigherAlgebra::two_crossed(
                    &self.name,
                    g,
                    h,
                    l,
                    need(self.alpha.as_ref(), "alpha")?,
                    need(self.beta.as_ref(), "beta")?,
                    act_h,
                    act_l,
                    peiffer,
                )?
            }
            (None, Some(_)) => return Err(Error::MissingData(format!("{}: l given without h", self.name))),
        };
        Ok(d.with_pairings(self.pairings.clone()).with_flags(self.fine, self.abelian_h))
    }
}

/// An algebra-valued form as one ordinary form per named basis element.
/// Indices in components are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WireAlgebraForm {
    pub degree: i32,
    #[serde(default)]
    pub components: BTreeMap<String, Vec<WireComponent>>,
}

impl WireAlgebraForm {
    pub fn from_form(x: &AlgebraValuedForm) -> Self {
        let components = x
            .components()
            .iter()
            .zip(x.algebra().labels())
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, label)| (label.clone(), c.to_wire().components))
            .collect();
        WireAlgebraForm {
            degree: x.degree(),
            components,
        }
    }

    pub fn to_form(&self, alg: &Arc<LieAlgebra>, dim: usize) -> Result<AlgebraValuedForm> {
        for label in self.components.keys() {
            if !alg.labels().contains(label) {
                return Err(Error::Invalid(format!("{}: unknown basis label {label:?}", alg.name())));
            }
        }
        let comps = alg
            .labels()
            .iter()
            .map(|label| {
                OrdinaryForm::from_wire(&WireForm {
                    dim,
                    degree: self.degree,
                    components: self.components.get(label).cloned().unwrap_or_default(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        AlgebraValuedForm::from_components(alg.clone(), comps)
    }
}

fn expect_degree(slot: &str, w: &WireAlgebraForm, degree: i32) -> Result<()> {
    if w.degree != degree {
        return Err(Error::Invalid(format!(
            "connection slot {slot} must have degree {degree}, found {}",
            w.degree
        )));
    }
    Ok(())
}

/// Connection slots `A`, `B`, `C` valued in 𝔤, 𝔥, 𝔩.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WireConnection {
    #[serde(rename = "A")]
    pub a: WireAlgebraForm,
    #[serde(rename = "B", default, skip_serializing_if = "Option::is_none")]
    pub b: Option<WireAlgebraForm>,
    #[serde(rename = "C", default, skip_serializing_if = "Option::is_none")]
    pub c: Option<WireAlgebraForm>,
}

impl WireConnection {
    pub fn from_fields(f: &Fields) -> Self {
        let w = WireAlgebraForm::from_form;
        match f {
            Fields::One(a) => WireConnection { a: w(a), b: None, c: None },
            Fields::Two(c) => WireConnection {
                a: w(&c.a),
                b: Some(w(&c.b)),
                c: None,
            },
            Fields::Three(c) => WireConnection {
                a: w(&c.a),
                b: Some(w(&c.b)),
                c: Some(w(&c.c)),
            },
        }
    }

    /// Reads the slots the algebra's level calls for; missing `B`/`C` are zero.
    pub fn to_fields(&self, alg: &HigherAlgebra, dim: usize) -> Result<Fields> {
        let level = alg.level();
        if level < 2 && self.b.is_some() || level < 3 && self.c.is_some() {
            return Err(Error::Invalid(format!(
                "{} has no algebra for the given connection slots",
                alg.name
            )));
        }
        let slot = |w: &Option<WireAlgebraForm>, name: &str, degree: i32, v: &Arc<LieAlgebra>| match w {
            Some(w) => {
                let x = w.to_form(v, dim)?;
                expect_degree(name, w, degree)?;
                Ok(x)
            }
            None => Ok(AlgebraValuedForm::zero(v.clone(), dim, degree)),
        };
        let a = self.a.to_form(&alg.g, dim)?;
        expect_degree("A", &self.a, 1)?;
        Ok(match level {
            1 => Fields::One(a),
            2 => Fields::Two(TwoConnection::new(alg, a, slot(&self.b, "B", 2, alg.h()?)?)?),
            _ => Fields::Three(ThreeConnection::new(
                alg,
                a,
                slot(&self.b, "B", 2, alg.h()?)?,
                slot(&self.c, "C", 3, alg.l()?)?,
            )?),
        })
    }
}

/// `𝒢 = (1 + φ₁ξ¹ [+ φ₂ξ² + ψξ¹ξ²]) g` with `g` given by its matrix entries
/// in the realization of 𝔤.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WireGroupElement {
    pub size: usize,
    /// Row-major polynomial entries.
    pub entries: Vec<Vec<Vec<WireTerm>>>,
    pub phi: Vec<WireAlgebraForm>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub psi: Option<WireAlgebraForm>,
}

impl WireGroupElement {
    pub fn from_element(e: &GroupElement) -> Self {
        let n = e.g.size();
        WireGroupElement {
            size: n,
            entries: (0..n)
                .map(|i| (0..n).map(|j| e.g.get(i, j).to_wire()).collect())
                .collect(),
            phi: e.phi.iter().map(WireAlgebraForm::from_form).collect(),
            psi: e.psi.as_ref().map(WireAlgebraForm::from_form),
        }
    }

    pub fn to_element(&self, alg: &HigherAlgebra, dim: usize) -> Result<GroupElement> {
        if self.entries.len() != self.size || self.entries.iter().any(|r| r.len() != self.size) {
            return Err(Error::Shape(format!("group function is not {0}×{0}", self.size)));
        }
        let entries = self
            .entries
            .iter()
            .flatten()
            .map(|p| Polynomial::from_wire(dim, p))
            .collect::<Result<Vec<_>>>()?;
        let g = PolyMatrix::from_entries(self.size, dim, entries)?;
        let h = alg.h()?;
        let phi = self
            .phi
            .iter()
            .map(|w| w.to_form(h, dim))
            .collect::<Result<Vec<_>>>()?;
        let psi = match &self.psi {
            Some(w) => Some(w.to_form(alg.l()?, dim)?),
            None => None,
        };
        GroupElement::new(g, phi, psi)
    }
}
